//! Finite rings, their finite right modules, and decision procedures for
//! subinjectivity / subprojectivity domains.

pub mod catalog;
pub mod domains;
pub mod envelopes;
pub mod error;
pub mod hom;
pub mod iso;
pub mod lattice;
pub mod module;
pub mod paperlab;
pub mod ring;
pub mod ringprops;
pub mod zmod;

pub use catalog::{
    cache_load, cache_path, cache_store, short_exact_sequences, Catalog, ClassFlags, MemoEntry, ShortExact,
};
pub use domains::{
    is_subinjective, is_subprojective, CacheStatus, Classification, DomainKind, DomainSet, Lab, MiddleClassReport,
    Verdict, VerdictKind,
};
pub use envelopes::{
    free_cover, injective_cogenerator, injective_hull, injective_hull_seeded, is_image_of_injective, is_injective,
    is_projective, HullResult,
};
pub use error::{Error, Result};
pub use hom::{direct_sum, hom_set, DirectSum, HomSet, ModuleHom};
pub use iso::{are_isomorphic, find_isomorphism, fingerprint, Fingerprint};
pub use lattice::{composition_length, simple_modules, structural_invariants, submodules, StructuralInvariants};
pub use module::{Ambient, FiniteModule, ModuleDoc, SubmoduleHandle};
pub use paperlab::{run_all, run_suite, suite_ids, Check, SuiteReport, SuiteStatus};
pub use ring::{FiniteRing, RingDoc};
pub use ringprops::RingProfile;
