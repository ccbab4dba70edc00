//! Subinjectivity and subprojectivity: pairwise decisions, extension-reflection
//! verdicts and domain computations over a catalog.
//!
//! Argument order follows domain membership: `is_subinjective(x, y)` holds when
//! `x` lies in the subinjectivity domain of `y` (every map `x -> y` extends to
//! the injective hull of `x`), and `is_subprojective(x, y)` holds when `x` lies
//! in the subprojectivity domain of `y` (every map `y -> x` lifts through the
//! free cover of `x`).

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::{Arc, RwLock};

use dashmap::DashMap;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalog::{cache_load, cache_path, cache_store, Catalog, MemoEntry};
use crate::envelopes::{free_cover, injective_hull_seeded, spanned_log, HullResult};
use crate::error::{Error, Result};
use crate::hom::{HomSet, ModuleHom};
use crate::iso::{isomorphic_with_equal_fingerprints, Fingerprint};
use crate::lattice::submodules;
use crate::module::{FiniteModule, SubmoduleHandle};
use crate::zmod::Vector;

/// Cap on the submodule lattice of a single catalog module during sweeps.
pub const SES_LATTICE_BOUND: usize = 100_000;

// ---- pairwise decisions ----

/// A map `x -> y` that does not extend along the hull embedding of `x`.
pub fn extension_failure(hull: &HullResult, y: &FiniteModule) -> Result<Option<ModuleHom>> {
    let x = hull.embedding.source();
    let from_hull = HomSet::new(&hull.hull, y)?;
    let on_x = HomSet::new(x, y)?;
    let restricted: Vec<Vector> = from_hull
        .generators()
        .iter()
        .map(|f| hull.embedding.then(f).expect("composable").images().concat())
        .collect();
    if spanned_log(&on_x, restricted.iter().cloned()) == on_x.size_log() {
        return Ok(None);
    }
    Ok(on_x.generators().into_iter().find(|g| {
        let mut with = restricted.clone();
        with.push(g.images().concat());
        spanned_log(&on_x, with) > spanned_log(&on_x, restricted.iter().cloned())
    }))
}

/// A map `y -> x` that does not lift through `cover: F -> x`.
pub fn lifting_failure(cover: &ModuleHom, y: &FiniteModule) -> Result<Option<ModuleHom>> {
    let x = cover.target();
    let to_free = HomSet::new(y, cover.source())?;
    let to_x = HomSet::new(y, x)?;
    let composites: Vec<Vector> = to_free
        .generators()
        .iter()
        .map(|h| h.then(cover).expect("composable").images().concat())
        .collect();
    if spanned_log(&to_x, composites.iter().cloned()) == to_x.size_log() {
        return Ok(None);
    }
    Ok(to_x.generators().into_iter().find(|g| {
        let mut with = composites.clone();
        with.push(g.images().concat());
        spanned_log(&to_x, with) > spanned_log(&to_x, composites.iter().cloned())
    }))
}

/// `x` is in the subinjectivity domain of `y`: `y` is `x`-subinjective.
pub fn is_subinjective(x: &FiniteModule, y: &FiniteModule) -> Result<bool> {
    x.same_ring(y)?;
    Ok(extension_failure(&injective_hull_seeded(x, 0), y)?.is_none())
}

/// `x` is in the subprojectivity domain of `y`: `y` is `x`-subprojective.
pub fn is_subprojective(x: &FiniteModule, y: &FiniteModule) -> Result<bool> {
    x.same_ring(y)?;
    Ok(lifting_failure(&free_cover(x), y)?.is_none())
}

// ---- verdicts and reports ----

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum VerdictKind {
    CertifiedUpToBound,
    Counterexample,
}

/// A short exact sequence `0 -> A -> B -> B/A -> 0` with `B` a catalog class,
/// on which extension reflection fails, and the offending map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SesWitness {
    pub b: usize,
    pub sub: SubmoduleHandle,
    pub a_class: Option<usize>,
    pub c_class: Option<usize>,
    /// Generator images of the map that fails to extend (`M -> B`) or lift (`B -> M`).
    pub failing_map: Vec<Vector>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub kind: VerdictKind,
    pub bound: u64,
    pub max_gens: usize,
    /// One witness per catalog class `B` on which reflection fails, in catalog order.
    pub witnesses: Vec<SesWitness>,
}

impl Verdict {
    pub fn is_certified(&self) -> bool {
        self.kind == VerdictKind::CertifiedUpToBound
    }

    pub fn witness(&self) -> Option<&SesWitness> {
        self.witnesses.first()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DomainKind {
    /// `{A : A in In^-1(M)}`
    InInv,
    /// `{A : A in Pr^-1(M)}`
    PrInv,
    /// `{N : M in In^-1(N)}`
    In,
    /// `{N : M in Pr^-1(N)}`
    Pr,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DomainSet {
    pub kind: DomainKind,
    pub members: Vec<usize>,
    pub bound: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub bound: u64,
    pub injective: bool,
    pub projective: bool,
    pub indigent: bool,
    pub p_indigent: bool,
    pub tibs: bool,
    pub fg_injective: bool,
    pub c_injective: bool,
    pub fg_projective: bool,
    pub c_projective: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MiddleClassRow {
    pub class: usize,
    pub injective: bool,
    pub indigent: bool,
    pub projective: bool,
    pub p_indigent: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MiddleClassReport {
    pub bound: u64,
    pub rows: Vec<MiddleClassRow>,
    pub no_subinjective_middle_class: bool,
    pub no_subprojective_middle_class: bool,
}

/// One submodule of a catalog class with the classes of both ends.
#[derive(Debug, Clone)]
pub struct SesEntry {
    pub sub: SubmoduleHandle,
    pub a: ClassKey,
    pub c: ClassKey,
}

/// Catalog id, or an id past the catalog for modules registered on the fly.
pub type ClassKey = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Op {
    SubInj,
    SubProj,
}

impl Op {
    fn name(self) -> &'static str {
        match self {
            Op::SubInj => "subinjective",
            Op::SubProj => "subprojective",
        }
    }
}

/// A class met outside the catalog (a submodule, quotient or sum).
struct Extra {
    fingerprint: Fingerprint,
    probe: Vec<u32>,
    module: FiniteModule,
}

/// How a [`Lab`] obtained its catalog.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CacheStatus {
    Built,
    Loaded,
    /// A cache file existed but was stale; it was ignored and replaced.
    Rebuilt(String),
}

/// Memoizing engine for predicates over a catalog.
pub struct Lab {
    cat: Catalog,
    seed: u64,
    extras: RwLock<Vec<Extra>>,
    hulls: DashMap<ClassKey, Arc<HullResult>>,
    covers: DashMap<ClassKey, Arc<ModuleHom>>,
    memo: DashMap<(Op, ClassKey, ClassKey), bool>,
    ses: DashMap<usize, Arc<Vec<SesEntry>>>,
    verdicts: DashMap<(Op, ClassKey), Verdict>,
}

impl Lab {
    pub fn new(cat: Catalog) -> Self {
        Self::with_seed(cat, 0)
    }

    /// `seed` drives the complement order in hull constructions.
    pub fn with_seed(cat: Catalog, seed: u64) -> Self {
        Lab {
            cat,
            seed,
            extras: RwLock::new(Vec::new()),
            hulls: DashMap::new(),
            covers: DashMap::new(),
            memo: DashMap::new(),
            ses: DashMap::new(),
            verdicts: DashMap::new(),
        }
    }

    /// Load the catalog (and memo tables) from `cache_dir` when present and
    /// current, otherwise build it.
    pub fn open(
        ring: &Arc<crate::ring::FiniteRing>,
        max_size: u64,
        max_gens: usize,
        cache_dir: Option<&Path>,
        seed: u64,
    ) -> Result<(Self, CacheStatus)> {
        if let Some(dir) = cache_dir {
            let path = cache_path(dir, ring, max_size, max_gens);
            if path.exists() {
                match cache_load(&path, ring, max_size, max_gens) {
                    Ok((cat, memo)) => {
                        let lab = Self::with_seed(cat, seed);
                        lab.import_memo(&memo);
                        return Ok((lab, CacheStatus::Loaded));
                    }
                    Err(Error::VersionMismatch(why)) | Err(Error::MalformedSpec(why)) => {
                        let cat = Catalog::build(ring, max_size, max_gens)?;
                        return Ok((Self::with_seed(cat, seed), CacheStatus::Rebuilt(why)));
                    }
                    Err(Error::Json(e)) => {
                        let cat = Catalog::build(ring, max_size, max_gens)?;
                        return Ok((Self::with_seed(cat, seed), CacheStatus::Rebuilt(e.to_string())));
                    }
                    Err(e) => return Err(e),
                }
            }
        }
        Ok((
            Self::with_seed(Catalog::build(ring, max_size, max_gens)?, seed),
            CacheStatus::Built,
        ))
    }

    pub fn save(&self, cache_dir: &Path) -> Result<std::path::PathBuf> {
        cache_store(cache_dir, &self.cat, &self.export_memo())
    }

    pub fn catalog(&self) -> &Catalog {
        &self.cat
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn bound(&self) -> u64 {
        self.cat.max_size()
    }

    /// Memo entries whose keys are catalog ids, sorted.
    pub fn export_memo(&self) -> Vec<MemoEntry> {
        let n = self.cat.len();
        let mut out: Vec<MemoEntry> = self
            .memo
            .iter()
            .filter(|e| e.key().1 < n && e.key().2 < n)
            .map(|e| MemoEntry {
                op: e.key().0.name().to_string(),
                a: e.key().1,
                b: e.key().2,
                value: *e.value(),
            })
            .collect();
        out.sort();
        out
    }

    pub fn import_memo(&self, entries: &[MemoEntry]) {
        let n = self.cat.len();
        for e in entries {
            let op = match e.op.as_str() {
                "subinjective" => Op::SubInj,
                "subprojective" => Op::SubProj,
                _ => continue,
            };
            if e.a < n && e.b < n {
                self.memo.insert((op, e.a, e.b), e.value);
            }
        }
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    // ---- class keys ----

    pub fn module(&self, key: ClassKey) -> FiniteModule {
        if key < self.cat.len() {
            self.cat.class(key).clone()
        } else {
            self.extras.read().unwrap()[key - self.cat.len()].module.clone()
        }
    }

    pub fn catalog_id(&self, key: ClassKey) -> Option<usize> {
        (key < self.cat.len()).then_some(key)
    }

    /// The key of `m`'s isomorphism class, registering a new class if needed.
    pub fn key_of(&self, m: &FiniteModule) -> Result<ClassKey> {
        if !self.cat.is_empty() {
            m.same_ring(self.cat.class(0))?;
        }
        let fp = self.cat.fingerprint_of(m);
        let n = self.cat.len();
        let in_range = fp.structure.min_generators <= self.cat.max_gens() && m.size() <= self.cat.max_size() as u128;
        if in_range {
            if let Some(id) = self.cat.identify_with(m, &fp)? {
                return Ok(id);
            }
        }
        let probe = self.probe(m);
        let scan = |extras: &[Extra], from: usize| -> Result<Option<ClassKey>> {
            for (i, x) in extras.iter().enumerate().skip(from) {
                if x.fingerprint == fp && x.probe == probe && isomorphic_with_equal_fingerprints(&x.module, m, &fp)? {
                    return Ok(Some(n + i));
                }
            }
            Ok(None)
        };
        let seen = {
            let extras = self.extras.read().unwrap();
            if let Some(k) = scan(&extras, 0)? {
                return Ok(k);
            }
            extras.len()
        };
        let mut extras = self.extras.write().unwrap();
        if let Some(k) = scan(&extras, seen)? {
            return Ok(k);
        }
        extras.push(Extra {
            fingerprint: fp,
            probe,
            module: m.clone(),
        });
        Ok(n + extras.len() - 1)
    }

    /// `log |Hom(C, M)|` and `log |Hom(M, C)|` over the cyclic catalog classes:
    /// a cheap refinement of the fingerprint for modules outside the catalog.
    fn probe(&self, m: &FiniteModule) -> Vec<u32> {
        self.cat
            .ids_where(|f| f.cyclic)
            .into_iter()
            .flat_map(|c| {
                let cm = self.cat.class(c);
                [
                    HomSet::new(cm, m).expect("same ring").size_log(),
                    HomSet::new(m, cm).expect("same ring").size_log(),
                ]
            })
            .collect()
    }

    pub fn is_injective_key(&self, key: ClassKey) -> bool {
        match self.catalog_id(key) {
            Some(id) => self.cat.flags(id).injective,
            None => crate::envelopes::is_injective(&self.module(key)),
        }
    }

    pub fn is_projective_key(&self, key: ClassKey) -> bool {
        match self.catalog_id(key) {
            Some(id) => self.cat.flags(id).projective,
            None => crate::envelopes::is_projective(&self.module(key)),
        }
    }

    pub fn hull(&self, key: ClassKey) -> Arc<HullResult> {
        if let Some(h) = self.hulls.get(&key) {
            return h.clone();
        }
        let h = Arc::new(injective_hull_seeded(&self.module(key), self.seed));
        self.hulls.insert(key, h.clone());
        h
    }

    pub fn cover(&self, key: ClassKey) -> Arc<ModuleHom> {
        if let Some(c) = self.covers.get(&key) {
            return c.clone();
        }
        let c = Arc::new(free_cover(&self.module(key)));
        self.covers.insert(key, c.clone());
        c
    }

    /// `x` in `In^-1(y)`, memoized.
    pub fn subinjective(&self, x: ClassKey, y: ClassKey) -> bool {
        if let Some(v) = self.memo.get(&(Op::SubInj, x, y)) {
            return *v;
        }
        let v = self.is_injective_key(y)
            || extension_failure(&self.hull(x), &self.module(y))
                .expect("same ring")
                .is_none();
        self.memo.insert((Op::SubInj, x, y), v);
        v
    }

    /// `x` in `Pr^-1(y)`, memoized.
    pub fn subprojective(&self, x: ClassKey, y: ClassKey) -> bool {
        if let Some(v) = self.memo.get(&(Op::SubProj, x, y)) {
            return *v;
        }
        let v = self.is_projective_key(x)
            || lifting_failure(&self.cover(x), &self.module(y))
                .expect("same ring")
                .is_none();
        self.memo.insert((Op::SubProj, x, y), v);
        v
    }

    /// All short exact sequences ending in catalog class `b`, with classified ends.
    pub fn ses_of(&self, b: usize) -> Result<Arc<Vec<SesEntry>>> {
        if let Some(s) = self.ses.get(&b) {
            return Ok(s.clone());
        }
        let bm = self.cat.class(b);
        let subs = submodules(bm, SES_LATTICE_BOUND)?;
        let entries = subs
            .into_par_iter()
            .map(|sub| {
                let a = self.key_of(&bm.submodule(&sub))?;
                let c = self.key_of(&bm.quotient_module(&sub))?;
                Ok(SesEntry { sub, a, c })
            })
            .collect::<Result<Vec<_>>>()?;
        let entries = Arc::new(entries);
        self.ses.insert(b, entries.clone());
        Ok(entries)
    }

    /// Build the SES index for every catalog class.
    pub fn index_all_ses(&self) -> Result<()> {
        self.cat
            .ids()
            .collect::<Vec<_>>()
            .par_iter()
            .try_for_each(|&b| self.ses_of(b).map(|_| ()))
    }

    // ---- verdicts ----

    fn reflect_verdict(&self, m: ClassKey, op: Op) -> Result<Verdict> {
        let test = |y: ClassKey| match op {
            Op::SubInj => self.subinjective(m, y),
            Op::SubProj => self.subprojective(m, y),
        };
        let found = self
            .cat
            .ids()
            .collect::<Vec<_>>()
            .par_iter()
            .map(|&b| -> Result<Option<(SubmoduleHandle, ClassKey, ClassKey)>> {
                if test(b) {
                    return Ok(None);
                }
                let seqs = self.ses_of(b)?;
                Ok(seqs
                    .iter()
                    .find(|e| test(e.a) && test(e.c))
                    .map(|e| (e.sub.clone(), e.a, e.c)))
            })
            .collect::<Result<Vec<_>>>()?;
        let mm = self.module(m);
        let mut witnesses = Vec::new();
        for (b, f) in found.into_iter().enumerate() {
            let Some((sub, a, c)) = f else { continue };
            let bm = self.cat.class(b);
            let failing = match op {
                Op::SubInj => extension_failure(&self.hull(m), bm)?,
                Op::SubProj => lifting_failure(&self.cover(m), bm)?,
            }
            .ok_or_else(|| {
                Error::InternalInconsistency(format!(
                    "no failing map on class {b} for a module of size {}",
                    mm.size()
                ))
            })?;
            witnesses.push(SesWitness {
                b,
                sub,
                a_class: self.catalog_id(a),
                c_class: self.catalog_id(c),
                failing_map: failing.images().to_vec(),
            });
        }
        Ok(Verdict {
            kind: if witnesses.is_empty() {
                VerdictKind::CertifiedUpToBound
            } else {
                VerdictKind::Counterexample
            },
            bound: self.bound(),
            max_gens: self.cat.max_gens(),
            witnesses,
        })
    }

    /// Whether `In(M)` is closed under extensions within the catalog.
    pub fn sier_verdict(&self, m: ClassKey) -> Result<Verdict> {
        self.cached_verdict(m, Op::SubInj)
    }

    /// Whether `Pr(M)` is closed under extensions within the catalog.
    pub fn sper_verdict(&self, m: ClassKey) -> Result<Verdict> {
        self.cached_verdict(m, Op::SubProj)
    }

    fn cached_verdict(&self, m: ClassKey, op: Op) -> Result<Verdict> {
        if let Some(v) = self.verdicts.get(&(op, m)) {
            return Ok(v.clone());
        }
        let v = self.reflect_verdict(m, op)?;
        self.verdicts.insert((op, m), v.clone());
        Ok(v)
    }

    /// Re-check a counterexample from scratch, without memo tables.
    pub fn recheck(&self, m: &FiniteModule, w: &SesWitness, subinjective: bool) -> Result<bool> {
        let b = self.cat.class(w.b);
        b.check_submodule(&w.sub)?;
        let (a, c) = (b.submodule(&w.sub), b.quotient_module(&w.sub));
        Ok(if subinjective {
            let f = ModuleHom::from_images(m, b, w.failing_map.clone())?;
            let hull = injective_hull_seeded(m, 0);
            let ext = HomSet::new(&hull.hull, b)?;
            let restricted = ext
                .generators()
                .iter()
                .map(|g| hull.embedding.then(g).unwrap().images().concat())
                .collect::<Vec<_>>();
            let on_m = HomSet::new(m, b)?;
            let base = spanned_log(&on_m, restricted.iter().cloned());
            let mut with = restricted;
            with.push(f.images().concat());
            is_subinjective(m, &a)? && is_subinjective(m, &c)? && spanned_log(&on_m, with) > base
        } else {
            let f = ModuleHom::from_images(b, m, w.failing_map.clone())?;
            let cover = free_cover(m);
            let to_free = HomSet::new(b, cover.source())?;
            let comps = to_free
                .generators()
                .iter()
                .map(|h| h.then(&cover).unwrap().images().concat())
                .collect::<Vec<_>>();
            let to_m = HomSet::new(b, m)?;
            let base = spanned_log(&to_m, comps.iter().cloned());
            let mut with = comps;
            with.push(f.images().concat());
            is_subprojective(m, &a)? && is_subprojective(m, &c)? && spanned_log(&to_m, with) > base
        })
    }

    // ---- domains ----

    pub fn domain(&self, m: ClassKey, kind: DomainKind) -> DomainSet {
        let ids: Vec<usize> = self.cat.ids().collect();
        let members = ids
            .par_iter()
            .filter(|&&n| match kind {
                DomainKind::InInv => self.subinjective(n, m),
                DomainKind::In => self.subinjective(m, n),
                DomainKind::PrInv => self.subprojective(n, m),
                DomainKind::Pr => self.subprojective(m, n),
            })
            .copied()
            .collect();
        DomainSet {
            kind,
            members,
            bound: self.bound(),
        }
    }

    pub fn classify(&self, m: ClassKey) -> Classification {
        let inj = self.cat.ids_where(|f| f.injective);
        let proj = self.cat.ids_where(|f| f.projective);
        let cyclic = self.cat.ids_where(|f| f.cyclic);
        let all: Vec<usize> = self.cat.ids().collect();
        let in_inv = self.domain(m, DomainKind::InInv).members;
        let pr_inv = self.domain(m, DomainKind::PrInv).members;
        let in_m = self.domain(m, DomainKind::In).members;
        let pr_m = self.domain(m, DomainKind::Pr).members;
        let subset = |xs: &[usize], ys: &[usize]| xs.iter().all(|x| ys.contains(x));
        Classification {
            bound: self.bound(),
            injective: self.is_injective_key(m),
            projective: self.is_projective_key(m),
            indigent: in_inv == inj,
            p_indigent: pr_inv == proj,
            tibs: subset(&in_m, &inj),
            fg_injective: in_m == all,
            c_injective: subset(&cyclic, &in_m),
            fg_projective: pr_m == all,
            c_projective: subset(&cyclic, &pr_m),
        }
    }

    pub fn middle_class_report(&self) -> MiddleClassReport {
        let inj = self.cat.ids_where(|f| f.injective);
        let proj = self.cat.ids_where(|f| f.projective);
        let rows: Vec<MiddleClassRow> = self
            .cat
            .ids()
            .map(|c| MiddleClassRow {
                class: c,
                injective: self.cat.flags(c).injective,
                indigent: self.domain(c, DomainKind::InInv).members == inj,
                projective: self.cat.flags(c).projective,
                p_indigent: self.domain(c, DomainKind::PrInv).members == proj,
            })
            .collect();
        MiddleClassReport {
            bound: self.bound(),
            no_subinjective_middle_class: rows.iter().all(|r| r.injective || r.indigent),
            no_subprojective_middle_class: rows.iter().all(|r| r.projective || r.p_indigent),
            rows,
        }
    }

    /// Pairwise table for one predicate over the catalog, row `x`, column `y`.
    pub fn table(&self, subinjective: bool) -> BTreeMap<(usize, usize), bool> {
        let pairs: Vec<(usize, usize)> = self
            .cat
            .ids()
            .flat_map(|x| self.cat.ids().map(move |y| (x, y)))
            .collect();
        pairs
            .par_iter()
            .map(|&(x, y)| {
                (
                    (x, y),
                    if subinjective {
                        self.subinjective(x, y)
                    } else {
                        self.subprojective(x, y)
                    },
                )
            })
            .collect()
    }
}
