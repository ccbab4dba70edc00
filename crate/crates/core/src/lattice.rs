//! Submodule lattices, composition length, simple modules and the Jacobson radical.

use std::collections::{BTreeSet, VecDeque};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::module::{FiniteModule, SubmoduleHandle};
use crate::ring::FiniteRing;
use crate::zmod::{self, Vector};

/// Default cap on the number of submodules enumerated before giving up.
pub const DEFAULT_LATTICE_BOUND: usize = 20_000;

fn is_nilpotent(ring: &FiniteRing, x: &[u64]) -> bool {
    // the nilpotency index of a nilpotent element is at most the composition length of R_R
    let mut y = x.to_vec();
    let mut e = 1u32;
    while e <= ring.size_log() {
        y = ring.mul(&y, &y);
        e *= 2;
    }
    zmod::is_zero(&y)
}

/// Howell basis of `J(R)`: the elements `x` for which `xR` is nil.
///
/// In a finite ring the radical is the largest nil right ideal, so the
/// membership test is exact.
pub(crate) fn compute_jacobson_basis(ring: &Arc<FiniteRing>) -> Vec<Vector> {
    let zm = ring.zm();
    let d = ring.rank();
    let elems = ring.elements();
    let mut span: Vec<Vector> = Vec::new();
    for x in &elems {
        if zmod::contains(zm, &span, x) {
            continue;
        }
        if elems.iter().all(|r| is_nilpotent(ring, &ring.mul(x, r))) {
            span.push(x.clone());
            span = zmod::howell(zm, span, d);
        }
    }
    span
}

/// Representatives of nonzero elements of `soc(M / W)`, as elements of M.
fn socle_reps_over(m: &FiniteModule, w: &SubmoduleHandle) -> Vec<Vector> {
    let q = m.quotient_module(w);
    let soc = q.socle();
    zmod::enumerate_subquotient(m.zm(), &soc.basis, &w.basis, m.dim())
        .into_iter()
        .filter(|x| !zmod::is_zero(x))
        .collect()
}

/// All submodules of `M`, sorted by size and then basis.
///
/// Fails with `BoundExceeded` once more than `bound` submodules have been found.
pub fn submodules(m: &FiniteModule, bound: usize) -> Result<Vec<SubmoduleHandle>> {
    submodules_between(m, &m.zero_submodule(), bound)
}

/// All submodules `W` with `lower <= W <= M`.
pub fn submodules_between(m: &FiniteModule, lower: &SubmoduleHandle, bound: usize) -> Result<Vec<SubmoduleHandle>> {
    let mut seen: BTreeSet<SubmoduleHandle> = BTreeSet::new();
    seen.insert(lower.clone());
    let mut queue = VecDeque::from([lower.clone()]);
    while let Some(w) = queue.pop_front() {
        // every strictly larger submodule contains some W + xR with x in soc(M/W)
        for x in socle_reps_over(m, &w) {
            let mut gens = w.basis.clone();
            gens.push(x);
            let next = m.generated(&gens);
            if !seen.contains(&next) {
                if seen.len() >= bound {
                    return Err(Error::BoundExceeded(format!("more than {bound} submodules")));
                }
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    let mut all: Vec<SubmoduleHandle> = seen.into_iter().collect();
    all.sort_by_cached_key(|h| (m.sub_size_log(h), h.clone()));
    Ok(all)
}

/// Maximal proper submodules of `M`; all of them contain `rad(M)`.
pub fn maximal_submodules(m: &FiniteModule, bound: usize) -> Result<Vec<SubmoduleHandle>> {
    let whole = m.whole();
    let above = submodules_between(m, &m.radical(), bound)?;
    Ok(above
        .into_iter()
        .filter(|w| *w != whole)
        .filter(|w| m.quotient_module(w).is_simple())
        .collect())
}

/// Length of a composition series, built greedily from minimal cyclic pieces.
pub fn composition_length(m: &FiniteModule) -> usize {
    let mut w = m.zero_submodule();
    let whole = m.whole();
    let mut len = 0;
    while w != whole {
        // a nonzero cyclic submodule of minimal size is simple
        let next = socle_reps_over(m, &w)
            .into_iter()
            .map(|x| {
                let mut gens = w.basis.clone();
                gens.push(x);
                m.generated(&gens)
            })
            .min_by_key(|h| m.sub_size_log(h))
            .expect("a proper submodule has a nonzero socle above it");
        w = next;
        len += 1;
    }
    len
}

impl FiniteModule {
    /// Nonzero with no proper nonzero submodules.
    pub fn is_simple(&self) -> bool {
        if self.is_zero() {
            return false;
        }
        let zero = self.zero_submodule();
        let whole = self.whole();
        self.elements()
            .iter()
            .filter(|x| !self.is_zero_element(x))
            .all(|x| self.cyclic(x) == whole && self.cyclic(x) != zero)
    }

    pub fn composition_length(&self) -> usize {
        composition_length(self)
    }

    /// Additive generators of `ann(M) = {r : M r = 0}`, a two-sided ideal.
    pub fn annihilator(&self) -> Vec<Vector> {
        let zm = self.zm();
        let d = self.ring().rank();
        let n = self.dim();
        let vs = self.v_basis();
        if vs.is_empty() {
            return zmod::howell(zm, (0..d).map(|j| self.ring().basis_element(j)), d);
        }
        let images: Vec<Vector> = (0..d)
            .map(|j| vs.iter().flat_map(|x| self.ambient().act_basis(zm, x, j)).collect())
            .collect();
        let modulo: Vec<Vector> = (0..vs.len())
            .flat_map(|b| {
                self.u_basis().iter().map(move |row| {
                    let mut v = vec![0; vs.len() * n];
                    v[b * n..(b + 1) * n].copy_from_slice(row);
                    v
                })
            })
            .collect();
        zmod::kernel(zm, &images, &modulo, vs.len() * n)
    }

    /// `soc^1 <= soc^2 <= ... = M`, as log-sizes.
    pub fn socle_series(&self) -> Vec<u32> {
        let mut out = Vec::new();
        let mut w = self.zero_submodule();
        let whole = self.whole();
        while w != whole {
            w = self.quotient_module(&w).socle();
            out.push(self.sub_size_log(&w));
        }
        out
    }

    /// `M >= rad M >= rad^2 M >= ... = 0`, as log-sizes.
    pub fn radical_series(&self) -> Vec<u32> {
        let mut out = vec![self.size_log()];
        let mut cur = self.clone();
        while !cur.is_zero() {
            let r = cur.radical();
            cur = cur.submodule(&r);
            out.push(cur.size_log());
        }
        out
    }
}

/// The simple right modules, one per isomorphism class, each realised as
/// `R / (maximal right ideal)`. Two simples are isomorphic exactly when their
/// annihilators agree, which is how classes are separated.
pub fn simple_modules(ring: &Arc<FiniteRing>) -> Vec<FiniteModule> {
    let reg = FiniteModule::regular(ring);
    let maxes = maximal_submodules(&reg, DEFAULT_LATTICE_BOUND).expect("lattice of R/J is small");
    let mut by_ann: Vec<(Vec<Vector>, FiniteModule)> = Vec::new();
    for w in maxes {
        let s = reg.quotient_module(&w);
        let ann = s.annihilator();
        if !by_ann.iter().any(|(a, _)| *a == ann) {
            by_ann.push((ann, s));
        }
    }
    by_ann.sort_by(|(a, x), (b, y)| (x.size_log(), a).cmp(&(y.size_log(), b)));
    by_ann.into_iter().map(|(_, s)| s).collect()
}

/// Invariants preserved by isomorphism, used to prefilter iso tests and as
/// catalog fingerprints.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct StructuralInvariants {
    pub size_log: u32,
    pub abelian_type: Vec<u32>,
    pub length: usize,
    pub socle_series: Vec<u32>,
    pub radical_series: Vec<u32>,
    pub min_generators: usize,
}

pub fn structural_invariants(m: &FiniteModule) -> StructuralInvariants {
    StructuralInvariants {
        size_log: m.size_log(),
        abelian_type: m.abelian_type(),
        length: m.composition_length(),
        socle_series: m.socle_series(),
        radical_series: m.radical_series(),
        min_generators: m.min_generator_count(),
    }
}
