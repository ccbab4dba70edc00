//! Finite right modules as subquotients `V / U` of an ambient `(Z/m)^N`
//! carrying a right action of the ring basis.

use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ring::FiniteRing;
use crate::zmod::{self, Vector, Zm};

/// The ambient group `(Z/m)^dim` together with the matrices of right
/// multiplication by each ring basis element (acting on row vectors).
///
/// Free ambients `R^n` are block diagonal; character duals use the
/// transposed actions of their predual.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ambient {
    pub dim: usize,
    pub actions: Vec<Vec<Vector>>,
    pub free_rank: Option<usize>,
}

impl Ambient {
    pub fn free(ring: &FiniteRing, n: usize) -> Self {
        let d = ring.rank();
        let dim = n * d;
        let actions = (0..d)
            .map(|j| {
                let block = ring.right_action(j);
                let mut mat = vec![vec![0; dim]; dim];
                for b in 0..n {
                    for i in 0..d {
                        for l in 0..d {
                            mat[b * d + i][b * d + l] = block[i][l];
                        }
                    }
                }
                mat
            })
            .collect();
        Ambient {
            dim,
            actions,
            free_rank: Some(n),
        }
    }

    pub fn direct_sum(a: &Ambient, b: &Ambient) -> Self {
        let dim = a.dim + b.dim;
        let actions = a
            .actions
            .iter()
            .zip(&b.actions)
            .map(|(ma, mb)| {
                let mut mat = vec![vec![0; dim]; dim];
                for i in 0..a.dim {
                    mat[i][..a.dim].copy_from_slice(&ma[i]);
                }
                for i in 0..b.dim {
                    mat[a.dim + i][a.dim..].copy_from_slice(&mb[i]);
                }
                mat
            })
            .collect();
        let free_rank = match (a.free_rank, b.free_rank) {
            (Some(x), Some(y)) => Some(x + y),
            _ => None,
        };
        Ambient {
            dim,
            actions,
            free_rank,
        }
    }

    #[inline]
    pub fn act_basis(&self, zm: &Zm, x: &[u64], j: usize) -> Vector {
        zm.vec_mat(x, &self.actions[j])
    }

    /// `x * r` for a ring element `r` in coordinates.
    pub fn act(&self, zm: &Zm, x: &[u64], r: &[u64]) -> Vector {
        let mut out = vec![0; self.dim];
        for (j, rj) in r.iter().enumerate() {
            if *rj != 0 {
                let y = self.act_basis(zm, x, j);
                zm.axpy(&mut out, *rj, &y);
            }
        }
        out
    }
}

/// A submodule of a [`FiniteModule`], stored as the Howell basis of its
/// preimage `W` with `U <= W <= V`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SubmoduleHandle {
    pub basis: Vec<Vector>,
}

#[derive(Debug, Clone)]
struct GenSolver {
    rows: Vec<Vector>,
    relations: Vec<Vector>,
}

/// A finite right module `V / U`.
#[derive(Debug, Clone)]
pub struct FiniteModule {
    ring: Arc<FiniteRing>,
    ambient: Arc<Ambient>,
    v: Vec<Vector>,
    u: Vec<Vector>,
    gens: OnceLock<Vec<Vector>>,
    solver: OnceLock<GenSolver>,
}

/// Serialized form used by the catalog cache.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleDoc {
    pub ring: String,
    pub ambient_rank: Option<usize>,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub actions: Option<Vec<Vec<Vector>>>,
    pub v: Vec<Vector>,
    pub u: Vec<Vector>,
}

/// Howell basis of the submodule generated by `gens` inside `ambient`.
pub(crate) fn r_span(ring: &FiniteRing, ambient: &Ambient, gens: &[Vector]) -> Vec<Vector> {
    let zm = ring.zm();
    let rows = gens
        .iter()
        .flat_map(|g| (0..ring.rank()).map(move |j| ambient.act_basis(zm, g, j)))
        .collect::<Vec<_>>();
    zmod::howell(zm, rows, ambient.dim)
}

impl FiniteModule {
    /// Submodule generated by `v_gens` modulo the submodule generated by `u_gens`.
    pub fn new(ring: Arc<FiniteRing>, ambient: Arc<Ambient>, v_gens: &[Vector], u_gens: &[Vector]) -> Result<Self> {
        for g in v_gens.iter().chain(u_gens) {
            zmod::check_len(g, ambient.dim)?;
        }
        if ambient.actions.len() != ring.rank() {
            return Err(Error::RingMismatch);
        }
        let u = r_span(&ring, &ambient, u_gens);
        let all: Vec<Vector> = v_gens.iter().chain(u.iter()).cloned().collect();
        let v = r_span(&ring, &ambient, &all);
        Ok(Self::from_canonical(ring, ambient, v, u))
    }

    pub(crate) fn from_canonical(ring: Arc<FiniteRing>, ambient: Arc<Ambient>, v: Vec<Vector>, u: Vec<Vector>) -> Self {
        FiniteModule {
            ring,
            ambient,
            v,
            u,
            gens: OnceLock::new(),
            solver: OnceLock::new(),
        }
    }

    pub fn free(ring: &Arc<FiniteRing>, n: usize) -> Self {
        let ambient = Arc::new(Ambient::free(ring, n));
        let dim = ambient.dim;
        let v = (0..dim)
            .map(|i| {
                let mut e = vec![0; dim];
                e[i] = 1;
                e
            })
            .collect();
        Self::from_canonical(ring.clone(), ambient, v, Vec::new())
    }

    /// The right regular module `R_R`; its submodules are the right ideals.
    pub fn regular(ring: &Arc<FiniteRing>) -> Self {
        Self::free(ring, 1)
    }

    pub fn zero(ring: &Arc<FiniteRing>) -> Self {
        let ambient = Arc::new(Ambient::free(ring, 0));
        Self::from_canonical(ring.clone(), ambient, Vec::new(), Vec::new())
    }

    /// The same module viewed over a structurally equal ring handle.
    pub fn rebase(&self, ring: Arc<FiniteRing>) -> FiniteModule {
        assert!(*ring == *self.ring, "rebase onto a different ring");
        Self::from_canonical(ring, self.ambient.clone(), self.v.clone(), self.u.clone())
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn ambient(&self) -> &Arc<Ambient> {
        &self.ambient
    }

    pub fn zm(&self) -> &Zm {
        self.ring.zm()
    }

    pub fn dim(&self) -> usize {
        self.ambient.dim
    }

    pub fn v_basis(&self) -> &[Vector] {
        &self.v
    }

    pub fn u_basis(&self) -> &[Vector] {
        &self.u
    }

    pub fn same_ring(&self, other: &FiniteModule) -> Result<()> {
        if Arc::ptr_eq(&self.ring, &other.ring) || *self.ring == *other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// `log_p |M|`.
    pub fn size_log(&self) -> u32 {
        zmod::span_log(self.zm(), &self.v) - zmod::span_log(self.zm(), &self.u)
    }

    pub fn size(&self) -> u128 {
        (self.zm().prime() as u128).pow(self.size_log())
    }

    pub fn is_zero(&self) -> bool {
        self.size_log() == 0
    }

    pub fn canonical(&self, x: &[u64]) -> Vector {
        zmod::reduce_mod(self.zm(), &self.u, x)
    }

    pub fn contains(&self, x: &[u64]) -> bool {
        x.len() == self.dim() && zmod::contains(self.zm(), &self.v, x)
    }

    pub fn is_zero_element(&self, x: &[u64]) -> bool {
        zmod::contains(self.zm(), &self.u, x)
    }

    pub fn zero_element(&self) -> Vector {
        vec![0; self.dim()]
    }

    pub fn add(&self, x: &[u64], y: &[u64]) -> Vector {
        self.canonical(&self.zm().add_vec(x, y))
    }

    pub fn sub(&self, x: &[u64], y: &[u64]) -> Vector {
        self.canonical(&self.zm().sub_vec(x, y))
    }

    /// `x * e_j`, canonical.
    pub fn act_basis(&self, x: &[u64], j: usize) -> Vector {
        self.canonical(&self.ambient.act_basis(self.zm(), x, j))
    }

    /// `x * r`, canonical.
    pub fn act(&self, x: &[u64], r: &[u64]) -> Vector {
        self.canonical(&self.ambient.act(self.zm(), x, r))
    }

    /// Every element as a canonical representative, lexicographically sorted.
    pub fn elements(&self) -> Vec<Vector> {
        zmod::enumerate_subquotient(self.zm(), &self.v, &self.u, self.dim())
    }

    /// Abelian invariant factors as `p`-exponents, descending.
    pub fn abelian_type(&self) -> Vec<u32> {
        zmod::abelian_type(self.zm(), &self.v, &self.u, self.dim())
    }

    // ---- submodules ----

    pub fn zero_submodule(&self) -> SubmoduleHandle {
        SubmoduleHandle { basis: self.u.clone() }
    }

    pub fn whole(&self) -> SubmoduleHandle {
        SubmoduleHandle { basis: self.v.clone() }
    }

    /// Submodule generated by the given elements.
    pub fn generated(&self, xs: &[Vector]) -> SubmoduleHandle {
        let all: Vec<Vector> = xs.iter().chain(self.u.iter()).cloned().collect();
        SubmoduleHandle {
            basis: r_span(&self.ring, &self.ambient, &all),
        }
    }

    pub fn cyclic(&self, x: &[u64]) -> SubmoduleHandle {
        self.generated(&[x.to_vec()])
    }

    pub fn sum(&self, a: &SubmoduleHandle, b: &SubmoduleHandle) -> SubmoduleHandle {
        let rows = a.basis.iter().chain(&b.basis).cloned();
        SubmoduleHandle {
            basis: zmod::howell(self.zm(), rows, self.dim()),
        }
    }

    pub fn intersection(&self, a: &SubmoduleHandle, b: &SubmoduleHandle) -> SubmoduleHandle {
        SubmoduleHandle {
            basis: zmod::intersect(self.zm(), &a.basis, &b.basis, self.dim()),
        }
    }

    pub fn sub_size_log(&self, h: &SubmoduleHandle) -> u32 {
        zmod::span_log(self.zm(), &h.basis) - zmod::span_log(self.zm(), &self.u)
    }

    pub fn sub_contains(&self, h: &SubmoduleHandle, x: &[u64]) -> bool {
        zmod::contains(self.zm(), &h.basis, x)
    }

    /// `a <= b` as submodules.
    pub fn sub_le(&self, a: &SubmoduleHandle, b: &SubmoduleHandle) -> bool {
        a.basis.iter().all(|r| zmod::contains(self.zm(), &b.basis, r))
    }

    pub fn is_zero_sub(&self, h: &SubmoduleHandle) -> bool {
        self.sub_size_log(h) == 0
    }

    /// Verify that a handle really describes a submodule of this module.
    pub fn check_submodule(&self, h: &SubmoduleHandle) -> Result<()> {
        let zm = self.zm();
        if h.basis.iter().any(|r| r.len() != self.dim()) {
            return Err(Error::NotASubmodule);
        }
        let canon = zmod::howell(zm, h.basis.iter().cloned(), self.dim());
        if canon != h.basis {
            return Err(Error::NotASubmodule);
        }
        let inside = h.basis.iter().all(|r| zmod::contains(zm, &self.v, r));
        let over_u = self.u.iter().all(|r| zmod::contains(zm, &h.basis, r));
        let closed = h
            .basis
            .iter()
            .all(|r| (0..self.ring.rank()).all(|j| zmod::contains(zm, &h.basis, &self.ambient.act_basis(zm, r, j))));
        if inside && over_u && closed {
            Ok(())
        } else {
            Err(Error::NotASubmodule)
        }
    }

    /// The submodule as a module in its own right (same ambient).
    pub fn submodule(&self, h: &SubmoduleHandle) -> FiniteModule {
        Self::from_canonical(self.ring.clone(), self.ambient.clone(), h.basis.clone(), self.u.clone())
    }

    /// `M / W` in the same ambient.
    pub fn quotient_module(&self, h: &SubmoduleHandle) -> FiniteModule {
        Self::from_canonical(self.ring.clone(), self.ambient.clone(), self.v.clone(), h.basis.clone())
    }

    /// Transport a submodule of `M / W` (same ambient, U = W) back to `M`.
    pub fn lift_handle(&self, h: &SubmoduleHandle) -> SubmoduleHandle {
        h.clone()
    }

    // ---- radical and socle ----

    /// `rad(M) = M J(R)`.
    pub fn radical(&self) -> SubmoduleHandle {
        let zm = self.zm();
        let jb = self.ring.radical_basis();
        let rows: Vec<Vector> = self
            .v
            .iter()
            .flat_map(|x| jb.iter().map(move |r| self.ambient.act(zm, x, r)))
            .chain(self.u.iter().cloned())
            .collect();
        SubmoduleHandle {
            basis: r_span(&self.ring, &self.ambient, &rows),
        }
    }

    /// `soc(M) = {x : x J(R) = 0}` (exact over finite rings).
    pub fn socle(&self) -> SubmoduleHandle {
        self.annihilated_by(self.ring.radical_basis())
    }

    /// `{x in M : x r = 0 for all r in rs}` for ring elements `rs`.
    pub fn annihilated_by(&self, rs: &[Vector]) -> SubmoduleHandle {
        let zm = self.zm();
        let n = self.dim();
        if rs.is_empty() {
            return self.whole();
        }
        let images: Vec<Vector> = self
            .v
            .iter()
            .map(|x| rs.iter().flat_map(|r| self.ambient.act(zm, x, r)).collect())
            .collect();
        let modulo: Vec<Vector> = (0..rs.len())
            .flat_map(|b| {
                self.u.iter().map(move |row| {
                    let mut v = vec![0; rs.len() * n];
                    v[b * n..(b + 1) * n].copy_from_slice(row);
                    v
                })
            })
            .collect();
        let ker = zmod::kernel(zm, &images, &modulo, rs.len() * n);
        let rows: Vec<Vector> = ker
            .iter()
            .map(|lam| {
                let mut acc = vec![0; n];
                for (c, r) in lam.iter().zip(&self.v) {
                    zm.axpy(&mut acc, *c, r);
                }
                acc
            })
            .chain(self.u.iter().cloned())
            .collect();
        SubmoduleHandle {
            basis: zmod::howell(zm, rows, n),
        }
    }

    pub fn is_semisimple(&self) -> bool {
        self.sub_size_log(&self.radical()) == 0
    }

    /// True iff every nonzero submodule meets `h` nontrivially, decided by
    /// `soc(M) <= h` (every nonzero submodule of a finite module contains a simple one).
    pub fn is_essential(&self, h: &SubmoduleHandle) -> Result<bool> {
        self.check_submodule(h)?;
        Ok(self.sub_le(&self.socle(), h))
    }

    // ---- generators ----

    /// A minimal generating set, chosen greedily: each step adds the element
    /// of the top `M / rad(M)` whose cyclic span grows the current submodule most.
    pub fn gens(&self) -> &[Vector] {
        self.gens.get_or_init(|| self.compute_gens())
    }

    fn compute_gens(&self) -> Vec<Vector> {
        let zm = self.zm();
        let n = self.dim();
        let rad = self.radical();
        let total = zmod::span_log(zm, &self.v);
        let reps = zmod::enumerate_subquotient(zm, &self.v, &rad.basis, n);
        let mut cur = rad.basis.clone();
        let mut gens = Vec::new();
        while zmod::span_log(zm, &cur) < total {
            let mut best: Option<(u32, Vec<Vector>, &Vector)> = None;
            for x in &reps {
                if zmod::contains(zm, &cur, x) {
                    continue;
                }
                let mut rows = cur.clone();
                rows.push(x.clone());
                let span = r_span(&self.ring, &self.ambient, &rows);
                let s = zmod::span_log(zm, &span);
                if best.as_ref().map_or(true, |(b, _, _)| s > *b) {
                    best = Some((s, span, x));
                }
            }
            let (_, span, x) = best.expect("a top element outside the current span exists");
            cur = span;
            gens.push(self.canonical(x));
        }
        gens
    }

    pub fn min_generator_count(&self) -> usize {
        self.gens().len()
    }

    /// Whether some single element generates the module (exhaustive over the top).
    pub fn is_cyclic(&self) -> bool {
        if self.is_zero() {
            return true;
        }
        let zm = self.zm();
        let rad = self.radical();
        let total = zmod::span_log(zm, &self.v);
        zmod::enumerate_subquotient(zm, &self.v, &rad.basis, self.dim())
            .iter()
            .any(|x| {
                let mut rows = rad.basis.clone();
                rows.push(x.clone());
                zmod::span_log(zm, &r_span(&self.ring, &self.ambient, &rows)) == total
            })
    }

    fn solver(&self) -> &GenSolver {
        self.solver.get_or_init(|| {
            let zm = self.zm();
            let n = self.dim();
            let d = self.ring.rank();
            let gens = self.gens();
            let width = n + gens.len() * d;
            let mut rows = Vec::new();
            for (i, g) in gens.iter().enumerate() {
                for j in 0..d {
                    let mut r = self.ambient.act_basis(zm, g, j);
                    r.resize(width, 0);
                    r[n + i * d + j] = 1;
                    rows.push(r);
                }
            }
            for u in &self.u {
                let mut r = u.clone();
                r.resize(width, 0);
                rows.push(r);
            }
            let rows = zmod::howell(zm, rows, width);
            let relations = rows
                .iter()
                .filter(|r| zmod::pivot_col(r).unwrap() >= n)
                .map(|r| r[n..].to_vec())
                .collect();
            GenSolver { rows, relations }
        })
    }

    /// Coefficients `r_i` with `x = sum g_i r_i` (mod U), one ring element per generator.
    pub fn coords(&self, x: &[u64]) -> Option<Vec<Vector>> {
        let zm = self.zm();
        let n = self.dim();
        let d = self.ring.rank();
        let solver = self.solver();
        let k = self.gens().len();
        if x.len() != n {
            return None;
        }
        let mut y = x.to_vec();
        y.resize(n + k * d, 0);
        for row in &solver.rows {
            let c = zmod::pivot_col(row).unwrap();
            if c >= n {
                break;
            }
            if y[c] % row[c] != 0 {
                return None;
            }
            let q = y[c] / row[c];
            zm.axpy_neg(&mut y, q, row);
        }
        if !zmod::is_zero(&y[..n]) {
            return None;
        }
        Some(
            (0..k)
                .map(|i| y[n + i * d..n + (i + 1) * d].iter().map(|a| zm.neg(*a)).collect())
                .collect(),
        )
    }

    /// Z/m-generators of the relation module `{(r_i) : sum g_i r_i = 0}` in `(Z/m)^{k d}`.
    pub fn relations(&self) -> &[Vector] {
        &self.solver().relations
    }

    /// Evaluate `sum xs_i r_i` in this module for ring coefficients `rs`.
    pub fn combine(&self, xs: &[Vector], rs: &[Vector]) -> Vector {
        let zm = self.zm();
        let mut acc = vec![0; self.dim()];
        for (x, r) in xs.iter().zip(rs) {
            let y = self.ambient.act(zm, x, r);
            zm.axpy(&mut acc, 1, &y);
        }
        self.canonical(&acc)
    }

    // ---- serialization ----

    pub fn to_doc(&self) -> ModuleDoc {
        ModuleDoc {
            ring: self.ring.name().to_string(),
            ambient_rank: self.ambient.free_rank,
            dim: self.dim(),
            actions: self.ambient.free_rank.is_none().then(|| self.ambient.actions.clone()),
            v: self.v.clone(),
            u: self.u.clone(),
        }
    }

    pub fn from_doc(ring: &Arc<FiniteRing>, doc: &ModuleDoc) -> Result<Self> {
        let ambient = match (doc.ambient_rank, &doc.actions) {
            (Some(n), _) => Ambient::free(ring, n),
            (None, Some(actions)) => Ambient {
                dim: doc.dim,
                actions: actions.clone(),
                free_rank: None,
            },
            (None, None) => return Err(Error::MalformedSpec("module without ambient".into())),
        };
        if ambient.dim != doc.dim {
            return Err(Error::DimensionMismatch {
                expected: ambient.dim,
                got: doc.dim,
            });
        }
        let m = Self::new(ring.clone(), Arc::new(ambient), &doc.v, &doc.u)?;
        if m.v != doc.v || m.u != doc.u {
            return Err(Error::MalformedSpec("module bases are not canonical".into()));
        }
        Ok(m)
    }

    /// External direct sum.
    pub fn direct_sum(&self, other: &FiniteModule) -> Result<FiniteModule> {
        self.same_ring(other)?;
        let ambient = Arc::new(Ambient::direct_sum(&self.ambient, &other.ambient));
        let (na, nb) = (self.dim(), other.dim());
        let embed = |rows: &[Vector], off: usize| -> Vec<Vector> {
            rows.iter()
                .map(|r| {
                    let mut v = vec![0; na + nb];
                    v[off..off + r.len()].copy_from_slice(r);
                    v
                })
                .collect()
        };
        let zm = self.zm();
        let v = zmod::howell(zm, embed(&self.v, 0).into_iter().chain(embed(&other.v, na)), na + nb);
        let u = zmod::howell(zm, embed(&self.u, 0).into_iter().chain(embed(&other.u, na)), na + nb);
        Ok(Self::from_canonical(self.ring.clone(), ambient, v, u))
    }

    pub fn direct_power(&self, t: usize) -> Result<FiniteModule> {
        let mut acc = FiniteModule::zero(&self.ring);
        for _ in 0..t {
            acc = acc.direct_sum(self)?;
        }
        Ok(acc)
    }

    /// Character dual `Hom_Z(M, Z/m)`, a right module over the opposite ring
    /// via `(f * r)(x) = f(x r)`.
    pub fn character_dual(&self) -> FiniteModule {
        let zm = self.zm();
        let n = self.dim();
        let op = self.ring.opposite();
        // characters vanishing on U, modulo those vanishing on V
        let ann = |rows: &[Vector]| -> Vec<Vector> {
            let images: Vec<Vector> = (0..n).map(|c| rows.iter().map(|r| r[c]).collect()).collect();
            zmod::kernel(zm, &images, &[], rows.len())
        };
        let ann_u = if self.u.is_empty() { identity(n) } else { ann(&self.u) };
        let ann_v = if self.v.is_empty() { identity(n) } else { ann(&self.v) };
        let actions = self
            .ambient
            .actions
            .iter()
            .map(|a| (0..n).map(|i| (0..n).map(|j| a[j][i]).collect()).collect())
            .collect();
        let ambient = Arc::new(Ambient {
            dim: n,
            actions,
            free_rank: None,
        });
        FiniteModule::new(op, ambient, &ann_u, &ann_v).expect("dual is well formed")
    }
}

fn identity(n: usize) -> Vec<Vector> {
    (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = 1;
            e
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::fixtures::*;

    #[test]
    fn regular_module_sizes() {
        assert_eq!(FiniteModule::regular(&f2()).size(), 2);
        assert_eq!(FiniteModule::regular(&r8()).size(), 8);
        assert_eq!(FiniteModule::free(&z4(), 2).size(), 16);
        assert!(FiniteModule::zero(&z4()).is_zero());
    }

    #[test]
    fn socle_and_radical_of_r8() {
        let r = r8();
        let m = FiniteModule::regular(&r);
        assert_eq!(m.sub_size_log(&m.socle()), 2);
        assert_eq!(m.radical(), m.socle());
        assert_eq!(m.gens().len(), 1);
        assert!(m.is_cyclic());
        let sub = m.submodule(&m.radical());
        assert!(sub.is_semisimple());
        assert_eq!(sub.min_generator_count(), 2);
        assert!(!sub.is_cyclic());
    }

    #[test]
    fn coords_round_trip() {
        let r = t2();
        let m = FiniteModule::free(&r, 2);
        let q = m.quotient_module(&m.cyclic(&[1, 1, 0, 0, 0, 1]));
        for x in q.elements() {
            let c = q.coords(&x).expect("element is generated");
            assert_eq!(q.combine(q.gens(), &c), x);
        }
        let sub = m.submodule(&m.cyclic(&[0, 0, 1, 0, 0, 0]));
        assert!(sub.coords(&[1, 0, 0, 0, 0, 0]).is_none());
        assert!(sub.coords(&[0, 0, 1, 0, 0, 0]).is_some());
    }

    #[test]
    fn submodule_check_rejects_non_closed_span() {
        let r = r8();
        let m = FiniteModule::regular(&r);
        // the Z/2-span of 1 alone is not a right ideal
        let h = SubmoduleHandle {
            basis: vec![vec![1, 0, 0]],
        };
        assert!(matches!(m.check_submodule(&h), Err(Error::NotASubmodule)));
        assert!(m.check_submodule(&m.socle()).is_ok());
    }

    #[test]
    fn double_dual_of_free_has_original_size() {
        let r = t2();
        let m = FiniteModule::free(&r, 1);
        let dd = m.character_dual().character_dual();
        assert_eq!(dd.size(), m.size());
        assert_eq!(**dd.ring(), *r);
    }

    #[test]
    fn doc_round_trip() {
        let r = z4();
        let m = FiniteModule::free(&r, 2);
        let q = m.quotient_module(&m.cyclic(&[2, 0]));
        let doc = q.to_doc();
        let back = FiniteModule::from_doc(&r, &doc).unwrap();
        assert_eq!(back.v_basis(), q.v_basis());
        assert_eq!(back.u_basis(), q.u_basis());
    }
}
