//! Finite unital rings given by structure constants over `Z/m`.

use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::zmod::{Vector, Zm};

/// A finite ring whose additive group is free of rank `rank` over `Z/m`.
///
/// `mult[i][j]` holds the coordinates of `e_i * e_j`.
#[derive(Debug)]
pub struct FiniteRing {
    name: String,
    zm: Zm,
    rank: usize,
    unit: Vector,
    mult: Vec<Vec<Vector>>,
    /// right multiplication by `e_j`, as a `rank x rank` matrix acting on row vectors
    right_actions: Vec<Vec<Vector>>,
    /// left multiplication by `e_j`
    left_actions: Vec<Vec<Vector>>,
    pub(crate) radical: OnceLock<Vec<Vector>>,
}

/// Ring-definition document. Field order is the canonical serialization order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingDoc {
    pub name: String,
    pub m: u64,
    pub rank: usize,
    pub unit: Vec<u64>,
    pub mult: Vec<Vec<Vec<u64>>>,
}

impl PartialEq for FiniteRing {
    /// Structural equality: same additive data and same multiplication table.
    fn eq(&self, other: &Self) -> bool {
        self.zm == other.zm && self.rank == other.rank && self.unit == other.unit && self.mult == other.mult
    }
}

impl Eq for FiniteRing {}

impl FiniteRing {
    pub fn new(name: impl Into<String>, m: u64, unit: Vector, mult: Vec<Vec<Vector>>) -> Result<Arc<Self>> {
        let zm = Zm::new(m)?;
        let rank = unit.len();
        if rank == 0 {
            return Err(Error::MalformedSpec("rank must be positive".into()));
        }
        if mult.len() != rank
            || mult
                .iter()
                .any(|row| row.len() != rank || row.iter().any(|c| c.len() != rank))
        {
            return Err(Error::MalformedSpec(format!("mult must be {rank} x {rank} x {rank}")));
        }
        if unit.iter().chain(mult.iter().flatten().flatten()).any(|a| *a >= m) {
            return Err(Error::MalformedSpec(format!("coordinates must lie in [0, {m})")));
        }
        let right_actions = (0..rank)
            .map(|j| (0..rank).map(|i| mult[i][j].clone()).collect())
            .collect();
        let left_actions = (0..rank)
            .map(|j| (0..rank).map(|i| mult[j][i].clone()).collect())
            .collect();
        let ring = FiniteRing {
            name: name.into(),
            zm,
            rank,
            unit,
            mult,
            right_actions,
            left_actions,
            radical: OnceLock::new(),
        };
        ring.validate()?;
        Ok(Arc::new(ring))
    }

    fn validate(&self) -> Result<()> {
        let d = self.rank;
        let basis = |i: usize| {
            let mut v = vec![0; d];
            v[i] = 1;
            v
        };
        for i in 0..d {
            let e = basis(i);
            if self.mul(&self.unit, &e) != e || self.mul(&e, &self.unit) != e {
                return Err(Error::BadUnit(i));
            }
        }
        for i in 0..d {
            for j in 0..d {
                let eij = &self.mult[i][j];
                for l in 0..d {
                    let left = self.mul(eij, &basis(l));
                    let right = self.mul(&basis(i), &self.mult[j][l]);
                    if left != right {
                        return Err(Error::NonAssociative(i, j, l));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn from_doc(doc: &RingDoc) -> Result<Arc<Self>> {
        if doc.unit.len() != doc.rank {
            return Err(Error::MalformedSpec(format!(
                "unit has {} coordinates, rank is {}",
                doc.unit.len(),
                doc.rank
            )));
        }
        Self::new(doc.name.clone(), doc.m, doc.unit.clone(), doc.mult.clone())
    }

    pub fn from_json(text: &str) -> Result<Arc<Self>> {
        let doc: RingDoc = serde_json::from_str(text).map_err(|e| Error::MalformedSpec(e.to_string()))?;
        Self::from_doc(&doc)
    }

    pub fn to_doc(&self) -> RingDoc {
        RingDoc {
            name: self.name.clone(),
            m: self.zm.modulus(),
            rank: self.rank,
            unit: self.unit.clone(),
            mult: self.mult.clone(),
        }
    }

    /// Canonical JSON: keys in document order, integers in decimal, no whitespace.
    pub fn canonical_json(&self) -> String {
        serde_json::to_string(&self.to_doc()).expect("ring document serializes")
    }

    pub fn content_hash(&self) -> String {
        hex::encode(Sha256::digest(self.canonical_json().as_bytes()))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn zm(&self) -> &Zm {
        &self.zm
    }

    pub fn modulus(&self) -> u64 {
        self.zm.modulus()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn unit(&self) -> &[u64] {
        &self.unit
    }

    pub fn structure_constants(&self) -> &[Vec<Vector>] {
        &self.mult
    }

    /// `log_p |R|`.
    pub fn size_log(&self) -> u32 {
        self.rank as u32 * self.zm.exponent()
    }

    pub fn size(&self) -> u128 {
        (self.zm.modulus() as u128).pow(self.rank as u32)
    }

    pub fn right_action(&self, j: usize) -> &[Vector] {
        &self.right_actions[j]
    }

    pub fn left_action(&self, j: usize) -> &[Vector] {
        &self.left_actions[j]
    }

    pub fn zero(&self) -> Vector {
        vec![0; self.rank]
    }

    pub fn basis_element(&self, i: usize) -> Vector {
        let mut v = vec![0; self.rank];
        v[i] = 1;
        v
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> Vector {
        self.zm.add_vec(a, b)
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> Vector {
        let zm = &self.zm;
        let mut out = vec![0; self.rank];
        for (i, ai) in a.iter().enumerate() {
            if *ai == 0 {
                continue;
            }
            for (j, bj) in b.iter().enumerate() {
                if *bj == 0 {
                    continue;
                }
                zm.axpy(&mut out, zm.mul(*ai, *bj), &self.mult[i][j]);
            }
        }
        out
    }

    /// All elements, in lexicographic coordinate order.
    pub fn elements(&self) -> Vec<Vector> {
        let m = self.zm.modulus();
        let total = self.size() as usize;
        (0..total)
            .map(|mut idx| {
                let mut v = vec![0; self.rank];
                for slot in v.iter_mut().rev() {
                    *slot = (idx as u64) % m;
                    idx /= m as usize;
                }
                v
            })
            .collect()
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.rank).all(|i| (0..self.rank).all(|j| self.mult[i][j] == self.mult[j][i]))
    }

    /// The opposite ring: same additive data, `e_i *' e_j = e_j * e_i`.
    /// Names toggle an `^op` suffix so the construction is an involution.
    pub fn opposite(&self) -> Arc<FiniteRing> {
        let d = self.rank;
        let mult = (0..d)
            .map(|i| (0..d).map(|j| self.mult[j][i].clone()).collect())
            .collect();
        let name = match self.name.strip_suffix("^op") {
            Some(base) => base.to_string(),
            None => format!("{}^op", self.name),
        };
        FiniteRing::new(name, self.zm.modulus(), self.unit.clone(), mult).expect("opposite of a valid ring is valid")
    }

    /// `n x n` matrices over this ring; basis `E_ab * e_i` at index `(a n + b) rank + i`.
    pub fn matrix_ring(&self, n: usize) -> Result<Arc<FiniteRing>> {
        let d = self.rank;
        let big = n * n * d;
        let idx = |a: usize, b: usize, i: usize| (a * n + b) * d + i;
        let mut mult = vec![vec![vec![0; big]; big]; big];
        for (a, b, c, e) in
            (0..n).flat_map(|a| (0..n).flat_map(move |b| (0..n).flat_map(move |c| (0..n).map(move |e| (a, b, c, e)))))
        {
            if b != c {
                continue;
            }
            for i in 0..d {
                for j in 0..d {
                    for (l, coef) in self.mult[i][j].iter().enumerate() {
                        mult[idx(a, b, i)][idx(c, e, j)][idx(a, e, l)] = *coef;
                    }
                }
            }
        }
        let mut unit = vec![0; big];
        for a in 0..n {
            unit[idx(a, a, 0)..idx(a, a, 0) + d].copy_from_slice(&self.unit);
        }
        FiniteRing::new(format!("M{n}({})", self.name), self.zm.modulus(), unit, mult)
    }

    /// Quotient by the two-sided ideal generated by `gens`. Only prime moduli are
    /// supported, where the quotient is again free over `Z/p`.
    pub fn quotient(&self, gens: &[Vector], name: impl Into<String>) -> Result<Arc<FiniteRing>> {
        let zm = &self.zm;
        if zm.exponent() != 1 {
            return Err(Error::MalformedSpec("quotient rings need a prime modulus".into()));
        }
        let d = self.rank;
        let mut span = crate::zmod::howell(zm, gens.iter().cloned(), d);
        loop {
            let mut rows = span.clone();
            for x in &span {
                for i in 0..d {
                    rows.push(self.mul(x, &self.basis_element(i)));
                    rows.push(self.mul(&self.basis_element(i), x));
                }
            }
            let next = crate::zmod::howell(zm, rows, d);
            if next == span {
                break;
            }
            span = next;
        }
        let pivots: Vec<usize> = span.iter().map(|r| crate::zmod::pivot_col(r).unwrap()).collect();
        let keep: Vec<usize> = (0..d).filter(|c| !pivots.contains(c)).collect();
        if keep.is_empty() {
            return Err(Error::MalformedSpec("quotient by the whole ring".into()));
        }
        let project = |x: &[u64]| -> Vector {
            let r = crate::zmod::reduce_mod(zm, &span, x);
            keep.iter().map(|&c| r[c]).collect()
        };
        let mult = keep
            .iter()
            .map(|&i| keep.iter().map(|&j| project(&self.mult[i][j])).collect())
            .collect();
        FiniteRing::new(name, zm.modulus(), project(&self.unit), mult)
    }

    /// Elements of the Jacobson radical, if it has been computed.
    pub fn radical_basis(self: &Arc<Self>) -> &[Vector] {
        self.radical
            .get_or_init(|| crate::lattice::compute_jacobson_basis(self))
    }
}

/// Built-in corpus rings.
pub mod fixtures {
    use super::*;

    /// Build a ring from a basis-product rule returning `(coefficient, basis index)` terms.
    fn table(
        m: u64,
        d: usize,
        unit: Vector,
        name: &str,
        prod: impl Fn(usize, usize) -> Vec<(u64, usize)>,
    ) -> Arc<FiniteRing> {
        let mult = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| {
                        let mut v = vec![0; d];
                        for (c, l) in prod(i, j) {
                            v[l] = (v[l] + c) % m;
                        }
                        v
                    })
                    .collect()
            })
            .collect();
        FiniteRing::new(name, m, unit, mult).expect("fixture ring is valid")
    }

    pub fn f2() -> Arc<FiniteRing> {
        table(2, 1, vec![1], "F2", |_, _| vec![(1, 0)])
    }

    pub fn z4() -> Arc<FiniteRing> {
        table(4, 1, vec![1], "Z4", |_, _| vec![(1, 0)])
    }

    pub fn z8() -> Arc<FiniteRing> {
        table(8, 1, vec![1], "Z8", |_, _| vec![(1, 0)])
    }

    /// `F2[x]/(x^2)`, basis `{1, x}`.
    pub fn e2() -> Arc<FiniteRing> {
        table(2, 2, vec![1, 0], "E2", |i, j| match (i, j) {
            (0, j) => vec![(1, j)],
            (i, 0) => vec![(1, i)],
            _ => vec![],
        })
    }

    /// Upper triangular `[[a, (b, c)], [0, a]]` over `Z/2`: basis `{1, u, v}`
    /// with all products of `u, v` zero.
    pub fn r8() -> Arc<FiniteRing> {
        table(2, 3, vec![1, 0, 0], "R8", |i, j| match (i, j) {
            (0, j) => vec![(1, j)],
            (i, 0) => vec![(1, i)],
            _ => vec![],
        })
    }

    /// Upper triangular 2x2 matrices over `F2`, basis `{e11, e12, e22}`.
    pub fn t2() -> Arc<FiniteRing> {
        table(2, 3, vec![1, 0, 1], "T2", |i, j| match (i, j) {
            (0, 0) => vec![(1, 0)],
            (0, 1) => vec![(1, 1)],
            (1, 2) => vec![(1, 1)],
            (2, 2) => vec![(1, 2)],
            _ => vec![],
        })
    }

    /// `F2[x, y]/(x^2, y^2)`, basis `{1, x, y, xy}`.
    pub fn k4() -> Arc<FiniteRing> {
        // monomials as bitmasks: 0 = 1, 1 = x, 2 = y, 3 = xy
        table(2, 4, vec![1, 0, 0, 0], "K4", |i, j| {
            if i & j != 0 {
                vec![]
            } else {
                vec![(1, i | j)]
            }
        })
    }

    /// `F2[x, y]/(x^2, xy, y^2)`, basis `{1, x, y}`.
    pub fn q8bar() -> Arc<FiniteRing> {
        table(2, 3, vec![1, 0, 0], "Q8bar", |i, j| match (i, j) {
            (0, j) => vec![(1, j)],
            (i, 0) => vec![(1, i)],
            _ => vec![],
        })
    }

    /// 2x2 matrices over `F2`, basis `{e11, e12, e21, e22}`.
    pub fn m2f2() -> Arc<FiniteRing> {
        let idx = |r: usize, c: usize| 2 * r + c;
        table(2, 4, vec![1, 0, 0, 1], "M2(F2)", move |i, j| {
            let (a, b) = (i / 2, i % 2);
            let (c, d) = (j / 2, j % 2);
            if b == c {
                vec![(1, idx(a, d))]
            } else {
                vec![]
            }
        })
    }

    pub const CORPUS: [&str; 9] = ["F2", "Z4", "Z8", "E2", "R8", "T2", "K4", "Q8bar", "M2(F2)"];

    pub fn by_name(name: &str) -> Option<Arc<FiniteRing>> {
        let ring = match name {
            "F2" => f2(),
            "Z4" => z4(),
            "Z8" => z8(),
            "E2" => e2(),
            "R8" => r8(),
            "T2" => t2(),
            "K4" => k4(),
            "Q8bar" => q8bar(),
            "M2(F2)" | "M2F2" => m2f2(),
            _ => return None,
        };
        Some(ring)
    }

    pub fn corpus() -> Vec<Arc<FiniteRing>> {
        CORPUS.iter().map(|n| by_name(n).unwrap()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn corpus_rings_validate() {
        for r in corpus() {
            assert!(r.size() >= 2, "{}", r.name());
        }
        assert_eq!(f2().size(), 2);
        assert_eq!(r8().size(), 8);
        assert_eq!(k4().size(), 16);
        assert_eq!(m2f2().size(), 16);
    }

    #[test]
    fn rejects_non_associative_table() {
        // e0 = 1, e1*e1 = e2, e1*e2 = 0 but e2*e1 = e2 breaks (e1 e1) e1 = e1 (e1 e1)
        let d = 3;
        let mut mult = vec![vec![vec![0u64; d]; d]; d];
        for j in 0..d {
            mult[0][j][j] = 1;
            mult[j][0][j] = 1;
        }
        mult[1][1][2] = 1;
        mult[2][1][2] = 1;
        let err = FiniteRing::new("bad", 2, vec![1, 0, 0], mult).unwrap_err();
        assert!(matches!(err, Error::NonAssociative(..)), "{err}");
    }

    #[test]
    fn rejects_bad_unit_and_char() {
        let mult = vec![vec![vec![1u64]]];
        assert!(matches!(
            FiniteRing::new("x", 6, vec![1], mult.clone()),
            Err(Error::CharNotPrimePower(6))
        ));
        assert!(matches!(FiniteRing::new("x", 4, vec![2], mult), Err(Error::BadUnit(0))));
        assert!(matches!(
            FiniteRing::from_json("{\"name\": 3}"),
            Err(Error::MalformedSpec(_))
        ));
    }

    #[test]
    fn canonical_json_round_trip() {
        let r = t2();
        let text = r.canonical_json();
        assert!(text.starts_with("{\"name\":\"T2\",\"m\":2,\"rank\":3,\"unit\":[1,0,1],\"mult\":"));
        let back = FiniteRing::from_json(&text).unwrap();
        assert_eq!(*back, *r);
        assert_eq!(back.canonical_json(), text);
    }

    #[test]
    fn opposite_ring_involution() {
        let r8 = r8();
        assert_eq!(*r8.opposite(), *r8);
        let t = t2();
        let top = t.opposite();
        assert_ne!(top.structure_constants(), t.structure_constants());
        let back = top.opposite();
        assert_eq!(back.structure_constants(), t.structure_constants());
        assert_eq!(back.name(), "T2");
        assert_eq!(back.canonical_json(), t.canonical_json());
    }

    #[test]
    fn matrix_ring_is_noncommutative() {
        assert!(!m2f2().is_commutative());
        assert!(k4().is_commutative());
        let r = m2f2();
        // e12 * e21 = e11
        assert_eq!(r.mul(&[0, 1, 0, 0], &[0, 0, 1, 0]), vec![1, 0, 0, 0]);
    }

    #[test]
    fn constructed_rings() {
        let m = f2().matrix_ring(2).unwrap();
        assert_eq!(*m, *m2f2());
        assert_eq!(z4().matrix_ring(2).unwrap().size(), 256);
        // K4 modulo its socle is the radical-square-zero ring on two generators
        let q = k4().quotient(&[vec![0, 0, 0, 1]], "K4/soc").unwrap();
        assert_eq!(q.structure_constants(), q8bar().structure_constants());
        assert!(z4().quotient(&[vec![2]], "x").is_err());
        // the ideal generated by x in K4 also contains xy
        assert_eq!(k4().quotient(&[vec![0, 1, 0, 0]], "K4/x").unwrap().size(), 4);
    }
}
