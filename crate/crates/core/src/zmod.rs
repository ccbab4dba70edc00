//! Linear algebra over `Z/p^k`.
//!
//! Every submodule of `(Z/m)^n` is stored as its Howell normal form: an echelon
//! basis whose pivots are powers of `p`, whose entries above each pivot are
//! reduced modulo that pivot, and which has the Howell property (the rows with
//! pivot column `>= c` span every vector of the submodule whose first `c`
//! coordinates vanish). The form is unique, so submodule equality is plain
//! vector equality.

use crate::error::{Error, Result};

pub type Vector = Vec<u64>;

/// Arithmetic in `Z/m` for a prime power `m = p^k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Zm {
    m: u64,
    p: u64,
    k: u32,
}

impl Zm {
    pub fn new(m: u64) -> Result<Self> {
        if m < 2 {
            return Err(Error::CharNotPrimePower(m));
        }
        let mut p = 2;
        while p * p <= m && m % p != 0 {
            p += 1;
        }
        if m % p != 0 {
            p = m;
        }
        let mut rest = m;
        let mut k = 0;
        while rest % p == 0 {
            rest /= p;
            k += 1;
        }
        if rest != 1 {
            return Err(Error::CharNotPrimePower(m));
        }
        Ok(Zm { m, p, k })
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.m
    }

    #[inline]
    pub fn prime(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn exponent(&self) -> u32 {
        self.k
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.m
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.m - b) % self.m
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        (a * b) % self.m
    }

    #[inline]
    pub fn neg(&self, a: u64) -> u64 {
        (self.m - a) % self.m
    }

    #[inline]
    pub fn reduce(&self, a: i64) -> u64 {
        a.rem_euclid(self.m as i64) as u64
    }

    /// p-adic valuation, with `val(0) = k`.
    pub fn val(&self, mut a: u64) -> u32 {
        a %= self.m;
        if a == 0 {
            return self.k;
        }
        let mut v = 0;
        while a % self.p == 0 {
            a /= self.p;
            v += 1;
        }
        v
    }

    #[inline]
    pub fn pow_p(&self, e: u32) -> u64 {
        self.p.pow(e)
    }

    /// Inverse of a unit (an element prime to `p`).
    pub fn inv(&self, a: u64) -> u64 {
        let (mut old_r, mut r) = (a as i64 % self.m as i64, self.m as i64);
        let (mut old_s, mut s) = (1i64, 0i64);
        while r != 0 {
            let q = old_r / r;
            (old_r, r) = (r, old_r - q * r);
            (old_s, s) = (s, old_s - q * s);
        }
        debug_assert_eq!(old_r, 1, "{a} is not a unit mod {}", self.m);
        self.reduce(old_s)
    }

    pub fn add_vec(&self, a: &[u64], b: &[u64]) -> Vector {
        a.iter().zip(b).map(|(x, y)| self.add(*x, *y)).collect()
    }

    pub fn sub_vec(&self, a: &[u64], b: &[u64]) -> Vector {
        a.iter().zip(b).map(|(x, y)| self.sub(*x, *y)).collect()
    }

    pub fn scale_vec(&self, c: u64, a: &[u64]) -> Vector {
        a.iter().map(|x| self.mul(c, *x)).collect()
    }

    /// `a -= c * b` in place.
    #[inline]
    pub fn axpy_neg(&self, a: &mut [u64], c: u64, b: &[u64]) {
        if c == 0 {
            return;
        }
        let mc = self.neg(c % self.m);
        for (x, y) in a.iter_mut().zip(b) {
            *x = (*x + mc * y) % self.m;
        }
    }

    /// `a += c * b` in place.
    #[inline]
    pub fn axpy(&self, a: &mut [u64], c: u64, b: &[u64]) {
        if c == 0 {
            return;
        }
        for (x, y) in a.iter_mut().zip(b) {
            *x = (*x + c * y) % self.m;
        }
    }

    /// Row vector times matrix.
    pub fn vec_mat(&self, x: &[u64], mat: &[Vector]) -> Vector {
        let cols = mat.first().map_or(0, |r| r.len());
        let mut out = vec![0; cols];
        for (xi, row) in x.iter().zip(mat) {
            if *xi != 0 {
                self.axpy(&mut out, *xi, row);
            }
        }
        out
    }

    /// Additive order exponent of a vector: the least `e` with `p^e x = 0`.
    pub fn order_log(&self, x: &[u64]) -> u32 {
        let v = x.iter().map(|a| self.val(*a)).min().unwrap_or(self.k);
        self.k - v
    }
}

#[inline]
pub fn is_zero(x: &[u64]) -> bool {
    x.iter().all(|a| *a == 0)
}

#[inline]
pub fn pivot_col(x: &[u64]) -> Option<usize> {
    x.iter().position(|a| *a != 0)
}

/// Howell normal form of the span of `rows` (each of length `ncols`).
pub fn howell(zm: &Zm, rows: impl IntoIterator<Item = Vector>, ncols: usize) -> Vec<Vector> {
    let m = zm.modulus();
    let mut pending: Vec<Vector> = rows
        .into_iter()
        .map(|mut r| {
            debug_assert_eq!(r.len(), ncols);
            r.iter_mut().for_each(|a| *a %= m);
            r
        })
        .filter(|r| !is_zero(r))
        .collect();
    let mut out: Vec<Vector> = Vec::new();
    for c in 0..ncols {
        if pending.is_empty() {
            break;
        }
        let best = pending
            .iter()
            .enumerate()
            .filter(|(_, r)| r[c] != 0)
            .min_by_key(|(_, r)| zm.val(r[c]))
            .map(|(i, _)| i);
        let Some(idx) = best else { continue };
        let mut piv = pending.swap_remove(idx);
        let v = zm.val(piv[c]);
        let pv = zm.pow_p(v);
        let unit = piv[c] / pv;
        if unit != 1 {
            let inv = zm.inv(unit);
            piv.iter_mut().for_each(|a| *a = zm.mul(*a, inv));
        }
        debug_assert_eq!(piv[c], pv);
        for r in pending.iter_mut() {
            if r[c] != 0 {
                let q = r[c] / pv;
                zm.axpy_neg(r, q, &piv);
            }
        }
        if v > 0 {
            let ann = zm.scale_vec(zm.pow_p(zm.exponent() - v), &piv);
            if !is_zero(&ann) {
                pending.push(ann);
            }
        }
        pending.retain(|r| !is_zero(r));
        out.push(piv);
    }
    debug_assert!(pending.iter().all(|r| is_zero(r)));
    for i in 0..out.len() {
        let c = pivot_col(&out[i]).unwrap();
        let pv = out[i][c];
        let (head, tail) = out.split_at_mut(i);
        let row = &tail[0];
        for other in head.iter_mut() {
            let q = other[c] / pv;
            if q != 0 {
                zm.axpy_neg(other, q, row);
            }
        }
    }
    out
}

/// Reduce `x` modulo the span of a Howell basis, returning the canonical
/// coset representative.
pub fn reduce_mod(zm: &Zm, basis: &[Vector], x: &[u64]) -> Vector {
    let mut x = x.to_vec();
    for row in basis {
        let c = pivot_col(row).unwrap();
        let q = x[c] / row[c];
        if q != 0 {
            zm.axpy_neg(&mut x, q, row);
        }
    }
    x
}

/// Express `x` as a combination of the Howell rows, if it lies in their span.
pub fn decompose(zm: &Zm, basis: &[Vector], x: &[u64]) -> Option<Vector> {
    let mut x = x.to_vec();
    let mut coeffs = vec![0; basis.len()];
    for (i, row) in basis.iter().enumerate() {
        let c = pivot_col(row).unwrap();
        if x[c] % row[c] != 0 {
            return None;
        }
        let q = x[c] / row[c];
        coeffs[i] = q;
        zm.axpy_neg(&mut x, q, row);
    }
    is_zero(&x).then_some(coeffs)
}

pub fn contains(zm: &Zm, basis: &[Vector], x: &[u64]) -> bool {
    decompose(zm, basis, x).is_some()
}

/// `log_p` of the number of elements in the span of a Howell basis.
pub fn span_log(zm: &Zm, basis: &[Vector]) -> u32 {
    basis
        .iter()
        .map(|r| zm.exponent() - zm.val(r[pivot_col(r).unwrap()]))
        .sum()
}

/// Additive order (as a `p`-exponent) of each Howell row's coefficient range.
pub fn row_orders(zm: &Zm, basis: &[Vector]) -> Vec<u32> {
    basis
        .iter()
        .map(|r| zm.exponent() - zm.val(r[pivot_col(r).unwrap()]))
        .collect()
}

/// Kernel of the map `(Z/m)^a -> (Z/m)^b / span(modulo)` sending the `s`-th
/// unit vector to `images[s]`. Returned as a Howell basis in `(Z/m)^a`.
pub fn kernel(zm: &Zm, images: &[Vector], modulo: &[Vector], b: usize) -> Vec<Vector> {
    let a = images.len();
    let mut rows = Vec::with_capacity(a + modulo.len());
    for (s, img) in images.iter().enumerate() {
        debug_assert_eq!(img.len(), b);
        let mut r = img.clone();
        r.resize(b + a, 0);
        r[b + s] = 1;
        rows.push(r);
    }
    for md in modulo {
        let mut r = md.clone();
        r.resize(b + a, 0);
        rows.push(r);
    }
    let h = howell(zm, rows, b + a);
    let tails: Vec<Vector> = h
        .into_iter()
        .filter(|r| pivot_col(r).unwrap() >= b)
        .map(|r| r[b..].to_vec())
        .collect();
    howell(zm, tails, a)
}

/// Intersection of two submodules given by Howell bases in `(Z/m)^n`.
pub fn intersect(zm: &Zm, a: &[Vector], b: &[Vector], n: usize) -> Vec<Vector> {
    let mut rows = Vec::with_capacity(a.len() + b.len());
    for r in a {
        let mut v = r.clone();
        v.extend_from_slice(r);
        rows.push(v);
    }
    for r in b {
        let mut v = r.clone();
        v.resize(2 * n, 0);
        rows.push(v);
    }
    let h = howell(zm, rows, 2 * n);
    let tails: Vec<Vector> = h
        .into_iter()
        .filter(|r| pivot_col(r).unwrap() >= n)
        .map(|r| r[n..].to_vec())
        .collect();
    howell(zm, tails, n)
}

/// Sizes of `p^i`-torsion layers: returns the abelian invariant factors
/// (as `p`-exponents, descending) of the subquotient `span(v) / span(u)`.
pub fn abelian_type(zm: &Zm, v: &[Vector], u: &[Vector], n: usize) -> Vec<u32> {
    // t[i] = log |{x in V/U : p^i x = 0}|
    let k = zm.exponent();
    let mut t = vec![0u32; k as usize + 1];
    let ulog = span_log(zm, u);
    for i in 1..=k {
        let pi = zm.pow_p(i);
        let images: Vec<Vector> = v.iter().map(|r| zm.scale_vec(pi, r)).collect();
        let ker = kernel(zm, &images, u, n);
        let sub: Vec<Vector> = ker
            .iter()
            .map(|coeffs| {
                let mut acc = vec![0; n];
                for (c, r) in coeffs.iter().zip(v) {
                    zm.axpy(&mut acc, *c, r);
                }
                acc
            })
            .chain(u.iter().cloned())
            .collect();
        t[i as usize] = span_log(zm, &howell(zm, sub, n)) - ulog;
    }
    // number of cyclic factors of order >= p^i is t[i] - t[i-1]
    let mut factors = Vec::new();
    for i in (1..=k as usize).rev() {
        let ge_i = t[i] - t[i - 1];
        let ge_next = if i < k as usize { t[i + 1] - t[i] } else { 0 };
        for _ in 0..(ge_i - ge_next) {
            factors.push(i as u32);
        }
    }
    factors
}

/// Enumerate the elements of `span(v) / span(u)` as canonical representatives,
/// sorted lexicographically.
pub fn enumerate_subquotient(zm: &Zm, v: &[Vector], u: &[Vector], n: usize) -> Vec<Vector> {
    use std::collections::BTreeSet;
    let zero = vec![0u64; n];
    let mut seen: BTreeSet<Vector> = BTreeSet::new();
    seen.insert(zero.clone());
    let mut frontier = vec![zero];
    let gens: Vec<Vector> = v.iter().map(|r| reduce_mod(zm, u, r)).filter(|r| !is_zero(r)).collect();
    while let Some(x) = frontier.pop() {
        for g in &gens {
            let y = reduce_mod(zm, u, &zm.add_vec(&x, g));
            if seen.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    seen.into_iter().collect()
}

pub(crate) fn check_len(x: &[u64], n: usize) -> Result<()> {
    if x.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: x.len(),
        });
    }
    Ok(())
}
