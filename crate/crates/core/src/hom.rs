//! Module homomorphisms and the finite abelian group `Hom_R(A, B)`.

use crate::error::{Error, Result};
use crate::module::{FiniteModule, SubmoduleHandle};
use crate::zmod::{self, Vector};

/// An R-linear map, stored as the images of the source's generators.
#[derive(Debug, Clone)]
pub struct ModuleHom {
    source: FiniteModule,
    target: FiniteModule,
    images: Vec<Vector>,
}

impl ModuleHom {
    /// Build a map from generator images, checking that it is well defined.
    pub fn from_images(source: &FiniteModule, target: &FiniteModule, images: Vec<Vector>) -> Result<Self> {
        source.same_ring(target)?;
        if images.len() != source.gens().len() {
            return Err(Error::DimensionMismatch {
                expected: source.gens().len(),
                got: images.len(),
            });
        }
        for b in &images {
            zmod::check_len(b, target.dim())?;
        }
        let hs = HomSet::new(source, target)?;
        let tuple: Vector = images.concat();
        if !zmod::contains(source.zm(), &hs.h, &tuple) {
            return Err(Error::InternalInconsistency(
                "images do not define a homomorphism".into(),
            ));
        }
        Ok(Self::unchecked(source, target, images))
    }

    pub(crate) fn unchecked(source: &FiniteModule, target: &FiniteModule, images: Vec<Vector>) -> Self {
        let images = images.iter().map(|b| target.canonical(b)).collect();
        ModuleHom {
            source: source.clone(),
            target: target.clone(),
            images,
        }
    }

    pub fn identity(m: &FiniteModule) -> Self {
        Self::unchecked(m, m, m.gens().to_vec())
    }

    pub fn zero(source: &FiniteModule, target: &FiniteModule) -> Self {
        Self::unchecked(source, target, vec![target.zero_element(); source.gens().len()])
    }

    /// `W -> M` for a submodule handle of `M`.
    pub fn inclusion(m: &FiniteModule, w: &SubmoduleHandle) -> Self {
        let sub = m.submodule(w);
        let images = sub.gens().to_vec();
        Self::unchecked(&sub, m, images)
    }

    /// `M -> M / W`.
    pub fn projection(m: &FiniteModule, w: &SubmoduleHandle) -> Self {
        let q = m.quotient_module(w);
        Self::unchecked(m, &q, m.gens().to_vec())
    }

    pub fn source(&self) -> &FiniteModule {
        &self.source
    }

    pub fn target(&self) -> &FiniteModule {
        &self.target
    }

    pub fn images(&self) -> &[Vector] {
        &self.images
    }

    pub fn apply(&self, x: &[u64]) -> Vector {
        let c = self.source.coords(x).expect("argument lies in the source module");
        self.target.combine(&self.images, &c)
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &ModuleHom) -> Result<ModuleHom> {
        if self.target.v_basis() != g.source.v_basis() || self.target.u_basis() != g.source.u_basis() {
            return Err(Error::DimensionMismatch {
                expected: g.source.dim(),
                got: self.target.dim(),
            });
        }
        let images = self.images.iter().map(|b| g.apply(b)).collect();
        Ok(Self::unchecked(&self.source, &g.target, images))
    }

    pub fn kernel(&self) -> SubmoduleHandle {
        let zm = self.source.zm();
        let vs = self.source.v_basis();
        let images: Vec<Vector> = vs.iter().map(|x| self.apply(x)).collect();
        let ker = zmod::kernel(zm, &images, self.target.u_basis(), self.target.dim());
        let rows = ker
            .iter()
            .map(|lam| {
                let mut acc = vec![0; self.source.dim()];
                for (c, r) in lam.iter().zip(vs) {
                    zm.axpy(&mut acc, *c, r);
                }
                acc
            })
            .chain(self.source.u_basis().iter().cloned());
        SubmoduleHandle {
            basis: zmod::howell(zm, rows, self.source.dim()),
        }
    }

    pub fn image(&self) -> SubmoduleHandle {
        self.target.generated(&self.images)
    }

    pub fn is_injective(&self) -> bool {
        self.source.sub_size_log(&self.kernel()) == 0
    }

    pub fn is_surjective(&self) -> bool {
        self.target.sub_size_log(&self.image()) == self.target.size_log()
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(|b| self.target.is_zero_element(b))
    }

    pub fn is_iso(&self) -> bool {
        self.source.size_log() == self.target.size_log() && self.is_injective()
    }

    /// Pointwise equality.
    pub fn same_map(&self, other: &ModuleHom) -> bool {
        self.images.len() == other.images.len()
            && self
                .images
                .iter()
                .zip(&other.images)
                .all(|(a, b)| self.target.is_zero_element(&self.target.zm().sub_vec(a, b)))
    }
}

/// `Hom_R(A, B)` as the subquotient `H / U_B^k` of `(Z/m)^{k N_B}`, where `k`
/// is the number of generators of `A` and a tuple in `H` lists their images.
#[derive(Debug, Clone)]
pub struct HomSet {
    source: FiniteModule,
    target: FiniteModule,
    h: Vec<Vector>,
    zero_part: Vec<Vector>,
}

impl HomSet {
    pub fn new(a: &FiniteModule, b: &FiniteModule) -> Result<Self> {
        a.same_ring(b)?;
        let zm = a.zm();
        let k = a.gens().len();
        let nb = b.dim();
        let d = a.ring().rank();
        let vb = b.v_basis();
        let rels = a.relations();
        let place = |i: usize, x: &[u64]| -> Vector {
            let mut v = vec![0; k * nb];
            v[i * nb..(i + 1) * nb].copy_from_slice(x);
            v
        };
        let zero_part: Vec<Vector> = zmod::howell(
            zm,
            (0..k).flat_map(|i| b.u_basis().iter().map(move |u| place(i, u))),
            k * nb,
        );
        // parameters λ_{i,t}: b_i = Σ_t λ_{i,t} v_t
        let params: Vec<(usize, &Vector)> = (0..k).flat_map(|i| vb.iter().map(move |v| (i, v))).collect();
        let lambdas: Vec<Vector> = if rels.is_empty() {
            (0..params.len())
                .map(|s| {
                    let mut e = vec![0; params.len()];
                    e[s] = 1;
                    e
                })
                .collect()
        } else {
            let images: Vec<Vector> = params
                .iter()
                .map(|(i, v)| {
                    rels.iter()
                        .flat_map(|kappa| b.ambient().act(zm, v, &kappa[i * d..(i + 1) * d]))
                        .collect()
                })
                .collect();
            let modulo: Vec<Vector> = (0..rels.len())
                .flat_map(|c| {
                    b.u_basis().iter().map(move |u| {
                        let mut v = vec![0; rels.len() * nb];
                        v[c * nb..(c + 1) * nb].copy_from_slice(u);
                        v
                    })
                })
                .collect();
            zmod::kernel(zm, &images, &modulo, rels.len() * nb)
        };
        let rows = lambdas
            .iter()
            .map(|lam| {
                let mut acc = vec![0; k * nb];
                for (c, (i, v)) in lam.iter().zip(&params) {
                    zm.axpy(&mut acc, *c, &place(*i, v));
                }
                acc
            })
            .chain(zero_part.iter().cloned());
        let h = zmod::howell(zm, rows, k * nb);
        Ok(HomSet {
            source: a.clone(),
            target: b.clone(),
            h,
            zero_part,
        })
    }

    pub fn source(&self) -> &FiniteModule {
        &self.source
    }

    pub fn target(&self) -> &FiniteModule {
        &self.target
    }

    /// Howell basis of the tuple space `H`.
    pub fn tuple_basis(&self) -> &[Vector] {
        &self.h
    }

    /// Howell basis of the tuples representing the zero map.
    pub fn zero_tuples(&self) -> &[Vector] {
        &self.zero_part
    }

    pub fn size_log(&self) -> u32 {
        let zm = self.source.zm();
        zmod::span_log(zm, &self.h) - zmod::span_log(zm, &self.zero_part)
    }

    pub fn size(&self) -> u128 {
        (self.source.zm().prime() as u128).pow(self.size_log())
    }

    pub fn to_hom(&self, tuple: &[u64]) -> ModuleHom {
        let nb = self.target.dim();
        let images = (0..self.source.gens().len())
            .map(|i| tuple[i * nb..(i + 1) * nb].to_vec())
            .collect();
        ModuleHom::unchecked(&self.source, &self.target, images)
    }

    /// Every homomorphism, one per class.
    pub fn elements(&self) -> Vec<ModuleHom> {
        let zm = self.source.zm();
        let k = self.source.gens().len();
        zmod::enumerate_subquotient(zm, &self.h, &self.zero_part, k * self.target.dim())
            .iter()
            .map(|t| self.to_hom(t))
            .collect()
    }

    /// Additive generators of the hom group.
    pub fn generators(&self) -> Vec<ModuleHom> {
        self.h
            .iter()
            .filter(|t| !zmod::contains(self.source.zm(), &self.zero_part, t))
            .map(|t| self.to_hom(t))
            .collect()
    }

    /// Random element drawn uniformly from `H / U_B^k`.
    pub fn sample(&self, rng: &mut impl rand::Rng) -> ModuleHom {
        let zm = self.source.zm();
        let mut acc = vec![0; self.source.gens().len() * self.target.dim()];
        for (row, order) in self.h.iter().zip(zmod::row_orders(zm, &self.h)) {
            let c = rng.gen_range(0..zm.prime().pow(order));
            zm.axpy(&mut acc, c, row);
        }
        self.to_hom(&acc)
    }
}

/// `Hom_R(A, B)`.
pub fn hom_set(a: &FiniteModule, b: &FiniteModule) -> Result<HomSet> {
    HomSet::new(a, b)
}

/// External direct sum with its canonical injections and projections.
#[derive(Debug, Clone)]
pub struct DirectSum {
    pub module: FiniteModule,
    pub injections: [ModuleHom; 2],
    pub projections: [ModuleHom; 2],
}

pub fn direct_sum(a: &FiniteModule, b: &FiniteModule) -> Result<DirectSum> {
    let s = a.direct_sum(b)?;
    let (na, nb) = (a.dim(), b.dim());
    let pad = |x: &[u64], off: usize| {
        let mut v = vec![0; na + nb];
        v[off..off + x.len()].copy_from_slice(x);
        v
    };
    let ia = ModuleHom::unchecked(a, &s, a.gens().iter().map(|g| pad(g, 0)).collect());
    let ib = ModuleHom::unchecked(b, &s, b.gens().iter().map(|g| pad(g, na)).collect());
    let pa = ModuleHom::unchecked(&s, a, s.gens().iter().map(|g| g[..na].to_vec()).collect());
    let pb = ModuleHom::unchecked(&s, b, s.gens().iter().map(|g| g[na..].to_vec()).collect());
    Ok(DirectSum {
        module: s,
        injections: [ia, ib],
        projections: [pa, pb],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::simple_modules;
    use crate::ring::fixtures::*;

    #[test]
    fn hom_counts_over_z8() {
        let r = z8();
        let m = FiniteModule::regular(&r);
        let z2 = m.quotient_module(&m.cyclic(&[2]));
        let z4 = m.quotient_module(&m.cyclic(&[4]));
        assert_eq!(hom_set(&z4, &z2).unwrap().size(), 2);
        assert_eq!(hom_set(&z2, &z4).unwrap().size(), 2);
        assert_eq!(hom_set(&z4, &m).unwrap().size(), 4);
        assert_eq!(hom_set(&m, &m).unwrap().size(), 8);
    }

    #[test]
    fn hom_from_simple_counts_socle() {
        let r = r8();
        let m = FiniteModule::regular(&r);
        let s = &simple_modules(&r)[0];
        assert_eq!(hom_set(s, &m).unwrap().size(), 4);
        assert_eq!(hom_set(&m, s).unwrap().size(), 2);
    }

    #[test]
    fn kernel_image_of_projection() {
        let r = z8();
        let m = FiniteModule::regular(&r);
        let w = m.cyclic(&[4]);
        let p = ModuleHom::projection(&m, &w);
        assert_eq!(p.kernel(), w);
        assert!(p.is_surjective());
        assert!(!p.is_injective());
        let i = ModuleHom::inclusion(&m, &w);
        assert!(i.is_injective());
        assert!(i.then(&p).unwrap().is_zero());
    }

    #[test]
    fn ill_defined_images_rejected() {
        let r = z8();
        let m = FiniteModule::regular(&r);
        let z2 = m.quotient_module(&m.cyclic(&[2]));
        // 1 mod 2 -> 1 in Z/8 is not well defined
        assert!(ModuleHom::from_images(&z2, &m, vec![vec![1]]).is_err());
        assert!(ModuleHom::from_images(&z2, &m, vec![vec![4]]).is_ok());
    }

    #[test]
    fn direct_sum_maps_split() {
        let r = t2();
        let a = FiniteModule::regular(&r);
        let b = simple_modules(&r)[0].clone();
        let ds = direct_sum(&a, &b).unwrap();
        let [ia, ib] = &ds.injections;
        let [pa, pb] = &ds.projections;
        assert!(ia.then(pa).unwrap().same_map(&ModuleHom::identity(&a)));
        assert!(ib.then(pb).unwrap().same_map(&ModuleHom::identity(&b)));
        assert!(ia.then(pb).unwrap().is_zero());
    }
}
