//! Injectivity and projectivity tests, the injective cogenerator and injective hulls.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::hom::{HomSet, ModuleHom};
use crate::lattice::{submodules, DEFAULT_LATTICE_BOUND};
use crate::module::{FiniteModule, SubmoduleHandle};
use crate::ring::FiniteRing;
use crate::zmod::{self, Vector};
use std::sync::Arc;

/// `log` of the size of the subgroup of `hs` spanned by the given tuples.
pub(crate) fn spanned_log(hs: &HomSet, tuples: impl IntoIterator<Item = Vector>) -> u32 {
    let zm = hs.source().zm();
    let width = hs.source().gens().len() * hs.target().dim();
    let rows = tuples.into_iter().chain(hs.zero_tuples().iter().cloned());
    let span = zmod::howell(zm, rows, width);
    zmod::span_log(zm, &span) - zmod::span_log(zm, hs.zero_tuples())
}

/// Baer's criterion: every map from a right ideal into `M` extends to `R`.
pub fn is_injective(m: &FiniteModule) -> bool {
    let reg = FiniteModule::regular(m.ring());
    let ideals = submodules(&reg, DEFAULT_LATTICE_BOUND).expect("right ideal lattice within bound");
    ideals.iter().all(|i| extends_from_ideal(m, &reg, i))
}

fn extends_from_ideal(m: &FiniteModule, reg: &FiniteModule, ideal: &SubmoduleHandle) -> bool {
    let sub = reg.submodule(ideal);
    let hs = HomSet::new(&sub, m).expect("same ring");
    // restrictions of x -> m x, for m ranging over additive generators of M
    let restricted = m
        .v_basis()
        .iter()
        .map(|x| sub.gens().iter().flat_map(|g| m.act(x, g)).collect::<Vector>());
    spanned_log(&hs, restricted) == hs.size_log()
}

/// Free module on the generators of `m` with the surjection onto `m`.
pub fn free_cover(m: &FiniteModule) -> ModuleHom {
    let ring = m.ring();
    let d = ring.rank();
    let f = FiniteModule::free(ring, m.gens().len());
    let images = f
        .gens()
        .iter()
        .map(|x| {
            let coeffs: Vec<Vector> = x.chunks(d).map(|c| c.to_vec()).collect();
            m.combine(m.gens(), &coeffs)
        })
        .collect();
    ModuleHom::unchecked(&f, m, images)
}

/// Whether the free cover of `m` splits.
pub fn is_projective(m: &FiniteModule) -> bool {
    if m.is_zero() {
        return true;
    }
    let pi = free_cover(m);
    let to_free = HomSet::new(m, pi.source()).expect("same ring");
    let end = HomSet::new(m, m).expect("same ring");
    let composites: Vec<Vector> = to_free
        .generators()
        .iter()
        .map(|s| s.then(&pi).expect("composable").images().concat())
        .collect();
    let zm = m.zm();
    let width = m.gens().len() * m.dim();
    let span = zmod::howell(
        zm,
        composites.into_iter().chain(end.zero_tuples().iter().cloned()),
        width,
    );
    zmod::contains(zm, &span, &m.gens().concat())
}

/// The character dual of the left regular module, an injective cogenerator.
pub fn injective_cogenerator(ring: &Arc<FiniteRing>) -> FiniteModule {
    let op = ring.opposite();
    FiniteModule::regular(&op).character_dual().rebase(ring.clone())
}

#[derive(Debug, Clone)]
pub struct HullResult {
    pub hull: FiniteModule,
    pub embedding: ModuleHom,
}

/// Injective hull with the default complement order.
pub fn injective_hull(m: &FiniteModule) -> HullResult {
    injective_hull_seeded(m, 0)
}

/// Injective hull; `seed` shuffles the order in which complement pieces are tried.
///
/// `M` is embedded in a power `E0` of the cogenerator, then a complement `C`
/// of the image is grown one simple piece at a time until the image is
/// essential in `E0 / C`. Such a `C` is a maximal complement, hence a direct
/// summand of `E0`, so the quotient is injective.
pub fn injective_hull_seeded(m: &FiniteModule, seed: u64) -> HullResult {
    let e = injective_cogenerator(m.ring());
    let homs = HomSet::new(m, &e).expect("same ring").generators();
    let mut chosen: Vec<ModuleHom> = Vec::new();
    let mut ker = m.whole();
    while !m.is_zero_sub(&ker) {
        let soc = m.submodule(&ker).socle();
        let s = zmod::enumerate_subquotient(m.zm(), &soc.basis, m.u_basis(), m.dim())
            .into_iter()
            .find(|x| !m.is_zero_element(x))
            .expect("nonzero socle");
        let f = homs
            .iter()
            .find(|f| !e.is_zero_element(&f.apply(&s)))
            .expect("the cogenerator separates socle elements")
            .clone();
        ker = m.intersection(&ker, &f.kernel());
        chosen.push(f);
    }
    let e0 = e.direct_power(chosen.len()).expect("same ring");
    let images: Vec<Vector> = (0..m.gens().len())
        .map(|i| chosen.iter().flat_map(|f| f.images()[i].clone()).collect())
        .collect();
    let iota = ModuleHom::unchecked(m, &e0, images);
    let image = iota.image();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut c = e0.zero_submodule();
    loop {
        let q = e0.quotient_module(&c);
        let soc = q.socle();
        let img_c = e0.sum(&image, &c);
        if e0.sub_le(&soc, &img_c) {
            break;
        }
        let mut reps = zmod::enumerate_subquotient(e0.zm(), &soc.basis, &c.basis, e0.dim());
        reps.retain(|x| !e0.sub_contains(&img_c, x));
        reps.shuffle(&mut rng);
        let grown = reps
            .iter()
            .map(|x| {
                let mut gens = c.basis.clone();
                gens.push(x.clone());
                e0.generated(&gens)
            })
            .find(|next| e0.intersection(next, &img_c) == c)
            .expect("a socle piece avoiding the image exists");
        c = grown;
    }
    let hull = e0.quotient_module(&c);
    let embedding = ModuleHom::unchecked(m, &hull, iota.images().to_vec());
    HullResult { hull, embedding }
}

/// Whether the trace of the injective cogenerator in `M` is all of `M`.
pub fn is_image_of_injective(m: &FiniteModule) -> bool {
    let e = injective_cogenerator(m.ring());
    let hs = HomSet::new(&e, m).expect("same ring");
    let imgs: Vec<Vector> = hs.generators().iter().flat_map(|f| f.images().to_vec()).collect();
    m.sub_size_log(&m.generated(&imgs)) == m.size_log()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::are_isomorphic;
    use crate::lattice::simple_modules;
    use crate::ring::fixtures::*;

    #[test]
    fn self_injective_rings() {
        for r in [f2(), z4(), z8(), e2(), k4(), m2f2()] {
            assert!(is_injective(&FiniteModule::regular(&r)), "{}", r.name());
        }
        for r in [r8(), q8bar(), t2()] {
            assert!(!is_injective(&FiniteModule::regular(&r)), "{}", r.name());
        }
    }

    #[test]
    fn projectivity() {
        let r = r8();
        assert!(is_projective(&FiniteModule::free(&r, 2)));
        assert!(!is_projective(&simple_modules(&r)[0]));
        let t = t2();
        let reg = FiniteModule::regular(&t);
        assert!(is_projective(&reg.submodule(&reg.cyclic(&[1, 0, 0]))));
        assert!(is_projective(&reg.submodule(&reg.cyclic(&[0, 0, 1]))));
    }

    #[test]
    fn cogenerators() {
        let z = z4();
        assert!(are_isomorphic(&injective_cogenerator(&z), &FiniteModule::regular(&z)).unwrap());
        let r = r8();
        let e = injective_cogenerator(&r);
        assert_eq!(e.size(), 8);
        assert!(is_injective(&e));
        assert!(!are_isomorphic(&e, &FiniteModule::regular(&r)).unwrap());
    }

    #[test]
    fn hulls() {
        let z = z4();
        let reg = FiniteModule::regular(&z);
        let z2 = reg.submodule(&reg.cyclic(&[2]));
        let h = injective_hull(&z2);
        assert!(are_isomorphic(&h.hull, &reg).unwrap());
        assert!(h.embedding.is_injective());
        let r = r8();
        let s = simple_modules(&r)[0].clone();
        let h = injective_hull(&s);
        assert_eq!(h.hull.size(), 8);
        assert!(is_injective(&h.hull));
    }

    #[test]
    fn images_of_injectives() {
        let q = q8bar();
        assert!(!is_image_of_injective(&FiniteModule::regular(&q)));
        let k = k4();
        assert!(is_image_of_injective(&FiniteModule::regular(&k)));
    }
}
