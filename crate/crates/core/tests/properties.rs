use std::sync::OnceLock;

use proptest::prelude::*;
use sier_core::lattice::submodules;
use sier_core::ring::fixtures;
use sier_core::{
    are_isomorphic, composition_length, injective_hull_seeded, is_subinjective, is_subprojective, Catalog,
    FiniteModule, HomSet,
};

fn catalogs() -> &'static Vec<Catalog> {
    static CATS: OnceLock<Vec<Catalog>> = OnceLock::new();
    CATS.get_or_init(|| {
        fixtures::corpus()
            .iter()
            .map(|r| Catalog::build(r, 64, 2).expect("catalog"))
            .collect()
    })
}

fn small(cat: &Catalog, i: usize, limit: u128) -> Option<&FiniteModule> {
    let m = cat.class(i % cat.len());
    (m.size() <= limit).then_some(m)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// `R^2 / K` is in the catalog for every `K <= R^2` small enough.
    #[test]
    fn catalog_is_complete(ring in 0usize..9, coords in prop::collection::vec(0u64..64, 0..12)) {
        let cat = &catalogs()[ring];
        let r = cat.ring();
        let free = FiniteModule::free(r, 2);
        let dim = free.dim();
        let gens: Vec<Vec<u64>> = coords
            .chunks(dim)
            .filter(|c| c.len() == dim)
            .map(|c| c.iter().map(|x| x % r.modulus()).collect())
            .collect();
        let q = free.quotient_module(&free.generated(&gens));
        if q.size() <= cat.max_size() as u128 {
            prop_assert!(cat.identify(&q).unwrap().is_some());
        }
    }

    #[test]
    fn length_is_additive(ring in 0usize..9, i in 0usize..64) {
        let cat = &catalogs()[ring];
        let b = cat.class(i % cat.len());
        let n = composition_length(b);
        for h in submodules(b, 100_000).unwrap() {
            prop_assert_eq!(composition_length(&b.submodule(&h)) + composition_length(&b.quotient_module(&h)), n);
        }
    }

    #[test]
    fn double_dual_is_isomorphic(ring in 0usize..9, i in 0usize..64) {
        let cat = &catalogs()[ring];
        let m = cat.class(i % cat.len());
        let dd = m.character_dual().character_dual().rebase(m.ring().clone());
        prop_assert!(are_isomorphic(m, &dd).unwrap());
    }

    #[test]
    fn hulls_do_not_depend_on_seed(ring in 0usize..9, i in 0usize..64, s in 1u64..1000) {
        let cat = &catalogs()[ring];
        if let Some(m) = small(cat, i, 16) {
            let h0 = injective_hull_seeded(m, 0);
            let hs = injective_hull_seeded(m, s);
            prop_assert!(are_isomorphic(&h0.hull, &hs.hull).unwrap());
            prop_assert!(hs.embedding.is_injective());
            prop_assert!(hs.hull.is_essential(&hs.embedding.image()).unwrap());
        }
    }

    /// Hom sizes multiply across direct sums in either argument.
    #[test]
    fn hom_is_additive(ring in 0usize..9, i in 0usize..64, j in 0usize..64, k in 0usize..64) {
        let cat = &catalogs()[ring];
        if let (Some(a), Some(b), Some(c)) = (small(cat, i, 16), small(cat, j, 16), small(cat, k, 16)) {
            let ab = a.direct_sum(b).unwrap();
            let size = |x: &FiniteModule, y: &FiniteModule| HomSet::new(x, y).unwrap().size();
            prop_assert_eq!(size(&ab, c), size(a, c) * size(b, c));
            prop_assert_eq!(size(c, &ab), size(c, a) * size(c, b));
        }
    }

    /// Domains respect finite direct sums in both arguments.
    #[test]
    fn domains_split_over_sums(ring in 0usize..9, i in 0usize..64, j in 0usize..64, k in 0usize..64) {
        let cat = &catalogs()[ring];
        if let (Some(a1), Some(a2), Some(b)) = (small(cat, i, 16), small(cat, j, 16), small(cat, k, 16)) {
            let a = a1.direct_sum(a2).unwrap();
            for (f, name) in [
                (is_subinjective as fn(&FiniteModule, &FiniteModule) -> sier_core::Result<bool>, "subinjective"),
                (is_subprojective, "subprojective"),
            ] {
                prop_assert_eq!(f(&a, b).unwrap(), f(a1, b).unwrap() && f(a2, b).unwrap(), "{} first", name);
                prop_assert_eq!(f(b, &a).unwrap(), f(b, a1).unwrap() && f(b, a2).unwrap(), "{} second", name);
            }
        }
    }
}

#[test]
fn catalog_has_no_duplicates() {
    for cat in catalogs() {
        for i in cat.ids() {
            for j in cat.ids().filter(|&j| j > i) {
                let (a, b) = (cat.class(i), cat.class(j));
                assert!(!are_isomorphic(a, b).unwrap(), "{}: c{i} and c{j}", cat.ring().name());
            }
        }
    }
}
