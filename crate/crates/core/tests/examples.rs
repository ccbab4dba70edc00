mod common;

use sier_core::lattice::submodules;
use sier_core::ring::fixtures::*;
use sier_core::{
    composition_length, is_subprojective, short_exact_sequences, simple_modules, CacheStatus, Catalog, Error,
    FiniteModule, FiniteRing, Lab,
};

fn lattice_size(m: &FiniteModule) -> usize {
    submodules(m, 10_000).unwrap().len()
}

#[test]
fn ring_construction() {
    assert_eq!(f2().size(), 2);
    let r = r8();
    assert_eq!(r.size(), 8);
    assert!(r.is_commutative());
    // e1 e1 = e2, e2 e1 = e1, everything else zero: (e1 e1) e1 = e1 but e1 (e1 e1) = 0
    let nonassoc = FiniteRing::new(
        "nonassoc",
        2,
        vec![0, 0, 1],
        vec![
            vec![vec![0, 1, 0], vec![0, 0, 0], vec![1, 0, 0]],
            vec![vec![1, 0, 0], vec![0, 0, 0], vec![0, 1, 0]],
            vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]],
        ],
    );
    assert!(matches!(nonassoc, Err(Error::NonAssociative(..))));
}

#[test]
fn radicals_and_simples() {
    let reg = FiniteModule::regular(&f2());
    assert!(reg.is_simple());
    assert!(reg.is_zero_sub(&reg.radical()));

    let reg = FiniteModule::regular(&r8());
    assert_eq!(reg.sub_size_log(&reg.radical()), 2);
    assert_eq!(reg.radical(), reg.generated(&[vec![0, 1, 0], vec![0, 0, 1]]));
    let top = reg.quotient_module(&reg.radical());
    assert!(top.is_simple());
    assert_eq!(simple_modules(&r8()).len(), 1);

    // Z4: the radical is {0, 2}, the intersection of all maximal ideals found by brute force
    let z = z4();
    let reg = FiniteModule::regular(&z);
    let maximal: Vec<u64> = (0..4u64)
        .filter(|&x| {
            let ideal: Vec<u64> = (0..4).map(|r| x * r % 4).collect();
            let size = ideal.iter().collect::<std::collections::HashSet<_>>().len();
            size == 2
        })
        .collect();
    assert_eq!(maximal, vec![2]);
    assert_eq!(reg.radical(), reg.generated(&[vec![2]]));

    assert_eq!(simple_modules(&t2()).len(), 2);
}

#[test]
fn lattices() {
    let s = simple_modules(&r8()).remove(0);
    assert_eq!(lattice_size(&s), 2);
    assert_eq!(lattice_size(&FiniteModule::regular(&r8())), 6);
    let z = z4();
    let reg = FiniteModule::regular(&z);
    let z2 = reg.quotient_module(&reg.radical());
    assert_eq!(lattice_size(&reg.direct_sum(&z2).unwrap()), 8);
    assert_eq!(composition_length(&FiniteModule::regular(&k4())), 4);
}

#[test]
fn short_exact_sequences_per_submodule() {
    let s = simple_modules(&r8()).remove(0);
    let ses = short_exact_sequences(&s, 100).unwrap();
    assert_eq!(ses.len(), 2);
    let reg = FiniteModule::regular(&r8());
    let ses = short_exact_sequences(&reg, 100).unwrap();
    assert_eq!(ses.len(), 6);
    let zero = &ses.iter().find(|e| e.a.is_zero()).unwrap();
    assert!(zero.projection.is_iso());
}

#[test]
fn opposite_of_triangular_ring_is_valid() {
    let op = t2().opposite();
    assert_eq!(op.size(), 8);
    assert_eq!(*op.opposite(), *t2());
    assert_eq!(simple_modules(&op).len(), 2);
}

#[test]
fn catalog_counts() {
    for (ring, n) in [(f2(), 3), (z4(), 6), (z8(), 10), (r8(), 27), (t2(), 18), (m2f2(), 4)] {
        assert_eq!(Catalog::build(&ring, 64, 2).unwrap().len(), n, "{}", ring.name());
    }
}

#[test]
fn simple_is_subprojective_relative_to_local_regular_module() {
    // the value is whatever the brute-force oracle says; the two must agree
    let r = r8();
    let cat = Catalog::build(&r, 16, 2).unwrap();
    let s = simple_modules(&r).remove(0);
    let reg = FiniteModule::regular(&r);
    let fast = is_subprojective(&reg, &s).unwrap();
    assert_eq!(fast, common::brute_subprojective(&reg, &s, &cat));
    assert!(fast);
}

#[test]
fn cache_round_trip_and_stale_rebuild() {
    let dir = tempfile::tempdir().unwrap();
    let r = r8();
    let (lab, status) = Lab::open(&r, 64, 2, Some(dir.path()), 0).unwrap();
    assert_eq!(status, CacheStatus::Built);
    let reg = lab.key_of(&FiniteModule::regular(&r)).unwrap();
    let cold = lab.sier_verdict(reg).unwrap();
    lab.save(dir.path()).unwrap();

    let (warm_lab, status) = Lab::open(&r, 64, 2, Some(dir.path()), 0).unwrap();
    assert_eq!(status, CacheStatus::Loaded);
    assert!(warm_lab.memo_len() > 0);
    for i in lab.catalog().ids() {
        assert_eq!(lab.catalog().flags(i), warm_lab.catalog().flags(i));
    }
    assert_eq!(warm_lab.sier_verdict(reg).unwrap(), cold);

    // corrupt the stored file: the cache is ignored and rebuilt
    for e in std::fs::read_dir(dir.path()).unwrap() {
        let p = e.unwrap().path();
        let text = std::fs::read_to_string(&p).unwrap();
        std::fs::write(&p, text.replacen("\"version\":", "\"version_old\":", 1)).unwrap();
    }
    let (_, status) = Lab::open(&r, 64, 2, Some(dir.path()), 0).unwrap();
    assert!(matches!(status, CacheStatus::Rebuilt(_)), "{status:?}");
}
