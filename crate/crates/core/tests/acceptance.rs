//! Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any failure.
//! Runs without the libtest harness so the lines always reach stdout.

mod common;

use std::sync::Arc;
use std::time::{Duration, Instant};

use sier_core::lattice::submodules;
use sier_core::ring::fixtures::*;
use sier_core::ringprops::{is_dual_kasch, is_qf, is_right_hereditary, is_v_ring, satisfies_q};
use sier_core::{
    are_isomorphic, composition_length, free_cover, injective_hull, injective_hull_seeded, is_injective,
    is_subinjective, is_subprojective, Catalog, DomainKind, FiniteModule, FiniteRing, HomSet, Lab,
};

/// Default catalog scale.
const BOUND: u64 = 64;
const MAX_GENS: usize = 2;
/// Scale of the brute-force oracle comparisons.
const ORACLE_BOUND: u64 = 16;
/// Wall-clock ceilings.
const EXAMPLE_LIMIT: Duration = Duration::from_secs(60);
const ORACLE_LIMIT: Duration = Duration::from_secs(600);
/// Seeds for hull uniqueness.
const HULL_SEEDS: u64 = 5;

type Outcome = Result<String, String>;

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn lab(r: &Arc<FiniteRing>, bound: u64) -> Lab {
    Lab::new(Catalog::build(r, bound, MAX_GENS).expect("catalog builds"))
}

/// Keys of `R`, `J` and `R/J`.
fn distinguished(lab: &Lab, r: &Arc<FiniteRing>) -> (usize, usize, usize) {
    let reg = FiniteModule::regular(r);
    let j = reg.submodule(&reg.radical());
    let top = reg.quotient_module(&reg.radical());
    (
        lab.key_of(&reg).unwrap(),
        lab.key_of(&j).unwrap(),
        lab.key_of(&top).unwrap(),
    )
}

fn local_non_qf_example() -> Outcome {
    let start = Instant::now();
    let r = r8();
    let lab = lab(&r, BOUND);
    let (reg, j, top) = distinguished(&lab, &r);
    ensure(is_dual_kasch(&r), || "R8 should be dual Kasch".into())?;
    ensure(!is_qf(&r), || "R8 should not be QF".into())?;
    ensure(lab.subinjective(reg, j), || "R should lie in the domain of J".into())?;
    ensure(lab.subinjective(reg, top), || {
        "R should lie in the domain of R/J".into()
    })?;
    ensure(!lab.subinjective(reg, reg), || {
        "R should not lie in the domain of R".into()
    })?;
    // the same three memberships straight from the hull criterion, no memo tables
    let m = |k| lab.module(k);
    ensure(
        is_subinjective(&m(reg), &m(j)).unwrap()
            && is_subinjective(&m(reg), &m(top)).unwrap()
            && !is_subinjective(&m(reg), &m(reg)).unwrap(),
        || "hull criterion disagrees with the memoized values".into(),
    )?;
    let small = Catalog::build(&r, ORACLE_BOUND, MAX_GENS).unwrap();
    ensure(!common::brute_subinjective(&m(reg), &m(reg), &small), || {
        "brute force finds no non-extending map R -> R".into()
    })?;
    let v = lab.sier_verdict(reg).unwrap();
    ensure(!v.is_certified(), || "regular module certified".into())?;
    let w = v
        .witnesses
        .iter()
        .find(|w| w.b == reg && w.a_class == Some(j) && w.c_class == Some(top))
        .ok_or("no witness 0 -> J -> R -> R/J -> 0")?;
    ensure(lab.recheck(&m(reg), w, true).unwrap(), || {
        "witness does not recheck".into()
    })?;
    let t = start.elapsed();
    ensure(t < EXAMPLE_LIMIT, || format!("took {t:?}"))?;
    Ok(format!(
        "0 -> J -> R -> R/J -> 0 witnessed and rechecked in {:.1}s",
        t.as_secs_f64()
    ))
}

fn extension_closure() -> Outcome {
    let mut sequences = 0usize;
    for r in [z4(), r8(), t2()] {
        let lab = lab(&r, BOUND);
        lab.index_all_ses().unwrap();
        let ids: Vec<usize> = lab.catalog().ids().collect();
        for &n in &ids {
            for &b in &ids {
                for e in lab.ses_of(b).unwrap().iter() {
                    sequences += 1;
                    if lab.subinjective(e.a, n) && lab.subinjective(e.c, n) && !lab.subinjective(b, n) {
                        return Err(format!(
                            "{}: subinjectivity domain of c{n} not closed at B = c{b}",
                            r.name()
                        ));
                    }
                    if lab.subprojective(e.a, n) && lab.subprojective(e.c, n) && !lab.subprojective(b, n) {
                        return Err(format!(
                            "{}: subprojectivity domain of c{n} not closed at B = c{b}",
                            r.name()
                        ));
                    }
                }
            }
        }
    }
    Ok(format!(
        "Z4, R8, T2 at bound {BOUND}: {sequences} (N, sequence) pairs, 0 violations"
    ))
}

fn qf_rings_fully_reflect() -> Outcome {
    let mut certified = 0usize;
    for r in [z4(), z8(), e2(), k4()] {
        let op = r.opposite();
        let rings = if *op == *r {
            vec![r.clone()]
        } else {
            vec![r.clone(), op]
        };
        for ring in rings {
            let lab = lab(&ring, BOUND);
            for m in lab.catalog().ids() {
                let (si, sp) = (lab.sier_verdict(m).unwrap(), lab.sper_verdict(m).unwrap());
                ensure(si.is_certified() && sp.is_certified(), || {
                    format!("{}: c{m} has a counterexample", ring.name())
                })?;
                certified += 1;
            }
        }
    }
    Ok(format!(
        "{certified} classes over Z4, Z8, E2, K4 (opposites equal or included) certify both ways"
    ))
}

fn qf_intersections() -> Outcome {
    for r in [z4(), k4()] {
        let lab = lab(&r, BOUND);
        let cat = lab.catalog();
        let all: Vec<usize> = cat.ids().collect();
        let inj = cat.ids_where(|f| f.injective);
        let proj = cat.ids_where(|f| f.projective);
        ensure(inj == proj, || {
            format!("{}: injectives differ from projectives", r.name())
        })?;
        let families = [
            ("simple", cat.ids_where(|f| f.simple)),
            ("cyclic", cat.ids_where(|f| f.cyclic)),
            ("finite length", all.clone()),
            ("finitely generated", all.clone()),
        ];
        for kind in [DomainKind::InInv, DomainKind::PrInv] {
            for (name, family) in &families {
                let meet: Vec<usize> = all
                    .iter()
                    .copied()
                    .filter(|x| family.iter().all(|&m| lab.domain(m, kind).members.contains(x)))
                    .collect();
                ensure(meet == inj, || {
                    format!(
                        "{}: {kind:?} over {name} modules gives {meet:?}, expected {inj:?}",
                        r.name()
                    )
                })?;
            }
        }
    }
    Ok("Z4, K4: all eight intersections equal injectives = projectives".into())
}

fn no_middle_class() -> Outcome {
    for r in [t2(), z4()] {
        let lab = lab(&r, BOUND);
        let rep = lab.middle_class_report();
        ensure(
            rep.no_subinjective_middle_class && rep.no_subprojective_middle_class,
            || format!("{}: middle class present", r.name()),
        )?;
        for m in lab.catalog().ids() {
            ensure(
                lab.sier_verdict(m).unwrap().is_certified() && lab.sper_verdict(m).unwrap().is_certified(),
                || format!("{}: c{m} does not reflect", r.name()),
            )?;
        }
    }
    Ok("T2, Z4: no middle class either way, every class reflects both ways".into())
}

fn property_q() -> Outcome {
    let cat = |r: &Arc<FiniteRing>| Catalog::build(r, BOUND, MAX_GENS).unwrap();
    let q = |r: &Arc<FiniteRing>| satisfies_q(r, &cat(r)).map_err(|e| e.to_string());
    ensure(q(&k4())?, || "K4 should satisfy (Q)".into())?;
    ensure(!q(&q8bar())?, || "Q8bar should not satisfy (Q)".into())?;
    ensure(!q(&r8())? && is_dual_kasch(&r8()), || {
        "R8 should be dual Kasch without (Q)".into()
    })?;
    for r in corpus() {
        ensure(q(&r)? == is_qf(&r), || format!("{}: (Q) differs from QF", r.name()))?;
    }
    for r in [t2(), f2(), m2f2()] {
        ensure(is_right_hereditary(&r), || format!("{} should be hereditary", r.name()))?;
        let (a, b, c) = (q(&r)?, is_dual_kasch(&r), is_v_ring(&r));
        ensure(a == b && b == c, || {
            format!("{}: (Q) {a}, dual Kasch {b}, V-ring {c}", r.name())
        })?;
    }
    let m2 = f2().matrix_ring(2).unwrap();
    ensure(*m2 == *m2f2(), || "M2(F2) construction differs from the fixture".into())?;
    ensure(q(&m2)? == q(&f2())?, || "(Q) not Morita invariant on F2".into())?;
    Ok("K4 yes, Q8bar no, R8 no but dual Kasch; (Q) = QF on all 9 rings; hereditary equivalences; M2(F2) ~ F2".into())
}

fn oracles() -> Outcome {
    let start = Instant::now();
    let (mut homs, mut baer, mut inj_exact, mut inj_one_way, mut proj_exact, mut proj_one_way) = (0, 0, 0, 0, 0, 0);
    for r in corpus() {
        let cat = Catalog::build(&r, ORACLE_BOUND, MAX_GENS).unwrap();
        // extensions and epimorphisms are drawn from the larger catalog
        let wide = Catalog::build(&r, BOUND, MAX_GENS).unwrap();
        for x in cat.classes() {
            ensure(is_injective(x) == common::brute_injective(x, &cat), || {
                format!("{}: Baer test disagrees", r.name())
            })?;
            baer += 1;
            let hull_known = wide.identify(&injective_hull(x).hull).unwrap().is_some();
            let cover_known = wide.identify(free_cover(x).source()).unwrap().is_some();
            for y in cat.classes() {
                ensure(
                    HomSet::new(x, y).unwrap().size() == common::hom_count(x, y) as u128,
                    || format!("{}: hom count disagrees", r.name()),
                )?;
                homs += 1;
                let (fast, slow) = (is_subinjective(x, y).unwrap(), common::brute_subinjective(x, y, &wide));
                if hull_known {
                    ensure(fast == slow, || {
                        format!("{}: subinjectivity {fast} vs brute force {slow}", r.name())
                    })?;
                    inj_exact += 1;
                } else {
                    ensure(!fast || slow, || {
                        format!("{}: subinjective but brute force finds a failure", r.name())
                    })?;
                    inj_one_way += 1;
                }
                let (fast, slow) = (
                    is_subprojective(x, y).unwrap(),
                    common::brute_subprojective(x, y, &wide),
                );
                if cover_known {
                    ensure(fast == slow, || {
                        format!("{}: subprojectivity {fast} vs brute force {slow}", r.name())
                    })?;
                    proj_exact += 1;
                } else {
                    ensure(!fast || slow, || {
                        format!("{}: subprojective but brute force finds a failure", r.name())
                    })?;
                    proj_one_way += 1;
                }
            }
        }
    }
    let t = start.elapsed();
    ensure(t < ORACLE_LIMIT, || format!("took {t:?}"))?;
    Ok(format!(
        "modules to {ORACLE_BOUND}, extensions to {BOUND}: {homs} hom counts, {baer} Baer tests, subinjectivity {inj_exact} exact + {inj_one_way} one-way, \
         subprojectivity {proj_exact} exact + {proj_one_way} one-way, {:.1}s",
        t.as_secs_f64()
    ))
}

fn structural_invariants() -> Outcome {
    let mut modules = 0usize;
    let mut sequences = 0usize;
    for r in corpus() {
        let cat = Catalog::build(&r, BOUND, MAX_GENS).unwrap();
        for m in cat.classes() {
            modules += 1;
            let hulls: Vec<FiniteModule> = (0..HULL_SEEDS).map(|s| injective_hull_seeded(m, s).hull).collect();
            for h in &hulls[1..] {
                ensure(are_isomorphic(&hulls[0], h).unwrap(), || {
                    format!("{}: hulls differ across seeds", r.name())
                })?;
            }
            let n = composition_length(m);
            for h in submodules(m, 100_000).unwrap() {
                sequences += 1;
                ensure(
                    composition_length(&m.submodule(&h)) + composition_length(&m.quotient_module(&h)) == n,
                    || format!("{}: length not additive", r.name()),
                )?;
            }
            let dd = m.character_dual().character_dual().rebase(r.clone());
            ensure(are_isomorphic(m, &dd).unwrap(), || {
                format!("{}: double dual not isomorphic", r.name())
            })?;
        }
    }
    Ok(format!("{modules} classes: hulls agree over {HULL_SEEDS} seeds, double duals isomorphic; {sequences} sequences length-additive"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 8] = [
        (
            "local non-QF ring: R does not reflect subinjective extensions",
            local_non_qf_example,
        ),
        ("domains closed under extensions", extension_closure),
        ("QF rings fully reflecting", qf_rings_fully_reflect),
        ("QF domain intersections", qf_intersections),
        ("no middle class", no_middle_class),
        ("property (Q)", property_q),
        ("brute-force oracles", oracles),
        ("structural invariants", structural_invariants),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let outcome = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("criterion {}: PASS  {name} -- {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL  {name} -- {why}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
