//! Brute-force oracles that work on explicit element tables. They use only
//! module arithmetic (add, act, canonical forms) and never the linear-algebra
//! hom solver, hulls or covers.
#![allow(dead_code)]

use std::collections::{HashMap, HashSet};

use sier_core::lattice::submodules;
use sier_core::{Catalog, FiniteModule};

type Vector = Vec<u64>;

/// A module with its elements listed and indexed.
pub struct Table {
    pub elems: Vec<Vector>,
    pub index: HashMap<Vector, usize>,
}

impl Table {
    pub fn new(m: &FiniteModule) -> Self {
        let elems = m.elements();
        let index = elems.iter().enumerate().map(|(i, e)| (e.clone(), i)).collect();
        Table { elems, index }
    }
}

/// Every homomorphism `a -> b` as the list of images (indices into `b`'s
/// elements) of `a`'s elements.
///
/// Candidates assign an element of `b` to each generator of `a`; a candidate
/// is kept when `sum g_i r_i -> sum y_i r_i` is a well-defined function. Since
/// the tuples `(r_i)` range over all of `R^k`, well-definedness already forces
/// additivity and `R`-linearity.
pub fn all_homs(a: &FiniteModule, b: &FiniteModule) -> Vec<Vec<usize>> {
    let ta = Table::new(a);
    let tb = Table::new(b);
    let gens: Vec<Vector> = a.gens().to_vec();
    let ring = a.ring();
    let relems = ring.elements();
    let k = gens.len();
    if k == 0 {
        return vec![vec![0; ta.elems.len()]];
    }
    // every tuple of ring elements, with the element of `a` it produces
    let mut tuples: Vec<(Vec<usize>, usize)> = Vec::new();
    let mut idx = vec![0usize; k];
    loop {
        let mut x = a.zero_element();
        for (g, &ri) in gens.iter().zip(&idx) {
            x = a.add(&x, &a.act(g, &relems[ri]));
        }
        tuples.push((idx.clone(), ta.index[&a.canonical(&x)]));
        if !bump(&mut idx, relems.len()) {
            break;
        }
    }
    // b.act over the same tuples, memoized per (element of b, ring element)
    let acts: Vec<Vec<usize>> = tb
        .elems
        .iter()
        .map(|y| relems.iter().map(|r| tb.index[&b.act(y, r)]).collect())
        .collect();
    let adds: Vec<Vec<usize>> = tb
        .elems
        .iter()
        .map(|y| tb.elems.iter().map(|z| tb.index[&b.add(y, z)]).collect())
        .collect();
    let zero_b = tb.index[&b.zero_element()];

    let mut out = Vec::new();
    let mut cand = vec![0usize; k];
    loop {
        let mut image = vec![usize::MAX; ta.elems.len()];
        let ok = tuples.iter().all(|(rs, x)| {
            let y = cand
                .iter()
                .zip(rs)
                .fold(zero_b, |acc, (&yi, &ri)| adds[acc][acts[yi][ri]]);
            if image[*x] == usize::MAX {
                image[*x] = y;
                true
            } else {
                image[*x] == y
            }
        });
        if ok {
            out.push(image);
        }
        if !bump(&mut cand, tb.elems.len()) {
            break;
        }
    }
    out
}

fn bump(idx: &mut [usize], base: usize) -> bool {
    for slot in idx.iter_mut() {
        *slot += 1;
        if *slot < base {
            return true;
        }
        *slot = 0;
    }
    false
}

fn is_injective_map(h: &[usize]) -> bool {
    h.iter().collect::<HashSet<_>>().len() == h.len()
}

fn is_surjective_map(h: &[usize], target_size: usize) -> bool {
    h.iter().collect::<HashSet<_>>().len() == target_size
}

/// `|Hom(a, b)|` by enumeration.
pub fn hom_count(a: &FiniteModule, b: &FiniteModule) -> usize {
    all_homs(a, b).len()
}

/// Every map `x -> y` extends along every monomorphism from `x` into a catalog class.
pub fn brute_subinjective(x: &FiniteModule, y: &FiniteModule, cat: &Catalog) -> bool {
    let need = all_homs(x, y).len();
    cat.classes().iter().filter(|c| c.size() >= x.size()).all(|c| {
        let monos: Vec<Vec<usize>> = all_homs(x, c).into_iter().filter(|h| is_injective_map(h)).collect();
        if monos.is_empty() {
            return true;
        }
        let from_c = all_homs(c, y);
        monos.iter().all(|iota| {
            let restricted: HashSet<Vec<usize>> = from_c.iter().map(|g| iota.iter().map(|&e| g[e]).collect()).collect();
            restricted.len() == need
        })
    })
}

/// Every map `y -> x` lifts through every epimorphism from a catalog class onto `x`.
pub fn brute_subprojective(x: &FiniteModule, y: &FiniteModule, cat: &Catalog) -> bool {
    let need = all_homs(y, x).len();
    let xs = x.size() as usize;
    cat.classes().iter().filter(|c| c.size() >= x.size()).all(|c| {
        let epis: Vec<Vec<usize>> = all_homs(c, x)
            .into_iter()
            .filter(|h| is_surjective_map(h, xs))
            .collect();
        if epis.is_empty() {
            return true;
        }
        let into_c = all_homs(y, c);
        epis.iter().all(|pi| {
            let composed: HashSet<Vec<usize>> = into_c.iter().map(|h| h.iter().map(|&e| pi[e]).collect()).collect();
            composed.len() == need
        })
    })
}

/// For every catalog class `C` and every submodule `W <= C`, every map `W -> m`
/// extends to `C`.
pub fn brute_injective(m: &FiniteModule, cat: &Catalog) -> bool {
    cat.classes().iter().all(|c| {
        let tc = Table::new(c);
        let from_c = all_homs(c, m);
        submodules(c, 100_000).expect("small lattice").iter().all(|h| {
            let w = c.submodule(h);
            let tw = Table::new(&w);
            // positions of W's elements inside C's element list
            let pos: Vec<usize> = tw.elems.iter().map(|e| tc.index[&c.canonical(e)]).collect();
            let need = all_homs(&w, m).len();
            let restricted: HashSet<Vec<usize>> = from_c.iter().map(|g| pos.iter().map(|&p| g[p]).collect()).collect();
            restricted.len() == need
        })
    })
}
