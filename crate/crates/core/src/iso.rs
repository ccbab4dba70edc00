//! Isomorphism testing and iso-invariant fingerprints.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::hom::HomSet;
use crate::lattice::{simple_modules, structural_invariants, StructuralInvariants};
use crate::module::FiniteModule;
use crate::zmod::{self, Vector};

/// Random hom samples tried before the exhaustive search.
const RANDOM_TRIES: usize = 48;

/// Iso-invariant summary: structural invariants plus `log |Hom(S, M)|` and
/// `log |Hom(M, S)|` for each simple `S` in the ring's fixed simple list.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Fingerprint {
    pub structure: StructuralInvariants,
    pub hom_from_simples: Vec<u32>,
    pub hom_to_simples: Vec<u32>,
}

pub fn fingerprint_with(m: &FiniteModule, simples: &[FiniteModule]) -> Fingerprint {
    let from = simples
        .iter()
        .map(|s| HomSet::new(s, m).expect("same ring").size_log())
        .collect();
    let to = simples
        .iter()
        .map(|s| HomSet::new(m, s).expect("same ring").size_log())
        .collect();
    Fingerprint {
        structure: structural_invariants(m),
        hom_from_simples: from,
        hom_to_simples: to,
    }
}

pub fn fingerprint(m: &FiniteModule) -> Fingerprint {
    fingerprint_with(m, &simple_modules(m.ring()))
}

/// Decide `A ≅ B`.
pub fn are_isomorphic(a: &FiniteModule, b: &FiniteModule) -> Result<bool> {
    a.same_ring(b)?;
    if a.size_log() != b.size_log() || a.abelian_type() != b.abelian_type() {
        return Ok(false);
    }
    if a.is_zero() {
        return Ok(true);
    }
    let simples = simple_modules(a.ring());
    let (fa, fb) = (fingerprint_with(a, &simples), fingerprint_with(b, &simples));
    if fa != fb {
        return Ok(false);
    }
    isomorphic_with_equal_fingerprints(a, b, &fa)
}

/// Decide `A ≅ B` for modules already known to share the fingerprint `fp`.
pub fn isomorphic_with_equal_fingerprints(a: &FiniteModule, b: &FiniteModule, fp: &Fingerprint) -> Result<bool> {
    if fp.structure.size_log == 0 {
        return Ok(true);
    }
    // semisimple modules are determined by simple multiplicities, injectives by their socles;
    // both are captured by |Hom(S, -)|
    if fp.structure.radical_series.len() == 2 {
        return Ok(true);
    }
    if crate::envelopes::is_injective(a) && crate::envelopes::is_injective(b) {
        return Ok(true);
    }
    Ok(find_isomorphism(a, b)?.is_some())
}

/// An explicit isomorphism `A -> B` as generator images, if one exists.
pub fn find_isomorphism(a: &FiniteModule, b: &FiniteModule) -> Result<Option<Vec<Vector>>> {
    a.same_ring(b)?;
    if a.size_log() != b.size_log() {
        return Ok(None);
    }
    let hs = HomSet::new(a, b)?;
    let mut rng = ChaCha8Rng::seed_from_u64(0x150);
    for _ in 0..RANDOM_TRIES {
        let f = hs.sample(&mut rng);
        if f.is_injective() {
            return Ok(Some(f.images().to_vec()));
        }
    }
    Ok(Search::new(a, b, &hs).run())
}

struct Search<'a> {
    a: &'a FiniteModule,
    b: &'a FiniteModule,
    nb: usize,
    /// rows of H grouped by the block holding their pivot
    levels: Vec<Vec<Vector>>,
    /// log sizes of g_1 R + ... + g_i R
    prefix_sizes: Vec<u32>,
}

impl<'a> Search<'a> {
    fn new(a: &'a FiniteModule, b: &'a FiniteModule, hs: &HomSet) -> Self {
        let k = a.gens().len();
        let nb = b.dim();
        let mut levels = vec![Vec::new(); k];
        for row in hs.tuple_basis() {
            let c = zmod::pivot_col(row).unwrap();
            levels[c / nb.max(1)].push(row.clone());
        }
        let prefix_sizes = (1..=k).map(|i| a.sub_size_log(&a.generated(&a.gens()[..i]))).collect();
        Search {
            a,
            b,
            nb,
            levels,
            prefix_sizes,
        }
    }

    fn run(&self) -> Option<Vec<Vector>> {
        let k = self.a.gens().len();
        let acc = vec![0; k * self.nb];
        self.descend(0, acc)
    }

    fn images(&self, acc: &[u64], upto: usize) -> Vec<Vector> {
        (0..upto)
            .map(|i| acc[i * self.nb..(i + 1) * self.nb].to_vec())
            .collect()
    }

    fn descend(&self, level: usize, acc: Vector) -> Option<Vec<Vector>> {
        let k = self.levels.len();
        if level == k {
            let imgs = self.images(&acc, k);
            let sub = self.b.generated(&imgs);
            return (self.b.sub_size_log(&sub) == self.b.size_log()).then_some(imgs);
        }
        let zm = self.a.zm();
        let width = k * self.nb;
        let choices = zmod::enumerate_subquotient(zm, &self.levels[level], &[], width);
        let mut tried = std::collections::BTreeSet::new();
        for s in choices {
            let next = zm.add_vec(&acc, &s);
            let bi = self.b.canonical(&next[level * self.nb..(level + 1) * self.nb]);
            if !tried.insert(bi) {
                continue;
            }
            let imgs = self.images(&next, level + 1);
            if self.b.sub_size_log(&self.b.generated(&imgs)) != self.prefix_sizes[level] {
                continue;
            }
            if let Some(found) = self.descend(level + 1, next) {
                return Some(found);
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::fixtures::*;

    #[test]
    fn lines_in_radical_of_r8_are_isomorphic() {
        let r = r8();
        let m = FiniteModule::regular(&r);
        let u = m.submodule(&m.cyclic(&[0, 1, 0]));
        let v = m.submodule(&m.cyclic(&[0, 0, 1]));
        assert!(are_isomorphic(&u, &v).unwrap());
        assert!(find_isomorphism(&u, &v).unwrap().is_some());
    }

    #[test]
    fn z4_not_z2_squared() {
        let r = z4();
        let m = FiniteModule::regular(&r);
        let z2 = m.quotient_module(&m.cyclic(&[2]));
        let z2sq = z2.direct_sum(&z2).unwrap();
        assert!(!are_isomorphic(&m, &z2sq).unwrap());
        assert!(are_isomorphic(&m, &m).unwrap());
    }

    #[test]
    fn reordered_sum_is_isomorphic() {
        let r = t2();
        let m = FiniteModule::regular(&r);
        let q = m.quotient_module(&m.cyclic(&[0, 1, 0]));
        let x = m.direct_sum(&q).unwrap();
        let y = q.direct_sum(&m).unwrap();
        assert!(find_isomorphism(&x, &y).unwrap().is_some());
        assert!(!are_isomorphic(&x, &m.direct_sum(&m).unwrap()).unwrap());
    }
}
