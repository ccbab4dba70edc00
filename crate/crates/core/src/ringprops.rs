//! Ring-level predicates: QF, Kasch and dual Kasch, property (Q), V-rings,
//! hereditary rings.

use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalog::Catalog;
use crate::envelopes::{is_image_of_injective, is_injective, is_projective};
use crate::error::{Error, Result};
use crate::hom::HomSet;
use crate::lattice::{simple_modules, submodules, DEFAULT_LATTICE_BOUND};
use crate::module::FiniteModule;
use crate::ring::FiniteRing;

/// Finite rings are artinian, so QF is self-injectivity of `R_R`.
pub fn is_qf(r: &Arc<FiniteRing>) -> bool {
    is_injective(&FiniteModule::regular(r))
}

/// Every simple module has a nonzero map into `R_R`.
pub fn is_kasch(r: &Arc<FiniteRing>) -> bool {
    let reg = FiniteModule::regular(r);
    simple_modules(r)
        .iter()
        .all(|s| HomSet::new(s, &reg).expect("same ring").size_log() > 0)
}

/// Every simple module is an image of an injective module.
pub fn is_dual_kasch(r: &Arc<FiniteRing>) -> bool {
    simple_modules(r).iter().all(is_image_of_injective)
}

/// Every simple module is injective.
pub fn is_v_ring(r: &Arc<FiniteRing>) -> bool {
    simple_modules(r).iter().all(is_injective)
}

/// Every right ideal is projective.
pub fn is_right_hereditary(r: &Arc<FiniteRing>) -> bool {
    let reg = FiniteModule::regular(r);
    submodules(&reg, DEFAULT_LATTICE_BOUND)
        .expect("right ideal lattice within bound")
        .iter()
        .all(|i| is_projective(&reg.submodule(i)))
}

pub fn is_semisimple(r: &Arc<FiniteRing>) -> bool {
    r.radical_basis().is_empty()
}

/// `R / J(R)` is a division ring.
pub fn is_local(r: &Arc<FiniteRing>) -> bool {
    let reg = FiniteModule::regular(r);
    reg.quotient_module(&reg.radical()).is_simple()
}

/// The right ideals are totally ordered by inclusion.
pub fn is_chain(r: &Arc<FiniteRing>) -> bool {
    let reg = FiniteModule::regular(r);
    let ideals = submodules(&reg, DEFAULT_LATTICE_BOUND).expect("right ideal lattice within bound");
    ideals.windows(2).all(|w| reg.sub_le(&w[0], &w[1]))
}

/// Trace test only: every catalog module is an image of an injective module.
pub fn images_of_injectives(cat: &Catalog) -> bool {
    let ids: Vec<usize> = cat.ids().collect();
    ids.par_iter().all(|&i| is_image_of_injective(cat.class(i)))
}

/// [`images_of_injectives`], cross-checked against [`is_qf`]. Over a finite ring
/// this must agree with [`is_qf`]; disagreement is reported as an internal error.
pub fn satisfies_q(r: &Arc<FiniteRing>, cat: &Catalog) -> Result<bool> {
    let direct = images_of_injectives(cat);
    let qf = is_qf(r);
    if direct != qf {
        return Err(Error::InternalInconsistency(format!(
            "{}: every module image of injective = {direct}, self-injective = {qf}",
            r.name()
        )));
    }
    Ok(direct)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Flag {
    pub value: bool,
    /// `"exact"` or `"at-scale(<bound>)"`.
    pub provenance: String,
}

impl Flag {
    fn exact(value: bool) -> Self {
        Flag {
            value,
            provenance: "exact".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RingProfile {
    pub ring: String,
    pub size: u128,
    pub is_qf: Flag,
    pub is_kasch: Flag,
    pub is_dual_kasch: Flag,
    pub satisfies_q: Flag,
    pub is_v_ring: Flag,
    pub is_right_hereditary: Flag,
    pub is_semisimple: Flag,
    pub is_local: Flag,
    pub is_chain: Flag,
}

impl RingProfile {
    pub fn compute(r: &Arc<FiniteRing>, cat: &Catalog) -> Result<Self> {
        let q = satisfies_q(r, cat)?;
        Ok(RingProfile {
            ring: r.name().to_string(),
            size: r.size(),
            is_qf: Flag::exact(is_qf(r)),
            is_kasch: Flag::exact(is_kasch(r)),
            is_dual_kasch: Flag::exact(is_dual_kasch(r)),
            satisfies_q: Flag {
                value: q,
                provenance: format!("at-scale({})", cat.max_size()),
            },
            is_v_ring: Flag::exact(is_v_ring(r)),
            is_right_hereditary: Flag::exact(is_right_hereditary(r)),
            is_semisimple: Flag::exact(is_semisimple(r)),
            is_local: Flag::exact(is_local(r)),
            is_chain: Flag::exact(is_chain(r)),
        })
    }

    /// QF ⇒ (Q) ⇒ dual Kasch, and V-ring ⇒ (Q).
    pub fn implications_hold(&self) -> bool {
        (!self.is_qf.value || self.satisfies_q.value)
            && (!self.satisfies_q.value || self.is_dual_kasch.value)
            && (!self.is_v_ring.value || self.satisfies_q.value)
    }

    pub fn flags(&self) -> Vec<(&'static str, &Flag)> {
        vec![
            ("semisimple", &self.is_semisimple),
            ("local", &self.is_local),
            ("chain", &self.is_chain),
            ("qf", &self.is_qf),
            ("kasch", &self.is_kasch),
            ("dual_kasch", &self.is_dual_kasch),
            ("q", &self.satisfies_q),
            ("v_ring", &self.is_v_ring),
            ("right_hereditary", &self.is_right_hereditary),
        ]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::fixtures::*;

    #[test]
    fn basic_flags() {
        assert!(is_qf(&f2()) && is_qf(&k4()) && !is_qf(&r8()));
        assert!(is_dual_kasch(&r8()) && is_dual_kasch(&q8bar()));
        assert!(is_kasch(&f2()) && is_kasch(&r8()) && !is_kasch(&t2()));
        assert!(is_v_ring(&f2()) && is_v_ring(&m2f2()) && !is_v_ring(&r8()));
        assert!(is_right_hereditary(&f2()) && is_right_hereditary(&t2()) && !is_right_hereditary(&z4()));
        assert!(is_local(&r8()) && is_local(&z8()) && !is_local(&t2()) && !is_local(&m2f2()));
        assert!(is_chain(&z8()) && !is_chain(&r8()));
        assert!(is_semisimple(&m2f2()) && !is_semisimple(&z4()));
    }

    #[test]
    fn q_on_small_rings() {
        let k = k4();
        assert!(satisfies_q(&k, &Catalog::build(&k, 16, 1).unwrap()).unwrap());
        let r = r8();
        assert!(!satisfies_q(&r, &Catalog::build(&r, 16, 1).unwrap()).unwrap());
    }
}
