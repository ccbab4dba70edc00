//! Named, re-runnable verification suites.
//!
//! Each suite states one claim about subinjectivity / subprojectivity or about
//! ring properties, declares which rings it applies to, and checks the claim
//! on the catalog of a [`Lab`]. Everything quantified over modules is checked
//! only up to the catalog bound, and reports say so.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::sync::{Arc, OnceLock};
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::catalog::Catalog;
use crate::domains::{ClassKey, DomainKind, Lab};
use crate::envelopes::{injective_hull, is_projective};
use crate::error::{Error, Result};
use crate::hom::HomSet;
use crate::lattice::{simple_modules, submodules, DEFAULT_LATTICE_BOUND};
use crate::module::FiniteModule;
use crate::ring::FiniteRing;
use crate::ringprops;

pub const OUT_OF_SCOPE: &str = "OUT_OF_SCOPE";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    /// Must hold; a mismatch is a failure.
    Claim,
    /// Recorded only, never a failure.
    Observation,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub claim: String,
    pub kind: CheckKind,
    pub expected: Value,
    pub observed: Value,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
}

impl Check {
    pub fn expect(claim: impl Into<String>, expected: impl Serialize, observed: impl Serialize) -> Self {
        let expected = serde_json::to_value(expected).expect("serializable");
        let observed = serde_json::to_value(observed).expect("serializable");
        Check {
            claim: claim.into(),
            kind: CheckKind::Claim,
            pass: expected == observed,
            expected,
            observed,
            witness: None,
        }
    }

    pub fn observe(claim: impl Into<String>, observed: impl Serialize) -> Self {
        Check {
            claim: claim.into(),
            kind: CheckKind::Observation,
            expected: Value::Null,
            observed: serde_json::to_value(observed).expect("serializable"),
            pass: true,
            witness: None,
        }
    }

    /// Passes unless the hypothesis holds and the conclusion does not.
    pub fn implies(claim: impl Into<String>, hypothesis: bool, conclusion: bool) -> Self {
        Check {
            claim: claim.into(),
            kind: CheckKind::Claim,
            expected: json!("hypothesis implies conclusion"),
            observed: json!({ "hypothesis": hypothesis, "conclusion": conclusion }),
            pass: !hypothesis || conclusion,
            witness: None,
        }
    }

    pub fn with_witness(mut self, w: Option<Value>) -> Self {
        self.witness = w;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "state", rename_all = "snake_case")]
pub enum SuiteStatus {
    Ran,
    Skipped { reason: String },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite_id: String,
    pub statement: String,
    pub ring: String,
    pub bound: u64,
    pub max_gens: usize,
    pub seed: u64,
    pub status: SuiteStatus,
    pub checks: Vec<Check>,
    pub passed: usize,
    pub failed: usize,
    pub wall_time_ms: u64,
}

impl SuiteReport {
    pub fn is_pass(&self) -> bool {
        self.failed == 0
    }

    pub fn is_skipped(&self) -> bool {
        matches!(self.status, SuiteStatus::Skipped { .. })
    }

    /// The report with timing zeroed, for byte-level comparisons.
    pub fn without_timing(&self) -> Self {
        SuiteReport {
            wall_time_ms: 0,
            ..self.clone()
        }
    }

    pub fn to_table(&self) -> String {
        let mut out = String::new();
        let state = match &self.status {
            SuiteStatus::Ran if self.is_pass() => "PASS".to_string(),
            SuiteStatus::Ran => "FAIL".to_string(),
            SuiteStatus::Skipped { reason } => format!("SKIP ({reason})"),
        };
        let _ = writeln!(
            out,
            "{} [{}] bound={} max_gens={} seed={}: {} ({} passed, {} failed, {} ms)",
            self.suite_id,
            self.ring,
            self.bound,
            self.max_gens,
            self.seed,
            state,
            self.passed,
            self.failed,
            self.wall_time_ms
        );
        for c in &self.checks {
            let mark = match (c.kind, c.pass) {
                (CheckKind::Observation, _) => "  note",
                (_, true) => "  ok  ",
                (_, false) => "  FAIL",
            };
            let _ = write!(out, "{mark} {}: observed {}", c.claim, c.observed);
            if c.kind == CheckKind::Claim {
                let _ = write!(out, ", expected {}", c.expected);
            }
            if let (false, Some(w)) = (c.pass, &c.witness) {
                let _ = write!(out, ", witness {w}");
            }
            out.push('\n');
        }
        out
    }
}

type RunFn = fn(&Ctx) -> Result<Vec<Check>>;
type AppliesFn = fn(&Ctx) -> bool;

pub struct Suite {
    pub id: &'static str,
    pub statement: &'static str,
    /// Human-readable ring prerequisite.
    pub requires: &'static str,
    applies: AppliesFn,
    /// `None` marks a claim about infinite objects that is not checked.
    run: Option<RunFn>,
}

impl Suite {
    pub fn is_out_of_scope(&self) -> bool {
        self.run.is_none()
    }
}

/// Per-run context: the lab plus lazily computed ring-level data.
pub struct Ctx<'a> {
    pub lab: &'a Lab,
    pub ring: Arc<FiniteRing>,
    sier_all: OnceLock<Result<Vec<bool>>>,
    sper_all: OnceLock<Result<Vec<bool>>>,
}

impl<'a> Ctx<'a> {
    pub fn new(lab: &'a Lab) -> Self {
        Ctx {
            lab,
            ring: lab.catalog().ring().clone(),
            sier_all: OnceLock::new(),
            sper_all: OnceLock::new(),
        }
    }

    fn cat(&self) -> &Catalog {
        self.lab.catalog()
    }

    fn all(&self) -> Vec<usize> {
        self.cat().ids().collect()
    }

    fn inj(&self) -> Vec<usize> {
        self.cat().ids_where(|f| f.injective)
    }

    fn proj(&self) -> Vec<usize> {
        self.cat().ids_where(|f| f.projective)
    }

    fn simples(&self) -> Vec<usize> {
        self.cat().ids_where(|f| f.simple)
    }

    fn cyclics(&self) -> Vec<usize> {
        self.cat().ids_where(|f| f.cyclic)
    }

    fn regular(&self) -> FiniteModule {
        FiniteModule::regular(&self.ring)
    }

    fn key(&self, m: &FiniteModule) -> Result<ClassKey> {
        self.lab.key_of(m)
    }

    /// Certified-si.e.r. flag for every catalog class.
    fn sier_all(&self) -> Result<&[bool]> {
        let lab = self.lab;
        let r = self.sier_all.get_or_init(|| {
            self.all()
                .into_iter()
                .map(|m| Ok(lab.sier_verdict(m)?.is_certified()))
                .collect()
        });
        r.as_deref().map_err(|e| Error::InternalInconsistency(e.to_string()))
    }

    fn sper_all(&self) -> Result<&[bool]> {
        let lab = self.lab;
        let r = self.sper_all.get_or_init(|| {
            self.all()
                .into_iter()
                .map(|m| Ok(lab.sper_verdict(m)?.is_certified()))
                .collect()
        });
        r.as_deref().map_err(|e| Error::InternalInconsistency(e.to_string()))
    }

    fn failing(&self, flags: &[bool]) -> Vec<String> {
        flags
            .iter()
            .enumerate()
            .filter(|(_, ok)| !**ok)
            .map(|(i, _)| self.cat().label(i))
            .collect()
    }

    fn labels(&self, ids: &[usize]) -> Vec<String> {
        ids.iter().map(|&i| self.cat().label(i)).collect()
    }

    /// Keys of all submodules of a catalog class.
    fn sub_keys(&self, b: usize) -> Result<BTreeSet<ClassKey>> {
        Ok(self.lab.ses_of(b)?.iter().map(|e| e.a).collect())
    }

    /// Keys of all quotients of a catalog class.
    fn quotient_keys(&self, b: usize) -> Result<BTreeSet<ClassKey>> {
        Ok(self.lab.ses_of(b)?.iter().map(|e| e.c).collect())
    }

    fn in_inv(&self, m: ClassKey) -> Vec<usize> {
        self.lab.domain(m, DomainKind::InInv).members
    }

    fn pr_inv(&self, m: ClassKey) -> Vec<usize> {
        self.lab.domain(m, DomainKind::PrInv).members
    }

    fn sum_of_simples(&self) -> Result<FiniteModule> {
        let mut acc = FiniteModule::zero(&self.ring);
        for s in simple_modules(&self.ring) {
            acc = acc.direct_sum(&s)?;
        }
        Ok(acc)
    }

    /// A lab over the opposite ring with the same bounds, or `None` if the ring
    /// coincides with its opposite.
    fn opposite_lab(&self) -> Result<Option<Lab>> {
        let op = self.ring.opposite();
        if op.structure_constants() == self.ring.structure_constants() {
            return Ok(None);
        }
        let cat = Catalog::build(&op, self.cat().max_size(), self.cat().max_gens())?;
        Ok(Some(Lab::with_seed(cat, self.lab.seed())))
    }
}

fn intersect_all(sets: impl IntoIterator<Item = Vec<usize>>, universe: &[usize]) -> Vec<usize> {
    let mut acc: BTreeSet<usize> = universe.iter().copied().collect();
    for s in sets {
        let s: BTreeSet<usize> = s.into_iter().collect();
        acc = acc.intersection(&s).copied().collect();
    }
    acc.into_iter().collect()
}

fn subset(a: &[usize], b: &[usize]) -> bool {
    a.iter().all(|x| b.contains(x))
}

fn always(_: &Ctx) -> bool {
    true
}

fn is_qf(c: &Ctx) -> bool {
    ringprops::is_qf(&c.ring)
}

fn is_hereditary(c: &Ctx) -> bool {
    ringprops::is_right_hereditary(&c.ring)
}

// ---- suites ----

pub fn suites() -> Vec<Suite> {
    vec![
        Suite {
            id: "extension-closure",
            statement: "For every module N, the subinjectivity and subprojectivity domains of N are closed under extensions.",
            requires: "any ring",
            applies: always,
            run: Some(extension_closure),
        },
        Suite {
            id: "local-non-qf-counterexample",
            statement: "Over a local dual Kasch ring with J(R) = soc(R) that is not QF, R lies in the subinjectivity domains of J(R) and R/J(R) but not of R, so R_R does not reflect subinjective extensions.",
            requires: "local, dual Kasch, not QF, J(R) = soc(R)",
            applies: |c| {
                let reg = c.regular();
                ringprops::is_local(&c.ring)
                    && !ringprops::is_qf(&c.ring)
                    && ringprops::is_dual_kasch(&c.ring)
                    && reg.radical() == reg.socle()
            },
            run: Some(local_non_qf),
        },
        Suite {
            id: "rationals-over-integers",
            statement: "Over the integers, Q is not subprojectively extension-reflecting, witnessed by 0 -> Z -> Q -> Q/Z -> 0.",
            requires: "infinite modules over Z",
            applies: always,
            run: None,
        },
        Suite {
            id: "injectives-and-projectives-reflect",
            statement: "Injective modules reflect subinjective extensions and projective modules reflect subprojective ones; adding an injective (projective) summand preserves the property.",
            requires: "any ring",
            applies: always,
            run: Some(injectives_projectives_reflect),
        },
        Suite {
            id: "hereditary-regular-module",
            statement: "Over a right hereditary noetherian ring, R lies in the subinjectivity domain of N exactly when N is injective, hence R reflects subinjective extensions.",
            requires: "right hereditary",
            applies: is_hereditary,
            run: Some(hereditary_regular),
        },
        Suite {
            id: "direct-sums",
            statement: "Domains are compatible with finite direct sums in both arguments, and reflecting modules are closed under finite direct sums.",
            requires: "any ring",
            applies: always,
            run: Some(direct_sums),
        },
        Suite {
            id: "tibs-reflect",
            statement: "Every test module for injectivity by subinjectivity reflects subinjective extensions.",
            requires: "any ring",
            applies: always,
            run: Some(tibs_reflect),
        },
        Suite {
            id: "reflecting-means-injective-iff-semisimple",
            statement: "Every module reflecting subinjective extensions is injective if and only if R is semisimple.",
            requires: "any ring",
            applies: always,
            run: Some(reflecting_injective_semisimple),
        },
        Suite {
            id: "no-middle-class-fully-reflecting",
            statement: "A ring without subinjective (subprojective) middle class has every module reflecting subinjective (subprojective) extensions.",
            requires: "any ring",
            applies: always,
            run: Some(no_middle_class),
        },
        Suite {
            id: "triangular-and-chain-rings",
            statement: "Upper triangular 2x2 rings over a division ring and artinian chain rings have no subinjective and no subprojective middle class.",
            requires: "artinian chain ring, or 2x2 upper triangular over a field",
            applies: |c| ringprops::is_chain(&c.ring) || is_triangular_over_field(&c.ring),
            run: Some(triangular_chain),
        },
        Suite {
            id: "inside-injective-projective",
            statement: "Submodules of a module that is both injective and projective reflect subinjective extensions; its epimorphic images reflect subprojective ones.",
            requires: "any ring",
            applies: always,
            run: Some(inside_inj_proj),
        },
        Suite {
            id: "self-injective-ideals-and-factors",
            statement: "Over a right self-injective ring, every right ideal reflects subinjective extensions and every cyclic factor of R reflects subprojective ones.",
            requires: "right self-injective",
            applies: is_qf,
            run: Some(self_injective_ideals),
        },
        Suite {
            id: "qf-fully-reflecting",
            statement: "Over a QF ring every right and every left module reflects both subinjective and subprojective extensions.",
            requires: "QF",
            applies: is_qf,
            run: Some(qf_fully_reflecting),
        },
        Suite {
            id: "reflecting-injectivity-criterion",
            statement: "If M reflects subinjective extensions, then M lies in the subinjectivity domains of K and M/K for some K <= M iff M is injective; dually for projectivity.",
            requires: "any ring",
            applies: always,
            run: Some(reflecting_criterion),
        },
        Suite {
            id: "simple-and-cyclic-tests",
            statement: "For a reflecting module, membership in all simple domains equals membership in all finite length domains, and membership in all cyclic domains equals membership in all finitely generated domains.",
            requires: "any ring",
            applies: always,
            run: Some(simple_cyclic_tests),
        },
        Suite {
            id: "semilocal-semisimple-cyclic",
            statement: "Over a semilocal ring a semisimple module is cyclic iff it is an image of R/J(R); sums of nonisomorphic simples are cyclic; for a reflecting R the domain of R/J(R) is the smallest finite length domain.",
            requires: "any finite ring (finite rings are semilocal)",
            applies: always,
            run: Some(semilocal),
        },
        Suite {
            id: "qf-sum-of-simples-indigent",
            statement: "Over a QF ring the direct sum of a complete set of simples is indigent, and its domain is the smallest element of each restricted profile.",
            requires: "QF",
            applies: is_qf,
            run: Some(qf_sum_of_simples),
        },
        Suite {
            id: "qf-domain-intersections",
            statement: "Over a QF ring the intersections of subinjectivity or subprojectivity domains over simple, cyclic, finite length or finitely generated modules all equal the class of injectives, which equals the class of projectives.",
            requires: "QF",
            applies: is_qf,
            run: Some(qf_intersections),
        },
        Suite {
            id: "indigence-criterion",
            statement: "Over a fully reflecting ring, B is indigent iff for every A <= B the domains of A and B/A meet exactly in the injectives; dually for p-indigence.",
            requires: "any ring (hypothesis checked at scale)",
            applies: always,
            run: Some(indigence_criterion),
        },
        Suite {
            id: "fg-vs-cyclic",
            statement: "A reflecting module is FG-injective iff C-injective (FG-projective iff C-projective); over QF rings these notions and injectivity coincide.",
            requires: "any ring",
            applies: always,
            run: Some(fg_vs_cyclic),
        },
        Suite {
            id: "property-q-equivalents",
            statement: "Every finite length module is an image of an injective iff R lies in every finite length domain iff every projective does.",
            requires: "any ring",
            applies: always,
            run: Some(q_equivalents),
        },
        Suite {
            id: "artinian-q-iff-qf",
            statement: "A right artinian ring has every finite length module an image of an injective iff it is QF.",
            requires: "any finite ring",
            applies: always,
            run: Some(artinian_q),
        },
        Suite {
            id: "v-ring-q",
            statement: "Over a right V-ring every finite length module is an image of an injective.",
            requires: "any ring",
            applies: always,
            run: Some(v_ring_q),
        },
        Suite {
            id: "hereditary-q-equivalents",
            statement: "Over a right hereditary ring: images of injectives exhaust finite length modules, R is dual Kasch, and R is a V-ring are equivalent.",
            requires: "right hereditary",
            applies: is_hereditary,
            run: Some(hereditary_q),
        },
        Suite {
            id: "commutative-artinian-kasch",
            statement: "Commutative artinian rings are Kasch and dual Kasch; non-QF ones are dual Kasch without every finite length module being an image of an injective.",
            requires: "commutative",
            applies: |c| c.ring.is_commutative(),
            run: Some(commutative_kasch),
        },
        Suite {
            id: "projective-hull-dual-kasch",
            statement: "If E(R) is projective, R is dual Kasch iff every finite length module is an image of an injective.",
            requires: "E(R_R) projective",
            applies: |c| is_projective(&injective_hull(&c.regular()).hull),
            run: Some(projective_hull),
        },
        Suite {
            id: "morita-invariance",
            statement: "Having every finite length module an image of an injective is invariant under passing to 2x2 matrix rings.",
            requires: "|R| <= 4",
            applies: |c| c.ring.size() <= 4,
            run: Some(morita),
        },
        Suite {
            id: "frobenius-factor-ring",
            statement: "A commutative local Frobenius ring that is not a chain ring has every finite length module an image of an injective, but its factor ring by the socle does not.",
            requires: "commutative, local, QF, not a chain ring",
            applies: |c| {
                c.ring.is_commutative() && ringprops::is_local(&c.ring) && ringprops::is_qf(&c.ring) && !ringprops::is_chain(&c.ring)
            },
            run: Some(frobenius_factor),
        },
        Suite {
            id: "hereditary-domains-closed-under-images",
            statement: "Over a right hereditary ring every subinjectivity domain is closed under homomorphic images.",
            requires: "right hereditary",
            applies: is_hereditary,
            run: Some(hereditary_images),
        },
    ]
}

/// Rank-3 algebra over a prime field with two simples, hereditary and not semisimple.
fn is_triangular_over_field(r: &Arc<FiniteRing>) -> bool {
    r.zm().exponent() == 1
        && r.rank() == 3
        && simple_modules(r).len() == 2
        && !ringprops::is_semisimple(r)
        && ringprops::is_right_hereditary(r)
}

pub fn suite_ids() -> Vec<&'static str> {
    suites().iter().map(|s| s.id).collect()
}

/// Run one suite. Out-of-scope suites report as skipped; suites whose ring
/// prerequisite fails return [`Error::InapplicableSuite`].
pub fn run_suite(id: &str, lab: &Lab) -> Result<SuiteReport> {
    let all = suites();
    let suite = all
        .iter()
        .find(|s| s.id == id)
        .ok_or_else(|| Error::UnknownSuite(id.to_string()))?;
    let ctx = Ctx::new(lab);
    if suite.run.is_some() && !(suite.applies)(&ctx) {
        return Err(Error::InapplicableSuite {
            suite: id.to_string(),
            ring: ctx.ring.name().to_string(),
            reason: format!("requires {}", suite.requires),
        });
    }
    run_in(suite, &ctx)
}

/// Run every suite in order; inapplicable ones are reported as skipped.
pub fn run_all(lab: &Lab) -> Result<Vec<SuiteReport>> {
    let ctx = Ctx::new(lab);
    suites()
        .iter()
        .map(|s| {
            if s.run.is_some() && !(s.applies)(&ctx) {
                Ok(skipped(s, &ctx, format!("inapplicable: requires {}", s.requires)))
            } else {
                run_in(s, &ctx)
            }
        })
        .collect()
}

fn skipped(s: &Suite, ctx: &Ctx, reason: String) -> SuiteReport {
    let cat = ctx.cat();
    SuiteReport {
        suite_id: s.id.to_string(),
        statement: s.statement.to_string(),
        ring: ctx.ring.name().to_string(),
        bound: cat.max_size(),
        max_gens: cat.max_gens(),
        seed: ctx.lab.seed(),
        status: SuiteStatus::Skipped { reason },
        checks: Vec::new(),
        passed: 0,
        failed: 0,
        wall_time_ms: 0,
    }
}

fn run_in(s: &Suite, ctx: &Ctx) -> Result<SuiteReport> {
    let Some(run) = s.run else {
        return Ok(skipped(s, ctx, OUT_OF_SCOPE.to_string()));
    };
    let start = Instant::now();
    let checks = run(ctx)?;
    let failed = checks.iter().filter(|c| !c.pass).count();
    let mut report = skipped(s, ctx, String::new());
    report.status = SuiteStatus::Ran;
    report.passed = checks.len() - failed;
    report.failed = failed;
    report.checks = checks;
    report.wall_time_ms = start.elapsed().as_millis() as u64;
    Ok(report)
}

// ---- suite bodies ----

fn extension_closure(c: &Ctx) -> Result<Vec<Check>> {
    let lab = c.lab;
    c.lab.index_all_ses()?;
    let mut inj_bad = Vec::new();
    let mut proj_bad = Vec::new();
    let mut sequences = 0usize;
    for b in c.all() {
        let seqs = lab.ses_of(b)?;
        sequences += seqs.len();
        for n in c.all() {
            for e in seqs.iter() {
                if lab.subinjective(e.a, n) && lab.subinjective(e.c, n) && !lab.subinjective(b, n) {
                    inj_bad.push(json!({ "n": c.cat().label(n), "b": c.cat().label(b), "sub": e.sub }));
                }
                if lab.subprojective(e.a, n) && lab.subprojective(e.c, n) && !lab.subprojective(b, n) {
                    proj_bad.push(json!({ "n": c.cat().label(n), "b": c.cat().label(b), "sub": e.sub }));
                }
            }
        }
    }
    Ok(vec![
        Check::observe("short exact sequences examined per N", sequences),
        Check::expect("subinjectivity domain extension violations", 0, inj_bad.len())
            .with_witness(inj_bad.first().cloned()),
        Check::expect("subprojectivity domain extension violations", 0, proj_bad.len())
            .with_witness(proj_bad.first().cloned()),
    ])
}

fn local_non_qf(c: &Ctx) -> Result<Vec<Check>> {
    let reg = c.regular();
    let j = reg.radical();
    let (jm, top) = (reg.submodule(&j), reg.quotient_module(&j));
    let (r, jk, tk) = (c.key(&reg)?, c.key(&jm)?, c.key(&top)?);
    let v = c.lab.sier_verdict(r)?;
    let expected = v
        .witnesses
        .iter()
        .find(|w| w.b == r && w.a_class == Some(jk) && w.c_class == Some(tk));
    let mut rechecked = true;
    for w in &v.witnesses {
        rechecked &= c.lab.recheck(&reg, w, true)?;
    }
    Ok(vec![
        Check::expect("R is dual Kasch", true, ringprops::is_dual_kasch(&c.ring)),
        Check::expect("R is QF", false, ringprops::is_qf(&c.ring)),
        Check::expect("R in subinjectivity domain of J(R)", true, c.lab.subinjective(r, jk)),
        Check::expect("R in subinjectivity domain of R/J(R)", true, c.lab.subinjective(r, tk)),
        Check::expect("R in subinjectivity domain of R", false, c.lab.subinjective(r, r)),
        Check::expect("R_R reflects subinjective extensions at scale", false, v.is_certified()),
        Check::expect(
            "counterexample 0 -> J(R) -> R -> R/J(R) -> 0 found",
            true,
            expected.is_some(),
        )
        .with_witness(expected.map(|w| serde_json::to_value(w).unwrap())),
        Check::observe("counterexamples found (one per B)", v.witnesses.len()),
        Check::expect("every counterexample re-verifies from scratch", true, rechecked),
    ])
}

fn injectives_projectives_reflect(c: &Ctx) -> Result<Vec<Check>> {
    let (sier, sper) = (c.sier_all()?, c.sper_all()?);
    let inj_bad: Vec<usize> = c.inj().into_iter().filter(|&i| !sier[i]).collect();
    let proj_bad: Vec<usize> = c.proj().into_iter().filter(|&i| !sper[i]).collect();
    let mut sum_inj_bad = Vec::new();
    let mut sum_proj_bad = Vec::new();
    let max = c.cat().max_size() as u128;
    for m in c.all() {
        let mm = c.cat().class(m);
        for e in c.all() {
            let em = c.cat().class(e);
            if em.is_zero() || mm.size() * em.size() > max {
                continue;
            }
            let f = c.cat().flags(e);
            if f.injective && sier[m] {
                let k = c.key(&mm.direct_sum(em)?)?;
                if !c.lab.sier_verdict(k)?.is_certified() {
                    sum_inj_bad.push(c.labels(&[m, e]));
                }
            }
            if f.projective && sper[m] {
                let k = c.key(&mm.direct_sum(em)?)?;
                if !c.lab.sper_verdict(k)?.is_certified() {
                    sum_proj_bad.push(c.labels(&[m, e]));
                }
            }
        }
    }
    Ok(vec![
        Check::expect(
            "injective classes failing subinjective reflection",
            Vec::<String>::new(),
            c.labels(&inj_bad),
        ),
        Check::expect(
            "projective classes failing subprojective reflection",
            Vec::<String>::new(),
            c.labels(&proj_bad),
        ),
        Check::expect("reflecting M with injective E where M + E fails", 0, sum_inj_bad.len())
            .with_witness(sum_inj_bad.first().map(|x| json!(x))),
        Check::expect(
            "reflecting M with projective P where M + P fails",
            0,
            sum_proj_bad.len(),
        )
        .with_witness(sum_proj_bad.first().map(|x| json!(x))),
    ])
}

fn hereditary_regular(c: &Ctx) -> Result<Vec<Check>> {
    let r = c.key(&c.regular())?;
    let dom = c.lab.domain(r, DomainKind::In).members;
    Ok(vec![
        Check::expect(
            "classes N with R in the domain of N",
            c.labels(&c.inj()),
            c.labels(&dom),
        ),
        Check::expect(
            "R_R reflects subinjective extensions at scale",
            true,
            c.lab.sier_verdict(r)?.is_certified(),
        ),
    ])
}

fn direct_sums(c: &Ctx) -> Result<Vec<Check>> {
    let lab = c.lab;
    let max = c.cat().max_size() as u128;
    let (sier, sper) = (c.sier_all()?, c.sper_all()?);
    let mut bad: Vec<Value> = Vec::new();
    let mut converse = Vec::new();
    let mut pairs = 0usize;
    for x in c.all() {
        for y in x..c.cat().len() {
            let (xm, ym) = (c.cat().class(x), c.cat().class(y));
            if xm.is_zero() || ym.is_zero() || xm.size() * ym.size() > max {
                continue;
            }
            pairs += 1;
            let s = c.key(&xm.direct_sum(ym)?)?;
            for n in c.all() {
                let rows = [
                    (
                        "first argument, subinjective",
                        lab.subinjective(s, n),
                        lab.subinjective(x, n) && lab.subinjective(y, n),
                    ),
                    (
                        "second argument, subinjective",
                        lab.subinjective(n, s),
                        lab.subinjective(n, x) && lab.subinjective(n, y),
                    ),
                    (
                        "first argument, subprojective",
                        lab.subprojective(s, n),
                        lab.subprojective(x, n) && lab.subprojective(y, n),
                    ),
                    (
                        "second argument, subprojective",
                        lab.subprojective(n, s),
                        lab.subprojective(n, x) && lab.subprojective(n, y),
                    ),
                ];
                for (what, sum, both) in rows {
                    if sum != both {
                        bad.push(
                            json!({ "law": what, "x": c.cat().label(x), "y": c.cat().label(y), "n": c.cat().label(n) }),
                        );
                    }
                }
            }
            let (sum_i, sum_p) = (lab.sier_verdict(s)?.is_certified(), lab.sper_verdict(s)?.is_certified());
            if sier[x] && sier[y] && !sum_i {
                bad.push(json!({ "law": "reflecting subinjective", "x": c.cat().label(x), "y": c.cat().label(y) }));
            }
            if sper[x] && sper[y] && !sum_p {
                bad.push(json!({ "law": "reflecting subprojective", "x": c.cat().label(x), "y": c.cat().label(y) }));
            }
            if (sum_i && !(sier[x] && sier[y])) || (sum_p && !(sper[x] && sper[y])) {
                converse.push(c.labels(&[x, y]));
            }
        }
    }
    Ok(vec![
        Check::observe("pairs of nonzero classes with sum within bound", pairs),
        Check::expect("direct sum law violations", 0, bad.len()).with_witness(bad.first().cloned()),
        // a summand that does not reflect can be masked by one with a small domain
        Check::observe(
            "reflecting sums with a non-reflecting summand",
            json!({ "count": converse.len(), "first": converse.first() }),
        ),
    ])
}

fn tibs_reflect(c: &Ctx) -> Result<Vec<Check>> {
    let sier = c.sier_all()?;
    let tibs: Vec<usize> = c.all().into_iter().filter(|&m| c.lab.classify(m).tibs).collect();
    let bad: Vec<usize> = tibs.iter().copied().filter(|&m| !sier[m]).collect();
    Ok(vec![
        Check::observe("test modules at scale", c.labels(&tibs)),
        Check::expect(
            "test modules failing subinjective reflection",
            Vec::<String>::new(),
            c.labels(&bad),
        ),
    ])
}

fn reflecting_injective_semisimple(c: &Ctx) -> Result<Vec<Check>> {
    let sier = c.sier_all()?;
    let all_inj = c.all().into_iter().all(|m| !sier[m] || c.cat().flags(m).injective);
    Ok(vec![Check::expect(
        "every reflecting class is injective",
        ringprops::is_semisimple(&c.ring),
        all_inj,
    )])
}

fn no_middle_class(c: &Ctx) -> Result<Vec<Check>> {
    let rep = c.lab.middle_class_report();
    let (sier, sper) = (c.sier_all()?, c.sper_all()?);
    Ok(vec![
        Check::implies(
            "no subinjective middle class implies every class reflects subinjective extensions",
            rep.no_subinjective_middle_class,
            sier.iter().all(|x| *x),
        ),
        Check::implies(
            "no subprojective middle class implies every class reflects subprojective extensions",
            rep.no_subprojective_middle_class,
            sper.iter().all(|x| *x),
        ),
    ])
}

fn triangular_chain(c: &Ctx) -> Result<Vec<Check>> {
    let rep = c.lab.middle_class_report();
    let (sier, sper) = (c.sier_all()?, c.sper_all()?);
    let middle: Vec<usize> = rep
        .rows
        .iter()
        .filter(|r| !r.injective && !r.indigent)
        .map(|r| r.class)
        .collect();
    let p_middle: Vec<usize> = rep
        .rows
        .iter()
        .filter(|r| !r.projective && !r.p_indigent)
        .map(|r| r.class)
        .collect();
    Ok(vec![
        Check::expect("subinjective middle class", Vec::<String>::new(), c.labels(&middle)),
        Check::expect("subprojective middle class", Vec::<String>::new(), c.labels(&p_middle)),
        Check::expect(
            "classes failing subinjective reflection",
            Vec::<String>::new(),
            c.failing(sier),
        ),
        Check::expect(
            "classes failing subprojective reflection",
            Vec::<String>::new(),
            c.failing(sper),
        ),
    ])
}

fn inside_inj_proj(c: &Ctx) -> Result<Vec<Check>> {
    let both: Vec<usize> = c.cat().ids_where(|f| f.injective && f.projective);
    let mut subs = BTreeSet::new();
    let mut quots = BTreeSet::new();
    for &e in &both {
        subs.extend(c.sub_keys(e)?);
        quots.extend(c.quotient_keys(e)?);
    }
    let mut sub_bad = Vec::new();
    for &k in &subs {
        if !c.lab.sier_verdict(k)?.is_certified() {
            sub_bad.push(k);
        }
    }
    let mut quot_bad = Vec::new();
    for &k in &quots {
        if !c.lab.sper_verdict(k)?.is_certified() {
            quot_bad.push(k);
        }
    }
    Ok(vec![
        Check::observe("classes both injective and projective", c.labels(&both)),
        Check::observe(
            "distinct submodules and images examined",
            json!([subs.len(), quots.len()]),
        ),
        Check::expect("submodules failing subinjective reflection", 0, sub_bad.len()),
        Check::expect("images failing subprojective reflection", 0, quot_bad.len()),
    ])
}

fn self_injective_ideals(c: &Ctx) -> Result<Vec<Check>> {
    let reg = c.regular();
    let ideals = submodules(&reg, DEFAULT_LATTICE_BOUND)?;
    let mut ideal_bad = 0;
    let mut factor_bad = 0;
    for i in &ideals {
        if !c.lab.sier_verdict(c.key(&reg.submodule(i))?)?.is_certified() {
            ideal_bad += 1;
        }
        if !c.lab.sper_verdict(c.key(&reg.quotient_module(i))?)?.is_certified() {
            factor_bad += 1;
        }
    }
    Ok(vec![
        Check::observe("right ideals", ideals.len()),
        Check::expect("right ideals failing subinjective reflection", 0, ideal_bad),
        Check::expect("factors of R failing subprojective reflection", 0, factor_bad),
    ])
}

fn qf_fully_reflecting(c: &Ctx) -> Result<Vec<Check>> {
    let (sier, sper) = (c.sier_all()?, c.sper_all()?);
    let mut checks = vec![
        Check::expect(
            "right modules failing subinjective reflection",
            Vec::<String>::new(),
            c.failing(sier),
        ),
        Check::expect(
            "right modules failing subprojective reflection",
            Vec::<String>::new(),
            c.failing(sper),
        ),
    ];
    match c.opposite_lab()? {
        None => checks.push(Check::observe(
            "left modules",
            "R equals its opposite ring; covered by right modules",
        )),
        Some(op) => {
            let ctx = Ctx::new(&op);
            checks.push(Check::expect(
                "left modules failing subinjective reflection",
                Vec::<String>::new(),
                ctx.failing(ctx.sier_all()?),
            ));
            checks.push(Check::expect(
                "left modules failing subprojective reflection",
                Vec::<String>::new(),
                ctx.failing(ctx.sper_all()?),
            ));
        }
    }
    Ok(checks)
}

fn reflecting_criterion(c: &Ctx) -> Result<Vec<Check>> {
    let (sier, sper) = (c.sier_all()?, c.sper_all()?);
    let mut bad = Vec::new();
    for m in c.all() {
        let seqs = c.lab.ses_of(m)?;
        if sier[m] {
            let some_k = seqs
                .iter()
                .any(|e| c.lab.subinjective(m, e.a) && c.lab.subinjective(m, e.c));
            if some_k != c.cat().flags(m).injective {
                bad.push(json!({ "class": c.cat().label(m), "side": "injective" }));
            }
        }
        if sper[m] {
            let some_k = seqs
                .iter()
                .any(|e| c.lab.subprojective(m, e.a) && c.lab.subprojective(m, e.c));
            if some_k != c.cat().flags(m).projective {
                bad.push(json!({ "class": c.cat().label(m), "side": "projective" }));
            }
        }
    }
    Ok(vec![Check::expect(
        "reflecting classes violating the criterion",
        0,
        bad.len(),
    )
    .with_witness(bad.first().cloned())])
}

fn simple_cyclic_tests(c: &Ctx) -> Result<Vec<Check>> {
    let (sier, sper) = (c.sier_all()?, c.sper_all()?);
    let (all, simples, cyclics) = (c.all(), c.simples(), c.cyclics());
    let mut bad = Vec::new();
    for m in c.all() {
        let inj_on = |ns: &[usize]| ns.iter().all(|&n| c.lab.subinjective(m, n));
        let proj_on = |ns: &[usize]| ns.iter().all(|&n| c.lab.subprojective(m, n));
        if sier[m] && (inj_on(&simples) != inj_on(&all) || inj_on(&cyclics) != inj_on(&all)) {
            bad.push(json!({ "class": c.cat().label(m), "side": "subinjective" }));
        }
        if sper[m] && (proj_on(&simples) != proj_on(&all) || proj_on(&cyclics) != proj_on(&all)) {
            bad.push(json!({ "class": c.cat().label(m), "side": "subprojective" }));
        }
    }
    Ok(vec![Check::expect(
        "reflecting classes where the restricted tests disagree",
        0,
        bad.len(),
    )
    .with_witness(bad.first().cloned())])
}

fn semilocal(c: &Ctx) -> Result<Vec<Check>> {
    let reg = c.regular();
    let top = reg.quotient_module(&reg.radical());
    let mut bad1 = Vec::new();
    for n in c.cat().ids_where(|f| f.semisimple) {
        let nm = c.cat().class(n);
        let hs = HomSet::new(&top, nm)?;
        let epi = hs.elements().iter().any(|f| f.is_surjective());
        if epi != c.cat().flags(n).cyclic {
            bad1.push(c.cat().label(n));
        }
    }
    // sums over subsets of pairwise nonisomorphic simples
    let simples = simple_modules(&c.ring);
    let mut bad2 = 0;
    for mask in 1u32..(1 << simples.len()) {
        let mut acc = FiniteModule::zero(&c.ring);
        for (i, s) in simples.iter().enumerate() {
            if mask & (1 << i) != 0 {
                acc = acc.direct_sum(s)?;
            }
        }
        if !acc.is_cyclic() {
            bad2 += 1;
        }
    }
    let tk = c.key(&top)?;
    let smallest_top = {
        let d = c.in_inv(tk);
        c.all().into_iter().all(|n| subset(&d, &c.in_inv(n)))
    };
    let r = c.key(&reg)?;
    let regular_reflects = c.lab.sier_verdict(r)?.is_certified();
    let all_reflect = c.sier_all()?.iter().all(|x| *x);
    Ok(vec![
        Check::expect(
            "semisimple classes where cyclic differs from image of R/J(R)",
            Vec::<String>::new(),
            bad1,
        ),
        Check::expect("sums of nonisomorphic simples that are not cyclic", 0, bad2),
        Check::implies(
            "every module reflects: domain of R/J(R) is the smallest finite length domain",
            all_reflect,
            smallest_top,
        ),
        Check::observe(
            "R_R reflects (alternative reading of the hypothesis) / domain of R/J(R) smallest",
            json!({ "hypothesis": regular_reflects, "conclusion": smallest_top }),
        ),
    ])
}

fn smallest_in(c: &Ctx, ids: &[usize]) -> Option<String> {
    ids.iter()
        .copied()
        .find(|&a| {
            let da = c.in_inv(a);
            ids.iter().all(|&b| subset(&da, &c.in_inv(b)))
        })
        .map(|a| c.cat().label(a))
}

fn qf_sum_of_simples(c: &Ctx) -> Result<Vec<Check>> {
    let sum = c.sum_of_simples()?;
    let k = c.key(&sum)?;
    let cls = c.lab.classify(k);
    let all = c.all();
    let profiles = json!({
        "simple": smallest_in(c, &c.simples()),
        "cyclic": smallest_in(c, &c.cyclics()),
        "finite_length": smallest_in(c, &all),
        "finitely_generated": smallest_in(c, &all),
    });
    let d = c.in_inv(k);
    let smallest = all.iter().all(|&n| subset(&d, &c.in_inv(n)));
    Ok(vec![
        Check::expect(
            "subinjectivity domain of the sum of simples",
            c.labels(&c.inj()),
            c.labels(&d),
        ),
        Check::expect("sum of simples is indigent", true, cls.indigent),
        Check::expect("sum of simples is p-indigent", true, cls.p_indigent),
        Check::expect(
            "domain of the sum of simples is contained in every catalog domain",
            true,
            smallest,
        ),
        Check::observe("class with the smallest domain in each restricted profile", profiles),
    ])
}

fn qf_intersections(c: &Ctx) -> Result<Vec<Check>> {
    let all = c.all();
    let families: [(&str, Vec<usize>); 4] = [
        ("simple", c.simples()),
        ("cyclic", c.cyclics()),
        ("finite length", all.clone()),
        ("finitely generated", all.clone()),
    ];
    let inj = c.inj();
    let mut checks = vec![Check::expect(
        "injective classes equal projective classes",
        c.labels(&inj),
        c.labels(&c.proj()),
    )];
    for (name, fam) in families.iter() {
        let i = intersect_all(fam.iter().map(|&a| c.in_inv(a)), &all);
        let p = intersect_all(fam.iter().map(|&a| c.pr_inv(a)), &all);
        checks.push(Check::expect(
            format!("intersection of subinjectivity domains over {name} classes"),
            c.labels(&inj),
            c.labels(&i),
        ));
        checks.push(Check::expect(
            format!("intersection of subprojectivity domains over {name} classes"),
            c.labels(&inj),
            c.labels(&p),
        ));
    }
    Ok(checks)
}

fn indigence_criterion(c: &Ctx) -> Result<Vec<Check>> {
    let (sier, sper) = (c.sier_all()?, c.sper_all()?);
    let fully_sier = sier.iter().all(|x| *x);
    let fully_sper = sper.iter().all(|x| *x);
    let all = c.all();
    let (inj, proj) = (c.inj(), c.proj());
    let mut inj_ok = true;
    let mut proj_ok = true;
    let mut witness = None;
    for b in c.all() {
        let seqs = c.lab.ses_of(b)?;
        let indigent = c.in_inv(b) == inj;
        let p_indigent = c.pr_inv(b) == proj;
        let crit = seqs
            .iter()
            .all(|e| intersect_all([c.in_inv(e.a), c.in_inv(e.c)], &all) == inj);
        let p_crit = seqs
            .iter()
            .all(|e| intersect_all([c.pr_inv(e.a), c.pr_inv(e.c)], &all) == proj);
        if indigent != crit {
            inj_ok = false;
            witness.get_or_insert(json!({ "class": c.cat().label(b), "side": "indigent" }));
        }
        if p_indigent != p_crit {
            proj_ok = false;
            witness.get_or_insert(json!({ "class": c.cat().label(b), "side": "p-indigent" }));
        }
    }
    let qf = ringprops::is_qf(&c.ring);
    Ok(vec![
        Check::implies(
            "fully reflecting subinjective: indigence criterion holds",
            fully_sier,
            inj_ok,
        )
        .with_witness(witness.clone()),
        Check::implies(
            "fully reflecting subprojective: p-indigence criterion holds",
            fully_sper,
            proj_ok,
        )
        .with_witness(witness.clone()),
        Check::implies("QF: both criteria hold", qf, inj_ok && proj_ok),
        Check::observe(
            "criteria outcome without hypothesis",
            json!({ "indigence": inj_ok, "p_indigence": proj_ok }),
        ),
    ])
}

fn fg_vs_cyclic(c: &Ctx) -> Result<Vec<Check>> {
    let (sier, sper) = (c.sier_all()?, c.sper_all()?);
    let qf = ringprops::is_qf(&c.ring);
    let mut bad = Vec::new();
    let mut qf_bad = Vec::new();
    for m in c.all() {
        let cls = c.lab.classify(m);
        if (sier[m] && cls.fg_injective != cls.c_injective) || (sper[m] && cls.fg_projective != cls.c_projective) {
            bad.push(c.cat().label(m));
        }
        let notions = [cls.fg_injective, cls.c_injective, cls.fg_projective, cls.c_projective];
        if qf && notions.iter().any(|x| *x != cls.injective) {
            qf_bad.push(c.cat().label(m));
        }
    }
    Ok(vec![
        Check::expect(
            "reflecting classes where FG and C versions differ",
            Vec::<String>::new(),
            bad,
        ),
        Check::implies(
            "QF: FG-/C-injective, FG-/C-projective and injective coincide",
            qf,
            qf_bad.is_empty(),
        ),
    ])
}

fn q_equivalents(c: &Ctx) -> Result<Vec<Check>> {
    let q = ringprops::images_of_injectives(c.cat());
    let r = c.key(&c.regular())?;
    let all = c.all();
    let r_in_all = all.iter().all(|&n| c.lab.subinjective(r, n));
    let proj_in_all = c.proj().iter().all(|&p| all.iter().all(|&n| c.lab.subinjective(p, n)));
    Ok(vec![
        Check::observe("every catalog module is an image of an injective", q),
        Check::expect("R lies in every catalog subinjectivity domain", q, r_in_all),
        Check::expect(
            "every projective class lies in every catalog subinjectivity domain",
            q,
            proj_in_all,
        ),
    ])
}

fn artinian_q(c: &Ctx) -> Result<Vec<Check>> {
    let qf = ringprops::is_qf(&c.ring);
    let direct = ringprops::images_of_injectives(c.cat());
    let checked = ringprops::satisfies_q(&c.ring, c.cat()).map_err(|e| e.to_string());
    Ok(vec![
        Check::expect("every catalog module is an image of an injective", qf, direct),
        Check::expect(
            "cross-checked property agrees with QF",
            json!({ "Ok": qf }),
            json!(checked),
        ),
    ])
}

fn v_ring_q(c: &Ctx) -> Result<Vec<Check>> {
    Ok(vec![Check::implies(
        "V-ring implies every catalog module is an image of an injective",
        ringprops::is_v_ring(&c.ring),
        ringprops::images_of_injectives(c.cat()),
    )])
}

fn hereditary_q(c: &Ctx) -> Result<Vec<Check>> {
    let q = ringprops::images_of_injectives(c.cat());
    Ok(vec![
        Check::expect("dual Kasch agrees", q, ringprops::is_dual_kasch(&c.ring)),
        Check::expect("V-ring agrees", q, ringprops::is_v_ring(&c.ring)),
    ])
}

fn commutative_kasch(c: &Ctx) -> Result<Vec<Check>> {
    let q = ringprops::images_of_injectives(c.cat());
    Ok(vec![
        Check::expect("Kasch", true, ringprops::is_kasch(&c.ring)),
        Check::expect("dual Kasch", true, ringprops::is_dual_kasch(&c.ring)),
        Check::expect(
            "every catalog module is an image of an injective",
            ringprops::is_qf(&c.ring),
            q,
        ),
    ])
}

fn projective_hull(c: &Ctx) -> Result<Vec<Check>> {
    Ok(vec![Check::expect(
        "dual Kasch agrees with every catalog module being an image of an injective",
        ringprops::is_dual_kasch(&c.ring),
        ringprops::images_of_injectives(c.cat()),
    )])
}

fn morita(c: &Ctx) -> Result<Vec<Check>> {
    let m = c.ring.matrix_ring(2)?;
    let mcat = Catalog::build(&m, c.cat().max_size(), 1)?;
    let here = ringprops::images_of_injectives(c.cat());
    let there = ringprops::images_of_injectives(&mcat);
    Ok(vec![
        Check::observe(
            "matrix ring catalog",
            json!({ "ring": m.name(), "classes": mcat.len(), "max_gens": 1 }),
        ),
        Check::expect("property agrees for R and M2(R)", here, there),
        Check::expect(
            "QF agrees for R and M2(R)",
            ringprops::is_qf(&c.ring),
            ringprops::is_qf(&m),
        ),
    ])
}

fn frobenius_factor(c: &Ctx) -> Result<Vec<Check>> {
    let reg = c.regular();
    let soc = reg.socle();
    let f = c.ring.quotient(&soc.basis, format!("{}/soc", c.ring.name()))?;
    let fcat = Catalog::build(&f, c.cat().max_size(), c.cat().max_gens())?;
    Ok(vec![
        Check::expect(
            "R: every catalog module is an image of an injective",
            true,
            ringprops::images_of_injectives(c.cat()),
        ),
        Check::expect("R/soc(R) is QF", false, ringprops::is_qf(&f)),
        Check::expect(
            "R/soc(R): every catalog module is an image of an injective",
            false,
            ringprops::images_of_injectives(&fcat),
        ),
    ])
}

fn hereditary_images(c: &Ctx) -> Result<Vec<Check>> {
    let mut bad = Vec::new();
    for m in c.all() {
        for a in c.in_inv(m) {
            for q in c.quotient_keys(a)? {
                if !c.lab.subinjective(q, m) {
                    bad.push(json!({ "domain_of": c.cat().label(m), "member": c.cat().label(a) }));
                }
            }
        }
    }
    Ok(vec![Check::expect(
        "images leaving a subinjectivity domain",
        0,
        bad.len(),
    )
    .with_witness(bad.first().cloned())])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::fixtures::*;

    #[test]
    fn ids_are_unique() {
        let ids = suite_ids();
        let set: BTreeSet<_> = ids.iter().collect();
        assert_eq!(set.len(), ids.len());
    }

    #[test]
    fn out_of_scope_is_skipped() {
        let lab = Lab::new(Catalog::build(&f2(), 16, 1).unwrap());
        let r = run_suite("rationals-over-integers", &lab).unwrap();
        assert_eq!(
            r.status,
            SuiteStatus::Skipped {
                reason: OUT_OF_SCOPE.into()
            }
        );
        assert!(matches!(run_suite("nope", &lab), Err(Error::UnknownSuite(_))));
        assert!(matches!(
            run_suite("local-non-qf-counterexample", &lab),
            Err(Error::InapplicableSuite { .. })
        ));
    }

    #[test]
    fn z4_all_pass() {
        let lab = Lab::new(Catalog::build(&z4(), 64, 2).unwrap());
        for r in run_all(&lab).unwrap() {
            assert!(r.is_pass(), "{}", r.to_table());
        }
    }
}
