//! Validation of pseudo-dualizing complexes, Bass/Auslander membership oracles,
//! class axioms and bounded round trips, each with a three-valued verdict.

mod base_change;
mod classes;
mod homothety;
mod membership;

pub use base_change::{check_relative_condition_iv, membership_base_change_test, BaseChange, BaseChangeOutcome, ModuleSide};
pub use classes::{
    boundary_term_e, boundary_term_f, check_class_axioms, in_additive_closure, minimal_class_generator_step, GeneratorStep,
};
pub use homothety::{check_dedualizing, check_dualizing, check_homothety};
pub use membership::{
    auslander_membership, auslander_membership_complex, bass_membership, bass_membership_complex,
    bounded_equivalence_roundtrip, ext_vanishing, tor_vanishing, ClassKind, MembershipReport, RoundTrip, Vanishing,
};

use serde::Serialize;

use crate::algebra::{Algebra, BimoduleRep};
use crate::complex::BoundedComplex;
use crate::derived::DerivedContext;
use crate::error::{AlgebraError, ComplexError};
use std::sync::Arc;

/// Why a verdict is exact rather than window-limited.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Certificate {
    /// A projective resolution reached a zero syzygy.
    FiniteResolution { object: String, length: usize },
    /// An injective coresolution reached a zero cosyzygy.
    FiniteCoresolution { object: String, length: usize },
    /// Syzygies (or cosyzygies) repeat up to an explicit isomorphism.
    Periodicity { object: String, offset: usize, period: usize },
    /// Every case generated from a finite sample was examined.
    FiniteSample { object: String, cases: usize },
    /// A single degree lying inside the range where the computation is exact.
    TrustedDegree { object: String, degree: i32 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Verdict {
    PassExact { certificates: Vec<Certificate> },
    /// Passed on the degrees `from..=to`; nothing is claimed outside.
    PassWithinWindow { from: i32, to: i32 },
    Fail { witness: String, certificates: Vec<Certificate> },
    /// Neither a pass nor a failure could be established within the window.
    WindowExhausted { reason: String },
}

impl Verdict {
    pub fn exact(certificates: Vec<Certificate>) -> Verdict {
        Verdict::PassExact { certificates }
    }

    pub fn fail(witness: impl Into<String>) -> Verdict {
        Verdict::Fail {
            witness: witness.into(),
            certificates: Vec::new(),
        }
    }

    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::PassExact { .. } | Verdict::PassWithinWindow { .. })
    }

    pub fn is_exact_pass(&self) -> bool {
        matches!(self, Verdict::PassExact { .. })
    }

    pub fn is_fail(&self) -> bool {
        matches!(self, Verdict::Fail { .. })
    }

    pub fn certificates(&self) -> &[Certificate] {
        match self {
            Verdict::PassExact { certificates } | Verdict::Fail { certificates, .. } => certificates,
            _ => &[],
        }
    }

    /// 0 for an exact pass, 1 for a failure, 2 when only window-limited.
    pub fn exit_code(&self) -> i32 {
        match self {
            Verdict::PassExact { .. } => 0,
            Verdict::Fail { .. } => 1,
            _ => 2,
        }
    }

    /// The weakest of several verdicts: any failure wins, then window limits,
    /// and an exact pass keeps every certificate.
    pub fn combine<'a>(verdicts: impl IntoIterator<Item = &'a Verdict>) -> Verdict {
        let mut certs = Vec::new();
        let mut window: Option<(i32, i32)> = None;
        let mut exhausted = None;
        for v in verdicts {
            match v {
                Verdict::Fail { .. } => return v.clone(),
                Verdict::PassExact { certificates } => {
                    for c in certificates {
                        if !certs.contains(c) {
                            certs.push(c.clone());
                        }
                    }
                }
                Verdict::PassWithinWindow { from, to } => {
                    window = Some(match window {
                        None => (*from, *to),
                        Some((a, b)) => (a.max(*from), b.min(*to)),
                    })
                }
                Verdict::WindowExhausted { .. } => {
                    exhausted.get_or_insert_with(|| v.clone());
                }
            }
        }
        if let Some(v) = exhausted {
            return v;
        }
        match window {
            Some((from, to)) => Verdict::PassWithinWindow { from, to },
            None => Verdict::PassExact { certificates: certs },
        }
    }
}

/// One named check inside a report.
#[derive(Clone, Debug, Serialize)]
pub struct AxiomResult {
    pub name: String,
    /// Degrees examined, when the check sweeps degrees.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub degrees: Option<(i32, i32)>,
    pub verdict: Verdict,
}

impl AxiomResult {
    pub fn new(name: impl Into<String>, degrees: Option<(i32, i32)>, verdict: Verdict) -> AxiomResult {
        AxiomResult {
            name: name.into(),
            degrees,
            verdict,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ValidationReport {
    pub check: String,
    pub axioms: Vec<AxiomResult>,
    pub verdict: Verdict,
}

impl ValidationReport {
    pub fn new(check: impl Into<String>, axioms: Vec<AxiomResult>) -> ValidationReport {
        let verdict = Verdict::combine(axioms.iter().map(|a| &a.verdict));
        ValidationReport {
            check: check.into(),
            axioms,
            verdict,
        }
    }

    pub fn passed(&self) -> bool {
        self.verdict.is_pass()
    }

    pub fn axiom(&self, name: &str) -> Option<&AxiomResult> {
        self.axioms.iter().find(|a| a.name == name)
    }

    /// Prepends the axioms of `other` (the overall verdict is recomputed).
    pub fn including(self, other: &ValidationReport) -> ValidationReport {
        let mut axioms = other.axioms.clone();
        axioms.extend(self.axioms);
        ValidationReport::new(self.check, axioms)
    }
}

/// A finite complex of `A`-`B` bimodules with declared support bounds `[-d1, d2]`,
/// together with its cached resolutions.
#[derive(Debug)]
pub struct PseudoDualizingCandidate {
    ctx: DerivedContext,
    d1: i32,
    d2: i32,
}

impl PseudoDualizingCandidate {
    pub fn new(l: BoundedComplex, d1: i32, d2: i32) -> Result<PseudoDualizingCandidate, ComplexError> {
        if let Some((lo, hi)) = l.support() {
            if lo < -d1 || hi > d2 {
                return Err(AlgebraError::Malformed(format!(
                    "complex occupies degrees {lo}..={hi}, outside the declared [-{d1}, {d2}]"
                ))
                .into());
            }
        }
        Ok(PseudoDualizingCandidate {
            ctx: DerivedContext::new(l),
            d1,
            d2,
        })
    }

    /// The candidate with the tightest bounds around the support.
    pub fn tight(l: BoundedComplex) -> PseudoDualizingCandidate {
        let (lo, hi) = l.support().unwrap_or((0, 0));
        PseudoDualizingCandidate {
            ctx: DerivedContext::new(l),
            d1: -lo.min(0),
            d2: hi.max(0),
        }
    }

    /// `A` as an `A`-`A` bimodule in degree zero.
    pub fn regular(a: Arc<Algebra>) -> PseudoDualizingCandidate {
        PseudoDualizingCandidate::tight(BoundedComplex::concentrated(BimoduleRep::regular(a), 0))
    }

    pub fn complex(&self) -> &BoundedComplex {
        self.ctx.complex()
    }

    pub fn context(&self) -> &DerivedContext {
        &self.ctx
    }

    pub fn d1(&self) -> i32 {
        self.d1
    }

    pub fn d2(&self) -> i32 {
        self.d2
    }

    pub fn left_algebra(&self) -> &Arc<Algebra> {
        self.complex().left_algebra()
    }

    pub fn right_algebra(&self) -> &Arc<Algebra> {
        self.complex().right_algebra()
    }

    pub(crate) fn support(&self) -> (i32, i32) {
        self.complex().support().unwrap_or((0, 0))
    }
}

#[cfg(test)]
mod tests;
