use serde::{Deserialize, Serialize};

use super::membership::{auslander_membership, bass_membership};
use super::{AxiomResult, Certificate, MembershipReport, PseudoDualizingCandidate, ValidationReport, Verdict};
use crate::algebra::{Algebra, BimoduleRep, ModuleRep};
use crate::complex::{tensor_complex, BoundedComplex, ChainMap};
use crate::error::{AlgebraError, ComplexError};
use crate::linalg::ExactMatrix;
use crate::resolution::{ResolutionWindow, Structure};
use std::sync::Arc;

/// A complex `U` of `R`-`S` bimodules with unital algebra maps `A -> R`, `B -> S` and a
/// structural chain map `L -> U` of `A`-`B` bimodule complexes.
#[derive(Clone, Debug)]
pub struct BaseChange {
    u: BoundedComplex,
    a_to_r: ExactMatrix,
    b_to_s: ExactMatrix,
    structural: ChainMap,
}

impl BaseChange {
    /// `a_to_r` and `b_to_s` hold the images of basis elements as columns.
    pub fn new(
        l: &BoundedComplex,
        u: BoundedComplex,
        a_to_r: ExactMatrix,
        b_to_s: ExactMatrix,
        structural: Vec<(i32, ExactMatrix)>,
    ) -> Result<BaseChange, ComplexError> {
        let (a, b) = (l.left_algebra(), l.right_algebra());
        if !a.is_homomorphism_to(u.left_algebra(), &a_to_r) {
            return Err(AlgebraError::NotHomomorphism("A -> R is not a unital algebra map".into()).into());
        }
        if !b.is_homomorphism_to(u.right_algebra(), &b_to_s) {
            return Err(AlgebraError::NotHomomorphism("B -> S is not a unital algebra map".into()).into());
        }
        let restricted = restrict(&u, a, &a_to_r, b, &b_to_s)?;
        let structural = ChainMap::new(l, &restricted, structural)?;
        Ok(BaseChange {
            u,
            a_to_r,
            b_to_s,
            structural,
        })
    }

    pub fn target(&self) -> &BoundedComplex {
        &self.u
    }

    pub fn a_to_r(&self) -> &ExactMatrix {
        &self.a_to_r
    }

    pub fn b_to_s(&self) -> &ExactMatrix {
        &self.b_to_s
    }

    pub fn structural(&self) -> &ChainMap {
        &self.structural
    }
}

fn restrict(
    u: &BoundedComplex,
    a: &Arc<Algebra>,
    f: &ExactMatrix,
    b: &Arc<Algebra>,
    g: &ExactMatrix,
) -> Result<BoundedComplex, ComplexError> {
    let Some((lo, _)) = u.support() else {
        return Ok(BoundedComplex::zero(a.clone(), b.clone()));
    };
    let terms = u
        .terms()
        .map(|(_, t)| t.restrict(a.clone(), f, b.clone(), g))
        .collect::<Result<Vec<_>, _>>()?;
    let diffs = (lo..lo + terms.len() as i32 - 1).map(|n| u.diff(n)).collect();
    BoundedComplex::new(a.clone(), b.clone(), lo, terms, diffs)
}

fn cone_verdict(map: &ChainMap, lo: i32, exact: Option<Certificate>) -> (Option<(i32, i32)>, Verdict) {
    let cone = map.cone();
    let Some((a, b)) = cone.support() else {
        return (None, Verdict::exact(exact.into_iter().collect()));
    };
    let lo = lo.max(a);
    if let Some(n) = (lo..=b).find(|&n| cone.homology_dim(n) != 0) {
        return (Some((lo, b)), Verdict::fail(format!("the induced map is not a quasi-isomorphism in degree {n}")));
    }
    let verdict = match exact {
        Some(c) => Verdict::exact(vec![c]),
        None => Verdict::PassWithinWindow { from: lo, to: b },
    };
    (Some((lo, b)), verdict)
}

/// `R ⊗^L_A L -> U` in the derived category of left `R`-modules and `L ⊗^L_B S -> U` in
/// that of right `S`-modules, both induced by the structural map.
pub fn check_relative_condition_iv(
    c: &PseudoDualizingCandidate,
    bc: &BaseChange,
    w: ResolutionWindow,
) -> Result<ValidationReport, ComplexError> {
    let field = c.complex().field();
    let (l_lo, _) = c.support();
    let (a, b) = (c.left_algebra().clone(), c.right_algebra().clone());
    let (r, s) = (bc.u.left_algebra().clone(), bc.u.right_algebra().clone());
    let depth = w.depth() as i32;
    let g = &bc.structural;
    let mut axioms = Vec::new();

    // R ⊗_A ''L -> U, r ⊗ x ↦ r · g(φ''(x)).
    let lres = c.context().resolution(Structure::Left, l_lo - depth)?;
    let r_ra = BimoduleRep::regular(r.clone()).restrict(r.clone(), &ExactMatrix::identity(field, r.dim()), a, &bc.a_to_r)?;
    let t = tensor_complex(&BoundedComplex::concentrated(r_ra, 0), &lres.complex())?;
    let phi = lres.augmentation();
    let mut comps = Vec::new();
    for (n, _) in t.complex.terms() {
        let Some(blk) = t.block(n, 0) else { continue };
        let ut = bc.u.term_or_zero(n);
        let gphi = g.component(n).mul(&phi.component(n));
        let mut e = ExactMatrix::zeros(field, ut.dim(), blk.left_dim * blk.right_dim);
        for i in 0..blk.left_dim {
            e.set_block(0, i * blk.right_dim, &ut.left_action(i).mul(&gphi));
        }
        comps.push((n, e.mul(&blk.quotient.section)));
    }
    let map = ChainMap::new(&t.complex, &bc.u.left_part(), comps)?;
    let mut lres2 = lres.clone();
    let exact = lres2.length(w.depth())?.map(|length| Certificate::FiniteResolution {
        object: "L as a complex of left A-modules".into(),
        length,
    });
    let lo = if exact.is_some() { i32::MIN } else { lres.bottom() + 1 };
    let (range, verdict) = cone_verdict(&map, lo, exact);
    axioms.push(AxiomResult::new("left-base-change", range, verdict));

    // 'L ⊗_B S -> U, x ⊗ s ↦ g(φ'(x)) · s.
    let rres = c.context().resolution(Structure::Right, l_lo - depth)?;
    let s_bs = BimoduleRep::regular(s.clone()).restrict(b, &bc.b_to_s, s.clone(), &ExactMatrix::identity(field, s.dim()))?;
    let t = tensor_complex(&rres.complex(), &BoundedComplex::concentrated(s_bs, 0))?;
    let phi = rres.augmentation();
    let mut comps = Vec::new();
    for (n, _) in t.complex.terms() {
        let Some(blk) = t.block(n, n) else { continue };
        let ut = bc.u.term_or_zero(n);
        let gphi = g.component(n).mul(&phi.component(n));
        let mut e = ExactMatrix::zeros(field, ut.dim(), blk.left_dim * blk.right_dim);
        for x in 0..blk.left_dim {
            for j in 0..blk.right_dim {
                let col = ut.right_action(j).mul(&gphi.select_cols(&[x]));
                e.set_block(0, x * blk.right_dim + j, &col);
            }
        }
        comps.push((n, e.mul(&blk.quotient.section)));
    }
    let map = ChainMap::new(&t.complex, &bc.u.right_part(), comps)?;
    let mut rres2 = rres.clone();
    let exact = rres2.length(w.depth())?.map(|length| Certificate::FiniteResolution {
        object: "L as a complex of right B-modules".into(),
        length,
    });
    let lo = if exact.is_some() { i32::MIN } else { rres.bottom() + 1 };
    let (range, verdict) = cone_verdict(&map, lo, exact);
    axioms.push(AxiomResult::new("right-base-change", range, verdict));
    Ok(ValidationReport::new("relative-iv", axioms))
}

/// Which ring a module for [`membership_base_change_test`] lives over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ModuleSide {
    /// A left `R`-module, tested for the Bass classes.
    R,
    /// A left `S`-module, tested for the Auslander classes.
    S,
}

#[derive(Clone, Debug, Serialize)]
pub struct BaseChangeOutcome {
    pub agree: bool,
    /// Membership for `U`.
    pub over_extension: MembershipReport,
    /// Membership of the underlying module for `L`.
    pub underlying: MembershipReport,
}

/// Runs both membership oracles: for `U` on the module itself and for `L` on its
/// restriction along `A -> R` (resp. `B -> S`). Disagreement indicates a bug.
pub fn membership_base_change_test(
    m: &ModuleRep,
    side: ModuleSide,
    l: &PseudoDualizingCandidate,
    u: &PseudoDualizingCandidate,
    bc: &BaseChange,
    l1: i32,
    w: ResolutionWindow,
) -> Result<BaseChangeOutcome, ComplexError> {
    let (over_extension, underlying) = match side {
        ModuleSide::R => {
            let down = m.restrict(l.left_algebra().clone(), &bc.a_to_r)?;
            (bass_membership(m, u, l1, w)?, bass_membership(&down, l, l1, w)?)
        }
        ModuleSide::S => {
            let down = m.restrict(l.right_algebra().clone(), &bc.b_to_s)?;
            (auslander_membership(m, u, l1, w)?, auslander_membership(&down, l, l1, w)?)
        }
    };
    let decided = |r: &MembershipReport| !matches!(r.verdict, Verdict::WindowExhausted { .. });
    let agree = !(decided(&over_extension) && decided(&underlying)) || over_extension.is_member() == underlying.is_member();
    Ok(BaseChangeOutcome {
        agree,
        over_extension,
        underlying,
    })
}
