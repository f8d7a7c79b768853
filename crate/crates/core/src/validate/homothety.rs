use super::{AxiomResult, Certificate, PseudoDualizingCandidate, ValidationReport, Verdict};
use crate::complex::{hom_complex, Over};
use crate::error::ComplexError;
use crate::linalg::ExactMatrix;
use crate::resolution::{Coresolution, Resolution, ResolutionWindow, Structure};

/// One of the two homothety maps.
#[derive(Clone, Copy)]
enum Side {
    /// `A -> Ext^0_{B^op}(L, L)`, computed from a resolution by right `B`-modules.
    A,
    /// `B^op -> Ext^0_A(L, L)`, computed from a resolution by left `A`-modules.
    Bop,
}

impl Side {
    fn structure(self) -> Structure {
        match self {
            Side::A => Structure::Right,
            Side::Bop => Structure::Left,
        }
    }

    fn over(self) -> Over {
        match self {
            Side::A => Over::Right,
            Side::Bop => Over::Left,
        }
    }

    fn tag(self) -> &'static str {
        match self {
            Side::A => "A",
            Side::Bop => "Bop",
        }
    }

    /// The ring over which `L` is resolved.
    fn resolved_over(self) -> &'static str {
        match self {
            Side::A => "right B-modules",
            Side::Bop => "left A-modules",
        }
    }
}

fn window_depth(w: ResolutionWindow) -> i32 {
    w.depth() as i32
}

/// Highest degree that must be inspected for `Ext^n(L, L)` to be known in every degree,
/// with the certificate justifying it (`None`: window only).
fn ext_bound(
    c: &PseudoDualizingCandidate,
    side: Side,
    w: ResolutionWindow,
) -> Result<(Option<i32>, Vec<Certificate>), ComplexError> {
    let n = window_depth(w);
    let (l_lo, l_hi) = c.support();
    let s = side.structure();
    let object = format!("L as a complex of {}", side.resolved_over());
    let mut res = c.context().resolution(s, l_lo - n)?;
    if let Some(len) = res.length(w.depth())? {
        return Ok((Some(i32::MAX), vec![Certificate::FiniteResolution { object, length: len }]));
    }
    let mut cores = Coresolution::new(c.complex(), s)?;
    if let Some(len) = cores.length(w.depth())? {
        let cert = Certificate::FiniteCoresolution { object, length: len };
        return Ok((Some(len as i32), vec![cert]));
    }
    let periodic = |p: crate::resolution::PeriodicityCertificate| {
        let n0 = l_hi - l_lo + p.offset as i32 + 2;
        let bound = n0.max(1) + p.period as i32 - 1;
        (bound, p.offset, p.period)
    };
    if let Some(p) = res.detect_periodicity(w.depth())? {
        let (bound, offset, period) = periodic(p);
        return Ok((Some(bound), vec![Certificate::Periodicity { object, offset, period }]));
    }
    if let Some(p) = cores.detect_periodicity(w.depth())? {
        let (bound, offset, period) = periodic(p);
        let object = format!("injective coresolution of L over {}", side.resolved_over());
        return Ok((Some(bound), vec![Certificate::Periodicity { object, offset, period }]));
    }
    Ok((None, Vec::new()))
}

fn side_checks(c: &PseudoDualizingCandidate, side: Side, w: ResolutionWindow) -> Result<Vec<AxiomResult>, ComplexError> {
    let field = c.complex().field();
    let (l_lo, _) = c.support();
    let (bound, certs) = ext_bound(c, side, w)?;
    let res: Resolution = match bound {
        Some(b) if b != i32::MAX => c.context().resolution(side.structure(), l_lo - b.max(0) - 1)?,
        _ => c.context().resolution(side.structure(), l_lo - window_depth(w))?,
    };
    let trust_hi = if res.is_finite() { i32::MAX } else { l_lo - res.bottom() - 1 };
    let p = res.complex();
    let phi = res.augmentation();
    let l = c.complex();
    let hom = hom_complex(&p, l, side.over())?;
    let ext_name = match side {
        Side::A => "Ext_Bop(L, L)",
        Side::Bop => "Ext_A(L, L)",
    };
    let mut out = Vec::new();

    let (h_lo, h_hi) = hom.complex.support().unwrap_or((0, 0));
    let top = bound.unwrap_or(trust_hi).min(h_hi).min(trust_hi);
    let nonzero = (h_lo..=top).filter(|&n| n != 0).find_map(|n| {
        let d = hom.complex.homology_dim(n);
        (d > 0).then_some((n, d))
    });
    let verdict = match nonzero {
        Some((n, d)) => Verdict::Fail {
            witness: format!("{ext_name} is nonzero in degree {n} (dimension {d})"),
            certificates: certs.clone(),
        },
        None if bound.is_some() => Verdict::exact(certs.clone()),
        None => Verdict::PassWithinWindow { from: h_lo, to: top },
    };
    out.push(AxiomResult::new(format!("ext-vanishing-{}", side.tag()), Some((h_lo, top)), verdict));

    // The homothety sends a basis element to the class of its action composed with φ.
    let h0 = hom.complex.homology(0);
    let ring = match side {
        Side::A => l.left_algebra().clone(),
        Side::Bop => l.right_algebra().clone(),
    };
    let act = |t: &crate::algebra::BimoduleRep, i: usize| match side {
        Side::A => t.left_action(i).clone(),
        Side::Bop => t.right_action(i).clone(),
    };
    let class_of = |word: &[usize]| -> Option<ExactMatrix> {
        let mut comps = Vec::new();
        for (deg, t) in l.terms() {
            if p.dim(deg) == 0 {
                continue;
            }
            let mut f = phi.component(deg);
            for &i in word.iter().rev() {
                f = act(t, i).mul(&f);
            }
            comps.push((deg, f));
        }
        let v = hom.encode(0, &comps);
        h0.cycles.try_coords(&v).map(|z| h0.quotient.projection.mul(&z))
    };
    let r = ring.dim();
    let mut m = ExactMatrix::zeros(field, h0.quotient.dim(), r);
    let name = format!("homothety-{}", side.tag());
    for i in 0..r {
        match class_of(&[i]) {
            Some(col) => m.set_block(0, i, &col),
            None => {
                out.push(AxiomResult::new(name, Some((0, 0)), Verdict::fail(format!("basis element {i} does not act by a chain map"))));
                return Ok(out);
            }
        }
    }
    let exact = Certificate::TrustedDegree {
        object: format!("Ext^0 of {ext_name}"),
        degree: 0,
    };
    let verdict = if m.is_square() && m.is_invertible() {
        Verdict::exact(vec![exact.clone()])
    } else {
        Verdict::fail(format!(
            "homothety from a {r}-dimensional ring into a {}-dimensional Ext^0 has rank {}",
            h0.quotient.dim(),
            m.rank()
        ))
    };
    out.push(AxiomResult::new(name.clone(), Some((0, 0)), verdict));

    let mut witness = None;
    'pairs: for i in 0..r {
        for j in 0..r {
            let lhs = class_of(&[i, j]).expect("products of chain maps are chain maps");
            let (x, y) = match side {
                Side::A => (i, j),
                Side::Bop => (j, i),
            };
            let prod = ring.mul(&ring.basis_element(x), &ring.basis_element(y));
            if lhs != m.mul(&prod) {
                witness = Some(format!("basis pair ({i}, {j})"));
                break 'pairs;
            }
        }
    }
    let verdict = match witness {
        Some(wt) => Verdict::fail(format!("homothety is not multiplicative on {wt}")),
        None => Verdict::exact(vec![exact]),
    };
    out.push(AxiomResult::new(format!("{name}-multiplicative"), Some((0, 0)), verdict));
    Ok(out)
}

/// Both homothety maps: bijectivity in degree zero, multiplicativity on basis pairs, and
/// vanishing of the self-Ext of `L` in nonzero degrees on both sides.
pub fn check_homothety(c: &PseudoDualizingCandidate, w: ResolutionWindow) -> Result<ValidationReport, ComplexError> {
    let mut axioms = side_checks(c, Side::A, w)?;
    axioms.extend(side_checks(c, Side::Bop, w)?);
    Ok(ValidationReport::new("check-homothety", axioms))
}

fn termination(c: &PseudoDualizingCandidate, side: Side, projective: bool, w: ResolutionWindow) -> Result<AxiomResult, ComplexError> {
    let s = side.structure();
    let (what, name) = if projective {
        ("projective resolution", format!("finite-projective-{}", side.tag()))
    } else {
        ("injective coresolution", format!("finite-injective-{}", side.tag()))
    };
    let object = format!("{what} of L as a complex of {}", side.resolved_over());
    let (length, periodic) = if projective {
        let mut r = c.context().resolution(s, c.support().0)?;
        let len = r.length(w.depth())?;
        (len, if len.is_none() { r.detect_periodicity(w.depth())? } else { None })
    } else {
        let mut r = Coresolution::new(c.complex(), s)?;
        let len = r.length(w.depth())?;
        (len, if len.is_none() { r.detect_periodicity(w.depth())? } else { None })
    };
    let verdict = match (length, periodic) {
        (Some(length), _) => {
            let cert = if projective {
                Certificate::FiniteResolution { object, length }
            } else {
                Certificate::FiniteCoresolution { object, length }
            };
            Verdict::exact(vec![cert])
        }
        (None, Some(p)) => Verdict::Fail {
            witness: format!(
                "the {what} never terminates: step {} repeats step {}",
                p.offset + p.period,
                p.offset
            ),
            certificates: vec![Certificate::Periodicity {
                object,
                offset: p.offset,
                period: p.period,
            }],
        },
        (None, None) => Verdict::WindowExhausted {
            reason: format!("the {what} neither terminates nor repeats within {} steps", w.depth()),
        },
    };
    Ok(AxiomResult::new(name, None, verdict))
}

/// Homothety axioms plus finite projective resolutions of `L` on both sides.
pub fn check_dedualizing(c: &PseudoDualizingCandidate, w: ResolutionWindow) -> Result<ValidationReport, ComplexError> {
    let h = check_homothety(c, w)?;
    let axioms = vec![termination(c, Side::Bop, true, w)?, termination(c, Side::A, true, w)?];
    Ok(ValidationReport::new("check-dedualizing", axioms).including(&h))
}

/// Homothety axioms plus finite injective coresolutions of `L` on both sides.
pub fn check_dualizing(c: &PseudoDualizingCandidate, w: ResolutionWindow) -> Result<ValidationReport, ComplexError> {
    let h = check_homothety(c, w)?;
    let axioms = vec![termination(c, Side::Bop, false, w)?, termination(c, Side::A, false, w)?];
    Ok(ValidationReport::new("check-dualizing", axioms).including(&h))
}
