use serde::{Deserialize, Serialize};

use super::{Certificate, PseudoDualizingCandidate, Verdict};
use crate::algebra::ModuleRep;
use crate::complex::{hom_complex, tensor_complex, BoundedComplex, Over};
use crate::derived::AdjunctionCheck;
use crate::error::ComplexError;
use crate::resolution::{Coresolution, PeriodicityCertificate, Resolution, ResolutionWindow, Structure};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassKind {
    /// `E_{l1}`: left `A`-modules with vanishing high Ext from `L` and invertible counit.
    Bass,
    /// `F_{l1}`: left `B`-modules with vanishing high Tor against `L` and invertible unit.
    Auslander,
}

/// Outcome of a vanishing sweep: `Ext^n` (or `Tor_n`) for `n` in `from..=to`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Vanishing {
    pub from: i32,
    pub to: i32,
    /// First degree with nonzero homology, and its dimension.
    pub nonzero: Option<(i32, usize)>,
    /// Present when the sweep covers every degree above `from`.
    pub certificate: Option<Certificate>,
}

impl Vanishing {
    pub fn verdict(&self, what: &str) -> Verdict {
        match (&self.nonzero, &self.certificate) {
            (Some((n, d)), cert) => Verdict::Fail {
                witness: format!("{what} in degree {n} has dimension {d}"),
                certificates: cert.iter().cloned().collect(),
            },
            (None, Some(c)) => Verdict::exact(vec![c.clone()]),
            (None, None) if self.from > self.to => Verdict::WindowExhausted {
                reason: format!("no trusted degree above {} within the window", self.from - 1),
            },
            (None, None) => Verdict::PassWithinWindow {
                from: self.from,
                to: self.to,
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdjunctionSummary {
    pub range: (i32, i32),
    pub failing_degree: Option<i32>,
    pub covers_all_degrees: bool,
}

impl From<&AdjunctionCheck> for AdjunctionSummary {
    fn from(a: &AdjunctionCheck) -> Self {
        AdjunctionSummary {
            range: a.range,
            failing_degree: a.failing_degree,
            covers_all_degrees: a.covers_all_degrees,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct MembershipReport {
    pub module: String,
    pub class: ClassKind,
    pub l1: i32,
    pub vanishing: Vanishing,
    /// Absent when the vanishing half already failed.
    pub adjunction: Option<AdjunctionSummary>,
    pub verdict: Verdict,
}

impl MembershipReport {
    pub fn named(mut self, id: impl Into<String>) -> MembershipReport {
        self.module = id.into();
        self
    }

    pub fn is_member(&self) -> bool {
        self.verdict.is_pass()
    }

    /// Whether the vanishing half passed (exactly or within the window).
    pub fn vanishing_passed(&self) -> bool {
        self.vanishing.nonzero.is_none()
    }
}

fn depth(w: ResolutionWindow) -> i32 {
    w.depth() as i32
}

fn first_nonzero(c: &BoundedComplex, degrees: impl Iterator<Item = i32>) -> Option<(i32, usize)> {
    degrees.map(|n| (n, c.homology_dim(n))).find(|&(_, d)| d > 0)
}

/// Degrees to inspect once a periodicity with the given `n0` is known.
fn periodic_bound(above: i32, n0: i32, p: &PeriodicityCertificate) -> i32 {
    (above + 1).max(n0) + p.period as i32 - 1
}

/// Whether `Ext^n_A(L, X) = 0` for all `n > above`, for a complex `X` of left `A`-modules.
/// Tries, in order: a finite coresolution of `X`, a finite resolution of `L`, periodicity
/// of either, and finally the plain window.
pub fn ext_vanishing(c: &PseudoDualizingCandidate, x: &BoundedComplex, above: i32, w: ResolutionWindow) -> Result<Vanishing, ComplexError> {
    let l = c.complex();
    let (l_lo, l_hi) = c.support();
    let Some((x_lo, x_hi)) = x.support() else {
        return Ok(Vanishing {
            from: above + 1,
            to: above,
            nonzero: None,
            certificate: Some(Certificate::FiniteCoresolution {
                object: "zero complex".into(),
                length: 0,
            }),
        });
    };
    let from = above + 1;
    let ctx = c.context();
    let mut cores = Coresolution::new(x, Structure::Left)?;
    if let Some(len) = cores.length(w.depth())? {
        let h = hom_complex(l, &cores.complex(), Over::Left)?.complex;
        let to = h.hi().unwrap_or(from - 1);
        return Ok(Vanishing {
            from,
            to,
            nonzero: first_nonzero(&h, from..=to),
            certificate: Some(Certificate::FiniteCoresolution {
                object: "the tested object".into(),
                length: len,
            }),
        });
    }
    let mut lres = ctx.resolution(Structure::Left, l_lo - depth(w))?;
    if let Some(len) = lres.length(w.depth())? {
        let h = hom_complex(&lres.complex(), x, Over::Left)?.complex;
        let to = h.hi().unwrap_or(from - 1);
        return Ok(Vanishing {
            from,
            to,
            nonzero: first_nonzero(&h, from..=to),
            certificate: Some(Certificate::FiniteResolution {
                object: "L as a complex of left A-modules".into(),
                length: len,
            }),
        });
    }
    let n0 = |o: usize| x_hi - l_lo + o as i32 + 2;
    if let Some(p) = cores.detect_periodicity(w.depth())? {
        let to = periodic_bound(above, n0(p.offset), &p);
        cores.extend_to(l_hi + to + 1)?;
        let h = hom_complex(l, &cores.complex(), Over::Left)?.complex;
        return Ok(Vanishing {
            from,
            to,
            nonzero: first_nonzero(&h, from..=to),
            certificate: Some(Certificate::Periodicity {
                object: "injective coresolution of the tested object".into(),
                offset: p.offset,
                period: p.period,
            }),
        });
    }
    if let Some(p) = lres.detect_periodicity(w.depth())? {
        let to = periodic_bound(above, n0(p.offset), &p);
        let lres = ctx.resolution(Structure::Left, x_lo - to - 1)?;
        let h = hom_complex(&lres.complex(), x, Over::Left)?.complex;
        return Ok(Vanishing {
            from,
            to,
            nonzero: first_nonzero(&h, from..=to),
            certificate: Some(Certificate::Periodicity {
                object: "L as a complex of left A-modules".into(),
                offset: p.offset,
                period: p.period,
            }),
        });
    }
    cores.extend_to(x_hi + depth(w))?;
    let h = hom_complex(l, &cores.complex(), Over::Left)?.complex;
    let to = cores.top() - l_hi - 1;
    Ok(Vanishing {
        from,
        to,
        nonzero: first_nonzero(&h, from..=to),
        certificate: None,
    })
}

/// Whether `Tor_t^B(L, N) = H^{-t}(L ⊗^L_B N) = 0` for all `t > above`, for a complex `N`
/// of left `B`-modules. The reported range is in `t`.
pub fn tor_vanishing(c: &PseudoDualizingCandidate, n: &BoundedComplex, above: i32, w: ResolutionWindow) -> Result<Vanishing, ComplexError> {
    let l = c.complex();
    let (l_lo, l_hi) = c.support();
    let from = above + 1;
    let Some((f_lo, f_hi)) = n.support() else {
        return Ok(Vanishing {
            from,
            to: above,
            nonzero: None,
            certificate: Some(Certificate::FiniteResolution {
                object: "zero complex".into(),
                length: 0,
            }),
        });
    };
    let ctx = c.context();
    let tor_top = |t: &BoundedComplex| -t.lo().unwrap_or(-(from - 1));
    let mut q = Resolution::new(n, Structure::Left)?;
    if let Some(len) = q.length(w.depth())? {
        let t = tensor_complex(l, &q.complex())?.complex;
        let to = tor_top(&t);
        return Ok(Vanishing {
            from,
            to,
            nonzero: sweep_tor(&t, from, to),
            certificate: Some(Certificate::FiniteResolution {
                object: "the tested object".into(),
                length: len,
            }),
        });
    }
    let mut lres = ctx.resolution(Structure::Right, l_lo - depth(w))?;
    if let Some(len) = lres.length(w.depth())? {
        let t = tensor_complex(&lres.complex(), n)?.complex;
        let to = tor_top(&t);
        return Ok(Vanishing {
            from,
            to,
            nonzero: sweep_tor(&t, from, to),
            certificate: Some(Certificate::FiniteResolution {
                object: "L as a complex of right B-modules".into(),
                length: len,
            }),
        });
    }
    let n0 = |o: usize| o as i32 - f_lo - l_lo + 2;
    if let Some(p) = q.detect_periodicity(w.depth())? {
        let to = periodic_bound(above, n0(p.offset), &p);
        q.extend_to(-to - l_hi - 1)?;
        let t = tensor_complex(l, &q.complex())?.complex;
        return Ok(Vanishing {
            from,
            to,
            nonzero: sweep_tor(&t, from, to),
            certificate: Some(Certificate::Periodicity {
                object: "projective resolution of the tested object".into(),
                offset: p.offset,
                period: p.period,
            }),
        });
    }
    if let Some(p) = lres.detect_periodicity(w.depth())? {
        let to = periodic_bound(above, n0(p.offset), &p);
        let lres = ctx.resolution(Structure::Right, -to - f_hi - 1)?;
        let t = tensor_complex(&lres.complex(), n)?.complex;
        return Ok(Vanishing {
            from,
            to,
            nonzero: sweep_tor(&t, from, to),
            certificate: Some(Certificate::Periodicity {
                object: "L as a complex of right B-modules".into(),
                offset: p.offset,
                period: p.period,
            }),
        });
    }
    q.extend_to(f_lo - depth(w))?;
    let t = tensor_complex(l, &q.complex())?.complex;
    let to = -(l_hi + q.bottom() + 1);
    Ok(Vanishing {
        from,
        to,
        nonzero: sweep_tor(&t, from, to),
        certificate: None,
    })
}

fn sweep_tor(t: &BoundedComplex, from: i32, to: i32) -> Option<(i32, usize)> {
    (from..=to).map(|k| (k, t.homology_dim(-k))).find(|&(_, d)| d > 0)
}

fn check_l1(c: &PseudoDualizingCandidate, l1: i32) -> Result<(), ComplexError> {
    if l1 < c.d1() {
        return Err(ComplexError::Precondition(format!("l1 = {l1} is below d1 = {}", c.d1())));
    }
    Ok(())
}

fn assemble(
    class: ClassKind,
    l1: i32,
    vanishing: Vanishing,
    adj: Option<&AdjunctionCheck>,
    what: &str,
    adj_cert: Option<Certificate>,
) -> MembershipReport {
    let v = vanishing.verdict(what);
    let verdict = match (adj, &v) {
        (None, _) => v,
        (Some(_), Verdict::Fail { .. }) => v,
        (Some(a), _) => {
            if let Some(n) = a.failing_degree {
                Verdict::fail(format!("the adjunction morphism is not a quasi-isomorphism: its cone has homology in degree {n}"))
            } else if let (true, true, Some(cert)) = (a.covers_all_degrees, v.is_exact_pass(), adj_cert) {
                let mut certs = v.certificates().to_vec();
                certs.push(cert);
                Verdict::exact(dedup(certs))
            } else {
                match v {
                    Verdict::WindowExhausted { .. } => v,
                    _ => Verdict::PassWithinWindow {
                        from: vanishing.from.min(a.range.0),
                        to: vanishing.to.max(a.range.1),
                    },
                }
            }
        }
    };
    MembershipReport {
        module: String::new(),
        class,
        l1,
        vanishing,
        adjunction: adj.map(AdjunctionSummary::from),
        verdict,
    }
}

/// A termination certificate for the one-sided resolution of `L`, if it is finite.
fn finite_side(c: &PseudoDualizingCandidate, s: Structure, w: ResolutionWindow) -> Result<Option<Certificate>, ComplexError> {
    let mut r = c.context().resolution(s, c.support().0 - depth(w))?;
    let side = match s {
        Structure::Right => "right B-modules",
        _ => "left A-modules",
    };
    Ok(r.length(w.depth())?.map(|length| Certificate::FiniteResolution {
        object: format!("L as a complex of {side}"),
        length,
    }))
}

fn dedup(certs: Vec<Certificate>) -> Vec<Certificate> {
    let mut out: Vec<Certificate> = Vec::new();
    for c in certs {
        if !out.contains(&c) {
            out.push(c);
        }
    }
    out
}

/// Membership of a complex `X` of left `A`-modules, concentrated in `[-n1, n2]`, in the
/// derived Bass class: `Ext^n_A(L, X) = 0` for `n > n2 + l1` and the counit is invertible.
pub fn bass_membership_complex(
    c: &PseudoDualizingCandidate,
    x: &BoundedComplex,
    l1: i32,
    w: ResolutionWindow,
) -> Result<(MembershipReport, Option<AdjunctionCheck>), ComplexError> {
    check_l1(c, l1)?;
    let (_, x_hi) = x.support().unwrap_or((0, 0));
    let above = x_hi + l1;
    let van = ext_vanishing(c, x, above, w)?;
    if van.nonzero.is_some() {
        return Ok((assemble(ClassKind::Bass, l1, van, None, "Ext_A(L, -)", None), None));
    }
    let adj = c.context().counit(x, above, w)?;
    let cert = finite_side(c, Structure::Right, w)?;
    let report = assemble(ClassKind::Bass, l1, van, Some(&adj), "Ext_A(L, -)", cert);
    Ok((report, Some(adj)))
}

/// Membership of a complex `F` of left `B`-modules, concentrated in `[-n1, n2]`, in the
/// derived Auslander class: `Tor_n^B(L, F) = 0` for `n > n1 + l1` and the unit is invertible.
pub fn auslander_membership_complex(
    c: &PseudoDualizingCandidate,
    f: &BoundedComplex,
    l1: i32,
    w: ResolutionWindow,
) -> Result<(MembershipReport, Option<AdjunctionCheck>), ComplexError> {
    check_l1(c, l1)?;
    let (f_lo, _) = f.support().unwrap_or((0, 0));
    let above = l1 - f_lo;
    let van = tor_vanishing(c, f, above, w)?;
    if van.nonzero.is_some() {
        return Ok((assemble(ClassKind::Auslander, l1, van, None, "Tor_B(L, -)", None), None));
    }
    let adj = c.context().unit(f, f_lo - l1, w)?;
    let cert = finite_side(c, Structure::Left, w)?;
    let report = assemble(ClassKind::Auslander, l1, van, Some(&adj), "Tor_B(L, -)", cert);
    Ok((report, Some(adj)))
}

/// Bass class membership of a left `A`-module.
pub fn bass_membership(e: &ModuleRep, c: &PseudoDualizingCandidate, l1: i32, w: ResolutionWindow) -> Result<MembershipReport, ComplexError> {
    Ok(bass_membership_complex(c, &BoundedComplex::from_module(e, 0), l1, w)?.0)
}

/// Auslander class membership of a left `B`-module.
pub fn auslander_membership(f: &ModuleRep, c: &PseudoDualizingCandidate, l1: i32, w: ResolutionWindow) -> Result<MembershipReport, ComplexError> {
    Ok(auslander_membership_complex(c, &BoundedComplex::from_module(f, 0), l1, w)?.0)
}

/// A round trip through the equivalence between the derived Bass and Auslander classes.
#[derive(Clone, Debug)]
pub struct RoundTrip {
    pub verdict: Verdict,
    /// Membership reports of the terms, in degree order.
    pub terms: Vec<(i32, MembershipReport)>,
    /// The counit (Bass) or unit (Auslander) with its comparison map; absent when a term
    /// failed membership.
    pub adjunction: Option<AdjunctionCheck>,
}

/// Checks every term of `x` for membership in the class, then assembles the counit
/// `L ⊗ RHom(L, X) -> X` (Bass) or the unit `X -> RHom(L, L ⊗ X)` (Auslander).
pub fn bounded_equivalence_roundtrip(
    c: &PseudoDualizingCandidate,
    x: &BoundedComplex,
    class: ClassKind,
    l1: i32,
    w: ResolutionWindow,
) -> Result<RoundTrip, ComplexError> {
    check_l1(c, l1)?;
    let mut terms = Vec::new();
    let mut verdicts = Vec::new();
    for (n, t) in x.terms() {
        let m = t.left_module();
        let r = match class {
            ClassKind::Bass => bass_membership(&m, c, l1, w)?,
            ClassKind::Auslander => auslander_membership(&m, c, l1, w)?,
        };
        let r = r.named(format!("term {n}"));
        if !r.is_member() {
            let verdict = match &r.verdict {
                Verdict::Fail { witness, certificates } => Verdict::Fail {
                    witness: format!("term in degree {n} is not in the class: {witness}"),
                    certificates: certificates.clone(),
                },
                v => v.clone(),
            };
            terms.push((n, r));
            return Ok(RoundTrip {
                verdict,
                terms,
                adjunction: None,
            });
        }
        verdicts.push(r.verdict.clone());
        terms.push((n, r));
    }
    let adj = match (class, x.support()) {
        (_, None) => None,
        (ClassKind::Bass, Some((_, hi))) => Some(c.context().counit(x, hi + l1, w)?),
        (ClassKind::Auslander, Some((lo, _))) => Some(c.context().unit(x, lo - l1, w)?),
    };
    let verdict = match &adj {
        None => Verdict::combine(&verdicts),
        Some(a) => match a.failing_degree {
            Some(n) => Verdict::fail(format!("round trip is not a quasi-isomorphism: cone has homology in degree {n}")),
            None if a.covers_all_degrees => Verdict::combine(&verdicts),
            None => {
                let (from, to) = a.range;
                let window = Verdict::PassWithinWindow { from, to };
                verdicts.push(window);
                Verdict::combine(&verdicts)
            }
        },
    };
    Ok(RoundTrip {
        verdict,
        terms,
        adjunction: adj,
    })
}
