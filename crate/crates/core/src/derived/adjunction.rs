use super::{depth, DerivedContext};
use crate::complex::{hom_complex, tensor_complex, BoundedComplex, ChainMap, Over};
use crate::error::ComplexError;
use crate::linalg::ExactMatrix;
use crate::resolution::{Coresolution, Resolution, ResolutionWindow, Structure};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AdjunctionKind {
    /// `L ⊗ τ≤ Hom_A(L, J) -> J`, compared with the coaugmentation `E -> J`.
    Counit,
    /// `Q -> Hom_A(''L, τ≥ (L ⊗ Q))`, compared with the augmentation `Q -> F`.
    Unit,
}

/// An explicit adjunction map together with the (co)augmentation that identifies one
/// end with the input, and the outcome of the quasi-isomorphism test.
#[derive(Clone, Debug)]
pub struct AdjunctionCheck {
    pub kind: AdjunctionKind,
    /// The adjunction map between underlying complexes of vector spaces.
    pub map: ChainMap,
    /// `E -> J` for the counit, `Q -> F` for the unit.
    pub comparison: ChainMap,
    /// Degrees in which `H(Cone(map))` was computed.
    pub range: (i32, i32),
    pub failing_degree: Option<i32>,
    /// Whether acyclicity on `range` implies acyclicity everywhere.
    pub covers_all_degrees: bool,
}

impl AdjunctionCheck {
    pub fn is_quasi_isomorphism_in_range(&self) -> bool {
        self.failing_degree.is_none()
    }

    fn evaluate(kind: AdjunctionKind, map: ChainMap, comparison: ChainMap, lo: i32, hi: i32, covers: bool) -> AdjunctionCheck {
        let cone = map.cone();
        let (lo, hi) = match cone.support() {
            Some((a, b)) => (lo.max(a), hi.min(b)),
            None => (0, -1),
        };
        let failing_degree = (lo..=hi).find(|&n| cone.homology_dim(n) != 0);
        AdjunctionCheck {
            kind,
            map,
            comparison,
            range: (lo, hi),
            failing_degree,
            covers_all_degrees: covers,
        }
    }
}

fn sign(a: i32, b: i32) -> bool {
    (a * b).rem_euclid(2) == 0
}

impl DerivedContext {
    /// The counit for a complex `X` of left `A`-modules, with `RHom_A(L, X)` truncated
    /// by `τ≤ trunc` (legitimate when `Ext^n_A(L, X) = 0` for `n > trunc`).
    pub fn counit(&self, x: &BoundedComplex, trunc: i32, w: ResolutionWindow) -> Result<AdjunctionCheck, ComplexError> {
        let field = x.field();
        let (l_lo, l_hi) = self.support();
        let (_, x_hi) = x.support().unwrap_or((0, 0));
        let t = (x_hi + depth(w)).max(x_hi.max(l_hi + trunc) + 2);
        let mut cores = Coresolution::new(x, Structure::Left)?;
        cores.extend_to(t)?;
        let j = cores.complex();
        let h = hom_complex(&self.l, &j, Over::Left)?;
        let (ht, incl) = h.complex.truncate_above(trunc);
        let lres = self.resolution(Structure::Right, l_lo - depth(w))?;
        let lp = lres.complex();
        let phi = lres.augmentation();
        let tc = tensor_complex(&lp, &ht)?;
        let target = j.underlying();
        let mut comps = Vec::new();
        for (n, term) in tc.complex.terms() {
            let mut eps = ExactMatrix::zeros(field, j.dim(n), term.dim());
            for b in &tc.blocks[&n] {
                let (p, q) = (b.p, n - b.p);
                let dq = ht.dim(q);
                let inc = incl.component(q);
                let phi_p = phi.component(p);
                let mut e = ExactMatrix::zeros(field, j.dim(n), b.left_dim * dq);
                for jj in 0..dq {
                    let hv = inc.select_cols(&[jj]);
                    let Some(f) = h.component(q, p, &hv, 0) else { continue };
                    let img = f.mul(&phi_p).signed(sign(p, q));
                    for i in 0..b.left_dim {
                        e.set_block(0, i * dq + jj, &img.select_cols(&[i]));
                    }
                }
                eps.set_block(0, b.offset, &e.mul(&b.quotient.section));
            }
            comps.push((n, eps));
        }
        let map = ChainMap::new(&tc.complex, &target, comps)?;
        let lo = if lres.is_finite() { i32::MIN } else { lres.bottom() + trunc + 1 };
        let hi = if cores.is_finite() { i32::MAX } else { t - 1 };
        let covers = lres.is_finite() && (cores.is_finite() || t - 1 > x_hi.max(l_hi + trunc));
        Ok(AdjunctionCheck::evaluate(AdjunctionKind::Counit, map, cores.coaugmentation(), lo, hi, covers))
    }

    /// The unit for a complex `F` of left `B`-modules, with `L ⊗^L_B F` truncated by
    /// `τ≥ s` (legitimate when its homology vanishes below `s`).
    pub fn unit(&self, f: &BoundedComplex, s: i32, w: ResolutionWindow) -> Result<AdjunctionCheck, ComplexError> {
        let field = f.field();
        let (l_lo, l_hi) = self.support();
        let (f_lo, _) = f.support().unwrap_or((0, 0));
        let lres = self.resolution(Structure::Left, l_lo - depth(w))?;
        let lpp = lres.complex();
        let phi = lres.augmentation();
        let b_q = (f_lo - depth(w)).min(s - 1 - l_hi).min(f_lo.min(s - l_hi) - 2);
        let mut qres = Resolution::new(f, Structure::Left)?;
        qres.extend_to(b_q)?;
        let qc = qres.complex();
        let lq = tensor_complex(&self.l, &qc)?;
        let (tt, proj) = lq.complex.truncate_below(s);
        let hm = hom_complex(&lpp, &tt, Over::Left)?;
        let mut comps = Vec::new();
        for (q, term) in qc.terms() {
            let mut eta = ExactMatrix::zeros(field, hm.complex.dim(q), term.dim());
            let Some(blocks) = hm.blocks.get(&q) else { continue };
            for y in 0..term.dim() {
                let mut ey = ExactMatrix::zeros(field, term.dim(), 1);
                ey.set(y, 0, field.one());
                let mut parts = Vec::new();
                for b in blocks {
                    let p = b.p;
                    let kron = phi.component(p).kronecker(&ey);
                    let class = lq.class_of(p + q, p, &kron);
                    let g = proj.component(p + q).mul(&class).signed(sign(p, q));
                    parts.push((p, g));
                }
                eta.set_block(0, y, &hm.encode(q, &parts));
            }
            comps.push((q, eta));
        }
        let map = ChainMap::new(&qc.underlying(), &hm.complex, comps)?;
        let lo = if qres.is_finite() { i32::MIN } else { qres.bottom() };
        let hi = if lres.is_finite() { i32::MAX } else { s - lres.bottom() - 1 };
        Ok(AdjunctionCheck::evaluate(AdjunctionKind::Unit, map, qres.augmentation(), lo, hi, lres.is_finite()))
    }
}

/// Result of comparing `Hom_A(L ⊗_B P, J)` with `Hom_B(P, Hom_A(L, J))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DgAdjunction {
    /// `(degree, dim left side, dim right side)` for every degree of either side.
    pub dims: Vec<(i32, usize, usize)>,
    pub bijective: bool,
    pub commutes: bool,
}

impl DgAdjunction {
    pub fn holds(&self) -> bool {
        self.bijective && self.commutes && self.dims.iter().all(|&(_, a, b)| a == b)
    }
}

/// Builds the currying map `φ ↦ (p ↦ (l ↦ (-1)^{|l||p|} φ(l ⊗ p)))` degree by degree and checks
/// that it is bijective and commutes with the differentials.
pub fn dg_adjunction_check(l: &BoundedComplex, p: &BoundedComplex, j: &BoundedComplex) -> Result<DgAdjunction, ComplexError> {
    let field = l.field();
    let lp = tensor_complex(l, p)?;
    let lhs = hom_complex(&lp.complex, j, Over::Left)?;
    let hlj = hom_complex(l, j, Over::Left)?;
    let rhs = hom_complex(p, &hlj.complex, Over::Left)?;
    let span = |c: &BoundedComplex| c.support();
    let (lo, hi) = match (span(&lhs.complex), span(&rhs.complex)) {
        (None, None) => {
            return Ok(DgAdjunction {
                dims: Vec::new(),
                bijective: true,
                commutes: true,
            })
        }
        (Some(a), None) | (None, Some(a)) => a,
        (Some(a), Some(b)) => (a.0.min(b.0), a.1.max(b.1)),
    };
    let mut psi = std::collections::BTreeMap::new();
    let mut dims = Vec::new();
    let mut bijective = true;
    for n in lo..=hi {
        let (dl, dr) = (lhs.complex.dim(n), rhs.complex.dim(n));
        dims.push((n, dl, dr));
        let mut m = ExactMatrix::zeros(field, dr, dl);
        for col in 0..dl {
            let comps = lhs.decode(n, &ExactMatrix::identity(field, dl), col);
            let mut parts = Vec::new();
            for (q, pq) in p.terms() {
                let Some(rb) = rhs.block(n, q) else { continue };
                let mut y_map = ExactMatrix::zeros(field, rb.tgt_dim, pq.dim());
                for y in 0..pq.dim() {
                    let mut ey = ExactMatrix::zeros(field, pq.dim(), 1);
                    ey.set(y, 0, field.one());
                    let mut inner = Vec::new();
                    for (pp, lt) in l.terms() {
                        let m_deg = pp + q;
                        let Some((_, phi)) = comps.iter().find(|(d, _)| *d == m_deg) else { continue };
                        let kron = ExactMatrix::identity(field, lt.dim()).kronecker(&ey);
                        let g = phi.mul(&lp.class_of(m_deg, pp, &kron)).signed(sign(pp, q));
                        inner.push((pp, g));
                    }
                    y_map.set_block(0, y, &hlj.encode(q + n, &inner));
                }
                parts.push((q, y_map));
            }
            m.set_block(0, col, &rhs.encode(n, &parts));
        }
        if dl != dr || !m.is_invertible() {
            bijective = false;
        }
        psi.insert(n, m);
    }
    let commutes = (lo..hi).all(|n| {
        rhs.complex.diff(n).mul(&psi[&n]) == psi[&(n + 1)].mul(&lhs.complex.diff(n))
    });
    Ok(DgAdjunction {
        dims,
        bijective,
        commutes,
    })
}
