//! Finite-dimensional modules given by action matrices on a fixed basis.

use std::fmt;
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::AlgebraError;
use crate::linalg::{Basis, ExactMatrix, Field, Quotient};

use super::Algebra;

/// Which side the algebra acts from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

/// A module over `algebra`, stored as one matrix per basis element of the algebra.
/// Left modules satisfy `ρ(ab) = ρ(a)ρ(b)`; right modules satisfy `ρ(ab) = ρ(b)ρ(a)`,
/// so that a right module is literally a left module over the opposite algebra.
#[derive(Clone)]
pub struct ModuleRep {
    algebra: Arc<Algebra>,
    side: Side,
    dim: usize,
    action: Vec<ExactMatrix>,
}

impl PartialEq for ModuleRep {
    fn eq(&self, other: &Self) -> bool {
        self.side == other.side
            && self.dim == other.dim
            && self.action == other.action
            && (Arc::ptr_eq(&self.algebra, &other.algebra) || self.algebra == other.algebra)
    }
}

impl Eq for ModuleRep {}

impl fmt::Debug for ModuleRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} module of dim {} over {:?}", self.side, self.dim, self.algebra)
    }
}

impl ModuleRep {
    /// Validates the module axioms: shapes, unit, and compatibility with products.
    pub fn new(algebra: Arc<Algebra>, side: Side, action: Vec<ExactMatrix>) -> Result<ModuleRep, AlgebraError> {
        if action.len() != algebra.dim() {
            return Err(AlgebraError::Malformed(format!(
                "{} action matrices for an algebra of dimension {}",
                action.len(),
                algebra.dim()
            )));
        }
        let dim = action.first().map_or(0, ExactMatrix::rows);
        if action.iter().any(|m| m.shape() != (dim, dim) || m.field() != algebra.field()) {
            return Err(AlgebraError::Malformed("action matrices must be square of equal size".into()));
        }
        let m = ModuleRep {
            algebra,
            side,
            dim,
            action,
        };
        m.verify()?;
        Ok(m)
    }

    pub(crate) fn new_unchecked(algebra: Arc<Algebra>, side: Side, dim: usize, action: Vec<ExactMatrix>) -> ModuleRep {
        let m = ModuleRep {
            algebra,
            side,
            dim,
            action,
        };
        debug_assert_eq!(m.verify(), Ok(()));
        m
    }

    fn verify(&self) -> Result<(), AlgebraError> {
        let a = &self.algebra;
        if self.act(a.unit()) != ExactMatrix::identity(a.field(), self.dim) {
            return Err(AlgebraError::UnitNotIdentity);
        }
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let prod = a.left_basis_mult(i).select_cols(&[j]);
                let lhs = self.act(&prod);
                let rhs = match self.side {
                    Side::Left => self.action[i].mul(&self.action[j]),
                    Side::Right => self.action[j].mul(&self.action[i]),
                };
                if lhs != rhs {
                    return Err(AlgebraError::NotAModule(i, j));
                }
            }
        }
        Ok(())
    }

    pub fn zero(algebra: Arc<Algebra>, side: Side) -> ModuleRep {
        let field = algebra.field();
        let action = vec![ExactMatrix::zeros(field, 0, 0); algebra.dim()];
        ModuleRep::new_unchecked(algebra, side, 0, action)
    }

    /// The algebra acting on itself by left or right multiplication.
    pub fn regular(algebra: Arc<Algebra>, side: Side) -> ModuleRep {
        let n = algebra.dim();
        let action = (0..n)
            .map(|i| match side {
                Side::Left => algebra.left_basis_mult(i).clone(),
                Side::Right => algebra.right_basis_mult(i).clone(),
            })
            .collect();
        ModuleRep::new_unchecked(algebra, side, n, action)
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }

    /// Action matrix of the `i`-th basis element.
    pub fn action(&self, i: usize) -> &ExactMatrix {
        &self.action[i]
    }

    pub fn actions(&self) -> &[ExactMatrix] {
        &self.action
    }

    /// Action matrix of the element with coordinate column `x`.
    pub fn act(&self, x: &ExactMatrix) -> ExactMatrix {
        let mut out = ExactMatrix::zeros(self.field(), self.dim, self.dim);
        for (i, m) in self.action.iter().enumerate() {
            let c = x.get(i, 0);
            if !c.is_zero() {
                out = out.add(&m.scale(c));
            }
        }
        out
    }

    /// The same matrices viewed as a module of the other side over the opposite algebra.
    pub fn flip_side(&self) -> ModuleRep {
        ModuleRep {
            algebra: self.algebra.opposite_arc(),
            side: self.side.flip(),
            dim: self.dim,
            action: self.action.clone(),
        }
    }

    /// A left module: `self` or, for right modules, the module over the opposite algebra.
    pub fn as_left(&self) -> ModuleRep {
        match self.side {
            Side::Left => self.clone(),
            Side::Right => self.flip_side(),
        }
    }

    /// `Hom_k(M, k)`: a module of the other side over the same algebra.
    pub fn dual(&self) -> ModuleRep {
        ModuleRep {
            algebra: self.algebra.clone(),
            side: self.side.flip(),
            dim: self.dim,
            action: self.action.iter().map(ExactMatrix::transpose).collect(),
        }
    }

    pub fn direct_sum(parts: &[&ModuleRep]) -> Result<ModuleRep, AlgebraError> {
        let first = parts
            .first()
            .ok_or_else(|| AlgebraError::Malformed("direct sum of no modules".into()))?;
        for p in parts {
            same_category(first, p)?;
        }
        let field = first.field();
        let dim = parts.iter().map(|p| p.dim).sum();
        let action = (0..first.algebra.dim())
            .map(|i| {
                let mut m = ExactMatrix::zeros(field, dim, dim);
                let mut off = 0;
                for p in parts {
                    m.set_block(off, off, &p.action[i]);
                    off += p.dim;
                }
                m
            })
            .collect();
        Ok(ModuleRep::new_unchecked(first.algebra.clone(), first.side, dim, action))
    }

    /// Direct sum of `copies` copies of `self`.
    pub fn power(&self, copies: usize) -> ModuleRep {
        if copies == 0 {
            return ModuleRep::zero(self.algebra.clone(), self.side);
        }
        let parts = vec![self; copies];
        ModuleRep::direct_sum(&parts).expect("equal summands")
    }

    /// Whether the column span of `span` is a submodule.
    pub fn is_submodule(&self, span: &ExactMatrix) -> bool {
        let basis = Basis::spanning(span);
        self.action.iter().all(|a| basis.contains(&a.mul(basis.matrix())))
    }

    /// The submodule spanned by the columns of `span`, with its inclusion map.
    pub fn submodule(&self, span: &ExactMatrix) -> Result<(ModuleRep, ExactMatrix), AlgebraError> {
        let basis = Basis::spanning(span);
        let mut action = Vec::with_capacity(self.action.len());
        for a in &self.action {
            let img = a.mul(basis.matrix());
            let c = basis
                .try_coords(&img)
                .ok_or_else(|| AlgebraError::NotHomomorphism("span is not closed under the action".into()))?;
            action.push(c);
        }
        let dim = basis.dim();
        let inclusion = basis.matrix().clone();
        Ok((ModuleRep::new_unchecked(self.algebra.clone(), self.side, dim, action), inclusion))
    }

    /// The quotient by the submodule spanned by `span`, with projection and section.
    pub fn quotient(&self, span: &ExactMatrix) -> Result<(ModuleRep, Quotient), AlgebraError> {
        if !self.is_submodule(span) {
            return Err(AlgebraError::NotHomomorphism("span is not closed under the action".into()));
        }
        let q = Quotient::new(self.field(), self.dim, span);
        let action = self.action.iter().map(|a| q.induced(&q, a)).collect();
        Ok((ModuleRep::new_unchecked(self.algebra.clone(), self.side, q.dim(), action), q))
    }

    /// Columns spanning the radical `J M` (or `M J`).
    pub fn radical_span(&self) -> ExactMatrix {
        let rad = self.algebra.radical();
        let field = self.field();
        let parts: Vec<ExactMatrix> = (0..rad.cols()).map(|j| self.act(&rad.select_cols(&[j]))).collect();
        if parts.is_empty() || self.dim == 0 {
            return ExactMatrix::zeros(field, self.dim, 0);
        }
        let refs: Vec<&ExactMatrix> = parts.iter().collect();
        ExactMatrix::hstack(&refs, field, self.dim).column_space()
    }

    /// `M / rad M` with its quotient data.
    pub fn top(&self) -> (ModuleRep, Quotient) {
        self.quotient(&self.radical_span()).expect("radical is a submodule")
    }

    /// Columns spanning the socle, the sum of the simple submodules.
    pub fn socle_span(&self) -> ExactMatrix {
        let rad = self.algebra.radical();
        if rad.cols() == 0 || self.dim == 0 {
            return ExactMatrix::identity(self.field(), self.dim);
        }
        let parts: Vec<ExactMatrix> = (0..rad.cols()).map(|j| self.act(&rad.select_cols(&[j]))).collect();
        let refs: Vec<&ExactMatrix> = parts.iter().collect();
        ExactMatrix::vstack(&refs, self.field(), self.dim).kernel_basis()
    }

    /// Restriction of scalars along the algebra map `f : B -> A` whose columns are the
    /// images of the basis of `B`.
    pub fn restrict(&self, b: Arc<Algebra>, f: &ExactMatrix) -> Result<ModuleRep, AlgebraError> {
        if !b.is_homomorphism_to(&self.algebra, f) {
            return Err(AlgebraError::NotHomomorphism("restriction needs a unital algebra map".into()));
        }
        let action = (0..b.dim()).map(|j| self.act(&f.select_cols(&[j]))).collect();
        Ok(ModuleRep::new_unchecked(b, self.side, self.dim, action))
    }

    /// Whether `f : self -> target` commutes with the action.
    pub fn is_hom_to(&self, target: &ModuleRep, f: &ExactMatrix) -> bool {
        same_category(self, target).is_ok()
            && f.shape() == (target.dim, self.dim)
            && self.action.iter().zip(&target.action).all(|(a, b)| f.mul(a) == b.mul(f))
    }

    /// A minimal surjection from a projective module, built from primitive idempotents.
    pub fn projective_cover(&self) -> Result<(ModuleRep, ExactMatrix), AlgebraError> {
        if self.side == Side::Right {
            let (p, pi) = self.flip_side().projective_cover()?;
            return Ok((p.flip_side(), pi));
        }
        let a = &self.algebra;
        let field = self.field();
        let (top, q) = self.top();
        let mut summands = Vec::new();
        let mut images: Vec<ExactMatrix> = Vec::new();
        for e in a.primitive_idempotents()? {
            let part = top.act(e).column_space();
            if part.cols() == 0 {
                continue;
            }
            let pe = ModuleRep::regular(a.clone(), Side::Left).submodule(&a.right_mult(e))?;
            for t in 0..part.cols() {
                let lift = self.act(e).mul(&q.section.mul(&part.select_cols(&[t])));
                // generator e of A e goes to e * lift, so the basis vector b = b e goes to b * lift
                let cols: Vec<ExactMatrix> = (0..pe.0.dim)
                    .map(|k| self.act(&pe.1.select_cols(&[k])).mul(&lift))
                    .collect();
                let refs: Vec<&ExactMatrix> = cols.iter().collect();
                images.push(ExactMatrix::hstack(&refs, field, self.dim));
                summands.push(pe.0.clone());
            }
        }
        if summands.is_empty() {
            return Ok((ModuleRep::zero(a.clone(), Side::Left), ExactMatrix::zeros(field, self.dim, 0)));
        }
        let refs: Vec<&ModuleRep> = summands.iter().collect();
        let p = ModuleRep::direct_sum(&refs)?;
        let img_refs: Vec<&ExactMatrix> = images.iter().collect();
        let pi = ExactMatrix::hstack(&img_refs, field, self.dim);
        debug_assert!(p.is_hom_to(self, &pi) && pi.rank() == self.dim);
        Ok((p, pi))
    }

    /// The surjection `A^t -> M` sending the standard generators to lifts of a basis of
    /// the top, with `t = dim top M`.
    pub fn free_cover(&self) -> (ModuleRep, ExactMatrix) {
        let a = &self.algebra;
        let field = self.field();
        let (top, q) = self.top();
        let t = top.dim();
        let free = ModuleRep::regular(a.clone(), self.side).power(t);
        let mut blocks = Vec::with_capacity(t);
        for g in 0..t {
            let m = q.section.select_cols(&[g]);
            let cols: Vec<ExactMatrix> = (0..a.dim()).map(|i| self.action[i].mul(&m)).collect();
            let refs: Vec<&ExactMatrix> = cols.iter().collect();
            blocks.push(ExactMatrix::hstack(&refs, field, self.dim));
        }
        let refs: Vec<&ExactMatrix> = blocks.iter().collect();
        let pi = ExactMatrix::hstack(&refs, field, self.dim);
        debug_assert!(free.is_hom_to(self, &pi));
        (free, pi)
    }

    /// Projective iff the free cover has a module section.
    pub fn is_projective(&self) -> Result<bool, AlgebraError> {
        if self.dim == 0 {
            return Ok(true);
        }
        let (free, pi) = self.free_cover();
        let homs = hom_basis(self, &free)?;
        if homs.is_empty() {
            return Ok(false);
        }
        let field = self.field();
        let cols: Vec<ExactMatrix> = homs.iter().map(|h| pi.mul(h).vectorize()).collect();
        let refs: Vec<&ExactMatrix> = cols.iter().collect();
        let sys = ExactMatrix::hstack(&refs, field, self.dim * self.dim);
        Ok(sys.solve(&ExactMatrix::identity(field, self.dim).vectorize())?.is_some())
    }

    /// Injective iff the dual is projective over the opposite side.
    pub fn is_injective(&self) -> Result<bool, AlgebraError> {
        self.dual().is_projective()
    }

    /// `End(M)` with multiplication `f * g = f ∘ g`, together with its basis of matrices.
    pub fn endomorphism_algebra(&self) -> Result<(Algebra, Vec<ExactMatrix>), AlgebraError> {
        let field = self.field();
        let homs = hom_basis(self, self)?;
        let n = homs.len();
        let vecs: Vec<ExactMatrix> = homs.iter().map(ExactMatrix::vectorize).collect();
        let refs: Vec<&ExactMatrix> = vecs.iter().collect();
        let basis = Basis::new(ExactMatrix::hstack(&refs, field, self.dim * self.dim));
        let left = (0..n)
            .map(|i| {
                let cols: Vec<ExactMatrix> = (0..n).map(|j| basis.coords(&homs[i].mul(&homs[j]).vectorize())).collect();
                let refs: Vec<&ExactMatrix> = cols.iter().collect();
                ExactMatrix::hstack(&refs, field, n)
            })
            .collect();
        let unit = basis.coords(&ExactMatrix::identity(field, self.dim).vectorize());
        let labels = (0..n).map(|i| format!("f{i}")).collect();
        Ok((Algebra::from_left_multiplication(field, labels, left, unit)?, homs))
    }
}

pub(crate) fn same_category(m: &ModuleRep, n: &ModuleRep) -> Result<(), AlgebraError> {
    if m.side != n.side {
        return Err(AlgebraError::Mismatch("modules act from different sides".into()));
    }
    if !Arc::ptr_eq(&m.algebra, &n.algebra) && *m.algebra != *n.algebra {
        return Err(AlgebraError::Mismatch("modules over different algebras".into()));
    }
    Ok(())
}

/// A basis of `Hom_A(M, N)`, each element a `dim N x dim M` matrix.
pub fn hom_basis(m: &ModuleRep, n: &ModuleRep) -> Result<Vec<ExactMatrix>, AlgebraError> {
    same_category(m, n)?;
    let pairs: Vec<(&ExactMatrix, &ExactMatrix)> = m.action.iter().zip(&n.action).collect();
    Ok(intertwiners(m.field(), m.dim, n.dim, &pairs))
}

/// Basis of the matrices `f` (`dn x dm`) with `f a = b f` for every pair `(a, b)`.
pub(crate) fn intertwiners(field: Field, dm: usize, dn: usize, pairs: &[(&ExactMatrix, &ExactMatrix)]) -> Vec<ExactMatrix> {
    if dm == 0 || dn == 0 {
        return Vec::new();
    }
    let id_m = ExactMatrix::identity(field, dm);
    let id_n = ExactMatrix::identity(field, dn);
    let mut rows: Option<ExactMatrix> = None;
    for (am, an) in pairs {
        let block = id_n.kronecker(&am.transpose()).sub(&an.kronecker(&id_m));
        let stacked = match rows.take() {
            None => block,
            Some(r) => ExactMatrix::vstack(&[&r, &block], field, dm * dn),
        };
        let ech = stacked.row_echelon();
        let r = ech.pivots.len();
        rows = Some(ech.reduced.select_rows(&(0..r).collect::<Vec<_>>()));
    }
    let kernel = match rows {
        Some(r) => r.kernel_basis(),
        None => ExactMatrix::identity(field, dm * dn),
    };
    (0..kernel.cols())
        .map(|c| ExactMatrix::unvectorize(&kernel, c, dn, dm))
        .collect()
}

pub fn hom_dim(m: &ModuleRep, n: &ModuleRep) -> Result<usize, AlgebraError> {
    Ok(hom_basis(m, n)?.len())
}

/// An isomorphism `M -> N` if one exists. Random combinations of a basis of the Hom
/// space are tried (all combinations when the space is small and finite), so over tiny
/// fields a negative answer is probabilistic.
pub fn find_isomorphism(m: &ModuleRep, n: &ModuleRep) -> Result<Option<ExactMatrix>, AlgebraError> {
    same_category(m, n)?;
    if m.dim != n.dim {
        return Ok(None);
    }
    let field = m.field();
    if m.dim == 0 {
        return Ok(Some(ExactMatrix::zeros(field, 0, 0)));
    }
    let homs = hom_basis(m, n)?;
    if homs.is_empty() {
        return Ok(None);
    }
    if let Some(h) = homs.iter().find(|h| h.is_invertible()) {
        return Ok(Some(h.clone()));
    }
    let combine = |coeffs: &[crate::linalg::Scalar]| {
        homs.iter()
            .zip(coeffs)
            .fold(ExactMatrix::zeros(field, n.dim, m.dim), |acc, (h, c)| acc.add(&h.scale(c)))
    };
    if let Some(q) = field.size() {
        let total = (q as u128).checked_pow(homs.len() as u32);
        if let Some(total) = total.filter(|&t| t <= 4096) {
            for code in 0..total {
                let mut c = code;
                let coeffs: Vec<_> = (0..homs.len())
                    .map(|_| {
                        let d = (c % q as u128) as i64;
                        c /= q as u128;
                        field.from_i64(d)
                    })
                    .collect();
                let f = combine(&coeffs);
                if f.is_invertible() {
                    return Ok(Some(f));
                }
            }
            return Ok(None);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x15_0b0d + (m.dim * 31 + homs.len()) as u64);
    for _ in 0..48 {
        let coeffs: Vec<_> = (0..homs.len()).map(|_| field.random(&mut rng)).collect();
        let f = combine(&coeffs);
        if f.is_invertible() {
            return Ok(Some(f));
        }
    }
    Ok(None)
}

pub fn is_isomorphic(m: &ModuleRep, n: &ModuleRep) -> Result<bool, AlgebraError> {
    Ok(find_isomorphism(m, n)?.is_some())
}

/// One indecomposable projective left module `A e` per isomorphism class.
pub fn indecomposable_projectives(algebra: &Arc<Algebra>) -> Result<Vec<ModuleRep>, AlgebraError> {
    let idem = algebra.primitive_idempotents()?;
    let (_, reps) = algebra.idempotent_classes()?;
    let reg = ModuleRep::regular(algebra.clone(), Side::Left);
    reps.iter()
        .map(|&r| Ok(reg.submodule(&algebra.right_mult(&idem[r]))?.0))
        .collect()
}

/// One indecomposable injective left module `D(e A)` per isomorphism class.
pub fn indecomposable_injectives(algebra: &Arc<Algebra>) -> Result<Vec<ModuleRep>, AlgebraError> {
    let idem = algebra.primitive_idempotents()?;
    let (_, reps) = algebra.idempotent_classes()?;
    let reg = ModuleRep::regular(algebra.clone(), Side::Right);
    reps.iter()
        .map(|&r| Ok(reg.submodule(&algebra.left_mult(&idem[r]))?.0.dual()))
        .collect()
}

/// The simple left modules `A e / J e`, one per isomorphism class.
pub fn simple_modules(algebra: &Arc<Algebra>) -> Result<Vec<ModuleRep>, AlgebraError> {
    Ok(indecomposable_projectives(algebra)?.iter().map(|p| p.top().0).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Arrow;

    fn a2() -> Arc<Algebra> {
        let arrow = Arrow {
            source: 0,
            target: 1,
            label: "a".into(),
        };
        Arc::new(Algebra::path_algebra(Field::Rationals, 2, &[arrow], &[]).unwrap())
    }

    fn dual_numbers(field: Field) -> Arc<Algebra> {
        let arrow = Arrow {
            source: 0,
            target: 0,
            label: "x".into(),
        };
        Arc::new(Algebra::path_algebra(field, 1, &[arrow], &[vec![(field.one(), vec![0, 0])]]).unwrap())
    }

    #[test]
    fn projectives_and_simples_of_a2() {
        let a = a2();
        let p = indecomposable_projectives(&a).unwrap();
        assert_eq!(p.iter().map(ModuleRep::dim).collect::<Vec<_>>(), vec![2, 1]);
        let s = simple_modules(&a).unwrap();
        assert_eq!(s.len(), 2);
        assert!(s.iter().all(|m| m.dim() == 1));
        assert!(s[1].is_projective().unwrap());
        assert!(!s[0].is_projective().unwrap());
        assert!(s[0].is_injective().unwrap());
        assert!(p[0].is_injective().unwrap());
        assert!(!s[1].is_injective().unwrap());
        assert_eq!(hom_dim(&p[1], &p[0]).unwrap(), 1);
        assert_eq!(hom_dim(&p[0], &p[1]).unwrap(), 0);
        let inj = indecomposable_injectives(&a).unwrap();
        assert!(is_isomorphic(&inj[0], &s[0]).unwrap());
        assert!(is_isomorphic(&inj[1], &p[0]).unwrap());
    }

    #[test]
    fn dual_numbers_simple_is_neither() {
        for field in [Field::Rationals, Field::prime(2).unwrap()] {
            let a = dual_numbers(field);
            let s = &simple_modules(&a).unwrap()[0];
            assert!(!s.is_projective().unwrap());
            assert!(!s.is_injective().unwrap());
            let reg = ModuleRep::regular(a.clone(), Side::Left);
            assert!(reg.is_projective().unwrap());
            assert!(reg.is_injective().unwrap());
        }
    }

    #[test]
    fn regular_hom_recovers_module() {
        let a = a2();
        let reg = ModuleRep::regular(a.clone(), Side::Left);
        for m in indecomposable_projectives(&a).unwrap().iter().chain(&simple_modules(&a).unwrap()) {
            assert_eq!(hom_dim(&reg, m).unwrap(), m.dim());
        }
    }

    #[test]
    fn projective_cover_of_simple() {
        let a = a2();
        let s = simple_modules(&a).unwrap();
        let (p, pi) = s[0].projective_cover().unwrap();
        assert_eq!(p.dim(), 2);
        assert!(p.is_hom_to(&s[0], &pi));
        let right_s = s[0].dual();
        let (rp, rpi) = right_s.projective_cover().unwrap();
        assert_eq!(rp.side(), Side::Right);
        assert!(rp.is_hom_to(&right_s, &rpi));
        assert!(rp.is_projective().unwrap());
    }

    #[test]
    fn module_axioms_are_checked() {
        let a = dual_numbers(Field::Rationals);
        let q = Field::Rationals;
        // x acting invertibly violates x^2 = 0
        let bad = ModuleRep::new(a.clone(), Side::Left, vec![ExactMatrix::identity(q, 1), ExactMatrix::identity(q, 1)]);
        assert!(matches!(bad, Err(AlgebraError::NotAModule(_, _))));
        let bad_unit = ModuleRep::new(a, Side::Left, vec![ExactMatrix::zeros(q, 1, 1), ExactMatrix::zeros(q, 1, 1)]);
        assert_eq!(bad_unit.unwrap_err(), AlgebraError::UnitNotIdentity);
    }

    #[test]
    fn endomorphisms_of_regular_module_are_opposite() {
        let a = a2();
        let reg = ModuleRep::regular(a.clone(), Side::Left);
        let (end, _) = reg.endomorphism_algebra().unwrap();
        assert_eq!(end.dim(), 3);
        assert_eq!(end.radical().cols(), 1);
    }
}
