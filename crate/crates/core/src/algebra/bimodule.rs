//! Bimodules, viewed either through their two commuting actions or as left modules
//! over the enveloping algebra.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock, Weak};

use crate::error::AlgebraError;
use crate::linalg::{Basis, ExactMatrix, Field, Quotient};

use super::module::{intertwiners, ModuleRep, Side};
use super::Algebra;

/// An `A`-`B`-bimodule: a left `A`-action and a right `B`-action that commute.
#[derive(Clone)]
pub struct BimoduleRep {
    left_alg: Arc<Algebra>,
    right_alg: Arc<Algebra>,
    dim: usize,
    left: Vec<ExactMatrix>,
    right: Vec<ExactMatrix>,
    env_module: OnceLock<ModuleRep>,
}

impl PartialEq for BimoduleRep {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim
            && self.left == other.left
            && self.right == other.right
            && same_algebra(&self.left_alg, &other.left_alg)
            && same_algebra(&self.right_alg, &other.right_alg)
    }
}

impl Eq for BimoduleRep {}

impl fmt::Debug for BimoduleRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "bimodule of dim {} over ({:?}, {:?})",
            self.dim, self.left_alg, self.right_alg
        )
    }
}

pub(crate) fn same_algebra(a: &Arc<Algebra>, b: &Arc<Algebra>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// The ground field as a shared one-dimensional algebra.
pub fn ground_algebra(field: Field) -> Arc<Algebra> {
    static CACHE: OnceLock<Mutex<HashMap<Field, Arc<Algebra>>>> = OnceLock::new();
    let mut map = CACHE.get_or_init(Default::default).lock().unwrap();
    map.entry(field).or_insert_with(|| Arc::new(Algebra::ground(field))).clone()
}

/// `A ⊗ B^op`, shared between all bimodules over the same pair of algebras.
pub fn enveloping_algebra(a: &Arc<Algebra>, b: &Arc<Algebra>) -> Arc<Algebra> {
    type Entry = (Weak<Algebra>, Weak<Algebra>, Arc<Algebra>);
    static CACHE: OnceLock<Mutex<Vec<Entry>>> = OnceLock::new();
    let mut cache = CACHE.get_or_init(Default::default).lock().unwrap();
    cache.retain(|(x, y, _)| x.strong_count() > 0 && y.strong_count() > 0);
    for (x, y, env) in cache.iter() {
        if x.upgrade().is_some_and(|x| Arc::ptr_eq(&x, a)) && y.upgrade().is_some_and(|y| Arc::ptr_eq(&y, b)) {
            return env.clone();
        }
    }
    let env = Arc::new(Algebra::enveloping(a, b).expect("same field"));
    cache.push((Arc::downgrade(a), Arc::downgrade(b), env.clone()));
    env
}

impl BimoduleRep {
    /// `left[i]` is the action of the `i`-th basis element of `A`, `right[j]` the right
    /// action of the `j`-th basis element of `B`.
    pub fn new(
        left_alg: Arc<Algebra>,
        right_alg: Arc<Algebra>,
        left: Vec<ExactMatrix>,
        right: Vec<ExactMatrix>,
    ) -> Result<BimoduleRep, AlgebraError> {
        if left_alg.field() != right_alg.field() {
            return Err(AlgebraError::Mismatch("bimodule over algebras with different fields".into()));
        }
        let lm = ModuleRep::new(left_alg.clone(), Side::Left, left)?;
        let rm = ModuleRep::new(right_alg.clone(), Side::Right, right)?;
        if lm.dim() != rm.dim() {
            return Err(AlgebraError::Malformed("left and right actions have different sizes".into()));
        }
        for (i, l) in lm.actions().iter().enumerate() {
            for (j, r) in rm.actions().iter().enumerate() {
                if l.mul(r) != r.mul(l) {
                    return Err(AlgebraError::NotAModule(i, j));
                }
            }
        }
        Ok(BimoduleRep {
            dim: lm.dim(),
            left: lm.actions().to_vec(),
            right: rm.actions().to_vec(),
            left_alg,
            right_alg,
            env_module: OnceLock::new(),
        })
    }

    pub(crate) fn new_unchecked(
        left_alg: Arc<Algebra>,
        right_alg: Arc<Algebra>,
        dim: usize,
        left: Vec<ExactMatrix>,
        right: Vec<ExactMatrix>,
    ) -> BimoduleRep {
        let b = BimoduleRep {
            left_alg,
            right_alg,
            dim,
            left,
            right,
            env_module: OnceLock::new(),
        };
        debug_assert!(BimoduleRep::new(b.left_alg.clone(), b.right_alg.clone(), b.left.clone(), b.right.clone()).is_ok());
        b
    }

    /// A one-sided module as a bimodule over the ground field on the other side.
    pub fn from_module(m: &ModuleRep) -> BimoduleRep {
        let k = ground_algebra(m.field());
        let id = vec![ExactMatrix::identity(m.field(), m.dim())];
        match m.side() {
            Side::Left => BimoduleRep::new_unchecked(m.algebra().clone(), k, m.dim(), m.actions().to_vec(), id),
            Side::Right => BimoduleRep::new_unchecked(k, m.algebra().clone(), m.dim(), id, m.actions().to_vec()),
        }
    }

    /// A bimodule from a left module over the enveloping algebra `A ⊗ B^op`.
    pub fn from_env_module(a: Arc<Algebra>, b: Arc<Algebra>, m: &ModuleRep) -> Result<BimoduleRep, AlgebraError> {
        let env = enveloping_algebra(&a, &b);
        if m.side() != Side::Left || !same_algebra(m.algebra(), &env) {
            return Err(AlgebraError::Mismatch("expected a left module over the enveloping algebra".into()));
        }
        let left = (0..a.dim()).map(|i| m.act(&a.basis_element(i).kronecker(b.unit()))).collect();
        let right = (0..b.dim()).map(|j| m.act(&a.unit().kronecker(&b.basis_element(j)))).collect();
        let out = BimoduleRep::new_unchecked(a, b, m.dim(), left, right);
        let _ = out.env_module.set(m.clone());
        Ok(out)
    }

    /// `A` as an `A`-`A`-bimodule.
    pub fn regular(a: Arc<Algebra>) -> BimoduleRep {
        let n = a.dim();
        let left = (0..n).map(|i| a.left_basis_mult(i).clone()).collect();
        let right = (0..n).map(|i| a.right_basis_mult(i).clone()).collect();
        BimoduleRep::new_unchecked(a.clone(), a, n, left, right)
    }

    pub fn zero(a: Arc<Algebra>, b: Arc<Algebra>) -> BimoduleRep {
        let f = a.field();
        let left = vec![ExactMatrix::zeros(f, 0, 0); a.dim()];
        let right = vec![ExactMatrix::zeros(f, 0, 0); b.dim()];
        BimoduleRep::new_unchecked(a, b, 0, left, right)
    }

    pub fn left_algebra(&self) -> &Arc<Algebra> {
        &self.left_alg
    }

    pub fn right_algebra(&self) -> &Arc<Algebra> {
        &self.right_alg
    }

    pub fn field(&self) -> Field {
        self.left_alg.field()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn left_action(&self, i: usize) -> &ExactMatrix {
        &self.left[i]
    }

    pub fn right_action(&self, j: usize) -> &ExactMatrix {
        &self.right[j]
    }

    pub fn left_actions(&self) -> &[ExactMatrix] {
        &self.left
    }

    pub fn right_actions(&self) -> &[ExactMatrix] {
        &self.right
    }

    /// The underlying left `A`-module.
    pub fn left_module(&self) -> ModuleRep {
        ModuleRep::new_unchecked(self.left_alg.clone(), Side::Left, self.dim, self.left.clone())
    }

    /// The underlying right `B`-module.
    pub fn right_module(&self) -> ModuleRep {
        ModuleRep::new_unchecked(self.right_alg.clone(), Side::Right, self.dim, self.right.clone())
    }

    /// The same data as a left module over `A ⊗ B^op`, with `ρ(a ⊗ b) = L_a R_b`.
    pub fn env_module(&self) -> &ModuleRep {
        self.env_module.get_or_init(|| {
            let env = enveloping_algebra(&self.left_alg, &self.right_alg);
            let mut action = Vec::with_capacity(env.dim());
            for l in &self.left {
                for r in &self.right {
                    action.push(l.mul(r));
                }
            }
            ModuleRep::new_unchecked(env, Side::Left, self.dim, action)
        })
    }

    /// `D(M) = Hom_k(M, k)` as a `B`-`A`-bimodule.
    pub fn dual(&self) -> BimoduleRep {
        BimoduleRep::new_unchecked(
            self.right_alg.clone(),
            self.left_alg.clone(),
            self.dim,
            self.right.iter().map(ExactMatrix::transpose).collect(),
            self.left.iter().map(ExactMatrix::transpose).collect(),
        )
    }

    /// The same space as a `B^op`-`A^op`-bimodule.
    pub fn opposite(&self) -> BimoduleRep {
        BimoduleRep::new_unchecked(
            self.right_alg.opposite_arc(),
            self.left_alg.opposite_arc(),
            self.dim,
            self.right.clone(),
            self.left.clone(),
        )
    }

    pub fn direct_sum(parts: &[&BimoduleRep]) -> Result<BimoduleRep, AlgebraError> {
        let first = parts
            .first()
            .ok_or_else(|| AlgebraError::Malformed("direct sum of no bimodules".into()))?;
        for p in parts {
            same_bimodule_category(first, p)?;
        }
        let field = first.field();
        let dim = parts.iter().map(|p| p.dim).sum();
        let block_diag = |pick: &dyn Fn(&BimoduleRep) -> &ExactMatrix| {
            let mut m = ExactMatrix::zeros(field, dim, dim);
            let mut off = 0;
            for p in parts {
                m.set_block(off, off, pick(p));
                off += p.dim;
            }
            m
        };
        let left = (0..first.left_alg.dim()).map(|i| block_diag(&|p| &p.left[i])).collect();
        let right = (0..first.right_alg.dim()).map(|j| block_diag(&|p| &p.right[j])).collect();
        Ok(BimoduleRep::new_unchecked(first.left_alg.clone(), first.right_alg.clone(), dim, left, right))
    }

    /// Restriction along algebra maps `f : A' -> A` and `g : B' -> B` (columns are images).
    pub fn restrict(
        &self,
        a2: Arc<Algebra>,
        f: &ExactMatrix,
        b2: Arc<Algebra>,
        g: &ExactMatrix,
    ) -> Result<BimoduleRep, AlgebraError> {
        let l = self.left_module().restrict(a2.clone(), f)?;
        let r = self.right_module().restrict(b2.clone(), g)?;
        Ok(BimoduleRep::new_unchecked(a2, b2, self.dim, l.actions().to_vec(), r.actions().to_vec()))
    }

    /// Whether `f : self -> target` is a bimodule map.
    pub fn is_hom_to(&self, target: &BimoduleRep, f: &ExactMatrix) -> bool {
        same_bimodule_category(self, target).is_ok()
            && f.shape() == (target.dim, self.dim)
            && self.left.iter().zip(&target.left).all(|(a, b)| f.mul(a) == b.mul(f))
            && self.right.iter().zip(&target.right).all(|(a, b)| f.mul(a) == b.mul(f))
    }

    /// Submodule spanned by the columns of `span` (must be closed under both actions).
    pub fn submodule(&self, span: &ExactMatrix) -> Result<(BimoduleRep, ExactMatrix), AlgebraError> {
        let basis = Basis::spanning(span);
        let restrict = |mats: &[ExactMatrix]| -> Result<Vec<ExactMatrix>, AlgebraError> {
            mats.iter()
                .map(|a| {
                    basis
                        .try_coords(&a.mul(basis.matrix()))
                        .ok_or_else(|| AlgebraError::NotHomomorphism("span is not a sub-bimodule".into()))
                })
                .collect()
        };
        let left = restrict(&self.left)?;
        let right = restrict(&self.right)?;
        let sub = BimoduleRep::new_unchecked(self.left_alg.clone(), self.right_alg.clone(), basis.dim(), left, right);
        Ok((sub, basis.matrix().clone()))
    }

    /// Quotient by the sub-bimodule spanned by `span`.
    pub fn quotient(&self, span: &ExactMatrix) -> Result<(BimoduleRep, Quotient), AlgebraError> {
        self.submodule(span)?;
        let q = Quotient::new(self.field(), self.dim, span);
        let left = self.left.iter().map(|a| q.induced(&q, a)).collect();
        let right = self.right.iter().map(|a| q.induced(&q, a)).collect();
        let out = BimoduleRep::new_unchecked(self.left_alg.clone(), self.right_alg.clone(), q.dim(), left, right);
        Ok((out, q))
    }
}

pub(crate) fn same_bimodule_category(m: &BimoduleRep, n: &BimoduleRep) -> Result<(), AlgebraError> {
    if !same_algebra(&m.left_alg, &n.left_alg) || !same_algebra(&m.right_alg, &n.right_alg) {
        return Err(AlgebraError::Mismatch("bimodules over different algebras".into()));
    }
    Ok(())
}

/// A basis of the bimodule maps `M -> N`.
pub fn bimodule_hom_basis(m: &BimoduleRep, n: &BimoduleRep) -> Result<Vec<ExactMatrix>, AlgebraError> {
    same_bimodule_category(m, n)?;
    let pairs: Vec<(&ExactMatrix, &ExactMatrix)> = m.left.iter().zip(&n.left).chain(m.right.iter().zip(&n.right)).collect();
    Ok(intertwiners(m.field(), m.dim, n.dim, &pairs))
}

/// `X ⊗_B Y` for an `A`-`B`-bimodule `X` and a `B`-`C`-bimodule `Y`, as a quotient of
/// `X ⊗_k Y` (Kronecker coordinates, `X` index major).
pub fn tensor_over(x: &BimoduleRep, y: &BimoduleRep) -> Result<(BimoduleRep, Quotient), AlgebraError> {
    if !same_algebra(&x.right_alg, &y.left_alg) {
        return Err(AlgebraError::Mismatch("tensor product over mismatched algebras".into()));
    }
    let field = x.field();
    let n = x.dim * y.dim;
    let id_x = ExactMatrix::identity(field, x.dim);
    let id_y = ExactMatrix::identity(field, y.dim);
    let rels: Vec<ExactMatrix> = if x.right_alg.dim() == 1 && x.right_alg.unit().get(0, 0).is_one() {
        Vec::new()
    } else {
        x.right
            .iter()
            .zip(&y.left)
            .map(|(r, l)| r.kronecker(&id_y).sub(&id_x.kronecker(l)))
            .collect()
    };
    let span = if rels.is_empty() || n == 0 {
        ExactMatrix::zeros(field, n, 0)
    } else {
        let refs: Vec<&ExactMatrix> = rels.iter().collect();
        ExactMatrix::hstack(&refs, field, n)
    };
    let q = Quotient::new(field, n, &span);
    let left = x.left.iter().map(|a| q.induced(&q, &a.kronecker(&id_y))).collect();
    let right = y.right.iter().map(|c| q.induced(&q, &id_x.kronecker(c))).collect();
    let out = BimoduleRep::new_unchecked(x.left_alg.clone(), y.right_alg.clone(), q.dim(), left, right);
    Ok((out, q))
}

/// `Hom_A(X, Y)` for `A`-`B` and `A`-`C` bimodules, a `B`-`C`-bimodule with
/// `(b f c)(x) = f(x b) c`. The basis spans vectorized `dim Y x dim X` matrices.
pub fn hom_over_left(x: &BimoduleRep, y: &BimoduleRep) -> Result<(BimoduleRep, Basis), AlgebraError> {
    if !same_algebra(&x.left_alg, &y.left_alg) {
        return Err(AlgebraError::Mismatch("Hom over mismatched algebras".into()));
    }
    let pairs: Vec<(&ExactMatrix, &ExactMatrix)> = x.left.iter().zip(&y.left).collect();
    hom_with_actions(x, y, &pairs, x.right_alg.clone(), &x.right, y.right_alg.clone(), &y.right, true)
}

/// `Hom_B(X, Y)` for `A`-`B` and `C`-`B` bimodules, a `C`-`A`-bimodule with
/// `(c f a)(x) = c f(a x)`.
pub fn hom_over_right(x: &BimoduleRep, y: &BimoduleRep) -> Result<(BimoduleRep, Basis), AlgebraError> {
    if !same_algebra(&x.right_alg, &y.right_alg) {
        return Err(AlgebraError::Mismatch("Hom over mismatched algebras".into()));
    }
    let pairs: Vec<(&ExactMatrix, &ExactMatrix)> = x.right.iter().zip(&y.right).collect();
    hom_with_actions(x, y, &pairs, y.left_alg.clone(), &y.left, x.left_alg.clone(), &x.left, false)
}

#[allow(clippy::too_many_arguments)]
fn hom_with_actions(
    x: &BimoduleRep,
    y: &BimoduleRep,
    pairs: &[(&ExactMatrix, &ExactMatrix)],
    new_left: Arc<Algebra>,
    left_src: &[ExactMatrix],
    new_right: Arc<Algebra>,
    right_src: &[ExactMatrix],
    over_left: bool,
) -> Result<(BimoduleRep, Basis), AlgebraError> {
    let field = x.field();
    let homs = intertwiners(field, x.dim, y.dim, pairs);
    let total = x.dim * y.dim;
    let cols: Vec<ExactMatrix> = homs.iter().map(ExactMatrix::vectorize).collect();
    let basis = if cols.is_empty() {
        Basis::new(ExactMatrix::zeros(field, total, 0))
    } else {
        let refs: Vec<&ExactMatrix> = cols.iter().collect();
        Basis::new(ExactMatrix::hstack(&refs, field, total))
    };
    let id_x = ExactMatrix::identity(field, x.dim);
    let id_y = ExactMatrix::identity(field, y.dim);
    let act = |op: ExactMatrix| basis.coords(&op.mul(basis.matrix()));
    // vec(P H Q) = (P ⊗ Q^T) vec(H) for row-major vectorization
    let (left, right): (Vec<ExactMatrix>, Vec<ExactMatrix>) = if over_left {
        (
            left_src.iter().map(|r| act(id_y.kronecker(&r.transpose()))).collect(),
            right_src.iter().map(|r| act(r.kronecker(&id_x))).collect(),
        )
    } else {
        (
            left_src.iter().map(|l| act(l.kronecker(&id_x))).collect(),
            right_src.iter().map(|l| act(id_y.kronecker(&l.transpose()))).collect(),
        )
    };
    let out = BimoduleRep::new_unchecked(new_left, new_right, basis.dim(), left, right);
    Ok((out, basis))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{simple_modules, Arrow};

    fn a2() -> Arc<Algebra> {
        let arrow = Arrow {
            source: 0,
            target: 1,
            label: "a".into(),
        };
        Arc::new(Algebra::path_algebra(Field::Rationals, 2, &[arrow], &[]).unwrap())
    }

    #[test]
    fn regular_bimodule_views() {
        let a = a2();
        let reg = BimoduleRep::regular(a.clone());
        assert_eq!(reg.env_module().algebra().dim(), 9);
        assert_eq!(reg.left_module(), ModuleRep::regular(a.clone(), Side::Left));
        let back = BimoduleRep::from_env_module(a.clone(), a.clone(), reg.env_module()).unwrap();
        assert_eq!(back, reg);
        assert_eq!(reg.opposite().opposite(), reg);
        // bimodule endomorphisms of A form its center, which is k for kA2
        assert_eq!(bimodule_hom_basis(&reg, &reg).unwrap().len(), 1);
    }

    #[test]
    fn tensor_with_regular_is_identity() {
        let a = a2();
        let reg = BimoduleRep::regular(a.clone());
        for s in simple_modules(&a).unwrap() {
            let m = BimoduleRep::from_module(&s);
            let (t, _) = tensor_over(&reg, &m).unwrap();
            assert_eq!(t.dim(), s.dim());
            let (h, _) = hom_over_left(&reg, &m).unwrap();
            assert_eq!(h.dim(), s.dim());
        }
    }

    #[test]
    fn commuting_actions_required() {
        let a = a2();
        let reg = BimoduleRep::regular(a.clone());
        let mut right = reg.right_actions().to_vec();
        right.swap(0, 1);
        assert!(BimoduleRep::new(a.clone(), a, reg.left_actions().to_vec(), right).is_err());
    }
}
