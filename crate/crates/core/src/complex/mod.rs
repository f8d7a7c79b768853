//! Bounded cochain complexes of bimodules, chain maps and the standard operations on them.
//!
//! One-sided modules are carried as bimodules over the ground field on the unused side,
//! so a single complex type serves left modules, right modules and bimodules alike.

mod bicomplex;
mod chain_map;
mod homtensor;

pub use bicomplex::Bicomplex;
pub use chain_map::ChainMap;
pub use homtensor::{hom_complex, tensor_complex, HomBlock, HomComplex, Over, TensorBlock, TensorComplex};

use std::fmt;
use std::sync::Arc;

use crate::algebra::{ground_algebra, same_algebra, Algebra, BimoduleRep, ModuleRep, Side};
use crate::error::{AlgebraError, ComplexError};
use crate::linalg::{Basis, ExactMatrix, Field, Quotient};

/// A complex `X^lo -> X^{lo+1} -> ... -> X^hi` with `d^{n+1} d^n = 0`. Degrees outside the
/// stored range hold the zero module. The empty range is the zero complex.
#[derive(Clone, PartialEq, Eq)]
pub struct BoundedComplex {
    left_alg: Arc<Algebra>,
    right_alg: Arc<Algebra>,
    lo: i32,
    terms: Vec<BimoduleRep>,
    diffs: Vec<ExactMatrix>,
}

impl fmt::Debug for BoundedComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let dims: Vec<String> = self.terms.iter().map(|t| t.dim().to_string()).collect();
        write!(f, "complex[{} from degree {}]", dims.join(" -> "), self.lo)
    }
}

/// Homology at one degree: the module together with the cycles (as a basis in the term)
/// and the quotient of cycle coordinates by boundaries.
#[derive(Clone, Debug)]
pub struct Homology {
    pub module: BimoduleRep,
    pub cycles: Basis,
    pub quotient: Quotient,
}

impl BoundedComplex {
    /// Builds a complex starting in degree `lo`; `diffs[k]` maps `terms[k]` to `terms[k+1]`.
    pub fn new(
        left_alg: Arc<Algebra>,
        right_alg: Arc<Algebra>,
        lo: i32,
        terms: Vec<BimoduleRep>,
        diffs: Vec<ExactMatrix>,
    ) -> Result<BoundedComplex, ComplexError> {
        if diffs.len() + 1 != terms.len() && !(terms.is_empty() && diffs.is_empty()) {
            return Err(ComplexError::Shape(lo));
        }
        for (k, t) in terms.iter().enumerate() {
            let n = lo + k as i32;
            if !same_algebra(t.left_algebra(), &left_alg) || !same_algebra(t.right_algebra(), &right_alg) {
                return Err(AlgebraError::Mismatch(format!("term in degree {n} lives over other algebras")).into());
            }
        }
        for (k, d) in diffs.iter().enumerate() {
            let n = lo + k as i32;
            if d.shape() != (terms[k + 1].dim(), terms[k].dim()) {
                return Err(ComplexError::Shape(n));
            }
            if !terms[k].is_hom_to(&terms[k + 1], d) {
                return Err(ComplexError::NotEquivariant(n));
            }
            if k > 0 && !d.mul(&diffs[k - 1]).is_zero() {
                return Err(ComplexError::NotAComplex(n - 1));
            }
        }
        Ok(BoundedComplex::assemble(left_alg, right_alg, lo, terms, diffs))
    }

    /// Trims zero terms at both ends without validation.
    pub(crate) fn assemble(
        left_alg: Arc<Algebra>,
        right_alg: Arc<Algebra>,
        mut lo: i32,
        mut terms: Vec<BimoduleRep>,
        mut diffs: Vec<ExactMatrix>,
    ) -> BoundedComplex {
        while terms.last().is_some_and(|t| t.dim() == 0) {
            terms.pop();
            diffs.pop();
        }
        while terms.first().is_some_and(|t| t.dim() == 0) {
            terms.remove(0);
            if !diffs.is_empty() {
                diffs.remove(0);
            }
            lo += 1;
        }
        if terms.is_empty() {
            lo = 0;
            diffs.clear();
        }
        debug_assert!(terms.is_empty() || diffs.len() + 1 == terms.len());
        BoundedComplex {
            left_alg,
            right_alg,
            lo,
            terms,
            diffs,
        }
    }

    pub fn zero(left_alg: Arc<Algebra>, right_alg: Arc<Algebra>) -> BoundedComplex {
        BoundedComplex::assemble(left_alg, right_alg, 0, Vec::new(), Vec::new())
    }

    /// `m` placed in a single degree.
    pub fn concentrated(m: BimoduleRep, degree: i32) -> BoundedComplex {
        BoundedComplex::assemble(m.left_algebra().clone(), m.right_algebra().clone(), degree, vec![m], Vec::new())
    }

    /// A one-sided module placed in a single degree.
    pub fn from_module(m: &ModuleRep, degree: i32) -> BoundedComplex {
        BoundedComplex::concentrated(BimoduleRep::from_module(m), degree)
    }

    /// A complex of one-sided modules over the same algebra and side.
    pub fn from_modules(lo: i32, terms: &[ModuleRep], diffs: Vec<ExactMatrix>) -> Result<BoundedComplex, ComplexError> {
        let first = terms
            .first()
            .ok_or_else(|| AlgebraError::Malformed("complex of one-sided modules needs a term".into()))?;
        let k = ground_algebra(first.field());
        let (a, b) = match first.side() {
            Side::Left => (first.algebra().clone(), k),
            Side::Right => (k, first.algebra().clone()),
        };
        let bis = terms.iter().map(BimoduleRep::from_module).collect();
        BoundedComplex::new(a, b, lo, bis, diffs)
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

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `(lo, hi)` of the nonzero terms, or `None` for the zero complex.
    pub fn support(&self) -> Option<(i32, i32)> {
        (!self.terms.is_empty()).then(|| (self.lo, self.lo + self.terms.len() as i32 - 1))
    }

    pub fn lo(&self) -> Option<i32> {
        self.support().map(|s| s.0)
    }

    pub fn hi(&self) -> Option<i32> {
        self.support().map(|s| s.1)
    }

    fn index(&self, n: i32) -> Option<usize> {
        let k = n.checked_sub(self.lo)?;
        (k >= 0 && (k as usize) < self.terms.len()).then_some(k as usize)
    }

    pub fn term(&self, n: i32) -> Option<&BimoduleRep> {
        self.index(n).map(|k| &self.terms[k])
    }

    /// The term in degree `n`, the zero bimodule outside the support.
    pub fn term_or_zero(&self, n: i32) -> BimoduleRep {
        self.term(n)
            .cloned()
            .unwrap_or_else(|| BimoduleRep::zero(self.left_alg.clone(), self.right_alg.clone()))
    }

    pub fn dim(&self, n: i32) -> usize {
        self.term(n).map_or(0, BimoduleRep::dim)
    }

    pub fn total_dim(&self) -> usize {
        self.terms.iter().map(BimoduleRep::dim).sum()
    }

    /// `d^n : X^n -> X^{n+1}` (a possibly empty zero matrix outside the support).
    pub fn diff(&self, n: i32) -> ExactMatrix {
        match (self.index(n), self.index(n + 1)) {
            (Some(k), Some(_)) => self.diffs[k].clone(),
            _ => ExactMatrix::zeros(self.field(), self.dim(n + 1), self.dim(n)),
        }
    }

    /// Iterates over `(degree, term)`.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &BimoduleRep)> {
        self.terms.iter().enumerate().map(move |(k, t)| (self.lo + k as i32, t))
    }

    pub fn homology(&self, n: i32) -> Homology {
        let term = self.term_or_zero(n);
        let (z, incl) = term.submodule(&self.diff(n).kernel_basis()).expect("cycles form a submodule");
        let cycles = Basis::new(incl);
        let boundaries = cycles.coords(&self.diff(n - 1));
        let (module, quotient) = z.quotient(&boundaries).expect("boundaries form a submodule");
        Homology {
            module,
            cycles,
            quotient,
        }
    }

    /// `dim H^n`, computed from ranks only.
    pub fn homology_dim(&self, n: i32) -> usize {
        let dn = self.dim(n);
        if dn == 0 {
            return 0;
        }
        dn - self.diff(n).rank() - self.diff(n - 1).rank()
    }

    /// Nonzero homology dimensions by degree.
    pub fn homology_dims(&self) -> Vec<(i32, usize)> {
        match self.support() {
            None => Vec::new(),
            Some((lo, hi)) => (lo..=hi)
                .map(|n| (n, self.homology_dim(n)))
                .filter(|&(_, d)| d > 0)
                .collect(),
        }
    }

    pub fn is_acyclic(&self) -> bool {
        self.homology_dims().is_empty()
    }

    /// Whether `H^n = 0` for every `n` in `[lo, hi]`.
    pub fn is_acyclic_in(&self, lo: i32, hi: i32) -> bool {
        (lo..=hi).all(|n| self.homology_dim(n) == 0)
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.terms()
            .map(|(n, t)| if n.rem_euclid(2) == 0 { t.dim() as i64 } else { -(t.dim() as i64) })
            .sum()
    }

    /// `X[k]`: degree `n` holds `X^{n+k}`, differentials multiplied by `(-1)^k`.
    pub fn shift(&self, k: i32) -> BoundedComplex {
        let sign = k.rem_euclid(2) == 0;
        BoundedComplex::assemble(
            self.left_alg.clone(),
            self.right_alg.clone(),
            self.lo - k,
            self.terms.clone(),
            self.diffs.iter().map(|d| d.signed(sign)).collect(),
        )
    }

    /// Terms in degrees `>= n` (brutal truncation).
    pub fn brutal_above(&self, n: i32) -> BoundedComplex {
        self.window(n, i32::MAX)
    }

    /// Terms in degrees `<= n` (brutal truncation).
    pub fn brutal_below(&self, n: i32) -> BoundedComplex {
        self.window(i32::MIN, n)
    }

    /// Terms in degrees `lo..=hi`.
    pub fn window(&self, lo: i32, hi: i32) -> BoundedComplex {
        let Some((a, b)) = self.support() else {
            return self.clone();
        };
        let (lo, hi) = (lo.max(a), hi.min(b));
        if lo > hi {
            return BoundedComplex::zero(self.left_alg.clone(), self.right_alg.clone());
        }
        let s = (lo - a) as usize;
        let e = (hi - a) as usize;
        BoundedComplex::assemble(
            self.left_alg.clone(),
            self.right_alg.clone(),
            lo,
            self.terms[s..=e].to_vec(),
            self.diffs[s..e].to_vec(),
        )
    }

    /// Canonical truncation `τ≤n` (top term replaced by the cycles) and its inclusion.
    pub fn truncate_above(&self, n: i32) -> (BoundedComplex, ChainMap) {
        let Some((lo, hi)) = self.support() else {
            return (self.clone(), ChainMap::identity(self));
        };
        if n >= hi {
            return (self.clone(), ChainMap::identity(self));
        }
        if n < lo {
            let z = BoundedComplex::zero(self.left_alg.clone(), self.right_alg.clone());
            return (z.clone(), ChainMap::zero(&z, self));
        }
        let k = (n - lo) as usize;
        let cycles = self.diff(n).kernel_basis();
        let (zmod, incl) = self.terms[k].submodule(&cycles).expect("cycles form a submodule");
        let basis = Basis::new(incl.clone());
        let mut terms = self.terms[..k].to_vec();
        terms.push(zmod);
        let mut diffs = self.diffs[..k.saturating_sub(1)].to_vec();
        if k > 0 {
            diffs.push(basis.coords(&self.diffs[k - 1]));
        }
        let trunc = BoundedComplex::assemble(self.left_alg.clone(), self.right_alg.clone(), lo, terms, diffs);
        let mut comps: Vec<(i32, ExactMatrix)> = (lo..n).map(|m| (m, ExactMatrix::identity(self.field(), self.dim(m)))).collect();
        comps.push((n, incl));
        let map = ChainMap::from_components_unchecked(&trunc, self, comps);
        (trunc, map)
    }

    /// Canonical truncation `τ≥n` (bottom term replaced by the cokernel) and its projection.
    pub fn truncate_below(&self, n: i32) -> (BoundedComplex, ChainMap) {
        let Some((lo, hi)) = self.support() else {
            return (self.clone(), ChainMap::identity(self));
        };
        if n <= lo {
            return (self.clone(), ChainMap::identity(self));
        }
        if n > hi {
            let z = BoundedComplex::zero(self.left_alg.clone(), self.right_alg.clone());
            return (z.clone(), ChainMap::zero(self, &z));
        }
        let k = (n - lo) as usize;
        let boundaries = self.diff(n - 1);
        let (cmod, q) = self.terms[k].quotient(&boundaries).expect("boundaries form a submodule");
        let mut terms = vec![cmod];
        terms.extend_from_slice(&self.terms[k + 1..]);
        let mut diffs = Vec::new();
        if n < hi {
            diffs.push(self.diffs[k].mul(&q.section));
            diffs.extend_from_slice(&self.diffs[k + 1..]);
        }
        let trunc = BoundedComplex::assemble(self.left_alg.clone(), self.right_alg.clone(), n, terms, diffs);
        let mut comps = vec![(n, q.projection.clone())];
        comps.extend((n + 1..=hi).map(|m| (m, ExactMatrix::identity(self.field(), self.dim(m)))));
        let map = ChainMap::from_components_unchecked(self, &trunc, comps);
        (trunc, map)
    }

    /// `D(X)` with `D(X)^n = D(X^{-n})` and differentials transposed; sides swap.
    pub fn dual(&self) -> BoundedComplex {
        let Some((_, hi)) = self.support() else {
            return BoundedComplex::zero(self.right_alg.clone(), self.left_alg.clone());
        };
        let terms = self.terms.iter().rev().map(BimoduleRep::dual).collect();
        let diffs = self.diffs.iter().rev().map(ExactMatrix::transpose).collect();
        BoundedComplex::assemble(self.right_alg.clone(), self.left_alg.clone(), -hi, terms, diffs)
    }

    /// The same complex over the opposite algebras with sides exchanged.
    pub fn opposite(&self) -> BoundedComplex {
        BoundedComplex::assemble(
            self.right_alg.opposite_arc(),
            self.left_alg.opposite_arc(),
            self.lo,
            self.terms.iter().map(BimoduleRep::opposite).collect(),
            self.diffs.clone(),
        )
    }

    /// The underlying complex of vector spaces.
    pub fn underlying(&self) -> BoundedComplex {
        let k = ground_algebra(self.field());
        let terms = self
            .terms
            .iter()
            .map(|t| {
                let id = vec![ExactMatrix::identity(self.field(), t.dim())];
                BimoduleRep::new_unchecked(k.clone(), k.clone(), t.dim(), id.clone(), id)
            })
            .collect();
        BoundedComplex::assemble(k.clone(), k, self.lo, terms, self.diffs.clone())
    }

    /// Forgets the right action (keeps the left module structure).
    pub fn left_part(&self) -> BoundedComplex {
        let k = ground_algebra(self.field());
        let terms = self.terms.iter().map(|t| BimoduleRep::from_module(&t.left_module())).collect();
        BoundedComplex::assemble(self.left_alg.clone(), k, self.lo, terms, self.diffs.clone())
    }

    /// Forgets the left action (keeps the right module structure).
    pub fn right_part(&self) -> BoundedComplex {
        let k = ground_algebra(self.field());
        let terms = self.terms.iter().map(|t| BimoduleRep::from_module(&t.right_module())).collect();
        BoundedComplex::assemble(k, self.right_alg.clone(), self.lo, terms, self.diffs.clone())
    }

    pub fn direct_sum(parts: &[&BoundedComplex]) -> Result<BoundedComplex, ComplexError> {
        let first = parts
            .first()
            .ok_or_else(|| AlgebraError::Malformed("direct sum of no complexes".into()))?;
        let nonzero: Vec<&&BoundedComplex> = parts.iter().filter(|c| !c.is_zero()).collect();
        if nonzero.is_empty() {
            return Ok(BoundedComplex::zero(first.left_alg.clone(), first.right_alg.clone()));
        }
        let lo = nonzero.iter().map(|c| c.lo).min().unwrap();
        let hi = nonzero.iter().map(|c| c.hi().unwrap()).max().unwrap();
        let field = first.field();
        let mut terms = Vec::new();
        let mut diffs = Vec::new();
        for n in lo..=hi {
            let ts: Vec<BimoduleRep> = parts.iter().map(|c| c.term_or_zero(n)).collect();
            let refs: Vec<&BimoduleRep> = ts.iter().collect();
            terms.push(BimoduleRep::direct_sum(&refs)?);
            if n < hi {
                let rows: usize = parts.iter().map(|c| c.dim(n + 1)).sum();
                let cols: usize = parts.iter().map(|c| c.dim(n)).sum();
                let mut d = ExactMatrix::zeros(field, rows, cols);
                let (mut r, mut c0) = (0, 0);
                for c in parts {
                    d.set_block(r, c0, &c.diff(n));
                    r += c.dim(n + 1);
                    c0 += c.dim(n);
                }
                diffs.push(d);
            }
        }
        Ok(BoundedComplex::assemble(first.left_alg.clone(), first.right_alg.clone(), lo, terms, diffs))
    }

    /// The terms as left modules over `A ⊗ B^op`.
    pub fn env_terms(&self) -> Vec<ModuleRep> {
        self.terms.iter().map(|t| t.env_module().clone()).collect()
    }
}

#[cfg(test)]
mod tests;
