use std::collections::BTreeMap;

use super::BoundedComplex;
use crate::algebra::BimoduleRep;
use crate::error::ComplexError;
use crate::linalg::{ExactMatrix, Scalar};

/// A degree-preserving map of complexes, stored componentwise.
#[derive(Clone, Debug)]
pub struct ChainMap {
    source: BoundedComplex,
    target: BoundedComplex,
    comps: BTreeMap<i32, ExactMatrix>,
}

fn degree_span(a: &BoundedComplex, b: &BoundedComplex) -> Option<(i32, i32)> {
    match (a.support(), b.support()) {
        (None, None) => None,
        (Some(s), None) | (None, Some(s)) => Some(s),
        (Some((a0, a1)), Some((b0, b1))) => Some((a0.min(b0), a1.max(b1))),
    }
}

impl ChainMap {
    /// Checks shapes, equivariance in every degree and `d f = f d`.
    pub fn new(
        source: &BoundedComplex,
        target: &BoundedComplex,
        comps: Vec<(i32, ExactMatrix)>,
    ) -> Result<ChainMap, ComplexError> {
        let map = ChainMap::from_components_unchecked(source, target, comps);
        for (&n, f) in &map.comps {
            if f.shape() != (target.dim(n), source.dim(n)) {
                return Err(ComplexError::Shape(n));
            }
            if !source.term_or_zero(n).is_hom_to(&target.term_or_zero(n), f) {
                return Err(ComplexError::NotEquivariant(n));
            }
        }
        if let Some((lo, hi)) = degree_span(source, target) {
            for n in lo - 1..=hi {
                let lhs = target.diff(n).mul(&map.component(n));
                let rhs = map.component(n + 1).mul(&source.diff(n));
                if lhs != rhs {
                    return Err(ComplexError::NotAChainMap(n));
                }
            }
        }
        Ok(map)
    }

    /// Components in degrees outside both supports, or of empty shape, are dropped.
    pub(crate) fn from_components_unchecked(
        source: &BoundedComplex,
        target: &BoundedComplex,
        comps: Vec<(i32, ExactMatrix)>,
    ) -> ChainMap {
        let comps = comps
            .into_iter()
            .filter(|(n, f)| source.dim(*n) > 0 && target.dim(*n) > 0 && f.rows() > 0 && f.cols() > 0)
            .collect();
        ChainMap {
            source: source.clone(),
            target: target.clone(),
            comps,
        }
    }

    pub fn identity(x: &BoundedComplex) -> ChainMap {
        let comps = x.terms().map(|(n, t)| (n, ExactMatrix::identity(x.field(), t.dim()))).collect();
        ChainMap::from_components_unchecked(x, x, comps)
    }

    pub fn zero(source: &BoundedComplex, target: &BoundedComplex) -> ChainMap {
        ChainMap::from_components_unchecked(source, target, Vec::new())
    }

    pub fn source(&self) -> &BoundedComplex {
        &self.source
    }

    pub fn target(&self) -> &BoundedComplex {
        &self.target
    }

    /// The component `X^n -> Y^n` (zero when not stored).
    pub fn component(&self, n: i32) -> ExactMatrix {
        self.comps
            .get(&n)
            .cloned()
            .unwrap_or_else(|| ExactMatrix::zeros(self.source.field(), self.target.dim(n), self.source.dim(n)))
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &ChainMap) -> ChainMap {
        let comps = self
            .comps
            .iter()
            .map(|(&n, f)| (n, other.component(n).mul(f)))
            .collect();
        ChainMap::from_components_unchecked(&self.source, &other.target, comps)
    }

    pub fn add(&self, other: &ChainMap) -> ChainMap {
        let mut degrees: Vec<i32> = self.comps.keys().chain(other.comps.keys()).copied().collect();
        degrees.sort_unstable();
        degrees.dedup();
        let comps = degrees
            .into_iter()
            .map(|n| (n, self.component(n).add(&other.component(n))))
            .collect();
        ChainMap::from_components_unchecked(&self.source, &self.target, comps)
    }

    pub fn scale(&self, s: &Scalar) -> ChainMap {
        let comps = self.comps.iter().map(|(&n, f)| (n, f.scale(s))).collect();
        ChainMap::from_components_unchecked(&self.source, &self.target, comps)
    }

    /// The same components between the underlying complexes of vector spaces.
    pub fn underlying(&self) -> ChainMap {
        ChainMap {
            source: self.source.underlying(),
            target: self.target.underlying(),
            comps: self.comps.clone(),
        }
    }

    /// `Cone(f)^n = X^{n+1} ⊕ Y^n` with `d(x, y) = (-d x, f x + d y)`.
    pub fn cone(&self) -> BoundedComplex {
        let (x, y) = (&self.source, &self.target);
        let field = x.field();
        let Some((lo, hi)) = degree_span(&x.shift(1), y) else {
            return BoundedComplex::zero(y.left_algebra().clone(), y.right_algebra().clone());
        };
        let mut terms = Vec::new();
        let mut diffs = Vec::new();
        for n in lo..=hi {
            let (xt, yt) = (x.term_or_zero(n + 1), y.term_or_zero(n));
            terms.push(BimoduleRep::direct_sum(&[&xt, &yt]).expect("same algebras"));
            if n < hi {
                let (xa, ya, xb, yb) = (x.dim(n + 1), y.dim(n), x.dim(n + 2), y.dim(n + 1));
                let mut d = ExactMatrix::zeros(field, xb + yb, xa + ya);
                d.set_block(0, 0, &x.diff(n + 1).neg());
                d.set_block(xb, 0, &self.component(n + 1));
                d.set_block(xb, xa, &y.diff(n));
                diffs.push(d);
            }
        }
        BoundedComplex::assemble(y.left_algebra().clone(), y.right_algebra().clone(), lo, terms, diffs)
    }

    pub fn is_quasi_isomorphism(&self) -> bool {
        self.cone().is_acyclic()
    }

    /// Whether `H^n(Cone f) = 0` for `n` in `[lo, hi]`; this makes `H^m(f)` bijective
    /// for `m` in `[lo + 1, hi]`.
    pub fn cone_acyclic_in(&self, lo: i32, hi: i32) -> bool {
        self.cone().is_acyclic_in(lo, hi)
    }

    /// `H^n(f)` in the bases of [`BoundedComplex::homology`].
    pub fn homology_map(&self, n: i32) -> ExactMatrix {
        let hs = self.source.homology(n);
        let ht = self.target.homology(n);
        let lifted = self.component(n).mul(&hs.cycles.matrix().mul(&hs.quotient.section));
        ht.quotient.projection.mul(&ht.cycles.coords(&lifted))
    }

    pub fn is_zero(&self) -> bool {
        self.comps.values().all(ExactMatrix::is_zero)
    }
}
