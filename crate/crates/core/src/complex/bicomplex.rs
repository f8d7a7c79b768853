use std::collections::BTreeMap;
use std::sync::Arc;

use super::BoundedComplex;
use crate::algebra::{Algebra, BimoduleRep};
use crate::error::ComplexError;
use crate::linalg::ExactMatrix;

/// A finitely supported double complex with commuting squares. `dh[(p, q)]` maps
/// `X^{p,q} -> X^{p+1,q}` and `dv[(p, q)]` maps `X^{p,q} -> X^{p,q+1}`; missing entries are zero.
#[derive(Clone, Debug)]
pub struct Bicomplex {
    left_alg: Arc<Algebra>,
    right_alg: Arc<Algebra>,
    terms: BTreeMap<(i32, i32), BimoduleRep>,
    dh: BTreeMap<(i32, i32), ExactMatrix>,
    dv: BTreeMap<(i32, i32), ExactMatrix>,
}

impl Bicomplex {
    pub fn new(
        left_alg: Arc<Algebra>,
        right_alg: Arc<Algebra>,
        terms: BTreeMap<(i32, i32), BimoduleRep>,
        dh: BTreeMap<(i32, i32), ExactMatrix>,
        dv: BTreeMap<(i32, i32), ExactMatrix>,
    ) -> Result<Bicomplex, ComplexError> {
        let b = Bicomplex {
            left_alg,
            right_alg,
            terms,
            dh,
            dv,
        };
        for (&(p, q), d) in b.dh.iter().chain(b.dv.iter()) {
            if !b.terms.contains_key(&(p, q)) || d.cols() != b.dim(p, q) {
                return Err(ComplexError::Shape(p + q));
            }
        }
        for &(p, q) in b.terms.keys() {
            let (h, v) = (b.h(p, q), b.v(p, q));
            if h.shape() != (b.dim(p + 1, q), b.dim(p, q)) || v.shape() != (b.dim(p, q + 1), b.dim(p, q)) {
                return Err(ComplexError::Shape(p + q));
            }
            let src = b.term(p, q);
            if !src.is_hom_to(&b.term(p + 1, q), &h) || !src.is_hom_to(&b.term(p, q + 1), &v) {
                return Err(ComplexError::NotEquivariant(p + q));
            }
            let hh = b.h(p + 1, q).mul(&h);
            let vv = b.v(p, q + 1).mul(&v);
            let square = b.v(p + 1, q).mul(&h).sub(&b.h(p, q + 1).mul(&v));
            if !hh.is_zero() || !vv.is_zero() || !square.is_zero() {
                return Err(ComplexError::NotAComplex(p + q));
            }
        }
        Ok(b)
    }

    fn term(&self, p: i32, q: i32) -> BimoduleRep {
        self.terms
            .get(&(p, q))
            .cloned()
            .unwrap_or_else(|| BimoduleRep::zero(self.left_alg.clone(), self.right_alg.clone()))
    }

    pub fn dim(&self, p: i32, q: i32) -> usize {
        self.terms.get(&(p, q)).map_or(0, BimoduleRep::dim)
    }

    fn h(&self, p: i32, q: i32) -> ExactMatrix {
        self.dh
            .get(&(p, q))
            .cloned()
            .unwrap_or_else(|| ExactMatrix::zeros(self.left_alg.field(), self.dim(p + 1, q), self.dim(p, q)))
    }

    fn v(&self, p: i32, q: i32) -> ExactMatrix {
        self.dv
            .get(&(p, q))
            .cloned()
            .unwrap_or_else(|| ExactMatrix::zeros(self.left_alg.field(), self.dim(p, q + 1), self.dim(p, q)))
    }

    /// The total complex: degree `n` is `⊕_{p+q=n} X^{p,q}` and `D = dh + (-1)^p dv`.
    /// Finite support keeps every diagonal bounded.
    pub fn totalize(&self) -> BoundedComplex {
        let field = self.left_alg.field();
        let cells: Vec<(i32, i32)> = self.terms.iter().filter(|(_, t)| t.dim() > 0).map(|(&k, _)| k).collect();
        if cells.is_empty() {
            return BoundedComplex::zero(self.left_alg.clone(), self.right_alg.clone());
        }
        let lo = cells.iter().map(|(p, q)| p + q).min().unwrap();
        let hi = cells.iter().map(|(p, q)| p + q).max().unwrap();
        let diag = |n: i32| -> Vec<(i32, i32)> {
            let mut v: Vec<(i32, i32)> = cells.iter().copied().filter(|(p, q)| p + q == n).collect();
            v.sort();
            v
        };
        let offsets = |cells: &[(i32, i32)]| -> BTreeMap<(i32, i32), usize> {
            let mut acc = 0;
            cells
                .iter()
                .map(|&c| {
                    let o = acc;
                    acc += self.dim(c.0, c.1);
                    (c, o)
                })
                .collect()
        };
        let mut terms = Vec::new();
        let mut diffs = Vec::new();
        for n in lo..=hi {
            let here = diag(n);
            let parts: Vec<BimoduleRep> = here.iter().map(|&(p, q)| self.term(p, q)).collect();
            let refs: Vec<&BimoduleRep> = parts.iter().collect();
            terms.push(if refs.is_empty() {
                BimoduleRep::zero(self.left_alg.clone(), self.right_alg.clone())
            } else {
                BimoduleRep::direct_sum(&refs).expect("same algebras")
            });
            if n < hi {
                let next = diag(n + 1);
                let (src_off, tgt_off) = (offsets(&here), offsets(&next));
                let rows: usize = next.iter().map(|&(p, q)| self.dim(p, q)).sum();
                let cols: usize = here.iter().map(|&(p, q)| self.dim(p, q)).sum();
                let mut d = ExactMatrix::zeros(field, rows, cols);
                for &(p, q) in &here {
                    let c0 = src_off[&(p, q)];
                    if let Some(&r0) = tgt_off.get(&(p + 1, q)) {
                        d.set_block(r0, c0, &self.h(p, q));
                    }
                    if let Some(&r0) = tgt_off.get(&(p, q + 1)) {
                        d.set_block(r0, c0, &self.v(p, q).signed(p.rem_euclid(2) == 0));
                    }
                }
                diffs.push(d);
            }
        }
        BoundedComplex::assemble(self.left_alg.clone(), self.right_alg.clone(), lo, terms, diffs)
    }
}
