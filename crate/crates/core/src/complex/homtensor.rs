use std::collections::BTreeMap;

use super::BoundedComplex;
use crate::algebra::{hom_over_left, hom_over_right, same_algebra, tensor_over, BimoduleRep};
use crate::error::{AlgebraError, ComplexError};
use crate::linalg::{Basis, ExactMatrix, Quotient};

/// Which action a Hom complex is taken over.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Over {
    /// `Hom_A(X, Y)` for complexes of `A`-`B` and `A`-`C` bimodules; a `B`-`C` complex.
    Left,
    /// `Hom_B(X, Y)` for complexes of `A`-`B` and `C`-`B` bimodules; a `C`-`A` complex.
    Right,
}

/// The summand `Hom(X^p, Y^{p+n})` of a Hom complex in degree `n`.
#[derive(Clone, Debug)]
pub struct HomBlock {
    pub p: i32,
    pub offset: usize,
    /// Vectorized (row-major) maps `X^p -> Y^{p+n}` spanning the summand.
    pub basis: Basis,
    pub src_dim: usize,
    pub tgt_dim: usize,
}

/// `Hom(X, Y)` with `(D f) = d f - (-1)^n f d`, remembering how each degree decomposes.
#[derive(Clone, Debug)]
pub struct HomComplex {
    pub complex: BoundedComplex,
    pub blocks: BTreeMap<i32, Vec<HomBlock>>,
}

/// The summand `X^p ⊗ Y^{n-p}` of a tensor complex in degree `n`.
#[derive(Clone, Debug)]
pub struct TensorBlock {
    pub p: i32,
    pub offset: usize,
    /// Quotient of the Kronecker space (`X` index major) by the balancing relations.
    pub quotient: Quotient,
    pub left_dim: usize,
    pub right_dim: usize,
}

/// `X ⊗ Y` with `d(x ⊗ y) = dx ⊗ y + (-1)^p x ⊗ dy`.
#[derive(Clone, Debug)]
pub struct TensorComplex {
    pub complex: BoundedComplex,
    pub blocks: BTreeMap<i32, Vec<TensorBlock>>,
}

fn block_dim_sum<T>(blocks: &[T], dim: impl Fn(&T) -> usize) -> usize {
    blocks.iter().map(dim).sum()
}

pub fn hom_complex(x: &BoundedComplex, y: &BoundedComplex, over: Over) -> Result<HomComplex, ComplexError> {
    let field = x.field();
    let (new_left, new_right) = match over {
        Over::Left => {
            if !same_algebra(x.left_algebra(), y.left_algebra()) {
                return Err(AlgebraError::Mismatch("Hom complex over mismatched algebras".into()).into());
            }
            (x.right_algebra().clone(), y.right_algebra().clone())
        }
        Over::Right => {
            if !same_algebra(x.right_algebra(), y.right_algebra()) {
                return Err(AlgebraError::Mismatch("Hom complex over mismatched algebras".into()).into());
            }
            (y.left_algebra().clone(), x.left_algebra().clone())
        }
    };
    let (Some((x0, x1)), Some((y0, y1))) = (x.support(), y.support()) else {
        return Ok(HomComplex {
            complex: BoundedComplex::zero(new_left, new_right),
            blocks: BTreeMap::new(),
        });
    };
    let (lo, hi) = (y0 - x1, y1 - x0);
    let mut blocks = BTreeMap::new();
    let mut terms = Vec::new();
    for n in lo..=hi {
        let mut bl = Vec::new();
        let mut mods = Vec::new();
        let mut offset = 0;
        for p in x0..=x1 {
            let (Some(xs), Some(yt)) = (x.term(p), y.term(p + n)) else { continue };
            let (m, basis) = match over {
                Over::Left => hom_over_left(xs, yt)?,
                Over::Right => hom_over_right(xs, yt)?,
            };
            if m.dim() == 0 {
                continue;
            }
            bl.push(HomBlock {
                p,
                offset,
                basis,
                src_dim: xs.dim(),
                tgt_dim: yt.dim(),
            });
            offset += m.dim();
            mods.push(m);
        }
        let refs: Vec<&BimoduleRep> = mods.iter().collect();
        terms.push(if refs.is_empty() {
            BimoduleRep::zero(new_left.clone(), new_right.clone())
        } else {
            BimoduleRep::direct_sum(&refs)?
        });
        blocks.insert(n, bl);
    }
    let mut diffs = Vec::new();
    for n in lo..hi {
        let src = &blocks[&n];
        let tgt = &blocks[&(n + 1)];
        let rows = block_dim_sum(tgt, |b: &HomBlock| b.basis.dim());
        let cols = block_dim_sum(src, |b: &HomBlock| b.basis.dim());
        let mut d = ExactMatrix::zeros(field, rows, cols);
        let sign_positive = n.rem_euclid(2) == 1;
        for b in src {
            let dy = y.diff(b.p + n);
            let dx = x.diff(b.p - 1);
            let up = tgt.iter().find(|t| t.p == b.p);
            let left = tgt.iter().find(|t| t.p == b.p - 1);
            for j in 0..b.basis.dim() {
                let f = ExactMatrix::unvectorize(b.basis.matrix(), j, b.tgt_dim, b.src_dim);
                if let Some(t) = up {
                    let img = dy.mul(&f).vectorize();
                    d.set_block(t.offset, b.offset + j, &t.basis.coords(&img));
                }
                if let Some(t) = left {
                    let img = f.mul(&dx).signed(sign_positive).vectorize();
                    d.set_block(t.offset, b.offset + j, &t.basis.coords(&img));
                }
            }
        }
        diffs.push(d);
    }
    let complex = BoundedComplex::assemble(new_left, new_right, lo, terms, diffs);
    Ok(HomComplex { complex, blocks })
}

impl HomComplex {
    pub fn block(&self, n: i32, p: i32) -> Option<&HomBlock> {
        self.blocks.get(&n)?.iter().find(|b| b.p == p)
    }

    /// The element of degree `n` whose component on `X^p` is the given map.
    pub fn encode(&self, n: i32, maps: &[(i32, ExactMatrix)]) -> ExactMatrix {
        let field = self.complex.field();
        let mut v = ExactMatrix::zeros(field, self.complex.dim(n), 1);
        for (p, f) in maps {
            if let Some(b) = self.block(n, *p) {
                v.set_block(b.offset, 0, &b.basis.coords(&f.vectorize()));
            }
        }
        v
    }

    /// The components `X^p -> Y^{p+n}` of column `col` of `v`.
    pub fn decode(&self, n: i32, v: &ExactMatrix, col: usize) -> Vec<(i32, ExactMatrix)> {
        let Some(bl) = self.blocks.get(&n) else { return Vec::new() };
        bl.iter()
            .map(|b| {
                let coords = v.block(b.offset, col, b.basis.dim(), 1);
                let flat = b.basis.matrix().mul(&coords);
                (b.p, ExactMatrix::unvectorize(&flat, 0, b.tgt_dim, b.src_dim))
            })
            .collect()
    }

    /// The component on `X^p` of column `col` (zero if that block is absent).
    pub fn component(&self, n: i32, p: i32, v: &ExactMatrix, col: usize) -> Option<ExactMatrix> {
        let b = self.block(n, p)?;
        let coords = v.block(b.offset, col, b.basis.dim(), 1);
        Some(ExactMatrix::unvectorize(&b.basis.matrix().mul(&coords), 0, b.tgt_dim, b.src_dim))
    }
}

pub fn tensor_complex(x: &BoundedComplex, y: &BoundedComplex) -> Result<TensorComplex, ComplexError> {
    if !same_algebra(x.right_algebra(), y.left_algebra()) {
        return Err(AlgebraError::Mismatch("tensor complex over mismatched algebras".into()).into());
    }
    let field = x.field();
    let (new_left, new_right) = (x.left_algebra().clone(), y.right_algebra().clone());
    let (Some((x0, x1)), Some((y0, y1))) = (x.support(), y.support()) else {
        return Ok(TensorComplex {
            complex: BoundedComplex::zero(new_left, new_right),
            blocks: BTreeMap::new(),
        });
    };
    let (lo, hi) = (x0 + y0, x1 + y1);
    let mut blocks = BTreeMap::new();
    let mut terms = Vec::new();
    for n in lo..=hi {
        let mut bl = Vec::new();
        let mut mods = Vec::new();
        let mut offset = 0;
        for p in x0..=x1 {
            let (Some(xs), Some(yt)) = (x.term(p), y.term(n - p)) else { continue };
            let (m, quotient) = tensor_over(xs, yt)?;
            if m.dim() == 0 {
                continue;
            }
            bl.push(TensorBlock {
                p,
                offset,
                quotient,
                left_dim: xs.dim(),
                right_dim: yt.dim(),
            });
            offset += m.dim();
            mods.push(m);
        }
        let refs: Vec<&BimoduleRep> = mods.iter().collect();
        terms.push(if refs.is_empty() {
            BimoduleRep::zero(new_left.clone(), new_right.clone())
        } else {
            BimoduleRep::direct_sum(&refs)?
        });
        blocks.insert(n, bl);
    }
    let mut diffs = Vec::new();
    for n in lo..hi {
        let src = &blocks[&n];
        let tgt = &blocks[&(n + 1)];
        let rows = block_dim_sum(tgt, |b: &TensorBlock| b.quotient.dim());
        let cols = block_dim_sum(src, |b: &TensorBlock| b.quotient.dim());
        let mut d = ExactMatrix::zeros(field, rows, cols);
        for b in src {
            let q = n - b.p;
            if let Some(t) = tgt.iter().find(|t| t.p == b.p + 1) {
                let kron = x.diff(b.p).kronecker(&ExactMatrix::identity(field, b.right_dim));
                d.set_block(t.offset, b.offset, &t.quotient.projection.mul(&kron.mul(&b.quotient.section)));
            }
            if let Some(t) = tgt.iter().find(|t| t.p == b.p) {
                let kron = ExactMatrix::identity(field, b.left_dim).kronecker(&y.diff(q));
                let m = t.quotient.projection.mul(&kron.mul(&b.quotient.section));
                d.set_block(t.offset, b.offset, &m.signed(b.p.rem_euclid(2) == 0));
            }
        }
        diffs.push(d);
    }
    let complex = BoundedComplex::assemble(new_left, new_right, lo, terms, diffs);
    Ok(TensorComplex { complex, blocks })
}

impl TensorComplex {
    pub fn block(&self, n: i32, p: i32) -> Option<&TensorBlock> {
        self.blocks.get(&n)?.iter().find(|b| b.p == p)
    }

    /// The class in degree `n` of a Kronecker vector in `X^p ⊗_k Y^{n-p}`.
    pub fn class_of(&self, n: i32, p: i32, kron: &ExactMatrix) -> ExactMatrix {
        let field = self.complex.field();
        let mut v = ExactMatrix::zeros(field, self.complex.dim(n), kron.cols());
        if let Some(b) = self.block(n, p) {
            v.set_block(b.offset, 0, &b.quotient.projection.mul(kron));
        }
        v
    }
}
