//! Finite-dimensional associative unital algebras given by structure constants.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, OnceLock, Weak};

use crate::error::AlgebraError;
use crate::linalg::{Basis, ExactMatrix, Field, Quotient, Scalar};

use super::poly;

/// An algebra with basis `e_0, ..., e_{n-1}`. Multiplication is stored as the left
/// multiplication matrices `L_i : x -> e_i x`, so column `j` of `L_i` holds the
/// coordinates of `e_i e_j`.
#[derive(Clone)]
pub struct Algebra {
    field: Field,
    labels: Vec<String>,
    left: Vec<ExactMatrix>,
    unit: ExactMatrix,
    cache: Cache,
}

#[derive(Clone, Default)]
struct Cache {
    right: OnceLock<Vec<ExactMatrix>>,
    radical: OnceLock<ExactMatrix>,
    idempotents: OnceLock<Result<Vec<ExactMatrix>, AlgebraError>>,
    opposite: OnceLock<Arc<Algebra>>,
    opposite_of: OnceLock<Weak<Algebra>>,
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self, other)
            || (self.field == other.field && self.unit == other.unit && self.left == other.left)
    }
}

impl Eq for Algebra {}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Algebra(dim {} over {}, basis {:?})", self.dim(), self.field, self.labels)
    }
}

/// A path in a quiver, written in traversal order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Path {
    start: usize,
    end: usize,
    arrows: Vec<usize>,
}

/// Arrow of a quiver; vertices are numbered from zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub source: usize,
    pub target: usize,
    pub label: String,
}

/// A linear combination of paths, each given as arrow indices in traversal order.
pub type Relation = Vec<(Scalar, Vec<usize>)>;

const MAX_PATH_LENGTH: usize = 24;
const MAX_PATHS: usize = 4000;

impl Algebra {
    /// Builds an algebra from `structure[i][j]`, the coordinates of `e_i e_j`, and
    /// the coordinates of the unit. Associativity and the unit laws are verified.
    pub fn from_structure_constants(
        field: Field,
        labels: Vec<String>,
        structure: &[Vec<Vec<Scalar>>],
        unit: &[Scalar],
    ) -> Result<Algebra, AlgebraError> {
        let n = labels.len();
        if structure.len() != n || unit.len() != n {
            return Err(AlgebraError::Malformed(format!(
                "expected {n} basis elements in structure constants and unit"
            )));
        }
        let mut left = Vec::with_capacity(n);
        for (i, row) in structure.iter().enumerate() {
            if row.len() != n || row.iter().any(|v| v.len() != n) {
                return Err(AlgebraError::Malformed(format!("row {i} of structure constants has wrong length")));
            }
            left.push(ExactMatrix::from_fn(field, n, n, |k, j| row[j][k].clone()));
        }
        let unit = ExactMatrix::column_vector(field, unit.to_vec());
        Algebra::from_left_multiplication(field, labels, left, unit)
    }

    /// Builds an algebra from its left multiplication matrices, verifying the axioms.
    pub fn from_left_multiplication(
        field: Field,
        labels: Vec<String>,
        left: Vec<ExactMatrix>,
        unit: ExactMatrix,
    ) -> Result<Algebra, AlgebraError> {
        let a = Algebra::assemble(field, labels, left, unit);
        a.verify()?;
        Ok(a)
    }

    fn assemble(field: Field, labels: Vec<String>, left: Vec<ExactMatrix>, unit: ExactMatrix) -> Algebra {
        Algebra {
            field,
            labels,
            left,
            unit,
            cache: Cache::default(),
        }
    }

    fn verify(&self) -> Result<(), AlgebraError> {
        let n = self.dim();
        for l in &self.left {
            if l.shape() != (n, n) || l.field() != self.field {
                return Err(AlgebraError::Malformed("multiplication matrix has wrong shape".into()));
            }
        }
        if self.unit.shape() != (n, 1) {
            return Err(AlgebraError::Malformed("unit has wrong length".into()));
        }
        for i in 0..n {
            for j in 0..n {
                let lhs = self.left[i].mul(&self.left[j]);
                let rhs = self.left_mult(&self.left[i].column_matrix(j));
                if lhs != rhs {
                    let l = (0..n).find(|&l| lhs.column(l) != rhs.column(l)).unwrap_or(0);
                    return Err(AlgebraError::NotAssociative(i, j, l));
                }
            }
        }
        if self.left_mult(&self.unit) != ExactMatrix::identity(self.field, n) {
            let bad = (0..n)
                .find(|&i| self.left_mult(&self.unit).column(i) != self.basis_element(i).column(0))
                .unwrap_or(0);
            return Err(AlgebraError::NotUnital(bad));
        }
        for i in 0..n {
            if self.left[i].mul(&self.unit) != self.basis_element(i) {
                return Err(AlgebraError::NotUnital(i));
            }
        }
        Ok(())
    }

    /// The ground field viewed as a one-dimensional algebra.
    pub fn ground(field: Field) -> Algebra {
        Algebra::assemble(
            field,
            vec!["1".into()],
            vec![ExactMatrix::identity(field, 1)],
            ExactMatrix::identity(field, 1),
        )
    }

    /// The quotient of the path algebra of a finite quiver by the ideal generated by
    /// `relations`. Products follow composition order: `p * q` means "first `q`, then
    /// `p`", so left modules are representations of the quiver. Every term of a
    /// relation must be a path of length at least two, and all terms of one relation
    /// must share their endpoints. The quotient is accepted once all paths of some
    /// bounded length lie in the ideal; otherwise it is reported as infinite-dimensional.
    pub fn path_algebra(
        field: Field,
        vertices: usize,
        arrows: &[Arrow],
        relations: &[Relation],
    ) -> Result<Algebra, AlgebraError> {
        if vertices == 0 {
            return Err(AlgebraError::Malformed("quiver has no vertices".into()));
        }
        for a in arrows {
            if a.source >= vertices || a.target >= vertices {
                return Err(AlgebraError::Malformed(format!("arrow {} leaves the quiver", a.label)));
            }
        }
        let mut rel_paths: Vec<Vec<(Scalar, Path)>> = Vec::new();
        for (r, rel) in relations.iter().enumerate() {
            let mut terms = Vec::new();
            for (c, word) in rel {
                if !field.owns(c) {
                    return Err(AlgebraError::BadRelation(format!("relation {r} has a coefficient from another field")));
                }
                if word.len() < 2 {
                    return Err(AlgebraError::BadRelation(format!(
                        "relation {r} has a term of length {} (at least 2 required)",
                        word.len()
                    )));
                }
                let p = path_from_word(arrows, word)
                    .ok_or_else(|| AlgebraError::BadRelation(format!("relation {r} contains a non-composable word")))?;
                terms.push((c.clone(), p));
            }
            if let Some((_, first)) = terms.first() {
                if terms.iter().any(|(_, p)| p.start != first.start || p.end != first.end) {
                    return Err(AlgebraError::BadRelation(format!("terms of relation {r} have different endpoints")));
                }
            }
            rel_paths.push(terms);
        }

        // paths by length
        let mut layers: Vec<Vec<Path>> = vec![(0..vertices)
            .map(|v| Path {
                start: v,
                end: v,
                arrows: Vec::new(),
            })
            .collect()];
        for m in 1..=MAX_PATH_LENGTH {
            let next: Vec<Path> = layers[m - 1]
                .iter()
                .flat_map(|p| {
                    arrows.iter().enumerate().filter(move |(_, a)| a.source == p.end).map(move |(i, a)| {
                        let mut w = p.arrows.clone();
                        w.push(i);
                        Path {
                            start: p.start,
                            end: a.target,
                            arrows: w,
                        }
                    })
                })
                .collect();
            layers.push(next);
            let total: usize = layers.iter().map(Vec::len).sum();
            if total > MAX_PATHS {
                return Err(AlgebraError::InfiniteDimensional(m));
            }
            if let Some(a) = try_truncation(field, arrows, &layers, &rel_paths, m) {
                return Ok(a);
            }
        }
        Err(AlgebraError::InfiniteDimensional(MAX_PATH_LENGTH))
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// The unit as a coordinate column.
    pub fn unit(&self) -> &ExactMatrix {
        &self.unit
    }

    pub fn basis_element(&self, i: usize) -> ExactMatrix {
        let mut v = ExactMatrix::zeros(self.field, self.dim(), 1);
        v.set(i, 0, self.field.one());
        v
    }

    /// Coordinates of `e_i e_j`, i.e. the structure constants `c_ij^k` over `k`.
    pub fn structure_constant(&self, i: usize, j: usize) -> Vec<Scalar> {
        self.left[i].column(j)
    }

    /// `L_i : x -> e_i x`.
    pub fn left_basis_mult(&self, i: usize) -> &ExactMatrix {
        &self.left[i]
    }

    /// `R_j : x -> x e_j`.
    pub fn right_basis_mult(&self, j: usize) -> &ExactMatrix {
        &self.right_mults()[j]
    }

    fn right_mults(&self) -> &Vec<ExactMatrix> {
        self.cache.right.get_or_init(|| {
            let n = self.dim();
            (0..n)
                .map(|j| ExactMatrix::from_fn(self.field, n, n, |k, i| self.left[i].get(k, j).clone()))
                .collect()
        })
    }

    /// Matrix of `y -> x y` for the element with coordinates `x` (a column).
    pub fn left_mult(&self, x: &ExactMatrix) -> ExactMatrix {
        combine(self.field, self.dim(), &self.left, x)
    }

    /// Matrix of `y -> y x`.
    pub fn right_mult(&self, x: &ExactMatrix) -> ExactMatrix {
        combine(self.field, self.dim(), self.right_mults(), x)
    }

    pub fn mul(&self, x: &ExactMatrix, y: &ExactMatrix) -> ExactMatrix {
        self.left_mult(x).mul(y)
    }

    /// The opposite algebra on the same basis, with `x *op y = y x`.
    pub fn opposite(&self) -> Algebra {
        Algebra::assemble(self.field, self.labels.clone(), self.right_mults().clone(), self.unit.clone())
    }

    /// The opposite algebra, shared so that its cached data is computed once.
    /// The opposite of the result is `self` again (same allocation while alive).
    pub fn opposite_arc(self: &Arc<Self>) -> Arc<Algebra> {
        if let Some(orig) = self.cache.opposite_of.get().and_then(Weak::upgrade) {
            return orig;
        }
        self.cache
            .opposite
            .get_or_init(|| {
                let op = self.opposite();
                let _ = op.cache.opposite_of.set(Arc::downgrade(self));
                Arc::new(op)
            })
            .clone()
    }

    /// `A ⊗ B` on the basis `a_i ⊗ b_j` in lexicographic order.
    pub fn tensor(a: &Algebra, b: &Algebra) -> Result<Algebra, AlgebraError> {
        if a.field != b.field {
            return Err(AlgebraError::Mismatch("tensor product over different fields".into()));
        }
        let mut labels = Vec::new();
        let mut left = Vec::new();
        for (i, la) in a.labels.iter().enumerate() {
            for (j, lb) in b.labels.iter().enumerate() {
                labels.push(format!("{la}⊗{lb}"));
                left.push(a.left[i].kronecker(&b.left[j]));
            }
        }
        let unit = a.unit.kronecker(&b.unit);
        Ok(Algebra::assemble(a.field, labels, left, unit))
    }

    /// `A ⊗ B^op`, whose left modules are the A-B-bimodules.
    pub fn enveloping(a: &Algebra, b: &Algebra) -> Result<Algebra, AlgebraError> {
        Algebra::tensor(a, &b.opposite())
    }

    /// Whether `f` (columns are images of basis elements) is a unital algebra map to `target`.
    pub fn is_homomorphism_to(&self, target: &Algebra, f: &ExactMatrix) -> bool {
        if f.shape() != (target.dim(), self.dim()) || f.field() != self.field || target.field != self.field {
            return false;
        }
        if f.mul(&self.unit) != target.unit {
            return false;
        }
        let images: Vec<ExactMatrix> = (0..self.dim()).map(|i| f.column_matrix(i)).collect();
        (0..self.dim()).all(|i| {
            (0..self.dim()).all(|j| {
                let prod = f.mul(&self.left[i].column_matrix(j));
                prod == target.mul(&images[i], &images[j])
            })
        })
    }

    /// Basis (as columns) of the Jacobson radical.
    pub fn radical(&self) -> &ExactMatrix {
        self.cache.radical.get_or_init(|| compute_radical(self))
    }

    pub fn is_semisimple(&self) -> bool {
        self.radical().cols() == 0
    }

    /// A complete set of orthogonal primitive idempotents summing to one. Requires the
    /// semisimple quotient to split over the ground field.
    pub fn primitive_idempotents(&self) -> Result<&[ExactMatrix], AlgebraError> {
        self.cache
            .idempotents
            .get_or_init(|| {
                let mut out = Vec::new();
                split_idempotent(self, self.unit.clone(), &mut out)?;
                Ok(out)
            })
            .as_ref()
            .map(Vec::as_slice)
            .map_err(Clone::clone)
    }

    /// Groups the primitive idempotents by isomorphism class of `A e`; returns for
    /// each idempotent the index of its class, plus one representative per class.
    pub fn idempotent_classes(&self) -> Result<(Vec<usize>, Vec<usize>), AlgebraError> {
        let idem = self.primitive_idempotents()?;
        let rad = Basis::new(self.radical().clone());
        let mut class_of = Vec::with_capacity(idem.len());
        let mut reps: Vec<usize> = Vec::new();
        for (i, e) in idem.iter().enumerate() {
            let found = reps.iter().position(|&r| {
                let f = &idem[r];
                let span = self.left_mult(f).mul(&self.right_mult(e));
                !rad.contains(&span)
            });
            match found {
                Some(c) => class_of.push(c),
                None => {
                    class_of.push(reps.len());
                    reps.push(i);
                }
            }
        }
        Ok((class_of, reps))
    }
}

trait ColumnMatrix {
    fn column_matrix(&self, j: usize) -> ExactMatrix;
}

impl ColumnMatrix for ExactMatrix {
    fn column_matrix(&self, j: usize) -> ExactMatrix {
        self.select_cols(&[j])
    }
}

fn combine(field: Field, n: usize, mats: &[ExactMatrix], x: &ExactMatrix) -> ExactMatrix {
    let mut out = ExactMatrix::zeros(field, n, n);
    for (i, m) in mats.iter().enumerate() {
        let c = x.get(i, 0);
        if !c.is_zero() {
            out = out.add(&m.scale(c));
        }
    }
    out
}

fn path_from_word(arrows: &[Arrow], word: &[usize]) -> Option<Path> {
    let first = arrows.get(*word.first()?)?;
    let mut end = first.target;
    for &w in &word[1..] {
        let a = arrows.get(w)?;
        if a.source != end {
            return None;
        }
        end = a.target;
    }
    Some(Path {
        start: first.source,
        end,
        arrows: word.to_vec(),
    })
}

fn concat(first: &Path, then: &Path) -> Option<Path> {
    (first.end == then.start).then(|| Path {
        start: first.start,
        end: then.end,
        arrows: first.arrows.iter().chain(&then.arrows).copied().collect(),
    })
}

/// Tries to present the quotient using paths of length at most `m`. Succeeds when
/// every path of length `m` lies in the ideal modulo longer paths.
fn try_truncation(
    field: Field,
    arrows: &[Arrow],
    layers: &[Vec<Path>],
    relations: &[Vec<(Scalar, Path)>],
    m: usize,
) -> Option<Algebra> {
    // coordinates ordered longest first so that elimination prefers to discard long paths
    let ordered: Vec<&Path> = layers[..=m].iter().rev().flatten().collect();
    let index: HashMap<&Path, usize> = ordered.iter().enumerate().map(|(i, p)| (*p, i)).collect();
    let n = ordered.len();
    let mut gens: Vec<ExactMatrix> = Vec::new();
    for rel in relations {
        let Some((_, r0)) = rel.first() else { continue };
        for u in layers[..=m].iter().flatten().filter(|u| u.end == r0.start) {
            for v in layers[..=m].iter().flatten().filter(|v| v.start == r0.end) {
                let mut g = ExactMatrix::zeros(field, n, 1);
                let mut any = false;
                for (c, p) in rel {
                    let full = concat(&concat(u, p).unwrap(), v).unwrap();
                    if let Some(&k) = index.get(&full) {
                        let val = g.get(k, 0) + c;
                        g.set(k, 0, val);
                        any = true;
                    }
                }
                if any && !g.is_zero() {
                    gens.push(g);
                }
            }
        }
    }
    let sub = if gens.is_empty() {
        ExactMatrix::zeros(field, n, 0)
    } else {
        let refs: Vec<&ExactMatrix> = gens.iter().collect();
        ExactMatrix::hstack(&refs, field, n)
    };
    let quot = Quotient::new(field, n, &sub);
    for p in &layers[m] {
        let k = index[p];
        if (0..quot.dim()).any(|t| !quot.projection.get(t, k).is_zero()) {
            return None;
        }
    }
    // surviving paths, shortest first
    let mut survivors: Vec<(usize, usize)> = (0..quot.dim())
        .map(|t| {
            let k = (0..n).find(|&k| !quot.section.get(k, t).is_zero() && is_unit_column(&quot.section, k, t)).unwrap();
            (t, k)
        })
        .collect();
    survivors.sort_by_key(|&(_, k)| (ordered[k].arrows.len(), k));
    let dim = survivors.len();
    let basis_paths: Vec<&Path> = survivors.iter().map(|&(_, k)| ordered[k]).collect();
    let coords = |p: &Path| -> ExactMatrix {
        let mut v = ExactMatrix::zeros(field, dim, 1);
        if let Some(&k) = index.get(p) {
            for (slot, &(t, _)) in survivors.iter().enumerate() {
                v.set(slot, 0, quot.projection.get(t, k).clone());
            }
        }
        v
    };
    let mut left = Vec::with_capacity(dim);
    for p in &basis_paths {
        let cols: Vec<ExactMatrix> = basis_paths
            .iter()
            .map(|q| match concat(q, p) {
                Some(qp) => coords(&qp),
                None => ExactMatrix::zeros(field, dim, 1),
            })
            .collect();
        let refs: Vec<&ExactMatrix> = cols.iter().collect();
        left.push(ExactMatrix::hstack(&refs, field, dim));
    }
    let mut unit = ExactMatrix::zeros(field, dim, 1);
    for (slot, p) in basis_paths.iter().enumerate() {
        if p.arrows.is_empty() {
            unit.set(slot, 0, field.one());
        }
    }
    let labels = basis_paths
        .iter()
        .map(|p| {
            if p.arrows.is_empty() {
                format!("e{}", p.start + 1)
            } else {
                p.arrows.iter().map(|&a| arrows[a].label.as_str()).collect::<Vec<_>>().join(" ")
            }
        })
        .collect();
    let a = Algebra::assemble(field, labels, left, unit);
    debug_assert!(a.verify().is_ok());
    Some(a)
}

fn is_unit_column(section: &ExactMatrix, k: usize, t: usize) -> bool {
    section.get(k, t).is_one() && (0..section.cols()).all(|s| s == t || section.get(k, s).is_zero())
}

/// Radical via the trace form of the regular representation, refined in positive
/// characteristic by traces of `p^i`-th powers of integer lifts.
fn compute_radical(a: &Algebra) -> ExactMatrix {
    let n = a.dim();
    let field = a.field;
    let gram = ExactMatrix::from_fn(field, n, n, |j, i| a.left[i].mul(&a.left[j]).trace());
    let mut current = gram.kernel_basis();
    if let Field::Prime(p) = field {
        let p = p as u128;
        let mut pi = p;
        let mut i = 1u32;
        while pi <= n as u128 {
            let modulus = pi * p;
            let r = current.cols();
            if r == 0 {
                break;
            }
            let cond = ExactMatrix::from_fn(field, n, r, |t, s| {
                let prod = a.mul(&current.column_matrix(s), &a.basis_element(t));
                let lam = a.left_mult(&prod);
                let tr = lifted_power_trace(&lam, pi, modulus);
                debug_assert_eq!(tr % pi, 0);
                field.from_i64(((tr / pi) % p) as i64)
            });
            current = current.mul(&cond.kernel_basis());
            pi *= p;
            i += 1;
        }
        let _ = i;
    }
    current.column_space()
}

fn lifted_power_trace(m: &ExactMatrix, exp: u128, modulus: u128) -> u128 {
    let n = m.rows();
    let lift: Vec<u128> = (0..n * n)
        .map(|k| m.get(k / n, k % n).as_i64().unwrap() as u128 % modulus)
        .collect();
    let mul = |x: &[u128], y: &[u128]| -> Vec<u128> {
        let mut out = vec![0u128; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = x[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] = (out[i * n + j] + a * y[k * n + j]) % modulus;
                }
            }
        }
        out
    };
    let mut acc: Vec<u128> = (0..n * n).map(|k| u128::from(k / n == k % n)).collect();
    let mut base = lift;
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul(&acc, &base);
        }
        base = mul(&base, &base);
        e >>= 1;
    }
    (0..n).fold(0, |t, i| (t + acc[i * n + i]) % modulus)
}

/// Splits the idempotent `e` into primitive orthogonal idempotents, appending them to `out`.
fn split_idempotent(a: &Algebra, e: ExactMatrix, out: &mut Vec<ExactMatrix>) -> Result<(), AlgebraError> {
    let field = a.field;
    let corner_map = a.left_mult(&e).mul(&a.right_mult(&e));
    let corner = corner_map.column_space();
    let rad_corner = corner_map.mul(a.radical()).column_space();
    if corner.cols() == rad_corner.cols() + 1 {
        out.push(e);
        return Ok(());
    }
    // prefer idempotents that are visible in the basis
    for i in 0..a.dim() {
        let f = corner_map.column_matrix(i);
        if !f.is_zero() && f != e && a.mul(&f, &f) == f {
            split_idempotent(a, f.clone(), out)?;
            return split_idempotent(a, e.sub(&f), out);
        }
    }
    let base = ExactMatrix::hstack(&[&e, &rad_corner], field, a.dim());
    let base_span = Basis::new(base.column_space());
    let z = (0..corner.cols())
        .map(|i| corner.column_matrix(i))
        .find(|z| !base_span.contains(z))
        .ok_or(AlgebraError::NotSplit)?;
    // minimal polynomial of z in eAe / eJe
    let mut powers = vec![e.clone()];
    let coeffs = loop {
        let next = a.mul(powers.last().unwrap(), &z);
        let mut cols: Vec<&ExactMatrix> = powers.iter().collect();
        cols.push(&rad_corner);
        let sys = ExactMatrix::hstack(&cols, field, a.dim());
        if let Some(x) = sys.solve(&next)? {
            let d = powers.len();
            let mut c: Vec<Scalar> = (0..d).map(|i| -x.get(i, 0)).collect();
            c.push(field.one());
            break c;
        }
        powers.push(next);
    };
    let roots = poly::roots(field, &coeffs);
    if roots.len() + 1 != coeffs.len() || roots.len() < 2 {
        return Err(AlgebraError::NotSplit);
    }
    let lambda = &roots[0];
    let mut u = e.clone();
    for mu in &roots[1..] {
        let factor = z.sub(&e.scale(mu)).scale(&(lambda - mu).inv().expect("distinct roots"));
        u = a.mul(&u, &factor);
    }
    for _ in 0..64 {
        let u2 = a.mul(&u, &u);
        if u2 == u {
            break;
        }
        let u3 = a.mul(&u2, &u);
        u = u2.scale(&field.from_i64(3)).sub(&u3.scale(&field.from_i64(2)));
    }
    if a.mul(&u, &u) != u {
        return Err(AlgebraError::NotSplit);
    }
    split_idempotent(a, u.clone(), out)?;
    split_idempotent(a, e.sub(&u), out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arrow(s: usize, t: usize, l: &str) -> Arrow {
        Arrow {
            source: s,
            target: t,
            label: l.into(),
        }
    }

    fn a2(field: Field) -> Algebra {
        Algebra::path_algebra(field, 2, &[arrow(0, 1, "a")], &[]).unwrap()
    }

    fn dual_numbers(field: Field) -> Algebra {
        Algebra::path_algebra(field, 1, &[arrow(0, 0, "x")], &[vec![(field.one(), vec![0, 0])]]).unwrap()
    }

    fn matrix_units(field: Field) -> Algebra {
        let mut structure = vec![vec![vec![field.zero(); 4]; 4]; 4];
        for (i, j, k, l) in (0..16).map(|t| (t / 8, (t / 4) % 2, (t / 2) % 2, t % 2)) {
            if j == k {
                structure[i * 2 + j][k * 2 + l][i * 2 + l] = field.one();
            }
        }
        let unit = vec![field.one(), field.zero(), field.zero(), field.one()];
        Algebra::from_structure_constants(field, (0..4).map(|i| format!("E{i}")).collect(), &structure, &unit).unwrap()
    }

    #[test]
    fn path_algebra_dimensions() {
        let q = Field::Rationals;
        assert_eq!(a2(q).dim(), 3);
        assert_eq!(a2(q).labels(), ["e1", "e2", "a"]);
        assert_eq!(dual_numbers(q).dim(), 2);
        assert_eq!(Algebra::path_algebra(q, 1, &[], &[]).unwrap().dim(), 1);
    }

    #[test]
    fn loop_without_relations_is_rejected() {
        let q = Field::Rationals;
        let err = Algebra::path_algebra(q, 1, &[arrow(0, 0, "x")], &[]).unwrap_err();
        assert!(matches!(err, AlgebraError::InfiniteDimensional(_)));
    }

    #[test]
    fn short_relation_is_rejected() {
        let q = Field::Rationals;
        let err = Algebra::path_algebra(q, 1, &[arrow(0, 0, "x")], &[vec![(q.one(), vec![0])]]).unwrap_err();
        assert!(matches!(err, AlgebraError::BadRelation(_)));
    }

    #[test]
    fn commutative_square() {
        let q = Field::Rationals;
        let arrows = [arrow(0, 1, "a"), arrow(1, 3, "b"), arrow(0, 2, "c"), arrow(2, 3, "d")];
        let rel = vec![(q.one(), vec![0, 1]), (q.from_i64(-1), vec![2, 3])];
        let a = Algebra::path_algebra(q, 4, &arrows, &[rel]).unwrap();
        assert_eq!(a.dim(), 4 + 4 + 1);
    }

    #[test]
    fn opposite_is_involutive_and_reverses_arrows() {
        let q = Field::Rationals;
        let a = a2(q);
        assert_eq!(a.opposite().opposite(), a);
        let reversed = Algebra::path_algebra(q, 2, &[arrow(1, 0, "b")], &[]).unwrap();
        assert_eq!(a.opposite(), reversed);
        let arc = Arc::new(a.clone());
        let op = arc.opposite_arc();
        assert!(Arc::ptr_eq(&op.opposite_arc(), &arc));
    }

    #[test]
    fn invalid_structure_constants() {
        let q = Field::Rationals;
        // e0 e0 = e1, everything else zero, unit e0: not unital
        let mut s = vec![vec![vec![q.zero(); 2]; 2]; 2];
        s[0][0][1] = q.one();
        let err = Algebra::from_structure_constants(q, vec!["x".into(), "y".into()], &s, &[q.one(), q.zero()]);
        assert!(err.is_err());
    }

    #[test]
    fn radicals() {
        let q = Field::Rationals;
        assert_eq!(a2(q).radical().cols(), 1);
        assert_eq!(dual_numbers(q).radical().cols(), 1);
        assert!(matrix_units(q).is_semisimple());
        let f2 = Field::prime(2).unwrap();
        assert_eq!(dual_numbers(f2).radical().cols(), 1);
        assert!(matrix_units(f2).is_semisimple());
        assert_eq!(a2(f2).radical().cols(), 1);
        // group algebra of the cyclic group of order 2: semisimple over Q, local over F_2
        for (field, rad) in [(q, 0), (f2, 1)] {
            let mut s = vec![vec![vec![field.zero(); 2]; 2]; 2];
            for i in 0..2 {
                for j in 0..2 {
                    s[i][j][(i + j) % 2] = field.one();
                }
            }
            let g = Algebra::from_structure_constants(field, vec!["1".into(), "g".into()], &s, &[field.one(), field.zero()])
                .unwrap();
            assert_eq!(g.radical().cols(), rad);
        }
    }

    #[test]
    fn idempotents_of_path_algebra_are_vertices() {
        let q = Field::Rationals;
        let a = a2(q);
        let idem = a.primitive_idempotents().unwrap();
        assert_eq!(idem, &[a.basis_element(0), a.basis_element(1)]);
        let (classes, reps) = a.idempotent_classes().unwrap();
        assert_eq!(classes, vec![0, 1]);
        assert_eq!(reps, vec![0, 1]);
    }

    #[test]
    fn matrix_algebra_has_one_simple() {
        for field in [Field::Rationals, Field::prime(3).unwrap()] {
            let m = matrix_units(field);
            let idem = m.primitive_idempotents().unwrap();
            assert_eq!(idem.len(), 2);
            let (_, reps) = m.idempotent_classes().unwrap();
            assert_eq!(reps.len(), 1);
        }
    }

    #[test]
    fn hidden_idempotents_are_found() {
        // k x k presented with basis 1, t where t^2 = t + 2 (roots 2 and -1)
        let q = Field::Rationals;
        let s = vec![
            vec![vec![q.one(), q.zero()], vec![q.zero(), q.one()]],
            vec![vec![q.zero(), q.one()], vec![q.from_i64(2), q.one()]],
        ];
        let a = Algebra::from_structure_constants(q, vec!["1".into(), "t".into()], &s, &[q.one(), q.zero()]).unwrap();
        let idem = a.primitive_idempotents().unwrap();
        assert_eq!(idem.len(), 2);
        assert_eq!(idem[0].add(&idem[1]), *a.unit());
        assert_eq!(a.idempotent_classes().unwrap().1.len(), 2);
        // k[t]/(t^2 + 1) does not split over Q
        let s = vec![
            vec![vec![q.one(), q.zero()], vec![q.zero(), q.one()]],
            vec![vec![q.zero(), q.one()], vec![q.from_i64(-1), q.zero()]],
        ];
        let c = Algebra::from_structure_constants(q, vec!["1".into(), "i".into()], &s, &[q.one(), q.zero()]).unwrap();
        assert_eq!(c.primitive_idempotents().unwrap_err(), AlgebraError::NotSplit);
    }

    #[test]
    fn enveloping_dimension_and_homomorphisms() {
        let q = Field::Rationals;
        let a = a2(q);
        let env = Algebra::enveloping(&a, &a).unwrap();
        assert_eq!(env.dim(), 9);
        assert!(env.verify().is_ok());
        let id = ExactMatrix::identity(q, 3);
        assert!(a.is_homomorphism_to(&a, &id));
        let k = Algebra::ground(q);
        assert!(k.is_homomorphism_to(&a, a.unit()));
        assert!(!k.is_homomorphism_to(&a, &a.basis_element(0)));
    }
}
