//! Subspaces, coordinates and quotient spaces.

use super::field::Field;
use super::matrix::ExactMatrix;

/// A basis of a subspace (as columns of a full-column-rank matrix) with a cached
/// way of reading off coordinates of vectors that lie in it.
#[derive(Clone, Debug)]
pub struct Basis {
    basis: ExactMatrix,
    rows: Vec<usize>,
    pivot_inverse: ExactMatrix,
}

impl Basis {
    /// `columns` must be linearly independent.
    pub fn new(columns: ExactMatrix) -> Basis {
        let field = columns.field();
        let r = columns.cols();
        let rows = columns.transpose().independent_columns();
        assert_eq!(rows.len(), r, "basis columns are dependent");
        let pivot_inverse = if r == 0 {
            ExactMatrix::zeros(field, 0, 0)
        } else {
            columns.select_rows(&rows).inverse().expect("independent rows")
        };
        Basis {
            basis: columns,
            rows,
            pivot_inverse,
        }
    }

    /// A basis of the column space of an arbitrary matrix.
    pub fn spanning(columns: &ExactMatrix) -> Basis {
        Basis::new(columns.column_space())
    }

    pub fn matrix(&self) -> &ExactMatrix {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.rows()
    }

    /// Coordinates of the columns of `v`, assumed to lie in the span.
    pub fn coords(&self, v: &ExactMatrix) -> ExactMatrix {
        if self.dim() == 0 {
            return ExactMatrix::zeros(v.field(), 0, v.cols());
        }
        self.pivot_inverse.mul(&v.select_rows(&self.rows))
    }

    /// Coordinates, or `None` when some column of `v` is outside the span.
    pub fn try_coords(&self, v: &ExactMatrix) -> Option<ExactMatrix> {
        let c = self.coords(v);
        (self.basis.mul(&c) == *v).then_some(c)
    }

    pub fn contains(&self, v: &ExactMatrix) -> bool {
        self.try_coords(v).is_some()
    }
}

/// The quotient `V / W` of `V = k^n` by the column span of `W`, with a projection
/// and a section `section` such that `projection * section = 1`.
#[derive(Clone, Debug)]
pub struct Quotient {
    pub projection: ExactMatrix,
    pub section: ExactMatrix,
}

impl Quotient {
    pub fn new(field: Field, ambient: usize, sub: &ExactMatrix) -> Quotient {
        assert_eq!(sub.rows(), ambient);
        let ech = sub.transpose().row_echelon();
        let pivots = &ech.pivots;
        let complement: Vec<usize> = (0..ambient).filter(|c| !pivots.contains(c)).collect();
        let q = complement.len();
        let mut projection = ExactMatrix::zeros(field, q, ambient);
        let mut section = ExactMatrix::zeros(field, ambient, q);
        for (t, &j) in complement.iter().enumerate() {
            projection.set(t, j, field.one());
            section.set(j, t, field.one());
            for (k, &p) in pivots.iter().enumerate() {
                let w = ech.reduced.get(k, j);
                if !w.is_zero() {
                    projection.set(t, p, -w);
                }
            }
        }
        Quotient {
            projection,
            section,
        }
    }

    pub fn dim(&self) -> usize {
        self.projection.rows()
    }

    /// The map `V/W -> V'/W'` induced by `f: V -> V'` (which must carry `W` into `W'`).
    pub fn induced(&self, target: &Quotient, f: &ExactMatrix) -> ExactMatrix {
        target.projection.mul(&f.mul(&self.section))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quotient_kills_subspace() {
        let q = Field::Rationals;
        let w = ExactMatrix::from_i64(q, &[&[1], &[2], &[3]]);
        let quo = Quotient::new(q, 3, &w);
        assert_eq!(quo.dim(), 2);
        assert!(quo.projection.mul(&w).is_zero());
        assert_eq!(quo.projection.mul(&quo.section), ExactMatrix::identity(q, 2));
    }

    #[test]
    fn coordinates_in_basis() {
        let q = Field::Rationals;
        let b = Basis::new(ExactMatrix::from_i64(q, &[&[1, 0], &[1, 1], &[0, 2]]));
        let v = ExactMatrix::from_i64(q, &[&[2], &[5], &[6]]);
        let c = b.try_coords(&v).unwrap();
        assert_eq!(c, ExactMatrix::from_i64(q, &[&[2], &[3]]));
        assert!(b.try_coords(&ExactMatrix::from_i64(q, &[&[1], &[0], &[0]])).is_none());
    }
}
