//! Dense matrices over [`Rational`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{LinalgError, Rational};

/// A dense, row-major matrix of exact rationals.
///
/// Equality is exact entrywise equality. The arithmetic operators panic on
/// shape mismatch; the `checked_*` methods report it as a [`LinalgError`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Rational::one() } else { Rational::zero() })
    }

    /// The all-ones matrix `J`.
    pub fn ones(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, data: vec![Rational::one(); rows * cols] }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        ExactMatrix { rows, cols, data }
    }

    /// Builds a matrix from row-major entries.
    pub fn from_vec(rows: usize, cols: usize, data: Vec<Rational>) -> Result<Self, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::EntryCount { rows, cols, found: data.len() });
        }
        Ok(ExactMatrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some((i, row)) = rows.iter().enumerate().find(|(_, row)| row.len() != c) {
            return Err(LinalgError::RaggedRows { row: i, expected: c, found: row.len() });
        }
        Ok(ExactMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    /// Convenience constructor from integer rows. Panics on ragged input.
    pub fn from_integers<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let rows: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&x| Rational::from(x)).collect())
            .collect();
        Self::from_rows(rows).expect("ragged integer rows")
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.data[i * self.cols + j] = value;
    }

    /// Row-major vectorization.
    pub fn as_slice(&self) -> &[Rational] {
        &self.data
    }

    pub fn into_vec(self) -> Vec<Rational> {
        self.data
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rational::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    pub fn row_sum(&self, i: usize) -> Rational {
        self.row(i).iter().sum()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * c).collect(),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, LinalgError> {
        self.zip_with(other, "add", |a, b| a + b)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, LinalgError> {
        self.zip_with(other, "sub", |a, b| a - b)
    }

    fn zip_with(
        &self,
        other: &Self,
        op: &'static str,
        f: impl Fn(&Rational, &Rational) -> Rational,
    ) -> Result<Self, LinalgError> {
        if self.shape() != other.shape() {
            return Err(LinalgError::ShapeMismatch { op, left: self.shape(), right: other.shape() });
        }
        Ok(ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    /// Exact matrix product; fails unless `self.cols == other.rows`.
    pub fn checked_mul(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::ShapeMismatch {
                op: "mul",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let (n, m) = (self.rows, other.cols);
        let mut out = vec![Rational::zero(); n * m];
        for i in 0..n {
            let out_row = &mut out[i * m..(i + 1) * m];
            for (k, a) in self.row(i).iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                let b_row = other.row(k);
                if a.is_one() {
                    for (o, b) in out_row.iter_mut().zip(b_row) {
                        *o += b;
                    }
                } else {
                    for (o, b) in out_row.iter_mut().zip(b_row) {
                        if !b.is_zero() {
                            *o += &(a * b);
                        }
                    }
                }
            }
        }
        Ok(ExactMatrix { rows: n, cols: m, data: out })
    }

    /// Kronecker product `(a_ij * other)`.
    pub fn kronecker(&self, other: &Self) -> Self {
        let (p, q) = other.shape();
        Self::from_fn(self.rows * p, self.cols * q, |i, j| {
            self.get(i / p, j / q) * other.get(i % p, j % q)
        })
    }

    /// The submatrix on the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    /// `P M P^T` for the permutation sending index `i` to `sigma[i]`.
    ///
    /// The caller guarantees `sigma` is a permutation of `0..n`.
    pub fn conjugate_by(&self, sigma: &[usize]) -> Self {
        debug_assert!(self.is_square() && sigma.len() == self.rows);
        let mut out = Self::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(sigma[i], sigma[j], self.get(i, j).clone());
            }
        }
        out
    }

    /// Commutator `self * other - other * self`.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Mul for &ExactMatrix {
    type Output = ExactMatrix;
    fn mul(self, rhs: &ExactMatrix) -> ExactMatrix {
        self.checked_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Add for &ExactMatrix {
    type Output = ExactMatrix;
    fn add(self, rhs: &ExactMatrix) -> ExactMatrix {
        self.checked_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for &ExactMatrix {
    type Output = ExactMatrix;
    fn sub(self, rhs: &ExactMatrix) -> ExactMatrix {
        self.checked_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for &ExactMatrix {
    type Output = ExactMatrix;
    fn neg(self) -> ExactMatrix {
        self.scale(&-Rational::one())
    }
}

impl Mul<&ExactMatrix> for &Rational {
    type Output = ExactMatrix;
    fn mul(self, rhs: &ExactMatrix) -> ExactMatrix {
        rhs.scale(self)
    }
}

/// Sums a non-empty sequence of equally shaped matrices; `None` if empty.
pub fn sum_matrices<'a>(mut mats: impl Iterator<Item = &'a ExactMatrix>) -> Option<ExactMatrix> {
    let first = mats.next()?.clone();
    Some(mats.fold(first, |acc, m| &acc + m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn k(n: usize) -> ExactMatrix {
        &ExactMatrix::ones(n, n) - &ExactMatrix::identity(n)
    }

    #[test]
    fn identity_is_neutral() {
        let m = ExactMatrix::from_integers(&[[1, -2, 3], [0, 4, 5], [7, 0, -1]]);
        assert_eq!(&ExactMatrix::identity(3) * &m, m);
        assert_eq!(&m * &ExactMatrix::identity(3), m);
    }

    #[test]
    fn all_ones_squared() {
        let j = ExactMatrix::ones(2, 2);
        assert_eq!(&j * &j, j.scale(&Rational::from(2)));
    }

    #[test]
    fn complete_graph_square() {
        // (J - I)^2 = J^2 - 2J + I = 3J - 2J + I = 2I + (J - I) for n = 3
        let a = k(3);
        let expected = &ExactMatrix::identity(3).scale(&Rational::from(2)) + &a;
        assert_eq!(&a * &a, expected);
    }

    #[test]
    fn mul_shape_error_names_both_shapes() {
        let a = ExactMatrix::zeros(2, 3);
        let b = ExactMatrix::zeros(2, 3);
        let err = a.checked_mul(&b).unwrap_err();
        assert_eq!(err, LinalgError::ShapeMismatch { op: "mul", left: (2, 3), right: (2, 3) });
        assert!(err.to_string().contains("2x3"));
    }

    #[test]
    fn kronecker_identity_blocks() {
        let m = ExactMatrix::from_integers(&[[1, 2], [3, 4]]);
        let kr = ExactMatrix::identity(2).kronecker(&m);
        assert_eq!(kr.shape(), (4, 4));
        assert_eq!(kr.select(&[0, 1], &[0, 1]), m);
        assert_eq!(kr.select(&[2, 3], &[2, 3]), m);
        assert!(kr.select(&[0, 1], &[2, 3]).is_zero());
        assert!(kr.select(&[2, 3], &[0, 1]).is_zero());
    }

    #[test]
    fn kronecker_antidiagonal_all_ones_blocks() {
        let kr = k(2).kronecker(&ExactMatrix::ones(3, 3));
        assert_eq!(kr.shape(), (6, 6));
        let (lo, hi) = ([0, 1, 2], [3, 4, 5]);
        assert!(kr.select(&lo, &lo).is_zero());
        assert!(kr.select(&hi, &hi).is_zero());
        assert_eq!(kr.select(&lo, &hi), ExactMatrix::ones(3, 3));
        assert_eq!(kr.select(&hi, &lo), ExactMatrix::ones(3, 3));
    }

    #[test]
    fn kronecker_shape_contract() {
        let a = ExactMatrix::zeros(2, 5);
        let b = ExactMatrix::zeros(3, 1);
        assert_eq!(a.kronecker(&b).shape(), (6, 5));
    }

    #[test]
    fn ragged_rows_rejected() {
        let rows = vec![vec![Rational::one()], vec![]];
        assert!(matches!(ExactMatrix::from_rows(rows), Err(LinalgError::RaggedRows { row: 1, .. })));
    }

    fn arb_matrix(n: usize, m: usize) -> impl Strategy<Value = ExactMatrix> {
        proptest::collection::vec((-9i64..=9, 1i64..=5), n * m).prop_map(move |v| {
            let data = v.into_iter().map(|(p, q)| Rational::new(p, q)).collect();
            ExactMatrix::from_vec(n, m, data).unwrap()
        })
    }

    proptest! {
        #[test]
        fn product_is_associative(a in arb_matrix(3, 2), b in arb_matrix(2, 3), c in arb_matrix(3, 3)) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn kronecker_mixed_product(
            a in arb_matrix(2, 2), b in arb_matrix(3, 3), c in arb_matrix(2, 2), d in arb_matrix(3, 3)
        ) {
            prop_assert_eq!(&a.kronecker(&b) * &c.kronecker(&d), (&a * &c).kronecker(&(&b * &d)));
        }
    }
}
