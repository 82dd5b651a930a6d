//! Linear subspaces of a matrix space, kept in canonical reduced row-echelon form.

use super::{ExactMatrix, LinalgError, Rational};

/// A subspace of the `rows x cols` matrix space.
///
/// Matrices are vectorized row-major. The basis is kept in reduced
/// row-echelon form with unit pivots, rows ordered by pivot column, so two
/// `SpanBasis` values describe the same subspace iff they compare equal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpanBasis {
    rows: usize,
    cols: usize,
    basis: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl SpanBasis {
    /// The zero subspace of the `rows x cols` matrix space.
    pub fn zero(rows: usize, cols: usize) -> Self {
        SpanBasis { rows, cols, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn ambient_dim(&self) -> usize {
        self.rows * self.cols
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    /// Canonical basis vectors (row-major vectorizations).
    pub fn vectors(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// The canonical basis reshaped into matrices.
    pub fn matrices(&self) -> Vec<ExactMatrix> {
        self.basis
            .iter()
            .map(|v| ExactMatrix::from_vec(self.rows, self.cols, v.clone()).expect("basis length"))
            .collect()
    }

    fn check_shape(&self, m: &ExactMatrix, op: &'static str) -> Result<(), LinalgError> {
        if m.shape() != self.shape() {
            return Err(LinalgError::ShapeMismatch { op, left: self.shape(), right: m.shape() });
        }
        Ok(())
    }

    /// Reduces `v` against the basis in place; the result is zero iff `v` was in the span.
    fn reduce(&self, v: &mut [Rational]) {
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let c = v[p].clone();
            for (x, r) in v.iter_mut().zip(row).skip(p) {
                if !r.is_zero() {
                    *x -= &(&c * r);
                }
            }
        }
    }

    /// Adds a vector to the span, keeping the basis canonical. Returns
    /// whether the dimension grew.
    fn insert_vector(&mut self, mut v: Vec<Rational>) -> bool {
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].recip();
        if !inv.is_one() {
            for x in v.iter_mut().skip(p) {
                *x *= &inv;
            }
        }
        // clear the new pivot column from the existing rows
        for row in &mut self.basis {
            if row[p].is_zero() {
                continue;
            }
            let c = row[p].clone();
            for (x, r) in row.iter_mut().zip(&v).skip(p) {
                if !r.is_zero() {
                    *x -= &(&c * r);
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.basis.insert(at, v);
        true
    }

    /// Adds a matrix to the span. Returns whether the dimension grew.
    pub fn insert(&mut self, m: &ExactMatrix) -> Result<bool, LinalgError> {
        self.check_shape(m, "insert")?;
        Ok(self.insert_vector(m.as_slice().to_vec()))
    }

    /// Whether `m` lies in the subspace.
    pub fn contains(&self, m: &ExactMatrix) -> Result<bool, LinalgError> {
        self.check_shape(m, "contains")?;
        let mut v = m.as_slice().to_vec();
        self.reduce(&mut v);
        Ok(v.iter().all(Rational::is_zero))
    }

    /// Coordinates of `m` in the canonical basis, or `None` if `m` is not in the span.
    pub fn coordinates(&self, m: &ExactMatrix) -> Result<Option<Vec<Rational>>, LinalgError> {
        if !self.contains(m)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| m.as_slice()[p].clone()).collect()))
    }

    /// Whether every basis element of `self` lies in `other`.
    pub fn is_subspace_of(&self, other: &SpanBasis) -> Result<bool, LinalgError> {
        for m in self.matrices() {
            if !other.contains(&m)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The sum `self + other` of two subspaces.
    pub fn join(&self, other: &SpanBasis) -> Result<SpanBasis, LinalgError> {
        if self.shape() != other.shape() {
            return Err(LinalgError::ShapeMismatch {
                op: "join",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut out = self.clone();
        for v in &other.basis {
            out.insert_vector(v.clone());
        }
        Ok(out)
    }
}

/// Canonical basis of the linear span of `mats`. An empty list yields the
/// zero subspace of the 0x0 space; use [`span_basis_of_shape`] when the
/// ambient shape must be kept.
pub fn span_basis(mats: &[ExactMatrix]) -> Result<SpanBasis, LinalgError> {
    let (r, c) = mats.first().map_or((0, 0), ExactMatrix::shape);
    span_basis_of_shape(r, c, mats)
}

/// Like [`span_basis`] with an explicit ambient shape.
pub fn span_basis_of_shape(
    rows: usize,
    cols: usize,
    mats: &[ExactMatrix],
) -> Result<SpanBasis, LinalgError> {
    let mut s = SpanBasis::zero(rows, cols);
    for m in mats {
        s.insert(m)?;
    }
    Ok(s)
}

/// Whether `m` lies in the span `s`.
pub fn contains(s: &SpanBasis, m: &ExactMatrix) -> Result<bool, LinalgError> {
    s.contains(m)
}

/// The smallest subspace containing `generators` and closed under matrix
/// multiplication.
///
/// Each round multiplies every ordered pair of current basis elements and
/// adds the products to the span; iteration stops at the first round that
/// adds nothing.
pub fn close_under_multiplication(generators: &[ExactMatrix]) -> Result<SpanBasis, LinalgError> {
    if let Some(g) = generators.iter().find(|g| !g.is_square()) {
        return Err(LinalgError::NotSquare { shape: g.shape() });
    }
    let mut span = span_basis(generators)?;
    loop {
        let before = span.dim();
        let current = span.matrices();
        for a in &current {
            for b in &current {
                span.insert_vector((a * b).into_vec());
            }
        }
        if span.dim() == before {
            return Ok(span);
        }
    }
}

/// The center `{Z in s : ZB = BZ for every basis element B}` of the algebra `s`.
///
/// The commutation constraints are solved in the coordinates of `s`'s own
/// basis, so `s` must be closed under multiplication.
pub fn nullspace_of_commutation(s: &SpanBasis) -> SpanBasis {
    let basis = s.matrices();
    let n = basis.len();
    // products[k][l] = B_k B_l, each in coordinates
    let coords = |m: &ExactMatrix| -> Vec<Rational> {
        s.pivots.iter().map(|&p| m.as_slice()[p].clone()).collect()
    };
    let products: Vec<Vec<Vec<Rational>>> = basis
        .iter()
        .map(|a| basis.iter().map(|b| coords(&(a * b))).collect())
        .collect();
    // For each l and each coordinate m: sum_k c_k ([B_k, B_l])_m = 0.
    let mut equations = Vec::with_capacity(n * n);
    for l in 0..n {
        for m in 0..n {
            equations.push((0..n).map(|k| &products[k][l][m] - &products[l][k][m]).collect());
        }
    }
    let kernel = nullspace(equations, n);
    let mut out = SpanBasis::zero(s.rows, s.cols);
    for c in kernel {
        let mut z = vec![Rational::zero(); s.ambient_dim()];
        for (ck, bk) in c.iter().zip(&s.basis) {
            if ck.is_zero() {
                continue;
            }
            for (zi, bi) in z.iter_mut().zip(bk) {
                if !bi.is_zero() {
                    *zi += &(ck * bi);
                }
            }
        }
        out.insert_vector(z);
    }
    out
}

/// Basis of the right nullspace `{c : M c = 0}` of a matrix given by rows of length `ncols`.
pub fn nullspace(mut rows: Vec<Vec<Rational>>, ncols: usize) -> Vec<Vec<Rational>> {
    let mut pivot_cols = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(found) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, found);
        let inv = rows[r][col].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let c = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &(&c * p);
                }
            }
        }
        pivot_cols.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivot_cols.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); ncols];
            v[f] = Rational::one();
            for (i, &pc) in pivot_cols.iter().enumerate() {
                v[pc] = -&rows[i][f];
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit(n: usize, i: usize, j: usize) -> ExactMatrix {
        let mut m = ExactMatrix::zeros(n, n);
        m.set(i, j, Rational::one());
        m
    }

    fn complete(n: usize) -> [ExactMatrix; 2] {
        let i = ExactMatrix::identity(n);
        [i.clone(), &ExactMatrix::ones(n, n) - &i]
    }

    fn dual(n: usize) -> [ExactMatrix; 2] {
        let e0 = unit(n, 0, 0);
        [e0.clone(), &ExactMatrix::identity(n) - &e0]
    }

    #[test]
    fn scalar_multiples_span_a_line() {
        let m = ExactMatrix::from_integers(&[[1, 2], [0, -1]]);
        let s = span_basis(&[m.clone(), m.scale(&2.into()), m.scale(&3.into())]).unwrap();
        assert_eq!(s.dim(), 1);
        assert_eq!(s.vectors()[0][0], Rational::one());
    }

    #[test]
    fn empty_list_is_zero_subspace() {
        assert_eq!(span_basis(&[]).unwrap().dim(), 0);
        assert_eq!(span_basis_of_shape(3, 3, &[]).unwrap().ambient_dim(), 9);
    }

    #[test]
    fn shape_mismatch_is_an_error() {
        let err = span_basis(&[ExactMatrix::zeros(2, 2), ExactMatrix::zeros(3, 3)]).unwrap_err();
        assert!(matches!(err, LinalgError::ShapeMismatch { .. }));
        let s = span_basis(&[ExactMatrix::identity(2)]).unwrap();
        assert!(s.contains(&ExactMatrix::identity(3)).is_err());
    }

    #[test]
    fn membership() {
        let i = ExactMatrix::identity(3);
        let j = ExactMatrix::ones(3, 3);
        let s = span_basis(&[i.clone(), j.clone()]).unwrap();
        assert!(s.contains(&(&j - &i)).unwrap());
        let only_i = span_basis(&[i]).unwrap();
        assert!(!only_i.contains(&j).unwrap());
    }

    #[test]
    fn canonical_form_is_order_independent() {
        let a = ExactMatrix::from_integers(&[[1, 2], [3, 4]]);
        let b = ExactMatrix::from_integers(&[[0, 1], [1, 0]]);
        let s1 = span_basis(&[a.clone(), b.clone()]).unwrap();
        let s2 = span_basis(&[&b + &a, b.scale(&Rational::new(-1, 3))]).unwrap();
        assert_eq!(s1, s2);
        assert_eq!(span_basis(&s1.matrices()).unwrap(), s1);
    }

    #[test]
    fn coordinates_reconstruct() {
        let a = ExactMatrix::from_integers(&[[1, 2], [3, 4]]);
        let b = ExactMatrix::from_integers(&[[0, 1], [1, 0]]);
        let s = span_basis(&[a.clone(), b.clone()]).unwrap();
        let m = &a.scale(&Rational::new(2, 3)) - &b;
        let c = s.coordinates(&m).unwrap().unwrap();
        let rebuilt = s
            .matrices()
            .iter()
            .zip(&c)
            .map(|(bm, ci)| bm.scale(ci))
            .reduce(|x, y| &x + &y)
            .unwrap();
        assert_eq!(rebuilt, m);
        assert_eq!(s.coordinates(&ExactMatrix::identity(2)).unwrap(), None);
    }

    #[test]
    fn closure_of_identity() {
        assert_eq!(close_under_multiplication(&[ExactMatrix::identity(4)]).unwrap().dim(), 1);
    }

    #[test]
    fn closure_rejects_non_square() {
        let err = close_under_multiplication(&[ExactMatrix::zeros(2, 3)]).unwrap_err();
        assert_eq!(err, LinalgError::NotSquare { shape: (2, 3) });
    }

    #[test]
    fn closure_one_class_generators() {
        // K_3 with its dual idempotents at vertex 0 closes to dimension 5,
        // K_2 to dimension 4 (the full 2x2 matrix algebra).
        for (n, expected) in [(3, 5), (2, 4)] {
            let gens: Vec<_> = complete(n).into_iter().chain(dual(n)).collect();
            let t = close_under_multiplication(&gens).unwrap();
            assert_eq!(t.dim(), expected, "n = {n}");
            for a in t.matrices() {
                for g in &gens {
                    assert!(t.contains(&(&a * g)).unwrap());
                    assert!(t.contains(&(g * &a)).unwrap());
                }
            }
        }
    }

    #[test]
    fn centers() {
        let one = span_basis(&[ExactMatrix::identity(3)]).unwrap();
        assert_eq!(nullspace_of_commutation(&one).dim(), 1);

        let units: Vec<_> =
            (0..2).flat_map(|i| (0..2).map(move |j| unit(2, i, j))).collect();
        let full = span_basis(&units).unwrap();
        let z = nullspace_of_commutation(&full);
        assert_eq!(z.dim(), 1);
        assert!(z.contains(&ExactMatrix::identity(2)).unwrap());

        // diagonal 3x3 matrices are commutative: center is everything
        let diag = span_basis(&[unit(3, 0, 0), unit(3, 1, 1), unit(3, 2, 2)]).unwrap();
        assert_eq!(nullspace_of_commutation(&diag), diag);
    }

    #[test]
    fn nullspace_small_system() {
        // x + y + z = 0, x - z = 0
        let rows = vec![
            vec![1.into(), 1.into(), 1.into()],
            vec![1.into(), 0.into(), Rational::from(-1)],
        ];
        let ns = nullspace(rows, 3);
        assert_eq!(ns, vec![vec![Rational::one(), Rational::from(-2), Rational::one()]]);
    }
}
