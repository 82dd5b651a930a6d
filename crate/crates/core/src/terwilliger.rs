//! Dual Bose-Mesner algebras and Terwilliger algebras with respect to a base point.

use crate::linalg::{
    close_under_multiplication, nullspace_of_commutation, span_basis_of_shape, ExactMatrix,
    LinalgError, Rational, SpanBasis,
};
use crate::scheme::{AssociationScheme, SchemeError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum TerwilligerError {
    #[error(transparent)]
    Scheme(#[from] SchemeError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("the subspace is not contained in T(x)")]
    NotInAlgebra,
    #[error("the subspace is not a two-sided ideal of T(x)")]
    NotAnIdeal,
}

/// The diagonal projections `E_i*` onto the subconstituents `R_i(x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualIdempotents {
    pub base_point: usize,
    pub mats: Vec<ExactMatrix>,
}

/// `(E_i*)_yy = 1` iff `(x, y) in R_i`.
pub fn dual_idempotents(s: &AssociationScheme, x: usize) -> Result<DualIdempotents, SchemeError> {
    s.check_vertex(x)?;
    let v = s.order();
    let mats = (0..=s.classes())
        .map(|i| {
            ExactMatrix::from_fn(v, v, |y, z| {
                if y == z && s.relation(x, y) == i { Rational::one() } else { Rational::zero() }
            })
        })
        .collect();
    Ok(DualIdempotents { base_point: x, mats })
}

/// The Terwilliger algebra `T(x)`: the algebra generated by all `A_i` and all `E_i*`.
#[derive(Debug, Clone)]
pub struct TerwilligerAlgebra {
    scheme: AssociationScheme,
    duals: DualIdempotents,
    basis: SpanBasis,
}

impl TerwilligerAlgebra {
    /// Generates `T(x)` by multiplicative closure of the `2(d + 1)` generators.
    pub fn new(scheme: &AssociationScheme, x: usize) -> Result<Self, TerwilligerError> {
        let duals = dual_idempotents(scheme, x)?;
        let generators: Vec<ExactMatrix> =
            scheme.adjacency_matrices().iter().chain(&duals.mats).cloned().collect();
        let basis = close_under_multiplication(&generators)?;
        Ok(TerwilligerAlgebra { scheme: scheme.clone(), duals, basis })
    }

    pub fn scheme(&self) -> &AssociationScheme {
        &self.scheme
    }

    pub fn base_point(&self) -> usize {
        self.duals.base_point
    }

    pub fn duals(&self) -> &DualIdempotents {
        &self.duals
    }

    pub fn basis(&self) -> &SpanBasis {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn classes(&self) -> usize {
        self.scheme.classes()
    }

    pub fn order(&self) -> usize {
        self.scheme.order()
    }

    /// `A_i`.
    pub fn a(&self, i: usize) -> &ExactMatrix {
        self.scheme.adjacency(i)
    }

    /// `E_i*`.
    pub fn e(&self, i: usize) -> &ExactMatrix {
        &self.duals.mats[i]
    }

    /// `k_i`.
    pub fn k(&self, i: usize) -> u64 {
        self.scheme.intersection_tensor().valency(i)
    }

    pub fn j(&self) -> ExactMatrix {
        ExactMatrix::ones(self.order(), self.order())
    }

    /// All `A_i` followed by all `E_i*`.
    pub fn generators(&self) -> Vec<&ExactMatrix> {
        self.scheme.adjacency_matrices().iter().chain(&self.duals.mats).collect()
    }

    /// `E_i* A_j E_h*`, computed as the restriction of `A_j` to rows in
    /// `R_i(x)` and columns in `R_h(x)`.
    pub fn triple_product(&self, i: usize, j: usize, h: usize) -> Result<ExactMatrix, SchemeError> {
        for c in [i, j, h] {
            self.scheme.valency(c)?;
        }
        Ok(self.triple(i, j, h))
    }

    pub(crate) fn triple(&self, i: usize, j: usize, h: usize) -> ExactMatrix {
        let (x, v) = (self.base_point(), self.order());
        let s = &self.scheme;
        ExactMatrix::from_fn(v, v, |y, z| {
            if s.relation(x, y) == i && s.relation(x, z) == h && s.relation(y, z) == j {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    /// Span of all `(d + 1)^3` triple products `E_i* A_j E_h*`.
    pub fn triple_product_span(&self) -> SpanBasis {
        let n = self.classes() + 1;
        let v = self.order();
        let mut span = span_basis_of_shape(v, v, &[]).expect("empty span");
        for i in 0..n {
            for j in 0..n {
                for h in 0..n {
                    span.insert(&self.triple(i, j, h)).expect("square shape");
                }
            }
        }
        span
    }

    /// Whether `u` is a two-sided ideal: `bm` and `mb` lie in `u` for every
    /// basis element `b` of `T(x)` and `m` of `u`.
    pub fn is_ideal(&self, u: &SpanBasis) -> Result<bool, TerwilligerError> {
        if !u.is_subspace_of(&self.basis)? {
            return Err(TerwilligerError::NotInAlgebra);
        }
        let tb = self.basis.matrices();
        for m in u.matrices() {
            for b in &tb {
                if !u.contains(&(b * &m))? || !u.contains(&(&m * b))? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Whether `T(x)/u` is commutative, i.e. every commutator of basis
    /// elements of `T(x)` lies in the ideal `u`.
    pub fn quotient_is_commutative(&self, u: &SpanBasis) -> Result<bool, TerwilligerError> {
        if !self.is_ideal(u)? {
            return Err(TerwilligerError::NotAnIdeal);
        }
        let tb = self.basis.matrices();
        for (p, a) in tb.iter().enumerate() {
            for b in &tb[p + 1..] {
                if !u.contains(&a.commutator(b))? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// The center `Z(T(x))`.
    pub fn center(&self) -> SpanBasis {
        nullspace_of_commutation(&self.basis)
    }

    pub(crate) fn in_algebra(&self, m: &ExactMatrix) -> bool {
        self.basis.contains(m).expect("T(x) shape")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::span_basis;
    use crate::scheme::{complete_scheme, wreath};

    fn k(n: usize) -> AssociationScheme {
        complete_scheme(n).unwrap()
    }

    #[test]
    fn dual_idempotents_of_k3() {
        let d = dual_idempotents(&k(3), 0).unwrap();
        assert_eq!(d.mats[0], ExactMatrix::from_integers(&[[1, 0, 0], [0, 0, 0], [0, 0, 0]]));
        assert_eq!(d.mats[1], ExactMatrix::from_integers(&[[0, 0, 0], [0, 1, 0], [0, 0, 1]]));
        assert!(matches!(dual_idempotents(&k(3), 3), Err(SchemeError::VertexOutOfRange { .. })));
    }

    #[test]
    fn dual_traces_are_valencies() {
        let w = wreath(&k(2), &k(3));
        for x in 0..6 {
            let d = dual_idempotents(&w, x).unwrap();
            let traces: Vec<Rational> = d.mats.iter().map(ExactMatrix::trace).collect();
            assert_eq!(traces, vec![1.into(), 1.into(), 4.into()]);
            let total = d.mats.iter().skip(1).fold(d.mats[0].clone(), |acc, m| &acc + m);
            assert_eq!(total, ExactMatrix::identity(6));
            for (i, a) in d.mats.iter().enumerate() {
                for (j, b) in d.mats.iter().enumerate() {
                    let expected = if i == j { a.clone() } else { ExactMatrix::zeros(6, 6) };
                    assert_eq!(a * b, expected);
                }
            }
        }
    }

    #[test]
    fn triple_product_matches_matrix_product() {
        let t = TerwilligerAlgebra::new(&wreath(&k(2), &k(3)), 4).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                for h in 0..3 {
                    let direct = &(t.e(i) * t.a(j)) * t.e(h);
                    assert_eq!(t.triple_product(i, j, h).unwrap(), direct);
                }
            }
        }
        assert_eq!(t.triple_product(0, 0, 0).unwrap(), *t.e(0));
        assert!(t.triple_product(0, 0, 3).is_err());
    }

    #[test]
    fn dimensions_of_small_algebras() {
        assert_eq!(TerwilligerAlgebra::new(&k(2), 0).unwrap().dim(), 4);
        assert_eq!(TerwilligerAlgebra::new(&k(4), 1).unwrap().dim(), 5);
        assert_eq!(TerwilligerAlgebra::new(&wreath(&k(2), &k(2)), 0).unwrap().dim(), 10);
    }

    #[test]
    fn ideals() {
        let t = TerwilligerAlgebra::new(&k(3), 0).unwrap();
        assert!(t.is_ideal(t.basis()).unwrap());
        assert!(t.quotient_is_commutative(t.basis()).unwrap());
        let scalars = span_basis(&[ExactMatrix::identity(3)]).unwrap();
        assert!(!t.is_ideal(&scalars).unwrap());
        assert_eq!(t.quotient_is_commutative(&scalars).unwrap_err(), TerwilligerError::NotAnIdeal);
        let outside = span_basis(&[ExactMatrix::from_integers(&[[0, 1, 0], [0, 0, 0], [0, 0, 0]])])
            .unwrap();
        assert_eq!(t.is_ideal(&outside).unwrap_err(), TerwilligerError::NotInAlgebra);
    }

    #[test]
    fn zero_ideal_quotient_of_noncommutative_algebra() {
        let t = TerwilligerAlgebra::new(&wreath(&k(2), &k(3)), 0).unwrap();
        let zero = span_basis_of_shape(6, 6, &[]).unwrap();
        assert!(t.is_ideal(&zero).unwrap());
        assert!(!t.quotient_is_commutative(&zero).unwrap());
    }

    #[test]
    fn centers() {
        assert_eq!(TerwilligerAlgebra::new(&k(2), 0).unwrap().center().dim(), 1);
        assert_eq!(TerwilligerAlgebra::new(&k(3), 0).unwrap().center().dim(), 2);
        let w = wreath(&k(2), &k(2));
        assert_eq!(TerwilligerAlgebra::new(&w, 0).unwrap().center().dim(), 2);
        let w33 = wreath(&k(3), &k(3));
        assert_eq!(TerwilligerAlgebra::new(&w33, 0).unwrap().center().dim(), 4);
    }

    #[test]
    fn triple_products_span_t_for_wreath() {
        let t = TerwilligerAlgebra::new(&wreath(&k(2), &k(3)), 2).unwrap();
        let span = t.triple_product_span();
        assert_eq!(&span, t.basis());
    }
}
