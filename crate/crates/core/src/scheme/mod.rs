//! Symmetric association schemes.
//!
//! A scheme of order `v` with `d` classes is stored as its `d + 1` adjacency
//! matrices `A_0 = I, A_1, ..., A_d`. Every constructor goes through
//! [`validate`], so a value of type [`AssociationScheme`] always satisfies the
//! four scheme axioms and carries its intersection numbers.

mod triple;

use std::collections::BTreeSet;
use std::fmt;

use crate::linalg::{ExactMatrix, Rational};

pub use triple::{TripleRegularityReport, TripleWitness};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SchemeError {
    #[error("a scheme needs at least one adjacency matrix")]
    Empty,
    #[error("adjacency matrix {class} has shape {}x{}, expected {}x{}", found.0, found.1, expected.0, expected.1)]
    Shape { class: usize, expected: (usize, usize), found: (usize, usize) },
    #[error("adjacency matrix {class} has entry {value} at ({row}, {col}); entries must be 0 or 1")]
    NotZeroOne { class: usize, row: usize, col: usize, value: Rational },
    #[error("axiom 1 fails: A_0 differs from the identity at ({row}, {col})")]
    IdentityRelation { row: usize, col: usize },
    #[error("axiom 2 fails: entry ({row}, {col}) is covered by {count} relations, expected exactly 1")]
    Partition { row: usize, col: usize, count: usize },
    #[error("axiom 3 fails: A_{class} is not symmetric at ({row}, {col})")]
    NotSymmetric { class: usize, row: usize, col: usize },
    #[error("axiom 4 fails: A_{i} A_{j} is not a combination of the adjacency matrices (entry ({row}, {col}))")]
    NotClosedUnderProduct { i: usize, j: usize, row: usize, col: usize },
    #[error("relation {class} is empty")]
    EmptyRelation { class: usize },
    #[error("class index {class} out of range for a {classes}-class scheme")]
    ClassOutOfRange { class: usize, classes: usize },
    #[error("vertex {vertex} out of range for a scheme of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("the class set must not be empty")]
    EmptyClassSet,
    #[error("class set {delta:?} is not closed: p_({h},{j})^{k} != 0 but {k} is not in the set")]
    NotClosed { delta: Vec<usize>, h: usize, j: usize, k: usize },
    #[error("K_{0} is not supported; complete schemes need n >= 2")]
    OrderTooSmall(usize),
    #[error("the cycle scheme needs at least 3 vertices, got {0}")]
    CycleTooShort(usize),
    #[error("vertex map is not a permutation of 0..{order}")]
    NotAPermutation { order: usize },
}

/// Intersection numbers `p_ij^h`, indexed `(i, j, h)`.
#[derive(Clone, PartialEq, Eq)]
pub struct IntersectionTensor {
    classes: usize,
    p: Vec<u64>,
}

impl IntersectionTensor {
    fn new(classes: usize) -> Self {
        let n = classes + 1;
        IntersectionTensor { classes, p: vec![0; n * n * n] }
    }

    fn index(&self, i: usize, j: usize, h: usize) -> usize {
        let n = self.classes + 1;
        (i * n + j) * n + h
    }

    pub fn classes(&self) -> usize {
        self.classes
    }

    pub fn get(&self, i: usize, j: usize, h: usize) -> u64 {
        self.p[self.index(i, j, h)]
    }

    fn set(&mut self, i: usize, j: usize, h: usize, value: u64) {
        let k = self.index(i, j, h);
        self.p[k] = value;
    }

    /// `k_i = p_ii^0`.
    pub fn valency(&self, i: usize) -> u64 {
        self.get(i, i, 0)
    }

    /// The tensor with classes renumbered: new class `c` is old class `order[c]`.
    pub fn relabel(&self, order: &[usize]) -> IntersectionTensor {
        let mut out = IntersectionTensor::new(self.classes);
        for (i, &oi) in order.iter().enumerate() {
            for (j, &oj) in order.iter().enumerate() {
                for (h, &oh) in order.iter().enumerate() {
                    out.set(i, j, h, self.get(oi, oj, oh));
                }
            }
        }
        out
    }
}

impl fmt::Debug for IntersectionTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.classes + 1;
        writeln!(f, "IntersectionTensor(d = {}) {{", self.classes)?;
        for h in 0..n {
            writeln!(f, "  h = {h}:")?;
            for i in 0..n {
                let row: Vec<String> = (0..n).map(|j| self.get(i, j, h).to_string()).collect();
                writeln!(f, "    [{}]", row.join(" "))?;
            }
        }
        write!(f, "}}")
    }
}

/// A symmetric association scheme.
#[derive(Clone, PartialEq, Eq)]
pub struct AssociationScheme {
    order: usize,
    adjacency: Vec<ExactMatrix>,
    /// `relation[y * order + z]` is the class of the pair `(y, z)`.
    relation: Vec<usize>,
    tensor: IntersectionTensor,
}

impl fmt::Debug for AssociationScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AssociationScheme")
            .field("order", &self.order)
            .field("classes", &self.classes())
            .field("valencies", &self.valencies())
            .finish()
    }
}

/// Checks the scheme axioms and returns the scheme.
///
/// Axiom 4 is checked by computing every product `A_i A_j` and reading its
/// coefficient on `A_h` at one position where `A_h` is 1; the product must
/// then agree with that combination at every position.
pub fn validate(adjacency: Vec<ExactMatrix>) -> Result<AssociationScheme, SchemeError> {
    let first = adjacency.first().ok_or(SchemeError::Empty)?;
    let v = first.rows();
    for (class, a) in adjacency.iter().enumerate() {
        if a.shape() != (v, v) {
            return Err(SchemeError::Shape { class, expected: (v, v), found: a.shape() });
        }
        for row in 0..v {
            for col in 0..v {
                let x = a.get(row, col);
                if !x.is_zero() && !x.is_one() {
                    return Err(SchemeError::NotZeroOne { class, row, col, value: x.clone() });
                }
            }
        }
    }
    let a0 = &adjacency[0];
    for row in 0..v {
        for col in 0..v {
            if a0.get(row, col).is_one() != (row == col) {
                return Err(SchemeError::IdentityRelation { row, col });
            }
        }
    }
    let mut relation = vec![0; v * v];
    for row in 0..v {
        for col in 0..v {
            let covering: Vec<usize> =
                (0..adjacency.len()).filter(|&c| adjacency[c].get(row, col).is_one()).collect();
            if covering.len() != 1 {
                return Err(SchemeError::Partition { row, col, count: covering.len() });
            }
            relation[row * v + col] = covering[0];
        }
    }
    for (class, a) in adjacency.iter().enumerate() {
        for row in 0..v {
            for col in 0..row {
                if a.get(row, col) != a.get(col, row) {
                    return Err(SchemeError::NotSymmetric { class, row, col });
                }
            }
        }
    }
    let d = adjacency.len() - 1;
    // one representative position per class
    let mut reps = vec![None; d + 1];
    for (pos, &c) in relation.iter().enumerate() {
        reps[c].get_or_insert(pos);
    }
    let reps: Vec<usize> = reps
        .into_iter()
        .enumerate()
        .map(|(class, r)| r.ok_or(SchemeError::EmptyRelation { class }))
        .collect::<Result<_, _>>()?;

    let mut tensor = IntersectionTensor::new(d);
    for i in 0..=d {
        for j in i..=d {
            let prod = &adjacency[i] * &adjacency[j];
            let data = prod.as_slice();
            let mut coeffs = Vec::with_capacity(d + 1);
            for (h, &pos) in reps.iter().enumerate() {
                let c = data[pos]
                    .to_i64()
                    .filter(|c| *c >= 0)
                    .ok_or(SchemeError::NotClosedUnderProduct { i, j, row: pos / v, col: pos % v })?;
                coeffs.push(c as u64);
                tensor.set(i, j, h, c as u64);
                tensor.set(j, i, h, c as u64);
            }
            if let Some(pos) = (0..v * v)
                .find(|&pos| data[pos].to_i64() != Some(coeffs[relation[pos]] as i64))
            {
                return Err(SchemeError::NotClosedUnderProduct { i, j, row: pos / v, col: pos % v });
            }
        }
    }
    Ok(AssociationScheme { order: v, adjacency, relation, tensor })
}

/// The one-class scheme `K_n` with adjacency `{I_n, J_n - I_n}`.
pub fn complete_scheme(n: usize) -> Result<AssociationScheme, SchemeError> {
    if n < 2 {
        return Err(SchemeError::OrderTooSmall(n));
    }
    let i = ExactMatrix::identity(n);
    let a1 = &ExactMatrix::ones(n, n) - &i;
    validate(vec![i, a1])
}

/// The wreath product `X wr Y` on `X x Y`.
///
/// Vertex `(x, y)` has index `y * |X| + x`, so the adjacency matrices are
/// literally `I_u (x) A_i` for the classes of `X` (indices `1..=d`) followed
/// by `B_j (x) J_v` for the classes of `Y` (indices `d+1..=d+e`).
pub fn wreath(x_scheme: &AssociationScheme, y_scheme: &AssociationScheme) -> AssociationScheme {
    let (v, u) = (x_scheme.order, y_scheme.order);
    let iu = ExactMatrix::identity(u);
    let jv = ExactMatrix::ones(v, v);
    let mut adjacency: Vec<ExactMatrix> =
        x_scheme.adjacency.iter().map(|a| iu.kronecker(a)).collect();
    adjacency.extend(y_scheme.adjacency.iter().skip(1).map(|b| b.kronecker(&jv)));
    validate(adjacency).expect("the wreath product of two schemes is a scheme")
}

/// Builds a scheme from a symmetric table of class indices, `table[y][z]`
/// being the class of `(y, z)`. The number of classes is the largest entry.
pub fn from_relation_table(table: &[Vec<usize>]) -> Result<AssociationScheme, SchemeError> {
    let v = table.len();
    if v == 0 {
        return Err(SchemeError::Empty);
    }
    if let Some((row, r)) = table.iter().enumerate().find(|(_, r)| r.len() != v) {
        return Err(SchemeError::Shape { class: 0, expected: (v, v), found: (row, r.len()) });
    }
    let d = table.iter().flatten().copied().max().unwrap_or(0);
    let adjacency = (0..=d)
        .map(|c| {
            ExactMatrix::from_fn(v, v, |y, z| {
                if table[y][z] == c { Rational::one() } else { Rational::zero() }
            })
        })
        .collect();
    validate(adjacency)
}

/// The distance scheme of the `n`-cycle: class `i` joins vertices at cyclic distance `i`.
pub fn cycle_scheme(n: usize) -> Result<AssociationScheme, SchemeError> {
    if n < 3 {
        return Err(SchemeError::CycleTooShort(n));
    }
    let table: Vec<Vec<usize>> = (0..n)
        .map(|y| (0..n).map(|z| ((y + n - z) % n).min((z + n - y) % n)).collect())
        .collect();
    from_relation_table(&table)
}

impl AssociationScheme {
    /// Number of points `v`.
    pub fn order(&self) -> usize {
        self.order
    }

    /// Number of non-identity classes `d`.
    pub fn classes(&self) -> usize {
        self.adjacency.len() - 1
    }

    pub fn adjacency(&self, i: usize) -> &ExactMatrix {
        &self.adjacency[i]
    }

    pub fn adjacency_matrices(&self) -> &[ExactMatrix] {
        &self.adjacency
    }

    /// The class `i` with `(y, z) in R_i`.
    pub fn relation(&self, y: usize, z: usize) -> usize {
        self.relation[y * self.order + z]
    }

    pub fn intersection_tensor(&self) -> &IntersectionTensor {
        &self.tensor
    }

    pub fn intersection_number(&self, i: usize, j: usize, h: usize) -> u64 {
        self.tensor.get(i, j, h)
    }

    fn check_class(&self, class: usize) -> Result<(), SchemeError> {
        if class > self.classes() {
            return Err(SchemeError::ClassOutOfRange { class, classes: self.classes() });
        }
        Ok(())
    }

    pub(crate) fn check_vertex(&self, vertex: usize) -> Result<(), SchemeError> {
        if vertex >= self.order {
            return Err(SchemeError::VertexOutOfRange { vertex, order: self.order });
        }
        Ok(())
    }

    /// Row sum of `A_i`, the `i`-th valency `k_i`.
    pub fn valency(&self, i: usize) -> Result<u64, SchemeError> {
        self.check_class(i)?;
        Ok(self.tensor.valency(i))
    }

    pub fn valencies(&self) -> Vec<u64> {
        (0..=self.classes()).map(|i| self.tensor.valency(i)).collect()
    }

    /// `R(X) = sum_i i A_i`.
    pub fn relation_matrix(&self) -> ExactMatrix {
        let v = self.order;
        ExactMatrix::from_fn(v, v, |y, z| Rational::from(self.relation(y, z)))
    }

    /// The subconstituent `R_i(x)`, in increasing vertex order.
    pub fn subconstituent(&self, x: usize, i: usize) -> Vec<usize> {
        (0..self.order).filter(|&y| self.relation(x, y) == i).collect()
    }

    /// `R_i R_j = {h : p_ij^h != 0}`.
    pub fn complex_product(&self, i: usize, j: usize) -> Result<BTreeSet<usize>, SchemeError> {
        self.check_class(i)?;
        self.check_class(j)?;
        Ok((0..=self.classes()).filter(|&h| self.tensor.get(i, j, h) != 0).collect())
    }

    fn closure_witness(&self, delta: &[usize]) -> Result<Option<(usize, usize, usize)>, SchemeError> {
        if delta.is_empty() {
            return Err(SchemeError::EmptyClassSet);
        }
        for &c in delta {
            self.check_class(c)?;
        }
        for &h in delta {
            for &j in delta {
                if let Some(k) = self.complex_product(h, j)?.into_iter().find(|k| !delta.contains(k)) {
                    return Ok(Some((h, j, k)));
                }
            }
        }
        Ok(None)
    }

    /// Whether `{R_i : i in delta}` is closed under the complex product.
    pub fn is_closed_subset(&self, delta: &[usize]) -> Result<bool, SchemeError> {
        Ok(self.closure_witness(delta)?.is_none())
    }

    /// The subscheme on `X_delta = union of R_i(x) for i in delta`.
    ///
    /// Points keep their relative order; class `c` of the result is the
    /// `c`-th smallest element of `delta`. `delta` must be closed, which
    /// forces `0 in delta` since `p_hh^0 = k_h > 0`.
    pub fn subscheme(&self, delta: &[usize], x: usize) -> Result<AssociationScheme, SchemeError> {
        self.check_vertex(x)?;
        let classes: Vec<usize> = delta.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
        if let Some((h, j, k)) = self.closure_witness(&classes)? {
            return Err(SchemeError::NotClosed { delta: classes, h, j, k });
        }
        debug_assert_eq!(classes[0], 0);
        let points: Vec<usize> =
            (0..self.order).filter(|&y| classes.contains(&self.relation(x, y))).collect();
        let adjacency = classes.iter().map(|&c| self.adjacency[c].select(&points, &points)).collect();
        validate(adjacency)
    }

    /// Relabels the points: point `y` becomes `sigma[y]`.
    pub fn permute_vertices(&self, sigma: &[usize]) -> Result<AssociationScheme, SchemeError> {
        let v = self.order;
        let mut seen = vec![false; v];
        if sigma.len() != v || !sigma.iter().all(|&s| s < v && !std::mem::replace(&mut seen[s], true)) {
            return Err(SchemeError::NotAPermutation { order: v });
        }
        validate(self.adjacency.iter().map(|a| a.conjugate_by(sigma)).collect())
    }

    /// Brute-force triple-regularity check over all point triples.
    pub fn triple_regularity(&self) -> TripleRegularityReport {
        triple::triple_regularity(self)
    }
}
