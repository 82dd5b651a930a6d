//! JSON documents read and written by the CLI.
//!
//! Every matrix is a list of rows, every entry an exact rational written as a
//! string: `"n"` for integers and `"p/q"` in lowest terms otherwise.

use serde::{Deserialize, Serialize};
use wreath_algebra::linalg::{ExactMatrix, Rational};
use wreath_algebra::scheme::{validate, AssociationScheme};

use crate::error::CliError;

pub type MatrixRows = Vec<Vec<String>>;

pub fn encode(m: &ExactMatrix) -> MatrixRows {
    (0..m.rows()).map(|i| m.row(i).iter().map(ToString::to_string).collect()).collect()
}

pub fn decode(rows: &MatrixRows, what: &str) -> Result<ExactMatrix, CliError> {
    let parsed = rows
        .iter()
        .enumerate()
        .map(|(r, row)| {
            row.iter()
                .enumerate()
                .map(|(c, s)| {
                    s.parse::<Rational>()
                        .map_err(|e| CliError::Input(format!("{what}, entry ({r}, {c}): {e}")))
                })
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    ExactMatrix::from_rows(parsed).map_err(|e| CliError::Input(format!("{what}: {e}")))
}

/// Adjacency matrices `A_0, ..., A_d` of a scheme, plus its relation matrix
/// `R = sum_i i A_i` when written by `build`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SchemeDocument {
    pub order: usize,
    pub classes: usize,
    pub matrices: Vec<MatrixRows>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relation_matrix: Option<MatrixRows>,
}

impl SchemeDocument {
    pub fn from_scheme(s: &AssociationScheme) -> Self {
        SchemeDocument {
            order: s.order(),
            classes: s.classes(),
            matrices: s.adjacency_matrices().iter().map(encode).collect(),
            relation_matrix: Some(encode(&s.relation_matrix())),
        }
    }

    /// Parses and validates the scheme; the declared order, class count and
    /// relation matrix must agree with the adjacency matrices.
    pub fn to_scheme(&self) -> Result<AssociationScheme, CliError> {
        if self.matrices.len() != self.classes + 1 {
            return Err(CliError::Input(format!(
                "{} matrices listed for {} classes",
                self.matrices.len(),
                self.classes
            )));
        }
        let mats = self
            .matrices
            .iter()
            .enumerate()
            .map(|(i, m)| decode(m, &format!("matrix {i}")))
            .collect::<Result<Vec<_>, _>>()?;
        if let Some(m) = mats.iter().find(|m| m.shape() != (self.order, self.order)) {
            let (r, c) = m.shape();
            return Err(CliError::Input(format!("matrix of shape {r}x{c} in a scheme of order {}", self.order)));
        }
        let s = validate(mats).map_err(|e| CliError::Input(format!("not an association scheme: {e}")))?;
        if let Some(r) = &self.relation_matrix {
            if decode(r, "relation matrix")? != s.relation_matrix() {
                return Err(CliError::Input("relation matrix disagrees with the adjacency matrices".into()));
            }
        }
        Ok(s)
    }
}
