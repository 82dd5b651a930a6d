use std::fmt;

/// The fixed set of structural checks run by the verifiers.
///
/// Each name is stable and appears verbatim in CLI reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckName {
    /// Valencies follow `k_i = (k_0 + ... + k_{i-1})(n_i - 1)`.
    BoseValencies,
    /// `A_i A_j = k_i A_j` for `i < j`.
    BoseProducts,
    /// `A_i^2 = k_i (A_0 + ... + A_{i-1} + (n_i - 2)/(n_i - 1) A_i)`.
    BoseSquares,
    /// `{R_0, ..., R_i}` is closed for every `i`.
    BoseClosedSubsets,
    /// `(A_0 + ... + A_h)^2 = (k_0 + ... + k_h)(A_0 + ... + A_h)`.
    PartialSumSquare,
    /// `A_g (A_0 + ... + A_h) = k_g (A_0 + ... + A_h)` for `g <= h`.
    PartialSumAbsorb,
    /// Splitting off the last factor: `X = Y wr K_n` with the product and
    /// square identities for `A_d`, the closed subset `{0..d-1}` and the
    /// relation-matrix identity.
    WreathDecomposition,
    /// `E_i* A_j E_h* = 0` iff `p_ij^h = 0`.
    TripleProductZeros,
    /// Which triple products vanish on a wreath product.
    NonzeroPattern,
    /// Absorption identities between `A_j`, `J` and the `E_i*`.
    SubconstituentIdentities,
    /// Block shape of every `A_j` after sorting points by subconstituent.
    BlockAdjacency,
    /// `G_ij` has the single nonzero block `k_j^{-1} J`.
    BlockPrimary,
    /// The `G_ij` are independent and span a space of dimension `(d + 1)^2`.
    PrimaryDimension,
    /// `G_ij G_gh = δ_jg G_ih`.
    MatrixUnits,
    /// `G_00 + ... + G_dd` is the identity of the primary ideal.
    PrimaryUnit,
    /// `A_h G_ij = E_i* A_h E_i* G_ij` for `h < i` and the mirrored identity.
    PrimaryAbsorption,
    /// Explicit expansions of `A_h G_ij`, `G_ij A_h`, `E_h* G_ij` and `G_ij E_h*`.
    PrimaryAction,
    /// The span of the `G_ij` is a two-sided ideal of `T(x)`.
    PrimaryIdeal,
    /// `T(x)` modulo the primary ideal is commutative.
    QuotientCommutative,
    /// `(E_i* A_g E_i*)(E_i* A_h E_i*) = E_i* A_g A_h E_i*` unless `g = h = i`.
    SubconstituentProducts,
    /// Partial sums `sum_{j<=h} E_i* A_j E_i*` are scaled idempotents.
    PartialSumIdempotent,
    /// Left and right action of each `A_g` on those partial sums.
    PartialSumAction,
    /// Exactly `d(d+1)/2 - b` of the `F_ih` are nonzero, and `F_{i,i-1} = 0` iff `n_i = 2`.
    CentralCount,
    /// `F^2 = F` for every nonzero `F_ih`.
    CentralIdempotent,
    /// Every nonzero `F_ih` lies in `T(x)` and commutes with all generators.
    CentralCommutes,
    /// `F U = U F = 0` for the primary ideal `U`.
    CentralAnnihilatesPrimary,
    /// `F F' = 0` for distinct nonzero `F`, `F'`.
    CentralOrthogonal,
    /// `A_g F_ih = F_ih A_g` equals `k_g F_ih`, `-(k_0 + ... + k_h) F_ih` or 0.
    CentralAction,
    /// `T(x) = U ⊕ span{F_ih}` as vector spaces.
    Decomposition,
    /// `dim T(x) = (d+1)^2 + d(d+1)/2 - b`.
    DimensionFormula,
    /// `dim Z(T(x)) = 1 + d(d+1)/2 - b`.
    CenterDimension,
    /// The triple products span `T(x)`.
    TripleProductSpan,
    /// Brute-force triple regularity of the scheme.
    TripleRegularity,
}

impl CheckName {
    pub const ALL: [CheckName; 33] = [
        CheckName::BoseValencies,
        CheckName::BoseProducts,
        CheckName::BoseSquares,
        CheckName::BoseClosedSubsets,
        CheckName::PartialSumSquare,
        CheckName::PartialSumAbsorb,
        CheckName::WreathDecomposition,
        CheckName::TripleProductZeros,
        CheckName::NonzeroPattern,
        CheckName::SubconstituentIdentities,
        CheckName::BlockAdjacency,
        CheckName::BlockPrimary,
        CheckName::PrimaryDimension,
        CheckName::MatrixUnits,
        CheckName::PrimaryUnit,
        CheckName::PrimaryAbsorption,
        CheckName::PrimaryAction,
        CheckName::PrimaryIdeal,
        CheckName::QuotientCommutative,
        CheckName::SubconstituentProducts,
        CheckName::PartialSumIdempotent,
        CheckName::PartialSumAction,
        CheckName::CentralCount,
        CheckName::CentralIdempotent,
        CheckName::CentralCommutes,
        CheckName::CentralAnnihilatesPrimary,
        CheckName::CentralOrthogonal,
        CheckName::CentralAction,
        CheckName::Decomposition,
        CheckName::DimensionFormula,
        CheckName::CenterDimension,
        CheckName::TripleProductSpan,
        CheckName::TripleRegularity,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CheckName::BoseValencies => "bose-valencies",
            CheckName::BoseProducts => "bose-products",
            CheckName::BoseSquares => "bose-squares",
            CheckName::BoseClosedSubsets => "bose-closed-subsets",
            CheckName::PartialSumSquare => "partial-sum-square",
            CheckName::PartialSumAbsorb => "partial-sum-absorb",
            CheckName::WreathDecomposition => "wreath-decomposition",
            CheckName::TripleProductZeros => "triple-product-zeros",
            CheckName::NonzeroPattern => "nonzero-pattern",
            CheckName::SubconstituentIdentities => "subconstituent-identities",
            CheckName::BlockAdjacency => "block-adjacency",
            CheckName::BlockPrimary => "block-primary",
            CheckName::PrimaryDimension => "primary-dimension",
            CheckName::MatrixUnits => "matrix-units",
            CheckName::PrimaryUnit => "primary-unit",
            CheckName::PrimaryAbsorption => "primary-absorption",
            CheckName::PrimaryAction => "primary-action",
            CheckName::PrimaryIdeal => "primary-ideal",
            CheckName::QuotientCommutative => "quotient-commutative",
            CheckName::SubconstituentProducts => "subconstituent-products",
            CheckName::PartialSumIdempotent => "partial-sum-idempotent",
            CheckName::PartialSumAction => "partial-sum-action",
            CheckName::CentralCount => "central-count",
            CheckName::CentralIdempotent => "central-idempotent",
            CheckName::CentralCommutes => "central-commutes",
            CheckName::CentralAnnihilatesPrimary => "central-annihilates-primary",
            CheckName::CentralOrthogonal => "central-orthogonal",
            CheckName::CentralAction => "central-action",
            CheckName::Decomposition => "decomposition",
            CheckName::DimensionFormula => "dimension-formula",
            CheckName::CenterDimension => "center-dimension",
            CheckName::TripleProductSpan => "triple-product-span",
            CheckName::TripleRegularity => "triple-regularity",
        }
    }
}

impl fmt::Display for CheckName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Outcome of one structural check. A failed check carries the first
/// counterexample found.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: CheckName,
    pub passed: bool,
    pub witness: Option<String>,
}

impl Check {
    pub(crate) fn run(name: CheckName, body: impl FnOnce() -> Result<(), String>) -> Check {
        match body() {
            Ok(()) => Check { name, passed: true, witness: None },
            Err(w) => Check { name, passed: false, witness: Some(w) },
        }
    }
}

/// Returns early from a check body with a formatted witness.
macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}
pub(crate) use ensure;
