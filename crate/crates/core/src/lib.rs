//! Exact-arithmetic invariants for knot and link concordance.
//!
//! The crate is organized in layers:
//!
//! * [`exactnum`] -- sparse Laurent polynomials over Q with the bar involution,
//!   Gaussian rationals, real algebraic numbers with Sturm isolation, outward
//!   rational interval arithmetic and cyclotomic fields.
//! * [`knotio`] -- planar diagram codes, Wirtinger presentations, Seifert
//!   matrices and linking numbers.
//! * [`alexander`] -- Fox calculus, Alexander polynomials and modules, the
//!   two-variable seed link family, mixed commutator series quotients.
//! * [`ltsig`] -- Levine-Tristram signature functions with exact jump data,
//!   Haar-measure integrals and root-of-unity sums.
//! * [`blanchfield`] -- Blanchfield pairings and metabolizer tests for knots.
//! * [`towers`] -- satellite configurations, the iterated infection family, and
//!   a forward-chaining inference engine over concordance/cobordism facts.
//! * [`obstruction`] -- Cheeger-Gromov style bound models and the amplified
//!   signature obstruction with certified verdicts.
//!
//! All arithmetic on invariants is exact (big rationals, algebraic numbers,
//! cyclotomic fields). Floating point appears only in test oracles.

pub mod exactnum;
pub mod knotio;
pub mod alexander;
pub mod ltsig;
pub mod blanchfield;
pub mod towers;
pub mod obstruction;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    /// Interval refinement exceeded the iteration cap.
    #[error("precision cap of {cap} refinement steps exceeded while {context}")]
    PrecisionCap { cap: u64, context: String },

    /// gcd of two zero polynomials.
    #[error("gcd undefined: both arguments are zero")]
    GcdUndefined,

    /// gcd of polynomials in three or more variables.
    #[error("gcd unsupported in {0} variables (at most 2)")]
    GcdUnsupportedVars(usize),

    /// Operands live over different variable sets.
    #[error("variable mismatch: {0:?} vs {1:?}")]
    VarMismatch(Vec<String>, Vec<String>),

    /// Malformed rational literal in an input file.
    #[error("invalid rational literal {0:?}")]
    BadRational(String),

    /// Planar diagram code failed validation.
    #[error("invalid PD code: {0}")]
    BadPd(String),

    /// Group presentation failed validation.
    #[error("invalid presentation: {0}")]
    BadPresentation(String),

    /// Seifert matrix failed validation.
    #[error("invalid Seifert matrix: {0}")]
    BadSeifert(String),

    /// Abelianization is not free of the expected rank.
    #[error("abelianization is not free of rank {expected}: {detail}")]
    BadAbelianization { expected: usize, detail: String },

    /// det(tV - V^T) vanishes identically.
    #[error("degenerate Alexander polynomial: det(tV - V^T) = 0")]
    DegenerateAlexander,

    /// Modulus must be prime for this operation.
    #[error("{0} is not prime")]
    NotPrime(u64),

    /// p-sum modulus must be a positive integer.
    #[error("root of unity order must be >= 1, got {0}")]
    BadOrder(i64),

    /// Element fails the generator test for a module.
    #[error("element does not generate the module")]
    NotAGenerator,

    /// Generator test invoked on the zero module.
    #[error("not a generator of nontrivial module: module is zero")]
    ZeroModule,

    /// A theorem-level guarantee failed; indicates a bug or bad input data.
    #[error("internal consistency error: {0}")]
    Inconsistent(String),

    /// Satellite composition with an m = 0 companion configuration.
    #[error("companion configuration must have positive height")]
    ZeroHeightCompanion,

    /// Satellite companion must be a knot.
    #[error("companion {0:?} is not a knot")]
    CompanionNotKnot(String),

    /// Inference engine found contradictory facts.
    #[error("contradictory facts: {0}")]
    Contradiction(String),

    /// Bound model is missing required manifolds.
    #[error("bound model missing entries for: {}", .0.join(", "))]
    MissingBounds(Vec<String>),

    /// Obstruction lower bound is not positive, so copies cannot amplify it.
    #[error("obstruction cannot be amplified: certified lower bound {0} is not positive")]
    CannotAmplify(String),

    /// Mixed-series quotient for links with three or more components.
    #[error("mixed series quotient unsupported for {0} components (at most 2)")]
    TooManyComponents(usize),

    /// Family construction parameter out of range.
    #[error("invalid family parameters: {0}")]
    BadFamily(String),

    /// Catch-all for malformed inputs.
    #[error("invalid input: {0}")]
    BadInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Default cap on interval refinement iterations. Overridable per call and via
/// `CONCORDANCE_KIT_PRECISION_CAP` in the CLI.
pub const DEFAULT_PRECISION_CAP: u64 = 10_000;
