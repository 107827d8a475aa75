//! The torsion module of a knot and its linking pairing, computed exactly
//! from a Seifert matrix.
//!
//! [`module_from_seifert`] builds the module presented by `tV - V^T` as a
//! finite-dimensional rational vector space with a `t`-action, with the
//! normalized order polynomial attached. [`pairing`] evaluates the
//! sesquilinear linking form with values in the rational function field
//! modulo Laurent polynomials, reduced to a canonical representative so
//! equality of classes is structural equality. [`is_metabolizer`] tests
//! pairwise annihilation of a list of elements, and
//! [`find_cyclic_metabolizer`] decides exhaustively whether a cyclic module
//! contains a half-dimensional self-annihilating submodule — the algebraic
//! obstruction probed by slice-style questions.

mod module;
mod pairing;

pub use module::{module_from_seifert, BlanchfieldModule, ModuleElement};
pub use pairing::{
    find_cyclic_metabolizer, generator_nonannihilation_check, is_metabolizer, pairing,
    MetabolizerCheck, PairingValue,
};
