//! Signature invariants of Seifert matrices over the unit circle.
//!
//! To a Seifert matrix `V` and a unit-circle point `w` this layer attaches the
//! hermitian form `(1-w)V + (1-conj w)V^T` and computes, entirely in exact
//! arithmetic:
//!
//! - the inertia (and hence signature and nullity) at any rational circle
//!   point, at `-1`, and at any root of unity ([`inertia_at`]);
//! - the full step function on the circle: jump locations with exact
//!   root-of-unity tags where applicable, plus one inertia per arc of
//!   constancy ([`signature_function`]);
//! - the integral of the function against the normalized Haar measure, exact
//!   when every jump is a root of unity and a certified enclosure otherwise
//!   ([`signature_integral`]);
//! - sums over all nontrivial `p`-th roots of unity
//!   ([`root_of_unity_sum`]).

mod function;
mod hermitian;
mod integral;
mod jumps;
mod sums;

pub use function::{signature_at, signature_function, ArcSample, JumpDetail, SignatureFunction};
pub use hermitian::{
    hermitian_form_cyclotomic, hermitian_form_rational, inertia_at, inertia_cyclotomic,
    inertia_rational, CirclePoint, Inertia,
};
pub use integral::{signature_integral, signature_integral_of, IntegralValue};
pub use jumps::{jump_locations, pencil_nullity_at, JumpData, JumpPoint};
pub use sums::{root_of_unity_sum, RootOfUnitySum, SumTerm};
