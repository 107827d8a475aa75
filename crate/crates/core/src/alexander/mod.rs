//! Fox calculus, Alexander polynomials and modules, the seed-link module
//! family, and mixed filtration quotients.

mod fox;
mod mixed;
mod poly;
mod seed;

pub use fox::{fox_derivative, fox_matrix, free_reduce, invert_word, GroupRingElem};
pub use mixed::{mixed_series_quotient, CoefficientRing, ModulePresentation, SeriesQuotient};
pub use poly::{
    alexander_from_presentation, alexander_from_seifert, alexander_from_wirtinger_deleting,
    alexander_polynomial, laurent_det, link_vars, seifert_characteristic,
};
pub use seed::{seed_link_det, seed_link_f, seed_link_order, seed_link_presentation};
