//! One module per subcommand. Each `run` returns the results payload and the
//! exit status; errors bubble to `main`, which folds them into the report.

pub mod alex;
pub mod blanchfield;
pub mod certify;
pub mod family;
pub mod obstruct;
pub mod sig;
