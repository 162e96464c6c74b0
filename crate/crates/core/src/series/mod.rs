//! Truncated power series over exact rings, lambda-structures and the power
//! structures they induce.

mod integer;
mod lambda;
mod ring;
mod trunc;

pub use integer::{geometric_pow_int, macdonald_series, ExponentSign};
pub use lambda::{
    binomial_series, lambda_factorize, lambda_reconstruct, power_pow, BivariateZeta, IntegerConfig,
    IntegerZeta, LambdaStructure,
};
pub use ring::{BiPoly, Bivariate, CoefficientRing, Integers};
pub(crate) use ring::bigint_json;
pub use trunc::TruncSeries;
