//! Exact scalar, polynomial, rational-function, and series arithmetic.
//!
//! Everything downstream builds on the types here:
//! - [`Rat`]: arbitrary-precision rationals
//! - [`Poly`] / [`RatFun`]: dense polynomials and reduced quotients
//! - [`PowerSeries`]: truncated series with explicit order
//! - [`LogSeries`]: x^v * sum u_j(x) log(x)^j / j!
//! - [`GaugeSeries`]: exponential factors exp(lambda * integral r)
//! - Stirling numbers and exact linear algebra.

pub mod gauge;
pub mod linalg;
pub mod logseries;
pub mod poly;
pub mod rat;
pub mod ratfun;
pub mod series;
pub mod stirling;

pub use gauge::{gauge_series, laurent_expand, GaugeSeries};
pub use logseries::{log_wronskian, LogSeries};
pub use poly::{Poly, Var};
pub use rat::Rat;
pub use ratfun::RatFun;
pub use series::{hadamard_series, PowerSeries, DEFAULT_ORDER};
pub use stirling::{stirling, StirlingKind};
