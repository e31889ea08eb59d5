//! Exact computation of Bernoulli-type number families and machine
//! verification of their congruence laws.
//!
//! Everything here is computed in exact rational arithmetic: classical
//! Bernoulli numbers, Hurwitz numbers attached to the lemniscatic elliptic
//! curve, their common generalization to the curves y^a = 1 - x^b, and the
//! universal Bernoulli numbers as polynomials in the coefficient variables
//! c1, c2, ....  On top of the tables sit checkers for von Staudt-Clausen
//! and Kummer style congruences, plus a small JSON template language for
//! sweeping custom congruences over ranges of primes and indices.
//!
//! Module map:
//!
//! * [`rational`], [`primes`]: canonical rationals, p-adic valuations,
//!   prime sieving, integer factorization.
//! * [`mpoly`]: sparse multivariate polynomials in c1, c2, ... with the
//!   isobaric weight grading.
//! * [`ring`], [`series`], [`laurent`]: truncated power series over an
//!   abstract coefficient ring, with composition, reversion, and the
//!   Weierstrass p-function tail.
//! * [`families`]: the number families themselves, each computed by at
//!   least two independent routes.
//! * [`congruence`]: named congruence checkers and the template sweep
//!   engine.

pub mod congruence;
mod error;
pub mod families;
pub mod laurent;
pub mod mpoly;
pub mod primes;
pub mod rational;
pub mod ring;
pub mod series;

pub use congruence::{CheckResult, Report, Summary, Verdict};
pub use congruence::{CongruenceTemplate, SweepCell};
pub use error::Error;
pub use families::{CurveSpec, Family, NumberTable, Value};
pub use laurent::Laurent;
pub use mpoly::{MPoly, Monomial};
pub use primes::PrimeList;
pub use rational::{Rat, Valuation};
pub use ring::{CoefficientRing, PolyRing, RatField};
pub use series::Series;

/// Version stamp recorded in every exported table, report, and cache entry.
pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");

pub type Result<T> = std::result::Result<T, Error>;
