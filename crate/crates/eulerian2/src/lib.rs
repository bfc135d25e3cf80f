//! Exact computation of second-order Eulerian numbers and the formal power
//! series identities connecting them to Stirling numbers and the Lambert W
//! function.
//!
//! Everything here is exact: integers are arbitrary precision ([`Int`]),
//! series coefficients are normalized big rationals ([`Rat`]), and every
//! comparison in the verification sweeps is an exact equality, never a
//! floating-point tolerance.
//!
//! The crate is organized in four layers:
//!
//! - [`exact`] — binomial coefficients, Stirling numbers of the second kind,
//!   and the second-order Eulerian triangle (OEIS A008517), each computable
//!   by independent routes (recurrence and two explicit alternating sums).
//! - [`series`] — box-truncated bivariate formal power series over `Rat`
//!   with ring operations, `exp`, reciprocal, derivative, substitution and
//!   univariate composition.
//! - [`gf`] — the named generating functions: the closed form
//!   `(1-t)/(W(-t e^{(1-t)^2 x - t}) + 1)` whose coefficients are the
//!   second-order Eulerian numbers, its antiderivative, the compositional
//!   inverse pair `u`/`y`, Lambert W Taylor coefficients, and the
//!   Lagrange-inversion coefficient formulas.
//! - [`identity`] — executable sweeps that verify each identity over a
//!   parameter range and produce structured pass/fail reports with the
//!   first counterexample when one exists.
//!
//! All values are immutable once computed; the memo tables fill on demand
//! under `&mut` access and may be read freely from multiple threads
//! afterwards.

pub mod exact;
pub mod gf;
pub mod identity;
pub mod series;

/// Arbitrary-precision signed integer used for every triangle entry.
pub type Int = num_bigint::BigInt;

/// Exact rational number; always normalized (positive denominator,
/// numerator and denominator coprime, zero is `0/1`).
pub type Rat = num_rational::BigRational;
