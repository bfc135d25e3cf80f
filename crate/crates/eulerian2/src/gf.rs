//! The named generating functions tying the second-order Eulerian triangle
//! to Stirling numbers and the Lambert W function.
//!
//! The centerpiece is [`gf_rhs`], the closed form
//! `(1 - t) / (W(-t e^{(1-t)^2 x - t}) + 1)` expanded as a truncated
//! bivariate series: its EGF-in-`x` coefficient at `(n, m)` is the
//! second-order Eulerian number `E(n, m)`. The surrounding derivation is
//! exposed piece by piece so each link can be verified on its own:
//! [`gf_antiderivative`] is the series whose `x`-derivative recovers
//! [`gf_rhs`], [`u_series`]/[`y_series`] are the compositional inverse pair
//! behind it, and [`lagrange_t_coeff`]/[`lagrange_d_coeff`] are the closed
//! coefficient formulas that Lagrange inversion produces along the way.
//!
//! Everything works over exact rationals; the Lambert W function enters only
//! as its formal Taylor coefficient stream, never numerically.

use num_traits::{One, Zero};

use crate::exact::{binomial, factorial, Tables};
use crate::series::BivariateSeries;
use crate::{Int, Rat};

/// Taylor coefficients of the principal branch of the Lambert W function:
/// entry `j` is `(-j)^(j-1) / j!`, with entry 0 equal to 0. This is the
/// unique constant-free stream satisfying `w(x) e^{w(x)} = x` as a formal
/// series.
pub fn lambert_w_coeffs(max_order: usize) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); max_order + 1];
    for (j, slot) in out.iter_mut().enumerate().skip(1) {
        let signed_base = -Int::from(j as i64);
        *slot = Rat::new(signed_base.pow(j as u32 - 1), factorial(j as i64));
    }
    out
}

/// The exponent series `(1-t)^2 x - t`, clipped to the box.
fn gf_exponent(trunc_x: usize, trunc_t: usize) -> BivariateSeries {
    let mut h = BivariateSeries::zero(trunc_x, trunc_t);
    if trunc_x >= 1 {
        h.set(1, 0, Rat::one());
        if trunc_t >= 1 {
            h.set(1, 1, Rat::from_integer(Int::from(-2)));
        }
        if trunc_t >= 2 {
            h.set(1, 2, Rat::one());
        }
    }
    if trunc_t >= 1 {
        h.set(0, 1, -Rat::one());
    }
    h
}

/// `1 - t` on the given box.
fn one_minus_t(trunc_x: usize, trunc_t: usize) -> BivariateSeries {
    let mut s = BivariateSeries::one(trunc_x, trunc_t);
    if trunc_t >= 1 {
        s.set(0, 1, -Rat::one());
    }
    s
}

/// `W(-t e^{(1-t)^2 x - t})`: the Lambert W stream composed with the
/// constant-free argument series.
fn w_of_gf_argument(trunc_x: usize, trunc_t: usize) -> BivariateSeries {
    let argument = if trunc_t == 0 {
        // every term of -t e^{...} carries at least one t
        BivariateSeries::zero(trunc_x, 0)
    } else {
        BivariateSeries::monomial(trunc_x, trunc_t, 0, 1, -Rat::one())
            .mul(&gf_exponent(trunc_x, trunc_t).exp())
    };
    BivariateSeries::compose_univariate(&lambert_w_coeffs(trunc_x + trunc_t), &argument)
}

/// The generating function of the second-order Eulerian triangle:
/// `(1 - t) / (W(-t e^{(1-t)^2 x - t}) + 1)`, truncated to the box.
///
/// Its EGF coefficient at `(n, m)` equals `E(n, m)`, including the boundary
/// rows: constant term 1, zero pure-`x` and pure-`t` slices.
pub fn gf_rhs(trunc_x: usize, trunc_t: usize) -> BivariateSeries {
    let w = w_of_gf_argument(trunc_x, trunc_t);
    let denom = w.add(&BivariateSeries::one(trunc_x, trunc_t));
    one_minus_t(trunc_x, trunc_t).mul(&denom.reciprocal())
}

/// The antiderivative form `[x(1-t)^2 - t - W(-t e^{(1-t)^2 x - t})] / (1-t)`.
///
/// Differentiating in `x` yields [`gf_rhs`]; equivalently its EGF coefficient
/// at `(n, m)` is `E(n-1, m)` for `n >= 1`, and its `x = 0` slice vanishes
/// because `W(-t e^{-t}) = -t` exactly.
pub fn gf_antiderivative(trunc_x: usize, trunc_t: usize) -> BivariateSeries {
    let h = gf_exponent(trunc_x, trunc_t);
    let w = w_of_gf_argument(trunc_x, trunc_t);
    h.sub(&w).mul(&one_minus_t(trunc_x, trunc_t).reciprocal())
}

/// `u(x, t)`: coefficient of `x^n t^m` is `S(n+m-1, m) / n!` for `n >= 1`
/// and 0 for `n = 0`. This is the compositional inverse of [`y_series`] in
/// the `x` slot.
pub fn u_series(tables: &mut Tables, trunc_x: usize, trunc_t: usize) -> BivariateSeries {
    let mut s = BivariateSeries::zero(trunc_x, trunc_t);
    for n in 1..=trunc_x {
        let n_fact = factorial(n as i64);
        for m in 0..=trunc_t {
            let v = tables.stirling2((n + m) as i64 - 1, m as i64);
            if !v.is_zero() {
                s.set(n, m, Rat::new(v, n_fact.clone()));
            }
        }
    }
    s
}

/// `y(x, t) = x - t (e^x - 1)`, truncated to the box.
pub fn y_series(trunc_x: usize, trunc_t: usize) -> BivariateSeries {
    let mut s = BivariateSeries::zero(trunc_x, trunc_t);
    if trunc_x >= 1 {
        s.set(1, 0, Rat::one());
    }
    if trunc_t >= 1 {
        for n in 1..=trunc_x {
            s.set(n, 1, Rat::new(-Int::one(), factorial(n as i64)));
        }
    }
    s
}

/// The base series `1 / (1 - t (e^x - 1)/x)` that the Lagrange-inversion
/// step raises to powers; [`lagrange_d_coeff`] gives its k-th power
/// coefficients in closed form.
pub fn lagrange_base(trunc_x: usize, trunc_t: usize) -> BivariateSeries {
    // t (e^x - 1)/x has coefficient 1/(n+1)! at (n, 1)
    let mut kernel = BivariateSeries::zero(trunc_x, trunc_t);
    if trunc_t >= 1 {
        for n in 0..=trunc_x {
            kernel.set(n, 1, Rat::new(Int::one(), factorial(n as i64 + 1)));
        }
    }
    BivariateSeries::one(trunc_x, trunc_t)
        .sub(&kernel)
        .reciprocal()
}

/// Coefficient of `x^n t^m` in `(t (e^x - 1)/x)^k`:
/// `S(n+k, k) k!/(n+k)!` when `m = k`, else 0.
pub fn lagrange_t_coeff(tables: &mut Tables, n: i64, m: i64, k: i64) -> Rat {
    assert!(n >= 0 && m >= 0 && k >= 0, "lagrange_t_coeff: negative index");
    if m != k {
        return Rat::zero();
    }
    Rat::new(tables.stirling2(n + k, k) * factorial(k), factorial(n + k))
}

/// Coefficient of `x^n t^m` in `(1 / (1 - t (e^x - 1)/x))^k`:
/// `S(n+m, m) m!/(n+m)! C(m+k-1, m)`. Requires `k >= 1`.
pub fn lagrange_d_coeff(tables: &mut Tables, n: i64, m: i64, k: i64) -> Rat {
    assert!(n >= 0 && m >= 0, "lagrange_d_coeff: negative index");
    assert!(k >= 1, "lagrange_d_coeff: power must be >= 1");
    let num = tables.stirling2(n + m, m) * factorial(m) * binomial(m + k - 1, m);
    Rat::new(num, factorial(n + m))
}

/// Coefficients of `1 / (1 + W(-x))`: entry `n` equals `n^n / n!`
/// (with `0^0 = 1`).
pub fn tree_reciprocal_series(max_order: usize) -> Vec<Rat> {
    let neg_x = if max_order >= 1 {
        BivariateSeries::monomial(max_order, 0, 1, 0, -Rat::one())
    } else {
        BivariateSeries::zero(0, 0)
    };
    let w = BivariateSeries::compose_univariate(&lambert_w_coeffs(max_order), &neg_x);
    let r = w.add(&BivariateSeries::one(max_order, 0)).reciprocal();
    (0..=max_order).map(|n| r.coeff(n, 0).clone()).collect()
}

/// The compositional inverse of [`y_series`] written in closed form:
/// `x(y, t) = y - t - W(-t e^{y - t})`, with the first variable of the box
/// playing the role of `y`. Substituting it into `y_series` gives back the
/// identity series.
pub fn y_inverse_series(trunc_x: usize, trunc_t: usize) -> BivariateSeries {
    let mut y_minus_t = BivariateSeries::zero(trunc_x, trunc_t);
    if trunc_x >= 1 {
        y_minus_t.set(1, 0, Rat::one());
    }
    if trunc_t >= 1 {
        y_minus_t.set(0, 1, -Rat::one());
    }
    let argument = if trunc_t == 0 {
        BivariateSeries::zero(trunc_x, 0)
    } else {
        BivariateSeries::monomial(trunc_x, trunc_t, 0, 1, -Rat::one()).mul(&y_minus_t.exp())
    };
    let w = BivariateSeries::compose_univariate(&lambert_w_coeffs(trunc_x + trunc_t), &argument);
    y_minus_t.sub(&w)
}
