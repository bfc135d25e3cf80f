//! Box-truncated bivariate formal power series with exact rational
//! coefficients.
//!
//! A [`BivariateSeries`] keeps every coefficient of `x^n t^m` with
//! `n <= trunc_x` and `m <= trunc_t` and nothing else. The retained monomial
//! set is closed under divisors, so the truncated ring is an honest quotient:
//! addition, multiplication, `exp`, reciprocals and compositions computed on
//! truncated operands agree exactly with the same operations on the
//! underlying infinite series, inside the box.
//!
//! Compositions are finite sums by a degree count: an inner series with no
//! constant term has total valuation at least 1, so its j-th power only
//! reaches monomials of total degree at least j, and powers beyond
//! `trunc_x + trunc_t` contribute nothing inside the box.
//!
//! Series are immutable values; every operation returns a new series.
//! Binary operations require both operands to share the same truncation box
//! and panic otherwise.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::exact::factorial;
use crate::{Int, Rat};

/// A double power series in `x` and `t`, truncated to the box
/// `x`-degree `<= trunc_x`, `t`-degree `<= trunc_t`.
///
/// Two series are equal iff their boxes match and all coefficients agree.
#[derive(Clone, PartialEq, Eq)]
pub struct BivariateSeries {
    trunc_x: usize,
    trunc_t: usize,
    // dense row-major storage, index n * (trunc_t + 1) + m
    coeffs: Vec<Rat>,
}

impl BivariateSeries {
    /// The zero series on the given box.
    pub fn zero(trunc_x: usize, trunc_t: usize) -> Self {
        BivariateSeries {
            trunc_x,
            trunc_t,
            coeffs: vec![Rat::zero(); (trunc_x + 1) * (trunc_t + 1)],
        }
    }

    /// The constant series `c`.
    pub fn constant(trunc_x: usize, trunc_t: usize, c: Rat) -> Self {
        let mut s = Self::zero(trunc_x, trunc_t);
        s.coeffs[0] = c;
        s
    }

    /// The constant series 1.
    pub fn one(trunc_x: usize, trunc_t: usize) -> Self {
        Self::constant(trunc_x, trunc_t, Rat::one())
    }

    /// The single monomial `c * x^n t^m`. Panics if `(n, m)` lies outside
    /// the box.
    pub fn monomial(trunc_x: usize, trunc_t: usize, n: usize, m: usize, c: Rat) -> Self {
        let mut s = Self::zero(trunc_x, trunc_t);
        s.set(n, m, c);
        s
    }

    /// Build a series coefficient by coefficient.
    pub fn from_fn(
        trunc_x: usize,
        trunc_t: usize,
        mut f: impl FnMut(usize, usize) -> Rat,
    ) -> Self {
        let mut s = Self::zero(trunc_x, trunc_t);
        for n in 0..=trunc_x {
            for m in 0..=trunc_t {
                s.coeffs[n * (trunc_t + 1) + m] = f(n, m);
            }
        }
        s
    }

    pub fn trunc_x(&self) -> usize {
        self.trunc_x
    }

    pub fn trunc_t(&self) -> usize {
        self.trunc_t
    }

    #[inline]
    fn idx(&self, n: usize, m: usize) -> usize {
        n * (self.trunc_t + 1) + m
    }

    /// Coefficient of `x^n t^m`. Panics outside the box.
    pub fn coeff(&self, n: usize, m: usize) -> &Rat {
        assert!(
            n <= self.trunc_x && m <= self.trunc_t,
            "coeff({n},{m}) outside truncation box ({}, {})",
            self.trunc_x,
            self.trunc_t
        );
        &self.coeffs[self.idx(n, m)]
    }

    /// EGF-in-`x` coefficient: `n!` times the plain coefficient of
    /// `x^n t^m`. Panics outside the box.
    pub fn egf_coeff(&self, n: usize, m: usize) -> Rat {
        self.coeff(n, m) * Rat::from_integer(factorial(n as i64))
    }

    /// Overwrite the coefficient of `x^n t^m`. Panics outside the box.
    pub fn set(&mut self, n: usize, m: usize, c: Rat) {
        assert!(
            n <= self.trunc_x && m <= self.trunc_t,
            "set({n},{m}) outside truncation box ({}, {})",
            self.trunc_x,
            self.trunc_t
        );
        let i = self.idx(n, m);
        self.coeffs[i] = c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    fn assert_same_box(&self, other: &Self, op: &str) {
        assert!(
            self.trunc_x == other.trunc_x && self.trunc_t == other.trunc_t,
            "{op}: mismatched truncation boxes ({}, {}) vs ({}, {})",
            self.trunc_x,
            self.trunc_t,
            other.trunc_x,
            other.trunc_t
        );
    }

    /// Coefficientwise sum. Panics on mismatched boxes.
    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_box(other, "add");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        BivariateSeries {
            trunc_x: self.trunc_x,
            trunc_t: self.trunc_t,
            coeffs,
        }
    }

    /// Coefficientwise difference. Panics on mismatched boxes.
    pub fn sub(&self, other: &Self) -> Self {
        self.assert_same_box(other, "sub");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        BivariateSeries {
            trunc_x: self.trunc_x,
            trunc_t: self.trunc_t,
            coeffs,
        }
    }

    pub fn neg(&self) -> Self {
        BivariateSeries {
            trunc_x: self.trunc_x,
            trunc_t: self.trunc_t,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    /// Multiply every coefficient by `c`.
    pub fn scale(&self, c: &Rat) -> Self {
        BivariateSeries {
            trunc_x: self.trunc_x,
            trunc_t: self.trunc_t,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Truncated Cauchy product. Panics on mismatched boxes.
    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_box(other, "mul");
        let mut out = Self::zero(self.trunc_x, self.trunc_t);
        for n1 in 0..=self.trunc_x {
            for m1 in 0..=self.trunc_t {
                let a = &self.coeffs[self.idx(n1, m1)];
                if a.is_zero() {
                    continue;
                }
                for n2 in 0..=(self.trunc_x - n1) {
                    for m2 in 0..=(self.trunc_t - m1) {
                        let b = &other.coeffs[other.idx(n2, m2)];
                        if b.is_zero() {
                            continue;
                        }
                        let i = self.idx(n1 + n2, m1 + m2);
                        out.coeffs[i] += a * b;
                    }
                }
            }
        }
        out
    }

    /// `self^k` by repeated multiplication within the box.
    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one(self.trunc_x, self.trunc_t);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exponential `sum_j self^j / j!`, summed to `j = trunc_x + trunc_t`,
    /// past which no power reaches back into the box. Panics if the constant
    /// term is nonzero.
    pub fn exp(&self) -> Self {
        assert!(
            self.coeffs[0].is_zero(),
            "exp: argument has nonzero constant term"
        );
        let mut out = Self::one(self.trunc_x, self.trunc_t);
        let mut term = Self::one(self.trunc_x, self.trunc_t);
        for j in 1..=(self.trunc_x + self.trunc_t) {
            term = term.mul(self).scale(&Rat::new(Int::one(), Int::from(j)));
            if term.is_zero() {
                break;
            }
            out = out.add(&term);
        }
        out
    }

    /// Multiplicative inverse within the box: writes `self = c (1 - u)` with
    /// `u` constant-free and sums the geometric series in `u`. Panics if the
    /// constant term is zero.
    pub fn reciprocal(&self) -> Self {
        let c = &self.coeffs[0];
        assert!(!c.is_zero(), "reciprocal: zero constant term");
        let c_inv = c.recip();
        // u = 1 - self / c has zero constant term
        let u = Self::one(self.trunc_x, self.trunc_t).sub(&self.scale(&c_inv));
        let mut out = Self::one(self.trunc_x, self.trunc_t);
        let mut term = Self::one(self.trunc_x, self.trunc_t);
        for _ in 1..=(self.trunc_x + self.trunc_t) {
            term = term.mul(&u);
            if term.is_zero() {
                break;
            }
            out = out.add(&term);
        }
        out.scale(&c_inv)
    }

    /// Formal derivative in `x`. The result keeps the same `t` bound and an
    /// `x` bound one lower (a degree-`trunc_x` box only determines the
    /// derivative to degree `trunc_x - 1`).
    pub fn derivative_x(&self) -> Self {
        let nx = self.trunc_x.saturating_sub(1);
        let mut out = Self::zero(nx, self.trunc_t);
        if self.trunc_x == 0 {
            return out;
        }
        for n in 0..=nx {
            for m in 0..=self.trunc_t {
                let c = &self.coeffs[self.idx(n + 1, m)];
                if !c.is_zero() {
                    let i = out.idx(n, m);
                    out.coeffs[i] = c * Rat::from_integer(Int::from(n + 1));
                }
            }
        }
        out
    }

    /// Substitute `s` for the variable `x`, keeping `t`:
    /// `sum_{n,m} coeff(n,m) * s^n * t^m`, truncated to the common box.
    /// Panics if the boxes differ or if `s` has a nonzero constant term.
    pub fn substitute_x(&self, s: &Self) -> Self {
        self.assert_same_box(s, "substitute_x");
        assert!(
            s.coeffs[0].is_zero(),
            "substitute_x: replacement series has nonzero constant term"
        );
        let mut out = Self::zero(self.trunc_x, self.trunc_t);
        let mut s_pow = Self::one(self.trunc_x, self.trunc_t);
        for n in 0..=self.trunc_x {
            if n > 0 {
                s_pow = s_pow.mul(s);
                if s_pow.is_zero() {
                    break;
                }
            }
            for m in 0..=self.trunc_t {
                let a = &self.coeffs[self.idx(n, m)];
                if a.is_zero() {
                    continue;
                }
                // add a * s^n * t^m
                for p in 0..=self.trunc_x {
                    for q in 0..=(self.trunc_t - m) {
                        let b = &s_pow.coeffs[s_pow.idx(p, q)];
                        if !b.is_zero() {
                            let i = out.idx(p, q + m);
                            out.coeffs[i] += a * b;
                        }
                    }
                }
            }
        }
        out
    }

    /// Compose a univariate outer series, given by its coefficient list
    /// (`outer[j]` multiplies the j-th power), with `inner`:
    /// `sum_j outer[j] * inner^j`. Powers beyond `trunc_x + trunc_t` cannot
    /// touch the box and are not requested from `outer`. Panics if `inner`
    /// has a nonzero constant term.
    pub fn compose_univariate(outer: &[Rat], inner: &Self) -> Self {
        assert!(
            inner.coeffs[0].is_zero(),
            "compose_univariate: inner series has nonzero constant term"
        );
        let mut out = Self::zero(inner.trunc_x, inner.trunc_t);
        if let Some(c0) = outer.first() {
            out.coeffs[0] = c0.clone();
        }
        let mut inner_pow = Self::one(inner.trunc_x, inner.trunc_t);
        let j_max = (inner.trunc_x + inner.trunc_t).min(outer.len().saturating_sub(1));
        for c in outer.iter().take(j_max + 1).skip(1) {
            inner_pow = inner_pow.mul(inner);
            if inner_pow.is_zero() {
                break;
            }
            if c.is_zero() {
                continue;
            }
            out = out.add(&inner_pow.scale(c));
        }
        out
    }

    /// Shrink to a smaller box, dropping the discarded coefficients.
    /// Panics if either bound would grow.
    pub fn truncate(&self, trunc_x: usize, trunc_t: usize) -> Self {
        assert!(
            trunc_x <= self.trunc_x && trunc_t <= self.trunc_t,
            "truncate: target box ({trunc_x}, {trunc_t}) exceeds ({}, {})",
            self.trunc_x,
            self.trunc_t
        );
        Self::from_fn(trunc_x, trunc_t, |n, m| self.coeff(n, m).clone())
    }

    fn fmt_terms(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for n in 0..=self.trunc_x {
            for m in 0..=self.trunc_t {
                let c = &self.coeffs[self.idx(n, m)];
                if c.is_zero() {
                    continue;
                }
                if first {
                    first = false;
                } else {
                    write!(f, " + ")?;
                }
                write!(f, "{c}")?;
                if n > 0 {
                    write!(f, "*x^{n}")?;
                }
                if m > 0 {
                    write!(f, "*t^{m}")?;
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " [box {}x{}]", self.trunc_x, self.trunc_t)
    }
}

impl fmt::Debug for BivariateSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_terms(f)
    }
}

impl fmt::Display for BivariateSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_terms(f)
    }
}

impl Add for &BivariateSeries {
    type Output = BivariateSeries;
    fn add(self, rhs: Self) -> BivariateSeries {
        BivariateSeries::add(self, rhs)
    }
}

impl Sub for &BivariateSeries {
    type Output = BivariateSeries;
    fn sub(self, rhs: Self) -> BivariateSeries {
        BivariateSeries::sub(self, rhs)
    }
}

impl Mul for &BivariateSeries {
    type Output = BivariateSeries;
    fn mul(self, rhs: Self) -> BivariateSeries {
        BivariateSeries::mul(self, rhs)
    }
}

impl Neg for &BivariateSeries {
    type Output = BivariateSeries;
    fn neg(self) -> BivariateSeries {
        BivariateSeries::neg(self)
    }
}
