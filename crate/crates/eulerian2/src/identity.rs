//! Executable verification sweeps for every identity the crate computes,
//! with structured pass/fail reports.
//!
//! Each check evaluates both sides of one identity over a finite parameter
//! range in exact arithmetic and reports either a pass or the first
//! counterexample (parameters plus both sides). The recurrence route
//! [`Tables::eulerian2_rec`] is the ground truth everywhere: the explicit
//! formulas and the generating function are the things under test, so using
//! them as oracles would be circular.
//!
//! [`IdentityId::PrintedQuadSum`] is a deliberate outlier: it evaluates a
//! quadruple alternating sum exactly as transcribed, as a fidelity probe.
//! Its verdict is an output of the tool, not an assumption, and it is marked
//! informational so a failure does not fail a run.

use num_traits::{One, Zero};

use crate::exact::{binomial, factorial, Tables};
use crate::gf;
use crate::series::BivariateSeries;
use crate::{Int, Rat};

/// Identifies one verification sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IdentityId {
    /// `S(n+m, m) = sum_i E(n,i) C(m+2n-i, m-i)`.
    Stirling,
    /// `r(0,n) (n-1)! = n^(n-1) - (n-1)^(n-1)` for `n > 0`.
    Tree,
    /// `sum_n (-1)^n r(n,m) = 0` for `m >= 1` (and `= 1` at `m = 0`),
    /// plus the support claim `r(n,m) = 0` for `n > m`.
    AlternatingR,
    /// `r(n,m)` equals the coefficients of the substituted generating
    /// function `Eu(t(x+1)/(1-t)^2, t)`.
    RSeries,
    /// The final printed quadruple sum, evaluated verbatim (informational).
    PrintedQuadSum,
    /// EGF coefficients of the closed-form generating function equal the
    /// recurrence triangle.
    GFCoeffs,
    /// `u` and `y` are two-sided compositional inverses.
    CompInverse,
    /// Closed-form k-th power coefficients equal the series engine's.
    LagrangeD,
    /// `u` coefficients match the Lagrange-inversion formula `D(n-1,m,n)/n`.
    ULagrange,
    /// `w(x) e^(w(x)) = x` for the Lambert stream, and the tree-function
    /// anchor `[x^n] 1/(1+W(-x)) = n^n/n!`.
    Lambert,
    /// The closed-form inverse `y - t - W(-t e^(y-t))` inverts `y`.
    ZSubstitution,
    /// The antiderivative's `x`-derivative reproduces the generating
    /// function.
    AntiderivativeChain,
    /// First explicit formula equals the recurrence.
    ExplicitA,
    /// Second explicit formula equals the recurrence (`n >= 1`).
    ExplicitB,
    /// Triangle row sums equal odd double factorials `(2n-1)!!`.
    RowSums,
    /// Pascal's rule for the binomial table.
    Pascal,
    /// The defining recurrence of the Stirling table, re-checked cell by
    /// cell.
    StirlingRec,
    /// `m C(2n-1,m-k) - (2n-m) C(2n-1,m-k-1) = k C(2n,m-k)`.
    BracketLemma,
}

impl IdentityId {
    /// Every identity, in the order `run_all` executes them.
    pub const ALL: [IdentityId; 18] = [
        IdentityId::ExplicitA,
        IdentityId::ExplicitB,
        IdentityId::RowSums,
        IdentityId::Pascal,
        IdentityId::StirlingRec,
        IdentityId::BracketLemma,
        IdentityId::Lambert,
        IdentityId::GFCoeffs,
        IdentityId::AntiderivativeChain,
        IdentityId::CompInverse,
        IdentityId::ZSubstitution,
        IdentityId::LagrangeD,
        IdentityId::ULagrange,
        IdentityId::Stirling,
        IdentityId::Tree,
        IdentityId::AlternatingR,
        IdentityId::RSeries,
        IdentityId::PrintedQuadSum,
    ];

    /// Stable kebab-case name used on the command line and in reports.
    pub fn name(self) -> &'static str {
        match self {
            IdentityId::Stirling => "stirling",
            IdentityId::Tree => "tree",
            IdentityId::AlternatingR => "alternating",
            IdentityId::RSeries => "r-series",
            IdentityId::PrintedQuadSum => "printed-quad-sum",
            IdentityId::GFCoeffs => "gf-coeffs",
            IdentityId::CompInverse => "comp-inverse",
            IdentityId::LagrangeD => "lagrange-d",
            IdentityId::ULagrange => "u-lagrange",
            IdentityId::Lambert => "lambert",
            IdentityId::ZSubstitution => "z-subst",
            IdentityId::AntiderivativeChain => "gf-chain",
            IdentityId::ExplicitA => "explicit-a",
            IdentityId::ExplicitB => "explicit-b",
            IdentityId::RowSums => "row-sums",
            IdentityId::Pascal => "pascal",
            IdentityId::StirlingRec => "stirling-rec",
            IdentityId::BracketLemma => "bracket-lemma",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        IdentityId::ALL.iter().copied().find(|id| id.name() == name)
    }

    /// Short human-readable statement of what the sweep checks.
    pub fn description(self) -> &'static str {
        match self {
            IdentityId::Stirling => "S(n+m,m) = sum_i E(n,i) C(m+2n-i,m-i)",
            IdentityId::Tree => "r(0,n)(n-1)! = n^(n-1) - (n-1)^(n-1)",
            IdentityId::AlternatingR => {
                "sum_n (-1)^n r(n,m) = 0 for m >= 1, and r(n,m) = 0 for n > m"
            }
            IdentityId::RSeries => "r(n,m) matches the substituted generating function",
            IdentityId::PrintedQuadSum => {
                "printed quadruple alternating sum evaluates to 0 (informational)"
            }
            IdentityId::GFCoeffs => "EGF coefficients of the closed form equal the triangle",
            IdentityId::CompInverse => "u and y are two-sided compositional inverses",
            IdentityId::LagrangeD => "closed-form D(n,m,k) equals series k-th powers",
            IdentityId::ULagrange => "u coefficients equal D(n-1,m,n)/n",
            IdentityId::Lambert => "w e^w = x and [x^n] 1/(1+W(-x)) = n^n/n!",
            IdentityId::ZSubstitution => "y - t - W(-t e^(y-t)) inverts y(x,t)",
            IdentityId::AntiderivativeChain => "d/dx of the antiderivative equals the closed form",
            IdentityId::ExplicitA => "first explicit formula equals the recurrence",
            IdentityId::ExplicitB => "second explicit formula equals the recurrence",
            IdentityId::RowSums => "row sums equal (2n-1)!!",
            IdentityId::Pascal => "C(n,m) = C(n-1,m) + C(n-1,m-1)",
            IdentityId::StirlingRec => "S(n,m) = m S(n-1,m) + S(n-1,m-1)",
            IdentityId::BracketLemma => {
                "m C(2n-1,m-k) - (2n-m) C(2n-1,m-k-1) = k C(2n,m-k)"
            }
        }
    }

    /// Informational checks report their verdict without failing a run.
    pub fn is_informational(self) -> bool {
        matches!(self, IdentityId::PrintedQuadSum)
    }
}

/// First failing parameter assignment of a sweep, with both sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub params: Vec<(&'static str, i64)>,
    pub lhs: Rat,
    pub rhs: Rat,
}

/// Outcome of one verification sweep. `passed()` is true exactly when no
/// counterexample was found; the constructors are the only way to build a
/// report, so the two can never disagree.
#[derive(Clone, Debug)]
pub struct IdentityReport {
    identity: IdentityId,
    range: Vec<(&'static str, i64)>,
    counterexample: Option<Counterexample>,
}

impl IdentityReport {
    fn pass(identity: IdentityId, range: Vec<(&'static str, i64)>) -> Self {
        IdentityReport {
            identity,
            range,
            counterexample: None,
        }
    }

    fn fail(
        identity: IdentityId,
        range: Vec<(&'static str, i64)>,
        params: Vec<(&'static str, i64)>,
        lhs: Rat,
        rhs: Rat,
    ) -> Self {
        IdentityReport {
            identity,
            range,
            counterexample: Some(Counterexample { params, lhs, rhs }),
        }
    }

    pub fn identity(&self) -> IdentityId {
        self.identity
    }

    /// The parameter bounds that were swept.
    pub fn range(&self) -> &[(&'static str, i64)] {
        &self.range
    }

    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }

    pub fn counterexample(&self) -> Option<&Counterexample> {
        self.counterexample.as_ref()
    }
}

/// Integer power with the `0^0 = 1` convention.
fn int_pow(base: i64, exp: i64) -> Int {
    assert!(exp >= 0, "int_pow: negative exponent");
    Int::from(base).pow(exp as u32)
}

/// `r(n, m)`: coefficient of `x^n t^m` in the generating function composed
/// with `t(x+1)/(1-t)^2`, as the closed double sum
/// `sum_i sum_k E(k,i)/k! C(k,n) C(m-i+k-1, m-i-k)`.
///
/// The `k = 0` term is the composition's constant (zeroth-power) term and
/// contributes exactly 1 at `(n, m) = (0, 0)`; the kernel form of that term
/// would need the negative-upper-index binomial extension, which this crate
/// deliberately does not use.
pub fn r_coeff(tables: &mut Tables, n: i64, m: i64) -> Rat {
    assert!(n >= 0 && m >= 0, "r_coeff: negative index");
    let mut acc = if n == 0 && m == 0 {
        Rat::one()
    } else {
        Rat::zero()
    };
    for i in 0..=m {
        for k in 1..=(n + m - i) {
            let e = tables.eulerian2_rec(k, i);
            if e.is_zero() {
                continue;
            }
            let choose_n = binomial(k, n);
            if choose_n.is_zero() {
                continue;
            }
            let choose_t = binomial(m - i + k - 1, m - i - k);
            if choose_t.is_zero() {
                continue;
            }
            acc += Rat::new(e * choose_n * choose_t, factorial(k));
        }
    }
    acc
}

/// Verifies `S(n+m, m) = sum_{i=0}^{m} E(n,i) C(m+2n-i, m-i)` for all
/// `n <= n_max`, `m <= m_max`.
pub fn check_stirling_identity(tables: &mut Tables, n_max: i64, m_max: i64) -> IdentityReport {
    let range = vec![("n_max", n_max), ("m_max", m_max)];
    for n in 0..=n_max {
        for m in 0..=m_max {
            let lhs = tables.stirling2(n + m, m);
            let mut rhs = Int::zero();
            for i in 0..=m {
                rhs += tables.eulerian2_rec(n, i) * binomial(m + 2 * n - i, m - i);
            }
            if lhs != rhs {
                return IdentityReport::fail(
                    IdentityId::Stirling,
                    range,
                    vec![("n", n), ("m", m)],
                    Rat::from_integer(lhs),
                    Rat::from_integer(rhs),
                );
            }
        }
    }
    IdentityReport::pass(IdentityId::Stirling, range)
}

/// Verifies `r(0,n) (n-1)! = n^(n-1) - (n-1)^(n-1)` for `1 <= n <= n_max`,
/// with `0^0 = 1`.
pub fn check_tree_identity(tables: &mut Tables, n_max: i64) -> IdentityReport {
    let range = vec![("n_max", n_max)];
    for n in 1..=n_max {
        let lhs = r_coeff(tables, 0, n) * Rat::from_integer(factorial(n - 1));
        let rhs = Rat::from_integer(int_pow(n, n - 1) - int_pow(n - 1, n - 1));
        if lhs != rhs {
            return IdentityReport::fail(IdentityId::Tree, range, vec![("n", n)], lhs, rhs);
        }
    }
    IdentityReport::pass(IdentityId::Tree, range)
}

/// Verifies `sum_{n=0}^{m} (-1)^n r(n,m) = 0` for `1 <= m <= m_max` and
/// `= 1` at `m = 0`, plus the triangle support claim `r(n,m) = 0` whenever
/// `n > m`, for `n, m <= m_max`.
pub fn check_alternating_identity(tables: &mut Tables, m_max: i64) -> IdentityReport {
    let range = vec![("m_max", m_max)];
    for m in 0..=m_max {
        let mut sum = Rat::zero();
        for n in 0..=m {
            let term = r_coeff(tables, n, m);
            if n % 2 == 0 {
                sum += term;
            } else {
                sum -= term;
            }
        }
        let expected = if m == 0 { Rat::one() } else { Rat::zero() };
        if sum != expected {
            return IdentityReport::fail(
                IdentityId::AlternatingR,
                range,
                vec![("m", m)],
                sum,
                expected,
            );
        }
    }
    for m in 0..=m_max {
        for n in (m + 1)..=m_max {
            let v = r_coeff(tables, n, m);
            if !v.is_zero() {
                return IdentityReport::fail(
                    IdentityId::AlternatingR,
                    range,
                    vec![("n", n), ("m", m)],
                    v,
                    Rat::zero(),
                );
            }
        }
    }
    IdentityReport::pass(IdentityId::AlternatingR, range)
}

/// Substitutes `t(x+1)/(1-t)^2` into the generating function and verifies
/// the result's coefficients equal [`r_coeff`] across the whole box,
/// re-checking the support claim on the way.
pub fn check_r_against_series(tables: &mut Tables, box_x: usize, box_t: usize) -> IdentityReport {
    let range = vec![("box_n", box_x as i64), ("box_t", box_t as i64)];
    let one = BivariateSeries::one(box_x, box_t);
    let x = if box_x >= 1 {
        BivariateSeries::monomial(box_x, box_t, 1, 0, Rat::one())
    } else {
        BivariateSeries::zero(box_x, box_t)
    };
    let t = if box_t >= 1 {
        BivariateSeries::monomial(box_x, box_t, 0, 1, Rat::one())
    } else {
        BivariateSeries::zero(box_x, box_t)
    };
    let one_minus_t = one.sub(&t);
    let inner = t
        .mul(&x.add(&one))
        .mul(&one_minus_t.mul(&one_minus_t).reciprocal());
    let composed = gf::gf_rhs(box_x, box_t).substitute_x(&inner);
    for n in 0..=box_x {
        for m in 0..=box_t {
            let series_value = composed.coeff(n, m);
            let closed_value = r_coeff(tables, n as i64, m as i64);
            if series_value != &closed_value {
                return IdentityReport::fail(
                    IdentityId::RSeries,
                    range,
                    vec![("n", n as i64), ("m", m as i64)],
                    closed_value,
                    series_value.clone(),
                );
            }
            if n > m && !series_value.is_zero() {
                return IdentityReport::fail(
                    IdentityId::RSeries,
                    range,
                    vec![("n", n as i64), ("m", m as i64)],
                    series_value.clone(),
                    Rat::zero(),
                );
            }
        }
    }
    IdentityReport::pass(IdentityId::RSeries, range)
}

/// Evaluates the printed quadruple sum
/// `sum_{m=0}^{n} (-1)^m sum_{i=0}^{n} sum_{k=0}^{i}
///  C(m+k,m) E(m+k, n-i) C(m+k+i-1, 2m+2k-1)`
/// verbatim for `0 <= n <= n_max` and reports whether it vanishes. This is
/// a transcription-fidelity probe, reported as informational.
pub fn check_printed_quad_sum(tables: &mut Tables, n_max: i64) -> IdentityReport {
    let range = vec![("n_max", n_max)];
    for n in 0..=n_max {
        let mut total = Int::zero();
        for m in 0..=n {
            let mut inner = Int::zero();
            for i in 0..=n {
                for k in 0..=i {
                    let e = tables.eulerian2_rec(m + k, n - i);
                    if e.is_zero() {
                        continue;
                    }
                    inner += binomial(m + k, m) * e * binomial(m + k + i - 1, 2 * m + 2 * k - 1);
                }
            }
            if m % 2 == 0 {
                total += inner;
            } else {
                total -= inner;
            }
        }
        if !total.is_zero() {
            return IdentityReport::fail(
                IdentityId::PrintedQuadSum,
                range,
                vec![("n", n)],
                Rat::from_integer(total),
                Rat::zero(),
            );
        }
    }
    IdentityReport::pass(IdentityId::PrintedQuadSum, range)
}

/// Sweeps the closed-form generating function against the recurrence
/// triangle over the whole box.
pub fn check_gf_coeffs(tables: &mut Tables, box_x: usize, box_t: usize) -> IdentityReport {
    let range = vec![("box_n", box_x as i64), ("box_t", box_t as i64)];
    let g = gf::gf_rhs(box_x, box_t);
    for n in 0..=box_x {
        for m in 0..=box_t {
            let lhs = g.egf_coeff(n, m);
            let rhs = Rat::from_integer(tables.eulerian2_rec(n as i64, m as i64));
            if lhs != rhs {
                return IdentityReport::fail(
                    IdentityId::GFCoeffs,
                    range,
                    vec![("n", n as i64), ("m", m as i64)],
                    lhs,
                    rhs,
                );
            }
        }
    }
    IdentityReport::pass(IdentityId::GFCoeffs, range)
}

fn first_series_mismatch(
    a: &BivariateSeries,
    b: &BivariateSeries,
) -> Option<(usize, usize, Rat, Rat)> {
    for n in 0..=a.trunc_x() {
        for m in 0..=a.trunc_t() {
            if a.coeff(n, m) != b.coeff(n, m) {
                return Some((n, m, a.coeff(n, m).clone(), b.coeff(n, m).clone()));
            }
        }
    }
    None
}

/// Verifies both compositions `u(y(x,t), t) = x` and `y(u(x,t), t) = x`.
pub fn check_comp_inverse(tables: &mut Tables, box_x: usize, box_t: usize) -> IdentityReport {
    let range = vec![("box_n", box_x as i64), ("box_t", box_t as i64)];
    let u = gf::u_series(tables, box_x, box_t);
    let y = gf::y_series(box_x, box_t);
    let identity_series = if box_x >= 1 {
        BivariateSeries::monomial(box_x, box_t, 1, 0, Rat::one())
    } else {
        BivariateSeries::zero(box_x, box_t)
    };
    for (route, composed) in [(1i64, u.substitute_x(&y)), (2i64, y.substitute_x(&u))] {
        if let Some((n, m, lhs, rhs)) = first_series_mismatch(&composed, &identity_series) {
            return IdentityReport::fail(
                IdentityId::CompInverse,
                range,
                vec![("route", route), ("n", n as i64), ("m", m as i64)],
                lhs,
                rhs,
            );
        }
    }
    IdentityReport::pass(IdentityId::CompInverse, range)
}

/// Verifies the closed-form k-th power coefficients against the series
/// engine for `k = 1..=k_max`.
pub fn check_lagrange_d(
    tables: &mut Tables,
    box_x: usize,
    box_t: usize,
    k_max: i64,
) -> IdentityReport {
    let range = vec![
        ("box_n", box_x as i64),
        ("box_t", box_t as i64),
        ("k_max", k_max),
    ];
    let base = gf::lagrange_base(box_x, box_t);
    let mut power = BivariateSeries::one(box_x, box_t);
    for k in 1..=k_max {
        power = power.mul(&base);
        for n in 0..=box_x {
            for m in 0..=box_t {
                let lhs = gf::lagrange_d_coeff(tables, n as i64, m as i64, k);
                let rhs = power.coeff(n, m);
                if &lhs != rhs {
                    return IdentityReport::fail(
                        IdentityId::LagrangeD,
                        range,
                        vec![("n", n as i64), ("m", m as i64), ("k", k)],
                        lhs,
                        rhs.clone(),
                    );
                }
            }
        }
    }
    IdentityReport::pass(IdentityId::LagrangeD, range)
}

/// Verifies `[x^n t^m] u = D(n-1, m, n) / n` for `n >= 1` over the box.
pub fn check_u_lagrange(tables: &mut Tables, box_x: usize, box_t: usize) -> IdentityReport {
    let range = vec![("box_n", box_x as i64), ("box_t", box_t as i64)];
    let u = gf::u_series(tables, box_x, box_t);
    for n in 1..=box_x {
        for m in 0..=box_t {
            let lhs = u.coeff(n, m).clone();
            let rhs = gf::lagrange_d_coeff(tables, n as i64 - 1, m as i64, n as i64)
                / Rat::from_integer(Int::from(n));
            if lhs != rhs {
                return IdentityReport::fail(
                    IdentityId::ULagrange,
                    range,
                    vec![("n", n as i64), ("m", m as i64)],
                    lhs,
                    rhs,
                );
            }
        }
    }
    IdentityReport::pass(IdentityId::ULagrange, range)
}

/// Verifies the Lambert anchors: `w(x) e^(w(x)) = x` coefficientwise to
/// `order`, and `[x^n] 1/(1+W(-x)) = n^n/n!` for `n <= tree_max`.
pub fn check_lambert_anchor(order: usize, tree_max: usize) -> IdentityReport {
    let range = vec![("order", order as i64), ("tree_n_max", tree_max as i64)];
    let coeffs = gf::lambert_w_coeffs(order);
    let mut w = BivariateSeries::zero(order, 0);
    for (j, c) in coeffs.iter().enumerate().skip(1) {
        w.set(j, 0, c.clone());
    }
    let product = w.mul(&w.exp());
    for j in 0..=order {
        let expected = if j == 1 { Rat::one() } else { Rat::zero() };
        if product.coeff(j, 0) != &expected {
            return IdentityReport::fail(
                IdentityId::Lambert,
                range,
                vec![("part", 1), ("j", j as i64)],
                product.coeff(j, 0).clone(),
                expected,
            );
        }
    }
    let tree = gf::tree_reciprocal_series(tree_max);
    for (n, value) in tree.iter().enumerate() {
        let expected = if n == 0 {
            Rat::one()
        } else {
            Rat::new(Int::from(n as i64).pow(n as u32), factorial(n as i64))
        };
        if value != &expected {
            return IdentityReport::fail(
                IdentityId::Lambert,
                range,
                vec![("part", 2), ("n", n as i64)],
                value.clone(),
                expected,
            );
        }
    }
    IdentityReport::pass(IdentityId::Lambert, range)
}

/// Verifies that substituting the closed-form inverse into `y` returns the
/// identity series.
pub fn check_z_substitution(box_x: usize, box_t: usize) -> IdentityReport {
    let range = vec![("box_n", box_x as i64), ("box_t", box_t as i64)];
    let composed = gf::y_series(box_x, box_t).substitute_x(&gf::y_inverse_series(box_x, box_t));
    let identity_series = if box_x >= 1 {
        BivariateSeries::monomial(box_x, box_t, 1, 0, Rat::one())
    } else {
        BivariateSeries::zero(box_x, box_t)
    };
    match first_series_mismatch(&composed, &identity_series) {
        Some((n, m, lhs, rhs)) => IdentityReport::fail(
            IdentityId::ZSubstitution,
            range,
            vec![("n", n as i64), ("m", m as i64)],
            lhs,
            rhs,
        ),
        None => IdentityReport::pass(IdentityId::ZSubstitution, range),
    }
}

/// Verifies `d/dx` of the antiderivative equals the closed form on the
/// one-smaller box. Requires `box_x >= 1`.
pub fn check_antiderivative_chain(box_x: usize, box_t: usize) -> IdentityReport {
    assert!(box_x >= 1, "check_antiderivative_chain: box_x must be >= 1");
    let range = vec![("box_n", box_x as i64), ("box_t", box_t as i64)];
    let derived = gf::gf_antiderivative(box_x, box_t).derivative_x();
    let direct = gf::gf_rhs(box_x - 1, box_t);
    match first_series_mismatch(&derived, &direct) {
        Some((n, m, lhs, rhs)) => IdentityReport::fail(
            IdentityId::AntiderivativeChain,
            range,
            vec![("n", n as i64), ("m", m as i64)],
            lhs,
            rhs,
        ),
        None => IdentityReport::pass(IdentityId::AntiderivativeChain, range),
    }
}

/// Sweeps the first explicit formula against the recurrence on the triangle
/// `0 <= m <= n <= n_max`.
pub fn check_explicit_a(tables: &mut Tables, n_max: i64) -> IdentityReport {
    let range = vec![("n_max", n_max)];
    for n in 0..=n_max {
        for m in 0..=n {
            let lhs = tables.eulerian2_explicit_a(n, m);
            let rhs = tables.eulerian2_rec(n, m);
            if lhs != rhs {
                return IdentityReport::fail(
                    IdentityId::ExplicitA,
                    range,
                    vec![("n", n), ("m", m)],
                    Rat::from_integer(lhs),
                    Rat::from_integer(rhs),
                );
            }
        }
    }
    IdentityReport::pass(IdentityId::ExplicitA, range)
}

/// Sweeps the second explicit formula against the recurrence on the triangle
/// `0 <= m <= n <= n_max`, `n >= 1`.
pub fn check_explicit_b(tables: &mut Tables, n_max: i64) -> IdentityReport {
    let range = vec![("n_max", n_max)];
    for n in 1..=n_max {
        for m in 0..=n {
            let lhs = tables.eulerian2_explicit_b(n, m);
            let rhs = tables.eulerian2_rec(n, m);
            if lhs != rhs {
                return IdentityReport::fail(
                    IdentityId::ExplicitB,
                    range,
                    vec![("n", n), ("m", m)],
                    Rat::from_integer(lhs),
                    Rat::from_integer(rhs),
                );
            }
        }
    }
    IdentityReport::pass(IdentityId::ExplicitB, range)
}

/// Verifies triangle row sums against the odd double factorial, computed by
/// direct product.
pub fn check_row_sums(tables: &mut Tables, n_max: i64) -> IdentityReport {
    let range = vec![("n_max", n_max)];
    for n in 1..=n_max {
        let sum: Int = tables.triangle_row(n).iter().sum();
        let mut product = Int::one();
        let mut factor = 1;
        while factor < 2 * n {
            product *= Int::from(factor);
            factor += 2;
        }
        if sum != product {
            return IdentityReport::fail(
                IdentityId::RowSums,
                range,
                vec![("n", n)],
                Rat::from_integer(sum),
                Rat::from_integer(product),
            );
        }
    }
    IdentityReport::pass(IdentityId::RowSums, range)
}

/// Verifies Pascal's rule for `1 <= m <= n <= n_max`.
pub fn check_pascal(n_max: i64) -> IdentityReport {
    let range = vec![("n_max", n_max)];
    for n in 1..=n_max {
        for m in 1..=n {
            let lhs = binomial(n, m);
            let rhs = binomial(n - 1, m) + binomial(n - 1, m - 1);
            if lhs != rhs {
                return IdentityReport::fail(
                    IdentityId::Pascal,
                    range,
                    vec![("n", n), ("m", m)],
                    Rat::from_integer(lhs),
                    Rat::from_integer(rhs),
                );
            }
        }
    }
    IdentityReport::pass(IdentityId::Pascal, range)
}

/// Re-checks the Stirling recurrence cell by cell on the filled table.
pub fn check_stirling_rec(tables: &mut Tables, n_max: i64) -> IdentityReport {
    let range = vec![("n_max", n_max)];
    for n in 1..=n_max {
        for m in 0..=n {
            let lhs = tables.stirling2(n, m);
            let rhs = Int::from(m) * tables.stirling2(n - 1, m) + tables.stirling2(n - 1, m - 1);
            if lhs != rhs {
                return IdentityReport::fail(
                    IdentityId::StirlingRec,
                    range,
                    vec![("n", n), ("m", m)],
                    Rat::from_integer(lhs),
                    Rat::from_integer(rhs),
                );
            }
        }
    }
    IdentityReport::pass(IdentityId::StirlingRec, range)
}

/// Verifies the binomial bracket lemma for `0 <= k <= m <= n <= n_max`.
pub fn check_bracket_lemma(n_max: i64) -> IdentityReport {
    let range = vec![("n_max", n_max)];
    for n in 0..=n_max {
        for m in 0..=n {
            for k in 0..=m {
                let lhs = Int::from(m) * binomial(2 * n - 1, m - k)
                    - Int::from(2 * n - m) * binomial(2 * n - 1, m - k - 1);
                let rhs = Int::from(k) * binomial(2 * n, m - k);
                if lhs != rhs {
                    return IdentityReport::fail(
                        IdentityId::BracketLemma,
                        range,
                        vec![("n", n), ("m", m), ("k", k)],
                        Rat::from_integer(lhs),
                        Rat::from_integer(rhs),
                    );
                }
            }
        }
    }
    IdentityReport::pass(IdentityId::BracketLemma, range)
}

/// Sweep bounds for [`run_all`] and [`run_check`]. The defaults keep a full
/// run comfortably under a minute while covering every range the reports
/// promise.
#[derive(Clone, Debug)]
pub struct RunAllBounds {
    pub stirling_n: i64,
    pub stirling_m: i64,
    pub tree_n: i64,
    pub alternating_m: i64,
    pub r_series_box: (usize, usize),
    pub printed_n: i64,
    pub gf_box: (usize, usize),
    pub comp_box: (usize, usize),
    pub lagrange_box: (usize, usize),
    pub lagrange_k: i64,
    pub u_lagrange_box: (usize, usize),
    pub lambert_order: usize,
    pub tree_anchor_n: usize,
    pub z_subst_box: (usize, usize),
    pub antiderivative_box: (usize, usize),
    pub explicit_n: i64,
    pub row_sums_n: i64,
    pub pascal_n: i64,
    pub stirling_rec_n: i64,
    pub bracket_n: i64,
}

impl Default for RunAllBounds {
    fn default() -> Self {
        RunAllBounds {
            stirling_n: 20,
            stirling_m: 20,
            tree_n: 25,
            alternating_m: 20,
            r_series_box: (10, 10),
            printed_n: 10,
            gf_box: (12, 12),
            comp_box: (10, 10),
            lagrange_box: (8, 8),
            lagrange_k: 4,
            u_lagrange_box: (8, 8),
            lambert_order: 15,
            tree_anchor_n: 20,
            z_subst_box: (8, 8),
            antiderivative_box: (12, 12),
            explicit_n: 30,
            row_sums_n: 15,
            pascal_n: 50,
            stirling_rec_n: 30,
            bracket_n: 20,
        }
    }
}

impl RunAllBounds {
    /// Override the natural `n`-like and `m`-like bounds of one identity,
    /// leaving everything else untouched. Box-shaped checks interpret the
    /// overrides as box dimensions.
    pub fn set_bounds_for(&mut self, id: IdentityId, max_n: Option<i64>, max_m: Option<i64>) {
        let as_box = |v: i64| v.max(0) as usize;
        match id {
            IdentityId::Stirling => {
                if let Some(n) = max_n {
                    self.stirling_n = n;
                }
                if let Some(m) = max_m {
                    self.stirling_m = m;
                }
            }
            IdentityId::Tree => {
                if let Some(n) = max_n {
                    self.tree_n = n;
                }
            }
            IdentityId::AlternatingR => {
                if let Some(m) = max_m {
                    self.alternating_m = m;
                } else if let Some(n) = max_n {
                    self.alternating_m = n;
                }
            }
            IdentityId::RSeries => {
                if let Some(n) = max_n {
                    self.r_series_box.0 = as_box(n);
                }
                if let Some(m) = max_m {
                    self.r_series_box.1 = as_box(m);
                }
            }
            IdentityId::PrintedQuadSum => {
                if let Some(n) = max_n {
                    self.printed_n = n;
                }
            }
            IdentityId::GFCoeffs => {
                if let Some(n) = max_n {
                    self.gf_box.0 = as_box(n);
                }
                if let Some(m) = max_m {
                    self.gf_box.1 = as_box(m);
                }
            }
            IdentityId::CompInverse => {
                if let Some(n) = max_n {
                    self.comp_box.0 = as_box(n);
                }
                if let Some(m) = max_m {
                    self.comp_box.1 = as_box(m);
                }
            }
            IdentityId::LagrangeD => {
                if let Some(n) = max_n {
                    self.lagrange_box.0 = as_box(n);
                }
                if let Some(m) = max_m {
                    self.lagrange_box.1 = as_box(m);
                }
            }
            IdentityId::ULagrange => {
                if let Some(n) = max_n {
                    self.u_lagrange_box.0 = as_box(n);
                }
                if let Some(m) = max_m {
                    self.u_lagrange_box.1 = as_box(m);
                }
            }
            IdentityId::Lambert => {
                if let Some(n) = max_n {
                    self.lambert_order = as_box(n);
                }
                if let Some(m) = max_m {
                    self.tree_anchor_n = as_box(m);
                }
            }
            IdentityId::ZSubstitution => {
                if let Some(n) = max_n {
                    self.z_subst_box.0 = as_box(n);
                }
                if let Some(m) = max_m {
                    self.z_subst_box.1 = as_box(m);
                }
            }
            IdentityId::AntiderivativeChain => {
                if let Some(n) = max_n {
                    self.antiderivative_box.0 = as_box(n).max(1);
                }
                if let Some(m) = max_m {
                    self.antiderivative_box.1 = as_box(m);
                }
            }
            IdentityId::ExplicitA | IdentityId::ExplicitB => {
                if let Some(n) = max_n {
                    self.explicit_n = n;
                }
            }
            IdentityId::RowSums => {
                if let Some(n) = max_n {
                    self.row_sums_n = n;
                }
            }
            IdentityId::Pascal => {
                if let Some(n) = max_n {
                    self.pascal_n = n;
                }
            }
            IdentityId::StirlingRec => {
                if let Some(n) = max_n {
                    self.stirling_rec_n = n;
                }
            }
            IdentityId::BracketLemma => {
                if let Some(n) = max_n {
                    self.bracket_n = n;
                }
            }
        }
    }
}

/// Runs the sweep for one identity at the configured bounds.
pub fn run_check(tables: &mut Tables, id: IdentityId, bounds: &RunAllBounds) -> IdentityReport {
    match id {
        IdentityId::Stirling => {
            check_stirling_identity(tables, bounds.stirling_n, bounds.stirling_m)
        }
        IdentityId::Tree => check_tree_identity(tables, bounds.tree_n),
        IdentityId::AlternatingR => check_alternating_identity(tables, bounds.alternating_m),
        IdentityId::RSeries => {
            check_r_against_series(tables, bounds.r_series_box.0, bounds.r_series_box.1)
        }
        IdentityId::PrintedQuadSum => check_printed_quad_sum(tables, bounds.printed_n),
        IdentityId::GFCoeffs => check_gf_coeffs(tables, bounds.gf_box.0, bounds.gf_box.1),
        IdentityId::CompInverse => check_comp_inverse(tables, bounds.comp_box.0, bounds.comp_box.1),
        IdentityId::LagrangeD => check_lagrange_d(
            tables,
            bounds.lagrange_box.0,
            bounds.lagrange_box.1,
            bounds.lagrange_k,
        ),
        IdentityId::ULagrange => {
            check_u_lagrange(tables, bounds.u_lagrange_box.0, bounds.u_lagrange_box.1)
        }
        IdentityId::Lambert => check_lambert_anchor(bounds.lambert_order, bounds.tree_anchor_n),
        IdentityId::ZSubstitution => {
            check_z_substitution(bounds.z_subst_box.0, bounds.z_subst_box.1)
        }
        IdentityId::AntiderivativeChain => {
            check_antiderivative_chain(bounds.antiderivative_box.0, bounds.antiderivative_box.1)
        }
        IdentityId::ExplicitA => check_explicit_a(tables, bounds.explicit_n),
        IdentityId::ExplicitB => check_explicit_b(tables, bounds.explicit_n),
        IdentityId::RowSums => check_row_sums(tables, bounds.row_sums_n),
        IdentityId::Pascal => check_pascal(bounds.pascal_n),
        IdentityId::StirlingRec => check_stirling_rec(tables, bounds.stirling_rec_n),
        IdentityId::BracketLemma => check_bracket_lemma(bounds.bracket_n),
    }
}

/// Runs every identity sweep and returns the reports in a fixed order.
pub fn run_all(tables: &mut Tables, bounds: &RunAllBounds) -> Vec<IdentityReport> {
    IdentityId::ALL
        .iter()
        .map(|&id| run_check(tables, id, bounds))
        .collect()
}
