//! Exact integer combinatorics: binomial coefficients, Stirling numbers of
//! the second kind, and second-order Eulerian numbers.
//!
//! The second-order Eulerian triangle is computed three independent ways:
//! the defining recurrence (memoized in a [`TriangleTable`]) and two
//! explicit alternating sums over Stirling numbers. The recurrence route is
//! treated as ground truth by the verification sweeps in [`crate::identity`];
//! the explicit routes are checked against it.
//!
//! Boundary conventions, locked by tests:
//! - `eulerian2(0,0) = 1`, `eulerian2(n,0) = 0` for `n >= 1`,
//!   `eulerian2(0,m) = 0` for `m >= 1`, and `eulerian2(n,m) = 0` for `m > n`.
//! - `stirling2(0,0) = 1`, `stirling2(n,0) = 0` for `n >= 1`,
//!   `stirling2(n,m) = 0` for `m > n` or `m < 0`.
//! - `binomial(n,k) = 0` outside `0 <= k <= n`, including every `n < 0`.
//!   The negative-upper-index extension is deliberately not used: the
//!   identity sweeps need the vanishing convention at their endpoints.

use num_traits::{One, Zero};

use crate::Int;

/// Binomial coefficient `C(n, k)`.
///
/// Returns 0 when `k < 0`, when `n >= 0` and `k > n`, and for every `n < 0`.
pub fn binomial(n: i64, k: i64) -> Int {
    if k < 0 || n < 0 || k > n {
        return Int::zero();
    }
    let k = k.min(n - k);
    let mut acc = Int::one();
    for i in 0..k {
        acc = acc * Int::from(n - i) / Int::from(i + 1);
    }
    acc
}

/// Exact factorial `n!`. Panics if `n < 0`.
pub fn factorial(n: i64) -> Int {
    assert!(n >= 0, "factorial: negative argument {n}");
    let mut acc = Int::one();
    for i in 2..=n {
        acc *= Int::from(i);
    }
    acc
}

/// Which triangle a [`TriangleTable`] memoizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TriangleKind {
    /// Second-order Eulerian numbers:
    /// `E(n,m) = m E(n-1,m) + (2n-m) E(n-1,m-1)`.
    Eulerian2,
    /// Stirling numbers of the second kind:
    /// `S(n,m) = m S(n-1,m) + S(n-1,m-1)`.
    Stirling2,
}

/// Memoized triangle of exact integers, filled row by row on demand.
///
/// Row `n` stores entries `m = 0..=n`; everything outside that range is an
/// implicit zero. Row 0 is `[1]` for both kinds. Filling requires `&mut`;
/// once filled, the table is safe to read from multiple threads.
#[derive(Clone, Debug)]
pub struct TriangleTable {
    kind: TriangleKind,
    rows: Vec<Vec<Int>>,
}

impl TriangleTable {
    pub fn new(kind: TriangleKind) -> Self {
        TriangleTable {
            kind,
            rows: vec![vec![Int::one()]],
        }
    }

    pub fn kind(&self) -> TriangleKind {
        self.kind
    }

    /// Largest `n` whose row is currently filled.
    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    /// Fill rows up through `n`.
    pub fn fill_to(&mut self, n: usize) {
        while self.rows.len() <= n {
            let r = self.rows.len();
            let prev = &self.rows[r - 1];
            let mut row = vec![Int::zero(); r + 1];
            for m in 1..=r {
                let keep = if m < r { &prev[m] } else { &ZERO };
                let carry = &prev[m - 1];
                row[m] = match self.kind {
                    TriangleKind::Eulerian2 => {
                        Int::from(m) * keep + Int::from(2 * r as i64 - m as i64) * carry
                    }
                    TriangleKind::Stirling2 => Int::from(m) * keep + carry,
                };
            }
            self.rows.push(row);
        }
    }

    /// Entry `(n, m)`, filling rows as needed. Panics if `n < 0`; any `m`
    /// outside `0..=n` yields 0 per the boundary convention.
    pub fn entry(&mut self, n: i64, m: i64) -> Int {
        assert!(n >= 0, "{:?} triangle: negative row index {n}", self.kind);
        let n = n as usize;
        self.fill_to(n);
        if m < 0 || m as usize > n {
            Int::zero()
        } else {
            self.rows[n][m as usize].clone()
        }
    }

    /// Entry `(n, m)` of an already-filled region, without filling.
    /// Panics if row `n` is not filled yet.
    pub fn entry_filled(&self, n: usize, m: usize) -> &Int {
        assert!(
            n < self.rows.len(),
            "{:?} triangle: row {n} not filled",
            self.kind
        );
        if m > n {
            &ZERO
        } else {
            &self.rows[n][m]
        }
    }

    /// Full stored row `n` (entries `m = 0..=n`), filling as needed.
    pub fn row(&mut self, n: usize) -> &[Int] {
        self.fill_to(n);
        &self.rows[n]
    }

    /// Row `n` of an already-filled region. Panics if not filled yet; the
    /// `&self` access is what makes post-fill concurrent reads possible.
    pub fn row_filled(&self, n: usize) -> &[Int] {
        assert!(
            n < self.rows.len(),
            "{:?} triangle: row {n} not filled",
            self.kind
        );
        &self.rows[n]
    }

    /// Overwrite one stored entry. Test-only fault injection: deliberately
    /// breaks the recurrence invariant so sweeps can prove they detect it.
    #[doc(hidden)]
    pub fn corrupt_entry(&mut self, n: usize, m: usize, value: Int) {
        self.fill_to(n);
        assert!(m <= n, "corrupt_entry: m > n");
        self.rows[n][m] = value;
    }
}

static ZERO: Int = Int::ZERO;

/// Memo context holding both triangles. All triangle-valued operations live
/// here so that repeated sweeps share the fill work.
#[derive(Clone, Debug)]
pub struct Tables {
    pub eulerian2: TriangleTable,
    pub stirling2: TriangleTable,
}

impl Tables {
    pub fn new() -> Self {
        Tables {
            eulerian2: TriangleTable::new(TriangleKind::Eulerian2),
            stirling2: TriangleTable::new(TriangleKind::Stirling2),
        }
    }

    /// Stirling number of the second kind `S(n, m)`. Panics if `n < 0`;
    /// returns 0 for `m < 0`, `m > n`, or `m = 0 < n`.
    pub fn stirling2(&mut self, n: i64, m: i64) -> Int {
        self.stirling2.entry(n, m)
    }

    /// Second-order Eulerian number by the defining recurrence. Panics if
    /// `n < 0`; boundary convention as documented on the module.
    pub fn eulerian2_rec(&mut self, n: i64, m: i64) -> Int {
        self.eulerian2.entry(n, m)
    }

    /// Second-order Eulerian number by the first explicit formula:
    /// the alternating sum of `C(2n+1, m-k) S(n+k, k)` over `k = 0..=m`.
    /// Requires `n >= 0` and `m >= 0`.
    pub fn eulerian2_explicit_a(&mut self, n: i64, m: i64) -> Int {
        assert!(n >= 0 && m >= 0, "eulerian2_explicit_a: negative index");
        let mut acc = Int::zero();
        for k in 0..=m {
            let term = binomial(2 * n + 1, m - k) * self.stirling2(n + k, k);
            if (m - k) % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    /// Second-order Eulerian number by the second explicit formula:
    /// the alternating sum of `k C(2n, m-k) S(n+k-1, k)` over `k = 0..=m`.
    /// Requires `n >= 0` and `m >= 0`; at `n = 0` every term vanishes
    /// (the `k = 0` term by its `k` factor, the rest through `S(k-1, k)`),
    /// so the value is 0 rather than the recurrence's `eulerian2(0,0) = 1`.
    pub fn eulerian2_explicit_b(&mut self, n: i64, m: i64) -> Int {
        assert!(n >= 0 && m >= 0, "eulerian2_explicit_b: negative index");
        let mut acc = Int::zero();
        for k in 1..=m {
            let term = Int::from(k) * binomial(2 * n, m - k) * self.stirling2(n + k - 1, k);
            if (m - k) % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }

    /// Row `n` of the second-order Eulerian triangle in published order:
    /// `[E(n,1), ..., E(n,n)]`. Panics if `n < 1`.
    pub fn triangle_row(&mut self, n: i64) -> Vec<Int> {
        assert!(n >= 1, "triangle_row: row index must be >= 1, got {n}");
        self.eulerian2.row(n as usize)[1..].to_vec()
    }
}

impl Default for Tables {
    fn default() -> Self {
        Self::new()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> Int {
        Int::from(v)
    }

    #[test]
    fn binomial_small_and_edge_cases() {
        assert_eq!(binomial(5, 2), int(10));
        assert_eq!(binomial(2, 5), int(0));
        assert_eq!(binomial(3, -1), int(0));
        assert_eq!(binomial(0, 0), int(1));
        assert_eq!(binomial(-1, 0), int(0));
        assert_eq!(binomial(-3, 2), int(0));
        // C(60,30) * 61 / 31, from the published central value C(60,30)
        assert_eq!(binomial(61, 30).to_string(), "232714176627630544");
    }

    #[test]
    fn binomial_pascal_identity() {
        // C(n,m) = C(n-1,m) + C(n-1,m-1) for 1 <= m <= n <= 50
        for n in 1..=50 {
            for m in 1..=n {
                assert_eq!(
                    binomial(n, m),
                    binomial(n - 1, m) + binomial(n - 1, m - 1),
                    "pascal failed at ({n},{m})"
                );
            }
        }
    }

    #[test]
    fn factorial_values() {
        assert_eq!(factorial(0), int(1));
        assert_eq!(factorial(5), int(120));
        assert_eq!(factorial(20).to_string(), "2432902008176640000");
    }

    #[test]
    #[should_panic(expected = "negative argument")]
    fn factorial_rejects_negative() {
        factorial(-1);
    }

    /// Independent oracle: count partitions of an n-set into exactly m
    /// nonempty blocks by walking every restricted-growth assignment string.
    fn count_set_partitions(n: usize, m: usize) -> Int {
        fn go(remaining: usize, blocks: usize, m: usize) -> u64 {
            if remaining == 0 {
                return u64::from(blocks == m);
            }
            let mut total = 0;
            // next element joins one of the existing blocks...
            for _ in 0..blocks {
                total += go(remaining - 1, blocks, m);
            }
            // ...or opens a new one, never exceeding m blocks
            if blocks < m {
                total += go(remaining - 1, blocks + 1, m);
            }
            total
        }
        Int::from(go(n, 0, m))
    }

    #[test]
    fn stirling2_matches_brute_force_partitions() {
        let mut tables = Tables::new();
        for n in 0..=7i64 {
            for m in 0..=n {
                assert_eq!(
                    tables.stirling2(n, m),
                    count_set_partitions(n as usize, m as usize),
                    "stirling2({n},{m})"
                );
            }
        }
        // frozen from the oracle
        assert_eq!(tables.stirling2(4, 2), int(7));
    }

    #[test]
    fn stirling2_boundaries() {
        let mut tables = Tables::new();
        for n in 0..=10 {
            assert_eq!(tables.stirling2(n, n), int(1));
        }
        assert_eq!(tables.stirling2(3, 0), int(0));
        assert_eq!(tables.stirling2(0, 0), int(1));
        assert_eq!(tables.stirling2(4, -2), int(0));
        assert_eq!(tables.stirling2(4, 9), int(0));
    }

    #[test]
    fn stirling2_recurrence_on_filled_table() {
        let mut tables = Tables::new();
        for n in 1..=30 {
            for m in 0..=n {
                let lhs = tables.stirling2(n, m);
                let rhs = Int::from(m) * tables.stirling2(n - 1, m) + tables.stirling2(n - 1, m - 1);
                assert_eq!(lhs, rhs, "stirling recurrence at ({n},{m})");
            }
        }
    }

    #[test]
    #[should_panic(expected = "negative row index")]
    fn stirling2_rejects_negative_n() {
        Tables::new().stirling2(-1, 0);
    }

    #[test]
    fn eulerian2_first_rows() {
        let mut tables = Tables::new();
        assert_eq!(tables.eulerian2_rec(0, 0), int(1));
        assert_eq!(tables.eulerian2_rec(1, 1), int(1));
        assert_eq!(tables.eulerian2_rec(3, 2), int(8));
        assert_eq!(tables.eulerian2_rec(2, 3), int(0));
        assert_eq!(tables.eulerian2_rec(5, 0), int(0));
        assert_eq!(tables.eulerian2_rec(0, 4), int(0));
        assert_eq!(tables.triangle_row(1), vec![int(1)]);
        assert_eq!(tables.triangle_row(2), vec![int(1), int(2)]);
        assert_eq!(tables.triangle_row(3), vec![int(1), int(8), int(6)]);
        assert_eq!(tables.triangle_row(4), vec![int(1), int(22), int(58), int(24)]);
    }

    #[test]
    #[should_panic(expected = "must be >= 1")]
    fn triangle_row_rejects_zero() {
        Tables::new().triangle_row(0);
    }

    #[test]
    fn eulerian2_row_sums_are_odd_double_factorials() {
        let mut tables = Tables::new();
        for n in 1..=15i64 {
            let sum: Int = tables.triangle_row(n).iter().sum();
            let mut dfact = Int::one();
            let mut f = 1;
            while f < 2 * n {
                dfact *= Int::from(f);
                f += 2;
            }
            assert_eq!(sum, dfact, "row sum at n = {n}");
        }
    }

    #[test]
    fn explicit_a_hand_values() {
        let mut tables = Tables::new();
        // (2,2): k=1 gives -C(5,1)S(3,1) = -5, k=2 gives C(5,0)S(4,2) = 7
        assert_eq!(tables.eulerian2_explicit_a(2, 2), int(2));
        // (0,0): single term C(1,0)S(0,0)
        assert_eq!(tables.eulerian2_explicit_a(0, 0), int(1));
        // (3,2): k=1 gives -C(7,1)S(4,1) = -7, k=2 gives S(5,2) = 15
        assert_eq!(tables.eulerian2_explicit_a(3, 2), int(8));
    }

    #[test]
    fn explicit_b_hand_values() {
        let mut tables = Tables::new();
        // (3,2): k=1 gives -C(6,1)S(3,1) = -6, k=2 gives 2 C(6,0)S(4,2) = 14
        assert_eq!(tables.eulerian2_explicit_b(3, 2), int(8));
        // (1,1): single term C(2,0)S(1,1)
        assert_eq!(tables.eulerian2_explicit_b(1, 1), int(1));
        // (2,3): every binomial vanishes
        assert_eq!(tables.eulerian2_explicit_b(2, 3), int(0));
        // n = 0: all terms vanish, including (0,0)
        assert_eq!(tables.eulerian2_explicit_b(0, 0), int(0));
    }

    #[test]
    fn explicit_formulas_match_recurrence() {
        let mut tables = Tables::new();
        for n in 0..=12 {
            for m in 0..=n {
                let rec = tables.eulerian2_rec(n, m);
                assert_eq!(tables.eulerian2_explicit_a(n, m), rec, "formula A at ({n},{m})");
                if n >= 1 {
                    assert_eq!(tables.eulerian2_explicit_b(n, m), rec, "formula B at ({n},{m})");
                }
            }
        }
    }

    #[test]
    fn explicit_formulas_vanish_above_diagonal() {
        let mut tables = Tables::new();
        for n in 0..=8 {
            for m in (n + 1)..=(n + 4) {
                assert_eq!(tables.eulerian2_explicit_a(n, m), int(0), "A at ({n},{m})");
                assert_eq!(tables.eulerian2_explicit_b(n, m), int(0), "B at ({n},{m})");
            }
        }
    }

    #[test]
    fn bracket_difference_lemma() {
        // m C(2n-1, m-k) - (2n-m) C(2n-1, m-k-1) = k C(2n, m-k)
        // for 0 <= k <= m <= n <= 20; this is the step that turns the first
        // explicit formula into the second.
        for n in 0..=20i64 {
            for m in 0..=n {
                for k in 0..=m {
                    let lhs = Int::from(m) * binomial(2 * n - 1, m - k)
                        - Int::from(2 * n - m) * binomial(2 * n - 1, m - k - 1);
                    let rhs = Int::from(k) * binomial(2 * n, m - k);
                    assert_eq!(lhs, rhs, "bracket lemma at ({n},{m},{k})");
                }
            }
        }
    }

    #[test]
    fn filled_tables_are_readable_across_threads() {
        let mut table = TriangleTable::new(TriangleKind::Eulerian2);
        table.fill_to(12);
        std::thread::scope(|scope| {
            for n in [4usize, 8, 12] {
                let table = &table;
                scope.spawn(move || {
                    let sum: Int = table.row_filled(n).iter().sum();
                    assert!(sum > Int::zero());
                });
            }
        });
    }

    #[test]
    fn corrupt_entry_breaks_recurrence() {
        let mut table = TriangleTable::new(TriangleKind::Eulerian2);
        table.fill_to(4);
        table.corrupt_entry(3, 2, int(9));
        assert_eq!(table.entry(3, 2), int(9));
        // rows already filled are untouched
        assert_eq!(table.entry(4, 2), int(22));
    }
}
