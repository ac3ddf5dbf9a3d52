//! Exact integer calculus behind the shadow bounds: binomial coefficients,
//! Macaulay representations, the shadow-size function, the threshold `ξ_δ`,
//! and reflection-principle path counts.
//!
//! Everything is unsigned 64-bit with checked arithmetic; overflow is a
//! reported [`Error::Overflow`], never a silent wraparound.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// `C(n, k)` with the usual conventions: `0` when `k > n`, `C(n, 0) = 1`.
///
/// Computed by the multiplicative formula; each partial product is itself a
/// binomial coefficient, so intermediates stay bounded by the result.
pub fn binomial(n: u64, k: u64) -> Result<u64> {
    if k > n {
        return Ok(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 1..=k {
        acc = acc * (n - k + i) as u128 / i as u128;
        if acc > u64::MAX as u128 {
            return Err(Error::Overflow);
        }
    }
    Ok(acc as u64)
}

/// The `k`-th Macaulay representation of a positive integer `x`:
/// the unique expansion `x = C(a_k, k) + C(a_{k-1}, k-1) + … + C(a_i, i)`
/// with `a_k > a_{k-1} > … > a_i >= i > 0`. Coefficients below the cutoff
/// are padded as `a_j = j - 1`, which contribute `C(j-1, j) = 0` and make
/// the padded tuple strictly decreasing as well.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MacaulayRep {
    k: u32,
    /// Padded coefficients `a_k, a_{k-1}, …, a_1` (highest first).
    coeffs: Vec<u64>,
    /// The cutoff `i`: coefficients with index `>= lowest` are genuine
    /// summands, the rest are padding.
    lowest: u32,
}

impl MacaulayRep {
    pub fn k(&self) -> u32 {
        self.k
    }

    /// Padded coefficients, highest index first: `a_k, …, a_1`.
    pub fn coefficients(&self) -> &[u64] {
        &self.coeffs
    }

    /// The coefficient `a_j` for `1 <= j <= k`.
    pub fn coefficient(&self, j: u32) -> u64 {
        assert!(j >= 1 && j <= self.k);
        self.coeffs[(self.k - j) as usize]
    }

    /// The cutoff index `i` of the genuine summands.
    pub fn lowest_index(&self) -> u32 {
        self.lowest
    }

    /// Reconstructs the represented integer.
    pub fn value(&self) -> Result<u64> {
        let mut total: u64 = 0;
        for j in self.lowest..=self.k {
            total = total
                .checked_add(binomial(self.coefficient(j), j as u64)?)
                .ok_or(Error::Overflow)?;
        }
        Ok(total)
    }
}

impl fmt::Display for MacaulayRep {
    /// Genuine summands only, e.g. `C(3,2)+C(2,1)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in (self.lowest..=self.k).rev() {
            if j < self.k {
                write!(f, "+")?;
            }
            write!(f, "C({},{})", self.coefficient(j), j)?;
        }
        Ok(())
    }
}

/// Largest `a` with `C(a, k) <= x`, for `x >= 1`, `k >= 1`.
fn largest_binomial_at_most(x: u64, k: u32) -> u64 {
    if k == 1 {
        return x;
    }
    // Bisect over [k, x + k + 1): C(k, k) = 1 <= x, and for k >= 2 any
    // a > x has C(a, k) >= C(a, 2) > x. Overflowing C(a, k) counts as "> x".
    let above = |a: u64| -> bool {
        match binomial(a, k as u64) {
            Ok(v) => v > x,
            Err(_) => true,
        }
    };
    let mut lo = k as u64;
    let mut hi = x.saturating_add(k as u64 + 1);
    // Invariant: C(lo, k) <= x < C(hi, k).
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        if above(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    lo
}

/// Greedy construction of the `k`-th Macaulay representation of `x >= 1`.
pub fn macaulay_rep(x: u64, k: u32) -> Result<MacaulayRep> {
    if x < 1 {
        return Err(Error::InvalidArgument("macaulay_rep needs x >= 1".into()));
    }
    if k < 1 {
        return Err(Error::InvalidArgument("macaulay_rep needs k >= 1".into()));
    }
    let mut coeffs = Vec::with_capacity(k as usize);
    let mut rest = x;
    let mut lowest = 1;
    for j in (1..=k).rev() {
        if rest == 0 {
            // Pad the tail: a_j = j - 1 contributes C(j-1, j) = 0.
            coeffs.push(j as u64 - 1);
            continue;
        }
        let a = largest_binomial_at_most(rest, j);
        rest -= binomial(a, j as u64)?;
        coeffs.push(a);
        lowest = j;
    }
    debug_assert_eq!(rest, 0);
    let rep = MacaulayRep { k, coeffs, lowest };
    debug_assert!(rep.coeffs.windows(2).all(|w| w[0] > w[1]));
    debug_assert!(rep.coefficient(rep.lowest) >= rep.lowest as u64);
    Ok(rep)
}

/// The shadow-size function `∂_{k-1}(x) = C(a_k, k-1) + C(a_{k-1}, k-2) + …`
/// over the genuine summands of the `k`-th Macaulay representation of `x`.
///
/// By Kruskal–Katona this is the exact shadow cardinality of the compressed
/// family of `x` many `k`-sets, and a lower bound for any family. For `k = 1`
/// we set `∂_0(x) = 1`: the shadow of any nonempty family of singletons is
/// the empty face alone.
pub fn shadow_size(x: u64, k: u32) -> Result<u64> {
    if k == 1 {
        if x < 1 {
            return Err(Error::InvalidArgument("shadow_size needs x >= 1".into()));
        }
        return Ok(1);
    }
    let rep = macaulay_rep(x, k)?;
    let mut total: u64 = 0;
    for j in rep.lowest_index()..=k {
        total = total
            .checked_add(binomial(rep.coefficient(j), j as u64 - 1)?)
            .ok_or(Error::Overflow)?;
    }
    Ok(total)
}

/// The collapsibility threshold `ξ_δ = Σ_{j=1}^{δ} C(2j-1, j)`.
pub fn xi(delta: u32) -> Result<u64> {
    if delta < 1 {
        return Err(Error::InvalidArgument("xi needs delta >= 1".into()));
    }
    let mut total: u64 = 0;
    for j in 1..=delta as u64 {
        total = total
            .checked_add(binomial(2 * j - 1, j)?)
            .ok_or(Error::Overflow)?;
    }
    Ok(total)
}

/// Which side attains `min(ξ_δ, C(n, δ-1))`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinBranch {
    Xi,
    Binom,
}

impl fmt::Display for MinBranch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinBranch::Xi => write!(f, "xi"),
            MinBranch::Binom => write!(f, "binom"),
        }
    }
}

/// `min(ξ_δ, C(n, δ-1))` together with the attaining branch. The branch
/// follows the case split `n >= 2δ → Xi`, `n <= 2δ-1 → Binom`; ties on the
/// `n = 2δ` boundary report `Xi`.
pub fn min_bound(n: u32, delta: u32) -> Result<(u64, MinBranch)> {
    if !(1 <= delta && delta < n) {
        return Err(Error::InvalidArgument(format!(
            "min_bound needs 1 <= delta < n (got n={n}, delta={delta})"
        )));
    }
    let x = xi(delta)?;
    let b = binomial(n as u64, delta as u64 - 1)?;
    let which = if n >= 2 * delta {
        MinBranch::Xi
    } else {
        MinBranch::Binom
    };
    // The case split and the numeric minimum must agree.
    debug_assert!(match which {
        MinBranch::Xi => x <= b,
        MinBranch::Binom => b <= x,
    });
    Ok((x.min(b), which))
}

/// Compares `x` and `y` through the lexicographic order of their padded
/// `k`-th Macaulay coefficient tuples. Agrees with integer comparison.
pub fn compare_by_macaulay(x: u64, y: u64, k: u32) -> Result<Ordering> {
    let rx = macaulay_rep(x, k)?;
    let ry = macaulay_rep(y, k)?;
    Ok(rx.coefficients().cmp(ry.coefficients()))
}

/// Number of up/down walks of `steps` steps from height `start_height` to
/// height `end_height` that never meet the X-axis, by the reflection
/// principle: `C(n, l_2) - C(n, l_1)` with `2*l_1 = n - k - m` and
/// `2*l_2 = n - m + k`.
///
/// Both heights must be positive. Returns 0 on parity mismatch or when the
/// end height is unreachable. `steps = 0` is allowed (the empty walk).
pub fn path_count(start_height: u64, steps: u64, end_height: u64) -> Result<u64> {
    if start_height < 1 || end_height < 1 {
        return Err(Error::InvalidArgument(
            "path_count needs positive start and end heights".into(),
        ));
    }
    let n = steps as i128;
    let k = start_height as i128;
    let m = end_height as i128;
    if (n - k - m).rem_euclid(2) != 0 {
        return Ok(0);
    }
    let l1 = (n - k - m) / 2;
    let l2 = (n - m + k) / 2;
    let term = |l: i128| -> Result<u64> {
        if l < 0 || l > n {
            Ok(0)
        } else {
            binomial(steps, l as u64)
        }
    };
    let hi = term(l2)?;
    let lo = term(l1)?;
    hi.checked_sub(lo).ok_or(Error::Overflow)
}

/// The `n`-th Catalan number, via the subtraction form
/// `C_n = C(2n, n) - C(2n, n+1)`; exact integer arithmetic, no division.
pub fn catalan(n: u64) -> Result<u64> {
    let twice = n.checked_mul(2).ok_or(Error::Overflow)?;
    let a = binomial(twice, n)?;
    let b = binomial(twice, n + 1)?;
    Ok(a - b)
}

/// Outcome of [`verify_key_lemma`].
#[derive(Debug, Clone)]
pub struct KeyLemmaReport {
    pub k: u32,
    pub xi: u64,
    /// `∂_{k-1}(x) >= x` held for every `x` in `1..=ξ_k`.
    pub bound_ok: bool,
    pub first_counterexample: Option<u64>,
    /// `∂_{k-1}(ξ_k + 1) = ξ_k`, strictly below `ξ_k + 1`.
    pub sharpness_ok: bool,
    /// The telescoping identity
    /// `C(2k-2, k-1) - C(2k-2, k) - Σ_{j=1}^{k-1} (C(k-2+j, j) - C(k-2+j, j-1)) = 1`.
    pub telescoping_ok: bool,
}

impl KeyLemmaReport {
    pub fn pass(&self) -> bool {
        self.bound_ok && self.sharpness_ok && self.telescoping_ok
    }
}

/// Exhaustively checks that `∂_{k-1}(x) >= x` for all `1 <= x <= ξ_k`, that
/// the bound is sharp just past the threshold, and the telescoping identity
/// used to prove it.
pub fn verify_key_lemma(k: u32) -> Result<KeyLemmaReport> {
    if k < 1 {
        return Err(Error::InvalidArgument(
            "verify_key_lemma needs k >= 1".into(),
        ));
    }
    let threshold = xi(k)?;
    let mut first_counterexample = None;
    for x in 1..=threshold {
        if shadow_size(x, k)? < x {
            first_counterexample = Some(x);
            break;
        }
    }
    let at_next = shadow_size(threshold + 1, k)?;
    let sharpness_ok = at_next == threshold;

    let lhs = binomial(2 * k as u64 - 2, k as u64 - 1)? as i128
        - binomial(2 * k as u64 - 2, k as u64)? as i128;
    let mut rhs: i128 = 0;
    for j in 1..k as u64 {
        rhs += binomial(k as u64 - 2 + j, j)? as i128 - binomial(k as u64 - 2 + j, j - 1)? as i128;
    }
    let telescoping_ok = lhs - rhs == 1;

    Ok(KeyLemmaReport {
        k,
        xi: threshold,
        bound_ok: first_counterexample.is_none(),
        first_counterexample,
        sharpness_ok,
        telescoping_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Pascal-triangle oracle, independent of the multiplicative route.
    fn pascal(rows: usize) -> Vec<Vec<u64>> {
        let mut t: Vec<Vec<u64>> = vec![vec![1]];
        for n in 1..rows {
            let prev = &t[n - 1];
            let mut row = vec![1u64];
            for k in 1..n {
                row.push(prev[k - 1] + prev[k]);
            }
            row.push(1);
            t.push(row);
        }
        t
    }

    #[test]
    fn binomial_basics() {
        assert_eq!(binomial(0, 0).unwrap(), 1);
        assert_eq!(binomial(4, 2).unwrap(), 6);
        assert_eq!(binomial(7, 4).unwrap(), 35);
        assert_eq!(binomial(3, 5).unwrap(), 0);
        assert_eq!(binomial(64, 32).unwrap(), 1832624140942590534);
        assert!(matches!(binomial(128, 64), Err(Error::Overflow)));
    }

    #[test]
    fn binomial_matches_pascal() {
        let t = pascal(65);
        for n in 0..65u64 {
            for k in 0..=n {
                if let Ok(v) = binomial(n, k) {
                    assert_eq!(v, t[n as usize][k as usize], "C({n},{k})");
                }
            }
        }
    }

    /// Brute-force uniqueness oracle: every strictly decreasing admissible
    /// coefficient tuple summing to x is the one the greedy finds.
    fn all_reps(x: u64, k: u32, max_a: u64) -> Vec<Vec<u64>> {
        fn rec(x: u64, j: u32, cap: u64, acc: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
            if j == 0 {
                if x == 0 {
                    out.push(acc.clone());
                }
                return;
            }
            // a_j in j..cap for genuine terms; stopping early (rest zero) is
            // modeled by requiring the remaining sum be exactly zero.
            if x == 0 {
                // pad with a_j = j-1
                acc.push(j as u64 - 1);
                rec(0, j - 1, j as u64 - 1, acc, out);
                acc.pop();
                return;
            }
            for a in (j as u64)..cap {
                let c = binomial(a, j as u64).unwrap();
                if c > x {
                    break;
                }
                acc.push(a);
                rec(x - c, j - 1, a, acc, out);
                acc.pop();
            }
        }
        let mut out = Vec::new();
        let mut acc = Vec::new();
        rec(x, k, max_a, &mut acc, &mut out);
        out
    }

    #[test]
    fn macaulay_rep_examples() {
        // 5 = C(3,2) + C(2,1)
        let r = macaulay_rep(5, 2).unwrap();
        assert_eq!(r.coefficients(), &[3, 2]);
        assert_eq!(r.lowest_index(), 1);
        assert_eq!(r.to_string(), "C(3,2)+C(2,1)");
        // uniqueness by exhaustion
        let reps = all_reps(5, 2, 16);
        assert_eq!(reps, vec![vec![3, 2]]);

        // 1 = C(k, k), padded below
        for k in 1..=8u32 {
            let r = macaulay_rep(1, k).unwrap();
            assert_eq!(r.coefficient(k), k as u64);
            assert_eq!(r.lowest_index(), k);
            for j in 1..k {
                assert_eq!(r.coefficient(j), j as u64 - 1);
            }
        }

        // C(n, d-1) has coefficients n, d-3, d-4, …, 1, 0
        for (n, delta) in [(6u64, 4u32), (9, 5), (12, 6)] {
            let k = delta - 1;
            let x = binomial(n, k as u64).unwrap();
            let r = macaulay_rep(x, k).unwrap();
            assert_eq!(r.coefficient(k), n);
            assert_eq!(r.lowest_index(), k);
            for j in 1..k {
                assert_eq!(r.coefficient(j), j as u64 - 1);
            }
        }
    }

    /// The (δ-1)-th Macaulay coefficients of ξ_δ are 2δ-1, 2δ-3, …, 7, 5, 4.
    #[test]
    fn macaulay_rep_of_xi() {
        for delta in 3..=8u32 {
            let r = macaulay_rep(xi(delta).unwrap(), delta - 1).unwrap();
            let mut expect: Vec<u64> = (2..delta as u64).rev().map(|j| 2 * j + 1).collect();
            expect.push(4);
            assert_eq!(r.coefficients(), expect.as_slice(), "delta={delta}");
        }
    }

    #[test]
    fn macaulay_rep_reconstructs() {
        for k in 1..=8u32 {
            for x in 1..=100_000u64 {
                let r = macaulay_rep(x, k).unwrap();
                assert_eq!(r.value().unwrap(), x, "x={x} k={k}");
                assert!(r.coefficients().windows(2).all(|w| w[0] > w[1]));
                assert!(r.coefficient(r.lowest_index()) >= r.lowest_index() as u64);
            }
        }
    }

    #[test]
    fn macaulay_rep_rejects_bad_input() {
        assert!(macaulay_rep(0, 2).is_err());
        assert!(macaulay_rep(5, 0).is_err());
    }

    #[test]
    fn macaulay_rep_extreme_values() {
        for k in 1..=4u32 {
            let r = macaulay_rep(u64::MAX, k).unwrap();
            assert_eq!(r.value().unwrap(), u64::MAX, "k={k}");
        }
    }

    #[test]
    fn shadow_size_examples() {
        assert_eq!(shadow_size(5, 2).unwrap(), 4);
        // sharpness at the threshold, for delta = 2..6
        for delta in 2..=6u32 {
            let t = xi(delta).unwrap();
            assert_eq!(shadow_size(t + 1, delta).unwrap(), t, "delta={delta}");
        }
        // shadow of the full k-uniform family on m vertices
        for m in 1..=12u64 {
            for k in 1..=m.min(8) {
                assert_eq!(
                    shadow_size(binomial(m, k).unwrap(), k as u32).unwrap(),
                    binomial(m, k - 1).unwrap(),
                    "m={m} k={k}"
                );
            }
        }
    }

    #[test]
    fn shadow_monotone() {
        for k in 2..=6u32 {
            let mut prev = shadow_size(1, k).unwrap();
            for x in 2..=2000u64 {
                let cur = shadow_size(x, k).unwrap();
                assert!(cur >= prev, "k={k} x={x}");
                prev = cur;
            }
        }
    }

    #[test]
    fn xi_values() {
        assert_eq!(xi(1).unwrap(), 1);
        assert_eq!(xi(2).unwrap(), 4);
        assert_eq!(xi(3).unwrap(), 14);
        assert_eq!(xi(4).unwrap(), 49);
        // direct summation oracle
        for delta in 1..=10u32 {
            let direct: u64 = (1..=delta as u64)
                .map(|j| binomial(2 * j - 1, j).unwrap())
                .sum();
            assert_eq!(xi(delta).unwrap(), direct);
        }
        assert!(xi(0).is_err());
    }

    #[test]
    fn min_bound_examples() {
        assert_eq!(min_bound(6, 3).unwrap(), (14, MinBranch::Xi));
        assert_eq!(min_bound(5, 3).unwrap(), (10, MinBranch::Binom));
        // tie at n = 2*delta resolves to Xi
        assert_eq!(min_bound(4, 2).unwrap(), (4, MinBranch::Xi));
        assert!(min_bound(3, 3).is_err());
        assert!(min_bound(3, 0).is_err());
    }

    #[test]
    fn compare_by_macaulay_agrees_with_integers() {
        assert_eq!(compare_by_macaulay(5, 4, 2).unwrap(), Ordering::Greater);
        assert_eq!(compare_by_macaulay(14, 10, 2).unwrap(), Ordering::Greater);
        assert_eq!(macaulay_rep(14, 2).unwrap().coefficients(), &[5, 4]);
        assert_eq!(macaulay_rep(10, 2).unwrap().coefficients(), &[5, 0]);
        for k in 1..=6u32 {
            for x in (1..=5000u64).step_by(7) {
                for y in (1..=5000u64).step_by(11) {
                    assert_eq!(
                        compare_by_macaulay(x, y, k).unwrap(),
                        x.cmp(&y),
                        "x={x} y={y} k={k}"
                    );
                }
                assert_eq!(compare_by_macaulay(x, x, k).unwrap(), Ordering::Equal);
            }
        }
    }

    /// Brute-force oracle: enumerate every up/down sequence and keep the ones
    /// that stay strictly above the axis.
    fn path_count_brute(start: i64, steps: u32, end: i64) -> u64 {
        let mut count = 0u64;
        for word in 0u64..(1u64 << steps) {
            let mut h = start;
            let mut ok = h > 0;
            for b in 0..steps {
                h += if word >> b & 1 == 1 { 1 } else { -1 };
                if h <= 0 {
                    ok = false;
                    break;
                }
            }
            if ok && h == end {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn path_count_examples() {
        assert_eq!(path_count(1, 4, 1).unwrap(), 2);
        assert_eq!(path_count(1, 0, 1).unwrap(), 1);
        assert_eq!(path_count(1, 3, 1).unwrap(), 0); // parity
        assert_eq!(path_count(1, 2, 5).unwrap(), 0); // unreachable
        assert!(path_count(0, 2, 2).is_err());
    }

    #[test]
    fn path_count_matches_brute_force() {
        for steps in 0..=16u32 {
            for start in 1..=(steps as u64 + 2) {
                for end in 1..=(steps as u64 + 2) {
                    assert_eq!(
                        path_count(start, steps as u64, end).unwrap(),
                        path_count_brute(start as i64, steps, end as i64),
                        "start={start} steps={steps} end={end}"
                    );
                }
            }
        }
    }

    /// Dyck-path enumeration oracle for small Catalan numbers.
    fn dyck_count(n: u32) -> u64 {
        if n == 0 {
            return 1;
        }
        let steps = 2 * n;
        let mut count = 0;
        for word in 0u64..(1u64 << steps) {
            let mut h: i64 = 0;
            let mut ok = true;
            for b in 0..steps {
                h += if word >> b & 1 == 1 { 1 } else { -1 };
                if h < 0 {
                    ok = false;
                    break;
                }
            }
            if ok && h == 0 {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn catalan_values() {
        assert_eq!(catalan(0).unwrap(), 1);
        assert_eq!(catalan(3).unwrap(), 5);
        assert_eq!(catalan(3).unwrap(), dyck_count(3));
        assert_eq!(catalan(5).unwrap(), 42);
        // recurrence oracle C_{n+1} = sum C_i C_{n-i}
        let mut c = vec![1u64];
        for n in 0..10usize {
            let next: u64 = (0..=n).map(|i| c[i] * c[n - i]).sum();
            c.push(next);
            assert_eq!(catalan(n as u64 + 1).unwrap(), next);
        }
    }

    #[test]
    fn catalan_path_correspondences() {
        // touching-allowed paths of length 2n from the shifted height 1
        for n in 0..=10u64 {
            assert_eq!(catalan(n).unwrap(), path_count(1, 2 * n, 1).unwrap());
        }
        // strictly positive (0,0) -> (2n,0) paths number C_{n-1}
        for n in 1..=10u64 {
            assert_eq!(
                catalan(n - 1).unwrap(),
                path_count(1, 2 * n - 2, 1).unwrap()
            );
        }
    }

    #[test]
    fn key_lemma_small_k() {
        for k in 1..=6u32 {
            let rep = verify_key_lemma(k).unwrap();
            assert!(rep.pass(), "k={k}: {rep:?}");
        }
        // k=3: the threshold is 14 and the shadow at 15 is 14
        let rep = verify_key_lemma(3).unwrap();
        assert_eq!(rep.xi, 14);
        assert_eq!(shadow_size(15, 3).unwrap(), 14);
        // k=4 telescoping pieces: 20 - 15 - 4 = 1
        assert_eq!(binomial(6, 3).unwrap(), 20);
        assert_eq!(binomial(6, 4).unwrap(), 15);
        let rhs: i64 = (1..=3u64)
            .map(|j| binomial(2 + j, j).unwrap() as i64 - binomial(2 + j, j - 1).unwrap() as i64)
            .sum();
        assert_eq!(rhs, 4);
    }
}
