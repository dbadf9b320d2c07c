//! Combination enumeration in a revolving-door (minimal-change) order, plus
//! small binomial-coefficient helpers.
//!
//! The enumeration visits every `k`-subset of `{0, .., m-1}` so that each
//! step swaps exactly one element out and one in. Callers maintain whatever
//! incremental state they like (the exact solver keeps a running XOR parity
//! vector, two row updates per step).
//!
//! The order is the classic recursive one: `L(m, k)` is `L(m-1, k)` followed
//! by `reverse(L(m-1, k-1))` with `m-1` appended to each set. Both endpoints
//! are fixed: the traversal starts at `{0, .., k-1}` and ends at
//! `{0, .., k-2, m-1}`.

/// Exact binomial coefficient in u128, or `None` on overflow.
pub fn binom_u128(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as u128)?;
        acc /= (i + 1) as u128; // exact: product of j consecutive integers divides j!
    }
    Some(acc)
}

/// Binomial coefficient saturating at `u64::MAX`; handy for budget planning.
pub fn binom_saturating(n: u64, k: u64) -> u64 {
    match binom_u128(n, k) {
        Some(v) if v <= u64::MAX as u128 => v as u64,
        _ => u64::MAX,
    }
}

/// Calls `swap(out, in)` for every transition of the revolving-door traversal
/// of `k`-subsets of `{0, .., m-1}`, starting from `{0, .., k-1}`. The
/// callback fires `C(m, k) - 1` times.
pub fn revolving_door<F: FnMut(usize, usize)>(m: usize, k: usize, swap: &mut F) {
    assert!(k <= m, "k-subsets of an m-set need k <= m");
    forward(m, k, swap);
}

fn forward<F: FnMut(usize, usize)>(m: usize, k: usize, swap: &mut F) {
    if k == 0 || k == m {
        return; // a single subset, no transitions
    }
    forward(m - 1, k, swap);
    // seam: last of L(m-1,k) -> last of L(m-1,k-1) with m-1 appended
    let out = if k >= 2 { k - 2 } else { m - 2 };
    swap(out, m - 1);
    backward(m - 1, k - 1, swap);
}

fn backward<F: FnMut(usize, usize)>(m: usize, k: usize, swap: &mut F) {
    if k == 0 || k == m {
        return;
    }
    forward(m - 1, k - 1, swap);
    let inn = if k >= 2 { k - 2 } else { m - 2 };
    swap(m - 1, inn);
    backward(m - 1, k, swap);
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn binom_values() {
        assert_eq!(binom_u128(0, 0), Some(1));
        assert_eq!(binom_u128(5, 2), Some(10));
        assert_eq!(binom_u128(40, 9), Some(273_438_880));
        assert_eq!(binom_u128(10, 11), Some(0));
        assert_eq!(binom_u128(200, 100), None); // > u128::MAX
        assert_eq!(binom_saturating(200, 100), u64::MAX);
    }

    /// Runs the traversal and checks: starts at {0..k-1}, every step swaps a
    /// member out and a non-member in, all C(m,k) subsets visited exactly once.
    fn check_enumeration(m: usize, k: usize) {
        let mut current: u64 = (0..k).fold(0, |acc, i| acc | 1 << i);
        let mut seen = HashSet::new();
        seen.insert(current);
        let mut steps = 0u64;
        revolving_door(m, k, &mut |out, inn| {
            assert!(current >> out & 1 == 1, "swapped out a non-member");
            assert!(current >> inn & 1 == 0, "swapped in a member");
            current ^= (1 << out) | (1 << inn);
            assert!(seen.insert(current), "subset visited twice");
            steps += 1;
        });
        let expect = binom_u128(m as u64, k as u64).unwrap() as u64;
        assert_eq!(seen.len() as u64, expect, "C({m},{k}) subsets");
        assert_eq!(steps, expect - 1);
        // fixed final subset {0..k-2, m-1}
        if k >= 1 && k < m {
            let last: u64 = (0..k - 1).fold(1 << (m - 1), |acc, i| acc | 1 << i);
            assert_eq!(current, last);
        }
    }

    #[test]
    fn enumeration_complete_for_all_small_cases() {
        for m in 1..=10 {
            for k in 0..=m {
                check_enumeration(m, k);
            }
        }
        check_enumeration(16, 8);
    }
}
