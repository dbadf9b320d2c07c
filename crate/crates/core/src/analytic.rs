//! Closed-form side of the problem: the binary entropy function, the
//! exponent functions `g` and `h`, the constants λ₀ and p₀, odd-parity
//! probabilities, first-moment sums, the Gilbert–Varshamov-style bound, the
//! covering-code inequality, and the predicted limit curve f̂(p).
//!
//! Tail probabilities are evaluated in log space with compensated summation;
//! the GV inequality is evaluated in exact integer arithmetic.

use std::f64::consts::LN_2;
use std::sync::OnceLock;

use num_bigint::BigUint;

use crate::error::{Error, Result};

/// The analytic constants of the problem.
///
/// * `lambda0`: unique root of `h(λ) = 0` in (0, 1), the plateau height of
///   `f(G_{n,p}) / n`.
/// * `p0` / `p0_minor`: larger and smaller roots of `2p − 2p² = λ₀`. The
///   larger one is where the pair regime overtakes the plateau; the smaller
///   one marks where the pair expression crosses λ₀ from below.
/// * `alpha_half`: smaller root of `H(x) = 1/2`, the optimizer of the simple
///   covering bound.
#[derive(Clone, Copy, Debug)]
pub struct Constants {
    pub lambda0: f64,
    pub p0: f64,
    pub p0_minor: f64,
    pub alpha_half: f64,
    pub tolerance: f64,
}

/// Which branch of the limit curve attains the minimum.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Regime {
    /// `f = δ(G) + 1`, value `p`.
    MinDegree,
    /// the flat stretch at λ₀.
    Plateau,
    /// the best-pair bound, value `2p(1−p)`.
    Pair,
}

impl std::fmt::Display for Regime {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Regime::MinDegree => "min-degree",
            Regime::Plateau => "plateau",
            Regime::Pair => "pair",
        })
    }
}

#[inline]
fn xlog2(x: f64) -> f64 {
    if x <= 0.0 {
        0.0
    } else {
        x * x.log2()
    }
}

/// Binary entropy `H(x) = −x log₂x − (1−x) log₂(1−x)`, with `H(0) = H(1) = 0`
/// by continuous extension.
pub fn binary_entropy(x: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::Domain(format!("H(x) needs x in [0, 1], got {x}")));
    }
    Ok(-xlog2(x) - xlog2(1.0 - x))
}

/// The first-moment exponent `g_λ(α) = H(α) + (1−α)(H((λ−α)/(1−α)) − 1)`.
///
/// Defined for `0 ≤ α ≤ λ ≤ 1` with the endpoints taken by continuity:
/// `g_λ(0) = H(λ) − 1`.
pub fn g(lambda: f64, alpha: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&lambda) || !(0.0..=1.0).contains(&alpha) || alpha > lambda {
        return Err(Error::Domain(format!(
            "g needs 0 <= alpha <= lambda <= 1, got lambda={lambda}, alpha={alpha}"
        )));
    }
    let ha = binary_entropy(alpha)?;
    if alpha >= 1.0 {
        return Ok(ha); // the (1-alpha) factor vanishes
    }
    let inner = ((lambda - alpha) / (1.0 - alpha)).clamp(0.0, 1.0);
    Ok(ha + (1.0 - alpha) * (binary_entropy(inner)? - 1.0))
}

/// Closed-form derivative `g_λ'(α) = log₂(2(λ−α)/α)` on `0 < α < λ`.
pub fn g_prime(lambda: f64, alpha: f64) -> Result<f64> {
    if !(alpha > 0.0 && alpha < lambda && lambda <= 1.0) {
        return Err(Error::Domain(format!(
            "g' needs 0 < alpha < lambda <= 1, got lambda={lambda}, alpha={alpha}"
        )));
    }
    Ok((2.0 * (lambda - alpha) / alpha).log2())
}

/// `h(λ) = g_λ(2λ/3)`, the exponent at the maximizing α. `h(0) = −1` and
/// `h(1) = H(2/3) − 1/3` by continuity.
pub fn h(lambda: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&lambda) {
        return Err(Error::Domain(format!("h needs lambda in [0, 1], got {lambda}")));
    }
    g(lambda, 2.0 * lambda / 3.0)
}

/// `h''(λ) = 1 / ((λ−1) λ ln 2)`, negative on (0, 1).
pub fn h_second(lambda: f64) -> Result<f64> {
    if !(lambda > 0.0 && lambda < 1.0) {
        return Err(Error::Domain(format!(
            "h'' needs lambda in (0, 1), got {lambda}"
        )));
    }
    Ok(1.0 / ((lambda - 1.0) * lambda * LN_2))
}

/// Bracketed bisection until the interval shrinks to `tol`, returning the
/// midpoint. `f(lo)` and `f(hi)` must have opposite signs.
fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, tol: f64) -> f64 {
    let mut flo = f(lo);
    debug_assert!(flo * f(hi) <= 0.0, "root not bracketed");
    let mut mid = 0.5 * (lo + hi);
    for _ in 0..200 {
        if hi - lo <= tol {
            break;
        }
        mid = 0.5 * (lo + hi);
        let fm = f(mid);
        if (fm < 0.0) == (flo < 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    mid
}

/// Solves for all constants: bisection to `tolerance` followed by two Newton
/// polish steps (the brackets are guaranteed by concavity and sign changes).
pub fn solve_constants(tolerance: f64) -> Result<Constants> {
    if tolerance.is_nan() || tolerance < 1e-14 {
        return Err(Error::Domain(format!(
            "tolerance must be at least 1e-14, got {tolerance}"
        )));
    }
    // λ₀: h(0) = −1 < 0 < h(1); h is strictly concave, so the root is unique.
    let hf = |x: f64| h(x).expect("in domain");
    let mut lambda0 = bisect(hf, 1e-3, 1.0 - 1e-3, tolerance);
    for _ in 0..2 {
        // h'(λ) = log₂(3(1−λ)/λ), from h(λ) = H(λ) + λ log₂3 − 1
        let deriv = (3.0 * (1.0 - lambda0) / lambda0).log2();
        lambda0 -= hf(lambda0) / deriv;
    }

    // p₀ and the minor root solve 2p − 2p² = λ₀ in closed form.
    let disc = (1.0 - 2.0 * lambda0).sqrt();
    let p0 = 0.5 * (1.0 + disc);
    let p0_minor = 0.5 * (1.0 - disc);

    // alpha_half: smaller root of H(x) = 1/2; H is increasing on (0, 1/2).
    let hh = |x: f64| binary_entropy(x).expect("in domain") - 0.5;
    let mut alpha_half = bisect(hh, 1e-9, 0.5, tolerance);
    for _ in 0..2 {
        let deriv = ((1.0 - alpha_half) / alpha_half).log2();
        alpha_half -= hh(alpha_half) / deriv;
    }

    Ok(Constants {
        lambda0,
        p0,
        p0_minor,
        alpha_half,
        tolerance,
    })
}

/// Shared constants at tolerance 1e-13, solved once.
pub fn constants() -> &'static Constants {
    static CACHE: OnceLock<Constants> = OnceLock::new();
    CACHE.get_or_init(|| solve_constants(1e-13).expect("valid tolerance"))
}

/// Probability that a fixed outside vertex has an odd number of neighbors in
/// a set of size `a`: `p(a) = (1 − (1−2p)^a) / 2`.
pub fn odd_parity_prob(p: f64, a: u32) -> Result<f64> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidProbability { p });
    }
    if a == 0 {
        return Err(Error::Domain("odd-parity probability needs a >= 1".into()));
    }
    Ok((1.0 - (1.0 - 2.0 * p).powi(a as i32)) / 2.0)
}

/// Natural logs of factorials `0! ..= n!`, built with compensated summation.
fn ln_factorials(n: usize) -> Vec<f64> {
    let mut table = Vec::with_capacity(n + 1);
    table.push(0.0);
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for i in 1..=n {
        let y = (i as f64).ln() - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        table.push(sum);
    }
    table
}

#[inline]
fn ln_choose(lnfact: &[f64], n: usize, k: usize) -> f64 {
    lnfact[n] - lnfact[k] - lnfact[n - k]
}

/// Natural log of `Pr(Bin(n, rho) <= k)`: per-term logs, then a compensated
/// sum of exponentials scaled by the largest term.
fn ln_binomial_cdf(lnfact: &[f64], n: usize, rho: f64, k: i64) -> f64 {
    if k < 0 {
        return f64::NEG_INFINITY;
    }
    if k as usize >= n {
        return 0.0;
    }
    if rho <= 0.0 {
        return 0.0; // Bin(n, 0) = 0 <= k
    }
    if rho >= 1.0 {
        return f64::NEG_INFINITY; // Bin(n, 1) = n > k
    }
    let k = k as usize;
    let ln_rho = rho.ln();
    let ln_1m = (1.0 - rho).ln();
    let mut terms = Vec::with_capacity(k + 1);
    let mut max = f64::NEG_INFINITY;
    for i in 0..=k {
        let t = ln_choose(lnfact, n, i) + i as f64 * ln_rho + (n - i) as f64 * ln_1m;
        if t > max {
            max = t;
        }
        terms.push(t);
    }
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for t in terms {
        let y = (t - max).exp() - comp;
        let s = sum + y;
        comp = (s - sum) - y;
        sum = s;
    }
    max + sum.ln()
}

/// `Pr(Bin(n, rho) <= k)`, exact cases `k < 0 -> 0` and `k >= n -> 1`.
pub fn binomial_tail_le(n: u64, rho: f64, k: i64) -> Result<f64> {
    if !(0.0..=1.0).contains(&rho) {
        return Err(Error::InvalidProbability { p: rho });
    }
    let lnfact = ln_factorials(n as usize);
    Ok(ln_binomial_cdf(&lnfact, n as usize, rho, k).exp().min(1.0))
}

/// A first-moment sum in linear and log₂ form.
#[derive(Clone, Copy, Debug)]
pub struct FirstMoment {
    pub sum: f64,
    pub log2_sum: f64,
}

/// `Σ_{a=a_lo}^{a_hi} C(n,a) · Pr(Bin(n−a, p(a)) <= l−1−a)`: the expected
/// number of witness sets of size in the range certifying cost below `l`.
/// For `p = 1/2` the odd-parity probability is exactly 1/2 for every `a`.
pub fn first_moment_sum(n: u64, p: f64, l: u64, a_lo: u64, a_hi: u64) -> Result<FirstMoment> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidProbability { p });
    }
    if n == 0 || l == 0 || l > n {
        return Err(Error::Domain(format!(
            "first moment needs 1 <= l <= n, got n={n}, l={l}"
        )));
    }
    if a_lo == 0 || a_lo > a_hi || a_hi > n {
        return Err(Error::Domain(format!(
            "first moment needs 1 <= a_lo <= a_hi <= n, got [{a_lo}, {a_hi}]"
        )));
    }
    let lnfact = ln_factorials(n as usize);
    let mut term_lns = Vec::with_capacity((a_hi - a_lo + 1) as usize);
    let mut max = f64::NEG_INFINITY;
    for a in a_lo..=a_hi {
        let k = l as i64 - 1 - a as i64;
        if k < 0 {
            continue; // cost already exceeds l - 1
        }
        let pa = odd_parity_prob(p, a as u32)?;
        let t = ln_choose(&lnfact, n as usize, a as usize)
            + ln_binomial_cdf(&lnfact, (n - a) as usize, pa, k);
        if t > max {
            max = t;
        }
        term_lns.push(t);
    }
    if term_lns.is_empty() || max == f64::NEG_INFINITY {
        return Ok(FirstMoment {
            sum: 0.0,
            log2_sum: f64::NEG_INFINITY,
        });
    }
    let mut sum = 0.0f64;
    let mut comp = 0.0f64;
    for t in term_lns {
        let y = (t - max).exp() - comp;
        let s = sum + y;
        comp = (s - sum) - y;
        sum = s;
    }
    let ln_total = max + sum.ln();
    Ok(FirstMoment {
        sum: ln_total.exp(),
        log2_sum: ln_total / LN_2,
    })
}

/// The analytic approximation of the log-summand: `g_λ(α) · n ln 2`, i.e. the
/// natural log of `2^{n g_λ(α)}`, for comparison against the exact term.
pub fn summand_exponent(n: u64, lambda: f64, alpha: f64) -> Result<f64> {
    if n == 0 {
        return Err(Error::Domain("summand exponent needs n >= 1".into()));
    }
    Ok(g(lambda, alpha)? * n as f64 * LN_2)
}

/// The volume condition `2^{-n} Σ_{i=1}^{l-1} C(n,i) 3^i < 1` implying
/// `f(n) >= l`, evaluated exactly in integer arithmetic.
pub fn gv_bound_holds(n: u64, l: u64) -> Result<bool> {
    if n == 0 || l == 0 || l > n {
        return Err(Error::Domain(format!(
            "GV bound needs 1 <= l <= n, got n={n}, l={l}"
        )));
    }
    let mut sum = BigUint::ZERO;
    let mut choose = BigUint::from(1u32);
    let mut pow3 = BigUint::from(1u32);
    for i in 1..l {
        choose = choose * (n + 1 - i) / i; // C(n, i), exact at every step
        pow3 *= 3u32;
        sum += &choose * &pow3;
    }
    Ok(sum < BigUint::from(1u32) << n)
}

/// Largest `l` certified by the GV condition (the sum is increasing in `l`,
/// so the property is monotone).
pub fn best_gv_bound(n: u64) -> u64 {
    let threshold = BigUint::from(1u32) << n;
    let mut sum = BigUint::ZERO;
    let mut choose = BigUint::from(1u32);
    let mut pow3 = BigUint::from(1u32);
    let mut best = 1;
    for i in 1..n {
        choose = choose * (n + 1 - i) / i;
        pow3 *= 3u32;
        sum += &choose * &pow3;
        if sum < threshold {
            best = i + 1;
        } else {
            break;
        }
    }
    best
}

/// Prediction at a single `p`.
#[derive(Clone, Copy, Debug)]
pub struct FhatPrediction {
    pub value: f64,
    pub regime: Regime,
}

/// Predicted limit `f̂(p) = min(p, λ₀, 2p(1−p))`, tagged with the branch that
/// attains it. Boundary points belong to the plateau (both branches agree in
/// value there).
pub fn predicted_fhat(p: f64) -> Result<FhatPrediction> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::Domain(format!("fhat needs p in (0, 1), got {p}")));
    }
    let c = constants();
    let pair = 2.0 * p * (1.0 - p);
    if c.lambda0 <= p && c.lambda0 <= pair {
        Ok(FhatPrediction {
            value: c.lambda0,
            regime: Regime::Plateau,
        })
    } else if p <= pair {
        Ok(FhatPrediction {
            value: p,
            regime: Regime::MinDegree,
        })
    } else {
        Ok(FhatPrediction {
            value: pair,
            regime: Regime::Pair,
        })
    }
}

/// The entropy-of-a-ball function from the covering-code inequality:
/// `g(x) = H((1 − sqrt(1−x)) / 2)` on `[0, 1]`.
fn ball_entropy(x: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::Domain(format!(
            "ball entropy needs x in [0, 1], got {x}"
        )));
    }
    binary_entropy((1.0 - (1.0 - x).sqrt()) / 2.0)
}

/// Right-hand side of the covering inequality at parameter `u`:
/// `1 + g(u²) − g(u² + 2δu + 2δ)`.
pub fn covering_bound_rhs(delta: f64, u: f64) -> Result<f64> {
    if !(0.0..=0.5).contains(&delta) || u < 0.0 || u > 1.0 - 2.0 * delta + 1e-12 {
        return Err(Error::Domain(format!(
            "covering bound needs 0 <= u <= 1 - 2*delta, got delta={delta}, u={u}"
        )));
    }
    let arg = u * u + 2.0 * delta * u + 2.0 * delta;
    if arg > 1.0 + 1e-9 {
        return Err(Error::Domain(format!(
            "covering bound argument {arg} exceeds 1"
        )));
    }
    Ok(1.0 + ball_entropy(u * u)? - ball_entropy(arg.min(1.0))?)
}

/// Outcome of the covering-code comparison at `(α, δ, u)`.
#[derive(Clone, Copy, Debug)]
pub struct CoveringCheck {
    /// `H(α)`, the exponent of the number of candidate image vectors.
    pub lhs: f64,
    /// The covering inequality's cap on that exponent.
    pub rhs: f64,
    /// `lhs > rhs` certifies that two sets with close images must exist.
    pub contradiction: bool,
}

/// Checks whether `H(α) > 1 + g(u²) − g(u² + 2δu + 2δ)`; when it is, no code
/// of that rate and distance exists, so two a-sets with images within `δn`
/// of each other must exist.
pub fn covering_contradiction(alpha: f64, delta: f64, u: f64) -> Result<CoveringCheck> {
    let lhs = binary_entropy(alpha)?;
    let rhs = covering_bound_rhs(delta, u)?;
    Ok(CoveringCheck {
        lhs,
        rhs,
        contradiction: lhs > rhs,
    })
}

/// Optimum of `min(α + ρ)` subject to `H(α) + H(ρ) > 1`: by strict concavity
/// the optimum has `α = ρ` at the smaller root of `H(x) = 1/2`. Returns that
/// root and the resulting bound coefficient `4α` (from `f(n) <= 2(α + ρ)n`).
pub fn optimize_simple_bound() -> (f64, f64) {
    let a = constants().alpha_half;
    (a, 4.0 * a)
}

#[cfg(test)]
mod tests {
    use super::*;

    const LAMBDA0: f64 = 0.1892896249152306;
    const P0: f64 = 0.8941512242051071;
    const ALPHA_HALF: f64 = 0.11002786443835959;

    #[test]
    fn entropy_basics() {
        assert_eq!(binary_entropy(0.5).unwrap(), 1.0);
        assert_eq!(binary_entropy(0.0).unwrap(), 0.0);
        assert_eq!(binary_entropy(1.0).unwrap(), 0.0);
        assert!((binary_entropy(2.0 / 3.0).unwrap() - 0.9182958340544896).abs() < 1e-12);
        assert!(binary_entropy(-0.1).is_err());
        assert!(binary_entropy(1.1).is_err());
    }

    #[test]
    fn entropy_symmetric_and_concave() {
        for i in 1..50 {
            let x = i as f64 / 50.0;
            let hx = binary_entropy(x).unwrap();
            assert!((hx - binary_entropy(1.0 - x).unwrap()).abs() < 1e-14);
            for j in 1..50 {
                let y = j as f64 / 50.0;
                let mid = binary_entropy(0.5 * (x + y)).unwrap();
                let avg = 0.5 * (hx + binary_entropy(y).unwrap());
                assert!(mid >= avg - 1e-12);
                if (x - y).abs() > 1e-9 {
                    assert!(mid > avg, "strict concavity failed at {x}, {y}");
                }
            }
        }
    }

    #[test]
    fn remark_identity_on_grid() {
        // H(λ) + λ log₂3 − 1 = g_λ(2λ/3)
        let log2_3 = 3.0f64.log2();
        let grid = (1..=100).map(|i| i as f64 / 101.0);
        for lambda in grid.chain([0.1, 0.1893, 0.3]) {
            let lhs = binary_entropy(lambda).unwrap() + lambda * log2_3 - 1.0;
            let rhs = g(lambda, 2.0 * lambda / 3.0).unwrap();
            assert!(
                (lhs - rhs).abs() < 1e-12,
                "identity failed at lambda={lambda}: {lhs} vs {rhs}"
            );
        }
    }

    #[test]
    fn g_endpoint_by_continuity() {
        for lambda in [0.1, 0.3, 0.9] {
            let expect = binary_entropy(lambda).unwrap() - 1.0;
            assert!((g(lambda, 0.0).unwrap() - expect).abs() < 1e-14);
        }
        assert!(g(0.5, 0.6).is_err());
        assert!(g(1.2, 0.1).is_err());
    }

    #[test]
    fn g_maximum_at_two_thirds_lambda() {
        // ternary search the maximizer of g(0.3, ·)
        let (mut lo, mut hi) = (1e-9, 0.3 - 1e-9);
        for _ in 0..200 {
            let m1 = lo + (hi - lo) / 3.0;
            let m2 = hi - (hi - lo) / 3.0;
            if g(0.3, m1).unwrap() < g(0.3, m2).unwrap() {
                lo = m1;
            } else {
                hi = m2;
            }
        }
        assert!((0.5 * (lo + hi) - 0.2).abs() < 1e-8);
    }

    #[test]
    fn g_prime_closed_form() {
        assert!((g_prime(0.3, 0.1).unwrap() - 2.0).abs() < 1e-14);
        for lambda in [0.1, 0.1893, 0.42, 0.8] {
            assert!(g_prime(lambda, 2.0 * lambda / 3.0).unwrap().abs() < 1e-12);
            // sign change around the maximum
            assert!(g_prime(lambda, 2.0 * lambda / 3.0 * 0.9).unwrap() > 0.0);
            assert!(g_prime(lambda, 2.0 * lambda / 3.0 * 1.1).unwrap() < 0.0);
            // finite-difference agreement on a grid
            for i in 1..20 {
                let alpha = lambda * i as f64 / 20.0;
                if alpha <= 1e-4 || lambda - alpha <= 1e-4 {
                    continue;
                }
                let eps = 1e-7;
                let fd = (g(lambda, alpha + eps).unwrap() - g(lambda, alpha - eps).unwrap())
                    / (2.0 * eps);
                assert!(
                    (g_prime(lambda, alpha).unwrap() - fd).abs() < 1e-6,
                    "derivative mismatch at lambda={lambda}, alpha={alpha}"
                );
            }
        }
    }

    #[test]
    fn h_endpoints_and_root() {
        assert!((h(0.0).unwrap() + 1.0).abs() < 1e-14);
        let h1 = binary_entropy(2.0 / 3.0).unwrap() - 1.0 / 3.0;
        assert!((h(1.0).unwrap() - h1).abs() < 1e-14);
        assert!(h1 > 0.0);
        assert!(h(LAMBDA0).unwrap().abs() < 1e-10);
    }

    #[test]
    fn h_second_negative_and_matches_fd() {
        for i in 1..40 {
            let lambda = i as f64 / 40.0;
            let hs = h_second(lambda).unwrap();
            assert!(hs < 0.0);
            let e = 1e-4;
            if lambda - e <= 0.0 || lambda + e >= 1.0 {
                continue;
            }
            let fd = (h(lambda + e).unwrap() - 2.0 * h(lambda).unwrap() + h(lambda - e).unwrap())
                / (e * e);
            // |h''| blows up near the endpoints; keep the check relative there
            let tol = 1e-5 * hs.abs().max(1.0);
            assert!((hs - fd).abs() < tol, "h'' mismatch at {lambda}: {hs} vs {fd}");
        }
    }

    #[test]
    fn constants_match_known_values() {
        let c = solve_constants(1e-13).unwrap();
        assert!((c.lambda0 - LAMBDA0).abs() < 1e-12);
        assert!((c.p0 - P0).abs() < 1e-12);
        assert!((c.alpha_half - ALPHA_HALF).abs() < 1e-12);
        // defining equations
        assert!(h(c.lambda0).unwrap().abs() < 1e-13);
        assert!((2.0 * c.p0 * (1.0 - c.p0) - c.lambda0).abs() < 1e-13);
        assert!((2.0 * c.p0_minor * (1.0 - c.p0_minor) - c.lambda0).abs() < 1e-13);
        assert!(c.p0_minor < c.p0);
        assert!((binary_entropy(c.alpha_half).unwrap() - 0.5).abs() < 1e-13);
        assert!(solve_constants(1e-15).is_err());
    }

    #[test]
    fn odd_parity_prob_against_binomial_sum() {
        // the definitional odd-index binomial sum, evaluated directly
        fn oracle(p: f64, a: u32) -> f64 {
            let mut sum = 0.0;
            for i in (1..=a).step_by(2) {
                let mut choose = 1.0f64;
                for j in 0..i {
                    choose = choose * (a - j) as f64 / (j + 1) as f64;
                }
                sum += choose * p.powi(i as i32) * (1.0 - p).powi((a - i) as i32);
            }
            sum
        }
        for a in 1..=25 {
            for pi in 1..=9 {
                let p = pi as f64 / 10.0;
                let fast = odd_parity_prob(p, a).unwrap();
                assert!(
                    (fast - oracle(p, a)).abs() < 1e-12,
                    "p(a) mismatch at p={p}, a={a}"
                );
            }
        }
        assert_eq!(odd_parity_prob(0.3, 1).unwrap(), 0.3);
        for a in 1..10 {
            assert_eq!(odd_parity_prob(0.5, a).unwrap(), 0.5);
        }
        assert!(odd_parity_prob(0.5, 0).is_err());
        assert!(odd_parity_prob(1.5, 3).is_err());
    }

    #[test]
    fn binomial_tail_small_cases() {
        // Pr(Bin(4, 1/2) <= 1) = (1 + 4)/16
        assert!((binomial_tail_le(4, 0.5, 1).unwrap() - 5.0 / 16.0).abs() < 1e-15);
        assert_eq!(binomial_tail_le(9, 0.3, 9).unwrap(), 1.0);
        assert_eq!(binomial_tail_le(9, 0.3, -1).unwrap(), 0.0);
        assert_eq!(binomial_tail_le(5, 0.0, 0).unwrap(), 1.0);
        assert_eq!(binomial_tail_le(5, 1.0, 4).unwrap(), 0.0);
        assert!(binomial_tail_le(5, -0.1, 2).is_err());
    }

    #[test]
    fn binomial_tails_are_complementary() {
        // Pr(Bin(N,ρ) <= k) + Pr(Bin(N,1−ρ) <= N−k−1) = 1
        for n in [5u64, 17, 60, 150] {
            for pi in 1..=9 {
                let rho = pi as f64 / 10.0;
                for k in 0..n as i64 {
                    let a = binomial_tail_le(n, rho, k).unwrap();
                    let b = binomial_tail_le(n, 1.0 - rho, n as i64 - k - 1).unwrap();
                    assert!(
                        (a + b - 1.0).abs() < 1e-12,
                        "complement failed at n={n}, rho={rho}, k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn first_moment_single_term() {
        // n=10, p=1/2, l=2, a=1: 10 * Pr(Bin(9, 1/2) <= 0) = 10/512
        let fm = first_moment_sum(10, 0.5, 2, 1, 1).unwrap();
        assert!((fm.sum - 10.0 / 512.0).abs() < 1e-15);
        assert!((fm.log2_sum - (10.0f64 / 512.0).log2()).abs() < 1e-12);
    }

    #[test]
    fn first_moment_monotone_in_l() {
        let mut prev = 0.0;
        for l in 1..=30 {
            let fm = first_moment_sum(30, 0.5, l, 1, 30).unwrap();
            assert!(fm.sum >= prev);
            prev = fm.sum;
        }
    }

    /// Literal evaluation of the p = 1/2 sum in exact integer arithmetic:
    /// Σ_a C(n,a) (Σ_{i<=l-1-a} C(n-a,i)) 2^a, all over 2^n.
    fn eq2_exact(n: u64, l: u64) -> f64 {
        let mut numerator: u128 = 0;
        for a in 1..l {
            let limit = l - 1 - a;
            let mut inner: u128 = 0;
            for i in 0..=limit.min(n - a) {
                inner += crate::combin::binom_u128(n - a, i).unwrap();
            }
            numerator += crate::combin::binom_u128(n, a).unwrap() * inner * (1u128 << a);
        }
        numerator as f64 / (1u128 << n) as f64
    }

    #[test]
    fn first_moment_matches_exact_integer_oracle() {
        for n in [10u64, 20, 33, 40] {
            for l in 1..=n {
                let fm = first_moment_sum(n, 0.5, l, 1, n).unwrap();
                let exact = eq2_exact(n, l);
                let tol = 1e-12 * exact.max(1.0);
                assert!(
                    (fm.sum - exact).abs() <= tol,
                    "n={n} l={l}: {} vs {exact}",
                    fm.sum
                );
            }
        }
    }

    #[test]
    fn summand_exponent_reduces_to_h() {
        for lambda in [0.1, 0.19, 0.3] {
            let a = 2.0 * lambda / 3.0;
            let se = summand_exponent(500, lambda, a).unwrap();
            assert!((se - 500.0 * LN_2 * h(lambda).unwrap()).abs() < 1e-9);
        }
    }

    #[test]
    fn summand_exponent_negative_below_lambda0() {
        for i in 1..=20 {
            let lambda = LAMBDA0 * 0.98 * i as f64 / 20.0;
            for j in 1..20 {
                let alpha = lambda * j as f64 / 20.0;
                assert!(
                    summand_exponent(100, lambda, alpha).unwrap() < 0.0,
                    "positive exponent below lambda0 at ({lambda}, {alpha})"
                );
            }
        }
    }

    #[test]
    fn summand_exponent_tracks_exact_summand() {
        // exact log-summand at n=500, λ=0.19, α=0.12: ln C(n,a) + ln tail
        let n = 500u64;
        let (lambda, alpha) = (0.19, 0.12);
        let a = (alpha * n as f64).round() as u64;
        let l = (lambda * n as f64).round() as u64;
        let lnfact = ln_factorials(n as usize);
        let exact = ln_choose(&lnfact, n as usize, a as usize)
            + ln_binomial_cdf(&lnfact, (n - a) as usize, 0.5, l as i64 - 1 - a as i64);
        let approx = summand_exponent(n, lambda, alpha).unwrap();
        // the approximation is 2^{n(g + O(log n / n))}; allow 2 ln n additive
        let slack = 2.0 * (n as f64).ln();
        assert!(
            (approx - exact).abs() < slack,
            "approx {approx} vs exact {exact} (slack {slack})"
        );
    }

    #[test]
    fn gv_hand_checked_values() {
        assert!(gv_bound_holds(5, 2).unwrap()); // 15/32 < 1
        assert!(!gv_bound_holds(6, 3).unwrap()); // 153/64 >= 1
        assert!(gv_bound_holds(6, 1).unwrap()); // empty sum
        assert!(gv_bound_holds(1000, 2).unwrap());
        assert!(gv_bound_holds(4, 5).is_err());
    }

    #[test]
    fn gv_rate_approaches_lambda0() {
        let best = best_gv_bound(1000);
        assert!(gv_bound_holds(1000, best).unwrap());
        assert!(!gv_bound_holds(1000, best + 1).unwrap());
        assert!(
            (best as f64 / 1000.0 - LAMBDA0).abs() < 0.01,
            "best GV rate {} too far from lambda0",
            best as f64 / 1000.0
        );
    }

    #[test]
    fn fhat_branches() {
        let c = constants();
        let low = predicted_fhat(0.1).unwrap();
        assert_eq!(low.regime, Regime::MinDegree);
        assert!((low.value - 0.1).abs() < 1e-15);
        let mid = predicted_fhat(0.5).unwrap();
        assert_eq!(mid.regime, Regime::Plateau);
        assert_eq!(mid.value, c.lambda0);
        let high = predicted_fhat(0.95).unwrap();
        assert_eq!(high.regime, Regime::Pair);
        assert!((high.value - 0.095).abs() < 1e-15);
        assert!(predicted_fhat(0.0).is_err());
        assert!(predicted_fhat(1.0).is_err());
    }

    #[test]
    fn fhat_continuous_and_flat_on_plateau() {
        let c = constants();
        // continuity at both crossings
        for x in [c.lambda0, c.p0] {
            let before = predicted_fhat(x - 1e-9).unwrap().value;
            let after = predicted_fhat(x + 1e-9).unwrap().value;
            assert!((before - after).abs() < 1e-8);
        }
        // exactly λ₀ across the closed plateau
        for i in 0..=50 {
            let p = c.lambda0 + (c.p0 - c.lambda0) * i as f64 / 50.0;
            let pred = predicted_fhat(p).unwrap();
            assert_eq!(pred.value, c.lambda0);
            assert_eq!(pred.regime, Regime::Plateau);
        }
    }

    #[test]
    fn covering_computation_from_section_five() {
        let chk = covering_contradiction(0.0535, 0.275, 0.45).unwrap();
        // lhs is H(0.0535); at u = 1 - 2δ the inner argument is exactly 1 and
        // the rhs collapses to H((1 - sqrt(1 - u²))/2).
        assert!(
            chk.lhs > 0.301075 && chk.lhs < 0.301085,
            "lhs = {}",
            chk.lhs
        );
        assert!((chk.rhs - 0.3010234624355157).abs() < 1e-12, "rhs = {}", chk.rhs);
        assert!(chk.contradiction);
        assert!(chk.lhs - chk.rhs > 5e-5);
    }

    #[test]
    fn covering_rhs_degenerate() {
        assert!((covering_bound_rhs(0.0, 1.0).unwrap() - 1.0).abs() < 1e-14);
        assert!(covering_bound_rhs(0.3, 0.5).is_err()); // u > 1 - 2δ
    }

    #[test]
    fn simple_bound_optimum() {
        let (alpha, bound) = optimize_simple_bound();
        assert!((alpha - ALPHA_HALF).abs() < 1e-12);
        assert!((bound - 4.0 * ALPHA_HALF).abs() < 1e-12);
        assert!((bound - 0.44011).abs() < 1e-4);
        let slack = binary_entropy(alpha).unwrap() * 2.0;
        assert!((slack - 1.0).abs() < 1e-12);
    }
}
