//! Special functions needed by the closed-form spectra: gamma, terminating
//! hypergeometric sums, Jacobi polynomials and associated Legendre functions.

use crate::error::{domain, Error, Result};
use crate::scalar::{Field, Real};

// Lanczos approximation, g = 7, nine coefficients (the set used by GSL and
// most textbook implementations). Relative error ~1e-15 on the positive axis.
const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)]
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

fn lanczos_sum<T: Real>(xm1: T) -> T {
    let mut acc = T::lit(LANCZOS_COEFFS[0]);
    for (i, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        acc = acc + T::lit(c) / (xm1 + T::int(i as i64));
    }
    acc
}

/// Γ(x) for x > 0.
///
/// Uses the reflection formula below 1/2 and the Lanczos series above. The
/// power `w^(x-1/2)` is split in two halves so that the result does not
/// overflow before the true value does (Γ(171.6) ≈ f64::MAX).
pub fn gamma<T: Real>(x: T) -> Result<T> {
    if !(x > T::zero()) || !x.is_finite() {
        return domain(format!("gamma requires finite x > 0, got {x}"));
    }
    let half = T::lit(0.5);
    if x < half {
        // Γ(x) Γ(1-x) = π / sin(πx)
        let pi = T::PI();
        let g1mx = gamma(T::one() - x)?;
        return Ok(pi / ((pi * x).sin() * g1mx));
    }
    let xm1 = x - T::one();
    let w = xm1 + T::lit(LANCZOS_G) + half;
    let t = w.powf((xm1 + half) * half);
    let v = t * (t * (-w).exp()) * (T::lit(2.0) * T::PI()).sqrt() * lanczos_sum(xm1);
    if !v.is_finite() {
        return Err(Error::Overflow(format!("gamma({x}) exceeds the scalar range")));
    }
    Ok(v)
}

/// ln Γ(x) for x > 0.
pub fn ln_gamma<T: Real>(x: T) -> Result<T> {
    if !(x > T::zero()) || !x.is_finite() {
        return domain(format!("ln_gamma requires finite x > 0, got {x}"));
    }
    let half = T::lit(0.5);
    if x < half {
        let pi = T::PI();
        return Ok((pi / (pi * x).sin()).ln() - ln_gamma(T::one() - x)?);
    }
    let xm1 = x - T::one();
    let w = xm1 + T::lit(LANCZOS_G) + half;
    Ok(half * (T::lit(2.0) * T::PI()).ln() + (xm1 + half) * w.ln() - w + lanczos_sum(xm1).ln())
}

/// Rising factorial (x)_k = x (x+1) ... (x+k-1).
pub fn pochhammer<T: Field>(x: T, k: u32) -> T {
    (0..k).fold(T::one(), |acc, i| acc * (x.clone() + T::int(i as i64)))
}

fn check_lower<T: Field>(name: &str, c: &T, n: u32) -> Result<()> {
    // c + k = 0 for some k < n makes the k+1 term divide by zero.
    for k in 0..n {
        if (c.clone() + T::int(k as i64)).is_zero() {
            return domain(format!("{name}: lower parameter is the non-positive integer -{k} inside the summation range (n = {n})"));
        }
    }
    Ok(())
}

/// Terminating ₂F₁(−n, b; c; s) summed forward with the running term ratio.
pub fn hyp2f1_terminating<T: Field>(n: u32, b: T, c: T, s: T) -> Result<T> {
    check_lower("hyp2f1", &c, n)?;
    let mut term = T::one();
    let mut sum = T::one();
    for k in 0..n {
        let kk = T::int(k as i64);
        term = term * (kk.clone() - T::int(n as i64)) * (b.clone() + kk.clone()) * s.clone() / ((c.clone() + kk.clone()) * (kk + T::one()));
        sum = sum + term.clone();
    }
    Ok(sum)
}

/// Same polynomial as [`hyp2f1_terminating`], evaluated in nested (Horner) form
/// `1 + r₀s(1 + r₁s(1 + ...))`.
pub fn hyp2f1_terminating_nested<T: Field>(n: u32, b: T, c: T, s: T) -> Result<T> {
    check_lower("hyp2f1", &c, n)?;
    let mut acc = T::one();
    for k in (0..n).rev() {
        let kk = T::int(k as i64);
        let ratio = (kk.clone() - T::int(n as i64)) * (b.clone() + kk.clone()) / ((c.clone() + kk.clone()) * (kk + T::one()));
        acc = T::one() + ratio * s.clone() * acc;
    }
    Ok(acc)
}

/// Terminating ₃F₂(−n, a2, a3; b1, b2; s).
pub fn hyp3f2_terminating<T: Field>(n: u32, a2: T, a3: T, b1: T, b2: T, s: T) -> Result<T> {
    check_lower("hyp3f2", &b1, n)?;
    check_lower("hyp3f2", &b2, n)?;
    let mut term = T::one();
    let mut sum = T::one();
    for k in 0..n {
        let kk = T::int(k as i64);
        term = term * (kk.clone() - T::int(n as i64)) * (a2.clone() + kk.clone()) * (a3.clone() + kk.clone()) * s.clone()
            / ((b1.clone() + kk.clone()) * (b2.clone() + kk.clone()) * (kk + T::one()));
        sum = sum + term.clone();
    }
    Ok(sum)
}

/// Jacobi polynomial P_n^{(a,b)}(x) by the three-term recurrence in n.
///
/// No constraint on (a, b) is imposed; the recurrence divides by
/// `2k(k+a+b)(2k+a+b-2)`, which vanishes only for special negative
/// parameter combinations. Those return a domain error.
pub fn jacobi_p<T: Real>(n: u32, a: T, b: T, x: T) -> Result<T> {
    let one = T::one();
    let two = T::lit(2.0);
    let p0 = one;
    if n == 0 {
        return Ok(p0);
    }
    let p1 = (a + one) + (a + b + two) * (x - one) / two;
    let (mut prev, mut cur) = (p0, p1);
    let ab = a + b;
    for k in 2..=n {
        let k = T::int(k as i64);
        let c0 = two * k * (k + ab) * (two * k + ab - two);
        if c0 == T::zero() {
            return domain(format!("jacobi_p: degenerate recurrence for a = {a}, b = {b}"));
        }
        let c1 = (two * k + ab - one) * ((two * k + ab) * (two * k + ab - two) * x + a * a - b * b);
        let c2 = two * (k + a - one) * (k + b - one) * (two * k + ab);
        let next = (c1 * cur - c2 * prev) / c0;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// Associated Legendre function P_l^m(x) on [-1, 1], Condon-Shortley phase
/// `(-1)^m` included. Negative `m` uses
/// `P_l^{-m} = (-1)^m (l-m)!/(l+m)! P_l^m`.
pub fn assoc_legendre<T: Real>(l: u32, m: i32, x: T) -> Result<T> {
    let mabs = m.unsigned_abs();
    if mabs > l {
        return domain(format!("assoc_legendre: |m| = {mabs} exceeds l = {l}"));
    }
    if x.abs() > T::one() {
        return domain(format!("assoc_legendre: |x| = {} > 1", x.abs()));
    }
    let one = T::one();
    // P_m^m = (-1)^m (2m-1)!! (1-x^2)^{m/2}
    let sx = ((one - x) * (one + x)).sqrt();
    let mut pmm = one;
    let mut odd = one;
    for _ in 0..mabs {
        pmm = -pmm * odd * sx;
        odd = odd + T::lit(2.0);
    }
    let value = if l == mabs {
        pmm
    } else {
        let mut prev = pmm;
        let mut cur = x * T::int(2 * mabs as i64 + 1) * pmm;
        for ll in (mabs + 2)..=l {
            let ll_t = T::int(ll as i64);
            let mm = T::int(mabs as i64);
            let next = (x * (T::lit(2.0) * ll_t - one) * cur - (ll_t + mm - one) * prev) / (ll_t - mm);
            prev = cur;
            cur = next;
        }
        cur
    };
    if m >= 0 {
        return Ok(value);
    }
    // (l-|m|)!/(l+|m|)!
    let mut ratio = one;
    for k in (l - mabs + 1)..=(l + mabs) {
        ratio = ratio / T::int(k as i64);
    }
    let sign = if mabs.is_multiple_of(2) { one } else { -one };
    Ok(sign * ratio * value)
}

/// ∫₀¹ s^γ (1−s)^δ [P_n^{(a,b)}(1−2s)]² ds in closed form.
///
/// Expanding one Jacobi factor as `(a+1)_n/n! · ₂F₁(−n, n+a+b+1; a+1; s)`
/// reduces every monomial against the other factor to a Beta integral times
/// a terminating ₃F₂ at unit argument:
///
/// `I = [(a+1)_n/n!]² B(γ+1, δ+1) Σ_k d_k (γ+1)_k/(γ+δ+2)_k ·
///      ₃F₂(−n, n+a+b+1, γ+1+k; a+1, γ+δ+2+k; 1)`
///
/// with `d_k = (−n)_k (n+a+b+1)_k / ((a+1)_k k!)`.
///
/// The sums alternate; for `n = 3` and `a + b ≈ 24` about three digits are
/// lost to cancellation.
pub fn weighted_jacobi_square_integral<T: Real>(n: u32, a: T, b: T, gamma_exp: T, delta_exp: T) -> Result<T> {
    let one = T::one();
    if !(gamma_exp > -one) || !(delta_exp > -one) {
        return domain(format!("weighted Jacobi integral diverges for exponents ({gamma_exp}, {delta_exp})"));
    }
    let g1 = gamma_exp + one;
    let gd2 = gamma_exp + delta_exp + T::lit(2.0);
    let upper = T::int(n as i64) + a + b + one;
    let ln_beta = ln_gamma(g1)? + ln_gamma(delta_exp + one)? - ln_gamma(gd2)?;

    let mut sum = T::zero();
    let mut d = one; // d_k
    let mut w = one; // (γ+1)_k/(γ+δ+2)_k
    for k in 0..=n {
        let kk = T::int(k as i64);
        let f32_ = hyp3f2_terminating(n, upper, g1 + kk, a + one, gd2 + kk, one)?;
        sum = sum + d * w * f32_;
        d = d * (kk - T::int(n as i64)) * (upper + kk) / ((a + one + kk) * (kk + one));
        w = w * (g1 + kk) / (gd2 + kk);
    }
    let mut lead = one;
    for k in 0..n {
        lead = lead * (a + one + T::int(k as i64)) / T::int(k as i64 + 1);
    }
    Ok(lead * lead * ln_beta.exp() * sum)
}
