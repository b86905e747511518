//! Closed-form energies and normalized radial wavefunctions of the blended
//! centrifugal approximation, for both potentials.
//!
//! The radial equation `R'' + [2μ(E − V)/ħ² − l(l+1) f(r)] R = 0` with `f`
//! the blended approximation is solved in closed form. `n_r` counts the nodes
//! of `R` on `(0, ∞)`.

use num_complex::Complex;

use crate::centrifugal::{check_mr, check_pt, mr_matrix, pt_matrix, Blend, Coeffs};
use crate::error::{domain, Error, Result};
use crate::potentials::{MrParams, Potential, PtParams};
use crate::scalar::Real;
use crate::specfun::{assoc_legendre, hyp2f1_terminating, jacobi_p, ln_gamma, weighted_jacobi_square_integral};

pub mod pt_exact;

/// Quantum numbers `(n_r, l, m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuantumState {
    pub n_r: u32,
    pub l: u32,
    pub m: i32,
}

impl QuantumState {
    pub fn new(n_r: u32, l: u32, m: i32) -> Result<Self> {
        if m.unsigned_abs() > l {
            return Err(Error::Contract(format!("|m| = {} exceeds l = {l}", m.unsigned_abs())));
        }
        Ok(Self { n_r, l, m })
    }

    /// State with `m = 0`.
    pub fn radial(n_r: u32, l: u32) -> Self {
        Self { n_r, l, m: 0 }
    }

    fn ll<T: Real>(&self) -> T {
        T::int(self.l as i64 * (self.l as i64 + 1))
    }
}

/// A Manning-Rosen level.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MrLevel<T> {
    pub n_r: u32,
    pub l: u32,
    pub energy: T,
    /// Decay exponent ε̄ of `s^ε̄`, `s = e^{−r/b}`.
    pub eps_bar: T,
    /// Exponent of `(1 − s)` near the origin.
    pub big_l: T,
    pub x4: T,
    pub x5: T,
    pub coeffs: Coeffs<T>,
    pub params: MrParams<T>,
}

/// A Pöschl-Teller level.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PtLevel<T> {
    pub n_r: u32,
    pub l: u32,
    pub energy: T,
    pub big_a: T,
    pub big_b: T,
    pub big_c: T,
    /// `√(1 + 4(A − B + C))`; `None` when the radicand is negative.
    pub a: Option<T>,
    pub big_l: T,
    pub x4: T,
    pub gamma: T,
    /// `a − 2`, or NaN when `a` is undefined.
    pub delta: T,
    pub coeffs: Coeffs<T>,
    pub params: PtParams<T>,
}

/// Level of either potential.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Level<T> {
    ManningRosen(MrLevel<T>),
    PoschlTeller(PtLevel<T>),
}

impl<T: Real> Level<T> {
    pub fn energy(&self) -> T {
        match self {
            Level::ManningRosen(l) => l.energy,
            Level::PoschlTeller(l) => l.energy,
        }
    }

    pub fn n_r(&self) -> u32 {
        match self {
            Level::ManningRosen(l) => l.n_r,
            Level::PoschlTeller(l) => l.n_r,
        }
    }

    pub fn l(&self) -> u32 {
        match self {
            Level::ManningRosen(l) => l.l,
            Level::PoschlTeller(l) => l.l,
        }
    }
}

/// MR level for explicit blended coefficients.
pub fn mr_energy_with<T: Real>(p: &MrParams<T>, state: QuantumState, coeffs: Coeffs<T>) -> Result<MrLevel<T>> {
    p.validate()?;
    check_mr(&coeffs, p, state.l)?;
    let ll: T = state.ll();
    let (half, two) = (T::lit(0.5), T::lit(2.0));
    let two_am1 = two * p.alpha - T::one();
    let big_l = half + half * (two_am1 * two_am1 + T::lit(4.0) * ll * coeffs.x3).sqrt();
    let x4 = half * (p.a + p.alpha * (p.alpha - T::one()) + ll * (coeffs.x3 - coeffs.x2));
    let scale = p.energy_scale();
    let x5 = scale * (ll * coeffs.x1 + x4);
    let nl = T::int(state.n_r as i64) + big_l;
    let not_bound = |reason: String| Error::NotBound { n_r: state.n_r, l: state.l, reason };
    if !(nl > T::zero()) {
        return Err(not_bound(format!("n_r + L = {nl} is not > 0")));
    }
    let energy = x5 - scale * (x4 * x4 / (nl * nl) + nl * nl / T::lit(4.0));
    let eps_bar = x4 / nl - nl / two;
    if !(eps_bar > T::zero()) {
        return Err(not_bound(format!("decay exponent {eps_bar} is not > 0")));
    }
    Ok(MrLevel { n_r: state.n_r, l: state.l, energy, eps_bar, big_l, x4, x5, coeffs, params: *p })
}

/// MR level with the default coefficient matrix blended by `blend`.
pub fn mr_energy<T: Real>(p: &MrParams<T>, state: QuantumState, blend: Blend<T>) -> Result<MrLevel<T>> {
    let coeffs = mr_matrix(p, None)?.blend(blend)?;
    mr_energy_with(p, state, coeffs)
}

/// The `E`-independent pieces `(A, C, x₄, L)` of the PT solution.
fn pt_pieces<T: Real>(p: &PtParams<T>, ll: T, c: &Coeffs<T>) -> (T, T, T, T) {
    let four = T::lit(4.0);
    let k = p.mu / (T::lit(2.0) * p.alpha * p.alpha * p.hbar * p.hbar);
    let big_a = k * (p.xi1 + p.xi2) + ll * (c.x3 - c.x2) / four;
    let big_c = k * (p.xi1 - p.xi2) + ll * (c.x3 + c.x2) / four;
    let unit = p.alpha * p.alpha * p.hbar * p.hbar / p.mu;
    let x4 = -p.xi1 / T::lit(2.0) + ll * unit * (T::lit(2.0) * c.x1 - c.x2) / four + unit / T::lit(2.0) * (T::lit(0.25) + big_a + big_c);
    let big_l = T::lit(0.5) + big_c.sqrt() - (T::one() + big_a).sqrt();
    (big_a, big_c, x4, big_l)
}

/// PT level for explicit blended coefficients.
pub fn pt_energy_with<T: Real>(p: &PtParams<T>, state: QuantumState, coeffs: Coeffs<T>) -> Result<PtLevel<T>> {
    p.validate()?;
    check_pt(&coeffs, p, state.l)?;
    let ll: T = state.ll();
    let (big_a, big_c, x4, big_l) = pt_pieces(p, ll, &coeffs);
    let not_bound = |reason: String| Error::NotBound { n_r: state.n_r, l: state.l, reason };
    if !(big_a >= -T::one()) {
        return Err(not_bound(format!("1 + A = {} is negative", T::one() + big_a)));
    }
    let nl = T::int(state.n_r as i64) + big_l;
    if !(nl < T::zero()) {
        return Err(not_bound(format!("n_r + L = {nl} is not < 0")));
    }
    let unit = p.alpha * p.alpha * p.hbar * p.hbar / (T::lit(2.0) * p.mu);
    let energy = x4 - unit * nl * nl;
    if !(energy < T::zero()) {
        return Err(not_bound(format!("E = {energy} is not < 0")));
    }
    let big_b = (energy + p.xi1 / T::lit(2.0)) / unit + ll * (coeffs.x2 - T::lit(2.0) * coeffs.x1) / T::lit(2.0);
    let rad = T::one() + T::lit(4.0) * (big_a - big_b + big_c);
    let a = if rad >= T::zero() { Some(rad.sqrt()) } else { None };
    let gamma = T::lit(2.0) * big_c.sqrt() - T::lit(0.5);
    let delta = a.map_or(T::nan(), |a| a - T::lit(2.0));
    Ok(PtLevel { n_r: state.n_r, l: state.l, energy, big_a, big_b, big_c, a, big_l, x4, gamma, delta, coeffs, params: *p })
}

/// PT level with the default coefficient matrix blended by `blend`.
pub fn pt_energy<T: Real>(p: &PtParams<T>, state: QuantumState, blend: Blend<T>) -> Result<PtLevel<T>> {
    let coeffs = pt_matrix(p, None)?.blend(blend)?;
    pt_energy_with(p, state, coeffs)
}

/// Level of either potential.
pub fn energy<T: Real>(pot: &Potential<T>, state: QuantumState, blend: Blend<T>) -> Result<Level<T>> {
    match pot {
        Potential::ManningRosen(p) => mr_energy(p, state, blend).map(Level::ManningRosen),
        Potential::PoschlTeller(p) => pt_energy(p, state, blend).map(Level::PoschlTeller),
    }
}

/// All bound levels with `n_r ≤ n_max`, in increasing `n_r`.
pub fn enumerate_bound_states<T: Real>(pot: &Potential<T>, l: u32, blend: Blend<T>, n_max: u32) -> Vec<Level<T>> {
    (0..=n_max).filter_map(|n| energy(pot, QuantumState::radial(n, l), blend).ok()).collect()
}

/// A radial function `R(r)` with `∫₀^∞ R² dr = 1`.
pub trait RadialFunction<T: Real> {
    /// Normalization constant multiplying the unnormalized shape.
    fn norm(&self) -> T;
    /// Unnormalized shape at `r`.
    fn shape(&self, r: T) -> Result<T>;
    /// Number of radial nodes.
    fn n_r(&self) -> u32;
    fn l(&self) -> u32;

    fn eval(&self, r: T) -> Result<T> {
        if !(r > T::zero()) || !r.is_finite() {
            return domain(format!("radius must be finite and > 0, got {r}"));
        }
        Ok(self.norm() * self.shape(r)?)
    }
}

fn check_state(n_r: u32, l: u32, state: QuantumState) -> Result<()> {
    if state.n_r != n_r || state.l != l {
        return Err(Error::Contract(format!("level is for (n_r, l) = ({n_r}, {l}) but state is ({}, {})", state.n_r, state.l)));
    }
    Ok(())
}

/// `R(r) = N s^ε̄ (1−s)^L ₂F₁(−n_r, n_r+2ε̄+2L; 2ε̄+1; s)`, `s = e^{−r/b}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MrWavefunction<T> {
    pub level: MrLevel<T>,
    pub norm: T,
}

/// `∫₀^∞ [s^ε̄ (1−s)^L ₂F₁(…; s)]² dr` in closed form.
fn mr_shape_integral<T: Real>(lv: &MrLevel<T>) -> Result<T> {
    let two = T::lit(2.0);
    let n = lv.n_r;
    let ja = two * lv.eps_bar;
    let jb = two * lv.big_l - T::one();
    let integral = weighted_jacobi_square_integral(n, ja, jb, ja - T::one(), two * lv.big_l)?;
    // ₂F₁ = n!/(2ε̄+1)_n P_n^{(2ε̄, 2L−1)}(1−2s)
    let mut ratio = T::one();
    for k in 0..n {
        ratio = ratio * T::int(k as i64 + 1) / (ja + T::one() + T::int(k as i64));
    }
    Ok(lv.params.b * ratio * ratio * integral)
}

/// Normalized MR radial wavefunction.
pub fn mr_wavefunction<T: Real>(level: &MrLevel<T>, state: QuantumState) -> Result<MrWavefunction<T>> {
    check_state(level.n_r, level.l, state)?;
    if !(level.eps_bar > T::zero() && level.big_l > T::lit(0.5)) {
        return Err(Error::Contract("MR level is not a bound level".into()));
    }
    let norm = T::one() / mr_shape_integral(level)?.sqrt();
    Ok(MrWavefunction { level: *level, norm })
}

/// The MR normalization constant in its commonly printed closed form,
/// `[2ε̄(n+ε̄+L)Γ(n+2ε̄+1)Γ(n+2ε̄+2L) / (n! b (n+ε̄) Γ(n+2L) Γ(2ε̄+1)²)]^{1/2}`.
///
/// This is not the constant that normalizes `R`; it exceeds the true one by
/// a factor `√(L/ε̄)` at `n_r = 0`. Kept for comparison.
pub fn mr_norm_printed<T: Real>(level: &MrLevel<T>) -> Result<T> {
    let two = T::lit(2.0);
    let n = T::int(level.n_r as i64);
    let (e, l) = (level.eps_bar, level.big_l);
    let ln = ln_gamma(n + two * e + T::one())? + ln_gamma(n + two * e + two * l)?
        - ln_gamma(n + T::one())?
        - ln_gamma(n + two * l)?
        - two * ln_gamma(two * e + T::one())?;
    let pre = two * e * (n + e + l) / (level.params.b * (n + e));
    Ok((pre * ln.exp()).sqrt())
}

impl<T: Real> RadialFunction<T> for MrWavefunction<T> {
    fn norm(&self) -> T {
        self.norm
    }

    fn shape(&self, r: T) -> Result<T> {
        let lv = &self.level;
        let b = lv.params.b;
        let s = (-r / b).exp();
        let oms = -(-r / b).exp_m1();
        let two = T::lit(2.0);
        let n = T::int(lv.n_r as i64);
        let f = hyp2f1_terminating(lv.n_r, n + two * lv.eps_bar + two * lv.big_l, two * lv.eps_bar + T::one(), s)?;
        // s^ε̄ = e^{−ε̄ r/b}
        Ok((-lv.eps_bar * r / b).exp() * oms.powf(lv.big_l) * f)
    }

    fn n_r(&self) -> u32 {
        self.level.n_r
    }

    fn l(&self) -> u32 {
        self.level.l
    }
}

/// `R(r) = N s^√C (1−s)^{(a−1)/2} P_{n_r}^{(2√C, a)}(1−2s)`, `s = tanh²(αr/2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PtWavefunction<T> {
    pub level: PtLevel<T>,
    pub a: T,
    pub norm: T,
}

fn pt_shape_integral<T: Real>(lv: &PtLevel<T>, a: T) -> Result<T> {
    let two = T::lit(2.0);
    let rc = lv.big_c.sqrt();
    let integral = weighted_jacobi_square_integral(lv.n_r, two * rc, a, two * rc - T::lit(0.5), a - two)?;
    Ok(integral / lv.params.alpha)
}

/// Normalized PT radial wavefunction.
pub fn pt_wavefunction<T: Real>(level: &PtLevel<T>, state: QuantumState) -> Result<PtWavefunction<T>> {
    check_state(level.n_r, level.l, state)?;
    let a = match level.a {
        Some(a) if a > T::one() && level.big_c > T::zero() => a,
        _ => return Err(Error::Contract("PT level has no normalizable wavefunction (needs a > 1, C > 0)".into())),
    };
    let norm = T::one() / pt_shape_integral(level, a)?.sqrt();
    Ok(PtWavefunction { level: *level, a, norm })
}

/// The PT normalization constant in its commonly printed form,
/// `√α (Σ_m (−1)^{n−m} C(n+γ, m) C(n+δ, n−m) Γ(m+δ+1) Γ(n+γ+3/2) / (n! Γ(n+γ+δ+2))
///  ₃F₂(−n, 2n+1+γ+δ, m+1+δ; n−m+γ+1, n+γ+δ+2; 1))^{−1/2}`.
///
/// This does not normalize `R` (it is off already at `n_r = 0`). Kept for
/// comparison.
pub fn pt_norm_printed<T: Real>(level: &PtLevel<T>) -> Result<T> {
    use crate::specfun::hyp3f2_terminating;
    let (g, d) = (level.gamma, level.delta);
    if !d.is_finite() {
        return Err(Error::Contract("PT level has no real a".into()));
    }
    let n = level.n_r;
    let nn = T::int(n as i64);
    let one = T::one();
    let ln_binom = |x: T, k: u32| -> Result<T> {
        let k = T::int(k as i64);
        Ok(ln_gamma(x + one)? - ln_gamma(k + one)? - ln_gamma(x - k + one)?)
    };
    let mut sum = T::zero();
    for m in 0..=n {
        let mm = T::int(m as i64);
        let sign = if (n - m).is_multiple_of(2) { one } else { -one };
        let ln_term = ln_binom(nn + g, m)? + ln_binom(nn + d, n - m)? + ln_gamma(mm + d + one)? + ln_gamma(nn + g + T::lit(1.5))?
            - ln_gamma(nn + one)?
            - ln_gamma(nn + g + d + T::lit(2.0))?;
        let f = hyp3f2_terminating(n, T::lit(2.0) * nn + one + g + d, mm + one + d, nn - mm + g + one, nn + g + d + T::lit(2.0), one)?;
        sum = sum + sign * ln_term.exp() * f;
    }
    if !(sum > T::zero()) {
        return domain(format!("printed PT normalization sum {sum} is not positive"));
    }
    Ok(level.params.alpha.sqrt() / sum.sqrt())
}

impl<T: Real> RadialFunction<T> for PtWavefunction<T> {
    fn norm(&self) -> T {
        self.norm
    }

    fn shape(&self, r: T) -> Result<T> {
        let lv = &self.level;
        let half = T::lit(0.5) * lv.params.alpha * r;
        let th = half.tanh();
        let s = th * th;
        let sech2 = T::one() / half.cosh().powi(2);
        let rc = lv.big_c.sqrt();
        let two = T::lit(2.0);
        let p = jacobi_p(lv.n_r, two * rc, self.a, T::one() - two * s)?;
        // s^√C = |tanh|^{2√C}; (1−s)^{(a−1)/2} = sech^{a−1}
        Ok(th.abs().powf(two * rc) * sech2.powf((self.a - T::one()) / two) * p)
    }

    fn n_r(&self) -> u32 {
        self.level.n_r
    }

    fn l(&self) -> u32 {
        self.level.l
    }
}

/// `ψ(r, θ, φ) = Y-normalization · R(r)/r · P_l^{|m|}(cos θ) e^{imφ}`.
pub fn full_wavefunction<T: Real, R: RadialFunction<T>>(radial: &R, state: QuantumState, r: T, theta: T, phi: T) -> Result<Complex<T>> {
    check_state(radial.n_r(), radial.l(), state)?;
    if state.m.unsigned_abs() > state.l {
        return Err(Error::Contract(format!("|m| exceeds l = {}", state.l)));
    }
    if !(theta >= T::zero() && theta <= T::PI()) {
        return domain(format!("theta must lie in [0, pi], got {theta}"));
    }
    if !phi.is_finite() {
        return domain("phi must be finite");
    }
    let l = state.l as i64;
    let am = state.m.unsigned_abs() as i64;
    let mut fact_ratio = T::one(); // (l−|m|)!/(l+|m|)!
    for k in (l - am + 1)..=(l + am) {
        fact_ratio = fact_ratio / T::int(k);
    }
    let ynorm = (T::int(2 * l + 1) * fact_ratio / (T::lit(4.0) * T::PI())).sqrt();
    let plm = assoc_legendre(state.l, am as i32, theta.cos())?;
    let amp = ynorm * radial.eval(r)? / r * plm;
    let ph = T::int(state.m as i64) * phi;
    Ok(Complex::new(amp * ph.cos(), amp * ph.sin()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature::integrate_split;
    use approx::assert_relative_eq;

    fn table1() -> MrParams<f64> {
        MrParams::new(80.0, 1.5, 40.0)
    }

    fn table2() -> PtParams<f64> {
        PtParams::new(4.0, 2.0, 0.05)
    }

    fn norm_by_quadrature<R: RadialFunction<f64>>(w: &R, upper: f64) -> f64 {
        let mut f = |r: f64| w.eval(r).unwrap().powi(2);
        let pts: Vec<f64> = (0..=40).map(|k| 1e-12 + upper * k as f64 / 40.0).collect();
        integrate_split(&mut f, &pts, 1e-14, 1e-12).unwrap().value
    }

    #[test]
    fn mr_table_entries() {
        let e = mr_energy(&table1(), QuantumState::radial(1, 1), Blend::first()).unwrap().energy;
        assert_relative_eq!(e, -0.036913014, epsilon = 5e-9);
        let e = mr_energy(&table1(), QuantumState::radial(2, 4), Blend::new(-2.5, 1.0)).unwrap().energy;
        assert_relative_eq!(e, -0.00093643645, epsilon = 1e-9);
    }

    #[test]
    fn pt_table_entries() {
        let e = pt_energy(&table2(), QuantumState::radial(1, 1), Blend::first()).unwrap().energy;
        assert_relative_eq!(e, -0.21560894, epsilon = 5e-9);
        let e = pt_energy(&table2(), QuantumState::radial(2, 4), Blend::new(0.5, -2.0)).unwrap().energy;
        assert_relative_eq!(e, -0.17169211, epsilon = 5e-9);
    }

    #[test]
    fn mr_identity() {
        let lv = mr_energy(&table1(), QuantumState::radial(2, 3), Blend::new(0.3, 0.6)).unwrap();
        let alt = table1().energy_scale() * (12.0 * lv.coeffs.x1 - lv.eps_bar * lv.eps_bar);
        assert_relative_eq!(lv.energy, alt, max_relative = 1e-12);
    }

    #[test]
    fn s_waves_ignore_blend() {
        let a = mr_energy(&table1(), QuantumState::radial(1, 0), Blend::first()).unwrap().energy;
        let b = mr_energy(&table1(), QuantumState::radial(1, 0), Blend::new(-2.0, 0.3)).unwrap().energy;
        assert_eq!(a, b);
        let a = pt_energy(&table2(), QuantumState::radial(1, 0), Blend::first()).unwrap().energy;
        let b = pt_energy(&table2(), QuantumState::radial(1, 0), Blend::new(0.5, -2.0)).unwrap().energy;
        assert_eq!(a, b);
    }

    #[test]
    fn normalization_mr() {
        for (n, l) in [(0, 1), (1, 1), (2, 4)] {
            let st = QuantumState::radial(n, l);
            let lv = mr_energy(&table1(), st, Blend::new(-1.5, 1.0)).unwrap();
            let w = mr_wavefunction(&lv, st).unwrap();
            assert_relative_eq!(norm_by_quadrature(&w, 4000.0), 1.0, epsilon = 1e-9);
        }
    }

    #[test]
    fn normalization_pt() {
        for (n, l) in [(0, 1), (1, 1), (2, 4)] {
            let st = QuantumState::radial(n, l);
            let lv = pt_energy(&table2(), st, Blend::new(0.5, -1.0)).unwrap();
            let w = pt_wavefunction(&lv, st).unwrap();
            assert_relative_eq!(norm_by_quadrature(&w, 600.0), 1.0, epsilon = 1e-9);
        }
    }

    #[test]
    fn printed_mr_norm_off_by_sqrt_l_over_eps() {
        let st = QuantumState::radial(0, 1);
        let lv = mr_energy(&table1(), st, Blend::first()).unwrap();
        let w = mr_wavefunction(&lv, st).unwrap();
        let printed = mr_norm_printed(&lv).unwrap();
        assert_relative_eq!(printed / w.norm, (lv.big_l / lv.eps_bar).sqrt(), max_relative = 1e-10);
    }

    #[test]
    fn wrong_state_is_contract_error() {
        let lv = mr_energy(&table1(), QuantumState::radial(1, 1), Blend::first()).unwrap();
        assert!(matches!(mr_wavefunction(&lv, QuantumState::radial(2, 1)), Err(Error::Contract(_))));
        assert!(QuantumState::new(0, 1, 2).is_err());
    }

    #[test]
    fn enumerate_weak_mr_is_empty() {
        let pot = Potential::ManningRosen(MrParams::new(1e-6, 1.5, 40.0));
        assert!(enumerate_bound_states(&pot, 1, Blend::first(), 10).is_empty());
    }

    #[test]
    fn angular_factor_s_wave() {
        let st = QuantumState::radial(0, 0);
        let lv = mr_energy(&table1(), st, Blend::first()).unwrap();
        let w = mr_wavefunction(&lv, st).unwrap();
        let r = 30.0;
        let psi = full_wavefunction(&w, st, r, 0.7, 1.1).unwrap();
        assert_relative_eq!(psi.re, w.eval(r).unwrap() / r / (4.0 * std::f64::consts::PI).sqrt(), max_relative = 1e-14);
        assert_eq!(psi.im, 0.0);
    }
}
