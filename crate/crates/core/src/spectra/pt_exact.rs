//! Exact eigenpairs of the PT radial equation with the blended centrifugal
//! approximation substituted.
//!
//! In units of α² the equation reads
//! `R'' + [ε − P/sinh²αr + Q cosh αr/sinh²αr] R = 0` with
//! `P = 2μξ₁/(ħα)² + l(l+1)x₂`, `Q = 2μξ₂/(ħα)² − l(l+1)x₃`. With
//! `t = tanh²(αr/2)` the solutions are
//! `t^{κ/2} (1−t)^{q/2} P_n^{(κ−1/2, q)}(1−2t)`, where
//! `κ = 1/2 + √(1/4 + P − Q)`, `λ = 1/2 + √(1/4 + P + Q)` and
//! `q = λ − κ − 1 − 2n`; the level is bound while `q > 0`.
//!
//! These differ slightly from [`super::pt_energy`], which follows the
//! customary closed form.

use crate::centrifugal::{check_pt, pt_matrix, Blend, Coeffs};
use crate::error::{Error, Result};
use crate::potentials::PtParams;
use crate::scalar::Real;
use crate::specfun::{jacobi_p, weighted_jacobi_square_integral};

use super::{check_state, QuantumState, RadialFunction};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExactPtLevel<T> {
    pub n_r: u32,
    pub l: u32,
    pub energy: T,
    pub kappa: T,
    pub q: T,
    pub coeffs: Coeffs<T>,
    pub params: PtParams<T>,
}

pub fn energy_with<T: Real>(p: &PtParams<T>, state: QuantumState, coeffs: Coeffs<T>) -> Result<ExactPtLevel<T>> {
    p.validate()?;
    check_pt(&coeffs, p, state.l)?;
    let ll = T::int(state.l as i64 * (state.l as i64 + 1));
    let g = T::lit(2.0) * p.mu / (p.hbar * p.alpha).powi(2);
    let big_p = g * p.xi1 + ll * coeffs.x2;
    let big_q = g * p.xi2 - ll * coeffs.x3;
    let quarter = T::lit(0.25);
    let half = T::lit(0.5);
    let not_bound = |reason: String| Error::NotBound { n_r: state.n_r, l: state.l, reason };
    let (r1, r2) = (quarter + big_p - big_q, quarter + big_p + big_q);
    if !(r1 >= T::zero() && r2 >= T::zero()) {
        return Err(not_bound(format!("complex exponents (1/4 + P -+ Q = {r1}, {r2})")));
    }
    let kappa = half + r1.sqrt();
    let lam = half + r2.sqrt();
    let q = lam - kappa - T::one() - T::int(2 * state.n_r as i64);
    if !(q > T::zero()) {
        return Err(not_bound(format!("decay exponent q = {q} is not > 0")));
    }
    let energy = (p.hbar * p.alpha).powi(2) / (T::lit(2.0) * p.mu) * (ll * coeffs.x1 - q * q / T::lit(4.0));
    Ok(ExactPtLevel { n_r: state.n_r, l: state.l, energy, kappa, q, coeffs, params: *p })
}

pub fn energy<T: Real>(p: &PtParams<T>, state: QuantumState, blend: Blend<T>) -> Result<ExactPtLevel<T>> {
    let coeffs = pt_matrix(p, None)?.blend(blend)?;
    energy_with(p, state, coeffs)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExactPtWavefunction<T> {
    pub level: ExactPtLevel<T>,
    pub norm: T,
}

pub fn wavefunction<T: Real>(level: &ExactPtLevel<T>, state: QuantumState) -> Result<ExactPtWavefunction<T>> {
    check_state(level.n_r, level.l, state)?;
    let ka = level.kappa - T::lit(0.5);
    let integral = weighted_jacobi_square_integral(level.n_r, ka, level.q, ka, level.q - T::one())?;
    let norm = (level.params.alpha / integral).sqrt();
    Ok(ExactPtWavefunction { level: *level, norm })
}

impl<T: Real> RadialFunction<T> for ExactPtWavefunction<T> {
    fn norm(&self) -> T {
        self.norm
    }

    fn shape(&self, r: T) -> Result<T> {
        let lv = &self.level;
        let half = T::lit(0.5) * lv.params.alpha * r;
        let th = half.tanh().abs();
        let sech = T::one() / half.cosh();
        let two = T::lit(2.0);
        let p = jacobi_p(lv.n_r, lv.kappa - T::lit(0.5), lv.q, T::one() - two * th * th)?;
        Ok(th.powf(lv.kappa) * sech.powf(lv.q) * p)
    }

    fn n_r(&self) -> u32 {
        self.level.n_r
    }

    fn l(&self) -> u32 {
        self.level.l
    }
}
