//! Manning-Rosen and Pöschl-Teller potentials, their minima and parameter checks.

use crate::error::{domain, Error, Result};
use crate::scalar::Real;

/// Manning-Rosen parameters.
///
/// `V(r) = ħ²/(2μb²) [α(α−1) e^{−2r/b}/(1−e^{−r/b})² − A e^{−r/b}/(1−e^{−r/b})]`
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MrParams<T> {
    /// Dimensionless strength.
    pub a: T,
    pub alpha: T,
    /// Screening length.
    pub b: T,
    pub hbar: T,
    pub mu: T,
}

/// Pöschl-Teller parameters, `V(r) = [ξ₁ − ξ₂ cosh αr]/sinh² αr`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PtParams<T> {
    pub xi1: T,
    pub xi2: T,
    /// Inverse range.
    pub alpha: T,
    pub hbar: T,
    pub mu: T,
}

/// Either potential family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Potential<T> {
    ManningRosen(MrParams<T>),
    PoschlTeller(PtParams<T>),
}

impl<T: Real> MrParams<T> {
    /// Parameters with ħ = μ = 1.
    pub fn new(a: T, alpha: T, b: T) -> Self {
        Self { a, alpha, b, hbar: T::one(), mu: T::one() }
    }

    pub fn with_units(self, hbar: T, mu: T) -> Self {
        Self { hbar, mu, ..self }
    }

    /// ħ²/(2μb²), the energy scale of the potential.
    pub fn energy_scale(&self) -> T {
        self.hbar * self.hbar / (T::lit(2.0) * self.mu * self.b * self.b)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.b > T::zero() && self.mu > T::zero() && self.hbar > T::zero()) {
            return domain(format!("Manning-Rosen requires b, mu, hbar > 0 (b = {}, mu = {}, hbar = {})", self.b, self.mu, self.hbar));
        }
        Ok(())
    }

    /// A > 0 and α outside [0, 1].
    pub fn has_minimum(&self) -> bool {
        self.a > T::zero() && (self.alpha < T::zero() || self.alpha > T::one())
    }

    pub fn value(&self, r: T) -> Result<T> {
        v_mr(self, r)
    }
}

impl<T: Real> PtParams<T> {
    /// Parameters with ħ = μ = 1.
    pub fn new(xi1: T, xi2: T, alpha: T) -> Self {
        Self { xi1, xi2, alpha, hbar: T::one(), mu: T::one() }
    }

    pub fn with_units(self, hbar: T, mu: T) -> Self {
        Self { hbar, mu, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.alpha > T::zero() && self.mu > T::zero() && self.hbar > T::zero()) {
            return domain(format!(
                "Poschl-Teller requires alpha, mu, hbar > 0 (alpha = {}, mu = {}, hbar = {})",
                self.alpha, self.mu, self.hbar
            ));
        }
        Ok(())
    }

    pub fn has_minimum(&self) -> bool {
        self.xi1 > self.xi2 && self.xi2 > T::zero()
    }

    pub fn value(&self, r: T) -> Result<T> {
        v_pt(self, r)
    }
}

impl<T: Real> Potential<T> {
    pub fn value(&self, r: T) -> Result<T> {
        match self {
            Potential::ManningRosen(p) => v_mr(p, r),
            Potential::PoschlTeller(p) => v_pt(p, r),
        }
    }

    /// Location of the potential minimum.
    pub fn minimum(&self) -> Result<T> {
        match self {
            Potential::ManningRosen(p) => mr_minimum(p),
            Potential::PoschlTeller(p) => pt_minimum(p),
        }
    }

    pub fn hbar(&self) -> T {
        match self {
            Potential::ManningRosen(p) => p.hbar,
            Potential::PoschlTeller(p) => p.hbar,
        }
    }

    pub fn mu(&self) -> T {
        match self {
            Potential::ManningRosen(p) => p.mu,
            Potential::PoschlTeller(p) => p.mu,
        }
    }

    /// Natural length of the potential: b for MR, 1/α for PT.
    pub fn length_scale(&self) -> T {
        match self {
            Potential::ManningRosen(p) => p.b,
            Potential::PoschlTeller(p) => T::one() / p.alpha,
        }
    }
}

fn check_r<T: Real>(r: T) -> Result<()> {
    if !(r > T::zero()) || !r.is_finite() {
        return domain(format!("radius must be finite and > 0, got {r}"));
    }
    Ok(())
}

/// Manning-Rosen potential at r > 0.
pub fn v_mr<T: Real>(p: &MrParams<T>, r: T) -> Result<T> {
    check_r(r)?;
    p.validate()?;
    let s = (-r / p.b).exp();
    // 1 - e^{-r/b} without cancellation at small r
    let oms = -(-r / p.b).exp_m1();
    let q = s / oms;
    Ok(p.energy_scale() * (p.alpha * (p.alpha - T::one()) * q * q - p.a * q))
}

/// Pöschl-Teller potential at r > 0.
pub fn v_pt<T: Real>(p: &PtParams<T>, r: T) -> Result<T> {
    check_r(r)?;
    p.validate()?;
    let x = p.alpha * r;
    let sh = x.sinh();
    Ok((p.xi1 - p.xi2 * x.cosh()) / (sh * sh))
}

/// Radius of the Manning-Rosen minimum, `b ln[1 + 2α(α−1)/A]`.
pub fn mr_minimum<T: Real>(p: &MrParams<T>) -> Result<T> {
    p.validate()?;
    if !p.has_minimum() {
        return Err(Error::NoMinimum(format!("Manning-Rosen needs A > 0 and alpha outside [0, 1] (A = {}, alpha = {})", p.a, p.alpha)));
    }
    let eps1 = p.alpha * (p.alpha - T::one());
    Ok(p.b * (T::lit(2.0) * eps1 / p.a).ln_1p())
}

/// Value of the Manning-Rosen potential at its minimum, `−A²ħ²/(8μb²α(α−1))`.
pub fn mr_minimum_value<T: Real>(p: &MrParams<T>) -> Result<T> {
    mr_minimum(p)?;
    let eps1 = p.alpha * (p.alpha - T::one());
    Ok(-p.a * p.a * p.energy_scale() / (T::lit(4.0) * eps1))
}

/// Radius of the Pöschl-Teller minimum,
/// `(1/α) atanh √(2√(ξ₁²−ξ₂²) / (ξ₁ + √(ξ₁²−ξ₂²)))`.
pub fn pt_minimum<T: Real>(p: &PtParams<T>) -> Result<T> {
    p.validate()?;
    if !p.has_minimum() {
        return Err(Error::NoMinimum(format!("Poschl-Teller needs xi1 > xi2 > 0 (xi1 = {}, xi2 = {})", p.xi1, p.xi2)));
    }
    let q = ((p.xi1 - p.xi2) * (p.xi1 + p.xi2)).sqrt();
    let arg = (T::lit(2.0) * q / (p.xi1 + q)).sqrt();
    Ok(arg.atanh() / p.alpha)
}
