//! Approximations of the centrifugal factor 1/r² in the exponential (MR) and
//! hyperbolic (PT) bases, their (λ, ν) blend, and the validity conditions of
//! the blended form.
//!
//! MR basis: `1/r² ≈ (1/b²)(x₁ + x₂ q + x₃ q²)`, `q = e^{−r/b}/(1 − e^{−r/b})`.
//! PT basis: `1/r² ≈ α²(x₁ + x₂/sinh²αr + x₃ cosh αr/sinh²αr)`.

use crate::error::{domain, Error, Result};
use crate::potentials::{mr_minimum, pt_minimum, MrParams, Potential, PtParams};
use crate::scalar::Real;

mod series;

/// Basis a coefficient triple expands on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    ManningRosen,
    PoschlTeller,
}

/// Coefficients (x₁, x₂, x₃) of one approximation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Coeffs<T> {
    pub x1: T,
    pub x2: T,
    pub x3: T,
    pub basis: Basis,
}

impl<T: Real> Coeffs<T> {
    pub fn mr(x1: T, x2: T, x3: T) -> Self {
        Self { x1, x2, x3, basis: Basis::ManningRosen }
    }

    pub fn pt(x1: T, x2: T, x3: T) -> Self {
        Self { x1, x2, x3, basis: Basis::PoschlTeller }
    }

    pub fn as_array(&self) -> [T; 3] {
        [self.x1, self.x2, self.x3]
    }
}

/// The blend parameters (λ, ν).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Blend<T> {
    pub lambda: T,
    pub nu: T,
}

impl<T: Real> Blend<T> {
    pub fn new(lambda: T, nu: T) -> Self {
        Self { lambda, nu }
    }

    /// Column weights `(νλ, ν(1−λ), 1−ν)`; they always sum to one.
    pub fn weights(&self) -> [T; 3] {
        let one = T::one();
        [self.nu * self.lambda, self.nu * (one - self.lambda), one - self.nu]
    }

    /// Greene-Aldrich column alone.
    pub fn first() -> Self {
        Self::new(T::one(), T::one())
    }

    /// Second column alone.
    pub fn second() -> Self {
        Self::new(T::zero(), T::one())
    }

    /// Pekeris column alone (λ is irrelevant).
    pub fn third() -> Self {
        Self::new(T::one(), T::zero())
    }
}

/// Three approximation columns sharing one basis.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CoeffMatrix<T> {
    pub columns: [Coeffs<T>; 3],
}

impl<T: Real> CoeffMatrix<T> {
    pub fn new(columns: [Coeffs<T>; 3]) -> Result<Self> {
        let m = Self { columns };
        m.basis()?;
        Ok(m)
    }

    pub fn basis(&self) -> Result<Basis> {
        let b = self.columns[0].basis;
        if self.columns.iter().any(|c| c.basis != b) {
            return Err(Error::Contract("coefficient columns mix MR and PT bases".into()));
        }
        Ok(b)
    }

    /// Blends the columns with the weights of `blend`.
    pub fn blend(&self, blend: Blend<T>) -> Result<Coeffs<T>> {
        let basis = self.basis()?;
        let w = blend.weights();
        let mut x = [T::zero(); 3];
        for (i, xi) in x.iter_mut().enumerate() {
            for (j, col) in self.columns.iter().enumerate() {
                *xi = *xi + col.as_array()[i] * w[j];
            }
        }
        Ok(Coeffs { x1: x[0], x2: x[1], x3: x[2], basis })
    }
}

/// Free-function form of [`CoeffMatrix::blend`].
pub fn blend<T: Real>(matrix: &CoeffMatrix<T>, blend: Blend<T>) -> Result<Coeffs<T>> {
    matrix.blend(blend)
}

fn horner<T: Real>(coeffs: &[f64], u: T) -> T {
    coeffs.iter().rev().fold(T::zero(), |acc, &c| acc * u + T::lit(c))
}

// Below this the closed forms lose ~u⁻⁴ ulps to cancellation.
const SERIES_SWITCH: f64 = 0.5;

/// Greene-Aldrich type MR coefficients `(1/12, 1, 1)`.
pub fn mr_greene<T: Real>() -> Coeffs<T> {
    Coeffs::mr(T::one() / T::lit(12.0), T::one(), T::one())
}

/// Variant without the constant term, `(0, 1, 1)`.
pub fn mr_greene_no_constant<T: Real>() -> Coeffs<T> {
    Coeffs::mr(T::zero(), T::one(), T::one())
}

/// Variant `(0, e^{1/b}, 1)`.
pub fn mr_greene_shifted<T: Real>(b: T) -> Coeffs<T> {
    Coeffs::mr(T::zero(), (T::one() / b).exp(), T::one())
}

/// Pekeris-type MR coefficients expanded about `r₀ = u b`.
pub fn mr_pekeris<T: Real>(u: T) -> Result<Coeffs<T>> {
    if !(u > T::zero()) || !u.is_finite() {
        return domain(format!("MR Pekeris expansion point u = r0/b must be > 0, got {u}"));
    }
    if u < T::lit(SERIES_SWITCH) {
        return Ok(Coeffs::mr(horner(&series::MR_X12_SERIES, u), horner(&series::MR_X22_SERIES, u), horner(&series::MR_X32_SERIES, u)));
    }
    let (two, three) = (T::lit(2.0), T::lit(3.0));
    let s0 = (-u).exp();
    let oms = -(-u).exp_m1();
    let u4 = u.powi(4);
    let x1 = (three - three * u + u * u + (two * u - T::lit(6.0)) * s0 + (u + three) * s0 * s0) / u4;
    let x2 = two * oms * oms / u4 * (three + u + (two * u - three) / s0);
    let x3 = -(oms * oms * oms) / u4 * ((three + u) / s0 + (u - three) / (s0 * s0));
    Ok(Coeffs::mr(x1, x2, x3))
}

fn mr_eps<T: Real>(p: &MrParams<T>) -> Result<(T, T, T)> {
    p.validate()?;
    if !p.has_minimum() {
        return domain(format!(
            "Pekeris expansion at the MR minimum needs A > 0 and alpha outside [0, 1] (A = {}, alpha = {})",
            p.a, p.alpha
        ));
    }
    let eps1 = p.alpha * (p.alpha - T::one());
    let ratio = T::lit(2.0) * eps1 / p.a;
    let eps2 = T::one() + ratio;
    let log_eps2 = ratio.ln_1p();
    if log_eps2.abs() < T::lit(1e-12) {
        return domain(format!("ln(eps2) = {log_eps2} too close to zero"));
    }
    Ok((eps1, eps2, log_eps2))
}

/// Pekeris-type MR coefficients at the potential minimum, written in terms of
/// `ε₁ = α(α−1)`, `ε₂ = 1 + 2ε₁/A`, `ε₃ = Aε₂`.
///
/// Coincides with [`mr_pekeris`] at `u = ln ε₂`. The commonly quoted form of
/// these coefficients differs from this one in two places; see
/// [`mr_pekeris_alt_printed`].
pub fn mr_pekeris_alt<T: Real>(p: &MrParams<T>) -> Result<Coeffs<T>> {
    let (eps1, eps2, u) = mr_eps(p)?;
    if u < T::lit(1e-2) {
        return mr_pekeris(u);
    }
    let a = p.a;
    let eps3 = a * eps2;
    let den = eps3 * eps3 * u.powi(4);
    let (three, four) = (T::lit(3.0), T::lit(4.0));
    let x1 = (T::lit(12.0) * eps1 * eps1 - four * eps1 * (T::lit(2.0) * a + three * eps1) * u + eps3 * eps3 * u * u) / den;
    let x2 = T::lit(8.0) * eps1 * eps1 * (-T::lit(6.0) * eps1 + (three * a + four * eps1) * u) / (a * den);
    let x3 = -T::lit(16.0) * eps1.powi(3) * (-three * eps1 + (a + eps1) * u) / (a * a * den);
    Ok(Coeffs::mr(x1, x2, x3))
}

/// The MR minimum-point coefficients exactly as usually printed: carries an
/// extra `1/b²` (they are coefficients of 1/r² itself, not of b²/r²) and uses
/// `ε₃ = A + 2ε₁` where the expansion gives `A + ε₁` in x₃.
pub fn mr_pekeris_alt_printed<T: Real>(p: &MrParams<T>) -> Result<Coeffs<T>> {
    let (eps1, eps2, u) = mr_eps(p)?;
    let a = p.a;
    let eps3 = a * eps2;
    let eps4 = p.b * eps3;
    let den = eps4 * eps4 * u.powi(4);
    let (three, four) = (T::lit(3.0), T::lit(4.0));
    let x1 = (T::lit(12.0) * eps1 * eps1 - four * eps1 * (T::lit(2.0) * a + three * eps1) * u + eps3 * eps3 * u * u) / den;
    let x2 = T::lit(8.0) * eps1 * eps1 * (-T::lit(6.0) * eps1 + (three * a + four * eps1) * u) / (a * den);
    let x3 = -T::lit(16.0) * eps1.powi(3) * (-three * eps1 + eps3 * u) / (a * a * den);
    Ok(Coeffs::mr(x1, x2, x3))
}

/// First PT Greene-Aldrich set `(0, 1/2, 1/2)`.
pub fn pt_greene1<T: Real>() -> Coeffs<T> {
    let h = T::lit(0.5);
    Coeffs::pt(T::zero(), h, h)
}

/// Second PT Greene-Aldrich set `(1/12, 1/2, 1/2)`.
pub fn pt_greene2<T: Real>() -> Coeffs<T> {
    let h = T::lit(0.5);
    Coeffs::pt(T::one() / T::lit(12.0), h, h)
}

/// Pekeris-type PT coefficients about `r₀ = u/α`.
pub fn pt_pekeris<T: Real>(u: T) -> Result<Coeffs<T>> {
    if !(u > T::zero()) || !u.is_finite() {
        return domain(format!("PT Pekeris expansion point u = alpha*r0 must be > 0, got {u}"));
    }
    if u < T::lit(SERIES_SWITCH) {
        return Ok(Coeffs::pt(horner(&series::PT_X13_SERIES, u), horner(&series::PT_X23_SERIES, u), horner(&series::PT_X33_SERIES, u)));
    }
    let two = T::lit(2.0);
    let three = T::lit(3.0);
    let u4 = u.powi(4);
    let coth = T::one() / u.tanh();
    let csch = T::one() / u.sinh();
    let x1 = (three + u * u - three * u * coth) / u4;
    let x2 = (T::lit(18.0) + T::lit(6.0) * (two * u).cosh() - T::lit(23.0) * u * coth - u * (three * u).cosh() * csch) / (T::lit(4.0) * u4);
    let x3 = (T::lit(4.0) * u + two * u * (two * u).cosh() - three * (two * u).sinh()) * csch / u4;
    Ok(Coeffs::pt(x1, x2, x3))
}

/// The three MR columns: Greene-Aldrich, Pekeris about `r0` (default: the
/// minimum), Pekeris at the minimum in ε form.
pub fn mr_matrix<T: Real>(p: &MrParams<T>, r0: Option<T>) -> Result<CoeffMatrix<T>> {
    let r0 = match r0 {
        Some(r) => r,
        None => mr_minimum(p)?,
    };
    CoeffMatrix::new([mr_greene(), mr_pekeris(r0 / p.b)?, mr_pekeris_alt(p)?])
}

/// The three PT columns: two Greene-Aldrich sets and Pekeris about `r0`
/// (default: the minimum).
pub fn pt_matrix<T: Real>(p: &PtParams<T>, r0: Option<T>) -> Result<CoeffMatrix<T>> {
    let r0 = match r0 {
        Some(r) => r,
        None => pt_minimum(p)?,
    };
    CoeffMatrix::new([pt_greene1(), pt_greene2(), pt_pekeris(p.alpha * r0)?])
}

/// Default coefficient matrix for either potential.
pub fn matrix_for<T: Real>(pot: &Potential<T>, r0: Option<T>) -> Result<CoeffMatrix<T>> {
    match pot {
        Potential::ManningRosen(p) => mr_matrix(p, r0),
        Potential::PoschlTeller(p) => pt_matrix(p, r0),
    }
}

/// Approximated 1/r² at `r`.
pub fn f_centrifugal<T: Real>(coeffs: &Coeffs<T>, pot: &Potential<T>, r: T) -> Result<T> {
    if !(r > T::zero()) || !r.is_finite() {
        return domain(format!("radius must be finite and > 0, got {r}"));
    }
    match (coeffs.basis, pot) {
        (Basis::ManningRosen, Potential::ManningRosen(p)) => {
            let s = (-r / p.b).exp();
            let q = s / -(-r / p.b).exp_m1();
            Ok((coeffs.x1 + coeffs.x2 * q + coeffs.x3 * q * q) / (p.b * p.b))
        }
        (Basis::PoschlTeller, Potential::PoschlTeller(p)) => {
            let x = p.alpha * r;
            let sh2 = x.sinh().powi(2);
            Ok(p.alpha * p.alpha * (coeffs.x1 + coeffs.x2 / sh2 + coeffs.x3 * x.cosh() / sh2))
        }
        _ => Err(Error::Contract("coefficient basis does not match the potential".into())),
    }
}

/// Checks the MR validity conditions on already blended coefficients:
/// `(2α−1)² + 4l(l+1)x₃ > 0` and `x₁ > 0`.
pub fn check_mr<T: Real>(c: &Coeffs<T>, p: &MrParams<T>, l: u32) -> Result<()> {
    if c.basis != Basis::ManningRosen {
        return Err(Error::Contract("MR validity check on PT coefficients".into()));
    }
    let ll = T::int(l as i64 * (l as i64 + 1));
    let two_am1 = T::lit(2.0) * p.alpha - T::one();
    let first = two_am1 * two_am1 + T::lit(4.0) * ll * c.x3;
    if !(first > T::zero()) {
        return Err(Error::ApproximationInvalid { l, reason: format!("(2 alpha - 1)^2 + 4 l(l+1) x3 = {first} is not > 0") });
    }
    if !(c.x1 > T::zero()) {
        return Err(Error::ApproximationInvalid { l, reason: format!("x1 = {} is not > 0", c.x1) });
    }
    Ok(())
}

/// Checks the PT validity conditions on already blended coefficients:
/// `2μ(ξ₁−ξ₂) + α²ħ²l(l+1)(x₂+x₃) > 0` and `2x₁ − x₂ + x₃ ≥ 0`.
///
/// The second quantity enters the wavefunction exponent as
/// `a² = 1 − 8μE/(α²ħ²) + 2l(l+1)(2x₁ − x₂ + x₃)`, which stays positive for
/// any bound level when it vanishes, so the boundary is accepted. The first
/// Greene-Aldrich set sits exactly on it.
pub fn check_pt<T: Real>(c: &Coeffs<T>, p: &PtParams<T>, l: u32) -> Result<()> {
    if c.basis != Basis::PoschlTeller {
        return Err(Error::Contract("PT validity check on MR coefficients".into()));
    }
    let ll = T::int(l as i64 * (l as i64 + 1));
    let two = T::lit(2.0);
    let first = two * p.mu * (p.xi1 - p.xi2) + p.alpha * p.alpha * p.hbar * p.hbar * ll * (c.x2 + c.x3);
    if !(first > T::zero()) {
        return Err(Error::ApproximationInvalid {
            l,
            reason: format!("2 mu (xi1 - xi2) + alpha^2 hbar^2 l(l+1)(x2 + x3) = {first} is not > 0"),
        });
    }
    let second = two * c.x1 - c.x2 + c.x3;
    if !(second >= T::zero()) {
        return Err(Error::ApproximationInvalid { l, reason: format!("2 x1 - x2 + x3 = {second} is negative") });
    }
    Ok(())
}

/// Whether the blended MR approximation is well defined for `l`.
pub fn validate_mr_with<T: Real>(matrix: &CoeffMatrix<T>, p: &MrParams<T>, l: u32, blend: Blend<T>) -> bool {
    matrix.blend(blend).is_ok_and(|c| check_mr(&c, p, l).is_ok())
}

/// [`validate_mr_with`] on the default matrix. False if the matrix itself
/// cannot be built.
pub fn validate_mr<T: Real>(p: &MrParams<T>, l: u32, blend: Blend<T>) -> bool {
    mr_matrix(p, None).is_ok_and(|m| validate_mr_with(&m, p, l, blend))
}

/// Whether the blended PT approximation is well defined for `l`.
pub fn validate_pt_with<T: Real>(matrix: &CoeffMatrix<T>, p: &PtParams<T>, l: u32, blend: Blend<T>) -> bool {
    matrix.blend(blend).is_ok_and(|c| check_pt(&c, p, l).is_ok())
}

/// [`validate_pt_with`] on the default matrix.
pub fn validate_pt<T: Real>(p: &PtParams<T>, l: u32, blend: Blend<T>) -> bool {
    pt_matrix(p, None).is_ok_and(|m| validate_pt_with(&m, p, l, blend))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn table1() -> MrParams<f64> {
        MrParams::new(80.0, 1.5, 40.0)
    }

    fn table2() -> PtParams<f64> {
        PtParams::new(4.0, 2.0, 0.05)
    }

    #[test]
    fn fixed_sets() {
        assert_eq!(mr_greene::<f64>().as_array(), [1.0 / 12.0, 1.0, 1.0]);
        assert_eq!(pt_greene1::<f64>().as_array(), [0.0, 0.5, 0.5]);
        assert_eq!(pt_greene2::<f64>().as_array(), [1.0 / 12.0, 0.5, 0.5]);
        assert_eq!(pt_greene1::<f64>().basis, Basis::PoschlTeller);
        assert_eq!(mr_greene_no_constant::<f64>().as_array(), [0.0, 1.0, 1.0]);
        let g1 = pt_greene1::<f64>();
        let g2 = pt_greene2::<f64>();
        assert_eq!((g1.x2, g1.x3), (g2.x2, g2.x3));
        assert_ne!(g1.x1, g2.x1);
    }

    #[test]
    fn blend_selects_columns() {
        let m = mr_matrix(&table1(), None).unwrap();
        assert_eq!(m.blend(Blend::first()).unwrap(), m.columns[0]);
        assert_eq!(m.blend(Blend::second()).unwrap(), m.columns[1]);
        assert_eq!(m.blend(Blend::new(0.7, 0.0)).unwrap(), m.columns[2]);
    }

    #[test]
    fn mixed_basis_rejected() {
        let cols = [mr_greene::<f64>(), pt_greene1(), pt_greene2()];
        assert!(matches!(CoeffMatrix::new(cols), Err(Error::Contract(_))));
        let bad = CoeffMatrix { columns: cols };
        assert!(bad.blend(Blend::first()).is_err());
    }

    #[test]
    fn f_centrifugal_rejects_wrong_basis_and_radius() {
        let pot = Potential::ManningRosen(table1());
        assert!(matches!(f_centrifugal(&pt_greene1(), &pot, 1.0), Err(Error::Contract(_))));
        assert!(f_centrifugal(&mr_greene(), &pot, 0.0).is_err());
    }

    #[test]
    fn series_and_closed_form_meet() {
        // both branches evaluated right at the switch
        let u = SERIES_SWITCH;
        for (s, c) in [(mr_pekeris(u - 1e-12).unwrap(), mr_pekeris(u).unwrap()), (pt_pekeris(u - 1e-12).unwrap(), pt_pekeris(u).unwrap())] {
            for (a, b) in s.as_array().iter().zip(c.as_array()) {
                assert_relative_eq!(*a, b, max_relative = 1e-11);
            }
        }
    }

    #[test]
    fn pekeris_limits_at_small_u() {
        let c = pt_pekeris(1e-6_f64).unwrap();
        assert_relative_eq!(c.x1, 1.0 / 15.0, max_relative = 1e-10);
        assert_relative_eq!(c.x2, 7.0 / 15.0, max_relative = 1e-10);
        assert_relative_eq!(c.x3, 8.0 / 15.0, max_relative = 1e-10);
        let c = mr_pekeris(1e-6_f64).unwrap();
        assert_relative_eq!(c.x1, 1.0 / 12.0, max_relative = 1e-10);
        assert_relative_eq!(c.x2, 1.0, max_relative = 1e-10);
        assert_relative_eq!(c.x3, 1.0, max_relative = 1e-10);
    }

    #[test]
    fn pekeris_domain() {
        assert!(mr_pekeris(0.0_f64).is_err());
        assert!(pt_pekeris(-1.0_f64).is_err());
        assert!(mr_pekeris_alt(&MrParams::new(1.0, 0.5, 1.0)).is_err());
        // A huge compared to alpha(alpha-1): ln(eps2) below the guard
        assert!(mr_pekeris_alt(&MrParams::new(1e15, 1.5, 1.0)).is_err());
    }

    #[test]
    fn alt_agrees_with_pekeris_at_log_eps2() {
        for p in [table1(), MrParams::new(0.5, 2.5, 3.0), MrParams::new(40.0, 1.5, 20.0)] {
            let u = (1.0 + 2.0 * p.alpha * (p.alpha - 1.0) / p.a).ln();
            let a = mr_pekeris_alt(&p).unwrap();
            let b = mr_pekeris(u).unwrap();
            for (x, y) in a.as_array().iter().zip(b.as_array()) {
                assert_relative_eq!(*x, y, max_relative = 5e-9);
            }
        }
    }

    #[test]
    fn printed_alt_is_rescaled_and_differs_in_x3() {
        let p = table1();
        let printed = mr_pekeris_alt_printed(&p).unwrap();
        let fixed = mr_pekeris_alt(&p).unwrap();
        let b2 = p.b * p.b;
        assert_relative_eq!(printed.x1 * b2, fixed.x1, max_relative = 1e-8);
        assert_relative_eq!(printed.x2 * b2, fixed.x2, max_relative = 1e-10);
        assert!((printed.x3 * b2 / fixed.x3 - 1.0).abs() > 1e-2);
    }

    #[test]
    fn validity_table_blends() {
        let blends = [(1.0, 1.0), (0.0, 1.0), (1.0, 0.0), (-1.5, 1.0), (-2.5, 1.0)];
        for l in 0..=4 {
            for &(la, nu) in &blends {
                assert!(validate_mr(&table1(), l, Blend::new(la, nu)));
            }
        }
        let blends = [(1.0, 1.0), (0.0, 1.0), (1.0, 0.0), (0.5, -1.0), (0.5, -2.0)];
        for l in 0..=4 {
            for &(la, nu) in &blends {
                assert!(validate_pt(&table2(), l, Blend::new(la, nu)));
            }
        }
    }

    #[test]
    fn validity_failures() {
        // alpha = 1/2 kills the first MR condition at l = 0
        let p = MrParams::new(80.0, 1.5, 40.0);
        let m = mr_matrix(&p, None).unwrap();
        let half = MrParams { alpha: 0.5, ..p };
        assert!(!validate_mr_with(&m, &half, 0, Blend::first()));
        // x1 = x12 + lambda (x11 - x12) < 0 for very negative lambda
        let c = m.blend(Blend::new(-2e4, 1.0)).unwrap();
        assert!(c.x1 < 0.0);
        assert!(!validate_mr(&p, 1, Blend::new(-2e4, 1.0)));
        // xi1 = xi2, l = 0: first PT condition is 0 > 0
        let q = PtParams::new(4.0, 4.0, 0.05);
        let mq = pt_matrix(&table2(), None).unwrap();
        assert!(!validate_pt_with(&mq, &q, 0, Blend::first()));
    }
}
