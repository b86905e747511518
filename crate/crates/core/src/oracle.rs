//! Numerical bound states of the radial equation
//! `R'' + [2μ(E − V)/ħ² − c(r)] R = 0`, where `c(r)` is either the exact
//! centrifugal term `l(l+1)/r²` or an approximation of it.
//!
//! The equation is integrated with Numerov's method on a uniform grid in
//! `x = ln r` after substituting `R = √r y`, which gives
//! `y'' = [1/4 + r²(2μV/ħ² + c) − r² 2μE/ħ²] y`. Eigenvalues are bracketed by
//! counting nodes of the outward solution and refined with an Illinois
//! iteration on the normalized Wronskian between the outward and inward
//! solutions at the outer classical turning point.

use std::sync::Arc;

use crate::centrifugal::{f_centrifugal, Coeffs};
use crate::error::{domain, Error, Result};
use crate::potentials::Potential;
use crate::scalar::Real;

type Func<T> = Arc<dyn Fn(T) -> T + Send + Sync>;

/// Default number of grid points.
pub const DEFAULT_POINTS: usize = 20_000;

/// A radial eigenvalue problem on `[r_min, r_max]` with `R = 0` at both ends.
#[derive(Clone)]
pub struct RadialProblem<T> {
    pub potential: Func<T>,
    /// The full centrifugal term, `l(l+1)/r²` or its approximation.
    pub centrifugal: Func<T>,
    pub hbar: T,
    pub mu: T,
    pub r_min: T,
    pub r_max: T,
    pub grid_points: usize,
}

impl<T: Real> std::fmt::Debug for RadialProblem<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("RadialProblem")
            .field("hbar", &self.hbar)
            .field("mu", &self.mu)
            .field("r_min", &self.r_min)
            .field("r_max", &self.r_max)
            .field("grid_points", &self.grid_points)
            .finish()
    }
}

/// Which centrifugal term a problem built from a [`Potential`] uses.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Centrifugal<T> {
    Exact,
    Approximated(Coeffs<T>),
}

impl<T: Real> RadialProblem<T> {
    pub fn new(
        potential: impl Fn(T) -> T + Send + Sync + 'static,
        centrifugal: impl Fn(T) -> T + Send + Sync + 'static,
        hbar: T,
        mu: T,
        r_min: T,
        r_max: T,
        grid_points: usize,
    ) -> Result<Self> {
        let p = Self { potential: Arc::new(potential), centrifugal: Arc::new(centrifugal), hbar, mu, r_min, r_max, grid_points };
        p.check()?;
        Ok(p)
    }

    /// Problem for one of the two potentials with the chosen centrifugal term.
    /// The range starts at `10⁻⁶` natural lengths and ends at `r_max`.
    pub fn for_potential(pot: &Potential<T>, l: u32, term: Centrifugal<T>, r_max: T) -> Result<Self> {
        let ll = T::int(l as i64 * (l as i64 + 1));
        let pot_v = *pot;
        let potential = move |r: T| pot_v.value(r).unwrap_or(T::nan());
        let r_min = T::lit(1e-6) * pot.length_scale();
        match term {
            Centrifugal::Exact => Self::new(potential, move |r: T| ll / (r * r), pot.hbar(), pot.mu(), r_min, r_max, DEFAULT_POINTS),
            Centrifugal::Approximated(c) => {
                f_centrifugal(&c, pot, pot.length_scale())?;
                Self::new(
                    potential,
                    move |r: T| ll * f_centrifugal(&c, &pot_v, r).unwrap_or(T::nan()),
                    pot.hbar(),
                    pot.mu(),
                    r_min,
                    r_max,
                    DEFAULT_POINTS,
                )
            }
        }
    }

    fn check(&self) -> Result<()> {
        if !(self.r_min > T::zero() && self.r_max > self.r_min && self.r_max.is_finite()) {
            return domain(format!("need 0 < r_min < r_max, got [{}, {}]", self.r_min, self.r_max));
        }
        if self.grid_points < 1000 {
            return domain(format!("grid needs at least 1000 points, got {}", self.grid_points));
        }
        if !(self.hbar > T::zero() && self.mu > T::zero()) {
            return domain("hbar and mu must be > 0");
        }
        Ok(())
    }

    /// Same problem on `[r_min, r_max]` with the grid spacing in `ln r` kept.
    pub fn with_r_max(&self, r_max: T) -> Self {
        let old = (self.r_max / self.r_min).ln();
        let new = (r_max / self.r_min).ln();
        let pts = (T::int(self.grid_points as i64 - 1) * new / old).ceil().to_usize().unwrap_or(self.grid_points) + 1;
        Self { r_max, grid_points: pts.max(1000), ..self.clone() }
    }

    pub fn with_points(&self, grid_points: usize) -> Self {
        Self { grid_points, ..self.clone() }
    }

    /// `2μ/ħ²`.
    fn kfac(&self) -> T {
        T::lit(2.0) * self.mu / (self.hbar * self.hbar)
    }

    /// Smallest value of `V + ħ²c/(2μ)` on the grid.
    pub fn effective_minimum(&self) -> T {
        let g = Grid::build(self);
        g.base.iter().zip(&g.slope).map(|(&a, &s)| (a - T::lit(0.25)) / s).fold(T::infinity(), |m, v| if v < m { v } else { m })
    }
}

/// Result of an eigenvalue search.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenResult<T> {
    /// Richardson-extrapolated eigenvalue.
    pub energy: T,
    /// Eigenvalue on the base grid and on the grid with twice the points.
    pub energy_coarse: T,
    pub energy_fine: T,
    pub nodes: u32,
    /// Normalized Wronskian mismatch at the matching point (fine grid).
    pub residual: T,
    pub converged: bool,
}

impl<T: Real> EigenResult<T> {
    /// Discretization error estimate, `|E_fine − E_coarse|/15`.
    pub fn error_estimate(&self) -> T {
        (self.energy_fine - self.energy_coarse).abs() / T::lit(15.0)
    }
}

struct Grid<T> {
    h: T,
    r: Vec<T>,
    /// `1/4 + r²(2μV/ħ² + c)`
    base: Vec<T>,
    /// `r² 2μ/ħ²`
    slope: Vec<T>,
    /// exponent of `r` in `y` near the origin
    seed: T,
}

impl<T: Real> Grid<T> {
    fn build(p: &RadialProblem<T>) -> Self {
        let n = p.grid_points;
        let x0 = p.r_min.ln();
        let h = (p.r_max.ln() - x0) / T::int(n as i64 - 1);
        let k = p.kfac();
        let mut r = Vec::with_capacity(n);
        let mut base = Vec::with_capacity(n);
        let mut slope = Vec::with_capacity(n);
        for i in 0..n {
            let ri = (x0 + h * T::int(i as i64)).exp();
            let r2 = ri * ri;
            base.push(T::lit(0.25) + r2 * (k * (p.potential)(ri) + (p.centrifugal)(ri)));
            slope.push(r2 * k);
            r.push(ri);
        }
        // R ~ r^s with s(s−1) = lim r²(2μV/ħ² + c); y = R/√r ~ r^{s−1/2}
        let c = base[0] - T::lit(0.25);
        let disc = T::lit(0.25) + c;
        let seed = if disc > T::zero() { disc.sqrt() } else { T::zero() };
        Self { h, r, base, slope, seed }
    }

    fn len(&self) -> usize {
        self.r.len()
    }

    fn g(&self, e: T) -> Vec<T> {
        self.base.iter().zip(&self.slope).map(|(&a, &s)| a - e * s).collect()
    }

    /// Outer classical turning point: last index where `g < 0`, kept away
    /// from the ends.
    fn turning_point(&self, g: &[T]) -> usize {
        let n = g.len();
        let idx = g
            .iter()
            .rposition(|&v| v < T::zero())
            .unwrap_or_else(|| g.iter().enumerate().fold((0, T::infinity()), |(bi, bv), (i, &v)| if v < bv { (i, v) } else { (bi, bv) }).0);
        idx.clamp(2, n - 3)
    }
}

fn big<T: Real>() -> T {
    T::max_value().sqrt().sqrt()
}

/// Numerov step coefficients `w_i = 1 − h² g_i/12`.
fn weights<T: Real>(g: &[T], h: T) -> Vec<T> {
    let c = h * h / T::lit(12.0);
    g.iter().map(|&v| T::one() - c * v).collect()
}

fn numerov_next<T: Real>(w: &[T], y: (T, T), i_prev: usize, i: usize, i_next: usize) -> T {
    // w_{i+1} y_{i+1} = (12 − 10 w_i) y_i − w_{i−1} y_{i−1}
    ((T::lit(12.0) - T::lit(10.0) * w[i]) * y.1 - w[i_prev] * y.0) / w[i_next]
}

/// Outward integration over the whole grid; returns the number of sign
/// changes of `y` on `(r_min, r_max]`.
fn count_nodes<T: Real>(grid: &Grid<T>, e: T) -> u32 {
    let g = grid.g(e);
    let w = weights(&g, grid.h);
    let mut y0 = (-grid.seed * grid.h).exp();
    let mut y1 = T::one();
    let lim = big::<T>();
    let mut nodes = 0;
    for i in 1..grid.len() - 1 {
        let y2 = numerov_next(&w, (y0, y1), i - 1, i, i + 1);
        if (y1 > T::zero() && y2 <= T::zero()) || (y1 < T::zero() && y2 >= T::zero()) {
            nodes += 1;
        }
        y0 = y1;
        y1 = y2;
        if y1.abs() > lim {
            y0 = y0 / lim;
            y1 = y1 / lim;
        }
    }
    nodes
}

/// Outward solution on `0..=stop`, rescaled to stay finite.
fn outward<T: Real>(w: &[T], seed_ratio: T, stop: usize) -> Vec<T> {
    let lim = big::<T>();
    let mut y = Vec::with_capacity(stop + 1);
    y.push(seed_ratio);
    y.push(T::one());
    for i in 1..stop {
        let next = numerov_next(w, (y[i - 1], y[i]), i - 1, i, i + 1);
        y.push(next);
        if next.abs() > lim {
            for v in y.iter_mut() {
                *v = *v / lim;
            }
        }
    }
    y
}

/// Inward solution on `start..n`, with `y = 0` at the last point.
fn inward<T: Real>(w: &[T], start: usize) -> Vec<T> {
    let n = w.len();
    let lim = big::<T>();
    let mut y = vec![T::zero(); n];
    y[n - 1] = T::zero();
    y[n - 2] = T::one() / lim;
    for i in (start + 1..n - 1).rev() {
        y[i - 1] = numerov_next(w, (y[i + 1], y[i]), i + 1, i, i - 1);
        if y[i - 1].abs() > lim {
            for v in y[i - 1..].iter_mut() {
                *v = *v / lim;
            }
        }
    }
    y
}

/// Normalized Wronskian of outward and inward solutions at `m`.
fn defect<T: Real>(grid: &Grid<T>, e: T, m: usize) -> T {
    let w = weights(&grid.g(e), grid.h);
    let yo = outward(&w, (-grid.seed * grid.h).exp(), m + 1);
    let yi = inward(&w, m);
    let wr = yo[m] * yi[m + 1] - yo[m + 1] * yi[m];
    wr / (yo[m].hypot(yo[m + 1]) * yi[m].hypot(yi[m + 1]))
}

/// Eigenvalue with `n` nodes on one grid, given `lo < E < hi`.
fn solve_on_grid<T: Real>(grid: &Grid<T>, n: u32, lo: T, hi: T) -> Result<(T, T)> {
    let (mut lo, mut hi) = (lo, hi);
    let (nl, nh) = (count_nodes(grid, lo), count_nodes(grid, hi));
    if nl > n || nh <= n {
        return Err(Error::NotFound(format!("bracket [{lo}, {hi}] holds eigenvalues {nl}..{nh}, not index {n}")));
    }
    let tol = T::lit(64.0) * T::epsilon() * (T::one() + lo.abs().max(hi.abs()));
    // isolate the n-th eigenvalue, then shrink a little further
    let mut extra = 8;
    for _ in 0..200 {
        let mid = T::lit(0.5) * (lo + hi);
        if count_nodes(grid, mid) <= n {
            lo = mid;
        } else {
            hi = mid;
        }
        let isolated = count_nodes(grid, lo) == n && count_nodes(grid, hi) == n + 1;
        if isolated {
            if extra == 0 {
                break;
            }
            extra -= 1;
        }
        if hi - lo < tol {
            break;
        }
    }
    let mid = T::lit(0.5) * (lo + hi);
    let m = grid.turning_point(&grid.g(mid));
    let (mut flo, mut fhi) = (defect(grid, lo, m), defect(grid, hi, m));
    if flo * fhi > T::zero() {
        // no usable sign change: finish by node-count bisection alone
        while hi - lo > tol {
            let mid = T::lit(0.5) * (lo + hi);
            if count_nodes(grid, mid) <= n {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let e = T::lit(0.5) * (lo + hi);
        return Ok((e, defect(grid, e, m)));
    }
    // Illinois
    let mut side = 0i8;
    let mut e = mid;
    let mut fe = defect(grid, e, m);
    for _ in 0..200 {
        e = (lo * fhi - hi * flo) / (fhi - flo);
        if !(e > lo && e < hi) {
            e = T::lit(0.5) * (lo + hi);
        }
        fe = defect(grid, e, m);
        if fe == T::zero() {
            break;
        }
        if fe * flo > T::zero() {
            lo = e;
            flo = fe;
            if side == -1 {
                fhi = fhi / T::lit(2.0);
            }
            side = -1;
        } else {
            hi = e;
            fhi = fe;
            if side == 1 {
                flo = flo / T::lit(2.0);
            }
            side = 1;
        }
        if hi - lo < tol {
            break;
        }
    }
    Ok((e, fe))
}

fn assemble<T: Real>(grid: &Grid<T>, e: T) -> Vec<T> {
    let g = grid.g(e);
    let w = weights(&g, grid.h);
    let m = grid.turning_point(&g);
    let yo = outward(&w, (-grid.seed * grid.h).exp(), m);
    let yi = inward(&w, m);
    let scale = if yi[m] != T::zero() { yo[m] / yi[m] } else { T::one() };
    let mut y = yo;
    y.extend(yi[m + 1..].iter().map(|&v| v * scale));
    y
}

fn normalized_radial<T: Real>(grid: &Grid<T>, e: T) -> Vec<(T, T)> {
    let y = assemble(grid, e);
    // R = √r y, ∫R² dr = ∫ r² y² dx (trapezoid on the uniform x grid)
    let f: Vec<T> = y.iter().zip(&grid.r).map(|(&v, &r)| r * r * v * v).collect();
    let n = f.len();
    let mut s = T::zero();
    for (i, &v) in f.iter().enumerate() {
        let wgt = if i == 0 || i == n - 1 { T::lit(0.5) } else { T::one() };
        s = s + wgt * v;
    }
    let norm = (s * grid.h).sqrt();
    // positive near the origin
    let first = y.iter().copied().find(|v| *v != T::zero()).unwrap_or(T::one());
    let sign = if first < T::zero() { -T::one() } else { T::one() };
    grid.r.iter().zip(&y).map(|(&r, &v)| (r, sign * r.sqrt() * v / norm)).collect()
}

/// Sign changes of a sampled function, ignoring samples below `floor` in
/// magnitude.
pub fn count_sign_changes<T: Real>(values: impl IntoIterator<Item = T>, floor: T) -> u32 {
    let mut last = T::zero();
    let mut count = 0;
    for v in values {
        if v.abs() <= floor {
            continue;
        }
        if last != T::zero() && (v > T::zero()) != (last > T::zero()) {
            count += 1;
        }
        last = v;
    }
    count
}

/// Eigenvalue with `n_r` nodes inside `bracket`, on the problem's grid and on
/// one with twice the points, Richardson-extrapolated.
pub fn solve_bound<T: Real>(problem: &RadialProblem<T>, n_r: u32, bracket: (T, T)) -> Result<EigenResult<T>> {
    problem.check()?;
    let (lo, hi) = bracket;
    if !(lo < hi) {
        return domain(format!("empty bracket [{lo}, {hi}]"));
    }
    let coarse = Grid::build(problem);
    let fine = Grid::build(&problem.with_points(2 * problem.grid_points - 1));
    let (e1, _) = solve_on_grid(&coarse, n_r, lo, hi)?;
    let (e2, residual) = solve_on_grid(&fine, n_r, lo, hi)?;
    let nodes = eigenfunction_nodes(&normalized_radial(&fine, e2));
    if nodes != n_r {
        return Err(Error::WrongState { expected: n_r, found: nodes });
    }
    let energy = e2 + (e2 - e1) / T::lit(15.0);
    let converged = residual.abs() < T::lit(1e-10).max(T::lit(1e4) * T::epsilon());
    Ok(EigenResult { energy, energy_coarse: e1, energy_fine: e2, nodes, residual, converged })
}

/// Brackets each holding exactly one eigenvalue in `(e_min, e_max)`.
pub fn scan_spectrum<T: Real>(problem: &RadialProblem<T>, e_min: T, e_max: T, steps: usize) -> Vec<(T, T)> {
    if !(e_min < e_max) || steps == 0 || problem.check().is_err() {
        return Vec::new();
    }
    let grid = Grid::build(problem);
    let mut out = Vec::new();
    let de = (e_max - e_min) / T::int(steps as i64);
    let mut prev_e = e_min;
    let mut prev_n = count_nodes(&grid, e_min);
    for k in 1..=steps {
        let e = if k == steps { e_max } else { e_min + de * T::int(k as i64) };
        let n = count_nodes(&grid, e);
        split(&grid, prev_e, prev_n, e, n, 0, &mut out);
        prev_e = e;
        prev_n = n;
    }
    out
}

fn split<T: Real>(grid: &Grid<T>, lo: T, nlo: u32, hi: T, nhi: u32, depth: u32, out: &mut Vec<(T, T)>) {
    if nhi <= nlo {
        return;
    }
    if nhi == nlo + 1 || depth > 60 {
        out.push((lo, hi));
        return;
    }
    let mid = T::lit(0.5) * (lo + hi);
    let nm = count_nodes(grid, mid);
    split(grid, lo, nlo, mid, nm, depth + 1, out);
    split(grid, mid, nm, hi, nhi, depth + 1, out);
}

/// Normalized eigenfunction samples `(r, R(r))` at energy `e` on the
/// problem's grid.
pub fn eigenfunction<T: Real>(problem: &RadialProblem<T>, e: T) -> Result<Vec<(T, T)>> {
    problem.check()?;
    Ok(normalized_radial(&Grid::build(problem), e))
}

/// Nodes of a sampled eigenfunction.
pub fn eigenfunction_nodes<T: Real>(wave: &[(T, T)]) -> u32 {
    let peak = wave.iter().fold(T::zero(), |m, &(_, v)| m.max(v.abs()));
    count_sign_changes(wave.iter().map(|&(_, v)| v), peak * T::lit(1e-10))
}

/// Eigenvalue with `n_r` nodes for a potential, with the range chosen
/// automatically: `r_max` is grown until the potential is negligible
/// against the level, the tail has decayed, and the eigenvalue moves by less
/// than `1e-10` on further extension.
pub fn solve_state<T: Real>(pot: &Potential<T>, l: u32, term: Centrifugal<T>, n_r: u32) -> Result<EigenResult<T>> {
    let ls = pot.length_scale();
    let mut problem = RadialProblem::for_potential(pot, l, term, T::lit(60.0) * ls)?;
    let mut last: Option<EigenResult<T>> = None;
    for _ in 0..12 {
        let vmin = problem.effective_minimum();
        if !(vmin < T::zero()) {
            return Err(Error::NotFound("effective potential has no well".into()));
        }
        let hi = vmin.abs() * T::lit(-1e-12);
        let res = solve_bound(&problem, n_r, (vmin, hi))?;
        let e = res.energy;
        let kappa = (T::lit(2.0) * pot.mu() * e.abs()).sqrt() / pot.hbar();
        // range needed by the tail and by the potential
        let mut need = T::lit(45.0) / kappa;
        let mut r = ls;
        while r < T::lit(1e7) * ls {
            if pot.value(r).map(|v| v.abs() < T::lit(1e-12) * e.abs()).unwrap_or(false) {
                break;
            }
            r = r * T::lit(1.25);
        }
        need = need.max(r);
        if problem.r_max < need {
            problem = problem.with_r_max(need * T::lit(1.1));
            last = Some(res);
            continue;
        }
        if let Some(prev) = last {
            if (prev.energy - e).abs() < T::lit(1e-10) {
                return Ok(res);
            }
        }
        last = Some(res);
        problem = problem.with_r_max(problem.r_max * T::lit(1.5));
    }
    last.ok_or_else(|| Error::NotFound("no eigenvalue".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn oscillator(l: u32) -> RadialProblem<f64> {
        let ll = (l * (l + 1)) as f64;
        RadialProblem::new(|r: f64| 0.5 * r * r, move |r: f64| ll / (r * r), 1.0, 1.0, 1e-6, 12.0, DEFAULT_POINTS).unwrap()
    }

    #[test]
    fn harmonic_oscillator_levels() {
        let p = oscillator(0);
        let res = solve_bound(&p, 0, (0.1, 2.5)).unwrap();
        assert_relative_eq!(res.energy, 1.5, epsilon = 1e-8);
        assert!(res.converged);
        let res = solve_bound(&oscillator(2), 1, (0.1, 8.0)).unwrap();
        assert_relative_eq!(res.energy, 5.5, epsilon = 1e-8);
        assert_eq!(res.nodes, 1);
    }

    #[test]
    fn bracket_errors() {
        let p = oscillator(0);
        assert!(matches!(solve_bound(&p, 0, (2.0, 3.0)), Err(Error::NotFound(_))));
        assert!(solve_bound(&p, 0, (3.0, 2.0)).is_err());
        assert!(RadialProblem::new(|_| 0.0, |_| 0.0, 1.0, 1.0, 1.0, 0.5, 2000).is_err());
        assert!(RadialProblem::new(|_| 0.0, |_| 0.0, 1.0, 1.0, 0.1, 1.0, 10).is_err());
    }

    #[test]
    fn scan_oscillator() {
        let b = scan_spectrum(&oscillator(0), 0.0, 10.0, 7);
        let want = [1.5, 3.5, 5.5, 7.5, 9.5];
        assert_eq!(b.len(), want.len());
        for ((lo, hi), e) in b.iter().zip(want) {
            assert!(*lo < e && e < *hi);
        }
        assert!(scan_spectrum(&oscillator(0), 0.0, 1.0, 10).is_empty());
    }

    #[test]
    fn eigenfunction_is_normalized_gaussian() {
        let p = oscillator(0);
        let w = eigenfunction(&p, 1.5).unwrap();
        let c = 2.0 / std::f64::consts::PI.powf(0.25);
        for &(r, v) in w.iter().step_by(997) {
            assert!((v - c * r * (-r * r / 2.0).exp()).abs() < 1e-6);
        }
        assert_eq!(eigenfunction_nodes(&w), 0);
    }

    #[test]
    fn sign_changes_skip_noise() {
        assert_eq!(count_sign_changes([1.0, -1.0, 1e-20, -1e-20, -2.0, 3.0], 1e-12), 2);
    }
}
