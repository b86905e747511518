//! Glue between run settings and the library.

use std::io::Write;
use std::path::Path;

use rovib::centrifugal::{matrix_for, CoeffMatrix, Coeffs};
use rovib::potentials::{MrParams, Potential, PtParams};
use rovib::spectra::{mr_energy_with, mr_wavefunction, pt_energy_with, pt_wavefunction, QuantumState, RadialFunction};
use rovib::{Blend, Error};

use crate::error::CliResult;

pub fn reference_mr() -> Potential<f64> {
    Potential::ManningRosen(MrParams::new(80.0, 1.5, 40.0))
}

pub fn reference_pt() -> Potential<f64> {
    Potential::PoschlTeller(PtParams::new(4.0, 2.0, 0.05))
}

/// The five reference blends of each potential family.
pub fn reference_blends(pot: &Potential<f64>) -> Vec<Blend> {
    let pairs: [(f64, f64); 5] = match pot {
        Potential::ManningRosen(_) => [(1.0, 1.0), (0.0, 1.0), (1.0, 0.0), (-1.5, 1.0), (-2.5, 1.0)],
        Potential::PoschlTeller(_) => [(1.0, 1.0), (0.0, 1.0), (1.0, 0.0), (0.5, -1.0), (0.5, -2.0)],
    };
    pairs.iter().map(|&(l, n)| Blend::new(l, n)).collect()
}

pub fn reference_states() -> Vec<(u32, u32)> {
    (1..=2).flat_map(|n| (1..=4).map(move |l| (n, l))).collect()
}

pub fn matrix(pot: &Potential<f64>, r0: Option<f64>) -> CliResult<CoeffMatrix<f64>> {
    Ok(matrix_for(pot, r0)?)
}

/// Closed-form energy for blended coefficients.
pub fn closed_energy(pot: &Potential<f64>, coeffs: Coeffs<f64>, n: u32, l: u32) -> rovib::Result<f64> {
    let st = QuantumState::radial(n, l);
    match pot {
        Potential::ManningRosen(p) => mr_energy_with(p, st, coeffs).map(|lv| lv.energy),
        Potential::PoschlTeller(p) => pt_energy_with(p, st, coeffs).map(|lv| lv.energy),
    }
}

pub fn radial_function(pot: &Potential<f64>, coeffs: Coeffs<f64>, n: u32, l: u32) -> rovib::Result<Box<dyn RadialFunction<f64>>> {
    let st = QuantumState::radial(n, l);
    Ok(match pot {
        Potential::ManningRosen(p) => Box::new(mr_wavefunction(&mr_energy_with(p, st, coeffs)?, st)?),
        Potential::PoschlTeller(p) => Box::new(pt_wavefunction(&pt_energy_with(p, st, coeffs)?, st)?),
    })
}

/// Per-row status word for a closed-form result.
pub fn status<T>(r: &rovib::Result<T>) -> &'static str {
    match r {
        Ok(_) => "ok",
        Err(Error::ApproximationInvalid { .. }) => "invalid",
        Err(Error::NotBound { .. }) => "unbound",
        Err(_) => "error",
    }
}

pub fn fmt(x: f64) -> String {
    format!("{x:.9e}")
}

pub fn csv_writer(out: Option<&Path>) -> CliResult<csv::Writer<Box<dyn Write>>> {
    let sink: Box<dyn Write> = match out {
        Some(p) => Box::new(std::io::BufWriter::new(std::fs::File::create(p)?)),
        None => Box::new(std::io::stdout().lock()),
    };
    Ok(csv::WriterBuilder::new().from_writer(sink))
}
