use rayon::prelude::*;
use rovib::oracle::{solve_state, Centrifugal};

use crate::config::{OracleMode, RunConfig};
use crate::error::CliResult;
use crate::model::*;

pub fn run(cfg: &RunConfig) -> CliResult<()> {
    let pot = cfg.require_potential()?;
    let matrix = matrix(&pot, cfg.r0)?;
    let blends = cfg.blends.clone().unwrap_or_else(|| reference_blends(&pot));
    let states = cfg.states.clone().unwrap_or_else(reference_states);
    let mode = cfg.oracle.unwrap_or(OracleMode::Off);

    // the exact-centrifugal oracle does not depend on the blend
    let exact: Vec<Option<f64>> = states
        .par_iter()
        .map(|&(n, l)| mode.exact().then(|| solve_state(&pot, l, Centrifugal::Exact, n).ok().map(|r| r.energy)).flatten())
        .collect();

    let cells: Vec<(usize, (u32, u32), rovib::Blend)> =
        states.iter().enumerate().flat_map(|(i, &s)| blends.iter().map(move |&b| (i, s, b))).collect();
    let rows: Vec<Vec<String>> = cells
        .par_iter()
        .map(|&(i, (n, l), b)| {
            let closed = matrix.blend(b).and_then(|c| closed_energy(&pot, c, n, l).map(|e| (c, e)));
            let mut row = vec![n.to_string(), l.to_string(), fmt(b.lambda), fmt(b.nu)];
            row.push(closed.as_ref().map(|&(_, e)| fmt(e)).unwrap_or_default());
            if mode.approx() {
                let e = closed
                    .as_ref()
                    .ok()
                    .and_then(|&(c, _)| solve_state(&pot, l, Centrifugal::Approximated(c), n).ok())
                    .map(|r| fmt(r.energy));
                row.push(e.unwrap_or_default());
            }
            if mode.exact() {
                row.push(exact[i].map(fmt).unwrap_or_default());
            }
            row.push(status(&closed).to_string());
            row
        })
        .collect();

    let mut w = csv_writer(cfg.out.as_deref())?;
    let mut header = vec!["n_r", "l", "lambda", "nu", "E_analytic"];
    if mode.approx() {
        header.push("E_oracle_approx");
    }
    if mode.exact() {
        header.push("E_oracle_exact");
    }
    header.push("status");
    w.write_record(&header)?;
    for r in rows {
        w.write_record(&r)?;
    }
    w.flush()?;
    Ok(())
}
