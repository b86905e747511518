use crate::config::RunConfig;
use crate::error::{usage, CliError, CliResult};
use crate::model::*;

pub fn run(cfg: &RunConfig) -> CliResult<()> {
    let pot = cfg.require_potential()?;
    let Some(grid) = cfg.grid else {
        return usage("wavefunction needs --grid min,max,count");
    };
    let &[(n, l)] = cfg.states.as_deref().unwrap_or_default() else {
        return usage("wavefunction needs exactly one state in --states");
    };
    let blend = match cfg.blends.as_deref() {
        None => reference_blends(&pot)[0],
        Some(&[b]) => b,
        Some(_) => return usage("wavefunction takes a single blend"),
    };
    if grid.min <= 0.0 {
        return Err(CliError::Domain(format!("the grid must stay above r = 0 (min = {})", grid.min)));
    }
    let coeffs = matrix(&pot, cfg.r0)?.blend(blend)?;
    let wf = radial_function(&pot, coeffs, n, l)?;
    let mut w = csv_writer(cfg.out.as_deref())?;
    w.write_record(["r", "R"])?;
    for r in grid.points() {
        w.write_record([fmt(r), fmt(wf.eval(r)?)])?;
    }
    w.flush()?;
    Ok(())
}
