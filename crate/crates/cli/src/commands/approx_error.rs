use rovib::centrifugal::f_centrifugal;

use crate::config::RunConfig;
use crate::error::{usage, CliError, CliResult};
use crate::model::*;

/// `l(l+1)[1/r² − f(r)]` for the three columns and each blend.
pub fn run(cfg: &RunConfig) -> CliResult<()> {
    let pot = cfg.require_potential()?;
    let Some(grid) = cfg.grid else {
        return usage("approx-error needs --grid min,max,count");
    };
    if grid.min <= 0.0 {
        return Err(CliError::Domain(format!("the grid must stay above r = 0 (min = {})", grid.min)));
    }
    let l = cfg.l.unwrap_or(1);
    let ll = f64::from(l * (l + 1));
    let matrix = matrix(&pot, cfg.r0)?;
    let blends = cfg.blends.clone().unwrap_or_else(|| reference_blends(&pot));
    let mut coeffs = matrix.columns.to_vec();
    for b in &blends {
        coeffs.push(matrix.blend(*b)?);
    }

    let mut w = csv_writer(cfg.out.as_deref())?;
    let mut header = vec!["r".to_string(), "delta1".into(), "delta2".into(), "delta3".into()];
    header.extend(blends.iter().map(|b| format!("delta4({}|{})", b.lambda, b.nu)));
    w.write_record(&header)?;
    for r in grid.points() {
        let mut row = vec![fmt(r)];
        for c in &coeffs {
            row.push(fmt(ll * (1.0 / (r * r) - f_centrifugal(c, &pot, r)?)));
        }
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(())
}
