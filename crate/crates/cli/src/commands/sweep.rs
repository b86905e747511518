use rayon::prelude::*;

use crate::config::RunConfig;
use crate::error::{usage, CliResult};
use crate::model::*;

const TAG_TOL: f64 = 1e-12;

/// Marks the blends that reduce to a single column.
fn tag(lambda: f64, nu: f64) -> &'static str {
    if nu.abs() < TAG_TOL {
        "nu0"
    } else if (nu - 1.0).abs() < TAG_TOL && (lambda - 1.0).abs() < TAG_TOL {
        "lambda1_nu1"
    } else if (nu - 1.0).abs() < TAG_TOL && lambda.abs() < TAG_TOL {
        "lambda0_nu1"
    } else {
        ""
    }
}

pub fn run(cfg: &RunConfig) -> CliResult<()> {
    let pot = cfg.require_potential()?;
    let (Some(lr), Some(nr)) = (cfg.lambda, cfg.nu) else {
        return usage("sweep needs --lambda min,max,count and --nu min,max,count");
    };
    let matrix = matrix(&pot, cfg.r0)?;
    let states = cfg.states.clone().unwrap_or_else(reference_states);
    let cells: Vec<(u32, u32, f64, f64)> = states
        .iter()
        .flat_map(|&(n, l)| lr.points().into_iter().flat_map(move |la| nr.points().into_iter().map(move |nu| (n, l, la, nu))))
        .collect();
    let rows: Vec<[String; 7]> = cells
        .par_iter()
        .map(|&(n, l, la, nu)| {
            let e = matrix.blend(rovib::Blend::new(la, nu)).and_then(|c| closed_energy(&pot, c, n, l));
            [
                n.to_string(),
                l.to_string(),
                fmt(la),
                fmt(nu),
                e.as_ref().map(|&e| fmt(e)).unwrap_or_default(),
                status(&e).to_string(),
                tag(la, nu).to_string(),
            ]
        })
        .collect();
    let mut w = csv_writer(cfg.out.as_deref())?;
    w.write_record(["n_r", "l", "lambda", "nu", "energy", "status", "tag"])?;
    for r in rows {
        w.write_record(&r)?;
    }
    w.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::tag;

    #[test]
    fn special_points() {
        assert_eq!(tag(1.0, 1.0), "lambda1_nu1");
        assert_eq!(tag(0.0, 1.0), "lambda0_nu1");
        assert_eq!(tag(-2.0, 0.0), "nu0");
        assert_eq!(tag(0.5, 0.5), "");
    }
}
