//! Flat `key = value` run configuration.
//!
//! Blank lines, `#`/`;` comments and `[section]` headers are ignored. Keys
//! match the long flag names. A `command` key, when present, must name the
//! subcommand being run.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use rovib::potentials::{MrParams, Potential, PtParams};
use rovib::Blend;

use crate::error::{usage, CliError, CliResult};

const COMMON_KEYS: &[&str] = &["potential", "alpha", "b", "A", "xi1", "xi2", "hbar", "mu", "blends", "states", "r0", "out"];

fn command_keys(command: &str) -> &'static [&'static str] {
    match command {
        "energy" | "verify" => &["oracle"],
        "approx-error" => &["grid", "l"],
        "sweep" => &["lambda", "nu"],
        "wavefunction" => &["grid"],
        _ => &[],
    }
}

pub fn parse_ini(text: &str) -> CliResult<BTreeMap<String, String>> {
    let mut map = BTreeMap::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') || line.starts_with(';') || line.starts_with('[') {
            continue;
        }
        let Some((k, v)) = line.split_once('=') else {
            return usage(format!("config line {}: expected key = value, got {line:?}", i + 1));
        };
        let k = k.trim();
        if k.is_empty() {
            return usage(format!("config line {}: empty key", i + 1));
        }
        if map.insert(k.to_string(), v.trim().to_string()).is_some() {
            return usage(format!("config line {}: duplicate key {k:?}", i + 1));
        }
    }
    Ok(map)
}

pub fn load(path: &Path) -> CliResult<BTreeMap<String, String>> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))?;
    parse_ini(&text)
}

/// Settings from the file overlaid with flags, checked against the keys the
/// command understands.
pub fn merge(command: &str, file: BTreeMap<String, String>, flags: BTreeMap<String, String>) -> CliResult<BTreeMap<String, String>> {
    let mut merged = file;
    if let Some(c) = merged.remove("command") {
        if c != command {
            return usage(format!("config was written for `{c}`, not `{command}`"));
        }
    }
    merged.extend(flags);
    for k in merged.keys() {
        if !COMMON_KEYS.contains(&k.as_str()) && !command_keys(command).contains(&k.as_str()) {
            return usage(format!("unknown setting {k:?} for `{command}`"));
        }
    }
    Ok(merged)
}

pub fn render(command: &str, settings: &BTreeMap<String, String>) -> String {
    let mut s = format!("command = {command}\n");
    for (k, v) in settings {
        s.push_str(&format!("{k} = {v}\n"));
    }
    s
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Range {
    pub min: f64,
    pub max: f64,
    pub count: usize,
}

impl Range {
    pub fn points(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.min];
        }
        let step = (self.max - self.min) / (self.count - 1) as f64;
        (0..self.count).map(|k| if k + 1 == self.count { self.max } else { self.min + step * k as f64 }).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleMode {
    Off,
    Approx,
    Exact,
    Both,
}

impl OracleMode {
    pub fn approx(self) -> bool {
        matches!(self, OracleMode::Approx | OracleMode::Both)
    }
    pub fn exact(self) -> bool {
        matches!(self, OracleMode::Exact | OracleMode::Both)
    }
}

/// Typed view of the merged settings.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub potential: Option<Potential<f64>>,
    pub blends: Option<Vec<Blend>>,
    pub states: Option<Vec<(u32, u32)>>,
    pub r0: Option<f64>,
    pub grid: Option<Range>,
    pub lambda: Option<Range>,
    pub nu: Option<Range>,
    pub l: Option<u32>,
    pub oracle: Option<OracleMode>,
    pub out: Option<PathBuf>,
}

fn num(key: &str, v: &str) -> CliResult<f64> {
    match v.trim().parse::<f64>() {
        Ok(x) if x.is_finite() => Ok(x),
        _ => usage(format!("{key}: expected a finite number, got {v:?}")),
    }
}

fn int(key: &str, v: &str) -> CliResult<u32> {
    v.trim().parse::<u32>().or_else(|_| usage(format!("{key}: expected a non-negative integer, got {v:?}")))
}

fn pair<'a>(key: &str, v: &'a str) -> CliResult<(&'a str, &'a str)> {
    v.split_once(',').ok_or_else(|| CliError::Usage(format!("{key}: expected two comma-separated values, got {v:?}")))
}

pub fn parse_blends(v: &str) -> CliResult<Vec<Blend>> {
    let mut out = Vec::new();
    for item in v.split(';').map(str::trim).filter(|s| !s.is_empty()) {
        let (a, b) = pair("blends", item)?;
        out.push(Blend::new(num("blends", a)?, num("blends", b)?));
    }
    if out.is_empty() {
        return usage("blends: the blend list must not be empty");
    }
    Ok(out)
}

/// An empty string is an empty state list.
pub fn parse_states(v: &str) -> CliResult<Vec<(u32, u32)>> {
    v.split(':')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|item| {
            let (n, l) = pair("states", item)?;
            Ok((int("states", n)?, int("states", l)?))
        })
        .collect()
}

pub fn parse_range(key: &str, v: &str) -> CliResult<Range> {
    let parts: Vec<&str> = v.split(',').collect();
    if parts.len() != 3 {
        return usage(format!("{key}: expected min,max,count, got {v:?}"));
    }
    let r = Range { min: num(key, parts[0])?, max: num(key, parts[1])?, count: int(key, parts[2])? as usize };
    if r.count == 0 {
        return usage(format!("{key}: count must be at least 1"));
    }
    if r.count > 1 && r.max <= r.min {
        return usage(format!("{key}: max must exceed min"));
    }
    Ok(r)
}

fn potential(s: &BTreeMap<String, String>) -> CliResult<Option<Potential<f64>>> {
    let Some(kind) = s.get("potential") else {
        return Ok(None);
    };
    let need = |k: &str| -> CliResult<f64> {
        match s.get(k) {
            Some(v) => num(k, v),
            None => usage(format!("--{k} is required for --potential {kind}")),
        }
    };
    let unit = |k: &str| -> CliResult<f64> { s.get(k).map_or(Ok(1.0), |v| num(k, v)) };
    let (hbar, mu) = (unit("hbar")?, unit("mu")?);
    let pot = match kind.as_str() {
        "mr" => {
            for k in ["xi1", "xi2"] {
                if s.contains_key(k) {
                    return usage(format!("--{k} does not apply to --potential mr"));
                }
            }
            let p = MrParams::new(need("A")?, need("alpha")?, need("b")?).with_units(hbar, mu);
            p.validate()?;
            Potential::ManningRosen(p)
        }
        "pt" => {
            for k in ["A", "b"] {
                if s.contains_key(k) {
                    return usage(format!("--{k} does not apply to --potential pt"));
                }
            }
            let p = PtParams::new(need("xi1")?, need("xi2")?, need("alpha")?).with_units(hbar, mu);
            p.validate()?;
            Potential::PoschlTeller(p)
        }
        other => return usage(format!("--potential must be mr or pt, got {other:?}")),
    };
    Ok(Some(pot))
}

impl RunConfig {
    pub fn from_settings(s: &BTreeMap<String, String>) -> CliResult<Self> {
        let oracle = match s.get("oracle").map(String::as_str) {
            None => None,
            Some("off") => Some(OracleMode::Off),
            Some("approx") => Some(OracleMode::Approx),
            Some("exact") => Some(OracleMode::Exact),
            Some("both") => Some(OracleMode::Both),
            Some(o) => return usage(format!("--oracle must be off, approx, exact or both, got {o:?}")),
        };
        let r0 = s.get("r0").map(|v| num("r0", v)).transpose()?;
        if r0.is_some_and(|r| r <= 0.0) {
            return Err(CliError::Domain("--r0 must be positive".into()));
        }
        if s.get("potential").is_none() {
            if let Some(k) = ["alpha", "b", "A", "xi1", "xi2"].iter().find(|k| s.contains_key(**k)) {
                return usage(format!("--{k} given without --potential"));
            }
        }
        Ok(RunConfig {
            potential: potential(s)?,
            blends: s.get("blends").map(|v| parse_blends(v)).transpose()?,
            states: s.get("states").map(|v| parse_states(v)).transpose()?,
            r0,
            grid: s.get("grid").map(|v| parse_range("grid", v)).transpose()?,
            lambda: s.get("lambda").map(|v| parse_range("lambda", v)).transpose()?,
            nu: s.get("nu").map(|v| parse_range("nu", v)).transpose()?,
            l: s.get("l").map(|v| int("l", v)).transpose()?,
            oracle,
            out: s.get("out").map(PathBuf::from),
        })
    }

    pub fn require_potential(&self) -> CliResult<Potential<f64>> {
        self.potential.ok_or_else(|| CliError::Usage("--potential is required".into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ini_parsing() {
        let m = parse_ini("# run\n[run]\nalpha = 1.5\n\n; note\nblends = 1,1;0,1\n").unwrap();
        assert_eq!(m["alpha"], "1.5");
        assert_eq!(m["blends"], "1,1;0,1");
        assert!(parse_ini("alpha 1.5").is_err());
        assert!(parse_ini("a = 1\na = 2").is_err());
    }

    #[test]
    fn flags_override_file() {
        let file = parse_ini("command = energy\nalpha = 1.5\nb = 40").unwrap();
        let flags = BTreeMap::from([("b".to_string(), "20".to_string())]);
        let m = merge("energy", file.clone(), flags).unwrap();
        assert_eq!(m["b"], "20");
        assert_eq!(m["alpha"], "1.5");
        assert!(merge("sweep", file, BTreeMap::new()).is_err());
        let bad = parse_ini("grid = 1,2,3").unwrap();
        assert!(merge("energy", bad, BTreeMap::new()).is_err());
    }

    #[test]
    fn list_parsing() {
        let b = parse_blends("1,1; -1.5,1 ;0.5,-2").unwrap();
        assert_eq!(b.len(), 3);
        assert_eq!((b[1].lambda, b[1].nu), (-1.5, 1.0));
        assert!(parse_blends("").is_err());
        assert!(parse_blends("1").is_err());
        assert_eq!(parse_states("1,1:2,4").unwrap(), vec![(1, 1), (2, 4)]);
        assert!(parse_states("").unwrap().is_empty());
        assert!(parse_states("1,-1").is_err());
    }

    #[test]
    fn ranges() {
        let r = parse_range("grid", "0.5,2.5,5").unwrap();
        assert_eq!(r.points(), vec![0.5, 1.0, 1.5, 2.0, 2.5]);
        assert_eq!(parse_range("grid", "3,3,1").unwrap().points(), vec![3.0]);
        assert!(parse_range("grid", "1,0,4").is_err());
        assert!(parse_range("grid", "1,2,0").is_err());
        assert!(parse_range("grid", "1,2").is_err());
    }

    #[test]
    fn potential_requirements() {
        let s = BTreeMap::from([("potential".to_string(), "mr".to_string()), ("alpha".to_string(), "1.5".to_string())]);
        assert!(matches!(RunConfig::from_settings(&s), Err(CliError::Usage(_))));
        let s = BTreeMap::from([
            ("potential".to_string(), "pt".to_string()),
            ("xi1".to_string(), "4".to_string()),
            ("xi2".to_string(), "2".to_string()),
            ("alpha".to_string(), "-0.05".to_string()),
        ]);
        assert!(matches!(RunConfig::from_settings(&s), Err(CliError::Domain(_))));
    }
}
