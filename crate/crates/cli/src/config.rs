//! Manifold configuration files (TOML). Schema:
//!
//! ```toml
//! preset = "flat"            # or "newtonian" or "sampled"
//!
//! # newtonian only: polynomial potential, sum of coeff * t^p0 x^p1 y^p2 z^p3
//! [[potential]]
//! coeff = 0.5
//! powers = [0, 2, 0, 0]
//!
//! # sampled only
//! [grid]
//! shape = [3, 3, 3, 3]
//! spacing = [0.1, 0.1, 0.1, 0.1]
//! origin = [0.0, 0.0, 0.0, 0.0]
//!
//! [samples]              # flattened row-major arrays, one block per point
//! g = [ ... ]            # 16 numbers per point (4x4 row-major)
//! tau = [ ... ]          # 4 per point
//! v = [ ... ]            # 4 per point
//! gamma = [ ... ]        # 64 per point, indexed [mu][lambda][nu]
//! ```
//!
//! Parse errors cite the field path and input line.

use std::path::Path;

use serde::Deserialize;

use ll_core::nc::{Monomial, NCField, NCPointData, Potential, SampledGrid};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ManifoldConfig {
    pub preset: String,
    #[serde(default)]
    pub potential: Vec<MonomialCfg>,
    pub grid: Option<GridCfg>,
    pub samples: Option<SamplesCfg>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonomialCfg {
    pub coeff: f64,
    pub powers: [u32; 4],
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GridCfg {
    pub shape: [usize; 4],
    pub spacing: [f64; 4],
    pub origin: [f64; 4],
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SamplesCfg {
    pub g: Vec<f64>,
    pub tau: Vec<f64>,
    pub v: Vec<f64>,
    pub gamma: Vec<f64>,
}

/// Configuration failure with a field-path diagnostic.
#[derive(Debug)]
pub struct ConfigError {
    pub message: String,
}

impl std::fmt::Display for ConfigError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "config error: {}", self.message)
    }
}

impl std::error::Error for ConfigError {}

fn err(message: impl Into<String>) -> ConfigError {
    ConfigError {
        message: message.into(),
    }
}

/// Load and cross-validate a manifold config into an `NCField`.
pub fn load_manifold(path: &Path) -> Result<NCField, ConfigError> {
    let text =
        std::fs::read_to_string(path).map_err(|e| err(format!("{}: {e}", path.display())))?;
    parse_manifold(&text).map_err(|e| err(format!("{}: {}", path.display(), e.message)))
}

pub fn parse_manifold(text: &str) -> Result<NCField, ConfigError> {
    // toml's serde errors carry the dotted field path and line/column span
    let cfg: ManifoldConfig = toml::from_str(text).map_err(|e| err(e.to_string()))?;
    build_field(cfg)
}

fn build_field(cfg: ManifoldConfig) -> Result<NCField, ConfigError> {
    match cfg.preset.as_str() {
        "flat" => {
            reject_extras(&cfg, "flat")?;
            Ok(NCField::Flat)
        }
        "newtonian" => {
            if cfg.potential.is_empty() {
                return Err(err(
                    "potential: newtonian preset requires at least one monomial",
                ));
            }
            if cfg.grid.is_some() || cfg.samples.is_some() {
                return Err(err("grid/samples: not allowed for preset \"newtonian\""));
            }
            let monomials = cfg
                .potential
                .iter()
                .map(|m| Monomial {
                    coeff: m.coeff,
                    powers: m.powers,
                })
                .collect();
            Ok(NCField::Newtonian(Potential { monomials }))
        }
        "sampled" => {
            let grid = cfg
                .grid
                .as_ref()
                .ok_or_else(|| err("grid: required for preset \"sampled\""))?;
            let samples = cfg
                .samples
                .as_ref()
                .ok_or_else(|| err("samples: required for preset \"sampled\""))?;
            if !cfg.potential.is_empty() {
                return Err(err("potential: not allowed for preset \"sampled\""));
            }
            build_sampled(grid, samples)
        }
        other => Err(err(format!(
            "preset: unknown value {other:?} (expected \"flat\", \"newtonian\" or \"sampled\")"
        ))),
    }
}

fn reject_extras(cfg: &ManifoldConfig, preset: &str) -> Result<(), ConfigError> {
    if !cfg.potential.is_empty() {
        return Err(err(format!(
            "potential: not allowed for preset \"{preset}\""
        )));
    }
    if cfg.grid.is_some() || cfg.samples.is_some() {
        return Err(err(format!(
            "grid/samples: not allowed for preset \"{preset}\""
        )));
    }
    Ok(())
}

fn build_sampled(grid: &GridCfg, samples: &SamplesCfg) -> Result<NCField, ConfigError> {
    let n: usize = grid.shape.iter().product();
    if n == 0 {
        return Err(err("grid.shape: all extents must be positive"));
    }
    let check_len = |name: &str, len: usize, per: usize| -> Result<(), ConfigError> {
        if len != n * per {
            Err(err(format!(
                "samples.{name}: expected {} values ({} points x {per}), got {len}",
                n * per,
                n
            )))
        } else {
            Ok(())
        }
    };
    check_len("g", samples.g.len(), 16)?;
    check_len("tau", samples.tau.len(), 4)?;
    check_len("v", samples.v.len(), 4)?;
    check_len("gamma", samples.gamma.len(), 64)?;

    let mut data = Vec::with_capacity(n);
    for p in 0..n {
        let mut g = [[0.0; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                g[i][j] = samples.g[p * 16 + i * 4 + j];
            }
        }
        let mut tau = [0.0; 4];
        let mut v = [0.0; 4];
        for i in 0..4 {
            tau[i] = samples.tau[p * 4 + i];
            v[i] = samples.v[p * 4 + i];
        }
        let mut gamma = [[[0.0; 4]; 4]; 4];
        for mu in 0..4 {
            for lam in 0..4 {
                for nu in 0..4 {
                    gamma[mu][lam][nu] = samples.gamma[p * 64 + mu * 16 + lam * 4 + nu];
                }
            }
        }
        data.push(NCPointData { g, tau, v, gamma });
    }

    let grid = SampledGrid::new(grid.shape, grid.spacing, grid.origin, data)
        .map_err(|e| err(format!("grid: {e}")))?;
    if let Some((idx, report)) = grid.first_invalid() {
        let failing: Vec<&str> = report
            .checks
            .iter()
            .filter(|c| !c.pass)
            .map(|c| c.name)
            .collect();
        return Err(err(format!(
            "samples: point {idx} violates invariants: {}",
            failing.join(", ")
        )));
    }
    Ok(NCField::Sampled(grid))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flat_config_parses() {
        let field = parse_manifold("preset = \"flat\"\n").unwrap();
        assert!(matches!(field, NCField::Flat));
    }

    #[test]
    fn newtonian_config_parses() {
        let text = r#"
preset = "newtonian"

[[potential]]
coeff = 0.5
powers = [0, 2, 0, 0]
"#;
        let field = parse_manifold(text).unwrap();
        match field {
            NCField::Newtonian(p) => assert_eq!(p.monomials.len(), 1),
            _ => panic!("wrong variant"),
        }
    }

    #[test]
    fn unknown_preset_names_the_field() {
        let e = parse_manifold("preset = \"spherical\"\n").unwrap_err();
        assert!(e.message.contains("preset"), "{}", e.message);
    }

    #[test]
    fn missing_potential_names_the_field() {
        let e = parse_manifold("preset = \"newtonian\"\n").unwrap_err();
        assert!(e.message.contains("potential"), "{}", e.message);
    }

    #[test]
    fn type_error_cites_line_and_path() {
        let text = "preset = \"newtonian\"\n\n[[potential]]\ncoeff = \"abc\"\npowers = [0,0,0,0]\n";
        let e = parse_manifold(text).unwrap_err();
        assert!(e.message.contains("coeff"), "{}", e.message);
        assert!(e.message.contains("line"), "{}", e.message);
    }

    #[test]
    fn bad_sample_lengths_are_reported() {
        let text = r#"
preset = "sampled"

[grid]
shape = [1, 1, 1, 1]
spacing = [0.1, 0.1, 0.1, 0.1]
origin = [0.0, 0.0, 0.0, 0.0]

[samples]
g = [1.0]
tau = [1.0, 0.0, 0.0, 0.0]
v = [1.0, 0.0, 0.0, 0.0]
gamma = []
"#;
        let e = parse_manifold(text).unwrap_err();
        assert!(e.message.contains("samples.g"), "{}", e.message);
    }

    #[test]
    fn invalid_sample_data_is_rejected_with_index() {
        // rank-4 g at the single point
        let g: Vec<f64> = (0..4)
            .flat_map(|i| (0..4).map(move |j| if i == j { 1.0 } else { 0.0 }))
            .collect();
        let text = format!(
            r#"
preset = "sampled"

[grid]
shape = [1, 1, 1, 1]
spacing = [0.1, 0.1, 0.1, 0.1]
origin = [0.0, 0.0, 0.0, 0.0]

[samples]
g = {g:?}
tau = [1.0, 0.0, 0.0, 0.0]
v = [1.0, 0.0, 0.0, 0.0]
gamma = {z:?}
"#,
            z = vec![0.0; 64]
        );
        let e = parse_manifold(&text).unwrap_err();
        assert!(e.message.contains("point 0"), "{}", e.message);
    }
}
