//! Configuration file and the merged runtime settings.
//!
//! The file is TOML:
//!
//! ```toml
//! format = "json"      # text | json | csv
//! seed = 0
//! precision = 6
//!
//! [constants]          # any subset; missing fields keep the reference values
//! hbar = 1.054571817e-34
//!
//! [[species]]          # replaces the photon-only table
//! name = "photon"
//! mass = 0.0
//! particle_antiparticle_count = 1
//! polarizations = 2
//! statistics = "boson"
//! ```

use std::path::Path;

use anyhow::{bail, Context as _, Result};
use clap::ValueEnum;
use physlimits::constants::PhysicalConstants;
use physlimits::radiation_memory::{ParticleSpecies, SpeciesTable};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConstantOverrides {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub c: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub hbar: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub g: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k_b: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
}

impl ConstantOverrides {
    pub fn apply(&self, base: PhysicalConstants<f64>) -> Result<PhysicalConstants<f64>> {
        let k = PhysicalConstants::new(
            self.c.unwrap_or(base.c),
            self.hbar.unwrap_or(base.hbar),
            self.g.unwrap_or(base.g),
            self.k_b.unwrap_or(base.k_b),
            self.alpha.unwrap_or(base.alpha),
        )?;
        Ok(k)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub format: Option<Format>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub precision: Option<usize>,
    #[serde(default)]
    pub constants: ConstantOverrides,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub species: Option<Vec<ParticleSpecies<f64>>>,
}

impl ConfigFile {
    pub fn parse(text: &str) -> Result<Self> {
        Ok(toml::from_str(text)?)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading config {}", path.display()))?;
        Self::parse(&text).with_context(|| format!("parsing config {}", path.display()))
    }

    #[cfg(test)]
    pub fn to_toml(&self) -> Result<String> {
        Ok(toml::to_string(self)?)
    }
}

/// Species file: TOML with `[[species]]` entries, or JSON `{"species": [...]}`.
pub fn load_species(path: &Path) -> Result<SpeciesTable<f64>> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading species table {}", path.display()))?;
    let table = if path.extension().is_some_and(|e| e == "json") {
        serde_json::from_str(&text).map_err(anyhow::Error::from)
    } else {
        toml::from_str(&text).map_err(anyhow::Error::from)
    };
    table.with_context(|| format!("parsing species table {}", path.display()))
}

/// Settings after merging defaults, the config file and command-line flags.
#[derive(Debug, Clone, PartialEq)]
pub struct CliConfig {
    pub constants: PhysicalConstants<f64>,
    pub species: SpeciesTable<f64>,
    /// `None` when neither the file nor a flag names one.
    pub format: Option<Format>,
    pub seed: u64,
    pub precision: usize,
}

pub const DEFAULT_PRECISION: usize = 6;

impl Default for CliConfig {
    fn default() -> Self {
        Self {
            constants: PhysicalConstants::default(),
            species: SpeciesTable::photon_only(),
            format: None,
            seed: 0,
            precision: DEFAULT_PRECISION,
        }
    }
}

/// Command-line values; `None` defers to the file, then to the defaults.
#[derive(Debug, Clone, Default)]
pub struct FlagOverrides<'a> {
    pub config: Option<&'a Path>,
    pub species: Option<&'a Path>,
    pub format: Option<Format>,
    pub seed: Option<u64>,
    pub precision: Option<usize>,
}

impl CliConfig {
    pub fn resolve(flags: &FlagOverrides<'_>) -> Result<Self> {
        let file = match flags.config {
            Some(p) => ConfigFile::load(p)?,
            None => ConfigFile::default(),
        };
        Self::merge(file, flags)
    }

    pub fn merge(file: ConfigFile, flags: &FlagOverrides<'_>) -> Result<Self> {
        let mut cfg = CliConfig {
            constants: file.constants.apply(PhysicalConstants::default())?,
            ..CliConfig::default()
        };
        if let Some(list) = file.species {
            cfg.species = SpeciesTable::new(list)?;
        }
        if let Some(path) = flags.species {
            cfg.species = load_species(path)?;
        }
        cfg.format = flags.format.or(file.format);
        cfg.seed = flags.seed.or(file.seed).unwrap_or(0);
        cfg.precision = flags.precision.or(file.precision).unwrap_or(DEFAULT_PRECISION);
        if !(1..=17).contains(&cfg.precision) {
            bail!(
                "precision must be between 1 and 17 significant digits, got {}",
                cfg.precision
            );
        }
        Ok(cfg)
    }

    /// Explicit format, else text.
    pub fn format(&self) -> Format {
        self.format.unwrap_or_default()
    }
}
