//! Named reproductions of the worked examples, each compared against the
//! numbers quoted for it.
//!
//! Every scenario takes a flat `key → f64` parameter map (defaults below,
//! overridable per key) and produces a [`ScenarioReport`] holding the derived
//! values, the quoted values with their tolerance, and one verdict per quoted
//! key.
//!
//! | scenario | parameters (default) |
//! |---|---|
//! | `ultimate_laptop` | `mass_kg` (1), `volume_l` (1) |
//! | `black_hole_laptop` | `mass_kg` (1), `page_c` (1e-2) |
//! | `ordinary_matter` | `mass_kg` (1), `nuclei` (1e25), `fraction` (1), `ops_per_bit_per_second` (1e15) |
//! | `io_bottleneck` | `bits` (1e23), `io_rate` (1e12 bit/s) |
//! | `heavy_ion` | `nucleons` (200), `energy_per_nucleon_gev` (200), `diameter_fm` (12.5), `gamma` (100), `entropy_per_pion` (4, units of k_B), `pions` (1e4) |
//! | `electrostatic_gate` | `separation_m` (1e-9) |

use std::collections::BTreeMap;
use std::f64::consts::{LN_2, PI};

use serde::{Deserialize, Serialize};

use crate::blackhole::{black_hole_report, DEFAULT_PAGE_C};
use crate::constants::PhysicalConstants;
use crate::error::{positive, LimitsError, Result};
use crate::limits::{compute_limits, ComputerSpec};
use crate::radiation_memory::SpeciesTable;
use crate::speed_limits::{max_ops_per_second, min_op_time, EnergyBudget};
use crate::units::{FERMI, GEV, LITER, YEAR};

pub type Params = BTreeMap<String, f64>;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Tolerance {
    /// `|derived − quoted| ≤ f·|quoted|`.
    Relative { f: f64 },
    /// `quoted/factor ≤ derived ≤ quoted·factor`.
    OrderOfMagnitude { factor: f64 },
    /// `lo ≤ derived ≤ hi`; the quoted value is informational.
    Range { lo: f64, hi: f64 },
    /// `|derived − quoted| ≤ tol`.
    Absolute { tol: f64 },
}

impl Tolerance {
    pub fn accepts(&self, quoted: f64, derived: f64) -> bool {
        if !derived.is_finite() {
            return false;
        }
        match *self {
            Tolerance::Relative { f } => (derived - quoted).abs() <= f * quoted.abs(),
            Tolerance::OrderOfMagnitude { factor } => {
                let (a, b) = (quoted / factor, quoted * factor);
                derived >= a.min(b) && derived <= a.max(b)
            }
            Tolerance::Range { lo, hi } => derived >= lo && derived <= hi,
            Tolerance::Absolute { tol } => (derived - quoted).abs() <= tol,
        }
    }
}

impl std::fmt::Display for Tolerance {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            Tolerance::Relative { f: r } => write!(f, "±{}%", r * 100.0),
            Tolerance::OrderOfMagnitude { factor } => write!(f, "×{factor}"),
            Tolerance::Range { lo, hi } => write!(f, "[{lo:e}, {hi:e}]"),
            Tolerance::Absolute { tol } => write!(f, "±{tol}"),
        }
    }
}

/// Quoted value with its tolerance.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PaperValue {
    pub value: f64,
    pub tolerance: Tolerance,
}

/// Quoted values with exact constants are held to 0.5%.
pub const EXACT_RTOL: f64 = 5e-3;
/// Three-significant-figure quotes are held to 1%.
pub const THREE_SIG_RTOL: f64 = 1e-2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Match,
    Mismatch,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScenarioReport {
    pub name: String,
    pub parameters: Params,
    pub derived: BTreeMap<String, f64>,
    pub paper_values: BTreeMap<String, PaperValue>,
    pub verdicts: BTreeMap<String, Verdict>,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Comparison {
    pub verdicts: BTreeMap<String, Verdict>,
    pub pass: bool,
}

/// Verdict for every quoted key; a quoted key with no derived value mismatches.
pub fn compare_to_paper(report: &ScenarioReport) -> Comparison {
    let verdicts: BTreeMap<String, Verdict> = report
        .paper_values
        .iter()
        .map(|(key, pv)| {
            let ok = report
                .derived
                .get(key)
                .is_some_and(|&d| pv.tolerance.accepts(pv.value, d));
            (key.clone(), if ok { Verdict::Match } else { Verdict::Mismatch })
        })
        .collect();
    let pass = verdicts.values().all(|v| *v == Verdict::Match);
    Comparison { verdicts, pass }
}

/// Constants and species table used by the scenarios.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Context {
    pub constants: PhysicalConstants<f64>,
    pub species: SpeciesTable<f64>,
}

struct Def {
    name: &'static str,
    description: &'static str,
    defaults: &'static [(&'static str, f64)],
    eval: fn(&Params, &Context, &mut Builder) -> Result<()>,
}

const REGISTRY: &[Def] = &[
    Def {
        name: "ultimate_laptop",
        description: "1 kg of matter converted to radiation in a 1 liter box",
        defaults: &[("mass_kg", 1.0), ("volume_l", 1.0)],
        eval: ultimate_laptop,
    },
    Def {
        name: "black_hole_laptop",
        description: "1 kg compressed to its Schwarzschild radius, with Page evaporation",
        defaults: &[("mass_kg", 1.0), ("page_c", DEFAULT_PAGE_C)],
        eval: black_hole_laptop,
    },
    Def {
        name: "ordinary_matter",
        description: "one bit per nucleus in 1 kg of ordinary matter at a nuclear-spin flip rate",
        defaults: &[
            ("mass_kg", 1.0),
            ("nuclei", 1e25),
            ("fraction", 1.0),
            ("ops_per_bit_per_second", 1e15),
        ],
        eval: ordinary_matter,
    },
    Def {
        name: "io_bottleneck",
        description: "serial read/write of the whole memory through a fixed-rate channel",
        defaults: &[("bits", 1e23), ("io_rate", 1e12)],
        eval: io_bottleneck,
    },
    Def {
        name: "heavy_ion",
        description: "gold-gold collision treated as a computation on a quark-gluon plasma",
        defaults: &[
            ("nucleons", 200.0),
            ("energy_per_nucleon_gev", 200.0),
            ("diameter_fm", 12.5),
            ("gamma", 100.0),
            ("entropy_per_pion", 4.0),
            ("pions", 1e4),
        ],
        eval: heavy_ion,
    },
    Def {
        name: "electrostatic_gate",
        description: "bit flip driven by the Coulomb energy of two charges, compared with light travel time",
        defaults: &[("separation_m", 1e-9)],
        eval: electrostatic_gate,
    },
];

/// Registered scenario names in registry order.
pub fn names() -> Vec<&'static str> {
    REGISTRY.iter().map(|d| d.name).collect()
}

pub fn description(name: &str) -> Option<&'static str> {
    REGISTRY.iter().find(|d| d.name == name).map(|d| d.description)
}

/// Default parameters for a scenario.
pub fn defaults(name: &str) -> Result<Params> {
    Ok(lookup(name)?
        .defaults
        .iter()
        .map(|&(k, v)| (k.to_string(), v))
        .collect())
}

fn lookup(name: &str) -> Result<&'static Def> {
    REGISTRY
        .iter()
        .find(|d| d.name == name)
        .ok_or_else(|| LimitsError::UnknownScenario {
            name: name.to_string(),
            available: names().iter().map(|s| s.to_string()).collect(),
        })
}

/// Runs a scenario with the reference constants and photon-only radiation.
pub fn run(name: &str, overrides: &Params) -> Result<ScenarioReport> {
    run_with(name, overrides, &Context::default())
}

pub fn run_with(name: &str, overrides: &Params, ctx: &Context) -> Result<ScenarioReport> {
    let def = lookup(name)?;
    let mut params = defaults(name)?;
    for (key, &value) in overrides {
        match params.get_mut(key) {
            Some(slot) => *slot = value,
            None => {
                return Err(LimitsError::UnknownParameter {
                    scenario: name.to_string(),
                    key: key.clone(),
                    accepted: params.keys().cloned().collect(),
                })
            }
        }
    }
    for (key, &value) in &params {
        if !(value > 0.0 && value.is_finite()) {
            return Err(LimitsError::InvalidArgument(format!(
                "parameter `{key}` of `{name}` must be positive and finite, got {value}"
            )));
        }
    }
    let mut b = Builder::default();
    (def.eval)(&params, ctx, &mut b)?;
    let mut report = ScenarioReport {
        name: name.to_string(),
        parameters: params,
        derived: b.derived,
        paper_values: b.paper,
        verdicts: BTreeMap::new(),
        notes: b.notes,
    };
    report.verdicts = compare_to_paper(&report).verdicts;
    Ok(report)
}

#[derive(Default)]
struct Builder {
    derived: BTreeMap<String, f64>,
    paper: BTreeMap<String, PaperValue>,
    notes: Vec<String>,
}

impl Builder {
    fn put(&mut self, key: &str, value: f64) {
        self.derived.insert(key.to_string(), value);
    }

    fn quote(&mut self, key: &str, value: f64, tolerance: Tolerance) {
        debug_assert!(self.derived.contains_key(key), "quoted key {key} has no derived value");
        self.paper.insert(key.to_string(), PaperValue { value, tolerance });
    }

    fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }
}

fn rel(f: f64) -> Tolerance {
    Tolerance::Relative { f }
}

fn ultimate_laptop(p: &Params, ctx: &Context, b: &mut Builder) -> Result<()> {
    let k = &ctx.constants;
    let spec = ComputerSpec::new(p["mass_kg"], p["volume_l"] * LITER, ctx.species.clone())?;
    let r = compute_limits(&spec, k)?;
    let m = &r.memory;

    b.put("energy_J", r.energy);
    b.put("ops_per_second", r.ops_per_second);
    b.quote("ops_per_second", 5.4258e50, rel(5e-4));

    b.put("temperature_K", m.temperature);
    b.quote("temperature_K", 5.87e8, rel(THREE_SIG_RTOL));
    b.put("entropy_J_per_K", m.entropy);
    b.quote("entropy_J_per_K", 2.04e8, rel(THREE_SIG_RTOL));
    b.put("bits", m.bits);
    b.quote("bits", 2.13e31, rel(THREE_SIG_RTOL));
    b.put("thermal_wavelength_m", m.thermal_wavelength);
    b.put("r_effective", m.r_effective);

    b.put("ops_per_bit_per_second", r.ops_per_bit_per_second);
    b.quote("ops_per_bit_per_second", 1e19, Tolerance::Range { lo: 1e19, hi: 3e19 });
    // For pure radiation S = 4E/3T, so the energy and temperature forms agree.
    let by_energy = 2.0 * LN_2 * k.k_b * r.energy / (PI * k.hbar * m.entropy);
    let by_temperature = 3.0 * LN_2 * k.k_b * m.temperature / (2.0 * PI * k.hbar);
    b.put("ops_per_bit_by_temperature", by_temperature);
    b.put(
        "ops_per_bit_identity_residual",
        (by_energy - by_temperature).abs() / by_temperature,
    );

    let par = &r.parallelism;
    b.put("t_com_s", par.t_com);
    b.put("t_flip_s", par.t_flip);
    b.put("ratio", par.ratio);
    b.quote("ratio", 1e10, Tolerance::Range { lo: 1e9, hi: 1e10 });
    b.put("bekenstein_ratio", par.bekenstein_ratio);
    b.put("max_error_rate", r.max_error_rate);
    b.quote("max_error_rate", 1e-10, Tolerance::Range { lo: 1e-10, hi: 1e-9 });

    b.put("stefan_boltzmann", k.stefan_boltzmann());
    b.quote("stefan_boltzmann", 5.67e-8, rel(1e-3));
    b.put("surface_area_m2", r.geometry.surface_area);
    b.put("throughput_W", r.throughput);
    b.quote("throughput_W", 4.04e26, rel(THREE_SIG_RTOL));
    b.put("bit_flux_formula", r.bit_flux_formula);
    b.quote("bit_flux_formula", 1.198e42, rel(EXACT_RTOL));
    b.put("bit_flux_paper", r.bit_flux_paper);
    b.quote("bit_flux_paper", 7.195e42, rel(THREE_SIG_RTOL));
    b.put("schwarzschild_radius_m", r.schwarzschild_radius);
    b.put("black_hole_regime", if par.is_black_hole_regime { 1.0 } else { 0.0 });
    b.note(format!("included species: {}", m.included_species.join(", ")));
    b.note("bit_flux_paper is the printed value, 6x the closed-form blackbody bit flux");
    Ok(())
}

fn black_hole_laptop(p: &Params, ctx: &Context, b: &mut Builder) -> Result<()> {
    let r = black_hole_report(p["mass_kg"], p["page_c"], &ctx.constants)?;
    b.put("ops_per_second", r.ops_per_second);
    b.put("schwarzschild_radius_m", r.schwarzschild_radius);
    b.quote("schwarzschild_radius_m", 1.485e-27, rel(1e-3));
    b.put("bits", r.bits);
    b.quote("bits", 3.827e16, rel(1e-3));
    b.put("entropy_J_per_K", r.entropy);
    b.put("hawking_temperature_K", r.hawking_temperature);
    b.put("energy_per_bit_J", r.energy_per_bit);
    b.put("t_flip_s", r.t_flip);
    b.put("t_com_s", r.t_com);
    b.put("ratio", r.ratio);
    b.quote("ratio", LN_2 / PI, rel(1e-4));
    b.put("bekenstein_ratio", r.bekenstein_ratio);
    b.quote("bekenstein_ratio", 1.0 / (2.0 * PI), rel(1e-9));
    b.put("max_error_rate", r.max_error_rate);
    b.put("lifetime_s", r.lifetime);
    b.quote("lifetime_s", 1e-19, Tolerance::OrderOfMagnitude { factor: 10.0 });
    b.put("lifetime_ops", r.lifetime_ops);
    b.quote("lifetime_ops", 1e32, Tolerance::Range { lo: 1e31, hi: 1e33 });
    b.note("ratio is t_com/t_flip with t_com the light time around the horizon, pi R_S/c");
    b.note("energy_per_bit is 2 ln2 k_B T with T = E/2S; the printed ln2 k_B T/2 is 4x smaller");
    Ok(())
}

fn ordinary_matter(p: &Params, ctx: &Context, b: &mut Builder) -> Result<()> {
    let bits = p["fraction"] * p["nuclei"];
    let ops = bits * p["ops_per_bit_per_second"];
    let ceiling = max_ops_per_second(EnergyBudget::rest_mass(p["mass_kg"], &ctx.constants)?, &ctx.constants);
    b.put("bits", bits);
    b.put("ops_per_second", ops);
    b.quote("ops_per_second", 1e40, Tolerance::OrderOfMagnitude { factor: 10.0 });
    b.put("fraction_of_speed_limit", ops / ceiling);
    Ok(())
}

fn io_bottleneck(p: &Params, _ctx: &Context, b: &mut Builder) -> Result<()> {
    let t = p["bits"] / p["io_rate"];
    b.put("time_s", t);
    b.put("time_years", t / YEAR);
    b.quote("time_years", 1e4, Tolerance::OrderOfMagnitude { factor: 10.0 });
    Ok(())
}

fn heavy_ion(p: &Params, ctx: &Context, b: &mut Builder) -> Result<()> {
    let k = &ctx.constants;
    let energy = p["nucleons"] * p["energy_per_nucleon_gev"] * GEV;
    let op_time = min_op_time(energy, k)?;
    let per_nucleon = min_op_time(p["energy_per_nucleon_gev"] * GEV, k)?;
    let collision = p["diameter_fm"] * FERMI / p["gamma"] / k.c;
    // Entropy per pion is in units of k_B; bits = S/(k_B ln 2).
    let bits = p["entropy_per_pion"] * p["pions"] / LN_2;
    b.put("energy_J", energy);
    b.put("op_time_s", op_time);
    b.quote("op_time_s", 1e-29, Tolerance::Range { lo: 1e-29, hi: 1e-28 });
    b.put("op_time_per_nucleon_s", per_nucleon);
    b.put("bits", bits);
    b.quote("bits", 1e4, Tolerance::Range { lo: 1e4, hi: 1e5 });
    b.put("collision_time_s", collision);
    b.quote("collision_time_s", 1e-25, Tolerance::Range { lo: 1e-25, hi: 1e-24 });
    b.put("ops_per_collision", collision / op_time);
    b.note("op time uses the total kinetic energy of all nucleons; per-nucleon energy is shown for contrast");
    Ok(())
}

fn electrostatic_gate(p: &Params, ctx: &Context, b: &mut Builder) -> Result<()> {
    let k = &ctx.constants;
    let r = positive("separation", p["separation_m"])?;
    // Coulomb energy e²/4πε₀r = αħc/r.
    let energy = k.alpha * k.hbar_c() / r;
    let t_flip = min_op_time(energy, k)?;
    let t_com = r / k.c;
    b.put("coulomb_energy_J", energy);
    b.put("t_flip_s", t_flip);
    b.put("t_com_s", t_com);
    b.put("ratio", t_flip / t_com);
    b.quote("ratio", 215.3, Tolerance::Absolute { tol: 0.1 });
    Ok(())
}
