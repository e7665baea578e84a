//! Output formatting. JSON numbers carry 13 significant digits in scientific
//! notation; text output rounds to the configured precision.

use std::io::Write;

use anyhow::Result;
use physlimits::blackhole::BlackHoleReport;
use physlimits::constants::{planck_scales, PhysicalConstants};
use physlimits::limits::LimitsReport;
use physlimits::parallelism_errors::{SweepRow, SWEEP_CSV_HEADER};
use physlimits::qdyn::{TrialKind, VerificationSummary};
use physlimits::scenarios::{compare_to_paper, description, ScenarioReport, Tolerance, Verdict};
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;
use serde_json::value::RawValue;

use crate::config::Format;

/// A float that serializes as `{:.12e}` (null when not finite).
#[derive(Debug, Clone, Copy)]
pub struct Num(pub f64);

impl Serialize for Num {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.0.is_finite() {
            let raw = RawValue::from_string(format!("{:.12e}", self.0)).map_err(serde::ser::Error::custom)?;
            raw.serialize(s)
        } else {
            s.serialize_none()
        }
    }
}

/// Ordered JSON object.
#[derive(Default)]
pub struct Obj(Vec<(String, Node)>);

pub enum Node {
    Num(Num),
    Obj(Obj),
    /// Any other serializable leaf, pre-rendered.
    Leaf(Box<RawValue>),
}

impl Serialize for Node {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Node::Num(n) => n.serialize(s),
            Node::Obj(o) => o.serialize(s),
            Node::Leaf(r) => r.serialize(s),
        }
    }
}

pub trait IntoNode {
    fn into_node(self) -> Node;
}

impl IntoNode for Obj {
    fn into_node(self) -> Node {
        Node::Obj(self)
    }
}

impl IntoNode for Num {
    fn into_node(self) -> Node {
        Node::Num(self)
    }
}

macro_rules! leaf {
    ($($t:ty),*) => {$(
        impl IntoNode for $t {
            fn into_node(self) -> Node {
                Node::Leaf(serde_json::value::to_raw_value(&self).expect("serializable leaf"))
            }
        }
    )*};
}
leaf!(bool, usize, u64, String, Vec<String>, Option<Num>, Tolerance, Verdict);

impl Obj {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with(mut self, key: &str, value: impl IntoNode) -> Self {
        self.0.push((key.to_string(), value.into_node()));
        self
    }

    pub fn num(self, key: &str, value: f64) -> Self {
        self.with(key, Num(value))
    }
}

impl Serialize for Obj {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

pub fn to_json(value: &(impl Serialize + ?Sized)) -> Result<String> {
    Ok(serde_json::to_string_pretty(value)?)
}

/// `x` rounded to `digits` significant digits, scientific notation.
pub fn sig(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    format!("{:.*e}", digits.saturating_sub(1), x)
}

fn text_rows(out: &mut impl Write, rows: &[(&str, String)]) -> Result<()> {
    let width = rows.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
    for (k, v) in rows {
        writeln!(out, "  {k:<width$}  {v}")?;
    }
    Ok(())
}

fn key_value_csv(out: &mut impl Write, rows: &[(String, String)]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["key", "value"])?;
    for (k, v) in rows {
        w.write_record([k, v])?;
    }
    w.flush()?;
    Ok(())
}

pub struct LimitsInput {
    pub mass_kg: f64,
    pub volume_l: f64,
}

pub fn limits(
    out: &mut impl Write,
    input: &LimitsInput,
    r: &LimitsReport<f64>,
    format: Format,
    p: usize,
) -> Result<()> {
    let m = &r.memory;
    let par = &r.parallelism;
    match format {
        Format::Json => {
            let doc = Obj::new()
                .with(
                    "input",
                    Obj::new()
                        .num("mass_kg", input.mass_kg)
                        .num("volume_l", input.volume_l)
                        .num("volume_m3", r.geometry.volume)
                        .num("half_size_m", r.geometry.half_size),
                )
                .with("speed", Obj::new().num("ops_per_second", r.ops_per_second))
                .with(
                    "memory",
                    Obj::new()
                        .num("temperature_K", m.temperature)
                        .num("entropy_J_per_K", m.entropy)
                        .num("bits", m.bits)
                        .num("ops_per_bit_per_second", r.ops_per_bit_per_second)
                        .num("thermal_wavelength_m", m.thermal_wavelength)
                        .with("included_species", m.included_species.clone()),
                )
                .with(
                    "parallelism",
                    Obj::new()
                        .num("t_com_s", par.t_com)
                        .num("t_flip_s", par.t_flip)
                        .num("ratio", par.ratio)
                        .num("bekenstein_ratio", par.bekenstein_ratio)
                        .num("max_error_rate", r.max_error_rate)
                        .num("bit_flux_formula", r.bit_flux_formula)
                        .num("bit_flux_paper", r.bit_flux_paper)
                        .num("throughput_W", r.throughput),
                )
                .with("flags", Obj::new().with("black_hole_regime", par.is_black_hole_regime));
            writeln!(out, "{}", to_json(&doc)?)?;
        }
        Format::Csv => {
            let mut rows: Vec<(String, String)> = limits_pairs(input, r)
                .into_iter()
                .map(|(k, v)| (k.to_string(), format!("{v:.12e}")))
                .collect();
            rows.push(("included_species".into(), m.included_species.join(";")));
            rows.push(("black_hole_regime".into(), par.is_black_hole_regime.to_string()));
            key_value_csv(out, &rows)?;
        }
        Format::Text => {
            writeln!(
                out,
                "limits for {} kg in {} L",
                sig(input.mass_kg, p),
                sig(input.volume_l, p)
            )?;
            let rows: Vec<(&str, String)> = limits_pairs(input, r)
                .into_iter()
                .skip(2)
                .map(|(k, v)| (k, sig(v, p)))
                .chain([
                    ("included_species", m.included_species.join(", ")),
                    ("black_hole_regime", par.is_black_hole_regime.to_string()),
                ])
                .collect();
            text_rows(out, &rows)?;
        }
    }
    Ok(())
}

fn limits_pairs(input: &LimitsInput, r: &LimitsReport<f64>) -> Vec<(&'static str, f64)> {
    let m = &r.memory;
    let par = &r.parallelism;
    vec![
        ("mass_kg", input.mass_kg),
        ("volume_l", input.volume_l),
        ("energy_J", r.energy),
        ("ops_per_second", r.ops_per_second),
        ("temperature_K", m.temperature),
        ("entropy_J_per_K", m.entropy),
        ("bits", m.bits),
        ("ops_per_bit_per_second", r.ops_per_bit_per_second),
        ("thermal_wavelength_m", m.thermal_wavelength),
        ("t_com_s", par.t_com),
        ("t_flip_s", par.t_flip),
        ("ratio", par.ratio),
        ("bekenstein_ratio", par.bekenstein_ratio),
        ("max_error_rate", r.max_error_rate),
        ("bit_flux_formula", r.bit_flux_formula),
        ("bit_flux_paper", r.bit_flux_paper),
        ("throughput_W", r.throughput),
        ("schwarzschild_radius_m", r.schwarzschild_radius),
    ]
}

fn blackhole_pairs(r: &BlackHoleReport<f64>) -> Vec<(&'static str, f64)> {
    vec![
        ("mass_kg", r.mass),
        ("page_c", r.page_c),
        ("schwarzschild_radius_m", r.schwarzschild_radius),
        ("hawking_temperature_K", r.hawking_temperature),
        ("entropy_J_per_K", r.entropy),
        ("bits", r.bits),
        ("energy_per_bit_J", r.energy_per_bit),
        ("ops_per_second", r.ops_per_second),
        ("t_flip_s", r.t_flip),
        ("t_com_s", r.t_com),
        ("ratio", r.ratio),
        ("bekenstein_ratio", r.bekenstein_ratio),
        ("max_error_rate", r.max_error_rate),
        ("lifetime_s", r.lifetime),
        ("lifetime_ops", r.lifetime_ops),
    ]
}

pub fn blackhole(out: &mut impl Write, r: &BlackHoleReport<f64>, format: Format, p: usize) -> Result<()> {
    let pairs = blackhole_pairs(r);
    match format {
        Format::Json => {
            let (input, rest) = pairs.split_at(2);
            let inp = input.iter().fold(Obj::new(), |o, &(k, v)| o.num(k, v));
            let bh = rest.iter().fold(Obj::new(), |o, &(k, v)| o.num(k, v));
            writeln!(
                out,
                "{}",
                to_json(&Obj::new().with("input", inp).with("black_hole", bh))?
            )?;
        }
        Format::Csv => {
            let rows: Vec<_> = pairs
                .iter()
                .map(|&(k, v)| (k.to_string(), format!("{v:.12e}")))
                .collect();
            key_value_csv(out, &rows)?;
        }
        Format::Text => {
            writeln!(out, "black hole of {} kg (C = {})", sig(r.mass, p), sig(r.page_c, p))?;
            let rows: Vec<_> = pairs.iter().skip(2).map(|&(k, v)| (k, sig(v, p))).collect();
            text_rows(out, &rows)?;
        }
    }
    Ok(())
}

fn sweep_fields(r: &SweepRow<f64>) -> [String; 8] {
    [
        format!("{:e}", r.radius),
        format!("{:e}", r.temperature),
        format!("{:e}", r.entropy),
        format!("{:e}", r.bits),
        format!("{:e}", r.ops_per_bit_per_second),
        format!("{:e}", r.ratio),
        format!("{:e}", r.bekenstein),
        r.black_hole.to_string(),
    ]
}

/// CSV rows use the shortest round-trip representation of each value.
pub fn sweep(out: &mut impl Write, rows: &[SweepRow<f64>], format: Format, p: usize) -> Result<()> {
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(SWEEP_CSV_HEADER)?;
            for r in rows {
                w.write_record(sweep_fields(r))?;
            }
            w.flush()?;
        }
        Format::Json => {
            let list: Vec<Obj> = rows
                .iter()
                .map(|r| {
                    Obj::new()
                        .num(SWEEP_CSV_HEADER[0], r.radius)
                        .num(SWEEP_CSV_HEADER[1], r.temperature)
                        .num(SWEEP_CSV_HEADER[2], r.entropy)
                        .num(SWEEP_CSV_HEADER[3], r.bits)
                        .num(SWEEP_CSV_HEADER[4], r.ops_per_bit_per_second)
                        .num(SWEEP_CSV_HEADER[5], r.ratio)
                        .num(SWEEP_CSV_HEADER[6], r.bekenstein)
                        .with(SWEEP_CSV_HEADER[7], r.black_hole)
                })
                .collect();
            writeln!(out, "{}", to_json(&list)?)?;
        }
        Format::Text => {
            let w = p + 7;
            let header: Vec<String> = SWEEP_CSV_HEADER.iter().map(|h| format!("{h:>w$}")).collect();
            writeln!(out, "{}", header.join(" "))?;
            for r in rows {
                let cells = [
                    r.radius,
                    r.temperature,
                    r.entropy,
                    r.bits,
                    r.ops_per_bit_per_second,
                    r.ratio,
                    r.bekenstein,
                ]
                .iter()
                .map(|&v| format!("{:>w$}", sig(v, p)))
                .chain([format!("{:>w$}", r.black_hole)])
                .collect::<Vec<_>>();
                writeln!(out, "{}", cells.join(" "))?;
            }
        }
    }
    Ok(())
}

fn pass(b: bool) -> &'static str {
    if b {
        "PASS"
    } else {
        "FAIL"
    }
}

fn kind_name(k: TrialKind) -> &'static str {
    match k {
        TrialKind::Uniform => "uniform",
        TrialKind::Pair => "pair",
        TrialKind::Triple => "triple",
    }
}

pub fn qverify(out: &mut impl Write, s: &VerificationSummary, format: Format, p: usize) -> Result<()> {
    let e = &s.ensemble;
    let n = &s.not_attainment;
    let t = &s.toffoli;
    let kinds = [TrialKind::Uniform, TrialKind::Pair, TrialKind::Triple];
    let count = |k: TrialKind, found: bool| {
        e.outcomes
            .iter()
            .filter(|o| o.kind == k && (!found || o.result.found))
            .count()
    };
    match format {
        Format::Json => {
            let by_kind = kinds.iter().fold(Obj::new(), |o, &k| {
                o.with(
                    kind_name(k),
                    Obj::new().with("trials", count(k, false)).with("found", count(k, true)),
                )
            });
            let doc = Obj::new()
                .with(
                    "config",
                    Obj::new()
                        .with("trials", e.config.trials)
                        .with("max_dim", e.config.max_dim)
                        .with("seed", e.config.seed)
                        .num("overlap_tol", e.config.overlap_tol)
                        .num("bound_slack", e.config.bound_slack),
                )
                .with(
                    "ensemble",
                    Obj::new()
                        .with("found", e.found)
                        .with("violations", e.violations)
                        .with("min_ratio", e.min_ratio.map(Num))
                        .with("by_kind", by_kind),
                )
                .with(
                    "not_attainment",
                    Obj::new()
                        .num("t_orth", n.t_orth)
                        .num("ml_bound", n.ml_bound)
                        .num("ab_bound", n.ab_bound)
                        .num("rel_error", n.rel_error)
                        .with("pass", n.pass),
                )
                .with(
                    "toffoli",
                    Obj::new()
                        .with("and", t.and)
                        .with("not", t.not)
                        .with("fanout", t.fanout),
                )
                .with("passed", s.passed());
            writeln!(out, "{}", to_json(&doc)?)?;
        }
        Format::Csv => {
            let rows = vec![
                ("trials".to_string(), e.config.trials.to_string()),
                ("max_dim".into(), e.config.max_dim.to_string()),
                ("seed".into(), e.config.seed.to_string()),
                ("found".into(), e.found.to_string()),
                ("violations".into(), e.violations.to_string()),
                (
                    "min_ratio".into(),
                    e.min_ratio.map_or(String::new(), |r| format!("{r:.12e}")),
                ),
                ("not_rel_error".into(), format!("{:.12e}", n.rel_error)),
                ("not_pass".into(), n.pass.to_string()),
                ("toffoli_and".into(), t.and.to_string()),
                ("toffoli_not".into(), t.not.to_string()),
                ("toffoli_fanout".into(), t.fanout.to_string()),
                ("passed".into(), s.passed().to_string()),
            ];
            key_value_csv(out, &rows)?;
        }
        Format::Text => {
            writeln!(
                out,
                "quantum speed limit check: {} trials, dims 2..={}, seed {}",
                e.config.trials, e.config.max_dim, e.config.seed
            )?;
            for k in kinds {
                writeln!(
                    out,
                    "  {:<8} {:>5} trials, {:>5} orthogonalized",
                    kind_name(k),
                    count(k, false),
                    count(k, true)
                )?;
            }
            writeln!(
                out,
                "  violations of t_orth >= max(pi/2<H>, pi/2dH)(1 - {:e}): {}",
                e.config.bound_slack, e.violations
            )?;
            if let Some(r) = e.min_ratio {
                writeln!(out, "  smallest t_orth/bound: {}", sig(r, p.max(10)))?;
            }
            writeln!(
                out,
                "  NOT attainment: t_orth = {}, pi/2<H> = {}, pi/2dH = {}, rel error {} ... {}",
                sig(n.t_orth, p.max(10)),
                sig(n.ml_bound, p.max(10)),
                sig(n.ab_bound, p.max(10)),
                sig(n.rel_error, 3),
                pass(n.pass)
            )?;
            writeln!(
                out,
                "  Toffoli embeddings: AND {}, NOT {}, FANOUT {}",
                pass(t.and),
                pass(t.not),
                pass(t.fanout)
            )?;
            writeln!(out, "result: {}", pass(s.passed()))?;
        }
    }
    Ok(())
}

pub fn scenario(out: &mut impl Write, r: &ScenarioReport, format: Format, p: usize) -> Result<()> {
    let cmp = compare_to_paper(r);
    match format {
        Format::Json => {
            let params = r.parameters.iter().fold(Obj::new(), |o, (k, &v)| o.num(k, v));
            let derived = r.derived.iter().fold(Obj::new(), |o, (k, &v)| o.num(k, v));
            let quoted = r.paper_values.iter().fold(Obj::new(), |o, (k, pv)| {
                o.with(
                    k,
                    Obj::new()
                        .num("value", pv.value)
                        .with("tolerance", pv.tolerance)
                        .with("verdict", cmp.verdicts[k]),
                )
            });
            let doc = Obj::new()
                .with("scenario", r.name.clone())
                .with("parameters", params)
                .with("derived", derived)
                .with("paper_values", quoted)
                .with("notes", r.notes.clone())
                .with("pass", cmp.pass);
            writeln!(out, "{}", to_json(&doc)?)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["key", "derived", "quoted", "tolerance", "verdict"])?;
            for (k, &v) in &r.derived {
                let (q, tol, verdict) = match r.paper_values.get(k) {
                    Some(pv) => (
                        format!("{:.12e}", pv.value),
                        pv.tolerance.to_string(),
                        format!("{:?}", cmp.verdicts[k]).to_lowercase(),
                    ),
                    None => Default::default(),
                };
                w.write_record([k.as_str(), &format!("{v:.12e}"), &q, &tol, &verdict])?;
            }
            w.flush()?;
        }
        Format::Text => {
            writeln!(out, "scenario {}: {}", r.name, description(&r.name).unwrap_or(""))?;
            writeln!(out, "parameters:")?;
            let rows: Vec<_> = r.parameters.iter().map(|(k, &v)| (k.as_str(), sig(v, p))).collect();
            text_rows(out, &rows)?;
            writeln!(out, "derived:")?;
            let rows: Vec<_> = r
                .derived
                .iter()
                .map(|(k, &v)| {
                    let mut s = format!("{:<w$}", sig(v, p), w = p + 7);
                    if let Some(pv) = r.paper_values.get(k) {
                        let mark = if cmp.verdicts[k] == Verdict::Match {
                            "match"
                        } else {
                            "MISMATCH"
                        };
                        s.push_str(&format!("  quoted {} ({})  {mark}", sig(pv.value, 4), pv.tolerance));
                    }
                    (k.as_str(), s)
                })
                .collect();
            text_rows(out, &rows)?;
            if !r.notes.is_empty() {
                writeln!(out, "notes:")?;
                for n in &r.notes {
                    writeln!(out, "  {n}")?;
                }
            }
            let matched = cmp.verdicts.values().filter(|v| **v == Verdict::Match).count();
            writeln!(
                out,
                "result: {} ({matched}/{} quoted values match)",
                pass(cmp.pass),
                cmp.verdicts.len()
            )?;
        }
    }
    Ok(())
}

pub fn constants(out: &mut impl Write, k: &PhysicalConstants<f64>, format: Format, p: usize) -> Result<()> {
    let pl = planck_scales(k);
    let pairs = [
        ("c", k.c),
        ("hbar", k.hbar),
        ("g", k.g),
        ("k_b", k.k_b),
        ("alpha", k.alpha),
        ("stefan_boltzmann", k.stefan_boltzmann()),
        ("planck_length_m", pl.length),
        ("planck_time_s", pl.time),
        ("planck_mass_kg", pl.mass),
    ];
    match format {
        Format::Json => {
            let doc = pairs.iter().fold(Obj::new(), |o, &(name, v)| o.num(name, v));
            writeln!(out, "{}", to_json(&doc)?)?;
        }
        Format::Csv => {
            let rows: Vec<_> = pairs
                .iter()
                .map(|&(n, v)| (n.to_string(), format!("{v:.12e}")))
                .collect();
            key_value_csv(out, &rows)?;
        }
        Format::Text => {
            let rows: Vec<_> = pairs.iter().map(|&(n, v)| (n, sig(v, p))).collect();
            text_rows(out, &rows)?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn num_serializes_scientific() {
        let s = serde_json::to_string(&Obj::new().num("x", 5.4258e50).num("y", f64::NAN)).unwrap();
        assert_eq!(s, r#"{"x":5.425800000000e50,"y":null}"#);
        let v: serde_json::Value = serde_json::from_str(&s).unwrap();
        assert_eq!(v["x"].as_f64(), Some(5.4258e50));
    }

    #[test]
    fn significant_digits() {
        assert_eq!(sig(5.42585e50, 3), "5.43e50");
        assert_eq!(sig(0.0, 3), "0");
        assert_eq!(sig(-1.5e-3, 2), "-1.5e-3");
    }
}
