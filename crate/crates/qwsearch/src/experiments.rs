//! Sweep plans, result tables, and the built-in figure presets.
//!
//! A [`SweepPlan`] names a family of runs (one or more series, an axis to
//! scan, a realization count, one master seed) and produces a [`ResultTable`]:
//! column-oriented rows plus key-value metadata. The metadata carries the
//! complete plan, so any table can be reproduced from its own header alone,
//! and a rerun of the same plan is byte-identical apart from the creation
//! timestamp. Each sweep point draws its Monte Carlo master seed from the
//! plan seed and the point position, so adding points never reshuffles the
//! randomness of existing ones.
//!
//! Tables serialize to CSV (metadata as leading `# key: value` lines) or to
//! JSON lines (first line an object with the metadata and the column order,
//! then one object per row). Floats are written with 17 significant digits
//! and round-trip exactly.

use std::path::Path;

use crate::error::{Error, Result};
use crate::metrics::{cost_curve, monte_carlo, McAggregate};
use crate::noise::{derive_seed, strength_from_delta, NoiseKind, NoiseSpec};
use crate::state::{Family, WalkSpec};
use crate::walk::default_horizon;

/// Serialization format for result tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    JsonLines,
}

impl std::fmt::Display for OutputFormat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            OutputFormat::Csv => write!(f, "csv"),
            OutputFormat::JsonLines => write!(f, "jsonl"),
        }
    }
}

impl std::str::FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "jsonl" => Ok(OutputFormat::JsonLines),
            _ => Err(Error::MalformedResults(format!(
                "unknown output format {s:?}, expected csv or jsonl"
            ))),
        }
    }
}

/// One table cell.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Int(i64),
    Float(f64),
    Text(String),
}

impl Value {
    pub fn as_f64(&self) -> Option<f64> {
        match self {
            Value::Int(i) => Some(*i as f64),
            Value::Float(x) => Some(*x),
            Value::Text(_) => None,
        }
    }

    pub fn as_i64(&self) -> Option<i64> {
        match self {
            Value::Int(i) => Some(*i),
            _ => None,
        }
    }

    pub fn as_str(&self) -> Option<&str> {
        match self {
            Value::Text(s) => Some(s),
            _ => None,
        }
    }

    fn to_csv_cell(&self) -> Result<String> {
        match self {
            Value::Int(i) => Ok(i.to_string()),
            Value::Float(x) => Ok(fmt_float(*x)),
            Value::Text(s) => {
                if s.contains(',') || s.contains('\n') {
                    return Err(Error::MalformedResults(format!(
                        "text cell {s:?} cannot be written to csv"
                    )));
                }
                Ok(s.clone())
            }
        }
    }

    fn to_json(&self) -> Result<serde_json::Value> {
        Ok(match self {
            Value::Int(i) => serde_json::Value::from(*i),
            Value::Float(x) => serde_json::Value::Number(
                serde_json::Number::from_f64(*x).ok_or_else(|| {
                    Error::MalformedResults(format!("non-finite float {x} in json output"))
                })?,
            ),
            Value::Text(s) => serde_json::Value::String(s.clone()),
        })
    }
}

/// 17 significant digits, enough to reconstruct the exact f64.
fn fmt_float(x: f64) -> String {
    format!("{x:.16e}")
}

/// Rows of typed cells under named columns, plus ordered metadata.
#[derive(Debug, Clone, PartialEq)]
pub struct ResultTable {
    pub metadata: Vec<(String, String)>,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Value>>,
}

impl ResultTable {
    pub fn new(metadata: Vec<(String, String)>, columns: Vec<String>) -> Self {
        ResultTable {
            metadata,
            columns,
            rows: Vec::new(),
        }
    }

    pub fn push_row(&mut self, row: Vec<Value>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn metadata_value(&self, key: &str) -> Option<&str> {
        self.metadata
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn column_index(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c == name)
    }

    /// Equality of everything except the creation timestamp.
    pub fn same_results(&self, other: &Self) -> bool {
        let strip = |t: &ResultTable| {
            t.metadata
                .iter()
                .filter(|(k, _)| k != "created")
                .cloned()
                .collect::<Vec<_>>()
        };
        strip(self) == strip(other) && self.columns == other.columns && self.rows == other.rows
    }

    pub fn to_csv_string(&self) -> Result<String> {
        let mut out = String::new();
        for (k, v) in &self.metadata {
            if k.contains(':') || k.contains('\n') || v.contains('\n') {
                return Err(Error::MalformedResults(format!(
                    "metadata entry {k:?} cannot be written to csv"
                )));
            }
            out.push_str(&format!("# {k}: {v}\n"));
        }
        for c in &self.columns {
            if c.contains(',') || c.contains('\n') {
                return Err(Error::MalformedResults(format!("bad column name {c:?}")));
            }
        }
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            let cells = row
                .iter()
                .map(Value::to_csv_cell)
                .collect::<Result<Vec<_>>>()?;
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        Ok(out)
    }

    pub fn to_jsonl_string(&self) -> Result<String> {
        let mut meta = serde_json::Map::new();
        for (k, v) in &self.metadata {
            meta.insert(k.clone(), serde_json::Value::String(v.clone()));
        }
        let mut header = serde_json::Map::new();
        header.insert("metadata".into(), serde_json::Value::Object(meta));
        header.insert(
            "columns".into(),
            serde_json::Value::Array(
                self.columns
                    .iter()
                    .map(|c| serde_json::Value::String(c.clone()))
                    .collect(),
            ),
        );
        let mut out = serde_json::Value::Object(header).to_string();
        out.push('\n');
        for row in &self.rows {
            let mut obj = serde_json::Map::new();
            for (c, v) in self.columns.iter().zip(row) {
                obj.insert(c.clone(), v.to_json()?);
            }
            out.push_str(&serde_json::Value::Object(obj).to_string());
            out.push('\n');
        }
        Ok(out)
    }

    pub fn to_string_as(&self, format: OutputFormat) -> Result<String> {
        match format {
            OutputFormat::Csv => self.to_csv_string(),
            OutputFormat::JsonLines => self.to_jsonl_string(),
        }
    }

    pub fn write_path(&self, path: &Path, format: OutputFormat) -> Result<()> {
        std::fs::write(path, self.to_string_as(format)?)?;
        Ok(())
    }

    pub fn parse_csv(text: &str) -> Result<Self> {
        let mut metadata = Vec::new();
        let mut columns: Option<Vec<String>> = None;
        let mut rows = Vec::new();
        for line in text.lines() {
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("# ") {
                let (k, v) = rest.split_once(": ").ok_or_else(|| {
                    Error::MalformedResults(format!("bad metadata line {line:?}"))
                })?;
                metadata.push((k.to_string(), v.to_string()));
                continue;
            }
            match &columns {
                None => columns = Some(line.split(',').map(str::to_string).collect()),
                Some(cols) => {
                    let cells: Vec<Value> = line.split(',').map(parse_cell).collect();
                    if cells.len() != cols.len() {
                        return Err(Error::MalformedResults(format!(
                            "row has {} cells, header has {}",
                            cells.len(),
                            cols.len()
                        )));
                    }
                    rows.push(cells);
                }
            }
        }
        let columns =
            columns.ok_or_else(|| Error::MalformedResults("missing header row".into()))?;
        Ok(ResultTable {
            metadata,
            columns,
            rows,
        })
    }

    pub fn parse_jsonl(text: &str) -> Result<Self> {
        let mut lines = text.lines().filter(|l| !l.is_empty());
        let header: serde_json::Value = serde_json::from_str(
            lines
                .next()
                .ok_or_else(|| Error::MalformedResults("empty jsonl input".into()))?,
        )
        .map_err(|e| Error::MalformedResults(e.to_string()))?;
        let meta_obj = header
            .get("metadata")
            .and_then(|m| m.as_object())
            .ok_or_else(|| Error::MalformedResults("missing metadata object".into()))?;
        let metadata = meta_obj
            .iter()
            .map(|(k, v)| {
                v.as_str()
                    .map(|s| (k.clone(), s.to_string()))
                    .ok_or_else(|| Error::MalformedResults(format!("metadata {k} not a string")))
            })
            .collect::<Result<Vec<_>>>()?;
        let columns = header
            .get("columns")
            .and_then(|c| c.as_array())
            .ok_or_else(|| Error::MalformedResults("missing columns array".into()))?
            .iter()
            .map(|c| {
                c.as_str()
                    .map(str::to_string)
                    .ok_or_else(|| Error::MalformedResults("column name not a string".into()))
            })
            .collect::<Result<Vec<String>>>()?;
        let mut rows = Vec::new();
        for line in lines {
            let obj: serde_json::Value =
                serde_json::from_str(line).map_err(|e| Error::MalformedResults(e.to_string()))?;
            let row = columns
                .iter()
                .map(|c| {
                    let v = obj
                        .get(c)
                        .ok_or_else(|| Error::MalformedResults(format!("row misses {c}")))?;
                    json_to_value(v)
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        Ok(ResultTable {
            metadata,
            columns,
            rows,
        })
    }
}

fn parse_cell(cell: &str) -> Value {
    if let Ok(i) = cell.parse::<i64>() {
        return Value::Int(i);
    }
    if let Ok(x) = cell.parse::<f64>() {
        return Value::Float(x);
    }
    Value::Text(cell.to_string())
}

fn json_to_value(v: &serde_json::Value) -> Result<Value> {
    match v {
        serde_json::Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Value::Int(i))
            } else {
                Ok(Value::Float(n.as_f64().ok_or_else(|| {
                    Error::MalformedResults(format!("bad number {n}"))
                })?))
            }
        }
        serde_json::Value::String(s) => Ok(Value::Text(s.clone())),
        other => Err(Error::MalformedResults(format!("bad cell {other}"))),
    }
}

/// What a sweep scans over.
#[derive(Debug, Clone, PartialEq)]
pub enum SweepAxis {
    /// Mean marked probability per step, one row per step.
    Trajectory,
    /// Cost per step from the mean curve, finite rows only.
    CostCurve,
    /// Peak statistics per noise strength.
    StrengthGrid(Vec<f64>),
    /// Cost minimum per delta, strength resolved as N^(-delta).
    DeltaGrid(Vec<f64>),
    /// Peak statistics per lattice size at fixed strength.
    DimensionScan,
}

impl SweepAxis {
    fn columns(&self) -> Vec<String> {
        let names: &[&str] = match self {
            SweepAxis::Trajectory => &["series", "s", "p_marked", "stderr"],
            SweepAxis::CostCurve => &["series", "s", "cost"],
            SweepAxis::StrengthGrid(_) => &[
                "series",
                "strength",
                "max_p_marked",
                "step_marked",
                "stderr_marked",
                "max_p_unmarked",
                "step_unmarked",
                "stderr_unmarked",
            ],
            SweepAxis::DeltaGrid(_) => {
                &["series", "delta", "strength", "s_star", "c_star", "scaled_cost"]
            }
            SweepAxis::DimensionScan => {
                &["series", "dim", "max_p_marked", "step_marked", "stderr_marked"]
            }
        };
        names.iter().map(|s| s.to_string()).collect()
    }

    fn code(&self) -> String {
        match self {
            SweepAxis::Trajectory => "trajectory".into(),
            SweepAxis::CostCurve => "cost-curve".into(),
            SweepAxis::StrengthGrid(g) => format!("strength-grid:{}", join_floats(g)),
            SweepAxis::DeltaGrid(g) => format!("delta-grid:{}", join_floats(g)),
            SweepAxis::DimensionScan => "dimension-scan".into(),
        }
    }

    fn from_code(code: &str) -> Result<Self> {
        if code == "trajectory" {
            return Ok(SweepAxis::Trajectory);
        }
        if code == "cost-curve" {
            return Ok(SweepAxis::CostCurve);
        }
        if code == "dimension-scan" {
            return Ok(SweepAxis::DimensionScan);
        }
        if let Some(rest) = code.strip_prefix("strength-grid:") {
            return Ok(SweepAxis::StrengthGrid(split_floats(rest)?));
        }
        if let Some(rest) = code.strip_prefix("delta-grid:") {
            return Ok(SweepAxis::DeltaGrid(split_floats(rest)?));
        }
        Err(Error::MalformedResults(format!("bad axis code {code:?}")))
    }
}

fn join_floats(values: &[f64]) -> String {
    values.iter().map(|v| fmt_float(*v)).collect::<Vec<_>>().join(",")
}

fn split_floats(text: &str) -> Result<Vec<f64>> {
    text.split(',')
        .map(|t| {
            t.parse::<f64>()
                .map_err(|_| Error::MalformedResults(format!("bad float {t:?}")))
        })
        .collect()
}

/// One curve of a sweep: a lattice size with a noise kind and base strength.
#[derive(Debug, Clone, PartialEq)]
pub struct SeriesSpec {
    pub label: String,
    pub kind: NoiseKind,
    /// Base strength; grid axes override it point by point.
    pub strength: f64,
    /// Hypercube dimension or grid side, per the plan family.
    pub dim: usize,
}

/// A reproducible set of runs producing one table.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepPlan {
    /// Preset id, or a free-form name for custom runs.
    pub figure: String,
    pub family: Family,
    pub axis: SweepAxis,
    pub series: Vec<SeriesSpec>,
    /// Steps per run; None resolves to the per-size default horizon.
    pub s_max: Option<usize>,
    pub realizations: usize,
    pub seed: u64,
    pub marked: usize,
}

fn make_spec(family: Family, dim: usize, marked: usize) -> Result<WalkSpec> {
    match family {
        Family::Hypercube => WalkSpec::hypercube(dim, marked),
        Family::Grid => WalkSpec::grid(dim, marked),
    }
}

/// Human-readable series label for a noise setting.
pub fn noise_label(kind: NoiseKind, strength: f64) -> String {
    match kind {
        NoiseKind::None => "ideal".into(),
        _ => format!("{kind} {}={strength}", kind.strength_label()),
    }
}

fn size_label(family: Family, dim: usize) -> String {
    match family {
        Family::Hypercube => format!("n={dim}"),
        Family::Grid => format!("side={dim}"),
    }
}

impl SweepPlan {
    pub fn validate(&self) -> Result<()> {
        if self.series.is_empty() {
            return Err(Error::InvalidPlan("plan has no series".into()));
        }
        if self.realizations == 0 {
            return Err(Error::InvalidPlan("plan needs realizations >= 1".into()));
        }
        match &self.axis {
            SweepAxis::StrengthGrid(g) | SweepAxis::DeltaGrid(g) if g.is_empty() => {
                return Err(Error::InvalidPlan("empty sweep grid".into()));
            }
            _ => {}
        }
        for s in &self.series {
            make_spec(self.family, s.dim, self.marked)?;
            if s.label.contains('|') || s.label.contains(';') || s.label.contains(',') {
                return Err(Error::InvalidPlan(format!("bad series label {:?}", s.label)));
            }
        }
        Ok(())
    }

    fn horizon_for(&self, spec: WalkSpec) -> usize {
        self.s_max.unwrap_or_else(|| default_horizon(spec))
    }

    fn metadata(&self) -> Result<Vec<(String, String)>> {
        let mut dims: Vec<usize> = self.series.iter().map(|s| s.dim).collect();
        dims.sort_unstable();
        dims.dedup();
        let horizons = dims
            .iter()
            .map(|&d| {
                make_spec(self.family, d, self.marked)
                    .map(|spec| format!("{d}:{}", self.horizon_for(spec)))
            })
            .collect::<Result<Vec<_>>>()?
            .join(",");
        let series = self
            .series
            .iter()
            .map(|s| format!("{}|{}|{}|{}", s.label, s.kind, fmt_float(s.strength), s.dim))
            .collect::<Vec<_>>()
            .join(";");
        Ok(vec![
            ("version".into(), env!("CARGO_PKG_VERSION").into()),
            ("figure".into(), self.figure.clone()),
            ("family".into(), self.family.to_string()),
            ("axis".into(), self.axis.code()),
            ("series".into(), series),
            (
                "s_max".into(),
                self.s_max.map_or("default".into(), |s| s.to_string()),
            ),
            ("horizons".into(), horizons),
            ("realizations".into(), self.realizations.to_string()),
            ("seed".into(), self.seed.to_string()),
            ("marked".into(), self.marked.to_string()),
            ("created".into(), chrono::Utc::now().to_rfc3339()),
        ])
    }
}

/// Rebuild the plan a table was produced from, using only its metadata.
pub fn reproduce_from_metadata(table: &ResultTable) -> Result<SweepPlan> {
    let get = |key: &str| {
        table
            .metadata_value(key)
            .ok_or_else(|| Error::MalformedResults(format!("metadata misses {key}")))
    };
    let family = match get("family")? {
        "hypercube" => Family::Hypercube,
        "grid" => Family::Grid,
        other => {
            return Err(Error::MalformedResults(format!("bad family {other:?}")));
        }
    };
    let axis = SweepAxis::from_code(get("axis")?)?;
    let series = get("series")?
        .split(';')
        .map(|part| {
            let fields: Vec<&str> = part.split('|').collect();
            if fields.len() != 4 {
                return Err(Error::MalformedResults(format!("bad series entry {part:?}")));
            }
            Ok(SeriesSpec {
                label: fields[0].to_string(),
                kind: fields[1].parse()?,
                strength: fields[2]
                    .parse()
                    .map_err(|_| Error::MalformedResults(format!("bad strength {:?}", fields[2])))?,
                dim: fields[3]
                    .parse()
                    .map_err(|_| Error::MalformedResults(format!("bad dim {:?}", fields[3])))?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let s_max = match get("s_max")? {
        "default" => None,
        other => Some(other.parse().map_err(|_| {
            Error::MalformedResults(format!("bad s_max {other:?}"))
        })?),
    };
    let parse_num = |key: &str| -> Result<u64> {
        get(key)?
            .parse()
            .map_err(|_| Error::MalformedResults(format!("bad {key}")))
    };
    Ok(SweepPlan {
        figure: get("figure")?.to_string(),
        family,
        axis,
        series,
        s_max,
        realizations: parse_num("realizations")? as usize,
        seed: parse_num("seed")?,
        marked: parse_num("marked")? as usize,
    })
}

fn argmax_from(values: &[f64], start: usize) -> (usize, f64) {
    let mut best = (start, values[start]);
    for (i, &v) in values.iter().enumerate().skip(start + 1) {
        if v > best.1 {
            best = (i, v);
        }
    }
    best
}

/// Execute a plan. Points run in a fixed order and each draws its own master
/// seed from the plan seed and its position, so the table is deterministic.
pub fn run_sweep(plan: &SweepPlan) -> Result<ResultTable> {
    plan.validate()?;
    let mut table = ResultTable::new(plan.metadata()?, plan.axis.columns());
    let mut counter: u64 = 0;
    let run_point = |spec: WalkSpec,
                         kind: NoiseKind,
                         strength: f64,
                         horizon: usize,
                         counter: &mut u64|
     -> Result<McAggregate> {
        let noise = NoiseSpec::new(kind, strength, plan.seed)?;
        let master = derive_seed(plan.seed, *counter);
        *counter += 1;
        monte_carlo(spec, &noise, horizon, plan.realizations, master)
    };

    for series in &plan.series {
        let spec = make_spec(plan.family, series.dim, plan.marked)?;
        let horizon = plan.horizon_for(spec);
        let label = Value::Text(series.label.clone());
        match &plan.axis {
            SweepAxis::Trajectory => {
                let agg = run_point(spec, series.kind, series.strength, horizon, &mut counter)?;
                for s in 0..=horizon {
                    table.push_row(vec![
                        label.clone(),
                        Value::Int(s as i64),
                        Value::Float(agg.mean_marked[s]),
                        Value::Float(agg.stderr_marked[s]),
                    ]);
                }
            }
            SweepAxis::CostCurve => {
                let agg = run_point(spec, series.kind, series.strength, horizon, &mut counter)?;
                let cc = cost_curve(&agg.mean_marked, spec.vertex_count())?;
                for (s, &c) in cc.cost.iter().enumerate() {
                    if c.is_finite() {
                        table.push_row(vec![
                            label.clone(),
                            Value::Int(s as i64),
                            Value::Float(c),
                        ]);
                    }
                }
            }
            SweepAxis::StrengthGrid(grid) => {
                for &g in grid {
                    let agg = run_point(spec, series.kind, g, horizon, &mut counter)?;
                    let (s_m, p_m) = argmax_from(&agg.mean_marked, 1);
                    let (s_u, p_u) = argmax_from(&agg.mean_unmarked_max, 0);
                    table.push_row(vec![
                        label.clone(),
                        Value::Float(g),
                        Value::Float(p_m),
                        Value::Int(s_m as i64),
                        Value::Float(agg.stderr_marked[s_m]),
                        Value::Float(p_u),
                        Value::Int(s_u as i64),
                        Value::Float(agg.stderr_unmarked_max[s_u]),
                    ]);
                }
            }
            SweepAxis::DeltaGrid(grid) => {
                for &delta in grid {
                    let strength = strength_from_delta(spec.vertex_count(), delta);
                    let agg = run_point(spec, series.kind, strength, horizon, &mut counter)?;
                    let cc = cost_curve(&agg.mean_marked, spec.vertex_count())?;
                    table.push_row(vec![
                        label.clone(),
                        Value::Float(delta),
                        Value::Float(strength),
                        Value::Int(cc.s_star as i64),
                        Value::Float(cc.c_star),
                        Value::Float(cc.scaled),
                    ]);
                }
            }
            SweepAxis::DimensionScan => {
                let agg = run_point(spec, series.kind, series.strength, horizon, &mut counter)?;
                let (s_m, p_m) = argmax_from(&agg.mean_marked, 1);
                table.push_row(vec![
                    label.clone(),
                    Value::Int(series.dim as i64),
                    Value::Float(p_m),
                    Value::Int(s_m as i64),
                    Value::Float(agg.stderr_marked[s_m]),
                ]);
            }
        }
    }
    Ok(table)
}

fn phase_strength_grid() -> Vec<f64> {
    (0..=10).map(|k| k as f64 / 10.0).collect()
}

fn break_strength_grid() -> Vec<f64> {
    (0..=10).map(|k| k as f64 / 100.0).collect()
}

fn delta_grid() -> Vec<f64> {
    (-3..=15).map(|k| k as f64 / 10.0).collect()
}

fn dim_series(family: Family, dims: &[usize], kind: NoiseKind) -> Vec<SeriesSpec> {
    dims.iter()
        .map(|&d| SeriesSpec {
            label: format!("{} {kind}", size_label(family, d)),
            kind,
            strength: 0.0,
            dim: d,
        })
        .collect()
}

fn scan_series(dims: &[usize], kind: NoiseKind, strength: f64) -> Vec<SeriesSpec> {
    dims.iter()
        .map(|&d| SeriesSpec {
            label: noise_label(kind, strength),
            kind,
            strength,
            dim: d,
        })
        .collect()
}

fn trajectory_series(dim: usize) -> Vec<SeriesSpec> {
    [
        (NoiseKind::None, 0.0),
        (NoiseKind::SystematicPhase, 0.3),
        (NoiseKind::GaussianPhase, 0.3),
        (NoiseKind::BrokenLinks, 0.02),
    ]
    .into_iter()
    .map(|(kind, strength)| SeriesSpec {
        label: noise_label(kind, strength),
        kind,
        strength,
        dim,
    })
    .collect()
}

fn preset(
    figure: &str,
    family: Family,
    axis: SweepAxis,
    series: Vec<SeriesSpec>,
    s_max: Option<usize>,
    realizations: usize,
) -> SweepPlan {
    SweepPlan {
        figure: figure.into(),
        family,
        axis,
        series,
        s_max,
        realizations,
        seed: 42,
        marked: 0,
    }
}

const SKW_DIMS: [usize; 3] = [8, 9, 10];
const AKR_SIDES: [usize; 3] = [16, 32, 64];

/// Identifiers accepted by [`figure_plans`].
pub fn known_figures() -> &'static [&'static str] {
    &[
        "fig1", "fig1-left", "fig1-right", "fig2", "fig3", "fig3-left", "fig3-right", "fig4",
        "fig4-left", "fig4-right", "fig5", "fig6", "fig6-left", "fig6-right", "fig7", "fig7-left",
        "fig7-right", "fig8",
    ]
}

/// Plans behind a preset id. Most presets are a single table; the ids whose
/// left and right panels have different schemas expand to two.
pub fn figure_plans(id: &str) -> Result<Vec<SweepPlan>> {
    use Family::{Grid, Hypercube};
    use NoiseKind::{BrokenLinks, GaussianPhase, SystematicPhase};
    let one = |p: SweepPlan| Ok(vec![p]);
    match id {
        "fig1" => one(preset(
            id,
            Hypercube,
            SweepAxis::Trajectory,
            trajectory_series(8),
            Some(60),
            200,
        )),
        "fig1-left" => one(preset(
            id,
            Hypercube,
            SweepAxis::Trajectory,
            trajectory_series(8)[..3].to_vec(),
            Some(60),
            200,
        )),
        "fig1-right" => {
            let all = trajectory_series(8);
            one(preset(
                id,
                Hypercube,
                SweepAxis::Trajectory,
                vec![all[0].clone(), all[3].clone()],
                Some(60),
                200,
            ))
        }
        "fig2" => one(preset(
            id,
            Hypercube,
            SweepAxis::CostCurve,
            trajectory_series(8),
            Some(60),
            200,
        )),
        "fig3-left" => one(preset(
            id,
            Hypercube,
            SweepAxis::StrengthGrid(phase_strength_grid()),
            dim_series(Hypercube, &SKW_DIMS, SystematicPhase),
            None,
            200,
        )),
        "fig3-right" => one(preset(
            id,
            Hypercube,
            SweepAxis::StrengthGrid(phase_strength_grid()),
            dim_series(Hypercube, &SKW_DIMS, GaussianPhase),
            None,
            200,
        )),
        "fig3" => {
            let mut series = dim_series(Hypercube, &SKW_DIMS, SystematicPhase);
            series.extend(dim_series(Hypercube, &SKW_DIMS, GaussianPhase));
            one(preset(
                id,
                Hypercube,
                SweepAxis::StrengthGrid(phase_strength_grid()),
                series,
                None,
                200,
            ))
        }
        "fig4-left" => one(preset(
            id,
            Hypercube,
            SweepAxis::StrengthGrid(break_strength_grid()),
            dim_series(Hypercube, &SKW_DIMS, BrokenLinks),
            None,
            200,
        )),
        "fig4-right" => one(preset(
            id,
            Hypercube,
            SweepAxis::DimensionScan,
            scan_series(&[6, 7, 8, 9, 10], BrokenLinks, 0.02),
            None,
            200,
        )),
        "fig4" => Ok(figure_plans("fig4-left")?
            .into_iter()
            .chain(figure_plans("fig4-right")?)
            .collect()),
        "fig5" => one(preset(
            id,
            Hypercube,
            SweepAxis::DeltaGrid(delta_grid()),
            dim_series(Hypercube, &[8, 9, 10, 11], GaussianPhase),
            None,
            100,
        )),
        "fig6-left" => one(preset(
            id,
            Grid,
            SweepAxis::StrengthGrid(phase_strength_grid()),
            dim_series(Grid, &AKR_SIDES, SystematicPhase),
            None,
            200,
        )),
        "fig6-right" => one(preset(
            id,
            Grid,
            SweepAxis::StrengthGrid(phase_strength_grid()),
            dim_series(Grid, &AKR_SIDES, GaussianPhase),
            None,
            200,
        )),
        "fig6" => {
            let mut series = dim_series(Grid, &AKR_SIDES, SystematicPhase);
            series.extend(dim_series(Grid, &AKR_SIDES, GaussianPhase));
            one(preset(
                id,
                Grid,
                SweepAxis::StrengthGrid(phase_strength_grid()),
                series,
                None,
                200,
            ))
        }
        "fig7-left" => one(preset(
            id,
            Grid,
            SweepAxis::StrengthGrid(break_strength_grid()),
            dim_series(Grid, &AKR_SIDES, BrokenLinks),
            None,
            200,
        )),
        "fig7-right" => one(preset(
            id,
            Grid,
            SweepAxis::DimensionScan,
            scan_series(&AKR_SIDES, BrokenLinks, 0.02),
            None,
            200,
        )),
        "fig7" => Ok(figure_plans("fig7-left")?
            .into_iter()
            .chain(figure_plans("fig7-right")?)
            .collect()),
        "fig8" => one(preset(
            id,
            Grid,
            SweepAxis::DeltaGrid(delta_grid()),
            dim_series(Grid, &AKR_SIDES, GaussianPhase),
            None,
            100,
        )),
        _ => Err(Error::UnknownFigure(id.to_string())),
    }
}

/// Run a preset end to end.
pub fn run_figure(id: &str) -> Result<Vec<ResultTable>> {
    figure_plans(id)?.iter().map(run_sweep).collect()
}
