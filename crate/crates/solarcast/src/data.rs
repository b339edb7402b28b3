//! Dataset loading, synthesis and splitting.
//!
//! Datasets are timestamped rows of weather features plus a measured power
//! target (kW). Missing feature cells are represented as `f64::NAN`; targets
//! are required and non-negative. All operations are pure and deterministic
//! given their seeds.

use std::path::Path;

use chrono::{DateTime, TimeZone, Utc};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::seed::mix;

/// Sentinel for a missing feature cell.
pub const MISSING: f64 = f64::NAN;

/// Epoch of the first synthetic row: 2021-06-01T00:00:00Z.
const SYNTH_EPOCH: i64 = 1_622_505_600;

#[derive(Debug, Error)]
pub enum DataError {
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed csv at line {line}: {msg}")]
    MalformedCsv { line: usize, msg: String },
    #[error("schema mismatch: expected header `{expected}`, found `{found}`")]
    SchemaMismatch { expected: String, found: String },
    #[error("negative target {value} at line {line}")]
    NegativeTarget { line: usize, value: f64 },
    #[error("missing target at line {line}; targets are required")]
    MissingTarget { line: usize },
    #[error("invalid config: {0}")]
    InvalidConfig(String),
    #[error("dataset too small: {n} rows")]
    DatasetTooSmall { n: usize },
    #[error("invalid fold count k={k} for n={n}")]
    InvalidFoldCount { k: usize, n: usize },
}

/// Ordered feature names with display units.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FeatureSchema {
    pub names: Vec<String>,
    pub units: Vec<String>,
}

impl Default for FeatureSchema {
    fn default() -> Self {
        FeatureSchema {
            names: ["temperature", "humidity", "wind_speed", "irradiance"]
                .iter()
                .map(|s| s.to_string())
                .collect(),
            units: ["°C", "%", "m/s", "W/m²"].iter().map(|s| s.to_string()).collect(),
        }
    }
}

impl FeatureSchema {
    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    /// Checks that names are unique and non-empty and units align.
    pub fn validate(&self) -> Result<(), DataError> {
        if self.names.is_empty() {
            return Err(DataError::InvalidConfig("schema has no features".into()));
        }
        if self.units.len() != self.names.len() {
            return Err(DataError::InvalidConfig("units/names length mismatch".into()));
        }
        for (i, name) in self.names.iter().enumerate() {
            if name.is_empty() {
                return Err(DataError::InvalidConfig(format!("empty feature name at {i}")));
            }
            if self.names[..i].contains(name) {
                return Err(DataError::InvalidConfig(format!("duplicate feature name `{name}`")));
            }
        }
        Ok(())
    }

    /// The CSV header this schema expects.
    pub fn csv_header(&self) -> String {
        format!("timestamp,{},power", self.names.join(","))
    }
}

/// Timestamped feature rows with a power target.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LabeledDataset {
    /// UTC epoch seconds, non-decreasing.
    pub timestamps: Vec<i64>,
    /// Row-major n×d feature matrix; `NAN` marks a missing cell.
    pub features: Vec<Vec<f64>>,
    /// Power in kW, finite and ≥ 0.
    pub target: Vec<f64>,
    pub schema: FeatureSchema,
}

impl LabeledDataset {
    pub fn n_rows(&self) -> usize {
        self.timestamps.len()
    }

    pub fn n_features(&self) -> usize {
        self.schema.len()
    }

    /// Number of missing feature cells.
    pub fn missing_count(&self) -> usize {
        self.features
            .iter()
            .map(|row| row.iter().filter(|v| v.is_nan()).count())
            .sum()
    }

    pub fn validate(&self) -> Result<(), DataError> {
        self.schema.validate()?;
        let n = self.n_rows();
        if self.features.len() != n || self.target.len() != n {
            return Err(DataError::InvalidConfig("column length mismatch".into()));
        }
        for w in self.timestamps.windows(2) {
            if w[1] < w[0] {
                return Err(DataError::InvalidConfig("timestamps not non-decreasing".into()));
            }
        }
        for (i, (row, &y)) in self.features.iter().zip(&self.target).enumerate() {
            if row.len() != self.schema.len() {
                return Err(DataError::InvalidConfig(format!("row {i} has wrong width")));
            }
            if !y.is_finite() || y < 0.0 {
                return Err(DataError::InvalidConfig(format!("bad target {y} at row {i}")));
            }
        }
        Ok(())
    }
}

/// Settings for the synthetic solar generator.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SynthConfig {
    pub n_days: u32,
    /// Must divide 1440.
    pub step_minutes: u32,
    /// Clear-sky peak at solar noon, W/m².
    pub peak_irradiance: f64,
    /// Dimensionless in (0, 1]; maps irradiance to plant output in kW.
    pub panel_efficiency: f64,
    /// Std-dev of daytime measurement noise, kW.
    pub noise_std: f64,
    pub seed: u64,
}

impl Default for SynthConfig {
    fn default() -> Self {
        SynthConfig {
            n_days: 30,
            step_minutes: 60,
            peak_irradiance: 1000.0,
            panel_efficiency: 0.85,
            noise_std: 10.0,
            seed: 0,
        }
    }
}

impl SynthConfig {
    pub fn validate(&self) -> Result<(), DataError> {
        if self.n_days < 1 {
            return Err(DataError::InvalidConfig("n_days must be ≥ 1".into()));
        }
        if self.step_minutes == 0 || 1440 % self.step_minutes != 0 {
            return Err(DataError::InvalidConfig("step_minutes must divide 1440".into()));
        }
        if !(self.peak_irradiance.is_finite() && self.peak_irradiance > 0.0) {
            return Err(DataError::InvalidConfig("peak_irradiance must be > 0".into()));
        }
        if !(self.panel_efficiency > 0.0 && self.panel_efficiency <= 1.0) {
            return Err(DataError::InvalidConfig("panel_efficiency must be in (0, 1]".into()));
        }
        if !(self.noise_std.is_finite() && self.noise_std >= 0.0) {
            return Err(DataError::InvalidConfig("noise_std must be ≥ 0".into()));
        }
        Ok(())
    }

    pub fn n_rows(&self) -> usize {
        self.n_days as usize * (1440 / self.step_minutes) as usize
    }
}

/// Disjoint train/test row indices covering `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitIndices {
    pub train: Vec<usize>,
    pub test: Vec<usize>,
    pub seed: u64,
}

fn parse_cell(raw: &str, line: usize, col: &str) -> Result<f64, DataError> {
    raw.trim().parse::<f64>().map_err(|_| DataError::MalformedCsv {
        line,
        msg: format!("unparseable number `{raw}` in column `{col}`"),
    })
}

/// Loads a dataset from CSV.
///
/// Header must match `schema.csv_header()` exactly. Empty feature cells
/// become the missing marker; empty target cells are rejected.
pub fn load_csv(path: &Path, schema: &FeatureSchema) -> Result<LabeledDataset, DataError> {
    schema.validate()?;
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(true)
        .from_path(path)?;
    let expected = schema.csv_header();
    let found = reader
        .headers()
        .map_err(|e| DataError::MalformedCsv { line: 1, msg: e.to_string() })?
        .iter()
        .collect::<Vec<_>>()
        .join(",");
    if found != expected {
        return Err(DataError::SchemaMismatch { expected, found });
    }

    let d = schema.len();
    let mut timestamps = Vec::new();
    let mut features = Vec::new();
    let mut target = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let line = i + 2; // 1-based, after the header
        let record = record.map_err(|e| DataError::MalformedCsv { line, msg: e.to_string() })?;
        if record.len() != d + 2 {
            return Err(DataError::MalformedCsv {
                line,
                msg: format!("expected {} columns, found {}", d + 2, record.len()),
            });
        }
        let ts = DateTime::parse_from_rfc3339(record[0].trim())
            .map_err(|e| DataError::MalformedCsv { line, msg: format!("bad timestamp: {e}") })?
            .with_timezone(&Utc)
            .timestamp();
        let mut row = Vec::with_capacity(d);
        for j in 0..d {
            let raw = &record[j + 1];
            if raw.trim().is_empty() {
                row.push(MISSING);
            } else {
                let v = parse_cell(raw, line, &schema.names[j])?;
                if v.is_nan() || v.is_infinite() {
                    return Err(DataError::MalformedCsv {
                        line,
                        msg: format!("non-finite value in column `{}`", schema.names[j]),
                    });
                }
                row.push(v);
            }
        }
        let raw_y = &record[d + 1];
        if raw_y.trim().is_empty() {
            return Err(DataError::MissingTarget { line });
        }
        let y = parse_cell(raw_y, line, "power")?;
        if !y.is_finite() {
            return Err(DataError::MalformedCsv { line, msg: "non-finite target".into() });
        }
        if y < 0.0 {
            return Err(DataError::NegativeTarget { line, value: y });
        }
        timestamps.push(ts);
        features.push(row);
        target.push(y);
    }

    let ds = LabeledDataset { timestamps, features, target, schema: schema.clone() };
    ds.validate()?;
    Ok(ds)
}

fn format_timestamp(epoch: i64) -> String {
    Utc.timestamp_opt(epoch, 0)
        .single()
        .map(|t| t.format("%Y-%m-%dT%H:%M:%SZ").to_string())
        .unwrap_or_else(|| epoch.to_string())
}

/// Serializes a dataset back to the interchange CSV format.
///
/// Numbers use shortest round-trip formatting, so load → write → load is
/// value-exact. Missing cells render as empty strings.
pub fn write_csv(ds: &LabeledDataset, path: &Path) -> Result<(), DataError> {
    let mut out = String::new();
    out.push_str(&ds.schema.csv_header());
    out.push('\n');
    for i in 0..ds.n_rows() {
        out.push_str(&format_timestamp(ds.timestamps[i]));
        for &v in &ds.features[i] {
            out.push(',');
            if !v.is_nan() {
                out.push_str(&format!("{v}"));
            }
        }
        out.push_str(&format!(",{}\n", ds.target[i]));
    }
    std::fs::write(path, out)?;
    Ok(())
}

/// Generates a deterministic synthetic solar dataset.
///
/// Irradiance follows a half-sine arc between 06:00 and 18:00; power is
/// `panel_efficiency · irradiance · (1 − 0.004·max(0, temperature − 25))`
/// plus Gaussian measurement noise during daylight, clamped to ≥ 0. Nights
/// read exactly 0 kW. Weather follows seeded diurnal sinusoids with per-row
/// jitter; every row's randomness is seeded independently from
/// `(seed, row index)`.
pub fn generate_synthetic(cfg: &SynthConfig) -> Result<LabeledDataset, DataError> {
    cfg.validate()?;
    let step_s = cfg.step_minutes as i64 * 60;
    let n = cfg.n_rows();
    let mut timestamps = Vec::with_capacity(n);
    let mut features = Vec::with_capacity(n);
    let mut target = Vec::with_capacity(n);

    for i in 0..n {
        let ts = SYNTH_EPOCH + i as i64 * step_s;
        let minute_of_day = ((ts - SYNTH_EPOCH) / 60).rem_euclid(1440);
        let h = minute_of_day as f64 / 60.0;

        let mut rng = ChaCha8Rng::seed_from_u64(mix(cfg.seed, i as u64));
        let jitter = |rng: &mut ChaCha8Rng| -> f64 { StandardNormal.sample(rng) };

        // Daily sinusoids: temperature peaks at 15:00, humidity bottoms out
        // then, wind picks up in the afternoon.
        let phase = (h - 9.0) / 24.0 * std::f64::consts::TAU;
        let temperature = 16.0 + 9.0 * phase.sin() + 1.5 * jitter(&mut rng);
        let humidity = (70.0 - 30.0 * phase.sin() + 4.0 * jitter(&mut rng)).clamp(5.0, 100.0);
        let wind_phase = (h - 12.0) / 24.0 * std::f64::consts::TAU;
        let wind_speed = (3.0 + 1.2 * wind_phase.sin() + 0.8 * jitter(&mut rng)).max(0.0);

        let irradiance = if (6.0..=18.0).contains(&h) {
            (cfg.peak_irradiance * (std::f64::consts::PI * (h - 6.0) / 12.0).sin()).max(0.0)
        } else {
            0.0
        };

        let derate = 1.0 - 0.004 * (temperature - 25.0).max(0.0);
        let clean = cfg.panel_efficiency * irradiance * derate;
        let noise = cfg.noise_std * jitter(&mut rng);
        // A plant that is not generating reads exactly 0 kW; noise only
        // applies to nonzero production.
        let power = if irradiance > 0.0 { (clean + noise).max(0.0) } else { 0.0 };

        timestamps.push(ts);
        features.push(vec![temperature, humidity, wind_speed, irradiance]);
        target.push(power);
    }

    Ok(LabeledDataset { timestamps, features, target, schema: FeatureSchema::default() })
}

/// Seeded uniform train/test split with `|test| = round(test_fraction · n)`.
pub fn split(n: usize, test_fraction: f64, seed: u64) -> Result<SplitIndices, DataError> {
    if n < 2 {
        return Err(DataError::DatasetTooSmall { n });
    }
    if !(test_fraction > 0.0 && test_fraction < 1.0) {
        return Err(DataError::InvalidConfig(format!(
            "test_fraction must be in (0, 1), got {test_fraction}"
        )));
    }
    let n_test = ((test_fraction * n as f64).round() as usize).clamp(1, n - 1);
    let mut idx: Vec<usize> = (0..n).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    idx.shuffle(&mut rng);
    let mut test: Vec<usize> = idx[..n_test].to_vec();
    let mut train: Vec<usize> = idx[n_test..].to_vec();
    test.sort_unstable();
    train.sort_unstable();
    Ok(SplitIndices { train, test, seed })
}

/// Partitions `0..n` into `k` seeded folds whose sizes differ by at most 1.
pub fn kfold_partition(n: usize, k: usize, seed: u64) -> Result<Vec<Vec<usize>>, DataError> {
    if k < 2 || k > n {
        return Err(DataError::InvalidFoldCount { k, n });
    }
    let mut idx: Vec<usize> = (0..n).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    idx.shuffle(&mut rng);
    let base = n / k;
    let extra = n % k;
    let mut folds = Vec::with_capacity(k);
    let mut start = 0;
    for f in 0..k {
        let size = base + usize::from(f < extra);
        let mut fold: Vec<usize> = idx[start..start + size].to_vec();
        fold.sort_unstable();
        folds.push(fold);
        start += size;
    }
    Ok(folds)
}
