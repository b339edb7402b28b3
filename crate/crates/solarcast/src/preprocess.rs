//! Fit/apply preprocessing: imputation, Tukey outlier fences, normalization
//! and correlation-ranked feature selection.
//!
//! Every statistic is learned from the training rows passed to
//! [`fit_pipeline`] and frozen in the [`FittedPipeline`]; applying the
//! pipeline never consults data outside those stored parameters. Test rows
//! are therefore transformed as a pure function of the row and the pipeline.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::data::{FeatureSchema, LabeledDataset};

#[derive(Debug, Error)]
pub enum PreprocessError {
    #[error("empty input")]
    EmptyInput,
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("need at least 2 values")]
    TooShort,
    #[error("feature `{name}` has no non-missing training values")]
    AllMissingFeature { name: String },
    #[error("top_m={top_m} exceeds feature count {d}")]
    TopMExceedsFeatureCount { top_m: usize, d: usize },
    #[error("empty training index list")]
    EmptyTrainingSet,
    #[error("schema mismatch: pipeline fitted on different features")]
    SchemaMismatch,
    #[error("row index {index} out of bounds for {n} rows")]
    IndexOutOfBounds { index: usize, n: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutlierPolicy {
    Drop,
    Clip,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum NormMethod {
    MinMax,
    ZScore,
}

/// Tukey fences (Q1 − 1.5·IQR, Q3 + 1.5·IQR) per feature column and target.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutlierFences {
    pub feature_fences: Vec<(f64, f64)>,
    pub target_fence: (f64, f64),
    pub policy: OutlierPolicy,
}

/// Training-split mean per feature, used to fill missing cells.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ImputationValues {
    pub fill: Vec<f64>,
}

/// Per-feature (a, b): (min, max) for minmax, (mean, std) for zscore.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NormalizationParams {
    pub method: NormMethod,
    pub params: Vec<(f64, f64)>,
}

/// Features ranked by |Pearson r| against the target.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FeatureSelection {
    /// |Pearson r| per original feature column.
    pub scores: Vec<f64>,
    /// Kept column indices, in descending-score order.
    pub kept: Vec<usize>,
}

/// Frozen preprocessing parameters. Application order is
/// impute → fence → normalize → select.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FittedPipeline {
    pub fences: OutlierFences,
    pub impute: ImputationValues,
    pub norm: NormalizationParams,
    pub select: FeatureSelection,
    pub fitted_on: usize,
    pub schema: FeatureSchema,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PipelineOptions {
    pub policy: OutlierPolicy,
    pub norm: NormMethod,
    /// Keep only the top-m features by |score|; `None` keeps all.
    pub top_m: Option<usize>,
}

impl Default for PipelineOptions {
    fn default() -> Self {
        PipelineOptions { policy: OutlierPolicy::Drop, norm: NormMethod::MinMax, top_m: None }
    }
}

/// Linear-interpolation quantile at rank position `q·(n−1)` of a sorted slice.
pub fn quantile(sorted: &[f64], q: f64) -> Result<f64, PreprocessError> {
    if sorted.is_empty() {
        return Err(PreprocessError::EmptyInput);
    }
    let q = q.clamp(0.0, 1.0);
    let pos = q * (sorted.len() - 1) as f64;
    let lo = pos.floor() as usize;
    let hi = pos.ceil() as usize;
    let frac = pos - lo as f64;
    Ok(sorted[lo] + (sorted[hi] - sorted[lo]) * frac)
}

/// Sample Pearson correlation; 0 when either side has zero variance.
pub fn pearson_r(x: &[f64], y: &[f64]) -> Result<f64, PreprocessError> {
    if x.len() != y.len() {
        return Err(PreprocessError::LengthMismatch { left: x.len(), right: y.len() });
    }
    if x.len() < 2 {
        return Err(PreprocessError::TooShort);
    }
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let mut sxy = 0.0;
    let mut sxx = 0.0;
    let mut syy = 0.0;
    for (&a, &b) in x.iter().zip(y) {
        sxy += (a - mx) * (b - my);
        sxx += (a - mx) * (a - mx);
        syy += (b - my) * (b - my);
    }
    if sxx == 0.0 || syy == 0.0 {
        return Ok(0.0);
    }
    Ok((sxy / (sxx.sqrt() * syy.sqrt())).clamp(-1.0, 1.0))
}

/// Ranks features by |score| (descending, ties to the lower column index)
/// and keeps the top `top_m` (all when `None`).
pub fn select_features(
    scores: &[f64],
    top_m: Option<usize>,
) -> Result<FeatureSelection, PreprocessError> {
    let d = scores.len();
    if d == 0 {
        return Err(PreprocessError::EmptyInput);
    }
    let m = top_m.unwrap_or(d);
    if m < 1 || m > d {
        return Err(PreprocessError::TopMExceedsFeatureCount { top_m: m, d });
    }
    let abs: Vec<f64> = scores.iter().map(|s| s.abs()).collect();
    let mut order: Vec<usize> = (0..d).collect();
    order.sort_by(|&a, &b| abs[b].partial_cmp(&abs[a]).unwrap().then(a.cmp(&b)));
    Ok(FeatureSelection { scores: abs, kept: order[..m].to_vec() })
}

fn tukey_fence(values: &mut Vec<f64>) -> Result<(f64, f64), PreprocessError> {
    values.sort_by(f64::total_cmp);
    let q1 = quantile(values, 0.25)?;
    let q3 = quantile(values, 0.75)?;
    let iqr = q3 - q1;
    Ok((q1 - 1.5 * iqr, q3 + 1.5 * iqr))
}

fn within(v: f64, fence: (f64, f64)) -> bool {
    v >= fence.0 && v <= fence.1
}

/// Learns imputation values, outlier fences, normalization parameters and
/// feature selection from the given training rows only.
pub fn fit_pipeline(
    ds: &LabeledDataset,
    train: &[usize],
    opts: &PipelineOptions,
) -> Result<FittedPipeline, PreprocessError> {
    if train.is_empty() {
        return Err(PreprocessError::EmptyTrainingSet);
    }
    let n = ds.n_rows();
    if let Some(&bad) = train.iter().find(|&&i| i >= n) {
        return Err(PreprocessError::IndexOutOfBounds { index: bad, n });
    }
    let d = ds.n_features();

    // Imputation: training mean of non-missing entries per feature.
    let mut fill = Vec::with_capacity(d);
    for j in 0..d {
        let (sum, count) = train.iter().fold((0.0, 0usize), |(s, c), &i| {
            let v = ds.features[i][j];
            if v.is_nan() { (s, c) } else { (s + v, c + 1) }
        });
        if count == 0 {
            return Err(PreprocessError::AllMissingFeature { name: ds.schema.names[j].clone() });
        }
        fill.push(sum / count as f64);
    }

    // Imputed training matrix.
    let imputed: Vec<Vec<f64>> = train
        .iter()
        .map(|&i| {
            (0..d)
                .map(|j| {
                    let v = ds.features[i][j];
                    if v.is_nan() { fill[j] } else { v }
                })
                .collect()
        })
        .collect();
    let targets: Vec<f64> = train.iter().map(|&i| ds.target[i]).collect();

    // Tukey fences per feature column and for the target.
    let mut feature_fences = Vec::with_capacity(d);
    for j in 0..d {
        let mut col: Vec<f64> = imputed.iter().map(|r| r[j]).collect();
        feature_fences.push(tukey_fence(&mut col)?);
    }
    let target_fence = tukey_fence(&mut targets.clone())?;
    let fences = OutlierFences { feature_fences, target_fence, policy: opts.policy };

    // Rows surviving (or clipped by) the fences feed normalization and
    // correlation scoring.
    let mut fenced_rows: Vec<Vec<f64>> = Vec::new();
    let mut fenced_targets: Vec<f64> = Vec::new();
    for (row, &y) in imputed.iter().zip(&targets) {
        match opts.policy {
            OutlierPolicy::Drop => {
                let ok = row.iter().zip(&fences.feature_fences).all(|(&v, &f)| within(v, f))
                    && within(y, fences.target_fence);
                if ok {
                    fenced_rows.push(row.clone());
                    fenced_targets.push(y);
                }
            }
            OutlierPolicy::Clip => {
                let clipped: Vec<f64> = row
                    .iter()
                    .zip(&fences.feature_fences)
                    .map(|(&v, &(lo, hi))| v.clamp(lo, hi))
                    .collect();
                fenced_rows.push(clipped);
                fenced_targets.push(y.clamp(fences.target_fence.0, fences.target_fence.1));
            }
        }
    }
    if fenced_rows.is_empty() {
        return Err(PreprocessError::EmptyTrainingSet);
    }

    let m = fenced_rows.len() as f64;
    let mut params = Vec::with_capacity(d);
    for j in 0..d {
        let col: Vec<f64> = fenced_rows.iter().map(|r| r[j]).collect();
        match opts.norm {
            NormMethod::MinMax => {
                let lo = col.iter().copied().fold(f64::INFINITY, f64::min);
                let hi = col.iter().copied().fold(f64::NEG_INFINITY, f64::max);
                params.push((lo, hi));
            }
            NormMethod::ZScore => {
                let mean = col.iter().sum::<f64>() / m;
                let var = col.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / m;
                params.push((mean, var.sqrt()));
            }
        }
    }
    let norm = NormalizationParams { method: opts.norm, params };

    let mut scores = Vec::with_capacity(d);
    for j in 0..d {
        let col: Vec<f64> = fenced_rows.iter().map(|r| r[j]).collect();
        let r = if col.len() < 2 { 0.0 } else { pearson_r(&col, &fenced_targets)? };
        scores.push(r.abs());
    }
    let select = select_features(&scores, opts.top_m)?;

    Ok(FittedPipeline {
        fences,
        impute: ImputationValues { fill },
        norm,
        select,
        fitted_on: train.len(),
        schema: ds.schema.clone(),
    })
}

fn normalize_value(v: f64, method: NormMethod, (a, b): (f64, f64)) -> f64 {
    match method {
        NormMethod::MinMax => {
            if b > a {
                (v - a) / (b - a)
            } else {
                0.0
            }
        }
        NormMethod::ZScore => {
            if b > 0.0 {
                (v - a) / b
            } else {
                0.0
            }
        }
    }
}

/// Applies a fitted pipeline to the given rows.
///
/// Returns the transformed feature matrix (selected columns, in selection
/// order), the targets of the kept rows, and the original indices of the
/// kept rows. Normalized values are not re-clamped, so test values outside
/// the fit-time range map outside [0, 1].
pub fn apply_pipeline(
    p: &FittedPipeline,
    ds: &LabeledDataset,
    rows: &[usize],
) -> Result<(Vec<Vec<f64>>, Vec<f64>, Vec<usize>), PreprocessError> {
    let (x, kept) = transform_rows(p, ds, rows, true)?;
    let y = kept.iter().map(|&i| ds.target[i]).collect();
    Ok((x, y, kept))
}

/// Feature-only variant for batch prediction: the target fence is ignored,
/// so rows are never dropped because of their label.
pub fn apply_pipeline_features(
    p: &FittedPipeline,
    ds: &LabeledDataset,
    rows: &[usize],
) -> Result<(Vec<Vec<f64>>, Vec<usize>), PreprocessError> {
    transform_rows(p, ds, rows, false)
}

fn transform_rows(
    p: &FittedPipeline,
    ds: &LabeledDataset,
    rows: &[usize],
    use_target_fence: bool,
) -> Result<(Vec<Vec<f64>>, Vec<usize>), PreprocessError> {
    if ds.schema.names != p.schema.names {
        return Err(PreprocessError::SchemaMismatch);
    }
    let n = ds.n_rows();
    if let Some(&bad) = rows.iter().find(|&&i| i >= n) {
        return Err(PreprocessError::IndexOutOfBounds { index: bad, n });
    }
    let d = p.schema.len();
    let mut out = Vec::with_capacity(rows.len());
    let mut kept = Vec::with_capacity(rows.len());
    'rows: for &i in rows {
        let mut row: Vec<f64> = (0..d)
            .map(|j| {
                let v = ds.features[i][j];
                if v.is_nan() { p.impute.fill[j] } else { v }
            })
            .collect();
        match p.fences.policy {
            OutlierPolicy::Drop => {
                for (v, &f) in row.iter().zip(&p.fences.feature_fences) {
                    if !within(*v, f) {
                        continue 'rows;
                    }
                }
                if use_target_fence && !within(ds.target[i], p.fences.target_fence) {
                    continue 'rows;
                }
            }
            OutlierPolicy::Clip => {
                for (v, &(lo, hi)) in row.iter_mut().zip(&p.fences.feature_fences) {
                    *v = v.clamp(lo, hi);
                }
            }
        }
        let selected: Vec<f64> = p
            .select
            .kept
            .iter()
            .map(|&j| normalize_value(row[j], p.norm.method, p.norm.params[j]))
            .collect();
        out.push(selected);
        kept.push(i);
    }
    Ok((out, kept))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::data::FeatureSchema;

    fn schema(d: usize) -> FeatureSchema {
        FeatureSchema {
            names: (0..d).map(|j| format!("f{j}")).collect(),
            units: (0..d).map(|_| String::new()).collect(),
        }
    }

    fn dataset(features: Vec<Vec<f64>>, target: Vec<f64>) -> LabeledDataset {
        let d = features[0].len();
        let n = features.len();
        LabeledDataset {
            timestamps: (0..n as i64).collect(),
            features,
            target,
            schema: schema(d),
        }
    }

    #[test]
    fn quantile_examples() {
        assert_eq!(quantile(&[1.0, 2.0, 3.0, 4.0], 0.5).unwrap(), 2.5);
        assert_eq!(quantile(&[5.0], 0.3).unwrap(), 5.0);
        assert_eq!(quantile(&[1.0, 2.0, 3.0, 4.0, 5.0], 0.25).unwrap(), 2.0);
        assert!(matches!(quantile(&[], 0.5), Err(PreprocessError::EmptyInput)));
    }

    #[test]
    fn pearson_examples() {
        let x = [1.0, 2.0, 3.0, 4.0];
        let y: Vec<f64> = x.iter().map(|v| 2.0 * v + 1.0).collect();
        assert!((pearson_r(&x, &y).unwrap() - 1.0).abs() < 1e-12);

        let neg: Vec<f64> = x.iter().map(|v| -v).collect();
        assert!((pearson_r(&x, &neg).unwrap() + 1.0).abs() < 1e-12);

        // Definitional formula computed by hand for x=[1,2,3], y=[2,1,3]:
        // cov = 0.5·... → r = 1/2.
        let r = pearson_r(&[1.0, 2.0, 3.0], &[2.0, 1.0, 3.0]).unwrap();
        assert!((r - 0.5).abs() < 1e-12, "r = {r}");

        assert_eq!(pearson_r(&[1.0, 1.0, 1.0], &[1.0, 2.0, 3.0]).unwrap(), 0.0);
        assert!(matches!(pearson_r(&[1.0], &[1.0]), Err(PreprocessError::TooShort)));
        assert!(matches!(
            pearson_r(&[1.0, 2.0], &[1.0]),
            Err(PreprocessError::LengthMismatch { .. })
        ));
    }

    #[test]
    fn pearson_affine_invariance() {
        let x = [0.3, 1.7, -2.0, 4.5, 0.9];
        let y = [1.0, 0.2, 3.3, -0.5, 2.2];
        let r = pearson_r(&x, &y).unwrap();
        let scaled: Vec<f64> = x.iter().map(|v| 3.0 * v + 7.0).collect();
        assert!((pearson_r(&scaled, &y).unwrap() - r).abs() < 1e-12);
        let flipped: Vec<f64> = x.iter().map(|v| -2.0 * v).collect();
        assert!((pearson_r(&flipped, &y).unwrap() + r).abs() < 1e-12);
    }

    #[test]
    fn select_features_examples() {
        let sel = select_features(&[0.9, 0.1, 0.5], Some(2)).unwrap();
        assert_eq!(sel.kept, vec![0, 2]);

        let sel = select_features(&[0.2, 0.8, 0.5], None).unwrap();
        assert_eq!(sel.kept, vec![1, 2, 0]);

        let sel = select_features(&[0.5, 0.5], Some(1)).unwrap();
        assert_eq!(sel.kept, vec![0]);

        assert!(matches!(
            select_features(&[0.5, 0.5], Some(3)),
            Err(PreprocessError::TopMExceedsFeatureCount { .. })
        ));
    }

    #[test]
    fn fit_minmax_from_extremes() {
        let ds = dataset(vec![vec![0.0], vec![10.0]], vec![1.0, 2.0]);
        let p = fit_pipeline(&ds, &[0, 1], &PipelineOptions::default()).unwrap();
        assert_eq!(p.norm.params[0], (0.0, 10.0));
    }

    #[test]
    fn fence_flags_extreme_value() {
        // Values 1..8 plus 1000; compute Q1/Q3 by the quantile definition on
        // the 9 sorted values and verify 1000 lies above the upper fence.
        let vals: Vec<f64> = (1..=8).map(|v| v as f64).chain([1000.0]).collect();
        let mut sorted = vals.clone();
        sorted.sort_by(f64::total_cmp);
        let q1 = quantile(&sorted, 0.25).unwrap();
        let q3 = quantile(&sorted, 0.75).unwrap();
        let upper = q3 + 1.5 * (q3 - q1);
        assert!(1000.0 > upper);

        let ds = dataset(vals.iter().map(|&v| vec![v]).collect(), vec![0.0; 9]);
        let p = fit_pipeline(&ds, &(0..9).collect::<Vec<_>>(), &PipelineOptions::default()).unwrap();
        assert_eq!(p.fences.feature_fences[0].1, upper);
        let (_, _, kept) = apply_pipeline(&p, &ds, &(0..9).collect::<Vec<_>>()).unwrap();
        assert!(!kept.contains(&8), "outlier row must be dropped");
        assert_eq!(kept.len(), 8);
    }

    #[test]
    fn no_outliers_drops_nothing() {
        let ds = dataset(
            (0..10).map(|v| vec![v as f64]).collect(),
            (0..10).map(|v| v as f64).collect(),
        );
        let idx: Vec<usize> = (0..10).collect();
        let p = fit_pipeline(&ds, &idx, &PipelineOptions::default()).unwrap();
        let (_, _, kept) = apply_pipeline(&p, &ds, &idx).unwrap();
        assert_eq!(kept, idx);
    }

    #[test]
    fn perfect_feature_ranks_first() {
        let ds = dataset(
            vec![vec![5.0, 1.0], vec![1.0, 2.0], vec![9.0, 3.0], vec![4.0, 4.0]],
            vec![1.0, 2.0, 3.0, 4.0],
        );
        let p = fit_pipeline(&ds, &[0, 1, 2, 3], &PipelineOptions::default()).unwrap();
        assert!((p.select.scores[1] - 1.0).abs() < 1e-12);
        assert_eq!(p.select.kept[0], 1);
    }

    #[test]
    fn minmax_endpoints_and_overshoot() {
        let ds = dataset(vec![vec![2.0], vec![6.0], vec![4.0]], vec![0.0, 1.0, 2.0]);
        let p = fit_pipeline(&ds, &[0, 1, 2], &PipelineOptions::default()).unwrap();
        let (x, _, _) = apply_pipeline(&p, &ds, &[0, 1]).unwrap();
        assert_eq!(x[0][0], 0.0);
        assert_eq!(x[1][0], 1.0);

        // A fresh value above the fit-time max is not re-clamped. The fence
        // upper bound (Q3 + 1.5·IQR = 5 + 3 = 8) still admits 7.
        let test = dataset(vec![vec![7.0]], vec![0.0]);
        let (x, _, kept) = apply_pipeline(&p, &test, &[0]).unwrap();
        assert_eq!(kept, vec![0]);
        assert!(x[0][0] > 1.0);
    }

    #[test]
    fn constant_column_normalizes_to_zero() {
        let ds = dataset(vec![vec![3.0, 1.0], vec![3.0, 2.0]], vec![0.0, 1.0]);
        let opts = PipelineOptions { policy: OutlierPolicy::Clip, ..Default::default() };
        let p = fit_pipeline(&ds, &[0, 1], &opts).unwrap();
        let test = dataset(vec![vec![42.0, 1.5]], vec![0.0]);
        let (x, _, _) = apply_pipeline(&p, &test, &[0]).unwrap();
        let const_col = p.select.kept.iter().position(|&j| j == 0).unwrap();
        assert_eq!(x[0][const_col], 0.0);
    }

    #[test]
    fn imputation_uses_training_mean() {
        let ds = dataset(
            vec![vec![1.0], vec![3.0], vec![f64::NAN]],
            vec![0.0, 4.0, 2.0],
        );
        let p = fit_pipeline(&ds, &[0, 1], &PipelineOptions::default()).unwrap();
        assert_eq!(p.impute.fill, vec![2.0]);
        let (x, _, kept) = apply_pipeline(&p, &ds, &[2]).unwrap();
        assert_eq!(kept, vec![2]);
        // Imputed 2.0 normalized over (1, 3) → 0.5.
        assert_eq!(x[0][0], 0.5);
    }

    #[test]
    fn all_missing_feature_is_an_error() {
        let ds = dataset(vec![vec![f64::NAN], vec![f64::NAN]], vec![0.0, 1.0]);
        assert!(matches!(
            fit_pipeline(&ds, &[0, 1], &PipelineOptions::default()),
            Err(PreprocessError::AllMissingFeature { .. })
        ));
    }

    #[test]
    fn apply_rejects_schema_mismatch() {
        let ds = dataset(vec![vec![1.0], vec![2.0]], vec![0.0, 1.0]);
        let p = fit_pipeline(&ds, &[0, 1], &PipelineOptions::default()).unwrap();
        let mut other = ds.clone();
        other.schema.names[0] = "other".into();
        assert!(matches!(
            apply_pipeline(&p, &other, &[0]),
            Err(PreprocessError::SchemaMismatch)
        ));
    }

    #[test]
    fn apply_is_rowwise_pure() {
        // Transforming a test row must not depend on which other rows are
        // present in the same call.
        let ds = dataset(
            (0..20).map(|v| vec![v as f64, (v * v) as f64]).collect(),
            (0..20).map(|v| v as f64).collect(),
        );
        let train: Vec<usize> = (0..15).collect();
        let p = fit_pipeline(&ds, &train, &PipelineOptions::default()).unwrap();
        let (full, _, kept_full) = apply_pipeline(&p, &ds, &[15, 16, 17]).unwrap();
        let (solo, _, kept_solo) = apply_pipeline(&p, &ds, &[16]).unwrap();
        let pos = kept_full.iter().position(|&i| i == 16).unwrap();
        assert_eq!(kept_solo, vec![16]);
        assert_eq!(full[pos], solo[0]);
    }

    #[test]
    fn minmax_round_trips() {
        let ds = dataset(
            vec![vec![2.0], vec![11.0], vec![5.5], vec![9.1]],
            vec![0.0, 1.0, 2.0, 3.0],
        );
        let idx: Vec<usize> = (0..4).collect();
        let p = fit_pipeline(&ds, &idx, &PipelineOptions::default()).unwrap();
        let (x, _, kept) = apply_pipeline(&p, &ds, &idx).unwrap();
        let (lo, hi) = p.norm.params[0];
        for (row, &i) in x.iter().zip(&kept) {
            let back = row[0] * (hi - lo) + lo;
            assert!((back - ds.features[i][0]).abs() < 1e-9);
        }
    }

    #[test]
    fn zscore_option() {
        let ds = dataset(vec![vec![1.0], vec![3.0]], vec![0.0, 1.0]);
        let opts = PipelineOptions { norm: NormMethod::ZScore, ..Default::default() };
        let p = fit_pipeline(&ds, &[0, 1], &opts).unwrap();
        let (mean, std) = p.norm.params[0];
        assert_eq!(mean, 2.0);
        assert_eq!(std, 1.0);
        let (x, _, _) = apply_pipeline(&p, &ds, &[0, 1]).unwrap();
        assert_eq!(x[0][0], -1.0);
        assert_eq!(x[1][0], 1.0);
    }
}
