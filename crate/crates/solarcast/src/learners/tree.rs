//! CART regression trees: greedy binary splits minimizing sum of squared
//! errors, leaves predicting the mean of their training targets.

use serde::{Deserialize, Serialize};

use super::{check_matrix, LearnError};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum TreeNode {
    Leaf {
        prediction: f64,
        n: usize,
    },
    Split {
        feature: usize,
        /// Midpoint between two consecutive distinct sorted feature values.
        threshold: f64,
        left: Box<TreeNode>,
        right: Box<TreeNode>,
    },
}

impl TreeNode {
    pub fn predict_one(&self, x: &[f64]) -> f64 {
        match self {
            TreeNode::Leaf { prediction, .. } => *prediction,
            TreeNode::Split { feature, threshold, left, right } => {
                if x[*feature] <= *threshold {
                    left.predict_one(x)
                } else {
                    right.predict_one(x)
                }
            }
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            TreeNode::Leaf { .. } => 0,
            TreeNode::Split { left, right, .. } => 1 + left.depth().max(right.depth()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TreeConfig {
    pub max_depth: usize,
    pub min_samples_leaf: usize,
    pub min_improvement: f64,
}

impl Default for TreeConfig {
    fn default() -> Self {
        TreeConfig { max_depth: 6, min_samples_leaf: 2, min_improvement: 1e-9 }
    }
}

impl TreeConfig {
    pub fn validate(&self) -> Result<(), LearnError> {
        if self.min_samples_leaf < 1 {
            return Err(LearnError::InvalidHyperparameter("min_samples_leaf must be ≥ 1".into()));
        }
        if !(self.min_improvement.is_finite() && self.min_improvement >= 0.0) {
            return Err(LearnError::InvalidHyperparameter("min_improvement must be ≥ 0".into()));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TreeModel {
    pub root: TreeNode,
    pub n_features: usize,
}

impl TreeModel {
    pub fn predict_one(&self, x: &[f64]) -> f64 {
        self.root.predict_one(x)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SplitCandidate {
    pub threshold: f64,
    pub sse_reduction: f64,
    /// Post-split left + right SSE, used for cross-feature comparison.
    pub total_sse: f64,
}

/// Finds the SSE-minimizing threshold for one feature column.
///
/// Candidates are midpoints between consecutive distinct sorted values with
/// at least `min_samples_leaf` samples on each side; ties go to the lowest
/// threshold. Returns `None` when no candidate reduces SSE by at least
/// `min_improvement`.
pub fn best_split(
    x: &[f64],
    y: &[f64],
    min_samples_leaf: usize,
    min_improvement: f64,
) -> Option<SplitCandidate> {
    let n = x.len();
    if n < 2 || n != y.len() || n < 2 * min_samples_leaf {
        return None;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| x[a].total_cmp(&x[b]));

    let mut prefix_sum = vec![0.0; n + 1];
    let mut prefix_sq = vec![0.0; n + 1];
    for (pos, &i) in order.iter().enumerate() {
        prefix_sum[pos + 1] = prefix_sum[pos] + y[i];
        prefix_sq[pos + 1] = prefix_sq[pos] + y[i] * y[i];
    }
    let sse = |lo: usize, hi: usize| -> f64 {
        let count = (hi - lo) as f64;
        let sum = prefix_sum[hi] - prefix_sum[lo];
        let sq = prefix_sq[hi] - prefix_sq[lo];
        (sq - sum * sum / count).max(0.0)
    };
    let parent = sse(0, n);

    let mut best: Option<SplitCandidate> = None;
    for i in min_samples_leaf..=(n - min_samples_leaf) {
        let (lo_v, hi_v) = (x[order[i - 1]], x[order[i]]);
        if lo_v >= hi_v {
            continue;
        }
        let total = sse(0, i) + sse(i, n);
        if best.as_ref().is_none_or(|b| total < b.total_sse) {
            best = Some(SplitCandidate {
                threshold: lo_v + (hi_v - lo_v) / 2.0,
                sse_reduction: parent - total,
                total_sse: total,
            });
        }
    }
    best.filter(|b| b.sse_reduction >= min_improvement)
}

fn leaf(y: &[f64], idx: &[usize]) -> TreeNode {
    let mean = idx.iter().map(|&i| y[i]).sum::<f64>() / idx.len() as f64;
    TreeNode::Leaf { prediction: mean, n: idx.len() }
}

/// Recursive greedy growth. `feature_sampler` yields the sorted candidate
/// feature indices for each node (all features for plain trees, a random
/// subset for forests). Cross-feature ties go to the lower feature index.
pub(crate) fn grow_tree(
    x: &[Vec<f64>],
    y: &[f64],
    idx: &[usize],
    cfg: &TreeConfig,
    depth: usize,
    feature_sampler: &mut dyn FnMut() -> Vec<usize>,
) -> TreeNode {
    if depth >= cfg.max_depth || idx.len() < 2 * cfg.min_samples_leaf || idx.len() < 2 {
        return leaf(y, idx);
    }
    let col_y: Vec<f64> = idx.iter().map(|&i| y[i]).collect();

    let mut best: Option<(usize, SplitCandidate)> = None;
    for f in feature_sampler() {
        let col_x: Vec<f64> = idx.iter().map(|&i| x[i][f]).collect();
        if let Some(cand) = best_split(&col_x, &col_y, cfg.min_samples_leaf, cfg.min_improvement) {
            if best.as_ref().is_none_or(|(_, b)| cand.total_sse < b.total_sse) {
                best = Some((f, cand));
            }
        }
    }
    let Some((feature, cand)) = best else {
        return leaf(y, idx);
    };
    let (left_idx, right_idx): (Vec<usize>, Vec<usize>) =
        idx.iter().partition(|&&i| x[i][feature] <= cand.threshold);
    let left = grow_tree(x, y, &left_idx, cfg, depth + 1, feature_sampler);
    let right = grow_tree(x, y, &right_idx, cfg, depth + 1, feature_sampler);
    TreeNode::Split {
        feature,
        threshold: cand.threshold,
        left: Box::new(left),
        right: Box::new(right),
    }
}

/// Fits a CART regression tree over all features.
pub fn fit_tree(x: &[Vec<f64>], y: &[f64], cfg: &TreeConfig) -> Result<TreeModel, LearnError> {
    let d = check_matrix(x, y)?;
    cfg.validate()?;
    let idx: Vec<usize> = (0..x.len()).collect();
    let mut all = || (0..d).collect::<Vec<usize>>();
    let root = grow_tree(x, y, &idx, cfg, 0, &mut all);
    Ok(TreeModel { root, n_features: d })
}
