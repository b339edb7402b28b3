//! From-scratch regressors sharing a uniform fit/predict contract.
//!
//! Every trainer is deterministic given its seed. Trained models are
//! immutable and safe to evaluate from many threads.

pub mod forest;
pub mod gbm;
pub mod knn;
pub mod linear;
pub mod mlp;
pub mod svr;
pub mod tree;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use forest::{fit_forest, ForestConfig, ForestModel};
pub use gbm::{fit_gbm, GbmConfig, GbmModel};
pub use knn::{fit_knn, knn_predict, KnnConfig, KnnModel, KnnWeighting};
pub use linear::{fit_linear, LinearModel};
pub use mlp::{fit_mlp, MlpConfig, MlpGradient, MlpModel};
pub use svr::{fit_svr, SvrConfig, SvrModel};
pub use tree::{best_split, fit_tree, SplitCandidate, TreeConfig, TreeModel, TreeNode};

#[derive(Debug, Error)]
pub enum LearnError {
    #[error("non-finite value in training input")]
    NonFiniteInput,
    #[error("invalid hyperparameter: {0}")]
    InvalidHyperparameter(String),
    #[error("dimension mismatch: model expects {expected} features, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("training loss became non-finite at epoch {epoch}")]
    NonFiniteLoss { epoch: usize },
    #[error("empty training set")]
    EmptyTrainingSet,
}

/// Tagged union over the fitted learners, with a uniform predict contract.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum TrainedModel {
    Linear(LinearModel),
    Tree(TreeModel),
    Forest(ForestModel),
    Gbm(GbmModel),
    Knn(KnnModel),
    Mlp(MlpModel),
    Svr(SvrModel),
}

impl TrainedModel {
    pub fn n_features(&self) -> usize {
        match self {
            TrainedModel::Linear(m) => m.weights.len(),
            TrainedModel::Tree(m) => m.n_features,
            TrainedModel::Forest(m) => m.n_features,
            TrainedModel::Gbm(m) => m.n_features,
            TrainedModel::Knn(m) => m.train_x.first().map_or(0, |r| r.len()),
            TrainedModel::Mlp(m) => m.n_features,
            TrainedModel::Svr(m) => m.weights.len(),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            TrainedModel::Linear(_) => "linreg",
            TrainedModel::Tree(_) => "tree",
            TrainedModel::Forest(_) => "forest",
            TrainedModel::Gbm(_) => "gbm",
            TrainedModel::Knn(_) => "knn",
            TrainedModel::Mlp(_) => "mlp",
            TrainedModel::Svr(_) => "svr",
        }
    }

    pub fn predict_one(&self, x: &[f64]) -> Result<f64, LearnError> {
        let expected = self.n_features();
        if x.len() != expected {
            return Err(LearnError::DimensionMismatch { expected, found: x.len() });
        }
        Ok(match self {
            TrainedModel::Linear(m) => m.predict_one(x),
            TrainedModel::Tree(m) => m.predict_one(x),
            TrainedModel::Forest(m) => m.predict_one(x),
            TrainedModel::Gbm(m) => m.predict_one(x),
            TrainedModel::Knn(m) => knn_predict(m, x),
            TrainedModel::Mlp(m) => m.predict_one(x),
            TrainedModel::Svr(m) => m.predict_one(x),
        })
    }

    /// Row-wise prediction over a feature matrix.
    pub fn predict(&self, x: &[Vec<f64>]) -> Result<Vec<f64>, LearnError> {
        x.iter().map(|row| self.predict_one(row)).collect()
    }
}

pub(crate) fn check_matrix(x: &[Vec<f64>], y: &[f64]) -> Result<usize, LearnError> {
    if x.is_empty() || y.is_empty() {
        return Err(LearnError::EmptyTrainingSet);
    }
    if x.len() != y.len() {
        return Err(LearnError::DimensionMismatch { expected: x.len(), found: y.len() });
    }
    let d = x[0].len();
    for row in x {
        if row.len() != d {
            return Err(LearnError::DimensionMismatch { expected: d, found: row.len() });
        }
        if row.iter().any(|v| !v.is_finite()) {
            return Err(LearnError::NonFiniteInput);
        }
    }
    if y.iter().any(|v| !v.is_finite()) {
        return Err(LearnError::NonFiniteInput);
    }
    Ok(d)
}
