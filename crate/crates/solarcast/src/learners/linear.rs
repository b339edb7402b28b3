//! Ordinary/ridge least squares via the normal equations.

use serde::{Deserialize, Serialize};

use super::{check_matrix, LearnError};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LinearModel {
    pub weights: Vec<f64>,
    pub intercept: f64,
    pub ridge_lambda: f64,
}

impl LinearModel {
    pub fn predict_one(&self, x: &[f64]) -> f64 {
        self.intercept + self.weights.iter().zip(x).map(|(w, v)| w * v).sum::<f64>()
    }
}

/// Solves a dense symmetric system by Gaussian elimination with partial
/// pivoting. Returns `None` when a pivot is numerically zero.
fn solve(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Option<Vec<f64>> {
    let n = b.len();
    let scale: f64 = a
        .iter()
        .flat_map(|r| r.iter())
        .fold(0.0f64, |m, v| m.max(v.abs()))
        .max(1.0);
    for col in 0..n {
        let (pivot_row, pivot) = (col..n)
            .map(|r| (r, a[r][col].abs()))
            .max_by(|x, y| x.1.total_cmp(&y.1))?;
        if pivot < 1e-12 * scale {
            return None;
        }
        a.swap(col, pivot_row);
        b.swap(col, pivot_row);
        for r in col + 1..n {
            let factor = a[r][col] / a[col][col];
            if factor == 0.0 {
                continue;
            }
            for c in col..n {
                a[r][c] -= factor * a[col][c];
            }
            b[r] -= factor * b[col];
        }
    }
    let mut x = vec![0.0; n];
    for col in (0..n).rev() {
        let mut sum = b[col];
        for c in col + 1..n {
            sum -= a[col][c] * x[c];
        }
        x[col] = sum / a[col][col];
    }
    Some(x)
}

/// Minimizes `‖y − Xw − b‖² + λ‖w‖²` (intercept unpenalized) on the
/// intercept-augmented normal equations. A singular system with `λ = 0`
/// falls back to `λ = 1e−8` so degenerate fits stay deterministic.
pub fn fit_linear(x: &[Vec<f64>], y: &[f64], ridge_lambda: f64) -> Result<LinearModel, LearnError> {
    let d = check_matrix(x, y)?;
    if !(ridge_lambda.is_finite() && ridge_lambda >= 0.0) {
        return Err(LearnError::InvalidHyperparameter(format!(
            "ridge_lambda must be ≥ 0, got {ridge_lambda}"
        )));
    }

    let fit_with = |lambda: f64| -> Option<Vec<f64>> {
        // Gram matrix of [1 | X], intercept in slot 0.
        let m = d + 1;
        let mut g = vec![vec![0.0; m]; m];
        let mut rhs = vec![0.0; m];
        for (row, &yi) in x.iter().zip(y) {
            g[0][0] += 1.0;
            rhs[0] += yi;
            for j in 0..d {
                g[0][j + 1] += row[j];
                g[j + 1][0] += row[j];
                rhs[j + 1] += row[j] * yi;
                for k in j..d {
                    g[j + 1][k + 1] += row[j] * row[k];
                }
            }
        }
        for j in 0..d {
            for k in 0..j {
                g[j + 1][k + 1] = g[k + 1][j + 1];
            }
            g[j + 1][j + 1] += lambda;
        }
        solve(g, rhs)
    };

    let coeffs = match fit_with(ridge_lambda) {
        Some(c) => c,
        None if ridge_lambda == 0.0 => fit_with(1e-8).ok_or(LearnError::NonFiniteInput)?,
        None => return Err(LearnError::NonFiniteInput),
    };
    if coeffs.iter().any(|c| !c.is_finite()) {
        return Err(LearnError::NonFiniteInput);
    }
    Ok(LinearModel { weights: coeffs[1..].to_vec(), intercept: coeffs[0], ridge_lambda })
}
