//! Central weights on the real line: w(x + y) ≤ w(x) w(y) checked on grids.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::weights::VALIDITY_TOL;

#[derive(Debug, Clone, PartialEq)]
pub enum LineWeight<T> {
    /// (1 + |x|)^a
    TauA(T),
    /// Geometric interpolation between samples, constant beyond the ends.
    Sampled { grid: Vec<T>, values: Vec<T>, delta: T },
}

impl<T: Real> LineWeight<T> {
    pub fn tau_a(a: T) -> Result<Self> {
        if a.is_nan() || a < T::zero() || a.is_infinite() {
            return Err(Error::InvalidWeight(format!("tau_a needs a >= 0, got {a}")));
        }
        Ok(LineWeight::TauA(a))
    }

    pub fn sampled(grid: Vec<T>, values: Vec<T>, delta: T) -> Result<Self> {
        if grid.is_empty() || grid.len() != values.len() {
            return Err(Error::InvalidWeight(format!(
                "sampled weight needs matching nonempty grid and values ({} vs {})",
                grid.len(),
                values.len()
            )));
        }
        if delta.is_nan() || delta <= T::zero() || delta.is_infinite() {
            return Err(Error::InvalidWeight(format!("delta must be positive, got {delta}")));
        }
        if let Some(k) = grid.windows(2).position(|w| w[0] >= w[1] || w[0].is_nan() || w[1].is_nan()) {
            return Err(Error::InvalidWeight(format!("grid must be strictly increasing (index {})", k + 1)));
        }
        if let Some(k) = grid.iter().position(|x| !x.is_finite()) {
            return Err(Error::InvalidWeight(format!("grid point {k} is not finite")));
        }
        if let Some(k) = values.iter().position(|v| v.is_nan() || *v < delta || v.is_infinite()) {
            return Err(Error::InvalidWeight(format!("value {} at index {k} is below delta {delta}", values[k])));
        }
        Ok(LineWeight::Sampled { grid, values, delta })
    }

    /// Value at `x`, and whether `x` lies outside the sampled range.
    pub fn eval_checked(&self, x: T) -> (T, bool) {
        match self {
            LineWeight::TauA(a) => ((T::one() + x.abs()).powf(*a), false),
            LineWeight::Sampled { grid, values, .. } => {
                let last = grid.len() - 1;
                if x < grid[0] {
                    return (values[0], true);
                }
                if x > grid[last] {
                    return (values[last], true);
                }
                let hi = grid.partition_point(|g| *g < x);
                if grid[hi] == x {
                    return (values[hi], false);
                }
                let lo = hi - 1;
                let s = (x - grid[lo]) / (grid[hi] - grid[lo]);
                let v = (values[lo].ln() * (T::one() - s) + values[hi].ln() * s).exp();
                (v, false)
            }
        }
    }

    pub fn pointwise_product(&self, other: &Self, grid: &[T]) -> Result<Self> {
        let values: Vec<T> = grid.iter().map(|&x| eval_line(self, x) * eval_line(other, x)).collect();
        let delta = values.iter().copied().fold(T::infinity(), T::min);
        Self::sampled(grid.to_vec(), values, delta)
    }
}

pub fn eval_line<T: Real>(weight: &LineWeight<T>, x: T) -> T {
    weight.eval_checked(x).0
}

#[derive(Debug, Clone, PartialEq)]
pub struct LineViolation<T> {
    pub x: T,
    pub y: T,
    pub ratio: T,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LineViolationReport<T> {
    pub violations: Vec<LineViolation<T>>,
    pub checked_pairs: usize,
    /// Sums x + y that fell outside a sampled weight's grid.
    pub extrapolated: usize,
}

impl<T> LineViolationReport<T> {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Every ordered pair (x, y) of grid points with w(x+y) > w(x)w(y)(1 + tol).
pub fn verify_line_weight<T: Real>(weight: &LineWeight<T>, grid: &[T]) -> LineViolationReport<T> {
    let tol = T::one() + T::lit(VALIDITY_TOL);
    let values: Vec<T> = grid.iter().map(|&x| eval_line(weight, x)).collect();
    let mut violations = Vec::new();
    let mut extrapolated = 0;
    for (i, &x) in grid.iter().enumerate() {
        for (j, &y) in grid.iter().enumerate() {
            let (sum, outside) = weight.eval_checked(x + y);
            extrapolated += outside as usize;
            let ratio = sum / (values[i] * values[j]);
            if ratio > tol {
                violations.push(LineViolation { x, y, ratio });
            }
        }
    }
    LineViolationReport { violations, checked_pairs: grid.len() * grid.len(), extrapolated }
}

/// `start, start + step, …` up to and including `end` (within rounding).
pub fn uniform_grid<T: Real>(start: T, end: T, step: T) -> Result<Vec<T>> {
    if step.is_nan() || step <= T::zero() || start.is_nan() || end.is_nan() || end < start {
        return Err(Error::InvalidArgument(format!("bad grid {start}..{end} step {step}")));
    }
    let n = ((end - start) / step + T::lit(1e-9)).floor().to_f64_lossy() as u64;
    Ok((0..=n).map(|k| start + step * T::count(k)).collect())
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
pub enum LineWeightJson {
    Family { family: String, a: f64 },
    Sampled { grid: Vec<f64>, values: Vec<f64>, delta: f64 },
}

impl LineWeight<f64> {
    pub fn from_json(text: &str) -> Result<Self> {
        let parsed: LineWeightJson = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        Self::from_descriptor(parsed)
    }

    pub fn from_descriptor(json: LineWeightJson) -> Result<Self> {
        match json {
            LineWeightJson::Family { family, a } if family == "tau_a" => Self::tau_a(a),
            LineWeightJson::Family { family, .. } => {
                Err(Error::InvalidWeight(format!("unknown line weight family {family:?}")))
            }
            LineWeightJson::Sampled { grid, values, delta } => Self::sampled(grid, values, delta),
        }
    }

    pub fn to_descriptor(&self) -> LineWeightJson {
        match self {
            LineWeight::TauA(a) => LineWeightJson::Family { family: "tau_a".into(), a: *a },
            LineWeight::Sampled { grid, values, delta } => {
                LineWeightJson::Sampled { grid: grid.clone(), values: values.clone(), delta: *delta }
            }
        }
    }
}
