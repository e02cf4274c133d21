//! Central weights on duals of compact groups.
//!
//! A central weight is a function ω on the dual, bounded below by some
//! δ > 0, with ω(σ) ≤ ω(π)ω(ρ) whenever σ occurs in π ⊗ ρ.

mod descriptor;
mod restrict;

use std::collections::BTreeMap;

pub use descriptor::WeightDescriptor;
pub use restrict::{branching_multiplicities, restrict_finite, restrict_su2_to_torus, TorusRestriction};

use crate::dual::{DualTable, IrrepLabel, Truncation};
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Slack on the submultiplicativity ratio before a triple counts as a violation.
pub const VALIDITY_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub enum WeightKind<T> {
    Trivial,
    /// σ_a(π) = (1 + ln d_π)^a
    LogDim(T),
    /// ω_a(π) = d_π^a
    Dim(T),
    /// e^{d_π^b}; this is ρ_b on SU(2).
    ExpDim(T),
    /// (1 + |n|)^a on the torus dual.
    PolyNorm(T),
    /// (1 + ln(1 + |n|))^a on the torus dual.
    LogNorm(T),
    /// e^{(1 + |n|)^b} on the torus dual.
    ExpNorm(T),
    Pointwise(Box<Weight<T>>, Box<Weight<T>>),
    /// Per-factor weights on a product dual.
    Cross(Vec<Weight<T>>),
    /// Ω(π) = ω(π)ω(π̄)
    Symmetrized(Box<Weight<T>>),
    Table(WeightTable<T>),
}

/// Explicit values with a declared default and lower bound.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightTable<T> {
    pub values: BTreeMap<IrrepLabel, T>,
    /// Value for unlisted labels; `None` rejects them.
    pub default: Option<T>,
    pub delta: T,
}

/// A positive function on the irreps of a dual.
#[derive(Debug, Clone, PartialEq)]
pub struct Weight<T> {
    dual: DualTable,
    kind: WeightKind<T>,
}

fn nonneg<T: Real>(name: &str, x: T) -> Result<()> {
    if x >= T::zero() && x.is_finite() {
        Ok(())
    } else {
        Err(Error::InvalidWeight(format!("parameter {name} must be a finite nonnegative number, got {x}")))
    }
}

fn require_torus(dual: &DualTable, family: &str) -> Result<()> {
    match dual {
        DualTable::Torus => Ok(()),
        _ => Err(Error::InvalidWeight(format!("{family} is defined on the torus dual only"))),
    }
}

impl<T: Real> Weight<T> {
    pub fn trivial(dual: DualTable) -> Self {
        Self { dual, kind: WeightKind::Trivial }
    }

    /// σ_a(π) = (1 + ln d_π)^a.
    pub fn sigma_a(dual: DualTable, a: T) -> Result<Self> {
        nonneg("a", a)?;
        Ok(Self { dual, kind: WeightKind::LogDim(a) })
    }

    /// ω_a(π) = d_π^a.
    pub fn omega_a(dual: DualTable, a: T) -> Result<Self> {
        nonneg("a", a)?;
        Ok(Self { dual, kind: WeightKind::Dim(a) })
    }

    /// ρ_b with 0 ≤ b ≤ 1: e^{(2l+1)^b} on SU(2), e^{(1+|n|)^b} on the torus.
    pub fn rho_b(dual: DualTable, b: T) -> Result<Self> {
        nonneg("b", b)?;
        if b > T::one() {
            return Err(Error::InvalidWeight(format!("rho_b needs 0 <= b <= 1, got {b}")));
        }
        let kind = match dual {
            DualTable::Su2 => WeightKind::ExpDim(b),
            DualTable::Torus => WeightKind::ExpNorm(b),
            _ => {
                return Err(Error::InvalidWeight(
                    "rho_b is defined on SU(2) and torus duals; use exp_dim_b and check validity".into(),
                ))
            }
        };
        Ok(Self { dual, kind })
    }

    /// e^{d_π^b} on any dual. Validity is not automatic; check it.
    pub fn exp_dim_b(dual: DualTable, b: T) -> Result<Self> {
        nonneg("b", b)?;
        Ok(Self { dual, kind: WeightKind::ExpDim(b) })
    }

    /// (1 + |n|)^a on ℤ.
    pub fn poly_norm(dual: DualTable, a: T) -> Result<Self> {
        require_torus(&dual, "poly_norm_a")?;
        nonneg("a", a)?;
        Ok(Self { dual, kind: WeightKind::PolyNorm(a) })
    }

    /// (1 + ln(1 + |n|))^a on ℤ.
    pub fn log_norm(dual: DualTable, a: T) -> Result<Self> {
        require_torus(&dual, "log_norm_a")?;
        nonneg("a", a)?;
        Ok(Self { dual, kind: WeightKind::LogNorm(a) })
    }

    /// e^{(1 + |n|)^b} on ℤ.
    pub fn exp_norm(dual: DualTable, b: T) -> Result<Self> {
        require_torus(&dual, "exp_norm_b")?;
        nonneg("b", b)?;
        Ok(Self { dual, kind: WeightKind::ExpNorm(b) })
    }

    pub fn table(
        dual: DualTable,
        values: impl IntoIterator<Item = (IrrepLabel, T)>,
        default: Option<T>,
        delta: T,
    ) -> Result<Self> {
        if !(delta > T::zero() && delta.is_finite()) {
            return Err(Error::InvalidWeight(format!("delta must be positive, got {delta}")));
        }
        let mut map = BTreeMap::new();
        for (label, v) in values {
            dual.check(&label)?;
            if !(v.is_finite() && v >= delta) {
                return Err(Error::InvalidWeight(format!(
                    "value {v} at {} is below delta {delta}",
                    dual.format_label(&label)
                )));
            }
            map.insert(label, v);
        }
        if let Some(d) = default {
            if !(d.is_finite() && d >= delta) {
                return Err(Error::InvalidWeight(format!("default {d} is below delta {delta}")));
            }
        }
        Ok(Self { dual, kind: WeightKind::Table(WeightTable { values: map, default, delta }) })
    }

    /// Product of per-factor weights on a product dual.
    pub fn cross(dual: DualTable, factors: Vec<Weight<T>>) -> Result<Self> {
        match &dual {
            DualTable::Product(parts) if parts.len() == factors.len() => {
                if parts.iter().zip(&factors).any(|(p, w)| p != w.dual()) {
                    return Err(Error::TableMismatch);
                }
            }
            _ => {
                return Err(Error::InvalidWeight(
                    "cross weight needs a product dual with one weight per factor".into(),
                ))
            }
        }
        Ok(Self { dual, kind: WeightKind::Cross(factors) })
    }

    /// Cross weight over the product of the factors' duals.
    pub fn cross_of(factors: Vec<Weight<T>>) -> Result<Self> {
        let dual = DualTable::product(factors.iter().map(|w| w.dual().clone()).collect())?;
        Self::cross(dual, factors)
    }

    pub fn dual(&self) -> &DualTable {
        &self.dual
    }

    pub fn kind(&self) -> &WeightKind<T> {
        &self.kind
    }

    /// Declared lower bound δ.
    pub fn delta(&self) -> T {
        match &self.kind {
            WeightKind::Pointwise(a, b) => a.delta() * b.delta(),
            WeightKind::Cross(fs) => fs.iter().fold(T::one(), |acc, w| acc * w.delta()),
            WeightKind::Symmetrized(w) => w.delta() * w.delta(),
            WeightKind::Table(t) => t.delta,
            _ => T::one(),
        }
    }

    pub fn eval(&self, label: &IrrepLabel) -> Result<T> {
        self.dual.check(label)?;
        let d = || T::count(self.dual.dim(label).expect("checked"));
        let height = || match label {
            IrrepLabel::Torus(n) => T::one() + T::count(n.unsigned_abs()),
            _ => unreachable!("torus families only live on the torus dual"),
        };
        Ok(match &self.kind {
            WeightKind::Trivial => T::one(),
            WeightKind::LogDim(a) => (T::one() + d().ln()).powf(*a),
            WeightKind::Dim(a) => d().powf(*a),
            WeightKind::ExpDim(b) => d().powf(*b).exp(),
            WeightKind::PolyNorm(a) => height().powf(*a),
            WeightKind::LogNorm(a) => (T::one() + height().ln()).powf(*a),
            WeightKind::ExpNorm(b) => height().powf(*b).exp(),
            WeightKind::Pointwise(x, y) => x.eval(label)? * y.eval(label)?,
            WeightKind::Cross(fs) => match label {
                IrrepLabel::Product(parts) => {
                    fs.iter().zip(parts).try_fold(T::one(), |acc, (w, l)| Ok::<_, Error>(acc * w.eval(l)?))?
                }
                _ => unreachable!("checked product label"),
            },
            WeightKind::Symmetrized(w) => w.eval(label)? * w.eval(&self.dual.conj(label)?)?,
            WeightKind::Table(t) => match t.values.get(label).copied().or(t.default) {
                Some(v) => v,
                None => return Err(Error::UnlistedLabel(self.dual.format_label(label))),
            },
        })
    }

    /// Ω(π) = ω(π)ω(π̄).
    pub fn symmetrize(&self) -> Self {
        Self { dual: self.dual.clone(), kind: WeightKind::Symmetrized(Box::new(self.clone())) }
    }

    /// (ω₁ω₂)(π) = ω₁(π)ω₂(π).
    pub fn pointwise_product(&self, other: &Self) -> Result<Self> {
        if self.dual != other.dual {
            return Err(Error::TableMismatch);
        }
        Ok(Self {
            dual: self.dual.clone(),
            kind: WeightKind::Pointwise(Box::new(self.clone()), Box::new(other.clone())),
        })
    }

    /// Checks ω(σ) ≤ ω(π)ω(ρ) for all π, ρ in the truncation and every σ in
    /// supp(π ⊗ ρ), including σ outside the truncation.
    pub fn verify(&self, truncation: &Truncation) -> Result<ViolationReport<T>> {
        let tol = T::one() + T::lit(VALIDITY_TOL);
        let mut violations = Vec::new();
        let mut checked_pairs = 0;
        let labels = truncation.labels();
        let values: Vec<T> = labels.iter().map(|l| self.eval(l)).collect::<Result<_>>()?;
        for (i, left) in labels.iter().enumerate() {
            for (j, right) in labels.iter().enumerate() {
                checked_pairs += 1;
                let denom = values[i] * values[j];
                for sigma in self.dual.fuse(left, right)?.support() {
                    let ratio = self.eval(sigma)? / denom;
                    if ratio > tol {
                        violations.push(Violation {
                            left: left.clone(),
                            right: right.clone(),
                            output: sigma.clone(),
                            ratio,
                        });
                    }
                }
            }
        }
        Ok(ViolationReport { violations, checked_pairs, truncation: truncation.descriptor().to_string() })
    }
}

/// A triple (π, ρ, σ) with σ ∈ supp(π ⊗ ρ) and ω(σ) > ω(π)ω(ρ).
#[derive(Debug, Clone, PartialEq)]
pub struct Violation<T> {
    pub left: IrrepLabel,
    pub right: IrrepLabel,
    pub output: IrrepLabel,
    /// ω(σ) / (ω(π)ω(ρ))
    pub ratio: T,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ViolationReport<T> {
    pub violations: Vec<Violation<T>>,
    pub checked_pairs: usize,
    pub truncation: String,
}

impl<T> ViolationReport<T> {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}
