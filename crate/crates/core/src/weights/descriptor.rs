//! JSON descriptors for weights.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{Weight, WeightKind};
use crate::dual::DualTable;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// `{"family": ..., "params": {...}, "table": {...}, "default": v|null, "delta": v}`.
///
/// `product` (pointwise), `cross` (one entry per product factor) and
/// `symmetrized` carry their operands in `factors`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeightDescriptor {
    pub family: String,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    pub params: BTreeMap<String, f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub table: Option<BTreeMap<String, f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub default: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<f64>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub factors: Vec<WeightDescriptor>,
}

impl WeightDescriptor {
    pub fn family(family: &str) -> Self {
        Self {
            family: family.to_string(),
            params: BTreeMap::new(),
            table: None,
            default: None,
            delta: None,
            factors: Vec::new(),
        }
    }

    pub fn with_param(mut self, name: &str, value: f64) -> Self {
        self.params.insert(name.to_string(), value);
        self
    }

    fn param(&self, name: &str) -> Result<f64> {
        self.params
            .get(name)
            .copied()
            .ok_or_else(|| Error::InvalidWeight(format!("family {} needs params.{name}", self.family)))
    }

    fn operands(&self, n: usize) -> Result<&[WeightDescriptor]> {
        if self.factors.len() == n {
            Ok(&self.factors)
        } else {
            Err(Error::InvalidWeight(format!(
                "family {} needs {n} factors, got {}",
                self.family,
                self.factors.len()
            )))
        }
    }
}

impl<T: Real> Weight<T> {
    pub fn from_descriptor(dual: &DualTable, desc: &WeightDescriptor) -> Result<Self> {
        let dual = dual.clone();
        let p = |name: &str| desc.param(name).map(T::lit);
        match desc.family.as_str() {
            "trivial" => Ok(Self::trivial(dual)),
            "omega_a" => Self::omega_a(dual, p("a")?),
            "sigma_a" => Self::sigma_a(dual, p("a")?),
            "rho_b" => Self::rho_b(dual, p("b")?),
            "exp_dim_b" => Self::exp_dim_b(dual, p("b")?),
            "poly_norm_a" => Self::poly_norm(dual, p("a")?),
            "log_norm_a" => Self::log_norm(dual, p("a")?),
            "exp_norm_b" => Self::exp_norm(dual, p("b")?),
            "table" => {
                let table = desc
                    .table
                    .as_ref()
                    .ok_or_else(|| Error::InvalidWeight("family table needs a table".into()))?;
                let delta = desc
                    .delta
                    .ok_or_else(|| Error::InvalidWeight("family table needs delta".into()))?;
                let values = table
                    .iter()
                    .map(|(k, v)| Ok((dual.parse_label(k)?, T::lit(*v))))
                    .collect::<Result<Vec<_>>>()?;
                Self::table(dual, values, desc.default.map(T::lit), T::lit(delta))
            }
            "product" => {
                let ops = desc.operands(2)?;
                Self::from_descriptor(&dual, &ops[0])?.pointwise_product(&Self::from_descriptor(&dual, &ops[1])?)
            }
            "symmetrized" => Ok(Self::from_descriptor(&dual, &desc.operands(1)?[0])?.symmetrize()),
            "cross" => {
                let parts = match &dual {
                    DualTable::Product(parts) => parts.clone(),
                    _ => return Err(Error::InvalidWeight("cross weights need a product group".into())),
                };
                let ops = desc.operands(parts.len())?;
                let factors =
                    parts.iter().zip(ops).map(|(p, d)| Self::from_descriptor(p, d)).collect::<Result<Vec<_>>>()?;
                Self::cross(dual, factors)
            }
            other => Err(Error::InvalidWeight(format!("unknown weight family {other:?}"))),
        }
    }

    pub fn to_descriptor(&self) -> WeightDescriptor {
        let f = |x: T| x.to_f64_lossy();
        match self.kind() {
            WeightKind::Trivial => WeightDescriptor::family("trivial"),
            WeightKind::LogDim(a) => WeightDescriptor::family("sigma_a").with_param("a", f(*a)),
            WeightKind::Dim(a) => WeightDescriptor::family("omega_a").with_param("a", f(*a)),
            WeightKind::ExpDim(b) => {
                let family = if *self.dual() == DualTable::Su2 && *b <= T::one() { "rho_b" } else { "exp_dim_b" };
                WeightDescriptor::family(family).with_param("b", f(*b))
            }
            WeightKind::PolyNorm(a) => WeightDescriptor::family("poly_norm_a").with_param("a", f(*a)),
            WeightKind::LogNorm(a) => WeightDescriptor::family("log_norm_a").with_param("a", f(*a)),
            WeightKind::ExpNorm(b) => WeightDescriptor::family("exp_norm_b").with_param("b", f(*b)),
            WeightKind::Pointwise(x, y) => WeightDescriptor {
                factors: vec![x.to_descriptor(), y.to_descriptor()],
                ..WeightDescriptor::family("product")
            },
            WeightKind::Symmetrized(x) => {
                WeightDescriptor { factors: vec![x.to_descriptor()], ..WeightDescriptor::family("symmetrized") }
            }
            WeightKind::Cross(fs) => WeightDescriptor {
                factors: fs.iter().map(Weight::to_descriptor).collect(),
                ..WeightDescriptor::family("cross")
            },
            WeightKind::Table(t) => WeightDescriptor {
                table: Some(t.values.iter().map(|(l, v)| (self.dual().format_label(l), f(*v))).collect()),
                default: t.default.map(f),
                delta: Some(f(t.delta)),
                ..WeightDescriptor::family("table")
            },
        }
    }

    pub fn from_json(dual: &DualTable, text: &str) -> Result<Self> {
        let desc: WeightDescriptor = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        Self::from_descriptor(dual, &desc)
    }
}
