//! Parsing of group, model, weight and grid arguments.

use std::fs;

use anyhow::{anyhow, bail, Context, Result};
use beurling::line::uniform_grid;
use beurling::{CharacterTable, DualTable, IrrepLabel, LineWeight, MatrixModel, Weight, WeightDescriptor};

fn read(path: &str) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {path}"))
}

fn is_file_arg(s: &str) -> Option<&str> {
    s.strip_prefix("file:").or_else(|| s.ends_with(".json").then_some(s))
}

fn split_factors(spec: &str) -> Vec<&str> {
    spec.split('x').map(str::trim).collect()
}

fn cyclic_order(s: &str) -> Option<u64> {
    s.strip_prefix('z').and_then(|n| n.parse().ok())
}

/// `s3`, `z<n>`, `su2`, `t`/`torus`, `file:table.json`, or factors joined by `x`.
pub fn parse_group(spec: &str) -> Result<DualTable> {
    if let Some(path) = is_file_arg(spec) {
        let table = CharacterTable::from_json(&read(path)?).with_context(|| format!("character table {path}"))?;
        return Ok(DualTable::from(table));
    }
    let lower = spec.trim().to_ascii_lowercase();
    let parts = split_factors(&lower);
    if parts.len() > 1 {
        let tables = parts.iter().map(|p| parse_group(p)).collect::<Result<Vec<_>>>()?;
        return Ok(DualTable::product(tables)?);
    }
    match parts[0] {
        "s3" => Ok(DualTable::s3()),
        "su2" => Ok(DualTable::Su2),
        "t" | "torus" => Ok(DualTable::Torus),
        other => match cyclic_order(other) {
            Some(n) => Ok(DualTable::cyclic(n)?),
            None => bail!("unknown group {spec:?} (try `bfa catalog`)"),
        },
    }
}

/// Matrix models: `s3`, `z<n>` and products of those.
pub fn parse_model(spec: &str) -> Result<MatrixModel> {
    let lower = spec.trim().to_ascii_lowercase();
    let mut models = split_factors(&lower).into_iter().map(|p| match p {
        "s3" => Ok(MatrixModel::s3()),
        other => match cyclic_order(other) {
            Some(n) => Ok(MatrixModel::cyclic(n)?),
            None => bail!("no matrix model for {other:?}; models exist for s3, z<n> and their products"),
        },
    });
    let first = models.next().expect("split yields at least one piece")?;
    models.try_fold(first, |acc, m| Ok(MatrixModel::direct_product(&acc, &m?)?))
}

#[derive(Debug, Clone, Copy, Default)]
pub struct WeightParams {
    pub a: Option<f64>,
    pub b: Option<f64>,
}

pub fn family_descriptor(family: &str, params: WeightParams) -> WeightDescriptor {
    let mut desc = WeightDescriptor::family(family);
    if let Some(a) = params.a {
        desc = desc.with_param("a", a);
    }
    if let Some(b) = params.b {
        desc = desc.with_param("b", b);
    }
    desc
}

/// A family name with `--a`/`--b`, or a descriptor file. With `cross`, the
/// family is applied to every factor of a product group.
pub fn parse_weight(dual: &DualTable, spec: &str, params: WeightParams, cross: bool) -> Result<Weight> {
    if let Some(path) = is_file_arg(spec) {
        return Weight::from_json(dual, &read(path)?).with_context(|| format!("weight descriptor {path}"));
    }
    let desc = family_descriptor(spec, params);
    if cross {
        let DualTable::Product(parts) = dual else {
            bail!("--cross needs a product group, got {}", dual.name());
        };
        let factors = parts.iter().map(|p| Weight::from_descriptor(p, &desc)).collect::<beurling::Result<Vec<_>>>()?;
        return Ok(Weight::cross(dual.clone(), factors)?);
    }
    Weight::from_descriptor(dual, &desc).with_context(|| format!("weight {spec:?}"))
}

pub fn parse_label(dual: &DualTable, text: &str) -> Result<IrrepLabel> {
    dual.parse_label(text).with_context(|| format!("irrep label for {}", dual.name()))
}

/// `start:end:step`.
pub fn parse_grid(spec: &str) -> Result<Vec<f64>> {
    let nums = spec
        .split(':')
        .map(|p| p.trim().parse::<f64>().map_err(|_| anyhow!("bad number {p:?} in grid {spec:?}")))
        .collect::<Result<Vec<_>>>()?;
    let [start, end, step] = nums[..] else {
        bail!("grid must look like start:end:step, got {spec:?}");
    };
    Ok(uniform_grid(start, end, step)?)
}

pub fn parse_line_weight(spec: &str, a: Option<f64>) -> Result<LineWeight> {
    if let Some(path) = is_file_arg(spec) {
        return LineWeight::from_json(&read(path)?).with_context(|| format!("line weight {path}"));
    }
    match spec {
        "tau_a" => Ok(LineWeight::tau_a(a.ok_or_else(|| anyhow!("tau_a needs --a"))?)?),
        other => bail!("unknown line weight {other:?}; use tau_a or a JSON file"),
    }
}

/// Per-factor parameters: `const:v`, `geom:first,ratio` or `list:v1,v2,...`.
pub enum ParamRule {
    Const(f64),
    Geometric { first: f64, ratio: f64 },
    List(Vec<f64>),
}

impl ParamRule {
    pub fn parse(spec: &str) -> Result<Self> {
        let (kind, rest) = spec.split_once(':').ok_or_else(|| anyhow!("rule must look like kind:values, got {spec:?}"))?;
        let values = rest
            .split(',')
            .map(|v| v.trim().parse::<f64>().map_err(|_| anyhow!("bad number {v:?} in rule {spec:?}")))
            .collect::<Result<Vec<_>>>()?;
        match (kind, values.as_slice()) {
            ("const", [v]) => Ok(ParamRule::Const(*v)),
            ("geom", [first, ratio]) => Ok(ParamRule::Geometric { first: *first, ratio: *ratio }),
            ("list", vs) if !vs.is_empty() => Ok(ParamRule::List(vs.to_vec())),
            _ => bail!("unrecognised rule {spec:?}; expected const:v, geom:first,ratio or list:v1,v2,..."),
        }
    }

    /// Parameter of factor `i` (0-based), `None` past the end of a list.
    pub fn at(&self, i: usize) -> Option<f64> {
        match self {
            ParamRule::Const(v) => Some(*v),
            ParamRule::Geometric { first, ratio } => Some(first * ratio.powi(i as i32)),
            ParamRule::List(vs) => vs.get(i).copied(),
        }
    }
}
