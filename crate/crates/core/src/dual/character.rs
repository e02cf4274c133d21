//! Character tables of finite groups.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Row orthogonality and conjugation tolerance.
pub const ORTHOGONALITY_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct ConjugacyClass {
    pub size: u64,
    pub name: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct IrrepCharacter {
    pub dim: u64,
    pub name: Option<String>,
    /// One value per conjugacy class.
    pub values: Vec<Complex64>,
}

/// Validated character table of a finite group.
#[derive(Debug, Clone, PartialEq)]
pub struct CharacterTable {
    name: String,
    order: u64,
    classes: Vec<ConjugacyClass>,
    irreps: Vec<IrrepCharacter>,
    conj: Vec<usize>,
    identity_class: usize,
    trivial: usize,
}

impl CharacterTable {
    pub fn new(
        name: impl Into<String>,
        order: u64,
        classes: Vec<ConjugacyClass>,
        irreps: Vec<IrrepCharacter>,
        conj: Vec<usize>,
    ) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidTable(msg));
        if order == 0 {
            return bad("group order must be positive".into());
        }
        if classes.is_empty() {
            return bad("no conjugacy classes".into());
        }
        if classes.iter().any(|c| c.size == 0) {
            return bad("class sizes must be positive".into());
        }
        let class_total: u64 = classes.iter().map(|c| c.size).sum();
        if class_total != order {
            return bad(format!("class sizes sum to {class_total}, order is {order}"));
        }
        if irreps.len() != classes.len() {
            return bad(format!(
                "{} irreps for {} classes; a character table is square",
                irreps.len(),
                classes.len()
            ));
        }
        for (i, irrep) in irreps.iter().enumerate() {
            if irrep.dim == 0 {
                return bad(format!("irrep {i} has dimension 0"));
            }
            if irrep.values.len() != classes.len() {
                return bad(format!(
                    "irrep {i} has {} character values, expected {}",
                    irrep.values.len(),
                    classes.len()
                ));
            }
        }
        let dim_total: u64 = irreps.iter().map(|r| r.dim * r.dim).sum();
        if dim_total != order {
            return bad(format!("sum of squared dimensions is {dim_total}, order is {order}"));
        }

        let identity_class = (0..classes.len())
            .find(|&c| {
                classes[c].size == 1
                    && irreps
                        .iter()
                        .all(|r| (r.values[c] - Complex64::new(r.dim as f64, 0.0)).norm() < ORTHOGONALITY_TOL)
            })
            .ok_or_else(|| Error::InvalidTable("no identity class (χ(e) = dim for all irreps)".into()))?;

        let trivial = irreps
            .iter()
            .position(|r| r.dim == 1 && r.values.iter().all(|v| (v - Complex64::new(1.0, 0.0)).norm() < ORTHOGONALITY_TOL))
            .ok_or_else(|| Error::InvalidTable("no trivial irrep".into()))?;

        let n = order as f64;
        for i in 0..irreps.len() {
            for j in 0..irreps.len() {
                let inner: Complex64 = classes
                    .iter()
                    .enumerate()
                    .map(|(c, cls)| irreps[i].values[c] * irreps[j].values[c].conj() * cls.size as f64)
                    .sum::<Complex64>()
                    / n;
                let expected = if i == j { 1.0 } else { 0.0 };
                if (inner - Complex64::new(expected, 0.0)).norm() > ORTHOGONALITY_TOL {
                    return bad(format!("rows {i} and {j} violate orthogonality (inner product {inner})"));
                }
            }
        }

        if conj.len() != irreps.len() {
            return bad(format!("conjugation map has {} entries, expected {}", conj.len(), irreps.len()));
        }
        for (i, &ci) in conj.iter().enumerate() {
            if ci >= irreps.len() {
                return bad(format!("conjugation map sends {i} out of range ({ci})"));
            }
            if conj[ci] != i {
                return bad(format!("conjugation map is not an involution at {i}"));
            }
            for c in 0..classes.len() {
                if (irreps[ci].values[c] - irreps[i].values[c].conj()).norm() > ORTHOGONALITY_TOL {
                    return bad(format!("irrep {ci} is not the conjugate of irrep {i} on class {c}"));
                }
            }
        }

        Ok(Self { name: name.into(), order, classes, irreps, conj, identity_class, trivial })
    }

    /// Cyclic group ℤ_n with characters χ_j(k) = e^{2πijk/n}.
    pub fn cyclic(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("cyclic group order must be positive".into()));
        }
        let classes = (0..n).map(|k| ConjugacyClass { size: 1, name: format!("g^{k}") }).collect();
        let irreps = (0..n)
            .map(|j| IrrepCharacter {
                dim: 1,
                name: Some(format!("chi{j}")),
                values: (0..n).map(|k| Complex64::from_polar(1.0, 2.0 * PI * ((j * k) % n) as f64 / n as f64)).collect(),
            })
            .collect();
        let conj = (0..n as usize).map(|j| (n as usize - j) % n as usize).collect();
        Self::new(format!("Z{n}"), n, classes, irreps, conj)
    }

    /// Symmetric group S₃. Classes: identity, transpositions, 3-cycles.
    /// Irreps: trivial, sign, standard (2-dimensional).
    pub fn s3() -> Self {
        let c = |re: f64| Complex64::new(re, 0.0);
        let classes = vec![
            ConjugacyClass { size: 1, name: "e".into() },
            ConjugacyClass { size: 3, name: "(12)".into() },
            ConjugacyClass { size: 2, name: "(123)".into() },
        ];
        let irreps = vec![
            IrrepCharacter { dim: 1, name: Some("trivial".into()), values: vec![c(1.0), c(1.0), c(1.0)] },
            IrrepCharacter { dim: 1, name: Some("sign".into()), values: vec![c(1.0), c(-1.0), c(1.0)] },
            IrrepCharacter { dim: 2, name: Some("std".into()), values: vec![c(2.0), c(0.0), c(-1.0)] },
        ];
        Self::new("S3", 6, classes, irreps, vec![0, 1, 2]).expect("S3 table is valid")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn irreps(&self) -> &[IrrepCharacter] {
        &self.irreps
    }

    pub fn irrep_count(&self) -> usize {
        self.irreps.len()
    }

    pub fn dim(&self, irrep: usize) -> u64 {
        self.irreps[irrep].dim
    }

    pub fn character(&self, irrep: usize, class: usize) -> Complex64 {
        self.irreps[irrep].values[class]
    }

    pub fn conj(&self, irrep: usize) -> usize {
        self.conj[irrep]
    }

    pub fn conj_map(&self) -> &[usize] {
        &self.conj
    }

    pub fn identity_class(&self) -> usize {
        self.identity_class
    }

    pub fn trivial(&self) -> usize {
        self.trivial
    }

    /// Irrep index by name, or by decimal index.
    pub fn irrep_by_name(&self, name: &str) -> Option<usize> {
        self.irreps
            .iter()
            .position(|r| r.name.as_deref() == Some(name))
            .or_else(|| name.parse::<usize>().ok().filter(|&i| i < self.irreps.len()))
    }

    pub fn irrep_name(&self, irrep: usize) -> String {
        self.irreps[irrep].name.clone().unwrap_or_else(|| irrep.to_string())
    }

    /// Class-weighted inner product (1/|G|) Σ_c |C_c| a(c) conj(b(c)).
    pub fn class_inner(&self, a: &[Complex64], b: &[Complex64]) -> Complex64 {
        self.classes
            .iter()
            .enumerate()
            .map(|(c, cls)| a[c] * b[c].conj() * cls.size as f64)
            .sum::<Complex64>()
            / self.order as f64
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: CharacterTableJson = serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))?;
        doc.into_table()
    }

    pub fn to_json(&self) -> CharacterTableJson {
        CharacterTableJson {
            name: Some(self.name.clone()),
            order: self.order,
            classes: self.classes.iter().map(|c| ClassJson { size: c.size, name: c.name.clone() }).collect(),
            irreps: self
                .irreps
                .iter()
                .map(|r| IrrepJson {
                    dim: r.dim,
                    name: r.name.clone(),
                    char: r.values.iter().map(|v| [v.re, v.im]).collect(),
                })
                .collect(),
            conj: self.conj.clone(),
        }
    }
}

/// On-disk character table document.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CharacterTableJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub order: u64,
    pub classes: Vec<ClassJson>,
    pub irreps: Vec<IrrepJson>,
    pub conj: Vec<usize>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ClassJson {
    pub size: u64,
    pub name: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IrrepJson {
    pub dim: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub char: Vec<[f64; 2]>,
}

impl CharacterTableJson {
    pub fn into_table(self) -> Result<CharacterTable> {
        let classes = self.classes.into_iter().map(|c| ConjugacyClass { size: c.size, name: c.name }).collect();
        let irreps = self
            .irreps
            .into_iter()
            .map(|r| IrrepCharacter {
                dim: r.dim,
                name: r.name,
                values: r.char.into_iter().map(|[re, im]| Complex64::new(re, im)).collect(),
            })
            .collect();
        CharacterTable::new(self.name.unwrap_or_else(|| "G".into()), self.order, classes, irreps, self.conj)
    }
}
