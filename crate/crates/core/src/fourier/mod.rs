//! Fourier transform on finite groups and the weighted Fourier norms.
//!
//! Haar measure has total mass 1, so f̂(π) = (1/|G|) Σ_g f(g) π̄(g) with π̄
//! the entrywise conjugate. Inversion pairs coefficients entry by entry:
//! f(x) = Σ_π d_π Σ_ij f̂(π)_ij π(x)_ij.

mod model;

use std::collections::BTreeMap;

use num_complex::Complex;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

pub use model::{builtin_models, MatrixModel};

use crate::dual::{DualTable, IrrepLabel};
use crate::error::{Error, Result};
use crate::linalg::CMatrix;
use crate::scalar::Real;
use crate::weights::Weight;

/// A complex-valued function on a finite group, in element order.
#[derive(Debug, Clone, PartialEq)]
pub struct GroupFunction<T> {
    pub values: Vec<Complex<T>>,
}

impl<T: Real> GroupFunction<T> {
    pub fn new(values: Vec<Complex<T>>) -> Self {
        Self { values }
    }

    pub fn constant<U: Real>(model: &MatrixModel<U>, c: Complex<T>) -> Self {
        Self { values: vec![c; model.order()] }
    }

    /// Indicator of the identity element.
    pub fn delta_e<U: Real>(model: &MatrixModel<U>) -> Self {
        let mut values = vec![Complex::zero(); model.order()];
        values[model.identity()] = Complex::new(T::one(), T::zero());
        Self { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        self.values.iter().zip(&other.values).fold(T::zero(), |acc, (a, b)| acc.max((*a - *b).norm()))
    }

    /// (fg)(x) = f(x)g(x)
    pub fn pointwise_mult(&self, other: &Self) -> Result<Self> {
        if self.len() != other.len() {
            return Err(Error::Shape(format!("functions of length {} and {}", self.len(), other.len())));
        }
        Ok(Self { values: self.values.iter().zip(&other.values).map(|(a, b)| a * b).collect() })
    }
}

/// One d_π × d_π block per irrep of a model.
#[derive(Debug, Clone, PartialEq)]
pub struct FourierCoefficients<T> {
    dual: DualTable,
    labels: Vec<IrrepLabel>,
    blocks: Vec<CMatrix<T>>,
}

impl<T: Real> FourierCoefficients<T> {
    /// Coefficients for `model`, checking block shapes.
    pub fn new(model: &MatrixModel<T>, blocks: Vec<CMatrix<T>>) -> Result<Self> {
        if blocks.len() != model.irrep_count() {
            return Err(Error::Shape(format!("{} blocks for {} irreps", blocks.len(), model.irrep_count())));
        }
        for (k, b) in blocks.iter().enumerate() {
            let d = model.dim(k);
            if b.rows() != d || b.cols() != d {
                return Err(Error::Shape(format!("block {k} is {}x{}, irrep has dimension {d}", b.rows(), b.cols())));
            }
        }
        Ok(Self { dual: model.dual().clone(), labels: model.labels().to_vec(), blocks })
    }

    pub fn dual(&self) -> &DualTable {
        &self.dual
    }

    pub fn labels(&self) -> &[IrrepLabel] {
        &self.labels
    }

    pub fn blocks(&self) -> &[CMatrix<T>] {
        &self.blocks
    }

    pub fn block(&self, label: &IrrepLabel) -> Option<&CMatrix<T>> {
        self.labels.iter().position(|l| l == label).map(|k| &self.blocks[k])
    }

    fn weighted_sum(&self, weight: &Weight<T>, term: impl Fn(T, &CMatrix<T>) -> T) -> Result<T> {
        if weight.dual() != &self.dual {
            return Err(Error::TableMismatch);
        }
        self.labels.iter().zip(&self.blocks).try_fold(T::zero(), |acc, (label, block)| {
            let d = T::count(block.rows() as u64);
            Ok(acc + weight.eval(label)? * term(d, block))
        })
    }

    /// ‖f‖_{A(G,ω)} = Σ_π d_π ω(π) ‖f̂(π)‖₁.
    pub fn norm_a(&self, weight: &Weight<T>) -> Result<T> {
        self.weighted_sum(weight, |d, block| d * block.trace_norm())
    }

    /// ‖f‖_{A_Δ(G,Ω)} = Σ_π d_π^{3/2} Ω(π) ‖f̂(π)‖₂; pass Ω = ω.symmetrize().
    pub fn norm_a_delta(&self, omega: &Weight<T>) -> Result<T> {
        self.weighted_sum(omega, |d, block| d * d.sqrt() * block.frobenius_norm())
    }

    /// ‖f‖_{A_{γⁿ}} = Σ_π d_π^{2ⁿ+1} ‖f̂(π)‖₁, i.e. the A(G, ω_{2ⁿ}) norm.
    pub fn norm_a_gamma(&self, n: u32) -> Result<T> {
        let exponent = T::lit(2f64.powi(n as i32));
        self.norm_a(&Weight::omega_a(self.dual.clone(), exponent)?)
    }
}

/// f̂(π) = (1/|G|) Σ_g f(g) π̄(g).
pub fn transform<T: Real>(model: &MatrixModel<T>, f: &GroupFunction<T>) -> Result<FourierCoefficients<T>> {
    let n = model.order();
    if f.len() != n {
        return Err(Error::Shape(format!("function has {} values, group has {n} elements", f.len())));
    }
    let scale = T::one() / T::count(n as u64);
    let blocks = (0..model.irrep_count())
        .map(|k| {
            let d = model.dim(k);
            let mut acc = CMatrix::zeros(d, d);
            for (g, &value) in f.values.iter().enumerate() {
                acc.add_assign_scaled(&model.matrix(k, g).conj(), value * scale);
            }
            acc
        })
        .collect();
    FourierCoefficients::new(model, blocks)
}

/// f(x) = Σ_π d_π Σ_ij f̂(π)_ij π(x)_ij.
pub fn inverse<T: Real>(model: &MatrixModel<T>, coeffs: &FourierCoefficients<T>) -> Result<GroupFunction<T>> {
    if coeffs.labels() != model.labels() {
        return Err(Error::Shape("coefficients belong to a different model".into()));
    }
    let values = (0..model.order())
        .map(|x| {
            coeffs.blocks().iter().enumerate().fold(Complex::zero(), |acc, (k, block)| {
                let d = T::count(block.rows() as u64);
                let pairing = (&block.transpose() * model.matrix(k, x)).trace();
                acc + pairing * d
            })
        })
        .collect();
    Ok(GroupFunction { values })
}

/// Product of class functions in the character ring: χ_π · χ_ρ = Σ_σ m_σ χ_σ,
/// extended bilinearly.
pub fn character_mult<T: Real>(
    dual: &DualTable,
    a: &BTreeMap<IrrepLabel, T>,
    b: &BTreeMap<IrrepLabel, T>,
) -> Result<BTreeMap<IrrepLabel, T>> {
    let mut out: BTreeMap<IrrepLabel, T> = BTreeMap::new();
    for (pi, &x) in a {
        for (rho, &y) in b {
            for (sigma, m) in dual.fuse(pi, rho)?.iter() {
                let slot = out.entry(sigma.clone()).or_insert_with(T::zero);
                *slot = *slot + x * y * T::count(m);
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    Ok(out)
}

/// SU(2) character products, keyed by `t = 2l`.
pub fn character_mult_su2<T: Real>(a: &BTreeMap<u32, T>, b: &BTreeMap<u32, T>) -> BTreeMap<u32, T> {
    let lift = |m: &BTreeMap<u32, T>| m.iter().map(|(&t, &c)| (IrrepLabel::Su2(t), c)).collect();
    character_mult(&DualTable::Su2, &lift(a), &lift(b))
        .expect("SU(2) labels always fuse")
        .into_iter()
        .map(|(l, c)| match l {
            IrrepLabel::Su2(t) => (t, c),
            _ => unreachable!(),
        })
        .collect()
}

/// `{"group": id, "values": [[re, im], ...]}`
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GroupFunctionJson {
    pub group: String,
    pub values: Vec<[f64; 2]>,
}

/// `{"irreps": [{"dim": d, "matrix": [[[re, im], ...], ...]}, ...]}`
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoefficientsJson {
    pub irreps: Vec<CoefficientBlockJson>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoefficientBlockJson {
    pub dim: usize,
    pub matrix: Vec<Vec<[f64; 2]>>,
}

impl<T: Real> GroupFunction<T> {
    pub fn from_json(model: &MatrixModel<T>, doc: &GroupFunctionJson) -> Result<Self> {
        if doc.values.len() != model.order() {
            return Err(Error::Shape(format!(
                "function has {} values, {} has {} elements",
                doc.values.len(),
                model.name(),
                model.order()
            )));
        }
        Ok(Self { values: doc.values.iter().map(|&[re, im]| Complex::new(T::lit(re), T::lit(im))).collect() })
    }

    pub fn to_json(&self, group: &str) -> GroupFunctionJson {
        GroupFunctionJson {
            group: group.to_string(),
            values: self.values.iter().map(|z| [z.re.to_f64_lossy(), z.im.to_f64_lossy()]).collect(),
        }
    }
}

impl<T: Real> FourierCoefficients<T> {
    pub fn from_json(model: &MatrixModel<T>, doc: &CoefficientsJson) -> Result<Self> {
        let blocks = doc
            .irreps
            .iter()
            .enumerate()
            .map(|(k, b)| {
                let rows = b
                    .matrix
                    .iter()
                    .map(|row| row.iter().map(|&[re, im]| Complex::new(T::lit(re), T::lit(im))).collect())
                    .collect();
                let m = CMatrix::from_rows(rows).ok_or_else(|| Error::Shape(format!("block {k} is ragged")))?;
                if m.rows() != b.dim {
                    return Err(Error::Shape(format!("block {k} declares dim {} but has {} rows", b.dim, m.rows())));
                }
                Ok(m)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(model, blocks)
    }

    pub fn to_json(&self) -> CoefficientsJson {
        CoefficientsJson {
            irreps: self
                .blocks
                .iter()
                .map(|b| CoefficientBlockJson {
                    dim: b.rows(),
                    matrix: (0..b.rows())
                        .map(|i| b.row(i).iter().map(|z| [z.re.to_f64_lossy(), z.im.to_f64_lossy()]).collect())
                        .collect(),
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;
    use proptest::prelude::*;

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    #[test]
    fn constant_function_on_s3() {
        let m = MatrixModel::<f64>::s3();
        let f = transform(&m, &GroupFunction::constant(&m, c(1.0))).unwrap();
        assert!((f.blocks()[0][(0, 0)] - c(1.0)).norm() < 1e-15);
        assert!(f.blocks()[1][(0, 0)].norm() < 1e-15);
        assert!(f.blocks()[2].frobenius_norm() < 1e-15);
    }

    #[test]
    fn delta_e_transforms_to_scaled_identity() {
        for m in builtin_models::<f64>() {
            let f = transform(&m, &GroupFunction::delta_e(&m)).unwrap();
            for b in f.blocks() {
                let expected = CMatrix::identity(b.rows()).scale(c(1.0 / m.order() as f64));
                assert!(b.max_abs_diff(&expected) < 1e-15);
            }
        }
    }

    #[test]
    fn character_of_z4() {
        let m = MatrixModel::cyclic(4).unwrap();
        // direct sum: χ_1(k) = i^k
        let f = GroupFunction::new((0..4).map(|k| Complex64::i().powu(k)).collect());
        let hat = transform(&m, &f).unwrap();
        for (j, b) in hat.blocks().iter().enumerate() {
            let expected = if j == 1 { 1.0 } else { 0.0 };
            assert!((b[(0, 0)] - c(expected)).norm() < 1e-15, "{j}: {}", b[(0, 0)]);
        }
    }

    #[test]
    fn inverse_examples() {
        let m = MatrixModel::<f64>::s3();
        let delta = GroupFunction::delta_e(&m);
        let back = inverse(&m, &transform(&m, &delta).unwrap()).unwrap();
        assert!(back.max_abs_diff(&delta) < 1e-10);

        let mut blocks: Vec<CMatrix<f64>> = (0..3).map(|k| CMatrix::zeros(m.dim(k), m.dim(k))).collect();
        blocks[0][(0, 0)] = Complex64::new(2.0, -1.0);
        let f = inverse(&m, &FourierCoefficients::new(&m, blocks).unwrap()).unwrap();
        assert!(f.max_abs_diff(&GroupFunction::constant(&m, Complex64::new(2.0, -1.0))) < 1e-15);
    }

    #[test]
    fn shape_errors() {
        let m = MatrixModel::<f64>::s3();
        assert!(transform(&m, &GroupFunction::new(vec![c(1.0); 5])).is_err());
        let blocks = vec![CMatrix::identity(1), CMatrix::identity(1), CMatrix::identity(1)];
        assert!(FourierCoefficients::new(&m, blocks).is_err());
        let z = MatrixModel::cyclic(6).unwrap();
        let zc = transform(&z, &GroupFunction::delta_e(&z)).unwrap();
        assert!(inverse(&m, &zc).is_err());
    }

    #[test]
    fn weighted_norms_of_delta_e_on_s3() {
        let m = MatrixModel::<f64>::s3();
        let hat = transform(&m, &GroupFunction::delta_e(&m)).unwrap();
        let dual = m.dual().clone();
        let triv = Weight::trivial(dual.clone());
        let om1 = Weight::omega_a(dual.clone(), 1.0).unwrap();
        assert!((hat.norm_a(&triv).unwrap() - 1.0).abs() < 1e-14);
        assert!((hat.norm_a(&om1).unwrap() - 10.0 / 6.0).abs() < 1e-14);
        assert!((hat.norm_a_delta(&triv).unwrap() - 1.0).abs() < 1e-14);
        // Ω(std) = ω_1(std)² = 4
        assert!((hat.norm_a_delta(&om1.symmetrize()).unwrap() - 3.0).abs() < 1e-14);
        // Σ d^{2^n+2}/|G| at n = 1
        assert!((hat.norm_a_gamma(1).unwrap() - 18.0 / 6.0).abs() < 1e-14);
        assert!((hat.norm_a_gamma(0).unwrap() - hat.norm_a(&om1).unwrap()).abs() < 1e-15);
        assert_eq!(hat.norm_a(&Weight::trivial(DualTable::Su2)), Err(Error::TableMismatch));
    }

    #[test]
    fn constant_function_norms() {
        let m = MatrixModel::<f64>::s3();
        let cst = Complex64::new(3.0, 4.0);
        let hat = transform(&m, &GroupFunction::constant(&m, cst)).unwrap();
        let w = Weight::table(m.dual().clone(), [(IrrepLabel::Finite(0), 1.5)], Some(2.0), 1.0).unwrap();
        assert!((hat.norm_a(&w).unwrap() - 5.0 * 1.5).abs() < 1e-13);
        assert!((hat.norm_a_delta(&w.symmetrize()).unwrap() - 5.0 * 2.25).abs() < 1e-13);
        for n in 0..4 {
            assert!((hat.norm_a_gamma(n).unwrap() - 5.0).abs() < 1e-13);
        }
    }

    #[test]
    fn pointwise_examples() {
        let m = MatrixModel::<f64>::s3();
        let f = GroupFunction::new((0..6).map(|k| Complex64::new(k as f64, 1.0)).collect());
        assert_eq!(f.pointwise_mult(&GroupFunction::constant(&m, c(1.0))).unwrap(), f);
        let d = GroupFunction::<f64>::delta_e(&m);
        assert_eq!(d.pointwise_mult(&d).unwrap(), d);
        assert!(f.pointwise_mult(&GroupFunction::new(vec![c(1.0)])).is_err());
    }

    #[test]
    fn su2_character_ring() {
        let half: BTreeMap<u32, f64> = [(1, 1.0)].into();
        let sq = character_mult_su2(&half, &half);
        assert_eq!(sq, [(0, 1.0), (2, 1.0)].into());
        let x: BTreeMap<u32, f64> = [(0, 2.0), (3, -1.5), (4, 0.5)].into();
        assert_eq!(character_mult_su2(&[(0, 1.0)].into(), &x), x);
        let cube = character_mult_su2(&sq, &half);
        assert_eq!(cube, [(1, 2.0), (3, 1.0)].into());
    }

    #[test]
    fn json_documents() {
        let m = MatrixModel::<f64>::s3();
        let f = GroupFunction::new((0..6).map(|k| Complex64::new(k as f64, -(k as f64))).collect());
        let doc = f.to_json("s3");
        assert_eq!(GroupFunction::from_json(&m, &doc).unwrap(), f);
        let hat = transform(&m, &f).unwrap();
        let text = serde_json::to_string(&hat.to_json()).unwrap();
        let back: CoefficientsJson = serde_json::from_str(&text).unwrap();
        assert_eq!(FourierCoefficients::from_json(&m, &back).unwrap(), hat);
        let mut broken = hat.to_json();
        broken.irreps[2].dim = 3;
        assert!(FourierCoefficients::from_json(&m, &broken).is_err());
    }

    fn random_function(n: usize) -> impl Strategy<Value = GroupFunction<f64>> {
        proptest::collection::vec((-1.0f64..1.0, -1.0f64..1.0), n)
            .prop_map(|v| GroupFunction::new(v.into_iter().map(|(a, b)| Complex64::new(a, b)).collect()))
    }

    proptest! {
        #[test]
        fn round_trip_and_plancherel_on_s3(f in random_function(6)) {
            let m = MatrixModel::<f64>::s3();
            let hat = transform(&m, &f).unwrap();
            prop_assert!(inverse(&m, &hat).unwrap().max_abs_diff(&f) < 1e-10);
            let lhs: f64 = f.values.iter().map(|z| z.norm_sqr()).sum::<f64>() / 6.0;
            let rhs: f64 = hat.blocks().iter().map(|b| b.rows() as f64 * b.frobenius_norm().powi(2)).sum();
            prop_assert!((lhs - rhs).abs() < 1e-9);
        }

        #[test]
        fn norm_a_is_submultiplicative_on_s3(f in random_function(6), g in random_function(6), k in 0usize..3) {
            let m = MatrixModel::<f64>::s3();
            let dual = m.dual().clone();
            let weight = match k {
                0 => Weight::trivial(dual),
                1 => Weight::omega_a(dual, 1.0).unwrap(),
                _ => Weight::sigma_a(dual, 2.0).unwrap(),
            };
            let norm = |h: &GroupFunction<f64>| transform(&m, h).unwrap().norm_a(&weight).unwrap();
            let fg = f.pointwise_mult(&g).unwrap();
            prop_assert!(norm(&fg) <= norm(&f) * norm(&g) * (1.0 + 1e-12) + 1e-14);
        }
    }
}
