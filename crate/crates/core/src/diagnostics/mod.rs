//! Amenability constants, boundedness of Ω, Arens-regularity scans and
//! point-derivation obstructions.

mod arens;
mod obstruction;

pub use arens::{arens_scan, arens_scan_canonical, slot_labels, theta_norm, ArensVerdict, ScanReport, TailLimits, ThetaEntry};
pub use obstruction::{point_deriv_obstruction, ObstructionSequence};

use crate::dual::{DualTable, IrrepLabel, Truncation};
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::weights::{Weight, WeightKind};

/// Tolerance below 1 before an amenability constant signals an invalid weight.
pub const CONSTANT_TOL: f64 = 1e-12;

/// Operator amenability constant Σ_π d_π² Ω(π) / Σ_π d_π² of A(G,ω) for a
/// finite dual.
pub fn amen_constant<T: Real>(weight: &Weight<T>) -> Result<T> {
    let dual = weight.dual();
    let omega = weight.symmetrize();
    let mut num = T::zero();
    let mut den = T::zero();
    for label in dual.all_labels()? {
        let d = T::count(dual.dim(&label)?);
        num = num + d * d * omega.eval(&label)?;
        den = den + d * d;
    }
    Ok(num / den)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProductVerdict {
    Convergent,
    DivergentOrSlow,
}

impl ProductVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            ProductVerdict::Convergent => "convergent",
            ProductVerdict::DivergentOrSlow => "divergent-or-slow",
        }
    }
}

/// Partial products of per-factor amenability constants of a product group.
#[derive(Debug, Clone, PartialEq)]
pub struct ProductAmenability<T> {
    pub factors: Vec<T>,
    pub partial_products: Vec<T>,
    /// Last partial product.
    pub estimate: T,
    pub verdict: ProductVerdict,
    /// 1-based index from which every computed ratio P_{k+1}/P_k − 1 stayed
    /// below the tolerance.
    pub settled_from: Option<usize>,
    /// The factor sequence ended before `max_terms`, so the product is exact.
    pub exhausted: bool,
}

/// Amenability constant M_{G,ω} = Π_i M_{G_i,ω_i} of a product of finite
/// groups with a cross weight, from a finite list or an endless factor rule.
///
/// The verdict is "convergent" when the sequence ran out (a finite product) or
/// when the final ratios P_{k+1}/P_k − 1 fall below `tol` before `max_terms`.
pub fn product_amen<T: Real>(
    factors: impl IntoIterator<Item = Weight<T>>,
    tol: T,
    max_terms: usize,
) -> Result<ProductAmenability<T>> {
    if max_terms == 0 {
        return Err(Error::InvalidArgument("max_terms must be positive".into()));
    }
    let mut iter = factors.into_iter();
    let mut constants = Vec::new();
    let mut partial = Vec::new();
    let mut product = T::one();
    let mut settled_from = None;
    for (k, weight) in iter.by_ref().take(max_terms).enumerate() {
        let c = amen_constant(&weight)?;
        if c < T::one() - T::lit(CONSTANT_TOL) {
            return Err(Error::InvalidWeight(format!("factor {} has amenability constant {c} < 1", k + 1)));
        }
        product = product * c;
        if c - T::one() < tol {
            settled_from.get_or_insert(k + 1);
        } else {
            settled_from = None;
        }
        constants.push(c);
        partial.push(product);
    }
    if constants.is_empty() {
        return Err(Error::InvalidArgument("no factors".into()));
    }
    let exhausted = constants.len() < max_terms || iter.next().is_none();
    let verdict = if exhausted || settled_from.is_some() {
        ProductVerdict::Convergent
    } else {
        ProductVerdict::DivergentOrSlow
    };
    Ok(ProductAmenability { factors: constants, partial_products: partial, estimate: product, verdict, settled_from, exhausted })
}

/// Behaviour of Ω = ω·ω̄ as π → ∞ along the canonical enumeration.
#[derive(Debug, Clone, PartialEq)]
pub enum Classification<T> {
    /// Ω is bounded; `sup` is its supremum over the truncation (over the whole
    /// dual when finite).
    Bounded { sup: T, exact: bool },
    /// Ω → ∞; `frontier_min` is the minimum over the back half of the truncation.
    Divergent { frontier_min: T, exact: bool },
    Inconclusive { sup: T, frontier_min: T },
}

impl<T> Classification<T> {
    pub fn name(&self) -> &'static str {
        match self {
            Classification::Bounded { .. } => "bounded",
            Classification::Divergent { .. } => "divergent",
            Classification::Inconclusive { .. } => "inconclusive",
        }
    }

    /// `false` for truncation-based guesses.
    pub fn is_exact(&self) -> bool {
        match self {
            Classification::Bounded { exact, .. } | Classification::Divergent { exact, .. } => *exact,
            Classification::Inconclusive { .. } => false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Growth {
    Bounded,
    Divergent,
}

fn dims_growth(dual: &DualTable) -> Option<Growth> {
    match dual {
        DualTable::Finite(_) | DualTable::Torus => Some(Growth::Bounded),
        DualTable::Su2 => Some(Growth::Divergent),
        DualTable::Product(parts) => {
            let growths: Vec<(bool, Option<Growth>)> = parts.iter().map(|p| (p.is_finite(), dims_growth(p))).collect();
            if growths.iter().all(|(_, g)| *g == Some(Growth::Bounded)) {
                Some(Growth::Bounded)
            } else if growths.iter().filter(|(fin, _)| !fin).all(|(_, g)| *g == Some(Growth::Divergent)) {
                Some(Growth::Divergent)
            } else {
                None
            }
        }
    }
}

fn growth_of<T: Real>(weight: &Weight<T>) -> Option<Growth> {
    let dual = weight.dual();
    if dual.is_finite() {
        return Some(Growth::Bounded);
    }
    let param = |p: T, base: Option<Growth>| if p > T::zero() { base } else { Some(Growth::Bounded) };
    match weight.kind() {
        WeightKind::Trivial => Some(Growth::Bounded),
        WeightKind::Dim(p) | WeightKind::LogDim(p) | WeightKind::ExpDim(p) => param(*p, dims_growth(dual)),
        WeightKind::PolyNorm(p) | WeightKind::LogNorm(p) | WeightKind::ExpNorm(p) => param(*p, Some(Growth::Divergent)),
        WeightKind::Pointwise(x, y) => match (growth_of(x)?, growth_of(y)?) {
            (Growth::Bounded, Growth::Bounded) => Some(Growth::Bounded),
            _ => Some(Growth::Divergent),
        },
        WeightKind::Symmetrized(x) => growth_of(x),
        WeightKind::Cross(fs) => {
            let gs: Vec<(bool, Option<Growth>)> = fs.iter().map(|w| (w.dual().is_finite(), growth_of(w))).collect();
            if gs.iter().all(|(_, g)| *g == Some(Growth::Bounded)) {
                Some(Growth::Bounded)
            } else if gs.iter().filter(|(fin, _)| !fin).all(|(_, g)| *g == Some(Growth::Divergent)) {
                Some(Growth::Divergent)
            } else {
                None
            }
        }
        // finitely many listed values around a constant default
        WeightKind::Table(t) => t.default.map(|_| Growth::Bounded),
    }
}

/// Classifies Ω = symmetrize(ω): bounded Ω gives operator amenability,
/// Ω → ∞ rules it out. Closed-form families and finite duals are classified
/// exactly; anything else gets a truncation heuristic.
pub fn classify_omega<T: Real>(weight: &Weight<T>, truncation: &Truncation) -> Result<Classification<T>> {
    let omega = weight.symmetrize();
    let dual = weight.dual();
    let labels: Vec<IrrepLabel> = if dual.is_finite() { dual.all_labels()? } else { truncation.labels().to_vec() };
    let values: Vec<T> = labels.iter().map(|l| omega.eval(l)).collect::<Result<_>>()?;
    let half = values.len() / 2;
    let fold_max = |xs: &[T]| xs.iter().copied().fold(T::neg_infinity(), T::max);
    let sup = fold_max(&values);
    let frontier_min = values[half..].iter().copied().fold(T::infinity(), T::min);
    Ok(match growth_of(weight) {
        Some(Growth::Bounded) => Classification::Bounded { sup, exact: true },
        Some(Growth::Divergent) => Classification::Divergent { frontier_min, exact: true },
        None => {
            let head_max = fold_max(&values[..half.max(1)]);
            if fold_max(&values[half..]) <= head_max {
                Classification::Bounded { sup, exact: false }
            } else if frontier_min >= head_max {
                Classification::Divergent { frontier_min, exact: false }
            } else {
                Classification::Inconclusive { sup, frontier_min }
            }
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fourier::{builtin_models, transform, GroupFunction};

    fn s3_factor(a: f64) -> Weight<f64> {
        Weight::omega_a(DualTable::s3(), a).unwrap()
    }

    #[test]
    fn s3_constants() {
        for a in [0.0, 0.5, 1.0, 2.0] {
            let expected = (1.0 + 2f64.powf(2.0 * a + 1.0)) / 3.0;
            assert!((amen_constant(&s3_factor(a)).unwrap() - expected).abs() < 1e-12);
        }
        assert_eq!(amen_constant(&s3_factor(1.0)).unwrap(), 3.0);
        assert!(amen_constant(&Weight::<f64>::trivial(DualTable::Su2)).is_err());
    }

    #[test]
    fn trivial_weight_constant_is_one_on_every_model() {
        for m in builtin_models::<f64>() {
            assert!((amen_constant(&Weight::<f64>::trivial(m.dual().clone())).unwrap() - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn z4_table_matches_delta_norm() {
        let m = crate::fourier::MatrixModel::<f64>::cyclic(4).unwrap();
        let values = (0..4usize).map(|n| (IrrepLabel::Finite(n), 2f64.powi(n.min(4 - n) as i32)));
        let w = Weight::table(m.dual().clone(), values, None, 1.0).unwrap();
        let hat = transform(&m, &GroupFunction::delta_e(&m)).unwrap();
        let oracle = hat.norm_a_delta(&w.symmetrize()).unwrap();
        // Ω = (1, 4, 4, 4)·... each irrep is 1-dim: (1 + 4 + 16 + 4)/4
        assert!((amen_constant(&w).unwrap() - 25.0 / 4.0).abs() < 1e-12);
        assert!((amen_constant(&w).unwrap() - oracle).abs() < 1e-12);
    }

    #[test]
    fn product_amenability() {
        let zero = product_amen((0..50).map(|_| s3_factor(0.0)), 1e-10, 200).unwrap();
        assert_eq!(zero.estimate, 1.0);
        assert_eq!(zero.verdict, ProductVerdict::Convergent);

        let geometric = product_amen((1..).map(|i| s3_factor(0.5f64.powi(i))), 1e-10, 200).unwrap();
        assert_eq!(geometric.verdict, ProductVerdict::Convergent);
        assert!(!geometric.exhausted);
        assert!(geometric.partial_products.windows(2).all(|w| w[0] <= w[1]));

        let ones = product_amen(std::iter::repeat_with(|| s3_factor(1.0)), 1e-10, 30).unwrap();
        assert_eq!(ones.verdict, ProductVerdict::DivergentOrSlow);
        assert_eq!(ones.partial_products[9], 3f64.powi(10));

        let finite = product_amen(vec![s3_factor(1.0), s3_factor(2.0)], 1e-10, 200).unwrap();
        assert!(finite.exhausted);
        assert_eq!(finite.verdict, ProductVerdict::Convergent);
        assert!((finite.estimate - 3.0 * 11.0).abs() < 1e-12);
    }

    #[test]
    fn product_amen_rejects_invalid_factors() {
        let s3 = DualTable::s3();
        let bad = Weight::table(s3.clone(), s3.all_labels().unwrap().into_iter().map(|l| (l, 0.5)), None, 0.5).unwrap();
        assert!(matches!(product_amen(vec![bad], 1e-10, 10), Err(Error::InvalidWeight(_))));
        assert!(product_amen(Vec::<Weight<f64>>::new(), 1e-10, 10).is_err());
    }

    #[test]
    fn classify_closed_forms() {
        let trunc = Truncation::first(&DualTable::Su2, 40).unwrap();
        for w in [
            Weight::omega_a(DualTable::Su2, 0.5).unwrap(),
            Weight::sigma_a(DualTable::Su2, 1.0).unwrap(),
            Weight::rho_b(DualTable::Su2, 0.3).unwrap(),
        ] {
            let c = classify_omega(&w, &trunc).unwrap();
            assert!(matches!(c, Classification::Divergent { exact: true, .. }), "{c:?}");
        }
        let c = classify_omega(&Weight::<f64>::trivial(DualTable::Su2), &trunc).unwrap();
        assert_eq!(c, Classification::Bounded { sup: 1.0, exact: true });
        let c = classify_omega(&Weight::omega_a(DualTable::Su2, 0.0).unwrap(), &trunc).unwrap();
        assert!(matches!(c, Classification::Bounded { exact: true, .. }));

        // finite duals are always bounded
        let c = classify_omega(&s3_factor(2.0), &Truncation::all(&DualTable::s3()).unwrap()).unwrap();
        assert_eq!(c, Classification::Bounded { sup: 16.0, exact: true });
    }

    #[test]
    fn classify_products_and_tables() {
        let dual = DualTable::product(vec![DualTable::Su2, DualTable::Torus]).unwrap();
        let trunc = Truncation::first(&dual, 30).unwrap();
        // dimension weight ignores the torus direction: neither bounded nor divergent
        let w = Weight::omega_a(dual.clone(), 1.0).unwrap();
        assert!(!classify_omega(&w, &trunc).unwrap().is_exact());
        let cross = Weight::cross(
            dual.clone(),
            vec![Weight::omega_a(DualTable::Su2, 1.0).unwrap(), Weight::poly_norm(DualTable::Torus, 1.0).unwrap()],
        )
        .unwrap();
        assert!(matches!(classify_omega(&cross, &trunc).unwrap(), Classification::Divergent { exact: true, .. }));

        let t = Weight::table(DualTable::Torus, [(IrrepLabel::Torus(3), 5.0)], Some(1.0), 1.0).unwrap();
        let tt = Truncation::first(&DualTable::Torus, 20).unwrap();
        assert!(matches!(classify_omega(&t, &tt).unwrap(), Classification::Bounded { exact: true, .. }));

        let grow: Vec<_> = (-20i64..=20).map(|n| (IrrepLabel::Torus(n), 1.0 + n.abs() as f64)).collect();
        let g = Weight::table(DualTable::Torus, grow, None, 1.0).unwrap();
        let c = classify_omega(&g, &tt).unwrap();
        assert!(matches!(c, Classification::Divergent { exact: false, .. }), "{c:?}");
    }
}
