//! Point-derivation obstruction n(ω, π^{⊗n})/n.
//!
//! n(ω, ρ) is the largest weight over supp ρ. If the infimum over n of
//! n(ω, π^{⊗n})/n vanishes for every π, A(G,ω) has no nonzero continuous
//! point derivation at the identity.

use std::collections::BTreeSet;

use crate::dual::{DualTable, IrrepLabel};
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::weights::Weight;

#[derive(Debug, Clone, PartialEq)]
pub struct ObstructionSequence<T> {
    pub label: IrrepLabel,
    /// values[n − 1] = n(ω, π^{⊗n}) / n
    pub values: Vec<T>,
    pub running_min: Vec<T>,
}

impl<T: Real> ObstructionSequence<T> {
    pub fn min(&self) -> T {
        *self.running_min.last().expect("nonempty")
    }
}

/// v_n for n = 1..=n_max from exact supports of the tensor powers.
pub fn point_deriv_obstruction<T: Real>(
    weight: &Weight<T>,
    label: &IrrepLabel,
    n_max: usize,
) -> Result<ObstructionSequence<T>> {
    if n_max == 0 {
        return Err(Error::InvalidArgument("need at least one tensor power".into()));
    }
    weight.dual().check(label)?;
    let maxima = match (weight.dual(), label) {
        (DualTable::Su2, IrrepLabel::Su2(t)) => su2_power_maxima(weight, *t, n_max)?,
        _ => generic_power_maxima(weight, label, n_max)?,
    };
    let values: Vec<T> = maxima.iter().enumerate().map(|(k, &m)| m / T::count(k as u64 + 1)).collect();
    let mut running_min = Vec::with_capacity(values.len());
    let mut best = T::infinity();
    for &v in &values {
        best = best.min(v);
        running_min.push(best);
    }
    Ok(ObstructionSequence { label: label.clone(), values, running_min })
}

/// supp π_{t/2}^{⊗n} is {t} for n = 1 and {k ≤ nt : k ≡ nt mod 2} for n ≥ 2
/// (just {0} when t = 0).
fn su2_power_maxima<T: Real>(weight: &Weight<T>, t: u32, n_max: usize) -> Result<Vec<T>> {
    let eval = |k: u64| {
        let k = u32::try_from(k).map_err(|_| Error::MultiplicityOverflow)?;
        weight.eval(&IrrepLabel::Su2(k))
    };
    let t = t as u64;
    let mut out = Vec::with_capacity(n_max);
    out.push(eval(t)?);
    if t == 0 {
        let v = out[0];
        out.resize(n_max, v);
        return Ok(out);
    }
    // prefix maxima of ω over each parity class, extended as the top grows
    let mut prefix = [T::neg_infinity(); 2];
    let mut next = 0u64;
    for n in 2..=n_max as u64 {
        let top = n.checked_mul(t).ok_or(Error::MultiplicityOverflow)?;
        while next <= top {
            let v = eval(next)?;
            let p = (next % 2) as usize;
            prefix[p] = prefix[p].max(v);
            next += 1;
        }
        out.push(prefix[(top % 2) as usize]);
    }
    Ok(out)
}

fn generic_power_maxima<T: Real>(weight: &Weight<T>, label: &IrrepLabel, n_max: usize) -> Result<Vec<T>> {
    let dual = weight.dual();
    let mut support: BTreeSet<IrrepLabel> = BTreeSet::from([label.clone()]);
    let mut out = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        if n > 1 {
            let mut next = BTreeSet::new();
            for sigma in &support {
                next.extend(dual.fuse(sigma, label)?.support().cloned());
            }
            support = next;
        }
        let max = support.iter().try_fold(T::neg_infinity(), |acc, s| Ok::<_, Error>(acc.max(weight.eval(s)?)))?;
        out.push(max);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn su2_omega_a_closed_form() {
        for a in [0.5, 1.0, 2.0] {
            let w = Weight::omega_a(DualTable::Su2, a).unwrap();
            let seq = point_deriv_obstruction(&w, &IrrepLabel::Su2(1), 200).unwrap();
            for (k, v) in seq.values.iter().enumerate() {
                let n = (k + 1) as f64;
                assert!((v - (n + 1.0).powf(a) / n).abs() < 1e-12 * v, "a={a} n={n}");
            }
        }
    }

    #[test]
    fn su2_fast_path_matches_fusion_supports() {
        let weights = vec![
            Weight::omega_a(DualTable::Su2, 0.8).unwrap(),
            Weight::sigma_a(DualTable::Su2, 2.0).unwrap(),
            // nonmonotone table
            Weight::table(
                DualTable::Su2,
                (0..80u32).map(|t| (IrrepLabel::Su2(t), 1.0 + ((t * 7) % 5) as f64)),
                None,
                1.0,
            )
            .unwrap(),
        ];
        for w in &weights {
            for t in [0u32, 1, 2, 3, 5] {
                let fast = su2_power_maxima(w, t, 12).unwrap();
                let slow = generic_power_maxima(w, &IrrepLabel::Su2(t), 12).unwrap();
                assert_eq!(fast, slow, "t={t}");
            }
        }
    }

    #[test]
    fn trivial_weight_gives_one_over_n() {
        for dual in [DualTable::s3(), DualTable::Su2, DualTable::Torus] {
            let w = Weight::<f64>::trivial(dual.clone());
            let seq = point_deriv_obstruction(&w, &dual.enumerate(2)[1], 50).unwrap();
            for (k, v) in seq.values.iter().enumerate() {
                assert_eq!(*v, 1.0 / (k + 1) as f64);
            }
        }
    }

    #[test]
    fn finite_groups_do_not_overflow() {
        let w = Weight::<f64>::omega_a(DualTable::s3(), 1.0).unwrap();
        let seq = point_deriv_obstruction(&w, &IrrepLabel::Finite(2), 500).unwrap();
        assert!((seq.min() - 2.0 / 500.0).abs() < 1e-15);
    }

    #[test]
    fn rejects_bad_arguments() {
        let w = Weight::<f64>::trivial(DualTable::Su2);
        assert!(point_deriv_obstruction(&w, &IrrepLabel::Su2(1), 0).is_err());
        assert!(point_deriv_obstruction(&w, &IrrepLabel::Torus(1), 3).is_err());
    }
}
