//! The Θ operator Γ(W)(W⁻¹⊗W⁻¹) and truncated double-limit scans.
//!
//! The (π, ρ) block of Θ is ⊕_σ ω(σ)/(ω(π)ω(ρ)) over σ ∈ supp(π ⊗ ρ), so its
//! operator norm is the largest of those ratios. If the iterated limsups of
//! ‖Θ(π,ρ)‖ vanish in both orders, A(G,ω) is Arens regular; the converse is
//! not claimed, so scans only ever report the sufficient condition.

use crate::dual::{DualTable, IrrepLabel};
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::weights::{Weight, WeightKind};

/// ‖Θ(π, ρ)‖ and the σ attaining it.
#[derive(Debug, Clone, PartialEq)]
pub struct ThetaEntry<T> {
    pub left: IrrepLabel,
    pub right: IrrepLabel,
    pub value: T,
    pub argmax: IrrepLabel,
}

pub fn theta_norm<T: Real>(weight: &Weight<T>, left: &IrrepLabel, right: &IrrepLabel) -> Result<ThetaEntry<T>> {
    let denom = weight.eval(left)? * weight.eval(right)?;
    let mut best: Option<(T, IrrepLabel)> = None;
    for sigma in weight.dual().fuse(left, right)?.support() {
        let ratio = weight.eval(sigma)? / denom;
        if best.as_ref().is_none_or(|(b, _)| ratio > *b) {
            best = Some((ratio, sigma.clone()));
        }
    }
    let (value, argmax) = best.expect("tensor products are nonzero");
    Ok(ThetaEntry { left: left.clone(), right: right.clone(), value, argmax })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArensVerdict {
    SufficientConditionMet,
    NotMetOnTruncation,
    Inconclusive,
}

impl ArensVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            ArensVerdict::SufficientConditionMet => "sufficient-condition-met",
            ArensVerdict::NotMetOnTruncation => "not-met-on-truncation",
            ArensVerdict::Inconclusive => "inconclusive",
        }
    }
}

/// limsup over the far direction, per scanned label.
#[derive(Debug, Clone, PartialEq)]
pub struct TailLimits<T> {
    /// rows[i] = limsup_{ρ→∞} ‖Θ(π_i, ρ)‖
    pub rows: Vec<T>,
    /// cols[j] = limsup_{π→∞} ‖Θ(π, ρ_j)‖
    pub cols: Vec<T>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanReport<T> {
    pub truncation: String,
    pub labels: Vec<IrrepLabel>,
    /// theta[i][j] = ‖Θ(labels[i], labels[j])‖
    pub theta: Vec<Vec<T>>,
    pub tail_start: usize,
    pub threshold: T,
    /// max_{j ≥ tail_start} theta[i][j]
    pub row_tail_sup: Vec<T>,
    /// max_{i ≥ tail_start} theta[i][j]
    pub col_tail_sup: Vec<T>,
    pub closed_form_limits: Option<TailLimits<T>>,
    pub verdict: ArensVerdict,
}

/// Scans Θ over `labels × labels`.
///
/// The verdict looks at the last row and column: with closed-form limits
/// (built-in families on SU(2) and the torus) those are compared to
/// `threshold`; otherwise the truncated tail suprema are. A tail that stays
/// above the threshold without decreasing is "not met"; one that is still
/// decreasing is "inconclusive".
pub fn arens_scan<T: Real>(
    weight: &Weight<T>,
    labels: &[IrrepLabel],
    tail_start: usize,
    threshold: T,
    truncation: impl Into<String>,
) -> Result<ScanReport<T>> {
    let len = labels.len();
    if tail_start < 1 || tail_start >= len {
        return Err(Error::InvalidArgument(format!("need 1 <= tail start ({tail_start}) < truncation size ({len})")));
    }
    let values: Vec<T> = labels.iter().map(|l| weight.eval(l)).collect::<Result<_>>()?;
    let dual = weight.dual();
    let mut theta = vec![vec![T::zero(); len]; len];
    for i in 0..len {
        for j in i..len {
            let denom = values[i] * values[j];
            let mut best = T::neg_infinity();
            for sigma in dual.fuse(&labels[i], &labels[j])?.support() {
                best = best.max(weight.eval(sigma)? / denom);
            }
            theta[i][j] = best;
            theta[j][i] = best;
        }
    }
    let row_tail_sup: Vec<T> =
        (0..len).map(|i| theta[i][tail_start..].iter().copied().fold(T::neg_infinity(), T::max)).collect();
    let col_tail_sup: Vec<T> =
        (0..len).map(|j| (tail_start..len).map(|i| theta[i][j]).fold(T::neg_infinity(), T::max)).collect();

    let closed_form_limits = labels
        .iter()
        .map(|l| row_limit(weight, l))
        .collect::<Option<Vec<T>>>()
        .map(|rows| TailLimits { cols: rows.clone(), rows });

    let verdict = match &closed_form_limits {
        Some(lim) => {
            if lim.rows[len - 1] < threshold && lim.cols[len - 1] < threshold {
                ArensVerdict::SufficientConditionMet
            } else {
                ArensVerdict::NotMetOnTruncation
            }
        }
        None => {
            let (r_end, c_end) = (row_tail_sup[len - 1], col_tail_sup[len - 1]);
            if r_end < threshold && c_end < threshold {
                ArensVerdict::SufficientConditionMet
            } else if r_end < row_tail_sup[tail_start] || c_end < col_tail_sup[tail_start] {
                ArensVerdict::Inconclusive
            } else {
                ArensVerdict::NotMetOnTruncation
            }
        }
    };

    Ok(ScanReport {
        truncation: truncation.into(),
        labels: labels.to_vec(),
        theta,
        tail_start,
        threshold,
        row_tail_sup,
        col_tail_sup,
        closed_form_limits,
        verdict,
    })
}

/// Scan over the first `len` labels of the dual's canonical enumeration.
pub fn arens_scan_canonical<T: Real>(
    weight: &Weight<T>,
    len: usize,
    tail_start: usize,
    threshold: T,
) -> Result<ScanReport<T>> {
    let dual = weight.dual();
    let labels = dual.enumerate(len);
    let descriptor = format!("first {} irreps of {}", labels.len(), dual.name());
    arens_scan(weight, &labels, tail_start, threshold, descriptor)
}

/// Labels of a product dual that carry `slot_label[m]` in factor m and the
/// trivial irrep elsewhere; the rows and columns of the cross-pair witness.
pub fn slot_labels(dual: &DualTable, slot_label: &[IrrepLabel]) -> Result<Vec<IrrepLabel>> {
    let parts = match dual {
        DualTable::Product(parts) if parts.len() == slot_label.len() => parts,
        _ => return Err(Error::InvalidArgument("need one label per factor of a product dual".into())),
    };
    slot_label
        .iter()
        .enumerate()
        .map(|(m, label)| {
            parts[m].check(label)?;
            Ok(IrrepLabel::Product(
                parts.iter().enumerate().map(|(k, p)| if k == m { label.clone() } else { p.trivial() }).collect(),
            ))
        })
        .collect()
}

/// limsup_{ρ→∞} ‖Θ(π, ρ)‖ for built-in families on SU(2) and the torus.
fn row_limit<T: Real>(weight: &Weight<T>, label: &IrrepLabel) -> Option<T> {
    let one = T::one();
    let inv_e = (-one).exp();
    match (weight.dual(), label, weight.kind()) {
        (_, _, WeightKind::Trivial) => Some(one),
        (DualTable::Su2, IrrepLabel::Su2(t), kind) => {
            let d = T::count(*t as u64 + 1);
            match kind {
                // top of the support dominates: ((d + d_ρ − 1)/(d d_ρ))^a
                WeightKind::Dim(a) => Some(d.powf(-*a)),
                WeightKind::LogDim(a) => Some((one + d.ln()).powf(-*a)),
                // exponent (d + d_ρ − 1)^b − d^b − d_ρ^b
                WeightKind::ExpDim(b) if *b < one => Some((-d.powf(*b)).exp()),
                WeightKind::ExpDim(b) if *b == one => Some(inv_e),
                _ => None,
            }
        }
        (DualTable::Torus, IrrepLabel::Torus(n), kind) => {
            let h = one + T::count(n.unsigned_abs());
            match kind {
                WeightKind::PolyNorm(a) => Some(h.powf(-*a)),
                WeightKind::LogNorm(a) => Some((one + h.ln()).powf(-*a)),
                WeightKind::ExpNorm(b) if *b < one => Some((-h.powf(*b)).exp()),
                WeightKind::ExpNorm(b) if *b == one => Some(inv_e),
                // every torus irrep is one-dimensional
                WeightKind::Dim(_) | WeightKind::LogDim(_) => Some(one),
                WeightKind::ExpDim(b) => Some((-(one.powf(*b))).exp()),
                _ => None,
            }
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dual::Truncation;

    fn su2(t: u32) -> IrrepLabel {
        IrrepLabel::Su2(t)
    }

    #[test]
    fn theta_examples() {
        let w = Weight::omega_a(DualTable::Su2, 1.0).unwrap();
        let e = theta_norm::<f64>(&w, &su2(2), &su2(2)).unwrap();
        assert!((e.value - 5.0 / 9.0).abs() < 1e-15);
        assert_eq!(e.argmax, su2(4));

        let t = Weight::table(DualTable::Su2, [(su2(0), 1.25)], Some(3.0), 1.0).unwrap();
        let e = theta_norm(&t, &su2(0), &su2(7)).unwrap();
        assert_eq!(e.value, 1.0 / 1.25);

        let s3 = DualTable::s3();
        let cross = Weight::cross_of(vec![
            Weight::omega_a(s3.clone(), 1.7).unwrap(),
            Weight::omega_a(s3.clone(), 1.7).unwrap(),
        ])
        .unwrap();
        let (std, triv) = (IrrepLabel::Finite(2), IrrepLabel::Finite(0));
        let e = theta_norm(
            &cross,
            &IrrepLabel::product([std.clone(), triv.clone()]),
            &IrrepLabel::product([triv, std.clone()]),
        )
        .unwrap();
        assert_eq!(e.value, 1.0);
        assert_eq!(e.argmax, IrrepLabel::product([std.clone(), std]));
    }

    #[test]
    fn su2_omega_one_scan() {
        let w = Weight::omega_a(DualTable::Su2, 1.0).unwrap();
        let r = arens_scan_canonical(&w, 50, 25, 0.05).unwrap();
        for i in 0..50 {
            for j in 0..50 {
                let (dl, dr) = (i as f64 + 1.0, j as f64 + 1.0);
                let exact = (dl + dr - 1.0) / (dl * dr);
                assert!((r.theta[i][j] - exact).abs() <= 1e-15 * exact);
                assert!(r.theta[i][j] <= 1.0 / dl + 1.0 / dr);
            }
        }
        assert_eq!(r.verdict, ArensVerdict::SufficientConditionMet);
        let lim = r.closed_form_limits.as_ref().unwrap();
        assert_eq!(lim.rows[19], 1.0 / 20.0);
        assert!(r.row_tail_sup.windows(2).all(|w| w[1] < w[0]));
    }

    #[test]
    fn trivial_weight_never_meets_the_condition() {
        let w = Weight::<f64>::trivial(DualTable::Su2);
        let r = arens_scan_canonical(&w, 20, 10, 0.05).unwrap();
        assert!(r.theta.iter().flatten().all(|&v| v == 1.0));
        assert_eq!(r.verdict, ArensVerdict::NotMetOnTruncation);
    }

    #[test]
    fn rho_one_has_a_constant_tail() {
        let w = Weight::rho_b(DualTable::Su2, 1.0).unwrap();
        let r = arens_scan_canonical(&w, 30, 10, 0.05).unwrap();
        assert!(r.closed_form_limits.unwrap().rows.iter().all(|&v| (v - (-1f64).exp()).abs() < 1e-15));
        assert_eq!(r.verdict, ArensVerdict::NotMetOnTruncation);
    }

    #[test]
    fn closed_form_limits_match_far_values() {
        let far = 400_000u32;
        let weights = vec![
            Weight::omega_a(DualTable::Su2, 0.7).unwrap(),
            Weight::sigma_a(DualTable::Su2, 1.5).unwrap(),
            Weight::rho_b(DualTable::Su2, 0.5).unwrap(),
        ];
        for w in &weights {
            for t in [0u32, 3, 10] {
                let lim: f64 = row_limit(w, &su2(t)).unwrap();
                let v = theta_norm(w, &su2(t), &su2(far)).unwrap().value;
                assert!((v - lim).abs() < 0.02 * lim.max(0.1), "{w:?} t={t}: {v} vs {lim}");
            }
        }
        let p = Weight::poly_norm(DualTable::Torus, 1.0).unwrap();
        let v: f64 = theta_norm(&p, &IrrepLabel::Torus(4), &IrrepLabel::Torus(100_000)).unwrap().value;
        assert!((v - 0.2).abs() < 1e-4);
    }

    #[test]
    fn cross_pair_family_is_constant_one() {
        let s3 = DualTable::s3();
        let k = 8;
        let dual = DualTable::product(vec![s3.clone(); k]).unwrap();
        let w = Weight::cross(dual.clone(), vec![Weight::omega_a(s3.clone(), 1.0).unwrap(); k]).unwrap();
        let labels = slot_labels(&dual, &vec![IrrepLabel::Finite(2); k]).unwrap();
        let r = arens_scan(&w, &labels, 3, 0.05, "std in one slot").unwrap();
        for i in 0..k {
            for j in 0..k {
                if i != j {
                    assert_eq!(r.theta[i][j], 1.0);
                }
            }
        }
        assert!(r.row_tail_sup.iter().all(|&v| v == 1.0));
        assert!(r.closed_form_limits.is_none());
        assert_eq!(r.verdict, ArensVerdict::NotMetOnTruncation);
    }

    #[test]
    fn validity_matches_theta_bound() {
        let trunc = Truncation::first(&DualTable::Su2, 12).unwrap();
        let w = Weight::sigma_a(DualTable::Su2, 2.0).unwrap();
        assert!(w.verify(&trunc).unwrap().is_valid());
        for a in trunc.labels() {
            for b in trunc.labels() {
                assert!(theta_norm(&w, a, b).unwrap().value <= 1.0 + 1e-12);
            }
        }
    }

    #[test]
    fn argument_checks() {
        let w = Weight::<f64>::trivial(DualTable::Su2);
        assert!(arens_scan_canonical(&w, 10, 0, 0.1).is_err());
        assert!(arens_scan_canonical(&w, 10, 10, 0.1).is_err());
        assert!(slot_labels(&DualTable::Su2, &[su2(1)]).is_err());
    }
}
