//! Restriction of central weights to subgroups.

use num_complex::Complex64;

use super::{Weight, WeightKind};
use crate::dual::{CharacterTable, DualTable, IrrepLabel, INTEGRALITY_TOL};
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Branching multiplicities ⟨π|_H, τ⟩ indexed `[π][τ]`.
///
/// `embedding[c]` is the class of G containing the H-class `c`.
pub fn branching_multiplicities(g: &CharacterTable, h: &CharacterTable, embedding: &[usize]) -> Result<Vec<Vec<u64>>> {
    let bad = |msg: String| Err(Error::InvalidEmbedding(msg));
    if embedding.len() != h.classes().len() {
        return bad(format!("{} entries for {} classes of {}", embedding.len(), h.classes().len(), h.name()));
    }
    if let Some(&c) = embedding.iter().find(|&&c| c >= g.classes().len()) {
        return bad(format!("class index {c} out of range for {}", g.name()));
    }
    if !g.order().is_multiple_of(h.order()) {
        return bad(format!("|{}| = {} does not divide |{}| = {}", h.name(), h.order(), g.name(), g.order()));
    }
    if embedding[h.identity_class()] != g.identity_class() {
        return bad("identity of H must map to the identity class of G".into());
    }
    for (gc, class) in g.classes().iter().enumerate() {
        let covered: u64 = embedding
            .iter()
            .enumerate()
            .filter(|(_, &target)| target == gc)
            .map(|(hc, _)| h.classes()[hc].size)
            .sum();
        if covered > class.size {
            return bad(format!("{covered} elements of H land in class {} of size {}", class.name, class.size));
        }
    }

    let mut out = Vec::with_capacity(g.irrep_count());
    for pi in 0..g.irrep_count() {
        let pulled: Vec<Complex64> = embedding.iter().map(|&gc| g.character(pi, gc)).collect();
        let mut row = Vec::with_capacity(h.irrep_count());
        for tau in 0..h.irrep_count() {
            let m = h.class_inner(&pulled, &h.irreps()[tau].values);
            let rounded = m.re.round();
            if (m - Complex64::new(rounded, 0.0)).norm() > INTEGRALITY_TOL || rounded < 0.0 {
                return bad(format!(
                    "pulled-back character of {} has non-integral multiplicity {} on {}",
                    g.irrep_name(pi),
                    m.re,
                    h.irrep_name(tau)
                ));
            }
            row.push(rounded as u64);
        }
        let restricted_dim: u64 = row.iter().zip(h.irreps()).map(|(m, r)| m * r.dim).sum();
        if restricted_dim != g.dim(pi) {
            return bad(format!("restriction of {} does not preserve dimension", g.irrep_name(pi)));
        }
        out.push(row);
    }
    Ok(out)
}

/// ω_H(τ) = min { ω(π) : τ ⊂ π|_H } for a finite subgroup H of a finite G.
pub fn restrict_finite<T: Real>(
    weight: &Weight<T>,
    g: &CharacterTable,
    h: &CharacterTable,
    embedding: &[usize],
) -> Result<Weight<T>> {
    match weight.dual() {
        DualTable::Finite(t) if **t == *g => {}
        _ => return Err(Error::TableMismatch),
    }
    let branching = branching_multiplicities(g, h, embedding)?;
    let mut values = Vec::with_capacity(h.irrep_count());
    for tau in 0..h.irrep_count() {
        let mut best: Option<T> = None;
        for (pi, row) in branching.iter().enumerate() {
            if row[tau] >= 1 {
                let v = weight.eval(&IrrepLabel::Finite(pi))?;
                best = Some(best.map_or(v, |b| b.min(v)));
            }
        }
        let best = best.ok_or_else(|| {
            Error::InvalidEmbedding(format!("{} occurs in no restriction", h.irrep_name(tau)))
        })?;
        values.push((IrrepLabel::Finite(tau), best));
    }
    let delta = values.iter().map(|(_, v)| *v).fold(T::infinity(), T::min).min(weight.delta());
    Weight::table(DualTable::from(h.clone()), values, None, delta)
}

/// Result of restricting an SU(2) weight to the maximal torus.
#[derive(Debug, Clone, PartialEq)]
pub struct TorusRestriction<T> {
    pub weight: Weight<T>,
    /// `None` when the infimum is exact (closed form); otherwise the largest
    /// `t = 2l` searched, and every value is an upper bound for the infimum.
    pub truncation: Option<u32>,
}

impl<T> TorusRestriction<T> {
    pub fn is_exact(&self) -> bool {
        self.truncation.is_none()
    }
}

/// ω_𝕋(n) = inf { ω(π_l) : |n| ≤ 2l }.
///
/// Built-in families are nondecreasing in l, so the infimum sits at 2l = |n|
/// and comes back in closed form. Other weights are minimised over
/// `t = 2l ≤ max_t`, and only |n| ≤ max_t is tabulated.
pub fn restrict_su2_to_torus<T: Real>(weight: &Weight<T>, max_t: Option<u32>) -> Result<TorusRestriction<T>> {
    if *weight.dual() != DualTable::Su2 {
        return Err(Error::TableMismatch);
    }
    if let Some(w) = monotone_closed_form(weight)? {
        return Ok(TorusRestriction { weight: w, truncation: None });
    }
    let max_t = max_t.ok_or_else(|| {
        Error::InvalidArgument("restricting a non-monotone SU(2) weight needs a truncation".into())
    })?;
    let values: Vec<T> = (0..=max_t).map(|t| weight.eval(&IrrepLabel::Su2(t))).collect::<Result<_>>()?;
    // suffix minima: best[k] = min_{t ≥ k} ω(π_{t/2})
    let mut best = values.clone();
    for k in (0..max_t as usize).rev() {
        best[k] = best[k].min(best[k + 1]);
    }
    let mut entries = Vec::with_capacity(2 * max_t as usize + 1);
    for n in -(max_t as i64)..=max_t as i64 {
        entries.push((IrrepLabel::Torus(n), best[n.unsigned_abs() as usize]));
    }
    let delta = best[0].min(weight.delta());
    let w = Weight::table(DualTable::Torus, entries, None, delta)?;
    Ok(TorusRestriction { weight: w, truncation: Some(max_t) })
}

fn monotone_closed_form<T: Real>(weight: &Weight<T>) -> Result<Option<Weight<T>>> {
    let torus = DualTable::Torus;
    Ok(Some(match weight.kind() {
        WeightKind::Trivial => Weight::trivial(torus),
        WeightKind::Dim(a) => Weight::poly_norm(torus, *a)?,
        WeightKind::LogDim(a) => Weight::log_norm(torus, *a)?,
        WeightKind::ExpDim(b) => Weight::exp_norm(torus, *b)?,
        WeightKind::Pointwise(x, y) => match (monotone_closed_form(x)?, monotone_closed_form(y)?) {
            (Some(x), Some(y)) => x.pointwise_product(&y)?,
            _ => return Ok(None),
        },
        // SU(2) irreps are self-conjugate, so Ω = ω² stays nondecreasing.
        WeightKind::Symmetrized(x) => match monotone_closed_form(x)? {
            Some(x) => x.symmetrize(),
            None => return Ok(None),
        },
        _ => return Ok(None),
    }))
}
