//! Duals of compact groups modelled as enumerable fusion rings.
//!
//! A [`DualTable`] knows its irreducible representations (as [`IrrepLabel`]s),
//! their dimensions, their conjugates and how tensor products decompose.
//! Infinite duals (the circle, SU(2), products containing them) carry a
//! canonical enumeration used for truncated scans:
//!
//! * torus: 0, 1, −1, 2, −2, …
//! * SU(2): increasing `t = 2l`
//! * products: increasing total height (sum of component indices), ties
//!   broken lexicographically on the index tuple.

mod character;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_complex::Complex64;

pub use character::{
    CharacterTable, CharacterTableJson, ClassJson, ConjugacyClass, IrrepCharacter, IrrepJson, ORTHOGONALITY_TOL,
};

use crate::error::{Error, Result};

/// Integrality tolerance for multiplicities computed from characters.
pub const INTEGRALITY_TOL: f64 = 1e-6;

/// An irreducible representation of a compact group.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IrrepLabel {
    /// Index into a character table.
    Finite(usize),
    /// Character χ_n of the circle.
    Torus(i64),
    /// SU(2) irrep π_l stored as `t = 2l`, dimension `t + 1`.
    Su2(u32),
    Product(Vec<IrrepLabel>),
}

impl IrrepLabel {
    /// π_l for a spin given as `t = 2l`.
    pub fn spin_twice(t: u32) -> Self {
        IrrepLabel::Su2(t)
    }

    pub fn product(parts: impl IntoIterator<Item = IrrepLabel>) -> Self {
        IrrepLabel::Product(parts.into_iter().collect())
    }
}

impl fmt::Display for IrrepLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IrrepLabel::Finite(i) => write!(f, "#{i}"),
            IrrepLabel::Torus(n) => write!(f, "{n}"),
            IrrepLabel::Su2(t) => f.write_str(&spin_string(*t)),
            IrrepLabel::Product(parts) => {
                f.write_str("(")?;
                for (k, p) in parts.iter().enumerate() {
                    if k > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{p}")?;
                }
                f.write_str(")")
            }
        }
    }
}

fn spin_string(t: u32) -> String {
    if t.is_multiple_of(2) {
        (t / 2).to_string()
    } else {
        format!("{t}/2")
    }
}

fn parse_spin(s: &str) -> Option<u32> {
    if let Some(num) = s.strip_suffix("/2") {
        let t: u32 = num.trim().parse().ok()?;
        return Some(t);
    }
    if let Ok(l) = s.parse::<u32>() {
        return l.checked_mul(2);
    }
    let l: f64 = s.parse().ok()?;
    let t = 2.0 * l;
    (t >= 0.0 && t.fract() == 0.0 && t <= u32::MAX as f64).then_some(t as u32)
}

/// Multiplicity vector over irrep labels.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct FusionVector {
    entries: BTreeMap<IrrepLabel, u64>,
}

impl FusionVector {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(label: IrrepLabel) -> Self {
        let mut v = Self::new();
        v.entries.insert(label, 1);
        v
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (IrrepLabel, u64)>) -> Self {
        let mut v = Self::new();
        for (label, m) in pairs {
            v.add(label, m).expect("multiplicity overflow in literal");
        }
        v
    }

    /// Adds `mult` copies of `label`; zero multiplicities are not stored.
    pub fn add(&mut self, label: IrrepLabel, mult: u64) -> Result<()> {
        if mult == 0 {
            return Ok(());
        }
        let slot = self.entries.entry(label).or_insert(0);
        *slot = slot.checked_add(mult).ok_or(Error::MultiplicityOverflow)?;
        Ok(())
    }

    pub fn multiplicity(&self, label: &IrrepLabel) -> u64 {
        self.entries.get(label).copied().unwrap_or(0)
    }

    pub fn support(&self) -> impl Iterator<Item = &IrrepLabel> {
        self.entries.keys()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&IrrepLabel, u64)> {
        self.entries.iter().map(|(l, &m)| (l, m))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Σ mult(σ)·dim(σ).
    pub fn total_dim(&self, table: &DualTable) -> Result<u64> {
        self.iter().try_fold(0u64, |acc, (label, m)| {
            let d = table.dim(label)?;
            m.checked_mul(d).and_then(|x| acc.checked_add(x)).ok_or(Error::MultiplicityOverflow)
        })
    }
}

/// The dual of a compact group as a fusion ring.
#[derive(Debug, Clone, PartialEq)]
pub enum DualTable {
    Finite(Arc<CharacterTable>),
    /// Dual of the circle group, ℤ.
    Torus,
    Su2,
    Product(Vec<DualTable>),
}

impl From<CharacterTable> for DualTable {
    fn from(table: CharacterTable) -> Self {
        DualTable::Finite(Arc::new(table))
    }
}

impl DualTable {
    pub fn s3() -> Self {
        CharacterTable::s3().into()
    }

    pub fn cyclic(n: u64) -> Result<Self> {
        Ok(CharacterTable::cyclic(n)?.into())
    }

    /// Product dual; labels are tuples acted on componentwise.
    pub fn product(tables: Vec<DualTable>) -> Result<Self> {
        if tables.is_empty() {
            return Err(Error::InvalidArgument("product of an empty list of duals".into()));
        }
        Ok(DualTable::Product(tables))
    }

    pub fn name(&self) -> String {
        match self {
            DualTable::Finite(t) => t.name().to_string(),
            DualTable::Torus => "T".into(),
            DualTable::Su2 => "SU2".into(),
            DualTable::Product(parts) => parts.iter().map(DualTable::name).collect::<Vec<_>>().join("x"),
        }
    }

    pub fn character_table(&self) -> Option<&CharacterTable> {
        match self {
            DualTable::Finite(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        self.size().is_some()
    }

    /// Number of irreps, or `None` for an infinite dual.
    pub fn size(&self) -> Option<usize> {
        match self {
            DualTable::Finite(t) => Some(t.irrep_count()),
            DualTable::Torus | DualTable::Su2 => None,
            DualTable::Product(parts) => parts.iter().try_fold(1usize, |acc, p| p.size().map(|s| acc * s)),
        }
    }

    pub fn trivial(&self) -> IrrepLabel {
        match self {
            DualTable::Finite(t) => IrrepLabel::Finite(t.trivial()),
            DualTable::Torus => IrrepLabel::Torus(0),
            DualTable::Su2 => IrrepLabel::Su2(0),
            DualTable::Product(parts) => IrrepLabel::Product(parts.iter().map(DualTable::trivial).collect()),
        }
    }

    pub fn contains(&self, label: &IrrepLabel) -> bool {
        match (self, label) {
            (DualTable::Finite(t), IrrepLabel::Finite(i)) => *i < t.irrep_count(),
            (DualTable::Torus, IrrepLabel::Torus(_)) | (DualTable::Su2, IrrepLabel::Su2(_)) => true,
            (DualTable::Product(parts), IrrepLabel::Product(labels)) => {
                parts.len() == labels.len() && parts.iter().zip(labels).all(|(p, l)| p.contains(l))
            }
            _ => false,
        }
    }

    pub fn check(&self, label: &IrrepLabel) -> Result<()> {
        if self.contains(label) {
            Ok(())
        } else {
            Err(Error::LabelMismatch { label: label.to_string(), table: self.name() })
        }
    }

    pub fn dim(&self, label: &IrrepLabel) -> Result<u64> {
        self.check(label)?;
        Ok(self.dim_unchecked(label))
    }

    fn dim_unchecked(&self, label: &IrrepLabel) -> u64 {
        match (self, label) {
            (DualTable::Finite(t), IrrepLabel::Finite(i)) => t.dim(*i),
            (DualTable::Su2, IrrepLabel::Su2(t)) => *t as u64 + 1,
            (DualTable::Product(parts), IrrepLabel::Product(labels)) => {
                parts.iter().zip(labels).map(|(p, l)| p.dim_unchecked(l)).product()
            }
            _ => 1,
        }
    }

    /// Conjugate representation π̄.
    pub fn conj(&self, label: &IrrepLabel) -> Result<IrrepLabel> {
        self.check(label)?;
        Ok(self.conj_unchecked(label))
    }

    fn conj_unchecked(&self, label: &IrrepLabel) -> IrrepLabel {
        match (self, label) {
            (DualTable::Finite(t), IrrepLabel::Finite(i)) => IrrepLabel::Finite(t.conj(*i)),
            (DualTable::Torus, IrrepLabel::Torus(n)) => IrrepLabel::Torus(-n),
            (DualTable::Product(parts), IrrepLabel::Product(labels)) => {
                IrrepLabel::Product(parts.iter().zip(labels).map(|(p, l)| p.conj_unchecked(l)).collect())
            }
            _ => label.clone(),
        }
    }

    /// Decomposes π ⊗ ρ into irreducibles.
    pub fn fuse(&self, a: &IrrepLabel, b: &IrrepLabel) -> Result<FusionVector> {
        self.check(a)?;
        self.check(b)?;
        self.fuse_unchecked(a, b)
    }

    fn fuse_unchecked(&self, a: &IrrepLabel, b: &IrrepLabel) -> Result<FusionVector> {
        match (self, a, b) {
            (DualTable::Finite(t), IrrepLabel::Finite(i), IrrepLabel::Finite(j)) => fuse_finite(t, *i, *j),
            (DualTable::Torus, IrrepLabel::Torus(n), IrrepLabel::Torus(m)) => {
                let sum = n.checked_add(*m).ok_or(Error::MultiplicityOverflow)?;
                Ok(FusionVector::single(IrrepLabel::Torus(sum)))
            }
            (DualTable::Su2, IrrepLabel::Su2(s), IrrepLabel::Su2(t)) => {
                let top = s.checked_add(*t).ok_or(Error::MultiplicityOverflow)?;
                Ok(FusionVector::from_pairs(
                    (s.abs_diff(*t)..=top).step_by(2).map(|k| (IrrepLabel::Su2(k), 1)),
                ))
            }
            (DualTable::Product(parts), IrrepLabel::Product(xs), IrrepLabel::Product(ys)) => {
                let mut acc: Vec<(Vec<IrrepLabel>, u64)> = vec![(Vec::new(), 1)];
                for ((part, x), y) in parts.iter().zip(xs).zip(ys) {
                    let component = part.fuse_unchecked(x, y)?;
                    let mut next = Vec::with_capacity(acc.len() * component.len());
                    for (prefix, m) in &acc {
                        for (label, k) in component.iter() {
                            let mut labels = prefix.clone();
                            labels.push(label.clone());
                            next.push((labels, m.checked_mul(k).ok_or(Error::MultiplicityOverflow)?));
                        }
                    }
                    acc = next;
                }
                let mut out = FusionVector::new();
                for (labels, m) in acc {
                    out.add(IrrepLabel::Product(labels), m)?;
                }
                Ok(out)
            }
            _ => unreachable!("labels checked against table"),
        }
    }

    /// Support of π ⊗ ρ.
    pub fn fuse_support(&self, a: &IrrepLabel, b: &IrrepLabel) -> Result<Vec<IrrepLabel>> {
        Ok(self.fuse(a, b)?.support().cloned().collect())
    }

    /// Decomposes (Σ m_σ σ) ⊗ ρ.
    pub fn fuse_vector(&self, v: &FusionVector, b: &IrrepLabel) -> Result<FusionVector> {
        let mut out = FusionVector::new();
        for (label, m) in v.iter() {
            for (sigma, k) in self.fuse(label, b)?.iter() {
                out.add(sigma.clone(), m.checked_mul(k).ok_or(Error::MultiplicityOverflow)?)?;
            }
        }
        Ok(out)
    }

    /// π^{⊗n} with checked multiplicities.
    pub fn fusion_power(&self, label: &IrrepLabel, n: u32) -> Result<FusionVector> {
        if n == 0 {
            return Err(Error::InvalidArgument("fusion power must be at least 1".into()));
        }
        self.check(label)?;
        let mut acc = FusionVector::single(label.clone());
        for _ in 1..n {
            acc = self.fuse_vector(&acc, label)?;
        }
        Ok(acc)
    }

    /// Irrep at position `index` of the canonical enumeration.
    pub fn label_at(&self, index: usize) -> Option<IrrepLabel> {
        match self {
            DualTable::Finite(t) => (index < t.irrep_count()).then_some(IrrepLabel::Finite(index)),
            DualTable::Torus => {
                let k = index.div_ceil(2) as i64;
                Some(IrrepLabel::Torus(if index % 2 == 1 { k } else { -k }))
            }
            DualTable::Su2 => u32::try_from(index).ok().map(IrrepLabel::Su2),
            DualTable::Product(_) => self.enumerate(index + 1).into_iter().nth(index),
        }
    }

    /// Position of `label` in the canonical enumeration.
    pub fn index_of(&self, label: &IrrepLabel) -> Option<usize> {
        if !self.contains(label) {
            return None;
        }
        match (self, label) {
            (DualTable::Finite(_), IrrepLabel::Finite(i)) => Some(*i),
            (DualTable::Torus, IrrepLabel::Torus(n)) => {
                let k = n.unsigned_abs() as usize;
                Some(if *n > 0 { 2 * k - 1 } else { 2 * k })
            }
            (DualTable::Su2, IrrepLabel::Su2(t)) => Some(*t as usize),
            (DualTable::Product(parts), IrrepLabel::Product(labels)) => {
                let idx: Vec<usize> =
                    parts.iter().zip(labels).map(|(p, l)| p.index_of(l)).collect::<Option<_>>()?;
                let height: usize = idx.iter().sum();
                let sizes: Vec<Option<usize>> = parts.iter().map(DualTable::size).collect();
                let before: usize = (0..height).map(|h| tuples_with_height(&sizes, h).len()).sum();
                let pos = tuples_with_height(&sizes, height).iter().position(|t| *t == idx)?;
                Some(before + pos)
            }
            _ => None,
        }
    }

    /// First `n` labels of the canonical enumeration (fewer if the dual is
    /// finite and smaller).
    pub fn enumerate(&self, n: usize) -> Vec<IrrepLabel> {
        match self {
            DualTable::Product(parts) => {
                let sizes: Vec<Option<usize>> = parts.iter().map(DualTable::size).collect();
                let max_height = sizes
                    .iter()
                    .try_fold(0usize, |acc, s| s.map(|s| acc + s - 1));
                let mut out = Vec::with_capacity(n);
                let mut height = 0;
                while out.len() < n && max_height.is_none_or(|m| height <= m) {
                    for tuple in tuples_with_height(&sizes, height) {
                        if out.len() == n {
                            break;
                        }
                        out.push(IrrepLabel::Product(
                            parts
                                .iter()
                                .zip(&tuple)
                                .map(|(p, &i)| p.label_at(i).expect("index within component"))
                                .collect(),
                        ));
                    }
                    height += 1;
                }
                out
            }
            _ => (0..n).map_while(|i| self.label_at(i)).collect(),
        }
    }

    /// Every irrep of a finite dual.
    pub fn all_labels(&self) -> Result<Vec<IrrepLabel>> {
        let n = self.size().ok_or_else(|| Error::InfiniteDual(self.name()))?;
        Ok(self.enumerate(n))
    }

    pub fn format_label(&self, label: &IrrepLabel) -> String {
        match (self, label) {
            (DualTable::Finite(t), IrrepLabel::Finite(i)) if *i < t.irrep_count() => t.irrep_name(*i),
            (DualTable::Product(parts), IrrepLabel::Product(labels)) if parts.len() == labels.len() => {
                let inner: Vec<String> = parts.iter().zip(labels).map(|(p, l)| p.format_label(l)).collect();
                format!("({})", inner.join(","))
            }
            _ => label.to_string(),
        }
    }

    /// Parses a label: irrep name or index for finite tables, an integer for
    /// the torus, a spin (`1`, `3/2`, `1.5`) for SU(2), and a parenthesised
    /// comma-separated tuple for products.
    pub fn parse_label(&self, text: &str) -> Result<IrrepLabel> {
        let s = text.trim();
        let bad = || Error::BadLabel(text.to_string());
        let label = match self {
            DualTable::Finite(t) => IrrepLabel::Finite(t.irrep_by_name(s).ok_or_else(bad)?),
            DualTable::Torus => IrrepLabel::Torus(s.parse().map_err(|_| bad())?),
            DualTable::Su2 => IrrepLabel::Su2(parse_spin(s).ok_or_else(bad)?),
            DualTable::Product(parts) => {
                let inner = s.strip_prefix('(').and_then(|r| r.strip_suffix(')')).ok_or_else(bad)?;
                let pieces = split_top_level(inner);
                if pieces.len() != parts.len() {
                    return Err(bad());
                }
                IrrepLabel::Product(
                    parts.iter().zip(pieces).map(|(p, piece)| p.parse_label(piece)).collect::<Result<_>>()?,
                )
            }
        };
        self.check(&label)?;
        Ok(label)
    }
}

/// A finite set of labels on which a property is checked, with a short
/// description carried into reports.
#[derive(Debug, Clone, PartialEq)]
pub struct Truncation {
    labels: Vec<IrrepLabel>,
    descriptor: String,
}

impl Truncation {
    /// First `n` labels of the canonical enumeration.
    pub fn first(dual: &DualTable, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("truncation must be nonempty".into()));
        }
        let labels = dual.enumerate(n);
        let descriptor = if dual.size().is_some_and(|s| s <= n) {
            format!("all {} irreps of {}", labels.len(), dual.name())
        } else {
            format!("first {} irreps of {}", labels.len(), dual.name())
        };
        Ok(Self { labels, descriptor })
    }

    /// Every irrep of a finite dual.
    pub fn all(dual: &DualTable) -> Result<Self> {
        let n = dual.size().ok_or_else(|| Error::InfiniteDual(dual.name()))?;
        Self::first(dual, n)
    }

    pub fn explicit(dual: &DualTable, labels: Vec<IrrepLabel>, descriptor: impl Into<String>) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::InvalidArgument("truncation must be nonempty".into()));
        }
        for l in &labels {
            dual.check(l)?;
        }
        Ok(Self { labels, descriptor: descriptor.into() })
    }

    pub fn labels(&self) -> &[IrrepLabel] {
        &self.labels
    }

    pub fn descriptor(&self) -> &str {
        &self.descriptor
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

fn split_top_level(s: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

/// Index tuples with the given component sum, in lexicographic order.
/// `None` marks an infinite component.
fn tuples_with_height(sizes: &[Option<usize>], height: usize) -> Vec<Vec<usize>> {
    match sizes {
        [] => {
            if height == 0 {
                vec![Vec::new()]
            } else {
                Vec::new()
            }
        }
        [first, rest @ ..] => {
            let top = first.map_or(height, |s| height.min(s - 1));
            let mut out = Vec::new();
            for i in 0..=top {
                for mut tail in tuples_with_height(rest, height - i) {
                    tail.insert(0, i);
                    out.push(tail);
                }
            }
            out
        }
    }
}

fn fuse_finite(table: &CharacterTable, i: usize, j: usize) -> Result<FusionVector> {
    let classes = table.classes().len();
    let product: Vec<Complex64> = (0..classes).map(|c| table.character(i, c) * table.character(j, c)).collect();
    let mut out = FusionVector::new();
    for k in 0..table.irrep_count() {
        let m = table.class_inner(&product, &table.irreps()[k].values);
        let rounded = m.re.round();
        if (m - Complex64::new(rounded, 0.0)).norm() > INTEGRALITY_TOL || rounded < 0.0 {
            return Err(Error::NonIntegralMultiplicity { label: table.irrep_name(k), value: m.re });
        }
        out.add(IrrepLabel::Finite(k), rounded as u64)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const TRIV: IrrepLabel = IrrepLabel::Finite(0);
    const SIGN: IrrepLabel = IrrepLabel::Finite(1);
    const STD: IrrepLabel = IrrepLabel::Finite(2);

    fn su2(t: u32) -> IrrepLabel {
        IrrepLabel::Su2(t)
    }

    #[test]
    fn su2_half_times_half() {
        let v = DualTable::Su2.fuse(&su2(1), &su2(1)).unwrap();
        assert_eq!(v, FusionVector::from_pairs([(su2(0), 1), (su2(2), 1)]));
    }

    #[test]
    fn torus_characters_multiply() {
        let v = DualTable::Torus.fuse(&IrrepLabel::Torus(1), &IrrepLabel::Torus(-1)).unwrap();
        assert_eq!(v, FusionVector::single(IrrepLabel::Torus(0)));
    }

    #[test]
    fn s3_std_squared() {
        let v = DualTable::s3().fuse(&STD, &STD).unwrap();
        assert_eq!(v, FusionVector::from_pairs([(TRIV, 1), (SIGN, 1), (STD, 1)]));
    }

    #[test]
    fn conjugates() {
        assert_eq!(DualTable::Su2.conj(&su2(6)).unwrap(), su2(6));
        assert_eq!(DualTable::Torus.conj(&IrrepLabel::Torus(5)).unwrap(), IrrepLabel::Torus(-5));
        assert_eq!(DualTable::s3().conj(&STD).unwrap(), STD);
        let z3 = DualTable::cyclic(3).unwrap();
        assert_eq!(z3.conj(&IrrepLabel::Finite(1)).unwrap(), IrrepLabel::Finite(2));
    }

    #[test]
    fn fusion_powers() {
        assert_eq!(
            DualTable::Su2.fusion_power(&su2(1), 2).unwrap(),
            FusionVector::from_pairs([(su2(0), 1), (su2(2), 1)])
        );
        for table in [DualTable::s3(), DualTable::Su2, DualTable::Torus] {
            let triv = table.trivial();
            assert_eq!(table.fusion_power(&triv, 7).unwrap(), FusionVector::single(triv.clone()));
        }
        // std^3 = std ⊗ (triv + sign + std) = triv + sign + 3 std
        assert_eq!(
            DualTable::s3().fusion_power(&STD, 3).unwrap(),
            FusionVector::from_pairs([(TRIV, 1), (SIGN, 1), (STD, 3)])
        );
        assert!(DualTable::s3().fusion_power(&STD, 0).is_err());
    }

    #[test]
    fn fusion_power_overflow_is_reported() {
        assert_eq!(DualTable::s3().fusion_power(&STD, 80), Err(Error::MultiplicityOverflow));
    }

    #[test]
    fn product_duals() {
        let s3z = DualTable::product(vec![DualTable::s3(), DualTable::Torus]).unwrap();
        assert_eq!(s3z.dim(&IrrepLabel::product([STD, IrrepLabel::Torus(4)])).unwrap(), 2);

        let su = DualTable::product(vec![DualTable::Su2, DualTable::Su2]).unwrap();
        let a = IrrepLabel::product([su2(1), su2(0)]);
        assert_eq!(
            su.fuse(&a, &a).unwrap(),
            FusionVector::from_pairs([
                (IrrepLabel::product([su2(0), su2(0)]), 1),
                (IrrepLabel::product([su2(2), su2(0)]), 1)
            ])
        );

        let ss = DualTable::product(vec![DualTable::s3(), DualTable::s3()]).unwrap();
        let v = ss.fuse(&IrrepLabel::product([STD, TRIV]), &IrrepLabel::product([TRIV, STD])).unwrap();
        assert_eq!(v, FusionVector::single(IrrepLabel::product([STD, STD])));
        assert!(DualTable::product(vec![]).is_err());
    }

    #[test]
    fn rejects_foreign_labels() {
        assert!(matches!(DualTable::s3().fuse(&su2(1), &STD), Err(Error::LabelMismatch { .. })));
        assert!(DualTable::s3().dim(&IrrepLabel::Finite(3)).is_err());
        let ss = DualTable::product(vec![DualTable::s3(), DualTable::s3()]).unwrap();
        assert!(ss.dim(&IrrepLabel::product([STD])).is_err());
    }

    #[test]
    fn corrupt_table_is_rejected_by_fuse() {
        // Orthonormal rows, but not the characters of any group of order 5.
        let text = r#"{"order": 5, "classes": [{"size": 1, "name": "e"}, {"size": 4, "name": "x"}],
            "irreps": [{"dim": 1, "char": [[1,0],[1,0]]}, {"dim": 2, "char": [[2,0],[-0.5,0]]}],
            "conj": [0, 1]}"#;
        let fake: DualTable = CharacterTable::from_json(text).unwrap().into();
        let err = fake.fuse(&IrrepLabel::Finite(1), &IrrepLabel::Finite(1)).unwrap_err();
        assert!(matches!(err, Error::NonIntegralMultiplicity { .. }), "{err}");
    }

    #[test]
    fn enumerations() {
        let torus: Vec<i64> = DualTable::Torus
            .enumerate(5)
            .into_iter()
            .map(|l| match l {
                IrrepLabel::Torus(n) => n,
                _ => unreachable!(),
            })
            .collect();
        assert_eq!(torus, vec![0, 1, -1, 2, -2]);
        assert_eq!(DualTable::Su2.enumerate(3), vec![su2(0), su2(1), su2(2)]);
        assert_eq!(DualTable::s3().enumerate(10).len(), 3);

        let p = DualTable::product(vec![DualTable::s3(), DualTable::Su2]).unwrap();
        let first = p.enumerate(6);
        assert_eq!(
            first,
            vec![
                IrrepLabel::product([TRIV, su2(0)]),
                IrrepLabel::product([TRIV, su2(1)]),
                IrrepLabel::product([SIGN, su2(0)]),
                IrrepLabel::product([TRIV, su2(2)]),
                IrrepLabel::product([SIGN, su2(1)]),
                IrrepLabel::product([STD, su2(0)]),
            ]
        );
        for (i, l) in first.iter().enumerate() {
            assert_eq!(p.index_of(l), Some(i));
            assert_eq!(p.label_at(i).as_ref(), Some(l));
        }
        let ss = DualTable::product(vec![DualTable::s3(), DualTable::s3()]).unwrap();
        assert_eq!(ss.all_labels().unwrap().len(), 9);
        assert!(DualTable::Su2.all_labels().is_err());
    }

    #[test]
    fn label_text() {
        let ss = DualTable::product(vec![DualTable::s3(), DualTable::Su2]).unwrap();
        let l = ss.parse_label("(std, 3/2)").unwrap();
        assert_eq!(l, IrrepLabel::product([STD, su2(3)]));
        assert_eq!(ss.format_label(&l), "(std,3/2)");
        assert_eq!(DualTable::Su2.parse_label("1.5").unwrap(), su2(3));
        assert_eq!(DualTable::Su2.parse_label("2").unwrap(), su2(4));
        assert_eq!(DualTable::Torus.parse_label("-3").unwrap(), IrrepLabel::Torus(-3));
        assert!(DualTable::Su2.parse_label("0.3").is_err());
        assert!(DualTable::s3().parse_label("nope").is_err());
    }

    fn check_fusion_laws(table: &DualTable, labels: &[IrrepLabel]) {
        for a in labels {
            for b in labels {
                let ab = table.fuse(a, b).unwrap();
                assert_eq!(ab.total_dim(table).unwrap(), table.dim(a).unwrap() * table.dim(b).unwrap());
                assert_eq!(ab, table.fuse(b, a).unwrap());
                let conj_ab = table.fuse(&table.conj(a).unwrap(), &table.conj(b).unwrap()).unwrap();
                let mapped =
                    FusionVector::from_pairs(ab.iter().map(|(l, m)| (table.conj(l).unwrap(), m)));
                assert_eq!(conj_ab, mapped);
            }
            assert!(table.fuse(a, &table.conj(a).unwrap()).unwrap().multiplicity(&table.trivial()) >= 1);
            assert_eq!(&table.conj(&table.conj(a).unwrap()).unwrap(), a);
        }
    }

    #[test]
    fn fusion_laws_on_builtins() {
        let finite = [
            DualTable::s3(),
            DualTable::cyclic(5).unwrap(),
            DualTable::product(vec![DualTable::s3(), DualTable::cyclic(3).unwrap()]).unwrap(),
        ];
        for t in &finite {
            check_fusion_laws(t, &t.all_labels().unwrap());
        }
        check_fusion_laws(&DualTable::Su2, &DualTable::Su2.enumerate(12));
        check_fusion_laws(&DualTable::Torus, &DualTable::Torus.enumerate(12));
    }

    proptest! {
        #[test]
        fn su2_support_size(t in 0u32..200, s in 0u32..200) {
            let v = DualTable::Su2.fuse(&su2(t), &su2(s)).unwrap();
            prop_assert_eq!(v.len() as u32, t.min(s) + 1);
            prop_assert_eq!(v.total_dim(&DualTable::Su2).unwrap(), (t as u64 + 1) * (s as u64 + 1));
        }

        #[test]
        fn product_enumeration_is_a_bijection(n in 1usize..60) {
            let p = DualTable::product(vec![DualTable::Torus, DualTable::Su2, DualTable::s3()]).unwrap();
            let labels = p.enumerate(n);
            prop_assert_eq!(labels.len(), n);
            for (i, l) in labels.iter().enumerate() {
                prop_assert_eq!(p.index_of(l), Some(i));
            }
        }
    }
}
