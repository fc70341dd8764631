//! Topological types of real algebraic curves and the component set of
//! their real Jacobians.
//!
//! A smooth compact irreducible real curve `(B, c_B)` is described up to
//! deformation by its genus `g`, the number `mu` of components of its real
//! part and whether it is dividing (`eps = 1`) or not (`eps = 0`).
//!
//! When `mu > 0`, the connected components of the real part of
//! `(Jac(B), -c_B*)` are in bijection with the unordered two-element
//! partitions of the real components; when `mu = 0` there is one component
//! for even genus and two for odd genus.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Whether a smooth real curve of topological type `(g, mu, eps)` exists.
///
/// Genus zero is accepted here; surface-level operations reject it
/// separately.
pub fn is_valid_curve_type(g: i64, mu: i64, eps: i64) -> bool {
    if g < 0 {
        return false;
    }
    match eps {
        0 => (0..=g).contains(&mu),
        1 => (1..=g + 1).contains(&mu) && (mu - (g + 1)).rem_euclid(2) == 0,
        _ => false,
    }
}

/// Topological type `(g, mu, eps)` of a real curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawCurveType", into = "RawCurveType")]
pub struct CurveType {
    g: u32,
    mu: u32,
    dividing: bool,
}

#[derive(Serialize, Deserialize)]
struct RawCurveType {
    g: i64,
    mu: i64,
    eps: i64,
}

impl TryFrom<RawCurveType> for CurveType {
    type Error = Error;

    fn try_from(raw: RawCurveType) -> Result<Self> {
        CurveType::new(raw.g, raw.mu, raw.eps)
    }
}

impl From<CurveType> for RawCurveType {
    fn from(ct: CurveType) -> Self {
        RawCurveType {
            g: ct.g.into(),
            mu: ct.mu.into(),
            eps: ct.eps().into(),
        }
    }
}

impl CurveType {
    pub fn new(g: i64, mu: i64, eps: i64) -> Result<Self> {
        if !is_valid_curve_type(g, mu, eps) {
            return Err(Error::InvalidCurveType { g, mu, eps });
        }
        let g = u32::try_from(g).map_err(|_| Error::InvalidCurveType { g, mu, eps })?;
        let mu = u32::try_from(mu).map_err(|_| Error::InvalidCurveType { g: g.into(), mu, eps })?;
        Ok(CurveType {
            g,
            mu,
            dividing: eps == 1,
        })
    }

    pub fn genus(&self) -> u32 {
        self.g
    }

    pub fn real_components(&self) -> u32 {
        self.mu
    }

    pub fn is_dividing(&self) -> bool {
        self.dividing
    }

    pub fn eps(&self) -> u8 {
        u8::from(self.dividing)
    }

    pub fn has_real_points(&self) -> bool {
        self.mu > 0
    }

    /// Rejects genus zero, which the surface classification excludes.
    pub fn require_irrational(&self) -> Result<()> {
        if self.g == 0 {
            Err(Error::RationalBase)
        } else {
            Ok(())
        }
    }

    /// All valid curve types of genus `g`, sorted by `(mu, eps)`.
    pub fn all_of_genus(g: u32) -> Vec<CurveType> {
        let g64 = i64::from(g);
        let mut out = Vec::new();
        for mu in 0..=g64 + 1 {
            for eps in 0..=1 {
                if let Ok(ct) = CurveType::new(g64, mu, eps) {
                    out.push(ct);
                }
            }
        }
        out
    }
}

impl fmt::Display for CurveType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.g, self.mu, self.eps())
    }
}

/// Two real curves lie in the same deformation class exactly when their
/// topological types agree.
pub fn curves_deformation_equivalent(a: &CurveType, b: &CurveType) -> bool {
    a == b
}

/// An unordered partition `{side, complement}` of the real components
/// `1..=mu`, stored by the side containing component 1.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Partition {
    side: Vec<u32>,
}

impl Partition {
    /// Canonicalizes an arbitrary subset of `1..=mu` into the partition it
    /// determines together with its complement.
    pub fn from_subset(mu: u32, subset: impl IntoIterator<Item = u32>) -> Result<Self> {
        if mu == 0 {
            return Err(Error::NoRealComponents(0));
        }
        let set: BTreeSet<u32> = subset.into_iter().collect();
        if let Some(&bad) = set.iter().find(|&&i| i == 0 || i > mu) {
            return Err(Error::NonCanonicalPartition {
                mu,
                side: vec![bad],
            });
        }
        let side: Vec<u32> = if set.contains(&1) {
            set.into_iter().collect()
        } else {
            (1..=mu).filter(|i| !set.contains(i)).collect()
        };
        Ok(Partition { side })
    }

    /// Builds a partition from a side that must already be canonical.
    pub fn canonical(mu: u32, side: Vec<u32>) -> Result<Self> {
        let p = Partition { side };
        p.check_canonical(mu)?;
        Ok(p)
    }

    /// The partition `{all components, empty}`, which is the one attached
    /// to the trivial bundle.
    pub fn full(mu: u32) -> Result<Self> {
        Partition::from_subset(mu, 1..=mu)
    }

    pub fn check_canonical(&self, mu: u32) -> Result<()> {
        let sorted = self.side.windows(2).all(|w| w[0] < w[1]);
        let in_range = self.side.iter().all(|&i| (1..=mu).contains(&i));
        if mu == 0 || !sorted || !in_range || self.side.first() != Some(&1) {
            return Err(Error::NonCanonicalPartition {
                mu,
                side: self.side.clone(),
            });
        }
        Ok(())
    }

    pub fn side(&self) -> &[u32] {
        &self.side
    }

    pub fn side_len(&self) -> u32 {
        self.side.len() as u32
    }

    pub fn contains(&self, component: u32) -> bool {
        self.side.binary_search(&component).is_ok()
    }

    pub fn complement(&self, mu: u32) -> Vec<u32> {
        (1..=mu).filter(|&i| !self.contains(i)).collect()
    }

    pub fn is_full(&self, mu: u32) -> bool {
        self.side_len() == mu
    }
}

/// All canonical partitions of `1..=mu`, ordered by the bitmask of their
/// side.
pub fn canonical_partitions(mu: u32) -> Result<Vec<Partition>> {
    let count = count_partitions(i64::from(mu))?;
    let mut out = Vec::with_capacity(count as usize);
    for mask in 0..count {
        // bit j of `mask` decides membership of component j + 2.
        let mut side = vec![1];
        side.extend((0..mu - 1).filter(|j| mask >> j & 1 == 1).map(|j| j + 2));
        out.push(Partition { side });
    }
    Ok(out)
}

/// Number of unordered two-element partitions of `mu` real components.
pub fn count_partitions(mu: i64) -> Result<u64> {
    if mu <= 0 {
        return Err(Error::NoRealComponents(mu));
    }
    if mu > 64 {
        return Err(Error::CountOverflow(mu - 1));
    }
    Ok(1u64 << (mu - 1))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Triviality {
    Trivial,
    Nontrivial,
}

/// A connected component of the real part of `(Jac(B), -c_B*)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum JacComponent {
    Partition(Partition),
    EmptyRealPart(Triviality),
}

impl JacComponent {
    /// Checks that this component exists on a curve of type `ct`.
    pub fn check_for(&self, ct: &CurveType) -> Result<()> {
        match self {
            JacComponent::Partition(p) => {
                if ct.mu == 0 {
                    return Err(Error::EmptyRealPart(*ct));
                }
                p.check_canonical(ct.mu)
            }
            JacComponent::EmptyRealPart(flag) => {
                if ct.mu > 0 {
                    return Err(Error::InconsistentBundle(format!(
                        "curve {ct} has real points; its Jacobian components are partitions"
                    )));
                }
                if *flag == Triviality::Nontrivial && ct.g.is_multiple_of(2) {
                    return Err(Error::InconsistentBundle(format!(
                        "curve {ct} has even genus and empty real part; its real Jacobian is connected"
                    )));
                }
                Ok(())
            }
        }
    }

    /// The component containing the trivial bundle `L_0`.
    pub fn trivial_for(ct: &CurveType) -> Self {
        if ct.mu == 0 {
            JacComponent::EmptyRealPart(Triviality::Trivial)
        } else {
            JacComponent::Partition(Partition {
                side: (1..=ct.mu).collect(),
            })
        }
    }

    pub fn is_trivial_for(&self, ct: &CurveType) -> bool {
        *self == JacComponent::trivial_for(ct)
    }
}

/// Number of connected components of the real part of `(Jac(B), -c_B*)`.
pub fn jac_real_component_count(ct: &CurveType) -> Result<u64> {
    if ct.mu > 0 {
        count_partitions(i64::from(ct.mu))
    } else if ct.g.is_multiple_of(2) {
        Ok(1)
    } else {
        Ok(2)
    }
}

/// All components of the real Jacobian of a curve of type `ct`.
pub fn jac_components(ct: &CurveType) -> Result<Vec<JacComponent>> {
    if ct.mu > 0 {
        Ok(canonical_partitions(ct.mu)?
            .into_iter()
            .map(JacComponent::Partition)
            .collect())
    } else if ct.g.is_multiple_of(2) {
        Ok(vec![JacComponent::EmptyRealPart(Triviality::Trivial)])
    } else {
        Ok(vec![
            JacComponent::EmptyRealPart(Triviality::Trivial),
            JacComponent::EmptyRealPart(Triviality::Nontrivial),
        ])
    }
}

/// The real Jacobian component attached to a partition of the real
/// components.
pub fn component_of_partition(ct: &CurveType, p: &Partition) -> Result<JacComponent> {
    if ct.mu == 0 {
        return Err(Error::EmptyRealPart(*ct));
    }
    p.check_canonical(ct.mu)?;
    Ok(JacComponent::Partition(p.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn curve_type_examples() {
        assert!(is_valid_curve_type(3, 3, 0));
        assert!(is_valid_curve_type(1, 2, 1));
        assert!(!is_valid_curve_type(2, 3, 0));
        assert!(is_valid_curve_type(3, 2, 1));
        assert!(!is_valid_curve_type(3, 1, 1));
        assert!(!is_valid_curve_type(1, 0, 1));
        assert!(!is_valid_curve_type(-1, 0, 0));
        assert!(!is_valid_curve_type(2, 1, 2));
    }

    #[test]
    fn maximal_dividing_always_valid() {
        for g in 0..40 {
            assert!(is_valid_curve_type(g, g + 1, 1));
            assert!(!is_valid_curve_type(g, g + 1, 0));
        }
    }

    #[test]
    fn partition_counts() {
        assert_eq!(count_partitions(1).unwrap(), 1);
        assert_eq!(count_partitions(3).unwrap(), 4);
        assert!(count_partitions(0).is_err());
        assert!(count_partitions(-2).is_err());
        assert!(count_partitions(66).is_err());
    }

    /// Subsets of `1..=mu` taken modulo complement, by brute force.
    fn partitions_by_enumeration(mu: u32) -> BTreeSet<BTreeSet<BTreeSet<u32>>> {
        let all: BTreeSet<u32> = (1..=mu).collect();
        (0u32..1 << mu)
            .map(|mask| {
                let s: BTreeSet<u32> = (1..=mu).filter(|i| mask >> (i - 1) & 1 == 1).collect();
                let c: BTreeSet<u32> = all.difference(&s).copied().collect();
                [s, c].into_iter().collect()
            })
            .collect()
    }

    #[test]
    fn canonical_partitions_match_enumeration() {
        assert_eq!(partitions_by_enumeration(4).len(), 8);
        for mu in 1..=10 {
            let oracle = partitions_by_enumeration(mu);
            let ours = canonical_partitions(mu).unwrap();
            assert_eq!(ours.len(), oracle.len(), "mu={mu}");
            let as_pairs: BTreeSet<BTreeSet<BTreeSet<u32>>> = ours
                .iter()
                .map(|p| {
                    let s: BTreeSet<u32> = p.side().iter().copied().collect();
                    let c: BTreeSet<u32> = p.complement(mu).into_iter().collect();
                    [s, c].into_iter().collect()
                })
                .collect();
            assert_eq!(as_pairs, oracle);
        }
    }

    #[test]
    fn from_subset_canonicalizes() {
        let p = Partition::from_subset(4, [2, 3]).unwrap();
        assert_eq!(p.side(), &[1, 4]);
        let q = Partition::from_subset(4, [1, 4]).unwrap();
        assert_eq!(p, q);
        let empty = Partition::from_subset(3, []).unwrap();
        assert_eq!(empty.side(), &[1, 2, 3]);
        assert!(Partition::from_subset(3, [4]).is_err());
        assert!(Partition::canonical(3, vec![2]).is_err());
        assert!(Partition::canonical(3, vec![1, 1]).is_err());
    }

    #[test]
    fn jacobian_counts() {
        let ct = CurveType::new(3, 2, 0).unwrap();
        assert_eq!(jac_real_component_count(&ct).unwrap(), 2);
        assert_eq!(jac_real_component_count(&CurveType::new(2, 0, 0).unwrap()).unwrap(), 1);
        assert_eq!(jac_real_component_count(&CurveType::new(3, 0, 0).unwrap()).unwrap(), 2);
    }

    #[test]
    fn component_of_partition_examples() {
        let ct = CurveType::new(3, 2, 0).unwrap();
        let p = Partition::canonical(2, vec![1]).unwrap();
        assert_eq!(
            component_of_partition(&ct, &p).unwrap(),
            JacComponent::Partition(p.clone())
        );
        let images: BTreeSet<_> = canonical_partitions(2)
            .unwrap()
            .iter()
            .map(|p| component_of_partition(&ct, p).unwrap())
            .collect();
        assert_eq!(images.len() as u64, jac_real_component_count(&ct).unwrap());

        let elliptic = CurveType::new(1, 2, 1).unwrap();
        let full = Partition::canonical(2, vec![1, 2]).unwrap();
        let c = component_of_partition(&elliptic, &full).unwrap();
        assert!(c.is_trivial_for(&elliptic));

        let empty = CurveType::new(2, 0, 0).unwrap();
        assert!(matches!(
            component_of_partition(&empty, &p),
            Err(Error::EmptyRealPart(_))
        ));
        assert!(component_of_partition(&ct, &Partition { side: vec![2] }).is_err());
    }

    #[test]
    fn nontrivial_empty_component_requires_odd_genus() {
        let even = CurveType::new(2, 0, 0).unwrap();
        let odd = CurveType::new(3, 0, 0).unwrap();
        let nt = JacComponent::EmptyRealPart(Triviality::Nontrivial);
        assert!(nt.check_for(&even).is_err());
        assert!(nt.check_for(&odd).is_ok());
    }

    #[test]
    fn deformation_equivalence_of_curves() {
        let a = CurveType::new(3, 2, 0).unwrap();
        assert!(curves_deformation_equivalent(&a, &a));
        assert!(CurveType::new(3, 1, 1).is_err());
        let b = CurveType::new(2, 1, 0).unwrap();
        let c = CurveType::new(2, 2, 0).unwrap();
        assert!(!curves_deformation_equivalent(&b, &c));
    }

    #[test]
    fn json_shapes() {
        let ct = CurveType::new(3, 2, 0).unwrap();
        assert_eq!(serde_json::to_string(&ct).unwrap(), r#"{"g":3,"mu":2,"eps":0}"#);
        let back: CurveType = serde_json::from_str(r#"{"g":3,"mu":2,"eps":0}"#).unwrap();
        assert_eq!(back, ct);
        assert!(serde_json::from_str::<CurveType>(r#"{"g":3,"mu":1,"eps":1}"#).is_err());
        let p = Partition::canonical(3, vec![1, 3]).unwrap();
        assert_eq!(serde_json::to_string(&p).unwrap(), "[1,3]");
    }

    #[test]
    fn all_of_genus_lists_valid_types() {
        let types = CurveType::all_of_genus(2);
        // eps=0: mu in 0..=2; eps=1: mu in {1, 3}
        assert_eq!(types.len(), 5);
        assert!(types.iter().all(|ct| is_valid_curve_type(2, ct.mu.into(), ct.eps().into())));
    }
}
