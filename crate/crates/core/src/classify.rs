//! Topological types of real ruled surfaces and the deformation-class
//! decision procedure.
//!
//! A [`SurfaceRecipe`] describes a real ruled surface as a decomposable model
//! `P(L + L_0)` with one of its real structures, followed by a multiset of
//! elementary transformations. [`normalize`] maps a recipe to its
//! [`DeformationClass`]; two non-rational surfaces are deformation equivalent
//! iff their normal forms agree.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bundle::{BundleClass, Relation};
use crate::curve::{CurveType, JacComponent, Partition, Triviality};
use crate::error::{Error, Result};
use crate::surface::{check_tag, real_part, RealStructureTag};

/// `(t, k, g, mu, eps)`: tori and Klein bottles of the real part, followed by
/// the type of the base curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Quintuple {
    pub t: i64,
    pub k: i64,
    pub g: i64,
    pub mu: i64,
    pub eps: i64,
}

impl Quintuple {
    pub fn new(t: i64, k: i64, g: i64, mu: i64, eps: i64) -> Self {
        Quintuple { t, k, g, mu, eps }
    }

    fn over(t: u32, k: u32, ct: &CurveType) -> Self {
        Quintuple::new(
            t.into(),
            k.into(),
            ct.genus().into(),
            ct.real_components().into(),
            ct.eps().into(),
        )
    }

    /// The first violated allowability constraint, if any.
    pub fn violation(&self) -> Option<&'static str> {
        if self.t < 0 {
            Some("t < 0")
        } else if self.k < 0 {
            Some("k < 0")
        } else if self.t + self.k > self.mu {
            Some("t+k > mu")
        } else if self.g < 1 {
            Some("g < 1")
        } else if !crate::curve::is_valid_curve_type(self.g, self.mu, self.eps) {
            Some("invalid curve type")
        } else {
            None
        }
    }

    pub fn is_allowable(&self) -> bool {
        self.violation().is_none()
    }

    pub fn curve(&self) -> Result<CurveType> {
        CurveType::new(self.g, self.mu, self.eps)
    }
}

impl fmt::Display for Quintuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{},{})", self.t, self.k, self.g, self.mu, self.eps)
    }
}

pub fn is_allowable(q: &Quintuple) -> bool {
    q.is_allowable()
}

/// Where an elementary transformation is performed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TransformSite {
    /// A real point over the given real component of the base (1-based).
    RealPoint(u32),
    /// A pair of conjugate imaginary points.
    ConjugatePair,
}

/// A decomposable model with a real structure, then elementary
/// transformations.
///
/// For the `direct_sum` structure the transform multiset is the support of
/// `D = D+ - D-` with `L = O(D)`: every real point of `D` is a `RealPoint`
/// site on its component and every conjugate couple a `ConjugatePair` site.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawRecipe", into = "RawRecipe")]
pub struct SurfaceRecipe {
    curve: CurveType,
    bundle: BundleClass,
    tag: RealStructureTag,
    transforms: Vec<TransformSite>,
}

#[derive(Serialize, Deserialize)]
struct RawRecipe {
    curve: CurveType,
    bundle: BundleClass,
    tag: RealStructureTag,
    #[serde(default)]
    transforms: Vec<TransformSite>,
}

impl TryFrom<RawRecipe> for SurfaceRecipe {
    type Error = Error;

    fn try_from(raw: RawRecipe) -> Result<Self> {
        SurfaceRecipe::new(raw.curve, raw.bundle, raw.tag, raw.transforms)
    }
}

impl From<SurfaceRecipe> for RawRecipe {
    fn from(r: SurfaceRecipe) -> Self {
        RawRecipe {
            curve: r.curve,
            bundle: r.bundle,
            tag: r.tag,
            transforms: r.transforms,
        }
    }
}

impl SurfaceRecipe {
    pub fn new(
        curve: CurveType,
        bundle: BundleClass,
        tag: RealStructureTag,
        transforms: Vec<TransformSite>,
    ) -> Result<Self> {
        let r = SurfaceRecipe {
            curve,
            bundle,
            tag,
            transforms,
        };
        r.validate()?;
        Ok(r)
    }

    pub fn curve(&self) -> &CurveType {
        &self.curve
    }

    pub fn bundle(&self) -> &BundleClass {
        &self.bundle
    }

    pub fn tag(&self) -> RealStructureTag {
        self.tag
    }

    pub fn transforms(&self) -> &[TransformSite] {
        &self.transforms
    }

    pub fn validate(&self) -> Result<()> {
        self.curve.require_irrational()?;
        self.bundle.check_for(&self.curve)?;
        check_tag(&self.bundle, &self.curve, self.tag)?;
        let mu = self.curve.real_components();
        let invalid = |msg: String| Err(Error::InvalidRecipe(msg));
        if mu == 0 {
            if self.tag == RealStructureTag::DirectSum && self.bundle.degree() % 2 != 0 {
                return invalid(format!(
                    "over a base without real points D has even degree, got {}",
                    self.bundle.degree()
                ));
            }
            if let Some(site) = self.transforms.first() {
                return invalid(match site {
                    TransformSite::RealPoint(i) => {
                        format!("real point on component {i}, but the base has no real points")
                    }
                    TransformSite::ConjugatePair => {
                        "a conjugate pair changes the spin of the quotient when the base has no real points"
                            .into()
                    }
                });
            }
            return Ok(());
        }
        let real = self.real_fibers()?;
        for site in &self.transforms {
            if let TransformSite::RealPoint(i) = *site {
                if !(1..=mu).contains(&i) {
                    return invalid(format!("component {i} out of range 1..={mu}"));
                }
                if !real[(i - 1) as usize] {
                    return invalid(format!("component {i} carries no real fiber"));
                }
            }
        }
        if self.tag == RealStructureTag::DirectSum {
            let points = self.real_point_count();
            if (self.bundle.degree() - points as i64).rem_euclid(2) != 0 {
                return invalid(format!(
                    "degree {} but {points} real points in the support of D",
                    self.bundle.degree()
                ));
            }
        }
        Ok(())
    }

    fn real_point_count(&self) -> usize {
        self.transforms
            .iter()
            .filter(|s| matches!(s, TransformSite::RealPoint(_)))
            .count()
    }

    /// For each real component of the base, whether the model has real
    /// fibers over it.
    pub fn real_fibers(&self) -> Result<Vec<bool>> {
        let mu = self.curve.real_components();
        Ok(match self.tag {
            _ if mu == 0 => Vec::new(),
            RealStructureTag::DirectSum => vec![true; mu as usize],
            tag => {
                let plus = match self.bundle.jac_component() {
                    Some(JacComponent::Partition(p)) => p.clone(),
                    _ => Partition::full(mu)?,
                };
                (1..=mu)
                    .map(|i| plus.contains(i) == (tag == RealStructureTag::CPlus))
                    .collect()
            }
        })
    }

    /// Number of `RealPoint` sites on each component, 1-based.
    pub fn real_point_counts(&self) -> Vec<u32> {
        let mut counts = vec![0; self.curve.real_components() as usize];
        for site in &self.transforms {
            if let TransformSite::RealPoint(i) = *site {
                counts[(i - 1) as usize] += 1;
            }
        }
        counts
    }
}

/// Normal form of a non-rational real ruled surface. `spin` is the spin
/// flag of the quotient `X / c_X`, recorded only when `mu = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawClass", into = "RawClass")]
pub struct DeformationClass {
    q: Quintuple,
    spin: Option<bool>,
}

#[derive(Serialize, Deserialize)]
struct RawClass {
    q: Quintuple,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    spin: Option<bool>,
}

impl TryFrom<RawClass> for DeformationClass {
    type Error = Error;

    fn try_from(raw: RawClass) -> Result<Self> {
        DeformationClass::new(raw.q, raw.spin)
    }
}

impl From<DeformationClass> for RawClass {
    fn from(c: DeformationClass) -> Self {
        RawClass { q: c.q, spin: c.spin }
    }
}

impl DeformationClass {
    pub fn new(q: Quintuple, spin: Option<bool>) -> Result<Self> {
        if let Some(v) = q.violation() {
            return Err(Error::NotAllowable(format!("{q}: {v}")));
        }
        if (q.mu == 0) != spin.is_some() {
            return Err(Error::SpinMismatch);
        }
        Ok(DeformationClass { q, spin })
    }

    pub fn quintuple(&self) -> Quintuple {
        self.q
    }

    pub fn spin(&self) -> Option<bool> {
        self.spin
    }
}

impl fmt::Display for DeformationClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.spin {
            None => write!(f, "{}", self.q),
            Some(true) => write!(f, "{} spin", self.q),
            Some(false) => write!(f, "{} non-spin", self.q),
        }
    }
}

/// One cell of the spin table for `mu = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpinCell {
    pub spin: bool,
    /// Set when the value follows from the two-class count rather than
    /// from a direct argument.
    pub theorem_derived: bool,
}

/// Spin flag of `P(L + L_0) / c` for `c` one of `c+`, `c-`, over a base of
/// genus `g` with empty real part, keyed by the Jacobian component of `L`.
pub fn spin_cell(g: u32, component: Triviality, tag: RealStructureTag) -> SpinCell {
    let cell = |spin, theorem_derived| SpinCell {
        spin,
        theorem_derived,
    };
    match (g.is_multiple_of(2), component, tag) {
        (true, Triviality::Trivial, RealStructureTag::CPlus) => cell(true, false),
        (true, Triviality::Trivial, _) => cell(false, false),
        (false, Triviality::Trivial, RealStructureTag::CMinus) => cell(true, true),
        (false, Triviality::Trivial, _) => cell(true, false),
        (_, Triviality::Nontrivial, _) => cell(false, false),
    }
}

/// Builds a recipe with the given topological type and, when `mu = 0`,
/// spin flag.
pub fn realize(q: &Quintuple, spin: Option<bool>) -> Result<SurfaceRecipe> {
    if let Some(v) = q.violation() {
        return Err(Error::NotAllowable(format!("{q}: {v}")));
    }
    if (q.mu == 0) != spin.is_some() {
        return Err(Error::SpinMismatch);
    }
    let ct = q.curve()?;
    let mu = ct.real_components();
    if let Some(spin) = spin {
        let (bundle, tag) = match (ct.genus() % 2 == 0, spin) {
            (_, true) => (BundleClass::trivial(&ct), RealStructureTag::CPlus),
            (true, false) => (BundleClass::trivial(&ct), RealStructureTag::CMinus),
            (false, false) => (
                BundleClass::anti_real(JacComponent::EmptyRealPart(Triviality::Nontrivial)),
                RealStructureTag::CPlus,
            ),
        };
        return SurfaceRecipe::new(ct, bundle, tag, Vec::new());
    }
    let side = (q.t + q.k) as u32;
    let k = q.k as u32;
    let (partition, tag) = if side == 0 {
        (Partition::full(mu)?, RealStructureTag::CMinus)
    } else {
        (
            Partition::canonical(mu, (1..=side).collect())?,
            RealStructureTag::CPlus,
        )
    };
    SurfaceRecipe::new(
        ct,
        BundleClass::anti_real(JacComponent::Partition(partition)),
        tag,
        (1..=k).map(TransformSite::RealPoint).collect(),
    )
}

pub fn topological_type(r: &SurfaceRecipe) -> Result<Quintuple> {
    r.validate()?;
    let ct = &r.curve;
    if ct.real_components() == 0 {
        return Ok(Quintuple::over(0, 0, ct));
    }
    let real = r.real_fibers()?;
    if r.tag != RealStructureTag::DirectSum {
        let tori = real_part(&r.bundle, r.tag, ct)?.tori;
        debug_assert_eq!(tori as usize, real.iter().filter(|b| **b).count());
    }
    let counts = r.real_point_counts();
    let (mut t, mut k) = (0, 0);
    for (is_real, n) in real.iter().zip(&counts) {
        match (is_real, n % 2) {
            (false, _) => {}
            (true, 0) => t += 1,
            (true, _) => k += 1,
        }
    }
    Ok(Quintuple::over(t, k, ct))
}

/// Appends `site`. On a `direct_sum` recipe this is `D -> D + x`, so the
/// degree of `L` grows by the degree of the site.
pub fn elementary_transform(r: &SurfaceRecipe, site: TransformSite) -> Result<SurfaceRecipe> {
    let mut out = r.clone();
    out.transforms.push(site);
    if r.tag == RealStructureTag::DirectSum {
        let step = match site {
            TransformSite::RealPoint(_) => 1,
            TransformSite::ConjugatePair => 2,
        };
        let obstruction = r.bundle.obstruction();
        out.bundle = BundleClass::new(r.bundle.degree() + step, Relation::Real, obstruction, None)?;
    }
    out.validate()?;
    Ok(out)
}

/// Cancels transforms pairwise on each component, drops conjugate pairs and
/// reads off the class.
pub fn normalize(r: &SurfaceRecipe) -> Result<DeformationClass> {
    let q = topological_type(r)?;
    let spin = if q.mu == 0 {
        Some(match r.tag {
            RealStructureTag::DirectSum => r.bundle.degree().rem_euclid(4) == 0,
            tag => {
                let component = match r.bundle.jac_component() {
                    Some(JacComponent::EmptyRealPart(c)) => *c,
                    _ => Triviality::Trivial,
                };
                spin_cell(r.curve.genus(), component, tag).spin
            }
        })
    } else {
        None
    };
    DeformationClass::new(q, spin)
}

/// The recipe with transforms reduced to at most one per component, in
/// component order.
pub fn reduced(r: &SurfaceRecipe) -> Result<SurfaceRecipe> {
    r.validate()?;
    let mut out = r.clone();
    out.transforms = r
        .real_point_counts()
        .iter()
        .zip(1..)
        .filter(|(n, _)| *n % 2 == 1)
        .map(|(_, i)| TransformSite::RealPoint(i))
        .collect();
    if r.tag == RealStructureTag::DirectSum {
        let obstruction = r.bundle.obstruction();
        let degree = out.transforms.len() as i64;
        out.bundle = if degree == 0 {
            BundleClass::trivial(&r.curve)
        } else {
            BundleClass::new(degree, Relation::Real, obstruction, None)?
        };
    }
    out.validate()?;
    Ok(out)
}

pub fn same_deformation_class(a: &SurfaceRecipe, b: &SurfaceRecipe) -> Result<bool> {
    Ok(normalize(a)? == normalize(b)?)
}

/// All deformation classes over a base of type `ct`, sorted by
/// `(t, k, spin)`.
pub fn enumerate_classes(ct: &CurveType) -> Result<Vec<DeformationClass>> {
    ct.require_irrational()?;
    let mu = ct.real_components();
    let mut out = Vec::new();
    if mu == 0 {
        for spin in [false, true] {
            out.push(DeformationClass::new(Quintuple::over(0, 0, ct), Some(spin))?);
        }
    } else {
        for t in 0..=mu {
            for k in 0..=mu - t {
                out.push(DeformationClass::new(Quintuple::over(t, k, ct), None)?);
            }
        }
    }
    out.sort_by_key(|c| (c.q.t, c.q.k, c.spin));
    Ok(out)
}

/// Topology of the real part of a rational ruled surface.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RationalRealPart {
    Torus,
    Sphere,
    Empty,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RationalClass {
    pub real_part: RationalRealPart,
    /// Whether the real structure covers a real structure on the base.
    pub fibered: bool,
    /// Spin flag of the quotient, recorded for the empty real parts.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub quotient_spin: Option<bool>,
}

/// The deformation classes of real structures on rational ruled surfaces.
pub fn rational_classes() -> [RationalClass; 4] {
    let class = |real_part, fibered, quotient_spin| RationalClass {
        real_part,
        fibered,
        quotient_spin,
    };
    [
        class(RationalRealPart::Torus, true, None),
        class(RationalRealPart::Sphere, false, None),
        class(RationalRealPart::Empty, true, Some(true)),
        class(RationalRealPart::Empty, true, Some(false)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(t: i64, k: i64, g: i64, mu: i64, eps: i64) -> Quintuple {
        Quintuple::new(t, k, g, mu, eps)
    }

    fn ct(g: i64, mu: i64, eps: i64) -> CurveType {
        CurveType::new(g, mu, eps).unwrap()
    }

    #[test]
    fn allowability() {
        assert!(q(2, 1, 3, 3, 0).is_allowable());
        assert_eq!(q(1, 1, 2, 1, 0).violation(), Some("t+k > mu"));
        assert_eq!(q(0, 0, 1, 0, 1).violation(), Some("invalid curve type"));
        assert_eq!(q(-1, 0, 1, 1, 0).violation(), Some("t < 0"));
        assert_eq!(q(0, 0, 0, 1, 1).violation(), Some("g < 1"));
    }

    #[test]
    fn realize_examples() {
        let r = realize(&q(1, 1, 1, 2, 1), None).unwrap();
        assert_eq!(*r.curve(), ct(1, 2, 1));
        assert_eq!(r.tag(), RealStructureTag::CPlus);
        assert_eq!(r.transforms(), [TransformSite::RealPoint(1)]);
        match r.bundle().jac_component() {
            Some(JacComponent::Partition(p)) => assert_eq!(p.side_len(), 2),
            other => panic!("{other:?}"),
        }
        assert_eq!(topological_type(&r).unwrap(), q(1, 1, 1, 2, 1));

        let r = realize(&q(0, 0, 2, 0, 0), Some(true)).unwrap();
        assert_eq!(r.bundle(), &BundleClass::trivial(&ct(2, 0, 0)));
        assert_eq!(r.tag(), RealStructureTag::CPlus);

        let r = realize(&q(0, 0, 3, 0, 0), Some(false)).unwrap();
        assert_eq!(
            r.bundle().jac_component(),
            Some(&JacComponent::EmptyRealPart(Triviality::Nontrivial))
        );
        assert_eq!(r.tag(), RealStructureTag::CPlus);

        assert!(matches!(realize(&q(0, 0, 2, 0, 0), None), Err(Error::SpinMismatch)));
        assert!(matches!(realize(&q(0, 0, 1, 1, 0), Some(true)), Err(Error::SpinMismatch)));
        assert!(matches!(realize(&q(2, 0, 1, 1, 0), None), Err(Error::NotAllowable(_))));
    }

    #[test]
    fn real_part_of_an_untransformed_model() {
        let p = Partition::canonical(3, vec![1, 2]).unwrap();
        let r = SurfaceRecipe::new(
            ct(2, 3, 1),
            BundleClass::anti_real(JacComponent::Partition(p)),
            RealStructureTag::CPlus,
            vec![],
        )
        .unwrap();
        assert_eq!(topological_type(&r).unwrap(), q(2, 0, 2, 3, 1));
    }

    #[test]
    fn transforms_flip_and_cancel() {
        let r = realize(&q(2, 0, 1, 2, 1), None).unwrap();
        let once = elementary_transform(&r, TransformSite::RealPoint(2)).unwrap();
        assert_eq!(topological_type(&once).unwrap(), q(1, 1, 1, 2, 1));
        let twice = elementary_transform(&once, TransformSite::RealPoint(2)).unwrap();
        assert_eq!(topological_type(&twice).unwrap(), q(2, 0, 1, 2, 1));
        let pair = elementary_transform(&r, TransformSite::ConjugatePair).unwrap();
        assert!(same_deformation_class(&r, &pair).unwrap());
        assert!(matches!(
            elementary_transform(&r, TransformSite::RealPoint(3)),
            Err(Error::InvalidRecipe(_))
        ));
    }

    #[test]
    fn points_without_real_fibers_are_rejected() {
        let r = realize(&q(1, 0, 1, 2, 1), None).unwrap();
        assert!(elementary_transform(&r, TransformSite::RealPoint(1)).is_ok());
        assert!(matches!(
            elementary_transform(&r, TransformSite::RealPoint(2)),
            Err(Error::InvalidRecipe(_))
        ));
    }

    #[test]
    fn spin_table() {
        let even = ct(2, 0, 0);
        let minus = SurfaceRecipe::new(
            even,
            BundleClass::trivial(&even),
            RealStructureTag::CMinus,
            vec![],
        )
        .unwrap();
        assert_eq!(normalize(&minus).unwrap().spin(), Some(false));

        let odd = ct(3, 0, 0);
        let nontrivial = BundleClass::anti_real(JacComponent::EmptyRealPart(Triviality::Nontrivial));
        let classes: Vec<_> = [RealStructureTag::CPlus, RealStructureTag::CMinus]
            .into_iter()
            .map(|tag| normalize(&SurfaceRecipe::new(odd, nontrivial.clone(), tag, vec![]).unwrap()).unwrap())
            .collect();
        assert_eq!(classes[0].spin(), Some(false));
        assert_eq!(classes[0], classes[1]);

        assert!(spin_cell(3, Triviality::Trivial, RealStructureTag::CMinus).theorem_derived);
        assert!(!spin_cell(2, Triviality::Trivial, RealStructureTag::CMinus).theorem_derived);
    }

    #[test]
    fn spin_mismatch_is_not_equivalent() {
        let a = realize(&q(0, 0, 2, 0, 0), Some(true)).unwrap();
        let b = realize(&q(0, 0, 2, 0, 0), Some(false)).unwrap();
        assert!(!same_deformation_class(&a, &b).unwrap());
    }

    #[test]
    fn direct_sum_without_real_points_reads_spin_from_the_degree() {
        let base = ct(1, 0, 0);
        let spin = |d| {
            let b = BundleClass::real(d, Some(crate::bundle::Sign::Plus));
            normalize(&SurfaceRecipe::new(base, b, RealStructureTag::DirectSum, vec![]).unwrap())
                .unwrap()
                .spin()
        };
        assert_eq!(spin(4), Some(true));
        assert_eq!(spin(2), Some(false));
        assert_eq!(spin(-2), Some(false));
        let odd = BundleClass::real(3, Some(crate::bundle::Sign::Plus));
        assert!(matches!(
            SurfaceRecipe::new(base, odd, RealStructureTag::DirectSum, vec![]),
            Err(Error::InvalidRecipe(_))
        ));
    }

    #[test]
    fn conjugate_pairs_are_rejected_without_real_points() {
        let r = realize(&q(0, 0, 3, 0, 0), Some(true)).unwrap();
        assert!(matches!(
            elementary_transform(&r, TransformSite::ConjugatePair),
            Err(Error::InvalidRecipe(_))
        ));
    }

    #[test]
    fn direct_sum_tracks_the_divisor() {
        let base = ct(3, 3, 0);
        let r = SurfaceRecipe::new(base, BundleClass::trivial(&base), RealStructureTag::DirectSum, vec![]).unwrap();
        assert_eq!(topological_type(&r).unwrap(), q(3, 0, 3, 3, 0));
        let r = elementary_transform(&r, TransformSite::RealPoint(2)).unwrap();
        assert_eq!(r.bundle().degree(), 1);
        assert_eq!(topological_type(&r).unwrap(), q(2, 1, 3, 3, 0));
        let bad = SurfaceRecipe::new(base, BundleClass::real(2, None), RealStructureTag::DirectSum, vec![
            TransformSite::RealPoint(1),
        ]);
        assert!(matches!(bad, Err(Error::InvalidRecipe(_))));
        let red = reduced(&elementary_transform(&r, TransformSite::ConjugatePair).unwrap()).unwrap();
        assert_eq!(red.transforms(), [TransformSite::RealPoint(2)]);
    }

    #[test]
    fn enumeration() {
        assert_eq!(enumerate_classes(&ct(1, 2, 1)).unwrap().len(), 6);
        assert_eq!(enumerate_classes(&ct(1, 1, 0)).unwrap().len(), 3);
        let two = enumerate_classes(&ct(2, 0, 0)).unwrap();
        assert_eq!(two.iter().map(|c| c.spin()).collect::<Vec<_>>(), [Some(false), Some(true)]);
        assert!(matches!(enumerate_classes(&ct(0, 1, 1)), Err(Error::RationalBase)));
    }

    #[test]
    fn rational_table() {
        let t = rational_classes();
        assert_eq!(t.iter().filter(|c| !c.fibered).count(), 1);
        assert_eq!(t[1].real_part, RationalRealPart::Sphere);
        assert_eq!(t[2].real_part, t[3].real_part);
        assert_ne!(t[2].quotient_spin, t[3].quotient_spin);
    }

    #[test]
    fn json_round_trip() {
        let r = realize(&q(1, 1, 1, 2, 1), None).unwrap();
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(serde_json::from_str::<SurfaceRecipe>(&json).unwrap(), r);
        let c = normalize(&realize(&q(0, 0, 2, 0, 0), Some(true)).unwrap()).unwrap();
        let json = serde_json::to_string(&c).unwrap();
        assert_eq!(json, r#"{"q":{"t":0,"k":0,"g":2,"mu":0,"eps":0},"spin":true}"#);
        assert_eq!(serde_json::from_str::<DeformationClass>(&json).unwrap(), c);
        assert!(serde_json::from_str::<DeformationClass>(r#"{"q":{"t":0,"k":0,"g":2,"mu":0,"eps":0}}"#).is_err());
    }
}
