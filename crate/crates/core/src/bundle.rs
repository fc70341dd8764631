//! Line-bundle classes over a real curve and their behaviour under `c_B*`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::curve::{CurveType, JacComponent};
use crate::error::{Error, Result};

/// How `c_B*` acts on the class of `L`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    /// `c_B* L = L` and `L != L*`.
    Real,
    /// `c_B* L = L*` and `L != L*`.
    AntiReal,
    /// `c_B* L = L = L*` with `L` non-trivial.
    Both,
    /// `L = L_0`.
    Trivial,
    /// Neither relation holds.
    None,
}

impl Relation {
    pub const ALL: [Relation; 5] = [
        Relation::Real,
        Relation::AntiReal,
        Relation::Both,
        Relation::Trivial,
        Relation::None,
    ];

    /// `c_B* L = L*` holds.
    pub fn is_anti_self_conjugate(self) -> bool {
        matches!(self, Relation::AntiReal | Relation::Both | Relation::Trivial)
    }

    /// `c_B* L = L` holds.
    pub fn is_self_conjugate(self) -> bool {
        matches!(self, Relation::Real | Relation::Both | Relation::Trivial)
    }
}

/// A sign `+1` or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "i8", into = "i8")]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn to_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl std::ops::Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl TryFrom<i8> for Sign {
    type Error = String;

    fn try_from(v: i8) -> Result<Self, String> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            other => Err(format!("sign must be 1 or -1, got {other}")),
        }
    }
}

impl From<Sign> for i8 {
    fn from(s: Sign) -> i8 {
        match s {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

/// A line bundle `L` over `B`, described by its degree, its behaviour
/// under `c_B*` and, when relevant, the obstruction sign and the real
/// Jacobian component.
///
/// The obstruction is the constant `f_D * conj(f_D o c_B)` attached to a
/// divisor of a self-conjugate bundle. It is forced to `+1` when the real
/// part of the base is non-empty and must be supplied otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawBundle", into = "RawBundle")]
pub struct BundleClass {
    degree: i64,
    relation: Relation,
    obstruction: Option<Sign>,
    jac_component: Option<JacComponent>,
}

#[derive(Serialize, Deserialize)]
struct RawBundle {
    degree: i64,
    relation: Relation,
    obstruction: Option<Sign>,
    jac_component: Option<JacComponent>,
}

impl TryFrom<RawBundle> for BundleClass {
    type Error = Error;

    fn try_from(raw: RawBundle) -> Result<Self> {
        BundleClass::new(raw.degree, raw.relation, raw.obstruction, raw.jac_component)
    }
}

impl From<BundleClass> for RawBundle {
    fn from(b: BundleClass) -> Self {
        RawBundle {
            degree: b.degree,
            relation: b.relation,
            obstruction: b.obstruction,
            jac_component: b.jac_component,
        }
    }
}

impl BundleClass {
    /// Checks the invariants that do not depend on the base curve.
    pub fn new(
        degree: i64,
        relation: Relation,
        obstruction: Option<Sign>,
        jac_component: Option<JacComponent>,
    ) -> Result<Self> {
        if relation.is_anti_self_conjugate() && degree != 0 {
            return Err(Error::InconsistentBundle(format!(
                "relation {relation:?} forces degree 0, got {degree}"
            )));
        }
        let wants_component = degree == 0 && relation.is_anti_self_conjugate();
        if wants_component != jac_component.is_some() {
            return Err(Error::InconsistentBundle(if wants_component {
                "a degree-0 bundle with c_B*L = L* needs its Jacobian component".into()
            } else {
                "Jacobian component given for a bundle outside the real Jacobian".into()
            }));
        }
        if obstruction.is_some() && !relation.is_self_conjugate() {
            return Err(Error::InconsistentBundle(format!(
                "obstruction sign is meaningless for relation {relation:?}"
            )));
        }
        if relation == Relation::Trivial && obstruction == Some(Sign::Minus) {
            return Err(Error::InconsistentBundle(
                "the trivial bundle carries the real structure c_L0".into(),
            ));
        }
        Ok(BundleClass {
            degree,
            relation,
            obstruction,
            jac_component,
        })
    }

    pub fn trivial(ct: &CurveType) -> Self {
        BundleClass {
            degree: 0,
            relation: Relation::Trivial,
            obstruction: None,
            jac_component: Some(JacComponent::trivial_for(ct)),
        }
    }

    /// A degree-0 bundle with `c_B* L = L*`, `L != L*`, lying in `component`.
    pub fn anti_real(component: JacComponent) -> Self {
        BundleClass {
            degree: 0,
            relation: Relation::AntiReal,
            obstruction: None,
            jac_component: Some(component),
        }
    }

    /// A 2-torsion bundle with `c_B* L = L = L*`.
    pub fn both(component: JacComponent, obstruction: Option<Sign>) -> Self {
        BundleClass {
            degree: 0,
            relation: Relation::Both,
            obstruction,
            jac_component: Some(component),
        }
    }

    pub fn real(degree: i64, obstruction: Option<Sign>) -> Self {
        BundleClass {
            degree,
            relation: Relation::Real,
            obstruction,
            jac_component: None,
        }
    }

    pub fn unrelated(degree: i64) -> Self {
        BundleClass {
            degree,
            relation: Relation::None,
            obstruction: None,
            jac_component: None,
        }
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn relation(&self) -> Relation {
        self.relation
    }

    pub fn obstruction(&self) -> Option<Sign> {
        self.obstruction
    }

    pub fn jac_component(&self) -> Option<&JacComponent> {
        self.jac_component.as_ref()
    }

    /// Checks that this bundle can live over a curve of type `ct`.
    pub fn check_for(&self, ct: &CurveType) -> Result<()> {
        if let Some(component) = &self.jac_component {
            component.check_for(ct)?;
        }
        if self.relation == Relation::Trivial
            && self.jac_component.as_ref() != Some(&JacComponent::trivial_for(ct))
        {
            return Err(Error::InconsistentBundle(
                "the trivial bundle lies in the trivial Jacobian component".into(),
            ));
        }
        if ct.has_real_points() && self.obstruction == Some(Sign::Minus) {
            return Err(Error::InconsistentBundle(
                "the obstruction is +1 as soon as the real part of the base is non-empty".into(),
            ));
        }
        if !ct.has_real_points()
            && matches!(self.relation, Relation::Real | Relation::Both)
            && self.obstruction.is_none()
        {
            return Err(Error::InconsistentBundle(
                "over a base with empty real part the obstruction sign must be given".into(),
            ));
        }
        Ok(())
    }

    /// The obstruction sign in force over `ct`, if the bundle is
    /// self-conjugate.
    pub fn effective_obstruction(&self, ct: &CurveType) -> Option<Sign> {
        match self.relation {
            Relation::Trivial => Some(Sign::Plus),
            Relation::Real | Relation::Both if ct.has_real_points() => Some(Sign::Plus),
            Relation::Real | Relation::Both => self.obstruction,
            Relation::AntiReal | Relation::None => None,
        }
    }

    /// `Some(true)` when `L = L*`, `Some(false)` when `L != L*`, `None` when
    /// the class does not record it.
    pub fn is_self_dual(&self) -> Option<bool> {
        match self.relation {
            Relation::Both | Relation::Trivial => Some(true),
            Relation::Real | Relation::AntiReal => Some(false),
            Relation::None if self.degree != 0 => Some(false),
            Relation::None => None,
        }
    }
}

/// Whether `L` carries a real structure lifting `c_B`.
pub fn real_lift_exists(b: &BundleClass, ct: &CurveType) -> Result<bool> {
    b.check_for(ct)?;
    Ok(b.relation.is_self_conjugate() && b.effective_obstruction(ct) == Some(Sign::Plus))
}

/// Whether `P(L + L_0)` carries a real structure lifting `c_B`.
pub fn real_structure_exists_on_p(b: &BundleClass, ct: &CurveType) -> Result<bool> {
    Ok(real_lift_exists(b, ct)? || b.relation.is_anti_self_conjugate())
}

/// How `c_B` moves a point label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Orbit {
    Real,
    ConjugateOf(String),
}

/// The declared point labels of a divisor computation.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointTable {
    labels: BTreeMap<String, Orbit>,
}

impl PointTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn declare_real(&mut self, label: &str) -> Result<()> {
        self.insert(label, Orbit::Real)
    }

    /// Declares two labels exchanged by `c_B`.
    pub fn declare_pair(&mut self, a: &str, b: &str) -> Result<()> {
        if a == b {
            return Err(Error::DuplicateLabel(a.to_string()));
        }
        self.insert(a, Orbit::ConjugateOf(b.to_string()))?;
        self.insert(b, Orbit::ConjugateOf(a.to_string()))
    }

    fn insert(&mut self, label: &str, orbit: Orbit) -> Result<()> {
        if self.labels.contains_key(label) {
            return Err(Error::DuplicateLabel(label.to_string()));
        }
        self.labels.insert(label.to_string(), orbit);
        Ok(())
    }

    pub fn contains(&self, label: &str) -> bool {
        self.labels.contains_key(label)
    }

    /// Image of a label under `c_B`.
    pub fn conjugate<'a>(&'a self, label: &'a str) -> Result<&'a str> {
        match self.labels.get(label) {
            Some(Orbit::Real) => Ok(label),
            Some(Orbit::ConjugateOf(other)) => Ok(other),
            None => Err(Error::UnknownPoint(label.to_string())),
        }
    }

    pub fn is_real(&self, label: &str) -> Result<bool> {
        match self.labels.get(label) {
            Some(orbit) => Ok(*orbit == Orbit::Real),
            None => Err(Error::UnknownPoint(label.to_string())),
        }
    }
}

/// A formal divisor `sum n_i p_i` over abstract point labels.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct DivisorSymbol {
    terms: BTreeMap<String, i64>,
}

impl DivisorSymbol {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms<'a>(
        table: &PointTable,
        terms: impl IntoIterator<Item = (&'a str, i64)>,
    ) -> Result<Self> {
        let mut d = DivisorSymbol::zero();
        for (label, n) in terms {
            if !table.contains(label) {
                return Err(Error::UnknownPoint(label.to_string()));
            }
            d.add_term(label, n);
        }
        Ok(d)
    }

    fn add_term(&mut self, label: &str, n: i64) {
        let entry = self.terms.entry(label.to_string()).or_insert(0);
        *entry += n;
        if *entry == 0 {
            self.terms.remove(label);
        }
    }

    pub fn degree(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn coefficient(&self, label: &str) -> i64 {
        self.terms.get(label).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&str, i64)> {
        self.terms.iter().map(|(k, &v)| (k.as_str(), v))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `c_B(D)`: pair labels are swapped, real labels fixed.
    pub fn conjugate(&self, table: &PointTable) -> Result<Self> {
        let mut out = DivisorSymbol::zero();
        for (label, &n) in &self.terms {
            out.add_term(table.conjugate(label)?, n);
        }
        Ok(out)
    }

    pub fn add(&self, other: &DivisorSymbol) -> Self {
        let mut out = self.clone();
        for (label, &n) in &other.terms {
            out.add_term(label, n);
        }
        out
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut out = DivisorSymbol::zero();
        for (label, &n) in &self.terms {
            out.add_term(label, k * n);
        }
        out
    }
}

impl fmt::Display for DivisorSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (label, &n)) in self.terms.iter().enumerate() {
            let (sign, abs) = if n < 0 { ("-", -n) } else { ("+", n) };
            if i == 0 {
                if n < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if abs != 1 {
                write!(f, "{abs}")?;
            }
            f.write_str(label)?;
        }
        Ok(())
    }
}

/// `D + x`: the divisor of the bundle obtained after an elementary
/// transformation at the point of the `L`-section over `x`.
pub fn twist_by_point(d: &DivisorSymbol, table: &PointTable, x: &str) -> Result<DivisorSymbol> {
    if !table.contains(x) {
        return Err(Error::UnknownPoint(x.to_string()));
    }
    let mut out = d.clone();
    out.add_term(x, 1);
    Ok(out)
}
