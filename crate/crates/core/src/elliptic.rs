//! Exact model of the Gaussian elliptic curve `C / Z[i]` with the real
//! structure `z -> conj(z) + 1/2` and the translation `z -> z + 1/2`.
//!
//! Points are pairs of rationals reduced mod 1 (`z = x + i y`). Divisor
//! classes of degree 0 are identified with points through the group law
//! based at `0`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::checks::Check;
use crate::curve::Triviality;
use crate::error::{Error, Result};
use crate::surface::{validate_witness, ConjugationWitness};

const CORSPIN: &str = include_str!("../fixtures/corspin.json");

fn frac(x: Rational64) -> Rational64 {
    x - x.floor()
}

fn half() -> Rational64 {
    Rational64::new(1, 2)
}

/// A point `x + i y` of `C / Z[i]` with coordinates in `[0, 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawPoint", into = "RawPoint")]
pub struct TorusPoint {
    x: Rational64,
    y: Rational64,
}

#[derive(Serialize, Deserialize)]
struct RawPoint {
    x: String,
    y: String,
}

impl TryFrom<RawPoint> for TorusPoint {
    type Error = Error;

    fn try_from(raw: RawPoint) -> Result<Self> {
        let parse = |s: &str| {
            Rational64::from_str(s.trim()).map_err(|_| Error::Parse(format!("bad rational `{s}`")))
        };
        Ok(TorusPoint::new(parse(&raw.x)?, parse(&raw.y)?))
    }
}

impl From<TorusPoint> for RawPoint {
    fn from(p: TorusPoint) -> Self {
        RawPoint {
            x: p.x.to_string(),
            y: p.y.to_string(),
        }
    }
}

impl TorusPoint {
    pub fn new(x: Rational64, y: Rational64) -> Self {
        TorusPoint { x: frac(x), y: frac(y) }
    }

    /// `(xn/xd, yn/yd)`.
    pub fn from_ratios(xn: i64, xd: i64, yn: i64, yd: i64) -> Self {
        TorusPoint::new(Rational64::new(xn, xd), Rational64::new(yn, yd))
    }

    pub fn zero() -> Self {
        TorusPoint::new(Rational64::zero(), Rational64::zero())
    }

    pub fn x(&self) -> Rational64 {
        self.x
    }

    pub fn y(&self) -> Rational64 {
        self.y
    }

    pub fn add(&self, other: &TorusPoint) -> TorusPoint {
        TorusPoint::new(self.x + other.x, self.y + other.y)
    }

    pub fn scale(&self, n: i64) -> TorusPoint {
        let n = Rational64::from_integer(n);
        TorusPoint::new(self.x * n, self.y * n)
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    /// Complex conjugation `x + i y -> x - i y`.
    pub fn conjugate(&self) -> TorusPoint {
        TorusPoint::new(self.x, -self.y)
    }
}

impl fmt::Display for TorusPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// A finitely supported integer combination of torus points.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<(TorusPoint, i64)>", into = "Vec<(TorusPoint, i64)>")]
pub struct TorusDivisor {
    terms: BTreeMap<TorusPoint, i64>,
}

impl From<Vec<(TorusPoint, i64)>> for TorusDivisor {
    fn from(v: Vec<(TorusPoint, i64)>) -> Self {
        TorusDivisor::from_terms(v)
    }
}

impl From<TorusDivisor> for Vec<(TorusPoint, i64)> {
    fn from(d: TorusDivisor) -> Self {
        d.terms.into_iter().collect()
    }
}

impl TorusDivisor {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (TorusPoint, i64)>) -> Self {
        let mut d = TorusDivisor::zero();
        for (p, n) in terms {
            d.add_term(p, n);
        }
        d
    }

    fn add_term(&mut self, p: TorusPoint, n: i64) {
        let entry = self.terms.entry(p).or_insert(0);
        *entry += n;
        if *entry == 0 {
            self.terms.remove(&p);
        }
    }

    pub fn degree(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&TorusPoint, i64)> {
        self.terms.iter().map(|(p, &n)| (p, n))
    }

    pub fn add(&self, other: &TorusDivisor) -> TorusDivisor {
        let mut out = self.clone();
        for (&p, &n) in &other.terms {
            out.add_term(p, n);
        }
        out
    }

    pub fn scale(&self, k: i64) -> TorusDivisor {
        TorusDivisor::from_terms(self.terms.iter().map(|(&p, &n)| (p, k * n)))
    }

    pub fn sub(&self, other: &TorusDivisor) -> TorusDivisor {
        self.add(&other.scale(-1))
    }

    /// `sum n_i p_i` in the group law.
    pub fn sum(&self) -> TorusPoint {
        self.terms
            .iter()
            .fold(TorusPoint::zero(), |acc, (p, &n)| acc.add(&p.scale(n)))
    }

    /// Image under a torus map, point by point.
    pub fn map(&self, m: &AffineInvolution) -> TorusDivisor {
        TorusDivisor::from_terms(self.terms.iter().map(|(p, &n)| (m.apply(p), n)))
    }
}

/// `(x, y) -> (a x + t_x, b y + t_y)` with `a, b = ±1`, squaring to the
/// identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawInvolution", into = "RawInvolution")]
pub struct AffineInvolution {
    a: i8,
    b: i8,
    t: TorusPoint,
}

#[derive(Serialize, Deserialize)]
struct RawInvolution {
    a: i8,
    b: i8,
    t: TorusPoint,
}

impl TryFrom<RawInvolution> for AffineInvolution {
    type Error = Error;

    fn try_from(raw: RawInvolution) -> Result<Self> {
        AffineInvolution::new(raw.a, raw.b, raw.t)
    }
}

impl From<AffineInvolution> for RawInvolution {
    fn from(m: AffineInvolution) -> Self {
        RawInvolution { a: m.a, b: m.b, t: m.t }
    }
}

impl AffineInvolution {
    pub fn new(a: i8, b: i8, t: TorusPoint) -> Result<Self> {
        if !matches!(a, 1 | -1) || !matches!(b, 1 | -1) {
            return Err(Error::NotAnInvolution);
        }
        // squaring gives (x + (a+1) t_x, y + (b+1) t_y)
        let drift = TorusPoint::new(
            Rational64::from_integer(i64::from(a) + 1) * t.x,
            Rational64::from_integer(i64::from(b) + 1) * t.y,
        );
        if !drift.is_zero() {
            return Err(Error::NotAnInvolution);
        }
        Ok(AffineInvolution { a, b, t })
    }

    /// `c_B(z) = conj(z) + 1/2`.
    pub fn real_structure() -> Self {
        AffineInvolution::new(1, -1, TorusPoint::new(half(), Rational64::zero())).expect("involution")
    }

    /// `phi(z) = z + 1/2`.
    pub fn half_translation() -> Self {
        AffineInvolution::new(1, 1, TorusPoint::new(half(), Rational64::zero())).expect("involution")
    }

    pub fn is_antiholomorphic(&self) -> bool {
        self.a * self.b == -1
    }

    pub fn apply(&self, p: &TorusPoint) -> TorusPoint {
        TorusPoint::new(
            Rational64::from_integer(self.a.into()) * p.x + self.t.x,
            Rational64::from_integer(self.b.into()) * p.y + self.t.y,
        )
    }
}

/// Solutions of `s u + t = u (mod 1)` for one coordinate.
enum CoordFix {
    All,
    Values([Rational64; 2]),
    None,
}

fn coord_fix(sign: i8, t: Rational64) -> CoordFix {
    if sign == 1 {
        if t.is_zero() {
            CoordFix::All
        } else {
            CoordFix::None
        }
    } else {
        let u = t / 2;
        CoordFix::Values([frac(u), frac(u + half())])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Axis {
    /// A circle `x = value`.
    X,
    /// A circle `y = value`.
    Y,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FixedLocus {
    Empty,
    Circles(Vec<(Axis, String)>),
    Points(Vec<TorusPoint>),
    Whole,
}

impl FixedLocus {
    pub fn component_count(&self) -> Option<usize> {
        match self {
            FixedLocus::Empty => Some(0),
            FixedLocus::Circles(c) => Some(c.len()),
            FixedLocus::Points(p) => Some(p.len()),
            FixedLocus::Whole => None,
        }
    }
}

/// The fixed-point set of `m`.
pub fn real_points(m: &AffineInvolution) -> FixedLocus {
    match (coord_fix(m.a, m.t.x), coord_fix(m.b, m.t.y)) {
        (CoordFix::None, _) | (_, CoordFix::None) => FixedLocus::Empty,
        (CoordFix::All, CoordFix::All) => FixedLocus::Whole,
        (CoordFix::All, CoordFix::Values(ys)) => {
            FixedLocus::Circles(ys.iter().map(|y| (Axis::Y, y.to_string())).collect())
        }
        (CoordFix::Values(xs), CoordFix::All) => {
            FixedLocus::Circles(xs.iter().map(|x| (Axis::X, x.to_string())).collect())
        }
        (CoordFix::Values(xs), CoordFix::Values(ys)) => FixedLocus::Points(
            xs.iter()
                .flat_map(|&x| ys.iter().map(move |&y| TorusPoint::new(x, y)))
                .collect(),
        ),
    }
}

/// Abel's criterion: degree 0 and zero sum in the group law.
pub fn is_principal(d: &TorusDivisor) -> bool {
    d.degree() == 0 && d.sum().is_zero()
}

/// The point of `Jac(B) = C / Z[i]` attached to a degree-0 divisor.
pub fn jac_class(d: &TorusDivisor) -> Result<TorusPoint> {
    match d.degree() {
        0 => Ok(d.sum()),
        n => Err(Error::NonZeroDegree(n)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassComponent {
    Trivial,
    Nontrivial,
    NotFixed,
}

impl From<Triviality> for ClassComponent {
    fn from(t: Triviality) -> Self {
        match t {
            Triviality::Trivial => ClassComponent::Trivial,
            Triviality::Nontrivial => ClassComponent::Nontrivial,
        }
    }
}

/// Locates a degree-0 class in the real part of `(Jac(B), c_B*)`, where
/// `c_B*` acts as `s -> conj(s)`.
pub fn jac_component_of_class(s: &TorusPoint) -> ClassComponent {
    if s.conjugate() != *s {
        ClassComponent::NotFixed
    } else if s.y.is_zero() {
        ClassComponent::Trivial
    } else {
        ClassComponent::Nontrivial
    }
}

/// Genus of a double cover of a genus `g_base` curve branched at
/// `branch_count` points, by Riemann-Hurwitz.
pub fn double_cover_genus(g_base: i64, branch_count: i64) -> Result<i64> {
    if branch_count < 0 || branch_count % 2 != 0 {
        return Err(Error::OddBranchCount(branch_count));
    }
    let g = 2 * g_base - 1 + branch_count / 2;
    if g_base < 0 || g < 0 {
        return Err(Error::NoConnectedCover {
            g: g_base,
            branch: branch_count,
        });
    }
    Ok(g)
}

/// Which preimage of a base point a cover label denotes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Sheet {
    Ramified,
    Upper,
    Lower,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CoverPoint {
    pub base: TorusPoint,
    pub sheet: Sheet,
}

/// A double cover of the torus, recorded by its branch points and the
/// other points divisors may use.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Covering {
    branch: BTreeSet<TorusPoint>,
    declared: BTreeSet<TorusPoint>,
}

impl Covering {
    pub fn new(branch: BTreeSet<TorusPoint>, others: impl IntoIterator<Item = TorusPoint>) -> Result<Self> {
        if !branch.len().is_multiple_of(2) {
            return Err(Error::OddBranchCount(branch.len() as i64));
        }
        let mut declared = branch.clone();
        declared.extend(others);
        Ok(Covering { branch, declared })
    }

    /// `B_k`, branched over `(0, j/2k)` and `(1/2, j/2k)` for `j < 2k`.
    pub fn corspin(k: i64) -> Result<Self> {
        if k < 1 {
            return Err(Error::OddBranchCount(0));
        }
        let branch = (0..2 * k)
            .flat_map(|j| {
                [
                    TorusPoint::from_ratios(0, 1, j, 2 * k),
                    TorusPoint::from_ratios(1, 2, j, 2 * k),
                ]
            })
            .collect();
        let named = CorspinData::bundled()?.named_points();
        Covering::new(branch, named.into_values())
    }

    pub fn branch_points(&self) -> &BTreeSet<TorusPoint> {
        &self.branch
    }

    pub fn genus(&self) -> Result<i64> {
        double_cover_genus(1, self.branch.len() as i64)
    }

    /// `pi^* d`: a branch point `p` pulls back to `2 p'`, any other point to
    /// its two sheets.
    pub fn pullback_divisor(&self, d: &TorusDivisor) -> Result<BTreeMap<CoverPoint, i64>> {
        let mut out = BTreeMap::new();
        for (p, n) in d.terms() {
            if !self.declared.contains(p) {
                return Err(Error::UnknownPoint(p.to_string()));
            }
            if self.branch.contains(p) {
                out.insert(
                    CoverPoint {
                        base: *p,
                        sheet: Sheet::Ramified,
                    },
                    2 * n,
                );
            } else {
                for sheet in [Sheet::Upper, Sheet::Lower] {
                    out.insert(CoverPoint { base: *p, sheet }, n);
                }
            }
        }
        Ok(out)
    }
}

/// The data of the odd-genus example with empty real part, as shipped in
/// the fixtures.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorspinData {
    pub points: BTreeMap<String, TorusPoint>,
    pub c_b: AffineInvolution,
    pub phi: AffineInvolution,
    pub divisor: Vec<(String, i64)>,
    pub max_k: i64,
    pub witness: ConjugationWitness,
}

impl CorspinData {
    pub fn bundled() -> Result<Self> {
        serde_json::from_str(CORSPIN).map_err(|e| Error::Fixture(e.to_string()))
    }

    pub fn named_points(&self) -> BTreeMap<String, TorusPoint> {
        self.points.clone()
    }

    pub fn point(&self, name: &str) -> Result<TorusPoint> {
        self.points
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownPoint(name.to_string()))
    }

    /// `D = p1 - p0`.
    pub fn divisor(&self) -> Result<TorusDivisor> {
        let terms = self
            .divisor
            .iter()
            .map(|(name, n)| Ok((self.point(name)?, *n)))
            .collect::<Result<Vec<_>>>()?;
        Ok(TorusDivisor::from_terms(terms))
    }
}

/// The divisor-class facts behind the odd-genus example, the genus
/// bookkeeping for its covers and the symbolic witness.
pub fn corspin_suite() -> Vec<Check> {
    match corspin_checks() {
        Ok(v) => v,
        Err(e) => vec![Check::new("corspin fixture", false, e.to_string())],
    }
}

fn corspin_checks() -> Result<Vec<Check>> {
    let data = CorspinData::bundled()?;
    let (c_b, phi) = (data.c_b, data.phi);
    let d = data.divisor()?;
    let mut out = vec![
        Check::expect("real_points(c_B) is empty", real_points(&c_b), FixedLocus::Empty),
        Check::expect("D + c_B(D) is principal", is_principal(&d.add(&d.map(&c_b))), true),
        Check::expect("phi(D) - D is principal", is_principal(&d.map(&phi).sub(&d)), true),
        Check::expect("2D is principal", is_principal(&d.scale(2)), true),
        Check::expect("D is not principal", is_principal(&d), false),
        Check::expect(
            "class of D lies in the nontrivial component",
            jac_component_of_class(&jac_class(&d)?),
            ClassComponent::Nontrivial,
        ),
    ];
    let genera: Vec<i64> = (0..=data.max_k)
        .map(|k| double_cover_genus(1, 4 * k))
        .collect::<Result<_>>()?;
    let expected: Vec<i64> = (0..=data.max_k).map(|k| 2 * k + 1).collect();
    out.push(Check::expect(
        format!("double cover genus g(B_k) = 2k+1 for k <= {}", data.max_k),
        genera,
        expected,
    ));
    let (p0, p1) = (data.point("p0")?, data.point("p1")?);
    let mut pullbacks_ok = true;
    for k in 1..=data.max_k {
        let cover = Covering::corspin(k)?;
        let want: BTreeMap<CoverPoint, i64> = [(p1, 2), (p0, -2)]
            .into_iter()
            .map(|(base, n)| {
                (
                    CoverPoint {
                        base,
                        sheet: Sheet::Ramified,
                    },
                    n,
                )
            })
            .collect();
        pullbacks_ok &= cover.pullback_divisor(&d)? == want && cover.genus()? == 2 * k + 1;
    }
    out.push(Check::new(
        "pullback of D to B_k is 2p1' - 2p0'",
        pullbacks_ok,
        format!("k = 1..={}", data.max_k),
    ));
    out.push(Check::new(
        "phi commutes with c_B on the 24x24 grid",
        commute_on_grid(&c_b, &phi, 24),
        "exhaustive on (i/24, j/24)",
    ));
    let jac_locus = real_points(&AffineInvolution::new(1, -1, TorusPoint::zero())?);
    out.push(Check::expect(
        "real part of (Jac(B), c_B*) has two components",
        jac_locus.component_count(),
        Some(2),
    ));
    out.push(match validate_witness(&data.witness) {
        Ok(()) => Check::new("case a holds for the corspin functions", true, "witness verifies"),
        Err(e) => Check::new("case a holds for the corspin functions", false, e.to_string()),
    });
    Ok(out)
}

/// Whether `a o b = b o a` on every point `(i/n, j/n)`.
pub fn commute_on_grid(a: &AffineInvolution, b: &AffineInvolution, n: i64) -> bool {
    (0..n).all(|i| {
        (0..n).all(|j| {
            let p = TorusPoint::from_ratios(i, n, j, n);
            a.apply(&b.apply(&p)) == b.apply(&a.apply(&p))
        })
    })
}
