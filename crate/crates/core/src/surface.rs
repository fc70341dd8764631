//! Real structures on decomposable ruled surfaces `X = P(L + L_0)` lifting
//! the real structure of the base.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bundle::{real_lift_exists, BundleClass, Relation};
use crate::curve::{CurveType, JacComponent};
use crate::error::{Error, Result};
use crate::symbolic::verify::c_f;
use crate::symbolic::{verify_conjugation, ChartMap, Hypothesis, Signature, Word};

/// One of the model real structures on `X`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RealStructureTag {
    /// `c_L + c_{L_0}`.
    DirectSum,
    /// `c_{f_D}`.
    #[serde(rename = "cplus")]
    CPlus,
    /// `c_{-f_D}`.
    #[serde(rename = "cminus")]
    CMinus,
}

impl fmt::Display for RealStructureTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RealStructureTag::DirectSum => "direct_sum",
            RealStructureTag::CPlus => "cplus",
            RealStructureTag::CMinus => "cminus",
        })
    }
}

/// Checks that `tag` is defined for `b` over `ct`.
pub fn check_tag(b: &BundleClass, ct: &CurveType, tag: RealStructureTag) -> Result<()> {
    let reject = |reason: &str| {
        Err(Error::InadmissibleTag {
            tag: tag.to_string(),
            reason: reason.to_string(),
        })
    };
    match tag {
        RealStructureTag::DirectSum if !real_lift_exists(b, ct)? => {
            reject("L carries no real structure lifting c_B")
        }
        RealStructureTag::CPlus | RealStructureTag::CMinus if !b.relation().is_anti_self_conjugate() => {
            reject("c_B* L = L* does not hold")
        }
        _ => Ok(()),
    }
}

/// Whether `c+` and `c-` are conjugate on `X`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Conjugacy {
    Conjugate,
    NotConjugate,
    Unknown,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ClassStatus {
    Proved,
    Unknown,
}

/// A set of tags forming one conjugacy class, or a set whose splitting is
/// undecided.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjugacyClass {
    pub class: Vec<RealStructureTag>,
    pub status: ClassStatus,
}

impl ConjugacyClass {
    fn proved(class: Vec<RealStructureTag>) -> Self {
        ConjugacyClass {
            class,
            status: ClassStatus::Proved,
        }
    }
}

/// Conjugacy classes of real structures on `X` lifting `c_B`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ConjugacyTable {
    pub classes: Vec<ConjugacyClass>,
}

impl ConjugacyTable {
    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// All tags in the table, in order.
    pub fn tags(&self) -> Vec<RealStructureTag> {
        self.classes.iter().flat_map(|c| c.class.iter().copied()).collect()
    }

    /// Whether `a` and `b` are proved to lie in the same class.
    pub fn proved_same_class(&self, a: RealStructureTag, b: RealStructureTag) -> bool {
        self.classes
            .iter()
            .any(|c| c.status == ClassStatus::Proved && c.class.contains(&a) && c.class.contains(&b))
    }
}

fn plus_minus(conj: Conjugacy) -> Vec<ConjugacyClass> {
    use RealStructureTag::{CMinus, CPlus};
    match conj {
        Conjugacy::Conjugate => vec![ConjugacyClass::proved(vec![CPlus, CMinus])],
        Conjugacy::NotConjugate => vec![
            ConjugacyClass::proved(vec![CPlus]),
            ConjugacyClass::proved(vec![CMinus]),
        ],
        Conjugacy::Unknown => vec![ConjugacyClass {
            class: vec![CPlus, CMinus],
            status: ClassStatus::Unknown,
        }],
    }
}

pub fn classify_real_structures(b: &BundleClass, ct: &CurveType) -> Result<ConjugacyTable> {
    classify_real_structures_with(b, ct, None)
}

/// The conjugacy table, using `witness` to settle `c+` against `c-`.
pub fn classify_real_structures_with(
    b: &BundleClass,
    ct: &CurveType,
    witness: Option<&ConjugationWitness>,
) -> Result<ConjugacyTable> {
    ct.require_irrational()?;
    let lift = real_lift_exists(b, ct)?;
    let classes = match b.relation() {
        Relation::Real if lift => vec![ConjugacyClass::proved(vec![RealStructureTag::DirectSum])],
        Relation::Both if lift => {
            let mut v = vec![ConjugacyClass::proved(vec![RealStructureTag::DirectSum])];
            v.extend(plus_minus(cplus_cminus_conjugate(b, ct, witness)?));
            v
        }
        Relation::AntiReal | Relation::Trivial | Relation::Both => {
            plus_minus(cplus_cminus_conjugate(b, ct, witness)?)
        }
        Relation::Real | Relation::None => Vec::new(),
    };
    Ok(ConjugacyTable { classes })
}

/// Numbers of tori and Klein bottles in a real part.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RealPart {
    pub tori: u32,
    pub klein: u32,
}

/// The real part of `(X, c+)` or `(X, c-)`: one torus over each real
/// component where `f_D` is non-negative (resp. non-positive).
pub fn real_part(b: &BundleClass, tag: RealStructureTag, ct: &CurveType) -> Result<RealPart> {
    b.check_for(ct)?;
    if tag == RealStructureTag::DirectSum {
        return Err(Error::InadmissibleTag {
            tag: tag.to_string(),
            reason: "the real part of c_L + c_L0 is computed from a recipe".into(),
        });
    }
    check_tag(b, ct, tag)?;
    let mu = ct.real_components();
    let plus = match b.jac_component() {
        Some(JacComponent::Partition(p)) => p.side_len(),
        _ => return Ok(RealPart { tori: 0, klein: 0 }),
    };
    let tori = if tag == RealStructureTag::CPlus { plus } else { mu - plus };
    Ok(RealPart { tori, klein: 0 })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WitnessCase {
    /// `Phi = diag(g o phi, 1)`.
    A,
    /// `Phi = [[0, 1], [h o phi, 0]]`.
    B,
}

/// Data claiming that an automorphism `phi` of `B` commuting with `c_B`
/// conjugates `c-` to `c+`: the case, the name of the function entering
/// `Phi` and the relations it satisfies. `f = conj(f o c_B)` is always
/// assumed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConjugationWitness {
    pub case: WitnessCase,
    pub function: String,
    pub hypotheses: Vec<String>,
}

impl ConjugationWitness {
    pub fn phi(&self) -> Result<ChartMap> {
        if self.function == "f" || !self.function.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
            return Err(Error::WitnessRejected(format!(
                "`{}` cannot name the function of Phi",
                self.function
            )));
        }
        let entry = format!("{}.p", self.function);
        let sig = Signature::default();
        match self.case {
            WitnessCase::A => ChartMap::parse(Word::PHI, false, [[&entry, "0"], ["0", "1"]], &sig),
            WitnessCase::B => ChartMap::parse(Word::PHI, false, [["0", "1"], [&entry, "0"]], &sig),
        }
    }

    pub fn all_hypotheses(&self) -> Result<Vec<Hypothesis>> {
        let sig = Signature::default();
        std::iter::once("f = ~f.c")
            .chain(self.hypotheses.iter().map(String::as_str))
            .map(|h| Hypothesis::parse(h, &sig))
            .collect()
    }
}

/// Checks symbolically that `Phi^-1 o c- o Phi = c+` under the witness
/// hypotheses.
pub fn validate_witness(w: &ConjugationWitness) -> Result<()> {
    let reject = |e: Error| Error::WitnessRejected(e.to_string());
    let phi = w.phi().map_err(reject)?;
    let hyps = w.all_hypotheses().map_err(reject)?;
    match verify_conjugation(&phi, &c_f(true), &c_f(false), &hyps) {
        Ok(true) => Ok(()),
        Ok(false) => Err(Error::WitnessRejected(
            "Phi^-1 o c- o Phi does not reduce to c+".into(),
        )),
        Err(e) => Err(reject(e)),
    }
}

pub fn cplus_cminus_conjugate(
    b: &BundleClass,
    ct: &CurveType,
    witness: Option<&ConjugationWitness>,
) -> Result<Conjugacy> {
    if !b.relation().is_anti_self_conjugate() {
        return Err(Error::NotAntiSelfConjugate);
    }
    b.check_for(ct)?;
    let never = b.relation() == Relation::Trivial || ct.real_components() % 2 == 1;
    match (never, witness) {
        (true, None) => Ok(Conjugacy::NotConjugate),
        (true, Some(_)) => Err(Error::WitnessRejected(
            "c+ and c- are never conjugate on B x CP^1 or when mu is odd".into(),
        )),
        (false, Some(w)) => validate_witness(w).map(|()| Conjugacy::Conjugate),
        (false, None) => Ok(Conjugacy::Unknown),
    }
}

/// An automorphism of `X` over the identity of `B`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AutDescriptor {
    /// Preserves the section `P(L_0)`.
    UpperTriangular,
    /// `phi_lambda`, exchanging the two sections when `L = L*`.
    Swap { lambda: String },
}

/// Whether `phi` lifts to an automorphism of `L + L_0`.
pub fn automorphism_lifts(b: &BundleClass, phi: &AutDescriptor) -> Result<bool> {
    if b.relation() == Relation::Trivial {
        return Ok(true);
    }
    match b.is_self_dual() {
        Some(false) => Ok(true),
        Some(true) => Ok(!matches!(phi, AutDescriptor::Swap { .. })),
        None => Err(Error::AmbiguousSelfDuality),
    }
}
