//! The bundled chart-map identities and their negative controls.

use serde::{Deserialize, Serialize};

use super::chart::{ChartMap, ChartSpec};
use super::expr::{Poly, Signature, Word};
use super::rewrite::{Hypothesis, RuleSet};
use super::verify::{projectively_equal, verify_conjugation, verify_step2_normalization, DiagonalScalar};
use crate::checks::Check;
use crate::error::{Error, Result};

const IDENTITIES: &str = include_str!("../../fixtures/identities.json");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityFile {
    pub constants: Vec<String>,
    pub identities: Vec<Identity>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Identity {
    pub name: String,
    pub statement: String,
    pub hypotheses: Vec<String>,
    pub check: CheckSpec,
    pub negative: NegativeControl,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CheckSpec {
    /// `map o map` equals `target` (default: the identity) up to a scalar.
    Square {
        map: ChartSpec,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        target: Option<[[String; 2]; 2]>,
    },
    Conjugation {
        phi: ChartSpec,
        cminus: ChartSpec,
        cplus: ChartSpec,
    },
    Step2 {
        scalar: DiagonalScalar,
    },
}

/// How the negative control breaks the identity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NegativeControl {
    FlipHypothesis(usize),
    Target([[String; 2]; 2]),
}

impl IdentityFile {
    pub fn bundled() -> Result<Self> {
        serde_json::from_str(IDENTITIES).map_err(|e| Error::Fixture(e.to_string()))
    }

    pub fn signature(&self) -> Signature {
        Signature::new(self.constants.iter().map(String::as_str))
    }

    pub fn get(&self, name: &str) -> Result<&Identity> {
        self.identities
            .iter()
            .find(|i| i.name == name)
            .ok_or_else(|| Error::UnknownIdentity(name.to_string()))
    }

    /// Verifies one identity, or its negative control when `flip` is set.
    /// Returns whether the (possibly broken) identity holds.
    pub fn holds(&self, id: &Identity, flip: bool) -> Result<bool> {
        let sig = self.signature();
        let mut hyps = id
            .hypotheses
            .iter()
            .map(|h| Hypothesis::parse(h, &sig))
            .collect::<Result<Vec<_>>>()?;
        let mut target_override = None;
        if flip {
            match &id.negative {
                NegativeControl::FlipHypothesis(i) => {
                    let h = hyps.get_mut(*i).ok_or_else(|| {
                        Error::Fixture(format!("{}: no hypothesis #{i} to flip", id.name))
                    })?;
                    *h = h.flipped();
                }
                NegativeControl::Target(t) => target_override = Some(t.clone()),
            }
        }
        match &id.check {
            CheckSpec::Square { map, target } => {
                let m = map.build(&sig)?;
                let target = match target_override.as_ref().or(target.as_ref()) {
                    Some(t) => ChartSpec {
                        base: Word::ID,
                        antiholo: false,
                        matrix: t.clone(),
                    }
                    .build(&sig)?,
                    None => ChartMap::diagonal(Poly::one(), Poly::one())?,
                };
                projectively_equal(&m.compose(&m)?, &target, &RuleSet::new(&hyps)?)
            }
            CheckSpec::Conjugation { phi, cminus, cplus } => verify_conjugation(
                &phi.build(&sig)?,
                &cminus.build(&sig)?,
                &cplus.build(&sig)?,
                &hyps,
            ),
            CheckSpec::Step2 { scalar } => verify_step2_normalization(*scalar, &hyps),
        }
    }

    /// The identity check, or the negative control reported as a pass when
    /// the broken identity fails.
    pub fn check(&self, name: &str, flip: bool) -> Result<Check> {
        let id = self.get(name)?;
        let outcome = self.holds(id, flip);
        Ok(if flip {
            let label = format!("{name} (negative control)");
            match outcome {
                Ok(false) => Check::new(label, true, "broken identity is rejected"),
                Ok(true) => Check::new(label, false, "broken identity still verifies"),
                Err(e) => Check::new(label, false, e.to_string()),
            }
        } else {
            match outcome {
                Ok(true) => Check::new(name, true, id.statement.clone()),
                Ok(false) => Check::new(name, false, format!("does not verify: {}", id.statement)),
                Err(e) => Check::new(name, false, e.to_string()),
            }
        })
    }
}

/// Every bundled identity followed by its negative control.
pub fn run_all() -> Vec<Check> {
    let file = match IdentityFile::bundled() {
        Ok(f) => f,
        Err(e) => return vec![Check::new("identities fixture", false, e.to_string())],
    };
    let mut out = Vec::new();
    for id in &file.identities {
        for flip in [false, true] {
            out.push(
                file.check(&id.name, flip)
                    .unwrap_or_else(|e| Check::new(id.name.clone(), false, e.to_string())),
            );
        }
    }
    out
}
