//! Projective comparisons of chart maps modulo hypotheses.

use serde::{Deserialize, Serialize};

use super::chart::ChartMap;
use super::expr::{Poly, Signature, Word};
use super::rewrite::{Hypothesis, RuleSet};
use crate::error::Result;

const CELLS: [(usize, usize); 4] = [(0, 0), (0, 1), (1, 0), (1, 1)];

/// Whether `a` and `b` agree as projective maps once reduced by `rules`.
pub fn projectively_equal(a: &ChartMap, b: &ChartMap, rules: &RuleSet) -> Result<bool> {
    if a.base() != b.base() || a.is_antiholomorphic() != b.is_antiholomorphic() {
        return Ok(false);
    }
    for (i, j) in CELLS {
        if rules.is_zero(a.entry(i, j))? != rules.is_zero(b.entry(i, j))? {
            return Ok(false);
        }
    }
    for (n, &(i, j)) in CELLS.iter().enumerate() {
        for &(k, l) in &CELLS[n + 1..] {
            let cross = a.entry(i, j).mul(b.entry(k, l)).sub(&a.entry(k, l).mul(b.entry(i, j)));
            if !rules.is_zero(&cross)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether `m` is `e * Id` for a single scalar `e` after rewriting.
pub fn is_projective_identity(m: &ChartMap, hyps: &[Hypothesis]) -> Result<bool> {
    let rules = RuleSet::new(hyps)?;
    is_identity_under(m, &rules)
}

fn is_identity_under(m: &ChartMap, rules: &RuleSet) -> Result<bool> {
    if m.base() != Word::ID || m.is_antiholomorphic() {
        return Ok(false);
    }
    Ok(rules.is_zero(m.entry(0, 1))?
        && rules.is_zero(m.entry(1, 0))?
        && rules.is_zero(&m.entry(0, 0).sub(m.entry(1, 1)))?
        && !rules.is_zero(m.entry(0, 0))?)
}

/// Whether `c o c` is the identity up to a scalar.
pub fn verify_involution(c: &ChartMap, hyps: &[Hypothesis]) -> Result<bool> {
    is_projective_identity(&c.compose(c)?, hyps)
}

/// Whether `phi^-1 o cminus o phi` equals `cplus` up to a scalar.
pub fn verify_conjugation(
    phi: &ChartMap,
    cminus: &ChartMap,
    cplus: &ChartMap,
    hyps: &[Hypothesis],
) -> Result<bool> {
    let rules = RuleSet::new(hyps)?;
    projectively_equal(&cminus.conjugate_by(phi)?, cplus, &rules)
}

/// The scalar `d` in `c+ o diag(1, d)`, after dividing by the first
/// diagonal entry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DiagonalScalar {
    /// `d = 1`.
    One,
    /// `d` real and positive, written `delta^-2` with `delta` real.
    Positive,
    /// `d` real and negative, written `-delta^-2` with `delta` real.
    Negative,
}

impl DiagonalScalar {
    fn signature() -> Signature {
        Signature::new(["d", "delta"])
    }

    /// The relations defining `d` and `delta`, plus `f = conj(f o c_B)`.
    pub fn hypotheses(self) -> Vec<Hypothesis> {
        let sig = DiagonalScalar::signature();
        let mut texts = vec!["f = ~f.c"];
        match self {
            DiagonalScalar::One => {}
            DiagonalScalar::Positive => texts.extend(["~d = d", "~delta = delta", "d = delta^-2"]),
            DiagonalScalar::Negative => texts.extend(["~d = d", "~delta = delta", "d = -delta^-2"]),
        }
        texts
            .into_iter()
            .map(|t| Hypothesis::parse(t, &sig).expect("static hypothesis parses"))
            .collect()
    }

    /// `(c+ o diag(1, d), diag(1, delta), expected target)`.
    pub fn maps(self) -> (ChartMap, ChartMap, ChartMap) {
        let sig = DiagonalScalar::signature();
        let (d, delta) = match self {
            DiagonalScalar::One => ("1", "1"),
            DiagonalScalar::Positive | DiagonalScalar::Negative => ("d", "delta"),
        };
        let p = |s: &str| Poly::parse(s, &sig).expect("static entry parses");
        let cplus = c_f(false);
        let twisted = cplus
            .compose(&ChartMap::diagonal(Poly::one(), p(d)).expect("d is non-zero"))
            .expect("composition of invertible maps");
        let psi = ChartMap::diagonal(Poly::one(), p(delta)).expect("delta is non-zero");
        let target = c_f(self == DiagonalScalar::Negative);
        (twisted, psi, target)
    }
}

/// `c_{f}` or `c_{-f}`: `(x, (z1 : z0)) -> (c_B(x), (conj z0 : ±f(c_B x) conj z1))`.
pub fn c_f(negative: bool) -> ChartMap {
    let f = if negative { "-f.c" } else { "f.c" };
    ChartMap::parse(Word::CB, true, [["0", "1"], [f, "0"]], &Signature::default())
        .expect("static chart parses")
}

/// Whether `diag(1, delta)` conjugates `c+ o diag(1, d)` to the structure
/// selected by the sign of `d`, under `hyps`.
pub fn verify_step2_normalization(d: DiagonalScalar, hyps: &[Hypothesis]) -> Result<bool> {
    let (twisted, psi, target) = d.maps();
    verify_conjugation(&psi, &twisted, &target, hyps)
}
