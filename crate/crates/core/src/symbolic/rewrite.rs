//! Multiplicative hypotheses and their normal forms.
//!
//! A hypothesis `lhs = rhs` is a relation `m = ±1` between atoms. Each
//! relation is closed under the eight maps `e -> e o w` and `e -> conj(e o w)`
//! and then oriented: the largest atom `a` (in the [`Atom`] order) becomes
//! the head and the relation is read as `a^e -> ±rest`. Heads are pairwise
//! distinct and every right-hand side only contains atoms smaller than its
//! head, so rewriting terminates and irreducible monomials are unique
//! representatives modulo the hypotheses.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use super::expr::{Atom, Expr, Monomial, Poly, Signature, Word};
use crate::error::{Error, Result};

/// Maximum number of rule applications per normalization.
pub const STEP_BUDGET: usize = 10_000;

/// An equation `lhs = rhs` assumed to hold in the function field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypothesis {
    pub lhs: Expr,
    pub rhs: Expr,
}

impl Hypothesis {
    pub fn new(lhs: Expr, rhs: Expr) -> Self {
        Hypothesis { lhs, rhs }
    }

    /// Parses `lhs = rhs`.
    pub fn parse(s: &str, sig: &Signature) -> Result<Self> {
        let (l, r) = s
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("hypothesis `{s}` has no `=`")))?;
        Ok(Hypothesis::new(Expr::parse(l, sig)?, Expr::parse(r, sig)?))
    }

    /// The same equation with the sign of the right-hand side reversed.
    pub fn flipped(&self) -> Self {
        Hypothesis::new(self.lhs.clone(), self.rhs.neg())
    }

    /// `lhs / rhs`, which the hypothesis sets to 1.
    fn relation(&self) -> Expr {
        self.lhs.mul(&self.rhs.inverse())
    }
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.lhs, self.rhs)
    }
}

/// `head^exp -> (-1)^negative * rest`, with `exp > 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rule {
    head: Atom,
    exp: i64,
    negative: bool,
    rest: Monomial,
}

impl Rule {
    pub fn head(&self) -> &Atom {
        &self.head
    }

    fn rhs(&self) -> Expr {
        Expr {
            negative: self.negative,
            mon: self.rest.clone(),
        }
    }

    /// The relation `head^exp * rest^-1 = sign` this rule encodes.
    fn as_relation(&self) -> Expr {
        let lhs = Expr {
            negative: false,
            mon: Monomial::one().with(self.head().clone(), self.exp),
        };
        lhs.mul(&self.rhs().inverse())
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.head())?;
        if self.exp != 1 {
            write!(f, "^{}", self.exp)?;
        }
        write!(f, " -> {}", self.rhs())
    }
}

/// An oriented, closed rule set built from hypotheses.
#[derive(Debug, Clone, Default)]
pub struct RuleSet {
    rules: BTreeMap<Atom, Rule>,
    budget: usize,
}

impl RuleSet {
    pub fn empty() -> Self {
        RuleSet {
            rules: BTreeMap::new(),
            budget: STEP_BUDGET,
        }
    }

    pub fn new(hyps: &[Hypothesis]) -> Result<Self> {
        Self::with_budget(hyps, STEP_BUDGET)
    }

    pub fn with_budget(hyps: &[Hypothesis], budget: usize) -> Result<Self> {
        let mut set = RuleSet {
            rules: BTreeMap::new(),
            budget,
        };
        let mut queue: VecDeque<Expr> = orbit_closure(hyps).into();
        let mut steps = 0;
        while let Some(rel) = queue.pop_front() {
            let reduced = set.reduce_counted(&rel, &mut steps, |_| 0)?;
            let Some((head, e)) = reduced.mon.max_atom() else {
                if reduced.negative {
                    return Err(Error::InconsistentHypotheses);
                }
                continue;
            };
            let head = head.clone();
            let oriented = if e < 0 { reduced.inverse() } else { reduced };
            let exp = oriented.mon.exponent(&head);
            let mut rest = oriented.mon.clone();
            rest.set_exponent(&head, 0);
            let rule = Rule {
                head: head.clone(),
                exp,
                negative: oriented.negative,
                rest: rest.inverse(),
            };
            if let Some(old) = set.rules.insert(head, rule) {
                queue.push_back(old.as_relation());
            }
        }
        Ok(set)
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    pub fn rules(&self) -> impl Iterator<Item = &Rule> {
        self.rules.values()
    }

    /// Normal form of an expression.
    pub fn reduce(&self, e: &Expr) -> Result<Expr> {
        self.reduce_counted(e, &mut 0, |_| 0)
    }

    /// Normal form, letting `pick` choose which applicable rule fires at
    /// each step (it receives the number of candidates).
    pub fn reduce_with(&self, e: &Expr, pick: impl FnMut(usize) -> usize) -> Result<Expr> {
        self.reduce_counted(e, &mut 0, pick)
    }

    fn reduce_counted(
        &self,
        e: &Expr,
        steps: &mut usize,
        mut pick: impl FnMut(usize) -> usize,
    ) -> Result<Expr> {
        let mut cur = e.clone();
        loop {
            let candidates: Vec<(&Rule, i64)> = cur
                .mon
                .iter()
                .filter_map(|(a, n)| {
                    let rule = self.rules.get(a)?;
                    (n < 0 || n >= rule.exp).then_some((rule, n))
                })
                .collect();
            if candidates.is_empty() {
                return Ok(cur);
            }
            *steps += 1;
            if *steps > self.budget {
                return Err(Error::NonTermination(self.budget));
            }
            let (rule, n) = candidates[pick(candidates.len()) % candidates.len()];
            let q = n.div_euclid(rule.exp);
            cur.mon.set_exponent(rule.head(), n.rem_euclid(rule.exp));
            cur = cur.mul(&rule.rhs().pow(q));
        }
    }

    /// Normal form of a polynomial, with like terms collected.
    pub fn reduce_poly(&self, p: &Poly) -> Result<Poly> {
        let mut out = Poly::zero();
        for (m, c) in p.terms() {
            let e = self.reduce(&Expr {
                negative: false,
                mon: m.clone(),
            })?;
            out.add_term(e.mon, if e.negative { -c } else { c });
        }
        Ok(out)
    }

    pub fn equal(&self, a: &Expr, b: &Expr) -> Result<bool> {
        Ok(self.reduce(&a.mul(&b.inverse()))?.is_one())
    }

    pub fn is_zero(&self, p: &Poly) -> Result<bool> {
        Ok(self.reduce_poly(p)?.is_zero())
    }
}

/// All images `conj^s(r o w)` of the hypothesis relations, deduplicated up
/// to inversion.
fn orbit_closure(hyps: &[Hypothesis]) -> Vec<Expr> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for h in hyps {
        let r = h.relation();
        for w in Word::ALL {
            for conj in [false, true] {
                let mut img = r.precompose(w);
                if conj {
                    img = img.conjugate();
                }
                let inv = img.inverse();
                let key = if img <= inv { img.clone() } else { inv };
                if seen.insert(key) {
                    out.push(img);
                }
            }
        }
    }
    out
}
