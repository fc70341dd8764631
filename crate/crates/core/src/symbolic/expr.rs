//! Signed monomials and integer polynomials over a formal function field.
//!
//! Atoms are generators precomposed with an element of the Klein group
//! `<c_B, phi>` and possibly conjugated. Scalar constants ignore
//! precomposition.
//!
//! Text syntax, shared by parsing and display:
//!
//! ```text
//! -f.cp^2 * ~g.p * lambda^-1
//! ```
//!
//! `~` conjugates, `.c`, `.p`, `.cp` precompose with `c_B`, `phi` and
//! `c_B o phi`. Polynomials join such terms with `+` and `-` and may carry
//! an integer coefficient (`2 * f`).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An element of `<c_B, phi>`, both generators of order 2 and commuting.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Word {
    pub cb: bool,
    pub phi: bool,
}

impl Word {
    pub const ID: Word = Word { cb: false, phi: false };
    pub const CB: Word = Word { cb: true, phi: false };
    pub const PHI: Word = Word { cb: false, phi: true };
    pub const CB_PHI: Word = Word { cb: true, phi: true };
    pub const ALL: [Word; 4] = [Word::ID, Word::CB, Word::PHI, Word::CB_PHI];

    pub fn then(self, other: Word) -> Word {
        Word {
            cb: self.cb ^ other.cb,
            phi: self.phi ^ other.phi,
        }
    }

    pub fn inverse(self) -> Word {
        self
    }

    pub fn is_identity(self) -> bool {
        self == Word::ID
    }

    fn suffix(self) -> &'static str {
        match (self.cb, self.phi) {
            (false, false) => "",
            (true, false) => ".c",
            (false, true) => ".p",
            (true, true) => ".cp",
        }
    }

    fn name(self) -> &'static str {
        match (self.cb, self.phi) {
            (false, false) => "id",
            (true, false) => "c",
            (false, true) => "p",
            (true, true) => "cp",
        }
    }

    pub fn parse(s: &str) -> Result<Word> {
        match s {
            "id" | "" => Ok(Word::ID),
            "c" => Ok(Word::CB),
            "p" => Ok(Word::PHI),
            "cp" | "pc" => Ok(Word::CB_PHI),
            other => Err(Error::Parse(format!("unknown group word `{other}`"))),
        }
    }
}

impl TryFrom<String> for Word {
    type Error = Error;

    fn try_from(s: String) -> Result<Word> {
        Word::parse(&s)
    }
}

impl From<Word> for String {
    fn from(w: Word) -> String {
        w.name().to_string()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Names that denote scalar constants rather than functions on `B`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Signature {
    pub constants: BTreeSet<String>,
}

impl Signature {
    pub fn new<'a>(constants: impl IntoIterator<Item = &'a str>) -> Self {
        Signature {
            constants: constants.into_iter().map(str::to_string).collect(),
        }
    }

    pub fn is_constant(&self, name: &str) -> bool {
        self.constants.contains(name)
    }
}

/// A generator, precomposed with `word` and conjugated when `conj` is set.
///
/// The derived order compares `conj` first, then `word`, so rewriting
/// eliminates conjugated and precomposed atoms before plain ones.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom {
    pub conj: bool,
    pub word: Word,
    pub name: String,
    pub constant: bool,
}

impl Atom {
    pub fn function(name: &str, word: Word) -> Atom {
        Atom {
            conj: false,
            word,
            name: name.to_string(),
            constant: false,
        }
    }

    pub fn constant(name: &str) -> Atom {
        Atom {
            conj: false,
            word: Word::ID,
            name: name.to_string(),
            constant: true,
        }
    }

    pub fn conjugate(&self) -> Atom {
        Atom {
            conj: !self.conj,
            ..self.clone()
        }
    }

    /// `self o w`.
    pub fn precompose(&self, w: Word) -> Atom {
        if self.constant {
            return self.clone();
        }
        Atom {
            word: self.word.then(w),
            ..self.clone()
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.conj {
            f.write_str("~")?;
        }
        write!(f, "{}{}", self.name, self.word.suffix())
    }
}

/// A Laurent monomial: atoms with non-zero integer exponents.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(BTreeMap<Atom, i64>);

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn atom(a: Atom) -> Self {
        Monomial::one().with(a, 1)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, a: &Atom) -> i64 {
        self.0.get(a).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Atom, i64)> {
        self.0.iter().map(|(a, &e)| (a, e))
    }

    pub fn max_atom(&self) -> Option<(&Atom, i64)> {
        self.0.iter().next_back().map(|(a, &e)| (a, e))
    }

    /// Multiplies in `a^e`.
    pub fn with(mut self, a: Atom, e: i64) -> Self {
        self.mul_atom(a, e);
        self
    }

    pub(crate) fn mul_atom(&mut self, a: Atom, e: i64) {
        if e == 0 {
            return;
        }
        let entry = self.0.entry(a).or_insert(0);
        *entry += e;
        if *entry == 0 {
            self.0.retain(|_, v| *v != 0);
        }
    }

    pub(crate) fn set_exponent(&mut self, a: &Atom, e: i64) {
        if e == 0 {
            self.0.remove(a);
        } else {
            self.0.insert(a.clone(), e);
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = self.clone();
        for (a, &e) in &other.0 {
            out.mul_atom(a.clone(), e);
        }
        out
    }

    pub fn pow(&self, k: i64) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|(a, &e)| (a.clone(), e * k)).collect())
    }

    pub fn inverse(&self) -> Monomial {
        self.pow(-1)
    }

    pub fn conjugate(&self) -> Monomial {
        Monomial(self.0.iter().map(|(a, &e)| (a.conjugate(), e)).collect())
    }

    pub fn precompose(&self, w: Word) -> Monomial {
        let mut out = Monomial::one();
        for (a, &e) in &self.0 {
            out.mul_atom(a.precompose(w), e);
        }
        out
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, (a, &e)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" * ")?;
            }
            write!(f, "{a}")?;
            if e != 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// `±1` times a monomial. Never zero.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Expr {
    pub negative: bool,
    pub mon: Monomial,
}

impl Expr {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn minus_one() -> Self {
        Expr {
            negative: true,
            mon: Monomial::one(),
        }
    }

    pub fn atom(a: Atom) -> Self {
        Expr {
            negative: false,
            mon: Monomial::atom(a),
        }
    }

    pub fn function(name: &str) -> Self {
        Expr::atom(Atom::function(name, Word::ID))
    }

    pub fn constant(name: &str) -> Self {
        Expr::atom(Atom::constant(name))
    }

    pub fn parse(s: &str, sig: &Signature) -> Result<Expr> {
        let mut p = Parser::new(s, sig);
        let e = p.expr()?;
        p.finish()?;
        Ok(e)
    }

    pub fn is_one(&self) -> bool {
        !self.negative && self.mon.is_one()
    }

    pub fn mul(&self, other: &Expr) -> Expr {
        Expr {
            negative: self.negative ^ other.negative,
            mon: self.mon.mul(&other.mon),
        }
    }

    pub fn pow(&self, k: i64) -> Expr {
        Expr {
            negative: self.negative && k.rem_euclid(2) == 1,
            mon: self.mon.pow(k),
        }
    }

    pub fn inverse(&self) -> Expr {
        self.pow(-1)
    }

    pub fn neg(&self) -> Expr {
        Expr {
            negative: !self.negative,
            mon: self.mon.clone(),
        }
    }

    pub fn conjugate(&self) -> Expr {
        Expr {
            negative: self.negative,
            mon: self.mon.conjugate(),
        }
    }

    pub fn precompose(&self, w: Word) -> Expr {
        Expr {
            negative: self.negative,
            mon: self.mon.precompose(w),
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negative {
            f.write_str("-")?;
        }
        write!(f, "{}", self.mon)
    }
}

/// An integer linear combination of monomials. The zero polynomial is the
/// empty map.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Poly(BTreeMap<Monomial, i64>);

impl Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Poly::from(Expr::one())
    }

    pub fn parse(s: &str, sig: &Signature) -> Result<Poly> {
        let mut p = Parser::new(s, sig);
        let poly = p.poly()?;
        p.finish()?;
        Ok(poly)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, i64)> {
        self.0.iter().map(|(m, &c)| (m, c))
    }

    /// The single signed monomial, if this polynomial is one.
    pub fn as_expr(&self) -> Option<Expr> {
        match self.0.iter().collect::<Vec<_>>().as_slice() {
            [(m, &c)] if c == 1 || c == -1 => Some(Expr {
                negative: c == -1,
                mon: (*m).clone(),
            }),
            _ => None,
        }
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.0.entry(m).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.0.retain(|_, v| *v != 0);
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, &c) in &other.0 {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn neg(&self) -> Poly {
        Poly(self.0.iter().map(|(m, &c)| (m.clone(), -c)).collect())
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (m1, &c1) in &self.0 {
            for (m2, &c2) in &other.0 {
                out.add_term(m1.mul(m2), c1 * c2);
            }
        }
        out
    }

    pub fn conjugate(&self) -> Poly {
        let mut out = Poly::zero();
        for (m, &c) in &self.0 {
            out.add_term(m.conjugate(), c);
        }
        out
    }

    pub fn precompose(&self, w: Word) -> Poly {
        let mut out = Poly::zero();
        for (m, &c) in &self.0 {
            out.add_term(m.precompose(w), c);
        }
        out
    }
}

impl From<Expr> for Poly {
    fn from(e: Expr) -> Poly {
        let mut p = Poly::zero();
        p.add_term(e.mon, if e.negative { -1 } else { 1 });
        p
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, &c)) in self.0.iter().enumerate() {
            match (i, c < 0) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            match (abs, m.is_one()) {
                (_, true) => write!(f, "{abs}")?,
                (1, false) => write!(f, "{m}")?,
                (_, false) => write!(f, "{abs} * {m}")?,
            }
        }
        Ok(())
    }
}

struct Parser<'a> {
    src: &'a str,
    chars: Vec<char>,
    pos: usize,
    sig: &'a Signature,
}

impl<'a> Parser<'a> {
    fn new(src: &'a str, sig: &'a Signature) -> Self {
        Parser {
            src,
            chars: src.chars().collect(),
            pos: 0,
            sig,
        }
    }

    fn err(&self, msg: &str) -> Error {
        Error::Parse(format!("{msg} at offset {} in `{}`", self.pos, self.src))
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn finish(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(self.err(&format!("unexpected `{c}`"))),
        }
    }

    fn integer(&mut self) -> Result<i64> {
        self.skip_ws();
        let start = self.pos;
        if self.chars.get(self.pos) == Some(&'-') {
            self.pos += 1;
        }
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        text.parse().map_err(|_| self.err("expected an integer"))
    }

    fn ident(&mut self) -> Result<String> {
        self.skip_ws();
        let start = self.pos;
        while self
            .chars
            .get(self.pos)
            .is_some_and(|&c| c.is_ascii_alphanumeric() || c == '_')
        {
            self.pos += 1;
        }
        if start == self.pos || self.chars[start].is_ascii_digit() {
            return Err(self.err("expected a name"));
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    fn factor(&mut self) -> Result<Monomial> {
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            return match self.integer()? {
                1 => Ok(Monomial::one()),
                _ => Err(self.err("only the literal 1 may appear as a factor")),
            };
        }
        let conj = self.eat('~');
        let name = self.ident()?;
        let word = if self.chars.get(self.pos) == Some(&'.') {
            self.pos += 1;
            let w = self.ident()?;
            Word::parse(&w).map_err(|_| self.err(&format!("unknown group word `{w}`")))?
        } else {
            Word::ID
        };
        let constant = self.sig.is_constant(&name);
        if constant && !word.is_identity() {
            return Err(self.err(&format!("constant `{name}` takes no group word")));
        }
        let exp = if self.eat('^') { self.integer()? } else { 1 };
        let atom = Atom {
            conj,
            word,
            name,
            constant,
        };
        Ok(Monomial::one().with(atom, exp))
    }

    fn monomial(&mut self) -> Result<Monomial> {
        let mut m = self.factor()?;
        while self.eat('*') {
            m = m.mul(&self.factor()?);
        }
        Ok(m)
    }

    fn expr(&mut self) -> Result<Expr> {
        let negative = self.eat('-');
        Ok(Expr {
            negative,
            mon: self.monomial()?,
        })
    }

    fn term(&mut self) -> Result<(Monomial, i64)> {
        if self.peek().is_some_and(|c| c.is_ascii_digit()) {
            let c = self.integer()?;
            if self.eat('*') {
                return Ok((self.monomial()?, c));
            }
            return Ok((Monomial::one(), c));
        }
        Ok((self.monomial()?, 1))
    }

    fn poly(&mut self) -> Result<Poly> {
        let mut out = Poly::zero();
        let mut negative = self.eat('-');
        loop {
            let (m, c) = self.term()?;
            out.add_term(m, if negative { -c } else { c });
            if self.eat('+') {
                negative = false;
            } else if self.eat('-') {
                negative = true;
            } else {
                return Ok(out);
            }
        }
    }
}
