//! Fibered maps of `U_0 x CP^1` given in one trivialization.
//!
//! A [`ChartMap`] is `(x, (z1 : z0)) -> (w(x), M(x) * k(z1, z0))` where `w`
//! is a group word, `k` is complex conjugation when the map is
//! antiholomorphic, and `M` is a 2x2 matrix of polynomials acting on the
//! column `(z1, z0)` up to a scalar.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::expr::{Poly, Signature, Word};
use crate::error::{Error, Result};

pub type Matrix = [[Poly; 2]; 2];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChartMap {
    base: Word,
    antiholo: bool,
    matrix: Matrix,
}

fn det(m: &Matrix) -> Poly {
    m[0][0].mul(&m[1][1]).sub(&m[0][1].mul(&m[1][0]))
}

fn map_entries(m: &Matrix, f: impl Fn(&Poly) -> Poly) -> Matrix {
    [
        [f(&m[0][0]), f(&m[0][1])],
        [f(&m[1][0]), f(&m[1][1])],
    ]
}

fn matmul(a: &Matrix, b: &Matrix) -> Matrix {
    let entry = |i: usize, j: usize| a[i][0].mul(&b[0][j]).add(&a[i][1].mul(&b[1][j]));
    [[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]]
}

impl ChartMap {
    /// Rejects matrices whose determinant is the zero polynomial.
    pub fn new(base: Word, antiholo: bool, matrix: Matrix) -> Result<Self> {
        if det(&matrix).is_zero() {
            return Err(Error::DegenerateMap(format!(
                "determinant of {} vanishes",
                show_matrix(&matrix)
            )));
        }
        Ok(ChartMap {
            base,
            antiholo,
            matrix,
        })
    }

    pub fn identity() -> Self {
        ChartMap::diagonal(Poly::one(), Poly::one()).expect("identity is invertible")
    }

    /// Holomorphic `diag(a, b)` over the identity of `B`.
    pub fn diagonal(a: Poly, b: Poly) -> Result<Self> {
        ChartMap::new(Word::ID, false, [[a, Poly::zero()], [Poly::zero(), b]])
    }

    pub fn parse(base: Word, antiholo: bool, entries: [[&str; 2]; 2], sig: &Signature) -> Result<Self> {
        let p = |s: &str| Poly::parse(s, sig);
        ChartMap::new(
            base,
            antiholo,
            [
                [p(entries[0][0])?, p(entries[0][1])?],
                [p(entries[1][0])?, p(entries[1][1])?],
            ],
        )
    }

    pub fn base(&self) -> Word {
        self.base
    }

    pub fn is_antiholomorphic(&self) -> bool {
        self.antiholo
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn entry(&self, i: usize, j: usize) -> &Poly {
        &self.matrix[i][j]
    }

    /// `self o other`.
    pub fn compose(&self, other: &ChartMap) -> Result<ChartMap> {
        let left = map_entries(&self.matrix, |p| p.precompose(other.base));
        let right = if self.antiholo {
            map_entries(&other.matrix, Poly::conjugate)
        } else {
            other.matrix.clone()
        };
        let matrix = matmul(&left, &right);
        if matrix.iter().flatten().all(Poly::is_zero) {
            return Err(Error::DegenerateMap("composition is identically zero".into()));
        }
        Ok(ChartMap {
            base: self.base.then(other.base),
            antiholo: self.antiholo ^ other.antiholo,
            matrix,
        })
    }

    /// The inverse up to a scalar, built from the adjugate.
    pub fn inverse(&self) -> ChartMap {
        let w = self.base.inverse();
        let m = &self.matrix;
        let adj = [[m[1][1].clone(), m[0][1].neg()], [m[1][0].neg(), m[0][0].clone()]];
        let pulled = map_entries(&adj, |p| {
            let q = p.precompose(w);
            if self.antiholo {
                q.conjugate()
            } else {
                q
            }
        });
        ChartMap {
            base: w,
            antiholo: self.antiholo,
            matrix: pulled,
        }
    }

    /// `psi^-1 o self o psi`.
    pub fn conjugate_by(&self, psi: &ChartMap) -> Result<ChartMap> {
        psi.inverse().compose(&self.compose(psi)?)
    }
}

fn show_matrix(m: &Matrix) -> String {
    format!("[[{}, {}], [{}, {}]]", m[0][0], m[0][1], m[1][0], m[1][1])
}

impl fmt::Display for ChartMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}, {})",
            self.base,
            if self.antiholo { "anti" } else { "holo" },
            show_matrix(&self.matrix)
        )
    }
}

/// Textual form of a chart map, as stored in fixtures.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChartSpec {
    pub base: Word,
    pub antiholo: bool,
    pub matrix: [[String; 2]; 2],
}

impl ChartSpec {
    pub fn build(&self, sig: &Signature) -> Result<ChartMap> {
        let m = &self.matrix;
        ChartMap::parse(
            self.base,
            self.antiholo,
            [[&m[0][0], &m[0][1]], [&m[1][0], &m[1][1]]],
            sig,
        )
    }
}

impl From<&ChartMap> for ChartSpec {
    fn from(c: &ChartMap) -> Self {
        let m = &c.matrix;
        ChartSpec {
            base: c.base,
            antiholo: c.antiholo,
            matrix: [
                [m[0][0].to_string(), m[0][1].to_string()],
                [m[1][0].to_string(), m[1][1].to_string()],
            ],
        }
    }
}
