use std::fmt;

use crate::error::{Error, Result};
use crate::term::notation::{self, MAX_LETTERS};
use crate::term::perm::Perm;
use crate::term::tree::{Term, Tree};

/// An association type: a canonical tree with unlabelled leaves.
pub type Shape = Tree<()>;

/// A multilinear monomial: an association type together with the variable
/// sitting at each leaf position.
///
/// `decoration.image(i)` is the (1-based) variable at position `i`, counting
/// leaves left to right.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    shape: Shape,
    decoration: Perm,
}

impl Monomial {
    pub fn new(shape: Shape, decoration: Perm) -> Result<Monomial> {
        if !shape.is_canonical() {
            return Err(Error::InvalidShape("shape is not alternating".into()));
        }
        if shape.degree() != decoration.degree() {
            return Err(Error::DegreeMismatch { left: shape.degree(), right: decoration.degree() });
        }
        Ok(Monomial { shape, decoration })
    }

    pub fn identity(shape: Shape) -> Monomial {
        let n = shape.degree();
        Monomial { shape, decoration: Perm::identity(n) }
    }

    /// Reads a term whose leaves are exactly the variables `0..n`.
    pub fn from_term(term: &Term) -> Result<Monomial> {
        let leaves: Vec<u8> = term.leaves().into_iter().copied().collect();
        let n = leaves.len();
        let mut seen = vec![false; n];
        for &v in &leaves {
            let v = v as usize;
            if v >= n || seen[v] {
                return Err(Error::Parse {
                    offset: 0,
                    message: format!("expected each of the first {n} variables exactly once"),
                });
            }
            seen[v] = true;
        }
        Monomial::new(term.shape(), Perm::from_zero_based(leaves))
    }

    pub fn to_term(&self) -> Term {
        let mut pos = 0;
        self.shape.map_leaves(&mut |_| {
            pos += 1;
            self.decoration.at(pos - 1) as u8
        })
    }

    pub fn shape(&self) -> &Shape {
        &self.shape
    }

    pub fn decoration(&self) -> &Perm {
        &self.decoration
    }

    pub fn degree(&self) -> usize {
        self.decoration.degree()
    }

    /// Position action: the variable at position `i` of the result is the
    /// variable at position `sigma(i)` of `self`.
    pub fn apply_permutation(&self, sigma: &Perm) -> Result<Monomial> {
        let decoration = self.decoration.compose(sigma)?;
        Ok(Monomial { shape: self.shape.clone(), decoration })
    }

    /// Renames variables: variable `v` becomes `rho(v)`.
    pub fn rename(&self, rho: &Perm) -> Result<Monomial> {
        let decoration = rho.compose(&self.decoration)?;
        Ok(Monomial { shape: self.shape.clone(), decoration })
    }

    /// Swaps `∘` and `•` at every node.
    pub fn transpose(&self) -> Monomial {
        Monomial { shape: self.shape.transpose(), decoration: self.decoration.clone() }
    }
}

/// Parses a monomial of the given degree; the letters used must be exactly
/// the first `degree` letters of the alphabet.
pub fn parse_monomial(text: &str, degree: usize) -> Result<Monomial> {
    if degree == 0 || degree > MAX_LETTERS {
        return Err(Error::InvalidDegree { degree, reason: "text notation supports degrees 1..=25" });
    }
    let term = notation::parse_term(text)?;
    if term.degree() != degree {
        return Err(Error::Parse {
            offset: 0,
            message: format!("expected {degree} variables, found {}", term.degree()),
        });
    }
    Monomial::from_term(&term)
}

pub fn print_monomial(m: &Monomial) -> String {
    notation::print_term(&m.to_term())
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&print_monomial(self))
    }
}
