use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::term::notation::{letter, print_shape};
use crate::term::{parse_monomial, Monomial, Op, Perm, Term, Tree};

/// `left ≡ right` where both sides have the same association type and
/// different variable orders.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CommutativityIdentity {
    left: Monomial,
    right: Monomial,
}

impl CommutativityIdentity {
    pub fn new(left: Monomial, right: Monomial) -> Result<CommutativityIdentity> {
        if left.shape() != right.shape() {
            return Err(Error::InvalidShape("both sides of a commutativity identity need the same type".into()));
        }
        if left == right {
            return Err(Error::InvalidPermutation("the two sides are identical".into()));
        }
        Ok(CommutativityIdentity { left, right })
    }

    pub fn parse(left: &str, right: &str, degree: usize) -> Result<CommutativityIdentity> {
        CommutativityIdentity::new(parse_monomial(left, degree)?, parse_monomial(right, degree)?)
    }

    pub fn left(&self) -> &Monomial {
        &self.left
    }

    pub fn right(&self) -> &Monomial {
        &self.right
    }

    pub fn degree(&self) -> usize {
        self.left.degree()
    }

    /// Position permutation taking the left side to the right side.
    pub fn pi(&self) -> Perm {
        self.left.decoration().inverse().then(self.right.decoration())
    }

    pub fn transpose(&self) -> CommutativityIdentity {
        CommutativityIdentity { left: self.left.transpose(), right: self.right.transpose() }
    }

    pub fn swap_sides(&self) -> CommutativityIdentity {
        CommutativityIdentity { left: self.right.clone(), right: self.left.clone() }
    }

    /// Letters exchanged by the identity, e.g. `{d, e}` for a transposition.
    pub fn moved_letters(&self) -> Vec<char> {
        let mut vars: Vec<usize> =
            self.pi().support().iter().map(|&pos| self.left.decoration().image(pos) - 1).collect();
        vars.sort_unstable();
        vars.into_iter().map(|v| letter(v as u8)).collect()
    }
}

impl fmt::Display for CommutativityIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ≡ {}", self.left, self.right)
    }
}

/// Identity file: the type, the permutation and, for reading, both sides.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityFile {
    pub degree: usize,
    #[serde(rename = "type")]
    pub type_string: String,
    pub pi: Perm,
    pub left: String,
    pub right: String,
}

impl IdentityFile {
    pub fn new(id: &CommutativityIdentity) -> IdentityFile {
        IdentityFile {
            degree: id.degree(),
            type_string: print_shape(id.left().shape()),
            pi: id.pi(),
            left: id.left().to_string(),
            right: id.right().to_string(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Multiplication of both sides by `factor` with `op`, on `side`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OuterFactor {
    pub op: Op,
    pub side: Side,
    pub factor: Term,
}

fn substitute(t: &Term, var: u8, by: &Term) -> Term {
    match t {
        Tree::Leaf(v) if *v == var => by.clone(),
        Tree::Leaf(v) => Tree::Leaf(*v),
        Tree::Node(op, ch) => Tree::join(*op, ch.iter().map(|c| substitute(c, var, by)).collect()),
    }
}

fn variables(t: &Term) -> Vec<u8> {
    t.leaves().into_iter().copied().collect()
}

/// The identity on `term` after the substitutions and outer multiplications.
pub(crate) fn transform_term(t: &Term, subs: &[(u8, Term)], outer: &[OuterFactor]) -> Term {
    let mut out = t.clone();
    for (var, by) in subs {
        out = substitute(&out, *var, by);
    }
    for o in outer {
        out = match o.side {
            Side::Right => Tree::join(o.op, vec![out, o.factor.clone()]),
            Side::Left => Tree::join(o.op, vec![o.factor.clone(), out]),
        };
    }
    out
}

/// Checks that every new variable is fresh and that the enlarged identity
/// is multilinear in `0..N`.
pub(crate) fn check_fresh(degree: usize, subs: &[(u8, Term)], outer: &[OuterFactor]) -> Result<()> {
    let mut seen: HashSet<u8> = (0..degree as u8).collect();
    let mut replaced = HashSet::new();
    for (var, by) in subs {
        if *var as usize >= degree || !replaced.insert(*var) {
            return Err(Error::VariableCollision(format!("cannot substitute for {}", letter(*var))));
        }
        let vars = variables(by);
        if vars.iter().filter(|&&v| v == *var).count() > 1 {
            return Err(Error::VariableCollision(format!("{} occurs twice in its substitute", letter(*var))));
        }
        for v in vars.into_iter().filter(|v| v != var) {
            if !seen.insert(v) {
                return Err(Error::VariableCollision(format!("{} is not fresh", letter(v))));
            }
        }
    }
    for o in outer {
        for v in variables(&o.factor) {
            if !seen.insert(v) {
                return Err(Error::VariableCollision(format!("{} is not fresh", letter(v))));
            }
        }
    }
    if seen.iter().any(|&v| v as usize >= seen.len()) {
        return Err(Error::VariableCollision("new variables must continue the alphabet without gaps".into()));
    }
    Ok(())
}

/// Substitutes products for variables on both sides, then multiplies both
/// sides by outer factors, in order.
pub fn substitute_and_multiply(
    id: &CommutativityIdentity,
    subs: &[(u8, Term)],
    outer: &[OuterFactor],
) -> Result<CommutativityIdentity> {
    check_fresh(id.degree(), subs, outer)?;
    let left = Monomial::from_term(&transform_term(&id.left.to_term(), subs, outer))?;
    let right = Monomial::from_term(&transform_term(&id.right.to_term(), subs, outer))?;
    CommutativityIdentity::new(left, right)
}
