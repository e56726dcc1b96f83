//! Degree 16 from degree 9: substitute into the `{d, e}` identity, multiply
//! on the right, transpose, and recover Kock's identity up to renaming.

use std::fmt;

use crate::error::Result;
use crate::term::notation::letter;
use crate::term::{parse_term, Monomial, Op, Perm};
use crate::witness::identity::{substitute_and_multiply, CommutativityIdentity, OuterFactor, Side};

pub const DEGREE_NINE_LEFT: &str = "(a•b)∘(c•d•e•f)∘(g•h•i)";
pub const DEGREE_NINE_RIGHT: &str = "(a•b)∘(c•e•d•f)∘(g•h•i)";
pub const KOCK_LEFT: &str = "(a∘b∘c∘d)•(e∘f∘g∘h)•(i∘j∘k∘l)•(m∘n∘p∘q)";
pub const KOCK_RIGHT: &str = "(a∘b∘c∘d)•(e∘g∘f∘h)•(i∘j∘k∘l)•(m∘n∘p∘q)";

pub fn degree_nine_identity() -> CommutativityIdentity {
    CommutativityIdentity::parse(DEGREE_NINE_LEFT, DEGREE_NINE_RIGHT, 9).expect("constant")
}

pub fn kock_identity() -> CommutativityIdentity {
    CommutativityIdentity::parse(KOCK_LEFT, KOCK_RIGHT, 16).expect("constant")
}

/// `b ← b•j•k`, `i ← i•l`.
pub fn kock_substitutions() -> Vec<(u8, crate::term::Term)> {
    vec![(1, parse_term("b•j•k").expect("constant")), (8, parse_term("i•l").expect("constant"))]
}

/// Right `∘`-multiplication by `m•n•p•q`.
pub fn kock_outer_factor() -> OuterFactor {
    OuterFactor { op: Op::H, side: Side::Right, factor: parse_term("m•n•p•q").expect("constant") }
}

/// A renaming of variables taking one identity onto another.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Renaming {
    /// Variable `v` of the source becomes `rho(v)` of the target.
    pub rho: Perm,
    /// Whether the source's left side lands on the target's right side.
    pub sides_swapped: bool,
}

impl fmt::Display for Renaming {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pairs: Vec<String> = (1..=self.rho.degree())
            .map(|v| format!("{}→{}", letter(v as u8 - 1), letter(self.rho.image(v) as u8 - 1)))
            .collect();
        write!(f, "{}", pairs.join(" "))?;
        if self.sides_swapped {
            write!(f, " (sides exchanged)")?;
        }
        Ok(())
    }
}

/// Finds `rho` with `rho(source) = {a, b}` as an unordered pair of sides.
///
/// The renaming is forced by matching one side, so at most two candidates
/// are tried.
pub fn match_up_to_renaming(source: &CommutativityIdentity, a: &Monomial, b: &Monomial) -> Option<Renaming> {
    if source.degree() != a.degree() || source.left().shape() != a.shape() || a.shape() != b.shape() {
        return None;
    }
    for (sides_swapped, (x, y)) in [(false, (a, b)), (true, (b, a))] {
        // rho ∘ dec(source.left) = dec(x)
        let rho = x.decoration().then(&source.left().decoration().inverse());
        if &source.left().rename(&rho).ok()? == x && &source.right().rename(&rho).ok()? == y {
            return Some(Renaming { rho, sides_swapped });
        }
    }
    None
}

#[derive(Clone, Debug)]
pub struct KockReport {
    pub source: CommutativityIdentity,
    /// After substitution and multiplication.
    pub derived: CommutativityIdentity,
    /// `derived` with `∘` and `•` exchanged.
    pub transposed: CommutativityIdentity,
    pub target: (Monomial, Monomial),
    pub renaming: Option<Renaming>,
}

impl KockReport {
    pub fn success(&self) -> bool {
        self.renaming.is_some()
    }
}

/// Runs the derivation from `source` with the given outer factors and
/// compares against `target`.
pub fn kock_check_with(
    source: &CommutativityIdentity,
    outer: &[OuterFactor],
    target: (&Monomial, &Monomial),
) -> Result<KockReport> {
    let derived = substitute_and_multiply(source, &kock_substitutions(), outer)?;
    let transposed = derived.transpose();
    let renaming = match_up_to_renaming(&transposed, target.0, target.1);
    let target = (target.0.clone(), target.1.clone());
    Ok(KockReport { source: source.clone(), derived, transposed, target, renaming })
}

pub fn kock_derivation_check(source: &CommutativityIdentity) -> Result<KockReport> {
    let k = kock_identity();
    kock_check_with(source, &[kock_outer_factor()], (k.left(), k.right()))
}
