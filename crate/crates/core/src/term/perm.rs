use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A permutation of the positions `1..=n`.
///
/// Stored as a 0-based image array; every public constructor and accessor
/// that talks to the outside world is 1-based.
///
/// Composition follows walks in the quotient graph: `a.compose(&b)` is the
/// permutation whose action on a monomial is "act by `a`, then by `b`", which
/// as functions on positions is `i ↦ a(b(i))`. Hence `(23)·(234) = (34)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Box<[u8]>);

impl Perm {
    pub fn identity(n: usize) -> Perm {
        assert!(n <= u8::MAX as usize, "degree {n} too large");
        Perm((0..n as u8).collect())
    }

    /// Builds a permutation from its 1-based image array.
    pub fn from_images(images: &[usize]) -> Result<Perm> {
        let n = images.len();
        if n > u8::MAX as usize {
            return Err(Error::InvalidPermutation(format!("degree {n} too large")));
        }
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for &img in images {
            if img == 0 || img > n || seen[img - 1] {
                return Err(Error::InvalidPermutation(format!("{images:?} is not a bijection of 1..={n}")));
            }
            seen[img - 1] = true;
            out.push((img - 1) as u8);
        }
        Ok(Perm(out.into_boxed_slice()))
    }

    /// Builds a permutation from a 0-based image array, trusting the caller.
    pub(crate) fn from_zero_based(images: Vec<u8>) -> Perm {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &v)| v as usize == i)
        });
        Perm(images.into_boxed_slice())
    }

    /// Builds a permutation of degree `n` from disjoint 1-based cycles.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Perm> {
        let mut images: Vec<usize> = (1..=n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (k, &from) in cycle.iter().enumerate() {
                let to = cycle[(k + 1) % cycle.len()];
                if from == 0 || from > n || to == 0 || to > n {
                    return Err(Error::InvalidPermutation(format!("point out of range in cycle {cycle:?}")));
                }
                if touched[from - 1] {
                    return Err(Error::InvalidPermutation(format!("cycles are not disjoint at {from}")));
                }
                touched[from - 1] = true;
                images[from - 1] = to;
            }
        }
        Perm::from_images(&images)
    }

    /// Parses cycle notation such as `(243)`, `(24)(35)`, `()` or `(2,10)`.
    ///
    /// Without commas each digit is a separate point, which is how the
    /// small-degree permutations are written throughout this crate.
    pub fn parse_cycles(text: &str, n: usize) -> Result<Perm> {
        let bad = |msg: &str| Error::InvalidPermutation(format!("{msg} in {text:?}"));
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = text.trim();
        while !rest.is_empty() {
            let open = rest.strip_prefix('(').ok_or_else(|| bad("expected '('"))?;
            let close = open.find(')').ok_or_else(|| bad("unclosed cycle"))?;
            let body = open[..close].trim();
            let points = if body.contains(',') {
                body.split(',')
                    .map(|p| p.trim().parse::<usize>().map_err(|_| bad("bad point")))
                    .collect::<Result<Vec<_>>>()?
            } else {
                body.chars()
                    .filter(|c| !c.is_whitespace())
                    .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| bad("bad point")))
                    .collect::<Result<Vec<_>>>()?
            };
            if !points.is_empty() {
                cycles.push(points);
            }
            rest = open[close + 1..].trim_start();
        }
        let refs: Vec<&[usize]> = cycles.iter().map(Vec::as_slice).collect();
        Perm::from_cycles(n, &refs)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// 1-based image of a 1-based point.
    pub fn image(&self, point: usize) -> usize {
        self.0[point - 1] as usize + 1
    }

    pub(crate) fn at(&self, slot: usize) -> usize {
        self.0[slot] as usize
    }

    pub fn images(&self) -> Vec<usize> {
        self.0.iter().map(|&v| v as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &v)| v as usize == i)
    }

    pub fn inverse(&self) -> Perm {
        let mut out = vec![0u8; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            out[v as usize] = i as u8;
        }
        Perm(out.into_boxed_slice())
    }

    /// Path composition: act by `self`, then by `next`.
    pub fn compose(&self, next: &Perm) -> Result<Perm> {
        if self.degree() != next.degree() {
            return Err(Error::DegreeMismatch { left: self.degree(), right: next.degree() });
        }
        Ok(self.then(next))
    }

    /// Unchecked [`Perm::compose`]; panics on a degree mismatch.
    pub fn then(&self, next: &Perm) -> Perm {
        assert_eq!(self.degree(), next.degree(), "composing permutations of different degree");
        Perm(next.0.iter().map(|&j| self.0[j as usize]).collect())
    }

    /// `g^{-1} · self · g` in path order: walk back along `g`, around `self`, out along `g`.
    pub fn conjugate_by(&self, g: &Perm) -> Perm {
        g.inverse().then(self).then(g)
    }

    /// Disjoint cycles of length ≥ 2, each starting at its smallest point, 1-based.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.0[start] as usize == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i + 1);
                i = self.0[i] as usize;
            }
            out.push(cycle);
        }
        out
    }

    /// The positions moved by the permutation, 1-based and ascending.
    pub fn support(&self) -> Vec<usize> {
        (0..self.0.len()).filter(|&i| self.0[i] as usize != i).map(|i| i + 1).collect()
    }

    pub fn order(&self) -> usize {
        fn gcd(a: usize, b: usize) -> usize {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        self.cycles().iter().fold(1, |acc, c| acc / gcd(acc, c.len()) * c.len())
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        let sep = if self.degree() > 9 { "," } else { "" };
        for c in cycles {
            let pts: Vec<String> = c.iter().map(ToString::to_string).collect();
            write!(f, "({})", pts.join(sep))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{}{:?}", self, self.images())
    }
}

impl Serialize for Perm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.images().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Perm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let images = Vec::<usize>::deserialize(d)?;
        Perm::from_images(&images).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
pub(crate) use tests::all_perms;

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str, n: usize) -> Perm {
        Perm::parse_cycles(text, n).unwrap()
    }

    /// Every permutation of degree n, by Heap's algorithm.
    pub(crate) fn all_perms(n: usize) -> Vec<Perm> {
        let mut a: Vec<usize> = (1..=n).collect();
        let mut out = vec![Perm::from_images(&a).unwrap()];
        let mut c = vec![0; n];
        let mut i = 0;
        while i < n {
            if c[i] < i {
                if i % 2 == 0 {
                    a.swap(0, i)
                } else {
                    a.swap(c[i], i)
                }
                out.push(Perm::from_images(&a).unwrap());
                c[i] += 1;
                i = 0;
            } else {
                c[i] = 0;
                i += 1;
            }
        }
        out
    }

    #[test]
    fn composition_reproduces_the_worked_degree_five_example() {
        assert_eq!(p("(23)", 5).then(&p("(234)", 5)), p("(34)", 5));
        assert_eq!(p("(23)", 4).then(&p("(234)", 4)), p("(34)", 4));
    }

    #[test]
    fn inverse_pair_composes_to_identity() {
        assert!(p("(243)", 5).then(&p("(234)", 5)).is_identity());
    }

    #[test]
    fn identity_is_neutral() {
        let t = p("(2543)", 7);
        assert_eq!(Perm::identity(7).then(&t), t);
        assert_eq!(t.then(&Perm::identity(7)), t);
    }

    #[test]
    fn degree_mismatch_is_an_error() {
        assert!(matches!(
            Perm::identity(3).compose(&Perm::identity(4)),
            Err(Error::DegreeMismatch { left: 3, right: 4 })
        ));
    }

    #[test]
    fn cycle_notation_round_trips() {
        for s in ["()", "(23)", "(24)(35)", "(25364)", "(2543)"] {
            assert_eq!(p(s, 7).to_string(), s);
        }
        let big = Perm::parse_cycles("(2,10)(3,11)", 11).unwrap();
        assert_eq!(big.to_string(), "(2,10)(3,11)");
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Perm::from_images(&[1, 1, 2]).is_err());
        assert!(Perm::from_images(&[0, 1]).is_err());
        assert!(Perm::parse_cycles("(12)(23)", 3).is_err());
        assert!(Perm::parse_cycles("(15)", 4).is_err());
    }

    #[test]
    fn group_laws_exhaustive_up_to_degree_four() {
        for n in 1..=4 {
            let all = all_perms(n);
            assert_eq!(all.len(), (1..=n).product::<usize>());
            for a in &all {
                assert!(a.then(&a.inverse()).is_identity());
                assert!(a.inverse().then(a).is_identity());
                for b in &all {
                    for c in &all {
                        assert_eq!(a.then(b).then(c), a.then(&b.then(c)));
                    }
                }
            }
        }
    }

    #[test]
    fn order_of_cycle_types() {
        assert_eq!(p("()", 5).order(), 1);
        assert_eq!(p("(24)(35)", 5).order(), 2);
        assert_eq!(p("(12)(345)", 5).order(), 6);
    }

    #[test]
    fn json_is_one_based() {
        let s = serde_json::to_string(&p("(23)", 4)).unwrap();
        assert_eq!(s, "[1,3,2,4]");
        let back: Perm = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p("(23)", 4));
        assert!(serde_json::from_str::<Perm>("[1,1]").is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn perm(n: usize) -> impl Strategy<Value = Perm> {
            Just((1..=n).collect::<Vec<usize>>()).prop_shuffle().prop_map(|v| Perm::from_images(&v).unwrap())
        }

        proptest! {
            #[test]
            fn associativity_and_inverses(a in perm(9), b in perm(9), c in perm(9)) {
                prop_assert_eq!(a.then(&b).then(&c), a.then(&b.then(&c)));
                prop_assert!(a.then(&a.inverse()).is_identity());
                prop_assert_eq!(a.then(&b).inverse(), b.inverse().then(&a.inverse()));
            }

            #[test]
            fn cycle_display_parses_back(a in perm(9)) {
                prop_assert_eq!(Perm::parse_cycles(&a.to_string(), 9).unwrap(), a);
            }
        }
    }
}
