use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rewrite::redex::{apply_redex, find_redexes, Redex};
use crate::term::{Monomial, Perm, ShapeTable, TypeIndex};

/// A relation `left(identity) ≡ right(perm)` in normal form.
///
/// `left <= right` in the type order; when both sides have the same type,
/// `perm` is the smaller of the two possible labels `σ`, `σ⁻¹`.
/// The derived ordering sorts by left, right, then image array.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct NormalizedRelation {
    pub left: TypeIndex,
    pub right: TypeIndex,
    pub perm: Perm,
}

impl NormalizedRelation {
    /// Normal form of `(a, da) ≡ (b, db)`, renaming variables so the smaller
    /// side carries the identity.
    pub fn normalize(a: TypeIndex, da: &Perm, b: TypeIndex, db: &Perm) -> Result<NormalizedRelation> {
        if da.degree() != db.degree() {
            return Err(Error::DegreeMismatch { left: da.degree(), right: db.degree() });
        }
        let forward = da.inverse().then(db);
        Ok(match a.cmp(&b) {
            std::cmp::Ordering::Less => NormalizedRelation { left: a, right: b, perm: forward },
            std::cmp::Ordering::Greater => NormalizedRelation { left: b, right: a, perm: forward.inverse() },
            std::cmp::Ordering::Equal => {
                let back = forward.inverse();
                NormalizedRelation { left: a, right: a, perm: forward.min(back) }
            }
        })
    }

    pub fn from_monomials(table: &ShapeTable, x: &Monomial, y: &Monomial) -> Result<NormalizedRelation> {
        let a = table.index_of(x.shape()).ok_or(Error::UnknownType(table.degree()))?;
        let b = table.index_of(y.shape()).ok_or(Error::UnknownType(table.degree()))?;
        NormalizedRelation::normalize(a, x.decoration(), b, y.decoration())
    }

    pub fn renormalize(&self) -> NormalizedRelation {
        let id = Perm::identity(self.perm.degree());
        NormalizedRelation::normalize(self.left, &id, self.right, &self.perm).expect("same degree")
    }

    pub fn is_self_relation(&self) -> bool {
        self.left == self.right
    }
}

/// One redex applied to the identity monomial of `source`.
///
/// The result is the monomial `target` decorated by `perm`, so the move is
/// an edge `source → target` labelled `perm`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Move {
    pub source: TypeIndex,
    pub target: TypeIndex,
    pub perm: Perm,
    pub redex: Redex,
}

impl Move {
    pub fn relation(&self) -> NormalizedRelation {
        let id = Perm::identity(self.perm.degree());
        NormalizedRelation::normalize(self.source, &id, self.target, &self.perm).expect("same degree")
    }
}

fn moves_from(table: &ShapeTable, source: TypeIndex) -> Vec<Move> {
    let m = Monomial::identity(table.shape(source).clone());
    find_redexes(m.shape())
        .into_iter()
        .map(|redex| {
            let out = apply_redex(&m, &redex).expect("enumerated redexes are valid");
            let target = table.index_of(out.shape()).expect("rewriting preserves degree");
            Move { source, target, perm: out.decoration().clone(), redex }
        })
        .collect()
}

/// Every redex of every type, ordered by source index then redex order.
///
/// Work fans out over types on the current rayon pool; the output order does
/// not depend on the number of workers.
pub fn all_moves(table: &ShapeTable) -> Vec<Move> {
    let per_type: Vec<Vec<Move>> =
        (1..=table.len()).into_par_iter().map(|i| moves_from(table, TypeIndex(i as u32))).collect();
    per_type.into_iter().flatten().collect()
}

/// The normalized consequences of the interchange law in degree `n`,
/// sorted and without duplicates.
pub fn generate_relations(n: usize) -> Result<Vec<NormalizedRelation>> {
    if n < 2 {
        return Err(Error::InvalidDegree { degree: n, reason: "relations need degree at least 2" });
    }
    let table = ShapeTable::new(n)?;
    Ok(relations_of(&all_moves(&table)))
}

pub fn relations_of(moves: &[Move]) -> Vec<NormalizedRelation> {
    let mut out: Vec<NormalizedRelation> = moves.par_iter().map(Move::relation).collect();
    out.par_sort_unstable();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_up_to_degree_seven() {
        let want = [(2, 0), (3, 0), (4, 1), (5, 12), (6, 98), (7, 688)];
        for (n, count) in want {
            assert_eq!(generate_relations(n).unwrap().len(), count, "degree {n}");
        }
    }

    #[test]
    fn degree_four_relation() {
        let r = generate_relations(4).unwrap();
        assert_eq!(r[0].left, TypeIndex(8));
        assert_eq!(r[0].right, TypeIndex(18));
        assert_eq!(r[0].perm.to_string(), "(23)");
    }

    #[test]
    fn output_is_sorted_and_normalized() {
        let r = generate_relations(6).unwrap();
        assert!(r.windows(2).all(|w| w[0] < w[1]));
        for rel in &r {
            assert!(rel.left <= rel.right);
            assert!(rel.left != rel.right || !rel.perm.is_identity());
            assert_eq!(&rel.renormalize(), rel);
        }
    }

    #[test]
    fn normalization_agrees_with_monomial_renaming() {
        let table = ShapeTable::new(5).unwrap();
        for mv in all_moves(&table) {
            let src = Monomial::identity(table.shape(mv.source).clone());
            let dst = Monomial::new(table.shape(mv.target).clone(), mv.perm.clone()).unwrap();
            // renaming both sides by any ρ gives the same normal form
            for rho in crate::term::perm::all_perms(5).iter().step_by(11) {
                let a = src.rename(rho).unwrap();
                let b = dst.rename(rho).unwrap();
                assert_eq!(NormalizedRelation::from_monomials(&table, &b, &a).unwrap(), mv.relation());
            }
        }
    }

    #[test]
    fn first_and_last_positions_are_fixed() {
        for n in 4..=7 {
            for rel in generate_relations(n).unwrap() {
                assert_eq!(rel.perm.image(1), 1, "{rel:?}");
                assert_eq!(rel.perm.image(n), n, "{rel:?}");
            }
        }
    }

    #[test]
    fn worker_count_does_not_change_output() {
        let one = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let four = rayon::ThreadPoolBuilder::new().num_threads(4).build().unwrap();
        let a = one.install(|| generate_relations(7).unwrap());
        let b = four.install(|| generate_relations(7).unwrap());
        assert_eq!(a, b);
    }

    #[test]
    fn json_shape() {
        let r = &generate_relations(4).unwrap()[0];
        assert_eq!(serde_json::to_string(r).unwrap(), r#"{"left":8,"right":18,"perm":[1,3,2,4]}"#);
    }
}
