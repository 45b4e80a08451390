//! Degeneration verdict for weighted projective planes.
//!
//! A well-formed `P(a,b,c)` with surface mld below 1/6 that lies in none of
//! the families A, B1, B2, B3 has no non-trivial Q-Gorenstein klt
//! degenerations. Anything else is reported as out of scope together with
//! every reason that fired.
//!
//! The basket and mld hypotheses of the 1-complement criterion are computed
//! and attached, but the basket condition does not gate the verdict: the
//! B-families already absorb it, and e.g. `P(4,25,841)` has a `[4]` point yet
//! no degenerations.

use serde::{Deserialize, Serialize};

use super::families::{family_a_member, family_b_member, BWitness};
use super::{k2, min_mld, singular_points, PointReport, WpsTriple};
use crate::cqs::BasketTag;
use crate::fraction::Fraction;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Outcome {
    NoNontrivialDegenerations,
    OutOfScope,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Reason {
    NotWellFormed,
    InFamilyA { witness: [u64; 3] },
    InFamilyB(BWitness),
    MldAtLeastOneSixth { mld: Fraction },
}

impl Reason {
    /// Plain-language statement of the condition behind the reason.
    pub fn explanation(&self) -> String {
        match self {
            Reason::NotWellFormed => {
                "weights are not pairwise coprime, so this is not a well-formed weighted plane"
                    .into()
            }
            Reason::InFamilyA { witness: [a, b, c] } => format!(
                "{b} + {c} is divisible by {a}: the fixed point 1/{a}({b},{c}) is Du Val or smooth"
            ),
            Reason::InFamilyB(w) => {
                let shape = match w.family {
                    super::BFamily::B1 => "(1+4l(n-1), 2n-1+4k(n-1), 4n-4), 0 <= l,k < n-1",
                    super::BFamily::B2 => {
                        "(1+l(6n-5), 3n-1+k(6n-5), 6n-5), 0 <= l,k < ceil(4(6n-5)/9)"
                    }
                    super::BFamily::B3 => {
                        "(1+l(6n-7), 3n-2+k(6n-7), 6n-7), 0 <= l,k < ceil(4(6n-7)/9)"
                    }
                };
                format!(
                    "up to permutation the triple is {shape} with n = {}, l = {}, k = {}; \
                     a 1-complement may fail to exist",
                    w.n, w.l, w.k
                )
            }
            Reason::MldAtLeastOneSixth { mld } => {
                format!(
                    "surface mld {mld} is at least 1/6; the 1-complement argument needs mld < 1/6"
                )
            }
        }
    }
}

/// Hypotheses of the 1-complement criterion for a Picard-rank-one toric
/// surface. Rank one is an input assumption and is only recorded.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesesReport {
    pub picard_rank_one_assumed: bool,
    pub mld_below_one_sixth: bool,
    pub baskets_clear: bool,
    pub basket_hits: Vec<BasketHit>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasketHit {
    pub point: usize,
    pub tags: Vec<BasketTag>,
}

pub fn basket_hypotheses(points: &[PointReport], mld: &Fraction) -> HypothesesReport {
    let basket_hits: Vec<BasketHit> = points
        .iter()
        .enumerate()
        .filter(|(_, p)| !p.baskets.is_empty())
        .map(|(i, p)| BasketHit {
            point: i,
            tags: p.baskets.clone(),
        })
        .collect();
    HypothesesReport {
        picard_rank_one_assumed: true,
        mld_below_one_sixth: *mld < Fraction::new(1, 6),
        baskets_clear: basket_hits.is_empty(),
        basket_hits,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    /// Canonical (sorted) triple the verdict was computed on.
    pub triple: WpsTriple,
    pub outcome: Outcome,
    pub reasons: Vec<Reason>,
    pub mld: Option<Fraction>,
    pub k2: Fraction,
    pub hypotheses: Option<HypothesesReport>,
}

/// Decides on the sorted triple, so the result does not depend on the order
/// the weights were given in.
pub fn degeneration_verdict(p: &WpsTriple) -> Verdict {
    let canon = p.sorted();
    let mut reasons = Vec::new();
    let well_formed = canon.is_well_formed();
    if !well_formed {
        reasons.push(Reason::NotWellFormed);
    }
    if let Some(witness) = family_a_member(&canon) {
        reasons.push(Reason::InFamilyA { witness });
    }
    if let Some(w) = family_b_member(&canon) {
        reasons.push(Reason::InFamilyB(w));
    }
    let (mld, hypotheses) = if well_formed {
        let points = singular_points(&canon).expect("checked well-formed");
        let mld = min_mld(&points);
        let hyp = basket_hypotheses(&points, &mld);
        if !hyp.mld_below_one_sixth {
            reasons.push(Reason::MldAtLeastOneSixth { mld: mld.clone() });
        }
        (Some(mld), Some(hyp))
    } else {
        (None, None)
    };
    let outcome = if reasons.is_empty() {
        Outcome::NoNontrivialDegenerations
    } else {
        Outcome::OutOfScope
    };
    Verdict {
        triple: canon,
        outcome,
        reasons,
        mld,
        k2: k2(&canon),
        hypotheses,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cqs::Basket;
    use crate::wps::BFamily;

    fn verdict(a: u64, b: u64, c: u64) -> Verdict {
        degeneration_verdict(&WpsTriple::new(a, b, c).unwrap())
    }

    #[test]
    fn markov_square_has_no_degenerations() {
        let v = verdict(4, 25, 841);
        assert_eq!(v.outcome, Outcome::NoNontrivialDegenerations);
        assert!(v.reasons.is_empty());
        let h = v.hypotheses.unwrap();
        assert!(h.mld_below_one_sixth);
        assert!(!h.baskets_clear);
        assert_eq!(h.basket_hits[0].point, 0);
        assert_eq!(h.basket_hits[0].tags[0].basket, Basket::F2);
    }

    #[test]
    fn p158_fires_everything() {
        let v = verdict(1, 5, 8);
        assert_eq!(v.outcome, Outcome::OutOfScope);
        assert_eq!(v.reasons.len(), 3);
        assert!(matches!(v.reasons[0], Reason::InFamilyA { .. }));
        match &v.reasons[1] {
            Reason::InFamilyB(w) => assert_eq!((w.family, w.n, w.l, w.k), (BFamily::B1, 3, 0, 0)),
            r => panic!("unexpected {r:?}"),
        }
        assert_eq!(
            v.reasons[2],
            Reason::MldAtLeastOneSixth {
                mld: Fraction::new(1, 2)
            }
        );
        let h = v.hypotheses.unwrap();
        assert!(!h.mld_below_one_sixth && !h.baskets_clear);
    }

    #[test]
    fn p2_is_out_of_scope() {
        let v = verdict(1, 1, 1);
        assert_eq!(v.outcome, Outcome::OutOfScope);
        assert_eq!(
            v.reasons,
            vec![
                Reason::InFamilyA { witness: [1, 1, 1] },
                Reason::MldAtLeastOneSixth {
                    mld: Fraction::from_integer(2)
                }
            ]
        );
        let h = v.hypotheses.unwrap();
        assert!(h.baskets_clear && !h.mld_below_one_sixth);
    }

    #[test]
    fn ill_formed() {
        let v = verdict(2, 4, 5);
        assert_eq!(v.reasons, vec![Reason::NotWellFormed]);
        assert_eq!(v.mld, None);
    }

    #[test]
    fn permutation_invariant() {
        assert_eq!(verdict(841, 4, 25), verdict(4, 25, 841));
        assert_eq!(verdict(8, 1, 5), verdict(5, 8, 1));
    }

    #[test]
    fn explanations_mention_data() {
        let v = verdict(1, 5, 8);
        assert!(v.reasons[1].explanation().contains("n = 3"));
        assert!(v.reasons[2].explanation().contains("1/2"));
    }
}
