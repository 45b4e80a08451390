//! Weighted projective planes `P(a, b, c)`.
//!
//! The three torus-fixed points of a well-formed plane are the cyclic germs
//! `1/a(b, c)`, `1/b(a, c)` and `1/c(a, b)`. This module classifies them and
//! derives the global invariants; [`families`] and [`verdict`] build the
//! degeneration decision on top.

pub mod families;
pub mod verdict;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::gcd;
use crate::cqs::{
    basket_membership, classify_t, gorenstein_index, is_qg_rigid, mld_resolution, normalize,
    BasketTag, CqsGerm, HjChain, NormalizedCqs, Rigidity, TData,
};
use crate::error::{Error, Result};
use crate::fraction::Fraction;

pub use families::{family_a_member, family_b_member, BFamily, BWitness};
pub use verdict::{
    basket_hypotheses, degeneration_verdict, HypothesesReport, Outcome, Reason, Verdict,
};

/// Raw weights in the order given; see [`WpsTriple::sorted`] for the
/// canonical form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WpsTriple {
    pub a: u64,
    pub b: u64,
    pub c: u64,
}

impl WpsTriple {
    pub fn new(a: u64, b: u64, c: u64) -> Result<Self> {
        if a == 0 || b == 0 || c == 0 {
            return Err(Error::NonPositiveWeight { a, b, c });
        }
        Ok(WpsTriple { a, b, c })
    }

    pub fn weights(&self) -> [u64; 3] {
        [self.a, self.b, self.c]
    }

    pub fn is_well_formed(&self) -> bool {
        gcd(self.a, self.b) == 1 && gcd(self.b, self.c) == 1 && gcd(self.a, self.c) == 1
    }

    pub fn sorted(&self) -> Self {
        let mut w = self.weights();
        w.sort_unstable();
        WpsTriple {
            a: w[0],
            b: w[1],
            c: w[2],
        }
    }

    fn require_well_formed(&self) -> Result<()> {
        if self.is_well_formed() {
            Ok(())
        } else {
            Err(Error::NotWellFormed {
                a: self.a,
                b: self.b,
                c: self.c,
            })
        }
    }
}

impl fmt::Display for WpsTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P({},{},{})", self.a, self.b, self.c)
    }
}

/// Classification of one torus-fixed point.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PointReport {
    pub germ: CqsGerm,
    pub normalized: NormalizedCqs,
    pub chain: HjChain,
    pub t_data: Option<TData>,
    pub mu: Option<u64>,
    pub rigidity: Option<Rigidity>,
    pub gorenstein_index: u64,
    pub baskets: Vec<BasketTag>,
    pub mld: Fraction,
}

impl PointReport {
    pub fn classify(germ: CqsGerm) -> Self {
        let normalized = normalize(&germ);
        let t_data = classify_t(normalized);
        PointReport {
            germ,
            normalized,
            chain: normalized.chain(),
            t_data,
            mu: t_data.map(|t| t.milnor_number()),
            rigidity: is_qg_rigid(normalized),
            gorenstein_index: gorenstein_index(normalized),
            baskets: basket_membership(normalized),
            mld: mld_resolution(normalized),
        }
    }

    pub fn is_smooth(&self) -> bool {
        self.normalized.is_smooth()
    }

    /// Smooth points count as T here: they contribute nothing to the Noether sum.
    fn noether_mu(&self) -> Option<u64> {
        if self.is_smooth() {
            Some(0)
        } else {
            self.mu
        }
    }
}

/// Reports for `1/a(b,c)`, `1/b(a,c)`, `1/c(a,b)` in that order.
pub fn singular_points(p: &WpsTriple) -> Result<[PointReport; 3]> {
    p.require_well_formed()?;
    let germ = |m, x, y| CqsGerm::from_unsigned(m, x, y).expect("well-formed weights are units");
    Ok([
        PointReport::classify(germ(p.a, p.b, p.c)),
        PointReport::classify(germ(p.b, p.a, p.c)),
        PointReport::classify(germ(p.c, p.a, p.b)),
    ])
}

/// `K^2 = (a + b + c)^2 / (a b c)`.
pub fn k2(p: &WpsTriple) -> Fraction {
    let sum = p.a as u128 + p.b as u128 + p.c as u128;
    let prod = num::BigInt::from(p.a) * p.b * p.c;
    Fraction::new(num::BigInt::from(sum) * sum, prod)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NoetherCheck {
    pub lhs: Fraction,
    pub holds: bool,
}

/// `K^2 + 3 + sum mu` against `12`, available only when every singular point
/// is a T-singularity.
pub fn noether_check(p: &WpsTriple) -> Result<Option<NoetherCheck>> {
    let points = singular_points(p)?;
    Ok(noether_from_points(p, &points))
}

pub(crate) fn noether_from_points(
    p: &WpsTriple,
    points: &[PointReport; 3],
) -> Option<NoetherCheck> {
    let mut mu_sum = 0u64;
    for pt in points {
        mu_sum += pt.noether_mu()?;
    }
    let lhs = k2(p) + Fraction::from_integer(3 + mu_sum);
    let holds = lhs == Fraction::from_integer(12);
    Some(NoetherCheck { lhs, holds })
}

/// Minimum of the three point mlds; smooth points contribute 2.
pub fn wps_mld(p: &WpsTriple) -> Result<Fraction> {
    let points = singular_points(p)?;
    Ok(min_mld(&points))
}

pub(crate) fn min_mld(points: &[PointReport; 3]) -> Fraction {
    points
        .iter()
        .map(|pt| pt.mld.clone())
        .min()
        .expect("three points")
}
