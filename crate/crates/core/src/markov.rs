//! Markov-type equations and the degenerations of `P(1,1,n)`.
//!
//! The classic equation `a^2 + b^2 + c^2 = 3abc` is enumerated as a tree of
//! Vieta moves. For `n + x^2 + y^2 = (n+2)xy` every solution lies on one
//! chain `(1,1) -> (1,n+1) -> ...` of the move `(x,y) -> (y,(n+2)y - x)`.

use std::collections::{BTreeSet, VecDeque};

use num::{BigUint, One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::cqs::{gorenstein_index, NormalizedCqs};
use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::wps::{singular_points, WpsTriple};

mod decimal {
    use num::BigUint;
    use serde::{de::Error, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(D::Error::custom)
    }
}

/// `a <= b <= c` with `a^2 + b^2 + c^2 = 3abc`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MarkovTriple {
    #[serde(with = "decimal")]
    pub a: BigUint,
    #[serde(with = "decimal")]
    pub b: BigUint,
    #[serde(with = "decimal")]
    pub c: BigUint,
}

impl MarkovTriple {
    fn sorted(mut v: [BigUint; 3]) -> Self {
        v.sort();
        let [a, b, c] = v;
        MarkovTriple { a, b, c }
    }

    pub fn is_solution(&self) -> bool {
        let lhs = &self.a * &self.a + &self.b * &self.b + &self.c * &self.c;
        lhs == BigUint::from(3u32) * &self.a * &self.b * &self.c
    }

    /// Small-entry view, when every entry fits in a `u64`.
    pub fn to_u64(&self) -> Option<[u64; 3]> {
        Some([self.a.to_u64()?, self.b.to_u64()?, self.c.to_u64()?])
    }
}

/// Every Markov triple with largest entry at most `bound`, sorted.
pub fn classic_markov_enumerate(bound: &BigUint) -> Vec<MarkovTriple> {
    let one = BigUint::one();
    let root = MarkovTriple {
        a: one.clone(),
        b: one.clone(),
        c: one,
    };
    if root.c > *bound {
        return Vec::new();
    }
    let three = BigUint::from(3u32);
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(root.clone());
    queue.push_back(root);
    while let Some(t) = queue.pop_front() {
        let v = [t.a, t.b, t.c];
        for i in 0..3 {
            let (p, q) = (&v[(i + 1) % 3], &v[(i + 2) % 3]);
            let prod = &three * p * q;
            // the other root of the quadratic in v[i]; never below zero for a solution
            if prod < v[i] {
                continue;
            }
            let other = prod - &v[i];
            if other.is_zero() || other > *bound {
                continue;
            }
            let mut w = v.clone();
            w[i] = other;
            let next = MarkovTriple::sorted(w);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen.into_iter().collect()
}

/// A solution `x <= y` of `n + x^2 + y^2 = (n+2)xy`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GenSolution {
    pub n: u64,
    #[serde(with = "decimal")]
    pub x: BigUint,
    #[serde(with = "decimal")]
    pub y: BigUint,
}

impl GenSolution {
    pub fn is_solution(&self) -> bool {
        satisfies(self.n, &self.x, &self.y)
    }

    /// `P(x^2, y^2, n)`.
    pub fn toric_model(&self) -> Result<WpsTriple> {
        let sq = |v: &BigUint| {
            (v * v)
                .to_u64()
                .ok_or(Error::Overflow("squared Markov weight"))
        };
        WpsTriple::new(sq(&self.x)?, sq(&self.y)?, self.n)
    }
}

fn satisfies(n: u64, x: &BigUint, y: &BigUint) -> bool {
    BigUint::from(n) + x * x + y * y == BigUint::from(n + 2) * x * y
}

/// The chain from `(1,1)` while the larger entry stays within `bound`.
pub fn gen_solutions(n: u64, bound: &BigUint) -> Vec<GenSolution> {
    let mut out = Vec::new();
    let step = BigUint::from(n) + 2u32;
    let (mut x, mut y) = (BigUint::one(), BigUint::one());
    while y <= *bound {
        out.push(GenSolution {
            n,
            x: x.clone(),
            y: y.clone(),
        });
        let next = &step * &y - &x;
        x = std::mem::replace(&mut y, next);
    }
    out
}

/// Descends `(x, y) -> ((n+2)x - y, x)` down to `(1,1)`, starting with the
/// input itself.
pub fn gen_descend(n: u64, x: &BigUint, y: &BigUint) -> Result<Vec<(BigUint, BigUint)>> {
    let not_a_solution = || Error::NotASolution {
        n,
        x: x.to_string(),
        y: y.to_string(),
    };
    if x.is_zero() || y.is_zero() || !satisfies(n, x, y) {
        return Err(not_a_solution());
    }
    let step = BigUint::from(n) + 2u32;
    let (mut x, mut y) = if x <= y {
        (x.clone(), y.clone())
    } else {
        (y.clone(), x.clone())
    };
    let mut path = vec![(x.clone(), y.clone())];
    while !y.is_one() {
        let prev = &step * &x - &y;
        y = std::mem::replace(&mut x, prev);
        path.push((x.clone(), y.clone()));
    }
    Ok(path)
}

/// `P(x^2, y^2, n)` for each solution of the chain within `bound`; the first
/// entry is `P(1,1,n)` itself.
pub fn toric_degenerations_of_p11n(n: u64, bound: &BigUint) -> Result<Vec<WpsTriple>> {
    if n < 3 {
        return Err(Error::ParameterTooSmall { n, min: 3 });
    }
    gen_solutions(n, bound)
        .iter()
        .map(|s| {
            let p = s.toric_model()?;
            debug_assert!(p.is_well_formed());
            Ok(p)
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CandidateKind {
    Toric,
    NonToricGm,
}

/// Descriptor of a possible central fiber: which singularities survive and
/// the invariants every fiber shares. Existence is not checked.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CentralFiberCandidate {
    pub kind: CandidateKind,
    /// The entry for `P(1,1,n)` itself, with every Wahl point smoothed.
    pub general_fiber: bool,
    pub toric_model: WpsTriple,
    pub basket: Vec<NormalizedCqs>,
    pub k2: Fraction,
    pub rho: u32,
    pub note: String,
}

/// Candidates for the central fibers obtained from `P(x^2, y^2, n)` by
/// smoothing some of its Wahl points: the toric surface itself, the
/// non-toric partial smoothings with exactly two non-Gorenstein points, and
/// the general fiber.
pub fn partial_smoothing_candidates(
    n: u64,
    x: &BigUint,
    y: &BigUint,
) -> Result<Vec<CentralFiberCandidate>> {
    if n < 3 {
        return Err(Error::ParameterTooSmall { n, min: 3 });
    }
    if x.is_zero() || y.is_zero() || !satisfies(n, x, y) {
        return Err(Error::NotASolution {
            n,
            x: x.to_string(),
            y: y.to_string(),
        });
    }
    let (x, y) = if x <= y { (x, y) } else { (y, x) };
    let sol = GenSolution {
        n,
        x: x.clone(),
        y: y.clone(),
    };
    let model = sol.toric_model()?;
    let points = singular_points(&model)?;
    let base = points[2].normalized;
    let wahl: Vec<NormalizedCqs> = points[..2]
        .iter()
        .filter(|p| !p.is_smooth())
        .map(|p| p.normalized)
        .collect();
    let k2 = Fraction::new((n as u128 + 2) * (n as u128 + 2), n);
    let base_non_gorenstein = usize::from(gorenstein_index(base) > 1);

    let candidate = |kind, general_fiber, toric_model, kept: &[NormalizedCqs], note: String| {
        let mut basket = vec![base];
        basket.extend_from_slice(kept);
        CentralFiberCandidate {
            kind,
            general_fiber,
            toric_model,
            basket,
            k2: k2.clone(),
            rho: 1,
            note,
        }
    };

    let mut out = Vec::new();
    if !wahl.is_empty() {
        out.push(candidate(
            CandidateKind::Toric,
            false,
            model,
            &wahl,
            format!("toric surface {model}"),
        ));
    }
    if wahl.len() == 2 {
        for keep in [wahl[0], wahl[1]] {
            if base_non_gorenstein + 1 != 2 {
                continue;
            }
            let note = format!(
                "minimal resolution maps to F_d with d in {{{}, {}}}",
                n + 3,
                n + 6
            );
            out.push(candidate(
                CandidateKind::NonToricGm,
                false,
                model,
                &[keep],
                note,
            ));
        }
    }
    let p11n = WpsTriple::new(1, 1, n)?;
    out.push(candidate(
        CandidateKind::Toric,
        true,
        p11n,
        &[],
        format!("general fiber {p11n}"),
    ));
    Ok(out)
}
