//! Baskets F1..F4 and D of resolution chains.
//!
//! Each F-pattern is a fixed head followed by any number of 2's. A germ is
//! matched through its chain or the reversed chain, since those describe the
//! same singularity.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::NormalizedCqs;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Basket {
    F1,
    F2,
    F3,
    F4,
    #[serde(rename = "D")]
    Dtype,
}

impl fmt::Display for Basket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Basket::F1 => "F1",
            Basket::F2 => "F2",
            Basket::F3 => "F3",
            Basket::F4 => "F4",
            Basket::Dtype => "D",
        };
        f.write_str(s)
    }
}

/// One matched pattern. `param` is the number of trailing 2's for the
/// F-baskets and the middle entry `n` of `[2,n,2]` for D.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BasketTag {
    pub basket: Basket,
    pub pattern: String,
    pub param: u64,
}

impl fmt::Display for BasketTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.basket {
            Basket::Dtype => write!(f, "D via [2,{},2]", self.param),
            b => {
                let head = self.pattern.trim_end_matches(",2^k]").trim_end_matches(']');
                write!(f, "{b} via {head},2^{}]", self.param)
            }
        }
    }
}

const F_PATTERNS: &[(Basket, &[u64], &str)] = &[
    (Basket::F1, &[3], "[3,2^k]"),
    (Basket::F2, &[4], "[4,2^k]"),
    (Basket::F2, &[2, 3], "[2,3,2^k]"),
    (Basket::F3, &[5], "[5,2^k]"),
    (Basket::F3, &[2, 2, 3], "[2,2,3,2^k]"),
    (Basket::F4, &[6], "[6,2^k]"),
    (Basket::F4, &[2, 2, 2, 3], "[2,2,2,3,2^k]"),
    (Basket::F4, &[2, 4], "[2,4,2^k]"),
    (Basket::F4, &[3, 3], "[3,3,2^k]"),
];

fn match_chain(entries: &[u64], out: &mut Vec<BasketTag>) {
    for &(basket, head, pattern) in F_PATTERNS {
        if entries.len() >= head.len()
            && entries[..head.len()] == *head
            && entries[head.len()..].iter().all(|&a| a == 2)
        {
            out.push(BasketTag {
                basket,
                pattern: pattern.to_string(),
                param: (entries.len() - head.len()) as u64,
            });
        }
    }
    if let [2, n, 2] = *entries {
        out.push(BasketTag {
            basket: Basket::Dtype,
            pattern: "[2,n,2]".to_string(),
            param: n,
        });
    }
}

/// All basket patterns matched by the germ's chain or its reversal, sorted.
pub fn basket_membership(s: NormalizedCqs) -> Vec<BasketTag> {
    if s.is_smooth() {
        return Vec::new();
    }
    let chain = s.chain();
    let mut tags = Vec::new();
    match_chain(chain.entries(), &mut tags);
    match_chain(chain.reversed().entries(), &mut tags);
    tags.sort();
    tags.dedup();
    tags
}
