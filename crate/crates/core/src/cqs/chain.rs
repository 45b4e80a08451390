//! Hirzebruch-Jung continued fractions `m/q = a1 - 1/(a2 - 1/(...))`.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::NormalizedCqs;
use crate::arith::gcd;
use crate::error::{Error, Result};

/// Self-intersection numbers (negated) of the minimal resolution chain.
/// Every entry is at least 2; the empty chain is a smooth point.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HjChain(Vec<u64>);

impl HjChain {
    pub fn new(entries: Vec<u64>) -> Result<Self> {
        if let Some(&bad) = entries.iter().find(|&&a| a < 2) {
            return Err(Error::InvalidChainEntry(bad));
        }
        Ok(HjChain(entries))
    }

    pub fn empty() -> Self {
        HjChain(Vec::new())
    }

    pub fn entries(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> Self {
        HjChain(self.0.iter().rev().copied().collect())
    }

    /// The lexicographically smaller of the chain and its reversal.
    pub fn canonical(&self) -> Self {
        let r = self.reversed();
        if r < *self {
            r
        } else {
            self.clone()
        }
    }
}

impl fmt::Display for HjChain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "]")
    }
}

/// Expands `m/q` with `0 < q < m`, `gcd(m, q) = 1`.
pub fn hj_expand(m: u64, q: u64) -> Result<HjChain> {
    if m < 2 || q == 0 || q >= m || gcd(m, q) != 1 {
        return Err(Error::InvalidNormalized { m, q });
    }
    let mut entries = Vec::new();
    let (mut num, mut den) = (m, q);
    while den > 0 {
        // ceiling division; the remainder den*a - num lies in [0, den)
        let a = num.div_ceil(den);
        entries.push(a);
        let next = a * den - num;
        num = den;
        den = next;
    }
    Ok(HjChain(entries))
}

/// Evaluates a chain back to its normalized germ.
pub fn hj_eval(chain: &HjChain) -> Result<NormalizedCqs> {
    if chain.is_empty() {
        return Ok(NormalizedCqs::smooth());
    }
    // value of the tail as num/den, folded from the right
    let (mut num, mut den) = (1u64, 0u64);
    for &a in chain.entries().iter().rev() {
        if a < 2 {
            return Err(Error::InvalidChainEntry(a));
        }
        let next = a
            .checked_mul(num)
            .and_then(|v| v.checked_sub(den))
            .ok_or(Error::Overflow("continued fraction evaluation"))?;
        den = num;
        num = next;
    }
    NormalizedCqs::new(num, den)
}
