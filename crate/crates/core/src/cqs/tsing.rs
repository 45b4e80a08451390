//! T-singularities, Milnor corrections and Q-Gorenstein rigidity.
//!
//! Write `k = gcd(m, q + 1)` and `m = k r`. The germ `1/m(1, q)` is a
//! T-singularity `1/(d n^2)(1, d n a - 1)` exactly when `m | k^2`; then
//! `n = m / k`, `d = k^2 / m` and `a = (q + 1) / k`. Du Val germs
//! (`q = m - 1`) fall out of the same formula with `n = 1`, `d = m`.

use serde::{Deserialize, Serialize};

use super::NormalizedCqs;
use crate::arith::gcd;

/// Witness `1/(d n^2)(1, d n a - 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TData {
    pub d: u64,
    pub n: u64,
    pub a: u64,
}

impl TData {
    pub fn is_wahl(&self) -> bool {
        self.d == 1 && self.n >= 2
    }

    pub fn is_du_val(&self) -> bool {
        self.n == 1
    }

    pub fn milnor_number(&self) -> u64 {
        self.d - 1
    }
}

pub fn classify_t(s: NormalizedCqs) -> Option<TData> {
    if s.is_smooth() {
        return None;
    }
    let (m, q) = (s.m(), s.q());
    let k = gcd(m, q + 1);
    let k2 = k as u128 * k as u128;
    if !k2.is_multiple_of(m as u128) {
        return None;
    }
    let n = m / k;
    let d = (k2 / m as u128) as u64;
    let a = (q + 1) / k;
    if gcd(a, n) != 1 {
        return None;
    }
    Some(TData { d, n, a })
}

/// `d - 1` for T-singularities, `None` otherwise.
pub fn milnor_mu(s: NormalizedCqs) -> Option<u64> {
    classify_t(s).map(|t| t.milnor_number())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Rigidity {
    pub rigid: bool,
    pub k: u64,
    pub r: u64,
}

/// Rigid iff `k < r`. Smooth points have no rigidity data.
pub fn is_qg_rigid(s: NormalizedCqs) -> Option<Rigidity> {
    if s.is_smooth() {
        return None;
    }
    let k = gcd(s.m(), s.q() + 1);
    let r = s.m() / k;
    Some(Rigidity { rigid: k < r, k, r })
}
