//! Two-dimensional cyclic quotient singularities.
//!
//! A germ `1/m(w1, w2)` is the quotient of the plane by the cyclic group of
//! order `m` acting with weights `(w1, w2)`. Every germ is isomorphic to a
//! normal form `1/m(1, q)`; the same singularity is also `1/m(1, q')` with
//! `q q' = 1 mod m`, which is the resolution chain read backwards.
//!
//! Everything here is exact integer arithmetic. Smooth points (`m = 1`) are
//! ordinary values so that weight-one entries of a weighted plane need no
//! special casing downstream.

mod basket;
mod chain;
mod mld;
mod tsing;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{gcd, mod_inverse, mul_mod};
use crate::error::{Error, Result};

pub use basket::{basket_membership, Basket, BasketTag};
pub use chain::{hj_eval, hj_expand, HjChain};
pub use mld::{mld_brute, mld_resolution, mld_upper_bound, DEFAULT_MLD_LIMIT};
pub use tsing::{classify_t, is_qg_rigid, milnor_mu, Rigidity, TData};

/// `1/m(w1, w2)` with weights stored reduced mod `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CqsGerm {
    m: u64,
    w1: u64,
    w2: u64,
}

impl CqsGerm {
    pub fn new(m: u64, w1: i64, w2: i64) -> Result<Self> {
        let invalid = Error::InvalidGerm { m, w1, w2 };
        if m == 0 {
            return Err(invalid);
        }
        let r1 = (w1 as i128).rem_euclid(m as i128) as u64;
        let r2 = (w2 as i128).rem_euclid(m as i128) as u64;
        if gcd(r1, m) != 1 || gcd(r2, m) != 1 {
            return Err(invalid);
        }
        Ok(CqsGerm { m, w1: r1, w2: r2 })
    }

    /// Builds a germ from weights that are already non-negative.
    pub fn from_unsigned(m: u64, w1: u64, w2: u64) -> Result<Self> {
        let invalid = || Error::InvalidGerm {
            m,
            w1: w1 as i64,
            w2: w2 as i64,
        };
        if m == 0 {
            return Err(invalid());
        }
        let (r1, r2) = (w1 % m, w2 % m);
        if gcd(r1, m) != 1 || gcd(r2, m) != 1 {
            return Err(invalid());
        }
        Ok(CqsGerm { m, w1: r1, w2: r2 })
    }

    pub fn order(&self) -> u64 {
        self.m
    }

    pub fn weights(&self) -> (u64, u64) {
        (self.w1, self.w2)
    }

    pub fn is_smooth(&self) -> bool {
        self.m == 1
    }

    /// The same germ with the two weights exchanged.
    pub fn swapped(&self) -> Self {
        CqsGerm {
            m: self.m,
            w1: self.w2,
            w2: self.w1,
        }
    }
}

impl fmt::Display for CqsGerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "1/{}({},{})", self.m, self.w1, self.w2)
    }
}

/// Normal form `1/m(1, q)`; `m = 1, q = 0` marks a smooth point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct NormalizedCqs {
    m: u64,
    q: u64,
}

impl NormalizedCqs {
    pub fn new(m: u64, q: u64) -> Result<Self> {
        if m == 1 && q == 0 {
            return Ok(Self::smooth());
        }
        if m < 2 || q == 0 || q >= m || gcd(m, q) != 1 {
            return Err(Error::InvalidNormalized { m, q });
        }
        Ok(NormalizedCqs { m, q })
    }

    pub const fn smooth() -> Self {
        NormalizedCqs { m: 1, q: 0 }
    }

    /// The Wahl singularity `1/n^2(1, n a - 1)`.
    pub fn wahl(n: u64, a: u64) -> Result<Self> {
        let m = n.checked_mul(n).ok_or(Error::Overflow("wahl order"))?;
        Self::new(m, n * a - 1)
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn is_smooth(&self) -> bool {
        self.m == 1
    }

    /// True when both denote the same singularity, i.e. `q' = q` or `q q' = 1 mod m`.
    pub fn same_singularity(&self, other: &NormalizedCqs) -> bool {
        self.m == other.m && (self.q == other.q || mul_mod(self.q, other.q, self.m) == 1 % self.m)
    }

    /// Representative with the smaller of `q` and `q^-1`.
    pub fn canonical(&self) -> Self {
        let r = reverse_type(*self);
        if r.q < self.q {
            r
        } else {
            *self
        }
    }

    pub fn as_germ(&self) -> CqsGerm {
        CqsGerm {
            m: self.m,
            w1: 1 % self.m,
            w2: self.q,
        }
    }

    pub fn chain(&self) -> HjChain {
        if self.is_smooth() {
            HjChain::empty()
        } else {
            hj_expand(self.m, self.q).expect("normalized germs have valid chains")
        }
    }
}

impl fmt::Display for NormalizedCqs {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_smooth() {
            write!(f, "smooth")
        } else {
            write!(f, "1/{}(1,{})", self.m, self.q)
        }
    }
}

/// `1/m(w1, w2) -> 1/m(1, w1^-1 w2)`.
pub fn normalize(germ: &CqsGerm) -> NormalizedCqs {
    if germ.m == 1 {
        return NormalizedCqs::smooth();
    }
    let inv = mod_inverse(germ.w1, germ.m).expect("germ weights are units");
    NormalizedCqs {
        m: germ.m,
        q: mul_mod(inv, germ.w2, germ.m),
    }
}

/// The same germ read from the other end of its chain: `q -> q^-1 mod m`.
pub fn reverse_type(s: NormalizedCqs) -> NormalizedCqs {
    if s.is_smooth() {
        return s;
    }
    let inv = mod_inverse(s.q, s.m).expect("q is a unit mod m");
    NormalizedCqs { m: s.m, q: inv }
}

/// `m / gcd(m, q + 1)`; one for smooth and Du Val points.
pub fn gorenstein_index(s: NormalizedCqs) -> u64 {
    if s.is_smooth() {
        return 1;
    }
    s.m / gcd(s.m, s.q + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ncqs(m: u64, q: u64) -> NormalizedCqs {
        NormalizedCqs::new(m, q).unwrap()
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(normalize(&CqsGerm::new(7, 3, 5).unwrap()), ncqs(7, 4));
        assert_eq!(normalize(&CqsGerm::new(11, 1, 3).unwrap()), ncqs(11, 3));
        assert_eq!(normalize(&CqsGerm::new(4, 25, 841).unwrap()), ncqs(4, 1));
        assert_eq!(
            normalize(&CqsGerm::new(1, 0, 0).unwrap()),
            NormalizedCqs::smooth()
        );
        assert_eq!(normalize(&CqsGerm::new(5, -1, 2).unwrap()), ncqs(5, 3));
    }

    #[test]
    fn rejects_non_units() {
        assert!(CqsGerm::new(4, 2, 1).is_err());
        assert!(CqsGerm::new(9, 1, 3).is_err());
        assert!(CqsGerm::new(0, 1, 1).is_err());
        assert!(NormalizedCqs::new(6, 3).is_err());
        assert!(NormalizedCqs::new(5, 5).is_err());
        assert!(NormalizedCqs::new(5, 0).is_err());
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(reverse_type(ncqs(7, 2)), ncqs(7, 4));
        assert_eq!(reverse_type(ncqs(25, 9)), ncqs(25, 14));
        assert_eq!(reverse_type(ncqs(13, 12)), ncqs(13, 12));
        assert_eq!(
            reverse_type(NormalizedCqs::smooth()),
            NormalizedCqs::smooth()
        );
    }

    #[test]
    fn gorenstein_examples() {
        assert_eq!(gorenstein_index(ncqs(25, 9)), 5);
        assert_eq!(gorenstein_index(ncqs(12, 7)), 3);
        assert_eq!(gorenstein_index(ncqs(17, 16)), 1);
        assert_eq!(gorenstein_index(NormalizedCqs::smooth()), 1);
    }

    #[test]
    fn same_singularity_up_to_reversal() {
        assert!(ncqs(16, 3).same_singularity(&ncqs(16, 11)));
        assert!(!ncqs(16, 3).same_singularity(&ncqs(16, 5)));
        assert_eq!(ncqs(16, 11).canonical(), ncqs(16, 3));
    }
}
