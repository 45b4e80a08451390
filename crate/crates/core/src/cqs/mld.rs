//! Minimal log discrepancy of cyclic quotient germs.
//!
//! Two exact routes are provided:
//!
//! * [`mld_brute`] evaluates `min_t {t w1/m} + {t w2/m}` over `1 <= t < m`,
//!   which costs `O(m)`.
//! * [`mld_resolution`] walks the vertices of the Newton boundary, one per
//!   curve of the minimal resolution, and costs `O(chain length)`. The log
//!   discrepancy of the curve at vertex `v_i` is the coordinate sum of
//!   `v_i`, and `v_{i+1} = a_i v_i - v_{i-1}` with `a_i` the chain entries.
//!
//! Smooth points have mld 2.

use super::{CqsGerm, NormalizedCqs};
use crate::arith::mul_mod;
use crate::error::{Error, Result};
use crate::fraction::Fraction;

/// Largest order accepted by [`mld_brute`] unless the caller says otherwise.
pub const DEFAULT_MLD_LIMIT: u64 = 100_000_000;

pub fn mld_brute(germ: &CqsGerm, limit: u64) -> Result<Fraction> {
    let m = germ.order();
    if m == 1 {
        return Ok(Fraction::from_integer(2));
    }
    if m > limit {
        return Err(Error::MldLimitExceeded { m, limit });
    }
    let (w1, w2) = germ.weights();
    let best = (1..m)
        .map(|t| mul_mod(t, w1, m) as u128 + mul_mod(t, w2, m) as u128)
        .min()
        .expect("m >= 2");
    Ok(Fraction::new(best, m))
}

pub fn mld_resolution(s: NormalizedCqs) -> Fraction {
    if s.is_smooth() {
        return Fraction::from_integer(2);
    }
    let m = s.m() as i128;
    let chain = s.chain();
    // vertices scaled by m: v0 = (0, m), v1 = (1, q)
    let (mut prev, mut cur) = ((0i128, m), (1i128, s.q() as i128));
    let mut best = cur.0 + cur.1;
    for &a in &chain.entries()[..chain.len() - 1] {
        let a = a as i128;
        let next = (a * cur.0 - prev.0, a * cur.1 - prev.1);
        prev = cur;
        cur = next;
        best = best.min(cur.0 + cur.1);
    }
    debug_assert_eq!(
        chain.entries().last().map(|&a| a as i128 * cur.0 - prev.0),
        Some(m)
    );
    Fraction::new(best, m)
}

/// Pigeonhole estimate `1/T + T/m` for `1 <= T < m`.
///
/// This is the quantity used to argue that large-index points have small
/// mld. It is not a valid upper bound for every germ (Du Val points have
/// mld 1), so nothing in this crate relies on it for a decision.
pub fn mld_upper_bound(s: NormalizedCqs, t: u64) -> Result<Fraction> {
    if t == 0 || t >= s.m() {
        return Err(Error::InvalidBoundParameter { t, m: s.m() });
    }
    Ok(Fraction::new(1, t) + Fraction::new(t, s.m()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::gcd;
    use crate::cqs::reverse_type;

    fn germ(m: u64, w1: i64, w2: i64) -> CqsGerm {
        CqsGerm::new(m, w1, w2).unwrap()
    }

    fn ncqs(m: u64, q: u64) -> NormalizedCqs {
        NormalizedCqs::new(m, q).unwrap()
    }

    #[test]
    fn brute_examples() {
        let lim = DEFAULT_MLD_LIMIT;
        assert_eq!(mld_brute(&germ(8, 1, 5), lim).unwrap(), Fraction::new(1, 2));
        assert_eq!(mld_brute(&germ(3, 1, 2), lim).unwrap(), Fraction::one());
        assert_eq!(
            mld_brute(&germ(841, 1, 637), lim).unwrap(),
            Fraction::new(1, 29)
        );
        assert_eq!(
            mld_brute(&germ(1, 0, 0), lim).unwrap(),
            Fraction::from_integer(2)
        );
        assert_eq!(mld_brute(&germ(3, 1, 1), lim).unwrap(), Fraction::new(2, 3));
    }

    #[test]
    fn brute_limit() {
        assert_eq!(
            mld_brute(&germ(101, 1, 2), 100),
            Err(Error::MldLimitExceeded { m: 101, limit: 100 })
        );
        assert!(mld_brute(&germ(100, 1, 3), 100).is_ok());
    }

    #[test]
    fn resolution_matches_brute() {
        for m in 2..400u64 {
            for q in 1..m {
                if gcd(m, q) != 1 {
                    continue;
                }
                let s = ncqs(m, q);
                assert_eq!(
                    mld_resolution(s),
                    mld_brute(&s.as_germ(), DEFAULT_MLD_LIMIT).unwrap(),
                    "1/{m}(1,{q})"
                );
            }
        }
    }

    #[test]
    fn swap_invariance() {
        for (m, q) in [(25, 9), (12, 7), (841, 637), (97, 40)] {
            let s = ncqs(m, q);
            let brute = mld_brute(&s.as_germ(), DEFAULT_MLD_LIMIT).unwrap();
            assert_eq!(
                mld_brute(&s.as_germ().swapped(), DEFAULT_MLD_LIMIT).unwrap(),
                brute
            );
            assert_eq!(mld_resolution(reverse_type(s)), brute);
        }
    }

    #[test]
    fn upper_bound_values() {
        assert_eq!(
            mld_upper_bound(ncqs(841, 637), 12).unwrap(),
            Fraction::new(985, 10092)
        );
        assert!(mld_upper_bound(ncqs(145, 2), 12).unwrap() < Fraction::new(1, 6));
        assert!(mld_upper_bound(ncqs(144, 5), 12).unwrap() == Fraction::new(1, 6));
        assert_eq!(mld_upper_bound(ncqs(7, 3), 1).unwrap(), Fraction::new(8, 7));
        assert!(mld_upper_bound(ncqs(7, 3), 7).is_err());
        assert!(mld_upper_bound(ncqs(7, 3), 0).is_err());
    }

    #[test]
    fn upper_bound_is_not_universal() {
        // A4 has mld 1 while 1/2 + 2/5 < 1.
        let s = ncqs(5, 4);
        assert!(mld_resolution(s) > mld_upper_bound(s, 2).unwrap());
    }
}
