//! Exceptional families of weight triples.
//!
//! Family A: some permutation `(a', b', c')` has `b' + c' = 0 mod a'`, i.e.
//! the point `1/a'(b', c')` is Du Val or smooth.
//!
//! Families B1, B2, B3 share the shape `(1 + l s, o + k s, s)` with
//!
//! | family | s        | o        | bound on l, k          |
//! |--------|----------|----------|------------------------|
//! | B1     | 4n - 4   | 2n - 1   | n - 1                  |
//! | B2     | 6n - 5   | 3n - 1   | ceil(4(6n - 5) / 9)    |
//! | B3     | 6n - 7   | 3n - 2   | ceil(4(6n - 7) / 9)    |
//!
//! for `n >= 2` and `0 <= l, k < bound`. Membership is up to permutation.
//! Neither family requires the triple to be well formed.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::WpsTriple;

/// Index permutations in lexicographic order.
pub const PERMUTATIONS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

/// `(b + c) % a == 0` for some choice of the distinguished entry.
pub fn in_family_a(a: u64, b: u64, c: u64) -> bool {
    divides_sum(a, b, c) || divides_sum(b, a, c) || divides_sum(c, a, b)
}

fn divides_sum(x: u64, y: u64, z: u64) -> bool {
    (y as u128 + z as u128).is_multiple_of(x as u128)
}

/// The first `(a', b', c')` among `(a,b,c)`, `(b,a,c)`, `(c,a,b)` with
/// `b' + c' = 0 mod a'`.
pub fn family_a_member(p: &WpsTriple) -> Option<[u64; 3]> {
    let (a, b, c) = (p.a, p.b, p.c);
    [[a, b, c], [b, a, c], [c, a, b]]
        .into_iter()
        .find(|w| divides_sum(w[0], w[1], w[2]))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BFamily {
    B1,
    B2,
    B3,
}

impl BFamily {
    pub const ALL: [BFamily; 3] = [BFamily::B1, BFamily::B2, BFamily::B3];

    /// The step `s`, which is also the third coordinate.
    pub fn step(self, n: u64) -> u64 {
        match self {
            BFamily::B1 => 4 * n - 4,
            BFamily::B2 => 6 * n - 5,
            BFamily::B3 => 6 * n - 7,
        }
    }

    pub fn offset(self, n: u64) -> u64 {
        match self {
            BFamily::B1 => 2 * n - 1,
            BFamily::B2 => 3 * n - 1,
            BFamily::B3 => 3 * n - 2,
        }
    }

    /// Exclusive upper bound shared by `l` and `k`.
    pub fn param_bound(self, n: u64) -> u64 {
        match self {
            BFamily::B1 => n - 1,
            BFamily::B2 | BFamily::B3 => (4 * self.step(n)).div_ceil(9),
        }
    }

    /// The `n` whose step equals `s`, if any with `n >= 2`.
    pub fn n_for_step(self, s: u64) -> Option<u64> {
        let (num, den) = match self {
            BFamily::B1 => (s.checked_add(4)?, 4),
            BFamily::B2 => (s.checked_add(5)?, 6),
            BFamily::B3 => (s.checked_add(7)?, 6),
        };
        (num % den == 0 && num / den >= 2).then_some(num / den)
    }

    /// `(1 + l s, o + k s, s)` when the parameters are admissible.
    pub fn instantiate(self, n: u64, l: u64, k: u64) -> Option<[u64; 3]> {
        if n < 2 {
            return None;
        }
        let bound = self.param_bound(n);
        if l >= bound || k >= bound {
            return None;
        }
        let s = self.step(n);
        let first = l.checked_mul(s)?.checked_add(1)?;
        let second = k.checked_mul(s)?.checked_add(self.offset(n))?;
        Some([first, second, s])
    }

    /// Solves `(x, y, z) = (1 + l s, o + k s, s)` for `(n, l, k)`.
    pub fn solve(self, x: u64, y: u64, z: u64) -> Option<(u64, u64, u64)> {
        let n = self.n_for_step(z)?;
        let s = z;
        let o = self.offset(n);
        if x < 1 || !(x - 1).is_multiple_of(s) || y < o || !(y - o).is_multiple_of(s) {
            return None;
        }
        let (l, k) = ((x - 1) / s, (y - o) / s);
        let bound = self.param_bound(n);
        (l < bound && k < bound).then_some((n, l, k))
    }
}

impl fmt::Display for BFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

/// `input[permutation[i]] == family.instantiate(n, l, k)[i]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BWitness {
    pub family: BFamily,
    pub n: u64,
    pub l: u64,
    pub k: u64,
    pub permutation: [usize; 3],
}

impl BWitness {
    /// Rebuilds the triple the witness was found for, in its original order.
    pub fn reconstruct(&self) -> Option<[u64; 3]> {
        let params = self.family.instantiate(self.n, self.l, self.k)?;
        let mut out = [0u64; 3];
        for (i, &pos) in self.permutation.iter().enumerate() {
            out[pos] = params[i];
        }
        Some(out)
    }
}

/// First match in family order, then lexicographic permutation order.
pub fn family_b_member(p: &WpsTriple) -> Option<BWitness> {
    let w = p.weights();
    for family in BFamily::ALL {
        for perm in PERMUTATIONS {
            if let Some((n, l, k)) = family.solve(w[perm[0]], w[perm[1]], w[perm[2]]) {
                return Some(BWitness {
                    family,
                    n,
                    l,
                    k,
                    permutation: perm,
                });
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wps(a: u64, b: u64, c: u64) -> WpsTriple {
        WpsTriple::new(a, b, c).unwrap()
    }

    #[test]
    fn family_a_examples() {
        assert_eq!(family_a_member(&wps(2, 3, 5)), Some([2, 3, 5]));
        assert_eq!(family_a_member(&wps(1, 17, 40)), Some([1, 17, 40]));
        assert_eq!(family_a_member(&wps(17, 1, 40)), Some([1, 17, 40]));
        assert_eq!(family_a_member(&wps(4, 25, 841)), None);
        assert!(in_family_a(2, 2, 2));
        assert!(!in_family_a(4, 25, 841));
    }

    #[test]
    fn family_b_examples() {
        let w = family_b_member(&wps(1, 5, 8)).unwrap();
        assert_eq!((w.family, w.n, w.l, w.k), (BFamily::B1, 3, 0, 0));
        let w = family_b_member(&wps(9, 5, 8)).unwrap();
        assert_eq!((w.family, w.n, w.l, w.k), (BFamily::B1, 3, 1, 0));
        assert_eq!(w.reconstruct(), Some([9, 5, 8]));
        assert_eq!(family_b_member(&wps(4, 25, 841)), None);
    }

    #[test]
    fn permuted_input_reconstructs() {
        let w = family_b_member(&wps(8, 9, 5)).unwrap();
        assert_eq!(w.reconstruct(), Some([8, 9, 5]));
        assert_eq!(w.permutation, [1, 2, 0]);
    }

    #[test]
    fn b2_b3_small_members() {
        // B2 at n = 2: (1 + 7l, 5 + 7k, 7) with l, k < 4
        assert_eq!(BFamily::B2.param_bound(2), 4);
        assert_eq!(BFamily::B2.instantiate(2, 0, 1), Some([1, 12, 7]));
        assert_eq!(BFamily::B2.instantiate(2, 4, 0), None);
        // B3 at n = 2: (1 + 5l, 4 + 5k, 5) with l, k < 3
        assert_eq!(BFamily::B3.param_bound(2), 3);
        let w = family_b_member(&wps(11, 14, 5)).unwrap();
        assert_eq!((w.family, w.n, w.l, w.k), (BFamily::B3, 2, 2, 2));
        // l = 3 is just outside the B3 bound at n = 2
        assert_eq!(family_b_member(&wps(16, 4, 5)), None);
    }

    #[test]
    fn bounds() {
        assert_eq!(BFamily::B1.param_bound(3), 2);
        assert_eq!(BFamily::B2.param_bound(3), 6); // ceil(52/9)
        assert_eq!(BFamily::B3.param_bound(3), 5); // ceil(44/9)
        assert_eq!(BFamily::B1.n_for_step(3), None);
        assert_eq!(BFamily::B1.n_for_step(0), None);
        assert_eq!(BFamily::B3.n_for_step(5), Some(2));
    }
}
