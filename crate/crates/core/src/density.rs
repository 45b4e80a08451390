//! Counting the exceptional set `S = A u B1 u B2 u B3` inside `[1,N]^3`.
//!
//! Counts are over ordered triples: a triple is counted when its sorted form
//! lies in the family. Family A is counted in `O(N^2 log N)` by fixing the
//! first two entries and counting admissible third entries in closed form.

use std::collections::BTreeSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::gcd;
use crate::fraction::Fraction;
use crate::wps::families::in_family_a;
use crate::wps::BFamily;

/// `#{c in [1, n] : c = r mod m}` for `0 <= r < m`.
fn count_residue(r: u64, m: u64, n: u64) -> u64 {
    let first = if r == 0 { m } else { r };
    if first > n {
        0
    } else {
        (n - first) / m + 1
    }
}

fn divisor_table(max: usize) -> Vec<Vec<u32>> {
    let mut table = vec![Vec::new(); max + 1];
    for d in 1..=max {
        for mult in (d..=max).step_by(d) {
            table[mult].push(d as u32);
        }
    }
    table
}

/// Ordered `(a, b, c)` in `[1, n]^3` with `a | b + c`, `b | a + c` or `c | a + b`.
pub fn count_family_a(n: u64) -> u64 {
    let divisors = divisor_table(2 * n as usize);
    (1..=n)
        .into_par_iter()
        .map(|a| {
            let mut total = 0u64;
            for b in 1..=n {
                // X: c = -b mod a,  Y: c = -a mod b,  X n Y: c = -(a+b) mod lcm(a,b)
                let x = count_residue((a - b % a) % a, a, n);
                let y = count_residue((b - a % b) % b, b, n);
                let l = a / gcd(a, b) * b;
                let xy = count_residue((l - (a + b) % l) % l, l, n);
                let mut z = 0;
                for &d in &divisors[(a + b) as usize] {
                    let d = d as u64;
                    if d > n {
                        break;
                    }
                    if !(d + b).is_multiple_of(a) && !(d + a).is_multiple_of(b) {
                        z += 1;
                    }
                }
                total += x + y - xy + z;
            }
            total
        })
        .sum()
}

/// Ordered `(a, b, c)` in `[1, n]^3` with `a | b + c`.
pub fn count_single_role_a(n: u64) -> u64 {
    (1..=n)
        .into_par_iter()
        .map(|a| {
            (0..a)
                .map(|r| count_residue(r, a, n) * count_residue((a - r) % a, a, n))
                .sum::<u64>()
        })
        .sum()
}

/// `sum_{a <= n} a (ceil(n/a) + 1)^2`.
pub fn single_role_bound(n: u64) -> u128 {
    (1..=n as u128)
        .map(|a| {
            let t = (n as u128).div_ceil(a) + 1;
            a * t * t
        })
        .sum()
}

/// Sorted members of one B-family with every entry at most `n`.
pub fn family_b_members(family: BFamily, n: u64) -> BTreeSet<[u64; 3]> {
    let mut out = BTreeSet::new();
    for param in 2.. {
        let s = family.step(param);
        if s > n {
            break;
        }
        let o = family.offset(param);
        let bound = family.param_bound(param);
        for l in (0..bound).take_while(|l| l * s < n) {
            for k in (0..bound).take_while(|k| o + k * s <= n) {
                let mut t = [1 + l * s, o + k * s, s];
                t.sort_unstable();
                out.insert(t);
            }
        }
    }
    out
}

/// Number of distinct orderings of a sorted triple.
pub fn permutation_count(t: &[u64; 3]) -> u64 {
    match (t[0] == t[1], t[1] == t[2]) {
        (true, true) => 1,
        (false, false) => 6,
        _ => 3,
    }
}

/// Ordered count of one B-family in `[1, n]^3`.
pub fn count_family_b(family: BFamily, n: u64) -> u64 {
    family_b_members(family, n)
        .iter()
        .map(permutation_count)
        .sum()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub name: String,
    pub holds: bool,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DensityCensus {
    #[serde(rename = "N")]
    pub n: u64,
    pub count_a: u64,
    pub count_b1: u64,
    pub count_b2: u64,
    pub count_b3: u64,
    /// Sorted-triple counts of B1, B2, B3.
    pub unordered_b: [u64; 3],
    pub count_s: u64,
    pub ratio: Fraction,
    pub bound_checks: Vec<BoundCheck>,
}

pub fn census(n: u64) -> DensityCensus {
    let count_a = count_family_a(n);
    let members = BFamily::ALL.map(|f| family_b_members(f, n));
    let ordered = members
        .each_ref()
        .map(|m| m.iter().map(permutation_count).sum::<u64>());
    let union: BTreeSet<&[u64; 3]> = members.iter().flatten().collect();
    let outside_a: u64 = union
        .into_iter()
        .filter(|t| !in_family_a(t[0], t[1], t[2]))
        .map(permutation_count)
        .sum();
    let count_s = count_a + outside_a;
    let cube = n as u128 * n as u128 * n as u128;

    let single = count_single_role_a(n);
    let single_rhs = single_role_bound(n);
    let six_n_three_halves = format!("{:.3}", 6.0 * (n as f64).powf(1.5));
    let b1_check = |name: &str, count: u64| BoundCheck {
        name: name.to_string(),
        holds: (count as u128) * (count as u128) < 36 * cube,
        lhs: count.to_string(),
        rhs: six_n_three_halves.clone(),
    };
    let bound_checks = vec![
        BoundCheck {
            name: "single-role A count <= sum a(ceil(N/a)+1)^2".into(),
            holds: single as u128 <= single_rhs,
            lhs: single.to_string(),
            rhs: single_rhs.to_string(),
        },
        b1_check("ordered B1 count < 6 N^(3/2)", ordered[0]),
        b1_check("unordered B1 count < 6 N^(3/2)", members[0].len() as u64),
    ];

    DensityCensus {
        n,
        count_a,
        count_b1: ordered[0],
        count_b2: ordered[1],
        count_b3: ordered[2],
        unordered_b: members.each_ref().map(|m| m.len() as u64),
        count_s,
        ratio: Fraction::new(count_s, cube),
        bound_checks,
    }
}
