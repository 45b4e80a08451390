//! Shared inputs for the benchmarks.

use degenscope_core::arith::gcd;
use degenscope_core::{NormalizedCqs, WpsTriple};

/// Every normalized germ `1/m(1,q)` with `lo <= m < hi`.
pub fn germs(lo: u64, hi: u64) -> Vec<NormalizedCqs> {
    (lo.max(2)..hi)
        .flat_map(|m| {
            (1..m)
                .filter(move |&q| gcd(m, q) == 1)
                .map(move |q| NormalizedCqs::new(m, q).unwrap())
        })
        .collect()
}

/// Squared Markov triples with `a >= 2`, the planes without degenerations.
pub fn markov_planes() -> Vec<WpsTriple> {
    [
        (2u64, 5u64, 29u64),
        (2, 29, 169),
        (2, 169, 985),
        (5, 13, 194),
        (5, 29, 433),
    ]
    .iter()
    .map(|&(a, b, c)| WpsTriple::new(a * a, b * b, c * c).unwrap())
    .collect()
}

/// Well-formed sorted triples in `[1, n]^3`.
pub fn box_triples(n: u64) -> Vec<WpsTriple> {
    let mut out = Vec::new();
    for a in 1..=n {
        for b in a..=n {
            for c in b..=n {
                let p = WpsTriple::new(a, b, c).unwrap();
                if p.is_well_formed() {
                    out.push(p);
                }
            }
        }
    }
    out
}
