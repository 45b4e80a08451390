//! Verdicts for every well-formed sorted triple in a box.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::density::{census, DensityCensus};
use crate::error::{Error, Result};
use crate::fraction::Fraction;
use crate::wps::{degeneration_verdict, Outcome, Reason, WpsTriple};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRecord {
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub outcome: Outcome,
    pub reasons: Vec<Reason>,
    pub mld: Fraction,
    pub k2: Fraction,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanSummary {
    pub triples: u64,
    pub no_degenerations: u64,
    pub out_of_scope: u64,
    pub census: DensityCensus,
}

/// Records for `a <= b <= c <= n` with pairwise coprime entries, ordered
/// lexicographically regardless of `jobs`.
pub fn scan_records(n: u64, jobs: usize) -> Result<Vec<ScanRecord>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::WorkerPool(e.to_string()))?;
    let chunks: Vec<Vec<ScanRecord>> = pool.install(|| {
        (1..=n)
            .into_par_iter()
            .map(|a| records_with_first(a, n))
            .collect()
    });
    Ok(chunks.into_iter().flatten().collect())
}

fn records_with_first(a: u64, n: u64) -> Vec<ScanRecord> {
    let mut out = Vec::new();
    for b in a..=n {
        for c in b..=n {
            let p = WpsTriple { a, b, c };
            if !p.is_well_formed() {
                continue;
            }
            let v = degeneration_verdict(&p);
            out.push(ScanRecord {
                a,
                b,
                c,
                outcome: v.outcome,
                reasons: v.reasons,
                mld: v.mld.expect("well-formed triples have an mld"),
                k2: v.k2,
            });
        }
    }
    out
}

pub fn summarize(n: u64, records: &[ScanRecord]) -> ScanSummary {
    let no_degenerations = records
        .iter()
        .filter(|r| r.outcome == Outcome::NoNontrivialDegenerations)
        .count() as u64;
    ScanSummary {
        triples: records.len() as u64,
        no_degenerations,
        out_of_scope: records.len() as u64 - no_degenerations,
        census: census(n),
    }
}
