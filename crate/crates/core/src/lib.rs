//! Exact classification of cyclic quotient surface singularities and of the
//! Q-Gorenstein degenerations of weighted projective planes.
//!
//! All quantities are exact: germ data is integral, rationals are
//! [`Fraction`]s and Markov-type solutions use arbitrary precision.

pub mod arith;
pub mod cqs;
pub mod density;
pub mod error;
pub mod fraction;
pub mod markov;
pub mod scan;
pub mod wps;

pub use cqs::{
    basket_membership, classify_t, gorenstein_index, hj_eval, hj_expand, is_qg_rigid, milnor_mu,
    mld_brute, mld_resolution, mld_upper_bound, normalize, reverse_type, Basket, BasketTag,
    CqsGerm, HjChain, NormalizedCqs, Rigidity, TData, DEFAULT_MLD_LIMIT,
};
pub use density::{census, count_family_a, count_family_b, DensityCensus};
pub use error::{Error, Result};
pub use fraction::Fraction;
pub use markov::{
    classic_markov_enumerate, gen_descend, gen_solutions, partial_smoothing_candidates,
    toric_degenerations_of_p11n, CandidateKind, CentralFiberCandidate, GenSolution, MarkovTriple,
};
pub use wps::{
    degeneration_verdict, family_a_member, family_b_member, k2, noether_check, singular_points,
    wps_mld, BFamily, BWitness, NoetherCheck, Outcome, PointReport, Reason, Verdict, WpsTriple,
};
