//! Ideals of vertex covers for edge ideals of graphs with loops.
//!
//! The crate computes `I_c(G)` for a graph `G` with loops by three
//! independent routes, checks it for linear quotients, derives graded
//! invariants of `R/I_c(G)` and Cohen-Macaulay verdicts, and answers the
//! minimum-patrol question (smallest minimal vertex covers). K′-type graphs,
//! a complete graph on block centers with a star hanging off each center, get
//! a closed-form route that scales past the enumeration limits.

pub mod cli;
pub mod cover;
pub mod error;
pub mod graph;
pub mod invariants;
pub mod monomial;
pub mod quotient;

pub use cover::{
    complete_cover_ideal, cover_ideal_by_intersection, cover_ideal_from_covers,
    kprime_cover_ideal, min_patrols, minimal_covers_bruteforce, star_cover_ideal, Cover,
    CoverRoute, PatrolSolution, PatrolSource,
};
pub use error::{Error, Result};
pub use graph::{KPrimeSpec, LoopGraph};
pub use invariants::{
    cm_by_loop_saturation, h_of, invariants, is_cohen_macaulay, reg_bounds_kprime,
    CmSaturationVerdict, InvariantReport, InvariantRoute, RegInterval,
};
pub use monomial::{minimalize, Monomial, MonomialIdeal};
pub use quotient::{
    canonical_order, check_linear_quotients, find_linear_order, q_of, resolution_shifts,
    QuotientCertificate, ResolutionShifts,
};
