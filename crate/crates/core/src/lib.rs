//! Exact symbolic calculator and certificate checker for the reducibility of
//! parabolically induced products of two Speh representations of p-adic
//! general linear groups.
//!
//! The crate works entirely with factored products of local L-factors in the
//! spectral variable `w = 2s` over the exact half-integers. On top of that
//! algebra it builds the intertwining-operator normalization factors, a
//! classifier for the candidate reducibility locus with per-point
//! certification tiers, and a mechanical certificate replaying the
//! combinatorial inequalities behind the holomorphy statement for the
//! normalized operator.

pub mod certify;
pub mod classify;
mod error;
pub mod halfint;
pub mod lfactor;
pub mod normalization;
pub mod speh;
pub mod sweep;

pub use certify::{
    certify_discrete, certify_supercuspidal, mw_pole_window, pole_budget, HolomorphyCertificate,
    LedgerEntry, Window,
};
pub use classify::{
    candidate_points, classify, coprime_bruteforce, coprime_closed_form, dual_coprime_bruteforce,
    dual_coprime_closed_form, exceptional_points, pole_matrix, MatrixEntry, MatrixKind,
    PointVerdict, PoleMatrix, Tier,
};
pub use error::Error;
pub use halfint::HalfInt;
pub use lfactor::{common_pole_part, LFactorProduct, PoleMultiset};
pub use normalization::{
    alpha, alpha_decomposition_product, alpha_factor_in_decomposition, alpha_matching_holds, beta,
    c_psi, gamma, gamma_rank_one_oracle, CPsi,
};
pub use speh::{
    cuspidal_support, rank_one_factors, segment_exponents, ExponentMultiset, InductionProblem,
    RankOneFactor,
};
pub use sweep::{
    sweep_row, sweep_rows, sweep_rows_sequential, SweepFilter, SweepRow, SweepSpec,
    SWEEP_PARAM_MAX,
};

#[cfg(feature = "parallel")]
pub use sweep::sweep_rows_parallel;
