//! Mechanical replay of the combinatorial skeleton of the holomorphy proof:
//! per-factor pole windows, rank-one pole budgets, distinctness and
//! domination inequalities, and the alpha-matching identity. A true verdict
//! witnesses that every inequality the proof reduces to holds for the given
//! parameters; the cited analytic inputs are axioms of this model.

use serde_json::{json, Value};

use crate::halfint::HalfInt;
use crate::lfactor::PoleMultiset;
use crate::normalization::{alpha_factor_in_decomposition, alpha_matching_holds};
use crate::speh::{rank_one_factors, segment_exponents, InductionProblem};

/// A half-open interval `[lo, hi)` of admissible pole locations in `w = 2s`
/// coordinates. Admissible points step by one from `lo`, so the lattice sits
/// in whichever parity class the endpoints occupy; half-integer windows occur
/// when `c + d` is odd.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Window {
    pub lo: HalfInt,
    pub hi_exclusive: HalfInt,
}

impl Window {
    pub fn contains(&self, w: HalfInt) -> bool {
        self.lo <= w && w < self.hi_exclusive
    }

    pub fn admissible_points(&self) -> Vec<HalfInt> {
        let mut pts = Vec::new();
        let mut w = self.lo;
        while w < self.hi_exclusive {
            pts.push(w);
            w += HalfInt::ONE;
        }
        pts
    }
}

/// The window `[shift - (c+d)/2, shift - |c-d|/2)` of possible pole locations
/// for a normalized operator between height-`c` and height-`d` Speh factors.
pub fn mw_pole_window(c: u32, d: u32, shift: HalfInt) -> Window {
    let half_sum = HalfInt::from_doubled(c as i64 + d as i64);
    let half_diff = HalfInt::from_doubled((c as i64 - d as i64).abs());
    Window {
        lo: shift - half_sum,
        hi_exclusive: shift - half_diff,
    }
}

/// One row of the certificate ledger: the decomposition slot, its pole
/// window, the smallest rank-one pole location for the slot, the per-slot
/// alpha pole locations and the named inequality checks.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LedgerEntry {
    pub j2: HalfInt,
    pub window: Window,
    pub rank_one_floor: HalfInt,
    pub alpha_pole_locations: Vec<HalfInt>,
    pub checks: Vec<(&'static str, bool)>,
}

impl LedgerEntry {
    pub fn all_checks_pass(&self) -> bool {
        self.checks.iter().all(|&(_, ok)| ok)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "j2": self.j2.to_string(),
            "window": [self.window.lo.to_string(), self.window.hi_exclusive.to_string()],
            "floor": self.rank_one_floor.to_string(),
            "alpha_poles": self.alpha_pole_locations.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
            "checks": self.checks.iter().map(|&(name, ok)| (name.to_owned(), json!(ok))).collect::<serde_json::Map<_, _>>(),
        })
    }
}

/// The machine-checkable ledger replaying the proof inequalities for one
/// induction problem.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HolomorphyCertificate {
    pub problem: InductionProblem,
    pub entries: Vec<LedgerEntry>,
    pub supercuspidal_distinctness: bool,
    pub alpha_matching: bool,
    pub verdict: bool,
}

impl HolomorphyCertificate {
    pub fn to_json(&self) -> Value {
        json!({
            "problem": self.problem.to_json(),
            "entries": self.entries.iter().map(|e| e.to_json()).collect::<Vec<_>>(),
            "supercuspidal_distinctness": self.supercuspidal_distinctness,
            "alpha_matching": self.alpha_matching,
            "verdict": self.verdict,
        })
    }
}

/// Replays the supercuspidal-case argument for heights `(c, d)`: each slot
/// `j2` of the second factor carries the designated pole candidate
/// `w0 = j2 - (c+1)/2`; the candidate must lie in the slot's window, no
/// rank-one factor may reinforce it (simplicity), and the candidates must be
/// pairwise distinct across slots.
pub fn certify_supercuspidal(c: u32, d: u32) -> HolomorphyCertificate {
    let problem = InductionProblem::new(1, 1, c, d);
    let half_c_plus_1 = HalfInt::from_doubled(c as i64 + 1);
    let left_segment = segment_exponents(c);
    let mut candidates: Vec<HalfInt> = Vec::new();
    let mut entries = Vec::new();
    for j2 in segment_exponents(d).iter_expanded() {
        let window = mw_pole_window(c, 1, j2);
        let w0 = j2 - half_c_plus_1;
        candidates.push(w0);
        let no_reinforcement = left_segment.iter_expanded().all(|j1| w0 < j2 - j1);
        let alpha_pole_locations: Vec<HalfInt> = alpha_factor_in_decomposition(&problem, j2)
            .pole_part()
            .support()
            .collect();
        entries.push(LedgerEntry {
            j2,
            window,
            rank_one_floor: w0,
            alpha_pole_locations,
            checks: vec![
                ("candidate_in_window", window.contains(w0)),
                ("no_rank_one_reinforcement", no_reinforcement),
            ],
        });
    }
    candidates.sort();
    let supercuspidal_distinctness = candidates.windows(2).all(|w| w[0] != w[1]);
    let alpha_matching = alpha_matching_holds(&problem);
    let verdict = supercuspidal_distinctness
        && alpha_matching
        && entries.iter().all(LedgerEntry::all_checks_pass);
    HolomorphyCertificate {
        problem,
        entries,
        supercuspidal_distinctness,
        alpha_matching,
        verdict,
    }
}

/// Replays the discrete-series argument: for each slot `j2` of the shorter
/// segment the pole window `[j2 - (a-1)/2 - (c+d)/2, j2 - (a-1)/2 - |c-d|/2)`
/// must close exactly at the rank-one floor, the floor must sit below every
/// rank-one pole threshold, and the per-slot alpha factors must multiply back
/// to the global alpha. Segment roles are swapped internally when `a < b`.
pub fn certify_discrete(p: &InductionProblem) -> HolomorphyCertificate {
    let q = if p.a >= p.b { *p } else { p.swap_segments() };
    let half_a_minus_1 = HalfInt::from_doubled(q.a as i64 - 1);
    let half_diff_cd = HalfInt::from_doubled((q.c as i64 - q.d as i64).abs());
    let left_segment = segment_exponents(q.a);
    let mut entries = Vec::new();
    for j2 in segment_exponents(q.b).iter_expanded() {
        let base = j2 - half_a_minus_1;
        let window = mw_pole_window(q.c, q.d, base);
        let floor = base - half_diff_cd;
        let floor_minimal = left_segment
            .iter_expanded()
            .all(|j1| floor <= j2 - j1 - half_diff_cd);
        let alpha_pole_locations: Vec<HalfInt> = alpha_factor_in_decomposition(&q, j2)
            .pole_part()
            .support()
            .collect();
        entries.push(LedgerEntry {
            j2,
            window,
            rank_one_floor: floor,
            alpha_pole_locations,
            checks: vec![
                ("window_closes_at_rank_one_floor", window.hi_exclusive == floor),
                ("floor_below_rank_one_poles", floor_minimal),
            ],
        });
    }
    let alpha_matching = alpha_matching_holds(p);
    let verdict = alpha_matching && entries.iter().all(LedgerEntry::all_checks_pass);
    HolomorphyCertificate {
        problem: *p,
        entries,
        supercuspidal_distinctness: true,
        alpha_matching,
        verdict,
    }
}

/// Upper bound for the pole order of the non-normalized operator: at each
/// location, the number of rank-one factors whose pole sits there.
pub fn pole_budget(p: &InductionProblem) -> PoleMultiset {
    rank_one_factors(p)
        .iter()
        .map(|f| (f.pole_location(), 1))
        .collect()
}
