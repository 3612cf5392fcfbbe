//! Parameter sweeps over grids of induction problems.
//!
//! Rows are computed independently per problem (everything upstream is pure),
//! so the grid is evaluated with rayon when the `parallel` feature is on,
//! falling back to a sequential loop otherwise. Row order is lexicographic in
//! `(a, b, c, d)` regardless of the execution strategy.

#[cfg(feature = "parallel")]
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::certify::{certify_discrete, certify_supercuspidal};
use crate::classify::{
    candidate_points, coprime_bruteforce, coprime_closed_form, exceptional_points,
};
use crate::speh::InductionProblem;

pub const SWEEP_PARAM_MAX: u32 = 64;

/// Row filters applied after per-problem computation.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum SweepFilter {
    #[default]
    All,
    /// Keep only problems failing the closed-form co-primality criterion.
    OnlyNonCoprime,
    /// Keep only problems with a nonempty theorem-only point set.
    OnlyExceptional,
}

/// Inclusive parameter ranges for a sweep, plus the row filter.
#[derive(Clone, Debug)]
pub struct SweepSpec {
    pub a: (u32, u32),
    pub b: (u32, u32),
    pub c: (u32, u32),
    pub d: (u32, u32),
    pub filter: SweepFilter,
}

impl SweepSpec {
    /// The full cube `[1, max]^4` with no filter.
    pub fn cube(max: u32) -> Self {
        SweepSpec {
            a: (1, max),
            b: (1, max),
            c: (1, max),
            d: (1, max),
            filter: SweepFilter::All,
        }
    }

    pub fn validate(&self) -> Result<(), String> {
        for (name, (lo, hi)) in [("a", self.a), ("b", self.b), ("c", self.c), ("d", self.d)] {
            if lo < 1 || hi > SWEEP_PARAM_MAX {
                return Err(format!(
                    "range for {} must lie within [1, {}]",
                    name, SWEEP_PARAM_MAX
                ));
            }
            if lo > hi {
                return Err(format!("empty range for {}: {}..={}", name, lo, hi));
            }
        }
        Ok(())
    }

    /// All grid cells in lexicographic order.
    pub fn problems(&self) -> Vec<InductionProblem> {
        let mut out = Vec::new();
        for a in self.a.0..=self.a.1 {
            for b in self.b.0..=self.b.1 {
                for c in self.c.0..=self.c.1 {
                    for d in self.d.0..=self.d.1 {
                        out.push(InductionProblem::new(a, b, c, d));
                    }
                }
            }
        }
        out
    }
}

/// One sweep output row; column set is a frozen contract.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SweepRow {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub d: u32,
    pub coprime_closed: bool,
    pub coprime_brute: bool,
    pub candidates: usize,
    pub theorem_only: usize,
    pub certified: bool,
}

impl SweepRow {
    pub const CSV_HEADER: &'static str =
        "a,b,c,d,coprime_closed,coprime_brute,candidates,theorem_only,certified";

    pub fn csv_line(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{}",
            self.a,
            self.b,
            self.c,
            self.d,
            self.coprime_closed,
            self.coprime_brute,
            self.candidates,
            self.theorem_only,
            self.certified
        )
    }

    pub fn to_json(&self) -> Value {
        json!({
            "a": self.a,
            "b": self.b,
            "c": self.c,
            "d": self.d,
            "coprime_closed": self.coprime_closed,
            "coprime_brute": self.coprime_brute,
            "candidates": self.candidates,
            "theorem_only": self.theorem_only,
            "certified": self.certified,
        })
    }
}

/// Computes the row for one problem.
pub fn sweep_row(p: &InductionProblem) -> SweepRow {
    let mut certified = certify_discrete(p).verdict;
    if p.a == 1 && p.b == 1 {
        certified = certified && certify_supercuspidal(p.c, p.d).verdict;
    }
    SweepRow {
        a: p.a,
        b: p.b,
        c: p.c,
        d: p.d,
        coprime_closed: coprime_closed_form(p),
        coprime_brute: coprime_bruteforce(p),
        candidates: candidate_points(p).support_len(),
        theorem_only: exceptional_points(p).len(),
        certified,
    }
}

fn keep(row: &SweepRow, filter: SweepFilter) -> bool {
    match filter {
        SweepFilter::All => true,
        SweepFilter::OnlyNonCoprime => !row.coprime_closed,
        SweepFilter::OnlyExceptional => row.theorem_only > 0,
    }
}

/// Sequential evaluation of the grid.
pub fn sweep_rows_sequential(spec: &SweepSpec) -> Vec<SweepRow> {
    spec.problems()
        .iter()
        .map(sweep_row)
        .filter(|r| keep(r, spec.filter))
        .collect()
}

/// Data-parallel evaluation of the grid; row order matches the sequential
/// path.
#[cfg(feature = "parallel")]
pub fn sweep_rows_parallel(spec: &SweepSpec) -> Vec<SweepRow> {
    spec.problems()
        .par_iter()
        .map(sweep_row)
        .filter(|r| keep(r, spec.filter))
        .collect()
}

/// Evaluates the grid with the default strategy for the build configuration.
pub fn sweep_rows(spec: &SweepSpec) -> Vec<SweepRow> {
    #[cfg(feature = "parallel")]
    {
        sweep_rows_parallel(spec)
    }
    #[cfg(not(feature = "parallel"))]
    {
        sweep_rows_sequential(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cube_size_and_order() {
        let rows = sweep_rows(&SweepSpec::cube(3));
        assert_eq!(rows.len(), 81);
        let keys: Vec<_> = rows.iter().map(|r| (r.a, r.b, r.c, r.d)).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
    }

    #[test]
    fn parallel_matches_sequential() {
        let spec = SweepSpec::cube(4);
        let seq = sweep_rows_sequential(&spec);
        #[cfg(feature = "parallel")]
        assert_eq!(seq, sweep_rows_parallel(&spec));
        assert_eq!(seq, sweep_rows(&spec));
    }

    #[test]
    fn noncoprime_filter_matches_closed_form() {
        let spec = SweepSpec {
            filter: SweepFilter::OnlyNonCoprime,
            ..SweepSpec::cube(4)
        };
        let rows = sweep_rows(&spec);
        assert!(!rows.is_empty());
        for r in &rows {
            let p = InductionProblem::new(r.a, r.b, r.c, r.d);
            assert!(!coprime_closed_form(&p));
            assert!(
                ((r.c as i64 - r.d as i64).unsigned_abs() as u32) < (r.a - 1).min(r.b - 1),
                "{:?}",
                r
            );
        }
    }

    #[test]
    fn validation() {
        assert!(SweepSpec::cube(4).validate().is_ok());
        let mut s = SweepSpec::cube(4);
        s.a = (3, 2);
        assert!(s.validate().is_err());
        let mut s = SweepSpec::cube(4);
        s.d = (1, 100);
        assert!(s.validate().is_err());
    }

    #[test]
    fn csv_row_shape() {
        let row = sweep_row(&InductionProblem::new(1, 1, 1, 1));
        assert_eq!(row.csv_line(), "1,1,1,1,true,true,2,0,true");
    }
}
