//! Domain model for the induction problem: segments, Speh ladders, cuspidal
//! supports, the ladder-transpose dual and rank-one exponent pairs.

use std::collections::BTreeMap;

use serde_json::{json, Value};

use crate::halfint::HalfInt;

/// The tuple `(a, b, c, d)` defining the induced product of the two Speh
/// representations built on a common supercuspidal of rank `tau_rank`.
///
/// The first factor is the height-`c` Speh representation over the length-`a`
/// segment, the second the height-`d` one over the length-`b` segment.
/// `tau_rank` is metadata only: every quantity computed here depends on the
/// supercuspidal through its self-paired L-factor alone.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct InductionProblem {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub d: u32,
    pub tau_rank: u32,
}

impl InductionProblem {
    /// Builds a problem with `tau_rank = 1`. All parameters must be >= 1.
    pub fn new(a: u32, b: u32, c: u32, d: u32) -> Self {
        assert!(
            a >= 1 && b >= 1 && c >= 1 && d >= 1,
            "parameters must be >= 1"
        );
        InductionProblem {
            a,
            b,
            c,
            d,
            tau_rank: 1,
        }
    }

    pub fn with_tau_rank(mut self, tau_rank: u32) -> Self {
        assert!(tau_rank >= 1, "tau_rank must be >= 1");
        self.tau_rank = tau_rank;
        self
    }

    /// The ladder-transpose dual: `(a, b, c, d) -> (c, d, a, b)`, which
    /// produces an induced product sharing the same reducibility points.
    pub fn dual(&self) -> InductionProblem {
        InductionProblem {
            a: self.c,
            b: self.d,
            c: self.a,
            d: self.b,
            tau_rank: self.tau_rank,
        }
    }

    /// Swaps the two segment lengths. The normalization factors are invariant
    /// under this map; it is the internal reduction used when `a < b`.
    pub fn swap_segments(&self) -> InductionProblem {
        InductionProblem {
            a: self.b,
            b: self.a,
            ..*self
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "a": self.a,
            "b": self.b,
            "c": self.c,
            "d": self.d,
            "tau_rank": self.tau_rank,
        })
    }
}

/// A finite multiset of exponents of determinant twists in a cuspidal support.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ExponentMultiset {
    entries: BTreeMap<HalfInt, u32>,
}

impl ExponentMultiset {
    pub fn insert(&mut self, e: HalfInt, multiplicity: u32) {
        if multiplicity > 0 {
            *self.entries.entry(e).or_insert(0) += multiplicity;
        }
    }

    pub fn multiplicity_at(&self, e: HalfInt) -> u32 {
        self.entries.get(&e).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (HalfInt, u32)> + '_ {
        self.entries.iter().map(|(&e, &m)| (e, m))
    }

    /// Iterates the elements with multiplicity, ascending.
    pub fn iter_expanded(&self) -> impl Iterator<Item = HalfInt> + '_ {
        self.entries
            .iter()
            .flat_map(|(&e, &m)| std::iter::repeat_n(e, m as usize))
    }

    pub fn total_multiplicity(&self) -> u64 {
        self.entries.values().map(|&m| m as u64).sum()
    }
}

impl FromIterator<(HalfInt, u32)> for ExponentMultiset {
    fn from_iter<T: IntoIterator<Item = (HalfInt, u32)>>(iter: T) -> Self {
        let mut s = ExponentMultiset::default();
        for (e, m) in iter {
            s.insert(e, m);
        }
        s
    }
}

/// One rank-one operator in the fully reduced decomposition: the pair of
/// cuspidal-slot exponents. Its associated pole location is `w = e2 - e1`,
/// with order at most one.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct RankOneFactor {
    pub e1: HalfInt,
    pub e2: HalfInt,
}

impl RankOneFactor {
    pub fn pole_location(&self) -> HalfInt {
        self.e2 - self.e1
    }
}

/// The exponents `(a-1)/2, (a-3)/2, ..., -(a-1)/2` of the length-`a` segment.
pub fn segment_exponents(a: u32) -> ExponentMultiset {
    (0..a)
        .map(|i| (HalfInt::from_doubled(a as i64 - 1 - 2 * i as i64), 1))
        .collect()
}

/// Cuspidal support of the height-`c` Speh representation over the length-`a`
/// segment: the `c x a` ladder of sums `j + k`, with multiplicities.
pub fn cuspidal_support(c: u32, a: u32) -> ExponentMultiset {
    let mut out = ExponentMultiset::default();
    for (j, mj) in segment_exponents(c).iter() {
        for (k, mk) in segment_exponents(a).iter() {
            out.insert(j + k, mj * mk);
        }
    }
    out
}

/// All rank-one exponent pairs of the full reduced decomposition, with
/// multiplicity: `(c*a) * (d*b)` factors in total.
pub fn rank_one_factors(p: &InductionProblem) -> Vec<RankOneFactor> {
    let left = cuspidal_support(p.c, p.a);
    let right = cuspidal_support(p.d, p.b);
    let mut out = Vec::with_capacity((p.c * p.a * p.d * p.b) as usize);
    for e1 in left.iter_expanded() {
        for e2 in right.iter_expanded() {
            out.push(RankOneFactor { e1, e2 });
        }
    }
    out
}
