//! Reducibility classification: the candidate locus, co-primality tests,
//! certification tiers, exceptional points and the example-style pole
//! matrices.

use std::collections::BTreeSet;

use serde_json::{json, Value};

use crate::halfint::HalfInt;
use crate::lfactor::{common_pole_part, PoleMultiset};
use crate::normalization::{alpha, beta};
use crate::speh::InductionProblem;

/// Which condition certifies reducibility at a candidate point, in fixed
/// priority order. `TheoremOnly` marks points covered only by the
/// unconditional reducibility theorem, with no degree-based certificate.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Tier {
    GcdTrivialI,
    GcdTrivialII,
    DegreeIII,
    DegreeIV,
    TheoremOnly,
}

impl Tier {
    pub fn as_str(&self) -> &'static str {
        match self {
            Tier::GcdTrivialI => "GCD_TRIVIAL_I",
            Tier::GcdTrivialII => "GCD_TRIVIAL_II",
            Tier::DegreeIII => "DEGREE_III",
            Tier::DegreeIV => "DEGREE_IV",
            Tier::TheoremOnly => "THEOREM_ONLY",
        }
    }
}

impl std::fmt::Display for Tier {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Per-candidate-point record. `point` is the negative representative in
/// `w = 2s` coordinates; the mirror point carries the same beta order, and
/// its alpha order is this record's `dual_alpha_order`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PointVerdict {
    pub point: HalfInt,
    pub beta_order: u32,
    pub alpha_order: u32,
    pub dual_alpha_order: u32,
    pub reducible: bool,
    pub tier: Tier,
}

impl PointVerdict {
    pub fn to_json(&self) -> Value {
        json!({
            "w": self.point.to_string(),
            "s": self.point.halved_string(),
            "beta_order": self.beta_order,
            "alpha_order": self.alpha_order,
            "dual_alpha_order": self.dual_alpha_order,
            "reducible": self.reducible,
            "tier": self.tier.as_str(),
        })
    }
}

/// The candidate reducibility locus: poles of `beta(s) * beta(-s)` in
/// `w`-coordinates, i.e. the symmetric multiset `{±(j+k+1)}`.
pub fn candidate_points(p: &InductionProblem) -> PoleMultiset {
    let poles = beta(p).pole_part();
    poles.sum_with(&poles.mirrored())
}

/// Emptiness of the shared pole part of `alpha` and `beta`.
pub fn coprime_bruteforce(p: &InductionProblem) -> bool {
    common_pole_part(&alpha(p), &beta(p)).is_empty()
}

/// The closed-form co-primality criterion `|c - d| >= min(a - 1, b - 1)`.
pub fn coprime_closed_form(p: &InductionProblem) -> bool {
    (p.c as i64 - p.d as i64).abs() >= (p.a - 1).min(p.b - 1) as i64
}

/// Emptiness of the shared pole part of the dual `alpha` and `beta`.
pub fn dual_coprime_bruteforce(p: &InductionProblem) -> bool {
    common_pole_part(&alpha(&p.dual()), &beta(p)).is_empty()
}

/// The dual closed form `|a - b| >= min(c - 1, d - 1)`.
pub fn dual_coprime_closed_form(p: &InductionProblem) -> bool {
    (p.a as i64 - p.b as i64).abs() >= (p.c - 1).min(p.d - 1) as i64
}

/// One verdict per distinct negative candidate point, ascending. The first
/// matching condition wins: gcd-trivial, dual gcd-trivial, beta degree over
/// alpha, beta degree over dual alpha, otherwise theorem-only.
pub fn classify(p: &InductionProblem) -> Vec<PointVerdict> {
    let beta_poles = beta(p).pole_part();
    let alpha_poles = alpha(p).pole_part();
    let dual_alpha_poles = alpha(&p.dual()).pole_part();
    beta_poles
        .iter()
        .map(|(w0, beta_order)| {
            let alpha_order = alpha_poles.multiplicity_at(w0);
            let dual_alpha_order = dual_alpha_poles.multiplicity_at(w0);
            let tier = if alpha_order == 0 {
                Tier::GcdTrivialI
            } else if dual_alpha_order == 0 {
                Tier::GcdTrivialII
            } else if beta_order > alpha_order {
                Tier::DegreeIII
            } else if beta_order > dual_alpha_order {
                Tier::DegreeIV
            } else {
                Tier::TheoremOnly
            };
            PointVerdict {
                point: w0,
                beta_order,
                alpha_order,
                dual_alpha_order,
                reducible: beta_order > 0,
                tier,
            }
        })
        .collect()
}

/// The symmetric set of points certified only by the unconditional theorem.
pub fn exceptional_points(p: &InductionProblem) -> BTreeSet<HalfInt> {
    classify(p)
        .into_iter()
        .filter(|v| v.tier == Tier::TheoremOnly)
        .flat_map(|v| [v.point, -v.point])
        .collect()
}

/// Which normalization factor a pole matrix displays.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum MatrixKind {
    Alpha,
    Beta,
}

/// One matrix cell: a pole location and whether it is a shared pole of
/// `alpha` and `beta`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct MatrixEntry {
    pub location: HalfInt,
    pub common: bool,
}

/// The example-style pole matrix: rows indexed by `j`, columns by `k`,
/// entry `j - k` for `alpha` and `-(j + k + 1)` for `beta`, with shared
/// poles flagged.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PoleMatrix {
    pub kind: MatrixKind,
    pub row_index: Vec<HalfInt>,
    pub col_index: Vec<HalfInt>,
    pub entries: Vec<Vec<MatrixEntry>>,
}

pub fn pole_matrix(p: &InductionProblem, kind: MatrixKind) -> PoleMatrix {
    let common = common_pole_part(&alpha(p), &beta(p));
    let rows: Vec<HalfInt> = HalfInt::range_inclusive(
        HalfInt::from_doubled((p.c as i64 - p.d as i64).abs()),
        HalfInt::from_doubled(p.c as i64 + p.d as i64 - 2),
    )
    .collect();
    let cols: Vec<HalfInt> = HalfInt::range_inclusive(
        HalfInt::from_doubled((p.a as i64 - p.b as i64).abs()),
        HalfInt::from_doubled(p.a as i64 + p.b as i64 - 2),
    )
    .collect();
    let entries = rows
        .iter()
        .map(|&j| {
            cols.iter()
                .map(|&k| {
                    let location = match kind {
                        MatrixKind::Alpha => j - k,
                        MatrixKind::Beta => -(j + k + HalfInt::ONE),
                    };
                    MatrixEntry {
                        location,
                        common: common.contains(location),
                    }
                })
                .collect()
        })
        .collect();
    PoleMatrix {
        kind,
        row_index: rows,
        col_index: cols,
        entries,
    }
}

impl PoleMatrix {
    /// Plain text layout: rows `j` ascending top to bottom, columns `k`
    /// ascending left to right, shared poles wrapped in `*`.
    pub fn render_text(&self) -> String {
        let cells: Vec<Vec<String>> = self
            .entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| {
                        if e.common {
                            format!("*{}*", e.location)
                        } else {
                            e.location.to_string()
                        }
                    })
                    .collect()
            })
            .collect();
        let width = cells
            .iter()
            .flatten()
            .map(|s| s.len())
            .max()
            .unwrap_or(0);
        let mut out = String::new();
        for row in &cells {
            out.push('[');
            for (i, cell) in row.iter().enumerate() {
                if i > 0 {
                    out.push(' ');
                }
                out.push_str(&format!("{:>width$}", cell, width = width));
            }
            out.push_str("]\n");
        }
        out
    }

    /// LaTeX array layout, shared poles set in bold.
    pub fn render_latex(&self) -> String {
        let cols = "c".repeat(self.col_index.len());
        let mut out = format!("\\begin{{array}}{{{}}}\n", cols);
        for row in &self.entries {
            let line: Vec<String> = row
                .iter()
                .map(|e| {
                    if e.common {
                        format!("\\mathbf{{{}}}", e.location)
                    } else {
                        e.location.to_string()
                    }
                })
                .collect();
            out.push_str(&line.join(" & "));
            out.push_str(" \\\\\n");
        }
        out.push_str("\\end{array}\n");
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "which": match self.kind { MatrixKind::Alpha => "alpha", MatrixKind::Beta => "beta" },
            "rows": self.row_index.iter().map(|j| j.to_string()).collect::<Vec<_>>(),
            "cols": self.col_index.iter().map(|k| k.to_string()).collect::<Vec<_>>(),
            "entries": self.entries.iter().map(|row| {
                row.iter().map(|e| json!({
                    "location": e.location.to_string(),
                    "common": e.common,
                })).collect::<Vec<_>>()
            }).collect::<Vec<_>>(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(a: u32, b: u32, c: u32, d: u32) -> InductionProblem {
        InductionProblem::new(a, b, c, d)
    }
    fn hi(n: i64) -> HalfInt {
        HalfInt::from_int(n)
    }

    #[test]
    fn candidate_points_small() {
        let pts = candidate_points(&p(1, 1, 1, 1));
        let got: Vec<_> = pts.iter().collect();
        assert_eq!(got, vec![(hi(-1), 1), (hi(1), 1)]);

        let pts = candidate_points(&p(3, 3, 3, 3));
        let expect: PoleMultiset = [
            (hi(-5), 1),
            (hi(-4), 2),
            (hi(-3), 3),
            (hi(-2), 2),
            (hi(-1), 1),
            (hi(1), 1),
            (hi(2), 2),
            (hi(3), 3),
            (hi(4), 2),
            (hi(5), 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(pts, expect);

        // (1,1,2,1): single candidate pair at w = ±3/2
        let pts = candidate_points(&p(1, 1, 2, 1));
        let got: Vec<_> = pts.iter().collect();
        assert_eq!(
            got,
            vec![
                (HalfInt::from_doubled(-3), 1),
                (HalfInt::from_doubled(3), 1)
            ]
        );
    }

    #[test]
    fn coprime_cases() {
        for c in 1..=6 {
            for d in 1..=6 {
                assert!(coprime_bruteforce(&p(1, 1, c, d)));
                assert!(coprime_closed_form(&p(1, 1, c, d)));
            }
        }
        assert!(!coprime_bruteforce(&p(3, 3, 3, 3)));
        assert!(!coprime_closed_form(&p(3, 3, 3, 3)));
        assert!(coprime_bruteforce(&p(2, 2, 3, 1)));
        assert!(coprime_closed_form(&p(2, 2, 3, 1)));
    }

    #[test]
    fn classify_1111() {
        let vs = classify(&p(1, 1, 1, 1));
        assert_eq!(vs.len(), 1);
        let v = vs[0];
        assert_eq!(v.point, hi(-1));
        assert_eq!(v.tier, Tier::GcdTrivialI);
        assert!(v.reducible);
    }

    #[test]
    fn classify_3333() {
        let vs = classify(&p(3, 3, 3, 3));
        let at = |w: i64| vs.iter().find(|v| v.point == hi(w)).unwrap();
        let v2 = at(-2);
        assert_eq!(
            (v2.beta_order, v2.alpha_order, v2.dual_alpha_order),
            (2, 1, 1)
        );
        assert_eq!(v2.tier, Tier::DegreeIII);
        let v1 = at(-1);
        assert_eq!(
            (v1.beta_order, v1.alpha_order, v1.dual_alpha_order),
            (1, 2, 2)
        );
        assert_eq!(v1.tier, Tier::TheoremOnly);
        assert!(vs.iter().all(|v| v.reducible));
    }

    #[test]
    fn coprime_implies_gcd_tiers_only() {
        for a in 1..=5 {
            for b in 1..=5 {
                for c in 1..=5 {
                    for d in 1..=5 {
                        let pr = p(a, b, c, d);
                        if coprime_bruteforce(&pr) {
                            for v in classify(&pr) {
                                assert!(
                                    matches!(v.tier, Tier::GcdTrivialI | Tier::GcdTrivialII),
                                    "{:?} at {}: {:?}",
                                    (a, b, c, d),
                                    v.point,
                                    v.tier
                                );
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn exceptional_sets_examples() {
        let e4: Vec<_> = exceptional_points(&p(4, 4, 4, 4)).into_iter().collect();
        assert_eq!(e4, vec![hi(-2), hi(-1), hi(1), hi(2)]);

        let e35: Vec<_> = exceptional_points(&p(3, 3, 5, 5)).into_iter().collect();
        assert_eq!(e35, vec![hi(-1), hi(1)]);

        for c in 1..=6 {
            for d in 1..=6 {
                assert!(exceptional_points(&p(1, 1, c, d)).is_empty());
            }
        }
    }

    #[test]
    fn matrix_3333() {
        let m = pole_matrix(&p(3, 3, 3, 3), MatrixKind::Alpha);
        assert_eq!(m.row_index, vec![hi(0), hi(1), hi(2)]);
        assert_eq!(m.col_index, vec![hi(0), hi(1), hi(2)]);
        let locs: Vec<Vec<i64>> = m
            .entries
            .iter()
            .map(|r| r.iter().map(|e| e.location.doubled() / 2).collect())
            .collect();
        assert_eq!(locs, vec![vec![0, -1, -2], vec![1, 0, -1], vec![2, 1, 0]]);
        let flags: Vec<Vec<bool>> = m
            .entries
            .iter()
            .map(|r| r.iter().map(|e| e.common).collect())
            .collect();
        assert_eq!(
            flags,
            vec![
                vec![false, true, true],
                vec![false, false, true],
                vec![false, false, false]
            ]
        );

        let mb = pole_matrix(&p(3, 3, 3, 3), MatrixKind::Beta);
        let locs: Vec<Vec<i64>> = mb
            .entries
            .iter()
            .map(|r| r.iter().map(|e| e.location.doubled() / 2).collect())
            .collect();
        assert_eq!(
            locs,
            vec![vec![-1, -2, -3], vec![-2, -3, -4], vec![-3, -4, -5]]
        );
        assert!(mb.entries[0][0].common && mb.entries[0][1].common);
        assert!(!mb.entries[0][2].common);
    }

    #[test]
    fn matrix_1111_trivial() {
        let m = pole_matrix(&p(1, 1, 1, 1), MatrixKind::Alpha);
        assert_eq!(m.entries.len(), 1);
        assert_eq!(m.entries[0].len(), 1);
        assert_eq!(m.entries[0][0].location, hi(0));
        assert!(!m.entries[0][0].common);
        assert_eq!(m.render_text(), "[0]\n");
    }

    #[test]
    fn mirror_symmetry_of_orders() {
        for a in 1..=4 {
            for b in 1..=4 {
                for c in 1..=4 {
                    for d in 1..=4 {
                        let pr = p(a, b, c, d);
                        let a_poles = alpha(&pr).pole_part();
                        let dual_poles = alpha(&pr.dual()).pole_part();
                        for v in classify(&pr) {
                            assert_eq!(v.alpha_order, a_poles.multiplicity_at(v.point));
                            assert_eq!(
                                v.dual_alpha_order,
                                a_poles.multiplicity_at(-v.point),
                                "dual mirror at {:?} {}",
                                (a, b, c, d),
                                v.point
                            );
                            assert_eq!(v.dual_alpha_order, dual_poles.multiplicity_at(v.point));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn dual_invariance_of_locus() {
        for a in 1..=4 {
            for b in 1..=4 {
                for c in 1..=4 {
                    for d in 1..=4 {
                        let pr = p(a, b, c, d);
                        assert_eq!(candidate_points(&pr), candidate_points(&pr.dual()));
                    }
                }
            }
        }
    }
}
