//! The normalization factors `alpha`, `beta`, `gamma` and the local
//! coefficient `C_psi` as factored L-factor products.
//!
//! Everything is built from the fully expanded supercuspidal double product:
//! with `j` running over `[|c-d|/2, (c+d-2)/2]` and `k` over
//! `[|a-b|/2, (a+b-2)/2]`, both in steps of one,
//!
//! ```text
//! alpha = prod_{j,k} L(w - j + k)        beta = prod_{j,k} L(w + j + k + 1)
//! ```
//!
//! and `gamma = alpha / beta`. The rank-one telescoping expansion over
//! cuspidal supports is kept alongside as an independent route to `gamma`.

use serde_json::{json, Value};

use crate::error::Error;
use crate::halfint::HalfInt;
use crate::lfactor::{LFactorProduct, PoleMultiset};
use crate::speh::{segment_exponents, InductionProblem};

fn j_range(p: &InductionProblem) -> impl Iterator<Item = HalfInt> {
    let lo = HalfInt::from_doubled((p.c as i64 - p.d as i64).abs());
    let hi = HalfInt::from_doubled(p.c as i64 + p.d as i64 - 2);
    HalfInt::range_inclusive(lo, hi)
}

fn k_range(p: &InductionProblem) -> impl Iterator<Item = HalfInt> {
    let lo = HalfInt::from_doubled((p.a as i64 - p.b as i64).abs());
    let hi = HalfInt::from_doubled(p.a as i64 + p.b as i64 - 2);
    HalfInt::range_inclusive(lo, hi)
}

/// `alpha`: shifts `k - j`, poles at `w = j - k`.
pub fn alpha(p: &InductionProblem) -> LFactorProduct {
    let mut out = LFactorProduct::one();
    for j in j_range(p) {
        for k in k_range(p) {
            out.mul_factor(k - j, 1);
        }
    }
    out
}

/// `beta`: shifts `j + k + 1`, poles at `w = -(j + k + 1)`.
pub fn beta(p: &InductionProblem) -> LFactorProduct {
    let mut out = LFactorProduct::one();
    for j in j_range(p) {
        for k in k_range(p) {
            out.mul_factor(j + k + HalfInt::ONE, 1);
        }
    }
    out
}

/// `gamma = alpha / beta`.
pub fn gamma(p: &InductionProblem) -> LFactorProduct {
    alpha(p).div(&beta(p))
}

/// Independent route to `gamma` through the fully reduced decomposition in
/// the Speh-height direction: one rank-one operator per pair
/// `(j1, j2) in segment(c) x segment(d)`, each contributing the ratio
/// `L(w + j1 - j2, tau_a x tau_b) / L(w + j1 - j2 + 1, tau_a x tau_b)`
/// expanded at supercuspidal level over the `k`-range. The internal
/// telescoping must reproduce `gamma` exactly.
pub fn gamma_rank_one_oracle(p: &InductionProblem) -> LFactorProduct {
    let mut out = LFactorProduct::one();
    for j1 in segment_exponents(p.c).iter_expanded() {
        for j2 in segment_exponents(p.d).iter_expanded() {
            let x = j1 - j2;
            for k in k_range(p) {
                out.mul_factor(x + k, 1);
                out.mul_factor(x + k + HalfInt::ONE, -1);
            }
        }
    }
    out
}

/// The `alpha` of the sub-problem obtained by splitting off the cuspidal slot
/// `j2` of the second segment: shifts `(a-1)/2 - j2 - j` over the `j`-range.
/// Multiplying these over `j2 in segment_exponents(b)` recovers `alpha(p)`
/// when `a >= b`.
pub fn alpha_factor_in_decomposition(p: &InductionProblem, j2: HalfInt) -> LFactorProduct {
    let base = HalfInt::from_doubled(p.a as i64 - 1) - j2;
    let mut out = LFactorProduct::one();
    for j in j_range(p) {
        out.mul_factor(base - j, 1);
    }
    out
}

/// The full decomposition product of the per-slot `alpha` factors, with the
/// segment roles swapped internally when `a < b`.
pub fn alpha_decomposition_product(p: &InductionProblem) -> LFactorProduct {
    let q = if p.a >= p.b { *p } else { p.swap_segments() };
    let mut out = LFactorProduct::one();
    for j2 in segment_exponents(q.b).iter_expanded() {
        out = out.mul(&alpha_factor_in_decomposition(&q, j2));
    }
    out
}

/// Whether the decomposition product matches `alpha(p)` exactly.
pub fn alpha_matching_holds(p: &InductionProblem) -> bool {
    alpha_decomposition_product(p) == alpha(p)
}

/// The local coefficient `C_psi = beta(-s) / alpha(s)`, defined for `c = d`.
///
/// The mirrored numerator is kept as an explicit report instead of extending
/// the one-sided factor algebra: a mirrored entry `(n, e)` stands for
/// `L(-w + n)^e`, so its poles sit at `w = +n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CPsi {
    /// `beta(p)`, to be read with `w` replaced by `-w`.
    pub mirrored_numerator: LFactorProduct,
    /// `alpha(p)`, dividing.
    pub denominator: LFactorProduct,
}

impl CPsi {
    /// Pole locations in `w`-coordinates.
    pub fn poles(&self) -> PoleMultiset {
        // mirrored poles flip sign; denominator zeros (negative exponents)
        // would surface as poles, alpha has none.
        self.mirrored_numerator
            .pole_part()
            .mirrored()
            .sum_with(&self.denominator.zero_part())
    }

    /// Zero locations in `w`-coordinates.
    pub fn zeros(&self) -> PoleMultiset {
        self.mirrored_numerator
            .zero_part()
            .mirrored()
            .sum_with(&self.denominator.pole_part())
    }

    pub fn to_json(&self) -> Value {
        let mut factors: Vec<Value> = self
            .mirrored_numerator
            .factors()
            .map(|(n, e)| json!({ "mirrored": true, "shift": n.to_string(), "exp": e }))
            .collect();
        factors.extend(
            self.denominator
                .factors()
                .map(|(n, e)| json!({ "mirrored": false, "shift": n.to_string(), "exp": -e })),
        );
        json!({
            "factors": factors,
            "poles": self.poles().to_json(),
            "zeros": self.zeros().to_json(),
        })
    }
}

impl std::fmt::Display for CPsi {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut num = String::new();
        for (i, (n, e)) in self.mirrored_numerator.factors().enumerate() {
            if i > 0 {
                num.push('·');
            }
            num.push_str("L(-w");
            if n > HalfInt::ZERO {
                num.push('+');
                num.push_str(&n.to_string());
            } else if n < HalfInt::ZERO {
                num.push_str(&n.to_string());
            }
            num.push(')');
            if e != 1 {
                num.push('^');
                num.push_str(&e.to_string());
            }
        }
        if num.is_empty() {
            num.push('1');
        }
        let den = self.denominator.to_string();
        if self.denominator.is_one() {
            write!(f, "{}", num)
        } else if self.denominator.num_factors() == 1 {
            write!(f, "{}/{}", num, den)
        } else {
            write!(f, "{}/({})", num, den)
        }
    }
}

/// Builds `C_psi` for a self-associate problem (`c = d`).
pub fn c_psi(p: &InductionProblem) -> Result<CPsi, Error> {
    if p.c != p.d {
        return Err(Error::NotSelfAssociate { c: p.c, d: p.d });
    }
    Ok(CPsi {
        mirrored_numerator: beta(p),
        denominator: alpha(p),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lfactor::common_pole_part;

    fn p(a: u32, b: u32, c: u32, d: u32) -> InductionProblem {
        InductionProblem::new(a, b, c, d)
    }
    fn hi(n: i64) -> HalfInt {
        HalfInt::from_int(n)
    }

    // Independent pair-counting oracle for the pole parts of alpha and beta.
    fn alpha_poles_by_counting(pr: &InductionProblem) -> PoleMultiset {
        let mut out = PoleMultiset::empty();
        for j in j_range(pr) {
            for k in k_range(pr) {
                out.insert(j - k, 1);
            }
        }
        out
    }
    fn beta_poles_by_counting(pr: &InductionProblem) -> PoleMultiset {
        let mut out = PoleMultiset::empty();
        for j in j_range(pr) {
            for k in k_range(pr) {
                out.insert(-(j + k + HalfInt::ONE), 1);
            }
        }
        out
    }

    #[test]
    fn trivial_problem() {
        let pr = p(1, 1, 1, 1);
        assert_eq!(alpha(&pr), LFactorProduct::single(hi(0), 1));
        assert_eq!(beta(&pr), LFactorProduct::single(hi(1), 1));
        let g: LFactorProduct = [(hi(0), 1), (hi(1), -1)].into_iter().collect();
        assert_eq!(gamma(&pr), g);
        assert_eq!(gamma_rank_one_oracle(&pr), g);
        // gamma = alpha * beta^{-1} as canonical maps
        assert_eq!(alpha(&pr).mul(&beta(&pr).div(&beta(&pr).mul(&beta(&pr)))), g);
    }

    #[test]
    fn alpha_2211() {
        let expect: LFactorProduct = [(hi(0), 1), (hi(1), 1)].into_iter().collect();
        assert_eq!(alpha(&p(2, 2, 1, 1)), expect);
    }

    #[test]
    fn pole_parts_3333_match_example_matrices() {
        let pr = p(3, 3, 3, 3);
        let expect_a: PoleMultiset = [
            (hi(-2), 1),
            (hi(-1), 2),
            (hi(0), 3),
            (hi(1), 2),
            (hi(2), 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(alpha(&pr).pole_part(), expect_a);
        assert_eq!(alpha_poles_by_counting(&pr), expect_a);

        let expect_b: PoleMultiset = [
            (hi(-5), 1),
            (hi(-4), 2),
            (hi(-3), 3),
            (hi(-2), 2),
            (hi(-1), 1),
        ]
        .into_iter()
        .collect();
        assert_eq!(beta(&pr).pole_part(), expect_b);
        assert_eq!(beta_poles_by_counting(&pr), expect_b);

        let expect_common: PoleMultiset = [(hi(-1), 1), (hi(-2), 1)].into_iter().collect();
        assert_eq!(common_pole_part(&alpha(&pr), &beta(&pr)), expect_common);
    }

    #[test]
    fn gamma_1_1_cd_specialization() {
        // gamma(1,1,c,d) = prod_j L(w - j)/L(w + j + 1)
        for (c, d) in [(2u32, 1u32), (3, 2), (4, 4)] {
            let pr = p(1, 1, c, d);
            let mut expect = LFactorProduct::one();
            for j in j_range(&pr) {
                expect.mul_factor(-j, 1);
                expect.mul_factor(j + HalfInt::ONE, -1);
            }
            assert_eq!(gamma(&pr), expect);
        }
    }

    #[test]
    fn telescoping_oracle_small_grid() {
        for a in 1..=4 {
            for b in 1..=4 {
                for c in 1..=4 {
                    for d in 1..=4 {
                        let pr = p(a, b, c, d);
                        assert_eq!(
                            gamma_rank_one_oracle(&pr),
                            gamma(&pr),
                            "telescoping failed at {:?}",
                            (a, b, c, d)
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn beta_symmetries() {
        let pr = p(2, 3, 4, 5);
        assert_eq!(beta(&pr), beta(&p(2, 3, 5, 4)));
        assert_eq!(beta(&pr), beta(&p(3, 2, 4, 5)));
        assert_eq!(beta(&pr), beta(&p(4, 5, 2, 3))); // = beta(dual)
    }

    #[test]
    fn gamma_times_beta_is_alpha() {
        for (a, b, c, d) in [(1, 1, 1, 1), (2, 2, 3, 1), (3, 5, 2, 4)] {
            let pr = p(a, b, c, d);
            assert_eq!(gamma(&pr).mul(&beta(&pr)), alpha(&pr));
        }
    }

    #[test]
    fn decomposition_factors_2211() {
        let pr = p(2, 2, 1, 1);
        let minus = HalfInt::from_doubled(-1);
        let plus = HalfInt::from_doubled(1);
        assert_eq!(
            alpha_factor_in_decomposition(&pr, minus),
            LFactorProduct::single(hi(1), 1)
        );
        assert_eq!(
            alpha_factor_in_decomposition(&pr, plus),
            LFactorProduct::single(hi(0), 1)
        );
        assert_eq!(alpha_decomposition_product(&pr), alpha(&pr));
    }

    #[test]
    fn alpha_matching_both_orientations() {
        for (a, b, c, d) in [(3, 2, 2, 2), (2, 3, 2, 2), (1, 4, 3, 2), (5, 5, 1, 3)] {
            assert!(alpha_matching_holds(&p(a, b, c, d)), "{:?}", (a, b, c, d));
        }
    }

    #[test]
    fn dual_alpha_mirror() {
        for a in 1..=5u32 {
            for b in 1..=5u32 {
                for c in 1..=5u32 {
                    for d in 1..=5u32 {
                        let pr = p(a, b, c, d);
                        let mine = alpha(&pr).pole_part();
                        let theirs = alpha(&pr.dual()).pole_part();
                        assert_eq!(mine.mirrored(), theirs, "{:?}", (a, b, c, d));
                    }
                }
            }
        }
    }

    #[test]
    fn c_psi_trivial_case() {
        let cp = c_psi(&p(1, 1, 1, 1)).unwrap();
        assert_eq!(cp.to_string(), "L(-w+1)/L(w)");
        let poles: Vec<_> = cp.poles().iter().collect();
        assert_eq!(poles, vec![(hi(1), 1)]);
        let zeros: Vec<_> = cp.zeros().iter().collect();
        assert_eq!(zeros, vec![(hi(0), 1)]);
    }

    #[test]
    fn c_psi_requires_self_associate() {
        assert_eq!(
            c_psi(&p(1, 1, 2, 1)),
            Err(Error::NotSelfAssociate { c: 2, d: 1 })
        );
    }

    #[test]
    fn c_psi_1122_shifts() {
        let cp = c_psi(&p(1, 1, 2, 2)).unwrap();
        let num_shifts: Vec<_> = cp.mirrored_numerator.factors().map(|(n, _)| n).collect();
        assert_eq!(num_shifts, vec![hi(1), hi(2)]);
        let den_shifts: Vec<_> = cp.denominator.factors().map(|(n, _)| n).collect();
        assert_eq!(den_shifts, vec![hi(-1), hi(0)]);
    }
}
