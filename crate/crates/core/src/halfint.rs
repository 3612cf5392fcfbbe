//! Exact half-integer arithmetic.
//!
//! Every spectral coordinate in this crate lives in the variable `w = 2s`,
//! which steps through `(1/2)Z`. Storing twice the value as an integer keeps
//! all shifts, pole locations and range endpoints exact and removes parity
//! special-casing.

use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

/// An exact half-integer, stored as twice its value.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct HalfInt {
    doubled: i64,
}

impl HalfInt {
    pub const ZERO: HalfInt = HalfInt { doubled: 0 };
    pub const ONE: HalfInt = HalfInt { doubled: 2 };

    /// Builds the half-integer `doubled / 2`.
    pub const fn from_doubled(doubled: i64) -> Self {
        HalfInt { doubled }
    }

    pub const fn from_int(n: i64) -> Self {
        HalfInt { doubled: 2 * n }
    }

    pub const fn doubled(self) -> i64 {
        self.doubled
    }

    pub const fn is_integer(self) -> bool {
        self.doubled % 2 == 0
    }

    pub const fn abs(self) -> Self {
        HalfInt {
            doubled: self.doubled.abs(),
        }
    }

    pub fn to_f64(self) -> f64 {
        self.doubled as f64 / 2.0
    }

    /// Iterates `lo, lo + 1, ..., hi` (empty when `lo > hi`).
    pub fn range_inclusive(lo: HalfInt, hi: HalfInt) -> impl Iterator<Item = HalfInt> {
        (lo.doubled..=hi.doubled)
            .step_by(2)
            .map(HalfInt::from_doubled)
    }

    /// Renders half of this value (i.e. `s` when `self` is `w = 2s`) as an
    /// exact fraction string.
    pub fn halved_string(self) -> String {
        let n = self.doubled;
        if n % 4 == 0 {
            format!("{}", n / 4)
        } else if n % 2 == 0 {
            format!("{}/2", n / 2)
        } else {
            format!("{}/4", n)
        }
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt {
            doubled: self.doubled + rhs.doubled,
        }
    }
}

impl Sub for HalfInt {
    type Output = HalfInt;
    fn sub(self, rhs: HalfInt) -> HalfInt {
        HalfInt {
            doubled: self.doubled - rhs.doubled,
        }
    }
}

impl Neg for HalfInt {
    type Output = HalfInt;
    fn neg(self) -> HalfInt {
        HalfInt {
            doubled: -self.doubled,
        }
    }
}

impl AddAssign for HalfInt {
    fn add_assign(&mut self, rhs: HalfInt) {
        self.doubled += rhs.doubled;
    }
}

impl SubAssign for HalfInt {
    fn sub_assign(&mut self, rhs: HalfInt) {
        self.doubled -= rhs.doubled;
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.doubled / 2)
        } else {
            write!(f, "{}/2", self.doubled)
        }
    }
}

/// Error parsing a half-integer from its canonical text form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseHalfIntError(String);

impl fmt::Display for ParseHalfIntError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid half-integer literal: {:?}", self.0)
    }
}

impl std::error::Error for ParseHalfIntError {}

impl FromStr for HalfInt {
    type Err = ParseHalfIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Some(num) = s.strip_suffix("/2") {
            let n: i64 = num.parse().map_err(|_| ParseHalfIntError(s.to_owned()))?;
            Ok(HalfInt::from_doubled(n))
        } else {
            let n: i64 = s.parse().map_err(|_| ParseHalfIntError(s.to_owned()))?;
            Ok(HalfInt::from_int(n))
        }
    }
}
