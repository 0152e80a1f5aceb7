//! Exact dyadic rationals `numerator / 2^exponent`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest exponent a [`DyadicSum`] may carry.
pub const MAX_EXPONENT: u32 = 126;

/// An exact value `numerator / 2^exponent`, kept in lowest terms.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct DyadicSum {
    numerator: i128,
    exponent: u32,
}

impl DyadicSum {
    pub const ZERO: DyadicSum = DyadicSum {
        numerator: 0,
        exponent: 0,
    };

    pub fn new(numerator: i128, exponent: u32) -> Result<Self> {
        if exponent > MAX_EXPONENT {
            return Err(Error::Overflow("dyadic exponent"));
        }
        Ok(Self {
            numerator,
            exponent,
        }
        .reduced())
    }

    pub fn integer(n: i128) -> Self {
        Self {
            numerator: n,
            exponent: 0,
        }
    }

    /// `1 / 2^e`.
    pub fn inverse_power_of_two(e: u32) -> Result<Self> {
        Self::new(1, e)
    }

    pub fn numerator(&self) -> i128 {
        self.numerator
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    fn reduced(mut self) -> Self {
        if self.numerator == 0 {
            self.exponent = 0;
            return self;
        }
        let tz = self.numerator.trailing_zeros().min(self.exponent);
        self.numerator >>= tz;
        self.exponent -= tz;
        self
    }

    /// Rewrites `self` with denominator `2^e`, `e >= self.exponent`.
    fn numerator_at(&self, e: u32) -> Result<i128> {
        debug_assert!(e >= self.exponent);
        let shift = e - self.exponent;
        let scaled = self
            .numerator
            .checked_mul(1i128.checked_shl(shift).ok_or(Error::Overflow("dyadic shift"))?)
            .ok_or(Error::Overflow("dyadic shift"))?;
        Ok(scaled)
    }

    pub fn checked_add(self, other: Self) -> Result<Self> {
        let e = self.exponent.max(other.exponent);
        let n = self
            .numerator_at(e)?
            .checked_add(other.numerator_at(e)?)
            .ok_or(Error::Overflow("dyadic addition"))?;
        Self::new(n, e)
    }

    pub fn checked_sub(self, other: Self) -> Result<Self> {
        self.checked_add(other.checked_neg()?)
    }

    pub fn checked_neg(self) -> Result<Self> {
        Ok(Self {
            numerator: self
                .numerator
                .checked_neg()
                .ok_or(Error::Overflow("dyadic negation"))?,
            exponent: self.exponent,
        })
    }

    pub fn checked_mul_int(self, m: i128) -> Result<Self> {
        let n = self
            .numerator
            .checked_mul(m)
            .ok_or(Error::Overflow("dyadic scaling"))?;
        Self::new(n, self.exponent)
    }

    pub fn checked_mul(self, other: Self) -> Result<Self> {
        let n = self
            .numerator
            .checked_mul(other.numerator)
            .ok_or(Error::Overflow("dyadic product"))?;
        Self::new(n, self.exponent + other.exponent)
    }

    /// Divides by `2^e`.
    pub fn checked_div_pow2(self, e: u32) -> Result<Self> {
        Self::new(
            self.numerator,
            self.exponent
                .checked_add(e)
                .ok_or(Error::Overflow("dyadic exponent"))?,
        )
    }

    /// Greatest integer not exceeding the value.
    pub fn floor(&self) -> i128 {
        self.numerator >> self.exponent
    }

    pub fn is_integer(&self) -> bool {
        self.exponent == 0
    }

    /// Lossy conversion for display.
    pub fn to_f64(&self) -> f64 {
        self.numerator as f64 / 2f64.powi(self.exponent as i32)
    }

    /// Sum of an iterator of dyadic values.
    pub fn try_sum<I: IntoIterator<Item = DyadicSum>>(iter: I) -> Result<Self> {
        iter.into_iter().try_fold(Self::ZERO, Self::checked_add)
    }
}

impl Ord for DyadicSum {
    fn cmp(&self, other: &Self) -> Ordering {
        // Floors never overflow; the fractional parts are below 2^126 once
        // aligned to the larger exponent.
        match self.floor().cmp(&other.floor()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let e = self.exponent.max(other.exponent);
        let frac = |x: &DyadicSum| {
            let r = x.numerator - (x.floor() << x.exponent);
            r << (e - x.exponent)
        };
        frac(self).cmp(&frac(other))
    }
}

impl PartialOrd for DyadicSum {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<i64> for DyadicSum {
    fn from(n: i64) -> Self {
        Self::integer(n as i128)
    }
}

impl fmt::Display for DyadicSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exponent == 0 {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/2^{}", self.numerator, self.exponent)
        }
    }
}

impl fmt::Debug for DyadicSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DyadicSum({self})")
    }
}
