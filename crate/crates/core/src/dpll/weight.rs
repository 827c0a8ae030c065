//! Scalar types usable as Jeroslow-Wang branching weights.
//!
//! Weights are sums of terms `2^-k`. [`Dyadic`] represents them exactly in
//! fixed point; `f64` is exact as long as the sums stay within its
//! mantissa (true for the clause lengths and sizes used here); `f32` is an
//! approximation whose rounding may change tie-breaking but never a verdict;
//! [`BigRational`] is exact without limits and serves as a reference.

use std::cmp::Ordering;
use std::fmt::Debug;
use std::ops::{Add, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// A totally ordered additive scalar holding dyadic rationals.
pub trait BranchWeight: Zero + Clone + PartialOrd + Debug + Send + Sync {
    /// `2^-k`.
    fn pow2_neg(k: u32) -> Self;

    fn add_to(&mut self, other: &Self);

    fn sub_from(&mut self, other: &Self);

    /// Conversion for reporting.
    fn to_f64(&self) -> f64;
}

macro_rules! float_weight {
    ($($t:ty),*) => {$(
        impl BranchWeight for $t {
            fn pow2_neg(k: u32) -> Self {
                (2.0 as $t).powi(-(k.min(i32::MAX as u32) as i32))
            }
            #[inline]
            fn add_to(&mut self, other: &Self) {
                *self += *other;
            }
            #[inline]
            fn sub_from(&mut self, other: &Self) {
                *self -= *other;
            }
            fn to_f64(&self) -> f64 {
                *self as f64
            }
        }
    )*};
}

float_weight!(f32, f64);

impl BranchWeight for BigRational {
    fn pow2_neg(k: u32) -> Self {
        BigRational::new(BigInt::one(), BigInt::one() << k as usize)
    }
    fn add_to(&mut self, other: &Self) {
        *self += other;
    }
    fn sub_from(&mut self, other: &Self) {
        *self -= other;
    }
    fn to_f64(&self) -> f64 {
        num_traits::ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

/// Unsigned fixed-point number with [`Dyadic::FRAC_BITS`] fractional bits.
///
/// `2^-k` is exact for `k <= FRAC_BITS` and rounds to zero beyond; sums
/// stay exact below `2^(128 - FRAC_BITS)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Dyadic(pub u128);

impl Dyadic {
    pub const FRAC_BITS: u32 = 100;

    pub fn raw(self) -> u128 {
        self.0
    }

    /// Exact value as a rational.
    pub fn to_rational(self) -> BigRational {
        BigRational::new(BigInt::from(self.0), BigInt::one() << Self::FRAC_BITS as usize)
    }
}

impl Debug for Dyadic {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Dyadic({})", self.to_f64())
    }
}

impl Add for Dyadic {
    type Output = Dyadic;
    #[inline]
    fn add(self, rhs: Dyadic) -> Dyadic {
        Dyadic(self.0 + rhs.0)
    }
}

impl Sub for Dyadic {
    type Output = Dyadic;
    #[inline]
    fn sub(self, rhs: Dyadic) -> Dyadic {
        Dyadic(self.0 - rhs.0)
    }
}

impl Zero for Dyadic {
    fn zero() -> Self {
        Dyadic(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl BranchWeight for Dyadic {
    fn pow2_neg(k: u32) -> Self {
        if k > Self::FRAC_BITS {
            Dyadic(0)
        } else {
            Dyadic(1u128 << (Self::FRAC_BITS - k))
        }
    }
    #[inline]
    fn add_to(&mut self, other: &Self) {
        self.0 += other.0;
    }
    #[inline]
    fn sub_from(&mut self, other: &Self) {
        self.0 -= other.0;
    }
    fn to_f64(&self) -> f64 {
        self.0 as f64 / 2f64.powi(Self::FRAC_BITS as i32)
    }
}

/// Total order used for weight comparisons; incomparable values (NaN)
/// compare equal.
pub(crate) fn cmp_weight<W: BranchWeight>(a: &W, b: &W) -> Ordering {
    a.partial_cmp(b).unwrap_or(Ordering::Equal)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn powers() {
        assert_eq!(f64::pow2_neg(3), 0.125);
        assert_eq!(f32::pow2_neg(1), 0.5);
        assert_eq!(Dyadic::pow2_neg(0).to_f64(), 1.0);
        assert_eq!(Dyadic::pow2_neg(101), Dyadic(0));
        assert_eq!(
            BigRational::pow2_neg(62),
            BigRational::new(BigInt::one(), BigInt::one() << 62usize)
        );
    }

    #[test]
    fn dyadic_matches_rational_up_to_62() {
        let mut d = Dyadic::zero();
        let mut r = BigRational::zero();
        for k in 1..=62 {
            for _ in 0..(k % 5 + 1) {
                d.add_to(&Dyadic::pow2_neg(k));
                r.add_to(&BigRational::pow2_neg(k));
            }
        }
        assert_eq!(d.to_rational(), r);
        d.sub_from(&Dyadic::pow2_neg(62));
        r.sub_from(&BigRational::pow2_neg(62));
        assert_eq!(d.to_rational(), r);
    }
}
