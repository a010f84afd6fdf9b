//! Scalar field abstraction.
//!
//! Every computation in this crate is exact, so the scalar type must be a
//! field with exact equality. [`Field`] is implemented for `Ratio<I>` over any
//! signed integer type; the crate-level alias [`crate::Rational`] picks the
//! arbitrary-precision instance, which is what everything outside of tests
//! uses. Fixed-width ratios (`Ratio<i64>`) work for small inputs and panic on
//! overflow.

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Num, Signed};

/// An exact field: `==` is mathematical equality and no operation rounds.
pub trait Field:
    Num + Clone + Debug + Display + std::ops::Neg<Output = Self> + Send + Sync + 'static
{
    fn from_int(v: i64) -> Self;

    fn from_frac(num: i64, den: i64) -> Self {
        Self::from_int(num) / Self::from_int(den)
    }

    fn is_negative(&self) -> bool;

    /// Parses `p` or `p/q` with an optional leading sign.
    fn parse_exact(text: &str) -> Option<Self>;

    /// `self −= a · b`, the inner step of elimination.
    fn sub_mul(&mut self, a: &Self, b: &Self) {
        *self = self.clone() - a.clone() * b.clone();
    }

    /// `self += a · b`.
    fn add_mul(&mut self, a: &Self, b: &Self) {
        *self = self.clone() + a.clone() * b.clone();
    }
}

impl<I> Field for Ratio<I>
where
    I: Clone
        + Integer
        + num_traits::NumAssign
        + Signed
        + FromPrimitive
        + FromStr
        + Debug
        + Display
        + Send
        + Sync
        + 'static,
{
    fn from_int(v: i64) -> Self {
        Ratio::from_integer(I::from_i64(v).expect("integer out of range for scalar type"))
    }

    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }

    fn parse_exact(text: &str) -> Option<Self> {
        let text = text.trim();
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (text, None),
        };
        let num = num.parse::<I>().ok()?;
        let den = match den {
            Some(d) => d.parse::<I>().ok()?,
            None => I::one(),
        };
        if den.is_zero() {
            return None;
        }
        Some(Ratio::new(num, den))
    }

    fn sub_mul(&mut self, a: &Self, b: &Self) {
        *self -= a * b;
    }

    fn add_mul(&mut self, a: &Self, b: &Self) {
        *self += a * b;
    }
}

/// `n!` as a field element.
pub fn factorial<T: Field>(n: usize) -> T {
    (1..=n as i64).fold(T::one(), |acc, i| acc * T::from_int(i))
}

/// `binomial(n, k)` as a machine integer; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: usize = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}
