//! Arbitrary-precision rationals.
//!
//! `Rat` is `num_rational::BigRational`: numerator and positive denominator
//! in lowest terms, which is exactly the invariant the engine needs.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rat = num_rational::BigRational;

/// Integer as a rational.
pub fn rat_i(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Fraction `n/d` as a rational. Panics on `d = 0`.
pub fn rat_fr(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Exact integer `k`-th root of a nonnegative big integer, if one exists.
fn int_kth_root(n: &BigInt, k: u32) -> Option<BigInt> {
    if n.is_zero() || n.is_one() {
        return Some(n.clone());
    }
    let r = n.nth_root(k);
    if r.pow(k) == *n {
        Some(r)
    } else {
        None
    }
}

/// Exact `k`-th root of a rational, if one exists in the rationals.
pub fn rat_kth_root(x: &Rat, k: u32) -> Option<Rat> {
    assert!(k >= 1);
    if x.is_zero() {
        return Some(Rat::zero());
    }
    if x.is_negative() {
        if k % 2 == 0 {
            return None;
        }
        return rat_kth_root(&-x.clone(), k).map(|r| -r);
    }
    let n = int_kth_root(x.numer(), k)?;
    let d = int_kth_root(x.denom(), k)?;
    Some(Rat::new(n, d))
}

/// Integer power with possibly negative exponent. Panics on `0^negative`.
pub fn rat_pow(x: &Rat, e: i64) -> Rat {
    if e >= 0 {
        x.pow(e as i32)
    } else {
        assert!(!x.is_zero(), "zero to a negative power");
        x.pow(e as i32)
    }
}

/// Height of a rational: max(|numerator|, denominator).
pub fn rat_height(x: &Rat) -> BigInt {
    let n = x.numer().abs();
    let d = x.denom().clone();
    if n >= d {
        n
    } else {
        d
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kth_roots() {
        assert_eq!(rat_kth_root(&rat_fr(8, 27), 3), Some(rat_fr(2, 3)));
        assert_eq!(rat_kth_root(&rat_i(2), 2), None);
        assert_eq!(rat_kth_root(&rat_i(-8), 3), Some(rat_i(-2)));
        assert_eq!(rat_kth_root(&rat_i(-4), 2), None);
    }
}
