//! Exact integer and rational scalars.
//!
//! Everything downstream works over [`Int`] (arbitrary-precision signed
//! integers) and [`Rat`] (always-reduced rationals with positive
//! denominator). The one operation with actual content here is [`binom`],
//! the binomial coefficient generalized to an arbitrary integer upper
//! index, which the recurrences and congruence sums lean on heavily.

use crate::error::{Error, Result};
use num::{BigInt, BigRational, Integer, One, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

/// Shorthand for `Int::from` in table builders and tests.
pub fn int(n: i64) -> Int {
    Int::from(n)
}

/// Reduced rational `n/d`. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

/// Binomial coefficient `C(n, k)` for any integer `n` and `k >= 0`.
///
/// Uses the falling-factorial product `n (n-1) ... (n-k+1) / k!`, dividing
/// exactly after each multiplication so intermediates stay integral. The
/// upper index may be negative: `C(-n, k) = (-1)^k C(n+k-1, k)`.
pub fn binom(n: &Int, k: u64) -> Int {
    let mut acc = Int::one();
    for j in 1..=k {
        acc *= n - Int::from(j - 1);
        let (q, r) = acc.div_rem(&Int::from(j));
        debug_assert!(r.is_zero(), "binomial product not divisible by {j}");
        acc = q;
    }
    acc
}

/// `binom` with machine-word upper index.
pub fn binom_i(n: i64, k: u64) -> Int {
    binom(&Int::from(n), k)
}

/// `binom` restricted to the classical case `0 <= k <= n`.
pub fn binom_u(n: u64, k: u64) -> Int {
    binom(&Int::from(n), k)
}

/// Multiplicative inverse of a rational; zero has none.
pub fn rat_inv(a: &Rat) -> Result<Rat> {
    if a.is_zero() {
        return Err(Error::ZeroInverse);
    }
    Ok(a.recip())
}

/// True if `d` divides `n` exactly.
pub fn divides(d: &Int, n: &Int) -> bool {
    !d.is_zero() && n.is_multiple_of(d)
}

/// Exact quotient `n / d`; errors if the division leaves a remainder.
pub fn div_exact(n: &Int, d: &Int, context: &'static str) -> Result<Int> {
    let (q, r) = n.div_rem(d);
    if r.is_zero() {
        Ok(q)
    } else {
        Err(Error::NonExactDivision {
            context,
            numerator: n.clone(),
            divisor: d.clone(),
        })
    }
}

/// `(-1)^k` as an integer.
pub fn sign_pow(k: u64) -> Int {
    if k % 2 == 0 {
        Int::one()
    } else {
        -Int::one()
    }
}

/// `base^exp` for a small base, exact.
pub fn int_pow(base: i64, exp: u64) -> Int {
    num::pow::pow(Int::from(base), exp as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num::Signed;
    use proptest::prelude::*;

    #[test]
    fn binomial_small_values() {
        assert_eq!(binom_u(4, 2), int(6));
        assert_eq!(binom_u(0, 0), int(1));
        assert_eq!(binom_u(5, 0), int(1));
        assert_eq!(binom_u(5, 5), int(1));
        assert_eq!(binom_u(3, 7), int(0));
    }

    #[test]
    fn binomial_negative_upper_index() {
        // C(-1, k) alternates sign; C(-3, 2) via the negation law is
        // (-1)^2 C(4, 2) = 6.
        assert_eq!(binom_i(-1, 3), int(-1));
        assert_eq!(binom_i(-3, 2), int(6));
        assert_eq!(binom_i(-2, 1), int(-2));
    }

    #[test]
    fn negation_law_matches_direct_product() {
        for n in 1i64..=12 {
            for k in 0u64..=12 {
                let direct = binom_i(-n, k);
                let reflected = sign_pow(k) * binom_i(n + k as i64 - 1, k);
                assert_eq!(direct, reflected, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn rational_helpers() {
        let h4 = rat(1, 1) + rat(1, 2) + rat(1, 3) + rat(1, 4);
        assert_eq!(h4, rat(25, 12));
        assert_eq!(rat_inv(&rat(25, 12)).unwrap(), rat(12, 25));
        assert_eq!(rat_inv(&rat(0, 1)), Err(Error::ZeroInverse));
    }

    #[test]
    fn exact_division_guards() {
        assert!(divides(&int(3), &int(189)));
        assert_eq!(div_exact(&int(189), &int(27), "t").unwrap(), int(7));
        assert!(div_exact(&int(10), &int(4), "t").is_err());
    }

    proptest! {
        #[test]
        fn pascal_rule(n in -40i64..=40, k in 1u64..=20) {
            let lhs = binom_i(n, k);
            let rhs = binom_i(n - 1, k) + binom_i(n - 1, k - 1);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn symmetry_for_nonnegative_upper(n in 0u64..=40, k in 0u64..=40) {
            prop_assume!(k <= n);
            prop_assert_eq!(binom_u(n, k), binom_u(n, n - k));
        }

        #[test]
        fn rationals_stay_reduced(a in -200i64..=200, b in 1i64..=99, c in -200i64..=200, d in 1i64..=99) {
            let x = rat(a, b) + rat(c, d);
            let g = x.numer().gcd(x.denom());
            prop_assert!(g.is_one() || x.numer().is_zero());
            prop_assert!(x.denom().is_positive());
        }
    }
}
