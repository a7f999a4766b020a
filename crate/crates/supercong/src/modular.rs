//! Arithmetic modulo prime powers, plus the number-theoretic scalars the
//! congruence checks quote: Legendre symbols, Fermat quotients, Bernoulli
//! and Euler numbers, harmonic numbers, and 3-adic valuations.
//!
//! A [`ModNum`] carries its modulus. Combining residues from different
//! moduli is a bug in the caller, not bad input, so it panics. By contrast,
//! reducing a rational whose denominator shares a factor with the modulus
//! is a recoverable condition ([`Error::NonUnitDenominator`]): the check
//! runner reports it as a SKIP with the offending denominator.

use crate::error::{Error, Result};
use crate::exact::{Int, Rat};
use crate::poly::{IntPoly, RatPoly};
use num::{Integer, One, Signed, Zero};
use std::fmt;

/// A prime power `p^e` used as a modulus.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct PrimePower {
    pub p: u64,
    pub e: u32,
}

impl PrimePower {
    pub fn new(p: u64, e: u32) -> Self {
        debug_assert!(e >= 1 && is_prime(p));
        PrimePower { p, e }
    }

    pub fn modulus(&self) -> Int {
        num::pow::pow(Int::from(self.p), self.e as usize)
    }
}

impl fmt::Display for PrimePower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.e == 1 {
            write!(f, "{}", self.p)
        } else {
            write!(f, "{}^{}", self.p, self.e)
        }
    }
}

/// Residue with carried modulus; the canonical representative lies in
/// `[0, m)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModNum {
    value: Int,
    modulus: Int,
}

impl ModNum {
    pub fn new(value: &Int, modulus: &Int) -> Self {
        debug_assert!(modulus.is_positive());
        ModNum {
            value: value.mod_floor(modulus),
            modulus: modulus.clone(),
        }
    }

    pub fn zero(modulus: &Int) -> Self {
        ModNum {
            value: Int::zero(),
            modulus: modulus.clone(),
        }
    }

    pub fn one(modulus: &Int) -> Self {
        Self::new(&Int::one(), modulus)
    }

    pub fn value(&self) -> &Int {
        &self.value
    }

    pub fn modulus(&self) -> &Int {
        &self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    fn check_same(&self, other: &Self) {
        assert_eq!(
            self.modulus, other.modulus,
            "mixed moduli in ModNum arithmetic"
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check_same(other);
        Self::new(&(&self.value + &other.value), &self.modulus)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check_same(other);
        Self::new(&(&self.value - &other.value), &self.modulus)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check_same(other);
        Self::new(&(&self.value * &other.value), &self.modulus)
    }

    pub fn neg(&self) -> Self {
        Self::new(&(-&self.value), &self.modulus)
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.modulus);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            exp >>= 1;
        }
        acc
    }

    /// Inverse via the extended Euclidean algorithm; errors when the value
    /// shares a factor with the modulus.
    pub fn inv(&self) -> Result<Self> {
        mod_inv(&self.value, &self.modulus)
            .map(|v| ModNum {
                value: v,
                modulus: self.modulus.clone(),
            })
            .ok_or_else(|| Error::NonUnitDenominator {
                denom: self.value.clone(),
                modulus: self.modulus.clone(),
                at_power: None,
            })
    }
}

impl fmt::Display for ModNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.value, self.modulus)
    }
}

/// Inverse of `a` modulo `m`, if `gcd(a, m) = 1`.
pub fn mod_inv(a: &Int, m: &Int) -> Option<Int> {
    let a = a.mod_floor(m);
    let ext = a.extended_gcd(m);
    if ext.gcd.is_one() {
        Some(ext.x.mod_floor(m))
    } else {
        None
    }
}

/// Trial-division primality, adequate for desk-scale moduli.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// All primes in the inclusive range `[lo, hi]`, by sieve of Eratosthenes.
pub fn primes_in(lo: u64, hi: u64) -> Vec<u64> {
    if hi < 2 || hi < lo {
        return Vec::new();
    }
    let hi_us = hi as usize;
    let mut composite = vec![false; hi_us + 1];
    let mut primes = Vec::new();
    for n in 2..=hi_us {
        if !composite[n] {
            if n as u64 >= lo {
                primes.push(n as u64);
            }
            let mut multiple = n * n;
            while multiple <= hi_us {
                composite[multiple] = true;
                multiple += n;
            }
        }
    }
    primes
}

/// Legendre symbol `(a/p)` by Euler's criterion. `p` must be an odd prime.
pub fn legendre(a: &Int, p: u64) -> Result<i32> {
    if p < 3 || !is_prime(p) {
        return Err(Error::NotOddPrime(p));
    }
    let m = Int::from(p);
    let r = ModNum::new(a, &m).pow((p - 1) / 2);
    if r.is_zero() {
        Ok(0)
    } else if r.value().is_one() {
        Ok(1)
    } else {
        Ok(-1)
    }
}

/// Fermat quotient `q_p(a) = (a^(p-1) - 1) / p`, reduced modulo `p^e`.
/// Undefined when `p` divides `a`.
pub fn fermat_quotient(a: &Int, p: u64, e: u32) -> Result<ModNum> {
    let pi = Int::from(p);
    if a.is_multiple_of(&pi) {
        return Err(Error::FermatQuotientUndefined { a: a.clone(), p });
    }
    // Compute a^(p-1) - 1 modulo p^(e+1) so the exact quotient survives the
    // division by p.
    let big = PrimePower::new(p, e + 1).modulus();
    let pow = ModNum::new(a, &big).pow(p - 1);
    let num = pow.value() - Int::one();
    debug_assert!(num.is_multiple_of(&pi));
    let m = PrimePower::new(p, e).modulus();
    Ok(ModNum::new(&(num / pi), &m))
}

/// First `n_max + 1` Bernoulli numbers (convention `B_1 = -1/2`), via the
/// defining recurrence `sum_j C(n+1, j) B_j = 0`.
pub fn bernoulli_table(n_max: usize) -> Vec<Rat> {
    let mut b: Vec<Rat> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        if n == 0 {
            b.push(Rat::one());
            continue;
        }
        if n > 1 && n % 2 == 1 {
            b.push(Rat::zero());
            continue;
        }
        let mut acc = Rat::zero();
        for (j, bj) in b.iter().enumerate() {
            if bj.is_zero() {
                continue;
            }
            acc += Rat::from(crate::exact::binom_u(n as u64 + 1, j as u64)) * bj;
        }
        b.push(-acc / Rat::from(Int::from(n as u64 + 1)));
    }
    b
}

/// Bernoulli number `B_n`.
pub fn bernoulli(n: usize) -> Rat {
    bernoulli_table(n).pop().unwrap()
}

/// First `n_max + 1` Euler numbers, via `sum_k C(2n, 2k) E_2k = 0` with
/// `E_0 = 1` and zero at odd index.
pub fn euler_table(n_max: usize) -> Vec<Int> {
    let mut e: Vec<Int> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        if n == 0 {
            e.push(Int::one());
            continue;
        }
        if n % 2 == 1 {
            e.push(Int::zero());
            continue;
        }
        let mut acc = Int::zero();
        for k in (0..n).step_by(2) {
            acc += crate::exact::binom_u(n as u64, k as u64) * &e[k];
        }
        e.push(-acc);
    }
    e
}

/// Euler number `E_n`.
pub fn euler_number(n: usize) -> Int {
    euler_table(n).pop().unwrap()
}

/// Harmonic number of the given order: `H_n = sum 1/k`, `H_n^(2) = sum 1/k^2`.
pub fn harmonic(n: u64, order: u32) -> Rat {
    let mut acc = Rat::zero();
    for k in 1..=n {
        let kpow = num::pow::pow(Int::from(k), order as usize);
        acc += Rat::new(Int::one(), kpow);
    }
    acc
}

/// Reduces a rational modulo `m`; the denominator must be a unit mod `m`.
pub fn rat_mod(a: &Rat, m: &Int) -> Result<ModNum> {
    let inv = mod_inv(a.denom(), m).ok_or_else(|| Error::NonUnitDenominator {
        denom: a.denom().clone(),
        modulus: m.clone(),
        at_power: None,
    })?;
    Ok(ModNum::new(&(a.numer() * inv), m))
}

/// Reduces every coefficient of a rational polynomial modulo `m`. The
/// error names the first power of `x` whose coefficient has a non-unit
/// denominator.
pub fn ratpoly_mod(p: &RatPoly, m: &Int) -> Result<IntPoly> {
    let mut out = Vec::with_capacity(p.coeffs().len());
    for (k, c) in p.coeffs().iter().enumerate() {
        let r = rat_mod(c, m).map_err(|e| match e {
            Error::NonUnitDenominator { denom, modulus, .. } => Error::NonUnitDenominator {
                denom,
                modulus,
                at_power: Some(k),
            },
            other => other,
        })?;
        out.push(r.value().clone());
    }
    Ok(IntPoly::from_coeffs(out))
}

/// A 3-adic valuation: finite exponent or `+inf` for zero.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Val3 {
    Finite(u64),
    Infinite,
}

impl Val3 {
    pub fn finite(&self) -> Option<u64> {
        match self {
            Val3::Finite(v) => Some(*v),
            Val3::Infinite => None,
        }
    }
}

impl PartialOrd for Val3 {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Val3 {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        match (self, other) {
            (Val3::Infinite, Val3::Infinite) => std::cmp::Ordering::Equal,
            (Val3::Infinite, _) => std::cmp::Ordering::Greater,
            (_, Val3::Infinite) => std::cmp::Ordering::Less,
            (Val3::Finite(a), Val3::Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for Val3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Val3::Finite(v) => write!(f, "{v}"),
            Val3::Infinite => write!(f, "inf"),
        }
    }
}

/// 3-adic valuation of an integer, with `nu3(0) = +inf`.
pub fn nu3(n: &Int) -> Val3 {
    if n.is_zero() {
        return Val3::Infinite;
    }
    let three = Int::from(3);
    let mut v = 0u64;
    let mut n = n.clone();
    loop {
        let (q, r) = n.div_rem(&three);
        if !r.is_zero() {
            return Val3::Finite(v);
        }
        v += 1;
        n = q;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{binom_u, int, rat};
    use proptest::prelude::*;

    #[test]
    fn modnum_basics() {
        let m = int(25);
        let a = ModNum::new(&int(-3), &m);
        assert_eq!(a.value(), &int(22));
        assert_eq!(a.add(&ModNum::new(&int(4), &m)).value(), &int(1));
        assert_eq!(a.pow(2).value(), &int(9));
        assert_eq!(a.inv().unwrap().mul(&a).value(), &int(1));
        assert_eq!(ModNum::new(&int(5), &m).inv(), Err(Error::NonUnitDenominator {
            denom: int(5),
            modulus: int(25),
            at_power: None,
        }));
    }

    #[test]
    #[should_panic(expected = "mixed moduli")]
    fn modnum_rejects_mixed_moduli() {
        let a = ModNum::new(&int(1), &int(25));
        let b = ModNum::new(&int(1), &int(5));
        let _ = a.add(&b);
    }

    #[test]
    fn legendre_examples() {
        assert_eq!(legendre(&int(2), 5).unwrap(), -1);
        assert_eq!(legendre(&int(5), 3).unwrap(), -1);
        assert_eq!(legendre(&int(-1), 5).unwrap(), 1);
        assert_eq!(legendre(&int(10), 5).unwrap(), 0);
        assert_eq!(legendre(&int(2), 4), Err(Error::NotOddPrime(4)));
        assert_eq!(legendre(&int(2), 2), Err(Error::NotOddPrime(2)));
    }

    #[test]
    fn legendre_is_multiplicative() {
        for p in [3u64, 5, 7, 11, 13, 97] {
            for a in -6i64..=6 {
                for b in -6i64..=6 {
                    let lhs = legendre(&int(a * b), p).unwrap();
                    let rhs = legendre(&int(a), p).unwrap() * legendre(&int(b), p).unwrap();
                    assert_eq!(lhs, rhs, "p={p} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn fermat_quotient_examples() {
        assert_eq!(fermat_quotient(&int(2), 5, 1).unwrap().value(), &int(3));
        assert_eq!(fermat_quotient(&int(3), 5, 2).unwrap().value(), &int(16));
        assert!(matches!(
            fermat_quotient(&int(10), 5, 1),
            Err(Error::FermatQuotientUndefined { .. })
        ));
    }

    #[test]
    fn bernoulli_examples() {
        let b = bernoulli_table(12);
        assert_eq!(b[0], rat(1, 1));
        assert_eq!(b[1], rat(-1, 2));
        assert_eq!(b[2], rat(1, 6));
        assert_eq!(b[3], rat(0, 1));
        assert_eq!(b[4], rat(-1, 30));
        assert_eq!(b[12], rat(-691, 2730));
        assert_eq!(bernoulli(6), rat(1, 42));
    }

    #[test]
    fn bernoulli_von_staudt_clausen_denominators() {
        // denom(B_2n) is the product of primes q with (q-1) | 2n.
        let b = bernoulli_table(60);
        for n in 1..=30 {
            let mut denom = Int::one();
            for q in primes_in(2, 2 * n as u64 + 1) {
                if (2 * n as u64) % (q - 1) == 0 {
                    denom *= Int::from(q);
                }
            }
            assert_eq!(b[2 * n].denom(), &denom, "n={n}");
        }
    }

    #[test]
    fn euler_examples() {
        let e = euler_table(10);
        assert_eq!(e[0], int(1));
        assert_eq!(e[1], int(0));
        assert_eq!(e[2], int(-1));
        assert_eq!(e[4], int(5));
        assert_eq!(e[6], int(-61));
        assert_eq!(e[8], int(1385));
        assert_eq!(e[10], int(-50521));
        assert_eq!(euler_number(4), int(5));
    }

    #[test]
    fn harmonic_examples() {
        assert_eq!(harmonic(4, 1), rat(25, 12));
        assert_eq!(harmonic(4, 2), rat(205, 144));
        assert_eq!(harmonic(0, 1), rat(0, 1));
    }

    #[test]
    fn rat_mod_examples() {
        assert_eq!(rat_mod(&rat(-3, 4), &int(25)).unwrap().value(), &int(18));
        assert_eq!(rat_mod(&rat(25, 12), &int(25)).unwrap().value(), &int(0));
        assert!(matches!(
            rat_mod(&rat(1, 5), &int(25)),
            Err(Error::NonUnitDenominator { .. })
        ));
    }

    #[test]
    fn ratpoly_mod_examples() {
        let half_x = RatPoly::from_coeffs(vec![rat(0, 1), rat(1, 2)]);
        let r = ratpoly_mod(&half_x, &int(25)).unwrap();
        assert_eq!(r.to_string(), "13*x");

        let p = RatPoly::from_coeffs(vec![rat(1, 1), rat(3, 4)]);
        assert_eq!(ratpoly_mod(&p, &int(5)).unwrap().to_string(), "1 + 2*x");

        let bad = RatPoly::from_coeffs(vec![rat(1, 1), rat(1, 5)]);
        assert_eq!(
            ratpoly_mod(&bad, &int(25)),
            Err(Error::NonUnitDenominator {
                denom: int(5),
                modulus: int(25),
                at_power: Some(1),
            })
        );
    }

    #[test]
    fn nu3_examples() {
        assert_eq!(nu3(&int(0)), Val3::Infinite);
        assert_eq!(nu3(&int(27)), Val3::Finite(3));
        assert_eq!(nu3(&int(54)), Val3::Finite(3));
        assert_eq!(nu3(&int(-9)), Val3::Finite(2));
        assert_eq!(nu3(&int(7)), Val3::Finite(0));
        assert_eq!(nu3(&int(351)), Val3::Finite(3));
        assert!(Val3::Infinite > Val3::Finite(u64::MAX));
    }

    #[test]
    fn prime_ranges() {
        assert_eq!(primes_in(5, 13), vec![5, 7, 11, 13]);
        assert_eq!(primes_in(2, 500).len(), 95);
        assert_eq!(primes_in(4, 4), Vec::<u64>::new());
        assert_eq!(primes_in(10, 2), Vec::<u64>::new());
    }

    #[test]
    fn wolstenholme_for_desk_primes() {
        // H_(p-1) = 0 mod p^2, H2_(p-1) = 0 mod p, C(2p-1, p-1) = 1 mod p^3.
        for p in primes_in(5, 100) {
            let p2 = Int::from(p * p);
            let p3 = Int::from(p * p * p);
            assert!(rat_mod(&harmonic(p - 1, 1), &p2).unwrap().is_zero());
            assert!(rat_mod(&harmonic(p - 1, 2), &Int::from(p)).unwrap().is_zero());
            let c = binom_u(2 * p - 1, p - 1);
            assert!((c - Int::one()).is_multiple_of(&p3), "p={p}");
        }
    }

    proptest! {
        #[test]
        fn rat_mod_is_additive_and_multiplicative(
            an in -50i64..=50, ad in 1i64..=50, bn in -50i64..=50, bd in 1i64..=50
        ) {
            let m = int(343); // 7^3
            prop_assume!(ad % 7 != 0 && bd % 7 != 0);
            let a = rat(an, ad);
            let b = rat(bn, bd);
            let ra = rat_mod(&a, &m).unwrap();
            let rb = rat_mod(&b, &m).unwrap();
            prop_assert_eq!(rat_mod(&(&a + &b), &m).unwrap(), ra.add(&rb));
            prop_assert_eq!(rat_mod(&(&a * &b), &m).unwrap(), ra.mul(&rb));
        }

        #[test]
        fn mod_inv_agrees_with_gcd(a in 1i64..=5000, m in 2i64..=5000) {
            let g = num::integer::gcd(a, m);
            let inv = mod_inv(&int(a), &int(m));
            if g == 1 {
                let v = inv.unwrap();
                prop_assert_eq!((v * int(a)).mod_floor(&int(m)), int(1));
            } else {
                prop_assert!(inv.is_none());
            }
        }

        #[test]
        fn nu3_is_additive(a in 1i64..=100_000, b in 1i64..=100_000) {
            let va = nu3(&int(a)).finite().unwrap();
            let vb = nu3(&int(b)).finite().unwrap();
            prop_assert_eq!(nu3(&int(a * b)), Val3::Finite(va + vb));
        }
    }
}
