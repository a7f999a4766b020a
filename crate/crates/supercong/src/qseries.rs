//! q-analogues: Laurent polynomials in `q`, q-integers, Gaussian binomial
//! coefficients (including negative upper index), and the q-forms of the
//! `g` and Apery polynomial families.
//!
//! Conventions. `[n]_q = (1 - q^n) / (1 - q)` for any integer `n`, so
//! `[-n]_q = -q^(-n) [n]_q` and negative indices produce genuine Laurent
//! polynomials. The Gaussian binomial `[n, k]_q` is computed for `n >= 0`
//! by the division-free q-Pascal recurrence and for `n < 0` by the
//! reduction `[-m-1, k]_q = (-1)^k q^(-km - k(k+1)/2) [m+k, k]_q`; the
//! product formula with exact Laurent division is kept alongside as an
//! independent route and cross-checked in the catalog.

use crate::exact::{Int, sign_pow};
use crate::poly::Poly;
use num::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Laurent polynomial in `q` with exact integer coefficients.
///
/// Invariant: `coeffs` is empty exactly for zero (then `min = 0`); an
/// occupied vector has nonzero first and last entries. `min` is the
/// exponent of `coeffs[0]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QLaurent {
    min: i64,
    coeffs: Vec<Int>,
}

impl QLaurent {
    pub fn zero() -> Self {
        QLaurent {
            min: 0,
            coeffs: Vec::new(),
        }
    }

    pub fn one() -> Self {
        Self::monomial(0, Int::one())
    }

    pub fn monomial(exp: i64, coeff: Int) -> Self {
        if coeff.is_zero() {
            return Self::zero();
        }
        QLaurent {
            min: exp,
            coeffs: vec![coeff],
        }
    }

    /// Builds from `(min, ascending coefficients)`, normalizing.
    pub fn from_parts(min: i64, coeffs: Vec<Int>) -> Self {
        let mut v = QLaurent { min, coeffs };
        v.normalize();
        v
    }

    fn normalize(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let strip = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if strip > 0 {
            self.coeffs.drain(..strip);
            self.min += strip as i64;
        }
        if self.coeffs.is_empty() {
            self.min = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent (None for zero).
    pub fn min_exp(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.min)
    }

    /// Highest exponent (None for zero).
    pub fn max_exp(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.min + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, exp: i64) -> Int {
        if self.is_zero() {
            return Int::zero();
        }
        let idx = exp - self.min;
        if idx < 0 || idx as usize >= self.coeffs.len() {
            Int::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    pub fn add_ref(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let min = self.min.min(other.min);
        let max = (self.min + self.coeffs.len() as i64 - 1)
            .max(other.min + other.coeffs.len() as i64 - 1);
        let mut coeffs = vec![Int::zero(); (max - min + 1) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.min - min) as usize + i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[(other.min - min) as usize + i] += c;
        }
        Self::from_parts(min, coeffs)
    }

    pub fn neg_ref(&self) -> Self {
        QLaurent {
            min: self.min,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn sub_ref(&self, other: &Self) -> Self {
        self.add_ref(&other.neg_ref())
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Int::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::from_parts(self.min + other.min, coeffs)
    }

    pub fn scale(&self, c: &Int) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        QLaurent {
            min: self.min,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiplies by `q^k` (k may be negative).
    pub fn mul_qpow(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        QLaurent {
            min: self.min + k,
            coeffs: self.coeffs.clone(),
        }
    }

    /// Exact Laurent division; `None` when the division leaves a remainder.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        assert!(!divisor.is_zero(), "division by zero Laurent polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let mut rem = self.coeffs.clone();
        let d = &divisor.coeffs;
        if rem.len() < d.len() {
            return None;
        }
        let mut quot = vec![Int::zero(); rem.len() - d.len() + 1];
        let lead = d.last().unwrap();
        for i in (0..quot.len()).rev() {
            let top = rem[i + d.len() - 1].clone();
            if top.is_zero() {
                continue;
            }
            let (qc, r) = num::Integer::div_rem(&top, lead);
            if !r.is_zero() {
                return None;
            }
            for (j, dc) in d.iter().enumerate() {
                rem[i + j] -= &qc * dc;
            }
            quot[i] = qc;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_parts(self.min - divisor.min, quot))
    }

    /// Specializes `q = 1`: the coefficient sum.
    pub fn eval_at_one(&self) -> Int {
        self.coeffs.iter().sum()
    }

    /// Coefficient list reads the same in both directions.
    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }
}

impl Zero for QLaurent {
    fn zero() -> Self {
        QLaurent::zero()
    }
    fn is_zero(&self) -> bool {
        QLaurent::is_zero(self)
    }
}

impl One for QLaurent {
    fn one() -> Self {
        QLaurent::one()
    }
}

impl Add for QLaurent {
    type Output = QLaurent;
    fn add(self, rhs: Self) -> Self {
        self.add_ref(&rhs)
    }
}

impl Sub for QLaurent {
    type Output = QLaurent;
    fn sub(self, rhs: Self) -> Self {
        self.sub_ref(&rhs)
    }
}

impl Mul for QLaurent {
    type Output = QLaurent;
    fn mul(self, rhs: Self) -> Self {
        self.mul_ref(&rhs)
    }
}

impl Neg for QLaurent {
    type Output = QLaurent;
    fn neg(self) -> Self {
        self.neg_ref()
    }
}

impl fmt::Display for QLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let exp = self.min + i as i64;
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = mag.is_one();
            match (exp, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{mag}*q")?,
                (_, true) => write!(f, "q^{exp}")?,
                (_, false) => write!(f, "{mag}*q^{exp}")?,
            }
        }
        Ok(())
    }
}

/// Polynomial in `x` with Laurent-in-`q` coefficients.
pub type QXPoly = Poly<QLaurent>;

impl fmt::Display for QXPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})*x")?,
                _ => write!(f, "({c})*x^{k}")?,
            }
        }
        Ok(())
    }
}

/// q-integer `[n]_q` for any integer `n`.
///
/// `[n]_q = 1 + q + ... + q^(n-1)` for `n >= 0` and
/// `[n]_q = -(q^n + ... + q^-1)` for `n < 0`.
pub fn q_int(n: i64) -> QLaurent {
    use std::cmp::Ordering;
    match n.cmp(&0) {
        Ordering::Equal => QLaurent::zero(),
        Ordering::Greater => QLaurent::from_parts(0, vec![Int::one(); n as usize]),
        Ordering::Less => QLaurent::from_parts(n, vec![-Int::one(); (-n) as usize]),
    }
}

/// Gaussian binomial `[n, k]_q` for integer `n` (possibly negative) and
/// `k >= 0`.
pub fn q_binom(n: i64, k: u64) -> QLaurent {
    if k == 0 {
        return QLaurent::one();
    }
    if n >= 0 {
        if (k as i64) > n {
            return QLaurent::zero();
        }
        // q-Pascal: [m, j] = [m-1, j-1] + q^j [m-1, j], row by row.
        let kk = k as usize;
        let mut row = vec![QLaurent::zero(); kk + 1];
        row[0] = QLaurent::one();
        for _m in 1..=n {
            for j in (1..=kk).rev() {
                row[j] = row[j - 1].add_ref(&row[j].mul_qpow(j as i64));
            }
        }
        row[kk].clone()
    } else {
        // [-m-1, k] = (-1)^k q^(-km - k(k+1)/2) [m+k, k]
        let m = (-n - 1) as u64;
        let exp = -(k as i64) * m as i64 - (k as i64) * (k as i64 + 1) / 2;
        q_binom((m + k) as i64, k)
            .mul_qpow(exp)
            .scale(&sign_pow(k))
    }
}

/// `[n, k]_q` by the product formula `prod [n-j+1] / [j]` with exact
/// Laurent division at each step. Independent of [`q_binom`]; the catalog
/// cross-checks the two.
pub fn q_binom_product(n: i64, k: u64) -> QLaurent {
    let mut acc = QLaurent::one();
    for j in 1..=k {
        acc = acc.mul_ref(&q_int(n - j as i64 + 1));
        acc = acc
            .div_exact(&q_int(j as i64))
            .expect("Gaussian binomial product must divide exactly");
    }
    acc
}

/// `g_n(x; q) = sum_k q^(2n(n-k)) [n,k]^2 [2k,k] x^k`.
pub fn g_q(n: u64) -> QXPoly {
    let coeffs = (0..=n)
        .map(|k| {
            let nk = q_binom(n as i64, k);
            let exp = 2 * n as i64 * (n - k) as i64;
            nk.mul_ref(&nk)
                .mul_ref(&q_binom(2 * k as i64, k))
                .mul_qpow(exp)
        })
        .collect();
    Poly::from_coeffs(coeffs)
}

/// `A_n(x; q) = sum_k q^(2n(n-k)) [n,k]^2 [n+k,k]^2 x^k`.
pub fn a_q(n: u64) -> QXPoly {
    let coeffs = (0..=n)
        .map(|k| {
            let nk = q_binom(n as i64, k);
            let nkk = q_binom((n + k) as i64, k);
            let exp = 2 * n as i64 * (n - k) as i64;
            nk.mul_ref(&nk)
                .mul_ref(&nkk.mul_ref(&nkk))
                .mul_qpow(exp)
        })
        .collect();
    Poly::from_coeffs(coeffs)
}

/// Right side of the q-transformation that expands `A_n(x; q)` in the
/// `g_k(x; q)`: `sum_k (-1)^(n-k) q^((n-k)(5n+3k+1)/2) [n,k] [n+k,k]
/// g_k(x; q)`.
pub fn apery_q_expansion(n: u64) -> QXPoly {
    let mut acc: QXPoly = Poly::new();
    for k in 0..=n {
        let d = n - k;
        let prod = (d as i64) * (5 * n as i64 + 3 * k as i64 + 1);
        debug_assert!(prod % 2 == 0);
        let scalar = q_binom(n as i64, k)
            .mul_ref(&q_binom((n + k) as i64, k))
            .mul_qpow(prod / 2)
            .scale(&sign_pow(d));
        acc = acc.add(&g_q(k).scale(&scalar));
    }
    acc
}

/// True when the q-transformation identity holds at level `n`.
pub fn transform_matches(n: u64) -> bool {
    a_q(n) == apery_q_expansion(n)
}
