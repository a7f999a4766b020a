//! Dense univariate polynomials over an exact coefficient ring.
//!
//! One generic carrier serves three instantiations: [`IntPoly`] over
//! [`Int`], [`RatPoly`] over [`Rat`], and (in the q-analogue layer)
//! polynomials in `x` whose coefficients are Laurent polynomials in `q`.
//! Coefficients are stored ascending by power with no trailing zeros, so
//! the zero polynomial is the empty vector and `degree` is `None` for it
//! rather than a sentinel integer.

use crate::exact::{Int, Rat};
use num::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub trait Coeff:
    Clone
    + PartialEq
    + Zero
    + One
    + Sub<Output = Self>
    + Neg<Output = Self>
{
}

impl<T> Coeff for T where
    T: Clone + PartialEq + Zero + One + Sub<Output = T> + Neg<Output = T>
{
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Poly<C> {
    coeffs: Vec<C>,
}

pub type IntPoly = Poly<Int>;
pub type RatPoly = Poly<Rat>;

impl<C: Coeff> Poly<C> {
    pub fn new() -> Self {
        Poly { coeffs: Vec::new() }
    }

    /// Builds from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn constant(c: C) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// `c * x^k`.
    pub fn monomial(k: usize, c: C) -> Self {
        if c.is_zero() {
            return Self::new();
        }
        let mut coeffs = vec![C::zero(); k + 1];
        coeffs[k] = c;
        Poly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^i`, zero beyond the stored length.
    pub fn coeff(&self, i: usize) -> C {
        self.coeffs.get(i).cloned().unwrap_or_else(C::zero)
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) + other.coeff(i));
        }
        Self::from_coeffs(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.coeff(i) - other.coeff(i));
        }
        Self::from_coeffs(out)
    }

    pub fn neg(&self) -> Self {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::new();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Self::from_coeffs(out)
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::new();
        }
        Self::from_coeffs(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::new();
        }
        let mut coeffs = vec![C::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &C) -> C {
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    pub fn map<D: Coeff>(&self, f: impl Fn(&C) -> D) -> Poly<D> {
        Poly::from_coeffs(self.coeffs.iter().map(f).collect())
    }
}

impl IntPoly {
    /// Same polynomial with rational coefficients.
    pub fn to_rat(&self) -> RatPoly {
        self.map(|c| Rat::from(c.clone()))
    }

    pub fn eval_i64(&self, x: i64) -> Int {
        self.eval(&Int::from(x))
    }
}

impl RatPoly {
    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs().iter().all(|c| c.denom().is_one())
    }

    /// Integer image if all coefficients are integral.
    pub fn to_int(&self) -> Option<IntPoly> {
        if !self.is_integral() {
            return None;
        }
        Some(Poly::from_coeffs(
            self.coeffs().iter().map(|c| c.numer().clone()).collect(),
        ))
    }
}

impl<C: Coeff> Add for &Poly<C> {
    type Output = Poly<C>;
    fn add(self, rhs: Self) -> Poly<C> {
        Poly::add(self, rhs)
    }
}

impl<C: Coeff> Sub for &Poly<C> {
    type Output = Poly<C>;
    fn sub(self, rhs: Self) -> Poly<C> {
        Poly::sub(self, rhs)
    }
}

impl<C: Coeff> Mul for &Poly<C> {
    type Output = Poly<C>;
    fn mul(self, rhs: Self) -> Poly<C> {
        Poly::mul(self, rhs)
    }
}

impl<C: Coeff> Neg for &Poly<C> {
    type Output = Poly<C>;
    fn neg(self) -> Poly<C> {
        Poly::neg(self)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
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
            match (k, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}*x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{mag}*x^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{int, rat};
    use proptest::prelude::*;

    fn ip(cs: &[i64]) -> IntPoly {
        IntPoly::from_coeffs(cs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn degree_of_zero_is_none() {
        assert_eq!(IntPoly::new().degree(), None);
        assert_eq!(ip(&[0, 0]).degree(), None);
        assert_eq!(ip(&[5]).degree(), Some(0));
        assert_eq!(ip(&[0, 0, 3]).degree(), Some(2));
    }

    #[test]
    fn evaluation_examples() {
        // 1 + 8x + 6x^2 at x = -3.
        let p = ip(&[1, 8, 6]);
        assert_eq!(p.eval_i64(-3), int(31));
        assert_eq!(p.eval_i64(0), int(1));
    }

    #[test]
    fn display_matches_expected_shape() {
        assert_eq!(ip(&[1, 8, 6]).to_string(), "1 + 8*x + 6*x^2");
        assert_eq!(ip(&[0, 4, 6]).to_string(), "4*x + 6*x^2");
        assert_eq!(ip(&[1, -18, 0, 20]).to_string(), "1 - 18*x + 20*x^3");
        assert_eq!(ip(&[0, 1]).to_string(), "x");
        assert_eq!(ip(&[-1, 0, -1]).to_string(), "-1 - x^2");
        assert_eq!(IntPoly::new().to_string(), "0");
    }

    #[test]
    fn rational_polynomials_integrality() {
        let p = RatPoly::from_coeffs(vec![rat(2, 1), rat(6, 3)]);
        assert!(p.is_integral());
        assert_eq!(p.to_int().unwrap(), ip(&[2, 2]));
        let q = RatPoly::from_coeffs(vec![rat(1, 2)]);
        assert!(q.to_int().is_none());
    }

    fn arb_poly() -> impl Strategy<Value = IntPoly> {
        proptest::collection::vec(-99i64..=99, 0..=9)
            .prop_map(|cs| IntPoly::from_coeffs(cs.into_iter().map(int).collect()))
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            let left = &a * &(&b + &c);
            let right = &(&a * &b) + &(&a * &c);
            prop_assert_eq!(left, right);
            prop_assert_eq!(&a - &a, IntPoly::new());
        }

        #[test]
        fn eval_is_ring_homomorphism(a in arb_poly(), b in arb_poly(), x in -9i64..=9) {
            let x = int(x);
            prop_assert_eq!((&a + &b).eval(&x), a.eval(&x) + b.eval(&x));
            prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
        }

        #[test]
        fn degree_of_product(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!a.is_zero() && !b.is_zero());
            let expect = a.degree().unwrap() + b.degree().unwrap();
            prop_assert_eq!((&a * &b).degree(), Some(expect));
        }
    }
}
