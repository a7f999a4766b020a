//! The sequence families under study.
//!
//! Scalar families: Franel numbers `f_n = sum C(n,k)^3`, the central
//! binomial weighted sums `g_n = sum C(n,k)^2 C(2k,k)`, Apery numbers
//! `A_n = sum C(n,k)^2 C(n+k,k)^2`, Catalan numbers, and several derived
//! sequences the conjecture checks quote (`F_n`, `G_n`, `h_n`, normalized
//! alternating Franel sums, and `s_n = g_n(-1)`).
//!
//! Polynomial families: `g_n(x)`, `f_n(x) = sum C(n,k)^2 C(2k,n) x^k`
//! (whose lowest nonzero term sits at `k = ceil(n/2)`), and `A_n(x)`.
//!
//! Every value is computed by direct summation over exact integers.
//! [`SeqTable`] builds shared prefixes of all families in one pass with
//! incrementally updated binomial rows, and is immutable afterwards, so
//! check runners can read it from many threads. The standalone functions
//! recompute from scratch and exist so tests can confirm the table is a
//! transparent cache.

use crate::error::{Error, Result};
use crate::exact::{binom_u, div_exact, int, int_pow, sign_pow, Int};
use crate::poly::IntPoly;
use num::{Integer, One, Zero};
use std::fmt;
use std::str::FromStr;

/// Stable tags for every sequence the CLI can print.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, PartialOrd, Ord)]
pub enum SeqId {
    Franel,
    FranelPoly,
    G,
    GPoly,
    Apery,
    AperyPoly,
    Catalan,
    FConj43,
    GConj43,
    HRemark41,
    ANormalized,
    SGNeg1,
}

impl SeqId {
    pub const ALL: [SeqId; 12] = [
        SeqId::Franel,
        SeqId::FranelPoly,
        SeqId::G,
        SeqId::GPoly,
        SeqId::Apery,
        SeqId::AperyPoly,
        SeqId::Catalan,
        SeqId::FConj43,
        SeqId::GConj43,
        SeqId::HRemark41,
        SeqId::ANormalized,
        SeqId::SGNeg1,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            SeqId::Franel => "franel",
            SeqId::FranelPoly => "franel_poly",
            SeqId::G => "g",
            SeqId::GPoly => "g_poly",
            SeqId::Apery => "apery",
            SeqId::AperyPoly => "apery_poly",
            SeqId::Catalan => "catalan",
            SeqId::FConj43 => "F_conj43",
            SeqId::GConj43 => "G_conj43",
            SeqId::HRemark41 => "h_remark41",
            SeqId::ANormalized => "a_normalized",
            SeqId::SGNeg1 => "s_gneg1",
        }
    }

    pub fn is_polynomial(&self) -> bool {
        matches!(self, SeqId::FranelPoly | SeqId::GPoly | SeqId::AperyPoly)
    }
}

impl fmt::Display for SeqId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SeqId {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        SeqId::ALL
            .iter()
            .copied()
            .find(|id| id.name() == s)
            .ok_or_else(|| format!("unknown sequence '{s}'"))
    }
}

fn dx(n: Int, d: u64) -> Int {
    let (q, r) = n.div_rem(&Int::from(d));
    debug_assert!(r.is_zero(), "expected exact division by {d}");
    q
}

/// Row of binomials `C(n, 0..=n)`.
pub(crate) fn binom_row(n: u64) -> Vec<Int> {
    let mut b = Vec::with_capacity(n as usize + 1);
    b.push(Int::one());
    for k in 1..=n {
        let next = dx(&b[(k - 1) as usize] * Int::from(n - k + 1), k);
        b.push(next);
    }
    b
}

/// `g_n(x)` coefficients: `C(n,k)^2 C(2k,k)`.
fn g_poly_direct(n: u64) -> IntPoly {
    let b = binom_row(n);
    let coeffs = (0..=n)
        .map(|k| &b[k as usize] * &b[k as usize] * binom_u(2 * k, k))
        .collect();
    IntPoly::from_coeffs(coeffs)
}

/// `f_n(x)` coefficients: `C(n,k)^2 C(2k,n)`.
fn f_poly_direct(n: u64) -> IntPoly {
    let b = binom_row(n);
    let coeffs = (0..=n)
        .map(|k| &b[k as usize] * &b[k as usize] * binom_u(2 * k, n))
        .collect();
    IntPoly::from_coeffs(coeffs)
}

/// `A_n(x)` coefficients: `C(n,k)^2 C(n+k,k)^2`.
fn a_poly_direct(n: u64) -> IntPoly {
    let b = binom_row(n);
    let coeffs = (0..=n)
        .map(|k| {
            let nk = binom_u(n + k, k);
            &b[k as usize] * &b[k as usize] * &nk * &nk
        })
        .collect();
    IntPoly::from_coeffs(coeffs)
}

/// Defining-sum value of a scalar sequence, computed fresh each call.
pub fn seq_value(id: SeqId, n: u64) -> Result<Int> {
    let b = binom_row(n);
    let bk = |k: u64| &b[k as usize];
    let v = match id {
        SeqId::Franel => (0..=n).map(|k| bk(k) * bk(k) * bk(k)).sum(),
        SeqId::G => (0..=n).map(|k| bk(k) * bk(k) * binom_u(2 * k, k)).sum(),
        SeqId::Apery => (0..=n)
            .map(|k| {
                let nk = binom_u(n + k, k);
                bk(k) * bk(k) * &nk * &nk
            })
            .sum(),
        SeqId::Catalan => binom_u(2 * n, n) - crate::exact::binom(&Int::from(2 * n), n + 1),
        SeqId::FConj43 => (0..=n)
            .map(|k| bk(k) * bk(k) * bk(k) * int_pow(-8, k))
            .sum(),
        SeqId::GConj43 => (0..=n)
            .map(|k| bk(k) * bk(k) * int(6 * k as i64 + 1) * seq_value(SeqId::Catalan, k).unwrap())
            .sum(),
        SeqId::HRemark41 => (0..=n)
            .map(|k| bk(k) * bk(k) * seq_value(SeqId::Catalan, k).unwrap())
            .sum(),
        SeqId::ANormalized => {
            if n == 0 {
                return Ok(Int::zero());
            }
            let s: Int = (0..n)
                .map(|k| int(3 * k as i64 + 2) * sign_pow(k) * seq_value(SeqId::Franel, k).unwrap())
                .sum();
            div_exact(&s, &Int::from(n * n), "alternating Franel sum normalization")?
        }
        SeqId::SGNeg1 => g_poly_direct(n).eval_i64(-1),
        SeqId::FranelPoly | SeqId::GPoly | SeqId::AperyPoly => {
            return Err(Error::OutOfDomain(id.name(), n))
        }
    };
    Ok(v)
}

/// Defining-sum polynomial of a polynomial family.
pub fn seq_poly(id: SeqId, n: u64) -> Result<IntPoly> {
    match id {
        SeqId::FranelPoly => Ok(f_poly_direct(n)),
        SeqId::GPoly => Ok(g_poly_direct(n)),
        SeqId::AperyPoly => Ok(a_poly_direct(n)),
        _ => Err(Error::OutOfDomain(id.name(), n)),
    }
}

/// Value via the published recurrence instead of the defining sum.
///
/// Supported: `franel` (three-term) and `s_gneg1` (four-term). Initial
/// terms come from direct summation; every division the recurrence
/// performs is checked to be exact, and a failed division surfaces as an
/// integrity error because it would falsify the recurrence itself.
pub fn seq_by_recurrence(id: SeqId, n: u64) -> Result<Int> {
    match id {
        SeqId::Franel => {
            let mut f0 = seq_value(SeqId::Franel, 0)?;
            if n == 0 {
                return Ok(f0);
            }
            let mut f1 = seq_value(SeqId::Franel, 1)?;
            for m in 1..n {
                // (m+1)^2 f_{m+1} = (7m(m+1)+2) f_m + 8 m^2 f_{m-1}
                let m_i = m as i64;
                let num = int(7 * m_i * (m_i + 1) + 2) * &f1 + int(8 * m_i * m_i) * &f0;
                let next = div_exact(&num, &int((m_i + 1) * (m_i + 1)), "Franel recurrence")?;
                f0 = f1;
                f1 = next;
            }
            Ok(f1)
        }
        SeqId::SGNeg1 => {
            let mut s = [
                seq_value(SeqId::SGNeg1, 0)?,
                seq_value(SeqId::SGNeg1, 1)?,
                seq_value(SeqId::SGNeg1, 2)?,
            ];
            if n <= 2 {
                return Ok(s[n as usize].clone());
            }
            for m in 0..(n - 2) {
                // (m+3)^2 (4m+5) s_{m+3} + (20m^3+125m^2+254m+165) s_{m+2}
                //   + (76m^3+399m^2+678m+375) s_{m+1} - 25 (m+1)^2 (4m+9) s_m = 0
                let m_i = m as i64;
                let c2 = int(20 * m_i.pow(3) + 125 * m_i.pow(2) + 254 * m_i + 165);
                let c1 = int(76 * m_i.pow(3) + 399 * m_i.pow(2) + 678 * m_i + 375);
                let c0 = int(25 * (m_i + 1).pow(2) * (4 * m_i + 9));
                let num = c0 * &s[0] - c2 * &s[2] - c1 * &s[1];
                let den = int((m_i + 3).pow(2) * (4 * m_i + 5));
                let next = div_exact(&num, &den, "g(-1) recurrence")?;
                s = [s[1].clone(), s[2].clone(), next];
            }
            Ok(s[2].clone())
        }
        _ => Err(Error::OutOfDomain(id.name(), n)),
    }
}

/// `sum_k w(k) (+-1)^k values[k]` over the whole slice.
pub fn partial_weighted_sum(
    values: &[Int],
    alternating: bool,
    weight: impl Fn(u64) -> Int,
) -> Int {
    let mut acc = Int::zero();
    for (k, v) in values.iter().enumerate() {
        let mut term = weight(k as u64) * v;
        if alternating && k % 2 == 1 {
            term = -term;
        }
        acc += term;
    }
    acc
}

/// Which prefixes [`SeqTable::build`] should materialize.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TableSpec {
    /// All scalar families are built for indices `0..=scalar_hi`.
    pub scalar_hi: u64,
    /// Polynomial families are built to their own bounds (0 = skip,
    /// besides index 0 being trivial these are inclusive highest `n`).
    pub g_poly_hi: Option<u64>,
    pub f_poly_hi: Option<u64>,
    pub a_poly_hi: Option<u64>,
}

impl TableSpec {
    pub fn scalars_only(scalar_hi: u64) -> Self {
        TableSpec {
            scalar_hi,
            g_poly_hi: None,
            f_poly_hi: None,
            a_poly_hi: None,
        }
    }
}

/// Shared prefix tables of every family, built once per run.
#[derive(Clone, Debug)]
pub struct SeqTable {
    /// `C(2k, k)`.
    pub central: Vec<Int>,
    pub catalan: Vec<Int>,
    pub franel: Vec<Int>,
    pub g: Vec<Int>,
    pub apery: Vec<Int>,
    /// `g_n(-1)`.
    pub s: Vec<Int>,
    /// `g_n(-3)`.
    pub g_at_m3: Vec<Int>,
    /// `f_n(-1)`.
    pub f_at_m1: Vec<Int>,
    /// `F_n = sum C(n,k)^3 (-8)^k`.
    pub big_f: Vec<Int>,
    /// `G_n = sum C(n,k)^2 (6k+1) C_k`.
    pub big_g: Vec<Int>,
    /// `h_n = sum C(n,k)^2 C_k`.
    pub h_small: Vec<Int>,
    pub g_poly: Vec<IntPoly>,
    pub f_poly: Vec<IntPoly>,
    pub a_poly: Vec<IntPoly>,
}

impl SeqTable {
    pub fn build(spec: &TableSpec) -> SeqTable {
        let hi = spec.scalar_hi;
        let n_rows = hi as usize + 1;

        let mut central = Vec::with_capacity(n_rows);
        let mut catalan = Vec::with_capacity(n_rows);
        central.push(Int::one());
        catalan.push(Int::one());
        for k in 1..=hi {
            let c = dx(&central[(k - 1) as usize] * int(2 * (2 * k as i64 - 1)), k);
            catalan.push(dx(c.clone(), k + 1));
            central.push(c);
        }

        let mut table = SeqTable {
            central,
            catalan,
            franel: Vec::with_capacity(n_rows),
            g: Vec::with_capacity(n_rows),
            apery: Vec::with_capacity(n_rows),
            s: Vec::with_capacity(n_rows),
            g_at_m3: Vec::with_capacity(n_rows),
            f_at_m1: Vec::with_capacity(n_rows),
            big_f: Vec::with_capacity(n_rows),
            big_g: Vec::with_capacity(n_rows),
            h_small: Vec::with_capacity(n_rows),
            g_poly: Vec::new(),
            f_poly: Vec::new(),
            a_poly: Vec::new(),
        };

        for n in 0..=hi {
            let b = binom_row(n);

            // binom(n+k, k), ascending in k.
            let mut bb = Vec::with_capacity(n as usize + 1);
            bb.push(Int::one());
            for k in 1..=n {
                bb.push(dx(&bb[(k - 1) as usize] * Int::from(n + k), k));
            }

            let mut f_acc = Int::zero();
            let mut big_f_acc = Int::zero();
            let mut g_acc = Int::zero();
            let mut s_acc = Int::zero();
            let mut gm3_acc = Int::zero();
            let mut a_acc = Int::zero();
            let mut h_acc = Int::zero();
            let mut big_g_acc = Int::zero();
            let mut pow_m8 = Int::one();
            let mut pow_m3 = Int::one();

            let want_g_poly = spec.g_poly_hi.is_some_and(|h| n <= h);
            let want_a_poly = spec.a_poly_hi.is_some_and(|h| n <= h);
            let mut g_row = Vec::new();
            let mut a_row = Vec::new();

            for k in 0..=n {
                let ku = k as usize;
                let b2 = &b[ku] * &b[ku];
                let cube = &b2 * &b[ku];
                f_acc += &cube;
                big_f_acc += &cube * &pow_m8;

                let g_term = &b2 * &table.central[ku];
                g_acc += &g_term;
                if k % 2 == 0 {
                    s_acc += &g_term;
                } else {
                    s_acc -= &g_term;
                }
                gm3_acc += &g_term * &pow_m3;

                let a_term = &b2 * &bb[ku] * &bb[ku];
                a_acc += &a_term;

                h_acc += &b2 * &table.catalan[ku];
                big_g_acc += &b2 * &table.catalan[ku] * int(6 * k as i64 + 1);

                if want_g_poly {
                    g_row.push(g_term);
                }
                if want_a_poly {
                    a_row.push(a_term);
                }

                pow_m8 *= int(-8);
                pow_m3 *= int(-3);
            }

            // f_n(x) coefficients C(n,k)^2 C(2k,n), nonzero from ceil(n/2);
            // C(2k, n) advances by (2k+1)(2k+2) / ((2k+1-n)(2k+2-n)).
            let k0 = n.div_ceil(2);
            let mut f_row = vec![Int::zero(); k0 as usize];
            let mut fm1_acc = Int::zero();
            let mut c2k_n = binom_u(2 * k0, n);
            for k in k0..=n {
                let ku = k as usize;
                let coeff = &b[ku] * &b[ku] * &c2k_n;
                if k % 2 == 0 {
                    fm1_acc += &coeff;
                } else {
                    fm1_acc -= &coeff;
                }
                f_row.push(coeff);
                if k < n {
                    let num = &c2k_n * int(((2 * k + 1) * (2 * k + 2)) as i64);
                    let den = Int::from((2 * k + 1 - n) * (2 * k + 2 - n));
                    let (q, r) = num.div_rem(&den);
                    debug_assert!(r.is_zero());
                    c2k_n = q;
                }
            }
            debug_assert_eq!(
                f_acc,
                f_row.iter().sum::<Int>(),
                "Franel value disagrees with f_n(1) at n={n}"
            );

            if want_g_poly {
                table.g_poly.push(IntPoly::from_coeffs(g_row));
            }
            if want_a_poly {
                table.a_poly.push(IntPoly::from_coeffs(a_row));
            }
            if spec.f_poly_hi.is_some_and(|h| n <= h) {
                table.f_poly.push(IntPoly::from_coeffs(f_row));
            }

            table.franel.push(f_acc);
            table.big_f.push(big_f_acc);
            table.g.push(g_acc);
            table.s.push(s_acc);
            table.g_at_m3.push(gm3_acc);
            table.apery.push(a_acc);
            table.h_small.push(h_acc);
            table.big_g.push(big_g_acc);
            table.f_at_m1.push(fm1_acc);
        }

        table
    }

    /// Scalar value from the table. Panics if the index was not built.
    pub fn value(&self, id: SeqId, n: u64) -> Result<Int> {
        let nu = n as usize;
        let v = match id {
            SeqId::Franel => self.franel[nu].clone(),
            SeqId::G => self.g[nu].clone(),
            SeqId::Apery => self.apery[nu].clone(),
            SeqId::Catalan => self.catalan[nu].clone(),
            SeqId::FConj43 => self.big_f[nu].clone(),
            SeqId::GConj43 => self.big_g[nu].clone(),
            SeqId::HRemark41 => self.h_small[nu].clone(),
            SeqId::SGNeg1 => self.s[nu].clone(),
            SeqId::ANormalized => return self.a_normalized(n),
            SeqId::FranelPoly | SeqId::GPoly | SeqId::AperyPoly => {
                return Err(Error::OutOfDomain(id.name(), n))
            }
        };
        Ok(v)
    }

    /// `(1/m^2) sum_(k<m) (3k+2) (-1)^k f_k`, which is always an integer;
    /// a failed division here would falsify that integrality claim, so it
    /// surfaces as an integrity error.
    pub fn a_normalized(&self, m: u64) -> Result<Int> {
        if m == 0 {
            return Ok(Int::zero());
        }
        let s = partial_weighted_sum(&self.franel[..m as usize], true, |k| int(3 * k as i64 + 2));
        div_exact(&s, &Int::from(m * m), "alternating Franel sum normalization")
    }

    /// Adds `delta` to one stored scalar value. Test fixture for witness
    /// integrity; polynomial families cannot be perturbed.
    pub fn perturb(&mut self, id: SeqId, index: u64, delta: &Int) -> Result<()> {
        let iu = index as usize;
        let vec = match id {
            SeqId::Franel => &mut self.franel,
            SeqId::G => &mut self.g,
            SeqId::Apery => &mut self.apery,
            SeqId::Catalan => &mut self.catalan,
            SeqId::FConj43 => &mut self.big_f,
            SeqId::GConj43 => &mut self.big_g,
            SeqId::HRemark41 => &mut self.h_small,
            SeqId::SGNeg1 => &mut self.s,
            _ => return Err(Error::OutOfDomain(id.name(), index)),
        };
        vec[iu] += delta;
        Ok(())
    }

    pub fn scalar_hi(&self) -> u64 {
        self.franel.len() as u64 - 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn table(hi: u64) -> SeqTable {
        SeqTable::build(&TableSpec {
            scalar_hi: hi,
            g_poly_hi: Some(hi),
            f_poly_hi: Some(hi),
            a_poly_hi: Some(hi),
        })
    }

    #[test]
    fn scalar_family_values() {
        let t = table(6);
        assert_eq!(t.franel[..5], [int(1), int(2), int(10), int(56), int(346)]);
        assert_eq!(t.g[..5], [int(1), int(3), int(15), int(93), int(639)]);
        assert_eq!(t.apery[..5], [int(1), int(5), int(73), int(1445), int(33001)]);
        assert_eq!(t.catalan[..6], [int(1), int(1), int(2), int(5), int(14), int(42)]);
        assert_eq!(t.s[..5], [int(1), int(-1), int(-1), int(17), int(-65)]);
        assert_eq!(t.g_at_m3[..5], [int(1), int(-5), int(31), int(-107), int(-1121)]);
        assert_eq!(t.big_f[..5], [int(1), int(-7), int(1), int(1001), int(-15359)]);
        assert_eq!(t.big_g[..5], [int(1), int(8), int(55), int(393), int(2919)]);
        assert_eq!(t.h_small[..5], [int(1), int(2), int(7), int(33), int(183)]);
    }

    #[test]
    fn polynomial_family_values() {
        let t = table(4);
        assert_eq!(t.g_poly[2].to_string(), "1 + 8*x + 6*x^2");
        assert_eq!(t.f_poly[2].to_string(), "4*x + 6*x^2");
        assert_eq!(t.a_poly[1].to_string(), "1 + 4*x");
        assert_eq!(t.g_poly[2].eval_i64(-3), int(31));
    }

    #[test]
    fn direct_functions_match_table() {
        let t = table(20);
        for n in 0..=20u64 {
            for id in [
                SeqId::Franel,
                SeqId::G,
                SeqId::Apery,
                SeqId::Catalan,
                SeqId::FConj43,
                SeqId::GConj43,
                SeqId::HRemark41,
                SeqId::ANormalized,
                SeqId::SGNeg1,
            ] {
                assert_eq!(seq_value(id, n).unwrap(), t.value(id, n).unwrap(), "{id} {n}");
            }
            assert_eq!(seq_poly(SeqId::GPoly, n).unwrap(), t.g_poly[n as usize]);
            assert_eq!(seq_poly(SeqId::FranelPoly, n).unwrap(), t.f_poly[n as usize]);
            assert_eq!(seq_poly(SeqId::AperyPoly, n).unwrap(), t.a_poly[n as usize]);
        }
    }

    #[test]
    fn polynomials_specialize_to_scalars_at_one() {
        let t = table(40);
        for n in 0..=40usize {
            assert_eq!(t.g_poly[n].eval_i64(1), t.g[n]);
            assert_eq!(t.f_poly[n].eval_i64(1), t.franel[n]);
            assert_eq!(t.a_poly[n].eval_i64(1), t.apery[n]);
            assert_eq!(t.g_poly[n].eval_i64(-1), t.s[n]);
            assert_eq!(t.f_poly[n].eval_i64(-1), t.f_at_m1[n]);
        }
    }

    #[test]
    fn f_poly_lowest_term_sits_at_half_n() {
        let t = table(30);
        for n in 1..=30usize {
            let p = &t.f_poly[n];
            let k0 = n.div_ceil(2);
            assert!(p.coeff(k0 - 1).is_zero() || k0 == 0, "n={n}");
            assert!(!p.coeff(k0).is_zero(), "n={n}");
            for k in 0..k0 {
                assert!(p.coeff(k).is_zero(), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn catalan_subtraction_form_matches_quotient_form() {
        let t = table(30);
        for n in 0..=30u64 {
            let sub = binom_u(2 * n, n) - crate::exact::binom(&Int::from(2 * n), n + 1);
            assert_eq!(t.catalan[n as usize], sub);
            // And against the closed form C(2n, n) / (n + 1).
            assert_eq!(
                rat(1, 1) * Int::from(n + 1) * &t.catalan[n as usize],
                rat(1, 1) * binom_u(2 * n, n)
            );
        }
    }

    #[test]
    fn recurrences_match_direct_summation() {
        for n in 0..=60 {
            assert_eq!(
                seq_by_recurrence(SeqId::Franel, n).unwrap(),
                seq_value(SeqId::Franel, n).unwrap(),
                "franel n={n}"
            );
            assert_eq!(
                seq_by_recurrence(SeqId::SGNeg1, n).unwrap(),
                seq_value(SeqId::SGNeg1, n).unwrap(),
                "s n={n}"
            );
        }
        assert_eq!(seq_by_recurrence(SeqId::Franel, 3).unwrap(), int(56));
        assert_eq!(seq_by_recurrence(SeqId::SGNeg1, 3).unwrap(), int(17));
    }

    #[test]
    fn normalized_alternating_franel_sums_are_integers() {
        let t = table(60);
        let first: Vec<Int> = (0..6).map(|m| t.a_normalized(m).unwrap()).collect();
        assert_eq!(first, [int(0), int(2), int(-2), int(8), int(-34), int(172)]);
        for m in 1..=60 {
            t.a_normalized(m).unwrap();
        }
    }

    #[test]
    fn weighted_sum_example() {
        let t = table(4);
        let s = partial_weighted_sum(&t.g[..3], false, |k| int(4 * k as i64 + 3));
        assert_eq!(s, int(189));
        assert_eq!(div_exact(&s, &int(27), "t").unwrap(), int(7));
    }

    #[test]
    fn perturbation_shifts_one_value() {
        let mut t = table(6);
        t.perturb(SeqId::G, 4, &int(1)).unwrap();
        assert_eq!(t.g[4], int(640));
        t.perturb(SeqId::G, 4, &int(-1)).unwrap();
        assert_eq!(t.g[4], int(639));
        assert!(t.perturb(SeqId::GPoly, 2, &int(1)).is_err());
    }

    #[test]
    fn sequence_names_round_trip() {
        for id in SeqId::ALL {
            assert_eq!(id.name().parse::<SeqId>().unwrap(), id);
        }
        assert!("nonsense".parse::<SeqId>().is_err());
        assert_eq!("F_conj43".parse::<SeqId>().unwrap(), SeqId::FConj43);
    }

    #[test]
    fn value_rejects_polynomial_ids() {
        assert!(seq_value(SeqId::GPoly, 2).is_err());
        assert!(seq_poly(SeqId::G, 2).is_err());
        assert!(seq_by_recurrence(SeqId::Apery, 2).is_err());
    }
}
