//! Congruence checks (`C*`). Each entry reduces its sums modulo the
//! stated prime power with exact residue arithmetic; the only divisions
//! are by units (enforced by [`ModNum::inv`]), and the occasional exact
//! cancellation of `p` against a `2k+1 = p` denominator is performed on
//! integers before reduction.

use super::{Ctx, Outcome, RunParams, Threshold, XMode};
use crate::error::Error;
use crate::exact::{int, Int, Rat};
use crate::modular::{fermat_quotient, legendre, primes_in, rat_mod, ModNum};
use crate::poly::IntPoly;
use num::Zero;
use rayon::prelude::*;

pub(super) struct Mismatch {
    pub at: String,
    pub lhs: String,
    pub rhs: String,
}

pub(super) fn mismatch(at: String, lhs: &ModNum, rhs: &ModNum) -> Option<Mismatch> {
    if lhs == rhs {
        None
    } else {
        Some(Mismatch {
            at,
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        })
    }
}

pub(super) type PrimeOutcome = Result<Option<Mismatch>, Error>;

/// Runs `check` on every admitted prime in the configured range and
/// folds the results in ascending prime order: the first error becomes
/// a SKIP (non-unit denominator diagnostics), the first mismatch a FAIL.
pub(super) fn over_primes(
    params: &RunParams,
    threshold: Threshold,
    check: impl Fn(u64) -> PrimeOutcome + Sync,
) -> Outcome {
    let (lo, hi) = params.primes;
    let admitted: Vec<u64> = primes_in(lo, hi)
        .into_iter()
        .filter(|&p| threshold.admits(p))
        .collect();
    if admitted.is_empty() {
        return Outcome::skip(format!("threshold {threshold} admits no primes in {lo}..{hi}"));
    }
    let results: Vec<PrimeOutcome> = admitted.par_iter().map(|&p| check(p)).collect();
    for (p, result) in admitted.iter().zip(results) {
        match result {
            Err(e) => return Outcome::skip(format!("p={p}: {e}")),
            Ok(Some(m)) => {
                return Outcome::fail(format!("p={p}, {}", m.at), m.lhs, m.rhs);
            }
            Ok(None) => {}
        }
    }
    Outcome::pass()
}

pub(super) fn pp(p: u64, e: u32) -> Int {
    Int::from(p).pow(e)
}

pub(super) fn mn(v: &Int, m: &Int) -> ModNum {
    ModNum::new(v, m)
}

pub(super) fn mi(v: i64, m: &Int) -> ModNum {
    ModNum::new(&int(v), m)
}

pub(super) fn inv_k(k: u64, m: &Int) -> Result<ModNum, Error> {
    ModNum::new(&Int::from(k), m).inv()
}

/// Legendre symbol (p/3): 1, -1, or 0 (the latter only at p = 3).
pub(super) fn leg3(p: u64) -> i64 {
    legendre(&Int::from(p), 3).expect("3 is an odd prime") as i64
}

/// Legendre symbol (-1/p) for odd p.
pub(super) fn leg_m1(p: u64) -> i64 {
    legendre(&int(-1), p).expect("odd prime") as i64
}

/// q_p(a) as a residue modulo p^e.
pub(super) fn fermat_q(a: i64, p: u64, e: u32) -> Result<ModNum, Error> {
    fermat_quotient(&int(a), p, e)
}

/// Prefix sums of 1/k^order modulo m for k = 0..hi (index k holds H_k).
pub(super) fn harmonic_prefix(hi: u64, order: u32, m: &Int) -> Result<Vec<ModNum>, Error> {
    let mut acc = ModNum::zero(m);
    let mut out = Vec::with_capacity(hi as usize + 1);
    out.push(acc.clone());
    for k in 1..=hi {
        let inv = inv_k(k, m)?;
        acc = acc.add(&inv.pow(order as u64));
        out.push(acc.clone());
    }
    Ok(out)
}

/// One side of a polynomial congruence: scalars against polynomial
/// shapes or bare monomials, compared either coefficient-wise or after
/// substituting the configured points.
pub(super) enum Shape<'a> {
    Poly(&'a IntPoly),
    Mono(u64),
}

pub(super) struct Term<'a> {
    pub scalar: ModNum,
    pub shape: Shape<'a>,
}

fn accumulate_coeffs(terms: &[Term], len: usize, m: &Int) -> Vec<ModNum> {
    let mut acc = vec![ModNum::zero(m); len];
    for t in terms {
        match t.shape {
            Shape::Poly(p) => {
                for (j, c) in p.coeffs().iter().enumerate() {
                    acc[j] = acc[j].add(&mn(c, m).mul(&t.scalar));
                }
            }
            Shape::Mono(k) => {
                let k = k as usize;
                acc[k] = acc[k].add(&t.scalar);
            }
        }
    }
    acc
}

fn eval_terms(terms: &[Term], x: i64, m: &Int) -> ModNum {
    let xm = mi(x, m);
    let mut acc = ModNum::zero(m);
    for t in terms {
        let v = match t.shape {
            Shape::Poly(p) => {
                let mut h = ModNum::zero(m);
                for c in p.coeffs().iter().rev() {
                    h = h.mul(&xm).add(&mn(c, m));
                }
                h
            }
            Shape::Mono(k) => xm.pow(k),
        };
        acc = acc.add(&v.mul(&t.scalar));
    }
    acc
}

/// Compares two term lists under the configured x-mode. `len` bounds the
/// coefficient window (degrees are < p in every use here).
pub(super) fn compare_sides(
    lhs: &[Term],
    rhs: &[Term],
    len: usize,
    m: &Int,
    params: &RunParams,
) -> Option<Mismatch> {
    match params.mode {
        XMode::Coefficient => {
            let l = accumulate_coeffs(lhs, len, m);
            let r = accumulate_coeffs(rhs, len, m);
            for j in 0..len {
                if let Some(w) = mismatch(format!("coefficient of x^{j}"), &l[j], &r[j]) {
                    return Some(w);
                }
            }
            None
        }
        XMode::Eval => {
            for &x in &params.x_points {
                let l = eval_terms(lhs, x, m);
                let r = eval_terms(rhs, x, m);
                if let Some(w) = mismatch(format!("x={x}"), &l, &r) {
                    return Some(w);
                }
            }
            None
        }
    }
}

/// Wolstenholme: C(2p-1, p-1) = 1 mod p^3, H_(p-1) = 0 mod p^2,
/// H2_(p-1) = 0 mod p.
pub(super) fn c01(ctx: &Ctx, params: &RunParams) -> Outcome {
    over_primes(params, Threshold::Gt3, |p| {
        let m3 = pp(p, 3);
        let half_central = &ctx.seq.central[p as usize] / int(2);
        if let Some(w) = mismatch(
            "central binomial".into(),
            &mn(&half_central, &m3),
            &ModNum::one(&m3),
        ) {
            return Ok(Some(w));
        }
        let m2 = pp(p, 2);
        let h1 = harmonic_prefix(p - 1, 1, &m2)?;
        if let Some(w) = mismatch(
            "harmonic sum".into(),
            &h1[p as usize - 1],
            &ModNum::zero(&m2),
        ) {
            return Ok(Some(w));
        }
        let m1 = pp(p, 1);
        let h2 = harmonic_prefix(p - 1, 2, &m1)?;
        if let Some(w) = mismatch(
            "second-order harmonic sum".into(),
            &h2[p as usize - 1],
            &ModNum::zero(&m1),
        ) {
            return Ok(Some(w));
        }
        Ok(None)
    })
}

/// sum_{k<p} g_k(x)(1 - p^2 H2_k)
///   = sum_{k<p} (p/(2k+1)) (1 - 2 p^2 H2_k) x^k  mod p^4.
pub(super) fn c02(ctx: &Ctx, params: &RunParams) -> Outcome {
    over_primes(params, Threshold::Gt3, |p| {
        let m = pp(p, 4);
        let p2 = mn(&pp(p, 2), &m);
        let h2 = harmonic_prefix(p - 1, 2, &m)?;
        let pm = mn(&Int::from(p), &m);
        let one = ModNum::one(&m);
        let mut lhs = Vec::with_capacity(p as usize);
        let mut rhs = Vec::with_capacity(p as usize);
        for k in 0..p {
            let hk = &h2[k as usize];
            lhs.push(Term {
                scalar: one.sub(&p2.mul(hk)),
                shape: Shape::Poly(&ctx.seq.g_poly[k as usize]),
            });
            let base = if 2 * k + 1 == p {
                one.clone()
            } else {
                pm.mul(&inv_k(2 * k + 1, &m)?)
            };
            rhs.push(Term {
                scalar: base.mul(&one.sub(&p2.mul(hk).mul(&mi(2, &m)))),
                shape: Shape::Mono(k),
            });
        }
        Ok(compare_sides(&lhs, &rhs, p as usize, &m, params))
    })
}

/// sum_{k=1}^{p-1} g_k = p^2 sum g_k H2_k + (7/6) p^3 B_(p-3)  mod p^4.
pub(super) fn c03(ctx: &Ctx, params: &RunParams) -> Outcome {
    over_primes(params, Threshold::Gt3, |p| {
        let m = pp(p, 4);
        let h2 = harmonic_prefix(p - 1, 2, &m)?;
        let mut lhs = ModNum::zero(&m);
        let mut weighted = ModNum::zero(&m);
        for k in 1..p {
            let gk = mn(&ctx.seq.g[k as usize], &m);
            lhs = lhs.add(&gk);
            weighted = weighted.add(&gk.mul(&h2[k as usize]));
        }
        let tail = rat_mod(
            &(Rat::new(int(7), int(6)) * Rat::from(pp(p, 3)) * ctx.bern(p - 3)),
            &m,
        )?;
        let rhs = mn(&pp(p, 2), &m).mul(&weighted).add(&tail);
        Ok(mismatch("full sum".into(), &lhs, &rhs))
    })
}

/// sum_{k<p} g_k(-1) = (-1/p) + p^2 (sum g_k(-1) H2_k - E_(p-3))  mod p^3.
pub(super) fn c04(ctx: &Ctx, params: &RunParams) -> Outcome {
    over_primes(params, Threshold::Gt3, |p| {
        let m = pp(p, 3);
        let h2 = harmonic_prefix(p - 1, 2, &m)?;
        let mut lhs = ModNum::zero(&m);
        let mut weighted = ModNum::zero(&m);
        for k in 0..p {
            let sk = mn(&ctx.seq.s[k as usize], &m);
            lhs = lhs.add(&sk);
            weighted = weighted.add(&sk.mul(&h2[k as usize]));
        }
        let euler = mn(ctx.euler_num(p - 3), &m);
        let rhs = mi(leg_m1(p), &m).add(&mn(&pp(p, 2), &m).mul(&weighted.sub(&euler)));
        Ok(mismatch("full sum".into(), &lhs, &rhs))
    })
}

/// sum_{k<p} g_k(-3) = (p/3)  mod p^2.
pub(super) fn c05(ctx: &Ctx, params: &RunParams) -> Outcome {
    over_primes(params, Threshold::Gt3, |p| {
        let m = pp(p, 2);
        let mut lhs = ModNum::zero(&m);
        for k in 0..p {
            lhs = lhs.add(&mn(&ctx.seq.g_at_m3[k as usize], &m));
        }
        Ok(mismatch("full sum".into(), &lhs, &mi(leg3(p), &m)))
    })
}

/// sum_{k=1}^{p-1} g_k(x)/k = 0  mod p.
pub(super) fn c06(ctx: &Ctx, params: &RunParams) -> Outcome {
    over_primes(params, Threshold::Gt3, |p| {
        let m = pp(p, 1);
        let mut lhs = Vec::with_capacity(p as usize - 1);
        for k in 1..p {
            lhs.push(Term {
                scalar: inv_k(k, &m)?,
                shape: Shape::Poly(&ctx.seq.g_poly[k as usize]),
            });
        }
        Ok(compare_sides(&lhs, &[], p as usize, &m, params))
    })
}

/// sum_{k=1}^{p-1} g_(k-1)/k = -(p/3) 2 q_p(3)  mod p.
pub(super) fn c07(ctx: &Ctx, params: &RunParams) -> Outcome {
    over_primes(params, Threshold::Gt3, |p| {
        let m = pp(p, 1);
        let mut lhs = ModNum::zero(&m);
        for k in 1..p {
            lhs = lhs.add(&mn(&ctx.seq.g[k as usize - 1], &m).mul(&inv_k(k, &m)?));
        }
        let rhs = mi(-2 * leg3(p), &m).mul(&fermat_q(3, p, 1)?);
        Ok(mismatch("full sum".into(), &lhs, &rhs))
    })
}

/// sum_{k=1}^{p-1} k g_k = -3/4  mod p^2.
pub(super) fn c08(ctx: &Ctx, params: &RunParams) -> Outcome {
    over_primes(params, Threshold::Gt3, |p| {
        let m = pp(p, 2);
        let mut lhs = ModNum::zero(&m);
        for k in 1..p {
            lhs = lhs.add(&mn(&(Int::from(k) * &ctx.seq.g[k as usize]), &m));
        }
        let rhs = rat_mod(&Rat::new(int(-3), int(4)), &m)?;
        Ok(mismatch("full sum".into(), &lhs, &rhs))
    })
}

/// sum_{k=1}^{p-1} g_k(-1)/k^2 = 0  mod p.
pub(super) fn c09(ctx: &Ctx, params: &RunParams) -> Outcome {
    over_primes(params, Threshold::Gt5, |p| {
        let m = pp(p, 1);
        let mut lhs = ModNum::zero(&m);
        for k in 1..p {
            lhs = lhs.add(&mn(&ctx.seq.s[k as usize], &m).mul(&inv_k(k, &m)?.pow(2)));
        }
        Ok(mismatch("full sum".into(), &lhs, &ModNum::zero(&m)))
    })
}

/// sum_{k=1}^{p-1} g_k(-1)/k = 0  mod p^2.
pub(super) fn c10(ctx: &Ctx, params: &RunParams) -> Outcome {
    over_primes(params, Threshold::Gt5, |p| {
        let m = pp(p, 2);
        let mut lhs = ModNum::zero(&m);
        for k in 1..p {
            lhs = lhs.add(&mn(&ctx.seq.s[k as usize], &m).mul(&inv_k(k, &m)?));
        }
        Ok(mismatch("full sum".into(), &lhs, &ModNum::zero(&m)))
    })
}

/// sum_{k=1}^{p-1} (-1)^k f_k(-1) H_k / k = -2 (-1/p) E_(p-3)  mod p.
pub(super) fn c11(ctx: &Ctx, params: &RunParams) -> Outcome {
    over_primes(params, Threshold::Gt5, |p| {
        let m = pp(p, 1);
        let h1 = harmonic_prefix(p - 1, 1, &m)?;
        let mut lhs = ModNum::zero(&m);
        for k in 1..p {
            let mut t = mn(&ctx.seq.f_at_m1[k as usize], &m)
                .mul(&h1[k as usize])
                .mul(&inv_k(k, &m)?);
            if k % 2 == 1 {
                t = t.neg();
            }
            lhs = lhs.add(&t);
        }
        let rhs = mi(-2 * leg_m1(p), &m).mul(&mn(ctx.euler_num(p - 3), &m));
        Ok(mismatch("full sum".into(), &lhs, &rhs))
    })
}

/// sum_{k<p} (3k+1) f_k / 8^k = p^2 - 2 p^3 q_p(2) + 4 p^4 q_p(2)^2  mod p^5.
pub(super) fn c12(ctx: &Ctx, params: &RunParams) -> Outcome {
    over_primes(params, Threshold::Gt3, |p| {
        let m = pp(p, 5);
        let inv8 = mi(8, &m).inv()?;
        let mut pow = ModNum::one(&m);
        let mut lhs = ModNum::zero(&m);
        for k in 0..p {
            lhs = lhs.add(&mi(3 * k as i64 + 1, &m).mul(&mn(&ctx.seq.franel[k as usize], &m)).mul(&pow));
            pow = pow.mul(&inv8);
        }
        let q2 = fermat_q(2, p, 5)?;
        let rhs = mn(&pp(p, 2), &m)
            .sub(&mn(&pp(p, 3), &m).mul(&q2).mul(&mi(2, &m)))
            .add(&mn(&pp(p, 4), &m).mul(&q2).mul(&q2).mul(&mi(4, &m)));
        Ok(mismatch("full sum".into(), &lhs, &rhs))
    })
}

/// g_k = (p/3) 9^k g_(p-1-k)  mod p, for every k < p.
pub(super) fn c13(ctx: &Ctx, params: &RunParams) -> Outcome {
    over_primes(params, Threshold::Gt3, |p| {
        let m = pp(p, 1);
        let sign = mi(leg3(p), &m);
        let nine = mi(9, &m);
        let mut pow9 = ModNum::one(&m);
        for k in 0..p {
            let lhs = mn(&ctx.seq.g[k as usize], &m);
            let rhs = sign.mul(&pow9).mul(&mn(&ctx.seq.g[(p - 1 - k) as usize], &m));
            if let Some(w) = mismatch(format!("k={k}"), &lhs, &rhs) {
                return Ok(Some(w));
            }
            pow9 = pow9.mul(&nine);
        }
        Ok(None)
    })
}

/// sum_{k=1}^{p-1} g_k / (k 9^k) = 2 q_p(3)  mod p.
pub(super) fn c14(ctx: &Ctx, params: &RunParams) -> Outcome {
    over_primes(params, Threshold::Gt3, |p| {
        let m = pp(p, 1);
        let inv9 = mi(9, &m).inv()?;
        let mut pow = ModNum::one(&m);
        let mut lhs = ModNum::zero(&m);
        for k in 1..p {
            pow = pow.mul(&inv9);
            lhs = lhs.add(&mn(&ctx.seq.g[k as usize], &m).mul(&inv_k(k, &m)?).mul(&pow));
        }
        let rhs = mi(2, &m).mul(&fermat_q(3, p, 1)?);
        Ok(mismatch("full sum".into(), &lhs, &rhs))
    })
}

/// Odd-reciprocal scalars p/(2k+1) with the exact cancellation at
/// 2k+1 = p, each multiplied by (-1)^k when `alternating`.
fn odd_reciprocal_scalars(
    p: u64,
    m: &Int,
    alternating: bool,
) -> Result<Vec<ModNum>, Error> {
    let pm = mn(&Int::from(p), m);
    let one = ModNum::one(m);
    let mut out = Vec::with_capacity(p as usize);
    for k in 0..p {
        let mut s = if 2 * k + 1 == p {
            one.clone()
        } else {
            pm.mul(&inv_k(2 * k + 1, m)?)
        };
        if alternating && k % 2 == 1 {
            s = s.neg();
        }
        out.push(s);
    }
    Ok(out)
}

/// sum_{k<p} A_k(x) = p sum_{k<p} (-1)^k f_k(x) / (2k+1)  mod p^2.
pub(super) fn c15(ctx: &Ctx, params: &RunParams) -> Outcome {
    over_primes(params, Threshold::Odd, |p| {
        let m = pp(p, 2);
        let one = ModNum::one(&m);
        let lhs: Vec<Term> = (0..p)
            .map(|k| Term {
                scalar: one.clone(),
                shape: Shape::Poly(&ctx.seq.a_poly[k as usize]),
            })
            .collect();
        let scalars = odd_reciprocal_scalars(p, &m, true)?;
        let rhs: Vec<Term> = (0..p)
            .map(|k| Term {
                scalar: scalars[k as usize].clone(),
                shape: Shape::Poly(&ctx.seq.f_poly[k as usize]),
            })
            .collect();
        Ok(compare_sides(&lhs, &rhs, p as usize, &m, params))
    })
}

/// sum_{k<p} (-1)^k A_k(x) = p sum_{k<p} g_k(x) / (2k+1)  mod p^2.
pub(super) fn c16(ctx: &Ctx, params: &RunParams) -> Outcome {
    over_primes(params, Threshold::Odd, |p| {
        let m = pp(p, 2);
        let one = ModNum::one(&m);
        let lhs: Vec<Term> = (0..p)
            .map(|k| Term {
                scalar: if k % 2 == 1 { one.neg() } else { one.clone() },
                shape: Shape::Poly(&ctx.seq.a_poly[k as usize]),
            })
            .collect();
        let scalars = odd_reciprocal_scalars(p, &m, false)?;
        let rhs: Vec<Term> = (0..p)
            .map(|k| Term {
                scalar: scalars[k as usize].clone(),
                shape: Shape::Poly(&ctx.seq.g_poly[k as usize]),
            })
            .collect();
        Ok(compare_sides(&lhs, &rhs, p as usize, &m, params))
    })
}

/// Alternating odd-power-weighted Apery sums modulo p^3: the shared
/// worker behind the four fixed-weight entries.
fn odd_power_sum(ctx: &Ctx, p: u64, power: u32, m: &Int) -> ModNum {
    let mut acc = ModNum::zero(m);
    for k in 0..p {
        let w = mi(2 * k as i64 + 1, m).pow(power as u64);
        let mut t = w.mul(&mn(&ctx.seq.apery[k as usize], m));
        if k % 2 == 1 {
            t = t.neg();
        }
        acc = acc.add(&t);
    }
    acc
}

/// sum (2k+1) (-1)^k A_k = p (p/3)  mod p^3.
pub(super) fn c17(ctx: &Ctx, params: &RunParams) -> Outcome {
    over_primes(params, Threshold::Gt3, |p| {
        let m = pp(p, 3);
        let lhs = odd_power_sum(ctx, p, 1, &m);
        let rhs = mi(p as i64 * leg3(p), &m);
        Ok(mismatch("full sum".into(), &lhs, &rhs))
    })
}

/// sum (2k+1)^3 (-1)^k A_k = -(p/3) p/3  mod p^3.
pub(super) fn c18(ctx: &Ctx, params: &RunParams) -> Outcome {
    over_primes(params, Threshold::Gt3, |p| {
        let m = pp(p, 3);
        let lhs = odd_power_sum(ctx, p, 3, &m);
        let rhs = rat_mod(&Rat::new(int(-(p as i64) * leg3(p)), int(3)), &m)?;
        Ok(mismatch("full sum".into(), &lhs, &rhs))
    })
}

/// sum (2k+1)^5 (-1)^k A_k = -(13/27) p (p/3)  mod p^3.
pub(super) fn c19(ctx: &Ctx, params: &RunParams) -> Outcome {
    over_primes(params, Threshold::Gt3, |p| {
        let m = pp(p, 3);
        let lhs = odd_power_sum(ctx, p, 5, &m);
        let rhs = rat_mod(&Rat::new(int(-13 * p as i64 * leg3(p)), int(27)), &m)?;
        Ok(mismatch("full sum".into(), &lhs, &rhs))
    })
}

/// sum (2k+1)^7 (-1)^k A_k = (5/9) p (p/3)  mod p^3.
pub(super) fn c20(ctx: &Ctx, params: &RunParams) -> Outcome {
    over_primes(params, Threshold::Gt3, |p| {
        let m = pp(p, 3);
        let lhs = odd_power_sum(ctx, p, 7, &m);
        let rhs = rat_mod(&Rat::new(int(5 * p as i64 * leg3(p)), int(9)), &m)?;
        Ok(mismatch("full sum".into(), &lhs, &rhs))
    })
}

/// (1/p) sum (2k+1) A_k(x) = sum g_k(x) - p^2 sum g_k(x) H2_k  mod p^4.
///
/// The left side is divided by p exactly (integer-level), so the sum is
/// accumulated modulo p^5 first.
pub(super) fn c21(ctx: &Ctx, params: &RunParams) -> Outcome {
    over_primes(params, Threshold::Odd, |p| {
        let m4 = pp(p, 4);
        let m5 = pp(p, 5);
        let h2 = harmonic_prefix(p - 1, 2, &m4)?;
        let p2 = mn(&pp(p, 2), &m4);
        let one = ModNum::one(&m4);
        let pint = Int::from(p);

        match params.mode {
            XMode::Coefficient => {
                // sum (2k+1) A_k(x) mod p^5, coefficient-wise.
                let mut acc5 = vec![ModNum::zero(&m5); p as usize];
                for k in 0..p {
                    let w = mi(2 * k as i64 + 1, &m5);
                    for (j, c) in ctx.seq.a_poly[k as usize].coeffs().iter().enumerate() {
                        acc5[j] = acc5[j].add(&mn(c, &m5).mul(&w));
                    }
                }
                let mut rhs = vec![ModNum::zero(&m4); p as usize];
                for k in 0..p {
                    let s = one.sub(&p2.mul(&h2[k as usize]));
                    for (j, c) in ctx.seq.g_poly[k as usize].coeffs().iter().enumerate() {
                        rhs[j] = rhs[j].add(&mn(c, &m4).mul(&s));
                    }
                }
                for j in 0..p as usize {
                    let v = acc5[j].value();
                    if !(v % &pint).is_zero() {
                        return Ok(Some(Mismatch {
                            at: format!("coefficient of x^{j} (divisibility by p)"),
                            lhs: acc5[j].to_string(),
                            rhs: format!("0 mod {pint}"),
                        }));
                    }
                    let lhs = mn(&(v / &pint), &m4);
                    if let Some(w) = mismatch(format!("coefficient of x^{j}"), &lhs, &rhs[j]) {
                        return Ok(Some(w));
                    }
                }
                Ok(None)
            }
            XMode::Eval => {
                for &x in &params.x_points {
                    let x5 = mi(x, &m5);
                    let mut acc5 = ModNum::zero(&m5);
                    for k in 0..p {
                        let mut h = ModNum::zero(&m5);
                        for c in ctx.seq.a_poly[k as usize].coeffs().iter().rev() {
                            h = h.mul(&x5).add(&mn(c, &m5));
                        }
                        acc5 = acc5.add(&h.mul(&mi(2 * k as i64 + 1, &m5)));
                    }
                    let v = acc5.value();
                    if !(v % &pint).is_zero() {
                        return Ok(Some(Mismatch {
                            at: format!("x={x} (divisibility by p)"),
                            lhs: acc5.to_string(),
                            rhs: format!("0 mod {pint}"),
                        }));
                    }
                    let lhs = mn(&(v / &pint), &m4);
                    let x4 = mi(x, &m4);
                    let mut rhs = ModNum::zero(&m4);
                    for k in 0..p {
                        let mut h = ModNum::zero(&m4);
                        for c in ctx.seq.g_poly[k as usize].coeffs().iter().rev() {
                            h = h.mul(&x4).add(&mn(c, &m4));
                        }
                        rhs = rhs.add(&h.mul(&one.sub(&p2.mul(&h2[k as usize]))));
                    }
                    if let Some(w) = mismatch(format!("x={x}"), &lhs, &rhs) {
                        return Ok(Some(w));
                    }
                }
                Ok(None)
            }
        }
    })
}

/// (-1)^k C(p-1,k) C(p+k,k) = 1 - p^2 H2_k  mod p^4, for every k < p.
pub(super) fn c22(_ctx: &Ctx, params: &RunParams) -> Outcome {
    over_primes(params, Threshold::Odd, |p| {
        let m = pp(p, 4);
        let p2 = mn(&pp(p, 2), &m);
        let one = ModNum::one(&m);
        let mut b1 = ModNum::one(&m); // C(p-1, k)
        let mut b2 = ModNum::one(&m); // C(p+k, k)
        let mut h2 = ModNum::zero(&m);
        for k in 0..p {
            if k > 0 {
                let ik = inv_k(k, &m)?;
                b1 = b1.mul(&mi(p as i64 - k as i64, &m)).mul(&ik);
                b2 = b2.mul(&mn(&Int::from(p + k), &m)).mul(&ik);
                h2 = h2.add(&ik.pow(2));
            }
            let mut lhs = b1.mul(&b2);
            if k % 2 == 1 {
                lhs = lhs.neg();
            }
            let rhs = one.sub(&p2.mul(&h2));
            if let Some(w) = mismatch(format!("k={k}"), &lhs, &rhs) {
                return Ok(Some(w));
            }
        }
        Ok(None)
    })
}

/// g_(p-1) = (p/3) (1 + 2 p q_p(3))  mod p^2.
pub(super) fn c23(ctx: &Ctx, params: &RunParams) -> Outcome {
    over_primes(params, Threshold::Gt3, |p| {
        let m = pp(p, 2);
        let lhs = mn(&ctx.seq.g[p as usize - 1], &m);
        let rhs = mi(leg3(p), &m).mul(
            &ModNum::one(&m).add(&mi(2 * p as i64, &m).mul(&fermat_q(3, p, 2)?)),
        );
        Ok(mismatch(format!("g_{}", p - 1), &lhs, &rhs))
    })
}

/// p sum_{k<p} (-3)^k / (2k+1) = (p/3)  mod p^2.
pub(super) fn c24(_ctx: &Ctx, params: &RunParams) -> Outcome {
    over_primes(params, Threshold::Odd, |p| {
        let m = pp(p, 2);
        let pm = mn(&Int::from(p), &m);
        let m3 = mi(-3, &m);
        let mut pow = ModNum::one(&m);
        let mut lhs = ModNum::zero(&m);
        for k in 0..p {
            let t = if 2 * k + 1 == p {
                pow.clone()
            } else {
                pm.mul(&pow).mul(&inv_k(2 * k + 1, &m)?)
            };
            lhs = lhs.add(&t);
            pow = pow.mul(&m3);
        }
        Ok(mismatch("full sum".into(), &lhs, &mi(leg3(p), &m)))
    })
}

/// k C(2k,k) sum_{r<p} C(-k,r) C(-k-1,r) = p  mod p^2, for 1 <= k < p.
pub(super) fn c25(ctx: &Ctx, params: &RunParams) -> Outcome {
    over_primes(params, Threshold::Any, |p| {
        let m = pp(p, 2);
        let rhs = mn(&Int::from(p), &m);
        for k in 1..p {
            let mut a = ModNum::one(&m); // C(-k, r)
            let mut b = ModNum::one(&m); // C(-k-1, r)
            let mut u = ModNum::zero(&m);
            for r in 0..p {
                if r > 0 {
                    let ir = inv_k(r, &m)?;
                    a = a.mul(&mi(-(k as i64) - r as i64 + 1, &m)).mul(&ir);
                    b = b.mul(&mi(-(k as i64) - r as i64, &m)).mul(&ir);
                }
                u = u.add(&a.mul(&b));
            }
            let lhs = mn(&(Int::from(k) * &ctx.seq.central[k as usize]), &m).mul(&u);
            if let Some(w) = mismatch(format!("k={k}"), &lhs, &rhs) {
                return Ok(Some(w));
            }
        }
        Ok(None)
    })
}

/// sum_{k=1}^{p-1} g_k(x)/k
///   = p sum_{k=(p+1)/2}^{p-1} x^k/k^2 - p sum_{k=1}^{p-1} (-1)^k H_k f_k(x)/k
///   mod p^2.
pub(super) fn c26(ctx: &Ctx, params: &RunParams) -> Outcome {
    over_primes(params, Threshold::Gt3, |p| {
        let m = pp(p, 2);
        let h1 = harmonic_prefix(p - 1, 1, &m)?;
        let pm = mn(&Int::from(p), &m);
        let mut lhs = Vec::with_capacity(p as usize - 1);
        let mut rhs = Vec::with_capacity(2 * p as usize);
        for k in 1..p {
            lhs.push(Term {
                scalar: inv_k(k, &m)?,
                shape: Shape::Poly(&ctx.seq.g_poly[k as usize]),
            });
            if k >= (p + 1) / 2 {
                rhs.push(Term {
                    scalar: pm.mul(&inv_k(k, &m)?.pow(2)),
                    shape: Shape::Mono(k),
                });
            }
            let mut s = pm.mul(&h1[k as usize]).mul(&inv_k(k, &m)?).neg();
            if k % 2 == 1 {
                s = s.neg();
            }
            rhs.push(Term {
                scalar: s,
                shape: Shape::Poly(&ctx.seq.f_poly[k as usize]),
            });
        }
        Ok(compare_sides(&lhs, &rhs, p as usize, &m, params))
    })
}

/// sum_{k=1}^{p-1} (-1)^k C(2k,k) / k^2 = 0  mod p.
pub(super) fn c27(ctx: &Ctx, params: &RunParams) -> Outcome {
    over_primes(params, Threshold::Gt5, |p| {
        let m = pp(p, 1);
        let mut lhs = ModNum::zero(&m);
        for k in 1..p {
            let mut t = mn(&ctx.seq.central[k as usize], &m).mul(&inv_k(k, &m)?.pow(2));
            if k % 2 == 1 {
                t = t.neg();
            }
            lhs = lhs.add(&t);
        }
        Ok(mismatch("full sum".into(), &lhs, &ModNum::zero(&m)))
    })
}

/// sum_{k=1}^{(p-1)/2} (-1)^k C(2k,k) / k^2 = (56/15) p B_(p-3)  mod p^2.
pub(super) fn c28(ctx: &Ctx, params: &RunParams) -> Outcome {
    over_primes(params, Threshold::Gt5, |p| {
        let m = pp(p, 2);
        let mut lhs = ModNum::zero(&m);
        for k in 1..=(p - 1) / 2 {
            let mut t = mn(&ctx.seq.central[k as usize], &m).mul(&inv_k(k, &m)?.pow(2));
            if k % 2 == 1 {
                t = t.neg();
            }
            lhs = lhs.add(&t);
        }
        let rhs = rat_mod(
            &(Rat::new(int(56), int(15)) * Rat::from(Int::from(p)) * ctx.bern(p - 3)),
            &m,
        )?;
        Ok(mismatch("half-range sum".into(), &lhs, &rhs))
    })
}

/// sum_{k=1}^{p-1} C(2k,k) / (k 4^k) = 2 q_p(2)  mod p.
pub(super) fn c29a(ctx: &Ctx, params: &RunParams) -> Outcome {
    over_primes(params, Threshold::Gt3, |p| {
        let m = pp(p, 1);
        let inv4 = mi(4, &m).inv()?;
        let mut pow = ModNum::one(&m);
        let mut lhs = ModNum::zero(&m);
        for k in 1..p {
            pow = pow.mul(&inv4);
            lhs = lhs.add(&mn(&ctx.seq.central[k as usize], &m).mul(&inv_k(k, &m)?).mul(&pow));
        }
        let rhs = mi(2, &m).mul(&fermat_q(2, p, 1)?);
        Ok(mismatch("full sum".into(), &lhs, &rhs))
    })
}

/// sum_{k=1}^{p-1} C(2k,k) / k = 0  mod p^2.
pub(super) fn c29b(ctx: &Ctx, params: &RunParams) -> Outcome {
    over_primes(params, Threshold::Gt3, |p| {
        let m = pp(p, 2);
        let mut lhs = ModNum::zero(&m);
        for k in 1..p {
            lhs = lhs.add(&mn(&ctx.seq.central[k as usize], &m).mul(&inv_k(k, &m)?));
        }
        Ok(mismatch("full sum".into(), &lhs, &ModNum::zero(&m)))
    })
}

/// sum_{k=1}^{p-1} (-1)^k f_k / k^2 = 0  mod p.
pub(super) fn c30a(ctx: &Ctx, params: &RunParams) -> Outcome {
    over_primes(params, Threshold::Gt3, |p| {
        let m = pp(p, 1);
        let mut lhs = ModNum::zero(&m);
        for k in 1..p {
            let mut t = mn(&ctx.seq.franel[k as usize], &m).mul(&inv_k(k, &m)?.pow(2));
            if k % 2 == 1 {
                t = t.neg();
            }
            lhs = lhs.add(&t);
        }
        Ok(mismatch("full sum".into(), &lhs, &ModNum::zero(&m)))
    })
}

/// sum_{k=1}^{p-1} (-1)^k f_k / k = 0  mod p^2.
pub(super) fn c30b(ctx: &Ctx, params: &RunParams) -> Outcome {
    over_primes(params, Threshold::Gt3, |p| {
        let m = pp(p, 2);
        let mut lhs = ModNum::zero(&m);
        for k in 1..p {
            let mut t = mn(&ctx.seq.franel[k as usize], &m).mul(&inv_k(k, &m)?);
            if k % 2 == 1 {
                t = t.neg();
            }
            lhs = lhs.add(&t);
        }
        Ok(mismatch("full sum".into(), &lhs, &ModNum::zero(&m)))
    })
}
