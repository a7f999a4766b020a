//! Conjecture scans (`X*`). A pass means "no counterexample in the
//! configured range", nothing stronger. X03 and X06 also attach the
//! data they gathered as a table so reports preserve the evidence.

use super::congruences::{fermat_q, inv_k, leg3, mi, mismatch, mn, over_primes, pp};
use super::{Ctx, Outcome, RunParams, Status, Table, Threshold};
use crate::exact::{int, Int, Rat};
use crate::modular::{nu3, primes_in, rat_mod, ModNum, Val3};
use num::integer::Integer;
use num::{Signed, Zero};
use std::collections::BTreeMap;

fn row(pairs: &[(&str, String)]) -> BTreeMap<String, String> {
    pairs
        .iter()
        .map(|(k, v)| (k.to_string(), v.clone()))
        .collect()
}

/// (n-1) n^2 divides sum_{k<n} (9k^2+5k) (-1)^k f_k, and for odd p the
/// sum to p equals 3p^2(p-1) - 16 p^3 q_p(2) mod p^4.
pub(super) fn x01(ctx: &Ctx, params: &RunParams) -> Outcome {
    let mut acc = Int::zero();
    for n in 1..=params.n_max {
        let k = (n - 1) as i64;
        let mut t = int(9 * k * k + 5 * k) * &ctx.seq.franel[n as usize - 1];
        if k % 2 == 1 {
            t = -t;
        }
        acc += t;
        if n > 1 {
            let m = Int::from(n - 1) * Int::from(n * n);
            if !(&acc % &m).is_zero() {
                return Outcome::fail(format!("n={n}"), acc.to_string(), format!("0 mod {m}"));
            }
        }
    }

    over_primes(params, Threshold::Odd, |p| {
        let m = pp(p, 4);
        let mut lhs = ModNum::zero(&m);
        for k in 0..p {
            let ki = k as i64;
            let mut t = mi(9 * ki * ki + 5 * ki, &m).mul(&mn(&ctx.seq.franel[k as usize], &m));
            if k % 2 == 1 {
                t = t.neg();
            }
            lhs = lhs.add(&t);
        }
        let q2 = fermat_q(2, p, 4)?;
        let rhs = mn(&(int(3) * Int::from(p * p) * int(p as i64 - 1)), &m)
            .sub(&mn(&(int(16) * pp(p, 3)), &m).mul(&q2));
        Ok(mismatch("prime sum".into(), &lhs, &rhs))
    })
}

/// (1/n) sum (4k+3) g_k(x) has integer coefficients; the g(-1) analogue
/// with weight 8k^2+12k+5 is n^2 times an odd integer; for every prime
/// the same sum is 3p^2 mod p^3.
pub(super) fn x02(ctx: &Ctx, params: &RunParams) -> Outcome {
    let mut poly_acc: Vec<Int> = Vec::new();
    let mut s_acc = Int::zero();
    for n in 1..=params.n_max {
        let k = (n - 1) as i64;
        for (j, c) in ctx.seq.g_poly[n as usize - 1].coeffs().iter().enumerate() {
            let t = int(4 * k + 3) * c;
            if j < poly_acc.len() {
                poly_acc[j] += t;
            } else {
                poly_acc.push(t);
            }
        }
        let m = Int::from(n);
        for (j, c) in poly_acc.iter().enumerate() {
            if !(c % &m).is_zero() {
                return Outcome::fail(
                    format!("n={n}, coefficient of x^{j}"),
                    c.to_string(),
                    format!("0 mod {n}"),
                );
            }
        }

        s_acc += int(8 * k * k + 12 * k + 5) * &ctx.seq.s[n as usize - 1];
        let m2 = Int::from(n * n);
        let (q, r) = s_acc.div_rem(&m2);
        if !r.is_zero() {
            return Outcome::fail(format!("n={n}"), s_acc.to_string(), format!("0 mod {m2}"));
        }
        if q.is_even() {
            return Outcome::fail(
                format!("n={n}, parity of quotient"),
                q.to_string(),
                "odd".into(),
            );
        }
    }

    over_primes(params, Threshold::Any, |p| {
        let m = pp(p, 3);
        let mut lhs = ModNum::zero(&m);
        for k in 0..p {
            let ki = k as i64;
            lhs = lhs.add(
                &mi(8 * ki * ki + 12 * ki + 5, &m).mul(&mn(&ctx.seq.s[k as usize], &m)),
            );
        }
        let rhs = mn(&(int(3) * Int::from(p * p)), &m);
        Ok(mismatch("prime sum".into(), &lhs, &rhs))
    })
}

/// nu_3 of the odd-weighted alternating Apery sums: exactly 3 nu_3(n)
/// for weight (2k+1), at least that for weight (2k+1)^3, and exactly
/// 3 nu_3(n) + 2 when 3 divides n.
pub(super) fn x03(ctx: &Ctx, params: &RunParams) -> Outcome {
    let mut s1 = Int::zero();
    let mut s3 = Int::zero();
    let mut table: Table = Vec::new();
    for n in 1..=params.n_max {
        let k = (n - 1) as i64;
        let w = int(2 * k + 1);
        let mut t1 = &w * &ctx.seq.apery[n as usize - 1];
        let mut t3 = &w * &w * &w * &ctx.seq.apery[n as usize - 1];
        if k % 2 == 1 {
            t1 = -t1;
            t3 = -t3;
        }
        s1 += t1;
        s3 += t3;

        let vn = nu3(&Int::from(n)).finite().expect("n >= 1");
        let v1 = nu3(&s1);
        let v3 = nu3(&s3);
        table.push(row(&[
            ("n", n.to_string()),
            ("nu3_n", vn.to_string()),
            ("nu3_linear", v1.to_string()),
            ("nu3_cubic", v3.to_string()),
        ]));

        if v1 != Val3::Finite(3 * vn) {
            return Outcome::fail(
                format!("n={n}, linear weight"),
                format!("nu_3 = {v1}"),
                format!("nu_3 = {}", 3 * vn),
            )
            .with_table(table);
        }
        if v3 < v1 {
            return Outcome::fail(
                format!("n={n}, cubic weight"),
                format!("nu_3 = {v3}"),
                format!("nu_3 >= {}", 3 * vn),
            )
            .with_table(table);
        }
        if n % 3 == 0 && v3 != Val3::Finite(3 * vn + 2) {
            return Outcome::fail(
                format!("n={n}, cubic weight at a multiple of 3"),
                format!("nu_3 = {v3}"),
                format!("nu_3 = {}", 3 * vn + 2),
            )
            .with_table(table);
        }
    }
    let mut out = Outcome::pass();
    out.table = Some(table);
    out
}

/// (1/n) sum (6k+5) (-1)^k F_k is an odd integer; alternating F_k sums
/// hit (p/3) mod p^2; G_k sums from k=1 hit -(4/3) p^3 B_(p-3) mod p^4.
pub(super) fn x04(ctx: &Ctx, params: &RunParams) -> Outcome {
    let mut acc = Int::zero();
    for n in 1..=params.n_max {
        let k = (n - 1) as i64;
        let mut t = int(6 * k + 5) * &ctx.seq.big_f[n as usize - 1];
        if k % 2 == 1 {
            t = -t;
        }
        acc += t;
        let m = Int::from(n);
        let (q, r) = acc.div_rem(&m);
        if !r.is_zero() {
            return Outcome::fail(format!("n={n}"), acc.to_string(), format!("0 mod {n}"));
        }
        if q.is_even() {
            return Outcome::fail(
                format!("n={n}, parity of quotient"),
                q.to_string(),
                "odd".into(),
            );
        }
    }

    let alternating = over_primes(params, Threshold::Gt3, |p| {
        let m = pp(p, 2);
        let mut lhs = ModNum::zero(&m);
        for k in 0..p {
            let mut t = mn(&ctx.seq.big_f[k as usize], &m);
            if k % 2 == 1 {
                t = t.neg();
            }
            lhs = lhs.add(&t);
        }
        Ok(mismatch("alternating F sum".into(), &lhs, &mi(leg3(p), &m)))
    });
    if alternating.status != Status::Pass {
        return alternating;
    }

    over_primes(params, Threshold::Gt3, |p| {
        let m = pp(p, 4);
        let mut lhs = ModNum::zero(&m);
        for k in 1..p {
            lhs = lhs.add(&mn(&ctx.seq.big_g[k as usize], &m));
        }
        let rhs = rat_mod(
            &(Rat::new(int(-4), int(3)) * Rat::from(pp(p, 3)) * ctx.bern(p - 3)),
            &m,
        )?;
        Ok(mismatch("G sum".into(), &lhs, &rhs))
    })
}

/// sum g_(k-1)/k = -(p/3) q_p(9) mod p^2, and sum g_k/9^k = (p/3) mod p^2.
pub(super) fn x05(ctx: &Ctx, params: &RunParams) -> Outcome {
    let shifted = over_primes(params, Threshold::Gt3, |p| {
        let m = pp(p, 2);
        let mut lhs = ModNum::zero(&m);
        for k in 1..p {
            lhs = lhs.add(&mn(&ctx.seq.g[k as usize - 1], &m).mul(&inv_k(k, &m)?));
        }
        let rhs = mi(-leg3(p), &m).mul(&fermat_q(9, p, 2)?);
        Ok(mismatch("shifted sum".into(), &lhs, &rhs))
    });
    if shifted.status != Status::Pass {
        return shifted;
    }

    over_primes(params, Threshold::Gt3, |p| {
        let m = pp(p, 2);
        let inv9 = mi(9, &m).inv()?;
        let mut pow = ModNum::one(&m);
        let mut lhs = ModNum::zero(&m);
        for k in 0..p {
            lhs = lhs.add(&mn(&ctx.seq.g[k as usize], &m).mul(&pow));
            pow = pow.mul(&inv9);
        }
        Ok(mismatch("9^k sum".into(), &lhs, &mi(leg3(p), &m)))
    })
}

fn sym_lift(v: &Int, m: &Int) -> Int {
    if v * int(2) > *m {
        v - m
    } else {
        v.clone()
    }
}

/// Rational a/d congruent to `c` modulo `m`, over denominators d that are
/// powers of 3 up to `max_den`, picking the smallest |a| (ties resolve to
/// the smallest denominator). The observed constants all have 3-power
/// denominators, so other d would only manufacture spurious low-height
/// matches.
fn reconstruct(c: &Int, m: &Int, max_den: u64) -> Rat {
    let mut best: Option<(Int, Rat)> = None;
    let mut d = 1u64;
    while d <= max_den {
        let a = sym_lift(&(c * Int::from(d)).mod_floor(m), m);
        let score = a.abs();
        if best.as_ref().map_or(true, |(s, _)| score < *s) {
            best = Some((score, Rat::new(a, Int::from(d))));
        }
        d *= 3;
    }
    best.expect("max_den >= 1").1
}

/// For each r <= r_max, the residues c_r with
/// sum (2k+1)^(2r+1) (-1)^k A_k = c_r p (p/3) mod p^3, lifted to a
/// rational candidate by reconstruction across the prime range.
pub(super) fn x06(ctx: &Ctx, params: &RunParams) -> Outcome {
    let admitted: Vec<u64> = primes_in(params.primes.0, params.primes.1)
        .into_iter()
        .filter(|&p| Threshold::Gt3.admits(p))
        .collect();
    if admitted.is_empty() {
        return Outcome::skip(format!(
            "threshold p>3 admits no primes in {}..{}",
            params.primes.0, params.primes.1
        ));
    }

    let mut table: Table = Vec::new();
    // residues[r] holds (p, c_r mod p^2) per admitted prime.
    let mut residues: Vec<Vec<(u64, Int)>> = vec![Vec::new(); params.r_max as usize + 1];
    for &p in &admitted {
        let m3 = pp(p, 3);
        let m2 = pp(p, 2);
        let pint = Int::from(p);
        for r in 0..=params.r_max {
            let mut s = ModNum::zero(&m3);
            for k in 0..p {
                let w = mi(2 * k as i64 + 1, &m3).pow(2 * r + 1);
                let mut t = w.mul(&mn(&ctx.seq.apery[k as usize], &m3));
                if k % 2 == 1 {
                    t = t.neg();
                }
                s = s.add(&t);
            }
            let v = s.value();
            if !(v % &pint).is_zero() {
                return Outcome::fail(
                    format!("p={p}, r={r}, divisibility by p"),
                    s.to_string(),
                    format!("0 mod {p}"),
                )
                .with_table(table);
            }
            let c = mn(&(v / &pint), &m2).mul(&mi(leg3(p), &m2));
            table.push(row(&[
                ("p", p.to_string()),
                ("r", r.to_string()),
                ("residue", c.to_string()),
            ]));
            residues[r as usize].push((p, c.value().clone()));
        }
    }

    for r in 0..=params.r_max {
        let per_prime = &residues[r as usize];
        let (hi_p, hi_c) = per_prime.last().expect("nonempty prime range");
        let candidate = reconstruct(hi_c, &pp(*hi_p, 2), 729);
        let agree = per_prime
            .iter()
            .filter(|(p, c)| {
                let m = pp(*p, 2);
                rat_mod(&candidate, &m).map(|x| x == mn(c, &m)).unwrap_or(false)
            })
            .count();
        table.push(row(&[
            ("r", r.to_string()),
            ("candidate", candidate.to_string()),
            ("agreeing_primes", agree.to_string()),
            ("primes", per_prime.len().to_string()),
        ]));
    }

    let mut out = Outcome::pass();
    out.table = Some(table);
    out
}

/// sum (-1)^k f_k = (p/3) mod p^2 and sum_{k>=1} h_k = 0 mod p^2.
pub(super) fn x07(ctx: &Ctx, params: &RunParams) -> Outcome {
    let franel = over_primes(params, Threshold::Gt3, |p| {
        let m = pp(p, 2);
        let mut lhs = ModNum::zero(&m);
        for k in 0..p {
            let mut t = mn(&ctx.seq.franel[k as usize], &m);
            if k % 2 == 1 {
                t = t.neg();
            }
            lhs = lhs.add(&t);
        }
        Ok(mismatch("alternating f sum".into(), &lhs, &mi(leg3(p), &m)))
    });
    if franel.status != Status::Pass {
        return franel;
    }

    over_primes(params, Threshold::Gt3, |p| {
        let m = pp(p, 2);
        let mut lhs = ModNum::zero(&m);
        for k in 1..p {
            lhs = lhs.add(&mn(&ctx.seq.h_small[k as usize], &m));
        }
        Ok(mismatch("h sum".into(), &lhs, &ModNum::zero(&m)))
    })
}
