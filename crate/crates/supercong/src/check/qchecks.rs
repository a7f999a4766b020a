//! q-analogue identity checks (`Q*`). All arithmetic is exact over
//! Laurent polynomials in `q`; the classical statements must reappear
//! under the substitution q = 1.

use super::{Ctx, Outcome, RunParams};
use crate::exact::{binom_i, Int};
use crate::poly::IntPoly;
use crate::qseries::{a_q, apery_q_expansion, g_q, q_binom, q_binom_product, QLaurent};
use crate::seq::{seq_poly, SeqId};
use num::One;

fn q_hi(p: &RunParams) -> u64 {
    p.n_max.min(12)
}

/// A_n(x; q) equals its expansion over the g_k(x; q) with alternating
/// q-power weights.
pub(super) fn q01(_ctx: &Ctx, p: &RunParams) -> Outcome {
    for n in 0..=q_hi(p) {
        let direct = a_q(n);
        let expanded = apery_q_expansion(n);
        if direct != expanded {
            let bad = (0..=n as usize)
                .find(|&j| direct.coeff(j) != expanded.coeff(j))
                .unwrap_or(0);
            return Outcome::fail(
                format!("n={n}, coefficient of x^{bad}"),
                direct.coeff(bad).to_string(),
                expanded.coeff(bad).to_string(),
            );
        }
    }
    Outcome::pass()
}

/// sum_{k=j}^n (-1)^(n-k) q^(C(n-k+1,2) + 2j(n-k)) [n+k,k][k,j][n-j,k-j]
///   = [n+j,j] [n+j,2j].
pub(super) fn q02(_ctx: &Ctx, p: &RunParams) -> Outcome {
    for n in 0..=q_hi(p) {
        for j in 0..=n {
            let mut acc = QLaurent::zero();
            for k in j..=n {
                let d = n - k;
                let exp = (d as i64 + 1) * d as i64 / 2 + 2 * j as i64 * d as i64;
                let mut term = q_binom((n + k) as i64, k)
                    .mul_ref(&q_binom(k as i64, j))
                    .mul_ref(&q_binom((n - j) as i64, k - j))
                    .mul_qpow(exp);
                if d % 2 == 1 {
                    term = term.neg_ref();
                }
                acc = acc.add_ref(&term);
            }
            let want = q_binom((n + j) as i64, j).mul_ref(&q_binom((n + j) as i64, 2 * j));
            if acc != want {
                return Outcome::fail(format!("n={n}, j={j}"), acc.to_string(), want.to_string());
            }
        }
    }
    Outcome::pass()
}

/// Negative-index Gaussian binomials match the product formula.
pub(super) fn q03(_ctx: &Ctx, p: &RunParams) -> Outcome {
    let hi = p.n_max.min(10);
    for m in 0..=hi as i64 {
        for k in 0..=hi {
            let reduced = q_binom(-m - 1, k);
            let product = q_binom_product(-m - 1, k);
            if reduced != product {
                return Outcome::fail(
                    format!("n={}, k={k}", -m - 1),
                    reduced.to_string(),
                    product.to_string(),
                );
            }
        }
    }
    Outcome::pass()
}

/// sum_{k=j}^n q^((k-j)^2) [-n-1-j, k-j] [n-j, n-k] = [-2j-1, n-j].
pub(super) fn q04(_ctx: &Ctx, p: &RunParams) -> Outcome {
    let hi = p.n_max.min(10);
    for n in 0..=hi {
        for j in 0..=n {
            let mut acc = QLaurent::zero();
            for k in j..=n {
                let d = (k - j) as i64;
                let term = q_binom(-(n as i64) - 1 - j as i64, k - j)
                    .mul_ref(&q_binom((n - j) as i64, n - k))
                    .mul_qpow(d * d);
                acc = acc.add_ref(&term);
            }
            let want = q_binom(-2 * j as i64 - 1, n - j);
            if acc != want {
                return Outcome::fail(format!("n={n}, j={j}"), acc.to_string(), want.to_string());
            }
        }
    }
    Outcome::pass()
}

/// Setting q = 1 recovers the classical binomials and the classical
/// polynomial families.
pub(super) fn q05(_ctx: &Ctx, p: &RunParams) -> Outcome {
    let hi = p.n_max.min(10) as i64;
    for n in -hi..=hi {
        for k in 0..=hi as u64 {
            let got = q_binom(n, k).eval_at_one();
            let want = binom_i(n, k);
            if got != want {
                return Outcome::fail(format!("n={n}, k={k}"), got.to_string(), want.to_string());
            }
        }
    }
    for n in 0..=q_hi(p) {
        for (qpoly, id, label) in [(g_q(n), SeqId::GPoly, "g"), (a_q(n), SeqId::AperyPoly, "A")] {
            let specialized = IntPoly::from_coeffs(
                (0..=n as usize).map(|j| qpoly.coeff(j).eval_at_one()).collect(),
            );
            let want = seq_poly(id, n).expect("polynomial family");
            if specialized != want {
                return Outcome::fail(
                    format!("n={n}, family {label}"),
                    specialized.to_string(),
                    want.to_string(),
                );
            }
        }
    }
    // The q-analogue of an integer evaluates to that integer.
    for n in -hi..=hi {
        let got = crate::qseries::q_int(n).eval_at_one();
        if got != Int::from(n) {
            return Outcome::fail(format!("[{n}]"), got.to_string(), n.to_string());
        }
    }
    let one = QLaurent::one();
    debug_assert_eq!(one.eval_at_one(), Int::one());
    Outcome::pass()
}
