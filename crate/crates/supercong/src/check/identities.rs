//! Exact identity checks (`I*`). Everything here compares integers,
//! rationals, or integer polynomials with no reduction modulo anything;
//! a single mismatch fails the check with both sides verbatim.

use super::{Ctx, Outcome, RunParams};
use crate::exact::{binom_i, int, sign_pow, Int, Rat};
use crate::poly::IntPoly;
use crate::seq::binom_row;
use num::{One, Zero};

fn ne_witness<T: std::fmt::Display>(at: String, lhs: &T, rhs: &T) -> Outcome {
    Outcome::fail(at, lhs.to_string(), rhs.to_string())
}

/// Row of `C(n+k, k)` for `k = 0..=n`.
fn shifted_row(n: u64) -> Vec<Int> {
    let mut row = Vec::with_capacity(n as usize + 1);
    row.push(Int::one());
    for k in 1..=n {
        let next = &row[(k - 1) as usize] * Int::from(n + k) / Int::from(k);
        row.push(next);
    }
    row
}

/// A_n = sum C(n,k) C(n+k,k) f_k.
pub(super) fn i01(ctx: &Ctx, p: &RunParams) -> Outcome {
    for n in 0..=p.n_max {
        let b = binom_row(n);
        let bb = shifted_row(n);
        let mut acc = Int::zero();
        for k in 0..=n as usize {
            acc += &b[k] * &bb[k] * &ctx.seq.franel[k];
        }
        if acc != ctx.seq.apery[n as usize] {
            return ne_witness(format!("n={n}"), &acc, &ctx.seq.apery[n as usize]);
        }
    }
    Outcome::pass()
}

/// g_n = sum C(n,k) f_k.
pub(super) fn i02(ctx: &Ctx, p: &RunParams) -> Outcome {
    for n in 0..=p.n_max {
        let b = binom_row(n);
        let mut acc = Int::zero();
        for k in 0..=n as usize {
            acc += &b[k] * &ctx.seq.franel[k];
        }
        if acc != ctx.seq.g[n as usize] {
            return ne_witness(format!("n={n}"), &acc, &ctx.seq.g[n as usize]);
        }
    }
    Outcome::pass()
}

/// sum_{k<n} (4k+3) g_k = 3n^2 sum_{k<n} C(n-1,k)^2 C_k.
pub(super) fn i03(ctx: &Ctx, p: &RunParams) -> Outcome {
    let mut lhs = Int::zero();
    for n in 1..=p.n_max {
        lhs += int(4 * (n as i64 - 1) + 3) * &ctx.seq.g[n as usize - 1];
        let b = binom_row(n - 1);
        let mut conv = Int::zero();
        for k in 0..n as usize {
            conv += &b[k] * &b[k] * &ctx.seq.catalan[k];
        }
        let rhs = int(3) * Int::from(n * n) * conv;
        if lhs != rhs {
            return ne_witness(format!("n={n}"), &lhs, &rhs);
        }
    }
    Outcome::pass()
}

/// (1/n^2) sum_{k<n} (3k+1) f_k 8^(n-1-k)
///   = sum_{k<n} C(n-1,k)^3 (1 - n/(k+1) + n^2/(k+1)^2).
pub(super) fn i04(ctx: &Ctx, p: &RunParams) -> Outcome {
    let mut pow8 = vec![Int::one()];
    for _ in 1..=p.n_max {
        let next = pow8.last().unwrap() * int(8);
        pow8.push(next);
    }
    for n in 1..=p.n_max {
        let mut s = Int::zero();
        for k in 0..n {
            s += int(3 * k as i64 + 1) * &ctx.seq.franel[k as usize] * &pow8[(n - 1 - k) as usize];
        }
        let lhs = Rat::new(s, Int::from(n * n));
        let b = binom_row(n - 1);
        let mut rhs = Rat::zero();
        let big_n = int(n as i64);
        for k in 0..n {
            let cube = &b[k as usize] * &b[k as usize] * &b[k as usize];
            let kk = Int::from(k + 1);
            let frac = Rat::one() - Rat::new(big_n.clone(), kk.clone())
                + Rat::new(&big_n * &big_n, &kk * &kk);
            rhs += Rat::from(cube) * frac;
        }
        if lhs != rhs {
            return ne_witness(format!("n={n}"), &lhs, &rhs);
        }
    }
    Outcome::pass()
}

struct SplitMix64(u64);

impl SplitMix64 {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    fn small(&mut self) -> Int {
        int((self.next() % 19) as i64 - 9)
    }
}

/// The three partial-sum identities for the paired transforms
/// X_n = sum C(n,k) C(n+k,k) x_k and y_n = sum C(n,k) x_k, driven by
/// seeded random integer inputs in [-9, 9].
pub(super) fn i05(_ctx: &Ctx, p: &RunParams) -> Outcome {
    let n_max = p.n_max as usize;
    let mut rng = SplitMix64(p.seed);
    for run in 1..=3u32 {
        let xs: Vec<Int> = (0..=n_max).map(|_| rng.small()).collect();
        let mut ys = Vec::with_capacity(n_max + 1);
        let mut caps = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max as u64 {
            let b = binom_row(n);
            let bb = shifted_row(n);
            let mut y = Int::zero();
            let mut cap = Int::zero();
            for k in 0..=n as usize {
                y += &b[k] * &xs[k];
                cap += &b[k] * &bb[k] * &xs[k];
            }
            ys.push(y);
            caps.push(cap);
        }

        // X_n recovered from y by the alternating double transform.
        for n in 0..=n_max as u64 {
            let b = binom_row(n);
            let bb = shifted_row(n);
            let mut acc = Int::zero();
            for k in 0..=n as usize {
                acc += &b[k] * &bb[k] * &ys[k] * sign_pow(n - k as u64);
            }
            if acc != caps[n as usize] {
                return ne_witness(
                    format!("run {run}, n={n}, inverse transform"),
                    &acc,
                    &caps[n as usize],
                );
            }
        }

        // Odd-weighted and alternating odd-weighted partial sums.
        let mut plain = Int::zero();
        let mut alt = Int::zero();
        for n in 1..=n_max as u64 {
            let k = n - 1;
            let w = int(2 * k as i64 + 1) * &caps[k as usize];
            alt += &w * sign_pow(k);
            plain += w;

            let b1 = binom_row(n - 1);
            let mut rhs_y = Int::zero();
            let mut rhs_x = Int::zero();
            let mut nk = Int::one();
            for j in 0..n {
                if j > 0 {
                    nk = &nk * Int::from(n + j) / Int::from(j);
                }
                let base = &b1[j as usize] * &nk;
                rhs_y += &base * &ys[j as usize] * sign_pow(j);
                rhs_x += base * &xs[j as usize];
            }
            let scale = int(n as i64) * sign_pow(n - 1);
            let want_plain = &scale * rhs_y;
            if plain != want_plain {
                return ne_witness(
                    format!("run {run}, n={n}, odd-weighted sum"),
                    &plain,
                    &want_plain,
                );
            }
            let want_alt = scale * rhs_x;
            if alt != want_alt {
                return ne_witness(
                    format!("run {run}, n={n}, alternating odd-weighted sum"),
                    &alt,
                    &want_alt,
                );
            }
        }
    }
    Outcome::pass()
}

/// sum_{l=k}^{n-1} (-1)^l (2l+1) C(l+k,2k) = (-1)^(n-1) (n-k) C(n+k,2k).
pub(super) fn i06(_ctx: &Ctx, p: &RunParams) -> Outcome {
    for k in 0..p.n_max {
        let mut acc = Int::zero();
        let mut c = Int::one(); // C(l+k, 2k) starting at l = k
        for l in k..p.n_max {
            acc += int(2 * l as i64 + 1) * &c * sign_pow(l);
            let n = l + 1;
            c = c * Int::from(n + k) / Int::from(n - k);
            let want = Int::from(n - k) * &c * sign_pow(n - 1);
            if acc != want {
                return ne_witness(format!("k={k}, n={n}"), &acc, &want);
            }
        }
    }
    Outcome::pass()
}

/// sum_k C(m-x+y, k) C(n+x-y, n-k) C(x+k, m+n) = C(x,m) C(y,n).
pub(super) fn i07(_ctx: &Ctx, p: &RunParams) -> Outcome {
    let hi = p.n_max.min(8);
    for m in 0..=hi {
        for n in 0..=hi {
            for x in -2..=3i64 {
                for y in -2..=3i64 {
                    let mut acc = Int::zero();
                    for k in 0..=n {
                        acc += binom_i(m as i64 - x + y, k)
                            * binom_i(n as i64 + x - y, n - k)
                            * binom_i(x + k as i64, m + n);
                    }
                    let want = binom_i(x, m) * binom_i(y, n);
                    if acc != want {
                        return ne_witness(format!("m={m}, n={n}, x={x}, y={y}"), &acc, &want);
                    }
                }
            }
        }
    }
    Outcome::pass()
}

/// g_n(x) = sum C(n,k) f_k(x) and f_n(x) = sum C(n,k) (-1)^(n-k) g_k(x).
pub(super) fn i08(ctx: &Ctx, p: &RunParams) -> Outcome {
    for n in 0..=p.n_max {
        let b = binom_row(n);
        let mut to_g = IntPoly::new();
        let mut to_f = IntPoly::new();
        for k in 0..=n as usize {
            to_g = &to_g + &ctx.seq.f_poly[k].scale(&b[k]);
            to_f = &to_f + &ctx.seq.g_poly[k].scale(&(&b[k] * sign_pow(n - k as u64)));
        }
        if to_g != ctx.seq.g_poly[n as usize] {
            return ne_witness(format!("n={n}, forward"), &to_g, &ctx.seq.g_poly[n as usize]);
        }
        if to_f != ctx.seq.f_poly[n as usize] {
            return ne_witness(format!("n={n}, inverse"), &to_f, &ctx.seq.f_poly[n as usize]);
        }
    }
    Outcome::pass()
}

/// A_n(x) = sum C(n,k) C(n+k,k) f_k(x)
///        = sum C(n,k) C(n+k,k) (-1)^(n-k) g_k(x).
pub(super) fn i09(ctx: &Ctx, p: &RunParams) -> Outcome {
    for n in 0..=p.n_max {
        let b = binom_row(n);
        let bb = shifted_row(n);
        let mut from_f = IntPoly::new();
        let mut from_g = IntPoly::new();
        for k in 0..=n as usize {
            let w = &b[k] * &bb[k];
            from_f = &from_f + &ctx.seq.f_poly[k].scale(&w);
            from_g = &from_g + &ctx.seq.g_poly[k].scale(&(w * sign_pow(n - k as u64)));
        }
        let want = &ctx.seq.a_poly[n as usize];
        if from_f != *want {
            return ne_witness(format!("n={n}, via f"), &from_f, want);
        }
        if from_g != *want {
            return ne_witness(format!("n={n}, via g"), &from_g, want);
        }
    }
    Outcome::pass()
}

fn odd_weighted_apery_sum(ctx: &Ctx, n: u64, alternating: bool) -> IntPoly {
    let mut acc = IntPoly::new();
    for k in 0..n as usize {
        let mut w = int(2 * k as i64 + 1);
        if alternating && k % 2 == 1 {
            w = -w;
        }
        acc = &acc + &ctx.seq.a_poly[k].scale(&w);
    }
    acc
}

/// sum_{k<n} (2k+1) A_k(x) = (-1)^(n-1) n sum_{k<n} C(n-1,k) C(n+k,k) (-1)^k g_k(x).
pub(super) fn i10(ctx: &Ctx, p: &RunParams) -> Outcome {
    for n in 1..=p.n_max {
        let lhs = odd_weighted_apery_sum(ctx, n, false);
        let b1 = binom_row(n - 1);
        let mut rhs = IntPoly::new();
        let mut nk = Int::one();
        for k in 0..n {
            if k > 0 {
                nk = &nk * Int::from(n + k) / Int::from(k);
            }
            let w = &b1[k as usize] * &nk * sign_pow(k);
            rhs = &rhs + &ctx.seq.g_poly[k as usize].scale(&w);
        }
        let rhs = rhs.scale(&(int(n as i64) * sign_pow(n - 1)));
        if lhs != rhs {
            return ne_witness(format!("n={n}"), &lhs, &rhs);
        }
    }
    Outcome::pass()
}

/// sum_{k<n} (2k+1) (-1)^k A_k(x) = (-1)^(n-1) n sum_{k<n} C(n-1,k) C(n+k,k) f_k(x).
pub(super) fn i11(ctx: &Ctx, p: &RunParams) -> Outcome {
    for n in 1..=p.n_max {
        let lhs = odd_weighted_apery_sum(ctx, n, true);
        let b1 = binom_row(n - 1);
        let mut rhs = IntPoly::new();
        let mut nk = Int::one();
        for k in 0..n {
            if k > 0 {
                nk = &nk * Int::from(n + k) / Int::from(k);
            }
            let w = &b1[k as usize] * &nk;
            rhs = &rhs + &ctx.seq.f_poly[k as usize].scale(&w);
        }
        let rhs = rhs.scale(&(int(n as i64) * sign_pow(n - 1)));
        if lhs != rhs {
            return ne_witness(format!("n={n}"), &lhs, &rhs);
        }
    }
    Outcome::pass()
}

/// sum_{k<n} (-1)^k (6k^3+9k^2+5k+1) A_k = 0 mod n^3.
pub(super) fn i12(ctx: &Ctx, p: &RunParams) -> Outcome {
    let mut acc = Int::zero();
    for n in 1..=p.n_max {
        let k = (n - 1) as i64;
        acc += int(6 * k * k * k + 9 * k * k + 5 * k + 1)
            * &ctx.seq.apery[n as usize - 1]
            * sign_pow(n - 1);
        let m = Int::from(n * n * n);
        let r = &acc % &m;
        if !r.is_zero() {
            return Outcome::fail(format!("n={n}"), acc.to_string(), format!("0 mod {m}"));
        }
    }
    Outcome::pass()
}

/// sum_{k<n} C(n-1,k) C(n+k,k) (3k+2) f_k = 0 mod n^2.
pub(super) fn i13(ctx: &Ctx, p: &RunParams) -> Outcome {
    for n in 1..=p.n_max {
        let b1 = binom_row(n - 1);
        let mut acc = Int::zero();
        let mut nk = Int::one();
        for k in 0..n {
            if k > 0 {
                nk = &nk * Int::from(n + k) / Int::from(k);
            }
            acc += &b1[k as usize] * &nk * int(3 * k as i64 + 2) * &ctx.seq.franel[k as usize];
        }
        let m = Int::from(n * n);
        let r = &acc % &m;
        if !r.is_zero() {
            return Outcome::fail(format!("n={n}"), acc.to_string(), format!("0 mod {m}"));
        }
    }
    Outcome::pass()
}

/// (1/m^2) sum_{k<m} (3k+2) (-1)^k f_k is an integer.
pub(super) fn i14(ctx: &Ctx, p: &RunParams) -> Outcome {
    let mut acc = Int::zero();
    for m in 1..=p.n_max {
        let k = (m - 1) as i64;
        acc += int(3 * k + 2) * &ctx.seq.franel[m as usize - 1] * sign_pow(m - 1);
        let m2 = Int::from(m * m);
        let r = &acc % &m2;
        if !r.is_zero() {
            return Outcome::fail(format!("m={m}"), acc.to_string(), format!("0 mod {m2}"));
        }
    }
    Outcome::pass()
}

/// (n+1)^2 f_(n+1) = (7n(n+1)+2) f_n + 8n^2 f_(n-1).
pub(super) fn i15(ctx: &Ctx, p: &RunParams) -> Outcome {
    let f = &ctx.seq.franel;
    for n in 1..p.n_max {
        let n = n as usize;
        let lhs = Int::from(((n + 1) * (n + 1)) as u64) * &f[n + 1];
        let rhs = Int::from((7 * n * (n + 1) + 2) as u64) * &f[n]
            + Int::from((8 * n * n) as u64) * &f[n - 1];
        if lhs != rhs {
            return ne_witness(format!("n={n}"), &lhs, &rhs);
        }
    }
    Outcome::pass()
}

/// Four-term recurrence for s_n = g_n(-1).
pub(super) fn i16(ctx: &Ctx, p: &RunParams) -> Outcome {
    let s = &ctx.seq.s;
    for n in 0..=p.n_max.saturating_sub(3) {
        let ni = n as i64;
        let c3 = int((ni + 3) * (ni + 3) * (4 * ni + 5));
        let c2 = int(20 * ni * ni * ni + 125 * ni * ni + 254 * ni + 165);
        let c1 = int(76 * ni * ni * ni + 399 * ni * ni + 678 * ni + 375);
        let c0 = int(-25 * (ni + 1) * (ni + 1) * (4 * ni + 9));
        let n = n as usize;
        let acc = c3 * &s[n + 3] + c2 * &s[n + 2] + c1 * &s[n + 1] + c0 * &s[n];
        if !acc.is_zero() {
            return ne_witness(format!("n={n}"), &acc, &Int::zero());
        }
    }
    Outcome::pass()
}

/// u_m = sum_{k<m} C(m-1,k)^2 C_k satisfies the three-term recurrence and
/// 3 m^2 u_m equals the odd-weighted g-sum.
pub(super) fn i17(ctx: &Ctx, p: &RunParams) -> Outcome {
    let hi = p.n_max + 3;
    let mut u = vec![Int::zero()];
    for m in 1..=hi {
        let b = binom_row(m - 1);
        let mut acc = Int::zero();
        for k in 0..m as usize {
            acc += &b[k] * &b[k] * &ctx.seq.catalan[k];
        }
        u.push(acc);
    }

    let mut gsum = Int::zero();
    for m in 1..=hi {
        let k = (m - 1) as i64;
        gsum += int(4 * k + 3) * &ctx.seq.g[m as usize - 1];
        let lhs = int(3) * Int::from(m * m) * &u[m as usize];
        if lhs != gsum {
            return ne_witness(format!("m={m}, defining sums"), &lhs, &gsum);
        }
    }

    for n in 1..=p.n_max {
        let ni = n as i64;
        let lhs = int((ni + 2) * (ni + 3) * (ni + 3) * (2 * ni + 3)) * &u[(n + 3) as usize];
        let rhs = int((ni + 2) * (22 * ni * ni * ni + 121 * ni * ni + 211 * ni + 120))
            * &u[(n + 2) as usize]
            - int((ni + 1) * (38 * ni * ni * ni + 171 * ni * ni + 229 * ni + 102))
                * &u[(n + 1) as usize]
            + int(9 * ni * ni * (ni + 1) * (2 * ni + 5)) * &u[n as usize];
        if lhs != rhs {
            return ne_witness(format!("n={n}, recurrence"), &lhs, &rhs);
        }
    }
    Outcome::pass()
}

fn poly_divisible(poly: &IntPoly, n: u64) -> Option<(usize, Int)> {
    let m = Int::from(n);
    for (j, c) in poly.coeffs().iter().enumerate() {
        let r = c % &m;
        if !r.is_zero() {
            return Some((j, c.clone()));
        }
    }
    None
}

/// Every coefficient of sum_{k<n} (2k+1) A_k(x) is divisible by n.
pub(super) fn i18(ctx: &Ctx, p: &RunParams) -> Outcome {
    for n in 1..=p.n_max {
        let s = odd_weighted_apery_sum(ctx, n, false);
        if let Some((j, c)) = poly_divisible(&s, n) {
            return Outcome::fail(
                format!("n={n}, coefficient of x^{j}"),
                c.to_string(),
                format!("0 mod {n}"),
            );
        }
    }
    Outcome::pass()
}

/// Every coefficient of sum_{k<n} (2k+1) (-1)^k A_k(x) is divisible by n.
pub(super) fn i19(ctx: &Ctx, p: &RunParams) -> Outcome {
    for n in 1..=p.n_max {
        let s = odd_weighted_apery_sum(ctx, n, true);
        if let Some((j, c)) = poly_divisible(&s, n) {
            return Outcome::fail(
                format!("n={n}, coefficient of x^{j}"),
                c.to_string(),
                format!("0 mod {n}"),
            );
        }
    }
    Outcome::pass()
}

/// sum_{l=k}^{n-1} (-1)^l (6l^3+9l^2+5l+1) C(l+k,2k)
///   = (-1)^(n-1) (n-k) (3n^2-3k-2) C(n+k,2k).
pub(super) fn i20(_ctx: &Ctx, p: &RunParams) -> Outcome {
    for k in 0..p.n_max {
        let mut acc = Int::zero();
        let mut c = Int::one();
        for l in k..p.n_max {
            let li = l as i64;
            acc += int(6 * li * li * li + 9 * li * li + 5 * li + 1) * &c * sign_pow(l);
            let n = l + 1;
            c = c * Int::from(n + k) / Int::from(n - k);
            let ni = n as i64;
            let want =
                Int::from(n - k) * int(3 * ni * ni - 3 * k as i64 - 2) * &c * sign_pow(n - 1);
            if acc != want {
                return ne_witness(format!("k={k}, n={n}"), &acc, &want);
            }
        }
    }
    Outcome::pass()
}

/// (k+1) sum_{n=k}^{m-1} (2n+1) C(n+k,2k) = m (m-k) C(m+k,2k).
pub(super) fn i21(_ctx: &Ctx, p: &RunParams) -> Outcome {
    for k in 0..p.n_max {
        let mut acc = Int::zero();
        let mut c = Int::one();
        for n in k..p.n_max {
            acc += int(2 * n as i64 + 1) * &c;
            let m = n + 1;
            c = c * Int::from(m + k) / Int::from(m - k);
            let lhs = Int::from(k + 1) * &acc;
            let rhs = Int::from(m) * Int::from(m - k) * &c;
            if lhs != rhs {
                return ne_witness(format!("k={k}, m={m}"), &lhs, &rhs);
            }
        }
    }
    Outcome::pass()
}

/// For u_k = sum_{r<p} C(-k,r) C(-k-1,r): the Zeilberger certificate
/// k (k+1)^2 (2(2k+1) u_(k+1) - k u_k)
///   = p^2 C(p+k,p) C(p+k-1,p) (2kp+p+3k^2+3k+1),
/// plus the seed u_1 = (p^2+p)/2.
pub(super) fn i22(_ctx: &Ctx, p: &RunParams) -> Outcome {
    let k_hi = p.n_max.min(30);
    for q in [2u64, 3, 5, 7, 11, 13] {
        let u = |k: u64| -> Int {
            let mut acc = Int::zero();
            let mut a = Int::one();
            let mut b = Int::one();
            for r in 0..q {
                if r > 0 {
                    let ri = r as i64;
                    a = a * int(-(k as i64) - ri + 1) / int(ri);
                    b = b * int(-(k as i64) - ri) / int(ri);
                }
                acc += &a * &b;
            }
            acc
        };
        let seed = u(1);
        let want_seed = Int::from(q * q + q) / int(2);
        if seed != want_seed {
            return ne_witness(format!("p={q}, seed u_1"), &seed, &want_seed);
        }
        for k in 1..=k_hi {
            let ki = k as i64;
            let lhs = int(ki)
                * int((ki + 1) * (ki + 1))
                * (int(2 * (2 * ki + 1)) * u(k + 1) - int(ki) * u(k));
            let qi = q as i64;
            let rhs = int(qi * qi)
                * binom_i(qi + ki, q)
                * binom_i(qi + ki - 1, q)
                * int(2 * ki * qi + qi + 3 * ki * ki + 3 * ki + 1);
            if lhs != rhs {
                return ne_witness(format!("p={q}, k={k}"), &lhs, &rhs);
            }
        }
    }
    Outcome::pass()
}
