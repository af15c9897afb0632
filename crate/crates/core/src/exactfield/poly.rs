//! Dense polynomial helpers, coefficients stored lowest degree first.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::arith::{divisors, mobius, mod_inv};

fn trim<T: Zero>(v: &mut Vec<T>) {
    while v.len() > 1 && v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn zmul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division of integer polynomials with monic-up-to-sign divisor.
fn zdiv_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut r = num.to_vec();
    let dl = den.len();
    let lead = den[dl - 1].clone();
    let mut q = vec![BigInt::zero(); num.len() + 1 - dl];
    for k in (0..q.len()).rev() {
        let c = &r[k + dl - 1] / &lead;
        for (j, d) in den.iter().enumerate() {
            r[k + j] -= &c * d;
        }
        q[k] = c;
    }
    debug_assert!(r.iter().all(|c| c.is_zero()));
    q
}

/// n-th cyclotomic polynomial as a product of (x^d - 1)^mu(n/d).
pub fn cyclotomic(n: u64) -> Vec<BigInt> {
    let mut num = vec![BigInt::one()];
    let mut den = vec![BigInt::one()];
    for d in divisors(n) {
        let mut f = vec![BigInt::zero(); d as usize + 1];
        f[0] = -BigInt::one();
        f[d as usize] = BigInt::one();
        match mobius(n / d) {
            1 => num = zmul(&num, &f),
            -1 => den = zmul(&den, &f),
            _ => {}
        }
    }
    zdiv_exact(&num, &den)
}

pub fn qdivrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r = a.to_vec();
    trim(&mut r);
    let mut b = b.to_vec();
    trim(&mut b);
    let bl = b.len();
    if r.len() < bl {
        return (vec![BigRational::zero()], r);
    }
    let lead = b[bl - 1].clone();
    let mut q = vec![BigRational::zero(); r.len() + 1 - bl];
    for k in (0..q.len()).rev() {
        let c = &r[k + bl - 1] / &lead;
        if !c.is_zero() {
            for (j, d) in b.iter().enumerate() {
                r[k + j] -= &c * d;
            }
        }
        q[k] = c;
    }
    r.truncate(bl.saturating_sub(1).max(1));
    trim(&mut r);
    (q, r)
}

fn qmul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn qsub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out = vec![BigRational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] -= x;
    }
    trim(&mut out);
    out
}

/// Inverse of a modulo m over Q, if gcd(a, m) = 1.
pub fn qinv_mod(a: &[BigRational], m: &[BigRational]) -> Option<Vec<BigRational>> {
    let (mut r0, mut r1) = (m.to_vec(), a.to_vec());
    trim(&mut r1);
    let (mut s0, mut s1) = (vec![BigRational::zero()], vec![BigRational::one()]);
    while !(r1.len() == 1 && r1[0].is_zero()) {
        let (q, r) = qdivrem(&r0, &r1);
        let s = qsub(&s0, &qmul(&q, &s1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    if r0.len() != 1 || r0[0].is_zero() {
        return None;
    }
    let c = r0[0].clone();
    Some(s0.into_iter().map(|x| x / &c).collect())
}

// ---- polynomials over F_p ----

pub fn fp_trim(v: &mut Vec<u64>) {
    trim(v);
}

pub fn fp_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = ((out[i + j] as u128 + x as u128 * y as u128) % p as u128) as u64;
        }
    }
    out
}

pub fn fp_rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    fp_trim(&mut r);
    let mut m = m.to_vec();
    fp_trim(&mut m);
    let ml = m.len();
    if r.len() < ml {
        return r;
    }
    let inv = mod_inv(m[ml - 1], p).expect("nonzero leading coefficient");
    for k in (0..=r.len() - ml).rev() {
        let c = (r[k + ml - 1] as u128 * inv as u128 % p as u128) as u64;
        if c == 0 {
            continue;
        }
        for (j, &d) in m.iter().enumerate() {
            let sub = (c as u128 * d as u128 % p as u128) as u64;
            r[k + j] = (r[k + j] + p - sub) % p;
        }
    }
    r.truncate((ml - 1).max(1));
    fp_trim(&mut r);
    r
}

pub fn fp_powmod(base: &[u64], mut e: u128, m: &[u64], p: u64) -> Vec<u64> {
    let mut r = vec![1u64];
    let mut b = fp_rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            r = fp_rem(&fp_mul(&r, &b, p), m, p);
        }
        b = fp_rem(&fp_mul(&b, &b, p), m, p);
        e >>= 1;
    }
    r
}

pub fn fp_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    fp_trim(&mut a);
    fp_trim(&mut b);
    while !(b.len() == 1 && b[0] == 0) {
        let r = fp_rem(&a, &b, p);
        a = b;
        b = r;
    }
    a
}

/// Rabin irreducibility test for a monic f of degree m over F_p.
pub fn fp_is_irreducible(f: &[u64], p: u64) -> bool {
    let m = f.len() as u32 - 1;
    let x = vec![0u64, 1];
    let xq = |k: u32| fp_powmod(&x, (p as u128).pow(k), f, p);
    let mut xm = xq(m);
    xm.resize(2.max(xm.len()), 0);
    xm[1] = (xm[1] + p - 1) % p;
    fp_trim(&mut xm);
    if !(xm.len() == 1 && xm[0] == 0) {
        return false;
    }
    for (r, _) in super::arith::factor(m as u64) {
        let mut h = xq(m / r as u32);
        h.resize(2.max(h.len()), 0);
        h[1] = (h[1] + p - 1) % p;
        fp_trim(&mut h);
        let g = fp_gcd(&h, f, p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

/// Lexicographically least monic irreducible of degree m, ordered by the
/// integer whose base-p digits are the lower coefficients.
pub fn fp_least_irreducible(p: u64, m: u32) -> Vec<u64> {
    if m == 1 {
        return vec![0, 1];
    }
    let total = (p as u128).pow(m);
    for code in 0..total {
        let mut f = Vec::with_capacity(m as usize + 1);
        let mut c = code;
        for _ in 0..m {
            f.push((c % p as u128) as u64);
            c /= p as u128;
        }
        f.push(1);
        if f[0] != 0 && fp_is_irreducible(&f, p) {
            return f;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}
