//! Small integer number theory used by the field constructors.

pub fn gcd(a: u64, b: u64) -> u64 {
    let (mut a, mut b) = (a, b);
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// Prime factorization by trial division, as (prime, exponent) pairs.
pub fn factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factor(n) == vec![(n, 1)]
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = vec![1u64];
    for (p, e) in factor(n) {
        let cur = out.clone();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            out.extend(cur.iter().map(|d| d * pk));
        }
    }
    out.sort_unstable();
    out
}

pub fn mobius(n: u64) -> i32 {
    let f = factor(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn totient(n: u64) -> u64 {
    factor(n)
        .iter()
        .fold(n, |acc, &(p, _)| acc / p * (p - 1))
}

pub fn mod_pow(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = ((r as u128 * b as u128) % m as u128) as u64;
        }
        b = ((b as u128 * b as u128) % m as u128) as u64;
        e >>= 1;
    }
    r
}

pub fn mod_inv(a: u64, m: u64) -> Option<u64> {
    let (mut old_r, mut r) = (a as i128 % m as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}

/// Multiplicative order of a modulo n (gcd(a, n) = 1 assumed).
pub fn mult_order(a: u64, n: u64) -> u64 {
    if n <= 1 {
        return 1;
    }
    let phi = totient(n);
    let mut ord = phi;
    for (p, _) in factor(phi) {
        while ord % p == 0 && mod_pow(a, ord / p, n) == 1 {
            ord /= p;
        }
    }
    ord
}

/// Smallest generator of (Z/q)^* for prime q.
pub fn primitive_root(q: u64) -> u64 {
    let ps: Vec<u64> = factor(q - 1).into_iter().map(|(p, _)| p).collect();
    (2..q)
        .find(|&g| ps.iter().all(|&p| mod_pow(g, (q - 1) / p, q) != 1))
        .unwrap_or(1)
}
