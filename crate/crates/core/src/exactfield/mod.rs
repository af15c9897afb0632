//! Exact arithmetic in Q(zeta_n) and F_{p^m}.
//!
//! A `Field` is a cheap-to-clone context; `FieldElement`s are plain coordinate
//! vectors and every operation goes through the context.

pub mod arith;
mod norm;
mod parse;
pub mod poly;

use std::fmt::Write as _;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use norm::{GaloisSubgroup, NormAnswer};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FieldSpec {
    Cyclotomic { n: u64 },
    Finite { p: u64, m: u32 },
}

/// Coordinates in the power basis of z (cyclotomic) or t (finite).
///
/// The derived ordering is lexicographic on coordinates and is the canonical
/// order used downstream.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldElement {
    Q(Vec<BigRational>),
    F(Vec<u64>),
}

#[derive(Debug)]
struct Cyc {
    n: u64,
    phi: usize,
    // x^k mod Phi_n, for k < red.len()
    red: Vec<Vec<i64>>,
    modulus: Vec<BigRational>,
}

#[derive(Debug)]
struct Fin {
    p: u64,
    m: usize,
    modulus: Vec<u64>,
    // images of t^k under x -> x^p
    frob: Vec<Vec<u64>>,
    primitive: OnceLock<Vec<u64>>,
}

#[derive(Debug)]
enum Kind {
    Cyc(Cyc),
    Fin(Fin),
}

#[derive(Debug)]
struct Inner {
    spec: FieldSpec,
    kind: Kind,
}

#[derive(Clone, Debug)]
pub struct Field(Arc<Inner>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.0.spec == other.0.spec
    }
}

impl Eq for Field {}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl Field {
    pub fn new(spec: FieldSpec) -> Result<Field> {
        let kind = match spec {
            FieldSpec::Cyclotomic { n } => {
                if n == 0 {
                    return Err(Error::InvalidField("conductor must be >= 1".into()));
                }
                let phi_poly = poly::cyclotomic(n);
                let phi = phi_poly.len() - 1;
                let len = (n as usize).max(2 * phi);
                let mut red: Vec<Vec<i64>> = Vec::with_capacity(len);
                let mut cur = vec![0i64; phi];
                cur[0] = 1;
                for _ in 0..len {
                    red.push(cur.clone());
                    // multiply by x and reduce
                    let top = cur[phi - 1];
                    for k in (1..phi).rev() {
                        cur[k] = cur[k - 1];
                    }
                    cur[0] = 0;
                    if top != 0 {
                        for k in 0..phi {
                            let c = phi_poly[k].to_i64().expect("small cyclotomic coefficient");
                            cur[k] = cur[k].checked_sub(top * c).expect("reduction overflow");
                        }
                    }
                }
                let modulus = phi_poly.into_iter().map(BigRational::from_integer).collect();
                Kind::Cyc(Cyc { n, phi, red, modulus })
            }
            FieldSpec::Finite { p, m } => {
                if !arith::is_prime(p) || m == 0 {
                    return Err(Error::InvalidField(format!("F_{p}^{m} is not a field")));
                }
                let modulus = poly::fp_least_irreducible(p, m);
                let m = m as usize;
                let tp = poly::fp_powmod(&[0, 1], p as u128, &modulus, p);
                let mut frob = Vec::with_capacity(m);
                let mut cur = vec![1u64];
                for _ in 0..m {
                    let mut v = cur.clone();
                    v.resize(m, 0);
                    frob.push(v);
                    cur = poly::fp_rem(&poly::fp_mul(&cur, &tp, p), &modulus, p);
                }
                Kind::Fin(Fin { p, m, modulus, frob, primitive: OnceLock::new() })
            }
        };
        Ok(Field(Arc::new(Inner { spec, kind })))
    }

    pub fn cyclotomic(n: u64) -> Field {
        Field::new(FieldSpec::Cyclotomic { n }).expect("valid conductor")
    }

    pub fn spec(&self) -> &FieldSpec {
        &self.0.spec
    }

    pub fn dim(&self) -> usize {
        match &self.0.kind {
            Kind::Cyc(c) => c.phi,
            Kind::Fin(f) => f.m,
        }
    }

    /// 0 for number fields.
    pub fn characteristic(&self) -> u64 {
        match &self.0.kind {
            Kind::Cyc(_) => 0,
            Kind::Fin(f) => f.p,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self.0.kind, Kind::Fin(_))
    }

    /// Conductor n for Q(zeta_n).
    pub fn conductor(&self) -> Option<u64> {
        match &self.0.kind {
            Kind::Cyc(c) => Some(c.n),
            Kind::Fin(_) => None,
        }
    }

    /// p^m - 1 for finite fields.
    pub fn unit_group_order(&self) -> Option<u128> {
        match &self.0.kind {
            Kind::Fin(f) => Some((f.p as u128).pow(f.m as u32) - 1),
            Kind::Cyc(_) => None,
        }
    }

    /// Defining modulus as a display string, e.g. "t^3 + t + 1".
    pub fn modulus_string(&self) -> String {
        match &self.0.kind {
            Kind::Cyc(c) => fmt_poly(&c.modulus.iter().map(|x| x.to_string()).collect::<Vec<_>>(), "z"),
            Kind::Fin(f) => fmt_poly(&f.modulus.iter().map(|x| x.to_string()).collect::<Vec<_>>(), "t"),
        }
    }

    pub fn zero(&self) -> FieldElement {
        match &self.0.kind {
            Kind::Cyc(c) => FieldElement::Q(vec![BigRational::zero(); c.phi]),
            Kind::Fin(f) => FieldElement::F(vec![0; f.m]),
        }
    }

    pub fn one(&self) -> FieldElement {
        self.from_int(1)
    }

    pub fn from_int(&self, k: i64) -> FieldElement {
        match &self.0.kind {
            Kind::Cyc(c) => {
                let mut v = vec![BigRational::zero(); c.phi];
                v[0] = q(k);
                FieldElement::Q(v)
            }
            Kind::Fin(f) => {
                let mut v = vec![0; f.m];
                v[0] = k.rem_euclid(f.p as i64) as u64;
                FieldElement::F(v)
            }
        }
    }

    pub fn from_rational(&self, r: &BigRational) -> Result<FieldElement> {
        match &self.0.kind {
            Kind::Cyc(c) => {
                let mut v = vec![BigRational::zero(); c.phi];
                v[0] = r.clone();
                Ok(FieldElement::Q(v))
            }
            Kind::Fin(f) => {
                let p = BigInt::from(f.p);
                let num = (r.numer() % &p + &p) % &p;
                let den = (r.denom() % &p + &p) % &p;
                let den = den.to_u64().unwrap();
                let inv = arith::mod_inv(den, f.p).ok_or(Error::DivisionByZero)?;
                let num = num.to_u64().unwrap();
                let mut v = vec![0; f.m];
                v[0] = (num as u128 * inv as u128 % f.p as u128) as u64;
                Ok(FieldElement::F(v))
            }
        }
    }

    /// The generator z (resp. t).
    pub fn gen(&self) -> FieldElement {
        match &self.0.kind {
            Kind::Cyc(c) => self.from_poly_q(&[q(0), q(1)], c),
            Kind::Fin(f) => {
                let v = poly::fp_rem(&[0, 1], &f.modulus, f.p);
                self.pad_f(v, f)
            }
        }
    }

    fn pad_f(&self, mut v: Vec<u64>, f: &Fin) -> FieldElement {
        v.resize(f.m, 0);
        FieldElement::F(v)
    }

    fn from_poly_q(&self, v: &[BigRational], c: &Cyc) -> FieldElement {
        let mut out = vec![BigRational::zero(); c.phi];
        for (k, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            if k < c.phi {
                out[k] += x;
                continue;
            }
            let row = self.red_row(c, k);
            for (t, &r) in row.iter().enumerate() {
                match r {
                    0 => {}
                    1 => out[t] += x,
                    -1 => out[t] -= x,
                    r => out[t] += x * q(r),
                }
            }
        }
        FieldElement::Q(out)
    }

    fn red_row<'a>(&self, c: &'a Cyc, k: usize) -> std::borrow::Cow<'a, [i64]> {
        if k < c.red.len() {
            return std::borrow::Cow::Borrowed(&c.red[k]);
        }
        // x^n = 1, so only reachable for very long inputs
        std::borrow::Cow::Borrowed(&c.red[k % c.n as usize])
    }

    pub fn is_zero(&self, x: &FieldElement) -> bool {
        match x {
            FieldElement::Q(v) => v.iter().all(|c| c.is_zero()),
            FieldElement::F(v) => v.iter().all(|&c| c == 0),
        }
    }

    pub fn is_one(&self, x: &FieldElement) -> bool {
        *x == self.one()
    }

    pub fn add(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        match (x, y, &self.0.kind) {
            (FieldElement::Q(a), FieldElement::Q(b), _) => {
                FieldElement::Q(a.iter().zip(b).map(|(s, t)| s + t).collect())
            }
            (FieldElement::F(a), FieldElement::F(b), Kind::Fin(f)) => {
                FieldElement::F(a.iter().zip(b).map(|(&s, &t)| (s + t) % f.p).collect())
            }
            _ => panic!("field element from a different field"),
        }
    }

    pub fn neg(&self, x: &FieldElement) -> FieldElement {
        match (x, &self.0.kind) {
            (FieldElement::Q(a), _) => FieldElement::Q(a.iter().map(|s| -s).collect()),
            (FieldElement::F(a), Kind::Fin(f)) => {
                FieldElement::F(a.iter().map(|&s| (f.p - s) % f.p).collect())
            }
            _ => panic!("field element from a different field"),
        }
    }

    pub fn sub(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        self.add(x, &self.neg(y))
    }

    pub fn mul(&self, x: &FieldElement, y: &FieldElement) -> FieldElement {
        match (x, y, &self.0.kind) {
            (FieldElement::Q(a), FieldElement::Q(b), Kind::Cyc(c)) => {
                let mut acc = vec![BigRational::zero(); 2 * c.phi - 1];
                for (i, s) in a.iter().enumerate() {
                    if s.is_zero() {
                        continue;
                    }
                    for (j, t) in b.iter().enumerate() {
                        if !t.is_zero() {
                            acc[i + j] += s * t;
                        }
                    }
                }
                self.from_poly_q(&acc, c)
            }
            (FieldElement::F(a), FieldElement::F(b), Kind::Fin(f)) => {
                let v = poly::fp_rem(&poly::fp_mul(a, b, f.p), &f.modulus, f.p);
                self.pad_f(v, f)
            }
            _ => panic!("field element from a different field"),
        }
    }

    pub fn scale(&self, x: &FieldElement, k: i64) -> FieldElement {
        self.mul(x, &self.from_int(k))
    }

    pub fn inv(&self, x: &FieldElement) -> Result<FieldElement> {
        if self.is_zero(x) {
            return Err(Error::DivisionByZero);
        }
        match (x, &self.0.kind) {
            (FieldElement::Q(a), Kind::Cyc(c)) => {
                let r = poly::qinv_mod(a, &c.modulus).ok_or(Error::DivisionByZero)?;
                Ok(self.from_poly_q(&r, c))
            }
            (FieldElement::F(_), Kind::Fin(f)) => {
                let order = (f.p as u128).pow(f.m as u32);
                Ok(self.pow_u(x, order - 2))
            }
            _ => panic!("field element from a different field"),
        }
    }

    pub fn div(&self, x: &FieldElement, y: &FieldElement) -> Result<FieldElement> {
        Ok(self.mul(x, &self.inv(y)?))
    }

    pub fn pow_u(&self, x: &FieldElement, mut e: u128) -> FieldElement {
        let mut r = self.one();
        let mut b = x.clone();
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(&r, &b);
            }
            e >>= 1;
            if e > 0 {
                b = self.mul(&b, &b);
            }
        }
        r
    }

    pub fn pow(&self, x: &FieldElement, e: i64) -> Result<FieldElement> {
        if e >= 0 {
            Ok(self.pow_u(x, e as u128))
        } else {
            Ok(self.pow_u(&self.inv(x)?, e.unsigned_abs() as u128))
        }
    }

    /// Some(r) when x lies in the prime field Q.
    pub fn rational_value(&self, x: &FieldElement) -> Option<BigRational> {
        match x {
            FieldElement::Q(v) if v[1..].iter().all(|c| c.is_zero()) => Some(v[0].clone()),
            _ => None,
        }
    }

    // ---- automorphisms ----

    pub fn aut_identity(&self) -> u64 {
        match &self.0.kind {
            Kind::Cyc(_) => 1,
            Kind::Fin(_) => 0,
        }
    }

    /// Normalize an automorphism index, rejecting illegal ones.
    pub fn check_aut(&self, a: i64) -> Result<u64> {
        match &self.0.kind {
            Kind::Cyc(c) => {
                if c.n <= 2 {
                    if c.n == 2 && a.rem_euclid(2) == 0 {
                        return Err(Error::InvalidAutomorphism(a as u64));
                    }
                    return Ok(1);
                }
                let r = a.rem_euclid(c.n as i64) as u64;
                if arith::gcd(r, c.n) != 1 {
                    return Err(Error::InvalidAutomorphism(a as u64));
                }
                Ok(r)
            }
            Kind::Fin(f) => Ok(a.rem_euclid(f.m as i64) as u64),
        }
    }

    /// Index of sigma_a o sigma_b.
    pub fn aut_compose(&self, a: u64, b: u64) -> u64 {
        match &self.0.kind {
            Kind::Cyc(c) if c.n <= 2 => 1,
            Kind::Cyc(c) => ((a as u128 * b as u128) % c.n as u128) as u64,
            Kind::Fin(f) => (a + b) % f.m as u64,
        }
    }

    pub fn aut_inverse(&self, a: u64) -> u64 {
        match &self.0.kind {
            Kind::Cyc(c) if c.n <= 2 => 1,
            Kind::Cyc(c) => arith::mod_inv(a, c.n).expect("unit"),
            Kind::Fin(f) => (f.m as u64 - a % f.m as u64) % f.m as u64,
        }
    }

    pub fn aut_order(&self, a: u64) -> u64 {
        match &self.0.kind {
            Kind::Cyc(c) => arith::mult_order(a, c.n),
            Kind::Fin(f) => f.m as u64 / arith::gcd(a, f.m as u64),
        }
    }

    /// sigma_a(x): z -> z^a, or the Frobenius power x -> x^{p^a}.
    pub fn apply_aut(&self, a: u64, x: &FieldElement) -> FieldElement {
        match (x, &self.0.kind) {
            (FieldElement::Q(v), Kind::Cyc(c)) => {
                if a == 1 || c.n <= 2 {
                    return x.clone();
                }
                let n = c.n as usize;
                let mut acc = vec![BigRational::zero(); n];
                for (k, s) in v.iter().enumerate() {
                    if !s.is_zero() {
                        acc[(k * a as usize) % n] += s;
                    }
                }
                self.from_poly_q(&acc, c)
            }
            (FieldElement::F(v), Kind::Fin(f)) => {
                let mut cur = v.clone();
                for _ in 0..(a as usize % f.m) {
                    let mut next = vec![0u64; f.m];
                    for (k, &s) in cur.iter().enumerate() {
                        if s == 0 {
                            continue;
                        }
                        for (t, &r) in f.frob[k].iter().enumerate() {
                            next[t] = ((next[t] as u128 + s as u128 * r as u128) % f.p as u128) as u64;
                        }
                    }
                    cur = next;
                }
                FieldElement::F(cur)
            }
            _ => panic!("field element from a different field"),
        }
    }

    // ---- roots of unity ----

    /// A fixed primitive e-th root of unity, compatible across divisors:
    /// root(e)^(e/f) = root(f).
    pub fn root_of_unity(&self, e: u64) -> Option<FieldElement> {
        match &self.0.kind {
            Kind::Cyc(c) => {
                let z = self.gen();
                if c.n % e == 0 {
                    return Some(self.pow_u(&z, (c.n / e) as u128));
                }
                if c.n % 2 == 1 && (2 * c.n) % e == 0 {
                    let z2n = self.neg(&self.pow_u(&z, ((c.n + 1) / 2) as u128));
                    return Some(self.pow_u(&z2n, (2 * c.n / e) as u128));
                }
                None
            }
            Kind::Fin(f) => {
                let order = (f.p as u128).pow(f.m as u32) - 1;
                if order % e as u128 != 0 {
                    return None;
                }
                let g = f.primitive.get_or_init(|| self.find_primitive(f, order));
                Some(self.pow_u(&FieldElement::F(g.clone()), order / e as u128))
            }
        }
    }

    fn find_primitive(&self, f: &Fin, order: u128) -> Vec<u64> {
        let primes: Vec<u64> = arith::factor(order as u64).into_iter().map(|(p, _)| p).collect();
        let total = order + 1;
        for code in 1..total {
            let mut v = Vec::with_capacity(f.m);
            let mut c = code;
            for _ in 0..f.m {
                v.push((c % f.p as u128) as u64);
                c /= f.p as u128;
            }
            let x = FieldElement::F(v.clone());
            if primes.iter().all(|&p| !self.is_one(&self.pow_u(&x, order / p as u128))) {
                return v;
            }
        }
        unreachable!("finite fields have primitive elements")
    }

    /// Smallest e such that the field contains a primitive e-th root of unity
    /// of every order dividing `exp`, i.e. a minimal splitting suggestion.
    pub fn split_hint(&self, exp: u64) -> String {
        match &self.0.kind {
            Kind::Cyc(c) => format!("use Q(zeta_{}) instead", arith::lcm(c.n, exp)),
            Kind::Fin(f) => {
                let mut m2 = f.m as u32;
                while ((f.p as u128).pow(m2) - 1) % exp as u128 != 0 {
                    m2 += f.m as u32;
                }
                format!("use F_{}^{} instead", f.p, m2)
            }
        }
    }

    // ---- text ----

    pub fn parse(&self, s: &str) -> Result<FieldElement> {
        parse::parse(self, s)
    }

    /// Canonical text form in the input grammar, highest degree first.
    pub fn format(&self, x: &FieldElement) -> String {
        match x {
            FieldElement::Q(v) => fmt_poly(&v.iter().map(|c| c.to_string()).collect::<Vec<_>>(), "z"),
            FieldElement::F(v) => fmt_poly(&v.iter().map(|c| c.to_string()).collect::<Vec<_>>(), "t"),
        }
    }
}

fn fmt_poly(coeffs: &[String], var: &str) -> String {
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if c == "0" {
            continue;
        }
        let (neg, mag) = match c.strip_prefix('-') {
            Some(m) => (true, m),
            None => (false, c.as_str()),
        };
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mon = match k {
            0 => String::new(),
            1 => var.to_string(),
            k => format!("{var}^{k}"),
        };
        if mon.is_empty() {
            out.push_str(mag);
        } else if mag == "1" {
            out.push_str(&mon);
        } else {
            let _ = write!(out, "{mag}*{mon}");
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_identities() {
        let f = Field::cyclotomic(4);
        let z = f.gen();
        assert_eq!(f.mul(&z, &z), f.from_int(-1));
        let f8 = Field::cyclotomic(8);
        assert_eq!(f8.pow_u(&f8.gen(), 4), f8.from_int(-1));
        assert_eq!(f8.apply_aut(3, &f8.gen()), f8.pow_u(&f8.gen(), 3));
        let i = Field::cyclotomic(4);
        assert_eq!(i.apply_aut(3, &i.gen()), i.neg(&i.gen()));
    }

    #[test]
    fn f8_product() {
        let f = Field::new(FieldSpec::Finite { p: 2, m: 3 }).unwrap();
        assert_eq!(f.modulus_string(), "t^3 + t + 1");
        let t = f.gen();
        let t2 = f.mul(&t, &t);
        assert_eq!(f.format(&f.mul(&t, &t2)), "t + 1");
        assert_eq!(f.apply_aut(1, &t), t2);
    }

    #[test]
    fn inverses_and_format() {
        let f = Field::cyclotomic(5);
        let x = f.parse("1/2*z^3 - z + 3").unwrap();
        assert_eq!(f.format(&x), "1/2*z^3 - z + 3");
        let y = f.inv(&x).unwrap();
        assert!(f.is_one(&f.mul(&x, &y)));
        assert_eq!(f.inv(&f.zero()), Err(Error::DivisionByZero));
        let g = Field::new(FieldSpec::Finite { p: 5, m: 2 }).unwrap();
        let t = g.gen();
        assert!(g.is_one(&g.mul(&t, &g.inv(&t).unwrap())));
    }

    #[test]
    fn roots_of_unity() {
        let f = Field::cyclotomic(5);
        let r10 = f.root_of_unity(10).unwrap();
        assert_eq!(f.pow_u(&r10, 5), f.from_int(-1));
        assert_eq!(f.pow_u(&r10, 2), f.root_of_unity(5).unwrap());
        assert!(f.root_of_unity(4).is_none());
        let g = Field::new(FieldSpec::Finite { p: 5, m: 6 }).unwrap();
        let r = g.root_of_unity(24).unwrap();
        assert!(g.is_one(&g.pow_u(&r, 24)));
        assert!(!g.is_one(&g.pow_u(&r, 12)));
        // zeta_24 lies in F_25, fixed by x -> x^25
        assert_eq!(g.apply_aut(2, &r), r);
    }

    #[test]
    fn bad_auts() {
        let f = Field::cyclotomic(8);
        assert!(f.check_aut(2).is_err());
        assert_eq!(f.check_aut(-1).unwrap(), 7);
    }
}
