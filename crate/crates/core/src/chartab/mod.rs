//! Split character theory of the kernel H.
//!
//! Character values live in the character field Q(zeta_e), e = exp(H), so that
//! inner products are computed in characteristic zero even when l is finite.
//! The fixed embedding zeta_e -> `Field::root_of_unity(e)` maps them into l.

mod dixon;
mod dual;

use std::cmp::Reverse;

use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactfield::{Field, FieldElement};
use crate::linalg::{binomial, subsets};
use crate::matgroup::{FiniteGroup, KernelSubgroup};

pub use dixon::dixon_characters;
pub use dual::dual_characters;

/// Class function on H with values in Q(zeta_e), one per conjugacy class.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Character {
    pub values: Vec<FieldElement>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Dual,
    Dixon,
}

#[derive(Clone, Debug)]
pub struct CharacterTable {
    pub field: Field,
    pub cfield: Field,
    pub exponent: u64,
    pub order: usize,
    pub class_reps: Vec<usize>,
    pub class_sizes: Vec<usize>,
    pub inverse_class: Vec<usize>,
    /// power_maps[c][k] = class of rep(c)^k for 0 <= k < e.
    pub power_maps: Vec<Vec<usize>>,
    pub irreducibles: Vec<Character>,
    pub method: Method,
    // root^j in l for j < e
    roots: Vec<FieldElement>,
}

/// Class data shared by both construction paths.
pub struct ClassData {
    pub reps: Vec<usize>,
    pub sizes: Vec<usize>,
    pub inverse: Vec<usize>,
    pub power_maps: Vec<Vec<usize>>,
    pub exponent: u64,
}

pub fn class_data(h: &KernelSubgroup) -> ClassData {
    let e = h.exponent();
    let reps: Vec<usize> = h.classes.iter().map(|c| c[0]).collect();
    let sizes = h.classes.iter().map(|c| c.len()).collect();
    let inverse = reps.iter().map(|&r| h.class_of[h.inv(r)]).collect();
    let power_maps = reps
        .iter()
        .map(|&r| {
            let mut out = Vec::with_capacity(e as usize);
            let mut cur = 0;
            for _ in 0..e {
                out.push(h.class_of[cur]);
                cur = h.mul(cur, r);
            }
            out
        })
        .collect();
    ClassData { reps, sizes, inverse, power_maps, exponent: e }
}

/// Element of Q(zeta_e) with the given multiset of exponents: sum zeta^j.
pub(crate) fn sum_of_roots(cf: &Field, e: u64, exps: impl IntoIterator<Item = u64>) -> FieldElement {
    let z = cf.root_of_unity(e).expect("character field contains zeta_e");
    exps.into_iter().fold(cf.zero(), |acc, j| cf.add(&acc, &cf.pow_u(&z, (j % e) as u128)))
}

pub fn character_table(h: &KernelSubgroup, field: &Field) -> Result<CharacterTable> {
    let cd = class_data(h);
    let e = cd.exponent;
    let root = field.root_of_unity(e).ok_or_else(|| Error::SplitFieldTooSmall {
        exponent: e,
        hint: field.split_hint(e),
    })?;
    let cfield = Field::cyclotomic(e);
    let (mut chars, method) = if h.is_abelian() {
        (dual_characters(h, &cfield, &cd), Method::Dual)
    } else {
        (dixon_characters(h, &cfield, &cd)?, Method::Dixon)
    };
    let mut roots = Vec::with_capacity(e as usize);
    let mut cur = field.one();
    for _ in 0..e {
        roots.push(cur.clone());
        cur = field.mul(&cur, &root);
    }
    let mut table = CharacterTable {
        field: field.clone(),
        cfield,
        exponent: e,
        order: h.order(),
        class_reps: cd.reps,
        class_sizes: cd.sizes,
        inverse_class: cd.inverse,
        power_maps: cd.power_maps,
        irreducibles: vec![],
        method,
        roots,
    };
    table.sort_canonical(&mut chars);
    table.irreducibles = chars;
    table.validate()?;
    Ok(table)
}

/// For abelian H: do the Dixon and dual-group constructions agree?
pub fn methods_agree(h: &KernelSubgroup, field: &Field) -> Result<bool> {
    let t = character_table(h, field)?;
    let cd = class_data(h);
    let mut a = dual_characters(h, &t.cfield, &cd);
    let mut b = dixon_characters(h, &t.cfield, &cd)?;
    t.sort_canonical(&mut a);
    t.sort_canonical(&mut b);
    Ok(a == b && a == t.irreducibles)
}

impl CharacterTable {
    pub fn num_classes(&self) -> usize {
        self.class_reps.len()
    }

    /// Trivial first, then by degree, then by embedded values in descending
    /// coordinate order.
    pub(crate) fn sort_canonical(&self, chars: &mut [Character]) {
        let one = self.cfield.one();
        chars.sort_by_cached_key(|c| {
            let trivial = c.values.iter().all(|v| *v == one);
            let emb: Vec<FieldElement> = c.values.iter().map(|v| self.embed(v)).collect();
            (!trivial, self.degree(c), Reverse(emb))
        });
    }

    fn validate(&self) -> Result<()> {
        let n = self.irreducibles.len();
        if n != self.num_classes() {
            return Err(Error::Internal(format!("{n} irreducibles for {} classes", self.num_classes())));
        }
        let sq: u64 = self.irreducibles.iter().map(|c| self.degree(c).pow(2)).sum();
        if sq != self.order as u64 {
            return Err(Error::Internal(format!("sum of squared degrees {sq} != |H| = {}", self.order)));
        }
        Ok(())
    }

    /// Image of a character value in l.
    pub fn embed(&self, x: &FieldElement) -> FieldElement {
        let FieldElement::Q(cs) = x else { panic!("character values are cyclotomic") };
        let f = &self.field;
        let mut acc = f.zero();
        for (k, c) in cs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let c = f.from_rational(c).expect("integral character coordinates");
            acc = f.add(&acc, &f.mul(&c, &self.roots[k]));
        }
        acc
    }

    pub fn degree(&self, c: &Character) -> u64 {
        self.cfield
            .rational_value(&c.values[0])
            .and_then(|r| r.to_integer().to_u64())
            .expect("degree is a positive integer")
    }

    pub fn trivial(&self) -> Character {
        Character { values: vec![self.cfield.one(); self.num_classes()] }
    }

    pub fn zero_char(&self) -> Character {
        Character { values: vec![self.cfield.zero(); self.num_classes()] }
    }

    pub fn tensor(&self, a: &Character, b: &Character) -> Character {
        let cf = &self.cfield;
        Character { values: a.values.iter().zip(&b.values).map(|(x, y)| cf.mul(x, y)).collect() }
    }

    pub fn add(&self, a: &Character, b: &Character) -> Character {
        let cf = &self.cfield;
        Character { values: a.values.iter().zip(&b.values).map(|(x, y)| cf.add(x, y)).collect() }
    }

    pub fn scale(&self, a: &Character, k: u64) -> Character {
        let cf = &self.cfield;
        Character { values: a.values.iter().map(|x| cf.scale(x, k as i64)).collect() }
    }

    pub fn dual(&self, a: &Character) -> Character {
        Character { values: self.inverse_class.iter().map(|&c| a.values[c].clone()).collect() }
    }

    /// (1/|H|) sum_h chi(h) psi(h^{-1}), required to be a nonnegative integer.
    pub fn inner_product(&self, a: &Character, b: &Character) -> Result<u64> {
        let cf = &self.cfield;
        let mut acc = cf.zero();
        for (c, &size) in self.class_sizes.iter().enumerate() {
            let t = cf.mul(&a.values[c], &b.values[self.inverse_class[c]]);
            acc = cf.add(&acc, &cf.scale(&t, size as i64));
        }
        let r = cf.rational_value(&acc).map(|r| r / num_rational::BigRational::from_integer(self.order.into()));
        match r {
            Some(r) if r.is_integer() && !r.is_negative() => Ok(r.to_integer().to_u64().unwrap()),
            _ => Err(Error::NonIntegralMultiplicity(format!("({})/{}", cf.format(&acc), self.order))),
        }
    }

    /// Multiplicity of every irreducible; reconstruction asserted.
    pub fn decompose(&self, chi: &Character) -> Result<Vec<u64>> {
        let m: Vec<u64> = self.irreducibles.iter().map(|w| self.inner_product(chi, w)).collect::<Result<_>>()?;
        let back = m
            .iter()
            .zip(&self.irreducibles)
            .fold(self.zero_char(), |acc, (&k, w)| self.add(&acc, &self.scale(w, k)));
        if back != *chi {
            return Err(Error::NonIntegralMultiplicity("character is not a sum of irreducibles".into()));
        }
        Ok(m)
    }

    /// Index of an irreducible character in the canonical order.
    pub fn index_of(&self, chi: &Character) -> Option<usize> {
        self.irreducibles.iter().position(|c| c == chi)
    }

    pub fn regular(&self) -> Character {
        let mut values = vec![self.cfield.zero(); self.num_classes()];
        values[0] = self.cfield.from_int(self.order as i64);
        Character { values }
    }

    /// sigma_a on l restricted to Q(zeta_e), as an exponent b with zeta -> zeta^b.
    pub fn aut_exponent(&self, a: u64) -> u64 {
        let img = self.field.apply_aut(a, &self.roots[1 % self.roots.len()]);
        self.roots.iter().position(|r| *r == img).expect("automorphisms permute roots of unity") as u64
    }

    /// Characters of the exterior powers of the standard module U, p = 0..d,
    /// from the compound matrices of each class representative.
    ///
    /// The eigenvalue exponents of each representative are read off its
    /// characteristic polynomial (whose coefficients are the compound
    /// traces); each lifted value is checked against the trace in l.
    pub fn wedge_powers(&self, g: &FiniteGroup, h: &KernelSubgroup) -> Result<Vec<Character>> {
        let d = g.dim();
        let f = &self.field;
        let e = self.exponent;
        let mut out = vec![self.zero_char(); d + 1];
        for (c, &rep) in self.class_reps.iter().enumerate() {
            let a = &g.element(h.members[rep]).matrix;
            let traces: Vec<FieldElement> = (0..=d).map(|p| a.compound(f, p).trace(f)).collect();
            // det(xI - A) = sum_p (-1)^p tr(wedge^p A) x^{d-p}, stored low degree first
            let mut poly: Vec<FieldElement> = (0..=d)
                .map(|k| {
                    let t = &traces[d - k];
                    if (d - k) % 2 == 0 { t.clone() } else { f.neg(t) }
                })
                .collect();
            let ord = h.element_order(rep) as u64;
            let step = e / ord;
            let mut exps = Vec::with_capacity(d);
            let mut j = 0;
            while exps.len() < d && j < e {
                let r = &self.roots[j as usize];
                // synthetic division by (x - r)
                let mut q = vec![f.zero(); poly.len() - 1];
                let mut carry = f.zero();
                for k in (1..poly.len()).rev() {
                    carry = f.add(&poly[k], &f.mul(&carry, r));
                    q[k - 1] = carry.clone();
                }
                let rem = f.add(&poly[0], &f.mul(&carry, r));
                if f.is_zero(&rem) {
                    exps.push(j);
                    poly = q;
                } else {
                    j += step;
                }
            }
            if exps.len() != d {
                return Err(Error::Internal("standard module is not diagonalizable over l".into()));
            }
            for p in 0..=d {
                let lifted = sum_of_roots(
                    &self.cfield,
                    e,
                    subsets(d, p).into_iter().map(|s| s.iter().map(|&i| exps[i]).sum::<u64>()),
                );
                if self.embed(&lifted) != traces[p] {
                    return Err(Error::Internal("lifted trace disagrees with compound trace".into()));
                }
                out[p].values[c] = lifted;
            }
        }
        debug_assert!((0..=d).all(|p| self.degree(&out[p]) == binomial(d, p) as u64));
        Ok(out)
    }

    /// Class permutation c -> class of g^{-1} h_c g for a G-element g.
    pub fn conjugation_perm(&self, g: &FiniteGroup, h: &KernelSubgroup, gi: usize) -> Vec<usize> {
        let ginv = g.inv(gi);
        self.class_reps
            .iter()
            .map(|&r| {
                let x = g.mul(g.mul(ginv, h.members[r]), gi);
                h.class_of[h.pos[&x]]
            })
            .collect()
    }

    /// (g . chi)(h) = sigma_{aut(g)}(chi(g^{-1} h g)).
    pub fn galois_twist(&self, chi: &Character, g: &FiniteGroup, h: &KernelSubgroup, gi: usize) -> Character {
        let perm = self.conjugation_perm(g, h, gi);
        let b = self.aut_exponent(g.element(gi).aut);
        let cf = &self.cfield;
        Character { values: perm.iter().map(|&c| cf.apply_aut(b, &chi.values[c])).collect() }
    }

    /// Value strings in l, for reports.
    pub fn format_values(&self, chi: &Character) -> Vec<String> {
        chi.values.iter().map(|v| self.field.format(&self.embed(v))).collect()
    }
}

#[cfg(test)]
mod tests;
