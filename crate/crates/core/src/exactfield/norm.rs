//! Galois subgroups, relative norms and the norm-equation oracle.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::{Field, FieldElement};
use crate::error::Result;

/// A subgroup C of Gal(l/Q) resp. Gal(l/F_p); k = l^C.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaloisSubgroup {
    generators: Vec<u64>,
    elements: Vec<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum NormAnswer {
    Yes,
    No,
    Unknown,
}

impl GaloisSubgroup {
    pub fn new(field: &Field, generators: &[i64]) -> Result<GaloisSubgroup> {
        let gens: Vec<u64> = generators.iter().map(|&a| field.check_aut(a)).collect::<Result<_>>()?;
        let mut elements = vec![field.aut_identity()];
        let mut i = 0;
        while i < elements.len() {
            for &g in &gens {
                let c = field.aut_compose(elements[i], g);
                if !elements.contains(&c) {
                    elements.push(c);
                }
            }
            i += 1;
        }
        elements.sort_unstable();
        Ok(GaloisSubgroup { generators: gens, elements })
    }

    pub fn trivial(field: &Field) -> GaloisSubgroup {
        GaloisSubgroup { generators: vec![], elements: vec![field.aut_identity()] }
    }

    pub fn generators(&self) -> &[u64] {
        &self.generators
    }

    /// Sorted element list.
    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    /// [l:k]
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, a: u64) -> bool {
        self.elements.binary_search(&a).is_ok()
    }

    /// Smallest element generating C, if C is cyclic.
    pub fn cyclic_generator(&self, field: &Field) -> Option<u64> {
        let n = self.order() as u64;
        self.elements.iter().copied().find(|&a| field.aut_order(a) == n)
    }
}

impl Field {
    pub fn is_fixed(&self, x: &FieldElement, c: &GaloisSubgroup) -> bool {
        c.generators.iter().all(|&a| self.apply_aut(a, x) == *x)
    }

    pub fn norm(&self, x: &FieldElement, c: &GaloisSubgroup) -> FieldElement {
        c.elements
            .iter()
            .fold(self.one(), |acc, &a| self.mul(&acc, &self.apply_aut(a, x)))
    }

    /// Decide whether target lies in N_{l/k}(l^x).
    ///
    /// Deciders run in order: finite fields (surjective norm), a sign test
    /// when C contains complex conjugation, and a bounded search over
    /// elements with integer coordinates of absolute value at most `bound`.
    /// Never answers Yes or No wrongly; Unknown otherwise.
    pub fn is_norm(&self, target: &FieldElement, c: &GaloisSubgroup, bound: u32) -> NormAnswer {
        if self.is_zero(target) {
            return NormAnswer::No;
        }
        if self.is_finite() || c.order() == 1 {
            return NormAnswer::Yes;
        }
        let n = self.conductor().unwrap();
        if n > 2 && c.contains(n - 1) {
            // every norm is a product of terms x * conj(x), totally positive
            if let Some(r) = self.rational_value(target) {
                if r.is_negative() {
                    return NormAnswer::No;
                }
            }
        }
        if self.norm_search(target, c, bound) {
            NormAnswer::Yes
        } else {
            NormAnswer::Unknown
        }
    }

    /// Search x with integer coordinates such that N(x) = target * d^[l:k]
    /// for a positive rational d; then N(x/d) = target.
    fn norm_search(&self, target: &FieldElement, c: &GaloisSubgroup, bound: u32) -> bool {
        const BUDGET: u64 = 1 << 18;
        let FieldElement::Q(tv) = target else { return false };
        let dim = tv.len();
        let pivot = tv.iter().position(|x| !x.is_zero()).unwrap();
        let r = c.order() as u32;
        let mut spent = 0u64;
        for radius in 1..=bound as i64 {
            let mut coords = vec![-radius; dim];
            loop {
                if coords.iter().any(|&v| v.abs() == radius) {
                    spent += 1;
                    if spent > BUDGET {
                        return false;
                    }
                    let x = FieldElement::Q(
                        coords.iter().map(|&v| BigRational::from_integer(BigInt::from(v))).collect(),
                    );
                    let FieldElement::Q(nv) = self.norm(&x, c) else { unreachable!() };
                    let ratio = &nv[pivot] / &tv[pivot];
                    if ratio.is_positive()
                        && nv.iter().zip(tv).all(|(a, b)| *a == b * &ratio)
                        && is_rational_power(&ratio, r)
                    {
                        return true;
                    }
                }
                // odometer
                let mut k = 0;
                while k < dim {
                    if coords[k] < radius {
                        coords[k] += 1;
                        break;
                    }
                    coords[k] = -radius;
                    k += 1;
                }
                if k == dim {
                    break;
                }
            }
        }
        false
    }
}

fn is_rational_power(x: &BigRational, r: u32) -> bool {
    let root = |v: &BigInt| {
        let s = v.nth_root(r);
        s.pow(r) == *v
    };
    root(x.numer()) && root(x.denom())
}
