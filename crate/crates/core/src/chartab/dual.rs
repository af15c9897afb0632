//! Characters of abelian H as the dual group Hom(H, mu_e).

use super::{sum_of_roots, Character, ClassData};
use crate::exactfield::Field;
use crate::matgroup::KernelSubgroup;
use crate::smith::{present, smith_normal_form};

/// Write H = Z^r / L; with U L V = D the characters are k = V y where
/// y_i = (e / d_i) c_i, c_i ranging over Z/d_i, and chi_k(h) = zeta^{k . v(h)}.
pub fn dual_characters(h: &KernelSubgroup, cfield: &Field, cd: &ClassData) -> Vec<Character> {
    let e = cd.exponent as i64;
    let p = present(h.order(), |a, b| h.mul(a, b));
    let r = p.gens.len();
    if r == 0 {
        return vec![Character { values: vec![cfield.one()] }];
    }
    let (diag, v) = smith_normal_form(&p.relations, r);
    let mut d: Vec<i64> = diag;
    d.resize(r, 0);
    assert!(d.iter().all(|&x| x > 0 && e % x == 0), "finite abelian group");
    let mut out = Vec::new();
    let mut c = vec![0i64; r];
    loop {
        let y: Vec<i64> = (0..r).map(|i| (e / d[i]) * c[i]).collect();
        let k: Vec<i64> = (0..r).map(|i| (0..r).map(|j| v[i][j] * y[j]).sum::<i64>().rem_euclid(e)).collect();
        let values = cd
            .reps
            .iter()
            .map(|&rep| {
                let x: i64 = k.iter().zip(&p.coords[rep]).map(|(a, b)| a * b).sum::<i64>().rem_euclid(e);
                sum_of_roots(cfield, e as u64, [x as u64])
            })
            .collect();
        out.push(Character { values });
        let mut i = 0;
        while i < r {
            c[i] += 1;
            if c[i] < d[i] {
                break;
            }
            c[i] = 0;
            i += 1;
        }
        if i == r {
            break;
        }
    }
    out
}
