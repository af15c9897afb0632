//! Burnside-Dixon: simultaneous eigenvectors of the class matrices over F_q,
//! lifted to Q(zeta_e) through eigenvalue multiplicities.

use super::{sum_of_roots, Character, ClassData};
use crate::error::{Error, Result};
use crate::exactfield::arith::{is_prime, mod_inv, mod_pow, primitive_root};
use crate::exactfield::Field;
use crate::matgroup::KernelSubgroup;

fn mulm(a: u64, b: u64, q: u64) -> u64 {
    (a as u128 * b as u128 % q as u128) as u64
}

/// Kernel basis of a k x m matrix over F_q (given by columns).
fn kernel_mod(cols: &[Vec<u64>], q: u64) -> Vec<Vec<u64>> {
    let m = cols.len();
    if m == 0 {
        return vec![];
    }
    let k = cols[0].len();
    // rows of the k x m matrix
    let mut a: Vec<Vec<u64>> = (0..k).map(|i| cols.iter().map(|c| c[i]).collect()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..m {
        let Some(p) = (r..k).find(|&i| a[i][c] != 0) else { continue };
        a.swap(r, p);
        let inv = mod_inv(a[r][c], q).unwrap();
        for x in a[r].iter_mut() {
            *x = mulm(*x, inv, q);
        }
        for i in 0..k {
            if i != r && a[i][c] != 0 {
                let f = a[i][c];
                let row = a[r].clone();
                for (x, y) in a[i].iter_mut().zip(&row) {
                    *x = (*x + q - mulm(f, *y, q)) % q;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == k {
            break;
        }
    }
    (0..m)
        .filter(|c| !pivots.contains(c))
        .map(|fc| {
            let mut v = vec![0u64; m];
            v[fc] = 1;
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = (q - a[row][fc]) % q;
            }
            v
        })
        .collect()
}

fn candidate_primes(e: u64, order: usize) -> impl Iterator<Item = u64> {
    let start = 2 * order as u64 / e + 1;
    (start..).map(move |t| t * e + 1).filter(move |&q| is_prime(q) && q > 2 * order as u64)
}

pub fn dixon_characters(h: &KernelSubgroup, cfield: &Field, cd: &ClassData) -> Result<Vec<Character>> {
    for q in candidate_primes(cd.exponent, h.order()).take(8) {
        if let Some(chars) = try_prime(h, cfield, cd, q) {
            return Ok(chars);
        }
    }
    Err(Error::Internal("Dixon splitting failed for every candidate prime".into()))
}

fn try_prime(h: &KernelSubgroup, cfield: &Field, cd: &ClassData, q: u64) -> Option<Vec<Character>> {
    let k = cd.reps.len();
    let n = h.order();
    // m[j][r][s] = #{x in C_j : x^{-1} z_s in C_r}
    let mut m = vec![vec![vec![0u64; k]; k]; k];
    for s in 0..k {
        let z = cd.reps[s];
        for x in 0..n {
            let y = h.mul(h.inv(x), z);
            m[h.class_of[x]][h.class_of[y]][s] += 1;
        }
    }
    let mut spaces: Vec<Vec<Vec<u64>>> = vec![(0..k).map(|i| (0..k).map(|j| (i == j) as u64).collect()).collect()];
    for mj in m.iter().skip(1) {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mut next = Vec::new();
        for basis in spaces {
            if basis.len() == 1 {
                next.push(basis);
                continue;
            }
            // images M_j b for each basis vector
            let images: Vec<Vec<u64>> = basis
                .iter()
                .map(|b| (0..k).map(|r| (0..k).fold(0, |acc, s| (acc + mulm(mj[r][s] % q, b[s], q)) % q)).collect())
                .collect();
            let mut found = 0;
            for lambda in 0..q {
                let cols: Vec<Vec<u64>> = images
                    .iter()
                    .zip(&basis)
                    .map(|(im, b)| im.iter().zip(b).map(|(&x, &y)| (x + q - mulm(lambda, y, q)) % q).collect())
                    .collect();
                let ker = kernel_mod(&cols, q);
                if ker.is_empty() {
                    continue;
                }
                found += ker.len();
                next.push(
                    ker.iter()
                        .map(|c| {
                            (0..k).map(|i| c.iter().zip(&basis).fold(0, |acc, (&ci, b)| (acc + mulm(ci, b[i], q)) % q)).collect()
                        })
                        .collect(),
                );
                if found == basis.len() {
                    break;
                }
            }
            if found != basis.len() {
                return None;
            }
        }
        spaces = next;
    }
    if spaces.iter().any(|s| s.len() != 1) {
        return None;
    }
    let e = cd.exponent;
    let zhat = mod_pow(primitive_root(q), (q - 1) / e, q);
    let zinv = mod_inv(zhat, q).unwrap();
    let einv = mod_inv(e % q, q).unwrap();
    let mut out = Vec::with_capacity(k);
    for space in spaces {
        let v = &space[0];
        let inv0 = mod_inv(v[0], q)?;
        let omega: Vec<u64> = v.iter().map(|&x| mulm(x, inv0, q)).collect();
        // chi(1)^2 = |H| / sum_s omega_s omega_{s'} / |C_s|
        let mut s = 0;
        for c in 0..k {
            let t = mulm(omega[c], omega[cd.inverse[c]], q);
            s = (s + mulm(t, mod_inv(cd.sizes[c] as u64 % q, q)?, q)) % q;
        }
        let target = mulm(n as u64 % q, mod_inv(s, q)?, q);
        let deg = (1..=((n as f64).sqrt() as u64 + 1)).find(|&d| mulm(d, d, q) == target)?;
        let vals: Vec<u64> = (0..k)
            .map(|c| mulm(mulm(omega[c], deg, q), mod_inv(cd.sizes[c] as u64 % q, q).unwrap(), q))
            .collect();
        let mut values = Vec::with_capacity(k);
        for c in 0..k {
            let mut exps = Vec::new();
            for j in 0..e {
                // m_j = (1/e) sum_t chi(g^t) zhat^{-jt}
                let mut acc = 0;
                for t in 0..e {
                    let w = mod_pow(zinv, (j * t) % e, q);
                    acc = (acc + mulm(vals[cd.power_maps[c][t as usize]], w, q)) % q;
                }
                let mult = mulm(acc, einv, q);
                if mult > deg {
                    return None;
                }
                exps.extend(std::iter::repeat_n(j, mult as usize));
            }
            if exps.len() as u64 != deg {
                return None;
            }
            values.push(sum_of_roots(cfield, e, exps));
        }
        out.push(Character { values });
    }
    Some(out)
}
