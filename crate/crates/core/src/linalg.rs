//! Dense matrices over a `Field`, row-major.

use crate::exactfield::{Field, FieldElement};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<FieldElement>,
}

impl Matrix {
    pub fn from_rows(rows: Vec<Vec<FieldElement>>) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged matrix");
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn identity(f: &Field, d: usize) -> Matrix {
        let mut data = vec![f.zero(); d * d];
        for i in 0..d {
            data[i * d + i] = f.one();
        }
        Matrix { rows: d, cols: d, data }
    }

    pub fn get(&self, i: usize, j: usize) -> &FieldElement {
        &self.data[i * self.cols + j]
    }

    pub fn mul(&self, f: &Field, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut data = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = f.zero();
                for k in 0..self.cols {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if !f.is_zero(a) && !f.is_zero(b) {
                        acc = f.add(&acc, &f.mul(a, b));
                    }
                }
                data.push(acc);
            }
        }
        Matrix { rows: self.rows, cols: other.cols, data }
    }

    pub fn sub(&self, f: &Field, other: &Matrix) -> Matrix {
        let data = self.data.iter().zip(&other.data).map(|(a, b)| f.sub(a, b)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, f: &Field, c: &FieldElement) -> Matrix {
        let data = self.data.iter().map(|a| f.mul(a, c)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    /// Entrywise automorphism.
    pub fn apply_aut(&self, f: &Field, a: u64) -> Matrix {
        if a == f.aut_identity() {
            return self.clone();
        }
        let data = self.data.iter().map(|x| f.apply_aut(a, x)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn trace(&self, f: &Field) -> FieldElement {
        (0..self.rows).fold(f.zero(), |acc, i| f.add(&acc, self.get(i, i)))
    }

    pub fn is_zero(&self, f: &Field) -> bool {
        self.data.iter().all(|x| f.is_zero(x))
    }

    /// Determinant by cofactor expansion; division-free.
    pub fn det(&self, f: &Field) -> FieldElement {
        assert_eq!(self.rows, self.cols);
        let idx: Vec<usize> = (0..self.rows).collect();
        self.minor_det(f, &idx, &idx)
    }

    /// Determinant of the submatrix on the given rows and columns.
    pub fn minor_det(&self, f: &Field, rows: &[usize], cols: &[usize]) -> FieldElement {
        match rows.len() {
            0 => f.one(),
            1 => self.get(rows[0], cols[0]).clone(),
            2 => f.sub(
                &f.mul(self.get(rows[0], cols[0]), self.get(rows[1], cols[1])),
                &f.mul(self.get(rows[0], cols[1]), self.get(rows[1], cols[0])),
            ),
            _ => {
                let mut acc = f.zero();
                let sub_rows = &rows[1..];
                for (k, &c) in cols.iter().enumerate() {
                    let a = self.get(rows[0], c);
                    if f.is_zero(a) {
                        continue;
                    }
                    let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                    let term = f.mul(a, &self.minor_det(f, sub_rows, &rest));
                    acc = if k % 2 == 0 { f.add(&acc, &term) } else { f.sub(&acc, &term) };
                }
                acc
            }
        }
    }

    /// p-th compound matrix: all p x p minors, subsets in lexicographic order.
    pub fn compound(&self, f: &Field, p: usize) -> Matrix {
        let rs = subsets(self.rows, p);
        let cs = subsets(self.cols, p);
        let mut data = Vec::with_capacity(rs.len() * cs.len());
        for r in &rs {
            for c in &cs {
                data.push(self.minor_det(f, r, c));
            }
        }
        Matrix { rows: rs.len(), cols: cs.len(), data }
    }

    /// Reduced row echelon form; returns pivot columns.
    pub fn rref(&self, f: &Field) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !f.is_zero(m.get(i, c))) else { continue };
            for j in 0..m.cols {
                m.data.swap(p * m.cols + j, r * m.cols + j);
            }
            let inv = f.inv(m.get(r, c)).expect("nonzero pivot");
            for j in 0..m.cols {
                let idx = r * m.cols + j;
                m.data[idx] = f.mul(&m.data[idx], &inv);
            }
            for i in 0..m.rows {
                if i == r || f.is_zero(m.get(i, c)) {
                    continue;
                }
                let factor = m.get(i, c).clone();
                for j in 0..m.cols {
                    let v = f.mul(&factor, m.get(r, j));
                    let idx = i * m.cols + j;
                    m.data[idx] = f.sub(&m.data[idx], &v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self, f: &Field) -> usize {
        self.rref(f).1.len()
    }

    /// Basis of the right kernel {x : M x = 0}.
    pub fn kernel(&self, f: &Field) -> Vec<Vec<FieldElement>> {
        let (m, pivots) = self.rref(f);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![f.zero(); self.cols];
                v[fc] = f.one();
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(m.get(r, fc));
                }
                v
            })
            .collect()
    }

    pub fn inverse(&self, f: &Field) -> Option<Matrix> {
        let n = self.rows;
        let mut aug = Vec::with_capacity(n * 2 * n);
        let id = Matrix::identity(f, n);
        for i in 0..n {
            aug.extend_from_slice(&self.data[i * n..(i + 1) * n]);
            aug.extend_from_slice(&id.data[i * n..(i + 1) * n]);
        }
        let (m, pivots) = Matrix { rows: n, cols: 2 * n, data: aug }.rref(f);
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            data.extend_from_slice(&m.data[i * 2 * n + n..(i + 1) * 2 * n]);
        }
        Some(Matrix { rows: n, cols: n, data })
    }
}

/// All p-subsets of 0..n in lexicographic order.
pub fn subsets(n: usize, p: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(p);
    fn rec(start: usize, n: usize, p: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == p {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, p, cur, out);
            cur.pop();
        }
    }
    rec(0, n, p, &mut cur, &mut out);
    out
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}
