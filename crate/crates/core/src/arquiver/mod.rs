//! Valued McKay quivers of lH and l*G, the Nakayama permutation and the
//! (d-1)-almost split sequences.

mod dot;
mod recognize;

pub use dot::emit_dot;
pub use recognize::{recognize_type, DynkinFamily, DynkinType};

use serde::Serialize;

use crate::chartab::{Character, CharacterTable};
use crate::error::{Error, Result};
use crate::skewsolve::{gmodule_multiplicities, OrbitDatum};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Vertex {
    pub label: String,
    pub rank: u64,
    pub is_r: bool,
    pub is_omega: bool,
    pub is_projective: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Arrow {
    pub src: usize,
    pub dst: usize,
    pub d: u64,
    pub d_prime: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValuedQuiver {
    pub vertices: Vec<Vertex>,
    /// Sorted by (src, dst); only pairs with (d, d') != (0, 0).
    pub arrows: Vec<Arrow>,
    pub nu: Vec<usize>,
    /// Non-projective vertices, each carrying a dotted arrow v -> nu(v).
    pub dotted: Vec<usize>,
}

impl ValuedQuiver {
    pub fn valuation(&self, src: usize, dst: usize) -> (u64, u64) {
        self.arrows
            .binary_search_by_key(&(src, dst), |a| (a.src, a.dst))
            .map(|k| (self.arrows[k].d, self.arrows[k].d_prime))
            .unwrap_or((0, 0))
    }

    pub fn r_vertex(&self) -> usize {
        self.vertices.iter().position(|v| v.is_r).expect("R vertex")
    }

    pub fn omega(&self) -> usize {
        self.vertices.iter().position(|v| v.is_omega).expect("omega vertex")
    }

    pub fn nu_is_identity(&self) -> bool {
        self.nu.iter().enumerate().all(|(i, &j)| i == j)
    }

    fn from_matrices(vertices: Vec<Vertex>, d: &[Vec<u64>], dp: &[Vec<u64>], nu: Vec<usize>) -> ValuedQuiver {
        let n = vertices.len();
        let mut arrows = Vec::new();
        for src in 0..n {
            for dst in 0..n {
                if d[src][dst] != 0 || dp[src][dst] != 0 {
                    arrows.push(Arrow { src, dst, d: d[src][dst], d_prime: dp[src][dst] });
                }
            }
        }
        let dotted = (0..n).filter(|&i| !vertices[i].is_projective).collect();
        ValuedQuiver { vertices, arrows, nu, dotted }
    }
}

/// Data shared by both quivers: U, its top exterior power and the one below.
pub struct Standard<'a> {
    pub table: &'a CharacterTable,
    /// wedge[p] = character of the p-th exterior power of Res U, p = 0..d.
    pub wedge: &'a [Character],
}

impl Standard<'_> {
    pub fn d(&self) -> usize {
        self.wedge.len() - 1
    }

    fn top(&self) -> &Character {
        &self.wedge[self.d()]
    }

    /// Irreducible index of det(U) (x) W.
    pub fn nu_h(&self, w: usize) -> usize {
        let t = self.table;
        t.index_of(&t.tensor(self.top(), &t.irreducibles[w])).expect("det U is linear")
    }

    /// Irreducible W'' with det(U) (x) W'' = W.
    pub fn nu_h_inverse(&self, w: usize) -> usize {
        let t = self.table;
        t.index_of(&t.tensor(&t.dual(self.top()), &t.irreducibles[w])).expect("det U is linear")
    }
}

/// MK(lH): d_H(W, W') = [U (x) W' : W], d'_H(W, W') = [wedge^{d-1} U (x) W'' : W'].
pub fn mckay_h(s: &Standard) -> Result<ValuedQuiver> {
    let t = s.table;
    let n = t.irreducibles.len();
    let d = s.d();
    let mut dm = vec![vec![0u64; n]; n];
    let mut dpm = vec![vec![0u64; n]; n];
    for w2 in 0..n {
        let c = t.decompose(&t.tensor(&s.wedge[1], &t.irreducibles[w2]))?;
        for w in 0..n {
            dm[w][w2] = c[w];
        }
    }
    for w in 0..n {
        let w3 = s.nu_h_inverse(w);
        let c = t.decompose(&t.tensor(&s.wedge[d - 1], &t.irreducibles[w3]))?;
        dpm[w] = c;
    }
    let trivial = t.index_of(&t.trivial()).expect("trivial");
    let nu: Vec<usize> = (0..n).map(|w| s.nu_h(w)).collect();
    let vertices = (0..n)
        .map(|w| Vertex {
            label: format!("W{w}"),
            rank: t.degree(&t.irreducibles[w]),
            is_r: w == trivial,
            is_omega: w == nu[trivial],
            is_projective: w == trivial,
        })
        .collect();
    Ok(ValuedQuiver::from_matrices(vertices, &dm, &dpm, nu))
}

fn orbit_map(orbits: &[OrbitDatum], n: usize) -> Vec<usize> {
    let mut of = vec![0; n];
    for (i, o) in orbits.iter().enumerate() {
        for &m in &o.members {
            of[m] = i;
        }
    }
    of
}

/// Character of Res V_i = a_i (W_i1 + ... + W_it).
pub fn restriction(t: &CharacterTable, o: &OrbitDatum) -> Result<Character> {
    let a = o.a().ok_or_else(|| Error::Ambiguous(vec![]))?;
    let sum = o.members.iter().fold(t.zero_char(), |acc, &m| t.add(&acc, &t.irreducibles[m]));
    Ok(t.scale(&sum, a))
}

/// Nakayama permutation on orbits: V_i -> orbit of det(U) (x) W_i1.
pub fn nu_orbits(s: &Standard, orbits: &[OrbitDatum]) -> Vec<usize> {
    let of = orbit_map(orbits, s.table.irreducibles.len());
    orbits.iter().map(|o| of[s.nu_h(o.members[0])]).collect()
}

/// MK(l*G) as the valued quotient of MK(lH):
/// d_G(i, i') = (a_i' / a_i) sum_{j'} d_H(W_ij, W_i'j'),
/// d'_G(i, i') = (a_i / a_i') sum_{j} d'_H(W_ij, W_i'j').
/// Both are cross-checked against the defining G-module decompositions.
pub fn mckay_g(s: &Standard, orbits: &[OrbitDatum], qh: &ValuedQuiver) -> Result<ValuedQuiver> {
    let t = s.table;
    let no = orbits.len();
    let a: Vec<u64> = orbits
        .iter()
        .enumerate()
        .map(|(i, o)| o.a().ok_or_else(|| Error::Ambiguous(vec![i])))
        .collect::<Result<_>>()?;
    let mut dm = vec![vec![0u64; no]; no];
    let mut dpm = vec![vec![0u64; no]; no];
    for i in 0..no {
        for i2 in 0..no {
            let row = |w: usize| orbits[i2].members.iter().map(|&w2| qh.valuation(w, w2).0).sum::<u64>();
            let dh = row(orbits[i].members[0]);
            if orbits[i].members.iter().any(|&w| row(w) != dh) {
                return Err(Error::Internal(format!("d_H({i},{i2}) depends on the orbit member")));
            }
            let col = |w2: usize| orbits[i].members.iter().map(|&w| qh.valuation(w, w2).1).sum::<u64>();
            let dph = col(orbits[i2].members[0]);
            if orbits[i2].members.iter().any(|&w2| col(w2) != dph) {
                return Err(Error::Internal(format!("d'_H({i},{i2}) depends on the orbit member")));
            }
            if (a[i2] * dh) % a[i] != 0 || (a[i] * dph) % a[i2] != 0 {
                return Err(Error::ValuationNonIntegral(i, i2));
            }
            dm[i][i2] = a[i2] * dh / a[i];
            dpm[i][i2] = a[i] * dph / a[i2];
        }
    }
    // second path: decompose U (x) V_i' and wedge^{d-1}U (x) V_i'' over l*G
    let nu = nu_orbits(s, orbits);
    let d = s.d();
    for i2 in 0..no {
        let res = restriction(t, &orbits[i2])?;
        let m = gmodule_multiplicities(t, orbits, &t.tensor(&s.wedge[1], &res))?;
        for i in 0..no {
            if m[i] != dm[i][i2] {
                return Err(Error::Internal(format!("d_G({i},{i2}) disagrees with U (x) V")));
            }
        }
    }
    for i in 0..no {
        let pre = nu.iter().position(|&x| x == i).expect("nu is a permutation");
        let res = restriction(t, &orbits[pre])?;
        let m = gmodule_multiplicities(t, orbits, &t.tensor(&s.wedge[d - 1], &res))?;
        if m != dpm[i] {
            return Err(Error::Internal(format!("d'_G({i}, -) disagrees with the wedge^(d-1) recipe")));
        }
    }
    let trivial = t.index_of(&t.trivial()).expect("trivial");
    let r = orbit_map(orbits, t.irreducibles.len())[trivial];
    let vertices = orbits
        .iter()
        .enumerate()
        .map(|(i, o)| Vertex {
            label: o.label.replacen('V', "M", 1),
            rank: o.rank().unwrap(),
            is_r: i == r,
            is_omega: i == nu[r],
            is_projective: i == r,
        })
        .collect();
    let q = ValuedQuiver::from_matrices(vertices, &dm, &dpm, nu);
    if (0..no).any(|i| q.vertices[i].rank != q.vertices[q.nu[i]].rank) {
        return Err(Error::Internal("nu does not preserve rank".into()));
    }
    Ok(q)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SequenceKind {
    AlmostSplit,
    Fundamental,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlmostSplitSequence {
    pub target: usize,
    /// terms[p] = multiplicities of wedge^p U (x) V over the vertices, p = 0..d.
    pub terms: Vec<Vec<u64>>,
    pub kind: SequenceKind,
}

impl AlmostSplitSequence {
    /// "0 -> M_d -> ... -> M_0 -> 0" with sums written as "A^2 + B".
    pub fn format(&self, q: &ValuedQuiver) -> String {
        self.format_with(|i| q.vertices[i].label.clone())
    }

    /// As `format`, naming vertex i by `name(i)`.
    pub fn format_with(&self, name: impl Fn(usize) -> String) -> String {
        let term = |c: &[u64]| {
            let parts: Vec<String> = c
                .iter()
                .enumerate()
                .filter(|(_, &m)| m > 0)
                .map(|(i, &m)| {
                    if m == 1 {
                        name(i)
                    } else {
                        format!("{}^{}", name(i), m)
                    }
                })
                .collect();
            if parts.is_empty() {
                "0".into()
            } else {
                parts.join(" + ")
            }
        };
        let mut out = String::from("0");
        for c in self.terms.iter().rev() {
            out.push_str(" -> ");
            out.push_str(&term(c));
        }
        if self.kind == SequenceKind::AlmostSplit {
            out.push_str(" -> 0");
        }
        out
    }
}

/// One sequence per vertex, terms from the Koszul complex tensored with V.
pub fn almost_split_sequences(s: &Standard, orbits: &[OrbitDatum], q: &ValuedQuiver) -> Result<Vec<AlmostSplitSequence>> {
    let t = s.table;
    let d = s.d();
    let mut out = Vec::with_capacity(orbits.len());
    for (i, o) in orbits.iter().enumerate() {
        let res = restriction(t, o)?;
        let terms = (0..=d)
            .map(|p| gmodule_multiplicities(t, orbits, &t.tensor(&s.wedge[p], &res)))
            .collect::<Result<Vec<_>>>()?;
        let unit = |k: usize| (0..orbits.len()).map(|j| (j == k) as u64).collect::<Vec<_>>();
        if terms[0] != unit(i) || terms[d] != unit(q.nu[i]) {
            return Err(Error::Internal(format!("sequence ends at vertex {i} are not V and nu(V)")));
        }
        // the middle term next to V lists the in-arrows of V
        for (j, &m) in terms[1].iter().enumerate() {
            if m != q.valuation(j, i).0 {
                return Err(Error::Internal(format!("sink map of vertex {i} disagrees with d_G({j},{i})")));
            }
        }
        let kind = if q.vertices[i].is_r { SequenceKind::Fundamental } else { SequenceKind::AlmostSplit };
        out.push(AlmostSplitSequence { target: i, terms, kind });
    }
    Ok(out)
}

/// sum_p (-1)^p rank(C_p)
pub fn alternating_rank_sum(q: &ValuedQuiver, seq: &AlmostSplitSequence) -> i64 {
    seq.terms
        .iter()
        .enumerate()
        .map(|(p, c)| {
            let r: u64 = c.iter().zip(&q.vertices).map(|(&m, v)| m * v.rank).sum();
            if p % 2 == 0 {
                r as i64
            } else {
                -(r as i64)
            }
        })
        .sum()
}
