//! Galois orbits on simp lH and the multiplicities (t, a, b).

use std::collections::BTreeSet;

use serde::Serialize;

use crate::chartab::{Character, CharacterTable};
use crate::error::{Error, Result};
use crate::exactfield::arith::{divisors, gcd};
use crate::exactfield::{GaloisSubgroup, NormAnswer};
use crate::matgroup::{FiniteGroup, KernelSubgroup};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitDatum {
    pub label: String,
    pub members: Vec<usize>,
    pub t: usize,
    pub dim_w: u64,
    /// Remaining candidates for a; fixed when exactly one remains.
    pub candidates: Vec<u64>,
    pub provenance: Vec<String>,
}

impl OrbitDatum {
    pub fn a(&self) -> Option<u64> {
        match self.candidates.as_slice() {
            [a] => Some(*a),
            _ => None,
        }
    }

    /// b = [l:k] / (t a)
    pub fn b(&self, degree: usize) -> Option<u64> {
        self.a().map(|a| degree as u64 / (self.t as u64 * a))
    }

    /// dim_l V = t a dim W
    pub fn rank(&self) -> Option<u64> {
        self.a().map(|a| self.t as u64 * a * self.dim_w)
    }
}

pub fn orbit_label(members: &[usize]) -> String {
    if members.len() == 1 {
        format!("V{}", members[0])
    } else {
        let list: Vec<String> = members.iter().map(|m| m.to_string()).collect();
        format!("V{}[{}]", members[0], list.join(","))
    }
}

/// Partition of the irreducibles into G-orbits under the twist action,
/// ordered by smallest member.
pub fn compute_orbits(t: &CharacterTable, g: &FiniteGroup, h: &KernelSubgroup) -> Result<Vec<OrbitDatum>> {
    let n = t.irreducibles.len();
    // image of each irreducible under each coset representative
    let mut images = Vec::with_capacity(h.cosets.len());
    for &gi in &h.cosets {
        let row: Vec<usize> = t
            .irreducibles
            .iter()
            .map(|chi| {
                t.index_of(&t.galois_twist(chi, g, h, gi))
                    .ok_or_else(|| Error::Internal("twist of an irreducible is not irreducible".into()))
            })
            .collect::<Result<_>>()?;
        let mut sorted = row.clone();
        sorted.sort_unstable();
        if sorted != (0..n).collect::<Vec<_>>() {
            return Err(Error::Internal("twist is not a permutation".into()));
        }
        images.push(row);
    }
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut members = vec![start];
        seen[start] = true;
        let mut i = 0;
        while i < members.len() {
            for row in &images {
                let y = row[members[i]];
                if !seen[y] {
                    seen[y] = true;
                    members.push(y);
                }
            }
            i += 1;
        }
        members.sort_unstable();
        let dim_w = t.degree(&t.irreducibles[start]);
        out.push(OrbitDatum {
            label: orbit_label(&members),
            t: members.len(),
            members,
            dim_w,
            candidates: vec![],
            provenance: vec![],
        });
    }
    Ok(out)
}

#[derive(Clone, Debug)]
pub struct SolverOptions {
    pub saturation_iterations: usize,
    pub max_degree: u64,
    pub norm_search_bound: u32,
    /// Test hook: override a on the given orbits after solving.
    pub force_a: Vec<(usize, u64)>,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions { saturation_iterations: 32, max_degree: 4096, norm_search_bound: 8, force_a: vec![] }
    }
}

pub struct Context<'a> {
    pub table: &'a CharacterTable,
    pub g: &'a FiniteGroup,
    pub h: &'a KernelSubgroup,
    pub gal: &'a GaloisSubgroup,
    /// Exterior powers of U, p = 0..d.
    pub wedges: &'a [Character],
}

#[derive(Clone, Debug)]
pub struct Solution {
    pub orbits: Vec<OrbitDatum>,
    /// Orbit-coefficient vectors of every G-module generated during saturation.
    pub generated: Vec<Vec<u64>>,
}

impl Solution {
    pub fn ambiguous(&self) -> Vec<usize> {
        (0..self.orbits.len()).filter(|&i| self.orbits[i].a().is_none()).collect()
    }
}

/// Coefficients over orbits of a character that is constant on orbits.
pub fn orbit_coefficients(t: &CharacterTable, orbits: &[OrbitDatum], chi: &Character) -> Result<Vec<u64>> {
    let m = t.decompose(chi)?;
    orbits
        .iter()
        .enumerate()
        .map(|(i, o)| {
            let c = m[o.members[0]];
            if o.members.iter().any(|&j| m[j] != c) {
                Err(Error::OrbitInconsistent(i))
            } else {
                Ok(c)
            }
        })
        .collect()
}

/// Multiplicity of each V_i in an l*G-module X from Res X.
pub fn gmodule_multiplicities(t: &CharacterTable, orbits: &[OrbitDatum], chi: &Character) -> Result<Vec<u64>> {
    let c = orbit_coefficients(t, orbits, chi)?;
    c.iter()
        .zip(orbits)
        .enumerate()
        .map(|(i, (&c, o))| {
            let a = o.a().ok_or_else(|| Error::Ambiguous(vec![i]))?;
            if c % a != 0 {
                Err(Error::NonDivisible { orbit: i, c, a })
            } else {
                Ok(c / a)
            }
        })
        .collect()
}

fn orbit_sum(t: &CharacterTable, o: &OrbitDatum) -> Character {
    o.members.iter().fold(t.zero_char(), |acc, &j| t.add(&acc, &t.irreducibles[j]))
}

/// Layered determination of a_i (and b_i = [l:k]/(t_i a_i)).
pub fn solve_multiplicities(ctx: &Context, mut orbits: Vec<OrbitDatum>, opts: &SolverOptions) -> Result<Solution> {
    let t = ctx.table;
    let r = ctx.gal.order() as u64;
    let no = orbits.len();
    let trivial = t.index_of(&t.trivial()).expect("trivial character present");
    for o in orbits.iter_mut() {
        o.candidates = divisors(r / o.t as u64);
        o.provenance.clear();
    }
    // L0
    for o in orbits.iter_mut() {
        if o.members.contains(&trivial) {
            o.candidates = vec![1];
            o.provenance.push("L0: trivial orbit, a = 1".into());
        }
    }
    // L1: saturation over orbit-coefficient vectors
    let sums: Vec<Character> = orbits.iter().map(|o| orbit_sum(t, o)).collect();
    let mut fusion = vec![vec![vec![0u64; no]; no]; no];
    for i in 0..no {
        for j in i..no {
            let c = orbit_coefficients(t, &orbits, &t.tensor(&sums[i], &sums[j]))?;
            fusion[i][j] = c.clone();
            fusion[j][i] = c;
        }
    }
    let degree = |c: &[u64]| c.iter().zip(&orbits).map(|(&x, o)| x * o.t as u64 * o.dim_w).sum::<u64>();
    let mut seeds: Vec<Vec<u64>> = Vec::new();
    for w in ctx.wedges.iter().skip(1) {
        for chi in [w.clone(), t.dual(w)] {
            let c = orbit_coefficients(t, &orbits, &chi)?;
            if !seeds.contains(&c) {
                seeds.push(c);
            }
        }
    }
    let mut generated: BTreeSet<Vec<u64>> = seeds.iter().cloned().collect();
    let mut frontier: Vec<Vec<u64>> = seeds.clone();
    let mut gcds = vec![0u64; no];
    let absorb = |gcds: &mut Vec<u64>, c: &[u64]| {
        for (g, &x) in gcds.iter_mut().zip(c) {
            if x > 0 {
                *g = gcd(*g, x);
            }
        }
    };
    for c in &generated {
        absorb(&mut gcds, c);
    }
    let settled = |gcds: &[u64]| gcds.iter().zip(&orbits).all(|(&g, o)| g == 1 || o.candidates == [1]);
    let mut iterations = 0;
    while iterations < opts.saturation_iterations && !frontier.is_empty() && !settled(&gcds) {
        iterations += 1;
        let mut next = Vec::new();
        for x in &frontier {
            for s in &seeds {
                let mut c = vec![0u64; no];
                for i in 0..no {
                    if x[i] == 0 {
                        continue;
                    }
                    for j in 0..no {
                        if s[j] == 0 {
                            continue;
                        }
                        for k in 0..no {
                            c[k] += x[i] * s[j] * fusion[i][j][k];
                        }
                    }
                }
                if degree(&c) <= opts.max_degree && generated.insert(c.clone()) {
                    absorb(&mut gcds, &c);
                    next.push(c);
                }
            }
        }
        frontier = next;
    }
    for (i, o) in orbits.iter_mut().enumerate() {
        if o.candidates == [1] {
            continue;
        }
        if gcds[i] > 0 {
            o.provenance.push(format!(
                "L1: a | {} over {} generated G-modules ({} tensor rounds)",
                gcds[i],
                generated.len(),
                iterations
            ));
            // L2
            let bound = gcd(gcds[i], r / o.t as u64);
            o.candidates = divisors(bound);
        } else {
            o.provenance.push("L1: orbit absent from every generated G-module".into());
        }
        o.provenance.push(format!("L2: a * b = {}, candidates for a: {:?}", r / o.t as u64, o.candidates));
    }
    // L3
    for i in 0..no {
        let o = &orbits[i];
        if o.candidates.len() <= 1 || o.t != 1 || o.dim_w != 1 || !o.candidates.contains(&1) {
            continue;
        }
        let msg = match extension_test(ctx, o.members[0], opts.norm_search_bound) {
            None => "L3: skipped, Gal(l/k) is not cyclic".to_string(),
            Some((value, ans)) => {
                let o = &mut orbits[i];
                match ans {
                    NormAnswer::Yes => o.candidates = vec![1],
                    NormAnswer::No => o.candidates.retain(|&a| a != 1),
                    NormAnswer::Unknown => {}
                }
                let verdict = match ans {
                    NormAnswer::Yes => "a linear extension exists, a = 1",
                    NormAnswer::No => "no linear extension, a = 1 excluded",
                    NormAnswer::Unknown => "undecided",
                };
                format!("L3: chi(g^r) = {value}, is_norm = {ans:?}: {verdict}")
            }
        };
        orbits[i].provenance.push(msg);
        if orbits[i].candidates.is_empty() {
            return Err(Error::InconsistentConstraints(i));
        }
        if orbits[i].candidates.len() == 1 {
            let a = orbits[i].candidates[0];
            orbits[i].provenance.push(format!("L2: fixed a = {a}"));
        }
    }
    for (i, o) in orbits.iter_mut().enumerate() {
        if o.candidates.is_empty() {
            return Err(Error::InconsistentConstraints(i));
        }
        if o.candidates.len() > 1 {
            o.provenance.push(format!("L4: ambiguous, candidates {:?}", o.candidates));
        }
    }
    for &(i, a) in &opts.force_a {
        orbits[i].candidates = vec![a];
        orbits[i].provenance.push(format!("forced a = {a}"));
    }
    let generated: Vec<Vec<u64>> = generated.into_iter().collect();
    if opts.force_a.is_empty() {
        for c in &generated {
            for (i, o) in orbits.iter().enumerate() {
                if let Some(a) = o.a() {
                    if c[i] % a != 0 {
                        return Err(Error::InconsistentConstraints(i));
                    }
                }
            }
        }
    }
    Ok(Solution { orbits, generated })
}

/// For a Galois-fixed linear character chi with Gal(l/k) = <sigma> cyclic of
/// order r and g a lift of sigma: chi extends to G -> l^x |x Gal(l/k) iff
/// chi(g^r) is a norm from l to k.
pub fn extension_test(ctx: &Context, irr: usize, bound: u32) -> Option<(String, NormAnswer)> {
    let f = ctx.g.field();
    let gen = ctx.gal.cyclic_generator(f)?;
    let pos = ctx.gal.elements().iter().position(|&a| a == gen).unwrap();
    let gi = ctx.h.cosets[pos];
    let r = ctx.gal.order();
    let gr = ctx.g.pow(gi, r);
    let class = ctx.h.class_of[ctx.h.pos[&gr]];
    let value = ctx.table.embed(&ctx.table.irreducibles[irr].values[class]);
    let ans = f.is_norm(&value, ctx.gal, bound);
    Some((f.format(&value), ans))
}

/// Res Ind W = sum over cosets of g.W, and for an orbit this equals
/// (a b) times the orbit sum.
pub fn check_res_ind(ctx: &Context, orbits: &[OrbitDatum]) -> Result<()> {
    let t = ctx.table;
    let r = ctx.gal.order() as u64;
    for (i, o) in orbits.iter().enumerate() {
        let w = &t.irreducibles[o.members[0]];
        let lhs = ctx
            .h
            .cosets
            .iter()
            .fold(t.zero_char(), |acc, &gi| t.add(&acc, &t.galois_twist(w, ctx.g, ctx.h, gi)));
        let rhs = t.scale(&orbit_sum(t, o), r / o.t as u64);
        if lhs != rhs {
            return Err(Error::Internal(format!("Res Ind identity fails on orbit {i}")));
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassGroup {
    pub invariant_factors: Vec<u64>,
    /// Orbit indices of the rank-one modules, trivial first.
    pub elements: Vec<usize>,
}

/// Rank-one simples (t = a = dim W = 1) under tensor product.
pub fn class_group(t: &CharacterTable, orbits: &[OrbitDatum]) -> Result<ClassGroup> {
    let elements: Vec<usize> = (0..orbits.len())
        .filter(|&i| orbits[i].t == 1 && orbits[i].a() == Some(1) && orbits[i].dim_w == 1)
        .collect();
    let n = elements.len();
    let mut table = vec![0usize; n * n];
    for (x, &i) in elements.iter().enumerate() {
        for (y, &j) in elements.iter().enumerate() {
            let prod = t.tensor(&t.irreducibles[orbits[i].members[0]], &t.irreducibles[orbits[j].members[0]]);
            let k = t.index_of(&prod).and_then(|w| elements.iter().position(|&e| orbits[e].members[0] == w));
            table[x * n + y] = k.ok_or_else(|| Error::Internal("class group is not closed".into()))?;
        }
    }
    if elements.first().map(|&i| orbits[i].members[0]) != t.index_of(&t.trivial()) {
        return Err(Error::Internal("class group identity is not the trivial orbit".into()));
    }
    let invariant_factors = crate::smith::invariant_factors(n, |a, b| table[a * n + b]);
    Ok(ClassGroup { invariant_factors, elements })
}

pub fn format_group(inv: &[u64]) -> String {
    if inv.is_empty() {
        "1".into()
    } else {
        inv.iter().map(|d| format!("C{d}")).collect::<Vec<_>>().join(" x ")
    }
}

#[cfg(test)]
mod tests;
