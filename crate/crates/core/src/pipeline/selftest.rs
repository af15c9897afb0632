//! Catalog regression plus the structural property suites.

use super::catalog::{self, CatalogEntry};
use super::{analyze, analyze_with, solver_options, Analysis};
use crate::chartab::methods_agree;
use crate::error::Error;
use crate::exactfield::{Field, GaloisSubgroup};
use crate::linalg::Matrix;
use crate::matgroup::{generate_group, kernel_and_cosets, GroupElement, DEFAULT_CAP};
use crate::skewsolve::{check_res_ind, orbit_coefficients, Context};

#[derive(Clone, Debug)]
pub struct Check {
    pub name: String,
    /// Empty on success.
    pub failures: Vec<String>,
}

impl Check {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Property failures for one analysis.
pub fn properties(a: &Analysis) -> Vec<String> {
    let mut bad = Vec::new();
    let orbits = &a.solution.orbits;
    let t = &a.table;
    let r = a.gal.order() as u64;
    let ctx = Context { table: t, g: &a.g, h: &a.h, gal: &a.gal, wedges: &a.wedge };
    if let Err(e) = check_res_ind(&ctx, orbits) {
        bad.push(format!("Res-Ind: {e}"));
    }
    // t a b = [l:k] with b read off Res Ind W independently of the solver
    for (i, o) in orbits.iter().enumerate() {
        let Some(ai) = o.a() else { continue };
        let w = &t.irreducibles[o.members[0]];
        let res_ind = a.h.cosets.iter().fold(t.zero_char(), |acc, &gi| t.add(&acc, &t.galois_twist(w, &a.g, &a.h, gi)));
        match orbit_coefficients(t, orbits, &res_ind) {
            Ok(c) if c[i] % ai == 0 && o.t as u64 * ai * (c[i] / ai) == r => {}
            Ok(c) => bad.push(format!("tab law on {}: t = {}, a = {ai}, Res Ind coefficient {}", o.label, o.t, c[i])),
            Err(e) => bad.push(format!("tab law on {}: {e}", o.label)),
        }
    }
    let Some((qh, qg)) = &a.quivers else {
        return bad;
    };
    // a_i d_G(i, i') = a_i' sum_j' d_H(W_ij, W_i'j')
    for (i, oi) in orbits.iter().enumerate() {
        for (k, ok) in orbits.iter().enumerate() {
            let (ai, ak) = (oi.a().unwrap_or(0), ok.a().unwrap_or(0));
            let s: u64 = ok.members.iter().map(|&w2| qh.valuation(oi.members[0], w2).0).sum();
            if ai * qg.valuation(i, k).0 != ak * s {
                bad.push(format!("valuation integrality at ({}, {})", oi.label, ok.label));
            }
        }
    }
    let mut seen = vec![false; qg.nu.len()];
    for &j in &qg.nu {
        seen[j] = true;
    }
    if seen.iter().any(|s| !s) {
        bad.push("nu is not a bijection".into());
    }
    if qg.nu_is_identity() != a.flags.gorenstein {
        bad.push(format!("nu identity = {}, gorenstein = {}", qg.nu_is_identity(), a.flags.gorenstein));
    }
    for s in &a.sequences {
        let sum = crate::arquiver::alternating_rank_sum(qg, s);
        if sum != 0 {
            bad.push(format!("alternating rank sum {sum} at {}", qg.vertices[s.target].label));
        }
    }
    bad
}

pub fn check_entry(e: &CatalogEntry) -> Check {
    let failures = match analyze(&e.job) {
        Ok(a) => {
            let mut f = e.expected.check(&a);
            f.extend(properties(&a));
            f
        }
        Err(err) => vec![err.to_string()],
    };
    Check { name: format!("catalog {}", e.name), failures }
}

/// Dixon and the dual-group construction on C_m (m <= 16) and C_2 x C_4.
pub fn abelian_oracle() -> Check {
    let mut failures = Vec::new();
    let mut cases: Vec<(String, Field, Vec<Vec<Vec<&str>>>)> = (1..=16u64)
        .map(|m| (format!("C{m}"), Field::cyclotomic(m), vec![vec![vec!["z", "0"], vec!["0", "1"]]]))
        .collect();
    cases.push((
        "C2 x C4".into(),
        Field::cyclotomic(4),
        vec![vec![vec!["-1", "0"], vec!["0", "1"]], vec![vec!["1", "0"], vec!["0", "z"]]],
    ));
    for (name, f, mats) in cases {
        let gens: Vec<GroupElement> = mats
            .iter()
            .map(|m| GroupElement {
                matrix: Matrix::from_rows(m.iter().map(|r| r.iter().map(|s| f.parse(s).expect("entry")).collect()).collect()),
                aut: f.aut_identity(),
            })
            .collect();
        let gal = GaloisSubgroup::trivial(&f);
        let res = generate_group(&f, 2, &gens, DEFAULT_CAP).and_then(|g| kernel_and_cosets(&g, &gal)).and_then(|h| methods_agree(&h, &f));
        match res {
            Ok(true) => {}
            Ok(false) => failures.push(format!("{name}: tables differ")),
            Err(e) => failures.push(format!("{name}: {e}")),
        }
    }
    Check { name: "abelian character table oracle".into(), failures }
}

/// A wrong a injected through the solver hook must surface as NonDivisible.
pub fn injected_fault() -> Check {
    let e = catalog::find("typeCL-n1").expect("catalog entry");
    let mut opts = solver_options(&e.job.options);
    // orbit 1 is {W_1, W_-1}, which U restricts onto with multiplicity one
    opts.force_a = vec![(1, 2)];
    let failures = match analyze_with(&e.job, opts) {
        Err(Error::NonDivisible { a: 2, .. }) => vec![],
        Err(other) => vec![format!("unexpected error {other}")],
        Ok(_) => vec!["corrupted a was not detected".into()],
    };
    Check { name: "injected a_i fault".into(), failures }
}

/// Entries whose name starts with `only` (all when `None`); the global
/// suites run only for the unfiltered set.
pub fn run(only: Option<&str>) -> Vec<Check> {
    let chosen: Vec<CatalogEntry> = catalog::entries().into_iter().filter(|e| only.map_or(true, |p| e.name.starts_with(p))).collect();
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get());
    let chunk = chosen.len().div_ceil(workers).max(1);
    // jobs are independent; chunks are joined in catalog order
    let mut out: Vec<Check> = std::thread::scope(|s| {
        let handles: Vec<_> = chosen.chunks(chunk).map(|c| s.spawn(move || c.iter().map(check_entry).collect::<Vec<_>>())).collect();
        handles.into_iter().flat_map(|h| h.join().expect("selftest worker")).collect()
    });
    if only.is_none() {
        out.push(abelian_oracle());
        out.push(injected_fault());
    }
    out
}
