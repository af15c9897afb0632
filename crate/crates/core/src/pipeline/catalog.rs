//! Built-in examples: the worked examples, Klein's ADE subgroups of SL_2
//! with trivial Galois action, and cyclotomic stand-ins for the C/R table.

use serde::Serialize;

use super::job::{FieldSection, GeneratorSpec, GroupSection, JobOptions, JobSpec, LabelSpec, LabelStyle};
use super::Analysis;
use crate::error::{Error, Result};
use crate::exactfield::{Field, FieldSpec};

#[derive(Clone, Debug, Serialize)]
pub struct CatalogEntry {
    pub name: String,
    pub summary: String,
    /// Generators in the notation of the source example.
    pub notes: Vec<String>,
    pub job: JobSpec,
    pub expected: Expected,
}

/// Regression fragment; `None` fields are not checked.
#[derive(Clone, Debug, Default, Serialize)]
pub struct Expected {
    pub dynkin_type: Option<String>,
    pub class_group: Option<Vec<u64>>,
    pub gorenstein: Option<bool>,
    pub isolated: Option<bool>,
    pub vertices: Option<usize>,
    pub kernel_order: Option<usize>,
    /// Named omega vertex.
    pub omega: Option<String>,
    /// Named (v, nu(v)) pairs.
    pub nu: Vec<(String, String)>,
    /// Named arrows with valuations.
    pub valuations: Vec<(String, String, (u64, u64))>,
    /// Multiset of (orbit size, dim W).
    pub orbit_shape: Option<Vec<(usize, u64)>>,
    /// Named sequences, compared up to the order of summands.
    pub sequences: Vec<String>,
    /// `sequences` lists only some of the vertices.
    pub partial_sequences: bool,
    /// C and R are replaced by a cyclotomic field and its real subfield.
    pub surrogate: bool,
}

fn gen(rows: &[&[&str]], aut: i64) -> GeneratorSpec {
    GeneratorSpec { matrix: rows.iter().map(|r| r.iter().map(|s| s.to_string()).collect()).collect(), aut: Some(aut) }
}

fn gen_owned(rows: Vec<Vec<String>>, aut: i64) -> GeneratorSpec {
    GeneratorSpec { matrix: rows, aut: Some(aut) }
}

fn cyclotomic(n: u64, galois: &[i64]) -> FieldSection {
    FieldSection { spec: FieldSpec::Cyclotomic { n }, galois: galois.to_vec() }
}

fn job(field: FieldSection, d: usize, generators: Vec<GeneratorSpec>, labels: Option<LabelSpec>) -> JobSpec {
    JobSpec { field, group: GroupSection { d, generators }, labels, options: JobOptions::default() }
}

fn labels(element: &[usize], zeta: &str, order: u64, style: LabelStyle) -> Option<LabelSpec> {
    Some(LabelSpec { element: element.to_vec(), zeta: zeta.into(), order, style })
}

fn entry(name: impl Into<String>, summary: impl Into<String>, job: JobSpec, expected: Expected) -> CatalogEntry {
    CatalogEntry { name: name.into(), summary: summary.into(), notes: vec![], job, expected }
}

fn pm(j: i64) -> String {
    format!("M_{{±{j}}}")
}

fn strs(v: &[&str]) -> Vec<String> {
    v.iter().map(|s| s.to_string()).collect()
}

/// diag(zeta, zeta^-1) and the swap twisted by complex conjugation.
fn dihedral_pair() -> Vec<GeneratorSpec> {
    vec![gen(&[&["z", "0"], &["0", "z^-1"]], 1), gen(&[&["0", "1"], &["1", "0"]], -1)]
}

fn type_cl(n: u64) -> CatalogEntry {
    let n_ = n as i64;
    let mut seqs = vec![format!("0 -> M_0 -> {} -> M_0", pm(1))];
    if n >= 2 {
        seqs.push(format!("0 -> {a} -> M_0^2 + {b} -> {a} -> 0", a = pm(1), b = pm(2)));
        for i in 2..n_ {
            seqs.push(format!("0 -> {a} -> {b} + {c} -> {a} -> 0", a = pm(i), b = pm(i - 1), c = pm(i + 1)));
        }
        seqs.push(format!("0 -> {a} -> {b} + {a} -> {a} -> 0", a = pm(n_), b = pm(n_ - 1)));
    }
    let mut valuations = vec![("M_0".into(), pm(1), (2, 1)), (pm(1), "M_0".into(), (1, 2)), (pm(n_), pm(n_), (1, 1))];
    if n >= 2 {
        valuations.push((pm(1), pm(2), (1, 1)));
    }
    entry(
        format!("typeCL-n{n}"),
        format!("CL~ example, l = Q(zeta_{}), k = real subfield", 2 * n + 1),
        job(cyclotomic(2 * n + 1, &[-1]), 2, dihedral_pair(), labels(&[0], "z", 2 * n + 1, LabelStyle::PlusMinus)),
        Expected {
            dynkin_type: Some(format!("CLn~({n})")),
            class_group: Some(vec![]),
            gorenstein: Some(true),
            isolated: Some(true),
            vertices: Some(n as usize + 1),
            kernel_order: Some(2 * n as usize + 1),
            valuations,
            sequences: seqs,
            // for n = 1 the two listed rows at M_{±1} overlap
            partial_sequences: n == 1,
            ..Default::default()
        },
    )
}

fn type_c(n: u64) -> CatalogEntry {
    let n_ = n as i64;
    let mut seqs = vec![];
    // the listed rows are uniform from n = 3 on
    if n >= 3 {
        seqs.push(format!("0 -> M_0 -> {} -> M_0", pm(1)));
        seqs.push(format!("0 -> {a} -> M_0^2 + {b} -> {a} -> 0", a = pm(1), b = pm(2)));
        for i in 2..n_ - 1 {
            seqs.push(format!("0 -> {a} -> {b} + {c} -> {a} -> 0", a = pm(i), b = pm(i - 1), c = pm(i + 1)));
        }
        let prev = if n_ == 3 { pm(1) } else { pm(n_ - 2) };
        seqs.push(format!("0 -> {a} -> {prev} + M_{n}^2 -> {a} -> 0", a = pm(n_ - 1)));
        seqs.push(format!("0 -> M_{n} -> {} -> M_{n} -> 0", pm(n_ - 1)));
    }
    entry(
        format!("typeC-n{n}"),
        format!("C~ example, l = Q(zeta_{}), k = real subfield", 2 * n),
        job(cyclotomic(2 * n, &[-1]), 2, dihedral_pair(), labels(&[0], "z", 2 * n, LabelStyle::PlusMinus)),
        Expected {
            dynkin_type: Some(format!("Cn~({n})")),
            class_group: Some(vec![2]),
            gorenstein: Some(true),
            vertices: Some(n as usize + 1),
            kernel_order: Some(2 * n as usize),
            valuations: vec![
                ("M_0".into(), pm(1), (2, 1)),
                (pm(1), "M_0".into(), (1, 2)),
                (pm(n_ - 1), format!("M_{n}"), (1, 2)),
                (format!("M_{n}"), pm(n_ - 1), (2, 1)),
            ],
            sequences: seqs,
            ..Default::default()
        },
    )
}

fn type_bc(n: u64) -> CatalogEntry {
    if n == 1 {
        let mut e = entry(
            "typeBC-n1",
            "A11~ example, l = Q(i), k = Q",
            job(
                cyclotomic(4, &[-1]),
                2,
                vec![gen(&[&["-1", "0"], &["0", "-1"]], 1), gen(&[&["0", "-1"], &["1", "0"]], -1)],
                labels(&[0], "-1", 2, LabelStyle::List),
            ),
            Expected {
                dynkin_type: Some("A11~".into()),
                class_group: Some(vec![]),
                gorenstein: Some(true),
                vertices: Some(2),
                kernel_order: Some(2),
                valuations: vec![("M_0".into(), "M_1".into(), (4, 1)), ("M_1".into(), "M_0".into(), (1, 4))],
                sequences: strs(&["0 -> M_0 -> M_1 -> M_0", "0 -> M_1 -> M_0^4 -> M_1 -> 0"]),
                ..Default::default()
            },
        );
        e.notes = strs(&["alpha = (-I, id)", "beta = ([[0, -1], [1, 0]], sigma), sigma = complex conjugation"]);
        return e;
    }
    let n_ = n as i64;
    let two_e = 1u64 << (2 * n).trailing_zeros();
    let big_n = 2 * n / two_e;
    let mut seqs = vec![];
    if n >= 3 {
        seqs.push(format!("0 -> M_0 -> {} -> M_0", pm(1)));
        seqs.push(format!("0 -> {a} -> M_0^2 + {b} -> {a} -> 0", a = pm(1), b = pm(2)));
        for i in 2..n_ - 1 {
            seqs.push(format!("0 -> {a} -> {b} + {c} -> {a} -> 0", a = pm(i), b = pm(i - 1), c = pm(i + 1)));
        }
        let prev = if n_ == 3 { pm(1) } else { pm(n_ - 2) };
        seqs.push(format!("0 -> {a} -> {prev} + M_{n} -> {a} -> 0", a = pm(n_ - 1)));
        seqs.push(format!("0 -> M_{n} -> {}^2 -> M_{n} -> 0", pm(n_ - 1)));
    }
    let z2e = format!("z^{big_n}");
    entry(
        format!("typeBC-n{n}"),
        format!("BC~ example, l = Q(zeta_{}), k = real subfield", 2 * n),
        job(
            cyclotomic(2 * n, &[-1]),
            2,
            vec![gen(&[&["z", "0"], &["0", "z^-1"]], 1), gen(&[&["0", &z2e], &["1", "0"]], -1)],
            labels(&[0], "z", 2 * n, LabelStyle::PlusMinus),
        ),
        Expected {
            dynkin_type: Some(format!("BCn~({n})")),
            class_group: Some(vec![]),
            gorenstein: Some(true),
            vertices: Some(n as usize + 1),
            kernel_order: Some(2 * n as usize),
            valuations: vec![
                ("M_0".into(), pm(1), (2, 1)),
                (pm(n_ - 1), format!("M_{n}"), (2, 1)),
                (format!("M_{n}"), pm(n_ - 1), (1, 2)),
            ],
            sequences: seqs,
            ..Default::default()
        },
    )
}

fn g22_expected() -> Expected {
    Expected {
        dynkin_type: Some("G22~".into()),
        class_group: Some(vec![]),
        gorenstein: Some(true),
        vertices: Some(3),
        kernel_order: Some(8),
        orbit_shape: Some(vec![(1, 1), (1, 2), (3, 1)]),
        ..Default::default()
    }
}

fn g22_notes(field: &str) -> Vec<String> {
    vec![
        "alpha = ([[i, 0], [0, -i]], id)".into(),
        "beta = ([[0, 1], [-1, 0]], id)".into(),
        "gamma = (1/sqrt(2) [[zeta^7, zeta^7], [zeta^13, zeta]], sigma)".into(),
        format!("zeta = zeta_24 in k, i = zeta^6, sqrt(2) = zeta^3 + zeta^21; {field}"),
    ]
}

/// The G22~ generators with entries computed in `f` from a primitive 24th root.
fn g22_generators(f: &Field, zeta: &crate::exactfield::FieldElement, id: i64, sigma: i64) -> Vec<GeneratorSpec> {
    let p = |e: u128| f.pow_u(zeta, e);
    let s = |x| f.format(&x);
    let i = p(6);
    let sqrt2 = f.add(&p(3), &p(21));
    let inv = f.inv(&sqrt2).expect("sqrt 2 is a unit");
    let c = |e: u128| s(f.mul(&inv, &p(e)));
    vec![
        gen_owned(vec![vec![s(i.clone()), s(f.zero())], vec![s(f.zero()), s(f.neg(&i))]], id),
        gen_owned(vec![vec![s(f.zero()), s(f.one())], vec![s(f.neg(&f.one())), s(f.zero())]], id),
        gen_owned(vec![vec![c(7), c(7)], vec![c(13), c(1)]], sigma),
    ]
}

fn type_g22_finite() -> CatalogEntry {
    let f = Field::new(FieldSpec::Finite { p: 5, m: 6 }).expect("F_5^6");
    let zeta = f.root_of_unity(24).expect("24 | 5^2 - 1");
    let gens = g22_generators(&f, &zeta, 0, 2);
    let mut e = entry(
        "typeG22",
        "G22~ example over F_5^6 / F_5^2",
        job(FieldSection { spec: f.spec().clone(), galois: vec![2] }, 2, gens, None),
        g22_expected(),
    );
    e.notes = g22_notes(&format!("l = F_5[t]/({}), sigma = x -> x^25", f.modulus_string()));
    e
}

fn type_g22_cyclotomic() -> CatalogEntry {
    let f = Field::cyclotomic(72);
    let zeta = f.pow_u(&f.gen(), 3);
    let gens = g22_generators(&f, &zeta, 1, 25);
    let mut e = entry(
        "typeG22-q72",
        "G22~ example over Q(zeta_72) / Q(zeta_24)",
        job(cyclotomic(72, &[25]), 2, gens, None),
        g22_expected(),
    );
    e.notes = g22_notes("l = Q(z), z = zeta_72, zeta = z^3, sigma = sigma_25");
    e
}

fn nongor() -> CatalogEntry {
    let mut e = entry(
        "nongor",
        "non-Gorenstein example over Q(zeta_8) / Q",
        job(
            cyclotomic(8, &[3, 5]),
            2,
            vec![gen(&[&["0", "z"], &["1", "0"]], 3), gen(&[&["0", "z^7"], &["z", "0"]], 5)],
            labels(&[0, 0], "z", 8, LabelStyle::List),
        ),
        Expected {
            dynkin_type: Some("unknown".into()),
            class_group: Some(vec![2]),
            gorenstein: Some(false),
            isolated: Some(true),
            vertices: Some(5),
            kernel_order: Some(8),
            omega: Some("M_4".into()),
            nu: vec![
                ("M_0".into(), "M_4".into()),
                ("M_4".into(), "M_0".into()),
                ("M_{1,3}".into(), "M_{5,7}".into()),
                ("M_{5,7}".into(), "M_{1,3}".into()),
                ("M_{2,6}".into(), "M_{2,6}".into()),
            ],
            valuations: vec![
                ("M_0".into(), "M_{5,7}".into(), (2, 1)),
                ("M_4".into(), "M_{1,3}".into(), (2, 1)),
                ("M_{1,3}".into(), "M_0".into(), (1, 2)),
                ("M_{5,7}".into(), "M_4".into(), (1, 2)),
                ("M_{1,3}".into(), "M_{2,6}".into(), (1, 1)),
                ("M_{2,6}".into(), "M_{5,7}".into(), (1, 1)),
            ],
            sequences: strs(&[
                "0 -> M_4 -> M_{1,3} -> M_0",
                "0 -> M_0 -> M_{5,7} -> M_4 -> 0",
                "0 -> M_{5,7} -> M_4^2 + M_{2,6} -> M_{1,3} -> 0",
                "0 -> M_{2,6} -> M_{1,3} + M_{5,7} -> M_{2,6} -> 0",
                "0 -> M_{1,3} -> M_0^2 + M_{2,6} -> M_{5,7} -> 0",
            ]),
            ..Default::default()
        },
    );
    e.notes = strs(&["alpha = ([[0, zeta], [1, 0]], sigma_3)", "beta = ([[0, zeta^7], [zeta, 0]], sigma_5)", "zeta = zeta_8"]);
    e
}

fn d3_isolated_expected() -> Expected {
    Expected {
        dynkin_type: Some("unknown".into()),
        class_group: Some(vec![]),
        gorenstein: Some(true),
        isolated: Some(true),
        vertices: Some(3),
        kernel_order: Some(7),
        omega: Some("M_0".into()),
        valuations: vec![
            ("M_0".into(), "M_{3,5,6}".into(), (3, 1)),
            ("M_{1,2,4}".into(), "M_0".into(), (1, 3)),
            ("M_{3,5,6}".into(), "M_{1,2,4}".into(), (2, 2)),
            ("M_{1,2,4}".into(), "M_{3,5,6}".into(), (1, 1)),
            ("M_{1,2,4}".into(), "M_{1,2,4}".into(), (1, 1)),
            ("M_{3,5,6}".into(), "M_{3,5,6}".into(), (1, 1)),
        ],
        sequences: strs(&[
            "0 -> M_0 -> M_{3,5,6} -> M_{1,2,4} -> M_0",
            "0 -> M_{1,2,4} -> M_0^3 + M_{1,2,4} + M_{3,5,6} -> M_{1,2,4} + M_{3,5,6}^2 -> M_{1,2,4} -> 0",
            "0 -> M_{3,5,6} -> M_{1,2,4}^2 + M_{3,5,6} -> M_0^3 + M_{1,2,4} + M_{3,5,6} -> M_{3,5,6} -> 0",
        ]),
        ..Default::default()
    }
}

fn d3_isolated(finite: bool) -> CatalogEntry {
    let (field, zeta, sigma) = if finite {
        (FieldSection { spec: FieldSpec::Finite { p: 2, m: 3 }, galois: vec![1] }, "t", 1)
    } else {
        (cyclotomic(7, &[2]), "z", 2)
    };
    let z = |e: u32| if e == 1 { zeta.to_string() } else { format!("{zeta}^{e}") };
    let (a, b, c) = (z(1), z(2), z(4));
    let one = if finite { 0 } else { 1 };
    let gens = vec![
        gen(&[&[&a, "0", "0"], &["0", &b, "0"], &["0", "0", &c]], one),
        gen(&[&["0", "0", "1"], &["1", "0", "0"], &["0", "1", "0"]], sigma),
    ];
    let (name, summary) = if finite {
        ("d3-isolated-n2-f8", "d = 3 Gorenstein isolated example over F_8 / F_2")
    } else {
        ("d3-isolated-n2", "d = 3 Gorenstein isolated example over Q(zeta_7) / Q(sqrt(-7))")
    };
    let mut e = entry(name, summary, job(field, 3, gens, labels(&[0], zeta, 7, LabelStyle::List)), d3_isolated_expected());
    e.notes = strs(&["alpha = (diag(zeta, zeta^2, zeta^4), id)", "beta = ([e2 e3 e1], sigma)", "zeta = zeta_7"]);
    e
}

fn d3_nonisolated(n: u64) -> CatalogEntry {
    let sequences = match n {
        // M_{±0} and M_{±n} in the listed rows stand for W_0 + W_0 and
        // W_n + W_n, i.e. M_0^2 and M_n^2; the last row's first term is
        // nu(M_n) = M_0
        2 => strs(&[
            "0 -> M_2 -> M_0 + M_{±1} -> M_{±1} + M_2 -> M_0",
            "0 -> M_{±1} -> M_0^2 + M_{±1} + M_2^2 -> M_0^2 + M_{±1} + M_2^2 -> M_{±1} -> 0",
            "0 -> M_0 -> M_{±1} + M_2 -> M_0 + M_{±1} -> M_2 -> 0",
        ]),
        // odd-n rows with M_{±(n+1)/2}^2 next to M_{±(n+3)/2} read as M_{±(n-1)/2}^2
        3 => strs(&[
            "0 -> M_3 -> M_0 + M_{±2} -> M_{±1} + M_3 -> M_0",
            "0 -> M_{±2} -> M_{±1}^2 + M_3^2 -> M_0^2 + M_{±2}^2 -> M_{±1} -> 0",
            "0 -> M_{±1} -> M_0^2 + M_{±2}^2 -> M_{±1}^2 + M_3^2 -> M_{±2} -> 0",
            "0 -> M_0 -> M_{±1} + M_3 -> M_0 + M_{±2} -> M_3 -> 0",
        ]),
        _ => vec![],
    };
    let mut e = entry(
        format!("d3-nonisolated-n{n}"),
        format!("d = 3 non-Gorenstein non-isolated example over Q(zeta_{}) / real subfield", 2 * n),
        job(
            cyclotomic(2 * n, &[-1]),
            3,
            vec![
                gen(&[&["z", "0", "0"], &["0", "-1", "0"], &["0", "0", "z^-1"]], 1),
                gen(&[&["0", "0", "1"], &["0", "1", "0"], &["1", "0", "0"]], -1),
            ],
            labels(&[0], "z", 2 * n, LabelStyle::PlusMinus),
        ),
        Expected {
            dynkin_type: Some("unknown".into()),
            class_group: Some(vec![2]),
            gorenstein: Some(false),
            isolated: Some(false),
            vertices: Some(n as usize + 1),
            kernel_order: Some(2 * n as usize),
            omega: Some(format!("M_{n}")),
            sequences,
            ..Default::default()
        },
    );
    e.notes = strs(&["alpha = (diag(zeta, -1, zeta^-1), id)", "beta = (antidiag(1, 1, 1), sigma)", "zeta = zeta_2n"]);
    e
}

/// Klein's generators of the finite subgroups of SL_2(C), entries in
/// Q(zeta_n) for the returned n.
fn klein(kind: char, n: u64) -> (u64, Vec<Vec<Vec<String>>>) {
    let s = |rows: &[&[&str]]| rows.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect::<Vec<Vec<String>>>();
    match kind {
        'A' if n == 1 => (1, vec![s(&[&["-1", "0"], &["0", "-1"]])]),
        'A' => (n + 1, vec![s(&[&["z", "0"], &["0", "z^-1"]])]),
        'D' => {
            let m = 2 * n - 4;
            let c = crate::exactfield::arith::lcm(m, 4);
            let (r, i) = (format!("z^{}", c / m), format!("z^{}", c / 4));
            let rinv = format!("z^-{}", c / m);
            (c, vec![s(&[&[&r, "0"], &["0", &rinv]]), s(&[&["0", &i], &[&i, "0"]])])
        }
        'E' if n == 6 || n == 7 => {
            // z = zeta_24, zeta_8 = z^3, i = z^6, sqrt 2 = z^3 + z^21
            let mut g = vec![
                s(&[&["z^6", "0"], &["0", "z^18"]]),
                s(&[&["0", "z^6"], &["z^6", "0"]]),
                s(&[&["z^3/(z^3 + z^21)", "z^9/(z^3 + z^21)"], &["z^3/(z^3 + z^21)", "z^21/(z^3 + z^21)"]]),
            ];
            if n == 7 {
                g.push(s(&[&["z^9", "0"], &["0", "z^15"]]));
            }
            (24, g)
        }
        'E' => {
            // z = zeta_60, zeta_5 = z^12, sqrt 5 = 2(z^12 + z^48) + 1
            let r5 = "(2*(z^12 + z^48) + 1)";
            let q = |x: &str| format!("({x})/{r5}");
            (
                60,
                vec![
                    vec![vec![q("z^48 - z^12"), q("z^24 - z^36")], vec![q("z^24 - z^36"), q("z^12 - z^48")]],
                    vec![vec![q("z^24 - z^48"), q("z^48 - 1")], vec![q("1 - z^12"), q("z^36 - z^12")]],
                ],
            )
        }
        _ => unreachable!("no Klein group {kind}{n}"),
    }
}

fn klein_order(kind: char, n: u64) -> usize {
    match (kind, n) {
        ('A', n) => n as usize + 1,
        ('D', n) => 4 * (n as usize - 2),
        ('E', 6) => 24,
        ('E', 7) => 48,
        _ => 120,
    }
}

fn ade(kind: char, n: u64) -> CatalogEntry {
    let (c, mats) = klein(kind, n);
    let gens = mats.into_iter().map(|m| gen_owned(m, 1)).collect();
    let (dynkin, cl) = match kind {
        'A' if n == 1 => ("A12~".to_string(), vec![2]),
        'A' => (format!("An~({n})"), vec![n + 1]),
        'D' if n % 2 == 1 => (format!("Dn~({n})"), vec![4]),
        'D' => (format!("Dn~({n})"), vec![2, 2]),
        _ => (
            format!("E{n}~"),
            match n {
                6 => vec![3],
                7 => vec![2],
                _ => vec![],
            },
        ),
    };
    entry(
        format!("ade-{kind}{n}"),
        format!("Klein group {kind}_{n} in SL_2(Q(zeta_{c})), trivial Galois action"),
        job(cyclotomic(c, &[]), 2, gens, None),
        Expected {
            dynkin_type: Some(dynkin),
            class_group: Some(cl),
            gorenstein: Some(true),
            vertices: Some(if kind == 'A' && n == 1 { 2 } else { n as usize + 1 }),
            kernel_order: Some(klein_order(kind, n)),
            ..Default::default()
        },
    )
}

/// G = <H, (I, complex conjugation)> standing in for C/R.
fn real(kind: char, n: u64) -> CatalogEntry {
    let (c, mut mats) = klein(kind, n);
    if kind == 'D' {
        // conjugate of Klein's D_n on which complex conjugation induces
        // inversion on H^ab; Klein's own generator gives D~_n for odd n
        mats[1] = vec![vec!["0".into(), "1".into()], vec!["-1".into(), "0".into()]];
    }
    // Q has no complex conjugation; use Q(i) for A_1
    let c = if c == 1 { 4 } else { c };
    let mut gens: Vec<GeneratorSpec> = mats.into_iter().map(|m| gen_owned(m, 1)).collect();
    gens.push(gen(&[&["1", "0"], &["0", "1"]], -1));
    let (dynkin, cl, vertices) = match kind {
        'A' if n == 1 => ("A12~".to_string(), vec![2], 2),
        'A' => (format!("An~({n})"), vec![n + 1], n as usize + 1),
        'D' if n % 2 == 0 => (format!("Dn~({n})"), vec![2, 2], n as usize + 1),
        'D' => (format!("BDn~({})", n - 1), vec![2], n as usize),
        _ => match n {
            6 => ("F42~".to_string(), vec![], 5),
            7 => ("E7~".to_string(), vec![2], 8),
            _ => ("E8~".to_string(), vec![], 9),
        },
    };
    entry(
        format!("real-{kind}{n}"),
        format!("C/R table row {kind}_{n}, realized over Q(zeta_{c}) / real subfield"),
        job(cyclotomic(c, &[-1]), 2, gens, None),
        Expected {
            dynkin_type: Some(dynkin),
            class_group: Some(cl),
            gorenstein: Some(true),
            vertices: Some(vertices),
            kernel_order: Some(klein_order(kind, n)),
            surrogate: true,
            ..Default::default()
        },
    )
}

fn type_bd(n: u64) -> CatalogEntry {
    let s = 2 * n as i64 - 1;
    let mut e = entry(
        format!("typeBD-n{n}"),
        format!("BD~ example, l = Q(zeta_{}), sigma = sigma_{s}", 4 * n),
        job(
            cyclotomic(4 * n, &[s]),
            2,
            vec![gen(&[&["0", "1"], &["-1", "0"]], 1), gen(&[&["0", "-z^3"], &["z", "0"]], s)],
            None,
        ),
        Expected {
            dynkin_type: Some(format!("BDn~({})", n + 1)),
            class_group: Some(vec![2]),
            gorenstein: Some(true),
            vertices: Some(n as usize + 2),
            kernel_order: Some(4 * n as usize),
            ..Default::default()
        },
    );
    e.notes = strs(&["alpha = ([[0, 1], [-1, 0]], id)", "beta = ([[0, -zeta^3], [zeta, 0]], sigma)", "zeta = zeta_4n, sigma(zeta) = -zeta^-1"]);
    e
}

fn trivial() -> CatalogEntry {
    entry(
        "trivial-d2",
        "trivial group on l^2, l = Q",
        job(cyclotomic(1, &[]), 2, vec![gen(&[&["1", "0"], &["0", "1"]], 1)], None),
        Expected {
            dynkin_type: Some("A0~".into()),
            class_group: Some(vec![]),
            gorenstein: Some(true),
            vertices: Some(1),
            kernel_order: Some(1),
            valuations: vec![("M0".into(), "M0".into(), (2, 2))],
            ..Default::default()
        },
    )
}

pub fn entries() -> Vec<CatalogEntry> {
    let mut v = vec![trivial()];
    v.extend((1..=4).map(type_cl));
    v.extend((2..=4).map(type_c));
    v.extend((1..=4).map(type_bc));
    v.push(type_g22_finite());
    v.push(type_g22_cyclotomic());
    v.push(nongor());
    v.push(d3_isolated(false));
    v.push(d3_isolated(true));
    v.push(d3_nonisolated(2));
    v.push(d3_nonisolated(3));
    v.extend((2..=4).map(type_bd));
    v.extend((1..=5).map(|n| ade('A', n)));
    v.extend((4..=7).map(|n| ade('D', n)));
    v.extend((6..=8).map(|n| ade('E', n)));
    v.extend((1..=3).map(|n| real('A', n)));
    v.extend((4..=7).map(|n| real('D', n)));
    v.extend((6..=8).map(|n| real('E', n)));
    v
}

pub fn find(name: &str) -> Result<CatalogEntry> {
    entries().into_iter().find(|e| e.name == name).ok_or_else(|| Error::UnknownEntry(name.into()))
}

/// Summands of each term sorted, so that "A + B" and "B + A" compare equal.
pub fn normalize_sequence(s: &str) -> String {
    s.split(" -> ")
        .map(|t| {
            let mut p: Vec<&str> = t.split(" + ").collect();
            p.sort_unstable();
            p.join(" + ")
        })
        .collect::<Vec<_>>()
        .join(" -> ")
}

impl Expected {
    /// Mismatches between this fragment and a computed analysis.
    pub fn check(&self, a: &Analysis) -> Vec<String> {
        let mut bad = Vec::new();
        fn cmp(bad: &mut Vec<String>, what: &str, want: String, got: String) {
            if want != got {
                bad.push(format!("{what}: expected {want}, got {got}"));
            }
        }
        if let Some(k) = self.kernel_order {
            cmp(&mut bad, "|H|", k.to_string(), a.h.order().to_string());
        }
        if let Some(g) = self.gorenstein {
            cmp(&mut bad, "gorenstein", g.to_string(), a.flags.gorenstein.to_string());
        }
        if let Some(i) = self.isolated {
            cmp(&mut bad, "isolated", i.to_string(), a.flags.isolated.to_string());
        }
        if let Some(shape) = &self.orbit_shape {
            let mut got: Vec<(usize, u64)> = a.solution.orbits.iter().map(|o| (o.members.len(), o.dim_w)).collect();
            got.sort_unstable();
            cmp(&mut bad, "orbit shape", format!("{shape:?}"), format!("{got:?}"));
        }
        let Some(q) = a.qg() else {
            bad.push(format!("undetermined multiplicities on orbits {:?}", a.solution.ambiguous()));
            return bad;
        };
        if let Some(n) = self.vertices {
            cmp(&mut bad, "vertices", n.to_string(), q.vertices.len().to_string());
        }
        if let Some(t) = &self.dynkin_type {
            cmp(&mut bad, "type", t.clone(), a.dynkin.as_ref().map_or("none".into(), |d| d.to_string()));
        }
        if let Some(c) = &self.class_group {
            let got = a.class_group.as_ref().map_or("none".into(), |g| format!("{:?}", g.invariant_factors));
            cmp(&mut bad, "class group", format!("{c:?}"), got);
        }
        let names: Vec<String> = (0..q.vertices.len()).map(|i| a.name(i)).collect();
        let find = |n: &str| names.iter().position(|x| x == n);
        if let Some(w) = &self.omega {
            cmp(&mut bad, "omega", w.clone(), names[q.omega()].clone());
        }
        for (x, y) in &self.nu {
            match find(x) {
                Some(i) => cmp(&mut bad, &format!("nu({x})"), y.clone(), names[q.nu[i]].clone()),
                None => bad.push(format!("no vertex {x}")),
            }
        }
        for (x, y, v) in &self.valuations {
            match (find(x), find(y)) {
                (Some(i), Some(j)) => cmp(&mut bad, &format!("valuation {x} -> {y}"), format!("{v:?}"), format!("{:?}", q.valuation(i, j))),
                _ => bad.push(format!("no vertices {x}, {y}")),
            }
        }
        if !self.sequences.is_empty() {
            let mut want: Vec<String> = self.sequences.iter().map(|s| normalize_sequence(s)).collect();
            let mut got: Vec<String> =
                a.sequences.iter().map(|s| normalize_sequence(&s.format_with(|i| names[i].clone()))).collect();
            if self.partial_sequences {
                for w in want.iter().filter(|w| !got.contains(w)) {
                    bad.push(format!("sequence {w} not found"));
                }
            } else {
                want.sort();
                got.sort();
                cmp(&mut bad, "sequences", format!("{want:?}"), format!("{got:?}"));
            }
        }
        bad
    }
}
