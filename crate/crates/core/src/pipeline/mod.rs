//! Job orchestration: field -> group -> characters -> orbits -> quivers ->
//! report, plus the built-in catalog and the self-test runner.

pub mod catalog;
pub mod job;
pub mod selftest;

use std::fmt::Write;

use serde::Serialize;

use crate::arquiver::{
    almost_split_sequences, mckay_g, mckay_h, recognize_type, AlmostSplitSequence, Arrow, DynkinType, SequenceKind, Standard,
    ValuedQuiver,
};
use crate::chartab::{character_table, Character, CharacterTable, Method};
use crate::error::{Error, Result};
use crate::exactfield::{Field, FieldSpec, GaloisSubgroup};
use crate::matgroup::{
    generate_group, gorenstein_flag, is_small, isolated_flag, kernel_and_cosets, smallness_witness, FiniteGroup, KernelSubgroup,
    DEFAULT_CAP,
};
use crate::skewsolve::{
    check_res_ind, class_group, compute_orbits, format_group, gmodule_multiplicities, solve_multiplicities, ClassGroup, Context, Solution, SolverOptions,
};

pub use job::{JobOptions, JobSpec, LabelSpec, LabelStyle};

pub const SCHEMA: &str = "mckayq-report/1";

/// Everything computed for one job.
pub struct Analysis {
    pub job: JobSpec,
    pub field: Field,
    pub gal: GaloisSubgroup,
    pub g: FiniteGroup,
    pub h: KernelSubgroup,
    pub table: CharacterTable,
    /// Exterior powers of Res U, p = 0..d.
    pub wedge: Vec<Character>,
    pub solution: Solution,
    pub flags: Flags,
    /// (MK(lH), MK(l*G)); absent while some a is undetermined.
    pub quivers: Option<(ValuedQuiver, ValuedQuiver)>,
    pub sequences: Vec<AlmostSplitSequence>,
    pub class_group: Option<ClassGroup>,
    pub dynkin: Option<DynkinType>,
    /// Vertex names from the job's label spec.
    pub names: Option<Vec<String>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Flags {
    pub small: bool,
    pub gorenstein: bool,
    pub isolated: bool,
}

pub fn solver_options(o: &JobOptions) -> SolverOptions {
    let mut s = SolverOptions::default();
    if let Some(n) = o.saturation {
        s.saturation_iterations = n;
    }
    if let Some(b) = o.norm_search_bound {
        s.norm_search_bound = b;
    }
    s
}

pub fn analyze(job: &JobSpec) -> Result<Analysis> {
    analyze_with(job, solver_options(&job.options))
}

/// As `analyze` with explicit solver options (the `force_a` test hook lives there).
pub fn analyze_with(job: &JobSpec, opts: SolverOptions) -> Result<Analysis> {
    let parsed = job.parse()?;
    let field = parsed.field;
    let gal = parsed.gal;
    let g = generate_group(&field, job.group.d, &parsed.generators, job.options.cap.unwrap_or(DEFAULT_CAP))?;
    let h = kernel_and_cosets(&g, &gal)?;
    if let Some(w) = smallness_witness(&g, &h) {
        return Err(Error::SmallnessViolation(g.element(w).format(&field)));
    }
    let flags = Flags { small: is_small(&g, &h), gorenstein: gorenstein_flag(&g, &h), isolated: isolated_flag(&g, &h) };
    let table = character_table(&h, &field)?;
    let wedge = table.wedge_powers(&g, &h)?;
    let orbits = compute_orbits(&table, &g, &h)?;
    let ctx = Context { table: &table, g: &g, h: &h, gal: &gal, wedges: &wedge };
    let solution = solve_multiplicities(&ctx, orbits, &opts)?;
    let mut a = Analysis {
        job: job.clone(),
        field,
        gal,
        g,
        h,
        table,
        wedge,
        solution,
        flags,
        quivers: None,
        sequences: vec![],
        class_group: None,
        dynkin: None,
        names: None,
    };
    if !a.solution.ambiguous().is_empty() {
        return Ok(a);
    }
    let orbits = &a.solution.orbits;
    {
        let ctx = Context { table: &a.table, g: &a.g, h: &a.h, gal: &a.gal, wedges: &a.wedge };
        check_res_ind(&ctx, orbits)?;
    }
    // each exterior power of V is an l*G-module, so its restriction decomposes over the orbits
    for w in &a.wedge {
        gmodule_multiplicities(&a.table, orbits, w)?;
    }
    let s = Standard { table: &a.table, wedge: &a.wedge };
    let qh = mckay_h(&s)?;
    let qg = mckay_g(&s, orbits, &qh)?;
    a.sequences = almost_split_sequences(&s, orbits, &qg)?;
    a.class_group = Some(class_group(&a.table, orbits)?);
    a.dynkin = Some(recognize_type(&qg, job.group.d, flags.gorenstein));
    a.quivers = Some((qh, qg));
    a.names = job.labels.as_ref().map(|l| vertex_names(&a, l)).transpose()?;
    Ok(a)
}

/// Orbit names from the eigenvalue of a fixed element of H on each W.
fn vertex_names(a: &Analysis, spec: &LabelSpec) -> Result<Vec<String>> {
    let f = &a.field;
    let gens = a.g.generators();
    let mut gi = a.g.index_of(&crate::matgroup::GroupElement::identity(f, a.g.dim())).expect("identity");
    for &k in &spec.element {
        let x = *gens.get(k).ok_or_else(|| Error::InvalidJob(format!("labels.element: no generator {k}")))?;
        gi = a.g.mul(gi, x);
    }
    let hi = *a.h.pos.get(&gi).ok_or_else(|| Error::InvalidJob("labels.element: not in H".into()))?;
    let c = a.h.class_of[hi];
    let zeta = f.parse(&spec.zeta).map_err(|e| Error::InvalidJob(format!("labels.zeta: {e}")))?;
    let powers: Vec<_> = (0..spec.order).map(|j| f.pow_u(&zeta, j as u128)).collect();
    let mut out = Vec::new();
    for o in &a.solution.orbits {
        let mut js = Vec::new();
        for &m in &o.members {
            let chi = &a.table.irreducibles[m];
            let v = a.table.embed(&chi.values[c]);
            let j = powers.iter().position(|p| *p == v).filter(|_| a.table.degree(chi) == 1);
            js.push(j.ok_or_else(|| Error::InvalidJob(format!("labels: W{m} is not named by zeta^j")))? as u64);
        }
        js.sort_unstable();
        let n = spec.order;
        let name = match (spec.style, js.as_slice()) {
            (_, [j]) => format!("M_{j}"),
            (LabelStyle::PlusMinus, [x, y]) if x + y == n => format!("M_{{±{x}}}"),
            _ => format!("M_{{{}}}", js.iter().map(|j| j.to_string()).collect::<Vec<_>>().join(",")),
        };
        out.push(name);
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct FieldReport {
    #[serde(flatten)]
    pub spec: FieldSpec,
    pub modulus: String,
    /// Elements of Gal(l/k).
    pub galois: Vec<u64>,
    pub degree: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct CharacterReport {
    pub method: &'static str,
    pub exponent: u64,
    pub class_sizes: Vec<usize>,
    pub degrees: Vec<u64>,
    /// Values in Q(zeta_e), z = zeta_e.
    pub values: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct OrbitReport {
    pub label: String,
    pub members: Vec<usize>,
    pub t: usize,
    pub dim_w: u64,
    pub a: Option<u64>,
    pub b: Option<u64>,
    pub candidates: Vec<u64>,
    pub provenance: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VertexReport {
    pub label: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub rank: u64,
    pub is_r: bool,
    pub is_omega: bool,
    pub is_projective: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct KernelQuiverReport {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    pub nu: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct SequenceReport {
    pub target: usize,
    pub kind: SequenceKind,
    pub terms: Vec<Vec<u64>>,
    pub text: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub named: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClassGroupReport {
    pub invariant_factors: Vec<u64>,
    pub display: String,
    pub elements: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub field: FieldReport,
    pub d: usize,
    pub group_order: usize,
    pub kernel_order: usize,
    pub flags: Flags,
    pub characters: CharacterReport,
    pub orbits: Vec<OrbitReport>,
    pub ambiguous: Vec<usize>,
    pub kernel_quiver: Option<KernelQuiverReport>,
    pub vertices: Vec<VertexReport>,
    pub arrows: Vec<Arrow>,
    pub nu: Vec<usize>,
    pub omega: Option<usize>,
    pub sequences: Vec<SequenceReport>,
    pub class_group: Option<ClassGroupReport>,
    pub dynkin_type: Option<DynkinType>,
    pub dynkin_reason: Option<String>,
}

impl Analysis {
    pub fn qg(&self) -> Option<&ValuedQuiver> {
        self.quivers.as_ref().map(|q| &q.1)
    }

    pub fn name(&self, i: usize) -> String {
        match &self.names {
            Some(n) => n[i].clone(),
            None => self.qg().map_or_else(|| self.solution.orbits[i].label.clone(), |q| q.vertices[i].label.clone()),
        }
    }

    pub fn report(&self) -> Report {
        let t = &self.table;
        let orbits = &self.solution.orbits;
        let characters = CharacterReport {
            method: match t.method {
                Method::Dixon => "dixon",
                Method::Dual => "dual",
            },
            exponent: t.exponent,
            class_sizes: t.class_sizes.clone(),
            degrees: t.irreducibles.iter().map(|c| t.degree(c)).collect(),
            values: t.irreducibles.iter().map(|c| t.format_values(c)).collect(),
        };
        let orbit_reports = orbits
            .iter()
            .map(|o| OrbitReport {
                label: o.label.clone(),
                members: o.members.clone(),
                t: o.t,
                dim_w: o.dim_w,
                a: o.a(),
                b: o.b(self.gal.order()),
                candidates: o.candidates.clone(),
                provenance: o.provenance.clone(),
            })
            .collect();
        let mut r = Report {
            schema: SCHEMA,
            field: FieldReport {
                spec: self.field.spec().clone(),
                modulus: self.field.modulus_string(),
                galois: self.gal.elements().to_vec(),
                degree: self.gal.order(),
            },
            d: self.g.dim(),
            group_order: self.g.order(),
            kernel_order: self.h.order(),
            flags: self.flags,
            characters,
            orbits: orbit_reports,
            ambiguous: self.solution.ambiguous(),
            kernel_quiver: None,
            vertices: vec![],
            arrows: vec![],
            nu: vec![],
            omega: None,
            sequences: vec![],
            class_group: None,
            dynkin_type: None,
            dynkin_reason: None,
        };
        if let Some((qh, qg)) = &self.quivers {
            r.kernel_quiver = Some(KernelQuiverReport {
                vertices: qh.vertices.iter().map(|v| v.label.clone()).collect(),
                arrows: qh.arrows.clone(),
                nu: qh.nu.clone(),
            });
            r.vertices = qg
                .vertices
                .iter()
                .enumerate()
                .map(|(i, v)| VertexReport {
                    label: v.label.clone(),
                    name: self.names.as_ref().map(|n| n[i].clone()),
                    rank: v.rank,
                    is_r: v.is_r,
                    is_omega: v.is_omega,
                    is_projective: v.is_projective,
                })
                .collect();
            r.arrows = qg.arrows.clone();
            r.nu = qg.nu.clone();
            r.omega = Some(qg.omega());
            r.sequences = self
                .sequences
                .iter()
                .map(|s| SequenceReport {
                    target: s.target,
                    kind: s.kind,
                    terms: s.terms.clone(),
                    text: s.format(qg),
                    named: self.names.as_ref().map(|n| s.format_with(|i| n[i].clone())),
                })
                .collect();
        }
        if let Some(cg) = &self.class_group {
            r.class_group = Some(ClassGroupReport {
                invariant_factors: cg.invariant_factors.clone(),
                display: format_group(&cg.invariant_factors),
                elements: cg.elements.iter().map(|&i| self.name(i)).collect(),
            });
        }
        if let Some(dt) = &self.dynkin {
            r.dynkin_reason = dt.reason.clone();
            r.dynkin_type = Some(dt.clone());
        }
        r
    }
}

impl Report {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    fn vertex(&self, i: usize) -> String {
        let v = &self.vertices[i];
        match &v.name {
            Some(n) => format!("{} ({})", v.label, n),
            None => v.label.clone(),
        }
    }

    /// Plain-text summary.
    pub fn render_text(&self) -> String {
        let mut s = String::new();
        let field = match &self.field.spec {
            FieldSpec::Cyclotomic { n } => format!("Q(zeta_{n})"),
            FieldSpec::Finite { p, m } => format!("F_{p}^{m}"),
        };
        let yn = |b: bool| if b { "yes" } else { "no" };
        let _ = writeln!(s, "field: l = {field}, Gal(l/k) = {:?}, [l:k] = {}", self.field.galois, self.field.degree);
        let _ = writeln!(s, "group: d = {}, |G| = {}, |H| = {}", self.d, self.group_order, self.kernel_order);
        let _ = writeln!(
            s,
            "flags: small {}, gorenstein {}, isolated {}",
            yn(self.flags.small),
            yn(self.flags.gorenstein),
            yn(self.flags.isolated)
        );
        let _ = writeln!(s, "orbits:");
        for o in &self.orbits {
            let show = |x: Option<u64>| x.map_or_else(|| "?".to_string(), |v| v.to_string());
            let _ = writeln!(s, "  {:<16} t = {}, dim W = {}, a = {}, b = {}", o.label, o.t, o.dim_w, show(o.a), show(o.b));
        }
        if !self.ambiguous.is_empty() {
            let _ = writeln!(s, "ambiguous orbits:");
            for &i in &self.ambiguous {
                let _ = writeln!(s, "  {} candidates for a: {:?}", self.orbits[i].label, self.orbits[i].candidates);
            }
            return s;
        }
        let _ = writeln!(s, "vertices:");
        for (i, v) in self.vertices.iter().enumerate() {
            let mut tags = vec![format!("rank {}", v.rank)];
            if v.is_r {
                tags.push("R".into());
            }
            if v.is_omega {
                tags.push("omega".into());
            }
            let _ = writeln!(s, "  {} [{}]", self.vertex(i), tags.join(", "));
        }
        let _ = writeln!(s, "arrows:");
        for a in &self.arrows {
            let _ = writeln!(s, "  {} -> {} ({},{})", self.vertices[a.src].label, self.vertices[a.dst].label, a.d, a.d_prime);
        }
        let moved: Vec<String> = (0..self.nu.len())
            .filter(|&i| self.nu[i] != i)
            .map(|i| format!("{} -> {}", self.vertices[i].label, self.vertices[self.nu[i]].label))
            .collect();
        let _ = writeln!(s, "nu: {}", if moved.is_empty() { "identity".to_string() } else { moved.join(", ") });
        if let Some(w) = self.omega {
            let _ = writeln!(s, "omega: {}", self.vertices[w].label);
        }
        let _ = writeln!(s, "sequences:");
        for q in &self.sequences {
            let _ = writeln!(s, "  {}", q.named.as_ref().unwrap_or(&q.text));
        }
        if let Some(cg) = &self.class_group {
            let _ = writeln!(s, "class group: {}", cg.display);
        }
        if let Some(dt) = &self.dynkin_type {
            match &self.dynkin_reason {
                Some(why) => {
                    let _ = writeln!(s, "type: {dt} ({why})");
                }
                None => {
                    let _ = writeln!(s, "type: {dt}");
                }
            }
        }
        s
    }

    /// Per-orbit solver trace.
    pub fn explain(&self) -> String {
        let mut s = String::new();
        for o in &self.orbits {
            let members: Vec<String> = o.members.iter().map(|m| format!("W{m}")).collect();
            let _ = writeln!(s, "{} = {{{}}}: t = {}, dim W = {}", o.label, members.join(", "), o.t, o.dim_w);
            for p in &o.provenance {
                let _ = writeln!(s, "  {p}");
            }
        }
        s
    }
}

#[cfg(test)]
mod tests;
