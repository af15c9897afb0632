use super::catalog::{entries, find};
use super::selftest::{check_entry, run};
use super::*;

fn job(text: &str) -> JobSpec {
    JobSpec::from_json(text).unwrap()
}

#[test]
fn every_catalog_entry_matches() {
    for e in entries() {
        let c = check_entry(&e);
        assert!(c.ok(), "{}: {:?}", c.name, c.failures);
    }
}

#[test]
fn reports_are_deterministic() {
    for name in ["nongor", "typeG22", "d3-isolated-n2-f8"] {
        let e = find(name).unwrap();
        let one = analyze(&e.job).unwrap().report().to_json();
        let two = analyze(&e.job).unwrap().report().to_json();
        assert_eq!(one, two, "{name}");
        let v: serde_json::Value = serde_json::from_str(&one).unwrap();
        assert_eq!(v["schema"], SCHEMA);
    }
}

#[test]
fn nongor_named_sequences() {
    let a = analyze(&find("nongor").unwrap().job).unwrap();
    let r = a.report();
    assert_eq!(r.omega.map(|i| a.name(i)).as_deref(), Some("M_4"));
    let named: Vec<&str> = r.sequences.iter().filter_map(|s| s.named.as_deref()).collect();
    assert!(named.contains(&"0 -> M_4 -> M_{1,3} -> M_0"), "{named:?}");
    assert!(!a.flags.gorenstein && a.flags.isolated);
}

#[test]
fn ambiguous_job_still_reports() {
    let mut j = find("typeC-n2").unwrap().job;
    j.options.saturation = Some(0);
    j.options.norm_search_bound = Some(0);
    let a = analyze(&j).unwrap();
    assert_eq!(a.solution.ambiguous(), vec![2]);
    assert!(a.quivers.is_none());
    let r = a.report();
    assert!(r.ambiguous.contains(&2));
    assert!(r.arrows.is_empty() && r.class_group.is_none());
    assert!(r.orbits[2].candidates.len() > 1);
}

#[test]
fn pseudo_reflection_is_rejected() {
    let j = job(r#"{"field": {"kind": "cyclotomic", "n": 1}, "group": {"d": 2, "generators": [{"matrix": [["-1","0"],["0","1"]]}]}}"#);
    assert!(matches!(analyze(&j), Err(Error::SmallnessViolation(_))));
}

#[test]
fn galois_image_must_be_everything() {
    let j = job(r#"{"field": {"kind": "cyclotomic", "n": 3, "galois": [-1]},
        "group": {"d": 2, "generators": [{"matrix": [["z","0"],["0","z^2"]]}]}}"#);
    assert!(matches!(analyze(&j), Err(Error::NotSurjectiveOntoGalois { .. })));
}

#[test]
fn field_must_split_kernel() {
    let j = job(r#"{"field": {"kind": "cyclotomic", "n": 1}, "group": {"d": 2, "generators": [{"matrix": [["0","-1"],["1","0"]]}]}}"#);
    assert!(matches!(analyze(&j), Err(Error::SplitFieldTooSmall { exponent: 4, .. })));
}

#[test]
fn cap_is_enforced() {
    let mut j = find("ade-E8").unwrap().job;
    j.options.cap = Some(50);
    assert_eq!(analyze(&j).err(), Some(Error::CapExceeded(50)));
}

#[test]
fn selftest_filter() {
    assert!(run(Some("nosuch")).is_empty());
    let c = run(Some("typeCL"));
    assert_eq!(c.len(), 4);
    assert!(c.iter().all(|c| c.ok()));
}

#[test]
fn global_suites_pass() {
    assert!(super::selftest::abelian_oracle().ok());
    let f = super::selftest::injected_fault();
    assert!(f.ok(), "{:?}", f.failures);
}

#[test]
fn klein_binary_dihedral_keeps_characters_apart() {
    // Klein's generator [[0,i],[i,0]] for D_5 is inverted by complex
    // conjugation, so the twist fixes every character of H
    let j = job(r#"{"field": {"kind": "cyclotomic", "n": 12, "galois": [-1]},
        "group": {"d": 2, "generators": [
          {"matrix": [["z^2","0"],["0","z^10"]]},
          {"matrix": [["0","z^3"],["z^3","0"]]},
          {"matrix": [["1","0"],["0","1"]], "aut": -1}]}}"#);
    let a = analyze(&j).unwrap();
    assert_eq!(a.dynkin.unwrap().to_string(), "Dn~(5)");
    assert_eq!(a.class_group.unwrap().invariant_factors, vec![4]);
}
