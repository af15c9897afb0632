use super::*;
use crate::chartab::character_table;
use crate::exactfield::{Field, FieldElement};
use crate::testutil::{setup, Setup};

struct Solved {
    s: Setup,
    t: CharacterTable,
    w: Vec<Character>,
    sol: Solution,
}

fn solve_with(s: Setup, opts: &SolverOptions) -> Result<Solved> {
    let t = character_table(&s.h, &s.f)?;
    let w = t.wedge_powers(&s.g, &s.h)?;
    let orbits = compute_orbits(&t, &s.g, &s.h)?;
    let ctx = Context { table: &t, g: &s.g, h: &s.h, gal: &s.gal, wedges: &w };
    let sol = solve_multiplicities(&ctx, orbits, opts)?;
    check_res_ind(&ctx, &sol.orbits)?;
    Ok(Solved { s, t, w, sol })
}

fn solve(s: Setup) -> Solved {
    solve_with(s, &SolverOptions::default()).unwrap()
}

/// Index of the linear character taking `x` to `value` (values in l).
fn linear(sv: &Solved, x: usize, value: &FieldElement) -> usize {
    let c = sv.s.h.class_of[sv.s.h.pos[&x]];
    (0..sv.t.irreducibles.len())
        .find(|&i| sv.t.degree(&sv.t.irreducibles[i]) == 1 && &sv.t.embed(&sv.t.irreducibles[i].values[c]) == value)
        .unwrap()
}

fn orbit_of(sv: &Solved, irr: usize) -> usize {
    sv.sol.orbits.iter().position(|o| o.members.contains(&irr)).unwrap()
}

fn type_c(n: u64) -> Setup {
    setup(Field::cyclotomic(2 * n), &[-1], &[(&[&["z", "0"], &["0", "z^-1"]], 1), (&[&["0", "1"], &["1", "0"]], -1)])
}

fn type_bc1() -> Setup {
    setup(Field::cyclotomic(4), &[-1], &[(&[&["-1", "0"], &["0", "-1"]], 1), (&[&["0", "-1"], &["1", "0"]], -1)])
}

fn nongor() -> Setup {
    setup(Field::cyclotomic(8), &[3, 5], &[(&[&["0", "z"], &["1", "0"]], 3), (&[&["0", "z^7"], &["z", "0"]], 5)])
}

fn check_tab_law(sv: &Solved) {
    let r = sv.s.gal.order();
    let total: usize = sv.sol.orbits.iter().map(|o| o.t).sum();
    assert_eq!(total, sv.t.irreducibles.len());
    for o in &sv.sol.orbits {
        let a = o.a().unwrap();
        assert_eq!(o.t as u64 * a * o.b(r).unwrap(), r as u64);
        for &m in &o.members {
            assert_eq!(sv.t.degree(&sv.t.irreducibles[m]), o.dim_w);
        }
    }
}

#[test]
fn type_c_orbits_and_class_group() {
    for n in 2..=4 {
        let sv = solve(type_c(n));
        check_tab_law(&sv);
        let sizes: Vec<usize> = sv.sol.orbits.iter().map(|o| o.t).collect();
        assert_eq!(sizes.iter().filter(|&&t| t == 1).count(), 2);
        assert_eq!(sizes.len() as u64, n + 1);
        assert!(sv.sol.orbits.iter().all(|o| o.a() == Some(1)));
        let cl = class_group(&sv.t, &sv.sol.orbits).unwrap();
        assert_eq!(cl.invariant_factors, vec![2]);
        // W_n: alpha -> -1, settled by the extension test
        let alpha = sv.s.g.generators()[0];
        let wn = linear(&sv, alpha, &sv.s.f.from_int(-1));
        let o = &sv.sol.orbits[orbit_of(&sv, wn)];
        assert_eq!(o.t, 1);
        assert!(o.provenance.iter().any(|p| p.starts_with("L3") && p.contains("Yes")), "{:?}", o.provenance);
    }
}

#[test]
fn type_c_standard_module() {
    let sv = solve(type_c(2));
    let m = gmodule_multiplicities(&sv.t, &sv.sol.orbits, &sv.w[1]).unwrap();
    let z = sv.s.f.gen();
    let alpha = sv.s.g.generators()[0];
    let w1 = orbit_of(&sv, linear(&sv, alpha, &z));
    let expect: Vec<u64> = (0..sv.sol.orbits.len()).map(|i| (i == w1) as u64).collect();
    assert_eq!(m, expect);
    assert_eq!(sv.sol.orbits[w1].t, 2);
    let triv = gmodule_multiplicities(&sv.t, &sv.sol.orbits, &sv.t.trivial()).unwrap();
    assert_eq!(triv[0], 1);
    assert_eq!(triv.iter().sum::<u64>(), 1);
}

#[test]
fn type_bc_norm_obstruction() {
    let sv = solve(type_bc1());
    check_tab_law(&sv);
    assert_eq!(sv.sol.orbits.len(), 2);
    let o = &sv.sol.orbits[1];
    assert_eq!((o.t, o.a(), o.b(2)), (1, Some(2), Some(1)));
    assert!(o.provenance.iter().any(|p| p.starts_with("L3") && p.contains("No")), "{:?}", o.provenance);
    assert_eq!(class_group(&sv.t, &sv.sol.orbits).unwrap().invariant_factors, Vec::<u64>::new());
    // Res U = W_1^2, so U is V_1 itself
    assert_eq!(gmodule_multiplicities(&sv.t, &sv.sol.orbits, &sv.w[1]).unwrap(), vec![0, 1]);
}

#[test]
fn type_cl_trivial_class_group() {
    for n in 1..=3u64 {
        let f = Field::cyclotomic(2 * n + 1);
        let sv = solve(setup(f, &[-1], &[(&[&["z", "0"], &["0", "z^-1"]], 1), (&[&["0", "1"], &["1", "0"]], -1)]));
        check_tab_law(&sv);
        assert_eq!(sv.sol.orbits.len() as u64, n + 1);
        assert_eq!(class_group(&sv.t, &sv.sol.orbits).unwrap().invariant_factors, Vec::<u64>::new());
    }
}

#[test]
fn nongor_orbits_and_tensor_square() {
    let sv = solve(nongor());
    check_tab_law(&sv);
    assert_eq!(sv.s.h.order(), 8);
    // label by alpha^2 acting as zeta^j
    let a2 = sv.s.g.pow(sv.s.g.generators()[0], 2);
    let z = sv.s.f.gen();
    let w: Vec<usize> = (0..8).map(|j| linear(&sv, a2, &sv.s.f.pow_u(&z, j))).collect();
    let mut parts: Vec<Vec<usize>> = sv
        .sol
        .orbits
        .iter()
        .map(|o| {
            let mut js: Vec<usize> = o.members.iter().map(|m| w.iter().position(|x| x == m).unwrap()).collect();
            js.sort();
            js
        })
        .collect();
    parts.sort();
    assert_eq!(parts, vec![vec![0], vec![1, 3], vec![2, 6], vec![4], vec![5, 7]]);
    assert!(sv.sol.orbits.iter().all(|o| o.a() == Some(1)));
    let u = &sv.w[1];
    let m = gmodule_multiplicities(&sv.t, &sv.sol.orbits, &sv.t.tensor(u, u)).unwrap();
    let (v26, v4) = (orbit_of(&sv, w[2]), orbit_of(&sv, w[4]));
    let expect: Vec<u64> = (0..5).map(|i| if i == v26 { 1 } else if i == v4 { 2 } else { 0 }).collect();
    assert_eq!(m, expect);
    let cl = class_group(&sv.t, &sv.sol.orbits).unwrap();
    assert_eq!(cl.invariant_factors, vec![2]);
    assert_eq!(cl.elements, vec![orbit_of(&sv, w[0]), v4].into_iter().collect::<BTreeSet<_>>().into_iter().collect::<Vec<_>>());
}

#[test]
fn forced_wrong_a_is_caught() {
    let plain = solve(nongor());
    let m = gmodule_multiplicities(&plain.t, &plain.sol.orbits, &plain.w[1]).unwrap();
    let u_orbit = m.iter().position(|&x| x == 1).unwrap();
    let opts = SolverOptions { force_a: vec![(u_orbit, 2)], ..Default::default() };
    let sv = solve_with(nongor(), &opts).unwrap();
    let err = gmodule_multiplicities(&sv.t, &sv.sol.orbits, &sv.w[1]).unwrap_err();
    assert_eq!(err, Error::NonDivisible { orbit: u_orbit, c: 1, a: 2 });
}

#[test]
fn non_constant_character_is_rejected() {
    let sv = solve(type_c(3));
    let i = sv.sol.orbits.iter().position(|o| o.t == 2).unwrap();
    let chi = &sv.t.irreducibles[sv.sol.orbits[i].members[0]];
    assert_eq!(gmodule_multiplicities(&sv.t, &sv.sol.orbits, chi), Err(Error::OrbitInconsistent(i)));
}

#[test]
fn trivial_galois_gives_singletons() {
    let sv = solve(setup(Field::cyclotomic(5), &[], &[(&[&["z", "0"], &["0", "z^-1"]], 1)]));
    assert_eq!(sv.sol.orbits.len(), 5);
    assert!(sv.sol.orbits.iter().all(|o| o.t == 1 && o.a() == Some(1) && o.b(1) == Some(1)));
    assert_eq!(class_group(&sv.t, &sv.sol.orbits).unwrap().invariant_factors, vec![5]);
}

/// Exhaustive search for rho: G -> l^x |x Gal with rho|H = chi, trying every
/// root of unity of l as the scalar attached to the coset generator.
fn brute_force_extends(sv: &Solved, irr: usize) -> bool {
    let (f, g, h) = (&sv.s.f, &sv.s.g, &sv.s.h);
    let gen = sv.s.gal.cyclic_generator(f).unwrap();
    let gi = h.cosets[sv.s.gal.elements().iter().position(|&a| a == gen).unwrap()];
    let r = sv.s.gal.order();
    let chi = |x: usize| sv.t.embed(&sv.t.irreducibles[irr].values[h.class_of[h.pos[&x]]]);
    // every x = hx * gi^k with unique k < r
    let split: Vec<(usize, usize)> = (0..g.order())
        .map(|x| {
            (0..r)
                .find_map(|k| {
                    let hx = g.mul(x, g.inv(g.pow(gi, k)));
                    h.pos.contains_key(&hx).then_some((hx, k))
                })
                .unwrap()
        })
        .collect();
    let n = f.conductor().unwrap();
    let order = if n % 2 == 1 { 2 * n } else { n };
    let root = f.root_of_unity(order).unwrap();
    let mul = |(x, a): &(FieldElement, u64), (y, b): &(FieldElement, u64)| {
        (f.mul(x, &f.apply_aut(*a, y)), f.aut_compose(*a, *b))
    };
    (0..order).any(|j| {
        let rg = (f.pow_u(&root, j as u128), gen);
        let rho = |x: usize| {
            let (hx, k) = split[x];
            let mut acc = (chi(hx), f.aut_identity());
            for _ in 0..k {
                acc = mul(&acc, &rg);
            }
            acc
        };
        let table: Vec<_> = (0..g.order()).map(rho).collect();
        (0..g.order()).all(|x| (0..g.order()).all(|y| mul(&table[x], &table[y]) == table[g.mul(x, y)]))
    })
}

#[test]
fn extension_test_agrees_with_brute_force() {
    let d3 = setup(
        Field::cyclotomic(4),
        &[-1],
        &[(&[&["z", "0", "0"], &["0", "-1", "0"], &["0", "0", "z^-1"]], 1), (&[&["0", "0", "1"], &["0", "1", "0"], &["1", "0", "0"]], -1)],
    );
    let cases = vec![type_c(2), type_c(3), type_c(4), type_bc1(), d3, setup(Field::cyclotomic(3), &[-1], &[(&[&["z", "0"], &["0", "z^-1"]], 1), (&[&["0", "1"], &["1", "0"]], -1)])];
    let mut checked = 0;
    for s in cases {
        assert!(s.h.is_abelian() && s.gal.order() <= 4 && s.h.order() <= 16);
        let sv = solve(s);
        for o in &sv.sol.orbits {
            if o.t == 1 && o.dim_w == 1 {
                let extends = brute_force_extends(&sv, o.members[0]);
                assert_eq!(extends, o.a() == Some(1), "{}: {:?}", o.label, o.provenance);
                checked += 1;
            }
        }
    }
    assert!(checked >= 10);
}
