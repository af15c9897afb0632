use super::*;
use crate::exactfield::Field;
use crate::testutil::{cyclic, setup, Setup};

fn table(s: &Setup) -> CharacterTable {
    character_table(&s.h, &s.f).unwrap()
}

fn orthonormal(t: &CharacterTable) {
    for (i, a) in t.irreducibles.iter().enumerate() {
        for (j, b) in t.irreducibles.iter().enumerate() {
            assert_eq!(t.inner_product(a, b).unwrap(), (i == j) as u64);
        }
    }
    // column orthogonality: sum_chi chi(g) conj chi(h) = |C_G(g)| delta
    let k = t.num_classes();
    for (x, y) in [(0, k - 1), (k / 2, k / 2), (k - 1, k - 1)] {
        let cf = &t.cfield;
        let s = t.irreducibles.iter().fold(cf.zero(), |acc, c| {
            cf.add(&acc, &cf.mul(&c.values[x], &c.values[t.inverse_class[y]]))
        });
        let expect = if x == y { (t.order / t.class_sizes[x]) as i64 } else { 0 };
        assert_eq!(s, cf.from_int(expect));
    }
}

fn c5() -> Setup {
    setup(Field::cyclotomic(5), &[-1], &[(&[&["z", "0"], &["0", "z^-1"]], 1), (&[&["0", "1"], &["1", "0"]], -1)])
}

#[test]
fn cyclic_five_table() {
    let s = c5();
    let t = table(&s);
    assert_eq!(t.method, Method::Dual);
    assert_eq!(t.irreducibles.len(), 5);
    orthonormal(&t);
    // chi(alpha) runs over all fifth roots of unity
    let alpha = s.h.pos[&s.g.generators()[0]];
    let c = s.h.class_of[alpha];
    let mut vals: Vec<String> = t.irreducibles.iter().map(|x| s.f.format(&t.embed(&x.values[c]))).collect();
    vals.sort();
    let mut expect: Vec<String> = (0..5).map(|j| s.f.format(&s.f.pow_u(&s.f.gen(), j))).collect();
    expect.sort();
    assert_eq!(vals, expect);
    // regular character
    assert_eq!(t.decompose(&t.regular()).unwrap(), vec![1; 5]);
    assert_eq!(t.decompose(&t.zero_char()).unwrap(), vec![0; 5]);
}

#[test]
fn twist_negates_in_type_cl() {
    let s = c5();
    let t = table(&s);
    let alpha = s.h.pos[&s.g.generators()[0]];
    let beta = s.g.generators()[1];
    let c = s.h.class_of[alpha];
    let z = t.cfield.gen();
    for chi in &t.irreducibles {
        let tw = t.galois_twist(chi, &s.g, &s.h, beta);
        // chi(alpha) = zeta^j  =>  twist(alpha) = zeta^{-j}
        let j = (0..5).find(|&j| t.cfield.pow_u(&z, j) == chi.values[c]).unwrap();
        assert_eq!(tw.values[c], t.cfield.pow_u(&z, ((5 - j) % 5) as u128));
        // inner twist is trivial
        let inner = t.galois_twist(chi, &s.g, &s.h, s.h.members[alpha]);
        assert_eq!(&inner, chi);
    }
}

#[test]
fn quaternion_over_finite_field_and_cyclotomic() {
    let s = setup(Field::cyclotomic(4), &[], &[(&[&["z", "0"], &["0", "-z"]], 1), (&[&["0", "1"], &["-1", "0"]], 1)]);
    let t = table(&s);
    assert_eq!(t.method, Method::Dixon);
    let degs: Vec<u64> = t.irreducibles.iter().map(|c| t.degree(c)).collect();
    assert_eq!(degs, vec![1, 1, 1, 1, 2]);
    orthonormal(&t);
    let w = t.wedge_powers(&s.g, &s.h).unwrap();
    // U is the 2-dimensional irreducible
    assert_eq!(t.index_of(&w[1]), Some(4));
    assert_eq!(w[2], t.trivial());

    let f = Field::new(crate::exactfield::FieldSpec::Finite { p: 5, m: 2 }).unwrap();
    let s = setup(f, &[], &[(&[&["2", "0"], &["0", "3"]], 0), (&[&["0", "1"], &["4", "0"]], 0)]);
    let t = table(&s);
    assert_eq!(t.irreducibles.len(), 5);
    orthonormal(&t);
}

#[test]
fn nongor_decompositions() {
    let s = setup(Field::cyclotomic(8), &[3, 5], &[(&[&["0", "z"], &["1", "0"]], 3), (&[&["0", "z^7"], &["z", "0"]], 5)]);
    let t = table(&s);
    assert_eq!(t.order, 8);
    let w = t.wedge_powers(&s.g, &s.h).unwrap();
    let u = &w[1];
    // locate W_j via its value on alpha^2 = diag(z, z^3)
    let a2 = s.g.mul(s.g.generators()[0], s.g.generators()[0]);
    let c = s.h.class_of[s.h.pos[&a2]];
    let zc = t.cfield.gen();
    let idx = |j: u128| {
        t.irreducibles.iter().position(|x| x.values[c] == t.cfield.pow_u(&zc, j)).unwrap()
    };
    let m = t.decompose(u).unwrap();
    assert_eq!(m[idx(1)], 1);
    assert_eq!(m[idx(3)], 1);
    assert_eq!(m.iter().sum::<u64>(), 2);
    assert_eq!(t.index_of(&w[2]), Some(idx(4)));
    let sq = t.decompose(&t.tensor(u, u)).unwrap();
    assert_eq!((sq[idx(2)], sq[idx(6)], sq[idx(4)], sq.iter().sum::<u64>()), (1, 1, 2, 4));
    // alpha . W_j = W_{3j}
    let alpha = s.g.generators()[0];
    for j in 0..8u128 {
        let tw = t.galois_twist(&t.irreducibles[idx(j)], &s.g, &s.h, alpha);
        assert_eq!(t.index_of(&tw), Some(idx((3 * j) % 8)));
    }
}

#[test]
fn dixon_matches_dual_on_abelian_groups() {
    let mut cases: Vec<Setup> = (1..=16).map(cyclic).collect();
    cases.push(setup(Field::cyclotomic(4), &[], &[(&[&["-1", "0"], &["0", "1"]], 1), (&[&["1", "0"], &["0", "z"]], 1)]));
    for s in cases {
        let cd = class_data(&s.h);
        let cf = Field::cyclotomic(cd.exponent);
        let t = table(&s);
        let mut a = dual_characters(&s.h, &cf, &cd);
        let mut b = dixon_characters(&s.h, &cf, &cd).unwrap();
        t.sort_canonical(&mut a);
        t.sort_canonical(&mut b);
        assert_eq!(a, b, "order {}", s.h.order());
        assert_eq!(a, t.irreducibles);
        orthonormal(&t);
    }
}

#[test]
fn split_field_too_small() {
    let s = setup(Field::cyclotomic(4), &[], &[(&[&["0", "-1"], &["1", "-1"]], 1)]);
    match character_table(&s.h, &s.f) {
        Err(crate::error::Error::SplitFieldTooSmall { exponent: 3, hint }) => assert!(hint.contains("zeta_12")),
        other => panic!("{other:?}"),
    }
}

#[test]
fn binary_icosahedral() {
    let sq5 = "(2*(z^12 + z^48) + 1)";
    let a = format!("(z^48 - z^12)/{sq5}");
    let b = format!("(z^24 - z^36)/{sq5}");
    let c = format!("(z^12 - z^48)/{sq5}");
    let d = format!("(z^24 - z^48)/{sq5}");
    let e = format!("(z^48 - 1)/{sq5}");
    let f_ = format!("(1 - z^12)/{sq5}");
    let g_ = format!("(z^36 - z^12)/{sq5}");
    let s = setup(
        Field::cyclotomic(60),
        &[],
        &[(&[&[&a, &b], &[&b, &c]], 1), (&[&[&d, &e], &[&f_, &g_]], 1)],
    );
    assert_eq!(s.g.order(), 120);
    let t = table(&s);
    let degs: Vec<u64> = t.irreducibles.iter().map(|c| t.degree(c)).collect();
    assert_eq!(degs, vec![1, 2, 2, 3, 3, 4, 4, 5, 6]);
    orthonormal(&t);
}
