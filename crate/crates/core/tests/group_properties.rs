use mckayq_core::chartab::{character_table, methods_agree};
use mckayq_core::exactfield::{Field, GaloisSubgroup};
use mckayq_core::linalg::Matrix;
use mckayq_core::matgroup::{generate_group, kernel_and_cosets, GroupElement, KernelSubgroup, DEFAULT_CAP};
use mckayq_core::pipeline::{analyze, catalog};
use proptest::prelude::*;

fn monomial(f: &Field, a: u64, b: u64, swap: bool) -> GroupElement {
    let z = f.gen();
    let (x, y) = (f.pow_u(&z, a as u128), f.pow_u(&z, b as u128));
    let zero = f.zero();
    let rows = if swap { vec![vec![zero.clone(), x], vec![y, zero]] } else { vec![vec![x, zero.clone()], vec![zero, y]] };
    GroupElement { matrix: Matrix::from_rows(rows), aut: f.aut_identity() }
}

fn kernel(f: &Field, gens: &[GroupElement]) -> KernelSubgroup {
    let g = generate_group(f, 2, gens, DEFAULT_CAP).unwrap();
    kernel_and_cosets(&g, &GaloisSubgroup::trivial(f)).unwrap()
}

fn check_orthogonality(h: &KernelSubgroup, f: &Field) -> Result<(), TestCaseError> {
    let t = character_table(h, f).unwrap();
    let irr = &t.irreducibles;
    prop_assert_eq!(irr.len(), t.num_classes());
    for (i, a) in irr.iter().enumerate() {
        for (j, b) in irr.iter().enumerate() {
            prop_assert_eq!(t.inner_product(a, b).unwrap(), u64::from(i == j));
        }
    }
    let squares: u64 = irr.iter().map(|c| t.degree(c).pow(2)).sum();
    prop_assert_eq!(squares as usize, h.order());
    prop_assert_eq!(t.decompose(&t.regular()).unwrap(), irr.iter().map(|c| t.degree(c)).collect::<Vec<_>>());
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn monomial_groups(n in 2u64..=6, a in 0u64..6, b in 0u64..6, c in 0u64..6, d in 0u64..6, swap in any::<bool>()) {
        // entries in mu_n; a swap squares into mu_n, so Q(zeta_2n) splits H
        let f = Field::cyclotomic(2 * n);
        let e = |k: u64| 2 * (k % n);
        let h = kernel(&f, &[monomial(&f, e(a), e(b), false), monomial(&f, e(c), e(d), swap)]);
        check_orthogonality(&h, &f)?;
        if h.is_abelian() {
            prop_assert!(methods_agree(&h, &f).unwrap());
        }
    }
}

#[test]
fn catalog_tables_are_orthogonal() {
    for name in ["typeG22", "ade-D5", "ade-E6", "nongor", "d3-isolated-n2-f8"] {
        let a = analyze(&catalog::find(name).unwrap().job).unwrap();
        check_orthogonality(&a.h, &a.field).map_err(|e| format!("{name}: {e}")).unwrap();
    }
}
