//! Builders shared by unit tests.

use crate::exactfield::{Field, GaloisSubgroup};
use crate::linalg::Matrix;
use crate::matgroup::{generate_group, kernel_and_cosets, FiniteGroup, GroupElement, KernelSubgroup, DEFAULT_CAP};

pub struct Setup {
    pub f: Field,
    pub gal: GaloisSubgroup,
    pub g: FiniteGroup,
    pub h: KernelSubgroup,
}

pub fn elem(f: &Field, rows: &[&[&str]], aut: i64) -> GroupElement {
    let m = Matrix::from_rows(rows.iter().map(|r| r.iter().map(|s| f.parse(s).unwrap()).collect()).collect());
    GroupElement { matrix: m, aut: f.check_aut(aut).unwrap() }
}

pub fn setup(f: Field, gal: &[i64], gens: &[(&[&[&str]], i64)]) -> Setup {
    let d = gens[0].0.len();
    let gens: Vec<GroupElement> = gens.iter().map(|(rows, a)| elem(&f, rows, *a)).collect();
    let gal = GaloisSubgroup::new(&f, gal).unwrap();
    let g = generate_group(&f, d, &gens, DEFAULT_CAP).unwrap();
    let h = kernel_and_cosets(&g, &gal).unwrap();
    Setup { f, gal, g, h }
}

/// Diagonal cyclic group C_m in GL_1(Q(zeta_m)).
pub fn cyclic(m: u64) -> Setup {
    setup(Field::cyclotomic(m), &[], &[(&[&["z"]], 1)])
}
