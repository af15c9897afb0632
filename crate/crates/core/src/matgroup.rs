//! Finite subgroups of GL_d(l) x| Gal(l/k).

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::exactfield::{Field, GaloisSubgroup};
use crate::linalg::Matrix;

pub const DEFAULT_CAP: usize = 100_000;

// Groups up to this size get a full Cayley table.
const TABLE_LIMIT: usize = 4096;

/// (A, a) acting by x_j -> sum_i a_ij x_i on variables and sigma_a on scalars.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    pub matrix: Matrix,
    pub aut: u64,
}

impl GroupElement {
    pub fn identity(f: &Field, d: usize) -> GroupElement {
        GroupElement { matrix: Matrix::identity(f, d), aut: f.aut_identity() }
    }

    /// (A,a)(B,b) = (A sigma_a(B), ab)
    pub fn mul(&self, f: &Field, other: &GroupElement) -> GroupElement {
        GroupElement {
            matrix: self.matrix.mul(f, &other.matrix.apply_aut(f, self.aut)),
            aut: f.aut_compose(self.aut, other.aut),
        }
    }

    /// (A,a)^{-1} = (sigma_{a^{-1}}(A^{-1}), a^{-1})
    pub fn inverse(&self, f: &Field) -> Option<GroupElement> {
        let ai = f.aut_inverse(self.aut);
        Some(GroupElement { matrix: self.matrix.inverse(f)?.apply_aut(f, ai), aut: ai })
    }

    pub fn format(&self, f: &Field) -> String {
        let rows: Vec<String> = (0..self.matrix.rows)
            .map(|i| {
                let cells: Vec<String> = (0..self.matrix.cols).map(|j| f.format(self.matrix.get(i, j))).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        format!("([{}], sigma_{})", rows.join(", "), self.aut)
    }
}

#[derive(Clone, Debug)]
pub struct FiniteGroup {
    field: Field,
    d: usize,
    elements: Vec<GroupElement>,
    index: HashMap<GroupElement, usize>,
    // BFS tree: element k = elements[parent[k]] * generator[via[k]]
    parent: Vec<usize>,
    via: Vec<usize>,
    // right multiplication by generators
    right: Vec<Vec<usize>>,
    inv: Vec<usize>,
    table: Option<Vec<u32>>,
    generators: Vec<usize>,
}

impl FiniteGroup {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &GroupElement {
        &self.elements[i]
    }

    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    pub fn index_of(&self, g: &GroupElement) -> Option<usize> {
        self.index.get(g).copied()
    }

    pub fn inv(&self, i: usize) -> usize {
        self.inv[i]
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        if let Some(t) = &self.table {
            return t[i * self.order() + j] as usize;
        }
        self.mul_walk(i, j)
    }

    fn mul_walk(&self, i: usize, j: usize) -> usize {
        let mut word = Vec::new();
        let mut k = j;
        while k != 0 {
            word.push(self.via[k]);
            k = self.parent[k];
        }
        word.iter().rev().fold(i, |cur, &g| self.right[cur][g])
    }

    pub fn pow(&self, i: usize, e: usize) -> usize {
        (0..e).fold(0, |acc, _| self.mul(acc, i))
    }

    pub fn element_order(&self, i: usize) -> usize {
        let mut k = 1;
        let mut cur = i;
        while cur != 0 {
            cur = self.mul(cur, i);
            k += 1;
        }
        k
    }
}

/// Closure of the generators under the semidirect law, breadth-first from the
/// identity with generators applied on the right in input order.
pub fn generate_group(field: &Field, d: usize, gens: &[GroupElement], cap: usize) -> Result<FiniteGroup> {
    for (k, g) in gens.iter().enumerate() {
        if g.matrix.rows != d || g.matrix.cols != d {
            return Err(Error::InvalidJob(format!("generator {k} is not {d}x{d}")));
        }
        if field.is_zero(&g.matrix.det(field)) {
            return Err(Error::InvalidJob(format!("generator {k} is singular")));
        }
    }
    let id = GroupElement::identity(field, d);
    let mut elements = vec![id.clone()];
    let mut index = HashMap::from([(id, 0usize)]);
    let mut parent = vec![0usize];
    let mut via = vec![usize::MAX];
    let mut right: Vec<Vec<usize>> = Vec::new();
    let mut i = 0;
    while i < elements.len() {
        let mut row = Vec::with_capacity(gens.len());
        for (gi, g) in gens.iter().enumerate() {
            let prod = elements[i].mul(field, g);
            let k = match index.get(&prod) {
                Some(&k) => k,
                None => {
                    if elements.len() >= cap {
                        return Err(Error::CapExceeded(cap));
                    }
                    let k = elements.len();
                    index.insert(prod.clone(), k);
                    elements.push(prod);
                    parent.push(i);
                    via.push(gi);
                    k
                }
            };
            row.push(k);
        }
        right.push(row);
        i += 1;
    }
    let n = elements.len();
    let p = field.characteristic();
    if p != 0 && n as u64 % p == 0 {
        return Err(Error::CharDividesOrder { p, order: n });
    }
    let generators = gens.iter().map(|g| index[g]).collect();
    let mut group = FiniteGroup {
        field: field.clone(),
        d,
        elements,
        index,
        parent,
        via,
        right,
        inv: vec![],
        table: None,
        generators,
    };
    if n <= TABLE_LIMIT {
        let mut t = vec![0u32; n * n];
        for a in 0..n {
            t[a * n] = a as u32;
        }
        // column j from column parent[j], in BFS order
        for j in 1..n {
            let (pj, g) = (group.parent[j], group.via[j]);
            for a in 0..n {
                t[a * n + j] = group.right[t[a * n + pj] as usize][g] as u32;
            }
        }
        group.table = Some(t);
    }
    let mut inv = vec![usize::MAX; n];
    for a in 0..n {
        if inv[a] != usize::MAX {
            continue;
        }
        // a^{-1} = a^{ord-1}
        let ord = group.element_order(a);
        let b = group.pow(a, ord - 1);
        inv[a] = b;
        inv[b] = a;
    }
    group.inv = inv;
    Ok(group)
}

/// H = G intersected with GL_d(l), with its conjugacy classes and coset
/// representatives for G/H.
#[derive(Clone, Debug)]
pub struct KernelSubgroup {
    /// G-indices of the elements of H, in G order (identity first).
    pub members: Vec<usize>,
    /// G-index to H-index.
    pub pos: HashMap<usize, usize>,
    /// Conjugacy classes of H as H-indices, ordered by first element.
    pub classes: Vec<Vec<usize>>,
    pub class_of: Vec<usize>,
    /// One G-index per element of the Galois group, in sorted aut order.
    pub cosets: Vec<usize>,
    pub coset_auts: Vec<u64>,
    mul: Vec<u32>,
    inv: Vec<usize>,
}

impl KernelSubgroup {
    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order() + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn is_abelian(&self) -> bool {
        self.classes.len() == self.order()
    }

    pub fn pow(&self, a: usize, e: usize) -> usize {
        (0..e).fold(0, |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut cur = a;
        while cur != 0 {
            cur = self.mul(cur, a);
            k += 1;
        }
        k
    }

    pub fn exponent(&self) -> u64 {
        (0..self.order()).fold(1, |acc, a| crate::exactfield::arith::lcm(acc, self.element_order(a) as u64))
    }
}

pub fn kernel_and_cosets(g: &FiniteGroup, gal: &GaloisSubgroup) -> Result<KernelSubgroup> {
    let f = g.field();
    let id = f.aut_identity();
    let mut image: Vec<u64> = g.elements().iter().map(|e| e.aut).collect();
    image.sort_unstable();
    image.dedup();
    if image != gal.elements() {
        return Err(Error::NotSurjectiveOntoGalois { image, declared: gal.elements().to_vec() });
    }
    let members: Vec<usize> = (0..g.order()).filter(|&i| g.element(i).aut == id).collect();
    let pos: HashMap<usize, usize> = members.iter().enumerate().map(|(h, &gi)| (gi, h)).collect();
    let n = members.len();
    let mut mul = vec![0u32; n * n];
    for a in 0..n {
        for b in 0..n {
            mul[a * n + b] = pos[&g.mul(members[a], members[b])] as u32;
        }
    }
    let inv: Vec<usize> = members.iter().map(|&gi| pos[&g.inv(gi)]).collect();
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for h in 0..n {
        if class_of[h] != usize::MAX {
            continue;
        }
        let c = classes.len();
        let mut cls = Vec::new();
        for x in 0..n {
            let y = mul[mul[x * n + h] as usize * n + inv[x]] as usize;
            if class_of[y] == usize::MAX {
                class_of[y] = c;
                cls.push(y);
            }
        }
        cls.sort_unstable();
        classes.push(cls);
    }
    let mut cosets = Vec::new();
    for &a in gal.elements() {
        cosets.push((0..g.order()).find(|&i| g.element(i).aut == a).unwrap());
    }
    Ok(KernelSubgroup {
        members,
        pos,
        classes,
        class_of,
        cosets,
        coset_auts: gal.elements().to_vec(),
        mul,
        inv,
    })
}

pub fn is_pseudo_reflection(f: &Field, a: &Matrix) -> bool {
    a.sub(f, &Matrix::identity(f, a.rows)).rank(f) <= 1
}

/// First non-identity pseudo-reflection in H, if any.
pub fn smallness_witness(g: &FiniteGroup, h: &KernelSubgroup) -> Option<usize> {
    let f = g.field();
    h.members[1..].iter().copied().find(|&gi| is_pseudo_reflection(f, &g.element(gi).matrix))
}

pub fn is_small(g: &FiniteGroup, h: &KernelSubgroup) -> bool {
    smallness_witness(g, h).is_none()
}

pub fn gorenstein_flag(g: &FiniteGroup, h: &KernelSubgroup) -> bool {
    let f = g.field();
    h.members.iter().all(|&gi| f.is_one(&g.element(gi).matrix.det(f)))
}

pub fn isolated_flag(g: &FiniteGroup, h: &KernelSubgroup) -> bool {
    let f = g.field();
    h.members[1..].iter().all(|&gi| {
        let a = &g.element(gi).matrix;
        !f.is_zero(&a.sub(f, &Matrix::identity(f, a.rows)).det(f))
    })
}
