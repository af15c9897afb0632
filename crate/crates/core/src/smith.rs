//! Smith normal form over Z and finite abelian group presentations.

/// Returns (diagonal, V) with U M V = D for some unimodular U.
/// The diagonal has min(rows, cols) entries, nonnegative, each dividing the next.
pub fn smith_normal_form(m: &[Vec<i64>], cols: usize) -> (Vec<i64>, Vec<Vec<i64>>) {
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let rows = a.len();
    let mut v: Vec<Vec<i128>> = (0..cols).map(|i| (0..cols).map(|j| (i == j) as i128).collect()).collect();
    let col_op = |a: &mut Vec<Vec<i128>>, v: &mut Vec<Vec<i128>>, dst: usize, src: usize, k: i128| {
        for r in a.iter_mut() {
            r[dst] -= k * r[src];
        }
        for r in v.iter_mut() {
            r[dst] -= k * r[src];
        }
    };
    let col_swap = |a: &mut Vec<Vec<i128>>, v: &mut Vec<Vec<i128>>, x: usize, y: usize| {
        for r in a.iter_mut() {
            r.swap(x, y);
        }
        for r in v.iter_mut() {
            r.swap(x, y);
        }
    };
    let diag_len = rows.min(cols);
    for t in 0..diag_len {
        loop {
            // smallest nonzero entry of the trailing block
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if a[i][j] != 0 && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else { break };
            a.swap(t, bi);
            col_swap(&mut a, &mut v, t, bj);
            let p = a[t][t];
            let mut clean = true;
            for i in t + 1..rows {
                let k = a[i][t] / p;
                if k != 0 {
                    let pivot_row = a[t].clone();
                    for (x, y) in a[i].iter_mut().zip(&pivot_row) {
                        *x -= k * y;
                    }
                }
                clean &= a[i][t] == 0;
            }
            for j in t + 1..cols {
                let k = a[t][j] / p;
                if k != 0 {
                    col_op(&mut a, &mut v, j, t, k);
                }
                clean &= a[t][j] == 0;
            }
            if !clean {
                continue;
            }
            // divisibility condition on the trailing block
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| a[i][j] % p != 0));
            match bad {
                Some(i) => {
                    let row = a[i].clone();
                    for (x, y) in a[t].iter_mut().zip(&row) {
                        *x += y;
                    }
                }
                None => break,
            }
        }
        if a.get(t).is_some_and(|r| r[t] < 0) {
            for r in v.iter_mut() {
                r[t] = -r[t];
            }
            for r in a.iter_mut() {
                r[t] = -r[t];
            }
        }
    }
    let diag = (0..diag_len).map(|t| a[t][t] as i64).collect();
    let v = v.into_iter().map(|r| r.into_iter().map(|x| x as i64).collect()).collect();
    (diag, v)
}

/// Finite abelian group given by its Cayley table (identity = 0), written as
/// Z^r / L for a greedy generating set.
#[derive(Clone, Debug)]
pub struct AbelianPresentation {
    pub gens: Vec<usize>,
    /// Exponent vector of every element in terms of `gens`.
    pub coords: Vec<Vec<i64>>,
    pub relations: Vec<Vec<i64>>,
}

pub fn present(n: usize, mul: impl Fn(usize, usize) -> usize) -> AbelianPresentation {
    let mut gens = Vec::new();
    let mut span = vec![false; n];
    span[0] = true;
    for x in 1..n {
        if span[x] {
            continue;
        }
        gens.push(x);
        // re-close the span
        let mut members: Vec<usize> = (0..n).filter(|&y| span[y]).collect();
        let mut i = 0;
        while i < members.len() {
            for &g in &gens {
                let y = mul(members[i], g);
                if !span[y] {
                    span[y] = true;
                    members.push(y);
                }
            }
            i += 1;
        }
    }
    let r = gens.len();
    let mut coords: Vec<Option<Vec<i64>>> = vec![None; n];
    coords[0] = Some(vec![0; r]);
    let mut queue = vec![0usize];
    let mut relations = Vec::new();
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i];
        let cx = coords[x].clone().unwrap();
        for (k, &g) in gens.iter().enumerate() {
            let y = mul(x, g);
            let mut cy = cx.clone();
            cy[k] += 1;
            match &coords[y] {
                None => {
                    coords[y] = Some(cy);
                    queue.push(y);
                }
                Some(old) => {
                    let rel: Vec<i64> = cy.iter().zip(old).map(|(a, b)| a - b).collect();
                    if rel.iter().any(|&v| v != 0) {
                        relations.push(rel);
                    }
                }
            }
        }
        i += 1;
    }
    AbelianPresentation { gens, coords: coords.into_iter().map(Option::unwrap).collect(), relations }
}

/// Invariant factors d_1 | d_2 | ... (all > 1) of a finite abelian group.
pub fn invariant_factors(n: usize, mul: impl Fn(usize, usize) -> usize) -> Vec<u64> {
    let p = present(n, mul);
    let r = p.gens.len();
    if r == 0 {
        return vec![];
    }
    let (diag, _) = smith_normal_form(&p.relations, r);
    let mut out: Vec<u64> = diag.into_iter().filter(|&d| d != 1).map(|d| d as u64).collect();
    out.sort_unstable();
    debug_assert_eq!(out.iter().product::<u64>(), n as u64);
    out
}
