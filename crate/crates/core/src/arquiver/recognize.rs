//! Extended Dynkin templates for doubled valued quivers, anchored at R.

use std::fmt;

use serde::{Serialize, Serializer};

use super::ValuedQuiver;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DynkinFamily {
    A0,
    A11,
    A12,
    An,
    Cn,
    BCn,
    BDn,
    Dn,
    E6,
    E7,
    E8,
    F42,
    G22,
    CLn,
    // shapes that never occur for Gorenstein rings; matched so that a
    // wrong answer would be visible rather than reported as unknown
    Bn,
    CDn,
    F41,
    G21,
}

impl DynkinFamily {
    pub const ALL: [DynkinFamily; 18] = [
        DynkinFamily::A0,
        DynkinFamily::A11,
        DynkinFamily::A12,
        DynkinFamily::An,
        DynkinFamily::Cn,
        DynkinFamily::BCn,
        DynkinFamily::BDn,
        DynkinFamily::Dn,
        DynkinFamily::E6,
        DynkinFamily::E7,
        DynkinFamily::E8,
        DynkinFamily::F42,
        DynkinFamily::G22,
        DynkinFamily::CLn,
        DynkinFamily::Bn,
        DynkinFamily::CDn,
        DynkinFamily::F41,
        DynkinFamily::G21,
    ];

    pub fn tag(self) -> &'static str {
        use DynkinFamily::*;
        match self {
            A0 => "A0~",
            A11 => "A11~",
            A12 => "A12~",
            An => "An~",
            Cn => "Cn~",
            BCn => "BCn~",
            BDn => "BDn~",
            Dn => "Dn~",
            E6 => "E6~",
            E7 => "E7~",
            E8 => "E8~",
            F42 => "F42~",
            G22 => "G22~",
            CLn => "CLn~",
            Bn => "Bn~",
            CDn => "CDn~",
            F41 => "F41~",
            G21 => "G21~",
        }
    }

    fn parameterized(self) -> bool {
        use DynkinFamily::*;
        matches!(self, An | Cn | BCn | BDn | Dn | CLn | Bn | CDn)
    }

    /// Template on `n` vertices (R = vertex 0) as a list of ordered pairs
    /// with valuations; the reverse arrow carries the swapped pair.
    fn template(self, n: usize) -> Option<Template> {
        use DynkinFamily::*;
        let mut t = Template::new(n);
        match self {
            A0 if n == 1 => t.loop_at(0, (2, 2)),
            A11 if n == 2 => t.edge(0, 1, (4, 1)),
            A12 if n == 2 => t.edge(0, 1, (2, 2)),
            An if n >= 3 => {
                for i in 0..n {
                    t.edge(i, (i + 1) % n, (1, 1));
                }
            }
            Cn | BCn | Bn | CLn if n >= 2 => {
                let first = if self == Bn { (1, 2) } else { (2, 1) };
                let last = match self {
                    Cn => (1, 2),
                    BCn | Bn => (2, 1),
                    _ => (1, 1),
                };
                if self == CLn {
                    t.path(0, n, first, (1, 1));
                    t.loop_at(n - 1, (1, 1));
                } else if n >= 3 {
                    t.path(0, n - 1, first, (1, 1));
                    t.edge(n - 2, n - 1, last);
                } else {
                    return None;
                }
            }
            BDn | CDn | Dn if n >= 4 => {
                // R and 1 hang off vertex 2; path 2..; tail at the far end
                t.edge(0, 2, (1, 1));
                t.edge(1, 2, (1, 1));
                match self {
                    Dn if n >= 5 => {
                        t.path(2, n - 2, (1, 1), (1, 1));
                        t.edge(n - 3, n - 2, (1, 1));
                        t.edge(n - 3, n - 1, (1, 1));
                    }
                    Dn => return None,
                    _ => {
                        t.path(2, n - 1, (1, 1), (1, 1));
                        t.edge(n - 2, n - 1, if self == BDn { (2, 1) } else { (1, 2) });
                    }
                }
            }
            E6 if n == 7 => {
                // R - 1 - 2(center) - 3 - 4, 2 - 5 - 6
                t.path(0, 5, (1, 1), (1, 1));
                t.edge(2, 5, (1, 1));
                t.edge(5, 6, (1, 1));
            }
            E7 if n == 8 => {
                // R - 1 - 2 - 3(center) - 4 - 5 - 6, 3 - 7
                t.path(0, 7, (1, 1), (1, 1));
                t.edge(3, 7, (1, 1));
            }
            E8 if n == 9 => {
                // R - 1 - 2 - 3 - 4 - 5(center) - 6 - 7, 5 - 8
                t.path(0, 8, (1, 1), (1, 1));
                t.edge(5, 8, (1, 1));
            }
            F42 | F41 if n == 5 => {
                t.path(0, 5, (1, 1), (1, 1));
                t.edge(2, 3, if self == F42 { (2, 1) } else { (1, 2) });
            }
            G22 | G21 if n == 3 => {
                t.edge(0, 1, (1, 1));
                t.edge(1, 2, if self == G22 { (3, 1) } else { (1, 3) });
            }
            _ => return None,
        }
        Some(t)
    }
}

struct Template {
    val: Vec<Vec<(u64, u64)>>,
}

impl Template {
    fn new(n: usize) -> Template {
        Template { val: vec![vec![(0, 0); n]; n] }
    }

    fn edge(&mut self, x: usize, y: usize, v: (u64, u64)) {
        self.val[x][y] = v;
        self.val[y][x] = (v.1, v.0);
    }

    fn loop_at(&mut self, x: usize, v: (u64, u64)) {
        self.val[x][x] = v;
    }

    /// Edges x -> x+1 for x in [from, to - 1), the first one valued `first`.
    fn path(&mut self, from: usize, to: usize, first: (u64, u64), rest: (u64, u64)) {
        for x in from..to.saturating_sub(1) {
            self.edge(x, x + 1, if x == from { first } else { rest });
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DynkinType {
    pub family: Option<DynkinFamily>,
    pub n: Option<usize>,
    pub reason: Option<String>,
}

impl DynkinType {
    fn unknown(reason: impl Into<String>) -> DynkinType {
        DynkinType { family: None, n: None, reason: Some(reason.into()) }
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter) -> fmt::Result {
        match (self.family, self.n) {
            (Some(fam), Some(n)) => write!(f, "{}({})", fam.tag(), n),
            (Some(fam), None) => write!(f, "{}", fam.tag()),
            _ => write!(f, "unknown"),
        }
    }
}

impl Serialize for DynkinType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

pub fn recognize_type(q: &ValuedQuiver, d: usize, gorenstein: bool) -> DynkinType {
    if d != 2 {
        return DynkinType::unknown(format!("classification covers d = 2 only (d = {d})"));
    }
    if !gorenstein {
        return DynkinType::unknown("classification covers Gorenstein rings only");
    }
    let n = q.vertices.len();
    let r = q.r_vertex();
    let mut val = vec![vec![(0, 0); n]; n];
    for a in &q.arrows {
        val[a.src][a.dst] = (a.d, a.d_prime);
    }
    let matches: Vec<DynkinFamily> = DynkinFamily::ALL
        .into_iter()
        .filter(|fam| fam.template(n).is_some_and(|t| isomorphic(&t.val, &val, r)))
        .collect();
    match matches.as_slice() {
        [fam] => DynkinType { family: Some(*fam), n: fam.parameterized().then_some(n - 1), reason: None },
        [] => DynkinType::unknown("no template matches"),
        _ => DynkinType::unknown("several templates match"),
    }
}

/// Valuation-preserving bijection template -> quiver sending 0 to `r`.
fn isomorphic(t: &[Vec<(u64, u64)>], q: &[Vec<(u64, u64)>], r: usize) -> bool {
    let n = t.len();
    // BFS order of the template from R
    let mut order = vec![0usize];
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut i = 0;
    while i < order.len() {
        for y in 0..n {
            if !seen[y] && (t[order[i]][y] != (0, 0)) {
                seen[y] = true;
                order.push(y);
            }
        }
        i += 1;
    }
    if order.len() != n {
        return false;
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(k: usize, order: &[usize], t: &[Vec<(u64, u64)>], q: &[Vec<(u64, u64)>], map: &mut [usize], used: &mut [bool]) -> bool {
        if k == order.len() {
            return true;
        }
        let x = order[k];
        let n = t.len();
        for y in 0..n {
            if used[y] {
                continue;
            }
            let ok = q[y][y] == t[x][x]
                && order[..k].iter().all(|&p| q[map[p]][y] == t[p][x] && q[y][map[p]] == t[x][p]);
            if ok {
                map[x] = y;
                used[y] = true;
                if go(k + 1, order, t, q, map, used) {
                    return true;
                }
                used[y] = false;
            }
        }
        false
    }
    if q[r][r] != t[0][0] {
        return false;
    }
    map[0] = r;
    used[r] = true;
    go(1, &order, t, q, &mut map, &mut used)
}
