//! The tree `T_{1/0}` of even-denominator Farey vertices.
//!
//! Edges are the images of the diagonal `{1/0, 1/2}` under the level-2
//! congruence group `G`, generated by `z -> z+1` and `z -> z/(2z+1)`. The
//! second generator composed with `z -> z-1` gives `z -> (z-1)/(2z-1)`,
//! which swaps the two ends of the diagonal.

use std::collections::{HashMap, HashSet, VecDeque};

use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::arith::Fraction;
use crate::error::{Error, Result};

/// A reduced `p/q` with `q >= 0`; `1/0` is the point at infinity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FareyVertex {
    p: i64,
    q: i64,
}

impl FareyVertex {
    pub const INFINITY: FareyVertex = FareyVertex { p: 1, q: 0 };

    pub fn new(p: i64, q: i64) -> Result<Self> {
        if p == 0 && q == 0 {
            return Err(Error::Domain("0/0 is not a Farey vertex".into()));
        }
        Ok(Self::normalized(p, q))
    }

    fn normalized(p: i64, q: i64) -> Self {
        let g = p.gcd(&q);
        let (p, q) = (p / g, q / g);
        if q < 0 || (q == 0 && p < 0) {
            FareyVertex { p: -p, q: -q }
        } else {
            FareyVertex { p, q }
        }
    }

    pub fn from_fraction(f: &Fraction) -> Result<Self> {
        let conv = |x: &num_bigint::BigInt| {
            x.to_i64()
                .ok_or_else(|| Error::Domain(format!("{f} is too large for the Farey tree")))
        };
        Ok(FareyVertex {
            p: conv(f.numer())?,
            q: conv(f.denom())?,
        })
    }

    pub fn value(&self) -> Fraction {
        Fraction::new(self.p, self.q).expect("never 0/0")
    }

    pub fn numer(&self) -> i64 {
        self.p
    }

    pub fn denom(&self) -> i64 {
        self.q
    }

    /// Even denominator, `1/0` included.
    pub fn is_admissible(&self) -> bool {
        self.q % 2 == 0
    }

    fn apply(&self, m: &[[i64; 2]; 2]) -> Self {
        Self::normalized(
            m[0][0] * self.p + m[0][1] * self.q,
            m[1][0] * self.p + m[1][1] * self.q,
        )
    }
}

const GENERATORS: [[[i64; 2]; 2]; 4] = [
    [[1, 1], [0, 1]],
    [[1, -1], [0, 1]],
    [[1, 0], [2, 1]],
    [[1, 0], [-2, 1]],
];

/// Finite endpoints of retained edges lie in this window; the tree path from
/// `1/0` to a point of `[n, n+1]` stays inside `[n, n+1]`.
const WINDOW: (i64, i64) = (-2, 3);

/// Group words reach small edges through large numerators (for instance
/// `{1/2, 7/16}` is `z/(2z+1)` applied to `{1/0, 7/2}`), so the search runs
/// with numerators up to this multiple of the denominator bound, one more
/// than the window's right end.
const NUMERATOR_SLACK: i64 = 4;

type Edge = (FareyVertex, FareyVertex);

fn edge(u: FareyVertex, v: FareyVertex) -> Edge {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

/// The part of `T_{1/0}` with denominators at most `max_den`.
#[derive(Clone, Debug)]
pub struct FareyTree {
    max_den: i64,
    edges: Vec<Edge>,
    adjacency: HashMap<FareyVertex, Vec<FareyVertex>>,
    parent: HashMap<FareyVertex, FareyVertex>,
    depth: HashMap<FareyVertex, u32>,
}

impl FareyTree {
    pub fn max_den(&self) -> i64 {
        self.max_den
    }

    pub fn edges(&self) -> &[(FareyVertex, FareyVertex)] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn neighbors(&self, v: &FareyVertex) -> &[FareyVertex] {
        self.adjacency.get(v).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn contains_edge(&self, u: &FareyVertex, v: &FareyVertex) -> bool {
        self.neighbors(u).contains(v)
    }

    /// No edge closes a cycle.
    pub fn is_acyclic(&self) -> bool {
        let index: HashMap<FareyVertex, usize> = self
            .adjacency
            .keys()
            .enumerate()
            .map(|(i, v)| (*v, i))
            .collect();
        let mut parent: Vec<usize> = (0..index.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for (u, v) in &self.edges {
            let (a, b) = (find(&mut parent, index[u]), find(&mut parent, index[v]));
            if a == b {
                return false;
            }
            parent[a] = b;
        }
        true
    }

    /// Every vertex is reachable from `1/0`.
    pub fn is_connected(&self) -> bool {
        self.depth.len() == self.adjacency.len()
    }

    /// Edge count of the path from `1/0` to `v`, if `v` is in the tree.
    pub fn depth(&self, v: &FareyVertex) -> Option<u32> {
        self.depth.get(v).copied()
    }

    /// The vertices from `1/0` to `v`.
    pub fn path(&self, v: &FareyVertex) -> Option<Vec<FareyVertex>> {
        self.depth.get(v)?;
        let mut out = vec![*v];
        let mut cur = *v;
        while let Some(p) = self.parent.get(&cur) {
            out.push(*p);
            cur = *p;
        }
        out.reverse();
        Some(out)
    }
}

/// Breadth-first expansion of the orbit of `{1/0, 1/2}` over group words.
pub fn t10_tree_build(max_den: i64) -> FareyTree {
    let max_den = max_den.max(2);
    let max_num = NUMERATOR_SLACK * max_den + 4;
    let explore = |v: &FareyVertex| v.q <= max_den && v.p.abs() <= max_num;
    let keep = |v: &FareyVertex| {
        v.q == 0 || (WINDOW.0 * v.q <= v.p && v.p <= WINDOW.1 * v.q)
    };
    let diagonal = edge(FareyVertex::INFINITY, FareyVertex { p: 1, q: 2 });
    let mut seen: HashSet<Edge> = HashSet::from([diagonal]);
    let mut queue = VecDeque::from([diagonal]);
    let mut edges = Vec::new();
    while let Some(e) = queue.pop_front() {
        if keep(&e.0) && keep(&e.1) {
            edges.push(e);
        }
        for g in &GENERATORS {
            let (u, v) = (e.0.apply(g), e.1.apply(g));
            if explore(&u) && explore(&v) {
                let img = edge(u, v);
                if seen.insert(img) {
                    queue.push_back(img);
                }
            }
        }
    }
    edges.sort();

    let mut adjacency: HashMap<FareyVertex, Vec<FareyVertex>> = HashMap::new();
    for &(u, v) in &edges {
        adjacency.entry(u).or_default().push(v);
        adjacency.entry(v).or_default().push(u);
    }
    let mut parent = HashMap::new();
    let mut depth = HashMap::from([(FareyVertex::INFINITY, 0u32)]);
    let mut bfs = VecDeque::from([FareyVertex::INFINITY]);
    while let Some(u) = bfs.pop_front() {
        let d = depth[&u];
        for v in adjacency.get(&u).into_iter().flatten() {
            if !depth.contains_key(v) {
                depth.insert(*v, d + 1);
                parent.insert(*v, u);
                bfs.push_back(*v);
            }
        }
    }
    FareyTree {
        max_den,
        edges,
        adjacency,
        parent,
        depth,
    }
}

fn require_path_input(f: &Fraction) -> Result<FareyVertex> {
    if f.is_infinite() || !f.is_positive() || *f >= Fraction::one() {
        return Err(Error::Domain(format!("{f} is not in (0,1)")));
    }
    if f.denom().is_odd() {
        return Err(Error::KnotInput(format!("{f} has odd denominator")));
    }
    FareyVertex::from_fraction(f)
}

/// Edge count of the tree path from `1/0` to `f`, widening the denominator
/// bound from `q` until the path appears.
pub fn t10_path_length(f: &Fraction) -> Result<u32> {
    let v = require_path_input(f)?;
    let cap = v.q.saturating_mul(1 << 20);
    let mut bound = v.q;
    loop {
        if let Some(d) = t10_tree_build(bound).depth(&v) {
            return Ok(d);
        }
        if bound >= cap {
            return Err(Error::PathNotFound(format!("{f} with denominators up to {bound}")));
        }
        bound = bound.saturating_mul(2).min(cap);
    }
}

/// `x(l1) = lg - 1`.
pub fn x10_via_farey(f: &Fraction) -> Result<u64> {
    Ok(u64::from(t10_path_length(f)?) - 1)
}

/// Path lookup in a prebuilt tree; falls back to a fresh search when `f` lies
/// beyond the tree's bound.
pub fn x10_in_tree(tree: &FareyTree, f: &Fraction) -> Result<u64> {
    let v = require_path_input(f)?;
    match tree.depth(&v) {
        Some(d) => Ok(u64::from(d) - 1),
        None => x10_via_farey(f),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;

    fn fv(p: i64, q: i64) -> FareyVertex {
        FareyVertex::new(p, q).unwrap()
    }

    #[test]
    fn build_examples() {
        assert!(t10_tree_build(2).contains_edge(&FareyVertex::INFINITY, &fv(1, 2)));
        let t4 = t10_tree_build(4);
        assert!(t4.contains_edge(&fv(1, 2), &fv(1, 4)));
        assert!(t4.contains_edge(&FareyVertex::INFINITY, &fv(1, 2)));
        assert!(t10_tree_build(16).contains_edge(&fv(1, 2), &fv(7, 16)));
    }

    #[test]
    fn path_examples() {
        assert_eq!(t10_path_length(&ratio(1, 2)).unwrap(), 1);
        assert_eq!(t10_path_length(&ratio(7, 16)).unwrap(), 2);
        let tree = t10_tree_build(16);
        assert_eq!(
            tree.path(&fv(7, 16)).unwrap(),
            vec![FareyVertex::INFINITY, fv(1, 2), fv(7, 16)]
        );
        for k in 1..=20 {
            assert_eq!(t10_path_length(&ratio(1, 2 * k)).unwrap(), k as u32);
        }
    }

    #[test]
    fn x10_examples() {
        assert_eq!(x10_via_farey(&ratio(1, 2)).unwrap(), 0);
        assert_eq!(x10_via_farey(&ratio(1, 4)).unwrap(), 1);
        assert_eq!(x10_via_farey(&ratio(7, 16)).unwrap(), 1);
    }

    #[test]
    fn bad_inputs() {
        assert!(matches!(t10_path_length(&ratio(1, 3)), Err(Error::KnotInput(_))));
        assert!(matches!(t10_path_length(&ratio(3, 2)), Err(Error::Domain(_))));
    }

    #[test]
    fn generated_edges_have_determinant_two() {
        for (u, v) in t10_tree_build(64).edges() {
            assert!(u.is_admissible() && v.is_admissible());
            assert_eq!((u.p * v.q - u.q * v.p).abs(), 2, "{u:?} {v:?}");
        }
    }
}
