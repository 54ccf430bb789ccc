//! Independent oracles for the integration and acceptance tests.
//!
//! The plat is rebuilt here as an explicit list of crossings and walked as a
//! planar curve, without using the library's tracer. Crossing signs come from
//! the right-hand rule on geometric tangent vectors.

#![allow(dead_code)]

use twobridge::Fraction;

/// Crossing `t` swaps positions `lo` and `lo + 1`; level `t` is the gap
/// above crossing `t`, level `n` is below the last one.
pub struct Plat {
    lo: Vec<usize>,
    box_of: Vec<usize>,
    top_caps: [(usize, usize); 2],
    bottom_caps: [(usize, usize); 2],
}

/// One pass of a component through a crossing.
#[derive(Clone, Copy, Debug)]
struct Pass {
    comp: usize,
    down: bool,
}

/// What the walk found.
#[derive(Debug)]
pub struct PlatReport {
    pub components: usize,
    /// Passes through each crossing: (strand entering at `lo` from above,
    /// strand entering at `lo + 1` from above).
    passes: Vec<(Pass, Pass)>,
}

impl Plat {
    pub fn new(coefficients: &[i64]) -> Plat {
        let mut lo = Vec::new();
        let mut box_of = Vec::new();
        for (i, &a) in coefficients.iter().enumerate() {
            let pair_lo = if i % 2 == 0 { 1 } else { 0 };
            for _ in 0..a.unsigned_abs() {
                lo.push(pair_lo);
                box_of.push(i);
            }
        }
        let bottom_caps = if coefficients.len() % 2 == 1 {
            [(0, 1), (2, 3)]
        } else {
            [(0, 3), (1, 2)]
        };
        Plat {
            lo,
            box_of,
            top_caps: [(0, 1), (2, 3)],
            bottom_caps,
        }
    }

    fn partner(caps: &[(usize, usize); 2], p: usize) -> usize {
        caps.iter()
            .find_map(|&(a, b)| {
                if a == p {
                    Some(b)
                } else if b == p {
                    Some(a)
                } else {
                    None
                }
            })
            .expect("every position is capped")
    }

    /// Walks every component, starting each at its leftmost top endpoint and
    /// heading down. `reverse_second` flips the second component.
    pub fn walk(&self, reverse_second: bool) -> PlatReport {
        let n = self.lo.len();
        let mut seen = vec![[false; 4]; n + 1];
        let mut passes: Vec<[Option<Pass>; 2]> = vec![[None; 2]; n];
        let mut comp = 0;
        for start in 0..4 {
            if seen[0][start] {
                continue;
            }
            let flip = reverse_second && comp == 1;
            let (mut level, mut pos, mut down) = (0usize, start, true);
            loop {
                if seen[level][pos] && level == 0 && pos == start && down {
                    break;
                }
                seen[level][pos] = true;
                if down {
                    if level == n {
                        pos = Self::partner(&self.bottom_caps, pos);
                        down = false;
                        continue;
                    }
                    let lo = self.lo[level];
                    if pos == lo || pos == lo + 1 {
                        let slot = pos - lo;
                        passes[level][slot] = Some(Pass { comp, down: !flip });
                        pos = 2 * lo + 1 - pos;
                    }
                    level += 1;
                } else {
                    if level == 0 {
                        pos = Self::partner(&self.top_caps, pos);
                        down = true;
                        continue;
                    }
                    let lo = self.lo[level - 1];
                    if pos == lo || pos == lo + 1 {
                        // arriving from below at `pos` means it entered above at the other slot
                        let slot = 1 - (pos - lo);
                        passes[level - 1][slot] = Some(Pass { comp, down: flip });
                        pos = 2 * lo + 1 - pos;
                    }
                    level -= 1;
                }
            }
            comp += 1;
        }
        PlatReport {
            components: comp,
            passes: passes
                .into_iter()
                .map(|[a, b]| (a.expect("walked"), b.expect("walked")))
                .collect(),
        }
    }

    /// Right-hand-rule sign of crossing `t`. In odd boxes (1-based) the strand
    /// entering at `lo + 1` passes over, in even boxes the other one does.
    fn sign(&self, t: usize, passes: &(Pass, Pass), mirror: bool) -> i64 {
        // tangent vectors in the plane, y pointing up
        let vec_of = |p: &Pass, from_left: bool| -> (i64, i64) {
            let dx = if from_left { 1 } else { -1 };
            if p.down {
                (dx, -1)
            } else {
                (-dx, 1)
            }
        };
        let a = vec_of(&passes.0, true);
        let b = vec_of(&passes.1, false);
        let odd_box = self.box_of[t] % 2 == 0;
        let (over, under) = if odd_box != mirror { (b, a) } else { (a, b) };
        (over.0 * under.1 - over.1 * under.0).signum()
    }

    pub fn crossing_count(&self) -> usize {
        self.lo.len()
    }

    /// Gauss linking number: half the signed count of crossings between
    /// distinct components. A mirrored diagram flips every crossing and
    /// carries the second component reversed.
    pub fn linking_number(&self, mirror: bool) -> Option<i64> {
        let report = self.walk(mirror);
        if report.components != 2 {
            return None;
        }
        let total: i64 = report
            .passes
            .iter()
            .enumerate()
            .filter(|(_, (a, b))| a.comp != b.comp)
            .map(|(t, p)| self.sign(t, p, mirror))
            .sum();
        assert!(total % 2 == 0, "odd inter-component crossing sum");
        Some(total / 2)
    }

    /// Seifert circles of the oriented smoothing.
    pub fn seifert_circles(&self, reverse_second: bool) -> usize {
        let report = self.walk(reverse_second);
        let n = self.lo.len();
        // node ids: top and bottom end of each segment (level, pos)
        let top = |l: usize, p: usize| 2 * (4 * l + p);
        let bottom = |l: usize, p: usize| 2 * (4 * l + p) + 1;
        let mut uf = UnionFind::new(2 * 4 * (n + 1));
        for l in 0..=n {
            for p in 0..4 {
                uf.union(top(l, p), bottom(l, p));
            }
        }
        for (t, (a, b)) in report.passes.iter().enumerate() {
            let lo = self.lo[t];
            for p in 0..4 {
                if p != lo && p != lo + 1 {
                    uf.union(bottom(t, p), top(t + 1, p));
                }
            }
            if a.down == b.down {
                uf.union(bottom(t, lo), top(t + 1, lo));
                uf.union(bottom(t, lo + 1), top(t + 1, lo + 1));
            } else {
                uf.union(bottom(t, lo), bottom(t, lo + 1));
                uf.union(top(t + 1, lo), top(t + 1, lo + 1));
            }
        }
        for &(a, b) in &self.top_caps {
            uf.union(top(0, a), top(0, b));
        }
        for &(a, b) in &self.bottom_caps {
            uf.union(bottom(n, a), bottom(n, b));
        }
        uf.roots()
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n).collect())
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.0[x] != x {
            self.0[x] = self.0[self.0[x]];
            x = self.0[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        self.0[a] = b;
    }

    fn roots(&mut self) -> usize {
        (0..self.0.len()).filter(|&x| self.find(x) == x).count()
    }
}

/// Every composition of `n` into positive parts.
pub fn compositions(n: i64) -> Vec<Vec<i64>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Every composition with total at most `max`, nonempty.
pub fn compositions_up_to(max: i64) -> Vec<Vec<i64>> {
    (1..=max).flat_map(compositions).collect()
}

/// Reduced `p/q` with `0 < p < q`, `q` even, `q <= max_q`.
pub fn even_fractions(max_q: i64) -> Vec<Fraction> {
    let mut out = Vec::new();
    for q in (2..=max_q).step_by(2) {
        for p in (1..q).step_by(2) {
            if num_integer::gcd(p, q) == 1 {
                out.push(twobridge::ratio(p, q));
            }
        }
    }
    out
}

/// Modular inverse of `p` mod `q`, when it exists.
pub fn inverse_mod(p: i64, q: i64) -> Option<i64> {
    (1..q).find(|&x| (p * x) % q == 1)
}

/// Classical closed form `lk = sum_{j odd, 0<j<q} (-1)^floor(j p / q)`, up to
/// a global sign.
pub fn classical_abs_lk(p: i64, q: i64) -> i64 {
    let s: i64 = (1..q)
        .step_by(2)
        .map(|j| if ((j * p) / q) % 2 == 0 { 1 } else { -1 })
        .sum();
    s.abs()
}

/// Calls `f` on every composition with total at most `max`, without
/// collecting them.
pub fn for_each_composition(max: i64, f: &mut impl FnMut(&[i64])) {
    fn go(left: i64, buf: &mut Vec<i64>, f: &mut impl FnMut(&[i64])) {
        if !buf.is_empty() {
            f(buf);
        }
        for a in 1..=left {
            buf.push(a);
            go(left - a, buf, f);
            buf.pop();
        }
    }
    go(max, &mut Vec::new(), f);
}

/// The base-type patterns with total at most `max`: a single even label, or
/// odd ends around even middles.
pub fn base_type_compositions(max: i64) -> Vec<Vec<i64>> {
    fn middles(left: i64, buf: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        for last in (1..=left).step_by(2) {
            let mut c = buf.clone();
            c.push(last);
            out.push(c);
        }
        for m in (2..left).step_by(2) {
            buf.push(m);
            middles(left - m, buf, out);
            buf.pop();
        }
    }
    let mut out: Vec<Vec<i64>> = (2..=max).step_by(2).map(|a| vec![a]).collect();
    for first in (1..max).step_by(2) {
        middles(max - first, &mut vec![first], &mut out);
    }
    out
}
