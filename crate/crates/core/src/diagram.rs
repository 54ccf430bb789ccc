//! The rational diagram `T(a_1, ..., a_k)` as a 4-plat.
//!
//! Strand positions are numbered 0..=3 from the left. Box `i` (1-based)
//! twists positions 1,2 when `i` is odd and positions 0,1 when `i` is even.
//! The top is capped by (0,1),(2,3); the bottom by (0,1),(2,3) for odd `k`
//! and by (0,3),(1,2) for even `k`.
//!
//! The standard orientation runs each component downwards out of its
//! leftmost top endpoint. Component 1 is the one through top position 0.

use std::fmt;
use std::str::FromStr;

use crate::arith::{cf_evaluate, positive_cf, ContinuedFraction, Fraction};
use crate::error::{Error, Result};

/// An alternating rational diagram with positive box labels and a mirror flag.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalDiagram {
    boxes: ContinuedFraction,
    mirror: bool,
}

impl RationalDiagram {
    /// Requires positive labels and a two-component closure.
    pub fn new(boxes: ContinuedFraction, mirror: bool) -> Result<Self> {
        if !boxes.is_all_positive() {
            return Err(Error::Domain(format!(
                "box labels must be positive (pass --mirror for the mirror image): [{boxes}]"
            )));
        }
        let f = cf_evaluate(&boxes)?;
        if !num_integer::Integer::is_even(f.denom()) {
            return Err(Error::KnotInput(format!(
                "T({boxes}) closes to a knot ({f} has odd denominator)"
            )));
        }
        Ok(RationalDiagram { boxes, mirror })
    }

    /// The canonical all-positive diagram of `f`.
    pub fn from_fraction(f: &Fraction) -> Result<Self> {
        if !f.is_infinite() && f.is_positive() && num_integer::Integer::is_odd(f.denom()) {
            return Err(Error::KnotInput(format!("{f} has odd denominator")));
        }
        RationalDiagram::new(positive_cf(f)?, false)
    }

    pub fn boxes(&self) -> &ContinuedFraction {
        &self.boxes
    }

    pub fn coefficients(&self) -> &[i64] {
        self.boxes.coefficients()
    }

    pub fn mirror(&self) -> bool {
        self.mirror
    }

    pub fn mirrored(&self) -> Self {
        RationalDiagram {
            boxes: self.boxes.clone(),
            mirror: !self.mirror,
        }
    }

    /// The slope `p/q` of the unmirrored diagram.
    pub fn fraction(&self) -> Fraction {
        cf_evaluate(&self.boxes).expect("validated at construction")
    }
}

impl fmt::Display for RationalDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({})", self.boxes)?;
        if self.mirror {
            f.write_str("*")?;
        }
        Ok(())
    }
}

impl FromStr for RationalDiagram {
    type Err = Error;

    /// `T(a1,...)` or `a1,...`, with a trailing `*` for the mirror.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (body, mirror) = match s.strip_suffix('*') {
            Some(b) => (b, true),
            None => (s, false),
        };
        RationalDiagram::new(body.parse()?, mirror)
    }
}

/// Per-box component data under the standard orientation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentTrace {
    /// Component labels (1 or 2) of the two strands entering each box.
    pub box_strands: Vec<(u8, u8)>,
    /// Sign of every crossing, box by box.
    pub crossing_signs: Vec<Vec<i8>>,
}

impl ComponentTrace {
    pub fn is_self_crossing(&self, box_index: usize) -> bool {
        let (a, b) = self.box_strands[box_index];
        a == b
    }
}

/// Orientation of one strand segment: its component (0 or 1) and whether it
/// runs downwards (+1) or upwards (-1).
#[derive(Clone, Copy, Debug, Default)]
struct Seg {
    comp: u8,
    dir: i8,
}

/// The whole plat, crossing by crossing. Segment `(p, t)` is the piece of
/// strand at position `p` between crossing `t-1` and crossing `t`.
struct Walk {
    k: usize,
    /// Left position of each crossing.
    lo: Vec<usize>,
    /// 0-based box of each crossing.
    box_of: Vec<usize>,
    segs: Vec<[Seg; 4]>,
    components: usize,
}

fn cap_mate(caps: &[(usize, usize); 2], p: usize) -> usize {
    for &(a, b) in caps {
        if p == a {
            return b;
        }
        if p == b {
            return a;
        }
    }
    unreachable!("every position is capped")
}

const TOP: [(usize, usize); 2] = [(0, 1), (2, 3)];

fn bottom_caps(k: usize) -> [(usize, usize); 2] {
    if k % 2 == 1 {
        [(0, 1), (2, 3)]
    } else {
        [(0, 3), (1, 2)]
    }
}

impl Walk {
    /// Traces the closure of positive labels `coefficients`.
    fn new(coefficients: &[i64]) -> Walk {
        let k = coefficients.len();
        let mut lo = Vec::new();
        let mut box_of = Vec::new();
        for (i, &a) in coefficients.iter().enumerate() {
            let l = if i % 2 == 0 { 1 } else { 0 };
            for _ in 0..a {
                lo.push(l);
                box_of.push(i);
            }
        }
        let n = lo.len();
        let bottom = bottom_caps(k);
        let mut seen = vec![[false; 4]; n + 1];
        let mut segs = vec![[Seg::default(); 4]; n + 1];
        let mut components = 0u8;
        for start in 0..4 {
            if seen[0][start] {
                continue;
            }
            let (mut p, mut t, mut dir) = (start, 0usize, 1i8);
            while !seen[t][p] {
                seen[t][p] = true;
                segs[t][p] = Seg {
                    comp: components,
                    dir,
                };
                if dir == 1 {
                    if t == n {
                        p = cap_mate(&bottom, p);
                        dir = -1;
                        continue;
                    }
                    p = swap_at(p, lo[t]);
                    t += 1;
                } else {
                    if t == 0 {
                        p = cap_mate(&TOP, p);
                        dir = 1;
                        continue;
                    }
                    p = swap_at(p, lo[t - 1]);
                    t -= 1;
                }
            }
            components += 1;
        }
        Walk {
            k,
            lo,
            box_of,
            segs,
            components: components as usize,
        }
    }

    fn crossings(&self) -> usize {
        self.lo.len()
    }

    /// The two segments entering crossing `t` from above.
    fn incoming(&self, t: usize) -> (Seg, Seg) {
        let l = self.lo[t];
        (self.segs[t][l], self.segs[t][l + 1])
    }

    /// Right-handed crossings between coherently oriented strands count +1.
    /// Odd boxes twist one way and even boxes the other.
    fn sign(&self, t: usize) -> i8 {
        let (a, b) = self.incoming(t);
        let eps = if self.box_of[t] % 2 == 0 { 1 } else { -1 };
        eps * a.dir * b.dir
    }
}

fn swap_at(p: usize, lo: usize) -> usize {
    if p == lo {
        lo + 1
    } else if p == lo + 1 {
        lo
    } else {
        p
    }
}

/// Number of components of the plat closure of positive labels.
pub fn count_components(coefficients: &[i64]) -> Result<usize> {
    if coefficients.is_empty() || coefficients.iter().any(|&a| a <= 0) {
        return Err(Error::Domain("expected nonempty positive labels".into()));
    }
    Ok(Walk::new(coefficients).components)
}

pub fn trace_components(d: &RationalDiagram) -> Result<ComponentTrace> {
    let w = Walk::new(d.coefficients());
    if w.components != 2 {
        return Err(Error::KnotInput(format!(
            "{d} traces to {} components",
            w.components
        )));
    }
    let mut box_strands = Vec::with_capacity(w.k);
    let mut crossing_signs = vec![Vec::new(); w.k];
    let mut t = 0;
    for (i, &a) in d.coefficients().iter().enumerate() {
        let (x, y) = w.incoming(t);
        box_strands.push((x.comp + 1, y.comp + 1));
        let self_crossing = x.comp == y.comp;
        for _ in 0..a {
            let s = w.sign(t);
            // The mirror reverses every crossing and also l2, so only
            // self-crossings change sign.
            crossing_signs[i].push(if d.mirror() && self_crossing { -s } else { s });
            t += 1;
        }
    }
    Ok(ComponentTrace {
        box_strands,
        crossing_signs,
    })
}

/// 1-based indices and labels of boxes where a component crosses itself.
pub fn self_crossing_boxes(d: &RationalDiagram) -> Result<Vec<(usize, i64)>> {
    let trace = trace_components(d)?;
    Ok(d.coefficients()
        .iter()
        .enumerate()
        .filter(|(i, _)| trace.is_self_crossing(*i))
        .map(|(i, &a)| (i + 1, a))
        .collect())
}

/// `k = 1` with `a_1` even, or odd ends around even middles.
pub fn is_base_type(d: &RationalDiagram) -> bool {
    base_type_pattern(d.coefficients())
}

pub(crate) fn base_type_pattern(a: &[i64]) -> bool {
    match a {
        [] => false,
        [a1] => a1 % 2 == 0,
        [first, middle @ .., last] => {
            first % 2 != 0 && last % 2 != 0 && middle.iter().all(|x| x % 2 == 0)
        }
    }
}

/// Half the signed count of crossings between the two components.
pub fn linking_number(d: &RationalDiagram) -> Result<i64> {
    let trace = trace_components(d)?;
    let total: i64 = (0..trace.box_strands.len())
        .filter(|&i| !trace.is_self_crossing(i))
        .flat_map(|i| trace.crossing_signs[i].iter().map(|&s| s as i64))
        .sum();
    debug_assert!(total % 2 == 0);
    Ok(total / 2)
}

/// Number of Seifert circles of the diagram, with the second component
/// reversed when `reverse_second` is set.
pub fn seifert_circles(d: &RationalDiagram, reverse_second: bool) -> Result<usize> {
    let w = Walk::new(d.coefficients());
    if w.components != 2 {
        return Err(Error::KnotInput(d.to_string()));
    }
    let n = w.crossings();
    let id = |p: usize, t: usize| t * 4 + p;
    let dir = |s: Seg| {
        if reverse_second && s.comp == 1 {
            -s.dir
        } else {
            s.dir
        }
    };
    let mut uf = UnionFind::new(4 * (n + 1));
    for (a, b) in TOP {
        uf.union(id(a, 0), id(b, 0));
    }
    for (a, b) in bottom_caps(w.k) {
        uf.union(id(a, n), id(b, n));
    }
    for t in 0..n {
        let l = w.lo[t];
        for p in (0..4).filter(|&p| p != l && p != l + 1) {
            uf.union(id(p, t), id(p, t + 1));
        }
        let (a, b) = w.incoming(t);
        if dir(a) == dir(b) {
            // coherent: smoothing keeps each side vertical
            uf.union(id(l, t), id(l, t + 1));
            uf.union(id(l + 1, t), id(l + 1, t + 1));
        } else {
            uf.union(id(l, t), id(l + 1, t));
            uf.union(id(l, t + 1), id(l + 1, t + 1));
        }
    }
    Ok(uf.count())
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
        let (ra, rb) = (self.find(a), self.find(b));
        self.0[ra] = rb;
    }

    fn count(&mut self) -> usize {
        (0..self.0.len()).filter(|&x| self.find(x) == x).count()
    }
}

/// Base-type pieces between consecutive self-crossing boxes, with the
/// relative orientation sign of each piece.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Split {
    /// `None` is the trivial tangle left by a cut at either end or by two
    /// adjacent cuts.
    pub pieces: Vec<Option<RationalDiagram>>,
    pub signs: Vec<i8>,
    /// The self-crossing boxes, 1-based, with their labels.
    pub cuts: Vec<(usize, i64)>,
}

/// Cuts at every self-crossing box.
///
/// Piece `j` carries sign `(-1)^(b_1 + ... + b_j + i_j)`, where `i_j` is the
/// index of the `j`-th cut box: the second component of the piece below a
/// cut runs against the induced standard orientation exactly when this is
/// negative.
pub fn split_diagram(d: &RationalDiagram) -> Result<Split> {
    let cuts = self_crossing_boxes(d)?;
    let a = d.coefficients();
    let mut pieces = Vec::with_capacity(cuts.len() + 1);
    let mut signs = vec![1i8];
    let mut start = 0;
    let mut label_sum = 0i64;
    for &(i, b) in &cuts {
        pieces.push(piece(&a[start..i - 1], d.mirror())?);
        start = i;
        label_sum += b;
        signs.push(if (label_sum + i as i64) % 2 == 0 { 1 } else { -1 });
    }
    pieces.push(piece(&a[start..], d.mirror())?);
    Ok(Split {
        pieces,
        signs,
        cuts,
    })
}

fn piece(coefficients: &[i64], mirror: bool) -> Result<Option<RationalDiagram>> {
    if coefficients.is_empty() {
        return Ok(None);
    }
    let internal = |why: String| Error::Internal(format!("tangle piece T({coefficients:?}): {why}"));
    let cf = ContinuedFraction::new(coefficients.to_vec()).map_err(|e| internal(e.to_string()))?;
    let d = RationalDiagram::new(cf, mirror).map_err(|e| internal(e.to_string()))?;
    if !is_base_type(&d) {
        return Err(internal("not base-type".into()));
    }
    Ok(Some(d))
}
