//! Exact planar convex geometry over the rationals.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;

use crate::arith::Fraction;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalPoint {
    pub x: Fraction,
    pub y: Fraction,
}

impl RationalPoint {
    /// Panics on an infinite coordinate.
    pub fn new(x: Fraction, y: Fraction) -> Self {
        assert!(!x.is_infinite() && !y.is_infinite(), "points are finite");
        RationalPoint { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        RationalPoint::new(x.into(), y.into())
    }

    pub fn origin() -> Self {
        Self::from_ints(0, 0)
    }

    pub fn is_origin(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn dot(&self, o: &RationalPoint) -> Fraction {
        &self.x * &o.x + &self.y * &o.y
    }

    pub fn cross(&self, o: &RationalPoint) -> Fraction {
        &self.x * &o.y - &self.y * &o.x
    }

    pub fn add(&self, o: &RationalPoint) -> RationalPoint {
        RationalPoint::new(&self.x + &o.x, &self.y + &o.y)
    }

    pub fn sub(&self, o: &RationalPoint) -> RationalPoint {
        RationalPoint::new(&self.x - &o.x, &self.y - &o.y)
    }

    pub fn neg(&self) -> RationalPoint {
        RationalPoint::new(-&self.x, -&self.y)
    }

    pub fn scale(&self, s: &Fraction) -> RationalPoint {
        RationalPoint::new(&self.x * s, &self.y * s)
    }
}

impl fmt::Debug for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Orientation of `o -> a -> b`: positive when counterclockwise.
fn turn(o: &RationalPoint, a: &RationalPoint, b: &RationalPoint) -> Ordering {
    a.sub(o).cross(&b.sub(o)).cmp(&Fraction::zero())
}

/// Angular order of nonzero vectors, starting at the positive x-axis.
fn angle_cmp(a: &RationalPoint, b: &RationalPoint) -> Ordering {
    let half = |v: &RationalPoint| {
        let upper = v.y.is_positive() || (v.y.is_zero() && v.x.is_positive());
        if upper {
            0
        } else {
            1
        }
    };
    half(a)
        .cmp(&half(b))
        .then_with(|| Fraction::zero().cmp(&a.cross(b)))
}

/// A convex polygon with strictly convex counterclockwise vertices.
///
/// Zero, one or two vertices stand for the empty set, a point, and a segment.
/// The vertex list starts at the lowest vertex (leftmost among ties), so equal
/// polygons have equal lists.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ConvexPolygon {
    vertices: Vec<RationalPoint>,
}

impl fmt::Debug for ConvexPolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.vertices).finish()
    }
}

impl ConvexPolygon {
    pub fn point(p: RationalPoint) -> Self {
        ConvexPolygon { vertices: vec![p] }
    }

    pub fn vertices(&self) -> &[RationalPoint] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Closed under `v -> -v`.
    pub fn is_centrally_symmetric(&self) -> bool {
        let set: HashSet<&RationalPoint> = self.vertices.iter().collect();
        self.vertices.iter().all(|v| set.contains(&v.neg()))
    }

    /// Image under the linear map with matrix rows `(m00, m01)`, `(m10, m11)`.
    pub fn linear_image(&self, m: [[&Fraction; 2]; 2]) -> ConvexPolygon {
        convex_hull(
            &self
                .vertices
                .iter()
                .map(|v| {
                    RationalPoint::new(m[0][0] * &v.x + m[0][1] * &v.y, m[1][0] * &v.x + m[1][1] * &v.y)
                })
                .collect::<Vec<_>>(),
        )
    }

    /// Closed edge directions, counterclockwise from the first vertex.
    fn edge_vectors(&self) -> Vec<RationalPoint> {
        let n = self.vertices.len();
        if n < 2 {
            return Vec::new();
        }
        (0..n)
            .map(|i| self.vertices[(i + 1) % n].sub(&self.vertices[i]))
            .collect()
    }
}

/// Andrew's monotone chain, dropping collinear and repeated points.
pub fn convex_hull(points: &[RationalPoint]) -> ConvexPolygon {
    let mut pts: Vec<RationalPoint> = points.to_vec();
    pts.sort_by(|a, b| a.x.cmp(&b.x).then_with(|| a.y.cmp(&b.y)));
    pts.dedup();
    if pts.len() <= 2 {
        return canonical(pts);
    }
    let mut lower: Vec<RationalPoint> = Vec::new();
    for p in &pts {
        while lower.len() >= 2
            && turn(&lower[lower.len() - 2], &lower[lower.len() - 1], p) != Ordering::Greater
        {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<RationalPoint> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2
            && turn(&upper[upper.len() - 2], &upper[upper.len() - 1], p) != Ordering::Greater
        {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    canonical(lower)
}

fn canonical(mut vertices: Vec<RationalPoint>) -> ConvexPolygon {
    if let Some(start) = (0..vertices.len())
        .min_by(|&i, &j| {
            let (a, b) = (&vertices[i], &vertices[j]);
            a.y.cmp(&b.y).then_with(|| a.x.cmp(&b.x))
        })
    {
        vertices.rotate_left(start);
    }
    ConvexPolygon { vertices }
}

/// Sum by merging the two edge sequences in angular order.
pub fn minkowski_sum(a: &ConvexPolygon, b: &ConvexPolygon) -> ConvexPolygon {
    if a.is_empty() || b.is_empty() {
        return ConvexPolygon { vertices: Vec::new() };
    }
    let (ea, eb) = (a.edge_vectors(), b.edge_vectors());
    let mut cur = a.vertices[0].add(&b.vertices[0]);
    let mut out = vec![cur.clone()];
    let (mut i, mut j) = (0, 0);
    while i < ea.len() || j < eb.len() {
        let step = if j == eb.len() || (i < ea.len() && angle_cmp(&ea[i], &eb[j]) != Ordering::Greater) {
            i += 1;
            &ea[i - 1]
        } else {
            j += 1;
            &eb[j - 1]
        };
        cur = cur.add(step);
        out.push(cur.clone());
    }
    convex_hull(&out)
}

/// The polar of a centrally symmetric polygon, which may be unbounded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolarBody {
    Polygon(ConvexPolygon),
    /// `{ p : |<normal, p>| <= 1 }`.
    Strip { normal: RationalPoint },
    Plane,
}

/// A support value, possibly infinite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Support {
    Finite(Fraction),
    Infinite,
}

impl PolarBody {
    pub fn support(&self, v: &RationalPoint) -> Support {
        match self {
            PolarBody::Polygon(p) => Support::Finite(support_value(p, v)),
            PolarBody::Strip { normal } => {
                if v.cross(normal).is_zero() {
                    // v = t * normal, and the support is |t|
                    let t = if normal.x.is_zero() {
                        &v.y / &normal.y
                    } else {
                        &v.x / &normal.x
                    };
                    Support::Finite(t.abs())
                } else {
                    Support::Infinite
                }
            }
            PolarBody::Plane => {
                if v.is_origin() {
                    Support::Finite(Fraction::zero())
                } else {
                    Support::Infinite
                }
            }
        }
    }

    /// The polar back again, always bounded.
    pub fn polar(&self) -> ConvexPolygon {
        match self {
            PolarBody::Plane => ConvexPolygon::point(RationalPoint::origin()),
            PolarBody::Strip { normal } => convex_hull(&[normal.clone(), normal.neg()]),
            PolarBody::Polygon(p) => match polar_dual(p) {
                Ok(PolarBody::Polygon(q)) => q,
                other => unreachable!("polar of a bounded symmetric polygon: {other:?}"),
            },
        }
    }

    /// Whether `p` satisfies every defining inequality.
    pub fn contains(&self, p: &RationalPoint) -> bool {
        match self {
            PolarBody::Plane => true,
            PolarBody::Strip { normal } => normal.dot(p).abs() <= Fraction::one(),
            PolarBody::Polygon(poly) => {
                let n = poly.len();
                match n {
                    0 => false,
                    1 => poly.vertices[0] == *p,
                    2 => {
                        let (a, b) = (&poly.vertices[0], &poly.vertices[1]);
                        turn(a, b, p) == Ordering::Equal
                            && a.sub(p).dot(&b.sub(p)) <= Fraction::zero()
                    }
                    _ => (0..n).all(|i| {
                        turn(&poly.vertices[i], &poly.vertices[(i + 1) % n], p) != Ordering::Less
                    }),
                }
            }
        }
    }
}

/// `{ p : <v, p> <= 1 for every vertex v }`.
pub fn polar_dual(p: &ConvexPolygon) -> Result<PolarBody> {
    if p.is_empty() {
        return Err(Error::Domain("polar of the empty set".into()));
    }
    if !p.is_centrally_symmetric() {
        return Err(Error::Domain(format!("{p:?} is not centrally symmetric")));
    }
    let v = p.vertices();
    match v.len() {
        1 => Ok(PolarBody::Plane),
        2 => Ok(PolarBody::Strip {
            normal: v[0].clone(),
        }),
        n => {
            let duals: Vec<RationalPoint> = (0..n)
                .map(|i| {
                    let (a, b) = (&v[i], &v[(i + 1) % n]);
                    let c = a.cross(b);
                    RationalPoint::new(&(&b.y - &a.y) / &c, &(&a.x - &b.x) / &c)
                })
                .collect();
            Ok(PolarBody::Polygon(convex_hull(&duals)))
        }
    }
}

/// `max <v, w>` over the vertices `w` of `p`.
pub fn support_value(p: &ConvexPolygon, v: &RationalPoint) -> Fraction {
    p.vertices
        .iter()
        .map(|w| v.dot(w))
        .max()
        .expect("support of a nonempty polygon")
}
