//! Vertex norms of arbitrary 2-bridge links and their norm balls.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::arith::Fraction;
use crate::base_norms::{base_vertex_norms, pm_type, PmType, VertexNorms};
use crate::diagram::{is_base_type, split_diagram, RationalDiagram};
use crate::error::{Error, Result};
use crate::geometry::{convex_hull, polar_dual, support_value, ConvexPolygon, PolarBody, RationalPoint};

/// A primitive integer vector `a*l1 + b*l2`, taken up to sign with
/// representative in the upper half-plane `b > 0` or `b = 0, a > 0`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Direction {
    a: BigInt,
    b: BigInt,
}

impl Direction {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Result<Self> {
        let (a, b) = (a.into(), b.into());
        if a.is_zero() && b.is_zero() {
            return Err(Error::Domain("zero vector has no direction".into()));
        }
        let g = a.gcd(&b);
        let (mut a, mut b) = (a / &g, b / &g);
        if b.is_negative() || (b.is_zero() && a.is_negative()) {
            a = -a;
            b = -b;
        }
        Ok(Direction { a, b })
    }

    /// The line of slope `b/a`; `1/0` is the `l2` axis.
    pub fn from_slope(slope: &Fraction) -> Self {
        Direction::new(slope.denom().clone(), slope.numer().clone()).expect("slope is never 0/0")
    }

    /// Any nonzero rational vector.
    pub fn from_point(p: &RationalPoint) -> Result<Self> {
        let l = p.x.denom().lcm(p.y.denom());
        let scale = Fraction::from_integer(l);
        let (x, y) = (&p.x * &scale, &p.y * &scale);
        Direction::new(x.numer().clone(), y.numer().clone())
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }

    pub fn b(&self) -> &BigInt {
        &self.b
    }

    pub fn slope(&self) -> Fraction {
        Fraction::new(self.b.clone(), self.a.clone()).expect("primitive vector")
    }

    pub fn point(&self) -> RationalPoint {
        RationalPoint::new(self.a.clone().into(), self.b.clone().into())
    }

    /// Counterclockwise order on `[0, pi)`.
    fn angle_cmp(&self, other: &Direction) -> Ordering {
        let cross = &self.a * &other.b - &self.b * &other.a;
        BigInt::zero().cmp(&cross)
    }
}

impl fmt::Debug for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// A centrally symmetric piecewise-linear seminorm on the `(l1, l2)` plane.
///
/// The seminorm is the support function of `dual`. The stored rays are
/// exactly its breakpoints, split by whether the value there is positive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormBall {
    finite_rays: Vec<(Direction, Fraction)>,
    null_directions: Vec<Direction>,
    dual: ConvexPolygon,
    zero: bool,
}

impl NormBall {
    /// Builds the seminorm from its values on a set of directions that
    /// contains every breakpoint, so the seminorm is linear between angular
    /// neighbours. Non-breakpoints are pruned.
    pub fn from_values(values: Vec<(Direction, Fraction)>) -> Result<NormBall> {
        let mut values = values;
        values.sort_by(|x, y| x.0.angle_cmp(&y.0));
        values.dedup_by(|x, y| x.0 == y.0);
        if values.len() < 2 {
            return Err(Error::Domain("need at least two independent directions".into()));
        }
        if values.iter().any(|(_, v)| v.is_negative()) {
            return Err(Error::Domain("negative norm value".into()));
        }
        // the full circle: every direction and then its negative
        let circle: Vec<(RationalPoint, &Fraction)> = values
            .iter()
            .map(|(d, v)| (d.point(), v))
            .chain(values.iter().map(|(d, v)| (d.point().neg(), v)))
            .collect();
        let m = circle.len();
        let sector: Vec<RationalPoint> = (0..m)
            .map(|j| {
                let (c0, x0) = &circle[j];
                let (c1, x1) = &circle[(j + 1) % m];
                let det = c0.cross(c1);
                RationalPoint::new(
                    &(*x0 * &c1.y - *x1 * &c0.y) / &det,
                    &(*x1 * &c0.x - *x0 * &c1.x) / &det,
                )
            })
            .collect();
        for (j, (c, x)) in circle.iter().enumerate() {
            // the functional of the next sector must not exceed x behind it
            if sector[j].dot(&circle[(j + m - 1) % m].0) > *circle[(j + m - 1) % m].1 {
                return Err(Error::Domain(format!(
                    "values are not convex at {c:?} (value {x})"
                )));
            }
        }
        let mut finite_rays = Vec::new();
        let mut null_directions = Vec::new();
        for (j, (d, x)) in values.iter().enumerate() {
            if sector[(j + m - 1) % m] != sector[j] {
                if x.is_zero() {
                    null_directions.push(d.clone());
                } else {
                    finite_rays.push((d.clone(), x.clone()));
                }
            }
        }
        let zero = values.iter().all(|(_, v)| v.is_zero());
        Self::assemble(finite_rays, null_directions, convex_hull(&sector), zero)
    }

    /// The seminorm whose unit dual ball is `dual`.
    pub fn from_dual(dual: &ConvexPolygon) -> Result<NormBall> {
        if dual.is_empty() || !dual.is_centrally_symmetric() {
            return Err(Error::Domain(format!("{dual:?} is not a symmetric dual ball")));
        }
        let v = dual.vertices();
        let normals: Vec<Direction> = match v.len() {
            1 => Vec::new(),
            2 => vec![Direction::from_point(&RationalPoint::new(-&v[0].y, v[0].x.clone()))?],
            n => (0..n)
                .map(|i| {
                    let e = v[(i + 1) % n].sub(&v[i]);
                    Direction::from_point(&RationalPoint::new(e.y.clone(), -&e.x))
                })
                .collect::<Result<_>>()?,
        };
        let mut finite_rays = Vec::new();
        let mut null_directions = Vec::new();
        for d in normals {
            let x = support_value(dual, &d.point());
            if x.is_zero() {
                null_directions.push(d);
            } else {
                finite_rays.push((d, x));
            }
        }
        let zero = v.len() == 1;
        Self::assemble(finite_rays, null_directions, dual.clone(), zero)
    }

    fn assemble(
        mut finite_rays: Vec<(Direction, Fraction)>,
        mut null_directions: Vec<Direction>,
        dual: ConvexPolygon,
        zero: bool,
    ) -> Result<NormBall> {
        finite_rays.sort_by_key(|(d, _)| d.slope());
        finite_rays.dedup_by(|x, y| x.0 == y.0);
        null_directions.sort_by_key(Direction::slope);
        null_directions.dedup();
        if !zero && null_directions.len() > 1 {
            return Err(Error::Internal(format!(
                "nonzero seminorm with null directions {null_directions:?}"
            )));
        }
        Ok(NormBall {
            finite_rays,
            null_directions,
            dual,
            zero,
        })
    }

    pub fn zero_ball() -> NormBall {
        NormBall {
            finite_rays: Vec::new(),
            null_directions: Vec::new(),
            dual: ConvexPolygon::point(RationalPoint::origin()),
            zero: true,
        }
    }

    pub fn finite_rays(&self) -> &[(Direction, Fraction)] {
        &self.finite_rays
    }

    pub fn null_directions(&self) -> &[Direction] {
        &self.null_directions
    }

    pub fn dual(&self) -> &ConvexPolygon {
        &self.dual
    }

    pub fn is_zero(&self) -> bool {
        self.zero
    }

    /// The unit ball itself, unbounded along null directions.
    pub fn primal(&self) -> PolarBody {
        polar_dual(&self.dual).expect("dual balls are symmetric")
    }

    pub fn evaluate(&self, a: &Fraction, b: &Fraction) -> Fraction {
        support_value(&self.dual, &RationalPoint::new(a.clone(), b.clone()))
    }

    pub fn evaluate_direction(&self, d: &Direction) -> Fraction {
        support_value(&self.dual, &d.point())
    }

    /// Breakpoint slopes, null directions included, in increasing order.
    pub fn rays(&self) -> Vec<Fraction> {
        let mut out: Vec<Fraction> = self
            .finite_rays
            .iter()
            .map(|(d, _)| d.slope())
            .chain(self.null_directions.iter().map(Direction::slope))
            .collect();
        out.sort();
        out
    }

    pub fn face_count(&self) -> usize {
        2 * self.rays().len()
    }

    pub fn shape(&self) -> Shape {
        let rays = self.rays();
        let is = |xs: &[Fraction]| rays.len() == xs.len() && xs.iter().all(|x| rays.contains(x));
        match rays.len() {
            0 => Shape::Plane,
            1 => Shape::Strip,
            2 if is(&[Fraction::zero(), Fraction::infinity()]) => Shape::QuadrilateralAxes,
            2 if is(&[Fraction::one(), -Fraction::one()]) => Shape::QuadrilateralBisectors,
            2 => Shape::Quadrilateral,
            3 => Shape::Hexagon,
            4 => Shape::Octagon,
            n => Shape::Polygon(2 * n),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Shape {
    Plane,
    Strip,
    QuadrilateralAxes,
    QuadrilateralBisectors,
    /// Four faces with vertices off the axes and bisectors (satellites only).
    Quadrilateral,
    Hexagon,
    Octagon,
    /// More than eight faces (satellites only).
    Polygon(usize),
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Shape::Plane => f.write_str("plane"),
            Shape::Strip => f.write_str("strip"),
            Shape::QuadrilateralAxes => f.write_str("quadrilateral-axes"),
            Shape::QuadrilateralBisectors => f.write_str("quadrilateral-bisectors"),
            Shape::Quadrilateral => f.write_str("quadrilateral"),
            Shape::Hexagon => f.write_str("hexagon"),
            Shape::Octagon => f.write_str("octagon"),
            Shape::Polygon(n) => write!(f, "{n}-gon"),
        }
    }
}

/// Tangle-sum of the base-type pieces.
pub fn vertex_norms_of_diagram(d: &RationalDiagram) -> Result<VertexNorms> {
    let split = split_diagram(d)?;
    let r = split.cuts.len() as u64;
    let (mut x10, mut x11, mut x1m1) = (r, 2 * r, 2 * r);
    for (piece, &sign) in split.pieces.iter().zip(&split.signs) {
        let v = match piece {
            Some(p) => base_vertex_norms(p)?,
            None => VertexNorms::zero(),
        };
        x10 += v.x10;
        x11 += v.diagonal(sign);
        x1m1 += v.diagonal(-sign);
    }
    VertexNorms::new(x10, x11, x1m1)
        .map_err(|e| Error::Internal(format!("{d}: tangle sum gave {e}")))
}

pub fn vertex_norms(f: &Fraction) -> Result<VertexNorms> {
    vertex_norms_of_diagram(&RationalDiagram::from_fraction(f)?)
}

fn int(n: u64) -> Fraction {
    Fraction::from_integer(n)
}

pub fn build_ball(v: &VertexNorms) -> Result<NormBall> {
    v.validate()?;
    let dir = |a: i64, b: i64| Direction::new(a, b).expect("nonzero");
    NormBall::from_values(vec![
        (dir(1, 0), int(v.x10)),
        (dir(0, 1), int(v.x01)),
        (dir(1, 1), int(v.x11)),
        (dir(1, -1), int(v.x1m1)),
    ])
}

/// The ball of `L_{p/q}`.
pub fn ball_of_fraction(f: &Fraction) -> Result<NormBall> {
    build_ball(&vertex_norms(f)?)
}

pub fn evaluate(ball: &NormBall, a: &Fraction, b: &Fraction) -> Fraction {
    ball.evaluate(a, b)
}

pub fn rays_of(ball: &NormBall) -> Vec<Fraction> {
    ball.rays()
}

pub fn face_count(ball: &NormBall) -> usize {
    ball.face_count()
}

/// The seminorm from the four vertex values, sector by sector: for
/// `a >= b >= 0` it is `(a-b) x(l1) + b x(l1+l2)`, extended by the symmetries
/// `x(-v) = x(v)` and `x(a,b) = x(b,a)`.
pub fn sector_formula(v: &VertexNorms, a: &Fraction, b: &Fraction) -> Fraction {
    let (a, b) = if a.is_negative() { (-a, -b) } else { (a.clone(), b.clone()) };
    let (diag, b) = if b.is_negative() {
        (int(v.x1m1), -b)
    } else {
        (int(v.x11), b)
    };
    let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
    (&hi - &lo) * int(v.x10) + lo * diag
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BallClassification {
    pub diagram: RationalDiagram,
    pub vertex_norms: VertexNorms,
    pub ball: NormBall,
    pub base_type: bool,
    pub fibers_with_s10: bool,
    pub rays: Vec<Fraction>,
    pub faces: usize,
    pub shape: Shape,
}

pub fn classify(f: &Fraction) -> Result<BallClassification> {
    classify_diagram(&RationalDiagram::from_fraction(f)?)
}

/// Classifies the ball and cross-checks it against the decomposition
/// criteria for rays inside `{+-1}`, `{0,-1,inf}`, `{0,1,inf}` and `{0,inf}`.
pub fn classify_diagram(d: &RationalDiagram) -> Result<BallClassification> {
    let norms = vertex_norms_of_diagram(d)?;
    let ball = build_ball(&norms)?;
    let rays = ball.rays();
    let base_type = is_base_type(d);
    let faces = ball.face_count();

    // the criteria are stated for positive diagrams, and the mirror negates slopes
    let positive = if d.mirror() { d.mirrored() } else { d.clone() };
    let slopes: Vec<Fraction> = if d.mirror() {
        rays.iter().map(|r| if r.is_infinite() { r.clone() } else { -r }).collect()
    } else {
        rays.clone()
    };
    let within = |allowed: &[Fraction]| slopes.iter().all(|r| allowed.contains(r));
    let (zero, one, inf) = (Fraction::zero(), Fraction::one(), Fraction::infinity());
    let check = |name: &str, by_rays: bool, by_pieces: bool| {
        if by_rays == by_pieces {
            Ok(())
        } else {
            Err(Error::Internal(format!(
                "{d}: {name} criterion disagrees (rays {rays:?}, pieces say {by_pieces})"
            )))
        }
    };
    check("base-type", within(&[one.clone(), -&one]), base_type)?;

    let split = split_diagram(&positive)?;
    let mut minus_ok = true;
    let mut plus_ok = true;
    let mut squares = true;
    for (piece, &sign) in split.pieces.iter().zip(&split.signs) {
        let t = match piece {
            Some(p) => pm_type(p)?,
            None => PmType::Both,
        };
        minus_ok &= t.admits(sign);
        plus_ok &= t.admits(-sign);
        squares &= piece
            .as_ref()
            .map_or(true, |p| matches!(p.coefficients(), [2] | [1, 1]));
    }
    check("{0,-1,inf}", within(&[zero.clone(), -&one, inf.clone()]), minus_ok)?;
    check("{0,1,inf}", within(&[zero.clone(), one.clone(), inf.clone()]), plus_ok)?;
    check("{0,inf}", within(&[zero, inf]), squares)?;
    if faces > 8 {
        return Err(Error::Internal(format!("{d}: {faces} faces exceeds 8")));
    }

    Ok(BallClassification {
        diagram: d.clone(),
        vertex_norms: norms,
        shape: ball.shape(),
        ball,
        base_type,
        fibers_with_s10: base_type,
        rays,
        faces,
    })
}
