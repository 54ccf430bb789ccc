//! Exact rational arithmetic and continued fractions.
//!
//! [`Fraction`] is an arbitrary-precision reduced rational. The point at
//! infinity `1/0` is representable because it is a vertex of the Farey
//! tessellation and a valid slope, but every arithmetic operator panics on it.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A reduced rational `num/den` with `den >= 0`.
///
/// `0/1` is the canonical zero and `1/0` the canonical infinity.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Fraction {
    num: BigInt,
    den: BigInt,
}

impl Fraction {
    /// Builds a reduced fraction. `n/0` with `n != 0` becomes `1/0`.
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let (num, den) = (num.into(), den.into());
        if den.is_zero() {
            if num.is_zero() {
                return Err(Error::Domain("0/0 is not a fraction".into()));
            }
            return Ok(Self::infinity());
        }
        Ok(Self::reduced(num, den))
    }

    /// Reduces `num/den`. Panics when `den` is zero.
    fn reduced(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator in finite arithmetic");
        let g = num.gcd(&den);
        let (mut num, mut den) = (num / &g, den / &g);
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        Fraction { num, den }
    }

    pub fn from_integer(n: impl Into<BigInt>) -> Self {
        Fraction {
            num: n.into(),
            den: BigInt::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn infinity() -> Self {
        Fraction {
            num: BigInt::one(),
            den: BigInt::zero(),
        }
    }

    pub fn numer(&self) -> &BigInt {
        &self.num
    }

    pub fn denom(&self) -> &BigInt {
        &self.den
    }

    pub fn is_infinite(&self) -> bool {
        self.den.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    pub fn is_positive(&self) -> bool {
        self.num.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.num.is_negative()
    }

    pub fn abs(&self) -> Self {
        Fraction {
            num: self.num.abs(),
            den: self.den.clone(),
        }
    }

    /// `1/self`; zero maps to infinity and infinity to zero.
    pub fn recip(&self) -> Self {
        if self.is_infinite() {
            return Self::zero();
        }
        if self.is_zero() {
            return Self::infinity();
        }
        Self::reduced(self.den.clone(), self.num.clone())
    }

    /// Nearest `f64`, for presentation only. Infinity maps to `f64::INFINITY`.
    pub fn to_f64(&self) -> f64 {
        if self.is_infinite() {
            return f64::INFINITY;
        }
        let n = self.num.to_f64().unwrap_or(f64::NAN);
        let d = self.den.to_f64().unwrap_or(f64::NAN);
        n / d
    }

    fn expect_finite(&self) {
        assert!(!self.is_infinite(), "arithmetic on 1/0");
    }
}

/// Shorthand for a small literal fraction. Panics on `0/0`.
pub fn ratio(num: i64, den: i64) -> Fraction {
    Fraction::new(num, den).expect("literal fraction")
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl fmt::Debug for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl FromStr for Fraction {
    type Err = Error;

    /// Accepts `p/q`, a bare integer, or `inf`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("inf") || s == "∞" {
            return Ok(Self::infinity());
        }
        let parse = |t: &str| {
            t.trim()
                .parse::<BigInt>()
                .map_err(|_| Error::Parse(format!("not a fraction: {s:?}")))
        };
        match s.split_once('/') {
            Some((n, d)) => Fraction::new(parse(n)?, parse(d)?),
            None => Ok(Fraction::from_integer(parse(s)?)),
        }
    }
}

impl From<i64> for Fraction {
    fn from(n: i64) -> Self {
        Fraction::from_integer(n)
    }
}

impl From<BigInt> for Fraction {
    fn from(n: BigInt) -> Self {
        Fraction::from_integer(n)
    }
}

impl PartialOrd for Fraction {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Infinity sorts above every finite value.
impl Ord for Fraction {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self.is_infinite(), other.is_infinite()) {
            (true, true) => Ordering::Equal,
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            (false, false) => (&self.num * &other.den).cmp(&(&other.num * &self.den)),
        }
    }
}

impl<'a> Add<&'a Fraction> for &'a Fraction {
    type Output = Fraction;
    fn add(self, rhs: &Fraction) -> Fraction {
        self.expect_finite();
        rhs.expect_finite();
        Fraction::reduced(
            &self.num * &rhs.den + &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
    }
}

impl<'a> Sub<&'a Fraction> for &'a Fraction {
    type Output = Fraction;
    fn sub(self, rhs: &Fraction) -> Fraction {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a Fraction> for &'a Fraction {
    type Output = Fraction;
    fn mul(self, rhs: &Fraction) -> Fraction {
        self.expect_finite();
        rhs.expect_finite();
        Fraction::reduced(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl<'a> Div<&'a Fraction> for &'a Fraction {
    type Output = Fraction;
    fn div(self, rhs: &Fraction) -> Fraction {
        self.expect_finite();
        rhs.expect_finite();
        assert!(!rhs.is_zero(), "division by zero");
        Fraction::reduced(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &Fraction {
    type Output = Fraction;
    fn neg(self) -> Fraction {
        self.expect_finite();
        Fraction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for Fraction {
    type Output = Fraction;
    fn neg(self) -> Fraction {
        -&self
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<Fraction> for Fraction {
            type Output = Fraction;
            fn $m(self, rhs: Fraction) -> Fraction {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Fraction> for Fraction {
            type Output = Fraction;
            fn $m(self, rhs: &Fraction) -> Fraction {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<Fraction> for &'a Fraction {
            type Output = Fraction;
            fn $m(self, rhs: Fraction) -> Fraction {
                self.$m(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);
owned_binop!(Div, div);

impl std::iter::Sum for Fraction {
    fn sum<I: Iterator<Item = Fraction>>(iter: I) -> Fraction {
        iter.fold(Fraction::zero(), |acc, x| acc + x)
    }
}

/// Coefficients `[a_1, ..., a_k]` of the nested fraction
/// `1/(a_1 + 1/(a_2 + ... + 1/a_k))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ContinuedFraction(Vec<i64>);

impl ContinuedFraction {
    /// Rejects empty lists and zero coefficients.
    pub fn new(coefficients: Vec<i64>) -> Result<Self> {
        if coefficients.is_empty() {
            return Err(Error::Domain("empty continued fraction".into()));
        }
        if coefficients.contains(&0) {
            return Err(Error::Domain(
                "continued fraction coefficients must be nonzero".into(),
            ));
        }
        Ok(ContinuedFraction(coefficients))
    }

    pub fn coefficients(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_all_positive(&self) -> bool {
        self.0.iter().all(|&a| a > 0)
    }

    pub fn is_all_negative(&self) -> bool {
        self.0.iter().all(|&a| a < 0)
    }

    pub fn is_all_even(&self) -> bool {
        self.0.iter().all(|a| a % 2 == 0)
    }

    pub fn reversed(&self) -> Self {
        ContinuedFraction(self.0.iter().rev().copied().collect())
    }

    pub fn negated(&self) -> Self {
        ContinuedFraction(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for ContinuedFraction {
    type Err = Error;

    /// Parses `a1,a2,...`, optionally wrapped as `T(a1,a2,...)`.
    fn from_str(s: &str) -> Result<Self> {
        let mut t = s.trim();
        if let Some(inner) = t.strip_prefix("T(").and_then(|r| r.strip_suffix(')')) {
            t = inner;
        }
        let coefficients = t
            .split(',')
            .map(|c| {
                c.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad coefficient {c:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        ContinuedFraction::new(coefficients)
    }
}

/// Value of the nested fraction, in lowest terms.
pub fn cf_evaluate(cf: &ContinuedFraction) -> Result<Fraction> {
    let mut tail: Option<Fraction> = None;
    for &a in cf.coefficients().iter().rev() {
        let denom = match tail {
            None => Fraction::from_integer(a),
            Some(t) => Fraction::from_integer(a) + t,
        };
        if denom.is_zero() {
            return Err(Error::IndeterminateExpansion(cf.to_string()));
        }
        tail = Some(denom.recip());
    }
    Ok(tail.expect("nonempty continued fraction"))
}

/// Convergents `p_j/q_j = [a_1, ..., a_j]` from the three-term recurrence
/// seeded with `p_{-1}/q_{-1} = 1/0` and `p_0/q_0 = 0/1`.
pub fn convergents(cf: &ContinuedFraction) -> Result<Vec<Fraction>> {
    // Surfaces the indeterminate case with the same error as evaluation.
    cf_evaluate(cf)?;
    let (mut p_prev, mut q_prev) = (BigInt::one(), BigInt::zero());
    let (mut p, mut q) = (BigInt::zero(), BigInt::one());
    let mut out = Vec::with_capacity(cf.len());
    for &a in cf.coefficients() {
        let a = BigInt::from(a);
        let p_next = &a * &p + &p_prev;
        let q_next = &a * &q + &q_prev;
        p_prev = std::mem::replace(&mut p, p_next);
        q_prev = std::mem::replace(&mut q, q_next);
        if q.is_zero() {
            return Err(Error::IndeterminateExpansion(cf.to_string()));
        }
        out.push(Fraction::new(p.clone(), q.clone())?);
    }
    Ok(out)
}

fn require_unit_interval(f: &Fraction) -> Result<()> {
    if f.is_infinite() || !f.is_positive() || *f >= Fraction::one() {
        return Err(Error::Domain(format!("{f} is not in the open interval (0,1)")));
    }
    Ok(())
}

/// The all-positive expansion of `f` in `(0,1)`, with last coefficient
/// at least 2 whenever there is more than one coefficient.
pub fn positive_cf(f: &Fraction) -> Result<ContinuedFraction> {
    require_unit_interval(f)?;
    // f = p/q = 1/(q/p): run Euclid on (q, p).
    let (mut n, mut d) = (f.denom().clone(), f.numer().clone());
    let mut out = Vec::new();
    while !d.is_zero() {
        let (a, r) = n.div_rem(&d);
        out.push(a.to_i64().ok_or_else(|| Error::Domain("coefficient overflow".into()))?);
        n = d;
        d = r;
    }
    if out.len() > 1 && out[out.len() - 1] == 1 {
        out.pop();
        *out.last_mut().unwrap() += 1;
    }
    ContinuedFraction::new(out)
}

/// The expansion of `f` in `(0,1)` with every coefficient even.
///
/// Each step takes the even integer nearest to the reciprocal of the
/// remainder. For a fraction odd/even the reciprocal is never an odd
/// integer, so the remainder stays strictly inside `(-1, 1)` and its
/// denominator strictly shrinks.
pub fn even_cf(f: &Fraction) -> Result<ContinuedFraction> {
    require_unit_interval(f)?;
    if f.denom().is_odd() {
        return Err(Error::Domain(format!(
            "{f} has odd denominator: knot case, no even expansion"
        )));
    }
    // remainder n/d with d > 0; each step replaces it by (d - a n)/n, so
    // |n| strictly decreases
    let mut n = f.numer().clone();
    let mut d = f.denom().clone();
    let mut out = Vec::new();
    while !n.is_zero() {
        let a = nearest_even(&d, &n);
        let next = &d - &a * &n;
        out.push(a.to_i64().ok_or_else(|| Error::Domain("coefficient overflow".into()))?);
        d = n;
        n = next;
        if d.is_negative() {
            d = -d;
            n = -n;
        }
    }
    ContinuedFraction::new(out)
}

/// Nearest even integer to `num/den`. Ties cannot occur for the inputs
/// above: they would need `num/den` to be an odd integer.
fn nearest_even(num: &BigInt, den: &BigInt) -> BigInt {
    let (num, den) = if den.is_negative() { (-num, -den) } else { (num.clone(), den.clone()) };
    // floor((num + den) / 2den) = round(num / 2den), ties upward
    let twice = &den * 2;
    (num + den).div_floor(&twice) * 2
}
