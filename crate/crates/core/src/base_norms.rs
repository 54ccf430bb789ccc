//! Closed-form vertex norms of base-type diagrams.

use std::fmt;

use crate::diagram::{is_base_type, RationalDiagram};
use crate::error::{Error, Result};

/// `x(l1)`, `x(l2)`, `x(l1+l2)`, `x(l1-l2)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VertexNorms {
    pub x10: u64,
    pub x01: u64,
    pub x11: u64,
    pub x1m1: u64,
}

impl VertexNorms {
    /// Checks symmetry and the three triangle inequalities.
    pub fn new(x10: u64, x11: u64, x1m1: u64) -> Result<Self> {
        let v = VertexNorms {
            x10,
            x01: x10,
            x11,
            x1m1,
        };
        v.validate()?;
        Ok(v)
    }

    pub fn zero() -> Self {
        VertexNorms {
            x10: 0,
            x01: 0,
            x11: 0,
            x1m1: 0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let ok = self.x10 == self.x01
            && self.x11 <= self.x10 + self.x01
            && self.x1m1 <= self.x10 + self.x01
            && 2 * self.x10 <= self.x11 + self.x1m1;
        if ok {
            Ok(())
        } else {
            Err(Error::Domain(format!("not the vertex norms of a seminorm: {self}")))
        }
    }

    /// The norms with `l2` reversed.
    pub fn swapped(&self) -> Self {
        VertexNorms {
            x11: self.x1m1,
            x1m1: self.x11,
            ..*self
        }
    }

    /// `x(l1 + sign * l2)`.
    pub fn diagonal(&self, sign: i8) -> u64 {
        if sign > 0 {
            self.x11
        } else {
            self.x1m1
        }
    }
}

impl fmt::Display for VertexNorms {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.x10, self.x01, self.x11, self.x1m1)
    }
}

pub fn base_vertex_norms(d: &RationalDiagram) -> Result<VertexNorms> {
    if !is_base_type(d) {
        return Err(Error::Precondition(format!("{d} is not base-type")));
    }
    let v = base_norms_of(d.coefficients());
    Ok(if d.mirror() { v.swapped() } else { v })
}

/// Formulas for positive base-type labels.
pub(crate) fn base_norms_of(a: &[i64]) -> VertexNorms {
    if a == [2] {
        return VertexNorms::zero();
    }
    let sum: i64 = a.iter().sum();
    let odd_idx: i64 = a.iter().step_by(2).sum();
    let even_idx: i64 = a.iter().skip(1).step_by(2).sum();
    let (x11, x1m1) = if a.len() % 2 == 1 {
        (even_idx, odd_idx - 2)
    } else {
        (even_idx - 1, odd_idx - 1)
    };
    let x10 = sum / 2 - 1;
    assert!(
        x10 >= 0 && x11 >= 0 && x1m1 >= 0,
        "negative base norm for T({a:?})"
    );
    VertexNorms {
        x10: x10 as u64,
        x01: x10 as u64,
        x11: x11 as u64,
        x1m1: x1m1 as u64,
    }
}

/// Which of `x(l1)+x(l2) = x(l1 +- l2)` hold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PmType {
    Plus,
    Minus,
    Both,
    Neither,
}

impl PmType {
    /// Whether this piece is `sign`-type (both counts for either sign).
    pub fn admits(self, sign: i8) -> bool {
        match self {
            PmType::Both => true,
            PmType::Plus => sign > 0,
            PmType::Minus => sign < 0,
            PmType::Neither => false,
        }
    }
}

pub fn pm_type(d: &RationalDiagram) -> Result<PmType> {
    if d.mirror() {
        return Err(Error::Precondition(format!("{d} is not mirror-normalized")));
    }
    let v = base_vertex_norms(d)?;
    let from_norms = pm_from_norms(&v);
    let from_pattern = pm_from_pattern(d.coefficients());
    if from_norms != from_pattern {
        return Err(Error::Internal(format!(
            "{d}: norms say {from_norms:?}, pattern list says {from_pattern:?}"
        )));
    }
    Ok(from_norms)
}

fn pm_from_norms(v: &VertexNorms) -> PmType {
    let plus = v.x10 + v.x01 == v.x11;
    let minus = v.x10 + v.x01 == v.x1m1;
    match (plus, minus) {
        (true, true) => PmType::Both,
        (true, false) => PmType::Plus,
        (false, true) => PmType::Minus,
        (false, false) => PmType::Neither,
    }
}

/// Plus: T(2), T(1,2k-1), T(1,2k,1). Minus: T(2k), T(2k-1,1).
fn pm_from_pattern(a: &[i64]) -> PmType {
    let plus = matches!(a, [2] | [1, _] | [1, _, 1]);
    let minus = matches!(a, [_] | [_, 1]);
    match (plus, minus) {
        (true, true) => PmType::Both,
        (true, false) => PmType::Plus,
        (false, true) => PmType::Minus,
        (false, false) => PmType::Neither,
    }
}
