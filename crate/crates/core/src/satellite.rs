//! Norm balls of satellite links and the family with `2(i+3)` faces.
//!
//! For a companion `L` with linking number `lambda` and a pattern `L'` with
//! linking number `lambda'`, the satellite norm is
//! `x(a,b) = x_L(lambda' a, b) + x_L'(a, lambda b)`.

use crate::arith::{ratio, Fraction};
use crate::ball::{ball_of_fraction, Direction, NormBall};
use crate::diagram::{linking_number, RationalDiagram};
use crate::error::{Error, Result};
use crate::geometry::minkowski_sum;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SatelliteInput {
    pub companion: NormBall,
    /// `lambda`, the linking number of the companion.
    pub lk_companion: i64,
    pub pattern: NormBall,
    /// `lambda'`, the linking number of the pattern.
    pub lk_pattern: i64,
}

pub fn satellite_evaluate(s: &SatelliteInput, a: &Fraction, b: &Fraction) -> Fraction {
    let lam = Fraction::from(s.lk_companion);
    let lam_p = Fraction::from(s.lk_pattern);
    s.companion.evaluate(&(&lam_p * a), b) + s.pattern.evaluate(a, &(&lam * b))
}

/// `k * alpha` on slopes, with `k * inf = inf` for `k != 0`. `0 * inf` is
/// undefined and dropped.
fn times(alpha: &Fraction, k: &Fraction) -> Option<Fraction> {
    match (alpha.is_infinite(), k.is_zero()) {
        (true, true) => None,
        (true, false) => Some(Fraction::infinity()),
        _ => Some(alpha * k),
    }
}

/// `alpha / k` on slopes, with `alpha / 0 = inf` for `alpha != 0`.
fn over(alpha: &Fraction, k: &Fraction) -> Option<Fraction> {
    if alpha.is_infinite() {
        return Some(Fraction::infinity());
    }
    if k.is_zero() {
        return (!alpha.is_zero()).then(Fraction::infinity);
    }
    Some(alpha / k)
}

/// Every slope where the satellite norm can break, plus the axes.
///
/// Substituting into the norm formula puts the breakpoints at
/// `lambda' * alpha` and `beta / lambda`. The reciprocal pairing
/// `alpha / lambda'`, `lambda * beta` is included as well; the two agree
/// whenever the ray sets are closed under `s -> 1/s`, and pruning discards
/// whatever is not a breakpoint.
fn candidate_slopes(s: &SatelliteInput) -> Vec<Fraction> {
    let lam = Fraction::from(s.lk_companion);
    let lam_p = Fraction::from(s.lk_pattern);
    let mut out = vec![Fraction::zero(), Fraction::infinity()];
    for alpha in s.companion.rays() {
        out.extend(times(&alpha, &lam_p));
        out.extend(over(&alpha, &lam_p));
    }
    for beta in s.pattern.rays() {
        out.extend(over(&beta, &lam));
        out.extend(times(&beta, &lam));
    }
    out.sort();
    out.dedup();
    out
}

pub fn satellite_ball(s: &SatelliteInput) -> Result<NormBall> {
    let values = candidate_slopes(s)
        .iter()
        .map(|slope| {
            let d = Direction::from_slope(slope);
            let p = d.point();
            let x = satellite_evaluate(s, &p.x, &p.y);
            (d, x)
        })
        .collect();
    NormBall::from_values(values)
}

/// The same ball from duals: the dual of `x o T` is the image of the dual
/// under the transpose of `T`, and the dual of a sum is the Minkowski sum.
pub fn satellite_ball_minkowski(s: &SatelliteInput) -> Result<NormBall> {
    let lam = Fraction::from(s.lk_companion);
    let lam_p = Fraction::from(s.lk_pattern);
    let (one, zero) = (Fraction::one(), Fraction::zero());
    let left = s.companion.dual().linear_image([[&lam_p, &zero], [&zero, &one]]);
    let right = s.pattern.dual().linear_image([[&one, &zero], [&zero, &lam]]);
    NormBall::from_dual(&minkowski_sum(&left, &right))
}

/// One link of a construction chain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyStep {
    pub ball: NormBall,
    pub lk: i64,
    pub provenance: String,
}

/// `L_0 = seed` and `L_i = satellite(L_{i-1}, L_0)` for `i = 1..=n`.
pub fn iterated_family(seed: &FamilyStep, n: usize) -> Result<Vec<FamilyStep>> {
    let expected = vec![Fraction::zero(), Fraction::one(), Fraction::infinity()];
    if seed.ball.rays() != expected {
        return Err(Error::Precondition(format!(
            "family seed must have rays {{0,1,inf}}, got {:?}",
            seed.ball.rays()
        )));
    }
    if seed.lk < 2 {
        return Err(Error::Precondition(format!(
            "family seed needs linking number >= 2, got {}",
            seed.lk
        )));
    }
    let mut steps = vec![seed.clone()];
    for i in 1..=n {
        let prev = &steps[i - 1];
        let input = SatelliteInput {
            companion: prev.ball.clone(),
            lk_companion: prev.lk,
            pattern: seed.ball.clone(),
            lk_pattern: seed.lk,
        };
        let lk = prev
            .lk
            .checked_mul(seed.lk)
            .ok_or_else(|| Error::Domain(format!("linking number overflows at step {i}")))?;
        steps.push(FamilyStep {
            ball: satellite_ball(&input)?,
            lk,
            provenance: format!("L_{i} = satellite(companion L_{}, pattern L_0)", i - 1),
        });
    }
    Ok(steps)
}

/// `L_{13/20} = T(1,1,1,6)`: rays `{0,1,inf}` and linking number 2.
pub fn family_seed() -> Result<FamilyStep> {
    let f = ratio(13, 20);
    let d = RationalDiagram::from_fraction(&f)?;
    Ok(FamilyStep {
        ball: ball_of_fraction(&f)?,
        lk: linking_number(&d)?,
        provenance: format!("L_0 = L_{{{f}}} = {d}"),
    })
}

/// A chain of links whose last ball has exactly `2n` faces.
pub fn face_count_chain(n: i64) -> Result<Vec<FamilyStep>> {
    let two_bridge = |p: i64, q: i64| -> Result<Vec<FamilyStep>> {
        let f = ratio(p, q);
        let d = RationalDiagram::from_fraction(&f)?;
        Ok(vec![FamilyStep {
            ball: ball_of_fraction(&f)?,
            lk: linking_number(&d)?,
            provenance: format!("L_{{{f}}} = {d}"),
        }])
    };
    match n {
        n if n < 0 => Err(Error::Domain(format!("face count 2n needs n >= 0, got n = {n}"))),
        0 => two_bridge(1, 2),
        1 => two_bridge(1, 4),
        2 => two_bridge(7, 16),
        3 => two_bridge(5, 14),
        n => iterated_family(&family_seed()?, (n - 3) as usize),
    }
}

pub fn ball_with_face_count(n: i64) -> Result<(NormBall, String)> {
    let chain = face_count_chain(n)?;
    let provenance = chain
        .iter()
        .map(|s| s.provenance.as_str())
        .collect::<Vec<_>>()
        .join("; ");
    let ball = chain.into_iter().last().expect("nonempty chain").ball;
    Ok((ball, provenance))
}
