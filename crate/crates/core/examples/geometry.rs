//! Exact hulls, Minkowski sums and polar duals.

use twobridge::{convex_hull, minkowski_sum, polar_dual, ratio, support_value, RationalPoint};

fn main() -> twobridge::Result<()> {
    let p = |x: i64, y: i64| RationalPoint::from_ints(x, y);
    let diamond = convex_hull(&[p(1, 0), p(0, 1), p(-1, 0), p(0, -1)]);
    println!("diamond: {:?}", diamond.vertices());
    println!("polar: {:?}", polar_dual(&diamond)?);

    let a = convex_hull(&[p(-1, 1), p(1, -1)]);
    let b = convex_hull(&[p(-1, -1), p(1, 1)]);
    let sum = minkowski_sum(&a, &b);
    println!("segment + segment: {:?}", sum.vertices());
    let v = RationalPoint::new(ratio(1, 3), ratio(2, 1));
    println!(
        "support at {v:?}: {} = {} + {}",
        support_value(&sum, &v),
        support_value(&a, &v),
        support_value(&b, &v)
    );
    println!("polar of a segment: {:?}", polar_dual(&a)?);
    Ok(())
}
