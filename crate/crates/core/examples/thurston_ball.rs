//! The Thurston norm ball of L_{p/q}: norms, rays, faces, shape.
//!
//! cargo run --example thurston_ball -- 5/24

use twobridge::{classify, ratio, Fraction};

fn main() -> twobridge::Result<()> {
    let arg = std::env::args().nth(1);
    let slopes: Vec<Fraction> = match arg {
        Some(s) => vec![s.parse()?],
        None => [(1, 2), (1, 4), (7, 16), (7, 24), (5, 14), (5, 24)]
            .iter()
            .map(|&(p, q)| ratio(p, q))
            .collect(),
    };
    for f in slopes {
        let c = classify(&f)?;
        let rays: Vec<String> = c.rays.iter().map(ToString::to_string).collect();
        println!(
            "L_{{{f}}} = {}: {} rays [{}] faces {} {}{}",
            c.diagram,
            c.vertex_norms,
            rays.join(", "),
            c.faces,
            c.shape,
            if c.base_type { ", fibers with S_{1,0}" } else { "" }
        );
        let x = c.ball.evaluate(&ratio(2, 1), &ratio(1, 1));
        println!("  x(2 l1 + l2) = {x}");
    }
    Ok(())
}
