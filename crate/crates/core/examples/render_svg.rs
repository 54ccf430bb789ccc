//! Writes the unit balls of a few links as SVG files.
//!
//! cargo run --example render_svg -- out_dir

use std::path::PathBuf;

use twobridge::{build_ball, cli::render_svg, ratio, vertex_norms};

fn main() -> std::io::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "balls".into()));
    std::fs::create_dir_all(&dir)?;
    for (p, q) in [(1, 4), (7, 16), (5, 14), (5, 24)] {
        let norms = vertex_norms(&ratio(p, q)).expect("even denominator");
        let ball = build_ball(&norms).expect("norms satisfy the triangle inequalities");
        let path = dir.join(format!("L_{p}_{q}.svg"));
        std::fs::write(&path, render_svg(&ball, &format!("L_{p}/{q}")))?;
        println!("wrote {}", path.display());
    }
    Ok(())
}
