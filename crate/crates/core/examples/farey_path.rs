//! x(l1) from the tree T_{1/0}, next to the tangle-sum value.
//!
//! cargo run --example farey_path -- 7/16

use twobridge::{t10_tree_build, vertex_norms, FareyVertex, Fraction};

fn main() -> twobridge::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "7/16".into());
    let f: Fraction = arg.parse()?;
    let v = FareyVertex::from_fraction(&f)?;
    let tree = t10_tree_build(v.denom());
    println!(
        "tree below {}: {} vertices, acyclic {}",
        tree.max_den(),
        tree.vertex_count(),
        tree.is_acyclic()
    );
    let path = tree.path(&v).expect("even-denominator slopes are in the tree");
    let shown: Vec<String> = path.iter().map(|u| u.value().to_string()).collect();
    println!("path: {}", shown.join(" -> "));
    println!("lg - 1 = {}", path.len() - 2);
    println!("tangle sum x(l1) = {}", vertex_norms(&f)?.x10);
    Ok(())
}
