//! Vertex norms of base-type diagrams and their (+-)-type.

use twobridge::{base_vertex_norms, pm_type, RationalDiagram};

fn main() -> twobridge::Result<()> {
    for s in ["T(2)", "T(4)", "T(3,1)", "T(1,2,1)", "T(3,2,3)", "T(5,4,2,1)"] {
        let d: RationalDiagram = s.parse()?;
        let v = base_vertex_norms(&d)?;
        println!("{d:<12} {v}  type {:?}", pm_type(&d)?);
    }
    Ok(())
}
