//! Components, self-crossing boxes, linking number and the tangle-sum split
//! of a rational diagram.
//!
//! cargo run --example diagram_trace -- "T(2,1,4)"

use twobridge::{
    is_base_type, linking_number, seifert_circles, self_crossing_boxes, split_diagram,
    trace_components, RationalDiagram,
};

fn main() -> twobridge::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "T(2,3,2)".into());
    let d: RationalDiagram = arg.parse()?;
    println!("{d} closes to L_{{{}}}", d.fraction());
    let trace = trace_components(&d)?;
    for (i, (a, b)) in trace.box_strands.iter().enumerate() {
        println!("  box {}: components {a},{b}, signs {:?}", i + 1, trace.crossing_signs[i]);
    }
    println!("self-crossing boxes: {:?}", self_crossing_boxes(&d)?);
    println!("base-type: {}", is_base_type(&d));
    println!("linking number: {}", linking_number(&d)?);
    println!(
        "Seifert circles: {} (l2 reversed: {})",
        seifert_circles(&d, false)?,
        seifert_circles(&d, true)?
    );
    let split = split_diagram(&d)?;
    for (piece, sign) in split.pieces.iter().zip(&split.signs) {
        let name = piece.as_ref().map_or("trivial tangle".into(), ToString::to_string);
        println!("  piece {name} with sign {sign:+}");
    }
    Ok(())
}
