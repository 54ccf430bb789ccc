//! Composing two hexagonal balls, once from rays and once from duals.

use twobridge::{
    build_ball, satellite_ball, satellite_ball_minkowski, satellite_evaluate, ratio,
    vertex_norms_of_diagram, RationalDiagram, SatelliteInput,
};

fn main() -> twobridge::Result<()> {
    let hexagon: RationalDiagram = "T(2,1,4)*".parse()?;
    let ball = build_ball(&vertex_norms_of_diagram(&hexagon)?)?;
    println!("{hexagon}: rays {:?}", ball.rays().iter().map(ToString::to_string).collect::<Vec<_>>());
    let s = SatelliteInput {
        companion: ball.clone(),
        lk_companion: 3,
        pattern: ball,
        lk_pattern: 3,
    };
    let by_rays = satellite_ball(&s)?;
    let by_duals = satellite_ball_minkowski(&s)?;
    println!(
        "satellite: rays {:?}, {} faces, routes agree: {}",
        by_rays.rays().iter().map(ToString::to_string).collect::<Vec<_>>(),
        by_rays.face_count(),
        by_rays == by_duals
    );
    println!("x(1,1) = {}", satellite_evaluate(&s, &ratio(1, 1), &ratio(1, 1)));
    Ok(())
}
