//! Balls with every even number of faces. The argument bounds half the
//! face count.
//!
//! cargo run --example face_counts -- 12

use twobridge::ball_with_face_count;

fn main() -> twobridge::Result<()> {
    let max_half: i64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(8);
    for n in 0..=max_half {
        let (ball, provenance) = ball_with_face_count(n)?;
        println!("{:>3} faces ({}): {provenance}", ball.face_count(), ball.shape());
    }
    Ok(())
}
