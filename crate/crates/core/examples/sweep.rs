//! The consistency sweep over every link with even denominator up to a bound.
//!
//! cargo run --release --example sweep -- 200

fn main() -> twobridge::Result<()> {
    let max_q: i64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(100);
    let report = twobridge::cli::sweep(max_q)?;
    println!("{}", report.summary());
    for (shape, n) in &report.shapes {
        println!("  {shape}: {n}");
    }
    for (f, why) in &report.failures {
        println!("  FAIL {f}: {why}");
    }
    Ok(())
}
