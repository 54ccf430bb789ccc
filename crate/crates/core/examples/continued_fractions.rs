//! Expansions of a slope: the positive diagram, the even one, convergents.
//!
//! cargo run --example continued_fractions -- 7/16

use twobridge::{cf_evaluate, convergents, even_cf, positive_cf, Fraction};

fn main() -> twobridge::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "7/16".into());
    let f: Fraction = arg.parse()?;
    let positive = positive_cf(&f)?;
    println!("{f} = [{positive}]");
    let conv: Vec<String> = convergents(&positive)?.iter().map(ToString::to_string).collect();
    println!("convergents: {}", conv.join(", "));
    match even_cf(&f) {
        Ok(even) => println!("even expansion: [{even}] -> {}", cf_evaluate(&even)?),
        Err(e) => println!("no even expansion: {e}"),
    }
    Ok(())
}
