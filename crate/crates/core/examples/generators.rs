//! Tanisaki generators of `I_mu` and, for hooks, the split `I = J + E`.
//!
//! cargo run --example generators -- 3,1

use deconcini::ideal::{equal_as_ideals_truncated, tanisaki_generators, GeneratorSet};
use deconcini::partition::Partition;

fn main() -> deconcini::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "3,1".into());
    let mu: Partition = arg.parse()?;
    let n = mu.n();

    let raw = tanisaki_generators(&mu);
    println!("{} Tanisaki generators for {mu}:", raw.len());
    for g in &raw {
        println!("  {g}");
    }

    match GeneratorSet::for_partition(&mu) {
        GeneratorSet::Hook(split) => {
            println!("\nhook {}: J has {} monomials, E = e_1..e_{}", split.hook, split.monomial_part.gens().len(), split.hook.b);
            println!("J = {}", split.monomial_part);
            let same = equal_as_ideals_truncated(&raw, &split.flatten(), n, n)?;
            println!("same ideal through degree {n}: {same}");
        }
        GeneratorSet::General(_) => println!("\n{mu} is not a hook, so there is no split"),
    }
    Ok(())
}
