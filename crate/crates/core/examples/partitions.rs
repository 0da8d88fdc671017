//! Partition combinatorics: padding, conjugates, the delta thresholds and hooks.
//!
//! cargo run --example partitions -- 3,1

use deconcini::partition::{Hook, Partition};

fn main() -> deconcini::Result<()> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "3,1".into());
    let mu: Partition = arg.parse()?;

    println!("mu        = {mu}");
    println!("conjugate = {}", mu.conjugate());
    println!("deltas    = {:?}", mu.deltas());
    println!("dim R/I   = {} (multinomial)", mu.multinomial());
    match mu.as_hook() {
        Some(h) => println!("hook      = {h}"),
        None => println!("not a hook"),
    }

    println!("\nhooks of size 5:");
    for h in Hook::all_of_size(5) {
        println!("  {h} = {}", h.partition());
    }
    Ok(())
}
