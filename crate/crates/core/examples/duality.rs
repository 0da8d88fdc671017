//! Monomial side of a hook: linear quotients, minimal primes and the Alexander dual of `J`.

use deconcini::ideal::{hook_split, linear_quotients_lex, set_size_multiset};
use deconcini::partition::Hook;

fn main() -> deconcini::Result<()> {
    let h = Hook::new(2, 2);
    let j = hook_split(h).monomial_part;
    println!("J = {j}");

    let lq = linear_quotients_lex(&j);
    for (m, colon) in lq.order.iter().zip(&lq.colons) {
        println!("  ({m}) colon: {colon}");
    }
    println!("set sizes {:?}", lq.set_sizes());
    println!("predicted {:?}", set_size_multiset(h));

    let primes = j.minimal_primes()?;
    println!("{} minimal primes, each of size {}", primes.len(), primes[0].len());
    println!("Krull dimension of R/J: {}", j.krull_dim_quotient()?);
    println!("Alexander dual: {}", j.alexander_dual()?);
    Ok(())
}
