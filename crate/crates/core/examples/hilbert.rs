//! Hilbert series of `R/I` for hooks: closed form, factorization through `R/J`, and the oracle.

use deconcini::ideal::hook_split;
use deconcini::oracle::hilbert_oracle;
use deconcini::partition::Hook;
use deconcini::series::{euler_identity_check, hilbert_hook, hilbert_via_factorization, regularity_hook};

fn main() -> deconcini::Result<()> {
    for h in Hook::all_up_to(5) {
        let closed = hilbert_hook(h);
        let top = regularity_hook(h) + 1;
        let factored = hilbert_via_factorization(h, top)?;
        let oracle = hilbert_oracle(&hook_split(h).flatten(), h.n(), top)?;
        println!("{h:>8}: {closed}");
        println!("{:>8}  oracle dims {:?}, euler identity {}", "", oracle.dims, euler_identity_check(h));
        assert_eq!(closed, factored);
    }
    Ok(())
}
