//! Every closed form for one hook checked against exact linear algebra.
//!
//! cargo run --release --example verify -- 1 3

use deconcini::oracle::{default_dmax, verify_dimension, verify_hook};
use deconcini::partition::{Hook, Partition};

fn main() -> deconcini::Result<()> {
    let args: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let h = match args[..] {
        [a, b] => Hook::new(a, b),
        _ => Hook::new(1, 3),
    };
    let report = verify_hook(h, default_dmax(h.b))?;
    print!("{}", report.render_text());

    // non-hooks still get the dimension check
    let mu = Partition::new(&[2, 2])?;
    print!("{}", verify_dimension(&mu, 7)?.render_text());

    std::process::exit(if report.all_passed() { 0 } else { 1 });
}
