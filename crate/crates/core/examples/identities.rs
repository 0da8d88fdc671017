//! The t-binomial theorem and the binomial sum behind the set-size count.

use deconcini::series::{cauchy_identity_check, hockey_stick_check, t_binomial};

fn main() -> deconcini::Result<()> {
    for n in 0..=5 {
        let row: Vec<String> = (0..=n).map(|k| t_binomial(n, k).map(|p| p.render("t"))).collect::<Result<_, _>>()?;
        println!("n = {n}: {}", row.join(" | "));
    }
    let cauchy = (0..=12).all(cauchy_identity_check);
    let sums = (0..=20).all(hockey_stick_check);
    println!("t-binomial theorem for n <= 12: {cauchy}");
    println!("sum_i C(b+i, b) = C(n, b+1) for n <= 20: {sums}");
    Ok(())
}
