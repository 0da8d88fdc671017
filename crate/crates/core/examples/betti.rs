//! Poincare series and graded Betti tables of hooks, three ways.

use deconcini::ideal::{hook_split, linear_quotients_lex};
use deconcini::partition::Hook;
use deconcini::series::{
    betti_table, herzog_takayama_poincare, mapping_cone_shift, poincare_hook, poincare_recursive,
};

fn main() -> deconcini::Result<()> {
    let h = Hook::new(2, 1);
    let p = poincare_hook(h);
    println!("P_{h}(q, t) = {}", p.render());

    let table = betti_table(&p)?;
    print!("\n{}", table.render_m2());
    println!("regularity {}, projective dimension {}", table.regularity(), table.projective_dimension());
    println!("{}", serde_json::to_string(&table.to_json()).expect("serializable"));

    // the recursion over arm length and the linear-quotient route agree
    assert_eq!(poincare_recursive(h), p);
    let sizes = linear_quotients_lex(&hook_split(h).monomial_part).set_sizes().expect("linear quotients");
    let via_j = (1..=h.b as u32).fold(herzog_takayama_poincare(&sizes, h.b as u32 + 1), |acc, m| {
        mapping_cone_shift(&acc, m)
    });
    assert_eq!(via_j, p);

    println!("\nfirst Betti numbers:");
    for h in Hook::all_up_to(7) {
        let t = betti_table(&poincare_hook(h))?;
        println!("  {h}: {}", t.total(1));
    }
    Ok(())
}
