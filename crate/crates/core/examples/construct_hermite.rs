//! Non-symmetric multivariable Hermite polynomials for N = 3 and their
//! Cherednik eigenvalues.

use calogero::construct::Constructor;
use calogero::dunkl::{cherednik_d, Params};
use calogero::exactpoly::rat;
use calogero::weyl::Composition;

fn main() -> calogero::Result<()> {
    let params = Params::a_type(rat(3, 7), rat(1, 2))?;
    let cons = Constructor::new(&params);
    for mu in Composition::all_up_to_degree(3, 2) {
        let h = cons.nonsym(&mu)?;
        let ev: Vec<String> = h.eigenvalues.iter().map(|l| l.to_string()).collect();
        println!("h_{mu} = {}", h.poly);
        println!("    eigenvalues [{}]", ev.join(", "));
        for (j, l) in h.eigenvalues.iter().enumerate() {
            assert_eq!(cherednik_d(&params, j, &h.poly)?, h.poly.scale(l));
        }
    }
    Ok(())
}
