//! Symmetric and anti-symmetric combinations over a Weyl orbit.

use calogero::construct::{sym_poly, Sign};
use calogero::dunkl::Params;
use calogero::exactpoly::rat;
use calogero::weyl::Partition;

fn main() -> calogero::Result<()> {
    let params = Params::a_type(rat(3, 7), rat(1, 2))?;
    for (mu, sign) in [(vec![2, 1, 0], Sign::Plus), (vec![2, 1, 0], Sign::Minus), (vec![1, 1, 0], Sign::Plus)] {
        let mu = Partition::new(mu)?;
        let s = sym_poly(&params, &mu, sign)?;
        let tag = if sign == Sign::Plus { "H+" } else { "H-" };
        println!("{tag}_{mu} = {}", s.poly);
        for (c, b) in &s.coefficients {
            println!("    b_{c} = {b}");
        }
        for j in 0..2 {
            let swapped = s.poly.exchange(j, j + 1)?;
            assert_eq!(swapped, s.poly.scale(&rat(sign.as_int(), 1)));
        }
    }
    Ok(())
}
