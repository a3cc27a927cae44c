//! Laguerre-type polynomials keep the parity of their label in each variable.

use calogero::construct::{parities, Constructor};
use calogero::dunkl::Params;
use calogero::exactpoly::rat;
use calogero::weyl::Composition;

fn main() -> calogero::Result<()> {
    let params = Params::b_type(rat(1, 2), rat(2, 5), rat(1, 2))?;
    let cons = Constructor::new(&params);
    for mu in [vec![2, 0], vec![0, 2], vec![1, 2], vec![3, 1], vec![2, 2]] {
        let mu = Composition::new(mu);
        let h = cons.nonsym(&mu)?;
        let par = parities(&mu);
        for (e, _) in h.poly.terms() {
            for (k, s) in par.iter().enumerate() {
                assert_eq!(e[k] % 2 == 1, *s < 0);
            }
        }
        println!("h_{mu} = {}    parities {:?}", h.poly, par);
    }
    Ok(())
}
