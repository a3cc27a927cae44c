//! The Cherednik operators are triangular on the monomial basis; the
//! eigensolver recovers the same polynomials without the raising operators.

use calogero::construct::nonsym_poly;
use calogero::dunkl::Params;
use calogero::exactpoly::rat;
use calogero::oracle::OperatorMatrix;
use calogero::weyl::Composition;

fn main() -> calogero::Result<()> {
    let params = Params::a_type(rat(5, 3), rat(1, 2))?;
    let m = OperatorMatrix::build(&params, 3, 3)?;
    println!("{} monomials, triangular: {}", m.basis().len(), m.is_triangular());
    for mu in [vec![1, 0, 2], vec![0, 3, 0], vec![1, 1, 1]] {
        let mu = Composition::new(mu);
        let p = m.solve(&mu)?;
        assert_eq!(p, nonsym_poly(&params, &mu)?.poly);
        println!("h_{mu} = {p}");
    }
    Ok(())
}
