//! Bosonic polynomials at shifted couplings times a Vandermonde factor give
//! fermionic polynomials.

use calogero::construct::parameter_shift_check;
use calogero::dunkl::Params;
use calogero::exactpoly::rat;
use calogero::weyl::Partition;

fn main() -> calogero::Result<()> {
    let a = Params::a_type(rat(2, 3), rat(1, 2))?;
    let b = Params::b_type(rat(2, 3), rat(1, 4), rat(1, 2))?;
    for (params, mu) in [(&a, vec![1, 0, 0]), (&a, vec![2, 1, 0]), (&b, vec![2, 0]), (&b, vec![2, 2])] {
        let mu = Partition::new(mu)?;
        let report = parameter_shift_check(params, &mu)?;
        for r in &report.relations {
            println!("{:?} {mu:<8} {:<40} {}", params.family(), r.name, if r.holds() { "ok" } else { "FAILED" });
        }
    }
    Ok(())
}
