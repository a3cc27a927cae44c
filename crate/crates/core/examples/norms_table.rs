//! Exact norm ratios for every label up to degree 3, both families.

use calogero::dunkl::Params;
use calogero::exactpoly::rat;
use calogero::hpfloat::Ctx;
use calogero::norms::{base_norm_float, norm_ratio_nonsym};
use calogero::weyl::Composition;

fn main() -> calogero::Result<()> {
    let mut ctx = Ctx::new(30);
    for params in [
        Params::a_type(rat(3, 7), rat(1, 2))?,
        Params::b_type(rat(3, 7), rat(2, 5), rat(1, 2))?,
    ] {
        let base = base_norm_float(&params, 2, &mut ctx);
        println!("{:?}  <1,1> = {}", params.family(), ctx.format(&base, 25));
        for mu in Composition::all_up_to_degree(2, 3) {
            let r = norm_ratio_nonsym(&params, &mu)?;
            println!("    {mu:<8} {}", r.value);
        }
    }
    Ok(())
}
