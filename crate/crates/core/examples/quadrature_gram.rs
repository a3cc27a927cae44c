//! Gram matrix of constructed polynomials by Gauss-Hermite quadrature; the
//! diagonal matches the closed-form norms and the rest vanishes.

use calogero::construct::Constructor;
use calogero::dunkl::Params;
use calogero::exactpoly::{int, rat, Poly};
use calogero::hpfloat::Ctx;
use calogero::norms::norm_ratio_nonsym;
use calogero::oracle::quadrature_gram;
use calogero::weyl::Composition;

fn main() -> calogero::Result<()> {
    let params = Params::b_type(int(1), int(1), rat(1, 2))?;
    let cons = Constructor::new(&params);
    let labels = Composition::all_up_to_degree(2, 3);
    let polys: Vec<Poly> = labels.iter().map(|m| cons.poly(m).map(|p| (*p).clone())).collect::<Result<_, _>>()?;
    let mut ctx = Ctx::new(50);
    let g = quadrature_gram(&params, &polys, None, &mut ctx)?;
    println!("{} polynomials, {} nodes per axis", g.size(), g.nodes);
    let ratios = g.diagonal_ratios();
    for (mu, r) in labels.iter().zip(&ratios) {
        let exact = norm_ratio_nonsym(&params, mu)?.value;
        println!("    {mu:<8} quadrature {}    exact {exact}", ctx.format(r, 30));
    }
    let off = g.off_diagonal_ratio();
    println!("largest off-diagonal ratio {}", ctx.format(&off, 5));
    Ok(())
}
