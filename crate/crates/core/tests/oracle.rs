use std::cmp::Ordering;

use calogero::construct::{sym_poly, Constructor, Sign};
use calogero::dunkl::{braid_s, knop_sahi_e, knop_sahi_e_dagger, Params};
use calogero::exactpoly::{int, rat, Poly};
use calogero::hpfloat::Ctx;
use calogero::norms::{base_norm_float, norm_ratio_sym};
use calogero::oracle::quadrature::{gauss_hermite, matches_rational, required_nodes, QuadratureRule};
use calogero::oracle::{quadrature_gram, verify_suite, OperatorMatrix, Status};
use calogero::weyl::{Composition, Partition};

#[test]
fn gram_is_reproducible() {
    let p = Params::a_type(int(2), int(1)).unwrap();
    let cons = Constructor::new(&p);
    let polys: Vec<Poly> = Composition::all_up_to_degree(3, 2)
        .iter()
        .map(|m| (*cons.poly(m).unwrap()).clone())
        .collect();
    let mut ctx = Ctx::new(40);
    let g1 = quadrature_gram(&p, &polys, None, &mut ctx).unwrap();
    let g2 = quadrature_gram(&p, &polys, None, &mut ctx).unwrap();
    assert_eq!(g1.entries, g2.entries);
    assert!(g1.is_symmetric());
}

#[test]
fn too_few_nodes_rejected() {
    let p = Params::a_type(int(1), int(1)).unwrap();
    let mut ctx = Ctx::new(30);
    let need = required_nodes(&p, 2, 2).unwrap();
    let rule = QuadratureRule::new(&p, 2, need - 1, &mut ctx).unwrap();
    assert!(rule.gram(&[Poly::var(2, 0).pow(2)], &mut ctx).is_err());
}

#[test]
fn nodes_symmetric_and_weights_positive() {
    let mut ctx = Ctx::new(40);
    for n in [1usize, 2, 5, 12] {
        let (x, w) = gauss_hermite(n, &mut ctx).unwrap();
        assert_eq!(x.len(), n);
        let mut total = ctx.zero();
        for i in 0..n {
            assert!(w[i].is_positive());
            let s = ctx.add(&x[i], &x[n - 1 - i]);
            assert!(s.is_zero() || Ctx::cmp(&s.abs(), &ctx.tol(35)) == Ordering::Less);
            total = ctx.add(&total, &w[i]);
        }
        assert!(Ctx::cmp(&ctx.rel_err(&total, &ctx.int(1)), &ctx.tol(35)) == Ordering::Less);
    }
}

#[test]
fn symmetric_norms_and_adjoints_by_quadrature() {
    let p = Params::b_type(int(1), int(0), rat(1, 2)).unwrap();
    let mut ctx = Ctx::new(40);
    let tol = ctx.tol(25);
    let rule = QuadratureRule::for_degree(&p, 2, 4, &mut ctx).unwrap();
    let one = Poly::one(2);
    let d0 = rule.inner(&one, &one, &mut ctx).unwrap();
    let base = base_norm_float(&p, 2, &mut ctx);
    assert!(Ctx::cmp(&ctx.rel_err(&d0, &base), &tol) == Ordering::Less);
    for (v, s) in [(vec![2, 0], Sign::Plus), (vec![3, 1], Sign::Minus), (vec![1, 1], Sign::Plus)] {
        let mu = Partition::new(v).unwrap();
        let h = sym_poly(&p, &mu, s).unwrap().poly;
        let n = rule.inner(&h, &h, &mut ctx).unwrap();
        let r = ctx.div(&n, &d0);
        assert!(matches_rational(&r, &norm_ratio_sym(&p, &mu, s).unwrap().value, &tol, &mut ctx));
    }
    let f = Poly::from_terms(2, vec![(vec![1, 0], int(1)), (vec![0, 2], rat(-1, 3))]).unwrap();
    let g = Poly::from_terms(2, vec![(vec![1, 1], int(2)), (vec![0, 0], int(1))]).unwrap();
    let l = rule.inner(&braid_s(&p, 0, &f).unwrap(), &g, &mut ctx).unwrap();
    let r = rule.inner(&f, &braid_s(&p, 0, &g).unwrap(), &mut ctx).unwrap();
    let s = ctx.add(&l, &r);
    assert!(Ctx::cmp(&ctx.div(&s.abs(), &d0), &tol) == Ordering::Less);
    let l = rule.inner(&knop_sahi_e_dagger(&p, &f), &g, &mut ctx).unwrap();
    let r = rule.inner(&f, &knop_sahi_e(&p, &g), &mut ctx).unwrap();
    let d = ctx.sub(&l, &r);
    assert!(Ctx::cmp(&ctx.div(&d.abs(), &d0), &tol) == Ordering::Less);
}

#[test]
fn operator_matrices_are_triangular() {
    for p in [
        Params::a_type(rat(7, 11), rat(2, 3)).unwrap(),
        Params::b_type(rat(7, 11), rat(3, 2), rat(2, 3)).unwrap(),
    ] {
        let m = OperatorMatrix::build(&p, 3, 4).unwrap();
        assert!(m.is_triangular());
        let d = m.dense(0);
        assert_eq!(d.len(), m.basis().len());
    }
}

#[test]
fn suite_for_three_laguerre_variables() {
    let p = Params::b_type(int(1), int(1), int(1)).unwrap();
    let rep = verify_suite(&p, 3, 3);
    for e in &rep.entries {
        assert_eq!(e.status, Status::Pass, "{}", serde_json::to_string(e).unwrap());
    }
    let json: serde_json::Value = serde_json::from_str(&rep.to_json()).unwrap();
    let first = &json[0];
    for key in ["check", "family", "N", "params", "status", "detail"] {
        assert!(first.get(key).is_some(), "missing {key}");
    }
}
