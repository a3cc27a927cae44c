//! Batch runner over every invariant, producing one report entry per check class.

use std::cmp::Ordering;

use astro_float::BigFloat;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::construct::{check_sector, k_action_expand, parameter_shift_check, sym_coeff, support_ok, Constructor, Sign};
use crate::dunkl::{bs, cd, hamiltonian_apply, knop_sahi_e, knop_sahi_e_dagger, Family, Params, ParamsJson};
use crate::error::{Error, Result};
use crate::exactpoly::{int, rat, Poly, Rational};
use crate::hpfloat::{Ctx, DEFAULT_DIGITS};
use crate::norms::{base_norm_float, macdonald_group_check, macdonald_identity_check, norm_ratio_nonsym, norm_ratio_sym, poincare_identity_check};
use crate::oracle::eigensolve::OperatorMatrix;
use crate::oracle::quadrature::{matches_rational, QuadratureRule};
use crate::oracle::relations::{braid_relations, commutation_relations, intertwining_relations, raising_relations, Relation};
use crate::weyl::{weyl_orbit, Composition, Partition};

/// Most counterexamples kept per check.
const MAX_FAILURES: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckEntry {
    pub check: String,
    pub family: String,
    #[serde(rename = "N")]
    pub n: usize,
    pub params: ParamsJson,
    pub status: Status,
    pub detail: Value,
}

#[derive(Clone, Debug, Serialize)]
#[serde(transparent)]
pub struct VerifyReport {
    pub entries: Vec<CheckEntry>,
}

impl VerifyReport {
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckEntry> {
        self.entries.iter().filter(|e| e.status == Status::Fail)
    }

    pub fn entry(&self, check: &str) -> Option<&CheckEntry> {
        self.entries.iter().find(|e| e.check == check)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Options for [`verify_suite_with`].
#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub digits: u32,
    /// Relative tolerance exponent for quadrature checks: `10^{-k}`.
    pub tolerance_digits: u32,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            digits: DEFAULT_DIGITS,
            tolerance_digits: 25,
        }
    }
}

impl VerifyOptions {
    pub fn with_digits(digits: u32) -> VerifyOptions {
        VerifyOptions {
            digits,
            tolerance_digits: digits.saturating_sub(15).clamp(1, 25),
        }
    }
}

/// Accumulates cases and counterexamples for one check.
struct Tally {
    cases: usize,
    failures: Vec<Value>,
    failed: usize,
}

impl Tally {
    fn new() -> Tally {
        Tally {
            cases: 0,
            failures: Vec::new(),
            failed: 0,
        }
    }

    fn record(&mut self, ok: bool, payload: impl FnOnce() -> Value) {
        self.cases += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < MAX_FAILURES {
                self.failures.push(payload());
            }
        }
    }

    fn error(&mut self, what: &str, e: &Error) {
        self.record(false, || json!({"case": what, "error": e.to_string()}));
    }

    fn relations(&mut self, input: &Poly, rels: Result<Vec<Relation>>) {
        match rels {
            Ok(rels) => {
                for r in rels {
                    self.record(r.holds(), || {
                        json!({
                            "relation": r.name,
                            "input": input.to_json_value(),
                            "difference": r.difference.to_json_value(),
                        })
                    });
                }
            }
            Err(e) => self.error(&input.to_string(), &e),
        }
    }

    fn merge(&mut self, other: Tally) {
        self.cases += other.cases;
        self.failed += other.failed;
        for f in other.failures {
            if self.failures.len() < MAX_FAILURES {
                self.failures.push(f);
            }
        }
    }

    fn finish(self, check: &str, params: &Params, n: usize) -> CheckEntry {
        let status = if self.failed == 0 { Status::Pass } else { Status::Fail };
        let mut detail = json!({"cases": self.cases});
        if self.failed > 0 {
            detail["failed"] = json!(self.failed);
            detail["counterexamples"] = Value::Array(self.failures);
        }
        entry(check, params, n, status, detail)
    }
}

fn entry(check: &str, params: &Params, n: usize, status: Status, detail: Value) -> CheckEntry {
    CheckEntry {
        check: check.to_string(),
        family: params.family().to_string(),
        n,
        params: params.to_json(),
        status,
        detail,
    }
}

fn skipped(check: &str, params: &Params, n: usize, reason: &str) -> CheckEntry {
    entry(check, params, n, Status::Skipped, json!({"reason": reason}))
}

fn integer_couplings(params: &Params) -> bool {
    params.a().is_integer() && params.b().is_integer()
}

fn test_lambda(n: usize) -> Vec<i64> {
    (0..n as i64).map(|i| if i % 2 == 0 { i + 2 } else { -i - 1 }).collect()
}

fn monomials(n: usize, max_degree: u32) -> Vec<Poly> {
    Composition::all_up_to_degree(n, max_degree)
        .iter()
        .map(Poly::monomial)
        .collect()
}

fn admissible_sectors(family: Family, n: usize, max_degree: u32) -> Vec<(Partition, Sign)> {
    let mut out = Vec::new();
    for mu in Partition::all_up_to_degree(n, max_degree) {
        for sign in [Sign::Plus, Sign::Minus] {
            // one variable: both signs give h_mu itself
            if n == 1 && sign == Sign::Minus {
                continue;
            }
            if check_sector(family, &mu, sign).is_ok() {
                out.push((mu.clone(), sign));
            }
        }
    }
    out
}

/// Every check with default options and an unperturbed constructor.
pub fn verify_suite(params: &Params, n: usize, max_degree: u32) -> VerifyReport {
    verify_suite_with(&Constructor::new(params), n, max_degree, &VerifyOptions::default())
}

/// Every check, building `h_μ` through the given constructor.
pub fn verify_suite_with(cons: &Constructor, n: usize, max_degree: u32, opts: &VerifyOptions) -> VerifyReport {
    let params = cons.params();
    let mut entries = vec![
        check_relations("commutation", params, n, max_degree, |p| commutation_relations(params, p)),
        check_relations("braid_relations", params, n, max_degree, |p| braid_relations(params, p)),
        check_relations("intertwining", params, n, max_degree, |p| {
            intertwining_relations(params, p, &test_lambda(n))
        }),
        check_raising(params, n),
        check_rodrigues(cons, n, max_degree),
        check_exchange_expansion(cons, n, max_degree),
        check_hamiltonian(cons, n, max_degree),
        check_symmetry_sectors(cons, n, max_degree),
        check_norm_consistency(params, n, max_degree),
        check_poincare(params, n, max_degree),
        check_macdonald(params, n, max_degree),
        check_parameter_shift(params, n, max_degree),
    ];
    if integer_couplings(params) {
        let mut ctx = Ctx::new(opts.digits);
        entries.push(check_gram(cons, n, max_degree, opts, &mut ctx));
        entries.push(check_adjointness(params, n, max_degree, opts, &mut ctx));
    } else {
        let reason = "quadrature needs integer a and b";
        entries.push(skipped("norms_vs_gram", params, n, reason));
        entries.push(skipped("adjointness", params, n, reason));
    }
    VerifyReport { entries }
}

fn check_relations<F>(name: &str, params: &Params, n: usize, max_degree: u32, f: F) -> CheckEntry
where
    F: Fn(&Poly) -> Result<Vec<Relation>> + Sync,
{
    let tallies: Vec<Tally> = monomials(n, max_degree)
        .par_iter()
        .map(|p| {
            let mut t = Tally::new();
            t.relations(p, f(p));
            t
        })
        .collect();
    let mut t = Tally::new();
    for x in tallies {
        t.merge(x);
    }
    t.finish(name, params, n)
}

fn check_raising(params: &Params, n: usize) -> CheckEntry {
    let mut t = Tally::new();
    let mut mu = vec![0; n];
    mu[0] = 1;
    let mut nu = vec![1; n];
    nu[n - 1] = 0;
    if n == 1 {
        nu = vec![2];
    }
    let mu = Partition::new(mu).expect("partition");
    let nu = Partition::new(nu).expect("partition");
    for p in monomials(n, 1) {
        let r = raising_relations(params, &p, &test_lambda(n), &mu, &nu);
        t.relations(&p, r);
    }
    t.finish("raising_relations", params, n)
}

fn check_rodrigues(cons: &Constructor, n: usize, max_degree: u32) -> CheckEntry {
    let params = cons.params();
    let mut t = Tally::new();
    let mat = match OperatorMatrix::build(params, n, max_degree) {
        Ok(m) => m,
        Err(e) => {
            t.error("operator matrix", &e);
            return t.finish("rodrigues_vs_eigensolver", params, n);
        }
    };
    if !mat.is_triangular() {
        t.record(false, || json!({"case": "operator matrix", "error": "d_j not triangular"}));
    }
    let results: Vec<(Composition, Result<(Poly, Poly)>)> = mat
        .basis()
        .par_iter()
        .map(|mu| {
            let r = cons
                .poly(mu)
                .and_then(|h| mat.solve(mu).map(|s| ((*h).clone(), s)));
            (mu.clone(), r)
        })
        .collect();
    for (mu, r) in results {
        match r {
            Err(e) => t.error(&mu.to_string(), &e),
            Ok((h, s)) => {
                let diff = &h - &s;
                t.record(diff.is_zero(), || {
                    json!({
                        "mu": mu.to_string(),
                        "constructed": h.to_json_value(),
                        "eigensolver": s.to_json_value(),
                        "difference": diff.to_json_value(),
                    })
                });
                let monic = h.coeff(mu.entries()).is_one();
                t.record(monic && support_ok(&h, &mu, params.family()), || {
                    json!({"mu": mu.to_string(), "error": "not monic or not triangular", "poly": h.to_json_value()})
                });
                let lambda = crate::construct::eigenvalues(params, &mu);
                for (j, l) in lambda.iter().enumerate() {
                    let r = &cd(params, j, &h) - &h.scale(l);
                    t.record(r.is_zero(), || {
                        json!({"mu": mu.to_string(), "operator": format!("d_{}", j + 1), "residual": r.to_json_value()})
                    });
                }
            }
        }
    }
    t.finish("rodrigues_vs_eigensolver", params, n)
}

fn check_exchange_expansion(cons: &Constructor, n: usize, max_degree: u32) -> CheckEntry {
    let params = cons.params();
    let mut t = Tally::new();
    for mu in Composition::all_up_to_degree(n, max_degree) {
        for j in 0..n.saturating_sub(1) {
            let r = (|| -> Result<Poly> {
                let h = cons.poly(&mu)?;
                let (c_self, c_other) = k_action_expand(params, &mu, j)?;
                let mut rhs = h.scale(&c_self);
                if !c_other.is_zero() {
                    rhs.add_scaled(&*cons.poly(&mu.reflect(j))?, &c_other);
                }
                Ok(&h.exchange_unchecked(j, j + 1) - &rhs)
            })();
            match r {
                Ok(d) => t.record(d.is_zero(), || {
                    json!({"mu": mu.to_string(), "j": j + 1, "difference": d.to_json_value()})
                }),
                Err(e) => t.error(&format!("{mu}, K_{}", j + 1), &e),
            }
        }
    }
    t.finish("exchange_expansion", params, n)
}

fn check_hamiltonian(cons: &Constructor, n: usize, max_degree: u32) -> CheckEntry {
    let params = cons.params();
    let mut t = Tally::new();
    for mu in Composition::all_up_to_degree(n, max_degree) {
        match cons.poly(&mu) {
            Ok(h) => {
                let e = params.omega() * int(mu.degree() as i64);
                let r = &hamiltonian_apply(params, &h) - &h.scale(&e);
                t.record(r.is_zero(), || json!({"mu": mu.to_string(), "residual": r.to_json_value()}));
            }
            Err(e) => t.error(&mu.to_string(), &e),
        }
    }
    t.finish("hamiltonian", params, n)
}

fn check_symmetry_sectors(cons: &Constructor, n: usize, max_degree: u32) -> CheckEntry {
    let params = cons.params();
    let mut t = Tally::new();
    for (mu, sign) in admissible_sectors(params.family(), n, max_degree) {
        let h = match cons.sym(&mu, sign) {
            Ok(h) => h.poly,
            Err(e) => {
                t.error(&format!("{mu} {sign}"), &e);
                continue;
            }
        };
        let s = int(sign.as_int());
        for j in 0..n.saturating_sub(1) {
            let r = &h.exchange_unchecked(j, j + 1) - &h.scale(&s);
            t.record(r.is_zero(), || {
                json!({"mu": mu.to_string(), "sign": sign.to_string(), "operator": format!("K_{}", j + 1), "residual": r.to_json_value()})
            });
        }
        if params.is_b() {
            for (j, &m) in mu.entries().iter().enumerate() {
                let par = if m % 2 == 0 { int(1) } else { int(-1) };
                let r = &h.reflect_unchecked(j) - &h.scale(&par);
                t.record(r.is_zero(), || {
                    json!({"mu": mu.to_string(), "sign": sign.to_string(), "operator": format!("t_{}", j + 1), "residual": r.to_json_value()})
                });
            }
        }
    }
    t.finish("symmetry_sectors", params, n)
}

/// `norm_ratio_sym(μ⁺, ±)` against `Σ (b^±)² norm_ratio_nonsym(μ)` over the orbit.
pub fn sym_norm_from_orbit(params: &Params, mu: &Partition, sign: Sign) -> Result<Rational> {
    let mut s = Rational::zero();
    for el in weyl_orbit(mu) {
        let b = sym_coeff(params, mu, &el.composition, sign)?;
        s += &b * &b * norm_ratio_nonsym(params, &el.composition)?.value;
    }
    Ok(s)
}

fn check_norm_consistency(params: &Params, n: usize, max_degree: u32) -> CheckEntry {
    let mut t = Tally::new();
    for (mu, sign) in admissible_sectors(params.family(), n, max_degree) {
        match norm_ratio_sym(params, &mu, sign).and_then(|v| Ok((v.value, sym_norm_from_orbit(params, &mu, sign)?))) {
            Ok((closed, summed)) => t.record(closed == summed, || {
                json!({"mu": mu.to_string(), "sign": sign.to_string(), "closed_form": closed.to_string(), "orbit_sum": summed.to_string()})
            }),
            Err(e) => t.error(&format!("{mu} {sign}"), &e),
        }
    }
    t.finish("norm_consistency", params, n)
}

fn check_poincare(params: &Params, n: usize, max_degree: u32) -> CheckEntry {
    let mut t = Tally::new();
    for mu in Partition::all_up_to_degree(n, max_degree) {
        for sign in [Sign::Plus, Sign::Minus] {
            if sign == Sign::Minus && !mu.as_composition().is_strict() {
                continue;
            }
            match poincare_identity_check(n, &mu, params, sign) {
                Ok((l, r)) => t.record(l == r, || {
                    json!({"mu": mu.to_string(), "sign": sign.to_string(), "lhs": l.to_string(), "rhs": r.to_string()})
                }),
                Err(e) => t.error(&format!("{mu} {sign}"), &e),
            }
        }
    }
    t.finish("poincare", params, n)
}

fn check_macdonald(params: &Params, n: usize, max_degree: u32) -> CheckEntry {
    if !params.a().is_integer() {
        return skipped("macdonald", params, n, "q-exponents need integer a");
    }
    let mut t = Tally::new();
    let points = [(rat(2, 3), rat(1, 5)), (rat(-3, 2), rat(4, 7)), (int(3), rat(-2, 9))];
    for mu in Partition::all_up_to_degree(n, max_degree) {
        for (tt, q) in &points {
            let r = if mu.as_composition().is_strict() {
                macdonald_identity_check(n, &mu, params, tt, q)
            } else {
                macdonald_group_check(n, &mu, params, tt, q)
            };
            match r {
                Ok((l, r)) => t.record(l == r, || {
                    json!({"mu": mu.to_string(), "t": tt.to_string(), "q": q.to_string(), "lhs": l.to_string(), "rhs": r.to_string()})
                }),
                Err(e) => t.error(&format!("{mu} t={tt} q={q}"), &e),
            }
        }
    }
    t.finish("macdonald", params, n)
}

fn check_parameter_shift(params: &Params, n: usize, max_degree: u32) -> CheckEntry {
    let mut t = Tally::new();
    for mu in Partition::all_up_to_degree(n, max_degree) {
        if params.is_b() && mu.entries().iter().any(|x| x % 2 == 1) {
            continue;
        }
        match parameter_shift_check(params, &mu) {
            Ok(rep) => {
                for r in rep.relations {
                    t.record(r.holds(), || {
                        json!({"mu": mu.to_string(), "relation": r.name, "difference": r.difference.to_json_value()})
                    });
                }
            }
            Err(e) => t.error(&mu.to_string(), &e),
        }
    }
    t.finish("parameter_shift", params, n)
}

fn below(x: &BigFloat, tol: &BigFloat) -> bool {
    Ctx::cmp(x, tol) != Ordering::Greater
}

fn check_gram(cons: &Constructor, n: usize, max_degree: u32, opts: &VerifyOptions, ctx: &mut Ctx) -> CheckEntry {
    let params = cons.params();
    let mut t = Tally::new();
    let tol = ctx.tol(opts.tolerance_digits);
    let run = |t: &mut Tally, ctx: &mut Ctx| -> Result<()> {
        let rule = QuadratureRule::for_degree(params, n, max_degree, ctx)?;
        let mus = Composition::all_up_to_degree(n, max_degree);
        let polys = mus.iter().map(|m| cons.poly(m).map(|p| (*p).clone())).collect::<Result<Vec<_>>>()?;
        let g = rule.gram(&polys, ctx)?;
        let off = g.off_diagonal_ratio();
        t.record(below(&off, &tol), || {
            json!({"case": "off-diagonal", "ratio": off.to_string()})
        });
        let base = base_norm_float(params, n, ctx);
        let rel = ctx.rel_err(g.get(0, 0), &base);
        t.record(below(&rel, &tol), || {
            json!({"case": "<h_0, h_0>", "relative_error": rel.to_string()})
        });
        let ratios = g.diagonal_ratios();
        for (mu, r) in mus.iter().zip(&ratios) {
            let exact = norm_ratio_nonsym(params, mu)?.value;
            let ok = matches_rational(r, &exact, &tol, ctx);
            let shown = ctx.format(r, 30);
            t.record(ok, || json!({"mu": mu.to_string(), "quadrature": shown, "closed_form": exact.to_string()}));
        }
        let sectors = admissible_sectors(params.family(), n, max_degree);
        let mut sym = Vec::new();
        for (mu, sign) in &sectors {
            sym.push(cons.sym(mu, *sign)?.poly);
        }
        if !sym.is_empty() {
            let mut list = vec![Poly::one(n)];
            list.extend(sym);
            let gs = rule.gram(&list, ctx)?;
            let d0 = gs.get(0, 0).clone();
            for (i, (mu, sign)) in sectors.iter().enumerate() {
                let v = ctx.div(gs.get(i + 1, i + 1), &d0);
                let exact = norm_ratio_sym(params, mu, *sign)?.value;
                let ok = matches_rational(&v, &exact, &tol, ctx);
                let shown = ctx.format(&v, 30);
                t.record(ok, || {
                    json!({"mu": mu.to_string(), "sign": sign.to_string(), "quadrature": shown, "closed_form": exact.to_string()})
                });
            }
        }
        Ok(())
    };
    if let Err(e) = run(&mut t, ctx) {
        t.error("gram", &e);
    }
    t.finish("norms_vs_gram", params, n)
}

fn check_adjointness(params: &Params, n: usize, max_degree: u32, opts: &VerifyOptions, ctx: &mut Ctx) -> CheckEntry {
    let mut t = Tally::new();
    let tol = ctx.tol(opts.tolerance_digits);
    let run = |t: &mut Tally, ctx: &mut Ctx| -> Result<()> {
        let rule = QuadratureRule::for_degree(params, n, max_degree, ctx)?;
        let low = monomials(n, max_degree.saturating_sub(1));
        let scale = rule.inner(&Poly::one(n), &Poly::one(n), ctx)?;
        let compare = |t: &mut Tally, ctx: &mut Ctx, what: String, l: BigFloat, r: BigFloat| {
            let d = ctx.sub(&l, &r).abs();
            let mut m = scale.clone();
            for v in [l.abs(), r.abs()] {
                if Ctx::cmp(&v, &m) == Ordering::Greater {
                    m = v;
                }
            }
            let rel = ctx.div(&d, &m);
            let ok = below(&rel, &tol);
            t.record(ok, || json!({"case": what, "relative_error": rel.to_string()}));
        };
        for (i, f) in low.iter().enumerate() {
            for g in &low[i..] {
                for j in 0..n.saturating_sub(1) {
                    let l = rule.inner(&bs(params, j, f), g, ctx)?;
                    let r = rule.inner(f, &bs(params, j, g), ctx)?;
                    compare(t, ctx, format!("<S_{} {f}, {g}> = -<{f}, S_{} {g}>", j + 1, j + 1), l, r.neg());
                }
            }
        }
        let all = monomials(n, max_degree);
        for f in &low {
            for g in &all {
                let l = rule.inner(&knop_sahi_e_dagger(params, f), g, ctx)?;
                let r = rule.inner(f, &knop_sahi_e(params, g), ctx)?;
                compare(t, ctx, format!("<e+ {f}, {g}> = <{f}, e {g}>"), l, r);
            }
        }
        Ok(())
    };
    if let Err(e) = run(&mut t, ctx) {
        t.error("adjointness", &e);
    }
    t.finish("adjointness", params, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_pass_for_two_variables() {
        let p = Params::a_type(rat(3, 7), rat(1, 2)).unwrap();
        let rep = verify_suite(&p, 2, 3);
        for e in &rep.entries {
            assert_ne!(e.status, Status::Fail, "{}", serde_json::to_string(e).unwrap());
        }
        assert_eq!(rep.entry("norms_vs_gram").unwrap().status, Status::Skipped);
    }

    #[test]
    fn integer_couplings_run_quadrature() {
        let p = Params::b_type(int(1), int(1), int(1)).unwrap();
        let rep = verify_suite(&p, 2, 2);
        for e in &rep.entries {
            assert_eq!(e.status, Status::Pass, "{}", serde_json::to_string(e).unwrap());
        }
    }

    #[test]
    fn perturbed_top_coefficient_is_caught() {
        let p = Params::a_type(rat(3, 7), rat(1, 2)).unwrap();
        let cons = Constructor::with_top_perturbation(&p, int(1));
        let rep = verify_suite_with(&cons, 2, 2, &VerifyOptions::default());
        let e = rep.entry("rodrigues_vs_eigensolver").unwrap();
        assert_eq!(e.status, Status::Fail);
        assert!(e.detail["counterexamples"][0].get("difference").is_some());
        assert!(!rep.all_pass());
    }
}
