//! Tensor-product Gauss–Hermite rules in high precision and the Gram matrix
//! of the ground-state weight at integer couplings.

use astro_float::BigFloat;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::dunkl::{Family, Params, ParamsJson};
use crate::error::{Error, Result};
use crate::exactpoly::{Poly, Rational};
use crate::hpfloat::{Ctx, RM};

/// Nodes and normalized weights (summing to 1) of the `n`-point rule for `e^{−x²}`.
pub fn gauss_hermite(n: usize, ctx: &mut Ctx) -> Result<(Vec<BigFloat>, Vec<BigFloat>)> {
    if n == 0 {
        return Err(Error::InvalidParams("Gauss-Hermite rule needs at least one node".into()));
    }
    let p = ctx.bits();
    let half = n.div_ceil(2);
    let guesses = f64_roots(n);
    let mut pos: Vec<(BigFloat, BigFloat)> = Vec::with_capacity(half);
    let eps = ctx.pow_rat(&ctx.int(2), &Rational::from_integer((-(p as i64) + 8).into()));
    for (i, &g) in guesses.iter().enumerate().take(half) {
        if n % 2 == 1 && i == half - 1 {
            pos.push((ctx.zero(), BigFloat::new(p)));
            continue;
        }
        let mut x = BigFloat::from_f64(g, p);
        for _ in 0..60 {
            let (hn, hn1) = hermite_pair(n, &x, p);
            // H_n' = 2n H_{n−1}
            let d = hn1.mul(&BigFloat::from_u64(2 * n as u64, p), p, RM);
            let step = hn.div(&d, p, RM);
            x = x.sub(&step, p, RM);
            if Ctx::cmp(&step.abs(), &eps.mul(&x.abs(), p, RM)) != std::cmp::Ordering::Greater {
                break;
            }
        }
        pos.push((x, BigFloat::new(p)));
    }
    // w = 2^{n−1} n! / (n² H_{n−1}(x)²)
    let mut num = BigFloat::from_u64(1, p);
    for k in 1..=n as u64 {
        num = num.mul(&BigFloat::from_u64(2 * k, p), p, RM);
    }
    num = num.div(&BigFloat::from_u64(2 * (n as u64) * (n as u64), p), p, RM);
    for (x, w) in pos.iter_mut() {
        let (_, hn1) = hermite_pair(n, x, p);
        *w = num.div(&hn1.mul(&hn1, p, RM), p, RM);
    }
    let mut nodes = Vec::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    for (x, w) in pos.iter() {
        nodes.push(x.clone());
        weights.push(w.clone());
    }
    for (x, w) in pos.iter().rev().skip(n % 2) {
        nodes.push(x.neg());
        weights.push(w.clone());
    }
    Ok((nodes, weights))
}

/// `(H_n(x), H_{n−1}(x))` for the physicists' Hermite polynomials.
fn hermite_pair(n: usize, x: &BigFloat, p: usize) -> (BigFloat, BigFloat) {
    let two_x = x.mul(&BigFloat::from_u64(2, p), p, RM);
    let mut h0 = BigFloat::from_u64(1, p);
    let mut h1 = two_x.clone();
    if n == 0 {
        return (h0, BigFloat::from_u64(0, p));
    }
    for k in 1..n {
        let t = two_x.mul(&h1, p, RM).sub(
            &h0.mul(&BigFloat::from_u64(2 * k as u64, p), p, RM),
            p,
            RM,
        );
        h0 = h1;
        h1 = t;
    }
    (h1, h0)
}

/// Double-precision roots in decreasing order, from the orthonormal recurrence.
fn f64_roots(n: usize) -> Vec<f64> {
    let pim4 = std::f64::consts::PI.powf(-0.25);
    let nf = n as f64;
    let m = n.div_ceil(2);
    let mut x = vec![0.0f64; m];
    let mut z = 0.0f64;
    for i in 0..m {
        z = match i {
            0 => (2.0 * nf + 1.0).sqrt() - 1.85575 * (2.0 * nf + 1.0).powf(-0.16667),
            1 => z - 1.14 * nf.powf(0.426) / z,
            2 => 1.86 * z - 0.86 * x[0],
            3 => 1.91 * z - 0.91 * x[1],
            _ => 2.0 * z - x[i - 2],
        };
        for _ in 0..100 {
            let mut p1 = pim4;
            let mut p2 = 0.0;
            for j in 1..=n {
                let p3 = p2;
                p2 = p1;
                let jf = j as f64;
                p1 = z * (2.0 / jf).sqrt() * p2 - ((jf - 1.0) / jf).sqrt() * p3;
            }
            let pp = (2.0 * nf).sqrt() * p2;
            let z1 = z;
            z = z1 - p1 / pp;
            if (z - z1).abs() <= 1e-14 {
                break;
            }
        }
        x[i] = z;
    }
    x
}

fn integer_of(x: &Rational, what: &str) -> Result<u32> {
    if !x.is_integer() || x.is_negative() {
        return Err(Error::NonIntegerCoupling(format!("{what} = {x}")));
    }
    x.to_integer()
        .to_u32()
        .ok_or_else(|| Error::NonIntegerCoupling(format!("{what} = {x} too large")))
}

/// Degree in each variable of the polynomial part of the weight.
pub fn weight_degree_per_var(params: &Params, n: usize) -> Result<u32> {
    let a = integer_of(params.a(), "a")?;
    let n1 = n.saturating_sub(1) as u32;
    Ok(match params.family() {
        Family::A => 2 * a * n1,
        Family::B => 4 * a * n1 + 2 * integer_of(params.b(), "b")?,
    })
}

/// Smallest per-axis node count that integrates `weight · p q` exactly for `deg p, deg q ≤ max_degree`.
pub fn required_nodes(params: &Params, n: usize, max_degree: u32) -> Result<usize> {
    let w = weight_degree_per_var(params, n)?;
    Ok(((w + 2 * max_degree + 1) as usize).div_ceil(2))
}

/// A tensor-product rule for `∫ f(x) |φ₀(x)|² dx` over `R^N`, the
/// weight's polynomial factor folded into the point weights.
pub struct QuadratureRule {
    params: Params,
    n: usize,
    per_axis: usize,
    digits: u32,
    bits: usize,
    points: Vec<Vec<BigFloat>>,
    weights: Vec<BigFloat>,
}

impl QuadratureRule {
    pub fn new(params: &Params, n: usize, per_axis: usize, ctx: &mut Ctx) -> Result<QuadratureRule> {
        let a = integer_of(params.a(), "a")?;
        let b = if params.is_b() { integer_of(params.b(), "b")? } else { 0 };
        if n == 0 {
            return Err(Error::InvalidParams("N must be positive".into()));
        }
        let p = ctx.bits();
        let (y, w) = gauss_hermite(per_axis, ctx)?;
        // x = y/√ω, each axis carries √(π/ω)
        let om = ctx.rat(params.omega());
        let rs = ctx.div(&ctx.int(1), &ctx.sqrt(&om));
        let pi = ctx.pi();
        let axis = ctx.sqrt(&ctx.div(&pi, &om));
        let x: Vec<BigFloat> = y.iter().map(|v| ctx.mul(v, &rs)).collect();
        let total = per_axis.pow(n as u32);
        let mut points = Vec::with_capacity(total);
        let mut weights = Vec::with_capacity(total);
        let mut idx = vec![0usize; n];
        for _ in 0..total {
            let pt: Vec<BigFloat> = idx.iter().map(|&i| x[i].clone()).collect();
            let mut wt = BigFloat::from_u64(1, p);
            for &i in &idx {
                wt = wt.mul(&w[i], p, RM).mul(&axis, p, RM);
            }
            let pw = polynomial_weight(params.family(), &pt, a, b, p);
            weights.push(wt.mul(&pw, p, RM));
            points.push(pt);
            for k in (0..n).rev() {
                idx[k] += 1;
                if idx[k] < per_axis {
                    break;
                }
                idx[k] = 0;
            }
        }
        Ok(QuadratureRule {
            params: params.clone(),
            n,
            per_axis,
            digits: ctx.digits(),
            bits: p,
            points,
            weights,
        })
    }

    /// Rule with the minimal exact node count for polynomials up to `max_degree`.
    pub fn for_degree(params: &Params, n: usize, max_degree: u32, ctx: &mut Ctx) -> Result<QuadratureRule> {
        let k = required_nodes(params, n, max_degree)?;
        QuadratureRule::new(params, n, k, ctx)
    }

    pub fn per_axis(&self) -> usize {
        self.per_axis
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// `G[i][j] = ⟨p_i, p_j⟩`, summed over fixed chunks in order so the result
    /// does not depend on thread scheduling.
    pub fn gram(&self, polys: &[Poly], ctx: &mut Ctx) -> Result<GramMatrix> {
        for q in polys {
            if q.n() != self.n {
                return Err(Error::DimensionMismatch {
                    expected: self.n,
                    got: q.n(),
                });
            }
        }
        let maxdeg = polys.iter().filter_map(|q| q.degree()).max().unwrap_or(0);
        let need = required_nodes(&self.params, self.n, maxdeg)?;
        if need > self.per_axis {
            return Err(Error::InvalidParams(format!(
                "{} nodes per axis cannot integrate degree {maxdeg} exactly, need {need}",
                self.per_axis
            )));
        }
        let p = self.bits;
        let conv: Vec<Vec<(Vec<u32>, BigFloat)>> = polys
            .iter()
            .map(|q| q.terms().map(|(e, c)| (e.clone(), ctx.rat(c))).collect())
            .collect();
        let m = polys.len();
        const CHUNK: usize = 64;
        let partial: Vec<Vec<BigFloat>> = self
            .points
            .par_chunks(CHUNK)
            .zip(self.weights.par_chunks(CHUNK))
            .map(|(pts, wts)| {
                let mut acc = vec![BigFloat::from_u64(0, p); m * (m + 1) / 2];
                for (pt, wt) in pts.iter().zip(wts) {
                    let vals: Vec<BigFloat> = conv.iter().map(|t| eval_at(t, pt, maxdeg, p)).collect();
                    let mut k = 0;
                    for i in 0..m {
                        let wi = vals[i].mul(wt, p, RM);
                        for v in &vals[i..] {
                            acc[k] = acc[k].add(&wi.mul(v, p, RM), p, RM);
                            k += 1;
                        }
                    }
                }
                acc
            })
            .collect();
        let mut tri = vec![BigFloat::from_u64(0, p); m * (m + 1) / 2];
        for part in partial {
            for (t, v) in tri.iter_mut().zip(part) {
                *t = t.add(&v, p, RM);
            }
        }
        let mut entries = vec![vec![BigFloat::from_u64(0, p); m]; m];
        let mut k = 0;
        for i in 0..m {
            for j in i..m {
                entries[i][j] = tri[k].clone();
                entries[j][i] = tri[k].clone();
                k += 1;
            }
        }
        Ok(GramMatrix {
            entries,
            params: self.params.clone(),
            n: self.n,
            nodes: self.per_axis,
            digits: self.digits,
            bits: p,
        })
    }

    /// `⟨f, g⟩`.
    pub fn inner(&self, f: &Poly, g: &Poly, ctx: &mut Ctx) -> Result<BigFloat> {
        let gm = self.gram(&[f.clone(), g.clone()], ctx)?;
        Ok(gm.entries[0][1].clone())
    }
}

fn polynomial_weight(family: Family, x: &[BigFloat], a: u32, b: u32, p: usize) -> BigFloat {
    let mut w = BigFloat::from_u64(1, p);
    let n = x.len();
    for j in 0..n {
        for k in j + 1..n {
            let f = match family {
                Family::A => x[j].sub(&x[k], p, RM),
                Family::B => x[j].mul(&x[j], p, RM).sub(&x[k].mul(&x[k], p, RM), p, RM),
            };
            w = w.mul(&f.powi(2 * a as usize, p, RM), p, RM);
        }
    }
    if family == Family::B && b > 0 {
        for xl in x {
            w = w.mul(&xl.powi(2 * b as usize, p, RM), p, RM);
        }
    }
    w
}

fn eval_at(terms: &[(Vec<u32>, BigFloat)], x: &[BigFloat], maxdeg: u32, p: usize) -> BigFloat {
    let pows: Vec<Vec<BigFloat>> = x
        .iter()
        .map(|xi| {
            let mut v = Vec::with_capacity(maxdeg as usize + 1);
            v.push(BigFloat::from_u64(1, p));
            for k in 1..=maxdeg as usize {
                let next = v[k - 1].mul(xi, p, RM);
                v.push(next);
            }
            v
        })
        .collect();
    let mut s = BigFloat::from_u64(0, p);
    for (e, c) in terms {
        let mut t = c.clone();
        for (i, &k) in e.iter().enumerate() {
            if k > 0 {
                t = t.mul(&pows[i][k as usize], p, RM);
            }
        }
        s = s.add(&t, p, RM);
    }
    s
}

/// Gram matrix of a list of polynomials under the ground-state weight.
#[derive(Clone, Debug)]
pub struct GramMatrix {
    pub entries: Vec<Vec<BigFloat>>,
    pub params: Params,
    pub n: usize,
    pub nodes: usize,
    pub digits: u32,
    bits: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct GramJson {
    pub params: ParamsJson,
    #[serde(rename = "N")]
    pub n: usize,
    pub nodes_per_axis: usize,
    pub precision_digits: u32,
    pub labels: Vec<String>,
    pub matrix: Vec<Vec<String>>,
}

impl GramMatrix {
    pub fn size(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &BigFloat {
        &self.entries[i][j]
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.size()).all(|i| (0..i).all(|j| self.entries[i][j] == self.entries[j][i]))
    }

    /// `max |G_ij| (i ≠ j) / min G_ii`.
    pub fn off_diagonal_ratio(&self) -> BigFloat {
        let p = self.bits;
        let m = self.size();
        let mut off = BigFloat::from_u64(0, p);
        let mut dmin: Option<BigFloat> = None;
        for i in 0..m {
            for j in 0..m {
                if i != j {
                    let v = self.entries[i][j].abs();
                    if Ctx::cmp(&v, &off) == std::cmp::Ordering::Greater {
                        off = v;
                    }
                }
            }
            let d = self.entries[i][i].abs();
            dmin = Some(match dmin {
                Some(x) if Ctx::cmp(&x, &d) != std::cmp::Ordering::Greater => x,
                _ => d,
            });
        }
        match dmin {
            Some(d) if !d.is_zero() => off.div(&d, p, RM),
            _ => off,
        }
    }

    /// `G_ii / G_00`.
    pub fn diagonal_ratios(&self) -> Vec<BigFloat> {
        let p = self.bits;
        let d0 = &self.entries[0][0];
        (0..self.size()).map(|i| self.entries[i][i].div(d0, p, RM)).collect()
    }

    pub fn to_json(&self, labels: &[String], ctx: &mut Ctx) -> GramJson {
        let digits = self.digits as usize;
        GramJson {
            params: self.params.to_json(),
            n: self.n,
            nodes_per_axis: self.nodes,
            precision_digits: self.digits,
            labels: labels.to_vec(),
            matrix: self
                .entries
                .iter()
                .map(|r| r.iter().map(|v| ctx.format(v, digits)).collect())
                .collect(),
        }
    }
}

/// `quadrature_gram` with the node count chosen (or checked) for the inputs.
pub fn quadrature_gram(params: &Params, polys: &[Poly], nodes: Option<usize>, ctx: &mut Ctx) -> Result<GramMatrix> {
    let n = polys
        .first()
        .map(|q| q.n())
        .ok_or_else(|| Error::InvalidParams("empty polynomial list".into()))?;
    let maxdeg = polys.iter().filter_map(|q| q.degree()).max().unwrap_or(0);
    let k = match nodes {
        Some(k) => k,
        None => required_nodes(params, n, maxdeg)?,
    };
    QuadratureRule::new(params, n, k, ctx)?.gram(polys, ctx)
}

/// Whether every entry is within `tol` relative error of the exact value.
pub fn matches_rational(value: &BigFloat, exact: &Rational, tol: &BigFloat, ctx: &mut Ctx) -> bool {
    let e = ctx.rat(exact);
    if exact.is_zero() {
        return Ctx::cmp(&value.abs(), tol) != std::cmp::Ordering::Greater;
    }
    Ctx::cmp(&ctx.rel_err(value, &e), tol) != std::cmp::Ordering::Greater
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::nonsym_poly;
    use crate::exactpoly::{int, rat};
    use crate::norms::{base_norm_float, norm_ratio_nonsym};
    use crate::weyl::Composition;
    use std::cmp::Ordering;

    #[test]
    fn rule_integrates_moments() {
        let mut ctx = Ctx::new(40);
        let tol = ctx.tol(36);
        let (x, w) = gauss_hermite(7, &mut ctx).unwrap();
        let p = ctx.bits();
        let mut s0 = ctx.zero();
        let mut s4 = ctx.zero();
        for (xi, wi) in x.iter().zip(&w) {
            s0 = ctx.add(&s0, wi);
            s4 = ctx.add(&s4, &ctx.mul(wi, &xi.powi(4, p, RM)));
        }
        // normalized moments of e^{−x²}: 1 and 3/4
        assert_eq!(Ctx::cmp(&ctx.rel_err(&s0, &ctx.int(1)), &tol), Ordering::Less);
        let e = ctx.rat(&rat(3, 4));
        assert_eq!(Ctx::cmp(&ctx.rel_err(&s4, &e), &tol), Ordering::Less);
    }

    #[test]
    fn gaussian_examples() {
        let mut ctx = Ctx::new(40);
        let tol = ctx.tol(35);
        let p = Params::a_type(int(1), rat(1, 2)).unwrap();
        let one = Poly::one(1);
        let x = Poly::var(1, 0);
        let g = quadrature_gram(&p, &[one, x], None, &mut ctx).unwrap();
        let pi = ctx.pi();
        let e = ctx.sqrt(&ctx.mul(&ctx.int(2), &pi));
        assert_eq!(Ctx::cmp(&ctx.rel_err(g.get(0, 0), &e), &tol), Ordering::Less);
        assert_eq!(Ctx::cmp(&ctx.rel_err(g.get(1, 1), &e), &tol), Ordering::Less);
        assert!(g.get(0, 1).is_zero() || Ctx::cmp(&g.get(0, 1).abs(), &tol) == Ordering::Less);
    }

    #[test]
    fn hermite_gram_matches_norms() {
        let mut ctx = Ctx::new(40);
        let tol = ctx.tol(25);
        let p = Params::a_type(int(1), rat(1, 2)).unwrap();
        let mus = [vec![0, 0], vec![1, 0], vec![0, 1]];
        let polys: Vec<Poly> = mus
            .iter()
            .map(|m| nonsym_poly(&p, &Composition::new(m.clone())).unwrap().poly)
            .collect();
        let g = quadrature_gram(&p, &polys, None, &mut ctx).unwrap();
        assert!(g.is_symmetric());
        assert_eq!(Ctx::cmp(&g.off_diagonal_ratio(), &tol), Ordering::Less);
        let r = g.diagonal_ratios();
        assert!(matches_rational(&r[1], &rat(3, 2), &tol, &mut ctx));
        assert!(matches_rational(&r[2], &int(2), &tol, &mut ctx));
        let base = base_norm_float(&p, 2, &mut ctx);
        assert_eq!(Ctx::cmp(&ctx.rel_err(g.get(0, 0), &base), &tol), Ordering::Less);
    }

    #[test]
    fn laguerre_gram_matches_norms() {
        let mut ctx = Ctx::new(40);
        let tol = ctx.tol(25);
        let p = Params::b_type(int(1), int(1), int(1)).unwrap();
        let mus: Vec<Composition> = Composition::all_up_to_degree(2, 3);
        let polys: Vec<Poly> = mus.iter().map(|m| nonsym_poly(&p, m).unwrap().poly).collect();
        let g = quadrature_gram(&p, &polys, None, &mut ctx).unwrap();
        assert_eq!(Ctx::cmp(&g.off_diagonal_ratio(), &tol), Ordering::Less);
        let r = g.diagonal_ratios();
        for (mu, ri) in mus.iter().zip(&r) {
            let exact = norm_ratio_nonsym(&p, mu).unwrap().value;
            assert!(matches_rational(ri, &exact, &tol, &mut ctx), "{mu}");
        }
        let base = base_norm_float(&p, 2, &mut ctx);
        assert_eq!(Ctx::cmp(&ctx.rel_err(g.get(0, 0), &base), &tol), Ordering::Less);
    }

    #[test]
    fn fractional_coupling_rejected() {
        let mut ctx = Ctx::new(20);
        let p = Params::a_type(rat(1, 2), int(1)).unwrap();
        assert!(matches!(
            quadrature_gram(&p, &[Poly::one(2)], None, &mut ctx),
            Err(Error::NonIntegerCoupling(_))
        ));
    }
}
