//! Operator identities among Cherednik, exchange, reflection, braid and
//! Knop–Sahi operators, each evaluated as a difference polynomial on an input.

use num_traits::One;

use crate::dunkl::{bs, cd, cherednik_weighted, knop_sahi_e, knop_sahi_e_dagger, raising_a_mu_dagger, reflect_weighted, Family, Params};
use crate::error::{Error, Result};
use crate::exactpoly::{int, Poly, Rational};
use crate::weyl::Partition;

/// One identity `lhs − rhs` evaluated on a polynomial.
#[derive(Clone, Debug)]
pub struct Relation {
    pub name: String,
    pub difference: Poly,
}

impl Relation {
    fn new(name: String, lhs: Poly, rhs: Poly) -> Relation {
        Relation {
            name,
            difference: &lhs - &rhs,
        }
    }

    pub fn holds(&self) -> bool {
        self.difference.is_zero()
    }
}

fn k(l: usize, p: &Poly) -> Poly {
    p.exchange_unchecked(l, l + 1)
}

fn t(l: usize, p: &Poly) -> Poly {
    p.reflect_unchecked(l)
}

/// `1` for A, `1 + t_l t_{l+1}` for B, applied to `p`.
fn pair_factor(params: &Params, l: usize, p: &Poly) -> Poly {
    match params.family() {
        Family::A => p.clone(),
        Family::B => p + &t(l, &t(l + 1, p)),
    }
}

/// Exchange/reflection commutation rules and commutativity of the `d_j`.
pub fn commutation_relations(params: &Params, p: &Poly) -> Result<Vec<Relation>> {
    let n = p.n();
    let a = params.a();
    let mut out = Vec::new();
    let d: Vec<Poly> = (0..n).map(|j| cd(params, j, p)).collect();
    for l in 0..n.saturating_sub(1) {
        let kp = k(l, p);
        let f = pair_factor(params, l, p).scale(a);
        out.push(Relation::new(
            format!("d_{0} K_{0} - K_{0} d_{1} = a(..)", l + 1, l + 2),
            &cd(params, l, &kp) - &k(l, &d[l + 1]),
            f.clone(),
        ));
        out.push(Relation::new(
            format!("d_{1} K_{0} - K_{0} d_{0} = -a(..)", l + 1, l + 2),
            &cd(params, l + 1, &kp) - &k(l, &d[l]),
            -&f,
        ));
    }
    for m in 0..n.saturating_sub(1) {
        let km = k(m, p);
        for (l, dl) in d.iter().enumerate() {
            if l == m || l == m + 1 {
                continue;
            }
            out.push(Relation::new(format!("[d_{}, K_{}] = 0", l + 1, m + 1), cd(params, l, &km), k(m, dl)));
        }
    }
    if params.is_b() {
        for m in 0..n {
            let tm = t(m, p);
            for (l, dl) in d.iter().enumerate() {
                out.push(Relation::new(format!("[d_{}, t_{}] = 0", l + 1, m + 1), cd(params, l, &tm), t(m, dl)));
            }
        }
    }
    for j in 0..n {
        for kk in j + 1..n {
            out.push(Relation::new(
                format!("[d_{}, d_{}] = 0", j + 1, kk + 1),
                cd(params, j, &d[kk]),
                cd(params, kk, &d[j]),
            ));
        }
    }
    Ok(out)
}

/// Braid relations, Knop–Sahi intertwining, `S_j²` and `2ω e^† e = d_N`.
pub fn braid_relations(params: &Params, p: &Poly) -> Result<Vec<Relation>> {
    let n = p.n();
    let a = params.a();
    let mut out = Vec::new();
    let s = |j: usize, q: &Poly| bs(params, j, q);
    let ed = |q: &Poly| knop_sahi_e_dagger(params, q);
    for j in 0..n.saturating_sub(2) {
        out.push(Relation::new(
            format!("S_{0} S_{1} S_{0} = S_{1} S_{0} S_{1}", j + 1, j + 2),
            s(j, &s(j + 1, &s(j, p))),
            s(j + 1, &s(j, &s(j + 1, p))),
        ));
    }
    for j in 0..n.saturating_sub(1) {
        for kk in j + 2..n.saturating_sub(1) {
            out.push(Relation::new(
                format!("S_{} S_{} = S_{} S_{}", j + 1, kk + 1, kk + 1, j + 1),
                s(j, &s(kk, p)),
                s(kk, &s(j, p)),
            ));
        }
    }
    if params.is_b() {
        for j in 0..n.saturating_sub(1) {
            out.push(Relation::new(
                format!("t_{0} S_{0} t_{1} S_{0} = S_{0} t_{1} S_{0} t_{0}", j + 1, j + 2),
                t(j, &s(j, &t(j + 1, &s(j, p)))),
                s(j, &t(j + 1, &s(j, &t(j, p)))),
            ));
        }
    }
    for j in 0..n.saturating_sub(2) {
        out.push(Relation::new(
            format!("S_{} e+ = e+ S_{}", j + 1, j + 2),
            s(j, &ed(p)),
            ed(&s(j + 1, p)),
        ));
    }
    if n >= 2 {
        out.push(Relation::new(
            format!("S_{} (e+)^2 = (e+)^2 S_1", n - 1),
            s(n - 2, &ed(&ed(p))),
            ed(&ed(&s(0, p))),
        ));
    }
    for j in 0..n.saturating_sub(1) {
        let diff = |q: &Poly| &cd(params, j, q) - &cd(params, j + 1, q);
        let dd = diff(&diff(p));
        let base = match params.family() {
            Family::A => p.scale(&(a * a)),
            Family::B => pair_factor(params, j, p).scale(&(a * a * int(2))),
        };
        out.push(Relation::new(
            format!("S_{0}^2 = k a^2 - (d_{0} - d_{1})^2", j + 1, j + 2),
            s(j, &s(j, p)),
            &base - &dd,
        ));
    }
    // d_N^B = 2ω α_N^† α_N + b t_N, so the B form carries the reflection tail
    let mut dn = cd(params, n - 1, p);
    if params.is_b() {
        dn.add_scaled(&t(n - 1, p), &-params.b());
    }
    out.push(Relation::new(
        "2 omega e+ e = d_N - b t_N".into(),
        ed(&knop_sahi_e(params, p)).scale(&(params.omega() * int(2))),
        dn,
    ));
    Ok(out)
}

/// Intertwining of `S_j` and `e^†` with `d^λ` and `t^λ`.
pub fn intertwining_relations(params: &Params, p: &Poly, lambda: &[i64]) -> Result<Vec<Relation>> {
    let n = p.n();
    if lambda.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: lambda.len(),
        });
    }
    let mut out = Vec::new();
    for j in 0..n.saturating_sub(1) {
        let mut sl = lambda.to_vec();
        sl.swap(j, j + 1);
        out.push(Relation::new(
            format!("S_{} d^lambda = d^(s_{} lambda) S_{}", j + 1, j + 1, j + 1),
            bs(params, j, &cherednik_weighted(params, lambda, p)?),
            cherednik_weighted(params, &sl, &bs(params, j, p))?,
        ));
        if params.is_b() {
            out.push(Relation::new(
                format!("S_{} t^lambda = t^(s_{} lambda) S_{}", j + 1, j + 1, j + 1),
                bs(params, j, &reflect_weighted(lambda, p)?),
                reflect_weighted(&sl, &bs(params, j, p))?,
            ));
        }
    }
    // s_1 ⋯ s_{N−1} λ = (λ_N, λ_1, …, λ_{N−1})
    let mut rot = vec![lambda[n - 1]];
    rot.extend_from_slice(&lambda[..n - 1]);
    let inner = &cherednik_weighted(params, &rot, p)? + &p.scale(&int(lambda[n - 1]));
    out.push(Relation::new(
        "d^lambda e+ = e+ (d^(s_1..s_(N-1) lambda) + lambda_N)".into(),
        cherednik_weighted(params, lambda, &knop_sahi_e_dagger(params, p))?,
        knop_sahi_e_dagger(params, &inner),
    ));
    Ok(out)
}

/// Raising-operator relations for `A_μ^†` and `A_ν^†`.
pub fn raising_relations(
    params: &Params,
    p: &Poly,
    lambda: &[i64],
    mu: &Partition,
    nu: &Partition,
) -> Result<Vec<Relation>> {
    let n = p.n();
    if lambda.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: lambda.len(),
        });
    }
    let pair: i64 = lambda.iter().zip(mu.entries()).map(|(l, &m)| l * m as i64).sum();
    let am = |q: &Poly| raising_a_mu_dagger(params, mu, q);
    let an = |q: &Poly| raising_a_mu_dagger(params, nu, q);
    let mut out = Vec::new();
    let inner = &cherednik_weighted(params, lambda, p)? + &p.scale(&int(pair));
    out.push(Relation::new(
        format!("d^lambda A+_{mu} = A+_{mu} (d^lambda + <lambda, mu>)"),
        cherednik_weighted(params, lambda, &am(p)?)?,
        am(&inner)?,
    ));
    if params.is_b() {
        let sign = if pair.rem_euclid(2) == 0 { Rational::one() } else { -Rational::one() };
        out.push(Relation::new(
            format!("t^lambda A+_{mu} = (-1)^<lambda, mu> A+_{mu} t^lambda"),
            reflect_weighted(lambda, &am(p)?)?,
            am(&reflect_weighted(lambda, p)?)?.scale(&sign),
        ));
    }
    out.push(Relation::new(
        format!("[A+_{mu}, A+_{nu}] = 0"),
        am(&an(p)?)?,
        an(&am(p)?)?,
    ));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rat;
    use crate::weyl::Composition;

    fn inputs(n: usize) -> Vec<Poly> {
        Composition::all_up_to_degree(n, 3)
            .iter()
            .map(Poly::monomial)
            .collect()
    }

    #[test]
    fn relations_on_monomials() {
        for params in [
            Params::a_type(rat(3, 7), rat(1, 2)).unwrap(),
            Params::b_type(rat(5, 3), rat(1, 4), int(1)).unwrap(),
        ] {
            for n in [2, 3] {
                let lambda: Vec<i64> = (0..n as i64).map(|i| 2 * i - 1).collect();
                for p in inputs(n) {
                    let mut all = commutation_relations(&params, &p).unwrap();
                    all.extend(braid_relations(&params, &p).unwrap());
                    all.extend(intertwining_relations(&params, &p, &lambda).unwrap());
                    for r in all {
                        assert!(r.holds(), "{params} N={n} {} on {p}: {}", r.name, r.difference);
                    }
                }
            }
        }
    }

    #[test]
    fn raising_on_small_inputs() {
        for params in [
            Params::a_type(rat(3, 7), rat(1, 2)).unwrap(),
            Params::b_type(rat(5, 3), rat(1, 4), int(1)).unwrap(),
        ] {
            let mu = Partition::new(vec![1, 0, 0]).unwrap();
            let nu = Partition::new(vec![1, 1, 0]).unwrap();
            for p in Composition::all_up_to_degree(3, 1).iter().map(Poly::monomial) {
                for r in raising_relations(&params, &p, &[2, -1, 3], &mu, &nu).unwrap() {
                    assert!(r.holds(), "{params} {} on {p}: {}", r.name, r.difference);
                }
            }
        }
    }

    #[test]
    fn b_type_e_dagger_e_misses_reflection_tail() {
        let params = Params::b_type(rat(3, 7), rat(2, 5), rat(1, 2)).unwrap();
        let p = Poly::from_terms(2, vec![(vec![2, 1], int(1)), (vec![0, 3], rat(-2, 3))]).unwrap();
        let lhs = knop_sahi_e_dagger(&params, &knop_sahi_e(&params, &p)).scale(&(params.omega() * int(2)));
        let gap = &cd(&params, 1, &p) - &lhs;
        assert_eq!(gap, p.reflect_unchecked(1).scale(params.b()));
    }
}
