//! Dunkl, Cherednik, Knop–Sahi, braid and raising operators acting on [`Poly`].
//!
//! Index conventions are 0-based: `dunkl_apply(p, 0, ..)` is `∇_1`,
//! `braid_s(p, j, ..)` is `S_{j+1} = [K_{j+1,j+2}, d_{j+1}]`, and
//! `raising_a_dagger(p, j, ..)` is `A_{j+1}^†`.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactpoly::{int, Poly, Rational};
use crate::weyl::Partition;

/// Root system family: `A_{N−1}` (Hermite) or `B_N` (Laguerre).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::A => write!(f, "A"),
            Family::B => write!(f, "B"),
        }
    }
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Family> {
        match s {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            _ => Err(Error::Parse(format!("family must be A or B, got {s:?}"))),
        }
    }
}

/// Model family and coupling constants.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Params {
    family: Family,
    a: Rational,
    b: Rational,
    omega: Rational,
}

impl Params {
    pub fn new(family: Family, a: Rational, b: Rational, omega: Rational) -> Result<Params> {
        if !a.is_positive() {
            return Err(Error::InvalidParams(format!("coupling a must be positive, got {a}")));
        }
        if !omega.is_positive() {
            return Err(Error::InvalidParams(format!("omega must be positive, got {omega}")));
        }
        if b.is_negative() {
            return Err(Error::InvalidParams(format!("coupling b must be non-negative, got {b}")));
        }
        let b = match family {
            Family::A => Rational::zero(),
            Family::B => b,
        };
        Ok(Params {
            family,
            a,
            b,
            omega,
        })
    }

    pub fn a_type(a: Rational, omega: Rational) -> Result<Params> {
        Params::new(Family::A, a, Rational::zero(), omega)
    }

    pub fn b_type(a: Rational, b: Rational, omega: Rational) -> Result<Params> {
        Params::new(Family::B, a, b, omega)
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }

    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn omega(&self) -> &Rational {
        &self.omega
    }

    pub fn is_b(&self) -> bool {
        self.family == Family::B
    }

    /// Same family and `ω` with shifted couplings.
    pub fn with_couplings(&self, a: Rational, b: Rational) -> Result<Params> {
        Params::new(self.family, a, b, self.omega.clone())
    }

    pub fn to_json(&self) -> ParamsJson {
        ParamsJson {
            family: self.family,
            a: self.a.to_string(),
            b: self.b.to_string(),
            omega: self.omega.to_string(),
        }
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::A => write!(f, "A(a={}, omega={})", self.a, self.omega),
            Family::B => write!(f, "B(a={}, b={}, omega={})", self.a, self.b, self.omega),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParamsJson {
    pub family: Family,
    pub a: String,
    pub b: String,
    pub omega: String,
}

fn check(p: &Poly, j: usize) -> Result<()> {
    if j >= p.n() {
        Err(Error::IndexOutOfRange { index: j, n: p.n() })
    } else {
        Ok(())
    }
}

/// `∇_j`.
pub fn dunkl_apply(params: &Params, j: usize, p: &Poly) -> Result<Poly> {
    check(p, j)?;
    Ok(dunkl(params, j, p))
}

fn dunkl(params: &Params, j: usize, p: &Poly) -> Poly {
    let mut out = p.partial_unchecked(j);
    let mut sum = Poly::zero(p.n());
    for k in 0..p.n() {
        if k == j {
            continue;
        }
        sum.add_scaled(&p.diffquot_minus_unchecked(j, k), &Rational::one());
        if params.is_b() {
            sum.add_scaled(&p.diffquot_plus_unchecked(j, k), &Rational::one());
        }
    }
    out.add_scaled(&sum, params.a());
    if params.is_b() {
        out.add_scaled(&p.diffquot_reflect_unchecked(j), params.b());
    }
    out
}

/// `α_l^† = x_l − ∇_l/(2ω)`.
pub fn alpha_dagger(params: &Params, l: usize, p: &Poly) -> Result<Poly> {
    check(p, l)?;
    Ok(alpha_dag(params, l, p))
}

fn alpha_dag(params: &Params, l: usize, p: &Poly) -> Poly {
    let mut out = p.mul_var(l);
    out.add_scaled(&dunkl(params, l, p), &-inv_two_omega(params));
    out
}

/// `α_l = ∇_l/(2ω)`.
pub fn alpha(params: &Params, l: usize, p: &Poly) -> Result<Poly> {
    check(p, l)?;
    Ok(dunkl(params, l, p).scale(&inv_two_omega(params)))
}

fn inv_two_omega(params: &Params) -> Rational {
    (params.omega() * int(2)).recip()
}

/// Cherednik operator `d_j`.
pub fn cherednik_d(params: &Params, j: usize, p: &Poly) -> Result<Poly> {
    check(p, j)?;
    Ok(cd(params, j, p))
}

pub(crate) fn cd(params: &Params, j: usize, p: &Poly) -> Poly {
    let grad = dunkl(params, j, p);
    let mut out = grad.mul_var(j);
    out.add_scaled(&dunkl(params, j, &grad), &-inv_two_omega(params));
    let mut tail = Poly::zero(p.n());
    for k in j + 1..p.n() {
        let kp = p.exchange_unchecked(j, k);
        if params.is_b() {
            let t = kp.reflect_unchecked(j).reflect_unchecked(k);
            tail.add_scaled(&t, &Rational::one());
        }
        tail.add_scaled(&kp, &Rational::one());
    }
    out.add_scaled(&tail, params.a());
    if params.is_b() {
        out.add_scaled(&p.reflect_unchecked(j), params.b());
    }
    out
}

/// `d^λ = Σ λ_j d_j`.
pub fn cherednik_weighted(params: &Params, lambda: &[i64], p: &Poly) -> Result<Poly> {
    if lambda.len() != p.n() {
        return Err(Error::DimensionMismatch {
            expected: p.n(),
            got: lambda.len(),
        });
    }
    let mut out = Poly::zero(p.n());
    for (j, &l) in lambda.iter().enumerate() {
        if l != 0 {
            out.add_scaled(&cd(params, j, p), &int(l));
        }
    }
    Ok(out)
}

/// `t^λ = ∏ t_j^{λ_j}`.
pub fn reflect_weighted(lambda: &[i64], p: &Poly) -> Result<Poly> {
    if lambda.len() != p.n() {
        return Err(Error::DimensionMismatch {
            expected: p.n(),
            got: lambda.len(),
        });
    }
    let mut out = p.clone();
    for (j, &l) in lambda.iter().enumerate() {
        if l.rem_euclid(2) == 1 {
            out = out.reflect_unchecked(j);
        }
    }
    Ok(out)
}

/// `e^† = K_{N−1} ⋯ K_1 α_1^†`.
pub fn knop_sahi_e_dagger(params: &Params, p: &Poly) -> Poly {
    let mut out = alpha_dag(params, 0, p);
    for j in 0..p.n().saturating_sub(1) {
        out = out.exchange_unchecked(j, j + 1);
    }
    out
}

/// `e = α_1 K_1 ⋯ K_{N−1}`.
pub fn knop_sahi_e(params: &Params, p: &Poly) -> Poly {
    let mut out = p.clone();
    for j in (0..p.n().saturating_sub(1)).rev() {
        out = out.exchange_unchecked(j, j + 1);
    }
    dunkl(params, 0, &out).scale(&inv_two_omega(params))
}

/// `S_j = K_j d_j − d_j K_j` with `K_j = K_{j,j+1}`.
pub fn braid_s(params: &Params, j: usize, p: &Poly) -> Result<Poly> {
    if j + 1 >= p.n() {
        return Err(Error::IndexOutOfRange { index: j, n: p.n() });
    }
    Ok(bs(params, j, p))
}

pub(crate) fn bs(params: &Params, j: usize, p: &Poly) -> Poly {
    let left = cd(params, j, p).exchange_unchecked(j, j + 1);
    let right = cd(params, j, &p.exchange_unchecked(j, j + 1));
    &left - &right
}

/// `A_{j+1}^† = (S_{j+1} S_{j+2} ⋯ S_{N−1} e^†)^{j+1}`.
pub fn raising_a_dagger(params: &Params, j: usize, p: &Poly) -> Result<Poly> {
    check(p, j)?;
    Ok(raise(params, j, p))
}

fn raise(params: &Params, j: usize, p: &Poly) -> Poly {
    let n = p.n();
    let mut out = p.clone();
    for _ in 0..=j {
        out = knop_sahi_e_dagger(params, &out);
        for s in (j..n - 1).rev() {
            out = bs(params, s, &out);
        }
    }
    out
}

/// `A_μ^† = ∏_j (A_j^†)^{μ_j − μ_{j+1}}`.
pub fn raising_a_mu_dagger(params: &Params, mu_plus: &Partition, p: &Poly) -> Result<Poly> {
    if mu_plus.n() != p.n() {
        return Err(Error::DimensionMismatch {
            expected: p.n(),
            got: mu_plus.n(),
        });
    }
    let mu = mu_plus.entries();
    let n = mu.len();
    let mut out = p.clone();
    for j in 0..n {
        let next = if j + 1 < n { mu[j + 1] } else { 0 };
        for _ in 0..mu[j] - next {
            out = raise(params, j, &out);
        }
    }
    Ok(out)
}

/// Transformed Hamiltonian `H = ω Σ_l (d_l − E_0)`.
pub fn hamiltonian_apply(params: &Params, p: &Poly) -> Poly {
    let n = p.n();
    let nm1 = int(n as i64 - 1);
    let shift = match params.family() {
        Family::A => params.a() * &nm1 / int(2),
        Family::B => params.a() * &nm1 + params.b(),
    };
    let mut out = Poly::zero(n);
    for l in 0..n {
        out.add_scaled(&cd(params, l, p), &Rational::one());
    }
    out.add_scaled(p, &-(shift * int(n as i64)));
    out.scale(params.omega())
}

/// An operator bound to its indices; applied uniformly through [`OperatorHandle::apply`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Op {
    Exchange(usize, usize),
    Reflect(usize),
    Dunkl(usize),
    Alpha(usize),
    AlphaDagger(usize),
    Cherednik(usize),
    CherednikWeighted(Vec<i64>),
    ReflectWeighted(Vec<i64>),
    E,
    EDagger,
    Braid(usize),
    Raising(usize),
    RaisingMu(Partition),
    Hamiltonian,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorHandle {
    pub op: Op,
    pub params: Params,
}

impl OperatorHandle {
    pub fn new(op: Op, params: &Params) -> OperatorHandle {
        OperatorHandle {
            op,
            params: params.clone(),
        }
    }

    pub fn apply(&self, p: &Poly) -> Result<Poly> {
        let pr = &self.params;
        match &self.op {
            Op::Exchange(j, k) => p.exchange(*j, *k),
            Op::Reflect(j) => p.reflect(*j),
            Op::Dunkl(j) => dunkl_apply(pr, *j, p),
            Op::Alpha(j) => alpha(pr, *j, p),
            Op::AlphaDagger(j) => alpha_dagger(pr, *j, p),
            Op::Cherednik(j) => cherednik_d(pr, *j, p),
            Op::CherednikWeighted(l) => cherednik_weighted(pr, l, p),
            Op::ReflectWeighted(l) => reflect_weighted(l, p),
            Op::E => Ok(knop_sahi_e(pr, p)),
            Op::EDagger => Ok(knop_sahi_e_dagger(pr, p)),
            Op::Braid(j) => braid_s(pr, *j, p),
            Op::Raising(j) => raising_a_dagger(pr, *j, p),
            Op::RaisingMu(mu) => raising_a_mu_dagger(pr, mu, p),
            Op::Hamiltonian => Ok(hamiltonian_apply(pr, p)),
        }
    }

    /// Applies `ops` right to left (the last element acts first).
    pub fn apply_chain(ops: &[OperatorHandle], p: &Poly) -> Result<Poly> {
        ops.iter().rev().try_fold(p.clone(), |acc, op| op.apply(&acc))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::rat;
    use crate::weyl::Composition;

    fn pa() -> Params {
        Params::a_type(rat(3, 7), rat(1, 2)).unwrap()
    }

    fn pb() -> Params {
        Params::b_type(rat(3, 7), rat(2, 5), rat(1, 2)).unwrap()
    }

    fn x(n: usize, j: usize) -> Poly {
        Poly::var(n, j)
    }

    #[test]
    fn dunkl_examples() {
        let p = pa();
        let a = p.a().clone();
        assert_eq!(
            dunkl_apply(&p, 0, &x(2, 0)).unwrap(),
            Poly::constant(2, &a + int(1))
        );
        assert_eq!(dunkl_apply(&p, 0, &x(2, 1)).unwrap(), Poly::constant(2, -&a));
        assert!(dunkl_apply(&pb(), 1, &Poly::one(3)).unwrap().is_zero());
    }

    #[test]
    fn alpha_examples() {
        let p = pa();
        assert!(alpha(&p, 0, &Poly::one(2)).unwrap().is_zero());
        assert_eq!(alpha_dagger(&p, 0, &Poly::one(2)).unwrap(), x(2, 0));
        // (1 + a)/(2ω) with ω = 1/2
        assert_eq!(alpha(&p, 0, &x(2, 0)).unwrap(), Poly::constant(2, rat(10, 7)));
    }

    #[test]
    fn cherednik_examples() {
        let p = pa();
        assert_eq!(cherednik_d(&p, 1, &x(2, 1)).unwrap(), x(2, 1).scale(&rat(10, 7)));
        assert!(cherednik_d(&p, 0, &x(2, 1)).unwrap().is_zero());
        for n in 1..=4 {
            for j in 0..n {
                let one = Poly::one(n);
                assert_eq!(
                    cherednik_d(&p, j, &one).unwrap(),
                    one.scale(&(p.a() * int((n - 1 - j) as i64)))
                );
                let q = pb();
                assert_eq!(
                    cherednik_d(&q, j, &one).unwrap(),
                    one.scale(&(q.a() * int(2 * (n - 1 - j) as i64) + q.b()))
                );
            }
        }
    }

    #[test]
    fn knop_sahi_examples() {
        let p = pa();
        assert_eq!(knop_sahi_e_dagger(&p, &Poly::one(2)), x(2, 1));
        assert_eq!(knop_sahi_e_dagger(&p, &Poly::one(3)), x(3, 2));
        assert!(knop_sahi_e(&p, &Poly::one(2)).is_zero());
        let lhs = knop_sahi_e_dagger(&p, &knop_sahi_e(&p, &x(2, 1))).scale(&(p.omega() * int(2)));
        assert_eq!(lhs, cherednik_d(&p, 1, &x(2, 1)).unwrap());
    }

    #[test]
    fn braid_examples() {
        let p = pa();
        for n in 2..=4 {
            for j in 0..n - 1 {
                assert!(braid_s(&p, j, &Poly::one(n)).unwrap().is_zero());
            }
        }
        // S_1² = a² − (d_1 − d_2)² on x_2
        let v = x(2, 1);
        let s2 = braid_s(&p, 0, &braid_s(&p, 0, &v).unwrap()).unwrap();
        let diff = |q: &Poly| &cherednik_d(&p, 0, q).unwrap() - &cherednik_d(&p, 1, q).unwrap();
        let rhs = &v.scale(&(p.a() * p.a())) - &diff(&diff(&v));
        assert_eq!(s2, rhs);
        assert!(braid_s(&p, 1, &v).is_err());
    }

    #[test]
    fn raising_identity_and_degree() {
        let p = pa();
        let zero = Partition::zero(3);
        let q = &x(3, 0) + &x(3, 2);
        assert_eq!(raising_a_mu_dagger(&p, &zero, &q).unwrap(), q);
        let mu = Partition::new(vec![2, 1, 0]).unwrap();
        let r = raising_a_mu_dagger(&p, &mu, &Poly::one(3)).unwrap();
        assert_eq!(r.degree(), Some(3));
        assert!(!r.coeff(&[2, 1, 0]).is_zero());
    }

    #[test]
    fn hamiltonian_examples() {
        let p = pa();
        assert!(hamiltonian_apply(&p, &Poly::one(2)).is_zero());
        let s = &x(2, 0) + &x(2, 1);
        assert_eq!(hamiltonian_apply(&p, &s), s.scale(p.omega()));
        let h = Poly::from_terms(2, vec![(vec![1, 0], int(1)), (vec![0, 1], rat(3, 10))]).unwrap();
        assert_eq!(hamiltonian_apply(&p, &h), h.scale(p.omega()));
        assert!(hamiltonian_apply(&pb(), &Poly::one(3)).is_zero());
    }

    #[test]
    fn handle_dispatch() {
        let p = pa();
        let m = Poly::monomial(&Composition::new(vec![2, 1]));
        let h = OperatorHandle::new(Op::Cherednik(0), &p);
        assert_eq!(h.apply(&m).unwrap(), cherednik_d(&p, 0, &m).unwrap());
        let chain = [OperatorHandle::new(Op::Exchange(0, 1), &p), h.clone()];
        assert_eq!(
            OperatorHandle::apply_chain(&chain, &m).unwrap(),
            cherednik_d(&p, 0, &m).unwrap().exchange(0, 1).unwrap()
        );
    }

    #[test]
    fn params_validation() {
        assert!(Params::a_type(int(0), int(1)).is_err());
        assert!(Params::a_type(int(1), int(0)).is_err());
        assert!(Params::b_type(int(1), int(-1), int(1)).is_err());
        assert_eq!(Params::new(Family::A, int(1), int(5), int(1)).unwrap().b(), &int(0));
    }
}
