//! Squared norms as exact ratios to `⟨h_0, h_0⟩`, the base norms in high
//! precision, and the Poincaré-polynomial orbit identities.

use astro_float::BigFloat;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::construct::{check_sector, shifted_pairing, Sign};
use crate::dunkl::{Family, Params};
use crate::error::{Error, Result};
use crate::exactpoly::{int, rat, Rational};
use crate::hpfloat::Ctx;
use crate::weyl::{
    eval_poly_u64, poincare_polynomial_bounded, sort_to_partition, weyl_orbit, Composition,
    Partition, Perm, PosRoot, ENUMERATION_BOUND,
};

/// `Γ(x₀ + n)/Γ(x₀)` as an exact product; negative `n` gives the reciprocal product.
pub fn gamma_ratio(x0: &Rational, n: i64) -> Result<Rational> {
    let mut acc = Rational::one();
    if n >= 0 {
        for k in 0..n {
            let f = x0 + int(k);
            if f.is_zero() {
                return Err(Error::PoleEncountered(format!("Gamma({x0} + {n}) / Gamma({x0})")));
            }
            acc *= f;
        }
    } else {
        for k in 1..=-n {
            let f = x0 - int(k);
            if f.is_zero() {
                return Err(Error::PoleEncountered(format!("Gamma({x0} - {}) at a pole", -n)));
            }
            acc /= f;
        }
    }
    Ok(acc)
}

/// A squared norm divided by `⟨h_0, h_0⟩`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormRatio {
    pub value: Rational,
    pub family: Family,
    pub params: Params,
    pub label: Composition,
    pub sign: Option<Sign>,
}

#[derive(Clone, Debug, Serialize)]
pub struct NormRow {
    pub family: String,
    #[serde(rename = "N")]
    pub n: usize,
    pub mu: String,
    pub sign: String,
    pub ratio_num: String,
    pub ratio_den: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub absolute: Option<String>,
}

impl NormRatio {
    pub fn row(&self) -> NormRow {
        NormRow {
            family: self.family.to_string(),
            n: self.label.n(),
            mu: self
                .label
                .entries()
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(","),
            sign: self.sign.map(|s| s.to_string()).unwrap_or_default(),
            ratio_num: self.value.numer().to_string(),
            ratio_den: self.value.denom().to_string(),
            absolute: None,
        }
    }
}

fn i64_of(x: u32) -> i64 {
    x as i64
}

/// `∏_β Y²/(Y² − (a·p)²)` over the inversion roots of `w_μ`.
pub fn orbit_factor(params: &Params, mu: &Composition) -> Result<Rational> {
    let (plus, w) = sort_to_partition(mu);
    orbit_factor_along(params, &plus, &w.inversion_sequence())
}

/// The same product over an explicit list of roots (one per letter of a reduced word).
pub fn orbit_factor_along(params: &Params, mu_plus: &Partition, roots: &[PosRoot]) -> Result<Rational> {
    let mut acc = Rational::one();
    for &r in roots {
        let y = shifted_pairing(params, mu_plus.entries(), r);
        let m = r.pairing_int(mu_plus.entries());
        let ap = match params.family() {
            Family::A => params.a().clone(),
            Family::B if m % 2 == 0 => params.a() * int(2),
            Family::B => Rational::zero(),
        };
        let den = &y * &y - &ap * &ap;
        if den.is_zero() {
            return Err(Error::SingularParameter {
                pairing: format!("<{r}, mu+ + k a rho>^2 - (a p)^2 at mu+ = {mu_plus}"),
            });
        }
        acc *= &y * &y / den;
    }
    Ok(acc)
}

/// Root factor `Γ(X+1+a)Γ(X+1−a)/Γ(X+1)²` at `X = X₀ + m`, relative to `X = X₀`.
fn nonsym_root_factor(a: &Rational, x0: &Rational, m: i64) -> Result<Rational> {
    let one = Rational::one();
    Ok(gamma_ratio(&(x0 + &one + a), m)? * gamma_ratio(&(x0 + &one - a), m)?
        / (gamma_ratio(&(x0 + &one), m)?.pow(2)))
}

/// Partition part of the norm ratio: `⟨h_{μ⁺}, h_{μ⁺}⟩/⟨h_0, h_0⟩`.
pub fn norm_ratio_partition(params: &Params, mu_plus: &Partition) -> Result<Rational> {
    let n = mu_plus.n();
    let mu = mu_plus.entries();
    let a = params.a();
    let one = Rational::one();
    let half = rat(1, 2);
    let deg = i64_of(mu_plus.degree());
    let mut acc = match params.family() {
        Family::A => (params.omega() * int(2)).pow(-(deg as i32)),
        Family::B => params.omega().pow(-(deg as i32)),
    };
    for (i, &m) in mu.iter().enumerate() {
        let base = a * int((n - 1 - i) as i64);
        match params.family() {
            Family::A => acc *= gamma_ratio(&(&base + &one), i64_of(m))?,
            Family::B => {
                acc *= gamma_ratio(&(&base + params.b() + &half), i64_of(m.div_ceil(2)))?;
                acc *= gamma_ratio(&(&base + &one), i64_of(m / 2))?;
            }
        }
    }
    for r in PosRoot::all(n) {
        let x0 = a * int(r.height());
        let m = r.pairing_int(mu);
        let off = match params.family() {
            Family::A => m,
            Family::B => m.div_euclid(2),
        };
        acc *= nonsym_root_factor(a, &x0, off)?;
    }
    Ok(acc)
}

/// `⟨h_μ, h_μ⟩/⟨h_0, h_0⟩`.
pub fn norm_ratio_nonsym(params: &Params, mu: &Composition) -> Result<NormRatio> {
    let (plus, _) = sort_to_partition(mu);
    let value = orbit_factor(params, mu)? * norm_ratio_partition(params, &plus)?;
    Ok(NormRatio {
        value,
        family: params.family(),
        params: params.clone(),
        label: mu.clone(),
        sign: None,
    })
}

/// `⟨H_μ^±, H_μ^±⟩/⟨h_0, h_0⟩`.
pub fn norm_ratio_sym(params: &Params, mu: &Partition, sign: Sign) -> Result<NormRatio> {
    check_sector(params.family(), mu, sign)?;
    let n = mu.n();
    let e = mu.entries();
    let a = params.a();
    let one = Rational::one();
    let half = rat(1, 2);
    let deg = i64_of(mu.degree());
    let mut acc = int((1..=n as i64).product());
    acc *= match params.family() {
        Family::A => (params.omega() * int(2)).pow(-(deg as i32)),
        Family::B => params.omega().pow(-(deg as i32)),
    };
    for (i, &m) in e.iter().enumerate() {
        let base = a * int((n - 1 - i) as i64);
        match params.family() {
            Family::A => acc *= gamma_ratio(&(&base + &one), i64_of(m))?,
            Family::B => {
                acc *= gamma_ratio(&(&base + params.b() + &half), i64_of(m.div_ceil(2)))?;
                acc *= gamma_ratio(&(&base + &one), i64_of(m / 2))?;
            }
        }
    }
    // Γ(X+1∓a)Γ(X±a)/(Γ(X+1)Γ(X)) relative to Γ(X₀+1+a)Γ(X₀+1−a)/Γ(X₀+1)²
    let s = int(sign.as_int());
    for r in PosRoot::all(n) {
        let x0 = a * int(r.height());
        let m = r.pairing_int(e);
        let off = match params.family() {
            Family::A => m,
            Family::B => m / 2,
        };
        let up = &x0 + &one - &s * a;
        let down = &x0 + &one + &s * a;
        // Γ(x₀+off+1∓a)/Γ(x₀+1∓a) · Γ(x₀+off±a)/Γ(x₀+1±a)
        acc *= gamma_ratio(&up, off)? * gamma_ratio(&down, off - 1)?
            / (gamma_ratio(&(&x0 + &one), off)? * gamma_ratio(&(&x0 + &one), off - 1)?);
    }
    Ok(NormRatio {
        value: acc,
        family: params.family(),
        params: params.clone(),
        label: mu.as_composition().clone(),
        sign: Some(sign),
    })
}

/// `⟨h_0, h_0⟩` evaluated in floating point at the context's precision.
pub fn base_norm_float(params: &Params, n: usize, ctx: &mut Ctx) -> BigFloat {
    let a = params.a();
    let one = Rational::one();
    let two_pi = {
        let pi = ctx.pi();
        ctx.mul(&ctx.int(2), &pi)
    };
    let nr = int(n as i64);
    let (mut acc, gammas) = match params.family() {
        Family::A => {
            let half_n = rat(n as i64, 2);
            let num = ctx.pow_rat(&two_pi, &half_n);
            let exp = &nr * (&nr * a + &one - a) / int(2);
            let tw = ctx.rat(&(params.omega() * int(2)));
            let den = ctx.pow_rat(&tw, &exp);
            (ctx.div(&num, &den), vec![])
        }
        Family::B => {
            let exp = &nr * (&nr - &one) * a + &nr * (params.b() + rat(1, 2));
            let om = ctx.rat(params.omega());
            let den = ctx.pow_rat(&om, &exp);
            let g: Vec<Rational> = (1..=n as i64)
                .map(|j| a * int(j - 1) + params.b() + rat(1, 2))
                .collect();
            (ctx.div(&ctx.int(1), &den), g)
        }
    };
    let g1a = ctx.gamma(&(&one + a));
    for j in 1..=n as i64 {
        let g = ctx.gamma(&(&one + a * int(j)));
        acc = ctx.mul(&acc, &ctx.div(&g, &g1a));
    }
    for x in gammas {
        let g = ctx.gamma(&x);
        acc = ctx.mul(&acc, &g);
    }
    acc
}

/// Both sides of `Σ_{ν∈W(μ)} ∏_{R_{w_ν}} (X∓a)/(X±a) = N! ∏_{R₊} X/(X±a)`,
/// `X = ⟨α^∨, μ + aρ⟩`.
pub fn poincare_identity_check(n: usize, mu: &Partition, params: &Params, sign: Sign) -> Result<(Rational, Rational)> {
    if n > ENUMERATION_BOUND {
        return Err(Error::BoundExceeded {
            n,
            bound: ENUMERATION_BOUND,
        });
    }
    if mu.n() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: mu.n(),
        });
    }
    let a = params.a();
    let s = int(sign.as_int());
    let x_of = |r: PosRoot| int(r.pairing_int(mu.entries())) + a * int(r.height());
    let pole = |r: PosRoot| Error::PoleEncountered(format!("<{r}, mu + a rho> {} a = 0 at mu = {mu}", sign));
    let mut rhs = int((1..=n as i64).product());
    for r in PosRoot::all(n) {
        let x = x_of(r);
        let d = &x + &s * a;
        if d.is_zero() {
            return Err(pole(r));
        }
        rhs *= x / d;
    }
    let mut lhs = Rational::zero();
    for el in weyl_orbit(mu) {
        let mut t = Rational::one();
        for r in el.word.inversion_sequence() {
            let x = x_of(r);
            let d = &x + &s * a;
            if d.is_zero() {
                return Err(pole(r));
            }
            t *= (&x - &s * a) / d;
        }
        lhs += t;
    }
    Ok((lhs, rhs))
}

fn integer_coupling(params: &Params) -> Result<i64> {
    let a = params.a();
    if !a.is_integer() {
        return Err(Error::IrrationalExponent(format!("a = {a}: q^(a h) needs integer a")));
    }
    a.to_integer()
        .to_i64()
        .ok_or_else(|| Error::IrrationalExponent(format!("a = {a} too large")))
}

fn qpow(q: &Rational, e: i64) -> Rational {
    q.pow(e as i32)
}

fn macdonald_term(t: &Rational, q: &Rational, e: i64) -> Result<Rational> {
    let qe = qpow(q, e);
    let den = Rational::one() - t * &qe;
    if den.is_zero() {
        return Err(Error::PoleEncountered(format!("1 - t q^{e} = 0")));
    }
    Ok(t * (Rational::one() - t.recip() * qe) / den)
}

fn macdonald_rhs(n: usize, mu: &Partition, a: i64, t: &Rational, q: &Rational) -> Result<Rational> {
    let w = poincare_polynomial_bounded(n, ENUMERATION_BOUND)?;
    let mut rhs = eval_poly_u64(&w, t);
    for r in PosRoot::all(n) {
        let e = r.pairing_int(mu.entries()) + a * r.height();
        let qe = qpow(q, e);
        let den = Rational::one() - t * &qe;
        if den.is_zero() {
            return Err(Error::PoleEncountered(format!("1 - t q^{e} = 0")));
        }
        rhs *= (Rational::one() - qe) / den;
    }
    Ok(rhs)
}

fn check_tq(t: &Rational, q: &Rational) -> Result<()> {
    if t.is_zero() || q.is_zero() {
        return Err(Error::PoleEncountered("t and q must be nonzero".into()));
    }
    Ok(())
}

/// Both sides of the orbit-sum form of Macdonald's identity, exponents
/// `⟨α^∨, μ + aρ⟩` with integer `a`.
///
/// For `μ` with repeated entries the orbit-sum form needs `t = q^a`; the
/// sum over the full group ([`macdonald_group_check`]) holds for any `t`.
pub fn macdonald_identity_check(
    n: usize,
    mu: &Partition,
    params: &Params,
    t: &Rational,
    q: &Rational,
) -> Result<(Rational, Rational)> {
    let a = integer_coupling(params)?;
    check_tq(t, q)?;
    let rhs = macdonald_rhs(n, mu, a, t, q)?;
    let mut lhs = Rational::zero();
    for el in weyl_orbit(mu) {
        let mut prod = Rational::one();
        for r in el.word.inversion_sequence() {
            prod *= macdonald_term(t, q, r.pairing_int(mu.entries()) + a * r.height())?;
        }
        lhs += prod;
    }
    Ok((lhs, rhs))
}

/// The same identity summed over every `w ∈ S_N` with `R_w` from the permutation.
pub fn macdonald_group_check(
    n: usize,
    mu: &Partition,
    params: &Params,
    t: &Rational,
    q: &Rational,
) -> Result<(Rational, Rational)> {
    let a = integer_coupling(params)?;
    check_tq(t, q)?;
    if n > ENUMERATION_BOUND {
        return Err(Error::BoundExceeded {
            n,
            bound: ENUMERATION_BOUND,
        });
    }
    let rhs = macdonald_rhs(n, mu, a, t, q)?;
    let mut lhs = Rational::zero();
    for w in Perm::all(n) {
        let mut prod = Rational::one();
        for r in w.inversion_roots() {
            prod *= macdonald_term(t, q, r.pairing_int(mu.entries()) + a * r.height())?;
        }
        lhs += prod;
    }
    Ok((lhs, rhs))
}

/// Whether `μ` has pairwise distinct entries.
pub fn is_regular(mu: &Partition) -> bool {
    mu.as_composition().is_strict()
}

/// Convenience: the sign of a rational as `-1, 0, 1`.
pub fn signum(x: &Rational) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}
