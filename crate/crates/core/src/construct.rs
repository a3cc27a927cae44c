//! Monic non-symmetric polynomials `h_μ` via the Rodrigues formulas, and
//! their symmetric and anti-symmetric combinations `H_μ^±`.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::dunkl::{bs, raising_a_mu_dagger, Family, Params, ParamsJson};
use crate::error::{Error, Result};
use crate::exactpoly::{int, Poly, PolyJson, Rational};
use crate::weyl::{
    order_compare, sort_to_partition, weyl_orbit, Composition, OrderRelation, Partition, PosRoot,
    ReducedWord,
};

/// Bosonic (`+`) or fermionic (`−`) sector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_int(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+"),
            Sign::Minus => write!(f, "-"),
        }
    }
}

impl std::str::FromStr for Sign {
    type Err = Error;
    fn from_str(s: &str) -> Result<Sign> {
        match s {
            "+" | "plus" | "sym" | "symmetric" => Ok(Sign::Plus),
            "-" | "minus" | "anti" | "antisymmetric" => Ok(Sign::Minus),
            _ => Err(Error::Parse(format!("sign must be + or -, got {s:?}"))),
        }
    }
}

/// `k` in `μ⁺ + k·aρ`: 1 for family A, 2 for family B.
fn rho_scale(params: &Params) -> Rational {
    match params.family() {
        Family::A => Rational::one(),
        Family::B => int(2),
    }
}

/// `⟨α^∨, μ⁺ + k·aρ⟩` for a positive root.
pub fn shifted_pairing(params: &Params, mu_plus: &[u32], root: PosRoot) -> Rational {
    int(root.pairing_int(mu_plus)) + rho_scale(params) * params.a() * int(root.height())
}

/// `a` (family A) or `a(1 + (−1)^m)` (family B).
fn parity_a(params: &Params, m: i64) -> Rational {
    match params.family() {
        Family::A => params.a().clone(),
        Family::B => {
            if m.rem_euclid(2) == 0 {
                params.a() * int(2)
            } else {
                Rational::zero()
            }
        }
    }
}

fn singular(what: String) -> Error {
    Error::SingularParameter { pairing: what }
}

/// Joint eigenvalues of `d_1, .., d_N` on `h_μ`.
pub fn eigenvalues(params: &Params, mu: &Composition) -> Vec<Rational> {
    let (_, w) = sort_to_partition(mu);
    let n = mu.n();
    let shift: Vec<Rational> = (0..n)
        .map(|j| {
            let delta = int((n - 1 - j) as i64);
            match params.family() {
                Family::A => params.a() * delta,
                Family::B => int(2) * params.a() * delta + params.b(),
            }
        })
        .collect();
    let shifted = w.apply(&shift);
    mu.entries()
        .iter()
        .zip(shifted)
        .map(|(&m, s)| int(m as i64) + s)
        .collect()
}

/// Eigenvalues of `t_j` on `h_μ^{(B)}`: `(−1)^{μ_j}`.
pub fn parities(mu: &Composition) -> Vec<i8> {
    mu.entries()
        .iter()
        .map(|&m| if m % 2 == 0 { 1 } else { -1 })
        .collect()
}

/// Top coefficient `c_μ` of `A_μ^† 1` up to the sign fixed by [`raising_sign`].
pub fn top_coeff_partition(params: &Params, mu_plus: &Partition) -> Rational {
    let k = rho_scale(params) * params.a();
    let mut c = Rational::one();
    for r in PosRoot::all(mu_plus.n()) {
        let h = k.clone() * int(r.height());
        for l in 1..=r.pairing_int(mu_plus.entries()) {
            c *= int(l) + &h;
        }
    }
    c
}

/// Sign of the top coefficient of `A_μ^† 1` for `S_j = K_j d_j − d_j K_j`:
/// each `A_j^†` carries `j(N − j)` braid factors.
pub fn raising_sign(mu_plus: &Partition) -> Rational {
    let mu = mu_plus.entries();
    let n = mu.len();
    let mut count = 0u64;
    for j in 0..n {
        let next = if j + 1 < n { mu[j + 1] } else { 0 };
        count += (mu[j] - next) as u64 * ((j + 1) * (n - 1 - j)) as u64;
    }
    if count % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// One factor of `c_{w_μ}` for an inversion root.
fn word_factor(params: &Params, mu_plus: &[u32], root: PosRoot) -> Result<Rational> {
    let x = shifted_pairing(params, mu_plus, root);
    let pa = parity_a(params, root.pairing_int(mu_plus));
    if x.is_zero() {
        return Err(singular(format!("<{root}, mu+ + k a rho> at mu+ = {mu_plus:?}")));
    }
    Ok((&x * &x - &pa * &pa) / x)
}

/// `c_{w_μ}`: product over the inversion roots of `w_μ`.
pub fn top_coeff_word(params: &Params, mu: &Composition) -> Result<Rational> {
    let (plus, w) = sort_to_partition(mu);
    top_coeff_for_word(params, &plus, &w)
}

/// `c_w` along an explicit reduced word applied to `μ⁺`.
pub fn top_coeff_for_word(params: &Params, mu_plus: &Partition, w: &ReducedWord) -> Result<Rational> {
    let mut c = Rational::one();
    for root in w.inversion_sequence() {
        c *= word_factor(params, mu_plus.entries(), root)?;
    }
    Ok(c)
}

/// `(c_self, c_other)` with `K_j h_μ = c_self h_μ + c_other h_{s_j(μ)}`.
pub fn k_action_expand(params: &Params, mu: &Composition, j: usize) -> Result<(Rational, Rational)> {
    if j + 1 >= mu.n() {
        return Err(Error::IndexOutOfRange { index: j, n: mu.n() });
    }
    let m = mu.simple_pairing(j);
    if m == 0 {
        return Ok((Rational::one(), Rational::zero()));
    }
    let ev = eigenvalues(params, mu);
    let x = &ev[j] - &ev[j + 1];
    if x.is_zero() {
        return Err(singular(format!("<alpha_{}, mu + k a rho(mu)> at mu = {mu}", j + 1)));
    }
    let c = parity_a(params, m) / &x;
    if m < 0 {
        Ok((c, Rational::one()))
    } else {
        let other = Rational::one() - &c * &c;
        Ok((c, other))
    }
}

/// Coefficient `s` with `S_j h_μ = s · h_{s_j(μ)}`.
pub fn s_action_coeff(params: &Params, mu: &Composition, j: usize) -> Result<Rational> {
    let (_, other) = k_action_expand(params, mu, j)?;
    if mu.simple_pairing(j) == 0 {
        return Ok(Rational::zero());
    }
    let ev = eigenvalues(params, mu);
    Ok(other * (&ev[j] - &ev[j + 1]))
}

/// Which provenance coefficients were used for a polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Provenance {
    pub c_mu_plus: Rational,
    pub c_w: Rational,
    pub word: ReducedWord,
}

/// A monic joint eigenpolynomial `h_μ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledPoly {
    pub poly: Poly,
    pub label: Composition,
    pub params: Params,
    pub eigenvalues: Vec<Rational>,
    pub provenance: Provenance,
}

impl LabeledPoly {
    pub fn family(&self) -> Family {
        self.params.family()
    }

    pub fn is_monic(&self) -> bool {
        self.poly.coeff(self.label.entries()).is_one()
    }

    /// Every lower term is `⪯ μ` or of lower degree, with parity preserved.
    pub fn support_is_triangular(&self) -> bool {
        support_ok(&self.poly, &self.label, self.family())
    }

    pub fn to_json(&self) -> LabeledPolyJson {
        LabeledPolyJson {
            poly: self.poly.to_json_value(),
            label: self.label.entries().to_vec(),
            family: self.family(),
            params: self.params.to_json(),
            eigenvalues: self.eigenvalues.iter().map(|e| e.to_string()).collect(),
            parities: match self.family() {
                Family::A => None,
                Family::B => Some(parities(&self.label)),
            },
            provenance: serde_json::json!({
                "c_mu_plus": self.provenance.c_mu_plus.to_string(),
                "c_w": self.provenance.c_w.to_string(),
                "word": self.provenance.word.letters().iter().map(|j| j + 1).collect::<Vec<_>>(),
            }),
        }
    }
}

pub(crate) fn support_ok(poly: &Poly, label: &Composition, family: Family) -> bool {
    let deg = label.degree();
    poly.terms().all(|(e, _)| {
        if e.as_slice() == label.entries() {
            return true;
        }
        let nu = Composition::new(e.clone());
        let lower = nu.degree() < deg
            || order_compare(&nu, label).map(|r| r == OrderRelation::Less).unwrap_or(false);
        let parity = match family {
            Family::A => (nu.degree() + deg) % 2 == 0,
            Family::B => e.iter().zip(label.entries()).all(|(x, y)| (x + y) % 2 == 0),
        };
        lower && parity
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct LabeledPolyJson {
    #[serde(flatten)]
    pub poly: PolyJson,
    pub label: Vec<u32>,
    pub family: Family,
    pub params: ParamsJson,
    pub eigenvalues: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parities: Option<Vec<i8>>,
    pub provenance: serde_json::Value,
}

/// Builds `h_μ` for one parameter point, caching every polynomial it produces.
///
/// The cache is shared across threads; concurrent callers may duplicate work
/// but always insert identical values.
pub struct Constructor {
    params: Params,
    cache: RwLock<HashMap<Composition, Arc<Poly>>>,
    top_perturbation: Option<Rational>,
}

impl Constructor {
    pub fn new(params: &Params) -> Constructor {
        Constructor {
            params: params.clone(),
            cache: RwLock::new(HashMap::new()),
            top_perturbation: None,
        }
    }

    /// Adds `delta` to every `c_{μ⁺}` before dividing; for fault injection only.
    pub fn with_top_perturbation(params: &Params, delta: Rational) -> Constructor {
        Constructor {
            top_perturbation: Some(delta),
            ..Constructor::new(params)
        }
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    fn cached(&self, mu: &Composition) -> Option<Arc<Poly>> {
        self.cache.read().expect("cache lock").get(mu).cloned()
    }

    fn store(&self, mu: &Composition, p: Poly) -> Arc<Poly> {
        let p = Arc::new(p);
        self.cache
            .write()
            .expect("cache lock")
            .entry(mu.clone())
            .or_insert(p)
            .clone()
    }

    fn signed_top(&self, mu_plus: &Partition) -> Rational {
        let mut c = raising_sign(mu_plus) * top_coeff_partition(&self.params, mu_plus);
        if let Some(d) = &self.top_perturbation {
            c += d;
        }
        c
    }

    /// `h_μ` as a bare polynomial.
    pub fn poly(&self, mu: &Composition) -> Result<Arc<Poly>> {
        if let Some(p) = self.cached(mu) {
            return Ok(p);
        }
        let p = match mu.entries().windows(2).position(|w| w[0] < w[1]) {
            None => {
                let plus = Partition::try_from(mu.clone())?;
                let raw = raising_a_mu_dagger(&self.params, &plus, &Poly::one(mu.n()))?;
                let c = self.signed_top(&plus);
                if c.is_zero() {
                    return Err(singular(format!("c_mu at mu = {mu}")));
                }
                raw.scale(&c.recip())
            }
            Some(j) => {
                // μ = s_j(ν) with ν_j > ν_{j+1}, one step further along the chain
                let prev = mu.reflect(j);
                let hp = self.poly(&prev)?;
                let s = s_action_coeff(&self.params, &prev, j)?;
                if s.is_zero() {
                    return Err(singular(format!("braid step s_{} at {prev}", j + 1)));
                }
                bs(&self.params, j, &hp).scale(&s.recip())
            }
        };
        Ok(self.store(mu, p))
    }

    /// `h_μ` with eigenvalues and provenance.
    pub fn nonsym(&self, mu: &Composition) -> Result<LabeledPoly> {
        let poly = (*self.poly(mu)?).clone();
        let (plus, word) = sort_to_partition(mu);
        Ok(LabeledPoly {
            poly,
            label: mu.clone(),
            params: self.params.clone(),
            eigenvalues: eigenvalues(&self.params, mu),
            provenance: Provenance {
                c_mu_plus: top_coeff_partition(&self.params, &plus),
                c_w: top_coeff_for_word(&self.params, &plus, &word)?,
                word,
            },
        })
    }

    /// `H_{μ⁺}^±`.
    pub fn sym(&self, mu_plus: &Partition, sign: Sign) -> Result<SymLabeledPoly> {
        check_sector(self.params.family(), mu_plus, sign)?;
        let mut poly = Poly::zero(mu_plus.n());
        let mut coefficients = Vec::new();
        for el in weyl_orbit(mu_plus) {
            let b = sym_coeff_unchecked(&self.params, mu_plus, &el.composition, sign)?;
            poly.add_scaled(&*self.poly(&el.composition)?, &b);
            coefficients.push((el.composition, b));
        }
        Ok(SymLabeledPoly {
            poly,
            label: mu_plus.clone(),
            params: self.params.clone(),
            sign,
            coefficients,
        })
    }
}

/// `h_μ` through the orbit sweep.
pub fn nonsym_poly(params: &Params, mu: &Composition) -> Result<LabeledPoly> {
    Constructor::new(params).nonsym(mu)
}

/// `(c_w c_{μ⁺})^{-1} S_w A_{μ⁺}^† 1` along the given reduced word of `w_μ`.
pub fn rodrigues_direct(params: &Params, mu_plus: &Partition, word: &ReducedWord) -> Result<Poly> {
    let mut p = raising_a_mu_dagger(params, mu_plus, &Poly::one(mu_plus.n()))?;
    for &j in word.letters() {
        p = bs(params, j, &p);
    }
    let c = raising_sign(mu_plus)
        * top_coeff_partition(params, mu_plus)
        * top_coeff_for_word(params, mu_plus, word)?;
    if c.is_zero() {
        return Err(singular(format!("c_w c_mu at mu+ = {mu_plus}")));
    }
    Ok(p.scale(&c.recip()))
}

/// Sector rules: any partition for `A+`; strictly decreasing for `A−`;
/// a common parity for `B+`; common parity and strictly decreasing for `B−`.
pub fn check_sector(family: Family, mu_plus: &Partition, sign: Sign) -> Result<()> {
    let e = mu_plus.entries();
    let fail = |reason: &str| {
        Err(Error::InvalidSector {
            label: mu_plus.to_string(),
            reason: reason.to_string(),
        })
    };
    let strict = mu_plus.as_composition().is_strict();
    let same_parity = e.iter().all(|x| x % 2 == e[0] % 2);
    match (family, sign) {
        (Family::A, Sign::Plus) => Ok(()),
        (Family::A, Sign::Minus) if strict => Ok(()),
        (Family::A, Sign::Minus) => fail("anti-symmetric A labels lie in P+ + delta (strictly decreasing entries)"),
        (Family::B, Sign::Plus) if same_parity => Ok(()),
        (Family::B, Sign::Plus) => fail("symmetric B labels lie in 2P+ or 2P+ + 1^N (all even or all odd)"),
        (Family::B, Sign::Minus) if same_parity && strict => Ok(()),
        (Family::B, Sign::Minus) => fail(
            "anti-symmetric B labels lie in 2(P+ + delta) or 2(P+ + delta) + 1^N (all even or all odd, strictly decreasing)",
        ),
    }
}

/// `b_{μ⁺μ}^±`.
pub fn sym_coeff(params: &Params, mu_plus: &Partition, mu: &Composition, sign: Sign) -> Result<Rational> {
    check_sector(params.family(), mu_plus, sign)?;
    let (plus, _) = sort_to_partition(mu);
    if &plus != mu_plus {
        return Err(Error::InvalidSector {
            label: mu.to_string(),
            reason: format!("not in the orbit of {mu_plus}"),
        });
    }
    sym_coeff_unchecked(params, mu_plus, mu, sign)
}

fn sym_coeff_unchecked(params: &Params, mu_plus: &Partition, mu: &Composition, sign: Sign) -> Result<Rational> {
    let ka = rho_scale(params) * params.a();
    let s = int(sign.as_int());
    let mut b = Rational::one();
    for root in sort_to_partition(mu).1.inversion_sequence() {
        let y = shifted_pairing(params, mu_plus.entries(), root);
        if y.is_zero() {
            return Err(singular(format!("<{root}, mu+ + k a rho> at mu+ = {mu_plus}")));
        }
        b *= &s * (&y - &s * &ka) / y;
    }
    Ok(b)
}

/// `H_μ^±` with the coefficients used.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymLabeledPoly {
    pub poly: Poly,
    pub label: Partition,
    pub params: Params,
    pub sign: Sign,
    pub coefficients: Vec<(Composition, Rational)>,
}

impl SymLabeledPoly {
    pub fn is_monic(&self) -> bool {
        self.poly.coeff(self.label.entries()).is_one()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut v = serde_json::to_value(self.poly.to_json_value()).expect("serializes");
        let obj = v.as_object_mut().expect("object");
        obj.insert("label".into(), serde_json::json!(self.label.entries()));
        obj.insert("family".into(), serde_json::json!(self.params.family()));
        obj.insert("params".into(), serde_json::to_value(self.params.to_json()).expect("serializes"));
        obj.insert("symmetry".into(), serde_json::json!(match self.sign {
            Sign::Plus => "symmetric",
            Sign::Minus => "antisymmetric",
        }));
        obj.insert(
            "coefficients".into(),
            serde_json::Value::Array(
                self.coefficients
                    .iter()
                    .map(|(c, b)| serde_json::json!({"mu": c.entries(), "b": b.to_string()}))
                    .collect(),
            ),
        );
        v
    }
}

pub fn sym_poly(params: &Params, mu_plus: &Partition, sign: Sign) -> Result<SymLabeledPoly> {
    Constructor::new(params).sym(mu_plus, sign)
}

/// `∏_{i<j} (x_i − x_j)`.
pub fn vandermonde(n: usize) -> Poly {
    let mut p = Poly::one(n);
    for i in 0..n {
        for j in i + 1..n {
            p = &p * &(&Poly::var(n, i) - &Poly::var(n, j));
        }
    }
    p
}

/// `∏_{i<j} (x_i² − x_j²)`.
pub fn vandermonde_squares(n: usize) -> Poly {
    let mut p = Poly::one(n);
    for i in 0..n {
        for j in i + 1..n {
            let xi = Poly::var(n, i);
            let xj = Poly::var(n, j);
            p = &p * &(&(&xi * &xi) - &(&xj * &xj));
        }
    }
    p
}

/// `∏ x_i`.
pub fn coordinate_product(n: usize) -> Poly {
    Poly::monomial(&Composition::new(vec![1; n]))
}

/// One side-by-side comparison of a parameter-shift identity.
#[derive(Clone, Debug)]
pub struct ShiftRelation {
    pub name: String,
    pub lhs: Poly,
    pub rhs: Poly,
    pub difference: Poly,
}

impl ShiftRelation {
    fn new(name: &str, lhs: Poly, rhs: Poly) -> ShiftRelation {
        let difference = &lhs - &rhs;
        ShiftRelation {
            name: name.to_string(),
            lhs,
            rhs,
            difference,
        }
    }

    pub fn holds(&self) -> bool {
        self.difference.is_zero()
    }
}

#[derive(Clone, Debug)]
pub struct ShiftReport {
    pub mu: Partition,
    pub relations: Vec<ShiftRelation>,
}

impl ShiftReport {
    pub fn all_hold(&self) -> bool {
        self.relations.iter().all(ShiftRelation::holds)
    }
}

/// Checks the difference-product relations between bosonic and fermionic
/// polynomials at shifted couplings. `μ ∈ P₊` for A; `μ ∈ 2P₊` for B.
pub fn parameter_shift_check(params: &Params, mu_plus: &Partition) -> Result<ShiftReport> {
    let n = mu_plus.n();
    let one = Rational::one();
    let a = params.a().clone();
    let b = params.b().clone();
    let delta = Composition::new((0..n).map(|j| (n - 1 - j) as u32).collect());
    let mu = mu_plus.as_composition();
    let relations = match params.family() {
        Family::A => {
            let shifted = params.with_couplings(&a + &one, b.clone())?;
            let lhs = &vandermonde(n) * &sym_poly(&shifted, mu_plus, Sign::Plus)?.poly;
            let target = Partition::try_from(mu.add(&delta))?;
            let rhs = sym_poly(params, &target, Sign::Minus)?.poly;
            vec![ShiftRelation::new("Delta H+(a+1) = H-_{mu+delta}(a)", lhs, rhs)]
        }
        Family::B => {
            if mu_plus.entries().iter().any(|x| x % 2 == 1) {
                return Err(Error::InvalidSector {
                    label: mu_plus.to_string(),
                    reason: "the B-type shift relations take mu in 2P+".into(),
                });
            }
            let two_delta = delta.add(&delta);
            let ones = Composition::new(vec![1; n]);
            let d1 = vandermonde_squares(n);
            let d2 = coordinate_product(n);
            let p_ab1 = params.with_couplings(&a + &one, &b + &one)?;
            let p_b1 = params.with_couplings(a.clone(), &b + &one)?;
            let p_a1 = params.with_couplings(&a + &one, b.clone())?;
            let e1 = &(&d1 * &d2) * &sym_poly(&p_ab1, mu_plus, Sign::Plus)?.poly;
            let e2 = &d2 * &sym_poly(&p_b1, &Partition::try_from(mu.add(&two_delta))?, Sign::Minus)?.poly;
            let e3 = &d1 * &sym_poly(&p_a1, &Partition::try_from(mu.add(&ones))?, Sign::Plus)?.poly;
            let e4 = sym_poly(params, &Partition::try_from(mu.add(&two_delta).add(&ones))?, Sign::Minus)?.poly;
            vec![
                ShiftRelation::new("D1 D2 H+(a+1,b+1) = D2 H-_{mu+2delta}(a,b+1)", e1, e2.clone()),
                ShiftRelation::new("D2 H-_{mu+2delta}(a,b+1) = D1 H+_{mu+1}(a+1,b)", e2, e3.clone()),
                ShiftRelation::new("D1 H+_{mu+1}(a+1,b) = H-_{mu+2delta+1}(a,b)", e3, e4),
            ]
        }
    };
    Ok(ShiftReport {
        mu: mu_plus.clone(),
        relations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dunkl::cherednik_d;
    use crate::exactpoly::rat;

    fn pa() -> Params {
        Params::a_type(rat(3, 7), rat(1, 2)).unwrap()
    }

    fn pb() -> Params {
        Params::b_type(rat(3, 7), rat(2, 5), rat(1, 2)).unwrap()
    }

    fn c(v: &[u32]) -> Composition {
        Composition::new(v.to_vec())
    }

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn top_coefficients() {
        let a = pa().a().clone();
        assert_eq!(top_coeff_partition(&pa(), &part(&[0, 0])), int(1));
        assert_eq!(top_coeff_partition(&pa(), &part(&[1, 0])), &a + int(1));
        assert_eq!(top_coeff_partition(&pb(), &part(&[1, 0])), int(2) * &a + int(1));
        assert_eq!(top_coeff_word(&pa(), &c(&[1, 0])).unwrap(), int(1));
        assert_eq!(
            top_coeff_word(&pa(), &c(&[0, 1])).unwrap(),
            (int(2) * &a + int(1)) / (&a + int(1))
        );
        assert_eq!(top_coeff_word(&pb(), &c(&[0, 1])).unwrap(), int(2) * &a + int(1));
    }

    #[test]
    fn small_hermite() {
        let p = pa();
        let a = p.a().clone();
        let h10 = nonsym_poly(&p, &c(&[1, 0])).unwrap();
        let expected = Poly::from_terms(
            2,
            vec![(vec![1, 0], int(1)), (vec![0, 1], &a / (&a + int(1)))],
        )
        .unwrap();
        assert_eq!(h10.poly, expected);
        assert_eq!(h10.eigenvalues, vec![&a + int(1), int(0)]);
        let h01 = nonsym_poly(&p, &c(&[0, 1])).unwrap();
        assert_eq!(h01.poly, Poly::var(2, 1));
        assert_eq!(h01.eigenvalues, vec![int(0), &a + int(1)]);
        assert_eq!(nonsym_poly(&p, &c(&[0, 0])).unwrap().poly, Poly::one(2));
    }

    #[test]
    fn eigen_equations_small() {
        for params in [pa(), pb()] {
            let cons = Constructor::new(&params);
            for mu in Composition::all_up_to_degree(3, 3) {
                let h = cons.nonsym(&mu).unwrap();
                assert!(h.is_monic(), "{mu} not monic: {}", h.poly);
                assert!(h.support_is_triangular(), "{mu}");
                for j in 0..3 {
                    assert_eq!(
                        cherednik_d(&params, j, &h.poly).unwrap(),
                        h.poly.scale(&h.eigenvalues[j]),
                        "{params} {mu} d_{j}"
                    );
                }
            }
        }
    }

    #[test]
    fn k_expansion_examples() {
        let p = pa();
        let a = p.a().clone();
        assert_eq!(
            k_action_expand(&p, &c(&[1, 1]), 0).unwrap(),
            (int(1), int(0))
        );
        assert_eq!(
            k_action_expand(&p, &c(&[0, 1]), 0).unwrap(),
            (-&a / (&a + int(1)), int(1))
        );
        let cs = &a / (&a + int(1));
        assert_eq!(
            k_action_expand(&p, &c(&[1, 0]), 0).unwrap(),
            (cs.clone(), int(1) - &cs * &cs)
        );
    }

    #[test]
    fn sym_examples() {
        let p = pa();
        let a = p.a().clone();
        let mu = part(&[1, 0]);
        assert_eq!(sym_coeff(&p, &mu, &c(&[1, 0]), Sign::Plus).unwrap(), int(1));
        assert_eq!(
            sym_coeff(&p, &mu, &c(&[0, 1]), Sign::Plus).unwrap(),
            int(1) / (&a + int(1))
        );
        assert_eq!(
            sym_coeff(&p, &mu, &c(&[0, 1]), Sign::Minus).unwrap(),
            -(int(2) * &a + int(1)) / (&a + int(1))
        );
        let x1 = Poly::var(2, 0);
        let x2 = Poly::var(2, 1);
        assert_eq!(sym_poly(&p, &mu, Sign::Plus).unwrap().poly, &x1 + &x2);
        assert_eq!(sym_poly(&p, &mu, Sign::Minus).unwrap().poly, &x1 - &x2);
        assert_eq!(sym_poly(&p, &part(&[0, 0]), Sign::Plus).unwrap().poly, Poly::one(2));
        assert!(matches!(
            sym_poly(&p, &part(&[1, 1]), Sign::Minus),
            Err(Error::InvalidSector { .. })
        ));
        assert!(matches!(
            sym_poly(&pb(), &part(&[2, 1]), Sign::Plus),
            Err(Error::InvalidSector { .. })
        ));
    }

    #[test]
    fn shift_small() {
        let r = parameter_shift_check(&pa(), &part(&[0, 0])).unwrap();
        assert!(r.all_hold());
        assert_eq!(r.relations[0].rhs, &Poly::var(2, 0) - &Poly::var(2, 1));
        assert!(parameter_shift_check(&pa(), &part(&[1, 1])).unwrap().all_hold());
        assert!(parameter_shift_check(&pb(), &part(&[0, 0])).unwrap().all_hold());
    }
}
