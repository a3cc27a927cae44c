//! Sparse multivariate polynomials over exact rationals, with the exchange,
//! reflection and divided-difference primitives used by the operator tower.
//!
//! Variable indices are 0-based throughout the API.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weyl::Composition;

pub type Rational = BigRational;

/// `n / d` as an exact rational.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or `"p"`; floats are rejected.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("expected a rational like \"3/7\", got {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n = BigInt::from_str(num).map_err(|_| bad())?;
    let d = BigInt::from_str(den).map_err(|_| bad())?;
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(n, d))
}

/// Sparse polynomial: exponent vector to nonzero coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Poly {
    n: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl Poly {
    pub fn zero(n: usize) -> Poly {
        Poly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Poly {
        Poly::constant(n, Rational::one())
    }

    pub fn constant(n: usize, c: Rational) -> Poly {
        let mut p = Poly::zero(n);
        p.add_term(vec![0; n], c);
        p
    }

    pub fn monomial(mu: &Composition) -> Poly {
        let mut p = Poly::zero(mu.n());
        p.add_term(mu.entries().to_vec(), Rational::one());
        p
    }

    /// The single variable `x_j`.
    pub fn var(n: usize, j: usize) -> Poly {
        let mut e = vec![0; n];
        e[j] = 1;
        let mut p = Poly::zero(n);
        p.add_term(e, Rational::one());
        p
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs, merging duplicates.
    pub fn from_terms<I>(n: usize, terms: I) -> Result<Poly>
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut p = Poly::zero(n);
        for (e, c) in terms {
            if e.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: e.len(),
                });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exp: &[u32]) -> Rational {
        self.terms.get(exp).cloned().unwrap_or_else(Rational::zero)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Adds `c · x^e` in place, pruning a cancelled term.
    pub fn add_term(&mut self, e: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &Poly, c: &Rational) {
        debug_assert_eq!(self.n, other.n);
        if c.is_zero() {
            return;
        }
        for (e, v) in &other.terms {
            self.add_term(e.clone(), v * c);
        }
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.n);
        }
        Poly {
            n: self.n,
            terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect(),
        }
    }

    fn check_index(&self, j: usize) -> Result<()> {
        if j >= self.n {
            Err(Error::IndexOutOfRange {
                index: j,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    /// `K_{jk}`: swaps the variables `x_j` and `x_k`.
    pub fn exchange(&self, j: usize, k: usize) -> Result<Poly> {
        self.check_index(j)?;
        self.check_index(k)?;
        Ok(self.exchange_unchecked(j, k))
    }

    pub(crate) fn exchange_unchecked(&self, j: usize, k: usize) -> Poly {
        if j == k {
            return self.clone();
        }
        Poly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, v)| {
                    let mut e = e.clone();
                    e.swap(j, k);
                    (e, v.clone())
                })
                .collect(),
        }
    }

    /// `t_j`: sends `x_j` to `−x_j`.
    pub fn reflect(&self, j: usize) -> Result<Poly> {
        self.check_index(j)?;
        Ok(self.reflect_unchecked(j))
    }

    pub(crate) fn reflect_unchecked(&self, j: usize) -> Poly {
        Poly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, v)| {
                    let v = if e[j] % 2 == 1 { -v } else { v.clone() };
                    (e.clone(), v)
                })
                .collect(),
        }
    }

    /// `∂/∂x_j`.
    pub fn partial(&self, j: usize) -> Result<Poly> {
        self.check_index(j)?;
        Ok(self.partial_unchecked(j))
    }

    pub(crate) fn partial_unchecked(&self, j: usize) -> Poly {
        let mut out = Poly::zero(self.n);
        for (e, v) in &self.terms {
            if e[j] > 0 {
                let mut f = e.clone();
                f[j] -= 1;
                out.add_term(f, v * Rational::from_integer(e[j].into()));
            }
        }
        out
    }

    /// `((1 − K_{jk}) p) / (x_j − x_k)`, computed monomial by monomial.
    pub fn diffquot_minus(&self, j: usize, k: usize) -> Result<Poly> {
        self.check_index(j)?;
        self.check_index(k)?;
        if j == k {
            return Err(Error::IndexOutOfRange { index: k, n: self.n });
        }
        Ok(self.diffquot_minus_unchecked(j, k))
    }

    pub(crate) fn diffquot_minus_unchecked(&self, j: usize, k: usize) -> Poly {
        // (x_j^p x_k^q − x_j^q x_k^p)/(x_j − x_k)
        //   = sgn · x_j^m x_k^m Σ_{i<d} x_j^i x_k^{d−1−i},  m = min, d = |p − q|
        let mut out = Poly::zero(self.n);
        for (e, v) in &self.terms {
            let (p, q) = (e[j], e[k]);
            if p == q {
                continue;
            }
            let (m, d, c) = if p > q {
                (q, p - q, v.clone())
            } else {
                (p, q - p, -v)
            };
            for i in 0..d {
                let mut f = e.clone();
                f[j] = m + i;
                f[k] = m + d - 1 - i;
                out.add_term(f, c.clone());
            }
        }
        out
    }

    /// `((1 − t_j t_k K_{jk}) p) / (x_j + x_k)`.
    pub fn diffquot_plus(&self, j: usize, k: usize) -> Result<Poly> {
        self.check_index(j)?;
        self.check_index(k)?;
        if j == k {
            return Err(Error::IndexOutOfRange { index: k, n: self.n });
        }
        Ok(self.diffquot_plus_unchecked(j, k))
    }

    pub(crate) fn diffquot_plus_unchecked(&self, j: usize, k: usize) -> Poly {
        // with d = |p − q| and y = −x_k:
        //   (x_j^d − y^d)/(x_j − y) = Σ_{i<d} x_j^i y^{d−1−i}
        // p < q picks up the extra factor −(−1)^d.
        let mut out = Poly::zero(self.n);
        for (e, v) in &self.terms {
            let (p, q) = (e[j], e[k]);
            if p == q {
                continue;
            }
            let (m, d, c) = if p > q {
                (q, p - q, v.clone())
            } else {
                let d = q - p;
                let c = if d % 2 == 0 { -v } else { v.clone() };
                (p, d, c)
            };
            for i in 0..d {
                let mut f = e.clone();
                f[j] = m + i;
                f[k] = m + d - 1 - i;
                let c = if (d - 1 - i) % 2 == 1 { -&c } else { c.clone() };
                out.add_term(f, c);
            }
        }
        out
    }

    /// `((1 − t_j) p) / x_j`: twice the odd part in `x_j`, lowered by one.
    pub fn diffquot_reflect(&self, j: usize) -> Result<Poly> {
        self.check_index(j)?;
        Ok(self.diffquot_reflect_unchecked(j))
    }

    pub(crate) fn diffquot_reflect_unchecked(&self, j: usize) -> Poly {
        let two = Rational::from_integer(2.into());
        let mut out = Poly::zero(self.n);
        for (e, v) in &self.terms {
            if e[j] % 2 == 1 {
                let mut f = e.clone();
                f[j] -= 1;
                out.add_term(f, v * &two);
            }
        }
        out
    }

    /// Multiplies by the monomial `x^e`.
    pub fn shift(&self, e: &[u32]) -> Poly {
        Poly {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(f, v)| (f.iter().zip(e).map(|(a, b)| a + b).collect(), v.clone()))
                .collect(),
        }
    }

    pub fn mul_var(&self, j: usize) -> Poly {
        let mut e = vec![0; self.n];
        e[j] = 1;
        self.shift(&e)
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::one(self.n);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, x: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (e, v) in &self.terms {
            let mut t = v.clone();
            for (xi, &k) in x.iter().zip(e) {
                t *= num_traits::pow::pow(xi.clone(), k as usize);
            }
            acc += t;
        }
        acc
    }

    /// Largest numerator or denominator size in bits.
    pub fn max_coeff_bits(&self) -> u64 {
        self.terms
            .values()
            .map(|v| v.numer().bits().max(v.denom().bits()))
            .max()
            .unwrap_or(0)
    }

    pub fn to_json_value(&self) -> PolyJson {
        PolyJson {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, v)| TermJson {
                    exp: e.clone(),
                    num: v.numer().to_string(),
                    den: v.denom().to_string(),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.to_json_value()).expect("polynomial serializes")
    }

    pub fn from_json_value(v: &PolyJson) -> Result<Poly> {
        let terms = v
            .terms
            .iter()
            .map(|t| {
                let num = BigInt::from_str(&t.num)
                    .map_err(|e| Error::Parse(format!("numerator {:?}: {e}", t.num)))?;
                let den = BigInt::from_str(&t.den)
                    .map_err(|e| Error::Parse(format!("denominator {:?}: {e}", t.den)))?;
                if den.is_zero() {
                    return Err(Error::Parse("zero denominator".into()));
                }
                Ok((t.exp.clone(), Rational::new(num, den)))
            })
            .collect::<Result<Vec<_>>>()?;
        Poly::from_terms(v.n, terms)
    }

    pub fn from_json(s: &str) -> Result<Poly> {
        let v: PolyJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Poly::from_json_value(&v)
    }
}

/// Wire format of a polynomial.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    #[serde(rename = "N")]
    pub n: usize,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub exp: Vec<u32>,
    pub num: String,
    pub den: String,
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_scaled(rhs, &Rational::one());
        out
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Rational::one());
        out
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        debug_assert_eq!(self.n, rhs.n);
        let mut out = Poly::zero(self.n);
        for (e, v) in &self.terms {
            for (f, w) in &rhs.terms {
                let g: Vec<u32> = e.iter().zip(f).map(|(a, b)| a + b).collect();
                out.add_term(g, v * w);
            }
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Rational::one())
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // highest degree first, then reverse lexicographic
        let mut entries: Vec<_> = self.terms.iter().collect();
        entries.sort_by(|(a, _), (b, _)| {
            let da: u32 = a.iter().sum();
            let db: u32 = b.iter().sum();
            db.cmp(&da).then_with(|| b.cmp(a))
        });
        for (i, (e, v)) in entries.into_iter().enumerate() {
            let neg = v.is_negative();
            let abs = v.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &k)| k > 0)
                .map(|(j, &k)| {
                    if k == 1 {
                        format!("x{}", j + 1)
                    } else {
                        format!("x{}^{}", j + 1, k)
                    }
                })
                .collect();
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{abs}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(e: &[u32]) -> Poly {
        Poly::monomial(&Composition::new(e.to_vec()))
    }

    #[test]
    fn monomials() {
        assert_eq!(mono(&[0, 0]), Poly::one(2));
        assert_eq!(mono(&[1, 0]).to_string(), "x1");
        assert_eq!(mono(&[2, 1]).to_string(), "x1^2*x2");
    }

    #[test]
    fn exchange_and_reflect() {
        assert_eq!(mono(&[1, 0]).exchange(0, 1).unwrap(), mono(&[0, 1]));
        assert_eq!(mono(&[1, 1]).exchange(0, 1).unwrap(), mono(&[1, 1]));
        assert_eq!(mono(&[2, 1]).exchange(0, 1).unwrap(), mono(&[1, 2]));
        assert_eq!(mono(&[1, 0]).reflect(0).unwrap(), -&mono(&[1, 0]));
        assert_eq!(mono(&[2, 0]).reflect(0).unwrap(), mono(&[2, 0]));
        assert_eq!(mono(&[1, 3]).reflect(1).unwrap(), -&mono(&[1, 3]));
        assert!(matches!(
            mono(&[1, 0]).exchange(0, 2),
            Err(Error::IndexOutOfRange { .. })
        ));
        assert!(mono(&[1, 0]).reflect(2).is_err());
    }

    #[test]
    fn divided_differences() {
        assert_eq!(mono(&[1, 0]).diffquot_minus(0, 1).unwrap(), Poly::one(2));
        assert_eq!(
            mono(&[2, 0]).diffquot_minus(0, 1).unwrap(),
            &mono(&[1, 0]) + &mono(&[0, 1])
        );
        assert!(mono(&[1, 1]).diffquot_minus(0, 1).unwrap().is_zero());

        assert_eq!(mono(&[1, 0]).diffquot_plus(0, 1).unwrap(), Poly::one(2));
        assert_eq!(
            mono(&[2, 0]).diffquot_plus(0, 1).unwrap(),
            &mono(&[1, 0]) - &mono(&[0, 1])
        );
        assert!(mono(&[1, 1]).diffquot_plus(0, 1).unwrap().is_zero());

        assert_eq!(mono(&[1, 0]).diffquot_reflect(0).unwrap(), Poly::constant(2, int(2)));
        assert!(mono(&[2, 0]).diffquot_reflect(0).unwrap().is_zero());
        assert_eq!(
            mono(&[3, 1]).diffquot_reflect(0).unwrap(),
            mono(&[2, 1]).scale(&int(2))
        );
    }

    #[test]
    fn divided_difference_identities() {
        let p = Poly::from_terms(
            3,
            vec![
                (vec![3, 0, 1], rat(2, 3)),
                (vec![0, 4, 0], rat(-1, 5)),
                (vec![1, 2, 2], int(7)),
                (vec![0, 0, 0], int(1)),
                (vec![0, 1, 0], rat(1, 2)),
            ],
        )
        .unwrap();
        for j in 0..3 {
            for k in 0..3 {
                if j == k {
                    continue;
                }
                let xmx = &Poly::var(3, j) - &Poly::var(3, k);
                let q = p.diffquot_minus(j, k).unwrap();
                assert_eq!(&(&q * &xmx) + &p.exchange(j, k).unwrap(), p);

                let xpx = &Poly::var(3, j) + &Poly::var(3, k);
                let q = p.diffquot_plus(j, k).unwrap();
                let tk = p.exchange(j, k).unwrap().reflect(j).unwrap().reflect(k).unwrap();
                assert_eq!(&(&q * &xpx) + &tk, p);
            }
            let q = p.diffquot_reflect(j).unwrap();
            assert_eq!(&q.mul_var(j) + &p.reflect(j).unwrap(), p);
        }
    }

    #[test]
    fn calculus_and_ring() {
        assert_eq!(mono(&[2, 0]).partial(0).unwrap(), mono(&[1, 0]).scale(&int(2)));
        assert!(mono(&[1, 0]).partial(1).unwrap().is_zero());
        let s = &mono(&[1, 0]) + &mono(&[0, 1]);
        let d = &mono(&[1, 0]) - &mono(&[0, 1]);
        assert_eq!(&s * &d, &mono(&[2, 0]) - &mono(&[0, 2]));
    }

    #[test]
    fn rationals_parse() {
        assert_eq!(parse_rational("3/7").unwrap(), rat(3, 7));
        assert_eq!(parse_rational("-2").unwrap(), int(-2));
        assert_eq!(parse_rational("6/4").unwrap(), rat(3, 2));
        assert!(parse_rational("0.5").is_err());
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn json_round_trip() {
        let p = Poly::from_terms(2, vec![(vec![1, 0], int(1)), (vec![0, 1], rat(3, 10))]).unwrap();
        let s = p.to_json();
        assert_eq!(
            s,
            r#"{"N":2,"terms":[{"exp":[0,1],"num":"3","den":"10"},{"exp":[1,0],"num":"1","den":"1"}]}"#
        );
        assert_eq!(Poly::from_json(&s).unwrap(), p);
        assert_eq!(p.to_string(), "x1 + 3/10*x2");
    }
}
