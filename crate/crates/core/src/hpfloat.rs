//! Fixed-precision real arithmetic on top of `astro-float`, plus `Γ` at
//! rational arguments.

use std::cmp::Ordering;

use astro_float::{BigFloat, Consts, Radix, RoundingMode};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::exactpoly::{int, Rational};

pub(crate) const RM: RoundingMode = RoundingMode::ToEven;

/// Default working precision in decimal digits.
pub const DEFAULT_DIGITS: u32 = 40;

/// Working precision in bits for a decimal digit count, with guard bits.
pub fn bits_for_digits(digits: u32) -> usize {
    (digits as f64 * std::f64::consts::LOG2_10).ceil() as usize + 32
}

/// Arithmetic context: precision plus the constants cache.
pub struct Ctx {
    p: usize,
    digits: u32,
    cc: Consts,
}

impl Ctx {
    pub fn new(digits: u32) -> Ctx {
        Ctx {
            p: bits_for_digits(digits),
            digits,
            cc: Consts::new().expect("constants cache"),
        }
    }

    pub fn bits(&self) -> usize {
        self.p
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn zero(&self) -> BigFloat {
        BigFloat::from_i64(0, self.p)
    }

    pub fn int(&self, i: i64) -> BigFloat {
        BigFloat::from_i64(i, self.p)
    }

    pub fn bigint(&mut self, i: &BigInt) -> BigFloat {
        if let Some(v) = i.to_i64() {
            return self.int(v);
        }
        BigFloat::parse(&i.to_string(), Radix::Dec, self.p, RM, &mut self.cc)
    }

    pub fn rat(&mut self, r: &Rational) -> BigFloat {
        let n = self.bigint(r.numer());
        if r.denom().is_one() {
            return n;
        }
        let d = self.bigint(r.denom());
        self.div(&n, &d)
    }

    pub fn add(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.add(b, self.p, RM)
    }

    pub fn sub(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.sub(b, self.p, RM)
    }

    pub fn mul(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.mul(b, self.p, RM)
    }

    pub fn div(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        a.div(b, self.p, RM)
    }

    pub fn sqrt(&self, a: &BigFloat) -> BigFloat {
        a.sqrt(self.p, RM)
    }

    pub fn powi(&self, a: &BigFloat, n: usize) -> BigFloat {
        a.powi(n, self.p, RM)
    }

    pub fn ln(&mut self, a: &BigFloat) -> BigFloat {
        a.ln(self.p, RM, &mut self.cc)
    }

    pub fn exp(&mut self, a: &BigFloat) -> BigFloat {
        a.exp(self.p, RM, &mut self.cc)
    }

    pub fn pi(&mut self) -> BigFloat {
        self.cc.pi(self.p, RM)
    }

    /// `x^e` for `x > 0` and a rational exponent.
    pub fn pow_rat(&mut self, x: &BigFloat, e: &Rational) -> BigFloat {
        if e.is_integer() {
            if let Some(k) = e.to_integer().to_i64() {
                let m = self.powi(x, k.unsigned_abs() as usize);
                return if k < 0 { self.div(&self.int(1), &m) } else { m };
            }
        }
        let l = self.ln(x);
        let ef = self.rat(e);
        let t = self.mul(&ef, &l);
        self.exp(&t)
    }

    pub fn abs(&self, a: &BigFloat) -> BigFloat {
        a.abs()
    }

    pub fn cmp(a: &BigFloat, b: &BigFloat) -> Ordering {
        a.partial_cmp(b).unwrap_or(Ordering::Equal)
    }

    /// `|a − b| / |b|` (or `|a|` when `b` vanishes).
    pub fn rel_err(&self, a: &BigFloat, b: &BigFloat) -> BigFloat {
        let d = self.sub(a, b).abs();
        if b.is_zero() {
            d
        } else {
            self.div(&d, &b.abs())
        }
    }

    /// `10^{-k}`.
    pub fn tol(&mut self, k: u32) -> BigFloat {
        let ten = self.int(10);
        let t = self.powi(&ten, k as usize);
        self.div(&self.int(1), &t)
    }

    /// Scientific notation with `digits` significant digits.
    pub fn format(&mut self, a: &BigFloat, digits: usize) -> String {
        if a.is_zero() {
            return "0".to_string();
        }
        let s = a
            .format(Radix::Dec, RM, &mut self.cc)
            .unwrap_or_else(|_| a.to_string());
        shorten(&s, digits)
    }

    pub fn to_f64(&mut self, a: &BigFloat) -> f64 {
        self.format(a, 20).parse().unwrap_or(f64::NAN)
    }

    /// `Γ(x)` for a rational `x > 0`.
    pub fn gamma(&mut self, x: &Rational) -> BigFloat {
        assert!(x.is_positive(), "gamma requires a positive argument");
        let l = self.ln_gamma(x);
        self.exp(&l)
    }

    /// `ln Γ(x)` for rational `x > 0`: shift the argument up, then Stirling.
    pub fn ln_gamma(&mut self, x: &Rational) -> BigFloat {
        // the asymptotic series reaches 2^{-p} once 2π z > p ln 2
        let zmin = (self.p as f64 * 0.15).ceil() as i64 + 10;
        let mut shift = 0i64;
        let mut z = x.clone();
        while z < int(zmin) {
            z += Rational::one();
            shift += 1;
        }
        // Γ(x) = Γ(z) / (x (x+1) ⋯ (z−1))
        let mut prod = Rational::one();
        for k in 0..shift {
            prod *= x + int(k);
        }
        let zf = self.rat(&z);
        let lz = self.ln(&zf);
        let half = self.rat(&Rational::new(1.into(), 2.into()));
        let mut s = self.mul(&self.sub(&zf, &half), &lz);
        s = self.sub(&s, &zf);
        let pi = self.pi();
        let two_pi = self.mul(&self.int(2), &pi);
        let l2p = self.ln(&two_pi);
        s = self.add(&s, &self.mul(&half, &l2p));
        let z2 = self.mul(&zf, &zf);
        let eps = self.pow_rat(&self.int(2), &int(-(self.p as i64) - 8));
        let mut zpow = zf.clone();
        for (k, b) in bernoulli_even(80).into_iter().enumerate().skip(1) {
            let k = 2 * k as i64;
            let c = self.rat(&(b / int(k * (k - 1))));
            let term = self.div(&c, &zpow);
            s = self.add(&s, &term);
            if Ctx::cmp(&term.abs(), &eps) == Ordering::Less {
                break;
            }
            zpow = self.mul(&zpow, &z2);
        }
        if !prod.is_one() {
            let pf = self.rat(&prod);
            let lp = self.ln(&pf);
            s = self.sub(&s, &lp);
        }
        s
    }
}

fn shorten(s: &str, digits: usize) -> String {
    let (mant, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], &s[i..]),
        None => (s, ""),
    };
    let keep = digits + 2 + usize::from(mant.starts_with('-'));
    let mant = if mant.len() > keep { &mant[..keep] } else { mant };
    format!("{mant}{exp}")
}

/// `B_0, B_2, B_4, …, B_{2(m−1)}`.
pub fn bernoulli_even(m: usize) -> Vec<Rational> {
    thread_local! {
        static CACHE: std::cell::RefCell<Vec<Rational>> = const { std::cell::RefCell::new(Vec::new()) };
    }
    CACHE.with(|c| {
        let mut all = c.borrow_mut();
        let need = 2 * m;
        if all.len() < need {
            // B_n = −1/(n+1) Σ_{k<n} C(n+1, k) B_k
            all.clear();
            all.push(Rational::one());
            for n in 1..need {
                let mut s = Rational::zero();
                let mut binom = BigInt::one();
                for (k, bk) in all.iter().enumerate() {
                    s += Rational::from_integer(binom.clone()) * bk;
                    binom = binom * BigInt::from(n + 1 - k) / BigInt::from(k + 1);
                }
                all.push(-s / int(n as i64 + 1));
            }
        }
        all.iter().step_by(2).take(m).cloned().collect()
    })
}
