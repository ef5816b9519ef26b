//! Exact arithmetic in `Q(q,t)`.
//!
//! A [`RatQT`] is a reduced fraction of polynomials in `Z[q,t]` whose
//! denominator has a positive leading coefficient under graded-lex order with
//! `q > t`. With that normalization two values are equal iff their
//! representations are equal, so `==` and `Hash` are structural.

mod poly;
mod upoly;

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub use poly::PolyQT;
pub use upoly::UPoly;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatQT {
    num: PolyQT,
    den: PolyQT,
}

/// Image of a variable under a Laurent-monomial substitution
/// `x -> c * q^a * t^b` with possibly negative exponents.
#[derive(Clone, Debug)]
struct LaurentMonomial {
    coeff: BigInt,
    eq: i64,
    et: i64,
}

impl RatQT {
    pub fn zero() -> Self {
        RatQT {
            num: PolyQT::zero(),
            den: PolyQT::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(c: i64) -> Self {
        Self::from_poly(PolyQT::constant(BigInt::from(c)))
    }

    pub fn from_bigint(c: BigInt) -> Self {
        Self::from_poly(PolyQT::constant(c))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_int(n) / Self::from_int(d)
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Self::new(
            PolyQT::constant(r.numer().clone()),
            PolyQT::constant(r.denom().clone()),
        )
        .expect("nonzero denominator")
    }

    pub fn from_poly(p: PolyQT) -> Self {
        RatQT {
            num: p,
            den: PolyQT::one(),
        }
    }

    pub fn q() -> Self {
        Self::from_poly(PolyQT::q())
    }

    pub fn t() -> Self {
        Self::from_poly(PolyQT::t())
    }

    /// `q^k` for any integer `k`.
    pub fn q_pow(k: i64) -> Self {
        Self::monomial(1, k, 0)
    }

    pub fn t_pow(k: i64) -> Self {
        Self::monomial(1, 0, k)
    }

    /// `c q^a t^b` with possibly negative exponents.
    pub fn monomial(c: i64, a: i64, b: i64) -> Self {
        let (na, da) = if a >= 0 { (a as usize, 0) } else { (0, (-a) as usize) };
        let (nb, db) = if b >= 0 { (b as usize, 0) } else { (0, (-b) as usize) };
        RatQT::new(
            PolyQT::monomial(BigInt::from(c), na, nb),
            PolyQT::monomial(BigInt::one(), da, db),
        )
        .expect("monomial denominator")
    }

    /// Normalizing constructor.
    pub fn new(num: PolyQT, den: PolyQT) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: PolyQT, den: PolyQT) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (
                num.div_exact(&g).expect("gcd divides numerator"),
                den.div_exact(&g).expect("gcd divides denominator"),
            )
        };
        if den.lc_sign_negative() {
            num = num.neg();
            den = den.neg();
        }
        RatQT { num, den }
    }

    /// Builds from parts already known to be coprime.
    fn from_coprime(mut num: PolyQT, mut den: PolyQT) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.lc_sign_negative() {
            num = num.neg();
            den = den.neg();
        }
        RatQT { num, den }
    }

    pub fn numer(&self) -> &PolyQT {
        &self.num
    }

    pub fn denom(&self) -> &PolyQT {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.as_constant().map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn is_t_free(&self) -> bool {
        self.num.is_t_free() && self.den.is_t_free()
    }

    /// The value as a rational number when it is constant.
    pub fn as_rational(&self) -> Option<BigRational> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(BigRational::new(n, d))
    }

    pub fn checked_div(&self, other: &RatQT) -> Result<RatQT> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.mul_ref(&other.inv_unchecked()))
    }

    pub fn inv(&self) -> Result<RatQT> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.inv_unchecked())
    }

    fn inv_unchecked(&self) -> RatQT {
        RatQT::from_coprime(self.den.clone(), self.num.clone())
    }

    pub fn add_ref(&self, other: &RatQT) -> RatQT {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            let num = self.num.add(&other.num);
            if self.den.is_one() {
                return RatQT::from_poly(num);
            }
            return Self::normalized(num, self.den.clone());
        }
        if self.den.is_one() {
            let num = self.num.mul(&other.den).add(&other.num);
            return Self::from_coprime(num, other.den.clone());
        }
        if other.den.is_one() {
            let num = other.num.mul(&self.den).add(&self.num);
            return Self::from_coprime(num, self.den.clone());
        }
        // Henrici: with g = gcd(b, d), gcd(a d/g + c b/g, b d/g) = gcd(that, g).
        let g = self.den.gcd(&other.den);
        if g.is_one() {
            let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
            let den = self.den.mul(&other.den);
            return Self::from_coprime(num, den);
        }
        let b_g = self.den.div_exact(&g).expect("gcd divides");
        let d_g = other.den.div_exact(&g).expect("gcd divides");
        let num = self.num.mul(&d_g).add(&other.num.mul(&b_g));
        if num.is_zero() {
            return Self::zero();
        }
        let den = self.den.mul(&d_g);
        let g2 = num.gcd(&g);
        if g2.is_one() {
            Self::from_coprime(num, den)
        } else {
            Self::from_coprime(
                num.div_exact(&g2).expect("gcd divides"),
                den.div_exact(&g2).expect("gcd divides"),
            )
        }
    }

    pub fn neg_ref(&self) -> RatQT {
        RatQT {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub_ref(&self, other: &RatQT) -> RatQT {
        self.add_ref(&other.neg_ref())
    }

    pub fn mul_ref(&self, other: &RatQT) -> RatQT {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if self.is_one() {
            return other.clone();
        }
        if other.is_one() {
            return self.clone();
        }
        // cross-cancel: (a/b)(c/d) with g1 = gcd(a,d), g2 = gcd(c,b)
        let g1 = self.num.gcd(&other.den);
        let g2 = other.num.gcd(&self.den);
        let div = |p: &PolyQT, g: &PolyQT| {
            if g.is_one() {
                p.clone()
            } else {
                p.div_exact(g).expect("gcd divides")
            }
        };
        let num = div(&self.num, &g1).mul(&div(&other.num, &g2));
        let den = div(&self.den, &g2).mul(&div(&other.den, &g1));
        Self::from_coprime(num, den)
    }

    pub fn scale_int(&self, c: i64) -> RatQT {
        self.mul_ref(&RatQT::from_int(c))
    }

    pub fn pow(&self, k: i64) -> Result<RatQT> {
        if k < 0 {
            return self.inv()?.pow(-k);
        }
        Ok(RatQT::from_coprime(self.num.pow(k as u32), self.den.pow(k as u32)))
    }

    /// `a / b^k` for a polynomial `b`.
    pub fn divide_exact_by_power(&self, b: &PolyQT, k: u32) -> Result<RatQT> {
        if b.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(self.mul_ref(&RatQT::from_coprime(PolyQT::one(), b.pow(k))))
    }

    /// The numerator when the value is a polynomial.
    pub fn to_poly(&self) -> Option<PolyQT> {
        if self.is_polynomial() {
            Some(self.num.clone())
        } else {
            None
        }
    }

    /// Coefficient list in `q` when the value is a `t`-free polynomial with
    /// non-negative integer coefficients.
    pub fn nonneg_q_coeffs(&self) -> Option<Vec<BigInt>> {
        let p = self.to_poly()?;
        if !p.is_t_free() {
            return None;
        }
        let coeffs: Vec<BigInt> = p.rows().iter().map(|r| r.lc()).collect();
        if coeffs.iter().any(|c| c.is_negative()) {
            return None;
        }
        Some(coeffs)
    }

    pub fn is_polynomial_with_nonneg_int_coeffs(&self) -> bool {
        match self.to_poly() {
            Some(p) => p.terms().iter().all(|(c, _, _)| !c.is_negative()),
            None => false,
        }
    }

    /// Exact value at `q = q0` for a `t`-free value.
    pub fn eval_q(&self, q0: &BigRational) -> Result<BigRational> {
        if !self.is_t_free() {
            return Err(Error::Bivariate);
        }
        let d = eval_univariate(&self.den, q0);
        if d.is_zero() {
            return Err(Error::Pole(q0.to_string()));
        }
        Ok(eval_univariate(&self.num, q0) / d)
    }

    /// Substitutes `q -> q_img`, `t -> t_img`.
    pub fn subst(&self, q_img: &RatQT, t_img: &RatQT) -> Result<RatQT> {
        if let (Some(a), Some(b)) = (q_img.as_laurent_monomial(), t_img.as_laurent_monomial()) {
            return self.subst_monomial(&a, &b);
        }
        let n = subst_poly(&self.num, q_img, t_img);
        let d = subst_poly(&self.den, q_img, t_img);
        n.checked_div(&d)
    }

    fn subst_monomial(&self, a: &LaurentMonomial, b: &LaurentMonomial) -> Result<RatQT> {
        let n = subst_poly_monomial(&self.num, a, b);
        let d = subst_poly_monomial(&self.den, a, b);
        n.checked_div(&d)
    }

    fn as_laurent_monomial(&self) -> Option<LaurentMonomial> {
        if self.is_zero() {
            return Some(LaurentMonomial {
                coeff: BigInt::zero(),
                eq: 0,
                et: 0,
            });
        }
        if self.num.num_terms() != 1 || self.den.num_terms() != 1 {
            return None;
        }
        let (c, a, b) = self.num.leading_term()?;
        let (dc, da, db) = self.den.leading_term()?;
        if !dc.is_one() {
            return None;
        }
        Some(LaurentMonomial {
            coeff: c,
            eq: a as i64 - da as i64,
            et: b as i64 - db as i64,
        })
    }

    /// `t -> q^2`. Fails when the denominator vanishes, e.g. for `1/(t - q^2)`.
    pub fn subst_t_q2(&self) -> Result<RatQT> {
        self.subst(&RatQT::q(), &RatQT::q_pow(2))
    }

    /// `q -> q^2`.
    pub fn subst_q_q2(&self) -> RatQT {
        self.subst(&RatQT::q_pow(2), &RatQT::t())
            .expect("q -> q^2 is injective on nonzero polynomials")
    }

    /// `q -> q^k`, used for family degrees `q_f = q^{d(f)}`.
    pub fn subst_q_pow(&self, k: i64) -> RatQT {
        if k == 1 {
            return self.clone();
        }
        self.subst(&RatQT::q_pow(k), &RatQT::t())
            .expect("q -> q^k is injective on nonzero polynomials")
    }

    /// JSON form `{"num": [[c,eq,et],...], "den": [...]}`.
    pub fn to_json_value(&self) -> serde_json::Value {
        let terms = |p: &PolyQT| {
            serde_json::Value::Array(
                p.terms()
                    .into_iter()
                    .map(|(c, a, b)| serde_json::json!([bigint_json(&c), a, b]))
                    .collect(),
            )
        };
        serde_json::json!({"num": terms(&self.num), "den": terms(&self.den)})
    }

    pub fn from_json_value(v: &serde_json::Value) -> Result<RatQT> {
        let parse = |key: &str| -> Result<PolyQT> {
            let arr = v
                .get(key)
                .and_then(|x| x.as_array())
                .ok_or_else(|| Error::Parse(format!("missing {key}")))?;
            let mut terms = Vec::new();
            for t in arr {
                let t = t
                    .as_array()
                    .filter(|t| t.len() == 3)
                    .ok_or_else(|| Error::Parse("term must be [c,eq,et]".into()))?;
                let c = json_bigint(&t[0])?;
                let a = t[1].as_u64().ok_or_else(|| Error::Parse("eq".into()))? as usize;
                let b = t[2].as_u64().ok_or_else(|| Error::Parse("et".into()))? as usize;
                terms.push((c, a, b));
            }
            Ok(PolyQT::from_terms(terms))
        };
        RatQT::new(parse("num")?, parse("den")?)
    }

    /// LaTeX rendering used by table output.
    pub fn to_latex(&self) -> String {
        let p = |x: &PolyQT| {
            x.to_string()
                .replace('*', "")
                .replace("^", "^{")
                .split('^')
                .enumerate()
                .map(|(i, s)| {
                    if i == 0 {
                        s.to_string()
                    } else {
                        // close the exponent brace after the digits
                        let digits: String = s.chars().skip(1).take_while(|c| c.is_ascii_digit()).collect();
                        let rest: String = s.chars().skip(1 + digits.len()).collect();
                        format!("^{{{digits}}}{rest}")
                    }
                })
                .collect::<String>()
        };
        if self.is_polynomial() {
            p(&self.num)
        } else {
            format!("\\frac{{{}}}{{{}}}", p(&self.num), p(&self.den))
        }
    }
}

fn bigint_json(c: &BigInt) -> serde_json::Value {
    match c.to_i64() {
        Some(v) => serde_json::Value::from(v),
        None => serde_json::Value::String(c.to_string()),
    }
}

fn json_bigint(v: &serde_json::Value) -> Result<BigInt> {
    if let Some(i) = v.as_i64() {
        return Ok(BigInt::from(i));
    }
    if let Some(s) = v.as_str() {
        return s
            .parse::<BigInt>()
            .map_err(|e| Error::Parse(format!("coefficient {s}: {e}")));
    }
    Err(Error::Parse(format!("coefficient {v}")))
}

fn eval_univariate(p: &PolyQT, x: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for r in p.rows().iter().rev() {
        acc = acc * x + BigRational::from_integer(r.lc());
    }
    acc
}

fn subst_poly(p: &PolyQT, q_img: &RatQT, t_img: &RatQT) -> RatQT {
    // Horner in q, inner Horner in t.
    let mut acc = RatQT::zero();
    for row in p.rows().iter().rev() {
        let mut inner = RatQT::zero();
        for c in row.coeffs().iter().rev() {
            inner = inner.mul_ref(t_img).add_ref(&RatQT::from_bigint(c.clone()));
        }
        acc = acc.mul_ref(q_img).add_ref(&inner);
    }
    acc
}

fn subst_poly_monomial(p: &PolyQT, a: &LaurentMonomial, b: &LaurentMonomial) -> RatQT {
    let mut terms = Vec::new();
    let mut min_q = 0i64;
    let mut min_t = 0i64;
    for (c, i, j) in p.terms() {
        let (i, j) = (i as i64, j as i64);
        let coeff = c * num_traits::pow(a.coeff.clone(), i as usize) * num_traits::pow(b.coeff.clone(), j as usize);
        if coeff.is_zero() {
            continue;
        }
        let eq = a.eq * i + b.eq * j;
        let et = a.et * i + b.et * j;
        min_q = min_q.min(eq);
        min_t = min_t.min(et);
        terms.push((coeff, eq, et));
    }
    let poly = PolyQT::from_terms(
        terms
            .into_iter()
            .map(|(c, eq, et)| (c, (eq - min_q) as usize, (et - min_t) as usize)),
    );
    RatQT::new(
        poly,
        PolyQT::monomial(BigInt::one(), (-min_q) as usize, (-min_t) as usize),
    )
    .expect("monomial denominator")
}

impl fmt::Display for RatQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &PolyQT| {
            if p.num_terms() > 1 {
                format!("({p})")
            } else {
                p.to_string()
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

impl Default for RatQT {
    fn default() -> Self {
        Self::zero()
    }
}

impl Serialize for RatQT {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json_value().serialize(s)
    }
}

impl<'de> Deserialize<'de> for RatQT {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        RatQT::from_json_value(&v).map_err(D::Error::custom)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $r:ident) => {
        impl $tr<RatQT> for RatQT {
            type Output = RatQT;
            fn $m(self, rhs: RatQT) -> RatQT {
                self.$r(&rhs)
            }
        }
        impl<'a> $tr<&'a RatQT> for RatQT {
            type Output = RatQT;
            fn $m(self, rhs: &'a RatQT) -> RatQT {
                self.$r(rhs)
            }
        }
        impl<'a> $tr<&'a RatQT> for &'a RatQT {
            type Output = RatQT;
            fn $m(self, rhs: &'a RatQT) -> RatQT {
                self.$r(rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl Div<RatQT> for RatQT {
    type Output = RatQT;
    /// Panics on division by zero; use [`RatQT::checked_div`] otherwise.
    fn div(self, rhs: RatQT) -> RatQT {
        self.checked_div(&rhs).expect("division by zero")
    }
}

impl<'a> Div<&'a RatQT> for &'a RatQT {
    type Output = RatQT;
    fn div(self, rhs: &'a RatQT) -> RatQT {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Neg for RatQT {
    type Output = RatQT;
    fn neg(self) -> RatQT {
        self.neg_ref()
    }
}

impl Neg for &RatQT {
    type Output = RatQT;
    fn neg(self) -> RatQT {
        self.neg_ref()
    }
}

impl std::iter::Sum for RatQT {
    fn sum<I: Iterator<Item = RatQT>>(iter: I) -> RatQT {
        iter.fold(RatQT::zero(), |a, b| a + b)
    }
}

impl std::iter::Product for RatQT {
    fn product<I: Iterator<Item = RatQT>>(iter: I) -> RatQT {
        iter.fold(RatQT::one(), |a, b| a * b)
    }
}

impl From<i64> for RatQT {
    fn from(c: i64) -> Self {
        RatQT::from_int(c)
    }
}

/// Parses expressions such as `q`, `3`, `1/2`, `q^2`, `q^-1` used for
/// parameter bindings on the command line.
pub fn parse_simple(s: &str) -> Result<RatQT> {
    let s = s.trim();
    if let Some((a, b)) = s.split_once('/') {
        let a = parse_simple(a)?;
        let b = parse_simple(b)?;
        return a.checked_div(&b);
    }
    let var = |v: &str, rest: &str| -> Result<RatQT> {
        let e: i64 = if rest.is_empty() {
            1
        } else {
            rest.strip_prefix('^')
                .ok_or_else(|| Error::Parse(s.into()))?
                .trim_matches(|c| c == '{' || c == '}' || c == '(' || c == ')')
                .parse()
                .map_err(|_| Error::Parse(s.into()))?
        };
        Ok(if v == "q" { RatQT::q_pow(e) } else { RatQT::t_pow(e) })
    };
    if let Some(rest) = s.strip_prefix('q') {
        return var("q", rest);
    }
    if let Some(rest) = s.strip_prefix('t') {
        return var("t", rest);
    }
    s.parse::<i64>()
        .map(RatQT::from_int)
        .map_err(|_| Error::Parse(format!("cannot parse {s:?}")))
}

/// Parses a rational number such as `3` or `5/2`.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let r = if let Some((a, b)) = s.split_once('/') {
        let a: BigInt = a.trim().parse().map_err(|_| Error::Parse(s.into()))?;
        let b: BigInt = b.trim().parse().map_err(|_| Error::Parse(s.into()))?;
        if b.is_zero() {
            return Err(Error::DivisionByZero);
        }
        BigRational::new(a, b)
    } else {
        BigRational::from_integer(s.parse::<BigInt>().map_err(|_| Error::Parse(s.into()))?)
    };
    Ok(r)
}

/// Convenience: `1 - c q^a t^b`.
pub fn one_minus(c: i64, a: i64, b: i64) -> RatQT {
    RatQT::one() - RatQT::monomial(c, a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> RatQT {
        RatQT::q()
    }
    fn t() -> RatQT {
        RatQT::t()
    }
    fn c(k: i64) -> RatQT {
        RatQT::from_int(k)
    }

    #[test]
    fn inverse_pair() {
        let a = (q() - t()) / (c(1) - q() * t());
        let b = (c(1) - q() * t()) / (q() - t());
        assert!((a * b).is_one());
    }

    #[test]
    fn factor_cancels() {
        let a = c(1) - q() * q();
        let b = c(1) - q();
        assert_eq!(a / b, c(1) + q());
    }

    #[test]
    fn zero_identity_keeps_normal_form() {
        let a = q() / (c(1) + q() + q() * q());
        let b = a.clone() + RatQT::zero();
        assert_eq!(a, b);
        assert_eq!(b.denom().leading_term().unwrap().0, BigInt::from(1));
    }

    #[test]
    fn division_by_zero() {
        assert_eq!(q().checked_div(&RatQT::zero()), Err(Error::DivisionByZero));
        assert_eq!(RatQT::new(PolyQT::one(), PolyQT::zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn substitutions() {
        let a = (q() - t()) / (c(1) - q() * t());
        let expect = q() / (c(1) + q() + q() * q());
        assert_eq!(a.subst_t_q2().unwrap(), expect);
        assert_eq!((q() - c(1)).subst_q_q2(), q() * q() - c(1));
        assert_eq!(c(5).subst_t_q2().unwrap(), c(5));
        let pole = c(1) / (t() - q() * q());
        assert_eq!(pole.subst_t_q2(), Err(Error::DivisionByZero));
        // q^-1 substitution produces monomial denominators
        let b = (c(1) - q()).subst(&RatQT::q_pow(-1), &t()).unwrap();
        assert_eq!(b, (q() - c(1)) / q());
    }

    #[test]
    fn evaluation() {
        let a = q() / (c(1) + q() + q() * q());
        let three = BigRational::from_integer(BigInt::from(3));
        assert_eq!(a.eval_q(&three).unwrap(), BigRational::new(3.into(), 13.into()));
        let pole = c(1) / (q() - c(1));
        assert!(matches!(
            pole.eval_q(&BigRational::one()),
            Err(Error::Pole(_))
        ));
        assert!(RatQT::zero().eval_q(&three).unwrap().is_zero());
        assert_eq!(t().eval_q(&three), Err(Error::Bivariate));
    }

    #[test]
    fn exact_power_division() {
        let one_q = PolyQT::from_q_coeffs(&[1, -1]);
        let a = RatQT::from_poly(one_q.pow(2));
        let r = a.divide_exact_by_power(&one_q, 1).unwrap();
        assert_eq!(r, c(1) - q());
        assert!(!r.is_polynomial_with_nonneg_int_coeffs());
        let a = RatQT::from_poly(one_q.pow(2).mul(&PolyQT::from_q_coeffs(&[1, 1])));
        let r = a.divide_exact_by_power(&one_q, 2).unwrap();
        assert_eq!(r, c(1) + q());
        assert!(r.is_polynomial_with_nonneg_int_coeffs());
        let a = RatQT::from_poly(PolyQT::from_q_coeffs(&[1, -2, 1]));
        assert!(a.divide_exact_by_power(&one_q, 2).unwrap().is_one());
        assert_eq!(
            a.divide_exact_by_power(&PolyQT::zero(), 1),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn json_round_trip() {
        let a = (c(3) * q() - t() * t()) / (c(2) - q() * t());
        let v = a.to_json_value();
        assert_eq!(RatQT::from_json_value(&v).unwrap(), a);
        let s = serde_json::to_string(&a).unwrap();
        let b: RatQT = serde_json::from_str(&s).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn parse_bindings() {
        assert_eq!(parse_simple("q^2").unwrap(), q() * q());
        assert_eq!(parse_simple("q^-1").unwrap(), c(1) / q());
        assert_eq!(parse_simple("1/2").unwrap(), RatQT::from_ratio(1, 2));
    }
}
