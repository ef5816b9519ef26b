//! Polynomials in `Z[q,t]`, stored recursively as polynomials in `q` whose
//! coefficients are dense polynomials in `t`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::upoly::UPoly;

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PolyQT {
    /// `rows[i]` is the coefficient of `q^i`; the last row is nonzero.
    rows: Vec<UPoly>,
}

impl PolyQT {
    pub fn zero() -> Self {
        PolyQT { rows: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_rows(vec![UPoly::constant(c)])
    }

    pub fn monomial(c: BigInt, eq: usize, et: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut rows = vec![UPoly::zero(); eq + 1];
        rows[eq] = UPoly::monomial(c, et);
        PolyQT { rows }
    }

    pub fn q() -> Self {
        Self::monomial(BigInt::one(), 1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(BigInt::one(), 0, 1)
    }

    pub(crate) fn from_rows(mut rows: Vec<UPoly>) -> Self {
        while matches!(rows.last(), Some(r) if r.is_zero()) {
            rows.pop();
        }
        PolyQT { rows }
    }

    /// Builds from `(coefficient, q-exponent, t-exponent)` triples; repeated
    /// exponents are summed.
    pub fn from_terms<I: IntoIterator<Item = (BigInt, usize, usize)>>(terms: I) -> Self {
        let mut rows: Vec<Vec<BigInt>> = Vec::new();
        for (c, eq, et) in terms {
            if rows.len() <= eq {
                rows.resize(eq + 1, Vec::new());
            }
            let row = &mut rows[eq];
            if row.len() <= et {
                row.resize(et + 1, BigInt::zero());
            }
            row[et] += c;
        }
        Self::from_rows(rows.into_iter().map(UPoly::from_coeffs).collect())
    }

    /// Univariate polynomial in `q` from coefficients, low degree first.
    pub fn from_q_coeffs(v: &[i64]) -> Self {
        Self::from_terms(v.iter().enumerate().map(|(i, &c)| (BigInt::from(c), i, 0)))
    }

    /// Terms as `(coefficient, eq, et)`, sorted by `(eq, et)` ascending.
    pub fn terms(&self) -> Vec<(BigInt, usize, usize)> {
        let mut out = Vec::new();
        for (i, row) in self.rows.iter().enumerate() {
            for (j, c) in row.0.iter().enumerate() {
                if !c.is_zero() {
                    out.push((c.clone(), i, j));
                }
            }
        }
        out
    }

    pub fn num_terms(&self) -> usize {
        self.rows
            .iter()
            .map(|r| r.0.iter().filter(|c| !c.is_zero()).count())
            .sum()
    }

    pub fn rows(&self) -> &[UPoly] {
        &self.rows
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.rows.len() == 1 && self.rows[0].is_one()
    }

    /// Constant (no `q` and no `t`).
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.rows.len() {
            0 => Some(BigInt::zero()),
            1 if self.rows[0].is_constant() => Some(self.rows[0].lc()),
            _ => None,
        }
    }

    pub fn degree_q(&self) -> usize {
        self.rows.len().saturating_sub(1)
    }

    pub fn degree_t(&self) -> usize {
        self.rows.iter().map(|r| r.degree()).max().unwrap_or(0)
    }

    pub fn is_t_free(&self) -> bool {
        self.rows.iter().all(|r| r.is_constant())
    }

    /// Leading term under graded lex with `q > t`: `(coefficient, eq, et)`.
    pub fn leading_term(&self) -> Option<(BigInt, usize, usize)> {
        let mut best: Option<(BigInt, usize, usize)> = None;
        for (i, row) in self.rows.iter().enumerate() {
            if row.is_zero() {
                continue;
            }
            let j = row.degree();
            let better = match &best {
                None => true,
                Some((_, bi, bj)) => match (i + j).cmp(&(bi + bj)) {
                    Ordering::Greater => true,
                    Ordering::Equal => i > *bi,
                    Ordering::Less => false,
                },
            };
            if better {
                best = Some((row.lc(), i, j));
            }
        }
        best
    }

    pub fn lc_sign_negative(&self) -> bool {
        self.leading_term().map(|(c, _, _)| c.is_negative()).unwrap_or(false)
    }

    pub fn add(&self, other: &PolyQT) -> PolyQT {
        let n = self.rows.len().max(other.rows.len());
        let rows = (0..n)
            .map(|i| match (self.rows.get(i), other.rows.get(i)) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => UPoly::zero(),
            })
            .collect();
        Self::from_rows(rows)
    }

    pub fn sub(&self, other: &PolyQT) -> PolyQT {
        let n = self.rows.len().max(other.rows.len());
        let rows = (0..n)
            .map(|i| match (self.rows.get(i), other.rows.get(i)) {
                (Some(a), Some(b)) => a.sub(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.neg(),
                (None, None) => UPoly::zero(),
            })
            .collect();
        Self::from_rows(rows)
    }

    pub fn neg(&self) -> PolyQT {
        PolyQT {
            rows: self.rows.iter().map(|r| r.neg()).collect(),
        }
    }

    pub fn mul(&self, other: &PolyQT) -> PolyQT {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        if let Some(c) = other.as_constant() {
            return self.scale(&c);
        }
        if let Some(c) = self.as_constant() {
            return other.scale(&c);
        }
        // Kronecker substitution t -> X, q -> X^w turns this into one dense
        // univariate product.
        let w = self.degree_t() + other.degree_t() + 1;
        let a = self.to_kronecker(w);
        let b = other.to_kronecker(w);
        let mut v = vec![BigInt::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                if !y.is_zero() {
                    v[i + j] += x * y;
                }
            }
        }
        Self::from_kronecker(v, w)
    }

    fn to_kronecker(&self, w: usize) -> Vec<BigInt> {
        let mut v = vec![BigInt::zero(); (self.rows.len() - 1) * w + self.rows.last().unwrap().0.len()];
        for (i, row) in self.rows.iter().enumerate() {
            for (j, c) in row.0.iter().enumerate() {
                v[i * w + j] = c.clone();
            }
        }
        v
    }

    fn from_kronecker(v: Vec<BigInt>, w: usize) -> Self {
        let rows = v
            .chunks(w)
            .map(|c| UPoly::from_coeffs(c.to_vec()))
            .collect();
        Self::from_rows(rows)
    }

    pub fn scale(&self, c: &BigInt) -> PolyQT {
        if c.is_zero() {
            return Self::zero();
        }
        PolyQT {
            rows: self.rows.iter().map(|r| r.scale(c)).collect(),
        }
    }

    pub fn mul_upoly(&self, c: &UPoly) -> PolyQT {
        Self::from_rows(self.rows.iter().map(|r| r.mul(c)).collect())
    }

    pub fn pow(&self, k: u32) -> PolyQT {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Multiplies by `q^a t^b`.
    pub fn shift(&self, a: usize, b: usize) -> PolyQT {
        if self.is_zero() {
            return Self::zero();
        }
        let mut rows = vec![UPoly::zero(); a];
        rows.extend(self.rows.iter().map(|r| r.shift_up(b)));
        PolyQT { rows }
    }

    /// Largest `(a, b)` with `q^a t^b` dividing `self`.
    pub fn monomial_valuation(&self) -> (usize, usize) {
        let a = self.rows.iter().position(|r| !r.is_zero()).unwrap_or(0);
        let b = self
            .rows
            .iter()
            .filter(|r| !r.is_zero())
            .map(|r| r.valuation())
            .min()
            .unwrap_or(0);
        (a, b)
    }

    /// Divides by `q^a t^b`; the caller guarantees divisibility.
    pub fn unshift(&self, a: usize, b: usize) -> PolyQT {
        Self::from_rows(self.rows[a.min(self.rows.len())..].iter().map(|r| r.shift_down(b)).collect())
    }

    /// Integer content, positive.
    pub fn int_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for r in &self.rows {
            for c in &r.0 {
                g = g.gcd(c);
                if g.is_one() {
                    return g;
                }
            }
        }
        g
    }

    pub fn div_scalar(&self, c: &BigInt) -> PolyQT {
        PolyQT {
            rows: self.rows.iter().map(|r| r.div_scalar(c)).collect(),
        }
    }

    pub fn div_upoly_exact(&self, c: &UPoly) -> Option<PolyQT> {
        let rows: Option<Vec<UPoly>> = self.rows.iter().map(|r| r.div_exact(c)).collect();
        rows.map(Self::from_rows)
    }

    /// Content with respect to `q`: the gcd in `Z[t]` of all rows.
    pub fn content_q(&self) -> UPoly {
        let mut g = UPoly::zero();
        for r in &self.rows {
            if r.is_zero() {
                continue;
            }
            g = g.gcd(r);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Exact quotient `self / d` in `Z[q,t]`, or `None`.
    pub fn div_exact(&self, d: &PolyQT) -> Option<PolyQT> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if d.is_one() {
            return Some(self.clone());
        }
        if let Some(c) = d.as_constant() {
            let (q, ok) = self.div_int_checked(&c);
            return if ok { Some(q) } else { None };
        }
        if self.rows.len() < d.rows.len() {
            return None;
        }
        if self.degree_t() < d.degree_t() {
            return None;
        }
        let dl = d.rows.len();
        let lc = d.rows.last().unwrap();
        let mut r = self.rows.clone();
        let mut quo = vec![UPoly::zero(); r.len() - dl + 1];
        for i in (0..quo.len()).rev() {
            let top = &r[i + dl - 1];
            if top.is_zero() {
                continue;
            }
            let c = top.div_exact(lc)?;
            for (j, dc) in d.rows.iter().enumerate() {
                if !dc.is_zero() {
                    r[i + j] = r[i + j].sub(&c.mul(dc));
                }
            }
            quo[i] = c;
        }
        if r.iter().any(|x| !x.is_zero()) {
            return None;
        }
        Some(Self::from_rows(quo))
    }

    fn div_int_checked(&self, c: &BigInt) -> (PolyQT, bool) {
        let mut ok = true;
        let rows = self
            .rows
            .iter()
            .map(|r| {
                UPoly(
                    r.0.iter()
                        .map(|a| {
                            let (q, rem) = a.div_rem(c);
                            if !rem.is_zero() {
                                ok = false;
                            }
                            q
                        })
                        .collect(),
                )
            })
            .collect();
        (Self::from_rows(rows), ok)
    }

    /// Pseudo-remainder in `q` over `Z[t]`.
    fn pseudo_rem_q(&self, d: &PolyQT) -> PolyQT {
        let dd = d.degree_q();
        let lc = d.rows.last().unwrap().clone();
        let mut r = self.clone();
        while !r.is_zero() && r.degree_q() >= dd {
            let shift = r.degree_q() - dd;
            let rl = r.rows.last().unwrap().clone();
            let mut rows: Vec<UPoly> = r.rows.iter().map(|x| x.mul(&lc)).collect();
            for (j, dc) in d.rows.iter().enumerate() {
                if !dc.is_zero() {
                    rows[shift + j] = rows[shift + j].sub(&rl.mul(dc));
                }
            }
            r = Self::from_rows(rows);
        }
        r
    }

    /// Primitive part with respect to `q`.
    fn primitive_q(&self) -> PolyQT {
        let c = self.content_q();
        if c.is_one() {
            return self.clone();
        }
        self.div_upoly_exact(&c).expect("content divides")
    }

    /// gcd in `Z[q,t]`, normalized to a positive graded-lex leading coefficient.
    pub fn gcd(&self, other: &PolyQT) -> PolyQT {
        if self.is_zero() {
            return other.normalize_sign();
        }
        if other.is_zero() {
            return self.normalize_sign();
        }
        if self.is_one() || other.is_one() {
            return Self::one();
        }
        let (a1, b1) = self.monomial_valuation();
        let (a2, b2) = other.monomial_valuation();
        let (ma, mb) = (a1.min(a2), b1.min(b2));
        let a = self.unshift(a1, b1);
        let b = other.unshift(a2, b2);
        let ca = a.content_q();
        let cb = b.content_q();
        let c = ca.gcd(&cb);
        let g = if a.degree_q() == 0 || b.degree_q() == 0 {
            PolyQT::from_rows(vec![c])
        } else {
            let pa = a.div_upoly_exact(&ca).expect("content divides");
            let pb = b.div_upoly_exact(&cb).expect("content divides");
            let g = match heuristic_gcd2(&pa, &pb) {
                Some(g) => g,
                None => prs_gcd(pa, pb),
            };
            g.mul_upoly(&c)
        };
        g.shift(ma, mb).normalize_sign()
    }

    fn normalize_sign(&self) -> PolyQT {
        if self.lc_sign_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    pub fn eval_q_int(&self, x: &BigInt) -> UPoly {
        let mut acc = UPoly::zero();
        for r in self.rows.iter().rev() {
            acc = acc.scale(x).add(r);
        }
        acc
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.rows
            .iter()
            .map(|r| r.max_abs_coeff())
            .max()
            .unwrap_or_else(BigInt::zero)
    }

    /// Sum of absolute values of coefficients.
    fn one_norm(&self) -> BigInt {
        let mut s = BigInt::zero();
        for r in &self.rows {
            for c in &r.0 {
                s += c.abs();
            }
        }
        s
    }
}

fn prs_gcd(mut a: PolyQT, mut b: PolyQT) -> PolyQT {
    if a.degree_q() < b.degree_q() {
        std::mem::swap(&mut a, &mut b);
    }
    while !b.is_zero() {
        if b.degree_q() == 0 {
            return PolyQT::one();
        }
        let r = a.pseudo_rem_q(&b);
        a = b;
        b = if r.is_zero() { r } else { r.primitive_q() };
    }
    a.primitive_q()
}

/// Bivariate GCDHEU: evaluate `q` at a large integer, recurse into the
/// univariate gcd in `t`, then lift the result back by balanced radix
/// expansion in the `q`-direction. Verified by trial division.
fn heuristic_gcd2(a: &PolyQT, b: &PolyQT) -> Option<PolyQT> {
    let bound = a.one_norm().min(b.one_norm());
    let mut xi: BigInt = bound * 2u32 + 29u32;
    for _ in 0..4 {
        let va = a.eval_q_int(&xi);
        let vb = b.eval_q_int(&xi);
        if va.is_zero() || vb.is_zero() {
            xi = &xi * 73794u32 / 27011u32 + 1u32;
            continue;
        }
        let g = va.gcd(&vb);
        let cand = lift_q(&g, &xi);
        if !cand.is_zero() {
            let cand = cand.primitive_q().normalize_sign();
            let cand = {
                let ic = cand.int_content();
                if ic.is_one() {
                    cand
                } else {
                    cand.div_scalar(&ic)
                }
            };
            if a.div_exact(&cand).is_some() && b.div_exact(&cand).is_some() {
                return Some(cand);
            }
        }
        xi = &xi * 73794u32 / 27011u32 + 1u32;
    }
    None
}

/// Interprets each `t`-coefficient of `g` as a balanced base-`xi` number whose
/// digits are the `q`-coefficients.
fn lift_q(g: &UPoly, xi: &BigInt) -> PolyQT {
    let half: BigInt = xi / 2u32;
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for (j, c) in g.0.iter().enumerate() {
        let mut c = c.clone();
        let mut i = 0;
        while !c.is_zero() {
            let mut d = c.mod_floor(xi);
            if d > half {
                d -= xi;
            }
            c = (&c - &d) / xi;
            if rows.len() <= i {
                rows.resize(i + 1, Vec::new());
            }
            let row = &mut rows[i];
            if row.len() <= j {
                row.resize(j + 1, BigInt::zero());
            }
            row[j] = d;
            i += 1;
        }
    }
    PolyQT::from_rows(rows.into_iter().map(UPoly::from_coeffs).collect())
}

impl fmt::Display for PolyQT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // highest graded-lex terms first
        let mut terms = self.terms();
        terms.sort_by_key(|x| std::cmp::Reverse((x.1 + x.2, x.1)));
        for (k, (c, i, j)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { " - " } else { " + " })?;
            }
            let mono = match (*i, *j) {
                (0, 0) => String::new(),
                (i, 0) => var_pow("q", i),
                (0, j) => var_pow("t", j),
                (i, j) => format!("{}*{}", var_pow("q", i), var_pow("t", j)),
            };
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

fn var_pow(v: &str, e: usize) -> String {
    if e == 1 {
        v.to_string()
    } else {
        format!("{v}^{e}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qt(terms: &[(i64, usize, usize)]) -> PolyQT {
        PolyQT::from_terms(terms.iter().map(|&(c, a, b)| (BigInt::from(c), a, b)))
    }

    #[test]
    fn gcd_bivariate() {
        // (1 - q t)(q - t) and (1 - q t)(1 + q)
        let f = qt(&[(1, 0, 0), (-1, 1, 1)]);
        let a = f.mul(&qt(&[(1, 1, 0), (-1, 0, 1)]));
        let b = f.mul(&qt(&[(1, 0, 0), (1, 1, 0)]));
        assert_eq!(a.gcd(&b), f.neg());
        let g = prs_gcd(a.primitive_q(), b.primitive_q());
        assert_eq!(g.normalize_sign(), f.neg());
    }

    #[test]
    fn gcd_with_monomials_and_content() {
        let a = qt(&[(4, 2, 1), (6, 3, 1)]);
        let b = qt(&[(2, 1, 2)]);
        assert_eq!(a.gcd(&b), qt(&[(2, 1, 1)]));
    }

    #[test]
    fn exact_division_bivariate() {
        let f = qt(&[(1, 0, 0), (-1, 1, 1)]);
        let g = qt(&[(1, 1, 0), (-1, 0, 1), (3, 2, 2)]);
        let p = f.mul(&g);
        assert_eq!(p.div_exact(&f), Some(g.clone()));
        assert_eq!(p.div_exact(&qt(&[(1, 0, 0), (1, 0, 1)])), None);
    }

    #[test]
    fn leading_term_graded_lex() {
        // q t + q^2 + t^2 : total degree 2 everywhere, q^2 wins
        let p = qt(&[(1, 1, 1), (-3, 2, 0), (1, 0, 2)]);
        assert_eq!(p.leading_term(), Some((BigInt::from(-3), 2, 0)));
    }
}
