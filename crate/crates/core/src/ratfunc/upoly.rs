//! Dense univariate polynomials over Z. These are the coefficients of the
//! recursive representation `Z[t][q]` used by [`super::PolyQT`].

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Coefficient of `t^i` at index `i`; never has trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct UPoly(pub(crate) Vec<BigInt>);

impl UPoly {
    pub fn zero() -> Self {
        UPoly(Vec::new())
    }

    pub fn constant(c: BigInt) -> Self {
        let mut p = UPoly(vec![c]);
        p.trim();
        p
    }

    pub fn one() -> Self {
        UPoly(vec![BigInt::one()])
    }

    pub fn monomial(c: BigInt, e: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut v = vec![BigInt::zero(); e + 1];
        v[e] = c;
        UPoly(v)
    }

    pub fn from_coeffs(v: Vec<BigInt>) -> Self {
        let mut p = UPoly(v);
        p.trim();
        p
    }

    pub(crate) fn trim(&mut self) {
        while matches!(self.0.last(), Some(c) if c.is_zero()) {
            self.0.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.0.len() <= 1
    }

    /// Degree; zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn lc(&self) -> BigInt {
        self.0.last().cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> usize {
        self.0.iter().position(|c| !c.is_zero()).unwrap_or(0)
    }

    pub fn shift_down(&self, k: usize) -> UPoly {
        UPoly(self.0[k.min(self.0.len())..].to_vec())
    }

    pub fn shift_up(&self, k: usize) -> UPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut v = vec![BigInt::zero(); k];
        v.extend_from_slice(&self.0);
        UPoly(v)
    }

    pub fn add(&self, other: &UPoly) -> UPoly {
        let (long, short) = if self.0.len() >= other.0.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut v = long.0.clone();
        for (a, b) in v.iter_mut().zip(&short.0) {
            *a += b;
        }
        UPoly::from_coeffs(v)
    }

    pub fn sub(&self, other: &UPoly) -> UPoly {
        let n = self.0.len().max(other.0.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            let a = self.0.get(i);
            let b = other.0.get(i);
            v.push(match (a, b) {
                (Some(a), Some(b)) => a - b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => -b,
                (None, None) => BigInt::zero(),
            });
        }
        UPoly::from_coeffs(v)
    }

    pub fn neg(&self) -> UPoly {
        UPoly(self.0.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &UPoly) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero();
        }
        if other.0.len() == 1 {
            return self.scale(&other.0[0]);
        }
        if self.0.len() == 1 {
            return other.scale(&self.0[0]);
        }
        let mut v = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] += a * b;
                }
            }
        }
        UPoly::from_coeffs(v)
    }

    pub fn scale(&self, c: &BigInt) -> UPoly {
        if c.is_zero() {
            return UPoly::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        UPoly(self.0.iter().map(|a| a * c).collect())
    }

    /// Divides every coefficient by `c`; the caller guarantees exactness.
    pub fn div_scalar(&self, c: &BigInt) -> UPoly {
        if c.is_one() {
            return self.clone();
        }
        UPoly(self.0.iter().map(|a| a / c).collect())
    }

    /// gcd of the integer coefficients, sign taken from the leading coefficient.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.0 {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        if self.lc().is_negative() {
            -g
        } else {
            g
        }
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> UPoly {
        if self.is_zero() {
            return UPoly::zero();
        }
        self.div_scalar(&self.content())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &UPoly) -> Option<UPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(UPoly::zero());
        }
        if self.0.len() < d.0.len() {
            return None;
        }
        let dl = d.0.len();
        let lc = d.lc();
        let mut r = self.0.clone();
        let mut q = vec![BigInt::zero(); r.len() - dl + 1];
        for i in (0..q.len()).rev() {
            let top = &r[i + dl - 1];
            if top.is_zero() {
                continue;
            }
            let (quo, rem) = top.div_rem(&lc);
            if !rem.is_zero() {
                return None;
            }
            for (j, dc) in d.0.iter().enumerate() {
                if !dc.is_zero() {
                    r[i + j] -= &quo * dc;
                }
            }
            q[i] = quo;
        }
        if r.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(UPoly::from_coeffs(q))
    }

    /// Pseudo-remainder: `lc(d)^k self = q d + r`, `deg r < deg d`.
    pub fn pseudo_rem(&self, d: &UPoly) -> UPoly {
        let mut r = self.clone();
        if d.0.len() <= 1 {
            return UPoly::zero();
        }
        let lc = d.lc();
        let dd = d.degree();
        while !r.is_zero() && r.degree() >= dd {
            let shift = r.degree() - dd;
            let rl = r.lc();
            // r = lc*r - rl * t^shift * d
            let mut v: Vec<BigInt> = r.0.iter().map(|c| c * &lc).collect();
            for (j, dc) in d.0.iter().enumerate() {
                v[shift + j] -= &rl * dc;
            }
            r = UPoly::from_coeffs(v);
        }
        r
    }

    /// gcd over Z[t], normalized to a positive leading coefficient.
    pub fn gcd(&self, other: &UPoly) -> UPoly {
        if self.is_zero() {
            return other.primitive_with_content();
        }
        if other.is_zero() {
            return self.primitive_with_content();
        }
        let ca = self.content().abs();
        let cb = other.content().abs();
        let c = ca.gcd(&cb);
        if self.is_constant() || other.is_constant() {
            return UPoly::constant(c);
        }
        // common power of t
        let v = self.valuation().min(other.valuation());
        let mut a = self.shift_down(self.valuation()).primitive();
        let mut b = other.shift_down(other.valuation()).primitive();
        if let Some(g) = heuristic_gcd(&a, &b) {
            return g.scale(&c).shift_up(v);
        }
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            if b.is_constant() {
                return UPoly::constant(c).shift_up(v);
            }
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive();
        }
        a.primitive().scale(&c).shift_up(v)
    }

    fn primitive_with_content(&self) -> UPoly {
        if self.lc().is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.0.iter().map(|c| c.abs()).max().unwrap_or_else(BigInt::zero)
    }
}

/// GCDHEU: evaluate at a large integer, take the integer gcd and lift back
/// by balanced radix expansion. Returns `None` if no candidate verifies.
/// Inputs are primitive with nonzero constant term.
fn heuristic_gcd(a: &UPoly, b: &UPoly) -> Option<UPoly> {
    let bound = a.max_abs_coeff().max(b.max_abs_coeff());
    let mut xi: BigInt = bound * 2u32 + 29u32;
    for _ in 0..6 {
        let va = a.eval(&xi);
        let vb = b.eval(&xi);
        let g = va.gcd(&vb);
        if !g.is_zero() {
            let cand = lift_radix(&g, &xi).primitive();
            if !cand.is_zero() && a.div_exact(&cand).is_some() && b.div_exact(&cand).is_some() {
                return Some(cand);
            }
        }
        // xi <- floor(xi * 73794 / 27011), the classical growth factor
        xi = &xi * 73794u32 / 27011u32 + 1u32;
    }
    None
}

/// Balanced base-`xi` digits of `g`, low digit first.
fn lift_radix(g: &BigInt, xi: &BigInt) -> UPoly {
    let mut v = Vec::new();
    let mut g = g.clone();
    let half: BigInt = xi / 2u32;
    while !g.is_zero() {
        let mut d = g.mod_floor(xi);
        if d > half {
            d -= xi;
        }
        g = (&g - &d) / xi;
        v.push(d);
    }
    UPoly::from_coeffs(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn up(v: &[i64]) -> UPoly {
        UPoly::from_coeffs(v.iter().map(|&c| BigInt::from(c)).collect())
    }

    #[test]
    fn gcd_of_cyclotomic_products() {
        // (1-t)(1+t) and (1-t)(1+t+t^2)
        let a = up(&[1, 0, -1]);
        let b = up(&[1, 0, 0, -1]);
        assert_eq!(a.gcd(&b), up(&[-1, 1]));
        assert_eq!(up(&[2, 4]).gcd(&up(&[6])), up(&[2]));
        assert_eq!(up(&[0, 0, 3]).gcd(&up(&[0, 6])), up(&[0, 3]));
    }

    #[test]
    fn exact_division() {
        let a = up(&[1, 0, -1]);
        assert_eq!(a.div_exact(&up(&[1, 1])), Some(up(&[1, -1])));
        assert_eq!(a.div_exact(&up(&[2, 1])), None);
    }
}
