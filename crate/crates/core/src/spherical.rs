//! Values of the spherical functions of `(GL_{2n}(q), Sp_{2n}(q))` on
//! unipotent double cosets, computed three independent ways.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::charmap::{ch_sp_indicator, ch_spherical, double_coset_size, sp_order, CharData, ClassData};
use crate::error::{Error, Result};
use crate::macdonald::{c_coeff, cprime_coeff, d_coeff, green_polynomials, macdonald_j, pieri_psi_prime};
use crate::partitions::{partitions_of_usize, Partition};
use crate::ratfunc::RatQT;
use crate::symfunc::{
    inner_sp, omega, omega_qt, Binding, FamilyKind, FamilyLabel, Factor, SymFunc,
};

/// Principal specialization on L-families: `p_n(φ) ↦ 1/(q_φ^n - 1)`.
pub fn delta_specialize(f: &SymFunc) -> Result<RatQT> {
    let p = f.to_p()?;
    let mut acc = RatQT::zero();
    for (factors, c) in p.terms() {
        let mut term = c.clone();
        for fac in factors {
            if fac.family.kind == FamilyKind::M {
                return Err(Error::UnexpectedMFamily);
            }
            let d = fac.family.deg as i64;
            for &k in fac.partition.parts() {
                term = term.checked_div(&(RatQT::q_pow(d * k as i64) - RatQT::one()))?;
            }
        }
        acc = acc + term;
    }
    Ok(acc)
}

/// Transfers an L-side function to the unipotent family `f1`.
///
/// `p_n(φ)` for `φ` of degree `d` is `(-1)^{nd-1} Σ_{x ∈ M_{nd}} ξ(x) p̃_{nd}(x)`
/// with `ξ ∈ φ`. Against functions supported on `f1` only the term `x = 1`
/// survives; its minimal polynomial is `x - 1`, so `p̃_{nd}(1) = p_{nd}(f1)`,
/// and `ξ(1) = 1`. Hence `p_n(φ) ↦ (-1)^{nd-1} p_{nd}(f1)`.
pub fn unipotent_projection(f: &SymFunc) -> Result<SymFunc> {
    let p = f.to_p()?;
    let f1 = FamilyLabel::f1();
    let mut out = SymFunc::zero();
    for (factors, c) in p.terms() {
        let mut parts = Vec::new();
        let mut sign = 1i64;
        for fac in factors {
            if fac.family.kind == FamilyKind::M {
                return Err(Error::UnexpectedMFamily);
            }
            let d = fac.family.deg as usize;
            for &k in fac.partition.parts() {
                parts.push(k * d);
                if (k * d - 1) % 2 == 1 {
                    sign = -sign;
                }
            }
        }
        let rho = Partition::from_unsorted(parts);
        let key = if rho.is_empty() {
            Vec::new()
        } else {
            vec![Factor::new(f1.clone(), crate::symfunc::BasisLabel::P, rho)]
        };
        out.add_term(key, c.scale_int(sign));
    }
    Ok(out)
}

/// `⟨π F, G⟩` for `F` on L-families and `G` on `f1`.
pub fn pair_dual_unipotent(f: &SymFunc, g: &SymFunc) -> Result<RatQT> {
    if g.families().iter().any(|x| !x.is_f1()) {
        return Err(Error::MixedFamilies);
    }
    inner_sp(&unipotent_projection(f)?, g)
}

/// The double coset of a unipotent element of Jordan type `mu`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct UnipotentCoset {
    pub mu: Partition,
}

impl UnipotentCoset {
    pub fn new(mu: Partition) -> Self {
        UnipotentCoset { mu }
    }

    pub fn identity(n: usize) -> Self {
        Self::new(Partition::column(n))
    }

    /// Jordan type `(2, 1^{n-2})`.
    pub fn transvection(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::TransvectionTooSmall);
        }
        let mut parts = vec![2];
        parts.extend(std::iter::repeat_n(1, n - 2));
        Ok(Self::new(Partition::new(parts)?))
    }

    pub fn n(&self) -> usize {
        self.mu.size()
    }

    pub fn is_transvection(&self) -> bool {
        self.n() >= 2 && self.mu.part(1) == 2 && self.mu.part(2) <= 1
    }

    pub fn class_data(&self) -> ClassData {
        ClassData::unipotent(self.mu.clone())
    }
}

impl fmt::Display for UnipotentCoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unipotent:{}", self.mu)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Route {
    /// Pairing of characteristic images.
    A,
    /// Deligne-Lusztig expansion and Green polynomials.
    B,
    /// Pieri formula, transvection only.
    C,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Route::A => "a",
            Route::B => "b",
            Route::C => "c",
        };
        f.write_str(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SphericalValue {
    pub lambda: String,
    pub coset: UnipotentCoset,
    pub route: Route,
    pub value: RatQT,
}

fn check_degree(ch: &CharData, coset: &UnipotentCoset) -> Result<()> {
    if ch.n() != coset.n() {
        return Err(Error::DegreeMismatch {
            expected: coset.n(),
            got: ch.n(),
        });
    }
    Ok(())
}

/// `q^{-n}|Sp_{2n}|² ⟨π ch(φ_λ), ch(I_{HuH})⟩ / |HuH|`.
pub fn value_route_a(ch: &CharData, coset: &UnipotentCoset) -> Result<RatQT> {
    check_degree(ch, coset)?;
    let n = coset.n();
    let class = coset.class_data();
    let f = ch_spherical(ch)?;
    let g = ch_sp_indicator(&class)?;
    let sp = sp_order(n);
    let pairing = pair_dual_unipotent(&f, &g)?;
    (RatQT::q_pow(-(n as i64)) * &sp * &sp * pairing).checked_div(&double_coset_size(&class))
}

struct FamilyTerm {
    scaled: Vec<usize>,
    coeff: RatQT,
}

/// Sum over tori `T_w`, `w = (ρ_φ)`, of Deligne-Lusztig coefficients times
/// `Q^μ_{ρ(w)}(q²) / (|T_w| Q^{(1^n)}_{ρ(w)}(q²))`.
pub fn value_route_b(ch: &CharData, coset: &UnipotentCoset) -> Result<RatQT> {
    check_degree(ch, coset)?;
    let n = coset.n();
    let green = green_polynomials(n)?;
    let q2 = RatQT::q_pow(2);
    let col = Partition::column(n);
    let mut ratio: BTreeMap<Partition, RatQT> = BTreeMap::new();
    for rho in partitions_of_usize(n) {
        let num = green.get(&rho, &coset.mu).subst(&q2, &q2)?;
        let den = green.get(&rho, &col).subst(&q2, &q2)?;
        ratio.insert(rho, num.checked_div(&den)?);
    }

    let mut per_family: Vec<Vec<FamilyTerm>> = Vec::new();
    for (phi, lam) in ch.lambda.iter() {
        let d = phi.deg as i64;
        let qf = phi.q_family();
        let conj = lam.conjugate();
        let b = Binding::new(RatQT::q_pow(2 * d), qf.clone());
        let lead = RatQT::q_pow(-d * conj.n_stat() as i64) * c_coeff(&conj, &b);
        let mut terms = Vec::new();
        for rho in partitions_of_usize(lam.size()) {
            let dv = d_coeff(&conj, &rho, &qf)?;
            if dv.is_zero() {
                continue;
            }
            let mut coeff = lead.mul_ref(&dv).scale_int(rho.sign());
            coeff = coeff.checked_div(&RatQT::from_bigint(BigInt::from(rho.z())))?;
            for &k in rho.parts() {
                coeff = coeff.checked_div(&(RatQT::q_pow(d * k as i64) - RatQT::one()))?;
            }
            terms.push(FamilyTerm {
                scaled: rho.parts().iter().map(|&k| k * d as usize).collect(),
                coeff,
            });
        }
        per_family.push(terms);
    }

    let mut acc: BTreeMap<Partition, RatQT> = BTreeMap::new();
    let mut stack: Vec<(Vec<usize>, RatQT)> = vec![(Vec::new(), RatQT::one())];
    for terms in &per_family {
        let mut next = Vec::with_capacity(stack.len() * terms.len());
        for (parts, c) in &stack {
            for t in terms {
                let mut p = parts.clone();
                p.extend_from_slice(&t.scaled);
                next.push((p, c.mul_ref(&t.coeff)));
            }
        }
        stack = next;
    }
    for (parts, c) in stack {
        let rho = Partition::from_unsorted(parts);
        let e = acc.entry(rho).or_insert_with(RatQT::zero);
        *e = e.add_ref(&c);
    }
    let mut total = RatQT::zero();
    for (rho, c) in acc {
        total = total + c.mul_ref(&ratio[&rho]);
    }
    Ok(if ch.boxes().is_multiple_of(2) { total } else { -total })
}

/// Closed form on the transvection coset via the Pieri rule for `e_1`.
pub fn value_route_c(ch: &CharData) -> Result<RatQT> {
    let n = ch.n();
    if n < 2 {
        return Err(Error::TransvectionTooSmall);
    }
    let q = RatQT::q();
    let one = RatQT::one();
    let b = Binding::q_q2();
    let q2n = RatQT::q_pow(2 * n as i64) - &one;
    let q2n2 = RatQT::q_pow(2 * n as i64 - 2);
    let q2m1 = RatQT::q_pow(2) - &one;
    let mut sum = RatQT::zero();
    for (phi, lam) in ch.lambda.iter() {
        if phi.deg != 1 {
            continue;
        }
        let cl = cprime_coeff(lam, &b);
        let nl = lam.conjugate().n_stat() as i64;
        for lam0 in lam.remove_one_box() {
            let psi = pieri_psi_prime(lam, &lam0, &b)?;
            let den = cprime_coeff(&lam0, &b) * (&one - &q);
            let shift = RatQT::q_pow(lam0.conjugate().n_stat() as i64 - nl);
            sum = sum + (cl.mul_ref(&psi).checked_div(&den)? * shift);
        }
    }
    let tail = q2n.checked_div(&(q2n2.mul_ref(&q2m1)))?;
    let pref = (q2n2 * q2m1).checked_div(&(q2n * (RatQT::q_pow(2 * n as i64 - 2) - &one)))?;
    Ok(pref * (sum - tail))
}

/// Dispatches to a route. Route C needs the transvection coset.
pub fn spherical_value(ch: &CharData, coset: &UnipotentCoset, route: Route) -> Result<SphericalValue> {
    let value = match route {
        Route::A => value_route_a(ch, coset)?,
        Route::B => value_route_b(ch, coset)?,
        Route::C => {
            check_degree(ch, coset)?;
            if !coset.is_transvection() {
                return Err(Error::TransvectionTooSmall);
            }
            value_route_c(ch)?
        }
    };
    Ok(SphericalValue {
        lambda: ch.lambda.to_string(),
        coset: coset.clone(),
        route,
        value,
    })
}

/// `Π_φ J_{λ(φ)}(φ; q_φ, q_φ²)`.
pub fn j_product(ch: &CharData) -> Result<SymFunc> {
    let mut acc = SymFunc::one();
    for (phi, lam) in ch.lambda.iter() {
        let b = Binding::family_q_q2(phi.deg);
        let j = macdonald_j(lam, &b)?;
        let v = j.pvec(&FamilyLabel::f1())?;
        acc = acc.multiply(&SymFunc::from_pvec(phi, &v))?;
    }
    Ok(acc)
}

/// Predicted `⟨π J_λ, e_{n-1} e_1(f1)⟩`:
/// `(-1)^{|λ|} Σ_{φ0, λ0} Π_φ q_φ^{n(λ0(φ)')} c'_λ ψ'_{λ/λ0} / (c'_{λ0} (1-q))`,
/// with `λ0` obtained by removing one box from a degree-one family.
pub fn pieri_lemma_rhs(ch: &CharData) -> Result<RatQT> {
    let b = Binding::q_q2();
    let one = RatQT::one();
    let base: i64 = ch
        .lambda
        .iter()
        .map(|(phi, lam)| phi.deg as i64 * lam.conjugate().n_stat() as i64)
        .sum();
    let mut sum = RatQT::zero();
    for (phi, lam) in ch.lambda.iter() {
        if phi.deg != 1 {
            continue;
        }
        let own = lam.conjugate().n_stat() as i64;
        for lam0 in lam.remove_one_box() {
            let shift = base - own + lam0.conjugate().n_stat() as i64;
            let psi = pieri_psi_prime(lam, &lam0, &b)?;
            let den = cprime_coeff(&lam0, &b) * (&one - &RatQT::q());
            sum = sum
                + cprime_coeff(lam, &b).mul_ref(&psi).checked_div(&den)? * RatQT::q_pow(shift);
        }
    }
    Ok(if ch.boxes().is_multiple_of(2) { sum } else { -sum })
}

/// Compares `⟨π J_λ, e_{n-1} e_1(f1)⟩` with [`pieri_lemma_rhs`] for every
/// character type of weight `n` with family degrees at most `max_deg`.
pub fn pieri_expansion_lemma_check(n: usize, max_deg: u32) -> Result<bool> {
    if n < 2 {
        return Ok(true);
    }
    let f1 = FamilyLabel::f1();
    let e = SymFunc::e(&f1, n - 1).multiply(&SymFunc::e(&f1, 1))?;
    for ch in crate::charmap::char_types(n, max_deg) {
        let lhs = pair_dual_unipotent(&j_product(&ch)?, &e)?;
        if lhs != pieri_lemma_rhs(&ch)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `⟨π F, e_n(f1)⟩ = δ(ω ω_{q,q²} F)`.
pub fn e_pairing_identity(f: &SymFunc) -> Result<bool> {
    let n = f.degree().unwrap_or(0);
    let lhs = pair_dual_unipotent(f, &SymFunc::e(&FamilyLabel::f1(), n))?;
    let rhs = delta_specialize(&omega(&omega_qt(f, &Binding::q_q2())?)?)?;
    Ok(lhs == rhs)
}

/// `P_{(2,1^{n-2})}(t) = e_{n-1} e_1 - (1 + t + ... + t^{n-1}) e_n` at a Hall-Littlewood
/// parameter `t`.
pub fn e_split_identity(n: usize, t: &RatQT) -> Result<bool> {
    if n < 2 {
        return Ok(true);
    }
    let f1 = FamilyLabel::f1();
    let mut parts = vec![2];
    parts.extend(std::iter::repeat_n(1, n - 2));
    let lhs = crate::macdonald::hall_littlewood_p(&Partition::new(parts)?, t)?;
    let mut coeff = RatQT::zero();
    for i in 0..n {
        coeff = coeff + t.pow(i as i64)?;
    }
    let rhs = SymFunc::e(&f1, n - 1)
        .multiply(&SymFunc::e(&f1, 1))?
        .sub(&SymFunc::e(&f1, n).scale(&coeff))
        .to_p()?;
    Ok(lhs.to_p()? == rhs)
}

/// `Σ_χ d_χ φ_χ(u)` at `q = q0` over every spherical character `χ = χ_{λ∪λ}`
/// of `GL_{2n}(q0)`, weighted by the number of characters of each type. It
/// vanishes for `u` outside `Sp_{2n}`, e.g. on any non-identity unipotent coset.
pub fn coset_sum_rule(coset: &UnipotentCoset, q0: u64) -> Result<num_rational::BigRational> {
    use crate::charmap::{count_orbits_l, dim_irreducible, instantiate, type_multiplicity, types};
    let n = coset.n();
    let qq = num_rational::BigRational::from_integer(BigInt::from(q0));
    let mut total = num_rational::BigRational::from_integer(BigInt::from(0));
    for ty in types(n, n as u32) {
        let mult = type_multiplicity(&ty, |d| count_orbits_l(d, q0));
        if mult == BigInt::from(0) {
            continue;
        }
        let ch = CharData {
            lambda: instantiate(&ty, FamilyKind::L),
        };
        let doubled = CharData {
            lambda: ch.lambda.map_parts(|_, p| p.union_double()),
        };
        let dim = dim_irreducible(&doubled)?.eval_q(&qq)?;
        let value = value_route_a(&ch, coset)?.eval_q(&qq)?;
        total += num_rational::BigRational::from_integer(mult) * dim * value;
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charmap::char_types;
    use crate::part;
    use crate::symfunc::PartitionFn;

    fn c(n: i64) -> RatQT {
        RatQT::from_int(n)
    }

    #[test]
    fn projection_signs() {
        let a = FamilyLabel::l("a", 2);
        let got = unipotent_projection(&SymFunc::p(&a, part![1])).unwrap();
        assert_eq!(got, SymFunc::p(&FamilyLabel::f1(), part![2]).neg());
        let got = unipotent_projection(&SymFunc::p(&FamilyLabel::triv(), part![3])).unwrap();
        assert_eq!(got, SymFunc::p(&FamilyLabel::f1(), part![3]));
    }

    #[test]
    fn delta_values() {
        let a = FamilyLabel::l("a", 2);
        let v = delta_specialize(&SymFunc::p(&a, part![1])).unwrap();
        assert_eq!(v, c(1) / (RatQT::q_pow(2) - c(1)));
        assert!(matches!(
            delta_specialize(&SymFunc::p(&FamilyLabel::f1(), part![1])),
            Err(Error::UnexpectedMFamily)
        ));
    }

    #[test]
    fn identity_small() {
        for n in 1..=3 {
            for ch in char_types(n, n as u32) {
                let id = UnipotentCoset::identity(n);
                assert!(value_route_a(&ch, &id).unwrap().is_one(), "{}", ch.lambda);
                assert!(value_route_b(&ch, &id).unwrap().is_one(), "{}", ch.lambda);
            }
        }
    }

    #[test]
    fn transvection_n2() {
        let tr = UnipotentCoset::transvection(2).unwrap();
        let a = CharData::trivial_family(part![1, 1]);
        let b = CharData::trivial_family(part![2]);
        let phi2 = (RatQT::q() - c(1)) / (RatQT::q_pow(4) - c(1));
        for route in [Route::A, Route::B, Route::C] {
            assert!(spherical_value(&a, &tr, route).unwrap().value.is_one());
            assert_eq!(spherical_value(&b, &tr, route).unwrap().value, phi2);
        }
        let d2 = CharData::new(PartitionFn::single(FamilyLabel::l("a", 2), part![1])).unwrap();
        let expect = c(-1) / (RatQT::q_pow(2) - c(1));
        for route in [Route::A, Route::B, Route::C] {
            assert_eq!(spherical_value(&d2, &tr, route).unwrap().value, expect);
        }
    }

    #[test]
    fn routes_agree_n3() {
        let tr = UnipotentCoset::transvection(3).unwrap();
        for ch in char_types(3, 3) {
            let a = value_route_a(&ch, &tr).unwrap();
            assert_eq!(a, value_route_b(&ch, &tr).unwrap(), "{}", ch.lambda);
            assert_eq!(a, value_route_c(&ch).unwrap(), "{}", ch.lambda);
        }
    }

    #[test]
    fn sum_rule() {
        for n in 2..=3 {
            for mu in partitions_of_usize(n) {
                let coset = UnipotentCoset::new(mu);
                let s = coset_sum_rule(&coset, 3).unwrap();
                if coset.mu == Partition::column(n) {
                    assert!(s > num_rational::BigRational::from_integer(0.into()));
                } else {
                    assert_eq!(s, num_rational::BigRational::from_integer(0.into()), "{}", coset);
                }
            }
        }
    }

    #[test]
    fn pieri_lemma() {
        for n in 2..=3 {
            assert!(pieri_expansion_lemma_check(n, 2).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn e_pairing() {
        for n in 1..=3 {
            for ch in char_types(n, 2) {
                assert!(e_pairing_identity(&j_product(&ch).unwrap()).unwrap());
            }
        }
    }

    #[test]
    fn e_split() {
        for n in 2..=4 {
            assert!(e_split_identity(n, &RatQT::t()).unwrap());
            assert!(e_split_identity(n, &RatQT::q()).unwrap());
        }
    }

    #[test]
    fn small_transvection_rejected() {
        assert!(matches!(
            UnipotentCoset::transvection(1),
            Err(Error::TransvectionTooSmall)
        ));
        assert!(matches!(
            value_route_c(&CharData::trivial_family(part![1])),
            Err(Error::TransvectionTooSmall)
        ));
    }
}
