//! Macdonald, Hall-Littlewood and Green polynomial data.
//!
//! `P_λ` is built by Gram-Schmidt on the monomial basis against the
//! `(q,t)`-pairing, processing partitions in a linear extension of dominance.
//! Tables are stored in power sums and cached per `(degree, binding)`.

use std::collections::BTreeSet;
use std::sync::Arc;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::cache;
use crate::error::{Error, Result};
use crate::partitions::{partitions_of_usize, Cell, Partition};
use crate::ratfunc::RatQT;
use crate::symfunc::classical;
use crate::symfunc::{character, BasisLabel, Binding, FamilyLabel, PVec, SymFunc};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MacKind {
    P,
    Q,
    J,
}

/// `P_λ` for every `λ ⊢ n` at one binding, in power sums.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MacTable {
    pub degree: usize,
    pub binding: Binding,
    /// Reverse-lex order, matching the classical tables.
    pub parts: Vec<Partition>,
    /// `p_coeffs[λ][ρ]`: coefficient of `p_ρ` in `P_λ`.
    pub p_coeffs: Vec<Vec<RatQT>>,
    /// `⟨P_λ, P_λ⟩` at the binding.
    pub norms: Vec<RatQT>,
    /// `⟨p_ρ, p_ρ⟩` at the binding.
    pub weights: Vec<RatQT>,
}

impl MacTable {
    /// Gram-Schmidt in increasing lexicographic order.
    pub fn build(n: usize, binding: &Binding) -> Result<Self> {
        let mut order = partitions_of_usize(n);
        order.reverse();
        Self::build_with_order(n, binding, &order)
    }

    /// Gram-Schmidt in a caller-chosen order, which must list every
    /// partition of `n` after all partitions it dominates.
    pub fn build_with_order(n: usize, binding: &Binding, order: &[Partition]) -> Result<Self> {
        let ct = classical::tables(n);
        let k = ct.parts.len();
        if order.len() != k || order.iter().any(|p| !ct.index.contains_key(p)) {
            return Err(Error::Parse("order must list every partition once".into()));
        }
        for (i, a) in order.iter().enumerate() {
            if order[..i].iter().any(|b| a.dominated_by(b) && a != b) {
                return Err(Error::Parse(format!(
                    "{a} appears after a partition dominating it"
                )));
            }
        }
        let weights: Vec<RatQT> = ct
            .parts
            .iter()
            .map(|rho| binding.weight(rho))
            .collect::<Result<_>>()?;
        let pair = |a: &[RatQT], b: &[RatQT]| -> RatQT {
            let mut acc = RatQT::zero();
            for i in 0..k {
                if !a[i].is_zero() && !b[i].is_zero() {
                    acc = acc + a[i].mul_ref(&b[i]).mul_ref(&weights[i]);
                }
            }
            acc
        };
        let mut p_coeffs: Vec<Option<Vec<RatQT>>> = vec![None; k];
        let mut norms: Vec<Option<RatQT>> = vec![None; k];
        let mut done: Vec<usize> = Vec::new();
        for lam in order {
            let li = ct.index[lam];
            let m: Vec<RatQT> = ct.m_in_p[li].iter().map(RatQT::from_rational).collect();
            let mut v = m.clone();
            for &mi in &done {
                if !ct.parts[mi].dominated_by(lam) {
                    continue;
                }
                let pm = p_coeffs[mi].as_ref().expect("processed");
                let coef = pair(&m, pm).checked_div(norms[mi].as_ref().expect("processed"))?;
                if coef.is_zero() {
                    continue;
                }
                for i in 0..k {
                    if !pm[i].is_zero() {
                        v[i] = v[i].sub_ref(&coef.mul_ref(&pm[i]));
                    }
                }
            }
            let norm = pair(&v, &v);
            if norm.is_zero() {
                return Err(Error::DivisionByZero);
            }
            p_coeffs[li] = Some(v);
            norms[li] = Some(norm);
            done.push(li);
        }
        Ok(MacTable {
            degree: n,
            binding: binding.clone(),
            parts: ct.parts.clone(),
            p_coeffs: p_coeffs.into_iter().map(|v| v.expect("all built")).collect(),
            norms: norms.into_iter().map(|v| v.expect("all built")).collect(),
            weights,
        })
    }

    pub fn index(&self, lam: &Partition) -> usize {
        classical::tables(self.degree).index[lam]
    }

    pub fn p_expansion(&self, lam: &Partition) -> &[RatQT] {
        &self.p_coeffs[self.index(lam)]
    }

    pub fn norm(&self, lam: &Partition) -> &RatQT {
        &self.norms[self.index(lam)]
    }

    /// Coefficients of `P_λ` on `m_μ`, indexed like `parts`.
    pub fn m_expansion(&self, lam: &Partition) -> Vec<RatQT> {
        let ct = classical::tables(self.degree);
        let row = self.p_expansion(lam);
        (0..self.parts.len())
            .map(|mu| {
                let mut acc = RatQT::zero();
                for (rho, c) in row.iter().enumerate() {
                    let l = &ct.l_mat[rho][mu];
                    if !c.is_zero() && !num_traits::Zero::is_zero(l) {
                        acc = acc + c.mul_ref(&RatQT::from_bigint(l.clone()));
                    }
                }
                acc
            })
            .collect()
    }
}

/// Cached table for `(n, binding)`.
pub fn table(n: usize, binding: &Binding) -> Result<Arc<MacTable>> {
    cache::mac_table(n, binding)
}

/// `c_λ = Π_s (1 - q^{a(s)} t^{l(s)+1})` at a binding.
pub fn c_coeff(lam: &Partition, b: &Binding) -> RatQT {
    lam.arm_legs()
        .into_iter()
        .map(|(_, a, l)| {
            RatQT::one() - pow(b.q(), a) * pow(b.t(), l + 1)
        })
        .product()
}

/// `c'_λ = Π_s (1 - q^{a(s)+1} t^{l(s)})` at a binding.
pub fn cprime_coeff(lam: &Partition, b: &Binding) -> RatQT {
    lam.arm_legs()
        .into_iter()
        .map(|(_, a, l)| {
            RatQT::one() - pow(b.q(), a + 1) * pow(b.t(), l)
        })
        .product()
}

fn pow(x: &RatQT, k: usize) -> RatQT {
    x.pow(k as i64).expect("non-negative power")
}

fn kind_scale(kind: MacKind, lam: &Partition, b: &Binding) -> Result<RatQT> {
    Ok(match kind {
        MacKind::P => RatQT::one(),
        MacKind::Q => c_coeff(lam, b).checked_div(&cprime_coeff(lam, b))?,
        MacKind::J => c_coeff(lam, b),
    })
}

/// `P_λ`, `Q_λ` or `J_λ` expanded in power sums.
pub fn mac_in_p(kind: MacKind, lam: &Partition, b: &Binding) -> Result<Vec<(Partition, RatQT)>> {
    let t = table(lam.size(), b)?;
    let s = kind_scale(kind, lam, b)?;
    Ok(t.parts
        .iter()
        .zip(t.p_expansion(lam))
        .filter(|(_, c)| !c.is_zero())
        .map(|(rho, c)| (rho.clone(), c.mul_ref(&s)))
        .collect())
}

/// `p_ρ` expanded in `P`, `Q` or `J`.
pub fn p_in_mac(kind: MacKind, rho: &Partition, b: &Binding) -> Result<Vec<(Partition, RatQT)>> {
    let t = table(rho.size(), b)?;
    let ri = t.index(rho);
    let mut out = Vec::new();
    for (li, lam) in t.parts.iter().enumerate() {
        let c = &t.p_coeffs[li][ri];
        if c.is_zero() {
            continue;
        }
        let coef = t.weights[ri]
            .mul_ref(c)
            .checked_div(&t.norms[li])?
            .checked_div(&kind_scale(kind, lam, b)?)?;
        out.push((lam.clone(), coef));
    }
    Ok(out)
}

fn mac_symfunc(kind: MacKind, lam: &Partition, b: &Binding) -> Result<SymFunc> {
    let f1 = FamilyLabel::f1();
    let mut f = SymFunc::zero();
    for (rho, c) in mac_in_p(kind, lam, b)? {
        f.add_term(
            vec![crate::symfunc::Factor::new(f1.clone(), BasisLabel::P, rho)],
            c,
        );
    }
    Ok(f)
}

/// `P_λ(x; q, t)` in the variables of the family `f1`, power-sum form.
pub fn macdonald_p(lam: &Partition, b: &Binding) -> Result<SymFunc> {
    mac_symfunc(MacKind::P, lam, b)
}

pub fn macdonald_q(lam: &Partition, b: &Binding) -> Result<SymFunc> {
    mac_symfunc(MacKind::Q, lam, b)
}

pub fn macdonald_j(lam: &Partition, b: &Binding) -> Result<SymFunc> {
    mac_symfunc(MacKind::J, lam, b)
}

/// `P_λ(x; t) = P_λ(x; 0, t)`.
pub fn hall_littlewood_p(lam: &Partition, t: &RatQT) -> Result<SymFunc> {
    macdonald_p(lam, &Binding::hall_littlewood(t.clone()))
}

/// `Q_ρ^μ(t)` for all `ρ, μ ⊢ n`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GreenTable {
    pub degree: usize,
    pub parts: Vec<Partition>,
    /// `q[ρ][μ]`.
    pub q: Vec<Vec<RatQT>>,
}

impl GreenTable {
    /// `p_ρ = Σ_μ Q_ρ^μ(t) t^{-n(μ)} P_μ(x; t^{-1})`, read off by pairing.
    pub fn build(n: usize) -> Result<Self> {
        let b = Binding::hall_littlewood(RatQT::t_pow(-1));
        let t = table(n, &b)?;
        let mut q = Vec::with_capacity(t.parts.len());
        for (ri, _) in t.parts.iter().enumerate() {
            let mut row = Vec::with_capacity(t.parts.len());
            for (mi, mu) in t.parts.iter().enumerate() {
                let c = t.weights[ri]
                    .mul_ref(&t.p_coeffs[mi][ri])
                    .checked_div(&t.norms[mi])?;
                row.push(c * RatQT::t_pow(mu.n_stat() as i64));
            }
            q.push(row);
        }
        Ok(GreenTable {
            degree: n,
            parts: t.parts.clone(),
            q,
        })
    }

    pub fn get(&self, rho: &Partition, mu: &Partition) -> &RatQT {
        let ct = classical::tables(self.degree);
        &self.q[ct.index[rho]][ct.index[mu]]
    }
}

pub fn green_polynomials(n: usize) -> Result<Arc<GreenTable>> {
    cache::green_table(n)
}

fn b_ratio(lam: &Partition, s: Cell, b: &Binding) -> Result<RatQT> {
    let a = lam.arm(s)?;
    let l = lam.leg(s)?;
    let num = RatQT::one() - pow(b.q(), a) * pow(b.t(), l + 1);
    let den = RatQT::one() - pow(b.q(), a + 1) * pow(b.t(), l);
    num.checked_div(&den)
}

/// `ψ'_{λ/μ} = Π_{s ∈ C∖R} b_λ(s)/b_μ(s)` for a vertical strip `λ/μ`.
pub fn pieri_psi_prime(lam: &Partition, mu: &Partition, b: &Binding) -> Result<RatQT> {
    let strip = lam
        .vertical_strip_cells(mu)
        .ok_or_else(|| Error::NotVerticalStrip(lam.to_string(), mu.to_string()))?;
    let rows: BTreeSet<usize> = strip.iter().map(|s| s.row).collect();
    let cols: BTreeSet<usize> = strip.iter().map(|s| s.col).collect();
    let mut acc = RatQT::one();
    for s in lam.cells() {
        if cols.contains(&s.col) && !rows.contains(&s.row) {
            acc = acc * b_ratio(lam, s, b)?.checked_div(&b_ratio(mu, s, b)?)?;
        }
    }
    Ok(acc)
}

/// `P_{λ/μ}` in power sums, from `⟨P_{λ/μ}, p_ρ⟩ = ⟨P_λ, Q_μ p_ρ⟩`.
pub fn skew_p(lam: &Partition, mu: &Partition, b: &Binding) -> Result<PVec> {
    let mut out = PVec::new();
    if !lam.contains(mu) {
        return Ok(out);
    }
    let k = lam.size() - mu.size();
    let tl = table(lam.size(), b)?;
    let qmu = mac_in_p(MacKind::Q, mu, b)?;
    let plam = tl.p_expansion(lam);
    for rho in partitions_of_usize(k) {
        let mut acc = RatQT::zero();
        for (sigma, c) in &qmu {
            let i = tl.index(&sigma.union(&rho));
            if !plam[i].is_zero() {
                acc = acc + c.mul_ref(&plam[i]).mul_ref(&tl.weights[i]);
            }
        }
        if !acc.is_zero() {
            out.insert(rho.clone(), acc.checked_div(&b.weight(&rho)?)?);
        }
    }
    Ok(out)
}

/// `C_{λ/μ}^ν = ⟨P_{λ/μ}, s_ν⟩` (Hall pairing).
pub fn schur_expansion_c(
    lam: &Partition,
    mu: &Partition,
    nu: &Partition,
    b: &Binding,
) -> Result<RatQT> {
    if lam.size() != mu.size() + nu.size() {
        return Ok(RatQT::zero());
    }
    let skew = skew_p(lam, mu, b)?;
    Ok(skew
        .iter()
        .map(|(rho, c)| c.mul_ref(&RatQT::from_int(character(nu, rho))))
        .sum())
}

/// `d_λ(ρ)(x) = z_ρ · [p_ρ] P_λ(x², x)` for a cycle type `ρ`.
pub fn d_coeff(lam: &Partition, rho: &Partition, x: &RatQT) -> Result<RatQT> {
    if lam.size() != rho.size() {
        return Err(Error::DegreeMismatch {
            expected: lam.size(),
            got: rho.size(),
        });
    }
    let b = Binding::new(x.mul_ref(x), x.clone());
    let t = table(lam.size(), &b)?;
    let c = &t.p_expansion(lam)[t.index(rho)];
    Ok(c.mul_ref(&RatQT::from_bigint(BigInt::from(rho.z()))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    fn c(n: i64) -> RatQT {
        RatQT::from_int(n)
    }

    fn mcoeffs(lam: &Partition, b: &Binding) -> Vec<RatQT> {
        table(lam.size(), b).unwrap().m_expansion(lam)
    }

    #[test]
    fn small_p() {
        let b = Binding::formal();
        assert_eq!(mcoeffs(&part![1], &b), vec![c(1)]);
        let (q, t) = (RatQT::q(), RatQT::t());
        let expect = (c(1) - &t) * (c(1) + &q) / (c(1) - &q * &t);
        assert_eq!(mcoeffs(&part![2], &b), vec![c(1), expect]);
        assert_eq!(mcoeffs(&part![1, 1], &b), vec![c(0), c(1)]);
    }

    #[test]
    fn c_values() {
        let b = Binding::formal();
        assert_eq!(c_coeff(&part![1], &b), c(1) - RatQT::t());
        assert_eq!(cprime_coeff(&part![1], &b), c(1) - RatQT::q());
        let b = Binding::q_q2();
        let q = RatQT::q();
        assert_eq!(
            cprime_coeff(&part![2], &b),
            (c(1) - &q * &q) * (c(1) - &q)
        );
        assert_eq!(
            cprime_coeff(&part![1, 1], &b),
            (c(1) - RatQT::q_pow(3)) * (c(1) - &q)
        );
    }

    #[test]
    fn hall_littlewood_small() {
        let t = RatQT::t();
        let b = Binding::hall_littlewood(t.clone());
        assert_eq!(mcoeffs(&part![1, 1], &b), vec![c(0), c(1)]);
        assert_eq!(mcoeffs(&part![2], &b), vec![c(1), c(1) - &t]);
        for n in 1..=5 {
            let col = Partition::column(n);
            let hl = hall_littlewood_p(&col, &RatQT::q_pow(-2)).unwrap();
            assert_eq!(hl, SymFunc::e(&FamilyLabel::f1(), n).to_p().unwrap());
        }
    }

    #[test]
    fn green_small() {
        let t = RatQT::t();
        let g1 = green_polynomials(1).unwrap();
        assert_eq!(*g1.get(&part![1], &part![1]), c(1));
        let g = green_polynomials(2).unwrap();
        assert_eq!(*g.get(&part![2], &part![2]), c(1));
        assert_eq!(*g.get(&part![2], &part![1, 1]), c(1) - &t);
        assert_eq!(*g.get(&part![1, 1], &part![1, 1]), c(1) + &t);
    }

    #[test]
    fn psi_prime_examples() {
        let b = Binding::formal();
        let (q, t) = (RatQT::q(), RatQT::t());
        assert_eq!(pieri_psi_prime(&part![2], &part![1], &b).unwrap(), c(1));
        assert_eq!(
            pieri_psi_prime(&part![1, 1], &part![1], &b).unwrap(),
            (c(1) - &q) * (c(1) + &t) / (c(1) - &q * &t)
        );
        assert_eq!(pieri_psi_prime(&part![2, 1], &part![2, 1], &b).unwrap(), c(1));
        assert!(matches!(
            pieri_psi_prime(&part![2], &part![], &b),
            Err(Error::NotVerticalStrip(_, _))
        ));
    }

    #[test]
    fn skew_examples() {
        let b = Binding::formal();
        let one: PVec = [(Partition::empty(), c(1))].into_iter().collect();
        assert_eq!(skew_p(&part![2], &part![2], &b).unwrap(), one);
        assert!(skew_p(&part![2], &part![3], &b).unwrap().is_empty());
        // adjointness against h_1 = p_1
        let sk = skew_p(&part![1, 1], &part![1], &b).unwrap();
        let lhs = sk[&part![1]].mul_ref(&b.weight(&part![1]).unwrap());
        let f1 = FamilyLabel::f1();
        let rhs = crate::symfunc::inner_qt(
            &macdonald_p(&part![1, 1], &b).unwrap(),
            &macdonald_q(&part![1], &b)
                .unwrap()
                .multiply(&SymFunc::h(&f1, 1))
                .unwrap(),
            &b,
        )
        .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn c_examples() {
        let b = Binding::q_q2();
        let q = RatQT::q();
        assert_eq!(
            schur_expansion_c(&part![2], &part![], &part![1, 1], &b).unwrap(),
            &q / &(c(1) + &q + &q * &q)
        );
        assert!(schur_expansion_c(&part![1, 1], &part![], &part![2], &Binding::formal())
            .unwrap()
            .is_zero());
        assert_eq!(
            schur_expansion_c(&part![2], &part![], &part![2], &b).unwrap(),
            c(1)
        );
        assert!(schur_expansion_c(&part![2], &part![], &part![2, 1], &b)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn d_examples() {
        let q = RatQT::q();
        assert_eq!(d_coeff(&part![1], &part![1], &q).unwrap(), c(1));
        assert_eq!(d_coeff(&part![1, 1], &part![1, 1], &q).unwrap(), c(1));
        assert_eq!(d_coeff(&part![1, 1], &part![2], &q).unwrap(), c(-1));
    }
}
