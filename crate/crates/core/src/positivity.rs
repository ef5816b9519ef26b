//! Non-negativity scans for `C_{λ/μ}^ν(q,q²)`, the Littlewood-Richardson
//! vanishing criterion, and Haglund-type polynomiality checks.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::macdonald::{mac_in_p, schur_expansion_c, MacKind};
use crate::partitions::{partitions_of_usize, partitions_up_to, Partition};
use crate::ratfunc::RatQT;
use crate::symfunc::{character, pvec_mul, Binding, PVec};

/// `s_λ` in power sums with rational coefficients.
fn schur_p(lam: &Partition) -> BTreeMap<Partition, BigRational> {
    partitions_of_usize(lam.size())
        .into_iter()
        .filter_map(|rho| {
            let chi = character(lam, &rho);
            (chi != 0).then(|| {
                let c = BigRational::new(BigInt::from(chi), BigInt::from(rho.z()));
                (rho, c)
            })
        })
        .collect()
}

/// `⟨s_α, Π s_{β_i}⟩`.
pub fn lr_coefficient(alpha: &Partition, factors: &[Partition]) -> BigInt {
    if factors.iter().map(Partition::size).sum::<usize>() != alpha.size() {
        return BigInt::zero();
    }
    let mut acc: BTreeMap<Partition, BigRational> =
        [(Partition::empty(), BigRational::from_integer(1.into()))].into();
    for f in factors {
        let s = schur_p(f);
        let mut next: BTreeMap<Partition, BigRational> = BTreeMap::new();
        for (a, ca) in &acc {
            for (b, cb) in &s {
                *next.entry(a.union(b)).or_insert_with(BigRational::zero) += ca * cb;
            }
        }
        acc = next;
    }
    let total: BigRational = acc
        .iter()
        .map(|(rho, c)| c * BigRational::from_integer(BigInt::from(character(alpha, rho))))
        .sum();
    total.to_integer()
}

/// `⟨s_{λ∪λ}, s_{μ∪μ} s_ν s_ν⟩ = 0`; forces `C_{λ/μ}^ν(q,q²) ≡ 0`.
pub fn vanishing_predicate(lam: &Partition, mu: &Partition, nu: &Partition) -> bool {
    lr_coefficient(
        &lam.union_double(),
        &[mu.union_double(), nu.clone(), nu.clone()],
    )
    .is_zero()
}

fn decimal_coeffs(v: Vec<BigInt>) -> Vec<String> {
    v.into_iter().map(|c| c.to_string()).collect()
}

/// `⟨J_λ(q,q²), s_ν⟩ / (1-q)^{|λ|}` as coefficients in `q` when it lies in `ℕ[q]`.
pub fn haglund_check(lam: &Partition, nu: &Partition) -> Result<Option<Vec<BigInt>>> {
    if lam.size() != nu.size() {
        return Ok(None);
    }
    let j = mac_in_p(MacKind::J, lam, &Binding::q_q2())?;
    let pairing: RatQT = j
        .iter()
        .map(|(rho, c)| c.mul_ref(&RatQT::from_int(character(nu, rho))))
        .sum();
    normalize(pairing, lam.size())
}

fn normalize(x: RatQT, k: usize) -> Result<Option<Vec<BigInt>>> {
    let base = RatQT::one() - RatQT::q();
    let v = x.checked_div(&base.pow(k as i64)?)?;
    Ok(v.nonneg_q_coeffs())
}

/// `⟨J_μ^⊥ J_λ, s_ν⟩ / (1-q)^{|λ|+|μ|}` at `(q,q²)`, where `J_μ^⊥` is adjoint
/// to multiplication by `J_μ` under the `(q,q²)` pairing.
pub fn haglund_skew_check(
    lam: &Partition,
    mu: &Partition,
    nu: &Partition,
) -> Result<Option<Vec<BigInt>>> {
    if lam.size() != mu.size() + nu.size() {
        return Ok(None);
    }
    let b = Binding::q_q2();
    let jl: PVec = mac_in_p(MacKind::J, lam, &b)?.into_iter().collect();
    let jm: PVec = mac_in_p(MacKind::J, mu, &b)?.into_iter().collect();
    let mut total = RatQT::zero();
    for rho in partitions_of_usize(nu.size()) {
        let chi = character(nu, &rho);
        if chi == 0 {
            continue;
        }
        let prod = pvec_mul(&jm, &[(rho.clone(), RatQT::one())].into_iter().collect());
        let mut pairing = RatQT::zero();
        for (sigma, c) in &prod {
            if let Some(d) = jl.get(sigma) {
                pairing = pairing + c.mul_ref(d).mul_ref(&b.weight(sigma)?);
            }
        }
        // coefficient of p_ρ in J_μ^⊥ J_λ, paired with s_ν
        let coeff = pairing.checked_div(&b.weight(&rho)?)?;
        total = total + coeff.scale_int(chi);
    }
    normalize(total, lam.size() + mu.size())
}

/// One `(λ, μ, ν)` triple of a scan.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PositivityReport {
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
    pub coefficient: RatQT,
    /// `q0 ↦ C(q0)`, both as decimal rationals.
    pub evaluations: BTreeMap<String, String>,
    pub vanishing_predicted: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub haglund_certificate: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FalsificationKind {
    Negative { q0: String, value: String },
    VanishingNotZero,
    Haglund,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Falsification {
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
    #[serde(flatten)]
    pub kind: FalsificationKind,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanResult {
    pub reports: Vec<PositivityReport>,
    pub falsifications: Vec<Falsification>,
}

/// Triples with `|λ| ≤ max_n`, `|μ| ≤ max_mu`, `μ ⊆ λ`, `ν ⊢ |λ| - |μ|`, in a
/// fixed order.
pub fn scan_triples(max_n: usize, max_mu: usize) -> Vec<(Partition, Partition, Partition)> {
    let mut out = Vec::new();
    for lam in partitions_up_to(max_n) {
        for mu in partitions_up_to(max_mu.min(lam.size())) {
            if !lam.contains(&mu) {
                continue;
            }
            for nu in partitions_of_usize(lam.size() - mu.size()) {
                out.push((lam.clone(), mu.clone(), nu));
            }
        }
    }
    out
}

fn report(
    lam: &Partition,
    mu: &Partition,
    nu: &Partition,
    qs: &[BigRational],
) -> Result<(PositivityReport, Vec<Falsification>)> {
    let c = schur_expansion_c(lam, mu, nu, &Binding::q_q2())?;
    let vanish = vanishing_predicate(lam, mu, nu);
    let mut evaluations = BTreeMap::new();
    let mut bad = Vec::new();
    let fals = |kind| Falsification {
        lambda: lam.clone(),
        mu: mu.clone(),
        nu: nu.clone(),
        kind,
    };
    for q0 in qs {
        let v = c.eval_q(q0)?;
        if v.is_negative() {
            bad.push(fals(FalsificationKind::Negative {
                q0: q0.to_string(),
                value: v.to_string(),
            }));
        }
        evaluations.insert(q0.to_string(), v.to_string());
    }
    if vanish && !c.is_zero() {
        bad.push(fals(FalsificationKind::VanishingNotZero));
    }
    let rep = PositivityReport {
        lambda: lam.clone(),
        mu: mu.clone(),
        nu: nu.clone(),
        coefficient: c,
        evaluations,
        vanishing_predicted: vanish,
        haglund_certificate: None,
    };
    Ok((rep, bad))
}

fn collect(results: Vec<Result<(PositivityReport, Vec<Falsification>)>>) -> Result<ScanResult> {
    let mut out = ScanResult::default();
    for r in results {
        let (rep, bad) = r?;
        out.reports.push(rep);
        out.falsifications.extend(bad);
    }
    Ok(out)
}

/// Evaluates every triple of [`scan_triples`] at each `q0` and records
/// negative values and vanishing-criterion failures. Runs on the current
/// rayon pool; output order is independent of scheduling.
pub fn positivity_scan(max_n: usize, max_mu: usize, qs: &[BigRational]) -> Result<ScanResult> {
    let triples = scan_triples(max_n, max_mu);
    let results: Vec<_> = triples
        .par_iter()
        .map(|(l, m, n)| report(l, m, n, qs))
        .collect();
    collect(results)
}

/// Every triple with `|λ| ≤ max_n` whose vanishing predicate holds, with the
/// coefficient `C`. A nonzero `C` is a falsification.
pub fn vanishing_scan(max_n: usize) -> Result<ScanResult> {
    let triples: Vec<_> = scan_triples(max_n, max_n)
        .into_iter()
        .filter(|(l, m, n)| vanishing_predicate(l, m, n))
        .collect();
    let results: Vec<_> = triples
        .par_iter()
        .map(|(l, m, n)| report(l, m, n, &[]))
        .collect();
    collect(results)
}

/// `haglund_skew_check` over triples with `|λ| ≤ max_n`, `|μ| ≤ max_mu`.
/// Missing certificates are reported, not treated as errors.
pub fn haglund_scan(max_n: usize, max_mu: usize) -> Result<ScanResult> {
    let triples = scan_triples(max_n, max_mu);
    let results: Vec<_> = triples
        .par_iter()
        .map(|(l, m, n)| -> Result<_> {
            let cert = haglund_skew_check(l, m, n)?;
            let rep = PositivityReport {
                lambda: l.clone(),
                mu: m.clone(),
                nu: n.clone(),
                coefficient: schur_expansion_c(l, m, n, &Binding::q_q2())?,
                evaluations: BTreeMap::new(),
                vanishing_predicted: vanishing_predicate(l, m, n),
                haglund_certificate: cert.clone().map(decimal_coeffs),
            };
            let bad = if cert.is_none() {
                vec![Falsification {
                    lambda: l.clone(),
                    mu: m.clone(),
                    nu: n.clone(),
                    kind: FalsificationKind::Haglund,
                }]
            } else {
                Vec::new()
            };
            Ok((rep, bad))
        })
        .collect();
    collect(results)
}

/// `C(q^{-1}, q^{-2}) = C(q, q²)`, from `P_{λ/μ}(q^{-1},t^{-1}) = P_{λ/μ}(q,t)`.
pub fn inversion_identity(lam: &Partition, mu: &Partition, nu: &Partition) -> Result<bool> {
    let c = schur_expansion_c(lam, mu, nu, &Binding::q_q2())?;
    let inv = c.subst(&RatQT::q_pow(-1), &RatQT::t())?;
    Ok(inv == c)
}

/// At `q = t`, `C` is the skew Littlewood-Richardson coefficient.
pub fn classical_limit(lam: &Partition, mu: &Partition, nu: &Partition) -> Result<bool> {
    let b = Binding::new(RatQT::q(), RatQT::q());
    let c = schur_expansion_c(lam, mu, nu, &b)?;
    let lr = lr_coefficient(lam, &[mu.clone(), nu.clone()]);
    Ok(c == RatQT::from_bigint(lr))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use num_traits::One;

    fn q() -> RatQT {
        RatQT::q()
    }

    #[test]
    fn lr_examples() {
        assert_eq!(lr_coefficient(&part![4], &[part![2], part![2]]), BigInt::one());
        assert!(lr_coefficient(&part![1, 1, 1, 1], &[part![2], part![2]]).is_zero());
        assert_eq!(lr_coefficient(&part![3, 2, 1], &[part![2, 1], part![2, 1]]), 2.into());
        assert_eq!(lr_coefficient(&part![2, 1], &[part![2, 1]]), BigInt::one());
        assert!(lr_coefficient(&part![2], &[part![1]]).is_zero());
    }

    #[test]
    fn vanishing_examples() {
        assert!(vanishing_predicate(&part![1, 1], &part![], &part![2]));
        assert!(!vanishing_predicate(&part![2], &part![], &part![2]));
        assert!(!vanishing_predicate(&part![2], &part![2], &part![]));
    }

    #[test]
    fn witnesses() {
        let b = Binding::q_q2();
        let c = schur_expansion_c(&part![2], &part![], &part![1, 1], &b).unwrap();
        assert_eq!(c, q() / (RatQT::one() + q() + q() * q()));
        let three = BigRational::from_integer(3.into());
        assert_eq!(c.eval_q(&three).unwrap(), BigRational::new(3.into(), 13.into()));
        assert!(schur_expansion_c(&part![1, 1], &part![], &part![2], &b)
            .unwrap()
            .is_zero());
    }

    #[test]
    fn haglund_examples() {
        // J_1(q,q²) = (1-q²) p_1
        assert_eq!(
            haglund_check(&part![1], &part![1]).unwrap(),
            Some(vec![BigInt::one(), BigInt::one()])
        );
        assert!(haglund_check(&part![1, 1], &part![1, 1]).unwrap().is_some());
        let v = haglund_check(&part![2], &part![1, 1]).unwrap().unwrap();
        assert!(v[0].is_zero());
        assert_eq!(
            haglund_skew_check(&part![1], &part![1], &part![]).unwrap(),
            Some(vec![BigInt::one(), BigInt::one()])
        );
        for lam in partitions_up_to(3) {
            for nu in partitions_of_usize(lam.size()) {
                assert_eq!(
                    haglund_skew_check(&lam, &part![], &nu).unwrap(),
                    haglund_check(&lam, &nu).unwrap()
                );
            }
        }
    }

    #[test]
    fn small_scan() {
        let qs: Vec<BigRational> = [3, 5, 9]
            .iter()
            .map(|&x| BigRational::from_integer(x.into()))
            .collect();
        let r = positivity_scan(4, 2, &qs).unwrap();
        assert!(r.falsifications.is_empty());
        assert_eq!(r.reports.len(), scan_triples(4, 2).len());
        assert!(vanishing_scan(4).unwrap().falsifications.is_empty());
    }

    #[test]
    fn inversion_and_limit() {
        for (l, m, n) in scan_triples(4, 2) {
            assert!(inversion_identity(&l, &m, &n).unwrap(), "{l} {m} {n}");
            assert!(classical_limit(&l, &m, &n).unwrap(), "{l} {m} {n}");
        }
    }
}
