//! Integer and rational transition data between `p` and the classical bases
//! `m`, `e`, `h`, `s`, one table per degree.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;
use parking_lot::Mutex;

use crate::partitions::{partitions_of_usize, Partition};

pub(crate) struct ClassicalTables {
    pub parts: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    /// `p_ρ = Σ_λ l_mat[ρ][λ] m_λ`.
    pub l_mat: Vec<Vec<BigInt>>,
    /// `m_λ = Σ_ρ m_in_p[λ][ρ] p_ρ`.
    pub m_in_p: Vec<Vec<BigRational>>,
    pub e_in_p: Vec<Vec<BigRational>>,
    pub h_in_p: Vec<Vec<BigRational>>,
    pub p_in_e: Vec<Vec<BigRational>>,
    pub p_in_h: Vec<Vec<BigRational>>,
    /// `chi[λ][ρ]`, irreducible character of `S_n` at cycle type `ρ`.
    pub chi: Vec<Vec<BigInt>>,
}

static TABLES: Lazy<Mutex<HashMap<usize, Arc<ClassicalTables>>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

pub(crate) fn tables(n: usize) -> Arc<ClassicalTables> {
    if let Some(t) = TABLES.lock().get(&n) {
        return t.clone();
    }
    let t = Arc::new(ClassicalTables::build(n));
    TABLES.lock().entry(n).or_insert(t).clone()
}

impl ClassicalTables {
    fn build(n: usize) -> Self {
        let parts = partitions_of_usize(n);
        let index: HashMap<Partition, usize> =
            parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let k = parts.len();

        let mut l_mat = vec![vec![BigInt::zero(); k]; k];
        for (i, rho) in parts.iter().enumerate() {
            for (j, lam) in parts.iter().enumerate() {
                l_mat[i][j] = BigInt::from(count_fillings(rho.parts(), lam.parts()));
            }
        }
        let l_rat: Vec<Vec<BigRational>> = l_mat
            .iter()
            .map(|r| r.iter().map(|c| BigRational::from_integer(c.clone())).collect())
            .collect();
        let m_in_p = invert(&l_rat);

        let e_n = |m: usize, signed: bool| -> Vec<(Partition, BigRational)> {
            partitions_of_usize(m)
                .into_iter()
                .map(|rho| {
                    let s = if signed { rho.sign() } else { 1 };
                    let c = BigRational::new(BigInt::from(s), BigInt::from(rho.z()));
                    (rho, c)
                })
                .collect()
        };
        let build_mult = |signed: bool| -> Vec<Vec<BigRational>> {
            parts
                .iter()
                .map(|lam| {
                    let mut acc: Vec<(Partition, BigRational)> =
                        vec![(Partition::empty(), BigRational::one())];
                    for &part in lam.parts() {
                        let factor = e_n(part, signed);
                        let mut next: HashMap<Partition, BigRational> = HashMap::new();
                        for (a, ca) in &acc {
                            for (b, cb) in &factor {
                                *next.entry(a.union(b)).or_insert_with(BigRational::zero) +=
                                    ca * cb;
                            }
                        }
                        acc = next.into_iter().collect();
                    }
                    let mut row = vec![BigRational::zero(); k];
                    for (rho, c) in acc {
                        row[index[&rho]] = c;
                    }
                    row
                })
                .collect()
        };
        let e_in_p = build_mult(true);
        let h_in_p = build_mult(false);
        let p_in_e = invert(&e_in_p);
        let p_in_h = invert(&h_in_p);

        let chi = parts
            .iter()
            .map(|lam| parts.iter().map(|rho| BigInt::from(character(lam, rho))).collect())
            .collect();

        ClassicalTables {
            parts,
            index,
            l_mat,
            m_in_p,
            e_in_p,
            h_in_p,
            p_in_e,
            p_in_h,
            chi,
        }
    }
}

/// Number of maps from the parts of `rho` to the rows of `lam` whose fibres
/// sum to the row lengths.
fn count_fillings(rho: &[usize], lam: &[usize]) -> u64 {
    fn rec(rho: &[usize], cap: &mut [usize]) -> u64 {
        let Some((&first, rest)) = rho.split_first() else {
            return u64::from(cap.iter().all(|&c| c == 0));
        };
        let mut total = 0;
        for i in 0..cap.len() {
            if cap[i] >= first {
                cap[i] -= first;
                total += rec(rest, cap);
                cap[i] += first;
            }
        }
        total
    }
    if rho.iter().sum::<usize>() != lam.iter().sum::<usize>() {
        return 0;
    }
    let mut cap = lam.to_vec();
    rec(rho, &mut cap)
}

/// Gauss-Jordan inverse of a nonsingular square matrix.
pub(crate) fn invert(a: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let n = a.len();
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| {
                if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .expect("matrix is invertible");
        m.swap(col, piv);
        let inv = m[col][col].recip();
        for x in m[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                let (src, dst) = if r < col {
                    let (lo, hi) = m.split_at_mut(col);
                    (&hi[0], &mut lo[r])
                } else {
                    let (lo, hi) = m.split_at_mut(r);
                    (&lo[col], &mut hi[0])
                };
                for (d, s) in dst.iter_mut().zip(src.iter()) {
                    if !s.is_zero() {
                        *d -= &f * s;
                    }
                }
            }
        }
    }
    m.into_iter().map(|r| r[n..].to_vec()).collect()
}

static CHAR_MEMO: Lazy<Mutex<HashMap<(Partition, Partition), i64>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// `χ^λ(ρ)` by the Murnaghan-Nakayama rule on beta-sets.
pub fn character(lam: &Partition, rho: &Partition) -> i64 {
    if lam.size() != rho.size() {
        return 0;
    }
    if rho.is_empty() {
        return 1;
    }
    let key = (lam.clone(), rho.clone());
    if let Some(&v) = CHAR_MEMO.lock().get(&key) {
        return v;
    }
    let k = rho.part(1);
    let rest = Partition::from_unsorted(rho.parts()[1..].to_vec());
    let l = lam.len();
    let beta: Vec<usize> = (0..l).map(|i| lam.parts()[i] + (l - 1 - i)).collect();
    let mut total = 0i64;
    for (i, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > b - k && x < b).count();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        let mut nb = beta.clone();
        nb[i] = b - k;
        nb.sort_unstable_by(|a, b| b.cmp(a));
        let m = nb.len();
        let parts: Vec<usize> = nb
            .iter()
            .enumerate()
            .map(|(j, &x)| x - (m - 1 - j))
            .filter(|&p| p > 0)
            .collect();
        total += sign * character(&Partition::from_unsorted(parts), &rest);
    }
    CHAR_MEMO.lock().insert(key, total);
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    #[test]
    fn power_sum_in_monomials() {
        let t = tables(2);
        // p_2 = m_2, p_11 = m_2 + 2 m_11
        assert_eq!(t.l_mat[0], vec![BigInt::from(1), BigInt::from(0)]);
        assert_eq!(t.l_mat[1], vec![BigInt::from(1), BigInt::from(2)]);
    }

    #[test]
    fn characters_small() {
        assert_eq!(character(&part![2, 1], &part![3]), -1);
        assert_eq!(character(&part![2, 1], &part![1, 1, 1]), 2);
        assert_eq!(character(&part![2, 1], &part![2, 1]), 0);
        assert_eq!(character(&part![1, 1], &part![2]), -1);
        assert_eq!(character(&part![3, 1], &part![2, 2]), -1);
    }

    #[test]
    fn column_orthogonality() {
        for n in 1..=6 {
            let t = tables(n);
            for (a, ra) in t.parts.iter().enumerate() {
                for (b, _) in t.parts.iter().enumerate() {
                    let s: BigInt = (0..t.parts.len())
                        .map(|l| &t.chi[l][a] * &t.chi[l][b])
                        .sum();
                    let expect = if a == b { BigInt::from(ra.z()) } else { BigInt::zero() };
                    assert_eq!(s, expect);
                }
            }
        }
    }
}
