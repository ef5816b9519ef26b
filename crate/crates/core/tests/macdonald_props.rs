use macsym_core::macdonald::{
    green_polynomials, mac_in_p, macdonald_p, macdonald_q, table, MacKind, MacTable,
};
use macsym_core::partitions::{partitions_of, partitions_up_to};
use macsym_core::spherical::delta_specialize;
use macsym_core::symfunc::{omega, omega_qt};
use macsym_core::{Binding, FamilyLabel, Partition, RatQT, SymFunc};
use proptest::prelude::*;

fn parts(n: usize) -> Vec<Partition> {
    partitions_of(n as i64).unwrap()
}

fn strictly_below(a: &Partition, b: &Partition) -> bool {
    a != b && a.dominance_leq(b).unwrap()
}

/// A linear extension of dominance (smaller first) chosen by `priority`.
fn linear_extension(n: usize, priority: &[u32]) -> Vec<Partition> {
    let mut left: Vec<(u32, Partition)> = priority.iter().copied().zip(parts(n)).collect();
    let mut out = Vec::new();
    while !left.is_empty() {
        let pick = (0..left.len())
            .filter(|&i| !left.iter().any(|(_, b)| strictly_below(b, &left[i].1)))
            .min_by_key(|&i| left[i].0)
            .unwrap();
        out.push(left.remove(pick).1);
    }
    out
}

fn same_table(a: &MacTable, b: &MacTable, n: usize) -> bool {
    parts(n).iter().all(|l| a.p_expansion(l) == b.p_expansion(l))
}

#[test]
fn gram_schmidt_by_n_statistic() {
    let formal = Binding::formal();
    for n in 1..=6 {
        let mut order = parts(n);
        order.sort_by_key(|l| std::cmp::Reverse(l.n_stat()));
        let alt = MacTable::build_with_order(n, &formal, &order).unwrap();
        assert!(same_table(&alt, &table(n, &formal).unwrap(), n), "n={n}");
    }
}

#[test]
fn gram_schmidt_rejects_non_extensions() {
    let mut order = parts(3);
    order.reverse();
    order.swap(0, 2);
    assert!(MacTable::build_with_order(3, &Binding::formal(), &order).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn gram_schmidt_order_independent(
        (n, priority) in (2usize..=6).prop_flat_map(|n| {
            (Just(n), Just(parts(n).len()).prop_flat_map(|k| {
                prop::collection::vec(0u32..1000, k)
            }))
        })
    ) {
        let formal = Binding::formal();
        let order = linear_extension(n, &priority);
        let alt = MacTable::build_with_order(n, &formal, &order).unwrap();
        prop_assert!(same_table(&alt, &table(n, &formal).unwrap(), n));
    }
}

#[test]
fn q_duality() {
    let b = Binding::formal();
    for lam in partitions_up_to(5) {
        let lhs = omega_qt(&macdonald_q(&lam, &b).unwrap(), &b).unwrap();
        let rhs = macdonald_p(&lam.conjugate(), &b.swapped()).unwrap();
        assert_eq!(lhs, rhs, "{lam}");
    }
}

#[test]
fn hook_content_evaluation() {
    let triv = FamilyLabel::triv();
    for lam in partitions_up_to(5) {
        let j = mac_in_p(MacKind::J, &lam.conjugate(), &Binding::q2_q()).unwrap();
        let f = SymFunc::from_pvec(&triv, &j.into_iter().collect());
        let got = delta_specialize(&omega(&f).unwrap()).unwrap();
        let exp: i64 = lam.cells().map(|s| lam.arm_colength(s).unwrap() as i64).sum();
        let sign = if lam.size() % 2 == 0 { 1 } else { -1 };
        assert_eq!(got, RatQT::q_pow(exp).scale_int(sign), "{lam}");
    }
}

#[test]
fn green_columns_closed_forms() {
    let one = RatQT::one();
    let tpow = |k: usize| RatQT::t_pow(k as i64) - &one;
    for n in 1..=5 {
        let g = green_polynomials(n).unwrap();
        let ident = Partition::column(n);
        let regular = Partition::row(n);
        let flag: RatQT = (1..=n).fold(one.clone(), |acc, i| acc * tpow(i));
        for rho in parts(n) {
            assert!(g.get(&rho, &regular).is_one(), "regular column at {rho}");
            let torus = rho.parts().iter().fold(one.clone(), |acc, &r| acc * tpow(r));
            let expect = flag.checked_div(&torus).unwrap().scale_int(rho.sign());
            assert_eq!(*g.get(&rho, &ident), expect, "identity column at {rho}");
        }
    }
}
