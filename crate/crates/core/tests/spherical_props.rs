use macsym_core::charmap::{char_types, CharData};
use macsym_core::macdonald::{green_polynomials, hall_littlewood_p, mac_in_p, MacKind};
use macsym_core::partitions::partitions_of;
use macsym_core::spherical::{
    delta_specialize, e_pairing_identity, unipotent_projection, value_route_a, value_route_b,
    UnipotentCoset,
};
use macsym_core::symfunc::omega;
use macsym_core::{part, Binding, FamilyLabel, Partition, RatQT, SymFunc};
use num_rational::BigRational;
use num_traits::{One, Signed};

/// `∏_φ p_{λ(φ)}(φ)`.
fn power_sum_product(ch: &CharData) -> SymFunc {
    ch.lambda
        .iter()
        .fold(SymFunc::one(), |acc, (f, p)| acc.multiply(&SymFunc::p(f, p.clone())).unwrap())
}

#[test]
fn e_pairing_on_power_sums() {
    let mut checked = 0;
    for n in 1..=5 {
        for ch in char_types(n, n as u32) {
            let f = power_sum_product(&ch);
            assert!(e_pairing_identity(&f).unwrap(), "{}", ch.lambda);
            checked += 1;
        }
    }
    assert_eq!(checked, 77);
}

#[test]
fn generating_identity() {
    let tinv = RatQT::t_pow(-1);
    let f1 = FamilyLabel::f1();
    for n in 1..=4 {
        let green = green_polynomials(n).unwrap();
        let mus = partitions_of(n as i64).unwrap();
        let hl: Vec<SymFunc> = mus.iter().map(|m| hall_littlewood_p(m, &tinv).unwrap()).collect();
        for ch in char_types(n, 2) {
            let rho = ch
                .lambda
                .iter()
                .fold(Partition::empty(), |acc, (f, p)| acc.union(&p.scale(f.deg as usize)));
            let mut lhs = SymFunc::zero();
            for (mu, p) in mus.iter().zip(&hl) {
                let zeta = green.get(&rho, mu).mul_ref(&RatQT::t_pow(-(mu.n_stat() as i64)));
                lhs = lhs.add(&p.scale(&zeta));
            }
            let sign = if (n - ch.lambda.total_len()) % 2 == 0 { 1 } else { -1 };
            let rhs = unipotent_projection(&power_sum_product(&ch).scale(&RatQT::from_int(sign)))
                .unwrap();
            assert_eq!(lhs.to_p().unwrap(), rhs.to_p().unwrap(), "{}", ch.lambda);
            assert_eq!(rhs.to_p().unwrap(), SymFunc::p(&f1, rho));
        }
    }
}

#[test]
fn trivial_family_values_are_bounded() {
    let qs: Vec<BigRational> = [3, 5, 9].iter().map(|&x| BigRational::from_integer(x.into())).collect();
    let mut checked = 0;
    for n in 1..=4 {
        for ch in char_types(n, 2) {
            for mu in partitions_of(n as i64).unwrap() {
                let v = value_route_a(&ch, &UnipotentCoset::new(mu.clone())).unwrap();
                for q0 in &qs {
                    let x = v.eval_q(q0).unwrap();
                    assert!(x.abs() <= BigRational::one(), "λ={} μ={mu} q={q0}: {x}", ch.lambda);
                    checked += 1;
                }
            }
        }
    }
    assert!(checked > 300);
}

#[test]
fn delta_hook_example() {
    let j = mac_in_p(MacKind::J, &part![2, 1].conjugate(), &Binding::q2_q()).unwrap();
    let f = SymFunc::from_pvec(&FamilyLabel::triv(), &j.into_iter().collect());
    assert_eq!(delta_specialize(&omega(&f).unwrap()).unwrap(), RatQT::q().scale_int(-1));
}

#[test]
fn routes_agree_on_degree_two_families() {
    for n in 1..=4 {
        for mu in partitions_of(n as i64).unwrap() {
            let coset = UnipotentCoset::new(mu);
            for ch in char_types(n, 2) {
                assert_eq!(
                    value_route_a(&ch, &coset).unwrap(),
                    value_route_b(&ch, &coset).unwrap(),
                    "λ={} μ={}",
                    ch.lambda,
                    coset.mu
                );
            }
        }
    }
}
