use macsym_core::ratfunc::PolyQT;
use macsym_core::RatQT;
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn poly() -> impl Strategy<Value = PolyQT> {
    prop::collection::vec((-3i64..=3, 0usize..=2, 0usize..=2), 1..=3)
        .prop_map(|ts| PolyQT::from_terms(ts.into_iter().map(|(c, a, b)| (BigInt::from(c), a, b))))
}

fn nonzero_poly() -> impl Strategy<Value = PolyQT> {
    poly().prop_filter("nonzero", |p| !p.is_zero())
}

fn rat() -> impl Strategy<Value = RatQT> {
    (poly(), nonzero_poly()).prop_map(|(n, d)| RatQT::new(n, d).unwrap())
}

fn q_rat() -> impl Strategy<Value = RatQT> {
    rat().prop_filter_map("pole at t = q^2", |x| x.subst_t_q2().ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]

    #[test]
    fn field_axioms(a in rat(), b in rat(), c in rat()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        prop_assert_eq!(&a * &RatQT::one(), a.clone());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2_000))]

    #[test]
    fn normal_form_is_canonical(n in poly(), d in nonzero_poly(), k in nonzero_poly()) {
        let x = RatQT::new(n.clone(), d.clone()).unwrap();
        let scaled = RatQT::new(n.mul(&k), d.mul(&k)).unwrap();
        prop_assert_eq!(&x, &scaled);
        let again = RatQT::new(x.numer().clone(), x.denom().clone()).unwrap();
        prop_assert_eq!(&again, &x);
        prop_assert_eq!(again.numer(), x.numer());
        prop_assert_eq!(again.denom(), x.denom());
    }

    #[test]
    fn substitutions_are_ring_homomorphisms(a in rat(), b in rat()) {
        let f = RatQT::subst_q_q2;
        prop_assert_eq!(f(&(&a * &b)), &f(&a) * &f(&b));
        prop_assert_eq!(f(&(&a + &b)), &f(&a) + &f(&b));
        prop_assert_eq!(a.subst_q_pow(3), a.subst(&RatQT::q_pow(3), &RatQT::t()).unwrap());

        let (sa, sb) = (a.subst_t_q2(), b.subst_t_q2());
        prop_assume!(sa.is_ok() && sb.is_ok());
        let (sa, sb) = (sa.unwrap(), sb.unwrap());
        prop_assert_eq!((&a * &b).subst_t_q2(), Ok(&sa * &sb));
        prop_assert_eq!((&a + &b).subst_t_q2(), Ok(&sa + &sb));
    }

    #[test]
    fn evaluation_is_multiplicative(a in q_rat(), b in q_rat(), num in -5i64..=5, den in 1i64..=4) {
        let q0 = BigRational::new(num.into(), den.into());
        let (ea, eb) = (a.eval_q(&q0), b.eval_q(&q0));
        prop_assume!(ea.is_ok() && eb.is_ok());
        let (ea, eb) = (ea.unwrap(), eb.unwrap());
        let prod = (&a * &b).eval_q(&q0).unwrap();
        prop_assert_eq!(prod, &ea * &eb);
        let sum = (&a + &b).eval_q(&q0).unwrap();
        prop_assert_eq!(sum, ea + eb);
    }
}
