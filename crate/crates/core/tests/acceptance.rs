//! One PASS/FAIL line per acceptance criterion; exits nonzero on any failure.

use std::time::Instant;

use macsym_core::charmap::{
    ch_sp_indicator, ch_spherical, char_types, class_types, dim_irreducible, gl_order,
    isometry_pair, double_coset_size, CharData,
};
use macsym_core::macdonald::{
    green_polynomials, hall_littlewood_p, macdonald_p, macdonald_q, pieri_psi_prime,
    schur_expansion_c, table, c_coeff, cprime_coeff,
};
use macsym_core::partitions::{partitions_of, partitions_up_to};
use macsym_core::positivity::{positivity_scan, vanishing_predicate, vanishing_scan};
use macsym_core::spherical::{
    coset_sum_rule, value_route_a, value_route_b, value_route_c, UnipotentCoset,
};
use macsym_core::symfunc::{inner_qt, omega_qt, Binding, FamilyLabel};
use macsym_core::{part, Partition, RatQT, SymFunc};
use num_rational::BigRational;
use num_traits::Zero;

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn parts_of(n: usize) -> Vec<Partition> {
    partitions_of(n as i64).expect("non-negative")
}

fn c(n: i64) -> RatQT {
    RatQT::from_int(n)
}

fn macdonald_core() -> Check {
    let formal = Binding::formal();
    let qq = Binding::new(RatQT::q(), RatQT::q());
    let f1 = FamilyLabel::f1();
    let mut checked = 0;
    for n in 1..=6 {
        let tab = table(n, &formal).map_err(err)?;
        let parts = parts_of(n);
        let ps: Vec<SymFunc> = parts
            .iter()
            .map(|l| macdonald_p(l, &formal))
            .collect::<Result<_, _>>()
            .map_err(err)?;
        for (i, a) in parts.iter().enumerate() {
            for (j, b) in parts.iter().enumerate().skip(i + 1) {
                let v = inner_qt(&ps[i], &ps[j], &formal).map_err(err)?;
                ensure(v.is_zero(), || format!("<P{a}, P{b}> != 0"))?;
            }
            let m = tab.m_expansion(a);
            for (k, mu) in tab.parts.iter().enumerate() {
                let dominated = mu.dominance_leq(a).map_err(err)?;
                let ok = if mu == a {
                    m[k].is_one()
                } else {
                    dominated || m[k].is_zero()
                };
                ensure(ok, || format!("P{a} not unitriangular at m{mu}"))?;
            }
            let j = ps[i].scale(&c_coeff(a, &formal));
            let norm = inner_qt(&j, &j, &formal).map_err(err)?;
            ensure(norm == c_coeff(a, &formal) * cprime_coeff(a, &formal), || {
                format!("<J{a}, J{a}> != c c'")
            })?;
            let lhs = omega_qt(&ps[i], &formal).map_err(err)?;
            let rhs = macdonald_q(&a.conjugate(), &formal)
                .map_err(err)?
                .subst_coeffs(&RatQT::t(), &RatQT::q())
                .map_err(err)?;
            ensure(lhs == rhs, || format!("omega_qt P{a} != Q{}(t,q)", a.conjugate()))?;
            let schur = SymFunc::s(&f1, a.clone()).to_p().map_err(err)?;
            ensure(macdonald_p(a, &qq).map_err(err)? == schur, || {
                format!("P{a}(q,q) != s{a}")
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} partitions, |λ| ≤ 6"))
}

fn pieri() -> Check {
    let formal = Binding::formal();
    let f1 = FamilyLabel::f1();
    let mut checked = 0;
    for mu in partitions_up_to(5) {
        let pm = macdonald_p(&mu, &formal).map_err(err)?;
        for r in 1..=3 {
            let lhs = pm.multiply(&SymFunc::e(&f1, r)).map_err(err)?;
            let mut rhs = SymFunc::zero();
            for lam in mu.add_vertical_strip(r) {
                let psi = pieri_psi_prime(&lam, &mu, &formal).map_err(err)?;
                rhs = rhs.add(&macdonald_p(&lam, &formal).map_err(err)?.scale(&psi));
            }
            ensure(lhs == rhs, || format!("Pieri fails for μ={mu}, r={r}"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} (μ, r) pairs"))
}

fn green() -> Check {
    let t = RatQT::t();
    let tinv = RatQT::t_pow(-1);
    let f1 = FamilyLabel::f1();
    for n in 1..=5usize {
        let g = green_polynomials(n).map_err(err)?;
        let parts = parts_of(n);
        let hl: Vec<SymFunc> = parts
            .iter()
            .map(|mu| hall_littlewood_p(mu, &tinv))
            .collect::<Result<_, _>>()
            .map_err(err)?;
        for rho in &parts {
            let mut sum = SymFunc::zero();
            for (mu, p) in parts.iter().zip(&hl) {
                let coeff = g.get(rho, mu).mul_ref(&RatQT::t_pow(-(mu.n_stat() as i64)));
                sum = sum.add(&p.scale(&coeff));
            }
            ensure(sum == SymFunc::p(&f1, rho.clone()), || {
                format!("Green expansion fails for ρ={rho}")
            })?;
        }
    }
    let g = green_polynomials(2).map_err(err)?;
    ensure(*g.get(&part![2], &part![1, 1]) == c(1) - &t, || "Q_(2)^(11) != 1-t".into())?;
    ensure(*g.get(&part![1, 1], &part![1, 1]) == c(1) + &t, || "Q_(11)^(11) != 1+t".into())?;
    Ok("n ≤ 5 expansion, spot values".into())
}

fn isometry() -> Check {
    let mut cosets = 0;
    let mut chars = 0;
    for n in 1..=3 {
        for cl in class_types(n, n as u32) {
            let f = ch_sp_indicator(&cl).map_err(err)?;
            let v = isometry_pair(&f, &f, n).map_err(err)?;
            ensure(v == double_coset_size(&cl), || format!("coset norm at μ={}", cl.mu))?;
            cosets += 1;
        }
        for ch in char_types(n, n as u32) {
            let f = ch_spherical(&ch).map_err(err)?;
            let v = isometry_pair(&f, &f, n).map_err(err)?;
            let doubled = CharData {
                lambda: ch.lambda.map_parts(|_, p| p.union_double()),
            };
            let expect = gl_order(2 * n) / dim_irreducible(&doubled).map_err(err)?;
            ensure(v == expect, || format!("spherical norm at λ={}", ch.lambda))?;
            chars += 1;
        }
    }
    Ok(format!("{cosets} coset types, {chars} character types"))
}

fn identity_value() -> Check {
    let mut checked = 0;
    for n in 1..=4 {
        let id = UnipotentCoset::identity(n);
        for ch in char_types(n, 2) {
            for (name, v) in [
                ("A", value_route_a(&ch, &id)),
                ("B", value_route_b(&ch, &id)),
            ] {
                let v = v.map_err(err)?;
                ensure(v.is_one(), || format!("route {name} gives {v} at λ={}", ch.lambda))?;
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} character types, routes A and B"))
}

fn transvection() -> Check {
    let mut checked = 0;
    for n in 2..=4 {
        let tr = UnipotentCoset::transvection(n).map_err(err)?;
        for ch in char_types(n, n as u32) {
            let a = value_route_a(&ch, &tr).map_err(err)?;
            let b = value_route_b(&ch, &tr).map_err(err)?;
            let cc = value_route_c(&ch).map_err(err)?;
            ensure(a == b && b == cc, || {
                format!("λ={}: A={a}, B={b}, C={cc}", ch.lambda)
            })?;
            checked += 1;
        }
    }
    let tr = UnipotentCoset::transvection(2).map_err(err)?;
    let v11 = value_route_a(&CharData::trivial_family(part![1, 1]), &tr).map_err(err)?;
    ensure(v11.is_one(), || format!("φ_(11) = {v11}"))?;
    let v2 = value_route_a(&CharData::trivial_family(part![2]), &tr).map_err(err)?;
    let expect = (RatQT::q() - c(1)) / (RatQT::q_pow(4) - c(1));
    ensure(v2 == expect, || format!("φ_(2) = {v2}"))?;
    for n in 2..=3 {
        for q0 in [3, 5] {
            let s = coset_sum_rule(&UnipotentCoset::transvection(n).map_err(err)?, q0)
                .map_err(err)?;
            ensure(s.is_zero(), || format!("sum rule n={n} q0={q0}: {s}"))?;
        }
    }
    Ok(format!(
        "{checked} character types; φ_(11)=1, φ_(2)={v2}; sum rule holds"
    ))
}

fn unipotent_routes() -> Check {
    let mut checked = 0;
    for n in 1..=4 {
        for mu in parts_of(n) {
            let coset = UnipotentCoset::new(mu);
            for ch in char_types(n, n as u32) {
                let a = value_route_a(&ch, &coset).map_err(err)?;
                let b = value_route_b(&ch, &coset).map_err(err)?;
                ensure(a == b, || {
                    format!("λ={} μ={}: A={a}, B={b}", ch.lambda, coset.mu)
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} (λ, μ) pairs"))
}

fn positivity() -> Check {
    let qs: Vec<BigRational> = [3, 5, 7, 9, 11]
        .iter()
        .map(|&x| BigRational::from_integer(x.into()))
        .collect();
    let r = positivity_scan(6, 3, &qs).map_err(err)?;
    ensure(r.falsifications.is_empty(), || {
        format!("{} falsifications", r.falsifications.len())
    })?;
    let w = schur_expansion_c(&part![2], &part![], &part![1, 1], &Binding::q_q2()).map_err(err)?;
    ensure(w == RatQT::q() / (c(1) + RatQT::q() + RatQT::q_pow(2)), || {
        format!("witness = {w}")
    })?;
    let at3 = w.eval_q(&BigRational::from_integer(3.into())).map_err(err)?;
    ensure(at3 == BigRational::new(3.into(), 13.into()), || format!("witness(3) = {at3}"))?;
    Ok(format!("{} triples, 0 falsifications, witness 3/13", r.reports.len()))
}

fn vanishing() -> Check {
    let r = vanishing_scan(6).map_err(err)?;
    ensure(r.falsifications.is_empty(), || {
        format!("{} falsifications", r.falsifications.len())
    })?;
    let e = Partition::empty();
    ensure(vanishing_predicate(&part![1, 1], &e, &part![2]), || {
        "predicate false at witness".into()
    })?;
    let w = schur_expansion_c(&part![1, 1], &e, &part![2], &Binding::q_q2()).map_err(err)?;
    ensure(w.is_zero(), || format!("witness = {w}"))?;
    Ok(format!("{} predicted-zero triples, all ≡ 0", r.reports.len()))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("Macdonald core", macdonald_core),
        ("Pieri rule", pieri),
        ("Green polynomials", green),
        ("characteristic-map isometry", isometry),
        ("identity value", identity_value),
        ("three-route transvection agreement", transvection),
        ("two-route unipotent agreement", unipotent_routes),
        ("positivity scan", positivity),
        ("vanishing criterion", vanishing),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t0 = Instant::now();
        let res = f();
        let secs = t0.elapsed().as_secs_f64();
        match res {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail} ({secs:.1}s)", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {msg} ({secs:.1}s)", i + 1);
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
