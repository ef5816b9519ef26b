use macsym_core::charmap::{
    ch_dl, ch_gl_character, ch_gl_indicator, char_types, class_types, dim_irreducible, gl_order,
    ClassData,
};
use macsym_core::spherical::unipotent_projection;
use macsym_core::symfunc::{hall, inner_gl, SymFunc};
use macsym_core::{Partition, RatQT};

/// `|GL_n| ⟨π F, ch I_1⟩`: the value at the identity of the class function with image `F`.
fn at_identity(f: &SymFunc, id: &SymFunc, n: usize) -> RatQT {
    inner_gl(&unipotent_projection(f).unwrap(), id).unwrap() * gl_order(n)
}

fn identity_class(n: usize) -> ClassData {
    ClassData::unipotent(Partition::column(n))
}

#[test]
fn schur_products_are_hall_orthonormal() {
    for n in 1..=3 {
        let chars = char_types(n, n as u32);
        let images: Vec<_> = chars.iter().map(|c| ch_gl_character(c).unwrap()).collect();
        for (i, a) in images.iter().enumerate() {
            for (j, b) in images.iter().enumerate() {
                let expect = RatQT::from_int((i == j) as i64);
                assert_eq!(hall(a, b).unwrap(), expect, "{} {}", chars[i].lambda, chars[j].lambda);
            }
        }
    }
}

#[test]
fn character_degrees_from_identity_pairing() {
    for n in 1..=4 {
        let id = ch_gl_indicator(&identity_class(n)).unwrap();
        for ch in char_types(n, 2) {
            let v = at_identity(&ch_gl_character(&ch).unwrap(), &id, n);
            assert_eq!(v, dim_irreducible(&ch).unwrap(), "{}", ch.lambda);
        }
    }
}

#[test]
fn deligne_lusztig_degrees() {
    let one = RatQT::one();
    for n in 1..=4 {
        let id = ch_gl_indicator(&identity_class(n)).unwrap();
        let p_part = (1..=n).fold(one.clone(), |acc, i| acc * (RatQT::q_pow(i as i64) - &one));
        for ch in char_types(n, 2) {
            let torus = ch.lambda.iter().fold(one.clone(), |acc, (f, rho)| {
                rho.parts().iter().fold(acc, |acc, &r| {
                    acc * (RatQT::q_pow((f.deg as usize * r) as i64) - &one)
                })
            });
            let sign = if (n - ch.lambda.total_len()) % 2 == 0 { 1 } else { -1 };
            let expect = p_part.checked_div(&torus).unwrap().scale_int(sign);
            let v = at_identity(&ch_dl(&ch).unwrap(), &id, n);
            assert_eq!(v, expect, "{}", ch.lambda);
        }
    }
}

#[test]
fn indicators_are_gl_orthogonal() {
    for n in 1..=3 {
        let cls = class_types(n, n as u32);
        let images: Vec<_> = cls.iter().map(|c| ch_gl_indicator(c).unwrap()).collect();
        for (i, a) in images.iter().enumerate() {
            for (j, b) in images.iter().enumerate().skip(i + 1) {
                assert!(inner_gl(a, b).unwrap().is_zero(), "{} {}", cls[i].mu, cls[j].mu);
            }
        }
    }
}
