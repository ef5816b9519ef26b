//! Class and character data for `GL_n(q)`, the two characteristic maps, and
//! the group-order formulas they are normalized against.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::macdonald::{mac_in_p, MacKind};
use crate::partitions::{partitions_of_usize, Partition};
use crate::ratfunc::RatQT;
use crate::symfunc::{
    inner_dual, inner_sp, omega, omega_qt, Binding, FamilyKind, FamilyLabel, PartitionFn,
    SymFunc,
};

/// A conjugacy class of `GL_n(q)`: partitions on M-families.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassData {
    pub mu: PartitionFn,
}

/// An irreducible character of `GL_n(q)`: partitions on L-families.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CharData {
    pub lambda: PartitionFn,
}

impl ClassData {
    pub fn new(mu: PartitionFn) -> Result<Self> {
        if mu.kinds().contains(&FamilyKind::L) {
            return Err(Error::Parse("class data must use M-families".into()));
        }
        Ok(ClassData { mu })
    }

    /// Unipotent class of Jordan type `mu`.
    pub fn unipotent(mu: Partition) -> Self {
        ClassData {
            mu: PartitionFn::single(FamilyLabel::f1(), mu),
        }
    }

    pub fn n(&self) -> usize {
        self.mu.weight()
    }
}

impl CharData {
    pub fn new(lambda: PartitionFn) -> Result<Self> {
        if lambda.kinds().contains(&FamilyKind::M) {
            return Err(Error::UnexpectedMFamily);
        }
        Ok(CharData { lambda })
    }

    /// `λ(triv) = lam` and empty elsewhere.
    pub fn trivial_family(lam: Partition) -> Self {
        CharData {
            lambda: PartitionFn::single(FamilyLabel::triv(), lam),
        }
    }

    pub fn n(&self) -> usize {
        self.lambda.weight()
    }

    /// `|λ| = Σ_φ |λ(φ)|`.
    pub fn boxes(&self) -> usize {
        self.lambda.boxes()
    }
}

/// `ψ_n(x) = Π_{i=1}^n (x^i - 1)`.
pub fn psi(n: usize, x: &RatQT) -> RatQT {
    (1..=n)
        .map(|i| x.pow(i as i64).expect("power") - RatQT::one())
        .product()
}

/// `|GL_n(q)| = q^{n(n-1)/2} ψ_n(q)`.
pub fn gl_order(n: usize) -> RatQT {
    RatQT::q_pow((n * n.saturating_sub(1) / 2) as i64) * psi(n, &RatQT::q())
}

/// `|Sp_{2n}(q)| = q^{n²} Π (q^{2i} - 1)`.
pub fn sp_order(n: usize) -> RatQT {
    RatQT::q_pow((n * n) as i64) * psi(n, &RatQT::q_pow(2))
}

/// `H_λ(x) = Π_{s∈λ} (x^{h(s)} - 1)`.
pub fn hook_poly(lam: &Partition, x: &RatQT) -> RatQT {
    lam.arm_legs()
        .into_iter()
        .map(|(_, a, l)| x.pow((a + l + 1) as i64).expect("power") - RatQT::one())
        .product()
}

/// Centralizer order `a_μ(q) = q^n Π_f q_f^{2n(μ(f))} Π_i Π_{j ≤ m_i} (1 - q_f^{-j})`.
pub fn a_mu(c: &ClassData) -> RatQT {
    let mut acc = RatQT::q_pow(c.n() as i64);
    for (f, mu) in c.mu.iter() {
        let d = f.deg as i64;
        acc = acc * RatQT::q_pow(2 * d * mu.n_stat() as i64);
        for &m in mu.multiplicities().iter().skip(1) {
            for j in 1..=m as i64 {
                acc = acc * (RatQT::one() - RatQT::q_pow(-d * j));
            }
        }
    }
    acc
}

/// `|C_μ| = |GL_n(q)| / a_μ(q)`.
pub fn class_size(c: &ClassData) -> RatQT {
    gl_order(c.n()) / a_mu(c)
}

/// `d_λ = ψ_n(q) Π_φ q_φ^{n(λ(φ)')} / H_{λ(φ)}(q_φ)`; always a polynomial.
pub fn dim_irreducible(ch: &CharData) -> Result<RatQT> {
    let mut acc = psi(ch.n(), &RatQT::q());
    for (phi, lam) in ch.lambda.iter() {
        let qf = phi.q_family();
        acc = acc * RatQT::q_pow(phi.deg as i64 * lam.conjugate().n_stat() as i64);
        acc = acc.checked_div(&hook_poly(lam, &qf))?;
    }
    if !acc.is_polynomial() {
        return Err(Error::NotPolynomial(acc.to_string()));
    }
    Ok(acc)
}

fn product_over(
    fams: impl Iterator<Item = Result<SymFunc>>,
) -> Result<SymFunc> {
    let mut acc = SymFunc::one();
    for f in fams {
        acc = acc.multiply(&f?)?;
    }
    Ok(acc)
}

fn family_mac(
    kind: MacKind,
    fam: &FamilyLabel,
    lam: &Partition,
    b: &Binding,
) -> Result<SymFunc> {
    let v = mac_in_p(kind, lam, b)?.into_iter().collect();
    Ok(SymFunc::from_pvec(fam, &v))
}

/// `ch_GL(I_{C_μ}) = Π_f q_f^{-n(μ(f))} P_{μ(f)}(f; q_f^{-1})`.
pub fn ch_gl_indicator(c: &ClassData) -> Result<SymFunc> {
    product_over(c.mu.iter().map(|(f, mu)| {
        let d = f.deg as i64;
        let b = Binding::hall_littlewood(RatQT::q_pow(-d));
        Ok(family_mac(MacKind::P, f, mu, &b)?.scale(&RatQT::q_pow(-d * mu.n_stat() as i64)))
    }))
}

/// `ch_GL(χ_λ) = Π_φ s_{λ(φ)}(φ)`.
pub fn ch_gl_character(ch: &CharData) -> Result<SymFunc> {
    product_over(
        ch.lambda
            .iter()
            .map(|(phi, lam)| Ok(SymFunc::s(phi, lam.clone()))),
    )
}

/// `ch(I_{H g_μ H}) = Π_f q_f^{-2n(μ(f))} P_{μ(f)}(f; q_f^{-2})`.
pub fn ch_sp_indicator(c: &ClassData) -> Result<SymFunc> {
    product_over(c.mu.iter().map(|(f, mu)| {
        let d = f.deg as i64;
        let b = Binding::hall_littlewood(RatQT::q_pow(-2 * d));
        Ok(family_mac(MacKind::P, f, mu, &b)?
            .scale(&RatQT::q_pow(-2 * d * mu.n_stat() as i64)))
    }))
}

/// `ch(φ_λ) = ((-1)^{|λ|}/ψ_n(q²)) Π_φ q_φ^{-n(λ(φ)')} J_{λ(φ)}(φ; q_φ, q_φ²)`.
pub fn ch_spherical(ch: &CharData) -> Result<SymFunc> {
    let sign = if ch.boxes().is_multiple_of(2) { 1 } else { -1 };
    let scalar = RatQT::from_int(sign) / psi(ch.n(), &RatQT::q_pow(2));
    let body = product_over(ch.lambda.iter().map(|(phi, lam)| {
        let b = Binding::family_q_q2(phi.deg);
        let shift = RatQT::q_pow(-(phi.deg as i64) * lam.conjugate().n_stat() as i64);
        Ok(family_mac(MacKind::J, phi, lam, &b)?.scale(&shift))
    }))?;
    Ok(body.scale(&scalar))
}

/// [`ch_spherical`] with a guard on the ambient degree.
pub fn ch_spherical_checked(ch: &CharData, n: usize) -> Result<SymFunc> {
    if ch.n() != n {
        return Err(Error::DegreeMismatch {
            expected: n,
            got: ch.n(),
        });
    }
    ch_spherical(ch)
}

/// `ch(ζ_T) = (-1)^{n - l(λ)} p_λ`.
pub fn ch_dl(ch: &CharData) -> Result<SymFunc> {
    let sign = if (ch.n() - ch.lambda.total_len()).is_multiple_of(2) { 1 } else { -1 };
    Ok(product_over(
        ch.lambda
            .iter()
            .map(|(phi, lam)| Ok(SymFunc::p(phi, lam.clone()))),
    )?
    .scale(&RatQT::from_int(sign)))
}

/// `|H g_μ H| = |Sp_{2n}(q)| · (|GL_n|/a_μ)_{q ↦ q²}`.
pub fn double_coset_size(c: &ClassData) -> RatQT {
    sp_order(c.n()) * class_size(c).subst_q_q2()
}

/// `q^{-n}|Sp_{2n}(q)|² ⟨F, G⟩`, with the M-side or dual pairing according to
/// the families present.
pub fn isometry_pair(f: &SymFunc, g: &SymFunc, n: usize) -> Result<RatQT> {
    let mut fams = f.families();
    fams.extend(g.families());
    let kinds: std::collections::BTreeSet<FamilyKind> = fams.iter().map(|x| x.kind).collect();
    let inner = if kinds.contains(&FamilyKind::L) {
        if kinds.contains(&FamilyKind::M) {
            return Err(Error::ProjectFirst);
        }
        inner_dual(f, g)?
    } else {
        inner_sp(f, g)?
    };
    let sp = sp_order(n);
    Ok(RatQT::q_pow(-(n as i64)) * &sp * &sp * inner)
}

/// `F · ω ω_{q²,q} G`.
pub fn mixed_product(f: &SymFunc, g: &SymFunc) -> Result<SymFunc> {
    let twisted = omega(&omega_qt(g, &Binding::q2_q())?)?;
    f.multiply(&twisted)
}

fn mobius(n: u64) -> i64 {
    let mut n = n;
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Number of degree-`d` Frobenius orbits on the unit group: monic
/// irreducibles of degree `d` over `F_{q0}`, excluding `x`.
pub fn count_orbits_m(d: u32, q0: u64) -> BigInt {
    let d64 = d as u64;
    let mut acc = BigInt::zero();
    for e in 1..=d64 {
        if d64.is_multiple_of(e) {
            acc += BigInt::from(mobius(d64 / e)) * num_traits::pow(BigInt::from(q0), e as usize);
        }
    }
    let mut n = acc / BigInt::from(d64);
    if d == 1 {
        n -= 1;
    }
    n
}

/// Dual orbits are equinumerous with M-orbits degree by degree.
pub fn count_orbits_l(d: u32, q0: u64) -> BigInt {
    count_orbits_m(d, q0)
}

/// A type: multiset of `(degree, partition)` slots, sorted.
pub type OrbitType = Vec<(u32, Partition)>;

/// All types of total weight `n` with family degrees at most `max_deg`.
pub fn types(n: usize, max_deg: u32) -> Vec<OrbitType> {
    // slots are generated in non-increasing (degree, partition) order
    let mut slots: Vec<(u32, Partition)> = Vec::new();
    for d in 1..=max_deg.min(n as u32).max(1) {
        for k in 1..=n / d as usize {
            for p in partitions_of_usize(k) {
                slots.push((d, p));
            }
        }
    }
    slots.sort();
    fn rec(
        slots: &[(u32, Partition)],
        start: usize,
        left: usize,
        cur: &mut OrbitType,
        out: &mut Vec<OrbitType>,
    ) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..slots.len() {
            let w = slots[i].0 as usize * slots[i].1.size();
            if w <= left {
                cur.push(slots[i].clone());
                rec(slots, i, left - w, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        return vec![Vec::new()];
    }
    rec(&slots, 0, n, &mut Vec::new(), &mut out);
    out
}

/// Number of partition-valued functions of the given type when there are
/// `count(d)` orbits of each degree.
pub fn type_multiplicity(ty: &OrbitType, count: impl Fn(u32) -> BigInt) -> BigInt {
    let mut by_deg: BTreeMap<u32, Vec<&Partition>> = BTreeMap::new();
    for (d, p) in ty {
        by_deg.entry(*d).or_default().push(p);
    }
    let mut total = BigInt::one();
    for (d, ps) in by_deg {
        let avail = count(d);
        let k = ps.len();
        if avail < BigInt::from(k) {
            return BigInt::zero();
        }
        for i in 0..k {
            total *= &avail - BigInt::from(i);
        }
        let mut reps: BTreeMap<&Partition, usize> = BTreeMap::new();
        for p in ps {
            *reps.entry(p).or_default() += 1;
        }
        for r in reps.values() {
            for j in 1..=*r {
                total /= BigInt::from(j);
            }
        }
    }
    total
}

/// A representative with fresh family ids. The first degree-1 slot is `f1`
/// (M) or `triv` (L).
pub fn instantiate(ty: &OrbitType, kind: FamilyKind) -> PartitionFn {
    let mut counters: BTreeMap<u32, usize> = BTreeMap::new();
    let mut items = Vec::new();
    for (d, p) in ty {
        let i = counters.entry(*d).or_default();
        *i += 1;
        let fam = match (kind, *d, *i) {
            (FamilyKind::M, 1, 1) => FamilyLabel::f1(),
            (FamilyKind::L, 1, 1) => FamilyLabel::triv(),
            (FamilyKind::M, d, i) => FamilyLabel::m(format!("g{d}_{i}"), d),
            (FamilyKind::L, d, i) => FamilyLabel::l(format!("phi{d}_{i}"), d),
        };
        items.push((fam, p.clone()));
    }
    PartitionFn::new(items)
}

/// All character data of weight `n` over families of degree at most `max_deg`,
/// one representative per type.
pub fn char_types(n: usize, max_deg: u32) -> Vec<CharData> {
    types(n, max_deg)
        .iter()
        .map(|t| CharData {
            lambda: instantiate(t, FamilyKind::L),
        })
        .collect()
}

/// All class data of weight `n`, one representative per type.
pub fn class_types(n: usize, max_deg: u32) -> Vec<ClassData> {
    types(n, max_deg)
        .iter()
        .map(|t| ClassData {
            mu: instantiate(t, FamilyKind::M),
        })
        .collect()
}

fn eval_int(x: &RatQT, q0: u64) -> Result<BigRational> {
    x.eval_q(&BigRational::from_integer(BigInt::from(q0)))
}

/// Numeric totals at `q = q0` used to sanity-check the formulas.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counts {
    pub n: usize,
    pub q0: u64,
    pub classes: BigInt,
    pub characters: BigInt,
    pub sum_class_sizes: BigRational,
    pub gl_order: BigRational,
    pub sum_coset_sizes: BigRational,
    pub gl2n_order: BigRational,
    pub sum_dim_squares: BigRational,
}

pub fn counts(n: usize, q0: u64) -> Result<Counts> {
    let all = types(n, n as u32);
    let mut classes = BigInt::zero();
    let mut chars = BigInt::zero();
    let mut sum_sizes = BigRational::zero();
    let mut sum_cosets = BigRational::zero();
    let mut sum_dims = BigRational::zero();
    for ty in &all {
        let mm = type_multiplicity(ty, |d| count_orbits_m(d, q0));
        let ml = type_multiplicity(ty, |d| count_orbits_l(d, q0));
        classes += &mm;
        chars += &ml;
        if !mm.is_zero() {
            let c = ClassData {
                mu: instantiate(ty, FamilyKind::M),
            };
            let w = BigRational::from_integer(mm.clone());
            sum_sizes += &w * eval_int(&class_size(&c), q0)?;
            sum_cosets += &w * eval_int(&double_coset_size(&c), q0)?;
        }
        if !ml.is_zero() {
            let ch = CharData {
                lambda: instantiate(ty, FamilyKind::L),
            };
            let d = eval_int(&dim_irreducible(&ch)?, q0)?;
            sum_dims += BigRational::from_integer(ml) * &d * &d;
        }
    }
    Ok(Counts {
        n,
        q0,
        classes,
        characters: chars,
        sum_class_sizes: sum_sizes,
        gl_order: eval_int(&gl_order(n), q0)?,
        sum_coset_sizes: sum_cosets,
        gl2n_order: eval_int(&gl_order(2 * n), q0)?,
        sum_dim_squares: sum_dims,
    })
}

/// Integer value of a rational that is known to be integral.
pub fn as_integer(r: &BigRational) -> Option<BigInt> {
    r.is_integer().then(|| r.to_integer())
}
