//! The tensor product of rings of symmetric functions over `Q(q,t)`, one
//! tensor factor per variable family.
//!
//! Elements are finite sums of products of basis elements, at most one
//! factor per family. Power sums are the pivot basis: products, pairings and
//! involutions all go through the `p` expansion, where every pairing in use is
//! diagonal. Pairings are bilinear: every structure constant in scope is a
//! rational function, so there is nothing to conjugate.

pub(crate) mod classical;

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

pub use classical::character;

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::ratfunc::RatQT;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum FamilyKind {
    M,
    L,
}

/// A Frobenius orbit of degree `deg` carrying its own variable family.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilyLabel {
    pub kind: FamilyKind,
    pub deg: u32,
    pub id: String,
}

impl FamilyLabel {
    pub fn new(kind: FamilyKind, id: impl Into<String>, deg: u32) -> Self {
        assert!(deg >= 1, "family degree must be positive");
        FamilyLabel {
            kind,
            deg,
            id: id.into(),
        }
    }

    pub fn m(id: impl Into<String>, deg: u32) -> Self {
        Self::new(FamilyKind::M, id, deg)
    }

    pub fn l(id: impl Into<String>, deg: u32) -> Self {
        Self::new(FamilyKind::L, id, deg)
    }

    /// The orbit of `x - 1`.
    pub fn f1() -> Self {
        Self::m("f1", 1)
    }

    /// The trivial character, a degree-1 dual family.
    pub fn triv() -> Self {
        Self::l("triv", 1)
    }

    pub fn is_f1(&self) -> bool {
        self.kind == FamilyKind::M && self.id == "f1"
    }

    /// `q_f = q^{d(f)}`.
    pub fn q_family(&self) -> RatQT {
        RatQT::q_pow(self.deg as i64)
    }

    /// Parses `f1`, `triv`, `name` (degree 1) or `name@d`.
    pub fn parse(s: &str, kind: FamilyKind) -> Result<Self> {
        let (id, deg) = match s.split_once('@') {
            Some((id, d)) => (
                id,
                d.parse::<u32>()
                    .ok()
                    .filter(|&d| d >= 1)
                    .ok_or_else(|| Error::Parse(format!("family degree in {s:?}")))?,
            ),
            None => (s, 1),
        };
        if id.is_empty() {
            return Err(Error::Parse(format!("empty family id in {s:?}")));
        }
        if (id == "f1" && kind == FamilyKind::L) || (id == "triv" && kind == FamilyKind::M) {
            return Err(Error::Parse(format!("{id} has the wrong kind here")));
        }
        if (id == "f1" || id == "triv") && deg != 1 {
            return Err(Error::Parse(format!("{id} has degree 1")));
        }
        Ok(FamilyLabel::new(kind, id, deg))
    }
}

impl Ord for FamilyLabel {
    fn cmp(&self, other: &Self) -> Ordering {
        self.id
            .cmp(&other.id)
            .then(self.kind.cmp(&other.kind))
            .then(self.deg.cmp(&other.deg))
    }
}

impl PartialOrd for FamilyLabel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for FamilyLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.deg == 1 {
            write!(f, "{}", self.id)
        } else {
            write!(f, "{}@{}", self.id, self.deg)
        }
    }
}

/// Values substituted for the Macdonald parameters `(q, t)`.
#[derive(Clone, Debug)]
pub struct Binding {
    q: RatQT,
    t: RatQT,
    key: String,
}

impl Binding {
    pub fn new(q: RatQT, t: RatQT) -> Self {
        let key = format!("({q},{t})");
        Binding { q, t, key }
    }

    /// Formal parameters.
    pub fn formal() -> Self {
        Self::new(RatQT::q(), RatQT::t())
    }

    /// Hall-Littlewood: `q = 0`.
    pub fn hall_littlewood(t: RatQT) -> Self {
        Self::new(RatQT::zero(), t)
    }

    /// `(q, q^2)`.
    pub fn q_q2() -> Self {
        Self::new(RatQT::q(), RatQT::q_pow(2))
    }

    /// `(q^2, q)`.
    pub fn q2_q() -> Self {
        Self::new(RatQT::q_pow(2), RatQT::q())
    }

    /// `(q^d, q^{2d})`, the binding attached to a degree-`d` family.
    pub fn family_q_q2(d: u32) -> Self {
        Self::new(RatQT::q_pow(d as i64), RatQT::q_pow(2 * d as i64))
    }

    pub fn q(&self) -> &RatQT {
        &self.q
    }

    pub fn t(&self) -> &RatQT {
        &self.t
    }

    pub fn key(&self) -> &str {
        &self.key
    }

    /// Parameters swapped: `(t, q)`.
    pub fn swapped(&self) -> Self {
        Self::new(self.t.clone(), self.q.clone())
    }

    /// Applies `q -> q^d, t -> t^d` to both parameters.
    pub fn scaled(&self, d: u32) -> Self {
        if d == 1 {
            return self.clone();
        }
        let d = d as i64;
        let sub = |x: &RatQT| {
            x.subst(&RatQT::q_pow(d), &RatQT::t_pow(d))
                .expect("monomial substitution")
        };
        Self::new(sub(&self.q), sub(&self.t))
    }

    /// Composes with an outer substitution of the formal variables.
    pub fn subst(&self, q_img: &RatQT, t_img: &RatQT) -> Result<Self> {
        Ok(Self::new(
            self.q.subst(q_img, t_img)?,
            self.t.subst(q_img, t_img)?,
        ))
    }

    /// `⟨p_ρ, p_ρ⟩_{q,t} = z_ρ Π (q^{ρ_i} - 1)/(t^{ρ_i} - 1)`.
    pub fn weight(&self, rho: &Partition) -> Result<RatQT> {
        let mut w = RatQT::from_bigint(BigInt::from(rho.z()));
        for &k in rho.parts() {
            let num = self.q.pow(k as i64)? - RatQT::one();
            let den = self.t.pow(k as i64)? - RatQT::one();
            w = w * num.checked_div(&den)?;
        }
        Ok(w)
    }

    /// Parses `qt`, `hl`, `q,q2`, `q2,q` or an explicit pair such as `q^-1,q^-2`.
    pub fn parse(s: &str) -> Result<Self> {
        match s.trim() {
            "qt" | "q,t" => Ok(Self::formal()),
            "hl" => Ok(Self::hall_littlewood(RatQT::t())),
            "q,q2" => Ok(Self::q_q2()),
            "q2,q" => Ok(Self::q2_q()),
            other => {
                let (a, b) = other
                    .split_once(',')
                    .ok_or_else(|| Error::Parse(format!("binding {other:?}")))?;
                let fix = |x: &str| x.trim().replace("q2", "q^2").replace("t2", "t^2");
                Ok(Self::new(
                    crate::ratfunc::parse_simple(&fix(a))?,
                    crate::ratfunc::parse_simple(&fix(b))?,
                ))
            }
        }
    }
}

impl PartialEq for Binding {
    fn eq(&self, other: &Self) -> bool {
        self.key == other.key
    }
}

impl Eq for Binding {}

impl std::hash::Hash for Binding {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.key.hash(state)
    }
}

impl Ord for Binding {
    fn cmp(&self, other: &Self) -> Ordering {
        self.key.cmp(&other.key)
    }
}

impl PartialOrd for Binding {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Binding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.key)
    }
}

#[derive(Serialize, Deserialize)]
struct BindingRepr {
    q: RatQT,
    t: RatQT,
}

impl Serialize for Binding {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        BindingRepr {
            q: self.q.clone(),
            t: self.t.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Binding {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = BindingRepr::deserialize(d)?;
        Ok(Binding::new(r.q, r.t))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BasisLabel {
    #[serde(rename = "m")]
    M,
    #[serde(rename = "e")]
    E,
    #[serde(rename = "h")]
    H,
    #[serde(rename = "p")]
    P,
    #[serde(rename = "s")]
    S,
    /// Macdonald `P` (Hall-Littlewood when the binding has `q = 0`).
    #[serde(rename = "MacP")]
    MacP(Binding),
    #[serde(rename = "MacQ")]
    MacQ(Binding),
    #[serde(rename = "MacJ")]
    MacJ(Binding),
}

impl BasisLabel {
    pub fn hall_littlewood(t: RatQT) -> Self {
        BasisLabel::MacP(Binding::hall_littlewood(t))
    }

    pub fn binding(&self) -> Option<&Binding> {
        match self {
            BasisLabel::MacP(b) | BasisLabel::MacQ(b) | BasisLabel::MacJ(b) => Some(b),
            _ => None,
        }
    }

    /// Parses `m|e|h|p|s|P|Q|J`; the Macdonald bases take `binding`.
    pub fn parse(s: &str, binding: &Binding) -> Result<Self> {
        Ok(match s {
            "m" => BasisLabel::M,
            "e" => BasisLabel::E,
            "h" => BasisLabel::H,
            "p" => BasisLabel::P,
            "s" => BasisLabel::S,
            "P" => BasisLabel::MacP(binding.clone()),
            "Q" => BasisLabel::MacQ(binding.clone()),
            "J" => BasisLabel::MacJ(binding.clone()),
            other => return Err(Error::Parse(format!("unknown basis {other:?}"))),
        })
    }
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisLabel::M => write!(f, "m"),
            BasisLabel::E => write!(f, "e"),
            BasisLabel::H => write!(f, "h"),
            BasisLabel::P => write!(f, "p"),
            BasisLabel::S => write!(f, "s"),
            BasisLabel::MacP(b) if b.q().is_zero() => write!(f, "HL_P[t={}]", b.t()),
            BasisLabel::MacP(b) => write!(f, "P{b}"),
            BasisLabel::MacQ(b) => write!(f, "Q{b}"),
            BasisLabel::MacJ(b) => write!(f, "J{b}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Factor {
    pub family: FamilyLabel,
    pub basis: BasisLabel,
    pub partition: Partition,
}

impl Factor {
    pub fn new(family: FamilyLabel, basis: BasisLabel, partition: Partition) -> Self {
        Factor {
            family,
            basis,
            partition,
        }
    }

    /// `Σ d(f) |λ|`.
    pub fn degree(&self) -> usize {
        self.family.deg as usize * self.partition.size()
    }
}

/// A finite linear combination of products of basis elements.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SymFunc {
    terms: BTreeMap<Vec<Factor>, RatQT>,
}

/// Single-family expansion in power sums.
pub type PVec = BTreeMap<Partition, RatQT>;

impl SymFunc {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::scalar(RatQT::one())
    }

    pub fn scalar(c: RatQT) -> Self {
        let mut f = Self::zero();
        f.add_term(Vec::new(), c);
        f
    }

    pub fn basis_element(family: FamilyLabel, basis: BasisLabel, partition: Partition) -> Self {
        let mut f = Self::zero();
        f.add_term(vec![Factor::new(family, basis, partition)], RatQT::one());
        f
    }

    pub fn p(family: &FamilyLabel, rho: Partition) -> Self {
        Self::basis_element(family.clone(), BasisLabel::P, rho)
    }

    pub fn e(family: &FamilyLabel, n: usize) -> Self {
        Self::basis_element(family.clone(), BasisLabel::E, Partition::row(n))
    }

    pub fn h(family: &FamilyLabel, n: usize) -> Self {
        Self::basis_element(family.clone(), BasisLabel::H, Partition::row(n))
    }

    pub fn s(family: &FamilyLabel, lam: Partition) -> Self {
        Self::basis_element(family.clone(), BasisLabel::S, lam)
    }

    pub fn m(family: &FamilyLabel, lam: Partition) -> Self {
        Self::basis_element(family.clone(), BasisLabel::M, lam)
    }

    /// Embeds a power-sum vector into `family`.
    pub fn from_pvec(family: &FamilyLabel, v: &PVec) -> Self {
        let mut f = Self::zero();
        for (rho, c) in v {
            f.add_term(
                vec![Factor::new(family.clone(), BasisLabel::P, rho.clone())],
                c.clone(),
            );
        }
        f
    }

    /// Adds `c * Π factors`, canonicalizing the factor list.
    pub fn add_term(&mut self, mut factors: Vec<Factor>, c: RatQT) {
        if c.is_zero() {
            return;
        }
        factors.retain(|f| !f.partition.is_empty());
        factors.sort();
        debug_assert!(
            factors.windows(2).all(|w| w[0].family != w[1].family),
            "at most one factor per family"
        );
        match self.terms.entry(factors) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add_ref(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[Factor], &RatQT)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, factors: &[Factor]) -> RatQT {
        let mut key = factors.to_vec();
        key.retain(|f| !f.partition.is_empty());
        key.sort();
        self.terms.get(&key).cloned().unwrap_or_else(RatQT::zero)
    }

    /// The scalar term.
    pub fn constant_term(&self) -> RatQT {
        self.coeff(&[])
    }

    pub fn families(&self) -> BTreeSet<FamilyLabel> {
        self.terms
            .keys()
            .flat_map(|k| k.iter().map(|f| f.family.clone()))
            .collect()
    }

    /// Common `‖·‖`-degree of all terms, if homogeneous.
    pub fn degree(&self) -> Option<usize> {
        let mut degs = self
            .terms
            .keys()
            .map(|k| k.iter().map(Factor::degree).sum::<usize>());
        let first = degs.next().unwrap_or(0);
        degs.all(|d| d == first).then_some(first)
    }

    pub fn add(&self, other: &SymFunc) -> SymFunc {
        let mut out = self.clone();
        for (k, v) in &other.terms {
            out.add_term(k.clone(), v.clone());
        }
        out
    }

    pub fn sub(&self, other: &SymFunc) -> SymFunc {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> SymFunc {
        self.map_coeffs(|c| c.neg_ref())
    }

    pub fn scale(&self, c: &RatQT) -> SymFunc {
        if c.is_zero() {
            return SymFunc::zero();
        }
        self.map_coeffs(|x| x.mul_ref(c))
    }

    pub fn map_coeffs(&self, f: impl Fn(&RatQT) -> RatQT) -> SymFunc {
        let mut out = SymFunc::zero();
        for (k, v) in &self.terms {
            out.add_term(k.clone(), f(v));
        }
        out
    }

    /// Rewrites every factor as a linear combination of factors and expands.
    fn expand(&self, rule: impl Fn(&Factor) -> Result<Vec<(Factor, RatQT)>>) -> Result<SymFunc> {
        let mut memo: HashMap<Factor, Vec<(Factor, RatQT)>> = HashMap::new();
        let mut out = SymFunc::zero();
        for (key, c) in &self.terms {
            let mut partial: Vec<(Vec<Factor>, RatQT)> = vec![(Vec::new(), c.clone())];
            for f in key {
                if !memo.contains_key(f) {
                    memo.insert(f.clone(), rule(f)?);
                }
                let exp = &memo[f];
                let mut next = Vec::with_capacity(partial.len() * exp.len());
                for (fs, a) in &partial {
                    for (g, b) in exp {
                        let mut fs2 = fs.clone();
                        fs2.push(g.clone());
                        next.push((fs2, a.mul_ref(b)));
                    }
                }
                partial = next;
            }
            for (fs, a) in partial {
                out.add_term(fs, a);
            }
        }
        Ok(out)
    }

    /// Every factor expanded in power sums.
    pub fn to_p(&self) -> Result<SymFunc> {
        if self
            .terms
            .keys()
            .all(|k| k.iter().all(|f| f.basis == BasisLabel::P))
        {
            return Ok(self.clone());
        }
        self.expand(|f| {
            if f.basis == BasisLabel::P {
                return Ok(vec![(f.clone(), RatQT::one())]);
            }
            Ok(basis_in_p(&f.basis, &f.partition)?
                .into_iter()
                .map(|(rho, c)| (Factor::new(f.family.clone(), BasisLabel::P, rho), c))
                .collect())
        })
    }

    /// The same element with every family expressed in `target`.
    pub fn to_basis(&self, target: &BasisLabel) -> Result<SymFunc> {
        let p = self.to_p()?;
        if *target == BasisLabel::P {
            return Ok(p);
        }
        p.expand(|f| {
            Ok(p_in_basis(target, &f.partition)?
                .into_iter()
                .map(|(lam, c)| (Factor::new(f.family.clone(), target.clone(), lam), c))
                .collect())
        })
    }

    /// Graded product; families multiply independently.
    pub fn multiply(&self, other: &SymFunc) -> Result<SymFunc> {
        let a = self.to_p()?;
        let b = other.to_p()?;
        let mut out = SymFunc::zero();
        for (ka, ca) in &a.terms {
            for (kb, cb) in &b.terms {
                out.add_term(merge_p_factors(ka, kb), ca.mul_ref(cb));
            }
        }
        Ok(out)
    }

    /// Single-family power-sum vector of a `p`-expanded function supported on
    /// at most the family `family`.
    pub fn pvec(&self, family: &FamilyLabel) -> Result<PVec> {
        let p = self.to_p()?;
        let mut out = PVec::new();
        for (k, c) in &p.terms {
            match k.as_slice() {
                [] => {
                    out.insert(Partition::empty(), c.clone());
                }
                [f] if f.family == *family => {
                    out.insert(f.partition.clone(), c.clone());
                }
                _ => return Err(Error::MixedFamilies),
            }
        }
        Ok(out)
    }

    /// Applies a multiplicative scalar to each power-sum part.
    fn scale_parts(&self, per_part: impl Fn(&FamilyLabel, usize) -> Result<RatQT>) -> Result<SymFunc> {
        let p = self.to_p()?;
        let mut memo: HashMap<(FamilyLabel, usize), RatQT> = HashMap::new();
        let mut out = SymFunc::zero();
        for (k, c) in &p.terms {
            let mut acc = c.clone();
            for f in k {
                for &n in f.partition.parts() {
                    let key = (f.family.clone(), n);
                    if !memo.contains_key(&key) {
                        memo.insert(key.clone(), per_part(&f.family, n)?);
                    }
                    acc = acc.mul_ref(&memo[&key]);
                }
            }
            out.add_term(k.clone(), acc);
        }
        Ok(out)
    }

    /// Replaces each coefficient `c(q,t)` by its image under a substitution.
    pub fn subst_coeffs(&self, q_img: &RatQT, t_img: &RatQT) -> Result<SymFunc> {
        let mut out = SymFunc::zero();
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v.subst(q_img, t_img)?);
        }
        Ok(out)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(k, c)| {
                serde_json::json!({
                    "coeff": c.to_json_value(),
                    "factors": serde_json::to_value(k).expect("factor serialization"),
                })
            })
            .collect();
        serde_json::json!({ "terms": terms })
    }

    pub fn from_json_value(v: &serde_json::Value) -> Result<SymFunc> {
        let terms = v
            .get("terms")
            .and_then(|t| t.as_array())
            .ok_or_else(|| Error::Parse("missing terms".into()))?;
        let mut out = SymFunc::zero();
        for t in terms {
            let c = RatQT::from_json_value(
                t.get("coeff")
                    .ok_or_else(|| Error::Parse("missing coeff".into()))?,
            )?;
            let factors: Vec<Factor> = serde_json::from_value(
                t.get("factors")
                    .cloned()
                    .ok_or_else(|| Error::Parse("missing factors".into()))?,
            )
            .map_err(|e| Error::Parse(e.to_string()))?;
            out.add_term(factors, c);
        }
        Ok(out)
    }

    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (k, c) in &self.terms {
            let coeff = c.to_latex();
            let body: String = k.iter().map(latex_factor).collect::<Vec<_>>().join(" ");
            parts.push(match (body.is_empty(), c.is_one()) {
                (true, _) => coeff,
                (false, true) => body,
                (false, false) => format!("\\left({coeff}\\right) {body}"),
            });
        }
        parts.join(" + ")
    }
}

fn latex_factor(f: &Factor) -> String {
    let sub = f
        .partition
        .parts()
        .iter()
        .map(|p| p.to_string())
        .collect::<Vec<_>>()
        .join(",");
    let fam = match f.family.kind {
        FamilyKind::M => f.family.id.clone(),
        FamilyKind::L if f.family.id == "triv" => "\\varphi_{1}".to_string(),
        FamilyKind::L => format!("\\varphi_{{{}}}", f.family.id),
    };
    match &f.basis {
        BasisLabel::MacP(b) if b.q().is_zero() => {
            format!("P_{{{sub}}}({fam};{})", b.t().to_latex())
        }
        BasisLabel::MacP(b) => format!("P_{{{sub}}}({fam};{},{})", b.q().to_latex(), b.t().to_latex()),
        BasisLabel::MacQ(b) => format!("Q_{{{sub}}}({fam};{},{})", b.q().to_latex(), b.t().to_latex()),
        BasisLabel::MacJ(b) => format!("J_{{{sub}}}({fam};{},{})", b.q().to_latex(), b.t().to_latex()),
        other => format!("{other}_{{{sub}}}({fam})"),
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let body: Vec<String> = k
                .iter()
                .map(|x| format!("{}{}({})", x.basis, x.partition, x.family))
                .collect();
            if body.is_empty() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{}", body.join("*"))?;
            } else {
                write!(f, "({c})*{}", body.join("*"))?;
            }
        }
        Ok(())
    }
}

impl Serialize for SymFunc {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json_value().serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymFunc {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let v = serde_json::Value::deserialize(d)?;
        SymFunc::from_json_value(&v).map_err(D::Error::custom)
    }
}

fn merge_p_factors(a: &[Factor], b: &[Factor]) -> Vec<Factor> {
    let mut out: Vec<Factor> = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ord = match (a.get(i), b.get(j)) {
            (Some(x), Some(y)) => x.family.cmp(&y.family),
            (Some(_), None) => Ordering::Less,
            _ => Ordering::Greater,
        };
        match ord {
            Ordering::Less => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Greater => {
                out.push(b[j].clone());
                j += 1;
            }
            Ordering::Equal => {
                out.push(Factor::new(
                    a[i].family.clone(),
                    BasisLabel::P,
                    a[i].partition.union(&b[j].partition),
                ));
                i += 1;
                j += 1;
            }
        }
    }
    out
}

fn rat(c: &num_rational::BigRational) -> RatQT {
    RatQT::from_rational(c)
}

/// `basis_λ` expanded in power sums.
pub fn basis_in_p(basis: &BasisLabel, lam: &Partition) -> Result<Vec<(Partition, RatQT)>> {
    let n = lam.size();
    let row = |mat: &Vec<Vec<num_rational::BigRational>>| {
        let t = classical::tables(n);
        let i = t.index[lam];
        t.parts
            .iter()
            .zip(&mat_row(mat, i))
            .filter(|(_, c)| !c.is_zero())
            .map(|(rho, c)| (rho.clone(), rat(c)))
            .collect::<Vec<_>>()
    };
    let t = classical::tables(n);
    Ok(match basis {
        BasisLabel::P => vec![(lam.clone(), RatQT::one())],
        BasisLabel::M => row(&t.m_in_p),
        BasisLabel::E => row(&t.e_in_p),
        BasisLabel::H => row(&t.h_in_p),
        BasisLabel::S => {
            let i = t.index[lam];
            t.parts
                .iter()
                .enumerate()
                .filter(|(j, _)| !t.chi[i][*j].is_zero())
                .map(|(j, rho)| {
                    (
                        rho.clone(),
                        RatQT::from_bigint(t.chi[i][j].clone())
                            / RatQT::from_bigint(BigInt::from(rho.z())),
                    )
                })
                .collect()
        }
        BasisLabel::MacP(b) => crate::macdonald::mac_in_p(crate::macdonald::MacKind::P, lam, b)?,
        BasisLabel::MacQ(b) => crate::macdonald::mac_in_p(crate::macdonald::MacKind::Q, lam, b)?,
        BasisLabel::MacJ(b) => crate::macdonald::mac_in_p(crate::macdonald::MacKind::J, lam, b)?,
    })
}

fn mat_row(mat: &[Vec<num_rational::BigRational>], i: usize) -> Vec<num_rational::BigRational> {
    mat[i].clone()
}

/// `p_ρ` expanded in `basis`.
pub fn p_in_basis(basis: &BasisLabel, rho: &Partition) -> Result<Vec<(Partition, RatQT)>> {
    let n = rho.size();
    let t = classical::tables(n);
    let i = t.index[rho];
    let from_rows = |mat: &Vec<Vec<num_rational::BigRational>>| {
        t.parts
            .iter()
            .zip(&mat[i])
            .filter(|(_, c)| !c.is_zero())
            .map(|(lam, c)| (lam.clone(), rat(c)))
            .collect::<Vec<_>>()
    };
    Ok(match basis {
        BasisLabel::P => vec![(rho.clone(), RatQT::one())],
        BasisLabel::M => t
            .parts
            .iter()
            .zip(&t.l_mat[i])
            .filter(|(_, c)| !c.is_zero())
            .map(|(lam, c)| (lam.clone(), RatQT::from_bigint(c.clone())))
            .collect(),
        BasisLabel::E => from_rows(&t.p_in_e),
        BasisLabel::H => from_rows(&t.p_in_h),
        BasisLabel::S => t
            .parts
            .iter()
            .enumerate()
            .filter(|(j, _)| !t.chi[*j][i].is_zero())
            .map(|(j, lam)| (lam.clone(), RatQT::from_bigint(t.chi[j][i].clone())))
            .collect(),
        BasisLabel::MacP(b) => crate::macdonald::p_in_mac(crate::macdonald::MacKind::P, rho, b)?,
        BasisLabel::MacQ(b) => crate::macdonald::p_in_mac(crate::macdonald::MacKind::Q, rho, b)?,
        BasisLabel::MacJ(b) => crate::macdonald::p_in_mac(crate::macdonald::MacKind::J, rho, b)?,
    })
}

/// The diagonal pairings on power sums.
#[derive(Clone, Debug)]
pub enum Pairing {
    /// `z_ρ Π (q^k-1)/(t^k-1)` at a binding; single family only.
    Qt(Binding),
    /// `z_ρ`.
    Hall,
    /// `z_ρ Π 1/(q_f^{2k}-1)` on M-families.
    Sp,
    /// `z_ρ Π 1/(q_f^k-1)` on M-families.
    Gl,
    /// `z_ρ Π (q_φ^k-1)/(q_φ^{2k}-1)` on L-families.
    Dual,
}

impl Pairing {
    fn check_families(&self, fams: &BTreeSet<FamilyLabel>) -> Result<()> {
        match self {
            Pairing::Qt(_) if fams.len() > 1 => Err(Error::MixedFamilies),
            Pairing::Sp | Pairing::Gl if fams.iter().any(|f| f.kind == FamilyKind::L) => {
                Err(Error::ProjectFirst)
            }
            Pairing::Dual if fams.iter().any(|f| f.kind == FamilyKind::M) => {
                Err(Error::UnexpectedMFamily)
            }
            _ => Ok(()),
        }
    }

    /// Weight of `p_ρ` in `family`.
    pub fn weight(&self, family: &FamilyLabel, rho: &Partition) -> Result<RatQT> {
        let z = RatQT::from_bigint(BigInt::from(rho.z()));
        let d = family.deg as i64;
        let qk = |k: usize| RatQT::q_pow(d * k as i64) - RatQT::one();
        Ok(match self {
            Pairing::Qt(b) => b.weight(rho)?,
            Pairing::Hall => z,
            Pairing::Sp => rho.parts().iter().fold(z, |acc, &k| acc / qk(2 * k)),
            Pairing::Gl => rho.parts().iter().fold(z, |acc, &k| acc / qk(k)),
            Pairing::Dual => rho
                .parts()
                .iter()
                .fold(z, |acc, &k| acc * qk(k) / qk(2 * k)),
        })
    }
}

/// Bilinear pairing, diagonal on power-sum products.
pub fn pair(f: &SymFunc, g: &SymFunc, kind: &Pairing) -> Result<RatQT> {
    let mut fams = f.families();
    fams.extend(g.families());
    kind.check_families(&fams)?;
    let a = f.to_p()?;
    let b = g.to_p()?;
    let (small, large) = if a.len() <= b.len() { (&a, &b) } else { (&b, &a) };
    let mut acc = RatQT::zero();
    for (k, c) in &small.terms {
        if let Some(d) = large.terms.get(k) {
            let mut w = c.mul_ref(d);
            for fac in k {
                w = w.mul_ref(&kind.weight(&fac.family, &fac.partition)?);
            }
            acc = acc.add_ref(&w);
        }
    }
    Ok(acc)
}

pub fn inner_qt(f: &SymFunc, g: &SymFunc, binding: &Binding) -> Result<RatQT> {
    pair(f, g, &Pairing::Qt(binding.clone()))
}

pub fn hall(f: &SymFunc, g: &SymFunc) -> Result<RatQT> {
    pair(f, g, &Pairing::Hall)
}

pub fn inner_sp(f: &SymFunc, g: &SymFunc) -> Result<RatQT> {
    pair(f, g, &Pairing::Sp)
}

pub fn inner_gl(f: &SymFunc, g: &SymFunc) -> Result<RatQT> {
    pair(f, g, &Pairing::Gl)
}

pub fn inner_dual(f: &SymFunc, g: &SymFunc) -> Result<RatQT> {
    pair(f, g, &Pairing::Dual)
}

/// `ω p_n = (-1)^{n-1} p_n` in every family.
pub fn omega(f: &SymFunc) -> Result<SymFunc> {
    f.scale_parts(|_, n| Ok(RatQT::from_int(if n % 2 == 0 { -1 } else { 1 })))
}

/// `ω_{q,t} p_n(φ) = (-1)^{n-1} (q_φ^n - 1)/(t_φ^n - 1) p_n(φ)`, where the
/// binding is rescaled by the family degree.
pub fn omega_qt(f: &SymFunc, binding: &Binding) -> Result<SymFunc> {
    f.scale_parts(|fam, n| {
        let b = binding.scaled(fam.deg);
        let num = b.q().pow(n as i64)? - RatQT::one();
        let den = b.t().pow(n as i64)? - RatQT::one();
        let v = num.checked_div(&den)?;
        Ok(if n % 2 == 0 { -v } else { v })
    })
}

/// Finitely supported map from families to nonempty partitions.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionFn {
    map: BTreeMap<FamilyLabel, Partition>,
}

impl PartitionFn {
    pub fn new<I: IntoIterator<Item = (FamilyLabel, Partition)>>(it: I) -> Self {
        let mut map = BTreeMap::new();
        for (f, p) in it {
            if !p.is_empty() {
                map.insert(f, p);
            }
        }
        PartitionFn { map }
    }

    pub fn single(f: FamilyLabel, p: Partition) -> Self {
        Self::new([(f, p)])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&FamilyLabel, &Partition)> {
        self.map.iter()
    }

    pub fn get(&self, f: &FamilyLabel) -> Option<&Partition> {
        self.map.get(f)
    }

    pub fn len(&self) -> usize {
        self.map.len()
    }

    pub fn is_empty(&self) -> bool {
        self.map.is_empty()
    }

    /// `‖μ‖ = Σ d(f)|μ(f)|`.
    pub fn weight(&self) -> usize {
        self.map
            .iter()
            .map(|(f, p)| f.deg as usize * p.size())
            .sum()
    }

    /// `|μ| = Σ |μ(f)|`, the number of boxes.
    pub fn boxes(&self) -> usize {
        self.map.values().map(Partition::size).sum()
    }

    /// Total number of parts over all families.
    pub fn total_len(&self) -> usize {
        self.map.values().map(Partition::len).sum()
    }

    pub fn kinds(&self) -> BTreeSet<FamilyKind> {
        self.map.keys().map(|f| f.kind).collect()
    }

    /// Applies `g` to every partition, dropping empty results.
    pub fn map_parts(&self, g: impl Fn(&FamilyLabel, &Partition) -> Partition) -> PartitionFn {
        PartitionFn::new(self.map.iter().map(|(f, p)| (f.clone(), g(f, p))))
    }

    /// Parses a JSON object such as `{"triv":[2,1],"a@2":[1]}`.
    pub fn parse(s: &str, kind: FamilyKind) -> Result<Self> {
        let v: serde_json::Value =
            serde_json::from_str(s).map_err(|e| Error::Parse(format!("{s}: {e}")))?;
        let obj = v
            .as_object()
            .ok_or_else(|| Error::Parse(format!("{s}: expected an object")))?;
        let mut items = Vec::new();
        for (k, p) in obj {
            let fam = FamilyLabel::parse(k, kind)?;
            let p: Partition = serde_json::from_value(p.clone())
                .map_err(|e| Error::Parse(format!("{k}: {e}")))?;
            items.push((fam, p));
        }
        Ok(PartitionFn::new(items))
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let mut m = serde_json::Map::new();
        for (f, p) in &self.map {
            m.insert(f.to_string(), serde_json::to_value(p).expect("partition"));
        }
        serde_json::Value::Object(m)
    }
}

impl fmt::Display for PartitionFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_json_value())
    }
}

/// Product of two power-sum vectors in one family.
pub fn pvec_mul(a: &PVec, b: &PVec) -> PVec {
    let mut out = PVec::new();
    for (ra, ca) in a {
        for (rb, cb) in b {
            let key = ra.union(rb);
            let v = ca.mul_ref(cb);
            let e = out.entry(key).or_insert_with(RatQT::zero);
            *e = e.add_ref(&v);
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    fn f1() -> FamilyLabel {
        FamilyLabel::f1()
    }

    fn c(n: i64) -> RatQT {
        RatQT::from_int(n)
    }

    #[test]
    fn e2_in_m() {
        let e2 = SymFunc::e(&f1(), 2).to_basis(&BasisLabel::M).unwrap();
        assert_eq!(e2, SymFunc::m(&f1(), part![1, 1]));
    }

    #[test]
    fn s21_in_p() {
        let s = SymFunc::s(&f1(), part![2, 1]).to_p().unwrap();
        let expect = SymFunc::p(&f1(), part![1, 1, 1])
            .sub(&SymFunc::p(&f1(), part![3]))
            .scale(&RatQT::from_ratio(1, 3));
        assert_eq!(s, expect);
    }

    #[test]
    fn p2_in_s() {
        let p2 = SymFunc::p(&f1(), part![2]).to_basis(&BasisLabel::S).unwrap();
        assert_eq!(p2, SymFunc::s(&f1(), part![2]).sub(&SymFunc::s(&f1(), part![1, 1])));
    }

    #[test]
    fn products() {
        let p = SymFunc::p(&f1(), part![2])
            .multiply(&SymFunc::p(&f1(), part![1]))
            .unwrap();
        assert_eq!(p, SymFunc::p(&f1(), part![2, 1]));
        let s = SymFunc::s(&f1(), part![1])
            .multiply(&SymFunc::s(&f1(), part![1]))
            .unwrap()
            .to_basis(&BasisLabel::S)
            .unwrap();
        assert_eq!(s, SymFunc::s(&f1(), part![2]).add(&SymFunc::s(&f1(), part![1, 1])));
        let x = SymFunc::s(&f1(), part![2, 1]);
        assert_eq!(SymFunc::one().multiply(&x).unwrap(), x.to_p().unwrap());
    }

    #[test]
    fn qt_pairing_examples() {
        let b = Binding::formal();
        let p1 = SymFunc::p(&f1(), part![1]);
        let q1 = RatQT::q() - c(1);
        let t1 = RatQT::t() - c(1);
        assert_eq!(inner_qt(&p1, &p1, &b).unwrap(), &q1 / &t1);
        let p2 = SymFunc::p(&f1(), part![2]);
        let p11 = SymFunc::p(&f1(), part![1, 1]);
        assert!(inner_qt(&p2, &p11, &b).unwrap().is_zero());
        let r = &q1 / &t1;
        assert_eq!(inner_qt(&p11, &p11, &b).unwrap(), c(2) * &r * &r);
        let other = SymFunc::p(&FamilyLabel::m("g", 1), part![1]);
        assert_eq!(inner_qt(&p1, &other, &b), Err(Error::MixedFamilies));
    }

    #[test]
    fn sp_pairing_examples() {
        let q = RatQT::q();
        let p1 = SymFunc::p(&f1(), part![1]);
        assert_eq!(inner_sp(&p1, &p1).unwrap(), c(1) / (&q * &q - c(1)));
        let p2 = SymFunc::p(&f1(), part![2]);
        let p11 = SymFunc::p(&f1(), part![1, 1]);
        assert!(inner_sp(&p2, &p11).unwrap().is_zero());
        for m in 1..5usize {
            let pm = SymFunc::p(&f1(), Partition::row(m));
            assert_eq!(
                inner_sp(&pm, &pm).unwrap(),
                c(m as i64) / (RatQT::q_pow(2 * m as i64) - c(1))
            );
        }
        let l = SymFunc::p(&FamilyLabel::triv(), part![1]);
        assert_eq!(inner_sp(&l, &l), Err(Error::ProjectFirst));
    }

    #[test]
    fn dual_pairing_examples() {
        let q = RatQT::q();
        let phi = FamilyLabel::triv();
        let p1 = SymFunc::p(&phi, part![1]);
        assert_eq!(inner_dual(&p1, &p1).unwrap(), c(1) / (&q + &c(1)));
        let psi = FamilyLabel::l("psi", 1);
        assert!(inner_dual(&p1, &SymFunc::p(&psi, part![1])).unwrap().is_zero());
        let chi = FamilyLabel::l("chi", 2);
        let p2 = SymFunc::p(&chi, part![2]);
        assert_eq!(
            inner_dual(&p2, &p2).unwrap(),
            c(2) * (RatQT::q_pow(4) - c(1)) / (RatQT::q_pow(8) - c(1))
        );
        let m = SymFunc::p(&f1(), part![1]);
        assert_eq!(inner_dual(&m, &m), Err(Error::UnexpectedMFamily));
    }

    #[test]
    fn omega_examples() {
        let p2 = SymFunc::p(&f1(), part![2]);
        assert_eq!(omega(&p2).unwrap(), p2.neg());
        let s21 = SymFunc::s(&f1(), part![2, 1]);
        assert_eq!(omega(&s21).unwrap(), s21.to_p().unwrap());
        let p1 = SymFunc::p(&f1(), part![1]);
        assert_eq!(
            omega_qt(&p1, &Binding::q2_q()).unwrap(),
            p1.scale(&(RatQT::q() + c(1)))
        );
    }

    #[test]
    fn json_round_trip() {
        let f = SymFunc::s(&f1(), part![2, 1])
            .to_p()
            .unwrap()
            .multiply(&SymFunc::p(&FamilyLabel::l("a", 2), part![1]))
            .unwrap();
        let v = f.to_json_value();
        assert_eq!(SymFunc::from_json_value(&v).unwrap(), f);
    }

    #[test]
    fn partition_fn_parse() {
        let l = PartitionFn::parse(r#"{"triv":[2,1],"a@2":[1]}"#, FamilyKind::L).unwrap();
        assert_eq!(l.weight(), 5);
        assert_eq!(l.boxes(), 4);
        assert!(PartitionFn::parse(r#"{"f1":[1]}"#, FamilyKind::L).is_err());
    }
}
