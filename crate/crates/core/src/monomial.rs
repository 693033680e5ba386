//! Monomials and monomial ideals over named variables.
//!
//! Ideals always hold their minimal generating set. The zero ideal is
//! representable (no generators); the unit ideal is not.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};

/// A variable `x` or, after polarization, `x_j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Variable {
    base: String,
    polar_index: Option<u32>,
}

impl Variable {
    pub fn new(base: impl Into<String>) -> Self {
        Variable {
            base: base.into(),
            polar_index: None,
        }
    }

    pub fn polarized(base: impl Into<String>, index: u32) -> Self {
        assert!(index >= 1, "polar indices start at 1");
        Variable {
            base: base.into(),
            polar_index: Some(index),
        }
    }

    pub fn base(&self) -> &str {
        &self.base
    }

    pub fn polar_index(&self) -> Option<u32> {
        self.polar_index
    }

    pub fn is_polarized(&self) -> bool {
        self.polar_index.is_some()
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.polar_index {
            None => write!(f, "{}", self.base),
            Some(j) => write!(f, "{}_{}", self.base, j),
        }
    }
}

/// Compares identifiers so that embedded digit runs order numerically
/// (`x2 < x10`).
pub(crate) fn natural_cmp(a: &str, b: &str) -> Ordering {
    let (mut a, mut b) = (a.as_bytes(), b.as_bytes());
    loop {
        match (a.first(), b.first()) {
            (None, None) => return Ordering::Equal,
            (None, Some(_)) => return Ordering::Less,
            (Some(_), None) => return Ordering::Greater,
            (Some(x), Some(y)) if x.is_ascii_digit() && y.is_ascii_digit() => {
                let la = a.iter().take_while(|c| c.is_ascii_digit()).count();
                let lb = b.iter().take_while(|c| c.is_ascii_digit()).count();
                let (da, db) = (&a[..la], &b[..lb]);
                let ta = trim_zeros(da);
                let tb = trim_zeros(db);
                let ord = ta
                    .len()
                    .cmp(&tb.len())
                    .then_with(|| ta.cmp(tb))
                    .then_with(|| la.cmp(&lb));
                if ord != Ordering::Equal {
                    return ord;
                }
                a = &a[la..];
                b = &b[lb..];
            }
            (Some(x), Some(y)) => {
                if x != y {
                    return x.cmp(y);
                }
                a = &a[1..];
                b = &b[1..];
            }
        }
    }
}

fn trim_zeros(digits: &[u8]) -> &[u8] {
    let n = digits.iter().take_while(|&&c| c == b'0').count();
    &digits[n..]
}

impl Ord for Variable {
    fn cmp(&self, other: &Self) -> Ordering {
        natural_cmp(&self.base, &other.base).then(self.polar_index.cmp(&other.polar_index))
    }
}

impl PartialOrd for Variable {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A monomial as a sparse exponent map. Stored exponents are always >= 1.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exponents: BTreeMap<Variable, u32>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: Variable) -> Self {
        Monomial::power(v, 1)
    }

    pub fn power(v: Variable, exponent: u32) -> Self {
        let mut m = Monomial::one();
        if exponent > 0 {
            m.exponents.insert(v, exponent);
        }
        m
    }

    /// Builds a monomial from `(variable, exponent)` pairs, multiplying
    /// repeated variables together.
    pub fn from_pairs<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Variable, u32)>,
    {
        let mut m = Monomial::one();
        for (v, e) in pairs {
            if e == 0 {
                continue;
            }
            let slot = m.exponents.entry(v).or_insert(0);
            *slot = slot.checked_add(e).ok_or(Error::ExponentOverflow)?;
        }
        Ok(m)
    }

    pub fn exponent(&self, v: &Variable) -> u32 {
        self.exponents.get(v).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> impl Iterator<Item = (&Variable, u32)> {
        self.exponents.iter().map(|(v, &e)| (v, e))
    }

    pub fn degree(&self) -> u64 {
        self.exponents.values().map(|&e| u64::from(e)).sum()
    }

    pub fn support(&self) -> BTreeSet<&Variable> {
        self.exponents.keys().collect()
    }

    pub fn is_unit(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn is_squarefree(&self) -> bool {
        self.exponents.values().all(|&e| e == 1)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exponents
            .iter()
            .all(|(v, &e)| other.exponent(v) >= e)
    }

    /// Componentwise maximum of exponents.
    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = self.clone();
        for (v, &e) in &other.exponents {
            let slot = out.exponents.entry(v.clone()).or_insert(0);
            *slot = (*slot).max(e);
        }
        out
    }

    pub fn try_mul(&self, other: &Monomial) -> Result<Monomial> {
        Monomial::from_pairs(
            self.exponents
                .iter()
                .chain(other.exponents.iter())
                .map(|(v, &e)| (v.clone(), e)),
        )
    }

    pub fn shares_variable_with(&self, other: &Monomial) -> Option<&Variable> {
        self.exponents
            .keys()
            .find(|v| other.exponents.contains_key(*v))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        for (k, (v, &e)) in self.exponents.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// `lcm_of(a, b)`: componentwise maximum of exponents.
pub fn lcm_of(a: &Monomial, b: &Monomial) -> Monomial {
    a.lcm(b)
}

/// A monomial ideal given by its minimal generators in a declared ambient
/// ring. Generator order is the order of first appearance in the input.
#[derive(Clone, Debug)]
pub struct MonomialIdeal {
    ambient: Vec<Variable>,
    generators: Vec<Monomial>,
}

impl MonomialIdeal {
    pub fn ambient(&self) -> &[Variable] {
        &self.ambient
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    /// Variables dividing at least one generator, in ambient order.
    pub fn support(&self) -> Vec<&Variable> {
        self.ambient
            .iter()
            .filter(|v| self.generators.iter().any(|g| g.exponent(v) > 0))
            .collect()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    pub fn is_squarefree(&self) -> bool {
        self.generators.iter().all(Monomial::is_squarefree)
    }

    pub fn zero(ambient: Vec<Variable>) -> Result<Self> {
        make_ideal(Vec::new(), ambient)
    }

    /// Generators in canonical sorted order, for set-like comparisons.
    pub fn sorted_generators(&self) -> Vec<Monomial> {
        let mut g = self.generators.clone();
        g.sort();
        g
    }

    /// `I + J`; the ambient is the union (this ideal's variables first).
    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        let ambient = merge_ambient(&self.ambient, &other.ambient);
        let gens = self
            .generators
            .iter()
            .chain(other.generators.iter())
            .cloned()
            .collect();
        make_ideal(gens, ambient)
    }

    /// Same generators in a larger ambient ring.
    pub fn with_ambient(&self, ambient: Vec<Variable>) -> Result<MonomialIdeal> {
        make_ideal(self.generators.clone(), ambient)
    }

    /// Position of every ambient variable, used by dense algorithms.
    pub(crate) fn ambient_index(&self) -> HashMap<&Variable, usize> {
        self.ambient.iter().enumerate().map(|(i, v)| (v, i)).collect()
    }
}

impl PartialEq for MonomialIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.sorted_generators() == other.sorted_generators()
    }
}

impl Eq for MonomialIdeal {}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.generators.is_empty() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (k, g) in self.generators.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

fn merge_ambient(a: &[Variable], b: &[Variable]) -> Vec<Variable> {
    let mut out = a.to_vec();
    for v in b {
        if !out.contains(v) {
            out.push(v.clone());
        }
    }
    out
}

/// Builds the ideal generated by `raw_generators`, keeping only the
/// divisibility-minimal ones (first occurrence wins among duplicates).
pub fn make_ideal(raw_generators: Vec<Monomial>, ambient: Vec<Variable>) -> Result<MonomialIdeal> {
    let mut seen = BTreeSet::new();
    for v in &ambient {
        if !seen.insert(v) {
            return Err(Error::DuplicateVariable(v.to_string()));
        }
    }
    for g in &raw_generators {
        if g.is_unit() {
            return Err(Error::UnitGenerator);
        }
        if let Some((v, _)) = g.exponents().find(|(v, _)| !seen.contains(v)) {
            return Err(Error::VariableOutsideAmbient(v.to_string()));
        }
    }

    let mut minimal: Vec<Monomial> = Vec::with_capacity(raw_generators.len());
    for (k, g) in raw_generators.iter().enumerate() {
        let dominated = raw_generators.iter().enumerate().any(|(l, h)| {
            l != k && h.divides(g) && (h != g || l < k)
        });
        if !dominated {
            minimal.push(g.clone());
        }
    }
    Ok(MonomialIdeal {
        ambient,
        generators: minimal,
    })
}

/// `J ∩ K` for monomial ideals: generated by the pairwise lcms.
pub fn intersect(j: &MonomialIdeal, k: &MonomialIdeal) -> Result<MonomialIdeal> {
    if j.ambient != k.ambient {
        return Err(Error::AmbientMismatch);
    }
    let gens = j
        .generators
        .iter()
        .flat_map(|u| k.generators.iter().map(move |v| u.lcm(v)))
        .collect();
    make_ideal(gens, j.ambient.clone())
}

/// The product `(u)·I` where `u` shares no variable with `I`. New
/// variables of `u` are appended to the ambient.
pub fn multiply_external(u: &Monomial, ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    for g in &ideal.generators {
        if let Some(v) = u.shares_variable_with(g) {
            return Err(Error::OverlappingSupport(v.to_string()));
        }
    }
    let extra: Vec<Variable> = u.support().into_iter().cloned().collect();
    let ambient = merge_ambient(&ideal.ambient, &extra);
    let gens = ideal
        .generators
        .iter()
        .map(|g| g.try_mul(u))
        .collect::<Result<Vec<_>>>()?;
    make_ideal(gens, ambient)
}

/// Polarization of a single monomial: `x^a ↦ x_1 x_2 ··· x_a`.
pub fn polarize_monomial(u: &Monomial) -> Result<Monomial> {
    if let Some((v, _)) = u.exponents().find(|(v, _)| v.is_polarized()) {
        return Err(Error::AlreadyPolarized(v.to_string()));
    }
    Monomial::from_pairs(
        u.exponents()
            .flat_map(|(v, e)| (1..=e).map(move |j| (Variable::polarized(v.base(), j), 1))),
    )
}

/// Polarizes every generator. The new ambient holds `x_j` for
/// `1 <= j <= max exponent of x`, ordered by the original ambient order
/// and then by polar index.
pub fn polarize(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if let Some(v) = ideal.ambient.iter().find(|v| v.is_polarized()) {
        return Err(Error::AlreadyPolarized(v.to_string()));
    }
    let mut ambient = Vec::new();
    for v in &ideal.ambient {
        let top = ideal
            .generators
            .iter()
            .map(|g| g.exponent(v))
            .max()
            .unwrap_or(0);
        ambient.extend((1..=top).map(|j| Variable::polarized(v.base(), j)));
    }
    let gens = ideal
        .generators
        .iter()
        .map(polarize_monomial)
        .collect::<Result<Vec<_>>>()?;
    debug_assert_eq!(gens.len(), ideal.generators.len());
    make_ideal(gens, ambient)
}
