//! Graded Betti numbers of monomial ideals.
//!
//! For a multidegree `b`, the upper Koszul simplicial complex
//! `K^b(I) = { squarefree σ ⊆ supp(b) : x^(b-σ) ∈ I }` satisfies
//! `β_{i,b}(I) = dim H̃_{i-1}(K^b(I); Q)`, and only lcms of generator
//! subsets can carry nonzero Betti numbers. The table is the sum of these
//! over all such `b`, grouped by total degree.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, MonomialIdeal, Variable};
use crate::simplicial::{face_homology, SimplicialComplex, MAX_GROUND};

pub const DEFAULT_MAX_GENERATORS: usize = 20;
pub const DEFAULT_MAX_STRAND_VARS: usize = 24;
/// Environment variable overriding the generator-count guard.
pub const GUARD_ENV: &str = "EIL_GUARD_GENS";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Guard {
    pub max_generators: usize,
    pub max_strand_vars: usize,
}

impl Default for Guard {
    fn default() -> Self {
        Guard {
            max_generators: DEFAULT_MAX_GENERATORS,
            max_strand_vars: DEFAULT_MAX_STRAND_VARS,
        }
    }
}

impl Guard {
    /// Default guard with `EIL_GUARD_GENS` applied when it parses.
    pub fn from_env() -> Self {
        let mut g = Guard::default();
        if let Ok(raw) = std::env::var(GUARD_ENV) {
            match raw.trim().parse::<usize>() {
                Ok(n) if n > 0 => g.max_generators = n,
                _ => log::warn!("ignoring malformed {GUARD_ENV}={raw:?}"),
            }
        }
        g
    }

    fn check_generators(&self, n: usize) -> Result<()> {
        if n > self.max_generators {
            return Err(Error::Guard {
                what: "generator count",
                actual: n,
                limit: self.max_generators,
            });
        }
        Ok(())
    }

    fn check_strand(&self, n: usize) -> Result<()> {
        let limit = self.max_strand_vars.min(MAX_GROUND);
        if n > limit {
            return Err(Error::Guard {
                what: "strand ground set size",
                actual: n,
                limit,
            });
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Convention {
    OfIdeal,
    OfQuotient,
}

/// Nonzero graded Betti numbers `β_{i,j}` keyed by `(i, j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    convention: Convention,
    entries: BTreeMap<(usize, u64), u64>,
}

impl BettiTable {
    pub fn new(convention: Convention) -> Self {
        BettiTable {
            convention,
            entries: BTreeMap::new(),
        }
    }

    pub fn from_entries(
        convention: Convention,
        entries: impl IntoIterator<Item = ((usize, u64), u64)>,
    ) -> Self {
        let mut t = BettiTable::new(convention);
        for ((i, j), c) in entries {
            t.add(i, j, c);
        }
        t
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn add(&mut self, i: usize, j: u64, count: u64) {
        if count > 0 {
            *self.entries.entry((i, j)).or_insert(0) += count;
        }
    }

    pub fn get(&self, i: usize, j: u64) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = ((usize, u64), u64)> + '_ {
        self.entries.iter().map(|(&k, &v)| (k, v))
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// `max { j - i : β_{i,j} ≠ 0 }`.
    pub fn reg(&self) -> Option<i64> {
        self.entries.keys().map(|&(i, j)| j as i64 - i as i64).max()
    }

    /// `max { i : β_{i,j} ≠ 0 }`.
    pub fn pd(&self) -> Option<usize> {
        self.entries.keys().map(|&(i, _)| i).max()
    }

    pub fn column_total(&self, i: usize) -> u64 {
        self.entries
            .iter()
            .filter(|(&(k, _), _)| k == i)
            .map(|(_, &v)| v)
            .sum()
    }

    /// Shifts between the tables of `I` and `S/I`:
    /// `β_{i+1,j}(S/I) = β_{i,j}(I)` and `β_{0,0}(S/I) = 1`.
    pub fn to_quotient(&self) -> BettiTable {
        match self.convention {
            Convention::OfQuotient => self.clone(),
            Convention::OfIdeal => {
                let mut t = BettiTable::new(Convention::OfQuotient);
                t.add(0, 0, 1);
                for (&(i, j), &c) in &self.entries {
                    t.add(i + 1, j, c);
                }
                t
            }
        }
    }

    pub fn to_ideal(&self) -> BettiTable {
        match self.convention {
            Convention::OfIdeal => self.clone(),
            Convention::OfQuotient => BettiTable::from_entries(
                Convention::OfIdeal,
                self.entries
                    .iter()
                    .filter(|(&(i, _), _)| i > 0)
                    .map(|(&(i, j), &c)| ((i - 1, j), c)),
            ),
        }
    }

    /// `Σ_i (-1)^i β_{i,j}(S/I)` for every degree `j` where it is nonzero.
    pub fn quotient_euler_characteristic(&self) -> BTreeMap<u64, i64> {
        let mut out: BTreeMap<u64, i64> = BTreeMap::new();
        for ((i, j), c) in self.to_quotient().entries() {
            let s = if i % 2 == 0 { c as i64 } else { -(c as i64) };
            *out.entry(j).or_insert(0) += s;
        }
        out.retain(|_, v| *v != 0);
        out
    }

    /// JSON map `{"i,j": count}`.
    pub fn to_json_map(&self) -> BTreeMap<String, u64> {
        self.entries
            .iter()
            .map(|(&(i, j), &c)| (format!("{i},{j}"), c))
            .collect()
    }

    pub fn from_json_map(convention: Convention, map: &BTreeMap<String, u64>) -> Result<Self> {
        let mut t = BettiTable::new(convention);
        for (k, &v) in map {
            let bad = || Error::parse(0, format!("malformed Betti key `{k}`"));
            let (i, j) = k.split_once(',').ok_or_else(bad)?;
            let i = i.trim().parse().map_err(|_| bad())?;
            let j = j.trim().parse().map_err(|_| bad())?;
            t.add(i, j, v);
        }
        Ok(t)
    }

    /// Macaulay-style grid: columns are homological degrees `i`, rows are
    /// `j - i`, zeros print as `.`.
    pub fn render_grid(&self) -> String {
        let mut out = String::new();
        let (Some(pd), Some(top)) = (self.pd(), self.reg()) else {
            out.push_str("(zero table)\n");
            return out;
        };
        let bottom = self
            .entries
            .keys()
            .map(|&(i, j)| j as i64 - i as i64)
            .min()
            .unwrap_or(0);
        let totals: Vec<u64> = (0..=pd).map(|i| self.column_total(i)).collect();
        let width = totals
            .iter()
            .map(|t| t.to_string().len())
            .chain(std::iter::once(pd.to_string().len()))
            .max()
            .unwrap_or(1);
        let label = top.to_string().len().max(bottom.to_string().len()).max(5) + 1;

        let _ = write!(out, "{:>label$}", "");
        for i in 0..=pd {
            let _ = write!(out, " {:>width$}", i);
        }
        out.push('\n');
        let _ = write!(out, "{:>label$}", "total:");
        for t in &totals {
            let _ = write!(out, " {:>width$}", t);
        }
        out.push('\n');
        for r in bottom..=top {
            let _ = write!(out, "{:>label$}", format!("{r}:"));
            for i in 0..=pd {
                let j = r + i as i64;
                let v = if j < 0 { 0 } else { self.get(i, j as u64) };
                if v == 0 {
                    let _ = write!(out, " {:>width$}", ".");
                } else {
                    let _ = write!(out, " {:>width$}", v);
                }
            }
            out.push('\n');
        }
        out
    }
}

/// `reg`, `pd` of `I` and `depth(S/I)` by Auslander-Buchsbaum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantSummary {
    pub reg: i64,
    pub pd: i64,
    pub depth_of_quotient: i64,
    pub ambient_variable_count: usize,
}

/// Dense exponent vectors indexed by ambient position.
struct DenseIdeal {
    ambient: Vec<Variable>,
    gens: Vec<Vec<u32>>,
}

impl DenseIdeal {
    fn new(ideal: &MonomialIdeal) -> Self {
        let index = ideal.ambient_index();
        let n = ideal.ambient().len();
        let gens = ideal
            .generators()
            .iter()
            .map(|g| {
                let mut v = vec![0u32; n];
                for (var, e) in g.exponents() {
                    v[index[var]] = e;
                }
                v
            })
            .collect();
        DenseIdeal {
            ambient: ideal.ambient().to_vec(),
            gens,
        }
    }

    fn to_dense(&self, m: &Monomial) -> Result<Vec<u32>> {
        let mut v = vec![0u32; self.ambient.len()];
        for (var, e) in m.exponents() {
            let k = self
                .ambient
                .iter()
                .position(|a| a == var)
                .ok_or_else(|| Error::VariableOutsideAmbient(var.to_string()))?;
            v[k] = e;
        }
        Ok(v)
    }

    fn to_monomial(&self, v: &[u32]) -> Monomial {
        Monomial::from_pairs(
            v.iter()
                .zip(&self.ambient)
                .filter(|(&e, _)| e > 0)
                .map(|(&e, var)| (var.clone(), e)),
        )
        .expect("exponents come from a valid ideal")
    }

    /// All lcms of nonempty generator subsets: the closure of the
    /// generators under `lcm(·, g)`.
    fn lcm_lattice(&self) -> Vec<Vec<u32>> {
        let mut seen: HashSet<Vec<u32>> = HashSet::new();
        let mut queue: Vec<Vec<u32>> = Vec::new();
        for g in &self.gens {
            if seen.insert(g.clone()) {
                queue.push(g.clone());
            }
        }
        while let Some(cur) = queue.pop() {
            for g in &self.gens {
                let l: Vec<u32> = cur.iter().zip(g).map(|(&a, &b)| a.max(b)).collect();
                if !seen.contains(&l) {
                    seen.insert(l.clone());
                    queue.push(l);
                }
            }
        }
        let mut out: Vec<Vec<u32>> = seen.into_iter().collect();
        out.sort_by(|a, b| {
            let da: u64 = a.iter().map(|&e| u64::from(e)).sum();
            let db: u64 = b.iter().map(|&e| u64::from(e)).sum();
            da.cmp(&db).then_with(|| b.cmp(a))
        });
        out
    }

    fn divides(g: &[u32], b: &[u32]) -> bool {
        g.iter().zip(b).all(|(&x, &y)| x <= y)
    }

    /// `b` is an lcm of generators iff it equals the lcm of the
    /// generators dividing it.
    fn is_candidate(&self, b: &[u32]) -> bool {
        let mut acc: Option<Vec<u32>> = None;
        for g in self.gens.iter().filter(|g| Self::divides(g, b)) {
            acc = Some(match acc {
                None => g.clone(),
                Some(a) => a.iter().zip(g).map(|(&x, &y)| x.max(y)).collect(),
            });
        }
        acc.as_deref() == Some(b)
    }

    /// Support positions of `b` and the facets of `K^b(I)` as masks over
    /// them: `σ` is a face iff `σ ⊆ {v : g_v < b_v}` for some `g | b`.
    fn strand_facets(&self, b: &[u32]) -> (Vec<usize>, Vec<u32>) {
        let support: Vec<usize> = (0..b.len()).filter(|&k| b[k] > 0).collect();
        let mut facets: Vec<u32> = self
            .gens
            .iter()
            .filter(|g| Self::divides(g, b))
            .map(|g| {
                support
                    .iter()
                    .enumerate()
                    .filter(|(_, &var)| g[var] < b[var])
                    .fold(0u32, |m, (bit, _)| m | (1 << bit))
            })
            .collect();
        facets.sort_unstable();
        facets.dedup();
        let maximal: Vec<u32> = facets
            .iter()
            .copied()
            .filter(|&f| !facets.iter().any(|&h| h != f && f & h == f))
            .collect();
        (support, maximal)
    }
}

/// Betti engine with a sizing guard.
#[derive(Clone, Copy, Debug, Default)]
pub struct BettiEngine {
    guard: Guard,
    sequential: bool,
}

impl BettiEngine {
    pub fn new(guard: Guard) -> Self {
        BettiEngine {
            guard,
            sequential: false,
        }
    }

    pub fn from_env() -> Self {
        BettiEngine::new(Guard::from_env())
    }

    /// Runs strands one at a time instead of on the rayon pool.
    pub fn sequential(mut self) -> Self {
        self.sequential = true;
        self
    }

    pub fn guard(&self) -> Guard {
        self.guard
    }

    /// `{ lcm(S) : ∅ ≠ S ⊆ G(I) }`, ordered by degree.
    pub fn candidate_degrees(&self, ideal: &MonomialIdeal) -> Result<Vec<Monomial>> {
        if ideal.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        self.guard.check_generators(ideal.len())?;
        let dense = DenseIdeal::new(ideal);
        Ok(dense
            .lcm_lattice()
            .iter()
            .map(|b| dense.to_monomial(b))
            .collect())
    }

    /// The upper Koszul complex `K^b(I)` on `supp(b)`.
    pub fn strand_complex(&self, ideal: &MonomialIdeal, b: &Monomial) -> Result<SimplicialComplex> {
        if ideal.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        let dense = DenseIdeal::new(ideal);
        let bv = dense.to_dense(b)?;
        if !dense.is_candidate(&bv) {
            return Err(Error::NotACandidate(b.to_string()));
        }
        let (support, facets) = dense.strand_facets(&bv);
        self.guard.check_strand(support.len())?;
        let ground = support.iter().map(|&k| dense.ambient[k].clone()).collect();
        let c = SimplicialComplex::from_facets(ground, &facets);
        debug_assert!(c.is_downward_closed());
        Ok(c)
    }

    /// Nonzero multigraded Betti numbers `β_{i,b}(I)`.
    pub fn multigraded_betti(&self, ideal: &MonomialIdeal) -> Result<BTreeMap<(usize, Monomial), u64>> {
        if ideal.is_zero() {
            return Ok(BTreeMap::new());
        }
        self.guard.check_generators(ideal.len())?;
        let dense = DenseIdeal::new(ideal);
        let lattice = dense.lcm_lattice();
        if let Some(widest) = lattice.iter().map(|b| b.iter().filter(|&&e| e > 0).count()).max() {
            self.guard.check_strand(widest)?;
        }
        let strand = |b: &Vec<u32>| -> Vec<(usize, usize)> { strand_betti(&dense, b) };
        let per_strand: Vec<Vec<(usize, usize)>> = if self.sequential {
            lattice.iter().map(strand).collect()
        } else {
            lattice.par_iter().map(strand).collect()
        };
        let mut out = BTreeMap::new();
        for (b, ranks) in lattice.iter().zip(per_strand) {
            for (i, r) in ranks {
                out.insert((i, dense.to_monomial(b)), r as u64);
            }
        }
        Ok(out)
    }

    /// Graded Betti table of `I` (ideal convention). The zero ideal has the
    /// empty table.
    pub fn betti_table(&self, ideal: &MonomialIdeal) -> Result<BettiTable> {
        let mut t = BettiTable::new(Convention::OfIdeal);
        for ((i, b), c) in self.multigraded_betti(ideal)? {
            t.add(i, b.degree(), c);
        }
        Ok(t)
    }

    pub fn invariants(&self, ideal: &MonomialIdeal) -> Result<InvariantSummary> {
        if ideal.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        let t = self.betti_table(ideal)?;
        Ok(summarize(&t, ideal.ambient().len()))
    }
}

/// Reads reg/pd off an ideal-convention table; depth(S/I) = n - pd(S/I).
pub fn summarize(table: &BettiTable, ambient_variable_count: usize) -> InvariantSummary {
    let t = table.to_ideal();
    let reg = t.reg().expect("nonzero ideal has a nonempty table");
    let pd = t.pd().expect("nonzero ideal has a nonempty table") as i64;
    InvariantSummary {
        reg,
        pd,
        depth_of_quotient: ambient_variable_count as i64 - (pd + 1),
        ambient_variable_count,
    }
}

/// `(i, β_{i,b})` for the nonzero Betti numbers at multidegree `b`.
fn strand_betti(dense: &DenseIdeal, b: &[u32]) -> Vec<(usize, usize)> {
    let (support, facets) = dense.strand_facets(b);
    // A cone over a common vertex is acyclic.
    let common = facets.iter().fold(u32::MAX, |acc, &f| acc & f);
    if !facets.is_empty() && common != 0 {
        return Vec::new();
    }
    let homology = if facets.len() < support.len() && facets.len() <= MAX_GROUND && !facets.contains(&0) {
        face_homology(facets.len(), nerve(&facets))
    } else {
        let ground = support.iter().map(|&k| dense.ambient[k].clone()).collect();
        face_homology(support.len(), SimplicialComplex::from_facets(ground, &facets).faces())
    };
    homology
        .expect("b divides itself, so the empty face is present")
        .into_iter()
        .filter(|&(_, r)| r > 0)
        .map(|(d, r)| ((d + 1) as usize, r))
        .collect()
}

/// Faces of the nerve of a family of nonempty simplices: index sets whose
/// simplices share a vertex, plus the empty set. Every nonempty
/// intersection of simplices is a simplex, so the nerve has the homotopy
/// type of their union.
fn nerve(facets: &[u32]) -> Vec<u32> {
    fn grow(facets: &[u32], next: usize, set: u32, meet: u32, out: &mut Vec<u32>) {
        out.push(set);
        for k in next..facets.len() {
            let m = meet & facets[k];
            if m != 0 {
                grow(facets, k + 1, set | 1 << k, m, out);
            }
        }
    }
    let mut out = Vec::new();
    grow(facets, 0, 0, u32::MAX, &mut out);
    out
}

/// `Σ_{S ⊆ G(I)} (-1)^{|S|}` grouped by `deg lcm(S)`, including `S = ∅`
/// in degree 0. Equals the Euler characteristic of every strand of any
/// free resolution of `S/I`, minimal or not.
pub fn lcm_alternating_sums(ideal: &MonomialIdeal, guard: &Guard) -> Result<BTreeMap<u64, i64>> {
    guard.check_generators(ideal.len())?;
    let dense = DenseIdeal::new(ideal);
    let mut out: HashMap<u64, i64> = HashMap::new();
    let mut cur = vec![0u32; dense.ambient.len()];
    fn walk(gens: &[Vec<u32>], k: usize, cur: &mut Vec<u32>, parity: bool, out: &mut HashMap<u64, i64>) {
        if k == gens.len() {
            let d: u64 = cur.iter().map(|&e| u64::from(e)).sum();
            *out.entry(d).or_insert(0) += if parity { -1 } else { 1 };
            return;
        }
        walk(gens, k + 1, cur, parity, out);
        let saved = cur.clone();
        for (c, &g) in cur.iter_mut().zip(&gens[k]) {
            *c = (*c).max(g);
        }
        walk(gens, k + 1, cur, !parity, out);
        *cur = saved;
    }
    walk(&dense.gens, 0, &mut cur, false, &mut out);
    Ok(out.into_iter().filter(|&(_, v)| v != 0).collect())
}

/// Checks a computed table of `I` against the lcm alternating sums.
pub fn euler_check(ideal: &MonomialIdeal, table: &BettiTable, guard: &Guard) -> Result<bool> {
    Ok(lcm_alternating_sums(ideal, guard)? == table.quotient_euler_characteristic())
}

pub fn candidate_degrees(ideal: &MonomialIdeal) -> Result<Vec<Monomial>> {
    BettiEngine::default().candidate_degrees(ideal)
}

pub fn strand_complex(ideal: &MonomialIdeal, b: &Monomial) -> Result<SimplicialComplex> {
    BettiEngine::default().strand_complex(ideal, b)
}

pub fn betti_table(ideal: &MonomialIdeal) -> Result<BettiTable> {
    BettiEngine::default().betti_table(ideal)
}

pub fn invariants(ideal: &MonomialIdeal) -> Result<InvariantSummary> {
    BettiEngine::default().invariants(ideal)
}
