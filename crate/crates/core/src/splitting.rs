//! Betti splittings `I = J + K` and the cycle-edge split of a polarized
//! edge ideal.

use serde::{Deserialize, Serialize};

use crate::betti::{BettiEngine, BettiTable};
use crate::classify::{check_hypotheses, classify, ClassTag};
use crate::digraph::WeightedDigraph;
use crate::error::{Error, Result};
use crate::monomial::{intersect, make_ideal, polarize, polarize_monomial, Monomial, MonomialIdeal};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplitPair {
    pub j: MonomialIdeal,
    pub k: MonomialIdeal,
    pub split_edge: (String, String),
}

/// Splits `I(D)^P` at the cycle edge `e`: `K` is the polarized generator of
/// `e` and `J` the polarization of `I(D ∖ e)`, both in the ambient ring of
/// `I(D)^P`. Without an explicit edge, the cycle edge entering the
/// lowest-indexed cycle vertex is used.
pub fn build_split(d: &WeightedDigraph, edge: Option<(&str, &str)>) -> Result<SplitPair> {
    let d = d.normalize_source_weights();
    let cls = classify(&d);
    if !cls.tag().is_within(ClassTag::UnicyclicAttached) {
        return Err(Error::NotCyclic(format!("graph is {}", cls.tag())));
    }
    let cycle = cls.cycle().expect("connected cyclic class has a cycle");
    let (tail, head) = match edge {
        Some((t, h)) => {
            d.index_of(t)?;
            d.index_of(h)?;
            let on_cycle = (0..cycle.len())
                .any(|k| cycle[k] == t && cycle[(k + 1) % cycle.len()] == h);
            if !on_cycle {
                return Err(Error::EdgeNotOnCycle(t.to_string(), h.to_string()));
            }
            (t.to_string(), h.to_string())
        }
        None => {
            let lowest = cycle
                .iter()
                .min_by_key(|v| d.index_of(v).expect("cycle vertices exist"))
                .expect("cycle is nonempty");
            let k = cycle.iter().position(|v| v == lowest).unwrap();
            let prev = &cycle[(k + cycle.len() - 1) % cycle.len()];
            (prev.clone(), lowest.clone())
        }
    };

    let ideal = d.edge_ideal();
    let polar = polarize(&ideal)?;
    let t = d.index_of(&tail)?;
    let h = d.index_of(&head)?;
    let pos = d
        .edge_indices()
        .iter()
        .position(|&e| e == (t, h))
        .ok_or_else(|| Error::MissingEdge(tail.clone(), head.clone()))?;
    let k_gen = polarize_monomial(&ideal.generators()[pos])?;

    let rest = d.delete_edge(&tail, &head)?.edge_ideal();
    let j_gens: Vec<Monomial> = rest
        .generators()
        .iter()
        .map(polarize_monomial)
        .collect::<Result<_>>()?;
    let j = make_ideal(j_gens, polar.ambient().to_vec())?;
    let k = make_ideal(vec![k_gen], polar.ambient().to_vec())?;
    debug_assert!(is_partition(&polar, &j, &k));
    Ok(SplitPair {
        j,
        k,
        split_edge: (tail, head),
    })
}

fn is_partition(i: &MonomialIdeal, j: &MonomialIdeal, k: &MonomialIdeal) -> bool {
    let mut union: Vec<Monomial> = j.generators().iter().chain(k.generators()).cloned().collect();
    union.sort();
    let disjoint = !j.generators().iter().any(|g| k.generators().contains(g));
    disjoint && union == i.sorted_generators()
}

/// One `(i, j)` entry of the splitting identity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitEntry {
    pub i: usize,
    pub j: u64,
    pub beta_i: u64,
    pub beta_j: u64,
    pub beta_k: u64,
    /// `β_{i-1,j}(J ∩ K)`, zero when `i = 0`.
    pub beta_jk_shifted: u64,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MaxFormulaCheck {
    pub actual: i64,
    pub from_parts: i64,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SplittingVerdict {
    pub identity_holds: bool,
    pub entries: Vec<SplitEntry>,
    /// `reg(I) = max{reg J, reg K, reg(J∩K) - 1}`.
    pub reg_check: MaxFormulaCheck,
    /// `pd(I) = max{pd J, pd K, pd(J∩K) + 1}`.
    pub pd_check: MaxFormulaCheck,
    pub reg_intersection: i64,
    pub pd_intersection: i64,
}

/// Checks `β_{i,j}(I) = β_{i,j}(J) + β_{i,j}(K) + β_{i-1,j}(J ∩ K)` at
/// every `(i, j)` where any side is nonzero.
pub fn check_betti_splitting(
    engine: &BettiEngine,
    i: &MonomialIdeal,
    j: &MonomialIdeal,
    k: &MonomialIdeal,
) -> Result<SplittingVerdict> {
    if j.ambient() != i.ambient() || k.ambient() != i.ambient() {
        return Err(Error::AmbientMismatch);
    }
    if j.is_zero() || k.is_zero() || !is_partition(i, j, k) {
        return Err(Error::NotAPartition);
    }
    let jk = intersect(j, k)?;
    let ideals = [i, j, k, &jk];
    let tables: Vec<Result<BettiTable>> = {
        use rayon::prelude::*;
        ideals.par_iter().map(|x| engine.betti_table(x)).collect()
    };
    let mut tables = tables.into_iter().collect::<Result<Vec<_>>>()?.into_iter();
    let (ti, tj, tk, tjk) = (
        tables.next().unwrap(),
        tables.next().unwrap(),
        tables.next().unwrap(),
        tables.next().unwrap(),
    );

    let mut keys: Vec<(usize, u64)> = ti
        .entries()
        .chain(tj.entries())
        .chain(tk.entries())
        .map(|(key, _)| key)
        .chain(tjk.entries().map(|((a, b), _)| (a + 1, b)))
        .collect();
    keys.sort_unstable();
    keys.dedup();
    let entries: Vec<SplitEntry> = keys
        .into_iter()
        .map(|(a, b)| {
            let shifted = if a == 0 { 0 } else { tjk.get(a - 1, b) };
            let lhs = ti.get(a, b);
            let rhs = tj.get(a, b) + tk.get(a, b) + shifted;
            SplitEntry {
                i: a,
                j: b,
                beta_i: lhs,
                beta_j: tj.get(a, b),
                beta_k: tk.get(a, b),
                beta_jk_shifted: shifted,
                holds: lhs == rhs,
            }
        })
        .collect();

    let reg = |t: &BettiTable| t.reg().expect("nonzero ideal");
    let pd = |t: &BettiTable| t.pd().expect("nonzero ideal") as i64;
    let reg_parts = reg(&tj).max(reg(&tk)).max(reg(&tjk) - 1);
    let pd_parts = pd(&tj).max(pd(&tk)).max(pd(&tjk) + 1);
    Ok(SplittingVerdict {
        identity_holds: entries.iter().all(|e| e.holds),
        entries,
        reg_check: MaxFormulaCheck {
            actual: reg(&ti),
            from_parts: reg_parts,
            holds: reg(&ti) == reg_parts,
        },
        pd_check: MaxFormulaCheck {
            actual: pd(&ti),
            from_parts: pd_parts,
            holds: pd(&ti) == pd_parts,
        },
        reg_intersection: reg(&tjk),
        pd_intersection: pd(&tjk),
    })
}

/// All generators in one degree `d` and `reg = d`.
pub fn has_linear_resolution(engine: &BettiEngine, j: &MonomialIdeal) -> Result<bool> {
    let Some(first) = j.generators().first() else {
        return Err(Error::ZeroIdeal);
    };
    let d = first.degree();
    if j.generators().iter().any(|g| g.degree() != d) {
        return Ok(false);
    }
    let t = engine.betti_table(j)?;
    Ok(t.reg() == Some(d as i64))
}

/// Expected `J ∩ K` invariants for a hypothesis-satisfying cyclic graph:
/// `reg = Σw - |E| + 2`, `pd = |E| - 2`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionCheck {
    pub expected_reg: i64,
    pub expected_pd: i64,
    pub reg: i64,
    pub pd: i64,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SplitReport {
    pub graph: WeightedDigraph,
    pub split_edge: (String, String),
    pub j: String,
    pub k: String,
    pub k_has_linear_resolution: bool,
    pub verdict: SplittingVerdict,
    /// Present only when the weight hypotheses hold.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub intersection: Option<IntersectionCheck>,
}

impl SplitReport {
    pub fn all_checks_hold(&self) -> bool {
        self.verdict.identity_holds
            && self.verdict.reg_check.holds
            && self.verdict.pd_check.holds
            && self.intersection.as_ref().is_none_or(|c| c.holds)
    }

    pub fn to_markdown(&self) -> String {
        let mut s = format!(
            "### Split at {} -> {}\n\nJ = {}\n\nK = {} (linear resolution: {})\n\n",
            self.split_edge.0, self.split_edge.1, self.j, self.k, self.k_has_linear_resolution
        );
        s.push_str("| i | j | β(I) | β(J) | β(K) | β_{i-1}(J∩K) | holds |\n|---|---|---|---|---|---|---|\n");
        for e in &self.verdict.entries {
            s.push_str(&format!(
                "| {} | {} | {} | {} | {} | {} | {} |\n",
                e.i, e.j, e.beta_i, e.beta_j, e.beta_k, e.beta_jk_shifted, e.holds
            ));
        }
        let v = &self.verdict;
        s.push_str(&format!(
            "\nIdentity holds at every (i, j): {}\n\nreg(I) = {} vs max-formula {}: {}\n\npd(I) = {} vs max-formula {}: {}\n",
            v.identity_holds,
            v.reg_check.actual,
            v.reg_check.from_parts,
            v.reg_check.holds,
            v.pd_check.actual,
            v.pd_check.from_parts,
            v.pd_check.holds
        ));
        if let Some(c) = &self.intersection {
            s.push_str(&format!(
                "\nJ∩K: reg {} (expected {}), pd {} (expected {}): {}\n",
                c.reg, c.expected_reg, c.pd, c.expected_pd, c.holds
            ));
        }
        s
    }
}

/// `build_split` followed by `check_betti_splitting` on `I(D)^P`.
pub fn split_report(
    engine: &BettiEngine,
    d: &WeightedDigraph,
    edge: Option<(&str, &str)>,
) -> Result<SplitReport> {
    let d = d.normalize_source_weights();
    let pair = build_split(&d, edge)?;
    let polar = polarize(&d.edge_ideal())?;
    let verdict = check_betti_splitting(engine, &polar, &pair.j, &pair.k)?;
    let k_linear = has_linear_resolution(engine, &pair.k)?;
    let hyp = check_hypotheses(&d, &classify(&d));
    let intersection = hyp.satisfied.then(|| {
        let edges = d.edge_count() as i64;
        let expected_reg = d.incident_weight_sum() as i64 - edges + 2;
        let expected_pd = edges - 2;
        IntersectionCheck {
            expected_reg,
            expected_pd,
            reg: verdict.reg_intersection,
            pd: verdict.pd_intersection,
            holds: verdict.reg_intersection == expected_reg && verdict.pd_intersection == expected_pd,
        }
    });
    Ok(SplitReport {
        graph: d,
        split_edge: pair.split_edge,
        j: pair.j.to_string(),
        k: pair.k.to_string(),
        k_has_linear_resolution: k_linear,
        verdict,
        intersection,
    })
}
