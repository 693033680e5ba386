//! Test-only oracles: Betti numbers from the Taylor complex, computed with
//! rational Gaussian elimination, plus seeded random ideals.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use eil::betti::{euler_check, BettiTable, Convention, Guard};
use eil::{make_ideal, Monomial, MonomialIdeal, Variable};

/// Rank over Q by plain row reduction on rationals.
pub fn rational_rank(rows: usize, cols: usize, entries: &[(usize, usize, i64)]) -> usize {
    let mut m = vec![vec![BigRational::zero(); cols]; rows];
    for &(r, c, v) in entries {
        m[r][c] = BigRational::from_integer(v.into());
    }
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = BigRational::one() / m[rank][col].clone();
        for r in 0..rows {
            if r != rank && !m[r][col].is_zero() {
                let f = m[r][col].clone() * inv.clone();
                let pivot = m[rank].clone();
                for (x, p) in m[r].iter_mut().zip(&pivot).skip(col) {
                    *x -= f.clone() * p.clone();
                }
            }
        }
        rank += 1;
    }
    rank
}

fn lcm_of_mask(gens: &[Monomial], mask: u32) -> Monomial {
    (0..gens.len())
        .filter(|k| mask >> k & 1 == 1)
        .fold(Monomial::one(), |acc, k| acc.lcm(&gens[k]))
}

/// Multigraded Betti numbers `β_{i,b}(I)` from the Taylor complex: in
/// multidegree `b` the chains are generator subsets with lcm exactly `b`,
/// and only faces with the same lcm survive the differential.
pub fn taylor_multigraded(ideal: &MonomialIdeal) -> BTreeMap<(usize, Monomial), u64> {
    let gens = ideal.generators();
    assert!(gens.len() <= 12, "Taylor oracle is exponential in the generator count");
    let mut strands: BTreeMap<Monomial, Vec<u32>> = BTreeMap::new();
    for mask in 1u32..(1 << gens.len()) {
        strands.entry(lcm_of_mask(gens, mask)).or_default().push(mask);
    }

    let mut out = BTreeMap::new();
    for (b, masks) in strands {
        let mut by_size: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
        for &m in &masks {
            by_size.entry(m.count_ones()).or_default().push(m);
        }
        let top = *by_size.keys().max().unwrap();
        // rank of the differential leaving chains of size k
        let mut ranks = BTreeMap::new();
        for k in 2..=top {
            let (Some(src), Some(dst)) = (by_size.get(&k), by_size.get(&(k - 1))) else {
                ranks.insert(k, 0);
                continue;
            };
            let index: BTreeMap<u32, usize> = dst.iter().enumerate().map(|(r, &m)| (m, r)).collect();
            let mut entries = Vec::new();
            for (c, &s) in src.iter().enumerate() {
                let bits: Vec<usize> = (0..32).filter(|t| s >> t & 1 == 1).collect();
                for (pos, &t) in bits.iter().enumerate() {
                    if let Some(&r) = index.get(&(s & !(1 << t))) {
                        entries.push((r, c, if pos % 2 == 0 { 1 } else { -1 }));
                    }
                }
            }
            ranks.insert(k, rational_rank(dst.len(), src.len(), &entries));
        }
        for (&k, chains) in &by_size {
            let leaving = ranks.get(&k).copied().unwrap_or(0);
            let arriving = ranks.get(&(k + 1)).copied().unwrap_or(0);
            let h = chains.len() - leaving - arriving;
            if h > 0 {
                out.insert((k as usize - 1, b.clone()), h as u64);
            }
        }
    }
    out
}

/// Graded Betti table of `I` from the Taylor oracle.
pub fn taylor_table(ideal: &MonomialIdeal) -> BettiTable {
    let mut t = BettiTable::new(Convention::OfIdeal);
    for ((i, b), n) in taylor_multigraded(ideal) {
        t.add(i, b.degree(), n);
    }
    t
}

/// Panics unless the alternating sums of `table` match the lcm counts.
pub fn assert_euler(ideal: &MonomialIdeal, table: &BettiTable) {
    let guard = Guard::default();
    assert!(
        euler_check(ideal, table, &guard).expect("within guard"),
        "Euler characteristic mismatch for {ideal}"
    );
}

pub fn vars(n: usize, prefix: &str) -> Vec<Variable> {
    (1..=n).map(|k| Variable::new(format!("{prefix}{k}"))).collect()
}

/// Random nonzero ideal with at most `max_gens` generators in `ambient`,
/// each of degree at least 1 and exponents at most `max_exp`.
pub fn random_ideal(rng: &mut ChaCha8Rng, ambient: &[Variable], max_gens: usize, max_exp: u32) -> MonomialIdeal {
    let count = rng.gen_range(1..=max_gens);
    let gens: Vec<Monomial> = (0..count)
        .map(|_| loop {
            let mut pairs: Vec<(Variable, u32)> = Vec::new();
            for v in ambient {
                if rng.gen_bool(0.5) {
                    pairs.push((v.clone(), rng.gen_range(1..=max_exp)));
                }
            }
            if !pairs.is_empty() {
                break Monomial::from_pairs(pairs).unwrap();
            }
        })
        .collect();
    make_ideal(gens, ambient.to_vec()).unwrap()
}
