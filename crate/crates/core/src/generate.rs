//! Seeded random instances of each supported graph class.

use std::ops::RangeInclusive;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::classify::{check_hypotheses, classify, ClassTag};
use crate::digraph::{Vertex, WeightedDigraph};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceParams {
    /// Length of the directed cycle (cyclic classes). For rooted forests
    /// the vertex count is `cycle_len + extra_vertices`.
    pub cycle_len: usize,
    /// Vertices outside the cycle. Ignored for oriented cycles.
    pub extra_vertices: usize,
    /// Weights of non-source vertices; sources always get weight 1.
    pub weight_range: RangeInclusive<u32>,
    pub seed: u64,
}

struct Builder {
    rng: ChaCha8Rng,
    weights: RangeInclusive<u32>,
    vertices: Vec<Vertex>,
    edges: Vec<(usize, usize)>,
}

impl Builder {
    fn vertex(&mut self) -> usize {
        let w = self.rng.gen_range(self.weights.clone());
        self.vertices.push(Vertex {
            name: format!("x{}", self.vertices.len() + 1),
            weight: w,
        });
        self.vertices.len() - 1
    }

    fn cycle(&mut self, len: usize) -> Vec<usize> {
        let vs: Vec<usize> = (0..len).map(|_| self.vertex()).collect();
        for k in 0..len {
            self.edges.push((vs[k], vs[(k + 1) % len]));
        }
        vs
    }

    /// Adds `count` vertices, each a child of a random vertex of `pool`
    /// (which grows as vertices are added).
    fn hang(&mut self, pool: &mut Vec<usize>, count: usize) {
        for _ in 0..count {
            let parent = pool[self.rng.gen_range(0..pool.len())];
            let v = self.vertex();
            self.edges.push((parent, v));
            pool.push(v);
        }
    }

    /// A rooted forest on `n >= 2` vertices without isolated vertices.
    fn forest(&mut self, n: usize) {
        let first = self.vertices.len();
        let mut pool: Vec<usize> = Vec::new();
        for k in 0..n {
            let v = self.vertex();
            if k > 0 && self.rng.gen_bool(0.8) {
                let parent = pool[self.rng.gen_range(0..pool.len())];
                self.edges.push((parent, v));
            }
            pool.push(v);
        }
        for v in first..first + n {
            let touched = self.edges.iter().any(|e| e.0 == v || e.1 == v);
            if !touched {
                let mut parent = first + self.rng.gen_range(0..n - 1);
                if parent >= v {
                    parent += 1;
                }
                self.edges.push((parent, v));
            }
        }
    }

    fn finish(self) -> Result<WeightedDigraph> {
        Ok(WeightedDigraph::new(self.vertices, self.edges)?.normalize_source_weights())
    }
}

/// Random graph of class `tag`. The result classifies within `tag`, and
/// satisfies the weight hypotheses whenever `weight_range` starts at 2.
pub fn random_instance(tag: ClassTag, params: &InstanceParams) -> Result<WeightedDigraph> {
    let (lo, hi) = (*params.weight_range.start(), *params.weight_range.end());
    if lo == 0 || lo > hi {
        return Err(Error::Unsatisfiable(format!(
            "weight range {lo}..{hi} must be nonempty and positive"
        )));
    }
    let cyclic = matches!(
        tag,
        ClassTag::OrientedCycle | ClassTag::UnicyclicAttached | ClassTag::UnicyclicGeneral
    );
    if cyclic && params.cycle_len < 3 {
        return Err(Error::Unsatisfiable(format!(
            "cycle length {} is below 3",
            params.cycle_len
        )));
    }

    let mut b = Builder {
        rng: ChaCha8Rng::seed_from_u64(params.seed),
        weights: params.weight_range.clone(),
        vertices: Vec::new(),
        edges: Vec::new(),
    };
    match tag {
        ClassTag::RootedForest => {
            let n = params.cycle_len + params.extra_vertices;
            if n < 2 {
                return Err(Error::Unsatisfiable(
                    "a rooted forest with an edge needs at least 2 vertices".into(),
                ));
            }
            b.forest(n);
        }
        ClassTag::OrientedCycle => {
            b.cycle(params.cycle_len);
        }
        ClassTag::UnicyclicAttached => {
            let mut pool = b.cycle(params.cycle_len);
            b.hang(&mut pool, params.extra_vertices);
        }
        ClassTag::UnicyclicGeneral => {
            if params.extra_vertices < 2 {
                return Err(Error::Unsatisfiable(
                    "a second component needs at least 2 extra vertices".into(),
                ));
            }
            let mut main = b.cycle(params.cycle_len);
            let second = b.rng.gen_range(2..=params.extra_vertices);
            let rest = params.extra_vertices - second;
            if second >= 3 && b.rng.gen_bool(0.5) {
                let mut pool = b.cycle(3);
                b.hang(&mut pool, second - 3);
            } else {
                b.forest(second);
            }
            b.hang(&mut main, rest);
        }
        ClassTag::Other => {
            return Err(Error::Unsatisfiable(
                "no generator for graphs outside the supported classes".into(),
            ))
        }
    }
    let d = b.finish()?;

    let cls = classify(&d);
    if !cls.tag().is_within(tag) {
        return Err(Error::Unsatisfiable(format!(
            "generated graph classified as {} instead of {tag}",
            cls.tag()
        )));
    }
    if lo >= 2 && !check_hypotheses(&d, &cls).satisfied {
        return Err(Error::Unsatisfiable(
            "generated graph violates the weight hypotheses".into(),
        ));
    }
    Ok(d)
}
