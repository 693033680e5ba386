//! Vertex-weighted oriented graphs and their edge ideals.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{make_ideal, Monomial, MonomialIdeal, Variable};
use crate::syntax::is_plain_identifier;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertex {
    pub name: String,
    pub weight: u32,
}

/// Wire format: `{"vertices":[{"name":"x1","weight":2}],"edges":[["x1","x2"]]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphFile {
    vertices: Vec<Vertex>,
    edges: Vec<(String, String)>,
}

/// A simple digraph without bidirected edges and with positive vertex
/// weights. Vertex and edge order are significant and preserved.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "GraphFile", into = "GraphFile")]
pub struct WeightedDigraph {
    vertices: Vec<Vertex>,
    edges: Vec<(usize, usize)>,
}

impl TryFrom<GraphFile> for WeightedDigraph {
    type Error = Error;

    fn try_from(f: GraphFile) -> Result<Self> {
        let names: HashMap<&str, usize> = f
            .vertices
            .iter()
            .enumerate()
            .map(|(i, v)| (v.name.as_str(), i))
            .collect();
        let mut edges = Vec::with_capacity(f.edges.len());
        for (t, h) in &f.edges {
            let t = *names.get(t.as_str()).ok_or_else(|| Error::UnknownVertex(t.clone()))?;
            let h = *names.get(h.as_str()).ok_or_else(|| Error::UnknownVertex(h.clone()))?;
            edges.push((t, h));
        }
        WeightedDigraph::new(f.vertices, edges)
    }
}

impl From<WeightedDigraph> for GraphFile {
    fn from(d: WeightedDigraph) -> Self {
        let edges = d
            .edges
            .iter()
            .map(|&(t, h)| (d.vertices[t].name.clone(), d.vertices[h].name.clone()))
            .collect();
        GraphFile {
            vertices: d.vertices,
            edges,
        }
    }
}

impl WeightedDigraph {
    /// Validates and builds a graph from vertices and `(tail, head)`
    /// index pairs.
    pub fn new(vertices: Vec<Vertex>, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = HashSet::new();
        for v in &vertices {
            if !is_plain_identifier(&v.name) {
                return Err(Error::InvalidGraph(format!("bad vertex name `{}`", v.name)));
            }
            if !seen.insert(v.name.as_str()) {
                return Err(Error::InvalidGraph(format!("duplicate vertex `{}`", v.name)));
            }
            if v.weight == 0 {
                return Err(Error::InvalidGraph(format!("vertex `{}` has weight 0", v.name)));
            }
        }
        let mut pairs = HashSet::new();
        for &(t, h) in &edges {
            if t >= vertices.len() || h >= vertices.len() {
                return Err(Error::InvalidGraph(format!("edge ({t}, {h}) out of range")));
            }
            let (tn, hn) = (&vertices[t].name, &vertices[h].name);
            if t == h {
                return Err(Error::InvalidGraph(format!("self-loop at `{tn}`")));
            }
            if !pairs.insert((t.min(h), t.max(h))) {
                return Err(Error::InvalidGraph(format!(
                    "more than one edge between `{tn}` and `{hn}`"
                )));
            }
        }
        Ok(WeightedDigraph { vertices, edges })
    }

    /// Convenience constructor from names: `[("x1", 2), ...]`,
    /// `[("x1", "x2"), ...]`.
    pub fn from_named(vertices: &[(&str, u32)], edges: &[(&str, &str)]) -> Result<Self> {
        GraphFile {
            vertices: vertices
                .iter()
                .map(|&(n, w)| Vertex {
                    name: n.to_string(),
                    weight: w,
                })
                .collect(),
            edges: edges
                .iter()
                .map(|&(t, h)| (t.to_string(), h.to_string()))
                .collect(),
        }
        .try_into()
    }

    pub fn from_json(src: &str) -> Result<Self> {
        let file: GraphFile = serde_json::from_str(src).map_err(|e| {
            let pos = line_col_to_offset(src, e.line(), e.column());
            Error::parse(pos, e.to_string())
        })?;
        file.try_into()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serialization is infallible")
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(tail, head)` vertex indices.
    pub fn edge_indices(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edges(&self) -> impl Iterator<Item = (&str, &str)> + '_ {
        self.edges
            .iter()
            .map(|&(t, h)| (self.vertices[t].name.as_str(), self.vertices[h].name.as_str()))
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| v.name == name)
            .ok_or_else(|| Error::UnknownVertex(name.to_string()))
    }

    pub fn name(&self, idx: usize) -> &str {
        &self.vertices[idx].name
    }

    pub fn weight(&self, name: &str) -> Result<u32> {
        Ok(self.vertices[self.index_of(name)?].weight)
    }

    pub fn weight_at(&self, idx: usize) -> u32 {
        self.vertices[idx].weight
    }

    pub fn out_neighbors(&self, name: &str) -> Result<Vec<&str>> {
        let v = self.index_of(name)?;
        Ok(self
            .edges
            .iter()
            .filter(|e| e.0 == v)
            .map(|e| self.name(e.1))
            .collect())
    }

    pub fn in_neighbors(&self, name: &str) -> Result<Vec<&str>> {
        let v = self.index_of(name)?;
        Ok(self
            .edges
            .iter()
            .filter(|e| e.1 == v)
            .map(|e| self.name(e.0))
            .collect())
    }

    /// Degree in the underlying undirected graph.
    pub fn degree(&self, name: &str) -> Result<usize> {
        Ok(self.degree_at(self.index_of(name)?))
    }

    pub fn degree_at(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.0 == v || e.1 == v).count()
    }

    pub(crate) fn in_degree_at(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.1 == v).count()
    }

    pub(crate) fn out_degree_at(&self, v: usize) -> usize {
        self.edges.iter().filter(|e| e.0 == v).count()
    }

    /// A source has at least one out-edge and no in-edge.
    pub fn is_source_at(&self, v: usize) -> bool {
        self.in_degree_at(v) == 0 && self.out_degree_at(v) > 0
    }

    /// Sets every source weight to 1; the edge ideal does not see them.
    pub fn normalize_source_weights(&self) -> WeightedDigraph {
        let mut d = self.clone();
        for v in 0..d.vertices.len() {
            if self.is_source_at(v) {
                d.vertices[v].weight = 1;
            }
        }
        d
    }

    /// `I(D) = (x_t · x_h^{w_h} : t → h ∈ E)` with ambient `V(D)` in
    /// vertex order. An edgeless graph yields the zero ideal.
    pub fn edge_ideal(&self) -> MonomialIdeal {
        let ambient: Vec<Variable> = self.vertices.iter().map(|v| Variable::new(&v.name)).collect();
        if self.edges.is_empty() {
            log::warn!("edge ideal of an edgeless graph is the zero ideal");
        }
        let gens: Vec<Monomial> = self
            .edges
            .iter()
            .map(|&(t, h)| {
                Monomial::from_pairs([
                    (ambient[t].clone(), 1),
                    (ambient[h].clone(), self.vertices[h].weight),
                ])
                .expect("distinct endpoints")
            })
            .collect();
        let ideal = make_ideal(gens, ambient).expect("graph vertices form the ambient");
        assert_eq!(
            ideal.len(),
            self.edges.len(),
            "edge ideal generators of an oriented graph are pairwise non-dividing"
        );
        ideal
    }

    /// Connected components of the underlying graph, as index sets in
    /// vertex order, ordered by their first vertex.
    pub(crate) fn component_indices(&self) -> Vec<Vec<usize>> {
        let n = self.vertices.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &(t, h) in &self.edges {
            let (a, b) = (find(&mut parent, t), find(&mut parent, h));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut groups: Vec<Vec<usize>> = Vec::new();
        let mut slot: HashMap<usize, usize> = HashMap::new();
        for v in 0..n {
            let r = find(&mut parent, v);
            let k = *slot.entry(r).or_insert_with(|| {
                groups.push(Vec::new());
                groups.len() - 1
            });
            groups[k].push(v);
        }
        groups
    }

    /// Induced subgraph on `keep` (vertex order preserved).
    pub(crate) fn induced(&self, keep: &[usize]) -> WeightedDigraph {
        let mut map = vec![usize::MAX; self.vertices.len()];
        let mut vertices = Vec::with_capacity(keep.len());
        let mut sorted = keep.to_vec();
        sorted.sort_unstable();
        for (new, &old) in sorted.iter().enumerate() {
            map[old] = new;
            vertices.push(self.vertices[old].clone());
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(t, h)| map[t] != usize::MAX && map[h] != usize::MAX)
            .map(|&(t, h)| (map[t], map[h]))
            .collect();
        WeightedDigraph { vertices, edges }
    }

    pub fn components(&self) -> Vec<WeightedDigraph> {
        self.component_indices()
            .iter()
            .map(|c| self.induced(c))
            .collect()
    }

    /// `D ∖ e`: drops the edge, keeps every vertex.
    pub fn delete_edge(&self, tail: &str, head: &str) -> Result<WeightedDigraph> {
        let (t, h) = (self.index_of(tail)?, self.index_of(head)?);
        let pos = self
            .edges
            .iter()
            .position(|&e| e == (t, h))
            .ok_or_else(|| Error::MissingEdge(tail.to_string(), head.to_string()))?;
        let mut d = self.clone();
        d.edges.remove(pos);
        Ok(d)
    }

    /// `D ∖ v`: the induced subgraph without `v`.
    pub fn delete_vertex(&self, name: &str) -> Result<WeightedDigraph> {
        let v = self.index_of(name)?;
        let keep: Vec<usize> = (0..self.vertices.len()).filter(|&u| u != v).collect();
        Ok(self.induced(&keep))
    }

    /// Sum of weights over vertices incident to at least one edge.
    pub fn incident_weight_sum(&self) -> u64 {
        (0..self.vertices.len())
            .filter(|&v| self.degree_at(v) > 0)
            .map(|v| u64::from(self.vertices[v].weight))
            .sum()
    }
}

fn line_col_to_offset(src: &str, line: usize, col: usize) -> usize {
    if line == 0 {
        return 0;
    }
    let start: usize = src
        .split_inclusive('\n')
        .take(line - 1)
        .map(str::len)
        .sum();
    (start + col.saturating_sub(1)).min(src.len())
}
