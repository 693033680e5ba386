//! Classification into rooted forests, oriented cycles and unicyclic
//! graphs, and the weight hypotheses attached to each class.
//!
//! Rooted trees are oriented away from their root. A connected graph with
//! as many edges as vertices is a directed cycle with away-oriented trees
//! hanging off it exactly when every vertex has in-degree 1; a tree is
//! rooted exactly when every vertex but one has in-degree 1.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::digraph::WeightedDigraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ClassTag {
    RootedForest,
    OrientedCycle,
    UnicyclicAttached,
    UnicyclicGeneral,
    Other,
}

impl ClassTag {
    pub const ALL: [ClassTag; 5] = [
        ClassTag::RootedForest,
        ClassTag::OrientedCycle,
        ClassTag::UnicyclicAttached,
        ClassTag::UnicyclicGeneral,
        ClassTag::Other,
    ];

    /// Class containment: an oriented cycle is a unicyclic graph with no
    /// trees attached, and a unicyclic graph in the broad reading may have
    /// tree components.
    pub fn is_within(self, wider: ClassTag) -> bool {
        use ClassTag::*;
        self == wider
            || matches!(
                (self, wider),
                (OrientedCycle, UnicyclicAttached)
                    | (OrientedCycle, UnicyclicGeneral)
                    | (UnicyclicAttached, UnicyclicGeneral)
                    | (RootedForest, UnicyclicGeneral)
            )
    }

    pub fn is_supported(self) -> bool {
        self != ClassTag::Other
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ClassTag::RootedForest => "RootedForest",
            ClassTag::OrientedCycle => "OrientedCycle",
            ClassTag::UnicyclicAttached => "UnicyclicAttached",
            ClassTag::UnicyclicGeneral => "UnicyclicGeneral",
            ClassTag::Other => "Other",
        }
    }
}

impl fmt::Display for ClassTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClassTag {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key: String = s
            .chars()
            .filter(|c| c.is_ascii_alphanumeric())
            .collect::<String>()
            .to_ascii_lowercase();
        ClassTag::ALL
            .into_iter()
            .find(|t| t.as_str().to_ascii_lowercase() == key)
            .ok_or_else(|| {
                format!(
                    "unknown class `{s}` (expected one of {})",
                    ClassTag::ALL.map(ClassTag::as_str).join(", ")
                )
            })
    }
}

/// Per-component summary inside a disconnected unicyclic graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentClass {
    pub vertices: Vec<String>,
    pub class: GraphClass,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "tag")]
pub enum GraphClass {
    RootedForest {
        roots: Vec<String>,
    },
    OrientedCycle {
        cycle: Vec<String>,
    },
    UnicyclicAttached {
        cycle: Vec<String>,
        /// Cycle vertices carrying at least one tree.
        attachments: Vec<String>,
    },
    UnicyclicGeneral {
        components: Vec<ComponentClass>,
        /// True when every component contains a cycle (the strict reading
        /// of "unicyclic"); false when tree components are present.
        all_cyclic: bool,
    },
    Other {
        reason: String,
    },
}

impl GraphClass {
    pub fn tag(&self) -> ClassTag {
        match self {
            GraphClass::RootedForest { .. } => ClassTag::RootedForest,
            GraphClass::OrientedCycle { .. } => ClassTag::OrientedCycle,
            GraphClass::UnicyclicAttached { .. } => ClassTag::UnicyclicAttached,
            GraphClass::UnicyclicGeneral { .. } => ClassTag::UnicyclicGeneral,
            GraphClass::Other { .. } => ClassTag::Other,
        }
    }

    /// The directed cycle, for the connected cyclic classes.
    pub fn cycle(&self) -> Option<&[String]> {
        match self {
            GraphClass::OrientedCycle { cycle } | GraphClass::UnicyclicAttached { cycle, .. } => {
                Some(cycle)
            }
            _ => None,
        }
    }
}

enum Piece {
    Isolated,
    RootedTree { root: usize },
    Unicyclic { cycle: Vec<usize>, attachments: Vec<usize>, has_trees: bool },
    Bad(String),
}

fn classify_component(d: &WeightedDigraph, comp: &[usize]) -> Piece {
    if comp.len() == 1 {
        return Piece::Isolated;
    }
    let name = |v: usize| d.name(v).to_string();
    let edges = d
        .edge_indices()
        .iter()
        .filter(|(t, _)| comp.contains(t))
        .count();
    let indeg: Vec<usize> = comp.iter().map(|&v| d.in_degree_at(v)).collect();
    if edges + 1 == comp.len() {
        let roots: Vec<usize> = comp
            .iter()
            .zip(&indeg)
            .filter(|(_, &k)| k == 0)
            .map(|(&v, _)| v)
            .collect();
        return match (roots.as_slice(), indeg.iter().all(|&k| k <= 1)) {
            ([root], true) => Piece::RootedTree { root: *root },
            _ => Piece::Bad(format!(
                "tree containing `{}` is not oriented away from a single root",
                name(comp[0])
            )),
        };
    }
    if edges != comp.len() {
        return Piece::Bad(format!(
            "component containing `{}` has more than one cycle",
            name(comp[0])
        ));
    }
    if let Some(k) = indeg.iter().position(|&k| k != 1) {
        return Piece::Bad(format!(
            "component containing `{}` is not a directed cycle with trees oriented away from it (in-degree of `{}` is {})",
            name(comp[0]),
            name(comp[k]),
            indeg[k]
        ));
    }
    // Every vertex has exactly one parent; walking parents from any vertex
    // ends on the cycle.
    let parent = |v: usize| {
        d.edge_indices()
            .iter()
            .find(|e| e.1 == v)
            .map(|e| e.0)
            .expect("in-degree 1")
    };
    let mut v = comp[0];
    let mut visited = vec![false; d.vertex_count()];
    while !visited[v] {
        visited[v] = true;
        v = parent(v);
    }
    let mut on_cycle = vec![v];
    let mut u = parent(v);
    while u != v {
        on_cycle.push(u);
        u = parent(u);
    }
    on_cycle.reverse(); // parent walk runs against the orientation
    let start = on_cycle
        .iter()
        .enumerate()
        .min_by_key(|(_, &x)| x)
        .map(|(i, _)| i)
        .unwrap();
    on_cycle.rotate_left(start);
    let attachments: Vec<usize> = on_cycle
        .iter()
        .copied()
        .filter(|&c| d.out_degree_at(c) > 1)
        .collect();
    let has_trees = comp.len() > on_cycle.len();
    Piece::Unicyclic {
        cycle: on_cycle,
        attachments,
        has_trees,
    }
}

fn names(d: &WeightedDigraph, vs: &[usize]) -> Vec<String> {
    vs.iter().map(|&v| d.name(v).to_string()).collect()
}

/// Most specific class of `d`; see [`ClassTag::is_within`] for the
/// containments between classes.
pub fn classify(d: &WeightedDigraph) -> GraphClass {
    let comps = d.component_indices();
    let pieces: Vec<Piece> = comps.iter().map(|c| classify_component(d, c)).collect();

    if let Some(Piece::Bad(reason)) = pieces.iter().find(|p| matches!(p, Piece::Bad(_))) {
        return GraphClass::Other {
            reason: reason.clone(),
        };
    }

    let cyclic = pieces
        .iter()
        .filter(|p| matches!(p, Piece::Unicyclic { .. }))
        .count();
    if cyclic == 0 {
        let roots = pieces
            .iter()
            .zip(&comps)
            .map(|(p, c)| match p {
                Piece::RootedTree { root } => *root,
                _ => c[0],
            })
            .collect::<Vec<_>>();
        return GraphClass::RootedForest {
            roots: names(d, &roots),
        };
    }

    if comps.len() == 1 {
        if let Piece::Unicyclic {
            cycle,
            attachments,
            has_trees,
        } = &pieces[0]
        {
            return if *has_trees {
                GraphClass::UnicyclicAttached {
                    cycle: names(d, cycle),
                    attachments: names(d, attachments),
                }
            } else {
                GraphClass::OrientedCycle {
                    cycle: names(d, cycle),
                }
            };
        }
    }

    let components = pieces
        .iter()
        .zip(&comps)
        .map(|(p, c)| {
            let class = match p {
                Piece::Isolated => GraphClass::RootedForest {
                    roots: names(d, c),
                },
                Piece::RootedTree { root } => GraphClass::RootedForest {
                    roots: names(d, &[*root]),
                },
                Piece::Unicyclic {
                    cycle,
                    attachments,
                    has_trees,
                } if *has_trees => GraphClass::UnicyclicAttached {
                    cycle: names(d, cycle),
                    attachments: names(d, attachments),
                },
                Piece::Unicyclic { cycle, .. } => GraphClass::OrientedCycle {
                    cycle: names(d, cycle),
                },
                Piece::Bad(_) => unreachable!(),
            };
            ComponentClass {
                vertices: names(d, c),
                class,
            }
        })
        .collect();
    GraphClass::UnicyclicGeneral {
        components,
        all_cyclic: cyclic == comps.len(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesisReport {
    pub satisfied: bool,
    pub violations: Vec<String>,
}

/// Weight hypotheses: on oriented cycles every vertex needs `w >= 2`; on
/// the other classes every vertex of degree >= 2 does, except sources,
/// whose weight is fixed to 1 by convention. Isolated vertices are
/// ignored.
pub fn check_hypotheses(d: &WeightedDigraph, cls: &GraphClass) -> HypothesisReport {
    let violations: Vec<String> = (0..d.vertex_count())
        .filter(|&v| {
            let deg = d.degree_at(v);
            let needs_two = match cls.tag() {
                ClassTag::OrientedCycle => true,
                _ => deg >= 2 && !d.is_source_at(v),
            };
            deg > 0 && needs_two && d.weight_at(v) < 2
        })
        .map(|v| d.name(v).to_string())
        .collect();
    HypothesisReport {
        satisfied: violations.is_empty(),
        violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn graph(v: &[(&str, u32)], e: &[(&str, &str)]) -> WeightedDigraph {
        WeightedDigraph::from_named(v, e).unwrap()
    }

    #[test]
    fn paths_and_trees() {
        let p = graph(&[("a", 1), ("b", 2), ("c", 2)], &[("a", "b"), ("b", "c")]);
        assert_eq!(
            classify(&p),
            GraphClass::RootedForest {
                roots: vec!["a".into()]
            }
        );
        let inward = graph(&[("a", 1), ("b", 2), ("c", 2)], &[("a", "b"), ("c", "b")]);
        assert_eq!(classify(&inward).tag(), ClassTag::Other);
    }

    #[test]
    fn cycles() {
        let c3 = graph(&[("a", 2), ("b", 2), ("c", 2)], &[("b", "c"), ("c", "a"), ("a", "b")]);
        assert_eq!(
            classify(&c3),
            GraphClass::OrientedCycle {
                cycle: vec!["a".into(), "b".into(), "c".into()]
            }
        );
        let broken = graph(&[("a", 2), ("b", 2), ("c", 2)], &[("a", "b"), ("b", "c"), ("a", "c")]);
        assert_eq!(classify(&broken).tag(), ClassTag::Other);
    }

    #[test]
    fn published_examples() {
        let d = fixtures::example_3_4();
        match classify(&d) {
            GraphClass::UnicyclicAttached { cycle, attachments } => {
                assert_eq!(cycle, ["x1", "x2", "x3", "x4", "x5"]);
                assert_eq!(attachments, ["x1"]);
            }
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(classify(&fixtures::example_3_6()).tag(), ClassTag::Other);
        assert_eq!(classify(&fixtures::example_3_7()).tag(), ClassTag::Other);
        assert_eq!(classify(&fixtures::example_2_9()).tag(), ClassTag::OrientedCycle);
    }

    #[test]
    fn disconnected_unicyclic() {
        let d = graph(
            &[("a", 2), ("b", 2), ("c", 2), ("p", 1), ("q", 3)],
            &[("a", "b"), ("b", "c"), ("c", "a"), ("p", "q")],
        );
        match classify(&d) {
            GraphClass::UnicyclicGeneral {
                components,
                all_cyclic,
            } => {
                assert!(!all_cyclic);
                assert_eq!(components.len(), 2);
                assert_eq!(components[0].class.tag(), ClassTag::OrientedCycle);
                assert_eq!(components[1].class.tag(), ClassTag::RootedForest);
            }
            other => panic!("unexpected {other:?}"),
        }
        let two = graph(
            &[("a", 2), ("b", 2), ("c", 2), ("p", 2), ("q", 2), ("r", 2)],
            &[("a", "b"), ("b", "c"), ("c", "a"), ("p", "q"), ("q", "r"), ("r", "p")],
        );
        assert!(matches!(
            classify(&two),
            GraphClass::UnicyclicGeneral { all_cyclic: true, .. }
        ));
    }

    #[test]
    fn deleting_from_cycles() {
        let c4 = fixtures::example_2_9();
        let path = c4.delete_edge("x4", "x1").unwrap();
        assert_eq!(
            classify(&path),
            GraphClass::RootedForest {
                roots: vec!["x1".into()]
            }
        );
        let d = fixtures::example_3_4();
        let forest = d.delete_vertex("x3").unwrap();
        assert_eq!(classify(&forest).tag(), ClassTag::RootedForest);
    }

    #[test]
    fn hypotheses() {
        let d = fixtures::example_3_4();
        let r = check_hypotheses(&d, &classify(&d));
        assert_eq!(r.violations, ["x6", "x7"]);
        assert!(!r.satisfied);

        let c3 = graph(&[("a", 2), ("b", 2), ("c", 2)], &[("a", "b"), ("b", "c"), ("c", "a")]);
        assert!(check_hypotheses(&c3, &classify(&c3)).satisfied);

        let e = graph(&[("a", 1), ("b", 3)], &[("a", "b")]);
        assert!(check_hypotheses(&e, &classify(&e)).satisfied);

        // A root of degree 2 keeps its conventional weight 1.
        let star = graph(&[("r", 1), ("a", 2), ("b", 1)], &[("r", "a"), ("r", "b")]);
        assert!(check_hypotheses(&star, &classify(&star)).satisfied);
    }

    #[test]
    fn tag_parsing_and_containment() {
        assert_eq!("unicyclic-attached".parse::<ClassTag>(), Ok(ClassTag::UnicyclicAttached));
        assert_eq!("RootedForest".parse::<ClassTag>(), Ok(ClassTag::RootedForest));
        assert!("tree".parse::<ClassTag>().is_err());
        assert!(ClassTag::OrientedCycle.is_within(ClassTag::UnicyclicAttached));
        assert!(!ClassTag::UnicyclicAttached.is_within(ClassTag::OrientedCycle));
        assert!(!ClassTag::Other.is_within(ClassTag::UnicyclicGeneral));
    }
}
