//! Worked examples with their published values.

use crate::digraph::WeightedDigraph;

/// Weighted oriented 4-cycle `x1→x2→x3→x4→x1`, weights (5, 3, 2, 4).
pub fn example_2_9() -> WeightedDigraph {
    WeightedDigraph::from_named(
        &[("x1", 5), ("x2", 3), ("x3", 2), ("x4", 4)],
        &[("x1", "x2"), ("x2", "x3"), ("x3", "x4"), ("x4", "x1")],
    )
    .expect("fixture is valid")
}

/// Polarized generators of [`example_2_9`]'s edge ideal.
pub const EXAMPLE_2_9_POLARIZED: [&str; 4] = [
    "x1_1*x2_1*x2_2*x2_3",
    "x2_1*x3_1*x3_2",
    "x3_1*x4_1*x4_2*x4_3*x4_4",
    "x4_1*x1_1*x1_2*x1_3*x1_4*x1_5",
];

/// A 5-cycle with the tail `x1→x6→x7→x8`; `w6 = w7 = 1` breaks the weight
/// hypothesis.
pub fn example_3_4() -> WeightedDigraph {
    WeightedDigraph::from_named(
        &[
            ("x1", 2),
            ("x2", 2),
            ("x3", 2),
            ("x4", 2),
            ("x5", 2),
            ("x6", 1),
            ("x7", 1),
            ("x8", 2),
        ],
        &[
            ("x1", "x2"),
            ("x2", "x3"),
            ("x3", "x4"),
            ("x4", "x5"),
            ("x5", "x1"),
            ("x1", "x6"),
            ("x6", "x7"),
            ("x7", "x8"),
        ],
    )
    .expect("fixture is valid")
}

/// A 4-cycle whose edges are not all oriented the same way, plus a pendant
/// edge `x1→x5`.
pub fn example_3_6() -> WeightedDigraph {
    WeightedDigraph::from_named(
        &[("x1", 4), ("x2", 3), ("x3", 2), ("x4", 1), ("x5", 2)],
        &[
            ("x1", "x2"),
            ("x2", "x3"),
            ("x4", "x3"),
            ("x4", "x1"),
            ("x1", "x5"),
        ],
    )
    .expect("fixture is valid")
}

/// A 4-cycle with `x1→x4` against the cycle direction and two pendant
/// paths.
pub fn example_3_7() -> WeightedDigraph {
    WeightedDigraph::from_named(
        &[
            ("x1", 1),
            ("x2", 2),
            ("x3", 2),
            ("x4", 4),
            ("x5", 2),
            ("x6", 2),
            ("x7", 2),
            ("x8", 2),
        ],
        &[
            ("x1", "x2"),
            ("x2", "x3"),
            ("x3", "x4"),
            ("x1", "x4"),
            ("x2", "x5"),
            ("x5", "x6"),
            ("x3", "x7"),
            ("x7", "x8"),
        ],
    )
    .expect("fixture is valid")
}

/// A counterexample together with the values reported for it.
#[derive(Clone, Debug)]
pub struct PublishedExample {
    pub id: &'static str,
    pub graph: WeightedDigraph,
    /// `(reg, pd)` computed by a computer algebra system.
    pub computed: (i64, i64),
    /// `(reg, pd)` from `Σw - |E| + 1` and `|E| - 1`.
    pub formula: (i64, i64),
}

pub fn counterexamples() -> Vec<PublishedExample> {
    vec![
        PublishedExample {
            id: "3.4",
            graph: example_3_4(),
            computed: (8, 6),
            formula: (7, 7),
        },
        PublishedExample {
            id: "3.6",
            graph: example_3_6(),
            computed: (9, 3),
            formula: (8, 4),
        },
        PublishedExample {
            id: "3.7",
            graph: example_3_7(),
            computed: (11, 6),
            formula: (10, 7),
        },
    ]
}
