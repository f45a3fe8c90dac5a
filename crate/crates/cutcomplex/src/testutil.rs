//! Shared fixtures for unit tests.

use crate::graph::{make_graph, Graph};
use crate::vset::VertexSet;

/// The six-vertex example graph: a 4-cycle a-b-c-d with two pendant
/// vertices e, f attached to d. Labels a..f -> 0..5.
pub(crate) fn example_graph() -> Graph {
    // edges da, ab, bc, cd, de, df
    make_graph(6, &[(3, 0), (0, 1), (1, 2), (2, 3), (3, 4), (3, 5)]).unwrap()
}

pub(crate) fn vs<const N: usize>(vs: [usize; N]) -> VertexSet {
    vs.into_iter().collect()
}

/// The facets of the total 3-cut complex of the example graph, in the
/// order they are listed (a shelling order): abd, acd, bcd, bde, bdf.
pub(crate) fn example_delta3_facets() -> Vec<VertexSet> {
    vec![vs([0, 1, 3]), vs([0, 2, 3]), vs([1, 2, 3]), vs([1, 3, 4]), vs([1, 3, 5])]
}
