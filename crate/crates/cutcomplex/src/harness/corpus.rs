//! Deterministic graph corpora for the verification suites: named family
//! members plus seeded random graphs, trees, and chordal graphs.

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::graph::{family, make_graph, Family, Graph};

/// A random tree: each vertex hangs off a uniformly random earlier one.
pub fn random_tree(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for i in 1..n {
        edges.push((rng.gen_range(0..i), i));
    }
    make_graph(n, &edges).expect("tree edges are in range").with_name(format!("tree{n}"))
}

/// A random chordal graph, built so that 0, 1, .., n-1 is an elimination
/// order: working from the last vertex down, each vertex gets a clique of
/// later vertices (possibly empty, which starts a new component) as its
/// neighborhood.
pub fn random_chordal(n: usize, rng: &mut ChaCha8Rng) -> Graph {
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    let is_adj = |adj: &Vec<Vec<usize>>, a: usize, b: usize| adj[a].contains(&b);
    for i in (0..n.saturating_sub(1)).rev() {
        if rng.gen_bool(0.2) {
            continue; // isolated within the suffix: may start a component
        }
        let u = rng.gen_range(i + 1..n);
        let mut clique = vec![u];
        loop {
            let candidates: Vec<usize> = (i + 1..n)
                .filter(|&w| !clique.contains(&w) && clique.iter().all(|&c| is_adj(&adj, w, c)))
                .collect();
            if candidates.is_empty() || rng.gen_bool(0.5) {
                break;
            }
            clique.push(candidates[rng.gen_range(0..candidates.len())]);
        }
        for &c in &clique {
            adj[i].push(c);
            adj[c].push(i);
        }
    }
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|a| adj[a].iter().copied().filter(move |&b| b > a).map(move |b| (a, b)))
        .collect();
    make_graph(n, &edges)
        .expect("edges are in range")
        .with_name(format!("chordal{n}"))
}

pub fn random_gnp(n: usize, p: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    make_graph(n, &edges).expect("edges are in range").with_name(format!("gnp{n}"))
}

/// The 200-graph test corpus on at most 8 vertices: every small named
/// family member plus seeded random trees, chordal graphs, and G(n, p)
/// samples. Deterministic for a fixed seed.
pub fn corpus_200(seed: u64) -> Vec<Graph> {
    let mut graphs: Vec<Graph> = Vec::with_capacity(200);
    for n in 1..=8 {
        graphs.push(family(Family::Path(n)).unwrap());
    }
    for n in 3..=8 {
        graphs.push(family(Family::Cycle(n)).unwrap());
    }
    for n in 2..=7 {
        graphs.push(family(Family::Complete(n)).unwrap());
    }
    for n in 1..=8 {
        graphs.push(family(Family::Edgeless(n)).unwrap());
    }
    for m in 1..=4 {
        for n in m..=8 - m {
            graphs.push(family(Family::CompleteBipartite(m, n)).unwrap());
        }
    }
    for n in 2..=4 {
        graphs.push(family(Family::Prism(n)).unwrap());
    }
    for n in 2..=4 {
        graphs.push(family(Family::Grid(2, n)).unwrap());
    }
    for n in 6..=8 {
        graphs.push(family(Family::SquaredCycle(n)).unwrap());
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for n in 4..=8 {
        for _ in 0..5 {
            graphs.push(random_chordal(n, &mut rng));
        }
    }
    for n in 3..=8 {
        for _ in 0..4 {
            graphs.push(random_tree(n, &mut rng));
        }
    }
    let ps = [0.2, 0.35, 0.5, 0.65];
    let mut i = 0;
    while graphs.len() < 200 {
        let n = 4 + i % 5;
        let p = ps[i % ps.len()];
        graphs.push(random_gnp(n, p, &mut rng));
        i += 1;
    }
    graphs.truncate(200);
    graphs
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_200_graphs_up_to_8_vertices() {
        let c = corpus_200(83);
        assert_eq!(c.len(), 200);
        assert!(c.iter().all(|g| g.n() >= 1 && g.n() <= 8));
        // deterministic
        let d = corpus_200(83);
        for (a, b) in c.iter().zip(&d) {
            assert_eq!(a, b);
        }
    }

    #[test]
    fn random_chordal_is_chordal() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for n in 1..=9 {
            for _ in 0..20 {
                let g = random_chordal(n, &mut rng);
                assert!(g.is_chordal(), "{g:?}");
            }
        }
    }

    #[test]
    fn random_tree_is_a_tree() {
        let mut rng = ChaCha8Rng::seed_from_u64(6);
        for n in 1..=9 {
            let g = random_tree(n, &mut rng);
            assert_eq!(g.edge_count(), n - 1);
            assert_eq!(g.components().len(), 1);
            assert!(g.is_chordal());
        }
    }
}
