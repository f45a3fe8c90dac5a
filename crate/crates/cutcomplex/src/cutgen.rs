//! Builders for total k-cut complexes and companion k-cut complexes, the
//! ridge-to-facet recurrence, the isolated-vertex decomposition check, and
//! the small-scale realizability search.

use crate::complex::{from_facets, SimplicialComplex};
use crate::error::{Error, Result};
use crate::graph::{make_graph, Graph};
use crate::par::{self, ExecMode};
use crate::vset::VertexSet;

/// The total k-cut complex: facets are the complements of the independent
/// sets of size `k`. Void exactly when `k` exceeds the independence number;
/// otherwise pure of dimension `n - k - 1`.
pub fn total_cut_complex(g: &Graph, k: usize) -> Result<SimplicialComplex> {
    if k == 0 {
        return Err(Error::KTooSmall { op: "total_cut_complex", k, min: 1 });
    }
    let n = g.n();
    let facets = if k > n {
        Vec::new()
    } else {
        g.independent_sets(k)
            .into_iter()
            .map(|s| s.complement_in(n))
            .collect()
    };
    from_facets(n, facets)
}

/// The (plain) k-cut complex: facets are the complements of the k-element
/// vertex sets whose induced subgraph is disconnected.
pub fn cut_complex(g: &Graph, k: usize) -> Result<SimplicialComplex> {
    if k < 2 {
        return Err(Error::KTooSmall { op: "cut_complex", k, min: 2 });
    }
    let n = g.n();
    let mut facets = Vec::new();
    if k <= n {
        let mut subset = Vec::new();
        k_subsets(n, k, &mut subset, &mut |s: VertexSet| {
            if g.induced_subgraph(s).components().len() >= 2 {
                facets.push(s.complement_in(n));
            }
        });
    }
    from_facets(n, facets)
}

fn k_subsets(n: usize, k: usize, cur: &mut Vec<usize>, emit: &mut impl FnMut(VertexSet)) {
    fn rec(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, emit: &mut impl FnMut(VertexSet)) {
        if cur.len() == k {
            emit(cur.iter().copied().collect());
            return;
        }
        let left = k - cur.len();
        for v in start..=n.saturating_sub(left) {
            cur.push(v);
            rec(n, k, v + 1, cur, emit);
            cur.pop();
        }
    }
    if k <= n {
        rec(n, k, 0, cur, emit);
    }
}

/// The facets of the next total cut complex, read off combinatorially: the
/// ridges of the input contained in exactly `k + 1` facets. For a genuine
/// total k-cut complex this equals the total (k+1)-cut complex.
pub fn next_total_from_ridges(c: &SimplicialComplex, k: usize) -> Result<SimplicialComplex> {
    if k < 2 {
        return Err(Error::KTooSmall { op: "next_total_from_ridges", k, min: 2 });
    }
    if !c.is_pure() {
        return Err(Error::NotPure("next_total_from_ridges"));
    }
    if c.is_void() {
        return from_facets(c.ground(), Vec::new());
    }
    let facets = c
        .ridges_with_facet_counts()?
        .into_iter()
        .filter(|&(_, count)| count == k + 1)
        .map(|(r, _)| r)
        .collect();
    from_facets(c.ground(), facets)
}

/// Checks the isolated-vertex decomposition exactly: the total k-cut complex
/// of `G` plus a fresh isolated vertex equals the union of the total
/// (k-1)-cut complex of `G` and the cone over the total k-cut complex.
pub fn verify_isolated_decomposition(g: &Graph, k: usize) -> Result<bool> {
    if k < 2 {
        return Err(Error::KTooSmall { op: "verify_isolated_decomposition", k, min: 2 });
    }
    let extended = g.add_isolated_vertex()?;
    let lhs = total_cut_complex(&extended, k)?;

    let n = g.n();
    let lower = total_cut_complex(g, k - 1)?;
    let lower_lifted = from_facets(n + 1, lower.facets().to_vec())?;
    let upper = total_cut_complex(g, k)?;
    let coned = from_facets(
        n + 1,
        upper.facets().iter().map(|f| f.with(n)).collect(),
    )?;
    let rhs = lower_lifted.union(&coned)?;
    Ok(lhs == rhs)
}

/// Maximum vertex count for the exhaustive graph search.
pub const REALIZABILITY_N_CAP: usize = 7;

/// Outcome of scanning every graph on `n` vertices whose total k-cut
/// complex has all the required sets among its facets.
#[derive(Debug)]
pub struct RealizabilityScan {
    pub witnesses: u64,
    pub first_witness: Option<Graph>,
    /// Witnesses whose complex does NOT have the probe facet, when one was
    /// supplied.
    pub probe_violations: u64,
}

/// Scans all graphs on `n <= 7` vertices (2^21 at most) for those whose
/// total k-cut complex contains every `required` set as a facet. The
/// optional `probe` facet is checked on every witness. Only edges that no
/// required facet forbids are enumerated; any edge inside the complement of
/// a required facet would break that facet's independence, so skipping those
/// graphs loses nothing.
pub fn realizability_scan(
    required: &[VertexSet],
    n: usize,
    k: usize,
    probe: Option<VertexSet>,
    mode: ExecMode,
) -> Result<RealizabilityScan> {
    if k < 2 {
        return Err(Error::KTooSmall { op: "realizability_scan", k, min: 2 });
    }
    if n > REALIZABILITY_N_CAP {
        return Err(Error::TooManyVertices(n, REALIZABILITY_N_CAP));
    }
    for &r in required {
        if r.len() + k != n || !r.is_subset_of(VertexSet::full(n)) {
            return Err(Error::BadRequiredFacet(r, n, k));
        }
    }
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    // positions whose edge would land inside some required complement
    let allowed: Vec<usize> = (0..pairs.len())
        .filter(|&idx| {
            let (i, j) = pairs[idx];
            !required.iter().any(|r| {
                let comp = r.complement_in(n);
                comp.contains(i) && comp.contains(j)
            })
        })
        .collect();

    let total: u64 = 1 << allowed.len();
    let chunk: u64 = 1 << allowed.len().saturating_sub(8).min(16);
    let starts: Vec<u64> = (0..total).step_by(chunk.max(1) as usize).collect();
    let results = par::map(mode, starts, |start| {
        let mut witnesses = 0u64;
        let mut first: Option<u64> = None;
        let mut violations = 0u64;
        for mask in start..(start + chunk).min(total) {
            let mut edges = Vec::with_capacity(allowed.len());
            for (bit, &idx) in allowed.iter().enumerate() {
                if mask >> bit & 1 == 1 {
                    edges.push(pairs[idx]);
                }
            }
            let g = make_graph(n, &edges).expect("pairs are in range");
            // required facets hold by construction of `allowed` only when
            // their complements span no allowed edge either; re-check to
            // keep the scan semantics honest
            if !required.iter().all(|r| g.is_independent(r.complement_in(n))) {
                continue;
            }
            witnesses += 1;
            if first.is_none() {
                first = Some(mask);
            }
            if let Some(p) = probe {
                if !g.is_independent(p.complement_in(n)) {
                    violations += 1;
                }
            }
        }
        (witnesses, first, violations)
    });

    let mut scan = RealizabilityScan { witnesses: 0, first_witness: None, probe_violations: 0 };
    let mut first_mask: Option<u64> = None;
    for (w, f, v) in results {
        scan.witnesses += w;
        scan.probe_violations += v;
        if first_mask.is_none() {
            first_mask = f;
        }
    }
    if let Some(mask) = first_mask {
        let edges: Vec<(usize, usize)> = allowed
            .iter()
            .enumerate()
            .filter(|(bit, _)| mask >> bit & 1 == 1)
            .map(|(_, &idx)| pairs[idx])
            .collect();
        scan.first_witness = Some(make_graph(n, &edges)?);
    }
    Ok(scan)
}

/// One witness graph whose total k-cut complex has all the given facets, if
/// any exists; the first in the deterministic enumeration order.
pub fn realizability_probe(
    required: &[VertexSet],
    n: usize,
    k: usize,
) -> Result<Option<Graph>> {
    Ok(realizability_scan(required, n, k, None, ExecMode::default())?.first_witness)
}
