//! Exact structural decision procedures: vertex decomposability, shelling
//! search, contractibility certificates, and homology obstructions to
//! shellability.
//!
//! Void and empty-face complexes count as vertex decomposable and
//! shellable throughout, extending the convention the shelling definition
//! uses for the void complex.

use std::collections::HashMap;

use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::homology::BettiReport;
use crate::morse::{element_matching_sequence_with_cap, morse_report, Certificate};
use crate::vset::VertexSet;
use crate::{DEFAULT_FACET_CAP, VD_FACE_CAP};

/// A vertex-decomposition tree: the chosen shedding vertex at each step.
#[derive(Debug, Clone, Serialize)]
pub enum VdWitness {
    Simplex,
    Convention,
    Shed { vertex: usize, link: Box<VdWitness>, deletion: Box<VdWitness> },
}

#[derive(Clone)]
enum VdOutcome {
    No,
    Simplex,
    Convention,
    Shed(usize),
}

/// Decides vertex decomposability by the definitional recursion, memoized
/// on the facet list. Returns the decomposition tree on success.
pub fn is_vertex_decomposable(c: &SimplicialComplex) -> Result<Option<VdWitness>> {
    c.face_count(VD_FACE_CAP)?;
    let mut memo: HashMap<Vec<VertexSet>, VdOutcome> = HashMap::new();
    let ok = vd_rec(c, &mut memo);
    Ok(if ok { Some(witness(c, &memo)) } else { None })
}

fn vd_rec(c: &SimplicialComplex, memo: &mut HashMap<Vec<VertexSet>, VdOutcome>) -> bool {
    let key = c.facets().to_vec();
    if let Some(out) = memo.get(&key) {
        return !matches!(out, VdOutcome::No);
    }
    let out = vd_decide(c, memo);
    let ok = !matches!(out, VdOutcome::No);
    memo.insert(key, out);
    ok
}

fn vd_decide(c: &SimplicialComplex, memo: &mut HashMap<Vec<VertexSet>, VdOutcome>) -> VdOutcome {
    match c.facets() {
        [] => return VdOutcome::Convention,
        [f] if f.is_empty() => return VdOutcome::Convention,
        [_] => return VdOutcome::Simplex,
        _ => {}
    }
    let d = c.dimension().expect("two or more facets");
    let vertices: VertexSet = c.facets().iter().fold(VertexSet::EMPTY, |a, f| a | *f);
    for v in vertices.iter() {
        let del = c.deletion(VertexSet::singleton(v));
        if !del.is_pure() || del.dimension() != Some(d) {
            continue;
        }
        let link = c.link(VertexSet::singleton(v)).expect("vertex is a face");
        if vd_rec(&link, memo) && vd_rec(&del, memo) {
            return VdOutcome::Shed(v);
        }
    }
    VdOutcome::No
}

fn witness(c: &SimplicialComplex, memo: &HashMap<Vec<VertexSet>, VdOutcome>) -> VdWitness {
    match memo.get(c.facets()).expect("decided during the recursion") {
        VdOutcome::No => unreachable!("witness requested for a negative"),
        VdOutcome::Simplex => VdWitness::Simplex,
        VdOutcome::Convention => VdWitness::Convention,
        VdOutcome::Shed(v) => {
            let link = c.link(VertexSet::singleton(*v)).expect("vertex is a face");
            let del = c.deletion(VertexSet::singleton(*v));
            VdWitness::Shed {
                vertex: *v,
                link: Box::new(witness(&link, memo)),
                deletion: Box::new(witness(&del, memo)),
            }
        }
    }
}

/// Is the given facet order a shelling? Facets are the complex's facets in
/// the order given by `order` (indices into `facets()`), which must be a
/// permutation. The j-th facet must meet the union of its predecessors in
/// a nonvoid pure complex of dimension |F_j| - 2.
pub fn is_shelling_order(c: &SimplicialComplex, order: &[usize]) -> bool {
    let facets = c.facets();
    if order.len() != facets.len() {
        return false;
    }
    let mut seen = vec![false; facets.len()];
    for &i in order {
        if i >= facets.len() || seen[i] {
            return false;
        }
        seen[i] = true;
    }
    for (j, &fj_idx) in order.iter().enumerate().skip(1) {
        let fj = facets[fj_idx];
        for &fi_idx in &order[..j] {
            let inter = facets[fi_idx] & fj;
            let ok = order[..j].iter().any(|&fl_idx| {
                let big = facets[fl_idx] & fj;
                big.len() + 1 == fj.len() && inter.is_subset_of(big)
            });
            if !ok {
                return false;
            }
        }
    }
    true
}

/// Searches for a shelling order over all facet orderings, as reachability
/// over predecessor sets: whether an ordering can be extended by a facet
/// depends only on the set of facets already placed, so the search walks
/// subsets. `None` means no shelling exists (proved exhaustively). Errors
/// out above the facet cap.
pub fn find_shelling(c: &SimplicialComplex, facet_cap: usize) -> Result<Option<Vec<usize>>> {
    let m = c.facets().len();
    // the subset table needs 2^m entries
    let cap = facet_cap.min(25);
    if m > cap {
        return Err(Error::FacetCapExceeded { facets: m, cap });
    }
    if m <= 1 {
        return Ok(Some((0..m).collect()));
    }
    let facets = c.facets();
    // can facet j follow the set S? need: forall i in S exists l in S with
    // |F_l & F_j| = |F_j| - 1 and F_i & F_j subset of F_l
    let inter: Vec<Vec<VertexSet>> = (0..m)
        .map(|i| (0..m).map(|j| facets[i] & facets[j]).collect())
        .collect();
    let extendable = |s: u32, j: usize| -> bool {
        let mut i_bits = s;
        while i_bits != 0 {
            let i = i_bits.trailing_zeros() as usize;
            i_bits &= i_bits - 1;
            let mut found = false;
            let mut l_bits = s;
            while l_bits != 0 {
                let l = l_bits.trailing_zeros() as usize;
                l_bits &= l_bits - 1;
                if inter[l][j].len() + 1 == facets[j].len()
                    && inter[i][j].is_subset_of(inter[l][j])
                {
                    found = true;
                    break;
                }
            }
            if !found {
                return false;
            }
        }
        true
    };
    // BFS over subsets, remembering one predecessor facet per subset
    let full: u32 = (1u32 << m) - 1;
    let mut pred: Vec<Option<usize>> = vec![None; 1usize << m];
    let mut reached = vec![false; 1usize << m];
    reached[0] = true;
    let mut frontier: Vec<u32> = vec![0];
    while let Some(s) = frontier.pop() {
        if s == full {
            continue;
        }
        for j in 0..m {
            if s >> j & 1 == 1 {
                continue;
            }
            let t = s | 1 << j;
            if reached[t as usize] {
                continue;
            }
            if s == 0 || extendable(s, j) {
                reached[t as usize] = true;
                pred[t as usize] = Some(j);
                frontier.push(t);
            }
        }
    }
    if !reached[full as usize] {
        return Ok(None);
    }
    let mut order = Vec::with_capacity(m);
    let mut s = full;
    while s != 0 {
        let j = pred[s as usize].expect("reached subsets have predecessors");
        order.push(j);
        s &= !(1 << j);
    }
    order.reverse();
    debug_assert!(is_shelling_order(c, &order));
    Ok(Some(order))
}

pub fn find_shelling_default(c: &SimplicialComplex) -> Result<Option<Vec<usize>>> {
    find_shelling(c, DEFAULT_FACET_CAP)
}

/// Homology obstruction to shellability of a pure complex: a pure
/// shellable complex is a wedge of top-dimensional spheres or contractible,
/// so any reduced homology below the top dimension rules shellability out.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Obstruction {
    pub top_dim: i64,
    pub dim: i64,
    pub betti: u64,
}

pub fn non_shellability_obstruction(
    c: &SimplicialComplex,
    betti: &BettiReport,
) -> Result<Option<Obstruction>> {
    if !c.is_pure() {
        return Err(Error::NotPure("non_shellability_obstruction"));
    }
    let Some(top_dim) = c.dimension() else {
        return Ok(None);
    };
    for (d, b) in betti.nonzero() {
        if d < top_dim {
            return Ok(Some(Obstruction { top_dim, dim: d, betti: b }));
        }
    }
    Ok(None)
}

/// A proof of contractibility, when one of the cheap certificates applies.
/// Absence proves nothing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum ContractibleCert {
    /// Exactly one (nonempty) facet: a simplex.
    SingleFacet,
    /// Some vertex lies in every facet.
    Cone { apex: usize },
    /// The element matching over all vertices in ascending order leaves no
    /// critical cells.
    MorsePoint,
}

pub fn contractibility_certificate(c: &SimplicialComplex) -> Option<ContractibleCert> {
    match c.facets() {
        [] => return None,
        [f] if f.is_empty() => return None,
        [_] => return Some(ContractibleCert::SingleFacet),
        _ => {}
    }
    let common = c
        .facets()
        .iter()
        .fold(VertexSet::full(c.ground()), |acc, f| acc & *f);
    if let Some(apex) = common.min_vertex() {
        return Some(ContractibleCert::Cone { apex });
    }
    let schedule: Vec<usize> = (0..c.ground()).collect();
    let m = element_matching_sequence_with_cap(c, &schedule, crate::face_cap()).ok()?;
    let report = morse_report(c, &m, None).ok()?;
    if m.empty_face_matched() && report.certificate == Certificate::Contractible {
        Some(ContractibleCert::MorsePoint)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{from_facets, simplex};
    use crate::cutgen::total_cut_complex;
    use crate::graph::{family, Family};
    use crate::homology::betti;
    use crate::testutil::{example_delta3_facets, example_graph, vs};

    #[test]
    fn simplices_and_conventions_are_vd() {
        assert!(is_vertex_decomposable(&simplex(4)).unwrap().is_some());
        assert!(is_vertex_decomposable(&from_facets(3, vec![]).unwrap()).unwrap().is_some());
        assert!(is_vertex_decomposable(&from_facets(3, vec![VertexSet::EMPTY]).unwrap())
            .unwrap()
            .is_some());
    }

    #[test]
    fn k22_total_cut_complex_is_not_vd() {
        let g = family(Family::CompleteBipartite(2, 2)).unwrap();
        let c = total_cut_complex(&g, 2).unwrap();
        assert!(is_vertex_decomposable(&c).unwrap().is_none());
    }

    #[test]
    fn chordal_total_cut_complexes_are_vd() {
        for g in [
            family(Family::Path(6)).unwrap(),
            family(Family::Complete(4)).unwrap(),
            family(Family::Edgeless(5)).unwrap(),
        ] {
            for k in 2..=g.independence_number() {
                let c = total_cut_complex(&g, k).unwrap();
                let w = is_vertex_decomposable(&c).unwrap();
                assert!(w.is_some(), "{g:?} k={k}");
            }
        }
    }

    #[test]
    fn vd_witness_sheds_real_vertices() {
        let g = family(Family::Path(5)).unwrap();
        let c = total_cut_complex(&g, 2).unwrap();
        let w = is_vertex_decomposable(&c).unwrap().unwrap();
        fn depth(w: &VdWitness) -> usize {
            match w {
                VdWitness::Shed { link, deletion, .. } => 1 + depth(link).max(depth(deletion)),
                _ => 0,
            }
        }
        assert!(depth(&w) >= 1);
    }

    #[test]
    fn paper_facet_order_is_a_shelling() {
        let c = from_facets(6, example_delta3_facets()).unwrap();
        // facets() is sorted; map the paper's order onto indices
        let order: Vec<usize> = example_delta3_facets()
            .iter()
            .map(|f| c.facets().iter().position(|g| g == f).unwrap())
            .collect();
        assert!(is_shelling_order(&c, &order));
        assert!(find_shelling(&c, 12).unwrap().is_some());
    }

    #[test]
    fn shelling_rejects_bad_orders() {
        // two disjoint edges: no order works
        let c = from_facets(4, vec![vs([0, 1]), vs([2, 3])]).unwrap();
        assert!(!is_shelling_order(&c, &[0, 1]));
        assert!(find_shelling(&c, 12).unwrap().is_none());
        // wrong permutations are rejected outright
        let c2 = from_facets(3, vec![vs([0, 1]), vs([1, 2])]).unwrap();
        assert!(!is_shelling_order(&c2, &[0, 0]));
        assert!(!is_shelling_order(&c2, &[0]));
        assert!(is_shelling_order(&c2, &[1, 0]));
    }

    #[test]
    fn shelling_search_on_families() {
        // K_{2,2}: union of two disjoint 1-simplices, not shellable
        let k22 = total_cut_complex(&family(Family::CompleteBipartite(2, 2)).unwrap(), 2).unwrap();
        assert!(find_shelling(&k22, 12).unwrap().is_none());
        // C6 at k=2 has 9 facets and is not shellable
        let c6 = total_cut_complex(&family(Family::Cycle(6)).unwrap(), 2).unwrap();
        assert_eq!(c6.facets().len(), 9);
        assert!(find_shelling(&c6, 12).unwrap().is_none());
        // 0-dimensional complexes are shellable
        let pts = from_facets(3, vec![vs([0]), vs([1]), vs([2])]).unwrap();
        assert!(find_shelling(&pts, 12).unwrap().is_some());
        // the facet cap errors out
        assert!(matches!(
            find_shelling(&c6, 4),
            Err(Error::FacetCapExceeded { facets: 9, cap: 4 })
        ));
    }

    #[test]
    fn vd_implies_shellable_small() {
        let complexes = [
            total_cut_complex(&family(Family::Path(5)).unwrap(), 2).unwrap(),
            total_cut_complex(&family(Family::Edgeless(4)).unwrap(), 2).unwrap(),
            from_facets(6, example_delta3_facets()).unwrap(),
        ];
        for c in &complexes {
            if is_vertex_decomposable(c).unwrap().is_some() && c.facets().len() <= 12 {
                assert!(find_shelling(c, 12).unwrap().is_some(), "{c:?}");
            }
        }
    }

    #[test]
    fn obstructions() {
        let c6 = total_cut_complex(&family(Family::Cycle(6)).unwrap(), 2).unwrap();
        let b = betti(&c6).unwrap();
        let ob = non_shellability_obstruction(&c6, &b).unwrap().unwrap();
        assert_eq!((ob.top_dim, ob.dim, ob.betti), (3, 2, 1));

        let w7 = total_cut_complex(&family(Family::SquaredCycle(7)).unwrap(), 2).unwrap();
        let b = betti(&w7).unwrap();
        let ob = non_shellability_obstruction(&w7, &b).unwrap().unwrap();
        assert_eq!((ob.top_dim, ob.dim, ob.betti), (4, 3, 1));

        // edgeless: homology only in the top dimension, no obstruction
        let e4 = total_cut_complex(&family(Family::Edgeless(4)).unwrap(), 2).unwrap();
        let b = betti(&e4).unwrap();
        assert!(non_shellability_obstruction(&e4, &b).unwrap().is_none());

        let non_pure = from_facets(4, vec![vs([0, 1, 2]), vs([3])]).unwrap();
        let b = betti(&non_pure).unwrap();
        assert!(non_shellability_obstruction(&non_pure, &b).is_err());
    }

    #[test]
    fn contractibility_certificates() {
        // path P_{2k-1} at level k: single facet
        for k in 2..=4 {
            let g = family(Family::Path(2 * k - 1)).unwrap();
            let c = total_cut_complex(&g, k).unwrap();
            assert_eq!(contractibility_certificate(&c), Some(ContractibleCert::SingleFacet));
        }
        // the example complex is a cone with apex d = 3
        let c = total_cut_complex(&example_graph(), 3).unwrap();
        assert_eq!(contractibility_certificate(&c), Some(ContractibleCert::Cone { apex: 3 }));
        // C6 at k=2 has homology, no certificate
        let c6 = total_cut_complex(&family(Family::Cycle(6)).unwrap(), 2).unwrap();
        assert_eq!(contractibility_certificate(&c6), None);
        // longer path: morse point after the cheap certificates fail
        let p7 = total_cut_complex(&family(Family::Path(7)).unwrap(), 3).unwrap();
        let cert = contractibility_certificate(&p7);
        assert!(cert.is_some());
        // void and empty-face: no certificate
        assert_eq!(contractibility_certificate(&from_facets(2, vec![]).unwrap()), None);
        assert_eq!(
            contractibility_certificate(&from_facets(2, vec![VertexSet::EMPTY]).unwrap()),
            None
        );
    }
}
