//! Discrete Morse machinery: sequences of element matchings, acyclicity
//! verification, critical-cell reports, and the per-family schedules the
//! proofs use.
//!
//! An element matching with vertex `x` pairs each surviving face `s` not
//! containing `x` with `s + x` when both still survive; a schedule runs one
//! such matching per vertex, each round operating only on the faces left
//! unmatched by earlier rounds. The empty face takes part like any other
//! (it can be matched to a vertex). A sequence of element matchings is
//! always acyclic, but `verify_acyclic` checks any partial matching from
//! scratch.

use std::collections::{HashMap, HashSet};

use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face_cap;
use crate::homology::BettiReport;
use crate::vset::VertexSet;

/// An ordered element-matching schedule together with the pairs it made
/// and the surviving (critical) faces.
#[derive(Debug, Clone)]
pub struct Matching {
    pub schedule: Vec<usize>,
    /// (face, coface) with coface = face + scheduled vertex, in the order
    /// the rounds produced them.
    pub pairs: Vec<(VertexSet, VertexSet)>,
    /// Unmatched faces, sorted by (cardinality, bitmask). May include the
    /// empty face.
    pub critical: Vec<VertexSet>,
}

impl Matching {
    pub fn empty_face_matched(&self) -> bool {
        !self.critical.contains(&VertexSet::EMPTY)
    }

    /// Critical cells of dimension >= 0.
    pub fn critical_cells(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.critical.iter().copied().filter(|c| !c.is_empty())
    }
}

/// Runs the element matchings for `schedule` on the face poset of the
/// complex, empty face included.
pub fn element_matching_sequence(
    c: &SimplicialComplex,
    schedule: &[usize],
) -> Result<Matching> {
    element_matching_sequence_with_cap(c, schedule, face_cap())
}

pub fn element_matching_sequence_with_cap(
    c: &SimplicialComplex,
    schedule: &[usize],
    cap: u64,
) -> Result<Matching> {
    let mut seen = VertexSet::EMPTY;
    for &x in schedule {
        if x >= c.ground() {
            return Err(Error::VertexOutOfRange { v: x, n: c.ground() });
        }
        if seen.contains(x) {
            return Err(Error::DuplicateScheduleVertex(x));
        }
        seen = seen.with(x);
    }
    if c.is_void() {
        return Err(Error::VoidComplex("element_matching_sequence"));
    }

    let fi = c.face_index(cap)?;
    let faces: Vec<VertexSet> = fi.by_card.iter().flatten().copied().collect();
    let id_of: HashMap<VertexSet, u32> =
        faces.iter().enumerate().map(|(i, &f)| (f, i as u32)).collect();
    let mut alive = vec![true; faces.len()];
    let mut pairs = Vec::new();

    for &x in schedule {
        for (i, &sigma) in faces.iter().enumerate() {
            if !alive[i] || sigma.contains(x) {
                continue;
            }
            let Some(&j) = id_of.get(&sigma.with(x)) else {
                continue;
            };
            if alive[j as usize] {
                alive[i] = false;
                alive[j as usize] = false;
                pairs.push((sigma, sigma.with(x)));
            }
        }
    }

    let critical = faces
        .iter()
        .enumerate()
        .filter(|&(i, _)| alive[i])
        .map(|(_, &f)| f)
        .collect();
    Ok(Matching { schedule: schedule.to_vec(), pairs, critical })
}

/// Checks that `m` is a partial matching on the face poset of `c` (every
/// pair a cover relation, no face in two pairs) and that reversing the
/// matched edges creates no alternating cycle. The search runs on the
/// matched pairs only: any alternating cycle must pass through them.
pub fn verify_acyclic(c: &SimplicialComplex, m: &Matching) -> Result<bool> {
    let mut lower_of: HashMap<VertexSet, usize> = HashMap::new();
    let mut used: HashSet<VertexSet> = HashSet::new();
    for (idx, &(a, b)) in m.pairs.iter().enumerate() {
        if !(a.is_subset_of(b) && b.len() == a.len() + 1 && c.is_face(b)) {
            return Err(Error::NotACover(a, b));
        }
        for f in [a, b] {
            if !used.insert(f) {
                return Err(Error::NotAMatching(f));
            }
        }
        lower_of.insert(a, idx);
    }

    // digraph on pairs: (a, b) -> (a', b') when a' is a facet of b other
    // than a; a cycle here is exactly an alternating up-down cycle
    let succ: Vec<Vec<usize>> = m
        .pairs
        .iter()
        .map(|&(a, b)| {
            b.iter()
                .filter_map(|v| {
                    let f = b.without(v);
                    if f == a {
                        None
                    } else {
                        lower_of.get(&f).copied()
                    }
                })
                .collect()
        })
        .collect();

    // iterative three-color DFS
    let n = m.pairs.len();
    let mut color = vec![0u8; n]; // 0 white, 1 grey, 2 black
    for start in 0..n {
        if color[start] != 0 {
            continue;
        }
        let mut stack: Vec<(usize, usize)> = vec![(start, 0)];
        color[start] = 1;
        while let Some(frame) = stack.last_mut() {
            let (v, next) = *frame;
            if next < succ[v].len() {
                frame.1 += 1;
                let w = succ[v][next];
                match color[w] {
                    0 => {
                        color[w] = 1;
                        stack.push((w, 0));
                    }
                    1 => return Ok(false),
                    _ => {}
                }
            } else {
                color[v] = 2;
                stack.pop();
            }
        }
    }
    Ok(true)
}

/// What the critical-cell census certifies about the homotopy type.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Certificate {
    /// All critical cells in one dimension, empty face matched: a wedge of
    /// `count` spheres of dimension `dim`.
    WedgeOfSpheres { dim: i64, count: u64 },
    Contractible,
    Inconclusive,
}

#[derive(Debug, Clone, Serialize)]
pub struct MorseReport {
    /// Critical cells per dimension, index = dimension (empty face not
    /// counted here).
    pub cells_per_dim: Vec<u64>,
    pub empty_matched: bool,
    pub certificate: Certificate,
    /// When a Betti report was supplied: whether c_i >= betti_i held in
    /// every dimension.
    pub morse_inequalities_ok: Option<bool>,
}

/// Counts critical cells and issues the homotopy certificate. Insists on
/// acyclicity, and cross-checks the Morse inequalities when a Betti report
/// is supplied.
pub fn morse_report(
    c: &SimplicialComplex,
    m: &Matching,
    betti: Option<&BettiReport>,
) -> Result<MorseReport> {
    if !verify_acyclic(c, m)? {
        return Err(Error::NotAcyclic);
    }
    let empty_matched = m.empty_face_matched();
    let top = m.critical_cells().map(|f| f.len()).max().unwrap_or(0);
    let mut cells_per_dim = vec![0u64; top];
    for f in m.critical_cells() {
        cells_per_dim[f.len() - 1] += 1;
    }

    let occupied: Vec<usize> = cells_per_dim
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(d, _)| d)
        .collect();
    let certificate = if empty_matched && occupied.is_empty() {
        Certificate::Contractible
    } else if !empty_matched && occupied == [0] && cells_per_dim[0] == 1 {
        // a single critical vertex plus the critical empty face collapse
        // to a point
        Certificate::Contractible
    } else if empty_matched && occupied.len() == 1 {
        let d = occupied[0];
        Certificate::WedgeOfSpheres { dim: d as i64, count: cells_per_dim[d] }
    } else {
        Certificate::Inconclusive
    };

    let morse_inequalities_ok = betti.map(|b| {
        (0..cells_per_dim.len().max(b.betti.len().saturating_sub(1)))
            .all(|d| {
                let c_d = cells_per_dim.get(d).copied().unwrap_or(0);
                c_d >= b.betti_dim(d as i64)
            })
    });

    Ok(MorseReport { cells_per_dim, empty_matched, certificate, morse_inequalities_ok })
}

/// Families with a schedule taken from the corresponding proof.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PresetFamily {
    /// K_{m,n}: one matching with the first vertex of each side.
    Bipartite { m: usize, n: usize },
    /// Prism over K_n: the vertices 1+ then 1-.
    Prism { n: usize },
    /// C_n at level k: vertices 1, 2, .., n - 2k + 2.
    Cycle { n: usize, k: usize },
    /// G(m, n): vertices 1, .., (m-1) n.
    Grid { m: usize, n: usize },
    /// W_n: vertices 1, .., n-3 and then n-1.
    SquaredCycle { n: usize },
}

/// The vertex order the corresponding proof feeds to the element
/// matchings, in this crate's 0-based labels.
pub fn preset_schedule(family: PresetFamily) -> Result<Vec<usize>> {
    use PresetFamily::*;
    let bad = |msg: &str| Err(Error::BadFamily(msg.to_string()));
    match family {
        Bipartite { m, n } => {
            if m < 1 || n < 1 {
                return bad("bipartite preset needs m, n >= 1");
            }
            Ok(vec![0, m])
        }
        Prism { n } => {
            if n < 2 {
                return bad("prism preset needs n >= 2");
            }
            Ok(vec![0, n])
        }
        Cycle { n, k } => {
            if k < 2 || n < 2 * k {
                return bad("cycle preset needs n >= 2k >= 4");
            }
            Ok((0..n - 2 * k + 2).collect())
        }
        Grid { m, n } => {
            if m < 2 || n < 2 {
                return bad("grid preset needs m, n >= 2");
            }
            Ok((0..(m - 1) * n).collect())
        }
        SquaredCycle { n } => {
            if n < 7 {
                return bad("squared-cycle preset needs n >= 7");
            }
            let mut s: Vec<usize> = (0..n - 3).collect();
            s.push(n - 2);
            Ok(s)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{from_facets, simplex};
    use crate::cutgen::total_cut_complex;
    use crate::graph::{family, Family};
    use crate::homology::betti;
    use crate::testutil::vs;

    fn matching_on(g: &crate::graph::Graph, k: usize, schedule: &[usize]) -> Matching {
        let c = total_cut_complex(g, k).unwrap();
        element_matching_sequence(&c, schedule).unwrap()
    }

    #[test]
    fn prism3_critical_cells_match_proof() {
        // schedule [1+, 1-] = [0, 3]; critical cells {1-,2+,2-} and
        // {1-,3+,3-}, i.e. {3,1,4} and {3,2,5}
        let g = family(Family::Prism(3)).unwrap();
        let m = matching_on(&g, 2, &[0, 3]);
        let crit: Vec<VertexSet> = m.critical_cells().collect();
        assert_eq!(crit, vec![vs([1, 3, 4]), vs([2, 3, 5])]);
        assert!(m.empty_face_matched());
    }

    #[test]
    fn grid33_critical_cells_are_the_starred_faces() {
        let g = family(Family::Grid(3, 3)).unwrap();
        let m = matching_on(&g, 2, &preset_schedule(PresetFamily::Grid { m: 3, n: 3 }).unwrap());
        let mut crit: Vec<VertexSet> = m.critical_cells().collect();
        crit.sort_unstable();
        let full = VertexSet::full(9);
        let mut expected: Vec<VertexSet> = [[0, 3, 4], [0, 4, 5], [0, 6, 7], [0, 7, 8]]
            .into_iter()
            .map(|rm| full - rm.into_iter().collect())
            .collect();
        expected.sort_unstable();
        assert_eq!(crit, expected);
    }

    #[test]
    fn cycle_critical_cell_is_the_irregular_face() {
        // C5, k=2: single critical face {2, 3} 1-based = {1, 2} 0-based
        let g = family(Family::Cycle(5)).unwrap();
        let m = matching_on(&g, 2, &preset_schedule(PresetFamily::Cycle { n: 5, k: 2 }).unwrap());
        let crit: Vec<VertexSet> = m.critical_cells().collect();
        assert_eq!(crit, vec![vs([1, 2])]);
        // in general: one critical cell {2, .., n-2k+2} 1-based
        for (n, k) in [(6, 2), (8, 2), (8, 3), (10, 4)] {
            let g = family(Family::Cycle(n)).unwrap();
            let m =
                matching_on(&g, k, &preset_schedule(PresetFamily::Cycle { n, k }).unwrap());
            let crit: Vec<VertexSet> = m.critical_cells().collect();
            let expected: VertexSet = (1..=n - 2 * k + 1).collect();
            assert_eq!(crit, vec![expected], "n={n} k={k}");
            assert!(m.empty_face_matched());
        }
    }

    #[test]
    fn element_matchings_are_acyclic() {
        let g = family(Family::SquaredCycle(8)).unwrap();
        let c = total_cut_complex(&g, 2).unwrap();
        let m = element_matching_sequence(&c, &[0, 1, 2, 3, 4, 6]).unwrap();
        assert!(verify_acyclic(&c, &m).unwrap());
        // fuzz: random schedules on random small complexes
        use rand::seq::SliceRandom;
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
        for _ in 0..60 {
            let n = rng.gen_range(1..=6);
            let nf = rng.gen_range(1..=5);
            let facets: Vec<_> = (0..nf)
                .map(|_| VertexSet::from_bits(rng.gen_range(0..1u64 << n)))
                .collect();
            let c = from_facets(n, facets).unwrap();
            let mut verts: Vec<usize> = (0..n).collect();
            verts.shuffle(&mut rng);
            verts.truncate(rng.gen_range(0..=n));
            let m = element_matching_sequence(&c, &verts).unwrap();
            assert!(verify_acyclic(&c, &m).unwrap());
        }
    }

    #[test]
    fn handmade_cycle_is_rejected() {
        // triangle boundary: pair each vertex to the next edge around the
        // triangle; the up-down walk wraps around, a 3-cycle
        let c = simplex(3).skeleton(1).unwrap();
        let m = Matching {
            schedule: vec![],
            pairs: vec![
                (vs([0]), vs([0, 1])),
                (vs([1]), vs([1, 2])),
                (vs([2]), vs([0, 2])),
            ],
            critical: vec![],
        };
        assert!(!verify_acyclic(&c, &m).unwrap());
        // empty matching is trivially acyclic
        let empty = Matching { schedule: vec![], pairs: vec![], critical: vec![] };
        assert!(verify_acyclic(&c, &empty).unwrap());
        // non-cover pair is rejected outright
        let bad = Matching {
            schedule: vec![],
            pairs: vec![(vs([0]), vs([0, 1, 2]))],
            critical: vec![],
        };
        assert!(verify_acyclic(&c, &bad).is_err());
    }

    #[test]
    fn schedule_validation() {
        let c = simplex(3);
        assert!(matches!(
            element_matching_sequence(&c, &[0, 0]),
            Err(Error::DuplicateScheduleVertex(0))
        ));
        assert!(element_matching_sequence(&c, &[7]).is_err());
        let void = from_facets(2, vec![]).unwrap();
        assert!(element_matching_sequence(&void, &[0]).is_err());
    }

    #[test]
    fn reports_for_prism_and_path() {
        let g = family(Family::Prism(3)).unwrap();
        let c = total_cut_complex(&g, 2).unwrap();
        let m = element_matching_sequence(&c, &[0, 3]).unwrap();
        let b = betti(&c).unwrap();
        let r = morse_report(&c, &m, Some(&b)).unwrap();
        assert_eq!(r.certificate, Certificate::WedgeOfSpheres { dim: 2, count: 2 });
        assert_eq!(r.morse_inequalities_ok, Some(true));

        // paths are contractible for n >= 2k - 1: left-to-right schedule
        for (n, k) in [(3, 2), (5, 3), (7, 3)] {
            let g = family(Family::Path(n)).unwrap();
            let c = total_cut_complex(&g, k).unwrap();
            let sched: Vec<usize> = (0..n).collect();
            let m = element_matching_sequence(&c, &sched).unwrap();
            let r = morse_report(&c, &m, None).unwrap();
            assert_eq!(r.certificate, Certificate::Contractible, "P{n} k={k}");
        }
    }

    #[test]
    fn report_for_squared_cycle_w9() {
        let g = family(Family::SquaredCycle(9)).unwrap();
        let c = total_cut_complex(&g, 2).unwrap();
        let sched = preset_schedule(PresetFamily::SquaredCycle { n: 9 }).unwrap();
        assert_eq!(sched, vec![0, 1, 2, 3, 4, 5, 7]);
        let m = element_matching_sequence(&c, &sched).unwrap();
        let r = morse_report(&c, &m, None).unwrap();
        assert_eq!(r.certificate, Certificate::WedgeOfSpheres { dim: 5, count: 1 });
    }

    #[test]
    fn contractible_convention_without_empty_match() {
        // the complex {a}: no schedule at all leaves the empty face and the
        // vertex critical; that is still a point
        let c = from_facets(1, vec![vs([0])]).unwrap();
        let m = element_matching_sequence(&c, &[]).unwrap();
        let r = morse_report(&c, &m, None).unwrap();
        assert!(!r.empty_matched);
        assert_eq!(r.certificate, Certificate::Contractible);
        // with the schedule [0] the empty face gets matched instead
        let m = element_matching_sequence(&c, &[0]).unwrap();
        let r = morse_report(&c, &m, None).unwrap();
        assert!(r.empty_matched);
        assert_eq!(r.certificate, Certificate::Contractible);
    }

    #[test]
    fn preset_schedules() {
        assert_eq!(
            preset_schedule(PresetFamily::Cycle { n: 8, k: 2 }).unwrap(),
            vec![0, 1, 2, 3, 4, 5]
        );
        assert_eq!(
            preset_schedule(PresetFamily::Grid { m: 3, n: 3 }).unwrap(),
            vec![0, 1, 2, 3, 4, 5]
        );
        assert_eq!(preset_schedule(PresetFamily::Bipartite { m: 2, n: 5 }).unwrap(), vec![0, 2]);
        assert_eq!(preset_schedule(PresetFamily::Prism { n: 4 }).unwrap(), vec![0, 4]);
        assert!(preset_schedule(PresetFamily::Cycle { n: 5, k: 3 }).is_err());
        assert!(preset_schedule(PresetFamily::SquaredCycle { n: 6 }).is_err());
    }

    #[test]
    fn bipartite_critical_census() {
        // K_{m,n}, 2 <= k <= m <= n: C(m-1,k-1) * C(n-1,k-1) critical
        // faces, each of size m + n - 2k + 1
        fn binom(n: usize, k: usize) -> u64 {
            if k > n {
                return 0;
            }
            (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
        }
        for m in 2..=4usize {
            for n in m..=4usize {
                for k in 2..=m {
                    let g = family(Family::CompleteBipartite(m, n)).unwrap();
                    let sched = preset_schedule(PresetFamily::Bipartite { m, n }).unwrap();
                    let mm = matching_on(&g, k, &sched);
                    let crit: Vec<VertexSet> = mm.critical_cells().collect();
                    let expect = binom(m - 1, k - 1) * binom(n - 1, k - 1);
                    assert_eq!(crit.len() as u64, expect, "K{m},{n} k={k}");
                    assert!(crit.iter().all(|f| f.len() == m + n - 2 * k + 1));
                }
            }
        }
    }
}
