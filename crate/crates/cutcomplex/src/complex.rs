//! Facet-presented simplicial complexes: link, deletion, star, join, cone,
//! suspension, skeleton, Alexander dual, and purity/ridge queries.
//!
//! A complex is stored as its ground-set size plus the antichain of facets.
//! Three kinds are distinguished: the void complex (no faces at all), the
//! complex whose only face is the empty set, and everything else. The full
//! face list is materialized lazily, per cardinality, behind a face-count
//! cap, and cached; complexes are immutable so the cache never invalidates.

use std::collections::HashSet;
use std::sync::{Arc, OnceLock};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vset::VertexSet;
use crate::MAX_VERTICES;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Void,
    EmptyFace,
    Ordinary,
}

pub struct SimplicialComplex {
    ground: usize,
    /// Antichain, sorted ascending by bitmask.
    facets: Vec<VertexSet>,
    index: OnceLock<Arc<FaceIndex>>,
}

/// All faces of a complex, grouped by cardinality (index 0 holds the empty
/// face), each level sorted ascending by bitmask.
#[derive(Debug)]
pub struct FaceIndex {
    pub by_card: Vec<Vec<VertexSet>>,
    pub total: u64,
}

impl FaceIndex {
    /// Face counts per cardinality; entry 0 counts the empty face.
    pub fn f_vector(&self) -> Vec<u64> {
        self.by_card.iter().map(|l| l.len() as u64).collect()
    }

    pub fn max_card(&self) -> usize {
        self.by_card.len().saturating_sub(1)
    }

    /// Reduced Euler characteristic from the f-vector: the empty face
    /// contributes -1, vertices +1, and so on.
    pub fn euler_reduced(&self) -> i64 {
        self.by_card
            .iter()
            .enumerate()
            .map(|(c, l)| if c % 2 == 0 { -(l.len() as i64) } else { l.len() as i64 })
            .sum()
    }
}

impl Clone for SimplicialComplex {
    fn clone(&self) -> Self {
        let index = OnceLock::new();
        if let Some(fi) = self.index.get() {
            let _ = index.set(fi.clone());
        }
        SimplicialComplex { ground: self.ground, facets: self.facets.clone(), index }
    }
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.ground == other.ground && self.facets == other.facets
    }
}
impl Eq for SimplicialComplex {}

impl std::fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Complex(n={}, facets=[", self.ground)?;
        for (i, fct) in self.facets.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{fct}")?;
        }
        write!(f, "])")
    }
}

fn normalize_facets(mut cands: Vec<VertexSet>) -> Vec<VertexSet> {
    cands.sort_unstable_by_key(|s| std::cmp::Reverse(s.len()));
    cands.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(cands.len());
    for c in cands {
        if !kept.iter().any(|k| c.is_subset_of(*k) && c != *k) {
            kept.push(c);
        }
    }
    kept.sort_unstable();
    kept.dedup();
    kept
}

/// Builds a complex from candidate facets: duplicates and faces contained in
/// other candidates are dropped. No candidates at all gives the void
/// complex; `{{}}` gives the complex whose only face is the empty set.
pub fn from_facets(ground: usize, candidates: Vec<VertexSet>) -> Result<SimplicialComplex> {
    if ground > MAX_VERTICES {
        return Err(Error::TooManyVertices(ground, MAX_VERTICES));
    }
    let full = VertexSet::full(ground);
    for &c in &candidates {
        if !c.is_subset_of(full) {
            return Err(Error::VertexOutOfRange {
                v: (c - full).min_vertex().unwrap(),
                n: ground,
            });
        }
    }
    Ok(SimplicialComplex {
        ground,
        facets: normalize_facets(candidates),
        index: OnceLock::new(),
    })
}

/// The full simplex on ground `{0, .., n-1}`.
pub fn simplex(n: usize) -> SimplicialComplex {
    from_facets(n, vec![VertexSet::full(n)]).expect("n checked by caller")
}

/// The clique complex of a graph: faces are the cliques, facets the maximal
/// cliques (Bron-Kerbosch enumeration with pivoting).
pub fn clique_complex(g: &Graph) -> SimplicialComplex {
    let mut maximal = Vec::new();
    fn bron_kerbosch(
        g: &Graph,
        r: VertexSet,
        mut p: VertexSet,
        mut x: VertexSet,
        out: &mut Vec<VertexSet>,
    ) {
        if p.is_empty() && x.is_empty() {
            out.push(r);
            return;
        }
        let pivot = (p | x)
            .iter()
            .max_by_key(|&u| (p & g.neighbors(u)).len())
            .unwrap();
        for v in (p - g.neighbors(pivot)).iter().collect::<Vec<_>>() {
            bron_kerbosch(g, r.with(v), p & g.neighbors(v), x & g.neighbors(v), out);
            p = p.without(v);
            x = x.with(v);
        }
    }
    bron_kerbosch(g, VertexSet::EMPTY, g.vertex_set(), VertexSet::EMPTY, &mut maximal);
    from_facets(g.n(), maximal).expect("graph vertices fit the ground set")
}

impl SimplicialComplex {
    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn kind(&self) -> Kind {
        if self.facets.is_empty() {
            Kind::Void
        } else if self.facets == [VertexSet::EMPTY] {
            Kind::EmptyFace
        } else {
            Kind::Ordinary
        }
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// `None` for the void complex (the dimension is undefined there),
    /// `-1` for the empty-face complex.
    pub fn dimension(&self) -> Option<i64> {
        self.facets
            .iter()
            .map(|f| f.len() as i64 - 1)
            .max()
    }

    pub fn is_face(&self, s: VertexSet) -> bool {
        self.facets.iter().any(|f| s.is_subset_of(*f))
    }

    pub fn is_pure(&self) -> bool {
        match self.facets.first() {
            None => true,
            Some(f) => {
                let c = f.len();
                self.facets.iter().all(|g| g.len() == c)
            }
        }
    }

    /// The cached face index, materializing it if needed. Fails without
    /// materializing past `cap` faces.
    pub fn face_index(&self, cap: u64) -> Result<Arc<FaceIndex>> {
        if let Some(fi) = self.index.get() {
            if fi.total > cap {
                return Err(Error::FaceCapExceeded { faces: fi.total, cap });
            }
            return Ok(fi.clone());
        }
        let fi = Arc::new(self.build_face_index(cap)?);
        let _ = self.index.set(fi);
        Ok(self.index.get().expect("just set").clone())
    }

    fn build_face_index(&self, cap: u64) -> Result<FaceIndex> {
        if self.is_void() {
            return Ok(FaceIndex { by_card: Vec::new(), total: 0 });
        }
        let max_card = self.facets.iter().map(|f| f.len()).max().unwrap_or(0);
        let mut by_card: Vec<Vec<VertexSet>> = vec![Vec::new(); max_card + 1];
        let mut total: u64 = 0;
        let mut level: HashSet<VertexSet> =
            self.facets.iter().copied().filter(|f| f.len() == max_card).collect();
        for c in (0..=max_card).rev() {
            total += level.len() as u64;
            if total > cap {
                return Err(Error::FaceCapExceeded { faces: total, cap });
            }
            let mut sorted: Vec<VertexSet> = level.iter().copied().collect();
            sorted.sort_unstable();
            let mut next: HashSet<VertexSet> = HashSet::with_capacity(level.len());
            if c > 0 {
                for &f in &level {
                    for v in f.iter() {
                        next.insert(f.without(v));
                    }
                }
                for &f in &self.facets {
                    if f.len() == c - 1 {
                        next.insert(f);
                    }
                }
            }
            by_card[c] = sorted;
            level = next;
        }
        Ok(FaceIndex { by_card, total })
    }

    pub fn face_count(&self, cap: u64) -> Result<u64> {
        Ok(self.face_index(cap)?.total)
    }

    /// Faces of dimension `d` (so cardinality `d + 1`), ascending by bitmask.
    pub fn faces(&self, d: i64, cap: u64) -> Result<Vec<VertexSet>> {
        if self.is_void() {
            return Err(Error::VoidComplex("faces"));
        }
        let fi = self.face_index(cap)?;
        let c = d + 1;
        if c < 0 || c as usize >= fi.by_card.len() {
            return Ok(Vec::new());
        }
        Ok(fi.by_card[c as usize].clone())
    }

    /// Face counts by cardinality, starting with the empty face: the
    /// boundary of a triangle has f-vector (1, 3, 3).
    pub fn f_vector(&self, cap: u64) -> Result<Vec<u64>> {
        Ok(self.face_index(cap)?.f_vector())
    }

    /// The ridges (faces one dimension below the top) with the number of
    /// facets containing each, ascending by bitmask.
    pub fn ridges_with_facet_counts(&self) -> Result<Vec<(VertexSet, usize)>> {
        if self.is_void() {
            return Err(Error::VoidComplex("ridges"));
        }
        let top = self.facets.iter().map(|f| f.len()).max().unwrap_or(0);
        if top == 0 {
            return Ok(Vec::new());
        }
        let mut ridges: HashSet<VertexSet> = HashSet::new();
        for &f in &self.facets {
            if f.len() == top {
                for v in f.iter() {
                    ridges.insert(f.without(v));
                }
            } else if f.len() == top - 1 {
                ridges.insert(f);
            }
        }
        let mut out: Vec<(VertexSet, usize)> = ridges
            .into_iter()
            .map(|r| {
                let count = self.facets.iter().filter(|f| r.is_subset_of(**f)).count();
                (r, count)
            })
            .collect();
        out.sort_unstable();
        Ok(out)
    }

    /// The link of a face: everything joinable with it, with the face
    /// removed. Rejects non-faces.
    pub fn link(&self, sigma: VertexSet) -> Result<SimplicialComplex> {
        if !self.is_face(sigma) {
            return Err(Error::NotAFace(sigma));
        }
        let cands = self
            .facets
            .iter()
            .filter(|f| sigma.is_subset_of(**f))
            .map(|f| *f - sigma)
            .collect();
        from_facets(self.ground, cands)
    }

    /// The closed star: all faces whose union with `sigma` is a face. The
    /// star of a non-face is the void complex.
    pub fn star(&self, sigma: VertexSet) -> SimplicialComplex {
        let cands = self
            .facets
            .iter()
            .copied()
            .filter(|f| sigma.is_subset_of(*f))
            .collect();
        from_facets(self.ground, cands).expect("facets stay in ground")
    }

    /// The deletion: all faces not containing `sigma`. Deleting the empty
    /// set removes every face, leaving the void complex.
    pub fn deletion(&self, sigma: VertexSet) -> SimplicialComplex {
        if sigma.is_empty() {
            return from_facets(self.ground, Vec::new()).expect("void fits any ground");
        }
        let mut cands = Vec::new();
        for &f in &self.facets {
            if !sigma.is_subset_of(f) {
                cands.push(f);
            } else {
                for v in sigma.iter() {
                    cands.push(f.without(v));
                }
            }
        }
        from_facets(self.ground, cands).expect("facets stay in ground")
    }

    /// Union of two complexes on the same ground set.
    pub fn union(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        if self.ground != other.ground {
            return Err(Error::GroundMismatch(self.ground, other.ground));
        }
        let mut cands = self.facets.clone();
        cands.extend_from_slice(&other.facets);
        from_facets(self.ground, cands)
    }

    /// Join, with the second ground set shifted past the first to keep the
    /// vertex sets disjoint.
    pub fn join(&self, other: &SimplicialComplex) -> Result<SimplicialComplex> {
        let ground = self.ground + other.ground;
        if ground > MAX_VERTICES {
            return Err(Error::TooManyVertices(ground, MAX_VERTICES));
        }
        let mut cands = Vec::with_capacity(self.facets.len() * other.facets.len());
        for &f in &self.facets {
            for &g in &other.facets {
                cands.push(f | g.shifted(self.ground));
            }
        }
        from_facets(ground, cands)
    }

    /// Cone with a fresh apex (the new vertex `n`).
    pub fn cone(&self) -> Result<SimplicialComplex> {
        let point = from_facets(1, vec![VertexSet::singleton(0)])?;
        self.join(&point)
    }

    /// Suspension: join with two fresh points (`n` and `n + 1`).
    pub fn suspension(&self) -> Result<SimplicialComplex> {
        let two = from_facets(2, vec![VertexSet::singleton(0), VertexSet::singleton(1)])?;
        self.join(&two)
    }

    /// The d-skeleton: all faces of dimension at most `d`. Facets of lower
    /// dimension survive unchanged.
    pub fn skeleton(&self, d: i64) -> Result<SimplicialComplex> {
        if d < -1 {
            return Err(Error::BadSkeletonDim(d));
        }
        if self.is_void() {
            return from_facets(self.ground, Vec::new());
        }
        if d == -1 {
            return from_facets(self.ground, vec![VertexSet::EMPTY]);
        }
        let keep = (d + 1) as usize;
        let mut cands = Vec::new();
        for &f in &self.facets {
            if f.len() <= keep {
                cands.push(f);
            } else {
                subsets_of_size(f, keep, &mut cands);
            }
        }
        from_facets(self.ground, cands)
    }

    /// Combinatorial Alexander dual: the faces of the output are exactly
    /// the complements of the non-faces of the input. The dual of the void
    /// complex is the full simplex and vice versa.
    pub fn alexander_dual(&self) -> SimplicialComplex {
        // facets of the dual = complements of the minimal non-faces, and
        // the minimal non-faces are the minimal transversals of the facet
        // complements
        let edges: Vec<VertexSet> = self
            .facets
            .iter()
            .map(|f| f.complement_in(self.ground))
            .collect();
        if edges.iter().any(|e| e.is_empty()) {
            // the full simplex is a facet: no non-faces at all
            return from_facets(self.ground, Vec::new()).expect("void fits");
        }
        let mut transversals = Vec::new();
        minimal_transversals(&edges, &mut transversals);
        let cands = transversals
            .into_iter()
            .map(|t| t.complement_in(self.ground))
            .collect();
        from_facets(self.ground, cands).expect("complements stay in ground")
    }
}

fn subsets_of_size(f: VertexSet, k: usize, out: &mut Vec<VertexSet>) {
    fn rec(verts: &[usize], start: usize, cur: VertexSet, left: usize, out: &mut Vec<VertexSet>) {
        if left == 0 {
            out.push(cur);
            return;
        }
        for i in start..=verts.len() - left {
            rec(verts, i + 1, cur.with(verts[i]), left - 1, out);
        }
    }
    let verts: Vec<usize> = f.iter().collect();
    rec(&verts, 0, VertexSet::EMPTY, k, out);
}

/// All minimal hitting sets of the given edge family, by branching on the
/// first unhit edge. Intended for the small grounds the dual is used on.
fn minimal_transversals(edges: &[VertexSet], out: &mut Vec<VertexSet>) {
    let mut seen: HashSet<VertexSet> = HashSet::new();
    fn is_minimal(h: VertexSet, edges: &[VertexSet]) -> bool {
        h.iter().all(|v| edges.iter().any(|e| (*e & h) == VertexSet::singleton(v)))
    }
    fn rec(
        chosen: VertexSet,
        edges: &[VertexSet],
        seen: &mut HashSet<VertexSet>,
        out: &mut Vec<VertexSet>,
    ) {
        match edges.iter().find(|e| !e.intersects(chosen)) {
            None => {
                if is_minimal(chosen, edges) && seen.insert(chosen) {
                    out.push(chosen);
                }
            }
            Some(e) => {
                for v in e.iter() {
                    rec(chosen.with(v), edges, seen, out);
                }
            }
        }
    }
    rec(VertexSet::EMPTY, edges, &mut seen, out);
    out.sort_unstable();
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{family, Family};
    use crate::testutil::{example_delta3_facets, example_graph, vs};

    #[test]
    fn from_facets_normalizes() {
        let c = from_facets(4, vec![vs([0, 1]), vs([0])]).unwrap();
        assert_eq!(c.facets(), &[vs([0, 1])]);
        let void = from_facets(3, vec![]).unwrap();
        assert_eq!(void.kind(), Kind::Void);
        assert_eq!(void.dimension(), None);
        let empty = from_facets(3, vec![VertexSet::EMPTY]).unwrap();
        assert_eq!(empty.kind(), Kind::EmptyFace);
        assert_eq!(empty.dimension(), Some(-1));
        assert!(from_facets(2, vec![vs([5])]).is_err());
    }

    #[test]
    fn example_complex_is_pure_2_dimensional() {
        let c = from_facets(6, example_delta3_facets()).unwrap();
        assert_eq!(c.facets().len(), 5);
        assert!(c.is_pure());
        assert_eq!(c.dimension(), Some(2));
    }

    #[test]
    fn ridge_bd_lies_in_four_facets() {
        // brute force: count the listed facets containing {b, d}
        let facets = example_delta3_facets();
        let bd = vs([1, 3]);
        let expected = facets.iter().filter(|f| bd.is_subset_of(**f)).count();
        assert_eq!(expected, 4);

        let c = from_facets(6, facets).unwrap();
        let ridges = c.ridges_with_facet_counts().unwrap();
        let (_, count) = ridges.iter().find(|(r, _)| *r == bd).unwrap();
        assert_eq!(*count, 4);
    }

    #[test]
    fn f_vector_of_triangle_boundary() {
        let c = simplex(3).skeleton(1).unwrap();
        assert_eq!(c.f_vector(1 << 20).unwrap(), vec![1, 3, 3]);
        assert_eq!(c.face_count(1 << 20).unwrap(), 7);
        assert!(matches!(
            from_facets(3, vec![]).unwrap().faces(0, 1 << 20),
            Err(Error::VoidComplex(_))
        ));
    }

    #[test]
    fn face_cap_is_enforced() {
        let c = simplex(10);
        match c.face_index(100) {
            Err(Error::FaceCapExceeded { faces, cap }) => {
                assert!(faces > 100 && cap == 100);
            }
            other => panic!("expected cap error, got {other:?}"),
        }
        assert_eq!(c.face_count(1 << 12).unwrap(), 1 << 10);
    }

    #[test]
    fn star_deletion_link_identities() {
        // del(star/deletion split) and link = star intersect deletion, at
        // the face level, for every vertex of a few complexes
        let complexes = [
            from_facets(6, example_delta3_facets()).unwrap(),
            simplex(4).skeleton(2).unwrap(),
            clique_complex(&family(Family::Cycle(5)).unwrap()),
        ];
        let cap = 1 << 16;
        for c in &complexes {
            for v in 0..c.ground() {
                let sv = VertexSet::singleton(v);
                if !c.is_face(sv) {
                    continue;
                }
                let star = c.star(sv);
                let deletion = c.deletion(sv);
                let union = star.union(&deletion).unwrap();
                assert_eq!(&union, c, "star/deletion union broke at v={v}");

                let link = c.link(sv).unwrap();
                // link faces = star faces that avoid v and stay faces of deletion
                let mut expected: Vec<VertexSet> = Vec::new();
                for d in -1..=c.dimension().unwrap() {
                    for f in c.faces(d, cap).unwrap() {
                        if star.is_face(f) && deletion.is_face(f) {
                            expected.push(f);
                        }
                    }
                }
                for f in &expected {
                    assert!(link.is_face(*f));
                }
                let total: u64 = link.face_count(cap).unwrap();
                assert_eq!(total, expected.len() as u64);
            }
        }
    }

    #[test]
    fn star_is_join_of_simplex_and_link() {
        let c = from_facets(6, example_delta3_facets()).unwrap();
        let sigma = vs([1, 3]);
        let star = c.star(sigma);
        let link = c.link(sigma).unwrap();
        // join of the simplex on sigma with the link, mapped back to the
        // original labels: facets of star = sigma union facets of link
        let rebuilt: Vec<VertexSet> = link.facets().iter().map(|f| *f | sigma).collect();
        assert_eq!(star.facets(), normalize_facets(rebuilt).as_slice());
    }

    #[test]
    fn deletion_of_empty_is_void() {
        let c = simplex(3);
        assert_eq!(c.deletion(VertexSet::EMPTY).kind(), Kind::Void);
    }

    #[test]
    fn star_is_contractible_cone() {
        let c = from_facets(6, example_delta3_facets()).unwrap();
        let star = c.star(VertexSet::singleton(1));
        // every facet of the star contains the vertex, so it is a cone
        assert!(star.facets().iter().all(|f| f.contains(1)));
        // reduced Euler characteristic of a cone is 0
        assert_eq!(star.face_index(1 << 16).unwrap().euler_reduced(), 0);
    }

    #[test]
    fn join_cone_suspension() {
        // suspension of two points: a four-cycle of edges
        let two_points = from_facets(2, vec![vs([0]), vs([1])]).unwrap();
        let susp = two_points.suspension().unwrap();
        let mut expected = vec![vs([0, 2]), vs([1, 2]), vs([0, 3]), vs([1, 3])];
        expected.sort_unstable();
        assert_eq!(susp.facets(), expected.as_slice());
        let cone = from_facets(6, example_delta3_facets()).unwrap().cone().unwrap();
        assert_eq!(cone.face_index(1 << 16).unwrap().euler_reduced(), 0);
        // f-vector of a join is the convolution of the f-vectors
        let a = simplex(2);
        let b = simplex(3).skeleton(1).unwrap();
        let j = a.join(&b).unwrap();
        let (fa, fb, fj) = (
            a.f_vector(1 << 16).unwrap(),
            b.f_vector(1 << 16).unwrap(),
            j.f_vector(1 << 16).unwrap(),
        );
        for (c, &val) in fj.iter().enumerate() {
            let conv: u64 = (0..=c)
                .map(|i| {
                    fa.get(i).copied().unwrap_or(0) * fb.get(c - i).copied().unwrap_or(0)
                })
                .sum();
            assert_eq!(val, conv, "f-vector convolution broke at card {c}");
        }
    }

    #[test]
    fn skeleton_of_simplex() {
        let skel = simplex(5).skeleton(2).unwrap();
        assert_eq!(skel.facets().len(), 10); // C(5,3)
        assert!(skel.is_pure());
        assert_eq!(skel.dimension(), Some(2));
        assert!(simplex(3).skeleton(-2).is_err());
        // facets below the cut survive unchanged
        let mixed = from_facets(5, vec![vs([0, 1, 2, 3]), vs([4])]).unwrap();
        let skel = mixed.skeleton(1).unwrap();
        assert!(skel.facets().contains(&vs([4])));
        assert_eq!(skel.facets().iter().filter(|f| f.len() == 2).count(), 6);
    }

    #[test]
    fn alexander_dual_corners() {
        let void = from_facets(3, vec![]).unwrap();
        assert_eq!(void.alexander_dual(), simplex(3));
        assert_eq!(simplex(3).alexander_dual().kind(), Kind::Void);
        // dual of the empty-face complex: boundary of the simplex
        let empty = from_facets(3, vec![VertexSet::EMPTY]).unwrap();
        assert_eq!(empty.alexander_dual(), simplex(3).skeleton(1).unwrap());
    }

    #[test]
    fn alexander_dual_is_involution_small() {
        // all complexes generated by up to 3 random-ish facets on n <= 5,
        // plus corner cases, via exhaustive facet triples on a fixed pool
        let pool = [vs([0, 1]), vs([2, 3]), vs([0, 2, 4]), vs([1, 4]), vs([3])];
        for i in 0..pool.len() {
            for j in i..pool.len() {
                for k in j..pool.len() {
                    let c = from_facets(5, vec![pool[i], pool[j], pool[k]]).unwrap();
                    let dd = c.alexander_dual().alexander_dual();
                    assert_eq!(dd, c, "dual-dual broke on {c:?}");
                }
            }
        }
    }

    #[test]
    fn dual_faces_are_complements_of_nonfaces() {
        let c = from_facets(4, vec![vs([0, 1]), vs([1, 2]), vs([3])]).unwrap();
        let d = c.alexander_dual();
        for bits in 0..1u64 << 4 {
            let s = VertexSet::from_bits(bits);
            assert_eq!(d.is_face(s), !c.is_face(s.complement_in(4)), "at {s}");
        }
    }

    #[test]
    fn clique_complexes() {
        let k4 = clique_complex(&family(Family::Complete(4)).unwrap());
        assert_eq!(k4.facets(), &[vs([0, 1, 2, 3])]);
        let c5 = clique_complex(&family(Family::Cycle(5)).unwrap());
        assert_eq!(c5.facets().len(), 5);
        assert!(c5.is_pure());
        assert_eq!(c5.dimension(), Some(1));

        // brute-force clique enumeration oracle on the example graph
        let g = example_graph();
        let cc = clique_complex(&g);
        let mut maximal = Vec::new();
        for bits in 0..1u64 << 6 {
            let s = VertexSet::from_bits(bits);
            if !g.is_clique(s) {
                continue;
            }
            let extendable = (0..6)
                .any(|v| !s.contains(v) && g.is_clique(s.with(v)));
            if !extendable {
                maximal.push(s);
            }
        }
        maximal.sort_unstable();
        assert_eq!(cc.facets(), maximal.as_slice());
        assert_eq!(cc.facets().len(), 6); // the six edges; the graph is triangle-free
    }

    #[test]
    fn antichain_invariant_random_inputs() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let n = rng.gen_range(1..=6);
            let m = rng.gen_range(0..=8);
            let cands: Vec<VertexSet> = (0..m)
                .map(|_| VertexSet::from_bits(rng.gen_range(0..1u64 << n)))
                .collect();
            let c = from_facets(n, cands).unwrap();
            for (i, a) in c.facets().iter().enumerate() {
                for (j, b) in c.facets().iter().enumerate() {
                    if i != j {
                        assert!(!a.is_subset_of(*b), "antichain broken: {a} in {b}");
                    }
                }
            }
        }
    }
}
