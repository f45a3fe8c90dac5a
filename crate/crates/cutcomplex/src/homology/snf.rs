//! Dense integer Smith normal form, the independent homology oracle.
//!
//! Works in i128 with checked arithmetic and reruns the offending matrix
//! with big integers if anything overflows (minimal-pivot selection keeps
//! entries small in practice, so the big path is a safety net). Besides the
//! ranks, the nontrivial invariant factors certify presence or absence of
//! torsion, which the modular Betti path cannot see.

use num::{BigInt, Signed, Zero};

use crate::complex::SimplicialComplex;
use crate::error::Result;
use crate::SNF_FACE_CAP;

use super::{boundary_matrix, BettiReport};

trait SnfInt: Clone + PartialEq + Ord {
    fn is_zero(&self) -> bool;
    fn abs(&self) -> Self;
    fn checked_mul(&self, o: &Self) -> Option<Self>;
    fn checked_sub(&self, o: &Self) -> Option<Self>;
    fn div_trunc(&self, o: &Self) -> Self;
    fn rem_trunc(&self, o: &Self) -> Self;
    fn from_sign(sign: i8) -> Self;
    fn to_u128_abs(&self) -> Option<u128>;
}

impl SnfInt for i128 {
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn abs(&self) -> Self {
        i128::abs(*self)
    }
    fn checked_mul(&self, o: &Self) -> Option<Self> {
        i128::checked_mul(*self, *o)
    }
    fn checked_sub(&self, o: &Self) -> Option<Self> {
        i128::checked_sub(*self, *o)
    }
    fn div_trunc(&self, o: &Self) -> Self {
        self / o
    }
    fn rem_trunc(&self, o: &Self) -> Self {
        self % o
    }
    fn from_sign(sign: i8) -> Self {
        sign as i128
    }
    fn to_u128_abs(&self) -> Option<u128> {
        Some(self.unsigned_abs())
    }
}

impl SnfInt for BigInt {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn abs(&self) -> Self {
        Signed::abs(self)
    }
    fn checked_mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn checked_sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn div_trunc(&self, o: &Self) -> Self {
        self / o
    }
    fn rem_trunc(&self, o: &Self) -> Self {
        self % o
    }
    fn from_sign(sign: i8) -> Self {
        BigInt::from(sign)
    }
    fn to_u128_abs(&self) -> Option<u128> {
        u128::try_from(Signed::abs(self)).ok()
    }
}

struct Overflow;

/// Diagonal of the Smith normal form (up to sign, unsorted divisibility is
/// fixed at the end). Rows x cols dense.
fn snf_diagonal<T: SnfInt>(mut m: Vec<Vec<T>>) -> std::result::Result<Vec<T>, Overflow> {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut diag = Vec::new();
    let mut t = 0usize;
    'outer: while t < rows && t < cols {
        // smallest nonzero entry in the remaining submatrix becomes pivot
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !m[i][j].is_zero()
                    && best.is_none_or(|(bi, bj)| m[i][j].abs() < m[bi][bj].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else {
            break;
        };
        m.swap(t, bi);
        for row in m.iter_mut() {
            row.swap(t, bj);
        }
        // clear the pivot row and column; each pass either finishes or
        // strictly shrinks the pivot
        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if m[i][t].is_zero() {
                    continue;
                }
                let q = m[i][t].div_trunc(&m[t][t]);
                if !q.is_zero() {
                    for j in t..cols {
                        let prod = m[t][j].checked_mul(&q).ok_or(Overflow)?;
                        m[i][j] = m[i][j].checked_sub(&prod).ok_or(Overflow)?;
                    }
                }
                if !m[i][t].is_zero() {
                    // remainder is smaller than the pivot: promote it
                    m.swap(t, i);
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if m[t][j].is_zero() {
                    continue;
                }
                let q = m[t][j].div_trunc(&m[t][t]);
                if !q.is_zero() {
                    for row in m.iter_mut().skip(t) {
                        let prod = row[t].checked_mul(&q).ok_or(Overflow)?;
                        row[j] = row[j].checked_sub(&prod).ok_or(Overflow)?;
                    }
                }
                if !m[t][j].is_zero() {
                    for row in m.iter_mut() {
                        row.swap(t, j);
                    }
                    dirty = true;
                }
            }
            if !dirty {
                break;
            }
        }
        // divisibility: the pivot must divide everything that remains
        for i in t + 1..rows {
            for j in t + 1..cols {
                if !m[i][j].rem_trunc(&m[t][t]).is_zero() {
                    // fold row i into row t and redo this pivot
                    for jj in t..cols {
                        let v = m[i][jj].clone();
                        m[t][jj] = m[t][jj].checked_sub(&v.checked_mul(&T::from_sign(-1)).ok_or(Overflow)?).ok_or(Overflow)?;
                    }
                    continue 'outer;
                }
            }
        }
        diag.push(m[t][t].abs());
        t += 1;
    }
    Ok(diag)
}

fn snf_from_sparse(rows: usize, entries: &[Vec<(u32, i8)>]) -> Vec<u128> {
    let build = || {
        let mut m = vec![vec![0i128; entries.len()]; rows];
        for (ci, col) in entries.iter().enumerate() {
            for &(r, s) in col {
                m[r as usize][ci] = s as i128;
            }
        }
        m
    };
    match snf_diagonal(build()) {
        Ok(diag) => diag.into_iter().map(|d| d.to_u128_abs().unwrap()).collect(),
        Err(Overflow) => {
            let mut m = vec![vec![<BigInt as Zero>::zero(); entries.len()]; rows];
            for (ci, col) in entries.iter().enumerate() {
                for &(r, s) in col {
                    m[r as usize][ci] = BigInt::from(s);
                }
            }
            snf_diagonal(m)
                .ok()
                .expect("BigInt arithmetic cannot overflow")
                .into_iter()
                .map(|d| d.to_u128_abs().expect("invariant factor fits in u128"))
                .collect()
        }
    }
}

fn prime_factors(mut x: u128) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d: u128 = 2;
    while d * d <= x {
        if x % d == 0 {
            out.push(d as u64);
            while x % d == 0 {
                x /= d;
            }
        }
        d += 1;
    }
    if x > 1 {
        out.push(u64::try_from(x).expect("torsion primes stay in u64"));
    }
    out
}

/// Dense integer Smith-normal-form homology: same reduced Betti numbers as
/// [`super::betti`], plus a torsion verdict. Capped at 2^16 faces.
pub fn homology_oracle_snf(c: &SimplicialComplex) -> Result<BettiReport> {
    if c.is_void() {
        let mut r = super::void_report();
        r.torsion_checked = true;
        return Ok(r);
    }
    let fi = c.face_index(SNF_FACE_CAP)?;
    let max = fi.max_card();
    let mut ranks = vec![0u64; max + 1];
    let mut torsion_primes = Vec::new();
    for card in 1..=max {
        let bm = boundary_matrix(&fi, card);
        let diag = snf_from_sparse(bm.rows.len(), &bm.entries);
        ranks[card] = diag.iter().filter(|&&d| d != 0).count() as u64;
        for &d in &diag {
            if d > 1 {
                torsion_primes.extend(prime_factors(d));
            }
        }
    }
    torsion_primes.sort_unstable();
    torsion_primes.dedup();
    let mut report = super::report_from_ranks(&fi, &ranks);
    report.torsion_checked = true;
    report.torsion_found = !torsion_primes.is_empty();
    report.torsion_primes = torsion_primes;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::{from_facets, simplex};
    use crate::cutgen::total_cut_complex;
    use crate::graph::{family, make_graph, Family};
    use crate::homology::{betti_with_cap, ranks_all_levels, FpField, PRIME_A};
    use crate::testutil::vs;

    #[test]
    fn snf_diagonal_small_matrices() {
        // [[2, 4], [6, 8]]: SNF diag (2, 4) since det = -8, gcd = 2
        let m = vec![vec![2i128, 4], vec![6, 8]];
        let diag = snf_diagonal(m).ok().unwrap();
        assert_eq!(diag, vec![2, 4]);
        // identity-ish
        let m = vec![vec![1i128, 0], vec![0, 5]];
        assert_eq!(snf_diagonal(m).ok().unwrap(), vec![1, 5]);
        // zero matrix
        let m = vec![vec![0i128; 3]; 2];
        assert!(snf_diagonal(m).ok().unwrap().is_empty());
    }

    #[test]
    fn triangle_boundary_sphere() {
        let c = simplex(3).skeleton(1).unwrap();
        let r = homology_oracle_snf(&c).unwrap();
        assert_eq!(r.nonzero(), vec![(1, 1)]);
        assert!(!r.torsion_found && r.torsion_checked);
    }

    #[test]
    fn cycle_complex_single_sphere_no_torsion() {
        let c6 = family(Family::Cycle(6)).unwrap();
        let r = homology_oracle_snf(&total_cut_complex(&c6, 2).unwrap()).unwrap();
        assert_eq!(r.nonzero(), vec![(2, 1)]);
        assert!(!r.torsion_found);
    }

    #[test]
    fn projective_plane_has_2_torsion() {
        // minimal 6-vertex triangulation of the real projective plane:
        // rational Betti numbers vanish, torsion is exactly Z/2 in dim 1
        let facets = vec![
            vs([0, 1, 2]),
            vs([0, 1, 3]),
            vs([0, 2, 4]),
            vs([0, 3, 5]),
            vs([0, 4, 5]),
            vs([1, 2, 5]),
            vs([1, 3, 4]),
            vs([1, 4, 5]),
            vs([2, 3, 4]),
            vs([2, 3, 5]),
        ];
        let c = from_facets(6, facets).unwrap();
        let r = homology_oracle_snf(&c).unwrap();
        assert!(r.all_zero(), "rational homology of RP^2 vanishes: {:?}", r.nonzero());
        assert!(r.torsion_found);
        assert_eq!(r.torsion_primes, vec![2]);
        // the modular path agrees on the Betti side
        let m = betti_with_cap(&c, 1 << 16).unwrap();
        assert_eq!(m.betti, r.betti);
    }

    #[test]
    fn oracle_equals_modular_on_random_complexes() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(20_240_501);
        for round in 0..100 {
            let n = rng.gen_range(1..=7);
            let nfacets = rng.gen_range(1..=6);
            let facets: Vec<_> = (0..nfacets)
                .map(|_| crate::vset::VertexSet::from_bits(rng.gen_range(0..1u64 << n)))
                .collect();
            let c = from_facets(n, facets).unwrap();
            let snf = homology_oracle_snf(&c).unwrap();
            let modular = betti_with_cap(&c, 1 << 16).unwrap();
            assert_eq!(snf.betti, modular.betti, "round {round}: {c:?}");
            assert!(!snf.torsion_found, "round {round}: unexpected torsion");
        }
    }

    #[test]
    fn oracle_equals_modular_on_graph_complexes() {
        let graphs = [
            family(Family::Prism(3)).unwrap(),
            family(Family::CompleteBipartite(2, 4)).unwrap(),
            family(Family::SquaredCycle(7)).unwrap(),
            make_graph(6, &[(3, 0), (0, 1), (1, 2), (2, 3), (3, 4), (3, 5)]).unwrap(),
        ];
        for g in &graphs {
            for k in 1..=g.independence_number() {
                let c = total_cut_complex(g, k).unwrap();
                let snf = homology_oracle_snf(&c).unwrap();
                let fi = c.face_index(1 << 16).unwrap();
                let modular = ranks_all_levels(&fi, &FpField::new(PRIME_A));
                let mr = super::super::report_from_ranks(&fi, &modular);
                assert_eq!(snf.betti, mr.betti, "{g:?} k={k}");
                assert!(!snf.torsion_found);
            }
        }
    }
}
