//! Boundary-matrix ranks by left-to-right column reduction, generic over
//! the coefficient field.
//!
//! Faces are kept in ascending-bitmask (colexicographic) order, and levels
//! are processed from the top dimension down so that the pivot rows found
//! at one level clear columns at the level below: a cleared column is the
//! boundary of something already reduced and must vanish, so it is skipped
//! outright. On near-full skeleta (which total cut complexes are, away
//! from the top dimension) this leaves almost no arithmetic to do.

use std::collections::{HashMap, HashSet};

use num::rational::BigRational;
use num::{BigInt, One, Zero};

use crate::complex::FaceIndex;

use super::boundary_matrix;

/// Two fixed 62-bit primes for the modular rank computations.
pub const PRIME_A: u64 = 4_611_686_018_427_387_847;
pub const PRIME_B: u64 = 4_611_686_018_427_387_817;

pub trait Field {
    type El: Clone + PartialEq;
    fn from_sign(&self, sign: i8) -> Self::El;
    fn is_zero(&self, a: &Self::El) -> bool;
    fn inv(&self, a: &Self::El) -> Self::El;
    fn mul(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn sub(&self, a: &Self::El, b: &Self::El) -> Self::El;
    fn neg(&self, a: &Self::El) -> Self::El;
}

#[derive(Clone, Copy)]
pub struct FpField {
    p: u64,
}

impl FpField {
    pub fn new(p: u64) -> Self {
        FpField { p }
    }

    fn pow(&self, mut base: u64, mut exp: u64) -> u64 {
        let mut acc: u64 = 1;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = (acc as u128 * base as u128 % self.p as u128) as u64;
            }
            base = (base as u128 * base as u128 % self.p as u128) as u64;
            exp >>= 1;
        }
        acc
    }
}

impl Field for FpField {
    type El = u64;
    fn from_sign(&self, sign: i8) -> u64 {
        if sign >= 0 {
            1
        } else {
            self.p - 1
        }
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn inv(&self, a: &u64) -> u64 {
        self.pow(*a, self.p - 2)
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        (*a as u128 * *b as u128 % self.p as u128) as u64
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (*a + self.p - *b) % self.p
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - *a
        }
    }
}

/// Exact rational coefficients, for the fallback path.
pub struct RationalField;

impl Field for RationalField {
    type El = BigRational;
    fn from_sign(&self, sign: i8) -> BigRational {
        BigRational::from_integer(BigInt::from(sign))
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        BigRational::one() / a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
}

type Col<F> = Vec<(u32, F)>;

/// cur := cur - f * piv (rows ascending in both).
fn sub_mul<F: Field>(field: &F, cur: &Col<F::El>, piv: &Col<F::El>, f: &F::El) -> Col<F::El> {
    let mut out = Vec::with_capacity(cur.len() + piv.len());
    let (mut i, mut j) = (0, 0);
    while i < cur.len() && j < piv.len() {
        match cur[i].0.cmp(&piv[j].0) {
            std::cmp::Ordering::Less => {
                out.push(cur[i].clone());
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                out.push((piv[j].0, field.neg(&field.mul(f, &piv[j].1))));
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                let v = field.sub(&cur[i].1, &field.mul(f, &piv[j].1));
                if !field.is_zero(&v) {
                    out.push((cur[i].0, v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&cur[i..]);
    for (r, v) in &piv[j..] {
        out.push((*r, field.neg(&field.mul(f, v))));
    }
    out
}

/// Rank of one level's boundary matrix. Columns in `cleared` are skipped;
/// returns the rank together with the set of pivot rows (which clear the
/// level below). Stored pivot columns are normalized so their lowest entry
/// is 1.
fn reduce_level<F: Field>(
    field: &F,
    cols: &[Vec<(u32, i8)>],
    cleared: &HashSet<u32>,
) -> (u64, HashSet<u32>) {
    let mut pivots: HashMap<u32, Col<F::El>> = HashMap::new();
    let mut rank = 0u64;
    for (ci, raw) in cols.iter().enumerate() {
        if cleared.contains(&(ci as u32)) {
            continue;
        }
        let mut cur: Col<F::El> =
            raw.iter().map(|&(r, s)| (r, field.from_sign(s))).collect();
        loop {
            let Some((low_row, low_val)) = cur.last().cloned() else {
                break; // reduced to zero
            };
            match pivots.get(&low_row) {
                Some(piv) => {
                    cur = sub_mul(field, &cur, piv, &low_val);
                }
                None => {
                    // normalize so the low entry is 1, then store
                    let inv = field.inv(&low_val);
                    let normalized =
                        cur.iter().map(|(r, v)| (*r, field.mul(v, &inv))).collect();
                    pivots.insert(low_row, normalized);
                    rank += 1;
                    break;
                }
            }
        }
    }
    (rank, pivots.into_keys().collect())
}

/// Ranks of every boundary level of the face index: entry `c` is the rank
/// of the map from cardinality-c faces to cardinality-(c-1) faces (entry 1
/// is the augmentation; entry 0 is unused and zero).
pub fn ranks_all_levels<F: Field>(fi: &FaceIndex, field: &F) -> Vec<u64> {
    let max = fi.max_card();
    let mut ranks = vec![0u64; max + 1];
    let mut cleared: HashSet<u32> = HashSet::new();
    for card in (1..=max).rev() {
        let bm = boundary_matrix(fi, card);
        let (rank, pivot_rows) = reduce_level(field, &bm.entries, &cleared);
        ranks[card] = rank;
        cleared = pivot_rows;
    }
    ranks
}
