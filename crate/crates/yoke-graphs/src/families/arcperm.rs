//! Arc permutations and the bijection f onto Y(n, n-2).
//!
//! A permutation of {1..n} is an arc permutation when every prefix forms a
//! cyclic interval in Z_n (with 0 represented by n). The map f sends pi to
//! the vertex with left bucket pi(1) - 1 and bit i = 1 exactly when
//! (pi(i+1) - 1) mod n already lies in the prefix interval, i.e. when the
//! interval grows at its upper end. Flips are right multiplications by
//! adjacent transpositions that stay inside the family.

use super::FamilyError;
use crate::params::GraphParams;
use crate::vertex::{GraphVertex, YokeVertex};
use serde::{Deserialize, Serialize};

/// An arc permutation in one-line notation over {1..n}.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ArcPermutation {
    pub n: u64,
    pub perm: Vec<u64>,
}

impl ArcPermutation {
    pub fn new(perm: Vec<u64>) -> Result<Self, FamilyError> {
        let n = perm.len() as u64;
        if n < 2 {
            return Err(FamilyError::OutOfRegime(n, 2));
        }
        if let Some(len) = arc_violation(&perm)? {
            return Err(FamilyError::NotArcPermutation(len));
        }
        Ok(ArcPermutation { n, perm })
    }

    /// Parse "3421576" (digits, n <= 9) or "3,4,2,1,5,7,6".
    pub fn parse(text: &str) -> Result<Self, FamilyError> {
        let t = text.trim();
        let perm: Vec<u64> = if t.contains(',') {
            t.split(',')
                .map(|x| x.trim().parse::<u64>().map_err(|_| FamilyError::NotAPermutation(vec![])))
                .collect::<Result<_, _>>()?
        } else {
            t.chars()
                .map(|c| c.to_digit(10).map(u64::from).ok_or(FamilyError::NotAPermutation(vec![])))
                .collect::<Result<_, _>>()?
        };
        ArcPermutation::new(perm)
    }
}

impl std::fmt::Display for ArcPermutation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.n <= 9 {
            for &x in &self.perm {
                write!(f, "{}", x)?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.perm.iter().map(|x| x.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

/// Returns the length of the first prefix that is not a cyclic interval,
/// or None when every prefix is one. Errors when the input is not a
/// permutation of 1..=n.
fn arc_violation(perm: &[u64]) -> Result<Option<usize>, FamilyError> {
    let n = perm.len() as u64;
    let mut seen = vec![false; n as usize];
    for &x in perm {
        if x < 1 || x > n || seen[(x - 1) as usize] {
            return Err(FamilyError::NotAPermutation(perm.to_vec()));
        }
        seen[(x - 1) as usize] = true;
    }
    // Grow the residue interval [lo, hi] (mod n); each new element must
    // extend one end.
    let mut lo = perm[0] % n;
    let mut hi = lo;
    for (i, &x) in perm.iter().enumerate().skip(1) {
        let r = x % n;
        if r == (hi + 1) % n {
            hi = r;
        } else if r == (lo + n - 1) % n {
            lo = r;
        } else {
            return Ok(Some(i + 1));
        }
    }
    Ok(None)
}

/// True iff the permutation of {1..n} is an arc permutation.
pub fn is_arc_permutation(perm: &[u64]) -> Result<bool, FamilyError> {
    Ok(arc_violation(perm)?.is_none())
}

/// f: arc permutations -> Y(n, n-2).
pub fn arcperm_to_yoke(pi: &ArcPermutation) -> Result<YokeVertex, FamilyError> {
    let n = pi.n;
    let params = GraphParams::new(n, n - 2).expect("n >= 2");
    let mut entries = Vec::with_capacity(n as usize - 1);
    entries.push(pi.perm[0] as i64 - 1);
    let mut in_prefix = vec![false; n as usize];
    in_prefix[(pi.perm[0] % n) as usize] = true;
    for &x in &pi.perm[1..n as usize - 1] {
        let r = (x % n) as usize;
        let below = ((x + n - 1) % n) as usize; // (x - 1) mod n
        entries.push(if in_prefix[below] { 1 } else { 0 });
        in_prefix[r] = true;
    }
    Ok(YokeVertex::new(params, &entries).expect("image is a valid vertex"))
}

/// Inverse of f: start at pi(1) = v_0 + 1 and extend the residue interval
/// at its upper end for bit 1, lower end for bit 0. The final element is
/// the one residue left over.
pub fn yoke_to_arcperm(v: &YokeVertex) -> Result<ArcPermutation, FamilyError> {
    let params = v.params();
    let n = params.n;
    if n < 2 || params.m != n - 2 {
        return Err(FamilyError::WrongGraph(
            format!("Y({},{})", params.n, params.m),
            n,
            n.saturating_sub(2),
        ));
    }
    let e = v.entries();
    let value_of = |residue: u64| if residue == 0 { n } else { residue };
    let first = e[0] as u64 + 1;
    let mut lo = first % n;
    let mut hi = lo;
    let mut perm = vec![first];
    for &bit in &e[1..=params.m as usize] {
        if bit == 1 {
            hi = (hi + 1) % n;
            perm.push(value_of(hi));
        } else {
            lo = (lo + n - 1) % n;
            perm.push(value_of(lo));
        }
    }
    perm.push(value_of((hi + 1) % n));
    ArcPermutation::new(perm)
}

/// All arc permutations of {1..n}: pick the first element, then repeatedly
/// extend the prefix interval at either end; the last element is forced.
pub fn arc_permutations(n: u64) -> Result<Vec<ArcPermutation>, FamilyError> {
    if n < 2 {
        return Err(FamilyError::OutOfRegime(n, 2));
    }
    let value_of = |residue: u64| if residue == 0 { n } else { residue };
    let mut out = Vec::new();
    for first in 1..=n {
        for bits in 0..(1u64 << (n - 2)) {
            let mut lo = first % n;
            let mut hi = lo;
            let mut perm = vec![first];
            for step in 0..n - 2 {
                if bits >> step & 1 == 1 {
                    hi = (hi + 1) % n;
                    perm.push(value_of(hi));
                } else {
                    lo = (lo + n - 1) % n;
                    perm.push(value_of(lo));
                }
            }
            perm.push(value_of((hi + 1) % n));
            out.push(ArcPermutation { n, perm });
        }
    }
    out.sort_by(|a, b| a.perm.cmp(&b.perm));
    out.dedup();
    Ok(out)
}

/// Native flips: right multiplication by an adjacent transposition
/// (swap of two neighboring one-line entries) that keeps the permutation
/// an arc permutation. Returned with the transposition position i
/// (1-based: positions i and i+1 are swapped).
pub fn arcperm_flips(pi: &ArcPermutation) -> Vec<(usize, ArcPermutation)> {
    let mut out = Vec::new();
    for i in 0..pi.perm.len() - 1 {
        let mut p = pi.perm.clone();
        p.swap(i, i + 1);
        if let Ok(q) = ArcPermutation::new(p) {
            out.push((i + 1, q));
        }
    }
    out
}
