//! The dominance order on Z^k and on the box P_n x P_2^m.
//!
//! v is dominated by u when every prefix sum of v is at most the matching
//! prefix sum of u. The prefix-sum map chi is a poset isomorphism onto
//! (Z^k, <=) componentwise, which gives rank, meet, join and the
//! Hasse-diagram distance in closed form. The box P_n x P_2^m (first
//! coordinate in [0, n-1], the rest binary) is a sublattice; its Hasse
//! diagram is the yoke graph Y(n,m) minus the bucket wrap-around edges.

use crate::graph::{edge_list, enumerate_vertices};
use crate::params::{GraphParams, SizeError};
use crate::vertex::{GraphVertex, YokeVertex};
use serde::Serialize;
use std::collections::VecDeque;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DomError {
    #[error("vectors have different lengths: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("parameters outside the 2 <= m <= n regime: {0}")]
    OutOfRegime(GraphParams),
    #[error(transparent)]
    Size(#[from] SizeError),
}

/// Prefix sums: coordinate i of the output is v_0 + ... + v_i.
pub fn chi(v: &[i64]) -> Vec<i64> {
    let mut out = Vec::with_capacity(v.len());
    let mut acc = 0;
    for &x in v {
        acc += x;
        out.push(acc);
    }
    out
}

/// First differences; inverse of [`chi`].
pub fn chi_inv(v: &[i64]) -> Vec<i64> {
    let mut out = Vec::with_capacity(v.len());
    let mut prev = 0;
    for &x in v {
        out.push(x - prev);
        prev = x;
    }
    out
}

/// True iff v is dominated by u: every prefix sum of v is <= that of u.
pub fn dominates(u: &[i64], v: &[i64]) -> Result<bool, DomError> {
    if u.len() != v.len() {
        return Err(DomError::LengthMismatch(u.len(), v.len()));
    }
    let (mut su, mut sv) = (0i64, 0i64);
    for (&a, &b) in u.iter().zip(v) {
        su += a;
        sv += b;
        if sv > su {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Rank in the dominance order: the sum of all prefix sums.
pub fn rank_dom(v: &[i64]) -> i64 {
    chi(v).iter().sum()
}

/// Distance in the Hasse diagram of (Z^k, dominance): the L1 distance of
/// the prefix-sum vectors.
pub fn hasse_distance_dom(u: &[i64], v: &[i64]) -> Result<u64, DomError> {
    if u.len() != v.len() {
        return Err(DomError::LengthMismatch(u.len(), v.len()));
    }
    let (mut su, mut sv) = (0i64, 0i64);
    let mut total = 0u64;
    for (&a, &b) in u.iter().zip(v) {
        su += a;
        sv += b;
        total += su.abs_diff(sv);
    }
    Ok(total)
}

/// Meet: first differences of the pointwise minimum of prefix sums.
pub fn meet_dom(u: &[i64], v: &[i64]) -> Result<Vec<i64>, DomError> {
    if u.len() != v.len() {
        return Err(DomError::LengthMismatch(u.len(), v.len()));
    }
    let mins: Vec<i64> = chi(u).iter().zip(chi(v)).map(|(&a, b)| a.min(b)).collect();
    Ok(chi_inv(&mins))
}

/// Join: first differences of the pointwise maximum of prefix sums.
pub fn join_dom(u: &[i64], v: &[i64]) -> Result<Vec<i64>, DomError> {
    if u.len() != v.len() {
        return Err(DomError::LengthMismatch(u.len(), v.len()));
    }
    let maxs: Vec<i64> = chi(u).iter().zip(chi(v)).map(|(&a, b)| a.max(b)).collect();
    Ok(chi_inv(&maxs))
}

/// Check the modular-lattice distance identity
/// d_H(u,v) = rank(u join v) - rank(u meet v).
pub fn modular_distance_identity_check(u: &[i64], v: &[i64]) -> Result<bool, DomError> {
    let lhs = hasse_distance_dom(u, v)? as i64;
    let rhs = rank_dom(&join_dom(u, v)?) - rank_dom(&meet_dom(u, v)?);
    Ok(lhs == rhs)
}

/// BFS oracle for the Hasse-diagram distance: searches the cover graph of
/// (Z^k, dominance) inside a bounding box of prefix-sum space. The box is
/// the componentwise min/max of the two prefix-sum vectors padded by `pad`;
/// cover moves change a single prefix sum by one, so geodesics never need
/// to leave the unpadded box.
pub fn hasse_distance_bfs_oracle(u: &[i64], v: &[i64], pad: i64) -> Result<u64, DomError> {
    if u.len() != v.len() {
        return Err(DomError::LengthMismatch(u.len(), v.len()));
    }
    let a = chi(u);
    let b = chi(v);
    let k = a.len();
    let lo: Vec<i64> = a.iter().zip(&b).map(|(&x, &y)| x.min(y) - pad).collect();
    let hi: Vec<i64> = a.iter().zip(&b).map(|(&x, &y)| x.max(y) + pad).collect();
    let dims: Vec<i64> = lo.iter().zip(&hi).map(|(&l, &h)| h - l + 1).collect();
    let encode = |p: &[i64]| -> usize {
        let mut idx = 0usize;
        for i in 0..k {
            idx = idx * dims[i] as usize + (p[i] - lo[i]) as usize;
        }
        idx
    };
    let total: usize = dims.iter().map(|&d| d as usize).product();
    let mut dist = vec![u32::MAX; total];
    let mut queue = VecDeque::new();
    dist[encode(&a)] = 0;
    queue.push_back(a.clone());
    let target = encode(&b);
    if encode(&a) == target {
        return Ok(0);
    }
    while let Some(p) = queue.pop_front() {
        let dp = dist[encode(&p)];
        for i in 0..k {
            for step in [-1, 1] {
                let mut q = p.clone();
                q[i] += step;
                if q[i] < lo[i] || q[i] > hi[i] {
                    continue;
                }
                let e = encode(&q);
                if dist[e] == u32::MAX {
                    dist[e] = dp + 1;
                    if e == target {
                        return Ok((dp + 1) as u64);
                    }
                    queue.push_back(q);
                }
            }
        }
    }
    unreachable!("target is inside the box")
}

/// Membership of a box element in the distinguished intervals:
/// I0 = [0hat, (n-1,1,0,...,0)] has entry sum <= n, and
/// I1 = [(0,0,1,...,1), 1hat] has entry sum >= m-1. In the 2 <= m <= n
/// regime the two intervals cover the whole box.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum IntervalMembership {
    I0Only,
    I1Only,
    Both,
}

/// Classify the first m+1 entries of a yoke vertex (the box element obtained
/// by dropping the right bucket).
pub fn interval_membership(
    params: GraphParams,
    prefix: &[i64],
) -> Result<IntervalMembership, DomError> {
    let (n, m) = (params.n, params.m);
    if m < 2 || m > n {
        return Err(DomError::OutOfRegime(params));
    }
    if prefix.len() != m as usize + 1 {
        return Err(DomError::LengthMismatch(prefix.len(), m as usize + 1));
    }
    let sum: i64 = prefix.iter().sum();
    let in0 = sum <= n as i64;
    let in1 = sum >= m as i64 - 1;
    Ok(match (in0, in1) {
        (true, true) => IntervalMembership::Both,
        (true, false) => IntervalMembership::I0Only,
        (false, true) => IntervalMembership::I1Only,
        (false, false) => unreachable!("sum < m-1 implies sum <= n in the m <= n regime"),
    })
}

fn drop_bucket(v: &YokeVertex) -> Vec<i64> {
    let m = v.params().m as usize;
    v.entries()[..=m].to_vec()
}

/// The map f = tau . phi in m+1-entry form: (v_0, v_1, ..., v_m) goes to
/// (-(v_0+1) mod n, 1-v_1, ..., 1-v_m).
fn interval_swap(params: GraphParams, prefix: &[i64]) -> Vec<i64> {
    let mut out = Vec::with_capacity(prefix.len());
    out.push(params.reduce(-(prefix[0] + 1)));
    for &x in &prefix[1..] {
        out.push(1 - x);
    }
    out
}

/// Verify that f = tau . phi maps the subgraph of Y(n,m) induced by I0
/// bijectively and edge-preservingly onto the subgraph induced by I1
/// (vertices identified with their first m+1 entries).
pub fn interval_isomorphism_check(params: GraphParams, cap: u64) -> Result<bool, DomError> {
    let (n, m) = (params.n, params.m);
    if m < 2 || m > n {
        return Err(DomError::OutOfRegime(params));
    }
    let in0 = |p: &[i64]| p.iter().sum::<i64>() <= n as i64;
    let in1 = |p: &[i64]| p.iter().sum::<i64>() >= m as i64 - 1;

    let verts: Vec<YokeVertex> = enumerate_vertices(params, cap)?.collect();
    let prefixes: Vec<Vec<i64>> = verts.iter().map(drop_bucket).collect();

    // f restricted to I0 must be injective into I1, and f(I1) back in I0.
    let mut images = std::collections::HashSet::new();
    let mut i0_count = 0usize;
    let mut i1_count = 0usize;
    for p in &prefixes {
        if in1(p) {
            i1_count += 1;
        }
        if !in0(p) {
            continue;
        }
        i0_count += 1;
        let fp = interval_swap(params, p);
        if !in1(&fp) || !images.insert(fp) {
            return Ok(false);
        }
    }
    if i0_count != i1_count {
        return Ok(false);
    }

    // Edge preservation, both directions (f is involutive).
    let edges = edge_list::<YokeVertex>(params, cap)?;
    let index_of: std::collections::HashMap<Vec<i64>, usize> = prefixes
        .iter()
        .cloned()
        .enumerate()
        .map(|(i, p)| (p, i))
        .collect();
    let adj: std::collections::HashSet<(usize, usize)> = edges
        .iter()
        .map(|&(a, b, _)| (a as usize, b as usize))
        .collect();
    let is_edge = |a: usize, b: usize| adj.contains(&(a.min(b), a.max(b))) && a != b;
    for &(a, b, _) in &edges {
        let (pa, pb) = (&prefixes[a as usize], &prefixes[b as usize]);
        if in0(pa) && in0(pb) {
            let fa = index_of[&interval_swap(params, pa)];
            let fb = index_of[&interval_swap(params, pb)];
            if !is_edge(fa, fb) {
                return Ok(false);
            }
        }
        if in1(pa) && in1(pb) {
            let fa = index_of[&interval_swap(params, pa)];
            let fb = index_of[&interval_swap(params, pb)];
            if !is_edge(fa, fb) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Rank change along yoke edges: +-1 except on the 2^{m-1} bucket
/// wrap-around edges, where it is n(m+1) - 1. Returns Err on the first
/// violating edge, Ok(wrap_edge_count) otherwise.
pub fn rank_step_along_edges(params: GraphParams, cap: u64) -> Result<Result<u64, String>, DomError> {
    let (n, m) = (params.n, params.m);
    if m < 2 || m > n {
        return Err(DomError::OutOfRegime(params));
    }
    let verts: Vec<YokeVertex> = enumerate_vertices(params, cap)?.collect();
    let big = (n * (m + 1) - 1) as i64;
    let mut wraps = 0u64;
    for (a, b, _) in edge_list::<YokeVertex>(params, cap)? {
        let ra = rank_dom(&drop_bucket(&verts[a as usize]));
        let rb = rank_dom(&drop_bucket(&verts[b as usize]));
        let d = (ra - rb).abs();
        if d == big {
            wraps += 1;
        } else if d != 1 {
            return Ok(Err(format!(
                "edge {} -- {} changes rank by {}",
                verts[a as usize], verts[b as usize], d
            )));
        }
    }
    Ok(Ok(wraps))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::DEFAULT_VERTEX_CAP as CAP;

    #[test]
    fn chi_examples() {
        assert_eq!(chi(&[1, 2, 3]), vec![1, 3, 6]);
        assert_eq!(chi(&[1, -1, 0]), vec![1, 0, 0]);
        assert_eq!(chi_inv(&[1, 3, 6]), vec![1, 2, 3]);
        assert_eq!(chi_inv(&chi(&[4, -7, 2, 0])), vec![4, -7, 2, 0]);
    }

    #[test]
    fn dominates_examples() {
        assert!(dominates(&[1, 0], &[0, 1]).unwrap());
        assert!(dominates(&[1, -2], &[1, -2]).unwrap());
        assert!(!dominates(&[1, -2], &[-1, 2]).unwrap());
        assert!(!dominates(&[-1, 2], &[1, -2]).unwrap());
        assert!(dominates(&[1], &[1, 2]).is_err());
    }

    #[test]
    fn rank_examples() {
        // (n-1, 1, 0, ..., 0) of length m+1 has rank n(m+1) - 1.
        for (n, m) in [(3u64, 2u64), (5, 4), (2, 2)] {
            let mut v = vec![0i64; m as usize + 1];
            v[0] = n as i64 - 1;
            v[1] = 1;
            assert_eq!(rank_dom(&v), (n * (m + 1)) as i64 - 1);
        }
        assert_eq!(rank_dom(&[0, 0, 0]), 0);
        assert_eq!(rank_dom(&[1, 0, 0]), 3);
    }

    #[test]
    fn hasse_distance_examples() {
        assert_eq!(hasse_distance_dom(&[0, 0], &[1, -1]).unwrap(), 1);
        assert_eq!(hasse_distance_dom(&[3, -2], &[3, -2]).unwrap(), 0);
    }

    #[test]
    fn meet_join_examples() {
        assert_eq!(meet_dom(&[0, 1], &[1, 0]).unwrap(), vec![0, 1]);
        assert_eq!(join_dom(&[0, 1], &[1, 0]).unwrap(), vec![1, 0]);
        assert_eq!(meet_dom(&[1, -2, 1], &[1, -2, 1]).unwrap(), vec![1, -2, 1]);
        // Incomparable pair worked out through prefix sums.
        assert_eq!(meet_dom(&[1, -2, 1], &[-1, 2, -1]).unwrap(), vec![-1, 0, 1]);
        assert_eq!(join_dom(&[1, -2, 1], &[-1, 2, -1]).unwrap(), vec![1, 0, -1]);
    }

    #[test]
    fn meet_join_are_bounds() {
        let pairs = [
            (vec![1, -2, 1], vec![-1, 2, -1]),
            (vec![0, 3, -1], vec![2, -2, 2]),
            (vec![1, 1], vec![-1, 3]),
        ];
        for (u, v) in pairs {
            let meet = meet_dom(&u, &v).unwrap();
            let join = join_dom(&u, &v).unwrap();
            assert!(dominates(&u, &meet).unwrap());
            assert!(dominates(&v, &meet).unwrap());
            assert!(dominates(&join, &u).unwrap());
            assert!(dominates(&join, &v).unwrap());
            // Any w below both inside a small box is below the meet.
            let k = u.len();
            let mut stack = vec![Vec::<i64>::new()];
            while let Some(w) = stack.pop() {
                if w.len() == k {
                    if dominates(&u, &w).unwrap() && dominates(&v, &w).unwrap() {
                        assert!(dominates(&meet, &w).unwrap());
                    }
                    continue;
                }
                for x in -3..=3 {
                    let mut nw = w.clone();
                    nw.push(x);
                    stack.push(nw);
                }
            }
        }
    }

    #[test]
    fn modular_identity_examples() {
        assert!(modular_distance_identity_check(&[1, 0], &[1, 0]).unwrap());
        assert!(modular_distance_identity_check(&[0, 1], &[1, 0]).unwrap());
        assert!(modular_distance_identity_check(&[1, -2, 1], &[-1, 2, -1]).unwrap());
    }

    #[test]
    fn bfs_oracle_agrees_with_formula() {
        let pairs = [
            (vec![0, 0], vec![1, -1]),
            (vec![1, -2, 1], vec![-1, 2, -1]),
            (vec![2, 0, -1, 1], vec![0, 1, 1, -2]),
            (vec![0, 0, 0], vec![0, 0, 0]),
        ];
        for (u, v) in pairs {
            assert_eq!(
                hasse_distance_bfs_oracle(&u, &v, 1).unwrap(),
                hasse_distance_dom(&u, &v).unwrap()
            );
        }
    }

    #[test]
    fn membership_examples() {
        let p = GraphParams::new(4, 2).unwrap();
        assert_eq!(
            interval_membership(p, &[0, 0, 0]).unwrap(),
            IntervalMembership::I0Only
        ); // sum 0 <= n but 0 < m-1 = 1
        assert_eq!(
            interval_membership(p, &[3, 1, 1]).unwrap(),
            IntervalMembership::I1Only
        );
        assert_eq!(
            interval_membership(p, &[0, 1, 1]).unwrap(),
            IntervalMembership::Both
        );
        assert!(interval_membership(GraphParams::new(2, 3).unwrap(), &[0, 0, 0, 0]).is_err());
    }

    #[test]
    fn interval_isomorphism_small_cases() {
        for (n, m) in [(4, 2), (3, 3), (5, 2), (3, 2), (4, 4)] {
            let p = GraphParams::new(n, m).unwrap();
            assert!(interval_isomorphism_check(p, CAP).unwrap(), "at {}", p);
        }
    }

    #[test]
    fn rank_steps() {
        for (n, m) in [(4, 2), (3, 3), (5, 2)] {
            let p = GraphParams::new(n, m).unwrap();
            let wraps = rank_step_along_edges(p, CAP).unwrap().unwrap();
            assert_eq!(wraps, 1 << (m - 1), "wrap edges at {}", p);
        }
    }
}
