//! Geometric caterpillars and the bijection h onto Y(n, n-3).
//!
//! A caterpillar of order n is a non-crossing spanning tree of the convex
//! n-gon whose non-leaf vertices form a cyclic interval [b, c]; its spine
//! is the boundary path on [b-1, c+1]. The ordering S(C) starts at the
//! spine's left end a = b-1 with interval [a, a+1] and repeatedly absorbs
//! either l-1 (when (l-1, r) is an edge of C) or r+1; h(C) records the
//! left bucket a and one bit per absorption (1 for left, 0 for right).
//!
//! The flip moves are the local rearrangements of this ordering:
//! re-attaching an absorbed leaf across the current right front (one edge
//! moves), and rotating the spine start (the left bucket changes and the
//! tree is rebuilt around the new start). Under h these land exactly on
//! the unit-shift edges of Y(n, n-3).

use super::{chords_cross, pred, succ, FamilyError};
use crate::params::GraphParams;
use crate::vertex::{GraphVertex, YokeVertex};
use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;

/// A caterpillar given by its edge list (canonicalized and sorted).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caterpillar {
    pub n: u64,
    pub edges: Vec<(u64, u64)>,
}

/// The ordering data of a caterpillar: the spine start, the absorbed
/// vertices s_1..s_m with their bits, and the (l, r) interval ends before
/// each step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Ordering {
    pub start: u64,
    pub s: Vec<u64>,
    pub bits: Vec<i64>,
    /// (l, r) before step i (1-based; index 0 is the state before step 1).
    pub states: Vec<(u64, u64)>,
}

impl Caterpillar {
    pub fn new(n: u64, edges: Vec<(u64, u64)>) -> Result<Self, FamilyError> {
        if n < 4 {
            return Err(FamilyError::OutOfRegime(n, 4));
        }
        let mut canon: Vec<(u64, u64)> = edges
            .iter()
            .map(|&(x, y)| (x.min(y), x.max(y)))
            .collect();
        canon.sort_unstable();
        let c = Caterpillar { n, edges: canon };
        c.validate()?;
        Ok(c)
    }

    fn invalid(msg: impl Into<String>) -> FamilyError {
        FamilyError::InvalidCaterpillar(msg.into())
    }

    fn validate(&self) -> Result<(), FamilyError> {
        let n = self.n as usize;
        if self.edges.len() != n - 1 {
            return Err(Self::invalid(format!(
                "expected {} edges, got {}",
                n - 1,
                self.edges.len()
            )));
        }
        let mut deg = vec![0usize; n];
        let mut seen = BTreeSet::new();
        for &(x, y) in &self.edges {
            if x as usize >= n || y as usize >= n || x == y {
                return Err(Self::invalid(format!("bad edge ({x},{y})")));
            }
            if !seen.insert((x, y)) {
                return Err(Self::invalid(format!("duplicate edge ({x},{y})")));
            }
            deg[x as usize] += 1;
            deg[y as usize] += 1;
        }
        // Connectivity; with n-1 edges this makes it a spanning tree.
        let mut adj = vec![Vec::new(); n];
        for &(x, y) in &self.edges {
            adj[x as usize].push(y as usize);
            adj[y as usize].push(x as usize);
        }
        let mut visited = vec![false; n];
        let mut stack = vec![0usize];
        visited[0] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for &u in &adj[v] {
                if !visited[u] {
                    visited[u] = true;
                    reached += 1;
                    stack.push(u);
                }
            }
        }
        if reached != n {
            return Err(Self::invalid("not a spanning tree"));
        }
        // Non-crossing.
        for (i, &(x, y)) in self.edges.iter().enumerate() {
            for &(p, q) in &self.edges[i + 1..] {
                if chords_cross(x, y, p, q, self.n) {
                    return Err(Self::invalid(format!(
                        "edges ({x},{y}) and ({p},{q}) cross"
                    )));
                }
            }
        }
        // Non-leaves must form a (proper, non-empty) cyclic interval [b, c]:
        // exactly one non-leaf whose predecessor is a leaf.
        let nonleaf: Vec<u64> = (0..self.n).filter(|&v| deg[v as usize] >= 2).collect();
        let starts: Vec<u64> = nonleaf
            .iter()
            .copied()
            .filter(|&v| deg[pred(v, self.n) as usize] < 2)
            .collect();
        if nonleaf.is_empty() || starts.len() != 1 {
            return Err(Self::invalid("non-leaf vertices do not form an interval"));
        }
        let b = starts[0];
        let k = nonleaf.len() as u64;
        // The spine boundary path [b-1, c+1] must be fully present.
        let c = (b + k - 1) % self.n;
        let mut j = pred(b, self.n);
        loop {
            let e = (j.min(succ(j, self.n)), j.max(succ(j, self.n)));
            if !self.edges.contains(&e) {
                return Err(Self::invalid(format!(
                    "missing spine edge ({},{})",
                    j,
                    succ(j, self.n)
                )));
            }
            if j == c {
                break;
            }
            j = succ(j, self.n);
        }
        Ok(())
    }

    fn has_edge(&self, x: u64, y: u64) -> bool {
        self.edges.contains(&(x.min(y), x.max(y)))
    }

    /// Degree-based spine start: a = b - 1 where [b, c] is the non-leaf
    /// interval.
    fn spine_start(&self) -> u64 {
        let mut deg = vec![0usize; self.n as usize];
        for &(x, y) in &self.edges {
            deg[x as usize] += 1;
            deg[y as usize] += 1;
        }
        let b = (0..self.n)
            .find(|&v| deg[v as usize] >= 2 && deg[pred(v, self.n) as usize] < 2)
            .expect("validated caterpillar has a non-leaf interval");
        pred(b, self.n)
    }

    pub(crate) fn ordering(&self) -> Ordering {
        let n = self.n;
        let start = self.spine_start();
        let mut l = start;
        let mut r = succ(start, n);
        let mut s = Vec::new();
        let mut bits = Vec::new();
        let mut states = Vec::new();
        for _ in 0..n - 3 {
            states.push((l, r));
            if self.has_edge(pred(l, n), r) {
                l = pred(l, n);
                s.push(l);
                bits.push(1);
            } else {
                r = succ(r, n);
                s.push(r);
                bits.push(0);
            }
        }
        states.push((l, r));
        Ordering {
            start,
            s,
            bits,
            states,
        }
    }
}

impl std::fmt::Display for Caterpillar {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self
            .edges
            .iter()
            .map(|(x, y)| format!("({x},{y})"))
            .collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// The complete ordering S(C) = (s_0, ..., s_{n-3}).
pub fn caterpillar_ordering(c: &Caterpillar) -> Vec<u64> {
    let ord = c.ordering();
    let mut out = vec![ord.start];
    out.extend(&ord.s);
    out
}

/// h: caterpillars -> Y(n, n-3).
pub fn caterpillar_to_yoke(c: &Caterpillar) -> Result<YokeVertex, FamilyError> {
    let ord = c.ordering();
    let params = GraphParams::new(c.n, c.n - 3).expect("n >= 4");
    let mut entries = Vec::with_capacity(c.n as usize - 2);
    entries.push(ord.start as i64);
    entries.extend(&ord.bits);
    Ok(YokeVertex::new(params, &entries).expect("image is a valid vertex"))
}

/// Inverse of h: rebuild the tree from the start vertex and the bits. A
/// left bit attaches the new vertex l-1 to the current right front r; a
/// right bit advances the spine with the boundary edge (r, r+1); the final
/// boundary edge attaches the one remaining vertex.
pub fn yoke_to_caterpillar(v: &YokeVertex) -> Result<Caterpillar, FamilyError> {
    let params = v.params();
    let n = params.n;
    if n < 4 || params.m != n - 3 {
        return Err(FamilyError::WrongGraph(
            format!("Y({},{})", params.n, params.m),
            n,
            n.saturating_sub(3),
        ));
    }
    let e = v.entries();
    let a = e[0] as u64;
    let mut l = a;
    let mut r = succ(a, n);
    let mut edges = vec![(a, r)];
    for &bit in &e[1..=params.m as usize] {
        if bit == 1 {
            l = pred(l, n);
            edges.push((l, r));
        } else {
            edges.push((r, succ(r, n)));
            r = succ(r, n);
        }
    }
    edges.push((r, succ(r, n)));
    Caterpillar::new(n, edges)
}

/// All native flips of a caterpillar: the ordering-local moves.
///
/// For each step i with a bit differing from its successor (or the last
/// step), the absorbed leaf pred(l_i) is re-attached between the fronts
/// r_i and r_i + 1 (one edge moves). The spine-start rotation replaces the
/// first absorption: the tree is rebuilt from the rotated start with the
/// first bit toggled.
pub fn caterpillar_flips(c: &Caterpillar) -> Vec<Caterpillar> {
    let n = c.n;
    let m = (n - 3) as usize;
    let ord = c.ordering();
    let mut out = Vec::new();
    let replace = |from: (u64, u64), to: (u64, u64)| -> Caterpillar {
        let mut edges: Vec<(u64, u64)> = c
            .edges
            .iter()
            .copied()
            .filter(|&e| e != (from.0.min(from.1), from.0.max(from.1)))
            .collect();
        debug_assert_eq!(edges.len(), c.edges.len() - 1, "removed edge was present");
        edges.push(to);
        Caterpillar::new(n, edges).expect("flip image is a caterpillar")
    };
    for i in 1..=m {
        let (l, r) = ord.states[i - 1];
        let x = pred(l, n);
        let bit = ord.bits[i - 1];
        let next_differs = i == m || ord.bits[i] != bit;
        if !next_differs {
            continue;
        }
        if bit == 1 {
            out.push(replace((x, r), (x, succ(r, n))));
        } else {
            out.push(replace((x, succ(r, n)), (x, r)));
        }
    }
    // Spine-start rotation: the unit shift between the bucket and the
    // first bit.
    if m >= 1 {
        let params = GraphParams::new(n, n - 3).unwrap();
        let mut entries: Vec<i64> = vec![0; m + 1];
        entries[1..].copy_from_slice(&ord.bits);
        if ord.bits[0] == 1 {
            entries[0] = succ(ord.start, n) as i64;
            entries[1] = 0;
        } else {
            entries[0] = pred(ord.start, n) as i64;
            entries[1] = 1;
        }
        let v = YokeVertex::new(params, &entries[..]).expect("rotated vertex is valid");
        out.push(yoke_to_caterpillar(&v).expect("rotation image is a caterpillar"));
    }
    out
}

/// All caterpillars of order n, natively: decode every labeled tree from
/// its Pruefer sequence and keep the valid caterpillars.
pub fn caterpillars(n: u64) -> Result<Vec<Caterpillar>, FamilyError> {
    if n < 4 {
        return Err(FamilyError::OutOfRegime(n, 4));
    }
    let count = (n as usize).pow(n as u32 - 2);
    let mut out = Vec::new();
    let mut seq = vec![0u64; n as usize - 2];
    for code in 0..count {
        let mut rest = code;
        for slot in seq.iter_mut() {
            *slot = (rest % n as usize) as u64;
            rest /= n as usize;
        }
        let edges = pruefer_decode(&seq, n);
        if let Ok(c) = Caterpillar::new(n, edges) {
            out.push(c);
        }
    }
    out.sort_by(|a, b| a.edges.cmp(&b.edges));
    out.dedup();
    Ok(out)
}

fn pruefer_decode(seq: &[u64], n: u64) -> Vec<(u64, u64)> {
    let mut degree = vec![1u64; n as usize];
    for &x in seq {
        degree[x as usize] += 1;
    }
    let mut edges = Vec::with_capacity(n as usize - 1);
    let mut leaves: BTreeSet<u64> = (0..n).filter(|&v| degree[v as usize] == 1).collect();
    for &x in seq {
        let leaf = *leaves.iter().next().unwrap();
        leaves.remove(&leaf);
        edges.push((leaf, x));
        degree[x as usize] -= 1;
        if degree[x as usize] == 1 {
            leaves.insert(x);
        }
    }
    let mut it = leaves.iter();
    let (a, b) = (*it.next().unwrap(), *it.next().unwrap());
    edges.push((a, b));
    edges
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{neighbors, rank};
    use crate::params::DEFAULT_VERTEX_CAP as CAP;

    /// The leftmost caterpillar of the flip figure (8-gon).
    fn figure_caterpillar() -> Caterpillar {
        Caterpillar::new(
            8,
            vec![(7, 0), (0, 1), (1, 2), (5, 0), (0, 4), (1, 3), (6, 0)],
        )
        .unwrap()
    }

    #[test]
    fn figure_ordering_and_image() {
        let c = figure_caterpillar();
        assert_eq!(caterpillar_ordering(&c), vec![7, 6, 5, 4, 1, 3]);
        let v = caterpillar_to_yoke(&c).unwrap();
        assert_eq!(v.entries(), &[7, 1, 1, 1, 0, 1, 5]);
    }

    #[test]
    fn figure_intervals() {
        let c = figure_caterpillar();
        let ord = c.ordering();
        // I_0 = [7,0], I_1 = [6,0], ..., I_5 = [3,1].
        assert_eq!(ord.states[0], (7, 0));
        let expected = [(7, 0), (6, 0), (5, 0), (4, 0), (4, 1), (3, 1)];
        assert_eq!(ord.states.len(), 6);
        for (i, &(l, r)) in expected.iter().enumerate() {
            let got = if i < 5 { ord.states[i] } else { *ord.states.last().unwrap() };
            assert_eq!(got, (l, r), "interval {i}");
        }
    }

    #[test]
    fn figure_flip_partner() {
        // Re-attaching leaf 4 from 0 to 1 gives the right caterpillar of
        // the figure, mapped to (7,1,1,0,1,1,5).
        let c = figure_caterpillar();
        let flips = caterpillar_flips(&c);
        let images: Vec<Vec<i64>> = flips
            .iter()
            .map(|f| caterpillar_to_yoke(f).unwrap().entries().to_vec())
            .collect();
        assert!(images.contains(&vec![7, 1, 1, 0, 1, 1, 5]));
        let partner = flips
            .iter()
            .find(|f| caterpillar_to_yoke(f).unwrap().entries() == [7, 1, 1, 0, 1, 1, 5])
            .unwrap();
        assert!(partner.has_edge(1, 4));
        assert!(!partner.has_edge(0, 4));
    }

    #[test]
    fn all_zero_bits_is_boundary_path() {
        let params = GraphParams::new(6, 3).unwrap();
        let v = YokeVertex::new(params, &[0, 0, 0, 0]).unwrap();
        let c = yoke_to_caterpillar(&v).unwrap();
        assert_eq!(
            c.edges,
            vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5)],
            "spine grows only rightward"
        );
    }

    #[test]
    fn roundtrip_all_of_y85() {
        let params = GraphParams::new(8, 5).unwrap();
        for v in crate::enumerate_vertices::<YokeVertex>(params, CAP).unwrap() {
            let c = yoke_to_caterpillar(&v).unwrap();
            assert_eq!(caterpillar_to_yoke(&c).unwrap(), v, "roundtrip at {}", v);
        }
        let c = figure_caterpillar();
        assert_eq!(
            yoke_to_caterpillar(&caterpillar_to_yoke(&c).unwrap()).unwrap(),
            c
        );
    }

    #[test]
    fn counts_match_yoke() {
        for n in 4..=8 {
            let all = caterpillars(n).unwrap();
            assert_eq!(all.len() as u64, n * (1 << (n - 3)), "caterpillars({n})");
        }
    }

    #[test]
    fn enumeration_agrees_with_bijection() {
        for n in 4..=7 {
            let params = GraphParams::new(n, n - 3).unwrap();
            let mut via_yoke: Vec<Caterpillar> =
                crate::enumerate_vertices::<YokeVertex>(params, CAP)
                    .unwrap()
                    .map(|v| yoke_to_caterpillar(&v).unwrap())
                    .collect();
            via_yoke.sort_by(|a, b| a.edges.cmp(&b.edges));
            let native = caterpillars(n).unwrap();
            assert_eq!(native, via_yoke, "n = {n}");
        }
    }

    #[test]
    fn flip_edges_match_yoke_edges() {
        for n in [4u64, 5, 6, 7, 8] {
            let params = GraphParams::new(n, n - 3).unwrap();
            let mut family_edges = std::collections::BTreeSet::new();
            for c in caterpillars(n).unwrap() {
                let v = rank(&caterpillar_to_yoke(&c).unwrap());
                for f in caterpillar_flips(&c) {
                    let u = rank(&caterpillar_to_yoke(&f).unwrap());
                    assert_ne!(u, v);
                    family_edges.insert((v.min(u), v.max(u)));
                }
            }
            let mut yoke_edges = std::collections::BTreeSet::new();
            for v in crate::enumerate_vertices::<YokeVertex>(params, CAP).unwrap() {
                let rv = rank(&v);
                for nb in neighbors(&v) {
                    let ru = rank(&nb.vertex);
                    yoke_edges.insert((rv.min(ru), rv.max(ru)));
                }
            }
            assert_eq!(family_edges, yoke_edges, "edge sets at n = {n}");
        }
    }

    #[test]
    fn invalid_inputs_rejected() {
        // Non-leaves {1,3} are not an interval.
        assert!(Caterpillar::new(5, vec![(0, 1), (1, 2), (1, 3), (3, 4)]).is_err());
        // Crossing edges.
        assert!(Caterpillar::new(5, vec![(0, 2), (1, 3), (1, 2), (3, 4)]).is_err());
        // Cycle, not a tree.
        assert!(Caterpillar::new(4, vec![(0, 1), (1, 2), (0, 2)]).is_err());
        // n = 3 unsupported.
        assert!(Caterpillar::new(3, vec![(0, 1), (1, 2)]).is_err());
    }
}
