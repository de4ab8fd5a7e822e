//! Automorphisms of yoke graphs.
//!
//! Three fundamental automorphisms generate the group A(n,m):
//!
//!   phi: (v_0+1, v_1, ..., v_m, v_{m+1}-1)   bucket rotation, order n
//!   psi: full reversal                        involution
//!   tau: (-v_0, 1-v_1, ..., 1-v_m, -(m+v_{m+1}))  complementation
//!
//! subject to psi phi = phi^-1 psi, tau phi = phi^-1 tau and
//! (tau psi)^2 = phi^m, so for m > 0 every element has the canonical form
//! phi^k tau^a psi^b. A(n,m) is the full automorphism group except for
//! m = 2 (open) and (n,m) = (1,3), where the group is D4 x C2 of order 16.
//! The dyoke graphs additionally carry the entrywise negation mu.

use crate::graph::{neighbors, rank, unrank};
use crate::params::{GraphParams, Kind, SizeError};
use crate::vertex::{try_shift, DYokeVertex, GraphVertex, Move, YokeVertex};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AutError {
    #[error("canonical form requires m >= 1, got m = 0")]
    OutOfRegime,
    #[error("aut(Y(n,2)) is not characterized; only brute force is available")]
    Unsupported,
    #[error(transparent)]
    Size(#[from] SizeError),
    #[error("cannot parse automorphism {0:?}")]
    Parse(String),
}

/// The four fundamental maps. phi, psi, tau act on yoke graphs; mu on
/// dyoke graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum FundamentalAut {
    Phi,
    Psi,
    Tau,
    Mu,
}

/// phi: add one to the left bucket, subtract one from the right.
pub fn apply_phi(v: &YokeVertex) -> YokeVertex {
    let p = v.params();
    let mut e = v.entries().to_vec();
    let last = e.len() - 1;
    e[0] = p.reduce(e[0] + 1);
    e[last] = p.reduce(e[last] - 1);
    YokeVertex::new(p, &e).expect("phi image is valid")
}

/// psi: reverse the entry sequence.
pub fn apply_psi(v: &YokeVertex) -> YokeVertex {
    let p = v.params();
    let mut e = v.entries().to_vec();
    e.reverse();
    YokeVertex::new(p, &e).expect("psi image is valid")
}

/// tau: (-v_0, 1-v_1, ..., 1-v_m, -(m+v_{m+1})), buckets mod n.
pub fn apply_tau(v: &YokeVertex) -> YokeVertex {
    let p = v.params();
    let last = p.len() - 1;
    let e: Vec<i64> = v
        .entries()
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            if i == 0 {
                p.reduce(-x)
            } else if i == last {
                p.reduce(-(p.m as i64 + x))
            } else {
                1 - x
            }
        })
        .collect();
    YokeVertex::new(p, &e).expect("tau image is valid")
}

/// mu: entrywise negation on the dyoke graph, buckets mod n.
pub fn apply_mu(v: &DYokeVertex) -> DYokeVertex {
    let p = v.params();
    let last = p.len() - 1;
    let e: Vec<i64> = v
        .entries()
        .iter()
        .enumerate()
        .map(|(i, &x)| if i == 0 || i == last { p.reduce(-x) } else { -x })
        .collect();
    DYokeVertex::new(p, &e).expect("mu image is valid")
}

/// Element of A(n,m) in canonical form phi^k tau^a psi^b with k in [0, n-1]
/// and a, b in {0, 1}. As a function it applies psi^b first, then tau^a,
/// then phi^k (composition is right-to-left).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct GroupElement {
    pub k: u64,
    pub a: u8,
    pub b: u8,
}

impl GroupElement {
    pub fn identity() -> Self {
        GroupElement { k: 0, a: 0, b: 0 }
    }

    pub fn phi(k: u64, params: GraphParams) -> Self {
        GroupElement {
            k: k % params.n,
            a: 0,
            b: 0,
        }
    }

    pub fn tau() -> Self {
        GroupElement { k: 0, a: 1, b: 0 }
    }

    pub fn psi() -> Self {
        GroupElement { k: 0, a: 0, b: 1 }
    }

    pub fn apply(&self, v: &YokeVertex) -> YokeVertex {
        let mut w = v.clone();
        if self.b == 1 {
            w = apply_psi(&w);
        }
        if self.a == 1 {
            w = apply_tau(&w);
        }
        for _ in 0..self.k {
            w = apply_phi(&w);
        }
        w
    }

    /// Parse e.g. "phi^2.tau", "psi", "id", "phi.tau.psi".
    pub fn parse(text: &str, params: GraphParams) -> Result<Self, AutError> {
        let mut acc = GroupElement::identity();
        let t = text.trim();
        if t.is_empty() || t == "id" {
            return Ok(acc);
        }
        for tok in t.split('.') {
            let (name, exp) = match tok.split_once('^') {
                Some((n, e)) => (
                    n.trim(),
                    e.trim()
                        .parse::<i64>()
                        .map_err(|_| AutError::Parse(tok.into()))?,
                ),
                None => (tok.trim(), 1),
            };
            let base = match name {
                "phi" => GroupElement::phi(1, params),
                "tau" => GroupElement::tau(),
                "psi" => GroupElement::psi(),
                _ => return Err(AutError::Parse(tok.into())),
            };
            let exp = exp.rem_euclid(2 * params.n as i64) as u64;
            for _ in 0..exp {
                acc = compose(acc, base, params)?;
            }
        }
        Ok(acc)
    }
}

impl std::fmt::Display for GroupElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts = Vec::new();
        if self.k > 0 {
            parts.push(if self.k == 1 {
                "phi".to_string()
            } else {
                format!("phi^{}", self.k)
            });
        }
        if self.a == 1 {
            parts.push("tau".to_string());
        }
        if self.b == 1 {
            parts.push("psi".to_string());
        }
        if parts.is_empty() {
            write!(f, "id")
        } else {
            write!(f, "{}", parts.join("."))
        }
    }
}

/// Canonical-form product g.h (g after h), using psi phi = phi^-1 psi,
/// tau phi = phi^-1 tau and (tau psi)^2 = phi^m. Requires m >= 1.
pub fn compose(
    g: GroupElement,
    h: GroupElement,
    params: GraphParams,
) -> Result<GroupElement, AutError> {
    if params.m == 0 {
        return Err(AutError::OutOfRegime);
    }
    let n = params.n as i64;
    let m = params.m as i64;
    // Move phi^{h.k} through tau^{g.a} psi^{g.b}: the exponent flips sign
    // once per involution present.
    let eps = if (g.a + g.b) % 2 == 0 { 1 } else { -1 };
    let mut k = g.k as i64 + eps * h.k as i64;
    // psi tau = phi^{-m} tau psi, conjugated through tau^{g.a}.
    if g.b == 1 && h.a == 1 {
        let sign = if g.a == 1 { 1 } else { -1 };
        k += sign * m;
    }
    Ok(GroupElement {
        k: k.rem_euclid(n) as u64,
        a: (g.a + h.a) % 2,
        b: (g.b + h.b) % 2,
    })
}

/// Inverse in canonical form.
pub fn inverse(g: GroupElement, params: GraphParams) -> Result<GroupElement, AutError> {
    // (phi^k tau^a psi^b)^-1 = psi^b tau^a phi^{-k}; normalize via compose.
    let mut acc = GroupElement {
        k: 0,
        a: 0,
        b: g.b,
    };
    acc = compose(acc, GroupElement { k: 0, a: g.a, b: 0 }, params)?;
    acc = compose(
        acc,
        GroupElement::phi(params.n - g.k % params.n, params),
        params,
    )?;
    Ok(acc)
}

/// All 4n canonical triples (not necessarily distinct as functions in the
/// degenerate cases).
pub fn all_elements(params: GraphParams) -> Vec<GroupElement> {
    let mut out = Vec::new();
    for k in 0..params.n {
        for a in 0..2u8 {
            for b in 0..2u8 {
                out.push(GroupElement { k, a, b });
            }
        }
    }
    out
}

/// Structure tags for the groups that occur.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "family", content = "degree")]
pub enum GroupStructure {
    Trivial,
    C2,
    C2xC2,
    /// Dihedral group of order 2k.
    Dihedral(u64),
    /// Direct product D_k x C2, order 4k.
    DihedralTimesC2(u64),
}

impl GroupStructure {
    pub fn order(&self) -> u64 {
        match self {
            GroupStructure::Trivial => 1,
            GroupStructure::C2 => 2,
            GroupStructure::C2xC2 => 4,
            GroupStructure::Dihedral(k) => 2 * k,
            GroupStructure::DihedralTimesC2(k) => 4 * k,
        }
    }
}

impl std::fmt::Display for GroupStructure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GroupStructure::Trivial => write!(f, "trivial"),
            GroupStructure::C2 => write!(f, "C2"),
            GroupStructure::C2xC2 => write!(f, "C2 x C2"),
            GroupStructure::Dihedral(k) => write!(f, "D{}", k),
            GroupStructure::DihedralTimesC2(k) => write!(f, "D{} x C2", k),
        }
    }
}

/// Structure of A(n,m) = <phi, psi, tau>:
/// (1,0) trivial; (2,0) and (1,1) C2; (n>2, 0) D_n; (1, m>1) C2 x C2;
/// n>1, m>0: D_{2n} when n or m is odd, D_n x C2 when both are even.
pub fn generated_group_structure(params: GraphParams) -> GroupStructure {
    let (n, m) = (params.n, params.m);
    match (n, m) {
        (1, 0) => GroupStructure::Trivial,
        (2, 0) | (1, 1) => GroupStructure::C2,
        (n, 0) => GroupStructure::Dihedral(n),
        (1, _) => GroupStructure::C2xC2,
        (n, m) => {
            if n % 2 == 1 || m % 2 == 1 {
                GroupStructure::Dihedral(2 * n)
            } else {
                GroupStructure::DihedralTimesC2(n)
            }
        }
    }
}

/// Structure of the full automorphism group: equals A(n,m) except that
/// aut(Y(1,3)) is D4 x C2 of order 16; m = 2 is not characterized.
pub fn full_aut_structure(params: GraphParams) -> Result<GroupStructure, AutError> {
    if params.m == 2 {
        return Err(AutError::Unsupported);
    }
    if (params.n, params.m) == (1, 3) {
        return Ok(GroupStructure::DihedralTimesC2(4));
    }
    Ok(generated_group_structure(params))
}

/// Distinguished vertices: 0_l and 0_r are the two neighbors of 0,
/// 0_k = phi^k(0), 1_k = (k, 1, ..., 1, -(m+k) mod n).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NamedVertices {
    pub zero: YokeVertex,
    pub zero_l: Option<YokeVertex>,
    pub zero_r: Option<YokeVertex>,
    pub zero_k: YokeVertex,
    pub one_k: YokeVertex,
}

pub fn named_vertices(params: GraphParams, k: u64) -> NamedVertices {
    let zero = YokeVertex::zero(params);
    let zero_l = try_shift(&zero, Move::right(0));
    let zero_r = try_shift(&zero, Move::left(params.m));
    let mut zk = zero.clone();
    for _ in 0..k % params.n {
        zk = apply_phi(&zk);
    }
    let mut one = vec![1i64; params.m as usize + 1];
    one[0] = params.reduce(k as i64);
    let one_k = YokeVertex::new(params, &one).expect("1_k is valid");
    NamedVertices {
        zero,
        zero_l,
        zero_r,
        zero_k: zk,
        one_k,
    }
}

/// A vertex permutation, indexed by rank.
pub type VertexPermutation = Vec<u32>;

/// The permutation induced by a canonical group element.
pub fn element_permutation(g: GroupElement, params: GraphParams, cap: u64) -> Result<VertexPermutation, AutError> {
    let count = params.vertex_count_capped(Kind::Yoke, cap)?;
    let mut perm = vec![0u32; count as usize];
    for i in 0..count {
        let v: YokeVertex = unrank(params, i);
        perm[i as usize] = rank(&g.apply(&v)) as u32;
    }
    Ok(perm)
}

/// All adjacency-preserving bijections of Y(n,m), found by backtracking
/// over a partition refined from (valency, distance profile to the
/// valency-2 vertices) by neighborhood colors. Deterministic: the result
/// is sorted lexicographically.
pub fn brute_force_automorphisms(
    params: GraphParams,
    cap: u64,
) -> Result<Vec<VertexPermutation>, AutError> {
    let count = params.vertex_count_capped(Kind::Yoke, cap)? as usize;
    let adj: Vec<Vec<u32>> = (0..count)
        .map(|i| {
            let v: YokeVertex = unrank(params, i as u64);
            let mut ns: Vec<u32> = neighbors(&v)
                .into_iter()
                .map(|nb| rank(&nb.vertex) as u32)
                .collect();
            ns.sort_unstable();
            ns
        })
        .collect();

    // Initial colors: (valency, sorted distances to valency-2 vertices).
    let deg: Vec<usize> = adj.iter().map(|a| a.len()).collect();
    let val2: Vec<usize> = (0..count).filter(|&i| deg[i] == 2).collect();
    let mut dist_profiles: Vec<Vec<u32>> = vec![Vec::new(); count];
    if !val2.is_empty() && count > 0 {
        for &s in &val2 {
            let d = bfs_ranks(&adj, s);
            for i in 0..count {
                dist_profiles[i].push(d[i]);
            }
        }
        for p in &mut dist_profiles {
            p.sort_unstable();
        }
    }
    let mut colors: Vec<u64> = {
        let keys: Vec<(usize, &Vec<u32>)> = (0..count).map(|i| (deg[i], &dist_profiles[i])).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        sorted.dedup();
        keys.iter()
            .map(|k| sorted.binary_search(k).unwrap() as u64)
            .collect()
    };

    // 1-WL refinement: color by (own color, multiset of neighbor colors).
    loop {
        let mut keys: Vec<(u64, Vec<u64>)> = (0..count)
            .map(|i| {
                let mut ns: Vec<u64> = adj[i].iter().map(|&j| colors[j as usize]).collect();
                ns.sort_unstable();
                (colors[i], ns)
            })
            .collect();
        let mut sorted = keys.clone();
        sorted.sort();
        sorted.dedup();
        let next: Vec<u64> = keys
            .drain(..)
            .map(|k| sorted.binary_search(&k).unwrap() as u64)
            .collect();
        if next == colors {
            break;
        }
        colors = next;
    }

    let mut out: Vec<VertexPermutation> = Vec::new();
    let mut image: Vec<Option<u32>> = vec![None; count];
    let mut used: Vec<bool> = vec![false; count];
    backtrack(
        0,
        &adj,
        &colors,
        &mut image,
        &mut used,
        &mut out,
    );
    out.sort();
    Ok(out)
}

fn bfs_ranks(adj: &[Vec<u32>], source: usize) -> Vec<u32> {
    let mut dist = vec![u32::MAX; adj.len()];
    dist[source] = 0;
    let mut queue = std::collections::VecDeque::from([source]);
    while let Some(x) = queue.pop_front() {
        for &y in &adj[x] {
            let y = y as usize;
            if dist[y] == u32::MAX {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    dist
}

fn backtrack(
    v: usize,
    adj: &[Vec<u32>],
    colors: &[u64],
    image: &mut Vec<Option<u32>>,
    used: &mut Vec<bool>,
    out: &mut Vec<VertexPermutation>,
) {
    let count = adj.len();
    if v == count {
        out.push(image.iter().map(|x| x.unwrap()).collect());
        return;
    }
    'candidates: for w in 0..count {
        if used[w] || colors[w] != colors[v] {
            continue;
        }
        // Consistency: edges between v and already-mapped vertices must be
        // preserved both ways.
        for u in 0..v {
            let iu = image[u].unwrap();
            let e1 = adj[v].binary_search(&(u as u32)).is_ok();
            let e2 = adj[w].binary_search(&iu).is_ok();
            if e1 != e2 {
                continue 'candidates;
            }
        }
        image[v] = Some(w as u32);
        used[w] = true;
        backtrack(v + 1, adj, colors, image, used, out);
        image[v] = None;
        used[w] = false;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::{DEFAULT_BRUTE_FORCE_CAP, DEFAULT_VERTEX_CAP as CAP};

    fn params(n: u64, m: u64) -> GraphParams {
        GraphParams::new(n, m).unwrap()
    }

    #[test]
    fn fundamental_worked_examples() {
        let p = params(3, 3);
        let zero = YokeVertex::zero(p);
        assert_eq!(apply_phi(&zero).entries(), &[1, 0, 0, 0, 2]);
        assert_eq!(apply_tau(&zero).entries(), &[0, 1, 1, 1, 0]);
        let v = YokeVertex::new(p, &[2, 0, 1, 1, 2]).unwrap();
        assert_eq!(apply_psi(&v).entries(), &[2, 1, 1, 0, 2]);
    }

    #[test]
    fn fundamental_maps_preserve_adjacency() {
        for (n, m) in [(3, 3), (2, 4), (1, 3), (4, 1), (5, 0)] {
            let p = params(n, m);
            for v in crate::enumerate_vertices::<YokeVertex>(p, CAP).unwrap() {
                for nb in neighbors(&v) {
                    for f in [apply_phi, apply_psi, apply_tau] {
                        let fv = f(&v);
                        let fu = f(&nb.vertex);
                        assert!(neighbors(&fv).iter().any(|x| x.vertex == fu));
                    }
                }
            }
            for v in crate::enumerate_vertices::<DYokeVertex>(p, CAP).unwrap() {
                for nb in neighbors(&v) {
                    let fv = apply_mu(&v);
                    let fu = apply_mu(&nb.vertex);
                    assert!(neighbors(&fv).iter().any(|x| x.vertex == fu));
                }
            }
        }
    }

    #[test]
    fn mu_is_involution_fixing_zero() {
        let p = params(3, 3);
        assert!(apply_mu(&DYokeVertex::zero(p)).is_zero());
        for v in crate::enumerate_vertices::<DYokeVertex>(p, CAP).unwrap() {
            assert_eq!(apply_mu(&apply_mu(&v)), v);
        }
    }

    #[test]
    fn orders_of_generators() {
        // phi has order n; psi, tau are involutions except in the listed
        // degenerate cases.
        for (n, m) in [(1, 0), (2, 0), (1, 1), (3, 3), (2, 4), (1, 4), (4, 0)] {
            let p = params(n, m);
            let vs: Vec<YokeVertex> = crate::enumerate_vertices(p, CAP).unwrap().collect();
            let order_of = |f: fn(&YokeVertex) -> YokeVertex| -> u64 {
                let mut k = 1u64;
                loop {
                    if vs.iter().all(|v| {
                        let mut w = v.clone();
                        for _ in 0..k {
                            w = f(&w);
                        }
                        w == *v
                    }) {
                        return k;
                    }
                    k += 1;
                }
            };
            assert_eq!(order_of(apply_phi), n);
            let psi_id = matches!((n, m), (1, 0) | (1, 1) | (2, 0));
            assert_eq!(order_of(apply_psi), if psi_id { 1 } else { 2 });
            let tau_id = matches!((n, m), (1, 0) | (2, 0));
            assert_eq!(order_of(apply_tau), if tau_id { 1 } else { 2 });
        }
    }

    #[test]
    fn compose_matches_pointwise_composition() {
        for (n, m) in [(3, 3), (2, 4), (1, 4), (4, 1), (2, 1)] {
            let p = params(n, m);
            let vs: Vec<YokeVertex> = crate::enumerate_vertices(p, CAP).unwrap().collect();
            for &g in &all_elements(p) {
                for &h in &all_elements(p) {
                    let gh = compose(g, h, p).unwrap();
                    for v in &vs {
                        assert_eq!(gh.apply(v), g.apply(&h.apply(v)), "g={} h={}", g, h);
                    }
                }
                let gi = inverse(g, p).unwrap();
                assert_eq!(compose(g, gi, p).unwrap(), GroupElement::identity());
            }
        }
    }

    #[test]
    fn canonical_relations() {
        // (tau psi)^2 = phi^m, psi phi = phi^{n-1} psi.
        let p = params(3, 4);
        let tp = compose(GroupElement::tau(), GroupElement::psi(), p).unwrap();
        let sq = compose(tp, tp, p).unwrap();
        assert_eq!(sq, GroupElement::phi(p.m, p));
        let pf = compose(GroupElement::psi(), GroupElement::phi(1, p), p).unwrap();
        assert_eq!(
            pf,
            GroupElement {
                k: p.n - 1,
                a: 0,
                b: 1
            }
        );
        let g = GroupElement { k: 2, a: 1, b: 1 };
        assert_eq!(compose(g, GroupElement::identity(), p).unwrap(), g);
    }

    #[test]
    fn structure_table() {
        assert_eq!(generated_group_structure(params(1, 0)), GroupStructure::Trivial);
        assert_eq!(generated_group_structure(params(2, 0)), GroupStructure::C2);
        assert_eq!(generated_group_structure(params(1, 1)), GroupStructure::C2);
        assert_eq!(generated_group_structure(params(6, 0)), GroupStructure::Dihedral(6));
        assert_eq!(generated_group_structure(params(1, 4)), GroupStructure::C2xC2);
        assert_eq!(generated_group_structure(params(3, 3)), GroupStructure::Dihedral(6));
        assert_eq!(generated_group_structure(params(2, 4)), GroupStructure::DihedralTimesC2(2));
        assert_eq!(generated_group_structure(params(3, 3)).order(), 12);
        assert_eq!(generated_group_structure(params(2, 4)).order(), 8);

        assert_eq!(
            full_aut_structure(params(1, 3)).unwrap(),
            GroupStructure::DihedralTimesC2(4)
        );
        assert_eq!(full_aut_structure(params(1, 3)).unwrap().order(), 16);
        assert!(matches!(full_aut_structure(params(4, 2)), Err(AutError::Unsupported)));
        assert_eq!(
            full_aut_structure(params(3, 3)).unwrap(),
            GroupStructure::Dihedral(6)
        );
    }

    #[test]
    fn named_vertices_worked_examples() {
        let p = params(3, 3);
        let nv = named_vertices(p, 1);
        assert_eq!(nv.zero_k.entries(), &[1, 0, 0, 0, 2]);
        assert_eq!(nv.zero_l.unwrap().entries(), &[2, 1, 0, 0, 0]);
        assert_eq!(nv.zero_r.unwrap().entries(), &[0, 0, 0, 1, 2]);
        let nv0 = named_vertices(p, 0);
        assert_eq!(nv0.one_k.entries(), &[0, 1, 1, 1, 0]);
    }

    #[test]
    fn brute_force_counts() {
        let cases = [
            ((1u64, 3u64), 16usize),
            ((1, 4), 4),
            ((3, 3), 12),
            ((2, 4), 8),
            ((6, 0), 12),
            ((5, 0), 10),
        ];
        for ((n, m), want) in cases {
            let auts = brute_force_automorphisms(params(n, m), DEFAULT_BRUTE_FORCE_CAP).unwrap();
            assert_eq!(auts.len(), want, "aut count of Y({n},{m})");
        }
    }

    #[test]
    fn brute_force_equals_canonical_group() {
        for (n, m) in [(1u64, 4u64), (3, 3), (2, 4), (1, 1), (2, 1), (4, 0), (1, 5)] {
            let p = params(n, m);
            let brute = brute_force_automorphisms(p, DEFAULT_BRUTE_FORCE_CAP).unwrap();
            let mut canonical: Vec<VertexPermutation> = all_elements(p)
                .into_iter()
                .map(|g| element_permutation(g, p, CAP).unwrap())
                .collect();
            canonical.sort();
            canonical.dedup();
            assert_eq!(brute, canonical, "aut(Y({n},{m})) vs A({n},{m})");
        }
        // Y(1,3) has automorphisms beyond A(1,3).
        let p = params(1, 3);
        let brute = brute_force_automorphisms(p, DEFAULT_BRUTE_FORCE_CAP).unwrap();
        let mut canonical: Vec<VertexPermutation> = all_elements(p)
            .into_iter()
            .map(|g| element_permutation(g, p, CAP).unwrap())
            .collect();
        canonical.sort();
        canonical.dedup();
        assert_eq!(canonical.len(), 4);
        assert_eq!(brute.len(), 16);
        assert!(canonical.iter().all(|c| brute.contains(c)));
    }

    #[test]
    fn parse_display_roundtrip() {
        let p = params(5, 3);
        for g in all_elements(p) {
            let back = GroupElement::parse(&g.to_string(), p).unwrap();
            assert_eq!(back, g);
        }
        assert_eq!(
            GroupElement::parse("phi^2.tau", p).unwrap(),
            GroupElement { k: 2, a: 1, b: 0 }
        );
        assert!(GroupElement::parse("rho", p).is_err());
    }
}
