//! Implicit-graph machinery: vertex enumeration, neighbor sets, BFS oracles,
//! all-pairs diameter and deterministic exports.
//!
//! Vertices are ranked by the mixed-radix value of (v_0, v_1, ..., v_m) in
//! lexicographic order; the right bucket is forced by the rest. BFS works on
//! ranks with dense distance arrays, so no hashing is involved in hot loops.

use crate::params::{GraphParams, Kind, SizeError};
use crate::vertex::{try_shift, Dir, GraphVertex, Move, VertexError};
use std::io::Write;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error(transparent)]
    Size(#[from] SizeError),
    #[error(transparent)]
    Vertex(#[from] VertexError),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

/// Dense rank of a vertex among all vertices of its graph, in lexicographic
/// order of (v_0, v_1, ..., v_m).
pub fn rank<V: GraphVertex>(v: &V) -> u64 {
    let params = v.params();
    let kind = V::KIND;
    let radix = kind.radix();
    let offset = -kind.middle_min();
    let e = v.entries();
    let mut idx = e[0] as u64;
    for &x in &e[1..=params.m as usize] {
        idx = idx * radix + (x + offset) as u64;
    }
    idx
}

/// Inverse of [`rank`].
pub fn unrank<V: GraphVertex>(params: GraphParams, kind_idx: u64) -> V {
    let kind = V::KIND;
    let radix = kind.radix();
    let offset = -kind.middle_min();
    let m = params.m as usize;
    let mut rest = kind_idx;
    let mut entries = vec![0i64; m + 2];
    for i in (1..=m).rev() {
        entries[i] = (rest % radix) as i64 - offset;
        rest /= radix;
    }
    entries[0] = rest as i64;
    debug_assert!(entries[0] < params.n as i64);
    let sum: i64 = entries.iter().sum();
    entries[m + 1] = params.reduce(-sum);
    V::from_canonical(params, entries)
}

/// Iterate over every vertex exactly once, in lexicographic order of
/// (v_0, ..., v_m). Refuses graphs above the cap.
pub fn enumerate_vertices<V: GraphVertex>(
    params: GraphParams,
    cap: u64,
) -> Result<impl Iterator<Item = V>, SizeError> {
    let count = params.vertex_count_capped(V::KIND, cap)?;
    Ok((0..count).map(move |i| unrank(params, i)))
}

/// A neighbor together with every move that witnesses the edge. Parallel
/// moves onto the same target are collapsed into one simple edge; the
/// witnessing moves are retained in (index, Left < Right) order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Neighbor<V> {
    pub vertex: V,
    pub moves: Vec<Move>,
}

/// All distinct neighbors of `v`, ordered by first witnessing move
/// (ascending index, Left before Right).
pub fn neighbors<V: GraphVertex>(v: &V) -> Vec<Neighbor<V>> {
    let mut out: Vec<Neighbor<V>> = Vec::new();
    for index in 0..=v.params().m {
        for dir in [Dir::Left, Dir::Right] {
            let mv = Move { index, dir };
            if let Some(u) = try_shift(v, mv) {
                if let Some(existing) = out.iter_mut().find(|nb| nb.vertex == u) {
                    existing.moves.push(mv);
                } else {
                    out.push(Neighbor {
                        vertex: u,
                        moves: vec![mv],
                    });
                }
            }
        }
    }
    out
}

/// Neighbor ranks of the vertex with rank `idx`, written into `buf`
/// (deduplicated). The fast path used by BFS.
fn neighbor_ranks<V: GraphVertex>(params: GraphParams, idx: u64, buf: &mut Vec<u64>) {
    buf.clear();
    let v: V = unrank(params, idx);
    for index in 0..=params.m {
        for dir in [Dir::Left, Dir::Right] {
            if let Some(u) = try_shift(&v, Move { index, dir }) {
                let r = rank(&u);
                if !buf.contains(&r) {
                    buf.push(r);
                }
            }
        }
    }
}

const UNSEEN: u32 = u32::MAX;

/// Exact single-source distances over the whole graph.
#[derive(Debug, Clone)]
pub struct DistanceTable {
    pub params: GraphParams,
    pub kind: Kind,
    pub source: u64,
    dist: Vec<u32>,
}

impl DistanceTable {
    pub fn get<V: GraphVertex>(&self, v: &V) -> u64 {
        debug_assert_eq!(v.params(), self.params);
        self.dist[rank(v) as usize] as u64
    }

    pub fn get_rank(&self, idx: u64) -> u64 {
        self.dist[idx as usize] as u64
    }

    /// Maximum distance in the table and one rank attaining it.
    pub fn eccentricity(&self) -> (u64, u64) {
        let (idx, &d) = self
            .dist
            .iter()
            .enumerate()
            .max_by_key(|&(i, &d)| (d, std::cmp::Reverse(i)))
            .expect("non-empty graph");
        (d as u64, idx as u64)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, u64)> + '_ {
        self.dist.iter().enumerate().map(|(i, &d)| (i as u64, d as u64))
    }

    pub fn len(&self) -> usize {
        self.dist.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dist.is_empty()
    }
}

/// BFS from a source vertex. The graphs are connected, so the table covers
/// every vertex.
pub fn bfs_from<V: GraphVertex>(source: &V, cap: u64) -> Result<DistanceTable, SizeError> {
    let params = source.params();
    let count = params.vertex_count_capped(V::KIND, cap)?;
    let mut dist = vec![UNSEEN; count as usize];
    let src = rank(source);
    dist[src as usize] = 0;
    let mut queue = std::collections::VecDeque::new();
    queue.push_back(src);
    let mut buf = Vec::with_capacity(2 * params.len());
    while let Some(x) = queue.pop_front() {
        let dx = dist[x as usize];
        neighbor_ranks::<V>(params, x, &mut buf);
        for &y in &buf {
            if dist[y as usize] == UNSEEN {
                dist[y as usize] = dx + 1;
                queue.push_back(y);
            }
        }
    }
    Ok(DistanceTable {
        params,
        kind: V::KIND,
        source: src,
        dist,
    })
}

/// Exact geodesic distance between two vertices of the same graph.
pub fn bfs_distance<V: GraphVertex>(a: &V, b: &V, cap: u64) -> Result<u64, GraphError> {
    if a.params() != b.params() {
        return Err(VertexError::ParamMismatch(a.params(), b.params()).into());
    }
    let table = bfs_from(a, cap)?;
    Ok(table.get(b))
}

/// How the diameter is computed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiameterMode {
    /// One BFS per source; works for any graph.
    AllSources,
    /// Valid for yoke graphs only: the shift action is transitive, so every
    /// vertex has the same eccentricity and ecc(0) suffices.
    Transitive,
}

/// Diameter by exhaustive BFS. `Transitive` mode is rejected for dyoke
/// graphs, which are not vertex-transitive.
pub fn bfs_diameter<V: GraphVertex>(
    params: GraphParams,
    mode: DiameterMode,
    cap: u64,
) -> Result<u64, SizeError> {
    let count = params.vertex_count_capped(V::KIND, cap)?;
    match mode {
        DiameterMode::Transitive => {
            assert_eq!(
                V::KIND,
                Kind::Yoke,
                "transitive shortcut only applies to yoke graphs"
            );
            let zero: V = unrank(params, rank_of_zero(params));
            Ok(bfs_from(&zero, cap)?.eccentricity().0)
        }
        DiameterMode::AllSources => {
            let mut best = 0;
            for i in 0..count {
                let v: V = unrank(params, i);
                let ecc = bfs_from(&v, cap)?.eccentricity().0;
                best = best.max(ecc);
            }
            Ok(best)
        }
    }
}

fn rank_of_zero(_params: GraphParams) -> u64 {
    0
}

/// BFS from a source keeping, for every vertex, all predecessors on
/// geodesics toward the source. Used to enumerate geodesic words.
pub struct GeodesicDag {
    pub table: DistanceTable,
    /// preds[v] = ranks u with dist(u) = dist(v) - 1 and u ~ v.
    pub preds: Vec<Vec<u64>>,
}

pub fn bfs_dag<V: GraphVertex>(source: &V, cap: u64) -> Result<GeodesicDag, SizeError> {
    let table = bfs_from(source, cap)?;
    let params = table.params;
    let n = table.len() as u64;
    let mut preds = vec![Vec::new(); n as usize];
    let mut buf = Vec::new();
    for v in 0..n {
        let dv = table.get_rank(v);
        neighbor_ranks::<V>(params, v, &mut buf);
        for &u in &buf {
            if table.get_rank(u) + 1 == dv {
                preds[v as usize].push(u);
            }
        }
        preds[v as usize].sort_unstable();
    }
    Ok(GeodesicDag { table, preds })
}

/// Undirected edge list as rank pairs (a < b), in deterministic order, with
/// the first witnessing move of each edge.
pub fn edge_list<V: GraphVertex>(
    params: GraphParams,
    cap: u64,
) -> Result<Vec<(u64, u64, Move)>, SizeError> {
    let count = params.vertex_count_capped(V::KIND, cap)?;
    let mut edges = Vec::new();
    for i in 0..count {
        let v: V = unrank(params, i);
        for nb in neighbors(&v) {
            let j = rank(&nb.vertex);
            if i < j {
                edges.push((i, j, nb.moves[0]));
            }
        }
    }
    Ok(edges)
}

/// Check that BFS from 0 reaches all vertices.
pub fn is_connected<V: GraphVertex>(params: GraphParams, cap: u64) -> Result<bool, SizeError> {
    let zero: V = unrank(params, 0);
    debug_assert!(zero.is_zero());
    let table = bfs_from(&zero, cap)?;
    let connected = table.iter().all(|(_, d)| d != UNSEEN as u64);
    Ok(connected)
}

fn dot_label<V: GraphVertex>(v: &V) -> String {
    let parts: Vec<String> = v.entries().iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(" "))
}

/// Deterministic DOT export: one node per vertex labeled "(v0 v1 ... v_{m+1})",
/// undirected edges in rank order.
pub fn export_dot<V: GraphVertex, W: Write>(
    params: GraphParams,
    cap: u64,
    out: &mut W,
) -> Result<(), GraphError> {
    let count = params.vertex_count_capped(V::KIND, cap)?;
    writeln!(out, "graph {{")?;
    for i in 0..count {
        let v: V = unrank(params, i);
        writeln!(out, "  v{} [label=\"{}\"];", i, dot_label(&v))?;
    }
    for (a, b, _) in edge_list::<V>(params, cap)? {
        writeln!(out, "  v{} -- v{};", a, b)?;
    }
    writeln!(out, "}}")?;
    Ok(())
}

/// Deterministic JSON-lines edge list: one object per edge
/// {"a": [...], "b": [...], "i": shift index}.
pub fn export_jsonl<V: GraphVertex, W: Write>(
    params: GraphParams,
    cap: u64,
    out: &mut W,
) -> Result<(), GraphError> {
    for (a, b, mv) in edge_list::<V>(params, cap)? {
        let va: V = unrank(params, a);
        let vb: V = unrank(params, b);
        let line = serde_json::json!({
            "a": va.entries(),
            "b": vb.entries(),
            "i": mv.index,
        });
        writeln!(out, "{}", line)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::DEFAULT_VERTEX_CAP as CAP;
    use crate::vertex::{DYokeVertex, YokeVertex};

    fn params(n: u64, m: u64) -> GraphParams {
        GraphParams::new(n, m).unwrap()
    }

    #[test]
    fn enumeration_counts_match() {
        let vs: Vec<YokeVertex> = enumerate_vertices(params(3, 3), CAP).unwrap().collect();
        assert_eq!(vs.len(), 24);
        let zs: Vec<DYokeVertex> = enumerate_vertices(params(3, 3), CAP).unwrap().collect();
        assert_eq!(zs.len(), 81);
        let ys: Vec<YokeVertex> = enumerate_vertices(params(1, 1), CAP).unwrap().collect();
        assert_eq!(ys.len(), 2);
    }

    #[test]
    fn enumeration_is_lexicographic_and_ranked() {
        let vs: Vec<YokeVertex> = enumerate_vertices(params(3, 2), CAP).unwrap().collect();
        for (i, v) in vs.iter().enumerate() {
            assert_eq!(rank(v), i as u64);
        }
        for w in vs.windows(2) {
            let a = &w[0].entries()[..3];
            let b = &w[1].entries()[..3];
            assert!(a < b);
        }
    }

    #[test]
    fn neighbors_of_zero_in_y33() {
        let zero = YokeVertex::zero(params(3, 3));
        let nbs = neighbors(&zero);
        let got: Vec<&[i64]> = nbs.iter().map(|nb| nb.vertex.entries()).collect();
        assert_eq!(got, vec![&[2, 1, 0, 0, 0][..], &[0, 0, 0, 1, 2][..]]);
    }

    #[test]
    fn isolated_vertex_y10() {
        let zero = YokeVertex::zero(params(1, 0));
        assert!(neighbors(&zero).is_empty());
    }

    #[test]
    fn parallel_moves_collapse_in_y20() {
        let zero = YokeVertex::zero(params(2, 0));
        let nbs = neighbors(&zero);
        assert_eq!(nbs.len(), 1);
        assert_eq!(nbs[0].vertex.entries(), &[1, 1]);
        assert_eq!(nbs[0].moves, vec![Move::left(0), Move::right(0)]);
    }

    #[test]
    fn adjacency_is_symmetric() {
        for (n, m) in [(1, 3), (2, 2), (3, 3), (4, 1), (5, 0)] {
            let p = params(n, m);
            for v in enumerate_vertices::<DYokeVertex>(p, CAP).unwrap() {
                for nb in neighbors(&v) {
                    let back = neighbors(&nb.vertex);
                    assert!(back.iter().any(|x| x.vertex == v));
                    for &mv in &nb.moves {
                        assert_eq!(try_shift(&nb.vertex, mv.reverse()).unwrap(), v);
                    }
                }
            }
        }
    }

    /// Quadratic cross-check of the neighbor enumeration against the raw
    /// adjacency predicate (one unit shift between adjacent entries).
    #[test]
    fn neighbors_match_adjacency_predicate() {
        fn adjacent(p: GraphParams, a: &[i64], b: &[i64]) -> bool {
            let last = p.len() - 1;
            (0..=p.m as usize).any(|i| {
                (0..p.len()).all(|j| {
                    let (da, db) = (a[j], b[j]);
                    let diff = if j == 0 || j == last {
                        p.reduce(db - da)
                    } else {
                        db - da
                    };
                    if j == i {
                        diff == 1 || diff == p.reduce(-1)
                    } else if j == i + 1 {
                        let di = if i == 0 || i == last {
                            p.reduce(b[i] - a[i])
                        } else {
                            b[i] - a[i]
                        };
                        // entry i+1 moves opposite to entry i
                        p.reduce(di + diff) == 0 && diff != 0
                    } else {
                        da == db
                    }
                })
            }) && a != b
        }
        for (n, m) in [(3, 2), (2, 3), (4, 1)] {
            let p = params(n, m);
            let vs: Vec<DYokeVertex> = enumerate_vertices(p, CAP).unwrap().collect();
            for v in &vs {
                let nb: Vec<_> = neighbors(v).into_iter().map(|x| x.vertex).collect();
                for u in &vs {
                    let listed = nb.contains(u);
                    let pred = adjacent(p, v.entries(), u.entries());
                    assert_eq!(listed, pred, "v={} u={}", v, u);
                }
            }
        }
    }

    #[test]
    fn connectivity() {
        for (n, m) in [(1, 0), (1, 5), (2, 4), (3, 3), (6, 0), (5, 2)] {
            assert!(is_connected::<YokeVertex>(params(n, m), CAP).unwrap());
            assert!(is_connected::<DYokeVertex>(params(n, m), CAP).unwrap());
        }
    }

    #[test]
    fn cycles_for_small_m() {
        // Y(n,0) with n>2 is an n-cycle; Y(n,1) with n>1 is a 2n-cycle.
        for n in 3..10 {
            let p = params(n, 0);
            for v in enumerate_vertices::<YokeVertex>(p, CAP).unwrap() {
                assert_eq!(neighbors(&v).len(), 2);
            }
            assert!(is_connected::<YokeVertex>(p, CAP).unwrap());
        }
        for n in 2..8 {
            let p = params(n, 1);
            let vs: Vec<YokeVertex> = enumerate_vertices(p, CAP).unwrap().collect();
            assert_eq!(vs.len() as u64, 2 * n);
            for v in &vs {
                assert_eq!(neighbors(v).len(), 2);
            }
            assert!(is_connected::<YokeVertex>(p, CAP).unwrap());
        }
    }

    #[test]
    fn bfs_worked_examples() {
        // Y(1,3): farthest vertex from 0 is (0,1,1,1,0) at distance 4.
        let p = params(1, 3);
        let table = bfs_from(&YokeVertex::zero(p), CAP).unwrap();
        let (ecc, at) = table.eccentricity();
        assert_eq!(ecc, 4);
        let far: YokeVertex = unrank(p, at);
        assert_eq!(far.entries(), &[0, 1, 1, 1, 0]);

        // Y(6,0) is a 6-cycle: ecc(0) = 3.
        let table = bfs_from(&YokeVertex::zero(params(6, 0)), CAP).unwrap();
        assert_eq!(table.eccentricity().0, 3);

        let p = params(3, 3);
        let v = YokeVertex::new(p, &[2, 0, 1, 1, 2]).unwrap();
        assert_eq!(bfs_distance(&v, &YokeVertex::zero(p), CAP).unwrap(), 3);
        assert_eq!(bfs_distance(&v, &v, CAP).unwrap(), 0);
        let far = YokeVertex::new(p, &[0, 1, 1, 1, 0]).unwrap();
        assert_eq!(bfs_distance(&YokeVertex::zero(p), &far, CAP).unwrap(), 6);
    }

    #[test]
    fn diameter_modes_agree() {
        for (n, m, want) in [(3, 3, 6), (2, 0, 1), (4, 2, 6), (1, 1, 1)] {
            let p = params(n, m);
            let naive = bfs_diameter::<YokeVertex>(p, DiameterMode::AllSources, CAP).unwrap();
            let fast = bfs_diameter::<YokeVertex>(p, DiameterMode::Transitive, CAP).unwrap();
            assert_eq!(naive, want);
            assert_eq!(fast, want);
        }
    }

    #[test]
    fn export_shapes() {
        let p = params(3, 3);
        let mut dot = Vec::new();
        export_dot::<YokeVertex, _>(p, CAP, &mut dot).unwrap();
        let text = String::from_utf8(dot).unwrap();
        assert_eq!(text.matches("label=").count(), 24);
        assert_eq!(text.matches(" -- ").count(), 36);

        let mut dot2 = Vec::new();
        export_dot::<YokeVertex, _>(p, CAP, &mut dot2).unwrap();
        assert_eq!(text.as_bytes(), dot2.as_slice());

        let mut jl = Vec::new();
        export_jsonl::<YokeVertex, _>(params(1, 1), CAP, &mut jl).unwrap();
        let lines: Vec<&str> = std::str::from_utf8(&jl).unwrap().trim().lines().collect();
        assert_eq!(lines.len(), 1);
        let v: serde_json::Value = serde_json::from_str(lines[0]).unwrap();
        assert!(v.get("a").is_some() && v.get("b").is_some() && v.get("i").is_some());
    }
}
