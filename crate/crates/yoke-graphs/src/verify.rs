//! Exhaustive and randomized verification suites.
//!
//! Every closed form in the crate is cross-checked here against an
//! independent search oracle on small instances: BFS for all metric
//! claims, backtracking enumeration for automorphisms, native family
//! enumeration for the bijections, and a box-restricted BFS for the
//! dominance order. Each check returns Ok(summary) or Err(counterexample).

use crate::actions::{check_coxeter_relations, check_transitivity, check_unique_edge_generator};
use crate::automorphisms::{
    all_elements, brute_force_automorphisms, element_permutation, full_aut_structure,
    generated_group_structure, AutError, VertexPermutation,
};
use crate::dominance::{
    chi, dominates, hasse_distance_bfs_oracle, hasse_distance_dom, interval_isomorphism_check,
    join_dom, meet_dom, modular_distance_identity_check, rank_dom, rank_step_along_edges,
};
use crate::families::{
    arc_permutations, arcperm_flips, arcperm_to_yoke, caterpillar_flips, caterpillar_ordering,
    caterpillar_to_yoke, caterpillars, colored_tfts, ctft_flips, ctft_to_yoke, yoke_to_arcperm,
    yoke_to_caterpillar, yoke_to_ctft, ArcPermutation, Caterpillar, ColoredTriangulation,
};
use crate::graph::{
    bfs_diameter, bfs_from, enumerate_vertices, neighbors, rank, unrank, DiameterMode,
};
use crate::params::{GraphParams, Kind};
use crate::pivots::{diameter_formula, dist_to_zero_closed_form, ecc_zero_formula};
use crate::vertex::{try_shift, vertex_difference, DYokeVertex, Dir, GraphVertex, Move, YokeVertex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type Check = Result<String, String>;

/// Bounds and seeds for the suites.
#[derive(Debug, Clone, Copy)]
pub struct VerifyOptions {
    /// Per-graph vertex ceiling for exhaustive checks.
    pub max_vertices: u64,
    /// Vertex ceiling for the brute-force automorphism search.
    pub brute_cap: u64,
    /// Largest polygon size for the family suites.
    pub max_n: u64,
    /// Seed for the randomized dominance checks.
    pub seed: u64,
    /// Number of fuzzed pairs for the dominance identity.
    pub fuzz_iters: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            max_vertices: 4096,
            brute_cap: 256,
            max_n: 7,
            seed: 0x59_4f_4b_45,
            fuzz_iters: 2000,
        }
    }
}

/// The (n, m) grid used by the exhaustive suites, filtered by a vertex cap.
pub fn param_grid(kind: Kind, max_vertices: u64) -> Vec<GraphParams> {
    let mut out = Vec::new();
    for n in 1..=8 {
        for m in 0..=9 {
            let p = GraphParams::new(n, m).unwrap();
            if p.vertex_count_capped(kind, max_vertices).is_ok() {
                out.push(p);
            }
        }
    }
    // A few longer cycles to exercise the m <= 1 regime.
    for n in [12, 16, 25, 32] {
        for m in 0..=1 {
            let p = GraphParams::new(n, m).unwrap();
            if p.vertex_count_capped(kind, max_vertices).is_ok() {
                out.push(p);
            }
        }
    }
    out
}

fn cap_for(params: GraphParams, kind: Kind) -> u64 {
    params.vertex_count(kind).unwrap_or(u64::MAX)
}

// ---------------------------------------------------------------- core --

/// Neighbor enumeration agrees with the raw adjacency predicate, is
/// symmetric, and the graphs are connected with the right cycle shapes.
pub fn check_core(opts: VerifyOptions) -> Check {
    let mut graphs = 0u64;
    for p in param_grid(Kind::DYoke, opts.max_vertices.min(512)) {
        let cap = cap_for(p, Kind::DYoke);
        let vs: Vec<DYokeVertex> = enumerate_vertices(p, cap).map_err(|e| e.to_string())?.collect();
        for v in &vs {
            for nb in neighbors(v) {
                if !neighbors(&nb.vertex).iter().any(|x| x.vertex == *v) {
                    return Err(format!("asymmetric adjacency at Z{} vertex {}", p, v));
                }
                for &mv in &nb.moves {
                    if try_shift(&nb.vertex, mv.reverse()).as_ref() != Some(v) {
                        return Err(format!("move {} at Z{} {} does not reverse", mv, p, v));
                    }
                }
            }
        }
        graphs += 1;
    }
    for p in param_grid(Kind::Yoke, opts.max_vertices) {
        let cap = cap_for(p, Kind::Yoke);
        if !crate::graph::is_connected::<YokeVertex>(p, cap).map_err(|e| e.to_string())? {
            return Err(format!("Y{} is not connected", p));
        }
        if (p.m == 0 && p.n > 2) || (p.m == 1 && p.n > 1) {
            for v in enumerate_vertices::<YokeVertex>(p, cap).map_err(|e| e.to_string())? {
                if neighbors(&v).len() != 2 {
                    return Err(format!("Y{} should be a cycle; {} has degree != 2", p, v));
                }
            }
        }
        graphs += 1;
    }
    Ok(format!("core invariants hold on {graphs} graphs"))
}

/// d_Y(v, u) = d_Z(v - u, 0) for all pairs, graphs up to the cap.
pub fn check_difference_map(max_vertices: u64) -> Check {
    let mut pairs = 0u64;
    for p in param_grid(Kind::Yoke, max_vertices) {
        let cap_y = cap_for(p, Kind::Yoke);
        let cap_z = cap_for(p, Kind::DYoke);
        let z_table = bfs_from(&DYokeVertex::zero(p), cap_z).map_err(|e| e.to_string())?;
        let verts: Vec<YokeVertex> =
            enumerate_vertices(p, cap_y).map_err(|e| e.to_string())?.collect();
        for u in &verts {
            let y_table = bfs_from(u, cap_y).map_err(|e| e.to_string())?;
            for v in &verts {
                let diff = vertex_difference(v, u).map_err(|e| e.to_string())?;
                if y_table.get(v) != z_table.get(&diff) {
                    return Err(format!(
                        "d_Y({v},{u}) = {} but d_Z({diff},0) = {} at {p}",
                        y_table.get(v),
                        z_table.get(&diff)
                    ));
                }
                pairs += 1;
            }
        }
    }
    Ok(format!("difference-map reduction holds on {pairs} pairs"))
}

// -------------------------------------------------------------- pivots --

/// Closed-form distance to 0 equals BFS on every vertex of every graph in
/// the grid.
pub fn check_dist_closed_form(max_vertices: u64) -> Check {
    let mut checked = 0u64;
    for p in param_grid(Kind::Yoke, max_vertices) {
        let cap = cap_for(p, Kind::Yoke);
        let table = bfs_from(&YokeVertex::zero(p), cap).map_err(|e| e.to_string())?;
        for v in enumerate_vertices::<YokeVertex>(p, cap).map_err(|e| e.to_string())? {
            let (formula, _) = dist_to_zero_closed_form(&v);
            if formula != table.get(&v) {
                return Err(format!(
                    "dist formula {} != BFS {} at Y{} vertex {}",
                    formula,
                    table.get(&v),
                    p,
                    v
                ));
            }
            checked += 1;
        }
    }
    Ok(format!("closed-form distance matches BFS on {checked} vertices"))
}

/// Eccentricity formula equals BFS eccentricity of 0 for both kinds, and
/// ecc(0) >= floor(n(m+1)/2).
pub fn check_ecc_formula(max_y: u64, max_z: u64) -> Check {
    let mut cells = 0u64;
    for p in param_grid(Kind::Yoke, max_y) {
        let want = ecc_zero_formula(p);
        let ecc = bfs_from(&YokeVertex::zero(p), cap_for(p, Kind::Yoke))
            .map_err(|e| e.to_string())?
            .eccentricity()
            .0;
        if ecc != want {
            return Err(format!("ecc_Y{}(0): formula {want} != BFS {ecc}", p));
        }
        if ecc < p.n * (p.m + 1) / 2 {
            return Err(format!("ecc_Y{}(0) = {ecc} below floor(n(m+1)/2)", p));
        }
        cells += 1;
    }
    for p in param_grid(Kind::DYoke, max_z) {
        let want = ecc_zero_formula(p);
        let ecc = bfs_from(&DYokeVertex::zero(p), cap_for(p, Kind::DYoke))
            .map_err(|e| e.to_string())?
            .eccentricity()
            .0;
        if ecc != want {
            return Err(format!("ecc_Z{}(0): formula {want} != BFS {ecc}", p));
        }
        cells += 1;
    }
    Ok(format!("eccentricity formula matches BFS on {cells} graphs"))
}

/// Diameter formula equals all-pairs BFS (and the transitive shortcut).
pub fn check_diameter(max_vertices: u64) -> Check {
    let mut cells = 0u64;
    for p in param_grid(Kind::Yoke, max_vertices) {
        let cap = cap_for(p, Kind::Yoke);
        let want = diameter_formula(p);
        let naive =
            bfs_diameter::<YokeVertex>(p, DiameterMode::AllSources, cap).map_err(|e| e.to_string())?;
        let fast =
            bfs_diameter::<YokeVertex>(p, DiameterMode::Transitive, cap).map_err(|e| e.to_string())?;
        if naive != want || fast != naive {
            return Err(format!(
                "diam Y{}: formula {want}, all-sources {naive}, transitive {fast}",
                p
            ));
        }
        cells += 1;
    }
    Ok(format!("diameter formula matches all-pairs BFS on {cells} graphs"))
}

// ------------------------------------------------------------- coxeter --

pub fn check_coxeter(max_vertices: u64) -> Check {
    let mut cells = 0u64;
    for p in param_grid(Kind::Yoke, max_vertices) {
        if p.m < 2 {
            continue;
        }
        let cap = cap_for(p, Kind::Yoke);
        let report = check_coxeter_relations(p, cap).map_err(|e| e.to_string())?;
        if !report.ok() {
            return Err(format!(
                "Coxeter relations fail at Y{}: {:?} (orbit-4: {})",
                p, report.violations, report.orbits_of_size_four
            ));
        }
        cells += 1;
    }
    for p in param_grid(Kind::Yoke, max_vertices) {
        let cap = cap_for(p, Kind::Yoke);
        if !check_transitivity(p, cap).map_err(|e| e.to_string())? {
            return Err(format!("shift action not transitive on Y{}", p));
        }
        if p.m >= 1 {
            if let Some(msg) = check_unique_edge_generator(p, cap).map_err(|e| e.to_string())? {
                return Err(format!("Y{}: {msg}", p));
            }
        }
    }
    Ok(format!(
        "Coxeter relations and orbit sizes hold on {cells} graphs (m >= 2)"
    ))
}

// ----------------------------------------------------------------- aut --

/// Brute-force automorphism counts match the theorem orders on the listed
/// instances.
pub fn check_aut_counts(brute_cap: u64) -> Check {
    let mut cases: Vec<(GraphParams, u64)> = vec![
        (GraphParams::new(1, 3).unwrap(), 16),
        (GraphParams::new(1, 4).unwrap(), 4),
        (GraphParams::new(2, 4).unwrap(), 8),
        (GraphParams::new(3, 3).unwrap(), 12),
    ];
    for n in 3..=8 {
        cases.push((GraphParams::new(n, 0).unwrap(), 2 * n));
    }
    for (p, want) in cases {
        let auts = brute_force_automorphisms(p, brute_cap).map_err(|e| e.to_string())?;
        if auts.len() as u64 != want {
            return Err(format!("|aut(Y{})| = {} != {want}", p, auts.len()));
        }
        if let Ok(structure) = full_aut_structure(p) {
            if structure.order() != want {
                return Err(format!(
                    "structure {structure} order {} != brute count {want} at Y{}",
                    structure.order(),
                    p
                ));
            }
        }
    }
    Ok("brute-force automorphism counts match the theorem orders".into())
}

/// Every brute-force automorphism equals some canonical phi^k tau^a psi^b
/// pointwise (except Y(1,3) and m = 2, which have extra structure).
pub fn check_aut_canonical(brute_cap: u64) -> Check {
    let grid: Vec<(u64, u64)> = vec![
        (1, 1),
        (1, 4),
        (1, 5),
        (2, 1),
        (2, 3),
        (2, 4),
        (3, 1),
        (3, 3),
        (4, 0),
        (4, 3),
        (5, 0),
        (6, 0),
        (2, 5),
        (5, 1),
    ];
    for (n, m) in grid {
        let p = GraphParams::new(n, m).unwrap();
        if p.vertex_count(Kind::Yoke).unwrap_or(u64::MAX) > brute_cap {
            continue;
        }
        let brute = brute_force_automorphisms(p, brute_cap).map_err(|e| e.to_string())?;
        let mut canonical: Vec<VertexPermutation> = all_elements(p)
            .into_iter()
            .map(|g| element_permutation(g, p, brute_cap))
            .collect::<Result<_, AutError>>()
            .map_err(|e| e.to_string())?;
        canonical.sort();
        canonical.dedup();
        if brute != canonical {
            return Err(format!(
                "aut(Y{}) has {} elements but A(n,m) yields {}",
                p,
                brute.len(),
                canonical.len()
            ));
        }
        let structure = generated_group_structure(p);
        if p.m > 0 && (p.n, p.m) != (1, 1) && canonical.len() as u64 != 4 * p.n {
            return Err(format!("|A{}| = {} != 4n", p, canonical.len()));
        }
        if structure.order() != canonical.len() as u64 {
            return Err(format!(
                "structure {structure} order {} != |A{}| = {}",
                structure.order(),
                p,
                canonical.len()
            ));
        }
    }
    Ok("every brute-force automorphism is a canonical element (m != 2, not Y(1,3))".into())
}

/// The defining relations hold pointwise on every vertex.
pub fn check_group_relations(max_vertices: u64) -> Check {
    use crate::automorphisms::{apply_phi, apply_psi, apply_tau};
    let mut cells = 0u64;
    for p in param_grid(Kind::Yoke, max_vertices.min(1024)) {
        let cap = cap_for(p, Kind::Yoke);
        for v in enumerate_vertices::<YokeVertex>(p, cap).map_err(|e| e.to_string())? {
            // (tau psi)^2 = phi^m
            let mut w = apply_tau(&apply_psi(&v));
            w = apply_tau(&apply_psi(&w));
            let mut phim = v.clone();
            for _ in 0..p.m {
                phim = apply_phi(&phim);
            }
            if w != phim {
                return Err(format!("(tau psi)^2 != phi^m at Y{} vertex {}", p, v));
            }
            // psi phi = phi^-1 psi and tau phi = phi^-1 tau
            let phi_inv = |x: &YokeVertex| {
                let mut y = x.clone();
                for _ in 0..p.n - 1 {
                    y = apply_phi(&y);
                }
                y
            };
            if apply_psi(&apply_phi(&v)) != phi_inv(&apply_psi(&v)) {
                return Err(format!("psi phi != phi^-1 psi at Y{} vertex {}", p, v));
            }
            if apply_tau(&apply_phi(&v)) != phi_inv(&apply_tau(&v)) {
                return Err(format!("tau phi != phi^-1 tau at Y{} vertex {}", p, v));
            }
        }
        cells += 1;
    }
    Ok(format!("group relations hold pointwise on {cells} graphs"))
}

// ------------------------------------------------------------ families --

pub fn check_families(max_n: u64) -> Check {
    // Worked examples, byte-exact.
    let f4321 = arcperm_to_yoke(&ArcPermutation::parse("4321").map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    if f4321.to_string() != "3,0,0,1" {
        return Err(format!("f(4321) = {} != 3,0,0,1", f4321));
    }
    let t = ColoredTriangulation::new(8, vec![(6, 0), (6, 1), (6, 2), (5, 2), (5, 3)])
        .map_err(|e| e.to_string())?;
    let gt = ctft_to_yoke(&t).map_err(|e| e.to_string())?;
    if gt.to_string() != "7,1,1,0,1,6" {
        return Err(format!("g(T) = {} != 7,1,1,0,1,6", gt));
    }
    let c = Caterpillar::new(8, vec![(7, 0), (0, 1), (1, 2), (5, 0), (0, 4), (1, 3), (6, 0)])
        .map_err(|e| e.to_string())?;
    if caterpillar_ordering(&c) != vec![7, 6, 5, 4, 1, 3] {
        return Err(format!("S(C) = {:?} != [7,6,5,4,1,3]", caterpillar_ordering(&c)));
    }
    let hc = caterpillar_to_yoke(&c).map_err(|e| e.to_string())?;
    if hc.to_string() != "7,1,1,1,0,1,5" {
        return Err(format!("h(C) = {} != 7,1,1,1,0,1,5", hc));
    }

    let mut families = 0u64;
    // Arc permutations: Y(n, n-2), n >= 2.
    for n in 2..=max_n {
        let p = GraphParams::new(n, n - 2).unwrap();
        let objs = arc_permutations(n).map_err(|e| e.to_string())?;
        family_bijection_check(p, &objs, |o| arcperm_to_yoke(o).map_err(|e| e.to_string()), |v| {
            yoke_to_arcperm(v).map_err(|e| e.to_string())
        })?;
        family_edges_check(p, &objs, |o| arcperm_to_yoke(o).map_err(|e| e.to_string()), |o| {
            Ok(arcperm_flips(o).into_iter().map(|x| x.1).collect())
        })?;
        families += 1;
    }
    // Colored triangle-free triangulations: Y(n, n-4), n >= 5.
    for n in 5..=max_n {
        let p = GraphParams::new(n, n - 4).unwrap();
        let objs = colored_tfts(n).map_err(|e| e.to_string())?;
        family_bijection_check(p, &objs, |o| ctft_to_yoke(o).map_err(|e| e.to_string()), |v| {
            yoke_to_ctft(v).map_err(|e| e.to_string())
        })?;
        family_edges_check(p, &objs, |o| ctft_to_yoke(o).map_err(|e| e.to_string()), |o| {
            Ok(ctft_flips(o).into_iter().map(|x| x.1).collect())
        })?;
        families += 1;
    }
    // Caterpillars: Y(n, n-3), n >= 4.
    for n in 4..=max_n {
        let p = GraphParams::new(n, n - 3).unwrap();
        let objs = caterpillars(n).map_err(|e| e.to_string())?;
        family_bijection_check(p, &objs, |o| caterpillar_to_yoke(o).map_err(|e| e.to_string()), |v| {
            yoke_to_caterpillar(v).map_err(|e| e.to_string())
        })?;
        family_edges_check(p, &objs, |o| caterpillar_to_yoke(o).map_err(|e| e.to_string()), |o| {
            Ok(caterpillar_flips(o))
        })?;
        families += 1;
    }
    Ok(format!(
        "bijections and flip edge sets verified for {families} family instances (n <= {max_n})"
    ))
}

fn family_bijection_check<T: PartialEq + std::fmt::Debug>(
    params: GraphParams,
    objs: &[T],
    to_yoke: impl Fn(&T) -> Result<YokeVertex, String>,
    from_yoke: impl Fn(&YokeVertex) -> Result<T, String>,
) -> Result<(), String> {
    let count = params.vertex_count(Kind::Yoke).map_err(|e| e.to_string())?;
    if objs.len() as u64 != count {
        return Err(format!(
            "family has {} objects but Y{} has {count} vertices",
            objs.len(),
            params
        ));
    }
    let mut seen = vec![false; count as usize];
    for o in objs {
        let v = to_yoke(o)?;
        let r = rank(&v) as usize;
        if seen[r] {
            return Err(format!("map is not injective at Y{} vertex {}", params, v));
        }
        seen[r] = true;
        let back = from_yoke(&v)?;
        if &back != o {
            return Err(format!("roundtrip failed at Y{} vertex {}", params, v));
        }
    }
    Ok(())
}

fn family_edges_check<T>(
    params: GraphParams,
    objs: &[T],
    to_yoke: impl Fn(&T) -> Result<YokeVertex, String>,
    flips: impl Fn(&T) -> Result<Vec<T>, String>,
) -> Result<(), String> {
    let cap = cap_for(params, Kind::Yoke);
    let mut family_edges = std::collections::BTreeSet::new();
    for o in objs {
        let v = rank(&to_yoke(o)?);
        for f in flips(o)? {
            let u = rank(&to_yoke(&f)?);
            if u == v {
                return Err(format!("flip fixes Y{} vertex rank {v}", params));
            }
            family_edges.insert((v.min(u), v.max(u)));
        }
    }
    let mut yoke_edges = std::collections::BTreeSet::new();
    for (a, b, _) in crate::graph::edge_list::<YokeVertex>(params, cap).map_err(|e| e.to_string())? {
        yoke_edges.insert((a, b));
    }
    if family_edges != yoke_edges {
        let extra: Vec<_> = family_edges.difference(&yoke_edges).take(3).collect();
        let missing: Vec<_> = yoke_edges.difference(&family_edges).take(3).collect();
        return Err(format!(
            "edge sets differ at Y{}: extra {:?}, missing {:?}",
            params, extra, missing
        ));
    }
    Ok(())
}

// ----------------------------------------------------------- dominance --

/// Random vector in Z^k with entries in [-3, 3].
fn random_vec(rng: &mut ChaCha8Rng, k: usize) -> Vec<i64> {
    (0..k).map(|_| rng.gen_range(-3..=3)).collect()
}

pub fn check_dominance_fuzz(seed: u64, iters: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut oracle_checked = 0u64;
    for it in 0..iters {
        let k = rng.gen_range(1..=6);
        let u = random_vec(&mut rng, k);
        let v = random_vec(&mut rng, k);
        if !modular_distance_identity_check(&u, &v).map_err(|e| e.to_string())? {
            return Err(format!("modular identity fails for {:?}, {:?}", u, v));
        }
        // Lattice axioms.
        let meet = meet_dom(&u, &v).map_err(|e| e.to_string())?;
        let join = join_dom(&u, &v).map_err(|e| e.to_string())?;
        if !dominates(&u, &meet).unwrap()
            || !dominates(&v, &meet).unwrap()
            || !dominates(&join, &u).unwrap()
            || !dominates(&join, &v).unwrap()
        {
            return Err(format!("meet/join not bounds for {:?}, {:?}", u, v));
        }
        if meet_dom(&u, &u).unwrap() != u || join_dom(&v, &v).unwrap() != v {
            return Err("meet/join not idempotent".into());
        }
        if rank_dom(&join) - rank_dom(&meet)
            != hasse_distance_dom(&u, &v).unwrap() as i64
        {
            return Err(format!("rank difference mismatch for {:?}, {:?}", u, v));
        }
        // Box BFS oracle on a subsample (it is the expensive part).
        if it % 10 == 0 && k <= 4 {
            let bfs = hasse_distance_bfs_oracle(&u, &v, 1).map_err(|e| e.to_string())?;
            if bfs != hasse_distance_dom(&u, &v).unwrap() {
                return Err(format!(
                    "BFS oracle {bfs} != formula {} for {:?}, {:?}",
                    hasse_distance_dom(&u, &v).unwrap(),
                    u,
                    v
                ));
            }
            oracle_checked += 1;
        }
    }
    Ok(format!(
        "dominance identity holds on {iters} fuzzed pairs (seed {seed}, {oracle_checked} BFS-checked)"
    ))
}

/// The interval isomorphism I0 ~ I1 for all 2 <= m <= n under the cap, and
/// the rank steps along yoke edges (with the wrap-edge count).
pub fn check_dominance_intervals(max_vertices: u64) -> Check {
    let mut cells = 0u64;
    for n in 2..=256u64 {
        for m in 2..=n.min(12) {
            let p = GraphParams::new(n, m).unwrap();
            if p.vertex_count_capped(Kind::Yoke, max_vertices).is_err() {
                continue;
            }
            let cap = cap_for(p, Kind::Yoke);
            if !interval_isomorphism_check(p, cap).map_err(|e| e.to_string())? {
                return Err(format!("interval isomorphism fails at Y{}", p));
            }
            match rank_step_along_edges(p, cap).map_err(|e| e.to_string())? {
                Ok(wraps) => {
                    if wraps != 1 << (m - 1) {
                        return Err(format!(
                            "Y{}: {} wrap edges, expected {}",
                            p,
                            wraps,
                            1u64 << (m - 1)
                        ));
                    }
                }
                Err(msg) => return Err(format!("Y{}: {msg}", p)),
            }
            cells += 1;
        }
    }
    Ok(format!("interval isomorphism and rank steps hold on {cells} boxes"))
}

/// Random saturated chains of length <= floor(n(m+1)/2) in the box order
/// are geodesics in Y(n,m).
pub fn check_saturated_chains(seed: u64, chains_per_cell: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5a5a);
    let mut total = 0u64;
    for (n, m) in [(3u64, 2u64), (4, 2), (4, 3), (5, 3), (3, 3), (6, 2)] {
        let p = GraphParams::new(n, m).unwrap();
        let cap = cap_for(p, Kind::Yoke);
        let limit = n * (m + 1) / 2;
        for _ in 0..chains_per_cell {
            // Random box element as prefix, in chi space.
            let mut x = vec![0i64; m as usize + 1];
            x[0] = rng.gen_range(0..n as i64);
            for i in 1..=m as usize {
                x[i] = x[i - 1] + rng.gen_range(0..=1);
            }
            let start = x.clone();
            let len = rng.gen_range(0..=limit);
            let mut steps = 0;
            for _ in 0..len {
                // Cover moves: add 1 to one chi coordinate, staying in the box.
                let candidates: Vec<usize> = (0..=m as usize)
                    .filter(|&i| {
                        let mut y = x.clone();
                        y[i] += 1;
                        in_box(&y, p)
                    })
                    .collect();
                if candidates.is_empty() {
                    break;
                }
                let i = candidates[rng.gen_range(0..candidates.len())];
                x[i] += 1;
                steps += 1;
            }
            let v_start = prefix_vertex(p, &crate::dominance::chi_inv(&start));
            let v_end = prefix_vertex(p, &crate::dominance::chi_inv(&x));
            let d = crate::graph::bfs_distance(&v_start, &v_end, cap).map_err(|e| e.to_string())?;
            if d != steps {
                return Err(format!(
                    "saturated chain of length {steps} is not a geodesic (d = {d}) at Y{}",
                    p
                ));
            }
            total += 1;
        }
    }
    Ok(format!("{total} random saturated chains are geodesics"))
}

fn in_box(chi_coords: &[i64], p: GraphParams) -> bool {
    if chi_coords[0] < 0 || chi_coords[0] >= p.n as i64 {
        return false;
    }
    chi_coords
        .windows(2)
        .all(|w| w[1] - w[0] == 0 || w[1] - w[0] == 1)
}

fn prefix_vertex(p: GraphParams, prefix: &[i64]) -> YokeVertex {
    YokeVertex::new(p, prefix).expect("box element is a valid prefix")
}

/// chi is an isomorphism: u dominates v iff chi(v) <= chi(u) pointwise.
pub fn check_chi_isomorphism(seed: u64, iters: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xc41);
    for _ in 0..iters {
        let k = rng.gen_range(1..=6);
        let u = random_vec(&mut rng, k);
        let v = random_vec(&mut rng, k);
        let dom = dominates(&u, &v).unwrap();
        let cu = chi(&u);
        let cv = chi(&v);
        let pointwise = cv.iter().zip(&cu).all(|(a, b)| a <= b);
        if dom != pointwise {
            return Err(format!("chi order mismatch for {:?}, {:?}", u, v));
        }
        if crate::dominance::chi_inv(&cu) != u {
            return Err(format!("chi_inv . chi != id on {:?}", u));
        }
    }
    Ok(format!("chi isomorphism verified on {iters} fuzzed pairs"))
}

// ------------------------------------------------------------ geodesics --

/// Exact check over all geodesics ending at 0 via dynamic programming on
/// the BFS predecessor DAG: no geodesic uses both directions of the same
/// s_i (shift direction), and every geodesic word has a wall.
pub fn check_geodesic_structure<V: GraphVertex + crate::actions::GeneratorTarget>(
    params: GraphParams,
) -> Check {
    let cap = cap_for(params, V::KIND);
    let count = params.vertex_count(V::KIND).map_err(|e| e.to_string())?;
    let zero: V = unrank(params, 0);
    let dag = crate::graph::bfs_dag(&zero, cap).map_err(|e| e.to_string())?;
    let m = params.m as usize;

    // Labelled DAG edges toward 0: v -> u with the witnessing moves.
    let mut order: Vec<u64> = (0..count).collect();
    order.sort_by_key(|&v| dag.table.get_rank(v));
    let mut labels: Vec<Vec<(u64, Vec<Move>)>> = vec![Vec::new(); count as usize];
    for v in 0..count {
        let vert: V = unrank(params, v);
        for nb in neighbors(&vert) {
            let u = rank(&nb.vertex);
            if dag.table.get_rank(u) + 1 == dag.table.get_rank(v) {
                labels[v as usize].push((u, nb.moves.clone()));
            }
        }
    }

    // Shift direction: per index i, track (used left, used right) pairs
    // reachable along geodesics to 0.
    for i in 0..=m as u64 {
        let mut states: Vec<u8> = vec![0; count as usize]; // bitmask of reachable {00,01,10,11}
        states[0] = 1 << 0;
        debug_assert_eq!(dag.table.get_rank(0), 0);
        for &v in &order {
            if v == 0 {
                continue;
            }
            let mut acc = 0u8;
            for (u, moves) in &labels[v as usize] {
                let ustates = states[*u as usize];
                for &mv in moves {
                    let add = if mv.index == i {
                        match mv.dir {
                            Dir::Left => 0b01,
                            Dir::Right => 0b10,
                        }
                    } else {
                        0
                    };
                    for s in 0..4u8 {
                        if ustates >> s & 1 == 1 {
                            acc |= 1 << (s | add);
                        }
                    }
                }
            }
            states[v as usize] = acc;
            if acc >> 0b11 & 1 == 1 {
                let vert: V = unrank(params, v);
                return Err(format!(
                    "a geodesic from {} to 0 in {}{} uses both directions of s_{}",
                    vert,
                    if V::KIND == Kind::Yoke { "Y" } else { "Z" },
                    params,
                    i
                ));
            }
        }
    }

    // Walls: state = (set of indices used, used left-at-0, used right-at-m).
    // A wall-less word has every index used plus both outer certificates.
    let full: u32 = (1u32 << (m + 1)) - 1;
    let mut states: Vec<std::collections::HashSet<u32>> =
        vec![std::collections::HashSet::new(); count as usize];
    states[0].insert(0);
    for &v in &order {
        if v == 0 {
            continue;
        }
        let mut acc = std::collections::HashSet::new();
        for (u, moves) in &labels[v as usize] {
            for &mv in moves {
                let mut add = 1u32 << mv.index;
                if mv.index == 0 && mv.dir == Dir::Left {
                    add |= 1 << (m + 1);
                }
                if mv.index == m as u64 && mv.dir == Dir::Right {
                    add |= 1 << (m + 2);
                }
                for &s in &states[*u as usize] {
                    acc.insert(s | add);
                }
            }
        }
        let wall_less = full | 1 << (m + 1) | 1 << (m + 2);
        if acc.contains(&wall_less) {
            let vert: V = unrank(params, v);
            return Err(format!(
                "a geodesic from {} to 0 in {}{} has no wall",
                vert,
                if V::KIND == Kind::Yoke { "Y" } else { "Z" },
                params
            ));
        }
        states[v as usize] = acc;
    }

    Ok(format!(
        "shift direction and wall existence hold for all geodesics to 0 in {}{}",
        if V::KIND == Kind::Yoke { "Y" } else { "Z" },
        params
    ))
}

/// Geodesic structure on every graph up to the vertex bound.
pub fn check_geodesics_grid(max_vertices: u64) -> Check {
    let mut graphs = 0u64;
    for p in param_grid(Kind::Yoke, max_vertices) {
        check_geodesic_structure::<YokeVertex>(p)?;
        graphs += 1;
    }
    for p in param_grid(Kind::DYoke, max_vertices) {
        check_geodesic_structure::<DYokeVertex>(p)?;
        graphs += 1;
    }
    Ok(format!(
        "geodesic structure verified on {graphs} graphs (<= {max_vertices} vertices)"
    ))
}

// ---------------------------------------------------------------- suite --

/// Run a named suite; returns (check name, outcome) pairs.
pub fn run_suite(suite: &str, opts: VerifyOptions) -> Vec<(String, Check)> {
    let mut out: Vec<(String, Check)> = Vec::new();
    let mut push = |name: &str, check: Check| out.push((name.to_string(), check));
    let all = suite == "all";
    if all || suite == "core" {
        push("core/adjacency", check_core(opts));
        push(
            "core/difference-map",
            check_difference_map(opts.max_vertices.min(256)),
        );
        push(
            "core/geodesic-structure",
            check_geodesics_grid(opts.max_vertices.min(256)),
        );
    }
    if all || suite == "pivots" {
        push("pivots/dist-closed-form", check_dist_closed_form(opts.max_vertices));
        push(
            "pivots/ecc-zero",
            check_ecc_formula(opts.max_vertices, opts.max_vertices),
        );
        push(
            "pivots/diameter",
            check_diameter(opts.max_vertices.min(2048)),
        );
    }
    if all || suite == "coxeter" {
        push("coxeter/relations", check_coxeter(opts.max_vertices));
    }
    if all || suite == "aut" {
        push("aut/counts", check_aut_counts(opts.brute_cap.max(4096)));
        push("aut/canonical", check_aut_canonical(opts.brute_cap.max(512)));
        push(
            "aut/relations",
            check_group_relations(opts.max_vertices.min(1024)),
        );
    }
    if all || suite == "families" {
        push("families/bijections", check_families(opts.max_n));
    }
    if all || suite == "dominance" {
        push("dominance/chi", check_chi_isomorphism(opts.seed, opts.fuzz_iters));
        push(
            "dominance/modular-identity",
            check_dominance_fuzz(opts.seed, opts.fuzz_iters),
        );
        push(
            "dominance/intervals",
            check_dominance_intervals(opts.max_vertices.min(1024)),
        );
        push(
            "dominance/saturated-chains",
            check_saturated_chains(opts.seed, 50),
        );
    }
    out
}

/// Suite names accepted by [`run_suite`].
pub const SUITES: &[&str] = &[
    "all",
    "core",
    "pivots",
    "coxeter",
    "aut",
    "families",
    "dominance",
];
