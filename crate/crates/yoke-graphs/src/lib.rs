//! Yoke graphs Y(n,m) and dYoke graphs Z(n,m).
//!
//! A vertex of Y(n,m) is an integer sequence (v_0, ..., v_{m+1}) with two
//! mod-n buckets flanking m binary entries and total sum divisible by n;
//! edges move one unit between adjacent entries. Z(n,m) is the analogous
//! graph with middle entries in {-1, 0, 1}.
//!
//! The crate provides:
//!
//! * implicit-graph search (enumeration, BFS distances, all-pairs diameter),
//! * the pivot machinery with closed forms for distance to 0, the
//!   eccentricity of 0 and the diameter,
//! * the shift action s_0..s_m, its Coxeter relations and transitivity,
//! * the dominance order on Z^k and on P_n x P_2^m with rank, meet/join and
//!   Hasse-diagram distance,
//! * the automorphism group generated by the bucket rotation, reversal and
//!   complementation maps, plus a brute-force automorphism enumerator,
//! * bijections between Y(n,m) and three flip-graph families: colored
//!   triangle-free triangulations, arc permutations and geometric
//!   caterpillars,
//! * a verification harness cross-checking every closed form against
//!   exhaustive search on small instances.

pub mod actions;
pub mod automorphisms;
pub mod dominance;
pub mod families;
pub mod graph;
pub mod params;
pub mod pivots;
pub mod verify;
pub mod vertex;

pub use graph::{
    bfs_dag, bfs_diameter, bfs_distance, bfs_from, edge_list, enumerate_vertices, export_dot,
    export_jsonl, is_connected, neighbors, rank, unrank, DiameterMode, DistanceTable, GraphError,
    Neighbor,
};
pub use params::{GraphParams, Kind, SizeError, DEFAULT_BRUTE_FORCE_CAP, DEFAULT_VERTEX_CAP};
pub use vertex::{vertex_difference, DYokeVertex, Dir, GraphVertex, Move, VertexError, YokeVertex};
