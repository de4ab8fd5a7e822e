//! Three classical flip-graph families and their bijections onto yoke
//! graphs: colored triangle-free triangulations of a convex polygon
//! (Y(n, n-4)), arc permutations (Y(n, n-2)) and geometric caterpillars
//! (Y(n, n-3)). Each family carries its own native flip moves; the
//! bijections send flips exactly onto the unit-shift edges.

mod arcperm;
mod caterpillar;
mod ctft;

pub use arcperm::{
    arc_permutations, arcperm_flips, arcperm_to_yoke, is_arc_permutation, yoke_to_arcperm,
    ArcPermutation,
};
pub use caterpillar::{
    caterpillar_flips, caterpillar_ordering, caterpillar_to_yoke, caterpillars,
    yoke_to_caterpillar, Caterpillar,
};
pub use ctft::{
    colored_tfts, ctft_flip, ctft_flips, ctft_to_yoke, yoke_to_ctft, ColoredTriangulation,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("polygon size {0} outside the supported range (need n >= {1})")]
    OutOfRegime(u64, u64),
    #[error("not a triangle-free colored triangulation: {0}")]
    InvalidTriangulation(String),
    #[error("flip of chord {0} leaves the family")]
    IllegalFlip(usize),
    #[error("not a permutation of 1..=n: {0:?}")]
    NotAPermutation(Vec<u64>),
    #[error("not an arc permutation: prefix of length {0} is not an interval")]
    NotArcPermutation(usize),
    #[error("not a caterpillar: {0}")]
    InvalidCaterpillar(String),
    #[error("vertex belongs to {0}, expected Y({1},{2})")]
    WrongGraph(String, u64, u64),
}

/// Cyclic successor in Z_n.
pub(crate) fn succ(x: u64, n: u64) -> u64 {
    (x + 1) % n
}

/// Cyclic predecessor in Z_n.
pub(crate) fn pred(x: u64, n: u64) -> u64 {
    (x + n - 1) % n
}

/// True iff x lies strictly inside the cyclic open interval (a, b).
pub(crate) fn strictly_between(a: u64, b: u64, x: u64, n: u64) -> bool {
    if a == b {
        return false;
    }
    let width = (b + n - a) % n;
    let off = (x + n - a) % n;
    off > 0 && off < width
}

/// True iff the chords {a,b} and {c,d} of a convex polygon cross.
pub(crate) fn chords_cross(a: u64, b: u64, c: u64, d: u64, n: u64) -> bool {
    strictly_between(a, b, c, n) != strictly_between(a, b, d, n)
        && strictly_between(c, d, a, n) != strictly_between(c, d, b, n)
}
