//! Vertex types for yoke and dyoke graphs.
//!
//! A vertex is a sequence (v_0, ..., v_{m+1}) with v_0 and v_{m+1} in Z_n
//! (stored as canonical representatives in [0, n-1]) and the m middle
//! entries in {0,1} (yoke) or {-1,0,1} (dyoke), with total sum divisible
//! by n. The vertex is fully determined by its first m+1 entries.

use crate::params::{GraphParams, Kind};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VertexError {
    #[error("expected {expected} or {} entries, got {got}", .expected - 1)]
    WrongLength { expected: usize, got: usize },
    #[error("middle entry v_{index} = {value} outside {range}")]
    MiddleEntryOutOfRange {
        index: usize,
        value: i64,
        range: &'static str,
    },
    #[error("entry sum {sum} not divisible by n = {n}")]
    SumNotDivisible { sum: i64, n: u64 },
    #[error("vertices come from different graphs: {0} vs {1}")]
    ParamMismatch(GraphParams, GraphParams),
    #[error("cannot parse vertex entry {0:?}")]
    Parse(String),
}

/// Direction of a unit shift between entries i and i+1.
///
/// Left at i moves a unit from entry i+1 into entry i; Right at i moves a
/// unit from entry i into entry i+1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Dir {
    Left,
    Right,
}

impl Dir {
    pub fn reverse(self) -> Dir {
        match self {
            Dir::Left => Dir::Right,
            Dir::Right => Dir::Left,
        }
    }
}

/// A unit shift between entries `index` and `index + 1`, 0 <= index <= m.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Move {
    pub index: u64,
    pub dir: Dir,
}

impl Move {
    pub fn left(index: u64) -> Move {
        Move {
            index,
            dir: Dir::Left,
        }
    }

    pub fn right(index: u64) -> Move {
        Move {
            index,
            dir: Dir::Right,
        }
    }

    pub fn reverse(self) -> Move {
        Move {
            index: self.index,
            dir: self.dir.reverse(),
        }
    }
}

impl std::fmt::Display for Move {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.dir {
            Dir::Left => write!(f, "L{}", self.index),
            Dir::Right => write!(f, "R{}", self.index),
        }
    }
}

/// Common access for yoke and dyoke vertices.
pub trait GraphVertex: Clone + PartialEq + Eq + std::hash::Hash + std::fmt::Display {
    const KIND: Kind;

    fn params(&self) -> GraphParams;
    fn entries(&self) -> &[i64];

    fn from_parts(params: GraphParams, entries: Vec<i64>) -> Result<Self, VertexError>;

    /// Construct from entries already known to be canonical and valid.
    #[doc(hidden)]
    fn from_canonical(params: GraphParams, entries: Vec<i64>) -> Self;

    fn kind(&self) -> Kind {
        Self::KIND
    }

    fn is_zero(&self) -> bool {
        self.entries().iter().all(|&x| x == 0)
    }
}

macro_rules! vertex_type {
    ($name:ident, $kind:expr, $range:literal) => {
        #[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
        pub struct $name {
            params: GraphParams,
            entries: Vec<i64>,
        }

        impl $name {
            /// Build a vertex from m+2 entries (validated) or m+1 entries
            /// (the right bucket is completed so that the total is 0 mod n).
            /// Buckets are reduced to their canonical representatives.
            pub fn new(params: GraphParams, entries: &[i64]) -> Result<Self, VertexError> {
                let full = params.len();
                if entries.len() != full && entries.len() != full - 1 {
                    return Err(VertexError::WrongLength {
                        expected: full,
                        got: entries.len(),
                    });
                }
                let kind = $kind;
                for (i, &x) in entries.iter().enumerate().take(params.m as usize + 1).skip(1) {
                    if x < kind.middle_min() || x > kind.middle_max() {
                        return Err(VertexError::MiddleEntryOutOfRange {
                            index: i,
                            value: x,
                            range: $range,
                        });
                    }
                }
                let mut v: Vec<i64> = entries.to_vec();
                v[0] = params.reduce(v[0]);
                if v.len() == full {
                    *v.last_mut().unwrap() = params.reduce(*v.last().unwrap());
                    let sum: i64 = v.iter().sum();
                    if sum.rem_euclid(params.n as i64) != 0 {
                        return Err(VertexError::SumNotDivisible { sum, n: params.n });
                    }
                } else {
                    let sum: i64 = v.iter().sum();
                    v.push(params.reduce(-sum));
                }
                Ok(Self { params, entries: v })
            }

            /// The all-zero vertex, denoted 0.
            pub fn zero(params: GraphParams) -> Self {
                Self {
                    params,
                    entries: vec![0; params.len()],
                }
            }

            /// Parse a comma-separated entry list, e.g. "2,0,1,1,2".
            /// An m+1-entry input is auto-completed.
            pub fn parse(params: GraphParams, text: &str) -> Result<Self, VertexError> {
                let entries: Vec<i64> = text
                    .split(',')
                    .map(|t| {
                        t.trim()
                            .parse::<i64>()
                            .map_err(|_| VertexError::Parse(t.to_string()))
                    })
                    .collect::<Result<_, _>>()?;
                Self::new(params, &entries)
            }
        }

        impl GraphVertex for $name {
            const KIND: Kind = $kind;

            fn params(&self) -> GraphParams {
                self.params
            }

            fn entries(&self) -> &[i64] {
                &self.entries
            }

            fn from_parts(params: GraphParams, entries: Vec<i64>) -> Result<Self, VertexError> {
                Self::new(params, &entries)
            }

            fn from_canonical(params: GraphParams, entries: Vec<i64>) -> Self {
                debug_assert!(Self::new(params, &entries).is_ok());
                Self { params, entries }
            }
        }

        impl std::fmt::Display for $name {
            fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
                let parts: Vec<String> = self.entries.iter().map(|x| x.to_string()).collect();
                write!(f, "{}", parts.join(","))
            }
        }
    };
}

vertex_type!(YokeVertex, Kind::Yoke, "{0,1}");
vertex_type!(DYokeVertex, Kind::DYoke, "{-1,0,1}");

impl YokeVertex {
    /// View this yoke vertex inside the dyoke graph with the same parameters.
    pub fn as_dyoke(&self) -> DYokeVertex {
        DYokeVertex::from_canonical(self.params(), self.entries().to_vec())
    }
}

/// Componentwise difference v - u of two yoke vertices, landing in the
/// dyoke graph: buckets are reduced mod n, middle entries land in {-1,0,1}.
pub fn vertex_difference(v: &YokeVertex, u: &YokeVertex) -> Result<DYokeVertex, VertexError> {
    let params = v.params();
    if params != u.params() {
        return Err(VertexError::ParamMismatch(params, u.params()));
    }
    let last = params.len() - 1;
    let entries: Vec<i64> = v
        .entries()
        .iter()
        .zip(u.entries())
        .enumerate()
        .map(|(i, (&a, &b))| {
            if i == 0 || i == last {
                params.reduce(a - b)
            } else {
                a - b
            }
        })
        .collect();
    Ok(DYokeVertex::from_canonical(params, entries))
}

/// Apply a directed unit shift if the result stays in the vertex set;
/// returns None when the shift is not possible (the vertex is then a fixed
/// point of the shift map). A shift whose target equals the source (bucket
/// wrap-around with n = 1, or both-bucket moves with small n) yields the
/// source itself and is reported as Some only if distinct, since the graphs
/// are simple.
pub(crate) fn try_shift<V: GraphVertex>(v: &V, mv: Move) -> Option<V> {
    let params = v.params();
    let m = params.m;
    debug_assert!(mv.index <= m);
    let i = mv.index as usize;
    let j = i + 1;
    let last = params.len() - 1;
    let kind = V::KIND;
    let mut e = v.entries().to_vec();
    let (di, dj) = match mv.dir {
        Dir::Left => (1, -1),
        Dir::Right => (-1, 1),
    };
    e[i] += di;
    e[j] += dj;
    if i == 0 {
        e[i] = params.reduce(e[i]);
    } else if e[i] < kind.middle_min() || e[i] > kind.middle_max() {
        return None;
    }
    if j == last {
        e[j] = params.reduce(e[j]);
    } else if e[j] < kind.middle_min() || e[j] > kind.middle_max() {
        return None;
    }
    if e == v.entries() {
        return None; // dropped loop (simple graph)
    }
    Some(V::from_canonical(params, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(n: u64, m: u64) -> GraphParams {
        GraphParams::new(n, m).unwrap()
    }

    #[test]
    fn paper_vertex_accepted() {
        let v = YokeVertex::new(params(3, 3), &[2, 0, 1, 1, 2]).unwrap();
        assert_eq!(v.entries(), &[2, 0, 1, 1, 2]);
    }

    #[test]
    fn completion_forces_right_bucket() {
        let v = YokeVertex::new(params(3, 3), &[2, 0, 1, 1]).unwrap();
        assert_eq!(v.entries(), &[2, 0, 1, 1, 2]);
    }

    #[test]
    fn middle_entry_rejected() {
        let err = YokeVertex::new(params(3, 3), &[0, 2, 0, 0, 1]).unwrap_err();
        assert!(matches!(err, VertexError::MiddleEntryOutOfRange { index: 1, .. }));
    }

    #[test]
    fn sum_rejected() {
        let err = YokeVertex::new(params(3, 3), &[1, 0, 0, 0, 0]).unwrap_err();
        assert!(matches!(err, VertexError::SumNotDivisible { .. }));
    }

    #[test]
    fn wrong_length_rejected() {
        let err = YokeVertex::new(params(3, 3), &[1, 0, 0]).unwrap_err();
        assert!(matches!(err, VertexError::WrongLength { .. }));
    }

    #[test]
    fn dyoke_accepts_negative_middles() {
        let v = DYokeVertex::new(params(5, 3), &[3, 0, -1, 1, 2]).unwrap();
        assert_eq!(v.entries(), &[3, 0, -1, 1, 2]);
        assert!(YokeVertex::new(params(5, 3), &[3, 0, -1, 1, 2]).is_err());
    }

    #[test]
    fn difference_matches_worked_examples() {
        let p = params(3, 3);
        let v = YokeVertex::new(p, &[2, 0, 1, 1, 2]).unwrap();
        let u = YokeVertex::new(p, &[0, 1, 1, 1, 0]).unwrap();
        let d = vertex_difference(&v, &u).unwrap();
        assert_eq!(d.entries(), &[2, -1, 0, 0, 2]);

        let a = YokeVertex::new(p, &[0, 0, 0, 1, 2]).unwrap();
        let b = YokeVertex::new(p, &[2, 1, 0, 0, 0]).unwrap();
        let d = vertex_difference(&a, &b).unwrap();
        assert_eq!(d.entries(), &[1, -1, 0, 1, 2]);
        assert_eq!(d.entries().iter().sum::<i64>() % 3, 0);

        assert!(vertex_difference(&v, &v).unwrap().is_zero());
    }

    #[test]
    fn parse_roundtrip() {
        let p = params(5, 3);
        let v = DYokeVertex::parse(p, "3,0,-1,1,2").unwrap();
        assert_eq!(v.to_string(), "3,0,-1,1,2");
        let w = YokeVertex::parse(params(3, 3), "2,0,1,1").unwrap();
        assert_eq!(w.to_string(), "2,0,1,1,2");
    }

    #[test]
    fn shift_examples() {
        let p = params(5, 3);
        let v = DYokeVertex::new(p, &[3, 0, -1, 1, 2]).unwrap();
        let left2 = try_shift(&v, Move::left(2)).unwrap();
        assert_eq!(left2.entries(), &[3, 0, 0, 0, 2]);
        let right1 = try_shift(&v, Move::right(1)).unwrap();
        assert_eq!(right1.entries(), &[3, -1, 0, 1, 2]);
    }
}
