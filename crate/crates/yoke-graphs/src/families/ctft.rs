//! Colored triangle-free triangulations of a convex polygon.
//!
//! A triangulation of the n-gon (n >= 5) is triangle-free when no triangle
//! uses three chords, equivalently when it has exactly two outer triangles.
//! A coloring labels the chords 0..n-4 in one of the two linear orders the
//! triangulation induces: chord 0 is a short chord (a-1, a+1) and chord i
//! extends chord i-1 = (k, t) to either (k-1, t) or (k, t+1). The map g
//! sends a colored triangulation to the vertex of Y(n, n-4) with left
//! bucket a and bit i recording which of the two extensions was taken
//! (0 for (k-1, t), 1 for (k, t+1)).

use super::{pred, succ, FamilyError};
use crate::params::GraphParams;
use crate::vertex::{GraphVertex, YokeVertex};
use serde::{Deserialize, Serialize};

/// A triangulation of the convex n-gon with chords labeled by color.
/// `chords[i]` is the chord labeled i, as an unordered vertex pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoredTriangulation {
    pub n: u64,
    pub chords: Vec<(u64, u64)>,
}

/// The chord chain in growth order: chord 0 is (a-1, a+1) and each later
/// chord moves its ordered form (k, t) to (k-1, t) or (k, t+1).
struct Chain {
    apex: u64,
    bits: Vec<i64>,
}

impl ColoredTriangulation {
    pub fn new(n: u64, chords: Vec<(u64, u64)>) -> Result<Self, FamilyError> {
        let t = ColoredTriangulation { n, chords };
        t.chain()?;
        Ok(t)
    }

    /// Validate and orient the chords along the growth order.
    fn chain(&self) -> Result<Chain, FamilyError> {
        let n = self.n;
        if n < 5 {
            return Err(FamilyError::OutOfRegime(n, 5));
        }
        if self.chords.len() as u64 != n - 3 {
            return Err(FamilyError::InvalidTriangulation(format!(
                "expected {} chords, got {}",
                n - 3,
                self.chords.len()
            )));
        }
        for &(x, y) in &self.chords {
            if x >= n || y >= n {
                return Err(FamilyError::InvalidTriangulation(format!(
                    "vertex out of range in chord ({x},{y})"
                )));
            }
        }
        let (x, y) = self.chords[0];
        // Chord 0 must be short: (a-1, a+1) skipping the apex a.
        let apex = if succ(succ(x, n), n) == y {
            succ(x, n)
        } else if succ(succ(y, n), n) == x {
            succ(y, n)
        } else {
            return Err(FamilyError::InvalidTriangulation(format!(
                "chord 0 ({x},{y}) is not short"
            )));
        };
        let (mut k, mut t) = (pred(apex, n), succ(apex, n));
        let mut bits = Vec::new();
        for (i, &(x, y)) in self.chords.iter().enumerate().skip(1) {
            let lower = (pred(k, n), t);
            let upper = (k, succ(t, n));
            let pair = |p: (u64, u64)| (x, y) == p || (y, x) == p;
            if pair(lower) {
                (k, t) = lower;
                bits.push(0);
            } else if pair(upper) {
                (k, t) = upper;
                bits.push(1);
            } else {
                return Err(FamilyError::InvalidTriangulation(format!(
                    "chord {i} ({x},{y}) does not extend chord {} ({k},{t})",
                    i - 1
                )));
            }
        }
        Ok(Chain { apex, bits })
    }

    /// Edge set of the triangulation: polygon edges plus chords, as
    /// canonically ordered pairs.
    fn edges(&self) -> std::collections::HashSet<(u64, u64)> {
        let n = self.n;
        let mut set: std::collections::HashSet<(u64, u64)> =
            (0..n).map(|i| canon(i, succ(i, n))).collect();
        set.extend(self.chords.iter().map(|&(x, y)| canon(x, y)));
        set
    }

    /// All triangles of the subdivision. With every vertex on the convex
    /// hull, three mutually adjacent vertices always bound a face.
    pub fn triangles(&self) -> Vec<[u64; 3]> {
        let edges = self.edges();
        let n = self.n;
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                if !edges.contains(&canon(a, b)) {
                    continue;
                }
                for c in b + 1..n {
                    if edges.contains(&canon(a, c)) && edges.contains(&canon(b, c)) {
                        out.push([a, b, c]);
                    }
                }
            }
        }
        out
    }
}

fn canon(x: u64, y: u64) -> (u64, u64) {
    (x.min(y), x.max(y))
}

/// g: colored triangle-free triangulations -> Y(n, n-4).
pub fn ctft_to_yoke(t: &ColoredTriangulation) -> Result<YokeVertex, FamilyError> {
    let chain = t.chain()?;
    let params = GraphParams::new(t.n, t.n - 4).expect("n >= 5");
    let mut entries = Vec::with_capacity(t.n as usize - 3);
    entries.push(chain.apex as i64);
    entries.extend(&chain.bits);
    Ok(YokeVertex::new(params, &entries).expect("image is a valid vertex"))
}

/// Inverse of g: rebuild the chord chain from the bucket and the bits.
pub fn yoke_to_ctft(v: &YokeVertex) -> Result<ColoredTriangulation, FamilyError> {
    let params = v.params();
    let n = params.n;
    if n < 5 || params.m != n - 4 {
        return Err(FamilyError::WrongGraph(
            format!("Y({},{})", params.n, params.m),
            n,
            n.saturating_sub(4),
        ));
    }
    let e = v.entries();
    let apex = e[0] as u64;
    let mut chords = vec![(pred(apex, n), succ(apex, n))];
    for &bit in &e[1..=params.m as usize] {
        let &(k, t) = chords.last().unwrap();
        chords.push(if bit == 0 {
            (pred(k, n), t)
        } else {
            (k, succ(t, n))
        });
    }
    ColoredTriangulation::new(n, chords)
}

/// Flip the chord labeled `i`: replace it by the other diagonal of the
/// quadrilateral formed by its two adjacent triangles. The labels stay in
/// place; the result must still be a valid colored triangle-free
/// triangulation.
pub fn ctft_flip(t: &ColoredTriangulation, i: usize) -> Result<ColoredTriangulation, FamilyError> {
    if i >= t.chords.len() {
        return Err(FamilyError::IllegalFlip(i));
    }
    let (x, y) = t.chords[i];
    let apexes: Vec<u64> = t
        .triangles()
        .into_iter()
        .filter(|tri| tri.contains(&x) && tri.contains(&y))
        .map(|tri| *tri.iter().find(|&&v| v != x && v != y).unwrap())
        .collect();
    debug_assert_eq!(apexes.len(), 2, "a chord borders exactly two triangles");
    let mut chords = t.chords.clone();
    chords[i] = (apexes[0], apexes[1]);
    ColoredTriangulation::new(t.n, chords).map_err(|_| FamilyError::IllegalFlip(i))
}

/// All legal flips of a colored triangulation, by chord label.
pub fn ctft_flips(t: &ColoredTriangulation) -> Vec<(usize, ColoredTriangulation)> {
    (0..t.chords.len())
        .filter_map(|i| ctft_flip(t, i).ok().map(|r| (i, r)))
        .collect()
}

/// Native enumeration of all colored triangle-free triangulations of the
/// n-gon: enumerate all triangulations recursively, keep the triangle-free
/// ones, and read off the two linear chord orders of each.
pub fn colored_tfts(n: u64) -> Result<Vec<ColoredTriangulation>, FamilyError> {
    if n < 5 {
        return Err(FamilyError::OutOfRegime(n, 5));
    }
    let mut out = Vec::new();
    for chords in triangulations_of(&(0..n).collect::<Vec<_>>()) {
        let chord_set: std::collections::HashSet<(u64, u64)> =
            chords.iter().map(|&(x, y)| canon(x, y)).collect();
        // Triangle-free: no triangle of the subdivision has 3 chords.
        let probe = ColoredTriangulation {
            n,
            chords: chords.clone(),
        };
        let triangle_free = probe.triangles().iter().all(|tri| {
            let c = [
                canon(tri[0], tri[1]),
                canon(tri[0], tri[2]),
                canon(tri[1], tri[2]),
            ];
            c.iter().filter(|e| chord_set.contains(e)).count() < 3
        });
        if !triangle_free {
            continue;
        }
        // Each short chord starts one of the two linear orders.
        let shorts: Vec<(u64, u64)> = chord_set
            .iter()
            .copied()
            .filter(|&(x, y)| succ(succ(x, n), n) == y || succ(succ(y, n), n) == x)
            .collect();
        debug_assert_eq!(shorts.len(), 2, "triangle-free implies two outer triangles");
        for &start in &shorts {
            let mut ordered = Vec::with_capacity(chords.len());
            let apex = if succ(succ(start.0, n), n) == start.1 {
                succ(start.0, n)
            } else {
                succ(start.1, n)
            };
            let (mut k, mut t) = (pred(apex, n), succ(apex, n));
            ordered.push((k, t));
            for _ in 1..chords.len() {
                let lower = (pred(k, n), t);
                let upper = (k, succ(t, n));
                if chord_set.contains(&canon(lower.0, lower.1)) {
                    (k, t) = lower;
                } else {
                    debug_assert!(chord_set.contains(&canon(upper.0, upper.1)));
                    (k, t) = upper;
                }
                ordered.push((k, t));
            }
            out.push(ColoredTriangulation::new(n, ordered)?);
        }
    }
    Ok(out)
}

/// All triangulations of the convex polygon on the given vertex run,
/// returned as chord lists (polygon edges omitted). The closing edge
/// (first, last) lies in a triangle with some apex; recurse on both sides.
fn triangulations_of(polygon: &[u64]) -> Vec<Vec<(u64, u64)>> {
    let len = polygon.len();
    if len < 4 {
        return vec![Vec::new()];
    }
    let (first, last) = (polygon[0], polygon[len - 1]);
    let mut out = Vec::new();
    for apx in 1..len - 1 {
        let lefts = triangulations_of(&polygon[..=apx]);
        let rights = triangulations_of(&polygon[apx..]);
        for l in &lefts {
            for r in &rights {
                let mut all = Vec::new();
                if apx > 1 {
                    all.push((first, polygon[apx]));
                }
                if apx < len - 2 {
                    all.push((polygon[apx], last));
                }
                all.extend(l.iter().copied());
                all.extend(r.iter().copied());
                out.push(all);
            }
        }
    }
    out
}
