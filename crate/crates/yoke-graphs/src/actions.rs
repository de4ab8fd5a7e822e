//! The shift action s_0, ..., s_m on Y(n,m), word/path semantics, the
//! Coxeter-relation checker and transitivity.
//!
//! Each s_i is a total involution of the vertex set: s_0 shifts left when
//! v_1 = 1 and right otherwise, s_m shifts left when v_m = 0 and right
//! otherwise, and the middle generators swap v_i with v_{i+1} (fixing the
//! vertex when they are equal). Composition is right-to-left throughout:
//! in a word f_d ... f_1, the letter f_1 acts first.

use crate::graph::{neighbors, rank};
use crate::params::{GraphParams, Kind, SizeError};
use crate::vertex::{try_shift, Dir, GraphVertex, Move, YokeVertex};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ActionError {
    #[error("generator index {index} out of range [0, {m}]")]
    IndexOutOfRange { index: u64, m: u64 },
    #[error("generators require m >= 1, got m = {0}")]
    NoGenerators(u64),
    #[error("Coxeter relations require m >= 2, got m = {0}")]
    OutOfRegime(u64),
    #[error(transparent)]
    Size(#[from] SizeError),
    #[error("cannot parse word step {0:?}")]
    Parse(String),
    #[error("generator steps are only defined on yoke graphs")]
    GeneratorOnDYoke,
}

/// Apply the generator s_i. Total map; involution.
pub fn apply_generator(index: u64, v: &YokeVertex) -> Result<YokeVertex, ActionError> {
    let m = v.params().m;
    if m == 0 {
        return Err(ActionError::NoGenerators(0));
    }
    if index > m {
        return Err(ActionError::IndexOutOfRange { index, m });
    }
    let e = v.entries();
    let dir = if index == 0 {
        if e[1] == 1 {
            Dir::Left
        } else {
            Dir::Right
        }
    } else if index == m {
        if e[m as usize] == 0 {
            Dir::Left
        } else {
            Dir::Right
        }
    } else {
        let (a, b) = (e[index as usize], e[index as usize + 1]);
        match (a, b) {
            (0, 1) => Dir::Left,
            (1, 0) => Dir::Right,
            _ => return Ok(v.clone()), // fixed point
        }
    };
    Ok(try_shift(v, Move { index, dir }).expect("generator shift is legal"))
}

/// One step of a word: an undirected generator or a directed shift.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Step {
    Gen(u64),
    Shift(Move),
}

impl std::fmt::Display for Step {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Step::Gen(i) => write!(f, "s{}", i),
            Step::Shift(mv) => write!(f, "{}", mv),
        }
    }
}

/// A word over the generators/directed shifts. Steps are stored in
/// application order: `steps[0]` acts first (it is the rightmost letter of
/// the written word f_d ... f_1).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Word {
    pub steps: Vec<Step>,
}

impl Word {
    pub fn new(steps: Vec<Step>) -> Self {
        Word { steps }
    }

    /// Parse a comma-separated step list, e.g. "L1,L0,R3" or "s0,s1".
    /// Steps are listed in application order (first step acts first).
    pub fn parse(text: &str) -> Result<Word, ActionError> {
        let mut steps = Vec::new();
        for tok in text.split(',') {
            let tok = tok.trim();
            let (head, rest) = tok.split_at(1.min(tok.len()));
            let step = match head {
                "L" | "l" => Step::Shift(Move::left(
                    rest.parse().map_err(|_| ActionError::Parse(tok.into()))?,
                )),
                "R" | "r" => Step::Shift(Move::right(
                    rest.parse().map_err(|_| ActionError::Parse(tok.into()))?,
                )),
                "s" | "S" => Step::Gen(rest.parse().map_err(|_| ActionError::Parse(tok.into()))?),
                _ => return Err(ActionError::Parse(tok.into())),
            };
            steps.push(step);
        }
        Ok(Word { steps })
    }
}

impl std::fmt::Display for Word {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.steps.iter().map(|s| s.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Run a word from a starting vertex. `is_path` is false iff some step
/// fixed the current vertex (an illegal directed shift, or a generator at a
/// fixed point), in which case the word does not correspond to a path.
pub fn run_word<V: GraphVertex>(start: &V, word: &Word) -> Result<(V, bool), ActionError>
where
    V: GeneratorTarget,
{
    let m = start.params().m;
    let mut cur = start.clone();
    let mut is_path = true;
    for &step in &word.steps {
        let next = match step {
            Step::Gen(i) => V::generator(i, &cur)?,
            Step::Shift(mv) => {
                if mv.index > m {
                    return Err(ActionError::IndexOutOfRange { index: mv.index, m });
                }
                try_shift(&cur, mv).unwrap_or_else(|| cur.clone())
            }
        };
        if next == cur {
            is_path = false;
        }
        cur = next;
    }
    Ok((cur, is_path))
}

/// Dispatch for generator application; dyoke graphs only support directed
/// shifts, so their generator steps fall back to an error.
pub trait GeneratorTarget: GraphVertex {
    fn generator(index: u64, v: &Self) -> Result<Self, ActionError>;
}

impl GeneratorTarget for YokeVertex {
    fn generator(index: u64, v: &Self) -> Result<Self, ActionError> {
        apply_generator(index, v)
    }
}

impl GeneratorTarget for crate::vertex::DYokeVertex {
    fn generator(_index: u64, _v: &Self) -> Result<Self, ActionError> {
        Err(ActionError::GeneratorOnDYoke)
    }
}

/// One violated relation: which relation and at which vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RelationViolation {
    pub relation: String,
    pub vertex: String,
}

/// Outcome of the pointwise Coxeter-relation check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoxeterReport {
    pub params: GraphParams,
    pub vertices_checked: u64,
    pub violations: Vec<RelationViolation>,
    /// Orbit sizes of <s_0 s_1> and <s_{m-1} s_m> all equal 4.
    pub orbits_of_size_four: bool,
}

impl CoxeterReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty() && self.orbits_of_size_four
    }
}

/// Verify on every vertex: s_i^2 = Id; (s_i s_j)^2 = Id for |i-j| > 1;
/// (s_i s_{i+1})^3 = Id for 1 <= i <= m-2; (s_0 s_1)^4 = (s_{m-1} s_m)^4 = Id.
/// These are the defining relations of the affine Weyl group of type C~_m,
/// so the check exhibits Y(n,m) as one of its Schreier graphs.
pub fn check_coxeter_relations(params: GraphParams, cap: u64) -> Result<CoxeterReport, ActionError> {
    let m = params.m;
    if m < 2 {
        return Err(ActionError::OutOfRegime(m));
    }
    let count = params.vertex_count_capped(Kind::Yoke, cap)?;
    let mut violations = Vec::new();
    let mut record = |rel: String, v: &YokeVertex| {
        if violations.len() < 8 {
            violations.push(RelationViolation {
                relation: rel,
                vertex: v.to_string(),
            });
        }
    };
    let apply_pair = |i: u64, j: u64, v: &YokeVertex| {
        apply_generator(i, &apply_generator(j, v).unwrap()).unwrap()
    };
    for idx in 0..count {
        let v: YokeVertex = crate::graph::unrank(params, idx);
        for i in 0..=m {
            if apply_generator(i, &apply_generator(i, &v).unwrap()).unwrap() != v {
                record(format!("s{i}^2"), &v);
            }
        }
        for i in 0..=m {
            for j in i + 2..=m {
                let mut w = v.clone();
                for _ in 0..2 {
                    w = apply_pair(i, j, &w);
                }
                if w != v {
                    record(format!("(s{i} s{j})^2"), &v);
                }
            }
        }
        for i in 1..=m.saturating_sub(2) {
            let mut w = v.clone();
            for _ in 0..3 {
                w = apply_pair(i, i + 1, &w);
            }
            if w != v {
                record(format!("(s{i} s{})^3", i + 1), &v);
            }
        }
        for (i, j) in [(0, 1), (m - 1, m)] {
            let mut w = v.clone();
            for _ in 0..4 {
                w = apply_pair(i, j, &w);
            }
            if w != v {
                record(format!("(s{i} s{j})^4"), &v);
            }
        }
    }

    // Orbits of <s_0 s_1> and <s_{m-1} s_m> all have size exactly 4.
    let mut orbits_of_size_four = true;
    'outer: for (i, j) in [(0u64, 1u64), (m - 1, m)] {
        for idx in 0..count {
            let v: YokeVertex = crate::graph::unrank(params, idx);
            let mut w = v.clone();
            let mut size = 0;
            loop {
                w = apply_pair(i, j, &w);
                size += 1;
                if w == v {
                    break;
                }
                if size > 4 {
                    break;
                }
            }
            if size != 4 {
                orbits_of_size_four = false;
                break 'outer;
            }
        }
    }

    Ok(CoxeterReport {
        params,
        vertices_checked: count,
        violations,
        orbits_of_size_four,
    })
}

/// True iff the group generated by {s_i} acts transitively: BFS from 0
/// under generator moves reaches every vertex. For m = 0 the two directed
/// shifts at index 0 generate the rotation group of the n-cycle, which is
/// transitive as well.
pub fn check_transitivity(params: GraphParams, cap: u64) -> Result<bool, ActionError> {
    let count = params.vertex_count_capped(Kind::Yoke, cap)?;
    let mut seen = vec![false; count as usize];
    let zero = YokeVertex::zero(params);
    seen[rank(&zero) as usize] = true;
    let mut stack = vec![zero];
    let mut reached = 1u64;
    while let Some(v) = stack.pop() {
        let images: Vec<YokeVertex> = if params.m == 0 {
            [Dir::Left, Dir::Right]
                .iter()
                .filter_map(|&dir| try_shift(&v, Move { index: 0, dir }))
                .collect()
        } else {
            (0..=params.m)
                .map(|i| apply_generator(i, &v).unwrap())
                .collect()
        };
        for u in images {
            let r = rank(&u) as usize;
            if !seen[r] {
                seen[r] = true;
                reached += 1;
                stack.push(u);
            }
        }
    }
    Ok(reached == count)
}

/// Every edge of Y(n,m) with m >= 1 is realized by exactly one generator,
/// except in Y(1,1) where the single edge is realized by both s_0 and s_1.
/// Returns the first offending edge, if any.
pub fn check_unique_edge_generator(
    params: GraphParams,
    cap: u64,
) -> Result<Option<String>, ActionError> {
    let m = params.m;
    if m == 0 {
        return Err(ActionError::NoGenerators(0));
    }
    let count = params.vertex_count_capped(Kind::Yoke, cap)?;
    let expected = if (params.n, params.m) == (1, 1) { 2 } else { 1 };
    for idx in 0..count {
        let v: YokeVertex = crate::graph::unrank(params, idx);
        for nb in neighbors(&v) {
            let realizers = (0..=m)
                .filter(|&i| apply_generator(i, &v).unwrap() == nb.vertex)
                .count();
            if realizers != expected {
                return Ok(Some(format!(
                    "edge {} -- {} realized by {} generators",
                    v, nb.vertex, realizers
                )));
            }
        }
    }
    Ok(None)
}
