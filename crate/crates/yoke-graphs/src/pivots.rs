//! Pivots, walls and the closed-form metric results.
//!
//! A pivot of a vertex v is an index p in [-1, m+1] whose prefix sum
//! v_0 + ... + v_p is divisible by n (buckets taken as canonical
//! representatives); -1 and m+1 are the outer pivots of every vertex. The
//! length of a shortest path from v to 0 avoiding shifts across p is
//!
//!   ps_p(v) = sum_{0<=i<=p} i*v_i + sum_{p<i<=m+1} (m+1-i)*v_i,
//!
//! and in a yoke graph d(v,0) = min(ps_{p_l}(v), ps_{p_r}(v)) where p_l, p_r
//! are the pivots nearest m/2 from below and above.

use crate::params::GraphParams;
use crate::vertex::{GraphVertex, YokeVertex};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PivotError {
    #[error("{0} is not a pivot of the vertex")]
    NotAPivot(i64),
    #[error("parameters outside the 2 <= n <= m regime: {0}")]
    OutOfRegime(GraphParams),
}

/// Pivot data of a vertex. Half-integers are stored doubled so everything
/// stays exact: `h_doubled` is 2*h(v) = min |2p - m| over pivots.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PivotProfile {
    pub pivots: Vec<i64>,
    pub p_l: i64,
    pub p_r: i64,
    pub h_doubled: u64,
    /// The central interval I_c = [p_l + 1, p_r].
    pub i_c: (i64, i64),
}

/// Complete pivot profile of a yoke or dyoke vertex.
pub fn pivot_profile<V: GraphVertex>(v: &V) -> PivotProfile {
    let m = v.params().m as i64;
    let n = v.params().n as i64;
    let mut pivots = vec![-1];
    let mut prefix = 0i64;
    for (i, &x) in v.entries().iter().enumerate() {
        prefix += x;
        if prefix.rem_euclid(n) == 0 {
            pivots.push(i as i64);
        }
    }
    debug_assert_eq!(*pivots.last().unwrap(), m + 1);
    // p <= m/2 iff 2p <= m
    let p_l = *pivots.iter().filter(|&&p| 2 * p <= m).max().unwrap();
    let p_r = *pivots.iter().filter(|&&p| 2 * p > m).min().unwrap();
    let h_doubled = pivots.iter().map(|&p| (2 * p - m).unsigned_abs()).min().unwrap();
    PivotProfile {
        pivots,
        p_l,
        p_r,
        h_doubled,
        i_c: (p_l + 1, p_r),
    }
}

/// Length ps_p(v) of a p-pivot path of v. The single expression covers the
/// outer pivots too: for p = m+1 it is sum i*v_i and for p = -1 it is
/// sum (m+1-i)*v_i.
pub fn pivot_path_length<V: GraphVertex>(v: &V, p: i64) -> Result<u64, PivotError> {
    let profile = pivot_profile(v);
    if !profile.pivots.contains(&p) {
        return Err(PivotError::NotAPivot(p));
    }
    Ok(pivot_path_length_unchecked(v, p))
}

pub(crate) fn pivot_path_length_unchecked<V: GraphVertex>(v: &V, p: i64) -> u64 {
    let m = v.params().m as i64;
    let mut total = 0i64;
    for (i, &x) in v.entries().iter().enumerate() {
        let i = i as i64;
        if i <= p {
            total += i * x;
        } else {
            total += (m + 1 - i) * x;
        }
    }
    debug_assert!(total >= 0);
    total as u64
}

/// Closed-form distance from a yoke vertex to 0, with the pivot attaining
/// it (ties resolved toward the smaller pivot).
pub fn dist_to_zero_closed_form(v: &YokeVertex) -> (u64, i64) {
    let profile = pivot_profile(v);
    let left = pivot_path_length_unchecked(v, profile.p_l);
    let right = pivot_path_length_unchecked(v, profile.p_r);
    if left <= right {
        (left, profile.p_l)
    } else {
        (right, profile.p_r)
    }
}

fn choose2(k: u64) -> u64 {
    k * k.saturating_sub(1) / 2
}

/// Which branch of the eccentricity formula applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EccCase {
    NIsOne,
    MAtMostN,
    TwoToM,
}

/// The eccentricity of 0 with its ingredients. In the 2 <= n <= m regime,
/// d0 and (when m - n is odd) d1 are the distances of the extremal
/// candidate vertices from 0 and the eccentricity is their maximum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EccBreakdown {
    pub case: EccCase,
    pub value: u64,
    pub d0: Option<u64>,
    pub d1: Option<u64>,
    /// 2*h(n,m): n when m-n is even, n+1 otherwise (2 <= n <= m only).
    pub h_nm_doubled: Option<u64>,
}

/// Eccentricity of 0, by case:
/// n = 1: C(ceil(m/2)+1, 2) + C(floor(m/2)+1, 2);
/// m <= n: floor(n(m+1)/2);
/// 2 <= n <= m: d0 = C(floor((m+n)/2)+1, 2) + C(ceil((m-n)/2)+1, 2), plus
/// the correction n - ceil((m+1)/2) when m-n is odd and it is positive.
/// The value is the same for the yoke and the dyoke graph.
pub fn ecc_zero_breakdown(params: GraphParams) -> EccBreakdown {
    let (n, m) = (params.n, params.m);
    if n == 1 {
        let value = choose2(m.div_ceil(2) + 1) + choose2(m / 2 + 1);
        return EccBreakdown {
            case: EccCase::NIsOne,
            value,
            d0: None,
            d1: None,
            h_nm_doubled: None,
        };
    }
    if m <= n {
        return EccBreakdown {
            case: EccCase::MAtMostN,
            value: n * (m + 1) / 2,
            d0: None,
            d1: None,
            h_nm_doubled: None,
        };
    }
    let d0 = choose2((m + n) / 2 + 1) + choose2((m - n).div_ceil(2) + 1);
    let parity_even = (m - n) % 2 == 0;
    let h_nm_doubled = if parity_even { n } else { n + 1 };
    let (d1, value) = if parity_even {
        (None, d0)
    } else {
        // d1 = d0 + n - ceil((m+1)/2); smaller than d0 when n is small.
        let d1 = (d0 as i64 + n as i64 - (m + 1).div_ceil(2) as i64) as u64;
        (Some(d1), d0.max(d1))
    };
    EccBreakdown {
        case: EccCase::TwoToM,
        value,
        d0: Some(d0),
        d1,
        h_nm_doubled: Some(h_nm_doubled),
    }
}

/// Eccentricity of 0 in Y(n,m) and in Z(n,m) (the two are equal).
pub fn ecc_zero_formula(params: GraphParams) -> u64 {
    ecc_zero_breakdown(params).value
}

/// Diameter of Y(n,m): equal to the eccentricity of 0 in Z(n,m), which in
/// turn equals the eccentricity of 0 in Y(n,m).
pub fn diameter_formula(params: GraphParams) -> u64 {
    ecc_zero_formula(params)
}

/// The extremal candidate vertices in the 2 <= n <= m regime: u0 has every
/// middle entry 1 and left bucket -floor((m-n)/2) mod n; u1 (defined only
/// when m-n is odd) additionally zeroes the entry at ceil((m+1)/2).
pub fn special_vertices(
    params: GraphParams,
) -> Result<(YokeVertex, Option<YokeVertex>), PivotError> {
    let (n, m) = (params.n, params.m);
    if n < 2 || n > m {
        return Err(PivotError::OutOfRegime(params));
    }
    let bucket = params.reduce(-(((m - n) / 2) as i64));
    let mut entries = vec![1i64; m as usize + 1];
    entries[0] = bucket;
    let u0 = YokeVertex::new(params, &entries).expect("u0 is valid");
    let u1 = if (m - n) % 2 == 1 {
        let zero_at = (m + 1).div_ceil(2) as usize;
        let mut e = entries;
        e[zero_at] = 0;
        Some(YokeVertex::new(params, &e).expect("u1 is valid"))
    } else {
        None
    };
    Ok((u0, u1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::DEFAULT_VERTEX_CAP as CAP;
    use crate::vertex::DYokeVertex;
    use crate::{bfs_from, enumerate_vertices};

    fn params(n: u64, m: u64) -> GraphParams {
        GraphParams::new(n, m).unwrap()
    }

    #[test]
    fn pivot_sets_from_worked_examples() {
        let v = YokeVertex::new(params(3, 5), &[0, 1, 1, 0, 1, 1, 2]).unwrap();
        assert_eq!(pivot_profile(&v).pivots, vec![-1, 0, 4, 6]);

        let z = DYokeVertex::new(params(3, 8), &[0, 1, -1, 0, 1, 1, -1, -1, 1, 2]).unwrap();
        assert_eq!(pivot_profile(&z).pivots, vec![-1, 0, 2, 3, 7, 9]);

        let zero = YokeVertex::zero(params(4, 3));
        assert_eq!(pivot_profile(&zero).pivots, vec![-1, 0, 1, 2, 3, 4]);
    }

    #[test]
    fn pivot_path_lengths() {
        let v = YokeVertex::new(params(3, 3), &[2, 0, 1, 1, 2]).unwrap();
        assert_eq!(pivot_path_length(&v, 2).unwrap(), 3);
        assert_eq!(pivot_path_length(&v, -1).unwrap(), 11);
        assert!(matches!(
            pivot_path_length(&v, 1),
            Err(PivotError::NotAPivot(1))
        ));
        let zero = YokeVertex::zero(params(3, 3));
        for p in [-1, 0, 1, 2, 3, 4] {
            assert_eq!(pivot_path_length(&zero, p).unwrap(), 0);
        }
    }

    #[test]
    fn closed_form_examples() {
        let p = params(3, 3);
        let v = YokeVertex::new(p, &[2, 0, 1, 1, 2]).unwrap();
        assert_eq!(dist_to_zero_closed_form(&v), (3, 2));
        let far = YokeVertex::new(p, &[0, 1, 1, 1, 0]).unwrap();
        assert_eq!(dist_to_zero_closed_form(&far).0, 6);
        assert_eq!(dist_to_zero_closed_form(&YokeVertex::zero(p)).0, 0);
    }

    #[test]
    fn closed_form_equals_bfs_exhaustively() {
        for (n, m) in [(1, 5), (2, 4), (3, 3), (4, 2), (5, 1), (6, 0), (2, 6), (3, 4)] {
            let p = params(n, m);
            let table = bfs_from(&YokeVertex::zero(p), CAP).unwrap();
            for v in enumerate_vertices::<YokeVertex>(p, CAP).unwrap() {
                assert_eq!(
                    dist_to_zero_closed_form(&v).0,
                    table.get(&v),
                    "params {} vertex {}",
                    p,
                    v
                );
            }
        }
    }

    #[test]
    fn ecc_formula_spot_values() {
        assert_eq!(ecc_zero_formula(params(3, 3)), 6);
        assert_eq!(ecc_zero_formula(params(6, 0)), 3);
        assert_eq!(ecc_zero_formula(params(4, 5)), 12);
        assert_eq!(ecc_zero_formula(params(1, 5)), 9);
        assert_eq!(diameter_formula(params(3, 3)), 6);
        assert_eq!(diameter_formula(params(4, 2)), 6);
        assert_eq!(diameter_formula(params(1, 1)), 1);
    }

    #[test]
    fn ecc_breakdown_d1_relation() {
        // m - n odd: d1 = d0 + n - ceil((m+1)/2).
        let b = ecc_zero_breakdown(params(4, 5));
        assert_eq!(b.case, EccCase::TwoToM);
        assert_eq!(b.d0, Some(11));
        assert_eq!(b.d1, Some(12));
        assert_eq!(b.value, 12);
        assert_eq!(b.h_nm_doubled, Some(5));

        // n <= ceil((m+1)/2): the correction is non-positive, max is d0.
        let b = ecc_zero_breakdown(params(2, 5));
        assert_eq!(b.d0, Some(9));
        assert_eq!(b.d1, Some(8));
        assert_eq!(b.value, 9);
    }

    #[test]
    fn formula_cases_agree_on_overlaps() {
        // n = 1, m <= 1 and n = m >= 2 are covered by two branches each.
        for m in 0..=1 {
            let p = params(1, m);
            let case1 = choose2(m.div_ceil(2) + 1) + choose2(m / 2 + 1);
            assert_eq!(case1, p.n * (m + 1) / 2);
        }
        for n in 2..8 {
            let d0 = choose2((2 * n) / 2 + 1) + choose2(1);
            assert_eq!(d0, n * (n + 1) / 2);
        }
    }

    #[test]
    fn special_vertices_worked_examples() {
        let (u0, u1) = special_vertices(params(3, 5)).unwrap();
        assert_eq!(u0.entries(), &[2, 1, 1, 1, 1, 1, 2]);
        assert!(u1.is_none());

        let (_, u1) = special_vertices(params(2, 5)).unwrap();
        assert_eq!(u1.unwrap().entries(), &[1, 1, 1, 0, 1, 1, 1]);

        let (u0, u1) = special_vertices(params(3, 6)).unwrap();
        assert_eq!(u0.entries(), &[2, 1, 1, 1, 1, 1, 1, 1]);
        assert_eq!(u1.unwrap().entries(), &[2, 1, 1, 1, 0, 1, 1, 2]);

        assert!(special_vertices(params(1, 4)).is_err());
        assert!(special_vertices(params(5, 3)).is_err());
    }

    #[test]
    fn special_vertex_distances_match_d0_d1() {
        for (n, m) in [(2, 4), (2, 5), (3, 4), (3, 5), (4, 6), (2, 7), (3, 7)] {
            let p = params(n, m);
            let b = ecc_zero_breakdown(p);
            let (u0, u1) = special_vertices(p).unwrap();
            let table = bfs_from(&YokeVertex::zero(p), CAP).unwrap();
            assert_eq!(table.get(&u0), b.d0.unwrap(), "d0 at {}", p);
            if let Some(u1) = u1 {
                assert_eq!(table.get(&u1), b.d1.unwrap(), "d1 at {}", p);
            }
        }
    }

    #[test]
    fn monotone_pivot_property() {
        // Pivots closer to m/2 give shorter pivot paths, on each side.
        for (n, m) in [(2, 4), (3, 3), (1, 5), (4, 2)] {
            let p = params(n, m);
            for v in enumerate_vertices::<YokeVertex>(p, CAP).unwrap() {
                let prof = pivot_profile(&v);
                let below: Vec<i64> = prof.pivots.iter().copied().filter(|&q| 2 * q <= m as i64).collect();
                for w in below.windows(2) {
                    assert!(
                        pivot_path_length_unchecked(&v, w[1])
                            <= pivot_path_length_unchecked(&v, w[0])
                    );
                }
                let above: Vec<i64> = prof.pivots.iter().copied().filter(|&q| 2 * q > m as i64).collect();
                for w in above.windows(2) {
                    assert!(
                        pivot_path_length_unchecked(&v, w[0])
                            <= pivot_path_length_unchecked(&v, w[1])
                    );
                }
            }
        }
    }

    #[test]
    fn nonnegative_dyoke_matches_yoke_ps() {
        // For dyoke vertices with no negative middle entry, ps_p agrees with
        // the yoke value at every pivot.
        let p = params(3, 4);
        for v in enumerate_vertices::<YokeVertex>(p, CAP).unwrap() {
            let z = v.as_dyoke();
            for &piv in &pivot_profile(&v).pivots {
                assert_eq!(
                    pivot_path_length(&v, piv).unwrap(),
                    pivot_path_length(&z, piv).unwrap()
                );
            }
        }
    }
}
