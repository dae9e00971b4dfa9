//! HF-hat of integer surgery from the truncated mapping cone of `D_n`.
//!
//! The cone is assembled on homology: each `A_s` contributes `H(A_s)` and each
//! `B_t` a single generator. Over a field the long exact sequence of a cone
//! gives `dim H(cone f) = dim H(src) + dim H(tgt) - 2 rank(f_*)`, and the
//! inclusion of `H(B_t)` is nonzero exactly when its generator is not in the
//! image of `f_*`.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::complex::KnotComplex;
use crate::error::{Error, Result};
use crate::f2::{BitVector, EchelonBasis};
use crate::hook::{EdgeMapData, EdgeMapper};
use crate::trace::TraceProfile;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeResult {
    pub framing: i64,
    pub truncation: i64,
    /// Residues mod |n| when `n != 0`; integer labels `s` when `n = 0`.
    pub spinc_ranks: BTreeMap<i64, usize>,
    pub total_rank: usize,
    pub nonzero_inclusions: BTreeSet<i64>,
    pub s_max: Option<i64>,
}

/// Smallest truncation for which the dropped tails of the cone are acyclic.
pub fn default_truncation(complex: &KnotComplex, n: i64) -> i64 {
    complex.genus() + n.abs() + 2
}

pub fn cone_ranks(complex: &KnotComplex, n: i64) -> ConeResult {
    build_cone(&EdgeMapper::new(complex), n, default_truncation(complex, n))
}

/// As [`cone_ranks`] with an explicit truncation `b`, which must be at least
/// the default.
pub fn cone_ranks_with_truncation(complex: &KnotComplex, n: i64, b: i64) -> Result<ConeResult> {
    let minimum = default_truncation(complex, n);
    if b < minimum {
        return Err(Error::TruncationTooSmall {
            requested: b,
            minimum,
        });
    }
    Ok(build_cone(&EdgeMapper::new(complex), n, b))
}

fn build_cone(mapper: &EdgeMapper<'_>, n: i64, b: i64) -> ConeResult {
    let edges: BTreeMap<i64, EdgeMapData> = (-b..=b).map(|s| (s, mapper.edge_maps(s))).collect();
    let targets_lo = -b + n;

    // Spin^c blocks: label -> (sources s, targets t).
    let label = |s: i64| if n == 0 { s } else { s.rem_euclid(n.abs()) };
    let mut blocks: BTreeMap<i64, (Vec<i64>, Vec<i64>)> = BTreeMap::new();
    for s in -b..=b {
        blocks.entry(label(s)).or_default().0.push(s);
    }
    for t in targets_lo..=b {
        blocks.entry(label(t)).or_default().1.push(t);
    }

    let mut spinc_ranks = BTreeMap::new();
    let mut nonzero_inclusions = BTreeSet::new();
    for (&lab, (sources, targets)) in &blocks {
        let row_of: BTreeMap<i64, usize> = targets.iter().enumerate().map(|(r, &t)| (t, r)).collect();
        let rows = targets.len();
        let mut columns = Vec::new();
        for s in sources {
            let e = &edges[s];
            for k in 0..e.dimension() {
                let mut col = BitVector::zeros(rows);
                if e.v_star[k] {
                    if let Some(&r) = row_of.get(s) {
                        col.flip(r);
                    }
                }
                if e.h_star[k] {
                    if let Some(&r) = row_of.get(&(s + n)) {
                        col.flip(r);
                    }
                }
                columns.push(col);
            }
        }
        let image = EchelonBasis::spanned_by(rows, &columns);
        let source_dim = columns.len();
        let rank = source_dim + rows - 2 * image.rank();
        for (&t, &r) in &row_of {
            if !image.contains(&BitVector::unit(rows, r)) {
                nonzero_inclusions.insert(t);
            }
        }
        spinc_ranks.insert(lab, rank);
    }

    if n == 0 {
        // Labels are reported on a window that does not depend on b.
        let g = mapper.complex().genus();
        spinc_ranks.retain(|&s, &mut rank| (-g - 1..=g + 1).contains(&s) || rank != 0);
    }
    let total_rank = spinc_ranks.values().sum();
    let s_max = nonzero_inclusions.iter().next_back().copied();
    ConeResult {
        framing: n,
        truncation: b,
        spinc_ranks,
        total_rank,
        nonzero_inclusions,
        s_max,
    }
}

/// Whether the `s`-th spin^c structure on the trace cobordism induces a
/// nonzero map `HF-hat(S³) → HF-hat(S³_n(K))`.
pub fn surgery_map_nonzero(complex: &KnotComplex, n: i64, s: i64) -> Result<bool> {
    let bound = default_truncation(complex, n);
    if s.abs() > bound {
        return Err(Error::OutOfTruncation { s, bound });
    }
    // Widen so that every |s| <= bound is a retained target for either sign of n.
    let cone = build_cone(&EdgeMapper::new(complex), n, bound + n.abs());
    Ok(cone.nonzero_inclusions.contains(&s))
}

/// `(n, s_max, s'_max)` for the trace `X_n(K)`; `s'_max` comes from the
/// reversed trace `-X_n(K) = X_{-n}(-K)`.
pub fn trace_profile(complex: &KnotComplex, n: i64) -> TraceProfile {
    let forward = cone_ranks(complex, n);
    let reversed = cone_ranks(&complex.mirror(), -n);
    TraceProfile {
        n,
        s_max: forward.s_max,
        s_prime_max: reversed.s_max,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unknot() -> KnotComplex {
        KnotComplex::parse("knot U\ngen u A=0 M=0\n").unwrap()
    }

    fn trefoil() -> KnotComplex {
        KnotComplex::parse(
            "knot T23\ngen a A=1 M=0\ngen b A=0 M=-1\ngen c A=-1 M=-2\narr b c\narr b a\n",
        )
        .unwrap()
    }

    #[test]
    fn lens_space_l3() {
        let c = cone_ranks(&unknot(), 3);
        assert_eq!(c.spinc_ranks, BTreeMap::from([(0, 1), (1, 1), (2, 1)]));
        assert_eq!(c.total_rank, 3);
        assert_eq!(c.s_max, None);
        assert_eq!(c.truncation, 5);
    }

    #[test]
    fn unknot_zero_surgery() {
        let c = cone_ranks(&unknot(), 0);
        assert_eq!(c.spinc_ranks, BTreeMap::from([(-1, 0), (0, 2), (1, 0)]));
        assert_eq!(c.nonzero_inclusions, BTreeSet::from([0]));
        assert_eq!(c.s_max, Some(0));
    }

    #[test]
    fn poincare_sphere() {
        let c = cone_ranks(&trefoil(), 1);
        assert_eq!(c.spinc_ranks, BTreeMap::from([(0, 1)]));
        assert_eq!(c.s_max, None);
    }

    #[test]
    fn trefoil_zero_surgery() {
        let c = cone_ranks(&trefoil(), 0);
        assert_eq!(c.spinc_ranks.get(&0), Some(&2));
        assert_eq!(c.total_rank, 2);
        assert_eq!(c.s_max, Some(0));
    }

    #[test]
    fn map_nonzero_examples() {
        assert!(surgery_map_nonzero(&trefoil(), 0, 0).unwrap());
        assert!(!surgery_map_nonzero(&trefoil(), 0, 1).unwrap());
        assert!(surgery_map_nonzero(&unknot(), -2, -1).unwrap());
        assert_eq!(
            surgery_map_nonzero(&unknot(), 1, 4),
            Err(Error::OutOfTruncation { s: 4, bound: 3 })
        );
    }

    #[test]
    fn profiles() {
        assert_eq!(
            trace_profile(&trefoil(), 0),
            TraceProfile { n: 0, s_max: Some(0), s_prime_max: None }
        );
        assert_eq!(
            trace_profile(&unknot(), 5),
            TraceProfile { n: 5, s_max: None, s_prime_max: Some(0) }
        );
    }

    #[test]
    fn truncation_floor() {
        assert!(matches!(
            cone_ranks_with_truncation(&unknot(), 2, 3),
            Err(Error::TruncationTooSmall { requested: 3, minimum: 4 })
        ));
        assert_eq!(
            cone_ranks_with_truncation(&trefoil(), 2, 8).unwrap().spinc_ranks,
            cone_ranks(&trefoil(), 2).spinc_ranks
        );
    }
}
