//! The concordance invariants τ, ν and ε.

use serde::{Deserialize, Serialize};

use crate::complex::KnotComplex;
use crate::error::{Error, Result};
use crate::hook::EdgeMapper;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantBundle {
    pub tau: i64,
    pub nu: i64,
    pub epsilon: i8,
    pub genus: i64,
    pub tau_mirror: i64,
    pub nu_mirror: i64,
}

/// Smallest `s` with `v_s` surjective on homology.
pub fn nu(complex: &KnotComplex) -> i64 {
    nu_with(&EdgeMapper::new(complex))
}

fn nu_with(mapper: &EdgeMapper<'_>) -> i64 {
    // At s = span the hook A_s is all of B and v_s is the identity.
    let span = mapper.complex().alexander_span();
    (-span..=span)
        .find(|&s| mapper.edge_maps(s).v_nonzero())
        .expect("v_s is the identity once s exceeds every Alexander grading")
}

/// Smallest `s` such that `{j ≤ s} ⊂ B` carries the generator of `H(B)`.
pub fn tau(complex: &KnotComplex) -> i64 {
    tau_with(&EdgeMapper::new(complex))
}

fn tau_with(mapper: &EdgeMapper<'_>) -> i64 {
    let span = mapper.complex().alexander_span();
    (-span..=span)
        .find(|&s| mapper.sublevel_surjects(s))
        .expect("the full column carries its own homology")
}

/// ε from (τ, ν) of a knot and its mirror.
pub fn epsilon_from(tau: i64, nu: i64, tau_mirror: i64, nu_mirror: i64) -> Result<i8> {
    match (nu - tau, nu_mirror - tau_mirror) {
        (1, 0) => Ok(-1),
        (0, 0) => Ok(0),
        (0, 1) => Ok(1),
        _ => Err(Error::Exhaustiveness {
            tau,
            nu,
            tau_mirror,
            nu_mirror,
        }),
    }
}

pub fn epsilon(complex: &KnotComplex) -> Result<i8> {
    Ok(bundle(complex)?.epsilon)
}

pub fn bundle(complex: &KnotComplex) -> Result<InvariantBundle> {
    let mapper = EdgeMapper::new(complex);
    let mirror = complex.mirror();
    let mirror_mapper = EdgeMapper::new(&mirror);
    let (tau, nu) = (tau_with(&mapper), nu_with(&mapper));
    let (tau_mirror, nu_mirror) = (tau_with(&mirror_mapper), nu_with(&mirror_mapper));
    let epsilon = epsilon_from(tau, nu, tau_mirror, nu_mirror)?;
    if epsilon == 0 && (tau != 0 || nu != 0 || nu_mirror != 0) {
        return Err(Error::Exhaustiveness {
            tau,
            nu,
            tau_mirror,
            nu_mirror,
        });
    }
    Ok(InvariantBundle {
        tau,
        nu,
        epsilon,
        genus: complex.genus(),
        tau_mirror,
        nu_mirror,
    })
}
