//! Closed-form consequences: Mazur-satellite formulas, the P/Q exoticness
//! test, shake-genus bounds, and the Bennequin and adjunction inequalities.
//!
//! Everything here works on invariant tuples. There is no complex for `P(K)`
//! or `Q(K)`, so the satellite side is formula-level only.

use serde::{Deserialize, Serialize};

use crate::complex::KnotComplex;
use crate::error::{Error, Result};
use crate::invariants::{self, InvariantBundle};
use crate::trace::{Determination, TRACE_INVARIANCE};

/// `(τ(P(K)), ε(P(K)))` for the untwisted Mazur pattern `P`.
pub fn levine(tau: i64, epsilon: i8) -> Result<(i64, i8)> {
    if !(-1..=1).contains(&epsilon) {
        return Err(Error::InconsistentInput(format!(
            "epsilon must be -1, 0 or 1, got {epsilon}"
        )));
    }
    if epsilon == 0 && tau != 0 {
        return Err(Error::InconsistentInput(format!(
            "epsilon = 0 forces tau = 0, got tau = {tau}"
        )));
    }
    let tau_p = if tau > 0 || epsilon == -1 { tau + 1 } else { tau };
    let epsilon_p = if tau == 0 && epsilon == 0 { 0 } else { 1 };
    Ok((tau_p, epsilon_p))
}

/// `ν(P(K))`.
pub fn nu_mazur(nu: i64, tau: i64) -> Result<i64> {
    if nu != tau && nu != tau + 1 {
        return Err(Error::InconsistentInput(format!(
            "nu must be tau or tau + 1, got nu = {nu}, tau = {tau}"
        )));
    }
    Ok(if nu == tau && tau > 0 { nu + 1 } else { nu })
}

/// Lower bound for `ν(P_n(K))` given `ν(P(K))`. Only `n ≤ 0` is supported.
pub fn twisted_nu_lower_bound(nu_p: i64, n: i64) -> Result<i64> {
    if n > 0 {
        return Err(Error::PositiveTwist(n));
    }
    Ok(nu_p)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SatelliteResult {
    pub tau_p: i64,
    pub nu_p: i64,
    pub epsilon_p: i8,
    /// Present when a twist parameter `n ≤ 0` was supplied.
    pub nu_pn_lower_bound: Option<i64>,
}

pub fn mazur_satellite(tau: i64, nu: i64, epsilon: i8, n: Option<i64>) -> Result<SatelliteResult> {
    let (tau_p, epsilon_p) = levine(tau, epsilon)?;
    let nu_p = nu_mazur(nu, tau)?;
    let nu_pn_lower_bound = n.map(|n| twisted_nu_lower_bound(nu_p, n)).transpose()?;
    Ok(SatelliteResult {
        tau_p,
        nu_p,
        epsilon_p,
        nu_pn_lower_bound,
    })
}

/// ε of a connected sum when sign additivity settles it.
pub fn epsilon_of_sum(a: i8, b: i8) -> Determination<i8> {
    match (a, b) {
        (x, y) if x == y => Determination::Determined(x),
        (0, y) => Determination::Determined(y),
        (x, 0) => Determination::Determined(x),
        _ => Determination::Undetermined,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "verdict")]
pub enum PqVerdict {
    /// `X_n(P_n(K))` and `X_n(Q_n(K))` are homeomorphic but not diffeomorphic.
    Exotic {
        nu_p_lower: i64,
        nu_q: i64,
        certificate: Vec<String>,
    },
    NotApplicable {
        reason: String,
    },
}

pub fn pq_verdict(complex: &KnotComplex, n: i64) -> Result<PqVerdict> {
    let b = invariants::bundle(complex)?;
    Ok(pq_verdict_from(&b, n))
}

pub fn pq_verdict_from(b: &InvariantBundle, n: i64) -> PqVerdict {
    if b.nu != b.tau {
        return PqVerdict::NotApplicable {
            reason: format!("nu = {} differs from tau = {}", b.nu, b.tau),
        };
    }
    if b.nu <= 0 {
        return PqVerdict::NotApplicable {
            reason: format!("nu = tau = {} is not positive", b.nu),
        };
    }
    if n > 0 {
        return PqVerdict::NotApplicable {
            reason: format!("framing n = {n} is positive"),
        };
    }
    let nu = b.nu;
    let nu_p = nu + 1;
    let certificate = vec![
        format!(
            "USES Levine's Mazur satellite formula: tau(P(K)) = tau(K) + 1 when tau(K) > 0, so tau(P(K)) = {}",
            b.tau + 1
        ),
        format!("USES nu(P(K)) = nu(K) + 1 when nu(K) = tau(K) > 0, so nu(P(K)) = {nu_p}"),
        format!(
            "USES twist inequality: a positive full twist about algebraically 1 strands does not increase nu, so n = {n} <= 0 gives nu(P_n(K)) >= nu(P(K)) = {nu_p}"
        ),
        format!("USES Q_n(K) is concordant to K and nu is a concordance invariant, so nu(Q_n(K)) = {nu}"),
        format!("USES nu(P_n(K)) >= {nu_p} > 1 and {nu_p} > {nu} = nu(Q_n(K)), so the exceptional pair {{0, 1}} cannot occur"),
        TRACE_INVARIANCE.to_string(),
    ];
    PqVerdict::Exotic {
        nu_p_lower: nu_p,
        nu_q: nu,
        certificate,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ShakeRule {
    /// `n < 2ν − 1` gives `ν − 1 ≤ g_sh`.
    NuMinusOne,
    /// `n = 0` or `2 − 2ν < n ≤ 2ν − 2` gives `ν ≤ g_sh`.
    Window,
    /// `−2 g_sh < n < 2ν − 1` gives `ν ≤ g_sh`.
    GenusDependent,
    /// `n ≥ 0` and `g_sh = 0` force `ν ≤ 0`.
    ZeroGenus,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShakeBound {
    pub bound: i64,
    pub rule: ShakeRule,
    pub conditional: bool,
    pub condition: String,
}

/// Lower bounds on the `n`-shake genus of a knot with the given ν.
pub fn shake_bounds(nu: i64, n: i64) -> Vec<ShakeBound> {
    let mut out = Vec::new();
    if n < 2 * nu - 1 {
        out.push(ShakeBound {
            bound: nu - 1,
            rule: ShakeRule::NuMinusOne,
            conditional: false,
            condition: format!("n = {n} < 2nu - 1 = {}", 2 * nu - 1),
        });
    }
    let in_window = 2 - 2 * nu < n && n <= 2 * nu - 2;
    if n == 0 || in_window {
        out.push(ShakeBound {
            bound: nu,
            rule: ShakeRule::Window,
            conditional: false,
            condition: if n == 0 {
                "n = 0".to_string()
            } else {
                format!("2 - 2nu = {} < n = {n} <= 2nu - 2 = {}", 2 - 2 * nu, 2 * nu - 2)
            },
        });
    } else if n < 2 * nu - 1 {
        out.push(ShakeBound {
            bound: nu,
            rule: ShakeRule::GenusDependent,
            conditional: true,
            condition: format!("holds if -2 g_sh < n = {n}"),
        });
    }
    if n >= 0 {
        out.push(ShakeBound {
            bound: nu,
            rule: ShakeRule::ZeroGenus,
            conditional: true,
            condition: format!("if g_sh = 0 then nu = {nu} <= 0"),
        });
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct InequalityVerdict {
    pub applicable: bool,
    pub lhs: i64,
    /// Right-hand side; needs `g_sh` for the shake-genus forms.
    pub rhs: Option<i64>,
    pub satisfied: Option<bool>,
}

impl InequalityVerdict {
    fn new(applicable: bool, lhs: i64, rhs: Option<i64>) -> Self {
        let satisfied = match (applicable, rhs) {
            (true, Some(r)) => Some(lhs <= r),
            _ => None,
        };
        InequalityVerdict {
            applicable,
            lhs,
            rhs,
            satisfied,
        }
    }

    fn violated(&self) -> bool {
        self.satisfied == Some(false)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BennequinReport {
    pub tb: i64,
    pub rot: i64,
    /// `tb + |rot| ≤ 2 g_sh + 1` for `n ≤ 2ν − 2`.
    pub weak: InequalityVerdict,
    /// `tb + |rot| ≤ 2 g_sh − 1` for `n = 0` or `2 − 2ν < n ≤ 2ν − 2`.
    pub strong: InequalityVerdict,
    /// `tb + |rot| ≤ 2τ − 1`; present when τ is known.
    pub classical: Option<InequalityVerdict>,
    /// An applicable inequality failed, so the inputs cannot all be correct.
    pub inconsistent_inputs: bool,
}

pub fn bennequin_check(tb: i64, rot: i64, nu: i64, n: i64, g_sh: Option<i64>) -> BennequinReport {
    let lhs = tb + rot.abs();
    let weak = InequalityVerdict::new(n <= 2 * nu - 2, lhs, g_sh.map(|g| 2 * g + 1));
    let strong = InequalityVerdict::new(
        n == 0 || (2 - 2 * nu < n && n <= 2 * nu - 2),
        lhs,
        g_sh.map(|g| 2 * g - 1),
    );
    BennequinReport {
        tb,
        rot,
        weak,
        strong,
        classical: None,
        inconsistent_inputs: weak.violated() || strong.violated(),
    }
}

impl BennequinReport {
    pub fn with_tau(mut self, tau: i64) -> Self {
        let classical = InequalityVerdict::new(true, self.weak.lhs, Some(2 * tau - 1));
        self.inconsistent_inputs |= classical.violated();
        self.classical = Some(classical);
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Surface {
    /// Closed surface of genus `genus` in a cobordism with `b₂⁺ = 0`.
    Closed { genus: i64 },
    /// Disk in a punctured negative-definite manifold bounding the knot.
    Disk { nu: i64 },
    /// Genus-`genus` surface bounding the knot in a punctured negative-definite manifold.
    WithBoundary { tau: i64, genus: i64 },
}

/// Whether the inequality for `surface` permits the class with the given
/// self-intersection and `c1` pairing (for bounded surfaces `c1` is the L¹ norm).
pub fn adjunction_allows(surface: Surface, self_int: i64, c1: i64) -> Result<bool> {
    Ok(match surface {
        Surface::Closed { genus } => {
            if genus < 0 {
                return Err(Error::NegativeGenus(genus));
            }
            let rhs = if self_int > -2 * genus { 2 * genus - 2 } else { 2 * genus };
            c1.abs() + self_int <= rhs
        }
        Surface::Disk { nu } => 2 * nu + c1.abs() + self_int <= 0,
        Surface::WithBoundary { tau, genus } => {
            if genus < 0 {
                return Err(Error::NegativeGenus(genus));
            }
            2 * tau + c1.abs() + self_int <= 2 * genus
        }
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdjunctionInputs {
    pub genus: i64,
    pub self_intersection: i64,
    pub c1_pairing: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub framing: i64,
    pub shake_lower_bounds: Vec<ShakeBound>,
    pub bennequin: Option<BennequinReport>,
    pub adjunction_inputs: Option<AdjunctionInputs>,
}

impl BoundReport {
    pub fn new(nu: i64, n: i64) -> Self {
        BoundReport {
            framing: n,
            shake_lower_bounds: shake_bounds(nu, n),
            bennequin: None,
            adjunction_inputs: None,
        }
    }

    /// Largest bound that holds without extra hypotheses.
    pub fn best_unconditional(&self) -> Option<i64> {
        self.shake_lower_bounds
            .iter()
            .filter(|b| !b.conditional)
            .map(|b| b.bound)
            .max()
    }
}
