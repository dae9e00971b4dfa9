//! What the oriented trace `X_n(K)` reveals about ν and |ε|.
//!
//! The cobordism-map characterisation gives, from (ν, ε, n), exactly which
//! spin^c structures induce nonzero maps. Reading that backwards, the triple
//! `(n, s_max, s'_max)` pins down ν except in one family of cases.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TraceProfile {
    pub n: i64,
    pub s_max: Option<i64>,
    pub s_prime_max: Option<i64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MapPrediction {
    Zero,
    Nonzero,
}

/// Predicted nontriviality of `F_s` on the `n`-trace of a knot with the given ν, ε.
pub fn predict_f_s(nu: i64, epsilon: i8, n: i64, s: i64) -> MapPrediction {
    let chern = (2 * s - n).abs();
    let threshold = 2 * nu - n;
    if chern < threshold || (chern == threshold && epsilon == 0 && n <= 0) {
        MapPrediction::Nonzero
    } else {
        MapPrediction::Zero
    }
}

/// Bounds on ν from the largest nontrivial spin^c label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct NuBounds {
    pub lower: Option<i64>,
    pub upper: i64,
    /// Set when ν = s_max is ruled out, which happens unless s_max = 0 and n ≤ 0.
    pub exact: Option<i64>,
}

pub fn nu_bounds_from_smax(s_max: Option<i64>, n: i64) -> NuBounds {
    match s_max {
        None => NuBounds {
            lower: None,
            upper: if n % 2 == 0 { n / 2 } else { (n + 1) / 2 },
            exact: None,
        },
        Some(s) => NuBounds {
            lower: Some(s),
            upper: s + 1,
            // ν = s_max forces ε = ν = 0 and n ≤ 0.
            exact: (s != 0 || n > 0).then_some(s + 1),
        },
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "status", content = "value")]
pub enum Determination<T> {
    Determined(T),
    Undetermined,
}

impl<T: Copy> Determination<T> {
    pub fn value(self) -> Option<T> {
        match self {
            Determination::Determined(v) => Some(v),
            Determination::Undetermined => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InferenceOutcome {
    pub nu: Determination<i64>,
    pub abs_epsilon: Determination<u8>,
    /// Table rows (1 to 9) whose hypotheses held.
    pub rows: Vec<u8>,
}

type RowConclusion = (u8, Option<i64>, Option<u8>);

/// Applies every row of the inference table to `p` and merges the conclusions.
pub fn infer_from_profile(p: TraceProfile) -> Result<InferenceOutcome> {
    let TraceProfile {
        n,
        s_max,
        s_prime_max,
    } = p;
    let mut fired: Vec<RowConclusion> = Vec::new();

    if let Some(s) = s_max {
        if s != 0 {
            fired.push((1, Some(s + 1), Some(1)));
        }
        if n > 0 {
            fired.push((2, Some(s + 1), Some(1)));
        }
        if s == 0 && n == 0 {
            match s_prime_max {
                Some(_) => fired.push((3, Some(0), Some(0))),
                None => fired.push((4, Some(1), Some(1))),
            }
        }
        if s == 0 && s_prime_max.is_none() && n < 0 {
            fired.push((9, None, None));
        }
    }
    if s_max.is_none() {
        match s_prime_max {
            Some(0) if n > 0 => fired.push((5, Some(0), None)),
            None => {
                if n % 2 == 0 {
                    return Err(Error::EvenFramingUndetermined(n));
                }
                fired.push((6, Some((n + 1) / 2), Some(1)));
            }
            _ => {}
        }
    }
    if let Some(sp) = s_prime_max {
        if sp != 0 {
            fired.push((7, Some(-sp), Some(1)));
        }
        if n < 0 {
            fired.push((8, Some(-sp), Some(1)));
        }
    }

    let nu = merge(&fired, |r| r.1, "nu")?;
    let abs_epsilon = merge(&fired, |r| r.2, "|epsilon|")?;
    Ok(InferenceOutcome {
        nu,
        abs_epsilon,
        rows: fired.iter().map(|r| r.0).collect(),
    })
}

fn merge<T: Copy + PartialEq>(
    fired: &[RowConclusion],
    field: impl Fn(&RowConclusion) -> Option<T>,
    name: &'static str,
) -> Result<Determination<T>> {
    let mut found: Option<(u8, T)> = None;
    for r in fired {
        if let Some(v) = field(r) {
            match found {
                Some((row, w)) if w != v => {
                    return Err(Error::RowConflict {
                        first: row,
                        second: r.0,
                        field: name,
                    })
                }
                Some(_) => {}
                None => found = Some((r.0, v)),
            }
        }
    }
    Ok(match found {
        Some((_, v)) => Determination::Determined(v),
        None => Determination::Undetermined,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "verdict")]
pub enum TraceVerdict {
    NotDiffeomorphic { nu_a: i64, nu_b: i64 },
    Inconclusive { reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceComparison {
    pub inference_a: InferenceOutcome,
    pub inference_b: InferenceOutcome,
    pub verdict: TraceVerdict,
    pub certificate: Vec<String>,
}

pub const TRACE_INVARIANCE: &str = "USES trace invariance of nu: X_n(K) diffeomorphic to X_n(K') \
     forces nu(K) = nu(K') unless n < 0 and {nu(K), nu(K')} = {0, 1}";

/// Decides whether the oriented traces with the given profiles can be diffeomorphic.
pub fn compare_traces(a: TraceProfile, b: TraceProfile) -> Result<TraceComparison> {
    if a.n != b.n {
        return Err(Error::FramingMismatch(a.n, b.n));
    }
    let n = a.n;
    let inference_a = infer_from_profile(a)?;
    let inference_b = infer_from_profile(b)?;
    let mut certificate = Vec::new();
    let verdict = match (inference_a.nu, inference_b.nu) {
        (Determination::Determined(x), Determination::Determined(y)) if x != y => {
            let exceptional = n < 0 && x.min(y) == 0 && x.max(y) == 1;
            if exceptional {
                TraceVerdict::Inconclusive {
                    reason: format!("nu values {{{x}, {y}}} = {{0, 1}} with n = {n} < 0"),
                }
            } else {
                certificate.push(format!(
                    "USES trace inference table: rows {:?} give nu = {x}, rows {:?} give nu = {y}",
                    inference_a.rows, inference_b.rows
                ));
                certificate.push(TRACE_INVARIANCE.to_string());
                TraceVerdict::NotDiffeomorphic { nu_a: x, nu_b: y }
            }
        }
        (Determination::Determined(_), Determination::Determined(_)) => TraceVerdict::Inconclusive {
            reason: "both traces give the same nu".into(),
        },
        _ => TraceVerdict::Inconclusive {
            reason: "nu is undetermined by at least one profile".into(),
        },
    };
    Ok(TraceComparison {
        inference_a,
        inference_b,
        verdict,
        certificate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use Determination::*;

    fn profile(n: i64, s_max: Option<i64>, s_prime_max: Option<i64>) -> TraceProfile {
        TraceProfile {
            n,
            s_max,
            s_prime_max,
        }
    }

    #[test]
    fn prediction_cases() {
        assert_eq!(predict_f_s(1, 1, 0, 0), MapPrediction::Nonzero);
        assert_eq!(predict_f_s(0, 0, 0, 0), MapPrediction::Nonzero);
        assert_eq!(predict_f_s(0, 0, 1, 0), MapPrediction::Zero);
        assert_eq!(predict_f_s(1, 1, 0, 1), MapPrediction::Zero);
        assert_eq!(predict_f_s(0, 0, -2, -1), MapPrediction::Nonzero);
    }

    #[test]
    fn bounds_from_smax() {
        let b = nu_bounds_from_smax(Some(0), 0);
        assert_eq!((b.lower, b.upper, b.exact), (Some(0), 1, None));
        assert_eq!(nu_bounds_from_smax(None, 1).upper, 1);
        assert_eq!(nu_bounds_from_smax(None, 4).upper, 2);
        assert_eq!(nu_bounds_from_smax(None, -3).upper, -1);
        let b = nu_bounds_from_smax(Some(2), -1);
        assert_eq!((b.lower, b.upper, b.exact), (Some(2), 3, Some(3)));
    }

    #[test]
    fn table_rows() {
        let t = infer_from_profile(profile(0, Some(0), None)).unwrap();
        assert_eq!((t.nu, t.abs_epsilon, t.rows), (Determined(1), Determined(1), vec![4]));
        let f = infer_from_profile(profile(0, Some(0), Some(0))).unwrap();
        assert_eq!((f.nu, f.abs_epsilon, f.rows), (Determined(0), Determined(0), vec![3]));
        let u = infer_from_profile(profile(-3, Some(0), None)).unwrap();
        assert_eq!((u.nu, u.abs_epsilon, u.rows), (Undetermined, Undetermined, vec![9]));
        let r5 = infer_from_profile(profile(5, None, Some(0))).unwrap();
        assert_eq!((r5.nu, r5.abs_epsilon), (Determined(0), Undetermined));
        let r6 = infer_from_profile(profile(-1, None, None)).unwrap();
        assert_eq!((r6.nu, r6.rows), (Determined(0), vec![6]));
        let r12 = infer_from_profile(profile(2, Some(1), None)).unwrap();
        assert_eq!((r12.nu, r12.rows), (Determined(2), vec![1, 2]));
        let r78 = infer_from_profile(profile(-1, None, Some(1))).unwrap();
        assert_eq!((r78.nu, r78.rows), (Determined(-1), vec![7, 8]));
    }

    #[test]
    fn table_errors() {
        assert_eq!(
            infer_from_profile(profile(2, None, None)),
            Err(Error::EvenFramingUndetermined(2))
        );
        // rows 1 (nu = 3) and 7 (nu = 1) cannot both hold for a real knot
        assert!(matches!(
            infer_from_profile(profile(0, Some(2), Some(-1))),
            Err(Error::RowConflict { first: 1, second: 7, .. })
        ));
    }

    #[test]
    fn comparisons() {
        let c = compare_traces(profile(0, Some(1), None), profile(0, Some(0), None)).unwrap();
        assert_eq!(c.verdict, TraceVerdict::NotDiffeomorphic { nu_a: 2, nu_b: 1 });
        assert_eq!(c.certificate.len(), 2);

        // nu = 1 vs nu = 0 at n = -2 is the exceptional case
        let c = compare_traces(profile(-2, Some(0), Some(-1)), profile(-2, Some(-1), Some(0))).unwrap();
        assert_eq!(c.inference_a.nu, Determined(1));
        assert_eq!(c.inference_b.nu, Determined(0));
        assert!(matches!(c.verdict, TraceVerdict::Inconclusive { .. }));

        let same = profile(2, Some(0), None);
        assert!(matches!(
            compare_traces(same, same).unwrap().verdict,
            TraceVerdict::Inconclusive { .. }
        ));
        assert_eq!(
            compare_traces(profile(1, None, None), profile(0, None, None)),
            Err(Error::FramingMismatch(1, 0))
        );
    }
}
