//! Command dispatch shared by the binary and the tests.

use std::fmt::Write as _;
use std::fs;

use serde_json::{json, Value};

use crate::cache::Cache;
use crate::complex::KnotComplex;
use crate::error::{Error, Result};
use crate::formulas::{self, BoundReport, PqVerdict};
use crate::invariants;
use crate::library::{self, PublishedValues, LIBRARY_PREFIX};
use crate::report::{InputDigest, Parameters, Report};
use crate::surgery;
use crate::trace;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Command {
    Invariants {
        input: String,
    },
    Surgery {
        input: String,
        framing: i64,
        truncation: Option<i64>,
    },
    Profile {
        input: String,
        framing: i64,
    },
    Compare {
        first: String,
        second: String,
        framing: i64,
    },
    Pq {
        input: String,
        framing: i64,
    },
    Bounds {
        input: String,
        framing: i64,
        tb: Option<i64>,
        rot: Option<i64>,
        g_sh: Option<i64>,
    },
    LibraryList,
    LibraryShow {
        name: String,
    },
}

impl Command {
    /// Canonical command line, echoed into reports and hashed into cache keys.
    pub fn echo(&self) -> String {
        let mut s = match self {
            Command::Invariants { input } => format!("invariants {input}"),
            Command::Surgery { input, framing, .. } => format!("surgery {input} -n {framing}"),
            Command::Profile { input, framing } => format!("profile {input} -n {framing}"),
            Command::Compare {
                first,
                second,
                framing,
            } => format!("compare {first} {second} -n {framing}"),
            Command::Pq { input, framing } => format!("pq {input} -n {framing}"),
            Command::Bounds { input, framing, .. } => format!("bounds {input} -n {framing}"),
            Command::LibraryList => "library list".to_string(),
            Command::LibraryShow { name } => format!("library show {name}"),
        };
        match self {
            Command::Surgery {
                truncation: Some(b),
                ..
            } => write!(s, " --truncation {b}").unwrap(),
            Command::Bounds { tb, rot, g_sh, .. } => {
                for (flag, v) in [("--tb", tb), ("--rot", rot), ("--gsh", g_sh)] {
                    if let Some(v) = v {
                        write!(s, " {flag} {v}").unwrap();
                    }
                }
            }
            _ => {}
        }
        s
    }

    fn inputs(&self) -> Vec<&str> {
        match self {
            Command::Invariants { input }
            | Command::Surgery { input, .. }
            | Command::Profile { input, .. }
            | Command::Pq { input, .. }
            | Command::Bounds { input, .. } => vec![input],
            Command::Compare { first, second, .. } => vec![first, second],
            Command::LibraryShow { name } => vec![name],
            Command::LibraryList => vec![],
        }
    }

    fn framing(&self) -> Option<i64> {
        match self {
            Command::Surgery { framing, .. }
            | Command::Profile { framing, .. }
            | Command::Compare { framing, .. }
            | Command::Pq { framing, .. }
            | Command::Bounds { framing, .. } => Some(*framing),
            _ => None,
        }
    }
}

/// A resolved input: a `lib:` expression or a path to a complex file.
pub struct Input {
    pub source: String,
    pub complex: KnotComplex,
    pub published: Option<PublishedValues>,
}

pub fn load_input(source: &str) -> Result<Input> {
    if source.starts_with(LIBRARY_PREFIX) {
        let entry = library::resolve(source)?;
        return Ok(Input {
            source: source.to_string(),
            complex: entry.complex,
            published: entry.published,
        });
    }
    let text = fs::read_to_string(source).map_err(|e| Error::Io(format!("{source}: {e}")))?;
    Ok(Input {
        source: source.to_string(),
        complex: KnotComplex::parse(&text)?,
        published: None,
    })
}

#[derive(Debug, Clone, Default)]
pub struct RunOptions {
    /// `None` disables caching.
    pub cache: Option<Cache>,
}

pub fn run(command: &Command, options: &RunOptions) -> Result<Report> {
    let inputs: Vec<Input> = match command {
        Command::LibraryShow { name } => {
            let source = if name.starts_with(LIBRARY_PREFIX) {
                name.clone()
            } else {
                format!("{LIBRARY_PREFIX}{name}")
            };
            vec![load_input(&source)?]
        }
        _ => command.inputs().into_iter().map(load_input).collect::<Result<_>>()?,
    };

    let texts: Vec<String> = inputs.iter().map(|i| i.complex.to_text()).collect();
    let mut key_parts: Vec<&str> = vec![crate::VERSION, "report"];
    let echo = command.echo();
    key_parts.push(&echo);
    key_parts.extend(texts.iter().map(String::as_str));
    let key = Cache::key(&key_parts);
    if let Some(hit) = options.cache.as_ref().and_then(|c| c.get(&key)) {
        return Ok(hit);
    }

    let report = execute(command, &inputs)?;
    if let Some(cache) = &options.cache {
        cache.put(&key, &report);
    }
    Ok(report)
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("result types always serialize")
}

fn execute(command: &Command, inputs: &[Input]) -> Result<Report> {
    let digests = inputs
        .iter()
        .map(|i| InputDigest::new(&i.source, &i.complex))
        .collect();
    let mut parameters = Parameters {
        framing: command.framing(),
        truncation: None,
    };
    let mut certificate = Vec::new();
    let mut warnings = Vec::new();

    let results = match command {
        Command::Invariants { .. } => {
            let input = &inputs[0];
            let bundle = invariants::bundle(&input.complex)?;
            let mut results = json!({
                "bundle": bundle,
                "hfk_ranks": input.complex.hfk_ranks().ranks,
            });
            if let Some(p) = &input.published {
                let matches = (p.tau, p.nu, p.epsilon, p.genus)
                    == (bundle.tau, bundle.nu, bundle.epsilon, bundle.genus);
                results["published_match"] = json!(matches);
                if !matches {
                    warnings.push(format!("computed values differ from published ones ({})", p.citation));
                }
            }
            results
        }
        Command::Surgery {
            framing,
            truncation,
            ..
        } => {
            let c = &inputs[0].complex;
            let cone = match truncation {
                Some(b) => surgery::cone_ranks_with_truncation(c, *framing, *b)?,
                None => surgery::cone_ranks(c, *framing),
            };
            parameters.truncation = Some(cone.truncation);
            let mut value = to_value(&cone);
            // Results must not depend on the truncation chosen.
            value.as_object_mut().unwrap().remove("truncation");
            value
        }
        Command::Profile { framing, .. } => {
            let profile = surgery::trace_profile(&inputs[0].complex, *framing);
            let inference = trace::infer_from_profile(profile)?;
            json!({
                "profile": profile,
                "nu_bounds": trace::nu_bounds_from_smax(profile.s_max, *framing),
                "inference": inference,
            })
        }
        Command::Compare { framing, .. } => {
            let pa = surgery::trace_profile(&inputs[0].complex, *framing);
            let pb = surgery::trace_profile(&inputs[1].complex, *framing);
            let comparison = trace::compare_traces(pa, pb)?;
            certificate = comparison.certificate.clone();
            json!({ "profiles": [pa, pb], "comparison": comparison })
        }
        Command::Pq { framing, .. } => {
            let bundle = invariants::bundle(&inputs[0].complex)?;
            let twist = (*framing <= 0).then_some(*framing);
            let satellite = formulas::mazur_satellite(bundle.tau, bundle.nu, bundle.epsilon, twist)?;
            let verdict = formulas::pq_verdict_from(&bundle, *framing);
            if let PqVerdict::Exotic { certificate: c, .. } = &verdict {
                certificate = c.clone();
            }
            json!({ "bundle": bundle, "satellite": satellite, "verdict": verdict })
        }
        Command::Bounds {
            framing,
            tb,
            rot,
            g_sh,
            ..
        } => {
            let c = &inputs[0].complex;
            let bundle = invariants::bundle(c)?;
            let mut report = BoundReport::new(bundle.nu, *framing);
            match (tb, rot) {
                (Some(tb), Some(rot)) => {
                    let b = formulas::bennequin_check(*tb, *rot, bundle.nu, *framing, *g_sh)
                        .with_tau(bundle.tau);
                    if b.inconsistent_inputs {
                        warnings.push("an applicable Bennequin-type inequality fails: inputs are inconsistent".into());
                    }
                    report.bennequin = Some(b);
                }
                (None, None) => {}
                _ => {
                    return Err(Error::InconsistentInput(
                        "--tb and --rot must be given together".into(),
                    ))
                }
            }
            for b in report.shake_lower_bounds.iter().filter(|b| !b.conditional) {
                if b.bound > c.genus() {
                    warnings.push(format!(
                        "{:?} bound {} exceeds the Seifert genus {}",
                        b.rule,
                        b.bound,
                        c.genus()
                    ));
                }
            }
            json!({
                "nu": bundle.nu,
                "genus": c.genus(),
                "best_unconditional": report.best_unconditional(),
                "bounds": report,
            })
        }
        Command::LibraryList => {
            let entries: Vec<Value> = library::builtins()
                .iter()
                .map(|e| {
                    json!({
                        "name": e.name,
                        "generators": e.complex.len(),
                        "published": e.published,
                    })
                })
                .collect();
            json!({ "entries": entries })
        }
        Command::LibraryShow { .. } => {
            let entry = library::resolve(&inputs[0].source)?;
            json!({ "entry": entry, "complex": entry.complex.to_text() })
        }
    };

    let mut report = Report::new(command.echo(), digests, parameters, results);
    report.certificate = certificate;
    report.warnings = warnings;
    Ok(report)
}
