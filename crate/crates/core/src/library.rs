//! Built-in complexes and the `lib:` expression resolver.
//!
//! Expressions combine entry names with `-` (mirror), `#` (connected sum) and
//! parentheses, e.g. `lib:-T23`, `lib:T23#fig8`, `lib:-(T23#T25)#fig8`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::complex::{Generator, KnotComplex};
use crate::error::{Error, Result};

pub const LIBRARY_PREFIX: &str = "lib:";

/// Invariant values known from the literature, used as a regression contract.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PublishedValues {
    pub tau: i64,
    pub nu: i64,
    pub epsilon: i8,
    pub genus: i64,
    pub citation: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "relation", content = "of")]
pub enum Relation {
    MirrorOf(String),
    SumOf(Vec<String>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LibraryEntry {
    pub name: String,
    #[serde(skip)]
    pub complex: KnotComplex,
    pub published: Option<PublishedValues>,
    pub relations: Vec<Relation>,
}

pub const BUILTIN_NAMES: [&str; 5] = ["unknot", "T23", "T25", "T27", "fig8"];

fn generator(id: impl Into<String>, alexander: i64, maslov: i64) -> Generator {
    Generator {
        id: id.into(),
        alexander,
        maslov,
    }
}

/// The staircase model of `T_{2,2m+1}`: generators `g_m, …, g_{-m}` in a
/// zigzag, each odd-position generator hitting both neighbours.
pub fn staircase(m: usize) -> KnotComplex {
    let m = m as i64;
    let id = |p: i64| format!("g{}", m - p);
    let generators = (0..=2 * m).map(|p| generator(id(p), m - p, -p)).collect();
    let mut arrows = Vec::new();
    for p in (1..2 * m).step_by(2) {
        arrows.push((id(p), id(p - 1)));
        arrows.push((id(p), id(p + 1)));
    }
    KnotComplex::new(format!("T2{}", 2 * m + 1), generators, &arrows)
        .expect("staircases are valid complexes")
}

pub fn unknot() -> KnotComplex {
    KnotComplex::new("unknot", vec![generator("u", 0, 0)], &[] as &[(&str, &str)])
        .expect("the unknot is a valid complex")
}

/// Figure-eight: a unit box `q → p, s → r` plus an isolated generator `e`.
pub fn figure_eight() -> KnotComplex {
    KnotComplex::new(
        "fig8",
        vec![
            generator("p", 1, 1),
            generator("q", 0, 0),
            generator("r", 0, 0),
            generator("e", 0, 0),
            generator("s", -1, -1),
        ],
        &[("q", "p"), ("q", "s"), ("p", "r"), ("s", "r")],
    )
    .expect("the figure-eight box is a valid complex")
}

/// One of the built-in entries by exact name.
pub fn builtin(name: &str) -> Option<LibraryEntry> {
    let (complex, published) = match name {
        "unknot" => (
            unknot(),
            PublishedValues {
                tau: 0,
                nu: 0,
                epsilon: 0,
                genus: 0,
                citation: "unknot: all invariants vanish",
            },
        ),
        "T23" | "T25" | "T27" => {
            let m = match name {
                "T23" => 1,
                "T25" => 2,
                _ => 3,
            };
            (
                staircase(m),
                PublishedValues {
                    tau: m as i64,
                    nu: m as i64,
                    epsilon: 1,
                    genus: m as i64,
                    citation: "torus knots T(2,2m+1): tau = nu = g = m, epsilon = 1 (Ozsvath-Szabo)",
                },
            )
        }
        "fig8" => (
            figure_eight(),
            PublishedValues {
                tau: 0,
                nu: 0,
                epsilon: 0,
                genus: 1,
                citation: "figure-eight: amphichiral, tau = nu = epsilon = 0 (Hom)",
            },
        ),
        _ => return None,
    };
    Some(LibraryEntry {
        name: name.to_string(),
        complex,
        published: Some(published),
        relations: Vec::new(),
    })
}

pub fn builtins() -> Vec<LibraryEntry> {
    BUILTIN_NAMES.iter().filter_map(|n| builtin(n)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Expr {
    Name(String),
    Mirror(Box<Expr>),
    Sum(Vec<Expr>),
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<char> {
        self.src[self.pos..].chars().next()
    }

    fn bump(&mut self) {
        self.pos += self.peek().map_or(0, char::len_utf8);
    }

    fn error(&self, what: &str) -> Error {
        Error::UnknownLibraryEntry(format!("{} ({what} at offset {})", self.src, self.pos))
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut terms = vec![self.term()?];
        while self.peek() == Some('#') {
            self.bump();
            terms.push(self.term()?);
        }
        Ok(if terms.len() == 1 { terms.pop().unwrap() } else { Expr::Sum(terms) })
    }

    fn term(&mut self) -> Result<Expr> {
        match self.peek() {
            Some('-') => {
                self.bump();
                Ok(Expr::Mirror(Box::new(self.term()?)))
            }
            Some('(') => {
                self.bump();
                let inner = self.sum()?;
                if self.peek() != Some(')') {
                    return Err(self.error("expected `)`"));
                }
                self.bump();
                Ok(inner)
            }
            _ => {
                let start = self.pos;
                while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '_') {
                    self.bump();
                }
                if start == self.pos {
                    return Err(self.error("expected a name"));
                }
                Ok(Expr::Name(self.src[start..self.pos].to_string()))
            }
        }
    }
}

fn evaluate(expr: &Expr) -> Result<KnotComplex> {
    match expr {
        Expr::Name(n) => builtin(n)
            .map(|e| e.complex)
            .ok_or_else(|| Error::UnknownLibraryEntry(n.clone())),
        Expr::Mirror(inner) => Ok(evaluate(inner)?.mirror()),
        Expr::Sum(terms) => {
            let mut acc = evaluate(&terms[0])?;
            for t in &terms[1..] {
                acc = acc.connected_sum(&evaluate(t)?);
            }
            Ok(acc)
        }
    }
}

fn canonical(expr: &Expr, nested: bool) -> String {
    match expr {
        Expr::Name(n) => n.clone(),
        Expr::Mirror(inner) => format!("-{}", canonical(inner, true)),
        Expr::Sum(terms) => {
            let body = terms.iter().map(|t| canonical(t, true)).collect::<Vec<_>>().join("#");
            if nested {
                format!("({body})")
            } else {
                body
            }
        }
    }
}

/// Resolves a library expression (with or without the `lib:` prefix).
pub fn resolve(expression: &str) -> Result<LibraryEntry> {
    let src = expression.strip_prefix(LIBRARY_PREFIX).unwrap_or(expression);
    let src: String = src.chars().filter(|c| !c.is_whitespace()).collect();
    let mut parser = Parser { src: &src, pos: 0 };
    let expr = parser.sum()?;
    if parser.pos != src.len() {
        return Err(parser.error("unexpected character"));
    }
    if let Expr::Name(n) = &expr {
        return builtin(n).ok_or_else(|| Error::UnknownLibraryEntry(n.clone()));
    }
    let name = canonical(&expr, false);
    let complex = evaluate(&expr)?.with_name(name.clone());
    let relations = match &expr {
        Expr::Mirror(inner) => vec![Relation::MirrorOf(canonical(inner, false))],
        Expr::Sum(terms) => vec![Relation::SumOf(
            terms.iter().map(|t| canonical(t, false)).collect(),
        )],
        Expr::Name(_) => Vec::new(),
    };
    Ok(LibraryEntry {
        name,
        complex,
        published: None,
        relations,
    })
}

/// Name → generator count, for listings.
pub fn summary() -> BTreeMap<&'static str, usize> {
    BUILTIN_NAMES
        .iter()
        .map(|&n| (n, builtin(n).map_or(0, |e| e.complex.len())))
        .collect()
}
