//! Finite models of the full knot Floer complex over F₂.
//!
//! A complex is a list of generators carrying Alexander and Maslov gradings
//! and a set of arrows. The power of `U` on an arrow is not stored: it is
//! forced by the gradings, since the differential lowers Maslov grading by one
//! and `U` lowers it by two.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::ComplexError;
use crate::f2::{BitVector, F2Matrix};
use crate::hook::{homology, subquotient, HookKind};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Generator {
    pub id: String,
    pub alexander: i64,
    pub maslov: i64,
}

/// Arrow `from -> to` together with the filtration drops it forces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arrow {
    pub from: usize,
    pub to: usize,
    /// Power of `U`: the drop in the `i` coordinate.
    pub i_drop: i64,
    /// Drop in the `j` coordinate.
    pub j_drop: i64,
}

/// Ranks of the homology of the associated graded complex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HfkRanks {
    pub ranks: BTreeMap<i64, usize>,
    pub genus: i64,
}

/// A validated finite model of CFK^∞.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnotComplex {
    name: String,
    generators: Vec<Generator>,
    arrows: Vec<Arrow>,
    genus: i64,
}

/// Raised by [`KnotComplex::is_isomorphic`] when a grading class is too large to search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ComparisonUnsupported;

const MAX_CLASS_FOR_ISOMORPHISM: usize = 3;

fn arrow_drops(generators: &[Generator], from: usize, to: usize) -> Result<(i64, i64), ComplexError> {
    let (x, y) = (&generators[from], &generators[to]);
    let violation = |reason: String| ComplexError::Grading {
        from: x.id.clone(),
        to: y.id.clone(),
        reason,
    };
    let twice = y.maslov - x.maslov + 1;
    if twice.rem_euclid(2) != 0 {
        return Err(violation(format!(
            "U-power (M({}) - M({}) + 1)/2 = {twice}/2 is not an integer",
            y.id, x.id
        )));
    }
    let i_drop = twice / 2;
    if i_drop < 0 {
        return Err(violation(format!("negative U-power {i_drop}")));
    }
    let j_drop = i_drop + x.alexander - y.alexander;
    if j_drop < 0 {
        return Err(violation(format!("arrow raises the j filtration by {}", -j_drop)));
    }
    Ok((i_drop, j_drop))
}

impl KnotComplex {
    /// Builds and validates a complex from generators and arrows given by id.
    pub fn new<S: AsRef<str>>(
        name: impl Into<String>,
        generators: Vec<Generator>,
        arrows: &[(S, S)],
    ) -> Result<Self, ComplexError> {
        let index = id_index(&generators).map_err(|id| ComplexError::Parse {
            line: 0,
            message: format!("duplicate generator `{id}`"),
        })?;
        let lookup = |id: &str| {
            index.get(id).copied().ok_or_else(|| ComplexError::Parse {
                line: 0,
                message: format!("arrow mentions unknown generator `{id}`"),
            })
        };
        let mut pairs = Vec::with_capacity(arrows.len());
        for (from, to) in arrows {
            pairs.push((lookup(from.as_ref())?, lookup(to.as_ref())?));
        }
        Self::from_indexed(name.into(), generators, pairs)
    }

    fn from_indexed(
        name: String,
        generators: Vec<Generator>,
        pairs: Vec<(usize, usize)>,
    ) -> Result<Self, ComplexError> {
        let mut seen = HashSet::new();
        let mut arrows = Vec::with_capacity(pairs.len());
        for (from, to) in pairs {
            if !seen.insert((from, to)) {
                return Err(ComplexError::Parse {
                    line: 0,
                    message: format!(
                        "duplicate arrow {} -> {}",
                        generators[from].id, generators[to].id
                    ),
                });
            }
            let (i_drop, j_drop) = arrow_drops(&generators, from, to)?;
            arrows.push(Arrow {
                from,
                to,
                i_drop,
                j_drop,
            });
        }
        arrows.sort();
        let mut complex = KnotComplex {
            name,
            generators,
            arrows,
            genus: 0,
        };
        complex.validate()?;
        Ok(complex)
    }

    /// Parses the line-oriented text format and validates the result.
    ///
    /// ```text
    /// knot T23
    /// gen a A=1 M=0
    /// gen b A=0 M=-1
    /// gen c A=-1 M=-2
    /// arr b a   # horizontal
    /// arr b c   # vertical
    /// ```
    pub fn parse(text: &str) -> Result<Self, ComplexError> {
        let mut name: Option<String> = None;
        let mut generators = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut pairs = Vec::new();
        let mut seen_arrows: HashMap<(usize, usize), usize> = HashMap::new();

        for (lineno, raw) in text.lines().enumerate() {
            let line_no = lineno + 1;
            let err = |message: String| ComplexError::Parse {
                line: line_no,
                message,
            };
            let content = strip_comment(raw).trim();
            if content.is_empty() {
                continue;
            }
            let tokens: Vec<&str> = content.split_whitespace().collect();
            match tokens[0] {
                "knot" => {
                    if name.is_some() {
                        return Err(err("repeated `knot` header".into()));
                    }
                    if !generators.is_empty() || !pairs.is_empty() {
                        return Err(err("`knot` header must precede generators and arrows".into()));
                    }
                    match tokens.as_slice() {
                        [_, n] => name = Some((*n).to_string()),
                        _ => return Err(err("expected `knot <name>`".into())),
                    }
                }
                "gen" => {
                    if name.is_none() {
                        return Err(err("missing `knot <name>` header".into()));
                    }
                    let [_, id, rest @ ..] = tokens.as_slice() else {
                        return Err(err("expected `gen <id> A=<int> M=<int>`".into()));
                    };
                    if rest.len() != 2 {
                        return Err(err("expected `gen <id> A=<int> M=<int>`".into()));
                    }
                    let mut alexander = None;
                    let mut maslov = None;
                    for field in rest {
                        let (key, value) = field
                            .split_once('=')
                            .ok_or_else(|| err(format!("malformed grading `{field}`")))?;
                        let value: i64 = value
                            .parse()
                            .map_err(|_| err(format!("grading `{field}` is not an integer")))?;
                        let slot = match key {
                            "A" => &mut alexander,
                            "M" => &mut maslov,
                            _ => return Err(err(format!("unknown grading key `{key}`"))),
                        };
                        if slot.replace(value).is_some() {
                            return Err(err(format!("grading `{key}` given twice")));
                        }
                    }
                    let (Some(alexander), Some(maslov)) = (alexander, maslov) else {
                        return Err(err("generator needs both A= and M=".into()));
                    };
                    if index.insert((*id).to_string(), generators.len()).is_some() {
                        return Err(err(format!("duplicate generator `{id}`")));
                    }
                    generators.push(Generator {
                        id: (*id).to_string(),
                        alexander,
                        maslov,
                    });
                }
                "arr" => {
                    if name.is_none() {
                        return Err(err("missing `knot <name>` header".into()));
                    }
                    let [_, from, to] = tokens.as_slice() else {
                        return Err(err("expected `arr <from> <to>`".into()));
                    };
                    let resolve = |id: &str| {
                        index
                            .get(id)
                            .copied()
                            .ok_or_else(|| err(format!("arrow mentions unknown generator `{id}`")))
                    };
                    let pair = (resolve(from)?, resolve(to)?);
                    if let Some(prev) = seen_arrows.insert(pair, line_no) {
                        return Err(err(format!(
                            "duplicate arrow {from} -> {to} (first given on line {prev})"
                        )));
                    }
                    pairs.push(pair);
                }
                other => return Err(err(format!("unknown directive `{other}`"))),
            }
        }
        let name = name.ok_or(ComplexError::Parse {
            line: 0,
            message: "missing `knot <name>` header".into(),
        })?;
        Self::from_indexed(name, generators, pairs)
    }

    /// Serializes to the text format accepted by [`KnotComplex::parse`].
    pub fn to_text(&self) -> String {
        let mut out = format!("knot {}\n", self.name);
        for g in &self.generators {
            writeln!(out, "gen {} A={} M={}", g.id, g.alexander, g.maslov).unwrap();
        }
        for a in &self.arrows {
            writeln!(out, "arr {} {}", self.generators[a.from].id, self.generators[a.to].id).unwrap();
        }
        out
    }

    fn validate(&mut self) -> Result<(), ComplexError> {
        // Drops were checked on construction. Now d^2 = 0.
        let d = self.differential();
        let square = d.mul(&d);
        for x in 0..self.len() {
            if let Some(z) = square.column(x).first_one() {
                return Err(ComplexError::Differential {
                    from: self.generators[x].id.clone(),
                    to: self.generators[z].id.clone(),
                });
            }
        }

        let hfk = self.compute_hfk_ranks();
        for (&s, &rank) in &hfk.ranks {
            let mirror_rank = hfk.ranks.get(&-s).copied().unwrap_or(0);
            if rank != mirror_rank {
                return Err(ComplexError::Symmetry {
                    grading: s,
                    rank,
                    mirror_rank,
                });
            }
        }

        for (kind, label) in [(HookKind::B, "i=0"), (HookKind::Slice(0), "j=0")] {
            let dimension = homology(&subquotient(self, kind)).dimension;
            if dimension != 1 {
                return Err(ComplexError::Normalization {
                    subquotient: label,
                    dimension,
                });
            }
        }
        self.genus = hfk.genus;
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.generators.iter().position(|g| g.id == id)
    }

    /// Top Alexander grading with nonzero HFK rank.
    pub fn genus(&self) -> i64 {
        self.genus
    }

    /// Largest |A(x)| over all generators. Beyond this, every hook complex
    /// coincides with `B` or with a horizontal slice on the chain level.
    pub fn alexander_span(&self) -> i64 {
        self.generators
            .iter()
            .map(|g| g.alexander.abs())
            .max()
            .unwrap_or(0)
    }

    /// The differential on generators, ignoring `U`-powers. Column `x` is `∂x`.
    pub fn differential(&self) -> F2Matrix {
        let n = self.len();
        let mut d = F2Matrix::zeros(n, n);
        for a in &self.arrows {
            d.flip(a.to, a.from);
        }
        d
    }

    pub fn hfk_ranks(&self) -> HfkRanks {
        self.compute_hfk_ranks()
    }

    fn compute_hfk_ranks(&self) -> HfkRanks {
        let mut by_grading: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
        for (k, g) in self.generators.iter().enumerate() {
            by_grading.entry(g.alexander).or_default().push(k);
        }
        let n = self.len();
        let mut graded = F2Matrix::zeros(n, n);
        for a in self.arrows.iter().filter(|a| a.i_drop == 0 && a.j_drop == 0) {
            graded.flip(a.to, a.from);
        }
        let mut ranks = BTreeMap::new();
        for (&s, members) in &by_grading {
            let cols: Vec<BitVector> = members.iter().map(|&k| graded.column(k).clone()).collect();
            let rank = F2Matrix::from_columns(n, cols).rank();
            let dim = members.len() - 2 * rank;
            if dim > 0 {
                ranks.insert(s, dim);
            }
        }
        let genus = ranks.keys().copied().max().unwrap_or(0).max(0);
        HfkRanks { ranks, genus }
    }

    /// The dual complex, modelling the mirror knot: gradings are negated and
    /// every arrow is reversed. Both filtration drops are preserved.
    pub fn mirror(&self) -> KnotComplex {
        let generators = self
            .generators
            .iter()
            .map(|g| Generator {
                id: g.id.clone(),
                alexander: -g.alexander,
                maslov: -g.maslov,
            })
            .collect();
        let mut arrows: Vec<Arrow> = self
            .arrows
            .iter()
            .map(|a| Arrow {
                from: a.to,
                to: a.from,
                i_drop: a.i_drop,
                j_drop: a.j_drop,
            })
            .collect();
        arrows.sort();
        KnotComplex {
            name: mirror_name(&self.name),
            generators,
            arrows,
            genus: self.genus,
        }
    }

    /// Graded tensor product, modelling the connected sum of knots.
    pub fn connected_sum(&self, other: &KnotComplex) -> KnotComplex {
        let m = other.len();
        let pair = |x: usize, y: usize| x * m + y;
        let mut generators = Vec::with_capacity(self.len() * m);
        for g in &self.generators {
            for h in &other.generators {
                generators.push(Generator {
                    id: format!("({},{})", g.id, h.id),
                    alexander: g.alexander + h.alexander,
                    maslov: g.maslov + h.maslov,
                });
            }
        }
        let mut arrows = Vec::new();
        for a in &self.arrows {
            for y in 0..m {
                arrows.push(Arrow {
                    from: pair(a.from, y),
                    to: pair(a.to, y),
                    ..*a
                });
            }
        }
        for b in &other.arrows {
            for x in 0..self.len() {
                arrows.push(Arrow {
                    from: pair(x, b.from),
                    to: pair(x, b.to),
                    ..*b
                });
            }
        }
        arrows.sort();
        let hfk = KnotComplex {
            name: String::new(),
            generators: generators.clone(),
            arrows: arrows.clone(),
            genus: 0,
        }
        .compute_hfk_ranks();
        KnotComplex {
            name: sum_name(&self.name, &other.name),
            generators,
            arrows,
            genus: hfk.genus,
        }
    }

    /// Tests for an isomorphism of complexes: a bijection of generators
    /// preserving both gradings and the arrow set.
    ///
    /// Only grading-preserving bijections are searched, and only when every
    /// (A, M) class has at most three generators.
    pub fn is_isomorphic(&self, other: &KnotComplex) -> Result<bool, ComparisonUnsupported> {
        let classes = |c: &KnotComplex| {
            let mut map: BTreeMap<(i64, i64), Vec<usize>> = BTreeMap::new();
            for (k, g) in c.generators.iter().enumerate() {
                map.entry((g.alexander, g.maslov)).or_default().push(k);
            }
            map
        };
        let (ours, theirs) = (classes(self), classes(other));
        if ours.values().chain(theirs.values()).any(|v| v.len() > MAX_CLASS_FOR_ISOMORPHISM) {
            return Err(ComparisonUnsupported);
        }
        if self.len() != other.len() || self.arrows.len() != other.arrows.len() {
            return Ok(false);
        }
        let shape = |m: &BTreeMap<(i64, i64), Vec<usize>>| {
            m.iter().map(|(k, v)| (*k, v.len())).collect::<Vec<_>>()
        };
        if shape(&ours) != shape(&theirs) {
            return Ok(false);
        }

        let edges = |c: &KnotComplex| {
            c.arrows
                .iter()
                .map(|a| (a.from, a.to))
                .collect::<HashSet<_>>()
        };
        let (our_edges, their_edges) = (edges(self), edges(other));
        let order: Vec<usize> = ours.values().flatten().copied().collect();
        let key = |k: usize| (self.generators[k].alexander, self.generators[k].maslov);

        let mut assignment = vec![usize::MAX; self.len()];
        let mut used = vec![false; other.len()];

        fn search(
            depth: usize,
            order: &[usize],
            candidates: &dyn Fn(usize) -> Vec<usize>,
            assignment: &mut [usize],
            used: &mut [bool],
            our_edges: &HashSet<(usize, usize)>,
            their_edges: &HashSet<(usize, usize)>,
        ) -> bool {
            let Some(&x) = order.get(depth) else {
                return true;
            };
            for y in candidates(x) {
                if used[y] {
                    continue;
                }
                let consistent = order[..depth].iter().chain(std::iter::once(&x)).all(|&u| {
                    let fu = if u == x { y } else { assignment[u] };
                    our_edges.contains(&(u, x)) == their_edges.contains(&(fu, y))
                        && our_edges.contains(&(x, u)) == their_edges.contains(&(y, fu))
                });
                if !consistent {
                    continue;
                }
                assignment[x] = y;
                used[y] = true;
                if search(depth + 1, order, candidates, assignment, used, our_edges, their_edges) {
                    return true;
                }
                used[y] = false;
                assignment[x] = usize::MAX;
            }
            false
        }

        let candidates = |x: usize| theirs.get(&key(x)).cloned().unwrap_or_default();
        Ok(search(
            0,
            &order,
            &candidates,
            &mut assignment,
            &mut used,
            &our_edges,
            &their_edges,
        ))
    }
}

fn id_index(generators: &[Generator]) -> Result<HashMap<String, usize>, String> {
    let mut index = HashMap::with_capacity(generators.len());
    for (k, g) in generators.iter().enumerate() {
        if index.insert(g.id.clone(), k).is_some() {
            return Err(g.id.clone());
        }
    }
    Ok(index)
}

/// Drops a `#` comment. Only a `#` at the start of a token opens a comment,
/// so names such as `T23#T25` survive.
fn strip_comment(line: &str) -> &str {
    let bytes = line.as_bytes();
    for (k, &b) in bytes.iter().enumerate() {
        if b == b'#' && (k == 0 || bytes[k - 1].is_ascii_whitespace()) {
            return &line[..k];
        }
    }
    line
}

fn wrap(name: &str) -> String {
    if name.contains('#') {
        format!("({name})")
    } else {
        name.to_string()
    }
}

/// `(inner)` when the outer parentheses enclose the whole string.
fn strip_outer_parens(name: &str) -> Option<&str> {
    let inner = name.strip_prefix('(')?.strip_suffix(')')?;
    let mut depth = 0i32;
    for ch in inner.chars() {
        match ch {
            '(' => depth += 1,
            ')' if depth == 0 => return None,
            ')' => depth -= 1,
            _ => {}
        }
    }
    Some(inner)
}

fn mirror_name(name: &str) -> String {
    match name.strip_prefix('-') {
        Some(rest) if !rest.contains('#') => rest.to_string(),
        Some(rest) => match strip_outer_parens(rest) {
            Some(inner) => inner.to_string(),
            None => format!("-{}", wrap(name)),
        },
        None => format!("-{}", wrap(name)),
    }
}

fn sum_name(a: &str, b: &str) -> String {
    format!("{a}#{b}")
}
