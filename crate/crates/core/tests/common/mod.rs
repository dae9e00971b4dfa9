//! Independent oracles. Nothing here uses the crate's F₂ algebra or hook code:
//! subquotients are found by enumerating lattice translates, and every
//! homology computation is a rank computation on explicit chain-level matrices.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashMap};

use knotrace::library;
use knotrace::KnotComplex;

/// Dense F₂ column space with incremental elimination.
#[derive(Default, Clone)]
pub struct Span {
    pivots: BTreeMap<usize, Vec<u64>>,
}

fn top_bit(v: &[u64]) -> Option<usize> {
    v.iter()
        .enumerate()
        .rev()
        .find(|(_, w)| **w != 0)
        .map(|(k, w)| 64 * k + 63 - w.leading_zeros() as usize)
}

impl Span {
    fn reduce(&self, mut v: Vec<u64>) -> Vec<u64> {
        while let Some(t) = top_bit(&v) {
            match self.pivots.get(&t) {
                Some(p) => v.iter_mut().zip(p).for_each(|(a, b)| *a ^= b),
                None => break,
            }
        }
        v
    }

    pub fn insert(&mut self, v: Vec<u64>) -> bool {
        let v = self.reduce(v);
        match top_bit(&v) {
            Some(t) => {
                self.pivots.insert(t, v);
                true
            }
            None => false,
        }
    }

    pub fn contains(&self, v: Vec<u64>) -> bool {
        top_bit(&self.reduce(v)).is_none()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

pub fn words(n: usize) -> usize {
    n.div_ceil(64).max(1)
}

pub fn vector(n: usize, ones: impl IntoIterator<Item = usize>) -> Vec<u64> {
    let mut v = vec![0u64; words(n)];
    for k in ones {
        v[k / 64] ^= 1 << (k % 64);
    }
    v
}

/// A generator translate `U^{-i} x` sitting at lattice point `(i, j)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Cell {
    pub gen: usize,
    pub i: i64,
    pub j: i64,
}

/// A subquotient of CFK^∞ given by membership of lattice points.
pub struct Sub {
    pub cells: Vec<Cell>,
    pub index: HashMap<Cell, usize>,
    /// Column `k` lists the cells in `∂ cells[k]`.
    pub boundary: Vec<Vec<usize>>,
}

/// All translates of all generators with `(i, j)` passing `keep`, found by
/// scanning a window of `U`-powers wide enough for every complex used here.
pub fn sub(c: &KnotComplex, keep: impl Fn(i64, i64) -> bool) -> Sub {
    let mut cells = Vec::new();
    for (g, x) in c.generators().iter().enumerate() {
        for i in -40..=40 {
            let j = x.alexander + i;
            if keep(i, j) {
                cells.push(Cell { gen: g, i, j });
            }
        }
    }
    let index: HashMap<Cell, usize> = cells.iter().enumerate().map(|(k, c)| (*c, k)).collect();
    let mut boundary = vec![Vec::new(); cells.len()];
    for (k, cell) in cells.iter().enumerate() {
        for a in c.arrows().iter().filter(|a| a.from == cell.gen) {
            let target = Cell {
                gen: a.to,
                i: cell.i - a.i_drop,
                j: cell.j - a.j_drop,
            };
            if let Some(&t) = index.get(&target) {
                boundary[k].push(t);
            }
        }
    }
    Sub {
        cells,
        index,
        boundary,
    }
}

pub fn a_s(c: &KnotComplex, s: i64) -> Sub {
    sub(c, move |i, j| i.max(j - s) == 0)
}

pub fn b(c: &KnotComplex) -> Sub {
    sub(c, |i, _| i == 0)
}

/// Dimension of the homology of a chain complex of size `n` with boundary columns.
pub fn homology_dim(n: usize, cols: &[Vec<usize>]) -> usize {
    let mut span = Span::default();
    for col in cols {
        span.insert(vector(n, col.iter().copied()));
    }
    n - 2 * span.rank()
}

/// `dim H` of the cone of a chain map `f: X → Y` (`f` given on cells).
pub fn cone_dim(x: &Sub, y: &Sub, f: impl Fn(&Cell) -> Option<Cell>) -> usize {
    let n = x.cells.len() + y.cells.len();
    let off = x.cells.len();
    let mut cols = Vec::new();
    for (k, cell) in x.cells.iter().enumerate() {
        let mut col = x.boundary[k].clone();
        if let Some(t) = f(cell).and_then(|t| y.index.get(&t)) {
            col.push(off + t);
        }
        cols.push(col);
    }
    for col in &y.boundary {
        cols.push(col.iter().map(|t| off + t).collect());
    }
    homology_dim(n, &cols)
}

/// Whether `f_*: H(X) → H(Y)` is nonzero, assuming `dim H(Y) = 1`.
pub fn induced_nonzero(x: &Sub, y: &Sub, f: impl Fn(&Cell) -> Option<Cell>) -> bool {
    let hx = homology_dim(x.cells.len(), &x.boundary);
    let hy = homology_dim(y.cells.len(), &y.boundary);
    assert_eq!(hy, 1);
    let rank = (hx + hy - cone_dim(x, y, f)) / 2;
    rank == 1
}

pub fn nu(c: &KnotComplex) -> i64 {
    let target = b(c);
    let span = c.generators().iter().map(|g| g.alexander.abs()).max().unwrap();
    (-span - 1..=span + 1)
        .find(|&s| induced_nonzero(&a_s(c, s), &target, |cell| (cell.i == 0).then_some(*cell)))
        .unwrap()
}

pub fn tau(c: &KnotComplex) -> i64 {
    let target = b(c);
    let span = c.generators().iter().map(|g| g.alexander.abs()).max().unwrap();
    (-span - 1..=span + 1)
        .find(|&s| induced_nonzero(&sub(c, move |i, j| i == 0 && j <= s), &target, |cell| Some(*cell)))
        .unwrap()
}

pub fn epsilon(c: &KnotComplex) -> i8 {
    let m = c.mirror();
    match (nu(c) - tau(c), nu(&m) - tau(&m)) {
        (1, 0) => -1,
        (0, 0) => 0,
        (0, 1) => 1,
        other => panic!("no epsilon rule for {other:?}"),
    }
}

/// The flip involution on generators of complexes built from the library,
/// identifying `{j = 0}` with `{i = 0}` on the chain level.
pub fn flip(c: &KnotComplex) -> Vec<usize> {
    let ids: Vec<&str> = c.generators().iter().map(|g| g.id.as_str()).collect();
    let flipped: Vec<String> = ids.iter().map(|id| flip_id(id)).collect();
    let sigma: Vec<usize> = flipped
        .iter()
        .map(|f| c.index_of(f).unwrap_or_else(|| panic!("no flip partner for {f}")))
        .collect();
    for (k, &t) in sigma.iter().enumerate() {
        assert_eq!(c.generators()[k].alexander, -c.generators()[t].alexander);
    }
    sigma
}

fn flip_id(id: &str) -> String {
    if let Some(inner) = id.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
        // split at the top-level comma
        let mut depth = 0;
        for (k, ch) in inner.char_indices() {
            match ch {
                '(' => depth += 1,
                ')' => depth -= 1,
                ',' if depth == 0 => {
                    return format!("({},{})", flip_id(&inner[..k]), flip_id(&inner[k + 1..]));
                }
                _ => {}
            }
        }
        panic!("malformed id {id}");
    }
    match id {
        "p" => "s".into(),
        "s" => "p".into(),
        "q" | "r" | "e" | "u" => id.into(),
        _ => {
            let a: i64 = id.strip_prefix('g').unwrap().parse().unwrap();
            format!("g{}", -a)
        }
    }
}

#[derive(Debug, PartialEq, Eq)]
pub struct OracleCone {
    pub spinc_ranks: BTreeMap<i64, usize>,
    pub nonzero_inclusions: BTreeSet<i64>,
}

/// The truncated mapping cone of `D_n` built on the chain level.
pub fn chain_cone(c: &KnotComplex, n: i64, bound: i64) -> OracleCone {
    let sigma = flip(c);
    let bsub = b(c);
    let label = |s: i64| if n == 0 { s } else { s.rem_euclid(n.abs()) };
    let mut groups: BTreeMap<i64, (Vec<i64>, Vec<i64>)> = BTreeMap::new();
    for s in -bound..=bound {
        groups.entry(label(s)).or_default().0.push(s);
    }
    for t in (-bound + n)..=bound {
        groups.entry(label(t)).or_default().1.push(t);
    }
    // A cycle spanning H(B).
    let hb_cycle = homology_generator(&bsub);

    let mut spinc_ranks = BTreeMap::new();
    let mut nonzero_inclusions = BTreeSet::new();
    for (lab, (sources, targets)) in groups {
        let a_blocks: Vec<(i64, Sub)> = sources.iter().map(|&s| (s, a_s(c, s))).collect();
        let mut offset = 0;
        let mut a_off = Vec::new();
        for (_, a) in &a_blocks {
            a_off.push(offset);
            offset += a.cells.len();
        }
        let b_off: BTreeMap<i64, usize> = targets
            .iter()
            .enumerate()
            .map(|(k, &t)| (t, offset + k * bsub.cells.len()))
            .collect();
        let total = offset + targets.len() * bsub.cells.len();

        let mut cols: Vec<Vec<usize>> = Vec::with_capacity(total);
        for ((s, a), &base) in a_blocks.iter().zip(&a_off) {
            for (k, cell) in a.cells.iter().enumerate() {
                let mut col: Vec<usize> = a.boundary[k].iter().map(|t| base + t).collect();
                if cell.i == 0 {
                    if let Some(&o) = b_off.get(s) {
                        col.push(o + bsub.index[cell]);
                    }
                }
                if cell.j == *s {
                    if let Some(&o) = b_off.get(&(s + n)) {
                        let image = Cell {
                            gen: sigma[cell.gen],
                            i: 0,
                            j: cell.i - s,
                        };
                        col.push(o + bsub.index[&image]);
                    }
                }
                cols.push(col);
            }
        }
        for &t in &targets {
            for col in &bsub.boundary {
                cols.push(col.iter().map(|x| b_off[&t] + x).collect());
            }
        }
        assert_squares_to_zero(total, &cols);

        let mut image = Span::default();
        for col in &cols {
            image.insert(vector(total, col.iter().copied()));
        }
        spinc_ranks.insert(lab, total - 2 * image.rank());
        for &t in &targets {
            let z = vector(total, hb_cycle.iter().map(|x| b_off[&t] + x));
            if !image.contains(z) {
                nonzero_inclusions.insert(t);
            }
        }
    }
    OracleCone {
        spinc_ranks,
        nonzero_inclusions,
    }
}

fn assert_squares_to_zero(n: usize, cols: &[Vec<usize>]) {
    for col in cols {
        let mut acc = vector(n, []);
        for &x in col {
            for &y in &cols[x] {
                acc[y / 64] ^= 1 << (y % 64);
            }
        }
        assert!(acc.iter().all(|w| *w == 0), "oracle cone differential does not square to zero");
    }
}

/// A cycle of `x` that is not a boundary, for `dim H(x) = 1`.
fn homology_generator(x: &Sub) -> Vec<usize> {
    let n = x.cells.len();
    let mut image = Span::default();
    for col in &x.boundary {
        image.insert(vector(n, col.iter().copied()));
    }
    // Eliminate while tracking combinations; zero images give a kernel basis.
    let mut reduced: Vec<(Vec<u64>, Vec<u64>)> = Vec::new();
    let mut pivots: BTreeMap<usize, usize> = BTreeMap::new();
    for (k, col) in x.boundary.iter().enumerate() {
        let mut v = vector(n, col.iter().copied());
        let mut combo = vector(n, [k]);
        while let Some(t) = top_bit(&v) {
            match pivots.get(&t) {
                Some(&p) => {
                    v.iter_mut().zip(&reduced[p].0).for_each(|(a, b)| *a ^= b);
                    combo.iter_mut().zip(&reduced[p].1).for_each(|(a, b)| *a ^= b);
                }
                None => break,
            }
        }
        if let Some(t) = top_bit(&v) {
            pivots.insert(t, reduced.len());
        }
        reduced.push((v, combo));
    }
    for (v, combo) in &reduced {
        if top_bit(v).is_none() && !image.contains(combo.clone()) {
            return (0..n).filter(|k| combo[k / 64] >> (k % 64) & 1 == 1).collect();
        }
    }
    panic!("no homology generator found");
}

/// Library complexes used by the suites: built-ins and their mirrors.
pub fn library_complexes() -> Vec<KnotComplex> {
    let mut out = Vec::new();
    for entry in library::builtins() {
        let m = entry.complex.mirror();
        let self_mirror = entry.name == "unknot";
        out.push(entry.complex);
        if !self_mirror {
            out.push(m);
        }
    }
    out
}

/// Pairs for the connected-sum properties.
pub fn library_pairs() -> Vec<(KnotComplex, KnotComplex)> {
    let all = library_complexes();
    let mut out = Vec::new();
    for (k, a) in all.iter().enumerate() {
        for b in &all[k..] {
            out.push((a.clone(), b.clone()));
        }
    }
    out
}
