//! Subquotients of CFK^∞ and the homology-level edge maps between them.
//!
//! Every generator `x` of a [`KnotComplex`] contributes exactly one lattice
//! translate `U^k x` to each subquotient used here, placed at
//! `(i, j) = (-k, A(x) - k)`. Subquotient elements are therefore indexed by
//! generator, and chain-level vectors in any of them live in the same F₂ⁿ.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::complex::KnotComplex;
use crate::f2::{BitVector, EchelonBasis, F2Matrix};

/// Which subquotient of CFK^∞.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum HookKind {
    /// The hook `{max(i, j - s) = 0}`.
    A(i64),
    /// The column `{i = 0}`, a model of the Floer complex of S³.
    B,
    /// The row `{j = s}`.
    Slice(i64),
}

impl HookKind {
    /// Lattice position of the unique translate of a generator with Alexander grading `alexander`.
    pub fn position(self, alexander: i64) -> (i64, i64) {
        match self {
            HookKind::A(s) => {
                let i = (s - alexander).min(0);
                (i, alexander + i)
            }
            HookKind::B => (0, alexander),
            HookKind::Slice(s) => (s - alexander, s),
        }
    }

    pub fn contains(self, (i, j): (i64, i64)) -> bool {
        match self {
            HookKind::A(s) => i.max(j - s) == 0,
            HookKind::B => i == 0,
            HookKind::Slice(s) => j == s,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HookElement {
    pub generator: usize,
    pub i: i64,
    pub j: i64,
    pub maslov: i64,
}

/// A subquotient complex, with elements indexed by generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HookComplex {
    pub kind: HookKind,
    pub elements: Vec<HookElement>,
    /// Induced arrows as (source generator, target generator).
    pub arrows: Vec<(usize, usize)>,
    differential: F2Matrix,
}

impl HookComplex {
    pub fn differential(&self) -> &F2Matrix {
        &self.differential
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// Restricts the differential of `complex` to the locus of `kind`.
pub fn subquotient(complex: &KnotComplex, kind: HookKind) -> HookComplex {
    let gens = complex.generators();
    let elements: Vec<HookElement> = gens
        .iter()
        .enumerate()
        .map(|(k, g)| {
            let (i, j) = kind.position(g.alexander);
            HookElement {
                generator: k,
                i,
                j,
                maslov: g.maslov + 2 * i,
            }
        })
        .collect();
    let n = gens.len();
    let mut differential = F2Matrix::zeros(n, n);
    let mut arrows = Vec::new();
    for a in complex.arrows() {
        let src = elements[a.from];
        let target = (src.i - a.i_drop, src.j - a.j_drop);
        if kind.contains(target) {
            debug_assert_eq!(target, (elements[a.to].i, elements[a.to].j));
            differential.flip(a.to, a.from);
            arrows.push((a.from, a.to));
        }
    }
    HookComplex {
        kind,
        elements,
        arrows,
        differential,
    }
}

/// Homology with explicit cycle representatives.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyPresentation {
    pub dimension: usize,
    /// Cycles whose classes form a basis, ordered by Maslov grading.
    pub basis: Vec<BitVector>,
    /// Maslov grading of each basis cycle.
    pub basis_gradings: Vec<i64>,
    pub graded_dims: BTreeMap<i64, usize>,
}

impl HomologyPresentation {
    /// Generator ids of a basis cycle.
    pub fn cycle_ids<'a>(&self, complex: &'a KnotComplex, k: usize) -> Vec<&'a str> {
        self.basis[k]
            .ones()
            .map(|g| complex.generators()[g].id.as_str())
            .collect()
    }
}

pub fn homology(hook: &HookComplex) -> HomologyPresentation {
    let n = hook.len();
    let d = hook.differential();
    let mut by_grading: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for e in &hook.elements {
        by_grading.entry(e.maslov).or_default().push(e.generator);
    }
    let mut basis = Vec::new();
    let mut basis_gradings = Vec::new();
    let mut graded_dims = BTreeMap::new();
    for (&m, members) in &by_grading {
        let cycles = d.kernel(Some(members));
        let mut span = match by_grading.get(&(m + 1)) {
            Some(above) => EchelonBasis::spanned_by(n, above.iter().map(|&g| d.column(g))),
            None => EchelonBasis::new(n),
        };
        let mut count = 0;
        for z in cycles {
            if span.insert(z.clone()) {
                basis.push(z);
                basis_gradings.push(m);
                count += 1;
            }
        }
        if count > 0 {
            graded_dims.insert(m, count);
        }
    }
    HomologyPresentation {
        dimension: basis.len(),
        basis,
        basis_gradings,
        graded_dims,
    }
}

/// The maps `v_s, h_s` on homology, as functionals on the basis of `H(A_s)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeMapData {
    pub s: i64,
    /// `v_s` into `H(B) ≅ F`.
    pub v_star: Vec<bool>,
    /// `h_s` into `H({j = s}) ≅ F`.
    pub h_star: Vec<bool>,
}

impl EdgeMapData {
    pub fn dimension(&self) -> usize {
        self.v_star.len()
    }

    /// `v_s` is surjective on homology.
    pub fn v_nonzero(&self) -> bool {
        self.v_star.iter().any(|&b| b)
    }

    /// `h_s` is surjective on homology.
    pub fn h_nonzero(&self) -> bool {
        self.h_star.iter().any(|&b| b)
    }

    /// `v_s` and `h_s` are the same nonzero functional.
    pub fn agree_nontrivially(&self) -> bool {
        self.v_nonzero() && self.v_star == self.h_star
    }
}

/// Precomputed boundary spaces of `B` and of the horizontal slice, shared by
/// every `s`. All slices `{j = s}` are `U`-translates of one another, so one
/// boundary space serves them all.
#[derive(Debug, Clone)]
pub struct EdgeMapper<'a> {
    complex: &'a KnotComplex,
    column: HookComplex,
    column_boundaries: EchelonBasis,
    row_boundaries: EchelonBasis,
}

impl<'a> EdgeMapper<'a> {
    pub fn new(complex: &'a KnotComplex) -> Self {
        let n = complex.len();
        let column = subquotient(complex, HookKind::B);
        let row = subquotient(complex, HookKind::Slice(0));
        let column_boundaries = column.differential().column_space();
        let row_boundaries = EchelonBasis::spanned_by(n, row.differential().columns());
        EdgeMapper {
            complex,
            column,
            column_boundaries,
            row_boundaries,
        }
    }

    pub fn complex(&self) -> &'a KnotComplex {
        self.complex
    }

    /// Mask of generators whose `A_s` translate sits at `i = 0`.
    fn v_mask(&self, s: i64) -> BitVector {
        let gens = self.complex.generators();
        BitVector::from_indices(gens.len(), (0..gens.len()).filter(|&k| gens[k].alexander <= s))
    }

    /// Mask of generators whose `A_s` translate sits at `j = s`.
    fn h_mask(&self, s: i64) -> BitVector {
        let gens = self.complex.generators();
        BitVector::from_indices(gens.len(), (0..gens.len()).filter(|&k| gens[k].alexander >= s))
    }

    /// Homology of `A_s` together with the edge maps out of it.
    pub fn edge_maps_with_homology(&self, s: i64) -> (HomologyPresentation, EdgeMapData) {
        let hook = subquotient(self.complex, HookKind::A(s));
        let h = homology(&hook);
        let (vm, hm) = (self.v_mask(s), self.h_mask(s));
        let survives = |z: &BitVector, mask: &BitVector, bd: &EchelonBasis| {
            let mut image = z.clone();
            image.and_assign(mask);
            !bd.contains(&image)
        };
        let v_star = h
            .basis
            .iter()
            .map(|z| survives(z, &vm, &self.column_boundaries))
            .collect();
        let h_star = h
            .basis
            .iter()
            .map(|z| survives(z, &hm, &self.row_boundaries))
            .collect();
        (h, EdgeMapData { s, v_star, h_star })
    }

    pub fn edge_maps(&self, s: i64) -> EdgeMapData {
        self.edge_maps_with_homology(s).1
    }

    /// Whether `{x ∈ B : j ≤ s}` carries the generator of `H(B)`.
    pub fn sublevel_surjects(&self, s: i64) -> bool {
        let gens = self.complex.generators();
        let members: Vec<usize> = (0..gens.len()).filter(|&k| gens[k].alexander <= s).collect();
        self.column
            .differential()
            .kernel(Some(&members))
            .into_iter()
            .any(|z| !self.column_boundaries.contains(&z))
    }
}

/// Convenience wrapper around [`EdgeMapper::edge_maps`].
pub fn edge_maps(complex: &KnotComplex, s: i64) -> EdgeMapData {
    EdgeMapper::new(complex).edge_maps(s)
}
