//! Dense linear algebra over the two-element field.
//!
//! Vectors are packed 64 bits per word. Complexes handled by this crate have
//! at most a few hundred generators, so everything here is dense.

use std::fmt;

const WORD: usize = 64;

/// A vector over F₂ of fixed length.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> Self {
        BitVector {
            len,
            words: vec![0; len.div_ceil(WORD)],
        }
    }

    /// The standard basis vector `e_index`.
    pub fn unit(len: usize, index: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(index, true);
        v
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(len: usize, indices: I) -> Self {
        let mut v = Self::zeros(len);
        for i in indices {
            v.flip(i);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, index: usize) -> bool {
        assert!(index < self.len, "bit index {index} out of range {}", self.len);
        self.words[index / WORD] >> (index % WORD) & 1 == 1
    }

    pub fn set(&mut self, index: usize, value: bool) {
        assert!(index < self.len, "bit index {index} out of range {}", self.len);
        let mask = 1u64 << (index % WORD);
        if value {
            self.words[index / WORD] |= mask;
        } else {
            self.words[index / WORD] &= !mask;
        }
    }

    pub fn flip(&mut self, index: usize) {
        assert!(index < self.len, "bit index {index} out of range {}", self.len);
        self.words[index / WORD] ^= 1u64 << (index % WORD);
    }

    pub fn xor_assign(&mut self, other: &BitVector) {
        assert_eq!(self.len, other.len, "length mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= *b;
        }
    }

    /// Zeroes every coordinate whose mask bit is clear.
    pub fn and_assign(&mut self, mask: &BitVector) {
        assert_eq!(self.len, mask.len, "length mismatch");
        for (a, b) in self.words.iter_mut().zip(&mask.words) {
            *a &= *b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Lowest set index.
    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, w)| k * WORD + w.trailing_zeros() as usize)
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let bit = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * WORD + bit)
            })
        })
    }

    /// Dot product over F₂.
    pub fn dot(&self, other: &BitVector) -> bool {
        assert_eq!(self.len, other.len, "length mismatch");
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum::<u32>()
            % 2
            == 1
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        f.write_str("]")
    }
}

/// An incrementally built row-echelon basis of a subspace of F₂ⁿ.
///
/// Each stored row has a distinct pivot (its lowest set bit) and is zero at
/// the pivots of all rows stored before it.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    len: usize,
    rows: Vec<BitVector>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    pub fn new(len: usize) -> Self {
        EchelonBasis {
            len,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn spanned_by<'a, I: IntoIterator<Item = &'a BitVector>>(len: usize, vectors: I) -> Self {
        let mut basis = Self::new(len);
        for v in vectors {
            basis.insert(v.clone());
        }
        basis
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Remainder of `v` after elimination against the stored rows.
    pub fn reduce(&self, mut v: BitVector) -> BitVector {
        assert_eq!(v.len(), self.len, "length mismatch");
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v.get(p) {
                v.xor_assign(row);
            }
        }
        v
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        self.reduce(v.clone()).is_zero()
    }

    /// Adds `v` to the span. Returns `false` if it was already in the span.
    pub fn insert(&mut self, v: BitVector) -> bool {
        let r = self.reduce(v);
        match r.first_one() {
            Some(p) => {
                self.rows.push(r);
                self.pivots.push(p);
                true
            }
            None => false,
        }
    }
}

/// A matrix over F₂ stored by columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F2Matrix {
    nrows: usize,
    cols: Vec<BitVector>,
}

impl F2Matrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        F2Matrix {
            nrows,
            cols: vec![BitVector::zeros(nrows); ncols],
        }
    }

    pub fn from_columns(nrows: usize, cols: Vec<BitVector>) -> Self {
        assert!(cols.iter().all(|c| c.len() == nrows), "column length mismatch");
        F2Matrix { nrows, cols }
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn get(&self, row: usize, col: usize) -> bool {
        self.cols[col].get(row)
    }

    pub fn set(&mut self, row: usize, col: usize, value: bool) {
        self.cols[col].set(row, value);
    }

    pub fn flip(&mut self, row: usize, col: usize) {
        self.cols[col].flip(row);
    }

    pub fn column(&self, col: usize) -> &BitVector {
        &self.cols[col]
    }

    pub fn columns(&self) -> &[BitVector] {
        &self.cols
    }

    /// `self * v`.
    pub fn apply(&self, v: &BitVector) -> BitVector {
        assert_eq!(v.len(), self.ncols(), "length mismatch");
        let mut out = BitVector::zeros(self.nrows);
        for j in v.ones() {
            out.xor_assign(&self.cols[j]);
        }
        out
    }

    /// `self * other`.
    pub fn mul(&self, other: &F2Matrix) -> F2Matrix {
        assert_eq!(self.ncols(), other.nrows(), "dimension mismatch");
        F2Matrix {
            nrows: self.nrows,
            cols: other.cols.iter().map(|c| self.apply(c)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(BitVector::is_zero)
    }

    pub fn rank(&self) -> usize {
        EchelonBasis::spanned_by(self.nrows, &self.cols).rank()
    }

    pub fn column_space(&self) -> EchelonBasis {
        EchelonBasis::spanned_by(self.nrows, &self.cols)
    }

    /// A basis of the null space, restricted to the columns selected by
    /// `domain` (all columns when `None`). Vectors are returned in order of
    /// the dependent column that produced them; each contains that column.
    pub fn kernel(&self, domain: Option<&[usize]>) -> Vec<BitVector> {
        let n = self.ncols();
        let all: Vec<usize>;
        let domain = match domain {
            Some(d) => d,
            None => {
                all = (0..n).collect();
                &all
            }
        };
        // Rows of the eliminated image paired with the column combination producing them.
        let mut rows: Vec<(usize, BitVector, BitVector)> = Vec::new();
        let mut kernel = Vec::new();
        for &j in domain {
            let mut image = self.cols[j].clone();
            let mut combo = BitVector::unit(n, j);
            for (p, row, row_combo) in &rows {
                if image.get(*p) {
                    image.xor_assign(row);
                    combo.xor_assign(row_combo);
                }
            }
            match image.first_one() {
                Some(p) => rows.push((p, image, combo)),
                None => kernel.push(combo),
            }
        }
        kernel
    }
}
