//! Packed GF(2) vectors, small dense matrices and an incremental row space.

use std::fmt;

const WORD: usize = 64;

/// Fixed-length bit vector packed into 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        BitVec {
            len,
            words: vec![0; len.div_ceil(WORD)],
        }
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            v.set(i, b);
        }
        v
    }

    pub fn from_indices(len: usize, ones: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in ones {
            v.set(i, true);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, b: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i % WORD);
        if b {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    #[inline]
    pub fn toggle(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    pub fn swap_bits(&mut self, i: usize, j: usize) {
        let (a, b) = (self.get(i), self.get(j));
        self.set(i, b);
        self.set(j, a);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        assert_eq!(self.len, other.len, "bit vector length mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn xor(&self, other: &BitVec) -> BitVec {
        let mut out = self.clone();
        out.xor_assign(other);
        out
    }

    pub fn or(&self, other: &BitVec) -> BitVec {
        assert_eq!(self.len, other.len, "bit vector length mismatch");
        BitVec {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a | b)
                .collect(),
        }
    }

    /// Parity of the popcount of `self & other`.
    pub fn dot(&self, other: &BitVec) -> bool {
        assert_eq!(self.len, other.len, "bit vector length mismatch");
        let ones: u32 = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum();
        ones & 1 == 1
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * WORD + t)
            })
        })
    }

    pub fn first_one(&self) -> Option<usize> {
        self.iter_ones().next()
    }

    pub fn concat(a: &BitVec, b: &BitVec) -> BitVec {
        let mut out = BitVec::zeros(a.len + b.len);
        for i in a.iter_ones() {
            out.set(i, true);
        }
        for i in b.iter_ones() {
            out.set(a.len + i, true);
        }
        out
    }

    pub fn slice(&self, start: usize, end: usize) -> BitVec {
        let mut out = BitVec::zeros(end - start);
        for i in start..end {
            if self.get(i) {
                out.set(i - start, true);
            }
        }
        out
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Dense GF(2) matrix, one [`BitVec`] per row.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    cols: usize,
    rows: Vec<BitVec>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        BitMatrix {
            cols,
            rows: vec![BitVec::zeros(cols); rows],
        }
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> bool) -> Self {
        let mut m = Self::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                if f(i, j) {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    pub fn from_rows(cols: usize, rows: Vec<BitVec>) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols));
        BitMatrix { cols, rows }
    }

    /// Parses rows of `0`/`1` characters; whitespace inside a row is ignored.
    pub fn parse_rows(rows: &[&str]) -> Self {
        let parsed: Vec<Vec<bool>> = rows
            .iter()
            .map(|r| {
                r.chars()
                    .filter(|c| matches!(c, '0' | '1'))
                    .map(|c| c == '1')
                    .collect()
            })
            .collect();
        let cols = parsed.first().map_or(0, Vec::len);
        BitMatrix::from_rows(cols, parsed.iter().map(|r| BitVec::from_bools(r)).collect())
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, b: bool) {
        self.rows[i].set(j, b);
    }

    pub fn row(&self, i: usize) -> &BitVec {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[BitVec] {
        &self.rows
    }

    pub fn transpose(&self) -> BitMatrix {
        BitMatrix::from_fn(self.cols, self.num_rows(), |i, j| self.get(j, i))
    }

    pub fn add(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(
            (self.num_rows(), self.cols),
            (other.num_rows(), other.cols),
            "matrix shape mismatch"
        );
        BitMatrix {
            cols: self.cols,
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(a, b)| a.xor(b))
                .collect(),
        }
    }

    pub fn mul(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, other.num_rows(), "matrix shape mismatch");
        let t = other.transpose();
        BitMatrix::from_fn(self.num_rows(), other.cols, |i, j| {
            self.rows[i].dot(t.row(j))
        })
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BitVec::is_zero)
    }

    pub fn is_symmetric(&self) -> bool {
        self.num_rows() == self.cols
            && (0..self.cols).all(|i| (i + 1..self.cols).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn diagonal(&self) -> Vec<bool> {
        (0..self.num_rows().min(self.cols))
            .map(|i| self.get(i, i))
            .collect()
    }

    pub fn count_ones(&self) -> usize {
        self.rows.iter().map(BitVec::count_ones).sum()
    }

    /// Sub-block of rows `r0..r1` and columns `c0..c1`.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> BitMatrix {
        BitMatrix::from_rows(
            c1 - c0,
            self.rows[r0..r1].iter().map(|r| r.slice(c0, c1)).collect(),
        )
    }

    pub fn rank(&self) -> usize {
        let mut space = RowSpace::new(self.cols);
        for r in &self.rows {
            space.insert(r.clone());
        }
        space.rank()
    }
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let s: Vec<&str> = (0..self.cols)
                .map(|j| if r.get(j) { "1" } else { "0" })
                .collect();
            f.write_str(&s.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.num_rows(), self.cols)?;
        fmt::Display::fmt(self, f)
    }
}

/// Incrementally built GF(2) row space kept in reduced echelon form.
///
/// Each basis row remembers which inserted vectors it is the sum of, so
/// membership queries can also return a decomposition.
#[derive(Clone, Debug)]
pub struct RowSpace {
    width: usize,
    inserted: usize,
    basis: Vec<(usize, BitVec, BitVec)>,
}

impl RowSpace {
    pub fn new(width: usize) -> Self {
        RowSpace {
            width,
            inserted: 0,
            basis: Vec::new(),
        }
    }

    pub fn from_rows<'a>(width: usize, rows: impl IntoIterator<Item = &'a BitVec>) -> Self {
        let mut s = Self::new(width);
        for r in rows {
            s.insert(r.clone());
        }
        s
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    fn reduce_with_combo(&self, v: &BitVec) -> (BitVec, BitVec) {
        let mut v = v.clone();
        let mut combo = BitVec::zeros(self.inserted.max(1));
        for (pivot, row, rc) in &self.basis {
            if v.get(*pivot) {
                v.xor_assign(row);
                combo.xor_assign(&Self::widen(rc, combo.len()));
            }
        }
        (v, combo)
    }

    fn widen(v: &BitVec, len: usize) -> BitVec {
        if v.len() == len {
            return v.clone();
        }
        let mut out = BitVec::zeros(len);
        for i in v.iter_ones() {
            out.set(i, true);
        }
        out
    }

    /// Inserts `v`; returns false if it was already in the span.
    /// The vector is counted as inserted either way so decomposition
    /// indices match insertion order.
    pub fn insert(&mut self, v: BitVec) -> bool {
        assert_eq!(v.len(), self.width, "row width mismatch");
        let idx = self.inserted;
        self.inserted += 1;
        let cap = self.inserted;
        for (_, _, rc) in &mut self.basis {
            *rc = Self::widen(rc, cap);
        }
        let (red, mut combo) = self.reduce_with_combo(&v);
        combo = Self::widen(&combo, cap);
        if red.is_zero() {
            return false;
        }
        combo.toggle(idx);
        let pivot = red.first_one().unwrap();
        for (_, row, rc) in &mut self.basis {
            if row.get(pivot) {
                row.xor_assign(&red);
                rc.xor_assign(&combo);
            }
        }
        let pos = self
            .basis
            .iter()
            .position(|(p, _, _)| *p > pivot)
            .unwrap_or(self.basis.len());
        self.basis.insert(pos, (pivot, red, combo));
        true
    }

    pub fn reduce(&self, v: &BitVec) -> BitVec {
        let mut v = v.clone();
        for (pivot, row, _) in &self.basis {
            if v.get(*pivot) {
                v.xor_assign(row);
            }
        }
        v
    }

    pub fn contains(&self, v: &BitVec) -> bool {
        self.reduce(v).is_zero()
    }

    /// Indices of inserted vectors summing to `v`, if `v` lies in the span.
    pub fn decompose(&self, v: &BitVec) -> Option<Vec<usize>> {
        let (red, combo) = self.reduce_with_combo(v);
        if !red.is_zero() {
            return None;
        }
        Some(combo.iter_ones().filter(|&i| i < self.inserted).collect())
    }

    /// Reduced row echelon basis ordered by pivot column.
    pub fn echelon_basis(&self) -> Vec<BitVec> {
        self.basis.iter().map(|(_, r, _)| r.clone()).collect()
    }

    pub fn same_span(&self, other: &RowSpace) -> bool {
        self.width == other.width && self.echelon_basis() == other.echelon_basis()
    }
}
