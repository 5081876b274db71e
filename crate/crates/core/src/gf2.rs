//! Word-packed linear algebra over GF(2).
//!
//! A [`BitVec`] stores up to [`MAX_DIM`] coordinates in a `u16`; bit `i`
//! (least significant first) is the coefficient of the `i`-th standard basis
//! vector. The integer value of that word is the "encoding" used everywhere
//! for canonical ordering.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};

/// Largest ambient dimension representable in a [`BitVec`].
pub const MAX_DIM: usize = 16;

/// Largest dimension accepted by [`enumerate_ordered_bases`].
pub const MAX_ENUM_DIM: usize = 5;

/// An element of GF(2)^n.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BitVec {
    bits: u16,
    dim: u8,
}

impl BitVec {
    pub fn new(bits: u16, dim: usize) -> Result<Self> {
        check_dim(dim)?;
        if dim < MAX_DIM && bits >> dim != 0 {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: (16 - bits.leading_zeros()) as usize,
            });
        }
        Ok(Self { bits, dim: dim as u8 })
    }

    pub fn zero(dim: usize) -> Result<Self> {
        Self::new(0, dim)
    }

    /// The `i`-th standard basis vector (zero-based).
    pub fn unit(i: usize, dim: usize) -> Result<Self> {
        if i >= dim {
            return Err(Error::DimensionMismatch { expected: dim, found: i + 1 });
        }
        Self::new(1 << i, dim)
    }

    #[inline]
    pub fn bits(self) -> u16 {
        self.bits
    }

    #[inline]
    pub fn dim(self) -> usize {
        self.dim as usize
    }

    /// True for the zero vector.
    #[inline]
    pub fn is_trivial(self) -> bool {
        self.bits == 0
    }

    #[inline]
    pub fn get(self, i: usize) -> bool {
        self.bits >> i & 1 == 1
    }

    /// Standard dot product over GF(2).
    #[inline]
    pub fn dot(self, other: BitVec) -> bool {
        (self.bits & other.bits).count_ones() & 1 == 1
    }

    pub fn checked_add(self, other: BitVec) -> Result<BitVec> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        Ok(BitVec { bits: self.bits ^ other.bits, dim: self.dim })
    }

    /// Parse the text form: leftmost character is the first coordinate.
    pub fn parse(text: &str) -> Result<Self> {
        let dim = text.len();
        check_dim(dim)?;
        let mut bits = 0u16;
        for (i, c) in text.bytes().enumerate() {
            match c {
                b'0' => {}
                b'1' => bits |= 1 << i,
                _ => return Err(Error::InvalidBitString(String::from(text))),
            }
        }
        Ok(Self { bits, dim: dim as u8 })
    }
}

impl fmt::Display for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim() {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVec({self})")
    }
}

pub(crate) fn check_dim(dim: usize) -> Result<()> {
    if dim == 0 || dim > MAX_DIM {
        return Err(Error::DimensionTooLarge { dim, max: MAX_DIM });
    }
    Ok(())
}

/// A matrix over GF(2) stored as packed rows.
///
/// Acting on a vector `v` means `(M v)_i = <row_i, v>`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BitMatrix {
    rows: Vec<u16>,
    cols: u8,
}

impl BitMatrix {
    pub fn from_rows(rows: &[BitVec]) -> Result<Self> {
        let cols = match rows.first() {
            Some(r) => r.dim(),
            None => return Err(Error::EmptyMatrix),
        };
        if let Some(bad) = rows.iter().find(|r| r.dim() != cols) {
            return Err(Error::DimensionMismatch { expected: cols, found: bad.dim() });
        }
        Ok(Self { rows: rows.iter().map(|r| r.bits).collect(), cols: cols as u8 })
    }

    /// Rows given by raw encodings; every encoding must fit in `cols` bits.
    pub fn from_words(words: &[u16], cols: usize) -> Result<Self> {
        let rows: Vec<BitVec> = words
            .iter()
            .map(|&w| BitVec::new(w, cols))
            .collect::<Result<_>>()?;
        if rows.is_empty() {
            return Err(Error::EmptyMatrix);
        }
        Self::from_rows(&rows)
    }

    pub fn identity(n: usize) -> Result<Self> {
        check_dim(n)?;
        Ok(Self { rows: (0..n).map(|i| 1u16 << i).collect(), cols: n as u8 })
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols as usize
    }

    pub fn row(&self, i: usize) -> BitVec {
        BitVec { bits: self.rows[i], dim: self.cols }
    }

    pub fn rows(&self) -> impl ExactSizeIterator<Item = BitVec> + '_ {
        self.rows.iter().map(move |&bits| BitVec { bits, dim: self.cols })
    }

    pub fn words(&self) -> &[u16] {
        &self.rows
    }

    pub fn is_square(&self) -> bool {
        self.rows.len() == self.cols as usize
    }

    pub fn rank(&self) -> usize {
        rank_of_words(&self.rows)
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut out = alloc::vec![0u16; self.ncols()];
        for (i, &r) in self.rows.iter().enumerate() {
            for (j, o) in out.iter_mut().enumerate() {
                if r >> j & 1 == 1 {
                    *o |= 1 << i;
                }
            }
        }
        BitMatrix { rows: out, cols: self.rows.len() as u8 }
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: BitVec) -> Result<BitVec> {
        if v.dim() != self.ncols() {
            return Err(Error::DimensionMismatch { expected: self.ncols(), found: v.dim() });
        }
        Ok(BitVec { bits: self.apply_word(v.bits), dim: self.rows.len() as u8 })
    }

    #[inline]
    pub(crate) fn apply_word(&self, v: u16) -> u16 {
        let mut out = 0u16;
        for (i, &r) in self.rows.iter().enumerate() {
            out |= (((r & v).count_ones() & 1) as u16) << i;
        }
        out
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &BitMatrix) -> Result<BitMatrix> {
        if self.ncols() != other.nrows() {
            return Err(Error::DimensionMismatch { expected: self.ncols(), found: other.nrows() });
        }
        let rows = self
            .rows
            .iter()
            .map(|&r| {
                other
                    .rows
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| r >> k & 1 == 1)
                    .fold(0u16, |acc, (_, &o)| acc ^ o)
            })
            .collect();
        Ok(BitMatrix { rows, cols: other.cols })
    }

    /// Gauss-Jordan inverse of a square full-rank matrix.
    pub fn invert(&self) -> Result<BitMatrix> {
        if !self.is_square() {
            return Err(Error::SingularMatrix);
        }
        let n = self.ncols();
        let mut a = self.rows.clone();
        let mut inv: Vec<u16> = (0..n).map(|i| 1u16 << i).collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| a[r] >> col & 1 == 1).ok_or(Error::SingularMatrix)?;
            a.swap(col, pivot);
            inv.swap(col, pivot);
            for r in 0..n {
                if r != col && a[r] >> col & 1 == 1 {
                    a[r] ^= a[col];
                    inv[r] ^= inv[col];
                }
            }
        }
        Ok(BitMatrix { rows: inv, cols: self.cols })
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

/// Rank of a set of packed vectors.
pub fn rank_of_words(words: &[u16]) -> usize {
    let mut basis = [0u16; MAX_DIM];
    let mut rank = 0;
    for &w in words {
        if insert_reduced(&mut basis, w) {
            rank += 1;
        }
    }
    rank
}

/// Reduce `w` against a pivot table indexed by leading bit; stores it if it
/// is independent of what is already there.
#[inline]
pub(crate) fn insert_reduced(basis: &mut [u16; MAX_DIM], mut w: u16) -> bool {
    while w != 0 {
        let top = 15 - w.leading_zeros() as usize;
        if basis[top] == 0 {
            basis[top] = w;
            return true;
        }
        w ^= basis[top];
    }
    false
}

/// True when the packed vectors are linearly independent.
pub fn is_independent(words: &[u16]) -> bool {
    words.len() <= MAX_DIM && rank_of_words(words) == words.len()
}

/// Number of ordered bases of GF(2)^n, i.e. |GL(n, 2)|.
pub fn ordered_basis_count(n: usize) -> u64 {
    (0..n).map(|i| (1u64 << n) - (1u64 << i)).product()
}

/// Every ordered basis of GF(2)^n as the rows of a matrix, in lexicographic
/// order of the row encodings.
pub fn enumerate_ordered_bases(n: usize) -> Result<OrderedBases> {
    if n == 0 || n > MAX_ENUM_DIM {
        return Err(Error::DimensionTooLarge { dim: n, max: MAX_ENUM_DIM });
    }
    Ok(OrderedBases { n, rows: Vec::with_capacity(n), next: alloc::vec![1], done: false })
}

/// Stream returned by [`enumerate_ordered_bases`].
#[derive(Clone, Debug)]
pub struct OrderedBases {
    n: usize,
    rows: Vec<u16>,
    // candidate to try next at each depth
    next: Vec<u16>,
    done: bool,
}

impl Iterator for OrderedBases {
    type Item = BitMatrix;

    fn next(&mut self) -> Option<BitMatrix> {
        let limit = 1u32 << self.n;
        while !self.done {
            let depth = self.rows.len();
            let cand = self.next[depth] as u32;
            if cand >= limit {
                // exhausted this depth, backtrack
                self.next.pop();
                match self.rows.pop() {
                    Some(_) => continue,
                    None => {
                        self.done = true;
                        return None;
                    }
                }
            }
            self.next[depth] += 1;
            self.rows.push(cand as u16);
            if !is_independent(&self.rows) {
                self.rows.pop();
                continue;
            }
            if self.rows.len() == self.n {
                let m = BitMatrix { rows: self.rows.clone(), cols: self.n as u8 };
                self.rows.pop();
                return Some(m);
            }
            self.next.push(1);
        }
        None
    }
}

/// Canonical basis of the span of `words`: reduced row echelon form with rows
/// sorted by encoding.
pub fn canonical_span_basis(words: &[u16]) -> Vec<u16> {
    let mut rows: Vec<u16> = Vec::new();
    for &w in words {
        let mut v = w;
        for &r in &rows {
            let top = 15 - r.leading_zeros();
            if v >> top & 1 == 1 {
                v ^= r;
            }
        }
        if v == 0 {
            continue;
        }
        let top = 15 - v.leading_zeros();
        for r in rows.iter_mut() {
            if *r >> top & 1 == 1 {
                *r ^= v;
            }
        }
        rows.push(v);
    }
    rows.sort_unstable();
    rows
}

/// All `k`-dimensional subspaces of GF(2)^n, each given by its canonical
/// basis, sorted by the sequence of canonical basis encodings.
pub fn subspaces(n: usize, k: usize) -> Result<Vec<Vec<u16>>> {
    if n == 0 || n > MAX_ENUM_DIM || k > n {
        return Err(Error::DimensionTooLarge { dim: n, max: MAX_ENUM_DIM });
    }
    let mut out = alloc::collections::BTreeSet::new();
    if k == 0 {
        out.insert(Vec::new());
        return Ok(out.into_iter().collect());
    }
    let mut chosen: Vec<u16> = Vec::with_capacity(k);
    fn walk(
        n: usize,
        k: usize,
        start: u16,
        chosen: &mut Vec<u16>,
        out: &mut alloc::collections::BTreeSet<Vec<u16>>,
    ) {
        if chosen.len() == k {
            out.insert(canonical_span_basis(chosen));
            return;
        }
        for v in start..(1u32 << n) as u16 {
            chosen.push(v);
            if is_independent(chosen) {
                walk(n, k, v + 1, chosen, out);
            }
            chosen.pop();
        }
    }
    walk(n, k, 1, &mut chosen, &mut out);
    Ok(out.into_iter().collect())
}
