//! Dense matrices over GF(2) with bit-packed rows.
//!
//! Rows are packed into `u64` words, most-significant bit first, so that
//! row operations (the inner loop of multiplication and elimination) are
//! word-parallel XORs. All padding bits past the last column of a row are
//! kept at zero; the byte serialization below relies on that invariant.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Magic prefix of the serialized matrix format.
pub const MATRIX_MAGIC: [u8; 4] = *b"GF2M";

const WORD_BITS: usize = 64;

#[inline]
fn bit_mask(col: usize) -> u64 {
    1u64 << (WORD_BITS - 1 - (col % WORD_BITS))
}

/// Errors from matrix arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gf2Error {
    /// Operand shapes do not conform for the named operation.
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    /// A square-only operation was applied to a non-square matrix.
    NotSquare { rows: usize, cols: usize },
    /// The matrix has no inverse.
    SingularMatrix,
    /// The matrix does not have full row rank.
    NotFullRank,
}

impl fmt::Display for Gf2Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gf2Error::DimensionMismatch { op, left, right } => write!(
                f,
                "dimension mismatch in {}: {}x{} vs {}x{}",
                op, left.0, left.1, right.0, right.1
            ),
            Gf2Error::NotSquare { rows, cols } => {
                write!(f, "matrix is not square: {}x{}", rows, cols)
            }
            Gf2Error::SingularMatrix => write!(f, "matrix is singular"),
            Gf2Error::NotFullRank => write!(f, "matrix does not have full row rank"),
        }
    }
}

impl core::error::Error for Gf2Error {}

/// Errors from deserializing the byte format.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gf2DecodeError {
    /// Input does not start with `GF2M`.
    BadMagic,
    /// Input ends before the payload announced by the header.
    Truncated,
    /// Input continues past the payload announced by the header.
    TrailingData,
    /// Header declares a zero row or column count.
    ZeroDimension,
    /// A padding bit past the last column is set.
    NonzeroPadding,
}

impl fmt::Display for Gf2DecodeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let msg = match self {
            Gf2DecodeError::BadMagic => "bad matrix magic",
            Gf2DecodeError::Truncated => "truncated matrix payload",
            Gf2DecodeError::TrailingData => "trailing data after matrix payload",
            Gf2DecodeError::ZeroDimension => "matrix header declares a zero dimension",
            Gf2DecodeError::NonzeroPadding => "nonzero padding bits in matrix payload",
        };
        f.write_str(msg)
    }
}

impl core::error::Error for Gf2DecodeError {}

/// A dense binary matrix. Values are immutable once constructed; the
/// mutating methods exist for construction routines that own the buffer.
#[derive(Clone, PartialEq, Eq)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    words: Vec<u64>,
}

impl Gf2Matrix {
    /// All-zero matrix. Panics on a zero dimension.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows >= 1 && cols >= 1, "matrix dimensions must be >= 1");
        let wpr = cols.div_ceil(WORD_BITS);
        Gf2Matrix {
            rows,
            cols,
            words: vec![0; rows * wpr],
        }
    }

    /// The n-by-n identity.
    pub fn identity(n: usize) -> Self {
        let mut m = Gf2Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from one entry per element, row-major, any nonzero
    /// byte meaning 1. Panics unless `entries.len() == rows * cols`.
    pub fn from_bits(rows: usize, cols: usize, entries: &[u8]) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count must be rows*cols");
        let mut m = Gf2Matrix::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                if entries[r * cols + c] != 0 {
                    m.set(r, c, true);
                }
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    #[inline]
    fn words_per_row(&self) -> usize {
        self.cols.div_ceil(WORD_BITS)
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> bool {
        assert!(row < self.rows && col < self.cols, "index out of range");
        self.words[row * self.words_per_row() + col / WORD_BITS] & bit_mask(col) != 0
    }

    #[inline]
    pub fn set(&mut self, row: usize, col: usize, value: bool) {
        assert!(row < self.rows && col < self.cols, "index out of range");
        let idx = row * self.words_per_row() + col / WORD_BITS;
        if value {
            self.words[idx] |= bit_mask(col);
        } else {
            self.words[idx] &= !bit_mask(col);
        }
    }

    /// Raw packed words of one row.
    #[inline]
    pub(crate) fn row_words(&self, row: usize) -> &[u64] {
        let wpr = self.words_per_row();
        &self.words[row * wpr..(row + 1) * wpr]
    }

    /// Mutable packed words of one row. Callers must keep the padding
    /// bits zero; `tail_mask` gives the valid bits of the final word.
    #[inline]
    pub(crate) fn row_words_mut(&mut self, row: usize) -> &mut [u64] {
        let wpr = self.words_per_row();
        &mut self.words[row * wpr..(row + 1) * wpr]
    }

    /// Mask of the valid (non-padding) bits in the last word of a row.
    #[inline]
    pub(crate) fn tail_mask(&self) -> u64 {
        let keep = self.cols - (self.words_per_row() - 1) * WORD_BITS;
        if keep == WORD_BITS {
            u64::MAX
        } else {
            u64::MAX << (WORD_BITS - keep)
        }
    }

    pub(crate) fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let wpr = self.words_per_row();
        for k in 0..wpr {
            self.words.swap(a * wpr + k, b * wpr + k);
        }
    }

    /// XORs row `src` into row `dst`.
    pub(crate) fn xor_row(&mut self, dst: usize, src: usize) {
        let wpr = self.words_per_row();
        for k in 0..wpr {
            let v = self.words[src * wpr + k];
            self.words[dst * wpr + k] ^= v;
        }
    }

    /// XORs row `src` of `other` into row `dst` of `self`. Column counts
    /// must match.
    pub(crate) fn xor_row_from(&mut self, dst: usize, other: &Gf2Matrix, src: usize) {
        debug_assert_eq!(self.cols, other.cols);
        let wpr = self.words_per_row();
        for (k, &v) in other.row_words(src).iter().enumerate() {
            self.words[dst * wpr + k] ^= v;
        }
    }

    /// Copies row `src` of `other` over row `dst` of `self`.
    pub(crate) fn copy_row_from(&mut self, dst: usize, other: &Gf2Matrix, src: usize) {
        debug_assert_eq!(self.cols, other.cols);
        let wpr = self.words_per_row();
        self.words[dst * wpr..(dst + 1) * wpr].copy_from_slice(other.row_words(src));
    }

    /// Extracts one row as a 1-by-cols matrix.
    pub fn row_matrix(&self, row: usize) -> Gf2Matrix {
        assert!(row < self.rows, "row out of range");
        let mut out = Gf2Matrix::zeros(1, self.cols);
        out.copy_row_from(0, self, row);
        out
    }

    /// Calls `visit(col)` for every set bit of a row, in column order.
    #[inline]
    pub(crate) fn for_each_set_bit(&self, row: usize, mut visit: impl FnMut(usize)) {
        for (wi, &w) in self.row_words(row).iter().enumerate() {
            let mut bits = w;
            while bits != 0 {
                let lead = bits.leading_zeros() as usize;
                bits &= !(1u64 << (WORD_BITS - 1 - lead));
                visit(wi * WORD_BITS + lead);
            }
        }
    }

    /// Matrix product over GF(2). For each set bit in a row of `self`, the
    /// matching packed row of `other` is XORed into the output row.
    pub fn multiply(&self, other: &Gf2Matrix) -> Result<Gf2Matrix, Gf2Error> {
        if self.cols != other.rows {
            return Err(Gf2Error::DimensionMismatch {
                op: "multiply",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut out = Gf2Matrix::zeros(self.rows, other.cols);
        let owpr = out.words_per_row();
        for i in 0..self.rows {
            let out_base = i * owpr;
            self.for_each_set_bit(i, |k| {
                for (w, &v) in other.row_words(k).iter().enumerate() {
                    out.words[out_base + w] ^= v;
                }
            });
        }
        Ok(out)
    }

    /// Elementwise XOR.
    pub fn add(&self, other: &Gf2Matrix) -> Result<Gf2Matrix, Gf2Error> {
        if self.shape() != other.shape() {
            return Err(Gf2Error::DimensionMismatch {
                op: "add",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut out = self.clone();
        for (w, &v) in out.words.iter_mut().zip(other.words.iter()) {
            *w ^= v;
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Gf2Matrix {
        let mut out = Gf2Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            self.for_each_set_bit(r, |c| out.set(c, r, true));
        }
        out
    }

    /// Inverse by Gauss-Jordan elimination, first nonzero pivot in column
    /// order. The pivot row is snapshotted once per column and XORed into
    /// the others word-by-word, so the inner loops touch packed words
    /// only — this is the routine the generate-and-test benchmarks lean
    /// on, and a bit-at-a-time version would hide its cubic growth behind
    /// call overhead at small sizes.
    pub fn invert(&self) -> Result<Gf2Matrix, Gf2Error> {
        if self.rows != self.cols {
            return Err(Gf2Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        let wpr = self.words_per_row();
        let mut work = self.clone();
        let mut inv = Gf2Matrix::identity(n);
        let mut pivot_work = vec![0u64; wpr];
        let mut pivot_inv = vec![0u64; wpr];
        for col in 0..n {
            let wi = col / WORD_BITS;
            let mask = bit_mask(col);
            let pivot = (col..n)
                .find(|&r| work.words[r * wpr + wi] & mask != 0)
                .ok_or(Gf2Error::SingularMatrix)?;
            work.swap_rows(pivot, col);
            inv.swap_rows(pivot, col);
            pivot_work.copy_from_slice(work.row_words(col));
            pivot_inv.copy_from_slice(inv.row_words(col));
            for r in 0..n {
                if r != col && work.words[r * wpr + wi] & mask != 0 {
                    for (w, &p) in work.row_words_mut(r).iter_mut().zip(&pivot_work) {
                        *w ^= p;
                    }
                    for (w, &p) in inv.row_words_mut(r).iter_mut().zip(&pivot_inv) {
                        *w ^= p;
                    }
                }
            }
        }
        Ok(inv)
    }

    /// A right inverse: `self * result == identity(self.rows())`. Requires
    /// full row rank (which forces rows <= cols).
    pub fn right_inverse(&self) -> Result<Gf2Matrix, Gf2Error> {
        if self.rows > self.cols {
            return Err(Gf2Error::NotFullRank);
        }
        let m = self.rows;
        let wpr = self.words_per_row();
        let ops_wpr = m.div_ceil(WORD_BITS);
        let mut work = self.clone();
        let mut ops = Gf2Matrix::identity(m);
        let mut pivot_work = vec![0u64; wpr];
        let mut pivot_ops = vec![0u64; ops_wpr];
        let mut pivot_cols = Vec::with_capacity(m);
        for col in 0..self.cols {
            let cur = pivot_cols.len();
            if cur == m {
                break;
            }
            let wi = col / WORD_BITS;
            let mask = bit_mask(col);
            let Some(pivot) = (cur..m).find(|&r| work.words[r * wpr + wi] & mask != 0) else {
                continue;
            };
            work.swap_rows(pivot, cur);
            ops.swap_rows(pivot, cur);
            pivot_work.copy_from_slice(work.row_words(cur));
            pivot_ops.copy_from_slice(ops.row_words(cur));
            for r in 0..m {
                if r != cur && work.words[r * wpr + wi] & mask != 0 {
                    for (w, &p) in work.row_words_mut(r).iter_mut().zip(&pivot_work) {
                        *w ^= p;
                    }
                    for (w, &p) in ops.row_words_mut(r).iter_mut().zip(&pivot_ops) {
                        *w ^= p;
                    }
                }
            }
            pivot_cols.push(col);
        }
        if pivot_cols.len() < m {
            return Err(Gf2Error::NotFullRank);
        }
        // work is now RREF with unit vectors in the pivot columns; placing
        // the recorded row operations at those columns yields X with
        // self * X = I.
        let mut out = Gf2Matrix::zeros(self.cols, m);
        for (k, &pc) in pivot_cols.iter().enumerate() {
            out.copy_row_from(pc, &ops, k);
        }
        Ok(out)
    }

    pub fn rank(&self) -> usize {
        let wpr = self.words_per_row();
        let mut work = self.clone();
        let mut pivot_row = vec![0u64; wpr];
        let mut r = 0;
        for col in 0..self.cols {
            if r == self.rows {
                break;
            }
            let wi = col / WORD_BITS;
            let mask = bit_mask(col);
            let Some(pivot) = (r..self.rows).find(|&i| work.words[i * wpr + wi] & mask != 0)
            else {
                continue;
            };
            work.swap_rows(pivot, r);
            pivot_row.copy_from_slice(work.row_words(r));
            for i in (r + 1)..self.rows {
                if work.words[i * wpr + wi] & mask != 0 {
                    for (w, &p) in work.row_words_mut(i).iter_mut().zip(&pivot_row) {
                        *w ^= p;
                    }
                }
            }
            r += 1;
        }
        r
    }

    /// True iff square with exactly one 1 per row and per column.
    pub fn is_permutation(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        let mut seen = vec![false; self.cols];
        for r in 0..self.rows {
            let weight: u32 = self.row_words(r).iter().map(|w| w.count_ones()).sum();
            if weight != 1 {
                return false;
            }
            let mut col = 0;
            self.for_each_set_bit(r, |c| col = c);
            if seen[col] {
                return false;
            }
            seen[col] = true;
        }
        true
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Gf2Matrix::identity(self.rows)
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hconcat(&self, other: &Gf2Matrix) -> Result<Gf2Matrix, Gf2Error> {
        if self.rows != other.rows {
            return Err(Gf2Error::DimensionMismatch {
                op: "hconcat",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut out = Gf2Matrix::zeros(self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            self.for_each_set_bit(r, |c| out.set(r, c, true));
            other.for_each_set_bit(r, |c| out.set(r, self.cols + c, true));
        }
        Ok(out)
    }

    /// Vertical concatenation, `self` on top.
    pub fn vconcat(&self, other: &Gf2Matrix) -> Result<Gf2Matrix, Gf2Error> {
        if self.cols != other.cols {
            return Err(Gf2Error::DimensionMismatch {
                op: "vconcat",
                left: self.shape(),
                right: other.shape(),
            });
        }
        let mut out = Gf2Matrix::zeros(self.rows + other.rows, self.cols);
        out.words[..self.words.len()].copy_from_slice(&self.words);
        out.words[self.words.len()..].copy_from_slice(&other.words);
        Ok(out)
    }

    /// Serializes to the `GF2M` byte format: magic, row and column counts
    /// as 4-octet big-endian integers, then `rows * ceil(cols/8)` payload
    /// octets, each row MSB-first and padded to a whole octet.
    pub fn to_bytes(&self) -> Vec<u8> {
        let bpr = self.cols.div_ceil(8);
        let mut out = Vec::with_capacity(12 + self.rows * bpr);
        out.extend_from_slice(&MATRIX_MAGIC);
        out.extend_from_slice(&(self.rows as u32).to_be_bytes());
        out.extend_from_slice(&(self.cols as u32).to_be_bytes());
        for r in 0..self.rows {
            let mut written = 0;
            for w in self.row_words(r) {
                if written == bpr {
                    break;
                }
                let take = (bpr - written).min(8);
                out.extend_from_slice(&w.to_be_bytes()[..take]);
                written += take;
            }
        }
        out
    }

    /// Parses the `GF2M` byte format, validating magic, length, and that
    /// all padding bits are zero.
    pub fn from_bytes(bytes: &[u8]) -> Result<Gf2Matrix, Gf2DecodeError> {
        if bytes.len() < 4 {
            return Err(Gf2DecodeError::Truncated);
        }
        if bytes[..4] != MATRIX_MAGIC {
            return Err(Gf2DecodeError::BadMagic);
        }
        if bytes.len() < 12 {
            return Err(Gf2DecodeError::Truncated);
        }
        let rows = u32::from_be_bytes(bytes[4..8].try_into().unwrap()) as usize;
        let cols = u32::from_be_bytes(bytes[8..12].try_into().unwrap()) as usize;
        if rows == 0 || cols == 0 {
            return Err(Gf2DecodeError::ZeroDimension);
        }
        let bpr = cols.div_ceil(8);
        let expected = 12u64 + rows as u64 * bpr as u64;
        if (bytes.len() as u64) < expected {
            return Err(Gf2DecodeError::Truncated);
        }
        if (bytes.len() as u64) > expected {
            return Err(Gf2DecodeError::TrailingData);
        }
        let mut m = Gf2Matrix::zeros(rows, cols);
        let wpr = m.words_per_row();
        let last_mask = m.tail_mask();
        for r in 0..rows {
            let row_bytes = &bytes[12 + r * bpr..12 + (r + 1) * bpr];
            for (wi, chunk) in row_bytes.chunks(8).enumerate() {
                let mut be = [0u8; 8];
                be[..chunk.len()].copy_from_slice(chunk);
                m.words[r * wpr + wi] = u64::from_be_bytes(be);
            }
            let last = m.words[r * wpr + wpr - 1];
            if last & !last_mask != 0 {
                return Err(Gf2DecodeError::NonzeroPadding);
            }
        }
        Ok(m)
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Gf2Matrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            for c in 0..self.cols {
                f.write_str(if self.get(r, c) { "1" } else { "0" })?;
            }
            f.write_str("\n")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: usize, cols: usize, entries: &[u8]) -> Gf2Matrix {
        Gf2Matrix::from_bits(rows, cols, entries)
    }

    #[test]
    fn multiply_identity_leaves_operand_unchanged() {
        let a = mat(4, 4, &[1, 0, 1, 1, 0, 1, 0, 0, 1, 1, 1, 0, 0, 0, 1, 1]);
        let id = Gf2Matrix::identity(4);
        assert_eq!(id.multiply(&a).unwrap(), a);
        assert_eq!(a.multiply(&id).unwrap(), a);
    }

    #[test]
    fn multiply_matches_hand_evaluated_product() {
        // [[1,1],[0,1]] * [[1,0],[1,1]] over GF(2), evaluated by the
        // triple loop by hand.
        let a = mat(2, 2, &[1, 1, 0, 1]);
        let b = mat(2, 2, &[1, 0, 1, 1]);
        let expected = mat(2, 2, &[0, 1, 1, 1]);
        assert_eq!(a.multiply(&b).unwrap(), expected);
    }

    #[test]
    fn permutation_times_transpose_is_identity() {
        let p = mat(3, 3, &[0, 1, 0, 0, 0, 1, 1, 0, 0]);
        assert!(p.is_permutation());
        assert!(p.multiply(&p.transpose()).unwrap().is_identity());
    }

    #[test]
    fn multiply_rejects_mismatched_shapes() {
        let a = Gf2Matrix::zeros(2, 3);
        let b = Gf2Matrix::zeros(2, 3);
        match a.multiply(&b) {
            Err(Gf2Error::DimensionMismatch { left, right, .. }) => {
                assert_eq!(left, (2, 3));
                assert_eq!(right, (2, 3));
            }
            other => panic!("expected dimension mismatch, got {:?}", other.map(|_| ())),
        }
    }

    #[test]
    fn add_is_characteristic_two() {
        let a = mat(2, 3, &[1, 0, 1, 1, 1, 0]);
        assert!(a.add(&a).unwrap().is_zero());
        let zero = Gf2Matrix::zeros(2, 3);
        assert_eq!(a.add(&zero).unwrap(), a);
        assert_eq!(
            mat(1, 2, &[1, 0]).add(&mat(1, 2, &[1, 1])).unwrap(),
            mat(1, 2, &[0, 1])
        );
    }

    #[test]
    fn invert_identity_and_permutation() {
        let id = Gf2Matrix::identity(8);
        assert_eq!(id.invert().unwrap(), id);
        let p = mat(4, 4, &[0, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 0]);
        assert_eq!(p.invert().unwrap(), p.transpose());
    }

    #[test]
    fn invert_reports_singular() {
        let a = mat(2, 2, &[1, 1, 1, 1]);
        assert_eq!(a.invert(), Err(Gf2Error::SingularMatrix));
    }

    #[test]
    fn right_inverse_of_systematic_matrix() {
        // [I2 | p] has [[1,0],[0,1],[0,0]] as a right inverse.
        let g = mat(2, 3, &[1, 0, 1, 0, 1, 1]);
        let x = g.right_inverse().unwrap();
        assert_eq!(x.shape(), (3, 2));
        assert!(g.multiply(&x).unwrap().is_identity());
        assert_eq!(x, mat(3, 2, &[1, 0, 0, 1, 0, 0]));
    }

    #[test]
    fn right_inverse_of_square_matrix_is_the_inverse() {
        let a = mat(3, 3, &[1, 1, 0, 0, 1, 1, 0, 0, 1]);
        assert_eq!(a.right_inverse().unwrap(), a.invert().unwrap());
    }

    #[test]
    fn right_inverse_of_hamming_generator() {
        // Hamming(7,4) generator in systematic form.
        #[rustfmt::skip]
        let g = mat(4, 7, &[
            1, 0, 0, 0, 1, 1, 0,
            0, 1, 0, 0, 1, 0, 1,
            0, 0, 1, 0, 0, 1, 1,
            0, 0, 0, 1, 1, 1, 1,
        ]);
        let x = g.right_inverse().unwrap();
        assert!(g.multiply(&x).unwrap().is_identity());
    }

    #[test]
    fn right_inverse_rejects_rank_deficient_input() {
        let a = mat(2, 3, &[1, 0, 1, 1, 0, 1]);
        assert_eq!(a.right_inverse(), Err(Gf2Error::NotFullRank));
        let tall = Gf2Matrix::zeros(3, 2);
        assert_eq!(tall.right_inverse(), Err(Gf2Error::NotFullRank));
    }

    #[test]
    fn rank_of_identity_and_zero() {
        assert_eq!(Gf2Matrix::identity(8).rank(), 8);
        assert_eq!(Gf2Matrix::zeros(4, 4).rank(), 0);
    }

    #[test]
    fn transpose_is_an_involution() {
        let a = mat(2, 3, &[1, 0, 1, 0, 1, 1]);
        assert_eq!(a.transpose().transpose(), a);
    }

    #[test]
    fn is_permutation_rejects_doubled_rows() {
        assert!(!mat(2, 2, &[1, 1, 0, 0]).is_permutation());
        assert!(!mat(2, 2, &[1, 0, 1, 0]).is_permutation());
        assert!(!Gf2Matrix::zeros(2, 3).is_permutation());
        assert!(Gf2Matrix::identity(5).is_permutation());
    }

    #[test]
    fn concat_assembles_blocks() {
        let a = Gf2Matrix::identity(2);
        let b = mat(2, 1, &[1, 0]);
        let ab = a.hconcat(&b).unwrap();
        assert_eq!(ab, mat(2, 3, &[1, 0, 1, 0, 1, 0]));
        let stacked = a.vconcat(&mat(1, 2, &[1, 1])).unwrap();
        assert_eq!(stacked, mat(3, 2, &[1, 0, 0, 1, 1, 1]));
    }

    #[test]
    fn smallest_matrix_serializes_to_header_plus_one_octet() {
        let m = mat(1, 1, &[1]);
        let bytes = m.to_bytes();
        assert_eq!(bytes.len(), 13);
        assert_eq!(&bytes[..4], b"GF2M");
        assert_eq!(&bytes[4..8], &1u32.to_be_bytes());
        assert_eq!(&bytes[8..12], &1u32.to_be_bytes());
        assert_eq!(bytes[12], 0x80);
        assert_eq!(Gf2Matrix::from_bytes(&bytes).unwrap(), m);
    }

    #[test]
    fn payload_size_matches_row_times_padded_octets() {
        // 524x1024 is the smallest public-key shape in the preset list;
        // its payload is 524 * 128 = 67072 octets.
        let m = Gf2Matrix::zeros(524, 1024);
        assert_eq!(m.to_bytes().len(), 12 + 67_072);
    }

    #[test]
    fn decode_errors_are_distinct() {
        let m = mat(1, 3, &[1, 0, 1]);
        let good = m.to_bytes();

        let mut bad_magic = good.clone();
        bad_magic[0] = b'X';
        assert_eq!(
            Gf2Matrix::from_bytes(&bad_magic),
            Err(Gf2DecodeError::BadMagic)
        );

        assert_eq!(
            Gf2Matrix::from_bytes(&good[..good.len() - 1]),
            Err(Gf2DecodeError::Truncated)
        );

        let mut trailing = good.clone();
        trailing.push(0);
        assert_eq!(
            Gf2Matrix::from_bytes(&trailing),
            Err(Gf2DecodeError::TrailingData)
        );

        let mut padded = good.clone();
        padded[12] |= 0x01; // bit past column 2 of a 3-column row
        assert_eq!(
            Gf2Matrix::from_bytes(&padded),
            Err(Gf2DecodeError::NonzeroPadding)
        );

        let mut zero_dim = good;
        zero_dim[4..8].copy_from_slice(&0u32.to_be_bytes());
        assert_eq!(
            Gf2Matrix::from_bytes(&zero_dim),
            Err(Gf2DecodeError::ZeroDimension)
        );
    }

    #[test]
    fn round_trip_preserves_word_boundary_shapes() {
        for cols in [1, 7, 8, 63, 64, 65, 127, 128, 130] {
            let mut m = Gf2Matrix::zeros(3, cols);
            m.set(0, 0, true);
            m.set(1, cols - 1, true);
            m.set(2, cols / 2, true);
            assert_eq!(Gf2Matrix::from_bytes(&m.to_bytes()).unwrap(), m);
        }
    }
}
