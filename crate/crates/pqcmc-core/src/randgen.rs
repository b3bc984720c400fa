//! Deterministic randomness for key and matrix generation.
//!
//! Everything here is driven by a seedable splitmix64 stream so that key
//! generation, issuance, and the test suite are reproducible from a single
//! 64-bit seed. The generator counts its draws, which lets callers assert
//! exact draw budgets (permutation sampling spends one draw per index).

use alloc::vec;
use alloc::vec::Vec;

use crate::gf2::Gf2Matrix;

/// splitmix64 stream with a draw counter.
///
/// splitmix64 passes the usual statistical batteries, needs no warm-up,
/// and is trivially portable, which is all that is asked of it here; none
/// of this code pretends to be a CSPRNG and callers that need real keys
/// must seed from the platform's entropy source.
#[derive(Clone, Debug)]
pub struct Prng {
    state: u64,
    draws: u64,
}

impl Prng {
    pub fn from_seed(seed: u64) -> Self {
        Prng {
            state: seed,
            draws: 0,
        }
    }

    /// Next 64-bit output.
    pub fn next_u64(&mut self) -> u64 {
        self.draws += 1;
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Number of `next_u64` calls so far.
    pub fn draw_count(&self) -> u64 {
        self.draws
    }

    /// One draw reduced modulo `bound`. The reduction keeps a fixed
    /// one-draw-per-index budget; the modulo bias is below 2^-50 for any
    /// bound this crate uses and is accepted by design.
    pub fn next_below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "bound must be positive");
        self.next_u64() % bound
    }
}

/// A permutation matrix together with its inverse (= its transpose).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationPair {
    pub forward: Gf2Matrix,
    pub inverse: Gf2Matrix,
}

/// Reusable buffers for repeated permutation sampling.
///
/// Steady-state `regenerate` touches O(n) words: it clears exactly the
/// bits set by the previous round instead of re-zeroing an n-by-n matrix,
/// so timing it measures the sampler rather than the allocator. Only the
/// forward matrix is kept up to date; a permutation's inverse is its
/// transpose, and [`PermutationWorkspace::into_pair`] materializes it once
/// at the end instead of mirroring every bit write.
pub struct PermutationWorkspace {
    idx: Vec<usize>,
    forward: Gf2Matrix,
    dirty: bool,
}

impl PermutationWorkspace {
    pub fn new(n: usize) -> Self {
        PermutationWorkspace {
            idx: vec![0; n],
            forward: Gf2Matrix::zeros(n, n),
            dirty: false,
        }
    }

    pub fn size(&self) -> usize {
        self.idx.len()
    }

    /// Samples a fresh permutation into the held buffers, spending exactly
    /// `n` draws: position `i` is swapped with a position drawn over the
    /// whole range (not a shrinking suffix), for every `i` in order.
    pub fn regenerate(&mut self, prng: &mut Prng) {
        let n = self.idx.len();
        if self.dirty {
            for (i, &p) in self.idx.iter().enumerate() {
                self.forward.set(i, p, false);
            }
        }
        for (i, slot) in self.idx.iter_mut().enumerate() {
            *slot = i;
        }
        for i in 0..n {
            let j = prng.next_below(n as u64) as usize;
            self.idx.swap(i, j);
        }
        for (i, &p) in self.idx.iter().enumerate() {
            self.forward.set(i, p, true);
        }
        self.dirty = true;
    }

    pub fn forward(&self) -> &Gf2Matrix {
        &self.forward
    }

    pub fn into_pair(self) -> PermutationPair {
        assert!(self.dirty, "workspace was never regenerated");
        let inverse = self.forward.transpose();
        PermutationPair {
            forward: self.forward,
            inverse,
        }
    }
}

/// Samples an n-by-n permutation matrix and its inverse in O(n) draws.
pub fn permutation_pair(prng: &mut Prng, n: usize) -> PermutationPair {
    let mut ws = PermutationWorkspace::new(n);
    ws.regenerate(prng);
    ws.into_pair()
}

/// The permutation pair a fresh stream seeded with `seed` produces. This
/// is the transportable form: a party that learns the seed reproduces the
/// exact matrix.
pub fn permutation_from_seed(seed: u64, n: usize) -> PermutationPair {
    permutation_pair(&mut Prng::from_seed(seed), n)
}

/// Uniform random matrix (every entry an independent fair bit).
pub fn random_matrix(prng: &mut Prng, rows: usize, cols: usize) -> Gf2Matrix {
    let mut m = Gf2Matrix::zeros(rows, cols);
    let tail = m.tail_mask();
    for r in 0..rows {
        let words = m.row_words_mut(r);
        let last = words.len() - 1;
        for (wi, w) in words.iter_mut().enumerate() {
            *w = prng.next_u64();
            if wi == last {
                *w &= tail;
            }
        }
    }
    m
}

/// A 1-by-n row of weight exactly `weight`, positions drawn without
/// replacement.
pub fn random_error_row(prng: &mut Prng, cols: usize, weight: usize) -> Gf2Matrix {
    assert!(weight <= cols, "error weight cannot exceed row length");
    let mut row = Gf2Matrix::zeros(1, cols);
    let mut placed = 0;
    while placed < weight {
        let c = prng.next_below(cols as u64) as usize;
        if !row.get(0, c) {
            row.set(0, c, true);
            placed += 1;
        }
    }
    row
}

/// Samples an invertible matrix as a product U*W*P of a unit upper
/// triangular, a unit lower triangular, and a permutation, and returns it
/// with its inverse. Invertibility holds by construction, so there is no
/// rejection loop; the price is that the distribution is only
/// approximately uniform over GL(n, 2), which is fine for scrambling
/// matrices that merely need to be invertible and seed-reproducible.
pub fn random_invertible(prng: &mut Prng, n: usize) -> (Gf2Matrix, Gf2Matrix) {
    let mut upper = Gf2Matrix::identity(n);
    let mut lower = Gf2Matrix::identity(n);
    for r in 0..n {
        or_random_suffix(&mut upper, prng, r, r + 1);
        or_random_prefix(&mut lower, prng, r, r);
    }
    let perm = permutation_pair(prng, n);

    let upper_inv = invert_unit_upper(&upper);
    let lower_inv = invert_unit_lower(&lower);

    let m = upper
        .multiply(&lower)
        .and_then(|uw| uw.multiply(&perm.forward))
        .expect("square factors of equal size always conform");
    let m_inv = perm
        .inverse
        .multiply(&lower_inv)
        .and_then(|pw| pw.multiply(&upper_inv))
        .expect("square factors of equal size always conform");
    (m, m_inv)
}

/// Baseline sampler for comparison: draws uniform matrices and rejects
/// until one passes a full-rank check. Each attempt costs a complete
/// elimination, and roughly 29% of uniform matrices over GF(2) are
/// invertible, so expect three or four tries. Returns the accepted matrix
/// and the attempt count.
///
/// The rank check is a deliberately plain, bit-at-a-time elimination
/// rather than [`Gf2Matrix::rank`]. This function exists as the
/// generate-and-test reference point that [`random_invertible`] is
/// measured against, so it should cost what the textbook procedure costs;
/// the packed routine processes 64 entries per word operation and would
/// misstate the straw man's cost by about that factor.
pub fn baseline_random_invertible(prng: &mut Prng, n: usize) -> (Gf2Matrix, u32) {
    let mut tries = 0;
    loop {
        tries += 1;
        let m = random_matrix(prng, n, n);
        if naive_full_rank(&m) {
            return (m, tries);
        }
    }
}

/// Schoolbook full-rank test: find a pivot in each column, swap it into
/// place, clear the column below it. Every step goes through the
/// single-bit accessors, one matrix entry at a time, exactly as the
/// procedure is written in a linear-algebra text — Θ(n³) bit operations
/// with no word-level parallelism.
fn naive_full_rank(m: &Gf2Matrix) -> bool {
    let n = m.rows();
    let mut a = m.clone();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| a.get(r, col)) else {
            return false;
        };
        if pivot != col {
            a.swap_rows(pivot, col);
        }
        for r in (col + 1)..n {
            if a.get(r, col) {
                for k in col..n {
                    let bit = a.get(r, k) ^ a.get(col, k);
                    a.set(r, k, bit);
                }
            }
        }
    }
    true
}

/// OR random bits into columns `start..cols` of one row.
fn or_random_suffix(m: &mut Gf2Matrix, prng: &mut Prng, row: usize, start: usize) {
    let cols = m.cols();
    if start >= cols {
        return;
    }
    let tail = m.tail_mask();
    let words = m.row_words_mut(row);
    let last = words.len() - 1;
    let first = start / 64;
    for (wi, word) in words.iter_mut().enumerate().skip(first) {
        let mut w = prng.next_u64();
        if wi == first {
            w &= u64::MAX >> (start % 64);
        }
        if wi == last {
            w &= tail;
        }
        *word |= w;
    }
}

/// OR random bits into columns `0..end` of one row.
fn or_random_prefix(m: &mut Gf2Matrix, prng: &mut Prng, row: usize, end: usize) {
    if end == 0 {
        return;
    }
    let words = m.row_words_mut(row);
    let full = end / 64;
    for w in words.iter_mut().take(full) {
        *w |= prng.next_u64();
    }
    if !end.is_multiple_of(64) {
        words[full] |= prng.next_u64() & (u64::MAX << (64 - end % 64));
    }
}

/// Inverse of a unit upper triangular matrix by back-substitution from the
/// bottom row up: row i of the inverse is e_i plus the already-final rows
/// selected by the off-diagonal bits of row i.
fn invert_unit_upper(u: &Gf2Matrix) -> Gf2Matrix {
    let n = u.rows();
    let mut x = Gf2Matrix::identity(n);
    for i in (0..n).rev() {
        let mut picks = Vec::new();
        u.for_each_set_bit(i, |j| {
            if j > i {
                picks.push(j);
            }
        });
        for j in picks {
            x.xor_row(i, j);
        }
    }
    x
}

/// Inverse of a unit lower triangular matrix, top row down.
fn invert_unit_lower(w: &Gf2Matrix) -> Gf2Matrix {
    let n = w.rows();
    let mut x = Gf2Matrix::identity(n);
    for i in 0..n {
        let mut picks = Vec::new();
        w.for_each_set_bit(i, |j| {
            if j < i {
                picks.push(j);
            }
        });
        for j in picks {
            x.xor_row(i, j);
        }
    }
    x
}
