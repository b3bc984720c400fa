//! Property tests for the bit-matrix kernel, checked against naive
//! reference implementations that share no code with the word-packed
//! fast paths.

use pqcmc_core::gf2::Gf2Matrix;
use pqcmc_core::randgen::{baseline_random_invertible, permutation_from_seed, random_invertible, random_matrix, Prng};
use proptest::prelude::*;

fn sample(seed: u64, rows: usize, cols: usize) -> Gf2Matrix {
    let mut prng = Prng::from_seed(seed);
    random_matrix(&mut prng, rows, cols)
}

/// Schoolbook GF(2) multiply: one bit at a time, no word tricks.
fn naive_multiply(a: &Gf2Matrix, b: &Gf2Matrix) -> Gf2Matrix {
    assert_eq!(a.cols(), b.rows());
    let mut out = Gf2Matrix::zeros(a.rows(), b.cols());
    for i in 0..a.rows() {
        for j in 0..b.cols() {
            let mut bit = false;
            for k in 0..a.cols() {
                bit ^= a.get(i, k) && b.get(k, j);
            }
            if bit {
                out.set(i, j, true);
            }
        }
    }
    out
}

proptest! {
    #[test]
    fn multiply_matches_the_schoolbook_oracle(
        seed_a in any::<u64>(),
        seed_b in any::<u64>(),
        rows in 1usize..=16,
        inner in 1usize..=16,
        cols in 1usize..=16,
    ) {
        let a = sample(seed_a, rows, inner);
        let b = sample(seed_b, inner, cols);
        prop_assert_eq!(a.multiply(&b).unwrap(), naive_multiply(&a, &b));
    }

    #[test]
    fn multiply_matches_the_oracle_across_word_boundaries(
        seed_a in any::<u64>(),
        seed_b in any::<u64>(),
        inner in prop::sample::select(vec![63usize, 64, 65, 127, 128, 130]),
    ) {
        // Small outer dimensions, inner dimension straddling u64 words —
        // the axis the packed representation actually packs.
        let a = sample(seed_a, 3, inner);
        let b = sample(seed_b, inner, 5);
        prop_assert_eq!(a.multiply(&b).unwrap(), naive_multiply(&a, &b));
    }

    #[test]
    fn byte_encoding_round_trips(
        seed in any::<u64>(),
        rows in 1usize..=40,
        cols in 1usize..=130,
    ) {
        let m = sample(seed, rows, cols);
        let bytes = m.to_bytes();
        prop_assert_eq!(Gf2Matrix::from_bytes(&bytes).unwrap(), m);
    }

    #[test]
    fn transpose_is_an_involution_and_distributes_over_multiply(
        seed_a in any::<u64>(),
        seed_b in any::<u64>(),
        rows in 1usize..=20,
        inner in 1usize..=20,
        cols in 1usize..=20,
    ) {
        let a = sample(seed_a, rows, inner);
        let b = sample(seed_b, inner, cols);
        prop_assert_eq!(a.transpose().transpose(), a.clone());
        let lhs = a.multiply(&b).unwrap().transpose();
        let rhs = b.transpose().multiply(&a.transpose()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn multiplication_is_associative(
        seed_a in any::<u64>(),
        seed_b in any::<u64>(),
        seed_c in any::<u64>(),
        d1 in 1usize..=12,
        d2 in 1usize..=12,
        d3 in 1usize..=12,
        d4 in 1usize..=12,
    ) {
        let a = sample(seed_a, d1, d2);
        let b = sample(seed_b, d2, d3);
        let c = sample(seed_c, d3, d4);
        let left = a.multiply(&b).unwrap().multiply(&c).unwrap();
        let right = a.multiply(&b.multiply(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn addition_is_commutative_and_self_cancels(
        seed_a in any::<u64>(),
        seed_b in any::<u64>(),
        rows in 1usize..=30,
        cols in 1usize..=80,
    ) {
        let a = sample(seed_a, rows, cols);
        let b = sample(seed_b, rows, cols);
        prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
        prop_assert!(a.add(&a).unwrap().is_zero());
    }

    #[test]
    fn sampled_invertibles_invert_both_ways(
        seed in any::<u64>(),
        n in prop::sample::select(vec![1usize, 2, 7, 12, 33, 64, 65]),
    ) {
        let mut prng = Prng::from_seed(seed);
        let (m, m_inv) = random_invertible(&mut prng, n);
        prop_assert!(m.multiply(&m_inv).unwrap().is_identity());
        prop_assert!(m_inv.multiply(&m).unwrap().is_identity());
        // Elimination-based inversion agrees with the construction.
        prop_assert_eq!(m.invert().unwrap(), m_inv);
        prop_assert_eq!(m.rank(), n);
    }

    #[test]
    fn rejection_sampled_invertibles_invert(
        seed in any::<u64>(),
        n in prop::sample::select(vec![1usize, 4, 9, 16]),
    ) {
        let mut prng = Prng::from_seed(seed);
        let (m, tries) = baseline_random_invertible(&mut prng, n);
        prop_assert!(tries >= 1);
        let m_inv = m.invert().unwrap();
        prop_assert!(m.multiply(&m_inv).unwrap().is_identity());
    }

    #[test]
    fn permutations_are_orthogonal(
        seed in any::<u64>(),
        n in prop::sample::select(vec![1usize, 2, 12, 63, 64, 65]),
    ) {
        let pair = permutation_from_seed(seed, n);
        prop_assert!(pair.forward.is_permutation());
        // A permutation's inverse is its transpose.
        prop_assert_eq!(pair.forward.transpose(), pair.inverse.clone());
        prop_assert!(pair.forward.multiply(&pair.inverse).unwrap().is_identity());
    }

    #[test]
    fn rank_never_exceeds_either_dimension(
        seed in any::<u64>(),
        rows in 1usize..=24,
        cols in 1usize..=24,
    ) {
        let m = sample(seed, rows, cols);
        prop_assert!(m.rank() <= rows.min(cols));
    }
}
