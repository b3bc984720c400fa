//! McEliece-style keys over a pluggable binary linear code.
//!
//! A key pair is a scrambler K1, a code generator K2 (with decoder K4 and
//! parity check K5), and a coordinate permutation K3; the public key is
//! the product L = K1·K2·K3. Encryption maps a 1×ζ1 message row to a
//! 1×ζ2 ciphertext row `m·L + e` with an error row of weight exactly t;
//! decryption unpermutes, syndrome-decodes, strips to the message, and
//! unscrambles. Signatures run the same pipeline backwards: a ζ1×1
//! message column is mapped to s = K3⁻¹·K4·K1⁻¹·m, and any holder of L
//! recovers the message as L·s.
//!
//! Two code families are provided. The errorless-systematic family (t=0)
//! is what the certificate protocol runs on; Hamming(7,4) (t=1) is small
//! enough to test the correction path exhaustively. Neither pretends to
//! offer real security margins — the trapdoor here is structural, and a
//! production deployment would substitute Goppa codes at these shapes.

use core::fmt;

use crate::gf2::Gf2Matrix;
use crate::params::{CodeFamily, ParameterSet};
use crate::randgen::{permutation_pair, random_error_row, random_invertible, random_matrix, Prng};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum McElieceError {
    /// An input had the wrong shape for the named operation.
    Shape {
        what: &'static str,
        expected: (usize, usize),
        got: (usize, usize),
    },
    /// The syndrome indicates more errors than the code can correct.
    Uncorrectable,
    /// Assembled key material fails a structural invariant.
    Inconsistent { what: &'static str },
}

impl fmt::Display for McElieceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            McElieceError::Shape {
                what,
                expected,
                got,
            } => write!(
                f,
                "shape mismatch in {}: expected {}x{}, got {}x{}",
                what, expected.0, expected.1, got.0, got.1
            ),
            McElieceError::Uncorrectable => {
                write!(f, "uncorrectable word: syndrome exceeds capacity")
            }
            McElieceError::Inconsistent { what } => {
                write!(f, "inconsistent key material: {}", what)
            }
        }
    }
}

impl core::error::Error for McElieceError {}

/// A binary linear code: generator K2 (ζ1×ζ2), decoder K4 (ζ2×ζ1, a right
/// inverse of K2), parity check K5 ((ζ2−ζ1)×ζ2), and capacity t.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearCode {
    generator: Gf2Matrix,
    decoder: Gf2Matrix,
    parity_check: Gf2Matrix,
    parity_check_t: Gf2Matrix,
    t: usize,
}

impl LinearCode {
    /// Systematic code `K2 = [I | P]` with a random parity block and t=0.
    /// The decoder is `[I; 0]` and the parity check `[Pᵀ | I]`, so the
    /// generator identities hold by block algebra.
    pub fn errorless_systematic(prng: &mut Prng, zeta1: usize, zeta2: usize) -> Self {
        assert!(zeta1 < zeta2, "systematic code needs zeta1 < zeta2");
        let parity_block = random_matrix(prng, zeta1, zeta2 - zeta1);
        let generator = Gf2Matrix::identity(zeta1).hconcat(&parity_block).unwrap();
        let decoder = Gf2Matrix::identity(zeta1)
            .vconcat(&Gf2Matrix::zeros(zeta2 - zeta1, zeta1))
            .unwrap();
        let parity_check = parity_block
            .transpose()
            .hconcat(&Gf2Matrix::identity(zeta2 - zeta1))
            .unwrap();
        Self::from_parts(generator, decoder, parity_check, 0).unwrap()
    }

    /// The (7,4) Hamming code in systematic form, t=1.
    pub fn hamming_7_4() -> Self {
        #[rustfmt::skip]
        let parity_block = Gf2Matrix::from_bits(4, 3, &[
            1, 1, 0,
            1, 0, 1,
            0, 1, 1,
            1, 1, 1,
        ]);
        let generator = Gf2Matrix::identity(4).hconcat(&parity_block).unwrap();
        let decoder = Gf2Matrix::identity(4)
            .vconcat(&Gf2Matrix::zeros(3, 4))
            .unwrap();
        let parity_check = parity_block
            .transpose()
            .hconcat(&Gf2Matrix::identity(3))
            .unwrap();
        Self::from_parts(generator, decoder, parity_check, 1).unwrap()
    }

    /// Assembles a code from explicit matrices, checking shapes and the
    /// defining identities K2·K4 = I and K2·K5ᵀ = 0.
    pub fn from_parts(
        generator: Gf2Matrix,
        decoder: Gf2Matrix,
        parity_check: Gf2Matrix,
        t: usize,
    ) -> Result<Self, McElieceError> {
        let (k, n) = generator.shape();
        if decoder.shape() != (n, k) {
            return Err(McElieceError::Shape {
                what: "code decoder",
                expected: (n, k),
                got: decoder.shape(),
            });
        }
        if parity_check.shape() != (n - k, n) {
            return Err(McElieceError::Shape {
                what: "code parity check",
                expected: (n - k, n),
                got: parity_check.shape(),
            });
        }
        let parity_check_t = parity_check.transpose();
        if !generator.multiply(&decoder).unwrap().is_identity() {
            return Err(McElieceError::Inconsistent {
                what: "decoder is not a right inverse of the generator",
            });
        }
        if !generator.multiply(&parity_check_t).unwrap().is_zero() {
            return Err(McElieceError::Inconsistent {
                what: "parity check does not annihilate the generator",
            });
        }
        Ok(LinearCode {
            generator,
            decoder,
            parity_check,
            parity_check_t,
            t,
        })
    }

    pub fn generator(&self) -> &Gf2Matrix {
        &self.generator
    }

    pub fn decoder(&self) -> &Gf2Matrix {
        &self.decoder
    }

    pub fn parity_check(&self) -> &Gf2Matrix {
        &self.parity_check
    }

    pub fn capacity(&self) -> usize {
        self.t
    }

    pub fn message_len(&self) -> usize {
        self.generator.rows()
    }

    pub fn codeword_len(&self) -> usize {
        self.generator.cols()
    }

    /// Encodes message rows into codeword rows (`m · K2`).
    pub fn encode(&self, messages: &Gf2Matrix) -> Result<Gf2Matrix, McElieceError> {
        if messages.cols() != self.message_len() {
            return Err(McElieceError::Shape {
                what: "encode input",
                expected: (messages.rows(), self.message_len()),
                got: messages.shape(),
            });
        }
        Ok(messages.multiply(&self.generator).unwrap())
    }

    /// Decodes one received word (1×ζ2): computes the syndrome, corrects
    /// up to t errors (t ∈ {0, 1} for the provided families), and strips
    /// the codeword to its message via K4.
    pub fn decode_row(&self, word: &Gf2Matrix) -> Result<Gf2Matrix, McElieceError> {
        if word.shape() != (1, self.codeword_len()) {
            return Err(McElieceError::Shape {
                what: "decode input",
                expected: (1, self.codeword_len()),
                got: word.shape(),
            });
        }
        let syndrome = word.multiply(&self.parity_check_t).unwrap();
        if syndrome.is_zero() {
            return Ok(word.multiply(&self.decoder).unwrap());
        }
        if self.t == 0 {
            return Err(McElieceError::Uncorrectable);
        }
        // Single-error correction: the syndrome of a weight-1 error at
        // position j is column j of the parity check.
        let checks = self.parity_check.rows();
        for j in 0..self.codeword_len() {
            let matches = (0..checks).all(|i| self.parity_check.get(i, j) == syndrome.get(0, i));
            if matches {
                let mut corrected = word.clone();
                corrected.set(0, j, !corrected.get(0, j));
                return Ok(corrected.multiply(&self.decoder).unwrap());
            }
        }
        Err(McElieceError::Uncorrectable)
    }
}

/// Private key {K1, K2, K3} with the cached inverses and the public key
/// L = K1·K2·K3. Immutable once generated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct McElieceKeyPair {
    params: ParameterSet,
    k1: Gf2Matrix,
    k1_inv: Gf2Matrix,
    code: LinearCode,
    k3: Gf2Matrix,
    k3_inv: Gf2Matrix,
    public_l: Gf2Matrix,
}

/// Deterministic key generation: the seed drives the scrambler, the code's
/// parity block (errorless family), and the permutation, in that order.
pub fn keygen(params: ParameterSet, seed: u64) -> McElieceKeyPair {
    let mut prng = Prng::from_seed(seed);
    let (k1, k1_inv) = random_invertible(&mut prng, params.zeta1);
    let code = match params.family {
        CodeFamily::ErrorlessSystematic => {
            LinearCode::errorless_systematic(&mut prng, params.zeta1, params.zeta2)
        }
        CodeFamily::Hamming74 => LinearCode::hamming_7_4(),
    };
    let k3 = permutation_pair(&mut prng, params.zeta2);
    let public_l = k1
        .multiply(code.generator())
        .unwrap()
        .multiply(&k3.forward)
        .unwrap();
    McElieceKeyPair {
        params,
        k1,
        k1_inv,
        code,
        k3: k3.forward,
        k3_inv: k3.inverse,
        public_l,
    }
}

impl McElieceKeyPair {
    /// Reassembles a key pair from stored matrices. Shapes are validated
    /// here; the algebraic invariants are checked by `validate` (callers
    /// loading untrusted files decide whether to pay for that).
    pub fn from_parts(
        params: ParameterSet,
        k1: Gf2Matrix,
        k1_inv: Gf2Matrix,
        code: LinearCode,
        k3: Gf2Matrix,
        k3_inv: Gf2Matrix,
        public_l: Gf2Matrix,
    ) -> Result<Self, McElieceError> {
        let z1 = params.zeta1;
        let z2 = params.zeta2;
        let shapes = [
            ("scrambler", &k1, (z1, z1)),
            ("scrambler inverse", &k1_inv, (z1, z1)),
            ("permutation", &k3, (z2, z2)),
            ("permutation inverse", &k3_inv, (z2, z2)),
            ("public key", &public_l, (z1, z2)),
        ];
        for (what, m, expected) in shapes {
            if m.shape() != expected {
                return Err(McElieceError::Shape {
                    what,
                    expected,
                    got: m.shape(),
                });
            }
        }
        if code.message_len() != z1 || code.codeword_len() != z2 {
            return Err(McElieceError::Shape {
                what: "code generator",
                expected: (z1, z2),
                got: code.generator.shape(),
            });
        }
        Ok(McElieceKeyPair {
            params,
            k1,
            k1_inv,
            code,
            k3,
            k3_inv,
            public_l,
        })
    }

    /// Full algebraic consistency check: mutual inverses, permutation
    /// structure, and L = K1·K2·K3. Quadratic-to-cubic in the dimensions,
    /// so opt-in.
    pub fn validate(&self) -> Result<(), McElieceError> {
        let fail = |what| Err(McElieceError::Inconsistent { what });
        if !self.k1.multiply(&self.k1_inv).unwrap().is_identity() {
            return fail("scrambler inverse does not invert the scrambler");
        }
        if !self.k3.is_permutation() {
            return fail("permutation matrix is not a permutation");
        }
        if !self.k3.multiply(&self.k3_inv).unwrap().is_identity() {
            return fail("permutation inverse does not invert the permutation");
        }
        let l = self
            .k1
            .multiply(self.code.generator())
            .unwrap()
            .multiply(&self.k3)
            .unwrap();
        if l != self.public_l {
            return fail("public key is not K1*K2*K3");
        }
        Ok(())
    }

    pub fn params(&self) -> ParameterSet {
        self.params
    }

    pub fn k1(&self) -> &Gf2Matrix {
        &self.k1
    }

    pub fn k1_inv(&self) -> &Gf2Matrix {
        &self.k1_inv
    }

    pub fn code(&self) -> &LinearCode {
        &self.code
    }

    pub fn k3(&self) -> &Gf2Matrix {
        &self.k3
    }

    pub fn k3_inv(&self) -> &Gf2Matrix {
        &self.k3_inv
    }

    pub fn public_l(&self) -> &Gf2Matrix {
        &self.public_l
    }
}

/// Encrypts message rows (k×ζ1) under a public key: `z = m·L + e`, one
/// independent error row of weight exactly t drawn per message row, in
/// row order. Returns the ciphertext rows (k×ζ2).
pub fn encrypt(
    messages: &Gf2Matrix,
    public_l: &Gf2Matrix,
    t: usize,
    prng: &mut Prng,
) -> Result<Gf2Matrix, McElieceError> {
    Ok(encrypt_with_errors(messages, public_l, t, prng)?.0)
}

/// As `encrypt`, but also returns the drawn error rows (for tests that
/// verify the decryption chain step by step).
pub fn encrypt_with_errors(
    messages: &Gf2Matrix,
    public_l: &Gf2Matrix,
    t: usize,
    prng: &mut Prng,
) -> Result<(Gf2Matrix, Gf2Matrix), McElieceError> {
    if messages.cols() != public_l.rows() {
        return Err(McElieceError::Shape {
            what: "encrypt input",
            expected: (messages.rows(), public_l.rows()),
            got: messages.shape(),
        });
    }
    let mut z = messages.multiply(public_l).unwrap();
    let mut errors = Gf2Matrix::zeros(z.rows(), z.cols());
    for r in 0..z.rows() {
        let e = random_error_row(prng, z.cols(), t);
        errors.copy_row_from(r, &e, 0);
        z.xor_row_from(r, &e, 0);
    }
    Ok((z, errors))
}

/// Decrypts ciphertext rows (k×ζ2): unpermute with K3⁻¹, decode each row
/// (syndrome check, correct up to t, strip via K4), then unscramble with
/// K1⁻¹. Fails with `Uncorrectable` if any row's syndrome is beyond t.
pub fn decrypt(z: &Gf2Matrix, key: &McElieceKeyPair) -> Result<Gf2Matrix, McElieceError> {
    decrypt_parts(z, &key.k3_inv, &key.code, &key.k1_inv)
}

pub(crate) fn decrypt_parts(
    z: &Gf2Matrix,
    k3_inv: &Gf2Matrix,
    code: &LinearCode,
    k1_inv: &Gf2Matrix,
) -> Result<Gf2Matrix, McElieceError> {
    if z.cols() != code.codeword_len() {
        return Err(McElieceError::Shape {
            what: "decrypt input",
            expected: (z.rows(), code.codeword_len()),
            got: z.shape(),
        });
    }
    let unpermuted = z.multiply(k3_inv).unwrap();
    let mut scrambled = Gf2Matrix::zeros(z.rows(), code.message_len());
    for r in 0..z.rows() {
        let msg = code.decode_row(&unpermuted.row_matrix(r))?;
        scrambled.copy_row_from(r, &msg, 0);
    }
    Ok(scrambled.multiply(k1_inv).unwrap())
}

/// Signs one ζ1×1 message column: s = K3⁻¹·K4·K1⁻¹·m.
pub fn sign(m: &Gf2Matrix, key: &McElieceKeyPair) -> Result<Gf2Matrix, McElieceError> {
    if m.shape() != (key.params.zeta1, 1) {
        return Err(McElieceError::Shape {
            what: "sign input",
            expected: (key.params.zeta1, 1),
            got: m.shape(),
        });
    }
    sign_matrix(m, key)
}

/// The signing map applied to a whole ζ1×k matrix at once (column-wise
/// signatures). The certificate protocol signs a ζ1×ζ1 permutation this
/// way.
pub fn sign_matrix(m: &Gf2Matrix, key: &McElieceKeyPair) -> Result<Gf2Matrix, McElieceError> {
    if m.rows() != key.params.zeta1 {
        return Err(McElieceError::Shape {
            what: "sign input",
            expected: (key.params.zeta1, m.cols()),
            got: m.shape(),
        });
    }
    let unscrambled = key.k1_inv.multiply(m).unwrap();
    let lifted = key.code.decoder.multiply(&unscrambled).unwrap();
    Ok(key.k3_inv.multiply(&lifted).unwrap())
}

/// Applies the public key to a signature column: returns L·s, which for
/// an honest signature is the signed message. The caller compares the
/// result against the message it expected.
pub fn verify(s: &Gf2Matrix, public_l: &Gf2Matrix) -> Result<Gf2Matrix, McElieceError> {
    if s.shape() != (public_l.cols(), 1) {
        return Err(McElieceError::Shape {
            what: "verify input",
            expected: (public_l.cols(), 1),
            got: s.shape(),
        });
    }
    Ok(public_l.multiply(s).unwrap())
}

/// Maps a digest to a ζ1×1 message column: the first ζ1 bits of the
/// digest, MSB-first, zero-padded when the digest is shorter than ζ1
/// bits.
pub fn hash_to_message(digest: &[u8], zeta1: usize) -> Gf2Matrix {
    let mut m = Gf2Matrix::zeros(zeta1, 1);
    for i in 0..zeta1 {
        let byte = i / 8;
        if byte < digest.len() && digest[byte] & (0x80 >> (i % 8)) != 0 {
            m.set(i, 0, true);
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::params::{HAMMING_7_4, TEST_12X28};

    fn row_from_bits(bits: &[u8]) -> Gf2Matrix {
        Gf2Matrix::from_bits(1, bits.len(), bits)
    }

    fn random_message_row(prng: &mut Prng, width: usize) -> Gf2Matrix {
        random_matrix(prng, 1, width)
    }

    #[test]
    fn keygen_has_documented_shapes_and_is_deterministic() {
        let a = keygen(TEST_12X28, 7);
        let b = keygen(TEST_12X28, 7);
        let c = keygen(TEST_12X28, 8);
        assert_eq!(a.public_l().shape(), (12, 28));
        assert_eq!(a, b);
        assert_ne!(a.public_l(), c.public_l());
        a.validate().unwrap();
    }

    #[test]
    fn code_identities_hold_for_both_families() {
        let mut prng = Prng::from_seed(1);
        for code in [
            LinearCode::errorless_systematic(&mut prng, 12, 28),
            LinearCode::hamming_7_4(),
        ] {
            assert!(code
                .generator()
                .multiply(code.decoder())
                .unwrap()
                .is_identity());
            assert!(code
                .generator()
                .multiply(&code.parity_check().transpose())
                .unwrap()
                .is_zero());
        }
    }

    #[test]
    fn errorless_zero_message_encrypts_to_zero() {
        let key = keygen(TEST_12X28, 3);
        let mut prng = Prng::from_seed(0);
        let z = encrypt(&Gf2Matrix::zeros(1, 12), key.public_l(), 0, &mut prng).unwrap();
        assert!(z.is_zero());
        assert!(decrypt(&z, &key).unwrap().is_zero());
    }

    #[test]
    fn errorless_round_trip_over_random_messages() {
        let key = keygen(TEST_12X28, 40);
        let mut prng = Prng::from_seed(41);
        for _ in 0..100 {
            let m = random_message_row(&mut prng, 12);
            let z = encrypt(&m, key.public_l(), 0, &mut prng).unwrap();
            assert_eq!(decrypt(&z, &key).unwrap(), m);
        }
    }

    #[test]
    fn batch_encryption_equals_row_by_row_with_shared_draws() {
        let key = keygen(HAMMING_7_4, 5);
        let mut prng = Prng::from_seed(6);
        let batch = random_matrix(&mut prng, 3, 4);

        let mut enc_prng = Prng::from_seed(100);
        let z_batch = encrypt(&batch, key.public_l(), 1, &mut enc_prng).unwrap();

        let mut row_prng = Prng::from_seed(100);
        for r in 0..3 {
            let z_row = encrypt(&batch.row_matrix(r), key.public_l(), 1, &mut row_prng).unwrap();
            assert_eq!(z_batch.row_matrix(r), z_row);
        }
    }

    #[test]
    fn hamming_corrects_every_single_bit_error() {
        let key = keygen(HAMMING_7_4, 11);
        for m_bits in 0..16u8 {
            let m = row_from_bits(&[m_bits >> 3 & 1, m_bits >> 2 & 1, m_bits >> 1 & 1, m_bits & 1]);
            let clean = m.multiply(key.public_l()).unwrap();
            // No error, then each of the 7 single-bit corruptions.
            assert_eq!(decrypt(&clean, &key).unwrap(), m);
            for j in 0..7 {
                let mut z = clean.clone();
                z.set(0, j, !z.get(0, j));
                assert_eq!(decrypt(&z, &key).unwrap(), m, "flip at {}", j);
            }
        }
    }

    #[test]
    fn hamming_never_survives_double_errors_silently() {
        // A perfect code miscorrects weight-2 patterns; what matters is
        // that the result is never mistaken for the original message.
        let key = keygen(HAMMING_7_4, 12);
        let m = row_from_bits(&[1, 0, 1, 1]);
        let clean = m.multiply(key.public_l()).unwrap();
        for a in 0..7 {
            for b in (a + 1)..7 {
                let mut z = clean.clone();
                z.set(0, a, !z.get(0, a));
                z.set(0, b, !z.get(0, b));
                match decrypt(&z, &key) {
                    Ok(got) => assert_ne!(got, m, "flips at {},{}", a, b),
                    Err(McElieceError::Uncorrectable) => {}
                    Err(other) => panic!("unexpected error: {}", other),
                }
            }
        }
    }

    #[test]
    fn errorless_decrypt_flags_any_corruption() {
        let key = keygen(TEST_12X28, 13);
        let mut prng = Prng::from_seed(14);
        let m = random_message_row(&mut prng, 12);
        let z = encrypt(&m, key.public_l(), 0, &mut prng).unwrap();
        for j in 0..28 {
            let mut bad = z.clone();
            bad.set(0, j, !bad.get(0, j));
            assert_eq!(decrypt(&bad, &key), Err(McElieceError::Uncorrectable));
        }
    }

    #[test]
    fn sign_verify_round_trip_random_and_exhaustive() {
        let key = keygen(TEST_12X28, 20);
        let mut prng = Prng::from_seed(21);
        for _ in 0..100 {
            let m = random_matrix(&mut prng, 12, 1);
            let s = sign(&m, &key).unwrap();
            assert_eq!(s.shape(), (28, 1));
            assert_eq!(verify(&s, key.public_l()).unwrap(), m);
        }
        // Every message of the 4-bit family.
        let key = keygen(HAMMING_7_4, 22);
        for bits in 0..16u8 {
            let m = Gf2Matrix::from_bits(
                4,
                1,
                &[bits >> 3 & 1, bits >> 2 & 1, bits >> 1 & 1, bits & 1],
            );
            assert_eq!(
                verify(&sign(&m, &key).unwrap(), key.public_l()).unwrap(),
                m
            );
        }
    }

    #[test]
    fn zero_message_signs_to_zero() {
        let key = keygen(TEST_12X28, 23);
        let s = sign(&Gf2Matrix::zeros(12, 1), &key).unwrap();
        assert!(s.is_zero());
        assert!(verify(&s, key.public_l()).unwrap().is_zero());
    }

    #[test]
    fn signing_is_deterministic() {
        let key = keygen(TEST_12X28, 24);
        let m = hash_to_message(&[0xDE, 0xAD], 12);
        assert_eq!(sign(&m, &key).unwrap(), sign(&m, &key).unwrap());
    }

    #[test]
    fn verification_map_times_signing_map_is_identity() {
        // L·(K3⁻¹·K4·K1⁻¹) == I, checked as a matrix equation.
        for seed in 0..20 {
            for params in [TEST_12X28, HAMMING_7_4] {
                let key = keygen(params, seed);
                let signing_map = sign_matrix(&Gf2Matrix::identity(params.zeta1), &key).unwrap();
                assert!(key.public_l().multiply(&signing_map).unwrap().is_identity());
            }
        }
    }

    #[test]
    fn single_bit_signature_tamper_changes_the_recovered_message() {
        let key = keygen(TEST_12X28, 25);
        let m = hash_to_message(&[0x5A, 0x70], 12);
        let s = sign(&m, &key).unwrap();
        for j in 0..28 {
            let mut bad = s.clone();
            bad.set(j, 0, !bad.get(j, 0));
            assert_ne!(verify(&bad, key.public_l()).unwrap(), m, "flip at {}", j);
        }
    }

    #[test]
    fn digest_bits_map_msb_first() {
        let m = hash_to_message(&[0xA5], 8);
        let expected = Gf2Matrix::from_bits(8, 1, &[1, 0, 1, 0, 0, 1, 0, 1]);
        assert_eq!(m, expected);

        assert!(hash_to_message(&[0, 0, 0], 12).is_zero());
        // Shorter digest than zeta1 bits: the tail is zero-padded.
        let padded = hash_to_message(&[0xFF], 12);
        for i in 0..8 {
            assert!(padded.get(i, 0));
        }
        for i in 8..12 {
            assert!(!padded.get(i, 0));
        }
    }

    #[test]
    fn shape_errors_name_the_operation() {
        let key = keygen(TEST_12X28, 26);
        let mut prng = Prng::from_seed(0);
        let wide = Gf2Matrix::zeros(1, 13);
        assert!(matches!(
            encrypt(&wide, key.public_l(), 0, &mut prng),
            Err(McElieceError::Shape { what: "encrypt input", .. })
        ));
        assert!(matches!(
            decrypt(&Gf2Matrix::zeros(1, 27), &key),
            Err(McElieceError::Shape { what: "decrypt input", .. })
        ));
        assert!(matches!(
            sign(&Gf2Matrix::zeros(11, 1), &key),
            Err(McElieceError::Shape { what: "sign input", .. })
        ));
        assert!(matches!(
            verify(&Gf2Matrix::zeros(27, 1), key.public_l()),
            Err(McElieceError::Shape { what: "verify input", .. })
        ));
    }

    #[test]
    fn from_parts_rejects_mismatched_material() {
        let key = keygen(TEST_12X28, 27);
        let err = McElieceKeyPair::from_parts(
            HAMMING_7_4,
            key.k1().clone(),
            key.k1_inv().clone(),
            key.code().clone(),
            key.k3().clone(),
            key.k3_inv().clone(),
            key.public_l().clone(),
        );
        assert!(matches!(err, Err(McElieceError::Shape { .. })));
    }
}
