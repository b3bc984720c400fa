//! Implicit-certificate issuance over McEliece keys.
//!
//! The flow has three parties. The CA signs a random permutation M_r with
//! its private key (giving T), encrypts T to the end entity's public key
//! (giving the reconstruction value B = T·L_E, carried in the certificate
//! C_E), and returns (r, C_E). The end entity decrypts B back to T,
//! checks L_CA·T == M_r to convince itself the CA really produced it, and
//! folds a certificate-bound permutation M_h into its scrambler:
//! K1' = M_h·L_CA·T·K1_E, with inverse K1_E⁻¹·M_r⁻¹·M_h⁻¹. Any verifier
//! reconstructs the matching public key Q = M_h·L_CA·B from the
//! certificate and the CA's public key alone — no signature field needed,
//! which is the entire point of the implicit form.
//!
//! B is transported without an error term (the errorless reading of the
//! encryption step): exact reconstruction Q = M_h·L_CA·B algebraically
//! requires it, and the t=0 code family matches it.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use sha2::{Digest, Sha256};

use crate::certs::{cert_digest, encode_cert, ImplicitCert};
use crate::gf2::Gf2Matrix;
use crate::mceliece::{decrypt, sign, sign_matrix, McElieceError, McElieceKeyPair};
use crate::randgen::{permutation_from_seed, PermutationPair};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PqcmcError {
    /// An input's shape disagrees with the parameter set.
    Shape {
        what: &'static str,
        expected: (usize, usize),
        got: (usize, usize),
    },
    /// The reconstruction value does not check out against the issuer:
    /// either it fails to decrypt under the end entity's key, or the
    /// recovered T' does not satisfy L_CA·T' == M_r. Tampered or
    /// substituted B lands here.
    IssuerValidation,
    /// The certificate's reconstruction value is structurally unusable
    /// (not the ζ2×ζ2 shape the parameter set demands).
    MalformedReconstruction,
}

impl fmt::Display for PqcmcError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PqcmcError::Shape {
                what,
                expected,
                got,
            } => write!(
                f,
                "shape mismatch in {}: expected {}x{}, got {}x{}",
                what, expected.0, expected.1, got.0, got.1
            ),
            PqcmcError::IssuerValidation => {
                write!(f, "issuer validation failed for the reconstruction value")
            }
            PqcmcError::MalformedReconstruction => {
                write!(f, "malformed reconstruction value")
            }
        }
    }
}

impl core::error::Error for PqcmcError {}

/// A certificate authority: its key pair plus its self-descriptor
/// certificate C_CA (whose canonical bytes feed every M_h derivation).
/// Immutable once built, so one context can serve concurrent issuances —
/// provided the caller supplies a distinct seed per issuance, which is
/// not policed here.
pub struct CaContext {
    keypair: McElieceKeyPair,
    cert: ImplicitCert,
    cert_bytes: Vec<u8>,
}

impl CaContext {
    /// Builds the self-descriptor: version 1, all-zero issuer digest
    /// (self-issued root), empty info, and the CA's own public key L in
    /// the reconstruction slot (the field doubles as a verification-key
    /// indicator for the root).
    pub fn new(keypair: McElieceKeyPair) -> Self {
        let cert = ImplicitCert {
            version: 1,
            issuer_digest: [0; 32],
            param_set: String::from(keypair.params().name),
            info: Vec::new(),
            reconstruction: keypair.public_l().clone(),
            validity: None,
        };
        let cert_bytes = encode_cert(&cert);
        CaContext {
            keypair,
            cert,
            cert_bytes,
        }
    }

    pub fn keypair(&self) -> &McElieceKeyPair {
        &self.keypair
    }

    pub fn cert(&self) -> &ImplicitCert {
        &self.cert
    }

    /// Canonical encoding of C_CA.
    pub fn cert_bytes(&self) -> &[u8] {
        &self.cert_bytes
    }
}

/// What an end entity submits: its public key and its identifying info.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IssuanceRequest {
    pub ee_public_l: Gf2Matrix,
    pub info: Vec<u8>,
}

/// What the CA returns: the seed reproducing M_r, and the certificate
/// whose reconstruction value is B.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IssuanceResponse {
    pub seed_r: u64,
    pub cert: ImplicitCert,
}

/// Issues a certificate: M_r from `seed_r`, T = K3⁻¹·K4·K1⁻¹·M_r (the
/// signing map applied to the whole permutation), B = T·L_E. Reusing a
/// seed across issuances reuses M_r; nothing here detects that, so the
/// caller owns seed freshness. The response travels in the clear exactly
/// as modeled — confidentiality of the channel is out of scope.
pub fn ca_issue(
    ca: &CaContext,
    req: &IssuanceRequest,
    seed_r: u64,
) -> Result<IssuanceResponse, PqcmcError> {
    let params = ca.keypair.params();
    let expected = (params.zeta1, params.zeta2);
    if req.ee_public_l.shape() != expected {
        return Err(PqcmcError::Shape {
            what: "end-entity public key",
            expected,
            got: req.ee_public_l.shape(),
        });
    }
    let m_r = permutation_from_seed(seed_r, params.zeta1);
    let t = sign_matrix(&m_r.forward, &ca.keypair)
        .expect("M_r shape fixed by the parameter set");
    let b = t
        .multiply(&req.ee_public_l)
        .expect("T and L_E shapes checked above");
    let cert = ImplicitCert {
        version: 1,
        issuer_digest: cert_digest(&ca.cert_bytes),
        param_set: String::from(params.name),
        info: req.info.clone(),
        reconstruction: b,
        validity: None,
    };
    Ok(IssuanceResponse { seed_r, cert })
}

/// The certificate-bound permutation M_h: both certificate encodings are
/// hashed, the two digests are hashed together, the first 8 octets of
/// that outer digest (big-endian) seed the permutation sampler. The fixed
/// truncation keeps independent implementations bit-compatible.
pub fn derive_mh(cert_e: &[u8], cert_ca: &[u8], zeta1: usize) -> Gf2Matrix {
    derive_mh_pair(cert_e, cert_ca, zeta1).forward
}

fn derive_mh_pair(cert_e: &[u8], cert_ca: &[u8], zeta1: usize) -> PermutationPair {
    let mut outer = Sha256::new();
    outer.update(cert_digest(cert_e));
    outer.update(cert_digest(cert_ca));
    let h: [u8; 32] = outer.finalize().into();
    let seed = u64::from_be_bytes(h[..8].try_into().unwrap());
    permutation_from_seed(seed, zeta1)
}

/// An expanded key pair: the end entity's code and permutation with the
/// scrambler replaced by K1' and the public key by Q. Structurally it is
/// a McEliece key pair whose public key happens to be reconstructable
/// from the certificate, so all signing and decryption machinery applies
/// unchanged.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpandedKeyPair {
    inner: McElieceKeyPair,
}

impl ExpandedKeyPair {
    /// Wraps an already-assembled key pair (e.g. loaded from a key file
    /// written after a previous expansion).
    pub fn from_keypair(inner: McElieceKeyPair) -> Self {
        ExpandedKeyPair { inner }
    }

    pub fn k1_new(&self) -> &Gf2Matrix {
        self.inner.k1()
    }

    pub fn k1_new_inv(&self) -> &Gf2Matrix {
        self.inner.k1_inv()
    }

    pub fn public_q(&self) -> &Gf2Matrix {
        self.inner.public_l()
    }

    pub fn as_keypair(&self) -> &McElieceKeyPair {
        &self.inner
    }
}

/// End-entity key expansion. Decrypts B row-wise back to T', validates
/// the issuer via L_CA·T' == M_r, and derives the expanded pair:
/// K1' = M_h·L_CA·T'·K1_E, K1'⁻¹ = K1_E⁻¹·M_r⁻¹·M_h⁻¹, Q = M_h·L_CA·B.
///
/// A decryption failure is treated as an issuer-validation failure, not a
/// formatting problem: a B of the right shape that fails to decrypt under
/// this key was necessarily not produced for it, which is exactly what
/// the validation step exists to catch (a single tampered bit lands here
/// via the syndrome check).
pub fn ee_expand(
    ee: &McElieceKeyPair,
    resp: &IssuanceResponse,
    ca_cert_bytes: &[u8],
    ca_public_l: &Gf2Matrix,
) -> Result<ExpandedKeyPair, PqcmcError> {
    let params = ee.params();
    let (z1, z2) = (params.zeta1, params.zeta2);
    if ca_public_l.shape() != (z1, z2) {
        return Err(PqcmcError::Shape {
            what: "CA public key",
            expected: (z1, z2),
            got: ca_public_l.shape(),
        });
    }
    let b = &resp.cert.reconstruction;
    if b.shape() != (z2, z2) {
        return Err(PqcmcError::MalformedReconstruction);
    }

    let t_prime = decrypt(b, ee).map_err(|_| PqcmcError::IssuerValidation)?;
    let m_r = permutation_from_seed(resp.seed_r, z1);
    let recovered = ca_public_l
        .multiply(&t_prime)
        .expect("shapes checked above");
    if recovered != m_r.forward {
        return Err(PqcmcError::IssuerValidation);
    }

    let cert_e_bytes = encode_cert(&resp.cert);
    let m_h = derive_mh_pair(&cert_e_bytes, ca_cert_bytes, z1);

    let mh_lca = m_h
        .forward
        .multiply(ca_public_l)
        .expect("shapes checked above");
    let k1_new = mh_lca
        .multiply(&t_prime)
        .and_then(|m| m.multiply(ee.k1()))
        .expect("shapes checked above");
    let k1_new_inv = ee
        .k1_inv()
        .multiply(&m_r.inverse)
        .and_then(|m| m.multiply(&m_h.inverse))
        .expect("square ζ1 factors");
    let q = mh_lca.multiply(b).expect("shapes checked above");

    let inner = McElieceKeyPair::from_parts(
        params,
        k1_new,
        k1_new_inv,
        ee.code().clone(),
        ee.k3().clone(),
        ee.k3_inv().clone(),
        q,
    )
    .expect("expanded shapes are consistent by construction");
    Ok(ExpandedKeyPair { inner })
}

/// Verifier-side reconstruction of the subject's public key from public
/// inputs only: Q = M_h·L_CA·B. No CA or end-entity private material is
/// involved, which is what lets anyone holding the two certificates and
/// the CA public key derive Q.
pub fn reconstruct_public(
    cert_e: &ImplicitCert,
    ca_cert_bytes: &[u8],
    ca_public_l: &Gf2Matrix,
) -> Result<Gf2Matrix, PqcmcError> {
    let z1 = ca_public_l.rows();
    let z2 = ca_public_l.cols();
    let b = &cert_e.reconstruction;
    if b.shape() != (z2, z2) {
        return Err(PqcmcError::MalformedReconstruction);
    }
    let m_h = derive_mh(&encode_cert(cert_e), ca_cert_bytes, z1);
    Ok(m_h
        .multiply(ca_public_l)
        .and_then(|m| m.multiply(b))
        .expect("shapes checked above"))
}

/// Signs under the expanded key: s = K3_E⁻¹·K4_E·K1'⁻¹·m. Verification is
/// plain `verify` against the reconstructed Q.
pub fn expanded_sign(
    m: &Gf2Matrix,
    key: &ExpandedKeyPair,
) -> Result<Gf2Matrix, McElieceError> {
    sign(m, &key.inner)
}

/// Decrypts a ciphertext produced against Q, using K1'⁻¹ in place of the
/// original scrambler inverse.
pub fn expanded_decrypt(
    z: &Gf2Matrix,
    key: &ExpandedKeyPair,
) -> Result<Gf2Matrix, McElieceError> {
    decrypt(z, &key.inner)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mceliece::{encrypt, keygen, verify};
    use crate::params::{HAMMING_7_4, TEST_12X28};
    use crate::randgen::{random_matrix, Prng};

    fn setup(seed_ca: u64, seed_ee: u64) -> (CaContext, McElieceKeyPair) {
        let ca = CaContext::new(keygen(TEST_12X28, seed_ca));
        let ee = keygen(TEST_12X28, seed_ee);
        (ca, ee)
    }

    fn issue(ca: &CaContext, ee: &McElieceKeyPair, seed_r: u64) -> IssuanceResponse {
        let req = IssuanceRequest {
            ee_public_l: ee.public_l().clone(),
            info: b"unit".to_vec(),
        };
        ca_issue(ca, &req, seed_r).unwrap()
    }

    #[test]
    fn issuance_signature_on_mr_verifies_under_ca_key() {
        let (ca, _) = setup(1, 2);
        let m_r = permutation_from_seed(77, 12);
        let t = sign_matrix(&m_r.forward, ca.keypair()).unwrap();
        assert_eq!(t.shape(), (28, 12));
        // L_CA·T recovers the signed permutation exactly.
        assert_eq!(ca.keypair().public_l().multiply(&t).unwrap(), m_r.forward);
    }

    #[test]
    fn reconstruction_value_has_codeword_square_shape() {
        let (ca, ee) = setup(3, 4);
        let resp = issue(&ca, &ee, 50);
        assert_eq!(resp.cert.reconstruction.shape(), (28, 28));
        assert_eq!(resp.cert.param_set, "test-12x28");
    }

    #[test]
    fn issuance_is_deterministic_and_seed_sensitive() {
        let (ca, ee) = setup(5, 6);
        let a = issue(&ca, &ee, 9);
        let b = issue(&ca, &ee, 9);
        let c = issue(&ca, &ee, 10);
        assert_eq!(encode_cert(&a.cert), encode_cert(&b.cert));
        assert_ne!(a.cert.reconstruction, c.cert.reconstruction);
    }

    #[test]
    fn expansion_satisfies_the_key_identities() {
        let (ca, ee) = setup(7, 8);
        let resp = issue(&ca, &ee, 11);
        let expanded =
            ee_expand(&ee, &resp, ca.cert_bytes(), ca.keypair().public_l()).unwrap();

        // The inverse really inverts.
        assert!(expanded
            .k1_new()
            .multiply(expanded.k1_new_inv())
            .unwrap()
            .is_identity());
        // K1'·K2·K3 is exactly the reconstructed public key.
        let q = expanded
            .k1_new()
            .multiply(ee.code().generator())
            .unwrap()
            .multiply(ee.k3())
            .unwrap();
        assert_eq!(&q, expanded.public_q());
        expanded.as_keypair().validate().unwrap();
    }

    #[test]
    fn verifier_reconstruction_matches_the_expanded_key() {
        let (ca, ee) = setup(9, 10);
        let resp = issue(&ca, &ee, 12);
        let expanded =
            ee_expand(&ee, &resp, ca.cert_bytes(), ca.keypair().public_l()).unwrap();
        let q = reconstruct_public(&resp.cert, ca.cert_bytes(), ca.keypair().public_l()).unwrap();
        assert_eq!(&q, expanded.public_q());
        assert_eq!(q.shape(), (12, 28));
    }

    #[test]
    fn expanded_key_signs_and_decrypts() {
        let (ca, ee) = setup(13, 14);
        let resp = issue(&ca, &ee, 15);
        let expanded =
            ee_expand(&ee, &resp, ca.cert_bytes(), ca.keypair().public_l()).unwrap();
        let q = reconstruct_public(&resp.cert, ca.cert_bytes(), ca.keypair().public_l()).unwrap();

        let mut prng = Prng::from_seed(16);
        for _ in 0..20 {
            let m = random_matrix(&mut prng, 12, 1);
            let s = expanded_sign(&m, &expanded).unwrap();
            assert_eq!(verify(&s, &q).unwrap(), m);

            let row = random_matrix(&mut prng, 1, 12);
            let z = encrypt(&row, &q, 0, &mut prng).unwrap();
            assert_eq!(expanded_decrypt(&z, &expanded).unwrap(), row);
        }
    }

    #[test]
    fn protocol_works_over_the_error_correcting_family() {
        let ca = CaContext::new(keygen(HAMMING_7_4, 17));
        let ee = keygen(HAMMING_7_4, 18);
        let resp = issue(&ca, &ee, 19);
        let expanded =
            ee_expand(&ee, &resp, ca.cert_bytes(), ca.keypair().public_l()).unwrap();
        let q = reconstruct_public(&resp.cert, ca.cert_bytes(), ca.keypair().public_l()).unwrap();
        assert_eq!(&q, expanded.public_q());

        let mut prng = Prng::from_seed(20);
        let m = random_matrix(&mut prng, 1, 4);
        // Full-capacity encryption against the reconstructed key.
        let z = encrypt(&m, &q, 1, &mut prng).unwrap();
        assert_eq!(expanded_decrypt(&z, &expanded).unwrap(), m);
    }

    #[test]
    fn tampered_reconstruction_value_fails_issuer_validation() {
        let (ca, ee) = setup(21, 22);
        let resp = issue(&ca, &ee, 23);
        for (r, c) in [(0, 0), (7, 19), (27, 27)] {
            let mut bad = resp.clone();
            let flip = !bad.cert.reconstruction.get(r, c);
            bad.cert.reconstruction.set(r, c, flip);
            assert_eq!(
                ee_expand(&ee, &bad, ca.cert_bytes(), ca.keypair().public_l()).unwrap_err(),
                PqcmcError::IssuerValidation,
                "flip at ({}, {})",
                r,
                c
            );
        }
    }

    #[test]
    fn wrong_issuer_key_fails_validation() {
        let (ca, ee) = setup(24, 25);
        let other_ca = CaContext::new(keygen(TEST_12X28, 26));
        let resp = issue(&ca, &ee, 27);
        assert_eq!(
            ee_expand(&ee, &resp, other_ca.cert_bytes(), other_ca.keypair().public_l())
                .unwrap_err(),
            PqcmcError::IssuerValidation
        );
    }

    #[test]
    fn misshapen_reconstruction_is_malformed_not_invalid() {
        let (ca, ee) = setup(28, 29);
        let mut resp = issue(&ca, &ee, 30);
        resp.cert.reconstruction = Gf2Matrix::zeros(27, 28);
        assert_eq!(
            ee_expand(&ee, &resp, ca.cert_bytes(), ca.keypair().public_l()).unwrap_err(),
            PqcmcError::MalformedReconstruction
        );
        assert_eq!(
            reconstruct_public(&resp.cert, ca.cert_bytes(), ca.keypair().public_l())
                .unwrap_err(),
            PqcmcError::MalformedReconstruction
        );
    }

    #[test]
    fn issuance_rejects_foreign_key_shapes() {
        let (ca, _) = setup(31, 32);
        let req = IssuanceRequest {
            ee_public_l: Gf2Matrix::zeros(12, 27),
            info: Vec::new(),
        };
        assert!(matches!(
            ca_issue(&ca, &req, 1),
            Err(PqcmcError::Shape { what: "end-entity public key", .. })
        ));
    }

    #[test]
    fn mh_derivation_is_deterministic_and_avalanches() {
        let cert_e = b"end entity certificate bytes";
        let cert_ca = b"certificate authority bytes";
        let a = derive_mh(cert_e, cert_ca, 12);
        let b = derive_mh(cert_e, cert_ca, 12);
        assert_eq!(a, b);
        assert!(a.is_permutation());

        let mut distinct = 0;
        for i in 0..100u8 {
            let mut flipped = cert_e.to_vec();
            flipped[(i as usize) % cert_e.len()] ^= 1 << (i % 8);
            if flipped == cert_e {
                continue;
            }
            if derive_mh(&flipped, cert_ca, 12) != a {
                distinct += 1;
            }
        }
        // ζ1=12 has 12! ≈ 2^28 permutations; a collision in a hundred
        // tries would point at a broken seed derivation.
        assert!(distinct >= 99, "only {} of 100 flips changed M_h", distinct);
    }
}
