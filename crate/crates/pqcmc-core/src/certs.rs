//! Implicit certificates: canonical TLV encoding, digests, and the
//! certificate-size arithmetic.
//!
//! An implicit certificate carries a reconstruction value instead of a
//! public key plus a CA signature; the subject's public key is derived by
//! whoever validates the certificate. Accordingly the codec has no
//! signature field at all — that absence is a structural property tests
//! rely on, not an omission.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use sha2::{Digest, Sha256};

use crate::gf2::{Gf2DecodeError, Gf2Matrix};

/// Magic prefix of an encoded certificate.
pub const CERT_MAGIC: [u8; 4] = *b"PQCC";

/// The only certificate type this codec emits.
pub const CERT_TYPE_IMPLICIT: u8 = 0x01;

const TAG_VERSION: u8 = 0x01;
const TAG_CERT_TYPE: u8 = 0x02;
const TAG_ISSUER_DIGEST: u8 = 0x03;
const TAG_PARAM_SET: u8 = 0x04;
const TAG_INFO: u8 = 0x05;
const TAG_RECONSTRUCTION: u8 = 0x06;
const TAG_VALIDITY: u8 = 0x07;

/// Errors from parsing an encoded certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CertDecodeError {
    /// Input does not start with `PQCC`.
    BadMagic,
    /// Input ends inside a header or value.
    Truncated,
    /// A tag outside the defined set.
    UnknownTag(u8),
    /// The same tag twice.
    DuplicateTag(u8),
    /// A known tag out of canonical order.
    MisorderedTag(u8),
    /// A required field never appeared.
    MissingField(u8),
    /// A fixed-width field with the wrong length.
    BadLength { tag: u8, len: usize },
    /// Certificate type other than implicit.
    BadCertType(u8),
    /// Parameter-set name is not valid UTF-8.
    BadParamName,
    /// The embedded reconstruction matrix failed to parse.
    Matrix(Gf2DecodeError),
}

impl fmt::Display for CertDecodeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertDecodeError::BadMagic => write!(f, "bad certificate magic"),
            CertDecodeError::Truncated => write!(f, "truncated certificate"),
            CertDecodeError::UnknownTag(t) => write!(f, "unknown certificate tag 0x{:02x}", t),
            CertDecodeError::DuplicateTag(t) => write!(f, "duplicate certificate tag 0x{:02x}", t),
            CertDecodeError::MisorderedTag(t) => {
                write!(f, "certificate tag 0x{:02x} out of order", t)
            }
            CertDecodeError::MissingField(t) => {
                write!(f, "missing certificate field 0x{:02x}", t)
            }
            CertDecodeError::BadLength { tag, len } => {
                write!(f, "field 0x{:02x} has invalid length {}", tag, len)
            }
            CertDecodeError::BadCertType(t) => write!(f, "unsupported certificate type {}", t),
            CertDecodeError::BadParamName => write!(f, "parameter-set name is not UTF-8"),
            CertDecodeError::Matrix(e) => write!(f, "reconstruction value: {}", e),
        }
    }
}

impl core::error::Error for CertDecodeError {}

impl From<Gf2DecodeError> for CertDecodeError {
    fn from(e: Gf2DecodeError) -> Self {
        CertDecodeError::Matrix(e)
    }
}

/// An implicit certificate. `reconstruction` is the ζ2×ζ2 value B for an
/// end-entity certificate; the CA's self-descriptor stores its public key
/// L in the same slot (the verification-key-indicator reading of the
/// field).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ImplicitCert {
    pub version: u32,
    pub issuer_digest: [u8; 32],
    pub param_set: String,
    pub info: Vec<u8>,
    pub reconstruction: Gf2Matrix,
    /// Optional (start, end) validity timestamps, seconds since epoch.
    pub validity: Option<(u64, u64)>,
}

fn put_tlv(out: &mut Vec<u8>, tag: u8, value: &[u8]) {
    out.push(tag);
    out.extend_from_slice(&(value.len() as u32).to_be_bytes());
    out.extend_from_slice(value);
}

/// Canonical encoding: magic, then each field as (1-octet tag, 4-octet
/// big-endian length, value) in ascending tag order. Equal field values
/// always produce byte-identical encodings.
pub fn encode_cert(cert: &ImplicitCert) -> Vec<u8> {
    let matrix_bytes = cert.reconstruction.to_bytes();
    let mut out = Vec::with_capacity(64 + cert.info.len() + matrix_bytes.len());
    out.extend_from_slice(&CERT_MAGIC);
    put_tlv(&mut out, TAG_VERSION, &cert.version.to_be_bytes());
    put_tlv(&mut out, TAG_CERT_TYPE, &[CERT_TYPE_IMPLICIT]);
    put_tlv(&mut out, TAG_ISSUER_DIGEST, &cert.issuer_digest);
    put_tlv(&mut out, TAG_PARAM_SET, cert.param_set.as_bytes());
    put_tlv(&mut out, TAG_INFO, &cert.info);
    put_tlv(&mut out, TAG_RECONSTRUCTION, &matrix_bytes);
    if let Some((start, end)) = cert.validity {
        let mut v = [0u8; 16];
        v[..8].copy_from_slice(&start.to_be_bytes());
        v[8..].copy_from_slice(&end.to_be_bytes());
        put_tlv(&mut out, TAG_VALIDITY, &v);
    }
    out
}

/// Parses a canonical encoding. Strict: unknown, duplicate, or misordered
/// tags and any truncation are rejected with distinct errors.
pub fn decode_cert(bytes: &[u8]) -> Result<ImplicitCert, CertDecodeError> {
    if bytes.len() < 4 {
        return Err(CertDecodeError::Truncated);
    }
    if bytes[..4] != CERT_MAGIC {
        return Err(CertDecodeError::BadMagic);
    }

    let mut version = None;
    let mut cert_type = None;
    let mut issuer_digest = None;
    let mut param_set = None;
    let mut info = None;
    let mut reconstruction = None;
    let mut validity = None;

    let mut pos = 4;
    let mut prev_tag = 0u8;
    while pos < bytes.len() {
        if bytes.len() - pos < 5 {
            return Err(CertDecodeError::Truncated);
        }
        let tag = bytes[pos];
        let len = u32::from_be_bytes(bytes[pos + 1..pos + 5].try_into().unwrap()) as usize;
        pos += 5;
        if bytes.len() - pos < len {
            return Err(CertDecodeError::Truncated);
        }
        let value = &bytes[pos..pos + len];
        pos += len;

        if !(TAG_VERSION..=TAG_VALIDITY).contains(&tag) {
            return Err(CertDecodeError::UnknownTag(tag));
        }
        if tag == prev_tag {
            return Err(CertDecodeError::DuplicateTag(tag));
        }
        if tag < prev_tag {
            return Err(CertDecodeError::MisorderedTag(tag));
        }
        prev_tag = tag;

        match tag {
            TAG_VERSION => {
                let v: [u8; 4] = value
                    .try_into()
                    .map_err(|_| CertDecodeError::BadLength { tag, len })?;
                version = Some(u32::from_be_bytes(v));
            }
            TAG_CERT_TYPE => {
                if len != 1 {
                    return Err(CertDecodeError::BadLength { tag, len });
                }
                if value[0] != CERT_TYPE_IMPLICIT {
                    return Err(CertDecodeError::BadCertType(value[0]));
                }
                cert_type = Some(value[0]);
            }
            TAG_ISSUER_DIGEST => {
                let d: [u8; 32] = value
                    .try_into()
                    .map_err(|_| CertDecodeError::BadLength { tag, len })?;
                issuer_digest = Some(d);
            }
            TAG_PARAM_SET => {
                let name =
                    core::str::from_utf8(value).map_err(|_| CertDecodeError::BadParamName)?;
                param_set = Some(String::from(name));
            }
            TAG_INFO => info = Some(value.to_vec()),
            TAG_RECONSTRUCTION => reconstruction = Some(Gf2Matrix::from_bytes(value)?),
            TAG_VALIDITY => {
                if len != 16 {
                    return Err(CertDecodeError::BadLength { tag, len });
                }
                let start = u64::from_be_bytes(value[..8].try_into().unwrap());
                let end = u64::from_be_bytes(value[8..].try_into().unwrap());
                validity = Some((start, end));
            }
            _ => unreachable!("tag range checked above"),
        }
    }

    let version = version.ok_or(CertDecodeError::MissingField(TAG_VERSION))?;
    cert_type.ok_or(CertDecodeError::MissingField(TAG_CERT_TYPE))?;
    Ok(ImplicitCert {
        version,
        issuer_digest: issuer_digest.ok_or(CertDecodeError::MissingField(TAG_ISSUER_DIGEST))?,
        param_set: param_set.ok_or(CertDecodeError::MissingField(TAG_PARAM_SET))?,
        info: info.ok_or(CertDecodeError::MissingField(TAG_INFO))?,
        reconstruction: reconstruction.ok_or(CertDecodeError::MissingField(TAG_RECONSTRUCTION))?,
        validity,
    })
}

/// SHA-256 of a canonical certificate encoding (or any octet sequence —
/// the empty input hashes to the standard empty-message constant).
pub fn cert_digest(bytes: &[u8]) -> [u8; 32] {
    let mut h = Sha256::new();
    h.update(bytes);
    h.finalize().into()
}

/// Raw and rounded sizes for one (ζ1, ζ2) pair: public key L (ζ1·ζ2
/// bits), reconstruction value B (ζ2² bits), signature s (ζ2 bits).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LengthRow {
    pub zeta1: u64,
    pub zeta2: u64,
    pub l_bits: u64,
    pub b_bits: u64,
    pub s_bits: u64,
    /// L in KB (1 KB = 1024 bytes), rounded half-up.
    pub l_kb: u64,
    /// B in KB, rounded half-up.
    pub b_kb: u64,
    /// s in bytes, rounded half-up.
    pub s_bytes: u64,
}

/// bits → KB (1024 bytes), half-up on the exact rational bits/8192.
fn kb_half_up(bits: u64) -> u64 {
    (bits + 4096) / 8192
}

/// bits → bytes, half-up on the exact rational bits/8.
fn bytes_half_up(bits: u64) -> u64 {
    (bits + 4) / 8
}

/// Sizes are raw payload bit counts — no per-row padding, no container
/// headers; serialized-file sizes are a different (larger) number. The
/// half-up rounding is the one rule consistent with every published row
/// (65.5 → 66, 212.75 → 213, 397.25 → 397, 1232.93 → 1233).
pub fn length_row(zeta1: u64, zeta2: u64) -> LengthRow {
    let l_bits = zeta1 * zeta2;
    let b_bits = zeta2 * zeta2;
    let s_bits = zeta2;
    LengthRow {
        zeta1,
        zeta2,
        l_bits,
        b_bits,
        s_bits,
        l_kb: kb_half_up(l_bits),
        b_kb: kb_half_up(b_bits),
        s_bytes: bytes_half_up(s_bits),
    }
}

impl LengthRow {
    pub fn l_bytes_exact(&self) -> f64 {
        self.l_bits as f64 / 8.0
    }

    pub fn b_bytes_exact(&self) -> f64 {
        self.b_bits as f64 / 8.0
    }

    pub fn s_bytes_exact(&self) -> f64 {
        self.s_bits as f64 / 8.0
    }
}

/// One row per (ζ1, ζ2) pair, in input order.
pub fn length_report(dims: &[(u64, u64)]) -> Vec<LengthRow> {
    dims.iter().map(|&(z1, z2)| length_row(z1, z2)).collect()
}

/// The fixed NIST P-256 size arithmetic used in the narrative comparison
/// of explicit and implicit certificates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EccCertArithmetic {
    pub coordinate_bytes: u32,
    pub uncompressed_point_bytes: u32,
    pub compressed_point_bytes: u32,
    pub compression_savings_bytes: u32,
    /// ECDSA signature: one compressed point plus one scalar.
    pub signature_bytes: u32,
    /// Explicit certificate key material: VKI (compressed point) + signature.
    pub explicit_cert_key_bytes: u32,
    /// Implicit certificate key material: VKI only.
    pub implicit_cert_key_bytes: u32,
    pub savings_bytes: u32,
}

/// Derives the comparison constants from the 32-byte coordinate size:
/// points are 65 bytes uncompressed and 33 compressed, a signature is
/// 65 bytes, so an explicit certificate spends 98 bytes where an implicit
/// one spends 33, saving 65.
pub const fn ecc_cert_savings() -> EccCertArithmetic {
    const COORD: u32 = 32;
    let uncompressed = 1 + 2 * COORD;
    let compressed = 1 + COORD;
    let signature = compressed + COORD;
    EccCertArithmetic {
        coordinate_bytes: COORD,
        uncompressed_point_bytes: uncompressed,
        compressed_point_bytes: compressed,
        compression_savings_bytes: uncompressed - compressed,
        signature_bytes: signature,
        explicit_cert_key_bytes: compressed + signature,
        implicit_cert_key_bytes: compressed,
        savings_bytes: (compressed + signature) - compressed,
    }
}
