//! On-disk formats. Three file kinds exist:
//!
//! - **Key containers** (`PQCK`): a private key pair — parameter-set
//!   name, a role byte, and the eight matrices — in the same strict TLV
//!   style as certificates (1-octet tag, 4-octet big-endian length,
//!   ascending tag order, no unknown or duplicate tags).
//! - **Issuance responses** (`PQCR`): the CA's reply — the 8-octet
//!   big-endian seed reproducing M_r, followed by the certificate's
//!   canonical bytes.
//! - **Bare matrices**: public keys, messages, ciphertexts, and
//!   signatures are single matrices in their canonical `GF2M` encoding
//!   with nothing wrapped around them, so they can be diffed, hashed, and
//!   fed straight back into the protocol functions.
//!
//! Certificates on disk are exactly their canonical encoding (`PQCC`...),
//! written and read with no further framing; `read_cert_or_response`
//! accepts either a certificate or a response file and hands back the
//! certificate, sniffing the magic.
//!
//! Key containers are trusted local state: loading re-checks shapes and
//! the code-defining identities (cheap at protocol sizes), but does not
//! re-verify scrambler/permutation inverses — `validate()` exists for
//! callers who want to pay for that.

use std::fmt;
use std::fs;
use std::io;
use std::path::Path;

use pqcmc_core::certs::{decode_cert, encode_cert, CertDecodeError, ImplicitCert};
use pqcmc_core::gf2::{Gf2DecodeError, Gf2Matrix};
use pqcmc_core::mceliece::{LinearCode, McElieceError, McElieceKeyPair};
use pqcmc_core::params::by_name;
use pqcmc_core::pqcmc::IssuanceResponse;

/// Magic prefix of key-container files.
pub const KEY_MAGIC: &[u8; 4] = b"PQCK";
/// Magic prefix of issuance-response files.
pub const RESPONSE_MAGIC: &[u8; 4] = b"PQCR";
/// Magic prefix of certificate files (the canonical certificate bytes).
pub const CERT_MAGIC: &[u8; 4] = b"PQCC";

const TAG_PARAM_SET: u8 = 0x01;
const TAG_ROLE: u8 = 0x02;
const TAG_K1: u8 = 0x10;
const TAG_K1_INV: u8 = 0x11;
const TAG_K2: u8 = 0x12;
const TAG_K3: u8 = 0x13;
const TAG_K3_INV: u8 = 0x14;
const TAG_K4: u8 = 0x15;
const TAG_K5: u8 = 0x16;
const TAG_PUBLIC: u8 = 0x17;

/// What a key container holds: a key pair as generated, or one produced
/// by certificate expansion (scrambler slot K1', public slot Q). The two
/// are structurally interchangeable; the role records provenance for
/// tooling and audits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KeyRole {
    Standard,
    Expanded,
}

impl KeyRole {
    fn to_byte(self) -> u8 {
        match self {
            KeyRole::Standard => 0x01,
            KeyRole::Expanded => 0x02,
        }
    }

    fn from_byte(b: u8) -> Option<Self> {
        match b {
            0x01 => Some(KeyRole::Standard),
            0x02 => Some(KeyRole::Expanded),
            _ => None,
        }
    }
}

/// Everything that can go wrong reading or writing the formats above.
/// `Io` wraps the failing path so the one-line CLI error names the file.
#[derive(Debug)]
pub enum FileError {
    Io {
        path: std::path::PathBuf,
        source: io::Error,
    },
    BadMagic {
        what: &'static str,
    },
    Truncated,
    TrailingData,
    UnknownBlock(u8),
    DuplicateBlock(u8),
    MisorderedBlock(u8),
    MissingBlock(u8),
    UnknownParamSet(String),
    BadRole(u8),
    Matrix(Gf2DecodeError),
    Cert(CertDecodeError),
    Inconsistent(McElieceError),
}

impl fmt::Display for FileError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FileError::Io { path, source } => write!(f, "{}: {}", path.display(), source),
            FileError::BadMagic { what } => write!(f, "not a {} file (bad magic)", what),
            FileError::Truncated => f.write_str("unexpected end of file"),
            FileError::TrailingData => f.write_str("trailing bytes after the last block"),
            FileError::UnknownBlock(t) => write!(f, "unknown block tag 0x{:02x}", t),
            FileError::DuplicateBlock(t) => write!(f, "duplicate block tag 0x{:02x}", t),
            FileError::MisorderedBlock(t) => write!(f, "block tag 0x{:02x} out of order", t),
            FileError::MissingBlock(t) => write!(f, "missing block tag 0x{:02x}", t),
            FileError::UnknownParamSet(name) => write!(f, "unknown parameter set {:?}", name),
            FileError::BadRole(b) => write!(f, "unknown key role 0x{:02x}", b),
            FileError::Matrix(e) => write!(f, "matrix block: {}", e),
            FileError::Cert(e) => write!(f, "certificate: {}", e),
            FileError::Inconsistent(e) => write!(f, "inconsistent key material: {}", e),
        }
    }
}

impl std::error::Error for FileError {}

impl From<Gf2DecodeError> for FileError {
    fn from(e: Gf2DecodeError) -> Self {
        FileError::Matrix(e)
    }
}

impl From<CertDecodeError> for FileError {
    fn from(e: CertDecodeError) -> Self {
        FileError::Cert(e)
    }
}

impl From<McElieceError> for FileError {
    fn from(e: McElieceError) -> Self {
        FileError::Inconsistent(e)
    }
}

/// `fs::read` with the path attached to the error.
pub fn read_bytes(path: &Path) -> Result<Vec<u8>, FileError> {
    fs::read(path).map_err(|source| FileError::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// `fs::write` with the path attached to the error.
pub fn write_bytes(path: &Path, bytes: &[u8]) -> Result<(), FileError> {
    fs::write(path, bytes).map_err(|source| FileError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn put_block(out: &mut Vec<u8>, tag: u8, value: &[u8]) {
    out.push(tag);
    out.extend_from_slice(&(value.len() as u32).to_be_bytes());
    out.extend_from_slice(value);
}

/// Serializes a key pair into the `PQCK` container format.
pub fn encode_key_container(key: &McElieceKeyPair, role: KeyRole) -> Vec<u8> {
    let mut out = Vec::new();
    out.extend_from_slice(KEY_MAGIC);
    put_block(&mut out, TAG_PARAM_SET, key.params().name.as_bytes());
    put_block(&mut out, TAG_ROLE, &[role.to_byte()]);
    put_block(&mut out, TAG_K1, &key.k1().to_bytes());
    put_block(&mut out, TAG_K1_INV, &key.k1_inv().to_bytes());
    put_block(&mut out, TAG_K2, &key.code().generator().to_bytes());
    put_block(&mut out, TAG_K3, &key.k3().to_bytes());
    put_block(&mut out, TAG_K3_INV, &key.k3_inv().to_bytes());
    put_block(&mut out, TAG_K4, &key.code().decoder().to_bytes());
    put_block(&mut out, TAG_K5, &key.code().parity_check().to_bytes());
    put_block(&mut out, TAG_PUBLIC, &key.public_l().to_bytes());
    out
}

/// Parses a `PQCK` container, re-validating shapes and the code-defining
/// identities.
pub fn decode_key_container(bytes: &[u8]) -> Result<(McElieceKeyPair, KeyRole), FileError> {
    if bytes.len() < 4 || &bytes[..4] != KEY_MAGIC {
        return Err(FileError::BadMagic { what: "key container" });
    }
    let mut rest = &bytes[4..];
    let mut last_tag = 0u8;
    let mut param_name: Option<String> = None;
    let mut role: Option<KeyRole> = None;
    let mut matrices: [Option<Gf2Matrix>; 8] = Default::default();

    while !rest.is_empty() {
        if rest.len() < 5 {
            return Err(FileError::Truncated);
        }
        let tag = rest[0];
        let len = u32::from_be_bytes(rest[1..5].try_into().unwrap()) as usize;
        rest = &rest[5..];
        if rest.len() < len {
            return Err(FileError::Truncated);
        }
        let (value, tail) = rest.split_at(len);
        rest = tail;
        if tag == last_tag {
            return Err(FileError::DuplicateBlock(tag));
        }
        if tag < last_tag {
            return Err(FileError::MisorderedBlock(tag));
        }
        last_tag = tag;
        match tag {
            TAG_PARAM_SET => {
                let name = String::from_utf8(value.to_vec())
                    .map_err(|_| FileError::UnknownParamSet(String::from("<not UTF-8>")))?;
                param_name = Some(name);
            }
            TAG_ROLE => {
                if value.len() != 1 {
                    return Err(FileError::BadRole(0));
                }
                role = Some(KeyRole::from_byte(value[0]).ok_or(FileError::BadRole(value[0]))?);
            }
            TAG_K1 | TAG_K1_INV | TAG_K2 | TAG_K3 | TAG_K3_INV | TAG_K4 | TAG_K5 | TAG_PUBLIC => {
                matrices[(tag - TAG_K1) as usize] = Some(Gf2Matrix::from_bytes(value)?);
            }
            other => return Err(FileError::UnknownBlock(other)),
        }
    }

    let param_name = param_name.ok_or(FileError::MissingBlock(TAG_PARAM_SET))?;
    let role = role.ok_or(FileError::MissingBlock(TAG_ROLE))?;
    let params =
        by_name(&param_name).ok_or_else(|| FileError::UnknownParamSet(param_name.clone()))?;
    let mut take = |tag: u8| {
        matrices[(tag - TAG_K1) as usize]
            .take()
            .ok_or(FileError::MissingBlock(tag))
    };
    let k1 = take(TAG_K1)?;
    let k1_inv = take(TAG_K1_INV)?;
    let k2 = take(TAG_K2)?;
    let k3 = take(TAG_K3)?;
    let k3_inv = take(TAG_K3_INV)?;
    let k4 = take(TAG_K4)?;
    let k5 = take(TAG_K5)?;
    let public = take(TAG_PUBLIC)?;

    let code = LinearCode::from_parts(k2, k4, k5, params.t)?;
    let key = McElieceKeyPair::from_parts(params, k1, k1_inv, code, k3, k3_inv, public)?;
    Ok((key, role))
}

pub fn write_key_container(path: &Path, key: &McElieceKeyPair, role: KeyRole) -> Result<(), FileError> {
    write_bytes(path, &encode_key_container(key, role))
}

pub fn read_key_container(path: &Path) -> Result<(McElieceKeyPair, KeyRole), FileError> {
    decode_key_container(&read_bytes(path)?)
}

/// Writes a bare matrix in its canonical encoding.
pub fn write_matrix(path: &Path, m: &Gf2Matrix) -> Result<(), FileError> {
    write_bytes(path, &m.to_bytes())
}

/// Reads a bare matrix file.
pub fn read_matrix(path: &Path) -> Result<Gf2Matrix, FileError> {
    Ok(Gf2Matrix::from_bytes(&read_bytes(path)?)?)
}

/// Serializes an issuance response: magic, seed, certificate bytes.
pub fn encode_response(resp: &IssuanceResponse) -> Vec<u8> {
    let mut out = Vec::new();
    out.extend_from_slice(RESPONSE_MAGIC);
    out.extend_from_slice(&resp.seed_r.to_be_bytes());
    out.extend_from_slice(&encode_cert(&resp.cert));
    out
}

/// Parses an issuance-response file.
pub fn decode_response(bytes: &[u8]) -> Result<IssuanceResponse, FileError> {
    if bytes.len() < 4 || &bytes[..4] != RESPONSE_MAGIC {
        return Err(FileError::BadMagic { what: "response" });
    }
    if bytes.len() < 12 {
        return Err(FileError::Truncated);
    }
    let seed_r = u64::from_be_bytes(bytes[4..12].try_into().unwrap());
    let cert = decode_cert(&bytes[12..])?;
    Ok(IssuanceResponse { seed_r, cert })
}

pub fn write_response(path: &Path, resp: &IssuanceResponse) -> Result<(), FileError> {
    write_bytes(path, &encode_response(resp))
}

pub fn read_response(path: &Path) -> Result<IssuanceResponse, FileError> {
    decode_response(&read_bytes(path)?)
}

/// Reads a certificate from either a bare certificate file (`PQCC`) or an
/// issuance-response file (`PQCR`), dispatching on the magic. Verifiers
/// are routinely handed whichever of the two the subject kept.
pub fn read_cert_or_response(path: &Path) -> Result<ImplicitCert, FileError> {
    let bytes = read_bytes(path)?;
    if bytes.len() >= 4 && &bytes[..4] == RESPONSE_MAGIC {
        Ok(decode_response(&bytes)?.cert)
    } else if bytes.len() >= 4 && &bytes[..4] == CERT_MAGIC {
        Ok(decode_cert(&bytes)?)
    } else {
        Err(FileError::BadMagic { what: "certificate or issuance-response" })
    }
}
