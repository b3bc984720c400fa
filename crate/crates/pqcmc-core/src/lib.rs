//! McEliece-style implicit certificates over GF(2).
//!
//! A certificate authority signs a random permutation matrix with its
//! code-based key and masks the result with the subject's public
//! scrambler; the subject unmasks it, validates the issuer, and folds the
//! reconstruction value into a fresh key pair whose public half anyone
//! can recompute from the certificate alone — no explicit signature
//! travels with the certificate. The building blocks live in their own
//! modules:
//!
//! - [`gf2`]: dense bit-matrices with multiply, inversion, rank, and a
//!   canonical byte encoding;
//! - [`randgen`]: a seeded PRNG plus samplers for permutation and
//!   invertible matrices;
//! - [`params`]: named (ζ1, ζ2) parameter presets;
//! - [`mceliece`]: code-based key pairs and the encrypt / decrypt /
//!   sign / verify primitives;
//! - [`certs`]: the certificate wire format and key-length accounting;
//! - [`pqcmc`]: the issuance and expansion protocol itself;
//! - [`ecqv`]: a deliberately tiny elliptic-curve baseline for
//!   comparison.
//!
//! The crate is `no_std` (with `alloc`); everything that needs files or
//! clocks lives in the companion CLI crate.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod certs;
pub mod ecqv;
pub mod gf2;
pub mod mceliece;
pub mod params;
pub mod pqcmc;
pub mod randgen;

pub use certs::{cert_digest, decode_cert, encode_cert, ImplicitCert, LengthRow};
pub use gf2::Gf2Matrix;
pub use mceliece::{LinearCode, McElieceKeyPair};
pub use params::{CodeFamily, ParameterSet};
pub use pqcmc::{
    ca_issue, ee_expand, reconstruct_public, CaContext, ExpandedKeyPair, IssuanceRequest,
    IssuanceResponse, PqcmcError,
};
pub use randgen::Prng;
