//! Toy-scale elliptic-curve baseline: ECDSA and ECQV implicit
//! certificates over a 17-element field.
//!
//! This exists for conceptual parity with the matrix-based scheme — the
//! ECQV expansion identity q·G == Q is the elliptic-curve shape of the
//! same implicit-certificate idea — and for nothing else. The curve
//! y² = x³ + 2x + 2 over GF(17) has 19 points, every derived fact about
//! it is brute-forced in the tests, and the whole module is insecure by
//! construction. Do not point production traffic at it.

use alloc::vec::Vec;
use core::fmt;

use sha2::{Digest, Sha256};

/// Short Weierstrass curve y² = x³ + ax + b over GF(p), base point g of
/// prime order n.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CurveParams {
    pub p: u64,
    pub a: u64,
    pub b: u64,
    pub gx: u64,
    pub gy: u64,
    pub n: u64,
}

/// The one curve this module speaks: p=17, a=2, b=2, G=(5,1), |G|=19.
pub const TOY_CURVE: CurveParams = CurveParams {
    p: 17,
    a: 2,
    b: 2,
    gx: 5,
    gy: 1,
    n: 19,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EcPoint {
    Infinity,
    Affine { x: u64, y: u64 },
}

impl EcPoint {
    pub fn affine(x: u64, y: u64) -> Self {
        EcPoint::Affine { x, y }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, EcPoint::Infinity)
    }
}

impl fmt::Display for EcPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EcPoint::Infinity => write!(f, "infinity"),
            EcPoint::Affine { x, y } => write!(f, "({}, {})", x, y),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EcError {
    /// An input point does not satisfy the curve equation.
    OffCurve,
    /// The point at infinity has no compressed form.
    NotCompressible,
    /// No curve point exists at the given x with the given parity.
    NonResidue,
    /// This nonce produces a degenerate signature; retry with another.
    NonceUnusable,
    /// An intermediate point degenerated to infinity; retry with another
    /// nonce.
    DegeneratePoint,
}

impl fmt::Display for EcError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let msg = match self {
            EcError::OffCurve => "point is not on the curve",
            EcError::NotCompressible => "the point at infinity cannot be compressed",
            EcError::NonResidue => "no curve point at this x-coordinate and parity",
            EcError::NonceUnusable => "nonce yields a degenerate signature, retry",
            EcError::DegeneratePoint => "operation degenerated to infinity, retry",
        };
        f.write_str(msg)
    }
}

impl core::error::Error for EcError {}

const P: u64 = TOY_CURVE.p;
const N: u64 = TOY_CURVE.n;

fn fadd(a: u64, b: u64) -> u64 {
    (a + b) % P
}

fn fsub(a: u64, b: u64) -> u64 {
    (a + P - b % P) % P
}

fn fmul(a: u64, b: u64) -> u64 {
    (a * b) % P
}

fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

/// Inverse modulo a prime, via Fermat. None for zero.
fn mod_inv(x: u64, m: u64) -> Option<u64> {
    if x.is_multiple_of(m) {
        None
    } else {
        Some(mod_pow(x, m - 2, m))
    }
}

/// Whether a point satisfies y² = x³ + ax + b (infinity counts as on the
/// curve).
pub fn on_curve(pt: EcPoint) -> bool {
    match pt {
        EcPoint::Infinity => true,
        EcPoint::Affine { x, y } => {
            x < P && y < P && fmul(y, y) == fadd(fmul(fmul(x, x), x), fadd(fmul(TOY_CURVE.a, x), TOY_CURVE.b))
        }
    }
}

fn require_on_curve(pt: EcPoint) -> Result<(), EcError> {
    if on_curve(pt) {
        Ok(())
    } else {
        Err(EcError::OffCurve)
    }
}

fn add_unchecked(p1: EcPoint, p2: EcPoint) -> EcPoint {
    let (x1, y1, x2, y2) = match (p1, p2) {
        (EcPoint::Infinity, q) => return q,
        (q, EcPoint::Infinity) => return q,
        (EcPoint::Affine { x: x1, y: y1 }, EcPoint::Affine { x: x2, y: y2 }) => (x1, y1, x2, y2),
    };
    if x1 == x2 && y1 == fsub(0, y2) {
        return EcPoint::Infinity;
    }
    let lambda = if x1 == x2 && y1 == y2 {
        // Tangent slope (3x² + a) / 2y; the y = 0 case fell into the
        // negation branch above.
        let num = fadd(fmul(3, fmul(x1, x1)), TOY_CURVE.a);
        fmul(num, mod_inv(fmul(2, y1), P).expect("y != 0 here"))
    } else {
        fmul(fsub(y2, y1), mod_inv(fsub(x2, x1), P).expect("x1 != x2 here"))
    };
    let x3 = fsub(fsub(fmul(lambda, lambda), x1), x2);
    let y3 = fsub(fmul(lambda, fsub(x1, x3)), y1);
    EcPoint::Affine { x: x3, y: y3 }
}

/// Group addition. Both inputs must lie on the curve.
pub fn point_add(p1: EcPoint, p2: EcPoint) -> Result<EcPoint, EcError> {
    require_on_curve(p1)?;
    require_on_curve(p2)?;
    Ok(add_unchecked(p1, p2))
}

/// Scalar multiple by double-and-add. `scalar_mul(0, pt)` is infinity.
pub fn scalar_mul(k: u64, pt: EcPoint) -> Result<EcPoint, EcError> {
    require_on_curve(pt)?;
    let mut acc = EcPoint::Infinity;
    let mut addend = pt;
    let mut k = k;
    while k > 0 {
        if k & 1 == 1 {
            acc = add_unchecked(acc, addend);
        }
        addend = add_unchecked(addend, addend);
        k >>= 1;
    }
    Ok(acc)
}

/// The base point G.
pub fn generator() -> EcPoint {
    EcPoint::Affine {
        x: TOY_CURVE.gx,
        y: TOY_CURVE.gy,
    }
}

/// Compressed form: a parity tag (0x02 even y, 0x03 odd y) plus x.
pub fn compress(pt: EcPoint) -> Result<(u8, u64), EcError> {
    require_on_curve(pt)?;
    match pt {
        EcPoint::Infinity => Err(EcError::NotCompressible),
        EcPoint::Affine { x, y } => Ok((0x02 | (y & 1) as u8, x)),
    }
}

/// Recovers the point with the tagged parity at x, solving the curve
/// equation by exhaustive square root (the field has 17 elements).
pub fn decompress(tag: u8, x: u64) -> Result<EcPoint, EcError> {
    if tag != 0x02 && tag != 0x03 {
        return Err(EcError::NonResidue);
    }
    if x >= P {
        return Err(EcError::OffCurve);
    }
    let rhs = fadd(fmul(fmul(x, x), x), fadd(fmul(TOY_CURVE.a, x), TOY_CURVE.b));
    let want_odd = tag == 0x03;
    for y in 0..P {
        if fmul(y, y) == rhs && (y & 1 == 1) == want_odd {
            return Ok(EcPoint::Affine { x, y });
        }
    }
    Err(EcError::NonResidue)
}

/// ECDSA signature carrying the full nonce point R alongside s.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EcdsaSignature {
    pub r_point: EcPoint,
    pub s: u64,
}

/// Signs a digest scalar h with private key `priv_a` and nonce `k`:
/// R = k·G, s = (h + a·x_R) / k (mod n). Degenerate nonces (k ≡ 0,
/// x_R ≡ 0, or s = 0) are reported for retry rather than papered over.
pub fn ecdsa_sign(h: u64, priv_a: u64, k: u64) -> Result<EcdsaSignature, EcError> {
    let k = k % N;
    let Some(k_inv) = mod_inv(k, N) else {
        return Err(EcError::NonceUnusable);
    };
    let r_point = scalar_mul(k, generator()).expect("G is on the curve");
    let EcPoint::Affine { x, .. } = r_point else {
        return Err(EcError::NonceUnusable);
    };
    let x_r = x % N;
    if x_r == 0 {
        return Err(EcError::NonceUnusable);
    }
    let s = (h % N + priv_a % N * x_r) % N * k_inv % N;
    if s == 0 {
        return Err(EcError::NonceUnusable);
    }
    Ok(EcdsaSignature { r_point, s })
}

/// Verifies by recomputing the nonce point: w = s⁻¹, u = w·h, v = w·x_R,
/// and the signature is accepted iff u·G + v·A equals R.
pub fn ecdsa_verify(h: u64, sig: &EcdsaSignature, pub_a: EcPoint) -> bool {
    if !on_curve(pub_a) || !on_curve(sig.r_point) {
        return false;
    }
    let EcPoint::Affine { x, .. } = sig.r_point else {
        return false;
    };
    let x_r = x % N;
    let Some(w) = mod_inv(sig.s, N) else {
        return false;
    };
    let u = w * (h % N) % N;
    let v = w * x_r % N;
    let z = add_unchecked(
        scalar_mul(u, generator()).expect("G is on the curve"),
        scalar_mul(v, pub_a).expect("validated above"),
    );
    z == sig.r_point
}

/// An ECQV issuance: the encoded certificate (reconstruction point plus
/// subject info), the reconstruction point P itself, and the private-key
/// reconstruction scalar b.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EcqvIssuance {
    pub cert_bytes: Vec<u8>,
    pub recon_point: EcPoint,
    pub key_recon: u64,
}

/// SHA-256 of the certificate bytes reduced modulo the group order —
/// toy-scale on purpose: a 19-element hash range is exactly as secure as
/// the 19-point curve it feeds.
pub fn hash_mod_n(bytes: &[u8]) -> u64 {
    let digest: [u8; 32] = Sha256::digest(bytes).into();
    digest.iter().fold(0u64, |acc, &b| (acc * 256 + b as u64) % N)
}

fn encode_ecqv_cert(p: EcPoint, info: &[u8]) -> Result<Vec<u8>, EcError> {
    let (tag, x) = compress(p)?;
    let mut out = Vec::with_capacity(2 + info.len());
    out.push(tag);
    out.push(x as u8);
    out.extend_from_slice(info);
    Ok(out)
}

/// CA-side ECQV issuance: P = A + r·G, h = H(cert) mod n, b = h·r + c.
/// With r = 0 the reconstruction point degenerates to A itself — the
/// issuance still goes through, it just binds nothing fresh, so callers
/// wanting pseudonymity must draw real nonces.
pub fn ecqv_issue(
    ee_pub: EcPoint,
    info: &[u8],
    ca_priv: u64,
    nonce_r: u64,
) -> Result<EcqvIssuance, EcError> {
    require_on_curve(ee_pub)?;
    let recon_point = add_unchecked(
        ee_pub,
        scalar_mul(nonce_r % N, generator()).expect("G is on the curve"),
    );
    if recon_point.is_infinity() {
        return Err(EcError::DegeneratePoint);
    }
    let cert_bytes = encode_ecqv_cert(recon_point, info)?;
    let h = hash_mod_n(&cert_bytes);
    let key_recon = (h * (nonce_r % N) + ca_priv % N) % N;
    Ok(EcqvIssuance {
        cert_bytes,
        recon_point,
        key_recon,
    })
}

/// End-entity ECQV expansion: q = h·a + b (mod n), Q = h·P + C. The
/// defining identity q·G == Q holds for every honest issuance.
pub fn ecqv_expand(
    ee_priv: u64,
    issuance: &EcqvIssuance,
    ca_pub: EcPoint,
) -> Result<(u64, EcPoint), EcError> {
    require_on_curve(ca_pub)?;
    require_on_curve(issuance.recon_point)?;
    let h = hash_mod_n(&issuance.cert_bytes);
    let q = (h * (ee_priv % N) + issuance.key_recon) % N;
    let big_q = add_unchecked(
        scalar_mul(h, issuance.recon_point).expect("validated above"),
        ca_pub,
    );
    Ok((q, big_q))
}
