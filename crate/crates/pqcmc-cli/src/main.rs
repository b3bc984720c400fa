//! `pqcmc` — McEliece-style implicit certificates from the command line.
//!
//! The tool wires the library crate's pieces into file-based pipelines:
//! `keygen` → `ca issue` → `ee expand` → `reconstruct` → `sign` /
//! `verify` / `encrypt` / `decrypt`, plus the `lengths` size report,
//! the `bench matgen` sampler comparison, and a toy `ecqv demo`.
//!
//! Every subcommand is deterministic given its `--seed` flags; the
//! `--entropy os` escape hatch substitutes operating-system entropy for
//! callers who explicitly opt out of reproducibility.
//!
//! Exit codes: 0 success, 1 verification failure (signature mismatch,
//! issuer validation), 2 usage error, 3 data error (unreadable or
//! inconsistent files, undecodable ciphertexts).

use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use pqcmc_cli::bench::{doubling_ratios, time_baseline_sampler, time_permutation_sampler, BenchRow};
use pqcmc_cli::files::{self, FileError, KeyRole};
use pqcmc_core::certs::{ecc_cert_savings, encode_cert, length_row};
use pqcmc_core::ecqv;
use pqcmc_core::gf2::Gf2Matrix;
use pqcmc_core::mceliece::{
    decrypt, encrypt, hash_to_message, keygen, sign, verify, McElieceError,
};
use pqcmc_core::params::{by_name, ParameterSet, TABLE_SETS};
use pqcmc_core::pqcmc::{
    ca_issue, ee_expand, reconstruct_public, CaContext, IssuanceRequest, PqcmcError,
};
use pqcmc_core::randgen::Prng;

#[derive(Parser)]
#[command(
    name = "pqcmc",
    version,
    about = "McEliece-style implicit certificates: keys, issuance, expansion, reports"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a key pair; writes private.key, public.key, and cert.bin
    Keygen(KeygenArgs),
    /// Certificate-authority operations
    Ca {
        #[command(subcommand)]
        cmd: CaCmd,
    },
    /// End-entity operations
    Ee {
        #[command(subcommand)]
        cmd: EeCmd,
    },
    /// Reconstruct a subject public key Q from public inputs
    Reconstruct(ReconstructArgs),
    /// Sign a message column with a private key
    Sign(SignArgs),
    /// Check a signature against an expected message
    Verify(VerifyArgs),
    /// Encrypt message rows to a public key
    Encrypt(EncryptArgs),
    /// Decrypt ciphertext rows with a private key
    Decrypt(DecryptArgs),
    /// Report key, reconstruction-value, and signature sizes
    Lengths(LengthsArgs),
    /// Timing comparisons
    Bench {
        #[command(subcommand)]
        cmd: BenchCmd,
    },
    /// Toy elliptic-curve baseline
    Ecqv {
        #[command(subcommand)]
        cmd: EcqvCmd,
    },
}

#[derive(Subcommand)]
enum CaCmd {
    /// Issue an implicit certificate for an end entity's public key
    Issue(IssueArgs),
}

#[derive(Subcommand)]
enum EeCmd {
    /// Validate an issuance response and derive the expanded key pair
    Expand(ExpandArgs),
}

#[derive(Subcommand)]
enum BenchCmd {
    /// Compare the linear permutation sampler with the cubic baseline
    Matgen(MatgenArgs),
}

#[derive(Subcommand)]
enum EcqvCmd {
    /// Walk one toy-scale issuance and expansion, printing every value
    Demo(EcqvDemoArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EntropySource {
    /// Deterministic: the value of --seed (or --seed-r) is used as-is
    Seed,
    /// Operating-system entropy; the run is not reproducible
    Os,
}

#[derive(Args)]
struct KeygenArgs {
    /// Parameter-set name (see `lengths --all` for the published sets)
    #[arg(long)]
    params: String,
    /// Seed for the deterministic generator
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum, default_value = "seed")]
    entropy: EntropySource,
    /// Output directory (created if missing)
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct IssueArgs {
    /// CA private-key container
    #[arg(long)]
    ca_key: PathBuf,
    /// End entity's public-key matrix file
    #[arg(long)]
    ee_pub: PathBuf,
    /// Subject info bytes, hex-encoded (may be empty)
    #[arg(long, default_value = "")]
    info: String,
    /// Seed for the signed permutation M_r
    #[arg(long)]
    seed_r: Option<u64>,
    #[arg(long, value_enum, default_value = "seed")]
    entropy: EntropySource,
    /// Issuance-response output file
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct ExpandArgs {
    /// End entity's private-key container
    #[arg(long)]
    ee_key: PathBuf,
    /// Issuance-response file from the CA
    #[arg(long)]
    response: PathBuf,
    /// CA certificate file (canonical bytes)
    #[arg(long)]
    ca_cert: PathBuf,
    /// CA public-key matrix file
    #[arg(long)]
    ca_pub: PathBuf,
    /// Expanded-key container output file
    #[arg(long)]
    out: PathBuf,
    /// Also write the validated certificate's canonical bytes here
    #[arg(long)]
    cert_out: Option<PathBuf>,
}

#[derive(Args)]
struct ReconstructArgs {
    /// Subject certificate (bare certificate or issuance-response file)
    #[arg(long)]
    cert: PathBuf,
    /// CA certificate file (canonical bytes)
    #[arg(long)]
    ca_cert: PathBuf,
    /// CA public-key matrix file
    #[arg(long)]
    ca_pub: PathBuf,
    /// Output file for the reconstructed public key Q
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct SignArgs {
    /// Private-key container (generated or expanded)
    #[arg(long)]
    key: PathBuf,
    /// Message file: one ζ1×1 matrix
    #[arg(long, value_name = "FILE", conflicts_with = "digest")]
    r#in: Option<PathBuf>,
    /// Hex digest to bind: its first ζ1 bits become the message
    #[arg(long)]
    digest: Option<String>,
    /// Signature output file
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct VerifyArgs {
    /// Public-key matrix file (L or reconstructed Q)
    #[arg(long, value_name = "FILE")]
    public: PathBuf,
    /// Signature file
    #[arg(long)]
    sig: PathBuf,
    /// Expected-message file: one ζ1×1 matrix
    #[arg(long, value_name = "FILE", conflicts_with = "digest")]
    expect: Option<PathBuf>,
    /// Hex digest the signature is expected to bind
    #[arg(long)]
    digest: Option<String>,
}

#[derive(Args)]
struct EncryptArgs {
    /// Parameter-set name (fixes ζ1, ζ2, and the error weight)
    #[arg(long)]
    params: String,
    /// Public-key matrix file (L or reconstructed Q)
    #[arg(long, value_name = "FILE")]
    public: PathBuf,
    /// Message file: a k×ζ1 matrix, one message per row
    #[arg(long, value_name = "FILE", conflicts_with = "msg_hex")]
    r#in: Option<PathBuf>,
    /// Single message row as hex: its first ζ1 bits are used
    #[arg(long)]
    msg_hex: Option<String>,
    /// Seed for the error-row draws
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, value_enum, default_value = "seed")]
    entropy: EntropySource,
    /// Ciphertext output file
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct DecryptArgs {
    /// Private-key container (generated or expanded)
    #[arg(long)]
    key: PathBuf,
    /// Ciphertext file: a k×ζ2 matrix
    #[arg(long, value_name = "FILE")]
    r#in: PathBuf,
    /// Plaintext output file
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct LengthsArgs {
    /// Report a single named parameter set
    #[arg(long, conflicts_with = "all")]
    params: Option<String>,
    /// Report every published parameter set (the default)
    #[arg(long)]
    all: bool,
    /// Machine-readable key=value lines instead of the aligned table
    #[arg(long)]
    kv: bool,
}

#[derive(Args)]
struct MatgenArgs {
    /// Sizes for the linear permutation sampler
    #[arg(long, value_delimiter = ',', default_values_t = [1024usize, 2048, 4096])]
    sizes: Vec<usize>,
    /// Sizes for the cubic generate-and-test baseline
    #[arg(long, value_delimiter = ',', default_values_t = [128usize, 256])]
    baseline_sizes: Vec<usize>,
    /// Timed batches per size; the median is reported
    #[arg(long, default_value_t = 5)]
    trials: usize,
    /// Seed for the generators under test
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

#[derive(Args)]
struct EcqvDemoArgs {
    /// Seed choosing the demo's scalars
    #[arg(long, default_value_t = 1)]
    seed: u64,
}

/// Post-parse failures, one exit code per class. Every variant prints as
/// a single `error: <class>: <reason>` line on stderr.
enum CliError {
    Usage(String),
    Verification(String),
    Data(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Verification(_) => 1,
            CliError::Data(_) => 3,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "usage: {}", msg),
            CliError::Verification(msg) => write!(f, "verification: {}", msg),
            CliError::Data(msg) => write!(f, "data: {}", msg),
        }
    }
}

impl From<FileError> for CliError {
    fn from(e: FileError) -> Self {
        CliError::Data(e.to_string())
    }
}

impl From<McElieceError> for CliError {
    fn from(e: McElieceError) -> Self {
        CliError::Data(e.to_string())
    }
}

impl From<PqcmcError> for CliError {
    fn from(e: PqcmcError) -> Self {
        match e {
            PqcmcError::IssuerValidation => CliError::Verification(e.to_string()),
            _ => CliError::Data(e.to_string()),
        }
    }
}

/// Restores the default `SIGPIPE` disposition so a closed pipe kills the
/// process quietly (as `head` expects) instead of panicking mid-print.
fn reset_sigpipe() {
    #[cfg(unix)]
    // SAFETY: SIG_DFL installs the kernel default handler; no Rust state
    // is involved and this runs before any other thread exists.
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
}

fn main() -> ExitCode {
    reset_sigpipe();
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e);
            ExitCode::from(e.code())
        }
    }
}

fn run(cmd: Cmd) -> Result<(), CliError> {
    match cmd {
        Cmd::Keygen(args) => cmd_keygen(args),
        Cmd::Ca { cmd: CaCmd::Issue(args) } => cmd_issue(args),
        Cmd::Ee { cmd: EeCmd::Expand(args) } => cmd_expand(args),
        Cmd::Reconstruct(args) => cmd_reconstruct(args),
        Cmd::Sign(args) => cmd_sign(args),
        Cmd::Verify(args) => cmd_verify(args),
        Cmd::Encrypt(args) => cmd_encrypt(args),
        Cmd::Decrypt(args) => cmd_decrypt(args),
        Cmd::Lengths(args) => cmd_lengths(args),
        Cmd::Bench { cmd: BenchCmd::Matgen(args) } => cmd_matgen(args),
        Cmd::Ecqv { cmd: EcqvCmd::Demo(args) } => cmd_ecqv_demo(args),
    }
}

fn lookup_params(name: &str) -> Result<ParameterSet, CliError> {
    by_name(name).ok_or_else(|| {
        CliError::Usage(format!(
            "unknown parameter set {:?}; run `pqcmc lengths --all` for the published names",
            name
        ))
    })
}

/// Resolves a seed flag against the chosen entropy source. `--entropy
/// os` draws from the operating system and makes the flag optional;
/// otherwise the flag is mandatory, keeping every run reproducible.
fn resolve_seed(
    flag: &'static str,
    value: Option<u64>,
    entropy: EntropySource,
) -> Result<u64, CliError> {
    match entropy {
        EntropySource::Seed => value.ok_or_else(|| {
            CliError::Usage(format!("{} is required (or pass --entropy os)", flag))
        }),
        EntropySource::Os => Ok(os_seed()),
    }
}

fn os_seed() -> u64 {
    use std::io::Read;

    // Bounded read: /dev/urandom never reports EOF, so only read_exact on
    // a fixed buffer terminates.
    let mut buf = [0u8; 8];
    if let Ok(mut f) = std::fs::File::open("/dev/urandom") {
        if f.read_exact(&mut buf).is_ok() {
            return u64::from_be_bytes(buf);
        }
    }
    // Portable fallback: the sub-second clock. Weak, but this path is an
    // explicit opt-out of reproducibility, not a security boundary.
    let now = std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .unwrap_or_default();
    now.as_nanos() as u64
}

fn decode_hex(flag: &'static str, s: &str) -> Result<Vec<u8>, CliError> {
    hex::decode(s).map_err(|_| CliError::Usage(format!("{} expects hex bytes", flag)))
}

fn cmd_keygen(args: KeygenArgs) -> Result<(), CliError> {
    let params = lookup_params(&args.params)?;
    let seed = resolve_seed("--seed", args.seed, args.entropy)?;
    let key = keygen(params, seed);

    std::fs::create_dir_all(&args.out).map_err(|source| FileError::Io {
        path: args.out.clone(),
        source,
    })?;
    files::write_key_container(&args.out.join("private.key"), &key, KeyRole::Standard)?;
    files::write_matrix(&args.out.join("public.key"), key.public_l())?;
    // The self-descriptor certificate other parties hash during
    // issuance validation and key reconstruction.
    let ca = CaContext::new(key);
    files::write_bytes(&args.out.join("cert.bin"), ca.cert_bytes())?;
    println!(
        "keygen: params={} seed={} -> {}/{{private.key, public.key, cert.bin}}",
        params.name,
        seed,
        args.out.display()
    );
    Ok(())
}

fn cmd_issue(args: IssueArgs) -> Result<(), CliError> {
    let seed_r = resolve_seed("--seed-r", args.seed_r, args.entropy)?;
    let info = decode_hex("--info", &args.info)?;
    let (ca_key, _) = files::read_key_container(&args.ca_key)?;
    let ee_public_l = files::read_matrix(&args.ee_pub)?;
    let ca = CaContext::new(ca_key);
    let req = IssuanceRequest { ee_public_l, info };
    let resp = ca_issue(&ca, &req, seed_r)?;
    files::write_response(&args.out, &resp)?;
    println!(
        "issued: params={} seed-r={} -> {}",
        ca.keypair().params().name,
        seed_r,
        args.out.display()
    );
    Ok(())
}

fn cmd_expand(args: ExpandArgs) -> Result<(), CliError> {
    let (ee_key, _) = files::read_key_container(&args.ee_key)?;
    let resp = files::read_response(&args.response)?;
    let ca_cert_bytes = files::read_bytes(&args.ca_cert)?;
    // Early structural check so a wrong file is a data error here, not a
    // baffling issuer-validation failure later.
    pqcmc_core::certs::decode_cert(&ca_cert_bytes)
        .map_err(|e| CliError::Data(format!("CA certificate: {}", e)))?;
    let ca_public_l = files::read_matrix(&args.ca_pub)?;

    let expanded = ee_expand(&ee_key, &resp, &ca_cert_bytes, &ca_public_l)?;
    files::write_key_container(&args.out, expanded.as_keypair(), KeyRole::Expanded)?;
    if let Some(cert_out) = &args.cert_out {
        files::write_bytes(cert_out, &encode_cert(&resp.cert))?;
    }
    println!("expanded: issuer validated -> {}", args.out.display());
    Ok(())
}

fn cmd_reconstruct(args: ReconstructArgs) -> Result<(), CliError> {
    let cert = files::read_cert_or_response(&args.cert)?;
    let ca_cert_bytes = files::read_bytes(&args.ca_cert)?;
    let ca_public_l = files::read_matrix(&args.ca_pub)?;
    let q = reconstruct_public(&cert, &ca_cert_bytes, &ca_public_l)?;
    files::write_matrix(&args.out, &q)?;
    println!("reconstructed: Q {}x{} -> {}", q.rows(), q.cols(), args.out.display());
    Ok(())
}

/// The message column for `sign`/`verify`: an explicit ζ1×1 matrix file,
/// or the first ζ1 bits of a hex digest.
fn message_column(
    input: Option<&Path>,
    digest: Option<&str>,
    zeta1: usize,
) -> Result<Gf2Matrix, CliError> {
    match (input, digest) {
        (Some(path), None) => Ok(files::read_matrix(path)?),
        (None, Some(hex_str)) => {
            let bytes = decode_hex("--digest", hex_str)?;
            Ok(hash_to_message(&bytes, zeta1))
        }
        _ => Err(CliError::Usage(String::from(
            "exactly one of --in/--expect or --digest is required",
        ))),
    }
}

fn cmd_sign(args: SignArgs) -> Result<(), CliError> {
    let (key, _) = files::read_key_container(&args.key)?;
    let m = message_column(args.r#in.as_deref(), args.digest.as_deref(), key.params().zeta1)?;
    let s = sign(&m, &key)?;
    files::write_matrix(&args.out, &s)?;
    println!("signed: {} bits -> {}", key.params().zeta1, args.out.display());
    Ok(())
}

fn cmd_verify(args: VerifyArgs) -> Result<(), CliError> {
    let public = files::read_matrix(&args.public)?;
    let s = files::read_matrix(&args.sig)?;
    let expected = message_column(args.expect.as_deref(), args.digest.as_deref(), public.rows())?;
    let recovered = verify(&s, &public)?;
    if recovered == expected {
        println!("verify: ok");
        Ok(())
    } else {
        Err(CliError::Verification(String::from(
            "signature does not bind the expected message",
        )))
    }
}

fn cmd_encrypt(args: EncryptArgs) -> Result<(), CliError> {
    let params = lookup_params(&args.params)?;
    let seed = resolve_seed("--seed", args.seed, args.entropy)?;
    let public = files::read_matrix(&args.public)?;
    if public.shape() != (params.zeta1, params.zeta2) {
        return Err(CliError::Data(format!(
            "public key is {}x{} but parameter set {} expects {}x{}",
            public.rows(),
            public.cols(),
            params.name,
            params.zeta1,
            params.zeta2
        )));
    }
    let messages = match (&args.r#in, &args.msg_hex) {
        (Some(path), None) => files::read_matrix(path)?,
        (None, Some(hex_str)) => {
            let bytes = decode_hex("--msg-hex", hex_str)?;
            hash_to_message(&bytes, params.zeta1).transpose()
        }
        _ => {
            return Err(CliError::Usage(String::from(
                "exactly one of --in or --msg-hex is required",
            )))
        }
    };
    let mut prng = Prng::from_seed(seed);
    let z = encrypt(&messages, &public, params.t, &mut prng)?;
    files::write_matrix(&args.out, &z)?;
    println!(
        "encrypted: {} row(s), error weight {} -> {}",
        z.rows(),
        params.t,
        args.out.display()
    );
    Ok(())
}

fn cmd_decrypt(args: DecryptArgs) -> Result<(), CliError> {
    let (key, _) = files::read_key_container(&args.key)?;
    let z = files::read_matrix(&args.r#in)?;
    let m = decrypt(&z, &key)?;
    files::write_matrix(&args.out, &m)?;
    println!("decrypted: {} row(s) -> {}", m.rows(), args.out.display());
    Ok(())
}

fn cmd_lengths(args: LengthsArgs) -> Result<(), CliError> {
    let sets: Vec<ParameterSet> = match &args.params {
        Some(name) => vec![lookup_params(name)?],
        None => TABLE_SETS.to_vec(),
    };
    if args.kv {
        for set in &sets {
            let row = length_row(set.zeta1 as u64, set.zeta2 as u64);
            println!(
                "set={} zeta1={} zeta2={} l_bits={} b_bits={} s_bits={} l_kb={} b_kb={} s_bytes={}",
                set.name,
                row.zeta1,
                row.zeta2,
                row.l_bits,
                row.b_bits,
                row.s_bits,
                row.l_kb,
                row.b_kb,
                row.s_bytes
            );
        }
        return Ok(());
    }
    println!(
        "{:<14} {:>6} {:>6} {:>8} {:>8} {:>10}",
        "parameter set", "zeta1", "zeta2", "L (KB)", "B (KB)", "s (bytes)"
    );
    for set in &sets {
        let row = length_row(set.zeta1 as u64, set.zeta2 as u64);
        println!(
            "{:<14} {:>6} {:>6} {:>8} {:>8} {:>10}",
            set.name, row.zeta1, row.zeta2, row.l_kb, row.b_kb, row.s_bytes
        );
    }
    Ok(())
}

fn print_bench_section(title: &str, draws_label: &str, rows: &[BenchRow]) {
    println!("{}", title);
    println!(
        "  {:>6} {:>12} {:>8} {:>14}",
        "n", "median", draws_label, "ratio vs n/2"
    );
    let ratios = doubling_ratios(rows);
    for row in rows {
        let ratio = ratios
            .iter()
            .find(|(n, _)| 2 * n == row.n)
            .map(|(_, r)| format!("{:.2}", r))
            .unwrap_or_else(|| String::from("-"));
        println!(
            "  {:>6} {:>9.1} us {:>8} {:>14}",
            row.n,
            row.median_ns as f64 / 1000.0,
            row.draws,
            ratio
        );
    }
}

fn cmd_matgen(args: MatgenArgs) -> Result<(), CliError> {
    let alg = time_permutation_sampler(&args.sizes, args.trials, args.seed);
    print_bench_section(
        "permutation sampler (one pass, n draws)",
        "draws",
        &alg,
    );
    println!();
    let base = time_baseline_sampler(&args.baseline_sizes, args.trials, args.seed);
    print_bench_section(
        "generate-and-test baseline (cubic per try)",
        "tries",
        &base,
    );
    Ok(())
}

fn cmd_ecqv_demo(args: EcqvDemoArgs) -> Result<(), CliError> {
    let mut prng = Prng::from_seed(args.seed);
    let n = ecqv::TOY_CURVE.n;
    let g = ecqv::generator();

    // Draw scalars, skipping the degenerate a + r ≡ 0 (mod n) combination
    // where the reconstruction point collapses to infinity.
    let (c, a, r) = loop {
        let c = prng.next_below(n - 1) + 1;
        let a = prng.next_below(n - 1) + 1;
        let r = prng.next_below(n - 1) + 1;
        if !(a + r).is_multiple_of(n) {
            break (c, a, r);
        }
    };
    let ca_pub = ecqv::scalar_mul(c, g).expect("generator is on the curve");
    let ee_pub = ecqv::scalar_mul(a, g).expect("generator is on the curve");

    println!(
        "toy curve: y^2 = x^3 + {}x + {} over GF({}), G = {}, group order n = {}",
        ecqv::TOY_CURVE.a,
        ecqv::TOY_CURVE.b,
        ecqv::TOY_CURVE.p,
        g,
        n
    );
    println!("ca: private c = {:>2}, public C = c*G = {}", c, ca_pub);
    println!("ee: private a = {:>2}, public A = a*G = {}", a, ee_pub);
    println!("issuance nonce r = {}", r);

    let issuance = ecqv::ecqv_issue(ee_pub, b"demo-vehicle", c, r)
        .map_err(|e| CliError::Data(e.to_string()))?;
    println!("reconstruction point P = A + r*G = {}", issuance.recon_point);
    println!("certificate bytes: {}", hex::encode(&issuance.cert_bytes));
    let h = ecqv::hash_mod_n(&issuance.cert_bytes);
    println!("h = SHA-256(cert) mod n = {}", h);
    println!("private reconstruction b = h*r + c mod n = {}", issuance.key_recon);

    let (q, big_q) =
        ecqv::ecqv_expand(a, &issuance, ca_pub).map_err(|e| CliError::Data(e.to_string()))?;
    println!("expanded private q = h*a + b mod n = {}", q);
    println!("expanded public  Q = h*P + C = {}", big_q);
    let check = ecqv::scalar_mul(q, g).expect("generator is on the curve") == big_q;
    println!("check q*G == Q: {}", if check { "ok" } else { "MISMATCH" });
    if !check {
        return Err(CliError::Data(String::from("q*G != Q")));
    }

    // One signature under the freshly expanded key.
    let (digest, sig) = loop {
        let digest = prng.next_below(n);
        let k = prng.next_below(n - 1) + 1;
        match ecqv::ecdsa_sign(digest, q, k) {
            Ok(sig) => break (digest, sig),
            Err(ecqv::EcError::NonceUnusable) => continue,
            Err(e) => return Err(CliError::Data(e.to_string())),
        }
    };
    let ok = ecqv::ecdsa_verify(digest, &sig, big_q);
    println!(
        "ecdsa under the expanded key: h' = {}, R = {}, s = {}; verify: {}",
        digest,
        sig.r_point,
        sig.s,
        if ok { "ok" } else { "MISMATCH" }
    );
    if !ok {
        return Err(CliError::Data(String::from("ecdsa verification failed")));
    }

    let ecc = ecc_cert_savings();
    println!(
        "classical sizes (P-256): explicit certificate key material {} bytes \
         ({}-byte key + {}-byte signature), implicit {} bytes -> {} bytes saved; \
         point compression alone saves {} bytes ({} -> {})",
        ecc.explicit_cert_key_bytes,
        ecc.compressed_point_bytes,
        ecc.signature_bytes,
        ecc.implicit_cert_key_bytes,
        ecc.savings_bytes,
        ecc.compression_savings_bytes,
        ecc.uncompressed_point_bytes,
        ecc.compressed_point_bytes
    );
    Ok(())
}
