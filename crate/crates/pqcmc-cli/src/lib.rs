//! Library half of the `pqcmc` command-line tool: file formats for keys,
//! issuance responses, and raw matrices, plus the timing harness behind
//! `bench matgen`. The binary in `main.rs` is a thin argument-parsing
//! layer over these functions, which keeps every behavior reachable from
//! integration tests without spawning processes.

pub mod bench;
pub mod files;
