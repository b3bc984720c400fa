//! Named parameter sets.
//!
//! A parameter set fixes the message length ζ1, the codeword length ζ2,
//! and the code family used during key generation. The seven large sets
//! are the published length-comparison rows; the two small sets exist so
//! protocol tests can run exhaustively in milliseconds.

use core::fmt;

/// How K2/K4/K5 are built during key generation.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CodeFamily {
    /// Systematic generator `[I | P]` with random parity block and t = 0:
    /// encryption adds no error, decryption only checks the syndrome.
    /// This matches the certificate protocol, which transports the
    /// reconstruction value without an error term.
    ErrorlessSystematic,
    /// The (7,4) Hamming code, t = 1. Small enough to enumerate every
    /// message and error pattern, and the only family here that exercises
    /// genuine syndrome correction.
    Hamming74,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ParameterSet {
    pub name: &'static str,
    /// Message length ζ1 in bits.
    pub zeta1: usize,
    /// Codeword length ζ2 in bits.
    pub zeta2: usize,
    pub family: CodeFamily,
    /// Error-correction capacity in bits.
    pub t: usize,
}

const fn errorless(name: &'static str, zeta1: usize, zeta2: usize) -> ParameterSet {
    ParameterSet {
        name,
        zeta1,
        zeta2,
        family: CodeFamily::ErrorlessSystematic,
        t: 0,
    }
}

/// The seven published (ζ1, ζ2) rows, all errorless-systematic.
pub const TABLE_SETS: [ParameterSet; 7] = [
    errorless("524x1024", 524, 1024),
    errorless("1219x1702", 1219, 1702),
    errorless("1696x2048", 1696, 2048),
    errorless("1751x2048", 1751, 2048),
    errorless("2384x3178", 2384, 3178),
    errorless("3604x4096", 3604, 4096),
    errorless("5208x6944", 5208, 6944),
];

/// Small errorless set for fast protocol tests.
pub const TEST_12X28: ParameterSet = errorless("test-12x28", 12, 28);

/// Hamming(7,4) set exercising the error-correction path.
pub const HAMMING_7_4: ParameterSet = ParameterSet {
    name: "hamming-7-4",
    zeta1: 4,
    zeta2: 7,
    family: CodeFamily::Hamming74,
    t: 1,
};

/// Every named set, large and small.
pub fn all_sets() -> [ParameterSet; 9] {
    [
        TABLE_SETS[0],
        TABLE_SETS[1],
        TABLE_SETS[2],
        TABLE_SETS[3],
        TABLE_SETS[4],
        TABLE_SETS[5],
        TABLE_SETS[6],
        TEST_12X28,
        HAMMING_7_4,
    ]
}

/// Looks up a set by its name; `None` for anything unknown.
pub fn by_name(name: &str) -> Option<ParameterSet> {
    all_sets().into_iter().find(|s| s.name == name)
}

impl fmt::Display for ParameterSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} (zeta1={}, zeta2={}, t={})",
            self.name, self.zeta1, self.zeta2, self.t
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_set_is_well_formed() {
        for s in all_sets() {
            assert!(s.zeta1 <= s.zeta2, "{}: zeta1 > zeta2", s.name);
            match s.family {
                CodeFamily::ErrorlessSystematic => assert_eq!(s.t, 0, "{}", s.name),
                CodeFamily::Hamming74 => {
                    assert_eq!((s.zeta1, s.zeta2, s.t), (4, 7, 1), "{}", s.name)
                }
            }
        }
    }

    #[test]
    fn lookup_by_name_round_trips() {
        for s in all_sets() {
            assert_eq!(by_name(s.name), Some(s));
        }
        assert_eq!(by_name("no-such-set"), None);
        assert_eq!(by_name(""), None);
    }

    #[test]
    fn published_rows_are_in_order() {
        let dims: alloc::vec::Vec<_> = TABLE_SETS.iter().map(|s| (s.zeta1, s.zeta2)).collect();
        assert_eq!(
            dims,
            [
                (524, 1024),
                (1219, 1702),
                (1696, 2048),
                (1751, 2048),
                (2384, 3178),
                (3604, 4096),
                (5208, 6944),
            ]
        );
    }
}
