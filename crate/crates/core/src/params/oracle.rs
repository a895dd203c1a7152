//! Known choice numbers of complete multipartite families, shipped as a
//! trusted oracle table. Every entry records the literature source it came
//! from; the bounds engine cites entries instead of recomputing values that
//! are far beyond exhaustive range.

use std::fmt;

/// One fact the oracle contributes about a graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum OracleFinding {
    ChExact {
        value: usize,
        tag: &'static str,
    },
    ChLower {
        value: usize,
        tag: &'static str,
    },
    /// The Hall number equals the choice number for this family, even where
    /// the common value itself is not pinned down.
    HallEqualsCh {
        tag: &'static str,
    },
}

impl OracleFinding {
    pub fn tag(&self) -> &'static str {
        match self {
            OracleFinding::ChExact { tag, .. }
            | OracleFinding::ChLower { tag, .. }
            | OracleFinding::HallEqualsCh { tag } => tag,
        }
    }
}

impl fmt::Display for OracleFinding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleFinding::ChExact { value, tag } => write!(f, "ch = {value} [{tag}]"),
            OracleFinding::ChLower { value, tag } => write!(f, "ch >= {value} [{tag}]"),
            OracleFinding::HallEqualsCh { tag } => write!(f, "h = ch [{tag}]"),
        }
    }
}

/// Tags double as stable identifiers in traces and rendered certificates.
pub const TAG_ALL_PARTS_2: &str = "ch(K(2^k))=k, Erdos-Rubin-Taylor";
pub const TAG_TWO_3S: &str = "ch(K(3,3,2^(k-2)))=k for k>2, Gravier-Maffray";
pub const TAG_K33: &str = "ch(K(3,3))=3";
pub const TAG_ONE_3: &str = "ch(K(3,2^(k-1)))=k";
pub const TAG_ONE_4: &str = "ch(K(4,2^(k-1)))=k odd, k+1 even, Enomoto et al.";
pub const TAG_ONE_5: &str = "ch(K(5,2^(k-1)))=k+1, Enomoto et al.";
pub const TAG_BIG_PART: &str = "h=ch>=k+1 for K(m,2^(k-1)), m>=5";

/// Matches a part-size profile (sorted descending) against the table.
/// Returns every applicable finding, in table order.
pub fn oracle_lookup(parts_desc: &[usize]) -> Vec<OracleFinding> {
    let k = parts_desc.len();
    if k == 0 || parts_desc.contains(&0) {
        return Vec::new();
    }
    debug_assert!(parts_desc.windows(2).all(|w| w[0] >= w[1]));
    let mut findings = Vec::new();
    let all_rest_2 = parts_desc[1..].iter().all(|&p| p == 2);

    if parts_desc.iter().all(|&p| p == 2) {
        findings.push(OracleFinding::ChExact {
            value: k,
            tag: TAG_ALL_PARTS_2,
        });
    }
    if k > 2 && parts_desc[0] == 3 && parts_desc[1] == 3 && parts_desc[2..].iter().all(|&p| p == 2)
    {
        findings.push(OracleFinding::ChExact {
            value: k,
            tag: TAG_TWO_3S,
        });
    }
    if parts_desc == [3, 3] {
        findings.push(OracleFinding::ChExact {
            value: 3,
            tag: TAG_K33,
        });
    }
    if parts_desc[0] == 3 && k >= 2 && all_rest_2 {
        // k for k > 2, and the known value 2 for K(3,2).
        findings.push(OracleFinding::ChExact {
            value: if k > 2 { k } else { 2 },
            tag: TAG_ONE_3,
        });
    }
    if parts_desc[0] == 4 && k >= 2 && all_rest_2 {
        findings.push(OracleFinding::ChExact {
            value: if k % 2 == 1 { k } else { k + 1 },
            tag: TAG_ONE_4,
        });
    }
    if parts_desc[0] == 5 && k >= 2 && all_rest_2 {
        findings.push(OracleFinding::ChExact {
            value: k + 1,
            tag: TAG_ONE_5,
        });
    }
    if parts_desc[0] >= 5 && k >= 2 && all_rest_2 {
        findings.push(OracleFinding::ChLower {
            value: k + 1,
            tag: TAG_BIG_PART,
        });
        findings.push(OracleFinding::HallEqualsCh { tag: TAG_BIG_PART });
    }
    findings
}
