//! Fixed-point inference over certified bounds.
//!
//! The rules tie the three parameters together: chi <= ch; h <= ch; ch > chi
//! forces h = ch; h <= chi forces chi = ch; and the Hall number is monotone
//! under induced subgraphs, which propagates lower bounds upward (and, used
//! in the other direction, upper bounds downward; those tightenings are
//! flagged in the trace).

use crate::error::Result;
use crate::params::{Certificate, CertifiedBounds};

/// Bounds for one graph inside a [`FactBase`].
#[derive(Clone, Debug)]
pub struct FactEntry {
    /// Display key, e.g. "K(3,2,2)".
    pub key: String,
    pub chi: CertifiedBounds,
    pub ch: CertifiedBounds,
    pub hall: CertifiedBounds,
    /// Set when h = ch is proven for this graph.
    pub h_equals_ch: Option<String>,
}

/// A knowledge base: bounds for several graphs plus the known
/// induced-subgraph pairs among them.
#[derive(Clone, Debug, Default)]
pub struct FactBase {
    pub entries: Vec<FactEntry>,
    /// `(sub, sup)` indices: `entries[sub]` is an induced subgraph of
    /// `entries[sup]`.
    pub induced_pairs: Vec<(usize, usize)>,
}

/// Applies every inference rule to a fixed point. Returns the tightened base
/// and a trace of each tightening. Contradictions between certificates
/// surface as integrity errors.
pub fn apply_facts(base: &FactBase) -> Result<(FactBase, Vec<String>)> {
    let mut out = base.clone();
    let mut trace = Vec::new();
    loop {
        let mut changed = false;
        for i in 0..out.entries.len() {
            changed |= tighten_entry(&mut out.entries[i], &mut trace)?;
        }
        for &(sub, sup) in &base.induced_pairs {
            let sub_lower = out.entries[sub].hall.lower;
            let sub_key = out.entries[sub].key.clone();
            let sup_key = out.entries[sup].key.clone();
            // Fact 5 upward: h(sub) <= h(sup).
            let did = out.entries[sup].hall.tighten_lower(
                sub_lower,
                Certificate::Inference {
                    rule: "fact5",
                    detail: format!(
                        "h({sub_key}) >= {sub_lower} and {sub_key} is induced in {sup_key}"
                    ),
                },
            )?;
            if did {
                trace.push(format!(
                    "fact5: h({sup_key}) >= {sub_lower} via induced {sub_key}"
                ));
                changed = true;
            }
            // Fact 5 downward (flagged): h(sub) <= h(sup) caps the subgraph.
            let sup_upper = out.entries[sup].hall.upper;
            let did = out.entries[sub].hall.tighten_upper(
                sup_upper,
                Certificate::Inference {
                    rule: "fact5-downward",
                    detail: format!(
                        "flagged: h({sub_key}) <= h({sup_key}) <= {sup_upper} (monotonicity used downward)"
                    ),
                },
            )?;
            if did {
                trace.push(format!(
                    "fact5-downward (flagged): h({sub_key}) <= {sup_upper} via {sup_key}"
                ));
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    Ok((out, trace))
}

fn tighten_entry(entry: &mut FactEntry, trace: &mut Vec<String>) -> Result<bool> {
    let key = entry.key.clone();
    let mut changed = false;

    // chi <= ch.
    if entry.ch.tighten_lower(
        entry.chi.lower,
        Certificate::Inference {
            rule: "chi<=ch",
            detail: format!("chi({key}) >= {}", entry.chi.lower),
        },
    )? {
        trace.push(format!("chi<=ch: ch({key}) >= {}", entry.chi.lower));
        changed = true;
    }

    // Fact 2: h <= ch, in both useful directions.
    if entry.hall.tighten_upper(
        entry.ch.upper,
        Certificate::Inference {
            rule: "fact2",
            detail: format!("h <= ch <= {}", entry.ch.upper),
        },
    )? {
        trace.push(format!("fact2: h({key}) <= {}", entry.ch.upper));
        changed = true;
    }
    if entry.ch.tighten_lower(
        entry.hall.lower,
        Certificate::Inference {
            rule: "fact2",
            detail: format!("ch >= h >= {}", entry.hall.lower),
        },
    )? {
        trace.push(format!("fact2: ch({key}) >= {}", entry.hall.lower));
        changed = true;
    }

    // Fact 3: ch > chi forces h = ch.
    if entry.h_equals_ch.is_none() && entry.chi.exact() && entry.ch.lower > entry.chi.upper {
        entry.h_equals_ch = Some(format!(
            "fact3: ch >= {} > {} = chi",
            entry.ch.lower, entry.chi.upper
        ));
        trace.push(format!("fact3: h({key}) = ch({key})"));
        changed = true;
    }

    // Fact 4: h <= chi forces chi = ch.
    if entry.hall.upper <= entry.chi.lower
        && entry.ch.tighten_upper(
            entry.chi.upper,
            Certificate::Inference {
                rule: "fact4",
                detail: format!("h <= chi, so ch = chi <= {}", entry.chi.upper),
            },
        )?
    {
        trace.push(format!("fact4: ch({key}) <= {}", entry.chi.upper));
        changed = true;
    }

    // A proven h = ch intersects the two intervals.
    if let Some(reason) = entry.h_equals_ch.clone() {
        let cert = |detail: &str| Certificate::Inference {
            rule: "h=ch",
            detail: detail.to_string(),
        };
        if entry.hall.tighten_lower(entry.ch.lower, cert(&reason))? {
            trace.push(format!("h=ch: h({key}) >= {}", entry.ch.lower));
            changed = true;
        }
        if entry.ch.tighten_lower(entry.hall.lower, cert(&reason))? {
            trace.push(format!("h=ch: ch({key}) >= {}", entry.hall.lower));
            changed = true;
        }
        if entry.hall.tighten_upper(entry.ch.upper, cert(&reason))? {
            trace.push(format!("h=ch: h({key}) <= {}", entry.ch.upper));
            changed = true;
        }
        if entry.ch.tighten_upper(entry.hall.upper, cert(&reason))? {
            trace.push(format!("h=ch: ch({key}) <= {}", entry.hall.upper));
            changed = true;
        }
    }

    Ok(changed)
}
