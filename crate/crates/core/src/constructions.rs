//! Built-in extremal list assignments on complete multipartite graphs, plus a
//! verifier that machine-checks the three claims each construction is built
//! to satisfy: the full graph is not colorable, the top-level Hall inequality
//! holds, and (with one known exception) every single-vertex deletion is
//! colorable.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hall::{self, HallReport, ShortcutCheck};
use crate::list::ListAssignment;
use crate::solver;
use rayon::prelude::*;
use std::fmt;
use std::str::FromStr;

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum ConstructionName {
    Figure1,
    Theorem3,
    Theorem4Odd,
    Theorem4K3,
}

impl ConstructionName {
    pub const ALL: [ConstructionName; 4] = [
        ConstructionName::Figure1,
        ConstructionName::Theorem3,
        ConstructionName::Theorem4Odd,
        ConstructionName::Theorem4K3,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            ConstructionName::Figure1 => "figure1",
            ConstructionName::Theorem3 => "theorem3",
            ConstructionName::Theorem4Odd => "theorem4-odd",
            ConstructionName::Theorem4K3 => "theorem4-k3",
        }
    }

    pub fn takes_k(&self) -> bool {
        matches!(
            self,
            ConstructionName::Theorem3 | ConstructionName::Theorem4Odd
        )
    }
}

impl fmt::Display for ConstructionName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ConstructionName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "figure1" => Ok(ConstructionName::Figure1),
            "theorem3" => Ok(ConstructionName::Theorem3),
            "theorem4-odd" | "theorem4_odd" => Ok(ConstructionName::Theorem4Odd),
            "theorem4-k3" | "theorem4_k3" => Ok(ConstructionName::Theorem4K3),
            other => Err(Error::InvalidArgument(format!(
                "unknown construction `{other}` (expected figure1, theorem3, theorem4-odd, theorem4-k3)"
            ))),
        }
    }
}

/// A resolvable reference to one construction instance.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConstructionSpec {
    pub name: ConstructionName,
    pub k: Option<usize>,
}

impl ConstructionSpec {
    pub fn new(name: ConstructionName, k: Option<usize>) -> Self {
        ConstructionSpec { name, k }
    }

    pub fn resolve(&self) -> Result<(Graph, ListAssignment)> {
        match (self.name, self.k) {
            (ConstructionName::Figure1, None) => figure1(),
            (ConstructionName::Theorem3, Some(k)) => theorem3(k),
            (ConstructionName::Theorem4Odd, Some(k)) => theorem4_odd(k),
            (ConstructionName::Theorem4K3, None) => theorem4_k3(),
            (name, Some(_)) => Err(Error::InvalidArgument(format!(
                "construction {name} does not take a parameter k"
            ))),
            (name, None) => Err(Error::InvalidArgument(format!(
                "construction {name} requires a parameter k"
            ))),
        }
    }
}

impl fmt::Display for ConstructionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.k {
            Some(k) => write!(f, "{}(k={k})", self.name),
            None => write!(f, "{}", self.name),
        }
    }
}

/// The assignment on K(2,2) that satisfies Hall's condition yet admits no
/// proper coloring: parts {u1,v1}, {u2,v2} with lists
/// L(u1)={a,b}, L(v1)={c}, L(u2)={a,c}, L(v2)={b,c}.
pub fn figure1() -> Result<(Graph, ListAssignment)> {
    let g = Graph::complete_multipartite(&[2, 2])?;
    let lists = vec![
        vec!["a", "b"], // u1
        vec!["c"],      // v1
        vec!["a", "c"], // u2
        vec!["b", "c"], // v2
    ];
    let l = ListAssignment::new(g.clone(), &lists)?;
    Ok((g, l))
}

/// The k-part assignment on K(2,...,2), k >= 3, with a shared pool
/// A = {c1..c(k-2)} and three extra colors a, b, c:
/// L(u1)=A+{a,b}, L(u2..u_{k-1})=A+{a}, L(u_k)=A+{c},
/// L(v1)=A+{b,c}, L(v2..v_k)=A+{b}.
/// Every list has size k-1 or k; the instance is not colorable but every
/// proper induced subgraph is.
pub fn theorem3(k: usize) -> Result<(Graph, ListAssignment)> {
    if k < 3 {
        return Err(Error::InvalidArgument(format!(
            "theorem3 requires k >= 3 (got {k}); the k=2 instance is figure1"
        )));
    }
    let g = Graph::complete_multipartite(&vec![2; k])?;
    let pool: Vec<String> = (1..=k - 2).map(|i| format!("c{i}")).collect();
    let with = |extra: &[&str]| -> Vec<String> {
        pool.iter()
            .cloned()
            .chain(extra.iter().map(|s| s.to_string()))
            .collect()
    };
    let mut lists = Vec::with_capacity(2 * k);
    for part in 1..=k {
        // Vertex order is u_i then v_i within each part.
        let u = match part {
            1 => with(&["a", "b"]),
            p if p == k => with(&["c"]),
            _ => with(&["a"]),
        };
        let v = match part {
            1 => with(&["b", "c"]),
            _ => with(&["b"]),
        };
        lists.push(u);
        lists.push(v);
    }
    let l = ListAssignment::new(g.clone(), &lists)?;
    Ok((g, l))
}

/// Canonical split: the first (k-1)/2 pool colors go to the first half, the
/// rest plus the shared color 0 to the second half.
fn canonical_split(k: usize) -> (Vec<usize>, Vec<usize>) {
    let half = (k - 1) / 2;
    ((0..half).collect(), (0..half).collect())
}

/// The odd-k assignment on K(4,2,...,2) with the canonical split of the two
/// color pools. See [`theorem4_odd_with_split`].
pub fn theorem4_odd(k: usize) -> Result<(Graph, ListAssignment)> {
    if k < 3 || k.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "theorem4-odd requires an odd k >= 3 (got {k})"
        )));
    }
    let (a1, b1) = canonical_split(k);
    theorem4_odd_with_split(k, &a1, &b1)
}

/// The odd-k assignment on K(4,2,...,2), k odd >= 3, with an explicit choice
/// of split. Pools C1 = {p1..p(k-2)} and C2 = {q1..q(k-2)} are disjoint;
/// A = C1+{0} and B = C2+{0} are each split into halves of size (k-1)/2 with
/// 0 always in the second half. `a1_idx`/`b1_idx` select which pool colors
/// form the first halves A1 and B1. Lists:
/// L(u2)=A, L(v2)=B, L(u_i)=C1+{a}, L(v_i)=C2+{b} for i >= 3,
/// L(x1)=A1+B1, L(x2)=A1+B2, L(x3)=A2+B1, L(x4)=A2+B2+{a}.
/// Every list has size exactly k-1. The verifier's claim outcomes do not
/// depend on the split choice.
pub fn theorem4_odd_with_split(
    k: usize,
    a1_idx: &[usize],
    b1_idx: &[usize],
) -> Result<(Graph, ListAssignment)> {
    if k < 3 || k.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "theorem4-odd requires an odd k >= 3 (got {k})"
        )));
    }
    let half = (k - 1) / 2;
    let pool_size = k - 2;
    let valid = |idx: &[usize]| {
        idx.len() == half
            && idx.iter().all(|&i| i < pool_size)
            && idx.iter().collect::<std::collections::HashSet<_>>().len() == half
    };
    if !valid(a1_idx) || !valid(b1_idx) {
        return Err(Error::InvalidArgument(format!(
            "split must pick {half} distinct pool indices below {pool_size}"
        )));
    }

    let mut sizes = vec![2; k];
    sizes[0] = 4;
    let g = Graph::complete_multipartite(&sizes)?;

    let c1: Vec<String> = (1..=pool_size).map(|i| format!("p{i}")).collect();
    let c2: Vec<String> = (1..=pool_size).map(|i| format!("q{i}")).collect();
    let zero = "0".to_string();

    let pick = |pool: &[String], idx: &[usize]| -> Vec<String> {
        idx.iter().map(|&i| pool[i].clone()).collect()
    };
    let rest_plus_zero = |pool: &[String], idx: &[usize]| -> Vec<String> {
        let mut out: Vec<String> = (0..pool.len())
            .filter(|i| !idx.contains(i))
            .map(|i| pool[i].clone())
            .collect();
        out.push(zero.clone());
        out
    };

    let a1 = pick(&c1, a1_idx);
    let a2 = rest_plus_zero(&c1, a1_idx);
    let b1 = pick(&c2, b1_idx);
    let b2 = rest_plus_zero(&c2, b1_idx);

    let join = |xs: &[String], ys: &[String]| -> Vec<String> {
        let mut out = xs.to_vec();
        for y in ys {
            if !out.contains(y) {
                out.push(y.clone());
            }
        }
        out
    };
    let plus = |xs: &[String], extra: &str| -> Vec<String> {
        let mut out = xs.to_vec();
        out.push(extra.to_string());
        out
    };

    let set_a = plus(&c1, "0"); // A = C1 + {0}
    let set_b = plus(&c2, "0"); // B = C2 + {0}

    let mut lists: Vec<Vec<String>> = Vec::with_capacity(2 * k + 2);
    lists.push(join(&a1, &b1)); // x1
    lists.push(join(&a1, &b2)); // x2
    lists.push(join(&a2, &b1)); // x3
    lists.push(plus(&join(&a2, &b2), "a")); // x4
    lists.push(set_a); // u2
    lists.push(set_b); // v2
    for _ in 3..=k {
        lists.push(plus(&c1, "a")); // u_i
        lists.push(plus(&c2, "b")); // v_i
    }

    let l = ListAssignment::new(g.clone(), &lists)?;
    debug_assert!(l.lists().iter().all(|s| s.len() == k - 1));
    Ok((g, l))
}

/// The explicit hand-built assignment on K(4,2,2) whose eight single-vertex
/// deletions are all colorable while the full graph is not:
/// L(x1)={1,2}, L(x2)={1,0}, L(x3)={0,a}, L(x4)={b,c},
/// L(u2)={1,0}, L(v2)={2,0,c}, L(u3)={1,a}, L(v3)={2,b}.
pub fn theorem4_k3() -> Result<(Graph, ListAssignment)> {
    let g = Graph::complete_multipartite(&[4, 2, 2])?;
    let lists = vec![
        vec!["1", "2"],      // x1
        vec!["1", "0"],      // x2
        vec!["0", "a"],      // x3
        vec!["b", "c"],      // x4
        vec!["1", "0"],      // u2
        vec!["2", "0", "c"], // v2
        vec!["1", "a"],      // u3
        vec!["2", "b"],      // v3
    ];
    let l = ListAssignment::new(g.clone(), &lists)?;
    Ok((g, l))
}

/// A single-vertex deletion that is itself not colorable. The verifier
/// records these as anomalies; the odd-k construction at k=3 has exactly one
/// (deleting x3).
#[derive(Clone, Debug)]
pub struct Anomaly {
    pub vertex: usize,
    pub label: String,
    pub note: String,
}

/// Everything the verifier derives about one construction instance.
#[derive(Clone, Debug)]
pub struct ClaimReport {
    pub construction: ConstructionSpec,
    /// Claim 1: the full graph admits no proper coloring.
    pub claim1_not_colorable: bool,
    /// Claim 2: the top-level Hall inequality, as (sum, |V|, margin).
    pub claim2_sum: i64,
    pub claim2_vertices: usize,
    pub claim2_margin: i64,
    /// Claim 3: per-vertex colorability of each single-vertex deletion.
    pub claim3_vertex_deleted: Vec<(usize, bool)>,
    /// Overall Hall audit: shortcut when all deletions are colorable,
    /// exhaustive otherwise.
    pub hall_overall: HallReport,
    pub anomalies: Vec<Anomaly>,
}

impl ClaimReport {
    pub fn claim2_holds(&self) -> bool {
        self.claim2_margin >= 0
    }

    pub fn claim3_all_colorable(&self) -> bool {
        self.claim3_vertex_deleted.iter().all(|&(_, ok)| ok)
    }
}

/// Re-derives every claim of a construction from the solver and the Hall
/// checkers. Nothing is trusted: claim 1 is a full search, claim 2 evaluates
/// the inequality, claim 3 solves every deletion, and the overall audit falls
/// back to the exhaustive method whenever the shortcut would be inconclusive.
pub fn verify_construction(spec: &ConstructionSpec) -> Result<ClaimReport> {
    let (g, l) = spec.resolve()?;
    let n = g.vertex_count();
    let full = g.full_set();

    let claim1_not_colorable = !solver::find_coloring(&l).colorable;
    let (_, margin) = hall::hall_inequality(&l, full)?;

    let claim3: Vec<(usize, bool)> = (0..n)
        .into_par_iter()
        .map(|v| {
            (
                v,
                solver::find_coloring_within(&l, full.without(v)).colorable,
            )
        })
        .collect();

    let anomalies: Vec<Anomaly> = claim3
        .iter()
        .filter(|&&(_, ok)| !ok)
        .map(|&(v, _)| Anomaly {
            vertex: v,
            label: g.label(v),
            note: format!(
                "deleting {} leaves a subgraph with no proper coloring",
                g.label(v)
            ),
        })
        .collect();

    let hall_overall = if anomalies.is_empty() {
        match hall::check_hall_shortcut(&l, solver::find_coloring_within)? {
            ShortcutCheck::Satisfied(report) => report,
            ShortcutCheck::TopLevelViolated(report) => report,
            ShortcutCheck::Inconclusive { .. } => {
                unreachable!("all deletions colorable yet shortcut inconclusive")
            }
        }
    } else {
        hall::check_hall_exhaustive(&l)?
    };

    Ok(ClaimReport {
        construction: spec.clone(),
        claim1_not_colorable,
        claim2_sum: margin + n as i64,
        claim2_vertices: n,
        claim2_margin: margin,
        claim3_vertex_deleted: claim3,
        hall_overall,
        anomalies,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn figure1_shape() {
        let (g, l) = figure1().unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(l.list_size(1), 1); // L(v1) = {c}
        assert_eq!(l.palette().names(), &["a", "b", "c"]);
        assert!(g.has_edge(0, 2) && g.has_edge(0, 3)); // u1-u2, u1-v2
        assert!(!g.has_edge(0, 1)); // u1-v1 share a part
    }

    #[test]
    fn theorem3_shape() {
        assert!(theorem3(2).is_err());
        let (g, l) = theorem3(3).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(l.min_list_size(), 2);
        assert_eq!(l.max_list_size(), 3);
        for k in 3..=6 {
            let (_, l) = theorem3(k).unwrap();
            assert!(l.lists().iter().all(|s| s.len() >= k - 1));
        }
    }

    #[test]
    fn theorem4_shape() {
        assert!(theorem4_odd(4).is_err());
        assert!(theorem4_odd(1).is_err());
        let (g, l) = theorem4_odd(5).unwrap();
        assert_eq!(g.vertex_count(), 12);
        assert!(l.lists().iter().all(|s| s.len() == 4)); // k-1

        let (g, l) = theorem4_k3().unwrap();
        assert_eq!(g.vertex_count(), 8);
        assert_eq!(l.min_list_size(), 2); // k-1 at k=3
    }

    #[test]
    fn spec_resolution_errors() {
        assert!(ConstructionSpec::new(ConstructionName::Theorem3, None)
            .resolve()
            .is_err());
        assert!(ConstructionSpec::new(ConstructionName::Figure1, Some(3))
            .resolve()
            .is_err());
        assert_eq!(
            "theorem4-odd".parse::<ConstructionName>().unwrap(),
            ConstructionName::Theorem4Odd
        );
        assert!("nonsense".parse::<ConstructionName>().is_err());
    }
}
