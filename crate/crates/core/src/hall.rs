//! Hall's condition for list assignments.
//!
//! For an induced subgraph H and a color c, the support subgraph H_c is the
//! subgraph of H induced by the vertices whose lists contain c. The
//! assignment satisfies Hall's condition when, for every induced subgraph H,
//! the independence numbers of the support subgraphs sum to at least |V(H)|.
//!
//! Two checkers are provided: an exhaustive audit over every vertex subset,
//! and the shortcut that solves each single-vertex-deleted subgraph and tests
//! the top-level inequality only. The shortcut is a sufficient route: when
//! some deletion is not colorable it is inconclusive, never a refutation.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::list::{ColorId, ColorSet, ListAssignment};
use crate::solver::{Coloring, SolveOutcome};

/// Largest graph the exhaustive audit will take on (2^n subsets).
pub const EXHAUSTIVE_LIMIT: usize = 16;

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum HallMethod {
    Exhaustive,
    RemarkShortcut,
}

/// Proper colorings of the single-vertex-deleted subgraphs, plus the margin
/// of the top-level inequality, as produced by the shortcut checker.
#[derive(Clone, Debug)]
pub struct ShortcutEvidence {
    /// One entry per vertex: the deleted vertex and a proper coloring of the rest.
    pub deleted_vertex_colorings: Vec<(usize, Coloring)>,
    pub top_level_margin: i64,
}

/// Outcome of a Hall's-condition audit.
#[derive(Clone, Debug)]
pub struct HallReport {
    pub method: HallMethod,
    pub satisfied: bool,
    /// Minimum margin over all audited subsets (just the full vertex set for
    /// the shortcut method).
    pub worst_margin: i64,
    /// A subset achieving the worst margin; ties broken by smallest bitmask.
    pub witness: VertexSet,
    pub shortcut_evidence: Option<ShortcutEvidence>,
}

/// Three-valued verdict of the shortcut checker.
#[derive(Clone, Debug)]
pub enum ShortcutCheck {
    Satisfied(HallReport),
    /// The top-level inequality fails on the full vertex set, which is itself
    /// an induced subgraph, so Hall's condition is definitively violated.
    TopLevelViolated(HallReport),
    /// Some deleted subgraph is not colorable; the shortcut cannot decide and
    /// an exhaustive audit is required.
    Inconclusive {
        blocking_vertex: usize,
    },
}

/// The set of vertices of `h` whose lists contain `color`.
pub fn support_set(assignment: &ListAssignment, h: VertexSet, color: ColorId) -> VertexSet {
    assignment.support(color).intersect(h)
}

/// The subgraph of `h` induced by the support of `color`; the null graph when
/// the color appears in no list of `h`.
pub fn support_subgraph(
    assignment: &ListAssignment,
    h: VertexSet,
    color: ColorId,
) -> Result<Graph> {
    check_subset(assignment.graph(), h)?;
    assignment
        .graph()
        .induced_subgraph(support_set(assignment, h, color))
}

/// Evaluates the Hall inequality on one vertex subset: the sum over palette
/// colors of the independence numbers of the support subgraphs, minus |h|.
/// Empty `h` has margin 0 and holds.
pub fn hall_inequality(assignment: &ListAssignment, h: VertexSet) -> Result<(bool, i64)> {
    check_subset(assignment.graph(), h)?;
    let mut sum = 0i64;
    for color in assignment.palette().ids() {
        let support = support_set(assignment, h, color);
        let sub = assignment.graph().induced_subgraph(support)?;
        sum += sub.independence_number() as i64;
    }
    let margin = sum - h.len() as i64;
    Ok((margin >= 0, margin))
}

fn check_subset(g: &Graph, h: VertexSet) -> Result<()> {
    if !h.is_subset_of(g.full_set()) {
        return Err(Error::InvalidArgument(format!(
            "vertex set {h:?} is not a subset of a {}-vertex graph",
            g.vertex_count()
        )));
    }
    Ok(())
}

/// Per-color table of independence numbers: `table[m]` is the independence
/// number of the subgraph induced by `m ∩ support`. Memoizes every subset of
/// the support once, by subset dynamic programming.
fn alpha_table(graph: &Graph, support: VertexSet) -> Vec<u8> {
    let n = graph.vertex_count();
    let size = 1usize << n;
    let supp = support.bits();
    let mut table = vec![0u8; size];
    let closed: Vec<u64> = (0..n)
        .map(|v| (graph.neighbors(v).bits() | (1u64 << v)) & supp)
        .collect();
    for mask in 1..size {
        let m = mask as u64;
        let s = m & supp;
        if s != m {
            table[mask] = table[s as usize];
            continue;
        }
        let v = m.trailing_zeros() as usize;
        let skip = table[(m & !(1u64 << v)) as usize];
        let take = 1 + table[(m & !closed[v]) as usize];
        table[mask] = skip.max(take);
    }
    table
}

pub(crate) struct ExhaustiveAudit {
    tables: Vec<Vec<u8>>,
    n: usize,
}

impl ExhaustiveAudit {
    pub(crate) fn prepare(graph: &Graph, lists: &[ColorSet], palette_len: usize) -> Result<Self> {
        let n = graph.vertex_count();
        if n > EXHAUSTIVE_LIMIT {
            return Err(Error::Capability {
                what: "exhaustive Hall audit",
                limit: EXHAUSTIVE_LIMIT,
                actual: n,
            });
        }
        let tables = (0..palette_len)
            .map(|c| {
                let mut support = VertexSet::EMPTY;
                for (v, list) in lists.iter().enumerate() {
                    if list.contains(ColorId(c)) {
                        support = support.with(v);
                    }
                }
                alpha_table(graph, support)
            })
            .collect();
        Ok(ExhaustiveAudit { tables, n })
    }

    fn margin(&self, mask: usize) -> i64 {
        let mut sum = 0i64;
        for table in &self.tables {
            sum += table[mask] as i64;
        }
        sum - (mask as u64).count_ones() as i64
    }

    pub(crate) fn run(&self) -> HallReport {
        let mut worst = (i64::MAX, 0usize);
        for mask in 0..(1usize << self.n) {
            let margin = self.margin(mask);
            if margin < worst.0 {
                worst = (margin, mask);
            }
        }
        HallReport {
            method: HallMethod::Exhaustive,
            satisfied: worst.0 >= 0,
            worst_margin: worst.0,
            witness: VertexSet::from_bits(worst.1 as u64),
            shortcut_evidence: None,
        }
    }
}

/// Audits the Hall inequality on every vertex subset. Satisfied exactly when
/// every margin is nonnegative; the witness is a subset of minimum margin,
/// ties broken by smallest bitmask.
pub fn check_hall_exhaustive(assignment: &ListAssignment) -> Result<HallReport> {
    check_hall_exhaustive_masks(
        assignment.graph(),
        assignment.lists(),
        assignment.palette().len(),
    )
}

/// Mask-level entry point shared with the enumeration searches.
pub(crate) fn check_hall_exhaustive_masks(
    graph: &Graph,
    lists: &[ColorSet],
    palette_len: usize,
) -> Result<HallReport> {
    Ok(ExhaustiveAudit::prepare(graph, lists, palette_len)?.run())
}

/// The shortcut check: if every single-vertex-deleted subgraph is properly
/// colorable and the full vertex set satisfies the inequality, Hall's
/// condition holds. `solve` is the coloring oracle used for the deletions.
pub fn check_hall_shortcut<F>(assignment: &ListAssignment, solve: F) -> Result<ShortcutCheck>
where
    F: Fn(&ListAssignment, VertexSet) -> SolveOutcome,
{
    let g = assignment.graph();
    let full = g.full_set();
    let (_, top_margin) = hall_inequality(assignment, full)?;
    if top_margin < 0 {
        return Ok(ShortcutCheck::TopLevelViolated(HallReport {
            method: HallMethod::RemarkShortcut,
            satisfied: false,
            worst_margin: top_margin,
            witness: full,
            shortcut_evidence: None,
        }));
    }
    let mut colorings = Vec::with_capacity(g.vertex_count());
    for v in 0..g.vertex_count() {
        let outcome = solve(assignment, full.without(v));
        match outcome.coloring {
            Some(c) if outcome.colorable => colorings.push((v, c)),
            _ => return Ok(ShortcutCheck::Inconclusive { blocking_vertex: v }),
        }
    }
    Ok(ShortcutCheck::Satisfied(HallReport {
        method: HallMethod::RemarkShortcut,
        satisfied: true,
        worst_margin: top_margin,
        witness: full,
        shortcut_evidence: Some(ShortcutEvidence {
            deleted_vertex_colorings: colorings,
            top_level_margin: top_margin,
        }),
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver;

    fn two_vertices_one_color() -> ListAssignment {
        let g = Graph::complete_multipartite(&[1, 1]).unwrap();
        ListAssignment::new(g, &[vec!["x"], vec!["x"]]).unwrap()
    }

    #[test]
    fn unknown_color_has_null_support() {
        let l = two_vertices_one_color();
        let sub = support_subgraph(&l, l.graph().full_set(), ColorId(0)).unwrap();
        assert_eq!(sub.vertex_count(), 2);
        // A color with empty support yields the null graph; simulate by
        // restricting to the empty subset.
        let sub = support_subgraph(&l, VertexSet::EMPTY, ColorId(0)).unwrap();
        assert_eq!(sub.vertex_count(), 0);
        assert_eq!(sub.independence_number(), 0);
    }

    #[test]
    fn adjacent_singletons_violate() {
        let l = two_vertices_one_color();
        let report = check_hall_exhaustive(&l).unwrap();
        assert!(!report.satisfied);
        assert_eq!(report.worst_margin, -1);
        assert_eq!(report.witness, VertexSet::from_indices(&[0, 1]));
    }

    #[test]
    fn empty_subset_margin_is_zero() {
        let l = two_vertices_one_color();
        let (holds, margin) = hall_inequality(&l, VertexSet::EMPTY).unwrap();
        assert!(holds);
        assert_eq!(margin, 0);
    }

    #[test]
    fn singleton_margin_tracks_list_size() {
        let g = Graph::edgeless(2).unwrap();
        let l = ListAssignment::new(g, &[vec!["a", "b"], Vec::<&str>::new()]).unwrap();
        let (holds, margin) = hall_inequality(&l, VertexSet::singleton(0)).unwrap();
        assert!(holds);
        assert_eq!(margin, 1); // |L(v)| - 1
        let (holds, margin) = hall_inequality(&l, VertexSet::singleton(1)).unwrap();
        assert!(!holds);
        assert_eq!(margin, -1); // empty list

        // An empty list also sinks the exhaustive audit via that singleton.
        let report = check_hall_exhaustive(&l).unwrap();
        assert!(!report.satisfied);
        assert_eq!(report.witness, VertexSet::singleton(1));
    }

    #[test]
    fn exhaustive_capability_limit() {
        let g = Graph::edgeless(17).unwrap();
        let lists: Vec<Vec<&str>> = (0..17).map(|_| vec!["a"]).collect();
        let l = ListAssignment::new(g, &lists).unwrap();
        assert!(matches!(
            check_hall_exhaustive(&l),
            Err(Error::Capability { .. })
        ));
    }

    #[test]
    fn shortcut_three_values() {
        // Satisfied on a trivially colorable instance.
        let g = Graph::complete_multipartite(&[1, 1]).unwrap();
        let l = ListAssignment::new(g, &[vec!["a"], vec!["b"]]).unwrap();
        match check_hall_shortcut(&l, solver::find_coloring_within).unwrap() {
            ShortcutCheck::Satisfied(report) => {
                assert_eq!(report.method, HallMethod::RemarkShortcut);
                let ev = report.shortcut_evidence.unwrap();
                assert_eq!(ev.deleted_vertex_colorings.len(), 2);
            }
            other => panic!("expected satisfied, got {other:?}"),
        }

        // Top-level violation on two adjacent vertices sharing one color.
        let l = two_vertices_one_color();
        match check_hall_shortcut(&l, solver::find_coloring_within).unwrap() {
            ShortcutCheck::TopLevelViolated(report) => {
                assert!(!report.satisfied);
                assert_eq!(report.worst_margin, -1);
            }
            other => panic!("expected top-level violation, got {other:?}"),
        }

        // Inconclusive when a deletion is uncolorable but the top level holds:
        // one isolated vertex with an empty list next to a rich instance.
        let g = Graph::edgeless(2).unwrap();
        let l = ListAssignment::new(g, &[vec!["a", "b"], Vec::<&str>::new()]).unwrap();
        match check_hall_shortcut(&l, solver::find_coloring_within).unwrap() {
            ShortcutCheck::Inconclusive { blocking_vertex } => {
                assert_eq!(blocking_vertex, 0); // deleting 0 leaves the empty list
            }
            other => panic!("expected inconclusive, got {other:?}"),
        }
    }
}
