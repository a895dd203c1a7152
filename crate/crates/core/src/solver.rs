//! Deciding and constructing proper list colorings.
//!
//! The general engine is deterministic backtracking with forward checking:
//! the next vertex is always the one with the fewest live colors (ties by
//! index) and colors are tried in palette order. Complete graphs get a
//! matching-based fast path, since a proper list coloring of a clique is
//! exactly a system of distinct representatives of the lists.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::list::{ColorId, ColorSet, ListAssignment, MAX_COLORS};

/// A partial or total vertex-to-color map.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Coloring {
    slots: Vec<Option<ColorId>>,
}

impl Coloring {
    pub fn empty(n: usize) -> Self {
        Coloring {
            slots: vec![None; n],
        }
    }

    pub fn from_slots(slots: Vec<Option<ColorId>>) -> Self {
        Coloring { slots }
    }

    pub fn get(&self, v: usize) -> Option<ColorId> {
        self.slots.get(v).copied().flatten()
    }

    pub fn set(&mut self, v: usize, c: ColorId) {
        self.slots[v] = Some(c);
    }

    pub fn len(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    pub fn is_total_on(&self, set: VertexSet) -> bool {
        set.iter().all(|v| self.slots[v].is_some())
    }

    /// Assigned pairs in vertex order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, ColorId)> + '_ {
        self.slots
            .iter()
            .enumerate()
            .filter_map(|(v, c)| c.map(|c| (v, c)))
    }
}

/// Outcome of a complete search for a proper list coloring.
#[derive(Clone, Debug)]
pub struct SolveOutcome {
    pub colorable: bool,
    pub coloring: Option<Coloring>,
    pub nodes_explored: u64,
}

/// Checks that a total coloring respects the lists and the edges.
/// Partial colorings are rejected rather than judged.
pub fn verify_coloring(assignment: &ListAssignment, coloring: &Coloring) -> Result<bool> {
    let g = assignment.graph();
    if coloring.len() != g.vertex_count() || !coloring.is_total_on(g.full_set()) {
        return Err(Error::InvalidArgument(
            "verify_coloring requires a coloring that is total on the vertex set".into(),
        ));
    }
    Ok(coloring_is_proper_within(
        assignment,
        g.full_set(),
        coloring,
    ))
}

/// The same check restricted to a vertex subset (vertices outside `set` are
/// ignored entirely).
pub fn coloring_is_proper_within(
    assignment: &ListAssignment,
    set: VertexSet,
    coloring: &Coloring,
) -> bool {
    let g = assignment.graph();
    for v in set.iter() {
        let Some(c) = coloring.get(v) else {
            return false;
        };
        if !assignment.list(v).contains(c) {
            return false;
        }
        for w in g.neighbors(v).intersect(set).iter() {
            if w > v && coloring.get(w) == Some(c) {
                return false;
            }
        }
    }
    true
}

/// Searches for a proper list coloring of the whole graph.
pub fn find_coloring(assignment: &ListAssignment) -> SolveOutcome {
    find_coloring_within(assignment, assignment.graph().full_set())
}

/// Searches for a proper list coloring of the subgraph induced by `set`,
/// reported in the original vertex indices.
pub fn find_coloring_within(assignment: &ListAssignment, set: VertexSet) -> SolveOutcome {
    solve_masks(assignment.graph(), assignment.lists(), set)
}

/// Core engine over raw list masks; shared by the public entry points and by
/// the enumeration searches, which avoid materializing palettes per candidate.
pub(crate) fn solve_masks(graph: &Graph, lists: &[ColorSet], set: VertexSet) -> SolveOutcome {
    debug_assert_eq!(lists.len(), graph.vertex_count());
    let mut state = Searcher {
        graph,
        set,
        live: lists.to_vec(),
        assigned: vec![None; graph.vertex_count()],
        nodes: 0,
    };
    let found = state.solve();
    SolveOutcome {
        colorable: found,
        coloring: found.then(|| Coloring::from_slots(state.assigned)),
        nodes_explored: state.nodes,
    }
}

struct Searcher<'a> {
    graph: &'a Graph,
    set: VertexSet,
    live: Vec<ColorSet>,
    assigned: Vec<Option<ColorId>>,
    nodes: u64,
}

impl Searcher<'_> {
    fn pick_vertex(&self) -> Option<usize> {
        let mut best: Option<(usize, usize)> = None;
        for v in self.set.iter() {
            if self.assigned[v].is_some() {
                continue;
            }
            let count = self.live[v].len();
            match best {
                Some((bc, _)) if bc <= count => {}
                _ => best = Some((count, v)),
            }
        }
        best.map(|(_, v)| v)
    }

    fn solve(&mut self) -> bool {
        let Some(v) = self.pick_vertex() else {
            return true; // everything in `set` is colored
        };
        let choices = self.live[v];
        for color in choices.iter() {
            self.nodes += 1;
            self.assigned[v] = Some(color);
            // Forward check: drop the color from unassigned neighbors.
            let mut touched = VertexSet::EMPTY;
            let mut dead_end = false;
            for w in self.graph.neighbors(v).intersect(self.set).iter() {
                if self.assigned[w].is_none() && self.live[w].contains(color) {
                    self.live[w] = self.live[w].without(color);
                    touched = touched.with(w);
                    if self.live[w].is_empty() {
                        dead_end = true;
                    }
                }
            }
            if !dead_end && self.solve() {
                return true;
            }
            for w in touched.iter() {
                self.live[w] = self.live[w].with(color);
            }
            self.assigned[v] = None;
        }
        false
    }
}

/// Finds a system of distinct representatives of the given sets via
/// augmenting-path bipartite matching, or reports that none exists.
pub fn find_sdr(sets: &[ColorSet]) -> Option<Vec<ColorId>> {
    let mut owner: Vec<Option<usize>> = vec![None; MAX_COLORS];
    let mut rep: Vec<Option<ColorId>> = vec![None; sets.len()];

    fn augment(
        i: usize,
        sets: &[ColorSet],
        owner: &mut [Option<usize>],
        rep: &mut [Option<ColorId>],
        visited: &mut [bool],
    ) -> bool {
        for c in sets[i].iter() {
            if visited[c.0] {
                continue;
            }
            visited[c.0] = true;
            let free = match owner[c.0] {
                None => true,
                Some(j) => augment(j, sets, owner, rep, visited),
            };
            if free {
                owner[c.0] = Some(i);
                rep[i] = Some(c);
                return true;
            }
        }
        false
    }

    for i in 0..sets.len() {
        let mut visited = vec![false; MAX_COLORS];
        if !augment(i, sets, &mut owner, &mut rep, &mut visited) {
            return None;
        }
    }
    Some(rep.into_iter().map(|r| r.expect("matched")).collect())
}

/// Decides proper list colorability of a complete graph by delegating to the
/// matching fast path.
pub fn colorable_complete(assignment: &ListAssignment) -> Result<bool> {
    if !assignment.graph().is_complete() {
        return Err(Error::InvalidArgument(
            "colorable_complete requires a complete graph".into(),
        ));
    }
    Ok(find_sdr(assignment.lists()).is_some())
}
