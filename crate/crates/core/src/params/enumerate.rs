//! Canonical enumeration of list assignments up to color renaming.
//!
//! An assignment with an arbitrary palette is determined, up to renaming of
//! colors, by the multiset of its color classes: for each color, the set of
//! vertices whose list contains it. We therefore enumerate multisets of
//! nonempty vertex subsets under a coverage constraint (how many classes
//! contain each vertex, which is exactly that vertex's list size).
//!
//! Classes are ordered by (size descending, bitmask ascending); assignments
//! are generated as non-decreasing sequences in that order, so every multiset
//! appears exactly once and the whole stream is lexicographic. The first
//! counterexample a sequential sweep reports is therefore the canonically
//! least one.

use crate::graph::VertexSet;
use crate::params::Budget;

/// Why an enumeration stopped.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum EnumOutcome {
    /// Every assignment in the level was visited.
    Completed,
    /// The visitor asked to stop (typically: counterexample found).
    StoppedByVisitor,
    /// The budget ran out mid-level; the sweep is incomplete.
    BudgetExhausted,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Visit {
    Continue,
    Stop,
}

/// Coverage constraint for one level of the search.
#[derive(Copy, Clone, PartialEq, Eq, Debug)]
pub enum Level {
    /// Every vertex is covered exactly `size` times (all lists of that size).
    Exact { size: usize },
    /// Every vertex is covered `floor` or `floor + 1` times, with at least
    /// one vertex at `floor` (pure floor+1 multisets belong to the exact
    /// level above and are not revisited).
    Mixed { floor: usize },
}

impl Level {
    pub fn describe(&self) -> String {
        match self {
            Level::Exact { size } => format!("all lists of size {size}"),
            Level::Mixed { floor } => {
                format!("lists of sizes {floor} and {} mixed", floor + 1)
            }
        }
    }

    fn cap(&self) -> usize {
        match self {
            Level::Exact { size } => *size,
            Level::Mixed { floor } => floor + 1,
        }
    }

    fn is_emittable(&self, coverage: &[usize]) -> bool {
        match self {
            Level::Exact { size } => coverage.iter().all(|&c| c == *size),
            Level::Mixed { floor } => {
                coverage.iter().all(|&c| c == *floor || c == *floor + 1) && coverage.contains(floor)
            }
        }
    }
}

/// All nonempty subsets of `0..n` in canonical class order.
fn canonical_classes(n: usize) -> Vec<u64> {
    let mut classes: Vec<u64> = (1..(1u64 << n)).collect();
    classes.sort_by_key(|&m| (std::cmp::Reverse(m.count_ones()), m));
    classes
}

struct Enumerator<'a, F: FnMut(&[u64]) -> Visit> {
    classes: Vec<u64>,
    /// For each vertex, the largest class index containing it (its singleton).
    last_index_of: Vec<usize>,
    level: Level,
    n: usize,
    budget: &'a mut Budget,
    visit: F,
    chosen: Vec<u64>,
    coverage: Vec<usize>,
}

impl<F: FnMut(&[u64]) -> Visit> Enumerator<'_, F> {
    fn run(&mut self) -> EnumOutcome {
        if self.n == 0 {
            // The unique assignment on the null graph is the empty multiset.
            return match (self.visit)(&[]) {
                Visit::Stop => EnumOutcome::StoppedByVisitor,
                Visit::Continue => EnumOutcome::Completed,
            };
        }
        self.descend(0)
    }

    fn descend(&mut self, start: usize) -> EnumOutcome {
        if !self.budget.try_consume(1) {
            return EnumOutcome::BudgetExhausted;
        }
        if !self.chosen.is_empty() && self.level.is_emittable(&self.coverage) {
            if !self.budget.try_consume(1) {
                return EnumOutcome::BudgetExhausted;
            }
            if (self.visit)(&self.chosen) == Visit::Stop {
                return EnumOutcome::StoppedByVisitor;
            }
        }
        let cap = self.level.cap();
        // Any vertex short of coverage must still be reachable from classes
        // at or after `start`.
        for v in 0..self.n {
            if self.coverage[v] < self.min_needed(v) && self.last_index_of[v] < start {
                return EnumOutcome::Completed;
            }
        }
        for idx in start..self.classes.len() {
            let class = self.classes[idx];
            // A class may only cover vertices that still have room.
            let usable = VertexSet::from_bits(class)
                .iter()
                .all(|v| self.coverage[v] < cap);
            if !usable {
                continue;
            }
            self.chosen.push(class);
            for v in VertexSet::from_bits(class).iter() {
                self.coverage[v] += 1;
            }
            let outcome = self.descend(idx);
            for v in VertexSet::from_bits(class).iter() {
                self.coverage[v] -= 1;
            }
            self.chosen.pop();
            if outcome != EnumOutcome::Completed {
                return outcome;
            }
        }
        EnumOutcome::Completed
    }

    fn min_needed(&self, _v: usize) -> usize {
        match self.level {
            Level::Exact { size } => size,
            Level::Mixed { floor } => floor,
        }
    }
}

/// Enumerates every canonical assignment of the given level on `n` vertices,
/// invoking `visit` with the class multiset (classes as vertex bitmasks, one
/// implicit color per class, vertex v's list = classes containing v).
pub fn enumerate_level<F>(n: usize, level: Level, budget: &mut Budget, visit: F) -> EnumOutcome
where
    F: FnMut(&[u64]) -> Visit,
{
    let classes = canonical_classes(n);
    let mut last_index_of = vec![0usize; n];
    for (idx, &class) in classes.iter().enumerate() {
        for v in VertexSet::from_bits(class).iter() {
            last_index_of[v] = last_index_of[v].max(idx);
        }
    }
    let mut e = Enumerator {
        classes,
        last_index_of,
        level,
        n,
        budget,
        visit,
        chosen: Vec::new(),
        coverage: vec![0; n],
    };
    e.run()
}

/// Counts the assignments of a level (used by tests and enumeration records).
pub fn count_level(n: usize, level: Level, budget: &mut Budget) -> Option<u64> {
    let mut count = 0u64;
    let outcome = enumerate_level(n, level, budget, |_| {
        count += 1;
        Visit::Continue
    });
    (outcome == EnumOutcome::Completed).then_some(count)
}
