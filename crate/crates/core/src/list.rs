//! List assignments: per-vertex finite color sets over a shared palette.
//!
//! Colors are interned symbols. Equality is by palette index; the display
//! name (including the ordinary token `"0"`) is cosmetic. The palette of an
//! assignment is always exactly the union of its lists, recomputed at
//! construction rather than trusted.

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use std::fmt;

/// Hard cap on palette size; color sets are stored in `u128` bitsets.
pub const MAX_COLORS: usize = 128;

/// An interned color: an index into one assignment's palette.
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColorId(pub usize);

impl fmt::Debug for ColorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "c#{}", self.0)
    }
}

/// A set of colors from one palette, stored as a bitmask.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Default)]
pub struct ColorSet(u128);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);

    pub fn from_bits(bits: u128) -> Self {
        ColorSet(bits)
    }

    pub fn bits(self) -> u128 {
        self.0
    }

    pub fn contains(self, c: ColorId) -> bool {
        c.0 < MAX_COLORS && self.0 & (1u128 << c.0) != 0
    }

    pub fn with(self, c: ColorId) -> Self {
        ColorSet(self.0 | (1u128 << c.0))
    }

    pub fn without(self, c: ColorId) -> Self {
        ColorSet(self.0 & !(1u128 << c.0))
    }

    pub fn union(self, other: ColorSet) -> Self {
        ColorSet(self.0 | other.0)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Iterates colors in ascending palette order.
    pub fn iter(self) -> impl Iterator<Item = ColorId> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let c = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(ColorId(c))
            }
        })
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|c| c.0)).finish()
    }
}

/// An ordered set of color names. Index order is first-appearance order and
/// doubles as the deterministic value order of the solver.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Palette {
    names: Vec<String>,
}

impl Palette {
    pub fn new() -> Self {
        Palette::default()
    }

    /// Interns a name, returning the existing id when already present.
    pub fn intern(&mut self, name: &str) -> Result<ColorId> {
        if let Some(idx) = self.names.iter().position(|n| n == name) {
            return Ok(ColorId(idx));
        }
        if self.names.len() == MAX_COLORS {
            return Err(Error::Capability {
                what: "palette",
                limit: MAX_COLORS,
                actual: MAX_COLORS + 1,
            });
        }
        self.names.push(name.to_string());
        Ok(ColorId(self.names.len() - 1))
    }

    pub fn id_of(&self, name: &str) -> Option<ColorId> {
        self.names.iter().position(|n| n == name).map(ColorId)
    }

    pub fn name(&self, c: ColorId) -> &str {
        &self.names[c.0]
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn ids(&self) -> impl Iterator<Item = ColorId> {
        (0..self.names.len()).map(ColorId)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }
}

/// A list assignment to a specific graph: one finite (possibly empty) color
/// set per vertex.
#[derive(Clone, PartialEq, Debug)]
pub struct ListAssignment {
    graph: Graph,
    palette: Palette,
    lists: Vec<ColorSet>,
}

impl ListAssignment {
    /// Builds an assignment from per-vertex lists of color names. The palette
    /// is the union of the lists in first-appearance order (vertex-major).
    pub fn new<S: AsRef<str>>(graph: Graph, lists: &[Vec<S>]) -> Result<Self> {
        if lists.len() != graph.vertex_count() {
            return Err(Error::InvalidArgument(format!(
                "{} lists given for a graph on {} vertices",
                lists.len(),
                graph.vertex_count()
            )));
        }
        let mut palette = Palette::new();
        let mut masks = Vec::with_capacity(lists.len());
        for names in lists {
            let mut set = ColorSet::EMPTY;
            for name in names {
                set = set.with(palette.intern(name.as_ref())?);
            }
            masks.push(set);
        }
        Ok(ListAssignment {
            graph,
            palette,
            lists: masks,
        })
    }

    /// Builds an assignment from pre-interned masks. The palette must be
    /// exactly the union of the lists; unused palette entries are rejected so
    /// that a stated palette can never drift from the recomputed one.
    pub fn from_masks(graph: Graph, palette: Palette, lists: Vec<ColorSet>) -> Result<Self> {
        if lists.len() != graph.vertex_count() {
            return Err(Error::InvalidArgument(format!(
                "{} lists given for a graph on {} vertices",
                lists.len(),
                graph.vertex_count()
            )));
        }
        let mut union = ColorSet::EMPTY;
        for set in &lists {
            union = union.union(*set);
        }
        let expected = if palette.is_empty() {
            0u128
        } else {
            (1u128 << palette.len()) - 1
        };
        if union.bits() != expected {
            return Err(Error::InvalidArgument(
                "palette is not exactly the union of the lists".into(),
            ));
        }
        Ok(ListAssignment {
            graph,
            palette,
            lists,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn palette(&self) -> &Palette {
        &self.palette
    }

    pub fn lists(&self) -> &[ColorSet] {
        &self.lists
    }

    pub fn list(&self, v: usize) -> ColorSet {
        self.lists[v]
    }

    pub fn list_size(&self, v: usize) -> usize {
        self.lists[v].len()
    }

    pub fn min_list_size(&self) -> usize {
        self.lists.iter().map(|l| l.len()).min().unwrap_or(0)
    }

    pub fn max_list_size(&self) -> usize {
        self.lists.iter().map(|l| l.len()).max().unwrap_or(0)
    }

    /// The support of a color: all vertices whose list contains it.
    pub fn support(&self, c: ColorId) -> VertexSet {
        let mut s = VertexSet::EMPTY;
        for (v, list) in self.lists.iter().enumerate() {
            if list.contains(c) {
                s = s.with(v);
            }
        }
        s
    }

    /// Color names of one list, in palette order.
    pub fn list_names(&self, v: usize) -> Vec<&str> {
        self.lists[v].iter().map(|c| self.palette.name(c)).collect()
    }
}
