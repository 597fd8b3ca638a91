//! Quivers, paths, relations and sinking vertex sets.
//!
//! Vertices are `1..=n`. Arrows are identified by name, so parallel arrows
//! are allowed.

use std::collections::{BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::exactmath::{FieldSpec, Scalar};

/// A set of vertices, ordered for deterministic output.
pub type VertexSet = BTreeSet<usize>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    n_vertices: usize,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(n_vertices: usize, arrows: Vec<Arrow>) -> Result<Self> {
        if n_vertices == 0 {
            return Err(Error::InvalidQuiver("a quiver needs at least one vertex".into()));
        }
        let mut seen = HashSet::new();
        for a in &arrows {
            if !(1..=n_vertices).contains(&a.source) || !(1..=n_vertices).contains(&a.target) {
                return Err(Error::InvalidQuiver(format!(
                    "arrow {} has an endpoint outside 1..={n_vertices}",
                    a.name
                )));
            }
            if a.name.is_empty() || a.name.contains(|c: char| c.is_whitespace() || c == '.') {
                return Err(Error::InvalidQuiver(format!("bad arrow name `{}`", a.name)));
            }
            if !seen.insert(a.name.as_str()) {
                return Err(Error::InvalidQuiver(format!("duplicate arrow name {}", a.name)));
            }
        }
        Ok(Quiver { n_vertices, arrows })
    }

    /// Shorthand for `(name, source, target)` triples.
    pub fn from_triples(n_vertices: usize, arrows: &[(&str, usize, usize)]) -> Result<Self> {
        Quiver::new(
            n_vertices,
            arrows
                .iter()
                .map(|&(name, source, target)| Arrow {
                    name: name.to_string(),
                    source,
                    target,
                })
                .collect(),
        )
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        1..=self.n_vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn arrow(&self, name: &str) -> Option<&Arrow> {
        self.arrows.iter().find(|a| a.name == name)
    }

    pub fn out_arrows(&self, v: usize) -> impl Iterator<Item = (usize, &Arrow)> {
        self.arrows.iter().enumerate().filter(move |(_, a)| a.source == v)
    }

    pub fn in_arrows(&self, v: usize) -> impl Iterator<Item = (usize, &Arrow)> {
        self.arrows.iter().enumerate().filter(move |(_, a)| a.target == v)
    }

    pub fn sinks(&self) -> VertexSet {
        self.vertices()
            .filter(|&v| self.out_arrows(v).next().is_none())
            .collect()
    }

    /// Kahn's algorithm; `None` when there is an oriented cycle.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let mut indeg = vec![0usize; self.n_vertices + 1];
        for a in &self.arrows {
            indeg[a.target] += 1;
        }
        let mut ready: BTreeSet<usize> = self.vertices().filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(self.n_vertices);
        while let Some(v) = ready.pop_first() {
            order.push(v);
            for (_, a) in self.out_arrows(v) {
                indeg[a.target] -= 1;
                if indeg[a.target] == 0 {
                    ready.insert(a.target);
                }
            }
        }
        (order.len() == self.n_vertices).then_some(order)
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }

    /// Smallest vertex set containing `v` and closed under following arrows.
    pub fn reachable(&self, v: usize) -> VertexSet {
        let mut seen = VertexSet::new();
        let mut stack = vec![v];
        while let Some(u) = stack.pop() {
            if seen.insert(u) {
                stack.extend(self.out_arrows(u).map(|(_, a)| a.target));
            }
        }
        seen
    }

    pub fn minimal_sinking(&self, v: usize) -> VertexSet {
        self.reachable(v)
    }

    /// Whether every arrow starting in `set` also ends in it.
    pub fn is_sinking(&self, set: &VertexSet) -> bool {
        self.arrows
            .iter()
            .all(|a| !set.contains(&a.source) || set.contains(&a.target))
    }

    pub fn sinking_union<'a>(&self, sets: impl IntoIterator<Item = &'a VertexSet>) -> VertexSet {
        sets.into_iter().flatten().copied().collect()
    }

    /// The full subquiver on `set`, relabelled `1..=|set|` in increasing
    /// order; the second component maps new labels (index `i` ↦ vertex
    /// `i+1`) back to the original ones.
    pub fn full_subquiver(&self, set: &VertexSet) -> Result<(Quiver, Vec<usize>)> {
        let old: Vec<usize> = set.iter().copied().collect();
        if let Some(&bad) = old.iter().find(|&&v| v == 0 || v > self.n_vertices) {
            return Err(Error::InvalidQuiver(format!("vertex {bad} is not in the quiver")));
        }
        let new_label = |v: usize| old.iter().position(|&w| w == v).map(|i| i + 1);
        let arrows = self
            .arrows
            .iter()
            .filter_map(|a| {
                Some(Arrow {
                    name: a.name.clone(),
                    source: new_label(a.source)?,
                    target: new_label(a.target)?,
                })
            })
            .collect();
        Ok((Quiver::new(old.len(), arrows)?, old))
    }

    /// Every out-closed vertex set, ordered by size and then
    /// lexicographically. Always starts with `∅` and ends with all vertices.
    pub fn enumerate_sinking_sets(&self) -> Vec<VertexSet> {
        let n = self.n_vertices;
        assert!(n < 25, "sinking-set census is exponential in the vertex count");
        let mut out: Vec<VertexSet> = (0u32..1 << n)
            .map(|mask| {
                (1..=n)
                    .filter(|v| mask >> (v - 1) & 1 == 1)
                    .collect::<VertexSet>()
            })
            .filter(|s| self.is_sinking(s))
            .collect();
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.iter().cmp(b.iter())));
        out
    }
}

/// A nonempty composable arrow sequence, traversed first to last.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Path {
    arrows: Vec<String>,
    source: usize,
    target: usize,
}

impl Path {
    pub fn new(quiver: &Quiver, arrows: Vec<String>) -> Result<Self> {
        let mut it = arrows.iter();
        let first = it
            .next()
            .ok_or_else(|| Error::InvalidRelation("empty path".into()))?;
        let lookup = |name: &str| {
            quiver
                .arrow(name)
                .ok_or_else(|| Error::InvalidRelation(format!("unknown arrow {name}")))
        };
        let source = lookup(first)?.source;
        let mut at = lookup(first)?.target;
        for name in it {
            let a = lookup(name)?;
            if a.source != at {
                return Err(Error::InvalidRelation(format!(
                    "arrow {name} starts at {} but the path is at {at}",
                    a.source
                )));
            }
            at = a.target;
        }
        Ok(Path {
            arrows,
            source,
            target: at,
        })
    }

    /// Parses `a.b.c`.
    pub fn parse(quiver: &Quiver, text: &str) -> Result<Self> {
        Path::new(quiver, text.split('.').map(str::to_string).collect())
    }

    pub fn arrows(&self) -> &[String] {
        &self.arrows
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }
}

impl std::fmt::Display for Path {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.arrows.join("."))
    }
}

/// A linear combination of parallel paths of length at least two.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Relation {
    terms: Vec<(Scalar, Path)>,
}

impl Relation {
    pub fn new(field: FieldSpec, terms: Vec<(Scalar, Path)>) -> Result<Self> {
        let Some((_, first)) = terms.first() else {
            return Err(Error::InvalidRelation("a relation needs at least one term".into()));
        };
        let (s, t) = (first.source(), first.target());
        for (c, p) in &terms {
            if !field.owns(c) {
                return Err(Error::InvalidRelation(format!("coefficient {c} outside F_{field}")));
            }
            if c.is_zero() {
                return Err(Error::InvalidRelation(format!("zero coefficient on {p}")));
            }
            if p.len() < 2 {
                return Err(Error::InvalidRelation(format!(
                    "path {p} has length {}; relations must lie in paths of length ≥ 2",
                    p.len()
                )));
            }
            if (p.source(), p.target()) != (s, t) {
                return Err(Error::InvalidRelation(format!(
                    "path {p} runs {}→{}, expected {s}→{t}",
                    p.source(),
                    p.target()
                )));
            }
        }
        Ok(Relation { terms })
    }

    pub fn terms(&self) -> &[(Scalar, Path)] {
        &self.terms
    }

    pub fn source(&self) -> usize {
        self.terms[0].1.source()
    }

    pub fn target(&self) -> usize {
        self.terms[0].1.target()
    }
}
