//! Deciding whether `L(M)` is finite.
//!
//! Over a finite field it always is. Over an infinite field a thin
//! representation has finitely many submodules, and a non-thin one on an
//! acyclic quiver has infinitely many: some quotient by a sinking
//! subrepresentation has `S(a)²` in its socle.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lattice::{enumerate_subreps, SubmoduleLattice, DEFAULT_CAP};
use crate::quiver::VertexSet;
use crate::rep::Representation;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Finite,
    Infinite,
    Unknown,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Reason {
    FiniteField,
    Thin,
    NonThinAcyclic,
    SocleSquare,
    Inconclusive,
}

/// `M / R_M(S)` whose socle is at least two-dimensional at `vertex`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub vertex: usize,
    pub sinking_set: VertexSet,
    pub quotient: Representation,
}

impl Witness {
    pub fn socle_dim(&self) -> usize {
        self.quotient.socle().space(self.vertex).dim()
    }
}

#[derive(Clone, Debug)]
pub struct FinitenessVerdict {
    pub verdict: Verdict,
    pub reason: Reason,
    pub witness: Option<Witness>,
    /// The full lattice when the verdict comes from thin-mode enumeration.
    pub lattice: Option<SubmoduleLattice>,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self:?}")
    }
}

impl std::fmt::Display for Reason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self:?}")
    }
}

fn verdict(verdict: Verdict, reason: Reason, witness: Option<Witness>) -> FinitenessVerdict {
    FinitenessVerdict {
        verdict,
        reason,
        witness,
        lattice: None,
    }
}

pub fn decide_finiteness(m: &Representation) -> FinitenessVerdict {
    if m.field().is_finite() {
        return verdict(Verdict::Finite, Reason::FiniteField, None);
    }
    if m.is_thin() {
        return FinitenessVerdict {
            lattice: enumerate_subreps(m, DEFAULT_CAP).ok(),
            ..verdict(Verdict::Finite, Reason::Thin, None)
        };
    }
    if m.quiver().is_acyclic() {
        let w = infinite_witness(m).expect("preconditions hold");
        return verdict(Verdict::Infinite, Reason::NonThinAcyclic, Some(w));
    }
    match socle_square_search(m) {
        Some(w) => verdict(Verdict::Infinite, Reason::SocleSquare, Some(w)),
        None => verdict(Verdict::Unknown, Reason::Inconclusive, None),
    }
}

/// First sinking set (canonical order) whose quotient has a socle of
/// dimension at least 2 somewhere; the smallest such vertex is reported.
fn socle_square_search(m: &Representation) -> Option<Witness> {
    m.quiver()
        .enumerate_sinking_sets()
        .into_par_iter()
        .find_map_first(|s| {
            let r = m.restrict_sinking(&s).ok()?;
            let (q, _) = m.quotient(&r).ok()?;
            let soc = q.socle();
            let vertex = q.quiver().vertices().find(|&v| soc.space(v).dim() >= 2)?;
            Some(Witness {
                vertex,
                sinking_set: s,
                quotient: q,
            })
        })
}

/// For a non-thin representation of an acyclic quiver over an infinite
/// field: take the smallest vertex `a` with `dim ≥ 2` and quotient by
/// everything reachable from its out-neighbours. All maps out of `a` then
/// vanish, so `S(a)^dim` sits in the socle.
pub fn infinite_witness(m: &Representation) -> Result<Witness> {
    if m.field().is_finite() {
        return Err(Error::NotApplicable("the field is finite".into()));
    }
    if !m.quiver().is_acyclic() {
        return Err(Error::NotApplicable("the quiver has an oriented cycle".into()));
    }
    let vertex = m
        .quiver()
        .vertices()
        .find(|&v| m.dim(v) >= 2)
        .ok_or_else(|| Error::NotApplicable("the representation is thin".into()))?;
    let set: VertexSet = m
        .quiver()
        .out_arrows(vertex)
        .flat_map(|(_, a)| m.quiver().reachable(a.target))
        .collect();
    let (quotient, _) = m.quotient(&m.restrict_sinking(&set)?)?;
    let w = Witness {
        vertex,
        sinking_set: set,
        quotient,
    };
    assert!(w.socle_dim() >= 2, "witness quotient must contain S(a)^2");
    Ok(w)
}

#[derive(Clone, Debug)]
pub struct SocleSeriesReport {
    /// Dimension vector of the socle of `M`, of `M / Soc M`, and so on.
    pub layers: Vec<Vec<usize>>,
    pub thin_layers: Vec<bool>,
    pub all_thin: bool,
    pub verdict: FinitenessVerdict,
}

/// Walks the socle series and reports each layer next to the finiteness
/// verdict for `M` itself.
pub fn socle_series_counterexample_check(m: &Representation) -> Result<SocleSeriesReport> {
    let mut layers = Vec::new();
    let mut cur = m.clone();
    while !cur.is_zero() {
        let soc = cur.socle();
        if soc.is_zero() {
            return Err(Error::Domain("zero socle on a nonzero layer".into()));
        }
        layers.push(soc.dims());
        cur = cur.quotient(&soc)?.0;
    }
    let thin_layers: Vec<bool> = layers.iter().map(|l| l.iter().all(|&d| d <= 1)).collect();
    Ok(SocleSeriesReport {
        all_thin: thin_layers.iter().all(|&t| t),
        thin_layers,
        layers,
        verdict: decide_finiteness(m),
    })
}
