//! Exhaustive enumeration of submodule lattices.
//!
//! Over `F_p` every closed tuple of subspaces is found by a depth-first search
//! over the vertices. Over an infinite field only thin representations are
//! accepted, where each vertex space is `0` or `K` and the search reduces to
//! out-closed subsets of the support.

use std::collections::{BTreeMap, HashMap};
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering as AtomicOrdering};
use std::sync::OnceLock;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactmath::{all_subspaces, Subspace};
use crate::poset::FinitePoset;
use crate::rep::{direct_sum, embed_left, embed_right, hom_dim, Representation, Subrep};

pub const DEFAULT_CAP: usize = 100_000;

/// `L(M)` with its elements in canonical order (zero first, `M` last).
#[derive(Clone, Debug)]
pub struct SubmoduleLattice {
    base: Representation,
    elements: Vec<Subrep>,
    index: HashMap<Subrep, usize>,
    poset: FinitePoset,
}

/// Result of a poset-orthogonality test.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orthogonality {
    pub orthogonal: bool,
    /// The first subrepresentation of `M ⊕ N` (canonical order) that does not
    /// split, when there is one.
    pub witness: Option<Subrep>,
    /// `|L(M ⊕ N)|`.
    pub sum_size: usize,
}

struct Search<'a> {
    m: &'a Representation,
    order: Vec<usize>,
    cap: usize,
    found: AtomicUsize,
    abort: AtomicBool,
    quotient_subspaces: Vec<OnceLock<Result<Vec<Subspace>>>>,
}

impl<'a> Search<'a> {
    fn new(m: &'a Representation, cap: usize) -> Self {
        let q = m.quiver();
        let order = q
            .topological_order()
            .unwrap_or_else(|| q.vertices().collect());
        let max_dim = m.dimension_vector().into_iter().max().unwrap_or(0);
        Search {
            m,
            order,
            cap,
            found: AtomicUsize::new(0),
            abort: AtomicBool::new(false),
            quotient_subspaces: (0..=max_dim).map(|_| OnceLock::new()).collect(),
        }
    }

    /// Every subspace of `F^k`, cached per `k`.
    fn subspaces_of(&self, k: usize) -> Result<&[Subspace]> {
        let field = self.m.field();
        let cached = self.quotient_subspaces[k].get_or_init(|| {
            if field.is_finite() {
                all_subspaces(field, k, self.cap)
            } else if k <= 1 {
                Ok(vec![Subspace::zero(field, k), Subspace::full(field, k)]
                    .into_iter()
                    .take(k + 1)
                    .collect())
            } else {
                Err(Error::InfiniteModeNonThin)
            }
        });
        cached.as_deref().map_err(Clone::clone)
    }

    /// Spaces `W` at vertex `v` containing the image forced by the vertices
    /// already chosen, and mapping into the chosen spaces along back edges.
    fn candidates(&self, v: usize, chosen: &[Option<Subspace>]) -> Result<Vec<Subspace>> {
        let m = self.m;
        let field = m.field();
        let mut forced = Subspace::zero(field, m.dim(v));
        for (i, a) in m.quiver().in_arrows(v) {
            if let Some(u) = &chosen[a.source] {
                forced = forced.sum(&m.map(i).apply(u)?)?;
            }
        }
        let coords = forced.complement_coords();
        let mut out = Vec::new();
        'cand: for x in self.subspaces_of(coords.len())? {
            let w = forced.extend_by_coords(&coords, x)?;
            for (i, a) in m.quiver().out_arrows(v) {
                let target = if a.target == v {
                    Some(&w)
                } else {
                    chosen[a.target].as_ref()
                };
                if let Some(t) = target {
                    if !m.map(i).apply(&w)?.leq(t)? {
                        continue 'cand;
                    }
                }
            }
            out.push(w);
        }
        Ok(out)
    }

    fn dfs(&self, depth: usize, chosen: &mut Vec<Option<Subspace>>, out: &mut Vec<Subrep>) -> Result<()> {
        if self.abort.load(AtomicOrdering::Relaxed) {
            return Err(Error::CapExceeded(self.cap));
        }
        if depth == self.order.len() {
            if self.found.fetch_add(1, AtomicOrdering::Relaxed) >= self.cap {
                self.abort.store(true, AtomicOrdering::Relaxed);
                return Err(Error::CapExceeded(self.cap));
            }
            out.push(Subrep::from_spaces_unchecked(
                chosen[1..].iter().map(|s| s.clone().expect("all chosen")).collect(),
            ));
            return Ok(());
        }
        let v = self.order[depth];
        for w in self.candidates(v, chosen)? {
            chosen[v] = Some(w);
            self.dfs(depth + 1, chosen, out)?;
        }
        chosen[v] = None;
        Ok(())
    }

    fn run(&self) -> Result<Vec<Subrep>> {
        let n = self.order.len();
        let empty = vec![None; n + 1];
        let first = self.order[0];
        let firsts = self.candidates(first, &empty)?;
        let parts: Vec<Result<Vec<Subrep>>> = firsts
            .into_par_iter()
            .map(|w| {
                let mut chosen = empty.clone();
                chosen[first] = Some(w);
                let mut out = Vec::new();
                self.dfs(1, &mut chosen, &mut out)?;
                Ok(out)
            })
            .collect();
        let mut all = Vec::new();
        for p in parts {
            all.extend(p?);
        }
        Ok(all)
    }
}

/// Enumerates `L(M)`, refusing (never truncating) past `cap` elements.
pub fn enumerate_subreps(m: &Representation, cap: usize) -> Result<SubmoduleLattice> {
    if !m.field().is_finite() && !m.is_thin() {
        return Err(Error::InfiniteModeNonThin);
    }
    let mut elements = Search::new(m, cap).run()?;
    elements.par_sort();
    SubmoduleLattice::from_elements(m.clone(), elements)
}

impl SubmoduleLattice {
    fn from_elements(base: Representation, elements: Vec<Subrep>) -> Result<Self> {
        let n = elements.len();
        let dims: Vec<usize> = elements.iter().map(Subrep::total_dim).collect();
        // canonical order puts every proper subrep strictly earlier
        let up: Vec<Vec<bool>> = (0..n)
            .into_par_iter()
            .map(|i| {
                (0..n)
                    .map(|j| {
                        i == j
                            || (j > i
                                && dims[i] < dims[j]
                                && elements[i].leq(&elements[j]).expect("same shape"))
                    })
                    .collect()
            })
            .collect();
        let labels = elements.iter().map(dims_label).collect();
        let poset = FinitePoset::new(labels, |x, y| up[x][y])?;
        let index = elements
            .iter()
            .enumerate()
            .map(|(i, u)| (u.clone(), i))
            .collect();
        Ok(SubmoduleLattice {
            base,
            elements,
            index,
            poset,
        })
    }

    pub fn base(&self) -> &Representation {
        &self.base
    }

    pub fn elements(&self) -> &[Subrep] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Subrep {
        &self.elements[i]
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    pub fn index_of(&self, u: &Subrep) -> Option<usize> {
        self.index.get(u).copied()
    }

    pub fn bottom(&self) -> usize {
        0
    }

    pub fn top(&self) -> usize {
        self.len() - 1
    }

    /// `μ(0, M)`.
    pub fn mobius(&self) -> BigInt {
        self.poset
            .mobius_pair(self.bottom(), self.top())
            .expect("zero lies below everything")
    }

    /// Simple subrepresentations.
    pub fn atoms(&self) -> Vec<&Subrep> {
        self.poset
            .atoms()
            .expect("module lattices are bounded")
            .into_iter()
            .map(|i| &self.elements[i])
            .collect()
    }

    /// Maximal proper subrepresentations.
    pub fn coatoms(&self) -> Vec<&Subrep> {
        self.poset
            .coatoms()
            .expect("module lattices are bounded")
            .into_iter()
            .map(|i| &self.elements[i])
            .collect()
    }

    /// Number of elements of each composition length.
    pub fn count_by_length(&self) -> BTreeMap<usize, BigInt> {
        let mut out = BTreeMap::new();
        for u in &self.elements {
            *out.entry(u.total_dim()).or_insert_with(BigInt::default) += 1;
        }
        out
    }

    /// Weisner's identity at the given atom.
    pub fn weisner_verify(&self, atom: &Subrep) -> Result<bool> {
        let i = self
            .index_of(atom)
            .ok_or_else(|| Error::Domain("not an element of the lattice".into()))?;
        self.poset.weisner_check(i)
    }

    /// Pairs `(U, V)` of element indices with `V` covering `U`.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.poset.covers()
    }

    /// Elements, cover relation and the Möbius function on comparable pairs.
    /// Big integers are written as strings.
    pub fn to_json(&self) -> Value {
        let elements: Vec<Value> = self
            .elements
            .iter()
            .enumerate()
            .map(|(i, u)| {
                let spaces: Vec<Value> = u
                    .spaces()
                    .iter()
                    .map(|s| {
                        Value::Array(
                            s.basis()
                                .row_vecs()
                                .into_iter()
                                .map(|r| Value::Array(r.iter().map(|x| json!(x.to_string())).collect()))
                                .collect(),
                        )
                    })
                    .collect();
                json!({ "index": i, "dims": u.dims(), "bases": spaces })
            })
            .collect();
        let covers: Vec<Value> = self.covers().into_iter().map(|(a, b)| json!([a, b])).collect();
        let table = self.poset.mobius_table();
        let mut mobius = Vec::new();
        for x in 0..self.len() {
            for (y, v) in table.row(x) {
                mobius.push(json!([x, y, v.to_string()]));
            }
        }
        json!({
            "field": self.base.field().to_string(),
            "size": self.len(),
            "mobius_bottom_top": self.mobius().to_string(),
            "elements": elements,
            "covers": covers,
            "mobius": mobius,
        })
    }

    /// Hasse diagram in Graphviz syntax, nodes labelled by dimension vectors.
    pub fn to_dot(&self) -> String {
        self.poset.to_dot(|i| dims_label(&self.elements[i]))
    }
}

fn dims_label(u: &Subrep) -> String {
    let d: Vec<String> = u.dims().iter().map(usize::to_string).collect();
    format!("[{}]", d.join(","))
}

/// `μ(0, M)` on the enumerated lattice.
pub fn mobius_bruteforce(m: &Representation, cap: usize) -> Result<BigInt> {
    Ok(enumerate_subreps(m, cap)?.mobius())
}

pub fn atoms_of(m: &Representation, cap: usize) -> Result<Vec<Subrep>> {
    Ok(enumerate_subreps(m, cap)?.atoms().into_iter().cloned().collect())
}

pub fn coatoms_of(m: &Representation, cap: usize) -> Result<Vec<Subrep>> {
    Ok(enumerate_subreps(m, cap)?.coatoms().into_iter().cloned().collect())
}

pub fn count_by_length(m: &Representation, cap: usize) -> Result<BTreeMap<usize, BigInt>> {
    Ok(enumerate_subreps(m, cap)?.count_by_length())
}

pub fn weisner_verify(m: &Representation, atom: &Subrep, cap: usize) -> Result<bool> {
    enumerate_subreps(m, cap)?.weisner_verify(atom)
}

/// Whether every subrep `U` of `M ⊕ N` satisfies
/// `U = (U ∩ M) ⊕ (U ∩ N)`.
pub fn is_poset_orthogonal(m: &Representation, n: &Representation, cap: usize) -> Result<Orthogonality> {
    let sum = direct_sum(m, n)?;
    let left = embed_left(m, n)?;
    let right = embed_right(m, n)?;
    let lattice = enumerate_subreps(&sum, cap)?;
    let witness = lattice
        .elements()
        .par_iter()
        .find_first(|u| {
            let a = u.intersect(&left).expect("same shape").total_dim();
            let b = u.intersect(&right).expect("same shape").total_dim();
            a + b != u.total_dim()
        })
        .cloned();
    Ok(Orthogonality {
        orthogonal: witness.is_none(),
        witness,
        sum_size: lattice.len(),
    })
}

/// `Hom(M', N) = 0 = Hom(N', M)` for all submodules `M' ≤ M`, `N' ≤ N`.
pub fn is_orthocyclic(m: &Representation, n: &Representation, cap: usize) -> Result<bool> {
    fn one_way(m: &Representation, n: &Representation, cap: usize) -> Result<bool> {
        let lattice = enumerate_subreps(m, cap)?;
        let dims = lattice
            .elements()
            .par_iter()
            .map(|u| hom_dim(&m.sub_to_rep(u)?, n))
            .collect::<Result<Vec<_>>>()?;
        Ok(dims.iter().all(|&d| d == 0))
    }
    Ok(one_way(m, n, cap)? && one_way(n, m, cap)?)
}

/// Whether [`enumerate_subreps`] accepts `m` (cap aside).
pub fn enumerable(m: &Representation) -> bool {
    m.field().is_finite() || m.is_thin()
}
