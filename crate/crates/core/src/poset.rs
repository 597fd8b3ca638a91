//! Finite posets and their incidence-algebra machinery.
//!
//! The order is stored as one bitset of up-sets and one of down-sets per
//! element. Möbius values are exact [`BigInt`]s computed along a linear
//! extension with the recursion `μ(x,y) = −Σ_{x≤z<y} μ(x,z)`.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }

    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn is_subset(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }

    fn and(&self, other: &Bits) -> Bits {
        Bits(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * 64 + b)
            })
        })
    }
}

/// A finite partially ordered set on the indices `0..size`.
///
/// Labels are for display only; elements are identified by index.
#[derive(Clone, Debug)]
pub struct FinitePoset {
    labels: Vec<String>,
    up: Vec<Bits>,
    down: Vec<Bits>,
    linear: Vec<usize>,
    position: Vec<usize>,
}

/// Möbius values `μ(x,y)` for every comparable pair `x ≤ y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MobiusTable {
    rows: Vec<Vec<(usize, BigInt)>>,
}

impl MobiusTable {
    /// `μ(x,y)`, or `None` when `x ≰ y`.
    pub fn get(&self, x: usize, y: usize) -> Option<&BigInt> {
        let row = &self.rows[x];
        row.binary_search_by_key(&y, |(k, _)| *k)
            .ok()
            .map(|i| &row[i].1)
    }

    /// Nonzero-support entries of row `x`, sorted by `y`.
    pub fn row(&self, x: usize) -> &[(usize, BigInt)] {
        &self.rows[x]
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

impl FinitePoset {
    /// Builds the poset from a `leq` predicate and validates reflexivity,
    /// antisymmetry and transitivity.
    pub fn new(labels: Vec<String>, leq: impl Fn(usize, usize) -> bool) -> Result<Self> {
        let n = labels.len();
        let mut up = vec![Bits::new(n); n];
        for (x, row) in up.iter_mut().enumerate() {
            for y in 0..n {
                if leq(x, y) {
                    row.set(y);
                }
            }
        }
        Self::from_up_sets(labels, up)
    }

    /// The reflexive-transitive closure of `relations`, which must be acyclic.
    /// Typically fed with the cover relation.
    pub fn from_relations(labels: Vec<String>, relations: &[(usize, usize)]) -> Result<Self> {
        let n = labels.len();
        let mut up = vec![Bits::new(n); n];
        for (x, row) in up.iter_mut().enumerate() {
            row.set(x);
        }
        for &(x, y) in relations {
            if x >= n || y >= n {
                return Err(Error::InvalidPoset(format!("relation ({x},{y}) out of range")));
            }
            up[x].set(y);
        }
        // Warshall on bitsets
        for k in 0..n {
            let upk = up[k].clone();
            for row in up.iter_mut() {
                if row.get(k) {
                    for (a, b) in row.0.iter_mut().zip(&upk.0) {
                        *a |= b;
                    }
                }
            }
        }
        Self::from_up_sets(labels, up)
    }

    fn from_up_sets(labels: Vec<String>, up: Vec<Bits>) -> Result<Self> {
        let n = labels.len();
        let mut down = vec![Bits::new(n); n];
        for x in 0..n {
            if !up[x].get(x) {
                return Err(Error::InvalidPoset(format!("not reflexive at {x}")));
            }
            for y in up[x].iter() {
                if y != x && up[y].get(x) {
                    return Err(Error::InvalidPoset(format!(
                        "not antisymmetric: {x} and {y}"
                    )));
                }
                if !up[y].is_subset(&up[x]) {
                    return Err(Error::InvalidPoset(format!(
                        "not transitive above {x} ≤ {y}"
                    )));
                }
                down[y].set(x);
            }
        }
        // strictly smaller elements have strictly smaller down-sets
        let mut linear: Vec<usize> = (0..n).collect();
        let sizes: Vec<usize> = down.iter().map(Bits::count).collect();
        linear.sort_by_key(|&x| (sizes[x], x));
        let mut position = vec![0; n];
        for (i, &x) in linear.iter().enumerate() {
            position[x] = i;
        }
        Ok(FinitePoset {
            labels,
            up,
            down,
            linear,
            position,
        })
    }

    /// The chain `0 < 1 < ⋯ < n-1`.
    pub fn chain(n: usize) -> Self {
        FinitePoset::new((0..n).map(|i| i.to_string()).collect(), |x, y| x <= y)
            .expect("a chain is a poset")
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].get(y)
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    /// Elements `y ≥ x`, in increasing index order.
    pub fn above(&self, x: usize) -> Vec<usize> {
        self.up[x].iter().collect()
    }

    /// Elements `y ≤ x`, in increasing index order.
    pub fn below(&self, x: usize) -> Vec<usize> {
        self.down[x].iter().collect()
    }

    /// A linear extension, precomputed at construction.
    pub fn linear_extension(&self) -> &[usize] {
        &self.linear
    }

    pub fn bottom(&self) -> Option<usize> {
        (0..self.size()).find(|&x| self.up[x].count() == self.size())
    }

    pub fn top(&self) -> Option<usize> {
        (0..self.size()).find(|&x| self.down[x].count() == self.size())
    }

    fn by_position(&self, set: &Bits) -> Vec<usize> {
        let mut v: Vec<usize> = set.iter().collect();
        v.sort_by_key(|&z| self.position[z]);
        v
    }

    /// `μ(x,z)` for every `z ≥ x`, as `(z, value)` sorted by `z`.
    pub fn mobius_from(&self, x: usize) -> Vec<(usize, BigInt)> {
        let ups = self.by_position(&self.up[x]);
        let mut vals: Vec<BigInt> = Vec::with_capacity(ups.len());
        for (i, &z) in ups.iter().enumerate() {
            if i == 0 {
                vals.push(BigInt::one());
                continue;
            }
            let mut s = BigInt::zero();
            for (j, &w) in ups[..i].iter().enumerate() {
                if self.down[z].get(w) {
                    s += &vals[j];
                }
            }
            vals.push(-s);
        }
        let mut out: Vec<(usize, BigInt)> = ups.into_iter().zip(vals).collect();
        out.sort_by_key(|(z, _)| *z);
        out
    }

    /// `μ(z,y)` for every `z ≤ y`, via the right-inverse recursion
    /// `μ(z,y) = −Σ_{z<w≤y} μ(w,y)`.
    pub fn mobius_to(&self, y: usize) -> Vec<(usize, BigInt)> {
        let mut downs = self.by_position(&self.down[y]);
        downs.reverse();
        let mut vals: Vec<BigInt> = Vec::with_capacity(downs.len());
        for (i, &z) in downs.iter().enumerate() {
            if i == 0 {
                vals.push(BigInt::one());
                continue;
            }
            let mut s = BigInt::zero();
            for (j, &w) in downs[..i].iter().enumerate() {
                if self.up[z].get(w) {
                    s += &vals[j];
                }
            }
            vals.push(-s);
        }
        let mut out: Vec<(usize, BigInt)> = downs.into_iter().zip(vals).collect();
        out.sort_by_key(|(z, _)| *z);
        out
    }

    /// `μ(x,y)`; fails unless `x ≤ y`.
    pub fn mobius_pair(&self, x: usize, y: usize) -> Result<BigInt> {
        if !self.leq(x, y) {
            return Err(Error::NotComparable(x, y));
        }
        // restrict the recursion to the interval [x, y]
        let span = self.up[x].and(&self.down[y]);
        let elems = self.by_position(&span);
        let mut vals: Vec<BigInt> = Vec::with_capacity(elems.len());
        for (i, &z) in elems.iter().enumerate() {
            if i == 0 {
                vals.push(BigInt::one());
                continue;
            }
            let mut s = BigInt::zero();
            for (j, &w) in elems[..i].iter().enumerate() {
                if self.down[z].get(w) {
                    s += &vals[j];
                }
            }
            vals.push(-s);
        }
        Ok(vals.pop().expect("interval contains x"))
    }

    /// All Möbius values; rows are computed in parallel.
    pub fn mobius_table(&self) -> MobiusTable {
        MobiusTable {
            rows: (0..self.size())
                .into_par_iter()
                .map(|x| self.mobius_from(x))
                .collect(),
        }
    }

    /// Componentwise order on `self × other`; element `(a, b)` has index
    /// `a * other.size() + b`.
    pub fn product(&self, other: &FinitePoset) -> FinitePoset {
        let m = other.size();
        let labels = (0..self.size() * m)
            .map(|i| format!("({},{})", self.label(i / m), other.label(i % m)))
            .collect();
        FinitePoset::new(labels, |i, j| {
            self.leq(i / m, j / m) && other.leq(i % m, j % m)
        })
        .expect("product of posets is a poset")
    }

    /// The order-dual.
    pub fn dual(&self) -> FinitePoset {
        FinitePoset::new(self.labels.clone(), |x, y| self.leq(y, x)).expect("dual of a poset")
    }

    /// Cover relation `x ⋖ y`, sorted.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.size() {
            for y in self.up[x].iter() {
                if y != x && self.up[x].and(&self.down[y]).count() == 2 {
                    out.push((x, y));
                }
            }
        }
        out
    }

    pub fn atoms(&self) -> Result<Vec<usize>> {
        let b = self.bottom().ok_or(Error::NotBounded("bottom"))?;
        self.top().ok_or(Error::NotBounded("top"))?;
        Ok(self
            .up[b]
            .iter()
            .filter(|&y| y != b && self.down[y].count() == 2)
            .collect())
    }

    pub fn coatoms(&self) -> Result<Vec<usize>> {
        self.bottom().ok_or(Error::NotBounded("bottom"))?;
        let t = self.top().ok_or(Error::NotBounded("top"))?;
        Ok(self
            .down[t]
            .iter()
            .filter(|&y| y != t && self.up[y].count() == 2)
            .collect())
    }

    fn least(&self, set: &Bits, order: &[Bits]) -> Option<usize> {
        set.iter().find(|&z| order[z] == *set)
    }

    /// Least upper bound, if it exists.
    pub fn join(&self, x: usize, y: usize) -> Option<usize> {
        self.least(&self.up[x].and(&self.up[y]), &self.up)
    }

    /// Greatest lower bound, if it exists.
    pub fn meet(&self, x: usize, y: usize) -> Option<usize> {
        self.least(&self.down[x].and(&self.down[y]), &self.down)
    }

    pub fn is_lattice(&self) -> bool {
        let n = self.size();
        n > 0
            && (0..n).all(|x| (x + 1..n).all(|y| self.join(x, y).is_some() && self.meet(x, y).is_some()))
    }

    /// The induced subposet on `[x, y]` and the original index of each of its
    /// elements.
    pub fn interval(&self, x: usize, y: usize) -> Result<(FinitePoset, Vec<usize>)> {
        if !self.leq(x, y) {
            return Err(Error::NotComparable(x, y));
        }
        let members: Vec<usize> = self.up[x].and(&self.down[y]).iter().collect();
        let labels = members.iter().map(|&z| self.labels[z].clone()).collect();
        let sub = FinitePoset::new(labels, |i, j| self.leq(members[i], members[j]))?;
        Ok((sub, members))
    }

    /// `f(y) = Σ_{x≤y} g(x)·μ(x,y)`, the inverse of downward summation.
    pub fn mobius_invert(&self, g: &[BigRational]) -> Result<Vec<BigRational>> {
        if g.len() != self.size() {
            return Err(Error::Domain(format!(
                "{} values for a poset of size {}",
                g.len(),
                self.size()
            )));
        }
        Ok((0..self.size())
            .into_par_iter()
            .map(|y| {
                self.mobius_to(y)
                    .into_iter()
                    .fold(BigRational::zero(), |acc, (x, mu)| {
                        acc + &g[x] * BigRational::from_integer(mu)
                    })
            })
            .collect())
    }

    /// `g(y) = Σ_{x≤y} f(x)`.
    pub fn downward_sum(&self, f: &[BigRational]) -> Vec<BigRational> {
        (0..self.size())
            .map(|y| self.down[y].iter().fold(BigRational::zero(), |acc, x| acc + &f[x]))
            .collect()
    }

    /// Checks `μ(0,1) = −Σ μ(0,N)` over the coatoms `N` not above `atom`.
    ///
    /// In a finite modular lattice the elements `x < 1` with `x ∨ atom = 1`
    /// are exactly those coatoms, so this is Weisner's theorem.
    pub fn weisner_check(&self, atom: usize) -> Result<bool> {
        let atoms = self.atoms()?;
        if !atoms.contains(&atom) {
            return Err(Error::Domain(format!("element {atom} is not an atom")));
        }
        let bottom = self.bottom().expect("bounded");
        let top = self.top().expect("bounded");
        let row = self.mobius_from(bottom);
        let mu = |z: usize| -> &BigInt {
            &row[row.binary_search_by_key(&z, |(k, _)| *k).expect("above bottom")].1
        };
        let sum: BigInt = self
            .coatoms()?
            .into_iter()
            .filter(|&n| !self.leq(atom, n))
            .map(|n| mu(n).clone())
            .sum();
        Ok(*mu(top) == -sum)
    }

    /// Graphviz digraph of the Hasse diagram, edges pointing upwards.
    pub fn to_dot(&self, label: impl Fn(usize) -> String) -> String {
        let mut out = String::from("digraph hasse {\n  rankdir=BT;\n");
        for x in 0..self.size() {
            let l = label(x).replace('\\', "\\\\").replace('"', "\\\"");
            writeln!(out, "  n{x} [label=\"{l}\"];").unwrap();
        }
        for (x, y) in self.covers() {
            writeln!(out, "  n{x} -> n{y};").unwrap();
        }
        out.push_str("}\n");
        out
    }
}
