//! Representations of bound quivers and their subobjects.
//!
//! A representation assigns `F^d` to each vertex and a `dim(target) ×
//! dim(source)` matrix to each arrow. A path `a₁.a₂.….a_k` (traversed left
//! to right) evaluates to `M_{a_k} ⋯ M_{a₁}`.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::exactmath::{FieldSpec, Mat, Scalar, Subspace};
use crate::quiver::{Path, Quiver, Relation, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Representation {
    field: FieldSpec,
    quiver: Quiver,
    dims: Vec<usize>,
    maps: Vec<Mat>,
    relations: Vec<Relation>,
}

/// A subrepresentation: one subspace per vertex, closed under every arrow.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subrep {
    spaces: Vec<Subspace>,
}

/// A morphism `M → N`, one `dim_N(a) × dim_M(a)` matrix per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepMorphism {
    mats: Vec<Mat>,
}

impl Representation {
    /// Assembles a representation without checking anything; pair with
    /// [`Representation::validate`].
    pub fn from_parts_unchecked(
        field: FieldSpec,
        quiver: Quiver,
        dims: Vec<usize>,
        maps: Vec<Mat>,
        relations: Vec<Relation>,
    ) -> Self {
        Representation {
            field,
            quiver,
            dims,
            maps,
            relations,
        }
    }

    /// Assembles and validates; violations come back as
    /// [`Error::Validation`].
    pub fn new(
        field: FieldSpec,
        quiver: Quiver,
        dims: Vec<usize>,
        maps: Vec<Mat>,
        relations: Vec<Relation>,
    ) -> Result<Self> {
        let rep = Self::from_parts_unchecked(field, quiver, dims, maps, relations);
        rep.validate().map_err(Error::Validation)?;
        Ok(rep)
    }

    /// Starts a representation with every map zero.
    pub fn builder(field: FieldSpec, quiver: Quiver, dims: &[usize]) -> RepBuilder {
        let maps = quiver
            .arrows()
            .iter()
            .map(|a| {
                Mat::zeros(
                    field,
                    dims.get(a.target - 1).copied().unwrap_or(0),
                    dims.get(a.source - 1).copied().unwrap_or(0),
                )
            })
            .collect();
        RepBuilder {
            rep: Representation {
                field,
                quiver,
                dims: dims.to_vec(),
                maps,
                relations: Vec::new(),
            },
            error: None,
        }
    }

    pub fn zero(field: FieldSpec, quiver: Quiver) -> Self {
        let n = quiver.n_vertices();
        Self::semisimple(field, quiver, &vec![0; n])
    }

    /// All maps zero, with the given dimension vector.
    pub fn semisimple(field: FieldSpec, quiver: Quiver, dims: &[usize]) -> Self {
        Self::builder(field, quiver, dims)
            .build()
            .expect("zero maps satisfy every relation")
    }

    /// The simple representation `S(a)`.
    pub fn simple(field: FieldSpec, quiver: Quiver, a: usize) -> Result<Self> {
        if a == 0 || a > quiver.n_vertices() {
            return Err(Error::Domain(format!("no vertex {a}")));
        }
        let mut dims = vec![0; quiver.n_vertices()];
        dims[a - 1] = 1;
        Ok(Self::semisimple(field, quiver, &dims))
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn maps(&self) -> &[Mat] {
        &self.maps
    }

    /// Structural map of the arrow with this index.
    pub fn map(&self, arrow: usize) -> &Mat {
        &self.maps[arrow]
    }

    pub fn map_by_name(&self, name: &str) -> Option<&Mat> {
        self.quiver.arrow_index(name).map(|i| &self.maps[i])
    }

    /// Dimension at vertex `v` (1-based).
    pub fn dim(&self, v: usize) -> usize {
        self.dims[v - 1]
    }

    pub fn dimension_vector(&self) -> Vec<usize> {
        self.dims.clone()
    }

    /// Composition length: each simple is one-dimensional.
    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_thin(&self) -> bool {
        self.dims.iter().all(|&d| d <= 1)
    }

    pub fn is_semisimple(&self) -> bool {
        self.maps.iter().all(Mat::is_zero)
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    /// `M_{a_k} ⋯ M_{a₁}` for the path `a₁.….a_k`.
    pub fn path_matrix(&self, path: &Path) -> Result<Mat> {
        let mut acc = Mat::identity(self.field, self.dim(path.source()));
        for name in path.arrows() {
            let m = self
                .map_by_name(name)
                .ok_or_else(|| Error::InvalidRelation(format!("unknown arrow {name}")))?;
            acc = m.mul(&acc)?;
        }
        Ok(acc)
    }

    /// `Σ c · (matrix of path)` for a relation.
    pub fn evaluate_relation(&self, rel: &Relation) -> Result<Mat> {
        let mut acc = Mat::zeros(self.field, self.dim(rel.target()), self.dim(rel.source()));
        for (c, p) in rel.terms() {
            acc = acc.add(&self.path_matrix(p)?.scale(c))?;
        }
        Ok(acc)
    }

    /// Every shape, field and relation violation, or `Ok` when there are none.
    pub fn validate(&self) -> std::result::Result<(), Vec<String>> {
        let mut out = Vec::new();
        let n = self.quiver.n_vertices();
        if self.dims.len() != n {
            out.push(format!("{} dimensions for {n} vertices", self.dims.len()));
            return Err(out);
        }
        if self.maps.len() != self.quiver.arrows().len() {
            out.push(format!(
                "{} maps for {} arrows",
                self.maps.len(),
                self.quiver.arrows().len()
            ));
            return Err(out);
        }
        let mut shapes_ok = true;
        for (a, m) in self.quiver.arrows().iter().zip(&self.maps) {
            if m.field() != self.field {
                out.push(format!("map {} lives over a different field", a.name));
                shapes_ok = false;
            }
            let want = (self.dim(a.target), self.dim(a.source));
            if (m.rows(), m.cols()) != want {
                out.push(format!(
                    "map {} is {}x{}, expected {}x{}",
                    a.name,
                    m.rows(),
                    m.cols(),
                    want.0,
                    want.1
                ));
                shapes_ok = false;
            }
        }
        if shapes_ok {
            for rel in &self.relations {
                match self.evaluate_relation(rel) {
                    Ok(v) if v.is_zero() => {}
                    Ok(v) => out.push(format!(
                        "relation {} evaluates to {v}, not zero",
                        describe_relation(rel)
                    )),
                    Err(e) => out.push(format!("relation {}: {e}", describe_relation(rel))),
                }
            }
        }
        if out.is_empty() {
            Ok(())
        } else {
            Err(out)
        }
    }

    /// The same quiver, dimensions and (integer or rational) entries read in
    /// another field.
    pub fn change_field(&self, field: FieldSpec) -> Result<Representation> {
        let conv = |s: &Scalar| -> Result<Scalar> {
            match s {
                Scalar::Mod(v) => Ok(field.from_i64(*v as i64)),
                Scalar::Rat(r) => field.from_ratio(r.numer(), r.denom()),
            }
        };
        let maps = self
            .maps
            .iter()
            .map(|m| {
                let rows = (0..m.rows())
                    .map(|i| m.row(i).iter().map(conv).collect::<Result<Vec<_>>>())
                    .collect::<Result<Vec<_>>>()?;
                Mat::from_rows(field, m.cols(), rows)
            })
            .collect::<Result<Vec<_>>>()?;
        let relations = self
            .relations
            .iter()
            .map(|r| {
                let terms = r
                    .terms()
                    .iter()
                    .map(|(c, p)| Ok((conv(c)?, p.clone())))
                    .collect::<Result<Vec<_>>>()?;
                Relation::new(field, terms)
            })
            .collect::<Result<Vec<_>>>()?;
        Representation::new(field, self.quiver.clone(), self.dims.clone(), maps, relations)
    }

    fn check_compatible(&self, other: &Representation) -> Result<()> {
        if self.field != other.field {
            return Err(Error::Incompatible("different fields".into()));
        }
        if self.quiver != other.quiver {
            return Err(Error::Incompatible("different quivers".into()));
        }
        Ok(())
    }

    /// Full space at sinks, intersection of outgoing kernels elsewhere.
    pub fn socle(&self) -> Subrep {
        let spaces = self
            .quiver
            .vertices()
            .map(|v| {
                let d = self.dim(v);
                self.quiver
                    .out_arrows(v)
                    .fold(Mat::zeros(self.field, 0, d), |acc, (i, _)| {
                        acc.vstack(&self.maps[i]).expect("out-maps share the source")
                    })
                    .kernel()
            })
            .collect();
        Subrep { spaces }
    }

    /// Per-vertex sum of the images of incoming maps.
    pub fn radical(&self) -> Subrep {
        let spaces = self
            .quiver
            .vertices()
            .map(|v| {
                self.quiver
                    .in_arrows(v)
                    .fold(Subspace::zero(self.field, self.dim(v)), |acc, (i, _)| {
                        acc.sum(&self.maps[i].image()).expect("same ambient")
                    })
            })
            .collect();
        Subrep { spaces }
    }

    /// `M/U` with basis the standard coordinates that are not pivots of `U`,
    /// together with the projection `M → M/U`.
    pub fn quotient(&self, u: &Subrep) -> Result<(Representation, RepMorphism)> {
        u.check_closed(self)?;
        let coords: Vec<Vec<usize>> = u.spaces.iter().map(Subspace::complement_coords).collect();
        let f = self.field;
        let mut proj = Vec::with_capacity(coords.len());
        for (k, space) in u.spaces.iter().enumerate() {
            let d = self.dims[k];
            let mut p = Mat::zeros(f, coords[k].len(), d);
            for j in 0..d {
                let mut e = vec![f.zero(); d];
                e[j] = f.one();
                let r = space.reduce(&e)?;
                for (i, &c) in coords[k].iter().enumerate() {
                    p.set(i, j, r[c].clone());
                }
            }
            proj.push(p);
        }
        let maps = self
            .quiver
            .arrows()
            .iter()
            .zip(&self.maps)
            .map(|(a, m)| {
                let s = a.source - 1;
                let lift = Mat::identity(f, self.dims[s]).select_cols(&coords[s]);
                proj[a.target - 1].mul(m)?.mul(&lift)
            })
            .collect::<Result<Vec<_>>>()?;
        let q = Representation::new(
            f,
            self.quiver.clone(),
            coords.iter().map(Vec::len).collect(),
            maps,
            self.relations.clone(),
        )?;
        Ok((q, RepMorphism { mats: proj }))
    }

    /// `U` as a representation in its own canonical bases.
    pub fn sub_to_rep(&self, u: &Subrep) -> Result<Representation> {
        u.check_closed(self)?;
        let f = self.field;
        let maps = self
            .quiver
            .arrows()
            .iter()
            .zip(&self.maps)
            .map(|(a, m)| {
                let (src, tgt) = (&u.spaces[a.source - 1], &u.spaces[a.target - 1]);
                let mut out = Mat::zeros(f, tgt.dim(), src.dim());
                for i in 0..src.dim() {
                    let w = m.apply_vec(src.basis().row(i))?;
                    let c = tgt.coordinates(&w)?.expect("closure");
                    for (r, v) in c.into_iter().enumerate() {
                        out.set(r, i, v);
                    }
                }
                Ok(out)
            })
            .collect::<Result<Vec<_>>>()?;
        Representation::new(f, self.quiver.clone(), u.dims(), maps, self.relations.clone())
    }

    /// The inclusion `sub_to_rep(U) → M`.
    pub fn inclusion(&self, u: &Subrep) -> Result<RepMorphism> {
        u.check_closed(self)?;
        Ok(RepMorphism {
            mats: u.spaces.iter().map(|s| s.basis().transpose()).collect(),
        })
    }

    /// `R_M(S)`: everything on a sinking set `S`, nothing elsewhere.
    pub fn restrict_sinking(&self, set: &VertexSet) -> Result<Subrep> {
        if set.iter().any(|&v| v == 0 || v > self.quiver.n_vertices()) {
            return Err(Error::Domain(format!("{set:?} is not a set of vertices")));
        }
        if !self.quiver.is_sinking(set) {
            return Err(Error::NotSinking(set.iter().copied().collect()));
        }
        Ok(Subrep {
            spaces: self
                .quiver
                .vertices()
                .map(|v| {
                    if set.contains(&v) {
                        Subspace::full(self.field, self.dim(v))
                    } else {
                        Subspace::zero(self.field, self.dim(v))
                    }
                })
                .collect(),
        })
    }

    /// The submodule of `M` corresponding to a submodule `x` of `M/U` under
    /// the correspondence theorem.
    pub fn lift_from_quotient(&self, u: &Subrep, x: &Subrep) -> Result<Subrep> {
        let (q, proj) = self.quotient(u)?;
        x.check_closed(&q)?;
        let spaces = proj
            .mats
            .iter()
            .zip(&x.spaces)
            .map(|(p, s)| p.preimage(s))
            .collect::<Result<Vec<_>>>()?;
        Ok(Subrep { spaces })
    }
}

/// Block-diagonal sum. Relations of both summands are kept.
pub fn direct_sum(m: &Representation, n: &Representation) -> Result<Representation> {
    m.check_compatible(n)?;
    let dims = m.dims.iter().zip(&n.dims).map(|(a, b)| a + b).collect();
    let maps = m
        .maps
        .iter()
        .zip(&n.maps)
        .map(|(a, b)| a.block_diag(b))
        .collect::<Result<Vec<_>>>()?;
    let mut relations = m.relations.clone();
    for r in &n.relations {
        if !relations.contains(r) {
            relations.push(r.clone());
        }
    }
    Representation::new(m.field, m.quiver.clone(), dims, maps, relations)
        .map_err(|e| Error::Incompatible(format!("summands satisfy different relations: {e}")))
}

fn embed(m: &Representation, n: &Representation, left: bool) -> Result<Subrep> {
    m.check_compatible(n)?;
    let f = m.field;
    let spaces = m
        .dims
        .iter()
        .zip(&n.dims)
        .map(|(&dm, &dn)| {
            let range = if left { 0..dm } else { dm..dm + dn };
            let rows = range
                .map(|i| {
                    let mut v = vec![f.zero(); dm + dn];
                    v[i] = f.one();
                    v
                })
                .collect();
            Subspace::span(f, dm + dn, rows)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Subrep { spaces })
}

/// `M` inside `M ⊕ N`.
pub fn embed_left(m: &Representation, n: &Representation) -> Result<Subrep> {
    embed(m, n, true)
}

/// `N` inside `M ⊕ N`.
pub fn embed_right(m: &Representation, n: &Representation) -> Result<Subrep> {
    embed(m, n, false)
}

/// A basis of `Hom(M, N)`: solutions of `φ_t·M_α = N_α·φ_s` for all arrows.
pub fn hom_basis(m: &Representation, n: &Representation) -> Result<Vec<RepMorphism>> {
    m.check_compatible(n)?;
    let f = m.field;
    let nv = m.quiver.n_vertices();
    let mut offset = vec![0usize; nv + 1];
    for v in 0..nv {
        offset[v + 1] = offset[v] + n.dims[v] * m.dims[v];
    }
    let nvars = offset[nv];
    // φ_v[r][c] is variable offset[v-1] + r * dim_M(v) + c
    let var = |v: usize, r: usize, c: usize| offset[v - 1] + r * m.dims[v - 1] + c;
    let mut eqs: Vec<Vec<Scalar>> = Vec::new();
    for (k, a) in m.quiver.arrows().iter().enumerate() {
        let (s, t) = (a.source, a.target);
        let (ma, na) = (&m.maps[k], &n.maps[k]);
        for r in 0..n.dims[t - 1] {
            for c in 0..m.dims[s - 1] {
                let mut row = vec![f.zero(); nvars];
                for kk in 0..m.dims[t - 1] {
                    let i = var(t, r, kk);
                    row[i] = f.add(&row[i], ma.get(kk, c));
                }
                for kk in 0..n.dims[s - 1] {
                    let i = var(s, kk, c);
                    row[i] = f.sub(&row[i], na.get(r, kk));
                }
                eqs.push(row);
            }
        }
    }
    let system = Mat::from_rows(f, nvars, eqs)?;
    let sol = system.kernel();
    Ok((0..sol.dim())
        .map(|i| {
            let x = sol.basis().row(i);
            RepMorphism {
                mats: (1..=nv)
                    .map(|v| {
                        let (rows, cols) = (n.dims[v - 1], m.dims[v - 1]);
                        let mut mat = Mat::zeros(f, rows, cols);
                        for r in 0..rows {
                            for c in 0..cols {
                                mat.set(r, c, x[var(v, r, c)].clone());
                            }
                        }
                        mat
                    })
                    .collect(),
            }
        })
        .collect())
}

/// `dim Hom(M, N)`.
pub fn hom_dim(m: &Representation, n: &Representation) -> Result<usize> {
    Ok(hom_basis(m, n)?.len())
}

fn describe_relation(rel: &Relation) -> String {
    rel.terms()
        .iter()
        .map(|(c, p)| format!("{c}·{p}"))
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Incrementally sets maps and relations on a representation.
pub struct RepBuilder {
    rep: Representation,
    error: Option<Error>,
}

impl RepBuilder {
    /// Sets the map of arrow `name` from integer entries (row-major).
    pub fn map(mut self, name: &str, entries: &[i64]) -> Self {
        if self.error.is_some() {
            return self;
        }
        match self.rep.quiver.arrow_index(name) {
            None => self.error = Some(Error::Domain(format!("unknown arrow {name}"))),
            Some(i) => {
                let (r, c) = (self.rep.maps[i].rows(), self.rep.maps[i].cols());
                match Mat::from_ints(self.rep.field, r, c, entries) {
                    Ok(m) => self.rep.maps[i] = m,
                    Err(e) => self.error = Some(e),
                }
            }
        }
        self
    }

    pub fn map_mat(mut self, name: &str, m: Mat) -> Self {
        match self.rep.quiver.arrow_index(name) {
            None => self.error = Some(Error::Domain(format!("unknown arrow {name}"))),
            Some(i) => self.rep.maps[i] = m,
        }
        self
    }

    /// Adds `Σ cᵢ·pathᵢ = 0`, paths written `a.b.c`.
    pub fn relation(mut self, terms: &[(i64, &str)]) -> Self {
        if self.error.is_some() {
            return self;
        }
        let f = self.rep.field;
        let parsed = terms
            .iter()
            .map(|&(c, p)| Ok((f.from_i64(c), Path::parse(&self.rep.quiver, p)?)))
            .collect::<Result<Vec<_>>>()
            .and_then(|t| Relation::new(f, t));
        match parsed {
            Ok(r) => self.rep.relations.push(r),
            Err(e) => self.error = Some(e),
        }
        self
    }

    pub fn build(self) -> Result<Representation> {
        if let Some(e) = self.error {
            return Err(e);
        }
        self.rep.validate().map_err(Error::Validation)?;
        Ok(self.rep)
    }

    pub fn build_unchecked(self) -> Result<Representation> {
        match self.error {
            Some(e) => Err(e),
            None => Ok(self.rep),
        }
    }
}

impl Subrep {
    /// Checks closure under every structural map of `m`.
    pub fn new(m: &Representation, spaces: Vec<Subspace>) -> Result<Self> {
        let u = Subrep { spaces };
        u.check_closed(m)?;
        Ok(u)
    }

    pub(crate) fn from_spaces_unchecked(spaces: Vec<Subspace>) -> Self {
        Subrep { spaces }
    }

    pub fn zero(m: &Representation) -> Self {
        Subrep {
            spaces: m.dims.iter().map(|&d| Subspace::zero(m.field, d)).collect(),
        }
    }

    pub fn full(m: &Representation) -> Self {
        Subrep {
            spaces: m.dims.iter().map(|&d| Subspace::full(m.field, d)).collect(),
        }
    }

    pub fn spaces(&self) -> &[Subspace] {
        &self.spaces
    }

    /// Subspace at vertex `v` (1-based).
    pub fn space(&self, v: usize) -> &Subspace {
        &self.spaces[v - 1]
    }

    pub fn dims(&self) -> Vec<usize> {
        self.spaces.iter().map(Subspace::dim).collect()
    }

    pub fn total_dim(&self) -> usize {
        self.spaces.iter().map(Subspace::dim).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn is_closed_in(&self, m: &Representation) -> bool {
        self.check_closed(m).is_ok()
    }

    fn check_closed(&self, m: &Representation) -> Result<()> {
        if self.spaces.len() != m.dims.len() {
            return Err(Error::NotASubrep(format!(
                "{} spaces for {} vertices",
                self.spaces.len(),
                m.dims.len()
            )));
        }
        for (k, s) in self.spaces.iter().enumerate() {
            if s.ambient() != m.dims[k] || s.field() != m.field {
                return Err(Error::NotASubrep(format!(
                    "space at vertex {} does not live in M_{}",
                    k + 1,
                    k + 1
                )));
            }
        }
        for (a, map) in m.quiver.arrows().iter().zip(&m.maps) {
            let img = map.apply(&self.spaces[a.source - 1])?;
            if !img.leq(&self.spaces[a.target - 1])? {
                return Err(Error::NotASubrep(format!("not closed under {}", a.name)));
            }
        }
        Ok(())
    }

    fn zip(&self, other: &Subrep, f: impl Fn(&Subspace, &Subspace) -> Result<Subspace>) -> Result<Subrep> {
        if self.spaces.len() != other.spaces.len() {
            return Err(Error::Incompatible("subreps of different quivers".into()));
        }
        Ok(Subrep {
            spaces: self
                .spaces
                .iter()
                .zip(&other.spaces)
                .map(|(a, b)| f(a, b))
                .collect::<Result<_>>()?,
        })
    }

    pub fn sum(&self, other: &Subrep) -> Result<Subrep> {
        self.zip(other, Subspace::sum)
    }

    pub fn intersect(&self, other: &Subrep) -> Result<Subrep> {
        self.zip(other, Subspace::intersect)
    }

    pub fn leq(&self, other: &Subrep) -> Result<bool> {
        if self.spaces.len() != other.spaces.len() {
            return Err(Error::Incompatible("subreps of different quivers".into()));
        }
        for (a, b) in self.spaces.iter().zip(&other.spaces) {
            if !a.leq(b)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

impl PartialOrd for Subrep {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: total dimension, then vertex by vertex in canonical
/// subspace order.
impl Ord for Subrep {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_dim()
            .cmp(&other.total_dim())
            .then_with(|| self.spaces.cmp(&other.spaces))
    }
}

impl RepMorphism {
    pub fn mats(&self) -> &[Mat] {
        &self.mats
    }

    /// Total rank over all vertices.
    pub fn rank(&self) -> usize {
        self.mats.iter().map(Mat::rank).sum()
    }

    /// Whether the squares commute for every arrow of `from → to`.
    pub fn is_morphism(&self, from: &Representation, to: &Representation) -> bool {
        if self.mats.len() != from.dims.len() {
            return false;
        }
        from.quiver.arrows().iter().enumerate().all(|(k, a)| {
            let lhs = self.mats[a.target - 1].mul(&from.maps[k]);
            let rhs = to.maps[k].mul(&self.mats[a.source - 1]);
            matches!((lhs, rhs), (Ok(l), Ok(r)) if l == r)
        })
    }
}
