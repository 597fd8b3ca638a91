use std::cmp::Ordering;

use super::field::{FieldSpec, Scalar};
use super::mat::Mat;
use crate::error::{Error, Result};

/// A subspace of the column space `F^ambient`, stored canonically as a
/// reduced row-echelon basis with no zero rows.
///
/// Two equal subspaces have identical representations, so `Eq` and `Hash`
/// are structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    basis: Mat,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient: usize) -> Self {
        Subspace {
            basis: Mat::zeros(field, 0, ambient),
        }
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Self {
        Subspace {
            basis: Mat::identity(field, ambient),
        }
    }

    /// Row space of `m`.
    pub fn from_mat(m: Mat) -> Self {
        let mut m = m;
        let rank = m.rref_in_place();
        m.truncate_rows(rank);
        Subspace { basis: m }
    }

    /// Span of the given vectors.
    pub fn span(field: FieldSpec, ambient: usize, vectors: Vec<Vec<Scalar>>) -> Result<Self> {
        Ok(Subspace::from_mat(Mat::from_rows(field, ambient, vectors)?))
    }

    /// Wraps a matrix the caller guarantees is already in canonical form.
    pub(crate) fn from_rref_unchecked(basis: Mat) -> Self {
        debug_assert_eq!(basis.rref().0, basis);
        debug_assert_eq!(basis.rank(), basis.rows());
        Subspace { basis }
    }

    pub fn field(&self) -> FieldSpec {
        self.basis.field()
    }

    pub fn ambient(&self) -> usize {
        self.basis.cols()
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient()
    }

    /// Pivot column of each basis row.
    pub fn pivots(&self) -> Vec<usize> {
        (0..self.dim())
            .map(|i| {
                self.basis
                    .row(i)
                    .iter()
                    .position(|s| !s.is_zero())
                    .expect("canonical basis has no zero rows")
            })
            .collect()
    }

    /// Coordinates that are not pivots; their unit vectors span a complement.
    pub fn complement_coords(&self) -> Vec<usize> {
        let piv = self.pivots();
        (0..self.ambient()).filter(|j| !piv.contains(j)).collect()
    }

    fn check_ambient(&self, n: usize) -> Result<()> {
        if self.ambient() != n {
            return Err(Error::AmbientMismatch {
                left: self.ambient(),
                right: n,
            });
        }
        Ok(())
    }

    /// Normal form of `v` modulo this subspace: zero at every pivot.
    pub fn reduce(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        self.check_ambient(v.len())?;
        let f = self.field();
        let mut v = v.to_vec();
        for (i, p) in self.pivots().into_iter().enumerate() {
            let c = v[p].clone();
            if c.is_zero() {
                continue;
            }
            for (j, b) in self.basis.row(i).iter().enumerate() {
                if !b.is_zero() {
                    v[j] = f.sub(&v[j], &f.mul(&c, b));
                }
            }
        }
        Ok(v)
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        Ok(self.reduce(v)?.iter().all(Scalar::is_zero))
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if !self.contains(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots().into_iter().map(|p| v[p].clone()).collect()))
    }

    /// `self ≤ other`.
    pub fn leq(&self, other: &Subspace) -> Result<bool> {
        other.check_ambient(self.ambient())?;
        if self.dim() > other.dim() {
            return Ok(false);
        }
        for i in 0..self.dim() {
            if !other.contains(self.basis.row(i))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other.ambient())?;
        if other.leq(self)? {
            return Ok(self.clone());
        }
        Ok(Subspace::from_mat(self.basis.vstack(&other.basis)?))
    }

    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_ambient(other.ambient())?;
        if self.leq(other)? {
            return Ok(self.clone());
        }
        if other.leq(self)? {
            return Ok(other.clone());
        }
        let eqs = self.annihilator().vstack(&other.annihilator())?;
        Ok(eqs.kernel())
    }

    /// A matrix `A` with `{v : A·v = 0}` equal to this subspace.
    pub fn annihilator(&self) -> Mat {
        self.basis.kernel().basis
    }

    /// Adds the unit vectors `e_c` (indexed by `coords`, weighted by the rows
    /// of `lift`) to this subspace. Used to realize subspaces of a quotient.
    pub(crate) fn extend_by_coords(&self, coords: &[usize], lift: &Subspace) -> Result<Subspace> {
        let f = self.field();
        let mut rows = self.basis.row_vecs();
        for i in 0..lift.dim() {
            let mut v = vec![f.zero(); self.ambient()];
            for (k, &c) in coords.iter().enumerate() {
                v[c] = lift.basis.row(i)[k].clone();
            }
            rows.push(v);
        }
        Subspace::span(f, self.ambient(), rows)
    }
}

impl PartialOrd for Subspace {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical order: by ambient dimension, then dimension, then the row-major
/// RREF entries lexicographically.
impl Ord for Subspace {
    fn cmp(&self, other: &Self) -> Ordering {
        self.ambient()
            .cmp(&other.ambient())
            .then(self.dim().cmp(&other.dim()))
            .then_with(|| self.basis.entries().cmp(other.basis.entries()))
    }
}

pub fn sum(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    a.sum(b)
}

pub fn intersect(a: &Subspace, b: &Subspace) -> Result<Subspace> {
    a.intersect(b)
}

pub fn contains(u: &Subspace, v: &[Scalar]) -> Result<bool> {
    u.contains(v)
}

pub fn leq(a: &Subspace, b: &Subspace) -> Result<bool> {
    a.leq(b)
}
