use std::fmt;

use super::field::{FieldSpec, Scalar};
use super::subspace::Subspace;
use crate::error::{Error, Result};

/// Dense row-major matrix over a [`FieldSpec`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Mat {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Mat {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Mat {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Mat::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Builds a matrix from explicit rows; every row must have `cols` entries
    /// belonging to `field`.
    pub fn from_rows(field: FieldSpec, cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != cols {
                return Err(Error::ShapeMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    row.len()
                )));
            }
            if let Some(bad) = row.iter().find(|s| !field.owns(s)) {
                return Err(Error::Domain(format!("{bad} is not an element of F_{field}")));
            }
            data.extend(row);
        }
        Ok(Mat {
            field,
            rows: n,
            cols,
            data,
        })
    }

    /// Integer literal constructor, entries reduced into `field`.
    pub fn from_ints(field: FieldSpec, rows: usize, cols: usize, entries: &[i64]) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Mat {
            field,
            rows,
            cols,
            data: entries.iter().map(|&v| field.from_i64(v)).collect(),
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        debug_assert!(self.field.owns(&v));
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    fn check_field(&self, other: &Mat) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        Ok(())
    }

    pub fn mul(&self, other: &Mat) -> Result<Mat> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = self.field;
        let mut out = Mat::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = f.add(&out.data[idx], &f.mul(a, b));
                }
            }
        }
        Ok(out)
    }

    fn zip_with(&self, other: &Mat, op: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<Mat> {
        self.check_field(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(Mat {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| op(a, b)).collect(),
        })
    }

    pub fn add(&self, other: &Mat) -> Result<Mat> {
        let f = self.field;
        self.zip_with(other, |a, b| f.add(a, b))
    }

    pub fn sub(&self, other: &Mat) -> Result<Mat> {
        let f = self.field;
        self.zip_with(other, |a, b| f.sub(a, b))
    }

    pub fn scale(&self, c: &Scalar) -> Mat {
        let f = self.field;
        Mat {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| f.mul(a, c)).collect(),
        }
    }

    /// `self · v` for a column vector `v`.
    pub fn apply_vec(&self, v: &[Scalar]) -> Result<Vec<Scalar>> {
        if v.len() != self.cols {
            return Err(Error::AmbientMismatch {
                left: self.cols,
                right: v.len(),
            });
        }
        let f = self.field;
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(f.zero(), |acc, (a, b)| f.add(&acc, &f.mul(a, b)))
            })
            .collect())
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn vstack(&self, other: &Mat) -> Result<Mat> {
        self.check_field(other)?;
        if self.cols != other.cols {
            return Err(Error::ShapeMismatch(format!(
                "vstack of {} and {} columns",
                self.cols, other.cols
            )));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Mat {
            field: self.field,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    /// Block-diagonal matrix `[[self, 0], [0, other]]`.
    pub fn block_diag(&self, other: &Mat) -> Result<Mat> {
        self.check_field(other)?;
        let mut out = Mat::zeros(self.field, self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out.set(self.rows + i, self.cols + j, other.get(i, j).clone());
            }
        }
        Ok(out)
    }

    /// Columns with the given indices, in that order.
    pub fn select_cols(&self, cols: &[usize]) -> Mat {
        let mut out = Mat::zeros(self.field, self.rows, cols.len());
        for i in 0..self.rows {
            for (k, &j) in cols.iter().enumerate() {
                out.set(i, k, self.get(i, j).clone());
            }
        }
        out
    }

    /// Reduced row-echelon form (same shape, zero rows at the bottom) and rank.
    pub fn rref(&self) -> (Mat, usize) {
        let mut m = self.clone();
        let rank = m.rref_in_place();
        (m, rank)
    }

    /// Reduces in place and returns the rank; pivot columns are recoverable as
    /// the first nonzero entry of each of the first `rank` rows.
    pub(crate) fn rref_in_place(&mut self) -> usize {
        let f = self.field;
        let (rows, cols) = (self.rows, self.cols);
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pivot) = (r..rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if pivot != r {
                for j in 0..cols {
                    self.data.swap(pivot * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(self.get(r, c)).expect("pivot is nonzero");
            if !inv.is_one() {
                for j in c..cols {
                    let idx = r * cols + j;
                    self.data[idx] = f.mul(&self.data[idx], &inv);
                }
            }
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let factor = self.get(i, c).clone();
                if factor.is_zero() {
                    continue;
                }
                for j in c..cols {
                    let pv = &self.data[r * cols + j];
                    if pv.is_zero() {
                        continue;
                    }
                    let t = f.mul(&factor, pv);
                    let idx = i * cols + j;
                    self.data[idx] = f.sub(&self.data[idx], &t);
                }
            }
            r += 1;
        }
        r
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Drops every row from `n` on.
    pub(crate) fn truncate_rows(&mut self, n: usize) {
        self.rows = n.min(self.rows);
        self.data.truncate(self.rows * self.cols);
    }

    /// `{v : self · v = 0}`.
    pub fn kernel(&self) -> Subspace {
        let (r, rank) = self.rref();
        let pivots: Vec<usize> = (0..rank)
            .map(|i| (0..self.cols).find(|&j| !r.get(i, j).is_zero()).expect("pivot row"))
            .collect();
        let f = self.field;
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|j| !pivots.contains(j)) {
            let mut v = vec![f.zero(); self.cols];
            v[free] = f.one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = f.neg(r.get(i, free));
            }
            basis.push(v);
        }
        Subspace::span(f, self.cols, basis).expect("kernel vectors have the right length")
    }

    /// Column space, as a subspace of the codomain.
    pub fn image(&self) -> Subspace {
        Subspace::from_mat(self.transpose())
    }

    /// `{self · u : u ∈ space}`.
    pub fn apply(&self, space: &Subspace) -> Result<Subspace> {
        if space.ambient() != self.cols {
            return Err(Error::AmbientMismatch {
                left: self.cols,
                right: space.ambient(),
            });
        }
        // rows of (B · selfᵀ) are the images of the basis rows
        let imgs = space.basis().mul(&self.transpose())?;
        Ok(Subspace::from_mat(imgs))
    }

    /// `{v : self · v ∈ space}`.
    pub fn preimage(&self, space: &Subspace) -> Result<Subspace> {
        if space.ambient() != self.rows {
            return Err(Error::AmbientMismatch {
                left: self.rows,
                right: space.ambient(),
            });
        }
        let eqs = space.annihilator().mul(self)?;
        Ok(eqs.kernel())
    }
}

impl fmt::Display for Mat {
    /// Matrix literal syntax `[[a,b],[c,d]]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for (j, s) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{s}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

/// Free-function form of [`Mat::rref`].
pub fn rref(m: &Mat) -> (Mat, usize) {
    m.rref()
}

/// Free-function form of [`Mat::kernel`].
pub fn kernel(m: &Mat) -> Subspace {
    m.kernel()
}

/// Free-function form of [`Mat::image`].
pub fn image(m: &Mat) -> Subspace {
    m.image()
}

/// Free-function form of [`Mat::apply`].
pub fn apply(m: &Mat, u: &Subspace) -> Result<Subspace> {
    m.apply(u)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    #[test]
    fn rref_identity_f2() {
        let id = Mat::identity(f(2), 2);
        let (r, rank) = id.rref();
        assert_eq!(r, id);
        assert_eq!(rank, 2);
    }

    #[test]
    fn rref_duplicate_rows() {
        let m = Mat::from_ints(f(2), 2, 2, &[0, 1, 0, 1]).unwrap();
        let (r, rank) = m.rref();
        assert_eq!(rank, 1);
        assert_eq!(r, Mat::from_ints(f(2), 2, 2, &[0, 1, 0, 0]).unwrap());
    }

    #[test]
    fn rref_mod5() {
        // det = 2*3 - 4*1 = 2, invertible mod 5
        let m = Mat::from_ints(f(5), 2, 2, &[2, 4, 1, 3]).unwrap();
        let (r, rank) = m.rref();
        assert_eq!(rank, 2);
        assert_eq!(r, Mat::identity(f(5), 2));
    }

    #[test]
    fn kernel_examples() {
        for field in [f(2), f(3), FieldSpec::rationals()] {
            let row = Mat::from_ints(field, 1, 2, &[0, 1]).unwrap();
            let k = row.kernel();
            assert_eq!(k.dim(), 1);
            assert_eq!(k.basis().row(0), &[field.one(), field.zero()]);
            assert_eq!(Mat::identity(field, 3).kernel().dim(), 0);
        }
        assert_eq!(Mat::zeros(f(3), 2, 2).kernel().dim(), 2);
    }

    #[test]
    fn apply_surjective_row() {
        let row = Mat::from_ints(f(2), 1, 2, &[0, 1]).unwrap();
        let img = row.apply(&Subspace::full(f(2), 2)).unwrap();
        assert_eq!(img, Subspace::full(f(2), 1));
    }

    #[test]
    fn preimage_of_zero_is_kernel() {
        let m = Mat::from_ints(f(3), 2, 3, &[1, 2, 0, 0, 0, 1]).unwrap();
        let pre = m.preimage(&Subspace::zero(f(3), 2)).unwrap();
        assert_eq!(pre, m.kernel());
    }

    #[test]
    fn display_literal() {
        let m = Mat::from_ints(FieldSpec::rationals(), 2, 2, &[1, -2, 0, 3]).unwrap();
        assert_eq!(m.to_string(), "[[1,-2],[0,3]]");
    }
}
