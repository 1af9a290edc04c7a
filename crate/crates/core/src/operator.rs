use crate::error::{Error, Result};
use crate::gates::AxisId;
use crate::layout::SystemLayout;
use crate::C64;

/// Dense complex matrix, row-major. Intended for small systems and oracles.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseOperator {
    dim: usize,
    data: Vec<C64>,
}

impl DenseOperator {
    pub fn zeros(dim: usize) -> Self {
        DenseOperator { dim, data: vec![C64::new(0.0, 0.0); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut op = Self::zeros(dim);
        for i in 0..dim {
            op.data[i * dim + i] = C64::new(1.0, 0.0);
        }
        op
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> C64) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for r in 0..dim {
            for c in 0..dim {
                data.push(f(r, c));
            }
        }
        DenseOperator { dim, data }
    }

    pub fn from_rows(dim: usize, data: Vec<C64>) -> Result<Self> {
        if data.len() != dim * dim {
            return Err(Error::MatrixDimMismatch { got: data.len(), need: dim * dim });
        }
        Ok(DenseOperator { dim, data })
    }

    /// Annihilation operator on a single mode of dimension `dim`.
    pub fn annihilation(dim: usize) -> Self {
        Self::from_fn(dim, |r, c| {
            if c == r + 1 { C64::new((c as f64).sqrt(), 0.0) } else { C64::new(0.0, 0.0) }
        })
    }

    /// Creation operator on a single mode of dimension `dim`.
    pub fn creation(dim: usize) -> Self {
        Self::annihilation(dim).dagger()
    }

    /// Number operator on a single mode of dimension `dim`.
    pub fn number(dim: usize) -> Self {
        Self::from_fn(dim, |r, c| {
            if r == c { C64::new(r as f64, 0.0) } else { C64::new(0.0, 0.0) }
        })
    }

    /// Diagonal matrix from the given entries.
    pub fn diagonal(entries: &[C64]) -> Self {
        let dim = entries.len();
        Self::from_fn(dim, |r, c| if r == c { entries[r] } else { C64::new(0.0, 0.0) })
    }

    pub fn pauli_x() -> Self {
        Self::from_rows(2, vec![
            C64::new(0.0, 0.0), C64::new(1.0, 0.0),
            C64::new(1.0, 0.0), C64::new(0.0, 0.0),
        ]).unwrap()
    }

    pub fn pauli_y() -> Self {
        Self::from_rows(2, vec![
            C64::new(0.0, 0.0), C64::new(0.0, -1.0),
            C64::new(0.0, 1.0), C64::new(0.0, 0.0),
        ]).unwrap()
    }

    pub fn pauli_z() -> Self {
        Self::from_rows(2, vec![
            C64::new(1.0, 0.0), C64::new(0.0, 0.0),
            C64::new(0.0, 0.0), C64::new(-1.0, 0.0),
        ]).unwrap()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn data(&self) -> &[C64] {
        &self.data
    }

    pub fn at(&self, r: usize, c: usize) -> C64 {
        self.data[r * self.dim + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: C64) {
        self.data[r * self.dim + c] = v;
    }

    pub fn scale(&self, s: C64) -> Self {
        DenseOperator { dim: self.dim, data: self.data.iter().map(|&v| v * s).collect() }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::MatrixDimMismatch { got: other.dim, need: self.dim });
        }
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| a + b).collect();
        Ok(DenseOperator { dim: self.dim, data })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(C64::new(-1.0, 0.0)))
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.dim != other.dim {
            return Err(Error::MatrixDimMismatch { got: other.dim, need: self.dim });
        }
        let n = self.dim;
        let mut out = vec![C64::new(0.0, 0.0); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a.norm_sqr() == 0.0 {
                    continue;
                }
                let row = &other.data[k * n..(k + 1) * n];
                let acc = &mut out[i * n..(i + 1) * n];
                for (o, &b) in acc.iter_mut().zip(row) {
                    *o += a * b;
                }
            }
        }
        Ok(DenseOperator { dim: n, data: out })
    }

    /// Conjugate transpose.
    pub fn dagger(&self) -> Self {
        let n = self.dim;
        Self::from_fn(n, |r, c| self.data[c * n + r].conj())
    }

    /// Kronecker product with `other` as the more significant factor:
    /// joint index `i = a + dim_self * b` pairs `self` entry `a` with `other` entry `b`.
    pub fn kron(&self, other: &Self) -> Self {
        let n = self.dim * other.dim;
        DenseOperator::from_fn(n, |r, c| {
            let (ra, rb) = (r % self.dim, r / self.dim);
            let (ca, cb) = (c % self.dim, c / self.dim);
            self.at(ra, ca) * other.at(rb, cb)
        })
    }

    /// Matrix-vector product.
    pub fn apply(&self, x: &[C64]) -> Result<Vec<C64>> {
        if x.len() != self.dim {
            return Err(Error::MatrixDimMismatch { got: x.len(), need: self.dim });
        }
        let n = self.dim;
        let mut y = vec![C64::new(0.0, 0.0); n];
        for (r, yr) in y.iter_mut().enumerate() {
            let row = &self.data[r * n..(r + 1) * n];
            let mut acc = C64::new(0.0, 0.0);
            for (&m, &v) in row.iter().zip(x) {
                acc += m * v;
            }
            *yr = acc;
        }
        Ok(y)
    }

    /// Largest entry-wise absolute difference from `other`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// Deviation of `self^dag self` from the identity.
    pub fn unitarity_defect(&self) -> f64 {
        let prod = self.dagger().mul(self).unwrap();
        prod.max_abs_diff(&Self::identity(self.dim))
    }

    /// Deviation from Hermitian symmetry.
    pub fn hermiticity_defect(&self) -> f64 {
        self.max_abs_diff(&self.dagger())
    }

    pub fn trace(&self) -> C64 {
        (0..self.dim).map(|i| self.data[i * self.dim + i]).sum()
    }

    /// Embeds a local operator over `axes` (least-significant first) into the
    /// full space of `layout`, acting as identity on all other axes. Builds a
    /// full dense matrix; intended for small-system oracles.
    pub fn embedded(layout: &SystemLayout, axes: &[AxisId], local: &DenseOperator) -> Result<Self> {
        let dims: Vec<usize> = axes.iter().map(|&a| layout.axis_dim(a)).collect();
        let strides: Vec<usize> = axes.iter().map(|&a| layout.stride(a)).collect();
        let need: usize = dims.iter().product();
        if local.dim() != need {
            return Err(Error::MatrixDimMismatch { got: local.dim(), need });
        }
        let offsets = crate::apply::local_offsets(&dims, &strides);
        let bases = crate::apply::base_indices(layout, axes);
        let mut full = DenseOperator::zeros(layout.dim());
        for &base in &bases {
            for (lr, &offr) in offsets.iter().enumerate() {
                for (lc, &offc) in offsets.iter().enumerate() {
                    let v = local.at(lr, lc);
                    if v.norm_sqr() != 0.0 {
                        full.set(base + offr, base + offc, v);
                    }
                }
            }
        }
        Ok(full)
    }
}
