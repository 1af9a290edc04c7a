//! Hermitian eigendecomposition via the system LAPACK, plus matrix exponentials.

use crate::error::{Error, Result};
use crate::operator::DenseOperator;
use crate::C64;

extern "C" {
    fn zheev_(
        jobz: *const u8,
        uplo: *const u8,
        n: *const i32,
        a: *mut C64,
        lda: *const i32,
        w: *mut f64,
        work: *mut C64,
        lwork: *const i32,
        rwork: *mut f64,
        info: *mut i32,
    );
}

/// Eigendecomposition of a Hermitian matrix.
///
/// Returns ascending eigenvalues and a matrix whose columns are the
/// corresponding orthonormal eigenvectors. The input is symmetrized
/// internally; callers should pass matrices that are Hermitian up to
/// round-off.
pub fn eigh(h: &DenseOperator) -> Result<(Vec<f64>, DenseOperator)> {
    let n = h.dim();
    if n == 0 {
        return Err(Error::MatrixDimMismatch { got: 0, need: 1 });
    }
    // Column-major buffer; LAPACK overwrites it with eigenvectors.
    let mut a = vec![C64::new(0.0, 0.0); n * n];
    for r in 0..n {
        for c in 0..n {
            let sym = 0.5 * (h.at(r, c) + h.at(c, r).conj());
            a[c * n + r] = sym;
        }
    }
    let mut w = vec![0.0_f64; n];
    let mut rwork = vec![0.0_f64; (3 * n).saturating_sub(2).max(1)];
    let nn = n as i32;
    let mut info: i32 = 0;

    let mut query = [C64::new(0.0, 0.0)];
    let lwork_query: i32 = -1;
    unsafe {
        zheev_(
            b"V".as_ptr(),
            b"L".as_ptr(),
            &nn,
            a.as_mut_ptr(),
            &nn,
            w.as_mut_ptr(),
            query.as_mut_ptr(),
            &lwork_query,
            rwork.as_mut_ptr(),
            &mut info,
        );
    }
    if info != 0 {
        return Err(Error::EigFailure { info });
    }
    let lwork = (query[0].re as i32).max(2 * nn - 1).max(1);
    let mut work = vec![C64::new(0.0, 0.0); lwork as usize];
    unsafe {
        zheev_(
            b"V".as_ptr(),
            b"L".as_ptr(),
            &nn,
            a.as_mut_ptr(),
            &nn,
            w.as_mut_ptr(),
            work.as_mut_ptr(),
            &lwork,
            rwork.as_mut_ptr(),
            &mut info,
        );
    }
    if info != 0 {
        return Err(Error::EigFailure { info });
    }
    let vectors = DenseOperator::from_fn(n, |r, c| a[c * n + r]);
    Ok((w, vectors))
}

/// `V exp(scale * diag(w)) V^dag` for Hermitian `h = V diag(w) V^dag`.
///
/// With `scale = -i t` this is the evolution operator `exp(-i h t)`.
pub fn expm_hermitian(h: &DenseOperator, scale: C64) -> Result<DenseOperator> {
    let (w, v) = eigh(h)?;
    let n = h.dim();
    let phases: Vec<C64> = w.iter().map(|&lam| (scale * lam).exp()).collect();
    // V * diag(phases) * V^dag without forming intermediates twice.
    let mut scaled = v.clone();
    for r in 0..n {
        for c in 0..n {
            scaled.set(r, c, v.at(r, c) * phases[c]);
        }
    }
    scaled.mul(&v.dagger())
}

/// Matrix exponential by scaling-and-squaring on a plain Taylor series.
///
/// Slower than the eigendecomposition route and algorithmically independent
/// of it, which is what makes it useful as a cross-check oracle in tests.
pub fn expm_taylor(m: &DenseOperator) -> DenseOperator {
    let n = m.dim();
    let norm1 = (0..n)
        .map(|c| (0..n).map(|r| m.at(r, c).norm()).sum::<f64>())
        .fold(0.0, f64::max);
    let s = if norm1 > 0.5 { (norm1 / 0.5).log2().ceil() as u32 } else { 0 };
    let scaled = m.scale(C64::new(1.0 / 2f64.powi(s as i32), 0.0));

    let mut result = DenseOperator::identity(n);
    let mut term = DenseOperator::identity(n);
    for k in 1..200 {
        term = term.mul(&scaled).unwrap().scale(C64::new(1.0 / k as f64, 0.0));
        result = result.add(&term).unwrap();
        if term.max_abs() < 1e-300_f64.max(1e-20 * result.max_abs()) {
            break;
        }
    }
    for _ in 0..s {
        result = result.mul(&result).unwrap();
    }
    result
}
