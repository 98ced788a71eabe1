//! Dense integer matrices, exact characteristic polynomials and determinants,
//! and a numeric Jacobi eigensolver used as an independent cross-check.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

/// Largest dimension accepted by the numeric eigensolver.
pub const MAX_NUMERIC_DIM: usize = 512;

/// Default off-diagonal tolerance for [`eig_symmetric_numeric`].
pub const DEFAULT_JACOBI_TOL: f64 = 1e-12;

/// Square matrix of big integers, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    dim: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![BigInt::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> BigInt) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(f(i, j));
            }
        }
        Self { dim, data }
    }

    /// Builds from rows; every row must have the same length as the number of rows.
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::Domain("matrix rows must form a square".into()));
        }
        Ok(Self::from_fn(dim, |i, j| BigInt::from(rows[i][j])))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.dim + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn trace(&self) -> BigInt {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn row_sums(&self) -> Vec<BigInt> {
        (0..self.dim).map(|i| self.row(i).iter().sum()).collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        Self::from_fn(self.dim, |i, j| self.get(i, j) + other.get(i, j))
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        Self::from_fn(self.dim, |i, j| self.get(i, j) - other.get(i, j))
    }

    /// `P M P^T` where row/column `k` of the result is row/column `perm[k]` of `self`.
    pub fn permuted(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.dim, "permutation length mismatch");
        Self::from_fn(self.dim, |i, j| self.get(perm[i], perm[j]).clone())
    }

    /// Rectangular block as nested vectors, for block-pattern inspection.
    pub fn block(&self, rows: &[usize], cols: &[usize]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|&i| cols.iter().map(|&j| self.get(i, j).clone()).collect())
            .collect()
    }

    /// Principal submatrix on the given indices.
    pub fn principal(&self, idx: &[usize]) -> Self {
        Self::from_fn(idx.len(), |i, j| self.get(idx[i], idx[j]).clone())
    }

    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        (0..self.dim)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|v| v.to_f64().unwrap_or(f64::NAN))
                    .collect()
            })
            .collect()
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{} [", self.dim, self.dim)?;
        for i in 0..self.dim {
            let row: Vec<String> = self.row(i).iter().map(|v| v.to_string()).collect();
            writeln!(f, "  {}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

/// `det(λI - m)` by Berkowitz's algorithm. Only ring operations are used, so
/// every intermediate stays an integer.
pub fn char_poly_exact(m: &IntMatrix) -> IntPolynomial {
    let n = m.dim();
    // descending coefficients of the leading r x r block's char poly
    let mut v: Vec<BigInt> = vec![BigInt::one()];
    for r in 0..n {
        let a = m.get(r, r);
        // first column of the Toeplitz factor: 1, -a, -R c, -R M c, ..., -R M^{r-1} c
        let mut t = Vec::with_capacity(r + 2);
        t.push(BigInt::one());
        t.push(-a);
        let mut x: Vec<BigInt> = (0..r).map(|i| m.get(i, r).clone()).collect();
        for k in 0..r {
            let rc: BigInt = (0..r).map(|j| m.get(r, j) * &x[j]).sum();
            t.push(-rc);
            if k + 1 < r {
                x = (0..r)
                    .map(|i| {
                        m.row(i)[..r]
                            .iter()
                            .zip(&x)
                            .filter(|(mij, _)| !mij.is_zero())
                            .map(|(mij, xj)| mij * xj)
                            .sum()
                    })
                    .collect();
            }
        }
        let next: Vec<BigInt> = (0..r + 2)
            .map(|i| {
                (0..=i.min(r))
                    .filter(|&j| i - j < t.len())
                    .map(|j| &t[i - j] * &v[j])
                    .sum()
            })
            .collect();
        v = next;
    }
    v.reverse();
    IntPolynomial::new(v)
}

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
pub fn determinant(m: &IntMatrix) -> BigInt {
    let n = m.dim();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = (0..n).map(|i| m.row(i).to_vec()).collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, sorted ascending.
///
/// Iterates until the Frobenius norm of the off-diagonal part is at most
/// `tol * max(1, ||m||_F)`.
pub fn eig_symmetric_numeric(m: &IntMatrix, tol: f64) -> Result<Vec<f64>> {
    if !m.is_symmetric() {
        return Err(Error::Domain(
            "Jacobi eigensolver needs a symmetric matrix".into(),
        ));
    }
    if m.dim() > MAX_NUMERIC_DIM {
        return Err(Error::Domain(format!(
            "dimension {} exceeds the numeric ceiling {MAX_NUMERIC_DIM}",
            m.dim()
        )));
    }
    jacobi_eigenvalues(m.to_f64(), tol)
}

#[allow(clippy::needless_range_loop)]
pub fn jacobi_eigenvalues(mut a: Vec<Vec<f64>>, tol: f64) -> Result<Vec<f64>> {
    const MAX_SWEEPS: usize = 100;
    let n = a.len();
    let frob = a.iter().flatten().map(|v| v * v).sum::<f64>().sqrt();
    let target = tol * frob.max(1.0);
    let off = |a: &Vec<Vec<f64>>| {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += a[i][j] * a[i][j];
                }
            }
        }
        s.sqrt()
    };

    for sweep in 0..MAX_SWEEPS {
        if off(&a) <= target {
            let mut ev: Vec<f64> = (0..n).map(|i| a[i][i]).collect();
            ev.sort_by(f64::total_cmp);
            return Ok(ev);
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let (app, aqq) = (a[p][p], a[q][q]);
                // entries below roundoff of both diagonals are dropped outright
                if sweep > 3
                    && app.abs() + 100.0 * apq.abs() == app.abs()
                    && aqq.abs() + 100.0 * apq.abs() == aqq.abs()
                {
                    a[p][q] = 0.0;
                    a[q][p] = 0.0;
                    continue;
                }
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
                a[p][q] = 0.0;
                a[q][p] = 0.0;
            }
        }
    }
    Err(Error::Domain(format!(
        "Jacobi iteration did not converge in {MAX_SWEEPS} sweeps"
    )))
}

/// Largest absolute entry, used for bounding eigenvalue magnitudes.
pub fn max_abs_entry(m: &IntMatrix) -> BigInt {
    m.data
        .iter()
        .map(Signed::abs)
        .max()
        .unwrap_or_else(BigInt::zero)
}
