//! Dense matrices over the Gaussian integers.
//!
//! Every spinor-representation computation in this crate runs on exact
//! `a + b i` entries with `i64` parts; there is no floating point. The
//! fixture and tensor-product matrices only ever contain entries from
//! `{0, +-1, +-i}`, so products of a handful of them stay far away from
//! overflow.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex;
use thiserror::Error;

/// A Gaussian integer.
pub type Gaussian = Complex<i64>;

pub const G_ZERO: Gaussian = Complex::new(0, 0);
pub const G_ONE: Gaussian = Complex::new(1, 0);
pub const G_I: Gaussian = Complex::new(0, 1);

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatrixError {
    #[error("dimension mismatch: {0} vs {1}")]
    DimMismatch(usize, usize),
    #[error("matrix is singular over the rationals")]
    Singular,
    #[error("Clifford relation failed between generators {i} and {j}")]
    RelationFailure { i: usize, j: usize },
    #[error("tensor-product basis needs at least two generators, got {0}")]
    UnsupportedDimension(u32),
}

/// Square matrix with Gaussian-integer entries, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussianMatrix {
    dim: usize,
    entries: Vec<Gaussian>,
}

impl GaussianMatrix {
    pub fn zero(dim: usize) -> GaussianMatrix {
        GaussianMatrix {
            dim,
            entries: vec![G_ZERO; dim * dim],
        }
    }

    pub fn identity(dim: usize) -> GaussianMatrix {
        let mut m = GaussianMatrix::zero(dim);
        for i in 0..dim {
            m[(i, i)] = G_ONE;
        }
        m
    }

    /// Build from rows of `(re, im)` pairs.
    pub fn from_rows(rows: &[&[(i64, i64)]]) -> GaussianMatrix {
        let dim = rows.len();
        let mut m = GaussianMatrix::zero(dim);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), dim, "row {i} has wrong length");
            for (j, &(re, im)) in row.iter().enumerate() {
                m[(i, j)] = Complex::new(re, im);
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[Gaussian] {
        &self.entries
    }

    pub fn transpose(&self) -> GaussianMatrix {
        let mut m = GaussianMatrix::zero(self.dim);
        for i in 0..self.dim {
            for j in 0..self.dim {
                m[(i, j)] = self[(j, i)];
            }
        }
        m
    }

    /// Entrywise complex conjugate.
    pub fn conj(&self) -> GaussianMatrix {
        GaussianMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|z| z.conj()).collect(),
        }
    }

    pub fn conj_transpose(&self) -> GaussianMatrix {
        self.transpose().conj()
    }

    pub fn scale(&self, c: Gaussian) -> GaussianMatrix {
        GaussianMatrix {
            dim: self.dim,
            entries: self.entries.iter().map(|z| z * c).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|z| *z == G_ZERO)
    }

    /// `Some(c)` iff the matrix equals `c * I` exactly.
    pub fn scalar(&self) -> Option<Gaussian> {
        let c = self[(0, 0)];
        for i in 0..self.dim {
            for j in 0..self.dim {
                let want = if i == j { c } else { G_ZERO };
                if self[(i, j)] != want {
                    return None;
                }
            }
        }
        Some(c)
    }

    /// True when the two matrices are proportional by a nonzero Gaussian
    /// scalar (used for Schur-type uniqueness checks on group images,
    /// where the scalar is always a power of `i`).
    pub fn proportional(&self, other: &GaussianMatrix) -> bool {
        if self.dim != other.dim || self.is_zero() || other.is_zero() {
            return false;
        }
        for c in [G_ONE, G_I, -G_ONE, -G_I] {
            if *self == other.scale(c) {
                return true;
            }
        }
        false
    }

    /// Kronecker product.
    pub fn kron(&self, other: &GaussianMatrix) -> GaussianMatrix {
        let (da, db) = (self.dim, other.dim);
        let mut m = GaussianMatrix::zero(da * db);
        for i in 0..da {
            for j in 0..da {
                let a = self[(i, j)];
                if a == G_ZERO {
                    continue;
                }
                for k in 0..db {
                    for l in 0..db {
                        m[(i * db + k, j * db + l)] = a * other[(k, l)];
                    }
                }
            }
        }
        m
    }

    /// Exact determinant via fraction-free (Bareiss) elimination over the
    /// Gaussian integers, widened to `i128` internally.
    pub fn det(&self) -> Gaussian {
        let n = self.dim;
        let mut a: Vec<Complex<i128>> = self
            .entries
            .iter()
            .map(|z| Complex::new(z.re as i128, z.im as i128))
            .collect();
        let mut sign = 1i128;
        let mut prev = Complex::new(1i128, 0);
        for k in 0..n {
            if a[k * n + k] == Complex::new(0, 0) {
                let Some(pivot) = (k + 1..n).find(|&r| a[r * n + k] != Complex::new(0, 0)) else {
                    return G_ZERO;
                };
                for j in 0..n {
                    a.swap(k * n + j, pivot * n + j);
                }
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j];
                    a[i * n + j] = exact_div(num, prev);
                }
            }
            prev = a[k * n + k];
        }
        let d = a[(n - 1) * n + (n - 1)] * sign;
        Gaussian::new(
            i64::try_from(d.re).expect("determinant overflow"),
            i64::try_from(d.im).expect("determinant overflow"),
        )
    }

    pub fn is_invertible(&self) -> bool {
        self.det() != G_ZERO
    }
}

/// Division in Z[i] that is known to be exact (Bareiss invariant).
fn exact_div(num: Complex<i128>, den: Complex<i128>) -> Complex<i128> {
    assert!(den != Complex::new(0, 0), "Bareiss pivot is zero");
    let norm = den.re * den.re + den.im * den.im;
    let prod = num * den.conj();
    assert!(
        prod.re % norm == 0 && prod.im % norm == 0,
        "non-exact division in Bareiss elimination"
    );
    Complex::new(prod.re / norm, prod.im / norm)
}

impl std::ops::Index<(usize, usize)> for GaussianMatrix {
    type Output = Gaussian;
    fn index(&self, (i, j): (usize, usize)) -> &Gaussian {
        &self.entries[i * self.dim + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for GaussianMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Gaussian {
        &mut self.entries[i * self.dim + j]
    }
}

impl Mul for &GaussianMatrix {
    type Output = GaussianMatrix;
    fn mul(self, rhs: &GaussianMatrix) -> GaussianMatrix {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch in matrix product");
        let n = self.dim;
        let mut m = GaussianMatrix::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self[(i, k)];
                if a == G_ZERO {
                    continue;
                }
                for j in 0..n {
                    m[(i, j)] += a * rhs[(k, j)];
                }
            }
        }
        m
    }
}

impl Add for &GaussianMatrix {
    type Output = GaussianMatrix;
    fn add(self, rhs: &GaussianMatrix) -> GaussianMatrix {
        assert_eq!(self.dim, rhs.dim);
        GaussianMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &GaussianMatrix {
    type Output = GaussianMatrix;
    fn sub(self, rhs: &GaussianMatrix) -> GaussianMatrix {
        assert_eq!(self.dim, rhs.dim);
        GaussianMatrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &GaussianMatrix {
    type Output = GaussianMatrix;
    fn neg(self) -> GaussianMatrix {
        self.scale(-G_ONE)
    }
}

impl fmt::Display for GaussianMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<Vec<String>> = (0..self.dim)
            .map(|i| (0..self.dim).map(|j| fmt_gaussian(self[(i, j)])).collect())
            .collect();
        let width = cells.iter().flatten().map(|s| s.len()).max().unwrap_or(1);
        for row in &cells {
            write!(f, "[")?;
            for (j, cell) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{cell:>width$}")?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

/// Compact rendering of a Gaussian integer: `0`, `1`, `-i`, `2+3i`, ...
pub fn fmt_gaussian(z: Gaussian) -> String {
    match (z.re, z.im) {
        (re, 0) => format!("{re}"),
        (0, 1) => "i".to_string(),
        (0, -1) => "-i".to_string(),
        (0, im) => format!("{im}i"),
        (re, 1) => format!("{re}+i"),
        (re, -1) => format!("{re}-i"),
        (re, im) if im > 0 => format!("{re}+{im}i"),
        (re, im) => format!("{re}{im}i"),
    }
}

/// Pauli matrix `sigma_k`; `k = 0` is the 2x2 identity.
pub fn pauli(k: usize) -> GaussianMatrix {
    match k {
        0 => GaussianMatrix::from_rows(&[&[(1, 0), (0, 0)], &[(0, 0), (1, 0)]]),
        1 => GaussianMatrix::from_rows(&[&[(0, 0), (1, 0)], &[(1, 0), (0, 0)]]),
        2 => GaussianMatrix::from_rows(&[&[(0, 0), (0, -1)], &[(0, 1), (0, 0)]]),
        3 => GaussianMatrix::from_rows(&[&[(1, 0), (0, 0)], &[(0, 0), (-1, 0)]]),
        _ => panic!("pauli index {k} out of range 0..=3"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pauli_algebra() {
        let s1 = pauli(1);
        let s2 = pauli(2);
        let s3 = pauli(3);
        assert_eq!(&s1 * &s2, s3.scale(G_I));
        assert_eq!(&s1 * &s1, GaussianMatrix::identity(2));
        assert_eq!(&s2 * &s3, s1.scale(G_I));
    }

    #[test]
    fn kron_dims_and_values() {
        let m = pauli(1).kron(&GaussianMatrix::identity(2));
        assert_eq!(m.dim(), 4);
        assert_eq!(m[(0, 2)], G_ONE);
        assert_eq!(m[(2, 0)], G_ONE);
        assert_eq!(m[(0, 0)], G_ZERO);
    }

    #[test]
    fn scalar_detection() {
        let m = GaussianMatrix::identity(4).scale(G_I);
        assert_eq!(m.scalar(), Some(G_I));
        assert_eq!(pauli(1).scalar(), None);
    }

    #[test]
    fn determinant_exact() {
        assert_eq!(pauli(2).det(), -G_ONE);
        let x = GaussianMatrix::from_rows(&[
            &[(1, 0), (0, 0), (-1, 0), (0, 0)],
            &[(0, 0), (1, 0), (0, 0), (-1, 0)],
            &[(1, 0), (0, 0), (1, 0), (0, 0)],
            &[(0, 0), (1, 0), (0, 0), (1, 0)],
        ]);
        assert_eq!(x.det(), Gaussian::new(4, 0));
        let singular = GaussianMatrix::from_rows(&[&[(1, 0), (1, 0)], &[(1, 0), (1, 0)]]);
        assert_eq!(singular.det(), G_ZERO);
        assert!(!singular.is_invertible());
    }
}
