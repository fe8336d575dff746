//! Banded convolution matrices.
//!
//! For `f = a_0 + … + a_n x^n` and a multiplier degree `s`, row `i` of
//! `A_s` holds `a_0..a_n` in columns `i..=i+n`, so that for a coefficient row
//! vector `b` of `g`, `b·A_s` is the coefficient vector of `g·f`. Splitting
//! `A_s = [L_s | R_s]` after the first `n` columns leaves `R_s` lower
//! triangular with `a_n` on the diagonal, and `T_s = R_s⁻¹ L_s`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::rational::Rational;

/// Dense row-major rational matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        Matrix { rows: rows.len(), cols, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    fn set(&mut self, i: usize, j: usize, v: Rational) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Columns `start..end` as a new matrix.
    pub fn columns(&self, start: usize, end: usize) -> Matrix {
        Matrix::from_rows((0..self.rows).map(|i| self.row(i)[start..end].to_vec()).collect())
            .with_shape(self.rows, end - start)
    }

    fn with_shape(mut self, rows: usize, cols: usize) -> Self {
        if self.data.is_empty() {
            self.rows = rows;
            self.cols = cols;
        }
        self
    }

    /// Row vector times matrix: `v·M`.
    pub fn left_mul(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.rows);
        (0..self.cols)
            .map(|j| {
                v.iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .fold(Rational::zero(), |acc, (i, x)| acc + x * self.get(i, j))
            })
            .collect()
    }

    /// Matrix times column vector: `M·v`.
    pub fn right_mul(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).fold(Rational::zero(), |acc, (a, x)| acc + a * x))
            .collect()
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows);
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let v = out.get(i, j) + a * other.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        out
    }

    /// Concatenates `[self | other]`.
    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let rows = (0..self.rows)
            .map(|i| self.row(i).iter().chain(other.row(i)).cloned().collect())
            .collect();
        Matrix::from_rows(rows).with_shape(self.rows, self.cols + other.cols)
    }
}

#[derive(Clone, Debug)]
pub struct ConvolutionSystem {
    /// Coefficients of `f`, ascending.
    pub a: Vec<Rational>,
    /// Multiplier degree.
    pub s: usize,
    /// `A_s`, `(s+1) × (s+n+1)`.
    pub full: Matrix,
    /// `L_s`, first `n` columns.
    pub left: Matrix,
    /// `R_s`, last `s+1` columns.
    pub right: Matrix,
    /// `T_s = R_s⁻¹ L_s`, `(s+1) × n`.
    pub t_block: Matrix,
}

/// Builds `A_s`, its split, and `T_s` for a monic `f`.
pub fn build_convolution(f: &Polynomial, s: usize) -> Result<ConvolutionSystem> {
    if !f.is_monic() {
        return Err(Error::NotMonic);
    }
    let a = f.coeffs().to_vec();
    let n = a.len() - 1;
    let mut full = Matrix::zeros(s + 1, s + n + 1);
    for i in 0..=s {
        for (k, ak) in a.iter().enumerate() {
            full.set(i, i + k, ak.clone());
        }
    }
    let left = full.columns(0, n);
    let right = full.columns(n, n + s + 1);
    let t_block = lower_triangular_solve(&right, &left);
    Ok(ConvolutionSystem { a, s, full, left, right, t_block })
}

/// Solves `R·X = B` for lower-triangular `R` with a nonzero diagonal.
fn lower_triangular_solve(r: &Matrix, b: &Matrix) -> Matrix {
    let mut x = Matrix::zeros(b.rows(), b.cols());
    for i in 0..r.rows() {
        for j in 0..b.cols() {
            let mut acc = b.get(i, j).clone();
            for k in 0..i {
                let rik = r.get(i, k);
                if !rik.is_zero() {
                    acc -= rik * x.get(k, j);
                }
            }
            x.set(i, j, acc / r.get(i, i));
        }
    }
    x
}

impl ConvolutionSystem {
    /// Degree of `f`.
    pub fn n(&self) -> usize {
        self.a.len() - 1
    }

    /// `b·A_s`, i.e. the coefficients of `g·f` (including trailing zeros).
    pub fn apply(&self, b: &[Rational]) -> Vec<Rational> {
        self.full.left_mul(b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::multiply;
    use crate::rational::int;
    use num_traits::One;

    #[test]
    fn small_system() {
        let f = Polynomial::from_ints(&[1, 0, 1]);
        let sys = build_convolution(&f, 1).unwrap();
        let expect = Matrix::from_rows(vec![
            vec![int(1), int(0), int(1), int(0)],
            vec![int(0), int(1), int(0), int(1)],
        ]);
        assert_eq!(sys.full, expect);
        assert_eq!(sys.apply(&[int(1), int(1)]), vec![int(1); 4]);
        assert_eq!(
            Polynomial::new(sys.apply(&[int(1), int(1)])),
            multiply(&Polynomial::from_ints(&[1, 1]), &f)
        );
    }

    #[test]
    fn degree_zero_multiplier_reproduces_f() {
        let f = Polynomial::from_ints(&[10, -2, 10, -1, 1]);
        let sys = build_convolution(&f, 0).unwrap();
        assert_eq!(sys.apply(&[int(1)]), f.coeffs().to_vec());
        // T_0 is just a_0..a_{n-1}.
        assert_eq!(sys.t_block.row(0), &f.coeffs()[..4]);
    }

    #[test]
    fn monic_diagonal_and_reconstruction() {
        let f = Polynomial::from_ints(&[3, -4, 2, 1]);
        let sys = build_convolution(&f, 3).unwrap();
        for i in 0..4 {
            assert!(sys.right.get(i, i).is_one());
            for j in i + 1..4 {
                assert!(sys.right.get(i, j).is_zero());
            }
        }
        assert_eq!(sys.right.mul(&sys.t_block), sys.left);
        assert_eq!(sys.left.hstack(&sys.right), sys.full);
    }

    #[test]
    fn rejects_non_monic() {
        assert!(build_convolution(&Polynomial::from_ints(&[1, 2]), 1).is_err());
    }
}
