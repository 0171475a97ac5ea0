//! Exact integer linear algebra on dense arbitrary-precision matrices.
//!
//! Everything here is exact: determinants run on fraction-free Bareiss
//! elimination, permanents on Ryser inclusion-exclusion with Gray-code
//! subset updates, and the degree-2 total-minor-polynomial coefficients
//! are extracted by four corner evaluations (the determinant and the
//! permanent are both affine in any single entry). No operation ever
//! rounds or wraps.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::Result;

/// Permanents cost `O(2^n · n)`; refuse anything larger than this.
pub const MAX_PERMANENT_DIM: usize = 24;

/// Dense row-major matrix over arbitrary-precision integers.
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    /// Build from machine-integer rows; panics if the rows are ragged.
    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        let entries = rows
            .iter()
            .flat_map(|row| row.iter().map(|&v| BigInt::from(v)))
            .collect();
        IntMatrix {
            rows: r,
            cols: c,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn add_to(&mut self, i: usize, j: usize, value: &BigInt) {
        self.entries[i * self.cols + j] += value;
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut out = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let add = a * other.get(k, j);
                    out.add_to(i, j, &add);
                }
            }
        }
        out
    }

    pub fn negated(&self) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|v| -v).collect(),
        }
    }

    /// Copy with row `del_row` and column `del_col` removed.
    pub fn minor(&self, del_row: usize, del_col: usize) -> Result<IntMatrix> {
        if del_row >= self.rows || del_col >= self.cols {
            return Err(Error::BadIndex(format!(
                "minor ({del_row},{del_col}) of {}x{}",
                self.rows, self.cols
            )));
        }
        let mut out = IntMatrix::zeros(self.rows - 1, self.cols - 1);
        for i in 0..self.rows - 1 {
            let si = if i >= del_row { i + 1 } else { i };
            for j in 0..self.cols - 1 {
                let sj = if j >= del_col { j + 1 } else { j };
                out.set(i, j, self.get(si, sj).clone());
            }
        }
        Ok(out)
    }

    /// Exact determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut m: Vec<Vec<BigInt>> = (0..n)
            .map(|i| (0..n).map(|j| self.get(i, j).clone()).collect())
            .collect();
        let mut sign = 1i8;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                    Some(r) => {
                        m.swap(k, r);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    // Exact division: the Bareiss update is divisible by the
                    // previous pivot.
                    let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                    m[i][j] = num / &prev;
                }
                m[i][k] = BigInt::zero();
            }
            prev = m[k][k].clone();
        }
        let det = m[n - 1][n - 1].clone();
        Ok(if sign < 0 { -det } else { det })
    }

    /// Exact permanent by Ryser inclusion-exclusion with Gray-code column
    /// updates. Guarded at [`MAX_PERMANENT_DIM`].
    pub fn permanent(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n > MAX_PERMANENT_DIM {
            return Err(Error::PermanentTooLarge {
                got: n,
                max: MAX_PERMANENT_DIM,
            });
        }
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut sums = vec![BigInt::zero(); n];
        let mut total = BigInt::zero();
        let mut prev_gray: u64 = 0;
        for k in 1u64..(1u64 << n) {
            let gray = k ^ (k >> 1);
            let flipped = gray ^ prev_gray;
            let j = flipped.trailing_zeros() as usize;
            if gray & flipped != 0 {
                for (i, s) in sums.iter_mut().enumerate() {
                    *s += self.get(i, j);
                }
            } else {
                for (i, s) in sums.iter_mut().enumerate() {
                    *s -= self.get(i, j);
                }
            }
            prev_gray = gray;
            let mut prod = BigInt::one();
            for s in &sums {
                if s.is_zero() {
                    prod = BigInt::zero();
                    break;
                }
                prod *= s;
            }
            if (n as u32 - gray.count_ones()) % 2 == 0 {
                total += prod;
            } else {
                total -= prod;
            }
        }
        Ok(total)
    }

    /// Ordered second cofactor: delete row `u1`/column `w1` (with positional
    /// sign taken in `self`), then row `u2`/column `w2` (with positional sign
    /// taken in the first minor), and multiply both signs into the
    /// determinant of what remains.
    pub fn ordered_second_cofactor(
        &self,
        u1: usize,
        w1: usize,
        u2: usize,
        w2: usize,
    ) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if u1 == u2 || w1 == w2 {
            return Err(Error::IndexCollision(format!(
                "ordered second cofactor needs distinct rows and columns, got rows ({u1},{u2}) cols ({w1},{w2})"
            )));
        }
        let first = self.minor(u1, w1)?;
        let u2_in_first = if u2 > u1 { u2 - 1 } else { u2 };
        let w2_in_first = if w2 > w1 { w2 - 1 } else { w2 };
        let second = first.minor(u2_in_first, w2_in_first)?;
        let det = second.determinant()?;
        let sign = (u1 + w1 + u2_in_first + w2_in_first) % 2 == 0;
        Ok(if sign { det } else { -det })
    }

    /// Coefficient of `x_{u1,w1} x_{u2,w2}` in `det(X - M)` with every other
    /// indeterminate set to zero. Degenerate requests (`u1 == u2` or
    /// `w1 == w2`) short-circuit to zero.
    pub fn totalminor_coeff2_det(
        &self,
        u1: usize,
        w1: usize,
        u2: usize,
        w2: usize,
    ) -> Result<BigInt> {
        self.totalminor_coeff2(u1, w1, u2, w2, |m| m.determinant())
    }

    /// Permanent analogue of [`Self::totalminor_coeff2_det`].
    pub fn totalminor_coeff2_perm(
        &self,
        u1: usize,
        w1: usize,
        u2: usize,
        w2: usize,
    ) -> Result<BigInt> {
        self.totalminor_coeff2(u1, w1, u2, w2, |m| m.permanent())
    }

    fn totalminor_coeff2(
        &self,
        u1: usize,
        w1: usize,
        u2: usize,
        w2: usize,
        eval: impl Fn(&IntMatrix) -> Result<BigInt>,
    ) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if u1 >= n || u2 >= n || w1 >= n || w2 >= n {
            return Err(Error::BadIndex(format!(
                "coefficient indices ({u1},{w1}),({u2},{w2}) of {n}x{n}"
            )));
        }
        if u1 == u2 || w1 == w2 {
            return Ok(BigInt::zero());
        }
        // f(a,b) on the corners of {0,1}^2; the mixed second difference is
        // the x_{u1,w1} x_{u2,w2} coefficient because each entry appears
        // linearly.
        let one = BigInt::one();
        let base = self.negated();
        let f = |a: bool, b: bool| -> Result<BigInt> {
            let mut m = base.clone();
            if a {
                m.add_to(u1, w1, &one);
            }
            if b {
                m.add_to(u2, w2, &one);
            }
            eval(&m)
        };
        Ok(f(true, true)? - f(true, false)? - f(false, true)? + f(false, false)?)
    }

    /// Determinant of the principal minor at vertex 0. For the Laplacian of
    /// a graph with all edges positive this is the spanning-tree count.
    pub fn tree_number(&self) -> Result<BigInt> {
        self.tree_number_at(0)
    }

    /// Determinant of the principal minor deleting row/column `v`.
    pub fn tree_number_at(&self, v: usize) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        if self.rows == 0 {
            return Ok(BigInt::one());
        }
        self.minor(v, v)?.determinant()
    }

    /// Render with right-aligned columns.
    pub fn to_aligned_text(&self) -> String {
        let strings: Vec<String> = self.entries.iter().map(BigInt::to_string).collect();
        let mut widths = vec![0usize; self.cols];
        for i in 0..self.rows {
            for j in 0..self.cols {
                widths[j] = widths[j].max(strings[i * self.cols + j].len());
            }
        }
        let mut out = String::new();
        for i in 0..self.rows {
            for j in 0..self.cols {
                if j > 0 {
                    out.push(' ');
                }
                let s = &strings[i * self.cols + j];
                for _ in 0..widths[j] - s.len() {
                    out.push(' ');
                }
                out.push_str(s);
            }
            out.push('\n');
        }
        out
    }

    /// True when every entry is non-negative.
    pub fn is_nonnegative(&self) -> bool {
        self.entries.iter().all(|v| !v.is_negative())
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntMatrix({}x{})\n{}", self.rows, self.cols, self.to_aligned_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// O(n!) permutation expansion, the independent oracle for both kernels.
    fn expand(m: &IntMatrix, signed: bool) -> BigInt {
        fn rec(
            m: &IntMatrix,
            row: usize,
            used: &mut Vec<bool>,
            sign: i8,
            signed: bool,
            acc: &BigInt,
            total: &mut BigInt,
        ) {
            let n = m.rows();
            if row == n {
                *total += if sign < 0 && signed { -acc } else { acc.clone() };
                return;
            }
            for j in 0..n {
                if used[j] {
                    continue;
                }
                let v = m.get(row, j);
                if v.is_zero() {
                    continue;
                }
                // Count inversions introduced by picking column j at this row.
                let swaps = used[..j].iter().filter(|&&u| !u).count();
                let nsign = if swaps % 2 == 1 { -sign } else { sign };
                used[j] = true;
                let nacc = acc * v;
                rec(m, row + 1, used, nsign, signed, &nacc, total);
                used[j] = false;
            }
        }
        let mut total = BigInt::zero();
        let mut used = vec![false; m.rows()];
        rec(m, 0, &mut used, 1, signed, &BigInt::one(), &mut total);
        total
    }

    fn det_naive(m: &IntMatrix) -> BigInt {
        expand(m, true)
    }

    fn perm_naive(m: &IntMatrix) -> BigInt {
        expand(m, false)
    }

    #[test]
    fn permanent_of_signless_k3_laplacian() {
        let q = IntMatrix::from_rows(&[vec![2, 1, 1], vec![1, 2, 1], vec![1, 1, 2]]);
        assert_eq!(q.permanent().unwrap(), BigInt::from(16));
    }

    #[test]
    fn determinant_of_k3_laplacian_vanishes() {
        let l = IntMatrix::from_rows(&[vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]]);
        assert_eq!(l.determinant().unwrap(), BigInt::zero());
    }

    #[test]
    fn permanent_of_signless_path_laplacian() {
        let q = IntMatrix::from_rows(&[vec![1, 1, 0], vec![1, 2, 1], vec![0, 1, 1]]);
        assert_eq!(q.permanent().unwrap(), BigInt::from(4));
    }

    #[test]
    fn permanent_guard_rejects_oversized() {
        let m = IntMatrix::zeros(MAX_PERMANENT_DIM + 1, MAX_PERMANENT_DIM + 1);
        assert!(matches!(
            m.permanent(),
            Err(Error::PermanentTooLarge { .. })
        ));
    }

    #[test]
    fn non_square_rejected() {
        let m = IntMatrix::zeros(2, 3);
        assert!(matches!(m.determinant(), Err(Error::NotSquare { .. })));
        assert!(matches!(m.permanent(), Err(Error::NotSquare { .. })));
    }

    fn k3_laplacian() -> IntMatrix {
        IntMatrix::from_rows(&[vec![2, -1, -1], vec![-1, 2, -1], vec![-1, -1, 2]])
    }

    fn c4_laplacian() -> IntMatrix {
        IntMatrix::from_rows(&[
            vec![2, -1, 0, -1],
            vec![-1, 2, -1, 0],
            vec![0, -1, 2, -1],
            vec![-1, 0, -1, 2],
        ])
    }

    fn c5_laplacian() -> IntMatrix {
        IntMatrix::from_rows(&[
            vec![2, -1, 0, 0, -1],
            vec![-1, 2, -1, 0, 0],
            vec![0, -1, 2, -1, 0],
            vec![0, 0, -1, 2, -1],
            vec![-1, 0, 0, -1, 2],
        ])
    }

    #[test]
    fn ordered_second_cofactors_match_arborescence_counts() {
        // Frozen from direct 2-forest enumeration.
        let l = k3_laplacian();
        assert_eq!(l.ordered_second_cofactor(0, 0, 1, 1).unwrap(), BigInt::from(2));
        assert_eq!(l.ordered_second_cofactor(0, 0, 1, 2).unwrap(), BigInt::from(1));
        let c4 = c4_laplacian();
        assert_eq!(c4.ordered_second_cofactor(0, 0, 2, 1).unwrap(), BigInt::from(2));
    }

    #[test]
    fn cofactor_index_collision_rejected() {
        let l = k3_laplacian();
        assert!(matches!(
            l.ordered_second_cofactor(0, 0, 0, 1),
            Err(Error::IndexCollision(_))
        ));
    }

    #[test]
    fn degree2_coefficients_of_k3() {
        // Hand expansion of det(X - L) with x_aa = a, x_bb = b gives
        // -2ab + 3a + 3b; with x_aa, x_bc the cross coefficient is -1.
        let l = k3_laplacian();
        assert_eq!(l.totalminor_coeff2_det(0, 0, 1, 1).unwrap(), BigInt::from(-2));
        assert_eq!(l.totalminor_coeff2_det(0, 0, 1, 2).unwrap(), BigInt::from(-1));
    }

    #[test]
    fn degenerate_coefficient_requests_are_zero() {
        let l = c4_laplacian();
        assert_eq!(l.totalminor_coeff2_det(1, 0, 1, 2).unwrap(), BigInt::zero());
        assert_eq!(l.totalminor_coeff2_det(0, 2, 1, 2).unwrap(), BigInt::zero());
    }

    #[test]
    fn tree_numbers_of_small_graphs() {
        assert_eq!(k3_laplacian().tree_number().unwrap(), BigInt::from(3));
        assert_eq!(c4_laplacian().tree_number().unwrap(), BigInt::from(4));
        assert_eq!(c5_laplacian().tree_number().unwrap(), BigInt::from(5));
    }

    #[test]
    fn tree_number_independent_of_deleted_vertex() {
        for l in [k3_laplacian(), c4_laplacian(), c5_laplacian()] {
            let base = l.tree_number().unwrap();
            for v in 1..l.rows() {
                assert_eq!(l.tree_number_at(v).unwrap(), base);
            }
        }
    }

    #[test]
    fn empty_matrix_conventions() {
        let m = IntMatrix::zeros(0, 0);
        assert_eq!(m.determinant().unwrap(), BigInt::one());
        assert_eq!(m.permanent().unwrap(), BigInt::one());
    }

    fn small_matrix() -> impl Strategy<Value = IntMatrix> {
        (1usize..=5).prop_flat_map(|n| {
            proptest::collection::vec(proptest::collection::vec(-5i64..=5, n), n)
                .prop_map(|rows| IntMatrix::from_rows(&rows))
        })
    }

    proptest! {
        #[test]
        fn bareiss_matches_naive_expansion(m in small_matrix()) {
            prop_assert_eq!(m.determinant().unwrap(), det_naive(&m));
        }

        #[test]
        fn ryser_matches_naive_expansion(m in small_matrix()) {
            prop_assert_eq!(m.permanent().unwrap(), perm_naive(&m));
        }

        #[test]
        fn coeff2_antisymmetric_in_each_slot(m in small_matrix()) {
            let n = m.rows();
            prop_assume!(n >= 2);
            let c = m.totalminor_coeff2_det(0, 0, 1, 1).unwrap();
            let swapped_w = m.totalminor_coeff2_det(0, 1, 1, 0).unwrap();
            let swapped_u = m.totalminor_coeff2_det(1, 0, 0, 1).unwrap();
            prop_assert_eq!(&c, &(-swapped_w));
            prop_assert_eq!(&c, &(-swapped_u));
        }
    }
}
