//! Exact Gaussian elimination over a field, generic enough to run over
//! the rationals and over rational functions.

use super::poly::Var;
use super::rat::Rat;
use super::ratfun::RatFun;

/// The handful of field operations elimination needs.
pub trait Field: Clone + PartialEq {
    fn f_zero(&self) -> Self;
    fn f_one(&self) -> Self;
    fn f_add(&self, rhs: &Self) -> Self;
    fn f_sub(&self, rhs: &Self) -> Self;
    fn f_mul(&self, rhs: &Self) -> Self;
    fn f_div(&self, rhs: &Self) -> Self;
    fn f_neg(&self) -> Self;
    fn f_is_zero(&self) -> bool;
}

impl Field for Rat {
    fn f_zero(&self) -> Self {
        Rat::zero()
    }
    fn f_one(&self) -> Self {
        Rat::one()
    }
    fn f_add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn f_sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn f_mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn f_div(&self, rhs: &Self) -> Self {
        self / rhs
    }
    fn f_neg(&self) -> Self {
        -self
    }
    fn f_is_zero(&self) -> bool {
        self.is_zero()
    }
}

impl Field for RatFun {
    fn f_zero(&self) -> Self {
        RatFun::zero(self.var())
    }
    fn f_one(&self) -> Self {
        RatFun::one(self.var())
    }
    fn f_add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn f_sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn f_mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn f_div(&self, rhs: &Self) -> Self {
        self / rhs
    }
    fn f_neg(&self) -> Self {
        -self
    }
    fn f_is_zero(&self) -> bool {
        self.is_zero()
    }
}

/// Dense row-major matrix for elimination.
#[derive(Clone, Debug)]
pub struct Mat<F> {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<F>,
}

impl<F: Field> Mat<F> {
    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(Vec::len).unwrap_or(0);
        assert!(rows.iter().all(|row| row.len() == c));
        Mat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn at(&self, r: usize, c: usize) -> &F {
        &self.data[r * self.cols + c]
    }

    fn set(&mut self, r: usize, c: usize, v: F) {
        self.data[r * self.cols + c] = v;
    }

    /// Reduced row echelon form; returns pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row >= self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.at(r, col).f_is_zero()) else {
                continue;
            };
            if p != row {
                for c in 0..self.cols {
                    self.data.swap(row * self.cols + c, p * self.cols + c);
                }
            }
            let inv = self.at(row, col).f_one().f_div(self.at(row, col));
            for c in col..self.cols {
                let v = self.at(row, c).f_mul(&inv);
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r == row || self.at(r, col).f_is_zero() {
                    continue;
                }
                let factor = self.at(r, col).clone();
                for c in col..self.cols {
                    let v = self.at(r, c).f_sub(&factor.f_mul(self.at(row, c)));
                    self.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    /// Basis of the right nullspace.
    pub fn nullspace(mut self) -> Vec<Vec<F>> {
        let zero = match self.data.first() {
            Some(v) => v.f_zero(),
            None => return Vec::new(),
        };
        let one = zero.f_one();
        let pivots = self.rref();
        let mut basis = Vec::new();
        let mut pivot_of_col = vec![None; self.cols];
        for (i, &c) in pivots.iter().enumerate() {
            pivot_of_col[c] = Some(i);
        }
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut v = vec![zero.clone(); self.cols];
            v[free] = one.clone();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = self.at(i, free).f_neg();
            }
            basis.push(v);
        }
        basis
    }

    /// Solve self * x = b; None when inconsistent. Free variables are set
    /// to zero.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(b.len(), self.rows);
        let zero = b.first().map(|v| v.f_zero()).or_else(|| self.data.first().map(|v| v.f_zero()))?;
        let mut aug = Mat {
            rows: self.rows,
            cols: self.cols + 1,
            data: Vec::with_capacity(self.rows * (self.cols + 1)),
        };
        for r in 0..self.rows {
            for c in 0..self.cols {
                aug.data.push(self.at(r, c).clone());
            }
            aug.data.push(b[r].clone());
        }
        let pivots = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // pivot in the constant column
        }
        let mut x = vec![zero; self.cols];
        for (i, &c) in pivots.iter().enumerate() {
            x[c] = aug.at(i, self.cols).clone();
        }
        Some(x)
    }
}

/// Convenience constructor for a zero rational-function value of the
/// right variable, used when seeding matrices.
pub fn ratfun_zero(var: Var) -> RatFun {
    RatFun::zero(var)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rat {
        Rat::from_int(n)
    }

    #[test]
    fn nullspace_of_rank_deficient_matrix() {
        // x + y + z = 0; x + 2y + 3z = 0 -> nullspace spanned by (1, -2, 1)
        let m = Mat::from_rows(vec![
            vec![q(1), q(1), q(1)],
            vec![q(1), q(2), q(3)],
        ]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        let v = &ns[0];
        let scale = &v[2];
        assert_eq!(&v[0] / scale, q(1));
        assert_eq!(&v[1] / scale, q(-2));
    }

    #[test]
    fn solve_consistent_and_inconsistent() {
        let m = Mat::from_rows(vec![
            vec![q(1), q(0)],
            vec![q(0), q(1)],
            vec![q(1), q(1)],
        ]);
        assert_eq!(m.solve(&[q(2), q(3), q(5)]), Some(vec![q(2), q(3)]));
        assert_eq!(m.solve(&[q(2), q(3), q(6)]), None);
    }
}
