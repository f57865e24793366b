use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rand::Rng;

use super::{Coord, Poly};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rational::{self, Rational};

/// A dense matrix of polynomials.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Poly>,
}

/// Outcome of comparing a symbolic determinant with numeric determinants at
/// random points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DetCheck {
    pub points: usize,
    pub mismatches: usize,
}

impl DetCheck {
    pub fn agreed(&self) -> bool {
        self.mismatches == 0
    }
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            data: vec![Poly::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Poly::one());
        }
        m
    }

    pub fn from_rows(entries: Vec<Vec<Poly>>) -> Result<Self> {
        let rows = entries.len();
        let cols = entries.first().map_or(0, Vec::len);
        if entries.iter().any(|r| r.len() != cols) {
            return Err(Error::ShapeMismatch("ragged rows".into()));
        }
        Ok(PolyMatrix {
            rows,
            cols,
            data: entries.into_iter().flatten().collect(),
        })
    }

    pub fn from_constant(m: &Matrix) -> Self {
        let mut out = Self::zeros(m.rows(), m.cols());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                out.set(i, j, Poly::constant(m[(i, j)].clone()));
            }
        }
        out
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Poly) {
        self.data[i * self.cols + j] = p;
    }

    pub fn entries(&self) -> impl Iterator<Item = &Poly> {
        self.data.iter()
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, block: &PolyMatrix) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(r0 + i, c0 + j, block.get(i, j).clone());
            }
        }
    }

    pub fn scale(&self, c: &Poly) -> PolyMatrix {
        PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|p| p * c).collect(),
        }
    }

    pub fn try_add(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} + {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(PolyMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn try_mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let x = self.get(i, k);
                if x.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let y = other.get(k, j);
                    if y.is_zero() {
                        continue;
                    }
                    let idx = i * out.cols + j;
                    out.data[idx] = &out.data[idx] + &(x * y);
                }
            }
        }
        Ok(out)
    }

    pub fn trace(&self) -> Result<Poly> {
        if self.rows != self.cols {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        Ok((0..self.rows).map(|i| self.get(i, i).clone()).sum())
    }

    pub fn block_diag(blocks: &[PolyMatrix]) -> PolyMatrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(rows, cols);
        let (mut r, mut c) = (0, 0);
        for b in blocks {
            out.set_block(r, c, b);
            r += b.rows;
            c += b.cols;
        }
        out
    }

    /// Entry-wise evaluation.
    pub fn eval_with(&self, value: &impl Fn(&Coord) -> Result<Rational>) -> Result<Matrix> {
        let mut out = Matrix::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out[(i, j)] = self.get(i, j).eval_with(value)?;
            }
        }
        Ok(out)
    }

    /// Exact determinant by Laplace expansion along rows, memoizing minors by
    /// the set of columns still available.
    pub fn det(&self) -> Result<Poly> {
        if self.rows != self.cols {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(Poly::one());
        }
        if n > 63 {
            return Err(Error::Invalid(format!(
                "symbolic determinant of size {n} is out of range"
            )));
        }
        // Nonzero entries per row, so sparse rows expand cheaply.
        let support: Vec<Vec<usize>> = (0..n)
            .map(|i| (0..n).filter(|&j| !self.get(i, j).is_zero()).collect())
            .collect();
        let mut memo: HashMap<u64, Poly> = HashMap::new();
        Ok(self.minor(0, (1u64 << n) - 1, &support, &mut memo))
    }

    fn minor(
        &self,
        row: usize,
        cols: u64,
        support: &[Vec<usize>],
        memo: &mut HashMap<u64, Poly>,
    ) -> Poly {
        if row == self.rows {
            return Poly::one();
        }
        if let Some(p) = memo.get(&cols) {
            return p.clone();
        }
        let mut acc = Poly::zero();
        for &j in &support[row] {
            if cols & (1 << j) == 0 {
                continue;
            }
            // Sign from the position of j among the remaining columns.
            let before = (cols & ((1u64 << j) - 1)).count_ones();
            let sub = self.minor(row + 1, cols & !(1 << j), support, memo);
            if sub.is_zero() {
                continue;
            }
            let term = self.get(row, j) * &sub;
            if before % 2 == 0 {
                acc = &acc + &term;
            } else {
                acc = &acc - &term;
            }
        }
        memo.insert(cols, acc.clone());
        acc
    }

    /// Compares `det` against numeric determinants of this matrix at
    /// `points` random rational points.
    pub fn det_cross_check<R: Rng + ?Sized>(
        &self,
        det: &Poly,
        rng: &mut R,
        points: usize,
    ) -> Result<DetCheck> {
        if self.rows != self.cols {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut coords: Vec<Coord> = self
            .data
            .iter()
            .flat_map(|p| p.coords())
            .chain(det.coords())
            .collect();
        coords.sort();
        coords.dedup();
        let mut mismatches = 0;
        for _ in 0..points {
            let values: BTreeMap<Coord, Rational> = coords
                .iter()
                .map(|c| (c.clone(), rational::random_small(rng, 7)))
                .collect();
            let look = |c: &Coord| Ok(values[c].clone());
            let numeric = self.eval_with(&look)?.det();
            if numeric != det.eval_with(look)? {
                mismatches += 1;
            }
        }
        Ok(DetCheck { points, mismatches })
    }

    /// Determinant computed with the evaluation cross-check enabled.
    pub fn det_checked<R: Rng + ?Sized>(&self, rng: &mut R, points: usize) -> Result<Poly> {
        let d = self.det()?;
        let check = self.det_cross_check(&d, rng, points)?;
        if !check.agreed() {
            return Err(Error::Inconsistent(format!(
                "symbolic determinant disagrees with evaluation at {} of {} points",
                check.mismatches, check.points
            )));
        }
        Ok(d)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Poly::is_zero)
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "PolyMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let cells: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        Ok(())
    }
}
