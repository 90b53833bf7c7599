use std::fmt;

use super::dense::{exact_div, from_dense, gcd, to_dense};
use super::{AlgebraError, LaurentPoly, RatFun, Rational};

/// Dense matrix over ℚ(t), row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatRF {
    rows: usize,
    cols: usize,
    entries: Vec<RatFun>,
}

/// Largest size inverted through the adjugate; larger matrices use
/// fraction-free Gauss–Jordan elimination.
const ADJUGATE_MAX: usize = 4;

impl MatRF {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            entries: vec![RatFun::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = RatFun::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> RatFun) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Self { rows, cols, entries }
    }

    /// Builds a matrix from rows of Laurent polynomials. Panics on ragged input.
    pub fn from_laurent_rows(rows: Vec<Vec<LaurentPoly>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().map(RatFun::from).collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> impl Iterator<Item = &RatFun> {
        self.entries.iter()
    }

    pub fn row(&self, i: usize) -> &[RatFun] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn map(&self, f: impl Fn(&RatFun) -> RatFun) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// Entry-wise `t ↦ t⁻¹`.
    pub fn bar(&self) -> Self {
        self.map(RatFun::bar)
    }

    pub fn scale(&self, c: &RatFun) -> Self {
        self.map(|x| x * c)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(RatFun::is_zero)
    }

    /// Entry-wise value at a rational point; `None` if any entry has a pole.
    pub fn eval(&self, t: &Rational) -> Option<Vec<Vec<Rational>>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| x.eval(t)).collect())
            .collect()
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        if self.shape() != rhs.shape() {
            return Err(AlgebraError::ShapeMismatch {
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        Ok(Self {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        self.add(&rhs.map(|x| -x))
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        if self.cols != rhs.rows {
            return Err(AlgebraError::ShapeMismatch {
                left: self.shape(),
                right: rhs.shape(),
            });
        }
        Ok(Self::from_fn(self.rows, rhs.cols, |i, j| {
            dot((0..self.cols).map(|k| (&self[(i, k)], &rhs[(k, j)])))
        }))
    }

    fn require_square(&self) -> Result<usize, AlgebraError> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(AlgebraError::NotSquare {
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    /// Determinant by Bareiss fraction-free elimination over ℚ[t^±1].
    pub fn det(&self) -> Result<RatFun, AlgebraError> {
        let n = self.require_square()?;
        let (p, scales) = self.clear_rows();
        let total = scales.iter().fold(LaurentPoly::one(), |acc, s| &acc * s);
        RatFun::new(bareiss_det(p, n), total)
    }

    pub fn inverse(&self) -> Result<Self, AlgebraError> {
        let n = self.require_square()?;
        let (p, scales) = self.clear_rows();
        // M = diag(s)⁻¹·P, so M⁻¹ = P⁻¹·diag(s) = adj(P)·diag(s) / det(P)
        let (adj, det) = if n <= ADJUGATE_MAX {
            adjugate(&p, n)
        } else {
            gauss_jordan(p, n)
        };
        if det.is_zero() {
            return Err(AlgebraError::Singular);
        }
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(RatFun::new(&adj[i * n + j] * &scales[j], det.clone())?);
            }
        }
        Ok(Self {
            rows: n,
            cols: n,
            entries,
        })
    }

    /// Row-wise common denominators `s` and the polynomial matrix `diag(s)·M`.
    fn clear_rows(&self) -> (Vec<LaurentPoly>, Vec<LaurentPoly>) {
        let mut p = Vec::with_capacity(self.entries.len());
        let mut scales = Vec::with_capacity(self.rows);
        for i in 0..self.rows {
            let row = self.row(i);
            let s = row.iter().fold(LaurentPoly::one(), |acc, x| lcm(&acc, x.den()));
            for x in row {
                let q = exact_div(&s, x.den()).expect("lcm is a common multiple");
                p.push(x.num() * &q);
            }
            scales.push(s);
        }
        (p, scales)
    }

}

fn minor<T: Clone>(a: &[T], n: usize, skip_row: usize, skip_col: usize) -> Vec<T> {
    let mut out = Vec::with_capacity((n - 1) * (n - 1));
    for i in (0..n).filter(|&i| i != skip_row) {
        for j in (0..n).filter(|&j| j != skip_col) {
            out.push(a[i * n + j].clone());
        }
    }
    out
}

/// `Σ a·b` over a common denominator, normalized once.
fn dot<'a>(pairs: impl Iterator<Item = (&'a RatFun, &'a RatFun)>) -> RatFun {
    let pairs: Vec<_> = pairs.filter(|(a, b)| !a.is_zero() && !b.is_zero()).collect();
    let dens: Vec<LaurentPoly> = pairs.iter().map(|(a, b)| a.den() * b.den()).collect();
    let common = dens.iter().fold(LaurentPoly::one(), |acc, d| lcm(&acc, d));
    let mut num = LaurentPoly::zero();
    for ((a, b), d) in pairs.iter().zip(&dens) {
        let q = exact_div(&common, d).expect("lcm is a common multiple");
        num += &(&(a.num() * b.num()) * &q);
    }
    RatFun::new(num, common).expect("denominators are nonzero")
}

fn lcm(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if b.is_one() || a == b {
        return a.clone();
    }
    if a.is_one() {
        return b.clone();
    }
    let g = from_dense(&gcd(&to_dense(a), &to_dense(b)));
    exact_div(&(a * b), &g).expect("gcd divides the product")
}

/// `adj(P)` and `det(P)` by cofactors.
fn adjugate(p: &[LaurentPoly], n: usize) -> (Vec<LaurentPoly>, LaurentPoly) {
    let det = bareiss_det(p.to_vec(), n);
    if n == 1 {
        return (vec![LaurentPoly::one()], det);
    }
    let mut adj = Vec::with_capacity(n * n);
    for i in 0..n {
        for j in 0..n {
            // adj(P)[i][j] = (-1)^{i+j} det(P without row j, column i)
            let cof = bareiss_det(minor(p, n, j, i), n - 1);
            adj.push(if (i + j) % 2 == 1 { -cof } else { cof });
        }
    }
    (adj, det)
}

/// One-step fraction-free Gauss–Jordan on `[P | I]`. The left block ends as
/// `d·I` and the right block as `d·P⁻¹`; returns the right block and `d`, or
/// `d = 0` when `P` is singular.
fn gauss_jordan(p: Vec<LaurentPoly>, n: usize) -> (Vec<LaurentPoly>, LaurentPoly) {
    let w = 2 * n;
    let mut a: Vec<Vec<LaurentPoly>> = p
        .chunks(n.max(1))
        .take(n)
        .enumerate()
        .map(|(i, row)| {
            let mut row = row.to_vec();
            row.extend((0..n).map(|j| if i == j { LaurentPoly::one() } else { LaurentPoly::zero() }));
            row
        })
        .collect();
    let mut prev = LaurentPoly::one();
    for k in 0..n {
        let Some(pivot_row) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return (Vec::new(), LaurentPoly::zero());
        };
        a.swap(k, pivot_row);
        let pivot = a[k][k].clone();
        for i in (0..n).filter(|&i| i != k) {
            let factor = a[i][k].clone();
            for j in (0..w).filter(|&j| j != k) {
                let v = &(&pivot * &a[i][j]) - &(&factor * &a[k][j]);
                a[i][j] = exact_div(&v, &prev).expect("Sylvester identity");
            }
            a[i][k] = LaurentPoly::zero();
        }
        prev = pivot;
    }
    let right = a.into_iter().flat_map(|row| row.into_iter().skip(n)).collect();
    (right, prev)
}

fn bareiss_det(mut a: Vec<LaurentPoly>, n: usize) -> LaurentPoly {
    if n == 0 {
        return LaurentPoly::one();
    }
    let idx = |i: usize, j: usize| i * n + j;
    let mut sign_flip = false;
    let mut prev = LaurentPoly::one();
    for k in 0..n - 1 {
        if a[idx(k, k)].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !a[idx(r, k)].is_zero()) else {
                return LaurentPoly::zero();
            };
            for j in 0..n {
                a.swap(idx(k, j), idx(r, j));
            }
            sign_flip = !sign_flip;
        }
        let pivot = a[idx(k, k)].clone();
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &(&pivot * &a[idx(i, j)]) - &(&a[idx(i, k)] * &a[idx(k, j)]);
                a[idx(i, j)] = exact_div(&v, &prev).expect("Sylvester identity");
            }
        }
        prev = pivot;
    }
    let d = a[idx(n - 1, n - 1)].clone();
    if sign_flip {
        -d
    } else {
        d
    }
}

impl std::ops::Index<(usize, usize)> for MatRF {
    type Output = RatFun;

    fn index(&self, (i, j): (usize, usize)) -> &RatFun {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for MatRF {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut RatFun {
        assert!(i < self.rows && j < self.cols, "index out of bounds");
        &mut self.entries[i * self.cols + j]
    }
}

/// One bracketed row per line, e.g. `[t + t^-1 - 2, -t + 1]`.
impl fmt::Display for MatRF {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}
