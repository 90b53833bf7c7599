//! Seifert-matrix presentations of knots and the invariants read off them.
//!
//! A knot is given by an integer Seifert matrix `A` whose skew part `A − Aᵀ`
//! is unimodular. From `A` we get the Alexander polynomial (the symmetrized
//! `det(tA − Aᵀ)`), the degree-2 Vassiliev invariant in two normalizations,
//! and the matrix of equivariant linking numbers of the meridians dual to the
//! bands, `B = (t − 1)(tA − Aᵀ)⁻¹`.
//!
//! For Alexander polynomials normalized as below, the logarithm of
//! `Δ(K)(e^h)` is an even series `−2 Σₙ a₂ₙ(K) h²ⁿ` whose coefficients are the
//! wheel coefficients of the Kontsevich integral; only the `h²` term is used
//! here.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::Rng;
use thiserror::Error;

use crate::poly::{AlgebraError, LaurentPoly, MatRF, RatFun, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeifertError {
    #[error("Seifert matrix must be square, row {row} has {len} entries but expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("Seifert matrix must have even size, got {0}")]
    OddSize(usize),
    #[error("det(A - A^T) = {0}, expected 1")]
    NotUnimodular(BigInt),
    #[error("the unknot presentation has no bands")]
    NoBands,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A validated Seifert matrix. Size 0 presents the unknot.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SeifertMatrix {
    n: usize,
    entries: Vec<i64>,
}

/// The Alexander polynomial, normalized so that `Δ(t⁻¹) = Δ(t)` and `Δ(1) = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlexPoly(LaurentPoly);

impl AlexPoly {
    pub fn poly(&self) -> &LaurentPoly {
        &self.0
    }

    pub fn into_poly(self) -> LaurentPoly {
        self.0
    }

    pub fn is_trivial(&self) -> bool {
        self.0.is_one()
    }
}

impl fmt::Display for AlexPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Integer determinant by Bareiss elimination (all divisions are exact).
fn int_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[k][k] * &a[i][j] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

impl SeifertMatrix {
    /// Checks squareness, even size and `det(A − Aᵀ) = 1`.
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self, SeifertError> {
        let n = rows.len();
        for (row, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(SeifertError::NotSquare {
                    row,
                    len: r.len(),
                    expected: n,
                });
            }
        }
        if !n.is_multiple_of(2) {
            return Err(SeifertError::OddSize(n));
        }
        let skew = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| BigInt::from(rows[i][j]) - BigInt::from(rows[j][i]))
                    .collect()
            })
            .collect();
        let det = int_det(skew);
        if !det.is_one() {
            return Err(SeifertError::NotUnimodular(det));
        }
        Ok(Self {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn unknot() -> Self {
        Self {
            n: 0,
            entries: Vec::new(),
        }
    }

    /// The genus-1 surface of the untwisted Whitehead double with clasp sign
    /// `eps`: `[[0, 1], [0, eps]]`.
    pub fn whitehead_surface(eps: i64) -> Self {
        Self::new(vec![vec![0, 1], vec![0, eps]]).expect("doubling surface is valid")
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries.chunks(self.n.max(1)).map(<[i64]>::to_vec).take(self.n).collect()
    }

    /// `−Aᵀ`, a Seifert matrix of the mirror image.
    pub fn mirror(&self) -> Self {
        let n = self.n;
        let entries = (0..n * n).map(|k| -self.get(k % n, k / n)).collect();
        Self { n, entries }
    }

    /// `tA − Aᵀ` over ℚ(t).
    pub fn alexander_matrix(&self) -> MatRF {
        MatRF::from_fn(self.n, self.n, |i, j| {
            let p = LaurentPoly::from_int_terms(&[(1, self.get(i, j)), (0, -self.get(j, i))]);
            RatFun::from(p)
        })
    }

    /// Symmetrized `det(tA − Aᵀ)`.
    pub fn alexander(&self) -> AlexPoly {
        let det = self
            .alexander_matrix()
            .det()
            .expect("tA - A^T is square");
        let det = det
            .as_laurent()
            .expect("determinant of a polynomial matrix is a polynomial")
            .clone();
        let centred = det.shift(-(self.n as i64) / 2);
        // det(A - A^T) = 1 forces the value 1 at t = 1; symmetry follows from
        // det(tA - A^T) = t^n det(t^-1 A - A^T).
        assert!(centred.is_symmetric(), "Alexander polynomial not symmetric: {centred}");
        assert!(centred.eval_at_one().is_one(), "Alexander polynomial not 1 at t=1: {centred}");
        AlexPoly(centred)
    }

    /// `c₂` in `Δ(K)(e^h) = 1 + c₂h² + O(h⁴)`; this is the Conway `z²`
    /// coefficient and is an integer.
    pub fn conway_a2(&self) -> Rational {
        self.alexander().poly().exp_expand(2).coeff(2)
    }

    /// `(1/4)·d²/dh²|₀ Δ(K)(e^h)`, which equals `conway_a2 / 2`.
    pub fn a_corollary(&self) -> Rational {
        self.alexander().poly().exp_expand(2).derivative_at_zero(2) / Rational::from_integer(4.into())
    }

    /// Equivariant linking numbers of the meridians dual to the bands:
    /// `B = (t − 1)(tA − Aᵀ)⁻¹`.
    pub fn levine_matrix(&self) -> Result<MatRF, SeifertError> {
        if self.n == 0 {
            return Err(SeifertError::NoBands);
        }
        let inv = self.alexander_matrix().inverse()?;
        let t_minus_one = RatFun::from(LaurentPoly::from_int_terms(&[(1, 1), (0, -1)]));
        Ok(inv.scale(&t_minus_one))
    }

    /// Block-diagonal sum `A₁ ⊕ A₂`.
    pub fn connected_sum(&self, other: &Self) -> Self {
        let n = self.n + other.n;
        let mut entries = vec![0; n * n];
        for i in 0..self.n {
            for j in 0..self.n {
                entries[i * n + j] = self.get(i, j);
            }
        }
        for i in 0..other.n {
            for j in 0..other.n {
                entries[(self.n + i) * n + self.n + j] = other.get(i, j);
            }
        }
        Self { n, entries }
    }

    /// Random valid Seifert matrix of the given genus: `U + J⁺` with `U`
    /// symmetric with entries in `[-bound, bound]` and `J⁺` the strictly upper
    /// part of the standard symplectic form, so that `A − Aᵀ` is symplectic.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, genus: usize, bound: i64) -> Self {
        let n = 2 * genus;
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for j in i..n {
                let u = rng.gen_range(-bound..=bound);
                entries[i * n + j] = u;
                entries[j * n + i] = u;
            }
        }
        for k in 0..genus {
            entries[2 * k * n + 2 * k + 1] += 1;
        }
        Self { n, entries }
    }
}

impl fmt::Display for SeifertMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.rows().iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in row.iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}
