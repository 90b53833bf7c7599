use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{LaurentPoly, Rational};

/// Truncated power series `c₀ + c₁h + … + c_N h^N`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HSeries {
    coeffs: Vec<Rational>,
}

impl HSeries {
    /// Zero series of the given order.
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![Rational::zero(); order + 1],
        }
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "series must have at least one coefficient");
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `h^k`; zero beyond the truncation order.
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// `k!·c_k`, the k-th derivative at `h = 0`.
    pub fn derivative_at_zero(&self, k: usize) -> Rational {
        self.coeff(k) * Rational::from_integer(factorial(k))
    }

    pub fn is_even(&self) -> bool {
        self.coeffs.iter().skip(1).step_by(2).all(Zero::is_zero)
    }
}

fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

impl LaurentPoly {
    /// Taylor coefficients of `p(e^h)` about `h = 0` through `h^order`.
    ///
    /// Each monomial `c·t^m` contributes `c·mᵏ/k!` to the coefficient of `hᵏ`.
    pub fn exp_expand(&self, order: usize) -> HSeries {
        let mut out = HSeries::zero(order);
        for (m, c) in self.terms() {
            let m = BigInt::from(m);
            let mut m_pow = BigInt::one();
            let mut fact = BigInt::one();
            for (k, slot) in out.coeffs.iter_mut().enumerate() {
                if k > 0 {
                    m_pow *= &m;
                    fact *= BigInt::from(k);
                }
                *slot += c * Rational::new(m_pow.clone(), fact.clone());
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;
    use proptest::prelude::*;

    /// Independent route: raise the truncated series of `e^{±h}` to the
    /// power |m| by repeated truncated multiplication.
    fn oracle_expand(terms: &[(i64, i64)], order: usize) -> Vec<Rational> {
        let exp_series = |sign: i64| -> Vec<Rational> {
            let mut v = Vec::with_capacity(order + 1);
            let mut fact = 1i64;
            for k in 0..=order {
                if k > 0 {
                    fact *= k as i64;
                }
                let s = if k % 2 == 1 { sign } else { 1 };
                v.push(rat(s, fact));
            }
            v
        };
        let mul = |a: &[Rational], b: &[Rational]| -> Vec<Rational> {
            let mut out = vec![Rational::zero(); order + 1];
            for i in 0..=order {
                for j in 0..=order - i {
                    out[i + j] += &a[i] * &b[j];
                }
            }
            out
        };
        let mut total = vec![Rational::zero(); order + 1];
        for &(m, c) in terms {
            let base = exp_series(m.signum());
            let mut acc = {
                let mut one = vec![Rational::zero(); order + 1];
                one[0] = Rational::one();
                one
            };
            for _ in 0..m.abs() {
                acc = mul(&acc, &base);
            }
            for (slot, x) in total.iter_mut().zip(acc) {
                *slot += x * rat(c, 1);
            }
        }
        total
    }

    #[test]
    fn constant_and_monomial() {
        let one = LaurentPoly::one().exp_expand(4);
        assert_eq!(one.coeffs(), &[rat(1, 1), rat(0, 1), rat(0, 1), rat(0, 1), rat(0, 1)]);
        let t = LaurentPoly::t().exp_expand(3);
        assert_eq!(t.coeffs(), &[rat(1, 1), rat(1, 1), rat(1, 2), rat(1, 6)]);
    }

    #[test]
    fn bead_expansion_matches_oracle() {
        let terms = [(1, 1), (-1, 1), (0, -2)];
        let expected = oracle_expand(&terms, 4);
        assert_eq!(
            expected,
            vec![rat(0, 1), rat(0, 1), rat(1, 1), rat(0, 1), rat(1, 12)]
        );
        let got = LaurentPoly::from_int_terms(&terms).exp_expand(4);
        assert_eq!(got.coeffs(), expected.as_slice());
        assert_eq!(got.derivative_at_zero(2), rat(2, 1));
        assert!(got.is_even());
    }

    #[test]
    fn order_zero() {
        let s = LaurentPoly::from_int_terms(&[(3, 2), (-1, 5)]).exp_expand(0);
        assert_eq!(s.order(), 0);
        assert_eq!(s.coeff(0), rat(7, 1));
        assert_eq!(s.coeff(5), rat(0, 1));
    }

    proptest! {
        #[test]
        fn agrees_with_power_oracle(
            terms in prop::collection::vec((-4i64..=4, -3i64..=3), 0..5),
            order in 0usize..6,
        ) {
            let p = LaurentPoly::from_int_terms(&terms);
            let s = p.exp_expand(order);
            let expected = oracle_expand(&terms, order);
            prop_assert_eq!(s.coeffs(), expected.as_slice());
            prop_assert_eq!(s.coeff(0), p.eval_at_one());
        }

        #[test]
        fn symmetric_input_gives_even_series(
            terms in prop::collection::vec((-4i64..=4, -3i64..=3), 0..5),
        ) {
            let p = LaurentPoly::from_int_terms(&terms);
            let sym = &p + &p.bar();
            prop_assert!(sym.exp_expand(7).is_even());
        }
    }
}
