//! Dense univariate helpers: division with remainder and gcd in ℚ[t], and
//! exact division in ℚ[t^±1].

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{LaurentPoly, Rational};

/// Dense ordinary polynomial, lowest degree first, no trailing zeros.
pub(crate) type Dense = Vec<Rational>;

pub(crate) fn to_dense(p: &LaurentPoly) -> Dense {
    let Some(top) = p.max_exp() else {
        return Vec::new();
    };
    debug_assert!(p.min_exp().unwrap_or(0) >= 0);
    let mut v = vec![Rational::zero(); top as usize + 1];
    for (e, c) in p.terms() {
        v[e as usize] = c.clone();
    }
    v
}

pub(crate) fn from_dense(v: &[Rational]) -> LaurentPoly {
    LaurentPoly::from_terms(v.iter().enumerate().map(|(e, c)| (e as i64, c.clone())))
}

fn trim(v: &mut Dense) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

/// Quotient and remainder of `a / b`, `b` nonzero.
pub(crate) fn div_rem(a: &[Rational], b: &[Rational]) -> (Dense, Dense) {
    let mut rem: Dense = a.to_vec();
    trim(&mut rem);
    let db = b.len() - 1;
    let lead = &b[db];
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![Rational::zero(); rem.len() - db];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let q = &rem[rem.len() - 1] / lead;
        for (i, bc) in b.iter().enumerate() {
            rem[shift + i] -= &q * bc;
        }
        quot[shift] = q;
        // the top coefficient cancels exactly
        rem.pop();
        trim(&mut rem);
    }
    (quot, rem)
}

/// Integer multiple of `v` with coprime coefficients and positive leading
/// coefficient.
fn primitive(v: &[Rational]) -> Vec<BigInt> {
    let den = v.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = v.iter().map(|c| c.numer() * (&den / c.denom())).collect();
    primitive_int(ints)
}

fn primitive_int(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    let mut content = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if v.last().is_some_and(Signed::is_negative) {
        content = -content;
    }
    if !content.is_zero() && !content.is_one() {
        for c in &mut v {
            *c = &*c / &content;
        }
    }
    v
}

/// Pseudo-remainder of `a` by `b` over ℤ[t], `b` nonzero.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let lead = &b[b.len() - 1];
    while r.len() >= b.len() {
        let top = r[r.len() - 1].clone();
        let shift = r.len() - b.len();
        for c in &mut r {
            *c *= lead;
        }
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] -= &top * bc;
        }
        r.pop();
        while r.last().is_some_and(Zero::is_zero) {
            r.pop();
        }
    }
    r
}

/// Monic gcd over ℚ[t], computed by the primitive remainder sequence in ℤ[t].
pub(crate) fn gcd(a: &[Rational], b: &[Rational]) -> Dense {
    let (mut x, mut y) = (primitive(a), primitive(b));
    if x.len() < y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    while !y.is_empty() {
        let r = primitive_int(pseudo_rem(&x, &y));
        x = y;
        y = r;
    }
    let Some(lead) = x.last().cloned() else {
        return Vec::new();
    };
    x.into_iter().map(|c| Rational::new(c, lead.clone())).collect()
}

/// `a / b` in ℚ[t^±1] when `b` divides `a`; `None` otherwise or when `b = 0`.
pub(crate) fn exact_div(a: &LaurentPoly, b: &LaurentPoly) -> Option<LaurentPoly> {
    let (Some(bl), Some(_)) = (b.min_exp(), b.max_exp()) else {
        return None;
    };
    let Some(al) = a.min_exp() else {
        return Some(LaurentPoly::zero());
    };
    if b.num_terms() == 1 {
        let c = b.coeff(bl);
        return Some(a.scale(&c.recip()).shift(-bl));
    }
    let (q, r) = div_rem(&to_dense(&a.shift(-al)), &to_dense(&b.shift(-bl)));
    r.is_empty().then(|| from_dense(&q).shift(al - bl))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_int_terms(terms)
    }

    #[test]
    fn exact_division() {
        let a = lp(&[(1, 1), (0, -1)]);
        let b = lp(&[(0, 1), (-1, 1)]);
        let prod = &a * &b;
        assert_eq!(exact_div(&prod, &b), Some(a.clone()));
        assert_eq!(exact_div(&prod, &a), Some(b.clone()));
        assert_eq!(exact_div(&a, &b), None);
        assert_eq!(exact_div(&a, &LaurentPoly::zero()), None);
        assert_eq!(exact_div(&LaurentPoly::zero(), &a), Some(LaurentPoly::zero()));
        assert_eq!(exact_div(&a, &lp(&[(-2, 2)])), Some(a.shift(2).scale(&crate::poly::rat(1, 2))));
    }

    #[test]
    fn gcd_is_monic() {
        // (t - 1)(t + 2) and (t - 1)(2t + 3)
        let a = to_dense(&lp(&[(2, 1), (1, 1), (0, -2)]));
        let b = to_dense(&lp(&[(2, 2), (1, 1), (0, -3)]));
        assert_eq!(from_dense(&gcd(&a, &b)), lp(&[(1, 1), (0, -1)]));
    }
}
