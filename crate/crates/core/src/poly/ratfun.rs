use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::dense::{div_rem, from_dense, gcd, to_dense};
use super::{AlgebraError, LaurentPoly, Rational};

/// An element of ℚ(t) in normal form.
///
/// The denominator is an ordinary polynomial with nonzero constant term,
/// integer coefficients of content 1 and positive leading coefficient. Powers
/// of `t` are units and live in the numerator. Numerator and denominator are
/// coprime, so derived equality is equality of rational functions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFun {
    num: LaurentPoly,
    den: LaurentPoly,
}

/// `c` such that `p / c` has coprime integer coefficients and a positive
/// leading coefficient.
fn signed_content(p: &LaurentPoly) -> Rational {
    let mut num_gcd = num_bigint::BigInt::zero();
    let mut den_lcm = num_bigint::BigInt::one();
    for (_, c) in p.terms() {
        num_gcd = num_gcd.gcd(c.numer());
        den_lcm = den_lcm.lcm(c.denom());
    }
    let content = Rational::new(num_gcd, den_lcm);
    match p.lead() {
        Some(l) if l.is_negative() => -content,
        _ => content,
    }
}

impl RatFun {
    pub fn zero() -> Self {
        Self {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from(LaurentPoly::one())
    }

    pub fn t() -> Self {
        Self::from(LaurentPoly::t())
    }

    /// `num / den` brought to normal form.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let den_low = den.min_exp().unwrap_or(0);
        let den0 = den.shift(-den_low);
        let num1 = num.shift(-den_low);
        let num_low = num1.min_exp().unwrap_or(0);
        let num0 = num1.shift(-num_low);

        let (n, d) = (to_dense(&num0), to_dense(&den0));
        let g = gcd(&n, &d);
        let (n, d) = if g.len() > 1 {
            (div_rem(&n, &g).0, div_rem(&d, &g).0)
        } else {
            (n, d)
        };
        let den = from_dense(&d);
        let c = signed_content(&den);
        let inv = c.recip();
        Ok(Self {
            num: from_dense(&n).scale(&inv).shift(num_low),
            den: den.scale(&inv),
        })
    }

    pub fn from_rational(c: Rational) -> Self {
        Self::from(LaurentPoly::constant(c))
    }

    pub fn from_int(c: i64) -> Self {
        Self::from(LaurentPoly::from_int(c))
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// The numerator, when this is a Laurent polynomial.
    pub fn as_laurent(&self) -> Option<&LaurentPoly> {
        self.den.is_one().then_some(&self.num)
    }

    pub fn inverse(&self) -> Result<Self, AlgebraError> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, AlgebraError> {
        if rhs.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Self::new(&self.num * &rhs.den, &self.den * &rhs.num)
    }

    /// Substitution `t ↦ t⁻¹`.
    pub fn bar(&self) -> Self {
        Self::new(self.num.bar(), self.den.bar()).expect("bar of a nonzero denominator is nonzero")
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.num.scale(c), self.den.clone()).expect("denominator is nonzero")
    }

    /// Value at `t`, or `None` at a pole.
    pub fn eval(&self, t: &Rational) -> Option<Rational> {
        let d = self.den.eval(t)?;
        if d.is_zero() {
            return None;
        }
        Some(self.num.eval(t)? / d)
    }
}

impl From<LaurentPoly> for RatFun {
    fn from(p: LaurentPoly) -> Self {
        Self {
            num: p,
            den: LaurentPoly::one(),
        }
    }
}

impl Add for &RatFun {
    type Output = RatFun;

    fn add(self, rhs: &RatFun) -> RatFun {
        if self.den == rhs.den {
            return RatFun::new(&self.num + &rhs.num, self.den.clone()).expect("nonzero den");
        }
        RatFun::new(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
        .expect("nonzero den")
    }
}

impl Sub for &RatFun {
    type Output = RatFun;

    fn sub(self, rhs: &RatFun) -> RatFun {
        self + &(-rhs)
    }
}

impl Neg for &RatFun {
    type Output = RatFun;

    fn neg(self) -> RatFun {
        RatFun {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &RatFun {
    type Output = RatFun;

    fn mul(self, rhs: &RatFun) -> RatFun {
        if self.is_zero() || rhs.is_zero() {
            return RatFun::zero();
        }
        RatFun::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero den")
    }
}

impl Add for RatFun {
    type Output = RatFun;
    fn add(self, rhs: RatFun) -> RatFun {
        &self + &rhs
    }
}

impl Sub for RatFun {
    type Output = RatFun;
    fn sub(self, rhs: RatFun) -> RatFun {
        &self - &rhs
    }
}

impl Mul for RatFun {
    type Output = RatFun;
    fn mul(self, rhs: RatFun) -> RatFun {
        &self * &rhs
    }
}

impl Neg for RatFun {
    type Output = RatFun;
    fn neg(self) -> RatFun {
        -&self
    }
}

impl fmt::Display for RatFun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}
