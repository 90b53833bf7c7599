//! The quotient `A₂(Λ)` of `ℚ[t^±1]^{⊗3}` in which the 2-loop invariant lives.
//!
//! Two families of relations are imposed:
//!
//! * the simultaneous shift `a ⊗ b ⊗ c = ta ⊗ tb ⊗ tc`;
//! * the action of `Aut(Θ) = Sym₃ × Sym₂`, permuting the three tensor factors
//!   and replacing `t` by `t⁻¹` in all factors at once.
//!
//! Both act on monomial triples `t^e₁ ⊗ t^e₂ ⊗ t^e₃` by permutations of the
//! exponent vector, a global sign, and a common translation. A `ThetaElement`
//! is therefore a finite ℚ-combination of orbit representatives, and equality
//! is structural.
//!
//! No other relations are imposed. Equality here may be finer than in a space
//! carrying further graph relations, never coarser.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use crate::poly::{LaurentPoly, Rational};

/// Canonical representative of the orbit of `t^e₁ ⊗ t^e₂ ⊗ t^e₃`: the
/// lexicographically least of the 12 shift-normalized candidates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonomialTriple([i64; 3]);

const PERMUTATIONS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

impl MonomialTriple {
    pub fn canonical(e1: i64, e2: i64, e3: i64) -> Self {
        let e = [e1, e2, e3];
        let mut best: Option<[i64; 3]> = None;
        for perm in PERMUTATIONS {
            for sign in [1, -1] {
                let mut c = perm.map(|k| sign * e[k]);
                let m = *c.iter().min().expect("three entries");
                c.iter_mut().for_each(|x| *x -= m);
                if best.is_none_or(|b| c < b) {
                    best = Some(c);
                }
            }
        }
        Self(best.expect("orbit is nonempty"))
    }

    pub fn exponents(&self) -> [i64; 3] {
        self.0
    }

    pub fn trivial() -> Self {
        Self([0, 0, 0])
    }
}

impl fmt::Display for MonomialTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = self.0;
        write!(f, "<{a},{b},{c}>")
    }
}

/// An element of `A₂(Λ)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ThetaElement {
    terms: BTreeMap<MonomialTriple, Rational>,
}

impl ThetaElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(triple: MonomialTriple, c: Rational) -> Self {
        let mut x = Self::zero();
        x.add_term(triple, c);
        x
    }

    fn add_term(&mut self, triple: MonomialTriple, c: Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(triple).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&triple);
        }
    }

    /// The class of `p ⊗ q ⊗ r`, expanded over monomials.
    pub fn from_tensor(p: &LaurentPoly, q: &LaurentPoly, r: &LaurentPoly) -> Self {
        let mut x = Self::zero();
        for (a, ca) in p.terms() {
            for (b, cb) in q.terms() {
                let cab = ca * cb;
                for (c, cc) in r.terms() {
                    x.add_term(MonomialTriple::canonical(a, b, c), &cab * cc);
                }
            }
        }
        x
    }

    /// `1 ⊗ 1 ⊗ (t + t⁻¹ − 2)`.
    pub fn whitehead_element() -> Self {
        let one = LaurentPoly::one();
        Self::from_tensor(&one, &one, &LaurentPoly::whitehead_bead())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, triple: &MonomialTriple) -> Rational {
        self.terms.get(triple).cloned().unwrap_or_else(Rational::zero)
    }

    /// Terms in increasing lexicographic order of their triples.
    pub fn terms(&self) -> impl Iterator<Item = (&MonomialTriple, &Rational)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// Stable JSON shape `{"terms": [{"triple": [e1, e2, e3], "coeff": "p/q"}]}`.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<_> = self
            .terms
            .iter()
            .map(|(k, c)| serde_json::json!({ "triple": k.0, "coeff": c.to_string() }))
            .collect();
        serde_json::json!({ "terms": terms })
    }

    /// Each term as a tensor of monomials, e.g. `2 * 1 (x) 1 (x) t`.
    pub fn bead_string(&self) -> String {
        if self.is_zero() {
            return "0".to_owned();
        }
        let mono = |e: i64| LaurentPoly::monomial(Rational::one(), e).to_string();
        self.terms
            .iter()
            .map(|(k, c)| {
                let [a, b, d] = k.0;
                format!("{c} * {} (x) {} (x) {}", mono(a), mono(b), mono(d))
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Bead form of `scalar · p ⊗ q ⊗ r`, e.g. `1 (x) 1 (x) (t + t^-1 - 2)`.
pub fn bead_form(scalar: &Rational, p: &LaurentPoly, q: &LaurentPoly, r: &LaurentPoly) -> String {
    let slot = |x: &LaurentPoly| {
        if x.num_terms() > 1 {
            format!("({x})")
        } else {
            x.to_string()
        }
    };
    let body = format!("{} (x) {} (x) {}", slot(p), slot(q), slot(r));
    if scalar.is_zero() {
        "0".to_owned()
    } else if scalar.is_one() {
        body
    } else {
        format!("{scalar} * {body}")
    }
}

impl Add for &ThetaElement {
    type Output = ThetaElement;

    fn add(self, rhs: &ThetaElement) -> ThetaElement {
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            out.add_term(*k, v.clone());
        }
        out
    }
}

impl Add for ThetaElement {
    type Output = ThetaElement;
    fn add(self, rhs: ThetaElement) -> ThetaElement {
        &self + &rhs
    }
}

impl Neg for &ThetaElement {
    type Output = ThetaElement;
    fn neg(self) -> ThetaElement {
        self.scale(&-Rational::one())
    }
}

impl Sub for &ThetaElement {
    type Output = ThetaElement;
    fn sub(self, rhs: &ThetaElement) -> ThetaElement {
        self + &(-rhs)
    }
}

impl std::iter::Sum for ThetaElement {
    fn sum<I: Iterator<Item = ThetaElement>>(iter: I) -> Self {
        iter.fold(Self::zero(), |acc, x| &acc + &x)
    }
}

/// `c * <e1,e2,e3>` terms in lexicographic order joined by ` + `; `0` for the
/// zero element.
impl fmt::Display for ThetaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c} * {k}")?;
        }
        Ok(())
    }
}
