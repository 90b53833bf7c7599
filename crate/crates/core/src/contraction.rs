//! Contraction of a degree-2 clover with two Y-components `G₁`, `G₂`.
//!
//! Each complete pairing of the three leaves of `G₁` with the three leaves of
//! `G₂` yields a theta graph whose edges carry the equivariant linking numbers
//! of the paired leaves. Summing over the six pairings gives an element of
//! `A₂(Λ)`.
//!
//! Only pairings across the two components are summed, and every pairing
//! enters with sign `+1` for the leaf labelling used here. Edge orientation
//! runs from `G₁` to `G₂`; reversing a single edge is not a relation.

use std::fmt;

use thiserror::Error;

use crate::poly::LaurentPoly;
use crate::theta::ThetaElement;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("clasp sign must be +1 or -1, got {0}")]
pub struct InvalidSign(pub i64);

/// Sign `ε` of the clasp of a Whitehead double.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ClaspSign {
    Plus,
    Minus,
}

impl ClaspSign {
    pub fn value(self) -> i64 {
        match self {
            Self::Plus => 1,
            Self::Minus => -1,
        }
    }
}

impl TryFrom<i64> for ClaspSign {
    type Error = InvalidSign;

    fn try_from(v: i64) -> Result<Self, InvalidSign> {
        match v {
            1 => Ok(Self::Plus),
            -1 => Ok(Self::Minus),
            other => Err(InvalidSign(other)),
        }
    }
}

impl std::str::FromStr for ClaspSign {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.trim() {
            "+1" | "1" | "+" => Ok(Self::Plus),
            "-1" | "-" => Ok(Self::Minus),
            other => Err(format!("expected +1 or -1, got `{other}`")),
        }
    }
}

impl fmt::Display for ClaspSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Plus => "+1",
            Self::Minus => "-1",
        })
    }
}

/// Entry `(i, j)` is `lk(L₁ᵢ, L₂ⱼ)`, the equivariant linking of the i-th leaf
/// of `G₁` with the j-th leaf of `G₂`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct LinkingMatrix {
    entries: [[LaurentPoly; 3]; 3],
}

const BIJECTIONS: [[usize; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

impl LinkingMatrix {
    pub fn new(entries: [[LaurentPoly; 3]; 3]) -> Self {
        Self { entries }
    }

    pub fn diagonal(a: LaurentPoly, b: LaurentPoly, c: LaurentPoly) -> Self {
        let mut m = Self::default();
        m.entries[0][0] = a;
        m.entries[1][1] = b;
        m.entries[2][2] = c;
        m
    }

    /// Leaf linkings for the degree-2 clover in the complement of `Wh^ε(K)`:
    /// `diag(ε(t + t⁻¹ − 2), 1, 1)`.
    pub fn whitehead(eps: ClaspSign) -> Self {
        let bead = LaurentPoly::whitehead_bead();
        let first = match eps {
            ClaspSign::Plus => bead,
            ClaspSign::Minus => -bead,
        };
        Self::diagonal(first, LaurentPoly::one(), LaurentPoly::one())
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.entries[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: LaurentPoly) {
        self.entries[i][j] = p;
    }

    pub fn entries(&self) -> &[[LaurentPoly; 3]; 3] {
        &self.entries
    }

    /// Sum over the six bijections `σ` of `L[0,σ0] ⊗ L[1,σ1] ⊗ L[2,σ2]`.
    pub fn contract(&self) -> ThetaElement {
        BIJECTIONS
            .iter()
            .map(|s| {
                ThetaElement::from_tensor(
                    &self.entries[0][s[0]],
                    &self.entries[1][s[1]],
                    &self.entries[2][s[2]],
                )
            })
            .sum()
    }
}

impl fmt::Display for LinkingMatrix {
    /// The `linking 3` file format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "linking 3")?;
        for row in &self.entries {
            writeln!(f, "{}, {}, {}", row[0], row[1], row[2])?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{rat, Rational};
    use crate::theta::MonomialTriple;
    use proptest::prelude::*;

    #[test]
    fn whitehead_contraction() {
        for eps in [ClaspSign::Plus, ClaspSign::Minus] {
            let l = LinkingMatrix::whitehead(eps);
            let expected = ThetaElement::whitehead_element().scale(&rat(eps.value(), 1));
            assert_eq!(l.contract(), expected);
        }
        let minus = LinkingMatrix::whitehead(ClaspSign::Minus);
        assert_eq!(minus.get(0, 0).to_string(), "-t - t^-1 + 2");
    }

    #[test]
    fn zero_and_ones() {
        assert!(LinkingMatrix::default().contract().is_zero());
        let ones = LinkingMatrix::new(std::array::from_fn(|_| std::array::from_fn(|_| LaurentPoly::one())));
        assert_eq!(
            ones.contract(),
            ThetaElement::monomial(MonomialTriple::trivial(), rat(6, 1))
        );
    }

    #[test]
    fn sign_parsing() {
        assert_eq!(ClaspSign::try_from(1), Ok(ClaspSign::Plus));
        assert_eq!(ClaspSign::try_from(-1), Ok(ClaspSign::Minus));
        assert_eq!(ClaspSign::try_from(0), Err(InvalidSign(0)));
        assert_eq!("-1".parse::<ClaspSign>(), Ok(ClaspSign::Minus));
        assert!("2".parse::<ClaspSign>().is_err());
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-2i64..=2, -2i64..=2), 0..3)
            .prop_map(|t| LaurentPoly::from_int_terms(&t))
    }

    fn arb_linking() -> impl Strategy<Value = LinkingMatrix> {
        prop::array::uniform3(prop::array::uniform3(arb_poly())).prop_map(LinkingMatrix::new)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn relabelling_leaves_is_invisible(l in arb_linking(), perm in 0usize..6) {
            let tau = BIJECTIONS[perm];
            let cols = LinkingMatrix::new(std::array::from_fn(|i| std::array::from_fn(|j| l.get(i, tau[j]).clone())));
            let rows = LinkingMatrix::new(std::array::from_fn(|i| std::array::from_fn(|j| l.get(tau[i], j).clone())));
            prop_assert_eq!(cols.contract(), l.contract());
            prop_assert_eq!(rows.contract(), l.contract());
        }

        #[test]
        fn linear_in_each_entry(l in arb_linking(), extra in arb_poly(), i in 0usize..3, j in 0usize..3) {
            let mut summed = l.clone();
            summed.set(i, j, l.get(i, j) + &extra);
            let mut only = l.clone();
            only.set(i, j, extra);
            let mut without = l.clone();
            without.set(i, j, LaurentPoly::zero());
            // contract(L with p + p') = contract(L with p) + contract(L with p') - contract(L with 0)
            let lhs = summed.contract();
            let rhs = &(&l.contract() + &only.contract()) - &without.contract();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn diagonal_is_a_single_tensor(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            let l = LinkingMatrix::diagonal(a.clone(), b.clone(), c.clone());
            prop_assert_eq!(l.contract(), ThetaElement::from_tensor(&a, &b, &c));
        }
    }

    #[test]
    fn scalar_multiple_of_entries() {
        let l = LinkingMatrix::whitehead(ClaspSign::Plus);
        let half = rat(1, 2);
        let scaled = LinkingMatrix::diagonal(l.get(0, 0).scale(&half), LaurentPoly::one(), LaurentPoly::one());
        assert_eq!(scaled.contract(), l.contract().scale(&Rational::from(half)));
    }
}
