//! The 2-loop invariant `Q₁` of untwisted Whitehead doubles and of general
//! pattern maps.
//!
//! For a pattern `p`, the map `K ↦ Q₁(τ_p(K))` is a finite type invariant of
//! degree 2, hence `Q₁(τ_p(K)) = Q₁(τ_p(unknot)) + c_p · a(K)`. For the
//! Whitehead pattern with clasp sign `ε` we have `τ_p(unknot) = unknot`,
//! `Q₁(unknot) = 0` and `c_p = ε · 1 ⊗ 1 ⊗ (t + t⁻¹ − 2)`, the latter being
//! the contraction of the leaf linking matrix `diag(ε(t + t⁻¹ − 2), 1, 1)`.
//!
//! `a(K)` is [`SeifertMatrix::a_corollary`], i.e. `(1/4)·d²/dh²|₀ Δ(K)(e^h)`.

use num_bigint::BigInt;

use crate::contraction::{ClaspSign, LinkingMatrix};
use crate::poly::Rational;
use crate::seifert::SeifertMatrix;
use crate::theta::ThetaElement;

/// `Q₁(Wh^ε(K)) = ε · a(K) · 1 ⊗ 1 ⊗ (t + t⁻¹ − 2)`.
pub fn q1_whitehead(knot: &SeifertMatrix, eps: ClaspSign) -> ThetaElement {
    let scalar = Rational::from_integer(BigInt::from(eps.value())) * knot.a_corollary();
    ThetaElement::whitehead_element().scale(&scalar)
}

/// `Q₁(Wh^ε(K))` through the contraction pipeline: `a(K)` times the
/// contraction of the Whitehead leaf linking matrix.
pub fn q1_whitehead_by_contraction(knot: &SeifertMatrix, eps: ClaspSign) -> ThetaElement {
    LinkingMatrix::whitehead(eps).contract().scale(&knot.a_corollary())
}

/// The pattern constants of the Whitehead pattern: `(Q₁(τ_p(unknot)), c_p)`.
pub fn whitehead_pattern_constants(eps: ClaspSign) -> (ThetaElement, ThetaElement) {
    (ThetaElement::zero(), LinkingMatrix::whitehead(eps).contract())
}

/// `φ₁(K) = Q₁(τ_p(unknot)) + a(K) · c_p` for a pattern with the given
/// constants.
pub fn phi1_pattern(
    q1_base: &ThetaElement,
    pattern_constant: &ThetaElement,
    knot: &SeifertMatrix,
) -> ThetaElement {
    q1_base + &pattern_constant.scale(&knot.a_corollary())
}
