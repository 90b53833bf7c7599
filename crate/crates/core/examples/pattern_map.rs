//! The degree-one pattern map `φ₁(K) = Q₁(τ_p(unknot)) + a(K)·c_p` is affine in
//! the degree-2 coefficient, hence additive in connected sums up to the base
//! term. This example checks it on a few sums of catalog knots.
//!
//!     cargo run --example pattern_map

use whitehead::catalog::lookup;
use whitehead::contraction::ClaspSign;
use whitehead::invariants::{phi1_pattern, q1_whitehead, whitehead_pattern_constants};

fn main() {
    let (base, c_p) = whitehead_pattern_constants(ClaspSign::Plus);
    println!("Whitehead pattern: base = {base}, c_p = {c_p}");

    let knot = |name: &str| lookup(name).unwrap_or_else(|| panic!("no knot {name}")).matrix.clone();
    let sums = [
        ("trefoil-right", "trefoil-right"),
        ("trefoil-right", "trefoil-left"),
        ("figure-eight", "trefoil-left"),
    ];
    for (x, y) in sums {
        let (kx, ky) = (knot(x), knot(y));
        let sum = kx.connected_sum(&ky);
        let lhs = phi1_pattern(&base, &c_p, &sum);
        let rhs = &phi1_pattern(&base, &c_p, &kx) + &phi1_pattern(&base, &c_p, &ky);
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, q1_whitehead(&sum, ClaspSign::Plus));
        println!("φ₁({x} # {y}) = {lhs}");
    }
}
