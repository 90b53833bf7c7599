//! The 2-loop invariant of the untwisted Whitehead double of each catalog
//! knot, computed two ways: by the closed formula `ε·a(K)·1⊗1⊗(t + t⁻¹ − 2)`
//! and by contracting the linking matrix of the clasp.
//!
//!     cargo run --example whitehead_double

use whitehead::catalog::catalog;
use whitehead::contraction::ClaspSign;
use whitehead::invariants::{q1_whitehead, q1_whitehead_by_contraction};

fn main() {
    for entry in catalog() {
        for eps in [ClaspSign::Plus, ClaspSign::Minus] {
            let q1 = q1_whitehead(&entry.matrix, eps);
            assert_eq!(q1, q1_whitehead_by_contraction(&entry.matrix, eps));
            let tag = if q1.is_zero() { "trivial" } else { "nontrivial" };
            println!("Wh{eps}({}) : {q1}   [{tag}]", entry.name);
            println!("    bead: {}", q1.bead_string());
        }
    }
}
