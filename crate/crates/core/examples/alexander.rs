//! Alexander polynomial and the degree-2 coefficients of every catalog knot,
//! plus a connected sum built on the fly.
//!
//!     cargo run --example alexander

use whitehead::catalog::catalog;
use whitehead::seifert::SeifertMatrix;

fn main() {
    println!("{:<18} {:<24} {:>6} {:>6}", "knot", "alexander", "a2", "a(K)");
    for entry in catalog() {
        let a = &entry.matrix;
        println!(
            "{:<18} {:<24} {:>6} {:>6}",
            entry.name,
            a.alexander().to_string(),
            a.conway_a2().to_string(),
            a.a_corollary().to_string(),
        );
    }

    let trefoil = SeifertMatrix::new(vec![vec![-1, 1], vec![0, -1]]).expect("valid Seifert matrix");
    let granny = trefoil.connected_sum(&trefoil);
    println!();
    println!("granny knot Seifert matrix: {granny}");
    println!("Δ(granny) = {}", granny.alexander());
    println!("a2 is additive: {} = 2·{}", granny.conway_a2(), trefoil.conway_a2());
}
