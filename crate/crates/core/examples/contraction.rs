//! Contraction of a 3×3 matrix of Laurent polynomials into the theta space:
//! the sum over the six bijections of the tensors of matched entries.
//!
//!     cargo run --example contraction [path/to/file.lk]

use whitehead::contraction::{ClaspSign, LinkingMatrix};
use whitehead::io::load_linking;
use whitehead::poly::LaurentPoly;

fn main() {
    if let Some(path) = std::env::args().nth(1) {
        let m = load_linking(&path).unwrap_or_else(|e| panic!("{path}: {e}"));
        println!("{}", m.contract());
        return;
    }

    for eps in [ClaspSign::Plus, ClaspSign::Minus] {
        let m = LinkingMatrix::whitehead(eps);
        println!("Whitehead clasp ε = {eps}:\n{m}");
        println!("contracts to {}\n", m.contract());
    }

    // a diagonal matrix contracts to the single tensor of its diagonal
    let t = LaurentPoly::t();
    let d = LinkingMatrix::diagonal(t.clone(), LaurentPoly::one(), t.bar());
    println!("diag(t, 1, t^-1) contracts to {}", d.contract());
}
