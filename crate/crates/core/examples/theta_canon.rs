//! Canonical forms in the space spanned by monomial triples `t^a ⊗ t^b ⊗ t^c`,
//! modulo simultaneous shifts, permutations and the sign flip.
//!
//!     cargo run --example theta_canon [a b c]

use whitehead::poly::{rat, LaurentPoly};
use whitehead::theta::{MonomialTriple, ThetaElement};

fn main() {
    let args: Vec<i64> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("exponents are integers"))
        .collect();
    let (a, b, c) = match args[..] {
        [a, b, c] => (a, b, c),
        _ => (3, -1, 5),
    };

    let canon = MonomialTriple::canonical(a, b, c);
    println!("t^{a} ⊗ t^{b} ⊗ t^{c} ~ {canon}");

    // every representative in the orbit lands on the same triple
    for (x, y, z) in [(b, a, c), (c + 7, a + 7, b + 7), (-a, -b, -c)] {
        assert_eq!(MonomialTriple::canonical(x, y, z), canon);
        println!("t^{x} ⊗ t^{y} ⊗ t^{z} ~ {}", MonomialTriple::canonical(x, y, z));
    }

    // tensors of polynomials expand trilinearly before canonicalizing
    let bead = LaurentPoly::whitehead_bead();
    let one = LaurentPoly::one();
    let theta = ThetaElement::from_tensor(&one, &one, &bead);
    println!();
    println!("1 ⊗ 1 ⊗ (t + t^-1 - 2) = {theta}");
    println!("half of it:           {}", theta.scale(&rat(1, 2)));
    println!("json: {}", theta.to_json());
}
