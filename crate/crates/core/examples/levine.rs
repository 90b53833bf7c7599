//! Equivariant linking matrix `B = (t − 1)(tA − Aᵀ)⁻¹` of a Seifert surface,
//! with its two structural checks: `Bᵀ = B(t⁻¹)` and `B(1) = 0`.
//!
//!     cargo run --example levine

use whitehead::poly::rat;
use whitehead::seifert::SeifertMatrix;

fn show(name: &str, a: &SeifertMatrix) {
    println!("{name}: A = {a}");
    match a.levine_matrix() {
        Ok(b) => {
            println!("{b}");
            let symmetric = b.transpose() == b.bar();
            let at_one = b
                .eval(&rat(1, 1))
                .map(|rows| rows.iter().flatten().all(|c| *c == rat(0, 1)));
            println!("Bᵀ = B(t⁻¹): {symmetric}; B(1) = 0: {}\n", at_one == Some(true));
        }
        Err(e) => println!("no linking matrix: {e}\n"),
    }
}

fn main() {
    show("doubling surface ε = +1", &SeifertMatrix::whitehead_surface(1));
    show("doubling surface ε = -1", &SeifertMatrix::whitehead_surface(-1));
    show(
        "trefoil",
        &SeifertMatrix::new(vec![vec![-1, 1], vec![0, -1]]).expect("valid Seifert matrix"),
    );
    show("unknot", &SeifertMatrix::unknot());
}
