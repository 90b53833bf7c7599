//! Random Seifert matrices of a chosen genus, with their Alexander polynomial
//! and equivariant linking matrix.
//!
//!     cargo run --example random_surfaces [genus] [seed]

use rand::rngs::StdRng;
use rand::SeedableRng;
use whitehead::seifert::SeifertMatrix;

fn main() {
    let mut args = std::env::args().skip(1);
    let genus: usize = args.next().map_or(2, |g| g.parse().expect("genus"));
    let seed: u64 = args.next().map_or(7, |s| s.parse().expect("seed"));
    let mut rng = StdRng::seed_from_u64(seed);

    for _ in 0..3 {
        let a = SeifertMatrix::random(&mut rng, genus, 2);
        println!("A = {a}");
        println!("Δ = {}", a.alexander());
        match a.levine_matrix() {
            Ok(b) => println!("B =\n{b}"),
            Err(e) => println!("B: {e}"),
        }
        println!();
    }
}
