//! Parsing and rendering Laurent polynomials. Rendering lists the non-constant
//! terms by decreasing exponent and the constant last, and parsing accepts
//! everything rendering produces.
//!
//!     cargo run --example parse_render -- "3/2*t^2 - t^-3 + 2 - t"

use whitehead::parse::parse_laurent;
use whitehead::poly::rat;

fn main() {
    let inputs: Vec<String> = std::env::args().skip(1).collect();
    let inputs = if inputs.is_empty() {
        ["t + t^-1 - 2", "(1 - t)", "-t^-1 + 1 + 1/3*t^4", "2*t*t^-1", "t^1/2"]
            .map(String::from)
            .to_vec()
    } else {
        inputs
    };
    for text in &inputs {
        match parse_laurent(text) {
            Ok(p) => {
                let rendered = p.to_string();
                assert_eq!(parse_laurent(&rendered).as_ref(), Ok(&p));
                let at_two = p.eval(&rat(2, 1)).expect("2 is not a pole");
                println!("{text:<28} -> {rendered:<24} p(2) = {at_two}");
            }
            Err(e) => println!("{text:<28} -> error: {e}"),
        }
    }
}
