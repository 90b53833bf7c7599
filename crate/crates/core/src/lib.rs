//! Exact knot invariants from Seifert matrices, and the 2-loop part of the
//! Kontsevich integral for untwisted Whitehead doubles.
//!
//! All arithmetic is exact over ℚ: Laurent polynomials and rational functions
//! in [`poly`], Seifert matrices in [`seifert`], the theta space of
//! canonicalized monomial triples in [`theta`], and the contraction of a 3×3
//! leaf linking matrix in [`contraction`]. [`invariants`] combines them.
//!
//! ```
//! use whitehead::contraction::ClaspSign;
//! use whitehead::invariants::q1_whitehead;
//! use whitehead::seifert::SeifertMatrix;
//!
//! let trefoil = SeifertMatrix::new(vec![vec![-1, 1], vec![0, -1]]).unwrap();
//! let q1 = q1_whitehead(&trefoil, ClaspSign::Plus);
//! assert_eq!(q1.to_string(), "-1 * <0,0,0> + 1 * <0,0,1>");
//! ```

pub mod catalog;
pub mod cli;
pub mod contraction;
pub mod error;
pub mod invariants;
pub mod io;
pub mod parse;
pub mod poly;
pub mod seifert;
pub mod theta;
