//! Exact polynomial arithmetic over the rationals.

mod monomial;
mod multi;
mod parse;
mod spectrum;
mod squarefree;
mod uni;

pub use monomial::Monomial;
pub use multi::{vars, MultiPoly, Vars};
pub use parse::parse_unipoly;
pub use spectrum::{deserialize_roots, rational_root_spectrum, Spectrum};
pub use squarefree::is_squarefree;
pub use uni::{univariate_gcd, UniPoly};
