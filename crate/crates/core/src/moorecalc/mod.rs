//! Wedges of Moore spaces, their smash products, a table of stable stems,
//! and homotopy groups with coefficients.

mod expr;
mod stems;
mod uct;

pub use expr::{smash_decompose, MooreAtom, MooreExpr, SpaceExpr};
pub use stems::{StemClass, StemEntry, StemTable};
pub use uct::{homotopy_group, homotopy_with_coeffs, UctSequence};
