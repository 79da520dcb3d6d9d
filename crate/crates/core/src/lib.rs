//! Exact computations for binary homotopy operations with coefficients.
//!
//! * [`abgroup`]: finitely generated abelian groups in invariant-factor form,
//!   Smith normal form, cokernels.
//! * [`functors`]: `Hom`, `Ext`, `⊗`, `Tor` in closed form, and [`oracle`]
//!   recomputing them by brute force.
//! * [`chains`]: cellular chain models of Moore spaces and their tensor products.
//! * [`moorecalc`]: wedges and smash products of Moore spaces, stable stems,
//!   homotopy groups with coefficients.
//! * [`opsclassify`]: range checks, basic-operation groups, Whitehead and
//!   Torsion product counts, signs.
//! * [`pointmaps`]: exact evaluation of the join/suspension maps `Λ`, `Φ_s`, `σ`, `μ′`.
//! * [`verify`]: end-to-end cross-checks of all of the above.

pub mod abgroup;
pub mod chains;
pub mod error;
pub mod functors;
pub mod moorecalc;
pub mod opsclassify;
pub mod oracle;
pub mod pointmaps;
pub mod sweep;
pub mod verify;

#[cfg(test)]
mod properties;

pub use abgroup::{
    cokernel, parse_group_expr, smith_normal_form, FgAbGroup, GroupMorphism, IntMatrix, Order,
};
pub use chains::{kunneth_check, moore_complex, tensor_complex, ChainComplex, KunnethReport};
pub use error::{Error, Result};
pub use functors::{ext, hom, tensor, tor, FunctorKind};
pub use moorecalc::{
    homotopy_with_coeffs, smash_decompose, MooreAtom, MooreExpr, StemTable, UctSequence,
};
pub use opsclassify::{classify, ClassificationReport, OperationType};
