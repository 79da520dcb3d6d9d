//! Finitely generated abelian groups and exact integer linear algebra.
//!
//! Groups are stored in invariant-factor form, so isomorphism testing is
//! structural equality. Presentation matrices put relations in rows and
//! generators in columns.

mod group;
mod matrix;
mod morphism;
mod smith;

pub use group::{
    cokernel, direct_sum, order, parse_group_expr, Cyclic, FgAbGroup, Order, PrimePower,
};
pub use matrix::IntMatrix;
pub use morphism::GroupMorphism;
pub use smith::{smith_normal_form, SmithForm};
