//! Exact coordinate evaluation of the maps `Λ`, `λ̄`, `Φ_s`, `σ` and `μ′`
//! relating joins, suspensions and smash products.
//!
//! Points of the abstract spaces `A` and `B` are opaque tokens; only the
//! interval coordinates are computed on, in exact rational arithmetic.

mod check;
mod maps;
mod points;

pub use check::{check_identities, grid_values, GridConfig, IdentityCheck};
pub use maps::{
    eval_lambda, eval_mu_prime, eval_phi, eval_sigma, lambda_bar, lambda_branch, phi_branch,
    sigma_inverse, sigma_mu_prime, suspend_mu_prime, Branch,
};
pub use points::{
    coord, AbstractPoint, Coord, DoubleSuspensionPoint, JoinPoint, ProductPoint, SmashPoint,
    SmashSuspensionPoint, SuspendedJoinPoint, SuspensionPoint,
};
