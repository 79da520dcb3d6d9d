//! Hom, Ext, tensor and Tor of finitely generated abelian groups.
//!
//! All four are computed in closed form from the cyclic decompositions,
//! summand by summand:
//!
//! | `F(A, B)`   | `Z, Z` | `Z, Z/e` | `Z/d, Z` | `Z/d, Z/e`     |
//! |-------------|--------|----------|----------|----------------|
//! | `A ⊗ B`     | `Z`    | `Z/e`    | `Z/d`    | `Z/gcd(d, e)`  |
//! | `Tor(A, B)` | `0`    | `0`      | `0`      | `Z/gcd(d, e)`  |
//! | `Hom(A, B)` | `Z`    | `Z/e`    | `0`      | `Z/gcd(d, e)`  |
//! | `Ext(A, B)` | `0`    | `0`      | `Z/d`    | `Z/gcd(d, e)`  |
//!
//! The results are re-canonicalized, so they compare structurally.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::abgroup::{Cyclic, FgAbGroup, GroupMorphism};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FunctorKind {
    Hom,
    Ext,
    Tensor,
    Tor,
}

impl FunctorKind {
    pub const ALL: [FunctorKind; 4] = [
        FunctorKind::Hom,
        FunctorKind::Ext,
        FunctorKind::Tensor,
        FunctorKind::Tor,
    ];

    pub fn apply(self, g: &FgAbGroup, h: &FgAbGroup) -> FgAbGroup {
        match self {
            FunctorKind::Hom => hom(g, h),
            FunctorKind::Ext => ext(g, h),
            FunctorKind::Tensor => tensor(g, h),
            FunctorKind::Tor => tor(g, h),
        }
    }

    /// Covariant in the first argument (tensor, Tor) or contravariant (Hom, Ext).
    pub fn is_covariant(self) -> bool {
        matches!(self, FunctorKind::Tensor | FunctorKind::Tor)
    }

    fn on_pair(self, a: &Cyclic, b: &Cyclic) -> Option<Cyclic> {
        use Cyclic::{Finite, Free};
        match (self, a, b) {
            (FunctorKind::Tensor, Free, x) | (FunctorKind::Tensor, x, Free) => Some(x.clone()),
            (FunctorKind::Tor, Free, _) | (FunctorKind::Tor, _, Free) => None,
            (FunctorKind::Hom, Free, x) => Some(x.clone()),
            (FunctorKind::Hom, Finite(_), Free) => None,
            (FunctorKind::Ext, Free, _) => None,
            (FunctorKind::Ext, Finite(d), Free) => Some(Finite(d.clone())),
            (_, Finite(d), Finite(e)) => Some(Finite(d.gcd(e))),
        }
    }
}

impl fmt::Display for FunctorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FunctorKind::Hom => "hom",
            FunctorKind::Ext => "ext",
            FunctorKind::Tensor => "tensor",
            FunctorKind::Tor => "tor",
        })
    }
}

impl FromStr for FunctorKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "hom" => Ok(FunctorKind::Hom),
            "ext" => Ok(FunctorKind::Ext),
            "tensor" | "otimes" => Ok(FunctorKind::Tensor),
            "tor" => Ok(FunctorKind::Tor),
            _ => Err(Error::Value(format!("unknown functor `{s}`"))),
        }
    }
}

fn pairwise(kind: FunctorKind, g: &FgAbGroup, h: &FgAbGroup) -> FgAbGroup {
    let hs: Vec<Cyclic> = h.cyclic_summands().collect();
    FgAbGroup::from_cyclics(
        g.cyclic_summands()
            .flat_map(|a| {
                hs.iter()
                    .filter_map(|b| kind.on_pair(&a, b))
                    .collect::<Vec<_>>()
            })
            .collect::<Vec<_>>(),
    )
}

pub fn tensor(g: &FgAbGroup, h: &FgAbGroup) -> FgAbGroup {
    pairwise(FunctorKind::Tensor, g, h)
}

pub fn tor(g: &FgAbGroup, h: &FgAbGroup) -> FgAbGroup {
    pairwise(FunctorKind::Tor, g, h)
}

pub fn hom(g: &FgAbGroup, h: &FgAbGroup) -> FgAbGroup {
    pairwise(FunctorKind::Hom, g, h)
}

pub fn ext(g: &FgAbGroup, h: &FgAbGroup) -> FgAbGroup {
    pairwise(FunctorKind::Ext, g, h)
}

/// Order of a group with at most one generator, with `Z` reported as 0 and
/// the trivial group as 1.
fn cyclic_order(g: &FgAbGroup) -> Option<BigInt> {
    match g.generator_count() {
        0 => Some(BigInt::one()),
        1 => Some(g.generator_order(0)),
        _ => None,
    }
}

/// The map induced by a homomorphism of cyclic groups `f: Z/m -> Z/n` on
/// `F(-, C)` for a cyclic group `C`.
///
/// For tensor and Tor the result goes `F(Z/m, C) -> F(Z/n, C)`; for Hom and
/// Ext it goes `F(Z/n, C) -> F(Z/m, C)`. Only cyclic-to-cyclic maps are
/// supported, where the induced map is a single multiplier.
pub fn induced_on_cyclic(
    kind: FunctorKind,
    f: &GroupMorphism,
    other: &FgAbGroup,
) -> Result<GroupMorphism> {
    let not_cyclic = || Error::InvalidMorphism("induced maps need cyclic groups".into());
    let m = cyclic_order(f.source()).ok_or_else(not_cyclic)?;
    let n = cyclic_order(f.target()).ok_or_else(not_cyclic)?;
    let k = cyclic_order(other).ok_or_else(not_cyclic)?;
    let a = f.cyclic_multiplier().ok_or_else(not_cyclic)?;

    let src = kind.apply(f.source(), other);
    let dst = kind.apply(f.target(), other);
    // Degree-one component of the chain map between the resolutions
    // Z --m--> Z and Z --n--> Z lifting f; meaningful when both are torsion.
    let lift = || -> BigInt {
        if m.is_zero() || n.is_zero() {
            BigInt::zero()
        } else {
            &a * &m / &n
        }
    };
    let multiplier = match kind {
        FunctorKind::Tensor => a.clone(),
        FunctorKind::Hom => {
            // Hom(Z/x, Z/k) is generated by 1 -> k / gcd(x, k).
            let unit = |x: &BigInt| {
                let g = x.gcd(&k);
                if g.is_zero() {
                    BigInt::one()
                } else {
                    &k / g
                }
            };
            if (!n.is_zero() && k.is_zero()) || f.target().is_trivial() {
                BigInt::zero()
            } else {
                let value = &a * unit(&n);
                let value = if k.is_zero() {
                    value
                } else {
                    value.mod_floor(&k)
                };
                value / unit(&m)
            }
        }
        FunctorKind::Tor => {
            if m.is_zero() || n.is_zero() || k.is_zero() {
                BigInt::zero()
            } else {
                // Tor(Z/x, Z/k) is the x-torsion of Z/k, generated by k / gcd(x, k).
                let image = (lift() * (&k / m.gcd(&k))).mod_floor(&k);
                image / (&k / n.gcd(&k))
            }
        }
        FunctorKind::Ext => lift(),
    };
    if kind.is_covariant() {
        GroupMorphism::between_cyclic(src, dst, multiplier)
    } else {
        GroupMorphism::between_cyclic(dst, src, multiplier)
    }
}
