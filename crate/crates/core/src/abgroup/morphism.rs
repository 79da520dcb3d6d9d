use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::{FgAbGroup, IntMatrix};
use crate::error::{Error, Result};

/// A homomorphism between canonical groups, given by its action on the
/// canonical generators (free generators first, then torsion generators).
///
/// Column `j` holds the image of source generator `j` in target coordinates.
/// Coordinates along torsion generators of the target are kept reduced
/// modulo their order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupMorphism {
    source: FgAbGroup,
    target: FgAbGroup,
    matrix: IntMatrix,
}

impl GroupMorphism {
    pub fn new(source: FgAbGroup, target: FgAbGroup, matrix: IntMatrix) -> Result<Self> {
        if matrix.rows() != target.generator_count() || matrix.cols() != source.generator_count() {
            return Err(Error::Dimension(format!(
                "matrix is {}x{} but the morphism {source} -> {target} needs {}x{}",
                matrix.rows(),
                matrix.cols(),
                target.generator_count(),
                source.generator_count()
            )));
        }
        let mut matrix = matrix;
        for i in 0..matrix.rows() {
            let e = target.generator_order(i);
            if !e.is_zero() {
                for j in 0..matrix.cols() {
                    let v = matrix[(i, j)].mod_floor(&e);
                    matrix[(i, j)] = v;
                }
            }
        }
        for j in 0..matrix.cols() {
            let d = source.generator_order(j);
            if d.is_zero() {
                continue;
            }
            for i in 0..matrix.rows() {
                let e = target.generator_order(i);
                let image = &d * &matrix[(i, j)];
                let killed = if e.is_zero() {
                    image.is_zero()
                } else {
                    image.is_multiple_of(&e)
                };
                if !killed {
                    return Err(Error::InvalidMorphism(format!(
                        "generator {j} has order {d} but its image has coordinate {} of order {}",
                        matrix[(i, j)],
                        if e.is_zero() {
                            "infinite".to_string()
                        } else {
                            e.to_string()
                        }
                    )));
                }
            }
        }
        Ok(GroupMorphism {
            source,
            target,
            matrix,
        })
    }

    pub fn identity(g: &FgAbGroup) -> Self {
        GroupMorphism::new(
            g.clone(),
            g.clone(),
            IntMatrix::identity(g.generator_count()),
        )
        .expect("identity is a morphism")
    }

    /// `Z/m -> Z/n`, `1 -> a` (with `Z/0 = Z`).
    pub fn cyclic(m: u64, n: u64, a: i64) -> Result<Self> {
        Self::between_cyclic(FgAbGroup::cyclic(m), FgAbGroup::cyclic(n), BigInt::from(a))
    }

    /// Morphism between groups with at most one generator each, `1 -> a`.
    pub fn between_cyclic(source: FgAbGroup, target: FgAbGroup, a: BigInt) -> Result<Self> {
        if source.generator_count() > 1 || target.generator_count() > 1 {
            return Err(Error::InvalidMorphism(format!(
                "{source} -> {target} is not a map between cyclic groups"
            )));
        }
        let entries = if source.generator_count() * target.generator_count() == 1 {
            vec![a]
        } else {
            Vec::new()
        };
        let matrix =
            IntMatrix::from_entries(target.generator_count(), source.generator_count(), entries)?;
        GroupMorphism::new(source, target, matrix)
    }

    pub fn source(&self) -> &FgAbGroup {
        &self.source
    }

    pub fn target(&self) -> &FgAbGroup {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// For a morphism between groups with at most one generator each, the
    /// integer `a` with `1 -> a`; zero when either side is trivial.
    pub fn cyclic_multiplier(&self) -> Option<BigInt> {
        match (self.matrix.rows(), self.matrix.cols()) {
            (1, 1) => Some(self.matrix[(0, 0)].clone()),
            (r, c) if r <= 1 && c <= 1 => Some(BigInt::zero()),
            _ => None,
        }
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &GroupMorphism) -> Result<GroupMorphism> {
        if self.target != other.source {
            return Err(Error::Dimension(format!(
                "cannot compose {} -> {} with {} -> {}",
                self.source, self.target, other.source, other.target
            )));
        }
        GroupMorphism::new(
            self.source.clone(),
            other.target.clone(),
            other.matrix.mul(&self.matrix)?,
        )
    }
}
