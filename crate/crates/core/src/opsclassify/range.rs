use serde::{Deserialize, Serialize};

use super::OperationType;
use crate::error::{Error, Result};
use crate::moorecalc::{homotopy_with_coeffs, MooreExpr, StemTable, UctSequence};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RangeVerdict {
    Yes,
    YesByFreeRelaxation,
    No,
}

impl RangeVerdict {
    pub fn holds(self) -> bool {
        self != RangeVerdict::No
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RangeReport {
    pub verdict: RangeVerdict,
    /// `q1 + q2 + min(q1, q2) - 3`; the verdict is `yes` below it.
    pub bound: u32,
    /// Basic operations are only defined for `q1, q2 >= 3`.
    pub degrees_ok: bool,
}

/// Whether `q3 < q1 + q2 + min(q1, q2) - 3`, the range in which a basic
/// operation factors uniquely through the generalized Whitehead product.
/// Equality is allowed when `G3` is free.
pub fn basic_range_check(t: &OperationType) -> RangeReport {
    let bound = t.q1 + t.q2 + t.q1.min(t.q2) - 3;
    let verdict = if t.q3 < bound {
        RangeVerdict::Yes
    } else if t.q3 == bound && t.g3.is_free() {
        RangeVerdict::YesByFreeRelaxation
    } else {
        RangeVerdict::No
    };
    RangeReport {
        verdict,
        bound,
        degrees_ok: t.q1 >= 3 && t.q2 >= 3,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrivialityReport {
    pub trivially_zero: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Every basic operation of the type vanishes when `q3 <= q1 + q2 - 3`.
pub fn triviality_check(t: &OperationType) -> TrivialityReport {
    let q = t.q();
    let trivially_zero = t.q3 + 3 <= q;
    let note = if t.q3 + 2 == q {
        Some("q3 = q1 + q2 - 2 admits nontrivial Ext operations; the bound is sharp".into())
    } else {
        None
    };
    TrivialityReport {
        trivially_zero,
        note,
    }
}

/// `Σ(M̄1 ∧ M̄2)` for `M̄i = M(Gi, qi - 1)`.
pub fn suspended_smash(t: &OperationType) -> Result<MooreExpr> {
    Error::degree(t.q1, 3)?;
    Error::degree(t.q2, 3)?;
    let m1 = MooreExpr::atom(t.g1.clone(), t.q1 - 1)?;
    let m2 = MooreExpr::atom(t.g2.clone(), t.q2 - 1)?;
    Ok(m1.smash(&m2)?.suspend())
}

/// The group of basic operations, `BO ≅ π_q3(Σ(M̄1 ∧ M̄2); G3)`, as a
/// universal coefficient sequence.
pub fn bo_group(t: &OperationType, table: &StemTable) -> Result<UctSequence> {
    let range = basic_range_check(t);
    if !range.verdict.holds() {
        return Err(Error::OutOfRange(format!(
            "{t}: q3 = {} is not below q1 + q2 + min(q1, q2) - 3 = {}",
            t.q3, range.bound
        )));
    }
    let x = suspended_smash(t)?;
    let mut seq = homotopy_with_coeffs(&x, t.q3, &t.g3, table)?;
    seq.notes
        .insert(0, format!("BO{t} ≅ π_{}({}; {})", t.q3, x.pretty(), t.g3));
    Ok(seq)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abgroup::{FgAbGroup, Order};
    use num_bigint::BigInt;

    fn ty(s: &str) -> OperationType {
        s.parse().unwrap()
    }

    #[test]
    fn range_examples() {
        assert_eq!(
            basic_range_check(&ty("Z,Z,Z/2;4,4,7")).verdict,
            RangeVerdict::Yes
        );
        assert_eq!(
            basic_range_check(&ty("Z,Z,Z;4,4,9")).verdict,
            RangeVerdict::YesByFreeRelaxation
        );
        assert_eq!(
            basic_range_check(&ty("Z,Z,Z/2;4,4,9")).verdict,
            RangeVerdict::No
        );
        assert_eq!(
            basic_range_check(&ty("Z,Z,Z/2;3,3,9")).verdict,
            RangeVerdict::No
        );
        assert!(!basic_range_check(&ty("Z,Z,Z;2,4,3")).degrees_ok);
    }

    #[test]
    fn triviality_examples() {
        assert!(triviality_check(&ty("Z,Z,Z;4,4,5")).trivially_zero);
        let r = triviality_check(&ty("Z,Z,Z;4,4,6"));
        assert!(!r.trivially_zero);
        assert!(r.note.is_some());
        assert!(triviality_check(&ty("Z,Z,Z;3,3,3")).trivially_zero);
    }

    #[test]
    fn bo_examples() {
        let t = StemTable::builtin();
        let s = bo_group(&ty("Z/3,Z/3,Z/3;4,4,7"), &t).unwrap();
        assert_eq!(s.pi_n, FgAbGroup::cyclic(3));
        assert_eq!(s.pi_n_plus_1, FgAbGroup::cyclic(3));
        assert_eq!(s.middle_cardinality, Order::Finite(BigInt::from(9)));
        for k in 2..=12u64 {
            let op = OperationType::new(
                FgAbGroup::free(1),
                FgAbGroup::free(1),
                FgAbGroup::cyclic(k),
                4,
                5,
                7,
            )
            .unwrap();
            let s = bo_group(&op, &t).unwrap();
            assert_eq!(s.middle_cardinality, Order::Finite(BigInt::from(k)));
        }
        let s = bo_group(&ty("Z/5,Z/7,Z;4,4,7"), &t).unwrap();
        assert!(s.space.is_point());
        assert_eq!(s.middle_cardinality, Order::Finite(BigInt::from(1)));
        assert!(matches!(
            bo_group(&ty("Z,Z,Z/2;4,4,9"), &t),
            Err(Error::OutOfRange(_))
        ));
        assert!(matches!(
            bo_group(&ty("Z/2,Z/4,Z/2;4,4,7"), &t),
            Err(Error::Unsupported2Torsion { .. })
        ));
    }
}
