//! Classification of binary homotopy operations with coefficients.
//!
//! Everything here is decided from the type `{G1, G2, G3; q1, q2, q3}` alone:
//! range conditions, the group of basic operations, which special products
//! can occur, how many there are, and the associated signs and degrees.

mod extops;
mod optype;
mod range;
mod special;

pub use extops::{ext_ops_enumerate, ExtOperation, ExtOperations};
pub use optype::OperationType;
pub use range::{
    basic_range_check, bo_group, suspended_smash, triviality_check, RangeReport, RangeVerdict,
    TrivialityReport,
};
pub use special::{
    commutativity_sign, count_special_ops, neisendorfer_product_degrees, neisendorfer_shift,
    special_kind, torsion_exists, torsion_exists_for, whitehead_count_direct, ProductKind,
    ShiftDirection, SignReport, SpecialCount, SpecialKind,
};

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::moorecalc::{StemTable, UctSequence};

/// A computed value, or the named reason it could not be computed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome<T> {
    Value(T),
    Error { kind: String, message: String },
}

impl<T> From<Result<T, Error>> for Outcome<T> {
    fn from(r: Result<T, Error>) -> Self {
        match r {
            Ok(v) => Outcome::Value(v),
            Err(e) => Outcome::Error {
                kind: e.kind().to_string(),
                message: e.to_string(),
            },
        }
    }
}

impl<T> Outcome<T> {
    pub fn value(&self) -> Option<&T> {
        match self {
            Outcome::Value(v) => Some(v),
            Outcome::Error { .. } => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub op_type: OperationType,
    pub range: RangeReport,
    pub bi_additive_forced: bool,
    pub trivially_zero: bool,
    pub special_kind: SpecialKind,
    pub basic_operations: Outcome<UctSequence>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub special_count: Option<Outcome<SpecialCount>>,
    pub notes: Vec<String>,
}

/// Runs every check that applies to `t`.
pub fn classify(t: &OperationType, table: &StemTable) -> ClassificationReport {
    let range = basic_range_check(t);
    let in_range = range.verdict.holds();
    let triviality = triviality_check(t);
    let kind = special_kind(t);
    let mut notes = vec![format!(
        "O{t} ≅ π_{}(M({}, {}) ∨ M({}, {}); {}) via T -> T(ι1, ι2); not computed",
        t.q3, t.g1, t.q1, t.g2, t.q2, t.g3
    )];
    if !range.degrees_ok {
        notes.push("basic operations require q1, q2 >= 3".into());
    }
    notes.push(if in_range {
        "basic <=> j#T(ι1, ι2) = 0 <=> bi-additive <=> T(α, 0) = T(0, β) = 0".into()
    } else {
        "outside the range only basic <=> j#T(ι1, ι2) = 0 and bi-additive => T(α, 0) = T(0, β) = 0 => basic hold".into()
    });
    if in_range {
        notes.push("each basic operation is T(α, β) = [α, β] θ_T for a unique θ_T in the basic-operation group".into());
    }
    if let Some(n) = &triviality.note {
        notes.push(n.clone());
    }
    let basic_operations = bo_group(t, table).into();
    let special_count = kind.product().map(|_| count_special_ops(t, table).into());
    ClassificationReport {
        op_type: t.clone(),
        bi_additive_forced: in_range && range.degrees_ok,
        trivially_zero: in_range && range.degrees_ok && triviality.trivially_zero,
        range,
        special_kind: kind,
        basic_operations,
        special_count,
        notes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classify_whitehead() {
        let t: OperationType = "Z/3,Z/3,Z/3;4,4,7".parse().unwrap();
        let r = classify(&t, &StemTable::builtin());
        assert_eq!(r.range.verdict, RangeVerdict::Yes);
        assert!(r.bi_additive_forced);
        assert!(!r.trivially_zero);
        assert_eq!(r.special_kind, SpecialKind::WhiteheadCandidate);
        assert!(r.basic_operations.value().is_some());
        let count = r.special_count.unwrap();
        assert_eq!(count.value().unwrap().count.to_string(), "3");
    }

    #[test]
    fn classify_reports_errors_as_data() {
        let t: OperationType = "Z/2,Z/4,Z/2;4,4,7".parse().unwrap();
        let r = classify(&t, &StemTable::builtin());
        match r.basic_operations {
            Outcome::Error { kind, .. } => assert_eq!(kind, "Unsupported2Torsion"),
            other => panic!("{other:?}"),
        }
        let t: OperationType = "Z,Z,Z;4,4,5".parse().unwrap();
        let r = classify(&t, &StemTable::builtin());
        assert!(r.trivially_zero);
        assert!(r.special_count.is_none());
    }
}
