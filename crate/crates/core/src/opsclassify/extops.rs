use serde::{Deserialize, Serialize};

use super::OperationType;
use crate::abgroup::FgAbGroup;
use crate::error::{Error, Result};

/// Universal element `[ι1, ι2] ∘ (i·p)` of one Ext operation, where
/// `p: M(Z/k, q1 + q2 - 2) -> S^(q1 + q2 - 1)` collapses the bottom cell.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtOperation {
    pub index: u64,
    pub universal_element: String,
    pub is_zero: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtOperations {
    pub op_type: OperationType,
    pub projection: String,
    pub operations: Vec<ExtOperation>,
}

/// The `k` Ext operations of type `{Z, Z, Z/k; q1, q2, q1 + q2 - 2}`.
pub fn ext_ops_enumerate(k: u64, q1: u32, q2: u32) -> Result<ExtOperations> {
    if k < 2 {
        return Err(Error::Value(format!("k must be at least 2, got {k}")));
    }
    Error::degree(q1, 3)?;
    Error::degree(q2, 3)?;
    let q = q1 + q2;
    let op_type = OperationType::new(
        FgAbGroup::free(1),
        FgAbGroup::free(1),
        FgAbGroup::cyclic(k),
        q1,
        q2,
        q - 2,
    )?;
    let operations = (0..k)
        .map(|i| ExtOperation {
            index: i,
            universal_element: format!("[ι1, ι2] ∘ ({i}·p)"),
            is_zero: i == 0,
        })
        .collect();
    Ok(ExtOperations {
        op_type,
        projection: format!("p: M(Z/{k}, {}) -> S^{}", q - 2, q - 1),
        operations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::opsclassify::triviality_check;

    #[test]
    fn enumeration() {
        let e = ext_ops_enumerate(3, 4, 4).unwrap();
        assert_eq!(e.operations.len(), 3);
        assert!(e.operations[0].is_zero);
        assert!(!e.operations[2].is_zero);
        let e = ext_ops_enumerate(2, 3, 3).unwrap();
        assert_eq!(e.op_type.to_string(), "{Z, Z, Z/2; 3, 3, 4}");
        assert!(!triviality_check(&e.op_type).trivially_zero);
        assert_eq!(e.projection, "p: M(Z/2, 4) -> S^5");
        assert!(ext_ops_enumerate(1, 3, 3).is_err());
        assert!(matches!(
            ext_ops_enumerate(2, 2, 3),
            Err(Error::DegreeTooSmall { .. })
        ));
    }
}
