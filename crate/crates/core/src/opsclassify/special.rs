use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use super::OperationType;
use crate::abgroup::{FgAbGroup, Order};
use crate::error::{Error, Result};
use crate::functors::{ext, tensor, tor};
use crate::moorecalc::{homotopy_with_coeffs, MooreExpr, StemTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpecialKind {
    None,
    WhiteheadCandidate,
    TorsionCandidate,
}

/// Whitehead products (`G3 = G1 ⊗ G2`) or Torsion products (`G3 = Tor(G1, G2)`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProductKind {
    Whitehead,
    Torsion,
}

impl fmt::Display for ProductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProductKind::Whitehead => "whitehead",
            ProductKind::Torsion => "torsion",
        })
    }
}

impl FromStr for ProductKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "w" | "whitehead" => Ok(ProductKind::Whitehead),
            "t" | "torsion" => Ok(ProductKind::Torsion),
            _ => Err(Error::Value(format!(
                "unknown product kind `{s}` (expected w or t)"
            ))),
        }
    }
}

impl SpecialKind {
    pub fn product(self) -> Option<ProductKind> {
        match self {
            SpecialKind::None => None,
            SpecialKind::WhiteheadCandidate => Some(ProductKind::Whitehead),
            SpecialKind::TorsionCandidate => Some(ProductKind::Torsion),
        }
    }
}

/// The only shapes a special operation can have, by the Künneth theorem for
/// `H_(q3+1)(M1 ∧ M2)`.
pub fn special_kind(t: &OperationType) -> SpecialKind {
    let q = t.q();
    if t.q3 + 1 == q && t.q1 >= 3 && t.q2 >= 3 && t.g3 == tensor(&t.g1, &t.g2) {
        SpecialKind::WhiteheadCandidate
    } else if t.q3 == q && t.q1 >= 4 && t.q2 >= 4 && t.g3 == tor(&t.g1, &t.g2) {
        SpecialKind::TorsionCandidate
    } else {
        SpecialKind::None
    }
}

/// The existence criterion for a Torsion product of type `{Z/m, Z/n; q1, q2}`:
/// `d = gcd(m, n)` is odd, or `m` and `n` are even and one of them is a
/// multiple of 4.
pub fn torsion_exists(m: u64, n: u64, q1: u32, q2: u32) -> Result<bool> {
    Error::degree(q1, 4)?;
    Error::degree(q2, 4)?;
    if m < 2 || n < 2 {
        return Err(Error::Value(format!(
            "cyclic orders must be at least 2, got {m} and {n}"
        )));
    }
    Ok(torsion_predicate(&BigInt::from(m), &BigInt::from(n)))
}

fn torsion_predicate(m: &BigInt, n: &BigInt) -> bool {
    let four = BigInt::from(4);
    m.gcd(n).is_odd()
        || (m.is_even() && n.is_even() && (m.is_multiple_of(&four) || n.is_multiple_of(&four)))
}

/// Torsion products split over cyclic summands, so one exists for
/// `{G1, G2; q1, q2}` when it exists for every pair of invariant factors.
pub fn torsion_exists_for(g1: &FgAbGroup, g2: &FgAbGroup, q1: u32, q2: u32) -> Result<bool> {
    Error::degree(q1, 4)?;
    Error::degree(q2, 4)?;
    Ok(g1
        .torsion()
        .iter()
        .all(|m| g2.torsion().iter().all(|n| torsion_predicate(m, n))))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialCount {
    pub kind: ProductKind,
    pub op_type: OperationType,
    /// `M1 ∧ M2`, decomposed.
    pub smash: MooreExpr,
    /// `π_(q3+2)(M1 ∧ M2)`.
    pub pi: FgAbGroup,
    /// `Ext(G3, π_(q3+2)(M1 ∧ M2))`, whose elements are the products.
    pub ext_term: FgAbGroup,
    pub count: Order,
    pub notes: Vec<String>,
}

/// The number of Whitehead or Torsion products of the given type, as the
/// cardinality of `Ext(G3, π_(q3+2)(M1 ∧ M2))`.
pub fn count_special_ops(t: &OperationType, table: &StemTable) -> Result<SpecialCount> {
    let kind = special_kind(t).product().ok_or(Error::NotSpecial)?;
    let mut notes = Vec::new();
    if kind == ProductKind::Torsion {
        if !torsion_exists_for(&t.g1, &t.g2, t.q1, t.q2)? {
            return Err(Error::TorsionProductAbsent(format!(
                "{t}: some pair of invariant factors has even gcd with neither a multiple of 4"
            )));
        }
        notes.push(
            "the count assumes the Hurewicz map h: π_(q3+1)(M1 ∧ M2) -> H_(q3+1)(M1 ∧ M2) is an isomorphism"
                .into(),
        );
    }
    let smash =
        MooreExpr::atom(t.g1.clone(), t.q1)?.smash(&MooreExpr::atom(t.g2.clone(), t.q2)?)?;
    let seq = homotopy_with_coeffs(&smash, t.q3 + 1, &t.g3, table).map_err(|e| match e {
        Error::Unknown(why) => Error::Unknown(format!(
            "{why} (needed for π_{}({}))",
            t.q3 + 2,
            smash.pretty()
        )),
        other => other,
    })?;
    if t.g3.is_trivial() {
        notes.push("trivial coefficient group: only the zero operation exists".into());
    }
    Ok(SpecialCount {
        kind,
        op_type: t.clone(),
        smash,
        pi: seq.pi_n_plus_1,
        count: seq.ext_term.order(),
        ext_term: seq.ext_term,
        notes,
    })
}

/// The Whitehead count from the formula
/// `|Ext(G1 ⊗ G2, stem_1(G1 ⊗ G2) ⊕ Tor(G1, G2))|`, bypassing the wedge
/// machinery.
pub fn whitehead_count_direct(
    g1: &FgAbGroup,
    g2: &FgAbGroup,
    q1: u32,
    q2: u32,
    table: &StemTable,
) -> Result<Order> {
    Error::degree(q1, 3)?;
    Error::degree(q2, 3)?;
    let g3 = tensor(g1, g2);
    let pi = table.stem(&g3, 1, q1 + q2)?.direct_sum(&tor(g1, g2));
    Ok(ext(&g3, &pi).order())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignReport {
    pub kind: ProductKind,
    pub q1: u32,
    pub q2: u32,
    pub epsilon: u64,
    pub sign: i8,
    /// `S(β, α) = (-1)^ε T(α, β) τ`, with `τ` realizing the switch `t: G3' -> G3`.
    pub relation: String,
}

/// Sign relating a special operation to its switched counterpart:
/// `ε = q1 q2` for Whitehead products and `q1 q2 + 1` for Torsion products.
pub fn commutativity_sign(kind: ProductKind, q1: u32, q2: u32) -> SignReport {
    let epsilon = u64::from(q1) * u64::from(q2) + u64::from(kind == ProductKind::Torsion);
    let sign = if epsilon.is_even() { 1 } else { -1 };
    SignReport {
        kind,
        q1,
        q2,
        epsilon,
        sign,
        relation: format!(
            "S(β, α) = {}T(α, β)τ, τ_* = t: G3' -> G3 the switching isomorphism",
            if sign == 1 { "" } else { "-" }
        ),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ShiftDirection {
    ToCoMoore,
    ToMoore,
}

impl FromStr for ShiftDirection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "to-co-moore" | "toCoMoore" | "co-moore" => Ok(ShiftDirection::ToCoMoore),
            "to-moore" | "toMoore" | "moore" => Ok(ShiftDirection::ToMoore),
            _ => Err(Error::Value(format!(
                "unknown direction `{s}` (expected to-co-moore or to-moore)"
            ))),
        }
    }
}

/// `π_n(X; Z/p^k) = π'_(n+1)(X; Z/p^k)`: co-Moore indexing is one higher.
pub fn neisendorfer_shift(n: u32, direction: ShiftDirection) -> Result<u32> {
    Error::degree(n, 2)?;
    match direction {
        ShiftDirection::ToCoMoore => Ok(n + 1),
        ShiftDirection::ToMoore => {
            Error::degree(n - 1, 2)?;
            Ok(n - 1)
        }
    }
}

/// Degrees `{q1, q2, q1 + q2}` of the mod `p^k` product in Moore indexing,
/// moved to co-Moore indexing.
pub fn neisendorfer_product_degrees(q1: u32, q2: u32) -> Result<[u32; 3]> {
    let to = |n| neisendorfer_shift(n, ShiftDirection::ToCoMoore);
    Ok([to(q1)?, to(q2)?, to(q1 + q2)?])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(s: &str) -> OperationType {
        s.parse().unwrap()
    }

    fn fin(n: u64) -> Order {
        Order::Finite(BigInt::from(n))
    }

    #[test]
    fn kinds() {
        assert_eq!(
            special_kind(&ty("Z/6,Z/4,Z/2;5,5,9")),
            SpecialKind::WhiteheadCandidate
        );
        assert_eq!(
            special_kind(&ty("Z/6,Z/4,Z/2;5,5,10")),
            SpecialKind::TorsionCandidate
        );
        assert_eq!(
            special_kind(&ty("Z,Z,Z;3,3,5")),
            SpecialKind::WhiteheadCandidate
        );
        assert_eq!(
            special_kind(&ty("Z/6,Z/4,Z/2;3,5,7")),
            SpecialKind::WhiteheadCandidate
        );
        assert_eq!(
            special_kind(&ty("Z/6,Z/4,Z/2;3,5,7")).product(),
            Some(ProductKind::Whitehead)
        );
        // Torsion needs both degrees >= 4, Whitehead >= 3.
        assert_eq!(special_kind(&ty("Z/6,Z/4,Z/2;3,5,8")), SpecialKind::None);
        assert_eq!(special_kind(&ty("Z/3,Z/3,Z/3;3,5,6")), SpecialKind::None);
        assert_eq!(special_kind(&ty("Z,Z,Z;2,3,4")), SpecialKind::None);
        assert_eq!(special_kind(&ty("Z,Z,Z/2;3,3,5")), SpecialKind::None);
    }

    #[test]
    fn counts() {
        let t = StemTable::builtin();
        let c = count_special_ops(&ty("Z/3,Z/3,Z/3;4,4,7"), &t).unwrap();
        assert_eq!(c.smash, "Z/3@8 | Z/3@9".parse().unwrap());
        assert_eq!(c.pi, FgAbGroup::cyclic(3));
        assert_eq!(c.count, fin(3));
        assert_eq!(
            whitehead_count_direct(&FgAbGroup::cyclic(3), &FgAbGroup::cyclic(3), 4, 4, &t).unwrap(),
            fin(3)
        );
        for (q1, q2) in [(3, 3), (3, 7), (5, 4)] {
            let op = OperationType::new(
                FgAbGroup::free(1),
                FgAbGroup::free(1),
                FgAbGroup::free(1),
                q1,
                q2,
                q1 + q2 - 1,
            )
            .unwrap();
            assert_eq!(count_special_ops(&op, &t).unwrap().count, fin(1));
        }
        assert!(matches!(
            count_special_ops(&ty("Z/9,Z/3,Z/3;5,5,10"), &t),
            Err(Error::Unknown(_))
        ));
        assert!(matches!(
            count_special_ops(&ty("Z/3,Z/3,Z/3;5,5,5"), &t),
            Err(Error::NotSpecial)
        ));
        assert!(matches!(
            count_special_ops(&ty("Z/2,Z/2,Z/2;5,5,10"), &t),
            Err(Error::TorsionProductAbsent(_))
        ));
    }

    #[test]
    fn trivial_coefficients_count_once() {
        let t = StemTable::builtin();
        let c = count_special_ops(&ty("Z/5,Z/7,0;4,4,7"), &t).unwrap();
        assert_eq!(c.count, fin(1));
        assert!(!c.notes.is_empty());
    }

    #[test]
    fn stem_two_from_user_table() {
        let user = StemTable::parse("class=odd, stem=2, value=0, provenance=test\n").unwrap();
        let t = StemTable::builtin().merged(&user);
        let c = count_special_ops(&ty("Z/9,Z/3,Z/3;5,5,10"), &t).unwrap();
        assert_eq!(c.count, fin(1));
        assert_eq!(c.notes.len(), 1);
    }

    #[test]
    fn torsion_existence() {
        assert!(torsion_exists(9, 3, 5, 5).unwrap());
        assert!(torsion_exists(4, 6, 4, 4).unwrap());
        assert!(!torsion_exists(2, 2, 4, 4).unwrap());
        assert!(matches!(
            torsion_exists(3, 3, 3, 4),
            Err(Error::DegreeTooSmall { .. })
        ));
        assert!(matches!(torsion_exists(1, 3, 4, 4), Err(Error::Value(_))));
        let g = |s: &str| s.parse::<FgAbGroup>().unwrap();
        assert!(torsion_exists_for(&g("Z/12"), &g("Z/6"), 4, 4).unwrap());
        assert!(!torsion_exists_for(&g("Z/2 + Z/4"), &g("Z/2"), 4, 4).unwrap());
    }

    #[test]
    fn signs() {
        let s = commutativity_sign(ProductKind::Whitehead, 3, 4);
        assert_eq!((s.epsilon, s.sign), (12, 1));
        let s = commutativity_sign(ProductKind::Torsion, 4, 4);
        assert_eq!((s.epsilon, s.sign), (17, -1));
        let s = commutativity_sign(ProductKind::Whitehead, 3, 3);
        assert_eq!((s.epsilon, s.sign), (9, -1));
    }

    #[test]
    fn shifts() {
        assert_eq!(neisendorfer_shift(7, ShiftDirection::ToCoMoore).unwrap(), 8);
        for n in 3..20 {
            let up = neisendorfer_shift(n, ShiftDirection::ToCoMoore).unwrap();
            assert_eq!(neisendorfer_shift(up, ShiftDirection::ToMoore).unwrap(), n);
        }
        assert!(matches!(
            neisendorfer_shift(2, ShiftDirection::ToMoore),
            Err(Error::DegreeTooSmall { .. })
        ));
        assert_eq!(neisendorfer_product_degrees(3, 5).unwrap(), [4, 6, 9]);
    }
}
