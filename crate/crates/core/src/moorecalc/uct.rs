use serde::{Deserialize, Serialize};

use super::{MooreExpr, StemTable};
use crate::abgroup::{FgAbGroup, Order};
use crate::error::{Error, Result};
use crate::functors::{ext, hom};

/// The outer terms of `0 -> Ext(G, π_(n+1) X) -> π_n(X; G) -> Hom(G, π_n X) -> 0`
/// and the resulting cardinality of the middle term. The middle group itself
/// is not determined.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UctSequence {
    pub space: MooreExpr,
    pub degree: u32,
    pub coefficients: FgAbGroup,
    pub pi_n: FgAbGroup,
    pub pi_n_plus_1: FgAbGroup,
    pub ext_term: FgAbGroup,
    pub hom_term: FgAbGroup,
    pub middle_cardinality: Order,
    pub notes: Vec<String>,
}

impl UctSequence {
    /// `|ext_term| * |hom_term| == middle_cardinality`.
    pub fn is_multiplicative(&self) -> bool {
        &self.ext_term.order() * &self.hom_term.order() == self.middle_cardinality
    }
}

/// `π_m(X)` for a wedge of Moore spaces, assembled atom by atom.
///
/// Wedge summands only contribute independently below the first cross term,
/// so this requires `m <= n_i + n_j - 2` for every pair of atoms.
pub fn homotopy_group(x: &MooreExpr, m: u32, table: &StemTable) -> Result<FgAbGroup> {
    let atoms = x.atoms();
    if atoms.len() >= 2 {
        // The two lowest degrees give the binding pair.
        let bound = atoms[0].degree() + atoms[1].degree() - 2;
        if m > bound {
            return Err(Error::Unknown(format!(
                "π_{m} of {x} involves cross terms of the wedge (additivity needs degree <= {bound})"
            )));
        }
    }
    let mut out = FgAbGroup::trivial();
    for a in atoms {
        if a.degree() > m {
            continue;
        }
        let k = m - a.degree();
        let piece = match table.stem(a.group(), k, a.degree()) {
            Err(Error::DegreeTooSmall { .. }) => {
                return Err(Error::Unknown(format!(
                    "π_{m}(M({}, {})) is unstable and not tabulated",
                    a.group(),
                    a.degree()
                )))
            }
            other => other?,
        };
        out = out.direct_sum(&piece);
    }
    Ok(out)
}

/// `π_n(X; G)` through the universal coefficient sequence.
pub fn homotopy_with_coeffs(
    x: &MooreExpr,
    n: u32,
    g: &FgAbGroup,
    table: &StemTable,
) -> Result<UctSequence> {
    Error::degree(n, 2)?;
    let pi_n = homotopy_group(x, n, table)?;
    let pi_n_plus_1 = homotopy_group(x, n + 1, table)?;
    let ext_term = ext(g, &pi_n_plus_1);
    let hom_term = hom(g, &pi_n);
    let middle_cardinality = &ext_term.order() * &hom_term.order();
    let mut notes = vec![format!(
        "only the cardinality of π_{n}(X; {g}) is determined; the extension is not resolved"
    )];
    if g.is_trivial() {
        notes.push("trivial coefficients: M(0, n) is a point".into());
    }
    if x.atoms().iter().any(|a| a.degree() <= n) {
        notes.push(format!(
            "stems taken from table version {}",
            table.version()
        ));
    }
    Ok(UctSequence {
        space: x.clone(),
        degree: n,
        coefficients: g.clone(),
        pi_n,
        pi_n_plus_1,
        ext_term,
        hom_term,
        middle_cardinality,
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn g(s: &str) -> FgAbGroup {
        s.parse().unwrap()
    }

    fn m(s: &str) -> MooreExpr {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        let t = StemTable::builtin();
        let u = homotopy_with_coeffs(&m("Z/3@8"), 8, &g("Z/3"), &t).unwrap();
        assert_eq!(u.ext_term, g("0"));
        assert_eq!(u.hom_term, g("Z/3"));
        assert_eq!(u.middle_cardinality, Order::Finite(BigInt::from(3)));
        for k in 2..=12u64 {
            let u = homotopy_with_coeffs(&m("Z@5"), 5, &FgAbGroup::cyclic(k), &t).unwrap();
            let d = if k % 2 == 0 { 2 } else { 1 };
            assert_eq!(u.ext_term, FgAbGroup::cyclic(d));
            assert_eq!(u.hom_term, g("0"));
            assert_eq!(u.middle_cardinality, Order::Finite(BigInt::from(d)));
        }
        assert!(matches!(
            homotopy_with_coeffs(&m("Z/5@6"), 9, &g("Z/5"), &t),
            Err(Error::Unknown(_))
        ));
    }

    #[test]
    fn infinite_and_gating() {
        let t = StemTable::builtin();
        let u = homotopy_with_coeffs(&m("Z@5"), 5, &g("Z"), &t).unwrap();
        assert_eq!(u.hom_term, g("Z"));
        assert_eq!(u.middle_cardinality, Order::Infinite);
        assert!(u.is_multiplicative());
        // M(Z,3) ∨ M(Z,3): additivity holds up to degree 4.
        let x = m("Z@3 | Z@3");
        assert!(homotopy_with_coeffs(&x, 3, &g("Z/2"), &t).is_ok());
        assert!(matches!(
            homotopy_with_coeffs(&x, 4, &g("Z/2"), &t),
            Err(Error::Unknown(_))
        ));
        // Degree-2 atoms have no tabulated 1-stem.
        assert!(matches!(
            homotopy_with_coeffs(&m("Z/3@2"), 2, &g("Z/3"), &t),
            Err(Error::Unknown(_))
        ));
    }

    #[test]
    fn point_has_trivial_groups() {
        let t = StemTable::builtin();
        let u = homotopy_with_coeffs(&MooreExpr::point(), 7, &g("Z/4"), &t).unwrap();
        assert_eq!(u.middle_cardinality, Order::Finite(BigInt::from(1)));
    }
}
