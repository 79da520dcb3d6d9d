use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::abgroup::{parse_group_expr, FgAbGroup};
use crate::chains::{moore_complex, ChainComplex};
use crate::error::{Error, Result};
use crate::functors::{tensor, tor};

/// A Moore space `M(G, n)` with `G` nontrivial and `n >= 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MooreAtom {
    degree: u32,
    group: FgAbGroup,
}

impl MooreAtom {
    /// `None` when `group` is trivial, since `M(0, n)` is a point.
    pub fn new(group: FgAbGroup, degree: u32) -> Result<Option<MooreAtom>> {
        Error::degree(degree, 2)?;
        Ok((!group.is_trivial()).then_some(MooreAtom { degree, group }))
    }

    pub fn group(&self) -> &FgAbGroup {
        &self.group
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }
}

impl fmt::Display for MooreAtom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.group, self.degree)
    }
}

/// A finite wedge of Moore spaces in normal form: atoms sorted by degree,
/// then by group. The empty wedge is the point.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct MooreExpr {
    atoms: Vec<MooreAtom>,
}

impl MooreExpr {
    pub fn point() -> Self {
        Self::default()
    }

    pub fn atom(group: FgAbGroup, degree: u32) -> Result<Self> {
        Ok(Self::from_atoms(MooreAtom::new(group, degree)?))
    }

    pub fn from_atoms<I: IntoIterator<Item = MooreAtom>>(atoms: I) -> Self {
        let mut atoms: Vec<MooreAtom> = atoms.into_iter().collect();
        atoms.sort();
        MooreExpr { atoms }
    }

    pub fn atoms(&self) -> &[MooreAtom] {
        &self.atoms
    }

    pub fn is_point(&self) -> bool {
        self.atoms.is_empty()
    }

    pub fn wedge(&self, other: &MooreExpr) -> MooreExpr {
        Self::from_atoms(self.atoms.iter().chain(&other.atoms).cloned())
    }

    pub fn suspend(&self) -> MooreExpr {
        self.suspend_by(1)
    }

    pub fn suspend_by(&self, k: u32) -> MooreExpr {
        Self::from_atoms(self.atoms.iter().map(|a| MooreAtom {
            degree: a.degree + k,
            group: a.group.clone(),
        }))
    }

    /// Smash product, decomposing every pair of atoms.
    pub fn smash(&self, other: &MooreExpr) -> Result<MooreExpr> {
        let mut atoms = Vec::new();
        for a in &self.atoms {
            for b in &other.atoms {
                atoms.extend(smash_decompose(a, b)?.atoms);
            }
        }
        Ok(Self::from_atoms(atoms))
    }

    /// Reduced integral homology in degree `n`.
    pub fn homology(&self, n: u32) -> FgAbGroup {
        self.atoms
            .iter()
            .filter(|a| a.degree == n)
            .fold(FgAbGroup::trivial(), |acc, a| acc.direct_sum(&a.group))
    }

    /// Reduced cellular chains: the direct sum of the atoms' Moore complexes.
    pub fn chain_complex(&self) -> ChainComplex {
        self.atoms.iter().fold(ChainComplex::zero(), |acc, a| {
            acc.direct_sum(&moore_complex(&a.group, a.degree).expect("atom degree is at least 2"))
        })
    }

    /// Degrees in which the reduced homology may be nonzero.
    pub fn degree_span(&self) -> Option<(u32, u32)> {
        let lo = self.atoms.iter().map(|a| a.degree).min()?;
        let hi = self.atoms.iter().map(|a| a.degree).max()?;
        Some((lo, hi))
    }

    /// Mathematical notation, e.g. `M(Z/3, 8) ∨ M(Z/3, 9)`.
    pub fn pretty(&self) -> String {
        if self.atoms.is_empty() {
            return "*".into();
        }
        self.atoms
            .iter()
            .map(|a| format!("M({}, {})", a.group, a.degree))
            .collect::<Vec<_>>()
            .join(" ∨ ")
    }
}

/// `M(G1, q1) ∧ M(G2, q2) ≃ M(G1 ⊗ G2, q1 + q2) ∨ M(Tor(G1, G2), q1 + q2 + 1)`,
/// available unless both groups have 2-torsion.
pub fn smash_decompose(a: &MooreAtom, b: &MooreAtom) -> Result<MooreExpr> {
    if a.group.has_two_torsion() && b.group.has_two_torsion() {
        return Err(Error::Unsupported2Torsion {
            g1: a.group.to_string(),
            g2: b.group.to_string(),
        });
    }
    let q = a.degree + b.degree;
    let low = MooreExpr::atom(tensor(&a.group, &b.group), q)?;
    let high = MooreExpr::atom(tor(&a.group, &b.group), q + 1)?;
    Ok(low.wedge(&high))
}

/// Atoms separated by `|`, each `<group-expr>@<degree>`; `*` is the point.
impl fmt::Display for MooreExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.atoms.is_empty() {
            return f.write_str("*");
        }
        for (i, a) in self.atoms.iter().enumerate() {
            if i > 0 {
                f.write_str(" | ")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

impl FromStr for MooreExpr {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.trim() == "*" {
            return Ok(MooreExpr::point());
        }
        let mut atoms = Vec::new();
        let mut offset = 0;
        for part in s.split('|') {
            atoms.extend(parse_atom(part, offset)?);
            offset += part.len() + 1;
        }
        Ok(MooreExpr::from_atoms(atoms))
    }
}

fn parse_atom(s: &str, offset: usize) -> Result<Option<MooreAtom>> {
    let at = s.rfind('@').ok_or_else(|| Error::Parse {
        position: offset + s.len(),
        message: "expected `<group>@<degree>`".into(),
    })?;
    let group = parse_group_expr(&s[..at]).map_err(|e| match e {
        Error::Parse { position, message } => Error::Parse {
            position: offset + position,
            message,
        },
        other => other,
    })?;
    let digits = s[at + 1..].trim();
    let degree: u32 = digits.parse().map_err(|_| Error::Parse {
        position: offset + at + 1,
        message: format!("expected a degree, found `{digits}`"),
    })?;
    MooreAtom::new(group, degree)
}

impl Serialize for MooreExpr {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for MooreExpr {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An unevaluated space built from Moore atoms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpaceExpr {
    Moore(MooreExpr),
    Wedge(Vec<SpaceExpr>),
    Suspension(Box<SpaceExpr>),
    Smash(Box<SpaceExpr>, Box<SpaceExpr>),
}

impl SpaceExpr {
    pub fn normalize(&self) -> Result<MooreExpr> {
        match self {
            SpaceExpr::Moore(m) => Ok(m.clone()),
            SpaceExpr::Wedge(parts) => parts
                .iter()
                .try_fold(MooreExpr::point(), |acc, p| Ok(acc.wedge(&p.normalize()?))),
            SpaceExpr::Suspension(x) => Ok(x.normalize()?.suspend()),
            SpaceExpr::Smash(x, y) => x.normalize()?.smash(&y.normalize()?),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(s: &str) -> MooreExpr {
        s.parse().unwrap()
    }

    fn atom(s: &str) -> MooreAtom {
        m(s).atoms()[0].clone()
    }

    #[test]
    fn decomposition_examples() {
        assert_eq!(
            smash_decompose(&atom("Z/3@4"), &atom("Z/3@4")).unwrap(),
            m("Z/3@8 | Z/3@9")
        );
        assert_eq!(
            smash_decompose(&atom("Z@3"), &atom("Z@5")).unwrap(),
            m("Z@8")
        );
        assert!(matches!(
            smash_decompose(&atom("Z/2@4"), &atom("Z/6@4")),
            Err(Error::Unsupported2Torsion { .. })
        ));
        // One side with 2-torsion is fine.
        assert_eq!(
            smash_decompose(&atom("Z/2@4"), &atom("Z/3@4")).unwrap(),
            MooreExpr::point()
        );
    }

    #[test]
    fn normal_form() {
        let x = m("Z/3@9 | Z@2 | 0@5 | Z/2@9");
        assert_eq!(x.to_string(), "Z@2 | Z/2@9 | Z/3@9");
        assert_eq!(x.atoms().len(), 3);
        assert_eq!(m("*"), MooreExpr::point());
        assert_eq!(m("0@4"), MooreExpr::point());
        assert_eq!(x.suspend().to_string(), "Z@3 | Z/2@10 | Z/3@10");
        assert_eq!(x.pretty(), "M(Z, 2) ∨ M(Z/2, 9) ∨ M(Z/3, 9)");
        assert_eq!(x.homology(9), "Z/6".parse().unwrap());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            "Z/3".parse::<MooreExpr>(),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            "Z/3@1".parse::<MooreExpr>(),
            Err(Error::DegreeTooSmall { .. })
        ));
        assert_eq!(
            "Z@4 | Q@3".parse::<MooreExpr>(),
            Err(Error::Parse {
                position: 6,
                message: "expected `0` or `Z`, found `Q`".into()
            })
        );
    }

    #[test]
    fn smash_distributes() {
        let x = m("Z/3@3 | Z@4");
        let y = m("Z/9@2");
        let s = x.smash(&y).unwrap();
        assert_eq!(s, m("Z/3@5 | Z/3@6 | Z/9@6"));
        let symbolic = SpaceExpr::Smash(
            Box::new(SpaceExpr::Suspension(Box::new(SpaceExpr::Moore(x)))),
            Box::new(SpaceExpr::Moore(y)),
        );
        assert_eq!(symbolic.normalize().unwrap(), s.suspend());
    }

    #[test]
    fn chains_match_atoms() {
        let x = m("Z/3@3 | Z + Z/4@3 | Z/5@6");
        let c = x.chain_complex();
        for n in 0..10 {
            assert_eq!(c.homology(n), x.homology(n), "degree {n}");
        }
    }
}
