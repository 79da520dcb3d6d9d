use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;
use serde::Serialize;

use crate::abgroup::{parse_group_expr, FgAbGroup, PrimePower};
use crate::error::{Error, Result};

const BUILTIN: &str = include_str!("../../data/stems.txt");

/// Which cyclic summands a stem-table record applies to.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum StemClass {
    /// A free summand, so the atom is a sphere.
    Free,
    /// `Z/2^e` for any `e >= 1`.
    Even,
    /// `Z/p^e` for any odd prime `p`.
    Odd,
    /// One specific prime power; overrides `Even`/`Odd`.
    PrimePower(BigInt),
}

impl fmt::Display for StemClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StemClass::Free => f.write_str("Z"),
            StemClass::Even => f.write_str("even"),
            StemClass::Odd => f.write_str("odd"),
            StemClass::PrimePower(q) => write!(f, "Z/{q}"),
        }
    }
}

impl FromStr for StemClass {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "Z" => Ok(StemClass::Free),
            "even" => Ok(StemClass::Even),
            "odd" => Ok(StemClass::Odd),
            _ => {
                let q = s
                    .strip_prefix("Z/")
                    .and_then(|d| d.trim().parse::<BigInt>().ok())
                    .ok_or_else(|| {
                        format!("unknown class `{s}` (expected Z, even, odd or Z/<p^e>)")
                    })?;
                if prime_power(&q).is_none() {
                    return Err(format!("class Z/{q} is not a prime power"));
                }
                Ok(StemClass::PrimePower(q))
            }
        }
    }
}

/// `Some(p)` when `q = p^e` with `e >= 1`.
fn prime_power(q: &BigInt) -> Option<BigInt> {
    let parts = FgAbGroup::from_parts(0, [q.clone()])
        .ok()?
        .primary_decomposition();
    match parts.as_slice() {
        [PrimePower { prime, .. }] => Some(prime.clone()),
        _ => None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StemEntry {
    pub class: String,
    pub stem: u32,
    pub value: FgAbGroup,
    pub provenance: String,
}

/// Stable stems of Moore-space summands, `π_(n+k)(M(C, n))` for cyclic `C`.
///
/// Stem 0 is built in (it is `C`). Values are only claimed for `n >= k + 2`
/// and `n >= 3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StemTable {
    version: u32,
    entries: BTreeMap<(StemClass, u32), StemEntry>,
}

impl Default for StemTable {
    fn default() -> Self {
        Self::builtin()
    }
}

impl StemTable {
    pub fn builtin() -> Self {
        Self::parse(BUILTIN).expect("shipped stem table parses")
    }

    pub fn empty() -> Self {
        StemTable {
            version: 1,
            entries: BTreeMap::new(),
        }
    }

    /// Parses the text format: `#` comments, an optional `version=<n>` line,
    /// and records `class=<c>, stem=<k>, value=<group-expr>, provenance=<text>`.
    /// The provenance runs to the end of the line and may contain commas.
    pub fn parse(text: &str) -> Result<Self> {
        let mut table = Self::empty();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: String| Error::StemTable {
                line: line_no,
                message,
            };
            if let Some(v) = line.strip_prefix("version=") {
                table.version = v
                    .trim()
                    .parse()
                    .map_err(|_| err(format!("bad version `{v}`")))?;
                continue;
            }
            let mut class = None;
            let mut stem = None;
            let mut value = None;
            let mut provenance = None;
            let mut rest = line;
            while !rest.is_empty() {
                let (key, tail) = rest
                    .split_once('=')
                    .ok_or_else(|| err(format!("expected `key=value`, found `{rest}`")))?;
                let key = key.trim();
                let (val, tail) = if key == "provenance" {
                    (tail, "")
                } else {
                    tail.split_once(',').unwrap_or((tail, ""))
                };
                let val = val.trim();
                match key {
                    "class" => class = Some(val.parse::<StemClass>().map_err(err)?),
                    "stem" => {
                        stem = Some(
                            val.parse::<u32>()
                                .map_err(|_| err(format!("bad stem `{val}`")))?,
                        )
                    }
                    "value" => {
                        value = Some(parse_group_expr(val).map_err(|e| err(format!("value: {e}")))?)
                    }
                    "provenance" => provenance = Some(val.to_string()),
                    _ => return Err(err(format!("unknown key `{key}`"))),
                }
                rest = tail.trim_start();
            }
            let class = class.ok_or_else(|| err("missing `class`".into()))?;
            let stem = stem.ok_or_else(|| err("missing `stem`".into()))?;
            let value = value.ok_or_else(|| err("missing `value`".into()))?;
            if stem == 0 {
                return Err(err("stem 0 is built in and cannot be overridden".into()));
            }
            let entry = StemEntry {
                class: class.to_string(),
                stem,
                value,
                provenance: provenance.unwrap_or_default(),
            };
            table.entries.insert((class, stem), entry);
        }
        Ok(table)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::StemTable {
            line: 0,
            message: format!("{}: {e}", path.display()),
        })?;
        Self::parse(&text)
    }

    /// This table with every record of `other` added, replacing clashes.
    pub fn merged(&self, other: &StemTable) -> StemTable {
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().map(|(k, v)| (k.clone(), v.clone())));
        StemTable {
            version: self.version.max(other.version),
            entries,
        }
    }

    pub fn version(&self) -> u32 {
        self.version
    }

    pub fn entries(&self) -> impl Iterator<Item = &StemEntry> {
        self.entries.values()
    }

    pub fn max_stem(&self) -> u32 {
        self.entries.keys().map(|(_, k)| *k).max().unwrap_or(0)
    }

    /// The record for a cyclic summand `Z/q` (`q` a prime power) or, with
    /// `q = None`, a free summand.
    pub fn lookup(&self, q: Option<&BigInt>, stem: u32) -> Option<&StemEntry> {
        match q {
            None => self.entries.get(&(StemClass::Free, stem)),
            Some(q) => {
                let generic = if q.is_even() {
                    StemClass::Even
                } else {
                    StemClass::Odd
                };
                self.entries
                    .get(&(StemClass::PrimePower(q.clone()), stem))
                    .or_else(|| self.entries.get(&(generic, stem)))
            }
        }
    }

    /// `π_(n+k)(M(g, n))`, summand by summand over the primary decomposition.
    pub fn stem(&self, g: &FgAbGroup, k: u32, n: u32) -> Result<FgAbGroup> {
        if k == 0 {
            Error::degree(n, 2)?;
            return Ok(g.clone());
        }
        Error::degree(n, 3)?;
        if n < k + 2 {
            return Err(Error::Unknown(format!(
                "stem {k} of a Moore space in degree {n} is outside the stable range (needs degree >= {})",
                k + 2
            )));
        }
        let missing =
            |class: String| Error::Unknown(format!("stem {k} not tabulated for class {class}"));
        let mut out = FgAbGroup::trivial();
        for _ in 0..g.free_rank() {
            let e = self.lookup(None, k).ok_or_else(|| missing("Z".into()))?;
            out = out.direct_sum(&e.value);
        }
        for pp in g.primary_decomposition() {
            let q = pp.order();
            debug_assert!(q > BigInt::one());
            let e = self.lookup(Some(&q), k).ok_or_else(|| {
                missing(if q.is_even() {
                    "even".into()
                } else {
                    "odd".into()
                })
            })?;
            out = out.direct_sum(&e.value);
        }
        Ok(out)
    }
}
