use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::abgroup::{parse_group_expr, FgAbGroup};
use crate::error::{Error, Result};

/// The type `{G1, G2, G3; q1, q2, q3}` of a binary operation
/// `π_q1(X; G1) × π_q2(X; G2) -> π_q3(X; G3)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OperationType {
    pub g1: FgAbGroup,
    pub g2: FgAbGroup,
    pub g3: FgAbGroup,
    pub q1: u32,
    pub q2: u32,
    pub q3: u32,
}

impl OperationType {
    pub fn new(
        g1: FgAbGroup,
        g2: FgAbGroup,
        g3: FgAbGroup,
        q1: u32,
        q2: u32,
        q3: u32,
    ) -> Result<Self> {
        for q in [q1, q2, q3] {
            Error::degree(q, 2)?;
        }
        Ok(OperationType {
            g1,
            g2,
            g3,
            q1,
            q2,
            q3,
        })
    }

    /// `q1 + q2`.
    pub fn q(&self) -> u32 {
        self.q1 + self.q2
    }
}

impl fmt::Display for OperationType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{{{}, {}, {}; {}, {}, {}}}",
            self.g1, self.g2, self.g3, self.q1, self.q2, self.q3
        )
    }
}

/// Parses `G1,G2,G3;q1,q2,q3`, optionally wrapped in braces.
impl FromStr for OperationType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        let body = trimmed
            .strip_prefix('{')
            .and_then(|b| b.strip_suffix('}'))
            .unwrap_or(trimmed);
        let base = s.find(body).unwrap_or(0);
        let (groups, degrees) = body.split_once(';').ok_or_else(|| Error::Parse {
            position: base + body.len(),
            message: "expected `G1,G2,G3;q1,q2,q3`".into(),
        })?;
        let mut gs = Vec::new();
        let mut offset = base;
        for part in groups.split(',') {
            gs.push(parse_group_expr(part).map_err(|e| shift(e, offset))?);
            offset += part.len() + 1;
        }
        let mut qs = Vec::new();
        let mut offset = base + groups.len() + 1;
        for part in degrees.split(',') {
            let q = part.trim().parse::<u32>().map_err(|_| Error::Parse {
                position: offset,
                message: format!("expected a degree, found `{}`", part.trim()),
            })?;
            qs.push(q);
            offset += part.len() + 1;
        }
        match (<[FgAbGroup; 3]>::try_from(gs), <[u32; 3]>::try_from(qs)) {
            (Ok([g1, g2, g3]), Ok([q1, q2, q3])) => OperationType::new(g1, g2, g3, q1, q2, q3),
            _ => Err(Error::Parse {
                position: base,
                message: "expected three groups and three degrees".into(),
            }),
        }
    }
}

fn shift(e: Error, offset: usize) -> Error {
    match e {
        Error::Parse { position, message } => Error::Parse {
            position: position + offset,
            message,
        },
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        let t: OperationType = "Z/6, Z/4, Z/2; 5, 5, 9".parse().unwrap();
        assert_eq!(t.g1, FgAbGroup::cyclic(6));
        assert_eq!(t.q3, 9);
        assert_eq!(t.to_string(), "{Z/6, Z/4, Z/2; 5, 5, 9}");
        assert_eq!(t.to_string().parse::<OperationType>().unwrap(), t);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            "Z,Z,Z;3,3".parse::<OperationType>(),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            "Z,Z;3,3,3".parse::<OperationType>(),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            "Z,Z,Z;3,3,1".parse::<OperationType>(),
            Err(Error::DegreeTooSmall { .. })
        ));
        assert_eq!(
            "Z,Q,Z;3,3,3".parse::<OperationType>(),
            Err(Error::Parse {
                position: 2,
                message: "expected `0` or `Z`, found `Q`".into()
            })
        );
        assert!(matches!(
            "Z,Z,Z;3,x,3".parse::<OperationType>(),
            Err(Error::Parse { position: 8, .. })
        ));
    }
}
