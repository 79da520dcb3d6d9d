use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{smith_normal_form, IntMatrix};
use crate::error::{Error, Result};

/// A finitely generated abelian group `Z^r ⊕ Z/d1 ⊕ ... ⊕ Z/dt` in
/// invariant-factor form: `d1 | d2 | ... | dt` and every `di >= 2`.
///
/// Two values are equal exactly when the groups are isomorphic.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct FgAbGroup {
    free_rank: usize,
    torsion: Vec<BigInt>,
}

/// Cardinality of a group.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Order {
    Finite(BigInt),
    Infinite,
}

/// A cyclic summand `Z/p^e` of the primary decomposition.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PrimePower {
    pub prime: BigInt,
    pub exponent: u32,
}

impl PrimePower {
    pub fn order(&self) -> BigInt {
        num_traits::pow(self.prime.clone(), self.exponent as usize)
    }
}

/// A cyclic summand of the canonical decomposition, free or finite.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Cyclic {
    Free,
    Finite(BigInt),
}

impl FgAbGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        FgAbGroup {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    /// `Z/n`, with the conventions `Z/0 = Z` and `Z/1 = 0`.
    pub fn cyclic(n: u64) -> Self {
        match n {
            0 => Self::free(1),
            1 => Self::trivial(),
            n => FgAbGroup {
                free_rank: 0,
                torsion: vec![BigInt::from(n)],
            },
        }
    }

    /// Canonical form of `Z^free_rank ⊕ (⊕ Z/orders)`. Orders need not form a
    /// divisibility chain; orders equal to 1 are dropped.
    pub fn from_parts<I>(free_rank: usize, orders: I) -> Result<Self>
    where
        I: IntoIterator<Item = BigInt>,
    {
        let mut torsion = Vec::new();
        for d in orders {
            if !d.is_positive() {
                return Err(Error::Value(format!("cyclic order {d} must be positive")));
            }
            if !d.is_one() {
                torsion.push(d);
            }
        }
        Ok(FgAbGroup {
            free_rank,
            torsion: invariant_factors(torsion),
        })
    }

    /// Like [`from_parts`](Self::from_parts) but counts each order 0 as a
    /// copy of `Z`, which is how cokernel diagonals read.
    pub fn from_cyclic_orders<I>(orders: I) -> Self
    where
        I: IntoIterator<Item = BigInt>,
    {
        let mut free_rank = 0;
        let mut torsion = Vec::new();
        for d in orders {
            let d = d.abs();
            if d.is_zero() {
                free_rank += 1;
            } else if !d.is_one() {
                torsion.push(d);
            }
        }
        FgAbGroup {
            free_rank,
            torsion: invariant_factors(torsion),
        }
    }

    pub fn from_cyclics<I: IntoIterator<Item = Cyclic>>(summands: I) -> Self {
        Self::from_cyclic_orders(summands.into_iter().map(|c| match c {
            Cyclic::Free => BigInt::zero(),
            Cyclic::Finite(d) => d,
        }))
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    /// Invariant factors, ascending, each dividing the next.
    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    /// Number of generators in the canonical presentation: free generators
    /// first, then one per invariant factor.
    pub fn generator_count(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    /// Order of the i-th canonical generator (0 for free generators).
    pub fn generator_order(&self, i: usize) -> BigInt {
        if i < self.free_rank {
            BigInt::zero()
        } else {
            self.torsion[i - self.free_rank].clone()
        }
    }

    pub fn cyclic_summands(&self) -> impl Iterator<Item = Cyclic> + '_ {
        std::iter::repeat(Cyclic::Free)
            .take(self.free_rank)
            .chain(self.torsion.iter().cloned().map(Cyclic::Finite))
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }

    pub fn has_two_torsion(&self) -> bool {
        self.torsion.iter().any(Integer::is_even)
    }

    pub fn order(&self) -> Order {
        if self.free_rank > 0 {
            Order::Infinite
        } else {
            Order::Finite(self.torsion.iter().product())
        }
    }

    /// The torsion subgroup as a group in its own right.
    pub fn torsion_subgroup(&self) -> FgAbGroup {
        FgAbGroup {
            free_rank: 0,
            torsion: self.torsion.clone(),
        }
    }

    pub fn direct_sum(&self, other: &FgAbGroup) -> FgAbGroup {
        let mut torsion = self.torsion.clone();
        torsion.extend(other.torsion.iter().cloned());
        FgAbGroup {
            free_rank: self.free_rank + other.free_rank,
            torsion: invariant_factors(torsion),
        }
    }

    /// Prime-power cyclic factors of the torsion subgroup, sorted.
    ///
    /// Factoring is by trial division, which is fine for the factor sizes
    /// that occur in practice (they come from small coefficient groups).
    pub fn primary_decomposition(&self) -> Vec<PrimePower> {
        let mut out: Vec<PrimePower> = self.torsion.iter().flat_map(factorize).collect();
        out.sort();
        out
    }
}

pub fn direct_sum(g: &FgAbGroup, h: &FgAbGroup) -> FgAbGroup {
    g.direct_sum(h)
}

pub fn order(g: &FgAbGroup) -> Order {
    g.order()
}

/// The group presented by `m`: one generator per column, one relation per row.
pub fn cokernel(m: &IntMatrix) -> FgAbGroup {
    let snf = smith_normal_form(m);
    let free_rank = m.cols() - snf.rank();
    FgAbGroup {
        free_rank,
        torsion: snf.invariants.into_iter().filter(|d| !d.is_one()).collect(),
    }
}

/// Re-groups cyclic orders (all >= 2) into a divisibility chain by repeated
/// gcd/lcm exchange, using `Z/a ⊕ Z/b ≅ Z/gcd ⊕ Z/lcm`.
fn invariant_factors(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let n = v.len();
    for i in 0..n {
        for j in i + 1..n {
            let g = v[i].gcd(&v[j]);
            if g != v[i] {
                let l = &v[i] / &g * &v[j];
                v[i] = g;
                v[j] = l;
            }
        }
    }
    v.retain(|d| !d.is_one());
    v
}

fn factorize(n: &BigInt) -> Vec<PrimePower> {
    let mut n = n.clone();
    let mut out = Vec::new();
    let mut p = BigInt::from(2);
    while &p * &p <= n {
        let mut e = 0;
        while n.is_multiple_of(&p) {
            n /= &p;
            e += 1;
        }
        if e > 0 {
            out.push(PrimePower {
                prime: p.clone(),
                exponent: e,
            });
        }
        p += if p == BigInt::from(2) { 1 } else { 2 };
    }
    if n > BigInt::one() {
        out.push(PrimePower {
            prime: n,
            exponent: 1,
        });
    }
    out
}

impl Ord for FgAbGroup {
    fn cmp(&self, other: &Self) -> Ordering {
        self.free_rank
            .cmp(&other.free_rank)
            .then_with(|| self.torsion.len().cmp(&other.torsion.len()))
            .then_with(|| self.torsion.cmp(&other.torsion))
    }
}

impl PartialOrd for FgAbGroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("Z/{d}")));
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Debug for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FgAbGroup({self})")
    }
}

impl FromStr for FgAbGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_group_expr(s)
    }
}

/// Parses the group-expression grammar: terms `0`, `Z`, `Z/n` (n >= 2) and
/// `Z^r` joined by `+`. Whitespace is ignored.
pub fn parse_group_expr(s: &str) -> Result<FgAbGroup> {
    let mut p = Parser {
        chars: s.char_indices().peekable(),
        len: s.len(),
    };
    let mut free_rank = 0usize;
    let mut torsion = Vec::new();
    loop {
        p.skip_ws();
        let pos = p.pos();
        match p.next() {
            Some('0') => {}
            Some('Z') => {
                p.skip_ws();
                match p.peek() {
                    Some('/') => {
                        p.next();
                        let (n, at) = p.number()?;
                        if n < BigInt::from(2) {
                            return Err(Error::Value(format!(
                                "cyclic order at position {at} must be at least 2, got Z/{n}"
                            )));
                        }
                        torsion.push(n);
                    }
                    Some('^') => {
                        p.next();
                        let (r, at) = p.number()?;
                        free_rank += r.to_usize().ok_or_else(|| Error::Parse {
                            position: at,
                            message: "rank too large".into(),
                        })?;
                    }
                    _ => free_rank += 1,
                }
            }
            Some(c) => {
                return Err(Error::Parse {
                    position: pos,
                    message: format!("expected `0` or `Z`, found `{c}`"),
                })
            }
            None => {
                return Err(Error::Parse {
                    position: pos,
                    message: "expected a group term".into(),
                })
            }
        }
        p.skip_ws();
        let pos = p.pos();
        match p.next() {
            None => break,
            Some('+') => continue,
            Some(c) => {
                return Err(Error::Parse {
                    position: pos,
                    message: format!("expected `+` or end of input, found `{c}`"),
                })
            }
        }
    }
    FgAbGroup::from_parts(free_rank, torsion)
}

struct Parser<'a> {
    chars: std::iter::Peekable<std::str::CharIndices<'a>>,
    len: usize,
}

impl Parser<'_> {
    fn pos(&mut self) -> usize {
        self.chars.peek().map_or(self.len, |&(i, _)| i)
    }

    fn peek(&mut self) -> Option<char> {
        self.chars.peek().map(|&(_, c)| c)
    }

    fn next(&mut self) -> Option<char> {
        self.chars.next().map(|(_, c)| c)
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.next();
        }
    }

    fn number(&mut self) -> Result<(BigInt, usize)> {
        self.skip_ws();
        let start = self.pos();
        let mut digits = String::new();
        while let Some(c) = self.peek().filter(char::is_ascii_digit) {
            digits.push(c);
            self.next();
        }
        if digits.is_empty() {
            return Err(Error::Parse {
                position: start,
                message: "expected a number".into(),
            });
        }
        Ok((digits.parse().expect("ascii digits"), start))
    }
}

impl Serialize for FgAbGroup {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for FgAbGroup {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for Order {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Order::Finite(n) => write!(f, "{n}"),
            Order::Infinite => write!(f, "infinite"),
        }
    }
}

impl Order {
    pub fn finite(&self) -> Option<&BigInt> {
        match self {
            Order::Finite(n) => Some(n),
            Order::Infinite => None,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Order::Finite(_))
    }
}

impl std::ops::Mul for &Order {
    type Output = Order;

    fn mul(self, rhs: &Order) -> Order {
        match (self, rhs) {
            (Order::Finite(a), Order::Finite(b)) => Order::Finite(a * b),
            _ => Order::Infinite,
        }
    }
}

/// Small orders serialize as JSON numbers, large ones as decimal strings.
impl Serialize for Order {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Order::Finite(n) => match n.to_u64() {
                Some(v) => s.serialize_u64(v),
                None => s.collect_str(n),
            },
            Order::Infinite => s.serialize_str("infinite"),
        }
    }
}

impl<'de> Deserialize<'de> for Order {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(u64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(n) => Ok(Order::Finite(n.into())),
            Raw::Text(t) if t == "infinite" => Ok(Order::Infinite),
            Raw::Text(t) => t
                .parse()
                .map(Order::Finite)
                .map_err(|_| serde::de::Error::custom(format!("bad order `{t}`"))),
        }
    }
}
