use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Exact interval coordinate.
pub type Coord = BigRational;

pub fn coord(n: i64, d: i64) -> Coord {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn is_endpoint(x: &Coord) -> bool {
    x.is_zero() || x.is_one()
}

/// A point of one of the abstract spaces `A`, `B`. Only the basepoint is
/// distinguished; all basepoints compare equal.
#[derive(Clone, Debug, Eq)]
pub struct AbstractPoint {
    token: u64,
    basepoint: bool,
}

impl AbstractPoint {
    pub fn new(token: u64) -> Self {
        AbstractPoint {
            token,
            basepoint: false,
        }
    }

    pub fn base() -> Self {
        AbstractPoint {
            token: 0,
            basepoint: true,
        }
    }

    pub fn is_basepoint(&self) -> bool {
        self.basepoint
    }
}

impl PartialEq for AbstractPoint {
    fn eq(&self, other: &Self) -> bool {
        match (self.basepoint, other.basepoint) {
            (true, true) => true,
            (false, false) => self.token == other.token,
            _ => false,
        }
    }
}

impl std::hash::Hash for AbstractPoint {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.basepoint.hash(state);
        if !self.basepoint {
            self.token.hash(state);
        }
    }
}

impl fmt::Display for AbstractPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.basepoint {
            f.write_str("*")
        } else {
            write!(f, "x{}", self.token)
        }
    }
}

/// `(x, u)` in the reduced suspension: `u ∈ {0, 1}` and `x = *` collapse to
/// the basepoint.
#[derive(Clone, Debug)]
pub struct SuspensionPoint {
    pub x: AbstractPoint,
    pub u: Coord,
}

impl SuspensionPoint {
    pub fn new(x: AbstractPoint, u: Coord) -> Self {
        SuspensionPoint { x, u }
    }

    pub fn is_basepoint(&self) -> bool {
        self.x.is_basepoint() || is_endpoint(&self.u)
    }
}

impl PartialEq for SuspensionPoint {
    fn eq(&self, other: &Self) -> bool {
        match (self.is_basepoint(), other.is_basepoint()) {
            (true, true) => true,
            (false, false) => self.x == other.x && self.u == other.u,
            _ => false,
        }
    }
}

impl fmt::Display for SuspensionPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.u)
    }
}

/// A point of `ΣA × ΣB`; equality is componentwise.
#[derive(Clone, Debug, PartialEq)]
pub struct ProductPoint {
    pub first: SuspensionPoint,
    pub second: SuspensionPoint,
}

impl ProductPoint {
    pub fn new(first: SuspensionPoint, second: SuspensionPoint) -> Self {
        ProductPoint { first, second }
    }

    pub fn in_wedge(&self) -> bool {
        self.first.is_basepoint() || self.second.is_basepoint()
    }

    /// The image in `ΣA ∧ ΣB`.
    pub fn smash(self) -> SmashPoint {
        SmashPoint(self)
    }
}

impl fmt::Display for ProductPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.first, self.second)
    }
}

/// A point of `ΣA ∧ ΣB`: the wedge collapses to the basepoint.
#[derive(Clone, Debug)]
pub struct SmashPoint(pub ProductPoint);

impl SmashPoint {
    pub fn is_basepoint(&self) -> bool {
        self.0.in_wedge()
    }
}

impl PartialEq for SmashPoint {
    fn eq(&self, other: &Self) -> bool {
        match (self.is_basepoint(), other.is_basepoint()) {
            (true, true) => true,
            (false, false) => self.0 == other.0,
            _ => false,
        }
    }
}

impl fmt::Display for SmashPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_basepoint() {
            f.write_str("*")
        } else {
            self.0.fmt(f)
        }
    }
}

/// `(a, b, t)` in the join `A ∗ B`: at `t = 0` the `b` coordinate is
/// forgotten, at `t = 1` the `a` coordinate, and the line `(*, *, t)` is
/// the basepoint.
#[derive(Clone, Debug)]
pub struct JoinPoint {
    pub a: AbstractPoint,
    pub b: AbstractPoint,
    pub t: Coord,
}

impl JoinPoint {
    pub fn new(a: AbstractPoint, b: AbstractPoint, t: Coord) -> Self {
        JoinPoint { a, b, t }
    }

    pub fn is_basepoint(&self) -> bool {
        self.a.is_basepoint() && self.b.is_basepoint()
    }
}

impl PartialEq for JoinPoint {
    fn eq(&self, other: &Self) -> bool {
        if self.is_basepoint() || other.is_basepoint() {
            return self.is_basepoint() && other.is_basepoint();
        }
        if self.t != other.t {
            return false;
        }
        if self.t.is_zero() {
            self.a == other.a
        } else if self.t.is_one() {
            self.b == other.b
        } else {
            self.a == other.a && self.b == other.b
        }
    }
}

impl fmt::Display for JoinPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.a, self.b, self.t)
    }
}

/// `((a, b, t), u)` in `Σ(A ∗ B)`, or in the cone `C(A ∗ B)` when `u` is read
/// as the cone coordinate.
#[derive(Clone, Debug)]
pub struct SuspendedJoinPoint {
    pub p: JoinPoint,
    pub u: Coord,
}

impl SuspendedJoinPoint {
    pub fn new(a: AbstractPoint, b: AbstractPoint, t: Coord, u: Coord) -> Self {
        SuspendedJoinPoint {
            p: JoinPoint::new(a, b, t),
            u,
        }
    }
}

impl fmt::Display for SuspendedJoinPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.p, self.u)
    }
}

/// `((a ∧ b), t)` in `Σ(A ∧ B)`.
#[derive(Clone, Debug)]
pub struct SmashSuspensionPoint {
    pub a: AbstractPoint,
    pub b: AbstractPoint,
    pub t: Coord,
}

impl SmashSuspensionPoint {
    pub fn is_basepoint(&self) -> bool {
        self.a.is_basepoint() || self.b.is_basepoint() || is_endpoint(&self.t)
    }
}

impl PartialEq for SmashSuspensionPoint {
    fn eq(&self, other: &Self) -> bool {
        match (self.is_basepoint(), other.is_basepoint()) {
            (true, true) => true,
            (false, false) => self.a == other.a && self.b == other.b && self.t == other.t,
            _ => false,
        }
    }
}

/// `((a ∧ b), t, u)` in `Σ²(A ∧ B)`.
#[derive(Clone, Debug)]
pub struct DoubleSuspensionPoint {
    pub a: AbstractPoint,
    pub b: AbstractPoint,
    pub t: Coord,
    pub u: Coord,
}

impl DoubleSuspensionPoint {
    pub fn new(a: AbstractPoint, b: AbstractPoint, t: Coord, u: Coord) -> Self {
        DoubleSuspensionPoint { a, b, t, u }
    }

    pub fn is_basepoint(&self) -> bool {
        self.a.is_basepoint()
            || self.b.is_basepoint()
            || is_endpoint(&self.t)
            || is_endpoint(&self.u)
    }
}

impl PartialEq for DoubleSuspensionPoint {
    fn eq(&self, other: &Self) -> bool {
        match (self.is_basepoint(), other.is_basepoint()) {
            (true, true) => true,
            (false, false) => {
                self.a == other.a && self.b == other.b && self.t == other.t && self.u == other.u
            }
            _ => false,
        }
    }
}

impl fmt::Display for DoubleSuspensionPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(({} ∧ {}), {}, {})", self.a, self.b, self.t, self.u)
    }
}
