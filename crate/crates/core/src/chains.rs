//! Finite free chain complexes over the integers.
//!
//! Used as cellular models: a Moore space `M(G, n)` has one `n`-cell per
//! cyclic summand of `G` and one `(n+1)`-cell per torsion summand, attached
//! by the invariant factor. Chains are reduced (no basepoint cell), so the
//! tensor product of two Moore complexes models their smash product.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::abgroup::{smith_normal_form, FgAbGroup, IntMatrix};
use crate::error::{Error, Result};
use crate::functors::{tensor, tor};

/// A bounded complex `C_lo <- C_(lo+1) <- ... <- C_hi` of free abelian groups.
///
/// `boundaries[i]` is the matrix of `∂: C_(lo+i) -> C_(lo+i-1)`, acting on
/// column vectors; the lowest one always has zero rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    lowest: u32,
    ranks: Vec<usize>,
    boundaries: Vec<IntMatrix>,
}

/// Where the Koszul sign goes in the tensor product differential.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum SignConvention {
    /// `∂(a ⊗ b) = ∂a ⊗ b + (-1)^|a| a ⊗ ∂b`
    #[default]
    FirstFactorDegree,
    /// `∂(a ⊗ b) = (-1)^|b| ∂a ⊗ b + a ⊗ ∂b`
    SecondFactorDegree,
}

impl ChainComplex {
    /// The zero complex.
    pub fn zero() -> Self {
        ChainComplex {
            lowest: 0,
            ranks: Vec::new(),
            boundaries: Vec::new(),
        }
    }

    /// Builds a complex from ranks starting at degree `lowest` and the
    /// boundary maps out of each degree (the first is ignored if empty).
    pub fn new(lowest: u32, ranks: Vec<usize>, boundaries: Vec<IntMatrix>) -> Result<Self> {
        if boundaries.len() != ranks.len() {
            return Err(Error::Dimension(format!(
                "{} boundary maps for {} degrees",
                boundaries.len(),
                ranks.len()
            )));
        }
        for (i, d) in boundaries.iter().enumerate() {
            let below = if i == 0 { 0 } else { ranks[i - 1] };
            if d.rows() != below || d.cols() != ranks[i] {
                return Err(Error::Dimension(format!(
                    "boundary out of degree {} is {}x{}, expected {}x{}",
                    lowest as usize + i,
                    d.rows(),
                    d.cols(),
                    below,
                    ranks[i]
                )));
            }
        }
        let c = ChainComplex {
            lowest,
            ranks,
            boundaries,
        };
        if let Some(n) = c.first_nonzero_square() {
            return Err(Error::Value(format!(
                "boundary squares to a nonzero map at degree {n}"
            )));
        }
        Ok(c)
    }

    /// Checks `∂∂ = 0`, returning the first degree where it fails.
    pub fn first_nonzero_square(&self) -> Option<u32> {
        (self.lowest + 1..self.lowest + self.ranks.len() as u32).find(|&n| {
            let outer = self.boundary(n - 1);
            let inner = self.boundary(n);
            !outer.mul(&inner).expect("adjacent shapes agree").is_zero()
        })
    }

    pub fn is_valid(&self) -> bool {
        self.first_nonzero_square().is_none()
    }

    /// Degrees carrying at least one generator, as an inclusive range.
    pub fn support(&self) -> Option<(u32, u32)> {
        let first = self.ranks.iter().position(|&r| r > 0)?;
        let last = self.ranks.iter().rposition(|&r| r > 0)?;
        Some((self.lowest + first as u32, self.lowest + last as u32))
    }

    pub fn rank(&self, n: u32) -> usize {
        n.checked_sub(self.lowest)
            .and_then(|i| self.ranks.get(i as usize))
            .copied()
            .unwrap_or(0)
    }

    pub fn ranks(&self) -> impl Iterator<Item = (u32, usize)> + '_ {
        self.ranks
            .iter()
            .enumerate()
            .map(move |(i, &r)| (self.lowest + i as u32, r))
    }

    /// `∂_n: C_n -> C_(n-1)`; an empty or zero matrix outside the stored range.
    pub fn boundary(&self, n: u32) -> IntMatrix {
        let below = if n == 0 { 0 } else { self.rank(n - 1) };
        match n.checked_sub(self.lowest) {
            Some(i) if (i as usize) < self.ranks.len() && i > 0 => {
                self.boundaries[i as usize].clone()
            }
            _ => IntMatrix::zeros(below, self.rank(n)),
        }
    }

    /// `H_n = ker ∂_n / im ∂_(n+1)`.
    ///
    /// Over the integers the kernel of `∂_n` is a direct summand of `C_n` of
    /// rank `c_n - rank ∂_n`, and the image of `∂_(n+1)` sits inside it with
    /// elementary divisors given by the Smith form of `∂_(n+1)`. So the free
    /// rank is `c_n - rank ∂_n - rank ∂_(n+1)` and the torsion is the Smith
    /// invariants of `∂_(n+1)` that exceed 1.
    pub fn homology(&self, n: u32) -> FgAbGroup {
        let c = self.rank(n);
        if c == 0 {
            return FgAbGroup::trivial();
        }
        let out = smith_normal_form(&self.boundary(n)).rank();
        let incoming = smith_normal_form(&self.boundary(n + 1));
        let free = c - out - incoming.rank();
        FgAbGroup::from_parts(free, incoming.invariants).expect("invariants are positive")
    }

    /// Direct sum, degree by degree (the chains of a wedge).
    pub fn direct_sum(&self, other: &ChainComplex) -> ChainComplex {
        let (lo, hi) = match (self.support(), other.support()) {
            (None, None) => return ChainComplex::zero(),
            (Some(s), None) => s,
            (None, Some(s)) => s,
            (Some(a), Some(b)) => (a.0.min(b.0), a.1.max(b.1)),
        };
        let mut ranks = Vec::new();
        let mut boundaries = Vec::new();
        for n in lo..=hi {
            let (ra, rb) = (self.rank(n), other.rank(n));
            ranks.push(ra + rb);
            let (ba, bb) = if n == lo {
                (IntMatrix::zeros(0, ra), IntMatrix::zeros(0, rb))
            } else {
                (self.boundary(n), other.boundary(n))
            };
            let mut m = IntMatrix::zeros(ba.rows() + bb.rows(), ra + rb);
            for i in 0..ba.rows() {
                for j in 0..ra {
                    m[(i, j)] = ba[(i, j)].clone();
                }
            }
            for i in 0..bb.rows() {
                for j in 0..rb {
                    m[(ba.rows() + i, ra + j)] = bb[(i, j)].clone();
                }
            }
            boundaries.push(m);
        }
        ChainComplex {
            lowest: lo,
            ranks,
            boundaries,
        }
    }
}

/// Cellular chains of `M(G, n)`: free summands first, then torsion summands
/// in invariant-factor order, each torsion cell attached only to its own
/// `n`-cell.
pub fn moore_complex(g: &FgAbGroup, n: u32) -> Result<ChainComplex> {
    Error::degree(n, 2)?;
    let gens = g.generator_count();
    let torsion = g.torsion();
    let mut attach = IntMatrix::zeros(gens, torsion.len());
    for (j, d) in torsion.iter().enumerate() {
        attach[(g.free_rank() + j, j)] = d.clone();
    }
    ChainComplex::new(
        n,
        vec![gens, torsion.len()],
        vec![IntMatrix::zeros(0, gens), attach],
    )
}

pub fn tensor_complex(c: &ChainComplex, d: &ChainComplex) -> ChainComplex {
    tensor_complex_with(c, d, SignConvention::default())
}

pub fn tensor_complex_with(
    c: &ChainComplex,
    d: &ChainComplex,
    convention: SignConvention,
) -> ChainComplex {
    let (Some((clo, chi)), Some((dlo, dhi))) = (c.support(), d.support()) else {
        return ChainComplex::zero();
    };
    let (lo, hi) = (clo + dlo, chi + dhi);

    // Offset of the block C_i ⊗ D_(n-i) inside (C ⊗ D)_n, for each n.
    let blocks = |n: u32| -> Vec<(u32, usize)> {
        let mut off = 0;
        let mut out = Vec::new();
        for i in clo..=chi {
            if n < i {
                break;
            }
            let j = n - i;
            out.push((i, off));
            off += c.rank(i) * d.rank(j);
        }
        out
    };
    let total = |n: u32| -> usize { (clo..=chi.min(n)).map(|i| c.rank(i) * d.rank(n - i)).sum() };

    let mut ranks = Vec::new();
    let mut boundaries = Vec::new();
    for n in lo..=hi {
        let rank_n = total(n);
        ranks.push(rank_n);
        if n == lo {
            boundaries.push(IntMatrix::zeros(0, rank_n));
            continue;
        }
        let src = blocks(n);
        let dst = blocks(n - 1);
        let offset_below = |i: u32| dst.iter().find(|(k, _)| *k == i).map(|&(_, o)| o);
        let mut m = IntMatrix::zeros(total(n - 1), rank_n);
        for &(i, off) in &src {
            let j = n - i;
            let (ri, rj) = (c.rank(i), d.rank(j));
            if ri * rj == 0 {
                continue;
            }
            let (sign_first, sign_second) = match convention {
                SignConvention::FirstFactorDegree => (1i64, if i % 2 == 0 { 1 } else { -1 }),
                SignConvention::SecondFactorDegree => (if j % 2 == 0 { 1 } else { -1 }, 1i64),
            };
            // ∂a ⊗ b lands in block C_(i-1) ⊗ D_j.
            if i > 0 {
                if let Some(below) = offset_below(i - 1) {
                    let dc = c.boundary(i);
                    let r_below = c.rank(i - 1);
                    for a in 0..ri {
                        for b in 0..rj {
                            for a2 in 0..r_below {
                                let v = &dc[(a2, a)];
                                if !v.is_zero() {
                                    m[(below + a2 * rj + b, off + a * rj + b)] +=
                                        v * BigInt::from(sign_first);
                                }
                            }
                        }
                    }
                }
            }
            // a ⊗ ∂b lands in block C_i ⊗ D_(j-1).
            if j > 0 {
                if let Some(below) = offset_below(i) {
                    let dd = d.boundary(j);
                    let r_below = d.rank(j - 1);
                    for a in 0..ri {
                        for b in 0..rj {
                            for b2 in 0..r_below {
                                let v = &dd[(b2, b)];
                                if !v.is_zero() {
                                    m[(below + a * r_below + b2, off + a * rj + b)] +=
                                        v * BigInt::from(sign_second);
                                }
                            }
                        }
                    }
                }
            }
        }
        boundaries.push(m);
    }
    ChainComplex {
        lowest: lo,
        ranks,
        boundaries,
    }
}

/// One row of a [`KunnethReport`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeCheck {
    pub degree: u32,
    pub expected: FgAbGroup,
    pub computed: FgAbGroup,
    pub matches: bool,
}

/// Homology of `M(g1, q1) ∧ M(g2, q2)` computed from chains, against the
/// Künneth prediction `g1 ⊗ g2` in degree `q1 + q2`, `Tor(g1, g2)` in degree
/// `q1 + q2 + 1` and zero elsewhere.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KunnethReport {
    pub g1: FgAbGroup,
    pub q1: u32,
    pub g2: FgAbGroup,
    pub q2: u32,
    pub boundary_squares_to_zero: bool,
    pub degrees: Vec<DegreeCheck>,
    pub pass: bool,
}

pub fn kunneth_check(g1: &FgAbGroup, q1: u32, g2: &FgAbGroup, q2: u32) -> Result<KunnethReport> {
    let c = tensor_complex(&moore_complex(g1, q1)?, &moore_complex(g2, q2)?);
    let q = q1 + q2;
    let degrees: Vec<DegreeCheck> = (q - 1..=q + 3)
        .map(|n| {
            let expected = if n == q {
                tensor(g1, g2)
            } else if n == q + 1 {
                tor(g1, g2)
            } else {
                FgAbGroup::trivial()
            };
            let computed = c.homology(n);
            DegreeCheck {
                degree: n,
                matches: expected == computed,
                expected,
                computed,
            }
        })
        .collect();
    let boundary_squares_to_zero = c.is_valid();
    let pass = boundary_squares_to_zero && degrees.iter().all(|d| d.matches);
    Ok(KunnethReport {
        g1: g1.clone(),
        q1,
        g2: g2.clone(),
        q2,
        boundary_squares_to_zero,
        degrees,
        pass,
    })
}
