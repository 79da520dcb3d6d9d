//! Brute-force Hom, Ext, tensor and Tor for finite abelian groups.
//!
//! These routines share nothing with [`crate::functors`] beyond the group
//! type. Hom and Tor enumerate elements; Ext and tensor build explicit
//! presentations from a free resolution and reduce them with Smith normal
//! form. They exist to cross-check the closed forms.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::abgroup::{cokernel, FgAbGroup, IntMatrix};
use crate::error::{Error, Result};

/// Limits for the enumerating oracles.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    /// Maximum number of candidate generator images (or presentation
    /// entries) an oracle may examine.
    pub max_candidates: u64,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_candidates: 10_000,
        }
    }
}

impl OracleConfig {
    fn check(&self, needed: u128) -> Result<()> {
        if needed > self.max_candidates as u128 {
            Err(Error::BoundExceeded {
                needed,
                bound: self.max_candidates,
            })
        } else {
            Ok(())
        }
    }
}

/// All elements of a finite group, as coordinate tuples modulo its invariant
/// factors.
#[derive(Clone, Debug)]
pub struct ElementTable {
    moduli: Vec<u64>,
    elements: Vec<Vec<u64>>,
}

impl ElementTable {
    pub fn new(group: &FgAbGroup, config: &OracleConfig) -> Result<Self> {
        if !group.is_finite() {
            return Err(Error::Value(format!("{group} is infinite")));
        }
        let moduli = small_moduli(group)?;
        let size: u128 = moduli.iter().map(|&d| d as u128).product();
        config.check(size)?;
        let mut elements = vec![Vec::with_capacity(moduli.len())];
        for &d in &moduli {
            elements = elements
                .into_iter()
                .flat_map(|e| {
                    (0..d).map(move |x| {
                        let mut e = e.clone();
                        e.push(x);
                        e
                    })
                })
                .collect();
        }
        Ok(ElementTable { moduli, elements })
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Vec<u64>] {
        &self.elements
    }

    pub fn add(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        x.iter()
            .zip(y)
            .zip(&self.moduli)
            .map(|((a, b), d)| (a + b) % d)
            .collect()
    }

    pub fn scale(&self, k: u64, x: &[u64]) -> Vec<u64> {
        x.iter()
            .zip(&self.moduli)
            .map(|(a, d)| ((*a as u128 * k as u128) % *d as u128) as u64)
            .collect()
    }

    pub fn is_zero(&self, x: &[u64]) -> bool {
        x.iter().all(|&a| a == 0)
    }

    /// Order of an element: lcm over coordinates of `d / gcd(x, d)`.
    pub fn element_order(&self, x: &[u64]) -> u64 {
        x.iter()
            .zip(&self.moduli)
            .fold(1, |acc, (a, d)| acc.lcm(&(d / a.gcd(d))))
    }

    /// Elements killed by `k`.
    pub fn killed_by(&self, k: u64) -> Vec<&Vec<u64>> {
        self.elements
            .iter()
            .filter(|x| self.is_zero(&self.scale(k, x)))
            .collect()
    }
}

fn small_moduli(group: &FgAbGroup) -> Result<Vec<u64>> {
    group
        .torsion()
        .iter()
        .map(|d| {
            d.to_u64().ok_or(Error::BoundExceeded {
                needed: u128::MAX,
                bound: u64::MAX,
            })
        })
        .collect()
}

/// Isomorphism type of a finite abelian group from the orders of its
/// elements alone: for each prime `p`, the counts `|G[p^k]| = p^(s_k)` give
/// `s_k - s_(k-1)` = number of cyclic `p`-factors of order at least `p^k`.
fn type_from_orders(orders: &[u64]) -> FgAbGroup {
    let size = orders.len() as u64;
    let mut cyclics = Vec::new();
    for p in primes_dividing(size) {
        let mut prev_exp = 0u32;
        let mut parts_at_least = Vec::new();
        let mut pk = 1u64;
        loop {
            pk *= p;
            let count = orders.iter().filter(|&&o| pk % o == 0).count() as u64;
            let exp = exact_log(count, p);
            if exp == prev_exp {
                break;
            }
            parts_at_least.push(exp - prev_exp);
            prev_exp = exp;
        }
        // parts_at_least[k-1] = number of factors of order >= p^k.
        for (k, w) in parts_at_least.iter().enumerate() {
            let next = parts_at_least.get(k + 1).copied().unwrap_or(0);
            for _ in 0..(w - next) {
                cyclics.push(BigInt::from(p.pow(k as u32 + 1)));
            }
        }
    }
    FgAbGroup::from_parts(0, cyclics).expect("positive orders")
}

fn primes_dividing(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn exact_log(mut n: u64, p: u64) -> u32 {
    let mut e = 0;
    while n > 1 {
        debug_assert_eq!(n % p, 0, "subgroup order must be a power of p");
        n /= p;
        e += 1;
    }
    e
}

/// Iterates over the subgroups `H[d]` for each invariant factor `d` of `g`,
/// enumerating `H` once. Hom(⊕ Z/d, H) and Tor(⊕ Z/d, H) both decompose as
/// `⊕ H[d]`, one summand per cyclic factor.
fn torsion_slices(g: &FgAbGroup, h: &FgAbGroup, config: &OracleConfig) -> Result<Vec<FgAbGroup>> {
    let table = ElementTable::new(h, config)?;
    let gens = small_moduli(g)?;
    config.check(gens.len() as u128 * table.len() as u128)?;
    let mut by_order: BTreeMap<u64, FgAbGroup> = BTreeMap::new();
    let mut out = Vec::new();
    for d in gens {
        let slice = by_order.entry(d).or_insert_with(|| {
            let orders: Vec<u64> = table
                .killed_by(d)
                .into_iter()
                .map(|x| table.element_order(x))
                .collect();
            type_from_orders(&orders)
        });
        out.push(slice.clone());
    }
    Ok(out)
}

fn require_finite(g: &FgAbGroup) -> Result<()> {
    if g.is_finite() {
        Ok(())
    } else {
        Err(Error::Value(format!(
            "the oracle needs finite groups, got {g}"
        )))
    }
}

/// Number of homomorphisms `g -> h`: each generator of order `d` may go to
/// any element of `h` killed by `d`, independently.
pub fn oracle_hom_count(g: &FgAbGroup, h: &FgAbGroup, config: &OracleConfig) -> Result<BigInt> {
    require_finite(g)?;
    let table = ElementTable::new(h, config)?;
    let gens = small_moduli(g)?;
    config.check(gens.len() as u128 * table.len() as u128)?;
    Ok(gens
        .iter()
        .map(|&d| BigInt::from(table.killed_by(d).len()))
        .product())
}

/// `Hom(g, h)` as a group, assembled from the enumerated subgroups `h[d]`.
pub fn oracle_hom(g: &FgAbGroup, h: &FgAbGroup, config: &OracleConfig) -> Result<FgAbGroup> {
    require_finite(g)?;
    Ok(torsion_slices(g, h, config)?
        .iter()
        .fold(FgAbGroup::trivial(), |acc, s| acc.direct_sum(s)))
}

/// `Tor(g, h)` from the resolution `0 -> Z^t --diag(d)--> Z^t -> g -> 0`:
/// tensoring with `h` leaves the kernel of `h^t --diag(d)--> h^t`.
pub fn oracle_tor(g: &FgAbGroup, h: &FgAbGroup, config: &OracleConfig) -> Result<FgAbGroup> {
    require_finite(g)?;
    require_finite(h)?;
    oracle_hom(g, h, config)
}

/// `Ext(g, h)` as the cokernel of `Hom(Z^t, h) --diag(d)--> Hom(Z^t, h)`,
/// presented by generators `e_(i,j)` (copy `i` of generator `j` of `h`) with
/// relations `order_j · e_(i,j)` and `d_i · e_(i,j)`.
pub fn oracle_ext(g: &FgAbGroup, h: &FgAbGroup) -> Result<FgAbGroup> {
    require_finite(g)?;
    let d = g.torsion();
    let hgens = h.generator_count();
    let ngens = d.len() * hgens;
    let mut rows: Vec<Vec<BigInt>> = Vec::new();
    for (i, di) in d.iter().enumerate() {
        for j in 0..hgens {
            let col = i * hgens + j;
            let order = h.generator_order(j);
            if order != BigInt::from(0) {
                rows.push(unit_row(ngens, col, order));
            }
            rows.push(unit_row(ngens, col, di.clone()));
        }
    }
    Ok(cokernel(&relations(ngens, rows)))
}

/// `g ⊗ h` presented by generators `g_i ⊗ h_j` with relations
/// `d_i (g_i ⊗ h_j)` and `e_j (g_i ⊗ h_j)`.
pub fn oracle_tensor(g: &FgAbGroup, h: &FgAbGroup, config: &OracleConfig) -> Result<FgAbGroup> {
    require_finite(g)?;
    require_finite(h)?;
    let (d, e) = (g.torsion(), h.torsion());
    let ngens = d.len() * e.len();
    config.check(2 * ngens as u128 * ngens as u128)?;
    let mut rows = Vec::new();
    for (i, di) in d.iter().enumerate() {
        for (j, ej) in e.iter().enumerate() {
            let col = i * e.len() + j;
            rows.push(unit_row(ngens, col, di.clone()));
            rows.push(unit_row(ngens, col, ej.clone()));
        }
    }
    Ok(cokernel(&relations(ngens, rows)))
}

fn unit_row(n: usize, at: usize, value: BigInt) -> Vec<BigInt> {
    let mut row = vec![BigInt::from(0); n];
    row[at] = value;
    row
}

fn relations(cols: usize, rows: Vec<Vec<BigInt>>) -> IntMatrix {
    let nrows = rows.len();
    IntMatrix::from_entries(nrows, cols, rows.into_iter().flatten().collect())
        .expect("rows built with the right width")
}
