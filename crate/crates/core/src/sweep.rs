//! Deterministic families of groups and Moore-space pairs used by the
//! property sweeps, the benchmarks and `verify all`.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::abgroup::FgAbGroup;

/// Every finite group with at most `max_factors` invariant factors, each at
/// most `max_factor`, including the trivial group.
pub fn finite_groups(max_factors: usize, max_factor: u64) -> Vec<FgAbGroup> {
    let mut out = vec![FgAbGroup::trivial()];
    let mut chains: Vec<Vec<u64>> = vec![Vec::new()];
    for _ in 0..max_factors {
        let mut next = Vec::new();
        for chain in &chains {
            let start = chain.last().copied().unwrap_or(1);
            let mut d = start.max(2);
            while d <= max_factor {
                if d % start == 0 {
                    let mut c = chain.clone();
                    c.push(d);
                    next.push(c);
                }
                d += 1;
            }
        }
        out.extend(next.iter().map(|c| {
            FgAbGroup::from_parts(0, c.iter().map(|&d| BigInt::from(d)))
                .expect("orders are at least 2")
        }));
        chains = next;
    }
    out
}

/// A group with at most `max_summands` cyclic summands, each `Z` (one time in
/// four) or `Z/k` with `2 <= k <= max_factor`.
pub fn random_group<R: Rng>(rng: &mut R, max_summands: usize, max_factor: u64) -> FgAbGroup {
    let n = rng.gen_range(0..=max_summands);
    FgAbGroup::from_cyclic_orders((0..n).map(|_| {
        if rng.gen_ratio(1, 4) {
            BigInt::from(0)
        } else {
            BigInt::from(rng.gen_range(2..=max_factor))
        }
    }))
}

/// One side of a random Moore-space pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MooreSample {
    pub group: FgAbGroup,
    pub degree: u32,
}

/// `count` pairs of Moore spaces with up to three summands, factors at most
/// 12 and degrees 2 to 6.
pub fn random_moore_pairs(count: usize, seed: u64) -> Vec<(MooreSample, MooreSample)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sample = |rng: &mut ChaCha8Rng| MooreSample {
        group: random_group(rng, 3, 12),
        degree: rng.gen_range(2..=6),
    };
    (0..count)
        .map(|_| (sample(&mut rng), sample(&mut rng)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finite_family() {
        let g = finite_groups(3, 12);
        assert_eq!(g.len(), 74);
        let mut sorted = g.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), g.len());
        assert!(g.iter().all(|x| x.torsion().len() <= 3 && x.is_finite()));
        assert_eq!(finite_groups(1, 12).len(), 12);
    }

    #[test]
    fn random_pairs_are_reproducible() {
        let a = random_moore_pairs(50, 7);
        assert_eq!(a, random_moore_pairs(50, 7));
        assert!(a
            .iter()
            .all(|(x, y)| (2..=6).contains(&x.degree) && (2..=6).contains(&y.degree)));
        assert!(a.iter().any(|(x, _)| x.group.free_rank() > 0));
    }
}
