use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::maps::{
    eval_lambda, eval_phi, eval_sigma, lambda_bar, lambda_branch, phi_branch, sigma_inverse,
    sigma_mu_prime, Branch,
};
use super::points::{coord, AbstractPoint, Coord, DoubleSuspensionPoint, SuspendedJoinPoint};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridConfig {
    pub max_denominator: i64,
    pub random_samples: usize,
    pub seed: u64,
}

impl Default for GridConfig {
    fn default() -> Self {
        GridConfig {
            max_denominator: 8,
            random_samples: 100,
            seed: 0x5eed,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityCheck {
    pub name: String,
    pub cases: usize,
    pub failures: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<String>,
    pub pass: bool,
}

/// All fractions in `[0, 1]` with denominator at most `max_denominator`.
pub fn grid_values(max_denominator: i64) -> Vec<Coord> {
    let mut v: Vec<Coord> = (1..=max_denominator)
        .flat_map(|d| (0..=d).map(move |n| coord(n, d)))
        .collect();
    v.sort();
    v.dedup();
    v
}

/// Sample triples `(s, t, u)`: the full grid plus random rationals.
fn samples(config: &GridConfig) -> Vec<[Coord; 3]> {
    let grid = grid_values(config.max_denominator);
    let mut out = Vec::with_capacity(grid.len().pow(3) + config.random_samples);
    for s in &grid {
        for t in &grid {
            for u in &grid {
                out.push([s.clone(), t.clone(), u.clone()]);
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut random = || {
        let d: i64 = rng.gen_range(1..=10_000);
        coord(rng.gen_range(0..=d), d)
    };
    for _ in 0..config.random_samples {
        out.push([random(), random(), random()]);
    }
    out
}

fn a(n: u64) -> AbstractPoint {
    AbstractPoint::new(n)
}

fn base() -> AbstractPoint {
    AbstractPoint::base()
}

fn x(p: AbstractPoint, q: AbstractPoint, t: &Coord, u: &Coord) -> SuspendedJoinPoint {
    SuspendedJoinPoint::new(p, q, t.clone(), u.clone())
}

/// Pairs of representatives identified in the join: `t = 0` forgets `b`,
/// `t = 1` forgets `a`, and `(*, *, t)` is a single point.
fn join_identifications(t: &Coord, u: &Coord) -> Vec<(SuspendedJoinPoint, SuspendedJoinPoint)> {
    let zero = Coord::zero();
    let one = Coord::one();
    let half = coord(1, 2);
    vec![
        (x(a(1), a(2), &zero, u), x(a(1), a(3), &zero, u)),
        (x(a(1), a(2), &zero, u), x(a(1), base(), &zero, u)),
        (x(a(1), a(2), &one, u), x(a(4), a(2), &one, u)),
        (x(a(1), a(2), &one, u), x(base(), a(2), &one, u)),
        (x(base(), base(), t, u), x(base(), base(), &half, u)),
    ]
}

/// Pairs identified in `Σ(A ∗ B)`: the join identifications plus the collapse
/// of `u ∈ {0, 1}` and of the join basepoint onto the basepoint.
fn suspension_identifications(
    t: &Coord,
    u: &Coord,
) -> Vec<(SuspendedJoinPoint, SuspendedJoinPoint)> {
    let basepoint = x(base(), base(), &coord(1, 2), &coord(1, 2));
    let mut pairs = join_identifications(t, u);
    pairs.push((x(a(1), a(2), t, &Coord::zero()), basepoint.clone()));
    pairs.push((x(a(1), a(2), t, &Coord::one()), basepoint.clone()));
    pairs.push((x(base(), base(), t, u), basepoint));
    pairs
}

/// Pairs identified in the cone `C(A ∗ B)`: the join identifications plus
/// the cone point `u = 1`.
fn cone_identifications(t: &Coord, u: &Coord) -> Vec<(SuspendedJoinPoint, SuspendedJoinPoint)> {
    let mut pairs = join_identifications(t, u);
    pairs.push((
        x(a(1), a(2), t, &Coord::one()),
        x(base(), base(), &Coord::zero(), &Coord::one()),
    ));
    pairs
}

struct Tally {
    name: String,
    cases: usize,
    failures: usize,
    first_failure: Option<String>,
}

impl Tally {
    fn new(name: &str) -> Self {
        Tally {
            name: name.into(),
            cases: 0,
            failures: 0,
            first_failure: None,
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(describe());
            }
        }
    }

    fn finish(self) -> IdentityCheck {
        IdentityCheck {
            pass: self.failures == 0,
            name: self.name,
            cases: self.cases,
            failures: self.failures,
            first_failure: self.first_failure,
        }
    }
}

fn is_endpoint(c: &Coord) -> bool {
    c.is_zero() || c.is_one()
}

/// Evaluates every pointwise identity over the sample set.
pub fn check_identities(config: &GridConfig) -> Vec<IdentityCheck> {
    let samples = samples(config);
    let half = coord(1, 2);
    // Distinct (t, u) pairs, for identities that do not involve s.
    let mut tu: Vec<(Coord, Coord)> = samples
        .iter()
        .map(|[_, t, u]| (t.clone(), u.clone()))
        .collect();
    tu.sort();
    tu.dedup();

    let mut lambda_branches = Tally::new("Λ branches agree at t = 1/2");
    let mut phi_branches = Tally::new("Φ_s branches agree at t = 1/2");
    let mut lambda_quotient = Tally::new("Λ respects the identifications of C(A ∗ B)");
    let mut lambda_bar_quotient = Tally::new("λ̄ respects the identifications of Σ(A ∗ B)");
    let mut phi_quotient = Tally::new("Φ_s respects the identifications of Σ(A ∗ B)");
    let mut phi_zero = Tally::new("Φ_0 = λ̄");
    let mut phi_one = Tally::new("Φ_1 = σ ∘ Σμ′");
    let mut sigma_round_trip = Tally::new("σ⁻¹ ∘ σ = id on interior points");

    let zero = Coord::zero();
    let one = Coord::one();
    for (t, u) in &tu {
        let at_half = x(a(1), a(2), &half, u);
        let (lo, hi) = (
            lambda_branch(&at_half, Branch::Lower),
            lambda_branch(&at_half, Branch::Upper),
        );
        lambda_branches.record(lo == hi, || format!("u = {u}: {lo} vs {hi}"));

        for (p, q) in cone_identifications(t, u) {
            let (fp, fq) = (eval_lambda(&p), eval_lambda(&q));
            lambda_quotient.record(fp == fq, || format!("Λ{p} = {fp} but Λ{q} = {fq}"));
        }
        for (p, q) in suspension_identifications(t, u) {
            let (fp, fq) = (lambda_bar(&p), lambda_bar(&q));
            lambda_bar_quotient.record(fp == fq, || format!("λ̄{p} = {fp} but λ̄{q} = {fq}"));
        }
        for (p, q) in [(a(1), a(2)), (base(), a(2)), (a(1), base())] {
            let pt = x(p, q, t, u);
            let (l, r) = (eval_phi(&pt, &zero), lambda_bar(&pt));
            phi_zero.record(l == r, || format!("at {pt}: Φ_0 = {l}, λ̄ = {r}"));
            let (l, r) = (eval_phi(&pt, &one), sigma_mu_prime(&pt));
            phi_one.record(l == r, || format!("at {pt}: Φ_1 = {l}, σΣμ′ = {r}"));
        }
        if !is_endpoint(t) && !is_endpoint(u) {
            let d = DoubleSuspensionPoint::new(a(1), a(2), t.clone(), u.clone());
            let back = sigma_inverse(&eval_sigma(&d));
            sigma_round_trip.record(back == d, || format!("{d} -> {back}"));
        }
    }
    for [s, t, u] in &samples {
        let at_half = x(a(1), a(2), &half, u);
        let (lo, hi) = (
            phi_branch(&at_half, s, Branch::Lower),
            phi_branch(&at_half, s, Branch::Upper),
        );
        phi_branches.record(lo.0 == hi.0, || format!("s = {s}, u = {u}: {lo} vs {hi}"));
        for (p, q) in suspension_identifications(t, u) {
            let (fp, fq) = (eval_phi(&p, s), eval_phi(&q, s));
            phi_quotient.record(fp == fq, || {
                format!("s = {s}: Φ_s{p} = {fp} but Φ_s{q} = {fq}")
            });
        }
    }

    [
        lambda_branches,
        phi_branches,
        lambda_quotient,
        lambda_bar_quotient,
        phi_quotient,
        phi_zero,
        phi_one,
        sigma_round_trip,
    ]
    .into_iter()
    .map(Tally::finish)
    .collect()
}
