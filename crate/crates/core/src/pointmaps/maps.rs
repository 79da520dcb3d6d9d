use num_traits::One;

use super::points::{
    coord, Coord, DoubleSuspensionPoint, JoinPoint, ProductPoint, SmashPoint, SmashSuspensionPoint,
    SuspendedJoinPoint, SuspensionPoint,
};

/// Which half of a two-branch formula to use; the halves overlap at `t = 1/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    Lower,
    Upper,
}

impl Branch {
    /// The branch whose domain contains `t` (`Lower` at `t = 1/2`).
    pub fn for_t(t: &Coord) -> Branch {
        if *t <= coord(1, 2) {
            Branch::Lower
        } else {
            Branch::Upper
        }
    }
}

fn one() -> Coord {
    Coord::one()
}

fn two() -> Coord {
    coord(2, 1)
}

/// `Λ: C(A ∗ B) -> ΣA × ΣB` on one branch:
/// lower `((a, u), (b, 1 - 2t(1 - u)))`, upper `((a, 1 - 2(1 - t)(1 - u)), (b, u))`.
pub fn lambda_branch(x: &SuspendedJoinPoint, branch: Branch) -> ProductPoint {
    let JoinPoint { a, b, t } = &x.p;
    let u = &x.u;
    match branch {
        Branch::Lower => ProductPoint::new(
            SuspensionPoint::new(a.clone(), u.clone()),
            SuspensionPoint::new(b.clone(), one() - two() * t * (one() - u)),
        ),
        Branch::Upper => ProductPoint::new(
            SuspensionPoint::new(a.clone(), one() - two() * (one() - t) * (one() - u)),
            SuspensionPoint::new(b.clone(), u.clone()),
        ),
    }
}

/// `Λ`, with the branch chosen by `t`.
pub fn eval_lambda(x: &SuspendedJoinPoint) -> ProductPoint {
    lambda_branch(x, Branch::for_t(&x.p.t))
}

/// `λ̄: Σ(A ∗ B) -> ΣA ∧ ΣB`, induced by `Λ`.
pub fn lambda_bar(x: &SuspendedJoinPoint) -> SmashPoint {
    eval_lambda(x).smash()
}

/// `Φ_s` on one branch:
/// lower `((a, (1 - s)u + st), (b, (1 - s)(1 - 2t(1 - u)) + su))`,
/// upper `((a, (1 - s)(1 - 2(1 - t)(1 - u)) + st), (b, u))`.
pub fn phi_branch(x: &SuspendedJoinPoint, s: &Coord, branch: Branch) -> SmashPoint {
    let JoinPoint { a, b, t } = &x.p;
    let u = &x.u;
    let r = one() - s;
    let p = match branch {
        Branch::Lower => ProductPoint::new(
            SuspensionPoint::new(a.clone(), &r * u + s * t),
            SuspensionPoint::new(b.clone(), &r * (one() - two() * t * (one() - u)) + s * u),
        ),
        Branch::Upper => ProductPoint::new(
            SuspensionPoint::new(
                a.clone(),
                &r * (one() - two() * (one() - t) * (one() - u)) + s * t,
            ),
            SuspensionPoint::new(b.clone(), u.clone()),
        ),
    };
    p.smash()
}

/// The linear homotopy `Φ_s: Σ(A ∗ B) -> ΣA ∧ ΣB` from `λ̄` to `σ(Σμ′)`.
pub fn eval_phi(x: &SuspendedJoinPoint, s: &Coord) -> SmashPoint {
    phi_branch(x, s, Branch::for_t(&x.p.t))
}

/// `σ((a, b), t, u) = ((a, t), (b, u))`.
pub fn eval_sigma(d: &DoubleSuspensionPoint) -> SmashPoint {
    ProductPoint::new(
        SuspensionPoint::new(d.a.clone(), d.t.clone()),
        SuspensionPoint::new(d.b.clone(), d.u.clone()),
    )
    .smash()
}

pub fn sigma_inverse(p: &SmashPoint) -> DoubleSuspensionPoint {
    let q = &p.0;
    DoubleSuspensionPoint::new(
        q.first.x.clone(),
        q.second.x.clone(),
        q.first.u.clone(),
        q.second.u.clone(),
    )
}

/// `μ′: A ∗ B -> Σ(A ∧ B)`, collapsing `(A × * × I) ∪ (* × B × I)`.
pub fn eval_mu_prime(p: &JoinPoint) -> SmashSuspensionPoint {
    SmashSuspensionPoint {
        a: p.a.clone(),
        b: p.b.clone(),
        t: p.t.clone(),
    }
}

/// `Σμ′: Σ(A ∗ B) -> Σ²(A ∧ B)`.
pub fn suspend_mu_prime(x: &SuspendedJoinPoint) -> DoubleSuspensionPoint {
    let m = eval_mu_prime(&x.p);
    DoubleSuspensionPoint::new(m.a, m.b, m.t, x.u.clone())
}

/// `σ ∘ Σμ′`.
pub fn sigma_mu_prime(x: &SuspendedJoinPoint) -> SmashPoint {
    eval_sigma(&suspend_mu_prime(x))
}
