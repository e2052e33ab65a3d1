//! Eversion intertwines `Θ_T` with `Θ_{T'}` for `T' = U·P⁻¹` taken from the
//! polar decomposition `M = U·P`.

use frame_rigidity::linalg::{polar_decompose, Matrix};
use frame_rigidity::{Field, FrameTuple, SemilinearMap};

use super::iterative_threshold;
use crate::harness::{Outcome, Runner};
use crate::sample;

pub const PROPERTIES: &[&str] = &[
    "eversion_intertwines_conjugate",
    "conjugate_is_inverse_adjoint",
    "conjugate_round_trip",
    "polar_factors",
];

/// Frames checked against each sampled map.
pub const FRAMES_PER_MAP: usize = 10;

fn relative(a: &Matrix, b: &Matrix) -> f64 {
    (a - b).norm_fro() / b.norm_fro()
}

/// Cholesky succeeds on a Hermitian matrix exactly when it is positive
/// definite.
fn positive_definite(p: &Matrix) -> bool {
    let n = p.rows();
    let mut l = Matrix::zeros(n, n, Field::Complex);
    for j in 0..n {
        let mut d = p[(j, j)].re;
        for k in 0..j {
            d -= l[(j, k)].norm_sqr();
        }
        if d <= 0.0 {
            return false;
        }
        let d = d.sqrt();
        l[(j, j)] = d.into();
        for i in j + 1..n {
            let mut s = p[(i, j)];
            for k in 0..j {
                s -= l[(i, k)] * l[(j, k)].conj();
            }
            l[(i, j)] = s / d;
        }
    }
    true
}

pub fn run(r: &mut Runner<'_>) {
    let cfg = r.cfg().clone();
    let (n, field, trials, tol) = (cfg.ambient, cfg.field, cfg.trials, cfg.tol);
    let threshold = Some(iterative_threshold(&cfg));

    r.property("eversion_intertwines_conjugate", threshold, trials, |t| {
        let map = sample::semilinear(n, field, t.index, &mut t.rng);
        let conjugate = map.evert_conjugate(tol)?;
        let mut worst: f64 = 0.0;
        for _ in 0..FRAMES_PER_MAP {
            let shape = sample::shape(n, &mut t.rng);
            let frame = FrameTuple::random(n, &shape, false, field, &mut t.rng);
            let lhs = conjugate.induced_on_frame(&frame.evert()?)?;
            let rhs = map.induced_on_frame(&frame)?.evert()?;
            worst = worst.max(lhs.distance(&rhs)?);
        }
        Ok(Outcome::Residual(worst))
    });
    r.property("conjugate_is_inverse_adjoint", threshold, trials, |t| {
        let map = sample::semilinear(n, field, t.index, &mut t.rng);
        let conjugate = map.evert_conjugate(tol)?;
        let expected = map.matrix().inverse()?.adjoint();
        let same_kind = conjugate.automorphism() == map.automorphism();
        let residual = relative(conjugate.matrix(), &expected);
        Ok(Outcome::Residual(if same_kind {
            residual
        } else {
            f64::INFINITY
        }))
    });
    r.property("conjugate_round_trip", threshold, trials, |t| {
        let map = sample::semilinear(n, field, t.index, &mut t.rng);
        let back: SemilinearMap = map.evert_conjugate(tol)?.evert_conjugate(tol)?;
        let same_kind = back.automorphism() == map.automorphism();
        let residual = relative(back.matrix(), map.matrix());
        Ok(Outcome::Residual(if same_kind {
            residual
        } else {
            f64::INFINITY
        }))
    });
    r.property("polar_factors", threshold, trials, |t| {
        let map = sample::semilinear(n, field, t.index, &mut t.rng);
        let m = map.matrix();
        let polar = polar_decompose(m, tol)?;
        let (u, p) = (&polar.unitary, &polar.positive);
        let gram = m.adjoint_mul(m);
        let residual = [
            (&u.adjoint_mul(u) - &Matrix::identity(n, field)).norm_fro(),
            relative(&(u * p), m),
            (p - &p.adjoint()).norm_fro() / p.norm_fro(),
            relative(&(p * p), &gram),
        ]
        .into_iter()
        .fold(0.0, f64::max);
        let positive = positive_definite(&p.to_complex());
        Ok(Outcome::Residual(if positive {
            residual
        } else {
            f64::INFINITY
        }))
    });
}
