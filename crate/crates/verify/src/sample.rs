//! Random inputs shared by the suites.

use frame_rigidity::induced::Automorphism;
use frame_rigidity::{
    gaussian_matrix, random_unitary, Field, FrameTuple, IntPartition, Matrix, Permutation,
    SemilinearMap, Subspace, DEFAULT_TOL,
};
use num_complex::Complex64;
use rand::seq::{IndexedRandom, SliceRandom};
use rand::Rng;

/// Invertible map; over ℂ, odd trials get a conjugate-linear map.
pub fn semilinear(n: usize, field: Field, trial: u64, rng: &mut impl Rng) -> SemilinearMap {
    SemilinearMap::random(n, field, automorphism_for(field, trial), rng)
}

/// A nonzero multiple of a unitary; such maps keep orthogonal frames
/// orthogonal.
pub fn scaled_unitary(n: usize, field: Field, trial: u64, rng: &mut impl Rng) -> SemilinearMap {
    let scale = rng.random_range(0.25..4.0);
    let m = random_unitary(n, field, rng).scale_real(scale);
    SemilinearMap::new(m, automorphism_for(field, trial), DEFAULT_TOL).expect("unitary")
}

fn automorphism_for(field: Field, trial: u64) -> Automorphism {
    if field == Field::Complex && trial % 2 == 1 {
        Automorphism::Conjugation
    } else {
        Automorphism::Identity
    }
}

pub fn shape(n: usize, rng: &mut impl Rng) -> IntPartition {
    IntPartition::all(n).choose(rng).expect("n >= 1").clone()
}

/// Uniform permutation of the components of a frame with dimensions `dims`
/// among those that only exchange equal dimensions.
pub fn dimension_preserving(dims: &[usize], rng: &mut impl Rng) -> Permutation {
    let mut images: Vec<usize> = (0..dims.len()).collect();
    let mut start = 0;
    while start < dims.len() {
        let end = (start..dims.len())
            .find(|&i| dims[i] != dims[start])
            .unwrap_or(dims.len());
        images[start..end].shuffle(rng);
        start = end;
    }
    Permutation::new(images).expect("shuffled identity")
}

/// Orthogonal frame of the given shape whose components group the columns
/// of `q` in the order `order`.
pub fn grouped_frame(q: &Matrix, shape: &IntPartition, order: &[usize]) -> FrameTuple {
    let mut start = 0;
    let components = shape
        .parts()
        .iter()
        .map(|&d| {
            let idx = &order[start..start + d];
            start += d;
            Subspace::span(&q.select_columns(idx), DEFAULT_TOL).expect("unitary columns")
        })
        .collect();
    FrameTuple::new(components, true).expect("grouped frame")
}

/// Two orthogonal frames of random shapes built from one unitary, hence
/// commeasurable.
pub fn commeasurable_frames(
    n: usize,
    field: Field,
    rng: &mut impl Rng,
) -> (FrameTuple, FrameTuple) {
    let q = random_unitary(n, field, rng);
    let mut frames = Vec::with_capacity(2);
    for _ in 0..2 {
        let mut order: Vec<usize> = (0..n).collect();
        order.shuffle(rng);
        frames.push(grouped_frame(&q, &shape(n, rng), &order));
    }
    let b = frames.pop().expect("two frames");
    (frames.pop().expect("two frames"), b)
}

fn span_of(basis: &Matrix, idx: &[usize], field: Field) -> Subspace {
    if idx.is_empty() {
        return Subspace::zero(basis.rows(), field);
    }
    Subspace::span(&basis.select_columns(idx), DEFAULT_TOL).expect("unitary columns")
}

fn random_subset(n: usize, rng: &mut impl Rng) -> Vec<usize> {
    let k = rng.random_range(1..=n);
    let mut all: Vec<usize> = (0..n).collect();
    all.shuffle(rng);
    let mut s = all[..k].to_vec();
    s.sort_unstable();
    s
}

/// Two spans of column subsets of one random unitary; always commeasurable.
pub fn commeasurable_pair(n: usize, field: Field, rng: &mut impl Rng) -> (Subspace, Subspace) {
    let q = random_unitary(n, field, rng);
    let a = random_subset(n, rng);
    let b = random_subset(n, rng);
    (span_of(&q, &a, field), span_of(&q, &b, field))
}

/// A commeasurable pair in which one basis vector of the second space is
/// rotated by exactly `angle` toward another column of the same unitary.
pub fn rotated_pair(
    n: usize,
    field: Field,
    angle: f64,
    rng: &mut impl Rng,
) -> (Subspace, Subspace) {
    let q = random_unitary(n, field, rng);
    let a = random_subset(n, rng);
    let b = random_subset(n, rng);
    let j = *b.choose(rng).expect("nonempty");
    let k = loop {
        let k = rng.random_range(0..n);
        if k != j || n == 1 {
            break k;
        }
    };
    let mut cols: Vec<Vec<Complex64>> = b.iter().map(|&i| q.column(i)).collect();
    let slot = b.iter().position(|&i| i == j).expect("j in b");
    let (c, s) = (angle.cos(), angle.sin());
    cols[slot] = q
        .column(j)
        .iter()
        .zip(q.column(k))
        .map(|(x, y)| x * c + y * s)
        .collect();
    let b_space = Subspace::span(&Matrix::from_columns(n, field, &cols), DEFAULT_TOL / 1e3)
        .expect("rotated span");
    (span_of(&q, &a, field), b_space)
}

/// Independent Haar subspaces of random dimensions.
pub fn generic_pair(n: usize, field: Field, rng: &mut impl Rng) -> (Subspace, Subspace) {
    let da = rng.random_range(1..=n);
    let db = rng.random_range(1..=n);
    (
        Subspace::random(n, da, field, rng),
        Subspace::random(n, db, field, rng),
    )
}

/// `b ≤ a` for a random `a`.
pub fn nested_pair(n: usize, field: Field, rng: &mut impl Rng) -> (Subspace, Subspace) {
    let da = rng.random_range(1..=n);
    let a = Subspace::random(n, da, field, rng);
    let db = rng.random_range(1..=da);
    let coeff = loop {
        let g = gaussian_matrix(da, db, field, rng);
        if frame_rigidity::linalg::rank_with_tol(&g, 1e-6) == db {
            break g;
        }
    };
    let b = Subspace::span(&(a.basis() * &coeff), DEFAULT_TOL).expect("nested span");
    (a, b)
}

/// The gauge-fixed representative of a line: unit length, first coordinate
/// above `tol` in modulus made real and positive.
pub fn gauge_representative(line: &Subspace, tol: f64) -> Vec<Complex64> {
    let mut v = line.basis().column(0);
    let lead = v
        .iter()
        .find(|z| z.norm() > tol)
        .copied()
        .unwrap_or(Complex64::new(1.0, 0.0));
    let phase = lead.conj() / lead.norm();
    for z in &mut v {
        *z *= phase;
    }
    v
}

/// The line map `span(v) ↦ span(f(v))` with `f(v)_k = v_k + ε·v_k·|v_k|²`
/// on the gauge-fixed representative.
pub fn distort_line(line: &Subspace, epsilon: f64, tol: f64) -> Subspace {
    let v: Vec<Complex64> = gauge_representative(line, tol)
        .into_iter()
        .map(|z| z + z * (epsilon * z.norm_sqr()))
        .collect();
    Subspace::span_vectors(line.ambient(), line.field(), &[v], tol).expect("distorted line")
}
