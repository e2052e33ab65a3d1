//! Integer partitions, tableaux and refinement arrows.

use frame_rigidity::{
    compose_refinements, reverse_refines, IntPartition, RefinementArrow, Tableau,
};
use rand::seq::IndexedRandom;
use rand::Rng;

use crate::harness::{Outcome, Runner};

pub const PROPERTIES: &[&str] = &[
    "partition_counts",
    "conjugate_involution",
    "jump_sequence_sum",
    "symmetry_factor_sum",
    "refinement_implies_dominance",
    "composition_unital",
    "composition_associative",
];

/// Integer partitions are enumerated exhaustively up to this size.
pub const INTEGER_LIMIT: usize = 12;
/// Tableau pairs are enumerated exhaustively up to this size.
pub const PAIR_LIMIT: usize = 6;
/// Tableau chains of length three are enumerated exhaustively up to this size.
pub const CHAIN_LIMIT: usize = 5;

/// Euler's pentagonal-number recurrence.
fn partition_numbers(limit: usize) -> Vec<u64> {
    let mut p = vec![0i64; limit + 1];
    p[0] = 1;
    for m in 1..=limit as i64 {
        let mut total = 0;
        for k in 1.. {
            let sign = if k % 2 == 1 { 1 } else { -1 };
            let mut hit = false;
            for g in [k * (3 * k - 1) / 2, k * (3 * k + 1) / 2] {
                if g <= m {
                    total += sign * p[(m - g) as usize];
                    hit = true;
                }
            }
            if !hit {
                break;
            }
        }
        p[m as usize] = total;
    }
    p.into_iter().map(|x| x as u64).collect()
}

/// Bell triangle.
fn bell_numbers(limit: usize) -> Vec<u64> {
    let mut bells = vec![1u64];
    let mut row = vec![1u64];
    for _ in 0..limit {
        let mut next = vec![*row.last().expect("nonempty")];
        for &x in &row {
            next.push(next.last().expect("nonempty") + x);
        }
        bells.push(next[0]);
        row = next;
    }
    bells
}

fn coarsenings(fine: &Tableau, all: &[Tableau]) -> Vec<RefinementArrow> {
    all.iter()
        .filter_map(|c| reverse_refines(fine, c))
        .collect()
}

fn random_chain(all: &[Tableau], len: usize, rng: &mut impl Rng) -> Vec<RefinementArrow> {
    let mut current = all.choose(rng).expect("nonempty").clone();
    let mut chain = Vec::with_capacity(len);
    for _ in 0..len {
        let f = coarsenings(&current, all)
            .choose(rng)
            .expect("whole set")
            .clone();
        current = f.coarse().clone();
        chain.push(f);
    }
    chain
}

pub fn run(r: &mut Runner<'_>) {
    let cfg = r.cfg().clone();
    let (n, trials) = (cfg.ambient, cfg.trials);
    let integer: Vec<IntPartition> = (1..=INTEGER_LIMIT).flat_map(IntPartition::all).collect();
    let count = integer.len() as u64;

    r.property("partition_counts", None, 1, |_| {
        let p = partition_numbers(INTEGER_LIMIT);
        let b = bell_numbers(n);
        let ints = (1..=INTEGER_LIMIT).all(|m| IntPartition::all(m).len() as u64 == p[m]);
        let sets = (1..=n).all(|m| Tableau::all(m).len() as u64 == b[m]);
        Ok(Outcome::Holds(ints && sets))
    });
    r.property("conjugate_involution", None, count, |t| {
        let mu = &integer[t.index as usize];
        let conj = mu.conjugate();
        Ok(Outcome::Holds(
            conj.n() == mu.n() && conj.conjugate() == *mu,
        ))
    });
    r.property("jump_sequence_sum", None, count, |t| {
        let mu = &integer[t.index as usize];
        Ok(Outcome::Holds(
            mu.jmp_sequence().iter().sum::<usize>() == mu.part(0),
        ))
    });
    r.property("symmetry_factor_sum", None, count, |t| {
        let mu = &integer[t.index as usize];
        Ok(Outcome::Holds(
            mu.symmetry_factors().iter().sum::<usize>() == mu.len(),
        ))
    });

    let small = n.min(PAIR_LIMIT);
    let exhaustive_pairs: Vec<(Tableau, Tableau)> = (1..=small)
        .flat_map(|m| {
            let all = Tableau::all(m);
            all.iter()
                .flat_map(|a| all.iter().map(move |b| (a.clone(), b.clone())))
                .collect::<Vec<_>>()
        })
        .collect();
    let all_n = Tableau::all(n);
    let sampled = n > PAIR_LIMIT;
    let pair_count = exhaustive_pairs.len() as u64 + if sampled { trials } else { 0 };
    r.property("refinement_implies_dominance", None, pair_count, |t| {
        let i = t.index as usize;
        let (fine, coarse) = if i < exhaustive_pairs.len() {
            exhaustive_pairs[i].clone()
        } else {
            let f = random_chain(&all_n, 1, &mut t.rng).remove(0);
            (f.fine().clone(), f.coarse().clone())
        };
        match reverse_refines(&fine, &coarse) {
            Some(_) => Ok(Outcome::Holds(fine.shape().dominance_leq(&coarse.shape())?)),
            None => Ok(Outcome::Holds(true)),
        }
    });

    let chain_n = n.min(CHAIN_LIMIT);
    let all_chain = Tableau::all(chain_n);
    let pairs: Vec<RefinementArrow> = all_chain
        .iter()
        .flat_map(|f| coarsenings(f, &all_chain))
        .collect();
    r.property("composition_unital", None, pairs.len() as u64, |t| {
        let f = &pairs[t.index as usize];
        let left = compose_refinements(&RefinementArrow::identity(f.fine()), f)?;
        let right = compose_refinements(f, &RefinementArrow::identity(f.coarse()))?;
        Ok(Outcome::Holds(left == *f && right == *f))
    });
    let mut triples: Vec<[RefinementArrow; 3]> = Vec::new();
    for f in &pairs {
        for g in coarsenings(f.coarse(), &all_chain) {
            for h in coarsenings(g.coarse(), &all_chain) {
                triples.push([f.clone(), g.clone(), h]);
            }
        }
    }
    let sampled = n > CHAIN_LIMIT;
    let triple_count = triples.len() as u64 + if sampled { trials } else { 0 };
    r.property("composition_associative", None, triple_count, |t| {
        let i = t.index as usize;
        let [f, g, h] = if i < triples.len() {
            triples[i].clone()
        } else {
            let c = random_chain(&all_n, 3, &mut t.rng);
            [c[0].clone(), c[1].clone(), c[2].clone()]
        };
        let left = compose_refinements(&compose_refinements(&f, &g)?, &h)?;
        let right = compose_refinements(&f, &compose_refinements(&g, &h)?)?;
        Ok(Outcome::Holds(left == right))
    });
}
