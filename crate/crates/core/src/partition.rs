//! Integer partitions, tableaux as set partitions of `{0..n}`, and reverse
//! refinement arrows between them.
//!
//! Symbols are 0-based in memory; the JSON wire format is 1-based.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("parts must be weakly decreasing: {0:?}")]
    NotDecreasing(Vec<usize>),
    #[error("parts must be positive: {0:?}")]
    ZeroPart(Vec<usize>),
    #[error("partitions of different sizes: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("blocks do not partition {{1..{n}}}: {reason}")]
    NotASetPartition { n: usize, reason: String },
    #[error("arrows do not chain: first ends at {0}, second starts at {1}")]
    ChainMismatch(String, String),
    #[error("not a permutation of {0} symbols: {1:?}")]
    NotAPermutation(usize, Vec<usize>),
}

/// `μ = (μ_1 ≥ … ≥ μ_s > 0)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct IntPartition {
    parts: Vec<usize>,
}

impl TryFrom<Vec<usize>> for IntPartition {
    type Error = PartitionError;

    fn try_from(parts: Vec<usize>) -> Result<Self, Self::Error> {
        Self::new(parts)
    }
}

impl From<IntPartition> for Vec<usize> {
    fn from(p: IntPartition) -> Self {
        p.parts
    }
}

impl IntPartition {
    pub fn new(parts: Vec<usize>) -> Result<Self, PartitionError> {
        if parts.contains(&0) {
            return Err(PartitionError::ZeroPart(parts));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(PartitionError::NotDecreasing(parts));
        }
        Ok(Self { parts })
    }

    /// Parts listed in any order are read as their decreasing rearrangement.
    pub fn from_unordered(mut parts: Vec<usize>) -> Result<Self, PartitionError> {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(parts)
    }

    /// `(1, …, 1) ⊢ n`, the shape of a line frame.
    pub fn ones(n: usize) -> Self {
        Self { parts: vec![1; n] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `μ_j` with implicit zero padding (0-based `j`).
    pub fn part(&self, j: usize) -> usize {
        self.parts.get(j).copied().unwrap_or(0)
    }

    /// `(μ^⊥)_i = #{ j : μ_j ≥ i }`.
    pub fn conjugate(&self) -> Self {
        let width = self.part(0);
        let parts = (1..=width)
            .map(|i| self.parts.iter().filter(|&&p| p >= i).count())
            .collect();
        Self { parts }
    }

    /// The positive values among `μ_j − μ_{j+1}`, in increasing `j`.
    pub fn jmp_sequence(&self) -> Vec<usize> {
        (0..self.len())
            .map(|j| self.part(j) - self.part(j + 1))
            .filter(|&d| d > 0)
            .collect()
    }

    /// Sizes of the symmetric-group factors permuting equal parts, listed
    /// from the smallest parts (the terminal segment) to the largest.
    pub fn symmetry_factors(&self) -> Vec<usize> {
        self.conjugate().jmp_sequence()
    }

    /// Dominance (majorization) order on partitions of the same integer.
    pub fn dominance_leq(&self, other: &Self) -> Result<bool, PartitionError> {
        if self.n() != other.n() {
            return Err(PartitionError::SizeMismatch(self.n(), other.n()));
        }
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0, 0);
        for j in 0..len {
            a += self.part(j);
            b += other.part(j);
            if a > b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all(n: usize) -> Vec<Self> {
        fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<IntPartition>) {
            if rest == 0 {
                out.push(IntPartition {
                    parts: prefix.clone(),
                });
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                prefix.push(p);
                go(rest - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for IntPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A set partition of `{0..n}` with blocks in canonical order
/// (size descending, then smallest element ascending).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Tableau {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(n: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self, PartitionError> {
        let bad = |reason: String| PartitionError::NotASetPartition { n, reason };
        let mut seen = vec![false; n];
        for b in &mut blocks {
            if b.is_empty() {
                return Err(bad("empty block".into()));
            }
            b.sort_unstable();
            for &s in b.iter() {
                if s >= n {
                    return Err(bad(format!("symbol {} out of range", s + 1)));
                }
                if std::mem::replace(&mut seen[s], true) {
                    return Err(bad(format!("symbol {} repeated", s + 1)));
                }
            }
        }
        if let Some(missing) = seen.iter().position(|&x| !x) {
            return Err(bad(format!("symbol {} missing", missing + 1)));
        }
        blocks.sort_by(|a, b| b.len().cmp(&a.len()).then(a[0].cmp(&b[0])));
        Ok(Self { n, blocks })
    }

    /// Every symbol in its own block.
    pub fn singletons(n: usize) -> Self {
        Self {
            n,
            blocks: (0..n).map(|i| vec![i]).collect(),
        }
    }

    /// The one-block partition.
    pub fn whole(n: usize) -> Self {
        Self {
            n,
            blocks: vec![(0..n).collect()],
        }
    }

    /// Fills the rows of `shape` with consecutive symbols.
    pub fn row_filling(shape: &IntPartition) -> Self {
        let mut next = 0;
        let blocks = shape
            .parts()
            .iter()
            .map(|&len| {
                let b: Vec<usize> = (next..next + len).collect();
                next += len;
                b
            })
            .collect();
        Self {
            n: shape.n(),
            blocks,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn shape(&self) -> IntPartition {
        IntPartition {
            parts: self.blocks.iter().map(Vec::len).collect(),
        }
    }

    /// Index of the block holding `symbol`.
    pub fn block_of(&self, symbol: usize) -> usize {
        self.blocks
            .iter()
            .position(|b| b.binary_search(&symbol).is_ok())
            .expect("symbol in range")
    }

    /// All set partitions of `{0..n}` (Bell-many), via restricted growth strings.
    pub fn all(n: usize) -> Vec<Self> {
        fn go(i: usize, n: usize, rgs: &mut Vec<usize>, max: usize, out: &mut Vec<Tableau>) {
            if i == n {
                let k = rgs.iter().copied().max().map_or(0, |m| m + 1);
                let mut blocks = vec![Vec::new(); k];
                for (s, &b) in rgs.iter().enumerate() {
                    blocks[b].push(s);
                }
                out.push(Tableau::new(n, blocks).expect("restricted growth string"));
                return;
            }
            for b in 0..=max {
                rgs.push(b);
                go(i + 1, n, rgs, if b == max { max + 1 } else { max }, out);
                rgs.pop();
            }
        }
        if n == 0 {
            return vec![Self {
                n: 0,
                blocks: vec![],
            }];
        }
        let mut out = Vec::new();
        go(0, n, &mut Vec::new(), 0, &mut out);
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(TableauJson::from(self)).expect("tableau JSON")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, PartitionError> {
        let raw: TableauJson =
            serde_json::from_value(v.clone()).map_err(|e| PartitionError::NotASetPartition {
                n: 0,
                reason: e.to_string(),
            })?;
        raw.try_into()
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, b) in self.blocks.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            let syms: Vec<String> = b.iter().map(|s| (s + 1).to_string()).collect();
            write!(f, "{{{}}}", syms.join(","))?;
        }
        write!(f, "}}")
    }
}

/// `{"n": 6, "blocks": [[1,2],[3,4],[5],[6]]}`, symbols 1-based.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TableauJson {
    pub n: usize,
    pub blocks: Vec<Vec<usize>>,
}

impl From<&Tableau> for TableauJson {
    fn from(t: &Tableau) -> Self {
        Self {
            n: t.n,
            blocks: t
                .blocks
                .iter()
                .map(|b| b.iter().map(|s| s + 1).collect())
                .collect(),
        }
    }
}

impl TryFrom<TableauJson> for Tableau {
    type Error = PartitionError;

    fn try_from(raw: TableauJson) -> Result<Self, Self::Error> {
        let mut blocks = Vec::with_capacity(raw.blocks.len());
        for b in raw.blocks {
            let mut out = Vec::with_capacity(b.len());
            for s in b {
                if s == 0 {
                    return Err(PartitionError::NotASetPartition {
                        n: raw.n,
                        reason: "symbols are 1-based".into(),
                    });
                }
                out.push(s - 1);
            }
            blocks.push(out);
        }
        Tableau::new(raw.n, blocks)
    }
}

/// A bijection of `{0..k}`, stored as the list of images.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self, PartitionError> {
        let k = images.len();
        let mut seen = vec![false; k];
        for &i in &images {
            if i >= k || std::mem::replace(&mut seen[i], true) {
                return Err(PartitionError::NotAPermutation(k, images));
            }
        }
        Ok(Self(images))
    }

    pub fn identity(k: usize) -> Self {
        Self((0..k).collect())
    }

    /// Exchanges `i` and `j`.
    pub fn transposition(k: usize, i: usize, j: usize) -> Self {
        let mut p = Self::identity(k);
        p.0.swap(i, j);
        p
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Self(inv)
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &Self) -> Self {
        Self(other.0.iter().map(|&i| self.0[i]).collect())
    }

    /// All permutations of `{0..k}` in lexicographic order.
    pub fn all(k: usize) -> Vec<Self> {
        let mut cur: Vec<usize> = (0..k).collect();
        let mut out = vec![Self(cur.clone())];
        loop {
            let Some(i) = (1..k).rev().find(|&i| cur[i - 1] < cur[i]) else {
                return out;
            };
            let j = (i..k).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
            out.push(Self(cur.clone()));
        }
    }

    /// The group `S_μ` of permutations of component slots that only move
    /// slots of equal dimension: a product of symmetric groups, one per run
    /// of equal entries in `dims`.
    pub fn dimension_preserving(dims: &[usize]) -> Vec<Self> {
        let mut groups: Vec<Vec<usize>> = Vec::new();
        for (i, &d) in dims.iter().enumerate() {
            match groups.last_mut() {
                Some(g) if dims[g[0]] == d => g.push(i),
                _ => groups.push(vec![i]),
            }
        }
        // Slots of equal dimension are contiguous when dims is sorted; handle
        // the general case by merging runs with equal values.
        let mut merged: Vec<Vec<usize>> = Vec::new();
        for g in groups {
            if let Some(m) = merged.iter_mut().find(|m| dims[m[0]] == dims[g[0]]) {
                m.extend(g);
            } else {
                merged.push(g);
            }
        }
        let mut out = vec![Self::identity(dims.len())];
        for g in merged {
            let local = Self::all(g.len());
            let mut next = Vec::with_capacity(out.len() * local.len());
            for base in &out {
                for l in &local {
                    let mut images = base.0.clone();
                    for (a, &slot) in g.iter().enumerate() {
                        images[slot] = base.0[g[l.0[a]]];
                    }
                    next.push(Self(images));
                }
            }
            out = next;
        }
        out
    }
}

/// Witness of `fine ⪯ coarse`: every fine block sits inside the coarse block
/// `block_map[j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RefinementArrow {
    fine: Tableau,
    coarse: Tableau,
    block_map: Vec<usize>,
}

impl RefinementArrow {
    pub fn fine(&self) -> &Tableau {
        &self.fine
    }

    pub fn coarse(&self) -> &Tableau {
        &self.coarse
    }

    pub fn block_map(&self) -> &[usize] {
        &self.block_map
    }

    pub fn identity(t: &Tableau) -> Self {
        Self {
            fine: t.clone(),
            coarse: t.clone(),
            block_map: (0..t.block_count()).collect(),
        }
    }

    /// Fine blocks mapped into coarse block `k`.
    pub fn preimage(&self, k: usize) -> impl Iterator<Item = usize> + '_ {
        self.block_map
            .iter()
            .enumerate()
            .filter(move |&(_, &m)| m == k)
            .map(|(j, _)| j)
    }

    /// Uniform `S_ν ≤ S_μ`-compatibility: the coarse permutation induced by a
    /// permutation `sigma` of fine blocks, if `sigma` carries the fine blocks
    /// of each coarse block onto the fine blocks of a single coarse block.
    pub fn induced_coarse_permutation(&self, sigma: &Permutation) -> Option<Permutation> {
        let fine = &self.fine.blocks;
        if sigma.len() != fine.len() {
            return None;
        }
        if (0..fine.len()).any(|j| fine[j].len() != fine[sigma.apply(j)].len()) {
            return None;
        }
        let k = self.coarse.block_count();
        let mut images = vec![usize::MAX; k];
        for (j, &c) in self.block_map.iter().enumerate() {
            let target = self.block_map[sigma.apply(j)];
            if images[c] == usize::MAX {
                images[c] = target;
            } else if images[c] != target {
                return None;
            }
        }
        Permutation::new(images).ok()
    }

    /// The canonical embedding `S_ν ≤ S_μ`: a permutation `tau` of equal-size
    /// coarse blocks is realized on symbols by the order-preserving bijection
    /// between sorted coarse blocks, then read off on fine blocks. `None`
    /// when `tau` mixes sizes or the symbol map does not carry fine blocks
    /// onto fine blocks.
    pub fn lift_coarse_permutation(&self, tau: &Permutation) -> Option<Permutation> {
        let coarse = &self.coarse.blocks;
        if tau.len() != coarse.len() {
            return None;
        }
        let mut symbol_map = vec![0; self.fine.n];
        for (k, block) in coarse.iter().enumerate() {
            let target = &coarse[tau.apply(k)];
            if target.len() != block.len() {
                return None;
            }
            for (&s, &t) in block.iter().zip(target) {
                symbol_map[s] = t;
            }
        }
        let fine = &self.fine.blocks;
        let mut images = Vec::with_capacity(fine.len());
        for b in fine {
            let mut mapped: Vec<usize> = b.iter().map(|&s| symbol_map[s]).collect();
            mapped.sort_unstable();
            let j = fine.iter().position(|f| *f == mapped)?;
            images.push(j);
        }
        Permutation::new(images).ok()
    }
}

/// `fine ⪯ coarse` (every fine block lies in a coarse block), with the
/// unique witnessing block map; `None` when it fails or the sizes differ.
pub fn reverse_refines(fine: &Tableau, coarse: &Tableau) -> Option<RefinementArrow> {
    if fine.n != coarse.n {
        return None;
    }
    let mut block_map = Vec::with_capacity(fine.blocks.len());
    for b in &fine.blocks {
        let k = coarse.block_of(b[0]);
        let target = &coarse.blocks[k];
        if !b.iter().all(|s| target.binary_search(s).is_ok()) {
            return None;
        }
        block_map.push(k);
    }
    Some(RefinementArrow {
        fine: fine.clone(),
        coarse: coarse.clone(),
        block_map,
    })
}

/// `g ∘ f` for `f: μ̂ ⪯ ν̂` and `g: ν̂ ⪯ ρ̂`.
pub fn compose_refinements(
    f: &RefinementArrow,
    g: &RefinementArrow,
) -> Result<RefinementArrow, PartitionError> {
    if f.coarse != g.fine {
        return Err(PartitionError::ChainMismatch(
            f.coarse.to_string(),
            g.fine.to_string(),
        ));
    }
    Ok(RefinementArrow {
        fine: f.fine.clone(),
        coarse: g.coarse.clone(),
        block_map: f.block_map.iter().map(|&k| g.block_map[k]).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> IntPartition {
        IntPartition::new(parts.to_vec()).unwrap()
    }

    fn t(n: usize, blocks: &[&[usize]]) -> Tableau {
        // 1-based in the test source, matching the usual notation.
        Tableau::new(
            n,
            blocks
                .iter()
                .map(|b| b.iter().map(|s| s - 1).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[4]).conjugate(), p(&[1, 1, 1, 1]));
        assert_eq!(p(&[1, 1, 1]).conjugate(), p(&[3]));
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
    }

    #[test]
    fn jmp_examples() {
        assert_eq!(p(&[1, 1, 1]).jmp_sequence(), vec![1]);
        assert_eq!(p(&[3]).jmp_sequence(), vec![3]);
        assert_eq!(p(&[3, 3, 2, 1, 1]).jmp_sequence(), vec![1, 1, 1]);
    }

    #[test]
    fn symmetry_factor_examples() {
        assert_eq!(p(&[1, 1, 1]).symmetry_factors(), vec![3]);
        assert_eq!(p(&[2, 1]).symmetry_factors(), vec![1, 1]);
        assert_eq!(p(&[2, 2, 1, 1]).symmetry_factors(), vec![2, 2]);
    }

    #[test]
    fn dominance_examples() {
        let mu = p(&[2, 1, 1]);
        assert!(mu.dominance_leq(&mu).unwrap());
        assert!(p(&[1, 1, 1]).dominance_leq(&p(&[3])).unwrap());
        assert!(p(&[2, 2]).dominance_leq(&p(&[3, 1])).unwrap());
        assert!(!p(&[3, 1]).dominance_leq(&p(&[2, 2])).unwrap());
        assert_eq!(
            p(&[2]).dominance_leq(&p(&[3])),
            Err(PartitionError::SizeMismatch(2, 3))
        );
    }

    #[test]
    fn partition_validation() {
        assert!(matches!(
            IntPartition::new(vec![1, 2]),
            Err(PartitionError::NotDecreasing(_))
        ));
        assert!(matches!(
            IntPartition::new(vec![2, 0]),
            Err(PartitionError::ZeroPart(_))
        ));
        assert_eq!(
            IntPartition::from_unordered(vec![1, 3, 2]).unwrap(),
            p(&[3, 2, 1])
        );
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (1..=8).map(|n| IntPartition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 3, 5, 7, 11, 15, 22]);
        let bell: Vec<usize> = (1..=6).map(|n| Tableau::all(n).len()).collect();
        assert_eq!(bell, vec![1, 2, 5, 15, 52, 203]);
    }

    #[test]
    fn tableau_is_canonical() {
        let a = t(4, &[&[4], &[3, 1], &[2]]);
        assert_eq!(a.blocks(), &[vec![0, 2], vec![1], vec![3]]);
        assert_eq!(a.shape(), p(&[2, 1, 1]));
        assert!(Tableau::new(3, vec![vec![0], vec![0, 1, 2]]).is_err());
        assert!(Tableau::new(3, vec![vec![0, 1]]).is_err());
        assert!(Tableau::new(2, vec![vec![0, 1], vec![]]).is_err());
    }

    #[test]
    fn refinement_examples() {
        let mu = t(4, &[&[1, 2], &[3], &[4]]);
        let id = reverse_refines(&mu, &mu).unwrap();
        assert_eq!(id, RefinementArrow::identity(&mu));

        let arrow = reverse_refines(&Tableau::singletons(3), &Tableau::whole(3)).unwrap();
        assert_eq!(arrow.block_map(), &[0, 0, 0]);

        assert!(reverse_refines(&t(3, &[&[1, 2], &[3]]), &t(3, &[&[1, 3], &[2]])).is_none());
        assert!(reverse_refines(&Tableau::singletons(3), &Tableau::whole(4)).is_none());
    }

    #[test]
    fn composition_examples() {
        let s = Tableau::singletons(3);
        let mid = t(3, &[&[1, 2], &[3]]);
        let top = Tableau::whole(3);
        let f = reverse_refines(&s, &mid).unwrap();
        let g = reverse_refines(&mid, &top).unwrap();
        let direct = reverse_refines(&s, &top).unwrap();
        assert_eq!(compose_refinements(&f, &g).unwrap(), direct);
        assert_eq!(
            compose_refinements(&f, &RefinementArrow::identity(&mid)).unwrap(),
            f
        );
        assert!(matches!(
            compose_refinements(&g, &f),
            Err(PartitionError::ChainMismatch(..))
        ));
    }

    #[test]
    fn json_is_one_based() {
        let a = t(6, &[&[1, 2], &[3, 4], &[5], &[6]]);
        let v = a.to_json();
        assert_eq!(
            v,
            serde_json::json!({"n": 6, "blocks": [[1,2],[3,4],[5],[6]]})
        );
        assert_eq!(Tableau::from_json(&v).unwrap(), a);
        assert!(Tableau::from_json(&serde_json::json!({"n": 1, "blocks": [[0]]})).is_err());
    }

    #[test]
    fn permutation_groups() {
        assert_eq!(Permutation::all(4).len(), 24);
        assert_eq!(Permutation::dimension_preserving(&[2, 1, 1]).len(), 2);
        assert_eq!(
            Permutation::dimension_preserving(&[2, 2, 1, 1, 1]).len(),
            12
        );
        for s in Permutation::dimension_preserving(&[3, 2, 2, 1]) {
            assert_eq!(s.apply(0), 0);
            assert_eq!(s.apply(3), 3);
        }
        let s = Permutation::new(vec![2, 0, 1]).unwrap();
        assert_eq!(s.compose(&s.inverse()), Permutation::identity(3));
        assert!(Permutation::new(vec![0, 0]).is_err());
    }

    #[test]
    fn coarse_lift_matches_induced_permutation() {
        // Lines refined into two equal planes: swapping the planes lifts to
        // the order-preserving symbol swap 1↔3, 2↔4.
        let arrow = reverse_refines(&Tableau::singletons(4), &t(4, &[&[1, 2], &[3, 4]])).unwrap();
        let tau = Permutation::transposition(2, 0, 1);
        let sigma = arrow.lift_coarse_permutation(&tau).unwrap();
        assert_eq!(sigma.images(), &[2, 3, 0, 1]);
        assert_eq!(arrow.induced_coarse_permutation(&sigma).unwrap(), tau);

        // Equal-size coarse blocks with different fine structure: no lift.
        let arrow =
            reverse_refines(&t(4, &[&[1, 2], &[3], &[4]]), &t(4, &[&[1, 2], &[3, 4]])).unwrap();
        assert!(arrow.lift_coarse_permutation(&tau).is_none());
        // Swapping the two lines inside one coarse block induces the identity.
        let sigma = Permutation::transposition(3, 1, 2);
        assert_eq!(
            arrow.induced_coarse_permutation(&sigma).unwrap(),
            Permutation::identity(2)
        );
    }
}
