//! Frame tuples `(V_1, …, V_s)` with `dim V_j = μ_j` and `ΣV_j = V`, and
//! the structure they carry.
//!
//! Components are indexed 0-based. A partition `π` used for linkage groups
//! component indices, so for line frames it is a set partition of `{0..n}`.

use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::linalg::{self, Field, Matrix, DEFAULT_TOL};
use crate::partition::{IntPartition, PartitionError, Permutation, RefinementArrow, Tableau};
use crate::subspace::{gaussian_matrix, Subspace, SubspaceError, SubspaceJson};

/// General frames whose condition number exceeds this are rejected.
pub const MAX_FRAME_CONDITION: f64 = 1e6;

/// Sampled general frames are redrawn until σ_min > this · σ_max.
pub const SAMPLING_INVERSE_CONDITION: f64 = 1e-3;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FrameError {
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("permutation moves component {from} (dim {from_dim}) onto slot {to} (dim {to_dim})")]
    IllegalPermutation {
        from: usize,
        to: usize,
        from_dim: usize,
        to_dim: usize,
    },
    #[error("the two directions of the frame commeasurability relation disagree ({forward} vs {backward})")]
    AsymmetricObot { forward: bool, backward: bool },
    #[error(transparent)]
    Subspace(#[from] SubspaceError),
    #[error(transparent)]
    Partition(#[from] PartitionError),
    #[error("malformed frame JSON: {0}")]
    Json(String),
}

/// First violated condition found by [`FrameTuple::validate`].
#[derive(Debug, Clone, PartialEq)]
pub enum FrameDefect {
    ShapeMismatch {
        component: usize,
        dim: usize,
        expected: usize,
    },
    RankDeficient {
        rank: usize,
        ambient: usize,
    },
    NotOrthogonal {
        first: usize,
        second: usize,
        overlap: f64,
    },
    IllConditioned {
        condition: f64,
    },
}

impl std::fmt::Display for FrameDefect {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::ShapeMismatch {
                component,
                dim,
                expected,
            } => write!(
                f,
                "component {component} has dim {dim}, shape asks for {expected}"
            ),
            Self::RankDeficient { rank, ambient } => {
                write!(f, "components span rank {rank} < ambient {ambient}")
            }
            Self::NotOrthogonal {
                first,
                second,
                overlap,
            } => write!(
                f,
                "components {first} and {second} are not orthogonal (overlap {overlap:e})"
            ),
            Self::IllConditioned { condition } => {
                write!(
                    f,
                    "frame condition number {condition:e} exceeds {MAX_FRAME_CONDITION:e}"
                )
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Validation {
    pub defect: Option<FrameDefect>,
}

impl Validation {
    pub fn is_valid(&self) -> bool {
        self.defect.is_none()
    }
}

#[derive(Debug, Clone)]
pub struct FrameTuple {
    ambient: usize,
    shape: IntPartition,
    components: Vec<Subspace>,
    orthogonal: bool,
}

impl FrameTuple {
    /// Structural constructor: components share ambient and field, and their
    /// dimensions are positive and weakly decreasing. Spanning and
    /// orthogonality are checked by [`validate`](Self::validate).
    pub fn new(components: Vec<Subspace>, orthogonal: bool) -> Result<Self, FrameError> {
        let first = components
            .first()
            .ok_or_else(|| FrameError::ShapeMismatch("frame without components".into()))?;
        let (ambient, field) = (first.ambient(), first.field());
        for c in &components {
            if c.ambient() != ambient {
                return Err(SubspaceError::AmbientMismatch(ambient, c.ambient()).into());
            }
            if c.field() != field {
                return Err(SubspaceError::FieldMismatch(field, c.field()).into());
            }
        }
        let shape = IntPartition::new(components.iter().map(Subspace::dim).collect())?;
        Ok(Self {
            ambient,
            shape,
            components,
            orthogonal,
        })
    }

    /// The coordinate line frame `(span e_1, …, span e_n)`.
    pub fn standard(n: usize, field: Field) -> Self {
        let lines = (0..n)
            .map(|i| Subspace::coordinate(n, field, &[i]))
            .collect();
        Self::new(lines, true).expect("coordinate lines")
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn shape(&self) -> &IntPartition {
        &self.shape
    }

    pub fn components(&self) -> &[Subspace] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Subspace {
        &self.components[i]
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn is_orthogonal(&self) -> bool {
        self.orthogonal
    }

    pub fn field(&self) -> Field {
        self.components[0].field()
    }

    pub fn is_line_frame(&self) -> bool {
        self.shape.parts().iter().all(|&d| d == 1)
    }

    fn tol(&self) -> f64 {
        self.components
            .iter()
            .map(Subspace::tol)
            .fold(DEFAULT_TOL, f64::max)
    }

    /// All component bases side by side (an `n × n` matrix for a valid frame).
    pub fn stacked_basis(&self) -> Matrix {
        let cols: Vec<_> = self
            .components
            .iter()
            .flat_map(|c| c.basis_vectors())
            .collect();
        Matrix::from_columns(self.ambient, self.field(), &cols)
    }

    pub fn validate(&self, tol: f64) -> Validation {
        let defect = self.find_defect(tol);
        Validation { defect }
    }

    fn find_defect(&self, tol: f64) -> Option<FrameDefect> {
        for (i, c) in self.components.iter().enumerate() {
            if c.dim() != self.shape.part(i) {
                return Some(FrameDefect::ShapeMismatch {
                    component: i,
                    dim: c.dim(),
                    expected: self.shape.part(i),
                });
            }
        }
        let stacked = self.stacked_basis();
        let rank = linalg::rank_with_tol(&stacked, tol);
        if rank < self.ambient || stacked.cols() != self.ambient {
            return Some(FrameDefect::RankDeficient {
                rank,
                ambient: self.ambient,
            });
        }
        if self.orthogonal {
            for i in 0..self.len() {
                for j in i + 1..self.len() {
                    let overlap = self.components[i]
                        .basis()
                        .adjoint_mul(self.components[j].basis())
                        .norm_fro();
                    if overlap > tol.max(1e3 * f64::EPSILON) {
                        return Some(FrameDefect::NotOrthogonal {
                            first: i,
                            second: j,
                            overlap,
                        });
                    }
                }
            }
        }
        let inv_cond = linalg::inverse_condition(&stacked);
        if inv_cond * MAX_FRAME_CONDITION < 1.0 {
            return Some(FrameDefect::IllConditioned {
                condition: 1.0 / inv_cond,
            });
        }
        None
    }

    /// `⊕_{i∈indices} V_i`.
    pub fn block_span(&self, indices: &[usize]) -> Result<Subspace, FrameError> {
        Ok(Subspace::sum_all(
            self.ambient,
            self.field(),
            indices.iter().map(|&i| &self.components[i]),
            self.tol(),
        )?)
    }

    fn check_same_kind(&self, other: &Self) -> Result<(), FrameError> {
        if self.ambient != other.ambient || self.shape != other.shape {
            return Err(FrameError::ShapeMismatch(format!(
                "frames of shape {} in dim {} vs {} in dim {}",
                self.shape, self.ambient, other.shape, other.ambient
            )));
        }
        Ok(())
    }

    fn check_linkage_partition(&self, pi: &Tableau) -> Result<(), FrameError> {
        if pi.n() != self.len() {
            return Err(FrameError::ShapeMismatch(format!(
                "partition of {} indices for a frame with {} components",
                pi.n(),
                self.len()
            )));
        }
        Ok(())
    }

    /// Component-wise comparison; `∞` when the shapes differ.
    pub fn distance(&self, other: &Self) -> Result<f64, FrameError> {
        if self.ambient != other.ambient || self.shape != other.shape {
            return Ok(f64::INFINITY);
        }
        let mut worst: f64 = 0.0;
        for (a, b) in self.components.iter().zip(&other.components) {
            worst = worst.max(a.distance(b)?);
        }
        Ok(worst)
    }

    pub fn equals(&self, other: &Self, tol: f64) -> Result<bool, FrameError> {
        Ok(self.distance(other)? <= tol)
    }

    /// `a ~_π b`: equal block spans for every block of `π`.
    pub fn pi_linked(&self, other: &Self, pi: &Tableau, tol: f64) -> Result<bool, FrameError> {
        self.check_same_kind(other)?;
        self.check_linkage_partition(pi)?;
        for block in pi.blocks() {
            if !self
                .block_span(block)?
                .equals(&other.block_span(block)?, tol)?
            {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Image under the reverse refinement `arrow`: coarse component `k` is
    /// the sum of the components whose fine blocks map into coarse block `k`.
    pub fn refine_map(&self, arrow: &RefinementArrow) -> Result<Self, FrameError> {
        let fine = arrow.fine();
        if fine.block_count() != self.len() {
            return Err(FrameError::ShapeMismatch(format!(
                "arrow has {} fine blocks for {} components",
                fine.block_count(),
                self.len()
            )));
        }
        if fine.shape() != self.shape {
            return Err(FrameError::ShapeMismatch(format!(
                "fine shape {} vs frame shape {}",
                fine.shape(),
                self.shape
            )));
        }
        let components = (0..arrow.coarse().block_count())
            .map(|k| {
                let idx: Vec<usize> = arrow.preimage(k).collect();
                self.block_span(&idx)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(components, self.orthogonal)
    }

    /// Moves component `j` to slot `sigma(j)`; only equal-dimension slots may
    /// be exchanged.
    pub fn permute(&self, sigma: &Permutation) -> Result<Self, FrameError> {
        if sigma.len() != self.len() {
            return Err(FrameError::ShapeMismatch(format!(
                "permutation of {} for {} components",
                sigma.len(),
                self.len()
            )));
        }
        let mut slots: Vec<Option<Subspace>> = vec![None; self.len()];
        for (j, c) in self.components.iter().enumerate() {
            let to = sigma.apply(j);
            if self.shape.part(to) != c.dim() {
                return Err(FrameError::IllegalPermutation {
                    from: j,
                    to,
                    from_dim: c.dim(),
                    to_dim: self.shape.part(to),
                });
            }
            slots[to] = Some(c.clone());
        }
        Ok(Self {
            components: slots.into_iter().map(|s| s.expect("bijection")).collect(),
            ..self.clone()
        })
    }

    fn obot_direction(&self, other: &Self, tol: f64) -> Result<bool, FrameError> {
        for v in &self.components {
            let pieces = other
                .components
                .iter()
                .map(|w| w.intersect(v))
                .collect::<Result<Vec<_>, _>>()?;
            let rebuilt = Subspace::sum_all(self.ambient, self.field(), &pieces, self.tol())?;
            if !rebuilt.equals(v, tol)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Frame commeasurability: each component of either frame is the direct
    /// sum of its intersections with the components of the other.
    pub fn bigobot(&self, other: &Self, tol: f64) -> Result<bool, FrameError> {
        if self.ambient != other.ambient {
            return Err(SubspaceError::AmbientMismatch(self.ambient, other.ambient).into());
        }
        let forward = self.obot_direction(other, tol)?;
        let backward = other.obot_direction(self, tol)?;
        if forward != backward {
            return Err(FrameError::AsymmetricObot { forward, backward });
        }
        Ok(forward)
    }

    /// Eversion: component `i` becomes `(⊕_{j≠i} V_j)^⊥`.
    pub fn evert(&self) -> Result<Self, FrameError> {
        let components = (0..self.len())
            .map(|i| {
                let others: Vec<usize> = (0..self.len()).filter(|&j| j != i).collect();
                Ok(self.block_span(&others)?.orthocomplement())
            })
            .collect::<Result<Vec<_>, FrameError>>()?;
        Self::new(components, self.orthogonal)
    }

    /// Random frame of the given shape. Orthogonal frames split the columns
    /// of a random unitary; general frames split the columns of a random
    /// invertible matrix with inverse condition above
    /// [`SAMPLING_INVERSE_CONDITION`].
    pub fn random<R: Rng + ?Sized>(
        ambient: usize,
        shape: &IntPartition,
        orthogonal: bool,
        field: Field,
        rng: &mut R,
    ) -> Self {
        assert_eq!(
            shape.n(),
            ambient,
            "shape must partition the ambient dimension"
        );
        let basis = loop {
            let g = gaussian_matrix(ambient, ambient, field, rng);
            if linalg::inverse_condition(&g) <= SAMPLING_INVERSE_CONDITION {
                continue;
            }
            if orthogonal {
                let (q, rank) = linalg::orthonormalize(&g, DEFAULT_TOL).expect("gaussian");
                if rank == ambient {
                    break q;
                }
            } else {
                break g;
            }
        };
        let mut start = 0;
        let components = shape
            .parts()
            .iter()
            .map(|&d| {
                let idx: Vec<usize> = (start..start + d).collect();
                start += d;
                Subspace::span(&basis.select_columns(&idx), DEFAULT_TOL).expect("block span")
            })
            .collect();
        Self::new(components, orthogonal).expect("random frame")
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(FrameJson {
            ambient: self.ambient,
            shape: self.shape.parts().to_vec(),
            orthogonal: self.orthogonal,
            components: self.components.iter().map(SubspaceJson::from).collect(),
        })
        .expect("frame JSON")
    }

    pub fn from_json(v: &serde_json::Value, tol: f64) -> Result<Self, FrameError> {
        let raw: FrameJson =
            serde_json::from_value(v.clone()).map_err(|e| FrameError::Json(e.to_string()))?;
        let components = raw
            .components
            .into_iter()
            .map(|c| c.into_subspace(tol))
            .collect::<Result<Vec<_>, _>>()?;
        let frame = Self::new(components, raw.orthogonal)?;
        if frame.ambient != raw.ambient || frame.shape.parts() != raw.shape.as_slice() {
            return Err(FrameError::ShapeMismatch(format!(
                "declared shape {:?} in dim {}, components give {} in dim {}",
                raw.shape, raw.ambient, frame.shape, frame.ambient
            )));
        }
        Ok(frame)
    }
}

/// `{"ambient": n, "shape": [..], "orthogonal": bool, "components": [Subspace JSON, ...]}`
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FrameJson {
    pub ambient: usize,
    pub shape: Vec<usize>,
    pub orthogonal: bool,
    pub components: Vec<SubspaceJson>,
}

/// Pairwise equality of block spans of two frames for every subset of
/// component indices, so that linkage under every partition can be read off
/// without recomputing spans.
#[derive(Debug, Clone)]
pub struct LinkageProfile {
    components: usize,
    equal: Vec<bool>,
}

impl LinkageProfile {
    /// Limited to frames with at most 16 components.
    pub fn new(a: &FrameTuple, b: &FrameTuple, tol: f64) -> Result<Self, FrameError> {
        a.check_same_kind(b)?;
        let s = a.len();
        assert!(s <= 16, "linkage profiles cover at most 16 components");
        let mut equal = vec![true; 1 << s];
        for (mask, slot) in equal.iter_mut().enumerate().skip(1) {
            let idx: Vec<usize> = (0..s).filter(|i| mask & (1 << i) != 0).collect();
            *slot = a.block_span(&idx)?.equals(&b.block_span(&idx)?, tol)?;
        }
        Ok(Self {
            components: s,
            equal,
        })
    }

    pub fn pi_linked(&self, pi: &Tableau) -> bool {
        assert_eq!(pi.n(), self.components, "partition size");
        pi.blocks().iter().all(|b| {
            let mask: usize = b.iter().map(|&i| 1 << i).sum();
            self.equal[mask]
        })
    }

    /// Masks whose spans agree.
    pub fn agreeing_subsets(&self) -> &[bool] {
        &self.equal
    }
}

/// A frame `π`-linked to `a`, obtained by an independent random change of
/// basis inside every block span. Orthogonal frames stay orthogonal
/// (unitary change of basis); general frames get a random invertible one.
pub fn random_linked_partner<R: Rng + ?Sized>(
    a: &FrameTuple,
    pi: &Tableau,
    rng: &mut R,
) -> Result<FrameTuple, FrameError> {
    a.check_linkage_partition(pi)?;
    if !a.is_line_frame() {
        return Err(FrameError::ShapeMismatch(
            "linked partners are drawn for line frames".into(),
        ));
    }
    let field = a.field();
    let mut lines: Vec<Option<Subspace>> = vec![None; a.len()];
    for block in pi.blocks() {
        let span = a.block_span(block)?;
        let k = block.len();
        let mixed = loop {
            let g = gaussian_matrix(k, k, field, rng);
            if linalg::inverse_condition(&g) <= SAMPLING_INVERSE_CONDITION {
                continue;
            }
            let m = span.basis() * &g;
            if a.is_orthogonal() {
                break linalg::orthonormalize(&m, DEFAULT_TOL)
                    .expect("block basis")
                    .0;
            }
            break m;
        };
        for (slot, &i) in block.iter().enumerate() {
            let col = mixed.select_columns(&[slot]);
            lines[i] = Some(Subspace::span(&col, DEFAULT_TOL)?);
        }
    }
    let lines = lines
        .into_iter()
        .map(|l| l.expect("every index covered"))
        .collect();
    FrameTuple::new(lines, a.is_orthogonal())
}
