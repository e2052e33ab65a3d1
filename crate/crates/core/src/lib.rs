//! Subspace lattices, frame tuples and the semilinear maps acting on them.

pub mod frame;
pub mod induced;
pub mod linalg;
pub mod partition;
pub mod subspace;

pub use frame::{FrameDefect, FrameError, FrameTuple, LinkageProfile, Validation};
pub use induced::{
    line_projection_construct, reconstruct_from_line_images, Automorphism, MapError,
    ReconstructError, SemilinearMap,
};
pub use linalg::{Field, LinalgError, Matrix, PolarFactors, DEFAULT_TOL};
pub use partition::{
    compose_refinements, reverse_refines, IntPartition, PartitionError, Permutation,
    RefinementArrow, Tableau,
};
pub use subspace::{
    gaussian_matrix, random_unitary, Projector, Subspace, SubspaceError, DEFAULT_COMMUTATOR_TOL,
};
