//! Recognition of graphs with no induced P5 and no induced complement of P5,
//! with constructive certificates.
//!
//! A member is certified by a [`DecompTree`]: pentagons and split graphs at
//! the leaves, combined by substitution and by split unification in the
//! graph or in its complement. A non-member is certified by an induced
//! [`ForbiddenWitness`]. The pieces the tree is assembled from are exposed
//! on their own: module finding ([`modular`]), the `X/Y` structure
//! partition ([`structure`]) and split divides ([`divide`]).

pub mod detect;
pub mod divide;
pub mod enumerate;
mod error;
pub mod generate;
pub mod graph;
pub mod graph6;
pub mod modular;
pub mod oracle;
pub mod structure;
pub mod tree;

pub use detect::{find_induced, is_free, is_split, ForbiddenWitness, Freeness, Pattern, SplitOutcome, SplitPartition};
pub use divide::{
    find_split_divide, split_into_pair, unify_pair, validate_composable_pair, validate_split_divide, ComposablePair,
    PairRoles, Side, SplitDivide, SplitPair,
};
pub use error::{Error, Result};
pub use graph::{Graph, Relation, VertexSet};
pub use modular::{decompose_by_homogeneous_set, find_proper_homogeneous_set, substitute, HomogeneousSet};
pub use structure::{build_structure_partition, lemma_abx, validate_structure_partition, StructurePartition};
pub use tree::{decompose, decompose_perfect, recognize, reconstruct, DecompTree, RecognitionResult};
