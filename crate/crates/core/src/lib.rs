//! Classification of chiral (and directly regular) abstract polytopes
//! with a given finite permutation group as rotation group.
//!
//! The crate is layered bottom-up:
//!
//! - [`perm`]: exact permutation arithmetic.
//! - [`group`]: stabilizer chains, exact orders, membership.
//! - [`analysis`]: conjugacy classes, involutions, centralizers,
//!   normalizers of cyclic subgroups, subgroup intersection.
//! - [`cplus`]: alpha/sigma generator tuples, parabolic subgroups, the
//!   intersection and linear-diagram predicates, the chirality test.
//! - [`blt`]: the involution-based classification search.
//! - [`hhl`]: the exhaustive sigma-tuple baseline used as oracle and
//!   benchmark counterpart.

pub mod analysis;
pub mod blt;
pub mod cplus;
pub mod error;
pub mod group;
pub mod hhl;
pub mod perm;

pub use analysis::{
    centralizer, conjugacy_classes, cyclic_normalizer, involutions, subgroup_intersection,
    ClassData, DEFAULT_ENUMERATION_CAP,
};
pub use blt::{classify, classify_with_pruning, deduplicate, extend_tuple, SearchConfig, SearchStats};
pub use cplus::{
    alpha_words_from_sigma, extends_to_automorphism, sigma_mirror_image, sigma_words_from_alpha,
    AlphaTuple, PolytopeRecord, SchlafliType, SigmaTuple,
};
pub use error::{Error, Result};
pub use group::{GroupOrder, PermGroup};
pub use hhl::classify_hhl;
pub use perm::{Permutation, MAX_DEGREE};
