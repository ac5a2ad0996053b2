//! Computations with finite join-semilattices: tensor products via
//! bi-ideals, distributivity testing, and flatness.
//!
//! The headline result this crate makes executable: a finite
//! join-semilattice `S` is *flat* (tensoring with it preserves embeddings)
//! exactly when `S` is distributive, and flatness can be decided by just
//! two fixed embeddings into the eight-element Boolean lattice — one
//! killing diamonds, one killing pentagons. The crate builds the tensors,
//! the canonical box/cube isomorphisms that make those witness maps
//! tractable, explicit collapse witnesses for non-flat structures, and a
//! batch verifier that replays the equivalence over every isomorphism
//! class of small lattices.
//!
//! Where feasible every nontrivial object is computed by two independent
//! routes that are asserted to agree: tensor elements by closure and by
//! direct search, distributivity by refinement, ideal-lattice law and
//! forbidden sublattices, the census by extension and by natural-label
//! search, the tensor order against bi-ideal inclusion, and so on. A
//! disagreement is a bug and panics; malformed input and guard limits are
//! ordinary [`LatticeError`] / [`SlfError`] values.
//!
//! # Quick tour
//!
//! ```
//! use flatlat::{flatness, tensor_product, FiniteJoinSemilattice};
//!
//! let m3 = FiniteJoinSemilattice::m3();
//! assert_eq!(tensor_product(&m3, &m3).unwrap().size(), 50);
//!
//! let report = flatness(&m3).unwrap();
//! assert!(!report.flat);
//! let collapse = report.collapse.unwrap();
//! assert_eq!(collapse.u.tensor_expr(), "p⊗p ∨ q⊗q ∨ r⊗r");
//! assert_eq!(collapse.v.tensor_expr(), "1⊗1");
//! ```

mod bits;
pub mod catalog;
pub mod dot;
pub mod error;
pub mod flat;
pub mod order;
pub mod slf;
pub mod tensor;

pub use crate::catalog::canonical::{canonical_form, is_isomorphic, CanonicalForm};
pub use crate::catalog::enumerate::enumerate_lattices;
pub use crate::catalog::verify::{verify_theorem, StructureRecord, VerificationReport};
pub use crate::dot::emit_dot;
pub use crate::error::{LatticeError, SlfError, SlfErrorKind};
pub use crate::flat::boxes::{box_condition, triple_box, TripleBox};
pub use crate::flat::flatness::{
    brute_force_flat, canonical_iso, check_diagrams, counterexample, fixed_embeddings,
    flatness, power_cube_iso, projection_map, witness_injectivity, CanonicalIso,
    FlatnessReport, TensorCollapse,
};
pub use crate::order::distributive::{
    find_sublattice_copy, is_distributive, DistributivityReport, Pattern,
};
pub use crate::order::ideal::{ideal_lattice, IdealLattice};
pub use crate::order::morphism::{all_embeddings, JoinMorphism};
pub use crate::order::semilattice::{size_guard, FiniteJoinSemilattice};
pub use crate::slf::{emit_slf, parse_slf};
pub use crate::tensor::antitone::{
    enumerate_antitone_homs, epsilon, epsilon_inv, AntitoneHom,
};
pub use crate::tensor::bi_ideal::{
    bi_ideal_closure, lateral_join, nabla, pure_tensor, BiIdeal,
};
pub use crate::tensor::product::{
    tensor_morphism, tensor_product, transpose, TensorSemilattice,
};
