//! Tensor products of finite join-semilattices: bi-ideals, the tensor
//! lattice, and the antitone-hom description.

pub mod antitone;
pub mod bi_ideal;
pub mod product;
