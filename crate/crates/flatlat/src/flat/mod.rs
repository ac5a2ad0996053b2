//! Flatness: box lattices, canonical isomorphisms, the fixed witness
//! embeddings and the flat ⇔ distributive equivalence.

pub mod boxes;
pub mod flatness;
