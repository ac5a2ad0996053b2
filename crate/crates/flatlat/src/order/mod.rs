//! Core order theory: finite join-semilattices, morphisms, ideal lattices
//! and distributivity.

pub mod distributive;
pub mod ideal;
pub mod morphism;
pub mod semilattice;
