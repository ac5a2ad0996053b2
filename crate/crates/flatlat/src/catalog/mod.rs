//! Catalogs of small lattices: canonical forms, the census, and batch
//! theorem verification.

pub mod canonical;
pub mod enumerate;
pub mod verify;
