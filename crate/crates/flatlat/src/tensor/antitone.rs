//! The hom description of the tensor product.
//!
//! A map ξ from the nonzero part of `A` into the ideals of `B` that turns
//! joins into intersections (ξ(x ∨ y) = ξ(x) ∩ ξ(y)) corresponds to the
//! bi-ideal ε(ξ) = ∇ ∪ {(x, b) : b ∈ ξ(x)}. ε is a bijection onto the
//! bi-ideals, and it reverses the pointwise order, so these maps give an
//! independent description of `A ⊗ B`.

use std::sync::Arc;

use crate::error::LatticeError;
use crate::order::ideal::{ideal_lattice, IdealLattice};
use crate::order::semilattice::{size_guard, FiniteJoinSemilattice};
use crate::tensor::bi_ideal::BiIdeal;

/// A join-to-intersection map from `A − {0}` into the ideal lattice of `B`.
/// `values[x - 1]` is the ideal-lattice index assigned to the nonzero
/// element `x` of `A`.
#[derive(Debug, Clone)]
pub struct AntitoneHom {
    dom: Arc<FiniteJoinSemilattice>,
    ideals: Arc<IdealLattice>,
    values: Vec<usize>,
}

impl PartialEq for AntitoneHom {
    fn eq(&self, other: &Self) -> bool {
        self.dom == other.dom
            && self.ideals.base() == other.ideals.base()
            && self.values == other.values
    }
}

impl Eq for AntitoneHom {}

impl AntitoneHom {
    pub fn new(
        dom: &FiniteJoinSemilattice,
        ideals: &IdealLattice,
        values: Vec<usize>,
    ) -> Result<Self, LatticeError> {
        Self::with_arcs(Arc::new(dom.clone()), Arc::new(ideals.clone()), values)
    }

    pub(crate) fn with_arcs(
        dom: Arc<FiniteJoinSemilattice>,
        ideals: Arc<IdealLattice>,
        values: Vec<usize>,
    ) -> Result<Self, LatticeError> {
        if values.len() + 1 != dom.size() {
            return Err(LatticeError::NotAHom(format!(
                "expected {} values, got {}",
                dom.size() - 1,
                values.len()
            )));
        }
        if let Some(&v) = values.iter().find(|&&v| v >= ideals.count()) {
            return Err(LatticeError::NotAHom(format!(
                "ideal index {v} out of range"
            )));
        }
        let out = AntitoneHom { dom, ideals, values };
        for x in 1..out.dom.size() {
            for y in 1..out.dom.size() {
                let j = out.dom.join(x, y);
                if out.value(j) != out.ideals.intersection(out.value(x), out.value(y)) {
                    return Err(LatticeError::NotAHom(format!(
                        "value at {} ∨ {} is not the intersection of the values",
                        out.dom.name(x),
                        out.dom.name(y)
                    )));
                }
            }
        }
        Ok(out)
    }

    pub fn dom(&self) -> &FiniteJoinSemilattice {
        &self.dom
    }

    pub fn ideals(&self) -> &IdealLattice {
        &self.ideals
    }

    /// The ideal assigned to a nonzero element of the domain.
    pub fn value(&self, x: usize) -> usize {
        assert!(x >= 1, "antitone homs are defined on nonzero elements only");
        self.values[x - 1]
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// Pointwise comparison: ξ ≤ ζ when ξ(x) ⊆ ζ(x) for every nonzero x.
    pub fn pointwise_leq(&self, other: &AntitoneHom) -> bool {
        assert_eq!(self.dom, other.dom, "pointwise_leq needs a common domain");
        assert_eq!(
            self.ideals.base(),
            other.ideals.base(),
            "pointwise_leq needs a common ideal lattice"
        );
        self.values
            .iter()
            .zip(&other.values)
            .all(|(&v, &w)| self.ideals.leq(v, w))
    }
}

/// The bi-ideal of an antitone hom: ∇ together with the graph pairs.
pub fn epsilon(xi: &AntitoneHom) -> BiIdeal {
    let a = xi.dom();
    let b = xi.ideals().base();
    let mut members: Vec<(usize, usize)> = (0..a.size()).map(|x| (x, 0)).collect();
    members.extend((1..b.size()).map(|y| (0, y)));
    for x in 1..a.size() {
        let ideal = xi.ideals().member_bits(xi.value(x));
        members.extend(ideal.ones().filter(|&y| y != 0).map(|y| (x, y)));
    }
    members.sort_unstable();
    let out = BiIdeal::from_parts(Arc::new(a.clone()), Arc::new(b.clone()), members);
    debug_assert!(out.validate().is_ok());
    out
}

/// Recover the antitone hom from a bi-ideal: each nonzero section is an
/// ideal of the right factor.
pub fn epsilon_inv(h: &BiIdeal) -> AntitoneHom {
    let a = h.left();
    let ideals = Arc::new(ideal_lattice(h.right()));
    let mut values = Vec::with_capacity(a.size() - 1);
    for x in 1..a.size() {
        let section: Vec<usize> = h
            .members()
            .iter()
            .filter(|&&(u, _)| u == x)
            .map(|&(_, y)| y)
            .collect();
        let idx = ideals
            .index_of(&section)
            .expect("every section of a bi-ideal must be an ideal");
        values.push(idx);
    }
    AntitoneHom::with_arcs(Arc::new(a.clone()), ideals, values)
        .expect("the sections of a bi-ideal must form an antitone hom")
}

/// All join-to-intersection maps from `A − {0}` into `Id B`, in a fixed
/// deterministic order.
///
/// Candidates assign an ideal to every join-irreducible of `A` (odometer
/// order over ideal indices), extend to all of `A − {0}` by intersection
/// over the irreducibles below, and survive when the extension reproduces
/// the assignment and satisfies the hom law.
pub fn enumerate_antitone_homs(
    a: &FiniteJoinSemilattice,
    b: &FiniteJoinSemilattice,
) -> Result<Vec<AntitoneHom>, LatticeError> {
    let guard = size_guard();
    for s in [a.size(), b.size()] {
        if s > guard {
            return Err(LatticeError::SizeGuardExceeded { size: s, guard });
        }
    }
    let dom = Arc::new(a.clone());
    let ideals = Arc::new(ideal_lattice(b));
    let irr = a.join_irreducibles().to_vec();
    // irreducibles below each nonzero element, as positions into `irr`
    let below: Vec<Vec<usize>> = (1..a.size())
        .map(|x| {
            irr.iter()
                .enumerate()
                .filter(|&(_, &p)| a.leq(p, x))
                .map(|(k, _)| k)
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut assign = vec![0usize; irr.len()];
    loop {
        let mut values = Vec::with_capacity(a.size() - 1);
        for parts in &below {
            debug_assert!(!parts.is_empty());
            let mut v = assign[parts[0]];
            for &k in &parts[1..] {
                v = ideals.intersection(v, assign[k]);
            }
            values.push(v);
        }
        let fixed_point = irr
            .iter()
            .enumerate()
            .all(|(k, &p)| values[p - 1] == assign[k]);
        if fixed_point {
            if let Ok(xi) = AntitoneHom::with_arcs(dom.clone(), ideals.clone(), values) {
                out.push(xi);
            }
        }
        // odometer step over ideal indices
        let mut k = 0;
        loop {
            if k == assign.len() {
                return Ok(out);
            }
            assign[k] += 1;
            if assign[k] < ideals.count() {
                break;
            }
            assign[k] = 0;
            k += 1;
        }
    }
}
