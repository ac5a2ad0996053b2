//! Bi-ideals of a product of two finite join-semilattices.
//!
//! For structures `A` and `B`, the base set ∇ consists of all pairs with at
//! least one zero coordinate. The lateral join of two pairs is defined when
//! they share a coordinate, and is then the componentwise join. A bi-ideal
//! is a subset of `A × B` that contains ∇, is hereditary (downward closed
//! componentwise) and is closed under lateral joins. Bi-ideals ordered by
//! inclusion form the tensor product of `A` and `B` (see
//! [`crate::tensor::product`]).

use std::sync::Arc;

use crate::bits::Bits;
use crate::error::LatticeError;
use crate::order::semilattice::FiniteJoinSemilattice;

/// A bi-ideal, stored as its sorted list of member pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiIdeal {
    left: Arc<FiniteJoinSemilattice>,
    right: Arc<FiniteJoinSemilattice>,
    members: Vec<(usize, usize)>,
}

impl BiIdeal {
    /// Validate an explicit member list as a bi-ideal.
    pub fn new(
        left: &FiniteJoinSemilattice,
        right: &FiniteJoinSemilattice,
        mut members: Vec<(usize, usize)>,
    ) -> Result<Self, LatticeError> {
        members.sort_unstable();
        members.dedup();
        let out = BiIdeal {
            left: Arc::new(left.clone()),
            right: Arc::new(right.clone()),
            members,
        };
        out.validate()?;
        Ok(out)
    }

    pub(crate) fn from_parts(
        left: Arc<FiniteJoinSemilattice>,
        right: Arc<FiniteJoinSemilattice>,
        members: Vec<(usize, usize)>,
    ) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]), "members must be sorted");
        BiIdeal { left, right, members }
    }

    pub fn left(&self) -> &FiniteJoinSemilattice {
        &self.left
    }

    pub fn right(&self) -> &FiniteJoinSemilattice {
        &self.right
    }

    /// Member pairs in lexicographic order.
    pub fn members(&self) -> &[(usize, usize)] {
        &self.members
    }

    pub fn contains(&self, x: usize, y: usize) -> bool {
        self.members.binary_search(&(x, y)).is_ok()
    }

    pub fn is_subset(&self, other: &BiIdeal) -> bool {
        self.members.iter().all(|&(x, y)| other.contains(x, y))
    }

    /// Check the three defining conditions directly.
    pub fn validate(&self) -> Result<(), LatticeError> {
        let (a, b) = (&self.left, &self.right);
        for &(x, y) in &self.members {
            if x >= a.size() || y >= b.size() {
                return Err(LatticeError::NotABiIdeal(format!(
                    "pair ({x},{y}) out of range"
                )));
            }
        }
        for x in 0..a.size() {
            if !self.contains(x, 0) {
                return Err(LatticeError::NotABiIdeal(format!(
                    "missing base pair ({},0)",
                    a.name(x)
                )));
            }
        }
        for y in 0..b.size() {
            if !self.contains(0, y) {
                return Err(LatticeError::NotABiIdeal(format!(
                    "missing base pair (0,{})",
                    b.name(y)
                )));
            }
        }
        for &(x, y) in &self.members {
            for u in a.down_set(x).ones() {
                for v in b.down_set(y).ones() {
                    if !self.contains(u, v) {
                        return Err(LatticeError::NotABiIdeal(format!(
                            "not hereditary at ({},{})",
                            a.name(x),
                            a.name(y)
                        )));
                    }
                }
            }
        }
        for &p0 in &self.members {
            for &p1 in &self.members {
                if let Some((jx, jy)) = lateral_join(a, b, p0, p1) {
                    if !self.contains(jx, jy) {
                        return Err(LatticeError::NotABiIdeal(format!(
                            "not closed under the lateral join of ({},{}) and ({},{})",
                            a.name(p0.0),
                            b.name(p0.1),
                            a.name(p1.0),
                            b.name(p1.1)
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Member pairs maximal under the componentwise order.
    pub fn maximal_members(&self) -> Vec<(usize, usize)> {
        self.members
            .iter()
            .copied()
            .filter(|&(x, y)| {
                !self.members.iter().any(|&(u, v)| {
                    (u, v) != (x, y) && self.left.leq(x, u) && self.right.leq(y, v)
                })
            })
            .collect()
    }

    /// Render as a join of pure tensors of the maximal nonzero pairs, or
    /// `∇` for the bottom bi-ideal. Distinct bi-ideals have distinct
    /// renderings, so this doubles as an element label.
    pub fn tensor_expr(&self) -> String {
        let gens: Vec<String> = self
            .maximal_members()
            .into_iter()
            .filter(|&(x, y)| x != 0 && y != 0)
            .map(|(x, y)| format!("{}⊗{}", self.left.name(x), self.right.name(y)))
            .collect();
        if gens.is_empty() {
            "∇".to_owned()
        } else {
            gens.join(" ∨ ")
        }
    }

    /// The same bi-ideal viewed over `B × A`.
    pub fn transposed(&self) -> BiIdeal {
        let mut members: Vec<(usize, usize)> =
            self.members.iter().map(|&(x, y)| (y, x)).collect();
        members.sort_unstable();
        BiIdeal {
            left: self.right.clone(),
            right: self.left.clone(),
            members,
        }
    }
}

/// The base set ∇ = (A × {0}) ∪ ({0} × B), the least bi-ideal.
pub fn nabla(a: &FiniteJoinSemilattice, b: &FiniteJoinSemilattice) -> BiIdeal {
    let mut members: Vec<(usize, usize)> = (0..a.size()).map(|x| (x, 0)).collect();
    members.extend((1..b.size()).map(|y| (0, y)));
    members.sort_unstable();
    BiIdeal::from_parts(Arc::new(a.clone()), Arc::new(b.clone()), members)
}

/// The lateral join of two pairs: defined when they agree in a coordinate,
/// and then equal to the componentwise join.
pub fn lateral_join(
    a: &FiniteJoinSemilattice,
    b: &FiniteJoinSemilattice,
    p0: (usize, usize),
    p1: (usize, usize),
) -> Option<(usize, usize)> {
    if p0.0 == p1.0 || p0.1 == p1.1 {
        Some((a.join(p0.0, p1.0), b.join(p0.1, p1.1)))
    } else {
        None
    }
}

/// The least bi-ideal containing the seed pairs.
pub fn bi_ideal_closure(
    a: &FiniteJoinSemilattice,
    b: &FiniteJoinSemilattice,
    seed: &[(usize, usize)],
) -> BiIdeal {
    let ctx = GridCtx::new(Arc::new(a.clone()), Arc::new(b.clone()));
    let mut mask = Bits::new(ctx.cells);
    for &(x, y) in seed {
        assert!(x < a.size() && y < b.size(), "seed pair out of range");
        mask.set(ctx.cell(x, y));
    }
    ctx.bi_ideal(&ctx.close(&mask))
}

/// The pure tensor `a ⊗ b`: ∇ together with the pairs below `(x, y)`.
pub fn pure_tensor(
    a: &FiniteJoinSemilattice,
    b: &FiniteJoinSemilattice,
    x: usize,
    y: usize,
) -> BiIdeal {
    bi_ideal_closure(a, b, &[(x, y)])
}

/// Shared machinery for closing subsets of an `A × B` grid. Cells are
/// indexed by `x * |B| + y`, so ascending cell order is lexicographic pair
/// order.
pub(crate) struct GridCtx {
    pub left: Arc<FiniteJoinSemilattice>,
    pub right: Arc<FiniteJoinSemilattice>,
    pub cells: usize,
    down: Vec<Bits>,
    nabla_mask: Bits,
}

impl GridCtx {
    pub fn new(left: Arc<FiniteJoinSemilattice>, right: Arc<FiniteJoinSemilattice>) -> Self {
        let (an, bn) = (left.size(), right.size());
        let cells = an * bn;
        let mut down = Vec::with_capacity(cells);
        for x in 0..an {
            for y in 0..bn {
                let mut d = Bits::new(cells);
                for u in left.down_set(x).ones() {
                    for v in right.down_set(y).ones() {
                        d.set(u * bn + v);
                    }
                }
                down.push(d);
            }
        }
        let mut nabla_mask = Bits::new(cells);
        for x in 0..an {
            nabla_mask.set(x * bn);
        }
        for y in 0..bn {
            nabla_mask.set(y);
        }
        GridCtx { left, right, cells, down, nabla_mask }
    }

    pub fn cell(&self, x: usize, y: usize) -> usize {
        x * self.right.size() + y
    }

    pub fn nabla_mask(&self) -> &Bits {
        &self.nabla_mask
    }

    /// Close `seed ∪ ∇` under heredity and lateral joins.
    pub fn close(&self, seed: &Bits) -> Bits {
        let (an, bn) = (self.left.size(), self.right.size());
        let mut m = self.nabla_mask.clone();
        m.union_with(seed);
        let mut expanded = Bits::new(self.cells);
        loop {
            let mut changed = false;
            for c in 0..self.cells {
                if m.get(c) && !expanded.get(c) {
                    m.union_with(&self.down[c]);
                    expanded.set(c);
                    changed = true;
                }
            }
            // lateral joins within a row (same left coordinate)
            for x in 0..an {
                let ys: Vec<usize> = (0..bn).filter(|&y| m.get(self.cell(x, y))).collect();
                for i in 0..ys.len() {
                    for j in 0..i {
                        let c = self.cell(x, self.right.join(ys[i], ys[j]));
                        if !m.get(c) {
                            m.set(c);
                            changed = true;
                        }
                    }
                }
            }
            // and within a column (same right coordinate)
            for y in 0..bn {
                let xs: Vec<usize> = (0..an).filter(|&x| m.get(self.cell(x, y))).collect();
                for i in 0..xs.len() {
                    for j in 0..i {
                        let c = self.cell(self.left.join(xs[i], xs[j]), y);
                        if !m.get(c) {
                            m.set(c);
                            changed = true;
                        }
                    }
                }
            }
            if !changed {
                return m;
            }
        }
    }

    /// Materialize a closed mask as a `BiIdeal` (debug-asserted valid).
    pub fn bi_ideal(&self, mask: &Bits) -> BiIdeal {
        let bn = self.right.size();
        let members: Vec<(usize, usize)> =
            mask.ones().map(|c| (c / bn, c % bn)).collect();
        let out =
            BiIdeal::from_parts(self.left.clone(), self.right.clone(), members);
        debug_assert!(out.validate().is_ok());
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m3() -> FiniteJoinSemilattice {
        FiniteJoinSemilattice::m3()
    }

    #[test]
    fn nabla_shapes() {
        let c2 = FiniteJoinSemilattice::chain(2).unwrap();
        assert_eq!(nabla(&c2, &c2).members(), &[(0, 0), (0, 1), (1, 0)]);
        let c1 = FiniteJoinSemilattice::chain(1).unwrap();
        // against a singleton, ∇ is the whole grid A × {0}
        assert_eq!(nabla(&m3(), &c1).members().len(), 5);
        assert_eq!(nabla(&m3(), &m3()).members().len(), 9);
    }

    #[test]
    fn lateral_join_needs_a_shared_coordinate() {
        let s = m3();
        let (p, q, r) = (1, 2, 3);
        // shared left coordinate: join the right ones
        assert_eq!(lateral_join(&s, &s, (p, q), (p, r)), Some((p, 4)));
        // idempotent
        assert_eq!(lateral_join(&s, &s, (p, q), (p, q)), Some((p, q)));
        // disjoint in both coordinates: undefined
        assert_eq!(lateral_join(&s, &s, (p, q), (q, r)), None);
    }

    #[test]
    fn closure_of_empty_seed_is_nabla() {
        let s = m3();
        assert_eq!(bi_ideal_closure(&s, &s, &[]), nabla(&s, &s));
    }

    #[test]
    fn closure_of_single_pair_is_pure_tensor() {
        let s = m3();
        let (p, q) = (1, 2);
        let pt = pure_tensor(&s, &s, p, q);
        assert_eq!(bi_ideal_closure(&s, &s, &[(p, q)]), pt);
        // ∇ plus the single nonzero pair below (p, q)
        assert_eq!(pt.members().len(), 10);
        let nonzero: Vec<(usize, usize)> = pt
            .members()
            .iter()
            .copied()
            .filter(|&(x, y)| x != 0 && y != 0)
            .collect();
        assert_eq!(nonzero, vec![(p, q)]);
        assert_eq!(pt.tensor_expr(), "p⊗q");
    }

    #[test]
    fn pure_tensor_with_a_zero_coordinate_is_nabla() {
        let s = m3();
        assert_eq!(pure_tensor(&s, &s, 0, 3), nabla(&s, &s));
        assert_eq!(pure_tensor(&s, &s, 3, 0), nabla(&s, &s));
        assert_eq!(nabla(&s, &s).tensor_expr(), "∇");
    }

    #[test]
    fn full_pure_tensor_is_everything() {
        let c2 = FiniteJoinSemilattice::chain(2).unwrap();
        let top = pure_tensor(&c2, &c2, 1, 1);
        assert_eq!(top.members().len(), 4);
        let s = m3();
        assert_eq!(pure_tensor(&s, &s, 4, 4).members().len(), 25);
    }

    #[test]
    fn diagonal_seed_closes_without_new_pairs() {
        // No lateral join applies to distinct diagonal atom pairs, so the
        // closure is ∇ plus the three seeds: 12 members, strictly below 1⊗1.
        let s = m3();
        let diag = bi_ideal_closure(&s, &s, &[(1, 1), (2, 2), (3, 3)]);
        assert_eq!(diag.members().len(), 12);
        let nonzero: Vec<_> = diag
            .members()
            .iter()
            .copied()
            .filter(|&(x, y)| x != 0 && y != 0)
            .collect();
        assert_eq!(nonzero, vec![(1, 1), (2, 2), (3, 3)]);
        let top = pure_tensor(&s, &s, 4, 4);
        assert!(diag.is_subset(&top) && diag != top);
        assert_eq!(diag.tensor_expr(), "p⊗p ∨ q⊗q ∨ r⊗r");
    }

    #[test]
    fn closure_applies_lateral_joins() {
        // (p,q) and (p,r) share the left coordinate: (p, q∨r) = (p, 1) joins.
        let s = m3();
        let c = bi_ideal_closure(&s, &s, &[(1, 2), (1, 3)]);
        assert!(c.contains(1, 4));
        assert_eq!(c.tensor_expr(), "p⊗1");
    }

    #[test]
    fn validate_rejects_broken_sets() {
        let s = m3();
        let nab = nabla(&s, &s);
        // missing a base pair
        let mut members = nab.members().to_vec();
        members.retain(|&p| p != (0, 3));
        assert!(BiIdeal::new(&s, &s, members).is_err());
        // not hereditary: (1,1) without (0,1)... build from scratch
        let bad = vec![(0, 0), (1, 0), (2, 0), (3, 0), (4, 0), (1, 1)];
        assert!(BiIdeal::new(&s, &s, bad).is_err());
        // not laterally closed: (p,q) and (p,r) without (p,1)
        let mut members = nab.members().to_vec();
        members.extend([(1, 2), (1, 3)]);
        assert!(BiIdeal::new(&s, &s, members).is_err());
        // and the closure of the same seed is fine
        assert!(bi_ideal_closure(&s, &s, &[(1, 2), (1, 3)]).validate().is_ok());
    }

    #[test]
    fn transpose_swaps_coordinates() {
        let s = m3();
        let c2 = FiniteJoinSemilattice::chain(2).unwrap();
        let pt = pure_tensor(&s, &c2, 3, 1);
        let t = pt.transposed();
        assert!(t.contains(1, 3));
        assert!(t.validate().is_ok());
        assert_eq!(t.transposed(), pt);
    }
}
