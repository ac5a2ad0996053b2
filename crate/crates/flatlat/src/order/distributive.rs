//! Distributivity testing by three independent routes, which must agree:
//!
//! 1. the refinement property (`a ≤ b0 ∨ b1` implies `a = a0 ∨ a1` with
//!    `a0 ≤ b0`, `a1 ≤ b1`),
//! 2. the lattice distributive law in the ideal lattice,
//! 3. absence of diamond (M3) and pentagon (N5) sublattices in the ideal
//!    lattice.
//!
//! Disagreement between the routes is an implementation bug and panics.

use crate::order::ideal::ideal_lattice;
use crate::order::semilattice::FiniteJoinSemilattice;

/// Forbidden sublattice shapes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pattern {
    /// Diamond: three incomparable elements pairwise joining to a common top
    /// and meeting in a common bottom.
    M3,
    /// Pentagon: a two-step chain and an incomparable element with common
    /// joins and meets.
    N5,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistributivityReport {
    pub distributive: bool,
    /// Lexicographically least failing triple `(a, b0, b1)` of the
    /// refinement property, when not distributive.
    pub witness: Option<(usize, usize, usize)>,
}

/// Test the refinement property; returns the least failing triple.
fn refinement_failure(s: &FiniteJoinSemilattice) -> Option<(usize, usize, usize)> {
    let n = s.size();
    for a in 0..n {
        for b0 in 0..n {
            for b1 in 0..n {
                if !s.leq(a, s.join(b0, b1)) {
                    continue;
                }
                let refines = (0..n)
                    .filter(|&a0| s.leq(a0, b0))
                    .any(|a0| (0..n).any(|a1| s.leq(a1, b1) && s.join(a0, a1) == a));
                if !refines {
                    return Some((a, b0, b1));
                }
            }
        }
    }
    None
}

/// The lattice distributive law `x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z)` over every
/// triple.
fn lattice_distributive(l: &FiniteJoinSemilattice) -> bool {
    let n = l.size();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z)) {
                    return false;
                }
            }
        }
    }
    true
}

/// Find a sublattice copy of the pattern in `l`, as the lexicographically
/// least tuple `(o, x, y, z, i)` of element indices, or `None`.
///
/// For `M3`: `o < x, y, z < i` with all pairwise joins of `{x,y,z}` equal to
/// `i` and all pairwise meets equal to `o`. For `N5`: `o < x < z < i`,
/// `o < y < i`, `x ∨ y = z ∨ y = i` and `x ∧ y = z ∧ y = o`.
pub fn find_sublattice_copy(
    l: &FiniteJoinSemilattice,
    pattern: Pattern,
) -> Option<[usize; 5]> {
    let n = l.size();
    for o in 0..n {
        for x in 0..n {
            if !l.lt(o, x) {
                continue;
            }
            for y in 0..n {
                if !l.lt(o, y) {
                    continue;
                }
                for z in 0..n {
                    for i in 0..n {
                        let found = match pattern {
                            Pattern::M3 => {
                                l.lt(o, z)
                                    && l.lt(x, i)
                                    && l.lt(y, i)
                                    && l.lt(z, i)
                                    && l.join(x, y) == i
                                    && l.join(x, z) == i
                                    && l.join(y, z) == i
                                    && l.meet(x, y) == o
                                    && l.meet(x, z) == o
                                    && l.meet(y, z) == o
                            }
                            Pattern::N5 => {
                                l.lt(x, z)
                                    && l.lt(z, i)
                                    && l.lt(y, i)
                                    && l.join(x, y) == i
                                    && l.join(z, y) == i
                                    && l.meet(x, y) == o
                                    && l.meet(z, y) == o
                            }
                        };
                        if found {
                            return Some([o, x, y, z, i]);
                        }
                    }
                }
            }
        }
    }
    None
}

/// Decide distributivity by all three routes and assert their agreement.
pub fn is_distributive(s: &FiniteJoinSemilattice) -> DistributivityReport {
    let witness = refinement_failure(s);
    let by_refinement = witness.is_none();

    let idl = ideal_lattice(s);
    let by_ideal_law = lattice_distributive(idl.semilattice());
    let by_forbidden = find_sublattice_copy(idl.semilattice(), Pattern::M3).is_none()
        && find_sublattice_copy(idl.semilattice(), Pattern::N5).is_none();

    assert!(
        by_refinement == by_ideal_law && by_ideal_law == by_forbidden,
        "distributivity tests disagree on `{:?}`: refinement={by_refinement} \
         ideal-law={by_ideal_law} forbidden-sublattice={by_forbidden}",
        s
    );
    DistributivityReport { distributive: by_refinement, witness }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chains_and_powersets_are_distributive() {
        for s in [
            FiniteJoinSemilattice::chain(1).unwrap(),
            FiniteJoinSemilattice::chain(6).unwrap(),
            FiniteJoinSemilattice::powerset(3).unwrap(),
        ] {
            let report = is_distributive(&s);
            assert!(report.distributive);
            assert_eq!(report.witness, None);
        }
    }

    #[test]
    fn m3_fails_with_least_triple() {
        let m3 = FiniteJoinSemilattice::m3();
        let report = is_distributive(&m3);
        assert!(!report.distributive);
        // p ≤ q ∨ r but no join of elements below q and below r equals p
        assert_eq!(report.witness, Some((1, 2, 3)));
    }

    #[test]
    fn n5_fails_with_least_triple() {
        let n5 = FiniteJoinSemilattice::n5();
        let report = is_distributive(&n5);
        assert!(!report.distributive);
        // a ≤ b ∨ c with no refinement
        assert_eq!(report.witness, Some((1, 2, 3)));
    }

    #[test]
    fn diamond_found_in_itself() {
        let m3 = FiniteJoinSemilattice::m3();
        assert_eq!(find_sublattice_copy(&m3, Pattern::M3), Some([0, 1, 2, 3, 4]));
        assert_eq!(find_sublattice_copy(&m3, Pattern::N5), None);
    }

    #[test]
    fn pentagon_found_in_itself() {
        let n5 = FiniteJoinSemilattice::n5();
        // o=0, x=c, y=b, z=a, i=1 in index terms
        assert_eq!(find_sublattice_copy(&n5, Pattern::N5), Some([0, 3, 2, 1, 4]));
        assert_eq!(find_sublattice_copy(&n5, Pattern::M3), None);
    }

    #[test]
    fn powerset_has_no_forbidden_sublattice()  {
        let p3 = FiniteJoinSemilattice::powerset(3).unwrap();
        assert_eq!(find_sublattice_copy(&p3, Pattern::M3), None);
        assert_eq!(find_sublattice_copy(&p3, Pattern::N5), None);
    }

    #[test]
    fn refinement_holds_where_claimed() {
        // The top of M3 *does* refine over (p, q): the failure is at an atom.
        let m3 = FiniteJoinSemilattice::m3();
        let (p, q, top) = (1, 2, 4);
        assert!(m3.leq(top, m3.join(p, q)));
        assert_eq!(m3.join(p, q), top); // refinement a0=p, a1=q works
    }
}
