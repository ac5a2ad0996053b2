//! Box lattices `M3[L]` and `N5[L]`: the diamond and pentagon conditions
//! applied to triples over a lattice `L`.
//!
//! `M3[L]` collects the triples whose pairwise meets coincide; `N5[L]` the
//! triples `(x, y, z)` with `y ∧ z ≤ x ≤ z`. Under the componentwise order
//! each is a lattice, but joins are *not* componentwise: the join of two
//! boxes is the least member lying componentwise above both. These lattices
//! receive the canonical maps from `M3 ⊗ L` and `N5 ⊗ L` (see
//! [`crate::flat::flatness`]).

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::LatticeError;
use crate::order::distributive::Pattern;
use crate::order::semilattice::{FiniteJoinSemilattice, DERIVED_CAP};

pub struct TripleBox {
    pattern: Pattern,
    base: Arc<FiniteJoinSemilattice>,
    members: Vec<[usize; 3]>,
    index: HashMap<[usize; 3], usize>,
    semilattice: Arc<FiniteJoinSemilattice>,
}

/// Whether a triple satisfies the box condition for the pattern.
pub fn box_condition(pattern: Pattern, s: &FiniteJoinSemilattice, t: [usize; 3]) -> bool {
    let [x, y, z] = t;
    match pattern {
        Pattern::M3 => {
            let m = s.meet(x, y);
            s.meet(x, z) == m && s.meet(y, z) == m
        }
        Pattern::N5 => s.leq(s.meet(y, z), x) && s.leq(x, z),
    }
}

/// Build the box lattice over `s`. Errors when `|s|³` exceeds the derived
/// carrier cap (1024, i.e. `|s| ≤ 10`).
pub fn triple_box(
    pattern: Pattern,
    s: &FiniteJoinSemilattice,
) -> Result<TripleBox, LatticeError> {
    let n = s.size();
    let cube = n
        .checked_pow(3)
        .filter(|&c| c <= DERIVED_CAP)
        .ok_or(LatticeError::SizeGuardExceeded {
            size: n.saturating_pow(3),
            guard: DERIVED_CAP,
        })?;

    let unrank = |r: usize| [r / (n * n), r / n % n, r % n];
    let rank = |t: [usize; 3]| (t[0] * n + t[1]) * n + t[2];
    let cw_leq = |a: [usize; 3], b: [usize; 3]| {
        s.leq(a[0], b[0]) && s.leq(a[1], b[1]) && s.leq(a[2], b[2])
    };

    let members: Vec<[usize; 3]> = (0..cube)
        .map(unrank)
        .filter(|&t| box_condition(pattern, s, t))
        .collect();
    let index: HashMap<[usize; 3], usize> =
        members.iter().enumerate().map(|(i, &t)| (t, i)).collect();

    // Least member above a triple. A least one exists whenever the triple is
    // a componentwise join of members (that is exactly what makes the box a
    // lattice); a violation there would be a bug. Memoized because many pairs
    // share their componentwise join.
    let mut memo: HashMap<usize, usize> = HashMap::new();
    let mut least_above = |t: [usize; 3]| -> usize {
        *memo.entry(rank(t)).or_insert_with(|| {
            let mut best: Option<usize> = None;
            for (i, &m) in members.iter().enumerate() {
                if cw_leq(t, m) && best.is_none_or(|b| cw_leq(m, members[b])) {
                    best = Some(i);
                }
            }
            let best = best.expect("the top box lies above every triple");
            for &m in &members {
                if cw_leq(t, m) {
                    assert!(
                        cw_leq(members[best], m),
                        "the boxes above a join of boxes must have a least member"
                    );
                }
            }
            best
        })
    };

    let count = members.len();
    let mut table = vec![0usize; count * count];
    for i in 0..count {
        for j in 0..count {
            let cw = [
                s.join(members[i][0], members[j][0]),
                s.join(members[i][1], members[j][1]),
                s.join(members[i][2], members[j][2]),
            ];
            table[i * count + j] = least_above(cw);
        }
    }
    let names: Vec<String> = members
        .iter()
        .map(|t| {
            format!("({},{},{})", s.name(t[0]), s.name(t[1]), s.name(t[2]))
        })
        .collect();
    let semilattice = Arc::new(
        FiniteJoinSemilattice::build(names, table)
            .expect("a box lattice must validate as a join-semilattice"),
    );
    // The induced order must be the componentwise one.
    for i in 0..count {
        for j in 0..count {
            assert_eq!(
                semilattice.leq(i, j),
                cw_leq(members[i], members[j]),
                "box order must agree with the componentwise order"
            );
        }
    }
    Ok(TripleBox {
        pattern,
        base: Arc::new(s.clone()),
        members,
        index,
        semilattice,
    })
}

impl TripleBox {
    pub fn pattern(&self) -> Pattern {
        self.pattern
    }

    pub fn base(&self) -> &FiniteJoinSemilattice {
        &self.base
    }

    pub fn size(&self) -> usize {
        self.members.len()
    }

    /// Member triples in lexicographic rank order; index 0 is the zero box.
    pub fn members(&self) -> &[[usize; 3]] {
        &self.members
    }

    pub fn member(&self, i: usize) -> [usize; 3] {
        self.members[i]
    }

    pub fn index_of(&self, t: [usize; 3]) -> Option<usize> {
        self.index.get(&t).copied()
    }

    /// The box lattice as a plain join-semilattice, labeled by triples.
    pub fn semilattice(&self) -> &FiniteJoinSemilattice {
        &self.semilattice
    }

    pub(crate) fn semilattice_arc(&self) -> Arc<FiniteJoinSemilattice> {
        self.semilattice.clone()
    }

    pub fn join(&self, i: usize, j: usize) -> usize {
        self.semilattice.join(i, j)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diamond_box_over_the_two_chain() {
        // Triples over C2 with equal pairwise meets: the all-zero-meet ones
        // with at most one 1, plus the top.
        let c2 = FiniteJoinSemilattice::chain(2).unwrap();
        let b = triple_box(Pattern::M3, &c2).unwrap();
        let expect: Vec<[usize; 3]> =
            vec![[0, 0, 0], [0, 0, 1], [0, 1, 0], [1, 0, 0], [1, 1, 1]];
        assert_eq!(b.members(), &expect[..]);
        // joins of distinct atoms jump to the top
        let x = b.index_of([1, 0, 0]).unwrap();
        let y = b.index_of([0, 1, 0]).unwrap();
        assert_eq!(b.member(b.join(x, y)), [1, 1, 1]);
    }

    #[test]
    fn pentagon_box_over_the_two_chain() {
        // y ∧ z ≤ x ≤ z over C2. Note (0,1,1) is excluded: y ∧ z = 1 ≰ 0.
        let c2 = FiniteJoinSemilattice::chain(2).unwrap();
        let b = triple_box(Pattern::N5, &c2).unwrap();
        let expect: Vec<[usize; 3]> =
            vec![[0, 0, 0], [0, 0, 1], [0, 1, 0], [1, 0, 1], [1, 1, 1]];
        assert_eq!(b.members(), &expect[..]);
        // (0,1,0) ∨ (0,0,1): componentwise (0,1,1) is not a member, so the
        // box join jumps to the least member above, the top
        let x = b.index_of([0, 1, 0]).unwrap();
        let y = b.index_of([0, 0, 1]).unwrap();
        assert_eq!(b.index_of([0, 1, 1]), None);
        assert_eq!(b.member(b.join(x, y)), [1, 1, 1]);
    }

    #[test]
    fn box_sizes_over_small_lattices() {
        let m3 = FiniteJoinSemilattice::m3();
        let n5 = FiniteJoinSemilattice::n5();
        let c3 = FiniteJoinSemilattice::chain(3).unwrap();
        // frozen counts from an independent triple scan
        assert_eq!(triple_box(Pattern::M3, &m3).unwrap().size(), 50);
        assert_eq!(triple_box(Pattern::N5, &n5).unwrap().size(), 43);
        assert_eq!(triple_box(Pattern::M3, &c3).unwrap().size(), 12);
        assert_eq!(triple_box(Pattern::N5, &c3).unwrap().size(), 13);
    }

    #[test]
    fn cap_is_enforced() {
        let c11 = FiniteJoinSemilattice::chain(11).unwrap();
        assert!(matches!(
            triple_box(Pattern::M3, &c11),
            Err(LatticeError::SizeGuardExceeded { size: 1331, guard: 1024 })
        ));
    }

    #[test]
    fn box_join_is_not_componentwise_in_general() {
        // Pentagon box over N5 (indices 0, a=1, b=2, c=3, top=4). The
        // triples (0,a,b) and (0,b,c) are members since a∧b = b∧c = 0, but
        // their componentwise join (0, a∨b, b∨c) = (0,1,1) has y ∧ z = 1 ≰ 0
        // and is no member; the box join jumps to the top triple.
        let n5 = FiniteJoinSemilattice::n5();
        let b = triple_box(Pattern::N5, &n5).unwrap();
        let u = b.index_of([0, 1, 2]).unwrap();
        let v = b.index_of([0, 2, 3]).unwrap();
        assert_eq!(b.index_of([0, 4, 4]), None);
        assert_eq!(b.member(b.join(u, v)), [4, 4, 4]);
    }
}
