//! The lattice of ideals (nonempty, hereditary, join-closed subsets) of a
//! finite join-semilattice.
//!
//! Ideals are enumerated honestly — by a down-set search over the carrier
//! with join-closure pruning — and the principal map `x ↦ (x]` is then
//! asserted to be a {∨,0}-isomorphism onto the result, which is the finite
//! case of the general theory. Meets in the ideal lattice are set
//! intersections; joins are least containing ideals.

use std::sync::Arc;

use crate::bits::Bits;
use crate::order::semilattice::FiniteJoinSemilattice;

#[derive(Debug, Clone)]
pub struct IdealLattice {
    base: Arc<FiniteJoinSemilattice>,
    /// Member sets, ordered by (cardinality, members lexicographically);
    /// index 0 is always {0}.
    ideals: Vec<Bits>,
    semilattice: Arc<FiniteJoinSemilattice>,
    principal: Vec<usize>,
}

/// Enumerate all ideals of `s` and return them as a lattice.
pub fn ideal_lattice(s: &FiniteJoinSemilattice) -> IdealLattice {
    let n = s.size();

    // Linear extension: sorting by down-set size refines the order.
    let mut extension: Vec<usize> = (0..n).collect();
    extension.sort_by_key(|&x| (s.down_set(x).count(), x));

    let mut found: Vec<Bits> = Vec::new();
    let mut current = Bits::new(n);
    fn rec(
        s: &FiniteJoinSemilattice,
        extension: &[usize],
        k: usize,
        current: &mut Bits,
        found: &mut Vec<Bits>,
    ) {
        if k == extension.len() {
            if !current.is_empty_set() {
                found.push(current.clone());
            }
            return;
        }
        let e = extension[k];
        // Excluding e is final: prune if two included elements join to it.
        let forced = current
            .ones()
            .any(|y| current.ones().any(|z| s.join(y, z) == e));
        if !forced {
            rec(s, extension, k + 1, current, found);
        }
        // Including e requires everything strictly below it already in.
        let mut strictly_below = s.down_set(e).clone();
        strictly_below.clear(e);
        if strictly_below.is_subset(current) {
            current.set(e);
            rec(s, extension, k + 1, current, found);
            current.clear(e);
        }
    }
    rec(s, &extension, 0, &mut current, &mut found);

    // Re-validate the three defining conditions directly.
    for ideal in &found {
        assert!(!ideal.is_empty_set(), "ideal must be nonempty");
        for x in ideal.ones() {
            assert!(
                s.down_set(x).is_subset(ideal),
                "ideal must be hereditary"
            );
            for y in ideal.ones() {
                assert!(ideal.get(s.join(x, y)), "ideal must be join-closed");
            }
        }
    }

    found.sort_by(|a, b| {
        (a.count(), a.ones().collect::<Vec<_>>())
            .cmp(&(b.count(), b.ones().collect::<Vec<_>>()))
    });

    let names: Vec<String> = found
        .iter()
        .map(|ideal| {
            let parts: Vec<&str> = ideal.ones().map(|x| s.name(x)).collect();
            format!("{{{}}}", parts.join(","))
        })
        .collect();
    // Join of two ideals: the least enumerated ideal containing their union.
    // Ideals are closed under intersection, so the first superset in
    // cardinality order is the least one.
    let m = found.len();
    let mut table = vec![0usize; m * m];
    for i in 0..m {
        for j in 0..m {
            let union = found[i].union(&found[j]);
            let k = found
                .iter()
                .position(|c| union.is_subset(c))
                .expect("an ideal contains every union (the whole carrier is one)");
            table[i * m + j] = k;
        }
    }
    let semilattice = Arc::new(
        FiniteJoinSemilattice::build(names, table)
            .expect("the ideal lattice must validate"),
    );

    // The principal map, asserted to be a {∨,0}-isomorphism.
    let principal: Vec<usize> = (0..n)
        .map(|x| {
            found
                .iter()
                .position(|c| c == s.down_set(x))
                .expect("every principal down-set is an ideal")
        })
        .collect();
    assert_eq!(m, n, "every ideal of a finite lattice is principal");
    assert_eq!(principal[0], 0, "principal must preserve zero");
    {
        let mut seen = vec![false; m];
        for &i in &principal {
            assert!(!std::mem::replace(&mut seen[i], true), "principal must be injective");
        }
    }
    for x in 0..n {
        for y in 0..n {
            assert_eq!(
                principal[s.join(x, y)],
                semilattice.join(principal[x], principal[y]),
                "principal must preserve joins"
            );
        }
    }

    IdealLattice { base: Arc::new(s.clone()), ideals: found, semilattice, principal }
}

impl IdealLattice {
    pub fn base(&self) -> &FiniteJoinSemilattice {
        &self.base
    }

    pub fn count(&self) -> usize {
        self.ideals.len()
    }

    /// Elements of the `i`-th ideal, ascending.
    pub fn members(&self, i: usize) -> Vec<usize> {
        self.ideals[i].ones().collect()
    }

    pub(crate) fn member_bits(&self, i: usize) -> &Bits {
        &self.ideals[i]
    }

    /// Index of the ideal with exactly these members, if any.
    pub fn index_of(&self, members: &[usize]) -> Option<usize> {
        let mut bits = Bits::new(self.base.size());
        for &x in members {
            if x >= self.base.size() {
                return None;
            }
            bits.set(x);
        }
        self.ideals.iter().position(|c| *c == bits)
    }

    /// Inclusion order between ideals; agrees with the semilattice view.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.ideals[i].is_subset(&self.ideals[j])
    }

    /// Meet = intersection, join = least containing ideal, as a validated
    /// join-semilattice whose indices match `members`.
    pub fn semilattice(&self) -> &FiniteJoinSemilattice {
        &self.semilattice
    }

    /// `x ↦ (x]` as ideal indices.
    pub fn principal(&self) -> &[usize] {
        &self.principal
    }

    /// Intersection of two ideals as an ideal index; asserted to agree with
    /// the meet of the semilattice view.
    pub fn intersection(&self, i: usize, j: usize) -> usize {
        let inter = self.ideals[i].intersect(&self.ideals[j]);
        let k = self
            .ideals
            .iter()
            .position(|c| *c == inter)
            .expect("ideals are closed under intersection");
        debug_assert_eq!(k, self.semilattice.meet(i, j));
        k
    }
}
