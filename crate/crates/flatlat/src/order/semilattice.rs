//! Finite {∨,0}-semilattices.
//!
//! A finite join-semilattice with least element 0 is automatically a lattice:
//! the top is the join of everything and the meet of `x` and `y` is the join
//! of their (nonempty) set of common lower bounds. Construction therefore
//! also derives and caches the meet table, the cover relation and the set of
//! join-irreducible elements, and every constructor validates the full law
//! sheet before returning.
//!
//! Index 0 is always the least element; all other indices are arbitrary but
//! fixed, and every derived quantity is computed deterministically from them.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::bits::Bits;
use crate::error::LatticeError;

/// Largest carrier a derived cube (direct power or box) may produce; keeps
/// the dense join tables of derived structures within a few megabytes.
pub(crate) const DERIVED_CAP: usize = 1024;

/// Size guard applied by input constructors: structures larger than this are
/// rejected so that downstream (exponential) enumerations fail early. The
/// default of 64 can be overridden with the `FLATLAT_SIZE_GUARD` environment
/// variable.
pub fn size_guard() -> usize {
    static GUARD: OnceLock<usize> = OnceLock::new();
    *GUARD.get_or_init(|| {
        std::env::var("FLATLAT_SIZE_GUARD")
            .ok()
            .and_then(|v| v.parse().ok())
            .unwrap_or(64)
    })
}

/// A finite join-semilattice with least element, represented by dense join
/// and meet tables over element indices `0..n`.
#[derive(Clone)]
pub struct FiniteJoinSemilattice {
    names: Vec<String>,
    join: Vec<usize>,
    meet: Vec<usize>,
    down: Vec<Bits>,
    up: Vec<Bits>,
    covers: Vec<(usize, usize)>,
    irreducibles: Vec<usize>,
}

impl PartialEq for FiniteJoinSemilattice {
    fn eq(&self, other: &Self) -> bool {
        // The derived tables are functions of (names, join).
        self.names == other.names && self.join == other.join
    }
}

impl Eq for FiniteJoinSemilattice {}

impl std::hash::Hash for FiniteJoinSemilattice {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.names.hash(state);
        self.join.hash(state);
    }
}

impl std::fmt::Debug for FiniteJoinSemilattice {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteJoinSemilattice")
            .field("names", &self.names)
            .field("covers", &self.covers)
            .finish()
    }
}

impl FiniteJoinSemilattice {
    /// Build and validate a structure from an explicit join table
    /// (`table[x * n + y]` is `x ∨ y`). Checks the size guard, label
    /// distinctness, the semilattice laws, that index 0 is a neutral least
    /// element, and that every pair of elements has a meet.
    pub fn from_join_table(
        names: Vec<String>,
        table: Vec<usize>,
    ) -> Result<Self, LatticeError> {
        let guard = size_guard();
        if names.len() > guard {
            return Err(LatticeError::SizeGuardExceeded { size: names.len(), guard });
        }
        Self::build(names, table)
    }

    /// Validated construction without the input-size guard, for structures
    /// derived inside the crate (tensor semilattices, boxes, powers).
    pub(crate) fn build(names: Vec<String>, join: Vec<usize>) -> Result<Self, LatticeError> {
        let n = names.len();
        if n == 0 {
            return Err(LatticeError::NotASemilattice("empty carrier".into()));
        }
        {
            let mut seen = std::collections::HashSet::new();
            for name in &names {
                if name.is_empty() {
                    return Err(LatticeError::NotASemilattice("empty label".into()));
                }
                if !seen.insert(name) {
                    return Err(LatticeError::DuplicateLabel(name.clone()));
                }
            }
        }
        if join.len() != n * n {
            return Err(LatticeError::NotASemilattice(format!(
                "join table has {} entries, expected {}",
                join.len(),
                n * n
            )));
        }
        if let Some(&bad) = join.iter().find(|&&e| e >= n) {
            return Err(LatticeError::NotASemilattice(format!(
                "join table entry {bad} out of range"
            )));
        }
        let at = |x: usize, y: usize| join[x * n + y];
        for x in 0..n {
            if at(x, x) != x {
                return Err(LatticeError::NotASemilattice(format!(
                    "not idempotent at `{}`",
                    names[x]
                )));
            }
            if at(0, x) != x || at(x, 0) != x {
                return Err(LatticeError::NotASemilattice(format!(
                    "index 0 is not neutral at `{}`",
                    names[x]
                )));
            }
            for y in 0..n {
                if at(x, y) != at(y, x) {
                    return Err(LatticeError::NotASemilattice(format!(
                        "not commutative at `{}`, `{}`",
                        names[x], names[y]
                    )));
                }
            }
        }

        // Induced order: x ≤ y iff x ∨ y = y. Reflexivity follows from
        // idempotence and antisymmetry from commutativity.
        let mut down = vec![Bits::new(n); n];
        let mut up = vec![Bits::new(n); n];
        for x in 0..n {
            for y in 0..n {
                if at(x, y) == y {
                    down[y].set(x);
                    up[x].set(y);
                }
            }
        }
        for y in 0..n {
            for x in down[y].clone().ones() {
                if !down[x].is_subset(&down[y]) {
                    return Err(LatticeError::NotASemilattice(format!(
                        "induced order not transitive below `{}`",
                        names[y]
                    )));
                }
            }
        }
        // Every join must be the unique least upper bound: everything above
        // both operands is above the join. Together with transitivity this
        // implies associativity, which is additionally scanned in full for
        // input-sized carriers below.
        for x in 0..n {
            for y in 0..n {
                let j = at(x, y);
                if !up[x].get(j) || !up[y].get(j) || up[j] != up[x].intersect(&up[y]) {
                    return Err(LatticeError::NotASemilattice(format!(
                        "`{}` ∨ `{}` is not a least upper bound",
                        names[x], names[y]
                    )));
                }
            }
        }
        if n <= 64 {
            for x in 0..n {
                for y in 0..n {
                    for z in 0..n {
                        if at(at(x, y), z) != at(x, at(y, z)) {
                            return Err(LatticeError::NotASemilattice(format!(
                                "not associative at `{}`, `{}`, `{}`",
                                names[x], names[y], names[z]
                            )));
                        }
                    }
                }
            }
        }

        // Meets: the join of the common lower bounds, which must itself be a
        // common lower bound (principality of the intersection).
        let mut meet = vec![0usize; n * n];
        for x in 0..n {
            for y in 0..x + 1 {
                let lows = down[x].intersect(&down[y]);
                let mut m = 0;
                for z in lows.ones() {
                    m = at(m, z);
                }
                if down[m] != lows {
                    return Err(LatticeError::NotASemilattice(format!(
                        "`{}` and `{}` have no meet",
                        names[x], names[y]
                    )));
                }
                meet[x * n + y] = m;
                meet[y * n + x] = m;
            }
        }

        // Covers: x ─ y iff the closed interval [x, y] is exactly {x, y}.
        let mut covers = Vec::new();
        for x in 0..n {
            for y in 0..n {
                if x != y && up[x].get(y) && down[y].intersect(&up[x]).count() == 2 {
                    covers.push((x, y));
                }
            }
        }
        covers.sort_unstable();

        // Join-irreducible elements: nonzero x that are not the join of the
        // elements strictly below them.
        let mut irreducibles = Vec::new();
        for x in 1..n {
            let mut j = 0;
            for z in down[x].ones() {
                if z != x {
                    j = at(j, z);
                }
            }
            if j != x {
                irreducibles.push(x);
            }
        }

        Ok(FiniteJoinSemilattice { names, join, meet, down, up, covers, irreducibles })
    }

    /// Build a structure from labels and generating pairs of its order
    /// relation. The pairs may be any generators of ≤, not only covers; the
    /// reflexive-transitive closure is taken, the least element is moved to
    /// index 0 (other labels keep their declared order) and the derived cover
    /// relation is asserted to round-trip to the transitive reduction of the
    /// input.
    pub fn from_covers(
        names: &[impl AsRef<str>],
        pairs: &[(impl AsRef<str>, impl AsRef<str>)],
    ) -> Result<Self, LatticeError> {
        let guard = size_guard();
        if names.len() > guard {
            return Err(LatticeError::SizeGuardExceeded { size: names.len(), guard });
        }
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_owned()).collect();
        let n = names.len();
        if n == 0 {
            return Err(LatticeError::NoLeastElement);
        }
        let mut index = HashMap::new();
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(LatticeError::NotASemilattice("empty label".into()));
            }
            if index.insert(name.clone(), i).is_some() {
                return Err(LatticeError::DuplicateLabel(name.clone()));
            }
        }
        let mut succ = vec![Bits::new(n); n];
        for (a, b) in pairs {
            let &x = index
                .get(a.as_ref())
                .ok_or_else(|| LatticeError::UnknownLabel(a.as_ref().to_owned()))?;
            let &y = index
                .get(b.as_ref())
                .ok_or_else(|| LatticeError::UnknownLabel(b.as_ref().to_owned()))?;
            succ[x].set(y);
        }

        // Reflexive-transitive closure by saturation.
        let mut up = vec![Bits::new(n); n];
        for (x, u) in up.iter_mut().enumerate() {
            u.set(x);
        }
        loop {
            let mut changed = false;
            for x in 0..n {
                let mut next = up[x].clone();
                for y in up[x].ones() {
                    next.union_with(&succ[y]);
                }
                for y in next.clone().ones() {
                    next.union_with(&up[y]);
                }
                if next != up[x] {
                    up[x] = next;
                    changed = true;
                }
            }
            if !changed {
                break;
            }
        }
        for x in 0..n {
            for y in up[x].clone().ones() {
                if y != x && up[y].get(x) {
                    return Err(LatticeError::CycleDetected(names[x].clone()));
                }
            }
        }

        let least = (0..n)
            .find(|&z| (0..n).all(|x| up[z].get(x)))
            .ok_or(LatticeError::NoLeastElement)?;

        // Reindex: least element first, everything else in declaration order.
        let mut order: Vec<usize> = vec![least];
        order.extend((0..n).filter(|&i| i != least));
        let leq = |x: usize, y: usize| up[order[x]].get(order[y]);

        let mut table = vec![0usize; n * n];
        for x in 0..n {
            for y in 0..n {
                let ubs: Vec<usize> =
                    (0..n).filter(|&z| leq(x, z) && leq(y, z)).collect();
                let lub = ubs.iter().copied().find(|&u| ubs.iter().all(|&v| leq(u, v)));
                match lub {
                    Some(u) => table[x * n + y] = u,
                    None => {
                        return Err(LatticeError::JoinMissing(
                            names[order[x]].clone(),
                            names[order[y]].clone(),
                        ))
                    }
                }
            }
        }
        let reordered: Vec<String> = order.iter().map(|&i| names[i].clone()).collect();
        let built = Self::build(reordered, table)?;

        // The derived cover relation must equal the transitive reduction of
        // the declared relation.
        let mut reduction: Vec<(usize, usize)> = Vec::new();
        for x in 0..n {
            for y in 0..n {
                let (ox, oy) = (order[x], order[y]);
                if x != y
                    && up[ox].get(oy)
                    && !(0..n).any(|z| z != ox && z != oy && up[ox].get(z) && up[z].get(oy))
                {
                    reduction.push((x, y));
                }
            }
        }
        reduction.sort_unstable();
        assert_eq!(
            built.covers, reduction,
            "cover relation does not round-trip through construction"
        );
        Ok(built)
    }

    /// The five-element diamond {0, p, q, r, 1}: three atoms, any two of
    /// which join to the top.
    pub fn m3() -> Self {
        let names = ["0", "p", "q", "r", "1"].map(String::from).to_vec();
        #[rustfmt::skip]
        let table = vec![
            0, 1, 2, 3, 4,
            1, 1, 4, 4, 4,
            2, 4, 2, 4, 4,
            3, 4, 4, 3, 4,
            4, 4, 4, 4, 4,
        ];
        Self::build(names, table).expect("M3 is a lattice")
    }

    /// The five-element pentagon {0, a, b, c, 1} with 0 < c < a < 1 and b
    /// incomparable to both a and c.
    pub fn n5() -> Self {
        let names = ["0", "a", "b", "c", "1"].map(String::from).to_vec();
        #[rustfmt::skip]
        let table = vec![
            0, 1, 2, 3, 4,
            1, 1, 4, 1, 4,
            2, 4, 2, 4, 4,
            3, 1, 4, 3, 4,
            4, 4, 4, 4, 4,
        ];
        Self::build(names, table).expect("N5 is a lattice")
    }

    /// The powerset of {0, .., n-1} ordered by inclusion. Element indices are
    /// bitmasks, so join is bitwise or and index 0 is the empty set.
    pub fn powerset(n: u32) -> Result<Self, LatticeError> {
        let size = 1usize << n;
        let guard = size_guard();
        if size > guard {
            return Err(LatticeError::SizeGuardExceeded { size, guard });
        }
        let names: Vec<String> = (0..size)
            .map(|mask| {
                let elems: Vec<String> =
                    (0..n).filter(|i| mask >> i & 1 == 1).map(|i| i.to_string()).collect();
                format!("{{{}}}", elems.join(","))
            })
            .collect();
        let table: Vec<usize> =
            (0..size).flat_map(|x| (0..size).map(move |y| x | y)).collect();
        Self::build(names, table)
    }

    /// The n-element chain 0 < 1 < ... < n-1.
    pub fn chain(n: usize) -> Result<Self, LatticeError> {
        let guard = size_guard();
        if n > guard {
            return Err(LatticeError::SizeGuardExceeded { size: n, guard });
        }
        let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let table: Vec<usize> = (0..n).flat_map(|x| (0..n).map(move |y| x.max(y))).collect();
        Self::build(names, table)
    }

    /// Resolve a builtin name: `M3`, `N5`, `Pow(n)` or `Chain(n)`.
    pub fn builtin(name: &str) -> Result<Self, LatticeError> {
        let unknown = || LatticeError::UnknownBuiltin(name.to_owned());
        match name {
            "M3" => Ok(Self::m3()),
            "N5" => Ok(Self::n5()),
            _ => {
                if let Some(arg) = name.strip_prefix("Pow(").and_then(|r| r.strip_suffix(')')) {
                    let n: u32 = arg.trim().parse().map_err(|_| unknown())?;
                    Self::powerset(n)
                } else if let Some(arg) =
                    name.strip_prefix("Chain(").and_then(|r| r.strip_suffix(')'))
                {
                    let n: usize = arg.trim().parse().map_err(|_| unknown())?;
                    Self::chain(n)
                } else {
                    Err(unknown())
                }
            }
        }
    }

    /// The k-fold direct power with componentwise join. Element indices are
    /// lexicographic ranks of the tuples, so index 0 is the zero tuple.
    pub fn direct_power(&self, k: u32) -> Result<Self, LatticeError> {
        let n = self.size();
        let size = n.checked_pow(k).filter(|&s| s <= DERIVED_CAP).ok_or(
            LatticeError::SizeGuardExceeded {
                size: n.saturating_pow(k),
                guard: DERIVED_CAP,
            },
        )?;
        let unrank = |mut r: usize| -> Vec<usize> {
            let mut t = vec![0usize; k as usize];
            for slot in t.iter_mut().rev() {
                *slot = r % n;
                r /= n;
            }
            t
        };
        let rank = |t: &[usize]| t.iter().fold(0usize, |acc, &x| acc * n + x);
        let names: Vec<String> = (0..size)
            .map(|r| {
                let t = unrank(r);
                let parts: Vec<&str> = t.iter().map(|&x| self.name(x)).collect();
                format!("({})", parts.join(","))
            })
            .collect();
        let mut table = vec![0usize; size * size];
        for x in 0..size {
            let tx = unrank(x);
            for y in 0..size {
                let ty = unrank(y);
                let tj: Vec<usize> =
                    tx.iter().zip(&ty).map(|(&a, &b)| self.join(a, b)).collect();
                table[x * size + y] = rank(&tj);
            }
        }
        Self::build(names, table)
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, x: usize) -> &str {
        &self.names[x]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.names.iter().position(|n| n == label)
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x * self.size() + y]
    }

    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x * self.size() + y]
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].get(y)
    }

    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    /// Join of an arbitrary collection (empty join is 0).
    pub fn join_all(&self, xs: impl IntoIterator<Item = usize>) -> usize {
        xs.into_iter().fold(0, |acc, x| self.join(acc, x))
    }

    /// The greatest element.
    pub fn top(&self) -> usize {
        self.join_all(0..self.size())
    }

    /// Down-set of `x` as a bitset over element indices.
    pub(crate) fn down_set(&self, x: usize) -> &Bits {
        &self.down[x]
    }

    /// Cover pairs `(lower, upper)` in lexicographic index order.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Indices of the join-irreducible elements, ascending.
    pub fn join_irreducibles(&self) -> &[usize] {
        &self.irreducibles
    }

    pub fn raw_join_table(&self) -> &[usize] {
        &self.join
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn guarded_max() -> usize {
        size_guard()
    }

    #[test]
    fn m3_structure() {
        let m3 = FiniteJoinSemilattice::m3();
        let (p, q, r, top) = (1, 2, 3, 4);
        assert_eq!(m3.size(), 5);
        assert_eq!(m3.names(), &["0", "p", "q", "r", "1"]);
        // any two distinct atoms join to the top, meet at the bottom
        for (x, y) in [(p, q), (p, r), (q, r)] {
            assert_eq!(m3.join(x, y), top);
            assert_eq!(m3.meet(x, y), 0);
        }
        // each atom lies strictly below the join of the other two
        assert!(m3.lt(p, m3.join(q, r)));
        assert!(m3.lt(q, m3.join(p, r)));
        assert!(m3.lt(r, m3.join(p, q)));
        assert_eq!(m3.join_irreducibles(), &[p, q, r]);
        assert_eq!(m3.covers().len(), 6);
        assert_eq!(m3.top(), top);
    }

    #[test]
    fn n5_structure() {
        let n5 = FiniteJoinSemilattice::n5();
        let (a, b, c, top) = (1, 2, 3, 4);
        assert!(n5.lt(c, a)); // the comparable pair of irreducibles
        assert!(n5.lt(a, n5.join(b, c)));
        assert_eq!(n5.join(b, c), top);
        assert_eq!(n5.join(a, b), top);
        assert_eq!(n5.meet(a, b), 0);
        assert_eq!(n5.meet(b, c), 0);
        assert_eq!(n5.meet(a, c), c);
        assert_eq!(n5.join_irreducibles(), &[a, b, c]);
        assert_eq!(n5.covers(), &[(0, 2), (0, 3), (1, 4), (2, 4), (3, 1)]);
    }

    #[test]
    fn powerset_is_boolean() {
        let p3 = FiniteJoinSemilattice::powerset(3).unwrap();
        assert_eq!(p3.size(), 8);
        assert_eq!(p3.name(0), "{}");
        assert_eq!(p3.name(0b101), "{0,2}");
        assert_eq!(p3.join(0b011, 0b110), 0b111);
        assert_eq!(p3.meet(0b011, 0b110), 0b010);
        assert_eq!(p3.join_irreducibles(), &[0b001, 0b010, 0b100]);
        let p0 = FiniteJoinSemilattice::powerset(0).unwrap();
        assert_eq!(p0.size(), 1);
    }

    #[test]
    fn chain_is_linear() {
        let c4 = FiniteJoinSemilattice::chain(4).unwrap();
        assert_eq!(c4.size(), 4);
        assert_eq!(c4.join(1, 3), 3);
        assert_eq!(c4.meet(1, 3), 1);
        assert_eq!(c4.covers(), &[(0, 1), (1, 2), (2, 3)]);
        assert_eq!(c4.join_irreducibles(), &[1, 2, 3]);
        let c1 = FiniteJoinSemilattice::chain(1).unwrap();
        assert_eq!(c1.size(), 1);
        assert_eq!(c1.join_irreducibles(), &[] as &[usize]);
    }

    #[test]
    fn from_covers_matches_builtin_m3() {
        let built = FiniteJoinSemilattice::from_covers(
            &["0", "p", "q", "r", "1"],
            &[("0", "p"), ("0", "q"), ("0", "r"), ("p", "1"), ("q", "1"), ("r", "1")],
        )
        .unwrap();
        assert_eq!(built, FiniteJoinSemilattice::m3());
    }

    #[test]
    fn from_covers_accepts_redundant_generators() {
        // `0 ≤ 1` is implied; declaring it must not disturb the covers.
        let c3 = FiniteJoinSemilattice::from_covers(
            &["0", "1", "2"],
            &[("0", "1"), ("1", "2"), ("0", "2")],
        )
        .unwrap();
        assert_eq!(c3, FiniteJoinSemilattice::chain(3).unwrap());
    }

    #[test]
    fn from_covers_moves_least_to_front() {
        let s = FiniteJoinSemilattice::from_covers(
            &["top", "bottom"],
            &[("bottom", "top")],
        )
        .unwrap();
        assert_eq!(s.names(), &["bottom", "top"]);
    }

    #[test]
    fn from_covers_singleton() {
        let s =
            FiniteJoinSemilattice::from_covers(&["x"], &[] as &[(&str, &str)]).unwrap();
        assert_eq!(s.size(), 1);
        assert_eq!(s.join(0, 0), 0);
    }

    #[test]
    fn from_covers_rejects_missing_join() {
        let err = FiniteJoinSemilattice::from_covers(
            &["x", "a", "b"],
            &[("x", "a"), ("x", "b")],
        )
        .unwrap_err();
        assert_eq!(err, LatticeError::JoinMissing("a".into(), "b".into()));
    }

    #[test]
    fn from_covers_rejects_no_least() {
        let err = FiniteJoinSemilattice::from_covers(&["a", "b"], &[] as &[(&str, &str)])
            .unwrap_err();
        assert_eq!(err, LatticeError::NoLeastElement);
    }

    #[test]
    fn from_covers_rejects_cycle() {
        let err =
            FiniteJoinSemilattice::from_covers(&["a", "b"], &[("a", "b"), ("b", "a")])
                .unwrap_err();
        assert!(matches!(err, LatticeError::CycleDetected(_)));
    }

    #[test]
    fn from_covers_rejects_duplicates_and_unknowns() {
        let err = FiniteJoinSemilattice::from_covers(&["a", "a"], &[] as &[(&str, &str)])
            .unwrap_err();
        assert_eq!(err, LatticeError::DuplicateLabel("a".into()));
        let err = FiniteJoinSemilattice::from_covers(&["a"], &[("a", "z")]).unwrap_err();
        assert_eq!(err, LatticeError::UnknownLabel("z".into()));
    }

    #[test]
    fn size_guard_rejects_large_chains() {
        let guard = guarded_max();
        assert!(FiniteJoinSemilattice::chain(guard.min(8)).is_ok());
        let err = FiniteJoinSemilattice::chain(guard + 1).unwrap_err();
        assert_eq!(err, LatticeError::SizeGuardExceeded { size: guard + 1, guard });
    }

    #[test]
    fn from_join_table_rejects_bad_tables() {
        // 2-element "table" where join is the minimum: 0 is not neutral.
        let err = FiniteJoinSemilattice::from_join_table(
            vec!["0".into(), "1".into()],
            vec![0, 0, 0, 1],
        )
        .unwrap_err();
        assert!(matches!(err, LatticeError::NotASemilattice(_)));
        // non-commutative table
        let err = FiniteJoinSemilattice::from_join_table(
            vec!["0".into(), "x".into(), "y".into()],
            vec![0, 1, 2, 1, 1, 1, 2, 2, 2],
        )
        .unwrap_err();
        assert!(matches!(err, LatticeError::NotASemilattice(_)));
    }

    #[test]
    fn builtin_names_resolve() {
        assert_eq!(FiniteJoinSemilattice::builtin("M3").unwrap().size(), 5);
        assert_eq!(FiniteJoinSemilattice::builtin("N5").unwrap().size(), 5);
        assert_eq!(FiniteJoinSemilattice::builtin("Pow(2)").unwrap().size(), 4);
        assert_eq!(FiniteJoinSemilattice::builtin("Chain(7)").unwrap().size(), 7);
        assert!(matches!(
            FiniteJoinSemilattice::builtin("Frob(3)").unwrap_err(),
            LatticeError::UnknownBuiltin(_)
        ));
    }

    #[test]
    fn direct_power_componentwise() {
        let c2 = FiniteJoinSemilattice::chain(2).unwrap();
        let cube = c2.direct_power(3).unwrap();
        assert_eq!(cube.size(), 8);
        assert_eq!(cube.name(0), "(0,0,0)");
        // (0,1,1) ∨ (1,1,0) = (1,1,1)
        assert_eq!(cube.join(0b011, 0b110), 0b111);
        assert_eq!(cube.top(), 7);
    }

    #[test]
    fn meet_agrees_with_glb_by_scan() {
        for s in [
            FiniteJoinSemilattice::m3(),
            FiniteJoinSemilattice::n5(),
            FiniteJoinSemilattice::powerset(3).unwrap(),
            FiniteJoinSemilattice::chain(5).unwrap(),
        ] {
            let n = s.size();
            for x in 0..n {
                for y in 0..n {
                    let m = s.meet(x, y);
                    assert!(s.leq(m, x) && s.leq(m, y));
                    for z in 0..n {
                        if s.leq(z, x) && s.leq(z, y) {
                            assert!(s.leq(z, m));
                        }
                    }
                }
            }
        }
    }
}
