//! Census of isomorphism classes of finite lattices, by two independent
//! passes that must agree:
//!
//! 1. poset extension: grow every poset one maximal element at a time
//!    (the new element covers an arbitrary down-set), deduplicate by
//!    canonical poset form, and keep the posets that happen to be lattices;
//! 2. natural-label search: enumerate transitive order matrices whose
//!    relation only points from smaller to larger indices, with element 0
//!    forced least, filter lattices and deduplicate by canonical join-table
//!    form.
//!
//! The class counts for sizes 1..7 are 1, 1, 1, 2, 5, 15, 53.

use std::collections::{BTreeSet, HashSet};

use crate::catalog::canonical::{canonical_form, canonical_of_table, minimal_relabeling, CanonicalForm};
use crate::error::LatticeError;
use crate::order::semilattice::FiniteJoinSemilattice;

/// Largest census size; the class count (and the natural-label search)
/// grows too quickly beyond this.
pub(crate) const ENUM_CAP: usize = 8;

type UpMasks = Vec<u16>;

/// Canonical byte form of a poset given by up-masks (invariant-pruned
/// minimum over all relabelings of the relation matrix).
fn canonical_poset(up: &UpMasks) -> Vec<u8> {
    let n = up.len();
    let leq = |x: usize, y: usize| up[x] >> y & 1 == 1;
    let count_between =
        |x: usize, y: usize| (0..n).filter(|&z| leq(x, z) && leq(z, y)).count();
    let key = |x: usize| {
        let down = (0..n).filter(|&z| leq(z, x)).count();
        let upc = (up[x] as u32).count_ones() as usize;
        let cov_down = (0..n)
            .filter(|&z| z != x && leq(z, x) && count_between(z, x) == 2)
            .count();
        let cov_up = (0..n)
            .filter(|&z| z != x && leq(x, z) && count_between(x, z) == 2)
            .count();
        (down, upc, cov_down, cov_up)
    };
    let mut keyed: Vec<((usize, usize, usize, usize), usize)> =
        (0..n).map(|x| (key(x), x)).collect();
    keyed.sort();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for (k, x) in keyed {
        match blocks.last_mut() {
            Some(last) if key(last[0]) == k => last.push(x),
            _ => blocks.push(vec![x]),
        }
    }
    let encode = |sigma: &[usize]| {
        let mut inv = vec![0usize; n];
        for (old, &new) in sigma.iter().enumerate() {
            inv[new] = old;
        }
        let mut bytes = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                bytes.push(u8::from(leq(inv[i], inv[j])));
            }
        }
        bytes
    };
    minimal_relabeling(n, &blocks, &encode)
}

/// All posets of the given size up to isomorphism, as up-mask vectors.
fn all_posets(n: usize) -> Vec<UpMasks> {
    let mut level: Vec<UpMasks> = vec![vec![1u16]];
    for size in 1..n {
        let mut next: Vec<UpMasks> = Vec::new();
        let mut seen: HashSet<Vec<u8>> = HashSet::new();
        for p in &level {
            // down masks of the current poset
            let down: Vec<u16> = (0..size)
                .map(|i| {
                    (0..size)
                        .filter(|&j| p[j] >> i & 1 == 1)
                        .fold(0u16, |m, j| m | 1 << j)
                })
                .collect();
            // adjoin a new maximal element above each down-closed subset
            for d in 0..1u32 << size {
                let d = d as u16;
                let down_closed =
                    (0..size).all(|i| d >> i & 1 == 0 || down[i] & !d == 0);
                if !down_closed {
                    continue;
                }
                let mut q: UpMasks = p.clone();
                for (i, mask) in q.iter_mut().enumerate() {
                    if d >> i & 1 == 1 {
                        *mask |= 1 << size;
                    }
                }
                q.push(1 << size);
                if seen.insert(canonical_poset(&q)) {
                    next.push(q);
                }
            }
        }
        level = next;
    }
    level
}

/// Join table of the poset if it is a lattice (least element plus all
/// binary joins), with elements in their original indices.
fn join_table_of(up: &UpMasks) -> Option<(usize, Vec<usize>)> {
    let n = up.len();
    let full = if n == 16 { u16::MAX } else { (1 << n) - 1 };
    let least = (0..n).find(|&z| up[z] == full)?;
    let mut table = vec![0usize; n * n];
    for x in 0..n {
        for y in 0..n {
            let ubs = up[x] & up[y];
            let lub = (0..n).find(|&u| ubs >> u & 1 == 1 && up[u] & ubs == ubs)?;
            table[x * n + y] = lub;
        }
    }
    Some((least, table))
}

/// Pass 1: extension. Returns the lattices in canonical order.
fn extension_pass(n: usize) -> Vec<(CanonicalForm, FiniteJoinSemilattice)> {
    let mut out: Vec<(CanonicalForm, FiniteJoinSemilattice)> = Vec::new();
    let mut seen: HashSet<CanonicalForm> = HashSet::new();
    for p in all_posets(n) {
        let Some((least, table)) = join_table_of(&p) else {
            continue;
        };
        // reindex so the least element is 0, other elements keep their
        // relative order
        let mut old_order: Vec<usize> = vec![least];
        old_order.extend((0..n).filter(|&i| i != least));
        let mut old2new = vec![0usize; n];
        for (new, &old) in old_order.iter().enumerate() {
            old2new[old] = new;
        }
        let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
        let mut new_table = vec![0usize; n * n];
        for i in 0..n {
            for j in 0..n {
                new_table[i * n + j] =
                    old2new[table[old_order[i] * n + old_order[j]]];
            }
        }
        let s = FiniteJoinSemilattice::build(names, new_table)
            .expect("census lattices must validate");
        let form = canonical_form(&s).expect("census sizes are within the canonical cap");
        assert!(
            seen.insert(form.clone()),
            "poset classes must yield distinct lattice classes"
        );
        out.push((form, s));
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// Pass 2: natural-label backtracking over order matrices. `rel[i]` is the
/// up-mask of element i; relations only point upward in index order, and
/// element 0 is forced below everything. Transitivity is maintained
/// incrementally: setting `i ≤ j` requires `m ≤ j` for every `m ≤ i`
/// already decided, which by the visit order (row by row) is complete.
fn natural_label_pass(n: usize) -> BTreeSet<CanonicalForm> {
    struct Search {
        n: usize,
        up: Vec<u16>,
        cells: Vec<(usize, usize)>,
        out: BTreeSet<CanonicalForm>,
    }
    impl Search {
        fn leaf(&mut self) {
            if let Some((least, table)) = join_table_of(&self.up) {
                debug_assert_eq!(least, 0);
                let form = canonical_of_table(self.n, &table)
                    .expect("census sizes are within the canonical cap");
                self.out.insert(form);
            }
        }
        fn step(&mut self, k: usize) {
            if k == self.cells.len() {
                self.leaf();
                return;
            }
            let (i, j) = self.cells[k];
            // Setting i ≤ j is legal when everything already below i is
            // below j; since rows are visited top to bottom this check is
            // the whole of transitivity maintenance (upward chains through
            // i are re-checked when their own cells are set).
            let legal = (1..i).all(|m| self.up[m] >> i & 1 == 0 || self.up[m] >> j & 1 == 1);
            if legal {
                self.up[i] |= 1 << j;
                self.step(k + 1);
                self.up[i] &= !(1 << j);
            }
            self.step(k + 1);
        }
    }
    let mut up = vec![0u16; n];
    let full = if n == 16 { u16::MAX } else { (1u16 << n) - 1 };
    up[0] = full;
    for (i, mask) in up.iter_mut().enumerate().skip(1) {
        *mask = 1 << i;
    }
    let mut cells = Vec::new();
    for i in 1..n {
        for j in i + 1..n {
            cells.push((i, j));
        }
    }
    let mut search = Search { n, up, cells, out: BTreeSet::new() };
    search.step(0);
    search.out
}

/// All isomorphism classes of lattices with exactly `n` elements, in
/// canonical order. The two passes cross-check each other on every call.
pub fn enumerate_lattices(n: usize) -> Result<Vec<FiniteJoinSemilattice>, LatticeError> {
    if n == 0 || n > ENUM_CAP {
        return Err(LatticeError::SizeGuardExceeded { size: n, guard: ENUM_CAP });
    }
    let by_extension = extension_pass(n);
    let by_search = natural_label_pass(n);
    assert_eq!(
        by_extension.len(),
        by_search.len(),
        "census passes disagree on the class count for size {n}"
    );
    assert!(
        by_extension.iter().all(|(form, _)| by_search.contains(form)),
        "census passes disagree on the class set for size {n}"
    );
    Ok(by_extension.into_iter().map(|(_, s)| s).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::canonical::is_isomorphic;
    use crate::order::distributive::is_distributive;

    #[test]
    fn class_counts_up_to_six() {
        let expect = [1usize, 1, 1, 2, 5, 15];
        for (i, &want) in expect.iter().enumerate() {
            assert_eq!(enumerate_lattices(i + 1).unwrap().len(), want);
        }
    }

    #[test]
    fn class_count_at_seven() {
        assert_eq!(enumerate_lattices(7).unwrap().len(), 53);
    }

    #[test]
    fn catalog_members_are_pairwise_non_isomorphic() {
        let cat = enumerate_lattices(5).unwrap();
        for (i, a) in cat.iter().enumerate() {
            for b in &cat[..i] {
                assert!(!is_isomorphic(a, b).unwrap());
            }
        }
    }

    #[test]
    fn known_structures_appear() {
        let cat = enumerate_lattices(5).unwrap();
        let m3 = FiniteJoinSemilattice::m3();
        let n5 = FiniteJoinSemilattice::n5();
        let c5 = FiniteJoinSemilattice::chain(5).unwrap();
        for s in [&m3, &n5, &c5] {
            assert_eq!(
                cat.iter()
                    .filter(|c| is_isomorphic(c, s).unwrap())
                    .count(),
                1
            );
        }
        // of the five classes of size 5, exactly two are non-distributive
        assert_eq!(
            cat.iter().filter(|c| !is_distributive(c).distributive).count(),
            2
        );
    }

    #[test]
    fn size_four_classes_are_the_chain_and_the_square() {
        let cat = enumerate_lattices(4).unwrap();
        let c4 = FiniteJoinSemilattice::chain(4).unwrap();
        let pow2 = FiniteJoinSemilattice::powerset(2).unwrap();
        assert!(cat.iter().any(|s| is_isomorphic(s, &c4).unwrap()));
        assert!(cat.iter().any(|s| is_isomorphic(s, &pow2).unwrap()));
    }

    #[test]
    fn guard_rejects_out_of_range_sizes() {
        assert!(enumerate_lattices(0).is_err());
        assert!(enumerate_lattices(9).is_err());
    }
}
