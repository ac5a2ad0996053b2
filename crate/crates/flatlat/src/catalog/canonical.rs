//! Canonical forms for isomorphism testing.
//!
//! The canonical form of a structure is the lexicographically least byte
//! encoding of its join table over all relabelings that fix the least
//! element. Candidate relabelings are pruned by simple order invariants
//! (down-set, up-set and cover counts): only permutations mapping each
//! invariant class onto itself can yield isomorphic encodings, so the
//! minimum over those is the minimum over all.

use crate::error::LatticeError;
use crate::order::semilattice::FiniteJoinSemilattice;

/// Carriers above this size are rejected: canonicalization is factorial in
/// the invariant class sizes, and the toolkit's catalogs stay far below it.
pub(crate) const CANON_CAP: usize = 12;

/// Size plus the minimal join-table byte encoding. Equal forms mean
/// isomorphic structures. The derived ordering (size first, then bytes)
/// gives the canonical catalog order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    pub size: usize,
    pub bytes: Vec<u8>,
}

impl CanonicalForm {
    pub fn hex(&self) -> String {
        self.bytes.iter().map(|b| format!("{b:02x}")).collect()
    }
}

/// Walk all relabelings that keep each block of elements within its block,
/// assigning block members to consecutive new indices, and return the least
/// encoding. `encode` receives `sigma` with `sigma[old] = new`.
pub(crate) fn minimal_relabeling(
    n: usize,
    blocks: &[Vec<usize>],
    encode: &dyn Fn(&[usize]) -> Vec<u8>,
) -> Vec<u8> {
    struct Walk<'a> {
        blocks: &'a [Vec<usize>],
        sigma: Vec<usize>,
        best: Option<Vec<u8>>,
        encode: &'a dyn Fn(&[usize]) -> Vec<u8>,
    }
    impl Walk<'_> {
        fn block(&mut self, bi: usize, next: usize) {
            if bi == self.blocks.len() {
                let enc = (self.encode)(&self.sigma);
                if self.best.as_ref().is_none_or(|b| enc < *b) {
                    self.best = Some(enc);
                }
                return;
            }
            let len = self.blocks[bi].len();
            let mut used = vec![false; len];
            self.assign(bi, next, &mut used, 0);
        }
        fn assign(&mut self, bi: usize, start: usize, used: &mut Vec<bool>, k: usize) {
            if k == self.blocks[bi].len() {
                self.block(bi + 1, start + self.blocks[bi].len());
                return;
            }
            for t in 0..self.blocks[bi].len() {
                if !used[t] {
                    used[t] = true;
                    self.sigma[self.blocks[bi][t]] = start + k;
                    self.assign(bi, start, used, k + 1);
                    used[t] = false;
                }
            }
        }
    }
    let mut walk = Walk { blocks, sigma: vec![0; n], best: None, encode };
    walk.block(0, 0);
    walk.best.expect("at least one relabeling exists")
}

/// Group elements into invariant classes ordered by their keys. `leq` is
/// the order relation of the structure.
fn invariant_blocks(n: usize, leq: &dyn Fn(usize, usize) -> bool) -> Vec<Vec<usize>> {
    let count_between = |x: usize, y: usize| (0..n).filter(|&z| leq(x, z) && leq(z, y)).count();
    let key = |x: usize| {
        let down = (0..n).filter(|&z| leq(z, x)).count();
        let up = (0..n).filter(|&z| leq(x, z)).count();
        let cov_down = (0..n)
            .filter(|&z| z != x && leq(z, x) && count_between(z, x) == 2)
            .count();
        let cov_up = (0..n)
            .filter(|&z| z != x && leq(x, z) && count_between(x, z) == 2)
            .count();
        (down, up, cov_down, cov_up)
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
    blocks
}

/// Canonical form of an explicit join table.
pub(crate) fn canonical_of_table(
    n: usize,
    table: &[usize],
) -> Result<CanonicalForm, LatticeError> {
    if n > CANON_CAP {
        return Err(LatticeError::SizeGuardExceeded { size: n, guard: CANON_CAP });
    }
    let leq = |x: usize, y: usize| table[x * n + y] == y;
    let blocks = invariant_blocks(n, &leq);
    // the least element's invariants are unique (down-set of size one)
    assert_eq!(blocks[0], vec![0], "element 0 must be the unique least element");
    let encode = |sigma: &[usize]| {
        let mut inv = vec![0usize; n];
        for (old, &new) in sigma.iter().enumerate() {
            inv[new] = old;
        }
        let mut bytes = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                bytes.push(sigma[table[inv[i] * n + inv[j]]] as u8);
            }
        }
        bytes
    };
    Ok(CanonicalForm { size: n, bytes: minimal_relabeling(n, &blocks, &encode) })
}

/// Canonical form of a structure's join table.
pub fn canonical_form(s: &FiniteJoinSemilattice) -> Result<CanonicalForm, LatticeError> {
    canonical_of_table(s.size(), s.raw_join_table())
}

/// Isomorphism test by comparing canonical forms.
pub fn is_isomorphic(
    a: &FiniteJoinSemilattice,
    b: &FiniteJoinSemilattice,
) -> Result<bool, LatticeError> {
    if a.size() != b.size() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}
