//! The tensor product of two finite join-semilattices, realized as the
//! lattice of all bi-ideals ordered by inclusion.
//!
//! Construction runs two independent enumerations and insists they agree:
//!
//! 1. join-closure: close the set of pure tensors under pairwise joins
//!    (join = bi-ideal closure of the union);
//! 2. direct search: a pruned depth-first scan over subsets of the nonzero
//!    part of the `A × B` grid, emitting exactly the hereditary, laterally
//!    closed subsets.
//!
//! The element order is fixed: ascending cardinality, ties broken by the
//! lexicographic member list, which puts ∇ at index 0.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::bits::Bits;
use crate::error::LatticeError;
use crate::order::morphism::JoinMorphism;
use crate::order::semilattice::{size_guard, FiniteJoinSemilattice};
use crate::tensor::bi_ideal::{BiIdeal, GridCtx};

pub struct TensorSemilattice {
    ctx: GridCtx,
    index: HashMap<Bits, usize>,
    elements: Vec<BiIdeal>,
    semilattice: Arc<FiniteJoinSemilattice>,
    pure: Vec<usize>,
}

impl fmt::Debug for TensorSemilattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TensorSemilattice")
            .field("left", &self.left().names())
            .field("right", &self.right().names())
            .field("size", &self.size())
            .finish()
    }
}

/// Build `A ⊗ B`. Errors when the `A × B` grid exceeds the size guard.
pub fn tensor_product(
    a: &FiniteJoinSemilattice,
    b: &FiniteJoinSemilattice,
) -> Result<TensorSemilattice, LatticeError> {
    let guard = size_guard();
    let cells = a.size() * b.size();
    if cells > guard {
        return Err(LatticeError::SizeGuardExceeded { size: cells, guard });
    }
    let ctx = GridCtx::new(Arc::new(a.clone()), Arc::new(b.clone()));

    // Route 1: join-closure of the pure tensors.
    let mut masks: Vec<Bits> = Vec::new();
    let mut index: HashMap<Bits, usize> = HashMap::new();
    let push = |m: Bits, masks: &mut Vec<Bits>, index: &mut HashMap<Bits, usize>| {
        if !index.contains_key(&m) {
            index.insert(m.clone(), masks.len());
            masks.push(m);
        }
    };
    push(ctx.nabla_mask().clone(), &mut masks, &mut index);
    for x in 1..a.size() {
        for y in 1..b.size() {
            let mut seed = Bits::new(cells);
            seed.set(ctx.cell(x, y));
            push(ctx.close(&seed), &mut masks, &mut index);
        }
    }
    let mut i = 0;
    while i < masks.len() {
        for j in 0..i {
            let joined = ctx.close(&masks[i].union(&masks[j]));
            push(joined, &mut masks, &mut index);
        }
        i += 1;
    }

    // Route 2: direct enumeration, compared as sets.
    let direct = enumerate_closed_masks(&ctx);
    assert_eq!(
        direct.len(),
        masks.len(),
        "tensor enumeration routes disagree on the element count"
    );
    assert!(
        direct.iter().all(|m| index.contains_key(m)),
        "tensor enumeration routes disagree on the element set"
    );

    masks.sort_by_cached_key(|m| (m.count(), m.ones().collect::<Vec<usize>>()));
    let index: HashMap<Bits, usize> = masks
        .iter()
        .enumerate()
        .map(|(k, m)| (m.clone(), k))
        .collect();
    let elements: Vec<BiIdeal> = masks.iter().map(|m| ctx.bi_ideal(m)).collect();
    assert_eq!(
        elements[0].members().len(),
        a.size() + b.size() - 1,
        "the least bi-ideal must be ∇"
    );

    let n = masks.len();
    let mut table = vec![0usize; n * n];
    for i in 0..n {
        for j in 0..=i {
            let joined = ctx.close(&masks[i].union(&masks[j]));
            let k = *index
                .get(&joined)
                .expect("the join of two bi-ideals must be an enumerated bi-ideal");
            table[i * n + j] = k;
            table[j * n + i] = k;
        }
    }
    let names: Vec<String> = elements.iter().map(|e| e.tensor_expr()).collect();
    let semilattice = Arc::new(
        FiniteJoinSemilattice::build(names, table)
            .expect("the bi-ideal lattice must validate as a join-semilattice"),
    );

    // The induced order must be inclusion.
    for i in 0..n {
        for j in 0..n {
            assert_eq!(
                semilattice.leq(i, j),
                masks[i].is_subset(&masks[j]),
                "tensor order must agree with bi-ideal inclusion"
            );
        }
    }

    let mut pure = vec![0usize; cells];
    for x in 0..a.size() {
        for y in 0..b.size() {
            let mut seed = Bits::new(cells);
            seed.set(ctx.cell(x, y));
            pure[ctx.cell(x, y)] = index[&ctx.close(&seed)];
        }
    }
    let t = TensorSemilattice { ctx, index, elements, semilattice, pure };

    // The pure tensor map must be a bimorphism vanishing on zero pairs.
    for x in 0..a.size() {
        assert_eq!(t.pure_index(x, 0), 0);
        for y in 0..b.size() {
            assert_eq!(t.pure_index(0, y), 0);
            for z in 0..b.size() {
                assert_eq!(
                    t.pure_index(x, b.join(y, z)),
                    t.join(t.pure_index(x, y), t.pure_index(x, z)),
                    "pure tensors must be join-preserving in the right slot"
                );
            }
            for w in 0..a.size() {
                assert_eq!(
                    t.pure_index(a.join(x, w), y),
                    t.join(t.pure_index(x, y), t.pure_index(w, y)),
                    "pure tensors must be join-preserving in the left slot"
                );
            }
        }
    }
    Ok(t)
}

/// Depth-first enumeration of the hereditary, laterally closed subsets of
/// the nonzero grid, each returned with ∇ adjoined.
///
/// Cells are visited in a linear extension of the componentwise order, so
/// when a cell is decided every smaller cell already is. Including a cell
/// requires its strict predecessors present (heredity); excluding a cell is
/// pruned when two included cells of its row or column laterally join onto
/// it. Leaves are therefore exactly the closed subsets, making the scan
/// output-linear up to the pruning work.
fn enumerate_closed_masks(ctx: &GridCtx) -> Vec<Bits> {
    let a = ctx.left.clone();
    let b = ctx.right.clone();
    let (an, bn) = (a.size(), b.size());
    let mut order: Vec<(usize, usize)> = Vec::new();
    for x in 1..an {
        for y in 1..bn {
            order.push((x, y));
        }
    }
    order.sort_by_key(|&(x, y)| (a.down_set(x).count() + b.down_set(y).count(), x, y));
    let preds: Vec<Vec<(usize, usize)>> = order
        .iter()
        .map(|&(x, y)| {
            let mut p = Vec::new();
            for u in a.down_set(x).ones() {
                for v in b.down_set(y).ones() {
                    if u != 0 && v != 0 && (u, v) != (x, y) {
                        p.push((u, v));
                    }
                }
            }
            p
        })
        .collect();

    struct Search<'c> {
        ctx: &'c GridCtx,
        a: Arc<FiniteJoinSemilattice>,
        b: Arc<FiniteJoinSemilattice>,
        order: Vec<(usize, usize)>,
        preds: Vec<Vec<(usize, usize)>>,
        included: Vec<bool>,
        out: Vec<Bits>,
    }
    impl Search<'_> {
        fn cell(&self, x: usize, y: usize) -> usize {
            x * self.b.size() + y
        }
        fn forced(&self, x: usize, y: usize) -> bool {
            let row: Vec<usize> = (1..self.b.size())
                .filter(|&v| self.included[self.cell(x, v)])
                .collect();
            for (i, &y0) in row.iter().enumerate() {
                for &y1 in &row[..=i] {
                    if self.b.join(y0, y1) == y {
                        return true;
                    }
                }
            }
            let col: Vec<usize> = (1..self.a.size())
                .filter(|&u| self.included[self.cell(u, y)])
                .collect();
            for (i, &x0) in col.iter().enumerate() {
                for &x1 in &col[..=i] {
                    if self.a.join(x0, x1) == x {
                        return true;
                    }
                }
            }
            false
        }
        fn run(&mut self, k: usize) {
            if k == self.order.len() {
                let mut mask = self.ctx.nabla_mask().clone();
                for (c, &inc) in self.included.iter().enumerate() {
                    if inc {
                        mask.set(c);
                    }
                }
                self.out.push(mask);
                return;
            }
            let (x, y) = self.order[k];
            let can_include = self.preds[k]
                .iter()
                .all(|&(u, v)| self.included[self.cell(u, v)]);
            if can_include {
                let c = self.cell(x, y);
                self.included[c] = true;
                self.run(k + 1);
                self.included[c] = false;
            }
            if !self.forced(x, y) {
                self.run(k + 1);
            }
        }
    }
    let mut search = Search {
        ctx,
        a,
        b,
        order,
        preds,
        included: vec![false; an * bn],
        out: Vec::new(),
    };
    search.run(0);
    search.out
}

impl TensorSemilattice {
    pub fn left(&self) -> &FiniteJoinSemilattice {
        &self.ctx.left
    }

    pub fn right(&self) -> &FiniteJoinSemilattice {
        &self.ctx.right
    }

    pub fn size(&self) -> usize {
        self.elements.len()
    }

    /// The `i`-th bi-ideal in the canonical element order.
    pub fn element(&self, i: usize) -> &BiIdeal {
        &self.elements[i]
    }

    pub fn elements(&self) -> &[BiIdeal] {
        &self.elements
    }

    /// The tensor product as a plain join-semilattice, elements labeled by
    /// their pure-tensor expressions.
    pub fn semilattice(&self) -> &FiniteJoinSemilattice {
        &self.semilattice
    }

    pub(crate) fn semilattice_arc(&self) -> Arc<FiniteJoinSemilattice> {
        self.semilattice.clone()
    }

    /// Index of the pure tensor `x ⊗ y`.
    pub fn pure_index(&self, x: usize, y: usize) -> usize {
        self.pure[self.ctx.cell(x, y)]
    }

    pub fn join(&self, i: usize, j: usize) -> usize {
        self.semilattice.join(i, j)
    }

    pub fn leq(&self, i: usize, j: usize) -> bool {
        self.semilattice.leq(i, j)
    }

    /// Look up a bi-ideal over the same factors.
    pub fn index_of(&self, h: &BiIdeal) -> Option<usize> {
        if h.left() != self.left() || h.right() != self.right() {
            return None;
        }
        let mut mask = Bits::new(self.ctx.cells);
        for &(x, y) in h.members() {
            mask.set(self.ctx.cell(x, y));
        }
        self.index.get(&mask).copied()
    }

    pub(crate) fn index_of_mask(&self, mask: &Bits) -> Option<usize> {
        self.index.get(mask).copied()
    }

    pub(crate) fn close_seed(&self, seed: &[(usize, usize)]) -> Bits {
        let mut mask = Bits::new(self.ctx.cells);
        for &(x, y) in seed {
            mask.set(self.ctx.cell(x, y));
        }
        self.ctx.close(&mask)
    }
}

/// The morphism `f ⊗ g` between two tensor products, sending a bi-ideal to
/// the closure of its image pairs. Panics unless the factor structures line
/// up and the result is a {∨,0}-homomorphism.
pub fn tensor_morphism(
    f: &JoinMorphism,
    g: &JoinMorphism,
    dom: &TensorSemilattice,
    cod: &TensorSemilattice,
) -> JoinMorphism {
    assert_eq!(f.dom(), dom.left(), "left factor mismatch in tensor_morphism");
    assert_eq!(f.cod(), cod.left(), "left codomain mismatch in tensor_morphism");
    assert_eq!(g.dom(), dom.right(), "right factor mismatch in tensor_morphism");
    assert_eq!(g.cod(), cod.right(), "right codomain mismatch in tensor_morphism");
    let map: Vec<usize> = dom
        .elements()
        .iter()
        .map(|h| {
            let seed: Vec<(usize, usize)> = h
                .members()
                .iter()
                .map(|&(x, y)| (f.apply(x), g.apply(y)))
                .collect();
            cod.index_of_mask(&cod.close_seed(&seed))
                .expect("the image of a bi-ideal must be a bi-ideal of the codomain")
        })
        .collect();
    JoinMorphism::with_arcs(dom.semilattice_arc(), cod.semilattice_arc(), map)
        .expect("a tensor of homomorphisms must be a homomorphism")
}

/// Build `B ⊗ A` and the coordinate-swap isomorphism `A ⊗ B → B ⊗ A`.
pub fn transpose(
    t: &TensorSemilattice,
) -> Result<(TensorSemilattice, JoinMorphism), LatticeError> {
    let u = tensor_product(t.right(), t.left())?;
    let map: Vec<usize> = t
        .elements()
        .iter()
        .map(|h| {
            u.index_of(&h.transposed())
                .expect("the transpose of a bi-ideal must be a bi-ideal")
        })
        .collect();
    let iso = JoinMorphism::with_arcs(t.semilattice_arc(), u.semilattice_arc(), map)
        .expect("the transpose map must be a homomorphism");
    assert!(iso.is_bijective(), "the transpose map must be a bijection");
    Ok((u, iso))
}
