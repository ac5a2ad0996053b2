//! {∨,0}-homomorphisms between finite join-semilattices.

use std::sync::Arc;

use crate::error::LatticeError;
use crate::order::semilattice::FiniteJoinSemilattice;

/// A validated {∨,0}-homomorphism: `map[0] == 0` and
/// `map[x ∨ y] == map[x] ∨ map[y]` for all pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JoinMorphism {
    dom: Arc<FiniteJoinSemilattice>,
    cod: Arc<FiniteJoinSemilattice>,
    map: Vec<usize>,
}

impl JoinMorphism {
    /// Validate and wrap a map given by images of the domain indices.
    pub fn new(
        dom: &FiniteJoinSemilattice,
        cod: &FiniteJoinSemilattice,
        map: Vec<usize>,
    ) -> Result<Self, LatticeError> {
        Self::with_arcs(Arc::new(dom.clone()), Arc::new(cod.clone()), map)
    }

    pub(crate) fn with_arcs(
        dom: Arc<FiniteJoinSemilattice>,
        cod: Arc<FiniteJoinSemilattice>,
        map: Vec<usize>,
    ) -> Result<Self, LatticeError> {
        if map.len() != dom.size() {
            return Err(LatticeError::NotAHom(format!(
                "map has {} entries for a domain of size {}",
                map.len(),
                dom.size()
            )));
        }
        if let Some(&bad) = map.iter().find(|&&v| v >= cod.size()) {
            return Err(LatticeError::NotAHom(format!("image {bad} out of range")));
        }
        if map[0] != 0 {
            return Err(LatticeError::NotAHom(format!(
                "zero maps to `{}`",
                cod.name(map[0])
            )));
        }
        for x in 0..dom.size() {
            for y in 0..x + 1 {
                if map[dom.join(x, y)] != cod.join(map[x], map[y]) {
                    return Err(LatticeError::NotAHom(format!(
                        "join of `{}` and `{}` is not preserved",
                        dom.name(x),
                        dom.name(y)
                    )));
                }
            }
        }
        Ok(JoinMorphism { dom, cod, map })
    }

    pub fn identity(s: &FiniteJoinSemilattice) -> Self {
        let arc = Arc::new(s.clone());
        JoinMorphism { dom: arc.clone(), cod: arc, map: (0..s.size()).collect() }
    }

    pub fn dom(&self) -> &FiniteJoinSemilattice {
        &self.dom
    }

    pub fn cod(&self) -> &FiniteJoinSemilattice {
        &self.cod
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.cod.size()];
        self.map.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
    }

    /// An injective {∨,0}-homomorphism automatically reflects the order, so
    /// injectivity is the whole embedding condition.
    pub fn is_embedding(&self) -> bool {
        self.is_injective()
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.cod.size()];
        for &v in &self.map {
            seen[v] = true;
        }
        seen.into_iter().all(|b| b)
    }

    pub fn is_bijective(&self) -> bool {
        self.dom.size() == self.cod.size() && self.is_injective()
    }

    /// Compose `self` after `first` (so `x ↦ self(first(x))`). Panics if the
    /// intermediate structures differ.
    pub fn compose_after(&self, first: &JoinMorphism) -> JoinMorphism {
        assert_eq!(
            first.cod(),
            self.dom(),
            "composition requires matching intermediate structures"
        );
        JoinMorphism {
            dom: first.dom.clone(),
            cod: self.cod.clone(),
            map: first.map.iter().map(|&x| self.map[x]).collect(),
        }
    }

    /// Inverse of a bijective morphism.
    pub fn inverse(&self) -> JoinMorphism {
        assert!(self.is_bijective(), "inverse requires a bijection");
        let mut inv = vec![0usize; self.map.len()];
        for (x, &y) in self.map.iter().enumerate() {
            inv[y] = x;
        }
        JoinMorphism { dom: self.cod.clone(), cod: self.dom.clone(), map: inv }
    }
}

/// All embeddings (injective {∨,0}-homomorphisms) of `a` into `b`,
/// deterministically ordered by their image vectors.
///
/// A homomorphism is determined by its values on the join-irreducibles of
/// the domain; candidates assign images to those (monotonically, pruned
/// during backtracking), are extended by joins and are kept when the full
/// hom law holds and the map is injective.
pub fn all_embeddings(
    a: &FiniteJoinSemilattice,
    b: &FiniteJoinSemilattice,
) -> Vec<JoinMorphism> {
    let irr = a.join_irreducibles();
    let dom = Arc::new(a.clone());
    let cod = Arc::new(b.clone());
    let mut out = Vec::new();
    let mut assign = vec![0usize; irr.len()];

    fn rec(
        a: &FiniteJoinSemilattice,
        b: &FiniteJoinSemilattice,
        dom: &Arc<FiniteJoinSemilattice>,
        cod: &Arc<FiniteJoinSemilattice>,
        irr: &[usize],
        assign: &mut Vec<usize>,
        k: usize,
        out: &mut Vec<JoinMorphism>,
    ) {
        if k == irr.len() {
            let map: Vec<usize> = (0..a.size())
                .map(|x| {
                    let gens = irr
                        .iter()
                        .enumerate()
                        .filter(|&(_, &p)| a.leq(p, x))
                        .map(|(i, _)| assign[i]);
                    b.join_all(gens)
                })
                .collect();
            if let Ok(m) = JoinMorphism::with_arcs(dom.clone(), cod.clone(), map) {
                if m.is_injective() {
                    out.push(m);
                }
            }
            return;
        }
        for img in 0..b.size() {
            // order compatibility with previously assigned irreducibles
            let ok = (0..k).all(|i| {
                (!a.leq(irr[i], irr[k]) || b.leq(assign[i], img))
                    && (!a.leq(irr[k], irr[i]) || b.leq(img, assign[i]))
            });
            if ok {
                assign[k] = img;
                rec(a, b, dom, cod, irr, assign, k + 1, out);
            }
        }
    }

    rec(a, b, &dom, &cod, irr, &mut assign, 0, &mut out);
    out.sort_by(|m, n| m.map.cmp(&n.map));
    out.dedup();
    out
}
