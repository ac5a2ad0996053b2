//! Flatness testing.
//!
//! A finite join-semilattice `S` is flat when `f ⊗ id_S` is injective for
//! every embedding `f`, and this is equivalent to `S` being distributive.
//! Two fixed embeddings into the three-element powerset suffice to detect
//! the failure: `i : M3 → Pow(3)` and `i′ : N5 → Pow(3)` (the diamond kills
//! distributive-failures containing a diamond, the pentagon the rest).
//!
//! The computational backbone is a pair of canonical isomorphisms
//! `M3 ⊗ L ≅ M3[L]` and `N5 ⊗ L ≅ N5[L]` identifying the tensors with box
//! lattices, plus `Pow(n) ⊗ L ≅ L^n`; under these, `i ⊗ id` and `i′ ⊗ id`
//! become explicit componentwise projections, which is how collapse
//! witnesses are produced.

use std::collections::HashMap;
use std::sync::Arc;

use crate::catalog::enumerate::enumerate_lattices;
use crate::error::LatticeError;
use crate::flat::boxes::{triple_box, TripleBox};
use crate::order::distributive::{find_sublattice_copy, is_distributive, Pattern};
use crate::order::morphism::{all_embeddings, JoinMorphism};
use crate::order::semilattice::FiniteJoinSemilattice;
use crate::tensor::bi_ideal::BiIdeal;
use crate::tensor::product::{tensor_morphism, tensor_product, TensorSemilattice};

/// The pattern lattice itself: `M3` or `N5`.
fn pattern_lattice(pattern: Pattern) -> FiniteJoinSemilattice {
    match pattern {
        Pattern::M3 => FiniteJoinSemilattice::m3(),
        Pattern::N5 => FiniteJoinSemilattice::n5(),
    }
}

/// Generator triple for the canonical box isomorphism: the image of
/// `j ⊗ x` where `j` is the `slot`-th join-irreducible of the pattern.
fn generator_triple(pattern: Pattern, slot: usize, x: usize) -> [usize; 3] {
    match (pattern, slot) {
        (Pattern::M3, 0) => [x, 0, 0],
        (Pattern::M3, 1) => [0, x, 0],
        (Pattern::M3, 2) => [0, 0, x],
        // pentagon: a ⊗ x goes to (x, 0, x), b ⊗ x to (0, x, 0),
        // c ⊗ x to (0, 0, x)
        (Pattern::N5, 0) => [x, 0, x],
        (Pattern::N5, 1) => [0, x, 0],
        (Pattern::N5, 2) => [0, 0, x],
        _ => unreachable!("patterns have exactly three join-irreducibles"),
    }
}

fn box_iso_with(bx: &TripleBox, t: &TensorSemilattice) -> JoinMorphism {
    let small = t.left();
    let irr = small.join_irreducibles().to_vec();
    assert_eq!(irr.len(), 3, "pattern lattices have three join-irreducibles");
    let map: Vec<usize> = t
        .elements()
        .iter()
        .map(|h| {
            let mut acc = 0usize;
            for &(m, x) in h.members() {
                for (slot, &j) in irr.iter().enumerate() {
                    if small.leq(j, m) {
                        let g = bx
                            .index_of(generator_triple(bx.pattern(), slot, x))
                            .expect("generator triples must satisfy the box condition");
                        acc = bx.join(acc, g);
                    }
                }
            }
            acc
        })
        .collect();
    let iso = JoinMorphism::with_arcs(t.semilattice_arc(), bx.semilattice_arc(), map)
        .expect("the canonical box map must be a homomorphism");
    assert!(iso.is_bijective(), "the canonical box map must be a bijection");
    iso
}

/// The canonical isomorphism `M3 ⊗ s → M3[s]` (resp. `N5 ⊗ s → N5[s]`),
/// returned together with the two structures it connects.
pub struct CanonicalIso {
    pub tensor: TensorSemilattice,
    pub box_lattice: TripleBox,
    /// From the tensor semilattice onto the box semilattice.
    pub iso: JoinMorphism,
}

pub fn canonical_iso(
    pattern: Pattern,
    s: &FiniteJoinSemilattice,
) -> Result<CanonicalIso, LatticeError> {
    let tensor = tensor_product(&pattern_lattice(pattern), s)?;
    let box_lattice = triple_box(pattern, s)?;
    let iso = box_iso_with(&box_lattice, &tensor);
    Ok(CanonicalIso { tensor, box_lattice, iso })
}

fn cube_iso_with(
    t: &TensorSemilattice,
    cube: Arc<FiniteJoinSemilattice>,
) -> JoinMorphism {
    let pow = t.left();
    let s = t.right();
    let k = pow.join_irreducibles().len();
    let n = s.size();
    // cube rank contribution of value x in slot i
    let slot_rank = |i: usize, x: usize| x * n.pow((k - 1 - i) as u32);
    let map: Vec<usize> = t
        .elements()
        .iter()
        .map(|h| {
            let mut acc = 0usize;
            for &(m, x) in h.members() {
                for (i, &j) in pow.join_irreducibles().iter().enumerate() {
                    if pow.leq(j, m) {
                        acc = cube.join(acc, slot_rank(i, x));
                    }
                }
            }
            acc
        })
        .collect();
    let iso = JoinMorphism::with_arcs(t.semilattice_arc(), cube, map)
        .expect("the canonical cube map must be a homomorphism");
    assert!(iso.is_bijective(), "the canonical cube map must be a bijection");
    iso
}

/// The canonical isomorphism `Pow(n) ⊗ s → s^n` (Kronecker on the pure
/// tensors of singletons). Returns the tensor and the map onto
/// `s.direct_power(n)`.
pub fn power_cube_iso(
    n: u32,
    s: &FiniteJoinSemilattice,
) -> Result<(TensorSemilattice, JoinMorphism), LatticeError> {
    let pow = FiniteJoinSemilattice::powerset(n)?;
    let cube = Arc::new(s.direct_power(n)?);
    let t = tensor_product(&pow, s)?;
    let iso = cube_iso_with(&t, cube);
    Ok((t, iso))
}

fn projection_with(
    bx: &TripleBox,
    cube: Arc<FiniteJoinSemilattice>,
) -> JoinMorphism {
    let s = bx.base();
    let n = s.size();
    let rank = |t: [usize; 3]| (t[0] * n + t[1]) * n + t[2];
    let map: Vec<usize> = bx
        .members()
        .iter()
        .map(|&[x, y, z]| match bx.pattern() {
            Pattern::M3 => rank([s.join(y, z), s.join(x, z), s.join(x, y)]),
            Pattern::N5 => rank([z, y, s.join(x, y)]),
        })
        .collect();
    JoinMorphism::with_arcs(bx.semilattice_arc(), cube, map)
        .expect("the box projection must be a homomorphism")
}

/// The componentwise projection `M3[s] → s³`, `(x,y,z) ↦ (y∨z, x∨z, x∨y)`
/// (resp. `N5[s] → s³`, `(x,y,z) ↦ (z, y, x∨y)`), the box-side reading of
/// `i ⊗ id` (resp. `i′ ⊗ id`).
pub fn projection_map(
    pattern: Pattern,
    s: &FiniteJoinSemilattice,
) -> Result<(TripleBox, JoinMorphism), LatticeError> {
    let bx = triple_box(pattern, s)?;
    let cube = Arc::new(s.direct_power(3)?);
    let g = projection_with(&bx, cube);
    Ok((bx, g))
}

/// The two fixed embeddings into `Pow(3)`:
/// `i : M3 → Pow(3)` with `p ↦ {1,2}`, `q ↦ {0,2}`, `r ↦ {0,1}`, and
/// `i′ : N5 → Pow(3)` with `a ↦ {0,2}`, `b ↦ {1,2}`, `c ↦ {0}`.
pub fn fixed_embeddings() -> (JoinMorphism, JoinMorphism) {
    let pow3 = FiniteJoinSemilattice::powerset(3)
        .expect("Pow(3) is far below any sensible guard");
    let i = JoinMorphism::new(&FiniteJoinSemilattice::m3(), &pow3, vec![0, 6, 5, 3, 7])
        .expect("i must be a homomorphism");
    let ip = JoinMorphism::new(&FiniteJoinSemilattice::n5(), &pow3, vec![0, 5, 6, 1, 7])
        .expect("i′ must be a homomorphism");
    assert!(i.is_embedding() && ip.is_embedding());
    (i, ip)
}

/// Injectivity of `i ⊗ id_s` and `i′ ⊗ id_s`.
pub fn witness_injectivity(s: &FiniteJoinSemilattice) -> Result<(bool, bool), LatticeError> {
    let (i, ip) = fixed_embeddings();
    let pow3 = FiniteJoinSemilattice::powerset(3)?;
    let t_pow = tensor_product(&pow3, s)?;
    let id = JoinMorphism::identity(s);
    let t_m3 = tensor_product(&FiniteJoinSemilattice::m3(), s)?;
    let di = tensor_morphism(&i, &id, &t_m3, &t_pow).is_injective();
    let t_n5 = tensor_product(&FiniteJoinSemilattice::n5(), s)?;
    let pi = tensor_morphism(&ip, &id, &t_n5, &t_pow).is_injective();
    Ok((di, pi))
}

/// Check that both square diagrams commute over `s`: the cube isomorphism
/// composed with `i ⊗ id` (resp. `i′ ⊗ id`) equals the projection composed
/// with the box isomorphism. Returns false instead of panicking so that
/// batch verification can record a failure.
pub fn check_diagrams(s: &FiniteJoinSemilattice) -> Result<bool, LatticeError> {
    let pow3 = FiniteJoinSemilattice::powerset(3)?;
    let cube = Arc::new(s.direct_power(3)?);
    let t_pow = tensor_product(&pow3, s)?;
    let beta = cube_iso_with(&t_pow, cube.clone());
    let (i, ip) = fixed_embeddings();
    let id = JoinMorphism::identity(s);
    for (pattern, emb) in [(Pattern::M3, i), (Pattern::N5, ip)] {
        let t_small = tensor_product(&pattern_lattice(pattern), s)?;
        let bx = triple_box(pattern, s)?;
        let alpha = box_iso_with(&bx, &t_small);
        let g = projection_with(&bx, cube.clone());
        let f_tensor = tensor_morphism(&emb, &id, &t_small, &t_pow);
        for e in 0..t_small.size() {
            if beta.apply(f_tensor.apply(e)) != g.apply(alpha.apply(e)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// A pair of distinct tensor elements identified by the corresponding
/// witness map, demonstrating non-flatness.
#[derive(Debug, Clone)]
pub struct TensorCollapse {
    /// Which fixed embedding collapses the pair: `M3` for `i ⊗ id`, `N5`
    /// for `i′ ⊗ id`.
    pub pattern: Pattern,
    /// Distinct elements of `M3 ⊗ s` (resp. `N5 ⊗ s`) ...
    pub u: BiIdeal,
    pub v: BiIdeal,
    /// ... with this common image in `Pow(3) ⊗ s`.
    pub image: BiIdeal,
}

/// Produce a collapse witness for a non-distributive `s`, built from the
/// lexicographically least diamond (preferred) or pentagon sublattice copy.
pub fn counterexample(s: &FiniteJoinSemilattice) -> Result<TensorCollapse, LatticeError> {
    let (pattern, copy) = match find_sublattice_copy(s, Pattern::M3) {
        Some(c) => (Pattern::M3, c),
        None => match find_sublattice_copy(s, Pattern::N5) {
            Some(c) => (Pattern::N5, c),
            None => return Err(LatticeError::IsDistributive),
        },
    };
    let [_, x, y, z, i] = copy;
    let ci = canonical_iso(pattern, s)?;
    let (u_triple, v_triple) = match pattern {
        Pattern::M3 => ([x, y, z], [i, i, i]),
        Pattern::N5 => ([x, y, z], [z, y, z]),
    };
    let u_box = ci
        .box_lattice
        .index_of(u_triple)
        .expect("the witness triple must satisfy the box condition");
    let v_box = ci
        .box_lattice
        .index_of(v_triple)
        .expect("the witness triple must satisfy the box condition");
    assert_ne!(u_box, v_box, "witness triples must be distinct");
    let inv = ci.iso.inverse();
    let (u_t, v_t) = (inv.apply(u_box), inv.apply(v_box));

    let (emb_i, emb_ip) = fixed_embeddings();
    let emb = match pattern {
        Pattern::M3 => emb_i,
        Pattern::N5 => emb_ip,
    };
    let pow3 = FiniteJoinSemilattice::powerset(3)?;
    let t_pow = tensor_product(&pow3, s)?;
    let phi = tensor_morphism(&emb, &JoinMorphism::identity(s), &ci.tensor, &t_pow);
    assert_eq!(
        phi.apply(u_t),
        phi.apply(v_t),
        "the witness pair must collapse under the fixed embedding"
    );
    Ok(TensorCollapse {
        pattern,
        u: ci.tensor.element(u_t).clone(),
        v: ci.tensor.element(v_t).clone(),
        image: t_pow.element(phi.apply(u_t)).clone(),
    })
}

#[derive(Debug, Clone)]
pub struct FlatnessReport {
    pub flat: bool,
    pub distributive: bool,
    /// Injectivity of `i ⊗ id` (diamond route).
    pub diamond_injective: bool,
    /// Injectivity of `i′ ⊗ id` (pentagon route).
    pub pentagon_injective: bool,
    /// A collapsing pair when not flat.
    pub collapse: Option<TensorCollapse>,
}

/// Full flatness check. The theorem `flat ⇔ distributive ⇔ both witness
/// maps injective` is asserted, so the three verdicts cannot drift apart.
pub fn flatness(s: &FiniteJoinSemilattice) -> Result<FlatnessReport, LatticeError> {
    let distributive = is_distributive(s).distributive;
    let (diamond_injective, pentagon_injective) = witness_injectivity(s)?;
    assert_eq!(
        distributive,
        diamond_injective && pentagon_injective,
        "flatness equivalence violated"
    );
    let collapse = if distributive { None } else { Some(counterexample(s)?) };
    Ok(FlatnessReport {
        flat: distributive,
        distributive,
        diamond_injective,
        pentagon_injective,
        collapse,
    })
}

/// Independent flatness check: tensor `s` against every embedding between
/// catalog lattices of size at most `bound`, plus the two fixed embeddings,
/// and report whether all of these maps stay injective.
pub fn brute_force_flat(
    s: &FiniteJoinSemilattice,
    bound: usize,
) -> Result<bool, LatticeError> {
    let mut structures: Vec<FiniteJoinSemilattice> = Vec::new();
    for n in 1..=bound {
        structures.extend(enumerate_lattices(n)?);
    }
    let id = JoinMorphism::identity(s);
    let mut tensors: HashMap<usize, TensorSemilattice> = HashMap::new();
    for (k, a) in structures.iter().enumerate() {
        tensors.insert(k, tensor_product(a, s)?);
    }
    for (ka, a) in structures.iter().enumerate() {
        for (kb, b) in structures.iter().enumerate() {
            for emb in all_embeddings(a, b) {
                let phi = tensor_morphism(&emb, &id, &tensors[&ka], &tensors[&kb]);
                if !phi.is_injective() {
                    return Ok(false);
                }
            }
        }
    }
    let (i, ip) = fixed_embeddings();
    let pow3 = FiniteJoinSemilattice::powerset(3)?;
    let t_pow = tensor_product(&pow3, s)?;
    for (small, emb) in [
        (FiniteJoinSemilattice::m3(), i),
        (FiniteJoinSemilattice::n5(), ip),
    ] {
        let t_small = tensor_product(&small, s)?;
        if !tensor_morphism(&emb, &id, &t_small, &t_pow).is_injective() {
            return Ok(false);
        }
    }
    Ok(true)
}
