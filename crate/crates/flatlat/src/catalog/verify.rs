//! Batch verification of the flatness theorem over the lattice catalog.
//!
//! For every isomorphism class up to the requested size this runs, without
//! any shortcut through the theorem itself:
//!
//! - the three-route distributivity test,
//! - injectivity of the two fixed witness maps `i ⊗ id` and `i′ ⊗ id`,
//! - the box/cube diagram checks,
//! - the power laws `|Pow(n) ⊗ S| = |S|ⁿ` for n ≤ 3,
//! - the ε bijection between antitone homs and tensor elements for small
//!   left factors,
//! - brute-force flatness over catalog embeddings.
//!
//! A failure of the expected equivalences is recorded, not panicked, so a
//! full report always comes back.

use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use crate::catalog::canonical::canonical_form;
use crate::catalog::enumerate::enumerate_lattices;
use crate::error::LatticeError;
use crate::flat::flatness::{brute_force_flat, check_diagrams, power_cube_iso, witness_injectivity};
use crate::order::distributive::is_distributive;
use crate::order::semilattice::FiniteJoinSemilattice;
use crate::tensor::antitone::{enumerate_antitone_homs, epsilon, epsilon_inv};
use crate::tensor::product::tensor_product;

/// Largest size `verify_theorem` accepts; the catalog beyond this gets too
/// large for an exhaustive tensor sweep.
pub const VERIFY_CAP: usize = 7;

/// Bound for the brute-force flatness sweep inside verification.
const BRUTE_FORCE_BOUND: usize = 4;

#[derive(Debug, Clone)]
pub struct StructureRecord {
    /// Carrier size and position within the size class, canonical order.
    pub size: usize,
    pub index: usize,
    pub canonical_hex: String,
    pub distributive: bool,
    pub diamond_injective: bool,
    pub pentagon_injective: bool,
    pub diagrams_ok: bool,
    pub power_law_ok: bool,
    pub epsilon_ok: bool,
    pub brute_force_flat: bool,
    pub elapsed_ms: u128,
}

impl StructureRecord {
    pub fn id(&self) -> String {
        format!("{}.{}", self.size, self.index)
    }

    /// The statements that must hold if the theorem (and this crate) are
    /// right; any violation is reported as a failure line.
    fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        let both = self.diamond_injective && self.pentagon_injective;
        if self.distributive != both {
            out.push(format!(
                "{}: distributive={} but witness injectivity ({}, {})",
                self.id(),
                self.distributive,
                self.diamond_injective,
                self.pentagon_injective
            ));
        }
        if self.distributive != self.brute_force_flat {
            out.push(format!(
                "{}: distributive={} but brute-force flatness={}",
                self.id(),
                self.distributive,
                self.brute_force_flat
            ));
        }
        if !self.diagrams_ok {
            out.push(format!("{}: box/cube diagrams do not commute", self.id()));
        }
        if !self.power_law_ok {
            out.push(format!("{}: power law violated", self.id()));
        }
        if !self.epsilon_ok {
            out.push(format!("{}: ε is not a bijection", self.id()));
        }
        out
    }
}

#[derive(Debug)]
pub struct VerificationReport {
    pub max_size: usize,
    pub jobs: usize,
    pub records: Vec<StructureRecord>,
    pub failures: Vec<String>,
    pub elapsed_ms: u128,
}

impl VerificationReport {
    pub fn all_consistent(&self) -> bool {
        self.failures.is_empty()
    }

    /// Human-readable table.
    pub fn text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "theorem verification up to size {} ({} structures, jobs={})\n\n",
            self.max_size,
            self.records.len(),
            self.jobs
        ));
        out.push_str("  id    size  distributive  i⊗id  i′⊗id  diagrams  powers  ε   brute  ms\n");
        for r in &self.records {
            let inj = |b: bool| if b { "inj " } else { "coll" };
            let ok = |b: bool| if b { "ok " } else { "BAD" };
            out.push_str(&format!(
                "  {:<5} {:<5} {:<13} {:<5} {:<6} {:<9} {:<7} {:<3} {:<6} {}\n",
                r.id(),
                r.size,
                if r.distributive { "yes" } else { "no" },
                inj(r.diamond_injective),
                inj(r.pentagon_injective),
                ok(r.diagrams_ok),
                ok(r.power_law_ok),
                ok(r.epsilon_ok),
                if r.brute_force_flat { "flat" } else { "not" },
                r.elapsed_ms
            ));
        }
        out.push('\n');
        if self.failures.is_empty() {
            out.push_str(&format!(
                "all consistent: flat ⇔ distributive held for all {} structures ({} ms)\n",
                self.records.len(),
                self.elapsed_ms
            ));
        } else {
            out.push_str(&format!("{} FAILURES:\n", self.failures.len()));
            for f in &self.failures {
                out.push_str(&format!("  {f}\n"));
            }
        }
        out
    }

    /// Line-oriented `key=value` output with a stable key order.
    pub fn machine_format(&self) -> String {
        let mut out = format!(
            "report max_size={} jobs={} structures={} failures={} elapsed_ms={}\n",
            self.max_size,
            self.jobs,
            self.records.len(),
            self.failures.len(),
            self.elapsed_ms
        );
        for r in &self.records {
            out.push_str(&format!(
                "structure id={} size={} canonical={} distributive={} witness_i={} witness_i_prime={} diagrams={} power_law={} epsilon={} brute_force={} elapsed_ms={}\n",
                r.id(),
                r.size,
                r.canonical_hex,
                r.distributive,
                r.diamond_injective,
                r.pentagon_injective,
                r.diagrams_ok,
                r.power_law_ok,
                r.epsilon_ok,
                r.brute_force_flat,
                r.elapsed_ms
            ));
        }
        for f in &self.failures {
            out.push_str(&format!("failure detail={f}\n"));
        }
        out
    }
}

/// ε bijection check against a few small left factors: hom count equals
/// tensor size, ε lands injectively in the tensor, and the round trip
/// returns the original hom.
fn epsilon_check(s: &FiniteJoinSemilattice) -> Result<bool, LatticeError> {
    let lefts = [
        FiniteJoinSemilattice::chain(1)?,
        FiniteJoinSemilattice::chain(2)?,
        FiniteJoinSemilattice::chain(3)?,
        FiniteJoinSemilattice::powerset(2)?,
    ];
    for a in &lefts {
        let t = tensor_product(a, s)?;
        let homs = enumerate_antitone_homs(a, s)?;
        if homs.len() != t.size() {
            return Ok(false);
        }
        let mut seen = vec![false; t.size()];
        for xi in &homs {
            let h = epsilon(xi);
            match t.index_of(&h) {
                Some(i) if !seen[i] => seen[i] = true,
                _ => return Ok(false),
            }
            if &epsilon_inv(&h) != xi {
                return Ok(false);
            }
        }
        if !seen.iter().all(|&b| b) {
            return Ok(false);
        }
    }
    Ok(true)
}

fn check_structure(
    size: usize,
    index: usize,
    s: &FiniteJoinSemilattice,
) -> Result<StructureRecord, LatticeError> {
    let start = Instant::now();
    let distributive = is_distributive(s).distributive;
    let (diamond_injective, pentagon_injective) = witness_injectivity(s)?;
    let diagrams_ok = check_diagrams(s)?;
    let mut power_law_ok = true;
    for n in 1..=3u32 {
        let (t, iso) = power_cube_iso(n, s)?;
        power_law_ok &= t.size() == s.size().pow(n) && iso.is_bijective();
    }
    let epsilon_ok = epsilon_check(s)?;
    let brute = brute_force_flat(s, BRUTE_FORCE_BOUND)?;
    Ok(StructureRecord {
        size,
        index,
        canonical_hex: canonical_form(s)?.hex(),
        distributive,
        diamond_injective,
        pentagon_injective,
        diagrams_ok,
        power_law_ok,
        epsilon_ok,
        brute_force_flat: brute,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

/// Verify the theorem over every isomorphism class of size ≤ `max_size`,
/// fanning the per-structure work out over `jobs` threads.
pub fn verify_theorem(
    max_size: usize,
    jobs: usize,
) -> Result<VerificationReport, LatticeError> {
    if max_size == 0 || max_size > VERIFY_CAP {
        return Err(LatticeError::SizeGuardExceeded { size: max_size, guard: VERIFY_CAP });
    }
    let jobs = jobs.max(1);
    let start = Instant::now();
    let mut structures: Vec<(usize, usize, FiniteJoinSemilattice)> = Vec::new();
    for n in 1..=max_size {
        for (i, s) in enumerate_lattices(n)?.into_iter().enumerate() {
            structures.push((n, i, s));
        }
    }
    let cursor = AtomicUsize::new(0);
    let results: Mutex<Vec<Option<Result<StructureRecord, LatticeError>>>> =
        Mutex::new(vec![None; structures.len()]);
    std::thread::scope(|scope| {
        for _ in 0..jobs.min(structures.len().max(1)) {
            scope.spawn(|| loop {
                let k = cursor.fetch_add(1, Ordering::Relaxed);
                let Some((n, i, s)) = structures.get(k) else {
                    break;
                };
                let record = check_structure(*n, *i, s);
                results.lock().unwrap()[k] = Some(record);
            });
        }
    });
    let mut records = Vec::with_capacity(structures.len());
    for slot in results.into_inner().unwrap() {
        records.push(slot.expect("every structure gets processed")?);
    }
    let failures: Vec<String> = records.iter().flat_map(|r| r.failures()).collect();
    Ok(VerificationReport {
        max_size,
        jobs,
        records,
        failures,
        elapsed_ms: start.elapsed().as_millis(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verify_up_to_five_is_consistent() {
        let report = verify_theorem(5, 1).unwrap();
        assert_eq!(report.records.len(), 1 + 1 + 1 + 2 + 5);
        assert!(report.all_consistent(), "{:?}", report.failures);
        // the two non-distributive classes of size 5 fail at least one
        // witness map each, in opposite configurations for M3 and N5
        let collapsed: Vec<&StructureRecord> = report
            .records
            .iter()
            .filter(|r| !r.distributive)
            .collect();
        assert_eq!(collapsed.len(), 2);
        assert!(collapsed
            .iter()
            .all(|r| !(r.diamond_injective && r.pentagon_injective)));
        assert!(collapsed.iter().all(|r| !r.brute_force_flat));
    }

    #[test]
    fn verify_fans_out_across_jobs() {
        let a = verify_theorem(4, 1).unwrap();
        let b = verify_theorem(4, 3).unwrap();
        assert_eq!(a.records.len(), b.records.len());
        assert!(a.all_consistent() && b.all_consistent());
        // records arrive in the same deterministic order regardless of jobs
        for (x, y) in a.records.iter().zip(&b.records) {
            assert_eq!(x.id(), y.id());
            assert_eq!(x.canonical_hex, y.canonical_hex);
            assert_eq!(x.distributive, y.distributive);
        }
    }

    #[test]
    fn report_formats_are_stable() {
        let report = verify_theorem(3, 1).unwrap();
        let text = report.text();
        assert!(text.contains("theorem verification up to size 3"));
        assert!(text.contains("all consistent"));
        let machine = report.machine_format();
        assert!(machine.starts_with("report max_size=3 jobs=1 structures=3 failures=0"));
        assert_eq!(machine.lines().count(), 1 + 3);
        for line in machine.lines().skip(1) {
            assert!(line.starts_with("structure id="));
        }
    }

    #[test]
    fn guard_rejects_out_of_range_sizes() {
        assert!(verify_theorem(0, 1).is_err());
        assert!(verify_theorem(8, 1).is_err());
    }
}
