//! Command-line front end.
//!
//! Exit codes: 0 success (or a true verdict), 1 a false verdict
//! (non-distributive, non-flat, non-isomorphic, verification failures),
//! 2 malformed input, 3 size guard exceeded.

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use flatlat::{
    emit_dot, enumerate_lattices, flatness, ideal_lattice, is_distributive,
    is_isomorphic, parse_slf, tensor_product, verify_theorem, FiniteJoinSemilattice,
    LatticeError, Pattern, SlfErrorKind,
};

#[derive(Parser)]
#[command(
    name = "flatlat",
    version,
    about = "Tensor products, distributivity and flatness for finite join-semilattices",
    after_help = "STRUCTURES are builtin names (M3, N5, Pow(n), Chain(n)) or paths to SLF \
files. An SLF file has one `elements` line listing labels and `le a b` lines \
declaring order relations; `#` starts a comment."
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Parse and validate a structure, printing a short summary
    Check { structure: String },
    /// Test distributivity (exit 1 with a witness when it fails)
    Distributive { structure: String },
    /// Test flatness via the two fixed witness embeddings (exit 1 when not flat)
    Flat {
        structure: String,
        /// Also print a collapsing pair of tensor elements when not flat
        #[arg(long)]
        witness: bool,
    },
    /// Build the tensor product of two structures
    Tensor {
        left: String,
        right: String,
        /// Print every element and the full join table
        #[arg(long, conflicts_with = "dot")]
        table: bool,
        /// Print the Hasse diagram of the tensor in Graphviz DOT
        #[arg(long)]
        dot: bool,
    },
    /// List the ideals of a structure
    Ideals { structure: String },
    /// Print the Hasse diagram in Graphviz DOT
    Dot { structure: String },
    /// Test two structures for isomorphism (exit 1 when they differ)
    Iso { left: String, right: String },
    /// Re-verify the flatness theorem over all small lattices
    Verify {
        /// Largest carrier size to include (1..=7)
        #[arg(long, default_value_t = 5)]
        max_size: usize,
        /// Worker threads
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Line-oriented key=value output instead of the table
        #[arg(long)]
        machine: bool,
    },
    /// List the isomorphism classes of lattices of a given size
    Census {
        /// Carrier size (1..=8)
        size: usize,
    },
}

const EXIT_FALSE: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_GUARD: u8 = 3;

struct Failure {
    code: u8,
    message: String,
}

impl From<LatticeError> for Failure {
    fn from(e: LatticeError) -> Self {
        let code = match e {
            LatticeError::SizeGuardExceeded { .. } => EXIT_GUARD,
            _ => EXIT_INPUT,
        };
        Failure { code, message: e.to_string() }
    }
}

/// Resolve a structure argument: builtin name first, then SLF file path.
fn load(arg: &str) -> Result<FiniteJoinSemilattice, Failure> {
    match FiniteJoinSemilattice::builtin(arg) {
        Ok(s) => return Ok(s),
        Err(LatticeError::UnknownBuiltin(_)) => {}
        Err(e) => return Err(e.into()),
    }
    let text = std::fs::read_to_string(arg).map_err(|e| Failure {
        code: EXIT_INPUT,
        message: format!("cannot read `{arg}`: {e}"),
    })?;
    parse_slf(&text).map_err(|e| {
        let code = match &e.kind {
            SlfErrorKind::Lattice(LatticeError::SizeGuardExceeded { .. }) => EXIT_GUARD,
            _ => EXIT_INPUT,
        };
        Failure { code, message: format!("{arg}: {e}") }
    })
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.cmd {
        Cmd::Check { structure } => {
            let s = load(&structure)?;
            println!("ok: {} elements, {} cover pairs", s.size(), s.covers().len());
            println!("labels: {}", s.names().join(" "));
            Ok(0)
        }
        Cmd::Distributive { structure } => {
            let s = load(&structure)?;
            let report = is_distributive(&s);
            println!("distributive: {}", report.distributive);
            if let Some((a, b0, b1)) = report.witness {
                println!(
                    "witness: {} ≤ {} ∨ {} has no refinement",
                    s.name(a),
                    s.name(b0),
                    s.name(b1)
                );
                return Ok(EXIT_FALSE);
            }
            Ok(0)
        }
        Cmd::Flat { structure, witness } => {
            let s = load(&structure)?;
            let report = flatness(&s)?;
            println!("flat: {}", report.flat);
            println!("distributive: {}", report.distributive);
            println!("i ⊗ id injective: {}", report.diamond_injective);
            println!("i′ ⊗ id injective: {}", report.pentagon_injective);
            if witness {
                if let Some(c) = &report.collapse {
                    let route = match c.pattern {
                        Pattern::M3 => "diamond",
                        Pattern::N5 => "pentagon",
                    };
                    println!("collapse ({route} route):");
                    println!("  u = {}", c.u.tensor_expr());
                    println!("  v = {}", c.v.tensor_expr());
                    println!("  image = {}", c.image.tensor_expr());
                }
            }
            Ok(if report.flat { 0 } else { EXIT_FALSE })
        }
        Cmd::Tensor { left, right, table, dot } => {
            let a = load(&left)?;
            let b = load(&right)?;
            let t = tensor_product(&a, &b)?;
            if dot {
                print!("{}", emit_dot(t.semilattice()));
            } else if table {
                println!("|A ⊗ B| = {}", t.size());
                println!("elements:");
                for i in 0..t.size() {
                    println!("  {}: {}", i, t.semilattice().name(i));
                }
                println!("join table:");
                for i in 0..t.size() {
                    let row: Vec<String> =
                        (0..t.size()).map(|j| t.join(i, j).to_string()).collect();
                    println!("  {}", row.join(" "));
                }
            } else {
                println!("|A ⊗ B| = {}", t.size());
            }
            Ok(0)
        }
        Cmd::Ideals { structure } => {
            let s = load(&structure)?;
            let idl = ideal_lattice(&s);
            println!("ideals: {}", idl.count());
            for i in 0..idl.count() {
                let labels: Vec<&str> =
                    idl.members(i).into_iter().map(|x| s.name(x)).collect();
                println!("  {}: {{{}}}", i, labels.join(","));
            }
            let principal: Vec<String> = (0..s.size())
                .map(|x| format!("{}↦{}", s.name(x), idl.principal()[x]))
                .collect();
            println!("principal: {}", principal.join(" "));
            Ok(0)
        }
        Cmd::Dot { structure } => {
            let s = load(&structure)?;
            print!("{}", emit_dot(&s));
            Ok(0)
        }
        Cmd::Iso { left, right } => {
            let a = load(&left)?;
            let b = load(&right)?;
            let iso = is_isomorphic(&a, &b)?;
            println!("isomorphic: {iso}");
            Ok(if iso { 0 } else { EXIT_FALSE })
        }
        Cmd::Verify { max_size, jobs, machine } => {
            let report = verify_theorem(max_size, jobs)?;
            if machine {
                print!("{}", report.machine_format());
            } else {
                print!("{}", report.text());
            }
            Ok(if report.all_consistent() { 0 } else { EXIT_FALSE })
        }
        Cmd::Census { size } => {
            let classes = enumerate_lattices(size)?;
            println!("lattices with {} elements: {}", size, classes.len());
            for (i, s) in classes.iter().enumerate() {
                let covers: Vec<String> = s
                    .covers()
                    .iter()
                    .map(|&(lo, hi)| format!("{}<{}", s.name(lo), s.name(hi)))
                    .collect();
                println!("  {}.{}: {}", size, i, covers.join(" "));
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
