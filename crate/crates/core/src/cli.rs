//! Command-line front end. [`dispatch`] parses arguments, runs one command
//! and returns the exit code with the text to print, so it can be driven
//! from tests without spawning a process.
//!
//! Exit codes: 0 success, 2 invalid or undefined input, 3 cross-check
//! disagreement.

use std::fmt::Write as _;
use std::io::Read as _;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::combinatorics::{jd_string, poincare_dual, Family, LabelString, Partition, Permutation};
use crate::error::{Error, Result};
use crate::oracle::{QFunctionOracle, QpFamily, SchubertCalculus};
use crate::puzzle::{PuzzleBoundary, PuzzleSolver};
use crate::qh_isotropic::{FamilyRules, IsotropicRing};
use crate::qh_typea::{Engine, TypeARing};
use crate::verify::{self, SweepReport};

#[derive(Debug, Parser)]
#[command(name = "qschubert", version, about = "Three-point genus-zero Gromov-Witten invariants of G(k,n), LG(n,2n) and OG(n+1,2n+2)")]
pub struct Cli {
    /// Emit a machine-readable JSON record instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Worker threads for verification sweeps (speed only).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// One invariant ⟨σ_λ, σ_μ, σ_ν⟩_d.
    Gw(GwArgs),
    /// The quantum product σ_λ ∗ σ_μ.
    Qmult(QmultArgs),
    /// Count or draw two-step puzzles.
    #[command(subcommand)]
    Puzzle(PuzzleCommand),
    /// The 012-string J^d(λ).
    Jstring(JstringArgs),
    /// The Poincaré dual index.
    Dual(DualArgs),
    /// Exhaustive cross-check sweeps.
    #[command(subcommand)]
    Check(CheckCommand),
    /// Direct access to the brute-force oracles.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Re-run a JSON record produced by `gw --json` (file path or `-`).
    Replay { input: String },
}

#[derive(Debug, Args)]
pub struct Space {
    /// Family: A (G(k,n)), C (LG(n,2n)) or D (OG(n+1,2n+2)).
    #[arg(long = "type", value_name = "A|C|D")]
    pub family: Family,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub n: usize,
}

#[derive(Debug, Args)]
pub struct GwArgs {
    #[command(flatten)]
    pub space: Space,
    /// Degree; inferred from the dimension condition when omitted.
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long)]
    pub lambda: Partition,
    #[arg(long)]
    pub mu: Partition,
    #[arg(long)]
    pub nu: Partition,
    /// Type A engine: puzzle, oracle or both.
    #[arg(long)]
    pub engine: Option<Engine>,
}

#[derive(Debug, Args)]
pub struct QmultArgs {
    #[command(flatten)]
    pub space: Space,
    #[arg(long)]
    pub lambda: Partition,
    #[arg(long)]
    pub mu: Partition,
    #[arg(long)]
    pub engine: Option<Engine>,
}

#[derive(Debug, Subcommand)]
pub enum PuzzleCommand {
    /// Number of puzzles with the given boundary.
    Count(BoundaryArgs),
    /// Every filling, drawn in monospace.
    Show {
        #[command(flatten)]
        boundary: BoundaryArgs,
        /// Print the piece list (kind rotation row column extension).
        #[arg(long)]
        dump: bool,
    },
}

#[derive(Debug, Args)]
pub struct BoundaryArgs {
    /// North-west side, read clockwise.
    pub nw: LabelString,
    /// North-east side, read clockwise.
    pub ne: LabelString,
    /// South side, read clockwise.
    pub s: LabelString,
}

#[derive(Debug, Args)]
pub struct JstringArgs {
    #[arg(long)]
    pub k: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub d: usize,
    #[arg(long)]
    pub lambda: Partition,
}

#[derive(Debug, Args)]
pub struct DualArgs {
    #[command(flatten)]
    pub space: Space,
    #[arg(long)]
    pub lambda: Partition,
}

#[derive(Debug, Subcommand)]
pub enum CheckCommand {
    /// Puzzle counts against Schubert polynomial integrals on F(a,b;n).
    Conjecture {
        #[arg(long, default_value_t = 1)]
        min_n: usize,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
    /// Commutativity and associativity of the quantum product.
    Associativity {
        #[arg(long = "type", value_name = "A|C|D")]
        family: Family,
        #[arg(long)]
        n: usize,
    },
    /// The Pfaffian Laplace identity for ℓ(λ) ≥ 3.
    Pfaffian {
        #[arg(long = "type", value_name = "C|D")]
        family: Option<Family>,
        #[arg(long, default_value_t = 5)]
        n: usize,
    },
    /// Degree-1 invariants of LG(n,2n) against LG(n+1,2n+2).
    Lift {
        #[arg(long, default_value_t = 4)]
        n: usize,
    },
    /// The presentation relations.
    Relations {
        #[arg(long = "type", value_name = "C|D")]
        family: Option<Family>,
        #[arg(long, default_value_t = 5)]
        n: usize,
    },
    /// J^d(λ) against the 012-string of w_{λ,d}.
    Jstring {
        #[arg(long, default_value_t = 8)]
        n: usize,
    },
    /// Vanishing when some λ_d < d.
    Yong {
        #[arg(long, default_value_t = 6)]
        n: usize,
    },
    /// τ_n ∗ τ_n = q.
    Tau {
        #[arg(long, default_value_t = 6)]
        n: usize,
    },
    /// Classical parts against Littlewood-Richardson or Q/P-function numbers.
    Classical {
        #[arg(long = "type", value_name = "A|C|D")]
        family: Family,
        #[arg(long, default_value_t = 5)]
        n: usize,
        #[arg(long, default_value_t = 12)]
        max_weight: usize,
    },
    /// Vanishing of invariants with a class below the length threshold.
    Vanishing {
        #[arg(long = "type", value_name = "C|D")]
        family: Family,
        #[arg(long, default_value_t = 4)]
        n: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum OracleCommand {
    /// Schubert polynomial products in a common S_N.
    Schubert {
        #[arg(long)]
        u: Permutation,
        #[arg(long)]
        v: Permutation,
        #[arg(long)]
        w: Option<Permutation>,
    },
    /// Schur Q- or P-function products.
    Qp {
        #[arg(long, value_name = "Q|P")]
        family: QpFamily,
        #[arg(long)]
        lambda: Partition,
        #[arg(long)]
        mu: Partition,
        #[arg(long)]
        nu: Option<Partition>,
    },
}

/// The JSON record written by `gw --json` and read by `replay`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GwRecord {
    pub family: Family,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    pub lambda: Partition,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<Partition>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nu: Option<Partition>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub engine: Option<Engine>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classical_equivalent: Option<String>,
}

/// Exit code and text produced by one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub output: String,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome { code: 0, output }
    }
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::EngineDisagreement { .. } | Error::Inconsistent(_) => 3,
        _ => 2,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn dispatch<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return Outcome { code, output: e.render().to_string() };
        }
    };
    match run(&cli) {
        Ok(outcome) => outcome,
        Err(e) => {
            let text = match &e {
                Error::DimensionCondition(_) => format!("{e}\n"),
                _ => format!("error: {e}\n"),
            };
            Outcome { code: exit_code(&e), output: text }
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Gw(args) => {
            let record = GwRecord {
                family: args.space.family,
                k: args.space.k,
                n: args.space.n,
                d: args.d,
                lambda: args.lambda.clone(),
                mu: Some(args.mu.clone()),
                nu: Some(args.nu.clone()),
                value: None,
                engine: args.engine,
                classical_equivalent: None,
            };
            let done = evaluate_gw(&record)?;
            Ok(Outcome::ok(if cli.json { gw_json(&done)? } else { gw_text(&done) }))
        }
        Command::Qmult(args) => qmult(cli.json, args),
        Command::Puzzle(cmd) => puzzle(cli.json, cmd),
        Command::Jstring(args) => {
            let j = jd_string(&args.lambda, args.k, args.n, args.d)?;
            Ok(Outcome::ok(if cli.json {
                format!(
                    "{}\n",
                    json!({"k": args.k, "n": args.n, "d": args.d, "lambda": args.lambda.to_string(), "jstring": j.to_string()})
                )
            } else {
                format!("{j}\n")
            }))
        }
        Command::Dual(args) => {
            let k = match args.space.family {
                Family::A => require_k(&args.space)?,
                _ => 0,
            };
            let dual = poincare_dual(args.space.family, &args.lambda, k, args.space.n)?;
            Ok(Outcome::ok(if cli.json {
                let mut v = json!({"family": args.space.family, "n": args.space.n, "lambda": args.lambda.to_string(), "dual": dual.to_string()});
                if args.space.family == Family::A {
                    v["k"] = json!(k);
                }
                format!("{v}\n")
            } else {
                format!("{dual}\n")
            }))
        }
        Command::Check(cmd) => {
            let reports = verify::with_threads(cli.threads, || check(cmd))??;
            let passed = reports.iter().all(SweepReport::passed);
            let output = if cli.json {
                format!("{}\n", serde_json::to_string(&reports).map_err(|e| Error::Inconsistent(e.to_string()))?)
            } else {
                reports.iter().map(|r| format!("{r}\n")).collect()
            };
            Ok(Outcome { code: if passed { 0 } else { 3 }, output })
        }
        Command::Oracle(cmd) => oracle(cli.json, cmd),
        Command::Replay { input } => {
            let text = if input == "-" {
                let mut s = String::new();
                std::io::stdin().read_to_string(&mut s).map_err(|e| Error::InvalidString(e.to_string()))?;
                s
            } else {
                std::fs::read_to_string(input).map_err(|e| Error::InvalidString(format!("{input}: {e}")))?
            };
            let record: GwRecord =
                serde_json::from_str(text.trim()).map_err(|e| Error::InvalidString(format!("bad record: {e}")))?;
            let done = evaluate_gw(&record)?;
            if record.value.is_some() && record.value != done.value {
                return Ok(Outcome {
                    code: 3,
                    output: format!(
                        "error: recorded value {} differs from recomputed value {}\n",
                        record.value.unwrap_or_default(),
                        done.value.unwrap_or_default()
                    ),
                });
            }
            Ok(Outcome::ok(gw_json(&done)?))
        }
    }
}

fn require_k(space: &Space) -> Result<usize> {
    space.k.ok_or_else(|| Error::ShapeOutOfRange("type A needs --k".into()))
}

/// Computes the invariant described by `record` and fills in `d`,
/// `value`, `engine` and `classical_equivalent`.
pub fn evaluate_gw(record: &GwRecord) -> Result<GwRecord> {
    let mu = record.mu.clone().ok_or_else(|| Error::InvalidString("record has no mu".into()))?;
    let nu = record.nu.clone().ok_or_else(|| Error::InvalidString("record has no nu".into()))?;
    let lam = &record.lambda;
    let n = record.n;
    let mut out = record.clone();
    match record.family {
        Family::A => {
            let k = record.k.ok_or_else(|| Error::ShapeOutOfRange("type A needs --k".into()))?;
            let engine = record.engine.unwrap_or_default();
            let ring = TypeARing::new(k, n, engine)?;
            let d = match record.d {
                Some(d) => d,
                None => ring.degree_for(lam, &mu, &nu)?,
            };
            let value = ring.gw(d, lam, &mu, &nu)?;
            out.d = Some(d);
            out.engine = Some(engine);
            out.value = Some(value);
            out.classical_equivalent = (d <= k.min(n - k)).then(|| format!("F({},{};{n})", k - d, k + d));
        }
        family => {
            if record.k.is_some() || record.engine.is_some() {
                return Err(Error::InvalidString("--k and --engine apply to type A only".into()));
            }
            let rules = FamilyRules::new(family, n)?;
            let d = match record.d {
                Some(d) => d,
                None => rules.degree_for(lam.weight() + mu.weight() + nu.weight())?,
            };
            let ring = IsotropicRing::new(family, n)?;
            out.d = Some(d);
            out.value = Some(ring.gw(d, lam, &mu, &nu)?);
            out.classical_equivalent = Some(rules.classical_equivalent(d));
        }
    }
    Ok(out)
}

fn space_name(family: Family, k: Option<usize>, n: usize) -> String {
    match family {
        Family::A => format!("G({},{n})", k.unwrap_or(0)),
        Family::C => format!("LG({n},{})", 2 * n),
        Family::D => format!("OG({},{})", n + 1, 2 * n + 2),
    }
}

fn symbol(family: Family) -> char {
    if family == Family::D {
        'τ'
    } else {
        'σ'
    }
}

fn gw_text(r: &GwRecord) -> String {
    let s = symbol(r.family);
    let mut out = String::new();
    let mu = r.mu.as_ref().map(ToString::to_string).unwrap_or_default();
    let nu = r.nu.as_ref().map(ToString::to_string).unwrap_or_default();
    let d = r.d.unwrap_or(0);
    let value = r.value.unwrap_or(0);
    let _ = writeln!(
        out,
        "⟨{s}({}), {s}({mu}), {s}({nu})⟩_{d} on {} = {value}",
        r.lambda,
        space_name(r.family, r.k, r.n)
    );
    let _ = writeln!(out, "value: {value}");
    match r.engine {
        Some(Engine::Both) => {
            let _ = writeln!(out, "engines: puzzle, oracle (agree)");
        }
        Some(e) => {
            let _ = writeln!(out, "engine: {e}");
        }
        None => {
            let _ = writeln!(out, "engine: quantum Pieri and Giambelli");
        }
    }
    if let Some(space) = &r.classical_equivalent {
        let _ = writeln!(out, "classical: = ∫ over {space} = {value}");
    }
    out
}

fn gw_json(r: &GwRecord) -> Result<String> {
    Ok(format!("{}\n", serde_json::to_string(r).map_err(|e| Error::Inconsistent(e.to_string()))?))
}

fn qmult(json_out: bool, args: &QmultArgs) -> Result<Outcome> {
    let space = &args.space;
    let (product, k) = match space.family {
        Family::A => {
            let k = require_k(space)?;
            let ring = TypeARing::new(k, space.n, args.engine.unwrap_or_default())?;
            (ring.qproduct(&args.lambda, &args.mu)?, Some(k))
        }
        family => {
            if args.engine.is_some() {
                return Err(Error::InvalidString("--engine applies to type A only".into()));
            }
            let ring = IsotropicRing::new(family, space.n)?;
            ((*ring.qproduct(&args.lambda, &args.mu)?).clone(), None)
        }
    };
    if json_out {
        let terms: Vec<_> =
            product.iter().map(|(nu, d, c)| json!({"nu": nu.to_string(), "d": d, "coeff": c})).collect();
        let mut v = json!({
            "family": space.family,
            "n": space.n,
            "lambda": args.lambda.to_string(),
            "mu": args.mu.to_string(),
            "terms": terms,
        });
        if let Some(k) = k {
            v["k"] = json!(k);
        }
        return Ok(Outcome::ok(format!("{v}\n")));
    }
    let s = symbol(space.family);
    let mut out = format!(
        "{s}({}) ∗ {s}({}) = {product}   in QH*({})\n",
        args.lambda,
        args.mu,
        space_name(space.family, k, space.n)
    );
    out.push_str("nu\td\tcoeff\n");
    for (nu, d, c) in product.iter() {
        let _ = writeln!(out, "{nu}\t{d}\t{c}");
    }
    Ok(Outcome::ok(out))
}

fn puzzle(json_out: bool, cmd: &PuzzleCommand) -> Result<Outcome> {
    let solver = PuzzleSolver::default();
    match cmd {
        PuzzleCommand::Count(b) => {
            let boundary = PuzzleBoundary::new(b.nw.clone(), b.ne.clone(), b.s.clone())?;
            let count = solver.count(&boundary);
            Ok(Outcome::ok(if json_out {
                format!("{}\n", json!({"nw": b.nw.to_string(), "ne": b.ne.to_string(), "s": b.s.to_string(), "count": count as u64}))
            } else {
                format!("{count}\n")
            }))
        }
        PuzzleCommand::Show { boundary: b, dump } => {
            let boundary = PuzzleBoundary::new(b.nw.clone(), b.ne.clone(), b.s.clone())?;
            let fillings = solver.fillings(&boundary);
            if json_out {
                let list: Vec<_> = fillings
                    .iter()
                    .map(|f| {
                        json!({
                            "render": f.render(),
                            "pieces": f.pieces().iter().map(ToString::to_string).collect::<Vec<_>>(),
                        })
                    })
                    .collect();
                return Ok(Outcome::ok(format!("{}\n", json!({"count": fillings.len(), "fillings": list}))));
            }
            let mut out = format!("{} puzzle(s) with boundary {} / {} / {}\n", fillings.len(), b.nw, b.ne, b.s);
            for (i, f) in fillings.iter().enumerate() {
                let _ = writeln!(out, "\n#{}", i + 1);
                out.push_str(&f.render());
                if *dump {
                    out.push_str(&f.dump());
                }
            }
            Ok(Outcome::ok(out))
        }
    }
}

fn iso_families(family: Option<Family>) -> Result<Vec<Family>> {
    match family {
        None => Ok(vec![Family::C, Family::D]),
        Some(Family::A) => Err(Error::Family("this check applies to types C and D".into())),
        Some(f) => Ok(vec![f]),
    }
}

fn check(cmd: &CheckCommand) -> Result<Vec<SweepReport>> {
    match *cmd {
        CheckCommand::Conjecture { min_n, max_n } => Ok(vec![verify::conjecture_sweep(min_n, max_n)?]),
        CheckCommand::Associativity { family, n } => Ok(vec![match family {
            Family::A => verify::ring_axioms_a(n)?,
            f => verify::ring_axioms_iso(f, n)?,
        }]),
        CheckCommand::Pfaffian { family, n } => {
            iso_families(family)?.into_iter().map(|f| verify::pfaffian_sweep(f, n)).collect()
        }
        CheckCommand::Lift { n } => Ok(vec![verify::lift_sweep(n)?]),
        CheckCommand::Relations { family, n } => {
            iso_families(family)?.into_iter().map(|f| verify::relations_sweep(f, n)).collect()
        }
        CheckCommand::Jstring { n } => Ok(vec![verify::jstring_coherence(n)?]),
        CheckCommand::Yong { n } => Ok(vec![verify::yong_sweep(n)?]),
        CheckCommand::Tau { n } => Ok(vec![verify::tau_squared(2, n)?]),
        CheckCommand::Classical { family, n, max_weight } => Ok(vec![match family {
            Family::A => verify::classical_a(n)?,
            f => verify::classical_iso(f, n, max_weight)?,
        }]),
        CheckCommand::Vanishing { family, n } => {
            iso_families(Some(family))?;
            Ok(vec![verify::length_vanishing(family, n)?])
        }
    }
}

fn oracle(json_out: bool, cmd: &OracleCommand) -> Result<Outcome> {
    match cmd {
        OracleCommand::Schubert { u, v, w } => {
            let n = [Some(u), Some(v), w.as_ref()].iter().flatten().map(|p| p.size()).max().unwrap_or(1).max(1);
            let calc = SchubertCalculus::new(n);
            let product = calc.product(&u.embed(n), &v.embed(n))?;
            if let Some(w) = w {
                let c = calc.structure_constant(&u.embed(n), &v.embed(n), &w.embed(n))?;
                return Ok(Outcome::ok(if json_out {
                    format!("{}\n", json!({"u": u.to_string(), "v": v.to_string(), "w": w.to_string(), "value": c}))
                } else {
                    format!("{c}\n")
                }));
            }
            if json_out {
                let terms: Vec<_> =
                    product.iter().map(|(w, c)| json!({"w": w.to_string(), "coeff": c.to_string()})).collect();
                return Ok(Outcome::ok(format!("{}\n", json!({"u": u.to_string(), "v": v.to_string(), "terms": terms}))));
            }
            let mut out = String::new();
            for (w, c) in product.iter() {
                let _ = writeln!(out, "{c}\t{w}");
            }
            Ok(Outcome::ok(out))
        }
        OracleCommand::Qp { family, lambda, mu, nu } => {
            let o = QFunctionOracle::new();
            if let Some(nu) = nu {
                let c = o.structure_constant(*family, lambda, mu, nu)?;
                return Ok(Outcome::ok(if json_out {
                    format!(
                        "{}\n",
                        json!({"family": family.to_string(), "lambda": lambda.to_string(), "mu": mu.to_string(), "nu": nu.to_string(), "value": c})
                    )
                } else {
                    format!("{c}\n")
                }));
            }
            let product = o.product(*family, lambda, mu)?;
            if json_out {
                let terms: Vec<_> = product.iter().map(|(nu, c)| json!({"nu": nu.to_string(), "coeff": c})).collect();
                return Ok(Outcome::ok(format!(
                    "{}\n",
                    json!({"family": family.to_string(), "lambda": lambda.to_string(), "mu": mu.to_string(), "terms": terms})
                )));
            }
            let mut out = String::new();
            for (nu, c) in product.iter().rev() {
                let _ = writeln!(out, "{c}\t{family}({nu})");
            }
            Ok(Outcome::ok(out))
        }
    }
}
