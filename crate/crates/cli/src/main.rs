//! `monograd`: command-line access to the monomial-ideal toolkit.
//!
//! Exit status: 0 when a computation succeeds, a property holds or a
//! verification passes; 1 when a property fails or a verification fails;
//! 2 for usage, input and resource errors.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use monograd_core::betti::{
    betti_table_with, differential_linear_resolution, has_linear_resolution_with,
    regularity_with,
};
use monograd_core::caps::{self, Caps};
use monograd_core::families::{family_overlap_run, family_reg_gap_with};
use monograd_core::format::{GraphDocument, IdealDocument};
use monograd_core::graph::{complementary_edge_ideal, edge_ideal};
use monograd_core::kruskal::{closed_form_count, closed_form_shadow, macaulay_rep, shadow_bound, MacaulayRep};
use monograd_core::structure::{
    is_componentwise_polymatroidal, is_polymatroidal, is_stable, is_strongly_stable,
    is_vertex_splittable, linear_quotients_search, LqSearch,
};
use monograd_core::verify::{self, Params, PROCEDURES};
use monograd_core::{iterated_gradient, Convention, Engine, Error, Monomial, MonomialIdeal};

#[derive(Parser)]
#[command(name = "monograd", version, about = "Monomial ideals, gradients and their resolutions")]
struct Cli {
    /// Keep generators exactly as written in the input (stats and grad only).
    #[arg(long, global = true)]
    no_minimalize: bool,
    /// Machine-readable output with sorted keys.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// α, ω, μ and support of an ideal.
    Stats { file: String },
    /// The gradient ideal, or the iterated gradient of order L.
    Grad {
        file: String,
        #[arg(long, default_value_t = 1)]
        order: u32,
    },
    /// Graded Betti numbers (of I, or of S/I with --quotient).
    Betti {
        file: String,
        #[arg(long)]
        quotient: bool,
        #[arg(long, default_value = "auto")]
        engine: Engine,
    },
    /// Castelnuovo–Mumford regularity of I.
    Reg {
        file: String,
        #[arg(long, default_value = "auto")]
        engine: Engine,
    },
    /// Tests a property; exit 0 if it holds, 1 if not.
    Check {
        property: Property,
        file: String,
        #[arg(long, default_value = "auto")]
        engine: Engine,
    },
    /// Emits a member of an explicit family as an ideal document.
    Family {
        #[command(subcommand)]
        which: Family,
    },
    /// Edge ideal or complementary edge ideal of a graph document.
    Graph { kind: GraphKind, file: String },
    /// Macaulay representations and Kruskal–Katona shadows.
    Kk {
        mode: KkMode,
        #[arg(long)]
        a: Option<u128>,
        #[arg(long)]
        d: u64,
        #[arg(long)]
        n: Option<u64>,
    },
    /// Runs a verification procedure (`--list` shows them).
    Verify(VerifyArgs),
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(required_unless_present = "list")]
    id: Option<String>,
    /// Procedure parameter, repeatable.
    #[arg(long = "param", value_name = "KEY=VALUE")]
    params: Vec<String>,
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long)]
    list: bool,
}

#[derive(Subcommand)]
enum Family {
    /// reg I − reg ∂(I) = a.
    Thm22 {
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long, default_value_t = 2)]
        c: u64,
    },
    /// The window family in 2d variables.
    Thm23 {
        #[arg(long)]
        d: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Property {
    LinearResolution,
    DifferentialLinearResolution,
    LinearQuotients,
    VertexSplittable,
    Polymatroidal,
    ComponentwisePolymatroidal,
    Stable,
    StronglyStable,
    CompleteIntersection,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphKind {
    Edge,
    Cedge,
}

#[derive(Clone, Copy, ValueEnum)]
enum KkMode {
    Rep,
    Shadow,
    Closed,
}

enum Failure {
    Usage(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type Outcome = Result<bool, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Ok(spec) = std::env::var("MONOGRAD_CAPS") {
        match Caps::from_overrides(&spec) {
            Ok(c) => caps::install(c),
            Err(e) => {
                eprintln!("error: MONOGRAD_CAPS: {e}");
                return ExitCode::from(2);
            }
        }
    }
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| Failure::Usage(format!("stdin: {e}")))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{path}: {e}")))
}

fn load_document(path: &str) -> Result<IdealDocument, Failure> {
    Ok(IdealDocument::from_json(&read_input(path)?)?)
}

fn load_ideal(path: &str) -> Result<MonomialIdeal, Failure> {
    Ok(load_document(path)?.to_ideal()?)
}

fn emit(value: &Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("plain data"));
}

fn ideal_value(ideal: &MonomialIdeal) -> Value {
    serde_json::to_value(IdealDocument::from_ideal(ideal)).expect("plain data")
}

fn raw_value(n: usize, gens: &[Monomial]) -> Value {
    json!({ "n": n, "gens": gens.iter().map(Monomial::exponents).collect::<Vec<_>>() })
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Stats { file } => stats(cli, file),
        Command::Grad { file, order } => grad(cli, file, *order),
        Command::Betti { file, quotient, engine } => {
            let ideal = load_ideal(file)?;
            let (table, used) = betti_table_with(&ideal, *engine)?;
            let table = if *quotient { table.to_convention(Convention::Quotient) } else { table };
            if cli.json {
                emit(&json!({ "engine": used.to_string(), "table": table }));
            } else {
                print!("{table}");
            }
            Ok(true)
        }
        Command::Reg { file, engine } => {
            let ideal = load_ideal(file)?;
            let reg = regularity_with(&ideal, *engine)?;
            if cli.json {
                emit(&json!({ "regularity": reg.value, "method": reg.method }));
            } else {
                println!("{}", reg.value);
            }
            Ok(true)
        }
        Command::Check { property, file, engine } => {
            let ideal = load_ideal(file)?;
            let (holds, detail) = check(*property, &ideal, *engine)?;
            if cli.json {
                emit(&json!({ "holds": holds, "detail": detail }));
            } else {
                println!("{holds}");
                if let Some(d) = detail {
                    println!("{d}");
                }
            }
            Ok(holds)
        }
        Command::Family { which } => {
            let (ideal, meta) = match which {
                Family::Thm22 { a, c } => {
                    let fam = family_reg_gap_with(*a, *c)?;
                    let meta = json!({
                        "family": "thm22",
                        "a": fam.a,
                        "b": fam.b,
                        "c": fam.c,
                        "expected_reg": fam.expected_reg,
                        "expected_gradient_reg": fam.expected_gradient_reg,
                    });
                    (fam.ideal, meta)
                }
                Family::Thm23 { d } => {
                    let ideal = family_overlap_run(*d)?;
                    let meta = json!({
                        "family": "thm23",
                        "d": d,
                        "expected_reg": d,
                        "expected_gradient_reg": 2 * d - 3,
                    });
                    (ideal, meta)
                }
            };
            let mut doc = ideal_value(&ideal);
            doc["meta"] = meta;
            emit(&doc);
            Ok(true)
        }
        Command::Graph { kind, file } => {
            let g = GraphDocument::from_json(&read_input(file)?)?.to_graph()?;
            let ideal = match kind {
                GraphKind::Edge => edge_ideal(&g),
                GraphKind::Cedge => complementary_edge_ideal(&g)?,
            };
            emit(&ideal_value(&ideal));
            Ok(true)
        }
        Command::Kk { mode, a, d, n } => kk(cli, *mode, *a, *d, *n),
        Command::Verify(args) => run_verify(cli, args),
    }
}

fn stats(cli: &Cli, file: &str) -> Outcome {
    let doc = load_document(file)?;
    let (n, gens) = if cli.no_minimalize {
        (doc.n, doc.monomials()?)
    } else {
        let ideal = doc.to_ideal()?;
        (ideal.n(), ideal.gens().to_vec())
    };
    if gens.is_empty() {
        return Err(Error::UndefinedStats.into());
    }
    let degrees: Vec<u64> = gens.iter().map(Monomial::degree).collect();
    let alpha = *degrees.iter().min().expect("nonempty");
    let omega = *degrees.iter().max().expect("nonempty");
    let mut support: Vec<usize> = gens.iter().flat_map(|g| g.support().collect::<Vec<_>>()).collect();
    support.sort_unstable();
    support.dedup();
    let support: Vec<usize> = support.into_iter().map(|i| i + 1).collect();
    if cli.json {
        emit(&json!({ "n": n, "alpha": alpha, "omega": omega, "mu": gens.len(), "support": support }));
    } else {
        println!("n = {n}");
        println!("alpha = {alpha}");
        println!("omega = {omega}");
        println!("mu = {}", gens.len());
        let names: Vec<String> = support.iter().map(|i| format!("x{i}")).collect();
        println!("support = {}", names.join(" "));
    }
    Ok(true)
}

fn grad(cli: &Cli, file: &str, order: u32) -> Outcome {
    let doc = load_document(file)?;
    if cli.no_minimalize {
        let mut gens = doc.monomials()?;
        for _ in 0..order {
            let mut next = Vec::new();
            for g in &gens {
                for i in g.support().collect::<Vec<_>>() {
                    let q = g.div_var(i).expect("in support");
                    if !next.contains(&q) {
                        next.push(q);
                    }
                }
            }
            gens = next;
        }
        emit(&raw_value(doc.n, &gens));
    } else {
        emit(&ideal_value(&iterated_gradient(&doc.to_ideal()?, order)));
    }
    Ok(true)
}

fn check(property: Property, ideal: &MonomialIdeal, engine: Engine) -> Result<(bool, Option<String>), Failure> {
    if ideal.is_zero() {
        return Ok((false, Some("the zero ideal".into())));
    }
    Ok(match property {
        Property::LinearResolution => (has_linear_resolution_with(ideal, engine)?, None),
        Property::DifferentialLinearResolution => {
            if !ideal.is_equigenerated() {
                (false, Some("not equigenerated".into()))
            } else {
                let report = differential_linear_resolution(ideal, engine)?;
                let regs: Vec<String> = report
                    .levels
                    .iter()
                    .map(|l| format!("reg ∂^{} = {} (linear: {})", l.order, l.regularity, l.expected))
                    .collect();
                (report.holds, Some(regs.join("\n")))
            }
        }
        Property::LinearQuotients => match linear_quotients_search(ideal, None)? {
            LqSearch::Found(order) => {
                let seq: Vec<String> = order.order.iter().map(ToString::to_string).collect();
                (true, Some(format!("order: {}", seq.join(", "))))
            }
            LqSearch::NoOrder | LqSearch::Inconclusive => (false, None),
        },
        Property::VertexSplittable => (is_vertex_splittable(ideal), None),
        Property::Polymatroidal => (is_polymatroidal(ideal), None),
        Property::ComponentwisePolymatroidal => (is_componentwise_polymatroidal(ideal)?, None),
        Property::Stable => (is_stable(ideal), None),
        Property::StronglyStable => (is_strongly_stable(ideal), None),
        Property::CompleteIntersection => (ideal.is_complete_intersection()?, None),
    })
}

fn rep_text(rep: &MacaulayRep) -> String {
    rep.terms
        .iter()
        .map(|(a, i)| format!("C({a},{i})"))
        .collect::<Vec<_>>()
        .join(" + ")
}

fn rep_value(rep: &MacaulayRep) -> Value {
    json!({
        "d": rep.d,
        "terms": rep.terms.iter().map(|(a, i)| json!([a.to_string(), i])).collect::<Vec<_>>(),
    })
}

fn kk(cli: &Cli, mode: KkMode, a: Option<u128>, d: u64, n: Option<u64>) -> Outcome {
    let need_a = || a.ok_or_else(|| Failure::Usage("this mode needs --a".into()));
    match mode {
        KkMode::Rep => {
            let a = need_a()?;
            let rep = macaulay_rep(a, d)?;
            if cli.json {
                emit(&json!({ "a": a.to_string(), "representation": rep_value(&rep) }));
            } else {
                println!("{a} = {}", rep_text(&rep));
            }
        }
        KkMode::Shadow => {
            let a = need_a()?;
            let s = shadow_bound(a, d)?;
            if cli.json {
                emit(&json!({ "a": a.to_string(), "d": d, "shadow": s.to_string() }));
            } else {
                println!("{s}");
            }
        }
        KkMode::Closed => {
            let n = n.ok_or_else(|| Failure::Usage("closed needs --n".into()))?;
            let rep = closed_form_count(n, d)?;
            let s = closed_form_shadow(n, d)?;
            let value = rep.value()?;
            if cli.json {
                emit(&json!({
                    "n": n,
                    "d": d,
                    "count": value.to_string(),
                    "representation": rep_value(&rep),
                    "shadow": s.to_string(),
                }));
            } else {
                println!("{value} = {}", rep_text(&rep));
                println!("shadow = {s}");
            }
        }
    }
    Ok(true)
}

fn run_verify(cli: &Cli, args: &VerifyArgs) -> Outcome {
    if args.list {
        for p in PROCEDURES {
            let aliases = if p.aliases.is_empty() { String::new() } else { format!(" ({})", p.aliases.join(", ")) };
            let params = if p.parameters.is_empty() { String::new() } else { format!(" [{}]", p.parameters.join(", ")) };
            println!("{}{aliases}{params}: {}", p.id, p.summary);
        }
        return Ok(true);
    }
    let id = args.id.as_deref().expect("clap enforces id");
    let randomized = verify::is_randomized(id)?;
    if cli.json && randomized && args.seed.is_none() {
        return Err(Failure::Usage(format!("`{id}` is randomized; --json requires --seed")));
    }
    let mut params = Params::new();
    for p in &args.params {
        let (k, v) = p
            .split_once('=')
            .ok_or_else(|| Failure::Usage(format!("--param `{p}` is not key=value")))?;
        params.insert(k.trim().to_string(), v.trim().to_string());
    }
    let report = verify::verify_theorem(id, &params, args.seed)?;
    if cli.json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    Ok(report.passed)
}

