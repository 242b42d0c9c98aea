//! `knotpos` — link-diagram invariants and positivity obstructions.
//!
//! Subcommands:
//!
//! * `invariants` — summary counts, adequacy, degree bounds, and the
//!   bracket/Jones/Conway/HOMFLY polynomials of one diagram.
//! * `classify` — A-state graph reduction and the Balanced/Burdened
//!   taxonomy of a positive diagram, with predicted coefficients.
//! * `obstruct` — the Jones/Conway degree test: verdict `NotPositive`,
//!   `Inconclusive`, or `NotApplicable`.
//! * `generate` — write example diagrams (torus chains, pretzels, the
//!   bundled catalog knots and their loop-insertion families) as PD files.
//! * `verify-claims` — recompute the loop-insertion family `D_0..D_w` over
//!   an almost-positive base and check the degree/coefficient laws.
//! * `bracket-trace` — per-state contributions of the Kauffman bracket as
//!   CSV (always CSV, regardless of `--output`).
//!
//! Diagrams are read from an inline code argument or `--input FILE`, in
//! either PD syntax (`X[a,b,c,d] ...`), DT syntax (`[4, 6, 2]`), or as a
//! bundled catalog id (`--format catalog k15v1`).  JSON reports carry a
//! `schema_version` field and are byte-identical across runs for fixed
//! input and flags.  Exit status 0 means the command ran and produced a
//! report (whatever the verdict); operational failures exit nonzero with a
//! diagnostic on stderr.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use knotpos::diagram::dt::{from_dt_text, MirrorPolicy};
use knotpos::diagram::generate::{pretzel, torus_2_2p};
use knotpos::diagram::pd::{parse_pd, to_pd_text};
use knotpos::knots::CatalogKnot;
use knotpos::obstruct::{analyze, verify_family_claims, AnalyzeOptions, FamilyOptions, LoopSite};
use knotpos::skein::{conway, homfly, SkeinOptions};
use knotpos::stategraph::{
    b_circle_bound, build_a_state_graph, classify, predicted_lead_conway, reduce_graph,
    second_coeff_predicted,
};
use knotpos::statesum::{adequacy, bracket_trace_csv, degree_bounds, jones, kauffman_bracket};
use knotpos::Diagram;

/// Version string stamped into every JSON report.
const SCHEMA_VERSION: &str = "1";

type CliResult<T> = Result<T, Box<dyn std::error::Error>>;

#[derive(Parser)]
#[command(
    name = "knotpos",
    version,
    about = "Link-diagram invariants and positivity obstructions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Summary counts and polynomial invariants of one diagram.
    Invariants(InputArgs),
    /// Classify a positive diagram through its A-state graph.
    Classify(InputArgs),
    /// Apply the Jones/Conway positivity test to one diagram.
    Obstruct(InputArgs),
    /// Write example diagrams to PD files.
    Generate {
        #[command(subcommand)]
        family: GenerateFamily,
        /// Directory the PD files are written into.
        #[arg(long, global = true, default_value = ".")]
        out_dir: PathBuf,
        /// Report format.
        #[arg(long, global = true, value_enum, default_value_t = Output::Json)]
        output: Output,
    },
    /// Check the loop-insertion family laws over an almost-positive base.
    VerifyClaims {
        #[command(flatten)]
        input: InputArgs,
        /// Largest number of inserted loops.
        #[arg(long, default_value_t = 3)]
        w_max: usize,
    },
    /// Dump per-state Kauffman bracket contributions as CSV.
    BracketTrace(InputArgs),
}

#[derive(Subcommand)]
enum GenerateFamily {
    /// Antiparallel chain diagram of the (2, 2p) torus link.
    Torus {
        /// Number of clasps (2p crossings).
        p: usize,
    },
    /// Pretzel diagram P(p, q, r); nonpositive entries give positive
    /// diagrams.
    #[command(allow_negative_numbers = true)]
    Pretzel {
        p: i64,
        q: i64,
        r: i64,
    },
    /// Bundled almost-positive catalog knots (all three, or one by id).
    Catalog {
        /// Catalog id (`k16v0`, `k15v1`, `k15v2`); omit for all.
        id: Option<String>,
    },
    /// Loop-insertion family member D_w over a catalog base.
    Dw {
        /// Catalog id of the base diagram.
        id: String,
        /// Number of inserted three-crossing loops.
        w: usize,
    },
}

/// How the diagram argument is interpreted.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    /// Planar diagram code `X[a,b,c,d] ...`.
    Pd,
    /// Dowker–Thistlethwaite code `[4, 6, 2]`.
    Dt,
    /// Bundled catalog id (`k16v0`, `k15v1`, `k15v2`).
    Catalog,
}

/// Mirror selection when a DT code is realized.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MirrorArg {
    /// Prefer the realization with fewer negative crossings.
    FewestNegative,
    /// Prefer the realization with fewer positive crossings.
    FewestPositive,
}

/// Report format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    /// Versioned JSON on stdout.
    Json,
    /// Plain text for terminals.
    Human,
}

#[derive(Args)]
struct InputArgs {
    /// Inline diagram code; see --format.
    #[arg(required_unless_present = "input")]
    code: Option<String>,
    /// Read the diagram code from this file instead.
    #[arg(long, conflicts_with = "code")]
    input: Option<PathBuf>,
    /// Input syntax.
    #[arg(long, value_enum, default_value_t = Format::Pd)]
    format: Format,
    /// Crossing cap for 2^c state enumeration.
    #[arg(long, env = "KNOTPOS_STATE_LIMIT")]
    state_limit: Option<usize>,
    /// Crossing cap for the skein recursion.
    #[arg(long, env = "KNOTPOS_SKEIN_LIMIT")]
    skein_limit: Option<usize>,
    /// Node budget for the skein recursion.
    #[arg(long, env = "KNOTPOS_NODE_LIMIT")]
    node_limit: Option<usize>,
    /// Mirror selection when realizing DT codes.
    #[arg(long, value_enum, default_value_t = MirrorArg::FewestNegative)]
    mirror: MirrorArg,
    /// Report format.
    #[arg(long, value_enum, default_value_t = Output::Json)]
    output: Output,
}

impl InputArgs {
    fn source_text(&self) -> CliResult<String> {
        match (&self.code, &self.input) {
            (Some(code), None) => Ok(code.clone()),
            (None, Some(path)) => Ok(fs::read_to_string(path)?),
            // clap enforces exactly one source.
            _ => unreachable!("clap enforces exactly one input source"),
        }
    }

    fn diagram(&self) -> CliResult<Diagram> {
        let text = self.source_text()?;
        match self.format {
            Format::Pd => Ok(parse_pd(&text)?),
            Format::Dt => {
                let policy = match self.mirror {
                    MirrorArg::FewestNegative => MirrorPolicy::FewestNegative,
                    MirrorArg::FewestPositive => MirrorPolicy::FewestPositive,
                };
                Ok(from_dt_text(&text, policy, None)?)
            }
            Format::Catalog => {
                let id = text.trim();
                let knot = CatalogKnot::from_id(id).ok_or_else(|| {
                    format!("unknown catalog id {id:?}; expected one of k16v0, k15v1, k15v2")
                })?;
                Ok(knot.diagram()?)
            }
        }
    }

    fn skein_options(&self) -> Option<SkeinOptions> {
        if self.skein_limit.is_none() && self.node_limit.is_none() {
            return None;
        }
        let defaults = SkeinOptions::default();
        Some(SkeinOptions {
            crossing_limit: self.skein_limit.unwrap_or(defaults.crossing_limit),
            node_limit: self.node_limit.unwrap_or(defaults.node_limit),
        })
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn run(command: Command) -> CliResult<()> {
    match command {
        Command::Invariants(args) => run_invariants(&args),
        Command::Classify(args) => run_classify(&args),
        Command::Obstruct(args) => run_obstruct(&args),
        Command::Generate { family, out_dir, output } => run_generate(&family, &out_dir, output),
        Command::VerifyClaims { input, w_max } => run_verify_claims(&input, w_max),
        Command::BracketTrace(args) => run_bracket_trace(&args),
    }
}

fn ratio_json(r: num_rational::Ratio<i64>) -> serde_json::Value {
    serde_json::json!([*r.numer(), *r.denom()])
}

/// Write machine-readable output, treating a closed pipe as success so
/// `knotpos ... | head` does not fail.
fn write_stdout(text: &str) -> CliResult<()> {
    use std::io::Write;
    match std::io::stdout().write_all(text.as_bytes()) {
        Ok(()) => Ok(()),
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        Err(e) => Err(e.into()),
    }
}

fn emit(command: &str, report: serde_json::Value) -> CliResult<()> {
    let wrapped = serde_json::json!({
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "report": report,
    });
    let mut text = serde_json::to_string_pretty(&wrapped)?;
    text.push('\n');
    write_stdout(&text)
}

fn run_invariants(args: &InputArgs) -> CliResult<()> {
    let d = args.diagram()?;
    let stats = d.stats();
    let adq = adequacy(&d);
    let bounds = degree_bounds(&d);
    let bracket = kauffman_bracket(&d, args.state_limit)?;
    let v = jones(&d, args.state_limit)?;
    let skein_opts = args.skein_options();
    let nabla = conway(&d, skein_opts.as_ref())?;
    let p = homfly(&d, skein_opts.as_ref())?;
    match args.output {
        Output::Json => emit(
            "invariants",
            serde_json::json!({
                "stats": stats.to_json(),
                "adequacy": {
                    "a_adequate": adq.a_adequate,
                    "b_adequate": adq.b_adequate,
                },
                "degree_bounds": {
                    "min_bound": ratio_json(bounds.min_bound),
                    "max_bound": ratio_json(bounds.max_bound),
                },
                "bracket": bracket.to_json(),
                "bracket_text": bracket.to_text(),
                "jones": v.to_json(),
                "jones_text": v.to_text(),
                "conway": nabla.to_json(),
                "conway_text": nabla.to_text(),
                "homfly": p.to_json(),
                "homfly_text": p.to_text(),
            }),
        )?,
        Output::Human => {
            println!(
                "crossings {} ({} negative), writhe {}, components {}",
                stats.crossings, stats.negative_crossings, stats.writhe, stats.components
            );
            println!(
                "circles: seifert {}, all-A {}, all-B {}; faces {}",
                stats.seifert_circles, stats.a_state_circles, stats.b_state_circles, stats.faces
            );
            println!(
                "adequate: A {}, B {}; jones degree window [{}, {}]",
                adq.a_adequate, adq.b_adequate, bounds.min_bound, bounds.max_bound
            );
            println!("bracket = {}", bracket.to_text());
            println!("jones   = {}", v.to_text());
            println!("conway  = {}", nabla.to_text());
            println!("homfly  = {}", p.to_text());
        }
    }
    Ok(())
}

fn run_classify(args: &InputArgs) -> CliResult<()> {
    let d = args.diagram()?;
    let cls = classify(&d)?;
    let reduced = reduce_graph(&build_a_state_graph(&d));
    let n = d.components();
    let predicted_second = second_coeff_predicted(&d)?;
    let predicted_lead = predicted_lead_conway(&cls).ok();
    let b_bound = b_circle_bound(&cls, n).ok();
    match args.output {
        Output::Json => emit(
            "classify",
            serde_json::json!({
                "classification": cls.to_json(),
                "reduced_graph": reduced.to_json(),
                "components": n,
                "predicted_second_coeff": predicted_second,
                "predicted_lead_conway": predicted_lead.map(ratio_json),
                "b_circle_bound": b_bound,
                "dot": reduced.to_dot(),
            }),
        )?,
        Output::Human => {
            println!(
                "family {} (type {}), m = {}",
                cls.family.as_str(),
                cls.diagram_type.map_or("-".into(), |t| t.to_string()),
                cls.m
            );
            if let Some(k) = cls.k {
                println!("hole boundary k = {k}");
            }
            if let (Some(k1), Some(k2), Some(x)) = (cls.k1, cls.k2, cls.x) {
                println!("hole boundaries k1 = {k1}, k2 = {k2}, shared x = {x}");
            }
            if let Some(reason) = &cls.diagnostic {
                println!("diagnostic: {reason}");
            }
            println!("predicted second Jones coefficient {predicted_second}");
            if let Some(l) = predicted_lead {
                println!("predicted lead Conway coefficient {l}");
            }
            if let Some(b) = b_bound {
                println!("B-circle bound {b}");
            }
            print!("{}", reduced.to_dot());
        }
    }
    Ok(())
}

fn run_obstruct(args: &InputArgs) -> CliResult<()> {
    let d = args.diagram()?;
    let opts = AnalyzeOptions { state_limit: args.state_limit, skein: args.skein_options() };
    let report = analyze(&d, &opts)?;
    match args.output {
        Output::Json => emit("obstruct", report.to_json())?,
        Output::Human => {
            let o = &report.obstruction;
            println!(
                "crossings {} ({} negative), components {}",
                report.stats.crossings, report.stats.negative_crossings, o.n
            );
            println!("jones  = {}", report.jones.to_text());
            println!("conway = {}", report.conway.to_text());
            println!(
                "min deg V = {}, max deg V = {}, second coefficient {}, lead Conway {}",
                o.min_v, o.max_v, o.second_coeff, o.lead_conway
            );
            println!("verdict: {}", o.verdict.as_str());
            println!("{}", o.summary());
            if let Some(agrees) = report.second_coeff_agrees {
                println!("second coefficient prediction agrees: {agrees}");
            }
            if let Some(agrees) = report.lead_conway_agrees {
                println!("lead Conway prediction agrees: {agrees}");
            }
        }
    }
    Ok(())
}

fn run_generate(family: &GenerateFamily, out_dir: &PathBuf, output: Output) -> CliResult<()> {
    let mut jobs: Vec<(String, Diagram)> = Vec::new();
    match family {
        GenerateFamily::Torus { p } => {
            if *p == 0 {
                return Err("torus chain needs p >= 1".into());
            }
            jobs.push((format!("torus_2_{}", 2 * p), torus_2_2p(*p)));
        }
        GenerateFamily::Pretzel { p, q, r } => {
            jobs.push((format!("pretzel_{p}_{q}_{r}"), pretzel(*p, *q, *r)?));
        }
        GenerateFamily::Catalog { id } => match id {
            Some(id) => {
                let knot = CatalogKnot::from_id(id.trim()).ok_or_else(|| {
                    format!("unknown catalog id {id:?}; expected one of k16v0, k15v1, k15v2")
                })?;
                jobs.push((knot.id().to_string(), knot.diagram()?));
            }
            None => {
                for knot in CatalogKnot::ALL {
                    jobs.push((knot.id().to_string(), knot.diagram()?));
                }
            }
        },
        GenerateFamily::Dw { id, w } => {
            let knot = CatalogKnot::from_id(id.trim()).ok_or_else(|| {
                format!("unknown catalog id {id:?}; expected one of k16v0, k15v1, k15v2")
            })?;
            let mut d = knot.diagram()?;
            for _ in 0..*w {
                d = d.insert_positive_loop_at_negative()?;
            }
            jobs.push((format!("{}_w{w}", knot.id()), d));
        }
    }
    fs::create_dir_all(out_dir)?;
    let mut written = Vec::new();
    for (name, d) in jobs {
        let path = out_dir.join(format!("{name}.pd"));
        fs::write(&path, format!("{}\n", to_pd_text(&d)?))?;
        written.push(path.display().to_string());
    }
    match output {
        Output::Json => emit("generate", serde_json::json!({ "written": written }))?,
        Output::Human => {
            for path in &written {
                println!("{path}");
            }
        }
    }
    Ok(())
}

fn run_verify_claims(args: &InputArgs, w_max: usize) -> CliResult<()> {
    let base = args.diagram()?;
    let opts = FamilyOptions { state_limit: args.state_limit, skein: args.skein_options() };
    let report = verify_family_claims(&base, LoopSite::AtNegative, w_max, &opts)?;
    match args.output {
        Output::Json => emit("verify-claims", report.to_json())?,
        Output::Human => {
            println!(
                "D00: {} crossings, {} Seifert circles, conway = {}",
                report.d00_crossings,
                report.d00_seifert_circles,
                report.d00_conway.to_text()
            );
            print!("{}", report.to_table());
            println!("all checks passed: {}", report.all_ok());
        }
    }
    Ok(())
}

fn run_bracket_trace(args: &InputArgs) -> CliResult<()> {
    let d = args.diagram()?;
    write_stdout(&bracket_trace_csv(&d, args.state_limit)?)
}
