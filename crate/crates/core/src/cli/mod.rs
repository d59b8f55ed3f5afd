//! The `ringlogic` command line. Every subcommand produces a JSON report
//! (schema version [`SCHEMA_VERSION`]); `--text` renders the same report as
//! indented `key: value` lines.
//!
//! Exit codes: 0 when the report was computed and any checked property
//! holds, 1 when a checked property fails, 2 on usage, parse, budget or
//! internal errors.

mod commands;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::groebner::GbBudget;
use crate::Budget;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Parser)]
#[command(name = "ringlogic", version, about = "Finitely presented rings and arithmetic theories over finite rings")]
pub struct Cli {
    /// Emit JSON (the default).
    #[arg(long, global = true, conflicts_with = "text")]
    pub json: bool,
    /// Emit an indented text rendering of the report.
    #[arg(long, global = true)]
    pub text: bool,
    #[command(flatten)]
    pub budget: BudgetArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct BudgetArgs {
    /// Largest tuple space |A|^n that may be enumerated.
    #[arg(long, global = true, default_value_t = 20_000_000)]
    pub max_tuples: u64,
    /// Largest number of generator assignments tried by a hom search.
    #[arg(long, global = true, default_value_t = 10_000_000)]
    pub max_hom_candidates: u64,
    #[arg(long, global = true, default_value_t = 400)]
    pub gb_max_basis: usize,
    #[arg(long, global = true, default_value_t = 64)]
    pub gb_max_degree: u32,
    #[arg(long, global = true, default_value_t = 4096)]
    pub gb_max_coeff_bits: u64,
    #[arg(long, global = true, default_value_t = 2_000_000)]
    pub gb_max_reductions: u64,
}

impl BudgetArgs {
    pub fn budget(&self) -> Budget {
        Budget {
            max_tuples: self.max_tuples,
            max_hom_candidates: self.max_hom_candidates,
            groebner: GbBudget {
                max_basis: self.gb_max_basis,
                max_degree: self.gb_max_degree,
                max_coeff_bits: self.gb_max_coeff_bits,
                max_reductions: self.gb_max_reductions,
            },
        }
    }
}

/// A theory given as `builtin:<name>`, a file path, or one sentence.
#[derive(Debug, Clone, Args)]
pub struct TheoryArgs {
    /// `builtin:<name>` or the path of a theory file.
    #[arg(long, required_unless_present = "sentence", conflicts_with = "sentence")]
    pub theory: Option<String>,
    /// A single DSL sentence.
    #[arg(long)]
    pub sentence: Option<String>,
    /// Expansion bound for schemas and variable-count families.
    #[arg(long, default_value_t = 3)]
    pub bound: u32,
}

#[derive(Debug, Clone, Args)]
pub struct SystemArgs {
    /// The base ring A.
    #[arg(long)]
    pub ring: String,
    /// Comparison rings (comma separated or repeated).
    #[arg(long, value_delimiter = ',')]
    pub family: Vec<String>,
    /// Unknowns, comma separated.
    #[arg(long, default_value = "x", value_delimiter = ',')]
    pub vars: Vec<String>,
    /// Generators of the ideal I (repeatable).
    #[arg(long = "ideal")]
    pub ideal: Vec<String>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Points hom(P, A) of a presentation in a finite ring.
    Homs {
        #[arg(long)]
        pres: String,
        #[arg(long)]
        ring: String,
    },
    /// The image ∃_m A of a primitive morphism.
    Exists {
        #[arg(long)]
        morphism: String,
        #[arg(long)]
        ring: String,
    },
    /// Pushout of m: P -> Q and a: P -> R, optionally checked over a ring.
    Pushout {
        #[arg(long)]
        m: String,
        #[arg(long)]
        a: String,
        /// Check the universal property on points in this ring.
        #[arg(long)]
        ring: Option<String>,
    },
    /// Colimit of a diagram file, optionally checked over a ring.
    Colimit {
        #[arg(long)]
        diagram: String,
        #[arg(long)]
        ring: Option<String>,
    },
    /// Gröbner basis and ideal membership over Q, Z/p or Z.
    Ideal {
        /// Q, Z or Z/p.
        #[arg(long, default_value = "Q")]
        domain: String,
        #[arg(long, value_delimiter = ',')]
        vars: Vec<String>,
        #[arg(long = "gen")]
        gens: Vec<String>,
        /// grlex or lex.
        #[arg(long, default_value = "grlex")]
        order: String,
        /// Polynomials to test for membership (repeatable).
        #[arg(long)]
        member: Vec<String>,
    },
    /// Radical membership over Q (p = 0) or Z/p.
    Radical {
        #[arg(long, default_value_t = 0)]
        p: u32,
        #[arg(long, value_delimiter = ',')]
        vars: Vec<String>,
        #[arg(long = "gen")]
        gens: Vec<String>,
        #[arg(long)]
        q: String,
    },
    /// Closure of a finite point set in A^n.
    Closure {
        #[arg(long)]
        ring: String,
        #[arg(long)]
        nvars: usize,
        /// A point, components comma separated (repeatable).
        #[arg(long)]
        point: Vec<String>,
        #[arg(long)]
        degree: Option<u32>,
    },
    /// Relative radical membership q ∈ crad_C(I).
    Crad {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long)]
        q: String,
    },
    /// Compare I(Z(I)) with crad_C(I) on test polynomials.
    GcCheck {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long)]
        q: Vec<String>,
    },
    /// Satisfaction of a theory in a finite ring.
    Sat {
        #[arg(long)]
        ring: String,
        #[command(flatten)]
        theory: TheoryArgs,
        /// Report the realising member for every point.
        #[arg(long)]
        verbose: bool,
    },
    /// Universal / Horn / negative classification of each axiom.
    Classify {
        #[command(flatten)]
        theory: TheoryArgs,
    },
    /// Whether ∃_n B and ∃_m B are disjoint in every ring of the family.
    Resultant {
        #[arg(long)]
        n: String,
        #[arg(long)]
        m: String,
        #[arg(long, value_delimiter = ',')]
        family: Vec<String>,
    },
    /// Whether the ∃_n B for n in X cover exactly the complement of ∃_m B.
    Cover {
        #[arg(long)]
        m: String,
        #[arg(long)]
        x: Vec<String>,
        #[arg(long, value_delimiter = ',')]
        family: Vec<String>,
    },
    /// Change of basis along a diagram, checked against its cocones.
    Diamor {
        #[arg(long)]
        diagram: String,
        /// `<object index>:<morphism>` (repeatable).
        #[arg(long)]
        pair: Vec<String>,
        /// Vertex rings B (comma separated or repeated).
        #[arg(long, value_delimiter = ',')]
        target: Vec<String>,
    },
    /// Reduced product of a family over a filter on its indices.
    Rprod {
        #[arg(long, value_delimiter = ',')]
        family: Vec<String>,
        /// A generating subset of indices, comma separated (repeatable).
        #[arg(long = "gen")]
        gens: Vec<String>,
        /// Look for an isomorphism from this ring onto the carrier.
        #[arg(long)]
        iso: Option<String>,
        #[arg(long, conflicts_with = "sentence")]
        theory: Option<String>,
        #[arg(long)]
        sentence: Option<String>,
        #[arg(long, default_value_t = 3)]
        bound: u32,
    },
    /// Pure / existentially closed condition for a hom A -> B at (m, a).
    Purity {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        /// Index of the hom in enumeration order.
        #[arg(long, default_value_t = 0)]
        hom: usize,
        #[arg(long)]
        morphism: String,
        /// The parameter a, components comma separated.
        #[arg(long, default_value = "")]
        point: String,
    },
    /// Whether a point lies in ∃_m A.
    Member {
        #[arg(long)]
        morphism: String,
        #[arg(long)]
        ring: String,
        #[arg(long, default_value = "")]
        point: String,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Homs { .. } => "homs",
            Command::Exists { .. } => "exists",
            Command::Pushout { .. } => "pushout",
            Command::Colimit { .. } => "colimit",
            Command::Ideal { .. } => "ideal",
            Command::Radical { .. } => "radical",
            Command::Closure { .. } => "closure",
            Command::Crad { .. } => "crad",
            Command::GcCheck { .. } => "gc-check",
            Command::Sat { .. } => "sat",
            Command::Classify { .. } => "classify",
            Command::Resultant { .. } => "resultant",
            Command::Cover { .. } => "cover",
            Command::Diamor { .. } => "diamor",
            Command::Rprod { .. } => "rprod",
            Command::Purity { .. } => "purity",
            Command::Member { .. } => "member",
        }
    }
}

/// A computed report and whether the checked property failed.
pub(crate) struct Outcome {
    pub body: Value,
    pub violated: bool,
}

/// Runs the command line `args` (without the program name) and returns
/// the exit code and the rendered report.
pub fn execute<I, S>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    let text = args.iter().any(|a| a == "--text") && !args.iter().any(|a| a == "--json");
    let cli = match Cli::try_parse_from(std::iter::once("ringlogic".to_string()).chain(args.iter().cloned())) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return (0, e.to_string());
            }
            let v = error_report(&args, None, "usage", &e.to_string());
            return (2, render(&v, text));
        }
    };
    let budget = cli.budget.budget();
    let name = cli.command.name();
    match commands::run(&cli.command, &budget) {
        Ok(out) => {
            let mut report = json!({
                "schema_version": SCHEMA_VERSION,
                "command": { "name": name, "args": args },
                "budget": budget,
            });
            report["report"] = out.body;
            report["verdict"] = json!(if out.violated { "violated" } else { "ok" });
            (i32::from(out.violated), render(&report, cli.text))
        }
        Err(e) => {
            let v = error_report(&args, Some(name), e.kind(), &e.to_string());
            (2, render(&v, cli.text))
        }
    }
}

fn error_report(args: &[String], name: Option<&str>, kind: &str, message: &str) -> Value {
    let mut v = json!({
        "schema_version": SCHEMA_VERSION,
        "command": { "name": name, "args": args },
        "error": { "kind": kind, "message": message.trim_end() },
    });
    if kind == "bug" {
        v["error"]["banner"] = json!("BUG: a result failed re-verification; please report this input");
    }
    v
}

fn render(v: &Value, text: bool) -> String {
    if !text {
        let mut s = serde_json::to_string_pretty(v).expect("serializable report");
        s.push('\n');
        return s;
    }
    let mut out = String::new();
    render_text(v, 0, &mut out);
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Object(_) => None,
        Value::Array(items) if items.iter().any(|i| matches!(i, Value::Object(_))) => None,
        Value::String(s) => Some(s.clone()),
        other => Some(other.to_string()),
    }
}

fn render_text(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_text(x, indent + 1, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for x in items {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        render_text(x, indent + 1, out);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap_or_default())),
    }
}
