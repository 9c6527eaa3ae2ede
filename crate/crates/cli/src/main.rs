use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use cyclodep::curvegeom::{check_assumption, map_degree, phi_enumerate, Character};
use cyclodep::exactcore::format_pq;
use cyclodep::explorer::{
    analyze, parse_curve, torsion_fiber_split, AnalysisConfig, OutputFormat, PhiEntry,
};
use cyclodep::intlattice::min_content;
use cyclodep::multdep::{
    decompose, height_budget, is_primitively_dependent, point_height, relation_lattice, PointQ,
};
use cyclodep::par::Execution;
use cyclodep::Error;

#[derive(Parser)]
#[command(
    name = "cyclodep",
    version,
    about = "Multiplicatively dependent points on rational curves"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Run every loop on the calling thread.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Full report: characters, torsion fibers and a bounded-height scan.
    Analyze {
        #[arg(long)]
        curve: String,
        #[arg(long, default_value_t = 12)]
        torsion_order: u64,
        #[arg(long, default_value_t = 50)]
        scan_height: u32,
        #[arg(long, default_value_t = 6)]
        oracle_bound: u32,
    },
    /// Characters whose restriction is an isogeny after a change of parameter.
    Phi {
        #[arg(long)]
        curve: String,
    },
    /// Relation lattice of a rational point.
    Depends {
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Whether a rational point has a relation with coprime exponents.
    Primitive {
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Torsion/free decomposition of a rational point.
    Decompose {
        #[arg(long, allow_hyphen_values = true)]
        point: String,
    },
    /// Curve points where a character takes a value of order dividing N.
    Fiber {
        #[arg(long)]
        curve: String,
        #[arg(long = "char", allow_hyphen_values = true)]
        character: String,
        #[arg(long)]
        order: u64,
    },
    /// Map degree and the "no constant monomial" hypothesis.
    Check {
        #[arg(long)]
        curve: String,
    },
}

/// Result of a subcommand: a JSON value, a text rendering and an exit code.
struct Output {
    json: Value,
    text: String,
    code: u8,
}

impl Output {
    fn ok(json: Value, text: String) -> Self {
        Output {
            json,
            text,
            code: 0,
        }
    }
}

fn parse_character(s: &str) -> Result<Character, Error> {
    let mut a = Vec::new();
    let mut offset = 0;
    for part in s.split(',') {
        let trimmed = part.trim();
        a.push(trimmed.parse::<i64>().map_err(|_| Error::Parse {
            position: offset,
            message: format!("invalid exponent {trimmed:?}"),
        })?);
        offset += part.len() + 1;
    }
    Character::new(a)
}

fn fmt_vec(v: &[i64]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

fn run(cli: &Cli) -> Result<Output, (String, i32)> {
    let exec = if cli.sequential {
        Execution::Sequential
    } else {
        Execution::Parallel
    };
    let plain = |e: Error| (e.to_string(), e.exit_code());
    match &cli.command {
        Command::Analyze {
            curve,
            torsion_order,
            scan_height,
            oracle_bound,
        } => {
            let config = AnalysisConfig {
                torsion_order: *torsion_order,
                scan_height: *scan_height,
                oracle_bound: *oracle_bound,
                format: match cli.format {
                    Format::Json => OutputFormat::Json,
                    Format::Text => OutputFormat::Text,
                },
                execution: exec,
            };
            let report = analyze(curve, &config).map_err(|e| (e.to_string(), e.exit_code()))?;
            Ok(Output {
                json: serde_json::to_value(&report).expect("report serializes"),
                text: report.to_text(),
                code: report.exit_code() as u8,
            })
        }
        Command::Phi { curve } => {
            let c = parse_curve(curve).map_err(plain)?;
            let phi = phi_enumerate(&c, exec).map_err(plain)?;
            let entries: Vec<PhiEntry> = phi.iter().map(PhiEntry::from).collect();
            let text = entries
                .iter()
                .map(|e| {
                    format!(
                        "{} P={} Q={} m={} c={}\n",
                        fmt_vec(&e.a),
                        e.p,
                        e.q,
                        e.m,
                        e.c
                    )
                })
                .collect();
            Ok(Output::ok(serde_json::to_value(&entries).unwrap(), text))
        }
        Command::Depends { point } => {
            let p = PointQ::parse(point).map_err(plain)?;
            let lattice = relation_lattice(&p).map_err(plain)?;
            let basis = lattice.vectors_i64();
            let text = format!(
                "dependent: {}\nrelation lattice: [{}]\n",
                !lattice.is_empty(),
                basis
                    .iter()
                    .map(|v| fmt_vec(v))
                    .collect::<Vec<_>>()
                    .join(", ")
            );
            Ok(Output::ok(
                json!({
                    "point": p.coords().iter().map(format_pq).collect::<Vec<_>>(),
                    "dependent": !lattice.is_empty(),
                    "relation_lattice": basis,
                    "height": point_height(&p),
                }),
                text,
            ))
        }
        Command::Primitive { point } => {
            let p = PointQ::parse(point).map_err(plain)?;
            let lattice = relation_lattice(&p).map_err(plain)?;
            let relation = is_primitively_dependent(&p).map_err(plain)?;
            let content = if lattice.is_empty() {
                None
            } else {
                Some(min_content(&lattice).to_string())
            };
            let text = match &relation {
                Some(r) => format!("primitive: true\nrelation: {}\n", fmt_vec(r)),
                None => format!(
                    "primitive: false\nminimum content: {}\n",
                    content.as_deref().unwrap_or("-")
                ),
            };
            Ok(Output::ok(
                json!({
                    "dependent": !lattice.is_empty(),
                    "primitive": relation.is_some(),
                    "relation": relation,
                    "min_content": content,
                }),
                text,
            ))
        }
        Command::Decompose { point } => {
            let p = PointQ::parse(point).map_err(plain)?;
            let d = decompose(&p).map_err(plain)?;
            let gens: Vec<String> = d.generators.iter().map(format_pq).collect();
            let exps: Vec<Vec<String>> = d
                .exponents
                .row_vecs()
                .iter()
                .map(|r| r.iter().map(ToString::to_string).collect())
                .collect();
            let budget = height_budget(&d);
            let mut text = format!("generators: {}\n", gens.join(", "));
            for (i, (sign, row)) in d.signs.iter().zip(&exps).enumerate() {
                text.push_str(&format!("x{} = {sign} * g^({})\n", i + 1, row.join(",")));
            }
            Ok(Output::ok(
                json!({
                    "signs": d.signs,
                    "generators": gens,
                    "exponents": exps,
                    "rank": d.rank(),
                    "height_budget": budget,
                }),
                text,
            ))
        }
        Command::Fiber {
            curve,
            character,
            order,
        } => {
            let c = parse_curve(curve).map_err(plain)?;
            let a = parse_character(character).map_err(plain)?;
            let split = torsion_fiber_split(&c, &a, *order).map_err(plain)?;
            let show = |fs: &[(cyclodep::exactcore::Poly, u32)]| -> Vec<String> {
                fs.iter()
                    .map(|(f, e)| {
                        if *e == 1 {
                            f.to_string()
                        } else {
                            format!("({f})^{e}")
                        }
                    })
                    .collect()
            };
            let kept = show(&split.kept);
            let discarded = show(&split.discarded);
            let text = format!(
                "kept: {}\ndiscarded: {}\n",
                kept.join("; "),
                discarded.join("; ")
            );
            Ok(Output::ok(
                json!({
                    "char": a.exponents(),
                    "N": order,
                    "factors": kept,
                    "discarded": discarded,
                }),
                text,
            ))
        }
        Command::Check { curve } => {
            let c = parse_curve(curve).map_err(plain)?;
            let degree = map_degree(&c).map_err(plain)?;
            let assumption = check_assumption(&c);
            let violation = assumption.violation().map(|a| a.exponents().to_vec());
            let mut text = format!("map degree: {degree}\n");
            match &violation {
                None => text.push_str("assumption: ok\n"),
                Some(a) => text.push_str(&format!("assumption: violated by {}\n", fmt_vec(a))),
            }
            let code = if violation.is_some() {
                3
            } else if degree != 1 {
                4
            } else {
                0
            };
            Ok(Output {
                json: json!({
                    "map_degree": degree,
                    "assumption": {"ok": violation.is_none(), "violation": violation},
                }),
                text,
                code,
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            match cli.format {
                Format::Json => println!("{}", serde_json::to_string_pretty(&out.json).unwrap()),
                Format::Text => print!("{}", out.text),
            }
            ExitCode::from(out.code)
        }
        Err((msg, code)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code as u8)
        }
    }
}
