//! Command-line front end. `run` is the whole program; the binary only
//! forwards `std::env::args` to it.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::lattice::{dual_integral_subsystem, integral_subsystem, schur_class_of};
use crate::nilorbit::{h_and_grading, ClassicalFamily, OrbitDatum};
use crate::number::parse_rational;
use crate::pipeline::{premet_example_with, BoundReport};
use crate::repdim::{d_psi, weyl_dim, DPsiConfig, DPsiResult};
use crate::rootsys::{parse_weight, RootSystem};
use crate::slice::{delta, rho_zero, underline_character, SliceContext};

pub const NODE_LIMIT_ENV: &str = "GOLDIE_NODE_LIMIT";

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
    Pretty,
}

#[derive(Debug, Parser)]
#[command(name = "goldie", about = "Goldie rank bounds from Lie combinatorics", version)]
struct Cli {
    #[arg(long, value_enum, default_value = "pretty", global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Weyl dimension of an irreducible module.
    Dim { rs: String, weight: String },
    /// Size of the W-orbit of a weight.
    OrbitSize { rs: String, weight: String },
    /// gcd of dimensions over a Schur class.
    Dpsi {
        rs: String,
        class_weight: String,
        #[arg(long)]
        bound: Option<u64>,
        #[arg(long)]
        window: Option<u64>,
        #[arg(long)]
        node_limit: Option<u64>,
    },
    /// Index of the Azumaya algebra attached to a class (same as dpsi).
    Index {
        rs: String,
        class_weight: String,
        #[arg(long)]
        node_limit: Option<u64>,
    },
    /// Integral root subsystem of a weight.
    Integral {
        rs: String,
        weight: String,
        /// Use the integral coroots, read as roots of the dual system.
        #[arg(long)]
        dual: bool,
    },
    /// Data of a nilpotent orbit given by a partition.
    Orbit { family: ClassicalFamily, partition: String },
    /// The delta-shift and related restrictions for an orbit.
    Delta {
        family: ClassicalFamily,
        partition: String,
        /// Comma-separated one-parameter subgroup on t_Q.
        #[arg(long, allow_hyphen_values = true)]
        nu: Option<String>,
    },
    /// The bound report for sp_2n and J(rho/2).
    Premet {
        n: usize,
        #[arg(long)]
        node_limit: Option<u64>,
    },
    /// A table of reports.
    Table {
        #[command(subcommand)]
        which: TableKind,
    },
}

#[derive(Debug, Subcommand)]
enum TableKind {
    /// One premet report per n in from..=to
    Premet {
        #[arg(long, default_value_t = 3)]
        from: usize,
        #[arg(long)]
        to: usize,
    },
}

/// Entries of a flat record: `(key, value)` in output order.
type Row = Vec<(&'static str, String)>;

struct Output {
    json: Value,
    rows: Vec<Row>,
}

impl Output {
    fn single(json: Value, row: Row) -> Self {
        Self {
            json,
            rows: vec![row],
        }
    }

    fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("json");
                s.push('\n');
                s
            }
            Format::Tsv => {
                let mut s = String::new();
                if let Some(first) = self.rows.first() {
                    let header: Vec<&str> = first.iter().map(|(k, _)| *k).collect();
                    s.push_str(&header.join("\t"));
                    s.push('\n');
                }
                for row in &self.rows {
                    let vals: Vec<&str> = row.iter().map(|(_, v)| v.as_str()).collect();
                    s.push_str(&vals.join("\t"));
                    s.push('\n');
                }
                s
            }
            Format::Pretty => {
                let width = self
                    .rows
                    .iter()
                    .flatten()
                    .map(|(k, _)| k.len())
                    .max()
                    .unwrap_or(0);
                let blocks: Vec<String> = self
                    .rows
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(|(k, v)| format!("{k:<width$}  {v}\n"))
                            .collect::<String>()
                    })
                    .collect();
                blocks.join("\n")
            }
        }
    }
}

fn config_from(node_limit: Option<u64>, bound: Option<u64>, window: Option<u64>) -> Result<DPsiConfig> {
    let mut config = DPsiConfig::default();
    if let Ok(text) = std::env::var(NODE_LIMIT_ENV) {
        config.node_limit = text
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("{NODE_LIMIT_ENV}={text} is not a count")))?;
    }
    if let Some(v) = node_limit {
        config.node_limit = v;
    }
    if let Some(v) = bound {
        config.bound = v;
    }
    if let Some(v) = window {
        config.window = v;
    }
    Ok(config)
}

fn dpsi_output(rs: &RootSystem, class_weight: &str, config: &DPsiConfig) -> Result<Output> {
    let w = parse_weight(rs, class_weight)?;
    let class = schur_class_of(rs, &w)?;
    let d: DPsiResult = d_psi(rs, &class, config)?;
    let witnesses: Vec<String> = d
        .witnesses
        .iter()
        .map(|x| format!("{}:{}", x.weight, x.dim))
        .collect();
    let json = json!({
        "class": class.representative(),
        "result": d,
        "root_system": rs.to_string(),
    });
    let row = vec![
        ("root_system", rs.to_string()),
        ("class", class.representative().to_string()),
        ("value", d.value.to_string()),
        ("status", d.status.to_string()),
        ("bound_used", d.bound_used.to_string()),
        ("witnesses", witnesses.join(";")),
    ];
    Ok(Output::single(json, row))
}

fn report_row(r: &BoundReport) -> Row {
    vec![
        // lambda lives in the n coordinates of C_n
        ("n", r.lambda.len().to_string()),
        ("g", r.g.clone()),
        ("orbit", r.orbit.clone()),
        ("q_type", r.q_type.clone()),
        ("omega", r.highest_weight_omega.to_string()),
        ("dim_V", r.dim_v.to_string()),
        ("d_V", r.d_v.value.to_string()),
        ("d_V_status", r.d_v.status.to_string()),
        ("grk_bound", r.grk_bound.to_string()),
        ("a_orbit_size", r.a_orbit_size.to_string()),
        ("ideal_codim", r.ideal_codim.to_string()),
        ("bound_is_exact", r.bound_is_exact.to_string()),
    ]
}

fn to_json<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn execute(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Dim { rs, weight } => {
            let rs: RootSystem = rs.parse()?;
            let w = parse_weight(&rs, weight)?;
            let dim = weyl_dim(&rs, &w)?;
            Ok(Output::single(
                json!({"dim": dim.to_string(), "root_system": rs.to_string(), "weight": w}),
                vec![("root_system", rs.to_string()), ("weight", w.to_string()), ("dim", dim.to_string())],
            ))
        }
        Command::OrbitSize { rs, weight } => {
            let rs: RootSystem = rs.parse()?;
            let w = parse_weight(&rs, weight)?;
            let size = rs.orbit_size(&w)?;
            let stab = rs.stabilizer_order(&w)?;
            Ok(Output::single(
                json!({
                    "orbit_size": size.to_string(),
                    "root_system": rs.to_string(),
                    "stabilizer_order": stab.to_string(),
                    "weight": w,
                }),
                vec![
                    ("root_system", rs.to_string()),
                    ("weight", w.to_string()),
                    ("orbit_size", size.to_string()),
                    ("stabilizer_order", stab.to_string()),
                ],
            ))
        }
        Command::Dpsi {
            rs,
            class_weight,
            bound,
            window,
            node_limit,
        } => {
            let rs: RootSystem = rs.parse()?;
            dpsi_output(&rs, class_weight, &config_from(*node_limit, *bound, *window)?)
        }
        Command::Index {
            rs,
            class_weight,
            node_limit,
        } => {
            let rs: RootSystem = rs.parse()?;
            dpsi_output(&rs, class_weight, &config_from(*node_limit, None, None)?)
        }
        Command::Integral { rs, weight, dual } => {
            let rs: RootSystem = rs.parse()?;
            let w = parse_weight(&rs, weight)?;
            let sub = if *dual {
                dual_integral_subsystem(&rs, &w)?
            } else {
                integral_subsystem(&rs, &w)?
            };
            let positive = sub.roots.len() / 2;
            Ok(Output::single(
                json!({
                    "dim": sub.dim,
                    "dual": dual,
                    "positive_roots": positive,
                    "root_system": rs.to_string(),
                    "type": sub.type_guess.to_string(),
                    "weight": w,
                }),
                vec![
                    ("root_system", rs.to_string()),
                    ("weight", w.to_string()),
                    ("dual", dual.to_string()),
                    ("type", sub.type_guess.to_string()),
                    ("positive_roots", positive.to_string()),
                    ("dim", sub.dim.to_string()),
                ],
            ))
        }
        Command::Orbit { family, partition } => {
            let orbit = OrbitDatum::parse(*family, partition)?;
            let grading = h_and_grading(&orbit.partition)?;
            let dims: serde_json::Map<String, Value> = grading
                .dims
                .iter()
                .map(|(k, v)| (k.to_string(), json!(v)))
                .collect();
            let dims_text: Vec<String> = grading.dims.iter().map(|(k, v)| format!("{k}:{v}")).collect();
            Ok(Output::single(
                json!({
                    "algebra_dim": orbit.algebra_dim(),
                    "centralizer_dim": orbit.centralizer_dim,
                    "component_group_order": orbit.component_group_order,
                    "family": family.to_string(),
                    "grading": dims,
                    "h": orbit.h,
                    "is_even": orbit.is_even,
                    "orbit_dim": orbit.orbit_dim(),
                    "partition": orbit.partition.to_string(),
                    "reductive_centralizer": orbit.reductive_centralizer.to_string(),
                    "tq_embedding": orbit.tq_embedding().rows,
                }),
                vec![
                    ("family", family.to_string()),
                    ("partition", orbit.partition.to_string()),
                    ("algebra_dim", orbit.algebra_dim().to_string()),
                    ("orbit_dim", orbit.orbit_dim().to_string()),
                    ("centralizer_dim", orbit.centralizer_dim.to_string()),
                    ("reductive_centralizer", orbit.reductive_centralizer.to_string()),
                    ("component_group_order", orbit.component_group_order.to_string()),
                    ("is_even", orbit.is_even.to_string()),
                    ("h", orbit.h.to_string()),
                    ("grading", dims_text.join(",")),
                ],
            ))
        }
        Command::Delta { family, partition, nu } => {
            let orbit = OrbitDatum::parse(*family, partition)?;
            let nu = nu
                .as_deref()
                .map(|text| {
                    text.split(',')
                        .filter(|s| !s.trim().is_empty())
                        .map(parse_rational)
                        .collect::<Result<Vec<_>>>()
                })
                .transpose()?;
            let ctx = SliceContext::new(&orbit, nu)?;
            let g = ctx.g().clone();
            let d = delta(&ctx);
            let r0 = rho_zero(&ctx);
            let rho_t = ctx.restrict_to_tq(&g.rho())?;
            let half = g.rho().scale(&crate::number::frac(1, 2));
            let chi = underline_character(&half, &ctx)?;
            let d_t = ctx.restrict_to_tq(&d)?;
            let r0_t = ctx.restrict_to_tq(&r0)?;
            let nu_eta = crate::rootsys::Weight(ctx.nu().to_vec());
            Ok(Output::single(
                json!({
                    "character_half_rho": chi,
                    "delta": d,
                    "delta_tq": d_t,
                    "nu": nu_eta,
                    "partition": orbit.partition.to_string(),
                    "rho_tq": rho_t,
                    "rho_zero": r0,
                    "rho_zero_tq": r0_t,
                }),
                vec![
                    ("partition", orbit.partition.to_string()),
                    ("nu", nu_eta.to_string()),
                    ("delta", d.to_string()),
                    ("delta_tq", d_t.to_string()),
                    ("rho_zero", r0.to_string()),
                    ("rho_zero_tq", r0_t.to_string()),
                    ("rho_tq", rho_t.to_string()),
                    ("character_half_rho", chi.to_string()),
                ],
            ))
        }
        Command::Premet { n, node_limit } => {
            let report = premet_example_with(*n, &config_from(*node_limit, None, None)?)?;
            Ok(Output::single(to_json(&report), report_row(&report)))
        }
        Command::Table {
            which: TableKind::Premet { from, to },
        } => {
            if from > to {
                return Err(Error::Parse(format!("empty range {from}..{to}")));
            }
            let config = config_from(None, None, None)?;
            // rows are independent; collect keeps them in n-order
            let reports = (*from..=*to)
                .into_par_iter()
                .map(|n| premet_example_with(n, &config))
                .collect::<Result<Vec<_>>>()?;
            Ok(Output {
                json: to_json(&reports),
                rows: reports.iter().map(report_row).collect(),
            })
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        _ => EXIT_INVALID,
    }
}

/// Parses `args` (including the program name), writes the result to `out`
/// and a one-line diagnostic to `err`, and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK {
                write!(out, "{text}")
            } else {
                let line = text.lines().next().unwrap_or("error: invalid arguments");
                writeln!(err, "{line}")
            };
            return code;
        }
    };
    match execute(&cli) {
        Ok(output) => {
            let _ = write!(out, "{}", output.render(cli.format));
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
