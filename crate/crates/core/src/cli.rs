//! The `mweights` command line. Every subcommand produces a list of records;
//! text mode prints them as file-style lines, `--records` as JSON lines.

use std::collections::{BTreeMap, BTreeSet};
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde::Serialize;

use crate::balance::{constrained_solve, is_balanced, support_scan, weight_space, Solve, Verdict, WeightVector};
use crate::field::{format_scalar, to_decimal, QuadraticScalar as Q};
use crate::figure::{render, AlphaChoice, FigureConstants, Format, Panel};
use crate::io::{self, IoError, Validation};
use crate::skeleton::{builtin_polytope, PolytopeSkeleton, Solid};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "mweights", version, about = "Exact Minkowski weights on fans over 3-polytopes")]
struct Cli {
    /// Emit one JSON record per line instead of text.
    #[arg(long, global = true)]
    records: bool,
    /// Append decimal approximations with this many digits.
    #[arg(long, global = true, value_name = "N")]
    approx: Option<usize>,
    /// Report skeleton diagnostics as warnings instead of errors.
    #[arg(long, global = true)]
    lenient: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a builtin polytope as a skeleton file.
    Polytope {
        name: Solid,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Dimension of the weight space.
    Dim {
        #[arg(long)]
        skeleton: PathBuf,
    },
    /// Canonical echelon basis of the weight space.
    Basis {
        #[arg(long)]
        skeleton: PathBuf,
    },
    /// Check a weight; exit 1 if it is not balanced.
    Check {
        #[arg(long)]
        skeleton: PathBuf,
        #[arg(long)]
        weight: PathBuf,
    },
    /// Balanced weights with pinned values and forced zeros; exit 1 if none.
    Solve {
        #[arg(long)]
        skeleton: PathBuf,
        #[arg(long)]
        pin: PathBuf,
        /// Edge `name1:name2` forced to zero; repeatable.
        #[arg(long, value_name = "EDGE")]
        zero: Vec<String>,
    },
    /// For each edge, whether some balanced weight vanishes exactly there.
    ScanSupport {
        #[arg(long)]
        skeleton: PathBuf,
    },
    /// Emit one of the two icosahedral ring drawings.
    Figure {
        #[arg(long, value_parser = ["left", "right"])]
        panel: String,
        #[arg(long, default_value = "corrected", value_parser = ["printed", "corrected"])]
        alpha: String,
        #[arg(long, value_parser = ["tikz", "dot"])]
        format: String,
        /// Also write the drawn weight, over the builtin icosahedron, as a weight file.
        #[arg(long, value_name = "F")]
        weight_out: Option<PathBuf>,
    },
}

#[derive(Serialize, Debug, Clone, PartialEq)]
struct EdgeValue {
    edge: String,
    value: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    approx: Option<String>,
}

#[derive(Serialize, Debug, Clone, PartialEq)]
#[serde(tag = "record", rename_all = "snake_case")]
enum Record {
    Field {
        radicand: u32,
    },
    Vertex {
        name: String,
        coordinates: [String; 3],
    },
    Edge {
        a: String,
        b: String,
    },
    Dim {
        dim: usize,
    },
    BasisVector {
        index: usize,
        values: Vec<EdgeValue>,
    },
    Verdict {
        balanced: bool,
        failing: usize,
    },
    Residual {
        vertex: String,
        residual: [String; 3],
        #[serde(skip_serializing_if = "Option::is_none")]
        approx: Option<[String; 3]>,
    },
    Solution {
        feasible: bool,
        dimension: Option<usize>,
    },
    Particular {
        values: Vec<EdgeValue>,
    },
    Direction {
        index: usize,
        values: Vec<EdgeValue>,
    },
    Support {
        edge: String,
        feasible: bool,
    },
    SupportSummary {
        feasible: usize,
        edges: usize,
    },
    Figure {
        panel: String,
        alpha: String,
        format: String,
        balanced: bool,
        text: String,
    },
    Notice {
        message: String,
    },
}

fn weight_lines(out: &mut String, values: &[EdgeValue]) {
    for v in values {
        let (a, b) = v.edge.split_once(':').expect("edge labels contain ':'");
        out.push_str(&format!("w {a} {b} {}", v.value));
        if let Some(x) = &v.approx {
            out.push_str(&format!("  # ~{x}"));
        }
        out.push('\n');
    }
}

impl Record {
    fn text(&self) -> String {
        let mut out = String::new();
        match self {
            Record::Field { radicand } => out.push_str(&format!("field sqrt{radicand}\n")),
            Record::Vertex { name, coordinates: [x, y, z] } => out.push_str(&format!("v {name} {x} {y} {z}\n")),
            Record::Edge { a, b } => out.push_str(&format!("e {a} {b}\n")),
            Record::Dim { dim } => out.push_str(&format!("{dim}\n")),
            Record::BasisVector { index, values } => {
                out.push_str(&format!("# vector {index}\n"));
                weight_lines(&mut out, values);
            }
            Record::Verdict { balanced: true, .. } => out.push_str("balanced\n"),
            Record::Verdict { balanced: false, failing } => {
                out.push_str(&format!("unbalanced at {failing} vertices\n"))
            }
            Record::Residual { vertex, residual: [x, y, z], approx } => {
                out.push_str(&format!("residual {vertex} {x} {y} {z}"));
                if let Some([p, q, r]) = approx {
                    out.push_str(&format!("  # ~{p} {q} {r}"));
                }
                out.push('\n');
            }
            Record::Solution { feasible: false, .. } => out.push_str("infeasible\n"),
            Record::Solution { feasible: true, dimension } => {
                out.push_str(&format!("feasible, dimension {}\n", dimension.unwrap_or(0)))
            }
            Record::Particular { values } => {
                out.push_str("# particular\n");
                weight_lines(&mut out, values);
            }
            Record::Direction { index, values } => {
                out.push_str(&format!("# direction {index}\n"));
                weight_lines(&mut out, values);
            }
            Record::Support { edge, feasible } => {
                out.push_str(&format!("{edge} {}\n", if *feasible { "feasible" } else { "infeasible" }))
            }
            Record::SupportSummary { feasible, edges } => {
                out.push_str(&format!("# feasible on {feasible} of {edges} edges\n"))
            }
            Record::Figure { text, .. } => out.push_str(text),
            Record::Notice { .. } => {}
        }
        out
    }
}

struct Ctx {
    approx: Option<usize>,
    validation: Validation,
}

impl Ctx {
    fn values(&self, skel: &PolytopeSkeleton<Q>, w: &WeightVector<Q>) -> Vec<EdgeValue> {
        w.values()
            .iter()
            .enumerate()
            .map(|(e, v)| EdgeValue {
                edge: skel.edge_label(e),
                value: format_scalar(v),
                approx: self.approx.map(|d| to_decimal(v, d)),
            })
            .collect()
    }

    fn skeleton(&self, path: &Path, err: &mut dyn Write) -> Result<PolytopeSkeleton<Q>, Failure> {
        let read = io::read_skeleton(path, self.validation).map_err(|e| Failure::input(path, e))?;
        for w in &read.warnings {
            let _ = writeln!(err, "warning: {w}");
        }
        Ok(read.skeleton)
    }
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(path: &Path, e: IoError) -> Self {
        let message = match e {
            IoError::File { .. } => e.to_string(),
            _ => format!("{}: {e}", path.display()),
        };
        Failure { code: EXIT_INPUT, message }
    }

    fn other(e: impl std::fmt::Display) -> Self {
        Failure { code: EXIT_INPUT, message: e.to_string() }
    }
}

fn alpha_notice(alpha: AlphaChoice) -> String {
    let c = FigureConstants::default();
    match alpha {
        AlphaChoice::Corrected => format!(
            "alpha = {} (corrected); the legend value {} is not balanced, rerun with --alpha printed to see it",
            format_scalar(&c.alpha_corrected),
            format_scalar(&c.alpha_printed)
        ),
        AlphaChoice::Printed => format!(
            "alpha = {} as printed in the legend; this weight is not balanced, {} balances it",
            format_scalar(&c.alpha_printed),
            format_scalar(&c.alpha_corrected)
        ),
    }
}

fn execute(command: Command, ctx: &Ctx, err: &mut dyn Write) -> Result<(Vec<Record>, i32), Failure> {
    let mut records = Vec::new();
    let mut code = EXIT_OK;
    match command {
        Command::Polytope { name, out } => {
            let skel = builtin_polytope(name);
            if let Some(path) = out {
                io::write_skeleton(&skel, &path).map_err(Failure::other)?;
            } else {
                records.push(Record::Field { radicand: 5 });
                for v in skel.vertices() {
                    records.push(Record::Vertex {
                        name: v.name.clone(),
                        coordinates: v.position.components().map(format_scalar),
                    });
                }
                for e in skel.edges() {
                    records.push(Record::Edge { a: skel.name(e.a).into(), b: skel.name(e.b).into() });
                }
            }
        }
        Command::Dim { skeleton } => {
            let skel = ctx.skeleton(&skeleton, err)?;
            records.push(Record::Dim { dim: weight_space(&skel).map_err(Failure::other)?.dim() });
        }
        Command::Basis { skeleton } => {
            let skel = ctx.skeleton(&skeleton, err)?;
            let basis = weight_space(&skel).map_err(Failure::other)?;
            records.push(Record::Dim { dim: basis.dim() });
            for (i, v) in basis.vectors().iter().enumerate() {
                records.push(Record::BasisVector { index: i + 1, values: ctx.values(&skel, v) });
            }
        }
        Command::Check { skeleton, weight } => {
            let skel = ctx.skeleton(&skeleton, err)?;
            let w = io::read_weight(&weight, &skel).map_err(|e| Failure::input(&weight, e))?;
            match is_balanced(&skel, &w) {
                Verdict::Balanced => records.push(Record::Verdict { balanced: true, failing: 0 }),
                Verdict::Unbalanced(residuals) => {
                    code = EXIT_NEGATIVE;
                    records.push(Record::Verdict { balanced: false, failing: residuals.len() });
                    for r in residuals {
                        let comps = r.vector.components();
                        records.push(Record::Residual {
                            vertex: skel.name(r.vertex).into(),
                            residual: comps.map(format_scalar),
                            approx: ctx.approx.map(|d| comps.map(|x| to_decimal(x, d))),
                        });
                    }
                }
            }
        }
        Command::Solve { skeleton, pin, zero } => {
            let skel = ctx.skeleton(&skeleton, err)?;
            let pins: BTreeMap<usize, Q> = io::read_pins(&pin, &skel).map_err(|e| Failure::input(&pin, e))?;
            let mut zeros = BTreeSet::new();
            for z in &zero {
                let (a, b) = z.split_once(':').ok_or_else(|| Failure {
                    code: EXIT_USAGE,
                    message: format!("--zero expects name1:name2, got '{z}'"),
                })?;
                zeros.insert(skel.edge_by_names(a, b).map_err(|_| Failure::other(format!("unknown edge {z}")))?);
            }
            match constrained_solve(&skel, &pins, &zeros).map_err(Failure::other)? {
                Solve::Infeasible => {
                    code = EXIT_NEGATIVE;
                    records.push(Record::Solution { feasible: false, dimension: None });
                }
                Solve::Feasible(set) => {
                    records.push(Record::Solution { feasible: true, dimension: Some(set.dimension()) });
                    records.push(Record::Particular { values: ctx.values(&skel, &set.particular) });
                    for (i, v) in set.homogeneous.vectors().iter().enumerate() {
                        records.push(Record::Direction { index: i + 1, values: ctx.values(&skel, v) });
                    }
                }
            }
        }
        Command::ScanSupport { skeleton } => {
            let skel = ctx.skeleton(&skeleton, err)?;
            let reports = support_scan(&skel).map_err(Failure::other)?;
            let feasible = reports.iter().filter(|r| r.feasible).count();
            for r in &reports {
                records.push(Record::Support { edge: skel.edge_label(r.edge), feasible: r.feasible });
            }
            records.push(Record::SupportSummary { feasible, edges: reports.len() });
        }
        Command::Figure { panel, alpha, format, weight_out } => {
            let panel: Panel = panel.parse().map_err(Failure::other)?;
            let alpha: AlphaChoice = alpha.parse().map_err(Failure::other)?;
            let fmt: Format = format.parse().map_err(Failure::other)?;
            let rendered = render(panel, alpha, fmt).map_err(Failure::other)?;
            let mut text = rendered.text;
            if panel == Panel::Right {
                let notice = alpha_notice(alpha);
                let comment = if fmt == Format::Tikz { "%" } else { "//" };
                text = format!("{comment} {notice}\n{text}");
                let _ = writeln!(err, "note: {notice}");
                records.push(Record::Notice { message: notice });
            }
            if let Some(path) = weight_out {
                let icosa = builtin_polytope(Solid::Icosahedron);
                io::write_weight(&icosa, &rendered.weight, &path).map_err(Failure::other)?;
            }
            records.push(Record::Figure {
                panel: if panel == Panel::Left { "left" } else { "right" }.into(),
                alpha: alpha.to_string(),
                format,
                balanced: rendered.balanced,
                text,
            });
        }
    }
    Ok((records, code))
}

/// Runs the command line and returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ =
                if e.use_stderr() { err.write_all(rendered.as_bytes()) } else { out.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    let ctx =
        Ctx { approx: cli.approx, validation: if cli.lenient { Validation::Lenient } else { Validation::Strict } };
    match execute(cli.command, &ctx, err) {
        Ok((records, code)) => {
            for r in &records {
                let line =
                    if cli.records { serde_json::to_string(r).expect("records serialize") + "\n" } else { r.text() };
                if out.write_all(line.as_bytes()).is_err() {
                    return EXIT_INPUT;
                }
            }
            code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}
