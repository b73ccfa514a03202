//! Command-line front end. Exit status: 0 for YES or valid, 1 for NO or
//! invalid, 2 for errors.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::Error;
use crate::hypergraph::{Cover, Hypergraph};
use crate::io::{
    parse_certificate, parse_hypergraph, write_certificate, write_hypergraph, Certificate, CertificateJson,
    HypergraphJson,
};
use crate::kernel::{kernelize, KernelOptions};
use crate::oracle::{brute_force_min_cover, gen, greedy_cover, GenMode, GenSpec};
use crate::reductions::cc::{cc_to_setcover, parse_cc, write_cc, CcJson};
use crate::reductions::mdm::{mdm_to_cc, parse_mdm};
use crate::solver::{solve, Pick, SolveOptions};
use crate::structure::{find_semi_ladder, intersection_closure, is_flat, minimal_flat_d};
use crate::trace::{GroupTrace, ReduceStep, TraceStep};

#[derive(Debug, Parser)]
#[command(name = "flatcover", version, about = "Set cover on semi-ladder-free hypergraphs")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PickArg {
    Smallest,
    Rare,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Report the closure chain length, the least flat d, and a certificate.
    Check {
        file: PathBuf,
        /// Decide d-flatness; exit 1 if the hypergraph is not d-flat.
        #[arg(short)]
        d: Option<usize>,
        /// With -d, also search for a (d+1)-semi-ladder directly.
        #[arg(long, requires = "d")]
        witness: bool,
    },
    /// Decide whether a cover of at most k edges exists.
    Solve {
        file: PathBuf,
        #[arg(short)]
        k: usize,
        /// Claimed flatness; enables measure instrumentation.
        #[arg(short)]
        d: Option<usize>,
        /// Abort after this many search nodes.
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, value_enum, default_value_t = PickArg::Smallest)]
        pick: PickArg,
        /// Print search statistics as a comment line.
        #[arg(long)]
        stats: bool,
    },
    /// Shrink the instance to at most k^d vertices.
    Kernelize {
        file: PathBuf,
        #[arg(short)]
        k: usize,
        #[arg(short)]
        d: usize,
        /// Reject inputs that are not d-flat.
        #[arg(long)]
        check: bool,
        /// Write the grouping trace to this file.
        #[arg(long, value_name = "PATH")]
        emit_trace: Option<PathBuf>,
    },
    /// Exact minimum cover by exhaustive search (at most 25 edges).
    Oracle {
        file: PathBuf,
        /// Exit 1 unless the minimum is at most k.
        #[arg(short)]
        k: Option<usize>,
    },
    /// Largest-marginal-gain greedy cover.
    Greedy { file: PathBuf },
    /// Generate a seeded random instance.
    Gen {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(short)]
        n: usize,
        #[arg(short)]
        m: usize,
        #[arg(short, default_value_t = 2)]
        d: usize,
        #[arg(long, value_enum, default_value_t = GenMode::RandomFlat)]
        mode: GenMode,
    },
    /// Reduce a constraint-cover instance to set cover.
    ReduceCc { file: PathBuf },
    /// Reduce a multidimensional matching instance to constraint cover.
    ReduceMdm {
        file: PathBuf,
        #[arg(short)]
        d: usize,
        #[arg(short)]
        c: usize,
    },
    /// Check a certificate against a hypergraph.
    Verify {
        file: PathBuf,
        certificate: PathBuf,
        /// Budget for the cover size; read from a "c k=" line if absent.
        #[arg(short)]
        k: Option<usize>,
    },
}

/// A failed command: message for stderr, exit status 2.
#[derive(Debug)]
pub struct Failure(pub String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure(e.to_string())
    }
}

type Outcome = Result<i32, Failure>;

fn read_input(path: &Path) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        return Ok(s);
    }
    fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn read_hypergraph(path: &Path) -> Result<Hypergraph, Failure> {
    parse_hypergraph(&read_input(path)?).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn emit_json(out: &mut dyn Write, value: &serde_json::Value) -> io::Result<()> {
    writeln!(out, "{value}")
}

fn emit_certificate(
    out: &mut dyn Write,
    format: Format,
    cert: &Certificate,
    extra: &[(&str, String)],
) -> io::Result<()> {
    match format {
        Format::Text => {
            if !extra.is_empty() {
                let fields: Vec<String> = extra.iter().map(|(key, val)| format!("{key}={val}")).collect();
                writeln!(out, "c {}", fields.join(" "))?;
            }
            out.write_all(write_certificate(cert).as_bytes())
        }
        Format::Json => {
            let mut v = serde_json::to_value(CertificateJson::from(cert)).expect("serializable");
            for (key, val) in extra {
                v[key] = json!(val);
            }
            emit_json(out, &v)
        }
    }
}

fn sets_json(sets: &[crate::hypergraph::VertexSet]) -> serde_json::Value {
    json!(sets)
}

/// Parses `argv`, runs the command, and returns the exit status.
pub fn main_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if code == 0 { write!(out, "{e}") } else { write!(err, "{e}") };
            return code;
        }
    };
    match run(&cli, out, err) {
        Ok(code) => code,
        Err(Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    let format = cli.format;
    match &cli.command {
        Command::Check { file, d, witness } => check(out, format, file, *d, *witness),
        Command::Solve { file, k, d, budget, pick, stats } => {
            let h = read_hypergraph(file)?;
            let opts = SolveOptions {
                hint: *d,
                budget: *budget,
                pick: match pick {
                    PickArg::Smallest => Pick::Smallest,
                    PickArg::Rare => Pick::Rare,
                },
            };
            let sol = solve(&h, *k, &opts)?;
            let mut extra = Vec::new();
            if *stats {
                let s = &sol.stats;
                extra.push(("nodes", s.nodes_visited.to_string()));
                extra.push(("depth", s.max_depth.to_string()));
                if let Some(m) = s.measure_at_root {
                    extra.push(("measure0", m.to_string()));
                    extra.push(("violations", s.measure_violations.to_string()));
                }
            }
            let (cert, code) = match sol.cover {
                Some(c) => (Certificate::Cover(c), 0),
                None => (Certificate::NoCover { k: Some(*k) }, 1),
            };
            emit_certificate(out, format, &cert, &extra)?;
            Ok(code)
        }
        Command::Kernelize { file, k, d, check, emit_trace } => {
            let h = read_hypergraph(file)?;
            let mut trace = GroupTrace::new();
            let start = if h.is_reduced() {
                h
            } else {
                let r = h.reduce()?;
                trace.push_step(TraceStep::Reduce(ReduceStep { removed: r.removed, renaming: r.renaming }));
                r.hypergraph
            };
            let opts = KernelOptions { check_input: *check, ..Default::default() };
            let result = kernelize(&start, *k, *d, &opts)?;
            trace.steps.extend(result.trace.steps);
            if let Some(path) = emit_trace {
                fs::write(path, trace.to_text()).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
            }
            match format {
                Format::Text => {
                    writeln!(out, "c rounds={}", result.rounds)?;
                    out.write_all(write_hypergraph(&result.kernel).as_bytes())?;
                }
                Format::Json => {
                    let mut v = serde_json::to_value(HypergraphJson::from(&result.kernel)).expect("serializable");
                    v["rounds"] = json!(result.rounds);
                    v["trace"] = serde_json::to_value(&trace).expect("serializable");
                    emit_json(out, &v)?;
                }
            }
            Ok(0)
        }
        Command::Oracle { file, k } => {
            let h = read_hypergraph(file)?;
            match brute_force_min_cover(&h)? {
                Some(c) if k.is_none_or(|k| c.len() <= k) => {
                    emit_certificate(out, format, &Certificate::Cover(c.clone()), &[("min", c.len().to_string())])?;
                    Ok(0)
                }
                found => {
                    let extra: Vec<(&str, String)> = found.iter().map(|c| ("min", c.len().to_string())).collect();
                    let budget = k.unwrap_or(h.m());
                    emit_certificate(out, format, &Certificate::NoCover { k: Some(budget) }, &extra)?;
                    Ok(1)
                }
            }
        }
        Command::Greedy { file } => {
            let h = read_hypergraph(file)?;
            match greedy_cover(&h) {
                Ok(c) => {
                    emit_certificate(out, format, &Certificate::Cover(c), &[])?;
                    Ok(0)
                }
                Err(Error::Uncoverable(v)) => {
                    writeln!(err, "vertex {v} lies in no edge")?;
                    emit_certificate(out, format, &Certificate::NoCover { k: Some(h.m()) }, &[])?;
                    Ok(1)
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Gen { seed, n, m, d, mode } => {
            let spec = GenSpec { seed: *seed, n: *n, m: *m, d: *d, mode: *mode };
            let g = gen(&spec)?;
            match format {
                Format::Text => out.write_all(g.to_text(&spec).as_bytes())?,
                Format::Json => {
                    let mut v = serde_json::to_value(HypergraphJson::from(&g.hypergraph)).expect("serializable");
                    v["seed"] = json!(seed);
                    v["mode"] = json!(mode.to_string());
                    if let Some(c) = &g.planted {
                        v["planted"] = json!(c.indices().iter().map(|i| i + 1).collect::<Vec<_>>());
                    }
                    emit_json(out, &v)?;
                }
            }
            Ok(0)
        }
        Command::ReduceCc { file } => {
            let inst = parse_cc(&read_input(file)?)?;
            let (h, k_prime) = cc_to_setcover(&inst);
            match format {
                Format::Text => {
                    writeln!(out, "c param={k_prime}")?;
                    out.write_all(write_hypergraph(&h).as_bytes())?;
                }
                Format::Json => {
                    let mut v = serde_json::to_value(HypergraphJson::from(&h)).expect("serializable");
                    v["param"] = json!(k_prime);
                    emit_json(out, &v)?;
                }
            }
            Ok(0)
        }
        Command::ReduceMdm { file, d, c } => {
            let inst = parse_mdm(&read_input(file)?)?;
            if *d < 3 {
                writeln!(err, "warning: d = {d} < 3; the construction is illustrative only")?;
            }
            let (cc, layout) = mdm_to_cc(&inst, *d, *c)?;
            match format {
                Format::Text => {
                    out.write_all(layout.comment().as_bytes())?;
                    writeln!(out, "c param={}", layout.k)?;
                    out.write_all(write_cc(&cc).as_bytes())?;
                }
                Format::Json => {
                    let mut v = serde_json::to_value(CcJson::from(&cc)).expect("serializable");
                    v["param"] = json!(layout.k);
                    v["layout"] = json!({
                        "d": layout.d, "c": layout.c, "s": layout.s, "n": layout.n,
                        "padding": layout.padding, "m": layout.m, "l": layout.l,
                    });
                    emit_json(out, &v)?;
                }
            }
            Ok(0)
        }
        Command::Verify { file, certificate, k } => verify(out, format, file, certificate, *k),
    }
}

fn check(out: &mut dyn Write, format: Format, file: &Path, d: Option<usize>, witness: bool) -> Outcome {
    let h = read_hypergraph(file)?;
    let closure = intersection_closure(&h)?;
    let index = closure.longest;
    let chain = closure.longest_chain();
    let least = minimal_flat_d(index);
    let verdict = d.map(|d| (d, is_flat(&h, d).flat));
    let found = match (d, witness) {
        (Some(d), true) => find_semi_ladder(&h, d + 1),
        _ => None,
    };
    match format {
        Format::Text => {
            writeln!(out, "c index={index} flat-d={least}")?;
            write!(out, "chain:")?;
            for e in &chain {
                write!(out, " {e}")?;
            }
            writeln!(out)?;
            if let Some((d, flat)) = verdict {
                writeln!(out, "s {} d={d}", if flat { "flat" } else { "not-flat" })?;
            }
            if let Some(w) = &found {
                write!(out, "{w}")?;
            }
        }
        Format::Json => {
            let mut v = json!({ "index": index, "flat_d": least, "chain": sets_json(&chain) });
            if let Some((d, flat)) = verdict {
                v["d"] = json!(d);
                v["flat"] = json!(flat);
            }
            if let Some(w) = &found {
                v["witness"] = serde_json::to_value(w).expect("serializable");
            }
            emit_json(out, &v)?;
        }
    }
    Ok(match verdict {
        Some((_, false)) => 1,
        _ => 0,
    })
}

fn verify(out: &mut dyn Write, format: Format, file: &Path, cert_path: &Path, k: Option<usize>) -> Outcome {
    let h = read_hypergraph(file)?;
    let cert =
        parse_certificate(&read_input(cert_path)?).map_err(|e| Failure(format!("{}: {e}", cert_path.display())))?;
    let (valid, reason) = match &cert {
        Certificate::Cover(c) => verify_cover_cert(&h, c, k)?,
        Certificate::NoCover { k: stated } => {
            let budget =
                k.or(*stated).ok_or_else(|| Failure("no-cover certificate needs a budget (-k or 'c k=')".into()))?;
            match brute_force_min_cover(&h)? {
                None => (true, "no cover exists".to_string()),
                Some(c) if c.len() > budget => (true, format!("minimum cover has {} edges", c.len())),
                Some(c) => (false, format!("a cover of {} edges exists", c.len())),
            }
        }
    };
    match format {
        Format::Text => writeln!(out, "s {}\nc {reason}", if valid { "valid" } else { "invalid" })?,
        Format::Json => emit_json(out, &json!({ "s": if valid { "valid" } else { "invalid" }, "reason": reason }))?,
    }
    Ok(if valid { 0 } else { 1 })
}

fn verify_cover_cert(h: &Hypergraph, c: &Cover, k: Option<usize>) -> Result<(bool, String), Failure> {
    if let Some(&bad) = c.indices().iter().find(|&&i| i >= h.m()) {
        return Ok((false, format!("edge {} does not exist", bad + 1)));
    }
    if !h.verify_cover(c)? {
        return Ok((false, "edges do not cover every vertex".into()));
    }
    if let Some(k) = k.filter(|&k| c.len() > k) {
        return Ok((false, format!("{} edges exceed k={k}", c.len())));
    }
    Ok((true, format!("{} edges cover all {} vertices", c.len(), h.n())))
}

/// Entry point used by the binary.
pub fn main() -> i32 {
    let stdout = io::stdout();
    let stderr = io::stderr();
    let code = main_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock());
    let _ = io::stdout().flush();
    code
}
