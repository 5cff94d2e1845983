//! `hamwire` command-line front end.
//!
//! Every subcommand writes to caller-supplied streams and returns its exit
//! code, so the binary and the tests share one code path.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use hamwire_core::circuit::{compile_with, emit_netlist, parse_netlist, CompileOptions};
use hamwire_core::oracle::{canonicalize, expected_fixed_start, expected_full_codes, find_cycles};
use hamwire_core::resources::{report, totbits_table};
use hamwire_core::simulator::{run_all_initializations, run_full_code_space, FlagReadout, ReadoutKind};
use hamwire_core::{parse_graph, Circuit, Encoding, Error as CoreError, Graph, Initialization, Mode};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_GUARD: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Guard(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => EXIT_INPUT,
            CliError::Guard(_) => EXIT_GUARD,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(err: CoreError) -> Self {
        match err {
            CoreError::CodeSpaceTooLarge { .. } | CoreError::Overflow(_) => CliError::Guard(err.to_string()),
            other => CliError::Input(other.to_string()),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(name = "hamwire", version, about = "Hamiltonian cycle recognizer circuits: compile, simulate, account")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Simulate one register per candidate walk and print every flagged cycle.
    Find(FindArgs),
    /// Print the compiled netlist.
    Compile(CompileArgs),
    /// Print formula and measured resource counts, or the TOTBITS table.
    Resources(ResourcesArgs),
    /// Check circuit flags against the backtracking oracle.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    ReversibleFull,
    CmosOneshot,
    CmosReduced,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::ReversibleFull => Mode::ReversibleFull,
            ModeArg::CmosOneshot => Mode::CmosOneshot,
            ModeArg::CmosReduced => Mode::CmosReduced,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Text,
    Csv,
}

#[derive(Debug, Args)]
pub struct FindArgs {
    pub graph: PathBuf,
    /// Compilation mode [default: cmos-reduced, or reversible-full with --full-codes]
    #[arg(long, value_enum)]
    pub mode: Option<ModeArg>,
    /// Run every 2^(n*k) workspace code instead of the (n-1)! initializations.
    #[arg(long)]
    pub full_codes: bool,
    #[arg(long, default_value_t = 1)]
    pub workers: usize,
    /// Print at most this many flagged entries (counts are unaffected).
    #[arg(long)]
    pub limit: Option<usize>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct CompileArgs {
    pub graph: PathBuf,
    #[arg(long, value_enum, default_value = "cmos-reduced")]
    pub mode: ModeArg,
    /// Keep multi-controlled NOTs as single MCN gates.
    #[arg(long)]
    pub no_lower: bool,
}

#[derive(Debug, Args)]
pub struct ResourcesArgs {
    #[arg(required_unless_present = "n_range", conflicts_with = "n_range")]
    pub graph: Option<PathBuf>,
    /// Inclusive vertex-count range `a..b` for the TOTBITS CSV table.
    #[arg(long)]
    pub n_range: Option<String>,
    #[arg(long, value_enum, default_value_t)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(required_unless_present = "random", conflicts_with = "random")]
    pub graph: Option<PathBuf>,
    /// Replay this netlist instead of compiling the graph.
    #[arg(long, requires = "graph")]
    pub netlist: Option<PathBuf>,
    /// Number of random graphs to check.
    #[arg(long, requires = "n")]
    pub random: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, default_value_t = 0.5)]
    pub edge_prob: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1)]
    pub workers: usize,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ =
                if e.use_stderr() { err.write_all(rendered.as_bytes()) } else { out.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    let result = match &cli.command {
        Command::Find(a) => cmd_find(a),
        Command::Compile(a) => cmd_compile(a),
        Command::Resources(a) => cmd_resources(a),
        Command::Verify(a) => cmd_verify(a),
    };
    match result {
        Ok((text, code)) => {
            let _ = out.write_all(text.as_bytes());
            code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn read_graph(path: &Path) -> CliResult<Graph> {
    let text =
        std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    parse_graph(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn compile_graph(g: &Graph, mode: Mode, lower: bool) -> CliResult<Circuit> {
    let enc = Encoding::new(g.vertex_count())?;
    Ok(compile_with(g, mode, &enc, CompileOptions { lower })?)
}

/// `1-2-3-4-1` style rendering of a closed walk.
pub fn format_cycle(walk: &[usize]) -> String {
    let mut labels: Vec<String> = walk.iter().map(|v| (v + 1).to_string()).collect();
    if let Some(first) = labels.first().cloned() {
        labels.push(first);
    }
    labels.join("-")
}

fn cmd_find(a: &FindArgs) -> CliResult<(String, i32)> {
    let g = read_graph(&a.graph)?;
    let mode = match (a.mode.map(Mode::from), a.full_codes) {
        (Some(m), true) if m != Mode::ReversibleFull => {
            return Err(CliError::Input(format!("--full-codes needs --mode reversible-full, got {m}")))
        }
        (_, true) => Mode::ReversibleFull,
        (Some(m), false) => m,
        (None, false) => Mode::CmosReduced,
    };
    let circuit = compile_graph(&g, mode, true)?;
    let readout = if a.full_codes {
        run_full_code_space(&circuit, a.workers)?
    } else {
        run_all_initializations(&circuit, a.workers)?
    };

    let mut distinct = BTreeSet::new();
    for entry in readout.entries() {
        if let Ok(key) = canonicalize(&entry.sequence) {
            distinct.insert(key);
        }
    }

    let limit = a.limit.unwrap_or(usize::MAX);
    let mut out = String::new();
    match a.format {
        Format::Csv => {
            let key = match readout.kind() {
                ReadoutKind::Rank => "rank",
                ReadoutKind::Code => "code",
            };
            let _ = writeln!(out, "{key},cycle");
            for entry in readout.entries().take(limit) {
                let _ = writeln!(out, "{},{}", entry.key, format_cycle(&entry.sequence));
            }
        }
        Format::Text => {
            if !readout.any_flag() {
                out.push_str("no Hamiltonian circuit\n");
            }
            for entry in readout.entries().take(limit) {
                let _ = writeln!(out, "{}", format_cycle(&entry.sequence));
            }
            if readout.flagged() > limit {
                let _ = writeln!(out, "... {} more not shown", readout.flagged() - limit);
            }
            let _ = writeln!(out, "mode: {mode}");
            let _ = writeln!(out, "registers tested: {}", readout.total_tested());
            let _ = writeln!(out, "flagged: {}", readout.flagged());
            let _ = writeln!(out, "distinct cycles: {}", distinct.len());
        }
    }
    Ok((out, EXIT_OK))
}

fn cmd_compile(a: &CompileArgs) -> CliResult<(String, i32)> {
    let g = read_graph(&a.graph)?;
    let circuit = compile_graph(&g, a.mode.into(), !a.no_lower)?;
    Ok((emit_netlist(&circuit), EXIT_OK))
}

fn parse_n_range(s: &str) -> CliResult<std::ops::RangeInclusive<usize>> {
    let bad = || CliError::Input(format!("--n-range expects `a..b` with 2 <= a <= b, got `{s}`"));
    let (lo, hi) = s.split_once("..").ok_or_else(bad)?;
    let lo: usize = lo.trim().parse().map_err(|_| bad())?;
    let hi: usize = hi.trim().parse().map_err(|_| bad())?;
    if lo < 2 || lo > hi {
        return Err(bad());
    }
    Ok(lo..=hi)
}

fn cmd_resources(a: &ResourcesArgs) -> CliResult<(String, i32)> {
    if let Some(range) = &a.n_range {
        let range = parse_n_range(range)?;
        return Ok((totbits_table::<u64>(range)?, EXIT_OK));
    }
    let path = a.graph.as_ref().expect("clap requires a graph without --n-range");
    let g = read_graph(path)?;
    let circuits = Mode::ALL.iter().map(|&m| compile_graph(&g, m, true)).collect::<CliResult<Vec<_>>>()?;
    let r = report::<BigUint, _>(g.vertex_count(), g.edge_count(), &circuits)?;
    let text = match a.format {
        Format::Text => r.to_string(),
        Format::Csv => {
            let mut out = String::from("mode,lines,bits_formula,gates,ops_formula,line_deltas\n");
            for m in &r.measurements {
                let deltas: Vec<String> = m.line_deltas.iter().map(|d| format!("{}:{:+}", d.reason, d.lines)).collect();
                let _ = writeln!(
                    out,
                    "{},{},{},{},{},{}",
                    m.mode,
                    m.lines,
                    m.bits_formula,
                    m.gates,
                    m.ops_formula,
                    deltas.join(";")
                );
            }
            out
        }
    };
    Ok((text, EXIT_OK))
}

/// Seeded Erdős–Rényi graph; identical for identical arguments.
pub fn random_graph(rng: &mut impl Rng, n: usize, edge_prob: f64) -> Result<Graph, CoreError> {
    let edges: Vec<(usize, usize)> =
        (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_bool(edge_prob)).collect();
    Graph::new(n, edges)
}

/// `count` graphs on `n` vertices drawn from one seeded stream.
pub fn random_graphs(count: usize, n: usize, edge_prob: f64, seed: u64) -> Result<Vec<Graph>, CoreError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_graph(&mut rng, n, edge_prob)).collect()
}

/// Result of comparing one circuit's flags with the oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mismatch {
    pub key: u64,
    pub kind: ReadoutKind,
    pub circuit_flag: bool,
}

/// First key (rank or code) where the readout disagrees with `expected`.
pub fn first_mismatch(readout: &FlagReadout, expected: &BTreeSet<Vec<usize>>, enc: &Encoding) -> Option<Mismatch> {
    let flagged: BTreeSet<u64> = readout.keys().iter().copied().collect();
    let expected_keys: BTreeSet<u64> = expected
        .iter()
        .map(|walk| match readout.kind() {
            ReadoutKind::Rank => Initialization::new(walk.clone())
                .map(|init| init.rank())
                .expect("oracle walks are fixed-start permutations"),
            ReadoutKind::Code => {
                walk.iter().enumerate().fold(0u64, |code, (p, &v)| code | (v as u64) << (p * enc.bits_per_vertex()))
            }
        })
        .collect();
    flagged.symmetric_difference(&expected_keys).next().map(|&key| Mismatch {
        key,
        kind: readout.kind(),
        circuit_flag: flagged.contains(&key),
    })
}

fn check_circuit(label: &str, circuit: &Circuit, g: &Graph, workers: usize, out: &mut String) -> CliResult<bool> {
    let enc = *circuit.encoding();
    let cycles = find_cycles(g);
    let readout = run_all_initializations(circuit, workers)?;
    let mut ok =
        report_check(label, circuit.mode(), "initializations", &readout, &expected_fixed_start(&cycles), &enc, out);
    if circuit.mode() == Mode::ReversibleFull && g.vertex_count() <= 4 {
        let readout = run_full_code_space(circuit, workers)?;
        ok &= report_check(label, circuit.mode(), "full codes", &readout, &expected_full_codes(&cycles), &enc, out);
    }
    Ok(ok)
}

fn report_check(
    label: &str,
    mode: Mode,
    what: &str,
    readout: &FlagReadout,
    expected: &BTreeSet<Vec<usize>>,
    enc: &Encoding,
    out: &mut String,
) -> bool {
    match first_mismatch(readout, expected, enc) {
        None => {
            let _ = writeln!(
                out,
                "{label} {mode} {what}: ok ({} flagged of {})",
                readout.flagged(),
                readout.total_tested()
            );
            true
        }
        Some(m) => {
            let key = match m.kind {
                ReadoutKind::Rank => "rank",
                ReadoutKind::Code => "code",
            };
            let _ = writeln!(
                out,
                "{label} {mode} {what}: MISMATCH at first {key} {} (circuit flag {}, oracle {})",
                m.key,
                u8::from(m.circuit_flag),
                u8::from(!m.circuit_flag)
            );
            false
        }
    }
}

fn cmd_verify(a: &VerifyArgs) -> CliResult<(String, i32)> {
    let graphs = match (&a.graph, a.random) {
        (Some(path), _) => vec![read_graph(path)?],
        (None, Some(count)) => {
            let n = a.n.ok_or_else(|| CliError::Input("--random needs --n".into()))?;
            if !(0.0..=1.0).contains(&a.edge_prob) {
                return Err(CliError::Input(format!("--edge-prob must lie in [0, 1], got {}", a.edge_prob)));
            }
            random_graphs(count, n, a.edge_prob, a.seed)?
        }
        (None, None) => return Err(CliError::Input("verify needs a graph file or --random".into())),
    };

    let mut out = String::new();
    let mut all_ok = true;
    for (i, g) in graphs.iter().enumerate() {
        let label = format!("graph {} (n={} m={})", i + 1, g.vertex_count(), g.edge_count());
        if let Some(netlist) = &a.netlist {
            let text = std::fs::read_to_string(netlist)
                .map_err(|e| CliError::Input(format!("cannot read {}: {e}", netlist.display())))?;
            let circuit = parse_netlist(&text).map_err(|e| CliError::Input(format!("{}: {e}", netlist.display())))?;
            if circuit.encoding().vertex_count() != g.vertex_count() {
                return Err(CliError::Input(format!(
                    "netlist is for {} vertices, graph has {}",
                    circuit.encoding().vertex_count(),
                    g.vertex_count()
                )));
            }
            all_ok &= check_circuit(&label, &circuit, g, a.workers, &mut out)?;
        } else {
            for mode in Mode::ALL {
                let circuit = compile_graph(g, mode, true)?;
                all_ok &= check_circuit(&label, &circuit, g, a.workers, &mut out)?;
            }
        }
    }
    if all_ok {
        let _ = writeln!(out, "verified {} graph(s): all flags match the oracle", graphs.len());
        Ok((out, EXIT_OK))
    } else {
        let _ = writeln!(out, "verification FAILED");
        Ok((out, EXIT_MISMATCH))
    }
}
