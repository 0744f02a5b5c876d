//! `imaglab` — command-line surface for the imaginarity toolkit.
//!
//! Subcommands: `measure` (one-off measure queries), `figure` (CSV sweep
//! data), `verify` (closed-form and reference-matrix verification reports),
//! `power` (de-imaginary / imaginary power of two-qubit channels), and
//! `decay` (one-off decay queries on the canonical input families).
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error, 3 invalid
//! input data. All output goes to stdout unless `--out` is given.

mod figures;
mod literal;

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use imaglab_core::channels::reference::verify_channel_matrices;
use imaglab_core::{
    canonical_state, decay_numeric, deimaginary_power_numeric, density_from_pure,
    imaginary_power_estimate, measure, tol, verify_formula, verify_power_formula, CanonicalPattern,
    ChannelId, DecayFormulaId, MeasureKind, PowerFormulaId,
};
use literal::StateSpecError;

#[derive(Parser)]
#[command(
    name = "imaglab",
    version,
    about = "Imaginarity measures, channels, decay and power — queries, figure data, verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    L1,
    Robustness,
    RelEntropy,
}

impl From<KindArg> for MeasureKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::L1 => MeasureKind::L1,
            KindArg::Robustness => MeasureKind::Robustness,
            KindArg::RelEntropy => MeasureKind::RelEntropy,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ScopeArg {
    Decay,
    Power,
    Channels,
    All,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    DeImag,
    Imag,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PatternArg {
    #[value(name = "00_11")]
    Pattern0011,
    #[value(name = "01_10")]
    Pattern0110,
}

impl From<PatternArg> for CanonicalPattern {
    fn from(p: PatternArg) -> Self {
        match p {
            PatternArg::Pattern0011 => CanonicalPattern::TwoQubit00_11,
            PatternArg::Pattern0110 => CanonicalPattern::TwoQubit01_10,
        }
    }
}

/// Channel-parameter flags shared by the `power` and `decay` subcommands;
/// each channel tag consumes exactly the flags its parameters are named
/// after (`imaglab decay dephasing --p 0.5`, `imaglab power pd2 --g1 …`).
#[derive(clap::Args, Clone, Copy, Debug, Default)]
struct ParamFlags {
    #[arg(long)]
    p: Option<f64>,
    #[arg(long)]
    gamma: Option<f64>,
    #[arg(long)]
    p1: Option<f64>,
    #[arg(long)]
    p2: Option<f64>,
    #[arg(long)]
    g1: Option<f64>,
    #[arg(long)]
    g2: Option<f64>,
}

#[derive(Subcommand)]
enum Command {
    /// Print one imaginarity measure of a state
    Measure {
        /// State spec: plus | plus2 | canonical `A=<v>` |
        /// canonical2 `A=<v>` `pattern=<00_11|01_10>` | row-major matrix
        /// literal (rows `;`, entries `,`, complex like 0.3+0.2i)
        #[arg(required = true, num_args = 1..)]
        state: Vec<String>,
        /// Which measure to evaluate
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Write output here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit the CSV data behind one of the ten figures
    Figure {
        /// Figure id, fig1 through fig10
        id: String,
        /// Lattice points per swept axis
        #[arg(long, default_value_t = 101)]
        grid: usize,
        /// Fixed canonical parameter A (fig3 and fig4 only; default 0)
        #[arg(long = "A")]
        a: Option<f64>,
        /// Fixed mixing parameter p1 (fig2 only; default 0.5)
        #[arg(long)]
        p1: Option<f64>,
        /// Write output here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check closed forms and reference matrices against the numeric
    /// pipeline; exits 1 if any in-domain deviation exceeds tolerance
    Verify {
        /// What to verify
        #[arg(value_enum)]
        scope: ScopeArg,
        /// Lattice points per swept axis for the formula sweeps
        #[arg(long, default_value_t = 21)]
        grid: usize,
        /// Random parameter draws per reference-matrix check
        #[arg(long, default_value_t = 25)]
        points: usize,
        /// Seed for the reference-matrix random states
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write output here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// De-imaginary or imaginary power of a two-qubit channel
    Power {
        /// Two-qubit channel tag: pd2 | pf2 | bf2 | ad2 | pad2 | bpf2 | dep2
        tag: String,
        #[command(flatten)]
        params: ParamFlags,
        /// Which measure to evaluate
        #[arg(long, value_enum)]
        kind: KindArg,
        /// de-imag maximizes destruction over the maximal-imaginarity
        /// states; imag samples real separable inputs for creation
        #[arg(long, value_enum, default_value = "de-imag")]
        mode: ModeArg,
        /// Sample count for --mode imag
        #[arg(long, default_value_t = 2000)]
        samples: usize,
        /// Seed for --mode imag
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write output here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decay of imaginarity under one channel on its canonical input
    Decay {
        /// Channel tag (single- or two-qubit), e.g. dephasing, gad, bf2
        tag: String,
        #[command(flatten)]
        params: ParamFlags,
        /// Canonical parameter of the input state
        #[arg(long = "A", default_value_t = 0.0)]
        a: f64,
        /// Which measure to evaluate
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Basis pair for two-qubit canonical inputs
        /// (default 00_11; 01_10 for ad2)
        #[arg(long, value_enum)]
        pattern: Option<PatternArg>,
        /// Write output here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// A command failure: message for stderr plus the process exit code.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        message: message.into(),
    }
}

fn data(e: imaglab_core::Error) -> Failure {
    Failure {
        code: 3,
        message: format!("invalid input: {e}"),
    }
}

/// Scalar print format: 13 significant digits, scientific notation,
/// negative zero normalized.
fn sci(v: f64) -> String {
    let v = if v == 0.0 { 0.0 } else { v };
    format!("{v:.12e}")
}

/// Builds a channel id from its CLI tag and the parameter flags, requiring
/// exactly the flags the channel's parameters are named after.
fn bind_channel(tag: &str, f: ParamFlags) -> Result<ChannelId, Failure> {
    fn need(v: Option<f64>, flag: &str, tag: &str) -> Result<f64, Failure> {
        v.ok_or_else(|| usage(format!("channel `{tag}` needs --{flag}")))
    }

    let (id, used): (ChannelId, &[&str]) = match tag {
        "dephasing" => (
            ChannelId::Dephasing {
                p: need(f.p, "p", tag)?,
            },
            &["p"],
        ),
        "gad" => (
            ChannelId::Gad {
                p1: need(f.p1, "p1", tag)?,
                p2: need(f.p2, "p2", tag)?,
            },
            &["p1", "p2"],
        ),
        "pad" => (
            ChannelId::Pad1 {
                p1: need(f.p1, "p1", tag)?,
                p2: need(f.p2, "p2", tag)?,
            },
            &["p1", "p2"],
        ),
        "bitflip" => (
            ChannelId::BitFlip {
                p: need(f.p, "p", tag)?,
            },
            &["p"],
        ),
        "phaseflip" => (
            ChannelId::PhaseFlip {
                p: need(f.p, "p", tag)?,
            },
            &["p"],
        ),
        "bitphaseflip" => (
            ChannelId::BitPhaseFlip {
                p: need(f.p, "p", tag)?,
            },
            &["p"],
        ),
        "phasedamping" => (
            ChannelId::PhaseDamping {
                gamma: need(f.gamma, "gamma", tag)?,
            },
            &["gamma"],
        ),
        "amplitudedamping" => (
            ChannelId::AmplitudeDamping {
                gamma: need(f.gamma, "gamma", tag)?,
            },
            &["gamma"],
        ),
        "depolarizing" => (
            ChannelId::Depolarizing {
                p: need(f.p, "p", tag)?,
            },
            &["p"],
        ),
        "pd2" => (
            ChannelId::Pd2 {
                g1: need(f.g1, "g1", tag)?,
                g2: need(f.g2, "g2", tag)?,
            },
            &["g1", "g2"],
        ),
        "pf2" => (
            ChannelId::Pf2 {
                p1: need(f.p1, "p1", tag)?,
                p2: need(f.p2, "p2", tag)?,
            },
            &["p1", "p2"],
        ),
        "bf2" => (
            ChannelId::Bf2 {
                p1: need(f.p1, "p1", tag)?,
                p2: need(f.p2, "p2", tag)?,
            },
            &["p1", "p2"],
        ),
        "ad2" => (
            ChannelId::Ad2 {
                g1: need(f.g1, "g1", tag)?,
                g2: need(f.g2, "g2", tag)?,
            },
            &["g1", "g2"],
        ),
        "pad2" => (
            ChannelId::Pad2 {
                g1: need(f.g1, "g1", tag)?,
                g2: need(f.g2, "g2", tag)?,
            },
            &["g1", "g2"],
        ),
        "bpf2" => (
            ChannelId::Bpf2 {
                p1: need(f.p1, "p1", tag)?,
                p2: need(f.p2, "p2", tag)?,
            },
            &["p1", "p2"],
        ),
        "dep2" => (
            ChannelId::Dep2 {
                p1: need(f.p1, "p1", tag)?,
                p2: need(f.p2, "p2", tag)?,
            },
            &["p1", "p2"],
        ),
        other => return Err(usage(format!("unknown channel tag `{other}`"))),
    };

    let provided = [
        ("p", f.p),
        ("gamma", f.gamma),
        ("p1", f.p1),
        ("p2", f.p2),
        ("g1", f.g1),
        ("g2", f.g2),
    ];
    for (name, value) in provided {
        if value.is_some() && !used.contains(&name) {
            return Err(usage(format!("channel `{tag}` does not take --{name}")));
        }
    }
    Ok(id)
}

fn cmd_measure(state: &[String], kind: KindArg) -> Result<String, Failure> {
    let spec = state.join(" ");
    let rho = literal::parse_state_spec(&spec).map_err(|e| match e {
        StateSpecError::Parse(m) => usage(m),
        StateSpecError::Data(m) => Failure {
            code: 3,
            message: m,
        },
    })?;
    let value = measure(kind.into(), &rho).map_err(data)?;
    Ok(format!("{}\n", sci(value)))
}

fn cmd_figure(id: &str, grid: usize, a: Option<f64>, p1: Option<f64>) -> Result<String, Failure> {
    if !figures::is_known(id) {
        return Err(usage(format!(
            "unknown figure `{id}` (expected fig1 through fig10)",
        )));
    }
    if grid < 2 {
        return Err(usage("--grid must be at least 2"));
    }
    if a.is_some() && !figures::takes_fixed_a(id) {
        return Err(usage("--A applies only to fig3 and fig4"));
    }
    if p1.is_some() && !figures::takes_gad_p1(id) {
        return Err(usage("--p1 applies only to fig2"));
    }
    let csv = figures::emit(id, grid, a.unwrap_or(0.0), p1.unwrap_or(0.5))
        .map_err(data)?
        .expect("figure id was checked above");
    Ok(csv)
}

fn cmd_verify(
    scope: ScopeArg,
    grid: usize,
    points: usize,
    seed: u64,
) -> Result<(String, i32), Failure> {
    if grid < 2 {
        return Err(usage("--grid must be at least 2"));
    }
    if points == 0 {
        return Err(usage("--points must be at least 1"));
    }

    let mut text = String::new();
    let mut ok = true;

    if matches!(scope, ScopeArg::Channels | ScopeArg::All) {
        for check in verify_channel_matrices(points, seed).map_err(data)? {
            let pass = check.max_dev <= tol::STRUCTURAL;
            ok &= pass;
            writeln!(
                text,
                "{:<14} points={:<5} max-dev={:.3e} tol={:.1e} {}",
                check.name,
                check.points,
                check.max_dev,
                tol::STRUCTURAL,
                if pass { "PASS" } else { "FAIL" },
            )
            .expect("writing to a String cannot fail");
        }
    }
    if matches!(scope, ScopeArg::Decay | ScopeArg::All) {
        for f in DecayFormulaId::ALL {
            let report = verify_formula(f, grid).map_err(data)?;
            ok &= report.passed();
            writeln!(text, "{report}").expect("writing to a String cannot fail");
        }
    }
    if matches!(scope, ScopeArg::Power | ScopeArg::All) {
        for f in PowerFormulaId::ALL {
            let report = verify_power_formula(f, grid).map_err(data)?;
            ok &= report.passed();
            writeln!(text, "{report}").expect("writing to a String cannot fail");
        }
    }

    Ok((text, if ok { 0 } else { 1 }))
}

fn cmd_power(
    tag: &str,
    params: ParamFlags,
    kind: KindArg,
    mode: ModeArg,
    samples: usize,
    seed: u64,
) -> Result<String, Failure> {
    let id = bind_channel(tag, params)?;
    if id.dim() != 4 {
        return Err(usage(format!(
            "power is defined for two-qubit channels; `{tag}` acts on one qubit",
        )));
    }
    let estimate = match mode {
        ModeArg::DeImag => deimaginary_power_numeric(&id, kind.into()).map_err(data)?,
        ModeArg::Imag => {
            if samples == 0 {
                return Err(usage("--samples must be at least 1"));
            }
            imaginary_power_estimate(&id, kind.into(), seed, samples).map_err(data)?
        }
    };
    Ok(format!(
        "value {}\nwitness {}\nsamples {}\nseed {}\n",
        sci(estimate.value),
        estimate.argmax_witness,
        estimate.samples_used,
        estimate.seed,
    ))
}

fn cmd_decay(
    tag: &str,
    params: ParamFlags,
    a: f64,
    kind: KindArg,
    pattern: Option<PatternArg>,
) -> Result<String, Failure> {
    let id = bind_channel(tag, params)?;
    let pattern = match (id.dim(), pattern) {
        (2, Some(_)) => {
            return Err(usage("--pattern applies only to two-qubit channels"));
        }
        (2, None) => CanonicalPattern::Qubit01,
        (_, Some(p)) => p.into(),
        (_, None) => {
            if matches!(id, ChannelId::Ad2 { .. }) {
                CanonicalPattern::TwoQubit01_10
            } else {
                CanonicalPattern::TwoQubit00_11
            }
        }
    };
    let psi = canonical_state(a, pattern).map_err(data)?;
    let result = decay_numeric(&id, kind.into(), &density_from_pure(&psi)).map_err(data)?;
    Ok(format!(
        "initial {}\nafter {}\ndelta {}\n",
        sci(result.initial),
        sci(result.after),
        sci(result.delta),
    ))
}

fn run(cli: Cli) -> Result<(String, i32, Option<PathBuf>), Failure> {
    match cli.command {
        Command::Measure { state, kind, out } => cmd_measure(&state, kind).map(|t| (t, 0, out)),
        Command::Figure {
            id,
            grid,
            a,
            p1,
            out,
        } => cmd_figure(&id, grid, a, p1).map(|t| (t, 0, out)),
        Command::Verify {
            scope,
            grid,
            points,
            seed,
            out,
        } => cmd_verify(scope, grid, points, seed).map(|(t, code)| (t, code, out)),
        Command::Power {
            tag,
            params,
            kind,
            mode,
            samples,
            seed,
            out,
        } => cmd_power(&tag, params, kind, mode, samples, seed).map(|t| (t, 0, out)),
        Command::Decay {
            tag,
            params,
            a,
            kind,
            pattern,
            out,
        } => cmd_decay(&tag, params, a, kind, pattern).map(|t| (t, 0, out)),
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok((text, code, out)) => {
            if let Some(path) = out {
                if let Err(e) = std::fs::write(&path, &text) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    std::process::exit(2);
                }
            } else {
                print!("{text}");
            }
            std::process::exit(code);
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            std::process::exit(failure.code);
        }
    }
}
