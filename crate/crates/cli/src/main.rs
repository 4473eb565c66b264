//! `rrg`: counting, identity checks, series, markings and bijections.
//!
//! Exit codes: 0 success, 1 a checked identity failed, 2 bad usage or an
//! input outside an operation's domain.

use std::io::{self, Read, Write};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use rrg::bijections::{chi, chi_inv, phi_inv_traced, phi_traced, psi_inv_traced, psi_traced, PhiOutput, PsiOutput};
use rrg::enumeration::{Class, CountTable};
use rrg::series::{hfunc, multisum, products};
use rrg::verify::{self, Suite};
use rrg::{gordon_mark, ClassParams, MarkedProfile, Overpartition, QSeries, Rational, XqSeries};

#[derive(Parser)]
#[command(
    name = "rrg",
    version,
    about = "Overpartitions, Gordon markings and exact q-series checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count class members by weight (and length).
    Count {
        #[arg(long, value_enum, ignore_case = true)]
        class: ClassArg,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        i: u32,
        #[arg(long)]
        n_max: u32,
        /// Split counts by number of parts.
        #[arg(long)]
        by_length: bool,
        #[arg(long, value_enum, default_value_t = Format::Tsv)]
        format: Format,
    },
    /// Check identities cell by cell; one JSON line per cell, then a summary.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long)]
        k_max: u32,
        #[arg(long)]
        n_max: u32,
    },
    /// Expand one series to a given order.
    Series {
        #[arg(long, value_enum)]
        identity: SeriesArg,
        #[arg(long, default_value_t = 2)]
        k: u32,
        #[arg(long, default_value_t = 1)]
        i: u32,
        #[arg(long)]
        n_max: u32,
        /// Order in `x` for two-variable series (defaults to `n_max`).
        #[arg(long)]
        m_max: Option<u32>,
        /// Row counts `N_1,...,N_{k-1}` for the Q closed form.
        #[arg(long)]
        profile: Option<String>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Show the Gordon marking of an overpartition.
    Mark {
        /// Text form such as "5,3~,1"; JSON on stdin when absent.
        #[arg(long)]
        input: Option<String>,
        #[arg(long, value_enum, default_value_t = MarkFormat::Grid)]
        format: MarkFormat,
    },
    /// Run one of the bijections forward or backward.
    Bijection {
        #[arg(long, value_enum)]
        map: MapArg,
        #[arg(long, value_enum, default_value_t = Direction::Forward)]
        direction: Direction,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        i: u32,
        /// Text form of the overpartition; JSON on stdin when absent.
        #[arg(long)]
        input: Option<String>,
        /// The partition for an inverse run of phi or psi, e.g. "6,2,1".
        #[arg(long)]
        aux: Option<String>,
        /// Include every intermediate overpartition.
        #[arg(long)]
        trace: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ClassArg {
    D,
    C,
    B,
    F,
    G,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum MarkFormat {
    Grid,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeriesArg {
    /// The congruence-class product.
    Product,
    /// The refined multi-sum for the difference class.
    Sum,
    /// Its part with overlined smallest part.
    SumF,
    /// Its part with non-overlined smallest part.
    SumG,
    /// `H(-1/q; xq; q)`.
    W,
    /// The ordinary-partition multi-sum.
    AndrewsSum,
    /// The ordinary-partition product.
    AndrewsProduct,
    /// The bilateral theta sum.
    Jacobi,
    /// The closed form for one row-count profile.
    Q,
}

#[derive(Clone, Copy, ValueEnum)]
enum MapArg {
    Phi,
    Psi,
    Chi,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Direction {
    Forward,
    Inverse,
}

/// Failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<rrg::Error> for Failure {
    fn from(e: rrg::Error) -> Self {
        Failure {
            code: 2,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            code: 2,
            message: e.to_string(),
        }
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure {
            code: 2,
            message: format!("invalid JSON input: {e}"),
        }
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = io::stdout();
    let mut out = out.lock();
    let result = match cli.command {
        Command::Count {
            class,
            k,
            i,
            n_max,
            by_length,
            format,
        } => count(&mut out, class, k, i, n_max, by_length, format),
        Command::Verify { suite, k_max, n_max } => run_verify(&mut out, &suite, k_max, n_max),
        Command::Series {
            identity,
            k,
            i,
            n_max,
            m_max,
            profile,
            format,
        } => series(&mut out, identity, k, i, n_max, m_max.unwrap_or(n_max), profile, format),
        Command::Mark { input, format } => mark(&mut out, input, format),
        Command::Bijection {
            map,
            direction,
            k,
            i,
            input,
            aux,
            trace,
        } => bijection(&mut out, map, direction, k, i, input, aux, trace),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if !f.message.is_empty() {
                eprintln!("error: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}

fn count(
    out: &mut impl Write,
    class: ClassArg,
    k: u32,
    i: u32,
    n_max: u32,
    by_length: bool,
    format: Format,
) -> CmdResult {
    let p = ClassParams::new(k, i)?;
    let class = match class {
        ClassArg::D => Class::D,
        ClassArg::C => Class::C,
        ClassArg::B => Class::B,
        ClassArg::F => Class::F,
        ClassArg::G => Class::G,
    };
    let table = CountTable::enumerate(class, p, n_max);
    match format {
        Format::Tsv => write!(out, "{}", table.to_tsv(by_length))?,
        Format::Json => writeln!(out, "{}", table.to_json(by_length))?,
    }
    Ok(())
}

fn run_verify(out: &mut impl Write, suite: &str, k_max: u32, n_max: u32) -> CmdResult {
    let suite: Suite = suite.parse()?;
    let start = Instant::now();
    let mut io_err = None;
    let report = verify::run(suite, k_max, n_max, |cell| {
        if let Err(e) = writeln!(out, "{}", cell.to_json_line()).and_then(|()| out.flush()) {
            io_err.get_or_insert(e);
        }
    });
    if let Some(e) = io_err {
        return Err(e.into());
    }
    writeln!(out, "{}", report.summary_line(suite, k_max, n_max))?;
    eprintln!("wall time: {:.3}s", start.elapsed().as_secs_f64());
    if report.passed() {
        Ok(())
    } else {
        Err(Failure {
            code: 1,
            message: format!("{} cell(s) failed", report.failures().count()),
        })
    }
}

#[allow(clippy::too_many_arguments)]
fn series(
    out: &mut impl Write,
    identity: SeriesArg,
    k: u32,
    i: u32,
    n_max: u32,
    m_max: u32,
    profile: Option<String>,
    format: Format,
) -> CmdResult {
    let p = ClassParams::new(k, i)?;
    let one = |s: QSeries| Shape::One(s);
    let two = |s: XqSeries| Shape::Two(s);
    let s = match identity {
        SeriesArg::Product => one(products::product_side_c(p, n_max)),
        SeriesArg::Sum => two(multisum::sum_side_main(p, m_max, n_max)),
        SeriesArg::SumF => two(multisum::sum_side_f(p, m_max, n_max)),
        SeriesArg::SumG => two(multisum::sum_side_g(p, m_max, n_max)),
        SeriesArg::W => two(hfunc::w_series(p, m_max, n_max)),
        SeriesArg::AndrewsSum => two(multisum::andrews_sum_side(p, m_max, n_max)),
        SeriesArg::AndrewsProduct => one(products::andrews_product_side(p, n_max)),
        SeriesArg::Jacobi => one(products::jacobi_bilateral(p, n_max)),
        SeriesArg::Q => {
            let text = profile.ok_or_else(|| Failure {
                code: 2,
                message: "--identity q needs --profile".into(),
            })?;
            let counts = text
                .split(',')
                .map(|t| t.trim().parse::<u32>())
                .collect::<Result<Vec<u32>, _>>()
                .map_err(|e| Failure {
                    code: 2,
                    message: format!("bad --profile {text:?}: {e}"),
                })?;
            let prof = MarkedProfile::new(k, counts)?;
            one(multisum::sum_side_q::<Rational>(&prof, p, n_max))
        }
    };
    match (s, format) {
        (Shape::One(s), Format::Json) => writeln!(out, "{}", serde_json::to_string(&s)?)?,
        (Shape::One(s), Format::Tsv) => write!(out, "{}", s.to_tsv())?,
        (Shape::Two(s), Format::Json) => writeln!(out, "{}", serde_json::to_string(&s)?)?,
        (Shape::Two(s), Format::Tsv) => write!(out, "{}", s.to_tsv())?,
    }
    Ok(())
}

enum Shape {
    One(QSeries),
    Two(XqSeries),
}

fn read_stdin() -> Result<String, Failure> {
    let mut s = String::new();
    io::stdin().read_to_string(&mut s)?;
    Ok(s)
}

fn overpartition_arg(input: Option<String>) -> Result<Overpartition, Failure> {
    match input {
        Some(text) => Ok(text.parse()?),
        None => Ok(Overpartition::from_json(&read_stdin()?)?),
    }
}

fn mark(out: &mut impl Write, input: Option<String>, format: MarkFormat) -> CmdResult {
    let lambda = overpartition_arg(input)?;
    let marking = gordon_mark(&lambda);
    match format {
        MarkFormat::Grid => write!(out, "{}", marking.grid())?,
        MarkFormat::Json => writeln!(out, "{}", serde_json::to_string(&marking)?)?,
    }
    Ok(())
}

fn with_trace(mut value: serde_json::Value, trace: Option<Vec<Overpartition>>) -> serde_json::Value {
    if let (Some(trace), Some(obj)) = (trace, value.as_object_mut()) {
        obj.insert(
            "trace".into(),
            serde_json::to_value(trace).expect("overpartitions serialize"),
        );
    }
    value
}

#[allow(clippy::too_many_arguments)]
fn bijection(
    out: &mut impl Write,
    map: MapArg,
    direction: Direction,
    k: u32,
    i: u32,
    input: Option<String>,
    aux: Option<String>,
    trace: bool,
) -> CmdResult {
    let p = ClassParams::new(k, i)?;
    let keep = |t: Vec<Overpartition>| trace.then_some(t);
    let value = match (map, direction) {
        (MapArg::Phi, Direction::Forward) => {
            let (res, t) = phi_traced(&overpartition_arg(input)?, p)?;
            with_trace(serde_json::to_value(res)?, keep(t))
        }
        (MapArg::Psi, Direction::Forward) => {
            let (res, t) = psi_traced(&overpartition_arg(input)?, p)?;
            with_trace(serde_json::to_value(res)?, keep(t))
        }
        (MapArg::Phi, Direction::Inverse) => {
            let given: PhiOutput = match (input, aux) {
                (Some(a), Some(b)) => PhiOutput {
                    alpha: a.parse()?,
                    beta: b.parse()?,
                },
                (Some(a), None) => PhiOutput {
                    alpha: a.parse()?,
                    beta: Default::default(),
                },
                (None, _) => serde_json::from_str(&read_stdin()?)?,
            };
            let (res, t) = phi_inv_traced(&given.alpha, &given.beta, p)?;
            with_trace(res.to_json(), keep(t))
        }
        (MapArg::Psi, Direction::Inverse) => {
            let given: PsiOutput = match (input, aux) {
                (Some(a), Some(b)) => PsiOutput {
                    gamma: a.parse()?,
                    delta: b.parse()?,
                },
                (Some(a), None) => PsiOutput {
                    gamma: a.parse()?,
                    delta: Default::default(),
                },
                (None, _) => serde_json::from_str(&read_stdin()?)?,
            };
            let (res, t) = psi_inv_traced(&given.gamma, &given.delta, p)?;
            with_trace(res.to_json(), keep(t))
        }
        (MapArg::Chi, dir) => {
            let lambda = overpartition_arg(input)?;
            let res = if dir == Direction::Forward {
                chi(&lambda, p)?
            } else {
                chi_inv(&lambda, p)?
            };
            let t = vec![lambda, res.clone()];
            with_trace(res.to_json(), keep(t))
        }
    };
    writeln!(out, "{value}")?;
    Ok(())
}
