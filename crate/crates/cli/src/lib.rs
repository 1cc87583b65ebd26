//! Command dispatch for the `enumgeom` binary.
//!
//! [`run`] takes the full argument vector and returns the exit code with
//! the text destined for stdout and stderr, so the whole surface can be
//! exercised without spawning processes.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use enumgeom::gt::{self, Caps, RelTable, SMatrix};
use enumgeom::mapping_torus::{self, CatalogKnot, GromovSeriesResult, HomologyAction};
use enumgeom::moduli::{self, DescendantIndex, TargetDescriptor};
use enumgeom::plane_curves::{self, SeveriKey, Tangency};
use enumgeom::{Error, ExactScalar, IntMatrix, TruncSeries};

#[derive(Debug, Parser)]
#[command(name = "enumgeom", version, about = "Exact enumerative invariants")]
struct Cli {
    /// Output style.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Records,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Rational plane curves of degree D through 3D-1 points.
    Kontsevich {
        #[arg(long)]
        degree: u32,
    },
    /// Irreducible plane curves of degree D with DELTA nodes.
    Severi {
        #[arg(long)]
        degree: u32,
        #[arg(long)]
        nodes: u32,
    },
    /// Irreducible curves with tangency conditions along a line.
    SeveriGeneral {
        #[arg(long)]
        degree: u32,
        #[arg(long, allow_hyphen_values = true)]
        genus: i64,
        /// Fixed contact points: a_k points of order k.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        alpha: IntList,
        /// Moving contact points: b_k points of order k.
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        beta: IntList,
    },
    /// prod (1 - q^m)^-12 up to q^N.
    BryanLeung {
        #[arg(long)]
        order: usize,
    },
    /// Integral of psi_1^a1 ... psi_n^an over the moduli of stable curves.
    Descendant {
        #[arg(long, value_delimiter = ',', required = true)]
        powers: Vec<u32>,
        #[arg(long, default_value_t = 0)]
        genus: u32,
    },
    /// Integral of kappa_A over the genus-0 moduli space of dimension A.
    Kappa {
        #[arg(long)]
        a: u32,
    },
    /// Real expected dimension of the moduli of stable maps.
    Dim {
        /// Real dimension of the target.
        #[arg(long)]
        dimx: u32,
        /// c_1(X) evaluated on the class.
        #[arg(long, allow_hyphen_values = true)]
        c1a: i64,
        #[arg(long)]
        genus: u32,
        #[arg(long)]
        points: u32,
    },
    /// Lefschetz zeta function of a homology action.
    Zeta {
        #[arg(long)]
        action: PathBuf,
        #[arg(long)]
        order: usize,
    },
    /// Alexander polynomial det(I - tM) of a fiber monodromy.
    Alexander {
        #[command(flatten)]
        monodromy: Monodromy,
    },
    /// Section-class series A_K(t)/(1-t)^2 of the knot mapping torus.
    XkSeries {
        #[command(flatten)]
        monodromy: Monodromy,
        #[arg(long)]
        order: usize,
    },
    /// Seiberg-Witten series A_K(t)(1-t)^(n-2) of the knot surgery on E(n).
    EnkSeries {
        #[command(flatten)]
        monodromy: Monodromy,
        #[arg(long)]
        n: i64,
        /// Truncate the output at t^M.
        #[arg(long)]
        order: Option<usize>,
    },
    /// Disconnected counts from a table of connected counts.
    GtExp {
        #[arg(long)]
        table: PathBuf,
        #[arg(long)]
        caps: Caps,
    },
    /// Connected counts from a table of disconnected counts.
    GtLog {
        #[arg(long)]
        table: PathBuf,
        #[arg(long)]
        caps: Caps,
    },
    /// Glue two relative tables along their contact points.
    GtConvolve {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
        /// Defaults to the identity.
        #[arg(long)]
        smatrix: Option<PathBuf>,
        #[arg(long)]
        caps: Caps,
    },
}

/// Comma-separated integers; the empty string is the empty list.
#[derive(Clone, Debug)]
struct IntList(Vec<i64>);

impl std::str::FromStr for IntList {
    type Err = std::num::ParseIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.trim().is_empty() {
            return Ok(Self(Vec::new()));
        }
        s.split(',').map(|x| x.trim().parse()).collect::<Result<_, _>>().map(Self)
    }
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct Monodromy {
    /// Matrix file, one row per line.
    #[arg(long)]
    matrix: Option<PathBuf>,
    /// Built-in knot: unknot, trefoil or figure-eight.
    #[arg(long)]
    knot: Option<String>,
}

impl Monodromy {
    fn load(&self) -> Result<IntMatrix, Failure> {
        match (&self.matrix, &self.knot) {
            (Some(path), _) => Ok(IntMatrix::parse_text(&read(path)?)?),
            (None, Some(name)) => CatalogKnot::from_name(name)
                .map(CatalogKnot::monodromy)
                .ok_or_else(|| {
                    let known: Vec<_> = CatalogKnot::ALL.iter().map(|k| k.name()).collect();
                    Failure::Usage(format!(
                        "unknown knot {name:?}; known: {}",
                        known.join(", ")
                    ))
                }),
            (None, None) => unreachable!("clap requires one of --matrix, --knot"),
        }
    }
}

/// Exit status and captured output of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Domain(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) => Failure::Usage(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path)
        .map_err(|e| Failure::Domain(format!("cannot read {}: {e}", path.display())))
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 2,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match dispatch(&cli) {
        Ok(mut stdout) => {
            if !stdout.ends_with('\n') {
                stdout.push('\n');
            }
            Outcome {
                code: 0,
                stdout,
                stderr: String::new(),
            }
        }
        Err(Failure::Usage(msg)) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
        Err(Failure::Domain(msg)) => Outcome {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        },
    }
}

fn scalar(format: Format, value: &ExactScalar) -> String {
    match format {
        Format::Text => value.to_string(),
        Format::Records => json!({ "value": value }).to_string(),
    }
}

fn series(format: Format, s: &TruncSeries, var: char) -> String {
    match format {
        Format::Text => s.render(var),
        Format::Records => json!({ "order": s.order(), "coeffs": s }).to_string(),
    }
}

fn gromov(format: Format, r: &GromovSeriesResult) -> String {
    let rational = r.render_rational('t');
    match format {
        Format::Text => format!("rational: {rational}\nexpansion: {}", r.expansion.render('t')),
        Format::Records => {
            let mut v = serde_json::to_value(r).expect("result serializes");
            v["rational"] = json!(rational);
            v.to_string()
        }
    }
}

fn load_table(path: &Path) -> Result<RelTable, Failure> {
    Ok(RelTable::parse_records(&read(path)?)?)
}

fn dispatch(cli: &Cli) -> Result<String, Failure> {
    let f = cli.format;
    Ok(match &cli.command {
        Command::Kontsevich { degree } => scalar(f, &plane_curves::kontsevich_nd(*degree)?),
        Command::Severi { degree, nodes } => {
            scalar(f, &plane_curves::severi_by_nodes(*degree, *nodes)?)
        }
        Command::SeveriGeneral {
            degree,
            genus,
            alpha,
            beta,
        } => {
            let key = SeveriKey::new(*degree, *genus, Tangency::from_signed(&alpha.0, &beta.0)?)?;
            scalar(f, &plane_curves::severi_general(&key))
        }
        Command::BryanLeung { order } => series(f, &plane_curves::bryan_leung_series(*order), 'q'),
        Command::Descendant { powers, genus } => {
            scalar(f, &DescendantIndex::new(*genus, powers.clone())?.integral()?)
        }
        Command::Kappa { a } => scalar(f, &moduli::kappa_pure_integral_g0(*a)?),
        Command::Dim {
            dimx,
            c1a,
            genus,
            points,
        } => {
            let target = TargetDescriptor::new(*dimx, *c1a)?;
            scalar(f, &moduli::expected_dimension(&target, *genus, *points).into())
        }
        Command::Zeta { action, order } => {
            let action = HomologyAction::parse_text(&read(action)?)?;
            gromov(f, &mapping_torus::lefschetz_zeta(&action, *order))
        }
        Command::Alexander { monodromy } => {
            let p = mapping_torus::alexander_from_monodromy(&monodromy.load()?)?;
            match f {
                Format::Text => p.render('t'),
                Format::Records => json!({ "coeffs": p }).to_string(),
            }
        }
        Command::XkSeries { monodromy, order } => {
            gromov(f, &mapping_torus::knot_surgery_series_xk(&monodromy.load()?, *order)?)
        }
        Command::EnkSeries {
            monodromy,
            n,
            order,
        } => {
            let m = monodromy.load()?;
            // the series is a polynomial of degree size + n - 2
            let full = m.size() + usize::try_from(*n).unwrap_or(0);
            let r = mapping_torus::en_knot_series(&m, *n, order.unwrap_or(full))?;
            match f {
                Format::Text => r.expansion.render('t'),
                Format::Records => gromov(f, &r),
            }
        }
        Command::GtExp { table, caps } => gt::gt_from_gw(&load_table(table)?, *caps)?.to_records(),
        Command::GtLog { table, caps } => gt::gt_log(&load_table(table)?, *caps)?.to_records(),
        Command::GtConvolve {
            left,
            right,
            smatrix,
            caps,
        } => {
            let s = match smatrix {
                Some(path) => SMatrix::parse_records(&read(path)?)?,
                None => SMatrix::identity(),
            };
            gt::convolve(&load_table(left)?, &s, &load_table(right)?, *caps)?.to_records()
        }
    })
}
