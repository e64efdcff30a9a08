use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use kohnert::{
    diagram_of_tableau, enumerate_kd, enumerate_target_space, horizontal_strip_expansion_with,
    key_expand_with, nonneg_pieri, pieri_signed_expansion, rsk_insert, schur_polynomial, Error,
    KeyCache, SignedKeyExpansion,
};
use kohnert_cli::verify::{run_suite, SweepParams};
use kohnert_cli::{json, parse, CliError};
use serde_json::Value;

#[derive(Parser, Debug)]
#[command(name = "kohnert", version, about = "Kohnert diagrams, key polynomials and Pieri rules")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Abort any enumeration that would produce more diagrams than this.
    #[arg(long, default_value_t = kohnert::DEFAULT_CAP, global = true)]
    max_diagrams: usize,
    /// Recorded in verification reports.
    #[arg(long, default_value_t = 0, global = true)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Mode {
    Auto,
    Formula,
    Oracle,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the Kohnert diagrams of a composition, or of its target space with --k/--m.
    Kd {
        a: String,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
    },
    /// Print the key polynomial of a composition.
    Keypoly {
        a: String,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Expand kappa_a * h_m(x_1..x_k) in the key basis.
    Pieri {
        a: String,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, value_enum, default_value_t = Mode::Auto)]
        mode: Mode,
    },
    /// Expand a polynomial (JSON terms) or a Schur polynomial in the key basis.
    Expand {
        poly: Option<String>,
        #[arg(long, conflicts_with = "poly")]
        schur: Option<String>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Row-insert j into a tableau such as "1,1,2/3,3" and show both diagrams.
    Rsk {
        tableau: String,
        j: u32,
        #[arg(long)]
        n: u32,
    },
    /// Run a verification suite and print its report.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 3)]
        n_max: usize,
        #[arg(long, default_value_t = 5)]
        size_max: u32,
        #[arg(long, default_value_t = 3)]
        k_max: usize,
        #[arg(long, default_value_t = 2)]
        m_max: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            emit(&out);
            ExitCode::SUCCESS
        }
        Err((e, report)) => {
            if let Some(r) = report {
                emit(&r);
            }
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

/// Print to stdout, ignoring a closed pipe.
fn emit(s: &str) {
    let _ = writeln!(std::io::stdout(), "{s}");
}

type Outcome = Result<String, (CliError, Option<String>)>;

fn run(cli: &Cli) -> Outcome {
    let json_out = cli.format == Format::Json;
    let plain = |e: CliError| (e, None);
    let render = |text: String, value: Value| if json_out { value.to_string() } else { text };
    match &cli.command {
        Command::Kd { a, n, k, m } => {
            let a = parse::composition(a, *n).map_err(plain)?;
            let (text_rows, value) = match (k, m) {
                (None, None) => {
                    let s = enumerate_kd(&a, cli.max_diagrams).map_err(|e| plain(e.into()))?;
                    let v = json::kohnert_space(&s);
                    (s.diagrams, v)
                }
                _ => {
                    let s = enumerate_target_space(&a, k.unwrap_or(a.len()), m.unwrap_or(1), cli.max_diagrams)
                        .map_err(|e| plain(e.into()))?;
                    let v = json::target_space(&s);
                    (s.diagrams, v)
                }
            };
            let text = text_rows.iter().map(|d| json::diagram(d).to_string()).collect::<Vec<_>>().join("\n");
            Ok(render(format!("{} diagrams\n{text}", text_rows.len()), value))
        }
        Command::Keypoly { a, n } => {
            let a = parse::composition(a, *n).map_err(plain)?;
            let p = KeyCache::with_cap(cli.max_diagrams).key_polynomial(&a).map_err(|e| plain(e.into()))?;
            Ok(render(p.to_text(), json::polynomial(&p)))
        }
        Command::Pieri { a, k, m, n, mode } => {
            let a = parse::composition(a, *n).map_err(plain)?;
            let e = pieri(&a, *k, *m, *mode, cli.max_diagrams).map_err(plain)?;
            Ok(render(e.to_text(), json::expansion(&e)))
        }
        Command::Expand { poly, schur, n } => {
            let p = match (poly, schur) {
                (Some(s), None) => parse::polynomial_json(s, *n).map_err(plain)?,
                (None, Some(shape)) => {
                    let shape = parse::composition(shape, None).map_err(plain)?;
                    let n = n.unwrap_or(shape.len());
                    schur_polynomial(shape.parts(), n as u32).map_err(|e| plain(e.into()))?
                }
                _ => return Err(plain(CliError::BadInput("give a polynomial or --schur".into()))),
            };
            let e = key_expand_with(&p, &mut KeyCache::with_cap(cli.max_diagrams)).map_err(|e| plain(e.into()))?;
            Ok(render(e.to_text(), json::expansion(&e)))
        }
        Command::Rsk { tableau, j, n } => {
            let t = parse::tableau(tableau).map_err(plain)?;
            if *j == 0 || j > n {
                return Err(plain(CliError::BadInput(format!("entry {j} outside 1..={n}"))));
            }
            let (t2, before, after) = rsk(&t, *j, *n).map_err(|e| plain(e.into()))?;
            let value = serde_json::json!({
                "tableau": json::tableau(&t2),
                "diagram_before": json::diagram(&before),
                "diagram_after": json::diagram(&after),
            });
            let rows: Vec<String> = t2
                .rows()
                .iter()
                .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
                .collect();
            Ok(render(format!("{}\n{}", rows.join("/"), json::diagram(&after)), value))
        }
        Command::Verify { suite, n_max, size_max, k_max, m_max } => {
            let p = SweepParams {
                n_max: *n_max,
                size_max: *size_max,
                k_max: *k_max,
                m_max: *m_max,
                seed: cli.seed,
                cap: cli.max_diagrams,
            };
            let report = run_suite(suite, &p).map_err(plain)?;
            let body = serde_json::to_string_pretty(&report.to_json()).expect("serializable report");
            if report.passed() {
                Ok(body)
            } else {
                let msg = format!("{} of {} instances failed", report.failures.len(), report.instances);
                Err((CliError::SuiteFailure(msg), Some(body)))
            }
        }
    }
}

fn rsk(t: &kohnert::Tableau, j: u32, n: u32) -> Result<(kohnert::Tableau, kohnert::Diagram, kohnert::Diagram), Error> {
    let t2 = rsk_insert(t, j)?;
    Ok((t2.clone(), diagram_of_tableau(t, n)?, diagram_of_tableau(&t2, n)?))
}

fn pieri(a: &kohnert::WeakComposition, k: usize, m: usize, mode: Mode, cap: usize) -> Result<SignedKeyExpansion, CliError> {
    if m == 0 {
        return Err(CliError::BadInput("--m must be positive".into()));
    }
    let mut cache = KeyCache::with_cap(cap);
    match mode {
        Mode::Formula if m != 1 => Err(CliError::BadInput("the closed formula covers m = 1 only".into())),
        Mode::Formula => Ok(pieri_signed_expansion(a, k)?),
        Mode::Oracle => Ok(horizontal_strip_expansion_with(a, k, m, &mut cache)?),
        Mode::Auto => {
            let oracle = horizontal_strip_expansion_with(a, k, m, &mut cache)?;
            let formula = if m == 1 {
                Some(pieri_signed_expansion(a, k)?)
            } else {
                match nonneg_pieri(a, k, m) {
                    Ok(e) => Some(e),
                    Err(Error::UnsupportedCase(_)) => None,
                    Err(e) => return Err(e.into()),
                }
            };
            match formula {
                Some(f) if f != oracle => {
                    Err(CliError::Mismatch(format!("formula {} vs oracle {}", f.to_text(), oracle.to_text())))
                }
                _ => Ok(oracle),
            }
        }
    }
}
