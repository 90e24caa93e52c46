use std::fs;
use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use descent_core::compositions::compositions_of;
use descent_core::filtration::{left_mult_matrix, lrm_basis, r_alpha, Scope, SigmaElement};
use descent_core::group_algebra::{b_element, b_product_mackey, b_sum};
use descent_core::linalg::JsonRational;
use descent_core::suites::{run_suite, Suite};
use descent_core::{Composition, Permutation, Rational};

/// Largest n for commands whose cost is about n! (or less).
const LINEAR_GUARD: usize = 7;
/// Largest n for subspace computations without --extended.
const DEFAULT_GUARD: usize = 5;
/// Largest n for subspace computations with --extended.
const EXTENDED_GUARD: usize = 6;

#[derive(Parser)]
#[command(
    name = "descent",
    version,
    about = "Exact computations in the descent algebra of S_n"
)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Global {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Allow n = 6 for subspace computations.
    #[arg(long, global = true)]
    extended: bool,
    /// Worker threads (defaults to the number of CPUs).
    #[arg(long, env = "DESCENT_JOBS", global = true)]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print the permutations summed in B_alpha.
    Bexpand {
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Print the Mackey multiset of B_alpha B_beta and the expanded product.
    Bprod {
        #[arg(long)]
        alpha: String,
        #[arg(long)]
        beta: String,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Print LRM, LRM', cLRM' and the sequence of left-to-right minima of a permutation.
    Lrm {
        /// One-line notation, e.g. 672491853 or 10,2,1,...
        w: String,
    },
    /// Print the dimensions of R_alpha, S_alpha and S'_alpha for every composition of n.
    Dims {
        #[arg(long)]
        n: usize,
    },
    /// Read an element of the descent algebra and print its eigenvalues on the LRM basis.
    Eigen {
        /// JSON list of {alpha, num, den}; "-" reads standard input.
        #[arg(long)]
        file: String,
        #[arg(long)]
        n: usize,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        n: usize,
        /// List every case, not only failures.
        #[arg(long)]
        verbose: bool,
    },
}

enum Failure {
    Usage(String),
    Verification,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn check_guard(n: usize, max: usize, hint: &str) -> Result<(), Failure> {
    if n > max {
        return Err(Failure::Usage(format!(
            "n = {n} exceeds the limit {max}{hint}"
        )));
    }
    Ok(())
}

fn subspace_guard(n: usize, extended: bool) -> Result<(), Failure> {
    if extended {
        check_guard(n, EXTENDED_GUARD, "")
    } else {
        check_guard(n, DEFAULT_GUARD, " (use --extended for n = 6)")
    }
}

fn composition_arg(text: &str, n: Option<usize>) -> Result<Composition, Failure> {
    let alpha: Composition = text.parse()?;
    if let Some(n) = n {
        if alpha.weight() != n {
            return Err(Failure::Usage(format!(
                "{alpha} is not a composition of {n}"
            )));
        }
    }
    check_guard(alpha.weight(), LINEAR_GUARD, "")?;
    Ok(alpha)
}

fn comma_list(xs: &[usize]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

fn rational_json(q: &Rational) -> Value {
    serde_json::to_value(JsonRational::from(q)).expect("serializable")
}

fn bexpand(alpha: &Composition, format: Format) -> String {
    let b = b_element(alpha);
    match format {
        Format::Text => b.support().map(|w| format!("{w}\n")).collect(),
        Format::Json => b.to_json_string() + "\n",
    }
}

fn bprod(alpha: &Composition, beta: &Composition, format: Format) -> Result<String, Failure> {
    if alpha.weight() != beta.weight() {
        return Err(Failure::Usage(format!(
            "{alpha} and {beta} have different weights"
        )));
    }
    let multiset = b_product_mackey(alpha, beta)?;
    let product = b_sum(alpha.weight(), &multiset)?;
    Ok(match format {
        Format::Text => {
            let mut out: String = multiset
                .iter()
                .map(|(c, m)| format!("{c} ×{m}\n"))
                .collect();
            out.push_str(&format!("product = {product}\n"));
            out
        }
        Format::Json => {
            let ms: Vec<Value> = multiset
                .iter()
                .map(|(c, m)| json!({"composition": comma_list(c.parts()), "count": m}))
                .collect();
            let prod: Value = serde_json::from_str(&product.to_json_string()).expect("valid json");
            json!({"multiset": ms, "product": prod}).to_string() + "\n"
        }
    })
}

fn lrm(w: &Permutation, format: Format) -> String {
    let seq = w.lrm_sequence();
    match format {
        Format::Text => {
            let seq_text = seq
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" ");
            format!(
                "LRM = {}\nLRM' = {}\ncLRM' = {}\nlrm sequence = {seq_text}\n",
                w.lrm(),
                w.lrm_prime(),
                w.clrm_prime()
            )
        }
        Format::Json => {
            json!({
                "w": w.to_string(),
                "lrm": w.lrm().elements(),
                "lrm_prime": w.lrm_prime().elements(),
                "clrm_prime": comma_list(w.clrm_prime().parts()),
                "lrm_sequence": seq,
            })
            .to_string()
                + "\n"
        }
    }
}

fn dims(n: usize, format: Format) -> Result<String, Failure> {
    use rayon::prelude::*;
    let basis = lrm_basis(n)?;
    let rows = compositions_of(n)
        .into_par_iter()
        .map(|alpha| -> descent_core::Result<_> {
            let r = r_alpha(&alpha)?.rank();
            let s = basis.s_alpha(&alpha)?.rank();
            let sp = basis.s_prime_alpha(&alpha)?.rank();
            Ok((alpha, r, s, sp))
        })
        .collect::<descent_core::Result<Vec<_>>>()?;
    Ok(match format {
        Format::Text => {
            let width = rows
                .iter()
                .map(|(a, ..)| a.to_string().chars().count())
                .max()
                .unwrap_or(0)
                .max(5);
            let mut out = format!(
                "{:<width$}  {:>6}  {:>6}  {:>6}\n",
                "alpha", "dim R", "dim S", "dim S'"
            );
            for (a, r, s, sp) in &rows {
                out.push_str(&format!(
                    "{:<width$}  {r:>6}  {s:>6}  {sp:>6}\n",
                    a.to_string()
                ));
            }
            out
        }
        Format::Json => {
            let list: Vec<Value> = rows
                .iter()
                .map(|(a, r, s, sp)| {
                    json!({
                        "alpha": comma_list(a.parts()),
                        "partition": a.underlying_partition().to_string(),
                        "dim_r": r,
                        "dim_s": s,
                        "dim_s_prime": sp,
                    })
                })
                .collect();
            Value::Array(list).to_string() + "\n"
        }
    })
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{path}: {e}")))
    }
}

fn eigen(text: &str, n: usize, format: Format) -> Result<String, Failure> {
    let a = SigmaElement::from_json_str(text, n)?;
    let lm = left_mult_matrix(&a)?;
    let matches = lm.diagonal_matches_prediction();
    Ok(match format {
        Format::Text => {
            let yes_no = |b: bool| if b { "yes" } else { "no" };
            let mut out = format!(
                "triangular: {}\ndiagonal matches prediction: {}\n",
                yes_no(lm.triangular),
                yes_no(matches)
            );
            match &lm.eigenvalues {
                Some(list) => {
                    out.push_str("eigenvalues:\n");
                    for (v, m) in list {
                        out.push_str(&format!("  {v} ×{m}\n"));
                    }
                }
                None => out.push_str("eigenvalues: unavailable (matrix not triangular)\n"),
            }
            out
        }
        Format::Json => {
            let eig = lm.eigenvalues.as_ref().map(|list| {
                list.iter()
                    .map(|(v, m)| json!({"value": rational_json(v), "multiplicity": m}))
                    .collect::<Vec<_>>()
            });
            json!({
                "triangular": lm.triangular,
                "diagonal_matches_prediction": matches,
                "order": lm.order.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
                "diagonal": lm.diagonal.iter().map(rational_json).collect::<Vec<_>>(),
                "predicted": lm.predicted.iter().map(rational_json).collect::<Vec<_>>(),
                "eigenvalues": eig,
            })
            .to_string()
                + "\n"
        }
    })
}

fn verify(
    suite: Suite,
    n: usize,
    verbose: bool,
    format: Format,
) -> Result<(String, bool), Failure> {
    let reports = run_suite(suite, n, Scope::for_size(n))?;
    let passed = reports.iter().all(|r| r.passed());
    let out = match format {
        Format::Text => reports
            .iter()
            .map(|r| {
                if verbose {
                    r.to_text_verbose()
                } else {
                    r.to_text()
                }
            })
            .collect(),
        Format::Json => serde_json::to_string_pretty(&reports).expect("serializable") + "\n",
    };
    Ok((out, passed))
}

fn run(cli: Cli) -> Result<String, (String, Failure)> {
    let format = cli.global.format;
    let extended = cli.global.extended;
    let result: Result<(String, bool), Failure> = (|| match cli.command {
        Command::Bexpand { alpha, n } => Ok((bexpand(&composition_arg(&alpha, n)?, format), true)),
        Command::Bprod { alpha, beta, n } => {
            let a = composition_arg(&alpha, n)?;
            let b = composition_arg(&beta, n)?;
            Ok((bprod(&a, &b, format)?, true))
        }
        Command::Lrm { w } => Ok((lrm(&w.parse::<Permutation>()?, format), true)),
        Command::Dims { n } => {
            subspace_guard(n, extended)?;
            Ok((dims(n, format)?, true))
        }
        Command::Eigen { file, n } => {
            subspace_guard(n, extended)?;
            Ok((eigen(&read_input(&file)?, n, format)?, true))
        }
        Command::Verify { suite, n, verbose } => {
            let suite: Suite = suite.parse()?;
            subspace_guard(n, extended)?;
            verify(suite, n, verbose, format)
        }
    })();
    match result {
        Ok((out, true)) => Ok(out),
        Ok((out, false)) => Err((out, Failure::Verification)),
        Err(f) => Err((String::new(), f)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.global.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be positive");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let mut stdout = io::stdout().lock();
    match run(cli) {
        Ok(out) => {
            let _ = stdout.write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err((out, Failure::Verification)) => {
            let _ = stdout.write_all(out.as_bytes());
            ExitCode::from(1)
        }
        Err((_, Failure::Usage(msg))) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn guards() {
        assert!(subspace_guard(5, false).is_ok());
        assert!(subspace_guard(6, false).is_err());
        assert!(subspace_guard(6, true).is_ok());
        assert!(subspace_guard(7, true).is_err());
        assert!(composition_arg("4,3", None).is_ok());
        assert!(composition_arg("4,4", None).is_err());
    }

    #[test]
    fn composition_argument_checks_weight() {
        assert!(composition_arg("2,1", Some(3)).is_ok());
        assert!(matches!(
            composition_arg("2,1", Some(4)),
            Err(Failure::Usage(_))
        ));
        assert!(matches!(
            composition_arg("2,x", None),
            Err(Failure::Usage(_))
        ));
    }

    #[test]
    fn text_renderers() {
        let w: Permutation = "312".parse().unwrap();
        assert_eq!(
            lrm(&w, Format::Text),
            "LRM = {1,3}\nLRM' = {2}\ncLRM' = (2,1)\nlrm sequence = 3 1\n"
        );
        let a: Composition = "1,1".parse().unwrap();
        assert_eq!(bexpand(&a, Format::Text), "12\n21\n");
        assert_eq!(comma_list(&[2, 1, 1]), "2,1,1");
    }
}
