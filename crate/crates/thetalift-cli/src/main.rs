use std::collections::BTreeMap;
use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use thetalift::cocycle::{hilbert_quadratic, hilbert_tame};
use thetalift::exponents::{
    borel_ledger, delta_ledger, delta_target, ledger_sum, ledger_target, exponent_equation_solutions,
};
use thetalift::orbits::{dimension_equation, dual_group, gk_dim, o_c, orbit_dim, GroupFamily};
use thetalift::report::{CheckRecord, Report};
use thetalift::scalars::{check_odd_prime, rat};
use thetalift::suites::{run_suite, Suite, SuiteConfig};
use thetalift::{Error, PAdicScalar, Rational};

#[derive(Parser, Debug)]
#[command(name = "thetalift", version, about = "Exact checks for the metaplectic theta-lift identities")]
struct Cli {
    /// Emit a single JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Override every per-check sample count.
    #[arg(long, global = true)]
    iters: Option<usize>,
    #[arg(long, global = true, default_value_t = 7)]
    p: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    Sp,
    So,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// The orbit O_c(r, 2l) with its dimension.
    Orbit {
        #[arg(long, default_value_t = 3)]
        r: usize,
        #[arg(long)]
        twol: usize,
    },
    /// Both sides of the dimension equation with n = floor(k/2).
    Dimeq {
        #[arg(long, default_value_t = 3)]
        r: usize,
        #[arg(long)]
        k: usize,
    },
    /// Exponent ledgers of the unramified computation.
    Exponents {
        #[arg(long, default_value_t = 3)]
        r: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: usize,
    },
    /// Run a verification suite.
    Verify {
        #[arg(default_value = "all", value_parser = clap::builder::PossibleValuesParser::new(Suite::NAMES))]
        suite: String,
    },
    /// Evaluate the Hilbert symbol (a, b)_r over Q_p.
    Cocycle {
        #[arg(long, default_value_t = 3)]
        r: u64,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// Dual group of the r-fold cover of Sp or SO of the given matrix size.
    Dualgroup {
        #[arg(long, value_enum)]
        family: Family,
        #[arg(long)]
        rank: usize,
        #[arg(long, default_value_t = 3)]
        r: u64,
    },
}

fn params(pairs: &[(&str, Value)]) -> BTreeMap<String, Value> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn run(cli: &Cli) -> Result<Report, Error> {
    let (p, seed) = (cli.p, cli.seed);
    let report = match &cli.command {
        Command::Orbit { r, twol } => {
            let mut rep = Report::new("orbit", params(&[("r", json!(r)), ("twol", json!(twol))]), p, seed);
            let oc = o_c(*r, *twol)?;
            rep.push(CheckRecord::pass_with(
                "orbit",
                json!({
                    "partition": oc.parts(),
                    "valid": true,
                    "orbit_dim": orbit_dim(&oc),
                    "gk_dim": gk_dim(&oc).to_string(),
                }),
            ));
            rep
        }
        Command::Dimeq { r, k } => {
            let n = k / 2;
            let mut rep =
                Report::new("dimeq", params(&[("r", json!(r)), ("k", json!(k)), ("n", json!(n))]), p, seed);
            let (lhs, rhs) = dimension_equation(*r, *k, n)?;
            rep.push(CheckRecord::from_outcome(
                "dimension_equation",
                lhs == rhs,
                json!({ "r": r, "k": k, "n": n, "lhs": lhs.to_string(), "rhs": rhs.to_string() }),
            ));
            rep
        }
        Command::Exponents { r, k, n } => {
            let (r, k, n) = (*r, *k, *n);
            let mut rep = Report::new(
                "exponents",
                params(&[("r", json!(r)), ("k", json!(k)), ("n", json!(n))]),
                p,
                seed,
            );
            let (sum, target) = (ledger_sum(r, k, n)?, ledger_target(r, k, n)?);
            rep.push(CheckRecord::from_outcome(
                "ledger_identity",
                sum == target,
                json!({ "r": r, "k": k, "n": n, "sum": sum, "target": target }),
            ));
            let borel = borel_ledger(r, k, n)?;
            rep.push(CheckRecord::from_outcome(
                "borel_exponent",
                borel == rat(-target, 1),
                json!({ "r": r, "k": k, "n": n, "exponent": borel.to_string(), "expected": -target }),
            ));
            let d = delta_ledger(k, n)?;
            let want = delta_target(k, n);
            let ab = |e: &thetalift::exponents::AbExponent| json!({ "a": e.a.to_string(), "b": e.b.to_string() });
            rep.push(CheckRecord::from_outcome(
                "delta_exponent",
                d.total.a == want && d.total.b == -want.clone(),
                json!({
                    "k": k, "n": n,
                    "half_modulus": ab(&d.half_modulus),
                    "weil": ab(&d.weil),
                    "quotient": ab(&d.quotient),
                    "delta": ab(&d.delta),
                    "total": ab(&d.total),
                    "expected_a": want.to_string(),
                }),
            ));
            let sols = exponent_equation_solutions(r, 200)?;
            rep.push(CheckRecord::from_outcome(
                "exponent_equation_solutions",
                sols == vec![r - 1],
                json!({ "r": r, "range": [1, 200], "solutions": sols }),
            ));
            rep
        }
        Command::Verify { suite } => {
            let suite: Suite = suite.parse()?;
            let mut rep = Report::new(
                "verify",
                params(&[("suite", json!(suite.to_string())), ("p", json!(p)), ("iters", json!(cli.iters))]),
                p,
                seed,
            );
            rep.extend(run_suite(suite, &SuiteConfig::new(p, seed, cli.iters))?);
            rep
        }
        Command::Cocycle { r, a, b } => {
            let mut rep = Report::new(
                "cocycle",
                params(&[("p", json!(p)), ("r", json!(r)), ("a", json!(a)), ("b", json!(b))]),
                p,
                seed,
            );
            check_odd_prime(p)?;
            let parse = |s: &str| -> Result<PAdicScalar, Error> {
                let x: Rational = s
                    .parse()
                    .map_err(|_| Error::Precondition(format!("cannot parse {s} as a rational")))?;
                PAdicScalar::from_rational(&x, p)
            };
            let (pa, pb) = (parse(a)?, parse(b)?);
            let sym = if *r == 2 { hilbert_quadratic(&pa, &pb, p)? } else { hilbert_tame(&pa, &pb, p, *r)? };
            rep.push(CheckRecord::pass_with(
                "hilbert_symbol",
                json!({ "value": sym.to_string(), "exponent": sym.exponent(), "order": sym.order() }),
            ));
            rep
        }
        Command::Dualgroup { family, rank, r } => {
            let fam = match family {
                Family::Sp => GroupFamily::Sp(*rank),
                Family::So => GroupFamily::So(*rank),
            };
            let mut rep = Report::new(
                "dualgroup",
                params(&[("family", json!(format!("{family:?}"))), ("rank", json!(rank)), ("r", json!(r))]),
                p,
                seed,
            );
            let d = dual_group(fam, *r)?;
            rep.push(CheckRecord::pass_with("dual_group", json!({ "descriptor": d.to_string() })));
            rep
        }
    };
    Ok(report.finish())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            let text = if cli.json { format!("{}\n", report.to_json()) } else { report.to_text() };
            let _ = std::io::stdout().lock().write_all(text.as_bytes());
            if report.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
