//! `klsf`: query, construct, verify and survey maximum (k,l)-sum-free sets.

use std::fs::File;
use std::io::{self, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;

use klsf_core::construct::{max_witness, middle_set};
use klsf_core::formulas::{min_additive_tuples, mu_cyclic, mu_noncyclic_lower, MuReport};
use klsf_core::group::{parse_list_literal, parse_set_literal, unit_dilation_between, AbelianGroup, SumPair};
use klsf_core::oracle::{
    max_sumfree_group, max_sumfree_with, min_additive_tuples_bruteforce, OracleConfig, DEFAULT_MAX_N,
};
use klsf_core::sumset::{first_collision, is_complete};
use klsf_core::survey::{run_survey, SurveyRow, SurveyGrid};
use klsf_core::table::{mask_to_vec, GroupTable, MAX_TABLE_ORDER};
use klsf_core::Error;

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_NO_WITNESS: u8 = 3;
const EXIT_ORACLE_CAP: u8 = 4;

const ORACLE_MAX_ENV: &str = "KLSF_ORACLE_MAX";

#[derive(Parser)]
#[command(name = "klsf", version, about = "Maximum (k,l)-sum-free sets in finite abelian groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Maximum size of a (k,l)-sum-free subset of Z_n, with the divisor table.
    Mu {
        n: u64,
        k: u64,
        l: u64,
        #[arg(long)]
        json: bool,
    },
    /// Build a maximum (k,l)-sum-free subset of Z_n with its certificate.
    Construct {
        n: u64,
        k: u64,
        l: u64,
        #[arg(long)]
        json: bool,
    },
    /// Check a set literal such as [1,2] for (k,l)-sum-freeness.
    Verify {
        n: u64,
        k: u64,
        l: u64,
        set: String,
        /// Also report whether kA and lA cover the group.
        #[arg(long)]
        complete: bool,
    },
    /// Compare formula and exhaustive search over a grid; writes CSV.
    Survey {
        /// Inclusive range such as 1..24, or a single value.
        n: String,
        k: String,
        l: String,
        /// Run the exhaustive search for n up to this value.
        #[arg(long, default_value_t = 0)]
        oracle_max: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        workers: usize,
    },
    /// Minimum number of pairs of an m-subset of Z_p summing into the set.
    Ptuples {
        p: u64,
        m: u64,
        /// Also run the exhaustive minimization and check minimizers.
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        json: bool,
    },
    /// Exhaustive maximum search in Z_n.
    Oracle {
        n: u64,
        k: u64,
        l: u64,
        /// Enumerate every maximum set.
        #[arg(long)]
        all: bool,
        #[arg(long)]
        json: bool,
    },
    /// Lower bound for a general abelian group given by invariant factors, e.g. [2,4].
    Group {
        factors: String,
        k: u64,
        l: u64,
        /// Also search exhaustively (order at most 64).
        #[arg(long)]
        oracle: bool,
        #[arg(long)]
        json: bool,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NoWitness { .. } => EXIT_NO_WITNESS,
            Error::InstanceTooLarge(_) => EXIT_ORACLE_CAP,
            Error::SelfCheck(_) => EXIT_VERIFY_FAILED,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure {
            code: EXIT_VERIFY_FAILED,
            message: e.to_string(),
        }
    }
}

type CmdResult = Result<(), Failure>;

fn print_json<T: Serialize>(value: &T) -> CmdResult {
    let text = serde_json::to_string(value).map_err(|e| Failure::usage(e.to_string()))?;
    println!("{text}");
    Ok(())
}

fn check_instance(n: u64, k: u64, l: u64) -> CmdResult {
    if n == 0 {
        return Err(Failure::usage("n must be positive"));
    }
    SumPair::new(k, l)?;
    Ok(())
}

fn oracle_config() -> Result<OracleConfig, Failure> {
    let max_n = match std::env::var(ORACLE_MAX_ENV) {
        Ok(v) => v
            .trim()
            .parse::<u64>()
            .map_err(|_| Failure::usage(format!("{ORACLE_MAX_ENV} must be an integer, got {v:?}")))?
            .min(MAX_TABLE_ORDER),
        Err(_) => DEFAULT_MAX_N,
    };
    Ok(OracleConfig {
        max_n,
        ..OracleConfig::default()
    })
}

fn print_mu_table(r: &MuReport) {
    println!("Z_{} with (k,l) = ({},{})", r.n, r.k, r.l);
    println!("mu = {}  (best divisor {})", r.mu, r.best_divisor);
    println!("bounds: {} <= mu <= {}", r.lower_bound, r.upper_bound);
    println!("{:>8} {:>6} {:>4} {:>6} {:>13}", "d", "delta", "r", "gamma", "contribution");
    for row in &r.divisors {
        println!(
            "{:>8} {:>6} {:>4} {:>6} {:>13}",
            row.d, row.delta, row.r, row.gamma, row.contribution
        );
    }
}

fn cmd_mu(n: u64, k: u64, l: u64, json: bool) -> CmdResult {
    check_instance(n, k, l)?;
    let report = mu_cyclic(n, k, l)?;
    if json {
        print_json(&report)
    } else {
        print_mu_table(&report);
        Ok(())
    }
}

fn cmd_construct(n: u64, k: u64, l: u64, json: bool) -> CmdResult {
    check_instance(n, k, l)?;
    let witness = match max_witness(n, k, l) {
        Err(Error::NoWitness { .. }) => {
            return Err(Failure {
                code: EXIT_NO_WITNESS,
                message: format!("mu = 0: no nonempty ({k},{l})-sum-free set in Z_{n}"),
            })
        }
        other => other?,
    };
    if json {
        print_json(&witness)
    } else {
        println!("{}", witness.set);
        let c = &witness.certificate;
        println!(
            "size {} from an interval of Z_{} (C = {}, a = {}, b = {}, delta = {})",
            witness.size, witness.best_divisor, c.c, c.a, c.b, c.delta
        );
        Ok(())
    }
}

fn cmd_verify(n: u64, k: u64, l: u64, literal: &str, complete: bool) -> CmdResult {
    check_instance(n, k, l)?;
    let set = parse_set_literal(n, literal)?;
    if let Some(x) = first_collision(&set, k, l)? {
        println!("NOT SUMFREE: {x} lies in both {k}A and {l}A");
        return Err(Failure {
            code: EXIT_VERIFY_FAILED,
            message: format!("violation {x}"),
        });
    }
    if complete {
        let verdict = if is_complete(&set, k, l)? { "COMPLETE" } else { "INCOMPLETE" };
        println!("SUMFREE {verdict}");
    } else {
        println!("SUMFREE");
    }
    Ok(())
}

fn parse_range(text: &str) -> Result<RangeInclusive<u64>, Failure> {
    let bad = || Failure::usage(format!("malformed range {text:?}; expected a..b or a single value"));
    let parse = |s: &str| s.trim().parse::<u64>().map_err(|_| bad());
    let range = match text.split_once("..") {
        Some((lo, hi)) => parse(lo)?..=parse(hi.strip_prefix('=').unwrap_or(hi))?,
        None => {
            let v = parse(text)?;
            v..=v
        }
    };
    if range.is_empty() {
        return Err(Failure::usage(format!("empty range {text:?}")));
    }
    Ok(range)
}

fn write_csv<W: Write>(out: W, rows: &[SurveyRow]) -> Result<(), Failure> {
    let mut w = csv::Writer::from_writer(out);
    let to_failure = |e: csv::Error| Failure {
        code: EXIT_VERIFY_FAILED,
        message: e.to_string(),
    };
    w.write_record(["n", "k", "l", "mu_formula", "lower5", "upper5", "mu_oracle", "agree"])
        .map_err(to_failure)?;
    for r in rows {
        w.write_record([
            r.n.to_string(),
            r.k.to_string(),
            r.l.to_string(),
            r.mu_formula.to_string(),
            r.lower.to_string(),
            r.upper.to_string(),
            r.mu_oracle.map(|v| v.to_string()).unwrap_or_default(),
            r.agree.to_string(),
        ])
        .map_err(to_failure)?;
    }
    w.flush()?;
    Ok(())
}

fn cmd_survey(n: &str, k: &str, l: &str, oracle_max: u64, out: Option<PathBuf>, workers: usize) -> CmdResult {
    let grid = SurveyGrid {
        n: parse_range(n)?,
        k: parse_range(k)?,
        l: parse_range(l)?,
        oracle_max,
        workers: workers.max(1),
        config: oracle_config()?,
    };
    let rows = run_survey(&grid)?;
    match out {
        Some(path) => write_csv(File::create(path)?, &rows)?,
        None => write_csv(io::stdout().lock(), &rows)?,
    }
    let disagreements = rows.iter().filter(|r| !r.agree).count();
    if disagreements > 0 {
        return Err(Failure {
            code: EXIT_VERIFY_FAILED,
            message: format!("{disagreements} rows disagree"),
        });
    }
    Ok(())
}

#[derive(Serialize)]
struct TuplesReport {
    p: u64,
    m: u64,
    formula: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    minimizers: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    all_dilations: Option<bool>,
}

fn cmd_ptuples(p: u64, m: u64, oracle: bool, json: bool) -> CmdResult {
    let formula = min_additive_tuples(p, m)?;
    let mut report = TuplesReport {
        p,
        m,
        formula,
        oracle: None,
        minimizers: None,
        all_dilations: None,
    };
    if oracle {
        let res = min_additive_tuples_bruteforce(p, 2, m)?;
        let middle = middle_set(p, m)?;
        report.oracle = Some(res.optimum);
        report.minimizers = res.total_witnesses;
        report.all_dilations = Some(
            res.witnesses
                .iter()
                .all(|w| unit_dilation_between(w, &middle).is_some()),
        );
    }
    if json {
        return print_json(&report);
    }
    println!("formula: {formula}");
    if let (Some(o), Some(c), Some(d)) = (report.oracle, report.minimizers, report.all_dilations) {
        println!("oracle: {o}");
        println!("minimizers: {c}");
        println!("all minimizers dilations of the middle set: {d}");
    }
    Ok(())
}

fn cmd_oracle(n: u64, k: u64, l: u64, all: bool, json: bool) -> CmdResult {
    check_instance(n, k, l)?;
    let res = max_sumfree_with(n, k, l, all, &oracle_config()?)?;
    if json {
        return print_json(&res);
    }
    println!("optimum: {}", res.optimum);
    if let Some(total) = res.total_witnesses {
        println!("maximum sets: {total}{}", if res.truncated() { " (list truncated)" } else { "" });
    }
    for w in &res.witnesses {
        println!("{w}");
    }
    println!("nodes: {}  elapsed: {:.2?}", res.nodes_explored, res.elapsed);
    Ok(())
}

#[derive(Serialize)]
struct GroupReport {
    group: AbelianGroup,
    order: u64,
    exponent: u64,
    k: u64,
    l: u64,
    bound: u64,
    exactness_known: bool,
    exact_divisor: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle_witness: Option<Vec<Vec<u64>>>,
}

fn cmd_group(factors: &str, k: u64, l: u64, oracle: bool, json: bool) -> CmdResult {
    SumPair::new(k, l)?;
    let group = AbelianGroup::new(parse_list_literal(factors)?)?;
    let bound = mu_noncyclic_lower(&group, k, l)?;
    let mut report = GroupReport {
        order: group.order(),
        exponent: group.exponent(),
        group: group.clone(),
        k,
        l,
        bound: bound.bound,
        exactness_known: bound.exactness_known,
        exact_divisor: bound.exact_divisor,
        oracle: None,
        oracle_witness: None,
    };
    if oracle {
        let res = max_sumfree_group(&group, k, l, &oracle_config()?)?;
        let table = GroupTable::new(&group)?;
        report.oracle = Some(res.optimum);
        report.oracle_witness = res.witnesses.first().map(|&mask| {
            mask_to_vec(mask)
                .into_iter()
                .map(|x| table.coordinates(x as usize))
                .collect()
        });
    }
    if json {
        return print_json(&report);
    }
    println!("G = {group}, order {}, exponent {}", report.order, report.exponent);
    println!(
        "lower bound: {}  ({})",
        report.bound,
        if report.exactness_known { "exact" } else { "exactness unknown" }
    );
    if let Some(o) = report.oracle {
        println!("exhaustive: {o}");
    }
    Ok(())
}

fn run(cli: Cli) -> CmdResult {
    match cli.command {
        Command::Mu { n, k, l, json } => cmd_mu(n, k, l, json),
        Command::Construct { n, k, l, json } => cmd_construct(n, k, l, json),
        Command::Verify { n, k, l, set, complete } => cmd_verify(n, k, l, &set, complete),
        Command::Survey {
            n,
            k,
            l,
            oracle_max,
            out,
            workers,
        } => cmd_survey(&n, &k, &l, oracle_max, out, workers),
        Command::Ptuples { p, m, oracle, json } => cmd_ptuples(p, m, oracle, json),
        Command::Oracle { n, k, l, all, json } => cmd_oracle(n, k, l, all, json),
        Command::Group {
            factors,
            k,
            l,
            oracle,
            json,
        } => cmd_group(&factors, k, l, oracle, json),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("klsf: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
