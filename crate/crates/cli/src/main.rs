//! CLI for the constacyclic code library: factorization display,
//! single-code analysis, AMDS and qAMDS sweeps, and the formula-vs-oracle
//! verification report.
//!
//! Exit codes: 0 clean, 1 usage or parameter error, 2 enumeration budget
//! exceeded, 3 verification found a formula/oracle disagreement.

use clap::{Args, Parser, Subcommand, ValueEnum};
use constacyclic::{
    enumerate_amds, enumerate_qamds, factor_quartic, min_distance_oracle, run_verify, ConstaCode,
    DistanceCheck, Error as CoreError, FieldElement, FieldSpec, OracleConfig, OracleOutcome,
    Strategy, DEFAULT_ENUM_BUDGET,
};
use serde_json::{json, Value};
use std::fs;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "constacyclic",
    about = "Repeated-root constacyclic codes of length 4p^s: distances, AMDS, CSS quantum codes",
    version
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the canonical factorization of x^(4p^s) - beta with the
    /// family tag and the factor-to-index binding.
    Factor(CommonArgs),
    /// Analyze a single code given its factor exponents.
    Code(CodeArgs),
    /// Sweep all exponent tuples and report the AMDS classification.
    Sweep(SweepArgs),
    /// Sweep dual-containing AMDS codes through the CSS construction.
    Quantum(SweepArgs),
    /// Compare the closed-form distances against the oracle tuple by tuple.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Odd prime characteristic.
    #[arg(long)]
    p: u64,
    /// Extension degree m of F_{p^m}.
    #[arg(long, default_value_t = 1)]
    m: u32,
    /// Length exponent: the code length is 4*p^s.
    #[arg(long, default_value_t = 1)]
    s: u32,
    /// Constacyclic unit: an integer residue for m = 1, or a
    /// comma-separated coefficient vector for m > 1.
    #[arg(long, default_value = "1", allow_hyphen_values = true)]
    beta: String,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct CodeArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// One exponent per canonical factor, comma-separated.
    #[arg(long, allow_hyphen_values = false)]
    exponents: String,
    /// Also run the minimum-distance oracle.
    #[arg(long, default_value_t = false)]
    oracle: bool,
    #[arg(long, value_enum, default_value_t = StrategyArg::Auto)]
    strategy: StrategyArg,
    /// Weight-search bound.
    #[arg(long, default_value_t = 4)]
    cap: u64,
    /// Full-enumeration budget in codewords.
    #[arg(long, default_value_t = DEFAULT_ENUM_BUDGET as u64)]
    budget: u64,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Validate each table distance with the oracle.
    #[arg(long, default_value_t = false)]
    oracle: bool,
    #[arg(long, default_value_t = 4)]
    cap: u64,
    #[arg(long, default_value_t = DEFAULT_ENUM_BUDGET as u64)]
    budget: u64,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Restrict the run to one exponent tuple.
    #[arg(long)]
    exponents: Option<String>,
    #[arg(long, default_value_t = 6)]
    cap: u64,
    #[arg(long, default_value_t = DEFAULT_ENUM_BUDGET as u64)]
    budget: u64,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StrategyArg {
    Auto,
    FullEnum,
    WeightSearch,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap's own exit code conventions differ; usage errors are 1
            // here, and --help/--version are clean exits.
            use clap::error::ErrorKind;
            let clean = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let _ = e.print();
            return if clean {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            };
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {}", e);
            let code = match e {
                CoreError::BudgetExceeded { .. } => 2,
                _ => 1,
            };
            ExitCode::from(code)
        }
    }
}

fn parse_beta(field: &FieldSpec, raw: &str) -> Result<FieldElement, CoreError> {
    let beta = if field.m() == 1 {
        let v: i64 = raw
            .trim()
            .parse()
            .map_err(|_| CoreError::OutOfRange(format!("cannot parse beta '{}'", raw)))?;
        field.int(v)
    } else {
        let coeffs = parse_u64_list(raw)?;
        field.element_from_coeffs(&coeffs)?
    };
    if beta.is_zero() {
        return Err(CoreError::ZeroElement);
    }
    Ok(beta)
}

fn parse_u64_list(raw: &str) -> Result<Vec<u64>, CoreError> {
    raw.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<u64>()
                .map_err(|_| CoreError::OutOfRange(format!("cannot parse '{}'", tok)))
        })
        .collect()
}

fn emit(common: &CommonArgs, text: String) -> Result<(), CoreError> {
    match &common.out {
        Some(path) => fs::write(path, text)
            .map_err(|e| CoreError::OutOfRange(format!("cannot write {}: {}", path, e))),
        None => {
            println!("{}", text);
            Ok(())
        }
    }
}

fn setting(common: &CommonArgs) -> Result<(FieldSpec, FieldElement), CoreError> {
    let field = FieldSpec::new(common.p, common.m)?;
    let beta = parse_beta(&field, &common.beta)?;
    Ok((field, beta))
}

fn beta_json(field: &FieldSpec, beta: FieldElement) -> Value {
    if field.m() == 1 {
        json!(beta.code())
    } else {
        json!(field.coeffs_of(beta))
    }
}

fn poly_json(field: &FieldSpec, poly: &constacyclic::Polynomial) -> Value {
    let coeffs: Vec<Value> = poly
        .coeffs()
        .iter()
        .map(|&c| {
            if field.m() == 1 {
                json!(c.code())
            } else {
                json!(field.coeffs_of(c))
            }
        })
        .collect();
    json!(coeffs)
}

fn run(cli: Cli) -> Result<u8, CoreError> {
    match cli.cmd {
        Cmd::Factor(common) => cmd_factor(common),
        Cmd::Code(args) => cmd_code(args),
        Cmd::Sweep(args) => cmd_sweep(args),
        Cmd::Quantum(args) => cmd_quantum(args),
        Cmd::Verify(args) => cmd_verify(args),
    }
}

fn cmd_factor(common: CommonArgs) -> Result<u8, CoreError> {
    let (field, beta) = setting(&common)?;
    let beta0 = field.pth_power_root(beta, common.s)?;
    let set = factor_quartic(&field, beta0)?;
    let probe = ConstaCode::build(&field, common.s, beta, &vec![0; set.len()])?;
    let text = match common.format {
        Format::Json => {
            let factors: Vec<Value> = set
                .factors()
                .iter()
                .enumerate()
                .map(|(i, f)| {
                    json!({
                        "index": i,
                        "text": f.render(&field),
                        "coeffs": poly_json(&field, f),
                    })
                })
                .collect();
            let v = json!({
                "p": field.p(),
                "m": field.m(),
                "s": common.s,
                "beta": beta_json(&field, beta),
                "beta0": beta_json(&field, beta0),
                "modulus": probe.modulus().render(&field),
                "family": set.family().name(),
                "multiplicity": probe.p_pow_s(),
                "factors": factors,
                "role_order": set.role_order(),
            });
            serde_json::to_string_pretty(&v).expect("valid json")
        }
        Format::Csv => {
            let mut out = String::from("index,factor,multiplicity\n");
            for (i, f) in set.factors().iter().enumerate() {
                out.push_str(&format!("{},{},{}\n", i, f.render(&field), probe.p_pow_s()));
            }
            out
        }
        Format::Table => {
            let mut out = format!(
                "x^{} - {} over F_{} = product of the factors below, each to the power {}\nfamily: {}\n",
                probe.n(),
                field.render(beta),
                field.q(),
                probe.p_pow_s(),
                set.family().name()
            );
            for (i, f) in set.factors().iter().enumerate() {
                out.push_str(&format!("  [{}] {}\n", i, f.render(&field)));
            }
            out.push_str(&format!("role order: {:?}\n", set.role_order()));
            out
        }
    };
    emit(&common, text)?;
    Ok(0)
}

fn cmd_code(args: CodeArgs) -> Result<u8, CoreError> {
    let (field, beta) = setting(&args.common)?;
    let exps = parse_u64_list(&args.exponents)?;
    let code = ConstaCode::build(&field, args.common.s, beta, &exps)?;
    let formula = code.formula_distance()?;
    let n = code.n() as usize;

    let d_oracle: Option<OracleOutcome> = if args.oracle {
        let strategy = match args.strategy {
            StrategyArg::FullEnum => Strategy::FullEnum,
            StrategyArg::WeightSearch => Strategy::WeightSearch,
            StrategyArg::Auto => {
                let k = code.k() as u32;
                let fits = (field.q() as u128)
                    .checked_pow(k)
                    .map(|v| v <= args.budget as u128)
                    .unwrap_or(false);
                if fits {
                    Strategy::FullEnum
                } else {
                    Strategy::WeightSearch
                }
            }
        };
        Some(min_distance_oracle(
            &field,
            n,
            code.generator(),
            strategy,
            args.cap.min(code.n()),
            args.budget as u128,
        )?)
    } else {
        None
    };

    let d_for_verdicts = d_oracle.and_then(|o| o.exact()).unwrap_or(formula.d);
    let params = code.params(d_for_verdicts);
    let amds = constacyclic::is_amds(&params);
    let dual_containing = match code.is_dual_containing() {
        Ok(v) => Some(v),
        Err(CoreError::BetaNotSelfInverse) => None,
        Err(e) => return Err(e),
    };
    let oracle_json = match d_oracle {
        None => Value::Null,
        Some(OracleOutcome::Exact(d)) => json!(d),
        Some(OracleOutcome::ExceedsCap(c)) => json!(format!(">{}", c)),
    };

    let text = match args.common.format {
        Format::Json => {
            let v = json!({
                "p": field.p(),
                "m": field.m(),
                "s": args.common.s,
                "beta": beta_json(&field, beta),
                "exponents": code.exponents(),
                "role_exponents": code.role_exponents(),
                "family": code.factor_set().family().name(),
                "n": code.n(),
                "k": code.k(),
                "d_formula": formula.d,
                "case_label": formula.case,
                "d_oracle": oracle_json,
                "generator": poly_json(&field, code.generator()),
                "generator_text": code.generator().render(&field),
                "amds": amds,
                "mds": constacyclic::is_mds(&params),
                "dual_containing": dual_containing,
            });
            serde_json::to_string_pretty(&v).expect("valid json")
        }
        Format::Csv => {
            let mut out = String::from("n,k,d_formula,case_label,d_oracle,amds,dual_containing\n");
            out.push_str(&format!(
                "{},{},{},{},{},{},{}\n",
                code.n(),
                code.k(),
                formula.d,
                formula.case,
                match d_oracle {
                    None => "-".to_string(),
                    Some(OracleOutcome::Exact(d)) => d.to_string(),
                    Some(OracleOutcome::ExceedsCap(c)) => format!(">{}", c),
                },
                amds,
                dual_containing.map(|b| b.to_string()).unwrap_or("-".into()),
            ));
            out
        }
        Format::Table => {
            format!(
                "[{} {} {}]_{} code, generator {}\n  case {}  oracle {}  amds {}  dual-containing {}\n",
                code.n(),
                code.k(),
                formula.d,
                field.q(),
                code.generator().render(&field),
                formula.case,
                match d_oracle {
                    None => "-".to_string(),
                    Some(OracleOutcome::Exact(d)) => d.to_string(),
                    Some(OracleOutcome::ExceedsCap(c)) => format!(">{}", c),
                },
                amds,
                dual_containing.map(|b| b.to_string()).unwrap_or("-".into()),
            )
        }
    };
    emit(&args.common, text)?;
    Ok(0)
}

fn oracle_config(oracle: bool, cap: u64, budget: u64) -> Option<OracleConfig> {
    if oracle {
        Some(OracleConfig {
            cap,
            budget: budget as u128,
        })
    } else {
        None
    }
}

fn check_json(check: &Option<DistanceCheck>) -> Value {
    match check {
        None => Value::Null,
        Some(DistanceCheck::Confirmed { d }) => json!({"status": "confirmed", "d": d}),
        Some(DistanceCheck::Refuted { found, searched_to }) => json!({
            "status": "refuted",
            "found": found,
            "searched_to": searched_to,
        }),
        Some(DistanceCheck::Inconclusive { searched_to }) => json!({
            "status": "inconclusive",
            "searched_to": searched_to,
        }),
    }
}

fn cmd_sweep(args: SweepArgs) -> Result<u8, CoreError> {
    let (field, beta) = setting(&args.common)?;
    let sweep = enumerate_amds(
        &field,
        args.common.s,
        beta,
        oracle_config(args.oracle, args.cap, args.budget),
    )?;
    let text = match args.common.format {
        Format::Json => {
            let rows: Vec<Value> = sweep
                .rows
                .iter()
                .map(|r| {
                    json!({
                        "exponents": r.exponents,
                        "role_exponents": r.role_exponents,
                        "n": r.params.n,
                        "k": r.params.k,
                        "d": r.params.d,
                        "case_label": r.case_label,
                        "amds": r.verdict.is_amds,
                        "mds": r.verdict.is_mds,
                        "classifier": r.classification.label,
                        "oracle": check_json(&r.oracle),
                        "findings": r.findings.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
                    })
                })
                .collect();
            let v = json!({
                "p": field.p(),
                "m": field.m(),
                "s": args.common.s,
                "beta": beta_json(&field, beta),
                "family": sweep.family.name(),
                "rows": rows,
            });
            serde_json::to_string_pretty(&v).expect("valid json")
        }
        Format::Csv => {
            let mut out = String::from("exponents,n,k,d,case_label,amds,mds,classifier,findings\n");
            for r in &sweep.rows {
                out.push_str(&format!(
                    "{},{},{},{},{},{},{},{},{}\n",
                    join_exps(&r.exponents),
                    r.params.n,
                    r.params.k,
                    r.params.d,
                    r.case_label,
                    r.verdict.is_amds,
                    r.verdict.is_mds,
                    r.classification.label,
                    r.findings.len(),
                ));
            }
            out
        }
        Format::Table => {
            let mut out = format!(
                "AMDS sweep over F_{} length {} ({} tuples)\n",
                field.q(),
                4 * field.p().pow(args.common.s),
                sweep.rows.len()
            );
            for r in sweep.amds_rows() {
                out.push_str(&format!(
                    "  {:?} -> [{} {} {}] {} {}\n",
                    r.exponents,
                    r.params.n,
                    r.params.k,
                    r.params.d,
                    r.classification.label,
                    if r.findings.is_empty() {
                        ""
                    } else {
                        "(findings)"
                    },
                ));
            }
            out
        }
    };
    emit(&args.common, text)?;
    Ok(0)
}

fn cmd_quantum(args: SweepArgs) -> Result<u8, CoreError> {
    let (field, beta) = setting(&args.common)?;
    let sweep = enumerate_qamds(
        &field,
        args.common.s,
        beta,
        oracle_config(args.oracle, args.cap, args.budget),
    )?;
    let text = match args.common.format {
        Format::Json => {
            let rows: Vec<Value> = sweep
                .rows
                .iter()
                .map(|r| {
                    json!({
                        "exponents": r.exponents,
                        "role_exponents": r.role_exponents,
                        "dual_exponents": r.dual_exponents,
                        "classical": [r.classical.n, r.classical.k, r.classical.d],
                        "quantum": [r.params.n, r.params.kq, r.params.d],
                        "q": r.params.q,
                        "defect": r.defect,
                        "classifier": r.classifier_label,
                        "notes": r.notes,
                    })
                })
                .collect();
            let v = json!({
                "p": field.p(),
                "m": field.m(),
                "s": args.common.s,
                "beta": beta_json(&field, beta),
                "rows": rows,
            });
            serde_json::to_string_pretty(&v).expect("valid json")
        }
        Format::Csv => {
            let mut out =
                String::from("exponents,dual_exponents,n,k,d,kq,defect,classifier,notes\n");
            for r in &sweep.rows {
                out.push_str(&format!(
                    "{},{},{},{},{},{},{},{},{}\n",
                    join_exps(&r.exponents),
                    join_exps(&r.dual_exponents),
                    r.classical.n,
                    r.classical.k,
                    r.classical.d,
                    r.params.kq,
                    r.defect,
                    r.classifier_label,
                    r.notes.join("; "),
                ));
            }
            out
        }
        Format::Table => {
            let mut out = format!("qAMDS codes over F_{}\n", field.q());
            for r in &sweep.rows {
                out.push_str(&format!(
                    "  {:?} -> [[{} {} {}]]_{} defect {} ({})\n",
                    r.exponents,
                    r.params.n,
                    r.params.kq,
                    r.params.d,
                    r.params.q,
                    r.defect,
                    r.classifier_label,
                ));
            }
            out
        }
    };
    emit(&args.common, text)?;
    Ok(0)
}

fn join_exps(exps: &[u64]) -> String {
    let parts: Vec<String> = exps.iter().map(|e| e.to_string()).collect();
    parts.join(";")
}

fn cmd_verify(args: VerifyArgs) -> Result<u8, CoreError> {
    let (field, beta) = setting(&args.common)?;
    let restrict = match &args.exponents {
        Some(raw) => Some(parse_u64_list(raw)?),
        None => None,
    };
    let report = run_verify(
        &field,
        args.common.s,
        beta,
        OracleConfig {
            cap: args.cap,
            budget: args.budget as u128,
        },
        restrict.as_deref(),
    )?;
    let text = match args.common.format {
        Format::Json => {
            let rows: Vec<Value> = report
                .rows
                .iter()
                .map(|r| {
                    json!({
                        "exponents": r.exponents,
                        "role_exponents": r.role_exponents,
                        "d_formula": r.d_formula,
                        "d_oracle": r.d_oracle,
                        "agree": r.agree.as_str(),
                        "case_label": r.case_label,
                        "explained": r.explained,
                    })
                })
                .collect();
            let v = json!({
                "p": report.p,
                "m": report.m,
                "s": report.s,
                "beta": beta_json(&field, beta),
                "modulus": report.modulus_display,
                "family": report.family,
                "binding": report.binding,
                "rows": rows,
            });
            serde_json::to_string_pretty(&v).expect("valid json")
        }
        Format::Csv | Format::Table => {
            // CSV with leading comment metadata; `table` shares the layout.
            let mut out = String::new();
            out.push_str(&format!(
                "# p={} m={} s={} beta={} family={}\n",
                report.p,
                report.m,
                report.s,
                field.render(beta),
                report.family
            ));
            out.push_str(&format!("# modulus: {}\n", report.modulus_display));
            out.push_str(&format!("# binding: {}\n", report.binding.join(" | ")));
            out.push_str("exponents,d_formula,d_oracle,agree,case_label,explained\n");
            for r in &report.rows {
                out.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    join_exps(&r.exponents),
                    r.d_formula,
                    r.d_oracle,
                    r.agree.as_str(),
                    r.case_label,
                    r.explained,
                ));
            }
            out
        }
    };
    emit(&args.common, text)?;
    Ok(if report.has_disagreement() { 3 } else { 0 })
}
