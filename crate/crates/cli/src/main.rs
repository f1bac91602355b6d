//! `spinfake`: fake degree tables, split classes, character tables,
//! single-partition queries and verification suites.

mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use spinfake::characters::{char_table, simple_modules, split_classes, Algebra, GroupKind, ModuleIndex};
use spinfake::fake_degrees::{
    fake_degree_table, h_b_hecke_clifford, h_d_hecke_clifford, h_minus_b, h_minus_d, p_b_hecke_clifford,
    p_d_hecke_clifford, p_minus_b, p_minus_d, reflection_count, AlgebraFlavor, WeylType,
};
use spinfake::oracle::graded_rep::DEFAULT_CAP;
use spinfake::oracle::multiplicity::{oracle_h_b, oracle_h_d, restriction_hom_series};
use spinfake::oracle::signed_perm::canonical_word;
use spinfake::poly::TruncatedSeries;
use spinfake::report::Status;
use spinfake::scalar::Rational;
use spinfake::verify::{run_all, run_suite, Suite, VerifyOptions};
use spinfake::{Error, Partition};

use output::{Format, OutputArgs, Record};

#[derive(Parser)]
#[command(name = "spinfake", version, about = "Spin fake degrees of type B and D Weyl groups, with exact verification")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Fake degree table: one row per simple module, in canonical partition order.
    Table(TableArgs),
    /// Split conjugacy classes with parity and canonical representative word.
    Classes(ClassesArgs),
    /// Spin character table (CB_minus on even split classes, HC_B on Γ_n classes).
    Chartable(ChartableArgs),
    /// Run a verification suite (formulas, oracle, isomorphisms, characters, cauchy or all).
    Verify(VerifyArgs),
    /// Fake degree and multiplicity series of a single partition.
    Query(QueryArgs),
}

#[derive(Args)]
struct TableArgs {
    /// Weyl type, B or D.
    #[arg(value_name = "TYPE")]
    ty_pos: Option<WeylType>,
    /// Rank.
    #[arg(value_name = "N")]
    n_pos: Option<usize>,
    /// minus (spin Weyl group algebra) or hecke_clifford.
    #[arg(value_name = "ALGEBRA")]
    algebra_pos: Option<AlgebraFlavor>,
    #[arg(long = "type", value_name = "TYPE")]
    ty: Option<WeylType>,
    #[arg(long, value_name = "N")]
    n: Option<usize>,
    #[arg(long, value_name = "ALGEBRA")]
    algebra: Option<AlgebraFlavor>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct ClassesArgs {
    /// Group: B, D or Gamma.
    #[arg(value_name = "GROUP")]
    group_pos: Option<GroupKind>,
    #[arg(value_name = "N")]
    n_pos: Option<usize>,
    #[arg(long = "type", value_name = "GROUP")]
    group: Option<GroupKind>,
    #[arg(long, value_name = "N")]
    n: Option<usize>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct ChartableArgs {
    /// minus (CB_minus) or hecke_clifford (HC_B).
    #[arg(value_name = "ALGEBRA")]
    algebra_pos: Option<AlgebraFlavor>,
    #[arg(value_name = "N")]
    n_pos: Option<usize>,
    #[arg(long, value_name = "ALGEBRA")]
    algebra: Option<AlgebraFlavor>,
    #[arg(long, value_name = "N")]
    n: Option<usize>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct VerifyArgs {
    /// formulas, oracle, isomorphisms, characters, cauchy or all.
    #[arg(value_name = "SUITE", default_value = "all")]
    suite: String,
    /// Largest rank checked.
    #[arg(long, default_value_t = 4)]
    n_max: usize,
    /// Truncation degree of series comparisons.
    #[arg(long, default_value_t = 10)]
    maxdeg: usize,
    /// Total degree of the super Cauchy identity check.
    #[arg(long, default_value_t = 4)]
    degree: usize,
    /// Largest representation dimension the oracle may build.
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
    /// Stop at the first failing check.
    #[arg(long)]
    fail_fast: bool,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args)]
struct QueryArgs {
    #[arg(value_name = "TYPE")]
    ty_pos: Option<WeylType>,
    /// Partition, e.g. 3,1.
    #[arg(value_name = "LAMBDA")]
    lambda_pos: Option<Partition>,
    #[arg(value_name = "ALGEBRA")]
    algebra_pos: Option<AlgebraFlavor>,
    #[arg(long = "type", value_name = "TYPE")]
    ty: Option<WeylType>,
    #[arg(long, value_name = "LAMBDA")]
    lambda: Option<Partition>,
    #[arg(long, value_name = "ALGEBRA")]
    algebra: Option<AlgebraFlavor>,
    /// Truncation degree of the multiplicity series.
    #[arg(long, default_value_t = 12)]
    maxdeg: usize,
    /// Also recompute the series with the matrix oracle.
    #[arg(long)]
    oracle: bool,
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: usize,
    #[command(flatten)]
    out: OutputArgs,
}

/// A failure of the command itself, with its exit status.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NonExactDivision(_) | Error::Singular | Error::NotPowerSeries(_) | Error::Irrational => 1,
            _ => 2,
        };
        Failure { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

/// The positional value or the flag value, but not both.
fn either<T>(positional: Option<T>, flag: Option<T>, name: &str) -> Result<T, Failure> {
    match (positional, flag) {
        (Some(v), None) | (None, Some(v)) => Ok(v),
        (Some(_), Some(_)) => Err(usage(format!("{name} given both as an argument and as --{name}"))),
        (None, None) => Err(usage(format!("missing {name}"))),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Table(a) => table(a),
        Command::Classes(a) => classes(a),
        Command::Chartable(a) => chartable(a),
        Command::Verify(a) => verify(a),
        Command::Query(a) => query(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn table(a: TableArgs) -> Result<u8, Failure> {
    let ty = either(a.ty_pos, a.ty, "type")?;
    let n = either(a.n_pos, a.n, "n")?;
    let flavor = either(a.algebra_pos, a.algebra, "algebra")?;
    let rows = fake_degree_table(ty, n, flavor)?;
    let record = Record::new("fake_degree", Some(ty.to_string()), n, json!({"algebra": flavor, "rows": rows}));
    match a.out.format {
        Format::Json => a.out.emit_json(record),
        Format::Csv => output::write_csv(
            &["label", "duplicity", "module_type", "shift", "palindromic", "value_at_one", "coefficients"],
            rows.iter().map(|r| {
                vec![
                    r.label.to_string(),
                    r.duplicity.to_string(),
                    format!("{:?}", r.module_type),
                    r.shift.to_string(),
                    r.palindromic.to_string(),
                    r.value_at_one.to_string(),
                    join(&r.coefficients),
                ]
            }),
        )
        .map_err(|e| usage(e.to_string()))?,
        Format::Text => {
            println!("type {ty}, n = {n}, algebra {}", flavor_name(flavor));
            for r in &rows {
                let dup = if r.duplicity > 1 { " (×2)" } else { "" };
                println!(
                    "{}{dup} [{:?}]  P = [{}]  shift {}  palindromic {}  P(1) = {}",
                    r.label,
                    r.module_type,
                    join(&r.coefficients),
                    r.shift,
                    r.palindromic,
                    r.value_at_one
                );
            }
        }
    }
    Ok(0)
}

fn classes(a: ClassesArgs) -> Result<u8, Failure> {
    let group = either(a.group_pos, a.group, "type")?;
    let n = either(a.n_pos, a.n, "n")?;
    let classes = split_classes(group, n)?;
    let rows: Vec<Value> = classes
        .iter()
        .map(|c| {
            json!({
                "family": c.family,
                "parity": c.parity,
                "rho_plus": c.rho_plus,
                "rho_minus": c.rho_minus,
                "word": canonical_word(&c.rho_plus, &c.rho_minus),
            })
        })
        .collect();
    let group_name = match group {
        GroupKind::B => "B",
        GroupKind::D => "D",
        GroupKind::Gamma => "Gamma",
    };
    match a.out.format {
        Format::Json => a.out.emit_json(Record::new("split_classes", Some(group_name.into()), n, json!({ "classes": rows }))),
        Format::Csv => output::write_csv(
            &["family", "parity", "rho_plus", "rho_minus", "word"],
            classes.iter().map(|c| {
                vec![
                    c.family_name().to_string(),
                    format!("{:?}", c.parity).to_lowercase(),
                    c.rho_plus.to_string(),
                    c.rho_minus.to_string(),
                    join(&canonical_word(&c.rho_plus, &c.rho_minus)),
                ]
            }),
        )
        .map_err(|e| usage(e.to_string()))?,
        Format::Text => {
            for c in &classes {
                println!("{c}  {:?}  word [{}]", c.parity, join(&canonical_word(&c.rho_plus, &c.rho_minus)));
            }
        }
    }
    Ok(0)
}

fn chartable(a: ChartableArgs) -> Result<u8, Failure> {
    let flavor = either(a.algebra_pos, a.algebra, "algebra")?;
    let n = either(a.n_pos, a.n, "n")?;
    let algebra = match flavor {
        AlgebraFlavor::Minus => Algebra::CbMinus,
        AlgebraFlavor::HeckeClifford => Algebra::HcB,
    };
    let table = char_table(algebra, n)?;
    match a.out.format {
        Format::Json => {
            let payload = serde_json::to_value(&table).expect("character tables serialize");
            a.out.emit_json(Record::new("char_table", Some("B".into()), n, payload))
        }
        Format::Csv => {
            let mut header = vec!["label".to_string()];
            header.extend(table.columns.iter().map(|c| c.to_string()));
            let header: Vec<&str> = header.iter().map(String::as_str).collect();
            output::write_csv(
                &header,
                table.rows.iter().map(|r| {
                    let mut row = vec![r.label.to_string()];
                    row.extend(r.values.iter().map(|v| v.to_string()));
                    row
                }),
            )
            .map_err(|e| usage(e.to_string()))?
        }
        Format::Text => {
            println!("{} n = {n}", algebra.name());
            println!("columns: {}", table.columns.iter().map(|c| c.to_string()).collect::<Vec<_>>().join("  "));
            for r in &table.rows {
                println!("{}: {}", r.label, r.values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("  "));
            }
        }
    }
    Ok(0)
}

fn verify(a: VerifyArgs) -> Result<u8, Failure> {
    let opts = VerifyOptions { n_max: a.n_max, maxdeg: a.maxdeg, degree: a.degree, cap: a.cap, fail_fast: a.fail_fast };
    let reports = if a.suite == "all" {
        run_all(&opts)
    } else {
        let suite: Suite = a.suite.parse()?;
        run_suite(suite, &opts)
    };
    let failed = reports.iter().filter(|r| !r.passed()).count();
    match a.out.format {
        Format::Json => {
            let payload = json!({
                "suite": a.suite,
                "passed": reports.len() - failed,
                "failed": failed,
                "reports": reports,
            });
            a.out.emit_json(Record::new("verification", None, a.n_max, payload))
        }
        Format::Csv => output::write_csv(
            &["check", "status", "params", "first_discrepancy"],
            reports.iter().map(|r| {
                vec![
                    r.check.clone(),
                    serde_json::to_value(r.status).expect("status serializes").as_str().unwrap_or_default().to_string(),
                    r.params.to_string(),
                    r.first_discrepancy.clone().unwrap_or_default(),
                ]
            }),
        )
        .map_err(|e| usage(e.to_string()))?,
        Format::Text => {
            for r in &reports {
                let tag = match r.status {
                    Status::Pass => "PASS",
                    Status::Fail => "FAIL",
                    Status::ConjectureConsistent => "CONSISTENT",
                };
                match &r.first_discrepancy {
                    Some(d) => println!("[{tag}] {} {}: {d}", r.check, r.params),
                    None => println!("[{tag}] {} {}", r.check, r.params),
                }
            }
            println!("{} checks, {failed} failed", reports.len());
        }
    }
    Ok(if failed == 0 { 0 } else { 1 })
}

fn query(a: QueryArgs) -> Result<u8, Failure> {
    let ty = either(a.ty_pos, a.ty, "type")?;
    let lambda = either(a.lambda_pos, a.lambda, "lambda")?;
    let flavor = a.algebra_pos.or(a.algebra).unwrap_or(AlgebraFlavor::Minus);
    if lambda.is_empty() {
        return Err(usage("lambda must be a non-empty partition"));
    }
    let n = lambda.size();
    let (p, h) = match (ty, flavor) {
        (WeylType::B, AlgebraFlavor::Minus) => (p_minus_b(&lambda)?, h_minus_b(&lambda)?.series(a.maxdeg)),
        (WeylType::B, AlgebraFlavor::HeckeClifford) => {
            (p_b_hecke_clifford(&lambda)?, h_b_hecke_clifford(&lambda)?.series(a.maxdeg))
        }
        (WeylType::D, AlgebraFlavor::Minus) => (p_minus_d(&lambda)?, h_minus_d(&lambda)?.series(a.maxdeg)),
        (WeylType::D, AlgebraFlavor::HeckeClifford) => {
            (p_d_hecke_clifford(&lambda)?, h_d_hecke_clifford(&lambda)?.series(a.maxdeg))
        }
        (WeylType::A, _) => return Err(usage("queries are available for types B and D")),
    };
    let algebra = match (ty, flavor) {
        (WeylType::B, AlgebraFlavor::Minus) => Algebra::CbMinus,
        (WeylType::B, AlgebraFlavor::HeckeClifford) => Algebra::HcB,
        (_, AlgebraFlavor::Minus) => Algebra::CdMinus,
        (_, AlgebraFlavor::HeckeClifford) => Algebra::HcD,
    };
    let key = match ty {
        WeylType::B => ModuleIndex::Single(lambda.clone()),
        _ => ModuleIndex::conjugate_pair(&lambda),
    };
    let modules: Vec<_> =
        simple_modules(algebra, n)?.into_iter().filter(|m| m.index.partition() == key.partition()).collect();
    let module = modules.first().expect("every partition labels a simple module");
    let shift = reflection_count(ty, n)?;
    let coefficients: Vec<_> = (0..=shift.max(p.degree().unwrap_or(0))).map(|k| p.coeff(k)).collect();
    let mut payload = json!({
        "lambda": lambda,
        "label": if modules.len() > 1 { format!("{}±", lambda) } else { module.index.to_string() },
        "algebra": algebra.name(),
        "module_type": module.module_type,
        "dimension": module.dimension.to_string(),
        "duplicity": modules.len(),
        "fake_degree": coefficients.iter().map(|c| output::integer_json(c)).collect::<Vec<_>>(),
        "shift": shift,
        "palindromic": p.is_palindromic(shift),
        "value_at_one": output::integer_json(&p.eval_at_one()),
        "multiplicity_series": output::series_json(&h),
    });
    if a.oracle {
        let series = oracle_series(ty, flavor, &lambda, a.maxdeg, a.cap)?;
        payload["oracle_series"] = output::series_json(&series);
        payload["oracle_agrees"] = json!(series == h);
    }
    let code = if payload.get("oracle_agrees") == Some(&json!(false)) { 1 } else { 0 };
    match a.out.format {
        Format::Json => a.out.emit_json(Record::new("fake_degree", Some(ty.to_string()), n, payload)),
        Format::Csv => output::write_csv(
            &["key", "value"],
            payload.as_object().expect("object").iter().map(|(k, v)| vec![k.clone(), output::plain(v)]),
        )
        .map_err(|e| usage(e.to_string()))?,
        Format::Text => {
            for (k, v) in payload.as_object().expect("object") {
                println!("{k}: {}", output::plain(v));
            }
        }
    }
    Ok(code)
}

fn oracle_series(
    ty: WeylType,
    flavor: AlgebraFlavor,
    lambda: &Partition,
    maxdeg: usize,
    cap: usize,
) -> Result<TruncatedSeries, Failure> {
    let n = lambda.size();
    let two = Rational::from_integer(2.into());
    Ok(match (ty, flavor) {
        (WeylType::B, AlgebraFlavor::HeckeClifford) => oracle_h_b(lambda, maxdeg, cap)?,
        (WeylType::B, AlgebraFlavor::Minus) => {
            let s = oracle_h_b(lambda, maxdeg, cap)?;
            if n % 2 == 1 {
                s.scale(&two)
            } else {
                s
            }
        }
        (WeylType::D, AlgebraFlavor::Minus) => oracle_h_d(lambda, maxdeg, cap)?,
        _ => {
            let s = restriction_hom_series(WeylType::D, lambda, maxdeg)?;
            if n % 2 == 0 && lambda.is_symmetric() {
                s.scale(&Rational::new(1.into(), 2.into()))
            } else {
                s
            }
        }
    })
}

fn flavor_name(f: AlgebraFlavor) -> &'static str {
    match f {
        AlgebraFlavor::Minus => "minus",
        AlgebraFlavor::HeckeClifford => "hecke_clifford",
    }
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}
