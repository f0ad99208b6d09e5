//! The five subcommands.

use std::io::Write;
use std::time::Instant;

use charkit::lie::{eta_decompose, order2_element, Family, GroupId};
use charkit::oracle::{char_at, g2_char_curve, weyl_dim};
use charkit::order2::{theta_g2_c2, theta_gl, theta_so_even, theta_so_odd, theta_sp, Order2Result};
use num_rational::BigRational;

use crate::args::{EvalArgs, EvalFormat, Method, ReportFormat, TableArgs, VerifyArgs, WeightArgs};
use crate::engine::{evaluate_case, generate_cases, run_cases, CaseSpec, Fault, SweepBounds};
use crate::parse;
use crate::records::{
    rational_string, render_factors, sign_of, split_csv_row, table_csv_row, verify_csv_row,
    CaseRecord, Summary, VerifyReport, TABLE_HEADER, VERIFY_HEADER,
};
use crate::{EXIT_MISMATCH, EXIT_OK};

type CmdResult = Result<i32, String>;

fn eval_spec(args: &EvalArgs) -> Result<CaseSpec, String> {
    let family = parse::parse_family(&args.group)?;
    if family == Family::G2 {
        let (k, l) = match (&args.k_l, &args.lambda) {
            (Some(kl), _) => parse::parse_kl(kl)?,
            (None, Some(lam)) => {
                let (k, l) = parse::parse_kl(lam)?;
                (k, l)
            }
            (None, None) => return Err("g2 needs --k-l K,L".into()),
        };
        return Ok(CaseSpec {
            family,
            rank: 2,
            lambda_doubled: vec![2 * k as i64, 2 * l as i64],
            k: 1,
        });
    }
    let lambda_str = args.lambda.as_ref().ok_or("--lambda is required")?;
    let lambda = parse::parse_lambda(lambda_str)?;
    let group = parse::parse_group(family, args.rank, lambda.len())?;
    let k = args.k.ok_or("--k is required for classical families")?;
    Ok(CaseSpec {
        family,
        rank: group.rank,
        lambda_doubled: lambda.to_doubled_i64(),
        k,
    })
}

fn closed_result(spec: &CaseSpec) -> Result<Order2Result, String> {
    let lam = spec.lambda();
    let r = match spec.family {
        Family::Gl => theta_gl(spec.rank, &lam, spec.k),
        Family::Sp => theta_sp(spec.rank, &lam, spec.k),
        Family::SoEven => theta_so_even(spec.rank, &lam, spec.k),
        Family::SoOdd => theta_so_odd(spec.rank, &lam, spec.k),
        Family::G2 => Ok(theta_g2_c2(
            (spec.lambda_doubled[0] / 2) as u32,
            (spec.lambda_doubled[1] / 2) as u32,
        )),
    };
    r.map_err(|e| e.to_string())
}

fn oracle_value(spec: &CaseSpec) -> Result<BigRational, String> {
    if spec.family == Family::G2 {
        let curve = g2_char_curve(
            (spec.lambda_doubled[0] / 2) as u32,
            (spec.lambda_doubled[1] / 2) as u32,
        )
        .map_err(|e| e.to_string())?;
        return Ok(BigRational::from_integer(curve.eval_at_one()));
    }
    let group = GroupId::new(spec.family, spec.rank);
    let t = order2_element(group, spec.k).map_err(|e| e.to_string())?;
    char_at(group, &spec.lambda(), &t).map_err(|e| e.to_string())
}

pub fn cmd_eval(args: &EvalArgs) -> CmdResult {
    let spec = eval_spec(args)?;
    let closed = if args.method != Method::Oracle {
        Some(closed_result(&spec)?)
    } else {
        None
    };
    let oracle = if args.method != Method::Closed {
        Some(oracle_value(&spec)?)
    } else {
        None
    };

    match args.format {
        EvalFormat::Text => {
            println!("group: {}{}", spec.family.as_str(), spec.rank);
            println!("lambda: {}", spec.lambda());
            println!("k: {}", spec.k);
            if let Some(c) = &closed {
                println!("case: {}", c.case.as_str());
                println!("magnitude: {}", rational_string(&c.magnitude));
                match &c.signed_value {
                    Some(v) => println!("value: {}", rational_string(v)),
                    None => println!(
                        "value: +-{} (sign undetermined)",
                        rational_string(&c.magnitude)
                    ),
                }
                if let Some(p) = c.two_power {
                    println!("two_power: {}", p);
                }
                if let Some(p) = c.denominator_power {
                    println!("denominator_power: {}", p);
                }
                if !c.factors.is_empty() {
                    println!("factors: {}", render_factors(c));
                }
                if let Some(terms) = &c.terms {
                    println!("terms: {}", terms.len());
                }
            }
            if let Some(o) = &oracle {
                println!("oracle: {}", rational_string(o));
            }
            if let (Some(c), Some(o)) = (&closed, &oracle) {
                use num_traits::Signed;
                println!("match: {}", c.magnitude == o.abs());
            }
        }
        EvalFormat::Json | EvalFormat::Csv => {
            let record = build_record(&spec, closed.as_ref(), oracle.as_ref());
            if args.format == EvalFormat::Json {
                println!("{}", serde_json::to_string_pretty(&record).unwrap());
            } else {
                println!("{}", TABLE_HEADER);
                println!("{}", table_csv_row(&record));
            }
        }
    }
    Ok(EXIT_OK)
}

fn build_record(
    spec: &CaseSpec,
    closed: Option<&Order2Result>,
    oracle: Option<&BigRational>,
) -> CaseRecord {
    use num_traits::Signed;
    let lambda = if spec.family == Family::G2 {
        format!(
            "{},{}",
            spec.lambda_doubled[0] / 2,
            spec.lambda_doubled[1] / 2
        )
    } else {
        spec.lambda().to_string()
    };
    CaseRecord {
        family: spec.family.as_str().to_string(),
        rank: spec.rank,
        lambda,
        k: spec.k,
        case: closed
            .map(|c| c.case.as_str().to_string())
            .unwrap_or_default(),
        magnitude: closed
            .map(|c| rational_string(&c.magnitude))
            .unwrap_or_default(),
        oracle_value: oracle.map(rational_string).unwrap_or_default(),
        matched: match (closed, oracle) {
            (Some(c), Some(o)) => c.magnitude == o.abs(),
            _ => true,
        },
        oracle_sign: oracle.map(sign_of).unwrap_or(0),
        factors: closed.map(render_factors).unwrap_or_default(),
    }
}

fn write_output(path: Option<&std::path::Path>, content: &str) -> Result<(), String> {
    match path {
        Some(p) => {
            let mut f = std::fs::File::create(p)
                .map_err(|e| format!("cannot write {}: {e}", p.display()))?;
            f.write_all(content.as_bytes())
                .map_err(|e| format!("write failed: {e}"))?;
            Ok(())
        }
        None => {
            println!("{content}");
            Ok(())
        }
    }
}

fn default_jobs(requested: Option<usize>) -> usize {
    requested.unwrap_or_else(|| {
        std::thread::available_parallelism()
            .map(|n| n.get())
            .unwrap_or(1)
    })
}

pub fn cmd_verify(args: &VerifyArgs) -> CmdResult {
    let families = parse::parse_families(&args.families)?;
    let fault = args.inject_fault.as_deref().map(Fault::parse).transpose()?;
    let bounds = SweepBounds {
        max_rank: args.max_rank,
        max_entry: args.max_entry,
        max_kl: args.max_kl,
        samples: args.samples,
        sample_max_entry: args.sample_max_entry,
        seed: args.seed,
    };
    if args.max_rank < 2 && families.iter().any(|f| *f != Family::G2) {
        return Err("--max-rank must be at least 2 for classical families".into());
    }

    let started = Instant::now();
    let cases = generate_cases(&families, &bounds);
    let records = run_cases(&cases, default_jobs(args.jobs), fault);
    let mismatches: Vec<&CaseRecord> = records.iter().filter(|r| !r.matched).collect();
    let summary = Summary {
        cases: records.len(),
        matches: records.len() - mismatches.len(),
        mismatches: mismatches.len(),
        wall_ms: started.elapsed().as_millis(),
        seed: args.seed,
        families: families.iter().map(|f| f.as_str().to_string()).collect(),
    };

    eprintln!(
        "verified {} cases in {} ms: {} matched, {} mismatched",
        summary.cases, summary.wall_ms, summary.matches, summary.mismatches
    );
    if let Some(first) = mismatches.first() {
        eprintln!(
            "counterexample: family={} rank={} lambda={} k={} case={} closed={} oracle={}",
            first.family,
            first.rank,
            first.lambda,
            first.k,
            first.case,
            first.magnitude,
            first.oracle_value
        );
    }

    let report = VerifyReport { summary, records };
    let content = match args.format {
        ReportFormat::Json => serde_json::to_string_pretty(&report).unwrap(),
        ReportFormat::Csv => {
            let mut out = String::from(VERIFY_HEADER);
            for r in &report.records {
                out.push('\n');
                out.push_str(&verify_csv_row(r));
            }
            out
        }
    };
    write_output(args.out.as_deref(), &content)?;
    Ok(if report.summary.mismatches == 0 {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    })
}

pub fn cmd_table(args: &TableArgs) -> CmdResult {
    let families = parse::parse_families(&args.families)?;
    let bounds = SweepBounds {
        max_rank: args.max_rank,
        max_entry: args.max_entry,
        max_kl: args.max_kl,
        samples: 0,
        sample_max_entry: 0,
        seed: 0,
    };
    let cases = generate_cases(&families, &bounds);
    let records = run_cases(&cases, default_jobs(args.jobs), None);
    let content = match args.format {
        ReportFormat::Json => serde_json::to_string_pretty(&records).unwrap(),
        ReportFormat::Csv => {
            let mut out = String::from(TABLE_HEADER);
            for r in &records {
                out.push('\n');
                out.push_str(&table_csv_row(r));
            }
            out
        }
    };
    write_output(args.out.as_deref(), &content)?;
    Ok(EXIT_OK)
}

/// Re-evaluate a table/verify CSV row through the eval path; used by the
/// round-trip tests and handy for spot checks.
pub fn record_from_csv_row(row: &str) -> Result<CaseRecord, String> {
    let fields = split_csv_row(row);
    if fields.len() < 7 {
        return Err(format!("short row: {row:?}"));
    }
    let family = parse::parse_family(&fields[0])?;
    let rank: usize = fields[1].parse().map_err(|_| "bad rank".to_string())?;
    let k: usize = fields[3].parse().map_err(|_| "bad k".to_string())?;
    let lambda_doubled = if family == Family::G2 {
        let (kk, ll) = parse::parse_kl(&fields[2])?;
        vec![2 * kk as i64, 2 * ll as i64]
    } else {
        parse::parse_lambda(&fields[2])?.to_doubled_i64()
    };
    let spec = CaseSpec {
        family,
        rank,
        lambda_doubled,
        k,
    };
    Ok(evaluate_case(&spec, None))
}

pub fn cmd_dim(args: &WeightArgs) -> CmdResult {
    let family = parse::parse_family(&args.group)?;
    let lambda = parse::parse_lambda(&args.lambda)?;
    let group = parse::parse_group(family, args.rank, lambda.len())?;
    let dim = weyl_dim(group, &lambda).map_err(|e| e.to_string())?;
    println!("{dim}");
    Ok(EXIT_OK)
}

pub fn cmd_eta(args: &WeightArgs) -> CmdResult {
    let family = parse::parse_family(&args.group)?;
    let lambda = parse::parse_lambda(&args.lambda)?;
    let group = parse::parse_group(family, args.rank, lambda.len())?;
    let split = eta_decompose(group, &lambda).map_err(|e| e.to_string())?;
    println!("eta0: {}", split.eta0());
    println!("eta1: {}", split.eta1());
    Ok(EXIT_OK)
}
