//! Command-line frontend: verify determinant identities, tabulate
//! statistics over a group, and factor single elements.
//!
//! Exit codes: 0 = verified / success, 1 = a verification found a mismatch,
//! 2 = usage or parameter errors.

use clap::{Args, Parser, Subcommand, ValueEnum};
use groupdet::bases::{factor_amaj, factor_colored, factor_dihedral, factor_sym, factor_signed};
use groupdet::colored::{parse_colored, ColoredGroup};
use groupdet::groups::{DihedralGroup, FiniteGroup, SymmetricGroup};
use groupdet::signed::{parse_signed, SignedGroup};
use groupdet::tableaux::Partition;
use groupdet::verify::{verify, Identity, Mode, ModularParams, VerificationReport};
use serde_json::{json, Value};
use std::process::ExitCode;

/// Refuse to print tables beyond this many rows.
const TABLE_SIZE_LIMIT: usize = 10_000;

#[derive(Parser)]
#[command(
    name = "groupdet",
    version,
    about = "Exact and modular checks of weighted group-matrix determinant identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify one determinant identity, exactly or modulo a prime.
    Verify(VerifyArgs),
    /// List a group's elements with their statistics and factorizations.
    Table(TableArgs),
    /// Factor a single element over its canonical basis.
    Factor(FactorArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum IdentityName {
    /// Symmetric group, major index
    Maj,
    /// Colored permutations, flag-major index
    Fmaj,
    /// Colored permutations, bivariate (cmaj, col)
    MajCol,
    /// Colored permutations, bivariate (amaj, col)
    Amaj,
    /// Signed permutations, maj_A with per-value negative markers
    Signed,
    /// Signed permutations, (maj_A, nneg)
    SignedNneg,
    /// Signed permutations, maj_B
    SignedMajb,
    /// Signed permutations, (maj_A, sneg)
    SignedSneg,
    /// Dihedral group, (rotation, reflection)
    Dihedral,
    /// Defining representation of the symmetric group
    Defining,
    /// Per-irreducible determinant factor (or spectral completeness)
    Irrep,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeName {
    Auto,
    Symbolic,
    Modular,
}

#[derive(Args)]
struct VerifyArgs {
    /// Which identity to check.
    identity: IdentityName,
    /// Degree parameter (letters / vertices).
    #[arg(long)]
    n: usize,
    /// Number of colors, for the colored-permutation identities.
    #[arg(long)]
    m: Option<u32>,
    /// Partition for the irrep identity, e.g. "3,1"; omit for the spectral
    /// completeness check.
    #[arg(long)]
    lambda: Option<String>,
    /// Pipeline selection; auto = exact for small groups, modular beyond.
    #[arg(long, value_enum, default_value_t = ModeName::Auto)]
    mode: ModeName,
    /// Prime modulus for the modular pipeline.
    #[arg(long, env = "GROUPDET_PRIME", default_value_t = 2_147_483_647)]
    prime: u64,
    /// Number of random evaluation points.
    #[arg(long, default_value_t = 7)]
    points: usize,
    /// RNG seed for evaluation points.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Emit the full report as JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Family {
    Sym,
    Colored,
    Signed,
    Dihedral,
}

#[derive(Args)]
struct TableArgs {
    /// Which family of groups.
    family: Family,
    /// Degree parameter.
    #[arg(long)]
    n: usize,
    /// Number of colors (colored family only).
    #[arg(long)]
    m: Option<u32>,
    /// Comma-separated statistics to show; defaults to all for the family.
    #[arg(long, value_delimiter = ',')]
    stats: Option<Vec<String>>,
    /// Emit rows as a JSON array.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct FactorArgs {
    /// Which family the element belongs to.
    family: Family,
    /// The element, e.g. 314652 (sym), 1'34''2' (colored), 2'143' (signed).
    element: String,
    /// Number of colors (colored family only).
    #[arg(long)]
    m: Option<u32>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify(args) => run_verify(&args),
        Command::Table(args) => run_table(&args),
        Command::Factor(args) => run_factor(&args),
    }
    .unwrap_or_else(|err| {
        eprintln!("error: {err}");
        ExitCode::from(2)
    })
}

fn run_verify(args: &VerifyArgs) -> Result<ExitCode, String> {
    let identity = build_identity(args)?;
    let mode = match args.mode {
        ModeName::Auto => Mode::Auto,
        ModeName::Symbolic => Mode::Symbolic,
        ModeName::Modular => Mode::Modular,
    };
    let params = ModularParams {
        prime: args.prime,
        points: args.points,
        seed: args.seed,
    };
    let report = verify(&identity, mode, &params).map_err(|e| e.to_string())?;
    if args.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?
        );
    } else {
        print_report(&report);
    }
    Ok(ExitCode::from(exit_code_for(&report)))
}

fn exit_code_for(report: &VerificationReport) -> u8 {
    u8::from(!report.pass)
}

fn build_identity(args: &VerifyArgs) -> Result<Identity, String> {
    let n = args.n;
    let need_m = || {
        args.m
            .ok_or_else(|| "this identity requires --m".to_string())
    };
    let identity = match args.identity {
        IdentityName::Maj => Identity::Maj { n },
        IdentityName::Fmaj => Identity::Fmaj { n, m: need_m()? },
        IdentityName::MajCol => Identity::MajCol { n, m: need_m()? },
        IdentityName::Amaj => Identity::Amaj { n, m: need_m()? },
        IdentityName::Signed => Identity::Signed { n },
        IdentityName::SignedNneg => Identity::SignedNneg { n },
        IdentityName::SignedMajb => Identity::SignedMajB { n },
        IdentityName::SignedSneg => Identity::SignedSneg { n },
        IdentityName::Dihedral => Identity::Dihedral { n },
        IdentityName::Defining => Identity::Defining { n },
        IdentityName::Irrep => {
            let lambda = match &args.lambda {
                Some(s) => Some(s.parse::<Partition>().map_err(|e| e.to_string())?),
                None => None,
            };
            Identity::Irrep { n, lambda }
        }
    };
    if !matches!(args.identity, IdentityName::Irrep) && args.lambda.is_some() {
        return Err("--lambda only applies to the irrep identity".into());
    }
    if identity.m().is_none() && args.m.is_some() {
        return Err("--m does not apply to this identity".into());
    }
    Ok(identity)
}

fn print_report(report: &VerificationReport) {
    let mut header = format!("{} n={}", report.identity, report.params.n);
    if let Some(m) = report.params.m {
        header.push_str(&format!(" m={m}"));
    }
    if let Some(lambda) = &report.params.lambda {
        header.push_str(&format!(" lambda={lambda}"));
    }
    let mode = match (&report.prime, &report.seed, &report.points) {
        (Some(p), Some(s), Some(k)) => {
            format!("{}, prime={p}, seed={s}, points={k}", report.mode)
        }
        _ => report.mode.clone(),
    };
    let outcome = if report.pass { "PASS" } else { "FAIL" };
    println!("{header} [{mode}]: {outcome} in {} ms", report.elapsed_ms);
    if let Some(rhs) = &report.rhs {
        println!("  product: {rhs}");
    }
    if let Some(lhs) = &report.lhs {
        println!("  determinant: {lhs}");
    }
    if let Some(detail) = &report.detail {
        println!("  note: {detail}");
    }
}

fn available_stats(family: Family) -> &'static [&'static str] {
    match family {
        Family::Sym => &["maj"],
        Family::Colored => &["fmaj", "cmaj", "col", "amaj"],
        Family::Signed => &["maj_a", "maj_b", "nneg", "sneg"],
        Family::Dihedral => &["rot", "refl"],
    }
}

fn selected_stats(args: &TableArgs) -> Result<Vec<&'static str>, String> {
    let all = available_stats(args.family);
    match &args.stats {
        None => Ok(all.to_vec()),
        Some(requested) => {
            let mut out = Vec::new();
            for name in requested {
                match all.iter().find(|s| **s == name.as_str()) {
                    Some(s) => {
                        if !out.contains(s) {
                            out.push(*s);
                        }
                    }
                    None => {
                        return Err(format!(
                            "unknown statistic '{name}' for this family; available: {}",
                            all.join(", ")
                        ))
                    }
                }
            }
            Ok(out)
        }
    }
}

fn check_table_size(size: usize) -> Result<(), String> {
    if size > TABLE_SIZE_LIMIT {
        return Err(format!(
            "group has {size} elements, above the table limit of {TABLE_SIZE_LIMIT}"
        ));
    }
    Ok(())
}

/// One table row: rendered element, named statistics, factorization JSON.
struct Row {
    element: String,
    stats: Vec<(&'static str, usize)>,
    factor: Value,
}

fn build_rows(args: &TableArgs, stats: &[&'static str]) -> Result<Vec<Row>, String> {
    if args.n == 0 {
        return Err("--n must be at least 1".into());
    }
    if !matches!(args.family, Family::Colored) && args.m.is_some() {
        return Err("--m only applies to the colored family".into());
    }
    let pick = |pairs: &[(&'static str, usize)], wanted: &[&'static str]| {
        wanted
            .iter()
            .map(|w| {
                pairs
                    .iter()
                    .find(|(name, _)| name == w)
                    .copied()
                    .expect("stat name validated")
            })
            .collect::<Vec<_>>()
    };
    match args.family {
        Family::Sym => {
            let group = SymmetricGroup::new(args.n);
            check_table_size(group.size())?;
            Ok(group
                .enumerate()
                .into_iter()
                .map(|w| Row {
                    element: w.to_string(),
                    stats: pick(&[("maj", w.maj())], stats),
                    factor: json!(factor_sym(&w)),
                })
                .collect())
        }
        Family::Colored => {
            let m = args.m.ok_or("the colored family requires --m")?;
            if m == 0 {
                return Err("--m must be at least 1".into());
            }
            let group = ColoredGroup::new(args.n, m);
            check_table_size(group.size())?;
            Ok(group
                .enumerate()
                .into_iter()
                .map(|g| {
                    let amaj = factor_amaj(&g);
                    Row {
                        element: g.to_string(),
                        stats: pick(
                            &[
                                ("fmaj", g.fmaj()),
                                ("cmaj", g.cmaj()),
                                ("col", g.col()),
                                ("amaj", g.amaj()),
                            ],
                            stats,
                        ),
                        factor: json!({
                            "flag": factor_colored(&g),
                            "alternating": {"c": amaj.c, "d": amaj.d},
                        }),
                    }
                })
                .collect())
        }
        Family::Signed => {
            let group = SignedGroup::new(args.n);
            check_table_size(group.size())?;
            Ok(group
                .enumerate()
                .into_iter()
                .map(|g| {
                    let f = factor_signed(&g);
                    Row {
                        element: g.to_string(),
                        stats: pick(
                            &[
                                ("maj_a", g.maj_a()),
                                ("maj_b", g.maj_b()),
                                ("nneg", g.nneg()),
                                ("sneg", g.sneg()),
                            ],
                            stats,
                        ),
                        factor: json!({"d": f.d, "c": f.c}),
                    }
                })
                .collect())
        }
        Family::Dihedral => {
            if args.n < 3 {
                return Err("the dihedral family requires --n >= 3".into());
            }
            let group = DihedralGroup::new(args.n);
            check_table_size(group.size())?;
            Ok(group
                .enumerate()
                .into_iter()
                .map(|h| {
                    let (rot, refl) = factor_dihedral(&h);
                    Row {
                        element: h.to_string(),
                        stats: pick(&[("rot", rot), ("refl", refl)], stats),
                        factor: json!([rot, refl]),
                    }
                })
                .collect())
        }
    }
}

fn run_table(args: &TableArgs) -> Result<ExitCode, String> {
    let stats = selected_stats(args)?;
    let rows = build_rows(args, &stats)?;
    if args.json {
        let values: Vec<Value> = rows
            .iter()
            .map(|r| {
                let mut obj = serde_json::Map::new();
                obj.insert("element".into(), json!(r.element));
                for (name, value) in &r.stats {
                    obj.insert((*name).into(), json!(value));
                }
                obj.insert("factor".into(), r.factor.clone());
                Value::Object(obj)
            })
            .collect();
        println!(
            "{}",
            serde_json::to_string_pretty(&values).map_err(|e| e.to_string())?
        );
        return Ok(ExitCode::SUCCESS);
    }
    // aligned text output
    let mut headers = vec!["element".to_string()];
    headers.extend(stats.iter().map(|s| s.to_string()));
    headers.push("factor".into());
    let mut table: Vec<Vec<String>> = vec![headers];
    for r in &rows {
        let mut cells = vec![r.element.clone()];
        cells.extend(r.stats.iter().map(|(_, v)| v.to_string()));
        cells.push(compact_json(&r.factor));
        table.push(cells);
    }
    let widths: Vec<usize> = (0..table[0].len())
        .map(|c| table.iter().map(|row| row[c].len()).max().unwrap_or(0))
        .collect();
    for row in &table {
        let line: Vec<String> = row
            .iter()
            .zip(&widths)
            .map(|(cell, w)| format!("{cell:<w$}"))
            .collect();
        println!("{}", line.join("  ").trim_end());
    }
    Ok(ExitCode::SUCCESS)
}

fn compact_json(v: &Value) -> String {
    serde_json::to_string(v).unwrap_or_default()
}

fn run_factor(args: &FactorArgs) -> Result<ExitCode, String> {
    if !matches!(args.family, Family::Colored) && args.m.is_some() {
        return Err("--m only applies to the colored family".into());
    }
    let out = match args.family {
        Family::Sym => {
            let w: groupdet::groups::Permutation =
                args.element.parse().map_err(|e| format!("{e}"))?;
            let c = factor_sym(&w);
            json!({
                "family": "sym",
                "n": w.n(),
                "element": w.to_string(),
                "exponents": c,
                "stats": {"maj": w.maj()},
            })
        }
        Family::Colored => {
            let m = args.m.ok_or("the colored family requires --m")?;
            if m == 0 {
                return Err("--m must be at least 1".into());
            }
            let g = parse_colored(&args.element, m).map_err(|e| format!("{e}"))?;
            let amaj = factor_amaj(&g);
            json!({
                "family": "colored",
                "n": g.n(),
                "m": m,
                "element": g.to_string(),
                "exponents": factor_colored(&g),
                "alternating": {"c": amaj.c, "d": amaj.d},
                "stats": {
                    "fmaj": g.fmaj(),
                    "cmaj": g.cmaj(),
                    "col": g.col(),
                    "amaj": g.amaj(),
                },
            })
        }
        Family::Signed => {
            let g = parse_signed(&args.element).map_err(|e| format!("{e}"))?;
            let f = factor_signed(&g);
            json!({
                "family": "signed",
                "n": g.n(),
                "element": g.to_string(),
                "d": f.d,
                "c": f.c,
                "stats": {
                    "maj_a": g.maj_a(),
                    "maj_b": g.maj_b(),
                    "nneg": g.nneg(),
                    "sneg": g.sneg(),
                },
            })
        }
        Family::Dihedral => {
            return Err(
                "dihedral elements are already in normal form; use `table` to list them".into(),
            );
        }
    };
    println!(
        "{}",
        serde_json::to_string_pretty(&out).map_err(|e| e.to_string())?
    );
    Ok(ExitCode::SUCCESS)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failing_reports_map_to_exit_code_one() {
        let mut report = VerificationReport {
            identity: "maj".into(),
            params: groupdet::verify::ReportParams {
                n: 3,
                m: None,
                lambda: None,
            },
            mode: "symbolic".into(),
            pass: true,
            lhs: None,
            rhs: None,
            prime: None,
            seed: None,
            points: None,
            elapsed_ms: 0,
            detail: None,
        };
        assert_eq!(exit_code_for(&report), 0);
        report.pass = false;
        assert_eq!(exit_code_for(&report), 1);
    }

    #[test]
    fn stat_selection_validates_names() {
        let args = TableArgs {
            family: Family::Signed,
            n: 2,
            m: None,
            stats: Some(vec!["maj_b".into(), "nneg".into()]),
            json: false,
        };
        assert_eq!(selected_stats(&args).unwrap(), vec!["maj_b", "nneg"]);
        let args = TableArgs {
            family: Family::Sym,
            n: 2,
            m: None,
            stats: Some(vec!["fmaj".into()]),
            json: false,
        };
        assert!(selected_stats(&args).unwrap_err().contains("unknown statistic"));
    }
}
