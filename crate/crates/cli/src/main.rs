//! Command-line front end: ingest S-box tables or family specs, emit
//! analysis tables, indicators and spectra, and run the verification
//! suites.
//!
//! Exit codes: 0 on success, 1 on usage or input errors, 2 when a
//! verification suite reports a failing check.

use std::fs;
use std::io::Read;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use vbf_core::families::{FamilyKind, FamilySpec};
use vbf_core::tables::{act_from_ddt, autocorrelation_spectrum, ddt, dlct, indicators};
use vbf_core::transforms::{walsh_table, SignedTable};
use vbf_core::verify::{parse_suites, run_suite, SuiteReport};
use vbf_core::{Convention, FieldSpec, Vbf};

#[derive(Parser)]
#[command(
    name = "vbf",
    version,
    about = "Exact cryptanalytic tables for S-boxes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute tables, indicators and the autocorrelation spectrum of one
    /// function.
    Analyze(AnalyzeArgs),
    /// Print the optimal 4-bit S-box class representatives.
    Catalog(CatalogArgs),
    /// Run the identity/family/catalog/bound verification suites.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Truth-table file; `-` reads standard input.
    #[arg(long, conflicts_with = "family")]
    sbox: Option<String>,
    /// Family spec such as `gold:i=2`, `kasami:i=2`, `inverse`, `welch`,
    /// `bl:k=2`, `quad:seed=7`, `monomial:d=19`; needs --n.
    #[arg(long)]
    family: Option<String>,
    /// Input dimension (inferred from the table length when omitted).
    #[arg(long)]
    n: Option<u32>,
    /// Output dimension (inferred from the widest entry when omitted).
    #[arg(long)]
    m: Option<u32>,
    /// Field modulus as a hex or decimal integer, e.g. 0x11b.
    #[arg(long)]
    modulus: Option<String>,
    /// Tables to emit.
    #[arg(long = "table", value_enum)]
    tables: Vec<TableChoice>,
    /// Replace the function by its compositional inverse first.
    #[arg(long)]
    inverse: bool,
    /// Mask pairing; defaults to trace for families, dot for raw tables.
    #[arg(long, value_enum)]
    convention: Option<ConventionChoice>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write here instead of standard output.
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct CatalogArgs {
    /// Single entry to print; all sixteen when omitted.
    #[arg(long)]
    index: Option<usize>,
    /// Write here instead of standard output.
    #[arg(long)]
    out: Option<String>,
}

#[derive(Args)]
struct VerifyArgs {
    /// identities, families, catalog, bounds or all.
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Largest dimension the randomized checks draw.
    #[arg(long = "max-n", default_value_t = 8)]
    max_n: u32,
    /// Write here instead of standard output.
    #[arg(long)]
    out: Option<String>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableChoice {
    Ddt,
    Lat,
    Act,
    Dlct,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ConventionChoice {
    Dot,
    Trace,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<u8, String> {
    match cli.command {
        Command::Analyze(args) => analyze(args),
        Command::Catalog(args) => catalog_cmd(args),
        Command::Verify(args) => verify_cmd(args),
    }
}

fn parse_int(text: &str) -> Result<u64, String> {
    let parsed = match text.strip_prefix("0x").or_else(|| text.strip_prefix("0X")) {
        Some(hex) => u64::from_str_radix(hex, 16),
        None => text.parse(),
    };
    parsed.map_err(|_| format!("`{text}` is not an integer"))
}

fn parse_family(text: &str) -> Result<(String, Vec<(String, u64)>), String> {
    let mut parts = text.splitn(2, ':');
    let name = parts.next().unwrap_or_default().to_string();
    let mut params = Vec::new();
    if let Some(rest) = parts.next() {
        for piece in rest.split(',') {
            let (key, value) = piece
                .split_once('=')
                .ok_or_else(|| format!("malformed family parameter `{piece}`"))?;
            params.push((key.to_string(), parse_int(value)?));
        }
    }
    Ok((name, params))
}

fn family_kind(text: &str) -> Result<FamilyKind, String> {
    let (name, params) = parse_family(text)?;
    let one = |key: &str| -> Result<u64, String> {
        params
            .iter()
            .find(|(k, _)| k == key)
            .map(|&(_, v)| v)
            .ok_or_else(|| format!("family `{name}` needs parameter `{key}`"))
    };
    match name.as_str() {
        "gold" => Ok(FamilyKind::Gold {
            i: one("i")? as u32,
        }),
        "kasami" => Ok(FamilyKind::Kasami {
            i: one("i")? as u32,
        }),
        "welch" => Ok(FamilyKind::Welch),
        "inverse" => Ok(FamilyKind::Inverse),
        "bl" => Ok(FamilyKind::BrackenLeander {
            k: one("k")? as u32,
        }),
        "quad" => Ok(FamilyKind::RandomQuadratic { seed: one("seed")? }),
        "monomial" => Ok(FamilyKind::Monomial {
            exponent: one("d")?,
        }),
        other => Err(format!("unknown family `{other}`")),
    }
}

fn read_source(path: &str) -> Result<String, String> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .map_err(|e| format!("reading standard input: {e}"))?;
        Ok(text)
    } else {
        fs::read_to_string(path).map_err(|e| format!("reading {path}: {e}"))
    }
}

fn write_output(out: &Option<String>, text: &str) -> Result<(), String> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| format!("writing {path}: {e}")),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

struct Subject {
    function: Vbf,
    convention: Convention,
    source: String,
    seed: Option<u64>,
}

fn build_subject(args: &AnalyzeArgs) -> Result<Subject, String> {
    let explicit_field = |n: u32| -> Result<FieldSpec, String> {
        match &args.modulus {
            Some(text) => FieldSpec::new(n, parse_int(text)? as u32).map_err(|e| e.to_string()),
            None => FieldSpec::with_default_modulus(n).map_err(|e| e.to_string()),
        }
    };

    let (function, source, seed, default_conv) = match (&args.sbox, &args.family) {
        (Some(path), None) => {
            let text = read_source(path)?;
            let f = Vbf::parse(&text, args.n, args.m).map_err(|e| e.to_string())?;
            (f, format!("sbox:{path}"), None, ConventionChoice::Dot)
        }
        (None, Some(spec_text)) => {
            let n = args.n.ok_or_else(|| "--family needs --n".to_string())?;
            let kind = family_kind(spec_text)?;
            let spec = FamilySpec::new(kind, explicit_field(n)?).map_err(|e| e.to_string())?;
            let seed = match kind {
                FamilyKind::RandomQuadratic { seed } => Some(seed),
                _ => None,
            };
            (
                spec.build(),
                format!("family:{}", kind.label()),
                seed,
                ConventionChoice::Trace,
            )
        }
        _ => return Err("exactly one of --sbox or --family is required".into()),
    };

    let function = if args.inverse {
        function.inverse().map_err(|e| e.to_string())?
    } else {
        function
    };

    let convention = match args.convention.unwrap_or(default_conv) {
        ConventionChoice::Dot => Convention::Dot,
        ConventionChoice::Trace => {
            if function.n() != function.m() {
                return Err("trace convention needs n = m".into());
            }
            Convention::Trace(explicit_field(function.n())?)
        }
    };
    Ok(Subject {
        function,
        convention,
        source,
        seed,
    })
}

fn analyze(args: AnalyzeArgs) -> Result<u8, String> {
    let subject = build_subject(&args)?;
    let f = &subject.function;
    let conv = &subject.convention;

    let mut wanted = args.tables.clone();
    if wanted.contains(&TableChoice::All) {
        wanted = vec![
            TableChoice::Ddt,
            TableChoice::Lat,
            TableChoice::Act,
            TableChoice::Dlct,
        ];
    }
    wanted.dedup();
    let computed: Vec<(&'static str, SignedTable)> = wanted
        .iter()
        .map(|choice| -> Result<_, String> {
            let table = match choice {
                TableChoice::Ddt => ("ddt", ddt(f)),
                TableChoice::Lat => ("lat", walsh_table(f, conv).map_err(|e| e.to_string())?),
                TableChoice::Act => ("act", act_from_ddt(f, conv).map_err(|e| e.to_string())?),
                TableChoice::Dlct => ("dlct", dlct(f, conv).map_err(|e| e.to_string())?),
                TableChoice::All => unreachable!("expanded above"),
            };
            Ok(table)
        })
        .collect::<Result<_, _>>()?;

    if args.format == Format::Csv {
        let blocks: Vec<String> = computed.iter().map(|(_, t)| t.to_csv()).collect();
        return write_output(&args.out, blocks.join("\n").trim_end()).map(|()| 0);
    }

    let modulus = match conv {
        Convention::Trace(field) => serde_json::Value::from(format!("{:#x}", field.modulus())),
        Convention::Dot => serde_json::Value::Null,
    };
    let mut tables = serde_json::Map::new();
    for (name, table) in &computed {
        tables.insert(name.to_string(), table.to_json());
    }
    let report = serde_json::json!({
        "meta": {
            "n": f.n(),
            "m": f.m(),
            "convention": conv.label(),
            "modulus": modulus,
            "seed": subject.seed,
            "source": subject.source,
            "inverse": args.inverse,
        },
        "tables": tables,
        "indicators": indicators(f),
        "spectra": {
            "autocorrelation": autocorrelation_spectrum(f).to_json(),
        },
    });
    write_output(&args.out, &serde_json::to_string_pretty(&report).unwrap()).map(|()| 0)
}

fn catalog_cmd(args: CatalogArgs) -> Result<u8, String> {
    let entry_json = |entry: vbf_core::catalog::CatalogEntry| {
        serde_json::json!({
            "index": entry.index,
            "table": entry.table.table(),
            "spectrum": entry.expected_spectrum.to_json(),
        })
    };
    let value = match args.index {
        Some(index) => entry_json(vbf_core::catalog::get(index).map_err(|e| e.to_string())?),
        None => serde_json::Value::from(
            vbf_core::catalog::entries()
                .map(entry_json)
                .collect::<Vec<_>>(),
        ),
    };
    write_output(&args.out, &serde_json::to_string_pretty(&value).unwrap()).map(|()| 0)
}

fn suite_exit_code(reports: &[SuiteReport]) -> u8 {
    if reports.iter().all(SuiteReport::all_pass) {
        0
    } else {
        2
    }
}

fn verify_cmd(args: VerifyArgs) -> Result<u8, String> {
    let suites =
        parse_suites(&args.suite).ok_or_else(|| format!("unknown suite `{}`", args.suite))?;
    let reports: Vec<SuiteReport> = suites
        .into_iter()
        .map(|suite| run_suite(suite, args.seed, args.max_n))
        .collect();
    let code = suite_exit_code(&reports);
    let value = serde_json::json!({
        "reports": reports,
        "all_pass": code == 0,
    });
    write_output(&args.out, &serde_json::to_string_pretty(&value).unwrap())?;
    Ok(code)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_strings_parse() {
        assert_eq!(family_kind("gold:i=2").unwrap(), FamilyKind::Gold { i: 2 });
        assert_eq!(family_kind("inverse").unwrap(), FamilyKind::Inverse);
        assert_eq!(
            family_kind("quad:seed=9").unwrap(),
            FamilyKind::RandomQuadratic { seed: 9 }
        );
        assert_eq!(
            family_kind("monomial:d=0x13").unwrap(),
            FamilyKind::Monomial { exponent: 19 }
        );
        assert!(family_kind("gold").is_err());
        assert!(family_kind("gold:i").is_err());
        assert!(family_kind("nope:x=1").is_err());
    }

    #[test]
    fn exit_code_mapping() {
        let pass = SuiteReport {
            suite: "x".into(),
            seed: 0,
            max_n: 4,
            checks: vec![vbf_core::verify::Check {
                check: "a".into(),
                pass: true,
                details: String::new(),
            }],
        };
        let mut fail = pass.clone();
        fail.checks[0].pass = false;
        assert_eq!(suite_exit_code(&[pass.clone()]), 0);
        assert_eq!(suite_exit_code(&[pass, fail]), 2);
    }
}
