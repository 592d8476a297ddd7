use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use qmf_core::arith::Rational;
use qmf_core::congruence::{density_scan, good_check, predict, verify_congruence, ClaimStatus, GoodVerdict, Witness};
use qmf_core::habiro::{fishburn, hikami_sequence, HikamiParams};
use qmf_core::lfunc::{asymptotic_residual, h_sequence, h_via_stirling, PeriodicChi, Residual, ThetaDatum};

use crate::cache::{CacheLookupError, SequenceCache};
use crate::files::{parse_chi_file, parse_claims_file, ClaimSpec};
use crate::output::Output;
use crate::{ChiArgs, Cli, Command, DatumArgs, Generator, HikamiArgs, Method, SequenceArgs};

/// Process outcome: 0 success, 1 a check was refuted, 2 invalid input.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Exit {
    Success,
    Refuted,
    Invalid,
}

impl Exit {
    pub fn code(self) -> u8 {
        match self {
            Exit::Success => 0,
            Exit::Refuted => 1,
            Exit::Invalid => 2,
        }
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Invalid(String),
    #[error(transparent)]
    Core(#[from] qmf_core::Error),
    #[error(transparent)]
    Io(#[from] io::Error),
}

type CmdResult = Result<Exit, CliError>;

fn invalid(msg: impl Into<String>) -> CliError {
    CliError::Invalid(msg.into())
}

/// Runs one command, writing results to `out` and diagnostics to stderr.
pub fn run<W: Write>(cli: &Cli, out: W) -> Exit {
    let mut out = Output::new(cli.format, out);
    match dispatch(cli, &mut out) {
        Ok(exit) => exit,
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => Exit::Success,
        Err(e) => {
            eprintln!("error: {e}");
            Exit::Invalid
        }
    }
}

fn dispatch<W: Write>(cli: &Cli, out: &mut Output<W>) -> CmdResult {
    match &cli.command {
        Command::Fishburn { count } => {
            let values = sequence(cli, Generator::Fishburn, 1, 0, *count as usize)?;
            print_sequence(out, "fishburn", &values)
        }
        Command::Hikami { params, count } => {
            let values = sequence(cli, Generator::Hikami, params.m, params.alpha, *count as usize)?;
            print_sequence(out, "hikami", &values)
        }
        Command::Hsequence { datum, count, method } => {
            cmd_hsequence(out, &resolve_datum(datum)?, *count as usize, *method)
        }
        Command::Predict { datum, pmax } => cmd_predict(out, &resolve_datum(datum)?, *pmax),
        Command::Verify {
            claims_file,
            p,
            big_a,
            big_b,
            source,
            nmax,
        } => {
            let claims = match (claims_file, p, big_a, big_b) {
                (Some(path), ..) => {
                    parse_claims_file(&read(path)?).map_err(|e| invalid(format!("{}: {e}", path.display())))?
                }
                (None, Some(p), Some(a), Some(b)) => {
                    let claim = ClaimSpec { p: *p, a: *a, b: *b };
                    claim.validate().map_err(invalid)?;
                    vec![claim]
                }
                _ => return Err(invalid("give --claims-file or all of --p, --A, --B")),
            };
            cmd_verify(cli, out, &claims, source, *nmax)
        }
        Command::Goodcheck { chi } => cmd_goodcheck(
            out,
            &resolve_chi(chi)?.ok_or_else(|| invalid("give --chi-file or --chi"))?,
        ),
        Command::Density { a, b, pmax } => cmd_density(out, *a, *b, *pmax),
        Command::Strange { params, count } => cmd_strange(cli, out, params, *count as usize),
        Command::Asymptotic {
            datum,
            t,
            terms,
            precision,
        } => cmd_asymptotic(out, &resolve_datum(datum)?, &parse_rational(t)?, *terms, *precision),
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| invalid(format!("{}: {e}", path.display())))
}

fn default_cache_dir() -> Option<PathBuf> {
    std::env::var_os("HOME").map(|home| PathBuf::from(home).join(".qmf-cache"))
}

fn sequence(cli: &Cli, generator: Generator, m: usize, alpha: usize, count: usize) -> Result<Vec<BigInt>, CliError> {
    let id = match generator {
        Generator::Fishburn => "fishburn".to_string(),
        Generator::Hikami => HikamiParams::new(m, alpha)?.id(),
    };
    let compute = |n: usize| match generator {
        Generator::Fishburn => fishburn(n),
        Generator::Hikami => hikami_sequence(m, alpha, n),
    };
    let dir = if cli.no_cache {
        None
    } else {
        cli.cache_dir.clone().or_else(default_cache_dir)
    };
    let Some(dir) = dir else {
        return Ok(compute(count)?);
    };
    SequenceCache::new(dir)
        .get_or_compute(&id, count, compute)
        .map_err(|e| match e {
            CacheLookupError::Compute(e) => CliError::Core(e),
            CacheLookupError::Cache(e) => invalid(e.to_string()),
        })
}

fn print_sequence<W: Write>(out: &mut Output<W>, kind: &str, values: &[BigInt]) -> CmdResult {
    let rows: Vec<Vec<String>> = values
        .iter()
        .enumerate()
        .map(|(n, v)| vec![n.to_string(), v.to_string()])
        .collect();
    out.table(kind, &["n", "value"], &rows)?;
    Ok(Exit::Success)
}

fn parse_hikami_name(name: &str) -> Option<(usize, usize)> {
    let rest = name.strip_prefix("hikami-")?;
    let (m, alpha) = rest.split_once('-')?;
    Some((m.parse().ok()?, alpha.parse().ok()?))
}

fn named_chi(name: &str) -> Result<PeriodicChi, CliError> {
    if name == "chi12" {
        return Ok(PeriodicChi::chi12());
    }
    let (m, alpha) = parse_hikami_name(name).ok_or_else(|| invalid(format!("unknown character {name:?}")))?;
    HikamiParams::new(m, alpha)?;
    Ok(PeriodicChi::hikami(m, alpha))
}

fn resolve_chi(args: &ChiArgs) -> Result<Option<PeriodicChi>, CliError> {
    if let Some(path) = &args.chi_file {
        let chi = parse_chi_file(&read(path)?).map_err(|e| invalid(format!("{}: {e}", path.display())))?;
        return Ok(Some(chi));
    }
    args.chi.as_deref().map(named_chi).transpose()
}

fn resolve_datum(args: &DatumArgs) -> Result<ThetaDatum, CliError> {
    if let Some(name) = &args.datum {
        if name == "fishburn" {
            return Ok(ThetaDatum::fishburn());
        }
        let (m, alpha) = parse_hikami_name(name).ok_or_else(|| invalid(format!("unknown datum {name:?}")))?;
        return Ok(ThetaDatum::hikami(m, alpha)?);
    }
    let (Some(a), Some(b), Some(chi)) = (args.a, args.b, resolve_chi(&args.chi)?) else {
        return Err(invalid("give --datum, or --a, --b and a character"));
    };
    Ok(ThetaDatum::new(a, b, chi)?)
}

fn parse_rational(text: &str) -> Result<Rational, CliError> {
    let bad = || invalid(format!("{text:?} is not a rational number"));
    let (num, den) = text.split_once('/').unwrap_or((text, "1"));
    let num: BigInt = num.trim().parse().map_err(|_| bad())?;
    let den: BigInt = den.trim().parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

fn cmd_hsequence<W: Write>(out: &mut Output<W>, d: &ThetaDatum, count: usize, method: Method) -> CmdResult {
    let kind = "hsequence";
    match method {
        Method::Lvalue | Method::Stirling => {
            let h = if method == Method::Lvalue {
                h_sequence(d, count)
            } else {
                h_via_stirling(d, count)
            };
            let rows: Vec<Vec<String>> = h
                .values
                .iter()
                .enumerate()
                .map(|(n, v)| vec![n.to_string(), v.to_string()])
                .collect();
            out.table(kind, &["n", "value"], &rows)?;
            Ok(Exit::Success)
        }
        Method::Both => {
            let (l, s) = (h_sequence(d, count), h_via_stirling(d, count));
            let mut agree = true;
            let rows: Vec<Vec<String>> = l
                .values
                .iter()
                .zip(&s.values)
                .enumerate()
                .map(|(n, (x, y))| {
                    let diff = x - y;
                    agree &= diff.is_zero();
                    vec![n.to_string(), x.to_string(), y.to_string(), diff.to_string()]
                })
                .collect();
            out.table(kind, &["n", "lvalue", "stirling", "difference"], &rows)?;
            Ok(if agree { Exit::Success } else { Exit::Refuted })
        }
    }
}

fn cmd_predict<W: Write>(out: &mut Output<W>, d: &ThetaDatum, pmax: u64) -> CmdResult {
    if !good_check(d.chi()).map(|v| v.is_good()).unwrap_or(false) {
        eprintln!("warning: the character is not a good function; these claims carry no guarantee");
    }
    let claims = predict(d, pmax)?;
    let rows: Vec<Vec<String>> = claims
        .iter()
        .map(|c| {
            vec![
                c.p.to_string(),
                c.b.to_string(),
                c.source.to_string(),
                "predicted".into(),
            ]
        })
        .collect();
    out.table("claim", &["p", "B", "source", "status"], &rows)?;
    Ok(Exit::Success)
}

fn witness_cells(w: Option<&Witness>) -> Vec<String> {
    match w {
        Some(w) => vec![
            w.n.to_string(),
            w.index.to_string(),
            w.value.clone(),
            w.valuation.to_string(),
        ],
        None => vec![String::new(); 4],
    }
}

fn cmd_verify<W: Write>(
    cli: &Cli,
    out: &mut Output<W>,
    claims: &[ClaimSpec],
    source: &SequenceArgs,
    nmax: Option<u64>,
) -> CmdResult {
    let count = source.count as usize;
    let seq = sequence(cli, source.generator, source.m, source.alpha, count)?;
    let mut exit = Exit::Success;
    let mut rows = Vec::new();
    for claim in claims {
        let pa = claim.p.pow(claim.a);
        let reach = nmax.unwrap_or((count as u64 - 1 + claim.b) / pa);
        if reach == 0 {
            return Err(invalid(format!(
                "{count} terms reach no n for p={} A={} B={}; raise --count",
                claim.p, claim.a, claim.b
            )));
        }
        let status = verify_congruence(&seq, claim.p, claim.a, claim.b, reach)?;
        let (label, witness) = match &status {
            ClaimStatus::Refuted { witness } => {
                exit = Exit::Refuted;
                ("refuted", Some(witness))
            }
            _ => ("verified", None),
        };
        let mut row = vec![
            claim.p.to_string(),
            claim.a.to_string(),
            claim.b.to_string(),
            reach.to_string(),
            label.into(),
        ];
        row.extend(witness_cells(witness));
        rows.push(row);
    }
    out.table(
        "verification",
        &["p", "A", "B", "nmax", "status", "n", "index", "value", "valuation"],
        &rows,
    )?;
    Ok(exit)
}

fn cmd_goodcheck<W: Write>(out: &mut Output<W>, chi: &PeriodicChi) -> CmdResult {
    match good_check(chi)? {
        GoodVerdict::Good(d) => {
            out.summary(
                "goodcheck",
                &[("verdict", "good".into()), ("period", d.period.to_string())],
            )?;
            let rows: Vec<Vec<String>> = d
                .pairs
                .iter()
                .map(|p| vec![p.u.to_string(), p.v.to_string(), p.c.to_string()])
                .collect();
            out.table("good-pair", &["u", "v", "C"], &rows)?;
        }
        GoodVerdict::NotGood { divisor, plus, minus } => {
            out.summary(
                "goodcheck",
                &[
                    ("verdict", "not good".into()),
                    ("divisor", divisor.to_string()),
                    ("plus", plus.to_string()),
                    ("minus", minus.to_string()),
                ],
            )?;
        }
    }
    Ok(Exit::Success)
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn cmd_density<W: Write>(out: &mut Output<W>, a: i64, b: i64, pmax: u64) -> CmdResult {
    if b == 0 {
        return Err(invalid("b must be nonzero"));
    }
    let r = density_scan(a, b, pmax)?;
    out.summary(
        "density",
        &[
            ("pmax", r.pmax.to_string()),
            ("discriminant", r.discriminant.to_string()),
            ("primes", r.considered.to_string()),
            ("nonresidue_primes", r.nonresidue_primes.len().to_string()),
            ("fraction", format!("{:.6}", r.fraction)),
            ("modulus", r.modulus.to_string()),
            ("nonresidue_classes", join(&r.nonresidue_classes)),
            ("half_density_expected", r.half_density_expected.to_string()),
        ],
    )?;
    Ok(Exit::Success)
}

fn cmd_strange<W: Write>(cli: &Cli, out: &mut Output<W>, params: &HikamiArgs, count: usize) -> CmdResult {
    let d = ThetaDatum::hikami(params.m, params.alpha)?;
    let xi = sequence(cli, Generator::Hikami, params.m, params.alpha, count)?;
    let h = h_sequence(&d, count);
    let constant = &h.values[0] / Rational::from_integer(xi[0].clone());
    let max_deviation = h
        .values
        .iter()
        .zip(&xi)
        .map(|(hv, x)| (hv - &constant * Rational::from_integer(x.clone())).abs())
        .max()
        .unwrap_or_else(Rational::zero);
    out.summary(
        "strange",
        &[
            ("m", params.m.to_string()),
            ("alpha", params.alpha.to_string()),
            ("count", count.to_string()),
            ("constant", constant.to_string()),
            ("max_deviation", max_deviation.to_string()),
        ],
    )?;
    Ok(if max_deviation.is_zero() {
        Exit::Success
    } else {
        Exit::Refuted
    })
}

fn cmd_asymptotic<W: Write>(
    out: &mut Output<W>,
    d: &ThetaDatum,
    t: &Rational,
    terms: usize,
    precision: u32,
) -> CmdResult {
    let r = asymptotic_residual(d, t, terms, precision)?;
    let sci = |x: &Rational| format!("{:.6e}", num_traits::ToPrimitive::to_f64(x).unwrap_or(f64::NAN));
    let (status, value, bound, cut) = match &r {
        Residual::Resolved {
            value,
            error_bound,
            cut_at,
        } => ("resolved", sci(value), sci(error_bound), *cut_at),
        Residual::Indeterminate { error_bound, cut_at } => ("indeterminate", String::new(), sci(error_bound), *cut_at),
    };
    out.summary(
        "asymptotic",
        &[
            ("t", t.to_string()),
            ("terms", terms.to_string()),
            ("precision", precision.to_string()),
            ("status", status.into()),
            ("residual", value),
            ("error_bound", bound),
            ("cut_at", cut.to_string()),
        ],
    )?;
    Ok(Exit::Success)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("1/50").unwrap(), Rational::new(1.into(), 50.into()));
        assert_eq!(parse_rational("-3").unwrap(), Rational::from_integer((-3).into()));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn hikami_names() {
        assert_eq!(parse_hikami_name("hikami-2-0"), Some((2, 0)));
        assert_eq!(parse_hikami_name("hikami-2"), None);
        assert!(named_chi("hikami-2-5").is_err());
        assert_eq!(named_chi("chi12").unwrap(), PeriodicChi::chi12());
    }
}
