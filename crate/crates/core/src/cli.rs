//! Command-line front end. [`run`] takes the argument list and returns the
//! exit code with everything that would be printed, so the binary is a thin
//! wrapper and the behaviour is testable in-process.

use std::fmt::Write as _;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use num_traits::One;

use crate::algebra::TruncSeries;
use crate::analysis::{
    default_points, guess_quadratic, verify_known, AnsatzSpec, KnownRelation, QuadraticRelation,
    VerifyReport,
};
use crate::crosscheck::crosscheck;
use crate::error::{Error, Result};
use crate::oracle::{
    self, bfile, count_ferrers, count_gated, count_nibbled, count_wicketed, render_ascii,
    FerrersShape, GateRow, GatedShape, Shape, WicketedShape,
};
use crate::umbral::{gated_with_fixed_x1, pipeline, wicketed_specialized, Target};

/// Largest order for series with all catalytic variables set to 1.
pub const SERIES_CEILING: usize = 80;
/// Largest order for series that keep their catalytic variables.
pub const CATALYTIC_CEILING: usize = 40;

#[derive(Parser, Debug)]
#[command(
    name = "umbral-ferrers",
    about = "Generating functions of gated and wicketed Ferrers diagrams"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Half-perimeter series of a family.
    Series(SeriesArgs),
    /// Check a quadratic relation against the computed series.
    Verify(VerifyArgs),
    /// Fit a quadratic relation to series coefficients.
    Guess(GuessArgs),
    /// Compare brute-force counts with series coefficients.
    Crosscheck(CrosscheckArgs),
    /// Brute-force census of shapes.
    Oracle(OracleArgs),
    /// Draw a shape as text.
    Render(RenderArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Bfile,
    Table,
}

#[derive(Args, Debug)]
struct SeriesArgs {
    /// ferrers, gated or wicketed
    kind: String,
    #[arg(long)]
    order: usize,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    /// Index of the first nonzero term in b-file output (required for
    /// gated and wicketed).
    #[arg(long)]
    offset: Option<usize>,
    /// Keep the catalytic variables (JSON only).
    #[arg(long)]
    catalytic: bool,
    #[arg(long)]
    output: Option<String>,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// punceq, punceq123, fdfpeq, fdfpeq1 or F-rational
    relation: String,
    #[arg(long)]
    order: usize,
    /// Comma-separated integer point; repeat for several points.
    #[arg(long = "points", allow_hyphen_values = true)]
    points: Vec<String>,
    /// Check a refined relation with the catalytic variables kept symbolic.
    #[arg(long)]
    symbolic: bool,
    #[arg(long)]
    output: Option<String>,
}

#[derive(Args, Debug)]
struct GuessArgs {
    /// ferrers, gated or wicketed
    kind: String,
    #[arg(long)]
    order: usize,
    /// Degree bounds for the coefficients of G^2, G and 1, e.g. 8,10,14.
    #[arg(long)]
    degrees: Option<String>,
    #[arg(long)]
    output: Option<String>,
}

#[derive(Args, Debug)]
struct CrosscheckArgs {
    #[arg(long = "max-hp")]
    max_hp: usize,
    #[arg(long)]
    output: Option<String>,
}

#[derive(Args, Debug)]
struct OracleArgs {
    /// ferrers, gated, wicketed or nibbled
    kind: String,
    #[arg(long = "max-hp")]
    max_hp: Option<usize>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long)]
    offset: Option<usize>,
    #[arg(long)]
    output: Option<String>,
}

#[derive(Args, Debug)]
struct RenderArgs {
    /// Full rows below any gate, widths bottom to top.
    #[arg(long)]
    rows: String,
    /// Gate rows as left:gap:right, bottom to top.
    #[arg(long)]
    gate: Option<String>,
    /// Full rows above the gate, closing it into a wicket.
    #[arg(long)]
    above: Option<String>,
}

/// What a command printed and how it exited.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn usage(msg: impl Into<String>) -> Self {
        Outcome {
            code: 64,
            stdout: String::new(),
            stderr: format!("error: {}\n", msg.into()),
        }
    }
}

/// Parses and runs a command line; `args[0]` is the program name.
pub fn run<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 64 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome::ok(text)
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let (result, output) = match cli.command {
        Command::Series(a) => {
            let out = a.output.clone();
            (series(a), out)
        }
        Command::Verify(a) => {
            let out = a.output.clone();
            (verify(a), out)
        }
        Command::Guess(a) => {
            let out = a.output.clone();
            (guess(a), out)
        }
        Command::Crosscheck(a) => {
            let out = a.output.clone();
            (cross(a), out)
        }
        Command::Oracle(a) => {
            let out = a.output.clone();
            (census(a), out)
        }
        Command::Render(a) => (render(a), None),
    };
    let mut outcome = match result {
        Ok(o) => o,
        Err(Error::Usage(msg)) => return Outcome::usage(msg),
        Err(e) => {
            return Outcome {
                code: 1,
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
            }
        }
    };
    if let Some(path) = output {
        if let Err(e) = std::fs::write(&path, &outcome.stdout) {
            return Outcome {
                code: 1,
                stdout: String::new(),
                stderr: format!("error: cannot write {path}: {e}\n"),
            };
        }
        outcome.stdout.clear();
    }
    outcome
}

fn parse_list<T: FromStr>(s: &str, what: &str) -> Result<Vec<T>> {
    s.split(',')
        .map(|p| {
            p.trim()
                .parse()
                .map_err(|_| Error::Usage(format!("bad {what} '{p}' in '{s}'")))
        })
        .collect()
}

fn check_ceiling(value: usize, ceiling: usize, what: &str) -> Result<()> {
    if value > ceiling {
        return Err(Error::Usage(format!(
            "{what} {value} exceeds the ceiling {ceiling}"
        )));
    }
    Ok(())
}

/// The series with every catalytic variable at 1, by the fastest route.
fn specialized_series(target: Target, order: usize) -> Result<TruncSeries> {
    Ok(match target {
        Target::Ferrers => pipeline(Target::Ferrers, order)?.specialize_to_one(),
        Target::Gated => gated_with_fixed_x1(order, &BigRational::one())?.specialize_to_one(),
        Target::Wicketed => wicketed_specialized(order)?,
    })
}

fn series(a: SeriesArgs) -> Result<Outcome> {
    let target: Target = a.kind.parse()?;
    let ceiling = if a.catalytic {
        CATALYTIC_CEILING
    } else {
        SERIES_CEILING
    };
    check_ceiling(a.order, ceiling, "order")?;
    if a.catalytic && a.format != Format::Json {
        return Err(Error::Usage("--catalytic needs --format json".into()));
    }
    let s = if a.catalytic {
        pipeline(target, a.order)?
    } else {
        specialized_series(target, a.order)?
    };
    let mut out = Outcome::default();
    let first = s.min_degree();
    if first.is_none() {
        out.stderr = format!(
            "note: no {} terms through t^{}; the first term is at t^{}\n",
            target,
            a.order,
            target.min_half_perimeter()
        );
    }
    let coeffs = || -> Vec<String> {
        match first {
            Some(f) => (f..=a.order)
                .map(|k| s.scalar_coeff(k).to_string())
                .collect(),
            None => Vec::new(),
        }
    };
    out.stdout = match a.format {
        Format::Json => {
            let mut j = s.to_json();
            j.push('\n');
            j
        }
        Format::Bfile => {
            let offset = match (a.offset, target) {
                (Some(o), _) => o,
                (None, Target::Ferrers) => target.min_half_perimeter(),
                (None, _) => {
                    return Err(Error::Usage(format!(
                        "b-file output for {target} needs an explicit --offset"
                    )))
                }
            };
            bfile(coeffs(), offset)
        }
        Format::Table => {
            let mut t = String::from("hp count\n");
            if let Some(f) = first {
                for (i, c) in coeffs().iter().enumerate() {
                    writeln!(t, "{} {}", f + i, c).unwrap();
                }
            }
            t
        }
    };
    Ok(out)
}

fn verify(a: VerifyArgs) -> Result<Outcome> {
    let rel: KnownRelation = a.relation.parse()?;
    check_ceiling(a.order, CATALYTIC_CEILING, "order")?;
    let mut points: Vec<Vec<i64>> = a
        .points
        .iter()
        .map(|p| parse_list(p, "coordinate"))
        .collect::<Result<_>>()?;
    for p in &points {
        if p.len() != rel.arity() {
            return Err(Error::Usage(format!(
                "{rel} needs points with {} coordinates, got {p:?}",
                rel.arity()
            )));
        }
    }
    let reports = if a.symbolic {
        if rel.arity() == 0 || !points.is_empty() {
            return Err(Error::Usage(
                "--symbolic applies to refined relations without --points".into(),
            ));
        }
        let g = crate::analysis::series_for(rel, a.order)?;
        let v = crate::analysis::verify_quadratic(&g, &rel.relation(), None)?;
        vec![VerifyReport::new(rel.name(), None, &v)]
    } else {
        if rel.arity() > 0 && points.is_empty() {
            points = default_points(rel);
        }
        verify_known(rel, a.order, &points)?
    };
    let mut out = Outcome::default();
    for r in &reports {
        writeln!(out.stdout, "{}", r.to_json()).unwrap();
    }
    out.code = if reports.iter().any(|r| !r.pass && !r.inconclusive) {
        1
    } else if reports.iter().any(|r| r.inconclusive) {
        out.stderr = format!(
            "inconclusive: order {} is below the first degree at which {rel} constrains the series\n",
            a.order
        );
        2
    } else {
        0
    };
    Ok(out)
}

fn guess(a: GuessArgs) -> Result<Outcome> {
    let target: Target = a.kind.parse()?;
    check_ceiling(a.order, SERIES_CEILING, "order")?;
    let spec = match &a.degrees {
        None => AnsatzSpec::default(),
        Some(d) => match parse_list::<usize>(d, "degree")?.as_slice() {
            &[da, db, dc] => AnsatzSpec::new(da, db, dc),
            _ => return Err(Error::Usage("--degrees takes three values".into())),
        },
    };
    let s = specialized_series(target, a.order)?;
    let guess = match guess_quadratic(&s, &spec) {
        Ok(g) => g,
        Err(Error::InsufficientTerms {
            unknowns,
            available,
            required,
        }) => {
            return Ok(Outcome {
                code: 1,
                stdout: String::new(),
                stderr: format!(
                    "not enough terms: {available} supplied, {required} needed for {unknowns} unknowns\n"
                ),
            })
        }
        Err(e) => return Err(e),
    };
    let Some(g) = guess else {
        return Ok(Outcome {
            code: 1,
            stdout: String::new(),
            stderr: format!(
                "no relation found with degree bounds ({}, {}, {}) shifted by up to +{}\n",
                spec.deg_a, spec.deg_b, spec.deg_c, spec.escalation
            ),
        });
    };
    let mut out = Outcome::ok(format!("{}\n", g.relation));
    let d = g.relation.degrees();
    let show = |x: Option<usize>| x.map_or("-".to_string(), |v| v.to_string());
    writeln!(
        out.stdout,
        "degrees {} {} {} from {} terms",
        show(d[0]),
        show(d[1]),
        show(d[2]),
        g.terms_used
    )
    .unwrap();
    if g.is_effectively_linear() {
        out.stdout.push_str("effectively linear\n");
    }
    if let Some(known) = matching_relation(&g.relation) {
        writeln!(out.stdout, "matches {known}").unwrap();
    }
    if g.has_multiplicity_warning() {
        out.stderr = format!(
            "warning: solution space has dimension {}; the relation is not pinned down\n",
            g.nullity
        );
    }
    Ok(out)
}

fn matching_relation(rel: &QuadraticRelation) -> Option<KnownRelation> {
    KnownRelation::ALL
        .into_iter()
        .filter(|k| k.arity() == 0)
        .find(|k| k.relation().canonical().as_ref() == Ok(rel))
}

fn cross(a: CrosscheckArgs) -> Result<Outcome> {
    check_ceiling(a.max_hp, oracle::GATED_CEILING, "max-hp")?;
    let c = crosscheck(a.max_hp)?;
    let mut out = Outcome::ok(String::from("kind hp umbral oracle\n"));
    for r in &c.totals {
        let mark = if r.ok() { "ok" } else { "MISMATCH" };
        writeln!(
            out.stdout,
            "{} {} {} {} {mark}",
            r.kind, r.hp, r.expected, r.got
        )
        .unwrap();
    }
    let bad_refined = c.refined.iter().filter(|r| !r.ok()).count();
    writeln!(
        out.stdout,
        "refined {} checked {} mismatched",
        c.refined.len(),
        bad_refined
    )
    .unwrap();
    if let Some(m) = c.first_mismatch() {
        out.code = 1;
        out.stderr = format!("mismatch: {m}\n");
    }
    Ok(out)
}

fn census(a: OracleArgs) -> Result<Outcome> {
    let (default, ceiling) = match a.kind.as_str() {
        "ferrers" => (oracle::DEFAULT_FERRERS_LIMIT, oracle::FERRERS_CEILING),
        "gated" => (oracle::DEFAULT_GATED_LIMIT, oracle::GATED_CEILING),
        "wicketed" => (oracle::DEFAULT_WICKETED_LIMIT, oracle::WICKETED_CEILING),
        "nibbled" => (oracle::DEFAULT_NIBBLED_LIMIT, oracle::NIBBLED_CEILING),
        other => {
            return Err(Error::Usage(format!(
                "unknown kind '{other}'; expected ferrers, gated, wicketed or nibbled"
            )))
        }
    };
    let max_hp = a.max_hp.unwrap_or(default);
    check_ceiling(max_hp, ceiling, "max-hp")?;
    if a.kind == "nibbled" {
        let c = count_nibbled(max_hp);
        let stdout = match a.format {
            Format::Json => c.to_json() + "\n",
            Format::Table => {
                let mut t = String::from("hp alpha beta count\n");
                for (&(h, al, be), n) in c.counts() {
                    writeln!(t, "{h} {al} {be} {n}").unwrap();
                }
                t
            }
            Format::Bfile => {
                return Err(Error::Usage(
                    "the nibbled census is trivariate; use json or table".into(),
                ))
            }
        };
        return Ok(Outcome::ok(stdout));
    }
    let target: Target = a.kind.parse()?;
    let (json, bfile_out, counts) = match target {
        Target::Ferrers => {
            let c = count_ferrers(max_hp);
            (
                c.to_json("ferrers"),
                a.offset.map(|o| c.to_bfile(o)),
                c.counts().to_vec(),
            )
        }
        Target::Gated => {
            let c = count_gated(max_hp);
            (
                c.to_json("gated"),
                a.offset.map(|o| c.to_bfile(o)),
                c.counts().to_vec(),
            )
        }
        Target::Wicketed => {
            let c = count_wicketed(max_hp);
            (
                c.to_json("wicketed"),
                a.offset.map(|o| c.to_bfile(o)),
                c.counts().to_vec(),
            )
        }
    };
    let stdout = match a.format {
        Format::Json => json + "\n",
        Format::Bfile => bfile_out.ok_or_else(|| {
            Error::Usage(format!(
                "b-file output for {target} needs an explicit --offset"
            ))
        })?,
        Format::Table => {
            let mut t = String::from("hp count\n");
            let first = counts.iter().position(|&c| c > 0).unwrap_or(counts.len());
            for (h, c) in counts.iter().enumerate().skip(first) {
                writeln!(t, "{h} {c}").unwrap();
            }
            t
        }
    };
    Ok(Outcome::ok(stdout))
}

fn render(a: RenderArgs) -> Result<Outcome> {
    let base: Vec<u32> = parse_list(&a.rows, "row width")?;
    let gate: Vec<GateRow> = match &a.gate {
        None => Vec::new(),
        Some(g) => g
            .split(',')
            .map(
                |r| match parse_list::<u32>(&r.replace(':', ","), "gate width")?.as_slice() {
                    &[l, gap, rt] => Ok(GateRow::new(l, gap, rt)),
                    _ => Err(Error::Usage(format!(
                        "gate row '{r}' must be left:gap:right"
                    ))),
                },
            )
            .collect::<Result<_>>()?,
    };
    let above: Vec<u32> = match &a.above {
        None => Vec::new(),
        Some(s) => parse_list(s, "row width")?,
    };
    let shape: Box<dyn Shape> = match (gate.is_empty(), above.is_empty()) {
        (true, true) => Box::new(FerrersShape::new(base)?),
        (false, true) => Box::new(GatedShape::new(FerrersShape::new(base)?, gate)?),
        (false, false) => Box::new(WicketedShape::from_parts(&base, &gate, &above)?),
        (true, false) => {
            return Err(Error::Usage("--above needs --gate".into()));
        }
    };
    let mut out = Outcome::ok(render_ascii(shape.as_ref()));
    out.stdout.push('\n');
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(line: &str) -> Outcome {
        run(std::iter::once("umbral-ferrers").chain(line.split_whitespace()))
    }

    #[test]
    fn wicketed_bfile() {
        let o = call("series wicketed --order 10 --format bfile --offset 8");
        assert_eq!(o.code, 0);
        assert_eq!(o.stdout, "8 1\n9 8\n10 41\n");
    }

    #[test]
    fn ferrers_table() {
        let o = call("series ferrers --order 4 --format table");
        assert_eq!(o.stdout, "hp count\n2 1\n3 2\n4 4\n");
    }

    #[test]
    fn gated_below_first_term() {
        let o = call("series gated --order 5");
        assert_eq!(o.code, 0);
        assert_eq!(o.stdout, "{\"order\":5,\"vars\":[],\"terms\":[]}\n");
        assert!(o.stderr.contains("t^6"));
    }

    #[test]
    fn missing_offset_is_usage_error() {
        let o = call("series gated --order 8 --format bfile");
        assert_eq!(o.code, 64);
    }

    #[test]
    fn unknown_kind_is_usage_error() {
        let o = call("series hexagons --order 8");
        assert_eq!(o.code, 64);
        assert!(o.stderr.contains("hexagons"));
    }

    #[test]
    fn render_ring() {
        let o = call("render --rows 3 --gate 1:1:1 --above 3");
        assert_eq!(o.stdout, "###\n#.#\n###\n");
    }

    #[test]
    fn oracle_ceiling() {
        assert_eq!(call("oracle wicketed --max-hp 21").code, 64);
    }
}
