//! The `trigrid` command line.
//!
//! Data goes to `out`, diagnostics to `err`. Exit codes: 0 on success, 1 when
//! `verify` finds a mismatch or an output file cannot be written, 2 for usage
//! and validation errors.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bijection::{
    decode, encode, rank, triangle_to_params, unrank, InscribedParams, Subset4,
};
use crate::counting::{count_closed_form, count_decomposition};
use crate::error::Error;
use crate::lattice::{GridSpec, LatticePoint};
use crate::render::{render, FigureSpec, Format};
use crate::triangles::{canonicalize, enumerate_brute_force, Triangle};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "trigrid",
    version,
    about = "Equilateral triangles in the triangular grid"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Count the equilateral triangles of the grid.
    Count {
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = Method::Closed)]
        method: Method,
    },
    /// List every triangle with its subset and parameters, ordered by rank.
    Enumerate {
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = RecordFormat::Jsonl)]
        format: RecordFormat,
    },
    /// Map a 4-subset of {1..n+2} to its triangle.
    Encode {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        subset: String,
    },
    /// Map a triangle, given as "x1,y1 x2,y2 x3,y3", back to its subset.
    Decode {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        triangle: String,
    },
    /// Colexicographic rank of a subset.
    Rank {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        subset: String,
    },
    /// Subset with the given rank.
    Unrank {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        rank: u128,
    },
    /// Check the bijection and the counts against brute-force enumeration.
    Verify {
        #[arg(long)]
        n: u64,
    },
    /// Write a figure of the grid and, optionally, the triangle of a subset.
    Render {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        subset: Option<String>,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, value_enum, default_value_t = FigureFormat::Svg)]
        format: FigureFormat,
        #[arg(long)]
        show_circumscribed: bool,
        #[arg(long)]
        show_gaps: bool,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Method {
    Closed,
    Sum,
    Brute,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum RecordFormat {
    Jsonl,
    Csv,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FigureFormat {
    Svg,
    Tikz,
}

/// One triangle with everything that identifies it.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Record {
    pub rank: u128,
    pub subset: [u64; 4],
    pub vertices: [[i64; 2]; 3],
    pub params: InscribedParams,
}

impl Record {
    pub fn from_subset(subset: Subset4, grid: &GridSpec) -> Result<Self, Error> {
        let triangle = encode(subset, grid)?;
        Ok(Record {
            rank: rank(subset, grid)?,
            subset: subset.elements(),
            vertices: triangle.vertices().map(|p| [p.x, p.y]),
            params: triangle_to_params(&triangle, grid)?,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("records serialize")
    }
}

#[derive(Debug, Serialize)]
struct CsvRow {
    rank: u128,
    a: u64,
    b: u64,
    c: u64,
    d: u64,
    x1: i64,
    y1: i64,
    x2: i64,
    y2: i64,
    x3: i64,
    y3: i64,
    s: u64,
    t: u64,
    p: u64,
    q: u64,
    r: u64,
}

impl From<&Record> for CsvRow {
    fn from(rec: &Record) -> Self {
        let [a, b, c, d] = rec.subset;
        let [[x1, y1], [x2, y2], [x3, y3]] = rec.vertices;
        let InscribedParams { s, t, p, q, r } = rec.params;
        CsvRow {
            rank: rec.rank,
            a,
            b,
            c,
            d,
            x1,
            y1,
            x2,
            y2,
            x3,
            y3,
            s,
            t,
            p,
            q,
            r,
        }
    }
}

enum Failure {
    Usage(String),
    Runtime(String),
    Verify,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Circumscription { .. } | Error::Overflow(_) => Failure::Runtime(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

/// Parses `a,b,c,d`.
pub fn parse_subset(text: &str, grid: &GridSpec) -> Result<Subset4, String> {
    let parts: Vec<u64> = text
        .split(',')
        .map(|p| p.trim().parse::<u64>())
        .collect::<Result<_, _>>()
        .map_err(|e| format!("bad subset {text:?}: {e}"))?;
    let elems: [u64; 4] = parts
        .try_into()
        .map_err(|_| format!("bad subset {text:?}: expected four comma-separated integers"))?;
    Subset4::new(elems, grid).map_err(|e| e.to_string())
}

/// Parses `x1,y1 x2,y2 x3,y3`.
pub fn parse_triangle(text: &str, grid: &GridSpec) -> Result<Triangle, String> {
    let bad = |why: &str| format!("bad triangle {text:?}: {why}");
    let points: Vec<LatticePoint> = text
        .split_whitespace()
        .map(|pair| {
            let (x, y) = pair
                .split_once(',')
                .ok_or_else(|| bad("points are written x,y"))?;
            let x = x
                .trim()
                .parse()
                .map_err(|_| bad("coordinates must be integers"))?;
            let y = y
                .trim()
                .parse()
                .map_err(|_| bad("coordinates must be integers"))?;
            Ok(LatticePoint::new(x, y))
        })
        .collect::<Result<_, String>>()?;
    let [p, q, r]: [LatticePoint; 3] = points
        .try_into()
        .map_err(|_| bad("expected three points"))?;
    canonicalize(grid, p, q, r).map_err(|e| e.to_string())
}

fn format_subset(s: Subset4) -> String {
    let [a, b, c, d] = s.elements();
    format!("{a},{b},{c},{d}")
}

/// Runs one command. `args` includes the program name.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return code;
        }
    };
    match execute(cli.command, out, err) {
        Ok(()) => EXIT_OK,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Runtime(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_FAILURE
        }
        Err(Failure::Verify) => {
            let _ = writeln!(err, "verification failed");
            EXIT_FAILURE
        }
    }
}

fn grid(n: u64) -> Result<GridSpec, Failure> {
    Ok(GridSpec::new(n)?)
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Count { n, method } => {
            let g = grid(n)?;
            let count = match method {
                Method::Closed => count_closed_form(&g)?,
                Method::Sum => count_decomposition(&g)?,
                Method::Brute => enumerate_brute_force(&g)?.len() as u128,
            };
            writeln!(out, "{count}")?;
        }
        Command::Enumerate { n, format } => {
            let g = grid(n)?;
            let total = count_closed_form(&g)?;
            let records = (0..total).map(|k| Record::from_subset(unrank(k, &g)?, &g));
            match format {
                RecordFormat::Jsonl => {
                    for rec in records {
                        writeln!(out, "{}", rec?.to_json())?;
                    }
                }
                RecordFormat::Csv => {
                    let mut writer = csv::Writer::from_writer(&mut *out);
                    for rec in records {
                        writer
                            .serialize(CsvRow::from(&rec?))
                            .map_err(|e| Failure::Runtime(e.to_string()))?;
                    }
                    writer.flush()?;
                }
            }
        }
        Command::Encode { n, subset } => {
            let g = grid(n)?;
            let subset = parse_subset(&subset, &g).map_err(Failure::Usage)?;
            writeln!(out, "{}", Record::from_subset(subset, &g)?.to_json())?;
        }
        Command::Decode { n, triangle } => {
            let g = grid(n)?;
            let triangle = parse_triangle(&triangle, &g).map_err(Failure::Usage)?;
            writeln!(out, "{}", format_subset(decode(&triangle, &g)?))?;
        }
        Command::Rank { n, subset } => {
            let g = grid(n)?;
            let subset = parse_subset(&subset, &g).map_err(Failure::Usage)?;
            writeln!(out, "{}", rank(subset, &g)?)?;
        }
        Command::Unrank { n, rank } => {
            let g = grid(n)?;
            writeln!(out, "{}", format_subset(unrank(rank, &g)?))?;
        }
        Command::Verify { n } => {
            let g = grid(n)?;
            let report = verify(&g)?;
            for line in &report.lines {
                writeln!(out, "{line}")?;
            }
            if !report.passed() {
                return Err(Failure::Verify);
            }
        }
        Command::Render {
            n,
            subset,
            out: path,
            format,
            show_circumscribed,
            show_gaps,
        } => {
            let g = grid(n)?;
            let mut spec = FigureSpec::new(g);
            spec.subset = subset
                .map(|s| parse_subset(&s, &g))
                .transpose()
                .map_err(Failure::Usage)?;
            spec.show_circumscribed = show_circumscribed;
            spec.show_gap_strip = show_gaps;
            spec.format = match format {
                FigureFormat::Svg => Format::Svg,
                FigureFormat::Tikz => Format::Tikz,
            };
            let doc = render(&spec)?;
            std::fs::write(&path, doc)
                .map_err(|e| Failure::Runtime(format!("cannot write {}: {e}", path.display())))?;
            writeln!(err, "wrote {}", path.display())?;
        }
    }
    Ok(())
}

/// Outcome of [`verify`]: one `PASS`/`FAIL` line per check.
#[derive(Debug, Clone, Default)]
pub struct VerifyReport {
    pub lines: Vec<String>,
    pub failures: usize,
}

impl VerifyReport {
    fn check(&mut self, ok: bool, what: String) {
        if !ok {
            self.failures += 1;
        }
        self.lines
            .push(format!("{} {what}", if ok { "PASS" } else { "FAIL" }));
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Round trips in both directions, image equality against brute force, and
/// agreement of the three counts.
pub fn verify(grid: &GridSpec) -> Result<VerifyReport, Error> {
    let oracle = enumerate_brute_force(grid)?;
    let closed = count_closed_form(grid)?;
    let sum = count_decomposition(grid)?;
    let mut report = VerifyReport::default();

    let mut image = BTreeSet::new();
    let mut round_trip_a = true;
    let mut ranks_ok = true;
    for k in 0..closed {
        let subset = unrank(k, grid)?;
        ranks_ok &= rank(subset, grid)? == k;
        let triangle = encode(subset, grid)?;
        round_trip_a &= decode(&triangle, grid).ok() == Some(subset);
        image.insert(triangle);
    }
    let round_trip_b = oracle
        .iter()
        .all(|t| decode(t, grid).and_then(|s| encode(s, grid)).ok() == Some(*t));

    report.check(
        round_trip_a,
        format!("decode(encode(S)) = S for all {closed} subsets"),
    );
    report.check(
        round_trip_b,
        format!("encode(decode(T)) = T for all {} triangles", oracle.len()),
    );
    report.check(
        image.len() as u128 == closed,
        format!("encode is injective ({} distinct images)", image.len()),
    );
    report.check(
        image == oracle,
        "encode image equals brute-force triangle set".to_string(),
    );
    report.check(
        ranks_ok,
        "rank(unrank(k)) = k over the full range".to_string(),
    );
    report.check(
        closed == sum && closed == oracle.len() as u128,
        format!(
            "counts agree: closed {closed}, sum {sum}, brute {}",
            oracle.len()
        ),
    );
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("trigrid").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn parse_subset_errors() {
        let g = GridSpec::new(10).unwrap();
        assert!(parse_subset("4,5,8,11", &g).is_ok());
        assert!(parse_subset(" 4, 5, 8, 11 ", &g).is_ok());
        assert!(parse_subset("4,5,8", &g).is_err());
        assert!(parse_subset("4,5,8,x", &g).is_err());
        assert!(parse_subset("4,5,8,13", &g).is_err());
    }

    #[test]
    fn parse_triangle_errors() {
        let g = GridSpec::new(10).unwrap();
        assert!(parse_triangle("5,0 3,2 5,2", &g).is_ok());
        assert!(parse_triangle("5,0 3,2", &g).is_err());
        assert!(parse_triangle("5,0 3;2 5,2", &g).is_err());
        assert!(parse_triangle("0,0 2,0 0,1", &g).is_err());
        assert!(parse_triangle("0,0 10,0 0,10", &g).is_err());
    }

    #[test]
    fn count_command() {
        assert_eq!(
            call(&["count", "--n", "10"]),
            (0, "495\n".into(), String::new())
        );
        assert_eq!(call(&["count", "--n", "10", "--method", "sum"]).1, "495\n");
        assert_eq!(
            call(&["count", "--n", "10", "--method", "brute"]).1,
            "495\n"
        );
    }

    #[test]
    fn usage_errors_exit_two() {
        assert_eq!(call(&["count"]).0, 2);
        assert_eq!(call(&["count", "--n", "0"]).0, 2);
        assert_eq!(call(&["count", "--n", "30", "--method", "brute"]).0, 2);
        assert_eq!(call(&["encode", "--n", "10", "--subset", "1,1,2,3"]).0, 2);
        assert_eq!(call(&["unrank", "--n", "10", "--rank", "495"]).0, 2);
        assert_eq!(call(&["frobnicate"]).0, 2);
        let (code, out, err) = call(&["encode", "--n", "10", "--subset", "0,1,2,3"]);
        assert_eq!((code, out.is_empty()), (2, true));
        assert!(err.starts_with("error:"));
    }

    #[test]
    fn help_goes_to_stdout() {
        let (code, out, err) = call(&["--help"]);
        assert_eq!(code, 0);
        assert!(out.contains("enumerate"));
        assert!(err.is_empty());
    }

    #[test]
    fn encode_record() {
        let (code, out, _) = call(&["encode", "--n", "10", "--subset", "4,5,8,11"]);
        assert_eq!(code, 0);
        assert_eq!(
            out,
            "{\"rank\":254,\"subset\":[4,5,8,11],\"vertices\":[[5,0],[3,2],[5,2]],\
             \"params\":{\"s\":4,\"t\":2,\"p\":3,\"q\":0,\"r\":2}}\n"
        );
    }

    #[test]
    fn decode_rank_unrank() {
        assert_eq!(
            call(&["decode", "--n", "10", "--triangle", "3,2 5,0 5,2"]).1,
            "4,5,8,11\n"
        );
        assert_eq!(
            call(&["rank", "--n", "10", "--subset", "4,5,8,11"]).1,
            "254\n"
        );
        assert_eq!(
            call(&["unrank", "--n", "10", "--rank", "254"]).1,
            "4,5,8,11\n"
        );
    }

    #[test]
    fn enumerate_csv_has_header_and_rows() {
        let (code, out, _) = call(&["enumerate", "--n", "3", "--format", "csv"]);
        assert_eq!(code, 0);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0], "rank,a,b,c,d,x1,y1,x2,y2,x3,y3,s,t,p,q,r");
        assert_eq!(lines.len(), 6);
        assert_eq!(lines[1], "0,1,2,3,4,0,0,2,0,0,2,2,0,0,0,0");
    }

    #[test]
    fn enumerate_empty_grid() {
        assert_eq!(
            call(&["enumerate", "--n", "1"]),
            (0, String::new(), String::new())
        );
    }

    #[test]
    fn verify_small() {
        let (code, out, _) = call(&["verify", "--n", "2"]);
        assert_eq!(code, 0);
        assert!(out.lines().all(|l| l.starts_with("PASS")));
        assert_eq!(call(&["verify", "--n", "1"]).0, 0);
        assert_eq!(call(&["verify", "--n", "26"]).0, 2);
    }

    #[test]
    fn verify_report_counts_failures() {
        let mut r = VerifyReport::default();
        r.check(true, "fine".into());
        r.check(false, "broken".into());
        assert!(!r.passed());
        assert_eq!(r.lines, ["PASS fine", "FAIL broken"]);
    }

    #[test]
    fn render_to_unwritable_path_fails() {
        let (code, _, err) = call(&["render", "--n", "3", "--out", "/nonexistent-dir/x.svg"]);
        assert_eq!(code, 1);
        assert!(err.contains("cannot write"));
    }
}
