//! Command-line front end for `combdyn`.
//!
//! [`run`] takes the full argument list and returns the exit status with the
//! text to print, so the binary is a thin wrapper and tests drive it directly.

mod dot;
mod input;
mod report;

use std::cmp::Ordering;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use combdyn::forcing::MAX_POSET_PERIOD;
use combdyn::sharkovsky::match_initial_segment;
use combdyn::{
    circle_period_set, enumerate_circle_cycles, forced_cycles, forces, forcing_poset, initial_segment,
    is_primary, is_twist_up_to, markov_graph, min_entropy_search, over_rotation_pair, over_rotation_spectrum,
    pattern_entropy, periods, realizing_pattern, rotation_interval, sharkovsky_compare, Endpoint,
    OverRotationPair, Pattern, RotationInterval, Selector,
};
use serde_json::{json, Value};

pub use dot::poset_to_dot;
pub use report::{Failure, Report};

/// Default cap for period enumeration.
pub const PERIOD_CAP: usize = 12;
/// Default cap for forcing sets.
pub const FORCING_CAP: usize = 8;
/// Largest cap accepted anywhere.
pub const MAX_CAP: usize = 24;

#[derive(Parser, Debug)]
#[command(name = "combdyn", version, about = "Combinatorial dynamics of interval and circle maps")]
struct Cli {
    /// Emit a JSON report instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Sharkovsky ordering.
    #[command(subcommand)]
    Shark(Shark),
    /// Questions about one cycle pattern, given as a quoted image list.
    #[command(subcommand)]
    Pattern(PatternCmd),
    /// Forcing order on all patterns up to a period.
    Poset {
        #[arg(long)]
        period: usize,
        /// Write the Hasse diagram in DOT format here ("-" for standard output).
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// A pattern whose P-linear map has exactly the periods S(N).
    Realize {
        n: String,
        #[arg(long, default_value_t = PERIOD_CAP, value_parser = cap_parser)]
        cap: usize,
    },
    /// Degree-one circle maps read from a JSON file of breakpoint/value pairs.
    #[command(subcommand)]
    Circle(Circle),
}

#[derive(Subcommand, Debug)]
enum Shark {
    /// Compare two elements, e.g. `6 7` or `2inf 3`.
    Compare { a: String, b: String },
    /// The initial segment S(N) cut at the cap.
    Segment {
        n: String,
        #[arg(long, default_value_t = PERIOD_CAP, value_parser = cap_parser)]
        cap: usize,
    },
    /// Sort naturals along the ordering.
    Sort {
        #[arg(required = true)]
        values: Vec<u64>,
    },
}

#[derive(Args, Debug)]
struct ForcingCap {
    #[arg(long, default_value_t = FORCING_CAP, value_parser = cap_parser)]
    cap: usize,
}

#[derive(Subcommand, Debug)]
enum PatternCmd {
    /// Canonical form, period and transition matrix.
    Show { pattern: String },
    /// Topological entropy of the P-linear map.
    Entropy { pattern: String },
    /// Periods of the P-linear map.
    Periods {
        pattern: String,
        #[arg(long, default_value_t = PERIOD_CAP, value_parser = cap_parser)]
        cap: usize,
    },
    /// Over-rotation pair and number.
    Overrot { pattern: String },
    /// Whether the first pattern forces the second.
    Forces { a: String, b: String },
    /// Forces no other pattern of its own period.
    Primary { pattern: String },
    /// Forces no other pattern of its own over-rotation number, up to the cap.
    Twist {
        pattern: String,
        #[command(flatten)]
        cap: ForcingCap,
    },
    /// All patterns forced up to the cap.
    Forced {
        pattern: String,
        #[command(flatten)]
        cap: ForcingCap,
    },
    /// Over-rotation numbers of forced cycles up to the cap.
    Spectrum {
        pattern: String,
        #[command(flatten)]
        cap: ForcingCap,
    },
    /// Least-entropy pattern of a period, or of an over-rotation pair `P,Q`.
    MinEntropy {
        #[arg(long, conflicts_with = "pair", required_unless_present = "pair")]
        period: Option<usize>,
        #[arg(long)]
        pair: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
enum Circle {
    /// Rotation interval of the lift.
    Interval {
        file: PathBuf,
        #[arg(long, default_value_t = 1e-9)]
        tolerance: f64,
    },
    /// Cycles of the projected map up to the cap.
    Cycles {
        file: PathBuf,
        #[arg(long, default_value_t = 6, value_parser = cap_parser)]
        cap: usize,
    },
    /// Period set for a rotation interval and one Sharkovsky element per endpoint.
    Periods {
        /// Take the interval from this lift.
        #[arg(conflicts_with = "interval", required_unless_present = "interval")]
        file: Option<PathBuf>,
        /// The interval as `LO,HI`.
        #[arg(long)]
        interval: Option<String>,
        #[arg(long, default_value = "1")]
        left: String,
        #[arg(long, default_value = "1")]
        right: String,
        #[arg(long, default_value_t = PERIOD_CAP, value_parser = cap_parser)]
        cap: usize,
    },
}

fn cap_parser(s: &str) -> Result<usize, String> {
    let v: usize = s.parse().map_err(|_| format!("{s:?} is not a number"))?;
    if v == 0 || v > MAX_CAP {
        return Err(format!("cap must lie in 1..={MAX_CAP}"));
    }
    Ok(v)
}

/// Runs one command line (including the program name). Returns the exit
/// status and the text for standard output (status 0) or standard error.
pub fn run<I, T>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.render().to_string());
        }
    };
    let start = Instant::now();
    match dispatch(cli.command) {
        Ok(report) if cli.json => {
            let doc = report.to_json(start.elapsed().as_secs_f64() * 1e3);
            (0, format!("{}\n", serde_json::to_string_pretty(&doc).expect("serializable")))
        }
        Ok(report) => (0, format!("{}\n", report.text)),
        Err(Failure::Domain(msg)) => (1, format!("error: {msg}\n")),
        Err(Failure::Usage(msg)) => (2, format!("usage error: {msg}\n")),
    }
}

fn dispatch(command: Command) -> Result<Report, Failure> {
    match command {
        Command::Shark(c) => shark(c),
        Command::Pattern(c) => pattern(c),
        Command::Poset { period, dot } => poset(period, dot),
        Command::Realize { n, cap } => realize(&n, cap),
        Command::Circle(c) => circle(c),
    }
}

fn shark(command: Shark) -> Result<Report, Failure> {
    match command {
        Shark::Compare { a, b } => {
            let (x, y) = (input::element(&a)?, input::element(&b)?);
            let (word, sym) = match sharkovsky_compare(x, y) {
                Ordering::Less => ("less", "<_s"),
                Ordering::Equal => ("equal", "=_s"),
                Ordering::Greater => ("greater", ">_s"),
            };
            Ok(Report::new("shark compare")
                .input("a", x.to_string())
                .input("b", y.to_string())
                .result(json!(word), format!("{x} {sym} {y}")))
        }
        Shark::Segment { n, cap } => {
            let x = input::element(&n)?;
            let seg = initial_segment(x, cap as u64);
            Ok(Report::new("shark segment")
                .input("n", x.to_string())
                .input("cap", cap)
                .result(json!(seg), report::joined(&seg)))
        }
        Shark::Sort { mut values } => {
            if values.contains(&0) {
                return Err(Failure::Domain("the ordering is on positive integers".into()));
            }
            let given = values.clone();
            values.sort_by(|a, b| combdyn::sharkovsky::compare_naturals(*a, *b));
            Ok(Report::new("shark sort").input("values", json!(given)).result(json!(values), report::joined(&values)))
        }
    }
}

fn pattern_inputs(report: Report, p: &Pattern) -> Report {
    report.input("pattern", json!(p.images()))
}

fn pattern(command: PatternCmd) -> Result<Report, Failure> {
    match command {
        PatternCmd::Show { pattern } => {
            let p = input::pattern(&pattern)?;
            let m = markov_graph(&p);
            let text = format!("pattern {p}\nperiod {}\nmatrix\n{}", p.period(), m.to_string().trim_end());
            Ok(pattern_inputs(Report::new("pattern show"), &p)
                .result(json!({"period": p.period(), "matrix": m.rows()}), text))
        }
        PatternCmd::Entropy { pattern } => {
            let p = input::pattern(&pattern)?;
            let h = report::entropy(pattern_entropy(&p));
            Ok(pattern_inputs(Report::new("pattern entropy"), &p).result(json!(h), h))
        }
        PatternCmd::Periods { pattern, cap } => {
            let p = input::pattern(&pattern)?;
            let per = periods(&p, cap);
            let segment = match_initial_segment(&per, cap as u64).map(|e| e.to_string());
            let text = match &segment {
                Some(n) => format!("{}\nS({n})", report::joined(&per)),
                None => report::joined(&per),
            };
            Ok(pattern_inputs(Report::new("pattern periods"), &p)
                .input("cap", cap)
                .result(json!({"periods": per, "segment": segment}), text))
        }
        PatternCmd::Overrot { pattern } => {
            let p = input::pattern(&pattern)?;
            let pair = over_rotation_pair(&p)?;
            let number = pair.number();
            Ok(pattern_inputs(Report::new("pattern overrot"), &p).result(
                json!({"pair": [pair.p(), pair.q()], "number": report::rational(&number)}),
                format!("{pair} {number}"),
            ))
        }
        PatternCmd::Forces { a, b } => {
            let (x, y) = (input::pattern(&a)?, input::pattern(&b)?);
            let f = forces(&x, &y);
            Ok(Report::new("pattern forces")
                .input("a", json!(x.images()))
                .input("b", json!(y.images()))
                .result(json!(f), f.to_string()))
        }
        PatternCmd::Primary { pattern } => {
            let p = input::pattern(&pattern)?;
            let r = is_primary(&p);
            Ok(pattern_inputs(Report::new("pattern primary"), &p).result(json!(r), r.to_string()))
        }
        PatternCmd::Twist { pattern, cap } => {
            let p = input::pattern(&pattern)?;
            let r = is_twist_up_to(&p, cap.cap);
            Ok(pattern_inputs(Report::new("pattern twist"), &p).input("cap", cap.cap).result(json!(r), r.to_string()))
        }
        PatternCmd::Forced { pattern, cap } => {
            let p = input::pattern(&pattern)?;
            let forced = forced_cycles(&p, cap.cap);
            let list: Vec<&[usize]> = forced.iter().map(|b| b.images()).collect();
            let text = forced.iter().map(|b| b.to_string()).collect::<Vec<_>>().join("\n");
            Ok(pattern_inputs(Report::new("pattern forced"), &p).input("cap", cap.cap).result(json!(list), text))
        }
        PatternCmd::Spectrum { pattern, cap } => {
            let p = input::pattern(&pattern)?;
            let spectrum = over_rotation_spectrum(&p, cap.cap);
            let list: Vec<Value> = spectrum.iter().map(report::rational).collect();
            Ok(pattern_inputs(Report::new("pattern spectrum"), &p)
                .input("cap", cap.cap)
                .result(json!(list), report::joined(&spectrum)))
        }
        PatternCmd::MinEntropy { period, pair } => {
            let selector = match (period, pair) {
                (Some(q), _) => Selector::Period(q),
                (None, Some(text)) => {
                    let (p, q) = text
                        .split_once(',')
                        .and_then(|(p, q)| Some((p.trim().parse().ok()?, q.trim().parse().ok()?)))
                        .ok_or_else(|| Failure::Usage(format!("expected --pair P,Q, got {text:?}")))?;
                    Selector::OverRotation(OverRotationPair::new(p, q)?)
                }
                (None, None) => unreachable!("clap requires one of the two"),
            };
            let bound = combdyn::forcing::MAX_SEARCH_PERIOD;
            let found = min_entropy_search(selector, bound)?;
            let report = match selector {
                Selector::Period(q) => Report::new("pattern min-entropy").input("period", q),
                Selector::OverRotation(pair) => {
                    Report::new("pattern min-entropy").input("pair", json!([pair.p(), pair.q()]))
                }
            };
            Ok(match found {
                Some((p, h)) => {
                    let h = report::entropy(h);
                    let text = format!("{p}\n{h}");
                    report.result(json!({"pattern": p.images(), "entropy": h}), text)
                }
                None => report.result(Value::Null, "none"),
            })
        }
    }
}

fn poset(period: usize, dot: Option<PathBuf>) -> Result<Report, Failure> {
    if period == 0 || period > MAX_POSET_PERIOD {
        return Err(Failure::Usage(format!("--period must lie in 1..={MAX_POSET_PERIOD}")));
    }
    let poset = forcing_poset(period)?;
    let mut text = String::new();
    for (i, p) in poset.patterns.iter().enumerate() {
        text.push_str(&format!("{i}: {p}\n"));
    }
    for (a, b) in &poset.covers {
        text.push_str(&format!("{a} -> {b}\n"));
    }
    let mut report = Report::new("poset").input("period", period);
    if let Some(path) = dot {
        let rendered = poset_to_dot(&poset);
        if path.as_os_str() == "-" {
            text.push_str(&rendered);
        } else {
            std::fs::write(&path, rendered)
                .map_err(|e| Failure::Domain(format!("cannot write {}: {e}", path.display())))?;
        }
        report = report.input("dot", path.display().to_string());
    }
    let patterns: Vec<&[usize]> = poset.patterns.iter().map(|p| p.images()).collect();
    let result = json!({"patterns": patterns, "covers": poset.covers, "relation": poset.relation});
    Ok(report.result(result, text.trim_end()))
}

fn realize(n: &str, cap: usize) -> Result<Report, Failure> {
    let x = input::element(n)?;
    let p = realizing_pattern(x)?;
    let per = periods(&p, cap);
    let expected = initial_segment(x, cap as u64);
    let ok = per == expected;
    let text = format!("pattern {p}\nperiods {}\nmatches S({x}): {ok}", report::joined(&per));
    Ok(Report::new("realize")
        .input("n", x.to_string())
        .input("cap", cap)
        .result(json!({"pattern": p.images(), "periods": per, "matches": ok}), text))
}

fn endpoint(e: &Endpoint) -> Value {
    match e {
        Endpoint::Exact(r) => json!({"exact": report::rational(r)}),
        Endpoint::Enclosure { lower, upper } => json!({
            "lower": report::rational(lower),
            "upper": report::rational(upper),
            "approx": format!("{:.12}", to_f64(lower) / 2.0 + to_f64(upper) / 2.0),
        }),
    }
}

fn to_f64(r: &combdyn::Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

fn circle(command: Circle) -> Result<Report, Failure> {
    match command {
        Circle::Interval { file, tolerance } => {
            if tolerance.is_nan() || tolerance <= 0.0 {
                return Err(Failure::Usage("--tolerance must be positive".into()));
            }
            let lift = input::circle_map(&file)?;
            let interval = rotation_interval(&lift, tolerance)?;
            Ok(Report::new("circle interval")
                .input("file", file.display().to_string())
                .input("tolerance", tolerance)
                .result(json!({"lower": endpoint(&interval.lower), "upper": endpoint(&interval.upper)}), interval.to_string()))
        }
        Circle::Cycles { file, cap } => {
            let lift = input::circle_map(&file)?;
            let cycles = enumerate_circle_cycles(&lift, cap);
            let mut text = Vec::new();
            let list: Vec<Value> = cycles
                .iter()
                .map(|c| {
                    let pts: Vec<Value> = c.points.iter().map(report::rational).collect();
                    let mark = if c.continuum { " (segment)" } else { "" };
                    text.push(format!("period {} rotation {}: {}{mark}", c.period, c.rotation_number, report::joined(&c.points)));
                    json!({
                        "period": c.period,
                        "rotation_number": report::rational(&c.rotation_number),
                        "points": pts,
                        "continuum": c.continuum,
                    })
                })
                .collect();
            Ok(Report::new("circle cycles")
                .input("file", file.display().to_string())
                .input("cap", cap)
                .result(json!(list), text.join("\n")))
        }
        Circle::Periods { file, interval, left, right, cap } => {
            let (l, r) = (input::element(&left)?, input::element(&right)?);
            let (report, iv) = match (file, interval) {
                (Some(file), _) => {
                    let lift = input::circle_map(&file)?;
                    (Report::new("circle periods").input("file", file.display().to_string()), rotation_interval(&lift, 1e-9)?)
                }
                (None, Some(text)) => {
                    let (lo, hi) = input::rational_pair(&text)?;
                    let iv = RotationInterval { lower: Endpoint::Exact(lo), upper: Endpoint::Exact(hi) };
                    (Report::new("circle periods").input("interval", iv.to_string()), iv)
                }
                (None, None) => unreachable!("clap requires one of the two"),
            };
            let set = circle_period_set(&iv, l, r, cap as u64)?;
            Ok(report
                .input("left", l.to_string())
                .input("right", r.to_string())
                .input("cap", cap)
                .result(json!(set), report::joined(&set)))
        }
    }
}
