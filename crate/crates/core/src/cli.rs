//! Command-line front end. [`run`] is the whole program minus process I/O,
//! so tests drive it directly.

use std::io::Read;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::diagram::Diagram;
use crate::enumerate::{enumerate_normal_forms, enumerate_pairings, enumerate_terms};
use crate::error::Error;
use crate::parser::parse;
use crate::render::{render, Format, RenderOptions};
use crate::rewrite::{normal_form, normalize};
use crate::semantics::{decide_equal, decide_equal_checked, delta, diagram_to_nf, peel};
use crate::{selftest, Term};

pub const EXIT_NOT_EQUAL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "kauffman", version, about = "Kauffman monoids K_n: normal forms, diagrams, word problem")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Size {
    /// Monoid size n (at least 2)
    #[arg(short = 'n')]
    n: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the Jones normal form of a term
    Nf {
        #[command(flatten)]
        size: Size,
        term: String,
        /// Print each rewrite step before the result
        #[arg(long)]
        trace: bool,
    },
    /// Decide whether two terms are equal (exit 0 equal, 1 not equal)
    Eq {
        #[command(flatten)]
        size: Size,
        left: String,
        right: String,
        /// Also compare the diagrams of both terms
        #[arg(long)]
        cross_check: bool,
    },
    /// Print the diagram of a term as JSON
    Diagram {
        #[command(flatten)]
        size: Size,
        term: String,
    },
    /// Read a JSON diagram on stdin and print its normal-form term
    TermOf {
        #[arg(long, value_enum, default_value_t = Method::Slope)]
        method: Method,
    },
    /// List terms, planar pairings or normal forms
    Enum {
        #[command(flatten)]
        size: Size,
        #[command(flatten)]
        what: EnumWhat,
    },
    /// Count planar pairings
    Count {
        #[command(flatten)]
        size: Size,
        #[arg(long, required = true)]
        pairings: bool,
    },
    /// Draw the diagram of a term
    Render {
        #[command(flatten)]
        size: Size,
        term: String,
        #[arg(long, value_enum, default_value_t = RenderFormat::Svg)]
        format: RenderFormat,
        /// Pixels per coordinate step
        #[arg(long, default_value_t = 40.0)]
        unit: f64,
        /// Label boundary points
        #[arg(long)]
        labels: bool,
    },
    /// Run the exhaustive small-n oracle suite
    Selftest,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct EnumWhat {
    /// All words over h1..h(n-1), c up to this length
    #[arg(long, value_name = "L")]
    terms: Option<usize>,
    /// All planar pairings, one JSON diagram per line
    #[arg(long)]
    pairings: bool,
    /// All normal forms with at most this many circles
    #[arg(long, value_name = "C")]
    nf: Option<usize>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Method {
    Slope,
    Peel,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RenderFormat {
    Svg,
    Ascii,
}

/// Exit status and captured output of one invocation.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
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
}

fn error_outcome(e: &Error) -> Outcome {
    let code = match e {
        Error::Internal(_) => EXIT_INTERNAL,
        _ => EXIT_INPUT,
    };
    let stderr = match e.position() {
        Some(p) => format!("error (position {p}): {e}\n"),
        None => format!("error: {e}\n"),
    };
    Outcome {
        code,
        stdout: String::new(),
        stderr,
    }
}

fn lines<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string() + "\n").collect()
}

/// Runs one invocation; `argv[0]` is the program name.
pub fn run(argv: &[String], stdin: &mut dyn Read) -> Outcome {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_INPUT,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(text)
            };
        }
    };
    match execute(cli.command, stdin) {
        Ok(out) => out,
        Err(e) => error_outcome(&e),
    }
}

fn execute(command: Command, stdin: &mut dyn Read) -> Result<Outcome, Error> {
    Ok(match command {
        Command::Nf { size, term, trace } => {
            let t = parse(&term, size.n)?;
            if trace {
                let tr = normalize(&t);
                Outcome::ok(format!("{}{}\n", tr.steps_text(), tr.output))
            } else {
                Outcome::ok(format!("{}\n", normal_form(&t)))
            }
        }
        Command::Eq {
            size,
            left,
            right,
            cross_check,
        } => {
            let t = parse(&left, size.n)?;
            let u = parse(&right, size.n)?;
            let verdict = if cross_check {
                decide_equal_checked(&t, &u)?
            } else {
                decide_equal(&t, &u)?
            };
            if verdict.equal {
                Outcome::ok("equal\n".into())
            } else {
                Outcome {
                    code: EXIT_NOT_EQUAL,
                    stdout: "not-equal\n".into(),
                    stderr: String::new(),
                }
            }
        }
        Command::Diagram { size, term } => {
            let t = parse(&term, size.n)?;
            Outcome::ok(format!("{}\n", delta(&t).to_json()))
        }
        Command::TermOf { method } => {
            let mut text = String::new();
            stdin
                .read_to_string(&mut text)
                .map_err(|e| Error::Json(e.to_string()))?;
            let d = Diagram::from_json(&text)?;
            let t: Term = match method {
                Method::Slope => diagram_to_nf(&d)?.to_term(),
                Method::Peel => normal_form(&peel(&d)?).to_term(),
            };
            Outcome::ok(format!("{t}\n"))
        }
        Command::Enum { size, what } => {
            let n = size.n;
            if let Some(len) = what.terms {
                Outcome::ok(lines(enumerate_terms(n, len)?))
            } else if let Some(c) = what.nf {
                Outcome::ok(lines(enumerate_normal_forms(n, c)?))
            } else {
                if n < 1 {
                    return Err(crate::DomainError::SizeTooSmall { n, min: 1 }.into());
                }
                Outcome::ok(lines(enumerate_pairings(n).iter().map(Diagram::to_json)))
            }
        }
        Command::Count { size, .. } => {
            if size.n < 1 {
                return Err(crate::DomainError::SizeTooSmall { n: size.n, min: 1 }.into());
            }
            Outcome::ok(format!("{}\n", enumerate_pairings(size.n).len()))
        }
        Command::Render {
            size,
            term,
            format,
            unit,
            labels,
        } => {
            if !(unit > 0.0) {
                return Err(Error::InvalidOption(format!("unit must be positive, got {unit}")));
            }
            let t = parse(&term, size.n)?;
            let opts = RenderOptions {
                format: match format {
                    RenderFormat::Svg => Format::Svg,
                    RenderFormat::Ascii => Format::Ascii,
                },
                unit,
                show_labels: labels,
            };
            Outcome::ok(render(&delta(&t), &opts))
        }
        Command::Selftest => {
            let mut out = String::new();
            let mut failed = false;
            for check in selftest::run_all() {
                match check.outcome {
                    Ok(detail) => out.push_str(&format!("ok   {}: {detail}\n", check.name)),
                    Err(detail) => {
                        failed = true;
                        out.push_str(&format!("FAIL {}: {detail}\n", check.name));
                    }
                }
            }
            Outcome {
                code: if failed { EXIT_INTERNAL } else { 0 },
                stdout: out,
                stderr: String::new(),
            }
        }
    })
}
