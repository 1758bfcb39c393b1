use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use skewdd::fkalg::{self, FkElement, FkTensor};
use skewdd::fkcanon::{self, Limits};
use skewdd::polyring::{schubert, Polynomial};
use skewdd::skew::{self, SkewMethod};
use skewdd::symgroup::{all_permutations, from_word, is_reduced, Permutation, Word};
use skewdd::verify::{self, Suite, VerifyConfig};
use skewdd::Error;

/// Skew divided differences, the Fomin-Kirillov algebra and Schubert
/// structure constants.
#[derive(Parser)]
#[command(name = "skewdd", version)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,

    /// Largest degree handled by canonical forms (and by verify suites).
    #[arg(long, global = true, default_value_t = 6)]
    max_degree: usize,

    /// Largest window handled by canonical forms.
    #[arg(long, global = true, default_value_t = 4)]
    limit_n: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Signed,
    Pairing,
    Explicit,
    Recurrence,
}

impl From<Method> for SkewMethod {
    fn from(m: Method) -> Self {
        match m {
            Method::Signed => SkewMethod::Signed,
            Method::Pairing => SkewMethod::Pairing,
            Method::Explicit => SkewMethod::Explicit,
            Method::Recurrence => SkewMethod::Recurrence,
        }
    }
}

/// Permutations are one-line strings of exactly n digits (`3412`) or
/// comma-separated reduced words (`2,1,3,2`); a single letter is a word.
#[derive(Args)]
struct PermArgs {
    /// Window size; inferred from the permutations when omitted.
    #[arg(long)]
    n: Option<usize>,

    /// Accept non-reduced words and use the permutation they multiply to.
    #[arg(long, default_value_t = false)]
    allow_nonreduced: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Compute x_(w/v).
    Skew {
        #[command(flatten)]
        perm: PermArgs,
        #[arg(long)]
        w: String,
        /// Lower permutation; the identity when omitted.
        #[arg(long, default_value = "")]
        v: String,
        #[arg(long, value_enum, default_value_t = Method::Explicit)]
        method: Method,
    },
    /// Schubert structure constant c_(u,v)^w, or every nonzero one with --table.
    Cuv {
        #[command(flatten)]
        perm: PermArgs,
        #[arg(long, required_unless_present = "table")]
        u: Option<String>,
        #[arg(long, required_unless_present = "table")]
        v: Option<String>,
        #[arg(long, required_unless_present = "table")]
        w: Option<String>,
        /// List all nonzero constants over S_n (requires --n).
        #[arg(long, default_value_t = false, requires = "n")]
        table: bool,
    },
    /// The Schubert polynomial of w.
    Schubert {
        #[command(flatten)]
        perm: PermArgs,
        #[arg(long)]
        w: String,
    },
    /// Hopf operations on elements written like `x(1,2)x(2,3) - 2*x(1,3)`
    /// or as JSON.
    Fk {
        #[command(subcommand)]
        op: FkOp,
    },
    /// Canonical forms in FK_n.
    Canon {
        /// Print graded dimensions of FK_n up to --max-degree.
        #[arg(long, default_value_t = false, requires = "n")]
        dim: bool,
        #[arg(long)]
        n: Option<usize>,
        /// Decide equality of two elements.
        #[arg(long, num_args = 2, value_names = ["A", "B"])]
        equal: Option<Vec<String>>,
        /// Element to reduce.
        element: Option<String>,
    },
    /// Run a seeded property suite.
    Verify {
        /// leibniz, hopf, positivity, agreement, canon or all.
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = 4)]
        n: usize,
        /// Random samples per randomized check.
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
}

#[derive(Subcommand)]
enum FkOp {
    Coproduct { element: String },
    Antipode { element: String },
    Sbar { element: String },
    Pairing { a: String, b: String },
    /// Delta_P(A) for a word P.
    Delta { p: String, element: String },
    /// (A) nabla_P for a word P.
    Nabla { element: String, p: String },
}

enum Output {
    Text(String),
    Json(Value),
}

fn parse_one_line(text: &str) -> Option<Permutation> {
    let imgs: Vec<usize> = text.chars().map(|c| c.to_digit(10).map(|d| d as usize)).collect::<Option<_>>()?;
    Permutation::from_images(&imgs).ok()
}

fn parse_letters(text: &str) -> Result<Vec<usize>, Error> {
    let mut out = Vec::new();
    let mut pos = 0;
    for part in text.split(',') {
        let t = part.trim();
        let a: usize = t.parse().map_err(|_| Error::Parse { pos, msg: format!("bad letter '{t}'") })?;
        if a == 0 {
            return Err(Error::Parse { pos, msg: "letters start at 1".into() });
        }
        out.push(a);
        pos += part.len() + 1;
    }
    Ok(out)
}

enum PermSpec {
    OneLine(Permutation),
    Word(Vec<usize>),
}

fn classify(text: &str, n: Option<usize>) -> Result<PermSpec, Error> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(PermSpec::Word(Vec::new()));
    }
    if !text.contains(',') {
        let as_perm = parse_one_line(text);
        let one_line = match n {
            Some(n) => text.len() == n && as_perm.is_some(),
            None => text.len() >= 2 && as_perm.is_some(),
        };
        if one_line {
            return Ok(PermSpec::OneLine(as_perm.unwrap()));
        }
        if n.is_some_and(|n| text.len() == n) && text.len() >= 2 {
            return Err(Error::NotAPermutation(text.chars().filter_map(|c| c.to_digit(10)).map(|d| d as usize).collect()));
        }
    }
    Ok(PermSpec::Word(parse_letters(text)?))
}

fn parse_perms(args: &PermArgs, texts: &[&str]) -> Result<Vec<Permutation>, Error> {
    let specs: Vec<PermSpec> = texts.iter().map(|t| classify(t, args.n)).collect::<Result<_, _>>()?;
    let needed = specs
        .iter()
        .map(|s| match s {
            PermSpec::OneLine(p) => p.window(),
            PermSpec::Word(w) => w.iter().map(|a| a + 1).max().unwrap_or(1),
        })
        .max()
        .unwrap_or(1);
    let n = args.n.unwrap_or(needed);
    if needed > n {
        return Err(Error::IndexOutOfWindow { index: needed, n });
    }
    specs
        .into_iter()
        .map(|s| match s {
            PermSpec::OneLine(p) => Ok(p.embed(n)),
            PermSpec::Word(letters) => {
                let word = Word::new(letters);
                if !args.allow_nonreduced && !is_reduced(&word, n)? {
                    return Err(Error::NotReduced(word.to_string()));
                }
                from_word(&word, n)
            }
        })
        .collect()
}

fn parse_element(text: &str) -> Result<FkElement, Error> {
    if text.trim_start().starts_with('{') {
        let value: Value = serde_json::from_str(text).map_err(|e| Error::Parse { pos: e.column(), msg: e.to_string() })?;
        FkElement::from_json(&value)
    } else {
        fkalg::parse_element(text)
    }
}

fn element_out(e: &FkElement, format: Format) -> Output {
    match format {
        Format::Text => Output::Text(e.to_string()),
        Format::Json => Output::Json(e.to_json()),
    }
}

fn tensor_out(t: &FkTensor, format: Format) -> Output {
    match format {
        Format::Text => Output::Text(t.to_string()),
        Format::Json => Output::Json(t.to_json()),
    }
}

fn scalar_out(c: i64, format: Format) -> Output {
    match format {
        Format::Text => Output::Text(c.to_string()),
        Format::Json => Output::Json(json!({ "value": c })),
    }
}

fn polynomial_json(p: &Polynomial) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .rev()
        .map(|(m, c)| json!({ "coeff": c.to_string(), "exponents": m.exponents() }))
        .collect();
    json!({ "window": p.window(), "terms": terms })
}

fn run(cli: &Cli) -> Result<(Output, bool), Error> {
    let f = cli.format;
    fkcanon::set_limits(Limits { max_n: cli.limit_n, max_degree: cli.max_degree });
    let out = match &cli.command {
        Command::Skew { perm, w, v, method } => {
            let ps = parse_perms(perm, &[w, v])?;
            element_out(&skew::skew(&ps[0], &ps[1], (*method).into()), f)
        }
        Command::Cuv { perm, u, v, w, table } => {
            if *table {
                let n = perm.n.unwrap_or(3);
                let perms = all_permutations(n);
                let mut rows = Vec::new();
                for u in &perms {
                    for v in &perms {
                        for w in perms.iter().filter(|w| w.length() == u.length() + v.length()) {
                            let c = skew::structure_constant(u, v, w)?;
                            if c != 0 {
                                rows.push((u.to_one_line(), v.to_one_line(), w.to_one_line(), c));
                            }
                        }
                    }
                }
                match f {
                    Format::Text => Output::Text(
                        rows.iter().map(|(u, v, w, c)| format!("{u} {v} {w} {c}")).collect::<Vec<_>>().join("\n"),
                    ),
                    Format::Json => Output::Json(Value::Array(
                        rows.iter().map(|(u, v, w, c)| json!({ "u": u, "v": v, "w": w, "c": c })).collect(),
                    )),
                }
            } else {
                let texts = [u.as_deref().unwrap_or(""), v.as_deref().unwrap_or(""), w.as_deref().unwrap_or("")];
                let ps = parse_perms(perm, &texts)?;
                scalar_out(skew::structure_constant(&ps[0], &ps[1], &ps[2])?, f)
            }
        }
        Command::Schubert { perm, w } => {
            let p = schubert(&parse_perms(perm, &[w])?[0]);
            match f {
                Format::Text => Output::Text(p.to_string()),
                Format::Json => Output::Json(polynomial_json(&p)),
            }
        }
        Command::Fk { op } => match op {
            FkOp::Coproduct { element } => tensor_out(&fkalg::coproduct(&parse_element(element)?), f),
            FkOp::Antipode { element } => element_out(&fkalg::antipode(&parse_element(element)?), f),
            FkOp::Sbar { element } => element_out(&fkalg::sbar(&parse_element(element)?), f),
            FkOp::Pairing { a, b } => scalar_out(fkalg::pairing(&parse_element(a)?, &parse_element(b)?), f),
            FkOp::Delta { p, element } => {
                element_out(&fkalg::delta_elem(&parse_element(p)?, &parse_element(element)?), f)
            }
            FkOp::Nabla { element, p } => {
                element_out(&fkalg::nabla_elem(&parse_element(element)?, &parse_element(p)?), f)
            }
        },
        Command::Canon { dim, n, equal, element } => {
            if *dim {
                let n = n.unwrap();
                let dims: Vec<usize> =
                    (0..=cli.max_degree).map(|d| fkcanon::graded_dimension(n, d)).collect::<Result<_, _>>()?;
                match f {
                    Format::Text => Output::Text(
                        dims.iter().enumerate().map(|(d, k)| format!("dim({n},{d})={k}")).collect::<Vec<_>>().join("\n"),
                    ),
                    Format::Json => Output::Json(json!({ "n": n, "dimensions": dims })),
                }
            } else if let Some(pair) = equal {
                let eq = fkcanon::fk_equal(&parse_element(&pair[0])?, &parse_element(&pair[1])?)?;
                match f {
                    Format::Text => Output::Text(eq.to_string()),
                    Format::Json => Output::Json(json!({ "equal": eq })),
                }
            } else if let Some(e) = element {
                element_out(&fkcanon::canonical_form(&parse_element(e)?)?, f)
            } else {
                return Err(Error::Parse { pos: 0, msg: "canon needs --dim, --equal or an element".into() });
            }
        }
        Command::Verify { suite, n, samples } => {
            let suite: Suite = suite.parse()?;
            let cfg = VerifyConfig { n: *n, max_degree: cli.max_degree, samples: *samples, seed: cli.seed };
            let report = verify::run(suite, &cfg)?;
            let ok = report.passed();
            let out = match f {
                Format::Text => Output::Text(report.to_text().trim_end().to_string()),
                Format::Json => Output::Json(report.to_json()),
            };
            return Ok((out, ok));
        }
    };
    Ok((out, true))
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse { .. }
        | Error::NotAPermutation(_)
        | Error::GeneratorOutOfRange { .. }
        | Error::InvalidTransposition(..)
        | Error::EqualIndices(_)
        | Error::IndexOutOfWindow { .. }
        | Error::NotReduced(_) => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((out, ok)) => {
            match out {
                Output::Text(t) => println!("{t}"),
                Output::Json(v) => println!("{v}"),
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
