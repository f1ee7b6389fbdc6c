//! Command-line front end. Every command maps to exactly one library
//! operation, emits a deterministic document on standard output, and
//! reserves the error stream for diagnostics and timing. Exit codes:
//! 0 success, 1 a verification sweep found violations, 2 usage errors.
//!
//! All numeric output is exact: naturals and integers as JSON numbers,
//! rationals as "num/den" strings.

use std::io::Write;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use num_traits::{Signed, Zero};
use serde_json::{json, Value};

use littlewood::{
    bott, cache, complex_terms, mn_character, mod_rule_closed_d1, mod_rule_recursive, mult_dim,
    multiplicity_table, partitions_of, rat, stable_specht, theorem34_check, theorem41_euler_check,
    theorem61_check, Basis, BottResult, Cohomology, CycleType, ModResult, Partition, Rat, Report,
    SymFunc, Violation,
};

/// Parses `argv` and runs the selected command, writing the result document
/// to `out` and diagnostics to `err`. Returns the process exit code.
///
/// If LITTLEWOOD_CACHE_DIR is set, memoized tables are loaded from it
/// before dispatch and written back afterwards.
pub fn run<I, S>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    0
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    2
                }
            };
        }
    };
    cache::load_from_env();
    let code = match dispatch(cli, out, err) {
        Ok(code) => code,
        Err(CliError::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
        // a closed output pipe is not an error worth reporting
        Err(CliError::Io(e)) if e.kind() == std::io::ErrorKind::BrokenPipe => 0,
        Err(CliError::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    };
    if let Err(e) = cache::save_to_env() {
        let _ = writeln!(err, "warning: failed to persist the table cache: {e}");
    }
    code
}

#[derive(Parser)]
#[command(
    name = "littlewood",
    version,
    about = "Exact computations with partitions, symmetric functions, and Littlewood complexes"
)]
struct Cli {
    /// Worker threads for verification sweeps (1 = sequential)
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,

    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Place lambda at rank n: the sorted shape and the sorting length
    Bott {
        /// Partition, comma-separated parts ("" or "0" for the empty one)
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        /// Ambient rank
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
    },
    /// Reduce the pair (lambda, mu) by iterated border-strip removal
    Modrule {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        /// Strip-length offset; the closed form exists only at d = 1
        #[arg(long, default_value_t = 1)]
        d: usize,
        /// Defaults to closed at d = 1 and recursive otherwise
        #[arg(long, value_enum)]
        method: Option<Method>,
    },
    /// Multiplicity of one shape in the complex for lambda, or the full table
    Mult {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        /// When given, emit the single multiplicity as JSON
        #[arg(long, value_parser = parse_partition)]
        mu: Option<Partition>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// The stable Specht polynomial of lambda in the Schur basis
    StableSpecht {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Term table and cohomology placement of the complex for (lambda, n)
    Complex {
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Irreducible symmetric-group character value at a cycle type
    Character {
        /// Shape indexing the irreducible; must have the same size as the cycle type
        #[arg(long, value_parser = parse_partition)]
        shape: Partition,
        #[arg(long, value_parser = parse_partition)]
        cycle_type: Partition,
    },
    /// Evaluate a symmetric-function expression at permutation eigenvalues
    Eval {
        /// Expression over +, -, *, /, parentheses, integers, and basis
        /// terms like s[2,1], h[3], e[1,1], p[2], m[] (brackets list parts)
        #[arg(long)]
        expr: String,
        #[arg(long, value_parser = parse_partition)]
        cycle_type: Partition,
    },
    /// Exhaustive identity sweeps; exit 0 only when no violations are found
    Verify {
        #[command(subcommand)]
        suite: Suite,
    },
}

#[derive(Subcommand)]
enum Suite {
    /// Closed-form modification at d = 1 against the full recursion
    #[command(name = "thm34")]
    Thm34 {
        #[arg(long, default_value_t = 8)]
        max_lambda: usize,
        #[arg(long, default_value_t = 6)]
        max_mu: usize,
        /// Refuse to run when the estimated case count exceeds this
        #[arg(long, default_value_t = 1_000_000)]
        max_cases: usize,
    },
    /// Two-alphabet Euler characteristic identity at every rank through --n
    #[command(name = "thm41")]
    Thm41 {
        #[arg(long, default_value_t = 6)]
        n: usize,
        #[arg(long, default_value_t = 6)]
        max_degree: usize,
        /// Refuse to run when the estimated case count exceeds this
        #[arg(long, default_value_t = 1_000_000)]
        max_cases: usize,
    },
    /// Stable Specht evaluations against signed character values
    #[command(name = "thm61")]
    Thm61 {
        #[arg(long, default_value_t = 5)]
        max_lambda: usize,
        #[arg(long, default_value_t = 8)]
        max_n: usize,
        /// Refuse to run when the estimated case count exceeds this
        #[arg(long, default_value_t = 1_000_000)]
        max_cases: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Latex,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Closed,
    Recursive,
}

enum CliError {
    Usage(String),
    Io(std::io::Error),
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> CliError {
        CliError::Io(e)
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn dispatch(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, CliError> {
    if cli.jobs == 0 {
        return Err(usage("--jobs must be at least 1"));
    }
    match cli.command {
        Cmd::Bott { lambda, n } => cmd_bott(&lambda, n, out),
        Cmd::Modrule { lambda, mu, d, method } => cmd_modrule(&lambda, &mu, d, method, out),
        Cmd::Mult { lambda, mu, format } => cmd_mult(&lambda, mu.as_ref(), format, out),
        Cmd::StableSpecht { lambda, format } => cmd_stable_specht(&lambda, format, out),
        Cmd::Complex { lambda, n, format } => cmd_complex(&lambda, n, format, out),
        Cmd::Character { shape, cycle_type } => cmd_character(&shape, cycle_type, out),
        Cmd::Eval { expr, cycle_type } => cmd_eval(&expr, cycle_type, out),
        Cmd::Verify { suite } => cmd_verify(&suite, cli.jobs, out, err),
    }
}

fn cmd_bott(lambda: &Partition, n: i64, out: &mut dyn Write) -> Result<i32, CliError> {
    let doc = match bott(lambda, n) {
        BottResult::Defined { result, delta } => json!({
            "defined": true,
            "lambda_n": parts_json(&result),
            "delta": delta,
        }),
        BottResult::Undefined => json!({ "defined": false }),
    };
    emit_json(out, &doc)
}

fn cmd_modrule(
    lambda: &Partition,
    mu: &Partition,
    d: usize,
    method: Option<Method>,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    if d == 0 {
        return Err(usage("--d must be at least 1"));
    }
    let method = method.unwrap_or(if d == 1 { Method::Closed } else { Method::Recursive });
    if method == Method::Closed && d != 1 {
        return Err(usage("the closed form exists only at d = 1; use --method recursive"));
    }
    let result = match method {
        Method::Closed => mod_rule_closed_d1(lambda, mu),
        Method::Recursive => mod_rule_recursive(lambda, mu, d),
    };
    let doc = match result {
        ModResult::Finite { degree, tau } => {
            let mut doc = json!({ "finite": true, "degree": degree });
            if d == 1 {
                doc["weight"] = json!(tau.weight_d1());
            }
            doc["tau"] = json!({
                "alpha": parts_json(&tau.alpha),
                "beta": parts_json(&tau.beta),
            });
            doc
        }
        ModResult::Infinite => json!({ "finite": false }),
    };
    emit_json(out, &doc)
}

fn cmd_mult(
    lambda: &Partition,
    mu: Option<&Partition>,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    if let Some(mu) = mu {
        if format != Format::Json {
            return Err(usage("a single multiplicity is a scalar and is emitted as json only"));
        }
        return emit_json(out, &json!({ "multiplicity": mult_dim(lambda, mu) }));
    }
    let table = multiplicity_table(lambda);
    match format {
        Format::Json => {
            let entries: Vec<Value> = table
                .entries
                .iter()
                .map(|(mu, m)| json!({ "mu": parts_json(mu), "multiplicity": m }))
                .collect();
            emit_json(out, &json!({ "lambda": parts_json(&table.lambda), "entries": entries }))
        }
        Format::Csv => {
            writeln!(out, "mu,multiplicity")?;
            for (mu, m) in &table.entries {
                writeln!(out, "{},{m}", csv_field(&partition_field(mu)))?;
            }
            Ok(0)
        }
        Format::Latex => {
            let rows: Vec<Vec<String>> = table
                .entries
                .iter()
                .map(|(mu, m)| vec![format!("${}$", latex_partition(mu)), format!("${m}$")])
                .collect();
            write_latex_table(out, "lr", &["$\\mu$", "mult"], &rows)?;
            Ok(0)
        }
    }
}

fn cmd_stable_specht(
    lambda: &Partition,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let f = stable_specht(lambda);
    match format {
        Format::Json => emit_json(out, &f.to_json()),
        Format::Csv => {
            writeln!(out, "mu,coeff")?;
            for (mu, c) in f.terms() {
                writeln!(out, "{},{c}", csv_field(&partition_field(mu)))?;
            }
            Ok(0)
        }
        Format::Latex => {
            writeln!(out, "{}", latex_symfunc(&f))?;
            Ok(0)
        }
    }
}

fn cmd_complex(
    lambda: &Partition,
    n: usize,
    format: Format,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    let desc = complex_terms(lambda, n);
    match format {
        Format::Json => {
            let cohomology = match &desc.cohomology {
                Cohomology::Acyclic => json!("acyclic"),
                Cohomology::At { degree, specht_label } => {
                    json!({ "degree": degree, "specht": parts_json(specht_label) })
                }
            };
            let terms: Vec<Value> = desc
                .terms
                .iter()
                .map(|layer| {
                    Value::Array(
                        layer
                            .iter()
                            .map(|t| json!({ "mu": parts_json(&t.mu), "mult": t.mult, "dim": t.dim }))
                            .collect(),
                    )
                })
                .collect();
            emit_json(
                out,
                &json!({
                    "lambda": parts_json(&desc.lambda),
                    "n": desc.n,
                    "cohomology": cohomology,
                    "terms": terms,
                }),
            )
        }
        Format::Csv => {
            writeln!(out, "degree,mu,mult,dim")?;
            for (j, layer) in desc.terms.iter().enumerate() {
                for t in layer {
                    writeln!(
                        out,
                        "{j},{},{},{}",
                        csv_field(&partition_field(&t.mu)),
                        t.mult,
                        t.dim
                    )?;
                }
            }
            Ok(0)
        }
        Format::Latex => {
            let mut rows = Vec::new();
            for (j, layer) in desc.terms.iter().enumerate() {
                for t in layer {
                    rows.push(vec![
                        format!("${j}$"),
                        format!("${}$", latex_partition(&t.mu)),
                        format!("${}$", t.mult),
                        format!("${}$", t.dim),
                    ]);
                }
            }
            write_latex_table(out, "rlrr", &["$j$", "$\\mu$", "mult", "$\\dim$"], &rows)?;
            Ok(0)
        }
    }
}

fn cmd_character(
    shape: &Partition,
    cycle_type: Partition,
    out: &mut dyn Write,
) -> Result<i32, CliError> {
    if shape.size() != cycle_type.size() {
        return Err(usage(format!(
            "--shape is a partition of {} but --cycle-type is a partition of {}",
            shape.size(),
            cycle_type.size()
        )));
    }
    let value = mn_character(shape, &CycleType::new(cycle_type));
    emit_json(out, &json!({ "value": value }))
}

fn cmd_eval(expr: &str, cycle_type: Partition, out: &mut dyn Write) -> Result<i32, CliError> {
    let rho = CycleType::new(cycle_type);
    let value = eval_expression(expr, &rho).map_err(usage)?;
    emit_json(out, &json!({ "value": value.to_string() }))
}

fn cmd_verify(
    suite: &Suite,
    jobs: usize,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, CliError> {
    let estimate = estimated_cases(suite);
    let ceiling = max_cases(suite);
    if estimate > ceiling {
        return Err(usage(format!(
            "estimated {estimate} cases exceeds the ceiling of {ceiling}; raise --max-cases to run anyway"
        )));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| usage(format!("failed to start the worker pool: {e}")))?;
    let start = Instant::now();
    let report = pool.install(|| run_suite(suite));
    let wall = start.elapsed();
    writeln!(err, "wall time: {:.3}s", wall.as_secs_f64())?;
    write!(out, "{report}")?;
    Ok(if report.passed() { 0 } else { 1 })
}

fn run_suite(suite: &Suite) -> Report {
    match *suite {
        Suite::Thm34 { max_lambda, max_mu, .. } => theorem34_check(max_lambda, max_mu),
        Suite::Thm61 { max_lambda, max_n, .. } => theorem61_check(max_lambda, max_n),
        Suite::Thm41 { n: top, max_degree, .. } => {
            let mut cases = 0;
            let mut violations = Vec::new();
            for n in 0..=top {
                let r = theorem41_euler_check(n, max_degree);
                cases += r.cases;
                violations.extend(
                    r.violations.into_iter().map(|v| Violation {
                        case: format!("n {n}, {}", v.case),
                        detail: v.detail,
                    }),
                );
            }
            Report {
                label: format!("Euler identity (n <= {top}, degree <= {max_degree})"),
                cases,
                violations,
            }
        }
    }
}

fn max_cases(suite: &Suite) -> usize {
    match *suite {
        Suite::Thm34 { max_cases, .. }
        | Suite::Thm41 { max_cases, .. }
        | Suite::Thm61 { max_cases, .. } => max_cases,
    }
}

/// Upper estimate of the case count a suite would attempt, used to refuse
/// runaway bounds before any work starts.
fn estimated_cases(suite: &Suite) -> usize {
    match *suite {
        Suite::Thm34 { max_lambda, max_mu, .. } => {
            shapes_through(max_lambda) * shapes_through(max_mu)
        }
        Suite::Thm41 { n, max_degree, .. } => {
            let s = shapes_through(max_degree);
            s * s * (n + 1)
        }
        Suite::Thm61 { max_lambda, max_n, .. } => {
            shapes_through(max_lambda) * shapes_through(max_n)
        }
    }
}

/// Number of partitions of every size up to and including `max`.
fn shapes_through(max: usize) -> usize {
    (0..=max).map(|k| partitions_of(k).count()).sum()
}

fn emit_json(out: &mut dyn Write, doc: &Value) -> Result<i32, CliError> {
    writeln!(out, "{doc}")?;
    Ok(0)
}

fn parts_json(p: &Partition) -> Value {
    Value::Array(p.parts().iter().map(|&x| Value::from(x)).collect())
}

/// Comma-joined parts; empty string for the empty partition.
fn partition_field(p: &Partition) -> String {
    let parts: Vec<String> = p.parts().iter().map(|x| x.to_string()).collect();
    parts.join(",")
}

/// Quotes a CSV field when it contains a comma, a quote, or a newline.
fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn latex_partition(p: &Partition) -> String {
    if p.is_empty() {
        "\\varnothing".to_string()
    } else {
        format!("({})", partition_field(p))
    }
}

/// Renders a symmetric function as a LaTeX math-mode sum, terms ordered by
/// degree descending (ties broken by the index order), e.g.
/// `s_{2,1} - 2 s_{1} + s_{\varnothing}`.
fn latex_symfunc(f: &SymFunc) -> String {
    let letter = f.basis().letter();
    let mut ordered: Vec<(&Partition, &Rat)> = f.terms().iter().collect();
    ordered.sort_by(|a, b| b.0.size().cmp(&a.0.size()).then_with(|| a.0.cmp(b.0)));
    if ordered.is_empty() {
        return "0".to_string();
    }
    let mut text = String::new();
    for (k, (mu, c)) in ordered.iter().enumerate() {
        let magnitude = c.abs();
        let subscript =
            if mu.is_empty() { "\\varnothing".to_string() } else { partition_field(mu) };
        let body = if magnitude == rat(1) {
            format!("{letter}_{{{subscript}}}")
        } else {
            format!("{magnitude} {letter}_{{{subscript}}}")
        };
        if k == 0 {
            if c.is_negative() {
                text.push('-');
            }
        } else {
            text.push_str(if c.is_negative() { " - " } else { " + " });
        }
        text.push_str(&body);
    }
    text
}

fn write_latex_table(
    out: &mut dyn Write,
    column_spec: &str,
    header: &[&str],
    rows: &[Vec<String>],
) -> std::io::Result<()> {
    writeln!(out, "\\begin{{tabular}}{{{column_spec}}}")?;
    writeln!(out, "{} \\\\", header.join(" & "))?;
    writeln!(out, "\\hline")?;
    for row in rows {
        writeln!(out, "{} \\\\", row.join(" & "))?;
    }
    writeln!(out, "\\end{{tabular}}")
}

/// Comma-separated parts, weakly decreasing; "" and "0" name the empty
/// partition, and zero parts are stripped.
fn parse_partition(s: &str) -> Result<Partition, String> {
    let trimmed = s.trim();
    if trimmed.is_empty() || trimmed == "0" {
        return Ok(Partition::empty());
    }
    let mut parts = Vec::new();
    for piece in trimmed.split(',') {
        let part: usize =
            piece.trim().parse().map_err(|_| format!("invalid partition part {piece:?}"))?;
        parts.push(part);
    }
    Partition::new(parts).map_err(|e| format!("invalid partition {trimmed:?}: {e}"))
}

#[derive(Clone, Debug, PartialEq)]
enum Token {
    Number(Rat),
    Atom(Basis, Partition),
    Plus,
    Minus,
    Star,
    Slash,
    Open,
    Close,
}

fn tokenize(src: &str) -> Result<Vec<Token>, String> {
    let chars: Vec<char> = src.chars().collect();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        match c {
            ' ' | '\t' => i += 1,
            '+' => {
                tokens.push(Token::Plus);
                i += 1;
            }
            '-' => {
                tokens.push(Token::Minus);
                i += 1;
            }
            '*' => {
                tokens.push(Token::Star);
                i += 1;
            }
            '/' => {
                tokens.push(Token::Slash);
                i += 1;
            }
            '(' => {
                tokens.push(Token::Open);
                i += 1;
            }
            ')' => {
                tokens.push(Token::Close);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                let n = digits
                    .parse::<num_bigint::BigInt>()
                    .map_err(|_| format!("invalid number {digits:?}"))?;
                tokens.push(Token::Number(Rat::from_integer(n)));
            }
            'a'..='z' => {
                let basis =
                    Basis::from_letter(c).ok_or_else(|| format!("unknown basis letter {c:?}"))?;
                i += 1;
                if i >= chars.len() || chars[i] != '[' {
                    return Err(format!("expected '[' after the basis letter {c:?}"));
                }
                i += 1;
                let start = i;
                while i < chars.len() && chars[i] != ']' {
                    i += 1;
                }
                if i >= chars.len() {
                    return Err("unclosed '[' in a basis term".to_string());
                }
                let inside: String = chars[start..i].iter().collect();
                i += 1;
                let index = parse_partition(&inside)?;
                tokens.push(Token::Atom(basis, index));
            }
            _ => return Err(format!("unexpected character {c:?} in the expression")),
        }
    }
    Ok(tokens)
}

struct ExprParser<'a> {
    tokens: Vec<Token>,
    pos: usize,
    rho: &'a CycleType,
}

/// Evaluates an expression at the eigenvalues of a permutation of the given
/// cycle type. Basis atoms are evaluated individually; this agrees with
/// evaluating the expression in the ring because evaluation is a ring
/// homomorphism.
fn eval_expression(src: &str, rho: &CycleType) -> Result<Rat, String> {
    let tokens = tokenize(src)?;
    if tokens.is_empty() {
        return Err("empty expression".to_string());
    }
    let mut parser = ExprParser { tokens, pos: 0, rho };
    let value = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err("unexpected trailing input after the expression".to_string());
    }
    Ok(value)
}

impl ExprParser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn expr(&mut self) -> Result<Rat, String> {
        let mut value = self.term()?;
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    value += self.term()?;
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    value -= self.term()?;
                }
                _ => return Ok(value),
            }
        }
    }

    fn term(&mut self) -> Result<Rat, String> {
        let mut value = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    value *= self.factor()?;
                }
                Some(Token::Slash) => {
                    self.pos += 1;
                    let divisor = self.factor()?;
                    if divisor.is_zero() {
                        return Err("division by zero".to_string());
                    }
                    value /= divisor;
                }
                _ => return Ok(value),
            }
        }
    }

    fn factor(&mut self) -> Result<Rat, String> {
        if matches!(self.peek(), Some(Token::Minus)) {
            self.pos += 1;
            return Ok(-self.factor()?);
        }
        self.primary()
    }

    fn primary(&mut self) -> Result<Rat, String> {
        let token =
            self.peek().cloned().ok_or_else(|| "unexpected end of the expression".to_string())?;
        self.pos += 1;
        match token {
            Token::Number(r) => Ok(r),
            Token::Atom(basis, index) => {
                Ok(SymFunc::term(basis, index, rat(1)).eval_at_cycle_type(self.rho))
            }
            Token::Open => {
                let value = self.expr()?;
                match self.peek() {
                    Some(Token::Close) => {
                        self.pos += 1;
                        Ok(value)
                    }
                    _ => Err("expected ')'".to_string()),
                }
            }
            _ => Err("expected a number, a basis term, or '('".to_string()),
        }
    }
}
