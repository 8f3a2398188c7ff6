//! The `atilde` command line.
//!
//! Every subcommand takes its inputs as positional arguments, or, when none
//! are given, one per line on stdin (blank lines and lines starting with `#`
//! are skipped). An input is either a word such as `t[-1]^-1 s3 t[2]` or a
//! JSON matrix `{"n":3,"perm":[2,1,3],"exps":[1,-1,0]}`. `meet` and `join`
//! read `A | B` per line, `wp` reads `W1 == W2`.
//!
//! Exit codes: 0 on success, 1 when an answer is false or a verification
//! fails, 2 on usage and parse errors.

use std::ffi::OsString;
use std::io::Read;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::artin::{verify_cll, verify_k_iso, verify_phi, verify_shi};
use crate::dot::atom_graph_dot;
use crate::error::{Error, Result};
use crate::garside::{from_group_word, verify_monoid_relations, GroupElement};
use crate::geodesic::{length, reduced_expression};
use crate::interval::{
    in_interval, in_right_interval, join_left, join_right, meet_left, meet_right, IntervalCtx,
    Simple,
};
use crate::monomial::{eval_word, MonomialMatrix};
use crate::relations::VerificationReport;
use crate::word::{Generator, GroupWord};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Args, Clone, Debug)]
struct GlobalArgs {
    /// Matrix dimension; inferred from the inputs when omitted.
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Interval parameter: simples are the divisors of lambda^k.
    #[arg(
        long,
        global = true,
        default_value_t = 1,
        allow_negative_numbers = true
    )]
    k: i64,
    /// Largest |i| of the t_i used by verification suites.
    #[arg(long, global = true, default_value_t = 3)]
    bound: i64,
    /// Wrap every result in {"ok": bool, "result": ...}.
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Parser, Debug)]
#[command(
    name = "atilde",
    version,
    about = "Interval Garside structures for the affine Artin group of type A~"
)]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate a word to a monomial matrix.
    Eval { inputs: Vec<String> },
    /// Length over the generators t_i, s_j.
    Length { inputs: Vec<String> },
    /// Reduced expression.
    Reduce { inputs: Vec<String> },
    /// Membership in [1, lambda^k].
    Member {
        /// Test right divisibility instead.
        #[arg(long)]
        right: bool,
        inputs: Vec<String>,
    },
    /// Meet of two simples.
    Meet {
        #[arg(long)]
        right: bool,
        inputs: Vec<String>,
    },
    /// Join of two simples.
    Join {
        #[arg(long)]
        right: bool,
        inputs: Vec<String>,
    },
    /// Garside normal form.
    Nf { inputs: Vec<String> },
    /// Word problem: `W1 == W2`.
    Wp { inputs: Vec<String> },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
    },
    /// Atom graph of a simple in DOT.
    Dot { inputs: Vec<String> },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Cll,
    Shi,
    Phi,
    KIso,
    Monoid,
}

/// Resolved settings shared by all subcommands.
#[derive(Clone, Debug)]
pub struct CliConfig {
    pub n: Option<usize>,
    pub k: i64,
    pub index_bound: i64,
    pub format: Format,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CliOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Outcome {
    ok: bool,
    text: String,
    value: Value,
}

impl Outcome {
    fn ok(text: impl Into<String>, value: Value) -> Outcome {
        Outcome {
            ok: true,
            text: text.into(),
            value,
        }
    }

    fn truth(b: bool) -> Outcome {
        Outcome {
            ok: b,
            text: b.to_string(),
            value: Value::Bool(b),
        }
    }
}

enum Input {
    Matrix(MonomialMatrix),
    Word(GroupWord),
}

fn parse_input(s: &str) -> Result<Input> {
    let t = s.trim();
    if t.starts_with('{') {
        Ok(Input::Matrix(MonomialMatrix::from_json_str(t)?))
    } else {
        Ok(Input::Word(t.parse()?))
    }
}

fn word_dim(w: &GroupWord) -> usize {
    w.letters()
        .iter()
        .filter_map(|l| match l.gen {
            Generator::S(j) => Some(j),
            Generator::T(_) => None,
        })
        .max()
        .unwrap_or(2)
        .max(2)
}

fn resolve_n(cfg: &CliConfig, inputs: &[Input]) -> Result<usize> {
    let from_matrix = inputs.iter().find_map(|i| match i {
        Input::Matrix(m) => Some(m.n()),
        Input::Word(_) => None,
    });
    let n = match (cfg.n, from_matrix) {
        (Some(n), _) => n,
        (None, Some(n)) => n,
        (None, None) => inputs
            .iter()
            .map(|i| match i {
                Input::Word(w) => word_dim(w),
                Input::Matrix(m) => m.n(),
            })
            .max()
            .unwrap_or(2),
    };
    if n < 2 {
        return Err(Error::BadDimension(n));
    }
    for i in inputs {
        if let Input::Matrix(m) = i {
            if m.n() != n {
                return Err(Error::DimensionMismatch(m.n(), n));
            }
        }
    }
    Ok(n)
}

fn to_matrix(i: &Input, n: usize) -> Result<MonomialMatrix> {
    match i {
        Input::Matrix(m) => Ok(m.clone()),
        Input::Word(w) => eval_word(w, n),
    }
}

/// A word for the braid group; matrices are lifted along their reduced
/// expression.
fn to_word(i: &Input) -> GroupWord {
    match i {
        Input::Matrix(m) => reduced_expression(m),
        Input::Word(w) => w.clone(),
    }
}

fn parse_all(parts: &[&str], cfg: &CliConfig) -> Result<(Vec<Input>, usize)> {
    let inputs = parts
        .iter()
        .map(|p| parse_input(p))
        .collect::<Result<Vec<_>>>()?;
    let n = resolve_n(cfg, &inputs)?;
    Ok((inputs, n))
}

fn simple_value(s: &Simple) -> Value {
    json!({ "word": s.word().to_string(), "matrix": s.matrix().to_json() })
}

fn element_value(g: &GroupElement) -> Value {
    let factors: Vec<String> = g.factors().iter().map(|s| s.word().to_string()).collect();
    json!({ "delta_exp": g.delta_exp(), "factors": factors, "text": g.to_string() })
}

fn report_outcome(r: VerificationReport) -> Outcome {
    Outcome {
        ok: r.passed(),
        text: r.to_string(),
        value: serde_json::to_value(&r).expect("report json"),
    }
}

fn split_pair<'a>(line: &'a str, sep: &str) -> Result<(&'a str, &'a str)> {
    line.split_once(sep).ok_or_else(|| Error::Parse {
        pos: 1,
        token: line.to_string(),
        msg: format!("expected `A {sep} B`"),
    })
}

fn single(cmd: &Command, cfg: &CliConfig, item: &str) -> Result<Outcome> {
    match cmd {
        Command::Eval { .. } => {
            let (inp, n) = parse_all(&[item], cfg)?;
            let m = to_matrix(&inp[0], n)?;
            Ok(Outcome::ok(
                m.to_json_string(),
                serde_json::to_value(m.to_json()).expect("json"),
            ))
        }
        Command::Length { .. } => {
            let (inp, n) = parse_all(&[item], cfg)?;
            let l = length(&to_matrix(&inp[0], n)?);
            Ok(Outcome::ok(l.to_string(), json!(l)))
        }
        Command::Reduce { .. } => {
            let (inp, n) = parse_all(&[item], cfg)?;
            let w = reduced_expression(&to_matrix(&inp[0], n)?).to_string();
            Ok(Outcome::ok(w.clone(), json!(w)))
        }
        Command::Member { right, .. } => {
            let (inp, n) = parse_all(&[item], cfg)?;
            let ctx = IntervalCtx::new(n, cfg.k)?;
            let m = to_matrix(&inp[0], n)?;
            Ok(Outcome::truth(if *right {
                in_right_interval(&m, &ctx)
            } else {
                in_interval(&m, &ctx)
            }))
        }
        Command::Meet { right, .. } | Command::Join { right, .. } => {
            let (a, b) = split_pair(item, "|")?;
            let (inp, n) = parse_all(&[a, b], cfg)?;
            let ctx = IntervalCtx::new(n, cfg.k)?;
            let a = ctx.simple(to_matrix(&inp[0], n)?)?;
            let b = ctx.simple(to_matrix(&inp[1], n)?)?;
            let r = match (matches!(cmd, Command::Meet { .. }), right) {
                (true, false) => meet_left(&a, &b, &ctx),
                (true, true) => meet_right(&a, &b, &ctx),
                (false, false) => join_left(&a, &b, &ctx),
                (false, true) => join_right(&a, &b, &ctx),
            };
            Ok(Outcome::ok(r.word().to_string(), simple_value(&r)))
        }
        Command::Nf { .. } => {
            let (inp, n) = parse_all(&[item], cfg)?;
            let ctx = IntervalCtx::new(n, cfg.k)?;
            let g = from_group_word(&to_word(&inp[0]), &ctx)?;
            Ok(Outcome::ok(g.to_string(), element_value(&g)))
        }
        Command::Wp { .. } => {
            let (a, b) = split_pair(item, "==")?;
            let (inp, n) = parse_all(&[a, b], cfg)?;
            let ctx = IntervalCtx::new(n, cfg.k)?;
            let g1 = from_group_word(&to_word(&inp[0]), &ctx)?;
            let g2 = from_group_word(&to_word(&inp[1]), &ctx)?;
            Ok(Outcome::truth(g1 == g2))
        }
        Command::Dot { .. } => {
            let (inp, n) = parse_all(&[item], cfg)?;
            let ctx = IntervalCtx::new(n, cfg.k)?;
            let s = ctx.simple(to_matrix(&inp[0], n)?)?;
            let d = atom_graph_dot(&s, &ctx);
            Ok(Outcome::ok(d.trim_end(), json!(d)))
        }
        Command::Verify { .. } => unreachable!("verify takes no inputs"),
    }
}

fn verify(suite: Suite, cfg: &CliConfig) -> Result<Outcome> {
    let n = cfg.n.unwrap_or(3);
    let r = match suite {
        Suite::Cll => verify_cll(n, cfg.index_bound)?,
        Suite::Shi => verify_shi(n, cfg.index_bound)?,
        Suite::Phi => verify_phi(&IntervalCtx::new(n, cfg.k)?)?,
        Suite::KIso => verify_k_iso(n, cfg.index_bound)?,
        Suite::Monoid => verify_monoid_relations(&IntervalCtx::new(n, cfg.k)?, cfg.index_bound)?,
    };
    Ok(report_outcome(r))
}

fn positional(cmd: &Command) -> Option<&Vec<String>> {
    match cmd {
        Command::Eval { inputs }
        | Command::Length { inputs }
        | Command::Reduce { inputs }
        | Command::Member { inputs, .. }
        | Command::Meet { inputs, .. }
        | Command::Join { inputs, .. }
        | Command::Nf { inputs }
        | Command::Wp { inputs }
        | Command::Dot { inputs } => Some(inputs),
        Command::Verify { .. } => None,
    }
}

/// Work items from the command line; `None` means read stdin.
fn items_from_args(cmd: &Command, args: &[String]) -> Option<Vec<String>> {
    if args.is_empty() {
        return None;
    }
    Some(match cmd {
        Command::Meet { .. } | Command::Join { .. } => {
            if args.len() == 2 && args.iter().all(|a| !a.contains('|')) {
                vec![format!("{} | {}", args[0], args[1])]
            } else {
                args.to_vec()
            }
        }
        Command::Wp { .. } => {
            let joined = args.join(" ");
            if args.len() == 2 && !joined.contains("==") {
                vec![format!("{} == {}", args[0], args[1])]
            } else {
                vec![joined]
            }
        }
        _ => args.to_vec(),
    })
}

struct Emitter {
    format: Format,
    out: CliOutput,
}

impl Emitter {
    fn emit(&mut self, res: Result<Outcome>, line: Option<usize>) {
        let at = line.map(|l| format!("line {l}: ")).unwrap_or_default();
        match res {
            Ok(o) => {
                let code = if o.ok { 0 } else { 1 };
                self.out.code = self.out.code.max(code);
                match self.format {
                    Format::Json => {
                        let env = json!({ "ok": o.ok, "result": o.value });
                        self.out.stdout.push_str(&env.to_string());
                    }
                    Format::Text | Format::Dot => self.out.stdout.push_str(&o.text),
                }
                self.out.stdout.push('\n');
            }
            Err(e) => {
                self.out.code = 2;
                if self.format == Format::Json {
                    let mut err = json!({ "message": e.to_string() });
                    if let Error::Parse { pos, token, .. } = &e {
                        err["token"] = json!(token);
                        err["position"] = json!(pos);
                    }
                    if let Some(l) = line {
                        err["line"] = json!(l);
                    }
                    let env = json!({ "ok": false, "result": Value::Null, "error": err });
                    self.out.stdout.push_str(&env.to_string());
                    self.out.stdout.push('\n');
                }
                self.out.stderr.push_str(&format!("error: {at}{e}\n"));
            }
        }
    }
}

/// Runs the command line `argv` (including the program name) with the given
/// stdin, which is only read in batch mode.
pub fn run<I, T>(argv: I, stdin: &mut dyn Read) -> CliOutput
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            let code = if e.use_stderr() { 2 } else { 0 };
            return if code == 0 {
                CliOutput {
                    code,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                CliOutput {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let format = match (&cli.cmd, cli.global.json) {
        (_, true) => Format::Json,
        (Command::Dot { .. }, false) => Format::Dot,
        _ => Format::Text,
    };
    let cfg = CliConfig {
        n: cli.global.n,
        k: cli.global.k,
        index_bound: cli.global.bound,
        format,
    };
    let mut em = Emitter {
        format,
        out: CliOutput::default(),
    };

    let Some(args) = positional(&cli.cmd) else {
        if let Command::Verify { suite } = cli.cmd {
            em.emit(verify(suite, &cfg), None);
        }
        return em.out;
    };

    match items_from_args(&cli.cmd, args) {
        Some(items) => {
            for it in items {
                em.emit(single(&cli.cmd, &cfg, &it), None);
            }
        }
        None => {
            let mut buf = String::new();
            if let Err(e) = stdin.read_to_string(&mut buf) {
                em.out.code = 2;
                em.out
                    .stderr
                    .push_str(&format!("error: reading stdin: {e}\n"));
                return em.out;
            }
            for (idx, line) in buf.lines().enumerate() {
                let t = line.trim();
                if t.is_empty() || t.starts_with('#') {
                    continue;
                }
                em.emit(single(&cli.cmd, &cfg, t), Some(idx + 1));
            }
        }
    }
    em.out
}
