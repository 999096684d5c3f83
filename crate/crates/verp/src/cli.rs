//! Argument parsing and output formatting for the `verp` binary. Every
//! subcommand forwards to one library call.

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::alcove::{
    is_admissible, level_rank_d, level_rank_d_inverse, psi_data, tensor_with_v, GLWeight,
};
use crate::borel::{borel_translate, BorelPermutation, GLXShape, TupleWeight};
use crate::caps::{
    cap_diagram, dual_simple, hat, kac_composition, lowest_weight, p_set, projective_filtration,
    projective_word,
};
use crate::diagram::{decode, encode, parse_ascii, render_ascii, WeightDiagram};
use crate::error::{Error, Result};
use crate::fusion::{fuse_simples, PrimeP, VerSimple};
use crate::selfcheck::{run_suite, SuiteConfig, SuiteReport, SUITES};
use crate::serganova::{kac_lowest, serganova_hat, sh_nonzero, ClassicalWeight};
use crate::superweight::{
    atypicality, casimir_scalar, kac_irreducible, SuperCoords, SuperShape, SuperWeight,
};
use crate::translation::{translate_projective, translate_simple, translate_weights, Kind};

pub const TOOL: &str = "verp";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Parser)]
#[command(
    name = "verp",
    version,
    about = "Combinatorics of GL(X) in the Verlinde category Ver_p"
)]
struct Cli {
    /// Print the JSON envelope instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct PArg {
    #[arg(long)]
    p: i64,
}

#[derive(Debug, Args)]
struct GlArgs {
    #[arg(long)]
    p: i64,
    /// Comma-separated entries, e.g. `--lambda=6,5,2`.
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
}

#[derive(Debug, Args)]
struct SuperArgs {
    #[arg(long)]
    p: i64,
    /// Rank of the first summand; defaults to the length of `--mu`.
    #[arg(long)]
    m: Option<usize>,
    /// Rank of the second summand; defaults to the length of `--nu`.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    mu: String,
    #[arg(long, allow_hyphen_values = true)]
    nu: String,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// L_i ⊗ L_j in Ver_p.
    Fuse {
        #[arg(long)]
        p: i64,
        #[arg(long)]
        i: i64,
        #[arg(long)]
        j: i64,
    },
    /// Whether a weight lies in the fundamental alcove.
    Alcove(GlArgs),
    /// Summands of L(λ) ⊗ V.
    TensorV(GlArgs),
    /// The level-rank bijection D, or its inverse.
    LevelRank {
        #[command(flatten)]
        w: GlArgs,
        #[arg(long)]
        inverse: bool,
    },
    /// The invertible object ψ for GL_n.
    Psi {
        #[arg(long)]
        p: i64,
        #[arg(long)]
        n: usize,
    },
    /// Weight diagram of (μ|ν).
    DiagramEncode {
        #[command(flatten)]
        w: SuperArgs,
        /// Vertex the printed cut starts at.
        #[arg(long, default_value_t = 0)]
        cut: usize,
    },
    /// (μ|ν) from a diagram such as `o<ox>>x<oo> @3 t1^-3 t2^2`.
    DiagramDecode {
        #[arg(long)]
        p: i64,
        #[arg(long, allow_hyphen_values = true)]
        diagram: String,
    },
    /// Diagram and cap diagram of (μ|ν) as text.
    Render {
        #[command(flatten)]
        w: SuperArgs,
        #[arg(long, default_value_t = 0)]
        cut: usize,
    },
    /// Caps and free circles.
    Caps(SuperArgs),
    Atypicality(SuperArgs),
    /// ⟨λ+2ρ, λ⟩ and its residue.
    Casimir(SuperArgs),
    /// Whether K(λ) is simple.
    Irreducible(SuperArgs),
    /// The set 𝒫(λ) of Kac factors of P(λ).
    Pset(SuperArgs),
    /// Kac filtration multiplicities of P(λ).
    Filtration(SuperArgs),
    /// Composition factors of K(α).
    KacFactors(SuperArgs),
    /// Highest weight of P(λ).
    Hat(SuperArgs),
    /// Lowest weight of L(λ).
    Lowest(SuperArgs),
    /// Label of L(λ)^*.
    Dual(SuperArgs),
    /// One F_i or E_i step on a Kac module, simple or projective.
    Translate {
        #[command(flatten)]
        w: SuperArgs,
        #[arg(long)]
        kind: String,
        #[arg(long)]
        i: u32,
        /// kac, simple or projective.
        #[arg(long, default_value = "kac")]
        object: String,
    },
    /// A word in F_i, E_i building P(λ) from a typical Kac module.
    ProjectiveWord(SuperArgs),
    /// Serganova's λ̂ for classical weights.
    Serganova {
        #[arg(long)]
        p: i64,
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
    },
    /// Relabels a simple of GL(X) from the standard Borel to the w-Borel.
    BorelTranslate {
        #[arg(long)]
        p: i64,
        #[arg(long)]
        types: String,
        /// One per summand, in order.
        #[arg(long, allow_hyphen_values = true)]
        part: Vec<String>,
        /// One-line notation, 1-based.
        #[arg(long)]
        w: String,
    },
    /// Runs invariant suites over a weight window.
    Selfcheck {
        #[arg(long)]
        p: i64,
        #[arg(long, default_value = "all")]
        suite: String,
        /// Window as `lo,hi`; defaults to -p..p-1.
        #[arg(long, allow_hyphen_values = true)]
        window: Option<String>,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliOutput {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

struct Reply {
    result: Value,
    human: String,
    warnings: Vec<String>,
}

impl Reply {
    fn new(result: Value, human: impl Into<String>) -> Self {
        Reply {
            result,
            human: human.into(),
            warnings: vec![],
        }
    }
}

/// Runs one invocation; `args[0]` is the program name.
pub fn run(args: &[String]) -> CliOutput {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => CliOutput {
                    stdout: e.to_string(),
                    stderr: String::new(),
                    code: 0,
                },
                _ => {
                    let first = e
                        .to_string()
                        .lines()
                        .next()
                        .unwrap_or_default()
                        .trim_start_matches("error: ")
                        .to_string();
                    CliOutput {
                        stdout: String::new(),
                        stderr: format!("error[usage]: {first}\n"),
                        code: 1,
                    }
                }
            };
        }
    };
    let name = command_name(&cli.command);
    match dispatch(cli.command) {
        Ok(reply) => {
            let stdout = if cli.json {
                let env = json!({
                    "command": name,
                    "result": reply.result,
                    "warnings": reply.warnings,
                    "provenance": { "tool": TOOL, "version": VERSION },
                });
                format!(
                    "{}\n",
                    serde_json::to_string(&env).expect("json values serialize")
                )
            } else {
                let mut s = reply.human;
                if !s.ends_with('\n') {
                    s.push('\n');
                }
                for w in &reply.warnings {
                    s.push_str(&format!("warning: {w}\n"));
                }
                s
            };
            CliOutput {
                stdout,
                stderr: String::new(),
                code: 0,
            }
        }
        Err(e) => CliOutput {
            stdout: String::new(),
            stderr: format!("error[{}]: {}\n", e.code(), e.message()),
            code: e.exit_code(),
        },
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Fuse { .. } => "fuse",
        Command::Alcove(_) => "alcove",
        Command::TensorV(_) => "tensor-v",
        Command::LevelRank { .. } => "level-rank",
        Command::Psi { .. } => "psi",
        Command::DiagramEncode { .. } => "diagram-encode",
        Command::DiagramDecode { .. } => "diagram-decode",
        Command::Render { .. } => "render",
        Command::Caps(_) => "caps",
        Command::Atypicality(_) => "atypicality",
        Command::Casimir(_) => "casimir",
        Command::Irreducible(_) => "irreducible",
        Command::Pset(_) => "pset",
        Command::Filtration(_) => "filtration",
        Command::KacFactors(_) => "kac-factors",
        Command::Hat(_) => "hat",
        Command::Lowest(_) => "lowest",
        Command::Dual(_) => "dual",
        Command::Translate { .. } => "translate",
        Command::ProjectiveWord(_) => "projective-word",
        Command::Serganova { .. } => "serganova",
        Command::BorelTranslate { .. } => "borel-translate",
        Command::Selfcheck { .. } => "selfcheck",
    }
}

/// Comma-separated integers; surrounding brackets are tolerated.
pub fn parse_ints(text: &str) -> Result<Vec<i64>> {
    let t = text
        .trim()
        .trim_start_matches(['(', '['])
        .trim_end_matches([')', ']']);
    if t.trim().is_empty() {
        return Ok(vec![]);
    }
    t.split(',')
        .map(|x| {
            x.trim().parse::<i64>().map_err(|_| {
                Error::validation(
                    "malformed-weight",
                    format!("{x:?} in {text:?} is not an integer"),
                )
            })
        })
        .collect()
}

fn prime(p: i64) -> Result<PrimeP> {
    PrimeP::new(p)
}

fn gl(a: &GlArgs) -> Result<GLWeight> {
    GLWeight::new(prime(a.p)?, parse_ints(&a.lambda)?)
}

fn super_weight(a: &SuperArgs) -> Result<SuperWeight> {
    let p = prime(a.p)?;
    let (mu, nu) = (parse_ints(&a.mu)?, parse_ints(&a.nu)?);
    for (flag, want, got) in [("m", a.m, mu.len()), ("n", a.n, nu.len())] {
        if want.is_some_and(|w| w != got) {
            return Err(Error::validation(
                "shape-mismatch",
                format!(
                    "--{flag} {} but {got} entries given",
                    want.unwrap_or_default()
                ),
            ));
        }
    }
    SuperWeight::new(SuperShape::new(mu.len(), nu.len(), p)?, mu, nu)
}

fn ints(v: &[i64]) -> Value {
    json!(v)
}

fn coords_json(c: &SuperCoords) -> Value {
    json!({ "mu": c.mu, "nu": c.nu })
}

fn weight_json(w: &SuperWeight) -> Value {
    coords_json(w.coords())
}

fn diagram_json(d: &WeightDiagram, cut: usize) -> Value {
    let label = d.label();
    json!({ "text": render_ascii(d, cut), "t1": label.e1, "t2": label.e2 })
}

fn weights_reply(ws: &[SuperWeight]) -> Reply {
    let human = ws
        .iter()
        .map(|w| format!("{w}  {}", render_ascii(&encode(w), 0)))
        .collect::<Vec<_>>()
        .join("\n");
    let arr: Vec<Value> = ws
        .iter()
        .map(|w| json!({ "weight": weight_json(w), "diagram": diagram_json(&encode(w), 0) }))
        .collect();
    Reply::new(Value::Array(arr), human)
}

fn report_json(r: &SuiteReport) -> Value {
    json!({
        "suite": r.suite,
        "checked": r.checked,
        "failed": r.failed,
        "aborted": r.aborted,
        "passed": r.passed(),
        "samples": r.samples,
    })
}

fn report_line(r: &SuiteReport) -> String {
    let mut s = format!(
        "{} {}: {} checked, {} failed, {} aborted",
        if r.passed() { "PASS" } else { "FAIL" },
        r.suite,
        r.checked,
        r.failed,
        r.aborted
    );
    for x in &r.samples {
        s.push_str(&format!("\n  {x}"));
    }
    s
}

fn dispatch(cmd: Command) -> Result<Reply> {
    Ok(match cmd {
        Command::Fuse { p, i, j } => {
            let p = prime(p)?;
            let out = fuse_simples(VerSimple::new(i, p)?, VerSimple::new(j, p)?, p)?;
            let idx: Vec<u32> = out.iter().map(|s| s.index()).collect();
            let human = idx
                .iter()
                .map(|k| format!("L{k}"))
                .collect::<Vec<_>>()
                .join(" + ");
            Reply::new(json!(idx), human)
        }
        Command::Alcove(a) => {
            let p = prime(a.p)?;
            let e = parse_ints(&a.lambda)?;
            let ok = is_admissible(&e, e.len(), p)?;
            Reply::new(json!(ok), if ok { "admissible" } else { "not admissible" })
        }
        Command::TensorV(a) => {
            let l = gl(&a)?;
            let out = tensor_with_v(&l);
            let human = out
                .iter()
                .map(|w| w.to_string())
                .collect::<Vec<_>>()
                .join("\n");
            Reply::new(
                json!(out.iter().map(|w| ints(w.entries())).collect::<Vec<_>>()),
                human,
            )
        }
        Command::LevelRank { w, inverse } => {
            let l = gl(&w)?;
            let (k, parity) = if inverse {
                level_rank_d_inverse(&l)
            } else {
                level_rank_d(&l)
            };
            let human = format!("{k} parity {parity}");
            Reply::new(json!({ "weight": k.entries(), "parity": parity }), human)
        }
        Command::Psi { p, n } => {
            let t = psi_data(n, prime(p)?)?;
            let human = format!("psi = {} (a = {}, b = {})", t.psi, t.a, t.b);
            Reply::new(json!({ "psi": t.psi.entries(), "a": t.a, "b": t.b }), human)
        }
        Command::DiagramEncode { w, cut } => {
            let d = encode(&super_weight(&w)?);
            Reply::new(diagram_json(&d, cut), render_ascii(&d, cut))
        }
        Command::DiagramDecode { p, diagram } => {
            let d = parse_ascii(prime(p)?, &diagram)?;
            let w = decode(&d, d.m(), d.n())?;
            Reply::new(weight_json(&w), w.to_string())
        }
        Command::Render { w, cut } => {
            let d = encode(&super_weight(&w)?);
            let cd = cap_diagram(&d);
            let text = format!(
                "{}\n{}\nfree: {:?}",
                render_ascii(&d, cut),
                cd.render(),
                cd.free_circles
            );
            let caps: Vec<Value> = cd.caps.iter().map(|c| json!([c.source, c.tail])).collect();
            Reply::new(
                json!({ "diagram": diagram_json(&d, cut), "caps": caps, "free": cd.free_circles }),
                text,
            )
        }
        Command::Caps(a) => {
            let cd = cap_diagram(&encode(&super_weight(&a)?));
            let caps: Vec<Value> = (0..cd.caps.len())
                .map(|j| json!({ "source": cd.caps[j].source, "tail": cd.caps[j].tail, "inner": cd.is_inner(j) }))
                .collect();
            let human = format!("{}\nfree: {:?}", cd.render(), cd.free_circles);
            Reply::new(json!({ "caps": caps, "free": cd.free_circles }), human)
        }
        Command::Atypicality(a) => {
            let k = atypicality(&super_weight(&a)?);
            Reply::new(json!(k), k.to_string())
        }
        Command::Casimir(a) => {
            let (v, r) = casimir_scalar(&super_weight(&a)?);
            Reply::new(
                json!({ "value": v, "residue": r }),
                format!("{v} (residue {r})"),
            )
        }
        Command::Irreducible(a) => {
            let b = kac_irreducible(&super_weight(&a)?);
            Reply::new(json!(b), if b { "irreducible" } else { "reducible" })
        }
        Command::Pset(a) => weights_reply(&p_set(&super_weight(&a)?)),
        Command::Filtration(a) => {
            let f = projective_filtration(&super_weight(&a)?);
            let arr: Vec<Value> = f
                .iter()
                .map(|(w, k)| json!({ "weight": weight_json(w), "multiplicity": k }))
                .collect();
            let human = f
                .iter()
                .map(|(w, k)| format!("{k} x K{w}"))
                .collect::<Vec<_>>()
                .join("\n");
            Reply::new(Value::Array(arr), human)
        }
        Command::KacFactors(a) => weights_reply(&kac_composition(&super_weight(&a)?)),
        Command::Hat(a) => {
            let h = hat(&super_weight(&a)?);
            Reply::new(weight_json(&h), h.to_string())
        }
        Command::Lowest(a) => {
            let c = lowest_weight(&super_weight(&a)?);
            Reply::new(coords_json(&c), c.to_string())
        }
        Command::Dual(a) => {
            let d = dual_simple(&super_weight(&a)?);
            Reply::new(weight_json(&d), d.to_string())
        }
        Command::Translate { w, kind, i, object } => {
            let l = super_weight(&w)?;
            let kind: Kind = kind.parse()?;
            if i >= l.p().get() {
                return Err(Error::validation(
                    "bad-residue",
                    format!("residue {i} is not below p = {}", l.p()),
                ));
            }
            match object.as_str() {
                "kac" => weights_reply(&translate_weights(kind, i, &l)),
                "simple" => weights_reply(&[translate_simple(kind, i, &l)?]),
                "projective" => weights_reply(&[translate_projective(kind, i, &l)?]),
                o => {
                    return Err(Error::validation(
                        "bad-object",
                        format!("{o:?} is not kac, simple or projective"),
                    ))
                }
            }
        }
        Command::ProjectiveWord(a) => {
            let w = projective_word(&super_weight(&a)?);
            let steps: Vec<String> = w.steps.iter().map(|(k, i)| format!("{k}{i}")).collect();
            let human = format!(
                "K{} then {}",
                w.base,
                if steps.is_empty() {
                    "nothing".into()
                } else {
                    steps.join(" ")
                }
            );
            Reply::new(
                json!({ "base": weight_json(&w.base), "steps": steps }),
                human,
            )
        }
        Command::Serganova { p, mu, nu } => {
            let p = prime(p)?;
            let l = ClassicalWeight::new(parse_ints(&mu)?, parse_ints(&nu)?)?;
            let h = serganova_hat(&l, p);
            let nz = sh_nonzero(&l, p);
            let human = format!("{h}\nsh nonzero: {nz} (Kac lowest {})", kac_lowest(&l));
            Reply::new(
                json!({ "hat": coords_json(&h), "nonzero": nz, "kac_lowest": coords_json(&kac_lowest(&l)) }),
                human,
            )
        }
        Command::BorelTranslate { p, types, part, w } => {
            let p = prime(p)?;
            let types: Vec<usize> = parse_ints(&types)?
                .into_iter()
                .map(|t| {
                    usize::try_from(t).map_err(|_| {
                        Error::validation("bad-types", format!("type {t} is negative"))
                    })
                })
                .collect::<Result<_>>()?;
            let shape = GLXShape::new(p, types)?;
            let parts = part
                .iter()
                .map(|x| parse_ints(x))
                .collect::<Result<Vec<_>>>()?;
            let lam = TupleWeight::new(shape, parts)?;
            let one_line: Vec<usize> = parse_ints(&w)?
                .into_iter()
                .map(|x| {
                    usize::try_from(x)
                        .map_err(|_| Error::validation("bad-permutation", format!("entry {x}")))
                })
                .collect::<Result<_>>()?;
            let perm = BorelPermutation::from_one_line(&one_line)?;
            let out = borel_translate(&lam, &perm)?;
            let parts: Vec<Value> = out.parts().iter().map(|g| ints(g.entries())).collect();
            Reply::new(json!(parts), out.to_string())
        }
        Command::Selfcheck {
            p,
            suite,
            window,
            samples,
            seed,
        } => {
            let mut cfg = SuiteConfig::new(prime(p)?);
            cfg.samples = samples;
            cfg.seed = seed;
            if let Some(wd) = window {
                match parse_ints(&wd)?[..] {
                    [lo, hi] if lo <= hi => (cfg.lo, cfg.hi) = (lo, hi),
                    _ => {
                        return Err(Error::validation(
                            "bad-window",
                            format!("{wd:?} is not lo,hi"),
                        ))
                    }
                }
            }
            let names: Vec<&str> = if suite == "all" {
                SUITES.to_vec()
            } else {
                vec![suite.as_str()]
            };
            let mut reports = Vec::new();
            for n in names {
                reports.push(run_suite(n, &cfg).ok_or_else(|| {
                    Error::validation(
                        "unknown-suite",
                        format!("{n:?}; known suites: all, {}", SUITES.join(", ")),
                    )
                })?);
            }
            let human = reports
                .iter()
                .map(report_line)
                .collect::<Vec<_>>()
                .join("\n");
            let mut reply = Reply::new(
                Value::Array(reports.iter().map(report_json).collect()),
                human,
            );
            reply.warnings = reports
                .iter()
                .filter(|r| !r.passed())
                .map(|r| format!("suite {} failed", r.suite))
                .collect();
            reply
        }
    })
}
