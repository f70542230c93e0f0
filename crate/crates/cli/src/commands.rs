use std::fmt::Write as _;
use std::sync::Arc;

use farey_ideals::format::{parse_rational, rational_string, rational_to_f64};
use farey_ideals::qmetric::{mk_distance, CMatrix, ChainFile, ChainSpace, MkConfig, State};
use farey_ideals::theta::{theta_ideal_diagram, ThetaIdeal};
use farey_ideals::{
    effros_shen_diagram, enumerate_coherent_ideals, farey_diagram, farey_level, ideal_metric,
    BratteliDiagram, ContinuedFraction, DiagramFile, Distance,
};
use num_complex::Complex64;
use num_rational::BigRational;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::{
    CfArgs, Cli, Command, DiagramCommand, FareyCommand, IdealCommand, QmetricCommand, TableFormat,
    ThetaCommand, ThetaView,
};

pub(crate) enum Failure {
    Usage(String),
    Domain(String),
}

impl From<farey_ideals::Error> for Failure {
    fn from(e: farey_ideals::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

pub(crate) struct Output {
    pub text: String,
    pub data: Option<Value>,
    pub exit_code: i32,
}

impl Output {
    fn ok(text: String, data: Value) -> Self {
        Output {
            text,
            data: Some(data),
            exit_code: 0,
        }
    }
}

type Outcome = Result<Output, Failure>;

pub(crate) fn dispatch(cli: &Cli) -> Outcome {
    let is_diagram = matches!(cli.command, Command::Diagram { .. });
    if cli.dot && !is_diagram {
        return Err(Failure::Usage(
            "--dot applies to diagram commands only".into(),
        ));
    }
    if cli.dot && cli.json {
        return Err(Failure::Usage(
            "--dot and --json are mutually exclusive".into(),
        ));
    }
    match &cli.command {
        Command::Cf(args) => cf(args),
        Command::Farey {
            command: FareyCommand::Level { n, format },
        } => farey(*n, *format, cli.json),
        Command::Diagram { command } => diagram(command, cli.dot),
        Command::Ideal {
            command:
                IdealCommand::Metric {
                    theta1,
                    theta2,
                    depth,
                },
        } => metric(theta1, theta2, *depth),
        Command::Ideal {
            command: IdealCommand::Enumerate { diagram, depth },
        } => enumerate(diagram, *depth),
        Command::Theta {
            command: ThetaCommand::Ideal { cf, depth, view },
        } => theta(cf, *depth, view),
        Command::Qmetric {
            command:
                QmetricCommand::Mk {
                    chain,
                    phi,
                    psi,
                    iters,
                    tol,
                    seed,
                },
        } => mk(chain, phi, psi, *iters, *tol, *seed),
        Command::Verify => verify(),
    }
}

fn parse_cf(s: &str) -> Result<ContinuedFraction, Failure> {
    Ok(s.parse::<ContinuedFraction>()?)
}

/// Decimal for display only: plain notation for moderate values, scientific
/// otherwise.
fn decimal(x: f64) -> String {
    if x == 0.0 || (1e-6..1e15).contains(&x.abs()) {
        format!("{x}")
    } else {
        format!("{x:e}")
    }
}

/// Reads inline JSON (starting with `{`) or a file.
fn json_arg<T: for<'de> Deserialize<'de>>(arg: &str, what: &str) -> Result<T, Failure> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg)
            .map_err(|e| Failure::Usage(format!("cannot read {what} file {arg:?}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| Failure::Domain(format!("invalid {what} JSON: {e}")))
}

fn cf(args: &CfArgs) -> Outcome {
    let src = &args.source;
    let cf = if let Some(r) = &src.rational {
        let q = parse_rational(r)?;
        ContinuedFraction::from_rational(q.numer(), q.denom())?
    } else if let Some(p) = &src.periodic {
        let cf = parse_cf(p)?;
        if !cf.is_periodic() {
            return Err(Failure::Usage(format!("{p:?} has no period; use --terms")));
        }
        cf
    } else {
        let t = src.terms.as_deref().expect("clap requires one source");
        let cf = parse_cf(t)?;
        if cf.is_periodic() {
            return Err(Failure::Usage(format!("{t:?} is periodic; use --periodic")));
        }
        cf
    };
    let last = cf.len().map_or(args.depth, |len| args.depth.min(len - 1));
    let terms = cf.terms_through(last)?;
    let convergents = cf.convergents(last)?;
    let mut text = format!(
        "θ = {cf}\nterms: {}\n",
        terms
            .iter()
            .map(u64::to_string)
            .collect::<Vec<_>>()
            .join(",")
    );
    for c in &convergents {
        let _ = writeln!(text, "p_{n}/q_{n} = {}/{}", c.p, c.q, n = c.n);
    }
    let data = json!({ "cf": cf.to_string(), "terms": terms, "convergents": convergents });
    Ok(Output::ok(text, data))
}

fn farey(n: usize, format: TableFormat, json_flag: bool) -> Outcome {
    let level = farey_level(n)?;
    let rows: Vec<Value> = (0..level.len())
        .map(|k| {
            let r = level.r(k);
            json!({ "k": k, "q": level.q[k].to_string(), "p": level.p[k].to_string(), "r": rational_string(&r) })
        })
        .collect();
    let data = json!({ "n": n, "rows": rows });
    let text = match format {
        TableFormat::Csv => {
            let mut s = String::from("k,q,p,r_num,r_den\n");
            for k in 0..level.len() {
                let r = level.r(k);
                let _ = writeln!(
                    s,
                    "{k},{},{},{},{}",
                    level.q[k],
                    level.p[k],
                    r.numer(),
                    r.denom()
                );
            }
            s
        }
        TableFormat::Json => format!(
            "{}\n",
            serde_json::to_string_pretty(&data).expect("serializable")
        ),
        TableFormat::Text => {
            let mut s = format!("Farey level {n}: {} vertices\n", level.len());
            for k in 0..level.len() {
                let _ = writeln!(
                    s,
                    "{k:>6}  q = {:<8} r = {}",
                    level.q[k],
                    rational_string(&level.r(k))
                );
            }
            s
        }
    };
    if json_flag && format == TableFormat::Csv {
        return Err(Failure::Usage("--json conflicts with --format csv".into()));
    }
    Ok(Output::ok(text, data))
}

fn diagram_output(d: &BratteliDiagram, dot: bool) -> Output {
    let file: DiagramFile = d.to_file();
    let data = serde_json::to_value(&file).expect("serializable");
    let text = if dot {
        d.to_dot()
    } else {
        format!(
            "{}\n",
            serde_json::to_string_pretty(&data).expect("serializable")
        )
    };
    Output::ok(text, data)
}

fn diagram(cmd: &DiagramCommand, dot: bool) -> Outcome {
    let d = match cmd {
        DiagramCommand::Farey { n } => farey_diagram(*n)?,
        DiagramCommand::EffrosShen { cf, n } => effros_shen_diagram(&parse_cf(cf)?, *n)?,
        DiagramCommand::Quotient { theta, n } => {
            if *n == 0 {
                return Err(Failure::Domain("the quotient starts at level 1".into()));
            }
            ThetaIdeal::new(&parse_cf(theta)?, *n)?.quotient_diagram(*n)?
        }
    };
    Ok(diagram_output(&d, dot))
}

/// `"2^-k = decimal"` for exact dyadics.
pub fn render_distance(d: &Distance) -> String {
    match d {
        Distance::Zero => "0".into(),
        Distance::Dyadic { exponent } => {
            format!("2^-{exponent} = {}", decimal(d.to_f64().unwrap_or(0.0)))
        }
        Distance::AgreeToDepth { depth } => {
            format!("agree through level {depth} (distance ≤ 2^-{})", depth + 1)
        }
    }
}

fn metric(theta1: &str, theta2: &str, depth: usize) -> Outcome {
    let (a, b) = (parse_cf(theta1)?, parse_cf(theta2)?);
    let ia = ThetaIdeal::new(&a, depth)?;
    let ib = ThetaIdeal::new(&b, depth)?;
    let d = ideal_metric(&ia, &ib, depth)?;
    let exact = d.to_rational().map(|r| rational_string(&r));
    let data = json!({
        "theta1": a.to_string(),
        "theta2": b.to_string(),
        "depth": depth,
        "distance": d,
        "exact": exact,
        "upper_bound": rational_string(&d.upper_bound()),
        "decimal_f64": d.to_f64(),
    });
    Ok(Output::ok(format!("{}\n", render_distance(&d)), data))
}

fn enumerate(path: &str, depth: usize) -> Outcome {
    let file: DiagramFile = json_arg(path, "diagram")?;
    let base = Arc::new(BratteliDiagram::from_file(&file)?);
    let ideals = enumerate_coherent_ideals(&base, depth)?;
    let files: Vec<_> = ideals.iter().map(|i| i.to_file()).collect();
    let mut text = format!("{} coherent ideals through level {depth}\n", files.len());
    for f in &files {
        let _ = writeln!(text, "{}", serde_json::to_string(f).expect("serializable"));
    }
    Ok(Output::ok(text, json!({ "depth": depth, "ideals": files })))
}

/// Index of the convergent used for decimal renderings of trace coefficients.
const EVAL_CONVERGENT: usize = 40;

fn theta(cf_text: &str, depth: usize, view: &ThetaView) -> Outcome {
    let cf = parse_cf(cf_text)?;
    let ideal = ThetaIdeal::new(&cf, depth)?;
    let mut text = String::new();
    let data = if view.blocks {
        let mut levels = Vec::new();
        for n in 1..=depth {
            let b: Vec<usize> = ideal.blocks(n)?.into_iter().collect();
            let _ = writeln!(text, "level {n}: {b:?}");
            levels.push(b);
        }
        json!({ "cf": cf.to_string(), "blocks": levels })
    } else if view.diagram {
        let d = theta_ideal_diagram(&cf, depth)?;
        let file = d.to_file();
        text = format!("{}\n", serde_json::to_string(&file).expect("serializable"));
        serde_json::to_value(&file).expect("serializable")
    } else if view.beta {
        let mut rows = Vec::new();
        for n in 1..=depth {
            let b = ideal.beta(n)?;
            let _ = writeln!(
                text,
                "β({n}) = {} ≈ {}",
                rational_string(&b),
                decimal(rational_to_f64(&b))
            );
            rows.push(
                json!({ "n": n, "beta": rational_string(&b), "decimal_f64": rational_to_f64(&b) }),
            );
        }
        json!({ "cf": cf.to_string(), "beta": rows })
    } else if view.trace_coeffs {
        let at = eval_point(&cf)?;
        let _ = writeln!(
            text,
            "decimals evaluated at θ ≈ {} (convergent {EVAL_CONVERGENT} or the exact value)",
            rational_string(&at)
        );
        let mut rows = Vec::new();
        for n in 1..=depth {
            let c = ideal.trace_coefficient(n)?;
            let v = c.eval_f64(&at);
            let _ = writeln!(text, "c({n}) = {c} ≈ {}", decimal(v));
            rows.push(json!({ "n": n, "a": rational_string(&c.a), "b": rational_string(&c.b), "decimal_f64": v }));
        }
        json!({ "cf": cf.to_string(), "evaluated_at": rational_string(&at), "coefficients": rows })
    } else {
        let mut rows = Vec::new();
        for n in 1..=depth {
            let j = ideal.j(n)?;
            let b = ideal.bracket(n)?;
            let (l, r) = (b.left(), b.right());
            let _ = writeln!(
                text,
                "j_{n} = {j}   {} < θ < {}",
                rational_string(&l),
                rational_string(&r)
            );
            rows.push(json!({ "n": n, "j": j.to_string(), "left": rational_string(&l), "right": rational_string(&r) }));
        }
        json!({ "cf": cf.to_string(), "levels": rows })
    };
    Ok(Output::ok(text, data))
}

fn eval_point(cf: &ContinuedFraction) -> Result<BigRational, Failure> {
    if let Some(v) = cf.rational_value() {
        return Ok(v);
    }
    let c = cf.convergents(EVAL_CONVERGENT)?;
    Ok(c.last().expect("nonempty").value())
}

/// A real number or a `[re, im]` pair.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum Scalar {
    Real(f64),
    Pair([f64; 2]),
}

impl Scalar {
    fn complex(&self) -> Complex64 {
        match *self {
            Scalar::Real(x) => Complex64::new(x, 0.0),
            Scalar::Pair([re, im]) => Complex64::new(re, im),
        }
    }
}

/// `"trace"`, `{block, vector}` or `{weights, densities?}`.
#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum StateFile {
    Named(String),
    Vector {
        block: usize,
        vector: Vec<Scalar>,
    },
    Mixed {
        weights: Vec<f64>,
        #[serde(default)]
        densities: Option<Vec<Vec<Vec<Scalar>>>>,
    },
}

fn state_arg(arg: &str, chain: &ChainSpace, what: &str) -> Result<State, Failure> {
    let file: StateFile = if arg.trim() == "trace" {
        StateFile::Named("trace".into())
    } else {
        json_arg(arg, what)?
    };
    let top = chain.top();
    Ok(match file {
        StateFile::Named(s) if s == "trace" => State::trace(chain),
        StateFile::Named(s) => return Err(Failure::Domain(format!("unknown state {s:?}"))),
        StateFile::Vector { block, vector } => {
            let v: Vec<Complex64> = vector.iter().map(Scalar::complex).collect();
            State::vector(top, block, &v)?
        }
        StateFile::Mixed { weights, densities } => {
            let densities = densities.map(|ds| {
                ds.iter()
                    .map(|rows| {
                        let d = rows.len();
                        CMatrix::from_fn(d, d, |i, j| {
                            rows[i]
                                .get(j)
                                .map_or(Complex64::new(f64::NAN, 0.0), Scalar::complex)
                        })
                    })
                    .collect()
            });
            State::new(top, &weights, densities)?
        }
    })
}

fn mk(
    chain: &str,
    phi: &str,
    psi: &str,
    iters: Option<usize>,
    tol: Option<f64>,
    seed: Option<u64>,
) -> Outcome {
    let file: ChainFile = json_arg(chain, "chain")?;
    let space = ChainSpace::from_file(&file)?;
    let (phi, psi) = (
        state_arg(phi, &space, "phi")?,
        state_arg(psi, &space, "psi")?,
    );
    let mut cfg = MkConfig::default();
    if let Some(k) = iters {
        cfg.iterations = k;
    }
    if let Some(t) = tol {
        if !(t.is_finite() && t >= 0.0) {
            return Err(Failure::Usage(format!(
                "--tol must be a nonnegative number, got {t}"
            )));
        }
        cfg.tol = t;
    }
    if let Some(s) = seed {
        cfg.seed = s;
    }
    let r = mk_distance(&space, &phi, &psi, &cfg)?;
    let kind = if r.exact {
        "exact"
    } else {
        "certified lower bound"
    };
    let text = format!(
        "mk distance {} {} ({kind}; witness L = {}, {} iterations{})\n",
        if r.exact { "=" } else { "≥" },
        r.value,
        r.witness_lip,
        r.iterations,
        if r.stalled { ", stalled" } else { "" }
    );
    let data = json!({
        "value_f64": r.value,
        "exact": r.exact,
        "witness_lip_f64": r.witness_lip,
        "iterations": r.iterations,
        "stalled": r.stalled,
        "config": cfg,
    });
    Ok(Output::ok(text, data))
}

fn verify() -> Outcome {
    let report = farey_verify::run_all();
    let data = serde_json::to_value(&report).expect("serializable");
    let passed = report.all_passed();
    // Timings vary between runs, so only the table carries them.
    Ok(Output {
        text: report.table(),
        data: Some(data),
        exit_code: if passed { 0 } else { crate::EXIT_DOMAIN },
    })
}
