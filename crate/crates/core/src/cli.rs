//! Command-line front end: `expand`, `norms`, `verify`, `gram`, `orbit`.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::construct::{check_sector, Constructor, Sign};
use crate::dunkl::{Family, Params};
use crate::error::{Error, Result};
use crate::exactpoly::{parse_rational, Poly, Rational};
use crate::hpfloat::{Ctx, DEFAULT_DIGITS};
use crate::norms::{base_norm_float, norm_ratio_nonsym, norm_ratio_sym, NormRatio, NormRow};
use crate::oracle::quadrature::{required_nodes, QuadratureRule};
use crate::oracle::verify::{verify_suite_with, Status, VerifyOptions};
use crate::weyl::{weyl_orbit, Composition, Partition};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY_FAILED: i32 = 2;
pub const EXIT_SINGULAR: i32 = 3;

/// Environment variable overriding the default float precision (decimal digits).
pub const PRECISION_ENV: &str = "CALOGERO_PRECISION";

#[derive(Parser, Debug)]
#[command(
    name = "calogero",
    version,
    about = "Exact multivariable Hermite and Laguerre polynomials from Dunkl-Cherednik operators"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build h_mu, or H_mu^± with --sym.
    Expand {
        #[command(flatten)]
        model: ModelArgs,
        /// Label as a comma list, e.g. 2,0,1.
        #[arg(long)]
        mu: String,
        /// Symmetric (+) or anti-symmetric (-) combination.
        #[arg(long, allow_hyphen_values = true)]
        sym: Option<String>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Exact norm ratios <h, h>/<h_0, h_0> for all labels up to a degree.
    Norms {
        #[command(flatten)]
        model: ModelArgs,
        /// Maximum total degree.
        #[arg(long, default_value_t = 2)]
        degree: u32,
        /// A single label instead of the full table.
        #[arg(long)]
        mu: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        sym: Option<String>,
        /// Also print absolute norms in floating point.
        #[arg(long)]
        absolute: bool,
        #[arg(long, env = PRECISION_ENV, default_value_t = DEFAULT_DIGITS)]
        precision: u32,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Run every invariant check; exit code 2 on any failure.
    Verify {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, default_value_t = 3)]
        max_degree: u32,
        #[arg(long, env = PRECISION_ENV, default_value_t = DEFAULT_DIGITS)]
        precision: u32,
        /// Add this rational to every top coefficient (fault injection).
        #[arg(long, hide = true, allow_hyphen_values = true)]
        perturb_top: Option<String>,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Quadrature Gram matrix at integer couplings.
    Gram {
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, default_value_t = 2)]
        degree: u32,
        #[arg(long, env = PRECISION_ENV, default_value_t = DEFAULT_DIGITS)]
        precision: u32,
        /// Nodes per axis; defaults to the smallest exact rule.
        #[arg(long)]
        nodes: Option<usize>,
        #[arg(long, value_enum, default_value_t = Basis::Nonsym)]
        basis: Basis,
        #[command(flatten)]
        out: OutputArgs,
    },
    /// Weyl orbit of a partition with reduced words and inversion sets.
    Orbit {
        #[arg(long)]
        mu: String,
        #[command(flatten)]
        out: OutputArgs,
    },
}

#[derive(Args, Debug, Clone)]
pub struct ModelArgs {
    #[arg(long, default_value = "A")]
    pub family: String,
    /// Number of variables; inferred from --mu when omitted.
    #[arg(long = "N")]
    pub n: Option<usize>,
    #[arg(long, default_value = "3/7", allow_hyphen_values = true)]
    pub a: String,
    /// Ignored for family A.
    #[arg(long, default_value = "2/5", allow_hyphen_values = true)]
    pub b: String,
    #[arg(long, default_value = "1/2", allow_hyphen_values = true)]
    pub omega: String,
}

#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Pretty)]
    pub format: Format,
    /// Write here instead of stdout.
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Basis {
    Monomial,
    Nonsym,
    Sym,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubcommandKind {
    Expand,
    Norms,
    Verify,
    Gram,
    Orbit,
}

/// Validated settings for one invocation.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub subcommand: SubcommandKind,
    pub params: Option<Params>,
    pub n: usize,
    pub mu: Option<Composition>,
    pub sign: Option<Sign>,
    pub degree: u32,
    pub precision: u32,
    pub format: Format,
    pub output: Option<PathBuf>,
}

fn parse_params(m: &ModelArgs) -> Result<Params> {
    let family: Family = m.family.parse()?;
    let a = parse_rational(&m.a)?;
    let b = match family {
        Family::A => Rational::from_integer(0.into()),
        Family::B => parse_rational(&m.b)?,
    };
    Params::new(family, a, b, parse_rational(&m.omega)?)
}

fn resolve_n(m: &ModelArgs, mu: Option<&Composition>) -> Result<usize> {
    match (m.n, mu) {
        (Some(n), Some(mu)) if n != mu.n() => Err(Error::DimensionMismatch { expected: n, got: mu.n() }),
        (Some(n), _) => Ok(n),
        (None, Some(mu)) => Ok(mu.n()),
        (None, None) => Ok(2),
    }
    .and_then(|n| {
        if n == 0 {
            Err(Error::InvalidParams("N must be positive".into()))
        } else {
            Ok(n)
        }
    })
}

impl RunConfig {
    /// Parses rationals and labels and validates the symmetry sector.
    pub fn from_command(cmd: &Command) -> Result<RunConfig> {
        let sign = |s: &Option<String>| s.as_deref().map(str::parse::<Sign>).transpose();
        let mu = |s: &Option<String>| s.as_deref().map(Composition::parse).transpose();
        let cfg = match cmd {
            Command::Expand { model, mu: m, sym, out } => {
                let mu = Composition::parse(m)?;
                RunConfig {
                    subcommand: SubcommandKind::Expand,
                    params: Some(parse_params(model)?),
                    n: resolve_n(model, Some(&mu))?,
                    degree: mu.degree(),
                    mu: Some(mu),
                    sign: sign(sym)?,
                    precision: DEFAULT_DIGITS,
                    format: out.format,
                    output: out.output.clone(),
                }
            }
            Command::Norms { model, degree, mu: m, sym, precision, out, .. } => {
                let mu = mu(m)?;
                RunConfig {
                    subcommand: SubcommandKind::Norms,
                    params: Some(parse_params(model)?),
                    n: resolve_n(model, mu.as_ref())?,
                    mu,
                    sign: sign(sym)?,
                    degree: *degree,
                    precision: *precision,
                    format: out.format,
                    output: out.output.clone(),
                }
            }
            Command::Verify { model, max_degree, precision, out, .. } => RunConfig {
                subcommand: SubcommandKind::Verify,
                params: Some(parse_params(model)?),
                n: resolve_n(model, None)?,
                mu: None,
                sign: None,
                degree: *max_degree,
                precision: *precision,
                format: out.format,
                output: out.output.clone(),
            },
            Command::Gram { model, degree, precision, out, .. } => RunConfig {
                subcommand: SubcommandKind::Gram,
                params: Some(parse_params(model)?),
                n: resolve_n(model, None)?,
                mu: None,
                sign: None,
                degree: *degree,
                precision: *precision,
                format: out.format,
                output: out.output.clone(),
            },
            Command::Orbit { mu: m, out } => {
                let mu = Composition::parse(m)?;
                Partition::try_from(mu.clone())?;
                RunConfig {
                    subcommand: SubcommandKind::Orbit,
                    params: None,
                    n: mu.n(),
                    degree: mu.degree(),
                    mu: Some(mu),
                    sign: None,
                    precision: DEFAULT_DIGITS,
                    format: out.format,
                    output: out.output.clone(),
                }
            }
        };
        if cfg.precision == 0 {
            return Err(Error::InvalidParams("precision must be positive".into()));
        }
        if let (Some(p), Some(mu), Some(s)) = (&cfg.params, &cfg.mu, cfg.sign) {
            let plus = Partition::try_from(mu.clone()).map_err(|_| Error::InvalidSector {
                label: mu.to_string(),
                reason: "symmetric and anti-symmetric labels are partitions (weakly decreasing)".into(),
            })?;
            check_sector(p.family(), &plus, s)?;
        }
        Ok(cfg)
    }
}

/// Exit code for an error: 3 for singular parameters, 1 otherwise.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::SingularParameter { .. } | Error::PoleEncountered(_) | Error::DegenerateEigenvalue(_) => EXIT_SINGULAR,
        _ => EXIT_USAGE,
    }
}

/// Runs one invocation, writing results to `out` (or `--output`) and messages to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    let result = RunConfig::from_command(&cli.command).and_then(|cfg| dispatch(&cli.command, &cfg));
    match result {
        Ok((text, code)) => match emit(&text, out) {
            Ok(()) => code,
            Err(e) => {
                let _ = writeln!(err, "error: {e}");
                EXIT_USAGE
            }
        },
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

struct Rendered {
    body: String,
    path: Option<PathBuf>,
}

fn emit(r: &Rendered, out: &mut dyn Write) -> std::io::Result<()> {
    match &r.path {
        Some(p) => std::fs::write(p, &r.body),
        None => out.write_all(r.body.as_bytes()),
    }
}

fn dispatch(cmd: &Command, cfg: &RunConfig) -> Result<(Rendered, i32)> {
    let (body, code) = match cmd {
        Command::Expand { .. } => (cmd_expand(cfg)?, EXIT_OK),
        Command::Norms { absolute, .. } => (cmd_norms(cfg, *absolute)?, EXIT_OK),
        Command::Verify { perturb_top, .. } => {
            let delta = perturb_top.as_deref().map(parse_rational).transpose()?;
            cmd_verify(cfg, delta)?
        }
        Command::Gram { nodes, basis, .. } => (cmd_gram(cfg, *nodes, *basis)?, EXIT_OK),
        Command::Orbit { .. } => (cmd_orbit(cfg)?, EXIT_OK),
    };
    Ok((
        Rendered {
            body,
            path: cfg.output.clone(),
        },
        code,
    ))
}

fn params_of(cfg: &RunConfig) -> &Params {
    cfg.params.as_ref().expect("subcommand carries parameters")
}

fn csv_string<F>(f: F) -> Result<String>
where
    F: FnOnce(&mut csv::Writer<Vec<u8>>) -> std::result::Result<(), csv::Error>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    f(&mut w).map_err(|e| Error::Parse(e.to_string()))?;
    let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv is utf-8"))
}

fn json_string<T: serde::Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializes");
    s.push('\n');
    s
}

fn poly_terms_csv(p: &Poly) -> Result<String> {
    csv_string(|w| {
        w.write_record(["exp", "num", "den"])?;
        for (e, c) in p.terms() {
            let exp = e.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
            w.write_record([exp, c.numer().to_string(), c.denom().to_string()])?;
        }
        Ok(())
    })
}

/// Serialized `h_μ` or `H_μ^±`.
pub fn cmd_expand(cfg: &RunConfig) -> Result<String> {
    let params = params_of(cfg);
    let mu = cfg.mu.as_ref().expect("expand has a label");
    if mu.n() != cfg.n {
        return Err(Error::DimensionMismatch { expected: cfg.n, got: mu.n() });
    }
    let cons = Constructor::new(params);
    match cfg.sign {
        None => {
            let h = cons.nonsym(mu)?;
            Ok(match cfg.format {
                Format::Json => json_string(&h.to_json()),
                Format::Csv => poly_terms_csv(&h.poly)?,
                Format::Pretty => {
                    let ev: Vec<String> = h.eigenvalues.iter().map(|e| e.to_string()).collect();
                    format!(
                        "h_{mu} = {}\nparams: {params}\neigenvalues: ({})\nc_mu+ = {}\nc_w = {}\nword: {}\n",
                        h.poly,
                        ev.join(", "),
                        h.provenance.c_mu_plus,
                        h.provenance.c_w,
                        if h.provenance.word.is_empty() {
                            "e".to_string()
                        } else {
                            h.provenance.word.to_string()
                        }
                    )
                }
            })
        }
        Some(sign) => {
            let plus = Partition::try_from(mu.clone())?;
            let h = cons.sym(&plus, sign)?;
            Ok(match cfg.format {
                Format::Json => json_string(&h.to_json()),
                Format::Csv => poly_terms_csv(&h.poly)?,
                Format::Pretty => {
                    let mut s = format!("H{sign}_{mu} = {}\nparams: {params}\n", h.poly);
                    for (c, b) in &h.coefficients {
                        s.push_str(&format!("b_{c} = {b}\n"));
                    }
                    s
                }
            })
        }
    }
}

fn norm_rows(cfg: &RunConfig) -> Result<Vec<NormRatio>> {
    let params = params_of(cfg);
    let mut out = Vec::new();
    match (&cfg.mu, cfg.sign) {
        (Some(mu), None) => out.push(norm_ratio_nonsym(params, mu)?),
        (Some(mu), Some(s)) => out.push(norm_ratio_sym(params, &Partition::try_from(mu.clone())?, s)?),
        (None, None) => {
            for mu in Composition::all_up_to_degree(cfg.n, cfg.degree) {
                out.push(norm_ratio_nonsym(params, &mu)?);
            }
        }
        (None, Some(s)) => {
            for mu in Partition::all_up_to_degree(cfg.n, cfg.degree) {
                if check_sector(params.family(), &mu, s).is_ok() {
                    out.push(norm_ratio_sym(params, &mu, s)?);
                }
            }
        }
    }
    Ok(out)
}

/// Table of exact norm ratios, optionally with absolute float norms.
pub fn cmd_norms(cfg: &RunConfig, absolute: bool) -> Result<String> {
    let params = params_of(cfg);
    let ratios = norm_rows(cfg)?;
    let mut rows: Vec<NormRow> = ratios.iter().map(NormRatio::row).collect();
    if absolute {
        let mut ctx = Ctx::new(cfg.precision);
        let base = base_norm_float(params, cfg.n, &mut ctx);
        for (row, r) in rows.iter_mut().zip(&ratios) {
            let v = ctx.rat(&r.value);
            let abs = ctx.mul(&v, &base);
            row.absolute = Some(ctx.format(&abs, cfg.precision as usize));
        }
    }
    Ok(match cfg.format {
        Format::Json => json_string(&rows),
        Format::Csv => csv_string(|w| {
            if absolute {
                for r in &rows {
                    w.serialize(r)?;
                }
            } else {
                w.write_record(["family", "N", "mu", "sign", "ratio_num", "ratio_den"])?;
                for r in &rows {
                    w.write_record([&r.family, &r.n.to_string(), &r.mu, &r.sign, &r.ratio_num, &r.ratio_den])?;
                }
            }
            Ok(())
        })?,
        Format::Pretty => {
            let mut s = format!("norm ratios <h, h>/<h_0, h_0> at {params}\n");
            for (row, r) in rows.iter().zip(&ratios) {
                let label = match r.sign {
                    Some(sg) => format!("H{sg}_{}", r.label),
                    None => format!("h_{}", r.label),
                };
                s.push_str(&format!("{label:<16} {}", r.value));
                if let Some(a) = &row.absolute {
                    s.push_str(&format!("    {a}"));
                }
                s.push('\n');
            }
            s
        }
    })
}

/// The verification report and its exit code.
pub fn cmd_verify(cfg: &RunConfig, perturb_top: Option<Rational>) -> Result<(String, i32)> {
    let params = params_of(cfg);
    let cons = match perturb_top {
        Some(d) => Constructor::with_top_perturbation(params, d),
        None => Constructor::new(params),
    };
    let report = verify_suite_with(&cons, cfg.n, cfg.degree, &VerifyOptions::with_digits(cfg.precision));
    let code = if report.all_pass() { EXIT_OK } else { EXIT_VERIFY_FAILED };
    let body = match cfg.format {
        Format::Json | Format::Pretty => {
            let mut s = report.to_json();
            s.push('\n');
            s
        }
        Format::Csv => csv_string(|w| {
            w.write_record(["check", "family", "N", "status", "cases"])?;
            for e in &report.entries {
                let status = match e.status {
                    Status::Pass => "pass",
                    Status::Fail => "fail",
                    Status::Skipped => "skipped",
                };
                let cases = e.detail.get("cases").map(|v| v.to_string()).unwrap_or_default();
                w.write_record([e.check.as_str(), &e.family, &e.n.to_string(), status, &cases])?;
            }
            Ok(())
        })?,
    };
    Ok((body, code))
}

/// Gram matrix of the chosen basis up to the configured degree.
pub fn cmd_gram(cfg: &RunConfig, nodes: Option<usize>, basis: Basis) -> Result<String> {
    let params = params_of(cfg);
    let n = cfg.n;
    let cons = Constructor::new(params);
    let (labels, polys): (Vec<String>, Vec<Poly>) = match basis {
        Basis::Monomial => Composition::all_up_to_degree(n, cfg.degree)
            .into_iter()
            .map(|m| (format!("x^{m}"), Poly::monomial(&m)))
            .unzip(),
        Basis::Nonsym => {
            let mut l = Vec::new();
            let mut p = Vec::new();
            for m in Composition::all_up_to_degree(n, cfg.degree) {
                p.push((*cons.poly(&m)?).clone());
                l.push(format!("h_{m}"));
            }
            (l, p)
        }
        Basis::Sym => {
            let mut l = Vec::new();
            let mut p = Vec::new();
            for m in Partition::all_up_to_degree(n, cfg.degree) {
                for s in [Sign::Plus, Sign::Minus] {
                    if n == 1 && s == Sign::Minus {
                        continue;
                    }
                    if check_sector(params.family(), &m, s).is_ok() {
                        p.push(cons.sym(&m, s)?.poly);
                        l.push(format!("H{s}_{m}"));
                    }
                }
            }
            (l, p)
        }
    };
    let mut ctx = Ctx::new(cfg.precision);
    let k = match nodes {
        Some(k) => k,
        None => required_nodes(params, n, cfg.degree)?,
    };
    let rule = QuadratureRule::new(params, n, k, &mut ctx)?;
    let g = rule.gram(&polys, &mut ctx)?;
    let j = g.to_json(&labels, &mut ctx);
    Ok(match cfg.format {
        Format::Json => json_string(&j),
        Format::Csv => csv_string(|w| {
            let mut head = vec![String::new()];
            head.extend(labels.iter().cloned());
            w.write_record(&head)?;
            for (l, row) in labels.iter().zip(&j.matrix) {
                let mut r = vec![l.clone()];
                r.extend(row.iter().cloned());
                w.write_record(&r)?;
            }
            Ok(())
        })?,
        Format::Pretty => {
            let mut s = format!(
                "Gram matrix at {params}, N = {n}, {k} nodes per axis, {} digits\n",
                cfg.precision
            );
            for (l, row) in labels.iter().zip(&j.matrix) {
                s.push_str(&format!("{l:<14} {}\n", row.join("  ")));
            }
            s
        }
    })
}

/// Orbit listing with reduced words and inversion sets.
pub fn cmd_orbit(cfg: &RunConfig) -> Result<String> {
    let mu = Partition::try_from(cfg.mu.clone().expect("orbit has a label"))?;
    let orbit = weyl_orbit(&mu);
    let rows: Vec<(String, Vec<usize>, String, Vec<String>)> = orbit
        .iter()
        .map(|el| {
            let letters: Vec<usize> = el.word.letters().iter().map(|j| j + 1).collect();
            let word = if el.word.is_empty() { "e".to_string() } else { el.word.to_string() };
            let inv: Vec<String> = el.word.inversion_sequence().iter().map(|r| r.to_string()).collect();
            (el.composition.to_string(), letters, word, inv)
        })
        .collect();
    Ok(match cfg.format {
        Format::Json => json_string(&json!({
            "mu": mu.entries(),
            "size": rows.len(),
            "elements": rows.iter().map(|(c, l, _, inv)| json!({
                "composition": c,
                "word": l,
                "length": l.len(),
                "inversions": inv,
            })).collect::<Vec<_>>(),
        })),
        Format::Csv => csv_string(|w| {
            w.write_record(["composition", "word", "length", "inversions"])?;
            for (c, _, word, inv) in &rows {
                w.write_record([c.as_str(), word, &inv.len().to_string(), &inv.join(" ")])?;
            }
            Ok(())
        })?,
        Format::Pretty => {
            let mut s = format!("orbit of {mu}: {} elements\n", rows.len());
            for (c, _, word, inv) in &rows {
                s.push_str(&format!("{c:<16} {word:<20} {{{}}}\n", inv.join(", ")));
            }
            s
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let mut full = vec!["calogero"];
        full.extend_from_slice(args);
        let code = run(full, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn expand_examples() {
        let (c, o, _) = call(&["expand", "--family", "A", "--N", "2", "--mu", "1,0", "--a", "3/7", "--omega", "1/2"]);
        assert_eq!(c, 0);
        assert!(o.starts_with("h_(1,0) = x1 + 3/10*x2\n"), "{o}");
        let (c, o, _) = call(&["expand", "--family", "A", "--N", "2", "--mu", "1,0", "--sym", "+"]);
        assert_eq!(c, 0);
        assert!(o.starts_with("H+_(1,0) = x1 + x2\n"), "{o}");
        let (c, o, _) = call(&["expand", "--mu", "0,0"]);
        assert_eq!(c, 0);
        assert!(o.starts_with("h_(0,0) = 1\n"), "{o}");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(call(&["expand", "--mu", "1,0", "--a", "0.5"]).0, 1);
        assert_eq!(call(&["verify", "--a", "0"]).0, 1);
        assert_eq!(call(&["expand", "--mu", "1,1", "--sym", "-"]).0, 1);
        assert_eq!(call(&["frobnicate"]).0, 1);
        assert_eq!(call(&["--help"]).0, 0);
        let (c, _, e) = call(&["norms", "--mu", "1,1", "--sym", "-"]);
        assert_eq!(c, 1);
        assert!(e.contains("strictly decreasing"), "{e}");
    }

    #[test]
    fn norms_table() {
        let (c, o, _) = call(&["norms", "--N", "2", "--degree", "1", "--format", "csv"]);
        assert_eq!(c, 0);
        let lines: Vec<&str> = o.lines().collect();
        assert_eq!(lines.len(), 4);
        assert_eq!(lines[1], "A,2,\"0,0\",,1,1");
        // (1+2a)/(2ω(1+a)) and (1+a)/(2ω) at a = 3/7, ω = 1/2
        assert_eq!(lines[2], "A,2,\"1,0\",,13,10");
        assert_eq!(lines[3], "A,2,\"0,1\",,10,7");
        let (c, _, _) = call(&["norms", "--family", "B", "--mu", "1,1", "--sym", "+"]);
        assert_eq!(c, 0);
    }

    #[test]
    fn verify_and_fault() {
        let (c, o, _) = call(&["verify", "--N", "2", "--max-degree", "2"]);
        assert_eq!(c, 0);
        let v: serde_json::Value = serde_json::from_str(&o).unwrap();
        assert!(v.as_array().unwrap().iter().all(|e| e["status"] != "fail"));
        let (c, _, _) = call(&["verify", "--N", "2", "--max-degree", "2", "--perturb-top", "1"]);
        assert_eq!(c, 2);
    }

    #[test]
    fn singular_exit_code() {
        let e = Error::SingularParameter { pairing: "x".into() };
        assert_eq!(exit_code(&e), 3);
        assert_eq!(exit_code(&Error::Parse("x".into())), 1);
    }

    #[test]
    fn orbit_listing() {
        let (c, o, _) = call(&["orbit", "--mu", "1,0,0", "--format", "csv"]);
        assert_eq!(c, 0);
        assert_eq!(o.lines().count(), 4);
        assert_eq!(call(&["orbit", "--mu", "0,1"]).0, 1);
    }
}
