//! Command-line front end: JSON input parsing, the subcommands, and the JSON
//! report written to standard output.
//!
//! Exit codes: `0` success, `1` a mathematical check failed (for example an
//! inconsistent `verify`), `2` invalid input.

use std::path::Path;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Deserialize;
use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::ideal::{ExponentVector, MonomialIdeal, PolynomialQ};
use crate::rational::{format_extended, format_rational, parse_rational, Rational};
use crate::{arcs, branch, closure, order, polygon, polyhedra};

pub const SEED_ENV: &str = "NUBAR_SEED";

/// Exact asymptotic orders, closures and Lojasiewicz exponents of monomial
/// ideals.
///
/// Ideals are JSON objects `{"vars": ["x","y"], "generators": [[2,0],[0,3]]}`
/// and polynomials `{"terms": [{"coeff": "1/2", "exp": [1,1]}]}`, given
/// either inline or as a file path. Results are JSON on standard output with
/// rationals written as "p/q" strings.
#[derive(Debug, Parser)]
#[command(name = "nubar", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// nubar_I(f) with its facet certificate.
    Nubar(NubarArgs),
    /// Integral closure of I.
    Closure(IdealArg),
    /// Fractional closure closure(I^{p/q}).
    FracClosure(FracArgs),
    /// Decide f^q ∈ closure(I^p); with -k also x^a ∈ I^k for monomial f.
    Membership(MembershipArgs),
    /// Integral dependence relation for a monomial f.
    Certificate(CertificateArgs),
    /// Samuel multiplicity e(I) (n <= 3, I primary).
    Multiplicity(IdealArg),
    /// Colength of closure(I^k).
    Colength(ColengthArgs),
    /// Asymptotic cone of (nubar_I(J_1), ..., nubar_I(J_k)).
    Cone(ConeArgs),
    /// Type T(I) = 1/nubar_I(√I).
    Type(IdealArg),
    /// Observed Izumi gap nubar_I - nu_I over monomials of bounded degree.
    Gap(GapArgs),
    /// Toric Newton polygon N_I(g) in two variables.
    Polygon(PolyArgs),
    /// Plane-branch invariants from a Puiseux characteristic.
    Branch(BranchArgs),
    /// Arc lower bound for nubar on random monomial arcs.
    Arcs(ArcsArgs),
    /// Lojasiewicz exponent with numeric corroboration.
    Loja(LojaArgs),
    /// Five-way check of f^q ∈ closure(I^p).
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct IdealArg {
    /// Ideal: JSON file path or inline JSON.
    #[arg(short = 'I', long = "ideal")]
    pub ideal: String,
}

#[derive(Debug, Args)]
pub struct PolyArgs {
    #[command(flatten)]
    pub ideal: IdealArg,
    /// Polynomial: JSON file path or inline JSON.
    #[arg(short = 'f', long = "poly")]
    pub poly: String,
}

#[derive(Debug, Args)]
pub struct NubarArgs {
    #[command(flatten)]
    pub input: PolyArgs,
    /// Also compute nu_I(f^k)/k for k <= max-k by expanding f^k (slow for
    /// large k or many terms).
    #[arg(long)]
    pub oracle: bool,
    #[arg(long = "max-k", default_value_t = 24, value_parser = clap::value_parser!(u32).range(1..=64))]
    pub max_k: u32,
}

#[derive(Debug, Args)]
pub struct Fraction {
    #[arg(short = 'p', default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..=1000))]
    pub p: u64,
    #[arg(short = 'q', default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..=1000))]
    pub q: u64,
}

#[derive(Debug, Args)]
pub struct FracArgs {
    #[command(flatten)]
    pub ideal: IdealArg,
    #[command(flatten)]
    pub fraction: Fraction,
}

#[derive(Debug, Args)]
pub struct MembershipArgs {
    #[command(flatten)]
    pub input: PolyArgs,
    #[command(flatten)]
    pub fraction: Fraction,
    /// Power for the plain membership x^a ∈ I^k.
    #[arg(short = 'k')]
    pub k: Option<u64>,
}

#[derive(Debug, Args)]
pub struct CertificateArgs {
    #[command(flatten)]
    pub input: PolyArgs,
    #[command(flatten)]
    pub fraction: Fraction,
    #[arg(long = "m-max", default_value_t = 16, value_parser = clap::value_parser!(u32).range(1..=64))]
    pub m_max: u32,
}

#[derive(Debug, Args)]
pub struct ColengthArgs {
    #[command(flatten)]
    pub ideal: IdealArg,
    #[arg(short = 'k', default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..=200))]
    pub k: u64,
}

#[derive(Debug, Args)]
pub struct ConeArgs {
    #[command(flatten)]
    pub ideal: IdealArg,
    /// Ideals J_i, repeatable.
    #[arg(short = 'J', long = "j-ideal", required = true)]
    pub js: Vec<String>,
}

#[derive(Debug, Args)]
pub struct GapArgs {
    #[command(flatten)]
    pub ideal: IdealArg,
    #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(0..=12))]
    pub bound: u32,
}

#[derive(Debug, Args)]
pub struct BranchArgs {
    /// Characteristic sequence, e.g. 4,6,7.
    #[arg(long, value_delimiter = ',', required = true)]
    pub beta: Vec<u32>,
    /// Power of the maximal ideal for the closure threshold.
    #[arg(short = 'k', default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..=1000))]
    pub k: u64,
}

#[derive(Debug, Args)]
pub struct Sampling {
    /// Seed; defaults to $NUBAR_SEED, then 0.
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(0..=100_000))]
    pub samples: u64,
}

impl Sampling {
    fn seed(&self) -> Result<u64> {
        if let Some(s) = self.seed {
            return Ok(s);
        }
        match std::env::var(SEED_ENV) {
            Ok(v) => v
                .trim()
                .parse()
                .map_err(|_| Error::InvalidArgument(format!("{SEED_ENV} must be an unsigned integer"))),
            Err(_) => Ok(0),
        }
    }
}

#[derive(Debug, Args)]
pub struct ArcsArgs {
    #[command(flatten)]
    pub input: PolyArgs,
    #[command(flatten)]
    pub sampling: Sampling,
    #[arg(long, default_value_t = 64, value_parser = clap::value_parser!(u32).range(2..=4096))]
    pub truncation: u32,
}

#[derive(Debug, Args)]
pub struct LojaArgs {
    #[command(flatten)]
    pub input: PolyArgs,
    #[command(flatten)]
    pub sampling: Sampling,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub input: PolyArgs,
    #[command(flatten)]
    pub fraction: Fraction,
    #[command(flatten)]
    pub sampling: Sampling,
    #[arg(long = "m-max", default_value_t = 16, value_parser = clap::value_parser!(u32).range(1..=64))]
    pub m_max: u32,
}

/// A parsed ideal with the variable names used for display.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedIdeal {
    pub vars: Vec<String>,
    pub ideal: MonomialIdeal,
    /// Number of input generators dropped as duplicates or non-minimal.
    pub dropped: usize,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct IdealJson {
    #[serde(default)]
    vars: Option<Vec<String>>,
    generators: Vec<Vec<u32>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TermJson {
    coeff: CoeffJson,
    exp: Vec<u32>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum CoeffJson {
    Text(String),
    Int(i64),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PolyJson {
    terms: Vec<TermJson>,
}

/// Reads a JSON source: inline when it starts with `{`, a file path otherwise.
fn read_source(src: &str) -> Result<String> {
    let trimmed = src.trim_start();
    if trimmed.starts_with('{') {
        return Ok(src.to_string());
    }
    std::fs::read_to_string(Path::new(src)).map_err(|e| Error::Parse {
        line: 0,
        column: 0,
        message: format!("cannot read {src}: {e}"),
    })
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

pub fn default_vars(n: usize) -> Vec<String> {
    if n <= 4 {
        ["x", "y", "z", "w"][..n].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=n).map(|i| format!("x{i}")).collect()
    }
}

pub fn parse_ideal(src: &str) -> Result<NamedIdeal> {
    let raw: IdealJson = serde_json::from_str(&read_source(src)?).map_err(json_error)?;
    let n = match (&raw.vars, raw.generators.first()) {
        (Some(v), _) => v.len(),
        (None, Some(g)) => g.len(),
        (None, None) => return Err(Error::EmptyGeneratorSet),
    };
    if let Some(g) = raw.generators.iter().find(|g| g.len() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: g.len(),
        });
    }
    let count = raw.generators.len();
    let ideal = MonomialIdeal::normalize(n, raw.generators.into_iter().map(ExponentVector::new))?;
    Ok(NamedIdeal {
        vars: raw.vars.unwrap_or_else(|| default_vars(n)),
        dropped: count - ideal.generators().len(),
        ideal,
    })
}

/// Parses a polynomial; `dim` fixes the ambient dimension (needed for the
/// zero polynomial).
pub fn parse_poly(src: &str, dim: Option<usize>) -> Result<PolynomialQ> {
    let raw: PolyJson = serde_json::from_str(&read_source(src)?).map_err(json_error)?;
    let n = match (dim, raw.terms.first()) {
        (Some(d), _) => d,
        (None, Some(t)) => t.exp.len(),
        (None, None) => 0,
    };
    let mut terms = Vec::with_capacity(raw.terms.len());
    for t in raw.terms {
        if t.exp.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: t.exp.len(),
            });
        }
        let c = match t.coeff {
            CoeffJson::Text(s) => parse_rational(&s)?,
            CoeffJson::Int(i) => Rational::from_integer(i.into()),
        };
        terms.push((c, ExponentVector::new(t.exp)));
    }
    PolynomialQ::from_terms(n, terms)
}

pub fn ideal_to_json(vars: &[String], ideal: &MonomialIdeal) -> Value {
    json!({
        "vars": vars,
        "generators": ideal.generators().iter().map(|g| g.entries().to_vec()).collect::<Vec<_>>(),
    })
}

pub fn poly_to_json(f: &PolynomialQ) -> Value {
    json!({
        "terms": f.terms().map(|(e, c)| json!({"coeff": format_rational(c), "exp": e.entries()})).collect::<Vec<_>>(),
    })
}

fn pretty_monomial(vars: &[String], e: &ExponentVector) -> String {
    let parts: Vec<String> = vars
        .iter()
        .zip(e.entries())
        .filter(|(_, &a)| a > 0)
        .map(|(v, &a)| if a == 1 { v.clone() } else { format!("{v}^{a}") })
        .collect();
    if parts.is_empty() {
        "1".into()
    } else {
        parts.join("*")
    }
}

pub fn pretty_ideal(vars: &[String], ideal: &MonomialIdeal) -> String {
    let gens: Vec<String> = ideal.generators().iter().map(|g| pretty_monomial(vars, g)).collect();
    format!("({})", gens.join(", "))
}

pub fn pretty_poly(vars: &[String], f: &PolynomialQ) -> String {
    if f.is_zero() {
        return "0".into();
    }
    let terms: Vec<String> = f
        .terms()
        .map(|(e, c)| {
            let m = pretty_monomial(vars, e);
            match (format_rational(c).as_str(), m.as_str()) {
                (c, "1") => c.to_string(),
                ("1", m) => m.to_string(),
                ("-1", m) => format!("-{m}"),
                (c, m) => format!("{c}*{m}"),
            }
        })
        .collect();
    terms.join(" + ")
}

fn rstr(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

/// Report fields besides the echo and timing.
struct Outcome {
    result: Value,
    certificate: Option<Value>,
    oracle: Option<Value>,
    notes: Vec<String>,
    exit: i32,
}

impl Outcome {
    fn ok(result: Value) -> Self {
        Outcome {
            result,
            certificate: None,
            oracle: None,
            notes: Vec::new(),
            exit: 0,
        }
    }
}

struct Inputs {
    echo: Map<String, Value>,
    notes: Vec<String>,
}

impl Inputs {
    fn new() -> Self {
        Inputs {
            echo: Map::new(),
            notes: Vec::new(),
        }
    }

    fn ideal_named(&mut self, key: &str, src: &str) -> Result<NamedIdeal> {
        let named = parse_ideal(src)?;
        if named.dropped > 0 {
            self.notes.push(format!(
                "{key}: {} redundant generator(s) removed by normalization",
                named.dropped
            ));
        }
        self.echo.insert(key.into(), ideal_to_json(&named.vars, &named.ideal));
        self.echo
            .insert(format!("{key}_pretty"), Value::String(pretty_ideal(&named.vars, &named.ideal)));
        Ok(named)
    }

    fn ideal(&mut self, arg: &IdealArg) -> Result<NamedIdeal> {
        self.ideal_named("ideal", &arg.ideal)
    }

    fn poly(&mut self, args: &PolyArgs) -> Result<(NamedIdeal, PolynomialQ)> {
        let named = self.ideal(&args.ideal)?;
        let f = parse_poly(&args.poly, Some(named.ideal.dim()))?;
        self.echo.insert("f".into(), poly_to_json(&f));
        self.echo.insert("f_pretty".into(), Value::String(pretty_poly(&named.vars, &f)));
        Ok((named, f))
    }

    fn put(&mut self, key: &str, v: Value) {
        self.echo.insert(key.into(), v);
    }
}

fn facet_json(w: &polyhedra::FacetValuation) -> Value {
    serde_json::to_value(w).expect("plain data")
}

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("plain data")
}

fn execute(cmd: &Command, inputs: &mut Inputs) -> Result<Outcome> {
    match cmd {
        Command::Nubar(a) => {
            let (named, f) = inputs.poly(&a.input)?;
            let nb = polyhedra::nubar(&f, &named.ideal)?;
            let lp = polyhedra::nubar_lp(&f, &named.ideal)?;
            let mut out = Outcome::ok(rstr(&nb.value));
            out.certificate = Some(json!({
                "normal": nb.certificate.normal,
                "level": nb.certificate.level,
                "witness_term": nb.witness_term.entries(),
                "lp_value": rstr(&lp),
            }));
            if lp != nb.value {
                out.notes.push("facet and LP values disagree".into());
                out.exit = 1;
            }
            if a.oracle {
                inputs.put("max_k", json!(a.max_k));
                let u = order::oracle_sequence(&f, &named.ideal, a.max_k)?;
                let max = u.iter().max().expect("max_k >= 1").clone();
                let consistent = max <= nb.value;
                out.oracle = Some(json!({
                    "u_k": u.iter().map(rstr).collect::<Vec<_>>(),
                    "max": rstr(&max),
                    "consistent": consistent,
                }));
                if !consistent {
                    out.exit = 1;
                }
            }
            Ok(out)
        }
        Command::Closure(a) => {
            let named = inputs.ideal(a)?;
            let c = polyhedra::closure(&named.ideal)?;
            Ok(Outcome::ok(json!({
                "ideal": ideal_to_json(&named.vars, &c),
                "pretty": pretty_ideal(&named.vars, &c),
            })))
        }
        Command::FracClosure(a) => {
            let named = inputs.ideal(&a.ideal)?;
            inputs.put("p", json!(a.fraction.p));
            inputs.put("q", json!(a.fraction.q));
            let c = polyhedra::fractional_closure(&named.ideal, a.fraction.p, a.fraction.q)?;
            Ok(Outcome::ok(json!({
                "ideal": ideal_to_json(&named.vars, &c),
                "pretty": pretty_ideal(&named.vars, &c),
            })))
        }
        Command::Membership(a) => {
            let (named, f) = inputs.poly(&a.input)?;
            inputs.put("p", json!(a.fraction.p));
            inputs.put("q", json!(a.fraction.q));
            let integral = closure::is_integral(&f, &named.ideal, a.fraction.p, a.fraction.q)?;
            let nu = order::nu_order(&f, &named.ideal)?;
            let mut result = json!({
                "integral": integral,
                "nu": format_extended(&nu.map(|v| Rational::from_integer(v.into()))),
            });
            if let Some(k) = a.k {
                inputs.put("k", json!(k));
                let e = f.as_monomial().ok_or(Error::NotMonomial)?;
                result["in_power"] = json!(order::monomial_in_power(e, &named.ideal, k)?);
            }
            let mut out = Outcome::ok(result);
            if !integral {
                let nb = polyhedra::nubar(&f, &named.ideal)?;
                out.certificate = Some(json!({
                    "violated_facet": facet_json(&nb.certificate),
                    "nubar": rstr(&nb.value),
                }));
            }
            Ok(out)
        }
        Command::Certificate(a) => {
            let (named, f) = inputs.poly(&a.input)?;
            inputs.put("p", json!(a.fraction.p));
            inputs.put("q", json!(a.fraction.q));
            inputs.put("m_max", json!(a.m_max));
            let c = closure::dependence_certificate(&f, &named.ideal, a.fraction.p, a.fraction.q, a.m_max)?;
            let checked = c.verify(&named.ideal)?;
            let mut out = Outcome::ok(json!({"m": c.m}));
            out.certificate = Some(json!({"relation": c.relation, "exponent": c.exponent, "rechecked": checked}));
            if !checked {
                out.exit = 1;
            }
            Ok(out)
        }
        Command::Multiplicity(a) => {
            let named = inputs.ideal(a)?;
            Ok(Outcome::ok(json!(polyhedra::multiplicity(&named.ideal)?)))
        }
        Command::Colength(a) => {
            let named = inputs.ideal(&a.ideal)?;
            inputs.put("k", json!(a.k));
            Ok(Outcome::ok(json!(polyhedra::colength_closure(&named.ideal, a.k)?)))
        }
        Command::Cone(a) => {
            let named = inputs.ideal(&a.ideal)?;
            let mut js = Vec::new();
            for (i, src) in a.js.iter().enumerate() {
                js.push(inputs.ideal_named(&format!("J{}", i + 1), src)?.ideal);
            }
            let cone = polyhedra::asymptotic_cone(&js, &named.ideal)?;
            Ok(Outcome::ok(json!({
                "inequalities": cone.iter().map(|c| &c.coeffs).collect::<Vec<_>>(),
                "form": "c_1*m_1 + ... + c_k*m_k + c_{k+1}*n >= 0 on (m_1, ..., m_k, n), meaning closure(J_1^m_1 ... J_k^m_k) is contained in closure(I^n)",
            })))
        }
        Command::Type(a) => {
            let named = inputs.ideal(a)?;
            let t = closure::type_of_ideal(&named.ideal)?;
            let mut out = Outcome::ok(rstr(&t.value));
            out.certificate = Some(json!({"inclusions_m_1_to_4": t.inclusions}));
            if !t.inclusions.iter().all(|&b| b) {
                out.exit = 1;
            }
            Ok(out)
        }
        Command::Gap(a) => {
            let named = inputs.ideal(&a.ideal)?;
            inputs.put("bound", json!(a.bound));
            let g = closure::izumi_gap_scan(&named.ideal, a.bound)?;
            let mut out = Outcome::ok(to_json(&g));
            out.notes
                .push("observed_gap is an empirical maximum over the scanned monomials, not a proved bound".into());
            if g.negative_gaps > 0 {
                out.exit = 1;
            }
            Ok(out)
        }
        Command::Polygon(a) => {
            let (named, f) = inputs.poly(a)?;
            let p = polygon::toric_polygon(&named.ideal, &f)?;
            let slope = p.last_side_slope()?;
            let (h, v) = p.projections();
            let nb = polyhedra::nubar(&f, &named.ideal)?.value;
            let mut out = Outcome::ok(json!({
                "parts": to_json(&p.describe()),
                "vertices": p.vertices(),
                "last_side_slope": rstr(&slope),
                "horizontal_projection": to_json(&h),
                "vertical_projection": to_json(&v),
            }));
            out.certificate = Some(json!({"nubar": rstr(&nb), "slope_matches_nubar": slope == nb}));
            if slope != nb {
                out.exit = 1;
            }
            Ok(out)
        }
        Command::Branch(a) => {
            inputs.put("beta", json!(a.beta));
            inputs.put("k", json!(a.k));
            let c = branch::CharSequence::new(a.beta.clone())?;
            let inv = branch::invariants(&c);
            let mut result = json!({
                "e": inv.e,
                "n": inv.n,
                "semigroup_generators": inv.semigroup_generators,
                "delta": inv.delta,
                "delta_formula": inv.delta_formula,
                "conductor": inv.conductor,
                "symmetric": inv.is_symmetric(),
                "closure_power": to_json(&branch::closure_power_of_m(&c, a.k)),
                "graded_degrees": to_json(&branch::graded_degrees(&c)),
            });
            let mut ok = inv.delta == inv.delta_formula && inv.conductor == 2 * inv.delta && inv.is_symmetric();
            if !c.is_smooth() {
                let p = branch::double_point_polygon(&c)?;
                let slope = p.last_side_slope()?;
                result["polygon"] = to_json(&p.describe());
                result["horizontal_projection"] = to_json(&p.projections().0);
                result["nubar_double_point_of_m"] = rstr(&slope);
                ok &= p.projections().0 == crate::Extended::Finite(2 * inv.delta);
            }
            let mut out = Outcome::ok(result);
            if !ok {
                out.exit = 1;
            }
            Ok(out)
        }
        Command::Arcs(a) => {
            let (named, f) = inputs.poly(&a.input)?;
            let seed = a.sampling.seed()?;
            inputs.put("seed", json!(seed));
            inputs.put("samples", json!(a.sampling.samples));
            inputs.put("truncation", json!(a.truncation));
            let arcs = arcs::random_monomial_arcs(named.ideal.dim(), a.sampling.samples as usize, seed, a.truncation);
            let r = arcs::arc_infimum_check(&f, &named.ideal, &arcs)?;
            let mut out = Outcome::ok(json!({
                "nubar": rstr(&r.nubar),
                "min_ratio": r.min_ratio.as_ref().map(rstr),
                "attained": r.attained,
                "violations": r.violations,
                "indeterminate": r.indeterminate,
                "arcs_checked": r.ratios.len(),
            }));
            out.certificate = Some(json!({"arc_weights": r.certificate_weights}));
            if r.violations > 0 {
                out.exit = 1;
            }
            if r.certificate_weights.is_none() {
                out.notes.push("no centered certificate arc: the certificate facet is not compact".into());
            }
            Ok(out)
        }
        Command::Loja(a) => {
            let (named, f) = inputs.poly(&a.input)?;
            let seed = a.sampling.seed()?;
            inputs.put("seed", json!(seed));
            inputs.put("samples", json!(a.sampling.samples));
            let r = closure::lojasiewicz(&f, &named.ideal, a.sampling.samples as usize, seed)?;
            let mut out = Outcome::ok(Value::String(format_extended(&r.theta)));
            out.certificate = Some(json!({
                "facet": facet_json(&r.certificate),
                "arc_weights": r.arc_weights,
                "arc_coeffs": r.arc_coeffs.iter().map(rstr).collect::<Vec<_>>(),
            }));
            out.oracle = Some(json!({
                "nubar": rstr(&r.nubar),
                "arc_scale": r.arc_scale,
                "fitted_slope": r.fitted_slope,
                "slope_error": r.slope_error,
                "fitted_orders": r.fitted_orders,
                "exact_orders": r.exact_orders,
                "fitted_constant": r.fitted_constant,
                "max_sample_ratio": r.max_sample_ratio,
                "samples": r.numeric_samples.len(),
                "consistent": r.passed,
            }));
            out.notes
                .push("numeric checks corroborate the exact exponent; they do not decide it".into());
            Ok(out)
        }
        Command::Verify(a) => {
            let (named, f) = inputs.poly(&a.input)?;
            let seed = a.sampling.seed()?;
            inputs.put("p", json!(a.fraction.p));
            inputs.put("q", json!(a.fraction.q));
            inputs.put("seed", json!(seed));
            inputs.put("samples", json!(a.sampling.samples));
            inputs.put("m_max", json!(a.m_max));
            let options = closure::NumericOptions {
                m_max: a.m_max,
                samples: a.sampling.samples as usize,
                seed,
            };
            let r = closure::verify_equivalences(&f, &named.ideal, a.fraction.p, a.fraction.q, options)?;
            let mut out = Outcome::ok(json!({
                "verdict": r.verdict(),
                "consistent": r.consistent,
                "conditions": {
                    "newton_membership": r.newton_membership,
                    "lp_bound": r.lp_bound,
                    "facet_arcs": r.facet_arcs,
                    "dependence": r.dependence,
                    "numeric": r.numeric,
                },
                "nubar": rstr(&r.nubar),
            }));
            out.certificate = Some(json!({
                "facet_witness": r.facet_witness.as_ref().map(facet_json),
                "dependence_m": r.dependence_m,
            }));
            if r.facet_arcs.is_none() {
                out.notes
                    .push("ideal is not primary: facet arcs and numerics do not apply".into());
            }
            if !r.consistent {
                out.exit = 1;
            }
            Ok(out)
        }
    }
}

fn command_name(cmd: &Command) -> &'static str {
    match cmd {
        Command::Nubar(_) => "nubar",
        Command::Closure(_) => "closure",
        Command::FracClosure(_) => "frac-closure",
        Command::Membership(_) => "membership",
        Command::Certificate(_) => "certificate",
        Command::Multiplicity(_) => "multiplicity",
        Command::Colength(_) => "colength",
        Command::Cone(_) => "cone",
        Command::Type(_) => "type",
        Command::Gap(_) => "gap",
        Command::Polygon(_) => "polygon",
        Command::Branch(_) => "branch",
        Command::Arcs(_) => "arcs",
        Command::Loja(_) => "loja",
        Command::Verify(_) => "verify",
    }
}

/// Runs one job and returns the JSON report with its exit code.
pub fn run(cli: &Cli) -> (Value, i32) {
    let start = Instant::now();
    let mut inputs = Inputs::new();
    let name = command_name(&cli.command);
    match execute(&cli.command, &mut inputs) {
        Ok(out) => {
            let mut report = Map::new();
            report.insert("command".into(), json!(name));
            report.insert("inputs_echo".into(), Value::Object(inputs.echo));
            report.insert("result".into(), out.result);
            if let Some(c) = out.certificate {
                report.insert("certificate".into(), c);
            }
            if let Some(o) = out.oracle {
                report.insert("oracle".into(), o);
            }
            let mut notes = inputs.notes;
            notes.extend(out.notes);
            report.insert("notes".into(), json!(notes));
            report.insert("timing_ms".into(), json!(start.elapsed().as_millis() as u64));
            (Value::Object(report), out.exit)
        }
        Err(e) => (error_json(&e), 2),
    }
}

pub fn error_json(e: &Error) -> Value {
    json!({"error": e.code(), "message": e.to_string()})
}

/// Entry point shared by the binary: parses `args`, prints the report and
/// returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return 0;
            }
            emit(&json!({"error": "UsageError", "message": e.render().to_string()}));
            return 2;
        }
    };
    let (report, code) = run(&cli);
    emit(&report);
    code
}

fn emit(v: &Value) {
    use std::io::Write;
    let text = serde_json::to_string_pretty(v).expect("json values always serialize");
    // a closed pipe on the reader side is not an error of the computation
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    #[test]
    fn parse_ideal_examples() {
        let n = parse_ideal(r#"{"vars":["x","y"],"generators":[[2,0],[0,3]]}"#).unwrap();
        assert_eq!(n.ideal, MonomialIdeal::from_slices(&[&[2, 0], &[0, 3]]));
        assert_eq!(pretty_ideal(&n.vars, &n.ideal), "(x^2, y^3)");
        assert_eq!(
            parse_ideal(r#"{"vars":["x","y"],"generators":[[0,0]]}"#).unwrap_err(),
            Error::UnitIdeal
        );
        let n = parse_ideal(r#"{"vars":["x","y"],"generators":[[2,0],[0,3],[2,1],[2,0]]}"#).unwrap();
        assert_eq!(n.dropped, 2);
        assert!(matches!(
            parse_ideal(r#"{"vars":["x","y"],"generators":[[2,0],"#),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_ideal(r#"{"vars":["x","y"],"generators":[[2,0,1]]}"#),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn parse_poly_examples() {
        let f = parse_poly(r#"{"terms":[{"coeff":"1","exp":[1,1]}]}"#, None).unwrap();
        assert_eq!(f.coefficient(&ExponentVector::new(vec![1, 1])), Some(&int(1)));
        let f = parse_poly(r#"{"terms":[{"coeff":"−1/2","exp":[1,0]}]}"#, None).unwrap();
        assert_eq!(pretty_poly(&default_vars(2), &f), "-1/2*x");
        let z = parse_poly(
            r#"{"terms":[{"coeff":"1","exp":[1,0]},{"coeff":"-1","exp":[1,0]}]}"#,
            Some(2),
        )
        .unwrap();
        assert!(z.is_zero());
        assert_eq!(
            parse_poly(r#"{"terms":[{"coeff":"1/0","exp":[1]}]}"#, None).unwrap_err(),
            Error::ZeroDenominator
        );
    }

    #[test]
    fn round_trip() {
        let n = parse_ideal(r#"{"vars":["a","b","c"],"generators":[[1,2,0],[0,0,3],[4,0,0]]}"#).unwrap();
        let again = parse_ideal(&ideal_to_json(&n.vars, &n.ideal).to_string()).unwrap();
        assert_eq!(again.ideal, n.ideal);
        assert_eq!(again.vars, n.vars);
        let f = parse_poly(r#"{"terms":[{"coeff":"3/4","exp":[1,0,2]},{"coeff":-2,"exp":[0,1,0]}]}"#, None).unwrap();
        assert_eq!(parse_poly(&poly_to_json(&f).to_string(), None).unwrap(), f);
    }
}
