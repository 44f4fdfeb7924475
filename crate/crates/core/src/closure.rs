//! Integral dependence: membership in `closure(I^{p/q})`, explicit dependence
//! relations, the equivalence suite, Lojasiewicz exponents, the type of an
//! ideal and the Izumi gap.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::arcs::{self, AchievingArc};
use crate::error::{check_dim, Error, Result};
use crate::ideal::{ExponentVector, MonomialIdeal, PolynomialQ};
use crate::order::PowerSearch;
use crate::polyhedra::{self, FacetValuation, NewtonPolyhedron, NubarResult};
use crate::rational::{int, ln_abs, to_f64, Extended, Rational};
use crate::report::{ser_extended, ser_rational, ser_rationals};

fn check_pq(p: u64, q: u64) -> Result<Rational> {
    if p == 0 || q == 0 {
        return Err(Error::InvalidArgument("p and q must be positive".into()));
    }
    Ok(Rational::new(BigInt::from(p), BigInt::from(q)))
}

/// `f^q ∈ closure(I^p)`, i.e. `nubar_I(f) >= p/q`.
pub fn is_integral(f: &PolynomialQ, ideal: &MonomialIdeal, p: u64, q: u64) -> Result<bool> {
    let target = check_pq(p, q)?;
    Ok(polyhedra::nubar(f, ideal)?.value >= target)
}

/// The relation `T^m - (x^a)^{qm} = 0` with `(x^a)^{qm} ∈ (I^p)^m`, making
/// `x^{qa}` integral over `I^p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DependenceCertificate {
    pub exponent: ExponentVector,
    pub p: u64,
    pub q: u64,
    pub m: u32,
    pub relation: String,
}

impl DependenceCertificate {
    /// Re-runs the membership search for `(x^a)^{qm} ∈ I^{pm}`.
    pub fn verify(&self, ideal: &MonomialIdeal) -> Result<bool> {
        let scaled = self.exponent.scale(self.q as u32 * self.m);
        crate::order::monomial_in_power(&scaled, ideal, self.p * self.m as u64)
    }
}

/// Smallest `m <= m_max` with `x^{qma} ∈ I^{pm}`, by exact membership search
/// only.
pub fn search_dependence(
    a: &ExponentVector,
    ideal: &MonomialIdeal,
    p: u64,
    q: u64,
    m_max: u32,
) -> Result<Option<u32>> {
    check_dim(ideal.dim(), a.dim())?;
    check_pq(p, q)?;
    let mut search = PowerSearch::new(ideal);
    for m in 1..=m_max {
        if search.contains(&a.scale(q as u32 * m), p * m as u64) {
            return Ok(Some(m));
        }
    }
    Ok(None)
}

pub fn dependence_certificate(
    f: &PolynomialQ,
    ideal: &MonomialIdeal,
    p: u64,
    q: u64,
    m_max: u32,
) -> Result<DependenceCertificate> {
    check_dim(ideal.dim(), f.dim())?;
    let a = f.as_monomial().ok_or(Error::NotMonomial)?.clone();
    if !is_integral(f, ideal, p, q)? {
        return Err(Error::NotIntegral);
    }
    let m = search_dependence(&a, ideal, p, q, m_max)?.ok_or(Error::NotFound { m_max })?;
    Ok(DependenceCertificate {
        relation: format!("T^{m} - (f^{q})^{m} = 0 with (f^{q})^{m} in (I^{p})^{m}"),
        exponent: a,
        p,
        q,
        m,
    })
}

/// Options for the numeric parts of [`verify_equivalences`] and
/// [`lojasiewicz`].
#[derive(Debug, Clone, Copy)]
pub struct NumericOptions {
    pub m_max: u32,
    pub samples: usize,
    pub seed: u64,
}

impl Default for NumericOptions {
    fn default() -> Self {
        NumericOptions {
            m_max: 16,
            samples: 100,
            seed: 0,
        }
    }
}

/// Five independent decisions of `f^q ∈ closure(I^p)`.
///
/// `None` marks a condition that does not apply: facet arcs and numerics
/// need a primary ideal so that every facet normal is positive.
#[derive(Debug, Clone, Serialize)]
pub struct EquivalenceReport {
    #[serde(serialize_with = "ser_rational")]
    pub target: Rational,
    #[serde(serialize_with = "ser_rational")]
    pub nubar: Rational,
    /// Every term of `f^q` lies in `p·NP(I)`.
    pub newton_membership: bool,
    /// LP value of `nubar` is at least `p/q`.
    pub lp_bound: bool,
    /// `v(f∘h)/v(I∘h) >= p/q` on the monomial arc of every facet.
    pub facet_arcs: Option<bool>,
    /// Every term of `f` has a dependence relation with `m <= m_max`.
    pub dependence: Option<bool>,
    /// `|f|^{q/p} <= C·max|g|` along the certificate arc and on samples.
    pub numeric: Option<bool>,
    /// A facet with `v_w(f)/v_w(I) < p/q`, when one exists.
    pub facet_witness: Option<FacetValuation>,
    pub dependence_m: Vec<Option<u32>>,
    pub consistent: bool,
}

impl EquivalenceReport {
    pub fn verdicts(&self) -> Vec<Option<bool>> {
        vec![
            Some(self.newton_membership),
            Some(self.lp_bound),
            self.facet_arcs,
            self.dependence,
            self.numeric,
        ]
    }

    /// The common verdict, if the conditions agree.
    pub fn verdict(&self) -> Option<bool> {
        self.consistent.then_some(self.newton_membership)
    }
}

pub fn verify_equivalences(
    f: &PolynomialQ,
    ideal: &MonomialIdeal,
    p: u64,
    q: u64,
    options: NumericOptions,
) -> Result<EquivalenceReport> {
    check_dim(ideal.dim(), f.dim())?;
    let target = check_pq(p, q)?;
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let np = NewtonPolyhedron::new(ideal)?;
    let nb = polyhedra::nubar_with(&np, f)?;

    let fq = f.pow(q as u32);
    let newton_membership = fq.support().all(|a| np.contains_scaled(a, p, 1));

    let lp_bound = polyhedra::nubar_lp(f, ideal)? >= target;

    let facet_witness = np
        .facets()
        .iter()
        .find(|w| {
            let v = w.order_of(f).expect("nonzero");
            Rational::new(BigInt::from(v), BigInt::from(w.level)) < target
        })
        .cloned();

    let primary = ideal.is_primary();
    let facet_arcs = if primary {
        let mut ok = true;
        for w in np.facets() {
            let arc = arcs::valuation_arc(f, &w.normal, arcs::DEFAULT_TRUNCATION.max(w.level as u32 + 1))?;
            if arcs::arc_ratio(f, ideal, &arc.arc)? < target {
                ok = false;
            }
        }
        Some(ok)
    } else {
        None
    };

    let dependence_m: Vec<Option<u32>> = f
        .support()
        .map(|a| search_dependence(a, ideal, p, q, options.m_max))
        .collect::<Result<_>>()?;
    let dependence = Some(dependence_m.iter().all(Option::is_some));

    let numeric = if primary {
        let theta = 1.0 / to_f64(&target);
        let arc = arcs::achieving_arc(f, ideal, &nb, arcs::DEFAULT_TRUNCATION)?;
        let probe = ArcProbe::new(f, ideal, &arc);
        let slope_ok = probe.ratio_slope() >= to_f64(&target) - SLOPE_TOLERANCE;
        let fit = fit_constant(f, ideal, theta, &probe);
        let samples = sample_points(ideal.dim(), options.samples, options.seed);
        let samples_ok = samples
            .iter()
            .all(|x| log_ratio(f, ideal, theta, x) <= fit + SAMPLE_FACTOR.ln());
        Some(slope_ok && samples_ok)
    } else {
        None
    };

    let mut report = EquivalenceReport {
        target,
        nubar: nb.value,
        newton_membership,
        lp_bound,
        facet_arcs,
        dependence,
        numeric,
        facet_witness,
        dependence_m,
        consistent: false,
    };
    report.consistent = report
        .verdicts()
        .into_iter()
        .flatten()
        .all(|v| v == report.newton_membership);
    Ok(report)
}

pub const SLOPE_TOLERANCE: f64 = 1e-6;
pub const SAMPLE_FACTOR: f64 = 10.0;
/// Values of `t` at which the certificate arc is probed.
pub const ARC_TIMES: [f64; 4] = [1e-2, 1e-3, 1e-4, 1e-5];

/// `ln|f(h(t))|` and `ln max_g |g(h(t))|` along a monomial arc, evaluated
/// from the exact expansion so that tiny values never underflow.
///
/// The arc is reparametrized by `t ↦ t^N` with `N` large enough that all
/// non-leading terms are below `1e-12` relative at `t = 1e-2`; this leaves
/// every order ratio unchanged.
#[derive(Debug, Clone)]
pub struct ArcProbe {
    pub scale: u32,
    pub weights: Vec<u32>,
    pub coeffs: Vec<Rational>,
    f_leading: (u64, f64),
    f_rest: Vec<(u64, f64)>,
    g_terms: Vec<(u64, f64)>,
}

impl ArcProbe {
    pub fn new(f: &PolynomialQ, ideal: &MonomialIdeal, arc: &AchievingArc) -> Self {
        let expansion = arcs::monomial_arc_expansion(f, &arc.weights, &arc.coeffs);
        let mut iter = expansion.iter();
        let (&e0, c0) = iter.next().expect("exact order means a nonzero expansion");
        let f_rest: Vec<(u64, f64)> = iter.map(|(&e, c)| (e - e0, to_f64(&(c / c0)))).collect();
        let g_terms: Vec<(u64, f64)> = ideal
            .as_polynomials()
            .iter()
            .map(|g| {
                let ex = arcs::monomial_arc_expansion(g, &arc.weights, &arc.coeffs);
                let (&e, c) = ex.iter().next().expect("monomial with nonzero coefficients");
                (e, ln_abs(c))
            })
            .collect();
        let g_min = g_terms.iter().map(|t| t.0).min().expect("generators");
        let g_lead = g_terms
            .iter()
            .filter(|t| t.0 == g_min)
            .map(|t| t.1)
            .fold(f64::NEG_INFINITY, f64::max);

        let ln_t0 = ARC_TIMES[0].ln();
        let mut scale = 1u32;
        loop {
            let n = scale as f64;
            let f_tail: f64 = f_rest.iter().map(|&(d, r)| r.abs() * (n * d as f64 * ln_t0).exp()).sum();
            let g_dominated = g_terms
                .iter()
                .filter(|t| t.0 > g_min)
                .all(|&(e, lc)| lc + n * (e - g_min) as f64 * ln_t0 < g_lead - 30.0);
            if (f_tail < 1e-12 && g_dominated) || scale >= 4096 {
                break;
            }
            scale += 1;
        }
        ArcProbe {
            scale,
            weights: arc.weights.clone(),
            coeffs: arc.coeffs.clone(),
            f_leading: (e0, ln_abs(c0)),
            f_rest,
            g_terms,
        }
    }

    pub fn ln_f(&self, t: f64) -> f64 {
        let n = self.scale as f64;
        let lt = t.ln();
        let tail: f64 = self
            .f_rest
            .iter()
            .map(|&(d, r)| r * (n * d as f64 * lt).exp())
            .sum();
        self.f_leading.1 + n * self.f_leading.0 as f64 * lt + tail.ln_1p()
    }

    pub fn ln_g(&self, t: f64) -> f64 {
        let n = self.scale as f64;
        let lt = t.ln();
        self.g_terms
            .iter()
            .map(|&(e, lc)| lc + n * e as f64 * lt)
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Least-squares slope of `ln|f|` against `ln max|g|` over [`ARC_TIMES`].
    pub fn ratio_slope(&self) -> f64 {
        let xs: Vec<f64> = ARC_TIMES.iter().map(|&t| self.ln_g(t)).collect();
        let ys: Vec<f64> = ARC_TIMES.iter().map(|&t| self.ln_f(t)).collect();
        fit_slope(&xs, &ys)
    }

    /// Slopes of `ln|f|` and `ln max|g|` against `ln t`, divided by the
    /// reparametrization scale: these estimate `v_w(f)` and `v_w(I)`.
    pub fn order_slopes(&self) -> (f64, f64) {
        let xs: Vec<f64> = ARC_TIMES.iter().map(|t| t.ln()).collect();
        let f: Vec<f64> = ARC_TIMES.iter().map(|&t| self.ln_f(t)).collect();
        let g: Vec<f64> = ARC_TIMES.iter().map(|&t| self.ln_g(t)).collect();
        let n = self.scale as f64;
        (fit_slope(&xs, &f) / n, fit_slope(&xs, &g) / n)
    }
}

pub fn fit_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let cov: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let var: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    cov / var
}

/// `θ ln|f(x)| - ln max_g |g(x)|`, the log of the Lojasiewicz ratio.
pub fn log_ratio(f: &PolynomialQ, ideal: &MonomialIdeal, theta: f64, x: &[f64]) -> f64 {
    let fv = f.eval_f64(x).abs();
    let gv = ideal
        .generators()
        .iter()
        .map(|g| {
            g.entries()
                .iter()
                .zip(x)
                .map(|(&e, &xi)| e as f64 * xi.ln())
                .sum::<f64>()
        })
        .fold(f64::NEG_INFINITY, f64::max);
    if fv == 0.0 {
        return f64::NEG_INFINITY;
    }
    theta * fv.ln() - gv
}

/// Log of the fitted constant: the largest log ratio over the grid
/// `{10^{-j/4} : 0 <= j <= 20}^n` and the probed arc points.
pub fn fit_constant(f: &PolynomialQ, ideal: &MonomialIdeal, theta: f64, probe: &ArcProbe) -> f64 {
    let n = ideal.dim();
    let axis: Vec<f64> = (0..=20).map(|j| 10f64.powf(-(j as f64) / 4.0)).collect();
    let mut best = f64::NEG_INFINITY;
    let mut idx = vec![0usize; n];
    let mut x = vec![0.0; n];
    'grid: loop {
        for (xi, &j) in x.iter_mut().zip(&idx) {
            *xi = axis[j];
        }
        best = best.max(log_ratio(f, ideal, theta, &x));
        let mut i = 0;
        loop {
            if i == n {
                break 'grid;
            }
            idx[i] += 1;
            if idx[i] < axis.len() {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
    for &t in &ARC_TIMES {
        best = best.max(theta * probe.ln_f(t) - probe.ln_g(t));
    }
    best
}

/// Uniform points of `(0, 1]^n` from a seeded ChaCha8 stream.
pub fn sample_points(dim: usize, count: usize, seed: u64) -> Vec<Vec<f64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| (0..dim).map(|_| 1.0 - rng.random::<f64>()).collect())
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct NumericSample {
    pub point: Vec<f64>,
    pub f_abs: f64,
    pub g_max: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct LojasiewiczReport {
    #[serde(serialize_with = "ser_extended")]
    pub theta: Extended<Rational>,
    #[serde(serialize_with = "ser_rational")]
    pub nubar: Rational,
    pub certificate: FacetValuation,
    pub arc_weights: Vec<u32>,
    #[serde(serialize_with = "ser_rationals")]
    pub arc_coeffs: Vec<Rational>,
    /// Reparametrization `t ↦ t^scale` used for the numeric probe.
    pub arc_scale: u32,
    /// Fitted slope of `ln|f|` against `ln max|g|`; compare with `1/theta`.
    pub fitted_slope: Option<f64>,
    pub slope_error: Option<f64>,
    /// Fitted orders of `f` and `I` along the arc; compare with `v_w`.
    pub fitted_orders: Option<(f64, f64)>,
    pub exact_orders: (u64, u64),
    pub fitted_constant: Option<f64>,
    pub max_sample_ratio: Option<f64>,
    pub numeric_samples: Vec<NumericSample>,
    pub passed: bool,
}

/// `theta = 1/nubar_I(f)` with numeric corroboration along the certificate
/// arc and on random points.
pub fn lojasiewicz(f: &PolynomialQ, ideal: &MonomialIdeal, samples: usize, seed: u64) -> Result<LojasiewiczReport> {
    check_dim(ideal.dim(), f.dim())?;
    ideal.require_primary()?;
    let nb: NubarResult = polyhedra::nubar(f, ideal)?;
    let arc = arcs::achieving_arc(f, ideal, &nb, arcs::DEFAULT_TRUNCATION)?;
    let probe = ArcProbe::new(f, ideal, &arc);
    let exact_orders = (
        nb.certificate.order_of(f).expect("nonzero"),
        nb.certificate.level,
    );
    let points = sample_points(ideal.dim(), samples, seed);
    let numeric_samples: Vec<NumericSample> = points
        .iter()
        .map(|x| NumericSample {
            point: x.clone(),
            f_abs: f.eval_f64(x).abs(),
            g_max: ideal
                .as_polynomials()
                .iter()
                .map(|g| g.eval_f64(x).abs())
                .fold(0.0, f64::max),
        })
        .collect();

    if nb.value.is_zero() {
        return Ok(LojasiewiczReport {
            theta: Extended::Infinity,
            nubar: nb.value,
            certificate: nb.certificate,
            arc_weights: arc.weights,
            arc_coeffs: arc.coeffs,
            arc_scale: probe.scale,
            fitted_slope: None,
            slope_error: None,
            fitted_orders: None,
            exact_orders,
            fitted_constant: None,
            max_sample_ratio: None,
            numeric_samples,
            passed: true,
        });
    }

    let theta = int(1) / &nb.value;
    let theta_f = to_f64(&theta);
    let slope = probe.ratio_slope();
    let slope_error = (slope - to_f64(&nb.value)).abs();
    let orders = probe.order_slopes();
    let fit = fit_constant(f, ideal, theta_f, &probe);
    let worst = points
        .iter()
        .map(|x| log_ratio(f, ideal, theta_f, x))
        .fold(f64::NEG_INFINITY, f64::max);
    let orders_ok = (orders.0 - exact_orders.0 as f64).abs() < 1e-6 * exact_orders.0.max(1) as f64
        && (orders.1 - exact_orders.1 as f64).abs() < 1e-6 * exact_orders.1 as f64;
    let passed = slope_error <= SLOPE_TOLERANCE && orders_ok && worst <= fit + SAMPLE_FACTOR.ln();
    Ok(LojasiewiczReport {
        theta: Extended::Finite(theta),
        nubar: nb.value,
        certificate: nb.certificate,
        arc_weights: arc.weights,
        arc_coeffs: arc.coeffs,
        arc_scale: probe.scale,
        fitted_slope: Some(slope),
        slope_error: Some(slope_error),
        fitted_orders: Some(orders),
        exact_orders,
        fitted_constant: Some(fit.exp()),
        max_sample_ratio: Some(worst.exp()),
        numeric_samples,
        passed,
    })
}

/// Gradient inequality for `f = Σ x_i^{a_i}`.
#[derive(Debug, Clone, Serialize)]
pub struct GradientReport {
    pub exponents: Vec<u32>,
    /// `nubar_{j(f)}(f)` with `j(f) = (x_i^{a_i - 1})`.
    #[serde(serialize_with = "ser_rational")]
    pub nubar_jacobian: Rational,
    /// The Lojasiewicz exponent `1/nubar_{j(f)}(f) < 1` of the gradient.
    #[serde(serialize_with = "ser_rational")]
    pub theta_gradient: Rational,
    /// `nubar_{(x)*j(f)}(f)` with `(x)*j(f) = (x_i^{a_i})`.
    #[serde(serialize_with = "ser_rational")]
    pub nubar_extended: Rational,
    pub strict_inequality: bool,
    pub extended_is_one: bool,
}

pub fn brieskorn(exponents: &[u32]) -> Result<PolynomialQ> {
    let n = exponents.len();
    PolynomialQ::from_terms(
        n,
        exponents.iter().enumerate().map(|(i, &a)| {
            let mut e = vec![0; n];
            e[i] = a;
            (int(1), ExponentVector::new(e))
        }),
    )
}

pub fn gradient_suite(exponents: &[u32]) -> Result<GradientReport> {
    let n = exponents.len();
    if n == 0 || n > polyhedra::MAX_DIM {
        return Err(Error::InvalidArgument(format!(
            "between 1 and {} exponents required",
            polyhedra::MAX_DIM
        )));
    }
    if let Some(&a) = exponents.iter().find(|&&a| a < 2) {
        return Err(Error::InvalidExponent(a));
    }
    let f = brieskorn(exponents)?;
    let pure = |shift: u32| {
        MonomialIdeal::normalize(
            n,
            exponents.iter().enumerate().map(|(i, &a)| {
                let mut e = vec![0; n];
                e[i] = a - shift;
                ExponentVector::new(e)
            }),
        )
    };
    let jacobian = pure(1)?;
    let extended = pure(0)?;
    let nubar_jacobian = polyhedra::nubar(&f, &jacobian)?.value;
    let nubar_extended = polyhedra::nubar(&f, &extended)?.value;
    Ok(GradientReport {
        exponents: exponents.to_vec(),
        theta_gradient: int(1) / &nubar_jacobian,
        strict_inequality: nubar_jacobian > int(1),
        extended_is_one: nubar_extended == int(1),
        nubar_jacobian,
        nubar_extended,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct TypeReport {
    /// `T(I) = 1/nubar_I(√I)`.
    #[serde(serialize_with = "ser_rational")]
    pub value: Rational,
    /// `(√I)^{⌈mT⌉} ⊆ closure(I^m)` for `m = 1..=4`.
    pub inclusions: Vec<bool>,
}

pub fn type_of_ideal(ideal: &MonomialIdeal) -> Result<TypeReport> {
    ideal.require_primary()?;
    let radical = ideal.radical();
    let value = int(1) / polyhedra::nubar_ideal(&radical, ideal)?;
    let mut inclusions = Vec::new();
    for m in 1..=4u32 {
        let k = (&value * int(m as i64)).ceil().to_integer().to_u32().expect("small type");
        let lhs = radical.power(k)?;
        let rhs = polyhedra::fractional_closure(ideal, m as u64, 1)?;
        inclusions.push(rhs.contains_ideal(&lhs)?);
    }
    Ok(TypeReport { value, inclusions })
}

/// Largest observed `nubar_I(x^a) - nu_I(x^a)` over `|a| <= degree_bound`.
///
/// This is an empirical maximum, not a proof of the uniform bound.
#[derive(Debug, Clone, Serialize)]
pub struct GapReport {
    #[serde(serialize_with = "ser_rational")]
    pub observed_gap: Rational,
    pub argmax: ExponentVector,
    /// Maximum gap among monomials of each exact degree `0..=degree_bound`.
    #[serde(serialize_with = "ser_rationals")]
    pub per_degree: Vec<Rational>,
    /// The last two degree slices do not exceed the earlier maximum.
    pub stabilized: bool,
    pub negative_gaps: usize,
}

pub const MAX_GAP_DEGREE: u32 = 12;

pub fn izumi_gap_scan(ideal: &MonomialIdeal, degree_bound: u32) -> Result<GapReport> {
    ideal.require_primary()?;
    if degree_bound > MAX_GAP_DEGREE {
        return Err(Error::InvalidArgument(format!("degree bound must be at most {MAX_GAP_DEGREE}")));
    }
    let n = ideal.dim();
    let np = NewtonPolyhedron::new(ideal)?;
    let mut search = PowerSearch::new(ideal);
    let mut per_degree = Vec::new();
    let mut best = (int(-1), ExponentVector::zero(n));
    let mut negative_gaps = 0;
    for d in 0..=degree_bound {
        let mut slice_max: Option<Rational> = None;
        for a in monomials_of_degree(n, d) {
            let nb = polyhedra::nubar_with(&np, &PolynomialQ::monomial(int(1), a.clone()))?.value;
            let nu = search.max_power(&a);
            let gap = nb - int(nu as i64);
            if gap.is_negative() {
                negative_gaps += 1;
            }
            if gap > best.0 {
                best = (gap.clone(), a.clone());
            }
            if slice_max.as_ref().is_none_or(|m| gap > *m) {
                slice_max = Some(gap);
            }
        }
        per_degree.push(slice_max.expect("every degree has monomials"));
    }
    let len = per_degree.len();
    let stabilized = if len < 3 {
        false
    } else {
        let earlier = per_degree[..len - 2].iter().max().expect("nonempty");
        per_degree[len - 2..].iter().all(|g| g <= earlier)
    };
    Ok(GapReport {
        observed_gap: best.0,
        argmax: best.1,
        per_degree,
        stabilized,
        negative_gaps,
    })
}

/// All exponent vectors of total degree `d` in `n` variables, in lex order.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<ExponentVector> {
    fn rec(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<ExponentVector>) {
        if prefix.len() + 1 == n {
            prefix.push(d);
            out.push(ExponentVector::new(prefix.clone()));
            prefix.pop();
            return;
        }
        for k in (0..=d).rev() {
            prefix.push(k);
            rec(n, d - k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, d, &mut Vec::new(), &mut out);
    }
    out
}
