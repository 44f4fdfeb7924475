//! Arcs `h: (C,0) -> (C^n,0)` given by truncated power series, orders of
//! compositions, and the arc characterization of `nubar`:
//! `nubar_I(f) = inf_h v(f∘h) / v(I∘h)`, attained on monomial ideals by the
//! arc `t ↦ (c_i t^{w_i})` along a facet normal `w`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{check_dim, Error, Result};
use crate::ideal::{ExponentVector, MonomialIdeal, PolynomialQ};
use crate::polyhedra::{self, NubarResult};
use crate::rational::{int, rat, Rational};

pub const DEFAULT_TRUNCATION: u32 = 64;

/// `Σ_{k < truncation} c_k t^k`; coefficients at and above the truncation are
/// unknown.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: BTreeMap<u32, Rational>,
    truncation: u32,
}

impl TruncatedSeries {
    pub fn zero(truncation: u32) -> Self {
        TruncatedSeries {
            coeffs: BTreeMap::new(),
            truncation,
        }
    }

    pub fn one(truncation: u32) -> Self {
        Self::monomial(Rational::one(), 0, truncation)
    }

    pub fn monomial(c: Rational, exp: u32, truncation: u32) -> Self {
        let mut s = Self::zero(truncation);
        if exp < truncation && !c.is_zero() {
            s.coeffs.insert(exp, c);
        }
        s
    }

    pub fn from_coeffs(coeffs: impl IntoIterator<Item = (u32, Rational)>, truncation: u32) -> Self {
        let mut s = Self::zero(truncation);
        for (e, c) in coeffs {
            s.add_term(e, c);
        }
        s
    }

    fn add_term(&mut self, e: u32, c: Rational) {
        if e >= self.truncation || c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(e).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&e);
        }
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    pub fn coefficients(&self) -> &BTreeMap<u32, Rational> {
        &self.coeffs
    }

    pub fn order(&self) -> OrderValue {
        match self.coeffs.keys().next() {
            Some(&k) => OrderValue::Exact(k),
            None => OrderValue::AtLeast(self.truncation),
        }
    }

    pub fn add(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let mut out = TruncatedSeries::zero(self.truncation.min(other.truncation));
        for (&e, c) in self.coeffs.iter().chain(&other.coeffs) {
            out.add_term(e, c.clone());
        }
        out
    }

    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        // a product is known below min(T_a + ord b, T_b + ord a)
        let ord = |s: &TruncatedSeries| s.coeffs.keys().next().copied().unwrap_or(s.truncation);
        let t = (self.truncation as u64 + ord(other) as u64)
            .min(other.truncation as u64 + ord(self) as u64)
            .min(self.truncation.max(other.truncation) as u64) as u32;
        let mut out = TruncatedSeries::zero(t);
        for (&ea, ca) in &self.coeffs {
            for (&eb, cb) in &other.coeffs {
                if ea + eb >= t {
                    break;
                }
                out.add_term(ea + eb, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> TruncatedSeries {
        let mut acc = TruncatedSeries::one(self.truncation);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Precomposition with `t ↦ t^k`.
    pub fn substitute_power(&self, k: u32) -> TruncatedSeries {
        TruncatedSeries::from_coeffs(
            self.coeffs.iter().map(|(&e, c)| (e * k, c.clone())),
            self.truncation.saturating_mul(k),
        )
    }
}

/// Order of a series: exact, or only bounded below by the truncation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum OrderValue {
    Exact(u32),
    AtLeast(u32),
}

impl OrderValue {
    pub fn exact(self) -> Option<u32> {
        match self {
            OrderValue::Exact(k) => Some(k),
            OrderValue::AtLeast(_) => None,
        }
    }
}

/// Centered, nontrivial arc.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arc {
    components: Vec<TruncatedSeries>,
}

impl Arc {
    pub fn new(components: Vec<TruncatedSeries>) -> Result<Self> {
        let Some(first) = components.first() else {
            return Err(Error::InvalidArgument("an arc needs at least one component".into()));
        };
        let t = first.truncation();
        if components.iter().any(|c| c.truncation() != t) {
            return Err(Error::TruncationMismatch);
        }
        if components.iter().any(|c| c.coeffs.contains_key(&0)) {
            return Err(Error::InvalidArgument("arc components must vanish at 0".into()));
        }
        if components.iter().all(|c| c.coeffs.is_empty()) {
            return Err(Error::InvalidArgument("the constant arc is excluded".into()));
        }
        Ok(Arc { components })
    }

    pub fn dim(&self) -> usize {
        self.components.len()
    }

    pub fn truncation(&self) -> u32 {
        self.components[0].truncation()
    }

    pub fn components(&self) -> &[TruncatedSeries] {
        &self.components
    }

    /// `h(t^k)`: multiplies every order by `k`.
    pub fn reparametrize(&self, k: u32) -> Arc {
        Arc {
            components: self.components.iter().map(|c| c.substitute_power(k)).collect(),
        }
    }
}

/// `t ↦ (c_i t^{w_i})`.
pub fn monomial_arc(weights: &[u32], coeffs: &[Rational], truncation: u32) -> Result<Arc> {
    check_dim(weights.len(), coeffs.len())?;
    if weights.contains(&0) {
        return Err(Error::NonPositiveWeight);
    }
    if coeffs.iter().any(Zero::is_zero) {
        return Err(Error::InvalidArgument("monomial arc coefficients must be nonzero".into()));
    }
    Arc::new(
        weights
            .iter()
            .zip(coeffs)
            .map(|(&w, c)| TruncatedSeries::monomial(c.clone(), w, truncation))
            .collect(),
    )
}

/// `v(f∘h)`, computed with exact truncated arithmetic.
///
/// Each term `x^a` has order at least `Σ a_i ord(h_i)`; when this static
/// bound reaches the truncation for every term while all involved
/// components are known to be nonzero, nothing below the truncation can be
/// computed and the call fails instead of guessing.
pub fn compose_order(f: &PolynomialQ, h: &Arc) -> Result<OrderValue> {
    Ok(compose(f, h)?.order())
}

/// `f∘h` as a truncated series.
pub fn compose(f: &PolynomialQ, h: &Arc) -> Result<TruncatedSeries> {
    check_dim(h.dim(), f.dim())?;
    let t = h.truncation();
    let orders: Vec<Option<u32>> = h.components.iter().map(|c| c.order().exact()).collect();
    let mut any_below = false;
    let mut min_known_bound: Option<u64> = None;
    for a in f.support() {
        let mut bound: Option<u64> = Some(0);
        for (&e, o) in a.entries().iter().zip(&orders) {
            if e == 0 {
                continue;
            }
            bound = match (bound, o) {
                (Some(b), Some(o)) => Some(b + e as u64 * *o as u64),
                _ => None,
            };
        }
        match bound {
            Some(b) if b < t as u64 => any_below = true,
            Some(b) => min_known_bound = Some(min_known_bound.map_or(b, |m| m.min(b))),
            None => {}
        }
    }
    if !any_below {
        if let Some(bound) = min_known_bound {
            return Err(Error::TruncationTooSmall { truncation: t, bound });
        }
    }

    let mut powers: Vec<Vec<TruncatedSeries>> = h
        .components
        .iter()
        .map(|c| vec![TruncatedSeries::one(t), c.clone()])
        .collect();
    let mut out = TruncatedSeries::zero(t);
    for (a, coeff) in f.terms() {
        let mut term = TruncatedSeries::monomial(coeff.clone(), 0, t);
        for (i, &e) in a.entries().iter().enumerate() {
            while powers[i].len() <= e as usize {
                let next = powers[i].last().expect("seeded").mul(&h.components[i]);
                powers[i].push(next);
            }
            if e > 0 {
                term = term.mul(&powers[i][e as usize]);
            }
        }
        out = out.add(&term);
    }
    out.truncation = t;
    Ok(out)
}

/// `v(I∘h) = min_g v(g∘h)`; exact iff some generator's order is exact.
pub fn ideal_order(ideal: &MonomialIdeal, h: &Arc) -> Result<OrderValue> {
    check_dim(h.dim(), ideal.dim())?;
    let mut best: Option<u32> = None;
    for g in ideal.as_polynomials() {
        match compose_order(&g, h) {
            Ok(OrderValue::Exact(k)) => best = Some(best.map_or(k, |b| b.min(k))),
            Ok(OrderValue::AtLeast(_)) | Err(Error::TruncationTooSmall { .. }) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(best.map_or(OrderValue::AtLeast(h.truncation()), OrderValue::Exact))
}

/// `v(f∘h) / v(I∘h)`; fails with `IndeterminateOrder` unless both orders are
/// exact.
pub fn arc_ratio(f: &PolynomialQ, ideal: &MonomialIdeal, h: &Arc) -> Result<Rational> {
    let num = match compose_order(f, h) {
        Ok(o) => o.exact(),
        Err(Error::TruncationTooSmall { .. }) => None,
        Err(e) => return Err(e),
    };
    let den = ideal_order(ideal, h)?.exact();
    match (num, den) {
        (Some(n), Some(d)) if d > 0 => Ok(Rational::new(BigInt::from(n), BigInt::from(d))),
        _ => Err(Error::IndeterminateOrder),
    }
}

/// Monomial arc along a valuation `w`, with coefficients chosen so that the
/// `w`-initial form of `f` does not vanish.
#[derive(Debug, Clone)]
pub struct AchievingArc {
    pub weights: Vec<u32>,
    pub coeffs: Vec<Rational>,
    pub arc: Arc,
    /// `v(f∘h) = v_w(f)`.
    pub f_order: u32,
    /// `v(I∘h) = v_w(I)`.
    pub ideal_order: u32,
}

/// Builds `t ↦ (c_i t^{w_i})` realizing `v_w` on `f`.
///
/// The `w`-initial form of `f` is a nonzero polynomial of degree at most
/// `deg f` in the coefficients `c`, so it cannot vanish on the whole grid
/// `{1, .., deg f + 1}^n`; the first non-root in grid order is used.
pub fn valuation_arc(f: &PolynomialQ, weights: &[u64], min_truncation: u32) -> Result<AchievingArc> {
    check_dim(weights.len(), f.dim())?;
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if weights.contains(&0) {
        return Err(Error::NoCenteredArc);
    }
    let w: Vec<u32> = weights.iter().map(|&x| x as u32).collect();
    let target = f
        .support()
        .map(|a| a.dot(weights))
        .min()
        .expect("nonzero polynomial") as u32;
    let truncation = min_truncation.max(target + 1);
    let side = f.total_degree() as u32 + 1;
    let n = w.len();
    let mut grid = vec![1u32; n];
    loop {
        let coeffs: Vec<Rational> = grid.iter().map(|&c| int(c as i64)).collect();
        let arc = monomial_arc(&w, &coeffs, truncation)?;
        if compose_order(f, &arc)? == OrderValue::Exact(target) {
            return Ok(AchievingArc {
                weights: w,
                coeffs,
                arc,
                f_order: target,
                ideal_order: 0,
            });
        }
        let mut i = 0;
        loop {
            if i == n {
                unreachable!("a nonzero initial form has a non-root on the grid");
            }
            if grid[i] < side {
                grid[i] += 1;
                break;
            }
            grid[i] = 1;
            i += 1;
        }
    }
}

/// The arc realizing the certificate valuation of a `nubar` computation.
pub fn achieving_arc(
    f: &PolynomialQ,
    ideal: &MonomialIdeal,
    certificate: &NubarResult,
    min_truncation: u32,
) -> Result<AchievingArc> {
    let level = certificate.certificate.level as u32;
    let mut arc = valuation_arc(f, &certificate.certificate.normal, min_truncation.max(level + 1))?;
    arc.ideal_order = ideal_order(ideal, &arc.arc)?
        .exact()
        .expect("truncation exceeds the level");
    Ok(arc)
}

/// Random monomial arcs: weights uniform in `[1, 8]^n`, coefficients from
/// `{±1, ±2, ±1/2}`.
pub fn random_monomial_arcs(dim: usize, count: usize, seed: u64, truncation: u32) -> Vec<Arc> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let palette = [int(1), int(-1), int(2), int(-2), rat(1, 2), rat(-1, 2)];
    (0..count)
        .map(|_| {
            let w: Vec<u32> = (0..dim).map(|_| rng.random_range(1..=8)).collect();
            let c: Vec<Rational> = (0..dim)
                .map(|_| palette[rng.random_range(0..palette.len())].clone())
                .collect();
            monomial_arc(&w, &c, truncation).expect("positive weights, nonzero coefficients")
        })
        .collect()
}

/// Outcome of testing the arc lower bound `v(f∘h)/v(I∘h) >= nubar_I(f)`.
#[derive(Debug, Clone, Serialize)]
pub struct ArcReport {
    #[serde(serialize_with = "crate::report::ser_rational")]
    pub nubar: Rational,
    /// Sorted exact ratios over the supplied arcs followed by the
    /// certificate arc (when one exists).
    #[serde(serialize_with = "crate::report::ser_rationals")]
    pub ratios: Vec<Rational>,
    #[serde(serialize_with = "crate::report::ser_opt_rational")]
    pub min_ratio: Option<Rational>,
    pub indeterminate: usize,
    pub violations: usize,
    /// The certificate arc realizes `nubar` exactly.
    pub attained: bool,
    pub certificate_weights: Option<Vec<u32>>,
}

impl ArcReport {
    pub fn passed(&self) -> bool {
        self.violations == 0 && self.attained && self.min_ratio.as_ref() == Some(&self.nubar)
    }
}

pub fn arc_infimum_check(f: &PolynomialQ, ideal: &MonomialIdeal, arcs: &[Arc]) -> Result<ArcReport> {
    let nb = polyhedra::nubar(f, ideal)?;
    let mut ratios = Vec::new();
    let mut indeterminate = 0;
    for h in arcs {
        match arc_ratio(f, ideal, h) {
            Ok(r) => ratios.push(r),
            Err(Error::IndeterminateOrder) => indeterminate += 1,
            Err(e) => return Err(e),
        }
    }
    let truncation = arcs.iter().map(Arc::truncation).max().unwrap_or(DEFAULT_TRUNCATION);
    let (attained, weights) = match achieving_arc(f, ideal, &nb, truncation) {
        Ok(a) => {
            let r = arc_ratio(f, ideal, &a.arc)?;
            let ok = r == nb.value;
            ratios.push(r);
            (ok, Some(a.weights))
        }
        Err(Error::NoCenteredArc) => (false, None),
        Err(e) => return Err(e),
    };
    let violations = ratios.iter().filter(|r| **r < nb.value).count();
    ratios.sort();
    Ok(ArcReport {
        min_ratio: ratios.first().cloned(),
        nubar: nb.value,
        ratios,
        indeterminate,
        violations,
        attained,
        certificate_weights: weights,
    })
}

/// `f∘h` for a monomial arc, as exact `(exponent, coefficient)` pairs.
pub fn monomial_arc_expansion(f: &PolynomialQ, weights: &[u32], coeffs: &[Rational]) -> BTreeMap<u64, Rational> {
    let mut out: BTreeMap<u64, Rational> = BTreeMap::new();
    for (a, c) in f.terms() {
        let e: u64 = a.entries().iter().zip(weights).map(|(&x, &w)| x as u64 * w as u64).sum();
        let mut v = c.clone();
        for (&x, ci) in a.entries().iter().zip(coeffs) {
            for _ in 0..x {
                v *= ci;
            }
        }
        let slot = out.entry(e).or_insert_with(Rational::zero);
        *slot += v;
    }
    out.retain(|_, v| !v.is_zero());
    out
}

/// Exponent vector helper for callers building arcs from certificates.
pub fn weights_of(e: &ExponentVector) -> Vec<u32> {
    e.entries().to_vec()
}
