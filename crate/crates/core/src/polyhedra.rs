//! Newton polyhedra of monomial ideals and their facet valuations.
//!
//! For a monomial ideal `I` with Newton polyhedron `NP(I) = conv(exponents) +
//! R^n_{>=0}`, each facet not lying in a coordinate hyperplane gives a
//! monomial valuation `v_w(x^a) = <w, a>` with primitive normal `w >= 0` and
//! level `v_w(I) = min_g <w, g> > 0`. These are the Rees valuations of `I`,
//! and
//!
//! ```text
//! nubar_I(f) = min_w v_w(f) / v_w(I),   closure(I^p)^(1/q) = { a : q<w,a> >= p v_w(I) for all w }.
//! ```

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{check_dim, Error, Result};
use crate::ideal::{ExponentVector, MonomialIdeal, PolynomialQ};
use crate::linalg;
use crate::lp::{self, LpOutcome};
use crate::rational::{int, Rational};

/// Largest ambient dimension for facet enumeration.
pub const MAX_DIM: usize = 4;

/// Facet inequality `<normal, x> >= level` of a Newton polyhedron.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FacetValuation {
    pub normal: Vec<u64>,
    pub level: u64,
    /// Lattice length of the facet segment; only for compact facets in two
    /// variables.
    #[serde(skip_serializing_if = "Option::is_none")]
    lattice_length: Option<u64>,
}

impl FacetValuation {
    pub fn value(&self, a: &ExponentVector) -> u64 {
        a.dot(&self.normal)
    }

    /// `v_w(f)`: minimum over the support; `None` for `f = 0`.
    pub fn order_of(&self, f: &PolynomialQ) -> Option<u64> {
        f.support().map(|a| self.value(a)).min()
    }

    /// `v_w(J)`: minimum over the generators.
    pub fn order_of_ideal(&self, j: &MonomialIdeal) -> u64 {
        j.generators().iter().map(|g| self.value(g)).min().unwrap_or(0)
    }

    pub fn is_compact(&self) -> bool {
        self.normal.iter().all(|&w| w > 0)
    }

    /// Degree of the exceptional component: lattice length of the facet
    /// segment. Defined for compact facets in two variables only.
    pub fn lattice_degree(&self) -> Result<u64> {
        if self.normal.len() != 2 {
            return Err(Error::PolygonUnsupportedDimension { dim: self.normal.len() });
        }
        self.lattice_length.ok_or(Error::NotPrimary)
    }
}

/// Newton polyhedron together with its facet valuations, sorted by normal.
#[derive(Debug, Clone)]
pub struct NewtonPolyhedron {
    source: MonomialIdeal,
    facets: Vec<FacetValuation>,
}

impl NewtonPolyhedron {
    /// Enumerates facets from candidate normals through `n` points/axis
    /// directions, keeping those whose face has dimension `n - 1`.
    pub fn new(ideal: &MonomialIdeal) -> Result<Self> {
        let n = ideal.dim();
        if n > MAX_DIM {
            return Err(Error::DimensionTooLarge { dim: n, max: MAX_DIM });
        }
        let pts: Vec<Vec<i128>> = ideal
            .generators()
            .iter()
            .map(|g| g.entries().iter().map(|&e| e as i128).collect())
            .collect();
        let mut facets = Vec::new();
        for w in linalg::candidate_normals(&pts, n) {
            let values: Vec<u64> = ideal.generators().iter().map(|g| g.dot(&w)).collect();
            let level = *values.iter().min().expect("nonempty generators");
            if level == 0 {
                continue;
            }
            let tight: Vec<&Vec<i128>> = pts
                .iter()
                .zip(&values)
                .filter(|(_, &v)| v == level)
                .map(|(p, _)| p)
                .collect();
            let mut rows: Vec<Vec<i128>> = tight[1..]
                .iter()
                .map(|p| p.iter().zip(tight[0]).map(|(a, b)| a - b).collect())
                .collect();
            for (j, &wj) in w.iter().enumerate() {
                if wj == 0 {
                    let mut e = vec![0i128; n];
                    e[j] = 1;
                    rows.push(e);
                }
            }
            if linalg::rank(&rows) + 1 != n {
                continue;
            }
            let lattice_length = (n == 2 && w.iter().all(|&x| x > 0)).then(|| {
                let lo = tight.iter().min_by_key(|p| p[0]).expect("nonempty");
                let hi = tight.iter().max_by_key(|p| p[0]).expect("nonempty");
                ((hi[0] - lo[0]).abs().gcd(&(hi[1] - lo[1]).abs())) as u64
            });
            facets.push(FacetValuation {
                normal: w,
                level,
                lattice_length,
            });
        }
        facets.sort();
        Ok(NewtonPolyhedron {
            source: ideal.clone(),
            facets,
        })
    }

    pub fn source(&self) -> &MonomialIdeal {
        &self.source
    }

    pub fn facets(&self) -> &[FacetValuation] {
        &self.facets
    }

    pub fn dim(&self) -> usize {
        self.source.dim()
    }

    /// `a ∈ (p/q)·NP(I)`.
    pub fn contains_scaled(&self, a: &ExponentVector, p: u64, q: u64) -> bool {
        self.facets
            .iter()
            .all(|f| q as u128 * f.value(a) as u128 >= p as u128 * f.level as u128)
    }

    pub fn contains(&self, a: &ExponentVector) -> bool {
        self.contains_scaled(a, 1, 1)
    }

    /// Minimal integer points of `(p/q)·NP(I)`.
    ///
    /// If `a` is such a point with `a_i > ceil(p M_i / q)` (`M` the
    /// componentwise max of the generators), write `a = u + r` with `u` in
    /// the scaled hull, so `u_i <= p M_i / q` and `r_i >= 1`; then `a - e_i`
    /// is still in the polyhedron. Hence minimal points lie in that box.
    fn minimal_points(&self, p: u64, q: u64) -> Vec<ExponentVector> {
        let bounds: Vec<u32> = self
            .source
            .max_exponents()
            .iter()
            .map(|&m| (p * m as u64).div_ceil(q) as u32)
            .collect();
        let n = bounds.len();
        let mut out = Vec::new();
        let mut cur = vec![0u32; n];
        loop {
            let a = ExponentVector::new(cur.clone());
            if self.contains_scaled(&a, p, q) {
                let minimal = (0..n).all(|i| {
                    if cur[i] == 0 {
                        return true;
                    }
                    let mut b = cur.clone();
                    b[i] -= 1;
                    !self.contains_scaled(&ExponentVector::new(b), p, q)
                });
                if minimal {
                    out.push(a);
                }
            }
            let mut i = 0;
            loop {
                if i == n {
                    return out;
                }
                if cur[i] < bounds[i] {
                    cur[i] += 1;
                    break;
                }
                cur[i] = 0;
                i += 1;
            }
        }
    }
}

/// Value of `nubar_I(f)` with its certificate: the facet valuation achieving
/// the minimum (lexicographically smallest normal on ties) and a term of `f`
/// achieving that valuation's order on `f`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NubarResult {
    pub value: Rational,
    pub certificate: FacetValuation,
    pub witness_term: ExponentVector,
}

impl NubarResult {
    /// Re-checks both defining properties against `f` and the polyhedron.
    pub fn verify(&self, f: &PolynomialQ, np: &NewtonPolyhedron) -> bool {
        let own = Rational::new(
            BigInt::from(self.certificate.value(&self.witness_term)),
            BigInt::from(self.certificate.level),
        );
        own == self.value
            && f.coefficient(&self.witness_term).is_some()
            && np.facets().contains(&self.certificate)
            && np.facets().iter().all(|w| {
                f.support().all(|a| {
                    Rational::new(BigInt::from(w.value(a)), BigInt::from(w.level)) >= self.value
                })
            })
    }
}

pub fn nubar_with(np: &NewtonPolyhedron, f: &PolynomialQ) -> Result<NubarResult> {
    check_dim(np.dim(), f.dim())?;
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut best: Option<NubarResult> = None;
    for facet in np.facets() {
        let (witness, value) = f
            .support()
            .map(|a| (a, facet.value(a)))
            .min_by_key(|&(_, v)| v)
            .expect("nonzero polynomial");
        let ratio = Rational::new(BigInt::from(value), BigInt::from(facet.level));
        if best.as_ref().is_none_or(|b| ratio < b.value) {
            best = Some(NubarResult {
                value: ratio,
                certificate: facet.clone(),
                witness_term: witness.clone(),
            });
        }
    }
    Ok(best.expect("a proper ideal has a facet of positive level"))
}

/// `nubar_I(f)` as the minimum of `v_w(f)/v_w(I)` over facet valuations.
pub fn nubar(f: &PolynomialQ, ideal: &MonomialIdeal) -> Result<NubarResult> {
    nubar_with(&NewtonPolyhedron::new(ideal)?, f)
}

/// `max{λ : a ∈ λ·NP(I)}` as the linear program
/// `max Σ μ_j  s.t.  Σ μ_j g_j <= a, μ >= 0`.
pub fn nubar_monomial_lp(a: &ExponentVector, ideal: &MonomialIdeal) -> Result<Rational> {
    check_dim(ideal.dim(), a.dim())?;
    let gens = ideal.generators();
    let c: Vec<Rational> = gens.iter().map(|_| int(1)).collect();
    let rows: Vec<Vec<Rational>> = (0..ideal.dim())
        .map(|i| gens.iter().map(|g| int(g.entries()[i] as i64)).collect())
        .collect();
    let b: Vec<Rational> = a.entries().iter().map(|&e| int(e as i64)).collect();
    match lp::maximize(&c, &rows, &b) {
        LpOutcome::Optimal { value, .. } => Ok(value),
        LpOutcome::Unbounded => unreachable!("nonzero generators bound the program"),
    }
}

/// LP route for polynomials: minimum of the monomial program over the support.
pub fn nubar_lp(f: &PolynomialQ, ideal: &MonomialIdeal) -> Result<Rational> {
    check_dim(ideal.dim(), f.dim())?;
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut best: Option<Rational> = None;
    for a in f.support() {
        let v = nubar_monomial_lp(a, ideal)?;
        if best.as_ref().is_none_or(|b| v < *b) {
            best = Some(v);
        }
    }
    Ok(best.expect("nonzero polynomial"))
}

/// `nubar_I(J)`: minimum of `nubar_I` over the generators of `J`.
pub fn nubar_ideal(j: &MonomialIdeal, ideal: &MonomialIdeal) -> Result<Rational> {
    check_dim(ideal.dim(), j.dim())?;
    let np = NewtonPolyhedron::new(ideal)?;
    nubar_ideal_with(&np, j)
}

pub fn nubar_ideal_with(np: &NewtonPolyhedron, j: &MonomialIdeal) -> Result<Rational> {
    check_dim(np.dim(), j.dim())?;
    j.as_polynomials()
        .iter()
        .map(|g| nubar_with(np, g).map(|r| r.value))
        .try_fold(None, |acc: Option<Rational>, v| {
            let v = v?;
            Ok(Some(match acc {
                Some(a) if a <= v => a,
                _ => v,
            }))
        })
        .map(|v| v.expect("nonempty generators"))
}

/// Integral closure: monomials whose exponent lies in `NP(I)`.
pub fn closure(ideal: &MonomialIdeal) -> Result<MonomialIdeal> {
    fractional_closure(ideal, 1, 1)
}

/// `closure(I^{p/q})`: monomials `x^a` with `nubar_I(x^a) >= p/q`.
pub fn fractional_closure(ideal: &MonomialIdeal, p: u64, q: u64) -> Result<MonomialIdeal> {
    if p == 0 || q == 0 {
        return Err(Error::InvalidArgument("p and q must be positive".into()));
    }
    let np = NewtonPolyhedron::new(ideal)?;
    MonomialIdeal::normalize(ideal.dim(), np.minimal_points(p, q))
}

/// lcm of the facet levels; `q(I)·nubar_I(f)` is always an integer.
pub fn universal_denominator(ideal: &MonomialIdeal) -> Result<u64> {
    let np = NewtonPolyhedron::new(ideal)?;
    Ok(np.facets().iter().fold(1u64, |acc, f| acc.lcm(&f.level)))
}

/// Samuel multiplicity `e(I) = n!·vol(R^n_{>=0} \ NP(I))` for primary `I`,
/// `n <= 3`, computed by coning each compact facet from the origin and
/// triangulating it.
pub fn multiplicity(ideal: &MonomialIdeal) -> Result<u64> {
    let n = ideal.dim();
    if n > 3 {
        return Err(Error::DimensionTooLarge { dim: n, max: 3 });
    }
    ideal.require_primary()?;
    let np = NewtonPolyhedron::new(ideal)?;
    let mut total: i128 = 0;
    for facet in np.facets() {
        let tight: Vec<Vec<i128>> = ideal
            .generators()
            .iter()
            .filter(|g| facet.value(g) == facet.level)
            .map(|g| g.entries().iter().map(|&e| e as i128).collect())
            .collect();
        total += match n {
            1 => tight[0][0],
            2 => {
                let lo = tight.iter().min_by_key(|p| p[0]).expect("nonempty");
                let hi = tight.iter().max_by_key(|p| p[0]).expect("nonempty");
                linalg::det(&[lo.clone(), hi.clone()]).abs()
            }
            _ => {
                let hull = convex_polygon_3d(&tight);
                (1..hull.len().saturating_sub(1))
                    .map(|i| {
                        linalg::det(&[hull[0].clone(), hull[i].clone(), hull[i + 1].clone()]).abs()
                    })
                    .sum()
            }
        };
    }
    Ok(total as u64)
}

/// Vertices, in cyclic order, of the convex hull of coplanar points lying on
/// a plane with all-positive normal (projection onto the first two
/// coordinates is injective and preserves convexity).
fn convex_polygon_3d(points: &[Vec<i128>]) -> Vec<Vec<i128>> {
    let mut pts: Vec<&Vec<i128>> = points.iter().collect();
    pts.sort_by(|a, b| (a[0], a[1]).cmp(&(b[0], b[1])));
    pts.dedup();
    if pts.len() < 3 {
        return pts.into_iter().cloned().collect();
    }
    let turn = |o: &Vec<i128>, a: &Vec<i128>, b: &Vec<i128>| {
        (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])
    };
    let mut lower: Vec<&Vec<i128>> = Vec::new();
    for p in &pts {
        while lower.len() >= 2 && turn(lower[lower.len() - 2], lower[lower.len() - 1], p) <= 0 {
            lower.pop();
        }
        lower.push(p);
    }
    let mut upper: Vec<&Vec<i128>> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 && turn(upper[upper.len() - 2], upper[upper.len() - 1], p) <= 0 {
            upper.pop();
        }
        upper.push(p);
    }
    lower.pop();
    upper.pop();
    lower.into_iter().chain(upper).cloned().collect()
}

/// Length of `A / closure(I^k)`: integer points of the orthant outside
/// `k·NP(I)`. Requires `I` primary.
pub fn colength_closure(ideal: &MonomialIdeal, k: u64) -> Result<u64> {
    let powers = ideal.require_primary()?;
    if k == 0 {
        return Ok(0);
    }
    let np = NewtonPolyhedron::new(ideal)?;
    let n = ideal.dim();
    let last = n - 1;
    let bounds: Vec<u64> = powers[..last].iter().map(|&p| k * p as u64).collect();
    let mut count: u64 = 0;
    let mut prefix = vec![0u64; last];
    loop {
        // For a fixed prefix, the excluded points are a_n < need.
        let mut need: i64 = 0;
        for f in np.facets() {
            let partial: u64 = prefix.iter().zip(&f.normal).map(|(a, w)| a * w).sum();
            let rhs = (k * f.level) as i64 - partial as i64;
            if rhs > 0 {
                need = need.max(crate::rational::ceil_div(rhs, f.normal[last] as i64));
            }
        }
        count += need as u64;
        let mut i = 0;
        loop {
            if i == last {
                return Ok(count);
            }
            if prefix[i] + 1 < bounds[i] {
                prefix[i] += 1;
                break;
            }
            prefix[i] = 0;
            i += 1;
        }
    }
}

/// Homogeneous inequality `Σ coeffs_i · x_i >= 0` over `(m_1, .., m_k, n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ConeInequality {
    pub coeffs: Vec<i64>,
}

impl ConeInequality {
    pub fn holds_at(&self, point: &[i64]) -> bool {
        self.coeffs.iter().zip(point).map(|(c, x)| c * x).sum::<i64>() >= 0
    }
}

/// The cone `{(m, n) >= 0 : closure(J_1^{m_1} ··· J_k^{m_k}) ⊆ closure(I^n)}`,
/// i.e. `n·v_w(I) <= Σ m_i v_w(J_i)` for every facet valuation `w` of `I`,
/// with redundant inequalities removed.
pub fn asymptotic_cone(js: &[MonomialIdeal], ideal: &MonomialIdeal) -> Result<Vec<ConeInequality>> {
    let radical = ideal.radical();
    for j in js {
        check_dim(ideal.dim(), j.dim())?;
        if !radical.contains_ideal(j)? {
            return Err(Error::ContainmentViolated);
        }
    }
    let np = NewtonPolyhedron::new(ideal)?;
    let mut rows: BTreeSet<ConeInequality> = BTreeSet::new();
    for facet in np.facets() {
        let mut coeffs: Vec<i64> = js.iter().map(|j| facet.order_of_ideal(j) as i64).collect();
        coeffs.push(-(facet.level as i64));
        let g = coeffs.iter().fold(0i64, |g, &c| g.gcd(&c));
        rows.insert(ConeInequality {
            coeffs: coeffs.iter().map(|c| c / g).collect(),
        });
    }
    let mut kept: Vec<ConeInequality> = rows.into_iter().collect();
    let mut i = 0;
    while i < kept.len() {
        if is_redundant(&kept, i) {
            kept.remove(i);
        } else {
            i += 1;
        }
    }
    Ok(kept)
}

/// Row `r` is implied by the others plus `x >= 0` iff `min r·x` over
/// `{others >= 0, x >= 0, Σx <= 1}` is nonnegative.
fn is_redundant(rows: &[ConeInequality], r: usize) -> bool {
    let width = rows[r].coeffs.len();
    let objective: Vec<Rational> = rows[r].coeffs.iter().map(|&c| int(-c)).collect();
    let mut a: Vec<Vec<Rational>> = rows
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != r)
        .map(|(_, s)| s.coeffs.iter().map(|&c| int(-c)).collect())
        .collect();
    let mut b: Vec<Rational> = vec![Rational::zero(); a.len()];
    a.push(vec![int(1); width]);
    b.push(int(1));
    match lp::maximize(&objective, &a, &b) {
        LpOutcome::Optimal { value, .. } => !value.is_positive(),
        LpOutcome::Unbounded => false,
    }
}
