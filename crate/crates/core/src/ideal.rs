//! Monomials, exact polynomials over Q and monomial ideals.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{check_dim, Error, Result};
use crate::rational::{format_rational, Rational};

/// Exponent vector of a monomial `x^a`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(entries: Vec<u32>) -> Self {
        ExponentVector(entries)
    }

    pub fn zero(dim: usize) -> Self {
        ExponentVector(vec![0; dim])
    }

    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = vec![0; dim];
        v[i] = 1;
        ExponentVector(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Componentwise `self >= other`, i.e. `x^other` divides `x^self`.
    pub fn dominates(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a >= b)
    }

    pub fn add(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self - other`; caller guarantees `self.dominates(other)`.
    pub fn sub(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: u32) -> ExponentVector {
        ExponentVector(self.0.iter().map(|a| a * k).collect())
    }

    pub fn dot(&self, w: &[u64]) -> u64 {
        self.0.iter().zip(w).map(|(&a, &b)| a as u64 * b).sum()
    }

    /// 0/1 vector of the variables that occur.
    pub fn support(&self) -> ExponentVector {
        ExponentVector(self.0.iter().map(|&a| u32::from(a > 0)).collect())
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(v)
    }
}

impl<const N: usize> From<[u32; N]> for ExponentVector {
    fn from(v: [u32; N]) -> Self {
        ExponentVector(v.to_vec())
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// Polynomial with exact rational coefficients in `dim` variables.
///
/// Zero coefficients are never stored; the zero polynomial has no terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolynomialQ {
    dim: usize,
    terms: BTreeMap<ExponentVector, Rational>,
}

impl PolynomialQ {
    pub fn zero(dim: usize) -> Self {
        PolynomialQ {
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(dim: usize) -> Self {
        Self::monomial(Rational::one(), ExponentVector::zero(dim))
    }

    pub fn monomial(coeff: Rational, exp: ExponentVector) -> Self {
        let dim = exp.dim();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(exp, coeff);
        }
        PolynomialQ { dim, terms }
    }

    /// Builds a polynomial, summing coefficients of repeated exponents and
    /// dropping zeros.
    pub fn from_terms(
        dim: usize,
        terms: impl IntoIterator<Item = (Rational, ExponentVector)>,
    ) -> Result<Self> {
        let mut p = PolynomialQ::zero(dim);
        for (c, e) in terms {
            check_dim(dim, e.dim())?;
            p.add_term(c, e);
        }
        Ok(p)
    }

    fn add_term(&mut self, c: Rational, e: ExponentVector) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExponentVector, &Rational)> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &ExponentVector> {
        self.terms.keys()
    }

    pub fn coefficient(&self, e: &ExponentVector) -> Option<&Rational> {
        self.terms.get(e)
    }

    /// Exponent of the single term of a monomial.
    pub fn as_monomial(&self) -> Option<&ExponentVector> {
        if self.is_monomial() {
            self.terms.keys().next()
        } else {
            None
        }
    }

    pub fn total_degree(&self) -> u64 {
        self.terms.keys().map(|e| e.degree()).max().unwrap_or(0)
    }

    pub fn add(&self, other: &PolynomialQ) -> Result<PolynomialQ> {
        check_dim(self.dim, other.dim)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(c.clone(), e.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> PolynomialQ {
        PolynomialQ {
            dim: self.dim,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &PolynomialQ) -> Result<PolynomialQ> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &PolynomialQ) -> Result<PolynomialQ> {
        check_dim(self.dim, other.dim)?;
        let mut out = PolynomialQ::zero(self.dim);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                out.add_term(ca * cb, ea.add(eb));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> PolynomialQ {
        let mut acc = PolynomialQ::one(self.dim);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base).expect("same dimension");
            }
            k >>= 1;
            if k > 0 {
                base = base.mul(&base).expect("same dimension");
            }
        }
        acc
    }

    pub fn eval_f64(&self, x: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|(e, c)| {
                let mono: f64 = e
                    .entries()
                    .iter()
                    .zip(x)
                    .map(|(&a, &xi)| xi.powi(a as i32))
                    .product();
                crate::rational::to_f64(c) * mono
            })
            .sum()
    }
}

impl fmt::Display for PolynomialQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{}*x^{}", format_rational(c), e)?;
        }
        Ok(())
    }
}

/// Monomial ideal given by its minimal generators.
///
/// Generators form an antichain under componentwise order, are sorted by
/// (total degree, lexicographic), and never include the zero vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    dim: usize,
    generators: Vec<ExponentVector>,
}

impl MonomialIdeal {
    /// Reduces `generators` to the minimal ones.
    pub fn normalize(dim: usize, generators: impl IntoIterator<Item = ExponentVector>) -> Result<Self> {
        let mut gens: Vec<ExponentVector> = Vec::new();
        for g in generators {
            check_dim(dim, g.dim())?;
            if g.is_zero() {
                return Err(Error::UnitIdeal);
            }
            gens.push(g);
        }
        if gens.is_empty() {
            return Err(Error::EmptyGeneratorSet);
        }
        Ok(MonomialIdeal {
            dim,
            generators: minimal_elements(gens),
        })
    }

    /// Shorthand for tests and examples: panics on invalid input.
    pub fn from_slices(gens: &[&[u32]]) -> Self {
        let dim = gens.first().map(|g| g.len()).unwrap_or(0);
        Self::normalize(dim, gens.iter().map(|g| ExponentVector::new(g.to_vec())))
            .expect("valid monomial ideal")
    }

    /// The maximal ideal `(x_1, ..., x_n)`.
    pub fn maximal(dim: usize) -> Self {
        Self::normalize(dim, (0..dim).map(|i| ExponentVector::unit(dim, i))).expect("dim >= 1")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[ExponentVector] {
        &self.generators
    }

    /// Componentwise maximum of the generators.
    pub fn max_exponents(&self) -> Vec<u32> {
        let mut m = vec![0; self.dim];
        for g in &self.generators {
            for (mi, &gi) in m.iter_mut().zip(g.entries()) {
                *mi = (*mi).max(gi);
            }
        }
        m
    }

    pub fn contains_monomial(&self, a: &ExponentVector) -> bool {
        self.generators.iter().any(|g| a.dominates(g))
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &MonomialIdeal) -> Result<bool> {
        check_dim(self.dim, other.dim)?;
        Ok(other.generators.iter().all(|g| self.contains_monomial(g)))
    }

    pub fn product(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_dim(self.dim, other.dim)?;
        let gens = self
            .generators
            .iter()
            .flat_map(|a| other.generators.iter().map(move |b| a.add(b)));
        MonomialIdeal::normalize(self.dim, gens)
    }

    pub fn power(&self, k: u32) -> Result<MonomialIdeal> {
        if k == 0 {
            return Err(Error::InvalidArgument("power exponent must be >= 1".into()));
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.product(self)?;
        }
        Ok(acc)
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        check_dim(self.dim, other.dim)?;
        MonomialIdeal::normalize(
            self.dim,
            self.generators.iter().chain(&other.generators).cloned(),
        )
    }

    /// Radical: the ideal generated by the supports of the generators.
    pub fn radical(&self) -> MonomialIdeal {
        MonomialIdeal::normalize(self.dim, self.generators.iter().map(|g| g.support()))
            .expect("supports of nonzero vectors are nonzero")
    }

    /// For each variable, the exponent of a pure-power generator `x_i^a`, if any.
    pub fn pure_powers(&self) -> Vec<Option<u32>> {
        (0..self.dim)
            .map(|i| {
                self.generators
                    .iter()
                    .filter(|g| g.entries().iter().enumerate().all(|(j, &e)| j == i || e == 0))
                    .map(|g| g.entries()[i])
                    .min()
            })
            .collect()
    }

    /// Primary for the maximal ideal, i.e. of finite colength: every axis
    /// carries a pure-power generator.
    pub fn is_primary(&self) -> bool {
        self.pure_powers().iter().all(Option::is_some)
    }

    pub fn require_primary(&self) -> Result<Vec<u32>> {
        self.pure_powers()
            .into_iter()
            .collect::<Option<Vec<u32>>>()
            .ok_or(Error::NotPrimary)
    }

    pub fn as_polynomials(&self) -> Vec<PolynomialQ> {
        self.generators
            .iter()
            .map(|g| PolynomialQ::monomial(Rational::one(), g.clone()))
            .collect()
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, g) in self.generators.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "x^{g}")?;
        }
        write!(f, ")")
    }
}

/// Minimal elements under componentwise order, deduplicated and sorted by
/// (degree, lex).
pub fn minimal_elements(mut points: Vec<ExponentVector>) -> Vec<ExponentVector> {
    points.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    points.dedup();
    let mut kept: Vec<ExponentVector> = Vec::with_capacity(points.len());
    // A dominating element has degree >= the dominated one, so scanning in
    // degree order only needs to look back.
    for p in points {
        if !kept.iter().any(|k| p.dominates(k)) {
            kept.push(p);
        }
    }
    kept
}
