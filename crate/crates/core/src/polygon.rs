//! The monoid of Newton polygons under Minkowski addition.
//!
//! `{ℓ/h̄}` is the elementary polygon with vertices `(0,h)` and `(ℓ,0)`: the
//! boundary of `conv(((0,h) + R²₊) ∪ ((ℓ,0) + R²₊))`. With `h = ∞` it is the
//! orthant translated to `(ℓ,0)`, with `ℓ = ∞` the orthant translated to
//! `(0,h)`; the neutral element is the orthant itself.

use num_bigint::BigInt;
use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::{MonomialIdeal, PolynomialQ};
use crate::polyhedra::NewtonPolyhedron;
use crate::rational::{Extended, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementaryPolygon {
    width: Extended<u64>,
    height: Extended<u64>,
}

/// Ordering class of a part: steeper parts come first.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
enum SlopeClass {
    VerticalRay,
    Finite(std::cmp::Reverse<Extended<Rational>>),
    HorizontalRay,
}

impl ElementaryPolygon {
    pub fn new(width: Extended<u64>, height: Extended<u64>) -> Result<Self> {
        match (&width, &height) {
            (Extended::Finite(0), Extended::Finite(0)) | (Extended::Infinity, Extended::Infinity) => {
                Err(Error::InvalidPolygon)
            }
            _ => Ok(ElementaryPolygon { width, height }),
        }
    }

    /// `{ℓ/h̄}` with finite data.
    pub fn finite(width: u64, height: u64) -> Result<Self> {
        Self::new(Extended::Finite(width), Extended::Finite(height))
    }

    pub fn width(&self) -> &Extended<u64> {
        &self.width
    }

    pub fn height(&self) -> &Extended<u64> {
        &self.height
    }

    /// Absolute slope `h/ℓ` of the compact side; infinite for `ℓ = 0`.
    pub fn slope(&self) -> Option<Extended<Rational>> {
        match (&self.width, &self.height) {
            (Extended::Finite(0), Extended::Finite(_)) => Some(Extended::Infinity),
            (Extended::Finite(l), Extended::Finite(h)) => {
                Some(Extended::Finite(Rational::new(BigInt::from(*h), BigInt::from(*l))))
            }
            _ => None,
        }
    }

    fn class(&self) -> SlopeClass {
        match (&self.width, &self.height) {
            (_, Extended::Infinity) => SlopeClass::VerticalRay,
            (Extended::Infinity, _) => SlopeClass::HorizontalRay,
            _ => SlopeClass::Finite(std::cmp::Reverse(self.slope().expect("finite part"))),
        }
    }
}

/// Formal sum `Σ m_i·{ℓ_i/h̄_i}` in canonical form.
///
/// Parts are grouped by slope class and sorted steepest first (vertical rays,
/// then finite slopes decreasing, then horizontal rays). Inside a class,
/// copies of one shape add their multiplicities; a class holding several
/// shapes is replaced by `g·{ℓ/g / h̄/g}` where `(ℓ, h)` is the class total and
/// `g = gcd(ℓ, h)`, which has the same Minkowski sum.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct NewtonPolygonSum {
    parts: Vec<(u64, ElementaryPolygon)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PolygonPart {
    pub mult: u64,
    pub l: Extended<u64>,
    pub h: Extended<u64>,
}

impl NewtonPolygonSum {
    /// The neutral element.
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn single(mult: u64, part: ElementaryPolygon) -> Self {
        Self::from_parts([(mult, part)])
    }

    pub fn from_parts(parts: impl IntoIterator<Item = (u64, ElementaryPolygon)>) -> Self {
        let mut raw: Vec<(u64, ElementaryPolygon)> = parts.into_iter().filter(|(m, _)| *m > 0).collect();
        raw.sort_by(|a, b| a.1.class().cmp(&b.1.class()).then_with(|| a.1.cmp(&b.1)));
        let mut parts = Vec::new();
        let mut i = 0;
        while i < raw.len() {
            let class = raw[i].1.class();
            let mut j = i;
            while j < raw.len() && raw[j].1.class() == class {
                j += 1;
            }
            parts.extend(merge_class(&raw[i..j]));
            i = j;
        }
        NewtonPolygonSum { parts }
    }

    pub fn parts(&self) -> &[(u64, ElementaryPolygon)] {
        &self.parts
    }

    pub fn is_identity(&self) -> bool {
        self.vertices() == vec![(0, 0)]
    }

    /// Minkowski sum.
    pub fn minkowski_add(&self, other: &NewtonPolygonSum) -> NewtonPolygonSum {
        Self::from_parts(self.parts.iter().chain(&other.parts).cloned())
    }

    /// `(Σ m·ℓ, Σ m·h)`: lengths of the projections on the axes.
    pub fn projections(&self) -> (Extended<u64>, Extended<u64>) {
        let mut horizontal = Extended::Finite(0);
        let mut vertical = Extended::Finite(0);
        for (m, p) in &self.parts {
            horizontal = horizontal + p.width.clone().map(|w| w * m);
            vertical = vertical + p.height.clone().map(|h| h * m);
        }
        (horizontal, vertical)
    }

    /// Absolute slope of the most horizontal side with finite data.
    pub fn last_side_slope(&self) -> Result<Rational> {
        self.parts
            .iter()
            .filter_map(|(_, p)| match (&p.width, &p.height) {
                (Extended::Finite(l), Extended::Finite(h)) if *l > 0 => {
                    Some(Rational::new(BigInt::from(*h), BigInt::from(*l)))
                }
                _ => None,
            })
            .min()
            .ok_or(Error::NoCompactSide)
    }

    /// Vertices of the boundary, from the vertical ray down to the
    /// horizontal one.
    pub fn vertices(&self) -> Vec<(u64, u64)> {
        let mut shift = (0u64, 0u64);
        let mut sides: Vec<(u64, u64)> = Vec::new();
        for (m, p) in &self.parts {
            match (&p.width, &p.height) {
                (Extended::Finite(l), Extended::Infinity) => shift.0 += m * l,
                (Extended::Infinity, Extended::Finite(h)) => shift.1 += m * h,
                (Extended::Finite(l), Extended::Finite(h)) if *l > 0 && *h > 0 => sides.push((m * l, m * h)),
                _ => {}
            }
        }
        let total_h: u64 = sides.iter().map(|s| s.1).sum();
        let mut cur = (shift.0, shift.1 + total_h);
        let mut out = vec![cur];
        for (dl, dh) in sides {
            cur = (cur.0 + dl, cur.1 - dh);
            out.push(cur);
        }
        out
    }

    pub fn describe(&self) -> Vec<PolygonPart> {
        self.parts
            .iter()
            .map(|(m, p)| PolygonPart {
                mult: *m,
                l: p.width.clone(),
                h: p.height.clone(),
            })
            .collect()
    }
}

fn merge_class(parts: &[(u64, ElementaryPolygon)]) -> Vec<(u64, ElementaryPolygon)> {
    let first = &parts[0].1;
    if parts.iter().all(|(_, p)| p == first) {
        return vec![(parts.iter().map(|(m, _)| m).sum(), first.clone())];
    }
    let sum = |get: fn(&ElementaryPolygon) -> &Extended<u64>| -> Extended<u64> {
        parts
            .iter()
            .fold(Extended::Finite(0), |acc, (m, p)| acc + get(p).clone().map(|v| v * m))
    };
    let (w, h) = (sum(ElementaryPolygon::width), sum(ElementaryPolygon::height));
    let scaled = |g: u64, w: Extended<u64>, h: Extended<u64>| {
        let part = ElementaryPolygon::new(w.map(|v| v / g), h.map(|v| v / g)).expect("nonzero total");
        vec![(g, part)]
    };
    match (w.clone(), h.clone()) {
        (Extended::Finite(a), Extended::Finite(b)) => scaled(a.gcd(&b), w, h),
        (Extended::Finite(a), Extended::Infinity) | (Extended::Infinity, Extended::Finite(a)) => {
            // a ray class; distinct shapes means some finite entry is positive
            scaled(a, w, h)
        }
        (Extended::Infinity, Extended::Infinity) => unreachable!("classes never mix both rays"),
    }
}

/// `N_I(g) = Σ_k deg(D_k)·{v_k(I) / v_k(g)̄}` over the facets of `NP(I)`.
pub fn toric_polygon(ideal: &MonomialIdeal, g: &PolynomialQ) -> Result<NewtonPolygonSum> {
    if ideal.dim() != 2 {
        return Err(Error::PolygonUnsupportedDimension { dim: ideal.dim() });
    }
    ideal.require_primary()?;
    crate::error::check_dim(2, g.dim())?;
    if g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let np = NewtonPolyhedron::new(ideal)?;
    let mut parts = Vec::new();
    for facet in np.facets() {
        let degree = facet.lattice_degree()?;
        let vg = facet.order_of(g).expect("nonzero polynomial");
        parts.push((degree, ElementaryPolygon::finite(facet.level, vg)?));
    }
    Ok(NewtonPolygonSum::from_parts(parts))
}
