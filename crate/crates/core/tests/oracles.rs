//! Library results against independent brute-force computations.

mod common;

use common::{ideal, mono, suite_ideals};
use nubar::order::{oracle_sequence, PowerSearch};
use nubar::polygon::{toric_polygon, ElementaryPolygon, NewtonPolygonSum};
use nubar::polyhedra::{
    closure, colength_closure, multiplicity, nubar, nubar_monomial_lp, universal_denominator,
};
use nubar::rational::int;
use nubar::{Extended, ExponentVector};
use proptest::prelude::*;

/// Every exponent vector in `[0, bound)^n`.
fn box_points(n: usize, bound: u32) -> Vec<ExponentVector> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|p: Vec<u32>| {
                (0..bound).map(move |v| {
                    let mut q = p.clone();
                    q.push(v);
                    q
                })
            })
            .collect();
    }
    out.into_iter().map(ExponentVector::new).collect()
}

#[test]
fn colength_matches_monomial_count_of_closed_power() {
    for id in suite_ideals() {
        let n = id.dim();
        let ks: &[u32] = if n == 2 { &[1, 2, 3] } else { &[1, 2] };
        for &k in ks {
            let closed = closure(&id.power(k).unwrap()).unwrap();
            let bound = id.max_exponents().into_iter().max().unwrap() * k + 1;
            let count = box_points(n, bound)
                .iter()
                .filter(|a| !closed.contains_monomial(a))
                .count() as u64;
            assert_eq!(colength_closure(&id, k as u64).unwrap(), count, "{id:?} k={k}");
        }
    }
}

#[test]
fn closure_matches_lp_membership() {
    for id in suite_ideals() {
        let n = id.dim();
        let c = closure(&id).unwrap();
        let bound = id.max_exponents().into_iter().max().unwrap() + 1;
        for a in box_points(n, bound) {
            let lp = nubar_monomial_lp(&a, &id).unwrap() >= int(1);
            assert_eq!(c.contains_monomial(&a), lp, "{id:?} {a:?}");
        }
    }
}

/// Along multiples of the universal denominator `D`, the colength is a
/// polynomial in `t = k/D` of degree `n` with leading coefficient
/// `e(I)·D^n/n!`, so its `n`-th finite difference is `e(I)·D^n`.
#[test]
fn multiplicity_matches_ehrhart_leading_term() {
    let mut checked = 0;
    for id in suite_ideals() {
        let n = id.dim();
        let d = universal_denominator(&id).unwrap();
        if d > 30 {
            continue;
        }
        let values: Vec<i128> = (0..=n as u64)
            .map(|t| colength_closure(&id, d * (t + 1)).unwrap() as i128)
            .collect();
        let mut diff = values;
        for _ in 0..n {
            diff = diff.windows(2).map(|w| w[1] - w[0]).collect();
        }
        let e = multiplicity(&id).unwrap() as i128;
        assert_eq!(diff[0], e * (d as i128).pow(n as u32), "{id:?}");
        checked += 1;
    }
    assert!(checked >= 20, "only {checked} ideals checked");
}

#[test]
fn multiplicity_of_pure_power_ideals_is_the_product() {
    for (a, b, c) in [(1, 1, 1), (2, 3, 4), (1, 5, 2), (3, 3, 3)] {
        let id = ideal(&[&[a, 0, 0], &[0, b, 0], &[0, 0, c]]);
        assert_eq!(multiplicity(&id).unwrap(), (a * b * c) as u64);
        let id2 = ideal(&[&[a, 0], &[0, b]]);
        assert_eq!(multiplicity(&id2).unwrap(), (a * b) as u64);
    }
}

/// For a monomial, `ν(x^{ka})/k` reaches `nubar` exactly once `k` clears the
/// denominators of an optimal vertex of the LP; twice the universal
/// denominator is enough on these ideals.
#[test]
fn monomial_limit_is_attained_exactly() {
    for id in suite_ideals().into_iter().take(18) {
        for a in box_points(2, 5).into_iter().filter(|a| !a.is_zero()) {
            let f = mono(a.entries());
            let nb = nubar(&f, &id).unwrap().value;
            let max_k = 2 * universal_denominator(&id).unwrap() as u32;
            let u = oracle_sequence(&f, &id, max_k).unwrap();
            assert!(u.iter().all(|x| *x <= nb));
            assert!(u.contains(&nb), "{id:?} {a:?}: {nb} not reached by k <= {max_k}");
        }
    }
}

#[test]
fn max_power_matches_exhaustive_search() {
    // ν(x^a) by enumerating generator multisets directly.
    fn brute(gens: &[ExponentVector], a: &ExponentVector, k: u32) -> bool {
        if k == 0 {
            return true;
        }
        gens.iter().any(|g| a.dominates(g) && brute(gens, &a.sub(g), k - 1))
    }
    for id in suite_ideals().into_iter().take(18) {
        let mut search = PowerSearch::new(&id);
        for a in box_points(2, 9) {
            let nu = search.max_power(&a) as u32;
            assert!(brute(id.generators(), &a, nu), "{id:?} {a:?}");
            assert!(!brute(id.generators(), &a, nu + 1), "{id:?} {a:?}");
        }
    }
}

/// Degree function of `(x, y)^a` on `g = x^c y^d`: the length of
/// `A/((x,y)^{ka} + (g))` grows like `k·a(c+d)`.
#[test]
fn vertical_projection_matches_lattice_count() {
    fn length(a: u32, c: u32, d: u32, k: u32) -> u64 {
        let mut count = 0;
        for i in 0..k * a {
            for j in 0..k * a - i {
                if !(i >= c && j >= d) {
                    count += 1;
                }
            }
        }
        count
    }
    for (a, c, d) in [(1, 1, 0), (2, 1, 1), (3, 2, 0), (2, 0, 3), (4, 1, 2)] {
        let m = ideal(&[&[1, 0], &[0, 1]]).power(a).unwrap();
        let growth = length(a, c, d, 31) - length(a, c, d, 30);
        let poly = toric_polygon(&m, &mono(&[c, d])).unwrap();
        assert_eq!(poly.projections().1, Extended::Finite(growth), "a={a} c={c} d={d}");
        assert_eq!(growth, (a * (c + d)) as u64);
    }
}

/// Lower-left boundary of `conv(points) + R²_{>=0}`, from the top-left vertex
/// down to the bottom-right one.
fn staircase_hull(points: &[(i64, i64)]) -> Vec<(u64, u64)> {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    let mut hull: Vec<(i64, i64)> = Vec::new();
    for &p in &pts {
        // keep only points strictly below everything so far
        if hull.last().is_some_and(|q| p.1 >= q.1) {
            continue;
        }
        while hull.len() >= 2 {
            let (o, a) = (hull[hull.len() - 2], hull[hull.len() - 1]);
            let cross = (a.0 - o.0) * (p.1 - o.1) - (a.1 - o.1) * (p.0 - o.0);
            if cross <= 0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    hull.into_iter().map(|(x, y)| (x as u64, y as u64)).collect()
}

fn finite_part() -> impl Strategy<Value = (u64, ElementaryPolygon)> {
    (1u64..=3, 0u64..=5, 0u64..=5)
        .prop_filter("nonzero", |(_, l, h)| l + h > 0)
        .prop_map(|(m, l, h)| (m, ElementaryPolygon::finite(l, h).unwrap()))
}

fn ray_part() -> impl Strategy<Value = (u64, ElementaryPolygon)> {
    (1u64..=2, 1u64..=5, any::<bool>()).prop_map(|(m, v, horizontal)| {
        let part = if horizontal {
            ElementaryPolygon::new(Extended::Finite(v), Extended::Infinity)
        } else {
            ElementaryPolygon::new(Extended::Infinity, Extended::Finite(v))
        };
        (m, part.unwrap())
    })
}

fn polygon() -> impl Strategy<Value = Vec<(u64, ElementaryPolygon)>> {
    (
        prop::collection::vec(finite_part(), 0..=3),
        prop::collection::vec(ray_part(), 0..=1),
    )
        .prop_map(|(mut a, b)| {
            a.extend(b);
            a
        })
}

fn vertex_set(parts: &[(u64, ElementaryPolygon)]) -> Vec<(i64, i64)> {
    // Minkowski sum of the pieces' vertex sets; rays only translate.
    let mut pts = vec![(0i64, 0i64)];
    for (m, p) in parts {
        for _ in 0..*m {
            let pieces: Vec<(i64, i64)> = match (p.width(), p.height()) {
                (Extended::Finite(l), Extended::Finite(h)) => vec![(0, *h as i64), (*l as i64, 0)],
                (Extended::Finite(l), Extended::Infinity) => vec![(*l as i64, 0)],
                (Extended::Infinity, Extended::Finite(h)) => vec![(0, *h as i64)],
                _ => unreachable!(),
            };
            pts = pts
                .iter()
                .flat_map(|a| pieces.iter().map(move |b| (a.0 + b.0, a.1 + b.1)))
                .collect();
            pts.sort();
            pts.dedup();
        }
    }
    pts
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn minkowski_sum_matches_pairwise_hull(a in polygon(), b in polygon()) {
        let pa = NewtonPolygonSum::from_parts(a.clone());
        let pb = NewtonPolygonSum::from_parts(b.clone());
        let sum = pa.minkowski_add(&pb);
        let mut both = a.clone();
        both.extend(b.clone());
        prop_assert_eq!(sum.vertices(), staircase_hull(&vertex_set(&both)));
        // projections are additive
        let (h1, v1) = pa.projections();
        let (h2, v2) = pb.projections();
        prop_assert_eq!(sum.projections(), (h1 + h2, v1 + v2));
    }

    #[test]
    fn canonical_form_depends_only_on_the_region(a in polygon()) {
        let p = NewtonPolygonSum::from_parts(a.clone());
        let mut reversed = a.clone();
        reversed.reverse();
        prop_assert_eq!(&p, &NewtonPolygonSum::from_parts(reversed));
        prop_assert_eq!(p.vertices(), staircase_hull(&vertex_set(&a)));
    }
}

#[test]
fn toric_polygon_of_each_suite_ideal_has_projection_e() {
    for id in suite_ideals().into_iter().filter(|i| i.dim() == 2) {
        let e = multiplicity(&id).unwrap();
        for g in [mono(&[1, 0]), mono(&[1, 1]), mono(&[0, 3])] {
            let poly = toric_polygon(&id, &g).unwrap();
            assert_eq!(poly.projections().0, Extended::Finite(e));
            assert_eq!(poly.last_side_slope().unwrap(), nubar(&g, &id).unwrap().value);
        }
    }
}

