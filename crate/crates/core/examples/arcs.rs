//! Arc lower bound: `v(f∘h)/v(I∘h) >= nubar_I(f)` for every arc `h`, with
//! equality on the arc built from the certificate facet.

use nubar::arcs::{
    achieving_arc, arc_infimum_check, compose, random_monomial_arcs, Arc, TruncatedSeries,
    DEFAULT_TRUNCATION,
};
use nubar::polyhedra::nubar;
use nubar::rational::{int, rat};
use nubar::{ExponentVector, MonomialIdeal, PolynomialQ};

fn main() -> nubar::Result<()> {
    let ideal = MonomialIdeal::from_slices(&[&[2, 0], &[0, 3]]);
    // f = y^2 - x^3 vanishes on the cusp
    let f = PolynomialQ::from_terms(
        2,
        [
            (int(1), ExponentVector::new(vec![0, 2])),
            (int(-1), ExponentVector::new(vec![3, 0])),
        ],
    )?;
    let nb = nubar(&f, &ideal)?;
    println!("nubar = {}", nb.value);

    let arc = achieving_arc(&f, &ideal, &nb, DEFAULT_TRUNCATION)?;
    println!(
        "certificate arc: weights {:?}, coefficients {:?}; orders {} / {}",
        arc.weights,
        arc.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        arc.f_order,
        arc.ideal_order
    );

    // The cusp parametrization itself kills f.
    let cusp = Arc::new(vec![
        TruncatedSeries::monomial(int(1), 2, 32),
        TruncatedSeries::monomial(int(1), 3, 32),
    ])?;
    println!("f(t^2, t^3) = {:?}", compose(&f, &cusp)?.order());
    let perturbed = Arc::new(vec![
        TruncatedSeries::monomial(int(1), 2, 32),
        TruncatedSeries::from_coeffs([(3, int(1)), (4, rat(1, 2))], 32),
    ])?;
    println!("f(t^2, t^3 + t^4/2) has order {:?}", compose(&f, &perturbed)?.order());

    let arcs = random_monomial_arcs(2, 50, 0, DEFAULT_TRUNCATION);
    let report = arc_infimum_check(&f, &ideal, &arcs)?;
    println!(
        "50 random arcs: min ratio {:?}, violations {}, indeterminate {}, attained {}",
        report.min_ratio.map(|r| r.to_string()),
        report.violations,
        report.indeterminate,
        report.attained
    );
    Ok(())
}
