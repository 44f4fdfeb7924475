//! The asymptotic order `nubar_I(f)` of a polynomial with respect to a
//! monomial ideal, its facet certificate, and the sequence `ν_I(f^k)/k`
//! that converges to it.
//!
//! ```text
//! cargo run --example nubar_order
//! ```

use nubar::order::oracle_sequence;
use nubar::polyhedra::{nubar, nubar_lp, NewtonPolyhedron};
use nubar::rational::rat;
use nubar::{ExponentVector, MonomialIdeal, PolynomialQ};

fn main() -> nubar::Result<()> {
    // I = (x^2, y^3), f = xy - y^2/2
    let ideal = MonomialIdeal::from_slices(&[&[2, 0], &[0, 3]]);
    let f = PolynomialQ::from_terms(
        2,
        [
            (rat(1, 1), ExponentVector::new(vec![1, 1])),
            (rat(-1, 2), ExponentVector::new(vec![0, 2])),
        ],
    )?;

    let np = NewtonPolyhedron::new(&ideal)?;
    for facet in np.facets() {
        println!("facet  normal {:?}  level {}", facet.normal, facet.level);
    }

    let result = nubar(&f, &ideal)?;
    println!("nubar = {}", result.value);
    println!(
        "  attained on facet {:?} by the term {:?}",
        result.certificate.normal,
        result.witness_term.entries()
    );
    println!("  LP value {}", nubar_lp(&f, &ideal)?);
    assert!(result.verify(&f, &np));

    let u = oracle_sequence(&f, &ideal, 12)?;
    let shown: Vec<String> = u.iter().map(|r| r.to_string()).collect();
    println!("nu(f^k)/k for k = 1..12: {}", shown.join(", "));
    Ok(())
}
