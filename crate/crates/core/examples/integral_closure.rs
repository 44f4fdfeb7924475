//! Integral and fractional closures of a monomial ideal, membership of
//! `f^q` in `closure(I^p)`, and an explicit dependence relation.

use nubar::closure::{dependence_certificate, is_integral};
use nubar::polyhedra::{closure, fractional_closure, universal_denominator};
use nubar::rational::int;
use nubar::{ExponentVector, MonomialIdeal, PolynomialQ};

fn main() -> nubar::Result<()> {
    let ideal = MonomialIdeal::from_slices(&[&[4, 0], &[0, 3]]);
    println!("closure of {:?}:", gens(&ideal));
    println!("  {:?}", gens(&closure(&ideal)?));

    for (p, q) in [(1, 2), (2, 3), (3, 2)] {
        println!("closure(I^{p})^(1/{q}) = {:?}", gens(&fractional_closure(&ideal, p, q)?));
    }
    println!("universal denominator {}", universal_denominator(&ideal)?);

    // nubar of x^2 y^2 is 2/4 + 2/3 = 7/6
    let f = PolynomialQ::monomial(int(1), ExponentVector::new(vec![2, 2]));
    for (p, q) in [(7, 6), (6, 5)] {
        println!("(x^2 y^2)^{q} in closure(I^{p}): {}", is_integral(&f, &ideal, p, q)?);
    }
    let cert = dependence_certificate(&f, &ideal, 7, 6, 16)?;
    println!("dependence with m = {}: {}", cert.m, cert.relation);
    assert!(cert.verify(&ideal)?);
    Ok(())
}

fn gens(ideal: &MonomialIdeal) -> Vec<Vec<u32>> {
    ideal.generators().iter().map(|g| g.entries().to_vec()).collect()
}
