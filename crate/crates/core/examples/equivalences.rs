//! Five independent decisions of `f^q ∈ closure(I^p)`: Newton polyhedron,
//! LP, facet arcs, dependence relations and numeric inequality.

use nubar::closure::{verify_equivalences, NumericOptions};
use nubar::rational::int;
use nubar::{ExponentVector, MonomialIdeal, PolynomialQ};

fn main() -> nubar::Result<()> {
    let ideal = MonomialIdeal::from_slices(&[&[2, 0], &[0, 3]]);
    let f = PolynomialQ::from_terms(
        2,
        [
            (int(1), ExponentVector::new(vec![1, 1])),
            (int(2), ExponentVector::new(vec![0, 3])),
        ],
    )?;
    for (p, q) in [(5, 6), (1, 1), (1, 2)] {
        let r = verify_equivalences(&f, &ideal, p, q, NumericOptions::default())?;
        println!(
            "p/q = {p}/{q}: newton {} lp {} arcs {:?} dependence {:?} numeric {:?} -> consistent {}",
            r.newton_membership, r.lp_bound, r.facet_arcs, r.dependence, r.numeric, r.consistent
        );
        if let Some(w) = &r.facet_witness {
            println!("  separated by the facet {:?}", w.normal);
        }
    }
    Ok(())
}
