//! Newton polygons as sums of elementary polygons `{ℓ/h}`, and the toric
//! polygon `N_I(g)` whose last side slope is `nubar_I(g)`.

use nubar::polygon::{toric_polygon, ElementaryPolygon, NewtonPolygonSum};
use nubar::polyhedra::{multiplicity, nubar};
use nubar::rational::int;
use nubar::{Extended, ExponentVector, MonomialIdeal, PolynomialQ};

fn main() -> nubar::Result<()> {
    let a = NewtonPolygonSum::single(1, ElementaryPolygon::finite(2, 1)?);
    let b = NewtonPolygonSum::from_parts([
        (2, ElementaryPolygon::finite(1, 3)?),
        (1, ElementaryPolygon::new(Extended::Finite(2), Extended::Infinity)?),
    ]);
    let sum = a.minkowski_add(&b);
    println!("parts    {:?}", sum.describe());
    println!("vertices {:?}", sum.vertices());
    println!("projections {:?}", sum.projections());
    println!("last side slope {}", sum.last_side_slope()?);

    let ideal = MonomialIdeal::from_slices(&[&[4, 0], &[1, 2], &[0, 5]]);
    for exp in [[1, 0], [1, 1], [0, 2]] {
        let g = PolynomialQ::monomial(int(1), ExponentVector::new(exp.to_vec()));
        let poly = toric_polygon(&ideal, &g)?;
        println!(
            "g = x^{} y^{}: {:?}; slope {} = nubar {}; horizontal {:?} = e(I) {}",
            exp[0],
            exp[1],
            poly.describe(),
            poly.last_side_slope()?,
            nubar(&g, &ideal)?.value,
            poly.projections().0,
            multiplicity(&ideal)?
        );
    }
    Ok(())
}
