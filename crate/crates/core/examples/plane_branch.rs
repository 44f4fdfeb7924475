//! Invariants of a plane branch from its Puiseux characteristic: value
//! semigroup, δ, conductor, double-point polygon and closures of `m^k`.

use nubar::branch::{
    closure_power_of_m, double_point_polygon, graded_degrees, invariants, CharSequence,
};

fn main() -> nubar::Result<()> {
    for beta in [vec![2, 3], vec![4, 6, 7], vec![6, 9, 19]] {
        let c = CharSequence::new(beta.clone())?;
        let inv = invariants(&c);
        println!("beta {beta:?}");
        println!("  semigroup generators {:?}", inv.semigroup_generators);
        println!(
            "  delta {} (formula {}), conductor {}, symmetric {}",
            inv.delta,
            inv.delta_formula,
            inv.conductor,
            inv.is_symmetric()
        );
        let poly = double_point_polygon(&c)?;
        println!(
            "  double-point polygon {:?}, slope {}",
            poly.describe(),
            poly.last_side_slope()?
        );
        let cp = closure_power_of_m(&c, 2);
        println!("  closure(m^2): orders >= {}, starting {:?}", cp.threshold, cp.members);
        let degrees: Vec<String> = graded_degrees(&c)
            .generator_degrees
            .iter()
            .map(|d| d.to_string())
            .collect();
        println!("  generator degrees {}", degrees.join(", "));
    }
    Ok(())
}
