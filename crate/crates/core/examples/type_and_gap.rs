//! The type `T(I) = 1/nubar_I(√I)` and the observed gap between `nubar_I`
//! and `ν_I` on monomials.

use nubar::closure::{izumi_gap_scan, type_of_ideal};
use nubar::MonomialIdeal;

fn main() -> nubar::Result<()> {
    for ideal in [
        MonomialIdeal::from_slices(&[&[2, 0], &[0, 3]]),
        MonomialIdeal::from_slices(&[&[4, 0], &[1, 2], &[0, 5]]),
        MonomialIdeal::from_slices(&[&[2, 0, 0], &[0, 2, 0], &[0, 0, 2], &[1, 1, 1]]),
    ] {
        let t = type_of_ideal(&ideal)?;
        let gap = izumi_gap_scan(&ideal, 10)?;
        println!(
            "{:?}",
            ideal.generators().iter().map(|g| g.entries().to_vec()).collect::<Vec<_>>()
        );
        println!("  type {} (inclusions for m = 1..4: {:?})", t.value, t.inclusions);
        println!(
            "  largest gap {} at {:?}; stabilized {}",
            gap.observed_gap,
            gap.argmax.entries(),
            gap.stabilized
        );
    }
    Ok(())
}
