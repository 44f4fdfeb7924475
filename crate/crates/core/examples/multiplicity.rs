//! Samuel multiplicity of a primary monomial ideal and the colengths of the
//! closed powers, whose growth recovers it.

use nubar::polyhedra::{closure, colength_closure, multiplicity};
use nubar::MonomialIdeal;

fn main() -> nubar::Result<()> {
    let ideals = [
        MonomialIdeal::from_slices(&[&[2, 0], &[0, 3]]),
        MonomialIdeal::from_slices(&[&[5, 0], &[3, 1], &[1, 3], &[0, 5]]),
        MonomialIdeal::from_slices(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 4]]),
    ];
    for ideal in &ideals {
        let n = ideal.dim() as i32;
        let e = multiplicity(ideal)?;
        println!("{:?}", ideal.generators().iter().map(|g| g.entries().to_vec()).collect::<Vec<_>>());
        println!("  e(I) = {e}, e(closure(I)) = {}", multiplicity(&closure(ideal)?)?);
        let fact: f64 = (1..=n).map(f64::from).product();
        for k in [1u64, 5, 10, 20] {
            let len = colength_closure(ideal, k)?;
            println!(
                "  k = {k:>2}  colength {len:>6}  n!·colength/k^n = {:.4}",
                fact * len as f64 / (k as f64).powi(n)
            );
        }
    }
    Ok(())
}
