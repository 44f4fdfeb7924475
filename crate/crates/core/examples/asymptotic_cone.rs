//! The cone of `(m_1, .., m_k, n)` with `J_1^{m_1}···J_k^{m_k} ⊆ closure(I^n)`.

use nubar::polyhedra::asymptotic_cone;
use nubar::MonomialIdeal;

fn main() -> nubar::Result<()> {
    let ideal = MonomialIdeal::from_slices(&[&[2, 0], &[0, 3]]);
    let js = [
        MonomialIdeal::from_slices(&[&[1, 0], &[0, 1]]),
        MonomialIdeal::from_slices(&[&[1, 0], &[0, 2]]),
    ];
    let cone = asymptotic_cone(&js, &ideal)?;
    println!("coordinates (m_1, m_2, n); each row reads Σ c_i x_i >= 0");
    for ineq in &cone {
        println!("  {:?}", ineq.coeffs);
    }
    for point in [[3, 0, 1], [2, 0, 1], [1, 1, 1], [0, 3, 2]] {
        let inside = cone.iter().all(|c| c.holds_at(&point));
        println!("{point:?} in cone: {inside}");
    }
    Ok(())
}
