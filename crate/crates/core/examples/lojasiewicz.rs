//! Lojasiewicz exponents `|f|^θ <= C·max|g_i|` near the origin, with the
//! numeric probe along the certificate arc, and the gradient inequality for
//! Brieskorn polynomials.

use nubar::closure::{gradient_suite, lojasiewicz};
use nubar::rational::rat;
use nubar::{ExponentVector, MonomialIdeal, PolynomialQ};

fn main() -> nubar::Result<()> {
    let ideal = MonomialIdeal::from_slices(&[&[3, 0], &[1, 1], &[0, 3]]);
    let f = PolynomialQ::from_terms(
        2,
        [
            (rat(1, 1), ExponentVector::new(vec![2, 0])),
            (rat(-3, 1), ExponentVector::new(vec![0, 2])),
        ],
    )?;
    let report = lojasiewicz(&f, &ideal, 100, 0)?;
    println!("theta = {}  (nubar = {})", report.theta, report.nubar);
    println!(
        "arc weights {:?}, reparametrized by t -> t^{}",
        report.arc_weights, report.arc_scale
    );
    if let (Some(slope), Some(err)) = (report.fitted_slope, report.slope_error) {
        println!("fitted log-log slope {slope:.9}  error {err:.1e}");
    }
    if let (Some(c), Some(m)) = (report.fitted_constant, report.max_sample_ratio) {
        println!("fitted constant {c:.4}, worst sample ratio {m:.4}");
    }
    println!("numeric corroboration passed: {}", report.passed);

    for exps in [vec![2, 3], vec![3, 4, 5]] {
        let g = gradient_suite(&exps)?;
        println!(
            "f = Σ x_i^a_i, a = {exps:?}: nubar_j(f) = {} (theta {}), nubar_(x)j(f) = {}",
            g.nubar_jacobian, g.theta_gradient, g.nubar_extended
        );
    }
    Ok(())
}
