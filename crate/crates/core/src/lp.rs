//! Dense exact simplex for `max c·x  s.t.  A x <= b, x >= 0` with `b >= 0`.
//!
//! The slack basis is feasible because `b >= 0`, so no phase one is needed.
//! Entering and leaving variables follow Bland's rule, which rules out cycling.

use num_traits::{Signed, Zero};

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal { value: Rational, x: Vec<Rational> },
    Unbounded,
}

impl LpOutcome {
    pub fn value(&self) -> Option<&Rational> {
        match self {
            LpOutcome::Optimal { value, .. } => Some(value),
            LpOutcome::Unbounded => None,
        }
    }
}

pub fn maximize(c: &[Rational], a: &[Vec<Rational>], b: &[Rational]) -> LpOutcome {
    let n = c.len();
    let m = a.len();
    assert_eq!(b.len(), m, "one right-hand side per row");
    assert!(a.iter().all(|row| row.len() == n), "rows must have one entry per variable");
    assert!(b.iter().all(|v| !v.is_negative()), "right-hand sides must be nonnegative");

    let width = n + m;
    let mut t: Vec<Vec<Rational>> = a
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..m).map(|k| if k == i { Rational::from_integer(1.into()) } else { Rational::zero() }));
            r
        })
        .collect();
    let mut rhs: Vec<Rational> = b.to_vec();
    let mut basis: Vec<usize> = (n..width).collect();
    let mut reduced: Vec<Rational> = c.iter().map(|v| -v).chain((0..m).map(|_| Rational::zero())).collect();
    let mut value = Rational::zero();

    while let Some(enter) = (0..width).find(|&j| reduced[j].is_negative()) {
        let mut leave: Option<(usize, Rational)> = None;
        for i in 0..m {
            if !t[i][enter].is_positive() {
                continue;
            }
            let ratio = &rhs[i] / &t[i][enter];
            let better = match &leave {
                None => true,
                Some((li, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*li]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        let Some((row, _)) = leave else {
            return LpOutcome::Unbounded;
        };

        let pivot = t[row][enter].clone();
        for v in t[row].iter_mut() {
            *v = &*v / &pivot;
        }
        rhs[row] = &rhs[row] / &pivot;
        let pivot_row = t[row].clone();
        let pivot_rhs = rhs[row].clone();
        for i in 0..m {
            if i == row || t[i][enter].is_zero() {
                continue;
            }
            let factor = t[i][enter].clone();
            for (v, p) in t[i].iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &factor * p;
                }
            }
            rhs[i] -= &factor * &pivot_rhs;
        }
        let factor = reduced[enter].clone();
        for (v, p) in reduced.iter_mut().zip(&pivot_row) {
            if !p.is_zero() {
                *v -= &factor * p;
            }
        }
        value -= &factor * &pivot_rhs;
        basis[row] = enter;
    }

    let mut x = vec![Rational::zero(); n];
    for (i, &var) in basis.iter().enumerate() {
        if var < n {
            x[var] = rhs[i].clone();
        }
    }
    LpOutcome::Optimal { value, x }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn row(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn textbook_problem() {
        // max 3x + 5y  s.t. x <= 4, 2y <= 12, 3x + 2y <= 18  ->  36 at (2, 6)
        let out = maximize(
            &row(&[3, 5]),
            &[row(&[1, 0]), row(&[0, 2]), row(&[3, 2])],
            &row(&[4, 12, 18]),
        );
        assert_eq!(out, LpOutcome::Optimal { value: int(36), x: row(&[2, 6]) });
    }

    #[test]
    fn fractional_optimum() {
        // max m1 + m2  s.t.  2 m1 <= 1, 3 m2 <= 1
        let out = maximize(&row(&[1, 1]), &[row(&[2, 0]), row(&[0, 3])], &row(&[1, 1]));
        assert_eq!(out.value(), Some(&rat(5, 6)));
    }

    #[test]
    fn unbounded_detected() {
        let out = maximize(&row(&[1, 0]), &[row(&[0, 1])], &row(&[1]));
        assert_eq!(out, LpOutcome::Unbounded);
    }

    #[test]
    fn degenerate_does_not_cycle() {
        // Classic Beale-style degenerate instance; Bland's rule terminates.
        let c = vec![rat(3, 4), int(-150), rat(1, 50), int(-6)];
        let a = vec![
            vec![rat(1, 4), int(-60), rat(-1, 25), int(9)],
            vec![rat(1, 2), int(-90), rat(-1, 50), int(3)],
            vec![int(0), int(0), int(1), int(0)],
        ];
        let b = vec![int(0), int(0), int(1)];
        assert_eq!(maximize(&c, &a, &b).value(), Some(&rat(1, 20)));
    }
}
