//! The I-adic order `ν_I` and the brute-force power sequence `ν_I(f^k)/k`.
//!
//! `I^k` is a monomial ideal, so a polynomial lies in `I^k` iff each of its
//! terms does; hence `ν_I(f)` is the minimum of `ν_I` over the support of
//! `f`. Membership of a single monomial in `I^k` is decided by an exact
//! depth-first search over multisets of generators.

use std::collections::HashSet;

use num_bigint::BigInt;

use crate::error::{check_dim, Error, Result};
use crate::ideal::{ExponentVector, MonomialIdeal, PolynomialQ};
use crate::linalg;
use crate::rational::{Extended, Rational};

/// Exact decision procedure for `x^a ∈ I^k`.
///
/// Generators are tried in (degree, lex) order with nondecreasing index, so
/// every multiset is visited at most once; failed states are memoized on
/// (residual, first usable generator, remaining count). Branches are cut with
/// the necessary condition `<w, r> >= need * min_j <w, g_j>`, which holds for
/// every nonnegative weight `w`, so any family of such weights is sound.
pub struct PowerSearch {
    gens: Vec<Vec<u64>>,
    weights: Vec<Vec<u64>>,
    // suffix_levels[w][s] = min over j >= s of <weights[w], gens[j]>
    suffix_levels: Vec<Vec<u64>>,
    failed: HashSet<(Vec<u64>, usize, u64)>,
}

impl PowerSearch {
    pub fn new(ideal: &MonomialIdeal) -> Self {
        let n = ideal.dim();
        let gens: Vec<Vec<u64>> = ideal
            .generators()
            .iter()
            .map(|g| g.entries().iter().map(|&e| e as u64).collect())
            .collect();

        let mut weights: Vec<Vec<u64>> = (0..n)
            .map(|i| (0..n).map(|j| u64::from(i == j)).collect())
            .collect();
        weights.push(vec![1; n]);
        if gens.len() <= 12 && n <= 4 {
            let pts: Vec<Vec<i128>> = gens
                .iter()
                .map(|g| g.iter().map(|&e| e as i128).collect())
                .collect();
            weights.extend(linalg::candidate_normals(&pts, n));
        }
        weights.sort();
        weights.dedup();

        let m = gens.len();
        let suffix_levels: Vec<Vec<u64>> = weights
            .iter()
            .map(|w| {
                let mut lv = vec![u64::MAX; m + 1];
                for s in (0..m).rev() {
                    let d: u64 = gens[s].iter().zip(w).map(|(a, b)| a * b).sum();
                    lv[s] = lv[s + 1].min(d);
                }
                lv
            })
            .collect();
        // Weights that vanish on some generator give no information at s = 0
        // but may still help on suffixes; keep them all.
        PowerSearch {
            gens,
            weights,
            suffix_levels,
            failed: HashSet::new(),
        }
    }

    fn dim(&self) -> usize {
        self.gens.first().map(Vec::len).unwrap_or(0)
    }

    /// `x^a ∈ I^k`.
    pub fn contains(&mut self, a: &ExponentVector, k: u64) -> bool {
        let r: Vec<u64> = a.entries().iter().map(|&e| e as u64).collect();
        self.search(&r, 0, k)
    }

    fn bound_allows(&self, r: &[u64], start: usize, need: u64) -> bool {
        self.weights.iter().zip(&self.suffix_levels).all(|(w, lv)| {
            let level = lv[start];
            if level == 0 {
                return true;
            }
            let have: u64 = r.iter().zip(w).map(|(a, b)| a * b).sum();
            have >= need.saturating_mul(level)
        })
    }

    fn search(&mut self, r: &[u64], start: usize, need: u64) -> bool {
        if need == 0 {
            return true;
        }
        if start >= self.gens.len() || !self.bound_allows(r, start, need) {
            return false;
        }
        let key = (r.to_vec(), start, need);
        if self.failed.contains(&key) {
            return false;
        }
        for i in start..self.gens.len() {
            if r.iter().zip(&self.gens[i]).all(|(a, g)| a >= g) {
                let next: Vec<u64> = r.iter().zip(&self.gens[i]).map(|(a, g)| a - g).collect();
                if self.search(&next, i, need - 1) {
                    return true;
                }
            }
        }
        self.failed.insert(key);
        false
    }

    /// Cheap upper bound on `max{k : x^a ∈ I^k}` from the weight family.
    fn upper_bound(&self, a: &[u64]) -> u64 {
        self.weights
            .iter()
            .zip(&self.suffix_levels)
            .filter(|(_, lv)| lv[0] > 0)
            .map(|(w, lv)| a.iter().zip(w).map(|(x, y)| x * y).sum::<u64>() / lv[0])
            .min()
            .unwrap_or(0)
    }

    fn greedy_lower_bound(&self, a: &[u64]) -> u64 {
        let mut r = a.to_vec();
        let mut count = 0;
        'outer: loop {
            for g in &self.gens {
                if r.iter().zip(g).all(|(x, y)| x >= y) {
                    for (x, y) in r.iter_mut().zip(g) {
                        *x -= y;
                    }
                    count += 1;
                    continue 'outer;
                }
            }
            return count;
        }
    }

    /// `max{k : x^a ∈ I^k}`.
    pub fn max_power(&mut self, a: &ExponentVector) -> u64 {
        self.max_power_below(a, u64::MAX)
    }

    /// `min(max{k : x^a ∈ I^k}, cap)`.
    fn max_power_below(&mut self, a: &ExponentVector, cap: u64) -> u64 {
        debug_assert_eq!(a.dim(), self.dim());
        let r: Vec<u64> = a.entries().iter().map(|&e| e as u64).collect();
        let mut lo = self.greedy_lower_bound(&r).min(cap);
        let mut hi = self.upper_bound(&r).min(cap);
        // invariant: x^a ∈ I^lo, and x^a ∉ I^(hi+1) (or hi == cap)
        while lo < hi {
            let mid = lo + (hi - lo).div_ceil(2);
            if self.search(&r, 0, mid) {
                lo = mid;
            } else {
                hi = mid - 1;
            }
        }
        lo
    }

    /// `ν_I(f)` for a nonzero polynomial.
    fn order_of(&mut self, f: &PolynomialQ) -> u64 {
        let mut support: Vec<(u64, &ExponentVector)> = f
            .support()
            .map(|a| {
                let r: Vec<u64> = a.entries().iter().map(|&e| e as u64).collect();
                (self.upper_bound(&r), a)
            })
            .collect();
        support.sort();
        let mut best = u64::MAX;
        for (ub, a) in support {
            if ub >= best && self.contains(a, best) {
                continue;
            }
            best = best.min(self.max_power_below(a, best));
        }
        best
    }
}

/// `x^a ∈ I^k` (always true for `k = 0`).
pub fn monomial_in_power(a: &ExponentVector, ideal: &MonomialIdeal, k: u64) -> Result<bool> {
    check_dim(ideal.dim(), a.dim())?;
    Ok(PowerSearch::new(ideal).contains(a, k))
}

/// `ν_I(f) = sup{k : f ∈ I^k}`; infinite exactly for `f = 0`.
pub fn nu_order(f: &PolynomialQ, ideal: &MonomialIdeal) -> Result<Extended<u64>> {
    check_dim(ideal.dim(), f.dim())?;
    if f.is_zero() {
        return Ok(Extended::Infinity);
    }
    Ok(Extended::Finite(PowerSearch::new(ideal).order_of(f)))
}

/// `u_k = ν_I(f^k) / k` for `k = 1..=max_k`, with `f^k` expanded exactly.
pub fn oracle_sequence(f: &PolynomialQ, ideal: &MonomialIdeal, max_k: u32) -> Result<Vec<Rational>> {
    check_dim(ideal.dim(), f.dim())?;
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if max_k == 0 {
        return Err(Error::InvalidArgument("max_k must be >= 1".into()));
    }
    let mut search = PowerSearch::new(ideal);
    let mut power = f.clone();
    let mut out = Vec::with_capacity(max_k as usize);
    for k in 1..=max_k {
        let nu = search.order_of(&power);
        out.push(Rational::new(BigInt::from(nu), BigInt::from(k)));
        if k < max_k {
            power = power.mul(f)?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};

    fn ev(v: &[u32]) -> ExponentVector {
        ExponentVector::new(v.to_vec())
    }

    fn mono(v: &[u32]) -> PolynomialQ {
        PolynomialQ::monomial(int(1), ev(v))
    }

    #[test]
    fn membership_examples() {
        let i = MonomialIdeal::from_slices(&[&[2, 0], &[0, 2]]);
        assert!(!monomial_in_power(&ev(&[1, 1]), &i, 1).unwrap());
        assert!(monomial_in_power(&ev(&[2, 2]), &i, 2).unwrap());
        assert!(monomial_in_power(&ev(&[0, 0]), &i, 0).unwrap());
        let j = MonomialIdeal::from_slices(&[&[2, 0], &[0, 3]]);
        // multisets of size 2: (4,0), (2,3), (0,6); (2,3) <= (3,3)
        assert!(monomial_in_power(&ev(&[3, 3]), &j, 2).unwrap());
        assert!(!monomial_in_power(&ev(&[3, 2]), &j, 2).unwrap());
        assert!(matches!(
            monomial_in_power(&ev(&[1, 1, 1]), &j, 1),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn nu_examples() {
        let i = MonomialIdeal::from_slices(&[&[2, 0], &[0, 2]]);
        assert_eq!(nu_order(&PolynomialQ::one(2), &i).unwrap(), Extended::Finite(0));
        assert_eq!(nu_order(&PolynomialQ::zero(2), &i).unwrap(), Extended::Infinity);
        assert_eq!(nu_order(&mono(&[1, 1]), &i).unwrap(), Extended::Finite(0));
        assert_eq!(nu_order(&mono(&[2, 2]), &i).unwrap(), Extended::Finite(2));
        let f = mono(&[4, 0]).add(&mono(&[2, 2])).unwrap().add(&mono(&[0, 3])).unwrap();
        assert_eq!(nu_order(&f, &i).unwrap(), Extended::Finite(1));
    }

    #[test]
    fn oracle_examples() {
        let i = MonomialIdeal::from_slices(&[&[2, 0], &[0, 3]]);
        let u = oracle_sequence(&mono(&[0, 1]), &i, 6).unwrap();
        assert_eq!(u, vec![int(0), int(0), rat(1, 3), rat(1, 4), rat(1, 5), rat(1, 3)]);
        let x = MonomialIdeal::from_slices(&[&[1, 0]]);
        assert!(oracle_sequence(&mono(&[1, 0]), &x, 5).unwrap().iter().all(|u| *u == int(1)));
        let sq = MonomialIdeal::from_slices(&[&[2, 0], &[0, 2]]);
        assert_eq!(oracle_sequence(&mono(&[1, 1]), &sq, 2).unwrap(), vec![int(0), int(1)]);
        assert_eq!(oracle_sequence(&PolynomialQ::zero(2), &sq, 2), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn max_power_matches_greedy_free_cases() {
        let m = MonomialIdeal::maximal(3);
        let mut s = PowerSearch::new(&m);
        assert_eq!(s.max_power(&ev(&[3, 4, 5])), 12);
        let i = MonomialIdeal::from_slices(&[&[3, 0], &[1, 1], &[0, 3]]);
        let mut s = PowerSearch::new(&i);
        // (4,4) = 4*(1,1)
        assert_eq!(s.max_power(&ev(&[4, 4])), 4);
        // (4,1) = (3,0)+(1,1)
        assert_eq!(s.max_power(&ev(&[4, 1])), 2);
        // (2,2) = 2*(1,1)
        assert_eq!(s.max_power(&ev(&[2, 2])), 2);
    }
}
