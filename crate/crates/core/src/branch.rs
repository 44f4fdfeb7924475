//! Invariants of a plane branch from its Puiseux characteristic
//! `(β₀, β₁, …, β_g)`: the gcd sequence, the value semigroup `Γ`, `δ`, the
//! conductor, the double-point polygon and the closures of powers of the
//! maximal ideal. Everything here is determined by `Γ`.

use num_bigint::BigInt;
use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::polygon::{ElementaryPolygon, NewtonPolygonSum};
use crate::rational::Rational;
use crate::report::ser_rationals;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct CharSequence {
    beta: Vec<u32>,
}

impl CharSequence {
    pub fn new(beta: Vec<u32>) -> Result<Self> {
        let bad = |msg: &str| Err(Error::InvalidCharSequence(format!("{beta:?}: {msg}")));
        if beta.is_empty() {
            return bad("empty sequence");
        }
        if beta[0] == 0 {
            return bad("beta_0 must be positive");
        }
        if beta.windows(2).any(|w| w[0] >= w[1]) {
            return bad("not strictly increasing");
        }
        let e = gcd_sequence(&beta);
        if e.windows(2).any(|w| w[1] >= w[0]) {
            return bad("gcd sequence does not strictly decrease");
        }
        if *e.last().expect("nonempty") != 1 {
            return bad("gcd of all terms is not 1");
        }
        Ok(CharSequence { beta })
    }

    pub fn beta(&self) -> &[u32] {
        &self.beta
    }

    pub fn genus(&self) -> usize {
        self.beta.len() - 1
    }

    pub fn is_smooth(&self) -> bool {
        self.beta[0] == 1
    }
}

fn gcd_sequence(beta: &[u32]) -> Vec<u32> {
    let mut acc = 0u32;
    beta.iter()
        .map(|&b| {
            acc = acc.gcd(&b);
            acc
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BranchInvariants {
    pub beta: Vec<u32>,
    pub e: Vec<u32>,
    /// `n_j = e_{j-1} / e_j` for `j = 1..=g`.
    pub n: Vec<u32>,
    pub semigroup_generators: Vec<u32>,
    /// Number of gaps of `Γ`.
    pub delta: u64,
    /// `(1 - β₀ + Σ (e_{j-1} - e_j) β_j) / 2`.
    pub delta_formula: u64,
    pub conductor: u64,
    /// `gamma_membership[k]` decides `k ∈ Γ` for `k < conductor`.
    pub gamma_membership: Vec<bool>,
}

impl BranchInvariants {
    pub fn contains(&self, k: u64) -> bool {
        k >= self.conductor || self.gamma_membership[k as usize]
    }

    /// `γ ∈ Γ` iff `c - 1 - γ ∉ Γ` for `0 <= γ < c`.
    pub fn is_symmetric(&self) -> bool {
        let c = self.conductor;
        (0..c).all(|k| self.contains(k) != self.contains(c - 1 - k))
    }
}

/// Semigroup generators `β̄₀ = β₀, β̄₁ = β₁,
/// β̄_{j+1} = n_j β̄_j + β_{j+1} - β_j`.
pub fn semigroup_generators(c: &CharSequence) -> Vec<u32> {
    let beta = c.beta();
    let e = gcd_sequence(beta);
    let mut out = vec![beta[0]];
    if beta.len() > 1 {
        out.push(beta[1]);
    }
    for j in 1..beta.len().saturating_sub(1) {
        let n_j = e[j - 1] / e[j];
        out.push(n_j * out[j] + beta[j + 1] - beta[j]);
    }
    out
}

/// Membership of `0..limit` in the semigroup generated by `gens`.
fn semigroup_table(gens: &[u32], limit: usize) -> Vec<bool> {
    let mut table = vec![false; limit];
    if limit > 0 {
        table[0] = true;
    }
    for k in 1..limit {
        table[k] = gens.iter().any(|&g| g as usize <= k && table[k - g as usize]);
    }
    table
}

pub fn invariants(c: &CharSequence) -> BranchInvariants {
    let beta = c.beta().to_vec();
    let e = gcd_sequence(&beta);
    let n: Vec<u32> = e.windows(2).map(|w| w[0] / w[1]).collect();
    let gens = semigroup_generators(c);

    // Frobenius bound for coprime generators: F < (a_min - 1)(a_max - 1).
    let a_min = *gens.iter().min().expect("nonempty") as usize;
    let a_max = *gens.iter().max().expect("nonempty") as usize;
    let limit = a_min.max(1) * a_max.max(1) + 1;
    let table = semigroup_table(&gens, limit);
    let conductor = (0..limit)
        .rev()
        .find(|&k| !table[k])
        .map_or(0, |frobenius| frobenius + 1);
    let delta = table[..conductor].iter().filter(|&&b| !b).count() as u64;

    let sum: i64 = (1..beta.len())
        .map(|j| (e[j - 1] - e[j]) as i64 * beta[j] as i64)
        .sum();
    let two_delta = 1 - beta[0] as i64 + sum;
    BranchInvariants {
        beta,
        e,
        n,
        semigroup_generators: gens,
        delta,
        delta_formula: (two_delta / 2) as u64,
        conductor: conductor as u64,
        gamma_membership: table[..conductor].to_vec(),
    }
}

/// `N_𝒩(m) = Σ_{j=1}^{g} (e_{j-1} - e_j)·{β_j - 1 / 1̄}`.
pub fn double_point_polygon(c: &CharSequence) -> Result<NewtonPolygonSum> {
    if c.is_smooth() {
        return Err(Error::SmoothBranch);
    }
    let beta = c.beta();
    let e = gcd_sequence(beta);
    let parts = (1..beta.len())
        .map(|j| {
            let part = ElementaryPolygon::finite(beta[j] as u64 - 1, 1)?;
            Ok(((e[j - 1] - e[j]) as u64, part))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(NewtonPolygonSum::from_parts(parts))
}

/// `closure(m^k)` in the branch algebra: elements of `t`-order at least
/// `k·β₀`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosurePower {
    pub threshold: u64,
    /// Elements of `Γ` in `[threshold, threshold + conductor)`; together with
    /// every integer beyond they are the orders of the monomials `t^γ` in the
    /// ideal.
    pub members: Vec<u64>,
}

pub fn closure_power_of_m(c: &CharSequence, k: u64) -> ClosurePower {
    let inv = invariants(c);
    let threshold = k * c.beta()[0] as u64;
    let members = (threshold..threshold + inv.conductor.max(1))
        .filter(|&g| inv.contains(g))
        .collect();
    ClosurePower { threshold, members }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GradedDegrees {
    /// `γ/β₀` for `γ ∈ Γ`, `γ < conductor + 2β₀`: the degrees in which the
    /// graded algebra of the `nubar_m` filtration is nonzero.
    #[serde(serialize_with = "ser_rationals")]
    pub degrees: Vec<Rational>,
    /// `β̄_j/β₀`.
    #[serde(serialize_with = "ser_rationals")]
    pub generator_degrees: Vec<Rational>,
}

pub fn graded_degrees(c: &CharSequence) -> GradedDegrees {
    let inv = invariants(c);
    let b0 = c.beta()[0] as u64;
    let frac = |g: u64| Rational::new(BigInt::from(g), BigInt::from(b0));
    GradedDegrees {
        degrees: (0..inv.conductor + 2 * b0).filter(|&g| inv.contains(g)).map(frac).collect(),
        generator_degrees: inv.semigroup_generators.iter().map(|&g| frac(g as u64)).collect(),
    }
}

/// Every valid characteristic sequence with `β₀ <= max_beta0` and
/// `β_g <= max_last`, including the smooth one `(1)`.
pub fn enumerate_sequences(max_beta0: u32, max_last: u32) -> Vec<CharSequence> {
    fn extend(prefix: &mut Vec<u32>, e: u32, max_last: u32, out: &mut Vec<CharSequence>) {
        if e == 1 {
            out.push(CharSequence { beta: prefix.clone() });
            return;
        }
        let last = *prefix.last().expect("nonempty");
        for b in last + 1..=max_last {
            let next = e.gcd(&b);
            if next < e {
                prefix.push(b);
                extend(prefix, next, max_last, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    for b0 in 1..=max_beta0 {
        extend(&mut vec![b0], b0, max_last, &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, rat};
    use crate::Extended;

    fn cs(v: &[u32]) -> CharSequence {
        CharSequence::new(v.to_vec()).unwrap()
    }

    #[test]
    fn cusp() {
        let inv = invariants(&cs(&[2, 3]));
        assert_eq!(inv.e, vec![2, 1]);
        assert_eq!(inv.semigroup_generators, vec![2, 3]);
        assert_eq!((inv.delta, inv.delta_formula, inv.conductor), (1, 1, 2));
        assert!(inv.is_symmetric());
    }

    #[test]
    fn genus_two() {
        let inv = invariants(&cs(&[4, 6, 7]));
        assert_eq!(inv.e, vec![4, 2, 1]);
        assert_eq!(inv.n, vec![2, 2]);
        assert_eq!(inv.semigroup_generators, vec![4, 6, 13]);
        assert_eq!((inv.delta, inv.delta_formula, inv.conductor), (8, 8, 16));
    }

    #[test]
    fn smooth() {
        let inv = invariants(&cs(&[1]));
        assert_eq!((inv.delta, inv.conductor), (0, 0));
        assert!(inv.contains(0) && inv.contains(1));
        assert_eq!(double_point_polygon(&cs(&[1])), Err(Error::SmoothBranch));
        assert_eq!(closure_power_of_m(&cs(&[1]), 5).threshold, 5);
        assert_eq!(graded_degrees(&cs(&[1])).degrees, vec![int(0), int(1)]);
    }

    #[test]
    fn validation() {
        assert!(CharSequence::new(vec![]).is_err());
        assert!(CharSequence::new(vec![4, 6]).is_err());
        assert!(CharSequence::new(vec![4, 6, 8, 9]).is_err());
        assert!(CharSequence::new(vec![3, 2]).is_err());
        assert!(CharSequence::new(vec![2]).is_err());
    }

    #[test]
    fn polygons() {
        let p = double_point_polygon(&cs(&[2, 3])).unwrap();
        assert_eq!(p.parts(), &[(1, ElementaryPolygon::finite(2, 1).unwrap())]);
        assert_eq!(p.projections().0, Extended::Finite(2));
        let p = double_point_polygon(&cs(&[4, 6, 7])).unwrap();
        assert_eq!(
            p.parts(),
            &[
                (2, ElementaryPolygon::finite(5, 1).unwrap()),
                (1, ElementaryPolygon::finite(6, 1).unwrap())
            ]
        );
        assert_eq!(p.projections().0, Extended::Finite(16));
        assert_eq!(p.last_side_slope().unwrap(), rat(1, 6));
    }

    #[test]
    fn closure_powers() {
        for n in 1..6 {
            assert_eq!(closure_power_of_m(&cs(&[2, 3]), n).threshold, 2 * n);
        }
        let c = closure_power_of_m(&cs(&[4, 6, 7]), 2);
        assert_eq!(c.threshold, 8);
        assert_eq!(&c.members[..5], &[8, 10, 12, 13, 14]);
    }

    #[test]
    fn graded() {
        let g = graded_degrees(&cs(&[2, 3]));
        assert_eq!(&g.degrees[..5], &[int(0), int(1), rat(3, 2), int(2), rat(5, 2)]);
        let g = graded_degrees(&cs(&[4, 6, 7]));
        assert_eq!(g.generator_degrees, vec![int(1), rat(3, 2), rat(13, 4)]);
    }

    #[test]
    fn enumeration_is_valid() {
        let all = enumerate_sequences(4, 10);
        assert!(all.contains(&cs(&[1])));
        assert!(all.contains(&cs(&[2, 3])));
        assert!(all.contains(&cs(&[4, 6, 7])));
        assert!(all.iter().all(|c| CharSequence::new(c.beta().to_vec()).is_ok()));
    }
}
