//! The set `Irr(lambda)` of integers `t` for which `lambda + rho - t*omega_k`
//! is singular, computed two ways, and the Ulrich test built on it.
//!
//! A bundle `U^lambda` on `X` of dimension `d` is Ulrich exactly when
//! `Irr(lambda)` is `{1, ..., d}`. `Irr` is kept as a multiset: one candidate
//! per positive root, so that collisions stay visible.

use std::fmt;

use crate::error::Result;
use crate::grassmannian::IsotropicGrassmannian;
use crate::root_system::{LieFamily, Root, Weight};

/// Where a value of `Irr` came from. Indices are 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Contribution {
    Root(Root),
    AlphaPlusBeta(usize, usize),
    AlphaMinusBeta(usize, usize),
    /// `(alpha_i + alpha_j) / 2`
    HalfAlphaSum(usize, usize),
    /// `alpha_i + alpha_j`
    AlphaSum(usize, usize),
}

impl fmt::Display for Contribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Contribution::Root(r) => write!(f, "{r}"),
            Contribution::AlphaPlusBeta(i, j) => write!(f, "a{i}+b{j}"),
            Contribution::AlphaMinusBeta(i, j) => write!(f, "a{i}-b{j}"),
            Contribution::HalfAlphaSum(i, j) => write!(f, "(a{i}+a{j})/2"),
            Contribution::AlphaSum(i, j) => write!(f, "a{i}+a{j}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UlrichCertificate {
    /// Sorted, with multiplicity.
    pub irr_values: Vec<i64>,
    /// `(value, producer)`, in the same order as `irr_values`.
    pub contributions: Vec<(i64, Contribution)>,
    pub is_ulrich: bool,
    pub d: usize,
}

impl UlrichCertificate {
    fn from_contributions(mut contributions: Vec<(i64, Contribution)>, d: usize) -> Self {
        contributions.sort_by_key(|(t, _)| *t);
        let irr_values: Vec<i64> = contributions.iter().map(|(t, _)| *t).collect();
        let is_ulrich = irr_values.len() == d
            && irr_values
                .iter()
                .enumerate()
                .all(|(i, &t)| t == i as i64 + 1);
        UlrichCertificate {
            irr_values,
            contributions,
            is_ulrich,
            d,
        }
    }

    /// Number of distinct values.
    pub fn distinct_count(&self) -> usize {
        let mut v = self.irr_values.clone();
        v.dedup();
        v.len()
    }
}

/// `t = (r, lambda+rho) / (r, omega_k)` for every positive root not in the
/// Levi, keeping the integer ones.
pub fn irr_generic(x: &IsotropicGrassmannian, lambda: &Weight) -> Result<UlrichCertificate> {
    x.require_l_dominant(lambda)?;
    Ok(irr_generic_unchecked(x, lambda))
}

pub(crate) fn irr_generic_unchecked(
    x: &IsotropicGrassmannian,
    lambda: &Weight,
) -> UlrichCertificate {
    let shifted = lambda + &x.rho();
    let omega = x.omega();
    let mut contributions = Vec::new();
    for r in x.root_system().positive_roots() {
        let den = omega.pair_doubled(r);
        if den == 0 {
            continue;
        }
        let num = shifted.pair_doubled(r);
        if num % den == 0 {
            contributions.push((num / den, Contribution::Root(r.clone())));
        }
    }
    UlrichCertificate::from_contributions(contributions, x.dimension())
}

/// Family-specific closed forms in terms of the `(alpha, beta)` split.
pub fn irr_closed(x: &IsotropicGrassmannian, lambda: &Weight) -> Result<UlrichCertificate> {
    let split = x.alpha_beta(lambda)?;
    // alpha and beta are doubled; alpha_i + alpha_j has even doubled form
    let (alpha, beta) = (&split.alpha, &split.beta);
    let mut out = Vec::new();
    let mut push_doubled = |v: i64, c: Contribution| {
        if v % 2 == 0 {
            out.push((v / 2, c));
        }
    };
    let k = alpha.len();
    if x.is_maximal() {
        match x.family() {
            LieFamily::C => {
                for i in 0..k {
                    for j in i..k {
                        push_doubled(
                            (alpha[i] + alpha[j]) / 2,
                            Contribution::HalfAlphaSum(i + 1, j + 1),
                        );
                    }
                }
            }
            LieFamily::B => {
                for i in 0..k {
                    for j in i..k {
                        push_doubled(alpha[i] + alpha[j], Contribution::AlphaSum(i + 1, j + 1));
                    }
                }
            }
            LieFamily::D => {
                for i in 0..k {
                    for j in i + 1..k {
                        push_doubled(alpha[i] + alpha[j], Contribution::AlphaSum(i + 1, j + 1));
                    }
                }
            }
        }
    } else {
        for (i, a) in alpha.iter().enumerate() {
            for (j, b) in beta.iter().enumerate() {
                push_doubled(a + b, Contribution::AlphaPlusBeta(i + 1, j + 1));
                push_doubled(a - b, Contribution::AlphaMinusBeta(i + 1, j + 1));
            }
        }
        let diagonal = x.family() != LieFamily::D;
        for i in 0..k {
            let start = if diagonal { i } else { i + 1 };
            for j in start..k {
                push_doubled(
                    (alpha[i] + alpha[j]) / 2,
                    Contribution::HalfAlphaSum(i + 1, j + 1),
                );
            }
        }
    }
    Ok(UlrichCertificate::from_contributions(out, x.dimension()))
}

pub fn is_ulrich(x: &IsotropicGrassmannian, lambda: &Weight) -> Result<bool> {
    Ok(irr_generic(x, lambda)?.is_ulrich)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn w(s: &str) -> Weight {
        s.parse().unwrap()
    }

    fn x(f: LieFamily, n: usize, k: usize) -> IsotropicGrassmannian {
        IsotropicGrassmannian::new(f, n, k).unwrap()
    }

    fn range(d: i64) -> Vec<i64> {
        (1..=d).collect()
    }

    #[test]
    fn generic_examples() {
        let c = irr_generic(&x(LieFamily::C, 2, 2), &w("1,0")).unwrap();
        assert_eq!(c.irr_values, range(3));
        assert!(c.is_ulrich);

        let c = irr_generic(&x(LieFamily::C, 4, 2), &w("5,0,0,0")).unwrap();
        assert_eq!(c.irr_values, range(11));
        assert!(c.is_ulrich);

        let c = irr_generic(&x(LieFamily::C, 4, 2), &w("0,0,0,0")).unwrap();
        assert_ne!(c.irr_values, range(11));
        assert!(!c.is_ulrich);
        // alpha = (4,3), beta = (2,1): 4-2 and 3-1 collide
        assert!(c.distinct_count() < c.irr_values.len());
    }

    #[test]
    fn closed_examples() {
        let c = irr_closed(&x(LieFamily::D, 5, 3), &w("6,5,4,4,4")).unwrap();
        assert_eq!(c.irr_values, range(15));
        assert!(c.is_ulrich);
        let c = irr_closed(&x(LieFamily::D, 4, 4), &w("1,0,0,0")).unwrap();
        assert_eq!(c.irr_values, range(6));
        let c = irr_closed(&x(LieFamily::B, 2, 2), &w("0,0")).unwrap();
        assert_eq!(c.irr_values, range(3));
        assert!(c.is_ulrich);
        assert!(c
            .contributions
            .iter()
            .all(|(_, l)| matches!(l, Contribution::AlphaSum(..))));
    }

    #[test]
    fn ulrich_verdicts() {
        let q6 = x(LieFamily::D, 4, 1);
        assert!(is_ulrich(&q6, &w("1/2,1/2,1/2,1/2")).unwrap());
        assert!(is_ulrich(&q6, &w("1/2,1/2,1/2,-1/2")).unwrap());
        assert!(!is_ulrich(&x(LieFamily::C, 5, 3), &w("3,2,1,0,0")).unwrap());
        assert!(matches!(
            is_ulrich(&x(LieFamily::C, 4, 2), &w("0,1,0,0")),
            Err(Error::NotLDominant(_))
        ));
    }

    #[test]
    fn non_integer_candidates_are_dropped() {
        // B3 / P1 with integral lambda: alpha is half-odd, the e_1 root gives
        // t = alpha_1 which is not an integer
        let v = x(LieFamily::B, 3, 1);
        let c = irr_generic(&v, &w("0,0,0")).unwrap();
        assert_eq!(c.irr_values.len(), 4);
        assert!(!c.is_ulrich);
        assert_eq!(
            irr_closed(&v, &w("0,0,0")).unwrap().irr_values,
            c.irr_values
        );
    }

    #[test]
    fn minus_component_matches_plus_under_involution() {
        for n in 2..=5 {
            let plus = x(LieFamily::D, n, n);
            let minus = x(LieFamily::D, n, n - 1);
            let lam = Weight::from_integers(&(1..=n as i64).rev().collect::<Vec<_>>());
            let a = irr_generic(&plus, &lam).unwrap().irr_values;
            let b = irr_generic(&minus, &lam.with_last_negated())
                .unwrap()
                .irr_values;
            assert_eq!(a, b);
        }
    }
}
