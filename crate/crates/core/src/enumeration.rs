//! Brute-force discovery of every Ulrich weight on a given `X`, independent
//! of the closed forms in [`crate::classification`].
//!
//! The search runs over `v = lambda + rho` (doubled). Each positive root `r`
//! outside the Levi contributes the candidate `t = (r, v) / (r, omega_k)`.
//! There are exactly `d` such roots, so `U^lambda` is Ulrich iff every one of
//! them yields a distinct integer in `[1, d]`. The depth-first search assigns
//! coordinates left to right and checks each root as soon as its support is
//! assigned.

use rayon::prelude::*;

use crate::bbw::{cohomology_unchecked, CohomologyResult};
use crate::classification::canonical_order;
use crate::error::{Error, Result};
use crate::grassmannian::IsotropicGrassmannian;
use crate::root_system::{LieFamily, Weight};

/// Bounds on the entries of `lambda + rho` for an Ulrich weight.
///
/// Every `Irr` value lies in `[1, d]`. In the nonmaximal cases each `alpha_i`
/// and `beta_j` enters a pair `alpha_i + beta_j <= d` with a positive partner,
/// and `alpha_k - beta_1 >= 1`, so entries lie in `[1, d]` except the last
/// coordinate in type D, which only satisfies `|beta_last| < beta_{last-1}`.
/// In the maximal chambers the pair sums bound the entries in `[-d, d]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBounds {
    pub entry_min: i64,
    pub entry_max: i64,
}

impl SearchBounds {
    pub fn for_position(x: &IsotropicGrassmannian, position: usize) -> SearchBounds {
        let d = x.dimension() as i64;
        let free = x.is_maximal() || (x.family() == LieFamily::D && position + 1 == x.rank());
        SearchBounds {
            entry_min: if free { -d } else { 1 },
            entry_max: d,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct EnumerateOptions {
    /// Skip the practicality guard.
    pub force: bool,
}

/// Ranks the search handles without `force`: `n <= 6` for every `k`, and
/// `n <= 7` when `k <= 2`.
pub fn within_guard(x: &IsotropicGrassmannian) -> bool {
    x.rank() <= 6 || (x.rank() <= 7 && x.node() <= 2)
}

/// Number of strictly decreasing sequences of candidate entries: an upper
/// bound on the unpruned search tree.
pub fn estimated_nodes(x: &IsotropicGrassmannian) -> u128 {
    let candidates = 4 * x.dimension() as u128 + 1;
    let n = x.rank() as u128;
    let mut acc: u128 = 1;
    for i in 0..n.min(candidates) {
        acc = acc.saturating_mul(candidates - i) / (i + 1);
    }
    acc
}

#[derive(Debug, Clone)]
struct RootCheck {
    /// `(coordinate, coefficient)` pairs.
    terms: Vec<(usize, i64)>,
    /// `2 (r, omega_k)`; zero for Levi roots.
    den: i64,
}

impl RootCheck {
    fn pair(&self, v: &[i64]) -> i64 {
        self.terms.iter().map(|&(i, c)| c * v[i]).sum()
    }
}

struct Search<'a> {
    d: i64,
    n: usize,
    /// Roots grouped by the largest coordinate in their support.
    by_last: Vec<Vec<RootCheck>>,
    lo: Vec<i64>,
    hi: Vec<i64>,
    parities: &'a [i64],
}

#[derive(Clone)]
struct State {
    v: Vec<i64>,
    claimed: u128,
}

fn full_mask(d: i64) -> u128 {
    // bits 1..=d
    if d >= 127 {
        u128::MAX << 1
    } else {
        ((1u128 << (d + 1)) - 1) & !1
    }
}

fn range_mask(lo: i64, hi: i64, d: i64) -> u128 {
    let lo = lo.max(1);
    let hi = hi.min(d);
    if lo > hi {
        return 0;
    }
    full_mask(hi) & !full_mask(lo - 1)
}

impl Search<'_> {
    fn new<'a>(x: &IsotropicGrassmannian, parities: &'a [i64]) -> Search<'a> {
        let n = x.rank();
        let omega = x.omega();
        let mut by_last: Vec<Vec<RootCheck>> = vec![Vec::new(); n];
        for r in x.root_system().positive_roots() {
            let terms: Vec<(usize, i64)> = r
                .coords()
                .iter()
                .enumerate()
                .filter(|(_, c)| **c != 0)
                .map(|(i, c)| (i, *c))
                .collect();
            let last = terms.last().expect("roots are nonzero").0;
            by_last[last].push(RootCheck {
                terms,
                den: omega.pair_doubled(r),
            });
        }
        let (lo, hi) = (0..n)
            .map(|p| {
                let b = SearchBounds::for_position(x, p);
                (2 * b.entry_min, 2 * b.entry_max)
            })
            .unzip();
        Search {
            d: x.dimension() as i64,
            n,
            by_last,
            lo,
            hi,
            parities,
        }
    }

    /// Assigns `v[p] = value` and checks every root completed by it. On
    /// success returns the claimed bits.
    fn place(&self, state: &State, p: usize) -> Option<u128> {
        let mut claimed = state.claimed;
        for r in &self.by_last[p] {
            let num = r.pair(&state.v);
            if r.den == 0 {
                if num <= 0 {
                    return None;
                }
                continue;
            }
            if num % r.den != 0 {
                return None;
            }
            let t = num / r.den;
            if t < 1 || t > self.d {
                return None;
            }
            let bit = 1u128 << t;
            if claimed & bit != 0 {
                return None;
            }
            claimed |= bit;
        }
        Some(claimed)
    }

    /// Interval bounds for the unassigned coordinates `p+1..n`, tightened by
    /// the Levi roots `e_i - e_j` and `e_i + e_j` with `i` assigned.
    fn future_bounds(&self, v: &[i64], p: usize) -> Vec<(i64, i64)> {
        let mut bounds: Vec<(i64, i64)> = (0..self.n).map(|j| (self.lo[j], self.hi[j])).collect();
        for (j, group) in self.by_last.iter().enumerate().skip(p + 1) {
            for r in group.iter().filter(|r| r.den == 0) {
                if r.terms.len() == 1 {
                    // e_j or 2e_j in the Levi: v_j > 0
                    bounds[j].0 = bounds[j].0.max(1);
                    continue;
                }
                let (i, _) = r.terms[0];
                if i > p {
                    continue;
                }
                let (lo, hi) = &mut bounds[j];
                match r.terms[1].1 {
                    // v_i - v_j > 0
                    -1 => *hi = (*hi).min(v[i] - 2),
                    // v_i + v_j > 0
                    _ => *lo = (*lo).max(-v[i] + 2),
                }
            }
        }
        bounds
    }

    /// Every unclaimed value in `[1, d]` must still be reachable by some
    /// root that is not yet complete.
    fn coverage_ok(&self, v: &[i64], p: usize, claimed: u128) -> bool {
        let missing = full_mask(self.d) & !claimed;
        if missing == 0 {
            return true;
        }
        let bounds = self.future_bounds(v, p);
        let mut reachable = 0u128;
        for group in &self.by_last[p + 1..] {
            for r in group.iter().filter(|r| r.den != 0) {
                let (mut lo, mut hi) = (0i64, 0i64);
                for &(i, c) in &r.terms {
                    if i <= p {
                        lo += c * v[i];
                        hi += c * v[i];
                    } else {
                        let (a, b) = bounds[i];
                        let (x, y) = (c * a, c * b);
                        lo += x.min(y);
                        hi += x.max(y);
                    }
                }
                // den > 0 for every root outside the Levi
                reachable |= range_mask(
                    (lo + r.den - 1).div_euclid(r.den),
                    hi.div_euclid(r.den),
                    self.d,
                );
                if missing & !reachable == 0 {
                    return true;
                }
            }
        }
        missing & !reachable == 0
    }

    fn dfs(&self, state: &mut State, p: usize, out: &mut Vec<Vec<i64>>) {
        if p == self.n {
            out.push(state.v.clone());
            return;
        }
        let parity = state
            .v
            .first()
            .map_or(self.parities[0], |v0| v0.rem_euclid(2));
        let mut hi = self.hi[p];
        let mut lo = self.lo[p];
        if p > 0 {
            let b = self.future_bounds(&state.v, p - 1)[p];
            lo = lo.max(b.0);
            hi = hi.min(b.1);
        }
        if hi.rem_euclid(2) != parity {
            hi -= 1;
        }
        let mut value = hi;
        while value >= lo {
            state.v[p] = value;
            if let Some(claimed) = self.place(state, p) {
                if p + 1 == self.n || self.coverage_ok(&state.v, p, claimed) {
                    let saved = state.claimed;
                    state.claimed = claimed;
                    self.dfs(state, p + 1, out);
                    state.claimed = saved;
                }
            }
            value -= 2;
        }
        state.v[p] = 0;
    }

    fn run_branch(&self, first: i64) -> Vec<Vec<i64>> {
        let mut state = State {
            v: vec![0; self.n],
            claimed: 0,
        };
        state.v[0] = first;
        let mut out = Vec::new();
        if let Some(claimed) = self.place(&state, 0) {
            if self.n == 1 || self.coverage_ok(&state.v, 0, claimed) {
                state.claimed = claimed;
                self.dfs(&mut state, 1, &mut out);
            }
        }
        out
    }
}

/// Every L-dominant `lambda` with `U^lambda` Ulrich on `x`, in canonical
/// order. Branches over the first coordinate run in parallel on the current
/// rayon pool.
pub fn enumerate_ulrich(x: &IsotropicGrassmannian, opts: EnumerateOptions) -> Result<Vec<Weight>> {
    if !opts.force && !within_guard(x) {
        return Err(Error::SearchTooLarge {
            estimate: estimated_nodes(x),
        });
    }
    let d = x.dimension() as i64;
    if d >= 127 {
        return Err(Error::SearchTooLarge {
            estimate: estimated_nodes(x),
        });
    }
    // C: lambda and rho integral. B, D: both lattice classes.
    let parities: &[i64] = match x.family() {
        LieFamily::C => &[0],
        LieFamily::B | LieFamily::D => &[0, 1],
    };
    let search = Search::new(x, parities);
    let firsts: Vec<i64> = (search.lo[0]..=search.hi[0])
        .filter(|v| parities.contains(&v.rem_euclid(2)))
        .collect();
    let found: Vec<Vec<i64>> = firsts
        .into_par_iter()
        .flat_map_iter(|first| search.run_branch(first))
        .collect();
    let rho = x.rho();
    let weights = found
        .into_iter()
        .map(|v| &Weight::from_doubled(v) - &rho)
        .collect();
    Ok(canonical_order(weights))
}

/// Checks the Ulrich vanishing conditions directly on cohomology, without
/// computing `Irr`: `H^*(U^lambda(-t)) = 0` for `t = 1..d`, only `H^0` for
/// twists `0..=d+1`, and only `H^d` for twists `-(2d+1)..=-(d+1)`.
pub fn verify_twist_vanishing(x: &IsotropicGrassmannian, lambda: &Weight) -> Result<bool> {
    x.require_l_dominant(lambda)?;
    let d = x.dimension();
    let omega = x.omega();
    let twist = |t: i64| cohomology_unchecked(x, &(lambda + &omega.scaled(t)));
    for t in 0..=d as i64 + 1 {
        match twist(t) {
            CohomologyResult::NonZero { degree: 0, .. } => {}
            _ => return Ok(false),
        }
    }
    for t in 1..=d as i64 {
        if !twist(-t).is_zero() {
            return Ok(false);
        }
    }
    for t in d as i64 + 1..=2 * d as i64 + 1 {
        match twist(-t) {
            CohomologyResult::Zero => {}
            CohomologyResult::NonZero { degree, .. } if degree == d => {}
            _ => return Ok(false),
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classification::classify;
    use crate::grassmannian::SpinorComponent;
    use crate::ulrich::is_ulrich;
    use itertools::Itertools;

    fn w(s: &str) -> Weight {
        s.parse().unwrap()
    }

    fn x(f: LieFamily, n: usize, k: usize) -> IsotropicGrassmannian {
        IsotropicGrassmannian::new(f, n, k).unwrap()
    }

    fn enumerate(v: &IsotropicGrassmannian) -> Vec<Weight> {
        enumerate_ulrich(v, EnumerateOptions::default()).unwrap()
    }

    #[test]
    fn masks() {
        assert_eq!(full_mask(3), 0b1110);
        assert_eq!(range_mask(2, 3, 5), 0b1100);
        assert_eq!(range_mask(-4, 1, 5), 0b10);
        assert_eq!(range_mask(6, 9, 5), 0);
    }

    #[test]
    fn small_examples() {
        assert!(enumerate(&x(LieFamily::C, 3, 3)).is_empty());
        assert_eq!(
            enumerate(&x(LieFamily::C, 4, 2)),
            vec![w("5,0,0,0"), w("3,2,2,2")]
        );
        assert!(enumerate(&x(LieFamily::B, 4, 4)).is_empty());
        assert_eq!(enumerate(&x(LieFamily::C, 2, 2)), vec![w("1,0")]);
        assert_eq!(enumerate(&x(LieFamily::B, 2, 2)), vec![w("0,0")]);
    }

    /// Exhaustive scan of the whole box with the plain Ulrich test, no
    /// pruning at all.
    fn naive(v: &IsotropicGrassmannian) -> Vec<Weight> {
        let n = v.rank();
        let d = v.dimension() as i64;
        let rho = v.rho();
        let mut out = Vec::new();
        let values: Vec<i64> = (-2 * d..=2 * d).collect();
        for coords in (0..n)
            .map(|_| values.iter().copied())
            .multi_cartesian_product()
        {
            let shifted = Weight::from_doubled(coords);
            let lambda = &shifted - &rho;
            if v.check_weight(&lambda).is_ok()
                && v.is_l_dominant(&lambda).unwrap()
                && is_ulrich(v, &lambda).unwrap()
            {
                out.push(lambda);
            }
        }
        canonical_order(out)
    }

    #[test]
    fn pruned_search_matches_naive_scan() {
        for v in crate::grassmannian::all_varieties(2..=3) {
            assert_eq!(enumerate(&v), naive(&v), "{v}");
        }
        for v in [x(LieFamily::D, 4, 1), x(LieFamily::B, 4, 1)] {
            assert_eq!(enumerate(&v), naive(&v), "{v}");
        }
    }

    /// Ulrich weights found by the search but absent from the closed-form
    /// lists, for n <= 6.
    fn unlisted(v: &IsotropicGrassmannian) -> Vec<Weight> {
        let list: &[&str] = match (v.family(), v.rank(), v.node(), v.component()) {
            (LieFamily::D, 4, 2, _) => &["3,2,2,2", "3,2,2,-2"],
            (LieFamily::D, 5, 2, _) => &["9/2,5/2,5/2,5/2,5/2", "9/2,5/2,5/2,5/2,-5/2"],
            (LieFamily::D, 6, 2, _) => {
                &["6,3,3,3,3,3", "6,3,3,3,3,-3", "5,4,4,4,2,2", "5,4,4,4,2,-2"]
            }
            (LieFamily::D, 4, _, Some(SpinorComponent::Plus)) => &["1/2,1/2,1/2,-1/2"],
            (LieFamily::D, 4, _, Some(SpinorComponent::Minus)) => &["1/2,1/2,1/2,1/2"],
            _ => &[],
        };
        list.iter().map(|s| s.parse().unwrap()).collect()
    }

    #[test]
    fn agrees_with_classification_at_small_rank() {
        for v in crate::grassmannian::all_varieties(2..=6) {
            let found = enumerate(&v);
            let listed = classify(&v);
            let extra = unlisted(&v);
            assert!(listed.iter().all(|w| found.contains(w)), "{v}");
            let mut expected = listed;
            expected.extend(extra.iter().cloned());
            assert_eq!(found, canonical_order(expected), "{v}");
            for w in &extra {
                assert!(verify_twist_vanishing(&v, w).unwrap(), "{v} {w}");
            }
        }
    }

    #[test]
    fn deterministic() {
        let v = x(LieFamily::D, 5, 2);
        assert_eq!(enumerate(&v), enumerate(&v));
    }

    #[test]
    fn guard() {
        let big = x(LieFamily::C, 8, 4);
        match enumerate_ulrich(&big, EnumerateOptions::default()) {
            Err(Error::SearchTooLarge { estimate }) => assert!(estimate > 1_000_000),
            other => panic!("expected guard error, got {other:?}"),
        }
        assert!(within_guard(&x(LieFamily::D, 7, 2)));
        assert!(!within_guard(&x(LieFamily::D, 7, 3)));
    }

    #[test]
    fn twist_vanishing_examples() {
        let lgr = x(LieFamily::C, 2, 2);
        assert!(verify_twist_vanishing(&lgr, &w("1,0")).unwrap());
        assert!(!verify_twist_vanishing(&lgr, &w("0,0")).unwrap());
        let q5 = x(LieFamily::B, 3, 1);
        assert!(verify_twist_vanishing(&q5, &w("1/2,1/2,1/2")).unwrap());
        assert!(verify_twist_vanishing(&lgr, &w("0,1")).is_err());
    }
}
