//! Random L-dominant weights, used by the reproduction report and tests.

use rand::seq::index::sample;
use rand::Rng;

use crate::grassmannian::{IsotropicGrassmannian, SpinorComponent};
use crate::root_system::{LieFamily, Weight};

/// `count` distinct doubled values of the given parity in `[lo, hi]`, sorted
/// decreasing.
fn distinct_desc<R: Rng + ?Sized>(
    rng: &mut R,
    lo: i64,
    hi: i64,
    parity: i64,
    count: usize,
) -> Vec<i64> {
    let first = if lo.rem_euclid(2) == parity {
        lo
    } else {
        lo + 1
    };
    let slots = ((hi - first) / 2 + 1).max(0) as usize;
    assert!(
        slots >= count,
        "not enough room for {count} distinct entries"
    );
    let mut picked: Vec<i64> = sample(rng, slots, count)
        .into_iter()
        .map(|i| first + 2 * i as i64)
        .collect();
    picked.sort_unstable_by(|a, b| b.cmp(a));
    picked
}

/// A uniformly chosen L-dominant weight whose `lambda + rho` has every entry
/// in `[-bound, bound]` (`bound` in value units).
pub fn random_l_dominant<R: Rng + ?Sized>(
    x: &IsotropicGrassmannian,
    rng: &mut R,
    bound: i64,
) -> Weight {
    let (n, k) = (x.rank(), x.node());
    let parity = match x.family() {
        LieFamily::C => 0,
        LieFamily::B | LieFamily::D => rng.gen_range(0..2),
    };
    let (lo, hi) = (-2 * bound, 2 * bound);
    let v = if x.is_maximal() {
        let mut v = distinct_desc(rng, lo, hi, parity, n);
        if x.component() == Some(SpinorComponent::Minus) {
            let last = n - 1;
            v[last] = -v[last];
        }
        v
    } else {
        let mut v = distinct_desc(rng, lo, hi, parity, k);
        match x.family() {
            LieFamily::C | LieFamily::B => v.extend(distinct_desc(rng, 1, hi, parity, n - k)),
            LieFamily::D => {
                let mut beta = distinct_desc(rng, 0, hi, parity, n - k);
                if rng.gen_bool(0.5) {
                    let last = beta.len() - 1;
                    beta[last] = -beta[last];
                }
                v.extend(beta);
            }
        }
        v
    };
    let lambda = &Weight::from_doubled(v) - &x.rho();
    debug_assert!(x.is_l_dominant(&lambda).unwrap_or(false), "{x} {lambda}");
    lambda
}
