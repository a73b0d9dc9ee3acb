//! Closed-form lists of the Ulrich weights on every isotropic Grassmannian.
//!
//! Weights are returned in canonical order: lexicographically decreasing in
//! the coordinates, so in type D a weight with `lambda_n > 0` precedes its
//! twin with `lambda_n` negated.

use std::collections::BTreeSet;

use crate::grassmannian::{IsotropicGrassmannian, SpinorComponent};
use crate::root_system::{LieFamily, Weight};

/// The parameters `(p, q)` of a family of Ulrich weights on a Grassmannian of
/// planes. `p` is stored doubled since it is a half-integer in type D.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassificationParams {
    pub p_doubled: i64,
    pub q: i64,
}

/// Sorts lexicographically decreasing and drops duplicates.
pub fn canonical_order(mut weights: Vec<Weight>) -> Vec<Weight> {
    weights.sort_by(|a, b| b.doubled().cmp(a.doubled()));
    weights.dedup();
    weights
}

/// `p | n-1` with `(n-1)/p = 2q+1` odd, by decreasing `p`.
pub fn igr2_params(n: usize) -> Vec<ClassificationParams> {
    let m = n as i64 - 1;
    (1..=m)
        .rev()
        .filter(|p| m % p == 0 && (m / p) % 2 == 1)
        .map(|p| ClassificationParams {
            p_doubled: 2 * p,
            q: (m / p - 1) / 2,
        })
        .collect()
}

/// Half-odd `p > 0` with `n - 2 = p(2q+1) - 1/2`, i.e. `2p` an odd divisor of
/// `2n - 3`, by decreasing `p`.
pub fn ogr2_even_params(n: usize) -> Vec<ClassificationParams> {
    let m = 2 * n as i64 - 3;
    (1..=m)
        .rev()
        .filter(|p2| p2 % 2 == 1 && m % p2 == 0)
        .map(|p2| ClassificationParams {
            p_doubled: p2,
            q: (m / p2 - 1) / 2,
        })
        .collect()
}

/// Blocks `2p*q, ..., 2p*1` of length `2p` each, all doubled, every entry
/// offset by `offset` (doubled).
fn block_tail(p_doubled: i64, q: i64, offset: i64) -> Vec<i64> {
    let mut out = Vec::new();
    for i in (1..=q).rev() {
        let value = 2 * p_doubled * i + offset;
        out.extend(std::iter::repeat_n(value, p_doubled as usize));
    }
    out
}

/// Ulrich weights on `IGr(2, 2n)`.
pub fn ulrich_weights_igr2(n: usize) -> Vec<Weight> {
    if n < 2 {
        return Vec::new();
    }
    let n_i = n as i64;
    igr2_params(n)
        .into_iter()
        .map(|ClassificationParams { p_doubled, q }| {
            let p = p_doubled / 2;
            let mut doubled = vec![2 * (n_i - 2 + p), 2 * (n_i - 1 - p)];
            doubled.extend(block_tail(p_doubled, q, 0));
            doubled.extend(std::iter::repeat_n(0, (p - 1) as usize));
            debug_assert_eq!(doubled.len(), n);
            Weight::from_doubled(doubled)
        })
        .collect()
}

/// Ulrich weights on `OGr(2, 2n+1)`: the type C list moved by `1/2` in every
/// coordinate.
pub fn ulrich_weights_ogr2_odd(n: usize) -> Vec<Weight> {
    ulrich_weights_igr2(n)
        .iter()
        .map(|w| w.shifted_doubled(1))
        .collect()
}

/// Spinor weights on the quadric `G/P_1` for `family` in `{B, D}`.
pub fn ulrich_weights_quadric(family: LieFamily, n: usize) -> Vec<Weight> {
    let spinor = Weight::from_doubled(vec![1; n]);
    match family {
        LieFamily::B => vec![spinor],
        LieFamily::D => {
            let twin = spinor.with_last_negated();
            vec![spinor, twin]
        }
        LieFamily::C => Vec::new(),
    }
}

/// Ulrich weights on `OGr(2, 2n)`, each followed by its `lambda_n`-negated
/// twin.
pub fn ulrich_weights_ogr2_even(n: usize) -> Vec<Weight> {
    if n < 4 {
        return Vec::new();
    }
    let n_i = n as i64;
    let mut out = Vec::new();
    for ClassificationParams { p_doubled, q } in ogr2_even_params(n) {
        let mut doubled = vec![2 * (n_i - 2) + p_doubled, 2 * (n_i - 1) - p_doubled];
        doubled.extend(block_tail(p_doubled, q, 1));
        doubled.extend(std::iter::repeat_n(1, ((p_doubled - 1) / 2) as usize));
        debug_assert_eq!(doubled.len(), n);
        let w = Weight::from_doubled(doubled);
        let twin = w.with_last_negated();
        out.push(w);
        out.push(twin);
    }
    out
}

/// Ulrich weights on `OGr(3, 2n)`; nonempty only for odd `n >= 5`.
pub fn ulrich_weights_ogr3_even(n: usize) -> Vec<Weight> {
    if n < 5 || !(n - 3).is_multiple_of(2) {
        return Vec::new();
    }
    let n_i = n as i64;
    // (2n-4, 2n-5, 2n-6, 2n-6, 2n-6, 2n-10, 2n-10, ..., 4, 4)
    let mut coords = vec![
        2 * n_i - 4,
        2 * n_i - 5,
        2 * n_i - 6,
        2 * n_i - 6,
        2 * n_i - 6,
    ];
    let mut value = 2 * n_i - 10;
    while coords.len() < n {
        coords.push(value);
        coords.push(value);
        value -= 4;
    }
    debug_assert_eq!(coords.len(), n);
    debug_assert_eq!(coords[n - 1], 4);
    let w = Weight::from_integers(&coords);
    let twin = w.with_last_negated();
    vec![w, twin]
}

/// Ulrich weights on the maximal Grassmannians `G/P_n`, and on `G/P_{n-1}`
/// in type D.
pub fn ulrich_weights_maximal(family: LieFamily, n: usize) -> Vec<Weight> {
    ulrich_weights_maximal_component(family, n, SpinorComponent::Plus)
}

fn ulrich_weights_maximal_component(
    family: LieFamily,
    n: usize,
    component: SpinorComponent,
) -> Vec<Weight> {
    let weights = match (family, n) {
        (LieFamily::C, 2) => vec![Weight::from_integers(&[1, 0])],
        (LieFamily::B, 2) => vec![Weight::zero(2)],
        (LieFamily::D, 2 | 3) => vec![Weight::zero(n)],
        (LieFamily::D, 4) => vec![Weight::from_integers(&[1, 0, 0, 0])],
        _ => Vec::new(),
    };
    match component {
        SpinorComponent::Plus => weights,
        SpinorComponent::Minus => weights.iter().map(Weight::with_last_negated).collect(),
    }
}

/// The first `m` diagonal values `T(a_ii)` of the order-preserving labelling
/// of pairs `a_ij` (i <= j) in which each new column starts at the least
/// positive integer not yet used and off-diagonal labels average the
/// diagonal ones.
pub fn lgr_forced_alpha(m: usize) -> Vec<i64> {
    let mut diagonal: Vec<i64> = Vec::with_capacity(m);
    let mut used = BTreeSet::new();
    for _ in 0..m {
        let mut least = 1;
        while used.contains(&least) {
            least += 1;
        }
        let next = match diagonal.first() {
            None => least,
            // least labels a_{1,j}, the average of a_11 and a_jj
            Some(&first) => 2 * least - first,
        };
        for &a in &diagonal {
            used.insert((a + next) / 2);
        }
        used.insert(next);
        diagonal.push(next);
    }
    diagonal
}

/// All Ulrich weights on `x`, from the closed forms.
pub fn classify(x: &IsotropicGrassmannian) -> Vec<Weight> {
    let (n, k) = (x.rank(), x.node());
    let weights = match x.family() {
        LieFamily::C if k == n => ulrich_weights_maximal(LieFamily::C, n),
        LieFamily::C => match k {
            1 => vec![Weight::zero(n)],
            2 => ulrich_weights_igr2(n),
            _ => Vec::new(),
        },
        LieFamily::B if k == n => ulrich_weights_maximal(LieFamily::B, n),
        LieFamily::B => match k {
            1 => ulrich_weights_quadric(LieFamily::B, n),
            2 => ulrich_weights_ogr2_odd(n),
            _ => Vec::new(),
        },
        LieFamily::D => match x.component() {
            Some(c) => ulrich_weights_maximal_component(LieFamily::D, n, c),
            None => match k {
                1 => ulrich_weights_quadric(LieFamily::D, n),
                2 => ulrich_weights_ogr2_even(n),
                3 => ulrich_weights_ogr3_even(n),
                _ => Vec::new(),
            },
        },
    };
    canonical_order(weights)
}
