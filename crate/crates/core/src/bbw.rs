//! Borel-Bott-Weil cohomology of irreducible equivariant bundles, together
//! with the Weyl dimension formula and the projective invariants of `X`
//! derived from it.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::grassmannian::IsotropicGrassmannian;
use crate::root_system::{LieFamily, Root, RootSystem, Weight};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CohomologyResult {
    /// `H^i = 0` for every `i`.
    Zero,
    /// The single nonvanishing group `H^degree = V^highest_weight`.
    NonZero {
        degree: usize,
        highest_weight: Weight,
        dim: BigUint,
    },
}

impl CohomologyResult {
    pub fn is_zero(&self) -> bool {
        matches!(self, CohomologyResult::Zero)
    }

    /// Dimension of `H^i`.
    pub fn dim_in_degree(&self, i: usize) -> BigUint {
        match self {
            CohomologyResult::NonZero { degree, dim, .. } if *degree == i => dim.clone(),
            _ => BigUint::zero(),
        }
    }
}

/// `prod (a + rho, r) / prod (rho, r)` over the given roots. Every factor must
/// be positive.
fn dimension_product<'a>(
    shifted: &Weight,
    rho: &Weight,
    roots: impl Iterator<Item = &'a Root>,
) -> BigUint {
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for r in roots {
        let a = shifted.pair_doubled(r);
        let b = rho.pair_doubled(r);
        debug_assert!(a > 0 && b > 0);
        num *= a as u64;
        den *= b as u64;
    }
    let (q, rem) = num.div_rem(&den);
    debug_assert!(rem.is_zero(), "Weyl dimension quotient is not integral");
    q
}

fn weyl_dim_in(rs: &RootSystem, mu: &Weight) -> BigUint {
    let rho = rs.rho();
    dimension_product(&(mu + &rho), &rho, rs.positive_roots().iter())
}

/// Dimension of the irreducible `G`-representation with highest weight `mu`.
pub fn weyl_dim(family: LieFamily, n: usize, mu: &Weight) -> Result<BigUint> {
    let rs = RootSystem::new(family, n)?;
    mu.check_lattice(family, n)?;
    if !rs.is_dominant(mu) {
        return Err(Error::NotDominant(mu.to_string()));
    }
    Ok(weyl_dim_in(&rs, mu))
}

pub fn cohomology(x: &IsotropicGrassmannian, lambda: &Weight) -> Result<CohomologyResult> {
    x.require_l_dominant(lambda)?;
    Ok(cohomology_unchecked(x, lambda))
}

pub(crate) fn cohomology_unchecked(x: &IsotropicGrassmannian, lambda: &Weight) -> CohomologyResult {
    let rs = x.root_system();
    let rho = rs.rho();
    match rs.dominantize(&(lambda + &rho)) {
        None => CohomologyResult::Zero,
        Some(d) => {
            let highest_weight = &d.dominant - &rho;
            let dim = weyl_dim_in(rs, &highest_weight);
            CohomologyResult::NonZero {
                degree: d.length,
                highest_weight,
                dim,
            }
        }
    }
}

/// Rank of `U^lambda`: the Weyl dimension formula restricted to the Levi
/// roots, with the ambient `rho` standing in for the Levi one.
pub fn bundle_rank(x: &IsotropicGrassmannian, lambda: &Weight) -> Result<BigUint> {
    x.require_l_dominant(lambda)?;
    let rho = x.rho();
    Ok(dimension_product(&(lambda + &rho), &rho, x.levi_roots()))
}

/// `dim H^0(X, O(t))`.
pub fn hilbert_value(x: &IsotropicGrassmannian, t: u64) -> BigUint {
    let mu = x.omega().scaled(t as i64);
    weyl_dim_in(x.root_system(), &mu)
}

/// Degree of `X` in the embedding by `O(1)`: `d!` times the leading
/// coefficient of the Hilbert polynomial, read off as the `d`-th forward
/// difference of the Hilbert function at `t = 0`.
pub fn degree(x: &IsotropicGrassmannian) -> BigUint {
    let d = x.dimension();
    let mut table: Vec<BigInt> = (0..=d as u64)
        .map(|t| BigInt::from(hilbert_value(x, t)))
        .collect();
    for level in 0..d {
        for i in 0..d - level {
            table[i] = &table[i + 1] - &table[i];
        }
    }
    table[0]
        .to_biguint()
        .expect("degree of a projective variety is positive")
}

/// `dim H^0(X, U^lambda)`.
pub fn global_sections(x: &IsotropicGrassmannian, lambda: &Weight) -> Result<BigUint> {
    Ok(cohomology(x, lambda)?.dim_in_degree(0))
}
