//! The isotropic Grassmannian `X = G/P_k` and its Levi-dominant weights.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::root_system::{LieFamily, Root, RootSystem, Weight};

/// The two components of the maximal orthogonal Grassmannian in type D.
/// `Plus` is `G/P_n`, `Minus` is `G/P_{n-1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpinorComponent {
    Plus,
    Minus,
}

impl fmt::Display for SpinorComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpinorComponent::Plus => "plus",
            SpinorComponent::Minus => "minus",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsotropicGrassmannian {
    family: LieFamily,
    n: usize,
    k: usize,
    component: Option<SpinorComponent>,
    roots: RootSystem,
}

/// The split `lambda + rho = (alpha | beta)`, kept doubled.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlphaBeta {
    pub alpha: Vec<i64>,
    pub beta: Vec<i64>,
}

impl AlphaBeta {
    pub fn alpha_weight(&self) -> Weight {
        Weight::from_doubled(self.alpha.clone())
    }

    pub fn beta_weight(&self) -> Weight {
        Weight::from_doubled(self.beta.clone())
    }
}

impl IsotropicGrassmannian {
    /// `G/P_k`. In type D, `k = n - 1` and `k = n` select the two spinor
    /// components of the maximal orthogonal Grassmannian.
    pub fn new(family: LieFamily, n: usize, k: usize) -> Result<Self> {
        let roots = RootSystem::new(family, n)?;
        if k == 0 || k > n {
            return Err(Error::NodeOutOfRange { n, k });
        }
        let component = match family {
            LieFamily::D if k == n => Some(SpinorComponent::Plus),
            LieFamily::D if k + 1 == n => Some(SpinorComponent::Minus),
            _ => None,
        };
        Ok(IsotropicGrassmannian {
            family,
            n,
            k,
            component,
            roots,
        })
    }

    /// A component of `OGr(n, 2n)`.
    pub fn spinor_variety(n: usize, component: SpinorComponent) -> Result<Self> {
        let k = match component {
            SpinorComponent::Plus => n,
            SpinorComponent::Minus => n.saturating_sub(1),
        };
        Self::new(LieFamily::D, n, k)
    }

    pub fn family(&self) -> LieFamily {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn node(&self) -> usize {
        self.k
    }

    pub fn component(&self) -> Option<SpinorComponent> {
        self.component
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.roots
    }

    pub fn is_maximal(&self) -> bool {
        self.k == self.n || self.component.is_some()
    }

    pub fn rho(&self) -> Weight {
        self.roots.rho()
    }

    /// The fundamental weight of the marked node; it generates `Pic X`.
    pub fn omega(&self) -> Weight {
        self.roots
            .fundamental_weight(self.k)
            .expect("node validated at construction")
    }

    pub fn dimension(&self) -> usize {
        let (n, k) = (self.n, self.k);
        match self.family {
            LieFamily::C => k * (2 * n - k) - k * (k - 1) / 2,
            LieFamily::B => k * (2 * n + 1 - k) - k * (k + 1) / 2,
            LieFamily::D if self.component.is_some() => n * (n - 1) / 2,
            LieFamily::D => k * (2 * n - k) - k * (k + 1) / 2,
        }
    }

    /// Positive roots pairing to zero with the marked fundamental weight:
    /// the positive roots of the Levi factor.
    pub fn levi_roots(&self) -> impl Iterator<Item = &Root> + '_ {
        let omega = self.omega();
        self.roots
            .positive_roots()
            .iter()
            .filter(move |r| omega.pair_doubled(r) == 0)
    }

    /// Positive roots with positive pairing against the marked fundamental
    /// weight. There are exactly `dimension()` of them.
    pub fn tangent_roots(&self) -> impl Iterator<Item = &Root> + '_ {
        let omega = self.omega();
        self.roots
            .positive_roots()
            .iter()
            .filter(move |r| omega.pair_doubled(r) != 0)
    }

    /// Applies the involution `lambda_n -> -lambda_n` on the minus spinor
    /// component so that its chamber becomes the `P_n` chamber.
    pub fn to_plus_chamber(&self, w: &Weight) -> Weight {
        match self.component {
            Some(SpinorComponent::Minus) => w.with_last_negated(),
            _ => w.clone(),
        }
    }

    pub fn check_weight(&self, lambda: &Weight) -> Result<()> {
        lambda.check_lattice(self.family, self.n)
    }

    pub fn is_l_dominant(&self, lambda: &Weight) -> Result<bool> {
        self.check_weight(lambda)?;
        let x = lambda.doubled();
        let (n, k) = (self.n, self.k);
        let descending = |s: &[i64]| s.windows(2).all(|p| p[0] >= p[1]);
        let ok = match (self.family, self.component) {
            (LieFamily::C | LieFamily::B, _) if k == n => descending(x),
            (LieFamily::C | LieFamily::B, _) => {
                descending(&x[..k]) && descending(&x[k..]) && x[n - 1] >= 0
            }
            (LieFamily::D, Some(SpinorComponent::Plus)) => descending(x),
            (LieFamily::D, Some(SpinorComponent::Minus)) => {
                descending(&x[..n - 1]) && x[n - 2] >= -x[n - 1]
            }
            (LieFamily::D, None) => {
                descending(&x[..k]) && descending(&x[k..n - 1]) && x[n - 2] >= x[n - 1].abs()
            }
        };
        Ok(ok)
    }

    pub fn require_l_dominant(&self, lambda: &Weight) -> Result<()> {
        if self.is_l_dominant(lambda)? {
            Ok(())
        } else {
            Err(Error::NotLDominant(lambda.to_string()))
        }
    }

    /// Splits `lambda + rho` into `(alpha, beta)`. For maximal varieties the
    /// whole vector is `alpha`; on the minus spinor component the split is
    /// taken after moving to the plus chamber.
    pub fn alpha_beta(&self, lambda: &Weight) -> Result<AlphaBeta> {
        self.require_l_dominant(lambda)?;
        let v = self.to_plus_chamber(&(lambda + &self.rho()));
        let v = v.into_doubled();
        if self.is_maximal() {
            return Ok(AlphaBeta {
                alpha: v,
                beta: Vec::new(),
            });
        }
        let beta = v[self.k..].to_vec();
        let mut alpha = v;
        alpha.truncate(self.k);
        Ok(AlphaBeta { alpha, beta })
    }

    /// Inverse of [`alpha_beta`](Self::alpha_beta).
    pub fn weight_from_split(&self, split: &AlphaBeta) -> Weight {
        let mut v = split.alpha.clone();
        v.extend_from_slice(&split.beta);
        let v = self.to_plus_chamber(&Weight::from_doubled(v));
        &v - &self.rho()
    }

    /// Short label in the usual notation: `IGr(2,8)`, `LGr(2,4)`, `OGr(3,10)`,
    /// `OGr(4,8):minus`.
    pub fn label(&self) -> String {
        let (n, k) = (self.n, self.k);
        match (self.family, self.component) {
            (LieFamily::C, _) if k == n => format!("LGr({n},{})", 2 * n),
            (LieFamily::C, _) => format!("IGr({k},{})", 2 * n),
            (LieFamily::B, _) => format!("OGr({k},{})", 2 * n + 1),
            (LieFamily::D, Some(c)) => format!("OGr({n},{}):{c}", 2 * n),
            (LieFamily::D, None) => format!("OGr({k},{})", 2 * n),
        }
    }
}

impl fmt::Display for IsotropicGrassmannian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} [{}{} / P{}]",
            self.label(),
            self.family,
            self.n,
            self.k
        )
    }
}

/// Every valid `(family, n, k)` with `n` in the given range.
pub fn all_varieties(ranks: std::ops::RangeInclusive<usize>) -> Vec<IsotropicGrassmannian> {
    let mut out = Vec::new();
    for family in LieFamily::ALL {
        for n in ranks.clone() {
            if n < family.min_rank() {
                continue;
            }
            for k in 1..=n {
                out.push(IsotropicGrassmannian::new(family, n, k).expect("valid parameters"));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use itertools::Itertools;

    fn w(s: &str) -> Weight {
        s.parse().unwrap()
    }

    fn x(f: LieFamily, n: usize, k: usize) -> IsotropicGrassmannian {
        IsotropicGrassmannian::new(f, n, k).unwrap()
    }

    #[test]
    fn dimensions() {
        assert_eq!(x(LieFamily::C, 4, 2).dimension(), 11);
        assert_eq!(x(LieFamily::B, 2, 1).dimension(), 3);
        assert_eq!(x(LieFamily::D, 4, 4).dimension(), 6);
        assert_eq!(x(LieFamily::D, 4, 3).dimension(), 6);
        assert_eq!(x(LieFamily::C, 2, 2).dimension(), 3);
        assert_eq!(x(LieFamily::D, 5, 3).dimension(), 15);
    }

    #[test]
    fn dimension_counts_tangent_roots() {
        for v in all_varieties(2..=9) {
            assert_eq!(v.dimension(), v.tangent_roots().count(), "{v}");
        }
    }

    #[test]
    fn b_and_c_dimensions_agree() {
        for n in 2..=12 {
            for k in 1..=n {
                assert_eq!(
                    x(LieFamily::B, n, k).dimension(),
                    x(LieFamily::C, n, k).dimension()
                );
            }
            assert_eq!(x(LieFamily::B, n, 1).dimension(), 2 * n - 1);
            if n >= 3 {
                assert_eq!(x(LieFamily::D, n, 1).dimension(), 2 * n - 2);
            }
        }
    }

    #[test]
    fn l_dominance() {
        let igr28 = x(LieFamily::C, 4, 2);
        assert!(igr28.is_l_dominant(&w("5,0,0,0")).unwrap());
        assert!(!igr28.is_l_dominant(&w("0,5,0,0")).unwrap());
        assert!(!igr28.is_l_dominant(&w("5,0,0,-1")).unwrap());
        assert!(igr28.is_l_dominant(&w("1/2,0,0,0")).is_err());
        assert!(igr28.is_l_dominant(&w("1,0,0")).is_err());

        let ogr310 = x(LieFamily::D, 5, 3);
        assert!(ogr310.is_l_dominant(&w("6,5,4,4,-4")).unwrap());
        assert!(!ogr310.is_l_dominant(&w("6,5,4,3,-4")).unwrap());
        assert!(ogr310.is_l_dominant(&w("1/2,1/2,1,0,0")).is_err());

        let lgr = x(LieFamily::C, 3, 3);
        assert!(lgr.is_l_dominant(&w("0,-1,-5")).unwrap());
        let ogr_b = x(LieFamily::B, 3, 3);
        assert!(ogr_b.is_l_dominant(&w("1/2,-1/2,-3/2")).unwrap());

        let minus = x(LieFamily::D, 4, 3);
        assert!(minus.is_l_dominant(&w("1,0,0,0")).unwrap());
        assert!(minus.is_l_dominant(&w("2,1,1,-1")).unwrap());
        assert!(!minus.is_l_dominant(&w("2,1,1,-2")).unwrap());
        assert!(minus.is_l_dominant(&w("2,1,1,5")).unwrap());
    }

    #[test]
    fn l_dominance_matches_levi_root_pairings() {
        // lambda is L-dominant iff lambda + rho pairs positively with every
        // positive Levi root
        for v in all_varieties(2..=4) {
            let rho = v.rho();
            let n = v.rank();
            let range: Vec<i64> = (-4..=4).collect();
            for coords in (0..n)
                .map(|_| range.iter().copied())
                .multi_cartesian_product()
            {
                let lambda = Weight::from_doubled(coords);
                if v.check_weight(&lambda).is_ok() {
                    let shifted = &lambda + &rho;
                    let levi = v.levi_roots().all(|r| shifted.pair_doubled(r) > 0);
                    assert_eq!(v.is_l_dominant(&lambda).unwrap(), levi, "{v} {lambda}");
                }
            }
        }
    }

    #[test]
    fn alpha_beta_examples() {
        let ab = x(LieFamily::C, 4, 2).alpha_beta(&w("5,0,0,0")).unwrap();
        assert_eq!(ab.alpha_weight(), w("9,3"));
        assert_eq!(ab.beta_weight(), w("2,1"));

        let ab = x(LieFamily::C, 2, 2).alpha_beta(&w("1,0")).unwrap();
        assert_eq!(ab.alpha_weight(), w("3,1"));
        assert!(ab.beta.is_empty());

        let ab = x(LieFamily::B, 4, 2)
            .alpha_beta(&w("11/2,1/2,1/2,1/2"))
            .unwrap();
        assert_eq!(ab.alpha_weight(), w("9,3"));
        assert_eq!(ab.beta_weight(), w("2,1"));

        assert!(matches!(
            x(LieFamily::C, 4, 2).alpha_beta(&w("0,5,0,0")),
            Err(Error::NotLDominant(_))
        ));
    }

    #[test]
    fn alpha_beta_round_trip_and_strictness() {
        for v in all_varieties(2..=4) {
            let n = v.rank();
            let range: Vec<i64> = (-4..=4).collect();
            for coords in (0..n)
                .map(|_| range.iter().copied())
                .multi_cartesian_product()
            {
                let lambda = Weight::from_doubled(coords);
                if v.check_weight(&lambda).is_ok() && v.is_l_dominant(&lambda).unwrap() {
                    let ab = v.alpha_beta(&lambda).unwrap();
                    assert!(ab.alpha.windows(2).all(|p| p[0] > p[1]), "{v} {lambda}");
                    assert!(
                        ab.beta.windows(2).all(|p| p[0] > p[1].abs()),
                        "{v} {lambda}"
                    );
                    if v.family() != LieFamily::D {
                        assert!(ab.beta.iter().all(|b| *b > 0));
                    }
                    assert_eq!(v.weight_from_split(&ab), lambda);
                }
            }
        }
    }

    #[test]
    fn labels() {
        assert_eq!(x(LieFamily::C, 4, 2).label(), "IGr(2,8)");
        assert_eq!(x(LieFamily::C, 2, 2).label(), "LGr(2,4)");
        assert_eq!(x(LieFamily::B, 4, 2).label(), "OGr(2,9)");
        assert_eq!(x(LieFamily::D, 5, 3).label(), "OGr(3,10)");
        assert_eq!(x(LieFamily::D, 4, 3).label(), "OGr(4,8):minus");
        assert_eq!(x(LieFamily::D, 4, 4).label(), "OGr(4,8):plus");
    }
}
