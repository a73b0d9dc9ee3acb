//! Root-system arithmetic written from scratch for cross-checking the library.
//! Coordinates are doubled so that half-integers stay integral.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rand::Rng;
use ulrich_core::{IsotropicGrassmannian, LieFamily, Weight};

/// Positive roots in plain integer coordinates.
pub fn roots(family: LieFamily, n: usize) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for i in 0..n {
        let mut e = vec![0; n];
        match family {
            LieFamily::B => e[i] = 1,
            LieFamily::C => e[i] = 2,
            LieFamily::D => continue,
        }
        out.push(e);
    }
    for i in 0..n {
        for j in i + 1..n {
            for s in [1, -1] {
                let mut r = vec![0; n];
                r[i] = 1;
                r[j] = s;
                out.push(r);
            }
        }
    }
    out
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Doubled rho: the plain sum of positive roots.
pub fn rho2(family: LieFamily, n: usize) -> Vec<i64> {
    let mut s = vec![0; n];
    for r in roots(family, n) {
        for (a, b) in s.iter_mut().zip(&r) {
            *a += b;
        }
    }
    s
}

/// Doubled omega for the node of `x`, written out per family.
pub fn omega2(x: &IsotropicGrassmannian) -> Vec<i64> {
    let (n, k) = (x.rank(), x.node());
    match (x.family(), k) {
        (LieFamily::B, k) if k == n => vec![1; n],
        (LieFamily::D, k) if k == n => vec![1; n],
        (LieFamily::D, k) if k + 1 == n => {
            let mut v = vec![1; n];
            v[n - 1] = -1;
            v
        }
        _ => (0..n).map(|i| if i < k { 2 } else { 0 }).collect(),
    }
}

pub struct Oracle {
    pub family: LieFamily,
    pub n: usize,
    pub roots: Vec<Vec<i64>>,
    pub rho2: Vec<i64>,
    pub omega2: Vec<i64>,
    pub k: usize,
    pub maximal: bool,
}

impl Oracle {
    pub fn new(x: &IsotropicGrassmannian) -> Self {
        Oracle {
            family: x.family(),
            n: x.rank(),
            roots: roots(x.family(), x.rank()),
            rho2: rho2(x.family(), x.rank()),
            omega2: omega2(x),
            k: x.node(),
            maximal: x.is_maximal(),
        }
    }

    pub fn tangent(&self) -> impl Iterator<Item = &Vec<i64>> {
        self.roots.iter().filter(|r| dot(r, &self.omega2) != 0)
    }

    pub fn levi(&self) -> impl Iterator<Item = &Vec<i64>> {
        self.roots.iter().filter(|r| dot(r, &self.omega2) == 0)
    }

    pub fn dimension(&self) -> usize {
        self.tangent().count()
    }

    pub fn in_lattice(&self, w2: &[i64]) -> bool {
        match self.family {
            LieFamily::C => w2.iter().all(|c| c % 2 == 0),
            _ => w2.iter().all(|c| c.rem_euclid(2) == w2[0].rem_euclid(2)),
        }
    }

    pub fn l_dominant(&self, lambda2: &[i64]) -> bool {
        self.in_lattice(lambda2) && self.levi().all(|r| dot(r, lambda2) >= 0)
    }

    /// Integer values of `(lambda+rho, r) / (omega, r)` over tangent roots, sorted.
    pub fn irr(&self, lambda2: &[i64]) -> Vec<i64> {
        let v: Vec<i64> = lambda2.iter().zip(&self.rho2).map(|(a, b)| a + b).collect();
        let mut out: Vec<i64> = self
            .tangent()
            .filter_map(|r| {
                let (num, den) = (dot(r, &v), dot(r, &self.omega2));
                (num % den == 0).then(|| num / den)
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn is_ulrich(&self, lambda2: &[i64]) -> bool {
        self.irr(lambda2) == (1..=self.dimension() as i64).collect::<Vec<_>>()
    }

    fn product<'a>(
        &self,
        lambda2: &[i64],
        over: impl Iterator<Item = &'a Vec<i64>>,
    ) -> BigRational {
        let mut p = BigRational::one();
        for r in over {
            let num: i64 = r
                .iter()
                .zip(lambda2.iter().zip(&self.rho2))
                .map(|(a, (l, h))| a * (l + h))
                .sum();
            let den = dot(r, &self.rho2);
            p *= BigRational::new(BigInt::from(num), BigInt::from(den));
        }
        p
    }

    /// Dimension of the irreducible G-module of highest weight `lambda`.
    pub fn weyl_dim(&self, lambda2: &[i64]) -> BigInt {
        let p = self.product(lambda2, self.roots.iter());
        assert!(p.is_integer());
        p.to_integer()
    }

    /// Dimension of the irreducible Levi module of highest weight `lambda`.
    pub fn levi_dim(&self, lambda2: &[i64]) -> BigInt {
        let p = self.product(lambda2, self.levi());
        assert!(p.is_integer());
        p.to_integer()
    }

    /// `d! * prod (omega, a) / (rho, a)` over tangent roots.
    pub fn degree(&self) -> BigInt {
        let mut p = BigRational::one();
        for r in self.tangent() {
            p *= BigRational::new(
                BigInt::from(dot(r, &self.omega2)),
                BigInt::from(dot(r, &self.rho2)),
            );
        }
        for i in 1..=self.dimension() {
            p *= BigRational::from_integer(BigInt::from(i));
        }
        assert!(p.is_integer());
        p.to_integer()
    }

    /// Random L-dominant weight with `lambda + rho` inside `[-bound, bound]`,
    /// by rejection.
    pub fn random_l_dominant<R: Rng>(&self, rng: &mut R, bound: i64) -> Vec<i64> {
        loop {
            let parity = match self.family {
                LieFamily::C => 0,
                _ => rng.gen_range(0..2),
            };
            let mut v: Vec<i64> = (0..self.n)
                .map(|_| {
                    let mut c = rng.gen_range(-2 * bound..=2 * bound);
                    if c.rem_euclid(2) != parity {
                        c += if c < 2 * bound { 1 } else { -1 };
                    }
                    c
                })
                .collect();
            // sorting each block raises the acceptance rate; the oracle
            // still decides
            let split = if self.maximal { self.n } else { self.k };
            v[..split].sort_unstable_by(|a, b| b.cmp(a));
            v[split..].sort_unstable_by(|a, b| b.cmp(a));
            if rng.gen_bool(0.5) {
                let last = self.n - 1;
                v[last] = -v[last];
            }
            let lambda: Vec<i64> = v.iter().zip(&self.rho2).map(|(a, b)| a - b).collect();
            if self.l_dominant(&lambda) {
                return lambda;
            }
        }
    }
}

pub fn weight(lambda2: &[i64]) -> Weight {
    Weight::from_doubled(lambda2.to_vec())
}
