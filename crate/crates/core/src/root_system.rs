//! Weights and roots of the classical root systems `B_n`, `C_n` and `D_n`.
//!
//! Weights live in the standard orthonormal basis `e_1, ..., e_n`. Spinor
//! weights have half-integer coordinates, so every [`Weight`] stores twice its
//! coordinates and all arithmetic stays in the integers.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_rational::Rational64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum LieFamily {
    B,
    C,
    D,
}

impl LieFamily {
    pub const ALL: [LieFamily; 3] = [LieFamily::B, LieFamily::C, LieFamily::D];

    pub fn min_rank(self) -> usize {
        2
    }

    pub fn check_rank(self, n: usize) -> Result<()> {
        if n < self.min_rank() {
            return Err(Error::InvalidRank { family: self, n });
        }
        Ok(())
    }

    /// Whether half-integer weights belong to the weight lattice.
    pub fn has_spinor_weights(self) -> bool {
        !matches!(self, LieFamily::C)
    }
}

impl fmt::Display for LieFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            LieFamily::B => "B",
            LieFamily::C => "C",
            LieFamily::D => "D",
        };
        f.write_str(s)
    }
}

impl FromStr for LieFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "B" | "b" => Ok(LieFamily::B),
            "C" | "c" => Ok(LieFamily::C),
            "D" | "d" => Ok(LieFamily::D),
            other => Err(Error::Parse(format!("unknown family {other:?}"))),
        }
    }
}

/// A point of the weight lattice, stored as doubled coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Weight {
    doubled: Vec<i64>,
}

impl Weight {
    pub fn from_doubled(doubled: Vec<i64>) -> Self {
        Weight { doubled }
    }

    pub fn from_integers(coords: &[i64]) -> Self {
        Weight {
            doubled: coords.iter().map(|c| 2 * c).collect(),
        }
    }

    pub fn zero(n: usize) -> Self {
        Weight {
            doubled: vec![0; n],
        }
    }

    pub fn doubled(&self) -> &[i64] {
        &self.doubled
    }

    pub fn into_doubled(self) -> Vec<i64> {
        self.doubled
    }

    pub fn len(&self) -> usize {
        self.doubled.len()
    }

    pub fn is_empty(&self) -> bool {
        self.doubled.is_empty()
    }

    pub fn coord(&self, i: usize) -> Rational64 {
        Rational64::new(self.doubled[i], 2)
    }

    pub fn is_integral(&self) -> bool {
        self.doubled.iter().all(|c| c % 2 == 0)
    }

    pub fn is_half_odd(&self) -> bool {
        self.doubled.iter().all(|c| c.rem_euclid(2) == 1)
    }

    /// Checks membership in the weight lattice of `family` at rank `n`.
    pub fn check_lattice(&self, family: LieFamily, n: usize) -> Result<()> {
        if self.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                got: self.len(),
            });
        }
        let ok = match family {
            LieFamily::C => self.is_integral(),
            LieFamily::B | LieFamily::D => self.is_integral() || self.is_half_odd(),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidWeight(format!(
                "{self} is not in the weight lattice of type {family}"
            )))
        }
    }

    /// Twice the Euclidean pairing with a root.
    pub fn pair_doubled(&self, root: &Root) -> i64 {
        self.doubled
            .iter()
            .zip(&root.coords)
            .map(|(w, r)| w * r)
            .sum()
    }

    pub fn scaled(&self, t: i64) -> Weight {
        Weight {
            doubled: self.doubled.iter().map(|c| c * t).collect(),
        }
    }

    /// The image under the involution negating the last coordinate.
    pub fn with_last_negated(&self) -> Weight {
        let mut doubled = self.doubled.clone();
        if let Some(last) = doubled.last_mut() {
            *last = -*last;
        }
        Weight { doubled }
    }

    /// Adds `c` to every coordinate, with `c` given doubled.
    pub fn shifted_doubled(&self, c: i64) -> Weight {
        Weight {
            doubled: self.doubled.iter().map(|x| x + c).collect(),
        }
    }
}

fn write_half(f: &mut fmt::Formatter<'_>, doubled: i64) -> fmt::Result {
    if doubled % 2 == 0 {
        write!(f, "{}", doubled / 2)
    } else {
        write!(f, "{doubled}/2")
    }
}

/// Exact text form of a single doubled coordinate: `"a"` or `"a/2"`.
pub fn format_coord(doubled: i64) -> String {
    struct C(i64);
    impl fmt::Display for C {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write_half(f, self.0)
        }
    }
    C(doubled).to_string()
}

/// Parses `"a"` or `"a/2"` into a doubled coordinate.
pub fn parse_coord(s: &str) -> Result<i64> {
    let s = s.trim();
    let bad = || Error::Parse(format!("bad coordinate {s:?}"));
    match s.split_once('/') {
        None => s.parse::<i64>().map(|a| 2 * a).map_err(|_| bad()),
        Some((num, den)) => {
            let num: i64 = num.trim().parse().map_err(|_| bad())?;
            match den.trim() {
                "1" => Ok(2 * num),
                "2" => Ok(num),
                _ => Err(bad()),
            }
        }
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, &c) in self.doubled.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write_half(f, c)?;
        }
        f.write_str(")")
    }
}

impl FromStr for Weight {
    type Err = Error;

    /// Accepts `"1,0,0"`, `"(1/2,1/2)"` and the like.
    fn from_str(s: &str) -> Result<Self> {
        let body = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .trim();
        if body.is_empty() {
            return Err(Error::Parse("empty weight".into()));
        }
        let doubled = body.split(',').map(parse_coord).collect::<Result<_>>()?;
        Ok(Weight { doubled })
    }
}

impl Add for &Weight {
    type Output = Weight;

    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.len(), rhs.len(), "weight length mismatch");
        Weight {
            doubled: self
                .doubled
                .iter()
                .zip(&rhs.doubled)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Weight {
    type Output = Weight;

    fn sub(self, rhs: &Weight) -> Weight {
        assert_eq!(self.len(), rhs.len(), "weight length mismatch");
        Weight {
            doubled: self
                .doubled
                .iter()
                .zip(&rhs.doubled)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Weight {
    type Output = Weight;

    fn neg(self) -> Weight {
        self.scaled(-1)
    }
}

/// A root written in the standard basis; entries are small integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Root {
    coords: Vec<i64>,
}

impl Root {
    pub fn coords(&self) -> &[i64] {
        &self.coords
    }

    fn unit(n: usize, i: usize, scale: i64) -> Root {
        let mut coords = vec![0; n];
        coords[i] = scale;
        Root { coords }
    }

    fn pair(n: usize, i: usize, j: usize, sign: i64) -> Root {
        let mut coords = vec![0; n];
        coords[i] = 1;
        coords[j] = sign;
        Root { coords }
    }

    /// Indices of the nonzero coordinates.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.coords
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0)
            .map(|(i, _)| i)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.coords.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = if c.abs() == 1 {
                String::new()
            } else {
                c.abs().to_string()
            };
            write!(f, "{sign}{mag}e{}", i + 1)?;
            first = false;
        }
        Ok(())
    }
}

/// Result of moving a regular weight into the dominant chamber.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Dominantized {
    pub dominant: Weight,
    pub length: usize,
}

/// A root system of type `B_n`, `C_n` or `D_n` with its positive roots
/// precomputed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystem {
    family: LieFamily,
    n: usize,
    positive: Vec<Root>,
}

impl RootSystem {
    pub fn new(family: LieFamily, n: usize) -> Result<Self> {
        family.check_rank(n)?;
        let mut positive = Vec::with_capacity(n * n);
        for i in 0..n {
            match family {
                LieFamily::C => positive.push(Root::unit(n, i, 2)),
                LieFamily::B => positive.push(Root::unit(n, i, 1)),
                LieFamily::D => {}
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                positive.push(Root::pair(n, i, j, -1));
                positive.push(Root::pair(n, i, j, 1));
            }
        }
        Ok(RootSystem {
            family,
            n,
            positive,
        })
    }

    pub fn family(&self) -> LieFamily {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    /// Simple roots in the standard numbering.
    pub fn simple_roots(&self) -> Vec<Root> {
        let n = self.n;
        let mut simple: Vec<Root> = (0..n - 1).map(|i| Root::pair(n, i, i + 1, -1)).collect();
        simple.push(match self.family {
            LieFamily::C => Root::unit(n, n - 1, 2),
            LieFamily::B => Root::unit(n, n - 1, 1),
            LieFamily::D => Root::pair(n, n - 2, n - 1, 1),
        });
        simple
    }

    pub fn rho(&self) -> Weight {
        let n = self.n as i64;
        let doubled = (0..n)
            .map(|i| match self.family {
                LieFamily::C => 2 * (n - i),
                LieFamily::B => 2 * (n - i) - 1,
                LieFamily::D => 2 * (n - 1 - i),
            })
            .collect();
        Weight { doubled }
    }

    pub fn fundamental_weight(&self, k: usize) -> Result<Weight> {
        let n = self.n;
        if k == 0 || k > n {
            return Err(Error::NodeOutOfRange { n, k });
        }
        let mut doubled = vec![0; n];
        match (self.family, k) {
            (LieFamily::B, k) if k == n => doubled.fill(1),
            (LieFamily::D, k) if k >= n - 1 => {
                doubled.fill(1);
                if k == n - 1 {
                    doubled[n - 1] = -1;
                }
            }
            _ => doubled[..k].fill(2),
        }
        Ok(Weight { doubled })
    }

    fn check_len(&self, w: &Weight) {
        assert_eq!(
            w.len(),
            self.n,
            "weight has wrong length for rank {}",
            self.n
        );
    }

    pub fn is_singular(&self, w: &Weight) -> bool {
        self.check_len(w);
        self.positive.iter().any(|r| w.pair_doubled(r) == 0)
    }

    /// G-dominance: nonnegative pairing with every simple root.
    pub fn is_dominant(&self, w: &Weight) -> bool {
        self.check_len(w);
        self.simple_roots().iter().all(|r| w.pair_doubled(r) >= 0)
    }

    /// Moves a regular weight into the dominant chamber. Returns `None` for
    /// singular weights. The length is the number of positive roots pairing
    /// negatively with `w`.
    pub fn dominantize(&self, w: &Weight) -> Option<Dominantized> {
        if self.is_singular(w) {
            return None;
        }
        let length = self
            .positive
            .iter()
            .filter(|r| w.pair_doubled(r) < 0)
            .count();
        let negatives = w.doubled.iter().filter(|c| **c < 0).count();
        let mut abs: Vec<i64> = w.doubled.iter().map(|c| c.abs()).collect();
        abs.sort_unstable_by(|a, b| b.cmp(a));
        if self.family == LieFamily::D && negatives % 2 == 1 {
            let last = abs.len() - 1;
            abs[last] = -abs[last];
        }
        Some(Dominantized {
            dominant: Weight { doubled: abs },
            length,
        })
    }
}

pub fn rho(family: LieFamily, n: usize) -> Result<Weight> {
    Ok(RootSystem::new(family, n)?.rho())
}

pub fn positive_roots(family: LieFamily, n: usize) -> Result<Vec<Root>> {
    Ok(RootSystem::new(family, n)?.positive)
}

pub fn fundamental_weight(family: LieFamily, n: usize, k: usize) -> Result<Weight> {
    RootSystem::new(family, n)?.fundamental_weight(k)
}

/// Exact Euclidean pairing.
pub fn inner(w: &Weight, r: &Root) -> Result<Rational64> {
    if w.len() != r.coords.len() {
        return Err(Error::LengthMismatch {
            expected: r.coords.len(),
            got: w.len(),
        });
    }
    Ok(Rational64::new(w.pair_doubled(r), 2))
}

pub fn is_singular(w: &Weight, family: LieFamily, n: usize) -> Result<bool> {
    let rs = RootSystem::new(family, n)?;
    w.check_lattice(family, n)?;
    Ok(rs.is_singular(w))
}

pub fn dominantize(w: &Weight, family: LieFamily, n: usize) -> Result<Option<Dominantized>> {
    let rs = RootSystem::new(family, n)?;
    w.check_lattice(family, n)?;
    Ok(rs.dominantize(w))
}
