//! The desk-scale reproduction report: every classification claim checked
//! against the brute-force search and the cohomological Ulrich test.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bbw::{bundle_rank, degree, global_sections};
use crate::classification::{
    canonical_order, classify, lgr_forced_alpha, ulrich_weights_ogr2_even, ulrich_weights_ogr3_even,
};
use crate::enumeration::{enumerate_ulrich, verify_twist_vanishing, EnumerateOptions};
use crate::error::Result;
use crate::grassmannian::{all_varieties, IsotropicGrassmannian};
use crate::root_system::{LieFamily, Weight};
use crate::sampling::random_l_dominant;
use crate::ulrich::{irr_closed, irr_generic};

pub const REPORT_SCHEMA_VERSION: u32 = 1;

/// Deliberate defects for exercising the failure path of the report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// Use `k(2n-k) - k(k+1)/2` as the type B dimension.
    WrongBDimension,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReproduceOptions {
    pub seed: u64,
    pub fault: Option<Fault>,
}

impl Default for ReproduceOptions {
    fn default() -> Self {
        ReproduceOptions {
            seed: 0x5eed,
            fault: None,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckOutcome {
    pub id: u32,
    pub name: String,
    pub passed: bool,
    pub detail: String,
    pub elapsed_ms: u128,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema_version: u32,
    pub passed: bool,
    pub checks: Vec<CheckOutcome>,
}

fn x(family: LieFamily, n: usize, k: usize) -> IsotropicGrassmannian {
    IsotropicGrassmannian::new(family, n, k).expect("valid variety")
}

fn forced(v: &IsotropicGrassmannian) -> Result<Vec<Weight>> {
    enumerate_ulrich(v, EnumerateOptions { force: true })
}

fn show(weights: &[Weight]) -> String {
    let parts: Vec<String> = weights.iter().map(Weight::to_string).collect();
    format!("{{{}}}", parts.join(", "))
}

type CheckResult = Result<(bool, String)>;

struct Checker {
    opts: ReproduceOptions,
    rng: ChaCha8Rng,
    /// Distinct-Irr counts from the randomized oracle comparison, reused by
    /// the cardinality check.
    max_excess: Option<i64>,
}

impl Checker {
    fn dimension(&self, v: &IsotropicGrassmannian) -> usize {
        match (self.opts.fault, v.family()) {
            (Some(Fault::WrongBDimension), LieFamily::B) => {
                let (n, k) = (v.rank(), v.node());
                k * (2 * n - k) - k * (k + 1) / 2
            }
            _ => v.dimension(),
        }
    }

    fn oracle_equivalence(&mut self) -> CheckResult {
        let varieties = all_varieties(2..=6);
        let mut mismatches = 0;
        let mut max_excess = i64::MIN;
        for _ in 0..10_000 {
            let v = &varieties[self.rng.gen_range(0..varieties.len())];
            let bound = 2 * v.dimension() as i64;
            let lambda = random_l_dominant(v, &mut self.rng, bound);
            let generic = irr_generic(v, &lambda)?;
            let closed = irr_closed(v, &lambda)?;
            if generic.irr_values != closed.irr_values {
                mismatches += 1;
            }
            max_excess = max_excess.max(generic.distinct_count() as i64 - v.dimension() as i64);
        }
        self.max_excess = Some(max_excess);
        Ok((
            mismatches == 0,
            format!("{mismatches} mismatches in 10000 samples"),
        ))
    }

    fn igr28(&mut self) -> CheckResult {
        let v = x(LieFamily::C, 4, 2);
        let expect: Vec<Weight> = ["5,0,0,0", "3,2,2,2"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        let closed = classify(&v);
        let found = forced(&v)?;
        Ok((
            closed == expect && found == expect,
            format!("classify {} enumerate {}", show(&closed), show(&found)),
        ))
    }

    fn igr220(&mut self) -> CheckResult {
        let v = x(LieFamily::C, 10, 2);
        let expect: Vec<Weight> = [
            "17,0,0,0,0,0,0,0,0,0",
            "11,6,6,6,6,6,6,6,0,0",
            "9,8,8,8,6,6,4,4,2,2",
        ]
        .iter()
        .map(|s| s.parse().unwrap())
        .collect();
        let closed = classify(&v);
        let found = forced(&v)?;
        Ok((
            closed == expect && found == expect,
            format!("classify {} enumerate {}", show(&closed), show(&found)),
        ))
    }

    fn c_middle_range(&mut self) -> CheckResult {
        let mut nonempty = Vec::new();
        for n in 4..=6 {
            for k in 3..n {
                let v = x(LieFamily::C, n, k);
                if !forced(&v)?.is_empty() {
                    nonempty.push(v.label());
                }
            }
        }
        Ok((nonempty.is_empty(), format!("nonempty: {nonempty:?}")))
    }

    fn lagrangian(&mut self) -> CheckResult {
        let mut ok = forced(&x(LieFamily::C, 2, 2))? == vec![Weight::from_integers(&[1, 0])];
        for n in 3..=5 {
            ok &= forced(&x(LieFamily::C, n, n))?.is_empty();
        }
        let chain = lgr_forced_alpha(50);
        let chain_ok = chain[0] == 1
            && chain
                .iter()
                .enumerate()
                .skip(1)
                .all(|(i, a)| *a == 4 * (i as i64 + 1) - 5);
        Ok((
            ok && chain_ok,
            format!("enumeration {ok}, forced chain {chain_ok}"),
        ))
    }

    fn shift(&mut self) -> CheckResult {
        let mut bad = Vec::new();
        for n in 2..=6 {
            for k in 1..n {
                let b = forced(&x(LieFamily::B, n, k))?;
                let c: Vec<Weight> = forced(&x(LieFamily::C, n, k))?
                    .iter()
                    .map(|w| w.shifted_doubled(1))
                    .collect();
                if b != c {
                    bad.push(format!("n={n} k={k}"));
                }
            }
        }
        Ok((bad.is_empty(), format!("disagreements: {bad:?}")))
    }

    fn quadrics(&mut self) -> CheckResult {
        let mut bad = Vec::new();
        for n in 2..=8 {
            let odd = x(LieFamily::B, n, 1);
            let spinor = Weight::from_doubled(vec![1; n]);
            let d = self.dimension(&odd);
            let irr = irr_generic(&odd, &spinor)?.irr_values;
            let expected_irr: Vec<i64> = (1..=d as i64).collect();
            if d != 2 * n - 1 || irr != expected_irr {
                bad.push(format!("Q{}: dimension {d}", 2 * n - 1));
            }
            if classify(&odd) != vec![spinor.clone()] || forced(&odd)? != vec![spinor.clone()] {
                bad.push(format!("Q{}", 2 * n - 1));
            }
            if n >= 3 {
                let even = x(LieFamily::D, n, 1);
                let both = vec![spinor.clone(), spinor.with_last_negated()];
                if classify(&even) != both || forced(&even)? != both {
                    bad.push(format!("Q{}", 2 * n - 2));
                }
            }
        }
        Ok((bad.is_empty(), format!("failures: {bad:?}")))
    }

    fn d_small(&mut self) -> CheckResult {
        let mut bad = Vec::new();
        for n in 4..=6 {
            let v = x(LieFamily::D, n, 2);
            let expect = canonical_order(ulrich_weights_ogr2_even(n));
            let found = forced(&v)?;
            if found != expect {
                let extra: Vec<Weight> = found
                    .iter()
                    .filter(|w| !expect.contains(w))
                    .cloned()
                    .collect();
                let missing: Vec<Weight> = expect
                    .iter()
                    .filter(|w| !found.contains(w))
                    .cloned()
                    .collect();
                bad.push(format!(
                    "{} extra {} missing {}",
                    v.label(),
                    show(&extra),
                    show(&missing)
                ));
            }
        }
        let v5 = x(LieFamily::D, 5, 3);
        if canonical_order(forced(&v5)?) != canonical_order(ulrich_weights_ogr3_even(5)) {
            bad.push(v5.label());
        }
        let v6 = x(LieFamily::D, 6, 3);
        if !forced(&v6)?.is_empty() {
            bad.push(v6.label());
        }
        Ok((bad.is_empty(), format!("failures: {bad:?}")))
    }

    fn d_maximal(&mut self) -> CheckResult {
        let expect = [
            (2, Weight::zero(2).to_string()),
            (3, Weight::zero(3).to_string()),
            (4, "(1,0,0,0)".to_string()),
        ];
        let mut bad = Vec::new();
        for (n, w) in expect {
            let found = forced(&x(LieFamily::D, n, n))?;
            if found.len() != 1 || found[0].to_string() != w {
                bad.push(format!("OGr({n},{}) gave {}", 2 * n, show(&found)));
            }
        }
        let found = forced(&x(LieFamily::D, 5, 5))?;
        if !found.is_empty() {
            bad.push(format!("OGr(5,10) gave {}", show(&found)));
        }
        Ok((bad.is_empty(), format!("failures: {bad:?}")))
    }

    fn criterion_equivalence(&mut self) -> CheckResult {
        let mut bad = Vec::new();
        for v in all_varieties(2..=6) {
            for lambda in classify(&v) {
                if !verify_twist_vanishing(&v, &lambda)? {
                    bad.push(format!("{} {lambda}", v.label()));
                }
            }
        }
        let varieties = all_varieties(2..=6);
        let mut disagreements = 0;
        let mut tested = 0;
        while tested < 1000 {
            let v = &varieties[self.rng.gen_range(0..varieties.len())];
            let bound = v.dimension() as i64;
            let lambda = random_l_dominant(v, &mut self.rng, bound);
            let cert = irr_generic(v, &lambda)?;
            if cert.is_ulrich {
                continue;
            }
            tested += 1;
            if verify_twist_vanishing(v, &lambda)? {
                disagreements += 1;
            }
        }
        Ok((
            bad.is_empty() && disagreements == 0,
            format!("classified failures {bad:?}, random disagreements {disagreements}/1000"),
        ))
    }

    fn rank_degree(&mut self) -> CheckResult {
        let mut bad = Vec::new();
        let mut checked = 0;
        for v in all_varieties(2..=6) {
            let deg = degree(&v);
            for lambda in classify(&v) {
                checked += 1;
                if global_sections(&v, &lambda)? != bundle_rank(&v, &lambda)? * &deg {
                    bad.push(format!("{} {lambda}", v.label()));
                }
            }
        }
        Ok((
            bad.is_empty(),
            format!("{checked} bundles, failures {bad:?}"),
        ))
    }

    fn cardinality(&mut self) -> CheckResult {
        if self.max_excess.is_none() {
            self.oracle_equivalence()?;
        }
        let excess = self.max_excess.unwrap_or(0);
        Ok((excess <= 0, format!("max distinct |Irr| - d = {excess}")))
    }
}

pub const CHECK_NAMES: [&str; 12] = [
    "oracle equivalence (generic vs closed Irr)",
    "IGr(2,8) classification",
    "IGr(2,20) classification",
    "type C nonexistence for 2<k<n",
    "Lagrangian Grassmannians",
    "B/C half shift",
    "quadrics",
    "OGr(2,2n) and OGr(3,2n)",
    "maximal even orthogonal",
    "Irr criterion vs twisted cohomology",
    "Ulrich rank-degree identity",
    "Irr cardinality bound",
];

/// Runs the selected checks (`1..=12`; all when `only` is empty).
pub fn run(opts: ReproduceOptions, only: &[u32]) -> Report {
    let mut checker = Checker {
        opts,
        rng: ChaCha8Rng::seed_from_u64(opts.seed),
        max_excess: None,
    };
    let mut checks = Vec::new();
    for (i, name) in CHECK_NAMES.iter().enumerate() {
        let id = i as u32 + 1;
        if !only.is_empty() && !only.contains(&id) {
            continue;
        }
        let start = Instant::now();
        let result = match id {
            1 => checker.oracle_equivalence(),
            2 => checker.igr28(),
            3 => checker.igr220(),
            4 => checker.c_middle_range(),
            5 => checker.lagrangian(),
            6 => checker.shift(),
            7 => checker.quadrics(),
            8 => checker.d_small(),
            9 => checker.d_maximal(),
            10 => checker.criterion_equivalence(),
            11 => checker.rank_degree(),
            _ => checker.cardinality(),
        };
        let (passed, detail) = result.unwrap_or_else(|e| (false, format!("error: {e}")));
        checks.push(CheckOutcome {
            id,
            name: name.to_string(),
            passed,
            detail,
            elapsed_ms: start.elapsed().as_millis(),
        });
    }
    Report {
        schema_version: REPORT_SCHEMA_VERSION,
        passed: checks.iter().all(|c| c.passed),
        checks,
    }
}
