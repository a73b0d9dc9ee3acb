//! Human, JSON and CSV renderings of command results.

use serde::Serialize;
use ulrich_core::bbw::global_sections;
use ulrich_core::reproduce::Report;
use ulrich_core::root_system::format_coord;
use ulrich_core::{
    bundle_rank, CohomologyResult, IsotropicGrassmannian, Result, SpinorComponent,
    UlrichCertificate, Weight,
};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    ClosedForm,
    Enumerated,
    Both,
}

#[derive(Serialize)]
pub struct VarietyRecord {
    pub family: String,
    pub n: usize,
    pub k: usize,
    pub component: Option<SpinorComponent>,
    pub label: String,
}

impl VarietyRecord {
    fn new(x: &IsotropicGrassmannian) -> Self {
        VarietyRecord {
            family: x.family().to_string(),
            n: x.rank(),
            k: x.node(),
            component: x.component(),
            label: x.label(),
        }
    }
}

#[derive(Serialize)]
pub struct WeightRecord {
    pub coords_doubled: Vec<i64>,
    pub coords: Vec<String>,
    pub rank: String,
    pub h0: String,
    pub provenance: Provenance,
}

fn coords(w: &Weight) -> Vec<String> {
    w.doubled().iter().map(|&c| format_coord(c)).collect()
}

/// Coordinates as `a,b/2,...`, which the weight parser reads back.
fn plain(w: &Weight) -> String {
    coords(w).join(",")
}

impl WeightRecord {
    pub fn new(x: &IsotropicGrassmannian, w: &Weight, provenance: Provenance) -> Result<Self> {
        Ok(WeightRecord {
            coords_doubled: w.doubled().to_vec(),
            coords: coords(w),
            rank: bundle_rank(x, w)?.to_string(),
            h0: global_sections(x, w)?.to_string(),
            provenance,
        })
    }
}

fn print_json<T: Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("serializable")
    );
}

fn print_csv<R: Serialize>(rows: impl IntoIterator<Item = R>) {
    let mut w = csv::Writer::from_writer(std::io::stdout());
    for row in rows {
        w.serialize(row).expect("stdout");
    }
    w.flush().expect("stdout");
}

#[derive(Serialize)]
struct WeightsDoc<'a> {
    schema_version: u32,
    variety: VarietyRecord,
    weights: &'a [WeightRecord],
    #[serde(skip_serializing_if = "Option::is_none")]
    matches_enumeration: Option<bool>,
}

#[derive(Serialize)]
struct WeightRow<'a> {
    variety: String,
    coords: String,
    rank: &'a str,
    h0: &'a str,
    provenance: Provenance,
}

pub fn weights(
    format: Format,
    x: &IsotropicGrassmannian,
    recs: &[WeightRecord],
    matched: Option<bool>,
) {
    match format {
        Format::Json => print_json(&WeightsDoc {
            schema_version: SCHEMA_VERSION,
            variety: VarietyRecord::new(x),
            weights: recs,
            matches_enumeration: matched,
        }),
        Format::Csv => print_csv(recs.iter().map(|r| WeightRow {
            variety: x.label(),
            coords: r.coords.join(","),
            rank: &r.rank,
            h0: &r.h0,
            provenance: r.provenance,
        })),
        Format::Human => {
            println!("{x}: {} weight(s), dimension {}", recs.len(), x.dimension());
            for r in recs {
                let prov = serde_json::to_value(r.provenance).expect("serializable");
                println!(
                    "  ({})  rank {}  h0 {}  [{}]",
                    r.coords.join(","),
                    r.rank,
                    r.h0,
                    prov.as_str().unwrap_or_default()
                );
            }
            match matched {
                Some(true) => println!("MATCH"),
                Some(false) => println!("MISMATCH"),
                None => {}
            }
        }
    }
}

#[derive(Serialize)]
struct CohomologyRow {
    twist: i64,
    degree: Option<usize>,
    highest_weight: Option<String>,
    dim: String,
}

#[derive(Serialize)]
struct CohomologyDoc<'a> {
    schema_version: u32,
    variety: VarietyRecord,
    weight: Vec<String>,
    rows: &'a [CohomologyRow],
}

pub fn cohomology(
    format: Format,
    x: &IsotropicGrassmannian,
    lambda: &Weight,
    rows: &[(i64, CohomologyResult)],
) {
    let rows: Vec<CohomologyRow> = rows
        .iter()
        .map(|(t, c)| match c {
            CohomologyResult::Zero => CohomologyRow {
                twist: *t,
                degree: None,
                highest_weight: None,
                dim: "0".into(),
            },
            CohomologyResult::NonZero {
                degree,
                highest_weight,
                dim,
            } => CohomologyRow {
                twist: *t,
                degree: Some(*degree),
                highest_weight: Some(plain(highest_weight)),
                dim: dim.to_string(),
            },
        })
        .collect();
    match format {
        Format::Json => print_json(&CohomologyDoc {
            schema_version: SCHEMA_VERSION,
            variety: VarietyRecord::new(x),
            weight: coords(lambda),
            rows: &rows,
        }),
        Format::Csv => print_csv(&rows),
        Format::Human => {
            println!("{x}, lambda = {lambda}");
            println!("{:>6}  {:>6}  {:<24}  dim", "t", "degree", "highest weight");
            for r in &rows {
                let degree = r.degree.map_or("-".to_string(), |d| d.to_string());
                let hw = r
                    .highest_weight
                    .as_deref()
                    .map_or("-".to_string(), |h| format!("({h})"));
                println!("{:>6}  {:>6}  {:<24}  {}", r.twist, degree, hw, r.dim);
            }
        }
    }
}

#[derive(Serialize)]
struct IrrRow {
    value: i64,
    source: String,
}

#[derive(Serialize)]
struct IrrDoc {
    schema_version: u32,
    variety: VarietyRecord,
    weight: Vec<String>,
    d: usize,
    irr: Vec<i64>,
    distinct: usize,
    is_ulrich: bool,
    contributions: Vec<IrrRow>,
}

fn irr_doc(x: &IsotropicGrassmannian, lambda: &Weight, cert: &UlrichCertificate) -> IrrDoc {
    IrrDoc {
        schema_version: SCHEMA_VERSION,
        variety: VarietyRecord::new(x),
        weight: coords(lambda),
        d: cert.d,
        irr: cert.irr_values.clone(),
        distinct: cert.distinct_count(),
        is_ulrich: cert.is_ulrich,
        contributions: cert
            .contributions
            .iter()
            .map(|(t, c)| IrrRow {
                value: *t,
                source: c.to_string(),
            })
            .collect(),
    }
}

fn values(v: &[i64]) -> String {
    v.iter().map(i64::to_string).collect::<Vec<_>>().join(",")
}

pub fn irr(format: Format, x: &IsotropicGrassmannian, lambda: &Weight, cert: &UlrichCertificate) {
    let doc = irr_doc(x, lambda, cert);
    match format {
        Format::Json => print_json(&doc),
        Format::Csv => print_csv(&doc.contributions),
        Format::Human => {
            println!("{x}, lambda = {lambda}, d = {}", doc.d);
            println!(
                "Irr = {{{}}} ({} values, {} distinct)",
                values(&doc.irr),
                doc.irr.len(),
                doc.distinct
            );
            for r in &doc.contributions {
                println!("  {:>4}  {}", r.value, r.source);
            }
        }
    }
}

#[derive(Serialize)]
struct VerdictRow {
    variety: String,
    coords: String,
    d: usize,
    irr: String,
    is_ulrich: bool,
}

pub fn verdict(
    format: Format,
    x: &IsotropicGrassmannian,
    lambda: &Weight,
    cert: &UlrichCertificate,
) {
    match format {
        Format::Json => print_json(&irr_doc(x, lambda, cert)),
        Format::Csv => print_csv([VerdictRow {
            variety: x.label(),
            coords: plain(lambda),
            d: cert.d,
            irr: values(&cert.irr_values),
            is_ulrich: cert.is_ulrich,
        }]),
        Format::Human => {
            let word = if cert.is_ulrich {
                "Ulrich"
            } else {
                "not Ulrich"
            };
            println!("{x}, lambda = {lambda}: {word}");
            println!("Irr = {{{}}}, d = {}", values(&cert.irr_values), cert.d);
            if !cert.is_ulrich {
                let missing: Vec<i64> = (1..=cert.d as i64)
                    .filter(|t| !cert.irr_values.contains(t))
                    .collect();
                let mut repeated = cert.irr_values.clone();
                repeated.dedup();
                let repeated: Vec<i64> = repeated
                    .into_iter()
                    .filter(|t| cert.irr_values.iter().filter(|u| *u == t).count() > 1)
                    .collect();
                let outside: Vec<i64> = cert
                    .irr_values
                    .iter()
                    .copied()
                    .filter(|t| *t < 1 || *t > cert.d as i64)
                    .collect();
                println!(
                    "missing {{{}}}, repeated {{{}}}, outside 1..d {{{}}}",
                    values(&missing),
                    values(&repeated),
                    values(&outside)
                );
            }
        }
    }
}

#[derive(Serialize)]
struct CheckRow<'a> {
    id: u32,
    name: &'a str,
    passed: bool,
    elapsed_ms: u128,
    detail: &'a str,
}

pub fn report(format: Format, report: &Report) {
    match format {
        Format::Json => print_json(report),
        Format::Csv => print_csv(report.checks.iter().map(|c| CheckRow {
            id: c.id,
            name: &c.name,
            passed: c.passed,
            elapsed_ms: c.elapsed_ms,
            detail: &c.detail,
        })),
        Format::Human => {
            for c in &report.checks {
                let tag = if c.passed { "PASS" } else { "FAIL" };
                println!(
                    "[{tag}] {:>2} {} ({} ms): {}",
                    c.id, c.name, c.elapsed_ms, c.detail
                );
            }
            let passed = report.checks.iter().filter(|c| c.passed).count();
            println!("{passed}/{} checks passed", report.checks.len());
        }
    }
}
