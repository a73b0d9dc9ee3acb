//! Parsing of variety descriptors, weights and twist ranges.

use std::ops::RangeInclusive;

use ulrich_core::{Error, IsotropicGrassmannian, LieFamily, Result, SpinorComponent, Weight};

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn parse_usize(s: &str, what: &str) -> Result<usize> {
    s.trim()
        .parse()
        .map_err(|_| parse_err(format!("bad {what} `{s}`")))
}

fn parse_component(s: &str) -> Result<SpinorComponent> {
    match s.trim().to_ascii_lowercase().as_str() {
        "plus" | "+" => Ok(SpinorComponent::Plus),
        "minus" | "-" => Ok(SpinorComponent::Minus),
        other => Err(parse_err(format!("unknown spinor component `{other}`"))),
    }
}

/// Accepts `C:n=4:k=2`, `IGr(2,8)`, `LGr(2,4)`, `OGr(3,10)`, `OGr(4,8):minus`
/// and `Q5`.
pub fn parse_variety(spec: &str) -> Result<IsotropicGrassmannian> {
    let spec = spec.trim();
    let (head, suffix) = match spec.rfind(')') {
        Some(close) => {
            let rest = spec[close + 1..].trim();
            let suffix = match rest.strip_prefix(':') {
                Some(c) => Some(parse_component(c)?),
                None if rest.is_empty() => None,
                None => return Err(parse_err(format!("trailing input `{rest}`"))),
            };
            (&spec[..=close], suffix)
        }
        None => (spec, None),
    };
    if let Some(open) = head.find('(') {
        let name = &head[..open];
        let args: Vec<&str> = head[open + 1..head.len() - 1].split(',').collect();
        if args.len() != 2 {
            return Err(parse_err(format!("expected two arguments in `{head}`")));
        }
        let k = parse_usize(args[0], "subspace dimension")?;
        let m = parse_usize(args[1], "ambient dimension")?;
        return grassmannian_alias(name, k, m, suffix);
    }
    if let Some(d) = head.strip_prefix('Q').or_else(|| head.strip_prefix('q')) {
        let d = parse_usize(d, "quadric dimension")?;
        return quadric(d);
    }
    explicit(head)
}

fn grassmannian_alias(
    name: &str,
    k: usize,
    m: usize,
    component: Option<SpinorComponent>,
) -> Result<IsotropicGrassmannian> {
    let half = |m: usize| {
        if m.is_multiple_of(2) {
            Ok(m / 2)
        } else {
            Err(parse_err(format!(
                "{name} needs an even ambient dimension, got {m}"
            )))
        }
    };
    let no_component = |x: IsotropicGrassmannian| match component {
        Some(_) => Err(parse_err("a spinor component only applies to OGr(n,2n)")),
        None => Ok(x),
    };
    match name.trim().to_ascii_lowercase().as_str() {
        "igr" => no_component(IsotropicGrassmannian::new(LieFamily::C, half(m)?, k)?),
        "lgr" => {
            let n = half(m)?;
            if k != n {
                return Err(parse_err(format!("LGr needs k = {n}, got {k}")));
            }
            no_component(IsotropicGrassmannian::new(LieFamily::C, n, n)?)
        }
        "ogr" if m % 2 == 1 => no_component(IsotropicGrassmannian::new(LieFamily::B, m / 2, k)?),
        "ogr" => {
            let n = m / 2;
            if k == n {
                IsotropicGrassmannian::spinor_variety(n, component.unwrap_or(SpinorComponent::Plus))
            } else if k + 1 == n {
                Err(parse_err(format!(
                    "OGr({k},{m}) is a two-step flag variety; use OGr({n},{m}):minus for the other spinor component"
                )))
            } else {
                no_component(IsotropicGrassmannian::new(LieFamily::D, n, k)?)
            }
        }
        other => Err(parse_err(format!("unknown variety `{other}`"))),
    }
}

fn quadric(d: usize) -> Result<IsotropicGrassmannian> {
    if d < 3 {
        return Err(parse_err(format!(
            "Q{d} is not covered; quadrics start at Q3"
        )));
    }
    if d % 2 == 1 {
        IsotropicGrassmannian::new(LieFamily::B, d.div_ceil(2), 1)
    } else {
        IsotropicGrassmannian::new(LieFamily::D, (d + 2) / 2, 1)
    }
}

/// `C:n=4:k=2`, optionally with `:plus` or `:minus` in type D.
fn explicit(spec: &str) -> Result<IsotropicGrassmannian> {
    let mut parts = spec.split(':');
    let family: LieFamily = parts.next().unwrap_or_default().trim().parse()?;
    let (mut n, mut k, mut component) = (None, None, None);
    for part in parts {
        match part.split_once('=') {
            Some(("n", v)) => n = Some(parse_usize(v, "rank")?),
            Some(("k", v)) => k = Some(parse_usize(v, "node")?),
            None => component = Some(parse_component(part)?),
            Some((key, _)) => return Err(parse_err(format!("unknown key `{key}`"))),
        }
    }
    let n = n.ok_or_else(|| parse_err("missing n="))?;
    match (k, component) {
        (_, Some(c)) if family == LieFamily::D => IsotropicGrassmannian::spinor_variety(n, c),
        (_, Some(_)) => Err(parse_err("spinor components exist only in type D")),
        (Some(k), None) => IsotropicGrassmannian::new(family, n, k),
        (None, None) => Err(parse_err("missing k=")),
    }
}

/// Coordinates `a,b/2,...` or the fundamental-weight form `w:c1,...,cn`.
pub fn parse_weight(x: &IsotropicGrassmannian, s: &str) -> Result<Weight> {
    let weight = match s.trim().strip_prefix("w:") {
        Some(coeffs) => {
            let coeffs: Vec<i64> = coeffs
                .split(',')
                .map(|c| {
                    c.trim()
                        .parse()
                        .map_err(|_| parse_err(format!("bad fundamental-weight coefficient `{c}`")))
                })
                .collect::<Result<_>>()?;
            if coeffs.len() != x.rank() {
                return Err(Error::LengthMismatch {
                    expected: x.rank(),
                    got: coeffs.len(),
                });
            }
            let mut doubled = vec![0; x.rank()];
            for (i, c) in coeffs.iter().enumerate() {
                let omega = x.root_system().fundamental_weight(i + 1)?;
                for (acc, v) in doubled.iter_mut().zip(omega.doubled()) {
                    *acc += c * v;
                }
            }
            Weight::from_doubled(doubled)
        }
        None => s.parse()?,
    };
    if weight.len() != x.rank() {
        return Err(Error::LengthMismatch {
            expected: x.rank(),
            got: weight.len(),
        });
    }
    x.check_weight(&weight)?;
    Ok(weight)
}

/// `a..b` (inclusive) or a single integer.
pub fn parse_twists(s: &str) -> Result<RangeInclusive<i64>> {
    let bad = || parse_err(format!("bad twist range `{s}`"));
    let int = |t: &str| t.trim().parse::<i64>().map_err(|_| bad());
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (int(a)?, int(b.strip_prefix('=').unwrap_or(b))?),
        None => {
            let t = int(s)?;
            (t, t)
        }
    };
    if lo > hi {
        return Err(bad());
    }
    Ok(lo..=hi)
}
