//! Closed-form extremal numbers and bounds, evaluated exactly in `i128`
//! wherever the quantity is an integer or a rational.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::FormulaError;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Value {
    Integer(i128),
    /// Reduced fraction with positive denominator.
    Rational { num: i128, den: i128 },
    Real(f64),
}

impl Value {
    pub fn as_f64(&self) -> f64 {
        match *self {
            Value::Integer(v) => v as f64,
            Value::Rational { num, den } => num as f64 / den as f64,
            Value::Real(v) => v,
        }
    }

    pub fn as_integer(&self) -> Option<i128> {
        match *self {
            Value::Integer(v) => Some(v),
            Value::Rational { num, den: 1 } => Some(num),
            _ => None,
        }
    }

    fn rational(num: i128, den: i128) -> Value {
        let g = gcd(num.abs(), den.abs()).max(1);
        let s = if den < 0 { -1 } else { 1 };
        Value::Rational { num: s * num / g, den: s * den / g }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Integer(v) => write!(f, "{v}"),
            Value::Rational { num, den: 1 } => write!(f, "{num}"),
            Value::Rational { num, den } => write!(f, "{num}/{den}"),
            Value::Real(v) => write!(f, "{v}"),
        }
    }
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Where a parameter point sits relative to the range a formula is proven for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RangeFlag {
    Proven,
    /// Below `floor((19t-9)/2)` but above Moon's `(9t-11)/2`.
    ValidPerMoon,
    UnprovenRange,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FormulaValue {
    pub name: String,
    pub params: BTreeMap<String, i128>,
    pub value: Value,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub range: Option<RangeFlag>,
    /// Companion predicate, where the formula has one.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub equality_attained: Option<bool>,
}

impl FormulaValue {
    fn new(name: &str, params: &[(&str, usize)], value: Value) -> Self {
        FormulaValue {
            name: name.to_string(),
            params: params.iter().map(|&(k, v)| (k.to_string(), v as i128)).collect(),
            value,
            range: None,
            equality_attained: None,
        }
    }
}

fn domain(msg: impl Into<String>) -> FormulaError {
    FormulaError::Domain(msg.into())
}

fn binom2(x: i128) -> i128 {
    x * (x - 1) / 2
}

/// `C(t-1, 2) + (t-1)(n-t+1) + floor((n-t+1)^2 / 4)`.
pub fn ex_tc3_value(n: usize, t: usize) -> i128 {
    let (n, t) = (n as i128, t as i128);
    let m = n - t + 1;
    binom2(t - 1) + (t - 1) * m + m * m / 4
}

pub fn ex_tc3_range(n: usize, t: usize) -> RangeFlag {
    let (n, t) = (n as i128, t as i128);
    if n >= (19 * t - 9) / 2 {
        RangeFlag::Proven
    } else if 2 * n > 9 * t - 11 {
        RangeFlag::ValidPerMoon
    } else {
        RangeFlag::UnprovenRange
    }
}

/// `ex(n, tC_3)` with its range flag.
pub fn ex_tc3(n: usize, t: usize) -> Result<FormulaValue, FormulaError> {
    if t == 0 || n < t {
        return Err(domain(format!("ex_tC3 needs n >= t >= 1 (n={n}, t={t})")));
    }
    let mut f = FormulaValue::new("ex-tc3", &[("n", n), ("t", t)], Value::Integer(ex_tc3_value(n, t)));
    f.range = Some(ex_tc3_range(n, t));
    Ok(f)
}

pub fn chvatal_hanson_value(nu: usize, delta: usize) -> i128 {
    let (nu, d) = (nu as i128, delta as i128);
    d * nu + (d / 2) * (nu / ((d + 1) / 2))
}

/// Maximum edge count with matching number at most `nu` and maximum degree
/// at most `delta`.
pub fn chvatal_hanson(nu: usize, delta: usize) -> Result<FormulaValue, FormulaError> {
    if nu == 0 || delta == 0 {
        return Err(domain("chvatal_hanson needs nu, delta >= 1"));
    }
    let v = chvatal_hanson_value(nu, delta);
    debug_assert!(v <= (nu * (delta + 1)) as i128);
    Ok(FormulaValue::new("chvatal-hanson", &[("nu", nu), ("delta", delta)], Value::Integer(v)))
}

/// `(l-2) n / 2`, the bound on `ex(n, P_l)`.
pub fn erdos_gallai_path_bound(n: usize, l: usize) -> Result<FormulaValue, FormulaError> {
    if l < 2 || n < l {
        return Err(domain(format!("path bound needs n >= l >= 2 (n={n}, l={l})")));
    }
    let mut f = FormulaValue::new(
        "path-bound",
        &[("n", n), ("l", l)],
        Value::rational((l as i128 - 2) * n as i128, 2),
    );
    f.equality_attained = Some(equality_attained(n, l));
    Ok(f)
}

/// Equality in the path bound holds exactly when `(l-1) | n`.
pub fn equality_attained(n: usize, l: usize) -> bool {
    l >= 2 && n.is_multiple_of(l - 1)
}

/// `(l-1) n (n^{1/l} + 16)`, the bound on `ex(n, C_{2l})`.
pub fn even_cycle_bound(n: usize, l: usize) -> Result<FormulaValue, FormulaError> {
    if l < 2 || n == 0 {
        return Err(domain(format!("even cycle bound needs l >= 2, n >= 1 (n={n}, l={l})")));
    }
    let nf = n as f64;
    let v = (l as f64 - 1.0) * nf * (nf.powf(1.0 / l as f64) + 16.0);
    Ok(FormulaValue::new("even-cycle-bound", &[("n", n), ("l", l)], Value::Real(v)))
}

pub fn theorem11_threshold_value(t: usize, l: usize) -> i128 {
    let (t, l) = (t as i128, l as i128);
    let a = 8 * t * l + 4 * l + 3 * t - 6;
    a * a / (4 * (t / 2)) + 8 * t * l + 4 * t + 4 * l - 5
}

/// The vertex count from which `K_{t-1} + T_{n-t+1,2}` is the unique
/// extremal graph for `tC_{2l+1}`.
pub fn theorem11_threshold(t: usize, l: usize) -> Result<FormulaValue, FormulaError> {
    if t < 2 || l < 2 {
        return Err(domain(format!("threshold needs t, l >= 2 (t={t}, l={l})")));
    }
    Ok(FormulaValue::new("theorem11-threshold", &[("t", t), ("l", l)], Value::Integer(theorem11_threshold_value(t, l))))
}

/// `e(K_{t-1}) + e(T_{n-t+1,2}) + (t-1)(n-t+1)`.
pub fn erdos_moon_edges(n: usize, t: usize) -> Result<FormulaValue, FormulaError> {
    if t == 0 || n < t {
        return Err(domain(format!("needs n >= t >= 1 (n={n}, t={t})")));
    }
    let (ni, ti) = (n as i128, t as i128);
    let m = ni - ti + 1;
    let turan = (m / 2) * ((m + 1) / 2);
    let v = binom2(ti - 1) + turan + (ti - 1) * m;
    Ok(FormulaValue::new("erdos-moon-edges", &[("n", n), ("t", t)], Value::Integer(v)))
}

/// `l n^{1 + 1/l}`, the edge bound on a `C_{2l}`-heavy extremal graph.
pub fn dense_edge_bound(n: usize, l: usize) -> f64 {
    let nf = n as f64;
    l as f64 * nf.powf(1.0 + 1.0 / l as f64)
}

/// `2 lambda n^2`, the strict bound on the sum of squared degrees.
pub fn degree_square_bound(n: usize, lambda: usize) -> i128 {
    2 * lambda as i128 * (n as i128).pow(2)
}

pub const NAMES: &[&str] = &[
    "ex-tc3",
    "chvatal-hanson",
    "path-bound",
    "even-cycle-bound",
    "theorem11-threshold",
    "erdos-moon-edges",
];

/// Dispatches by formula name, reading the parameters it needs from `params`.
pub fn evaluate(name: &str, params: &BTreeMap<String, usize>) -> Result<FormulaValue, FormulaError> {
    let get = |k: &str| params.get(k).copied().ok_or_else(|| domain(format!("{name} needs --{k}")));
    match name {
        "ex-tc3" => ex_tc3(get("n")?, get("t")?),
        "chvatal-hanson" => chvatal_hanson(get("nu")?, get("delta")?),
        "path-bound" => erdos_gallai_path_bound(get("n")?, get("l")?),
        "even-cycle-bound" => even_cycle_bound(get("n")?, get("l")?),
        "theorem11-threshold" => theorem11_threshold(get("t")?, get("l")?),
        "erdos-moon-edges" => erdos_moon_edges(get("n")?, get("t")?),
        other => Err(FormulaError::Unknown(other.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::erdos_moon_graph;

    #[test]
    fn ex_tc3_examples() {
        let f = ex_tc3(14, 2).unwrap();
        assert_eq!(f.value, Value::Integer(55));
        assert_eq!(f.range, Some(RangeFlag::Proven));
        let f = ex_tc3(8, 2).unwrap();
        assert_eq!(f.value, Value::Integer(19));
        assert_eq!(f.range, Some(RangeFlag::ValidPerMoon));
        for n in 1..60 {
            assert_eq!(ex_tc3_value(n, 1), (n * n / 4) as i128);
        }
        assert_eq!(ex_tc3_range(3, 2), RangeFlag::UnprovenRange);
        assert!(ex_tc3(3, 0).is_err());
    }

    #[test]
    fn ex_tc3_matches_construction() {
        for n in 1..=200 {
            for t in 1..=n {
                let g = erdos_moon_graph(n, t).unwrap();
                assert_eq!(ex_tc3_value(n, t), g.edge_count() as i128, "n={n} t={t}");
                assert_eq!(erdos_moon_edges(n, t).unwrap().value, Value::Integer(g.edge_count() as i128));
            }
        }
    }

    #[test]
    fn chvatal_hanson_examples() {
        assert_eq!(chvatal_hanson(2, 3).unwrap().value, Value::Integer(7));
        assert_eq!(chvatal_hanson(1, 1).unwrap().value, Value::Integer(1));
        assert_eq!(chvatal_hanson(3, 3).unwrap().value, Value::Integer(10));
        assert!(chvatal_hanson(0, 3).is_err());
        for nu in 1..=100 {
            for d in 1..=100 {
                assert!(chvatal_hanson_value(nu, d) <= (nu * (d + 1)) as i128);
            }
        }
    }

    #[test]
    fn path_bound_examples() {
        let f = erdos_gallai_path_bound(6, 4).unwrap();
        assert_eq!(f.value.as_integer(), Some(6));
        assert_eq!(f.equality_attained, Some(true));
        let f = erdos_gallai_path_bound(7, 4).unwrap();
        assert_eq!(f.value.as_integer(), Some(7));
        assert_eq!(f.equality_attained, Some(false));
        assert_eq!(erdos_gallai_path_bound(5, 2).unwrap().value.as_integer(), Some(0));
        assert_eq!(erdos_gallai_path_bound(5, 3).unwrap().value, Value::Rational { num: 5, den: 2 });
        assert!(erdos_gallai_path_bound(2, 3).is_err());
    }

    #[test]
    fn even_cycle_examples() {
        assert!((even_cycle_bound(100, 2).unwrap().value.as_f64() - 2600.0).abs() < 1e-9);
        assert!((even_cycle_bound(16, 2).unwrap().value.as_f64() - 320.0).abs() < 1e-9);
        let spp = crate::constructions::s_graph(100, 1, crate::SVariant::PlusPlus).unwrap();
        assert_eq!(spp.edge_count(), 148);
        assert!(148.0 <= even_cycle_bound(100, 2).unwrap().value.as_f64());
    }

    #[test]
    fn threshold_examples() {
        assert_eq!(theorem11_threshold_value(2, 2), 443);
        assert_eq!(theorem11_threshold_value(2, 3), 963);
        assert_eq!(theorem11_threshold_value(3, 2), 933);
        assert!(theorem11_threshold(1, 2).is_err());
        assert!(theorem11_threshold(2, 1).is_err());
        // large values stay exact
        assert!(theorem11_threshold_value(1000, 1000) > i32::MAX as i128);
    }

    #[test]
    fn erdos_moon_edges_examples() {
        assert_eq!(erdos_moon_edges(10, 2).unwrap().value, Value::Integer(29));
        assert_eq!(erdos_moon_edges(14, 3).unwrap().value, Value::Integer(61));
    }

    #[test]
    fn dispatcher_and_serde() {
        let p: BTreeMap<String, usize> = [("n".to_string(), 14), ("t".to_string(), 2)].into();
        let f = evaluate("ex-tc3", &p).unwrap();
        assert_eq!(f.value, Value::Integer(55));
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(json, r#"{"name":"ex-tc3","params":{"n":14,"t":2},"value":{"integer":55},"range":"proven"}"#);
        assert_eq!(serde_json::from_str::<FormulaValue>(&json).unwrap(), f);
        assert!(matches!(evaluate("nope", &p), Err(FormulaError::Unknown(_))));
        assert!(matches!(evaluate("chvatal-hanson", &p), Err(FormulaError::Domain(_))));
    }
}
