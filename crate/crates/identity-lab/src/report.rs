//! Check outcomes and first-failure witnesses.

use std::fmt;
use std::time::Duration;

use num_bigint::BigInt;
use series_core::{CycInt, QSeries, ZLaurentSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
        })
    }
}

/// A compared quantity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Value {
    Int(BigInt),
    Cyc(CycInt),
    Text(String),
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Int(v) => write!(f, "{v}"),
            Value::Cyc(v) => write!(f, "{v}"),
            Value::Text(v) => f.write_str(v),
        }
    }
}

impl From<CycInt> for Value {
    fn from(c: CycInt) -> Self {
        match c.as_integer() {
            Some(v) if c.order() == 1 => Value::Int(v.clone()),
            _ => Value::Cyc(c),
        }
    }
}

impl From<BigInt> for Value {
    fn from(v: BigInt) -> Self {
        Value::Int(v)
    }
}

impl From<i64> for Value {
    fn from(v: i64) -> Self {
        Value::Int(v.into())
    }
}

impl From<u64> for Value {
    fn from(v: u64) -> Self {
        Value::Int(v.into())
    }
}

/// Where a comparison first failed: the coefficient of z^m q^n (m absent for one-variable series).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub n: usize,
    pub m: Option<i64>,
    pub expected: Value,
    pub got: Value,
}

impl Witness {
    pub fn new(n: usize, m: Option<i64>, expected: impl Into<Value>, got: impl Into<Value>) -> Self {
        Witness { n, m, expected: expected.into(), got: got.into() }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.m {
            Some(m) => write!(f, "n={} m={}: expected {}, got {}", self.n, m, self.expected, self.got),
            None => write!(f, "n={}: expected {}, got {}", self.n, self.expected, self.got),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub check_id: String,
    pub order_checked: usize,
    pub status: Status,
    pub witness: Option<Witness>,
    pub elapsed: Duration,
}

impl CheckReport {
    pub fn from_witness(check_id: &str, order_checked: usize, witness: Option<Witness>) -> Self {
        CheckReport {
            check_id: check_id.to_string(),
            order_checked,
            status: if witness.is_some() { Status::Fail } else { Status::Pass },
            witness,
            elapsed: Duration::ZERO,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} (order {})", self.check_id, self.status, self.order_checked)?;
        if let Some(w) = &self.witness {
            write!(f, " at {w}")?;
        }
        Ok(())
    }
}

/// First coefficient where two q-series differ, mapping index i to exponent `map(i)`.
pub fn series_witness(expected: &QSeries, got: &QSeries, map: impl Fn(usize) -> usize) -> Option<Witness> {
    expected.first_difference(got).map(|i| Witness::new(map(i), None, expected.coeff(i).clone(), got.coeff(i).clone()))
}

/// First coefficient (smallest n, then |m|, negative m first) where two tables differ.
pub fn laurent_witness(expected: &ZLaurentSeries, got: &ZLaurentSeries) -> Option<Witness> {
    expected.first_difference(got).map(|(n, m)| Witness::new(n, Some(m), expected.get(m, n), got.get(m, n)))
}

/// Keep the witness with the smallest n.
pub fn earliest(a: Option<Witness>, b: Option<Witness>) -> Option<Witness> {
    match (a, b) {
        (Some(x), Some(y)) => {
            Some(if (y.n, y.m.map(i64::unsigned_abs)) < (x.n, x.m.map(i64::unsigned_abs)) { y } else { x })
        }
        (x, y) => x.or(y),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_follows_witness() {
        let r = CheckReport::from_witness("x", 3, None);
        assert!(r.passed());
        let r = CheckReport::from_witness("x", 3, Some(Witness::new(2, Some(-1), 1i64, 0i64)));
        assert_eq!(r.status, Status::Fail);
        assert_eq!(r.to_string(), "x fail (order 3) at n=2 m=-1: expected 1, got 0");
    }

    #[test]
    fn first_series_difference() {
        let a = QSeries::from_ints(1, 4, &[1, 2, 3, 4, 5]);
        let b = QSeries::from_ints(1, 4, &[1, 2, 0, 4, 0]);
        let w = series_witness(&a, &b, |i| 3 * i + 1).unwrap();
        assert_eq!((w.n, w.expected, w.got), (7, Value::Int(3.into()), Value::Int(0.into())));
    }

    #[test]
    fn earliest_prefers_small_n() {
        let a = Some(Witness::new(5, None, 0i64, 1i64));
        let b = Some(Witness::new(2, None, 0i64, 1i64));
        assert_eq!(earliest(a, b).unwrap().n, 2);
    }
}
