//! Truncated power series in `q` with coefficients in ℤ[ζ_t].

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::cyclotomic::CycInt;
use crate::error::{Result, SeriesError};

/// Σ_{n ≤ trunc} a_n q^n with every `a_n` in ℤ[ζ_t].
///
/// The coefficient vector always has length `trunc + 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QSeries {
    order: u32,
    coeffs: Vec<CycInt>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesOp {
    Add,
    Sub,
    Mul,
}

/// Apply `op` to two series over the same ring.
pub fn series_arith(a: &QSeries, b: &QSeries, op: SeriesOp) -> Result<QSeries> {
    match op {
        SeriesOp::Add => a.add(b),
        SeriesOp::Sub => a.sub(b),
        SeriesOp::Mul => a.mul(b),
    }
}

impl QSeries {
    pub fn zero(t: u32, trunc: usize) -> Self {
        QSeries { order: t, coeffs: vec![CycInt::zero(t); trunc + 1] }
    }

    pub fn one(t: u32, trunc: usize) -> Self {
        Self::monomial(CycInt::one(t), 0, trunc)
    }

    /// `c·q^k`, which is zero when `k > trunc`.
    pub fn monomial(c: CycInt, k: usize, trunc: usize) -> Self {
        let mut s = Self::zero(c.order(), trunc);
        if k <= trunc {
            s.coeffs[k] = c;
        }
        s
    }

    /// Integer coefficients, lowest power first; missing entries are zero.
    pub fn from_ints(t: u32, trunc: usize, values: &[i64]) -> Self {
        let mut s = Self::zero(t, trunc);
        for (n, &v) in values.iter().enumerate().take(trunc + 1) {
            s.coeffs[n] = CycInt::from_int(t, v);
        }
        s
    }

    pub fn from_bigints(t: u32, values: Vec<BigInt>) -> Self {
        assert!(!values.is_empty(), "a series needs at least the constant term");
        QSeries { order: t, coeffs: values.into_iter().map(|v| CycInt::from_int(t, v)).collect() }
    }

    /// Build from coefficients; all must share one ring and there must be at least one.
    pub fn from_coeffs(coeffs: Vec<CycInt>) -> Result<Self> {
        let t = coeffs.first().expect("a series needs at least the constant term").order();
        if let Some(bad) = coeffs.iter().find(|c| c.order() != t) {
            return Err(SeriesError::RingMismatch { left: t, right: bad.order() });
        }
        Ok(QSeries { order: t, coeffs })
    }

    /// Ring order `t` of ℤ[ζ_t].
    pub fn ring(&self) -> u32 {
        self.order
    }

    pub fn trunc(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &CycInt {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[CycInt] {
        &self.coeffs
    }

    pub fn coeff_mut(&mut self, n: usize) -> &mut CycInt {
        &mut self.coeffs[n]
    }

    /// Integer coefficients; `None` if some coefficient is not a rational integer.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs.iter().map(|c| c.as_integer().cloned()).collect()
    }

    pub fn truncate(&self, trunc: usize) -> Self {
        let n = trunc.min(self.trunc());
        QSeries { order: self.order, coeffs: self.coeffs[..=n].to_vec() }
    }

    /// Re-embed an integer series into ℤ[ζ_t].
    pub fn lift(&self, t: u32) -> Self {
        QSeries { order: t, coeffs: self.coeffs.iter().map(|c| c.lift(t)).collect() }
    }

    fn same_ring(&self, other: &QSeries) -> Result<()> {
        if self.order == other.order {
            Ok(())
        } else {
            Err(SeriesError::RingMismatch { left: self.order, right: other.order })
        }
    }

    pub fn add(&self, other: &QSeries) -> Result<QSeries> {
        self.same_ring(other)?;
        let n = self.trunc().min(other.trunc());
        let coeffs = (0..=n).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect();
        Ok(QSeries { order: self.order, coeffs })
    }

    pub fn sub(&self, other: &QSeries) -> Result<QSeries> {
        self.same_ring(other)?;
        let n = self.trunc().min(other.trunc());
        let coeffs = (0..=n).map(|i| &self.coeffs[i] - &other.coeffs[i]).collect();
        Ok(QSeries { order: self.order, coeffs })
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul(&self, other: &QSeries) -> Result<QSeries> {
        self.same_ring(other)?;
        let n = self.trunc().min(other.trunc());
        let mut out = Self::zero(self.order, n);
        for (i, a) in self.coeffs.iter().enumerate().take(n + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                if !b.is_zero() {
                    out.coeffs[i + j].add_mul(a, b);
                }
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> QSeries {
        QSeries { order: self.order, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, c: &CycInt) -> QSeries {
        assert_eq!(c.order(), self.order, "scalar ring mismatch");
        QSeries { order: self.order, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn scale_int(&self, c: i64) -> QSeries {
        let c = BigInt::from(c);
        QSeries { order: self.order, coeffs: self.coeffs.iter().map(|x| x.scale(&c)).collect() }
    }

    /// Multiply by `q^k`, keeping the truncation order.
    pub fn shift(&self, k: usize) -> QSeries {
        let mut out = Self::zero(self.order, self.trunc());
        for n in k..=self.trunc() {
            out.coeffs[n] = self.coeffs[n - k].clone();
        }
        out
    }

    /// Substitute `q -> q^k`; the result is truncated at `trunc`.
    pub fn dilate(&self, k: usize, trunc: usize) -> QSeries {
        assert!(k >= 1);
        assert!(trunc / k <= self.trunc(), "dilation needs more source coefficients");
        let mut out = Self::zero(self.order, trunc);
        for n in 0..=trunc / k {
            out.coeffs[n * k] = self.coeffs[n].clone();
        }
        out
    }

    /// Multiply in place by `(1 - c q^e)`.
    pub fn mul_one_minus(&mut self, c: &CycInt, e: usize) {
        assert!(e >= 1);
        for n in (e..self.coeffs.len()).rev() {
            let (lo, hi) = self.coeffs.split_at_mut(n);
            hi[0].sub_mul(&lo[n - e], c);
        }
    }

    /// Divide in place by `(1 - c q^e)`.
    pub fn div_one_minus(&mut self, c: &CycInt, e: usize) {
        assert!(e >= 1);
        for n in e..self.coeffs.len() {
            let (lo, hi) = self.coeffs.split_at_mut(n);
            hi[0].add_mul(&lo[n - e], c);
        }
    }

    /// Divide in place by `(1 - s q^e + q^{2e})`, i.e. by `(1 - ζq^e)(1 - ζ⁻¹q^e)` with `s = ζ + ζ⁻¹`.
    pub fn div_quadratic(&mut self, s: &CycInt, e: usize) {
        assert!(e >= 1);
        for n in e..self.coeffs.len() {
            let (lo, hi) = self.coeffs.split_at_mut(n);
            hi[0].add_mul(&lo[n - e], s);
            if n >= 2 * e {
                hi[0] -= &lo[n - 2 * e];
            }
        }
    }

    /// First index below both truncations where the series differ.
    pub fn first_difference(&self, other: &QSeries) -> Option<usize> {
        let n = self.trunc().min(other.trunc());
        (0..=n).find(|&i| self.coeffs[i] != other.coeffs[i])
    }

    /// Equality up to the smaller truncation order.
    pub fn agrees_with(&self, other: &QSeries) -> bool {
        self.order == other.order && self.first_difference(other).is_none()
    }

    /// Split into `t` components: component `r` collects `q^{tn+r}` reindexed as `q^n`.
    ///
    /// Component `r` is known to order `(trunc - r) / t`. Requires `t <= trunc + 1`.
    pub fn dissect(&self, t: usize) -> Vec<QSeries> {
        assert!(t >= 1, "dissection modulus must be positive");
        assert!(t <= self.coeffs.len(), "dissection modulus exceeds trunc + 1");
        let n = self.trunc();
        (0..t)
            .map(|r| QSeries {
                order: self.order,
                coeffs: (0..=(n - r) / t).map(|k| self.coeffs[t * k + r].clone()).collect(),
            })
            .collect()
    }

    /// Inverse of [`QSeries::dissect`]: Σ_r q^r · part_r(q^t), truncated at `trunc`.
    pub fn reassemble(parts: &[QSeries], trunc: usize) -> Result<QSeries> {
        let t = parts.len();
        assert!(t >= 1);
        let order = parts[0].order;
        let mut out = Self::zero(order, trunc);
        for (r, p) in parts.iter().enumerate() {
            p.same_ring(&parts[0])?;
            for (k, c) in p.coeffs.iter().enumerate() {
                let n = t * k + r;
                if n <= trunc {
                    out.coeffs[n] = c.clone();
                }
            }
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(CycInt::is_zero)
    }
}

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let plain = c.as_integer().is_some();
            match (n, plain) {
                (0, _) => write!(f, "{c}")?,
                (_, true) => write!(f, "{c}q^{n}")?,
                (_, false) => write!(f, "({c})q^{n}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.trunc() + 1)
    }
}

/// Coefficients as `i64`, panicking if any is not a small integer. Test helper.
pub fn small_ints(s: &QSeries) -> Vec<i64> {
    s.coeffs()
        .iter()
        .map(|c| {
            let v = c.as_integer().expect("non-integer coefficient");
            if v.is_zero() {
                0
            } else {
                i64::try_from(v).expect("coefficient too large")
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn geometric_inverse() {
        let a = QSeries::from_ints(1, 5, &[1, -1]);
        let b = QSeries::from_ints(1, 5, &[1; 6]);
        assert_eq!(a.mul(&b).unwrap(), QSeries::one(1, 5));
    }

    #[test]
    fn square_of_geometric_series() {
        let b = QSeries::from_ints(1, 5, &[1; 6]);
        let sq = b.mul(&b).unwrap();
        assert_eq!(small_ints(&sq)[3], 4);
    }

    #[test]
    fn truncation_is_minimum() {
        let a = QSeries::from_ints(1, 3, &[1, 2, 3, 4]);
        let b = QSeries::from_ints(1, 7, &[1]);
        assert_eq!(a.mul(&b).unwrap().trunc(), 3);
        assert_eq!(a.add(&b).unwrap().trunc(), 3);
    }

    #[test]
    fn ring_mismatch_is_rejected() {
        let a = QSeries::one(3, 4);
        let b = QSeries::one(5, 4);
        assert_eq!(a.add(&b), Err(SeriesError::RingMismatch { left: 3, right: 5 }));
        assert!(series_arith(&a, &b, SeriesOp::Mul).is_err());
    }

    #[test]
    fn dissect_small() {
        let s = QSeries::from_ints(1, 3, &[1, 1, 1, 1]);
        let parts = s.dissect(2);
        assert_eq!(small_ints(&parts[0]), vec![1, 1]);
        assert_eq!(small_ints(&parts[1]), vec![1, 1]);
        assert_eq!(QSeries::reassemble(&parts, 3).unwrap(), s);
    }

    #[test]
    fn dissection_component_orders() {
        let s = QSeries::from_ints(1, 10, &[0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10]);
        let parts = s.dissect(3);
        assert_eq!(parts.iter().map(QSeries::trunc).collect::<Vec<_>>(), vec![3, 3, 2]);
        assert_eq!(small_ints(&parts[1]), vec![1, 4, 7, 10]);
    }

    #[test]
    fn one_minus_roundtrip() {
        let z = CycInt::zeta_pow(5, 2);
        let mut s = QSeries::from_ints(5, 12, &[3, -1, 4, 1, 5]);
        let orig = s.clone();
        s.mul_one_minus(&z, 3);
        s.div_one_minus(&z, 3);
        assert_eq!(s, orig);
    }

    #[test]
    fn quadratic_division_matches_two_linear() {
        let z = CycInt::zeta_pow(5, 1);
        let zi = CycInt::zeta_pow(5, -1);
        let mut a = QSeries::one(5, 20);
        a.div_one_minus(&z, 2);
        a.div_one_minus(&zi, 2);
        let mut b = QSeries::one(5, 20);
        b.div_quadratic(&(&z + &zi), 2);
        assert_eq!(a, b);
    }

    #[test]
    fn display_is_readable() {
        let s = QSeries::from_ints(1, 3, &[1, -2, 0, 1]);
        assert_eq!(s.to_string(), "1 + -2q^1 + 1q^3 + O(q^4)");
    }
}
