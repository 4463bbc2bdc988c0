//! Two-variable series Σ c(m,n) z^m q^n with integer coefficients and |m| ≤ n.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::cyclotomic::CycInt;
use crate::error::{Result, SeriesError};
use crate::qseries::QSeries;

/// Row `n` is a Laurent polynomial in `z` stored on `-n..=n` (index `m + n`).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ZLaurentSeries {
    rows: Vec<Vec<BigInt>>,
}

impl ZLaurentSeries {
    pub fn zero(trunc: usize) -> Self {
        ZLaurentSeries { rows: (0..=trunc).map(|n| vec![BigInt::zero(); 2 * n + 1]).collect() }
    }

    pub fn one(trunc: usize) -> Self {
        let mut s = Self::zero(trunc);
        s.rows[0][0] = BigInt::from(1);
        s
    }

    /// `z^m q^n`, or zero if `n > trunc`.
    pub fn monomial(m: i64, n: usize, trunc: usize) -> Result<Self> {
        let mut s = Self::zero(trunc);
        if n <= trunc {
            s.add_at(m, n, &BigInt::from(1))?;
        }
        Ok(s)
    }

    /// An integer series in `q` alone (all mass at `z^0`).
    pub fn from_q_series(coeffs: &[BigInt]) -> Self {
        let mut s = Self::zero(coeffs.len() - 1);
        for (n, c) in coeffs.iter().enumerate() {
            s.rows[n][n] = c.clone();
        }
        s
    }

    /// Build from explicit rows; row `n` must have length `2n+1`.
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        for (n, r) in rows.iter().enumerate() {
            if r.len() != 2 * n + 1 {
                return Err(SeriesError::SupportBound { n, m: (r.len() as i64 - 1) / 2 });
            }
        }
        assert!(!rows.is_empty(), "a series needs row 0");
        Ok(ZLaurentSeries { rows })
    }

    pub fn trunc(&self) -> usize {
        self.rows.len() - 1
    }

    /// Coefficient of `z^m q^n`; zero outside the support.
    pub fn get(&self, m: i64, n: usize) -> BigInt {
        if n > self.trunc() || m.unsigned_abs() as usize > n {
            BigInt::zero()
        } else {
            self.rows[n][(m + n as i64) as usize].clone()
        }
    }

    /// Row `n` as a slice indexed by `m + n`.
    pub fn row(&self, n: usize) -> &[BigInt] {
        &self.rows[n]
    }

    pub fn add_at(&mut self, m: i64, n: usize, v: &BigInt) -> Result<()> {
        if m.unsigned_abs() as usize > n {
            return Err(SeriesError::SupportBound { n, m });
        }
        self.rows[n][(m + n as i64) as usize] += v;
        Ok(())
    }

    pub fn truncate(&self, trunc: usize) -> Self {
        ZLaurentSeries { rows: self.rows[..=trunc.min(self.trunc())].to_vec() }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.trunc().min(other.trunc());
        let rows = (0..=n).map(|i| self.rows[i].iter().zip(&other.rows[i]).map(|(a, b)| a + b).collect()).collect();
        ZLaurentSeries { rows }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        ZLaurentSeries { rows: self.rows.iter().map(|r| r.iter().map(|x| x * c).collect()).collect() }
    }

    /// Full product in both variables, truncated in `q` at the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.trunc().min(other.trunc());
        let mut out = Self::zero(n);
        for a in 0..=n {
            for (i, x) in self.rows[a].iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                let ma = i as i64 - a as i64;
                for b in 0..=(n - a) {
                    for (j, y) in other.rows[b].iter().enumerate() {
                        if y.is_zero() {
                            continue;
                        }
                        let m = ma + j as i64 - b as i64;
                        let idx = (m + (a + b) as i64) as usize;
                        out.rows[a + b][idx] += x * y;
                    }
                }
            }
        }
        out
    }

    /// Multiply by an integer series in `q` alone.
    pub fn mul_q_series(&self, coeffs: &[BigInt]) -> Self {
        let n = self.trunc().min(coeffs.len() - 1);
        let mut out = Self::zero(n);
        for (k, c) in coeffs.iter().enumerate().take(n + 1) {
            if c.is_zero() {
                continue;
            }
            for a in 0..=(n - k) {
                let dst = &mut out.rows[a + k];
                for (i, x) in self.rows[a].iter().enumerate() {
                    if !x.is_zero() {
                        dst[i + k] += x * c;
                    }
                }
            }
        }
        out
    }

    /// Multiply by `q^k`.
    pub fn shift_q(&self, k: usize) -> Self {
        let mut out = Self::zero(self.trunc());
        for n in k..=self.trunc() {
            let src = &self.rows[n - k];
            out.rows[n][k..k + src.len()].clone_from_slice(src);
        }
        out
    }

    /// Multiply in place by `(1 − c z^a q^k)` with `|a| ≤ k`.
    pub fn mul_binomial(&mut self, c: i64, a: i64, k: usize) {
        assert!(k >= 1 && a.unsigned_abs() as usize <= k, "factor would break the support bound");
        let c = BigInt::from(c);
        for n in (k..self.rows.len()).rev() {
            let (lo, hi) = self.rows.split_at_mut(n);
            let src = &lo[n - k];
            let off = (k as i64 + a) as usize;
            for (j, x) in src.iter().enumerate() {
                if !x.is_zero() {
                    hi[0][j + off] -= x * &c;
                }
            }
        }
    }

    /// Divide in place by `(1 − z^a q^k)` with `|a| ≤ k`.
    pub fn div_binomial(&mut self, a: i64, k: usize) {
        assert!(k >= 1 && a.unsigned_abs() as usize <= k, "factor would break the support bound");
        let off = (k as i64 + a) as usize;
        for n in k..self.rows.len() {
            let (lo, hi) = self.rows.split_at_mut(n);
            let src = &lo[n - k];
            let dst = &mut hi[0];
            for (j, x) in src.iter().enumerate() {
                if !x.is_zero() {
                    dst[j + off] += x;
                }
            }
        }
    }

    /// Multiply by `(1 − z)(1 − z⁻¹) = 2 − z − z⁻¹`.
    ///
    /// Fails if some row `n` has mass at `|m| = n`, since the product would leave the support.
    pub fn stencil(&self) -> Result<Self> {
        let mut out = Self::zero(self.trunc());
        for n in 0..=self.trunc() {
            let r = &self.rows[n];
            let w = r.len();
            for (i, x) in r.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                if i == 0 || i + 1 == w {
                    return Err(SeriesError::SupportBound { n, m: n as i64 + 1 });
                }
                out.rows[n][i] += x * 2;
                out.rows[n][i - 1] -= x;
                out.rows[n][i + 1] -= x;
            }
        }
        Ok(out)
    }

    pub fn row_sum(&self, n: usize) -> BigInt {
        self.rows[n].iter().sum()
    }

    /// Σ_m c(m,n) ζ_t^m for each n.
    pub fn specialize(&self, t: u32) -> Result<QSeries> {
        specialize_rows(&self.rows, t)
    }

    /// First coefficient where the series differ, by smallest `n`, then `|m|`, then negative `m` first.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, i64)> {
        let n = self.trunc().min(other.trunc());
        (0..=n).find_map(|k| {
            let r1 = &self.rows[k];
            let r2 = &other.rows[k];
            (0..=k as i64)
                .flat_map(|a| if a == 0 { vec![0] } else { vec![-a, a] })
                .find(|&m| r1[(m + k as i64) as usize] != r2[(m + k as i64) as usize])
                .map(|m| (k, m))
        })
    }
}

/// Σ_m c(m,n) ζ_t^m for rows stored on `-n..=n`; this is `specialize_at_root`.
pub fn specialize_rows(rows: &[Vec<BigInt>], t: u32) -> Result<QSeries> {
    if rows.is_empty() {
        return Err(SeriesError::IncompleteTable { needed: 0, have: 0 });
    }
    let coeffs = rows
        .iter()
        .enumerate()
        .map(|(n, r)| {
            if r.len() != 2 * n + 1 {
                return Err(SeriesError::IncompleteTable { needed: 2 * n + 1, have: r.len() });
            }
            let mut raw = vec![BigInt::zero(); t as usize];
            for (i, c) in r.iter().enumerate() {
                let m = i as i64 - n as i64;
                raw[m.rem_euclid(t as i64) as usize] += c;
            }
            Ok(CycInt::from_raw(t, &raw))
        })
        .collect::<Result<Vec<_>>>()?;
    QSeries::from_coeffs(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rank_gf(n: usize) -> ZLaurentSeries {
        // Σ q^{k²}/((zq;q)_k (z⁻¹q;q)_k)
        let mut total = ZLaurentSeries::zero(n);
        let mut k = 0;
        while k * k <= n {
            let mut term = ZLaurentSeries::monomial(0, k * k, n).unwrap();
            for j in 1..=k {
                term.div_binomial(1, j);
                term.div_binomial(-1, j);
            }
            total = total.add(&term);
            k += 1;
        }
        total
    }

    #[test]
    fn rank_rows_sum_to_partition_numbers() {
        let s = rank_gf(12);
        let p = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77];
        for (n, &pn) in p.iter().enumerate() {
            assert_eq!(s.row_sum(n), BigInt::from(pn));
        }
        // rank of 4 partitions: 4 (3), 3+1 (1), 2+2 (0), 2+1+1 (-1), 1^4 (-3)
        assert_eq!(s.get(3, 4), BigInt::from(1));
        assert_eq!(s.get(0, 4), BigInt::from(1));
        assert_eq!(s.get(2, 4), BigInt::from(0));
    }

    #[test]
    fn support_bound_enforced() {
        let mut s = ZLaurentSeries::zero(3);
        assert_eq!(s.add_at(3, 2, &BigInt::from(1)), Err(SeriesError::SupportBound { n: 2, m: 3 }));
        assert!(ZLaurentSeries::monomial(1, 1, 3).unwrap().stencil().is_err());
    }

    #[test]
    fn binomial_roundtrip() {
        let mut s = rank_gf(15);
        let orig = s.clone();
        s.mul_binomial(1, -1, 2);
        s.div_binomial(-1, 2);
        assert_eq!(s, orig);
    }

    #[test]
    fn stencil_matches_definition() {
        let s = rank_gf(10).shift_q(1);
        let st = s.stencil().unwrap();
        for n in 0..=10 {
            for m in -(n as i64)..=n as i64 {
                let want = 2 * s.get(m, n) - s.get(m - 1, n) - s.get(m + 1, n);
                assert_eq!(st.get(m, n), want);
            }
        }
        let two = ZLaurentSeries::one(10).scale(&BigInt::from(2));
        assert_eq!(two.mul(&s), s.scale(&BigInt::from(2)));
    }

    #[test]
    fn first_difference_ordering() {
        let a = ZLaurentSeries::zero(5);
        let mut b = a.clone();
        b.add_at(2, 3, &BigInt::from(1)).unwrap();
        b.add_at(-1, 3, &BigInt::from(1)).unwrap();
        b.add_at(1, 4, &BigInt::from(1)).unwrap();
        assert_eq!(a.first_difference(&b), Some((3, -1)));
    }

    #[test]
    fn specialize_at_one_gives_row_sums() {
        let s = rank_gf(10);
        let sp = s.specialize(1).unwrap();
        for n in 0..=10 {
            assert_eq!(sp.coeff(n).as_integer().unwrap(), &s.row_sum(n));
        }
    }

    #[test]
    fn mul_q_series_matches_mul() {
        let s = rank_gf(9);
        let qs: Vec<BigInt> = (0..10).map(|k| BigInt::from(k as i64 - 3)).collect();
        assert_eq!(s.mul_q_series(&qs), s.mul(&ZLaurentSeries::from_q_series(&qs)));
    }
}
