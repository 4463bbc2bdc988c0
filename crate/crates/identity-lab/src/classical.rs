//! Classical q-series identities: Watson-transformed rank forms, φ entries, a Lambert series.

use partition_enum::gf::{dyson_rank_at_root, dyson_rank_lambert_at_root, m2_rank_at_root, m2_rank_lambert_at_root};
use series_core::{eta_quotient, theta_phi, CycInt, Poch, QSeries};

use crate::error::Result;
use crate::report::{earliest, series_witness, Witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classical {
    WatsonRank,
    WatsonM2,
    PhiEntries,
    LambertProp,
}

pub fn classical(id: &str) -> Option<Classical> {
    Some(match id {
        "watson_rank_forms" => Classical::WatsonRank,
        "watson_m2_forms" => Classical::WatsonM2,
        "phi_entries" => Classical::PhiEntries,
        "lambert_prop_3" => Classical::LambertProp,
        _ => return None,
    })
}

fn ints(trunc: usize, f: impl Fn(&mut Vec<i64>)) -> QSeries {
    let mut v = vec![0i64; trunc + 1];
    f(&mut v);
    QSeries::from_ints(1, trunc, &v)
}

fn compare(want: &QSeries, got: &QSeries) -> Option<Witness> {
    series_witness(want, got, |k| k)
}

/// Eulerian against Lambert form at ζ₃ and ζ₅.
fn watson(m2: bool, order: usize) -> Option<Witness> {
    [3u32, 5].into_iter().fold(None, |acc, t| {
        let z = CycInt::zeta_pow(t, 1);
        let (e, l) = if m2 {
            (m2_rank_at_root(&z, order), m2_rank_lambert_at_root(&z, order))
        } else {
            (dyson_rank_at_root(&z, order), dyson_rank_lambert_at_root(&z, order))
        };
        earliest(acc, compare(&l, &e))
    })
}

fn phi_entries(order: usize) -> Result<Option<Witness>> {
    let phi = theta_phi(1, 1, order);
    let phi_neg = theta_phi(1, -1, order);
    let phi_neg2 = phi_neg.dilate(2, order);
    let odd_squares = ints(order, |v| {
        let mut n = 1;
        while n * n <= order {
            v[n * n] += 4;
            n += 2;
        }
    });
    // 1 + 4Σ (−1)^n q^{a(n)}/(1 + q^{2n})
    let lambert = |a: fn(usize) -> usize| {
        ints(order, |v| {
            v[0] = 1;
            let mut n = 1;
            while a(n) <= order {
                let mut e = a(n);
                let mut sign = if n % 2 == 0 { 4 } else { -4 };
                while e <= order {
                    v[e] += sign;
                    sign = -sign;
                    e += 2 * n;
                }
                n += 1;
            }
        })
    };
    let products = eta_quotient(&[Poch::eta(1, 2), Poch::eta(2, -1)], order)?;
    let mut w = compare(&odd_squares, &phi.sub(&phi_neg)?);
    w = earliest(w, compare(&phi_neg2.mul(&phi_neg2)?, &phi.mul(&phi_neg)?));
    w = earliest(w, compare(&lambert(|n| n * n + n), &phi_neg2.mul(&phi_neg2)?));
    w = earliest(w, compare(&lambert(|n| n), &phi_neg.mul(&phi_neg)?));
    w = earliest(w, compare(&products, &phi_neg));
    Ok(w)
}

/// 6Σ(−1)^n q^n(1−q^n)/(1−q^{3n})
fn six_lambert(order: usize) -> QSeries {
    ints(order, |v| {
        for n in 1..=order {
            let sign = if n % 2 == 0 { 6 } else { -6 };
            let mut e = n;
            while e <= order {
                v[e] += sign;
                if e + n <= order {
                    v[e + n] -= sign;
                }
                e += 3 * n;
            }
        }
    })
}

/// 6L against the eta quotient and the φ quotient.
fn lambert_prop(order: usize) -> Result<Option<Witness>> {
    let six_l = six_lambert(order);
    let one = QSeries::one(1, order);
    let eta = eta_quotient(&[Poch::eta(1, 6), Poch::eta(6, 1), Poch::eta(2, -3), Poch::eta(3, -2)], order)?;
    let w = compare(&eta.sub(&one)?, &six_l);
    // φ(−q)³ = (1 + 6L)·φ(−q³), from sums alone
    let phi = theta_phi(1, -1, order);
    let cube = phi.mul(&phi)?.mul(&phi)?;
    let rhs = one.add(&six_l)?.mul(&phi.dilate(3, order))?;
    Ok(earliest(w, compare(&cube, &rhs)))
}

pub fn check_classical(which: Classical, order: usize) -> Result<Option<Witness>> {
    match which {
        Classical::WatsonRank => Ok(watson(false, order)),
        Classical::WatsonM2 => Ok(watson(true, order)),
        Classical::PhiEntries => phi_entries(order),
        Classical::LambertProp => lambert_prop(order),
    }
}
