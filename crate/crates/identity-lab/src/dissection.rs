//! t-dissections at ζ₃ and ζ₅ compared with product forms, and the z = i evaluations.

use partition_enum::gf::{
    dyson_rank_at_root, m2_crank_at_root, m2_rank_at_root, overpartition_gf, residual_crank_at_root,
};
use series_core::{eta_quotient, lambert_sum, CycInt, LambertSchedule, Poch, QSeries};
use spt_cranks::{nsb_at_root, SptFamily};

use crate::error::{LabError, Result};
use crate::report::{earliest, series_witness, Witness};

/// The series being dissected, specialized at ζ_t.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    NBar,
    N2,
    MBar,
    M2,
    /// The doubled extra series ε(ζ,q).
    Extra,
}

/// scalar·q^shift·∏ factors, with scalar = a + b(ζ + ζ⁻¹).
#[derive(Clone, Debug)]
pub struct Term {
    pub scalar: (i64, i64),
    pub shift: usize,
    pub factors: Vec<Poch>,
}

#[derive(Clone, Debug)]
pub struct Component {
    pub r: usize,
    pub terms: Vec<Term>,
}

#[derive(Clone, Debug)]
pub struct Dissection {
    pub t: u32,
    pub side: Side,
    pub components: Vec<Component>,
}

const fn up(shift: usize, step: usize) -> Poch {
    Poch::new(shift, step, 1)
}

const fn down(shift: usize, step: usize) -> Poch {
    Poch::new(shift, step, -1)
}

const fn eta(k: usize, power: i32) -> Poch {
    Poch::eta(k, power)
}

fn term(a: i64, b: i64, factors: &[Poch]) -> Term {
    Term { scalar: (a, b), shift: 0, factors: factors.to_vec() }
}

fn shifted(a: i64, b: i64, factors: &[Poch]) -> Term {
    Term { scalar: (a, b), shift: 1, factors: factors.to_vec() }
}

fn comp(r: usize, terms: Vec<Term>) -> Component {
    Component { r, terms }
}

/// (q³;q³)⁴(q²;q²)/((q;q)²(q⁶;q⁶)²)
fn n03() -> Term {
    term(1, 0, &[eta(3, 4), eta(2, 1), eta(1, -2), eta(6, -2)])
}

/// (q⁴,q⁶;q¹⁰)(q⁵;q⁵)²/((q²,q³;q⁵)²(q¹⁰;q¹⁰)) + 2σq(q¹⁰;q¹⁰)/(q³,q⁴,q⁶,q⁷;q¹⁰)
fn n05() -> Vec<Term> {
    vec![
        term(1, 0, &[up(4, 10), up(6, 10), eta(5, 2), Poch::new(2, 5, -2), Poch::new(3, 5, -2), eta(10, -1)]),
        shifted(0, 2, &[eta(10, 1), down(3, 10), down(4, 10), down(6, 10), down(7, 10)]),
    ]
}

/// (−q⁵,q¹⁰;q¹⁰)
fn neg5_eta10() -> [Poch; 2] {
    [Poch::neg(5, 10, 1), eta(10, 1)]
}

fn with(base: &[Poch], more: &[Poch]) -> Vec<Poch> {
    base.iter().chain(more).copied().collect()
}

/// Stated components of a dissection check, by id.
pub fn dissection(id: &str) -> Option<Dissection> {
    let (t, side, components) = match id {
        "T2_5" => {
            (3, Side::NBar, vec![comp(0, vec![n03()]), comp(1, vec![term(2, 0, &[eta(3, 1), eta(6, 1), eta(1, -1)])])])
        }
        "T2_6" => {
            (5, Side::NBar, vec![comp(0, n05()), comp(3, vec![term(2, -2, &[eta(10, 1), down(2, 5), down(3, 5)])])])
        }
        "T2_7" => (3, Side::N2, vec![comp(1, vec![term(1, 0, &[eta(6, 4), eta(2, -1), eta(3, -1), eta(12, -1)])])]),
        "T2_8" => (
            5,
            Side::N2,
            vec![
                comp(1, vec![term(1, 0, &with(&neg5_eta10(), &[down(2, 10), down(8, 10)]))]),
                comp(3, vec![term(0, 1, &with(&neg5_eta10(), &[down(4, 10), down(6, 10)]))]),
            ],
        ),
        "T2_9" => (
            3,
            Side::MBar,
            vec![
                comp(0, vec![n03()]),
                comp(1, vec![term(-1, 0, &[eta(6, 1), eta(3, 1), eta(1, -1)])]),
                comp(2, vec![term(-2, 0, &[eta(6, 4), eta(3, -2), eta(2, -1)])]),
            ],
        ),
        "T2_10" => {
            let a = [up(4, 10), up(6, 10), eta(10, 1)];
            let b = [up(2, 10), up(8, 10), eta(10, 1)];
            (
                5,
                Side::MBar,
                vec![
                    comp(
                        0,
                        vec![
                            term(1, 0, &with(&a, &[down(1, 5), down(4, 5), down(2, 10), down(8, 10)])),
                            shifted(0, -1, &with(&b, &[down(2, 5), down(3, 5), down(4, 10), down(6, 10)])),
                        ],
                    ),
                    comp(1, vec![term(0, 1, &with(&a, &[down(2, 5), down(3, 5), down(2, 10), down(8, 10)]))]),
                    comp(2, vec![term(-1, 0, &[eta(10, 1), down(1, 5), down(4, 5)])]),
                    comp(3, vec![term(0, -1, &[eta(10, 1), down(2, 5), down(3, 5)])]),
                    comp(4, vec![term(-1, 0, &with(&b, &[down(1, 5), down(4, 5), down(4, 10), down(6, 10)]))]),
                ],
            )
        }
        "T2_11" => (
            3,
            Side::M2,
            vec![
                comp(0, vec![term(1, 0, &[eta(6, 10), eta(4, 1), eta(1, 1), eta(12, -4), eta(3, -4), eta(2, -3)])]),
                comp(1, vec![term(1, 0, &[eta(6, 4), eta(12, -1), eta(3, -1), eta(2, -1)])]),
                comp(2, vec![term(-2, 0, &[eta(12, 2), eta(3, 2), eta(2, 1), eta(6, -2), eta(4, -1), eta(1, -1)])]),
            ],
        ),
        "T2_12" => {
            let nu = |s| Poch::neg(s, 10, 1);
            let nd = |s| Poch::neg(s, 10, -1);
            (
                5,
                Side::M2,
                vec![
                    comp(
                        0,
                        vec![term(1, 0, &[nu(3), nu(5), nu(7), eta(10, 1), nd(1), down(4, 10), down(6, 10), nd(9)])],
                    ),
                    comp(1, vec![term(1, 0, &with(&neg5_eta10(), &[down(2, 10), down(8, 10)]))]),
                    comp(
                        2,
                        vec![
                            term(
                                0,
                                1,
                                &[
                                    up(2, 10),
                                    nu(3),
                                    nu(5),
                                    nu(7),
                                    up(8, 10),
                                    eta(10, 1),
                                    nd(1),
                                    Poch::new(4, 10, -2),
                                    Poch::new(6, 10, -2),
                                    nd(9),
                                ],
                            ),
                            term(
                                -1,
                                0,
                                &[
                                    nu(1),
                                    up(4, 10),
                                    nu(5),
                                    up(6, 10),
                                    nu(9),
                                    eta(10, 1),
                                    Poch::new(2, 10, -2),
                                    nd(3),
                                    nd(7),
                                    Poch::new(8, 10, -2),
                                ],
                            ),
                        ],
                    ),
                    comp(3, vec![term(0, 1, &with(&neg5_eta10(), &[down(4, 10), down(6, 10)]))]),
                    comp(
                        4,
                        vec![term(0, -1, &[nu(1), nu(5), nu(9), eta(10, 1), down(2, 10), nd(3), nd(7), down(8, 10)])],
                    ),
                ],
            )
        }
        "T2_13" => (
            3,
            Side::Extra,
            vec![
                comp(0, vec![n03()]),
                comp(1, vec![term(-4, 0, &[eta(6, 1), eta(3, 1), eta(1, -1)])]),
                comp(2, vec![term(4, 0, &[eta(6, 4), eta(3, -2), eta(2, -1)])]),
            ],
        ),
        "T2_14" => (
            5,
            Side::Extra,
            vec![
                comp(0, n05()),
                comp(
                    1,
                    vec![term(
                        -2,
                        2,
                        &[
                            up(4, 10),
                            up(6, 10),
                            eta(10, 1),
                            Poch::new(2, 10, -2),
                            Poch::new(8, 10, -2),
                            down(3, 10),
                            down(7, 10),
                        ],
                    )],
                ),
                comp(2, vec![term(2, -4, &[eta(10, 1), down(1, 10), down(9, 10), down(4, 10), down(6, 10)])]),
                comp(3, vec![term(-2, 0, &[eta(10, 1), down(2, 5), down(3, 5)])]),
                comp(
                    4,
                    vec![term(
                        0,
                        2,
                        &[
                            up(2, 10),
                            up(8, 10),
                            eta(10, 1),
                            down(1, 10),
                            down(9, 10),
                            Poch::new(4, 10, -2),
                            Poch::new(6, 10, -2),
                        ],
                    )],
                ),
            ],
        ),
        _ => return None,
    };
    Some(Dissection { t, side, components })
}

/// Default overall q-order: forty terms of each component.
pub fn default_order(t: u32) -> usize {
    41 * t as usize - 1
}

/// The dissected series at `zeta`, to order `trunc`.
pub fn side_at_root(side: Side, zeta: &CycInt, trunc: usize) -> Result<QSeries> {
    Ok(match side {
        Side::NBar => dyson_rank_at_root(zeta, trunc),
        Side::N2 => m2_rank_at_root(zeta, trunc),
        Side::MBar => residual_crank_at_root(zeta, trunc),
        Side::M2 => m2_crank_at_root(zeta, trunc),
        Side::Extra => {
            let l = lambert_sum(zeta, &LambertSchedule::extra_series(), trunc)?;
            let inner = QSeries::one(zeta.order(), trunc).add(&l.scale_int(2))?;
            overpartition_gf(trunc).lift(zeta.order()).mul(&inner)?
        }
    })
}

/// A component's product form in ℤ[ζ_t], to order `trunc`.
pub fn component_series(c: &Component, t: u32, trunc: usize) -> Result<QSeries> {
    let zeta = CycInt::zeta_pow(t, 1);
    let sigma = &zeta + &CycInt::zeta_pow(t, -1);
    let mut total = QSeries::zero(t, trunc);
    for term in &c.terms {
        let (a, b) = term.scalar;
        let scalar = &CycInt::from_int(t, a) + &sigma.scale(&b.into());
        let p = eta_quotient(&term.factors, trunc)?.lift(t).shift(term.shift).scale(&scalar);
        total = total.add(&p)?;
    }
    Ok(total)
}

/// Compare the stated components (or only component `r`) to overall order `order`.
pub fn check_dissection(id: &str, component: Option<usize>, order: usize) -> Result<Option<Witness>> {
    let d = dissection(id).ok_or_else(|| LabError::UnknownCheck(id.to_string()))?;
    if let Some(r) = component {
        if !d.components.iter().any(|c| c.r == r) {
            return Err(LabError::UnknownComponent { check: id.to_string(), r });
        }
    }
    let t = d.t as usize;
    let order = order.max(t - 1);
    let lhs = side_at_root(d.side, &CycInt::zeta_pow(d.t, 1), order)?.dissect(t);
    let mut worst = None;
    for c in d.components.iter().filter(|c| component.is_none_or(|r| r == c.r)) {
        let got = &lhs[c.r];
        let want = component_series(c, d.t, got.trunc())?;
        worst = earliest(worst, series_witness(&want, got, |k| t * k + c.r));
    }
    Ok(worst)
}

/// Σ_{n≥1} q^{a n²}, optionally with sign (−1)^n.
fn square_sum(a: usize, alternating: bool, odd_only: bool, trunc: usize) -> Vec<i64> {
    let mut v = vec![0i64; trunc + 1];
    let mut n = 1usize;
    while a * n * n <= trunc {
        if !odd_only || n % 2 == 1 {
            v[a * n * n] += if alternating && n % 2 == 1 { -1 } else { 1 };
        }
        n += 1;
    }
    v
}

/// The theta-series value of S̄, S̄₂ or S̄₁ at z = i.
pub fn at_i_closed_form(family: SptFamily, trunc: usize) -> Vec<i64> {
    let sub = |x: Vec<i64>, y: Vec<i64>| x.iter().zip(&y).map(|(a, b)| a - b).collect::<Vec<_>>();
    match family {
        SptFamily::SBar => sub(square_sum(1, false, false, trunc), square_sum(2, true, false, trunc)),
        SptFamily::SBar2 => sub(square_sum(4, false, false, trunc), square_sum(2, true, false, trunc)),
        _ => square_sum(1, false, true, trunc),
    }
}

/// S(i,q) from the two-variable series against its closed form.
pub fn check_at_i(family: SptFamily, order: usize) -> Result<Option<Witness>> {
    let got = nsb_at_root(family, &CycInt::zeta_pow(4, 1), order);
    let want = QSeries::from_ints(4, order, &at_i_closed_form(family, order));
    Ok(series_witness(&want, &got, |k| k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_dissection_holds_at_low_order() {
        for k in 5..=14 {
            let id = format!("T2_{k}");
            let d = dissection(&id).unwrap();
            assert_eq!(check_dissection(&id, None, 12 * d.t as usize - 1).unwrap(), None, "{id}");
        }
    }

    #[test]
    fn unstated_component_rejected() {
        assert!(matches!(check_dissection("T2_5", Some(2), 30), Err(LabError::UnknownComponent { r: 2, .. })));
        assert!(check_dissection("T2_99", None, 30).is_err());
        assert_eq!(check_dissection("T2_5", Some(0), 30).unwrap(), None);
    }

    #[test]
    fn wrong_product_gives_witness() {
        let mut d = dissection("T2_5").unwrap();
        d.components[1].terms[0].scalar = (3, 0);
        let lhs = side_at_root(Side::NBar, &CycInt::zeta_pow(3, 1), 20).unwrap().dissect(3);
        let want = component_series(&d.components[1], 3, lhs[1].trunc()).unwrap();
        let w = series_witness(&want, &lhs[1], |k| 3 * k + 1).unwrap();
        assert_eq!(w.n, 1);
    }

    #[test]
    fn values_at_i() {
        for f in [SptFamily::SBar, SptFamily::SBar2, SptFamily::SBar1] {
            assert_eq!(check_at_i(f, 60).unwrap(), None, "{f}");
        }
        assert_eq!(&at_i_closed_form(SptFamily::SBar, 4)[..], &[0, 1, 1, 0, 1]);
    }
}
