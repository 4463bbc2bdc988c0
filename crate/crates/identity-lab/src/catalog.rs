//! Every check by id, with its default order and a runner.

use std::time::Instant;

use partition_enum::Family;
use series_core::par::map_slice;
use spt_cranks::SptFamily;

use crate::bijections::{check_euler_counts, check_pair_model, check_phi, check_psi};
use crate::classes::{check_class_case, class_case};
use crate::classical::{check_classical, classical};
use crate::congruence::{check_congruence, check_parity, congruence, parity_rule};
use crate::dissection::{check_at_i, check_dissection};
use crate::error::{LabError, Result};
use crate::lab::Lab;
use crate::moments::check_moment_identity;
use crate::nonneg::{check_nonneg, check_summand_counterexample};
use crate::rank_crank::{check_rank_crank, RankCrank};
use crate::report::{earliest, CheckReport};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    RankCrank,
    Dissection,
    AtI,
    Nonnegativity,
    Congruence,
    Parity,
    EqualClasses,
    Moment,
    Classical,
    Bijection,
}

impl Kind {
    pub fn name(self) -> &'static str {
        match self {
            Kind::RankCrank => "rank-crank",
            Kind::Dissection => "dissection",
            Kind::AtI => "at-i",
            Kind::Nonnegativity => "nonnegativity",
            Kind::Congruence => "congruence",
            Kind::Parity => "parity",
            Kind::EqualClasses => "equal-classes",
            Kind::Moment => "moment",
            Kind::Classical => "classical",
            Kind::Bijection => "bijection",
        }
    }

    /// What `order` bounds for this kind of check.
    pub fn order_meaning(self) -> &'static str {
        match self {
            Kind::Dissection | Kind::AtI | Kind::Classical => "q-order",
            Kind::Bijection => "largest size",
            _ => "largest n",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CheckSpec {
    pub id: &'static str,
    pub kind: Kind,
    pub description: &'static str,
    pub default_order: usize,
}

const fn spec(id: &'static str, kind: Kind, default_order: usize, description: &'static str) -> CheckSpec {
    CheckSpec { id, kind, description, default_order }
}

const T3: usize = 41 * 3 - 1;
const T5: usize = 41 * 5 - 1;

pub const CATALOG: &[CheckSpec] = &[
    spec("spt5", Kind::Congruence, 150, "spt(5n+4) = 0 mod 5"),
    spec("spt7", Kind::Congruence, 150, "spt(7n+5) = 0 mod 7"),
    spec("spt13", Kind::Congruence, 150, "spt(13n+6) = 0 mod 13"),
    spec("sb3", Kind::Congruence, 300, "sptbar(3n) = 0 mod 3; N_S̄ classes mod 3 equal at 3n"),
    spec("sb1_3", Kind::Congruence, 300, "sptbar1(3n) = 0 mod 3; N_S̄₁ classes mod 3 equal at 3n"),
    spec("sb1_5", Kind::Congruence, 300, "sptbar1(5n) = 0 mod 5; N_S̄₁ classes mod 5 equal at 5n"),
    spec("sb2_3", Kind::Congruence, 300, "sptbar2(3n) = 0 mod 3; N_S̄₂ classes mod 3 equal at 3n"),
    spec("sb2_3p1", Kind::Congruence, 300, "sptbar2(3n+1) = 0 mod 3; N_S̄₂ classes mod 3 equal at 3n+1"),
    spec("sb2_5p3", Kind::Congruence, 300, "sptbar2(5n+3) = 0 mod 5; N_S̄₂ classes mod 5 equal at 5n+3"),
    spec("m2_3p1", Kind::Congruence, 300, "m2spt(3n+1) = 0 mod 3; N_S2̄ classes mod 3 equal at 3n+1"),
    spec("m2_5p1", Kind::Congruence, 300, "m2spt(5n+1) = 0 mod 5; N_S2̄ classes mod 5 equal at 5n+1"),
    spec("m2_5p3", Kind::Congruence, 300, "m2spt(5n+3) = 0 mod 5; N_S2̄ classes mod 5 equal at 5n+3"),
    spec("parity_sb", Kind::Parity, 400, "sptbar(n) odd iff n is a square or twice a square"),
    spec("parity_sb1", Kind::Parity, 400, "sptbar1(n) odd iff n is an odd square"),
    spec("parity_sb2", Kind::Parity, 400, "sptbar2(n) odd iff n is an even square or twice a square"),
    spec("T2_1", Kind::RankCrank, 60, "(1-z)(1-1/z) S̄(z,q) = Σ (N̄ - M̄)(m,n) z^m q^n"),
    spec("T2_2", Kind::RankCrank, 60, "(1-z)(1-1/z) S2̄(z,q) = Σ (N2 - M2)(m,n) z^m q^n"),
    spec("T2_3", Kind::RankCrank, 60, "2(1-z)(1-1/z) S̄₂(z,q) = N̄ - 2M̄ + ε, with N̄ + ε even"),
    spec("T2_4", Kind::RankCrank, 60, "2(1-z)(1-1/z) S̄₁(z,q) = N̄ - ε, with N̄ - ε even"),
    spec("T2_5", Kind::Dissection, T3, "3-dissection of the overpartition rank at ζ₃"),
    spec("T2_6", Kind::Dissection, T5, "5-dissection of the overpartition rank at ζ₅"),
    spec("T2_7", Kind::Dissection, T3, "3-dissection of the M₂-rank at ζ₃"),
    spec("T2_8", Kind::Dissection, T5, "5-dissection of the M₂-rank at ζ₅"),
    spec("T2_9", Kind::Dissection, T3, "3-dissection of the overpartition residual crank at ζ₃"),
    spec("T2_10", Kind::Dissection, T5, "5-dissection of the overpartition residual crank at ζ₅"),
    spec("T2_11", Kind::Dissection, T3, "3-dissection of the M2 crank at ζ₃"),
    spec("T2_12", Kind::Dissection, T5, "5-dissection of the M2 crank at ζ₅"),
    spec("T2_13", Kind::Dissection, T3, "3-dissection of the doubled extra series ε at ζ₃"),
    spec("T2_14", Kind::Dissection, T5, "5-dissection of the doubled extra series ε at ζ₅"),
    spec("T2_15", Kind::AtI, 200, "S̄(i,q) = Σ q^{n²} - Σ (-1)^n q^{2n²}"),
    spec("T2_16", Kind::AtI, 200, "S̄₂(i,q) = Σ q^{4n²} - Σ (-1)^n q^{2n²}"),
    spec("T2_17", Kind::AtI, 200, "S̄₁(i,q) = Σ q^{(2n-1)²}"),
    spec("T2_18", Kind::Nonnegativity, 60, "N_S̄, N_S̄₁ and N_S̄₂ are nonnegative"),
    spec("conj_s2bar", Kind::Nonnegativity, 60, "N_S2̄ is nonnegative (evidence only)"),
    spec("s2bar_summand", Kind::Nonnegativity, 10, "one S2̄ summand has q^10 coefficient 1/z - 1 + z"),
    spec("T3_1", Kind::Bijection, 20, "crank̄ on SP̄, SP̄₁, SP̄₂ pairs is distributed as N_S̄, N_S̄₁, N_S̄₂"),
    spec("mainthm_i", Kind::EqualClasses, 24, "sptcrank mod 3 splits marked overpartitions of 3n evenly"),
    spec(
        "mainthm_ii",
        Kind::EqualClasses,
        24,
        "sptcrank mod 3 splits those of 3n and 3n+1 with even smallest part evenly",
    ),
    spec("mainthm_iii", Kind::EqualClasses, 24, "sptcrank mod 5 splits those of 5n+3 with even smallest part evenly"),
    spec("mainthm_iv", Kind::EqualClasses, 24, "sptcrank mod 3 splits those of 3n with odd smallest part evenly"),
    spec("mainthm_v", Kind::EqualClasses, 24, "sptcrank mod 5 splits those of 5n with odd smallest part evenly"),
    spec(
        "mainthm_vi",
        Kind::EqualClasses,
        60,
        "mod 4: classes 1, 3 equal; 0, 2 differ by 1 iff n is a square or twice a square",
    ),
    spec("mainthm_vii", Kind::EqualClasses, 60, "mod 4, odd smallest part: 0, 2 differ by 1 iff n is an odd square"),
    spec(
        "mainthm_viii",
        Kind::EqualClasses,
        60,
        "mod 4, even smallest part: 0, 2 differ by 1 iff n is an even square or twice a square",
    ),
    spec("phi", Kind::Bijection, 25, "Φ is a bijection onto SP̄ pairs carrying k̄ to k and sptcrank to crank̄"),
    spec("T3_4", Kind::Bijection, 30, "distinct parts ≥ n+1 are equinumerous with parts ≥ n+1, odd above 2n (n ≤ 6)"),
    spec("psi", Kind::Bijection, 30, "Ψₙ is a bijection with k(π,n) = #(parts ≤ 2n-1) (n ≤ 6)"),
    spec(
        "watson_rank_forms",
        Kind::Classical,
        80,
        "Eulerian and Lambert forms of the overpartition rank agree at ζ₃, ζ₅",
    ),
    spec("watson_m2_forms", Kind::Classical, 80, "Eulerian and Lambert forms of the M₂-rank agree at ζ₃, ζ₅"),
    spec("phi_entries", Kind::Classical, 100, "theta identities for φ(q), φ(-q), φ(-q²)"),
    spec(
        "lambert_prop_3",
        Kind::Classical,
        60,
        "6Σ(-1)^n q^n(1-q^n)/(1-q^{3n}) = (q)⁶(q⁶)/((q²)³(q³)²) - 1 = φ(-q)³/φ(-q³) - 1",
    ),
    spec("moments", Kind::Moment, 60, "M̄₁⁺(n) - N̄₁⁺(n) = N_S̄(0,n) ≥ 0"),
];

/// Largest n for the Ψₙ checks.
pub const PSI_MAX_N: u32 = 6;

pub fn catalog() -> &'static [CheckSpec] {
    CATALOG
}

pub fn find(id: &str) -> Option<&'static CheckSpec> {
    CATALOG.iter().find(|s| s.id == id)
}

fn run(spec: &CheckSpec, order: usize, lab: &Lab) -> Result<CheckReport> {
    let id = spec.id;
    let rank_crank = |w| check_rank_crank(w, order, lab);
    let witness = match id {
        "T2_1" => rank_crank(RankCrank::SBar)?,
        "T2_2" => rank_crank(RankCrank::S2Bar)?,
        "T2_3" => rank_crank(RankCrank::SBar2)?,
        "T2_4" => rank_crank(RankCrank::SBar1)?,
        "T2_15" => check_at_i(SptFamily::SBar, order)?,
        "T2_16" => check_at_i(SptFamily::SBar2, order)?,
        "T2_17" => check_at_i(SptFamily::SBar1, order)?,
        "T2_18" => [Family::SBar, Family::SBar1, Family::SBar2]
            .into_iter()
            .map(|f| check_nonneg(f, order, lab))
            .try_fold(None, |acc, w| w.map(|w| earliest(acc, w)))?,
        "conj_s2bar" => check_nonneg(Family::S2Bar, order, lab)?,
        "s2bar_summand" => check_summand_counterexample(),
        "T3_1" => check_pair_model(order, lab)?,
        "phi" => check_phi(order)?,
        "T3_4" => check_euler_counts(PSI_MAX_N, order as u32),
        "psi" => check_psi(PSI_MAX_N, order as u32)?,
        "moments" => check_moment_identity(order, lab)?,
        _ if spec.kind == Kind::Dissection => check_dissection(id, None, order)?,
        _ => {
            if let Some(c) = congruence(id) {
                check_congruence(c, order, lab)?
            } else if let Some((v, rule)) = parity_rule(id) {
                check_parity(v, rule, order)
            } else if let Some(c) = class_case(id) {
                check_class_case(c, order, lab)?
            } else if let Some(c) = classical(id) {
                check_classical(c, order)?
            } else {
                return Err(LabError::UnknownCheck(id.to_string()));
            }
        }
    };
    let checked = if id == "s2bar_summand" { 10 } else { order };
    Ok(CheckReport::from_witness(id, checked, witness))
}

/// Run one check at `order`, or at its default order.
pub fn run_check(id: &str, order: Option<usize>, lab: &Lab) -> Result<CheckReport> {
    let spec = find(id).ok_or_else(|| LabError::UnknownCheck(id.to_string()))?;
    let order = order.unwrap_or(spec.default_order);
    if order == 0 {
        return Err(LabError::ZeroOrder);
    }
    let start = Instant::now();
    let mut report = run(spec, order, lab)?;
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Validate every id, then run the checks concurrently; reports keep the order of `ids`.
pub fn run_checks(ids: &[&str], order: Option<usize>, lab: &Lab) -> Result<Vec<CheckReport>> {
    if let Some(bad) = ids.iter().find(|id| find(id).is_none()) {
        return Err(LabError::UnknownCheck(bad.to_string()));
    }
    if order == Some(0) {
        return Err(LabError::ZeroOrder);
    }
    map_slice(lab.exec(), ids, |id| run_check(id, order, lab)).into_iter().collect()
}

/// Every check in the catalog at its default order.
pub fn run_catalog(lab: &Lab) -> Result<Vec<CheckReport>> {
    let ids: Vec<&str> = CATALOG.iter().map(|s| s.id).collect();
    run_checks(&ids, None, lab)
}
