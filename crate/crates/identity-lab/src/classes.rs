//! Residue classes of the sptcrank on marked overpartitions.

use num_bigint::BigInt;
use partition_enum::{Family, Parity};
use spt_cranks::sptcrank_classes;

use crate::congruence::{is_even_square_or_twice_square, is_odd_square, is_square_or_twice_square};
use crate::error::Result;
use crate::lab::Lab;
use crate::report::{Value, Witness};

/// Equal classes mod t on the progressions `residues` (mod t), by enumeration.
#[derive(Clone, Copy, Debug)]
pub struct EqualCase {
    pub parity: Option<Parity>,
    pub modulus: u32,
    pub residues: &'static [u32],
}

/// Mod-4 classes: 1 and 3 equal, 0 and 2 differing by one exactly on `exceptional`.
#[derive(Clone, Copy, Debug)]
pub struct Mod4Case {
    pub family: Family,
    pub exceptional: fn(u64) -> bool,
}

#[derive(Clone, Copy, Debug)]
pub enum ClassCase {
    Equal(EqualCase),
    Mod4(Mod4Case),
}

pub fn class_case(id: &str) -> Option<ClassCase> {
    let eq = |parity, modulus, residues| Some(ClassCase::Equal(EqualCase { parity, modulus, residues }));
    let m4 = |family, exceptional| Some(ClassCase::Mod4(Mod4Case { family, exceptional }));
    match id {
        "mainthm_i" => eq(None, 3, &[0]),
        "mainthm_ii" => eq(Some(Parity::Even), 3, &[0, 1]),
        "mainthm_iii" => eq(Some(Parity::Even), 5, &[3]),
        "mainthm_iv" => eq(Some(Parity::Odd), 3, &[0]),
        "mainthm_v" => eq(Some(Parity::Odd), 5, &[0]),
        "mainthm_vi" => m4(Family::SBar, is_square_or_twice_square),
        "mainthm_vii" => m4(Family::SBar1, is_odd_square),
        "mainthm_viii" => m4(Family::SBar2, is_even_square_or_twice_square),
        _ => None,
    }
}

/// Classify every qualifying n ≤ max_n.
pub fn check_equal(case: EqualCase, max_n: usize) -> Option<Witness> {
    let t = case.modulus;
    (1..=max_n as u32).filter(|n| case.residues.contains(&(n % t))).find_map(|n| {
        let c = sptcrank_classes(n, case.parity, t);
        (1..t as usize).find(|&k| c[k] != c[0]).map(|k| Witness::new(n as usize, Some(k as i64), c[0], c[k]))
    })
}

/// Class sizes mod 4 from the spt-crank table, 1 ≤ n ≤ max_n.
pub fn check_mod4(case: Mod4Case, max_n: usize, lab: &Lab) -> Result<Option<Witness>> {
    let table = lab.table(case.family, max_n)?;
    Ok((1..=max_n).find_map(|n| {
        let c: Vec<BigInt> = (0..4).map(|k| table.class_sum(k, 4, n)).collect();
        if c[1] != c[3] {
            return Some(Witness::new(n, Some(3), c[1].clone(), c[3].clone()));
        }
        let gap = (&c[0] - &c[2]).magnitude().clone();
        let want = u32::from((case.exceptional)(n as u64));
        (gap != want.into()).then(|| Witness::new(n, Some(2), Value::Text(format!("|c0 - c2| = {want}")), c[2].clone()))
    }))
}

pub fn check_class_case(case: ClassCase, max_n: usize, lab: &Lab) -> Result<Option<Witness>> {
    match case {
        ClassCase::Equal(c) => Ok(check_equal(c, max_n)),
        ClassCase::Mod4(c) => check_mod4(c, max_n, lab),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use series_core::Exec;

    #[test]
    fn enumerated_cases_small() {
        let lab = Lab::new(Exec::Sequential);
        for id in ["mainthm_i", "mainthm_ii", "mainthm_iii", "mainthm_iv", "mainthm_v"] {
            assert_eq!(check_class_case(class_case(id).unwrap(), 12, &lab).unwrap(), None, "{id}");
        }
    }

    #[test]
    fn mod4_table_matches_enumeration() {
        let lab = Lab::new(Exec::Sequential);
        for (id, parity) in
            [("mainthm_vi", None), ("mainthm_vii", Some(Parity::Odd)), ("mainthm_viii", Some(Parity::Even))]
        {
            let Some(ClassCase::Mod4(c)) = class_case(id) else { panic!() };
            assert_eq!(check_mod4(c, 30, &lab).unwrap(), None, "{id}");
            let table = lab.table(c.family, 12).unwrap();
            for n in 1..=12u32 {
                let got: Vec<BigInt> = (0..4).map(|k| table.class_sum(k, 4, n as usize)).collect();
                let want: Vec<BigInt> = sptcrank_classes(n, parity, 4).into_iter().map(BigInt::from).collect();
                assert_eq!(got, want, "{id} n={n}");
            }
        }
    }

    #[test]
    fn not_equal_off_progression() {
        let case = EqualCase { parity: None, modulus: 3, residues: &[1] };
        assert!(check_equal(case, 10).is_some());
    }
}
