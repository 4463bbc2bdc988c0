//! Divisibility of spt counts on progressions, the equal-class refinements, and parity.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use partition_enum::gf::spt_generating_function;
use partition_enum::{Family, SptVariant};

use crate::error::Result;
use crate::lab::Lab;
use crate::report::{earliest, Value, Witness};

/// count(p·k + r) ≡ 0 (mod p), with crank classes of `classes` equal on the progression.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Congruence {
    pub variant: SptVariant,
    pub modulus: u32,
    pub residue: u32,
    pub classes: Option<Family>,
}

const fn cong(variant: SptVariant, modulus: u32, residue: u32, classes: Option<Family>) -> Congruence {
    Congruence { variant, modulus, residue, classes }
}

/// Table size used for the class refinements.
pub const CLASS_TABLE_LIMIT: usize = 60;

pub fn congruence(id: &str) -> Option<Congruence> {
    use SptVariant::*;
    Some(match id {
        "spt5" => cong(Spt, 5, 4, None),
        "spt7" => cong(Spt, 7, 5, None),
        "spt13" => cong(Spt, 13, 6, None),
        "sb3" => cong(SptBar, 3, 0, Some(Family::SBar)),
        "sb1_3" => cong(SptBar1, 3, 0, Some(Family::SBar1)),
        "sb1_5" => cong(SptBar1, 5, 0, Some(Family::SBar1)),
        "sb2_3" => cong(SptBar2, 3, 0, Some(Family::SBar2)),
        "sb2_3p1" => cong(SptBar2, 3, 1, Some(Family::SBar2)),
        "sb2_5p3" => cong(SptBar2, 5, 3, Some(Family::SBar2)),
        "m2_3p1" => cong(M2Spt, 3, 1, Some(Family::S2Bar)),
        "m2_5p1" => cong(M2Spt, 5, 1, Some(Family::S2Bar)),
        "m2_5p3" => cong(M2Spt, 5, 3, Some(Family::S2Bar)),
        _ => return None,
    })
}

/// First n ≤ max_n on the progression where divisibility or equal classes fail.
pub fn check_congruence(c: Congruence, max_n: usize, lab: &Lab) -> Result<Option<Witness>> {
    let counts = spt_generating_function(c.variant, max_n).to_integers().expect("integer series");
    let p = BigInt::from(c.modulus);
    let on = |n: usize| n % c.modulus as usize == c.residue as usize;
    let divis = (0..=max_n)
        .filter(|&n| on(n))
        .find(|&n| !(&counts[n] % &p).is_zero())
        .map(|n| Witness::new(n, None, Value::Text(format!("0 mod {p}")), counts[n].clone()));
    let classes = match c.classes {
        Some(f) => {
            let top = max_n.min(CLASS_TABLE_LIMIT);
            let table = lab.table(f, top)?;
            (0..=top).filter(|&n| on(n)).find_map(|n| {
                let first = table.class_sum(0, c.modulus, n);
                (1..c.modulus).find_map(|k| {
                    let v = table.class_sum(k, c.modulus, n);
                    (v != first).then(|| Witness::new(n, Some(k as i64), first.clone(), v))
                })
            })
        }
        None => None,
    };
    Ok(earliest(divis, classes))
}

fn is_square(n: u64) -> bool {
    let r = (n as f64).sqrt() as u64;
    (r.saturating_sub(1)..=r + 1).any(|k| k * k == n)
}

/// n = k² with k odd.
pub fn is_odd_square(n: u64) -> bool {
    n % 2 == 1 && is_square(n)
}

/// n = k² with k even, or n = 2k².
pub fn is_even_square_or_twice_square(n: u64) -> bool {
    (n.is_multiple_of(2) && is_square(n)) || (n.is_multiple_of(2) && is_square(n / 2))
}

pub fn is_square_or_twice_square(n: u64) -> bool {
    is_square(n) || (n.is_multiple_of(2) && is_square(n / 2))
}

/// Which count's parity is characterized, and by which set.
pub fn parity_rule(id: &str) -> Option<(SptVariant, fn(u64) -> bool)> {
    Some(match id {
        "parity_sb" => (SptVariant::SptBar, is_square_or_twice_square as fn(u64) -> bool),
        "parity_sb1" => (SptVariant::SptBar1, is_odd_square),
        "parity_sb2" => (SptVariant::SptBar2, is_even_square_or_twice_square),
        _ => return None,
    })
}

/// count(n) is odd exactly on the exceptional set, 1 ≤ n ≤ max_n.
pub fn check_parity(variant: SptVariant, rule: fn(u64) -> bool, max_n: usize) -> Option<Witness> {
    let counts = spt_generating_function(variant, max_n).to_integers().expect("integer series");
    (1..=max_n).find_map(|n| {
        let odd = (&counts[n] % 2u32).is_one();
        (odd != rule(n as u64)).then(|| {
            let want = if rule(n as u64) { "odd" } else { "even" };
            Witness::new(n, None, Value::Text(want.into()), counts[n].clone())
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use series_core::Exec;

    #[test]
    fn exceptional_sets() {
        let sq: Vec<u64> = (1..=20).filter(|&n| is_square_or_twice_square(n)).collect();
        assert_eq!(sq, [1, 2, 4, 8, 9, 16, 18]);
        let odd: Vec<u64> = (1..=30).filter(|&n| is_odd_square(n)).collect();
        assert_eq!(odd, [1, 9, 25]);
        let even: Vec<u64> = (1..=20).filter(|&n| is_even_square_or_twice_square(n)).collect();
        assert_eq!(even, [2, 4, 8, 16, 18]);
    }

    #[test]
    fn small_progressions() {
        let lab = Lab::new(Exec::Sequential);
        for id in ["spt5", "sb3", "sb1_5", "sb2_5p3", "m2_3p1", "m2_5p1", "m2_5p3"] {
            assert_eq!(check_congruence(congruence(id).unwrap(), 30, &lab).unwrap(), None, "{id}");
        }
    }

    #[test]
    fn wrong_modulus_fails() {
        let lab = Lab::new(Exec::Sequential);
        let c = cong(SptVariant::Spt, 5, 2, None);
        let w = check_congruence(c, 30, &lab).unwrap().unwrap();
        assert_eq!((w.n, w.got), (2, Value::Int(3.into())));
    }

    #[test]
    fn parity_small() {
        for id in ["parity_sb", "parity_sb1", "parity_sb2"] {
            let (v, r) = parity_rule(id).unwrap();
            assert_eq!(check_parity(v, r, 100), None, "{id}");
        }
    }
}
