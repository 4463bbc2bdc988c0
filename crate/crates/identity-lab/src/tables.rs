//! Worked-example tables, one line per object.

use partition_enum::{enumerate_partitions, Parity};
use spt_cranks::{
    crank_bar, d_n, enumerate_marked, enumerate_sp_pairs, enumerate_vector_partitions, k_vec, psi, SptFamily,
};

use crate::error::Result;

fn residues(v: i64, moduli: &[u32]) -> String {
    moduli.iter().map(|&t| v.rem_euclid(t as i64).to_string()).collect::<Vec<_>>().join(" ")
}

/// `vector weight crank residues…`
pub fn vector_rows(n: u32, family: SptFamily, moduli: &[u32]) -> Vec<String> {
    enumerate_vector_partitions(n, family)
        .iter()
        .map(|w| format!("{} {} {} {}", w.vector, w.weight, w.crank, residues(w.crank, moduli)))
        .collect()
}

/// `pair k crank̄ residues…`
pub fn pair_rows(n: u32, family: SptFamily, moduli: &[u32]) -> Result<Vec<String>> {
    enumerate_sp_pairs(n, family)?
        .iter()
        .map(|p| {
            let c = crank_bar(p)?;
            Ok(format!("{} {} {} {}", p, k_vec(p)?, c, residues(c, moduli)))
        })
        .collect()
}

/// `(π, j) π1 π2 ν k(π2,s) k̄ sptcrank residues…`
pub fn marked_rows(n: u32, parity: Option<Parity>, moduli: &[u32]) -> Vec<String> {
    enumerate_marked(n, parity)
        .iter()
        .map(|m| {
            let c = m.sptcrank();
            format!(
                "{} {} {} {} {} {} {} {}",
                m,
                m.pi1(),
                m.pi2(),
                m.pi1().nu(),
                m.k_pi2(),
                m.kbar(),
                c,
                residues(c, moduli)
            )
        })
        .collect()
}

/// `π -> Ψₙ(π)` over the partitions of `size` into distinct parts ≥ n+1.
pub fn psi_rows(n: u32, size: u32) -> Result<Vec<String>> {
    enumerate_partitions(size, &d_n(n)).iter().map(|p| Ok(format!("{} -> {}", p, psi(n, p)?))).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_rows() {
        assert!(vector_rows(3, SptFamily::SBar, &[3]).contains(&"[1, --, --, 2] 1 0 0".to_string()));
        assert!(pair_rows(3, SptFamily::SBar, &[3]).unwrap().contains(&"[1+1, 1] 1 -1 2".to_string()));
        assert_eq!(marked_rows(1, None, &[3]), ["(1, 1) 1 -- 1 0 0 0 0"]);
        assert_eq!(psi_rows(3, 16).unwrap().len(), 6);
    }
}
