//! Exhaustive checks of the pair model, Φ and Ψₙ.

use std::collections::BTreeSet;

use partition_enum::enumerate_partitions;
use spt_cranks::{
    crank_bar, d_n, enumerate_marked, enumerate_sp_pairs, k_partition, k_vec, p_n, phi, phi_inv, psi, psi_inv,
    sp_crank_table, SptFamily,
};

use crate::error::Result;
use crate::lab::Lab;
use crate::report::{earliest, laurent_witness, Value, Witness};

fn text(s: impl Into<String>) -> Value {
    Value::Text(s.into())
}

/// crank̄ distribution of SP̄, SP̄₁, SP̄₂ pairs equals the weighted vector tables.
pub fn check_pair_model(max_n: usize, lab: &Lab) -> Result<Option<Witness>> {
    let mut w = None;
    for f in [SptFamily::SBar, SptFamily::SBar1, SptFamily::SBar2] {
        let pairs = sp_crank_table(f, max_n)?;
        w = earliest(w, laurent_witness(&lab.series(f.table_family(), max_n)?, pairs.series()));
    }
    Ok(w)
}

/// Φ is a size-preserving bijection onto SP̄ carrying k̄ to k and sptcrank to crank̄, for n ≤ max_n.
pub fn check_phi(max_n: usize) -> Result<Option<Witness>> {
    for n in 1..=max_n as u32 {
        let mut images = BTreeSet::new();
        for m in enumerate_marked(n, None) {
            let pair = phi(&m)?;
            let here =
                |what: &str| Some(Witness::new(n as usize, None, text(format!("{m} {what}")), text(pair.to_string())));
            if !pair.is_member(SptFamily::SBar)? || pair.size() != n as u64 {
                return Ok(here("maps into SP̄ of the same size"));
            }
            if k_vec(&pair)? != m.kbar() || crank_bar(&pair)? != m.sptcrank() {
                return Ok(here("keeps k̄ and sptcrank"));
            }
            if phi_inv(&pair)? != m {
                return Ok(here("inverts"));
            }
            if !images.insert(pair.clone()) {
                return Ok(here("is injective"));
            }
        }
        let total = enumerate_sp_pairs(n, SptFamily::SBar)?.len();
        if images.len() != total {
            return Ok(Some(Witness::new(n as usize, None, total as u64, images.len() as u64)));
        }
    }
    Ok(None)
}

/// |Dₙ(ℓ)| = |Pₙ(ℓ)| for 0 ≤ n ≤ max_n, 1 ≤ ℓ ≤ max_size.
pub fn check_euler_counts(max_n: u32, max_size: u32) -> Option<Witness> {
    (1..=max_size).find_map(|l| {
        (0..=max_n).find_map(|n| {
            let d = enumerate_partitions(l, &d_n(n)).len() as u64;
            let p = enumerate_partitions(l, &p_n(n)).len() as u64;
            (d != p).then(|| Witness::new(l as usize, Some(n as i64), d, p))
        })
    })
}

/// Ψₙ: Dₙ → Pₙ bijective with k(π,n) = #(parts of Ψₙ(π) ≤ 2n−1), 1 ≤ n ≤ max_n, ℓ ≤ max_size.
pub fn check_psi(max_n: u32, max_size: u32) -> Result<Option<Witness>> {
    for l in 1..=max_size {
        for n in 1..=max_n {
            let here =
                |got: String| Some(Witness::new(l as usize, Some(n as i64), text("bijection keeping k"), text(got)));
            let targets: BTreeSet<_> = enumerate_partitions(l, &p_n(n)).into_iter().collect();
            let mut images = BTreeSet::new();
            for pi in enumerate_partitions(l, &d_n(n)) {
                let lam = psi(n, &pi)?;
                let small = lam.parts().iter().filter(|&&p| p < 2 * n).count() as u64;
                if !targets.contains(&lam) || psi_inv(n, &lam)? != pi || k_partition(&pi, n)? != small {
                    return Ok(here(format!("{pi} -> {lam}")));
                }
                images.insert(lam);
            }
            if images != targets {
                return Ok(Some(Witness::new(l as usize, Some(n as i64), targets.len() as u64, images.len() as u64)));
            }
        }
    }
    Ok(None)
}
