use std::collections::BTreeSet;

use num_bigint::BigInt;
use partition_enum::{enumerate_partitions, Parity};
use proptest::prelude::*;
use spt_cranks::*;

#[test]
fn phi_is_a_crank_preserving_bijection() {
    for n in 1..=14u32 {
        let marked = enumerate_marked(n, None);
        let mut images = BTreeSet::new();
        for m in &marked {
            let pair = phi(m).unwrap();
            assert_eq!(pair.size(), n as u64);
            assert_eq!(k_vec(&pair).unwrap(), m.kbar(), "{m}");
            assert_eq!(crank_bar(&pair).unwrap(), m.sptcrank(), "{m}");
            assert_eq!(&phi_inv(&pair).unwrap(), m);
            images.insert(pair);
        }
        let pairs: BTreeSet<_> = enumerate_sp_pairs(n, SptFamily::SBar).unwrap().into_iter().collect();
        assert_eq!(images, pairs, "n = {n}");
    }
}

#[test]
fn parity_filters_agree() {
    for n in 1..=12u32 {
        for (f, p) in [(SptFamily::SBar1, Parity::Odd), (SptFamily::SBar2, Parity::Even)] {
            assert_eq!(enumerate_marked(n, Some(p)).len(), enumerate_sp_pairs(n, f).unwrap().len());
        }
    }
}

#[test]
fn sptcrank_distribution_is_the_table() {
    let t = nsb_table(SptFamily::SBar, 12);
    for n in 1..=12u32 {
        let mut counts = vec![0i64; 2 * n as usize + 1];
        for m in enumerate_marked(n, None) {
            counts[(m.sptcrank() + n as i64) as usize] += 1;
        }
        for (i, c) in counts.iter().enumerate() {
            assert_eq!(t.get(i as i64 - n as i64, n as usize), BigInt::from(*c));
        }
    }
}

#[test]
fn tables_nonnegative() {
    for f in [SptFamily::SBar, SptFamily::SBar1, SptFamily::SBar2, SptFamily::S2Bar] {
        let t = nsb_table(f, 30);
        assert!(t.entries().all(|(_, _, c)| *c >= BigInt::from(0)), "{f}");
        assert!(t.is_symmetric());
    }
}

#[test]
fn psi_is_bijective_onto_p_n() {
    for n in 1..=6u32 {
        for l in 1..=24u32 {
            let ds = enumerate_partitions(l, &d_n(n));
            let ps: BTreeSet<_> = enumerate_partitions(l, &p_n(n)).into_iter().collect();
            let images: BTreeSet<_> = ds.iter().map(|d| psi(n, d).unwrap()).collect();
            assert_eq!(images.len(), ds.len());
            assert_eq!(images, ps, "n={n}, l={l}");
        }
    }
}

proptest! {
    #[test]
    fn k_int_is_zero_or_power_of_two(n in 1u64..200, d in 1u64..400) {
        let k = k_int(n + d, n).unwrap();
        prop_assert!(k == 0 || k.is_power_of_two());
        prop_assert!(k <= (n + d) / (n + 1));
    }

    #[test]
    fn random_mark_roundtrips(n in 1u32..16, pick in any::<prop::sample::Index>()) {
        let all = enumerate_marked(n, None);
        let m = &all[pick.index(all.len())];
        prop_assert_eq!(&phi_inv(&phi(m).unwrap()).unwrap(), m);
    }
}
