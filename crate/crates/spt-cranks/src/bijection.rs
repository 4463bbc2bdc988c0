//! k(m,n), the bijection Ψₙ : Dₙ → Pₙ, and Φ between marked overpartitions and SP̄ pairs.

use partition_enum::{Overpartition, Partition, PartitionConstraints, Smallest};

use crate::error::{CrankError, Result};
use crate::marked::MarkedOverpartition;
use crate::pairs::PartitionPair;
use crate::vector::SptFamily;

/// m = b·2^j with b odd.
fn odd_split(m: u64) -> (u64, u32) {
    let j = m.trailing_zeros();
    (m >> j, j)
}

/// Smallest j0 ≥ 0 with b·2^{j0} ≥ n+1.
fn j0(b: u64, n: u64) -> u32 {
    let mut j = 0;
    while b << j < n + 1 {
        j += 1;
    }
    j
}

/// k(m,n) for m ≥ n+1.
pub fn k_int(m: u64, n: u64) -> Result<u64> {
    if n == 0 || m <= n {
        return Err(CrankError::KDomain { m, n });
    }
    let (b, j) = odd_split(m);
    if b >= 2 * n {
        return Ok(0);
    }
    let j0 = j0(b, n);
    Ok(if b << j0 < 2 * n { 1 << (j - j0) } else { 0 })
}

/// Σ k(m,n) over the parts of a partition into distinct parts ≥ n+1.
pub fn k_partition(pi: &Partition, n: u32) -> Result<u64> {
    pi.parts().iter().map(|&m| k_int(m as u64, n as u64)).sum()
}

/// Dₙ: distinct parts ≥ n+1.
pub fn d_n(n: u32) -> PartitionConstraints {
    PartitionConstraints { min_part: Some(n + 1), distinct: true, ..Default::default() }
}

/// Pₙ: parts ≥ n+1, those > 2n odd.
pub fn p_n(n: u32) -> PartitionConstraints {
    PartitionConstraints { min_part: Some(n + 1), odd_above: Some(2 * n), ..Default::default() }
}

/// Ψₙ: each part b·2^j becomes 2^{j−j0} copies of b·2^{j0}.
pub fn psi(n: u32, pi: &Partition) -> Result<Partition> {
    if !d_n(n).admits(pi) {
        return Err(CrankError::NotMember("Dₙ"));
    }
    let mut out = Vec::new();
    for &m in pi.parts() {
        let (b, j) = odd_split(m as u64);
        let j0 = j0(b, n as u64);
        out.extend(std::iter::repeat_n((b << j0) as u32, 1 << (j - j0)));
    }
    Ok(Partition::new(out)?)
}

/// Ψₙ⁻¹: a part p of multiplicity μ = Σ 2^a becomes the parts p·2^a.
pub fn psi_inv(n: u32, lam: &Partition) -> Result<Partition> {
    if !p_n(n).admits(lam) {
        return Err(CrankError::NotMember("Pₙ"));
    }
    let mut out = Vec::new();
    for p in lam.distinct_sizes() {
        let mu = lam.multiplicity(p);
        out.extend((0..usize::BITS).filter(|a| mu >> a & 1 == 1).map(|a| p << a));
    }
    Ok(Partition::new(out)?)
}

/// Φ(π, j) = (λ1, λ2).
pub fn phi(mop: &MarkedOverpartition) -> Result<PartitionPair> {
    let pi1 = mop.pi1();
    let s = mop.s();
    let nu = pi1.nu();
    let mut l1: Vec<u32> = pi1.parts().iter().copied().filter(|&p| p != s).collect();
    l1.extend(std::iter::repeat_n(s, mop.j()));
    let mut l2 = psi(s, &mop.pi2())?.parts().to_vec();
    l2.extend(std::iter::repeat_n(s, nu - mop.j()));
    Ok(PartitionPair::new(Partition::new(l1)?, Partition::new(l2)?))
}

/// Φ⁻¹(λ1, λ2).
pub fn phi_inv(pair: &PartitionPair) -> Result<MarkedOverpartition> {
    if !pair.is_member(SptFamily::SBar)? {
        return Err(CrankError::NotMember("SP̄"));
    }
    let Smallest::Part(s) = pair.lambda1.smallest() else { unreachable!("members have a smallest part") };
    let j = pair.lambda1.nu();
    let ell = pair.lambda2.multiplicity(s);
    let mut p1 = pair.lambda1.parts().to_vec();
    p1.extend(std::iter::repeat_n(s, ell));
    let rest = Partition::new(pair.lambda2.parts().iter().copied().filter(|&p| p != s).collect())?;
    let pi2 = psi_inv(s, &rest)?;
    let pi = Overpartition::from_split(&Partition::new(p1)?, &pi2)?;
    MarkedOverpartition::new(pi, j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use partition_enum::enumerate_partitions;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn k_values() {
        assert_eq!(k_int(6, 2), Ok(2));
        assert_eq!(k_int(4, 2), Ok(0));
        assert_eq!(k_int(3, 2), Ok(1));
        assert_eq!(k_int(7, 2), Ok(0));
        assert!(k_int(2, 2).is_err());
        assert!(k_int(5, 0).is_err());
    }

    #[test]
    fn psi_three_of_sixteen() {
        let got: Vec<String> =
            enumerate_partitions(16, &d_n(3)).iter().map(|x| format!("{} -> {}", x, psi(3, x).unwrap())).collect();
        assert_eq!(
            got,
            ["16 -> 4+4+4+4", "12+4 -> 6+6+4", "11+5 -> 11+5", "10+6 -> 6+5+5", "9+7 -> 9+7", "7+5+4 -> 7+5+4"]
        );
        assert_eq!(psi(3, &Partition::empty()), Ok(Partition::empty()));
    }

    #[test]
    fn psi_inverse_and_k_count() {
        for n in 1..=4 {
            for l in 1..=20 {
                for x in enumerate_partitions(l, &d_n(n)) {
                    let y = psi(n, &x).unwrap();
                    assert!(p_n(n).admits(&y));
                    assert_eq!(psi_inv(n, &y).unwrap(), x);
                    let small = y.parts().iter().filter(|&&q| q < 2 * n).count() as u64;
                    assert_eq!(k_partition(&x, n).unwrap(), small);
                }
            }
        }
    }

    #[test]
    fn domains_enforced() {
        assert!(psi(3, &p(&[3])).is_err());
        assert!(psi(3, &p(&[5, 5])).is_err());
        assert!(psi_inv(3, &p(&[8])).is_err());
    }
}
