//! Positive first moments of the overpartition rank and residual crank.

use num_bigint::BigInt;
use partition_enum::{Family, TwoVarTable};

use crate::error::Result;
use crate::lab::Lab;
use crate::report::{Value, Witness};

/// Σ_{m≥1} m·c(m,n).
pub fn positive_moment(table: &TwoVarTable, n: usize) -> BigInt {
    (1..=n as i64).map(|m| table.get(m, n) * m).sum()
}

/// M̄₁⁺(n) for `Family::MBar`, N̄₁⁺(n) for `Family::NBar`.
pub fn first_moment(family: Family, n: usize, lab: &Lab) -> Result<BigInt> {
    Ok(positive_moment(&*lab.table(family, n)?, n))
}

/// M̄₁⁺(n) − N̄₁⁺(n) = N_S̄(0,n) ≥ 0 for 1 ≤ n ≤ max_n.
pub fn check_moment_identity(max_n: usize, lab: &Lab) -> Result<Option<Witness>> {
    let mbar = lab.table(Family::MBar, max_n)?;
    let nbar = lab.table(Family::NBar, max_n)?;
    let sbar = lab.table(Family::SBar, max_n)?;
    Ok((1..=max_n).find_map(|n| {
        let diff = positive_moment(&mbar, n) - positive_moment(&nbar, n);
        let want = sbar.get(0, n);
        if diff != want {
            Some(Witness::new(n, Some(0), want, diff))
        } else if diff < BigInt::from(0) {
            Some(Witness::new(n, None, Value::Text(">= 0".into()), diff))
        } else {
            None
        }
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use series_core::Exec;

    #[test]
    fn three() {
        let lab = Lab::new(Exec::Sequential);
        let d = first_moment(Family::MBar, 3, &lab).unwrap() - first_moment(Family::NBar, 3, &lab).unwrap();
        assert_eq!(d, BigInt::from(2));
        assert_eq!(check_moment_identity(25, &lab).unwrap(), None);
    }
}
