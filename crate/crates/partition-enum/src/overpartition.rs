//! Overpartitions: the first occurrence of each part size may be overlined.

use std::fmt;

use crate::error::PartitionError;
use crate::partition::{for_each_partition, Parity, Partition, PartitionConstraints, Smallest};

/// Render `k` with a combining overline on every digit.
pub fn overline(k: u32) -> String {
    k.to_string().chars().flat_map(|c| [c, '\u{0305}']).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Overpartition {
    parts: Partition,
    /// Overlined sizes, descending.
    overlined: Vec<u32>,
}

impl Overpartition {
    pub fn new(parts: Partition, mut overlined: Vec<u32>) -> Result<Self, PartitionError> {
        overlined.sort_unstable_by(|a, b| b.cmp(a));
        if overlined.windows(2).any(|w| w[0] == w[1]) {
            return Err(PartitionError::DoubleOverline);
        }
        if let Some(&k) = overlined.iter().find(|&&k| parts.multiplicity(k) == 0) {
            return Err(PartitionError::OverlineMissing(k));
        }
        Ok(Overpartition { parts, overlined })
    }

    /// Build from the non-overlined parts and the (distinct) overlined parts.
    pub fn from_split(plain: &Partition, over: &Partition) -> Result<Self, PartitionError> {
        if !over.is_distinct() {
            return Err(PartitionError::DoubleOverline);
        }
        Overpartition::new(plain.union(over), over.parts().to_vec())
    }

    pub fn parts(&self) -> &Partition {
        &self.parts
    }

    pub fn overlined(&self) -> &[u32] {
        &self.overlined
    }

    pub fn size(&self) -> u64 {
        self.parts.size()
    }

    /// The non-overlined parts (π1 in the marked-overpartition split).
    pub fn non_overlined(&self) -> Partition {
        let mut v = self.parts.parts().to_vec();
        for &k in &self.overlined {
            let i = v.iter().position(|&p| p == k).expect("overlined size present");
            v.remove(i);
        }
        Partition::from_desc(v)
    }

    /// The overlined parts (π2), which are distinct.
    pub fn overlined_parts(&self) -> Partition {
        Partition::from_desc(self.overlined.clone())
    }

    pub fn smallest(&self) -> Smallest {
        self.parts.smallest()
    }

    pub fn smallest_overlined(&self) -> bool {
        matches!(self.smallest(), Smallest::Part(s) if self.overlined.contains(&s))
    }
}

impl fmt::Display for Overpartition {
    /// Descending parts; an overlined size is written overlined at its first occurrence.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "--");
        }
        let mut prev = 0;
        for (i, &p) in self.parts.parts().iter().enumerate() {
            if i > 0 {
                write!(f, "+")?;
            }
            if p != prev && self.overlined.contains(&p) {
                write!(f, "{}", overline(p))?;
            } else {
                write!(f, "{p}")?;
            }
            prev = p;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OverpartitionConstraints {
    pub smallest_not_overlined: bool,
    pub smallest_parity: Option<Parity>,
}

/// Visit every overpartition of `n`, ordered by underlying partition (lexicographically
/// descending) and then by overline subset, with the largest size toggling fastest.
pub fn for_each_overpartition(n: u32, c: &OverpartitionConstraints, mut f: impl FnMut(&Overpartition)) {
    let pc = PartitionConstraints { smallest_parity: c.smallest_parity, ..Default::default() };
    for_each_partition(n, &pc, |parts| {
        let p = Partition::from_desc(parts.to_vec());
        let sizes = p.distinct_sizes();
        let d = sizes.len();
        for mask in 0u64..(1u64 << d) {
            if c.smallest_not_overlined && d > 0 && mask >> (d - 1) & 1 == 1 {
                continue;
            }
            let over = (0..d).filter(|&i| mask >> i & 1 == 1).map(|i| sizes[i]).collect();
            f(&Overpartition { parts: p.clone(), overlined: over });
        }
    });
}

pub fn enumerate_overpartitions(n: u32, c: &OverpartitionConstraints) -> Vec<Overpartition> {
    let mut out = Vec::new();
    for_each_overpartition(n, c, |o| out.push(o.clone()));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strs(v: &[Overpartition]) -> Vec<String> {
        v.iter().map(|o| o.to_string()).collect()
    }

    #[test]
    fn fourteen_overpartitions_of_four() {
        let v = enumerate_overpartitions(4, &OverpartitionConstraints::default());
        let o = overline;
        let want = vec![
            "4".to_string(),
            o(4),
            "3+1".into(),
            format!("{}+1", o(3)),
            format!("3+{}", o(1)),
            format!("{}+{}", o(3), o(1)),
            "2+2".into(),
            format!("{}+2", o(2)),
            "2+1+1".into(),
            format!("{}+1+1", o(2)),
            format!("2+{}+1", o(1)),
            format!("{}+{}+1", o(2), o(1)),
            "1+1+1+1".into(),
            format!("{}+1+1+1", o(1)),
        ];
        assert_eq!(strs(&v), want);
    }

    #[test]
    fn smallest_not_overlined_three() {
        let c = OverpartitionConstraints { smallest_not_overlined: true, ..Default::default() };
        let v = enumerate_overpartitions(3, &c);
        assert_eq!(strs(&v), ["3".to_string(), "2+1".into(), format!("{}+1", overline(2)), "1+1+1".into()]);
    }

    #[test]
    fn nine_overpartitions_of_eight() {
        let c = OverpartitionConstraints { smallest_not_overlined: true, smallest_parity: Some(Parity::Even) };
        assert_eq!(enumerate_overpartitions(8, &c).len(), 9);
    }

    #[test]
    fn split_roundtrip() {
        for o in enumerate_overpartitions(7, &OverpartitionConstraints::default()) {
            let back = Overpartition::from_split(&o.non_overlined(), &o.overlined_parts()).unwrap();
            assert_eq!(back, o);
        }
    }

    #[test]
    fn invalid_overlines_rejected() {
        let p = Partition::new(vec![2, 1]).unwrap();
        assert_eq!(Overpartition::new(p.clone(), vec![3]), Err(PartitionError::OverlineMissing(3)));
        assert_eq!(Overpartition::new(p, vec![2, 2]), Err(PartitionError::DoubleOverline));
    }

    #[test]
    fn multi_digit_overline() {
        assert_eq!(overline(10), "1\u{0305}0\u{0305}");
    }
}
