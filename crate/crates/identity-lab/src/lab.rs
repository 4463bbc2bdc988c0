//! Shared tables for a batch of checks.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use partition_enum::{series_table, Family, TwoVarTable};
use series_core::{Exec, ZLaurentSeries};
use spt_cranks::{nsb_table_with, SptFamily};

use crate::error::Result;

/// Execution strategy plus a cache of two-variable tables, so that checks run
/// together build each table once.
#[derive(Debug, Default)]
pub struct Lab {
    exec: Exec,
    tables: Mutex<HashMap<Family, Arc<TwoVarTable>>>,
}

impl Lab {
    pub fn new(exec: Exec) -> Self {
        Lab { exec, tables: Mutex::new(HashMap::new()) }
    }

    pub fn exec(&self) -> Exec {
        self.exec
    }

    /// A table for `family` covering at least `0..=max_n`.
    pub fn table(&self, family: Family, max_n: usize) -> Result<Arc<TwoVarTable>> {
        if let Some(t) = self.tables.lock().expect("cache lock").get(&family) {
            if t.max_n() >= max_n {
                return Ok(t.clone());
            }
        }
        let built = Arc::new(match SptFamily::from_table_family(family) {
            Some(f) => nsb_table_with(f, max_n, self.exec),
            None => series_table(family, max_n)?,
        });
        let mut cache = self.tables.lock().expect("cache lock");
        let entry = cache.entry(family).or_insert_with(|| built.clone());
        if entry.max_n() < max_n {
            *entry = built;
        }
        Ok(entry.clone())
    }

    /// The series of `family` truncated to exactly `max_n`.
    pub fn series(&self, family: Family, max_n: usize) -> Result<ZLaurentSeries> {
        Ok(self.table(family, max_n)?.series().truncate(max_n))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cache_grows_and_truncates() {
        let lab = Lab::new(Exec::Sequential);
        let a = lab.table(Family::SBar, 6).unwrap();
        let b = lab.table(Family::SBar, 4).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
        let c = lab.table(Family::SBar, 8).unwrap();
        assert_eq!(c.max_n(), 8);
        assert_eq!(lab.series(Family::SBar, 4).unwrap().trunc(), 4);
        assert_eq!(lab.series(Family::MBar, 5).unwrap().get(0, 1), 0.into());
    }
}
