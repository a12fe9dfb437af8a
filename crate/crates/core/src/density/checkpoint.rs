use std::collections::BTreeMap;
use std::fs;
use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::SweepMode;
use crate::error::{Error, Result};

pub const FORMAT_VERSION: u32 = 1;

/// Resumable state of a sweep: which half-open unit ranges are done and the
/// counters they produced, per grid slot (not cumulative).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepCheckpoint {
    pub format_version: u32,
    pub mode: SweepMode,
    pub grid: Vec<u64>,
    pub total_units: u64,
    pub ranges: Vec<[u64; 2]>,
    pub counters: BTreeMap<String, Vec<u64>>,
}

impl SweepCheckpoint {
    pub fn empty(mode: SweepMode, grid: &[u64], total_units: u64) -> Self {
        let counters = mode
            .counter_names()
            .iter()
            .map(|&name| (name.to_string(), vec![0; grid.len()]))
            .collect();
        SweepCheckpoint {
            format_version: FORMAT_VERSION,
            mode,
            grid: grid.to_vec(),
            total_units,
            ranges: Vec::new(),
            counters,
        }
    }

    pub fn completed_units(&self) -> u64 {
        self.ranges.iter().map(|[lo, hi]| hi - lo).sum()
    }

    pub fn is_complete(&self) -> bool {
        self.completed_units() == self.total_units
    }

    /// Structural checks plus agreement with the sweep being resumed.
    pub fn validate(&self, mode: SweepMode, grid: &[u64], total_units: u64) -> Result<()> {
        let bad = |msg: String| Err(Error::CheckpointInvalid(msg));
        if self.format_version != FORMAT_VERSION {
            return bad(format!(
                "format_version {} (expected {FORMAT_VERSION})",
                self.format_version
            ));
        }
        if self.mode != mode {
            return bad(format!("mode {:?} does not match {:?}", self.mode, mode));
        }
        if self.grid != grid {
            return bad("grid does not match".into());
        }
        if self.total_units != total_units {
            return bad(format!(
                "total_units {} does not match {total_units}",
                self.total_units
            ));
        }
        let mut end = 0;
        for &[lo, hi] in &self.ranges {
            if lo >= hi || hi > total_units {
                return bad(format!("range [{lo}, {hi}) out of bounds"));
            }
            if lo < end {
                return bad(format!("range [{lo}, {hi}) overlaps or is out of order"));
            }
            end = hi;
        }
        let names = mode.counter_names();
        if self.counters.len() != names.len() {
            return bad("unexpected counter set".into());
        }
        for name in names {
            match self.counters.get(*name) {
                Some(v) if v.len() == grid.len() => {}
                _ => return bad(format!("counter {name} missing or of wrong length")),
            }
        }
        Ok(())
    }

    /// Adds a finished range and its counters. The range must be disjoint
    /// from those already recorded; adjacent ranges are coalesced.
    pub(crate) fn absorb(&mut self, range: [u64; 2], counters: &[Vec<u64>]) {
        for (name, add) in self.mode.counter_names().iter().zip(counters) {
            let slot = self.counters.get_mut(*name).expect("counter layout");
            for (acc, v) in slot.iter_mut().zip(add) {
                *acc += v;
            }
        }
        self.ranges.push(range);
        self.ranges.sort_unstable();
        let mut merged: Vec<[u64; 2]> = Vec::with_capacity(self.ranges.len());
        for r in self.ranges.drain(..) {
            match merged.last_mut() {
                Some(last) if last[1] == r[0] => last[1] = r[1],
                _ => merged.push(r),
            }
        }
        self.ranges = merged;
    }

    /// Unit ranges not yet covered, split into pieces of at most `chunk`.
    pub(crate) fn pending(&self, chunk: u64) -> Vec<[u64; 2]> {
        let mut gaps = Vec::new();
        let mut at = 0;
        for &[lo, hi] in self.ranges.iter().chain([[self.total_units; 2]].iter()) {
            let mut start = at;
            while start < lo {
                let end = (start + chunk).min(lo);
                gaps.push([start, end]);
                start = end;
            }
            at = at.max(hi);
        }
        gaps
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = fs::read_to_string(path)?;
        serde_json::from_str(&text)
            .map_err(|e| Error::CheckpointInvalid(format!("{}: {e}", path.display())))
    }

    /// Writes to a sibling temporary file and renames it over `path`.
    pub fn save(&self, path: &Path) -> Result<()> {
        let mut tmp = path.as_os_str().to_owned();
        tmp.push(".tmp");
        let tmp = std::path::PathBuf::from(tmp);
        {
            let mut file = fs::File::create(&tmp)?;
            serde_json::to_writer(&mut file, self).map_err(std::io::Error::other)?;
            file.write_all(b"\n")?;
            file.sync_all()?;
        }
        fs::rename(&tmp, path)?;
        Ok(())
    }
}
