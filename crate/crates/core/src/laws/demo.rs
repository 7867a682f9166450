use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arithmetic::ProjectiveArithmetic;
use crate::error::Result;
use crate::scalar::Natural;

/// Elements `M` with `M ⊕ 1 = M`, equivalently `1 ≪ M`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MachineInfinityReport {
    pub gen: String,
    pub bound: u64,
    pub members: Vec<u64>,
    /// `members` as maximal runs of consecutive values.
    pub runs: Vec<(u64, u64)>,
}

impl MachineInfinityReport {
    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Every `M` in `[1, bound]` is a member.
    pub fn covers_positive(&self) -> bool {
        self.runs
            .first()
            .is_some_and(|&(s, e)| s <= 1 && e == self.bound)
    }
}

/// Scans `[0, bound]` for elements satisfying `M + 1 = M`.
pub fn machine_infinity_demo<N: Natural>(
    ar: &ProjectiveArithmetic<N>,
    bound: u64,
) -> Result<MachineInfinityReport> {
    let one = N::one();
    let flags = (0..=bound)
        .into_par_iter()
        .map(|m| {
            let m = N::from(m);
            Ok(ar.add(&m, &one)? == m)
        })
        .collect::<Result<Vec<bool>>>()?;
    let members: Vec<u64> = (0..=bound).filter(|&m| flags[m as usize]).collect();
    let mut runs: Vec<(u64, u64)> = Vec::new();
    for &m in &members {
        match runs.last_mut() {
            Some((_, e)) if *e + 1 == m => *e = m,
            _ => runs.push((m, m)),
        }
    }
    Ok(MachineInfinityReport {
        gen: ar.spec_text(),
        bound,
        members,
        runs,
    })
}
