//! Brute-force avoidance classes and bounded coincidence checks.
//!
//! Every length `m` is scanned in full: barred and vincular classes are not
//! closed under containment, so nothing can be pruned. Each length is split
//! into shards by leading letter, scanned in parallel and merged in order,
//! so results never depend on the thread count.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::matcher::{avoids_all, BarredSemantics};
use crate::pattern::{BarredPattern, Pattern, VincularPattern};
use crate::permutation::Permutation;
use crate::transforms::bond_set;

pub const DEFAULT_MAX_LENGTH: usize = 8;
/// Lengths above the default need `allow_extended`; this is the ceiling.
pub const HARD_MAX_LENGTH: usize = 10;
pub const DEFAULT_BUDGET: u64 = 1_000_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleConfig {
    /// Maximum number of elementary containment checks (one pattern against
    /// one permutation) a single scan may perform.
    pub budget: u64,
    /// Permit lengths up to `HARD_MAX_LENGTH`.
    pub allow_extended: bool,
    pub semantics: BarredSemantics,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            budget: DEFAULT_BUDGET,
            allow_extended: false,
            semantics: BarredSemantics::Subset,
        }
    }
}

impl OracleConfig {
    pub fn with_semantics(semantics: BarredSemantics) -> Self {
        OracleConfig {
            semantics,
            ..Self::default()
        }
    }

    /// Checks the length limits and the budget for `pattern_count`
    /// patterns tested against every permutation of length `1..=m_max`.
    pub fn admit(&self, m_max: usize, pattern_count: usize) -> Result<()> {
        if m_max == 0 {
            return Err(Error::invalid("m_max must be at least 1"));
        }
        if m_max > HARD_MAX_LENGTH {
            return Err(Error::invalid(format!(
                "m_max {m_max} exceeds the hard ceiling {HARD_MAX_LENGTH}"
            )));
        }
        if m_max > DEFAULT_MAX_LENGTH && !self.allow_extended {
            return Err(Error::invalid(format!(
                "m_max {m_max} exceeds {DEFAULT_MAX_LENGTH}; extended lengths must be enabled explicitly"
            )));
        }
        let needed = scan_cost(m_max, pattern_count);
        if needed > self.budget as u128 {
            return Err(Error::BudgetExceeded {
                needed,
                budget: self.budget,
            });
        }
        Ok(())
    }
}

/// Sum over m = 1..=m_max of m! * pattern_count.
pub fn scan_cost(m_max: usize, pattern_count: usize) -> u128 {
    let mut fact: u128 = 1;
    let mut total: u128 = 0;
    for m in 1..=m_max as u128 {
        fact *= m;
        total += fact;
    }
    total * pattern_count as u128
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScanMode {
    Collect,
    Count,
}

/// Avoiders of one length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Level {
    pub length: usize,
    pub count: u64,
    /// Lexicographically ordered, present in collect mode.
    pub members: Option<Vec<Permutation>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AvoidanceClass {
    pub patterns: Vec<Pattern>,
    pub levels: Vec<Level>,
}

impl AvoidanceClass {
    pub fn counts(&self) -> Vec<u64> {
        self.levels.iter().map(|l| l.count).collect()
    }

    pub fn level(&self, m: usize) -> Option<&Level> {
        self.levels.iter().find(|l| l.length == m)
    }
}

/// Scans one length, returning the avoiders in lexicographic order.
pub(crate) fn scan_level(
    patterns: &[Pattern],
    m: usize,
    mode: ScanMode,
    semantics: BarredSemantics,
) -> Level {
    let shards: Vec<(u64, Vec<Permutation>)> = (1..=m as u32)
        .into_par_iter()
        .map(|first| {
            let mut count = 0;
            let mut members = Vec::new();
            for w in Permutation::all_with_first(m, first) {
                if avoids_all(&w, patterns, semantics) {
                    count += 1;
                    if mode == ScanMode::Collect {
                        members.push(w);
                    }
                }
            }
            (count, members)
        })
        .collect();
    let count = shards.iter().map(|s| s.0).sum();
    let members =
        (mode == ScanMode::Collect).then(|| shards.into_iter().flat_map(|s| s.1).collect());
    Level {
        length: m,
        count,
        members,
    }
}

/// Exact Av(patterns) at every length `1..=m_max`.
pub fn avoidance_class(
    patterns: &[Pattern],
    m_max: usize,
    mode: ScanMode,
    config: &OracleConfig,
) -> Result<AvoidanceClass> {
    config.admit(m_max, patterns.len())?;
    let levels = (1..=m_max)
        .map(|m| scan_level(patterns, m, mode, config.semantics))
        .collect();
    Ok(AvoidanceClass {
        patterns: patterns.to_vec(),
        levels,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    EqualUpToBound,
    Counterexample,
}

/// Which avoidance class holds the witness.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Barred,
    Vincular,
}

impl Side {
    pub fn as_str(self) -> &'static str {
        match self {
            Side::Barred => "barred",
            Side::Vincular => "vincular",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub status: Status,
    pub bound: usize,
    pub witness: Option<Permutation>,
    /// The side whose avoidance class contains the witness.
    pub witness_side: Option<Side>,
}

impl VerificationReport {
    pub fn is_equal(&self) -> bool {
        self.status == Status::EqualUpToBound
    }
}

/// Compares Av(barred) with Av(vincular) length by length. The first
/// disagreement (shortest, then lexicographically least) is reported.
pub fn verify_coincidence(
    barred: &[BarredPattern],
    vincular: &[VincularPattern],
    m_max: usize,
    config: &OracleConfig,
) -> Result<VerificationReport> {
    config.admit(m_max, barred.len() + vincular.len())?;
    let left: Vec<Pattern> = barred.iter().cloned().map(Pattern::Barred).collect();
    let right: Vec<Pattern> = vincular.iter().cloned().map(Pattern::Vincular).collect();
    let semantics = config.semantics;
    for m in 1..=m_max {
        let hits: Vec<Option<(Permutation, Side)>> = (1..=m as u32)
            .into_par_iter()
            .map(|first| {
                Permutation::all_with_first(m, first).find_map(|w| {
                    let in_left = avoids_all(&w, &left, semantics);
                    let in_right = avoids_all(&w, &right, semantics);
                    match (in_left, in_right) {
                        (true, false) => Some((w, Side::Barred)),
                        (false, true) => Some((w, Side::Vincular)),
                        _ => None,
                    }
                })
            })
            .collect();
        if let Some((w, side)) = hits.into_iter().flatten().next() {
            return Ok(VerificationReport {
                status: Status::Counterexample,
                bound: m_max,
                witness: Some(w),
                witness_side: Some(side),
            });
        }
    }
    Ok(VerificationReport {
        status: Status::EqualUpToBound,
        bound: m_max,
        witness: None,
        witness_side: None,
    })
}

/// Checks Av(b) = Av(bond(b)) up to `m_max`.
pub fn nat_co_semantic_check(
    b: &BarredPattern,
    m_max: usize,
    config: &OracleConfig,
) -> Result<VerificationReport> {
    verify_coincidence(std::slice::from_ref(b), &bond_set(b), m_max, config)
}

pub fn find_counterexample(
    barred: &[BarredPattern],
    vincular: &[VincularPattern],
    m_max: usize,
    config: &OracleConfig,
) -> Result<Option<Permutation>> {
    Ok(verify_coincidence(barred, vincular, m_max, config)?.witness)
}
