//! Syntactic classification of naturally coincidental barred patterns and
//! coincidental vincular patterns, plus the census tables built from
//! exhaustive enumeration.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::pattern::{BarredPattern, VincularPattern};
use crate::permutation::Permutation;
use crate::transforms::{bar_set, bond_set, boycotts, Boycott};

/// Largest pattern length scanned by the enumerators.
pub const MAX_ENUMERATION_N: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Condition {
    UniqueBoycott,
    BSize,
    MinGap,
    Coverage,
}

impl Condition {
    pub fn id(self) -> &'static str {
        match self {
            Condition::UniqueBoycott => "unique-boycott",
            Condition::BSize => "B-size",
            Condition::MinGap => "min-gap",
            Condition::Coverage => "coverage",
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NatCoReport {
    pub verdict: bool,
    pub boycott_count: usize,
    /// A condition is listed when it fails for at least one boycott.
    pub failed_conditions: Vec<Condition>,
}

fn b_size_ok(x: &Boycott) -> bool {
    x.barred.len() <= 2
}

/// Distinct values of X are at distance > 1 unless the pair is exactly U(X).
fn min_gap_ok(x: &Boycott) -> bool {
    let u = x.unbarred_values();
    let vals: Vec<u32> = x.values().into_iter().collect();
    vals.windows(2)
        .all(|w| w[1] - w[0] > 1 || (u.len() == 2 && u.contains(&w[0]) && u.contains(&w[1])))
}

/// Every pair {k, k+1} with 0 <= k <= n meets X.
fn coverage_ok(x: &Boycott, n: usize) -> bool {
    let vals = x.values();
    (0..=n as u32).all(|k| vals.contains(&k) || vals.contains(&(k + 1)))
}

type BoycottCheck<'a> = dyn Fn(&Boycott) -> bool + 'a;

/// Decides natural coincidence from the boycott structure alone.
pub fn is_nat_co(b: &BarredPattern) -> NatCoReport {
    let bs = boycotts(b);
    let n = b.len();
    let mut failed = Vec::new();
    if bs.len() != 1 {
        failed.push(Condition::UniqueBoycott);
    }
    let checks: [(Condition, &BoycottCheck); 3] = [
        (Condition::BSize, &b_size_ok),
        (Condition::MinGap, &min_gap_ok),
        (Condition::Coverage, &|x| coverage_ok(x, n)),
    ];
    for (cond, check) in checks {
        if !bs.iter().all(check) {
            failed.push(cond);
        }
    }
    NatCoReport {
        verdict: failed.is_empty(),
        boycott_count: bs.len(),
        failed_conditions: failed,
    }
}

/// The explicit shapes a nat-co pattern can take.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NatCoShape {
    /// n = 3, X = {1,3}, one bar.
    N3,
    /// n = 4, the given (U, B) pair.
    N4 { unbarred: [u32; 2], barred: u32 },
    /// n = 5, X = {1,3,5} with one or two bars.
    N5 { bars: usize },
    /// n = 6, the given (U, B) pair.
    N6 {
        unbarred: [u32; 2],
        barred: [u32; 2],
    },
    /// n = 7, X = {1,3,5,7}, two bars.
    N7,
}

/// Matches `b` against the five explicit (n, X, U, B) shapes.
pub fn natco_shape(b: &BarredPattern) -> Option<NatCoShape> {
    let bs = boycotts(b);
    let [x] = bs.as_slice() else {
        return None;
    };
    let vals: Vec<u32> = x.values().into_iter().collect();
    let u: Vec<u32> = x.unbarred_values().into_iter().collect();
    let bars: Vec<u32> = x.barred_values().into_iter().collect();
    match b.len() {
        3 if vals == [1, 3] && bars.len() == 1 => Some(NatCoShape::N3),
        4 => match (u.as_slice(), bars.as_slice()) {
            ([1, 2], [4]) => Some(NatCoShape::N4 {
                unbarred: [1, 2],
                barred: 4,
            }),
            ([3, 4], [1]) => Some(NatCoShape::N4 {
                unbarred: [3, 4],
                barred: 1,
            }),
            _ => None,
        },
        5 if vals == [1, 3, 5] && (1..=2).contains(&bars.len()) => {
            Some(NatCoShape::N5 { bars: bars.len() })
        }
        6 => match (u.as_slice(), bars.as_slice()) {
            ([1, 2], [4, 6]) | ([3, 4], [1, 6]) | ([5, 6], [1, 3]) => Some(NatCoShape::N6 {
                unbarred: [u[0], u[1]],
                barred: [bars[0], bars[1]],
            }),
            _ => None,
        },
        7 if vals == [1, 3, 5, 7] && bars.len() == 2 => Some(NatCoShape::N7),
        _ => None,
    }
}

pub fn corollary_forms_check(b: &BarredPattern) -> bool {
    natco_shape(b).is_some()
}

/// Every nonempty proper bar mask over `n` positions, as bitmasks.
fn proper_masks(n: usize) -> impl Iterator<Item = u32> {
    1u32..((1u32 << n) - 1)
}

fn mask_to_bars(mask: u32, n: usize) -> Vec<bool> {
    (0..n).map(|i| mask >> i & 1 == 1).collect()
}

/// All barred patterns on `n` letters, scanned shard by shard (by leading
/// letter) and merged in order; `keep` filters.
pub fn scan_barred<F>(n: usize, keep: F) -> Vec<BarredPattern>
where
    F: Fn(&BarredPattern) -> bool + Sync,
{
    assert!(n >= 1);
    if n == 1 {
        return Vec::new();
    }
    let shards: Vec<Vec<BarredPattern>> = (1..=n as u32)
        .into_par_iter()
        .map(|first| {
            let mut out = Vec::new();
            for p in Permutation::all_with_first(n, first) {
                for mask in proper_masks(n) {
                    let b = BarredPattern::from_mask(p.clone(), mask_to_bars(mask, n))
                        .expect("mask is nonempty and proper");
                    if keep(&b) {
                        out.push(b);
                    }
                }
            }
            out
        })
        .collect();
    let mut all: Vec<BarredPattern> = shards.into_iter().flatten().collect();
    all.sort();
    all
}

/// Every nat-co barred pattern on `n` letters, `1 <= n <= 8`, sorted.
pub fn enumerate_nat_co(n: usize) -> Result<Vec<BarredPattern>> {
    if !(1..=MAX_ENUMERATION_N).contains(&n) {
        return Err(Error::invalid(format!(
            "n must lie in 1..={MAX_ENUMERATION_N}"
        )));
    }
    Ok(scan_barred(n, |b| is_nat_co(b).verdict))
}

/// Counts of nat-co patterns keyed by (letters, bars).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Census {
    pub max_n: usize,
    pub cells: BTreeMap<(usize, usize), usize>,
}

impl Census {
    pub fn cell(&self, n: usize, bars: usize) -> usize {
        self.cells.get(&(n, bars)).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.cells.values().sum()
    }
}

fn census_of(patterns: &[BarredPattern], max_n: usize) -> Census {
    let mut cells = BTreeMap::new();
    for b in patterns {
        *cells.entry((b.len(), b.bar_count())).or_insert(0) += 1;
    }
    Census { max_n, cells }
}

/// Census over `1 <= n <= max_n`.
pub fn nat_co_census_up_to(max_n: usize) -> Result<Census> {
    let mut all = Vec::new();
    for n in 1..=max_n {
        all.extend(enumerate_nat_co(n)?);
    }
    Ok(census_of(&all, max_n))
}

/// Census over n = 1..=7; no nat-co pattern has more letters.
pub fn nat_co_census() -> Census {
    nat_co_census_up_to(7).expect("7 is within the enumeration range")
}

/// `v` is coincidental when bar(v) is a single nat-co pattern whose bond
/// set is exactly `{v}`.
pub fn is_coincidental_vincular(v: &VincularPattern) -> Result<bool> {
    if !v.is_proper() {
        return Err(Error::invalid(format!(
            "{v} is not a proper vincular pattern"
        )));
    }
    let bars = bar_set(v)?;
    let [b] = bars.as_slice() else {
        return Ok(false);
    };
    if !is_nat_co(b).verdict {
        return Ok(false);
    }
    Ok(bond_set(b).as_slice() == std::slice::from_ref(v))
}

/// Coincidental vincular patterns with `2 <= n <= max_n`, ordered by length
/// and then canonical text.
pub fn enumerate_coincidental_vincular(max_n: usize) -> Result<Vec<VincularPattern>> {
    if max_n > MAX_ENUMERATION_N {
        return Err(Error::invalid(format!(
            "max_n must be at most {MAX_ENUMERATION_N}"
        )));
    }
    let mut out = Vec::new();
    for n in 2..=max_n {
        let mut found: Vec<VincularPattern> = Permutation::all(n)
            .collect::<Vec<_>>()
            .into_par_iter()
            .flat_map_iter(|p| {
                (1u32..(1u32 << (n + 1))).filter_map(move |mask| {
                    let bonds = (0..=n).map(|s| mask >> s & 1 == 1).collect();
                    let v = VincularPattern::from_mask(p.clone(), bonds).expect("n + 1 sites");
                    (v.is_proper() && is_coincidental_vincular(&v).expect("proper")).then_some(v)
                })
            })
            .collect();
        found.sort_by_key(|v| v.to_string());
        out.extend(found);
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableKind {
    Census,
    Samples,
    Coincidental,
}

impl TableKind {
    pub fn from_number(which: u8) -> Result<Self> {
        match which {
            1 => Ok(TableKind::Census),
            2 => Ok(TableKind::Samples),
            3 => Ok(TableKind::Coincidental),
            _ => Err(Error::invalid(format!(
                "no table {which}; expected 1, 2 or 3"
            ))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Table {
    /// Nat-co counts by (n, bars).
    Census(Census),
    /// The least nat-co pattern for every nonzero census cell.
    Samples(BTreeMap<(usize, usize), BarredPattern>),
    /// Coincidental vincular patterns grouped by length.
    Coincidental(BTreeMap<usize, Vec<VincularPattern>>),
}

/// Regenerates a table from enumeration.
pub fn emit_table(kind: TableKind) -> Table {
    match kind {
        TableKind::Census => Table::Census(nat_co_census()),
        TableKind::Samples => {
            let mut cells = BTreeMap::new();
            for n in 1..=7 {
                for b in enumerate_nat_co(n).expect("n in range") {
                    // enumerate_nat_co is sorted, so the first hit is least
                    cells.entry((n, b.bar_count())).or_insert(b);
                }
            }
            Table::Samples(cells)
        }
        TableKind::Coincidental => {
            let mut groups: BTreeMap<usize, Vec<VincularPattern>> = BTreeMap::new();
            for v in enumerate_coincidental_vincular(4).expect("4 in range") {
                groups.entry(v.len()).or_default().push(v);
            }
            Table::Coincidental(groups)
        }
    }
}
