//! On-disk memo of avoidance counts.
//!
//! One record per line, tab separated: the canonical pattern-set string, the
//! length `m`, the count, and optionally the comma-separated members. The
//! pattern-set string is the sorted canonical texts joined by commas. The
//! cache is only consulted under subset semantics; it never overrides a
//! fresh scan's answer, it only replaces the scan.

use std::collections::BTreeMap;
use std::fs;
use std::io::{self, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::matcher::BarredSemantics;
use crate::oracle::{scan_level, AvoidanceClass, Level, OracleConfig, ScanMode};
use crate::pattern::Pattern;
use crate::permutation::Permutation;
use crate::text::parse_permutation;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AvoidanceCache {
    entries: BTreeMap<(String, usize), Level>,
}

/// Cache key for a set of patterns.
pub fn pattern_set_key(patterns: &[Pattern]) -> String {
    let mut texts: Vec<String> = patterns.iter().map(|p| p.to_string()).collect();
    texts.sort();
    texts.dedup();
    texts.join(",")
}

impl AvoidanceCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, key: &str, m: usize) -> Option<&Level> {
        self.entries.get(&(key.to_string(), m))
    }

    pub fn insert(&mut self, key: String, level: Level) {
        match self.entries.get(&(key.clone(), level.length)) {
            // keep member lists once known
            Some(old) if old.members.is_some() && level.members.is_none() => {}
            _ => {
                self.entries.insert((key, level.length), level);
            }
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut cache = AvoidanceCache::new();
        for (lineno, line) in text.lines().enumerate() {
            if line.is_empty() {
                continue;
            }
            let bad = |what: &str| Error::invalid(format!("cache line {}: {what}", lineno + 1));
            let fields: Vec<&str> = line.split('\t').collect();
            if !(3..=4).contains(&fields.len()) {
                return Err(bad("expected 3 or 4 tab-separated fields"));
            }
            let m: usize = fields[1].parse().map_err(|_| bad("bad length"))?;
            let count: u64 = fields[2].parse().map_err(|_| bad("bad count"))?;
            let members = match fields.get(3) {
                None => None,
                Some(&"") => Some(Vec::new()),
                Some(list) => Some(
                    list.split(',')
                        .map(parse_permutation)
                        .collect::<Result<Vec<Permutation>>>()
                        .map_err(|_| bad("bad member"))?,
                ),
            };
            if let Some(ms) = &members {
                if ms.len() as u64 != count || ms.iter().any(|w| w.len() != m) {
                    return Err(bad("member list disagrees with count or length"));
                }
            }
            cache.insert(
                fields[0].to_string(),
                Level {
                    length: m,
                    count,
                    members,
                },
            );
        }
        Ok(cache)
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for ((key, m), level) in &self.entries {
            out.push_str(&format!("{key}\t{m}\t{}", level.count));
            if let Some(ms) = &level.members {
                let list: Vec<String> = ms.iter().map(|w| w.to_string()).collect();
                out.push('\t');
                out.push_str(&list.join(","));
            }
            out.push('\n');
        }
        out
    }

    /// A missing file is an empty cache.
    pub fn load(path: &Path) -> Result<Self> {
        match fs::read_to_string(path) {
            Ok(text) => Self::parse(&text),
            Err(e) if e.kind() == io::ErrorKind::NotFound => Ok(Self::new()),
            Err(e) => Err(Error::invalid(format!("reading {}: {e}", path.display()))),
        }
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        let mut f = fs::File::create(path)
            .map_err(|e| Error::invalid(format!("writing {}: {e}", path.display())))?;
        f.write_all(self.render().as_bytes())
            .map_err(|e| Error::invalid(format!("writing {}: {e}", path.display())))
    }
}

/// `avoidance_class` that reads from and fills `cache`.
pub fn avoidance_class_cached(
    patterns: &[Pattern],
    m_max: usize,
    mode: ScanMode,
    config: &OracleConfig,
    cache: &mut AvoidanceCache,
) -> Result<AvoidanceClass> {
    if config.semantics != BarredSemantics::Subset {
        return crate::oracle::avoidance_class(patterns, m_max, mode, config);
    }
    config.admit(m_max, patterns.len())?;
    let key = pattern_set_key(patterns);
    let mut levels = Vec::with_capacity(m_max);
    for m in 1..=m_max {
        let hit = cache
            .get(&key, m)
            .filter(|l| mode == ScanMode::Count || l.members.is_some());
        let level = match hit {
            Some(l) => {
                let mut l = l.clone();
                if mode == ScanMode::Count {
                    l.members = None;
                }
                l
            }
            None => {
                let l = scan_level(patterns, m, mode, config.semantics);
                cache.insert(key.clone(), l.clone());
                l
            }
        };
        levels.push(level);
    }
    Ok(AvoidanceClass {
        patterns: patterns.to_vec(),
        levels,
    })
}
