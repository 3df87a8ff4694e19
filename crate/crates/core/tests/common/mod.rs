//! Definition-level reference implementations, written independently of the
//! library's backtracking matcher: every position subset is tried.

#![allow(dead_code)]

use permpat::{BarredPattern, BarredSemantics, Pattern, Permutation, VincularPattern};

pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::new(), &mut out);
    }
    out
}

fn ranks(vals: &[u32]) -> Vec<u32> {
    vals.iter()
        .map(|v| vals.iter().filter(|u| *u <= v).count() as u32)
        .collect()
}

pub fn naive_occurrences(w: &Permutation, p: &Permutation) -> Vec<Vec<usize>> {
    combinations(w.len(), p.len())
        .into_iter()
        .filter(|c| {
            let vals: Vec<u32> = c.iter().map(|&i| w.letters()[i]).collect();
            ranks(&vals) == p.letters()
        })
        .collect()
}

pub fn naive_contains_vincular(w: &Permutation, v: &VincularPattern) -> bool {
    let k = v.len();
    naive_occurrences(w, v.class()).iter().any(|c| {
        v.bond_sites().iter().all(|&s| {
            if s == 0 {
                c[0] == 0
            } else if s == k {
                c[k - 1] == w.len() - 1
            } else {
                c[s] == c[s - 1] + 1
            }
        })
    })
}

pub fn naive_contains_barred(w: &Permutation, b: &BarredPattern, sem: BarredSemantics) -> bool {
    let unbarred = b.unbarred_positions();
    let vals: Vec<u32> = unbarred.iter().map(|&i| b.class().letters()[i]).collect();
    let u = Permutation::new(ranks(&vals)).unwrap();
    let full = naive_occurrences(w, b.class());
    naive_occurrences(w, &u).into_iter().any(|o| {
        !full.iter().any(|f| match sem {
            BarredSemantics::Subset => o.iter().all(|x| f.contains(x)),
            BarredSemantics::Role => unbarred.iter().map(|&i| f[i]).eq(o.iter().copied()),
        })
    })
}

pub fn naive_contains(w: &Permutation, p: &Pattern, sem: BarredSemantics) -> bool {
    match p {
        Pattern::Classical(c) => !naive_occurrences(w, c).is_empty(),
        Pattern::Barred(b) => naive_contains_barred(w, b, sem),
        Pattern::Vincular(v) => naive_contains_vincular(w, v),
    }
}

/// Every barred pattern on `n` letters.
pub fn all_barred(n: usize) -> Vec<BarredPattern> {
    let mut out = Vec::new();
    for p in Permutation::all(n) {
        for mask in 1u32..(1 << n) - 1 {
            let bars = (0..n).filter(|i| mask >> i & 1 == 1);
            out.push(BarredPattern::new(p.clone(), bars).unwrap());
        }
    }
    out
}

/// Every vincular pattern on `n` letters with at least one bond.
pub fn all_vincular(n: usize) -> Vec<VincularPattern> {
    let mut out = Vec::new();
    for p in Permutation::all(n) {
        for mask in 1u32..(1 << (n + 1)) {
            let sites = (0..=n).filter(|s| mask >> s & 1 == 1);
            out.push(VincularPattern::new(p.clone(), sites).unwrap());
        }
    }
    out
}

pub fn all_perms_up_to(m: usize) -> Vec<Permutation> {
    (1..=m).flat_map(Permutation::all).collect()
}

/// Coincidental vincular patterns, transcribed by hand (column by column).
pub const TABLE_3: [&str; 48] = [
    // n = 2
    "[*1]2", "[*2]1", "1[2*]", "2[1*]", // n = 3
    "[12]3", "[21]3", "[23]1", "[32]1", "3[12]", "3[21]", "1[23]", "1[32]", // n = 4
    "[13]24", "[13]42", "[31]24", "[31]42", "[14]23", "[14]32", "[41]23", "[41]32", "[24]13",
    "[24]31", "[42]13", "[42]31", "2[13]4", "4[13]2", "2[31]4", "4[31]2", "2[14]3", "3[14]2",
    "2[41]3", "3[41]2", "1[24]3", "3[24]1", "1[42]3", "3[42]1", "24[13]", "42[13]", "24[31]",
    "42[31]", "23[14]", "32[14]", "23[41]", "32[41]", "13[24]", "31[24]", "13[42]", "31[42]",
];

/// Table 1 nonzero cells: ((n, bars), count).
pub const TABLE_1: [((usize, usize), usize); 6] = [
    ((3, 1), 4),
    ((4, 1), 8),
    ((5, 1), 36),
    ((5, 2), 24),
    ((6, 2), 72),
    ((7, 2), 576),
];

/// Table 2 samples: (text, n, bars).
pub const TABLE_2: [(&str, usize, usize); 6] = [
    ("3'12", 3, 1),
    ("14'23", 4, 1),
    ("15'324", 5, 1),
    ("3'5'124", 5, 2),
    ("14'6'235", 6, 2),
    ("15'7'3246", 7, 2),
];
