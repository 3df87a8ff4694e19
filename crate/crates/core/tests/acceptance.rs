mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use permpat::classifier::*;
use permpat::oracle::*;
use permpat::*;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

type Criterion = (&'static str, fn() -> Outcome);

fn texts<T: ToString>(items: &[T]) -> BTreeSet<String> {
    items.iter().map(|x| x.to_string()).collect()
}

fn census() -> Outcome {
    let start = Instant::now();
    let c = nat_co_census();
    let elapsed = start.elapsed();
    let mut cells_match = c.cells.len() == TABLE_1.len();
    for ((n, bars), want) in TABLE_1 {
        cells_match &= c.cell(n, bars) == want;
    }
    let pass = cells_match && c.total() == 720 && elapsed < Duration::from_secs(120);
    outcome(
        pass,
        format!("total {} in {:.1}s", c.total(), elapsed.as_secs_f64()),
    )
}

fn coincidental_vincular() -> Outcome {
    let got = enumerate_coincidental_vincular(5).unwrap();
    let want: BTreeSet<String> = TABLE_3.iter().map(|s| s.to_string()).collect();
    let per_n: Vec<usize> = (2..=5)
        .map(|n| got.iter().filter(|v| v.len() == n).count())
        .collect();
    let pass = texts(&got) == want && per_n == [4, 8, 36, 0];
    outcome(
        pass,
        format!("{} patterns, by n = 2..5: {per_n:?}", got.len()),
    )
}

fn transform_examples() -> Outcome {
    let set = |xs: &[&str]| -> BTreeSet<String> { xs.iter().map(|s| s.to_string()).collect() };
    let b1 = bond_set(&parse_barred("41'3'52'").unwrap());
    let want1 = set(&[
        "[32]41", "3[14]2", "312[4*]", "[23]1", "2[13*]", "[21][3*]", "[12*]",
    ]);
    let b2 = bond_set(&parse_barred("51'2'3'4'6").unwrap());
    let want2 = set(&[
        "[41]235", "4[12]35", "41[23]5", "412[35]", "[31]24", "[312]4", "[31][24]", "3[12]4",
        "3[124]", "31[24]", "[21]3", "[213]", "2[13]", "[12]",
    ]);
    let v1 = bar_set(&parse_vincular("3[142]").unwrap()).unwrap();
    let want3 = set(&["413'52", "314'52", "315'42", "4251'3", "3154'2", "3145'2"]);
    let v2 = texts(&bar_set(&parse_vincular("3[14][2*]").unwrap()).unwrap());
    let printed = set(&["413'52", "42531'", "31524'"]);
    let fourth_ok = v2.len() == 4 && printed.is_subset(&v2) && v2.contains("31425'");
    let pass = b1.len() == 7
        && texts(&b1) == want1
        && texts(&b2) == want2
        && texts(&v1) == want3
        && fourth_ok;
    outcome(
        pass,
        format!(
            "|bond| = {}, {}; |bar| = {}, {}",
            b1.len(),
            b2.len(),
            v1.len(),
            v2.len()
        ),
    )
}

fn semantic_sweep() -> Outcome {
    let start = Instant::now();
    let cfg = OracleConfig::default();
    let mut all = Vec::new();
    for n in 3..=7 {
        all.extend(enumerate_nat_co(n).unwrap());
    }
    let failures = |patterns: &[&BarredPattern], m: usize| -> Vec<String> {
        patterns
            .iter()
            .filter(|b| !nat_co_semantic_check(b, m, &cfg).unwrap().is_equal())
            .map(|b| b.to_string())
            .collect()
    };
    let everyone: Vec<&BarredPattern> = all.iter().collect();
    let small: Vec<&BarredPattern> = all.iter().filter(|b| b.len() <= 6).collect();
    let sample: Vec<&BarredPattern> = all.iter().filter(|b| b.len() == 7).step_by(9).collect();
    let f7 = failures(&everyone, 7);
    let f8 = failures(&small, 8);
    let fs = failures(&sample, 8);
    let elapsed = start.elapsed();
    let pass = everyone.len() == 720
        && small.len() == 144
        && sample.len() == 64
        && f7.is_empty()
        && f8.is_empty()
        && fs.is_empty()
        && elapsed < Duration::from_secs(600);
    outcome(
        pass,
        format!(
            "m=7: {}/720 unequal; m=8: {}/144 (n<=6), {}/64 (n=7 sample) unequal; first: {}; {:.1}s",
            f7.len(),
            f8.len(),
            fs.len(),
            f7.first().map(String::as_str).unwrap_or("-"),
            elapsed.as_secs_f64()
        ),
    )
}

fn named_coincidences() -> Outcome {
    let cfg = OracleConfig::default();
    let cases: [(&[&str], &[&str]); 6] = [
        (&["413'52"], &["3[14]2"]),
        (&["253'14"], &["2[41]3"]),
        (&["213'54"], &["2[14]3"]),
        (&["14'23"], &["[12]3"]),
        (&["1'5'324"], &["[*2]13", "[13]24", "[*4]213"]),
        (&["631'7'524"], &["5[24]13", "63[15]24", "5[26]413"]),
    ];
    let mut bad = Vec::new();
    for (bs, vs) in cases {
        let bs: Vec<BarredPattern> = bs.iter().map(|t| parse_barred(t).unwrap()).collect();
        let vs: Vec<VincularPattern> = vs.iter().map(|t| parse_vincular(t).unwrap()).collect();
        let r = verify_coincidence(&bs, &vs, 8, &cfg).unwrap();
        if let Some(w) = r.witness {
            bad.push(format!("{} (witness {w})", bs[0]));
        }
    }
    let av = |p: &str| {
        avoidance_class(&[parse_pattern(p).unwrap()], 8, ScanMode::Collect, &cfg).unwrap()
    };
    let bonded_132 = av("[13]2").levels == av("132").levels;
    if !bonded_132 {
        bad.push("[13]2".into());
    }
    let detail = if bad.is_empty() {
        "7/7 equal".to_string()
    } else {
        format!("{}/7 equal; unequal: {}", 7 - bad.len(), bad.join(", "))
    };
    outcome(bad.is_empty(), detail)
}

fn negative_control() -> Outcome {
    let r = verify_coincidence(
        &[parse_barred("12'3").unwrap()],
        &[parse_vincular("[12]").unwrap()],
        4,
        &OracleConfig::default(),
    )
    .unwrap();
    let w = r.witness.as_ref().map(|w| w.to_string());
    let pass = r.status == Status::Counterexample
        && w.as_deref() == Some("123")
        && r.witness_side == Some(Side::Barred);
    outcome(pass, format!("witness {:?}", w))
}

fn property_suites() -> Outcome {
    let semantics = BarredSemantics::Subset;
    let mut self_avoid = true;
    for n in 1..=5 {
        for b in all_barred(n) {
            self_avoid &= !contains_barred(b.class(), &b, semantics);
        }
        for v in all_vincular(n) {
            self_avoid &= contains_vincular(v.class(), &v);
        }
    }
    let mut intersections = true;
    for n in 2..=6 {
        for b in all_barred(n) {
            let bs = boycotts(&b);
            for i in 0..bs.len() {
                for j in i + 1..bs.len() {
                    let common: Vec<u32> = bs[i]
                        .values()
                        .intersection(&bs[j].values())
                        .copied()
                        .collect();
                    intersections &= common.len() <= 1
                        && common.iter().all(|x| {
                            !bs[i].barred_values().contains(x) && !bs[j].barred_values().contains(x)
                        });
                }
            }
        }
    }
    let mut sizes = BTreeSet::new();
    let mut total = 0;
    for n in 3..=7 {
        for b in enumerate_nat_co(n).unwrap() {
            sizes.insert(bond_set(&b).len());
            total += 1;
        }
    }
    let bond_sizes = total == 720 && sizes == BTreeSet::from([1, 3]);
    let agreement = (1..=7)
        .all(|n| scan_barred(n, |b| is_nat_co(b).verdict) == scan_barred(n, corollary_forms_check));
    let pass = self_avoid && intersections && bond_sizes && agreement;
    outcome(
        pass,
        format!(
            "self-avoidance {self_avoid}, boycott intersection {intersections}, bond sizes {sizes:?}, classifier agreement {agreement}"
        ),
    )
}

fn application_counts() -> Outcome {
    let cfg = OracleConfig::default();
    let count = |texts: &[&str]| {
        let ps: Vec<Pattern> = texts.iter().map(|t| parse_pattern(t).unwrap()).collect();
        avoidance_class(&ps, 6, ScanMode::Count, &cfg)
            .unwrap()
            .counts()
    };
    let two_stack = count(&["2341", "35'241"]);
    let baxter = count(&["413'52", "253'14"]);
    let alt: Vec<Pattern> = ["[123]", "[321]", "[*12]"]
        .iter()
        .map(|t| parse_pattern(t).unwrap())
        .collect();
    let class = avoidance_class(&alt, 7, ScanMode::Collect, &cfg).unwrap();
    let alternating = class.levels.iter().all(|level| {
        let want: Vec<Permutation> = Permutation::all(level.length)
            .filter(|w| {
                w.letters()
                    .windows(2)
                    .enumerate()
                    .all(|(j, p)| (j % 2 == 0) == (p[0] > p[1]))
            })
            .collect();
        level.members.as_ref() == Some(&want)
    });
    let pass =
        two_stack == [1, 2, 6, 22, 91, 408] && baxter == [1, 2, 6, 22, 92, 422] && alternating;
    outcome(
        pass,
        format!("two-stack {two_stack:?}, Baxter {baxter:?}, alternating {alternating}"),
    )
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("census", census),
        ("coincidental vincular", coincidental_vincular),
        ("transform examples", transform_examples),
        ("semantic sweep", semantic_sweep),
        ("named coincidences", named_coincidences),
        ("negative control", negative_control),
        ("property suites", property_suites),
        ("application counts", application_counts),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let o = run();
        if !o.pass {
            failed += 1;
        }
        println!(
            "criterion {}: {} [{name}] {}",
            i + 1,
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
    }
    println!("{} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
