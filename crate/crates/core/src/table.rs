//! Built-in regression records, the self-test that replays them, and
//! per-front reports in text and JSON.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::augmentation::is_augmentation;
use crate::constructions::{connected_power, k_n, realize, tau, tau_iterate, twist_knot, SpecialForm};
use crate::error::{Error, Result};
use crate::front::{parse_front, FrontDiagram, GenKind};
use crate::linearized::{chekanov_set, geometric_linearized, linear_shortcut, ChekanovSet, Pipeline};
use crate::poly::LaurentPoly;

pub const SCHEMA: u32 = 1;

/// Left handed trefoil with maximal Thurston-Bennequin number.
pub const LEFT_TREFOIL: &str = "front : L 1 L 3 X 2 L 3 X 2 X 4";

/// Figure-eight knot whose special corner has Maslov number 2.
pub const FIGURE_EIGHT_SPECIAL: &str = "front : L 1 L 3 L 3 X 4 X 4 X 3 X 2 X 3 X 5 X 4 X 2";

/// Expected values for one front.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KnotRecord {
    pub label: String,
    pub front: String,
    pub expected_tb: i64,
    pub expected_r: u32,
    /// Sorted.
    pub expected_reduced: Vec<LaurentPoly>,
    pub expected_multiplicities: Option<BTreeMap<LaurentPoly, usize>>,
    pub expected_aug_count: Option<usize>,
    /// How the front is built.
    pub source: String,
}

fn polys(items: &[&str]) -> Vec<LaurentPoly> {
    let mut v: Vec<LaurentPoly> = items.iter().map(|s| s.parse().expect("built-in polynomial")).collect();
    v.sort();
    v
}

fn record(label: &str, front: &FrontDiagram, tb: i64, r: u32, reduced: Vec<LaurentPoly>, source: &str) -> KnotRecord {
    KnotRecord {
        label: label.to_string(),
        front: front.to_text(),
        expected_tb: tb,
        expected_r: r,
        expected_reduced: reduced,
        expected_multiplicities: None,
        expected_aug_count: None,
        source: source.to_string(),
    }
}

/// Reduced polynomials of `K_n`: `(n - 1 - r) t + (n - r)` for
/// `r = 0, ..., floor(2n / 3)`.
pub fn k_n_reduced(n: usize) -> Vec<LaurentPoly> {
    let n = n as i64;
    let mut v: Vec<LaurentPoly> = (0..=2 * n / 3).map(|r| LaurentPoly::from_coeffs([(1, n - 1 - r), (0, n - r)])).collect();
    v.sort();
    v
}

/// Augmentation counts of `K_1, ..., K_5`.
pub const K_N_AUG_COUNTS: [usize; 5] = [5, 16, 62, 220, 812];

pub fn records() -> Vec<KnotRecord> {
    let mut out = Vec::new();
    let unknot = parse_front("plat 2 :").expect("unknot");
    let mut r = record("0_1", &unknot, -1, 0, polys(&["0"]), "single pair of cusps");
    r.expected_aug_count = Some(1);
    out.push(r);

    for n in 1..=5 {
        let f = k_n(n).expect("K_n");
        let mut r = record(&format!("K{n}"), &f, 1, 0, k_n_reduced(n), &format!("k_n({n})"));
        r.expected_aug_count = Some(K_N_AUG_COUNTS[n - 1]);
        if n == 2 {
            r.expected_multiplicities = Some(polys(&["1", "2 + t"]).into_iter().zip([12, 4]).collect());
        }
        if n == 1 {
            r.expected_multiplicities = Some(polys(&["1"]).into_iter().zip([5]).collect());
        }
        out.push(r);
    }

    let trefoil = parse_front(LEFT_TREFOIL).expect("left trefoil");
    out.push(record("3_1", &trefoil, -6, 1, Vec::new(), "three negative crossings"));

    for d in 1..=3 {
        let f = twist_knot(d).expect("twist knot");
        let tb = if d % 2 == 0 { 1 } else { -3 };
        out.push(record(&format!("twist_{d}"), &f, tb, 0, vec![LaurentPoly::monomial(1, d as i32)], &format!("twist_knot({d})")));
    }

    for n in 2..=3usize {
        let f = connected_power(&k_n(2).expect("K2"), n).expect("sum");
        let m = n as i64;
        let mut reduced: Vec<LaurentPoly> = (0..=m).map(|k| LaurentPoly::from_coeffs([(1, k), (0, m + k)])).collect();
        reduced.sort();
        out.push(record(&format!("{n}K2"), &f, 2 * m - 1, 0, reduced, &format!("connected sum of {n} copies of K2")));
    }

    let k1 = SpecialForm::detect(&k_n(1).expect("K1")).expect("K1 is special");
    for (n, &count) in K_N_AUG_COUNTS.iter().enumerate().take(5).skip(1) {
        let s = tau_iterate(&k1, n).expect("tau");
        let mut r = record(&format!("tau{n}_K1"), &s.front, 1, 0, k_n_reduced(n + 1), &format!("{n}-fold tangle replacement on K1"));
        r.expected_aug_count = Some(count);
        out.push(r);
    }

    let fig8 = parse_front(FIGURE_EIGHT_SPECIAL).expect("figure eight");
    out.push(record("4_1_special", &fig8, -3, 0, polys(&["t"]), "figure eight with Maslov number 2 at its special corner"));
    let sf = SpecialForm::detect(&fig8).expect("special");
    let t = tau(&sf).expect("tau");
    out.push(record("tau_4_1_special", t.front(), 1, 0, polys(&["1", "1 + t + t^2"]), "tangle replacement on 4_1_special"));

    for (p, tb) in [("1", 1), ("1 + 2t + t^3", -5)] {
        let poly: LaurentPoly = p.parse().expect("poly");
        let f = realize(&poly).expect("realize");
        out.push(record(&format!("realize({poly})"), &f, tb, 0, vec![poly.clone()], "realize"));
    }
    out
}

/// What the pipeline computed for one record.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Computed {
    pub tb: i64,
    pub r: u32,
    pub reduced: Vec<LaurentPoly>,
    pub multiplicities: BTreeMap<LaurentPoly, usize>,
    pub aug_count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecordOutcome {
    pub label: String,
    pub passed: bool,
    pub mismatches: Vec<String>,
    pub computed: Option<Computed>,
}

fn computed(set: &ChekanovSet) -> Computed {
    let mut reduced = set.reduced_set();
    reduced.sort();
    Computed {
        tb: set.invariants.tb,
        r: set.invariants.r,
        reduced,
        multiplicities: set.multiplicities(),
        aug_count: set.augmentations.len(),
    }
}

fn show(v: &[LaurentPoly]) -> String {
    let items: Vec<String> = v.iter().map(|p| p.to_string()).collect();
    format!("{{{}}}", items.join(", "))
}

pub fn check_record(rec: &KnotRecord, cap: usize) -> RecordOutcome {
    let result = parse_front(&rec.front).and_then(|f| {
        let set = chekanov_set(&f, cap)?;
        let mut issues = property_failures(&f, &set)?;
        let c = computed(&set);
        if c.tb != rec.expected_tb {
            issues.push(format!("tb: computed {}, expected {}", c.tb, rec.expected_tb));
        }
        if c.r != rec.expected_r {
            issues.push(format!("r: computed {}, expected {}", c.r, rec.expected_r));
        }
        if c.reduced != rec.expected_reduced {
            issues.push(format!("reduced: computed {}, expected {}", show(&c.reduced), show(&rec.expected_reduced)));
        }
        if let Some(m) = &rec.expected_multiplicities {
            if *m != c.multiplicities {
                issues.push(format!("multiplicities: computed {:?}, expected {:?}", c.multiplicities, m));
            }
        }
        if let Some(n) = rec.expected_aug_count {
            if n != c.aug_count {
                issues.push(format!("augmentations: computed {}, expected {n}", c.aug_count));
            }
        }
        Ok((c, issues))
    });
    match result {
        Ok((c, mismatches)) => RecordOutcome { label: rec.label.clone(), passed: mismatches.is_empty(), mismatches, computed: Some(c) },
        Err(e) => RecordOutcome { label: rec.label.clone(), passed: false, mismatches: vec![e.to_string()], computed: None },
    }
}

/// Structural checks on a computed set: `d^2 = 0`, the Euler
/// characteristic equals tb, every polynomial evaluates to tb at `-1`, has
/// nonnegative coefficients and the duality shape, the disk-count and
/// algebraic linearizations agree, and the degree `>= -1` shortcut matches.
pub fn property_failures(front: &FrontDiagram, set: &ChekanovSet) -> Result<Vec<String>> {
    let mut out = Vec::new();
    let tb = set.invariants.tb;
    if set.invariants.r == 0 && tb.rem_euclid(2) != 1 {
        out.push(format!("tb {tb} is even with r = 0"));
    }
    if set.invariants.r != 0 {
        if set.ch() != 0 {
            out.push("nonzero rotation with augmentations".into());
        }
        return Ok(out);
    }
    let pipe = Pipeline::new(front)?;
    if !pipe.differential.verify_d_squared() {
        out.push("d^2 != 0".into());
    }
    for g in pipe.alphabet.gens() {
        if pipe.differential.of(g).words().any(|w| w.degree(&pipe.alphabet) != pipe.alphabet.degree(g) - 1) {
            out.push(format!("d {} does not drop degree by one", pipe.alphabet.name(g)));
        }
    }
    if pipe.alphabet.euler_characteristic() != tb {
        out.push(format!("Euler characteristic {} != tb {tb}", pipe.alphabet.euler_characteristic()));
    }
    for eps in &set.augmentations {
        let names = eps.names(&pipe.alphabet).join("");
        if !is_augmentation(&pipe.differential, &pipe.alphabet, eps) {
            out.push(format!("{{{names}}} is not an augmentation"));
            continue;
        }
        let complex = pipe.complex(eps)?;
        let poly = complex.poincare_polynomial();
        if poly.at_minus_one() != tb {
            out.push(format!("P({names})(-1) = {} != tb", poly.at_minus_one()));
        }
        if !poly.is_nonnegative() {
            out.push(format!("P({names}) = {poly} has a negative coefficient"));
        }
        let reduced = match poly.reduce() {
            Ok(p) => p,
            Err(e) => {
                out.push(e.to_string());
                continue;
            }
        };
        let geometric = geometric_linearized(front, &pipe.alphabet, eps)?;
        if geometric != complex {
            out.push(format!("disk-count linearization differs for {{{names}}}"));
        }
        if let Some(short) = linear_shortcut(&complex, tb) {
            if short != reduced {
                out.push(format!("shortcut {short} != {reduced} for {{{names}}}"));
            }
        }
    }
    Ok(out)
}

/// Result of checking user-supplied fronts against the shipped table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TableOutcome {
    pub name: String,
    pub passed: bool,
    pub unverified_transcription: bool,
    pub mismatches: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SelftestReport {
    pub schema: u32,
    pub passed: bool,
    pub records: Vec<RecordOutcome>,
    pub table: Vec<TableOutcome>,
}

pub fn selftest(cap: usize, fronts_dir: Option<&Path>) -> Result<SelftestReport> {
    let records: Vec<RecordOutcome> = records().iter().map(|r| check_record(r, cap)).collect();
    let table = match fronts_dir {
        Some(dir) => check_front_dir(dir, cap)?,
        None => Vec::new(),
    };
    let passed = records.iter().all(|r| r.passed) && table.iter().all(|t| t.passed || t.unverified_transcription);
    Ok(SelftestReport { schema: SCHEMA, passed, records, table })
}

/// One row of the shipped expected-values table; mirrors carry an `m`
/// prefix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableEntry {
    pub name: String,
    pub achiral: bool,
    pub tb: i64,
    pub r: u32,
    pub reduced: Vec<String>,
    #[serde(default)]
    pub unverified_transcription: bool,
}

pub fn knot_table() -> Vec<TableEntry> {
    serde_json::from_str(include_str!("../data/knot_table.json")).expect("shipped table parses")
}

/// Checks every `<name>.front` in `dir` whose name appears in the shipped
/// table.
pub fn check_front_dir(dir: &Path, cap: usize) -> Result<Vec<TableOutcome>> {
    let io = |e: std::io::Error| Error::InvalidArgument(format!("{}: {e}", dir.display()));
    let table: BTreeMap<String, TableEntry> = knot_table().into_iter().map(|e| (e.name.clone(), e)).collect();
    let mut paths: Vec<_> = std::fs::read_dir(dir).map_err(io)?.collect::<std::io::Result<Vec<_>>>().map_err(io)?;
    paths.sort_by_key(|e| e.path());
    let mut out = Vec::new();
    for entry in paths {
        let path = entry.path();
        if path.extension().and_then(|s| s.to_str()) != Some("front") {
            continue;
        }
        let Some(stem) = path.file_stem().and_then(|s| s.to_str()) else { continue };
        let Some(expected) = table.get(stem) else { continue };
        let text = std::fs::read_to_string(&path).map_err(io)?;
        let mut mismatches = Vec::new();
        match parse_front(&text).and_then(|f| chekanov_set(&f, cap)) {
            Ok(set) => {
                let c = computed(&set);
                if (c.tb, c.r) != (expected.tb, expected.r) {
                    mismatches.push(format!("(tb, r): computed ({}, {}), expected ({}, {})", c.tb, c.r, expected.tb, expected.r));
                }
                let mut want = Vec::new();
                for p in &expected.reduced {
                    want.push(p.parse::<LaurentPoly>()?);
                }
                want.sort();
                if c.reduced != want {
                    mismatches.push(format!("reduced: computed {}, expected {}", show(&c.reduced), show(&want)));
                }
            }
            Err(e) => mismatches.push(e.to_string()),
        }
        out.push(TableOutcome {
            name: stem.to_string(),
            passed: mismatches.is_empty(),
            unverified_transcription: expected.unverified_transcription,
            mismatches,
        });
    }
    Ok(out)
}

pub fn selftest_text(report: &SelftestReport) -> String {
    let mut s = String::new();
    for r in &report.records {
        let _ = writeln!(s, "{} {}", if r.passed { "PASS" } else { "FAIL" }, r.label);
        for m in &r.mismatches {
            let _ = writeln!(s, "    {m}");
        }
    }
    for t in &report.table {
        let tag = match (t.passed, t.unverified_transcription) {
            (true, _) => "PASS",
            (false, true) => "FLAG",
            (false, false) => "FAIL",
        };
        let _ = writeln!(s, "{tag} table {}", t.name);
        for m in &t.mismatches {
            let _ = writeln!(s, "    {m}");
        }
    }
    let failed = report.records.iter().filter(|r| !r.passed).count()
        + report.table.iter().filter(|t| !t.passed && !t.unverified_transcription).count();
    let _ = writeln!(s, "{} checks, {failed} failed", report.records.len() + report.table.len());
    s
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratorRow {
    pub name: String,
    pub kind: &'static str,
    pub degree: i32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PolynomialRow {
    pub poly: LaurentPoly,
    pub reduced: LaurentPoly,
    pub count: usize,
}

/// Everything known about one front, in the versioned JSON layout.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub schema: u32,
    pub name: Option<String>,
    pub front: String,
    pub tb: i64,
    pub r: u32,
    pub writhe: i64,
    pub cusps: usize,
    pub generators: Vec<GeneratorRow>,
    pub differential: BTreeMap<String, Vec<String>>,
    pub augmentations: usize,
    pub ch: usize,
    pub polynomials: Vec<PolynomialRow>,
}

pub fn report(front: &FrontDiagram, cap: usize) -> Result<Report> {
    let set = chekanov_set(front, cap)?;
    let mut generators = Vec::new();
    let mut differential = BTreeMap::new();
    if set.invariants.r == 0 {
        let pipe = Pipeline::new(front)?;
        let a = &pipe.alphabet;
        for g in a.gens() {
            let kind = match a.kind(g) {
                GenKind::Crossing(_) => "crossing",
                GenKind::RightCusp(_) => "right_cusp",
            };
            generators.push(GeneratorRow { name: a.name(g).to_string(), kind, degree: a.degree(g) });
            let words = pipe.differential.of(g).words().map(|w| w.display(a).to_string()).collect();
            differential.insert(a.name(g).to_string(), words);
        }
    }
    Ok(Report {
        schema: SCHEMA,
        name: front.name.clone(),
        front: front.to_text().lines().last().unwrap_or_default().to_string(),
        tb: set.invariants.tb,
        r: set.invariants.r,
        writhe: set.invariants.writhe,
        cusps: set.invariants.cusps,
        generators,
        differential,
        augmentations: set.augmentations.len(),
        ch: set.ch(),
        polynomials: set
            .classes
            .iter()
            .map(|c| PolynomialRow { poly: c.poly.clone(), reduced: c.reduced.clone(), count: c.count })
            .collect(),
    })
}

impl Report {
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        if let Some(name) = &self.name {
            let _ = writeln!(s, "name = {name}");
        }
        let _ = writeln!(s, "{}", self.front);
        let _ = writeln!(s, "tb = {}", self.tb);
        let _ = writeln!(s, "r = {}", self.r);
        for g in &self.generators {
            let words = &self.differential[&g.name];
            let rhs = if words.is_empty() { "0".to_string() } else { words.join(" + ") };
            let _ = writeln!(s, "|{}| = {}    d {} = {rhs}", g.name, g.degree, g.name);
        }
        let _ = writeln!(s, "augmentations = {}", self.augmentations);
        let _ = writeln!(s, "ch = {}", self.ch);
        for p in &self.polynomials {
            let _ = writeln!(s, "P = {}    ({} augmentations)", p.poly, p.count);
            let _ = writeln!(s, "p = {}", p.reduced);
        }
        s
    }
}
