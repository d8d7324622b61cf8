//! The acceptance checks as a library: each criterion runs against the
//! public API and reports pass/fail with a one-line detail and its
//! wall-clock time against a fixed limit.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::assoc::{self, SupportFunction};
use crate::dbc;
use crate::error::{Error, Result};
use crate::exchange::{ExtendedExchangeMatrix, Seed};
use crate::graph::{self, Bounds, Verdict};
use crate::laurent::LaurentPoly;
use crate::polygon;
use crate::roots::RootSystem;

#[derive(Clone, Debug, Serialize)]
pub struct CriterionResult {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
    pub limit_seconds: Option<f64>,
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let limit = match self.limit_seconds {
            Some(l) => format!(" (limit {l}s)"),
            None => String::new(),
        };
        write!(
            f,
            "{} {:>2} {}: {} [{:.2}s{limit}]",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.detail,
            self.seconds
        )
    }
}

/// Settings shared by all criteria.
#[derive(Clone, Copy, Debug)]
pub struct Options {
    pub jobs: usize,
    pub rand_seed: u64,
}

impl Default for Options {
    fn default() -> Self {
        Options { jobs: 1, rand_seed: 0 }
    }
}

type Check = fn(&Options) -> Result<(bool, String)>;

const CRITERIA: [(&str, Option<f64>, Check); 11] = [
    ("rank-2 periodicity", Some(1.0), rank2_periodicity),
    ("cluster counts", Some(30.0), cluster_counts),
    ("D4 double cell", Some(60.0), d4_double_cell),
    ("B(i) golden matrix", None, golden_word_matrix),
    ("exchange identities", None, exchange_identities),
    ("flip/mutation commutation", Some(10.0), flips_commute),
    ("Plucker/Ptolemy", None, plucker),
    ("A3 associahedron", None, a3_associahedron),
    ("Laurent property suite", None, laurent_suite_check),
    ("denominator/root bijection", Some(120.0), denominator_bijection),
    ("tau order", None, tau_order),
];

pub fn criterion_count() -> usize {
    CRITERIA.len()
}

/// Runs criterion `id` (1-based). Errors inside a check are reported as a
/// failure, not propagated.
pub fn run_criterion(id: usize, opts: &Options) -> Result<CriterionResult> {
    let &(name, limit, check) = CRITERIA.get(id.wrapping_sub(1)).ok_or(Error::IndexOutOfRange(id))?;
    let start = Instant::now();
    let (ok, detail) = match check(opts) {
        Ok(r) => r,
        Err(e) => (false, format!("error: {e}")),
    };
    let elapsed = start.elapsed();
    let in_time = limit.is_none_or(|l| elapsed <= Duration::from_secs_f64(l));
    Ok(CriterionResult {
        id,
        name,
        passed: ok && in_time,
        detail: if in_time { detail } else { format!("{detail}; over time limit") },
        seconds: elapsed.as_secs_f64(),
        limit_seconds: limit,
    })
}

pub fn run_all(opts: &Options) -> Vec<CriterionResult> {
    (1..=CRITERIA.len())
        .map(|id| run_criterion(id, opts).expect("id in range"))
        .collect()
}

fn rank2_periodicity(_: &Options) -> Result<(bool, String)> {
    let mut ok = true;
    let mut parts = Vec::new();
    for (b, c, want) in [(1, 1, 5), (1, 2, 6), (2, 1, 6), (1, 3, 8), (3, 1, 8)] {
        let g = graph::explore(&Seed::rank2(b, c)?, Bounds::default())?;
        ok &= g.is_complete() && g.len() == want;
        parts.push(format!("A({b},{c})={}", g.len()));
    }
    let g = graph::explore(&Seed::rank2(2, 2)?, Bounds::seeds(100))?;
    ok &= !g.is_complete() && g.len() >= 100;
    parts.push(format!("A(2,2)>={} open", g.len()));
    Ok((ok, parts.join(" ")))
}

fn cluster_counts(opts: &Options) -> Result<(bool, String)> {
    let table = [
        ("A3", 14),
        ("B2", 6),
        ("B3", 20),
        ("D4", 50),
        ("F4", 105),
        ("G2", 8),
        ("E6", 833),
        ("E7", 4160),
        ("E8", 25080),
    ];
    let mut ok = true;
    for (label, want) in table {
        let n = RootSystem::from_label(label)?.count_clusters()?;
        if n != BigInt::from(want) {
            ok = false;
        }
    }
    let enumerated = [
        "A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "F4", "G2", "A5", "D5",
    ];
    let mut mismatches = Vec::new();
    for label in enumerated {
        let rs = RootSystem::from_label(label)?;
        let listed = rs.enumerate_clusters(opts.jobs).len();
        if BigInt::from(listed) != rs.count_clusters()? {
            mismatches.push(label);
        }
    }
    ok &= mismatches.is_empty();
    Ok((
        ok,
        format!(
            "formula table matches; {} types enumerated, mismatches {mismatches:?}",
            enumerated.len()
        ),
    ))
}

fn d4_double_cell(opts: &Options) -> Result<(bool, String)> {
    let report = dbc::explore_sl3_double_cell(3, opts.jobs, opts.rand_seed)?;
    let principal = match &report.principal.verdict {
        Verdict::FiniteType(t) => t.to_string(),
        other => format!("{other:?}"),
    };
    let ok = report.seeds == 50
        && report.cluster_variables == 16
        && principal == "D4"
        && report.fully_identified();
    Ok((
        ok,
        format!(
            "{} seeds, {} cluster variables, principal part {principal}, identified {}/{}",
            report.seeds,
            report.cluster_variables,
            report.identified.iter().flatten().count(),
            report.identified.len()
        ),
    ))
}

/// The 8 x 4 matrix for the word `1,2,1,2,1,-1,-2,-1`, columns `3..=6`.
pub const GOLDEN_WORD_MATRIX: [[i64; 4]; 8] = [
    [-1, 0, 0, 0],
    [1, -1, 0, 0],
    [0, 1, -1, 0],
    [-1, 0, 1, -1],
    [1, -1, 0, 1],
    [0, 1, -1, 0],
    [0, -1, 0, 1],
    [0, 0, 0, -1],
];

fn golden_word_matrix(_: &Options) -> Result<(bool, String)> {
    let w = dbc::sl3_w0w0_word();
    let b = w.b_matrix();
    let ok = w.ex() == [3, 4, 5, 6] && b.iter().zip(&GOLDEN_WORD_MATRIX).all(|(x, y)| x == y);
    Ok((ok, format!("ex = {:?}, 8x4 entrywise", w.ex())))
}

fn exchange_identities(opts: &Options) -> Result<(bool, String)> {
    let r = dbc::exchange_identity_check(&dbc::sl3_w0w0_word(), 100, opts.rand_seed)?;
    Ok((
        r.checked >= 100,
        format!(
            "{} matrices checked, {} skipped (skip rate {:.1}%)",
            r.checked,
            r.skipped,
            100.0 * r.skip_rate()
        ),
    ))
}

fn flips_commute(_: &Options) -> Result<(bool, String)> {
    let mut checked = 0;
    for n in 1..=4 {
        for t in polygon::flip_graph(n)?.triangulations {
            for k in 0..n {
                if !polygon::flip_mutation_commutes(&t, k)? {
                    return Ok((false, format!("flip {k} of {t} disagrees with mutation")));
                }
                checked += 1;
            }
        }
    }
    Ok((true, format!("{checked} (triangulation, flip) pairs for n <= 4")))
}

fn plucker(opts: &Options) -> Result<(bool, String)> {
    let r = polygon::plucker_verify(5, 100, opts.rand_seed)?;
    Ok((
        r.trials == 100,
        format!(
            "{} random 2x8 matrices, {} Ptolemy identities, {} exchange relations",
            r.trials, r.quadruples_checked, r.exchanges_checked
        ),
    ))
}

fn a3_associahedron(opts: &Options) -> Result<(bool, String)> {
    let rs = RootSystem::from_label("A3")?;
    let f = SupportFunction::half_sum_of_coroots(&rs)?;
    let half = |n: i64| BigRational::new(n.into(), 2.into());
    let bounds_ok = f.values()[..3] == [half(3), half(4), half(3)];
    let p = assoc::build_polytope(&rs, &f, opts.jobs)?;
    let (v, e, fc) = (p.vertices.len(), p.edges.len(), p.facets().len());
    let g = graph::explore(&rs.distinguished_seed(), Bounds::default())?;
    let iso = assoc::skeleton_matches_exchange_graph(&rs, &p, &g)?;
    let ok = bounds_ok && (v, e, fc) == (14, 21, 9) && v + fc == e + 2 && iso;
    Ok((
        ok,
        format!(
            "F(-Pi) = ({}), V={v} E={e} F={fc}, skeleton matches exchange graph: {iso}",
            f.values()[..3].iter().map(|x| x.to_string()).collect::<Vec<_>>().join(", ")
        ),
    ))
}

/// A random valid extended exchange matrix with `m <= max_m` rows and
/// entries in `[-max_entry, max_entry]`, by rejection sampling.
pub fn random_exchange_matrix(rng: &mut ChaCha8Rng, max_m: usize, max_entry: i64) -> ExtendedExchangeMatrix {
    loop {
        let m = rng.gen_range(1..=max_m);
        let n = rng.gen_range(1..=m);
        let d: Vec<i64> = (0..n).map(|_| rng.gen_range(1..=2)).collect();
        let mut b = vec![vec![0i64; n]; m];
        let mut ok = true;
        for i in 0..n {
            for j in i + 1..n {
                let x = rng.gen_range(-max_entry..=max_entry);
                // d_i b_ij = -d_j b_ji
                if (d[i] * x) % d[j] != 0 {
                    ok = false;
                }
                let y = -(d[i] * x) / d[j];
                if y.abs() > max_entry {
                    ok = false;
                }
                b[i][j] = x;
                b[j][i] = y;
            }
        }
        for row in b.iter_mut().skip(n) {
            for x in row.iter_mut() {
                *x = rng.gen_range(-max_entry..=max_entry);
            }
        }
        if !ok {
            continue;
        }
        if let Ok(mat) = ExtendedExchangeMatrix::validate(b, (0..n).collect()) {
            return mat;
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LaurentSuiteReport {
    pub seeds: usize,
    /// Mutations carried out exactly.
    pub mutations: usize,
    pub non_exact: usize,
    /// Mutations abandoned because they exceeded the work bound; their
    /// continuations are not explored.
    pub over_budget: usize,
}

impl LaurentSuiteReport {
    fn merge(self, other: Self) -> Self {
        LaurentSuiteReport {
            seeds: self.seeds + other.seeds,
            mutations: self.mutations + other.mutations,
            non_exact: self.non_exact + other.non_exact,
            over_budget: self.over_budget + other.over_budget,
        }
    }
}

/// Every seed reachable by a mutation path of length at most `max_len`,
/// level by level with seeds identified by their variables, so each step
/// of each path is computed once.
fn laurent_ball(start: &Seed, max_len: usize, max_work: usize) -> LaurentSuiteReport {
    let mut report = LaurentSuiteReport {
        seeds: 1,
        ..Default::default()
    };
    let key = |s: &Seed| {
        let mut v = s.variables().to_vec();
        v.sort();
        v
    };
    let mut seen: HashSet<Vec<LaurentPoly>> = HashSet::new();
    seen.insert(key(start));
    let mut level = vec![start.clone()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for seed in &level {
            for k in 0..seed.n() {
                match seed.mutate_within(k, max_work) {
                    Ok(Some(s)) => {
                        report.mutations += 1;
                        if seen.insert(key(&s)) {
                            next.push(s);
                        }
                    }
                    Ok(None) => report.over_budget += 1,
                    Err(_) => report.non_exact += 1,
                }
            }
        }
        level = next;
    }
    report
}

/// Work bound per product or division in [`laurent_suite`], in term
/// multiplications.
pub const LAURENT_SUITE_MAX_WORK: usize = 1_000_000;

/// Mutates `seeds` random seeds (at most 5 rows, entries in `[-2, 2]`)
/// along every mutation path of length at most `max_len`, counting failed
/// exact divisions.
pub fn laurent_suite(seeds: usize, max_len: usize, max_work: usize, opts: &Options) -> Result<LaurentSuiteReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.rand_seed);
    let starts: Vec<Seed> = (0..seeds)
        .map(|_| Seed::initial(random_exchange_matrix(&mut rng, 5, 2)))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs.max(1))
        .build()
        .map_err(|e| Error::Unsupported(e.to_string()))?;
    let parts: Vec<LaurentSuiteReport> =
        pool.install(|| starts.par_iter().map(|s| laurent_ball(s, max_len, max_work)).collect());
    Ok(parts.into_iter().fold(LaurentSuiteReport::default(), LaurentSuiteReport::merge))
}

fn laurent_suite_check(opts: &Options) -> Result<(bool, String)> {
    let r = laurent_suite(200, 6, LAURENT_SUITE_MAX_WORK, opts)?;
    Ok((
        r.non_exact == 0 && r.over_budget == 0 && r.seeds == 200,
        format!(
            "{} seeds, {} exact mutations on paths of length <= 6, {} non-exact divisions, {} mutations over the work bound",
            r.seeds, r.mutations, r.non_exact, r.over_budget
        ),
    ))
}

fn denominator_bijection(opts: &Options) -> Result<(bool, String)> {
    let mut failures = Vec::new();
    for label in ["A2", "A3", "B2", "C3", "D4", "G2"] {
        let rs = RootSystem::from_label(label)?;
        let g = graph::explore_with_jobs(&rs.distinguished_seed(), Bounds::default(), opts.jobs)?;
        let table = graph::denominator_table(&g)?;
        let denominators: BTreeSet<Vec<i64>> = table.iter().map(|(_, d)| d.entries().to_vec()).collect();
        let roots: BTreeSet<Vec<i64>> = rs.almost_positive_roots().iter().map(|r| r.coords().to_vec()).collect();
        let positive = table.iter().all(|(v, _)| v.has_nonnegative_coefficients());
        if denominators.len() != table.len() || denominators != roots || !positive {
            failures.push(label);
        }
    }
    Ok((
        failures.is_empty(),
        format!("A2 A3 B2 C3 D4 G2, failures {failures:?}"),
    ))
}

fn tau_order(_: &Options) -> Result<(bool, String)> {
    let labels = [
        "A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "B5", "C3", "C4", "C5", "D4", "D5", "F4", "G2",
    ];
    let mut failures = Vec::new();
    for label in labels {
        let rs = RootSystem::from_label(label)?;
        let h = rs.coxeter_number();
        let want = if rs.w0_is_minus_one() { (h + 2) / 2 } else { h + 2 };
        if rs.tau_orbit_order() != want {
            failures.push(label);
        }
    }
    Ok((
        failures.is_empty(),
        format!("{} types of rank <= 5, failures {failures:?}", labels.len()),
    ))
}
