//! Verification engine: brute-force counts against the formula table.
//!
//! Every (class, length, statistic) needed by a run is counted once, in
//! parallel, and the reports are then assembled in a fixed order, so the
//! output does not depend on scheduling.

use std::collections::BTreeMap;
use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::formulas::table::normalize;
use crate::formulas::{theorem, theorems, Case, Formula, Statistic, Status, Theorem};
use crate::generate::{ClassSpec, Enumerator, Family};
use crate::pattern::{parse_pattern_list, Pattern};
use crate::perm::Permutation;

mod bijection;
mod report;

pub use bijection::{run_bijection, BijectionParams, BIJECTIONS};
pub use report::{emit_table, Format};

/// Outcome of one comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Match,
    Mismatch,
    NoFormula,
    ConjectureMatch,
    ConjectureMismatch,
    /// The brute-force count ran out of time.
    Skipped,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Match => "MATCH",
            Verdict::Mismatch => "MISMATCH",
            Verdict::NoFormula => "NO_FORMULA",
            Verdict::ConjectureMatch => "CONJECTURE_MATCH",
            Verdict::ConjectureMismatch => "CONJECTURE_MISMATCH",
            Verdict::Skipped => "SKIPPED",
        })
    }
}

/// One row of a verification run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountReport {
    pub id: String,
    pub family: Family,
    pub patterns: String,
    pub n: usize,
    pub statistic: Statistic,
    /// `None` when skipped.
    pub brute_count: Option<u64>,
    pub formula_count: Option<i128>,
    pub verdict: Verdict,
    pub elapsed: Duration,
}

impl CountReport {
    pub fn is_mismatch(&self) -> bool {
        self.verdict == Verdict::Mismatch
    }

    pub fn is_finding(&self) -> bool {
        self.verdict == Verdict::ConjectureMismatch
    }
}

/// Run parameters.
#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub n_max: usize,
    /// Budget for a single brute-force count.
    pub timeout: Duration,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self { n_max: 12, timeout: Duration::from_secs(300) }
    }
}

impl VerifyOptions {
    pub fn new(n_max: usize) -> Self {
        Self { n_max, ..Self::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct QueryKey {
    family: Family,
    patterns: Vec<Permutation>,
    n: usize,
    statistic: Statistic,
}

struct Query {
    spec: ClassSpec,
    statistic: Statistic,
}

#[derive(Clone, Copy)]
struct Counted {
    count: Option<u64>,
    elapsed: Duration,
}

fn key(family: Family, patterns: &[Pattern], n: usize, statistic: Statistic) -> QueryKey {
    QueryKey { family, patterns: normalize(family, patterns), n, statistic }
}

/// Counts every query once; `None` marks a timeout.
fn count_all(queries: BTreeMap<QueryKey, Query>, timeout: Duration) -> Result<BTreeMap<QueryKey, Counted>> {
    let list: Vec<(QueryKey, Query)> = queries.into_iter().collect();
    list.into_par_iter()
        .map(|(k, q)| {
            let start = Instant::now();
            let e = Enumerator::default().with_deadline(Some(start + timeout));
            let res = match q.statistic {
                Statistic::Members => e.count(&q.spec),
                Statistic::Connected => e.count_connected(&q.spec),
            };
            let count = match res {
                Ok(c) => Some(c),
                Err(Error::Cancelled) => None,
                Err(other) => return Err(other),
            };
            Ok((k, Counted { count, elapsed: start.elapsed() }))
        })
        .collect()
}

/// The class a `SameAs` formula points to, if its length is nonnegative.
fn same_as_target(formula: &Formula, n: usize) -> Option<(Family, Vec<Pattern>, usize)> {
    match formula {
        Formula::SameAs { family, patterns, len_delta } => {
            let m = usize::try_from(n as i64 + len_delta).ok()?;
            Some((*family, parse_pattern_list(patterns).expect("static pattern lists parse"), m))
        }
        _ => None,
    }
}

fn lengths(case: &Case, n_max: usize) -> impl Iterator<Item = usize> + '_ {
    (1..=n_max).filter(move |&n| case.applies_to(n))
}

fn run(selected: &[&'static Theorem], opts: &VerifyOptions) -> Result<Vec<CountReport>> {
    let mut queries = BTreeMap::new();
    let mut add = |family: Family, patterns: Vec<Pattern>, n: usize, statistic: Statistic| {
        queries
            .entry(key(family, &patterns, n, statistic))
            .or_insert_with(|| Query { spec: ClassSpec::new(family, patterns, n), statistic });
    };
    for t in selected {
        for c in &t.cases {
            for n in lengths(c, opts.n_max) {
                add(c.family, c.pattern_list(), n, c.statistic);
                if let Some((f, p, m)) = same_as_target(&c.formula, n) {
                    add(f, p, m, c.statistic);
                }
            }
        }
    }
    let counted = count_all(queries, opts.timeout)?;

    let mut out = Vec::new();
    for t in selected {
        let conjecture = t.status == Status::Conjecture;
        for n in 1..=opts.n_max {
            for c in t.cases.iter().filter(|c| c.applies_to(n)) {
                let own = counted[&key(c.family, &c.pattern_list(), n, c.statistic)];
                let mut elapsed = own.elapsed;
                let (formula_count, target_skipped) = match same_as_target(&c.formula, n) {
                    Some((f, p, m)) => {
                        let other = counted[&key(f, &p, m, c.statistic)];
                        elapsed += other.elapsed;
                        (other.count.map(i128::from), other.count.is_none())
                    }
                    None => (c.formula.eval::<i128>(n), false),
                };
                let verdict = match (own.count, formula_count) {
                    (None, _) => Verdict::Skipped,
                    _ if target_skipped => Verdict::Skipped,
                    (Some(_), None) => Verdict::NoFormula,
                    (Some(b), Some(f)) => match (i128::from(b) == f, conjecture) {
                        (true, false) => Verdict::Match,
                        (false, false) => Verdict::Mismatch,
                        (true, true) => Verdict::ConjectureMatch,
                        (false, true) => Verdict::ConjectureMismatch,
                    },
                };
                out.push(CountReport {
                    id: t.id.clone(),
                    family: c.family,
                    patterns: c.patterns.clone(),
                    n,
                    statistic: c.statistic,
                    brute_count: own.count,
                    formula_count,
                    verdict,
                    elapsed,
                });
            }
        }
    }
    Ok(out)
}

fn resolve(ids: &[&str]) -> Result<Vec<&'static Theorem>> {
    if ids.contains(&"all") {
        return Ok(theorems().iter().filter(|t| t.status != Status::Conjecture).collect());
    }
    ids.iter().map(|id| theorem(id).ok_or_else(|| Error::Unknown((*id).to_string()))).collect()
}

/// Checks the named statements at every admissible length `1 ≤ n ≤ n_max`.
/// `"all"` selects every theorem and fixture; conjectures must be named
/// (or probed) explicitly and get conjecture verdicts.
pub fn verify(ids: &[&str], opts: &VerifyOptions) -> Result<Vec<CountReport>> {
    if opts.n_max == 0 {
        return Err(Error::Domain("n_max must be at least 1".into()));
    }
    run(&resolve(ids)?, opts)
}

/// Probes one conjecture. Mismatches are findings, not failures.
pub fn probe_conjecture(id: &str, opts: &VerifyOptions) -> Result<Vec<CountReport>> {
    let t = theorem(id).ok_or_else(|| Error::Unknown(id.to_string()))?;
    if t.status != Status::Conjecture {
        return Err(Error::Unknown(format!("{id} is not a conjecture")));
    }
    verify(&[id], opts)
}

/// Leading terms `(n, count)` of a class for `n_min ≤ n ≤ n_max`, stepping
/// by `step`.
pub fn sequence(
    family: Family,
    patterns: &[Pattern],
    n_min: usize,
    n_max: usize,
    step: usize,
    statistic: Statistic,
) -> Vec<(usize, u64)> {
    (n_min..=n_max)
        .step_by(step.max(1))
        .map(|n| {
            let spec = ClassSpec::new(family, patterns.to_vec(), n);
            let e = Enumerator::default();
            let c = match statistic {
                Statistic::Members => e.count(&spec),
                Statistic::Connected => e.count_connected(&spec),
            };
            (n, c.expect("no deadline set"))
        })
        .collect()
}

/// Process exit status for a set of reports: 1 on any theorem mismatch.
pub fn exit_code(reports: &[CountReport]) -> i32 {
    i32::from(reports.iter().any(CountReport::is_mismatch))
}
