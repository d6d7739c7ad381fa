//! Corpus runs: every verifier over every partition up to a size bound and
//! every valid `(d, ell)` grid, on a bounded worker pool. Results are sorted
//! by a canonical key before aggregation, so the report bytes do not depend
//! on scheduling.

use std::collections::BTreeMap;

use hookforge::partition::{is_thin, partitions_of, Partition};
use hookforge::{fock, hook_strip, series, tectonic};
use rayon::prelude::*;
use serde_json::json;

pub enum Job {
    Bessenrodt(Partition, usize),
    Tectonic(Partition, usize),
    Gansner(Partition, usize),
    Skew(Partition, usize),
    Wallcross(Partition, usize),
    RefinedRpp(Partition, usize),
    Hookstrip(usize, usize),
    HookstripSeries(usize, usize, usize),
    Ultimate(usize, usize),
    Fock(usize, usize),
}

impl Job {
    fn identity(&self) -> &'static str {
        match self {
            Job::Bessenrodt(..) => "bessenrodt",
            Job::Tectonic(..) => "tectonic",
            Job::Gansner(..) => "gansner",
            Job::Skew(..) => "skew",
            Job::Wallcross(..) => "wallcross",
            Job::RefinedRpp(..) => "refined-rpp",
            Job::Hookstrip(..) => "hookstrip",
            Job::HookstripSeries(..) => "hookstrip-series",
            Job::Ultimate(..) => "ultimate",
            Job::Fock(..) => "fock",
        }
    }

    fn key(&self) -> String {
        match self {
            Job::Bessenrodt(l, _)
            | Job::Tectonic(l, _)
            | Job::Gansner(l, _)
            | Job::Skew(l, _)
            | Job::Wallcross(l, _)
            | Job::RefinedRpp(l, _) => format!("lambda=({l})"),
            Job::Hookstrip(d, ell) | Job::HookstripSeries(d, ell, _) | Job::Fock(d, ell) => {
                format!("d={d},ell={ell}")
            }
            Job::Ultimate(d, _) => format!("d={d}"),
        }
    }

    /// Runs the verifier; a precondition error counts as a failure.
    fn pass(&self) -> bool {
        match self {
            Job::Bessenrodt(l, bound) => {
                hookforge::hooks::verify_bessenrodt(l, *bound).map(|r| r.pass)
            }
            Job::Tectonic(l, bx) => tectonic::verify_thin_bijection(l, *bx).map(|r| r.pass),
            Job::Gansner(l, cap) => series::verify_gansner(l, *cap).map(|r| r.pass),
            Job::Skew(l, cap) => series::verify_skew(l, *cap).map(|r| r.pass),
            Job::Wallcross(l, cap) => series::verify_wallcrossing(l, *cap).map(|r| r.pass),
            Job::RefinedRpp(l, cap) => series::verify_refined_rpp(l, *cap).map(|r| r.pass),
            Job::Hookstrip(d, ell) => Ok(hook_strip::verify_hook_strip(*d, *ell).pass),
            Job::HookstripSeries(d, ell, cap) => {
                series::verify_hook_strip_series(*d, *ell, *cap).map(|r| r.pass)
            }
            Job::Ultimate(d, cap) => series::verify_ultimate(*d, *cap).map(|r| r.pass),
            Job::Fock(d, ell) => fock::verify_fock_identity(*d, *ell).map(|r| r.pass),
        }
        .unwrap_or(false)
    }
}

/// Box side used for corpus tectonic runs: comfortably past the minimum.
fn default_box(lambda: &Partition) -> usize {
    2 * (lambda.first_part() + lambda.rows()) + 4
}

pub struct CorpusOutcome {
    pub result: serde_json::Value,
    pub pass: bool,
}

/// Parameter policy for a corpus of size `max_size`: series caps stay at 8
/// or below so the heaviest product comparisons remain desk-scale.
fn build_jobs(max_size: usize) -> Vec<Job> {
    let cap_small = max_size.min(8);
    let bound = max_size.max(1);
    let mut jobs = Vec::new();
    for d in 0..=max_size {
        for lambda in partitions_of(d) {
            jobs.push(Job::Bessenrodt(lambda.clone(), bound));
            if !lambda.is_empty() && is_thin(&lambda) {
                jobs.push(Job::Tectonic(lambda.clone(), default_box(&lambda)));
            }
            jobs.push(Job::Gansner(lambda.clone(), max_size));
            jobs.push(Job::Skew(lambda.clone(), cap_small));
            jobs.push(Job::Wallcross(lambda.clone(), max_size));
            jobs.push(Job::RefinedRpp(lambda.clone(), cap_small));
        }
    }
    for d in 1..=max_size {
        for ell in 1..=d {
            jobs.push(Job::Hookstrip(d, ell));
            jobs.push(Job::HookstripSeries(d, ell, cap_small));
            jobs.push(Job::Fock(d, ell));
        }
    }
    for d in 0..=max_size.min(6) {
        jobs.push(Job::Ultimate(d, cap_small));
    }
    jobs
}

pub fn run_corpus(max_size: usize, jobs: usize) -> CorpusOutcome {
    let work = build_jobs(max_size);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("worker pool");
    let mut results: Vec<(&'static str, String, bool)> = pool.install(|| {
        work.par_iter()
            .map(|job| (job.identity(), job.key(), job.pass()))
            .collect()
    });
    results.sort();

    let mut by_identity: BTreeMap<&str, (u64, u64, Vec<String>)> = BTreeMap::new();
    for (identity, key, pass) in results {
        let slot = by_identity.entry(identity).or_default();
        slot.0 += 1;
        if pass {
            slot.1 += 1;
        } else {
            slot.2.push(key);
        }
    }
    let pass = by_identity.values().all(|(runs, passes, _)| runs == passes);
    let identities: Vec<_> = by_identity
        .iter()
        .map(|(name, (runs, passes, failures))| {
            json!({
                "name": name,
                "runs": runs,
                "passes": passes,
                "failures": failures,
            })
        })
        .collect();
    CorpusOutcome {
        result: json!({
            "max_size": max_size,
            "pass": pass,
            "identities": identities,
        }),
        pass,
    }
}
