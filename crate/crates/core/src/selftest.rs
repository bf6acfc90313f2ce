//! Named consistency checks over the precomputed tables and the small-instance sweep.

use std::fmt;

use serde::Serialize;

use crate::conjugacy::{base_words, census_mismatches, subtree_size_census};
use crate::engine::Engine;
use crate::oracle::validate_small_instances;
use crate::quotient::{build_lift_table_shuffled, CosetId, K_SPLIT_WITNESSES};
use crate::splitting::split;
use crate::tree_action::oracle_is_trivial;
use crate::word_problem::{equal, is_trivial};
use crate::words::{parse_word, Word};

#[derive(Debug, Clone, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SelfTestReport {
    pub checks: Vec<Check>,
}

impl SelfTestReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn failed_names(&self) -> Vec<&'static str> {
        self.checks.iter().filter(|c| !c.passed).map(|c| c.name).collect()
    }
}

impl fmt::Display for SelfTestReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "[{}] {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail)?;
        }
        Ok(())
    }
}

fn check(name: &'static str, result: Result<String, String>) -> Check {
    match result {
        Ok(detail) => Check { name, passed: true, detail },
        Err(detail) => Check { name, passed: false, detail },
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn w(s: &str) -> Word {
    parse_word(s).expect("literal word")
}

fn quotient_check(engine: &Engine) -> Result<String, String> {
    let q = engine.quotient();
    q.verify().map_err(|e| e.to_string())?;
    let ad4 = w("adadadad");
    ensure(is_trivial(&ad4) && oracle_is_trivial(&ad4), || "(ad)^4 is not trivial".into())?;
    ensure(!is_trivial(&w("abab")), || "abab is trivial in the group".into())?;
    Ok(format!("order {}, {} even cosets", q.order(), q.even_cosets().len()))
}

fn k_split_check(engine: &Engine) -> Result<String, String> {
    for (witness, k) in K_SPLIT_WITNESSES {
        let x = w(witness);
        let pair = split(&x).map_err(|e| e.to_string())?;
        ensure(equal(&pair.left, &w(k)) && is_trivial(&pair.right), || {
            format!("{witness} splits as {pair}, expected ({k}, 1)")
        })?;
        ensure(engine.quotient().coset_of(&x) == CosetId::IDENTITY, || format!("{witness} is not in K"))?;
    }
    Ok("3 generators of K split as (k, 1)".into())
}

fn lift_check(engine: &Engine) -> Result<String, String> {
    let t = engine.lift();
    t.check_invariants(engine.quotient()).map_err(|e| e.to_string())?;
    for seed in [1, 2, 3] {
        let shuffled = build_lift_table_shuffled(engine.quotient(), seed).map_err(|e| e.to_string())?;
        ensure(&shuffled == t, || format!("shuffled build with seed {seed} differs"))?;
    }
    Ok(format!("{} pairs, each even coset hit 4 times, order independent", t.len()))
}

fn base_check(engine: &Engine) -> Result<String, String> {
    let words = base_words();
    let sizes: Vec<usize> = words
        .iter()
        .map(|x| engine.base().get(x, x).expect("base word").len())
        .collect();
    ensure(sizes == [16, 4, 4, 4, 8], || format!("diagonal sizes {sizes:?}"))?;
    let nonempty_off = engine
        .base()
        .entries()
        .iter()
        .filter(|(u, v, s)| u != v && !s.is_empty())
        .count();
    ensure(nonempty_off == 0, || format!("{nonempty_off} nonempty off-diagonal entries"))?;
    Ok("|Q(1,1)|=16, |Q(a,a)|=4, |Q(b,b)|=|Q(c,c)|=4, |Q(d,d)|=8, off-diagonal empty".into())
}

fn census_check() -> Result<String, String> {
    let census = subtree_size_census().map_err(|e| e.to_string())?;
    let max = census.iter().map(|r| r.size).max().unwrap_or(0);
    ensure(census.len() == 95, || format!("{} words", census.len()))?;
    ensure(max == 21, || format!("maximum size {max}"))?;
    let mismatches = census_mismatches(&census);
    ensure(mismatches.is_empty(), || mismatches.join("; "))?;
    Ok(format!("{} words, maximum size {max}, all rows match", census.len()))
}

fn sweep_check(engine: &Engine) -> Result<String, String> {
    let report = validate_small_instances(engine, 4, 16).map_err(|e| e.to_string())?;
    ensure(report.is_clean(), || report.to_string())?;
    Ok(format!(
        "{} pairs: {} conjugate with witness, {} separated by abelianization, {} budget-consistent",
        report.pairs,
        report.conjugate_with_witness,
        report.not_conjugate_abelian,
        report.not_conjugate_budget_consistent
    ))
}

/// Runs every check; building the engine is itself the first check.
pub fn run_selftest() -> SelfTestReport {
    let engine = match Engine::shared() {
        Ok(e) => e,
        Err(e) => {
            return SelfTestReport {
                checks: vec![Check { name: "engine", passed: false, detail: e.to_string() }],
            }
        }
    };
    SelfTestReport {
        checks: vec![
            check("quotient", quotient_check(engine)),
            check("k-splitting", k_split_check(engine)),
            check("lift-table", lift_check(engine)),
            check("base-q", base_check(engine)),
            check("census", census_check()),
            check("oracle-sweep", sweep_check(engine)),
        ],
    }
}
