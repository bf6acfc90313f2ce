//! Acceptance criteria, one PASS/FAIL line each.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use grigorchuk::bench::run_bench;
use grigorchuk::conjugacy::{
    base_words, build_conj_tree, census_mismatches, subtree_size_census, words_below_norm_bound, Solver,
};
use grigorchuk::norm::{splitting_bound_failures, weight};
use grigorchuk::oracle::validate_small_instances;
use grigorchuk::quotient::{build_lift_table_shuffled, build_quotient, CosetId, K_GENERATORS, K_SPLIT_WITNESSES};
use grigorchuk::random::{random_letters, random_pair, random_trivial_letters, random_word};
use grigorchuk::splitting::split;
use grigorchuk::tree_action::oracle_is_trivial;
use grigorchuk::word_problem::{build_wp_tree, equal, is_trivial};
use grigorchuk::words::{reduce, reduced_words_up_to};
use grigorchuk::{Engine, Letter, Norm, Parity, Word};

type Outcome = Result<String, String>;

fn w(s: &str) -> Word {
    s.parse().unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn census() -> Outcome {
    let start = Instant::now();
    let rows = subtree_size_census().map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let max = rows.iter().map(|r| r.size).max().unwrap_or(0);
    ensure(rows.len() == 95, || format!("{} words, expected 95", rows.len()))?;
    let mismatches = census_mismatches(&rows);
    ensure(mismatches.is_empty(), || mismatches.join("; "))?;
    ensure(max == 21, || format!("maximum size {max}, expected 21"))?;
    ensure(elapsed < Duration::from_secs(1), || format!("took {elapsed:?}"))?;
    Ok(format!("95 rows match verbatim, maximum size 21, {elapsed:.2?}"))
}

fn lift_table(engine: &Engine) -> Outcome {
    let q = engine.quotient();
    let t = engine.lift();
    ensure(t.len() == 32, || format!("{} pairs", t.len()))?;
    let even = q.even_cosets();
    for x in &even {
        let hits = t.pairs().iter().filter(|p| p.2 == *x).count();
        ensure(hits == 4, || format!("coset {x} attained {hits} times"))?;
    }
    ensure(t.pairs().iter().all(|p| q.parity(p.2) == Parity::Even), || "odd lifted value".into())?;
    for seed in [7, 8, 9, 10] {
        let other = build_lift_table_shuffled(q, seed).map_err(|e| e.to_string())?;
        ensure(&other == t, || format!("randomized rebuild (seed {seed}) differs"))?;
    }
    Ok("32 pairs, values in the even subgroup, each attained 4 times, stable under reordering".into())
}

fn quotient() -> Outcome {
    let q = build_quotient().map_err(|e| e.to_string())?;
    ensure(q.order() == 16, || format!("order {}", q.order()))?;
    for k in K_GENERATORS {
        ensure(q.coset_of(&w(k)) == CosetId::IDENTITY, || format!("{k} is not in K"))?;
    }
    let even = q.even_cosets();
    ensure(even.len() == 8, || format!("{} even cosets", even.len()))?;
    for &x in &even {
        for &y in &even {
            ensure(even.contains(&q.mul(x, y)), || "even cosets not closed".into())?;
        }
    }
    let ad4 = w("adadadad");
    ensure(is_trivial(&ad4), || "(ad)^4 not trivial by the word problem".into())?;
    ensure(oracle_is_trivial(&ad4), || "(ad)^4 not trivial by the tree action".into())?;
    Ok("order 16, K generators in K, even cosets form a subgroup of order 8, (ad)^4 = 1".into())
}

fn k_splitting() -> Outcome {
    for (witness, k) in K_SPLIT_WITNESSES {
        let pair = split(&w(witness)).map_err(|e| e.to_string())?;
        ensure(equal(&pair.left, &w(k)) && is_trivial(&pair.right), || {
            format!("{witness} = {pair}, expected ({k}, 1)")
        })?;
    }
    Ok("b·ada·b·ada = (abab,1) and the two other generators split as (k,1)".into())
}

fn base_q(engine: &Engine) -> Outcome {
    let words = base_words();
    let mut sizes = Vec::new();
    for (i, u) in words.iter().enumerate() {
        for (j, v) in words.iter().enumerate() {
            let n = engine.base().get(u, v).unwrap().len();
            if i == j {
                sizes.push(n);
            } else {
                ensure(n == 0, || format!("|Q({u},{v})| = {n}"))?;
            }
        }
    }
    ensure(sizes == [16, 4, 4, 4, 8], || format!("diagonal sizes {sizes:?}"))?;
    Ok("diagonal sizes 16, 4, 4, 4, 8; off-diagonal empty".into())
}

fn height_ok(word: &Word) -> Result<(), String> {
    let tree = build_wp_tree(word);
    let h = tree.height();
    let ok = if word.is_empty() { h == 0 } else { h as f64 <= (word.len() as f64).log2() + 1.0 };
    ensure(ok, || format!("{word}: height {h}"))?;
    ensure(tree.is_trivial() == is_trivial(word), || format!("{word}: tree and fast path disagree"))
}

fn word_problem() -> Outcome {
    let exhaustive = reduced_words_up_to(10);
    let mut trivial = 0;
    for x in &exhaustive {
        let decided = is_trivial(x);
        ensure(decided == oracle_is_trivial(x), || format!("{x}: disagrees with the tree action"))?;
        height_ok(x)?;
        trivial += usize::from(decided);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut random_trivial = 0;
    for i in 0..10_000 {
        let x = match i % 10 {
            0..=3 => {
                let len = rng.gen_range(1..=200);
                random_word(&mut rng, len)
            }
            4..=6 => {
                let len = rng.gen_range(1..=200);
                reduce(random_letters(&mut rng, len))
            }
            _ => reduce(random_trivial_letters(&mut rng, 200)),
        };
        let decided = is_trivial(&x);
        ensure(decided == oracle_is_trivial(&x), || format!("{x}: disagrees with the tree action"))?;
        height_ok(&x)?;
        random_trivial += usize::from(decided);
    }
    Ok(format!(
        "{} exhaustive words ({trivial} trivial) and 10000 random words ({random_trivial} trivial) agree; heights within bound",
        exhaustive.len()
    ))
}

fn norm_bounds() -> Outcome {
    let g = |l| weight::<num_rational::BigRational>(l);
    let alpha = Norm::alpha();
    let (a, b, c, d) = (g(Letter::A), g(Letter::B), g(Letter::C), g(Letter::D));
    ensure(a.clone() + b.clone() == alpha.clone() * (a.clone() + c.clone()), || "γa+γb".into())?;
    ensure(a.clone() + c == alpha.clone() * (a.clone() + d.clone()), || "γa+γc".into())?;
    ensure(a + d == alpha * b, || "γa+γd".into())?;
    let exhaustive = reduced_words_up_to(12);
    for x in &exhaustive {
        let failed = splitting_bound_failures(x);
        ensure(failed.is_empty(), || format!("{x}: {}", failed.join(", ")))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for _ in 0..10_000 {
        let len = rng.gen_range(1..=400);
        let x = random_word(&mut rng, len);
        let failed = splitting_bound_failures(&x);
        ensure(failed.is_empty(), || format!("{x}: {}", failed.join(", ")))?;
    }
    Ok(format!("weight identities exact; bounds hold on {} exhaustive and 10000 random words", exhaustive.len()))
}

fn conjugacy(engine: &Engine) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..1000 {
        let (vl, xl) = (rng.gen_range(0..=60), rng.gen_range(0..=30));
        let v = random_word(&mut rng, vl);
        let x = random_word(&mut rng, xl);
        let u = v.conjugate_by(&x);
        let q = engine.q_set(&u, &v).map_err(|e| e.to_string())?;
        let cx = engine.quotient().coset_of(&x);
        ensure(q.contains(cx), || format!("({u}, {v}) by {x}: coset {cx} not in {q}"))?;
    }
    for (x, y) in [("b", "c"), ("b", "d"), ("c", "d")] {
        let yes = engine.are_conjugate(&w(x), &w(y)).map_err(|e| e.to_string())?;
        ensure(!yes, || format!("{x} and {y} decided conjugate"))?;
    }
    let report = validate_small_instances(engine, 4, 16).map_err(|e| e.to_string())?;
    ensure(report.is_clean(), || report.to_string())?;
    Ok(format!(
        "1000 constructed pairs sound; b, c, d pairwise not conjugate; sweep of {} pairs has 0 violations",
        report.pairs
    ))
}

fn trees(engine: &Engine) -> Outcome {
    let words = words_below_norm_bound();
    let mut max = (0, Word::identity(), Word::identity());
    for u in &words {
        for v in &words {
            let size = build_conj_tree(engine, u, v).size();
            if size > max.0 {
                max = (size, u.clone(), v.clone());
            }
        }
    }
    ensure(max.0 <= 42, || format!("T({}, {}) has {} nodes", max.1, max.2, max.0))?;
    Ok(format!(
        "{} pairs, largest tree T({}, {}) has {} nodes",
        words.len() * words.len(),
        max.1,
        max.2,
        max.0
    ))
}

fn performance(engine: &Engine) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1000);
    let mut slowest = Duration::ZERO;
    for _ in 0..10 {
        let (u, v) = random_pair(&mut rng, 1000);
        let start = Instant::now();
        Solver::new(engine).q_set(&u, &v).map_err(|e| e.to_string())?;
        slowest = slowest.max(start.elapsed());
    }
    ensure(slowest < Duration::from_secs(1), || format!("slowest pair took {slowest:?}"))?;
    let report = run_bench(engine, 1000, 5, 1).map_err(|e| e.to_string())?;
    ensure(report.size_exponent <= 7.0, || format!("size exponent {:.3}", report.size_exponent))?;
    Ok(format!(
        "slowest n=1000 pair {slowest:.2?}; fitted size exponent {:.3}, time exponent {:.3}",
        report.size_exponent, report.time_exponent
    ))
}

fn main() -> ExitCode {
    let engine = match Engine::shared() {
        Ok(e) => e,
        Err(e) => {
            println!("FAIL  engine construction: {e}");
            return ExitCode::FAILURE;
        }
    };
    let criteria: Vec<(&str, Box<dyn Fn() -> Outcome>)> = vec![
        ("subtree census", Box::new(census)),
        ("lift table", Box::new(|| lift_table(engine))),
        ("quotient", Box::new(quotient)),
        ("K-splitting identities", Box::new(k_splitting)),
        ("base Q cardinalities", Box::new(|| base_q(engine))),
        ("word problem", Box::new(word_problem)),
        ("norm bounds", Box::new(norm_bounds)),
        ("conjugacy soundness", Box::new(|| conjugacy(engine))),
        ("tree size bound", Box::new(|| trees(engine))),
        ("performance", Box::new(|| performance(engine))),
    ];
    let mut failures = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("PASS  {:>2} {name}: {detail}", i + 1),
            Err(detail) => {
                failures += 1;
                println!("FAIL  {:>2} {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
