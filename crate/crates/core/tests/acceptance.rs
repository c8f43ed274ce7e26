//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each and
//! exits non-zero if any fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use restricted_sumsets::sets::oracle_restricted_sumset;
use restricted_sumsets::{
    build_witness, cli, enumerate_abelian_groups, iterated_sumset, restricted_sumset,
    restricted_sumset_layers, sumset, validate_certificate, CaseTag, ElementSet, GroupSpec,
};

use common::*;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn all_subsets(g: &GroupSpec) -> impl Iterator<Item = ElementSet> + '_ {
    (1u64..1 << g.order()).map(move |mask| ElementSet::from_mask(g, mask))
}

fn random_subset(g: &GroupSpec, rng: &mut ChaCha8Rng) -> ElementSet {
    loop {
        let picked = (0..g.order()).filter(|_| rng.gen::<bool>());
        let s = ElementSet::from_indices(g, picked).unwrap();
        if !s.is_empty() {
            return s;
        }
    }
}

fn oracle_equivalence() -> Outcome {
    let mut checked = 0u64;
    for g in enumerate_abelian_groups(2, 12) {
        let t = Table::new(&g);
        for a in all_subsets(&g) {
            let naive = naive_restricted_layers(&t, &indices(&a));
            let layers = restricted_sumset_layers(&a, a.len());
            for k in 0..=a.len() {
                let dp = restricted_sumset(&a, k);
                let lib_oracle = oracle_restricted_sumset(&a, k).map_err(|e| e.to_string())?;
                ensure(to_set(&dp) == naive[k], || {
                    format!("{g} {a} k={k}: dp {dp}")
                })?;
                ensure(lib_oracle == dp, || {
                    format!("{g} {a} k={k}: oracle {lib_oracle} vs dp {dp}")
                })?;
                ensure(layers[k] == dp, || {
                    format!("{g} {a} k={k}: layer {}", layers[k])
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} instances"))
}

fn check_theorem(g: &GroupSpec, a: &ElementSet, equalities: &mut u64) -> Result<u64, String> {
    let layers = restricted_sumset_layers(a, a.len());
    let mut n = 0;
    for (k, layer) in layers.iter().enumerate().skip(2) {
        let actual = layer.len() as i64;
        let bound = restricted_bound(g.order(), a.len(), k);
        ensure(actual >= bound, || {
            format!("violation in {g}: {a} k={k}: {actual} < {bound}")
        })?;
        if actual == bound {
            *equalities += 1;
        }
        n += 1;
    }
    Ok(n)
}

fn theorem_sweep() -> Outcome {
    let (mut exhaustive, mut sampled, mut equalities) = (0u64, 0u64, 0u64);
    for g in enumerate_abelian_groups(2, 16) {
        for a in all_subsets(&g) {
            exhaustive += check_theorem(&g, &a, &mut equalities)?;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut subsets = 0u64;
    for g in enumerate_abelian_groups(17, 36) {
        for _ in 0..10_000 {
            sampled += check_theorem(&g, &random_subset(&g, &mut rng), &mut equalities)?;
            subsets += 1;
        }
    }
    Ok(format!(
        "{exhaustive} exhaustive + {sampled} sampled instances ({subsets} sampled subsets), {equalities} equalities, 0 violations"
    ))
}

fn progression_equality() -> Outcome {
    let mut checked = 0;
    for p in [5usize, 7, 11, 13] {
        let g = GroupSpec::cyclic(p).unwrap();
        let t = Table::new(&g);
        for n in 2..=p {
            let a = ElementSet::from_indices(&g, 0..n).unwrap();
            let naive = naive_restricted_layers(&t, &indices(&a));
            for (k, brute) in naive.iter().enumerate().skip(2) {
                let expected = (p as i64).min((k * n) as i64 - (k * k) as i64 + 1);
                let actual = restricted_sumset(&a, k).len() as i64;
                ensure(brute.len() as i64 == expected, || {
                    format!(
                        "Z{p} n={n} k={k}: brute force {} vs {expected}",
                        brute.len()
                    )
                })?;
                ensure(actual == expected, || {
                    format!("Z{p} n={n} k={k}: {actual} vs {expected}")
                })?;
                checked += 1;
            }
        }
    }
    Ok(format!("{checked} progressions"))
}

fn small_subsets(order: usize, max: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn go(order: usize, start: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        if cur.len() == max {
            return;
        }
        for i in start..order {
            cur.push(i);
            go(order, i + 1, max, cur, out);
            cur.pop();
        }
    }
    go(order, 0, max, &mut Vec::new(), &mut out);
    out
}

fn sumset_sweeps() -> Outcome {
    let mut pairs = 0u64;
    for g in enumerate_abelian_groups(2, 12) {
        let t = Table::new(&g);
        let small = small_subsets(g.order(), 4);
        let sets: Vec<ElementSet> = small
            .iter()
            .map(|s| ElementSet::from_indices(&g, s.iter().copied()).unwrap())
            .collect();
        for (i, a) in sets.iter().enumerate() {
            for (j, b) in sets.iter().enumerate() {
                let s = sumset(a, b).unwrap();
                let naive = naive_sumset(&t, &[small[i].clone(), small[j].clone()]);
                ensure(to_set(&s) == naive, || format!("{g}: {a}+{b} = {s}"))?;
                let bound = sum_bound(g.order(), &[a.len(), b.len()]);
                ensure(s.len() as i64 >= bound, || {
                    format!("{g}: |{a}+{b}| = {} < {bound}", s.len())
                })?;
                pairs += 1;
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x17e7);
    let mut lists = 0u64;
    for g in enumerate_abelian_groups(2, 36) {
        let t = Table::new(&g);
        for _ in 0..2_000 {
            let count = rng.gen_range(1..=5);
            let parts: Vec<Vec<usize>> = (0..count)
                .map(|_| {
                    let size = rng.gen_range(1..=g.order().min(6));
                    rand::seq::index::sample(&mut rng, g.order(), size).into_vec()
                })
                .collect();
            let sets: Vec<ElementSet> = parts
                .iter()
                .map(|p| ElementSet::from_indices(&g, p.iter().copied()).unwrap())
                .collect();
            let s = iterated_sumset(&g, &sets).unwrap();
            ensure(to_set(&s) == naive_sumset(&t, &parts), || {
                format!("{g}: iterated sum of {parts:?}")
            })?;
            let sizes: Vec<usize> = parts.iter().map(Vec::len).collect();
            let bound = sum_bound(g.order(), &sizes);
            ensure(s.len() as i64 >= bound, || {
                format!("{g}: {parts:?} gives {} < {bound}", s.len())
            })?;
            lists += 1;
        }
    }
    Ok(format!("{pairs} pairs, {lists} iterated part lists"))
}

struct WitnessTally {
    instances: u64,
    case_small: u64,
    cases: std::collections::BTreeMap<CaseTag, u64>,
}

fn check_witness(
    g: &GroupSpec,
    t: &Table,
    a: &ElementSet,
    tally: &mut WitnessTally,
) -> Result<(), String> {
    for k in 2..=a.len() {
        let cert = build_witness(a, k).map_err(|e| format!("{g} {a} k={k}: {e}"))?;
        let report = validate_certificate(g, a, k, &cert);
        ensure(report.ok, || {
            format!("{g} {a} k={k}: {:?}", report.failures)
        })?;

        // Independent re-check of the certificate.
        let sums = to_set(&restricted_sumset(a, k));
        let mut seen = std::collections::BTreeSet::new();
        let mut labels = std::collections::BTreeSet::new();
        for w in &cert.witness {
            ensure(!w.elements.is_empty(), || {
                format!("{g} {a} k={k}: empty witness set")
            })?;
            for x in w.elements.iter() {
                ensure(sums.contains(&x), || {
                    format!("{g} {a} k={k}: {x} not in k^A")
                })?;
                ensure(t.label(x) == w.coset_label, || {
                    format!("{g} {a} k={k}: {x} outside coset")
                })?;
                ensure(seen.insert(x), || format!("{g} {a} k={k}: {x} repeated"))?;
            }
            labels.insert(w.coset_label);
        }
        let bound = restricted_bound(g.order(), a.len(), k);
        let by_labels = matches!(cert.case, CaseTag::Projection | CaseTag::RProjection)
            && labels.len() == lpf(g.order());
        ensure(seen.len() as i64 >= bound || by_labels, || {
            format!("{g} {a} k={k}: total {} below {bound}", seen.len())
        })?;

        if cert.case == CaseTag::CaseSmall {
            let sizes = class_sizes(t, &indices(a));
            let expected = naive_profile(&sizes, k);
            let bad = closed_form_violations(&sizes, k, &expected);
            ensure(bad.is_empty(), || {
                format!("{g} {a} k={k}: closed forms {bad:?}")
            })?;
            let got = cert
                .profile
                .as_ref()
                .ok_or_else(|| format!("{g} {a} k={k}: no profile"))?;
            ensure(
                got.n == expected.n
                    && got.r == expected.r
                    && got.t == expected.t
                    && got.h == expected.h,
                || format!("{g} {a} k={k}: profile {got:?} vs {expected:?}"),
            )?;
            tally.case_small += 1;
        }
        *tally.cases.entry(cert.case).or_default() += 1;
        tally.instances += 1;
    }
    Ok(())
}

fn witness_sweep() -> Result<WitnessTally, String> {
    let mut tally = WitnessTally {
        instances: 0,
        case_small: 0,
        cases: Default::default(),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(0xce47);
    for g in enumerate_abelian_groups(2, 16)
        .into_iter()
        .filter(|g| !is_prime(g.order()))
    {
        let t = Table::new(&g);
        if g.order() <= 12 {
            for a in all_subsets(&g) {
                check_witness(&g, &t, &a, &mut tally)?;
            }
        } else {
            for _ in 0..2_000 {
                check_witness(&g, &t, &random_subset(&g, &mut rng), &mut tally)?;
            }
        }
    }
    Ok(tally)
}

fn determinism() -> Outcome {
    let run_with = |argv: &[&str], threads: usize| -> Result<Vec<u8>, String> {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| e.to_string())?;
        pool.install(|| {
            let (mut out, mut err) = (Vec::new(), Vec::new());
            let code = cli::run(argv.iter().copied(), &mut out, &mut err);
            ensure(code == 0, || {
                format!("exit {code}: {}", String::from_utf8_lossy(&err))
            })?;
            Ok(out)
        })
    };
    let mut bytes = 0;
    for argv in [
        &[
            "rsumset",
            "verify",
            "--max-order",
            "16",
            "--exhaustive",
            "--seed",
            "0",
        ][..],
        &[
            "rsumset",
            "verify",
            "--max-order",
            "12",
            "--exhaustive",
            "--seed",
            "0",
            "--checks",
            "all",
            "--format",
            "json",
        ][..],
    ] {
        let first = run_with(argv, 1)?;
        let second = run_with(argv, 1)?;
        let parallel = run_with(argv, 4)?;
        ensure(first == second, || {
            format!("{argv:?}: two sequential runs differ")
        })?;
        ensure(first == parallel, || {
            format!("{argv:?}: parallel run differs")
        })?;
        bytes += first.len();
    }
    Ok(format!(
        "{bytes} bytes identical across sequential and parallel runs"
    ))
}

fn performance() -> Outcome {
    let g = GroupSpec::cyclic(10_000).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let picked = rand::seq::index::sample(&mut rng, 10_000, 1_000).into_vec();
    let a = ElementSet::from_indices(&g, picked).unwrap();
    let start = Instant::now();
    let s = restricted_sumset(&a, 10);
    let elapsed = start.elapsed();
    ensure(
        s.len() as i64 >= restricted_bound(10_000, 1_000, 10),
        || "bound".into(),
    )?;
    ensure(elapsed.as_secs_f64() < 5.0, || format!("took {elapsed:?}"))?;
    Ok(format!(
        "|10^A| = {} in {:.3}s",
        s.len(),
        elapsed.as_secs_f64()
    ))
}

fn main() {
    let mut failed = 0;
    let mut report = |n: usize, name: &str, outcome: std::thread::Result<Outcome>, secs: f64| {
        let (tag, detail) = match outcome {
            Ok(Ok(d)) => ("PASS", d),
            Ok(Err(d)) => ("FAIL", d),
            Err(_) => ("FAIL", "panicked".to_string()),
        };
        if tag == "FAIL" {
            failed += 1;
        }
        println!("[{tag}] criterion {n}: {name}: {detail} ({secs:.1}s)");
    };
    let timed = |f: &dyn Fn() -> Outcome| {
        let start = Instant::now();
        let r = catch_unwind(AssertUnwindSafe(f));
        (r, start.elapsed().as_secs_f64())
    };

    let (r, s) = timed(&oracle_equivalence);
    report(1, "oracle equivalence for 2 <= |G| <= 12", r, s);
    let (r, s) = timed(&theorem_sweep);
    report(2, "restricted sumset bound sweep", r, s);
    let (r, s) = timed(&progression_equality);
    report(3, "equality on arithmetic progressions", r, s);
    let (r, s) = timed(&sumset_sweeps);
    report(4, "pair and iterated sumset bounds", r, s);

    let start = Instant::now();
    let sweep = catch_unwind(AssertUnwindSafe(witness_sweep));
    let secs = start.elapsed().as_secs_f64();
    let (five, six) = match sweep {
        Ok(Ok(t)) => {
            let six = if t.case_small > 0 {
                Ok(format!(
                    "{} CaseSmall profiles match the reference",
                    t.case_small
                ))
            } else {
                Err("no CaseSmall instance encountered".to_string())
            };
            (
                Ok(format!(
                    "{} certificates validated, cases {:?}",
                    t.instances, t.cases
                )),
                six,
            )
        }
        Ok(Err(e)) => (Err(e.clone()), Err(format!("witness sweep failed: {e}"))),
        Err(_) => (Err("panicked".into()), Err("witness sweep panicked".into())),
    };
    report(
        5,
        "witness soundness on composite orders <= 16",
        Ok(five),
        secs,
    );
    report(6, "multiplicity profile closed forms", Ok(six), 0.0);

    let (r, s) = timed(&determinism);
    report(7, "byte-identical campaign reports", r, s);
    let (r, s) = timed(&performance);
    report(8, "performance smoke test", r, s);

    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all criteria passed");
}
