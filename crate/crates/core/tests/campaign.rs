mod common;

use restricted_sumsets::verify::{
    extremal_search, run_campaign, CampaignConfig, Checks, GroupFilter, ReportFormat,
};
use restricted_sumsets::GroupSpec;

use common::*;

fn orders(min: usize, max: usize) -> CampaignConfig {
    CampaignConfig {
        min_order: min,
        max_order: max,
        ..CampaignConfig::default()
    }
}

#[test]
fn order_two() {
    let r = run_campaign(&orders(2, 2)).unwrap();
    assert_eq!((r.groups_checked, r.instances_checked), (1, 1));
    assert!(r.violations.is_empty());
    let eq = &r.equality_cases[0];
    assert_eq!((eq.actual, eq.bound), (1, 1));
}

#[test]
fn prime_orders_have_every_progression_as_an_equality_case() {
    let cfg = CampaignConfig {
        groups: GroupFilter::PrimeOrder,
        ..orders(2, 13)
    };
    let r = run_campaign(&cfg).unwrap();
    assert!(r.is_clean());
    for p in [5usize, 7, 11, 13] {
        let g = GroupSpec::cyclic(p).unwrap();
        for n in 2..=p {
            for k in 2..=n {
                let found = r.equality_cases.iter().any(|e| {
                    e.group == g && e.k == k && e.set.to_indices() == (0..n).collect::<Vec<_>>()
                });
                assert!(found, "Z{p} n={n} k={k}");
            }
        }
    }
}

#[test]
fn instance_count_matches_enumeration() {
    // Σ over subsets with |A| = n >= 2 of (n - 1) values of k.
    let r = run_campaign(&orders(2, 8)).unwrap();
    let mut expected = 0u64;
    for g in restricted_sumsets::enumerate_abelian_groups(2, 8) {
        let order = g.order() as u64;
        let mut binom = 1u64;
        for n in 1..=order {
            binom = binom * (order - n + 1) / n;
            expected += binom * n.saturating_sub(1);
        }
    }
    assert_eq!(r.instances_checked, expected);
}

#[test]
fn equality_flags_agree_with_reference_bound() {
    let r = run_campaign(&orders(2, 9)).unwrap();
    assert_eq!(r.equality_count as usize, r.equality_cases.len());
    for e in &r.equality_cases {
        assert_eq!(
            e.actual as i64,
            restricted_bound(e.group.order(), e.set.len(), e.k)
        );
    }
}

#[test]
fn all_checks_on_small_groups() {
    let cfg = CampaignConfig {
        checks: Checks::ALL,
        ..orders(2, 10)
    };
    let r = run_campaign(&cfg).unwrap();
    assert!(r.is_clean(), "{}", r.render(ReportFormat::Table));
    assert!(r.oracle_checks > 0 && r.witness_checks > 0 && r.sumset_checks > 0);
    assert!(r.profiles_checked > 0);
}

#[test]
fn report_is_independent_of_thread_count() {
    let cfg = CampaignConfig {
        checks: Checks::ALL,
        samples_per_group: 300,
        ..orders(17, 22)
    };
    let render = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| run_campaign(&cfg).unwrap().render(ReportFormat::Json))
    };
    assert_eq!(render(1), render(3));
}

#[test]
fn extremal_examples() {
    let z5 = extremal_search(&orders(5, 5)).unwrap();
    assert!(z5
        .iter()
        .any(|i| i.k == 2 && i.set.to_indices() == vec![0, 1, 2]));
    // Reported once per translation class.
    assert!(z5.iter().all(|i| i.set.contains(0)));

    let z7 = extremal_search(&orders(7, 7)).unwrap();
    assert_eq!(
        z7.iter().filter(|i| i.k == 2 && i.set.len() == 5).count(),
        3
    );

    let klein = GroupSpec::new(&[2, 2]).unwrap();
    let four = extremal_search(&orders(4, 4)).unwrap();
    assert!(!four
        .iter()
        .any(|i| i.group == klein && i.k == 2 && i.set.len() == 4));
}
