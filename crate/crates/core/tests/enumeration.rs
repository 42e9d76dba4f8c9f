mod common;

use std::collections::BTreeSet;

use lexbs::enumerate::enumerate_artinian_lex;

#[test]
fn matches_brute_force_up_to_degree_three() {
    for d in 1..=3 {
        let oracle = common::brute_force_artinian_lex(d);
        let listed: Vec<_> = enumerate_artinian_lex(3, d).unwrap().map(|i| common::key(&i)).collect();
        let distinct: BTreeSet<_> = listed.iter().cloned().collect();
        assert_eq!(listed.len(), distinct.len(), "duplicates at max_deg {d}");
        assert_eq!(distinct, oracle, "max_deg {d}");
    }
}

#[test]
fn lower_degree_runs_embed() {
    let five: BTreeSet<_> = enumerate_artinian_lex(3, 5).unwrap().map(|i| common::key(&i)).collect();
    for d in 1..5 {
        for i in enumerate_artinian_lex(3, d).unwrap() {
            assert!(five.contains(&common::key(&i)), "{i} missing from the degree-5 run");
        }
    }
}

#[test]
fn colon_ideals_stay_lex_and_split_degrees() {
    for l in enumerate_artinian_lex(3, 6).unwrap() {
        for i in 1..=3 {
            let c = l.colon_variable(i).unwrap();
            assert!(c.is_lex_segment(), "{l} : x_{i}");
        }
        let s = l.split_x().unwrap();
        if let Some(j) = &s.j {
            assert!(j.is_stable());
            if !s.a.is_unit() {
                assert!(j.g_min() > s.a.g_max(), "{l}");
            }
        }
        if l.g_min() >= 2 {
            assert_eq!(l.g_min(), s.a.g_min() + 1, "{l}");
        }
    }
}

#[test]
fn corollary_in_four_variables() {
    use lexbs::enumerate::lex_ideal_from_segment_sizes;
    use lexbs::verify::{check_corollary, Outcome};

    let mut checked = 0;
    for s1 in 0..=1 {
        for s2 in 0..=10 {
            for s3 in 0..=20 {
                let Ok(l) = lex_ideal_from_segment_sizes(4, &[s1, s2, s3]) else { continue };
                if l.generators().is_empty() || l.is_unit() {
                    continue;
                }
                let r = check_corollary(&l);
                assert_ne!(r.outcome(), Outcome::Fail, "{r}");
                checked += 1;
            }
        }
    }
    assert!(checked > 50, "{checked}");
}
