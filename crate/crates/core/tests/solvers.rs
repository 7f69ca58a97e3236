use mvtop::covers::{self, CompactnessMode};
use mvtop::gen;
use mvtop::oracle;
use mvtop::{Chain, FuzzyFamily, FuzzySet, Settings};
use rand::Rng;

fn random_family(seed: u64, index: u64) -> FuzzyFamily {
    let mut rng = gen::case_rng(seed, index);
    let chain = gen::chain(&mut rng, 3);
    let width = rng.gen_range(1..=3);
    let len = rng.gen_range(0..=6);
    gen::family(&mut rng, chain, width, len)
}

#[test]
fn additive_cover_solver_matches_brute_force() {
    let settings = Settings::default();
    for i in 0..400 {
        let family = random_family(21, i);
        let solved = covers::minimal_additive_cover(&family, &settings).unwrap();
        match (solved, oracle::min_additive_total(&family)) {
            (None, None) => {}
            (Some(s), Some((total, mult))) => {
                assert_eq!(s.solution.total(), total, "{family:?}");
                let expect: Vec<(FuzzySet, u32)> = family
                    .iter()
                    .cloned()
                    .zip(mult)
                    .filter(|(_, m)| *m > 0)
                    .collect();
                assert_eq!(s.solution.entries(), &expect[..], "{family:?}");
                assert!(covers::is_additive_cover(&s.solution));
            }
            (a, b) => panic!("disagree on {family:?}: {:?} vs {:?}", a.map(|s| s.solution), b),
        }
    }
}

#[test]
fn subcover_solver_matches_brute_force() {
    let settings = Settings::default();
    for i in 0..400 {
        let family = random_family(22, i);
        let solved = covers::minimal_subcover(&family, &settings).unwrap();
        let expect = oracle::min_subcover(&family).map(|idx| {
            FuzzyFamily::new(family.chain(), family.width(), idx.iter().map(|&j| family.members()[j].clone()))
                .unwrap()
        });
        assert_eq!(solved.map(|s| s.solution), expect, "{family:?}");
    }
}

#[test]
fn greedy_and_exhaustive_agree_with_support_criterion() {
    for i in 0..400 {
        let family = random_family(23, i);
        let greedy = covers::find_additive_subcover(&family);
        let brute = covers::exhaustive_additive_subcover(&family, u64::MAX).unwrap();
        assert_eq!(greedy.is_some(), covers::supports_cover(&family));
        assert_eq!(brute.is_some(), oracle::has_additive_cover(&family));
        assert_eq!(greedy.is_some(), brute.is_some());
        if let Some(c) = greedy {
            assert!(covers::is_additive_cover(&c));
        }
    }
}

#[test]
fn finite_spaces_are_compact_in_both_modes() {
    let settings = Settings::default();
    for i in 0..60 {
        let mut rng = gen::case_rng(24, i);
        let t = gen::space(&mut rng, gen::SpaceBounds { max_points: 3, max_n: 2, max_subbase: 3, max_opens: 60 }, &settings);
        for mode in [CompactnessMode::Analytic, CompactnessMode::Oracle] {
            assert!(covers::is_compact(&t, mode, &settings).unwrap().compact);
            assert!(covers::is_strongly_compact(&t, mode, &settings).unwrap().compact);
        }
    }
}

#[test]
fn node_cap_is_reported_as_resource_error() {
    let chain = Chain::new(3).unwrap();
    let family = FuzzyFamily::new(
        chain,
        4,
        (0..12u8).map(|i| FuzzySet::new(chain, [i % 4, (i / 4) % 4, 1, (i + 1) % 4]).unwrap()),
    )
    .unwrap();
    let tight = Settings { max_nodes: 3, ..Settings::default() };
    let err = covers::minimal_additive_cover(&family, &tight).unwrap_err();
    assert!(err.is_resource(), "{err}");
}
