mod common;

use common::{par_mce_family, par_ttt_family, ttt_family, Lockstep};
use mce_core::enumerate::{ttt_observed, InvariantCheck};
use mce_core::{
    brute_force_mce, counting_sink, gen_complete, gen_gnp, gen_moon_moser, par_mce,
    subproblem_for_vertex, ttt, writer_sink, CollectingSink, Graph, ParallelConfig, RankAssignment,
    RankStrategy, Subproblem,
};

#[test]
fn every_emission_is_a_maximal_clique() {
    let graphs = [
        gen_gnp(200, 0.05, 1),
        gen_gnp(150, 0.2, 2),
        gen_gnp(60, 0.6, 3),
        gen_moon_moser(6),
    ];
    let cfg = ParallelConfig::new(4).with_cutoff(4);
    for g in &graphs {
        let (reference, _) = ttt_family(g);
        for c in reference.iter() {
            assert!(g.is_maximal_clique(c), "{c:?} is not maximal");
        }
        assert_eq!(par_ttt_family(g, &cfg).0, reference);
        for strategy in RankStrategy::ALL {
            let (family, raw) = par_mce_family(g, strategy, &cfg);
            assert_eq!(raw, family.len(), "duplicates under {strategy}");
            assert_eq!(family, reference);
        }
    }
}

#[test]
fn random_graphs_match_ttt() {
    for seed in 0..100 {
        let g = gen_gnp(12, 0.5, seed);
        let (reference, _) = ttt_family(&g);
        assert_eq!(reference, brute_force_mce(&g).unwrap(), "seed {seed}");
        for threads in [1, 4] {
            let cfg = ParallelConfig::new(threads).with_cutoff(0);
            assert_eq!(par_ttt_family(&g, &cfg).0, reference, "seed {seed}");
        }
    }
    for seed in 0..20 {
        let g = gen_gnp(10, 0.5, 1000 + seed);
        let oracle = brute_force_mce(&g).unwrap();
        for strategy in RankStrategy::ALL {
            let (family, raw) =
                par_mce_family(&g, strategy, &ParallelConfig::new(3).with_cutoff(1));
            assert_eq!((family, raw), (oracle.clone(), oracle.len()));
        }
    }
}

#[test]
fn unrolled_sets_track_incremental_state() {
    for seed in 0..30 {
        let g = gen_gnp(25, 0.4, seed);
        let mut lockstep = Lockstep::new(&g);
        ttt_observed(
            &g,
            Subproblem::root(&g),
            &CollectingSink::new(),
            &mut lockstep,
        );
        assert!(lockstep.compared > 0);
        assert!(lockstep.mismatches.is_empty(), "{:?}", lockstep.mismatches);
    }
}

#[test]
fn subproblem_invariants_and_depth() {
    for (seed, p) in [(1, 0.3), (2, 0.6), (3, 0.9)] {
        let g = gen_gnp(40, p, seed);
        let (family, _) = ttt_family(&g);
        let max_clique = family.iter().map(Vec::len).max().unwrap();

        let mut check = InvariantCheck::new(&g);
        ttt_observed(&g, Subproblem::root(&g), &CollectingSink::new(), &mut check);
        assert!(check.violations.is_empty(), "{:?}", check.violations);
        // K grows by one per level, so at most M + 1 levels (K = ∅ .. K = M)
        assert!(check.max_depth <= max_clique);

        let rank = RankAssignment::compute(&g, RankStrategy::Degeneracy);
        for v in g.vertices() {
            let sp = subproblem_for_vertex(&g, &rank, v);
            assert!(sp.check(&g).is_ok());
            let mut check = InvariantCheck::new(&g);
            ttt_observed(&g, sp, &CollectingSink::new(), &mut check);
            assert!(check.violations.is_empty());
        }
    }
}

#[test]
fn each_clique_comes_from_its_rank_minimum() {
    let g = gen_gnp(80, 0.25, 9);
    for strategy in RankStrategy::ALL {
        let rank = RankAssignment::compute(&g, strategy);
        let mut total = 0;
        for v in g.vertices() {
            let sink = CollectingSink::new();
            ttt(&g, subproblem_for_vertex(&g, &rank, v), &sink);
            for c in sink.into_cliques() {
                let argmin = *c.iter().min_by_key(|&&u| rank.key(u)).unwrap();
                assert_eq!(argmin, v, "{c:?} reported by {v} under {strategy}");
                total += 1;
            }
        }
        assert_eq!(total, ttt_family(&g).0.len());
    }
}

#[test]
fn concurrent_count_matches_sequential() {
    let g = gen_gnp(300, 0.1, 4);
    let seq = counting_sink();
    ttt(&g, Subproblem::root(&g), &seq);
    for threads in [1, 2, 8] {
        let par = counting_sink();
        let rank = RankAssignment::compute(&g, RankStrategy::Degree);
        par_mce(
            &g,
            &rank,
            &par,
            &ParallelConfig::new(threads).with_cutoff(2),
        );
        assert_eq!(par.summary(), seq.summary());
    }
}

fn canonical_listing(g: &Graph, run: impl FnOnce(&dyn mce_core::CliqueSink)) -> Vec<u8> {
    let sink = writer_sink(Vec::new(), g, false, true);
    run(&sink);
    sink.finish().unwrap()
}

#[test]
fn canonical_output_is_schedule_independent() {
    let g = gen_gnp(120, 0.15, 5);
    let reference = canonical_listing(&g, |s| ttt(&g, Subproblem::root(&g), &s));
    assert!(!reference.is_empty());
    for threads in [1, 3, 8] {
        let cfg = ParallelConfig::new(threads).with_cutoff(3);
        let listing = canonical_listing(&g, |s| {
            mce_core::par_ttt(&g, Subproblem::root(&g), &s, &cfg)
        });
        assert_eq!(listing, reference);
        for strategy in RankStrategy::ALL {
            let rank = RankAssignment::compute(&g, strategy);
            let listing = canonical_listing(&g, |s| par_mce(&g, &rank, &s, &cfg));
            assert_eq!(listing, reference);
        }
    }
}

#[test]
fn extremal_families() {
    for k in 1..=5 {
        let g = gen_moon_moser(k);
        let (family, _) = ttt_family(&g);
        assert_eq!(family, brute_force_mce(&g).unwrap());
        assert_eq!(family.len(), 3usize.pow(k as u32));
    }
    for n in 1..=8 {
        let g = gen_complete(n);
        let cfg = ParallelConfig::new(2).with_cutoff(0);
        let expected = vec![(0..n as u32).collect::<Vec<_>>()];
        assert_eq!(ttt_family(&g).0.cliques(), expected.as_slice());
        assert_eq!(par_ttt_family(&g, &cfg).0.cliques(), expected.as_slice());
        assert_eq!(
            par_mce_family(&g, RankStrategy::Triangle, &cfg).0.cliques(),
            expected.as_slice()
        );
    }
}

#[test]
fn counting_moon_moser_three() {
    let g = gen_moon_moser(3);
    let sink = counting_sink();
    par_mce(
        &g,
        &RankAssignment::compute(&g, RankStrategy::Degree),
        &sink,
        &ParallelConfig::new(4),
    );
    assert_eq!(sink.count(), 27);

    let path = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)]);
    let hist = mce_core::histogram_sink();
    ttt(&path, Subproblem::root(&path), &hist);
    assert_eq!(hist.histogram(), [(2, 4)].into());

    let k5 = mce_core::histogram_sink();
    ttt(&gen_complete(5), Subproblem::root(&gen_complete(5)), &k5);
    assert_eq!(k5.histogram(), [(5, 1)].into());
}
