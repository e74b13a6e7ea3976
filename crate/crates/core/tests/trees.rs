use excitable_core::ensembles::random_coloring;
use excitable_core::rate::{ColorDensities, RateFunction};
use excitable_core::trees::{
    entropy_estimates, estimate_cloud_speed, estimate_cloud_speed_histogram, level_stats, materialize_truncated_tree,
    simulate_on_truncated_tree, TreeFamily,
};
use excitable_core::{Coloring, DynamicsKind, OneForm, RngStream, Trajectory};

const BINARY_CCA: f64 = 0.86824163;

fn excitations_at_root(tree: &excitable_core::Graph, x: Coloring, kind: DynamicsKind, t: u64) -> u64 {
    let mut traj = Trajectory::new(tree, x, kind).unwrap();
    traj.advance(t);
    traj.excitations()[0]
}

#[test]
fn deep_colors_do_not_reach_the_root() {
    let mut rng = RngStream::new(40, 0);
    for kind in DynamicsKind::ALL {
        for _ in 0..30 {
            let tt = materialize_truncated_tree(&TreeFamily::DAry(2), &ColorDensities::uniform(), 11, &mut rng).unwrap();
            let t = 7u64;
            let base = excitations_at_root(&tt.graph, tt.coloring.clone(), kind, t);
            let fresh = random_coloring(tt.graph.n(), &ColorDensities::uniform(), &mut rng);
            let colors = (0..tt.graph.n())
                .map(|v| if tt.levels[v] > t as usize { fresh.get(v) } else { tt.coloring.get(v) })
                .collect();
            let mixed = Coloring::new(3, colors).unwrap();
            assert_eq!(excitations_at_root(&tt.graph, mixed, kind, t), base);
        }
    }
}

#[test]
fn truncation_depth_is_invisible() {
    let d = ColorDensities::new(0.4, 0.35, 0.25).unwrap();
    for seed in 0..10 {
        for family in [TreeFamily::DAry(3), TreeFamily::RayWithLeaves, TreeFamily::Geometric(2)] {
            let shallow =
                simulate_on_truncated_tree(&family, DynamicsKind::Cca, &d, 6, 6, &mut RngStream::new(seed, 0)).unwrap();
            let deep =
                simulate_on_truncated_tree(&family, DynamicsKind::Cca, &d, 9, 9, &mut RngStream::new(seed, 0)).unwrap();
            assert_eq!(shallow[..], deep[..7], "{family:?}");
        }
    }
}

#[test]
fn locality_violation_is_reported() {
    let r = simulate_on_truncated_tree(
        &TreeFamily::DAry(2),
        DynamicsKind::Cca,
        &ColorDensities::uniform(),
        4,
        5,
        &mut RngStream::new(0, 0),
    );
    assert!(r.is_err());
}

#[test]
fn monochromatic_tree_never_excites() {
    let zero = ColorDensities::new(1.0, 0.0, 0.0).unwrap();
    for kind in DynamicsKind::ALL {
        let ne = simulate_on_truncated_tree(&TreeFamily::DAry(2), kind, &zero, 8, 8, &mut RngStream::new(1, 0)).unwrap();
        assert!(ne.iter().all(|&x| x == 0));
        let f = estimate_cloud_speed(&TreeFamily::DAry(2), kind, &zero, 12, &mut RngStream::new(1, 0)).unwrap();
        assert_eq!(f.speed_estimate(), 0.0);
    }
}

#[test]
fn level_maxima_are_bounded_by_depth() {
    let mut rng = RngStream::new(2, 0);
    for kind in DynamicsKind::ALL {
        let f = estimate_cloud_speed(&TreeFamily::DAry(3), kind, &ColorDensities::uniform(), 10, &mut rng).unwrap();
        for (n, &m) in f.level_max.iter().enumerate() {
            assert!(m.unsigned_abs() as usize <= n);
        }
    }
}

#[test]
fn running_max_and_level_max_agree_asymptotically() {
    // ne_t(root) = running max of the level maxima; at matched depth the two
    // normalized quantities differ by little once the front is established.
    let depth = 300;
    for d in [2u32, 3] {
        for seed in 0..3 {
            let f = estimate_cloud_speed_histogram(
                &TreeFamily::DAry(d),
                DynamicsKind::Cca,
                &ColorDensities::uniform(),
                depth,
                &mut RngStream::new(seed, 0),
            )
            .unwrap();
            let ne = *f.running_max().last().unwrap() as f64 / depth as f64;
            assert!((ne - f.speed_estimate()).abs() <= 0.05, "d = {d}: {ne} vs {}", f.speed_estimate());
        }
    }
}

#[test]
fn binary_tree_long_run_speed() {
    // ne_200(root) on the binary tree, via its walk-maximum representation.
    for seed in 0..3 {
        let f = estimate_cloud_speed_histogram(
            &TreeFamily::DAry(2),
            DynamicsKind::Cca,
            &ColorDensities::uniform(),
            200,
            &mut RngStream::new(seed, 7),
        )
        .unwrap();
        let ne = *f.running_max().last().unwrap() as f64 / 200.0;
        assert!((ne - BINARY_CCA).abs() <= 0.1, "{ne}");
    }
}

#[test]
fn ternary_tree_reaches_the_ceiling() {
    let rf = RateFunction::new(DynamicsKind::Cca, ColorDensities::uniform());
    let h = 3f64.ln();
    assert_eq!(rf.predict_cloud_speed(h, h).unwrap(), 1.0);
    let f = estimate_cloud_speed_histogram(
        &TreeFamily::DAry(4),
        DynamicsKind::Cca,
        &ColorDensities::uniform(),
        200,
        &mut RngStream::new(3, 0),
    )
    .unwrap();
    assert!(f.speed_estimate() > 0.9);
}

#[test]
fn ghm_speed_is_a_third_of_cca() {
    let depth = 300;
    let mean = |kind| {
        (0..3)
            .map(|seed| {
                estimate_cloud_speed_histogram(
                    &TreeFamily::DAry(2),
                    kind,
                    &ColorDensities::uniform(),
                    depth,
                    &mut RngStream::new(seed, 11),
                )
                .unwrap()
                .speed_estimate()
            })
            .sum::<f64>()
            / 3.0
    };
    let (cca, ghm) = (mean(DynamicsKind::Cca), mean(DynamicsKind::Ghm));
    assert!((cca - 3.0 * ghm).abs() <= 0.1, "{cca} vs 3 × {ghm}");
}

#[test]
fn dfs_and_histogram_engines_agree_in_law() {
    // Mean level-16 maxima over many seeds, both engines, within 4 standard errors.
    let depth = 16;
    let trials = 200;
    let sample = |histogram: bool| -> Vec<f64> {
        (0..trials)
            .map(|s| {
                let mut rng = RngStream::new(s, u64::from(histogram));
                let d = ColorDensities::uniform();
                let f = if histogram {
                    estimate_cloud_speed_histogram(&TreeFamily::DAry(2), DynamicsKind::Cca, &d, depth, &mut rng)
                } else {
                    estimate_cloud_speed(&TreeFamily::DAry(2), DynamicsKind::Cca, &d, depth, &mut rng)
                };
                f.unwrap().max_partial_sum() as f64
            })
            .collect()
    };
    let stats = |xs: &[f64]| {
        let m = xs.iter().sum::<f64>() / xs.len() as f64;
        let v = xs.iter().map(|x| (x - m) * (x - m)).sum::<f64>() / (xs.len() - 1) as f64;
        (m, v / xs.len() as f64)
    };
    let (m1, se1) = stats(&sample(false));
    let (m2, se2) = stats(&sample(true));
    assert!((m1 - m2).abs() <= 4.0 * (se1 + se2).sqrt(), "{m1} vs {m2}");
}

#[test]
fn increments_are_one_correlated() {
    // Path root → a → b → c → e in a binary tree; (root, a) and (c, e) share no vertex.
    let trials = 20_000;
    let mut rng = RngStream::new(99, 0);
    let d = ColorDensities::new(0.5, 0.3, 0.2).unwrap();
    for kind in DynamicsKind::ALL {
        let (mut s1, mut s2, mut s12, mut s11, mut s22) = (0.0, 0.0, 0.0, 0.0, 0.0);
        for _ in 0..trials {
            let tt = materialize_truncated_tree(&TreeFamily::DAry(2), &d, 4, &mut rng).unwrap();
            let form = OneForm::new(&tt.graph, &tt.coloring, kind).unwrap();
            // BFS numbering: children of v are 2v+1 and 2v+2.
            let (a, b, c, e) = (1, 3, 7, 15);
            assert_eq!((tt.parent[a], tt.parent[b], tt.parent[c], tt.parent[e]), (0, a, b, c));
            let x = f64::from(form.value(&tt.graph, 0, a).unwrap());
            let y = f64::from(form.value(&tt.graph, c, e).unwrap());
            s1 += x;
            s2 += y;
            s12 += x * y;
            s11 += x * x;
            s22 += y * y;
        }
        let n = trials as f64;
        let (m1, m2) = (s1 / n, s2 / n);
        let (v1, v2) = (s11 / n - m1 * m1, s22 / n - m2 * m2);
        let cov = s12 / n - m1 * m2;
        // Increments are centred only for the symmetric CCA form.
        if kind == DynamicsKind::Cca {
            assert!(m1.abs() <= 4.0 * (v1 / n).sqrt(), "{kind} mean {m1}");
            assert!(m2.abs() <= 4.0 * (v2 / n).sqrt(), "{kind} mean {m2}");
        }
        assert!(cov.abs() <= 4.0 * (v1 * v2 / n).sqrt(), "{kind} cov {cov}");
    }
}

#[test]
fn leaves_carry_no_depth_entropy() {
    let mut rng = RngStream::new(0, 0);
    let stats = level_stats(&TreeFamily::RayWithLeaves, 60, &mut rng).unwrap();
    let e = entropy_estimates(&stats, 1.5).unwrap();
    assert!((e.h_hat - 2f64.ln()).abs() < 1e-12);
    assert_eq!(e.h_r_hat, 0.0);
    let stats = level_stats(&TreeFamily::DAry(3), 60, &mut rng).unwrap();
    for r in [1.1, 1.5, 2.0] {
        let e = entropy_estimates(&stats, r).unwrap();
        assert!((e.h_r_hat - e.h_hat).abs() < 1e-12);
    }
}

#[test]
fn geometric_tree_r_entropy_lower_bound() {
    let d = 16u32;
    let stats = level_stats(&TreeFamily::Geometric(d), 512, &mut RngStream::new(0, 0)).unwrap();
    let ln_d = f64::from(d).ln();
    for r in [1.25, 1.5, 1.75] {
        let e = entropy_estimates(&stats, r).unwrap();
        let best = e.h_r_series.iter().map(|&(_, h)| h).fold(f64::NEG_INFINITY, f64::max);
        assert!(best >= (1.0 - r / 2.0) * ln_d - 0.05, "r = {r}: {best}");
    }
    // Half the levels sit inside a subtree: h = (log d)/2 along n = 2·4^k.
    assert!((stats.ln_a_n(512) / 512.0 - ln_d / 2.0).abs() < 0.01);
}

#[test]
fn geometric_front_grows_inside_subtrees() {
    // Between 4^k and 2·4^k the front climbs through the fresh subtree; from there
    // to 4^{k+1} it only follows the ray and cannot keep pace.
    let f = estimate_cloud_speed_histogram(
        &TreeFamily::Geometric(16),
        DynamicsKind::Cca,
        &ColorDensities::uniform(),
        512,
        &mut RngStream::new(5, 0),
    )
    .unwrap();
    let run = f.running_max();
    let m = |n: usize| run[n] as f64;
    assert!(m(512) - m(256) > 0.3 * 256.0);
    assert!(m(256) - m(128) < 0.1 * 128.0);
    assert!(m(128) - m(64) > 0.3 * 64.0);
}
