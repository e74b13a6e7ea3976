//! Exact activity on finite graphs against simulation and brute force.

mod common;

use common::{random_connected, size_in, uniform_coloring};
use excitable_core::ensembles::random_tree;
use excitable_core::{max_cycle_mean, DynamicsKind, Graph, OneForm, Rational, RngStream, SyncOutcome, Trajectory};

/// Maximum mean over all simple directed cycles (2-cycles included), by DFS.
fn brute_force_mcm(g: &Graph, form: &OneForm) -> Rational {
    let n = g.n();
    let mut best = Rational::from_integer(0);
    fn extend(g: &Graph, form: &OneForm, start: usize, path: &mut Vec<usize>, sum: i64, best: &mut Rational) {
        let u = *path.last().unwrap();
        for &v in g.neighbors(u) {
            let w = i64::from(form.value(g, u, v).unwrap());
            if v == start && path.len() >= 3 {
                *best = (*best).max(Rational::new(sum + w, path.len() as i64));
            } else if v > start && !path.contains(&v) {
                path.push(v);
                extend(g, form, start, path, sum + w, best);
                path.pop();
            }
        }
    }
    for s in 0..n {
        extend(g, form, s, &mut vec![s], 0, &mut best);
    }
    best
}

#[test]
fn karp_matches_cycle_enumeration() {
    let mut rng = RngStream::new(201, 0);
    for kind in DynamicsKind::ALL {
        for _ in 0..300 {
            let n = size_in(&mut rng, 2, 8);
            let extra = size_in(&mut rng, 0, 20);
            let g = random_connected(n, extra, &mut rng);
            let form = OneForm::new(&g, &uniform_coloring(n, &mut rng), kind).unwrap();
            assert_eq!(max_cycle_mean(&g, &form).unwrap(), brute_force_mcm(&g, &form));
        }
    }
}

#[test]
fn activity_is_max_cycle_mean() {
    let mut rng = RngStream::new(202, 0);
    for kind in DynamicsKind::ALL {
        for _ in 0..500 {
            let n = size_in(&mut rng, 2, 10);
            let extra = size_in(&mut rng, 0, 2 * n);
            let g = random_connected(n, extra, &mut rng);
            let x = uniform_coloring(n, &mut rng);
            let form = OneForm::new(&g, &x, kind).unwrap();
            let mcm = max_cycle_mean(&g, &form).unwrap();
            let mut traj = Trajectory::new(&g, x.clone(), kind).unwrap();
            let budget = traj.default_budget();
            let report = traj.run_to_limit_cycle(budget).unwrap();
            // Every vertex shares the same rate.
            assert_eq!(report.activity(), Some(mcm));
            let irrotational = form.irrotationality(&g).unwrap().is_irrotational();
            assert_eq!(irrotational, mcm == Rational::from_integer(0));
            assert_eq!(report.fixates(), irrotational);
            let mut fresh = Trajectory::new(&g, x, kind).unwrap();
            match fresh.synchronization_time().unwrap() {
                SyncOutcome::Synchronized(_) => {
                    assert!(irrotational);
                    let c = fresh.colors().to_vec();
                    fresh.advance(3 * n as u64);
                    assert!(fresh.is_monochromatic());
                    if kind == DynamicsKind::Cca {
                        assert_eq!(fresh.colors(), &c[..]);
                    }
                }
                SyncOutcome::NeverSynchronizes => {
                    assert!(!irrotational);
                    fresh.advance(4 * n as u64);
                    assert!(!fresh.is_monochromatic());
                }
            }
        }
    }
}

#[test]
fn trees_synchronize_by_the_diameter() {
    let mut rng = RngStream::new(203, 0);
    for kind in DynamicsKind::ALL {
        for _ in 0..300 {
            let n = size_in(&mut rng, 1, 40);
            let tree = random_tree(n, &mut rng);
            let x = uniform_coloring(n, &mut rng);
            let diameter = tree.diameter().unwrap() as u64;
            let mut traj = Trajectory::new(&tree, x.clone(), kind).unwrap();
            // Excitations stop by the diameter. Under GHM the remaining nonzero
            // colors still need up to two steps to cycle back to 0.
            let slack = if kind == DynamicsKind::Ghm { 2 } else { 0 };
            match traj.synchronization_time().unwrap() {
                SyncOutcome::Synchronized(t) => assert!(t <= diameter + slack),
                SyncOutcome::NeverSynchronizes => panic!("a tree failed to synchronize"),
            }
            let mut traj = Trajectory::new(&tree, x.clone(), kind).unwrap();
            traj.advance(diameter);
            let frozen = traj.excitations().to_vec();
            traj.advance(5);
            assert_eq!(traj.excitations(), &frozen[..]);
            let mut traj = Trajectory::new(&tree, x, kind).unwrap();
            let report = traj.run_to_limit_cycle(traj.default_budget()).unwrap();
            assert_eq!(report.activity(), Some(Rational::from_integer(0)));
            if kind == DynamicsKind::Cca {
                assert_eq!(report.period, 1);
                assert!(report.preperiod <= diameter);
            }
        }
    }
}

#[test]
fn ghm_edge_synchronizes_after_the_diameter() {
    let g = Graph::path(2);
    let x = excitable_core::Coloring::new(3, vec![1, 2]).unwrap();
    let mut traj = Trajectory::new(&g, x, DynamicsKind::Ghm).unwrap();
    assert_eq!(traj.synchronization_time(), Ok(SyncOutcome::Synchronized(2)));
}

#[test]
fn triangle_rotation() {
    let g = Graph::cycle(3);
    let x = excitable_core::Coloring::new(3, vec![0, 1, 2]).unwrap();
    let mut traj = Trajectory::new(&g, x, DynamicsKind::Cca).unwrap();
    let report = traj.run_to_limit_cycle(100).unwrap();
    assert_eq!((report.period, report.activity()), (3, Some(Rational::from_integer(1))));
}

#[test]
fn larger_kappa_runs_reach_limit_cycles() {
    let mut rng = RngStream::new(204, 0);
    for kind in DynamicsKind::ALL {
        for kappa in [4u8, 5, 9] {
            let g = random_connected(30, 20, &mut rng);
            let x = excitable_core::ensembles::uniform_coloring(30, kappa, &mut rng).unwrap();
            let mut traj = Trajectory::new(&g, x, kind).unwrap();
            let report = traj.run_to_limit_cycle(traj.default_budget()).unwrap();
            assert!(report.period >= 1);
            for v in 0..30 {
                assert!(report.excitations_per_period[v] <= report.period);
            }
        }
    }
}
