use excitable_core::rate::{
    acyclic_limit, closed_form_lambda_uniform, closed_form_legendre_uniform, cycle_sum_zero_probability,
    cycle_sum_zero_probability_exact, er_sync_constant, transfer_lambda, tree_function, unicyclic_mean,
    ColorDensities, RateFunction,
};
use excitable_core::{DynamicsKind, RngStream};
use num_rational::Ratio;
use rand::Rng;

fn random_densities(rng: &mut RngStream) -> ColorDensities {
    let w: [f64; 3] = [rng.random_range(0.05..1.0), rng.random_range(0.05..1.0), rng.random_range(0.05..1.0)];
    let s: f64 = w.iter().sum();
    let (p0, p1) = (w[0] / s, w[1] / s);
    ColorDensities::new(p0, p1, 1.0 - p0 - p1).unwrap()
}

#[test]
fn lambda_matches_closed_form_on_grid() {
    let cca = RateFunction::new(DynamicsKind::Cca, ColorDensities::uniform());
    let ghm = RateFunction::new(DynamicsKind::Ghm, ColorDensities::uniform());
    for i in 0..=100 {
        let t = i as f64 * 0.1;
        assert!((cca.lambda(t).unwrap() - closed_form_lambda_uniform(t)).abs() <= 1e-10, "t = {t}");
        assert!((ghm.lambda(3.0 * t).unwrap() - closed_form_lambda_uniform(t)).abs() <= 1e-10, "t = {t}");
    }
}

#[test]
fn legendre_matches_closed_form() {
    let cca = RateFunction::new(DynamicsKind::Cca, ColorDensities::uniform());
    let ghm = RateFunction::new(DynamicsKind::Ghm, ColorDensities::uniform());
    for i in 1..=19 {
        let u = i as f64 * 0.05;
        let want = closed_form_legendre_uniform(u);
        assert!((cca.legendre(u).unwrap().value - want).abs() <= 1e-8, "u = {u}");
        assert!((ghm.legendre(u / 3.0).unwrap().value - want).abs() <= 1e-8, "u = {u}");
    }
}

#[test]
fn legendre_argmax_is_a_critical_point() {
    let mut rng = RngStream::new(4, 0);
    for _ in 0..20 {
        let rf = RateFunction::new(DynamicsKind::Cca, random_densities(&mut rng));
        for u in [0.1, 0.4, 0.7, 0.95] {
            let p = rf.legendre(u).unwrap();
            let t = p.argmax_t.unwrap();
            let h = 1e-5;
            let slope = (rf.lambda(t + h).unwrap() - rf.lambda((t - h).max(0.0)).unwrap()) / (t + h - (t - h).max(0.0));
            assert!((slope - u).abs() < 1e-4, "u = {u}, Λ'(t) = {slope}");
            assert!((p.value - (u * t - rf.lambda(t).unwrap())).abs() < 1e-12);
        }
    }
}

#[test]
fn transfer_oracle_on_random_densities() {
    let mut rng = RngStream::new(21, 0);
    for _ in 0..30 {
        let d = random_densities(&mut rng);
        for kind in DynamicsKind::ALL {
            let rf = RateFunction::new(kind, d);
            for t in [0.0, 0.05, 0.3, 1.0, 2.5, 5.0, 10.0] {
                let a = rf.lambda(t).unwrap();
                let b = transfer_lambda(kind, &d, t);
                assert!((a - b).abs() <= 1e-8, "{kind} t={t}: {a} vs {b}");
            }
        }
    }
}

#[test]
fn binary_tree_predictions() {
    let ln2 = 2f64.ln();
    let cca = RateFunction::new(DynamicsKind::Cca, ColorDensities::uniform()).predict_cloud_speed(ln2, ln2).unwrap();
    let ghm = RateFunction::new(DynamicsKind::Ghm, ColorDensities::uniform()).predict_cloud_speed(ln2, ln2).unwrap();
    assert!((cca - 0.86824163).abs() < 1e-6, "{cca}");
    assert!((ghm - 0.28941386).abs() < 1e-6, "{ghm}");
    assert!((ghm - cca / 3.0).abs() <= 1e-9);
    assert!((closed_form_legendre_uniform(cca) - ln2).abs() < 1e-10);
}

#[test]
fn wide_trees_hit_the_ceiling() {
    for d in [3u32, 4, 10] {
        let h = f64::from(d).ln();
        for kind in DynamicsKind::ALL {
            let rf = RateFunction::new(kind, ColorDensities::uniform());
            assert_eq!(rf.predict_cloud_speed(h, h).unwrap(), rf.ceiling());
        }
    }
}

#[test]
fn prediction_increases_with_entropy() {
    let rf = RateFunction::new(DynamicsKind::Cca, ColorDensities::new(0.5, 0.3, 0.2).unwrap());
    let mut prev = 0.0;
    for i in 1..=20 {
        let h = i as f64 * 0.2;
        let v = rf.predict_cloud_speed(h, h).unwrap();
        assert!(v >= prev && v <= 1.0);
        if v < 1.0 {
            assert!((rf.legendre(v).unwrap().value - h).abs() < 1e-9);
        }
        prev = v;
    }
}

#[test]
fn cycle_sums_match_between_exact_and_float() {
    let third = Ratio::new(1i128, 3);
    for kind in DynamicsKind::ALL {
        for k in 3..=12 {
            let exact = cycle_sum_zero_probability_exact(kind, &[third; 3], k).unwrap();
            let float = cycle_sum_zero_probability(kind, &ColorDensities::uniform(), k).unwrap();
            let approx = *exact.numer() as f64 / *exact.denom() as f64;
            assert!((approx - float).abs() < 1e-14, "{kind} k={k}");
            // One non-irrotational pattern per triangle bound.
            assert!(exact <= Ratio::new(7, 9));
        }
    }
    assert_eq!(
        cycle_sum_zero_probability_exact(DynamicsKind::Cca, &[third; 3], 3).unwrap(),
        Ratio::new(7, 9)
    );
}

#[test]
fn sync_constant_converges_in_k() {
    for kind in DynamicsKind::ALL {
        for lambda in [0.2, 0.5] {
            let c40 = er_sync_constant(kind, lambda, 40).unwrap();
            let c80 = er_sync_constant(kind, lambda, 80).unwrap();
            assert!((c40 - c80).abs() <= 1e-10, "{kind} λ={lambda}");
            // Dropping cycles of length > 20 changes log C by at most Σ ν_k.
            let c20 = er_sync_constant(kind, lambda, 20).unwrap();
            let tail: f64 = (21..=40).map(|k| unicyclic_mean(lambda, k).unwrap()).sum();
            assert!(c20 >= c40 && (c20.ln() - c40.ln()) <= tail * (1.0 + 1e-9), "{kind} λ={lambda}");
        }
    }
}

#[test]
fn sync_constant_lies_between_forest_and_bound() {
    for lambda in [0.1, 0.3, 0.5, 0.7, 0.9] {
        let c = acyclic_limit(lambda).unwrap();
        let big_c = er_sync_constant(DynamicsKind::Cca, lambda, 80).unwrap();
        assert!(c <= big_c && big_c <= 1.0 - 2.0 / 9.0 * (1.0 - c), "λ = {lambda}");
    }
}

#[test]
fn tree_function_inverse() {
    for lambda in [0.05f64, 0.25, 0.5] {
        assert!((tree_function(lambda * (-lambda).exp()).unwrap() - lambda).abs() < 1e-13);
    }
}
