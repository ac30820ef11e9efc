use num_complex::Complex64;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use steklov_core::harmonics::{
    check_divergence, fd_divergence, BallPoint, ModeIndex, Parity, SurfacePoint, Tau, Vec3,
};
use steklov_core::specfun::sph_bessel_j_with_deriv;
use steklov_core::steklov_ball::*;
use steklov_core::Error;

const EIGEN_ORACLE: &str = include_str!("data/eigen_oracle.csv");

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs()
}

fn mode(family: Family, parity: Parity, m: usize, l: usize, k2: f64, theta: f64) -> SteklovMode {
    SteklovMode::new(family, ModeIndex::new(parity, m, l).unwrap(), k2, theta).unwrap()
}

fn random_surface_point(rng: &mut ChaCha8Rng) -> SurfacePoint {
    SurfacePoint::new(rng.gen_range(0.05..3.09), rng.gen_range(0.0..std::f64::consts::TAU)).unwrap()
}

#[test]
fn eigenvalues_match_extended_precision_oracle() {
    for line in EIGEN_ORACLE.lines().skip(1) {
        let v: Vec<&str> = line.split(',').collect();
        let l: usize = v[1].parse().unwrap();
        let k2: f64 = v[2].parse().unwrap();
        let theta: f64 = v[3].parse().unwrap();
        let expect: f64 = v[4].parse().unwrap();
        let got = if v[0] == "1" { lambda1(l, k2, theta) } else { lambda2(l, k2) }.unwrap();
        assert!(rel(got, expect) <= 1e-11, "{line}: got {got}");
    }
}

#[test]
fn spot_values() {
    assert!((lambda1(1, 1.0, 1.0).unwrap() + 1.3797).abs() < 1e-4);
    assert!((lambda1_theta1_alt(1, 1.0).unwrap() + 1.3797).abs() < 1e-4);
    assert!((lambda2(1, 1.0).unwrap() + 1.79401).abs() < 1e-5);
    assert!(rel(lambda1(10, 1.0, 1.0).unwrap(), -10.0) < 0.1);
    let ratio = lambda2(20, 1.0).unwrap() / -20.0;
    assert!(ratio > 0.9 && ratio < 1.1);
}

#[test]
fn negative_k2_gives_real_eigenvalues() {
    // the complex evaluation itself must already be real
    let k = principal_k(-1.0);
    let (jk, djk) = sph_bessel_j_with_deriv(1, k).unwrap();
    let raw = -(jk + k * djk) / jk;
    assert!(raw.im.abs() <= 1e-12);
    for l in 1..=10 {
        for i in 0..=40 {
            let k2 = -0.5 - 99.5 * i as f64 / 40.0;
            lambda1(l, k2, 1.0).unwrap();
            lambda1(l, k2, 2.0).unwrap();
            lambda2(l, k2).unwrap();
        }
    }
}

#[test]
fn lambda2_resonance_at_first_zero_of_j1() {
    // first zero of j_1 from the root oracle, squared and nudged
    let x = 4.493409457909064f64;
    let err = lambda2(1, x * x * (1.0 + 1e-13)).unwrap_err();
    assert!(matches!(err, Error::DirichletResonance { l: 1, .. }), "{err:?}");
}

#[test]
fn alternate_form_at_theta_one() {
    // j_1'(k) = 0 at the first Neumann zero makes both forms vanish
    let z = 2.081575977818101f64;
    assert!(lambda1_theta1_alt(1, z * z).unwrap().abs() < 1e-12);
    let values = [-50.0, -10.0, -2.0, 2.0, 10.0, 50.0];
    for l in 1..=10 {
        for &k2 in &values {
            match (lambda1(l, k2, 1.0), lambda1_theta1_alt(l, k2)) {
                (Ok(a), Ok(b)) => assert!(rel(b, a) <= 1e-10, "l={l} k2={k2}: {a} vs {b}"),
                (Err(Error::DirichletResonance { .. }), Err(Error::DirichletResonance { .. })) => {}
                (a, b) => panic!("l={l} k2={k2}: {a:?} vs {b:?}"),
            }
        }
    }
}

#[test]
fn asymptotic_ratios_approach_one() {
    let mut prev = (f64::INFINITY, f64::INFINITY);
    for l in 30..=50 {
        let a = lambda1(l, 1.0, 1.0).unwrap() / -(l as f64);
        let b = lambda2(l, 1.0).unwrap() / -(l as f64);
        assert!(a > 0.85 && a < 1.15 && b > 0.85 && b < 1.15, "l={l}: {a} {b}");
        assert!((a - 1.0).abs() <= prev.0 && (b - 1.0).abs() <= prev.1);
        prev = ((a - 1.0).abs(), (b - 1.0).abs());
    }
}

#[test]
fn radial_profile_spot_values() {
    let e1 = radial_profiles(RadialKind::E1, 1, 1.0, 1.0).unwrap();
    assert!((e1.values(1.0).unwrap().e[0][0] - 0.3011687).abs() < 1e-7);
    let cal = radial_profiles(RadialKind::CalE, 1, 1.0, 1.0).unwrap().values(1.0).unwrap();
    assert!((cal.e[1][0] - 2f64.sqrt() * 0.3011686789397568).abs() < 1e-14);
    assert!((cal.e[1][0] - 0.4259178).abs() < 1e-6);
    assert!((cal.e[2][0] - 0.2391336).abs() < 1e-7);
}

#[test]
fn f_profile_is_tangential_for_random_parameters() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut done = 0;
    while done < 20 {
        let l = rng.gen_range(1..=8);
        let k2 = rng.gen_range(-50.0..50.0);
        let theta = [0.5, 1.0, 2.0][rng.gen_range(0..3)];
        let Ok(pair) = radial_profiles(RadialKind::F, l, k2, theta) else { continue };
        let v = pair.values(1.0).unwrap();
        let scale = v.e[1][0].abs().max(v.e[2][1].abs());
        assert!(v.e[2][0].abs() <= 1e-12 * scale, "l={l} k2={k2} theta={theta}");
        done += 1;
    }
}

#[test]
fn monk_and_e1_are_divergence_free() {
    for (kind, k2, theta) in [(RadialKind::Monk, 9.0, 2.0), (RadialKind::Monk, -4.0, 0.5), (RadialKind::E1, 3.0, 1.0)] {
        for l in [1usize, 3, 6] {
            let pair = radial_profiles(kind, l, k2, theta).unwrap();
            let s = ((l * (l + 1)) as f64).sqrt();
            for i in 0..=19 {
                let r = 0.05 + 0.95 * i as f64 / 19.0;
                let v = pair.values(r).unwrap();
                let phi = v.e[2][1] + 2.0 * v.e[2][0] / r - s * v.e[1][0] / r;
                let scale = v.e[2][1].abs().max(v.e[2][0].abs() / r).max(s * v.e[1][0].abs() / r).max(1.0);
                assert!(phi.abs() <= 1e-11 * scale, "{kind:?} l={l} r={r}: {phi}");
            }
        }
    }
}

#[test]
fn ode_system_residuals() {
    let cases = [
        (RadialKind::CalE, 1, 1.0, 1.0, 0.5),
        (RadialKind::Monk, 2, 9.0, 0.5, 0.7),
        (RadialKind::Monk, 2, 9.0, 3.0, 0.7),
        (RadialKind::F, 4, -20.0, 2.0, 0.3),
        (RadialKind::CalE, 3, 7.0, 0.5, 0.9),
        (RadialKind::E1, 5, 12.0, 1.0, 0.2),
    ];
    for (kind, l, k2, theta, r) in cases {
        let pair = radial_profiles(kind, l, k2, theta).unwrap();
        for res in residual_system(&pair, r).unwrap() {
            assert!(res.within(1e-10), "{kind:?} l={l}: {res:?}");
        }
    }
}

#[test]
fn fourth_order_equation() {
    for (kind, l, k2, r) in [(RadialKind::CalE, 1, 1.0, 0.5), (RadialKind::F, 2, 4.0, 0.3), (RadialKind::Monk, 3, -6.0, 0.8)] {
        let pair = radial_profiles(kind, l, k2, 1.0).unwrap();
        let res = residual_fourth_order_pair(&pair, r).unwrap();
        assert!(res.within(1e-9), "{kind:?}: {res:?}");
    }
    let zero = residual_fourth_order(2, 3.0, 0.4, &|_| Ok(steklov_core::jet::Jet::zero())).unwrap();
    assert_eq!(zero.value, 0.0);
}

#[test]
fn fourth_order_rejects_wrong_wavenumber() {
    // the gradient pair built for k^2 = 4 does not solve the k^2 = 5 equation
    let pair = radial_profiles(RadialKind::CalE, 2, 4.0, 1.0).unwrap();
    let res = residual_fourth_order(2, 5.0, 0.6, &|r| Ok(pair.jets(r)?[2])).unwrap();
    assert!(res.relative() > 1e-3, "{res:?}");
}

#[test]
fn divergence_of_each_family() {
    let two = mode(Family::Two, Parity::Even, 1, 3, 5.0, 1.0);
    let one = mode(Family::One, Parity::Even, 0, 1, 1.0, 1.0);
    let p = BallPoint::new(0.6, 0.8, 2.1).unwrap();
    assert_eq!(divergence_field(&two, &p).unwrap(), 0.0);
    let y = steklov_core::harmonics::scalar_y(&one.mode(), &p.direction);
    let j1 = sph_bessel_j_with_deriv(1, Complex64::new(0.6, 0.0)).unwrap().0.re;
    let expect = -j1 * y;
    assert!(rel(divergence_field(&one, &p).unwrap(), expect) <= 1e-12);
    assert!(rel(divergence_closed_form(&one, &p).unwrap(), expect) <= 1e-14);
}

#[test]
fn finite_difference_divergence_converges_at_second_order() {
    let m = mode(Family::One, Parity::Even, 1, 2, -3.0, 2.0);
    let p = BallPoint::new(0.55, 1.1, 0.4).unwrap();
    let radial = |r: f64| m.radial().values(r).unwrap();
    let errors: Vec<f64> = [0.02, 0.01, 0.005].iter().map(|&h| check_divergence(&m.mode(), &p, h, &radial).unwrap()).collect();
    for w in errors.windows(2) {
        assert!((w[0] / w[1]).log2() >= 1.9, "{errors:?}");
    }
    // and through the Cartesian eigenfield itself
    let field = |x: Vec3| eigenfield(&m, &BallPoint::from_cartesian(x).unwrap()).unwrap();
    let exact = divergence_closed_form(&m, &p).unwrap();
    let fd = fd_divergence(&field, p.to_cartesian(), 1e-3);
    assert!((fd - exact).abs() <= 1e-5 * exact.abs());
}

#[test]
fn divergence_equation_inside_and_on_the_sphere() {
    for (l, k2, theta, r) in [(1, 1.0, 1.0, 0.5), (3, -4.0, 2.0, 0.4), (2, 12.0, 0.5, 0.8)] {
        let m = mode(Family::One, Parity::Even, 0, l, k2, theta);
        let p = BallPoint::new(r, 0.7, 0.3).unwrap();
        let res = residual_div_helmholtz(&m, &p).unwrap();
        assert!(res.within(1e-10), "l={l}: {res:?}");
        let bc = residual_div_boundary(&m).unwrap();
        assert!(bc.within(1e-10), "l={l}: {bc:?}");
    }
    let two = mode(Family::Two, Parity::Odd, 1, 2, 2.0, 1.0);
    assert_eq!(residual_div_helmholtz(&two, &BallPoint::new(0.5, 1.0, 1.0).unwrap()).unwrap().value, 0.0);
}

#[test]
fn steklov_condition_holds_and_detects_wrong_lambda() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let two = mode(Family::Two, Parity::Even, 0, 1, 1.0, 1.0);
    let one = mode(Family::One, Parity::Even, 1, 1, 1.0, 1.0);
    for _ in 0..10 {
        let p = random_surface_point(&mut rng);
        for m in [two, one] {
            let res = verify_steklov_bc(&m, &p).unwrap();
            assert!(res.value <= 1e-10 * res.scale + 1e-12, "{res:?}");
            let bad = verify_steklov_bc(&m.with_lambda(m.lambda() + 0.1), &p).unwrap();
            let (e, _) = {
                let bp = BallPoint::new(1.0, p.theta, p.phi).unwrap();
                (eigenfield(&m, &bp).unwrap(), ())
            };
            assert!(bad.value >= 0.05 * e.norm(), "{bad:?}");
        }
    }
}

#[test]
fn eigenfield_is_tangential_on_the_sphere_and_has_parity() {
    let m = mode(Family::One, Parity::Odd, 2, 3, 6.0, 1.5);
    let p = BallPoint::new(1.0, 0.9, 1.7).unwrap();
    let e = eigenfield(&m, &p).unwrap();
    assert!(e.dot(&p.direction.normal()).abs() <= 1e-12 * e.norm());
    // E(-x) = (-1)^(l+1) E(x) for the A_2/A_3 families
    for r in [0.3, 0.8] {
        let x = BallPoint::new(r, 0.9, 1.7).unwrap();
        let mx = BallPoint::from_cartesian(x.to_cartesian() * -1.0).unwrap();
        let a = eigenfield(&m, &x).unwrap();
        let b = eigenfield(&m, &mx).unwrap();
        assert!((a - b * 1.0).max_abs() <= 1e-12 * a.norm(), "{a:?} {b:?}");
    }
}

#[test]
fn weak_identity() {
    let cases = [
        mode(Family::Two, Parity::Even, 0, 1, 1.0, 1.0),
        mode(Family::One, Parity::Odd, 1, 2, -3.0, 2.0),
        mode(Family::One, Parity::Even, 0, 4, 30.0, 0.5),
    ];
    for m in cases {
        let (ro, so) = default_orders(&m);
        let err = verify_weak_identity(&m, ro, so).unwrap();
        assert!(err <= 1e-9, "{m:?}: {err}");
    }
    let wrong = cases[1].with_lambda(cases[1].lambda() * 1.01);
    let (ro, so) = default_orders(&wrong);
    assert!(verify_weak_identity(&wrong, ro, so).unwrap() > 1e-4);
}

#[test]
fn weak_identity_flags_coarse_quadrature() {
    let m = mode(Family::One, Parity::Even, 0, 6, 40.0, 1.0);
    assert!(matches!(verify_weak_identity(&m, 2, 2), Err(Error::QuadratureTooCoarse { .. })));
}

#[test]
fn modal_solution_reproduces_boundary_data() {
    let n = ModeIndex::even(0, 1).unwrap();
    let data = ModalBoundaryData::new().with(n, Tau::Two, 1.0).unwrap();
    let sol = solve_boundary_modal(&data, 1.0, 1.0).unwrap();
    assert_eq!(sol.len(), 1);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..10 {
        let p = random_surface_point(&mut rng);
        let bp = BallPoint::new(1.0, p.theta, p.phi).unwrap();
        let u_curl: Vec3 = sol
            .iter()
            .map(|w| eigenfield_curl(&w.mode, &bp).unwrap() * w.weight)
            .fold(Vec3::default(), |a, b| a + b);
        let nu = p.normal();
        let lhs = nu.cross(&u_curl);
        let a2 = steklov_core::harmonics::vector_a(Tau::Two, &n, &p).unwrap().to_cartesian(&p);
        assert!((lhs - a2).max_abs() <= 1e-8, "{lhs:?} vs {a2:?}");
    }
}

#[test]
fn modal_solution_of_eigen_trace_is_the_eigenfield() {
    let n = ModeIndex::odd(1, 2).unwrap();
    let m = SteklovMode::new(Family::Two, n, 3.0, 1.0).unwrap();
    let t = m.trace_coefficient().unwrap();
    let data = ModalBoundaryData::new().with(n, Tau::One, m.lambda() * t).unwrap();
    let sol = solve_boundary_modal(&data, 3.0, 1.0).unwrap();
    assert!((sol[0].weight - 1.0).abs() < 1e-14);
    assert!(solve_boundary_modal(&ModalBoundaryData::new(), 3.0, 1.0).unwrap().is_empty());
    assert!(ModalBoundaryData::new().with(n, Tau::Three, 1.0).is_err());
}

#[test]
fn zero_eigenvalue_is_reported() {
    let x = 2.743707269992269f64; // j_1 + x j_1' = 0
    let n = ModeIndex::even(0, 1).unwrap();
    let data = ModalBoundaryData::new().with(n, Tau::One, 1.0).unwrap();
    assert!(matches!(solve_boundary_modal(&data, x * x, 1.0), Err(Error::ZeroEigenvalue { l: 1 })));
}

#[test]
fn zero_in_spectrum_witnesses() {
    let z = 2.081575977818101f64;
    let theta = 1.7;
    let (hit, w) = zero_in_spectrum(theta * z * z, theta, 5).unwrap();
    assert!(hit && w.iter().any(|w| w.kind == WitnessKind::Neumann && w.l == 1), "{w:?}");
    assert!(lambda1(1, theta * z * z, theta).unwrap().abs() < 1e-9);
    let x = 2.743707269992269f64;
    let (hit, w) = zero_in_spectrum(x * x, 1.0, 5).unwrap();
    assert!(hit && w.iter().any(|w| w.kind == WitnessKind::Magnetic && w.l == 1), "{w:?}");
    assert!(lambda2(1, x * x).unwrap().abs() < 1e-9);
    let (hit, w) = zero_in_spectrum(1.0, 1.0, 20).unwrap();
    assert!(!hit && w.is_empty());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn forms_agree_off_resonance(l in 1usize..=10, k2 in -50.0f64..50.0) {
        prop_assume!(k2.abs() > 1e-3);
        if let (Ok(a), Ok(b)) = (lambda1(l, k2, 1.0), lambda1_theta1_alt(l, k2)) {
            // both denominators well away from zero
            prop_assume!(a.abs() < 1e6);
            prop_assert!(rel(b, a) <= 1e-10, "l={} k2={}: {} vs {}", l, k2, a, b);
        }
    }

    #[test]
    fn every_mode_satisfies_its_equations(
        family in prop_oneof![Just(Family::One), Just(Family::Two)],
        l in 1usize..=8,
        k2 in prop_oneof![Just(1.0), Just(-1.0), Just(10.0), Just(-10.0), Just(30.0), -40.0f64..40.0],
        theta in prop_oneof![Just(0.5), Just(1.0), Just(2.0), 0.3f64..3.0],
        r in 0.05f64..0.95,
        angles in (0.05f64..3.09, 0.0f64..std::f64::consts::TAU),
    ) {
        prop_assume!(k2.abs() > 0.1);
        let Ok(m) = SteklovMode::new(family, ModeIndex::even(0, l).unwrap(), k2, theta) else {
            return Ok(());
        };
        prop_assume!(m.lambda().abs() < 1e6);
        let p = SurfacePoint::new(angles.0, angles.1).unwrap();
        let bc = verify_steklov_bc(&m, &p).unwrap();
        prop_assert!(bc.value <= 1e-9 * bc.scale + 1e-12, "{:?}", bc);
        for res in residual_system(m.radial(), r).unwrap() {
            prop_assert!(res.within(1e-9), "{:?}", res);
        }
        if family == Family::Two {
            let bp = BallPoint::new(r, angles.0, angles.1).unwrap();
            prop_assert_eq!(divergence_field(&m, &bp).unwrap(), 0.0);
        }
    }
}
