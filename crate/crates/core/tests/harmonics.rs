use proptest::prelude::*;
use steklov_core::harmonics::*;

fn all_basis(l_max: usize) -> Vec<(ModeIndex, Tau)> {
    let mut out = Vec::new();
    for n in ModeIndex::enumerate(0, l_max) {
        for tau in Tau::ALL {
            if tau == Tau::Three || n.l() > 0 {
                out.push((n, tau));
            }
        }
    }
    out
}

#[test]
fn vector_harmonics_are_orthonormal() {
    let l_max = 6;
    let basis = all_basis(l_max);
    let rule = SurfaceRule::for_products(l_max);
    let values: Vec<Vec<LocalVec>> = rule
        .points()
        .iter()
        .map(|(p, _)| basis.iter().map(|(n, tau)| vector_a(*tau, n, p).unwrap()).collect())
        .collect();
    let mut worst: f64 = 0.0;
    for i in 0..basis.len() {
        for j in 0..=i {
            let g: f64 = rule.points().iter().zip(&values).map(|((_, w), v)| w * v[i].dot(&v[j])).sum();
            let expect = if i == j { 1.0 } else { 0.0 };
            worst = worst.max((g - expect).abs());
        }
    }
    assert!(worst <= 1e-10, "Gram defect {worst:e} over {} basis fields", basis.len());
}

#[test]
fn scalar_harmonics_have_parity_and_a3_is_radial() {
    let p = SurfacePoint::new(0.7, 1.3).unwrap();
    for n in ModeIndex::enumerate(0, 6) {
        let y = scalar_y(&n, &p);
        let ya = scalar_y(&n, &p.antipode());
        let sign = if n.l() % 2 == 0 { 1.0 } else { -1.0 };
        assert!((ya - sign * y).abs() <= 1e-13, "{n:?}");
        let a3 = vector_a(Tau::Three, &n, &p).unwrap();
        assert_eq!((a3.r, a3.theta, a3.phi), (y, 0.0, 0.0));
    }
}

#[test]
fn ball_extension_is_constant_along_rays() {
    let n = ModeIndex::odd(2, 3).unwrap();
    for tau in Tau::ALL {
        let a = vector_a_ball(tau, &n, &BallPoint::new(0.2, 1.0, 2.0).unwrap()).unwrap();
        let b = vector_a_ball(tau, &n, &BallPoint::new(0.9, 1.0, 2.0).unwrap()).unwrap();
        assert_eq!(a, b);
    }
}

#[test]
fn tangential_fields_need_l_at_least_one() {
    let n = ModeIndex::even(0, 0).unwrap();
    assert!(vector_a(Tau::One, &n, &SurfacePoint::new(1.0, 1.0).unwrap()).is_err());
    assert!(vector_a(Tau::Three, &n, &SurfacePoint::new(1.0, 1.0).unwrap()).is_ok());
}

fn profile(r: f64) -> [f64; 3] {
    // (1 + r^2) cos r
    let (s, c) = r.sin_cos();
    [(1.0 + r * r) * c, 2.0 * r * c - (1.0 + r * r) * s, 2.0 * c - 4.0 * r * s - (1.0 + r * r) * c]
}

fn observed_orders(errors: &[f64]) -> Vec<f64> {
    errors.windows(2).map(|w| (w[0] / w[1]).log2()).collect()
}

const STEPS: [f64; 3] = [0.04, 0.02, 0.01];

#[test]
fn vector_laplacian_formulas_converge_at_second_order() {
    let p = BallPoint::new(0.6, 1.1, 0.7).unwrap();
    for n in [ModeIndex::even(1, 2).unwrap(), ModeIndex::odd(2, 3).unwrap()] {
        for tau in Tau::ALL {
            let errors: Vec<f64> =
                STEPS.iter().map(|&h| check_vector_laplacian(tau, &n, &p, h, &profile).unwrap()).collect();
            for order in observed_orders(&errors) {
                assert!(order >= 1.9, "{tau:?} {n:?}: {errors:?}");
            }
        }
    }
}

#[test]
fn curl_formulas_converge_at_second_order() {
    let p = BallPoint::new(0.5, 2.0, 4.0).unwrap();
    let n = ModeIndex::even(2, 2).unwrap();
    for tau in Tau::ALL {
        let errors: Vec<f64> = STEPS.iter().map(|&h| check_curl(tau, &n, &p, h, &profile).unwrap()).collect();
        for order in observed_orders(&errors) {
            assert!(order >= 1.9, "{tau:?}: {errors:?}");
        }
    }
}

fn mixed(r: f64) -> ModalRadial {
    let f = profile(r);
    let g = [r * r, 2.0 * r, 2.0];
    let h = [r.exp(), r.exp(), r.exp()];
    ModalRadial { e: [h, f, g] }
}

#[test]
fn divergence_and_grad_div_converge_at_second_order() {
    let p = BallPoint::new(0.7, 0.4, 5.5).unwrap();
    let n = ModeIndex::odd(1, 3).unwrap();
    let div: Vec<f64> = STEPS.iter().map(|&h| check_divergence(&n, &p, h, &mixed).unwrap()).collect();
    let gd: Vec<f64> = STEPS.iter().map(|&h| check_grad_div(&n, &p, h, &mixed).unwrap()).collect();
    for order in observed_orders(&div).into_iter().chain(observed_orders(&gd)) {
        assert!(order >= 1.9, "div {div:?} grad div {gd:?}");
    }
}

#[test]
fn richardson_removes_the_leading_error() {
    let p = BallPoint::new(0.6, 1.0, 1.0).unwrap();
    let field = |x: Vec3| Vec3::new(x.x * x.x * x.y, x.z.sin(), x.x * x.y * x.z);
    let exact = Vec3::new(2.0 * p.to_cartesian().y, -p.to_cartesian().z.sin(), 0.0);
    let x = p.to_cartesian();
    let plain = (fd_vector_laplacian(&field, x, 0.05) - exact).max_abs();
    let extrapolated = (richardson(|h| fd_vector_laplacian(&field, x, h), 0.05) - exact).max_abs();
    assert!(extrapolated < 1e-2 * plain, "{plain} {extrapolated}");
}

#[test]
fn expansion_recovers_modal_coefficients() {
    let n = ModeIndex::even(1, 2).unwrap();
    let m = ModeIndex::odd(3, 4).unwrap();
    let field = |x: Vec3| {
        let a = modal_field(&n, &|r| [0.5 * r, 0.0, r * r], x);
        let b = modal_field(&m, &|r| [0.0, -2.0 * r, 0.0], x);
        a + b
    };
    let radii = [0.3, 0.8];
    let e = expand_field(&field, 5, &radii);
    for (i, &r) in radii.iter().enumerate() {
        assert!((e.coefficient(&n, Tau::One, i).unwrap() - 0.5 * r).abs() < 1e-12);
        assert!((e.coefficient(&n, Tau::Three, i).unwrap() - r * r).abs() < 1e-12);
        assert!((e.coefficient(&m, Tau::Two, i).unwrap() + 2.0 * r).abs() < 1e-12);
    }
    assert!(e.max_other(&[n, m]) < 1e-12);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn tangential_harmonics_are_orthogonal_to_the_normal(l in 1usize..=12, m_frac in 0.0f64..1.0, theta in 0.01f64..3.13, phi in 0.0f64..std::f64::consts::TAU) {
        let m = ((l as f64 + 1.0) * m_frac).floor() as usize;
        let m = m.min(l);
        let n = ModeIndex::even(m, l).unwrap();
        let p = SurfacePoint::new(theta, phi).unwrap();
        let h = vector_a_all(&n, &p);
        prop_assert_eq!(h.a[0].r, 0.0);
        prop_assert_eq!(h.a[1].r, 0.0);
        // A_1 = A_2 × ν pointwise, so they are orthogonal with equal length
        prop_assert!(h.a[0].dot(&h.a[1]).abs() <= 1e-12 * (1.0 + h.a[1].dot(&h.a[1])));
        prop_assert!((h.a[0].norm() - h.a[1].norm()).abs() <= 1e-12 * (1.0 + h.a[1].norm()));
    }
}
