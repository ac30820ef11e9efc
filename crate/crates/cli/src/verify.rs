//! Invariant suites behind `steklov-ball verify`.

use serde::Serialize;
use steklov_core::classical_steklov::{multiplicity, weyl_exponent_fit};
use steklov_core::dirichlet_exclusion::{bessel_zeros, family1_resonances, magnetic_zeros, neumann_zeros};
use steklov_core::harmonics::{
    check_curl, check_divergence, check_vector_laplacian, vector_a_all, BallPoint, ModeIndex, Parity,
    SurfacePoint, SurfaceRule, Tau,
};
use steklov_core::specfun::{gauss_legendre, sph_bessel_j_array, sph_bessel_j_with_deriv};
use steklov_core::steklov_ball::{
    default_orders, lambda1, lambda1_theta1_alt, lambda2, radial_profiles, residual_div_boundary,
    residual_div_helmholtz, residual_fourth_order_pair, residual_system, verify_steklov_bc, verify_weak_identity,
    Family, RadialKind, Residual, SteklovMode,
};
use steklov_core::sweep::{evaluate, evaluate_sequential, CellValue, SweepSpec};
use steklov_core::{Complex64, Error};

use crate::args::{Suite, VerifyArgs};

const EIGEN_ORACLE: &str = include_str!("../../core/tests/data/eigen_oracle.csv");
const BESSEL_ORACLE: &str = include_str!("../../core/tests/data/bessel_oracle.csv");

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Check {
    pub suite: &'static str,
    pub name: String,
    pub residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
    pub passed: bool,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Specfun,
        Suite::Harmonics,
        Suite::Eigenvalues,
        Suite::Residuals,
        Suite::WeakIdentity,
        Suite::Resonances,
        Suite::Classical,
        Suite::Sweep,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Specfun => "specfun",
            Suite::Harmonics => "harmonics",
            Suite::Eigenvalues => "eigenvalues",
            Suite::Residuals => "residuals",
            Suite::WeakIdentity => "weak-identity",
            Suite::Resonances => "resonances",
            Suite::Classical => "classical",
            Suite::Sweep => "sweep",
        }
    }
}

struct Ctx {
    suite: &'static str,
    l_max: usize,
    tol: f64,
    perturb: f64,
    checks: Vec<Check>,
}

impl Ctx {
    fn record(&mut self, name: impl Into<String>, residual: f64, tolerance: f64) {
        let tolerance = tolerance * self.tol;
        // NaN residuals fail
        let pass = residual <= tolerance;
        let residual = if residual.is_finite() { residual } else { f64::MAX };
        self.checks.push(Check { suite: self.suite, name: name.into(), residual, tolerance, pass });
    }

    fn record_result(&mut self, name: impl Into<String>, residual: Result<f64, Error>, tolerance: f64) {
        let name = name.into();
        match residual {
            Ok(r) => self.record(name, r, tolerance),
            Err(e) => self.record(format!("{name} ({e})"), f64::INFINITY, tolerance),
        }
    }

    fn lambda(&self, lambda: f64) -> f64 {
        lambda * (1.0 + self.perturb)
    }

    fn mode(&self, family: Family, n: ModeIndex, k2: f64, theta: f64) -> Result<SteklovMode, Error> {
        let m = SteklovMode::new(family, n, k2, theta)?;
        Ok(m.with_lambda(self.lambda(m.lambda())))
    }
}

fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}

fn scaled(r: Residual) -> f64 {
    r.relative()
}

fn modes_up_to(l_max: usize) -> Vec<ModeIndex> {
    (1..=l_max).map(|l| ModeIndex::new(if l % 2 == 0 { Parity::Odd } else { Parity::Even }, l.min(1), l).unwrap()).collect()
}

pub fn run(args: &VerifyArgs) -> Report {
    let suites: Vec<Suite> = if args.suite.is_empty() { Suite::ALL.to_vec() } else { args.suite.clone() };
    let mut checks = Vec::new();
    for suite in Suite::ALL.into_iter().filter(|s| suites.contains(s)) {
        let mut ctx = Ctx {
            suite: suite.name(),
            l_max: args.l_max as usize,
            tol: args.tol,
            perturb: args.perturb_lambda.unwrap_or(0.0),
            checks: Vec::new(),
        };
        match suite {
            Suite::Specfun => specfun(&mut ctx),
            Suite::Harmonics => harmonics(&mut ctx),
            Suite::Eigenvalues => eigenvalues(&mut ctx),
            Suite::Residuals => residuals(&mut ctx),
            Suite::WeakIdentity => weak_identity(&mut ctx),
            Suite::Resonances => resonances(&mut ctx),
            Suite::Classical => classical(&mut ctx),
            Suite::Sweep => sweep(&mut ctx),
        }
        checks.extend(ctx.checks);
    }
    let passed = checks.iter().all(|c| c.pass);
    Report { checks, passed }
}

fn specfun(ctx: &mut Ctx) {
    let mut worst: f64 = 0.0;
    for line in BESSEL_ORACLE.lines().skip(1) {
        let v: Vec<f64> = line.split(',').map(|t| t.parse().unwrap()).collect();
        let l = v[0] as usize;
        let z = Complex64::new(v[1], v[2]);
        let want = Complex64::new(v[3], v[4]);
        match sph_bessel_j_with_deriv(l, z) {
            Ok((j, _)) => worst = worst.max((j - want).norm() / want.norm().max(1e-300)),
            Err(_) => worst = f64::INFINITY,
        }
    }
    ctx.record("bessel j_l against extended-precision oracle", worst, 1e-12);

    let mut worst: f64 = 0.0;
    for z in [0.3, 2.0, 17.5] {
        let z = Complex64::new(z, 0.4);
        let j = sph_bessel_j_array(30, z).unwrap();
        for l in 1..30 {
            let lhs = j[l - 1] + j[l + 1];
            let rhs = j[l] * ((2 * l + 1) as f64) / z;
            worst = worst.max((lhs - rhs).norm() / (j[l - 1].norm() + j[l + 1].norm()));
        }
    }
    ctx.record("three-term recurrence", worst, 1e-13);

    let mut worst: f64 = 0.0;
    for n in [4usize, 10, 24] {
        let rule = gauss_legendre(n);
        for p in 0..2 * n {
            let exact = if p % 2 == 0 { 2.0 / (p as f64 + 1.0) } else { 0.0 };
            worst = worst.max((rule.integrate(|x| x.powi(p as i32)) - exact).abs());
        }
    }
    ctx.record("gauss-legendre exactness to degree 2n-1", worst, 1e-13);
}

fn harmonics(ctx: &mut Ctx) {
    let l_max = ctx.l_max.min(6);
    let rule = SurfaceRule::for_products(l_max);
    let basis: Vec<(ModeIndex, Tau)> = ModeIndex::enumerate(0, l_max)
        .into_iter()
        .flat_map(|n| Tau::ALL.into_iter().filter(move |&t| t == Tau::Three || n.l() > 0).map(move |t| (n, t)))
        .collect();
    let values: Vec<Vec<_>> =
        rule.points().iter().map(|(p, _)| basis.iter().map(|(n, t)| vector_a_all(n, p).get(*t)).collect()).collect();
    let mut worst: f64 = 0.0;
    for i in 0..basis.len() {
        for j in 0..=i {
            let g: f64 = rule.points().iter().zip(&values).map(|((_, w), v)| w * v[i].dot(&v[j])).sum();
            worst = worst.max((g - if i == j { 1.0 } else { 0.0 }).abs());
        }
    }
    ctx.record(format!("gram identity l <= {l_max}"), worst, 1e-10);

    let p = BallPoint::new(0.6, 1.1, 0.7).unwrap();
    let n = ModeIndex::even(1, 2).unwrap();
    let f = |r: f64| {
        let (s, c) = r.sin_cos();
        [(1.0 + r * r) * c, 2.0 * r * c - (1.0 + r * r) * s, 2.0 * c - 4.0 * r * s - (1.0 + r * r) * c]
    };
    let steps = [0.04, 0.02, 0.01];
    let order = |errors: Vec<Result<f64, Error>>| -> f64 {
        let e: Vec<f64> = errors.into_iter().map(|e| e.unwrap_or(f64::NAN)).collect();
        e.windows(2).map(|w| (w[0] / w[1]).log2()).fold(f64::INFINITY, f64::min)
    };
    for tau in Tau::ALL {
        let lap = order(steps.iter().map(|&h| check_vector_laplacian(tau, &n, &p, h, &f)).collect());
        ctx.record(format!("vector laplacian of f A_{}n: 2 - observed order", tau.index() + 1), (2.0 - lap).max(0.0), 0.1);
        let curl = order(steps.iter().map(|&h| check_curl(tau, &n, &p, h, &f)).collect());
        ctx.record(format!("curl of f A_{}n: 2 - observed order", tau.index() + 1), (2.0 - curl).max(0.0), 0.1);
    }
    if let Ok(m) = SteklovMode::new(Family::One, n, -3.0, 2.0) {
        let radial = |r: f64| m.radial().values(r).unwrap_or_default();
        let div = order(steps.iter().map(|&h| check_divergence(&n, &p, h, &radial)).collect());
        ctx.record("divergence of a family-1 field: 2 - observed order", (2.0 - div).max(0.0), 0.1);
    }
}

fn eigenvalues(ctx: &mut Ctx) {
    let mut worst: f64 = 0.0;
    for line in EIGEN_ORACLE.lines().skip(1) {
        let v: Vec<&str> = line.split(',').collect();
        let family: u8 = v[0].parse().unwrap();
        let l: usize = v[1].parse().unwrap();
        let k2: f64 = v[2].parse().unwrap();
        let theta: f64 = v[3].parse().unwrap();
        let want: f64 = v[4].parse().unwrap();
        let got = match family {
            1 => lambda1(l, k2, theta),
            _ => lambda2(l, k2),
        };
        worst = worst.max(got.map_or(f64::INFINITY, |g| rel(ctx.lambda(g), want)));
    }
    ctx.record("lambda against extended-precision oracle", worst, 1e-10);

    let mut worst: f64 = 0.0;
    for l in 1..=ctx.l_max {
        for i in 0..=40 {
            let k2 = -50.0 + 2.5 * i as f64 + 0.123;
            if let (Ok(a), Ok(b)) = (lambda1(l, k2, 1.0), lambda1_theta1_alt(l, k2)) {
                worst = worst.max(rel(ctx.lambda(a), b));
            }
        }
    }
    ctx.record("lambda1 forms agree at theta = 1", worst, 1e-10);

    for (name, value) in [("lambda1", lambda1(40, 1.0, 1.0)), ("lambda2", lambda2(40, 1.0))] {
        ctx.record_result(format!("{name}(40, 1) / -40 near 1"), value.map(|v| (ctx.lambda(v) / -40.0 - 1.0).abs()), 0.1);
    }
}

const K2_SAMPLES: [f64; 5] = [1.0, -1.0, 10.0, -10.0, 30.0];
const THETAS: [f64; 3] = [0.5, 1.0, 2.0];

fn residuals(ctx: &mut Ctx) {
    let points = [
        SurfacePoint::new(0.4, 0.3).unwrap(),
        SurfacePoint::new(1.3, 2.2).unwrap(),
        SurfacePoint::new(2.6, 5.0).unwrap(),
    ];
    let mut bc: f64 = 0.0;
    let mut system: f64 = 0.0;
    let mut fourth: f64 = 0.0;
    let mut div: f64 = 0.0;
    let mut div_bc: f64 = 0.0;
    let mut failures = Vec::new();
    for n in modes_up_to(ctx.l_max) {
        for k2 in K2_SAMPLES {
            for theta in THETAS {
                for family in [Family::One, Family::Two] {
                    let m = match ctx.mode(family, n, k2, theta) {
                        Ok(m) => m,
                        Err(Error::DirichletResonance { .. }) => continue,
                        Err(e) => {
                            failures.push(format!("{family:?} l={} k2={k2} theta={theta}: {e}", n.l()));
                            continue;
                        }
                    };
                    let mut run = || -> Result<(), Error> {
                        for p in &points {
                            bc = bc.max(scaled(verify_steklov_bc(&m, p)?));
                        }
                        for r in [0.1, 0.5, 0.95] {
                            for res in residual_system(m.radial(), r)? {
                                system = system.max(scaled(res));
                            }
                            if family == Family::One {
                                if theta == 1.0 {
                                    fourth = fourth.max(scaled(residual_fourth_order_pair(m.radial(), r)?));
                                }
                                let p = BallPoint::new(r, 1.0, 2.0)?;
                                div = div.max(scaled(residual_div_helmholtz(&m, &p)?));
                            }
                        }
                        if family == Family::One {
                            div_bc = div_bc.max(scaled(residual_div_boundary(&m)?));
                        }
                        Ok(())
                    };
                    if let Err(e) = run() {
                        failures.push(format!("{family:?} l={} k2={k2} theta={theta}: {e}", n.l()));
                    }
                }
            }
        }
    }
    ctx.record("steklov boundary condition", bc, 1e-9);
    ctx.record("radial ODE system", system, 1e-9);
    ctx.record("fourth-order equation at theta = 1", fourth, 1e-8);
    ctx.record("divergence solves the scaled helmholtz equation", div, 1e-9);
    ctx.record("divergence boundary condition", div_bc, 1e-9);
    for f in failures {
        ctx.record(f, f64::INFINITY, 0.0);
    }
}

fn weak_identity(ctx: &mut Ctx) {
    let cases = [(Family::Two, 1.0, 1.0), (Family::One, -3.0, 2.0), (Family::One, 10.0, 0.5), (Family::Two, -10.0, 1.0)];
    for n in modes_up_to(ctx.l_max) {
        for (family, k2, theta) in cases {
            let name = format!("weak identity {family:?} l={} k2={k2} theta={theta}", n.l());
            let err = ctx.mode(family, n, k2, theta).and_then(|m| {
                let (ro, so) = default_orders(&m);
                verify_weak_identity(&m, ro, so)
            });
            ctx.record_result(name, err, 1e-8);
        }
    }
}

fn resonances(ctx: &mut Ctx) {
    let l_max = ctx.l_max.min(5);
    let mut f_trace: f64 = 0.0;
    let mut pole: f64 = 0.0;
    let mut lam2: f64 = 0.0;
    let mut neumann: f64 = 0.0;
    let mut magnetic: f64 = 0.0;
    for l in 1..=l_max {
        if let Ok(list) = family1_resonances(l, 1.0, 3) {
            for &k in &list.roots {
                match radial_profiles(RadialKind::F, l, k * k, 1.0).and_then(|p| p.values(1.0)) {
                    Ok(v) => {
                        let scale = v.e[1][1].abs().max(v.e[2][1].abs());
                        f_trace = f_trace.max(v.e[1][0].abs() / scale);
                    }
                    Err(_) => f_trace = f64::INFINITY,
                }
                if !matches!(lambda1(l, k * k, 1.0), Err(Error::DirichletResonance { .. })) {
                    pole = 1.0;
                }
            }
        } else {
            f_trace = f64::INFINITY;
        }
        if let Ok(list) = bessel_zeros(l, 3) {
            for &x in &list.roots {
                if !matches!(lambda2(l, x * x), Err(Error::DirichletResonance { .. })) {
                    lam2 = 1.0;
                }
            }
        }
        for theta in THETAS {
            for &z in &neumann_zeros(l, 3).map(|r| r.roots).unwrap_or_default() {
                neumann = neumann.max(lambda1(l, theta * z * z, theta).map_or(f64::INFINITY, |v| ctx.lambda(v).abs()));
            }
        }
        for &x in &magnetic_zeros(l, 3).map(|r| r.roots).unwrap_or_default() {
            magnetic = magnetic.max(lambda2(l, x * x).map_or(f64::INFINITY, |v| ctx.lambda(v).abs()));
        }
    }
    ctx.record("F^2(1) vanishes at family-1 resonances", f_trace, 1e-9);
    ctx.record("lambda1 flags family-1 resonances (0 = all flagged)", pole, 0.0);
    ctx.record("lambda2 flags bessel zeros (0 = all flagged)", lam2, 0.0);
    ctx.record("lambda1 vanishes at neumann witnesses", neumann, 1e-9);
    ctx.record("lambda2 vanishes at magnetic witnesses", magnetic, 1e-9);
}

fn classical(ctx: &mut Ctx) {
    fn binom(n: u128, k: u128) -> u128 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }
    let mut mismatches = 0u32;
    for n in 2..=6usize {
        for j in 0..=50u64 {
            // homogeneous harmonic polynomials of degree j in n variables
            let total = binom(j as u128 + n as u128 - 1, n as u128 - 1);
            let lower = if j >= 2 { binom(j as u128 + n as u128 - 3, n as u128 - 1) } else { 0 };
            if multiplicity(n, j) != total - lower {
                mismatches += 1;
            }
        }
    }
    ctx.record("multiplicity equals harmonic polynomial count (mismatches)", mismatches as f64, 0.0);
    ctx.record_result("weyl exponent fit n = 3", weyl_exponent_fit(3, 10_000).map(|e| (e - 0.5).abs()), 0.02);
}

fn sweep(ctx: &mut Ctx) {
    let spec = SweepSpec {
        family: Family::One,
        l_min: 1,
        l_max: ctx.l_max,
        k2_min: -50.0,
        k2_max: 50.0,
        samples: 201,
        theta: 1.0,
    };
    match (evaluate(&spec), evaluate_sequential(&spec)) {
        (Ok(a), Ok(b)) => {
            let differ = a.cells.iter().zip(&b.cells).filter(|(x, y)| x != y).count();
            ctx.record("schedule independence (differing cells)", differ as f64, 0.0);
            let bad = a
                .cells
                .iter()
                .filter(|c| matches!(c.value, CellValue::Value(v) if !v.is_finite()))
                .count();
            ctx.record("cells finite or RES (offending cells)", bad as f64, 0.0);
        }
        (Err(e), _) | (_, Err(e)) => ctx.record(format!("sweep failed: {e}"), f64::INFINITY, 0.0),
    }
}

pub const REPORT_HEADER: &[&str] = &["suite", "name", "residual", "tolerance", "pass"];

pub fn write_report(report: &Report, format: crate::args::Format, w: &mut dyn std::io::Write) -> anyhow::Result<()> {
    use crate::output::{Cell, Table};
    match format {
        crate::args::Format::Json => {
            serde_json::to_writer_pretty(&mut *w, report)?;
            writeln!(w)?;
            Ok(())
        }
        crate::args::Format::Csv => {
            let mut t = Table::new("verify", REPORT_HEADER);
            for c in &report.checks {
                t.push(vec![
                    Cell::text(c.suite),
                    Cell::text(c.name.clone()),
                    Cell::Real(c.residual),
                    Cell::Real(c.tolerance),
                    Cell::Bool(c.pass),
                ]);
            }
            t.write_csv(w)
        }
    }
}
