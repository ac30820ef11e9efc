//! Zeros of the functions whose vanishing makes the Steklov formulas singular
//! or zero: `j_l`, `j_l'`, `x -> j_l(x) + x j_l'(x)` and the family-1
//! denominator. Squares of the Bessel and family-1 roots are Dirichlet
//! eigenvalues of the penalized curl-curl operator on the ball.
//!
//! Roots are bracketed by a fixed-step scan and refined by bisection. Besides
//! sign changes the scan watches for an interior extremum of `|f|` whose sign
//! flips: the family-1 denominator at `θ = 1` is `k^2 j_{l-1}(k) j_{l+1}(k)`,
//! whose zeros pair up and draw closer than any fixed step as `k` grows.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::jet::Jet;
use crate::{Error, Result};

pub const DEFAULT_STEP: f64 = PI / 8.0;
/// Adjacent roots closer than this are reported once.
pub const MIN_SEPARATION: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RootKind {
    /// Zeros of `j_l`.
    Bessel,
    /// Zeros of `j_l'`.
    Neumann,
    /// Zeros of `j_l(x) + x j_l'(x)`.
    Magnetic,
    /// Zeros in `k > 0` of the `λ^(1)` denominator.
    Family1,
}

impl RootKind {
    pub fn tag(self) -> &'static str {
        match self {
            RootKind::Bessel => "bessel",
            RootKind::Neumann => "neumann",
            RootKind::Magnetic => "magnetic",
            RootKind::Family1 => "family1",
        }
    }

    pub fn from_tag(tag: &str) -> Result<Self> {
        match tag {
            "bessel" => Ok(RootKind::Bessel),
            "neumann" => Ok(RootKind::Neumann),
            "magnetic" => Ok(RootKind::Magnetic),
            "family1" => Ok(RootKind::Family1),
            _ => Err(Error::InvalidMode(format!("unknown root kind {tag:?}"))),
        }
    }

    fn min_l(self) -> usize {
        match self {
            RootKind::Bessel => 0,
            _ => 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RootList {
    pub kind: RootKind,
    pub l: usize,
    /// Penalty parameter; only meaningful for [`RootKind::Family1`].
    pub theta: f64,
    pub roots: Vec<f64>,
    /// `|f(root)|` for each root.
    pub residuals: Vec<f64>,
}

impl RootList {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn squares(&self) -> impl Iterator<Item = f64> + '_ {
        self.roots.iter().map(|x| x * x)
    }
}

/// `(f(x), f'(x))` for the function behind `kind`.
pub fn root_function(kind: RootKind, l: usize, theta: f64, x: f64) -> Result<(f64, f64)> {
    let one = Complex64::new(1.0, 0.0);
    let j = Jet::bessel(l, one, x)?;
    let pair = |jet: Jet| (jet.d(0).re, jet.d(1).re);
    Ok(match kind {
        RootKind::Bessel => pair(j),
        RootKind::Neumann => pair(j.derivative()),
        RootKind::Magnetic => pair(j + Jet::identity(x) * j.derivative()),
        RootKind::Family1 => pair(family1_denominator(l, theta, x)?),
    })
}

/// `D(k) = j(q) j(k) L - j'(q) j'(k) k^2/sqrt(θ) - j'(q) j(k) q`, `q = k/sqrt(θ)`,
/// as a jet in `k`.
fn family1_denominator(l: usize, theta: f64, k: f64) -> Result<Jet> {
    let sq = theta.sqrt();
    let jk = Jet::bessel(l, Complex64::new(1.0, 0.0), k)?;
    let jq = Jet::bessel(l, Complex64::new(1.0 / sq, 0.0), k)?;
    // d/dk j(k/sqrt θ) = j'(q)/sqrt θ
    let djq = jq.derivative() * sq;
    let kk = Jet::identity(k);
    let big_l = (l * (l + 1)) as f64;
    Ok(jq * jk * big_l - djq * jk.derivative() * kk * kk * (1.0 / sq) - djq * jk * kk * (1.0 / sq))
}

fn check_kind(kind: RootKind, l: usize, theta: f64) -> Result<()> {
    if l < kind.min_l() {
        return Err(Error::InvalidMode(format!("{} roots need l >= {}", kind.tag(), kind.min_l())));
    }
    if !(theta > 0.0 && theta.is_finite()) {
        return Err(Error::Domain(theta));
    }
    Ok(())
}

/// Scan step used for `kind`: `π/8`, shrunk by `sqrt(θ)` for family 1 when
/// `θ < 1` because `j_l(k/sqrt θ)` then oscillates faster.
pub fn default_step(kind: RootKind, theta: f64) -> f64 {
    match kind {
        RootKind::Family1 => DEFAULT_STEP * theta.sqrt().min(1.0),
        _ => DEFAULT_STEP,
    }
}

/// Upper end of the scan window for `count` roots.
pub fn scan_window(count: usize, l: usize) -> f64 {
    count as f64 * PI + l as f64 * PI / 2.0 + 20.0
}

fn eval(kind: RootKind, l: usize, theta: f64, x: f64) -> Option<(f64, f64)> {
    root_function(kind, l, theta, x).ok().filter(|(f, d)| f.is_finite() && d.is_finite())
}

/// Bisection on a sign change of `g` down to adjacent doubles.
fn bisect(g: &dyn Fn(f64) -> Option<f64>, mut a: f64, mut b: f64, mut ga: f64) -> f64 {
    for _ in 0..200 {
        let m = 0.5 * (a + b);
        if m <= a || m >= b {
            break;
        }
        let Some(gm) = g(m) else { break };
        if gm == 0.0 {
            return m;
        }
        if (gm > 0.0) == (ga > 0.0) {
            a = m;
            ga = gm;
        } else {
            b = m;
        }
    }
    0.5 * (a + b)
}

/// Roots of `kind` in `(0, upper]`, at most `limit`.
fn scan(kind: RootKind, l: usize, theta: f64, step: f64, upper: f64, limit: usize) -> Vec<f64> {
    let f = |x: f64| eval(kind, l, theta, x).map(|v| v.0);
    let df = |x: f64| eval(kind, l, theta, x).map(|v| v.1);
    let mut roots: Vec<f64> = Vec::new();
    let mut a = step / 8.0;
    let mut va = eval(kind, l, theta, a);
    while a < upper && roots.len() < limit {
        let b = (a + step).min(upper);
        let vb = eval(kind, l, theta, b);
        if let (Some((fa, da)), Some((fb, db))) = (va, vb) {
            // exact zeros at scan nodes only happen through underflow; skip them
            if fa != 0.0 && fb != 0.0 {
                if (fa > 0.0) != (fb > 0.0) {
                    roots.push(bisect(&f, a, b, fa));
                } else if (da > 0.0) != (db > 0.0) && (fa * da < 0.0) {
                    // |f| decreases at a and increases at b: locate the extremum
                    let m = bisect(&df, a, b, da);
                    if let Some(fm) = f(m) {
                        if fm != 0.0 && (fm > 0.0) != (fa > 0.0) {
                            roots.push(bisect(&f, a, m, fa));
                            roots.push(bisect(&f, m, b, fm));
                        }
                    }
                }
            }
        }
        a = b;
        va = vb;
    }
    roots.dedup_by(|x, y| (*x - *y).abs() <= MIN_SEPARATION);
    roots.truncate(limit);
    roots
}

fn finish(kind: RootKind, l: usize, theta: f64, roots: Vec<f64>) -> RootList {
    let mut kept = Vec::with_capacity(roots.len());
    let mut residuals = Vec::with_capacity(roots.len());
    for x in roots {
        if kind == RootKind::Family1 && bessel_vanishes(l, x) {
            // the eigenfield combination is undefined where j_l(k) = 0
            continue;
        }
        kept.push(x);
        residuals.push(eval(kind, l, theta, x).map_or(f64::NAN, |v| v.0.abs()));
    }
    RootList { kind, l, theta, roots: kept, residuals }
}

fn bessel_vanishes(l: usize, x: f64) -> bool {
    match root_function(RootKind::Bessel, l, 1.0, x) {
        Ok((j, dj)) => j.abs() <= 1e-10 * (x * dj).abs().max(1.0),
        Err(_) => false,
    }
}

/// First `count` positive roots of `kind`, scanning with `step`.
pub fn find_roots_with_step(kind: RootKind, l: usize, theta: f64, count: usize, step: f64) -> Result<RootList> {
    check_kind(kind, l, theta)?;
    let window = scan_window(count, l);
    let list = finish(kind, l, theta, scan(kind, l, theta, step, window, count + 2));
    if list.len() < count {
        return Err(Error::ScanExhausted { window, found: list.len(), requested: count });
    }
    let RootList { roots, residuals, .. } = list;
    Ok(RootList {
        kind,
        l,
        theta,
        roots: roots[..count].to_vec(),
        residuals: residuals[..count].to_vec(),
    })
}

pub fn find_roots(kind: RootKind, l: usize, theta: f64, count: usize) -> Result<RootList> {
    find_roots_with_step(kind, l, theta, count, default_step(kind, theta))
}

/// Every positive root of `kind` up to `bound`.
pub fn roots_up_to(kind: RootKind, l: usize, theta: f64, bound: f64) -> Result<RootList> {
    check_kind(kind, l, theta)?;
    Ok(finish(kind, l, theta, scan(kind, l, theta, default_step(kind, theta), bound, usize::MAX)))
}

pub fn bessel_zeros(l: usize, count: usize) -> Result<RootList> {
    find_roots(RootKind::Bessel, l, 1.0, count)
}

pub fn neumann_zeros(l: usize, count: usize) -> Result<RootList> {
    find_roots(RootKind::Neumann, l, 1.0, count)
}

pub fn magnetic_zeros(l: usize, count: usize) -> Result<RootList> {
    find_roots(RootKind::Magnetic, l, 1.0, count)
}

pub fn family1_resonances(l: usize, theta: f64, count: usize) -> Result<RootList> {
    find_roots(RootKind::Family1, l, theta, count)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ExclusionReport {
    /// No resonance square within [`CLEARANCE`] of `k^2`.
    pub clear: bool,
    /// Resonance square nearest to `k^2` (`NaN` if none was found).
    pub nearest_resonance: f64,
    /// Family whose denominator vanishes there (1 or 2).
    pub family: u8,
    pub l: usize,
}

pub const CLEARANCE: f64 = 1e-6;

/// Distance from `k^2` to the resonance squares of both families, `l` from 1
/// to `l_max`. Resonances are positive, so only roots up to
/// `sqrt(max(k^2, 0)) + 2π` can be nearest.
pub fn exclusion_check(k2: f64, theta: f64, l_max: usize) -> Result<ExclusionReport> {
    if k2 == 0.0 || !k2.is_finite() {
        return Err(Error::InvalidMode(format!("k2 must be finite and non-zero, got {k2}")));
    }
    let bound = k2.max(0.0).sqrt() + 2.0 * PI;
    let mut best = ExclusionReport { clear: true, nearest_resonance: f64::NAN, family: 0, l: 0 };
    let mut best_distance = f64::INFINITY;
    for l in 1..=l_max {
        for (family, kind) in [(1u8, RootKind::Family1), (2u8, RootKind::Bessel)] {
            for s in roots_up_to(kind, l, theta, bound)?.squares() {
                let d = (s - k2).abs();
                if d < best_distance {
                    best_distance = d;
                    best = ExclusionReport { clear: true, nearest_resonance: s, family, l };
                }
            }
        }
    }
    best.clear = best_distance > CLEARANCE;
    Ok(best)
}
