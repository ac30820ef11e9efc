use steklov_core::classical_steklov::ball_steklov_spectrum;
use steklov_core::dirichlet_exclusion::{find_roots, RootKind};
use steklov_core::steklov_ball::Family;
use steklov_core::sweep::{evaluate, evaluate_cell, CellValue, SweepCell, SweepSpec};

use crate::args::{ClassicalArgs, EigsArgs, FamilyArg, KindArg, SweepArgs, ZerosArgs};
use crate::output::{Cell, Table};
use crate::{CliError, ExitCode};

pub const EIGEN_HEADER: &[&str] = &["family", "l", "theta", "k2", "lambda", "status"];
pub const ZEROS_HEADER: &[&str] = &["kind", "l", "theta", "index", "root", "root_squared", "residual"];
pub const CLASSICAL_HEADER: &[&str] = &["index", "j", "eigenvalue", "multiplicity"];

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::One => Family::One,
            FamilyArg::Two => Family::Two,
        }
    }
}

impl From<KindArg> for RootKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Bessel => RootKind::Bessel,
            KindArg::Neumann => RootKind::Neumann,
            KindArg::Magnetic => RootKind::Magnetic,
            KindArg::Family1 => RootKind::Family1,
        }
    }
}

fn check_theta(theta: f64) -> Result<(), CliError> {
    if theta > 0.0 && theta.is_finite() {
        Ok(())
    } else {
        Err(CliError::usage(format!("--theta must be positive and finite, got {theta}")))
    }
}

fn check_k2(k2: f64) -> Result<(), CliError> {
    if !k2.is_finite() {
        return Err(CliError::usage(format!("--k2 must be finite, got {k2}")));
    }
    if k2 == 0.0 {
        return Err(CliError::new(ExitCode::ExcludedParameter, "k^2 = 0 is excluded: both eigenvalue families require k != 0"));
    }
    Ok(())
}

fn eigen_row(family: Family, theta: f64, cell: &SweepCell) -> Vec<Cell> {
    let (lambda, status) = match cell.value {
        CellValue::Value(v) => (Cell::Real(v), "OK"),
        CellValue::Resonance => (Cell::text("RES"), "RES"),
    };
    vec![
        Cell::Int(family.number().into()),
        Cell::Int(cell.l as u128),
        Cell::Real(theta),
        Cell::Real(cell.k2),
        lambda,
        Cell::text(status),
    ]
}

pub fn eigs(args: &EigsArgs) -> Result<Table, CliError> {
    check_theta(args.theta)?;
    check_k2(args.k2)?;
    let families = match args.family {
        Some(f) => vec![f.into()],
        None => vec![Family::One, Family::Two],
    };
    let mut table = Table::new("eigs", EIGEN_HEADER);
    for family in families {
        for l in 1..=args.l_max as usize {
            let value = evaluate_cell(family, l, args.k2, args.theta)?;
            table.push(eigen_row(family, args.theta, &SweepCell { l, k2: args.k2, value }));
        }
    }
    Ok(table)
}

pub fn sweep_spec(args: &SweepArgs) -> Result<SweepSpec, CliError> {
    check_theta(args.theta)?;
    if args.l.start == 0 {
        return Err(CliError::usage("--l must start at 1 or above"));
    }
    if args.k2.is_single() {
        check_k2(args.k2.start)?;
    }
    if !(args.k2.start.is_finite() && args.k2.end.is_finite()) {
        return Err(CliError::usage("--k2 bounds must be finite"));
    }
    if args.samples == 0 {
        return Err(CliError::usage("--samples must be positive"));
    }
    let samples = if args.k2.is_single() { 1 } else { args.samples };
    Ok(SweepSpec {
        family: args.family.into(),
        l_min: args.l.start as usize,
        l_max: args.l.end as usize,
        k2_min: args.k2.start,
        k2_max: args.k2.end,
        samples,
        theta: args.theta,
    })
}

/// Grid points that land exactly on `k^2 = 0` are reported as `RES`.
pub fn sweep(args: &SweepArgs) -> Result<Table, CliError> {
    let spec = sweep_spec(args)?;
    let grid = evaluate(&spec)?;
    let mut table = Table::new("sweep", EIGEN_HEADER);
    for cell in &grid.cells {
        table.push(eigen_row(spec.family, spec.theta, cell));
    }
    Ok(table)
}

pub fn zeros(args: &ZerosArgs) -> Result<Table, CliError> {
    check_theta(args.theta)?;
    if args.count == 0 {
        return Err(CliError::usage("--count must be positive"));
    }
    let kind: RootKind = args.kind.into();
    let mut table = Table::new("zeros", ZEROS_HEADER);
    for l in args.l.start..=args.l.end {
        let list = find_roots(kind, l as usize, args.theta, args.count)?;
        for (i, (&x, &res)) in list.roots.iter().zip(&list.residuals).enumerate() {
            table.push(vec![
                Cell::text(kind.tag()),
                Cell::Int(l.into()),
                Cell::Real(list.theta),
                Cell::Int(i as u128 + 1),
                Cell::Real(x),
                Cell::Real(x * x),
                Cell::Real(res),
            ]);
        }
    }
    Ok(table)
}

/// One row per eigenvalue counted with multiplicity, `index` from 1.
pub fn classical(args: &ClassicalArgs) -> Result<Table, CliError> {
    let spectrum = ball_steklov_spectrum(args.dim, args.radius, args.count)?;
    let mut table = Table::new("classical", CLASSICAL_HEADER);
    let mut index: usize = 0;
    'outer: for e in &spectrum.entries {
        for _ in 0..e.multiplicity {
            if index == args.count {
                break 'outer;
            }
            index += 1;
            table.push(vec![
                Cell::Int(index as u128),
                Cell::Int(e.j.into()),
                Cell::Real(e.eigenvalue),
                Cell::Int(e.multiplicity),
            ]);
        }
    }
    Ok(table)
}
