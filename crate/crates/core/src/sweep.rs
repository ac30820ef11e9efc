//! Eigenvalue sweeps over `(l, k^2)` grids.
//!
//! Each cell is a pure function of its indices, so the parallel map (feature
//! `parallel`) and the sequential loop produce bitwise identical grids. Cells
//! are stored in `(l, k^2 index)` order whatever the schedule.

use serde::{Deserialize, Serialize};

use crate::steklov_ball::{lambda1, lambda2, Family};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepSpec {
    pub family: Family,
    pub l_min: usize,
    pub l_max: usize,
    pub k2_min: f64,
    pub k2_max: f64,
    pub samples: usize,
    pub theta: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "status", content = "lambda")]
pub enum CellValue {
    #[serde(rename = "OK")]
    Value(f64),
    /// A pole of the eigenvalue formula, `k^2 = 0`, or a non-real evaluation.
    #[serde(rename = "RES")]
    Resonance,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SweepCell {
    pub l: usize,
    pub k2: f64,
    pub value: CellValue,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepGrid {
    pub spec: SweepSpec,
    pub cells: Vec<SweepCell>,
}

impl SweepSpec {
    pub fn validate(&self) -> Result<()> {
        if self.l_min == 0 || self.l_min > self.l_max {
            return Err(Error::InvalidMode(format!("bad l range {}:{}", self.l_min, self.l_max)));
        }
        if self.samples == 0 {
            return Err(Error::InvalidMode("samples must be positive".into()));
        }
        if !(self.k2_min.is_finite() && self.k2_max.is_finite() && self.k2_min <= self.k2_max) {
            return Err(Error::InvalidMode(format!("bad k2 range {}:{}", self.k2_min, self.k2_max)));
        }
        if !(self.theta > 0.0 && self.theta.is_finite()) {
            return Err(Error::Domain(self.theta));
        }
        Ok(())
    }

    /// `k^2_i = min + (max - min) i / (samples - 1)`; a single sample sits at `min`.
    pub fn k2_at(&self, i: usize) -> f64 {
        if self.samples == 1 {
            return self.k2_min;
        }
        self.k2_min + (self.k2_max - self.k2_min) * i as f64 / (self.samples - 1) as f64
    }

    pub fn cell_count(&self) -> usize {
        (self.l_max - self.l_min + 1) * self.samples
    }

    fn cell(&self, index: usize) -> Result<SweepCell> {
        let l = self.l_min + index / self.samples;
        let k2 = self.k2_at(index % self.samples);
        Ok(SweepCell { l, k2, value: evaluate_cell(self.family, l, k2, self.theta)? })
    }
}

/// One eigenvalue, with poles and the excluded `k^2 = 0` folded into
/// [`CellValue::Resonance`]. Other failures propagate.
pub fn evaluate_cell(family: Family, l: usize, k2: f64, theta: f64) -> Result<CellValue> {
    if k2 == 0.0 {
        return Ok(CellValue::Resonance);
    }
    let value = match family {
        Family::One => lambda1(l, k2, theta),
        Family::Two => lambda2(l, k2),
    };
    match value {
        Ok(v) if v.is_finite() => Ok(CellValue::Value(v)),
        Ok(_) | Err(Error::DirichletResonance { .. }) | Err(Error::NonRealEigenvalue { .. }) => {
            Ok(CellValue::Resonance)
        }
        Err(e) => Err(e),
    }
}

pub fn evaluate_sequential(spec: &SweepSpec) -> Result<SweepGrid> {
    spec.validate()?;
    let cells = (0..spec.cell_count()).map(|i| spec.cell(i)).collect::<Result<Vec<_>>>()?;
    Ok(SweepGrid { spec: *spec, cells })
}

/// Parallel map over the cells on the current rayon pool.
#[cfg(feature = "parallel")]
pub fn evaluate_parallel(spec: &SweepSpec) -> Result<SweepGrid> {
    use rayon::prelude::*;
    spec.validate()?;
    let cells = (0..spec.cell_count()).into_par_iter().map(|i| spec.cell(i)).collect::<Result<Vec<_>>>()?;
    Ok(SweepGrid { spec: *spec, cells })
}

/// Parallel when the `parallel` feature is enabled, sequential otherwise.
pub fn evaluate(spec: &SweepSpec) -> Result<SweepGrid> {
    #[cfg(feature = "parallel")]
    {
        evaluate_parallel(spec)
    }
    #[cfg(not(feature = "parallel"))]
    {
        evaluate_sequential(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec() -> SweepSpec {
        SweepSpec { family: Family::One, l_min: 1, l_max: 3, k2_min: -4.0, k2_max: 4.0, samples: 5, theta: 1.0 }
    }

    #[test]
    fn grid_endpoints_and_zero_cell() {
        let g = evaluate_sequential(&spec()).unwrap();
        assert_eq!(g.cells.len(), 15);
        assert_eq!(g.cells[0].k2, -4.0);
        assert_eq!(g.cells[4].k2, 4.0);
        assert_eq!(g.cells[2].value, CellValue::Resonance);
        assert_eq!(g.cells[5].l, 2);
    }

    #[test]
    fn rejects_empty_ranges() {
        let mut s = spec();
        s.l_min = 0;
        assert!(evaluate_sequential(&s).is_err());
        let mut s = spec();
        s.samples = 0;
        assert!(evaluate_sequential(&s).is_err());
    }

    #[cfg(feature = "parallel")]
    #[test]
    fn parallel_matches_sequential() {
        let s = SweepSpec { samples: 101, l_max: 6, k2_min: -50.0, k2_max: 50.0, ..spec() };
        assert_eq!(evaluate_sequential(&s).unwrap(), evaluate_parallel(&s).unwrap());
    }
}
