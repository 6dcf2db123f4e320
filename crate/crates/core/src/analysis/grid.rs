use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Spacing {
    Linear,
    Log,
}

#[derive(Debug, Clone, PartialEq)]
pub enum GridConstruction {
    Range {
        start: f64,
        stop: f64,
        count: usize,
        spacing: Spacing,
    },
    Explicit,
}

/// Strictly increasing, finite, non-negative evaluation abscissae.
///
/// Range-built grids need at least two points and hit both ends exactly.
/// Explicit grids may hold a single point.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    points: Vec<f64>,
    construction: GridConstruction,
}

/// First point, last point and cardinality of a grid.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSummary {
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

impl Grid {
    pub fn linear(start: f64, stop: f64, count: usize) -> Result<Self> {
        Self::range(start, stop, count, Spacing::Linear)
    }

    /// Geometric spacing; `start` must be positive.
    pub fn log(start: f64, stop: f64, count: usize) -> Result<Self> {
        Self::range(start, stop, count, Spacing::Log)
    }

    pub fn range(start: f64, stop: f64, count: usize, spacing: Spacing) -> Result<Self> {
        if count < 2 {
            return Err(Error::InvalidGrid(format!("count {count} < 2")));
        }
        if !(start.is_finite() && stop.is_finite()) || start < 0.0 || stop <= start {
            return Err(Error::InvalidGrid(format!(
                "range [{start}, {stop}] must be finite, non-negative and increasing"
            )));
        }
        if spacing == Spacing::Log && start <= 0.0 {
            return Err(Error::InvalidGrid("log spacing needs start > 0".into()));
        }
        let last = count - 1;
        let width = stop - start;
        let (ls, lw) = (start.ln(), stop.ln() - start.ln());
        let points = (0..count)
            .map(|i| {
                if i == 0 {
                    start
                } else if i == last {
                    stop
                } else {
                    let t = i as f64 / last as f64;
                    match spacing {
                        Spacing::Linear => start + width * t,
                        Spacing::Log => (ls + lw * t).exp(),
                    }
                }
            })
            .collect();
        let grid = Self {
            points,
            construction: GridConstruction::Range {
                start,
                stop,
                count,
                spacing,
            },
        };
        grid.validate()?;
        Ok(grid)
    }

    pub fn explicit(points: Vec<f64>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::InvalidGrid("no points".into()));
        }
        let grid = Self {
            points,
            construction: GridConstruction::Explicit,
        };
        grid.validate()?;
        Ok(grid)
    }

    fn validate(&self) -> Result<()> {
        if let Some(bad) = self.points.iter().find(|x| !x.is_finite() || **x < 0.0) {
            return Err(Error::InvalidGrid(format!(
                "point {bad} is negative or not finite"
            )));
        }
        if let Some(w) = self.points.windows(2).find(|w| w[1] <= w[0]) {
            return Err(Error::InvalidGrid(format!(
                "points not strictly increasing at {} -> {}",
                w[0], w[1]
            )));
        }
        Ok(())
    }

    pub fn points(&self) -> &[f64] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn construction(&self) -> &GridConstruction {
        &self.construction
    }

    pub fn summary(&self) -> GridSummary {
        GridSummary {
            start: self.points[0],
            stop: self.points[self.points.len() - 1],
            count: self.points.len(),
        }
    }
}
