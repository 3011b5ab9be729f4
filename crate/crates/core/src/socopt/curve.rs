use crate::error::{Error, Result};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CurveKind {
    MarkovUpper,
    TightestMarkov,
    ReverseMarkovLower,
    Asymptotic,
    Exact,
}

/// Values of one quantity along a sweep of one variable.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundCurve {
    pub sweep_variable: String,
    pub grid: Vec<f64>,
    pub values: Vec<f64>,
    pub kind: CurveKind,
}

impl BoundCurve {
    pub fn new(sweep_variable: impl Into<String>, grid: Vec<f64>, values: Vec<f64>, kind: CurveKind) -> Result<Self> {
        let c = BoundCurve { sweep_variable: sweep_variable.into(), grid, values, kind };
        c.validate()?;
        Ok(c)
    }

    /// Evaluate `f` on every grid point in parallel, keeping grid order.
    pub fn from_fn<F>(sweep_variable: impl Into<String>, grid: Vec<f64>, kind: CurveKind, f: F) -> Result<Self>
    where
        F: Fn(f64) -> Result<f64> + Sync,
    {
        let values = grid.par_iter().map(|&x| f(x)).collect::<Result<Vec<_>>>()?;
        Self::new(sweep_variable, grid, values, kind)
    }

    pub fn validate(&self) -> Result<()> {
        if self.grid.len() != self.values.len() {
            return Err(Error::Config("grid and values differ in length".into()));
        }
        if !self.grid.windows(2).all(|w| w[0] < w[1]) {
            return Err(Error::Config("sweep grid must be strictly increasing".into()));
        }
        if let Some(i) = self.values.iter().position(|v| !v.is_finite()) {
            return Err(Error::Config(format!("non-finite value at grid point {}", self.grid[i])));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_unsorted_grid() {
        assert!(BoundCurve::new("eps", vec![0.2, 0.1], vec![1.0, 2.0], CurveKind::Exact).is_err());
        assert!(BoundCurve::new("eps", vec![0.1, 0.2], vec![1.0, f64::NAN], CurveKind::Exact).is_err());
    }

    #[test]
    fn keeps_order() {
        let g: Vec<f64> = (1..50).map(|i| i as f64).collect();
        let c = BoundCurve::from_fn("x", g.clone(), CurveKind::Asymptotic, |x| Ok(x * x)).unwrap();
        assert!(c.values.iter().zip(&g).all(|(v, x)| *v == x * x));
    }
}
