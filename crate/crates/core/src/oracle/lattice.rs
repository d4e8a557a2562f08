use rayon::prelude::*;

use crate::bessel::bessel_row;
use crate::darboux::BandOperator;
use crate::error::{Error, Result};
use crate::exact::to_f64;

/// Largest tolerated free-decay estimate of boundary influence.
pub const BOUNDARY_LIMIT: f64 = 1e-11;

/// `L` restricted to the sites `[−W, W]`; couplings leaving the window are dropped.
#[derive(Clone, Debug)]
pub struct LatticeWindow {
    half_width: i64,
    /// `(shift, values)` with `values[n + W]` the coefficient of `u(n + shift)` in `(Lu)(n)`.
    bands: Vec<(i64, Vec<f64>)>,
}

impl LatticeWindow {
    pub fn new(op: &BandOperator, half_width: i64) -> Result<Self> {
        if half_width < 1 {
            return Err(Error::InvalidParams(format!("window half-width must be positive, got {half_width}")));
        }
        let mut bands: Vec<(i64, Vec<f64>)> = op.terms().map(|(j, _)| (j, Vec::new())).collect();
        for n in -half_width..=half_width {
            for (shift, c) in op.row_at(n)? {
                let band = bands.iter_mut().find(|(s, _)| *s == shift).expect("band listed by terms()");
                let inside = (n + shift).abs() <= half_width;
                band.1.push(if inside { to_f64(&c) } else { 0.0 });
            }
        }
        Ok(LatticeWindow { half_width, bands })
    }

    pub fn half_width(&self) -> i64 {
        self.half_width
    }

    fn len(&self) -> usize {
        (2 * self.half_width + 1) as usize
    }

    fn apply(&self, v: &[f64], out: &mut [f64]) {
        out.iter_mut().for_each(|x| *x = 0.0);
        let len = self.len() as i64;
        for (shift, values) in &self.bands {
            for (idx, c) in values.iter().enumerate() {
                let src = idx as i64 + shift;
                if *c != 0.0 && (0..len).contains(&src) {
                    out[idx] += c * v[src as usize];
                }
            }
        }
    }

    fn norm_inf(&self) -> f64 {
        (0..self.len()).map(|i| self.bands.iter().map(|(_, v)| v[i].abs()).sum::<f64>()).fold(0.0, f64::max)
    }

    /// `exp(tL_W) δ_m` by Taylor steps of norm at most one half.
    pub fn evolve(&self, m: i64, t: f64) -> Result<LatticeEvolution> {
        if m.abs() > self.half_width / 2 {
            return Err(Error::InvalidParams(format!("source site {m} too close to the window edge")));
        }
        if t < 0.0 || !t.is_finite() {
            return Err(Error::NonpositiveArgument(t));
        }
        let boundary_bound = free_boundary_bound(self.half_width - m.abs(), t)?;
        if boundary_bound > BOUNDARY_LIMIT {
            return Err(Error::WindowTooSmall { bound: boundary_bound, limit: BOUNDARY_LIMIT });
        }
        let mut v = vec![0.0; self.len()];
        v[(m + self.half_width) as usize] = 1.0;
        if t > 0.0 {
            let steps = (2.0 * t * self.norm_inf()).ceil().max(1.0) as usize;
            let h = t / steps as f64;
            let mut term = vec![0.0; self.len()];
            let mut next = vec![0.0; self.len()];
            for _ in 0..steps {
                term.copy_from_slice(&v);
                for k in 1..=60 {
                    self.apply(&term, &mut next);
                    let scale = h / k as f64;
                    let mut size = 0.0f64;
                    for (tv, nv) in term.iter_mut().zip(&next) {
                        *tv = nv * scale;
                        size = size.max(tv.abs());
                    }
                    v.iter_mut().zip(&term).for_each(|(a, b)| *a += b);
                    let vmax = v.iter().fold(0.0f64, |a, b| a.max(b.abs()));
                    if size <= 1e-18 * vmax {
                        break;
                    }
                }
            }
        }
        Ok(LatticeEvolution { half_width: self.half_width, m, t, values: v, boundary_bound })
    }
}

/// `e^{−2t} I_d(2t)`: how much of the free kernel reaches distance `d`.
fn free_boundary_bound(distance: i64, t: f64) -> Result<f64> {
    if t == 0.0 {
        return Ok(0.0);
    }
    Ok(bessel_row(2.0 * t, distance as usize)?.scaled(distance))
}

/// `u(·, m, t)` on the window together with the boundary-influence estimate.
#[derive(Clone, Debug, PartialEq)]
pub struct LatticeEvolution {
    pub half_width: i64,
    pub m: i64,
    pub t: f64,
    pub values: Vec<f64>,
    pub boundary_bound: f64,
}

impl LatticeEvolution {
    /// `u(n, m, t)`; zero outside the window.
    pub fn at(&self, n: i64) -> f64 {
        if n.abs() > self.half_width {
            return 0.0;
        }
        self.values[(n + self.half_width) as usize]
    }
}

pub fn lattice_evolve(op: &BandOperator, half_width: i64, m: i64, t: f64) -> Result<LatticeEvolution> {
    LatticeWindow::new(op, half_width)?.evolve(m, t)
}

/// One evolution per `(m, t)`, run in parallel; results keep input order.
pub fn lattice_grid(window: &LatticeWindow, sources: &[i64], times: &[f64]) -> Result<Vec<LatticeEvolution>> {
    let jobs: Vec<(i64, f64)> = sources.iter().flat_map(|&m| times.iter().map(move |&t| (m, t))).collect();
    jobs.par_iter().map(|&(m, t)| window.evolve(m, t)).collect()
}
