use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::{int, Rational};

/// `e^{−t} I_k(t)` for `k = 0..=K`.
#[derive(Clone, Debug, PartialEq)]
pub struct BesselRow {
    t: f64,
    values: Vec<f64>,
}

const RESCALE_ABOVE: f64 = 1e200;

/// Scaled modified Bessel functions by Miller's backward recurrence
/// `I_{k−1} = I_{k+1} + (2k/t) I_k`, normalized with `I_0 + 2 Σ_{k≥1} I_k = e^t`.
pub fn bessel_row(t: f64, kmax: usize) -> Result<BesselRow> {
    if !(t > 0.0) || !t.is_finite() {
        return Err(Error::NonpositiveArgument(t));
    }
    // K + 20 + ⌈t⌉ plus a margin that keeps the start well past the turning point
    let start = kmax + 20 + t.ceil() as usize + (60.0 * t).sqrt().ceil() as usize;
    let mut vals = vec![0.0; start + 2];
    vals[start] = 1e-280;
    for k in (1..=start).rev() {
        vals[k - 1] = vals[k + 1] + (2.0 * k as f64 / t) * vals[k];
        if vals[k - 1] > RESCALE_ABOVE {
            for v in &mut vals[k - 1..] {
                *v /= RESCALE_ABOVE;
            }
        }
    }
    // sum the normalization from the small end upwards to limit rounding
    let tail: f64 = vals[1..].iter().rev().sum();
    let norm = vals[0] + 2.0 * tail;
    vals.truncate(kmax + 1);
    for v in &mut vals {
        *v /= norm;
    }
    Ok(BesselRow { t, values: vals })
}

impl BesselRow {
    pub fn t(&self) -> f64 {
        self.t
    }

    pub fn kmax(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// `e^{−t} I_k(t)` using `I_{−k} = I_k`.
    pub fn scaled(&self, k: i64) -> f64 {
        let idx = k.unsigned_abs() as usize;
        assert!(idx < self.values.len(), "order {k} beyond the computed row");
        self.values[idx]
    }
}

/// `I_k(t)` from the ascending series `Σ_m (t/2)^{2m+k} / (m! (m+k)!)`, exact.
pub fn bessel_i_ascending(k: u32, t: &Rational, terms: usize) -> Rational {
    let half = t / int(2);
    let sq = &half * &half;
    let mut term = num_traits::pow(half.clone(), k as usize);
    for i in 1..=k as i64 {
        term /= int(i);
    }
    let mut acc = Rational::zero();
    for m in 0..terms as i64 {
        if m > 0 {
            term = term * &sq / (int(m) * int(m + k as i64));
        }
        acc += &term;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::to_f64;

    fn scaled_series(k: u32, t: i64) -> f64 {
        to_f64(&bessel_i_ascending(k, &int(t), 40)) * (-(t as f64)).exp()
    }

    #[test]
    fn matches_exact_series() {
        let row = bessel_row(2.0, 0).unwrap();
        let oracle = scaled_series(0, 2);
        assert!((row.scaled(0) - oracle).abs() < 1e-15);
        assert!((row.scaled(0) - 0.3085083).abs() < 1e-7);
        for t in [1i64, 2, 4, 7] {
            let row = bessel_row(t as f64, 25).unwrap();
            for k in 0..=25 {
                let o = scaled_series(k, t);
                assert!(((row.scaled(k as i64) - o) / o).abs() < 1e-13, "t={t} k={k}");
            }
        }
    }

    #[test]
    fn rejects_nonpositive_argument() {
        assert_eq!(bessel_row(0.0, 3), Err(Error::NonpositiveArgument(0.0)));
        assert!(bessel_row(-1.0, 3).is_err());
    }

    #[test]
    fn row_invariants() {
        for t in [0.3, 1.0, 5.0, 30.0] {
            let row = bessel_row(t, 60).unwrap();
            let v = row.values();
            assert!(v.iter().all(|&x| x > 0.0 && x <= 1.0 || x == 0.0));
            assert!(v.iter().skip(1).all(|&x| x <= v[0]));
            let start = t.floor() as usize + 1;
            assert!(v[start..].windows(2).all(|w| w[1] < w[0] || w[1] == 0.0));
        }
    }

    #[test]
    fn normalization_sum() {
        let row = bessel_row(3.5, 80).unwrap();
        let s = row.scaled(0) + 2.0 * row.values()[1..].iter().sum::<f64>();
        assert!((s - 1.0).abs() < 1e-14);
    }

    #[test]
    fn order_recurrence() {
        let row = bessel_row(1.0, 12).unwrap();
        for k in 1..=10 {
            let lhs = k as f64 * row.scaled(k);
            let rhs = 0.5 * (row.scaled(k - 1) - row.scaled(k + 1));
            assert!((lhs - rhs).abs() < 1e-12);
        }
    }
}
