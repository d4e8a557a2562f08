use std::sync::{Arc, OnceLock, RwLock};

use crate::exact::{int, rat, Poly, Rational, Var};

/// The polynomials `α^n_j(t)` for `0 ≤ n ≤ N`, `−2n ≤ j ≤ 2n`.
#[derive(Clone, Debug, PartialEq)]
pub struct AlphaTable {
    rows: Vec<Vec<Poly<Rational>>>,
}

fn tpoly(cs: Vec<Rational>) -> Poly<Rational> {
    Poly::new(Var::T, cs)
}

impl AlphaTable {
    /// Exact recursion:
    /// `α^{n+1}_j = (t²∂² + t∂)α^n_j + (t²∂ + t/2)(α^n_{j+1} + α^n_{j−1}) + (t²/4)(α^n_{j+2} − 2α^n_j + α^n_{j−2})`.
    pub fn build(depth: usize) -> Self {
        let t = tpoly(vec![int(0), int(1)]);
        let t2 = tpoly(vec![int(0), int(0), int(1)]);
        let mut rows = vec![vec![tpoly(vec![int(0), rat(1, 2)])]];
        for n in 0..depth {
            let prev = &rows[n];
            let get = |j: i64| -> Poly<Rational> {
                let idx = j + 2 * n as i64;
                if idx < 0 || idx as usize >= prev.len() {
                    Poly::zero_in(Var::T)
                } else {
                    prev[idx as usize].clone()
                }
            };
            let width = 2 * (n as i64 + 1);
            let row = (-width..=width)
                .map(|j| {
                    let a = get(j);
                    let euler = &(&t2 * &a.derivative().derivative()) + &(&t * &a.derivative());
                    let nb = &get(j + 1) + &get(j - 1);
                    let first = &(&t2 * &nb.derivative()) + &nb.scale(&rat(1, 2)).checked_mul(&t).unwrap();
                    let second = (&(&get(j + 2) - &a.scale(&int(2))) + &get(j - 2)).checked_mul(&t2).unwrap().scale(&rat(1, 4));
                    (&(&euler + &first) + &second).with_var(Var::T)
                })
                .collect();
            rows.push(row);
        }
        AlphaTable { rows }
    }

    pub fn depth(&self) -> usize {
        self.rows.len() - 1
    }

    /// `α^n_j`, zero for `|j| > 2n`.
    pub fn get(&self, n: usize, j: i64) -> Poly<Rational> {
        let row = &self.rows[n];
        let idx = j + 2 * n as i64;
        if idx < 0 || idx as usize >= row.len() {
            Poly::zero_in(Var::T)
        } else {
            row[idx as usize].clone()
        }
    }
}

static CACHE: OnceLock<RwLock<Arc<AlphaTable>>> = OnceLock::new();

/// Shared table of at least the requested depth, built once and reused.
pub fn alpha_table(depth: usize) -> Arc<AlphaTable> {
    let lock = CACHE.get_or_init(|| RwLock::new(Arc::new(AlphaTable::build(0))));
    {
        let cur = lock.read().expect("alpha cache poisoned");
        if cur.depth() >= depth {
            return Arc::clone(&cur);
        }
    }
    let mut cur = lock.write().expect("alpha cache poisoned");
    if cur.depth() < depth {
        *cur = Arc::new(AlphaTable::build(depth));
    }
    Arc::clone(&cur)
}
