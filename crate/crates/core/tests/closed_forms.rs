mod common;

use common::{two_step_combo, two_step_gamma, two_step_tau};
use heatkernel::darboux::{Darboux, ParamVector};
use heatkernel::exact::{int, rat, Poly, Var};
use heatkernel::kernel::{assemble_kernel, gamma_series};

fn bicritical(alpha: heatkernel::exact::Rational, beta: heatkernel::exact::Rational) -> Darboux {
    Darboux::new(&ParamVector::from_alpha_beta(1, 1, alpha, beta)).unwrap()
}

#[test]
fn tau_matches_the_two_by_two_determinant() {
    for (a, b) in [(rat(1, 4), int(1)), (int(1), int(3)), (rat(-2, 7), rat(5, 3))] {
        let d = bicritical(a.clone(), b.clone());
        for n in -8..=8 {
            assert_eq!(d.tau_at(n), two_step_tau(&a, &b, n), "α = {a}, β = {b}, n = {n}");
        }
    }
}

#[test]
fn first_tail_weight_matches_closed_form() {
    let (a, b) = (rat(1, 4), int(1));
    let d = bicritical(a.clone(), b.clone());
    for (n, m) in [(0, 0), (1, 0), (2, 0), (3, 1), (2, -1)] {
        let g = gamma_series(&d, n, m, 4).unwrap();
        for j in 1..=4 {
            assert_eq!(g.gamma(j as usize), &two_step_gamma(&a, &b, n, m, j), "({n},{m}) j = {j}");
        }
    }
}

#[test]
fn two_step_kernel_is_the_closed_form() {
    let (a, b) = (rat(1, 4), int(1));
    let d = bicritical(a.clone(), b.clone());
    let f = assemble_kernel(&d, 1, 0).unwrap();
    assert_eq!(f.combo, two_step_combo(&a, &b, 1, 0));
    // −221/3 + 256/3 t on I_1, −224/3 t on I_2
    assert_eq!(f.beta(1), Poly::new(Var::T, vec![rat(-221, 3), rat(256, 3)]));
    assert_eq!(f.beta(2), Poly::new(Var::T, vec![int(0), rat(-224, 3)]));
}
