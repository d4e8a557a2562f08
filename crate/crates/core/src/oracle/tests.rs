use super::*;
use crate::bessel::{bessel_row, BesselArg, BesselCombo};
use crate::darboux::{Darboux, ParamVector};
use crate::exact::{int, rat, to_f64, Poly, Var};
use crate::kernel::assemble_kernel;
use crate::Error;

fn free() -> Darboux {
    Darboux::new(&ParamVector::free()).unwrap()
}

fn bicritical() -> Darboux {
    Darboux::new(&ParamVector::from_alpha_beta(1, 1, rat(1, 4), int(1))).unwrap()
}

#[test]
fn free_evolution_is_the_bessel_kernel() {
    let ev = lattice_evolve(free().operator(), 200, 0, 1.0).unwrap();
    let row = bessel_row(2.0, 40).unwrap();
    for n in -20..=20 {
        assert!((ev.at(n) - row.scaled(n)).abs() < 1e-11, "n = {n}");
    }
    assert!(ev.boundary_bound < 1e-100);
    let mass: f64 = ev.values.iter().sum();
    assert!((mass - 1.0).abs() < 1e-11);
}

#[test]
fn zero_time_is_the_delta() {
    let ev = lattice_evolve(bicritical().operator(), 50, 3, 0.0).unwrap();
    for n in -50..=50 {
        assert_eq!(ev.at(n), if n == 3 { 1.0 } else { 0.0 });
    }
    let tiny = lattice_evolve(free().operator(), 50, 0, 1e-300).unwrap();
    assert_eq!(tiny.at(0), 1.0);
}

#[test]
fn one_step_evolution_matches_closed_form() {
    let d = Darboux::new(&ParamVector::one_step(rat(1, 2))).unwrap();
    let ev = lattice_evolve(d.operator(), 200, 0, 1.0).unwrap();
    // e^{-2}[I_0(2) − (4/3)(I_0(2) + I_1(2))] at n = m = 0
    let row = bessel_row(2.0, 4).unwrap();
    let expected = row.scaled(0) - 4.0 / 3.0 * (row.scaled(0) + row.scaled(1));
    assert!((ev.at(0) - expected).abs() < 1e-10);
    for n in -4..=4 {
        let f = assemble_kernel(&d, n, 0).unwrap();
        assert!((ev.at(n) - crate::kernel::kernel_eval(&f, 1.0).unwrap()).abs() < 1e-10, "n = {n}");
    }
}

#[test]
fn small_window_is_rejected() {
    match lattice_evolve(free().operator(), 10, 0, 2.0) {
        Err(Error::WindowTooSmall { bound, limit }) => assert!(bound > limit),
        other => panic!("expected WindowTooSmall, got {other:?}"),
    }
    assert!(lattice_evolve(free().operator(), 10, 6, 0.5).is_err());
}

#[test]
fn grid_runs_keep_order() {
    let w = LatticeWindow::new(free().operator(), 60).unwrap();
    let grid = lattice_grid(&w, &[-1, 2], &[0.5, 1.0]).unwrap();
    let keys: Vec<_> = grid.iter().map(|e| (e.m, e.t)).collect();
    assert_eq!(keys, vec![(-1, 0.5), (-1, 1.0), (2, 0.5), (2, 1.0)]);
    assert_eq!(grid[3], w.evolve(2, 1.0).unwrap());
}

#[test]
fn orthogonality_gram_matrix() {
    let d = bicritical();
    let spec = QuadratureSpec::new(Integrand::Orthogonality);
    for n in 0..=3 {
        for m in 0..=3 {
            let q = circle_quadrature(&spec, &d, n, m).unwrap();
            let expected = if n == m { to_f64(&(d.tau_at(n + 1) / d.tau_at(n))) } else { 0.0 };
            assert!((q.value - expected).abs() < 1e-10, "({n},{m}): {} vs {expected}", q.value);
        }
    }
}

#[test]
fn free_kernel_by_quadrature() {
    let spec = QuadratureSpec::new(Integrand::Kernel { t: 1.0 });
    let q = circle_quadrature(&spec, &free(), 0, 0).unwrap();
    assert!((q.value - bessel_row(2.0, 2).unwrap().scaled(0)).abs() < 1e-12);
}

#[test]
fn wave_and_adjoint_integrals_agree() {
    let d = bicritical();
    let a = circle_quadrature(&QuadratureSpec::new(Integrand::Kernel { t: 1.0 }), &d, 1, 0).unwrap();
    let b = circle_quadrature(&QuadratureSpec::new(Integrand::KernelAdjoint { t: 1.0 }), &d, 1, 0).unwrap();
    assert!((a.value - b.value).abs() < 1e-12, "{} vs {}", a.value, b.value);
    let outside = QuadratureSpec::new(Integrand::Kernel { t: 1.0 }).with_radius(2.0);
    let c = circle_quadrature(&outside, &d, 1, 0).unwrap();
    assert!((a.value - c.value).abs() < 1e-11, "{} vs {}", a.value, c.value);
    let f = assemble_kernel(&d, 1, 0).unwrap();
    assert!((a.value - crate::kernel::kernel_eval(&f, 1.0).unwrap()).abs() < 1e-10);
}

#[test]
fn quadrature_converges_geometrically() {
    let d = bicritical();
    let q = circle_quadrature(&QuadratureSpec::new(Integrand::Kernel { t: 1.0 }), &d, 2, 1).unwrap();
    let floor = 1e-13;
    for w in q.history.windows(2) {
        if w[1] > floor {
            assert!(w[1] < 0.5 * w[0], "{:?}", q.history);
        }
    }
}

#[test]
fn quadrature_failures() {
    let d = free();
    let mut spec = QuadratureSpec::new(Integrand::Kernel { t: 1.0 });
    spec.max_nodes = 16;
    assert!(matches!(circle_quadrature(&spec, &d, 0, 0), Err(Error::NoConvergence { .. })));
    let on_poles = QuadratureSpec::new(Integrand::Orthogonality).with_radius(1.0);
    assert!(circle_quadrature(&on_poles, &d, 0, 0).is_err());
}

fn one_step_grid() -> (Vec<crate::kernel::KernelFormula>, Vec<GridPoint>) {
    let d = Darboux::new(&ParamVector::one_step(rat(1, 2))).unwrap();
    let w = LatticeWindow::new(d.operator(), 200).unwrap();
    let mut formulas = Vec::new();
    let mut points = Vec::new();
    for m in -2..=2 {
        let ev = w.evolve(m, 0.5).unwrap();
        for n in -2..=2 {
            formulas.push(assemble_kernel(&d, n, m).unwrap());
            points.push(GridPoint { n, m, t: 0.5, value: ev.at(n) });
        }
    }
    (formulas, points)
}

#[test]
fn comparison_of_identical_values() {
    let (formulas, _) = one_step_grid();
    let points: Vec<GridPoint> = formulas
        .iter()
        .map(|f| GridPoint { n: f.n, m: f.m, t: 1.0, value: crate::kernel::kernel_eval(f, 1.0).unwrap() })
        .collect();
    let r = compare_report(&formulas, &points, 0.0).unwrap();
    assert_eq!(r.max_abs, 0.0);
    assert!(r.pass);
}

#[test]
fn comparison_against_lattice_and_corruption() {
    let (mut formulas, points) = one_step_grid();
    let r = compare_report(&formulas, &points, 1e-10).unwrap();
    assert!(r.pass, "{}", r.max_abs);
    assert!(r.to_csv().starts_with("n,m,t,closed,oracle,diff\n"));
    assert_eq!(r.to_json()["pass"], true);

    let target = formulas.iter().position(|f| f.n == 1 && f.m == -1).unwrap();
    let bump = BesselCombo::single(BesselArg::TwoT, 1, Poly::constant(Var::T, rat(1, 1_000_000)));
    formulas[target].combo = formulas[target].combo.add(&bump).unwrap();
    let r = compare_report(&formulas, &points, 1e-10).unwrap();
    assert!(!r.pass);
    let worst = r.worst().unwrap();
    assert_eq!((worst.n, worst.m), (1, -1));
}

#[test]
fn comparison_grid_mismatch() {
    let (formulas, mut points) = one_step_grid();
    points.push(GridPoint { n: 9, m: 9, t: 1.0, value: 0.0 });
    assert!(matches!(compare_report(&formulas, &points, 1e-10), Err(Error::GridMismatch(_))));
    let (formulas, points) = one_step_grid();
    assert!(matches!(compare_report(&formulas, &points[1..], 1e-10), Err(Error::GridMismatch(_))));
}

