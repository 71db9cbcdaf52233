use ccr_core::complementarity::{check_complete, check_incomplete};
use ccr_core::linalg::ComplexMatrix;
use ccr_core::measures::{c_hs, c_wy, entropy_report, registry, BuiltinMeasure};
use ccr_core::monotones::{
    check_local_unitary_invariance, monotone_pure, monotone_schmidt, robustness, s_l, w_l1, w_wy, SchmidtMonotone,
};
use ccr_core::sampling::{
    ginibre_density, haar_bipartite, haar_pure, haar_unitary, random_density, random_permutation, random_simplex,
    SeededStream,
};
use ccr_core::state::{
    majorizes, partial_trace_b, psd_sqrt, purify, schmidt_coefficients, schmidt_decompose, BipartitePureState,
    DensityMatrix, ProbabilityVector,
};
use ccr_core::Tolerances;
use proptest::prelude::*;

fn stream(seed: u64) -> SeededStream {
    SeededStream::new(seed, 0)
}

fn diag(p: &[f64]) -> DensityMatrix<f64> {
    DensityMatrix::from_matrix_unchecked(ComplexMatrix::from_diagonal(p))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn reduced_state_trace_and_spectrum(seed in any::<u64>(), da in 2usize..5, db in 1usize..5) {
        let psi = haar_bipartite::<f64>(da, db, &mut stream(seed));
        let rho_a = partial_trace_b(&psi);
        prop_assert!((rho_a.matrix().trace().re - 1.0).abs() < 1e-10);
        let eig = rho_a.eigenvalues();
        let svd_route = schmidt_decompose(&psi).coefficients;
        for (k, &x) in svd_route.as_slice().iter().enumerate() {
            prop_assert!((x - eig[k]).abs() < 1e-9);
        }
        let eig_route = schmidt_coefficients(&psi);
        for (x, y) in eig_route.as_slice().iter().zip(&eig) {
            prop_assert!((x - y).abs() < 1e-9);
        }
    }

    #[test]
    fn purify_round_trip(seed in any::<u64>(), d in 2usize..6) {
        let rho = random_density::<f64>(d, &mut stream(seed));
        let back = partial_trace_b(&purify(&rho));
        prop_assert!((back.matrix() - rho.matrix()).max_abs() < 1e-9);
    }

    #[test]
    fn psd_sqrt_squares_back(seed in any::<u64>(), d in 2usize..6) {
        let rho = random_density::<f64>(d, &mut stream(seed));
        let root = psd_sqrt(&rho);
        prop_assert!(root.hermiticity_violation() < 1e-12);
        prop_assert!((&root.matmul(&root) - rho.matrix()).max_abs() < 1e-9);
    }

    #[test]
    fn majorization_preorder(seed in any::<u64>(), d in 2usize..7) {
        let tol = Tolerances::DOUBLE;
        let mut s = stream(seed);
        let p = random_simplex::<f64>(d, &mut s);
        prop_assert!(majorizes(&p, &p, &tol).unwrap());
        prop_assert!(majorizes(&p, &ProbabilityVector::uniform(d), &tol).unwrap());
        let q = random_simplex::<f64>(d, &mut s);
        let r = random_simplex::<f64>(d, &mut s);
        if majorizes(&p, &q, &tol).unwrap() && majorizes(&q, &r, &tol).unwrap() {
            prop_assert!(majorizes(&p, &r, &tol).unwrap());
        }
        // a sorted chain p ≻ mix(p, uniform) ≻ uniform
        let mixed = ProbabilityVector::normalized(p.as_slice().iter().map(|x| 0.5 * x + 0.5 / d as f64).collect());
        prop_assert!(majorizes(&p, &mixed, &tol).unwrap());
        prop_assert!(majorizes(&mixed, &ProbabilityVector::uniform(d), &tol).unwrap());
    }

    #[test]
    fn measures_stay_in_range(seed in any::<u64>(), d in 2usize..5) {
        let rho = random_density::<f64>(d, &mut stream(seed));
        for pair in registry::<f64>().pairs() {
            let a = pair.alpha(d);
            let (p, c) = (pair.p(&rho), pair.c(&rho));
            prop_assert!((0.0..=a + 1e-12).contains(&p), "{} P = {}", pair.name(), p);
            prop_assert!((0.0..=a + 1e-12).contains(&c), "{} C = {}", pair.name(), c);
        }
    }

    #[test]
    fn measures_are_convex(seed in any::<u64>(), d in 2usize..5) {
        let mut s = stream(seed);
        let r1 = random_density::<f64>(d, &mut s);
        let r2 = random_density::<f64>(d, &mut s);
        for m in BuiltinMeasure::ALL {
            let (f1, f2) = (m.eval(&r1), m.eval(&r2));
            for g in 0..=10 {
                let l = g as f64 / 10.0;
                prop_assert!(m.eval(&r1.mix(&r2, l)) <= l * f1 + (1.0 - l) * f2 + 1e-9, "{}", m.id());
            }
        }
    }

    #[test]
    fn measures_are_permutation_invariant(seed in any::<u64>(), d in 2usize..6) {
        let mut s = stream(seed);
        let rho = random_density::<f64>(d, &mut s);
        let perm = random_permutation(d, &mut s);
        let permuted = DensityMatrix::from_matrix_unchecked(ComplexMatrix::from_fn(d, d, |j, k| rho.get(perm[j], perm[k])));
        for m in BuiltinMeasure::ALL {
            prop_assert!((m.eval(&rho) - m.eval(&permuted)).abs() < 1e-10, "{}", m.id());
        }
    }

    #[test]
    fn spectral_entropies_are_unitarily_invariant(seed in any::<u64>(), d in 2usize..5) {
        let mut s = stream(seed);
        let rho = random_density::<f64>(d, &mut s);
        let u = haar_unitary::<f64>(d, &mut s);
        let (a, b) = (entropy_report(&rho), entropy_report(&rho.conjugate_by(&u)));
        prop_assert!((a.vn - b.vn).abs() < 1e-9);
        prop_assert!((a.linear - b.linear).abs() < 1e-9);
        prop_assert!((a.purity - b.purity).abs() < 1e-9);
    }

    #[test]
    fn wy_equals_hs_on_pure_states(seed in any::<u64>(), d in 2usize..6) {
        let rho = DensityMatrix::from_pure(&haar_pure::<f64>(d, &mut stream(seed)));
        prop_assert!((c_wy(&rho) - c_hs(&rho)).abs() < 1e-10);
    }

    #[test]
    fn incomplete_relations(seed in any::<u64>(), d in 2usize..6) {
        let mut s = stream(seed);
        let mixed = ginibre_density::<f64>(d, d, &mut s);
        let pure = DensityMatrix::from_pure(&haar_pure::<f64>(d, &mut s));
        for pair in registry::<f64>().pairs() {
            let r = check_incomplete(pair, &mixed);
            prop_assert!(r.slack >= -1e-9);
            if mixed.purity() <= 0.99 {
                prop_assert!(r.slack > 1e-12, "{} slack {}", pair.name(), r.slack);
            }
            prop_assert!(check_incomplete(pair, &pure).slack.abs() <= 1e-9);
        }
    }

    #[test]
    fn complete_relations(seed in any::<u64>(), d in 2usize..5) {
        let psi = haar_bipartite::<f64>(d, d, &mut stream(seed));
        for pair in registry::<f64>().pairs() {
            prop_assert!(check_complete(pair, &psi).slack.abs() <= 1e-9);
        }
    }

    #[test]
    fn spectral_pairs_match_closed_forms(seed in any::<u64>(), d in 2usize..5) {
        let psi = haar_bipartite::<f64>(d, d, &mut stream(seed));
        let lambda = schmidt_coefficients(&psi);
        let reg = registry::<f64>();
        for name in ["vn", "hs"] {
            let closed = SchmidtMonotone::for_pair(name).unwrap().value(lambda.as_slice());
            prop_assert!((monotone_pure(reg.require(name).unwrap(), &psi).value - closed).abs() < 1e-9);
        }
        for pair in reg.pairs() {
            let closed = SchmidtMonotone::for_pair(pair.name()).unwrap().value(lambda.as_slice());
            prop_assert!((monotone_schmidt(pair, &lambda) - closed).abs() < 1e-9, "{}", pair.name());
        }
    }

    #[test]
    fn all_pairs_match_closed_forms_in_the_schmidt_basis(seed in any::<u64>(), d in 2usize..5) {
        // local unitaries on B and diagonal phases on A keep ρ_A incoherent
        let mut s = stream(seed);
        let lambda = random_simplex::<f64>(d, &mut s);
        let ub = haar_unitary::<f64>(d, &mut s);
        let phases = ComplexMatrix::from_fn(d, d, |j, k| {
            if j == k { num_complex::Complex::from_polar(1.0, s.uniform() * 6.0) } else { num_complex::Complex::new(0.0, 0.0) }
        });
        let psi = BipartitePureState::schmidt_form(lambda.as_slice(), d, d).apply_local(&phases, &ub);
        for pair in registry::<f64>().pairs() {
            let closed = SchmidtMonotone::for_pair(pair.name()).unwrap().value(lambda.as_slice());
            prop_assert!((monotone_pure(pair, &psi).value - closed).abs() < 1e-9, "{}", pair.name());
        }
    }

    #[test]
    fn spectral_monotones_are_local_unitary_invariant(seed in any::<u64>(), d in 2usize..5) {
        let mut s = stream(seed);
        let psi = haar_bipartite::<f64>(d, d, &mut s);
        let ua = haar_unitary::<f64>(d, &mut s);
        let ub = haar_unitary::<f64>(d, &mut s);
        for m in SchmidtMonotone::ALL {
            prop_assert!(check_local_unitary_invariance(&m, &psi, &ua, &ub).deviation < 1e-9);
        }
    }

    #[test]
    fn monotones_are_concave_in_the_spectrum(seed in any::<u64>(), d in 2usize..6) {
        let mut s = stream(seed);
        let p = random_simplex::<f64>(d, &mut s);
        let q = random_simplex::<f64>(d, &mut s);
        for pair in registry::<f64>().pairs() {
            let a = pair.alpha(d);
            let f = |x: &[f64]| { let r = diag(x); a - pair.p(&r) - pair.c(&r) };
            let (fp, fq) = (f(p.as_slice()), f(q.as_slice()));
            for g in 0..=10 {
                let l = g as f64 / 10.0;
                let mix: Vec<f64> = p.as_slice().iter().zip(q.as_slice()).map(|(x, y)| l * x + (1.0 - l) * y).collect();
                prop_assert!(f(&mix) >= l * fp + (1.0 - l) * fq - 1e-9, "{}", pair.name());
            }
        }
    }

    #[test]
    fn closed_form_identities(seed in any::<u64>(), d in 2usize..7) {
        let mut s = stream(seed);
        let l = random_simplex::<f64>(d, &mut s);
        let x = l.as_slice();
        prop_assert!((w_l1(x) - robustness(x)).abs() < 1e-12);
        prop_assert!((w_wy(x) - s_l(x)).abs() < 1e-15);
        let perm = random_permutation(d, &mut s);
        let y: Vec<f64> = perm.iter().map(|&k| x[k]).collect();
        for m in SchmidtMonotone::ALL {
            prop_assert!((m.value(x) - m.value(&y)).abs() < 1e-12, "{}", m.id());
        }
    }
}

#[test]
fn maximally_entangled_attains_alpha() {
    for d in 2..=5 {
        let psi = BipartitePureState::<f64>::maximally_entangled(d);
        for pair in registry::<f64>().pairs() {
            assert!(
                (monotone_pure(pair, &psi).value - pair.alpha(d)).abs() < 1e-10,
                "{} d={}",
                pair.name(),
                d
            );
        }
    }
}

#[test]
fn reference_basis_coherence_changes_l1_and_wy() {
    // ρ_A = [[0.5, 0.25], [0.25, 0.5]]: a reference basis in which ρ_A is coherent
    let reg = registry::<f64>();
    let lambda = [0.75, 0.25];
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let had = ComplexMatrix::from_row_major(
        2,
        2,
        [h, h, h, -h]
            .iter()
            .map(|&x| num_complex::Complex::new(x, 0.0))
            .collect(),
    )
    .unwrap();
    let psi = BipartitePureState::<f64>::schmidt_form(&lambda, 2, 2).apply_local(&had, &ComplexMatrix::identity(2));
    let l1 = monotone_pure(reg.require("l1").unwrap(), &psi).value;
    assert!((l1 - 0.5).abs() < 1e-12);
    assert!((w_l1(&lambda) - 3f64.sqrt() / 2.0).abs() < 1e-12);
    let wy = monotone_pure(reg.require("wy").unwrap(), &psi).value;
    assert!((wy - s_l(&lambda)).abs() > 1e-3);
}

#[test]
fn sampling_is_reproducible() {
    let a: Vec<f64> = random_density::<f64>(4, &mut SeededStream::new(99, 7)).eigenvalues();
    let b: Vec<f64> = random_density::<f64>(4, &mut SeededStream::new(99, 7)).eigenvalues();
    assert_eq!(a, b);
}

#[test]
fn single_precision_pipeline() {
    let mut s = SeededStream::new(5, 0);
    let psi = haar_bipartite::<f32>(3, 3, &mut s);
    for pair in registry::<f32>().pairs() {
        assert!(check_complete(pair, &psi).slack.abs() < 1e-4);
    }
    let rho = partial_trace_b(&psi);
    assert!((rho.matrix().trace().re - 1.0).abs() < 1e-5);
}
