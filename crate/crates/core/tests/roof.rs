use ccr_core::monotones::{werner_state, SchmidtMonotone};
use ccr_core::roof::{
    convex_roof_estimate, decode_ensemble, ensemble_mixture, ensemble_rank, entanglement_of_formation_oracle,
    linear_entropy_roof_oracle, EnsembleParameterization, RoofConfig,
};
use ccr_core::sampling::{ginibre_density, SeededStream};
use ccr_core::DensityMatrix;

#[test]
fn random_generators_always_reconstruct() {
    let mut s = SeededStream::new(17, 0);
    let rho = ginibre_density::<f64>(4, 3, &mut s);
    let r = ensemble_rank(&rho);
    assert_eq!(r, 3);
    for _ in 0..1000 {
        let theta = EnsembleParameterization::random(r, r * r, &mut s).unwrap();
        let members = decode_ensemble(&rho, 2, 2, &theta).unwrap();
        let total: f64 = members.iter().map(|m| m.weight).sum();
        assert!((total - 1.0).abs() < 1e-9);
        assert!(members.iter().all(|m| m.weight >= 0.0));
        assert!((&ensemble_mixture(&members) - rho.matrix()).max_abs() < 1e-9);
    }
}

#[test]
fn roof_never_undercuts_the_oracles() {
    let cfg = RoofConfig {
        restarts: 4,
        max_iters: 800,
        seed: 3,
        ..RoofConfig::default()
    };
    let mut states: Vec<DensityMatrix<f64>> = vec![werner_state(0.2), werner_state(0.9)];
    let mut s = SeededStream::new(23, 0);
    for rank in 2..=4 {
        states.push(ginibre_density(4, rank, &mut s));
    }
    for rho in &states {
        let sl = convex_roof_estimate(&SchmidtMonotone::SL, rho, 2, 2, &cfg).unwrap();
        let svn = convex_roof_estimate(&SchmidtMonotone::SVn, rho, 2, 2, &cfg).unwrap();
        let (ol, ov) = (linear_entropy_roof_oracle(rho), entanglement_of_formation_oracle(rho));
        assert!(
            sl.value >= ol - 1e-6 && sl.value - ol < 1e-3,
            "s_l {} vs {}",
            sl.value,
            ol
        );
        assert!(
            svn.value >= ov - 1e-6 && svn.value - ov < 1e-3,
            "s_vn {} vs {}",
            svn.value,
            ov
        );
    }
}

#[test]
fn roof_config_json_block() {
    let cfg: RoofConfig = serde_json::from_str(r#"{"m": 9, "restarts": 2, "max_iters": 10, "seed": 5}"#).unwrap();
    assert_eq!(cfg.m, Some(9));
    assert_eq!(cfg.restarts, 2);
    assert_eq!(cfg.step, RoofConfig::default().step);
    let rho = werner_state::<f64>(0.5);
    let r = convex_roof_estimate(&SchmidtMonotone::SL, &rho, 2, 2, &cfg).unwrap();
    assert_eq!(r.ensemble_size, 9);
    assert_eq!(r.trace.len(), 2);
    assert!(!r.converged);
    assert!(r.require_converged().is_err());
}
