//! Fixtures shared by the benchmarks.

use std::sync::Arc;

use hkr_core::spaces::{curve, product, projective_space};
use hkr_core::transforms::random_kernel;
use hkr_core::{HodgeClass, Kernel, SpaceModel};

/// `E × E`, the largest ring in the corpus.
pub fn abelian_surface() -> Arc<SpaceModel> {
    let e = curve(1).expect("E");
    product(&e, &e)
}

/// A dense class with every coefficient set to its basis index plus one.
pub fn dense_class(x: &SpaceModel) -> HodgeClass {
    let coeffs = (0..x.ring().dim()).map(|i| hkr_core::q(i as i64 + 1)).collect();
    HodgeClass::from_coeffs(x.ring(), coeffs).expect("matching length")
}

/// Two composable random kernels `P1 → E → P1`.
pub fn kernel_chain(seed: u64) -> (Kernel, Kernel) {
    let p1 = projective_space(1).expect("P1");
    let e = curve(1).expect("E");
    (random_kernel(&p1, &e, seed), random_kernel(&e, &p1, seed + 1))
}
