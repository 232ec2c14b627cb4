//! The fixed kernel catalog used by the verification suites.

use std::sync::Arc;

use crate::graded_ring::HodgeClass;
use crate::spaces::SpaceModel;
use crate::Result;

use super::{identity_kernel, line_bundle_kernel, random_kernel, rank_one_kernel, Kernel};

/// Line-bundle twists `(a, b)` used for `ch(L_a) ⊗ ch(L_b)` kernels.
pub const LINE_BUNDLE_TWISTS: [(i64, i64); 4] = [(0, 0), (1, -1), (-1, 2), (2, 1)];

/// Number of seeded random kernels per space pair.
pub const RANDOM_KERNELS: u64 = 5;

/// Seed of the `k`-th random kernel for a run seed.
pub fn random_seed(seed: u64, k: u64) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(k)
}

/// All catalog kernels `X → Y`: the identity when `X = Y`, every rank-one
/// basis kernel `e_u ⊗ e_v` of HH degree 0, the line-bundle kernels, and
/// [`RANDOM_KERNELS`] pseudo-random kernels derived from `seed`.
pub fn kernel_catalog(x: &Arc<SpaceModel>, y: &Arc<SpaceModel>, seed: u64) -> Result<Vec<Kernel>> {
    let mut out = Vec::new();
    if x.same_as(y) {
        out.push(identity_kernel(x)?);
    }
    let (xr, yr) = (x.ring(), y.ring());
    for u in 0..xr.dim() {
        for v in 0..yr.dim() {
            if xr.monomial(u).hh_degree() + yr.monomial(v).hh_degree() != 0 {
                continue;
            }
            let k = rank_one_kernel(x, y, &HodgeClass::basis_element(xr, u), &HodgeClass::basis_element(yr, v))?;
            out.push(k.with_label(format!("{}⊗{}", xr.monomial(u).name, yr.monomial(v).name)));
        }
    }
    for (a, b) in LINE_BUNDLE_TWISTS {
        out.push(line_bundle_kernel(x, y, a, b)?);
    }
    for k in 0..RANDOM_KERNELS {
        out.push(random_kernel(x, y, random_seed(seed, k)));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spaces::{curve, projective_space};

    #[test]
    fn catalog_sizes() {
        let p1 = projective_space(1).unwrap();
        let e = curve(1).unwrap();
        assert_eq!(kernel_catalog(&p1, &p1, 0).unwrap().len(), 1 + 4 + 4 + 5);
        assert_eq!(kernel_catalog(&e, &e, 0).unwrap().len(), 1 + 6 + 4 + 5);
        assert_eq!(kernel_catalog(&p1, &e, 0).unwrap().len(), 4 + 4 + 5);
    }

    #[test]
    fn catalog_is_deterministic_in_seed() {
        let e = curve(1).unwrap();
        let a = kernel_catalog(&e, &e, 42).unwrap();
        let b = kernel_catalog(&e, &e, 42).unwrap();
        assert_eq!(a, b);
        let c = kernel_catalog(&e, &e, 43).unwrap();
        assert_ne!(a, c);
    }
}
