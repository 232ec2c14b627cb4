//! Grothendieck-Riemann-Roch in degree 0 for projections `X × Z → Z`,
//! checked against a classical catalog of sheaf cohomology.

use std::sync::Arc;

use num_bigint::BigInt;

use crate::graded_ring::HodgeClass;
use crate::spaces::{line_bundle_ch, product, pushforward_proj, Factor, SpaceKind, SpaceModel};
use crate::{Error, Result, Q};

fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < k {
        return BigInt::from(0);
    }
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `χ(X, L_d)` from known cohomology: on `P^n`, `h^0 = C(n+d, n)` for
/// `d ≥ 0` and `h^n = C(-d-1, n)` for `d ≤ -n-1`, nothing else; on a genus
/// `g` curve, `d + 1 - g`; on the point, 1. Products are outside the catalog.
pub fn euler_characteristic(x: &SpaceModel, d: i64) -> Result<Q> {
    match x.kind() {
        SpaceKind::Point => Ok(crate::q(1)),
        SpaceKind::Projective(n) => {
            let n = *n as i64;
            let h0 = if d >= 0 { binomial(n + d, n) } else { BigInt::from(0) };
            let hn = if d < -n { binomial(-d - 1, n) } else { BigInt::from(0) };
            let chi = if n % 2 == 0 { h0 + hn } else { h0 - hn };
            Ok(Q::from_integer(chi))
        }
        SpaceKind::Curve(g) => Ok(crate::q(d + 1 - *g as i64)),
        SpaceKind::Product(..) => Err(Error::OutsideCatalog(format!("cohomology of line bundles on {}", x.label()))),
    }
}

/// Both sides of `(f × id)_*(ch(α) · π_X^* td_X) = ch((f × id)_* α)` on `Z`
/// for `f: X → pt` and `α = L_a ⊠ L_b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrrReport {
    pub lhs: HodgeClass,
    pub rhs: HodgeClass,
    pub euler_characteristic: Q,
}

impl GrrReport {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Evaluates both sides for the projection `X × Z → Z`. Take `Z` to be the
/// point for `X → pt`.
pub fn grr_projection_check(x: &Arc<SpaceModel>, z: &Arc<SpaceModel>, a: i64, b: i64) -> Result<GrrReport> {
    let chi = euler_characteristic(x, a)?;
    let xz = product(x, z);
    let alpha = HodgeClass::tensor(&line_bundle_ch(x, a)?, &line_bundle_ch(z, b)?, xz.ring())?;
    let td = HodgeClass::tensor(x.todd(), &HodgeClass::one(z.ring()), xz.ring())?;
    let lhs = pushforward_proj(&alpha.mul(&td)?, Factor::Second, &xz)?;
    let rhs = line_bundle_ch(z, b)?.scale(&chi);
    Ok(GrrReport { lhs, rhs, euler_characteristic: chi })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spaces::{curve, point, projective_space};
    use crate::{q, qr};

    #[test]
    fn classical_values() {
        let p1 = projective_space(1).unwrap();
        let p2 = projective_space(2).unwrap();
        for d in -3..=3 {
            assert_eq!(euler_characteristic(&p1, d).unwrap(), q(d + 1));
            assert_eq!(euler_characteristic(&p2, d).unwrap(), qr((d + 1) * (d + 2), 2));
        }
        assert_eq!(euler_characteristic(&curve(2).unwrap(), 0).unwrap(), q(-1));
        let pp = product(&p1, &p1);
        assert!(matches!(euler_characteristic(&pp, 0), Err(Error::OutsideCatalog(_))));
    }

    #[test]
    fn projective_line_to_point() {
        let p1 = projective_space(1).unwrap();
        let pt = point();
        let r = grr_projection_check(&p1, &pt, 3, 0).unwrap();
        assert!(r.holds());
        assert_eq!(r.lhs.integrate(), q(4));
        let r = grr_projection_check(&p1, &pt, -1, 0).unwrap();
        assert!(r.holds());
        assert!(r.lhs.is_zero());
    }

    #[test]
    fn relative_projections() {
        let p1 = projective_space(1).unwrap();
        let e = curve(1).unwrap();
        for a in -3..=3 {
            for b in -2..=2 {
                assert!(grr_projection_check(&p1, &p1, a, b).unwrap().holds());
                assert!(grr_projection_check(&e, &p1, a, b).unwrap().holds());
                assert!(grr_projection_check(&projective_space(3).unwrap(), &e, a, b).unwrap().holds());
            }
        }
    }
}
