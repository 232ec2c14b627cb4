//! Hochschild homology through its Hodge decomposition: classes carry an HH
//! degree `i = form - coh`, and the Mukai and Shklyarov pairings are
//! evaluated by integration against the Todd class.
//!
//! The HKR identification is the identity in this representation, so an
//! [`HHClass`] is a Hodge class tagged with the space whose Todd class the
//! pairings use. On odd HH components the Shklyarov pairing follows the
//! closed formula `∫ a·b·td` verbatim; a different chain-level convention
//! could differ from it by a global sign there.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::characteristic::star;
use crate::graded_ring::HodgeClass;
use crate::linalg::Matrix;
use crate::spaces::SpaceModel;
use crate::{Error, Result, Q};

/// A Hochschild class on a space.
#[derive(Clone, PartialEq, Eq)]
pub struct HHClass {
    space: Arc<SpaceModel>,
    value: HodgeClass,
}

impl fmt::Debug for HHClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on {}", self.value, self.space.label())
    }
}

impl PartialEq for SpaceModel {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other) && self.todd() == other.todd()
    }
}

impl Eq for SpaceModel {}

impl HHClass {
    pub fn new(space: &Arc<SpaceModel>, value: HodgeClass) -> Result<Self> {
        if !space.ring().same_as(value.ring()) {
            return Err(Error::DistinctSpaces);
        }
        Ok(HHClass { space: space.clone(), value })
    }

    pub fn basis_element(space: &Arc<SpaceModel>, i: usize) -> Self {
        HHClass { space: space.clone(), value: HodgeClass::basis_element(space.ring(), i) }
    }

    pub fn basis_of(space: &Arc<SpaceModel>) -> Vec<HHClass> {
        (0..space.ring().dim()).map(|i| Self::basis_element(space, i)).collect()
    }

    pub fn space(&self) -> &Arc<SpaceModel> {
        &self.space
    }

    pub fn value(&self) -> &HodgeClass {
        &self.value
    }

    pub fn into_value(self) -> HodgeClass {
        self.value
    }

    /// Components by HH degree `i = form - coh`; only nonzero parts appear.
    pub fn hh_degree_split(&self) -> BTreeMap<i32, HodgeClass> {
        let mut out: BTreeMap<i32, HodgeClass> = BTreeMap::new();
        let ring = self.value.ring();
        for (k, c) in self.value.terms() {
            let i = ring.monomial(k).hh_degree();
            let part = out.entry(i).or_insert_with(|| HodgeClass::zero(ring));
            part.add_scaled(c, &HodgeClass::basis_element(ring, k)).expect("same ring");
        }
        out
    }

    /// The HH degree if the class is concentrated in one; `None` for zero or
    /// mixed classes.
    pub fn hh_degree(&self) -> Option<i32> {
        let split = self.hh_degree_split();
        match split.len() {
            1 => split.keys().next().copied(),
            _ => None,
        }
    }
}

fn check_pair(a: &HHClass, b: &HHClass) -> Result<()> {
    if a.space.same_as(&b.space) {
        Ok(())
    } else {
        Err(Error::DistinctSpaces)
    }
}

/// `⟨a, b⟩_M = ∫ a* · b · td(T_X)`.
pub fn mukai_pairing(a: &HHClass, b: &HHClass) -> Result<Q> {
    check_pair(a, b)?;
    Ok(star(&a.value).mul(&b.value)?.mul(a.space.todd())?.integrate())
}

/// `⟨a, b⟩_Shk = ∫ a · b · td(T_X)`.
pub fn shklyarov_pairing(a: &HHClass, b: &HHClass) -> Result<Q> {
    check_pair(a, b)?;
    Ok(a.value.mul(&b.value)?.mul(a.space.todd())?.integrate())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pairing {
    Mukai,
    Shklyarov,
}

impl Pairing {
    pub fn evaluate(self, a: &HHClass, b: &HHClass) -> Result<Q> {
        match self {
            Pairing::Mukai => mukai_pairing(a, b),
            Pairing::Shklyarov => shklyarov_pairing(a, b),
        }
    }

    /// `M[i][j] = ⟨e_i, e_j⟩` over the monomial basis of the space.
    pub fn gram_matrix(self, space: &Arc<SpaceModel>) -> Matrix {
        let basis = HHClass::basis_of(space);
        Matrix::from_rows(basis.iter().map(|a| basis.iter().map(|b| self.evaluate(a, b).expect("same space")).collect()).collect())
    }

    pub fn name(self) -> &'static str {
        match self {
            Pairing::Mukai => "mukai",
            Pairing::Shklyarov => "shk",
        }
    }
}

/// The Künneth map `HH(X) ⊗ HH(Y) → HH(X × Y)`, the identity on the tensor
/// basis. HH degrees add.
pub fn kunneth(a: &HHClass, b: &HHClass, product: &Arc<SpaceModel>) -> Result<HHClass> {
    let (x, y) = product.factors().ok_or(Error::NotATensor)?;
    if !x.same_as(&a.space) || !y.same_as(&b.space) {
        return Err(Error::FactorMismatch(format!("{} is not {} × {}", product.label(), a.space.label(), b.space.label())));
    }
    HHClass::new(product, HodgeClass::tensor(&a.value, &b.value, product.ring())?)
}

/// Decomposes a class on `X × Y` as `Σ_u e_u ⊗ β_u` over the basis of `X`,
/// omitting vanishing terms.
pub fn kunneth_inverse(x: &HHClass) -> Result<Vec<(HHClass, HHClass)>> {
    let (a, b) = x.space.factors().ok_or(Error::NotATensor)?;
    let c = x.value.tensor_coefficients()?;
    let mut out = Vec::new();
    for u in 0..c.rows() {
        let beta = HodgeClass::from_coeffs(b.ring(), c.row(u).to_vec())?;
        if !beta.is_zero() {
            out.push((HHClass::basis_element(a, u), HHClass::new(b, beta)?));
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characteristic::vee;
    use crate::graded_ring::koszul_swap;
    use crate::spaces::{corpus, curve, line_bundle_ch, product, projective_space};
    use crate::{q, sign};

    fn cls(s: &Arc<SpaceModel>, terms: &[(&str, Q)]) -> HHClass {
        HHClass::new(s, HodgeClass::from_terms(s.ring(), terms).unwrap()).unwrap()
    }

    #[test]
    fn degree_split() {
        let e = curve(1).unwrap();
        assert_eq!(cls(&e, &[("b1", q(1))]).hh_degree(), Some(1));
        assert_eq!(cls(&e, &[("a1", q(1))]).hh_degree(), Some(-1));
        let x = cls(&e, &[("1", q(2)), ("a1", q(1)), ("b1", q(-3)), ("w", q(1))]);
        let split = x.hh_degree_split();
        assert_eq!(split.keys().copied().collect::<Vec<_>>(), vec![-1, 0, 1]);
        let mut sum = HodgeClass::zero(e.ring());
        for part in split.values() {
            sum = sum.add(part).unwrap();
        }
        assert_eq!(&sum, x.value());
        let p3 = projective_space(3).unwrap();
        for b in HHClass::basis_of(&p3) {
            assert_eq!(b.hh_degree(), Some(0));
        }
    }

    #[test]
    fn mukai_on_elliptic_degree_zero_is_antisymmetric() {
        let e = curve(1).unwrap();
        for (r, d, r2, d2) in [(1, 0, 0, 1), (2, 3, -1, 5), (4, -2, 3, 7)] {
            let x = cls(&e, &[("1", q(r)), ("w", q(d))]);
            let y = cls(&e, &[("1", q(r2)), ("w", q(d2))]);
            assert_eq!(mukai_pairing(&x, &y).unwrap(), q(r * d2 - d * r2));
        }
        let a = cls(&e, &[("a1", q(1))]);
        let b = cls(&e, &[("b1", q(1))]);
        assert_eq!(mukai_pairing(&a, &b).unwrap(), q(-1));
        assert_eq!(shklyarov_pairing(&a, &b).unwrap(), q(1));
        assert_eq!(mukai_pairing(&HHClass::new(&e, vee(b.value())).unwrap(), &a).unwrap(), q(1));
    }

    #[test]
    fn pairings_on_projective_line() {
        let p1 = projective_space(1).unwrap();
        let one = cls(&p1, &[("1", q(1))]);
        let h = cls(&p1, &[("h", q(1))]);
        assert_eq!(mukai_pairing(&one, &h).unwrap(), q(1));
        assert_eq!(mukai_pairing(&one, &one).unwrap(), q(1));
        for i in -3..=3 {
            for j in -3..=3 {
                let a = HHClass::new(&p1, line_bundle_ch(&p1, i).unwrap()).unwrap();
                let b = HHClass::new(&p1, line_bundle_ch(&p1, j).unwrap()).unwrap();
                assert_eq!(shklyarov_pairing(&a, &b).unwrap(), q(i + j + 1));
            }
        }
        assert_eq!(Pairing::Shklyarov.gram_matrix(&p1), Matrix::from_i64(&[&[1, 1], &[1, 0]]));
    }

    #[test]
    fn elliptic_mukai_gram_degree_zero_block() {
        let e = curve(1).unwrap();
        let g = Pairing::Mukai.gram_matrix(&e);
        let (one, w) = (e.ring().index_of("1").unwrap(), e.ring().index_of("w").unwrap());
        assert_eq!(
            Matrix::from_rows(vec![vec![g[(one, one)].clone(), g[(one, w)].clone()], vec![g[(w, one)].clone(), g[(w, w)].clone()]]),
            Matrix::from_i64(&[&[0, 1], &[-1, 0]])
        );
    }

    #[test]
    fn pairings_vanish_across_unbalanced_degrees() {
        for s in corpus() {
            for a in HHClass::basis_of(&s) {
                for b in HHClass::basis_of(&s) {
                    if a.hh_degree().unwrap() + b.hh_degree().unwrap() != 0 {
                        assert_eq!(mukai_pairing(&a, &b).unwrap(), q(0));
                        assert_eq!(shklyarov_pairing(&a, &b).unwrap(), q(0));
                    }
                }
            }
        }
    }

    #[test]
    fn mismatched_spaces_are_rejected() {
        let p1 = projective_space(1).unwrap();
        let p2 = projective_space(2).unwrap();
        let a = HHClass::basis_element(&p1, 0);
        let b = HHClass::basis_element(&p2, 0);
        assert_eq!(mukai_pairing(&a, &b), Err(Error::DistinctSpaces));
        assert!(HHClass::new(&p1, HodgeClass::one(p2.ring())).is_err());
    }

    #[test]
    fn kunneth_roundtrip_and_degrees() {
        let e = curve(1).unwrap();
        let ee = product(&e, &e);
        let b = cls(&e, &[("b1", q(1))]);
        let a = cls(&e, &[("a1", q(1))]);
        let k = kunneth(&b, &a, &ee).unwrap();
        assert_eq!(k.hh_degree(), Some(0));
        let parts = kunneth_inverse(&k).unwrap();
        assert_eq!(parts.len(), 1);
        assert_eq!(parts[0].0, b);
        assert_eq!(parts[0].1, a);

        let p1 = projective_space(1).unwrap();
        let pp = product(&p1, &p1);
        let ch =
            HHClass::new(&pp, HodgeClass::tensor(&line_bundle_ch(&p1, 2).unwrap(), &line_bundle_ch(&p1, -1).unwrap(), pp.ring()).unwrap())
                .unwrap();
        let m = ch.value().tensor_coefficients().unwrap();
        assert_eq!(m, Matrix::from_i64(&[&[1, -1], &[2, -2]]));
        assert!(kunneth(&b, &a, &pp).is_err());
    }

    #[test]
    fn swap_carries_sign_of_hh_degree() {
        let e = curve(1).unwrap();
        let ee = product(&e, &e);
        for x in HHClass::basis_of(&e) {
            for y in HHClass::basis_of(&e) {
                let (i, j) = (x.hh_degree().unwrap(), y.hh_degree().unwrap());
                if i + j != 0 {
                    continue;
                }
                let k = kunneth(&x, &y, &ee).unwrap();
                let swapped = koszul_swap(k.value()).unwrap();
                let flipped = HodgeClass::tensor(y.value(), x.value(), swapped.ring()).unwrap();
                assert_eq!(swapped, flipped.scale(&sign(i.unsigned_abs())));
            }
        }
    }

    #[test]
    fn mukai_and_shklyarov_agree_on_balanced_even_classes() {
        for s in corpus() {
            let even: Vec<_> = HHClass::basis_of(&s)
                .into_iter()
                .filter(|c| {
                    let m = c.value().homogeneous_bidegree().unwrap();
                    m.0 == m.1
                })
                .collect();
            for a in &even {
                for b in &even {
                    let va = HHClass::new(&s, vee(a.value())).unwrap();
                    assert_eq!(mukai_pairing(a, b).unwrap(), shklyarov_pairing(&va, b).unwrap());
                }
            }
        }
    }
}
