//! The space corpus: the point, projective spaces, smooth curves and finite
//! products, each packaged with its tangent data.

use std::fmt;
use std::sync::Arc;

use crate::characteristic::{chern_character, todd_class, BundleData};
use crate::graded_ring::{tensor, AlgebraBuilder, BigradedAlgebra, HodgeClass};
use crate::{q, sign, Error, Result, Q};

#[derive(Clone, Debug)]
pub enum SpaceKind {
    Point,
    Projective(u32),
    Curve(u32),
    Product(Arc<SpaceModel>, Arc<SpaceModel>),
}

/// Which factor of a binary product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Factor {
    First,
    Second,
}

/// A Hodge cohomology ring decorated with the characteristic classes the
/// transform and pairing formulas consume.
#[derive(Clone)]
pub struct SpaceModel {
    label: String,
    kind: SpaceKind,
    ring: Arc<BigradedAlgebra>,
    tangent_ch: HodgeClass,
    todd: HodgeClass,
    canonical_ch: HodgeClass,
    serre_ch: HodgeClass,
}

impl fmt::Debug for SpaceModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SpaceModel({})", self.label)
    }
}

impl SpaceModel {
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn kind(&self) -> &SpaceKind {
        &self.kind
    }

    pub fn ring(&self) -> &Arc<BigradedAlgebra> {
        &self.ring
    }

    pub fn n(&self) -> u32 {
        self.ring.n()
    }

    /// `ch(T_X)`.
    pub fn tangent_ch(&self) -> &HodgeClass {
        &self.tangent_ch
    }

    /// `td(T_X)`.
    pub fn todd(&self) -> &HodgeClass {
        &self.todd
    }

    /// `ch(Ω^n_X)`.
    pub fn canonical_ch(&self) -> &HodgeClass {
        &self.canonical_ch
    }

    /// `ch(S_X) = (-1)^n ch(Ω^n_X)`, the character of the shifted canonical
    /// bundle defining the Serre functor.
    pub fn serre_ch(&self) -> &HodgeClass {
        &self.serre_ch
    }

    pub fn todd_inverse(&self) -> HodgeClass {
        self.todd.inverse().expect("Todd class has unit constant term")
    }

    pub fn basis(&self) -> Vec<HodgeClass> {
        HodgeClass::basis_of(&self.ring)
    }

    /// Factors of a product space.
    pub fn factors(&self) -> Option<(&Arc<SpaceModel>, &Arc<SpaceModel>)> {
        match &self.kind {
            SpaceKind::Product(a, b) => Some((a, b)),
            _ => None,
        }
    }

    pub fn factor(&self, which: Factor) -> Result<&Arc<SpaceModel>> {
        let (a, b) = self.factors().ok_or(Error::NotATensor)?;
        Ok(match which {
            Factor::First => a,
            Factor::Second => b,
        })
    }

    pub fn same_as(&self, other: &SpaceModel) -> bool {
        self.ring.same_as(&other.ring)
    }

    /// Same decorations with a replaced Todd class. Only for negative
    /// controls: the result is no longer a consistent space model.
    pub(crate) fn with_todd(&self, todd: HodgeClass) -> Arc<SpaceModel> {
        let mut s = self.clone();
        s.label = format!("{}[td overridden]", self.label);
        s.todd = todd;
        Arc::new(s)
    }

    fn decorate(
        label: String,
        kind: SpaceKind,
        ring: Arc<BigradedAlgebra>,
        tangent_ch: HodgeClass,
        todd: HodgeClass,
        canonical_ch: HodgeClass,
    ) -> Arc<SpaceModel> {
        let serre_ch = canonical_ch.scale(&sign(ring.n()));
        Arc::new(SpaceModel { label, kind, ring, tangent_ch, todd, canonical_ch, serre_ch })
    }
}

/// `Spec K`: one basis element, dimension 0.
pub fn point() -> Arc<SpaceModel> {
    let mut b = AlgebraBuilder::new(0);
    b.monomial("1", 0, 0);
    let ring = b.build().expect("point ring");
    let one = HodgeClass::one(&ring);
    SpaceModel::decorate("pt".into(), SpaceKind::Point, ring.clone(), HodgeClass::zero(&ring), one.clone(), one)
}

fn power_name(p: u32) -> String {
    match p {
        0 => "1".into(),
        1 => "h".into(),
        _ => format!("h^{p}"),
    }
}

/// The truncated polynomial ring `k[h]/(h^{n+1})`, `h^p` in bidegree `(p,p)`.
fn projective_ring(n: u32) -> Arc<BigradedAlgebra> {
    let mut b = AlgebraBuilder::new(n);
    let idx: Vec<usize> = (0..=n).map(|p| b.monomial(power_name(p), p, p)).collect();
    for i in 1..=n {
        for j in 1..=n - i {
            b.product(idx[i as usize], idx[j as usize], idx[(i + j) as usize], q(1));
        }
    }
    b.build().expect("projective ring")
}

/// `P^n` for `1 ≤ n ≤ 4`.
pub fn projective_space(n: u32) -> Result<Arc<SpaceModel>> {
    if !(1..=4).contains(&n) {
        return Err(Error::OutOfRange { what: "projective dimension", value: n as i64, range: "1..=4" });
    }
    let ring = projective_ring(n);
    let h = HodgeClass::basis_element(&ring, 1);
    // Euler sequence: ch(T) = (n+1) e^h - 1
    let o1 = chern_character(&BundleData::line(h.clone()), &ring)?;
    let tangent_ch = o1.scale(&q(n as i64 + 1)).sub(&HodgeClass::one(&ring))?;
    let todd = todd_class(&BundleData::from_ch(n as i64, tangent_ch.clone())?, &ring)?;
    let canonical_ch = chern_character(&BundleData::line(h.scale(&q(-(n as i64) - 1))), &ring)?;
    Ok(SpaceModel::decorate(format!("P{n}"), SpaceKind::Projective(n), ring, tangent_ch, todd, canonical_ch))
}

/// A smooth projective curve of genus `g ≤ 3`: basis `1, a_i, b_i, w` with
/// `a_i` in `H^1(O)`, `b_i` in `H^0(Ω)`, `a_i b_j = δ_ij w = -b_j a_i`.
pub fn curve(g: u32) -> Result<Arc<SpaceModel>> {
    if g > 3 {
        return Err(Error::OutOfRange { what: "genus", value: g as i64, range: "0..=3" });
    }
    let mut b = AlgebraBuilder::new(1);
    b.monomial("1", 0, 0);
    let a: Vec<usize> = (1..=g).map(|i| b.monomial(format!("a{i}"), 0, 1)).collect();
    let bs: Vec<usize> = (1..=g).map(|i| b.monomial(format!("b{i}"), 1, 0)).collect();
    let w = b.monomial("w", 1, 1);
    for (ai, bi) in a.iter().zip(&bs) {
        b.product(*ai, *bi, w, q(1));
        b.product(*bi, *ai, w, q(-1));
    }
    let ring = b.build().expect("curve ring");
    let wc = HodgeClass::basis_element(&ring, w);
    let euler = 2 - 2 * g as i64;
    let tangent_ch = chern_character(&BundleData::line(wc.scale(&q(euler))), &ring)?;
    let todd = todd_class(&BundleData::line(wc.scale(&q(euler))), &ring)?;
    let canonical_ch = chern_character(&BundleData::line(wc.scale(&q(-euler))), &ring)?;
    let label = if g == 1 { "E".to_string() } else { format!("C{g}") };
    Ok(SpaceModel::decorate(label, SpaceKind::Curve(g), ring, tangent_ch, todd, canonical_ch))
}

/// `X × Y` with the Künneth ring `H(X) ⊗ H(Y)`.
pub fn product(x: &Arc<SpaceModel>, y: &Arc<SpaceModel>) -> Arc<SpaceModel> {
    let ring = tensor(&x.ring, &y.ring);
    let t = |a: &HodgeClass, b: &HodgeClass| HodgeClass::tensor(a, b, &ring).expect("factor classes");
    let one_x = HodgeClass::one(&x.ring);
    let one_y = HodgeClass::one(&y.ring);
    let tangent_ch = t(&x.tangent_ch, &one_y).add(&t(&one_x, &y.tangent_ch)).expect("same ring");
    let todd = t(&x.todd, &y.todd);
    let canonical_ch = t(&x.canonical_ch, &y.canonical_ch);
    SpaceModel::decorate(format!("{}×{}", x.label, y.label), SpaceKind::Product(x.clone(), y.clone()), ring, tangent_ch, todd, canonical_ch)
}

/// Left fold of [`product`] over a non-empty list.
pub fn product_of(factors: &[Arc<SpaceModel>]) -> Result<Arc<SpaceModel>> {
    let (first, rest) = factors.split_first().ok_or_else(|| Error::Record("product needs at least one factor".into()))?;
    Ok(rest.iter().fold(first.clone(), |acc, f| product(&acc, f)))
}

/// Pullback along a projection `P = X × Y → X` (or `→ Y`): inserts the unit
/// in the other factor.
pub fn pullback_proj(x: &HodgeClass, which: Factor, p: &SpaceModel) -> Result<HodgeClass> {
    let (a, b) = p.factors().ok_or(Error::NotATensor)?;
    match which {
        Factor::First => {
            if !a.ring.same_as(x.ring()) {
                return Err(Error::FactorMismatch(format!("class does not live on {}", a.label)));
            }
            HodgeClass::tensor(x, &HodgeClass::one(&b.ring), &p.ring)
        }
        Factor::Second => {
            if !b.ring.same_as(x.ring()) {
                return Err(Error::FactorMismatch(format!("class does not live on {}", b.label)));
            }
            HodgeClass::tensor(&HodgeClass::one(&a.ring), x, &p.ring)
        }
    }
}

/// Pushforward along a projection: integrates out the complementary factor.
/// Only top-degree (even) pieces survive integration, so no sign arises.
pub fn pushforward_proj(x: &HodgeClass, onto: Factor, p: &SpaceModel) -> Result<HodgeClass> {
    if !p.ring.same_as(x.ring()) {
        return Err(Error::FactorMismatch(format!("class does not live on {}", p.label)));
    }
    let (a, b) = p.factors().ok_or(Error::NotATensor)?;
    let c = x.tensor_coefficients()?;
    match onto {
        Factor::Second => {
            let top = a.ring.top_index();
            HodgeClass::from_coeffs(&b.ring, c.row(top).to_vec())
        }
        Factor::First => {
            let top = b.ring.top_index();
            HodgeClass::from_coeffs(&a.ring, (0..c.rows()).map(|i| c[(i, top)].clone()).collect())
        }
    }
}

/// Chern character of the standard degree-`d` line bundle: `O(d)` on `P^n`,
/// a degree-`d` bundle on a curve, and `L_d ⊠ L_d` on products.
pub fn line_bundle_ch(space: &SpaceModel, d: i64) -> Result<HodgeClass> {
    match &space.kind {
        SpaceKind::Point => Ok(HodgeClass::one(&space.ring)),
        SpaceKind::Projective(_) => {
            let h = HodgeClass::basis_element(&space.ring, 1);
            chern_character(&BundleData::line(h.scale(&q(d))), &space.ring)
        }
        SpaceKind::Curve(_) => {
            let w = HodgeClass::basis_element(&space.ring, space.ring.top_index());
            chern_character(&BundleData::line(w.scale(&q(d))), &space.ring)
        }
        SpaceKind::Product(x, y) => HodgeClass::tensor(&line_bundle_ch(x, d)?, &line_bundle_ch(y, d)?, &space.ring),
    }
}

/// The fixed corpus used by the verification suites, in a stable order.
pub fn corpus() -> Vec<Arc<SpaceModel>> {
    let p1 = projective_space(1).expect("P1");
    let e = curve(1).expect("E");
    vec![
        point(),
        p1.clone(),
        projective_space(2).expect("P2"),
        projective_space(3).expect("P3"),
        projective_space(4).expect("P4"),
        curve(0).expect("C0"),
        e.clone(),
        curve(2).expect("C2"),
        curve(3).expect("C3"),
        product(&p1, &p1),
        product(&e, &e),
        product(&p1, &e),
    ]
}

/// `χ(O_X)` computed from the structure of the space: 1 for the point and
/// projective spaces, `1 - g` for curves, multiplicative on products.
pub fn structure_sheaf_euler_characteristic(space: &SpaceModel) -> Q {
    match &space.kind {
        SpaceKind::Point | SpaceKind::Projective(_) => q(1),
        SpaceKind::Curve(g) => q(1 - *g as i64),
        SpaceKind::Product(x, y) => structure_sheaf_euler_characteristic(x) * structure_sheaf_euler_characteristic(y),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characteristic::star;
    use crate::qr;

    fn class(s: &SpaceModel, terms: &[(&str, Q)]) -> HodgeClass {
        HodgeClass::from_terms(s.ring(), terms).unwrap()
    }

    #[test]
    fn projective_line_data() {
        let p1 = projective_space(1).unwrap();
        assert_eq!(*p1.tangent_ch(), class(&p1, &[("1", q(1)), ("h", q(2))]));
        assert_eq!(*p1.todd(), class(&p1, &[("1", q(1)), ("h", q(1))]));
        assert_eq!(*p1.serre_ch(), class(&p1, &[("1", q(-1)), ("h", q(2))]));
    }

    #[test]
    fn projective_plane_todd() {
        let p2 = projective_space(2).unwrap();
        assert_eq!(*p2.todd(), class(&p2, &[("1", q(1)), ("h", qr(3, 2)), ("h^2", q(1))]));
    }

    #[test]
    fn builders_reject_out_of_range() {
        assert!(matches!(projective_space(0), Err(Error::OutOfRange { .. })));
        assert!(matches!(projective_space(5), Err(Error::OutOfRange { .. })));
        assert!(matches!(curve(4), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn curve_data() {
        let e = curve(1).unwrap();
        assert_eq!(*e.todd(), HodgeClass::one(e.ring()));
        let c2 = curve(2).unwrap();
        assert_eq!(c2.todd().integrate(), q(-1));
        assert_eq!(*c2.tangent_ch(), class(&c2, &[("1", q(1)), ("w", q(-2))]));
        assert_eq!(*c2.canonical_ch(), class(&c2, &[("1", q(1)), ("w", q(2))]));
        let c0 = curve(0).unwrap();
        let p1 = projective_space(1).unwrap();
        assert!(c0.ring().isomorphic_by_index(p1.ring()));
    }

    #[test]
    fn todd_integrates_to_euler_characteristic() {
        for s in corpus() {
            assert_eq!(s.todd().integrate(), structure_sheaf_euler_characteristic(&s), "{}", s.label());
        }
    }

    #[test]
    fn serre_and_canonical_identities() {
        for s in corpus() {
            assert_eq!(*s.serre_ch(), s.canonical_ch().scale(&sign(s.n())), "{}", s.label());
            assert_eq!(s.todd().mul(s.canonical_ch()).unwrap(), star(s.todd()), "{}", s.label());
            s.ring().check_graded_commutative().unwrap();
            if s.ring().dim() <= 16 {
                s.ring().check_associative().unwrap();
            }
        }
    }

    #[test]
    fn product_data() {
        let p1 = projective_space(1).unwrap();
        let pp = product(&p1, &p1);
        let td = HodgeClass::tensor(p1.todd(), p1.todd(), pp.ring()).unwrap();
        assert_eq!(*pp.todd(), td);
        assert_eq!(pp.todd().integrate(), q(1));
        let e = curve(1).unwrap();
        assert_eq!(product(&e, &e).ring().dim(), 16);
        let xp = product(&p1, &point());
        assert!(xp.ring().isomorphic_by_index(p1.ring()));
    }

    #[test]
    fn product_is_associative_up_to_reindexing() {
        let p1 = projective_space(1).unwrap();
        let e = curve(1).unwrap();
        let left = product(&product(&p1, &e), &p1);
        let right = product(&p1, &product(&e, &p1));
        assert!(left.ring().isomorphic_by_index(right.ring()));
        assert_eq!(left.todd().coeffs(), right.todd().coeffs());
    }

    #[test]
    fn projections() {
        let p1 = projective_space(1).unwrap();
        let pp = product(&p1, &p1);
        let h = class(&p1, &[("h", q(1))]);
        assert_eq!(pullback_proj(&h, Factor::Second, &pp).unwrap(), class(&pp, &[("1⊗h", q(1))]));
        assert_eq!(pullback_proj(&HodgeClass::one(p1.ring()), Factor::First, &pp).unwrap(), HodgeClass::one(pp.ring()));
        let x = pullback_proj(&h, Factor::First, &pp).unwrap();
        let y = pullback_proj(&h, Factor::Second, &pp).unwrap();
        assert_eq!(x.mul(&y).unwrap(), class(&pp, &[("h⊗h", q(1))]));

        for b in p1.basis() {
            let hx = HodgeClass::tensor(&h, &b, pp.ring()).unwrap();
            assert_eq!(pushforward_proj(&hx, Factor::Second, &pp).unwrap(), b);
            let one_x = HodgeClass::tensor(&HodgeClass::one(p1.ring()), &b, pp.ring()).unwrap();
            assert!(pushforward_proj(&one_x, Factor::Second, &pp).unwrap().is_zero());
        }
        let p2 = projective_space(2).unwrap();
        assert!(matches!(pullback_proj(&HodgeClass::one(p2.ring()), Factor::First, &pp), Err(Error::FactorMismatch(_))));
    }

    #[test]
    fn projection_formula_exhaustive() {
        let p1 = projective_space(1).unwrap();
        let e = curve(1).unwrap();
        for (x_space, y_space) in [(p1.clone(), p1.clone()), (p1.clone(), e.clone()), (e.clone(), p1.clone())] {
            let p = product(&x_space, &y_space);
            for y in y_space.basis() {
                for x in p.basis() {
                    let lhs =
                        pushforward_proj(&pullback_proj(&y, Factor::Second, &p).unwrap().mul(&x).unwrap(), Factor::Second, &p).unwrap();
                    let rhs = y.mul(&pushforward_proj(&x, Factor::Second, &p).unwrap()).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn pushforward_after_pullback_vanishes_unless_point() {
        let p1 = projective_space(1).unwrap();
        let pp = product(&p1, &p1);
        for b in p1.basis() {
            let up = pullback_proj(&b, Factor::Second, &pp).unwrap();
            assert!(pushforward_proj(&up, Factor::Second, &pp).unwrap().is_zero());
        }
        let pt = point();
        let ptp = product(&pt, &p1);
        for b in p1.basis() {
            let up = pullback_proj(&b, Factor::Second, &ptp).unwrap();
            assert_eq!(pushforward_proj(&up, Factor::Second, &ptp).unwrap(), b);
        }
    }

    #[test]
    fn line_bundles() {
        let e = curve(1).unwrap();
        assert_eq!(line_bundle_ch(&e, 3).unwrap(), class(&e, &[("1", q(1)), ("w", q(3))]));
        let p2 = projective_space(2).unwrap();
        assert_eq!(line_bundle_ch(&p2, -1).unwrap(), class(&p2, &[("1", q(1)), ("h", q(-1)), ("h^2", qr(1, 2))]));
    }
}
