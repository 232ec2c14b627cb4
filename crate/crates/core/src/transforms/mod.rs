//! Integral transforms on Hochschild homology, realised as convolution with
//! the Chern character of a kernel on `X × Y`.
//!
//! A kernel is stored by its class `ch = Σ C[u][v] e_u ⊗ e_v` on the product
//! ring; the coefficient matrix `C` is its Künneth decomposition.

use std::fmt;
use std::sync::Arc;

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::characteristic::w_involution;
use crate::graded_ring::{diagonal_pushforward_into, HodgeClass};
use crate::hochschild::{mukai_pairing, HHClass};
use crate::linalg::Matrix;
use crate::spaces::{line_bundle_ch, point, product, SpaceModel};
use crate::{qr, sign, Error, Result};

pub mod catalog;
pub mod grr;

pub use catalog::kernel_catalog;
pub use grr::{euler_characteristic, grr_projection_check, GrrReport};

/// The class `Ch(Φ)` of a transform `X → Y`.
#[derive(Clone)]
pub struct Kernel {
    source: Arc<SpaceModel>,
    target: Arc<SpaceModel>,
    product: Arc<SpaceModel>,
    ch: HodgeClass,
    label: String,
}

impl fmt::Debug for Kernel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Kernel({}: {} → {}; {})", self.label, self.source.label(), self.target.label(), self.ch)
    }
}

impl PartialEq for Kernel {
    fn eq(&self, other: &Self) -> bool {
        self.source.same_as(&other.source) && self.target.same_as(&other.target) && self.ch.coeffs() == other.ch.coeffs()
    }
}

/// `S[u][v] = ∫ e_u · e_v · td` on the basis of `X`.
pub fn shklyarov_gram(x: &SpaceModel) -> Matrix {
    let ring = x.ring();
    let gram = ring.gram().expect("corpus spaces satisfy Poincaré duality");
    let d = ring.dim();
    let mut s = Matrix::zeros(d, d);
    for v in 0..d {
        let vt = HodgeClass::basis_element(ring, v).mul(x.todd()).expect("same ring");
        let col = gram.left_apply(vt.coeffs());
        // col[u] = ∫ e_v td e_u; graded commutativity moves e_u to the front
        for (u, c) in col.into_iter().enumerate() {
            let flip = sign(ring.monomial(u).total_degree() * ring.monomial(v).total_degree());
            s[(u, v)] = c * flip;
        }
    }
    s
}

impl Kernel {
    /// Wraps a class on `source × target`. The class must have HH degree 0.
    pub fn new(source: &Arc<SpaceModel>, target: &Arc<SpaceModel>, ch: HodgeClass, label: impl Into<String>) -> Result<Self> {
        let prod = product(source, target);
        if !prod.ring().same_as(ch.ring()) {
            return Err(Error::FactorMismatch(format!("kernel class does not live on {}", prod.label())));
        }
        for (k, _) in ch.terms() {
            if ch.ring().monomial(k).hh_degree() != 0 {
                return Err(Error::KernelDegree);
            }
        }
        Ok(Kernel { source: source.clone(), target: target.clone(), product: prod, ch, label: label.into() })
    }

    pub fn from_coefficients(source: &Arc<SpaceModel>, target: &Arc<SpaceModel>, c: &Matrix, label: impl Into<String>) -> Result<Self> {
        let prod = product(source, target);
        let ch = HodgeClass::from_tensor_coefficients(prod.ring(), c)?;
        Kernel::new(source, target, ch, label)
    }

    pub fn source(&self) -> &Arc<SpaceModel> {
        &self.source
    }

    pub fn target(&self) -> &Arc<SpaceModel> {
        &self.target
    }

    /// The product space `source × target` carrying the class.
    pub fn product(&self) -> &Arc<SpaceModel> {
        &self.product
    }

    pub fn ch(&self) -> &HodgeClass {
        &self.ch
    }

    pub fn ch_class(&self) -> HHClass {
        HHClass::new(&self.product, self.ch.clone()).expect("kernel class lives on its product")
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    /// Künneth coefficient matrix `C` with `ch = Σ C[u][v] e_u ⊗ e_v`.
    pub fn coefficients(&self) -> Matrix {
        self.ch.tensor_coefficients().expect("kernel class lives on a product")
    }

    fn check_input(&self, x: &HHClass) -> Result<()> {
        if self.source.same_as(x.space()) {
            Ok(())
        } else {
            Err(Error::FactorMismatch(format!("input lives on {}, kernel source is {}", x.space().label(), self.source.label())))
        }
    }

    /// `x ↦ Σ C[u][v] (∫_X x · e_u · td_X) e_v`.
    pub fn convolve(&self, x: &HHClass) -> Result<HHClass> {
        self.check_input(x)?;
        let ring = self.source.ring();
        let xt = x.value().mul(self.source.todd())?;
        let weights = ring.gram()?.left_apply(xt.coeffs());
        let out = self.coefficients().left_apply(&weights);
        HHClass::new(&self.target, HodgeClass::from_coeffs(self.target.ring(), out)?)
    }

    /// `x ↦ Σ C[u][v] ⟨W(x), e_u⟩_M e_v`: pairs `x ⊗ Ch(Φ)` with the Mukai
    /// pairing on the first factor.
    pub fn mukai_convolve(&self, x: &HHClass) -> Result<HHClass> {
        self.check_input(x)?;
        let wx = HHClass::new(&self.source, w_involution(x.value()))?;
        let c = self.coefficients();
        let mut out = HodgeClass::zero(self.target.ring());
        for u in 0..c.rows() {
            if c.row(u).iter().all(Zero::is_zero) {
                continue;
            }
            let p = mukai_pairing(&wx, &HHClass::basis_element(&self.source, u))?;
            if p.is_zero() {
                continue;
            }
            let beta = HodgeClass::from_coeffs(self.target.ring(), c.row(u).to_vec())?;
            out.add_scaled(&p, &beta)?;
        }
        HHClass::new(&self.target, out)
    }

    /// Matrix of [`Kernel::convolve`] on the monomial bases: row `i` is the
    /// image of `e_i`.
    pub fn transform_matrix(&self) -> Matrix {
        let rows =
            HHClass::basis_of(&self.source).iter().map(|e| self.convolve(e).expect("basis input").into_value().coeffs().to_vec()).collect();
        Matrix::from_rows(rows)
    }

    /// As [`Kernel::transform_matrix`] for [`Kernel::mukai_convolve`].
    pub fn mukai_transform_matrix(&self) -> Matrix {
        let rows = HHClass::basis_of(&self.source)
            .iter()
            .map(|e| self.mukai_convolve(e).expect("basis input").into_value().coeffs().to_vec())
            .collect();
        Matrix::from_rows(rows)
    }
}

/// `Ψ ∘ Φ` in Künneth components:
/// `Σ C[u][v] C'[s][t] (∫_Y e_v · e_s · td_Y) e_u ⊗ e_t`.
pub fn compose(phi: &Kernel, psi: &Kernel) -> Result<Kernel> {
    if !phi.target.same_as(&psi.source) {
        return Err(Error::FactorMismatch(format!("cannot compose through {} and {}", phi.target.label(), psi.source.label())));
    }
    let s = shklyarov_gram(&phi.target);
    let d = phi.coefficients().mul(&s).mul(&psi.coefficients());
    Kernel::from_coefficients(&phi.source, &psi.target, &d, format!("{}∘{}", psi.label, phi.label))
}

/// `Ψ ∘ Φ` by the pushforward formula
/// `π_XZ*(π_XY^* Ch(Φ) · π_YZ^* Ch(Ψ) · π_Y^* td_Y)` on `(X × Y) × Z`.
pub fn compose_by_pushforward(phi: &Kernel, psi: &Kernel) -> Result<Kernel> {
    if !phi.target.same_as(&psi.source) {
        return Err(Error::FactorMismatch(format!("cannot compose through {} and {}", phi.target.label(), psi.source.label())));
    }
    let (x, y, z) = (&phi.source, &phi.target, &psi.target);
    let xyz = product(&phi.product, z);
    let x_yz = product(x, &psi.product);
    let one_x = HodgeClass::one(x.ring());
    let one_z = HodgeClass::one(z.ring());
    let pull_xy = HodgeClass::tensor(&phi.ch, &one_z, xyz.ring())?;
    let pull_yz = HodgeClass::tensor(&one_x, &psi.ch, x_yz.ring())?.transport(xyz.ring())?;
    let td_y = HodgeClass::tensor(&HodgeClass::tensor(&one_x, y.todd(), phi.product.ring())?, &one_z, xyz.ring())?;
    let integrand = pull_xy.mul(&pull_yz)?.mul(&td_y)?;
    // integrate out the middle factor; its top class is even, so no sign
    let (dy, dz) = (y.ring().dim(), z.ring().dim());
    let top = y.ring().top_index();
    let mut d = Matrix::zeros(x.ring().dim(), dz);
    for u in 0..x.ring().dim() {
        for t in 0..dz {
            d[(u, t)] = integrand.coeff((u * dy + top) * dz + t).clone();
        }
    }
    Kernel::from_coefficients(x, z, &d, format!("{}∘{}", psi.label, phi.label))
}

/// `Ch(O_Δ) = Δ_*(td_X^{-1})`.
pub fn identity_kernel(x: &Arc<SpaceModel>) -> Result<Kernel> {
    let xx = product(x, x);
    let ch = diagonal_pushforward_into(&x.todd_inverse(), xx.ring())?;
    Kernel::new(x, x, ch, "id")
}

/// `Σ_k e_k ⊗ f_k` where `{f_k}` is dual to the monomial basis under the
/// Shklyarov pairing, `⟨f_k, e_l⟩_Shk = δ_kl`.
pub fn identity_kernel_from_dual_bases(x: &Arc<SpaceModel>) -> Result<Kernel> {
    let s = shklyarov_gram(x);
    let c = s.inverse().ok_or(Error::DegenerateRing)?;
    Kernel::from_coefficients(x, x, &c, "id[dual bases]")
}

/// `P[k][l] = ⟨f_k, e_l⟩_Shk` for the Künneth components `f_k` of a kernel
/// `Σ e_k ⊗ f_k` on `X × X`.
pub fn dual_basis_pairing_matrix(kernel: &Kernel) -> Result<Matrix> {
    if !kernel.source.same_as(&kernel.target) {
        return Err(Error::FactorMismatch("dual bases need an endo-kernel".into()));
    }
    let x = &kernel.source;
    let c = kernel.coefficients();
    let basis = HHClass::basis_of(x);
    let mut p = Matrix::zeros(c.rows(), c.cols());
    for k in 0..c.rows() {
        let f = HHClass::new(x, HodgeClass::from_coeffs(x.ring(), c.row(k).to_vec())?)?;
        for (l, e) in basis.iter().enumerate() {
            p[(k, l)] = crate::hochschild::shklyarov_pairing(&f, e)?;
        }
    }
    Ok(p)
}

/// `Ch(Φ^!) = Σ (-1)^i W(β) ⊗ W(α) · ch(S_X)` over Künneth components
/// `α ⊗ β` with `α ∈ HH_i(X)`.
pub fn adjoint(phi: &Kernel) -> Result<Kernel> {
    let (x, y) = (&phi.source, &phi.target);
    let yx = product(y, x);
    let c = phi.coefficients();
    let mut ch = HodgeClass::zero(yx.ring());
    for (u, alpha) in HodgeClass::basis_of(x.ring()).into_iter().enumerate() {
        let beta = HodgeClass::from_coeffs(y.ring(), c.row(u).to_vec())?;
        if beta.is_zero() {
            continue;
        }
        let i = x.ring().monomial(u).hh_degree();
        let left = w_involution(&beta);
        let right = w_involution(&alpha).mul(x.serre_ch())?;
        ch.add_scaled(&sign(i.unsigned_abs()), &HodgeClass::tensor(&left, &right, yx.ring())?)?;
    }
    Kernel::new(y, x, ch, format!("{}^!", phi.label))
}

/// `Φ ⊠ Φ'`: `X × X' → Y × Y'` with
/// `(α ⊗ β) ⊠ (α' ⊗ β') = (-1)^{|β||α'|} (α ⊗ α') ⊗ (β ⊗ β')`.
pub fn external_product(phi: &Kernel, phi2: &Kernel) -> Result<Kernel> {
    let src = product(&phi.source, &phi2.source);
    let tgt = product(&phi.target, &phi2.target);
    let (c, c2) = (phi.coefficients(), phi2.coefficients());
    let (x2, y, y2) = (phi2.source.ring(), phi.target.ring(), phi2.target.ring());
    let mut d = Matrix::zeros(src.ring().dim(), tgt.ring().dim());
    for u in 0..c.rows() {
        for v in 0..c.cols() {
            if c[(u, v)].is_zero() {
                continue;
            }
            for s in 0..c2.rows() {
                for t in 0..c2.cols() {
                    if c2[(s, t)].is_zero() {
                        continue;
                    }
                    let sg = sign(y.monomial(v).total_degree() * x2.monomial(s).total_degree());
                    d[(u * x2.dim() + s, v * y2.dim() + t)] = &c[(u, v)] * &c2[(s, t)] * sg;
                }
            }
        }
    }
    Kernel::from_coefficients(&src, &tgt, &d, format!("{}⊠{}", phi.label, phi2.label))
}

/// `α ⊗ β`.
pub fn rank_one_kernel(source: &Arc<SpaceModel>, target: &Arc<SpaceModel>, alpha: &HodgeClass, beta: &HodgeClass) -> Result<Kernel> {
    let prod = product(source, target);
    let ch = HodgeClass::tensor(alpha, beta, prod.ring())?;
    Kernel::new(source, target, ch, format!("({alpha})⊗({beta})"))
}

/// `ch(L_a) ⊗ ch(L_b)` for the standard line bundles of each factor.
pub fn line_bundle_kernel(source: &Arc<SpaceModel>, target: &Arc<SpaceModel>, a: i64, b: i64) -> Result<Kernel> {
    let k = rank_one_kernel(source, target, &line_bundle_ch(source, a)?, &line_bundle_ch(target, b)?)?;
    Ok(k.with_label(format!("L({a})⊠L({b})")))
}

pub fn zero_kernel(source: &Arc<SpaceModel>, target: &Arc<SpaceModel>) -> Kernel {
    let prod = product(source, target);
    Kernel::new(source, target, HodgeClass::zero(prod.ring()), "0").expect("zero class")
}

/// A pseudo-random kernel: each HH-degree-0 slot `(u, v)` is filled with
/// probability 1/2 by `p/q`, `p ∈ [-4, 4]`, `q ∈ [1, 3]`.
pub fn random_kernel(source: &Arc<SpaceModel>, target: &Arc<SpaceModel>, seed: u64) -> Kernel {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (xr, yr) = (source.ring(), target.ring());
    let mut c = Matrix::zeros(xr.dim(), yr.dim());
    for u in 0..xr.dim() {
        for v in 0..yr.dim() {
            if xr.monomial(u).hh_degree() + yr.monomial(v).hh_degree() != 0 {
                continue;
            }
            if rng.gen_bool(0.5) {
                c[(u, v)] = qr(rng.gen_range(-4..=4), rng.gen_range(1..=3));
            }
        }
    }
    Kernel::from_coefficients(source, target, &c, format!("random({seed})")).expect("degree-0 slots only")
}

/// `μ_Φ(x)` through the point: `x ⊗ Ch(Φ)` is contracted by the kernel
/// `Δ: X × X → pt`, i.e. `Φ = (Δ ⊠ id_Y) ∘ (id_X ⊠ Φ_{pt → X×Y})`.
pub fn convolve_through_point(phi: &Kernel, x: &HHClass) -> Result<HHClass> {
    let (xs, ys) = (&phi.source, &phi.target);
    let pt = point();
    // Φ as a kernel from the point to X × Y
    let phi_pt = Kernel::new(
        &pt,
        &phi.product,
        HodgeClass::tensor(&HodgeClass::one(pt.ring()), &phi.ch, product(&pt, &phi.product).ring())?,
        "Φ_pt",
    )?;
    let first = external_product(&identity_kernel(xs)?, &phi_pt)?;
    // X × (X × Y) and (X × X) × Y share one tensor basis
    let xx = product(xs, xs);
    let delta_ch = HodgeClass::tensor(&identity_kernel(xs)?.ch, &HodgeClass::one(pt.ring()), product(&xx, &pt).ring())?;
    let delta = Kernel::new(&xx, &pt, delta_ch, "Δ")?;
    let second = external_product(&delta, &identity_kernel(ys)?)?;

    let x_pt = product(xs, &pt);
    let input = HHClass::new(&x_pt, x.value().transport(x_pt.ring())?)?;
    let mid = first.convolve(&input)?;
    let mid = HHClass::new(second.source(), mid.value().transport(second.source().ring())?)?;
    let out = second.convolve(&mid)?;
    HHClass::new(ys, out.value().transport(ys.ring())?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spaces::{corpus, curve, projective_space};
    use crate::{q, Q};

    fn cls(s: &Arc<SpaceModel>, terms: &[(&str, Q)]) -> HodgeClass {
        HodgeClass::from_terms(s.ring(), terms).unwrap()
    }

    fn hh(s: &Arc<SpaceModel>, v: HodgeClass) -> HHClass {
        HHClass::new(s, v).unwrap()
    }

    #[test]
    fn identity_kernel_on_projective_line() {
        let p1 = projective_space(1).unwrap();
        let id = identity_kernel(&p1).unwrap();
        let pp = id.product().clone();
        assert_eq!(*id.ch(), cls(&pp, &[("1⊗h", q(1)), ("h⊗1", q(1)), ("h⊗h", q(-1))]));
        for e in HHClass::basis_of(&p1) {
            assert_eq!(id.convolve(&e).unwrap(), e);
        }
        assert!(dual_basis_pairing_matrix(&id).unwrap().is_identity());
        assert_eq!(id, identity_kernel_from_dual_bases(&p1).unwrap());
    }

    #[test]
    fn identity_kernel_is_identity_on_small_corpus() {
        for s in corpus() {
            if s.ring().dim() > 16 {
                continue;
            }
            let id = identity_kernel(&s).unwrap();
            assert!(id.transform_matrix().is_identity(), "{}", s.label());
            assert_eq!(id, identity_kernel_from_dual_bases(&s).unwrap(), "{}", s.label());
            assert!(dual_basis_pairing_matrix(&id).unwrap().is_identity(), "{}", s.label());
        }
    }

    #[test]
    fn unit_kernel_on_projective_line() {
        let p1 = projective_space(1).unwrap();
        let k = rank_one_kernel(&p1, &p1, &HodgeClass::one(p1.ring()), &HodgeClass::one(p1.ring())).unwrap();
        let out = k.convolve(&hh(&p1, HodgeClass::one(p1.ring()))).unwrap();
        assert_eq!(*out.value(), HodgeClass::one(p1.ring()));
        let adj = adjoint(&k).unwrap();
        assert_eq!(*adj.ch(), cls(adj.product(), &[("1⊗1", q(-1)), ("1⊗h", q(2))]));
    }

    #[test]
    fn rank_one_convolution() {
        let e = curve(1).unwrap();
        let p1 = projective_space(1).unwrap();
        let alpha = cls(&e, &[("1", q(2)), ("w", q(1))]);
        let beta = cls(&p1, &[("1", q(1)), ("h", q(-3))]);
        let k = rank_one_kernel(&e, &p1, &alpha, &beta).unwrap();
        for x in HHClass::basis_of(&e) {
            let expected = beta.scale(&x.value().mul(&alpha).unwrap().mul(e.todd()).unwrap().integrate());
            assert_eq!(*k.convolve(&x).unwrap().value(), expected);
        }
    }

    #[test]
    fn kernels_must_have_degree_zero() {
        let e = curve(1).unwrap();
        let a = cls(&e, &[("a1", q(1))]);
        let one = HodgeClass::one(e.ring());
        assert_eq!(rank_one_kernel(&e, &e, &a, &one).unwrap_err(), Error::KernelDegree);
        assert!(rank_one_kernel(&e, &e, &a, &cls(&e, &[("b1", q(1))])).is_ok());
    }

    #[test]
    fn zero_kernel_is_zero_map() {
        let e = curve(1).unwrap();
        let z = zero_kernel(&e, &e);
        assert!(z.transform_matrix().is_zero());
        assert!(z.mukai_transform_matrix().is_zero());
    }

    #[test]
    fn mukai_convolution_matches_on_random_elliptic_kernels() {
        let e = curve(1).unwrap();
        for seed in 0..5 {
            let k = random_kernel(&e, &e, seed);
            assert_eq!(k.transform_matrix(), k.mukai_transform_matrix());
        }
    }

    #[test]
    fn composition_routes_agree_and_units_are_neutral() {
        let p1 = projective_space(1).unwrap();
        let e = curve(1).unwrap();
        let phi = random_kernel(&p1, &e, 3);
        let psi = random_kernel(&e, &p1, 4);
        assert_eq!(compose(&phi, &psi).unwrap(), compose_by_pushforward(&phi, &psi).unwrap());
        assert_eq!(compose(&phi, &identity_kernel(&e).unwrap()).unwrap(), phi);
        assert_eq!(compose(&identity_kernel(&p1).unwrap(), &phi).unwrap(), phi);
        let ee = random_kernel(&e, &e, 9);
        let ee2 = random_kernel(&e, &e, 10);
        assert_eq!(compose(&ee, &ee2).unwrap(), compose_by_pushforward(&ee, &ee2).unwrap());
        assert!(compose(&phi, &phi).is_err());
    }

    #[test]
    fn rank_one_composition() {
        let p1 = projective_space(1).unwrap();
        let a = cls(&p1, &[("1", q(1)), ("h", q(2))]);
        let b = cls(&p1, &[("1", q(3)), ("h", q(-1))]);
        let c = cls(&p1, &[("h", q(1))]);
        let d = cls(&p1, &[("1", q(-2))]);
        let composed = compose(&rank_one_kernel(&p1, &p1, &a, &b).unwrap(), &rank_one_kernel(&p1, &p1, &c, &d).unwrap()).unwrap();
        let factor = b.mul(&c).unwrap().mul(p1.todd()).unwrap().integrate();
        assert_eq!(composed, rank_one_kernel(&p1, &p1, &a.scale(&factor), &d).unwrap());
    }

    #[test]
    fn functoriality_and_associativity() {
        let p1 = projective_space(1).unwrap();
        let e = curve(1).unwrap();
        let phi = random_kernel(&p1, &e, 11);
        let psi = random_kernel(&e, &p1, 12);
        let theta = random_kernel(&p1, &e, 13);
        let comp = compose(&phi, &psi).unwrap();
        for x in HHClass::basis_of(&p1) {
            assert_eq!(comp.convolve(&x).unwrap(), psi.convolve(&phi.convolve(&x).unwrap()).unwrap());
        }
        let left = compose(&compose(&phi, &psi).unwrap(), &theta).unwrap();
        let right = compose(&phi, &compose(&psi, &theta).unwrap()).unwrap();
        assert_eq!(left, right);
    }

    #[test]
    fn adjointness() {
        let p1 = projective_space(1).unwrap();
        let e = curve(1).unwrap();
        for (x, y, seed) in [(&p1, &e, 1), (&e, &e, 2), (&e, &p1, 3), (&p1, &p1, 4)] {
            let k = random_kernel(x, y, seed);
            let adj = adjoint(&k).unwrap();
            for a in HHClass::basis_of(x) {
                for b in HHClass::basis_of(y) {
                    let lhs = mukai_pairing(&k.convolve(&a).unwrap(), &b).unwrap();
                    let rhs = mukai_pairing(&a, &adj.convolve(&b).unwrap()).unwrap();
                    assert_eq!(lhs, rhs);
                }
            }
        }
        let k = random_kernel(&e, &e, 7);
        assert_eq!(adjoint(&adjoint(&k).unwrap()).unwrap(), k);
    }

    #[test]
    fn external_products() {
        let p1 = projective_space(1).unwrap();
        let e = curve(1).unwrap();
        let pe = product(&p1, &e);
        let id = external_product(&identity_kernel(&p1).unwrap(), &identity_kernel(&e).unwrap()).unwrap();
        assert_eq!(id, identity_kernel(&pe).unwrap());

        let phi = random_kernel(&e, &p1, 5);
        let phi2 = random_kernel(&e, &e, 6);
        let ext = external_product(&phi, &phi2).unwrap();
        let ee = product(&e, &e);
        for a in HHClass::basis_of(&e) {
            for b in HHClass::basis_of(&e) {
                let input = hh(&ee, HodgeClass::tensor(a.value(), b.value(), ee.ring()).unwrap());
                let (fa, fb) = (phi.convolve(&a).unwrap(), phi2.convolve(&b).unwrap());
                let expected = HodgeClass::tensor(fa.value(), fb.value(), ext.target().ring()).unwrap();
                assert_eq!(*ext.convolve(&input).unwrap().value(), expected);
            }
        }
    }

    #[test]
    fn factorization_through_the_point() {
        let p1 = projective_space(1).unwrap();
        let e = curve(1).unwrap();
        for (x, y, seed) in [(&p1, &e, 21), (&e, &e, 22), (&e, &p1, 23)] {
            let k = random_kernel(x, y, seed);
            for a in HHClass::basis_of(x) {
                assert_eq!(convolve_through_point(&k, &a).unwrap(), k.convolve(&a).unwrap());
            }
        }
    }

    #[test]
    fn convolution_preserves_degree() {
        let e = curve(2).unwrap();
        let p1 = projective_space(1).unwrap();
        let k = random_kernel(&e, &e, 1);
        for x in HHClass::basis_of(&e) {
            let y = k.convolve(&x).unwrap();
            if let Some(d) = y.hh_degree() {
                assert_eq!(Some(d), x.hh_degree());
            }
        }
        let k = random_kernel(&e, &p1, 2);
        assert!(k.convolve(&HHClass::basis_element(&p1, 0)).is_err());
    }
}
