//! Finite-dimensional bigraded-commutative algebras with an integration
//! functional, and their elements.
//!
//! A [`BigradedAlgebra`] models `⊕_{p,q} H^q(X, Ω^p)` by an explicit monomial
//! basis and rational structure constants. Each basis element carries a
//! bidegree `(form, coh)`; the Koszul sign of a swap is governed by the total
//! degree `form + coh`. Integration reads off the coefficient of the unique
//! basis element of bidegree `(n, n)`.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Signed, Zero};

use crate::linalg::Matrix;
use crate::series::Series;
use crate::{sign, Error, Result, Q};

/// A named basis monomial of bidegree `(form, coh)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub name: String,
    pub form: u32,
    pub coh: u32,
}

impl Monomial {
    pub fn new(name: impl Into<String>, form: u32, coh: u32) -> Self {
        Monomial { name: name.into(), form, coh }
    }

    pub fn total_degree(&self) -> u32 {
        self.form + self.coh
    }

    /// Hochschild degree `form - coh` of the HKR summand containing this monomial.
    pub fn hh_degree(&self) -> i32 {
        self.form as i32 - self.coh as i32
    }
}

/// Sparse product of two basis elements: `(basis index, coefficient)` pairs.
pub type Product = Vec<(usize, Q)>;

struct Duality {
    gram: Matrix,
    gram_inverse: Matrix,
}

pub struct BigradedAlgebra {
    n: u32,
    basis: Vec<Monomial>,
    products: Vec<Product>,
    unit: usize,
    top: usize,
    factors: Option<(Arc<BigradedAlgebra>, Arc<BigradedAlgebra>)>,
    fingerprint: u64,
    duality: OnceLock<Option<Duality>>,
}

impl fmt::Debug for BigradedAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BigradedAlgebra")
            .field("n", &self.n)
            .field("basis", &self.basis.iter().map(|m| m.name.as_str()).collect::<Vec<_>>())
            .finish()
    }
}

/// Accumulates structure constants for [`BigradedAlgebra::new`]. Products
/// with the unit are filled in automatically.
pub struct AlgebraBuilder {
    n: u32,
    basis: Vec<Monomial>,
    entries: Vec<(usize, usize, usize, Q)>,
}

impl AlgebraBuilder {
    pub fn new(n: u32) -> Self {
        AlgebraBuilder { n, basis: Vec::new(), entries: Vec::new() }
    }

    pub fn monomial(&mut self, name: impl Into<String>, form: u32, coh: u32) -> usize {
        self.basis.push(Monomial::new(name, form, coh));
        self.basis.len() - 1
    }

    /// Records `e_a · e_b += c · e_target`.
    pub fn product(&mut self, a: usize, b: usize, target: usize, c: Q) -> &mut Self {
        self.entries.push((a, b, target, c));
        self
    }

    pub fn build(self) -> Result<Arc<BigradedAlgebra>> {
        let d = self.basis.len();
        let unit = self
            .basis
            .iter()
            .position(|m| m.form == 0 && m.coh == 0)
            .ok_or_else(|| Error::MalformedRing("no basis element of bidegree (0,0)".into()))?;
        let mut products = vec![Product::new(); d * d];
        for i in 0..d {
            products[unit * d + i].push((i, Q::one()));
            if i != unit {
                products[i * d + unit].push((i, Q::one()));
            }
        }
        for (a, b, t, c) in self.entries {
            if a >= d || b >= d || t >= d {
                return Err(Error::MalformedRing("structure constant index out of range".into()));
            }
            if a == unit || b == unit {
                return Err(Error::MalformedRing("unit products are implicit".into()));
            }
            products[a * d + b].push((t, c));
        }
        BigradedAlgebra::new(self.n, self.basis, products)
    }
}

fn normalize(mut p: Product) -> Product {
    p.sort_by_key(|(k, _)| *k);
    let mut out: Product = Vec::with_capacity(p.len());
    for (k, c) in p {
        match out.last_mut() {
            Some((k2, c2)) if *k2 == k => *c2 += c,
            _ => out.push((k, c)),
        }
    }
    out.retain(|(_, c)| !c.is_zero());
    out
}

impl BigradedAlgebra {
    /// Validates and freezes a ring given by its full product table
    /// (`products[a * dim + b]` is `e_a · e_b`).
    pub fn new(n: u32, basis: Vec<Monomial>, products: Vec<Product>) -> Result<Arc<Self>> {
        Self::with_factors(n, basis, products, None)
    }

    fn with_factors(
        n: u32,
        basis: Vec<Monomial>,
        products: Vec<Product>,
        factors: Option<(Arc<BigradedAlgebra>, Arc<BigradedAlgebra>)>,
    ) -> Result<Arc<Self>> {
        let d = basis.len();
        let malformed = |s: String| Err(Error::MalformedRing(s));
        if products.len() != d * d {
            return malformed(format!("product table has {} entries, expected {}", products.len(), d * d));
        }
        if let Some(m) = basis.iter().find(|m| m.form > n || m.coh > n) {
            return malformed(format!("monomial {} has bidegree beyond dimension {n}", m.name));
        }
        let units: Vec<usize> = (0..d).filter(|&i| basis[i].form == 0 && basis[i].coh == 0).collect();
        let tops: Vec<usize> = (0..d).filter(|&i| basis[i].form == n && basis[i].coh == n).collect();
        if units.len() != 1 {
            return malformed(format!("{} basis elements of bidegree (0,0)", units.len()));
        }
        if tops.len() != 1 {
            return malformed(format!("{} basis elements of bidegree ({n},{n})", tops.len()));
        }
        {
            let mut names: Vec<&str> = basis.iter().map(|m| m.name.as_str()).collect();
            names.sort_unstable();
            if names.windows(2).any(|w| w[0] == w[1]) {
                return malformed("duplicate basis names".into());
            }
        }
        let products: Vec<Product> = products.into_iter().map(normalize).collect();
        let unit = units[0];
        for a in 0..d {
            for b in 0..d {
                let (ma, mb) = (&basis[a], &basis[b]);
                for (k, _) in &products[a * d + b] {
                    let mk = basis.get(*k).ok_or_else(|| Error::MalformedRing("product index out of range".into()))?;
                    if mk.form != ma.form + mb.form || mk.coh != ma.coh + mb.coh {
                        return malformed(format!(
                            "{} · {} has a component on {}, violating bidegree additivity",
                            ma.name, mb.name, mk.name
                        ));
                    }
                }
            }
            let one = vec![(a, Q::one())];
            if products[unit * d + a] != one || products[a * d + unit] != one {
                return malformed(format!("unit does not act as identity on {}", basis[a].name));
            }
        }
        let mut h = DefaultHasher::new();
        n.hash(&mut h);
        basis.hash(&mut h);
        products.hash(&mut h);
        Ok(Arc::new(BigradedAlgebra { n, unit, top: tops[0], basis, products, factors, fingerprint: h.finish(), duality: OnceLock::new() }))
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Complex dimension `n` of the modelled space.
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn monomial(&self, i: usize) -> &Monomial {
        &self.basis[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|m| m.name == name)
    }

    pub fn unit_index(&self) -> usize {
        self.unit
    }

    pub fn top_index(&self) -> usize {
        self.top
    }

    /// `e_a · e_b` as a sparse vector.
    pub fn structure_constant(&self, a: usize, b: usize) -> &[(usize, Q)] {
        &self.products[a * self.dim() + b]
    }

    /// Tensor factors when this ring was built by [`tensor`].
    pub fn factors(&self) -> Option<(&Arc<BigradedAlgebra>, &Arc<BigradedAlgebra>)> {
        self.factors.as_ref().map(|(a, b)| (a, b))
    }

    /// Whether two handles denote the same ring (same basis and structure
    /// constants), independent of allocation.
    pub fn same_as(&self, other: &BigradedAlgebra) -> bool {
        std::ptr::eq(self, other) || (self.fingerprint == other.fingerprint && self.n == other.n && self.basis == other.basis)
    }

    /// Equal up to basis names: same bidegrees and structure constants.
    pub fn isomorphic_by_index(&self, other: &BigradedAlgebra) -> bool {
        self.n == other.n
            && self.dim() == other.dim()
            && self.basis.iter().zip(&other.basis).all(|(a, b)| a.form == b.form && a.coh == b.coh)
            && self.products == other.products
    }

    fn duality(&self) -> Result<&Duality> {
        self.duality
            .get_or_init(|| {
                let d = self.dim();
                let mut gram = Matrix::zeros(d, d);
                for a in 0..d {
                    for b in 0..d {
                        if let Some((_, c)) = self.structure_constant(a, b).iter().find(|(k, _)| *k == self.top) {
                            gram[(a, b)] = c.clone();
                        }
                    }
                }
                let gram_inverse = gram.inverse()?;
                Some(Duality { gram, gram_inverse })
            })
            .as_ref()
            .ok_or(Error::DegenerateRing)
    }

    /// Poincaré Gram matrix `G[a][b] = ∫ e_a · e_b`.
    pub fn gram(&self) -> Result<&Matrix> {
        Ok(&self.duality()?.gram)
    }

    pub fn gram_inverse(&self) -> Result<&Matrix> {
        Ok(&self.duality()?.gram_inverse)
    }

    /// Checks `x·y = (-1)^{|x||y|} y·x` on every basis pair; reports the first
    /// failing pair.
    pub fn check_graded_commutative(&self) -> std::result::Result<(), String> {
        let d = self.dim();
        for a in 0..d {
            for b in a + 1..d {
                let s = sign(self.basis[a].total_degree() * self.basis[b].total_degree());
                let ab = &self.products[a * d + b];
                let ba: Product = self.products[b * d + a].iter().map(|(k, c)| (*k, c * &s)).collect();
                if *ab != ba {
                    return Err(format!("{} · {}", self.basis[a].name, self.basis[b].name));
                }
            }
        }
        Ok(())
    }

    /// Checks `(x·y)·z = x·(y·z)` on every basis triple.
    pub fn check_associative(&self) -> std::result::Result<(), String> {
        let d = self.dim();
        let mul_sparse = |left: &[(usize, Q)], right: usize, right_first: bool| -> Product {
            let mut acc = Product::new();
            for (k, c) in left {
                let p = if right_first { &self.products[right * d + k] } else { &self.products[k * d + right] };
                acc.extend(p.iter().map(|(t, c2)| (*t, c * c2)));
            }
            normalize(acc)
        };
        for a in 0..d {
            for b in 0..d {
                let ab = &self.products[a * d + b];
                for c in 0..d {
                    let lhs = mul_sparse(ab, c, false);
                    let rhs = mul_sparse(&self.products[b * d + c], a, true);
                    if lhs != rhs {
                        return Err(format!("({} · {}) · {}", self.basis[a].name, self.basis[b].name, self.basis[c].name));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Graded tensor product `A ⊗ B` with basis `a ⊗ b` (row-major in `(a, b)`)
/// and multiplication `(a⊗b)(a'⊗b') = (-1)^{|b||a'|} (aa') ⊗ (bb')`.
///
/// Results are memoised, so repeated products of the same factors share one
/// ring (and its cached Gram inverse).
pub fn tensor(a: &Arc<BigradedAlgebra>, b: &Arc<BigradedAlgebra>) -> Arc<BigradedAlgebra> {
    type Cache = Mutex<HashMap<(u64, u64), Vec<Arc<BigradedAlgebra>>>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = (a.fingerprint, b.fingerprint);
    let lookup = |map: &HashMap<(u64, u64), Vec<Arc<BigradedAlgebra>>>| {
        map.get(&key).and_then(|rings| rings.iter().find(|r| r.factors().is_some_and(|(x, y)| x.same_as(a) && y.same_as(b))).cloned())
    };
    if let Some(r) = lookup(&cache.lock().expect("tensor cache")) {
        return r;
    }
    let ring = build_tensor(a, b);
    let mut map = cache.lock().expect("tensor cache");
    if let Some(r) = lookup(&map) {
        return r;
    }
    map.entry(key).or_default().push(ring.clone());
    ring
}

fn build_tensor(a: &Arc<BigradedAlgebra>, b: &Arc<BigradedAlgebra>) -> Arc<BigradedAlgebra> {
    let (da, db) = (a.dim(), b.dim());
    let mut basis = Vec::with_capacity(da * db);
    for x in &a.basis {
        for y in &b.basis {
            basis.push(Monomial::new(format!("{}⊗{}", x.name, y.name), x.form + y.form, x.coh + y.coh));
        }
    }
    let d = da * db;
    let mut products = vec![Product::new(); d * d];
    for i in 0..da {
        for j in 0..db {
            let bj = b.basis[j].total_degree();
            for k in 0..da {
                let pa = a.structure_constant(i, k);
                if pa.is_empty() {
                    continue;
                }
                let s = sign(bj * a.basis[k].total_degree());
                for l in 0..db {
                    let pb = b.structure_constant(j, l);
                    if pb.is_empty() {
                        continue;
                    }
                    let slot = &mut products[(i * db + j) * d + (k * db + l)];
                    for (r, c1) in pa {
                        for (t, c2) in pb {
                            slot.push((r * db + t, &s * c1 * c2));
                        }
                    }
                }
            }
        }
    }
    BigradedAlgebra::with_factors(a.n + b.n, basis, products, Some((a.clone(), b.clone()))).expect("tensor product of valid rings is valid")
}

/// An element of a [`BigradedAlgebra`]: a dense rational vector over its basis.
#[derive(Clone)]
pub struct HodgeClass {
    ring: Arc<BigradedAlgebra>,
    coeffs: Vec<Q>,
}

impl PartialEq for HodgeClass {
    fn eq(&self, other: &Self) -> bool {
        self.ring.same_as(&other.ring) && self.coeffs == other.coeffs
    }
}

impl Eq for HodgeClass {}

impl HodgeClass {
    pub fn zero(ring: &Arc<BigradedAlgebra>) -> Self {
        HodgeClass { ring: ring.clone(), coeffs: vec![Q::zero(); ring.dim()] }
    }

    pub fn one(ring: &Arc<BigradedAlgebra>) -> Self {
        Self::basis_element(ring, ring.unit)
    }

    pub fn basis_element(ring: &Arc<BigradedAlgebra>, i: usize) -> Self {
        let mut c = Self::zero(ring);
        c.coeffs[i] = Q::one();
        c
    }

    pub fn basis_of(ring: &Arc<BigradedAlgebra>) -> Vec<HodgeClass> {
        (0..ring.dim()).map(|i| Self::basis_element(ring, i)).collect()
    }

    pub fn from_coeffs(ring: &Arc<BigradedAlgebra>, coeffs: Vec<Q>) -> Result<Self> {
        if coeffs.len() != ring.dim() {
            return Err(Error::LengthMismatch { expected: ring.dim(), got: coeffs.len() });
        }
        Ok(HodgeClass { ring: ring.clone(), coeffs })
    }

    /// Builds `Σ c · e_name`.
    pub fn from_terms<S: AsRef<str>>(ring: &Arc<BigradedAlgebra>, terms: &[(S, Q)]) -> Result<Self> {
        let mut out = Self::zero(ring);
        for (name, c) in terms {
            let i = ring.index_of(name.as_ref()).ok_or_else(|| Error::UnknownBasis(name.as_ref().to_string()))?;
            out.coeffs[i] += c;
        }
        Ok(out)
    }

    pub fn ring(&self) -> &Arc<BigradedAlgebra> {
        &self.ring
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Q {
        &self.coeffs[i]
    }

    /// Coefficient on the named basis element; `None` if the name is unknown.
    pub fn coeff_of(&self, name: &str) -> Option<&Q> {
        self.ring.index_of(name).map(|i| &self.coeffs[i])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Nonzero `(index, coefficient)` pairs.
    pub fn terms(&self) -> impl Iterator<Item = (usize, &Q)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }

    fn check_same(&self, other: &HodgeClass) -> Result<()> {
        if self.ring.same_as(&other.ring) {
            Ok(())
        } else {
            Err(Error::DistinctSpaces)
        }
    }

    pub fn add(&self, other: &HodgeClass) -> Result<HodgeClass> {
        self.check_same(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(HodgeClass { ring: self.ring.clone(), coeffs })
    }

    pub fn sub(&self, other: &HodgeClass) -> Result<HodgeClass> {
        self.check_same(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(HodgeClass { ring: self.ring.clone(), coeffs })
    }

    pub fn neg(&self) -> HodgeClass {
        self.scale(&-Q::one())
    }

    pub fn scale(&self, c: &Q) -> HodgeClass {
        HodgeClass { ring: self.ring.clone(), coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Adds `c · other` in place.
    pub fn add_scaled(&mut self, c: &Q, other: &HodgeClass) -> Result<()> {
        self.check_same(other)?;
        if c.is_zero() {
            return Ok(());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            if !b.is_zero() {
                *a += c * b;
            }
        }
        Ok(())
    }

    /// Cup product, the bilinear extension of the structure constants.
    pub fn mul(&self, other: &HodgeClass) -> Result<HodgeClass> {
        self.check_same(other)?;
        let d = self.ring.dim();
        let mut out = vec![Q::zero(); d];
        for (i, a) in self.terms() {
            for (j, b) in other.terms() {
                let ab = a * b;
                for (k, c) in self.ring.structure_constant(i, j) {
                    out[*k] += &ab * c;
                }
            }
        }
        Ok(HodgeClass { ring: self.ring.clone(), coeffs: out })
    }

    pub fn pow(&self, k: u32) -> HodgeClass {
        let mut acc = HodgeClass::one(&self.ring);
        for _ in 0..k {
            acc = acc.mul(self).expect("same ring");
        }
        acc
    }

    /// `∫ x`: the coefficient of the top-degree basis element.
    pub fn integrate(&self) -> Q {
        self.coeffs[self.ring.top].clone()
    }

    /// The bidegree if the class is nonzero and homogeneous.
    pub fn homogeneous_bidegree(&self) -> Option<(u32, u32)> {
        let mut found = None;
        for (i, _) in self.terms() {
            let m = &self.ring.basis[i];
            match found {
                None => found = Some((m.form, m.coh)),
                Some(bd) if bd != (m.form, m.coh) => return None,
                _ => {}
            }
        }
        found
    }

    /// Whether every nonzero coefficient sits in bidegree `(p, q)`.
    pub fn is_homogeneous_of(&self, p: u32, q: u32) -> bool {
        self.terms().all(|(i, _)| self.ring.basis[i].form == p && self.ring.basis[i].coh == q)
    }

    /// Keeps only the components whose monomial satisfies `keep`.
    pub fn filter(&self, keep: impl Fn(&Monomial) -> bool) -> HodgeClass {
        let coeffs = self.coeffs.iter().zip(&self.ring.basis).map(|(c, m)| if keep(m) { c.clone() } else { Q::zero() }).collect();
        HodgeClass { ring: self.ring.clone(), coeffs }
    }

    /// Multiplies each component by `±1` according to `negate`.
    pub fn sign_twist(&self, negate: impl Fn(&Monomial) -> bool) -> HodgeClass {
        let coeffs = self.coeffs.iter().zip(&self.ring.basis).map(|(c, m)| if negate(m) { -c } else { c.clone() }).collect();
        HodgeClass { ring: self.ring.clone(), coeffs }
    }

    /// Substitutes a class with vanishing constant term into a power series.
    /// The class is nilpotent, so only finitely many terms contribute.
    pub fn substitute(&self, series: &Series) -> Result<HodgeClass> {
        if !self.coeffs[self.ring.unit].is_zero() {
            return Err(Error::NotInvertible);
        }
        let max = (2 * self.ring.n as usize).min(series.order());
        let mut acc = HodgeClass::one(&self.ring).scale(&series.coeff(0));
        let mut power = HodgeClass::one(&self.ring);
        for k in 1..=max {
            power = power.mul(self)?;
            if power.is_zero() {
                break;
            }
            acc.add_scaled(&series.coeff(k), &power)?;
        }
        Ok(acc)
    }

    /// Multiplicative inverse of a class with invertible constant term.
    pub fn inverse(&self) -> Result<HodgeClass> {
        let c0 = self.coeffs[self.ring.unit].clone();
        if c0.is_zero() {
            return Err(Error::NotInvertible);
        }
        // (c0 (1 + u))^{-1} = c0^{-1} Σ (-u)^k
        let mut u = self.scale(&(Q::one() / &c0));
        u.coeffs[self.ring.unit] = Q::zero();
        let order = 2 * self.ring.n as usize;
        let geometric = Series::from_coeffs((0..=order).map(|k| sign(k as u32)).collect());
        Ok(u.substitute(&geometric)?.scale(&(Q::one() / c0)))
    }

    /// Moves the coefficient vector to a ring with identical bidegrees and
    /// structure constants (basis names may differ), e.g. from `X × pt` to `X`.
    pub fn transport(&self, ring: &Arc<BigradedAlgebra>) -> Result<HodgeClass> {
        if !self.ring.isomorphic_by_index(ring) {
            return Err(Error::DistinctSpaces);
        }
        Ok(HodgeClass { ring: ring.clone(), coeffs: self.coeffs.clone() })
    }

    /// `a ⊗ b` in `ring`, which must be the tensor of the two owners.
    pub fn tensor(a: &HodgeClass, b: &HodgeClass, ring: &Arc<BigradedAlgebra>) -> Result<HodgeClass> {
        let (fa, fb) = ring.factors().ok_or(Error::NotATensor)?;
        if !fa.same_as(&a.ring) || !fb.same_as(&b.ring) {
            return Err(Error::FactorMismatch("tensor factors differ from the class owners".into()));
        }
        let db = fb.dim();
        let mut out = HodgeClass::zero(ring);
        for (i, x) in a.terms() {
            for (j, y) in b.terms() {
                out.coeffs[i * db + j] = x * y;
            }
        }
        Ok(out)
    }

    /// Coefficient matrix `C[i][j]` of `Σ C[i][j] e_i ⊗ e_j` for a class on a
    /// tensor ring.
    pub fn tensor_coefficients(&self) -> Result<Matrix> {
        let (fa, fb) = self.ring.factors().ok_or(Error::NotATensor)?;
        let (da, db) = (fa.dim(), fb.dim());
        let mut m = Matrix::zeros(da, db);
        for (k, c) in self.terms() {
            m[(k / db, k % db)] = c.clone();
        }
        Ok(m)
    }

    /// Inverse of [`HodgeClass::tensor_coefficients`].
    pub fn from_tensor_coefficients(ring: &Arc<BigradedAlgebra>, m: &Matrix) -> Result<HodgeClass> {
        let (fa, fb) = ring.factors().ok_or(Error::NotATensor)?;
        if m.rows() != fa.dim() || m.cols() != fb.dim() {
            return Err(Error::LengthMismatch { expected: ring.dim(), got: m.rows() * m.cols() });
        }
        let coeffs = (0..m.rows()).flat_map(|i| m.row(i).to_vec()).collect();
        HodgeClass::from_coeffs(ring, coeffs)
    }
}

impl fmt::Debug for HodgeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for HodgeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.terms() {
            let name = &self.ring.basis[i].name;
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            if i == self.ring.unit {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{name}")?;
            } else {
                write!(f, "{abs} {name}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Poincaré Gram matrix and, for each basis element `e_k`, the dual class
/// `f^k` with `∫ e_k · f^l = δ_{kl}`.
pub fn gram_and_dual_basis(ring: &Arc<BigradedAlgebra>) -> Result<(Matrix, Vec<HodgeClass>)> {
    let gram = ring.gram()?.clone();
    let inv = ring.gram_inverse()?;
    let d = ring.dim();
    // f^l = Σ_m H[m][l] e_m with H = G^{-1}
    let duals = (0..d).map(|l| HodgeClass { ring: ring.clone(), coeffs: (0..d).map(|m| inv[(m, l)].clone()).collect() }).collect();
    Ok((gram, duals))
}

/// Swaps tensor factors with the Koszul sign: `a ⊗ b ↦ (-1)^{|a||b|} b ⊗ a`.
/// Builds `B ⊗ A` for the result.
pub fn koszul_swap(x: &HodgeClass) -> Result<HodgeClass> {
    let (a, b) = x.ring.factors().ok_or(Error::NotATensor)?;
    let target = tensor(b, a);
    koszul_swap_into(x, &target)
}

/// As [`koszul_swap`], landing in a caller-supplied `B ⊗ A`.
pub fn koszul_swap_into(x: &HodgeClass, target: &Arc<BigradedAlgebra>) -> Result<HodgeClass> {
    let (a, b) = x.ring.factors().ok_or(Error::NotATensor)?;
    let (ta, tb) = target.factors().ok_or(Error::NotATensor)?;
    if !ta.same_as(b) || !tb.same_as(a) {
        return Err(Error::FactorMismatch("swap target is not the reversed tensor".into()));
    }
    let (da, db) = (a.dim(), b.dim());
    let mut out = HodgeClass::zero(target);
    for (k, c) in x.terms() {
        let (i, j) = (k / db, k % db);
        let s = sign(a.basis[i].total_degree() * b.basis[j].total_degree());
        out.coeffs[j * da + i] = c * s;
    }
    Ok(out)
}

/// Pushforward along the diagonal `A → A ⊗ A`: the unique class with
/// `∫ Δ_*(a) · (b ⊗ c) = ∫ a · b · c` for all `b`, `c`. Builds `A ⊗ A`.
pub fn diagonal_pushforward(a: &HodgeClass) -> Result<HodgeClass> {
    let target = tensor(&a.ring, &a.ring);
    diagonal_pushforward_into(a, &target)
}

/// As [`diagonal_pushforward`], landing in a caller-supplied `A ⊗ A`.
pub fn diagonal_pushforward_into(a: &HodgeClass, target: &Arc<BigradedAlgebra>) -> Result<HodgeClass> {
    let ring = &a.ring;
    let (f1, f2) = target.factors().ok_or(Error::NotATensor)?;
    if !f1.same_as(ring) || !f2.same_as(ring) {
        return Err(Error::FactorMismatch("diagonal target is not A ⊗ A".into()));
    }
    let d = ring.dim();
    let gram = ring.gram()?;
    let h = ring.gram_inverse()?;
    // R[b][c] = ∫ a e_b e_c
    let mut r = Matrix::zeros(d, d);
    for b in 0..d {
        let ab = a.mul(&HodgeClass::basis_element(ring, b))?;
        let row = gram.left_apply(&ab.coeffs);
        for (c, v) in row.into_iter().enumerate() {
            r[(b, c)] = v;
        }
    }
    // The adjunction reads G^T D' G = R with D_{xy} = (-1)^{|x||y|} D'_{xy}.
    let dp = h.transpose().mul(&r).mul(h);
    let mut out = HodgeClass::zero(target);
    for x in 0..d {
        for y in 0..d {
            let v = &dp[(x, y)];
            if v.is_zero() {
                continue;
            }
            let s = sign(ring.basis[x].total_degree() * ring.basis[y].total_degree());
            out.coeffs[x * d + y] = v * s;
        }
    }
    Ok(out)
}
