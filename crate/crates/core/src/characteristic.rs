//! Characteristic classes: Chern characters, Todd classes, Chern classes,
//! and the sign involutions `*`, `∨` and `W` on Hodge cohomology.

use std::sync::Arc;

use num_traits::One;

use crate::graded_ring::{BigradedAlgebra, HodgeClass};
use crate::series::Series;
use crate::{q, Error, Result, Q};

/// `*`: multiplies the summand `H^p(X, Ω^q)` by `(-1)^p`, `p` the
/// cohomological degree.
pub fn star(x: &HodgeClass) -> HodgeClass {
    x.sign_twist(|m| m.coh % 2 == 1)
}

/// `∨`: multiplies the summand `H^q(X, Ω^p)` by `(-1)^p`, `p` the form
/// degree. On Chern characters this is dualisation of the bundle.
pub fn vee(x: &HodgeClass) -> HodgeClass {
    x.sign_twist(|m| m.form % 2 == 1)
}

/// The involution `W` on Hochschild homology. Hochschild classes are stored
/// through the HKR identification, so `W` acts exactly as [`star`].
pub fn w_involution(x: &HodgeClass) -> HodgeClass {
    star(x)
}

/// Vector-bundle input: either formal Chern roots (each homogeneous of
/// bidegree `(1,1)`) or a Chern character given directly.
#[derive(Clone, Debug, PartialEq)]
pub enum BundleData {
    Roots(Vec<HodgeClass>),
    Character { rank: i64, ch: HodgeClass },
}

impl BundleData {
    /// Roots with a declared rank, which must equal the number of roots.
    pub fn from_roots(rank: i64, roots: Vec<HodgeClass>) -> Result<Self> {
        if rank != roots.len() as i64 {
            return Err(Error::InconsistentRank { declared: rank, found: format!("{} roots", roots.len()) });
        }
        Ok(BundleData::Roots(roots))
    }

    /// A Chern character whose constant term must equal `rank`.
    pub fn from_ch(rank: i64, ch: HodgeClass) -> Result<Self> {
        let c0 = ch.coeff(ch.ring().unit_index()).clone();
        if c0 != q(rank) {
            return Err(Error::InconsistentRank { declared: rank, found: format!("constant term {c0}") });
        }
        Ok(BundleData::Character { rank, ch })
    }

    pub fn line(root: HodgeClass) -> Self {
        BundleData::Roots(vec![root])
    }

    pub fn trivial(rank: usize, ring: &Arc<BigradedAlgebra>) -> Self {
        BundleData::Roots(vec![HodgeClass::zero(ring); rank])
    }

    pub fn rank(&self) -> i64 {
        match self {
            BundleData::Roots(r) => r.len() as i64,
            BundleData::Character { rank, .. } => *rank,
        }
    }

    pub fn direct_sum(&self, other: &BundleData, ring: &Arc<BigradedAlgebra>) -> Result<Self> {
        match (self, other) {
            (BundleData::Roots(a), BundleData::Roots(b)) => Ok(BundleData::Roots(a.iter().chain(b).cloned().collect())),
            _ => {
                let ch = chern_character(self, ring)?.add(&chern_character(other, ring)?)?;
                Ok(BundleData::Character { rank: self.rank() + other.rank(), ch })
            }
        }
    }

    pub fn tensor(&self, other: &BundleData, ring: &Arc<BigradedAlgebra>) -> Result<Self> {
        match (self, other) {
            (BundleData::Roots(a), BundleData::Roots(b)) => {
                let mut roots = Vec::with_capacity(a.len() * b.len());
                for x in a {
                    for y in b {
                        roots.push(x.add(y)?);
                    }
                }
                Ok(BundleData::Roots(roots))
            }
            _ => {
                let ch = chern_character(self, ring)?.mul(&chern_character(other, ring)?)?;
                Ok(BundleData::Character { rank: self.rank() * other.rank(), ch })
            }
        }
    }

    fn checked_roots(&self, ring: &Arc<BigradedAlgebra>) -> Result<Option<&[HodgeClass]>> {
        match self {
            BundleData::Roots(roots) => {
                for r in roots {
                    if !r.ring().same_as(ring) {
                        return Err(Error::DistinctSpaces);
                    }
                    if !r.is_homogeneous_of(1, 1) {
                        return Err(Error::NonDivisorRoot);
                    }
                }
                Ok(Some(roots))
            }
            BundleData::Character { ch, .. } => {
                if !ch.ring().same_as(ring) {
                    return Err(Error::DistinctSpaces);
                }
                Ok(None)
            }
        }
    }
}

fn series_order(ring: &BigradedAlgebra) -> usize {
    ring.n() as usize
}

/// `ch(E) = Σ e^{root}` (or the stored character).
pub fn chern_character(bundle: &BundleData, ring: &Arc<BigradedAlgebra>) -> Result<HodgeClass> {
    match bundle.checked_roots(ring)? {
        Some(roots) => {
            let exp = Series::exp(series_order(ring));
            let mut acc = HodgeClass::zero(ring);
            for r in roots {
                acc.add_scaled(&Q::one(), &r.substitute(&exp)?)?;
            }
            Ok(acc)
        }
        None => match bundle {
            BundleData::Character { ch, .. } => Ok(ch.clone()),
            BundleData::Roots(_) => unreachable!(),
        },
    }
}

/// The degree-`k` part of a class: components of total degree `2k`.
pub fn degree_part(x: &HodgeClass, k: u32) -> HodgeClass {
    x.filter(|m| m.total_degree() == 2 * k)
}

/// `td(E) = Π root / (1 - e^{-root})`. From a bare Chern character it is
/// `exp(Σ_k t_k · k! · ch_k)` where `Σ t_k x^k = log(x / (1 - e^{-x}))`,
/// since `k! ch_k` is the k-th power sum of the roots.
pub fn todd_class(bundle: &BundleData, ring: &Arc<BigradedAlgebra>) -> Result<HodgeClass> {
    let order = series_order(ring);
    match bundle.checked_roots(ring)? {
        Some(roots) => {
            let td = Series::todd(order);
            let mut acc = HodgeClass::one(ring);
            for r in roots {
                acc = acc.mul(&r.substitute(&td)?)?;
            }
            Ok(acc)
        }
        None => {
            let ch = chern_character(bundle, ring)?;
            let log_td = Series::log_todd(order);
            let mut exponent = HodgeClass::zero(ring);
            let mut fact = Q::one();
            for k in 1..=order {
                fact *= q(k as i64);
                let part = degree_part(&ch, k as u32);
                exponent.add_scaled(&(log_td.coeff(k) * &fact), &part)?;
            }
            exponent.substitute(&Series::exp(2 * order))
        }
    }
}

/// Chern classes `c_0, ..., c_n` via Newton's identities from the power sums
/// `p_k = k! ch_k`.
pub fn chern_classes(bundle: &BundleData, ring: &Arc<BigradedAlgebra>) -> Result<Vec<HodgeClass>> {
    let ch = chern_character(bundle, ring)?;
    let n = ring.n() as usize;
    let mut power_sums = vec![HodgeClass::zero(ring)];
    let mut fact = Q::one();
    for k in 1..=n {
        fact *= q(k as i64);
        power_sums.push(degree_part(&ch, k as u32).scale(&fact));
    }
    let mut c = vec![HodgeClass::one(ring)];
    for k in 1..=n {
        // k c_k = Σ_{i=1}^k (-1)^{i-1} c_{k-i} p_i
        let mut acc = HodgeClass::zero(ring);
        for i in 1..=k {
            let term = c[k - i].mul(&power_sums[i])?;
            let s = if i % 2 == 1 { Q::one() } else { -Q::one() };
            acc.add_scaled(&s, &term)?;
        }
        c.push(acc.scale(&(Q::one() / q(k as i64))));
    }
    Ok(c)
}
