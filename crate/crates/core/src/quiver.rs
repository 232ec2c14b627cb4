//! Finite path algebras of directed quivers: the algebra-side oracle for the
//! pairing on `P^1`, via the Kronecker quiver (the endomorphism algebra of
//! `O ⊕ O(1)`).
//!
//! Paths compose right to left: `p · q` is nonzero iff `q` ends where `p`
//! starts, so `x · e_{src(x)} = x`. The Euler matrix is oriented by
//! `E[i][j]` = number of paths from vertex `i` to vertex `j`, which matches
//! `dim Hom(O(i), O(j))` under the dictionary vertex `i` ↦ `O(i)`.

use std::sync::Arc;

use num_traits::Zero;

use crate::characteristic::{degree_part, vee};
use crate::linalg::{Matrix, RowSpan};
use crate::spaces::{line_bundle_ch, projective_space, SpaceKind, SpaceModel};
use crate::{q, Error, Result, Q};

#[derive(Clone, Debug, PartialEq, Eq)]
struct Path {
    source: usize,
    target: usize,
    // arrow indices in traversal order
    arrows: Vec<usize>,
}

/// A relation-free path algebra of a quiver without oriented cycles.
#[derive(Clone, Debug)]
pub struct PathAlgebra {
    vertices: usize,
    arrows: Vec<(usize, usize)>,
    paths: Vec<Path>,
    // mul[i * dim + j] = index of paths[i] · paths[j]
    mul: Vec<Option<usize>>,
}

impl PathAlgebra {
    /// `arrows[k] = (source, target)`.
    pub fn new(vertices: usize, arrows: Vec<(usize, usize)>) -> Result<Self> {
        for &(s, t) in &arrows {
            for v in [s, t] {
                if v >= vertices {
                    return Err(Error::OutOfRange { what: "vertex", value: v as i64, range: "0..vertices" });
                }
            }
        }
        let mut paths: Vec<Path> = (0..vertices).map(|v| Path { source: v, target: v, arrows: vec![] }).collect();
        // breadth-first extension; a path longer than the vertex count repeats a vertex
        let mut frontier: Vec<Path> = paths.clone();
        for _ in 0..vertices {
            let mut next = Vec::new();
            for p in &frontier {
                for (k, &(s, t)) in arrows.iter().enumerate() {
                    if s == p.target {
                        let mut arr = p.arrows.clone();
                        arr.push(k);
                        next.push(Path { source: p.source, target: t, arrows: arr });
                    }
                }
            }
            paths.extend(next.iter().cloned());
            frontier = next;
        }
        if !frontier.is_empty() {
            return Err(Error::NotDirected);
        }
        let d = paths.len();
        let mut mul = vec![None; d * d];
        for (i, p) in paths.iter().enumerate() {
            for (j, r) in paths.iter().enumerate() {
                if r.target != p.source {
                    continue;
                }
                let mut arr = r.arrows.clone();
                arr.extend(&p.arrows);
                let prod = Path { source: r.source, target: p.target, arrows: arr };
                mul[i * d + j] = paths.iter().position(|x| *x == prod);
            }
        }
        Ok(PathAlgebra { vertices, arrows, paths, mul })
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn dim(&self) -> usize {
        self.paths.len()
    }

    /// Basis index of the idempotent at vertex `v`.
    pub fn idempotent(&self, v: usize) -> usize {
        v
    }

    /// Basis index of the single-arrow path `k`.
    pub fn arrow(&self, k: usize) -> usize {
        self.paths.iter().position(|p| p.arrows == [k]).expect("arrow paths exist")
    }

    pub fn path_name(&self, i: usize) -> String {
        let p = &self.paths[i];
        if p.arrows.is_empty() {
            format!("e{}", p.source)
        } else {
            p.arrows.iter().rev().map(|k| format!("x{k}")).collect::<Vec<_>>().join("·")
        }
    }

    /// `(source, target)` of the basis path `i`.
    pub fn endpoints(&self, i: usize) -> (usize, usize) {
        (self.paths[i].source, self.paths[i].target)
    }

    /// Product of basis paths, `None` when it vanishes.
    pub fn mul_basis(&self, i: usize, j: usize) -> Option<usize> {
        self.mul[i * self.dim() + j]
    }

    pub fn mul(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        let d = self.dim();
        let mut out = vec![Q::zero(); d];
        for (i, a) in x.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in y.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                if let Some(k) = self.mul_basis(i, j) {
                    out[k] += a * b;
                }
            }
        }
        out
    }

    fn basis_vector(&self, i: usize) -> Vec<Q> {
        let mut v = vec![Q::zero(); self.dim()];
        v[i] = q(1);
        v
    }

    /// Span of all commutators `[p, r] = p·r - r·p` of basis paths.
    pub fn commutator_span(&self) -> RowSpan {
        let d = self.dim();
        let mut span = RowSpan::new();
        for i in 0..d {
            for j in 0..d {
                let mut v = vec![Q::zero(); d];
                if let Some(k) = self.mul_basis(i, j) {
                    v[k] += q(1);
                }
                if let Some(k) = self.mul_basis(j, i) {
                    v[k] -= q(1);
                }
                span.insert(v);
            }
        }
        span
    }

    /// Basis paths whose classes form a basis of `HH_0 = A / [A, A]`,
    /// chosen greedily in basis order.
    pub fn hh0_classes(&self) -> Vec<usize> {
        let mut span = self.commutator_span();
        (0..self.dim()).filter(|&i| span.insert(self.basis_vector(i))).collect()
    }

    /// Coordinates in [`PathAlgebra::hh0_classes`] of the class of `x`.
    pub fn hh0_coordinates(&self, x: &[Q]) -> Vec<Q> {
        let classes = self.hh0_classes();
        let comm = self.commutator_span().vectors();
        let skip = comm.len();
        // commutators and class representatives together form a basis of A
        let mut rows = comm;
        rows.extend(classes.iter().map(|&i| self.basis_vector(i)));
        let inv = Matrix::from_rows(rows).inverse().expect("complement of the commutator span");
        inv.left_apply(x).split_off(skip)
    }

    /// Hattori-Stallings class of the projective `A e_v` in `HH_0`.
    pub fn trace_class(&self, v: usize) -> Vec<Q> {
        self.hh0_coordinates(&self.basis_vector(self.idempotent(v)))
    }

    /// `E[i][j]` = number of paths from `i` to `j`.
    pub fn euler_matrix(&self) -> Matrix {
        let mut m = Matrix::zeros(self.vertices, self.vertices);
        for p in &self.paths {
            m[(p.source, p.target)] += q(1);
        }
        m
    }
}

/// Two vertices, two parallel arrows `0 → 1`.
pub fn kronecker_algebra() -> PathAlgebra {
    PathAlgebra::new(2, vec![(0, 1), (0, 1)]).expect("Kronecker quiver is directed")
}

/// The one-vertex algebra `K`.
pub fn trivial_algebra() -> PathAlgebra {
    PathAlgebra::new(1, vec![]).expect("no arrows")
}

/// The Beilinson algebra of `P^n`; only `n = 1` (the Kronecker algebra) is
/// in the catalog, larger `n` need relations.
pub fn beilinson_algebra(n: u32) -> Result<PathAlgebra> {
    match n {
        1 => Ok(kronecker_algebra()),
        _ => Err(Error::OutsideCatalog(format!("Beilinson algebra of P{n} needs relations"))),
    }
}

/// `G[i][j] = ∫ vee(ch O(i)) · ch O(j) · td` for `i, j ∈ {0, 1}` on `P^1`.
pub fn geometric_matrix(space: &SpaceModel) -> Result<Matrix> {
    if !matches!(space.kind(), SpaceKind::Projective(1)) {
        return Err(Error::OutsideCatalog(format!("geometric Euler matrix on {}", space.label())));
    }
    let mut m = Matrix::zeros(2, 2);
    for i in 0..2 {
        for j in 0..2 {
            let a = vee(&line_bundle_ch(space, i as i64)?);
            let b = line_bundle_ch(space, j as i64)?;
            m[(i, j)] = a.mul(&b)?.mul(space.todd())?.integrate();
        }
    }
    Ok(m)
}

/// Outcome of comparing the Kronecker Euler matrix with the geometric one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossCheck {
    pub algebra: Matrix,
    pub geometry: Matrix,
}

impl CrossCheck {
    pub fn passes(&self) -> bool {
        self.algebra == self.geometry
    }
}

pub fn geometric_cross_check_on(space: &SpaceModel) -> Result<CrossCheck> {
    Ok(CrossCheck { algebra: kronecker_algebra().euler_matrix(), geometry: geometric_matrix(space)? })
}

/// The cross-check on `P^1`.
pub fn geometric_cross_check() -> CrossCheck {
    geometric_cross_check_on(&projective_space(1).expect("P1")).expect("P1 is in the catalog")
}

/// The cross-check on `P^1` with the degree-one part of the Todd class
/// removed; expected to fail.
pub fn negative_control() -> CrossCheck {
    let p1 = projective_space(1).expect("P1");
    let broken = degree_part(p1.todd(), 0);
    let p1: Arc<SpaceModel> = p1.with_todd(broken);
    geometric_cross_check_on(&p1).expect("P1 is in the catalog")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kronecker_basics() {
        let a = kronecker_algebra();
        assert_eq!(a.dim(), 4);
        let x = a.arrow(0);
        assert_eq!(a.mul_basis(x, a.idempotent(0)), Some(x));
        assert_eq!(a.mul_basis(a.idempotent(1), x), Some(x));
        assert_eq!(a.mul_basis(x, a.idempotent(1)), None);
        assert_eq!(a.mul_basis(a.idempotent(0), a.idempotent(1)), None);
        assert_eq!(a.euler_matrix()[(0, 1)], q(2));
    }

    #[test]
    fn path_multiplication_is_associative_with_units() {
        let a = PathAlgebra::new(3, vec![(0, 1), (1, 2), (0, 2), (1, 2)]).unwrap();
        let d = a.dim();
        for i in 0..d {
            for j in 0..d {
                for k in 0..d {
                    let l = a.mul_basis(i, j).and_then(|ij| a.mul_basis(ij, k));
                    let r = a.mul_basis(j, k).and_then(|jk| a.mul_basis(i, jk));
                    assert_eq!(l, r);
                }
            }
            let (s, t) = a.endpoints(i);
            assert_eq!(a.mul_basis(i, a.idempotent(s)), Some(i));
            assert_eq!(a.mul_basis(a.idempotent(t), i), Some(i));
        }
    }

    #[test]
    fn hh0_of_directed_algebras() {
        let a = kronecker_algebra();
        assert_eq!(a.hh0_classes(), vec![0, 1]);
        let comm = a.commutator_span();
        for k in 0..2 {
            let mut v = vec![q(0); a.dim()];
            v[a.arrow(k)] = q(1);
            assert!(comm.contains(&v));
        }
        assert_eq!(trivial_algebra().hh0_classes().len(), 1);
        let b = PathAlgebra::new(3, vec![(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(b.hh0_classes().len(), 3);
        assert_eq!(a.trace_class(1), vec![q(0), q(1)]);
        let mut mixed = vec![q(3), q(-2), q(0), q(0)];
        mixed[a.arrow(1)] = q(5);
        assert_eq!(a.hh0_coordinates(&mixed), vec![q(3), q(-2)]);
    }

    #[test]
    fn rejected_inputs() {
        assert_eq!(PathAlgebra::new(2, vec![(0, 1), (1, 0)]).unwrap_err(), Error::NotDirected);
        assert_eq!(PathAlgebra::new(1, vec![(0, 0)]).unwrap_err(), Error::NotDirected);
        assert!(matches!(beilinson_algebra(2), Err(Error::OutsideCatalog(_))));
        assert!(matches!(PathAlgebra::new(1, vec![(0, 3)]), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn euler_matrices() {
        assert_eq!(kronecker_algebra().euler_matrix(), Matrix::from_i64(&[&[1, 2], &[0, 1]]));
        assert_eq!(kronecker_algebra().euler_matrix().determinant(), q(1));
        assert_eq!(trivial_algebra().euler_matrix(), Matrix::from_i64(&[&[1]]));
    }

    #[test]
    fn cross_check_and_control() {
        let c = geometric_cross_check();
        assert_eq!(c.geometry, Matrix::from_i64(&[&[1, 2], &[0, 1]]));
        assert!(c.passes());
        assert!(!negative_control().passes());
    }
}
