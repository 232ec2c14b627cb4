//! Truncated univariate power series with rational coefficients.
//!
//! These feed the characteristic-class calculus: a class `x` with nilpotent
//! support is substituted into `Σ c_k x^k`, which is a finite sum.

use num_traits::{One, Zero};

use crate::{q, Q};

/// `Σ_{k ≤ order} c_k t^k`, everything above `order` discarded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Series {
    coeffs: Vec<Q>,
}

impl Series {
    pub fn from_coeffs(coeffs: Vec<Q>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least a constant term");
        Series { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> Q {
        self.coeffs.get(k).cloned().unwrap_or_else(Q::zero)
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    /// `e^t`.
    pub fn exp(order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut c = Q::one();
        for k in 0..=order {
            if k > 0 {
                c /= q(k as i64);
            }
            coeffs.push(c.clone());
        }
        Series { coeffs }
    }

    /// `(1 - e^{-t}) / t = Σ (-1)^k t^k / (k+1)!`.
    fn one_minus_exp_neg_over_t(order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut fact = Q::one();
        for k in 0..=order {
            fact *= q(k as i64 + 1);
            let c = Q::one() / &fact;
            coeffs.push(if k % 2 == 0 { c } else { -c });
        }
        Series { coeffs }
    }

    /// The Todd series `t / (1 - e^{-t})`.
    pub fn todd(order: usize) -> Self {
        Self::one_minus_exp_neg_over_t(order).reciprocal().expect("constant term is 1")
    }

    /// `log(t / (1 - e^{-t}))`, whose constant term is zero.
    pub fn log_todd(order: usize) -> Self {
        Self::todd(order).log().expect("constant term is 1")
    }

    pub fn mul(&self, other: &Series) -> Series {
        let order = self.order().min(other.order());
        let mut coeffs = vec![Q::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order + 1 - i) {
                coeffs[i + j] += a * b;
            }
        }
        Series { coeffs }
    }

    /// Multiplicative inverse; `None` if the constant term vanishes.
    pub fn reciprocal(&self) -> Option<Series> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return None;
        }
        let n = self.order();
        let mut inv: Vec<Q> = Vec::with_capacity(n + 1);
        inv.push(Q::one() / c0);
        for k in 1..=n {
            let mut s = Q::zero();
            for j in 1..=k {
                s += &self.coeffs[j] * &inv[k - j];
            }
            inv.push(-s / c0);
        }
        Some(Series { coeffs: inv })
    }

    /// Logarithm of a series with constant term 1, via `(log f)' = f'/f`.
    pub fn log(&self) -> Option<Series> {
        if !self.coeffs[0].is_one() {
            return None;
        }
        let n = self.order();
        let recip = self.reciprocal()?;
        let deriv: Vec<Q> = (1..=n).map(|k| &self.coeffs[k] * q(k as i64)).collect();
        let mut out = vec![Q::zero(); n + 1];
        for k in 1..=n {
            // coefficient of t^{k-1} in f'/f
            let mut s = Q::zero();
            for j in 0..k {
                s += &deriv[j] * &recip.coeffs[k - 1 - j];
            }
            out[k] = s / q(k as i64);
        }
        Some(Series { coeffs: out })
    }
}
