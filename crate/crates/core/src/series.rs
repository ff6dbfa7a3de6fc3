//! One-variable power series with rational coefficients, truncated at a fixed order.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{AlgebraError, Result};
use crate::scalars::{factorial, Q};

/// Σ_{i ≤ order} cᵢ Xⁱ, computed modulo X^{order+1}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Q>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![Q::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Q::one();
        s
    }

    /// The series X.
    pub fn x(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = Q::one();
        }
        s
    }

    /// Coefficients beyond `order` are dropped, missing ones are zero.
    pub fn from_coeffs(coeffs: Vec<Q>, order: usize) -> Self {
        let mut s = Self::zero(order);
        for (i, c) in coeffs.into_iter().enumerate().take(order + 1) {
            s.coeffs[i] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> Q {
        self.coeffs.get(i).cloned().unwrap_or_else(Q::zero)
    }

    pub fn coeffs(&self) -> &[Q] {
        &self.coeffs
    }

    pub fn has_constant_term(&self) -> bool {
        !self.coeffs[0].is_zero()
    }

    fn same_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(AlgebraError::Contract(format!(
                "series truncated at orders {} and {}",
                self.order(),
                other.order()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        Ok(TruncatedSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        Ok(TruncatedSeries {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn scale(&self, c: &Q) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let n = self.order();
        let mut out = Self::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(n + 1 - i) {
                out.coeffs[i + j] += a * b;
            }
        }
        Ok(out)
    }

    /// Multiplicative inverse; needs an invertible constant term.
    pub fn inverse(&self) -> Result<Self> {
        if !self.has_constant_term() {
            return Err(AlgebraError::Contract(
                "series without constant term is not invertible".into(),
            ));
        }
        let n = self.order();
        let inv0 = self.coeffs[0].recip();
        let mut out = Self::zero(n);
        out.coeffs[0] = inv0.clone();
        for k in 1..=n {
            let mut acc = Q::zero();
            for i in 1..=k {
                acc += &self.coeffs[i] * &out.coeffs[k - i];
            }
            out.coeffs[k] = -acc * &inv0;
        }
        Ok(out)
    }

    /// e^{λX} truncated at `order`.
    pub fn exp_linear(lambda: &Q, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut power = Q::one();
        for k in 0..=order {
            coeffs.push(&power / factorial(k));
            power *= lambda;
        }
        TruncatedSeries { coeffs }
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})X")?,
                _ => write!(f, "({c})X^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(X^{})", self.order() + 1)
    }
}
