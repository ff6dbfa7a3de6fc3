//! Exact rational scalars, sparse linear combinations and exact null spaces.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{AlgebraError, Result};

/// The scalar field: arbitrary-precision rationals, always kept reduced.
pub type Q = BigRational;

/// Builds the rational `n/1`.
pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Builds the rational `num/den`. Panics if `den == 0`.
pub fn frac(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

/// Binomial coefficient as a rational; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> Q {
    if k > n {
        return Q::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    Q::from_integer(acc)
}

pub fn factorial(n: usize) -> Q {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    Q::from_integer(acc)
}

/// A finitely supported map from basis labels to rationals.
///
/// Zero coefficients are never stored and iteration follows the label order,
/// so two equal combinations always render identically.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LinComb<K: Ord> {
    terms: BTreeMap<K, Q>,
}

impl<K: Ord> Default for LinComb<K> {
    fn default() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> LinComb<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The combination `1·label`.
    pub fn basis(label: K) -> Self {
        Self::term(label, Q::one())
    }

    pub fn term(label: K, coeff: Q) -> Self {
        let mut out = Self::zero();
        out.add_term(label, coeff);
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (K, Q)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (k, c) in terms {
            out.add_term(k, c);
        }
        out
    }

    /// Adds `coeff·label` in place, dropping the entry if it cancels.
    pub fn add_term(&mut self, label: K, coeff: Q) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.get_mut(&label) {
            Some(c) => {
                *c += coeff;
                if c.is_zero() {
                    self.terms.remove(&label);
                }
            }
            None => {
                self.terms.insert(label, coeff);
            }
        }
    }

    pub fn coeff(&self, label: &K) -> Q {
        self.terms.get(label).cloned().unwrap_or_else(Q::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Q)> {
        self.terms.iter()
    }

    pub fn labels(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Every coefficient multiplied by `c`.
    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LinComb {
            terms: self
                .terms
                .iter()
                .map(|(k, v)| (k.clone(), v * c))
                .collect(),
        }
    }

    /// Linear extension of a basis map: `Σ coeff · f(label)`.
    pub fn apply<L, F>(&self, mut f: F) -> LinComb<L>
    where
        L: Ord + Clone,
        F: FnMut(&K) -> LinComb<L>,
    {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), c);
        }
        out
    }

    /// Linear extension of a partial basis map; fails on the first undefined label.
    pub fn try_apply<L, F>(&self, mut f: F) -> Result<LinComb<L>>
    where
        L: Ord + Clone,
        F: FnMut(&K) -> Option<LinComb<L>>,
    {
        let mut out = LinComb::zero();
        for (k, c) in &self.terms {
            let image = f(k).ok_or_else(|| {
                AlgebraError::Structural("linear map undefined on a label of the support".into())
            })?;
            out.add_scaled(&image, c);
        }
        Ok(out)
    }

    /// Relabels every term; colliding images add up.
    pub fn map_labels<L: Ord + Clone, F: FnMut(&K) -> L>(&self, mut f: F) -> LinComb<L> {
        LinComb::from_terms(self.terms.iter().map(|(k, c)| (f(k), c.clone())))
    }

    /// Keeps only the terms whose label satisfies `keep`.
    pub fn filter<F: FnMut(&K) -> bool>(&self, mut keep: F) -> Self {
        LinComb {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| keep(k))
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// `self += c · other`.
    pub fn add_scaled(&mut self, other: &Self, c: &Q) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v * c);
        }
    }

    /// Bilinear tensor product; labels pair up.
    pub fn tensor<L: Ord + Clone>(&self, other: &LinComb<L>) -> LinComb<(K, L)> {
        let mut out = LinComb::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term((a.clone(), b.clone()), ca * cb);
            }
        }
        out
    }

    pub fn into_terms(self) -> BTreeMap<K, Q> {
        self.terms
    }
}

impl<K: Ord + Clone> FromIterator<(K, Q)> for LinComb<K> {
    fn from_iter<I: IntoIterator<Item = (K, Q)>>(iter: I) -> Self {
        Self::from_terms(iter)
    }
}

impl<K: Ord + Clone> AddAssign<&LinComb<K>> for LinComb<K> {
    fn add_assign(&mut self, rhs: &LinComb<K>) {
        for (k, v) in &rhs.terms {
            self.add_term(k.clone(), v.clone());
        }
    }
}

impl<K: Ord + Clone> SubAssign<&LinComb<K>> for LinComb<K> {
    fn sub_assign(&mut self, rhs: &LinComb<K>) {
        for (k, v) in &rhs.terms {
            self.add_term(k.clone(), -v.clone());
        }
    }
}

impl<K: Ord + Clone> Add for &LinComb<K> {
    type Output = LinComb<K>;
    fn add(self, rhs: &LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<K: Ord + Clone> Add for LinComb<K> {
    type Output = LinComb<K>;
    fn add(mut self, rhs: LinComb<K>) -> LinComb<K> {
        self += &rhs;
        self
    }
}

impl<K: Ord + Clone> Sub for &LinComb<K> {
    type Output = LinComb<K>;
    fn sub(self, rhs: &LinComb<K>) -> LinComb<K> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<K: Ord + Clone> Sub for LinComb<K> {
    type Output = LinComb<K>;
    fn sub(mut self, rhs: LinComb<K>) -> LinComb<K> {
        self -= &rhs;
        self
    }
}

impl<K: Ord + Clone> Neg for LinComb<K> {
    type Output = LinComb<K>;
    fn neg(self) -> LinComb<K> {
        LinComb {
            terms: self.terms.into_iter().map(|(k, v)| (k, -v)).collect(),
        }
    }
}

impl<K: Ord + fmt::Debug> fmt::Debug for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}·{:?}", c, k)?;
        }
        Ok(())
    }
}

impl<K: Ord + fmt::Display> fmt::Display for LinComb<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !abs.is_one() {
                write!(f, "{}", abs)?;
            }
            write!(f, "{}", k)?;
        }
        Ok(())
    }
}

/// An ordered tuple of basis labels, used for tensors of arbitrary arity.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tensor<K>(pub Vec<K>);

impl<K: fmt::Display> fmt::Display for Tensor<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, k) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ⊗ ")?;
            }
            write!(f, "{k}")?;
        }
        Ok(())
    }
}

impl<K> Tensor<K> {
    pub fn arity(&self) -> usize {
        self.0.len()
    }
}

impl<K: Ord + Clone> LinComb<Tensor<K>> {
    /// The common arity of all terms, `None` for the zero combination.
    pub fn arity(&self) -> Result<Option<usize>> {
        let mut arities = self.labels().map(Tensor::arity);
        let Some(first) = arities.next() else {
            return Ok(None);
        };
        if arities.any(|a| a != first) {
            return Err(AlgebraError::Structural("mixed tensor arities".into()));
        }
        Ok(Some(first))
    }

    /// Sum of two tensor expressions, refusing to mix arities.
    pub fn try_add(&self, other: &Self) -> Result<Self> {
        if let (Some(a), Some(b)) = (self.arity()?, other.arity()?) {
            if a != b {
                return Err(AlgebraError::Structural(format!(
                    "cannot add tensors of arity {a} and {b}"
                )));
            }
        }
        Ok(self + other)
    }

    /// Tensor product that concatenates factor lists.
    pub fn tensor_concat(&self, other: &Self) -> Self {
        let mut out = LinComb::zero();
        for (a, ca) in self.iter() {
            for (b, cb) in other.iter() {
                let mut factors = a.0.clone();
                factors.extend(b.0.iter().cloned());
                out.add_term(Tensor(factors), ca * cb);
            }
        }
        out
    }
}

impl<K: Ord + Clone> LinComb<(K, K)> {
    pub fn into_tensor(self) -> LinComb<Tensor<K>> {
        self.map_labels(|(a, b)| Tensor(vec![a.clone(), b.clone()]))
    }

    /// Exchanges the two legs.
    pub fn swap(&self) -> Self {
        self.map_labels(|(a, b)| (b.clone(), a.clone()))
    }
}

/// Reduces `rows` (each of length `ncols`) to reduced row echelon form in place,
/// choosing pivot columns left to right. Returns the pivot columns.
fn rref(rows: &mut Vec<Vec<Q>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].recip();
        for v in rows[r].iter_mut().skip(col) {
            *v *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (v, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                if !p.is_zero() {
                    *v -= &factor * p;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    pivots
}

/// A basis of the right null space `{v : M v = 0}`.
///
/// Vectors come out in canonical form: one per free column in increasing
/// order, with that free variable equal to 1 and the other free variables 0.
pub fn kernel_basis(matrix: &[Vec<Q>], ncols: usize) -> Vec<Vec<Q>> {
    let mut rows: Vec<Vec<Q>> = matrix
        .iter()
        .filter(|r| r.iter().any(|v| !v.is_zero()))
        .cloned()
        .collect();
    debug_assert!(rows.iter().all(|r| r.len() == ncols));
    let pivots = rref(&mut rows, ncols);
    let pivot_set: BTreeSet<usize> = pivots.iter().copied().collect();
    (0..ncols)
        .filter(|c| !pivot_set.contains(c))
        .map(|free| {
            let mut v = vec![Q::zero(); ncols];
            v[free] = Q::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = -rows[row][free].clone();
            }
            v
        })
        .collect()
}

pub fn rank(matrix: &[Vec<Q>], ncols: usize) -> usize {
    let mut rows = matrix.to_vec();
    rref(&mut rows, ncols).len()
}

/// Dense matrix whose columns are the coordinates of `columns`, rows indexed by
/// the union of their supports in label order.
pub fn columns_to_matrix<K: Ord + Clone>(columns: &[LinComb<K>]) -> Vec<Vec<Q>> {
    let keys: BTreeSet<&K> = columns.iter().flat_map(|c| c.labels()).collect();
    keys.into_iter()
        .map(|k| columns.iter().map(|c| c.coeff(k)).collect())
        .collect()
}

/// Dimension of the span of a family of combinations.
pub fn rank_of<K: Ord + Clone>(vectors: &[LinComb<K>]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    rank(&columns_to_matrix(vectors), vectors.len())
}

/// Null space of the linear map sending basis vector `j` to `images[j]`,
/// expressed as combinations of `domain` labels.
pub fn kernel_of_map<D: Ord + Clone, R: Ord + Clone>(
    domain: &[D],
    images: &[LinComb<R>],
) -> Vec<LinComb<D>> {
    assert_eq!(domain.len(), images.len());
    let m = columns_to_matrix(images);
    kernel_basis(&m, domain.len())
        .into_iter()
        .map(|v| {
            LinComb::from_terms(domain.iter().cloned().zip(v).filter(|(_, c)| !c.is_zero()))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> Vec<Vec<Q>> {
        rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect()
    }

    #[test]
    fn additive_inverse_cancels() {
        let a = LinComb::term("w1", q(3));
        let b = LinComb::term("w1", q(-3));
        assert!((a + b).is_zero());
    }

    #[test]
    fn disjoint_supports_add() {
        let s = LinComb::basis("w1") + LinComb::basis("w2");
        assert_eq!(s.len(), 2);
        assert_eq!(s.coeff(&"w2"), q(1));
    }

    #[test]
    fn scaling() {
        let a = LinComb::basis("w1") + LinComb::basis("w2");
        assert!(a.scale(&q(0)).is_zero());
        assert_eq!(a.scale(&q(1)), a);
        let b = LinComb::term("w1", q(2));
        assert_eq!(b.scale(&frac(1, 2)), LinComb::basis("w1"));
    }

    #[test]
    fn tensor_is_bilinear() {
        let t = LinComb::term("w1", q(2)).tensor(&LinComb::term("w2", q(3)));
        assert_eq!(t, LinComb::term(("w1", "w2"), q(6)));
        let s = (LinComb::basis("w1") + LinComb::basis("w2")).tensor(&LinComb::basis("w3"));
        assert_eq!(s.len(), 2);
        assert_eq!(s.coeff(&("w2", "w3")), q(1));
    }

    #[test]
    fn arity_mismatch_is_rejected() {
        let a = LinComb::basis(Tensor(vec![1, 2]));
        let b = LinComb::basis(Tensor(vec![1, 2, 3]));
        assert!(matches!(a.try_add(&b), Err(AlgebraError::Structural(_))));
        assert!(a.try_add(&a).is_ok());
        let mixed = &a + &b;
        assert!(mixed.arity().is_err());
    }

    #[test]
    fn apply_linear_maps() {
        let a = LinComb::term("w", q(3));
        assert_eq!(a.apply(|k| LinComb::basis(*k)), a);
        assert!(a.apply(|_| LinComb::<&str>::zero()).is_zero());
        assert_eq!(a.apply(|k| LinComb::term(*k, q(2))), LinComb::term("w", q(6)));
        assert!(a.try_apply(|_| None::<LinComb<&str>>).is_err());
    }

    #[test]
    fn kernel_examples() {
        assert!(kernel_basis(&mat(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]), 3).is_empty());
        assert_eq!(kernel_basis(&mat(&[&[1, 1]]), 2), vec![vec![q(-1), q(1)]]);
        let k = kernel_basis(&mat(&[&[1, 2], &[2, 4]]), 2);
        assert_eq!(k, vec![vec![q(-2), q(1)]]);
        assert_eq!(kernel_basis(&[], 2).len(), 2);
    }

    #[test]
    fn binomials_and_factorials() {
        assert_eq!(binomial(5, 2), q(10));
        assert_eq!(binomial(2, 5), q(0));
        assert_eq!(factorial(5), q(120));
        assert_eq!(factorial(0), q(1));
    }
}
