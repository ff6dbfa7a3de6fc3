//! Compositions of integers: finite tuples of positive parts.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{AlgebraError, Result};
use crate::pword::{shuffles, PackedWord, ShuffleKind};
use crate::scalars::LinComb;

/// A tuple of positive integers, ordered by (weight, length, lexicographic).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Composition(Vec<usize>);

impl Composition {
    pub fn empty() -> Self {
        Composition(Vec::new())
    }

    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(AlgebraError::Structural(format!("composition parts must be positive: {parts:?}")));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn concat(&self, other: &Composition) -> Composition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Composition(parts)
    }

    /// Parts in decreasing order, as a partition.
    pub fn sorted_parts(&self) -> Vec<usize> {
        let mut p = self.0.clone();
        p.sort_unstable_by(|a, b| b.cmp(a));
        p
    }

    /// The word x₁^{a₁}x₂^{a₂}…
    pub fn to_word(&self) -> PackedWord {
        let letters = self
            .0
            .iter()
            .enumerate()
            .flat_map(|(i, &a)| std::iter::repeat_n(i as u32 + 1, a))
            .collect();
        PackedWord::new(letters).expect("block words are packed")
    }

    /// Inverse of [`Composition::to_word`]; `None` unless the word is weakly
    /// increasing without x₀.
    pub fn from_word(w: &PackedWord) -> Option<Composition> {
        let letters = w.letters();
        if letters.contains(&0) || letters.windows(2).any(|p| p[0] > p[1]) {
            return None;
        }
        let mut parts = vec![0usize; w.sup() as usize];
        for &l in letters {
            parts[l as usize - 1] += 1;
        }
        Some(Composition(parts))
    }

    /// All compositions of `n` in canonical order.
    pub fn all(n: usize) -> Vec<Composition> {
        let mut out: Vec<Composition> = crate::wmat::compositions(n).into_iter().map(Composition).collect();
        out.sort();
        out
    }

    /// The shuffle of the part sequences, with multiplicities.
    pub fn shuffle(&self, other: &Composition) -> LinComb<Composition> {
        let joined = self.concat(other);
        shuffles(self.len(), other.len(), ShuffleKind::All)
            .iter()
            .map(|mu| {
                let mut parts = vec![0; joined.len()];
                for (j, &p) in joined.0.iter().enumerate() {
                    parts[mu.apply(j + 1) - 1] = p;
                }
                (Composition(parts), crate::scalars::q(1))
            })
            .collect()
    }

    /// Σ (first i parts) ⊗ (remaining parts), i = 0..len.
    pub fn deconcatenate(&self) -> LinComb<(Composition, Composition)> {
        (0..=self.len())
            .map(|i| {
                (
                    (Composition(self.0[..i].to_vec()), Composition(self.0[i..].to_vec())),
                    crate::scalars::q(1),
                )
            })
            .collect()
    }
}

impl Ord for Composition {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.weight(), self.len(), &self.0).cmp(&(other.weight(), other.len(), &other.0))
    }
}

impl PartialOrd for Composition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::q;

    fn c(p: &[usize]) -> Composition {
        Composition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn order_and_display() {
        assert!(c(&[3]) < c(&[1, 2]));
        assert!(c(&[1, 2]) < c(&[2, 1]));
        assert!(c(&[5]) < c(&[1, 1, 1, 1, 1, 1]));
        assert_eq!(c(&[1, 2, 1]).to_string(), "(1,2,1)");
        assert_eq!(Composition::empty().to_string(), "()");
        assert!(Composition::new(vec![1, 0]).is_err());
    }

    #[test]
    fn word_round_trip() {
        for n in 0..=6 {
            let all = Composition::all(n);
            assert_eq!(all.len(), if n == 0 { 1 } else { 1 << (n - 1) });
            for a in all {
                assert_eq!(Composition::from_word(&a.to_word()), Some(a));
            }
        }
        let w = PackedWord::new(vec![2, 1]).unwrap();
        assert_eq!(Composition::from_word(&w), None);
    }

    #[test]
    fn shuffle_multiplicities() {
        assert_eq!(c(&[2]).shuffle(&c(&[2])), LinComb::term(c(&[2, 2]), q(2)));
        let s = c(&[1, 2]).shuffle(&c(&[2]));
        let expected: LinComb<Composition> = [(c(&[1, 2, 2]), q(2)), (c(&[2, 1, 2]), q(1))].into_iter().collect();
        assert_eq!(s, expected);
    }
}
