//! Packed words: packing, shifting, shifted concatenation, extraction and
//! contraction, enumeration, irreducible factorization and shuffles.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::OnceLock;

use crate::error::{AlgebraError, Result};

/// Largest length for which packed words are enumerated.
pub const MAX_ENUM_DEGREE: usize = 8;

/// A word over x₀, x₁, … whose nonzero letters are exactly {1, …, sup}.
///
/// Letter `i` stands for xᵢ. Ordered by length first, then lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct PackedWord(Vec<u32>);

impl PackedWord {
    /// The empty word, unit of the algebra.
    pub fn unit() -> Self {
        PackedWord(Vec::new())
    }

    /// Validates an already packed letter sequence.
    pub fn new(letters: Vec<u32>) -> Result<Self> {
        if !is_packed(&letters) {
            return Err(AlgebraError::Structural(format!(
                "{} is not a packed word",
                RawWord(&letters)
            )));
        }
        Ok(PackedWord(letters))
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Largest letter, 0 for the empty word.
    pub fn sup(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// True when every letter 1..=len occurs exactly once.
    pub fn is_permutation(&self) -> bool {
        !self.0.contains(&0) && self.sup() as usize == self.len()
    }

    pub fn stats(&self) -> WordStats {
        word_stats(self)
    }
}

impl Ord for PackedWord {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for PackedWord {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PackedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&RawWord(&self.0), f)
    }
}

impl fmt::Debug for PackedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&RawWord(&self.0), f)
    }
}

struct RawWord<'a>(&'a [u32]);

impl fmt::Display for RawWord<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "]")
    }
}

pub fn is_packed(letters: &[u32]) -> bool {
    let sup = letters.iter().copied().max().unwrap_or(0) as usize;
    if sup > letters.len() {
        return false;
    }
    let mut seen = vec![false; sup + 1];
    for &l in letters {
        seen[l as usize] = true;
    }
    seen.iter().skip(1).all(|&s| s)
}

/// Replaces each nonzero letter by its rank among the distinct nonzero letters.
pub fn pack(letters: &[u32]) -> PackedWord {
    let distinct: BTreeSet<u32> = letters.iter().copied().filter(|&l| l != 0).collect();
    let rank: BTreeMap<u32, u32> = distinct
        .into_iter()
        .enumerate()
        .map(|(i, l)| (l, i as u32 + 1))
        .collect();
    PackedWord(
        letters
            .iter()
            .map(|l| if *l == 0 { 0 } else { rank[l] })
            .collect(),
    )
}

/// Adds `s` to every nonzero letter.
pub fn shift(letters: &[u32], s: u32) -> Vec<u32> {
    letters
        .iter()
        .map(|&l| if l == 0 { 0 } else { l + s })
        .collect()
}

/// Shifted concatenation `u T_{sup u}(v)`.
pub fn star(u: &PackedWord, v: &PackedWord) -> PackedWord {
    let mut letters = u.0.clone();
    letters.extend(shift(&v.0, u.sup()));
    PackedWord(letters)
}

/// Strictly increasing 1-based positions inside a word.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PositionSet(Vec<usize>);

impl PositionSet {
    pub fn new(positions: Vec<usize>) -> Result<Self> {
        if positions.first() == Some(&0) || positions.windows(2).any(|p| p[0] >= p[1]) {
            return Err(AlgebraError::Structural(
                "positions must be 1-based and strictly increasing".into(),
            ));
        }
        Ok(PositionSet(positions))
    }

    pub fn positions(&self) -> &[usize] {
        &self.0
    }

    fn mask(&self, len: usize) -> Result<u64> {
        let mut m = 0u64;
        for &p in &self.0 {
            if p > len {
                return Err(AlgebraError::Structural(format!(
                    "position {p} out of range for a word of length {len}"
                )));
            }
            m |= 1 << (p - 1);
        }
        Ok(m)
    }
}

/// `(pack(w[I]), pack(w[J]/w[I]))` where J is the complement of I and the
/// letters of w[J] that occur in w[I] are contracted to x₀.
pub fn extract_contract(w: &PackedWord, positions: &PositionSet) -> Result<(PackedWord, PackedWord)> {
    Ok(split_by_mask(w.letters(), positions.mask(w.len())?))
}

/// Same as [`extract_contract`] with the extracted positions given as a bit mask
/// (bit `i` selects the 0-based position `i`).
pub fn split_by_mask(w: &[u32], mask: u64) -> (PackedWord, PackedWord) {
    let mut extracted = Vec::new();
    let mut rest = Vec::new();
    let mut alphabet = 0u64;
    for (i, &l) in w.iter().enumerate() {
        if mask >> i & 1 == 1 {
            extracted.push(l);
            alphabet |= 1 << l;
        }
    }
    for (i, &l) in w.iter().enumerate() {
        if mask >> i & 1 == 0 {
            rest.push(if alphabet >> l & 1 == 1 { 0 } else { l });
        }
    }
    (pack(&extracted), pack(&rest))
}

/// Length, sup, letter frequencies and the set of nonzero letters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordStats {
    pub length: usize,
    pub sup: u32,
    pub frequencies: BTreeMap<u32, usize>,
    pub nonzero_alphabet: BTreeSet<u32>,
}

pub fn word_stats(w: &PackedWord) -> WordStats {
    let mut frequencies = BTreeMap::new();
    for &l in w.letters() {
        *frequencies.entry(l).or_insert(0) += 1;
    }
    WordStats {
        length: w.len(),
        sup: w.sup(),
        nonzero_alphabet: frequencies.keys().copied().filter(|&l| l != 0).collect(),
        frequencies,
    }
}

static ENUM_CACHE: [OnceLock<Vec<PackedWord>>; MAX_ENUM_DEGREE + 1] =
    [const { OnceLock::new() }; MAX_ENUM_DEGREE + 1];

/// All packed words of length `n`, in canonical order. Computed once per length.
pub fn enumerate_packed(n: usize) -> Result<&'static [PackedWord]> {
    if n > MAX_ENUM_DEGREE {
        return Err(AlgebraError::Resource {
            algebra: "WMat".into(),
            degree: n,
            cap: MAX_ENUM_DEGREE,
        });
    }
    Ok(ENUM_CACHE[n].get_or_init(|| {
        let mut out = Vec::new();
        let mut prefix = Vec::with_capacity(n);
        let mut counts = vec![0usize; n + 1];
        grow_packed(n, &mut prefix, &mut counts, &mut out);
        out
    }))
}

// Letters are tried in increasing order, so the output is lexicographic.
fn grow_packed(n: usize, prefix: &mut Vec<u32>, counts: &mut [usize], out: &mut Vec<PackedWord>) {
    let max = (1..=n).rev().find(|&l| counts[l] > 0).unwrap_or(0);
    let missing = (1..=max).filter(|&l| counts[l] == 0).count();
    let remaining = n - prefix.len();
    if missing > remaining {
        return;
    }
    if remaining == 0 {
        out.push(PackedWord(prefix.clone()));
        return;
    }
    for l in 0..=n {
        prefix.push(l as u32);
        counts[l] += 1;
        grow_packed(n, prefix, counts, out);
        counts[l] -= 1;
        prefix.pop();
    }
}

/// The unique factorization `w = w₁∗…∗w_k` into irreducible packed words.
pub fn irreducible_factorize(w: &PackedWord) -> Vec<PackedWord> {
    let mut factors = Vec::new();
    let mut rest: Vec<u32> = w.letters().to_vec();
    while !rest.is_empty() {
        let cut = (1..=rest.len())
            .find(|&k| {
                let prefix = &rest[..k];
                let s = prefix.iter().copied().max().unwrap_or(0);
                is_packed(prefix) && rest[k..].iter().all(|&l| l == 0 || l > s)
            })
            .expect("the whole word is always an admissible prefix");
        let s = rest[..cut].iter().copied().max().unwrap_or(0);
        factors.push(PackedWord(rest[..cut].to_vec()));
        rest = rest[cut..]
            .iter()
            .map(|&l| if l == 0 { 0 } else { l - s })
            .collect();
    }
    factors
}

/// A bijection of {1, …, n}, stored as its images (σ(1), …, σ(n)).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n + 1];
        for &i in &images {
            if i == 0 || i > n || seen[i] {
                return Err(AlgebraError::Structural(format!(
                    "{images:?} is not a permutation"
                )));
            }
            seen[i] = true;
        }
        Ok(Permutation(images))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// σ(i) for 1-based `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &s) in self.0.iter().enumerate() {
            inv[s - 1] = i + 1;
        }
        Permutation(inv)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Self {
        Permutation(other.0.iter().map(|&i| self.0[i - 1]).collect())
    }

    /// Exchanges the values at 1-based positions `a` and `b`: `self ∘ (a b)`.
    pub fn swap_positions(&self, a: usize, b: usize) -> Self {
        let mut images = self.0.clone();
        images.swap(a - 1, b - 1);
        Permutation(images)
    }

    /// All permutations of {1..n} in lexicographic order of images.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation(current.clone()));
            let Some(i) = (1..n).rev().find(|&i| current[i - 1] < current[i]) else {
                break;
            };
            let j = (i..n).rev().find(|&j| current[j] > current[i - 1]).unwrap();
            current.swap(i - 1, j);
            current[i..].reverse();
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letters: Vec<u32> = self.0.iter().map(|&i| i as u32).collect();
        fmt::Display::fmt(&RawWord(&letters), f)
    }
}

/// Which shuffles to keep, according to the preimage of 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ShuffleKind {
    All,
    /// ρ⁻¹(1) = 1.
    FirstFixed,
    /// ρ⁻¹(1) = n₁ + 1.
    SecondFixed,
}

/// The (n₁, n₂)-shuffles: ρ increasing on 1..n₁ and on n₁+1..n₁+n₂.
pub fn shuffles(n1: usize, n2: usize, kind: ShuffleKind) -> Vec<Permutation> {
    let n = n1 + n2;
    let mut out = Vec::new();
    for first in subsets_of_size(n, n1) {
        let mut images = first.clone();
        images.extend((1..=n).filter(|i| !first.contains(i)));
        let keep = match kind {
            ShuffleKind::All => true,
            ShuffleKind::FirstFixed => n1 > 0 && images[0] == 1,
            ShuffleKind::SecondFixed => n2 > 0 && images[n1] == 1,
        };
        if keep {
            out.push(Permutation(images));
        }
    }
    out
}

/// Increasing k-subsets of {1..n}, lexicographically.
pub fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..=n {
            if n - i + 1 < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(1, n, k, &mut Vec::new(), &mut out);
    }
    out
}
