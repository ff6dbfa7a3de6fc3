//! The Hopf algebra of packed words with the extraction-contraction coproduct.

use num_traits::{One, Zero};

use crate::error::{AlgebraError, Result};
use crate::hopf::GradedHopf;
use crate::pword::{enumerate_packed, pack, shift, split_by_mask, star, PackedWord, MAX_ENUM_DEGREE};
use crate::scalars::{binomial, factorial, LinComb, Tensor, Q};
use crate::series::TruncatedSeries;

pub const DEFAULT_MAX_DEGREE: usize = 7;

pub type WElem = LinComb<PackedWord>;

/// Packed words under shifted concatenation and extraction-contraction.
#[derive(Clone, Debug)]
pub struct WMat {
    max_degree: usize,
}

impl Default for WMat {
    fn default() -> Self {
        WMat {
            max_degree: DEFAULT_MAX_DEGREE,
        }
    }
}

impl WMat {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_max_degree(max_degree: usize) -> Result<Self> {
        if max_degree > MAX_ENUM_DEGREE {
            return Err(AlgebraError::Resource {
                algebra: "WMat".into(),
                degree: max_degree,
                cap: MAX_ENUM_DEGREE,
            });
        }
        Ok(WMat { max_degree })
    }
}

impl GradedHopf for WMat {
    type Basis = PackedWord;

    fn name(&self) -> &str {
        "WMat"
    }

    fn max_degree(&self) -> usize {
        self.max_degree
    }

    fn basis(&self, n: usize) -> Result<Vec<PackedWord>> {
        self.check_degree(n)?;
        Ok(enumerate_packed(n)?.to_vec())
    }

    fn degree(&self, b: &PackedWord) -> usize {
        b.len()
    }

    fn unit(&self) -> PackedWord {
        PackedWord::unit()
    }

    fn product(&self, a: &PackedWord, b: &PackedWord) -> WElem {
        LinComb::basis(star(a, b))
    }

    fn coproduct(&self, w: &PackedWord) -> LinComb<(PackedWord, PackedWord)> {
        wmat_coproduct(w)
    }
}

/// Σ over all splits I+J of pack(w[I]) ⊗ pack(w[J]/w[I]).
pub fn wmat_coproduct(w: &PackedWord) -> LinComb<(PackedWord, PackedWord)> {
    let mut out = LinComb::zero();
    for mask in 0..1u64 << w.len() {
        out.add_term(split_by_mask(w.letters(), mask), Q::one());
    }
    out
}

pub fn wmat_product(a: &WElem, b: &WElem) -> WElem {
    crate::hopf::product_lc(&WMat::new(), a, b)
}

/// Blocks of an assignment of positions to labels 0..k, contracted in order:
/// the letters already used by earlier blocks become x₀.
fn contracted_blocks(w: &[u32], assignment: &[u32], blocks: u32) -> Vec<PackedWord> {
    let mut used = 0u64;
    let mut out = Vec::with_capacity(blocks as usize);
    for b in 0..blocks {
        let mut raw = Vec::new();
        let mut letters = 0u64;
        for (l, a) in w.iter().zip(assignment) {
            if *a == b {
                raw.push(if used >> l & 1 == 1 { 0 } else { *l });
                letters |= 1 << l;
            }
        }
        used |= letters;
        out.push(pack(&raw));
    }
    out
}

/// Δ^{(k)}(w) as the sum over ordered decompositions I₁+…+I_{k+1} with empty
/// blocks allowed.
pub fn iterated_coproduct_closed(w: &PackedWord, k: usize) -> LinComb<Tensor<PackedWord>> {
    let n = w.len();
    let legs = k as u32 + 1;
    let mut out = LinComb::zero();
    let mut assignment = vec![0u32; n];
    loop {
        let blocks = contracted_blocks(w.letters(), &assignment, legs);
        out.add_term(Tensor(blocks), Q::one());
        // Odometer over all functions positions → legs.
        let mut i = 0;
        while i < n && assignment[i] + 1 == legs {
            assignment[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
        assignment[i] += 1;
    }
    out
}

/// S(w) as the signed sum over ordered set partitions of the positions.
pub fn antipode_closed_sum(w: &PackedWord) -> Result<WElem> {
    if w.is_empty() {
        return Err(AlgebraError::Contract("closed antipode sum needs a nonempty word".into()));
    }
    let mut out = LinComb::zero();
    // Ordered set partitions into k nonempty blocks are the packed words
    // without x₀ of length |w| and sup k.
    for surjection in enumerate_packed(w.len())? {
        if surjection.letters().contains(&0) {
            continue;
        }
        let k = surjection.sup();
        let assignment: Vec<u32> = surjection.letters().iter().map(|l| l - 1).collect();
        let product = contracted_blocks(w.letters(), &assignment, k)
            .iter()
            .fold(PackedWord::unit(), |acc, b| star(&acc, b));
        let sign = if k % 2 == 0 { Q::one() } else { -Q::one() };
        out.add_term(product, sign);
    }
    Ok(out)
}

/// Words whose antipode has a closed form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AntipodeFamily {
    /// x₀ⁿ.
    Zeros { n: usize },
    /// x₁ⁿ.
    Ones { n: usize },
    /// x₁^{α_n} x₂^{α_{n−1}} … x_n^{α₁}.
    Blocks { alpha: Vec<usize> },
    /// x₁x₂…xₙ.
    Increasing { n: usize },
    /// xₙ…x₁.
    Decreasing { n: usize },
    /// x_i…x₁ x_{i+1}…xₙ.
    DecreasingPrefix { n: usize, i: usize },
    /// x₁…x_{n−i} xₙ…x_{n−i+1}.
    DecreasingSuffix { n: usize, i: usize },
}

impl AntipodeFamily {
    fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(AlgebraError::Structural(msg.to_string()));
        match self {
            AntipodeFamily::Zeros { n }
            | AntipodeFamily::Ones { n }
            | AntipodeFamily::Increasing { n }
            | AntipodeFamily::Decreasing { n } => {
                if *n == 0 {
                    return bad("the family needs n ≥ 1");
                }
            }
            AntipodeFamily::Blocks { alpha } => {
                if alpha.is_empty() || alpha.contains(&0) {
                    return bad("block multiplicities must be a nonempty tuple of positive integers");
                }
            }
            AntipodeFamily::DecreasingPrefix { n, i } | AntipodeFamily::DecreasingSuffix { n, i } => {
                if *i == 0 || i > n {
                    return bad("the family needs 1 ≤ i ≤ n");
                }
            }
        }
        Ok(())
    }

    /// The word the closed form is about.
    pub fn word(&self) -> Result<PackedWord> {
        self.validate()?;
        let letters: Vec<u32> = match self {
            AntipodeFamily::Zeros { n } => vec![0; *n],
            AntipodeFamily::Ones { n } => vec![1; *n],
            AntipodeFamily::Blocks { alpha } => {
                let n = alpha.len();
                (1..=n)
                    .flat_map(|j| std::iter::repeat(j as u32).take(alpha[n - j]))
                    .collect()
            }
            AntipodeFamily::Increasing { n } => (1..=*n as u32).collect(),
            AntipodeFamily::Decreasing { n } => (1..=*n as u32).rev().collect(),
            AntipodeFamily::DecreasingPrefix { n, i } => {
                let (n, i) = (*n as u32, *i as u32);
                (1..=i).rev().chain(i + 1..=n).collect()
            }
            AntipodeFamily::DecreasingSuffix { n, i } => {
                let (n, i) = (*n as u32, *i as u32);
                (1..=n - i).chain((n - i + 1..=n).rev()).collect()
            }
        };
        PackedWord::new(letters)
    }

    /// The closed-form value of the antipode on [`AntipodeFamily::word`].
    pub fn antipode(&self) -> Result<WElem> {
        self.validate()?;
        let sign = |e: usize| if e % 2 == 0 { Q::one() } else { -Q::one() };
        let word = |letters: Vec<u32>| PackedWord::new(letters).expect("closed forms produce packed words");
        let mut out = LinComb::zero();
        match self {
            AntipodeFamily::Zeros { n } => out.add_term(word(vec![0; *n]), sign(*n)),
            AntipodeFamily::Ones { n } => {
                for k in 1..=*n {
                    let mut letters = vec![1; k];
                    letters.extend(vec![0; n - k]);
                    out.add_term(word(letters), sign(n + 1 + k) * binomial(*n, k));
                }
            }
            AntipodeFamily::Blocks { alpha } => {
                let total: usize = alpha.iter().sum();
                let global = sign(alpha.len() + total);
                for k in bounded_tuples(alpha) {
                    let s: usize = k.iter().sum();
                    let mut coeff = global.clone() * sign(s);
                    let mut letters = Vec::with_capacity(total);
                    for (j, (&kj, &aj)) in k.iter().zip(alpha).enumerate() {
                        coeff *= binomial(aj, kj);
                        letters.extend(std::iter::repeat(j as u32 + 1).take(kj));
                        letters.extend(std::iter::repeat(0).take(aj - kj));
                    }
                    out.add_term(word(letters), coeff);
                }
            }
            AntipodeFamily::Increasing { n } => out.add_term(word((1..=*n as u32).collect()), sign(*n)),
            AntipodeFamily::Decreasing { n } => {
                for alpha in compositions(*n) {
                    let k = alpha.len();
                    out.add_term(word(decreasing_blocks(&alpha)), sign(k) * multinomial(&alpha));
                }
            }
            AntipodeFamily::DecreasingPrefix { n, i } => {
                let prefix = (1..=(n - i) as u32).collect::<Vec<_>>();
                for alpha in compositions(*i) {
                    let k = alpha.len();
                    let mut letters = prefix.clone();
                    letters.extend(shift(&decreasing_blocks(&alpha), (n - i) as u32));
                    out.add_term(word(letters), sign(n + i + k) * multinomial(&alpha));
                }
            }
            AntipodeFamily::DecreasingSuffix { n, i } => {
                for alpha in compositions(*i) {
                    let k = alpha.len();
                    let mut letters = decreasing_blocks(&alpha);
                    letters.extend(*i as u32 + 1..=*n as u32);
                    out.add_term(word(letters), sign(n + i + k) * multinomial(&alpha));
                }
            }
        }
        Ok(out)
    }
}

/// All tuples k with 1 ≤ kⱼ ≤ αⱼ.
fn bounded_tuples(alpha: &[usize]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for &a in alpha {
        out = out
            .into_iter()
            .flat_map(|t| {
                (1..=a).map(move |k| {
                    let mut t = t.clone();
                    t.push(k);
                    t
                })
            })
            .collect();
    }
    out
}

/// Compositions of n, in lexicographic order.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// n!/(α₁!…α_k!).
pub fn multinomial(alpha: &[usize]) -> Q {
    alpha
        .iter()
        .fold(factorial(alpha.iter().sum()), |acc, &a| acc / factorial(a))
}

/// x_{α₁}…x₁ x_{α₁+α₂}…x_{α₁+1} …: consecutive decreasing runs.
pub fn decreasing_blocks(alpha: &[usize]) -> Vec<u32> {
    let mut letters = Vec::new();
    let mut offset = 0u32;
    for &a in alpha {
        letters.extend((offset + 1..=offset + a as u32).rev());
        offset += a as u32;
    }
    letters
}

/// Σ_{n ≤ order} dim(WMat)ₙ hⁿ from the enumeration.
pub fn hilbert_series(order: usize) -> Result<TruncatedSeries> {
    let coeffs = (0..=order)
        .map(|n| enumerate_packed(n).map(|b| Q::from_integer(b.len().into())))
        .collect::<Result<Vec<_>>>()?;
    Ok(TruncatedSeries::from_coeffs(coeffs, order))
}

/// Coefficient of hⁿ in 1 − 1/F, the primitive dimension a cofree coalgebra
/// with Hilbert series F would have.
pub fn cofree_primitive_prediction(n: usize) -> Result<Q> {
    let f = hilbert_series(n)?;
    let g = TruncatedSeries::one(n).sub(&f.inverse()?)?;
    Ok(g.coeff(n))
}

/// Σ_{n≥1} 2·Σ_{α⊨n} n!/α! · hⁿ, the closed count of packed words.
pub fn packed_word_count(n: usize) -> Q {
    if n == 0 {
        return Q::one();
    }
    let total: Q = compositions(n).iter().map(|a| multinomial(a)).sum();
    total * Q::from_integer(2.into())
}

pub fn is_zero_word(w: &PackedWord) -> bool {
    w.letters().iter().all(|l| l.is_zero())
}
