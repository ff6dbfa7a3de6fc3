//! ISPW, the Hopf algebra of increasing strict packed words
//! x₁^{α₁}x₂^{α₂}…xₙ^{αₙ}, encoded by the composition (α₁,…,αₙ).

use std::collections::BTreeMap;

use crate::composition::Composition;
use crate::error::{AlgebraError, Result};
use crate::hopf::{reduced_coproduct, Dual, GradedHopf};
use crate::pword::{PackedWord, Permutation};
use crate::scalars::{binomial, factorial, kernel_of_map, q, LinComb, Q};

pub type BlockWord = Composition;

pub const DEFAULT_MAX_DEGREE: usize = 10;

#[derive(Clone, Debug)]
pub struct Ispw {
    max_degree: usize,
}

impl Default for Ispw {
    fn default() -> Self {
        Ispw {
            max_degree: DEFAULT_MAX_DEGREE,
        }
    }
}

impl Ispw {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_max_degree(max_degree: usize) -> Self {
        Ispw { max_degree }
    }
}

pub fn ispw_product(a: &BlockWord, b: &BlockWord) -> BlockWord {
    a.concat(b)
}

/// Σ over subsets I of the blocks: (blocks in I) ⊗ (the other blocks).
pub fn ispw_coproduct(a: &BlockWord) -> LinComb<(BlockWord, BlockWord)> {
    let parts = a.parts();
    let k = parts.len();
    let mut out = LinComb::zero();
    for mask in 0u64..(1 << k) {
        let (mut left, mut right) = (Vec::new(), Vec::new());
        for (i, &p) in parts.iter().enumerate() {
            if mask >> i & 1 == 1 {
                left.push(p);
            } else {
                right.push(p);
            }
        }
        out.add_term(
            (Composition::new(left).expect("parts stay positive"), Composition::new(right).expect("parts stay positive")),
            q(1),
        );
    }
    out
}

impl GradedHopf for Ispw {
    type Basis = BlockWord;

    fn name(&self) -> &str {
        "ISPW"
    }

    fn max_degree(&self) -> usize {
        self.max_degree
    }

    fn basis(&self, n: usize) -> Result<Vec<BlockWord>> {
        self.check_degree(n)?;
        Ok(Composition::all(n))
    }

    fn degree(&self, b: &BlockWord) -> usize {
        b.weight()
    }

    fn unit(&self) -> BlockWord {
        Composition::empty()
    }

    fn product(&self, a: &BlockWord, b: &BlockWord) -> LinComb<BlockWord> {
        LinComb::basis(ispw_product(a, b))
    }

    fn coproduct(&self, b: &BlockWord) -> LinComb<(BlockWord, BlockWord)> {
        ispw_coproduct(b)
    }
}

/// The quotient WMat → SPW: kills every word containing x₀.
pub fn project_spw(x: &LinComb<PackedWord>) -> LinComb<PackedWord> {
    x.filter(|w| !w.letters().contains(&0))
}

pub fn embed(x: &LinComb<BlockWord>) -> LinComb<PackedWord> {
    x.map_labels(|c| c.to_word())
}

/// Reads an SPW element as an ISPW element; fails if a word is not weakly
/// increasing.
pub fn restrict(x: &LinComb<PackedWord>) -> Result<LinComb<BlockWord>> {
    let mut out = LinComb::zero();
    for (w, c) in x.iter() {
        let b = Composition::from_word(w)
            .ok_or_else(|| AlgebraError::Structural(format!("{w} is not an increasing strict packed word")))?;
        out.add_term(b, c.clone());
    }
    Ok(out)
}

/// The parameters (α, β) of a primitive family: γ repeats βᵢ exactly αᵢ times.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GammaShape {
    alpha: Vec<usize>,
    beta: Vec<usize>,
}

impl GammaShape {
    pub fn new(alpha: Vec<usize>, beta: Vec<usize>) -> Result<Self> {
        if alpha.is_empty() || alpha.len() != beta.len() {
            return Err(AlgebraError::Contract("α and β must be nonempty of equal length".into()));
        }
        if alpha.contains(&0) || beta.contains(&0) {
            return Err(AlgebraError::Contract("α and β must be positive".into()));
        }
        let mut seen = beta.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != beta.len() {
            return Err(AlgebraError::Contract(format!("β values must be pairwise distinct: {beta:?}")));
        }
        Ok(GammaShape { alpha, beta })
    }

    /// Splits γ into runs of equal values; a value may not reappear later.
    pub fn from_sequence(gamma: &[usize]) -> Result<Self> {
        let (mut alpha, mut beta) = (Vec::new(), Vec::<usize>::new());
        for &g in gamma {
            if beta.last() == Some(&g) {
                *alpha.last_mut().expect("runs are nonempty") += 1;
            } else {
                alpha.push(1);
                beta.push(g);
            }
        }
        Self::new(alpha, beta)
    }

    pub fn alpha(&self) -> &[usize] {
        &self.alpha
    }

    pub fn beta(&self) -> &[usize] {
        &self.beta
    }

    pub fn sequence(&self) -> Vec<usize> {
        self.alpha
            .iter()
            .zip(&self.beta)
            .flat_map(|(&a, &b)| std::iter::repeat_n(b, a))
            .collect()
    }

    /// Total number of entries of γ.
    pub fn theta(&self) -> usize {
        self.alpha.iter().sum()
    }

    /// Entries of γ after the first run.
    pub fn rho(&self) -> usize {
        self.theta() - self.alpha[0]
    }

    /// Degree of the primitive elements built on γ.
    pub fn degree(&self) -> usize {
        self.sequence().iter().sum()
    }

    /// Every shape whose γ sums to `n`.
    pub fn all_of_degree(n: usize) -> Vec<GammaShape> {
        Composition::all(n)
            .into_iter()
            .filter_map(|c| GammaShape::from_sequence(c.parts()).ok())
            .collect()
    }
}

/// The composition (γ_{π(1)},…,γ_{π(θ)}).
fn gamma_word(gamma: &[usize], images: &[usize]) -> BlockWord {
    Composition::new(images.iter().map(|&i| gamma[i - 1]).collect()).expect("γ is positive")
}

/// The base permutation of the (k, 0) term, in one-line notation.
fn base_permutation(alpha1: usize, k: usize, sigma: &Permutation) -> Vec<usize> {
    let mut out: Vec<usize> = (1..=alpha1 - k + 1).collect();
    out.extend(sigma.images().iter().map(|&s| s + alpha1));
    out.extend(alpha1 - k + 2..=alpha1);
    out
}

/// P_γ: a primitive element attached to γ, with the first run of γ treated
/// as the distinguished block.
pub fn p_gamma(shape: &GammaShape) -> LinComb<BlockWord> {
    let gamma = shape.sequence();
    let alpha1 = shape.alpha[0];
    let rho = shape.rho();
    let norm = shape.alpha[1..].iter().fold(q(1), |acc, &a| acc / factorial(a));
    let mut out = LinComb::zero();
    for sigma in Permutation::all(rho) {
        for k in 1..=alpha1 {
            let outer = if k % 2 == 1 { q(1) } else { q(-1) } * binomial(alpha1 - 1, k - 1);
            let mut perm = base_permutation(alpha1, k, &sigma);
            for s in 0..=rho {
                if s > 0 {
                    perm.swap(alpha1 - k + s - 1, alpha1 - k + s);
                }
                let inner = if s % 2 == 0 { q(1) } else { q(-1) } * binomial(rho, s);
                out.add_term(gamma_word(&gamma, &perm), &outer * &inner * &norm);
            }
        }
    }
    out
}

/// P_{Λγ}: signed binomial weights on the position of the first-run entries.
pub fn p_lambda_gamma(shape: &GammaShape) -> LinComb<BlockWord> {
    let gamma = shape.sequence();
    let theta = shape.theta();
    let alpha1 = shape.alpha[0];
    let norm = shape.alpha.iter().fold(q(1), |acc, &a| acc / factorial(a));
    let mut out = LinComb::zero();
    for sigma in Permutation::all(theta) {
        let inverse = sigma.inverse();
        let mut coeff = Q::from_integer(0.into());
        for i in 1..=alpha1 {
            let pos = inverse.apply(i);
            let sign = if pos % 2 == 1 { q(1) } else { q(-1) };
            coeff += sign * binomial(theta - 1, pos - 1);
        }
        out.add_term(gamma_word(&gamma, sigma.images()), coeff * &norm);
    }
    out
}

/// The Hopf endomorphism replacing each block of size k ≤ |β| by one of size
/// β_k; larger blocks are kept.
pub fn lambda_beta(beta: &[usize], x: &LinComb<BlockWord>) -> Result<LinComb<BlockWord>> {
    if beta.contains(&0) {
        return Err(AlgebraError::Contract("β must be positive".into()));
    }
    Ok(x.map_labels(|c| {
        Composition::new(
            c.parts()
                .iter()
                .map(|&k| if k <= beta.len() { beta[k - 1] } else { k })
                .collect(),
        )
        .expect("β is positive")
    }))
}

/// Canonical primitive basis of degree `n`, computed separately on each
/// class of block words sharing the same multiset of block sizes.
pub fn primitive_basis_by_partition(n: usize) -> Result<Vec<(Vec<usize>, Vec<LinComb<BlockWord>>)>> {
    let h = Ispw::new();
    let mut classes: BTreeMap<Vec<usize>, Vec<BlockWord>> = BTreeMap::new();
    for c in h.basis(n)? {
        classes.entry(c.sorted_parts()).or_default().push(c);
    }
    classes
        .into_iter()
        .map(|(partition, domain)| {
            let images = domain
                .iter()
                .map(|b| reduced_coproduct(&h, &LinComb::basis(b.clone())))
                .collect::<Result<Vec<_>>>()?;
            Ok((partition, kernel_of_map(&domain, &images)))
        })
        .collect()
}

pub type DualBlockWord = Dual<Composition>;

/// The graded dual of ISPW: shuffle of compositions and deconcatenation.
#[derive(Clone, Debug, Default)]
pub struct IspwDual {
    primal: Ispw,
}

impl IspwDual {
    pub fn new() -> Self {
        Self::default()
    }
}

impl GradedHopf for IspwDual {
    type Basis = DualBlockWord;

    fn name(&self) -> &str {
        "ISPW*"
    }

    fn max_degree(&self) -> usize {
        self.primal.max_degree()
    }

    fn basis(&self, n: usize) -> Result<Vec<DualBlockWord>> {
        Ok(self.primal.basis(n)?.into_iter().map(Dual).collect())
    }

    fn degree(&self, b: &DualBlockWord) -> usize {
        b.0.weight()
    }

    fn unit(&self) -> DualBlockWord {
        Dual(Composition::empty())
    }

    fn product(&self, a: &DualBlockWord, b: &DualBlockWord) -> LinComb<DualBlockWord> {
        a.0.shuffle(&b.0).map_labels(|c| Dual(c.clone()))
    }

    fn coproduct(&self, b: &DualBlockWord) -> LinComb<(DualBlockWord, DualBlockWord)> {
        b.0.deconcatenate().map_labels(|(l, r)| (Dual(l.clone()), Dual(r.clone())))
    }
}
