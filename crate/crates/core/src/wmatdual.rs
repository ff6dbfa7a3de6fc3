//! Closed forms for the graded dual of WMat.

use num_traits::One;

use crate::error::{AlgebraError, Result};
use crate::hopf::{Dual, GradedHopf};
use crate::pword::{irreducible_factorize, shift, shuffles, star, PackedWord, Permutation, ShuffleKind};
use crate::scalars::{LinComb, Q};
use crate::wmat::{is_zero_word, WMat};

pub type DualWord = Dual<PackedWord>;

/// Which displayed case of the dual product applies to a pair of words.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Condition {
    /// Neither word contains x₀.
    C1,
    /// x₀ occurs and both words have nonzero letters.
    C2,
    /// The first word is x₀…x₀.
    C3,
    /// The second word is x₀…x₀.
    C4,
}

/// Evaluated in the order C₃, C₄, C₁, C₂; for nonempty words every pair falls
/// in one of them.
pub fn classify_pair(w1: &PackedWord, w2: &PackedWord) -> Result<Condition> {
    if w1.is_empty() || w2.is_empty() {
        return Err(AlgebraError::Contract("conditions are stated for nonempty words".into()));
    }
    let has_zero = |w: &PackedWord| w.letters().contains(&0);
    Ok(if is_zero_word(w1) {
        Condition::C3
    } else if is_zero_word(w2) {
        Condition::C4
    } else if !has_zero(w1) && !has_zero(w2) {
        Condition::C1
    } else {
        Condition::C2
    })
}

/// Words of length |w₂| equal to T_{sup w₁}(w₂) on the nonzero letters of w₂,
/// with each x₀ of w₂ replaced by any letter of IAlph(w₁) ∪ {0}.
pub fn gamma_set(w1: &PackedWord, w2: &PackedWord) -> Vec<Vec<u32>> {
    let s1 = w1.sup();
    let mut choices: Vec<u32> = w1.letters().to_vec();
    choices.push(0);
    choices.sort_unstable();
    choices.dedup();
    let shifted = shift(w2.letters(), s1);
    let mut out = vec![Vec::with_capacity(w2.len())];
    for &l in &shifted {
        if l != 0 {
            out.iter_mut().for_each(|g| g.push(l));
        } else {
            out = out
                .into_iter()
                .flat_map(|g| {
                    choices.iter().map(move |&c| {
                        let mut g = g.clone();
                        g.push(c);
                        g
                    })
                })
                .collect();
        }
    }
    out
}

/// The word τ∘u∘μ⁻¹: letters relabelled through τ (x₀ fixed), then position j
/// moved to μ(j).
pub fn relabel_and_move(u: &[u32], tau: &Permutation, mu: &Permutation) -> PackedWord {
    let mut out = vec![0u32; u.len()];
    for (j, &l) in u.iter().enumerate() {
        out[mu.apply(j + 1) - 1] = if l == 0 { 0 } else { tau.apply(l as usize) as u32 };
    }
    PackedWord::new(out).expect("relabelling a packed word by a permutation keeps it packed")
}

/// Σ_{τ, μ} Z_{τ∘u∘μ⁻¹} for each u, with τ and μ from the given shuffle sets.
pub fn shuffle_sum(words: &[Vec<u32>], taus: &[Permutation], mus: &[Permutation]) -> LinComb<DualWord> {
    let mut out = LinComb::zero();
    for u in words {
        for tau in taus {
            for mu in mus {
                out.add_term(Dual(relabel_and_move(u, tau, mu)), Q::one());
            }
        }
    }
    out
}

/// Z_{w₁}Z_{w₂} by the four-case formula.
pub fn dual_product_closed(w1: &PackedWord, w2: &PackedWord) -> LinComb<DualWord> {
    if w1.is_empty() {
        return LinComb::basis(Dual(w2.clone()));
    }
    if w2.is_empty() {
        return LinComb::basis(Dual(w1.clone()));
    }
    let (n1, n2) = (w1.len(), w2.len());
    let (s1, s2) = (w1.sup() as usize, w2.sup() as usize);
    let mus = shuffles(n1, n2, ShuffleKind::All);
    let identity = [Permutation::identity(s1 + s2)];
    let concat = |tail: &[u32]| {
        let mut u = w1.letters().to_vec();
        u.extend_from_slice(tail);
        u
    };
    match classify_pair(w1, w2).expect("both words are nonempty") {
        Condition::C1 => shuffle_sum(
            &[star(w1, w2).letters().to_vec()],
            &shuffles(s1, s2, ShuffleKind::All),
            &mus,
        ),
        Condition::C2 => {
            let words: Vec<Vec<u32>> = gamma_set(w1, w2).iter().map(|g| concat(g)).collect();
            shuffle_sum(&words, &shuffles(s1, s2, ShuffleKind::All), &mus)
        }
        Condition::C3 => shuffle_sum(&[star(w1, w2).letters().to_vec()], &identity, &mus),
        Condition::C4 => {
            let words: Vec<Vec<u32>> = gamma_set(w1, w2).iter().map(|g| concat(g)).collect();
            shuffle_sum(&words, &identity, &mus)
        }
    }
}

/// Δ(Z_w) as deconcatenation of the irreducible factorization of w.
pub fn dual_coproduct_closed(w: &PackedWord) -> LinComb<(DualWord, DualWord)> {
    let factors = irreducible_factorize(w);
    let fold = |fs: &[PackedWord]| fs.iter().fold(PackedWord::unit(), |acc, f| star(&acc, f));
    (0..=factors.len())
        .map(|i| {
            (
                (Dual(fold(&factors[..i])), Dual(fold(&factors[i..]))),
                Q::one(),
            )
        })
        .collect()
}

/// The graded dual of WMat with its closed-form operations.
#[derive(Clone, Debug, Default)]
pub struct WMatDual {
    primal: WMat,
}

impl WMatDual {
    pub fn new() -> Self {
        Self::default()
    }
}

impl GradedHopf for WMatDual {
    type Basis = DualWord;

    fn name(&self) -> &str {
        "WMat*"
    }

    fn max_degree(&self) -> usize {
        self.primal.max_degree()
    }

    fn basis(&self, n: usize) -> Result<Vec<DualWord>> {
        Ok(self.primal.basis(n)?.into_iter().map(Dual).collect())
    }

    fn degree(&self, b: &DualWord) -> usize {
        b.0.len()
    }

    fn unit(&self) -> DualWord {
        Dual(PackedWord::unit())
    }

    fn product(&self, a: &DualWord, b: &DualWord) -> LinComb<DualWord> {
        dual_product_closed(&a.0, &b.0)
    }

    fn coproduct(&self, b: &DualWord) -> LinComb<(DualWord, DualWord)> {
        dual_coproduct_closed(&b.0)
    }
}
