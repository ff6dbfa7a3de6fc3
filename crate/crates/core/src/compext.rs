//! Ce, the Hopf algebra of extended compositions: WMat modulo letter
//! permutations, read through the frequency vector of a word.
//!
//! Also the pieces of its semi-direct description: the polynomial algebra
//! H = K[(1)], the free algebra C on the (0,n), the coaction of H on C,
//! the Molnar product and coproduct on H⊗C, and the induced actions on duals
//! and on characters.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Zero};

use crate::composition::Composition;
use crate::error::{AlgebraError, Result};
use crate::hopf::{reduced_coproduct, Dual, GradedHopf};
use crate::ispw::{ispw_coproduct, p_gamma, p_lambda_gamma, BlockWord, GammaShape};
use crate::pword::PackedWord;
use crate::scalars::{binomial, factorial, kernel_of_map, q, LinComb, Q};
use crate::series::TruncatedSeries;

pub const DEFAULT_MAX_DEGREE: usize = 10;

/// (α₀; α₁,…,α_k): α₀ counts the letter x₀, the parts the other letters.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct ExtComposition {
    alpha0: usize,
    parts: Composition,
}

impl ExtComposition {
    pub fn new(alpha0: usize, parts: Composition) -> Self {
        ExtComposition { alpha0, parts }
    }

    /// Fails on a zero part.
    pub fn from_parts(alpha0: usize, parts: Vec<usize>) -> Result<Self> {
        Ok(ExtComposition::new(alpha0, Composition::new(parts)?))
    }

    pub fn unit() -> Self {
        Self::default()
    }

    pub fn alpha0(&self) -> usize {
        self.alpha0
    }

    pub fn parts(&self) -> &Composition {
        &self.parts
    }

    pub fn degree(&self) -> usize {
        self.alpha0 + self.parts.weight()
    }

    pub fn is_unit(&self) -> bool {
        self.alpha0 == 0 && self.parts.is_empty()
    }

    /// All extended compositions of degree `n`; there are 2ⁿ of them.
    pub fn all(n: usize) -> Vec<ExtComposition> {
        (0..=n)
            .flat_map(|a| Composition::all(n - a).into_iter().map(move |c| ExtComposition::new(a, c)))
            .collect()
    }
}

impl Ord for ExtComposition {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.degree(), self.alpha0, self.parts.len(), self.parts.parts()).cmp(&(
            other.degree(),
            other.alpha0,
            other.parts.len(),
            other.parts.parts(),
        ))
    }
}

impl PartialOrd for ExtComposition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for ExtComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};", self.alpha0)?;
        for (i, p) in self.parts.parts().iter().enumerate() {
            f.write_str(if i == 0 { " " } else { "," })?;
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// The frequency vector (|w|₀, |w|₁, …, |w|_sup).
pub fn pi_project(w: &PackedWord) -> ExtComposition {
    let mut counts = vec![0usize; w.sup() as usize + 1];
    for &l in w.letters() {
        counts[l as usize] += 1;
    }
    let alpha0 = counts[0];
    ExtComposition::new(alpha0, Composition::new(counts.split_off(1)).expect("packed words use every letter"))
}

pub fn pi_project_lc(x: &LinComb<PackedWord>) -> LinComb<ExtComposition> {
    x.map_labels(pi_project)
}

pub fn ce_product(a: &ExtComposition, b: &ExtComposition) -> ExtComposition {
    ExtComposition::new(a.alpha0 + b.alpha0, a.parts.concat(&b.parts))
}

/// Every tuple k with lo ≤ kᵢ ≤ hiᵢ, in lexicographic order.
fn boxes(bounds: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::with_capacity(bounds.len())];
    for &(lo, hi) in bounds {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                (lo..=hi).map(move |k| {
                    let mut v = prefix.clone();
                    v.push(k);
                    v
                })
            })
            .collect();
    }
    out
}

/// Weak compositions of `total` into `len` non-negative parts.
fn weak_compositions(total: usize, len: usize) -> Vec<Vec<usize>> {
    if len == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    boxes(&vec![(0, total); len]).into_iter().filter(|v| v.iter().sum::<usize>() == total).collect()
}

fn ones_binomial(n: &[usize], k: &[usize]) -> Q {
    n.iter().zip(k).map(|(&a, &b)| binomial(a, b)).product()
}

/// Σ_a Σ_{I} Σ_{1≤kᵢ≤αᵢ} C(α₀,a)ΠC(αᵢ,kᵢ) (a; k_I) ⊗ (α₀−a+Σ(αᵢ−kᵢ); α outside I).
pub fn ce_coproduct(x: &ExtComposition) -> LinComb<(ExtComposition, ExtComposition)> {
    let parts = x.parts.parts();
    let mut out = LinComb::zero();
    for a in 0..=x.alpha0 {
        let ca = binomial(x.alpha0, a);
        for mask in 0u64..(1 << parts.len()) {
            let chosen: Vec<usize> = (0..parts.len()).filter(|i| mask >> i & 1 == 1).map(|i| parts[i]).collect();
            let rest: Vec<usize> = (0..parts.len()).filter(|i| mask >> i & 1 == 0).map(|i| parts[i]).collect();
            let bounds: Vec<(usize, usize)> = chosen.iter().map(|&p| (1, p)).collect();
            for k in boxes(&bounds) {
                let leftover: usize = chosen.iter().zip(&k).map(|(p, k)| p - k).sum();
                let coeff = &ca * ones_binomial(&chosen, &k);
                let left = ExtComposition::new(a, Composition::new(k).expect("kᵢ ≥ 1"));
                let right = ExtComposition::new(
                    x.alpha0 - a + leftover,
                    Composition::new(rest.clone()).expect("parts stay positive"),
                );
                out.add_term((left, right), coeff);
            }
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct Ce {
    max_degree: usize,
}

impl Default for Ce {
    fn default() -> Self {
        Ce {
            max_degree: DEFAULT_MAX_DEGREE,
        }
    }
}

impl Ce {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_max_degree(max_degree: usize) -> Self {
        Ce { max_degree }
    }
}

impl GradedHopf for Ce {
    type Basis = ExtComposition;

    fn name(&self) -> &str {
        "Ce"
    }

    fn max_degree(&self) -> usize {
        self.max_degree
    }

    fn basis(&self, n: usize) -> Result<Vec<ExtComposition>> {
        self.check_degree(n)?;
        Ok(ExtComposition::all(n))
    }

    fn degree(&self, b: &ExtComposition) -> usize {
        b.degree()
    }

    fn unit(&self) -> ExtComposition {
        ExtComposition::unit()
    }

    fn product(&self, a: &ExtComposition, b: &ExtComposition) -> LinComb<ExtComposition> {
        LinComb::basis(ce_product(a, b))
    }

    fn coproduct(&self, b: &ExtComposition) -> LinComb<(ExtComposition, ExtComposition)> {
        ce_coproduct(b)
    }
}

pub type DualExtComposition = Dual<ExtComposition>;

/// Σ_a Σ_u Z_(a; α₁..α_u) ⊗ Z_(α₀−a; α_{u+1}..).
pub fn ce_dual_coproduct(z: &DualExtComposition) -> LinComb<(DualExtComposition, DualExtComposition)> {
    let x = &z.0;
    let parts = x.parts.parts();
    let mut out = LinComb::zero();
    for a in 0..=x.alpha0 {
        for u in 0..=parts.len() {
            let left = ExtComposition::new(a, Composition::new(parts[..u].to_vec()).expect("positive"));
            let right = ExtComposition::new(x.alpha0 - a, Composition::new(parts[u..].to_vec()).expect("positive"));
            out.add_term((Dual(left), Dual(right)), q(1));
        }
    }
    out
}

/// Z_α Z_β = Σ_μ Σ_γ C(α₀+μ,α₀)ΠC(αᵢ+γᵢ,αᵢ) Z_(α₀+μ; (α+γ) ⧢ β), where γ
/// runs over weak compositions of β₀−μ with one entry per part of α.
pub fn ce_dual_product(za: &DualExtComposition, zb: &DualExtComposition) -> LinComb<DualExtComposition> {
    let (a, b) = (&za.0, &zb.0);
    let alpha = a.parts.parts();
    let mut out = LinComb::zero();
    for mu in 0..=b.alpha0 {
        for gamma in weak_compositions(b.alpha0 - mu, alpha.len()) {
            let grown: Vec<usize> = alpha.iter().zip(&gamma).map(|(x, g)| x + g).collect();
            let coeff = binomial(a.alpha0 + mu, a.alpha0) * ones_binomial(&grown, alpha);
            let grown = Composition::new(grown).expect("positive");
            for (c, m) in grown.shuffle(&b.parts).iter() {
                out.add_term(Dual(ExtComposition::new(a.alpha0 + mu, c.clone())), &coeff * m);
            }
        }
    }
    out
}

#[derive(Clone, Debug, Default)]
pub struct CeDual {
    primal: Ce,
}

impl CeDual {
    pub fn new() -> Self {
        Self::default()
    }
}

impl GradedHopf for CeDual {
    type Basis = DualExtComposition;

    fn name(&self) -> &str {
        "Ce*"
    }

    fn max_degree(&self) -> usize {
        self.primal.max_degree()
    }

    fn basis(&self, n: usize) -> Result<Vec<DualExtComposition>> {
        Ok(self.primal.basis(n)?.into_iter().map(Dual).collect())
    }

    fn degree(&self, b: &DualExtComposition) -> usize {
        b.0.degree()
    }

    fn unit(&self) -> DualExtComposition {
        Dual(ExtComposition::unit())
    }

    fn product(&self, a: &DualExtComposition, b: &DualExtComposition) -> LinComb<DualExtComposition> {
        ce_dual_product(a, b)
    }

    fn coproduct(&self, b: &DualExtComposition) -> LinComb<(DualExtComposition, DualExtComposition)> {
        ce_dual_coproduct(b)
    }
}

/// H = K[(1)] with (1) primitive; the basis element (1)^m is labelled m.
#[derive(Clone, Debug)]
pub struct PolynomialAlgebra {
    max_degree: usize,
}

impl Default for PolynomialAlgebra {
    fn default() -> Self {
        PolynomialAlgebra {
            max_degree: DEFAULT_MAX_DEGREE,
        }
    }
}

impl GradedHopf for PolynomialAlgebra {
    type Basis = usize;

    fn name(&self) -> &str {
        "H"
    }

    fn max_degree(&self) -> usize {
        self.max_degree
    }

    fn basis(&self, n: usize) -> Result<Vec<usize>> {
        self.check_degree(n)?;
        Ok(vec![n])
    }

    fn degree(&self, b: &usize) -> usize {
        *b
    }

    fn unit(&self) -> usize {
        0
    }

    fn product(&self, a: &usize, b: &usize) -> LinComb<usize> {
        LinComb::basis(a + b)
    }

    fn coproduct(&self, b: &usize) -> LinComb<(usize, usize)> {
        (0..=*b).map(|j| ((j, b - j), binomial(*b, j))).collect()
    }
}

/// C, the free algebra on primitive generators (0,n); a word
/// (0,n₁)…(0,n_q) is labelled by the composition (n₁,…,n_q).
#[derive(Clone, Debug)]
pub struct FreeAlgebra {
    max_degree: usize,
}

impl Default for FreeAlgebra {
    fn default() -> Self {
        FreeAlgebra {
            max_degree: DEFAULT_MAX_DEGREE,
        }
    }
}

impl GradedHopf for FreeAlgebra {
    type Basis = Composition;

    fn name(&self) -> &str {
        "C"
    }

    fn max_degree(&self) -> usize {
        self.max_degree
    }

    fn basis(&self, n: usize) -> Result<Vec<Composition>> {
        self.check_degree(n)?;
        Ok(Composition::all(n))
    }

    fn degree(&self, b: &Composition) -> usize {
        b.weight()
    }

    fn unit(&self) -> Composition {
        Composition::empty()
    }

    fn product(&self, a: &Composition, b: &Composition) -> LinComb<Composition> {
        LinComb::basis(a.concat(b))
    }

    fn coproduct(&self, b: &Composition) -> LinComb<(Composition, Composition)> {
        ispw_coproduct(b)
    }
}

/// ρ((0,n₁,…,n_q)) = Σ_{1≤kⱼ≤nⱼ} ΠC(nⱼ,kⱼ) (0,k₁,…,k_q) ⊗ (Σ nⱼ−kⱼ).
pub fn rho_coaction(c: &Composition) -> LinComb<(Composition, usize)> {
    let n = c.parts();
    let bounds: Vec<(usize, usize)> = n.iter().map(|&p| (1, p)).collect();
    boxes(&bounds)
        .into_iter()
        .map(|k| {
            let coeff = ones_binomial(n, &k);
            let rest = c.weight() - k.iter().sum::<usize>();
            ((Composition::new(k).expect("kⱼ ≥ 1"), rest), coeff)
        })
        .collect()
}

pub fn rho_coaction_lc(x: &LinComb<Composition>) -> LinComb<(Composition, usize)> {
    x.apply(rho_coaction)
}

/// A basis element (1)^m ⊗ (0,n₁,…,n_q) of H⊗C.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SemiDirectElement {
    pub left: usize,
    pub right: Composition,
}

impl SemiDirectElement {
    pub fn new(left: usize, right: Composition) -> Self {
        SemiDirectElement { left, right }
    }
}

impl fmt::Display for SemiDirectElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.left == 0 {
            f.write_str("1")?;
        } else {
            write!(f, "({})", self.left)?;
        }
        f.write_str("⊗")?;
        if self.right.is_empty() {
            f.write_str("1")
        } else {
            write!(f, "(0,")?;
            let parts: Vec<String> = self.right.parts().iter().map(|p| p.to_string()).collect();
            write!(f, "{})", parts.join(","))
        }
    }
}

/// m̄: H is commutative, so the twist only reorders factors.
pub fn semidirect_product(a: &SemiDirectElement, b: &SemiDirectElement) -> SemiDirectElement {
    SemiDirectElement::new(a.left + b.left, a.right.concat(&b.right))
}

/// Δ̄(h⊗c) = Σ [h₍₁₎ ⊗ c₍₁₎'] ⊗ [h₍₂₎c₍₁₎'' ⊗ c₍₂₎], with ρ(c₍₁₎) = Σ c₍₁₎'⊗c₍₁₎''.
pub fn semidirect_coproduct(x: &SemiDirectElement) -> LinComb<(SemiDirectElement, SemiDirectElement)> {
    let h = PolynomialAlgebra::default();
    let mut out = LinComb::zero();
    for ((h1, h2), ch) in h.coproduct(&x.left).iter() {
        for ((c1, c2), cc) in ispw_coproduct(&x.right).iter() {
            for ((c1c, c1h), cr) in rho_coaction(c1).iter() {
                let left = SemiDirectElement::new(*h1, c1c.clone());
                let right = SemiDirectElement::new(h2 + c1h, c2.clone());
                out.add_term((left, right), ch * cc * cr);
            }
        }
    }
    out
}

/// H⋊C with the Molnar product and coproduct.
#[derive(Clone, Debug)]
pub struct SemiDirect {
    max_degree: usize,
}

impl Default for SemiDirect {
    fn default() -> Self {
        SemiDirect {
            max_degree: DEFAULT_MAX_DEGREE,
        }
    }
}

impl GradedHopf for SemiDirect {
    type Basis = SemiDirectElement;

    fn name(&self) -> &str {
        "H⋊C"
    }

    fn max_degree(&self) -> usize {
        self.max_degree
    }

    fn basis(&self, n: usize) -> Result<Vec<SemiDirectElement>> {
        self.check_degree(n)?;
        Ok(ExtComposition::all(n).iter().map(upsilon).collect())
    }

    fn degree(&self, b: &SemiDirectElement) -> usize {
        b.left + b.right.weight()
    }

    fn unit(&self) -> SemiDirectElement {
        SemiDirectElement::new(0, Composition::empty())
    }

    fn product(&self, a: &SemiDirectElement, b: &SemiDirectElement) -> LinComb<SemiDirectElement> {
        LinComb::basis(semidirect_product(a, b))
    }

    fn coproduct(&self, b: &SemiDirectElement) -> LinComb<(SemiDirectElement, SemiDirectElement)> {
        semidirect_coproduct(b)
    }
}

/// (α₀; α₁,…,α_k) ↦ (α₀) ⊗ (0,α₁,…,α_k).
pub fn upsilon(x: &ExtComposition) -> SemiDirectElement {
    SemiDirectElement::new(x.alpha0, x.parts.clone())
}

pub fn upsilon_inv(x: &SemiDirectElement) -> ExtComposition {
    ExtComposition::new(x.left, x.right.clone())
}

/// The action of H* on C* dual to ρ:
/// Z_(0,n)⊗Z_(k) ↦ Σ_{δ₁+…+δ_s=k} ΠC(nᵢ+δᵢ,nᵢ) Z_(0,n+δ).
pub fn rho_star(z: &Dual<Composition>, k: usize) -> LinComb<Dual<Composition>> {
    let n = z.0.parts();
    weak_compositions(k, n.len())
        .into_iter()
        .map(|delta| {
            let grown: Vec<usize> = n.iter().zip(&delta).map(|(a, d)| a + d).collect();
            let coeff = ones_binomial(&grown, n);
            (Dual(Composition::new(grown).expect("positive")), coeff)
        })
        .collect()
}

pub fn rho_star_lc(z: &LinComb<Dual<Composition>>, h: &LinComb<Dual<usize>>) -> LinComb<Dual<Composition>> {
    let mut out = LinComb::zero();
    for (zc, a) in z.iter() {
        for (Dual(k), b) in h.iter() {
            out.add_scaled(&rho_star(zc, *k), &(a * b));
        }
    }
    out
}

/// ω_H(λ): the character of H with (1) ↦ λ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolynomialCharacter {
    lambda: Q,
}

pub fn omega_h(lambda: &Q) -> PolynomialCharacter {
    PolynomialCharacter { lambda: lambda.clone() }
}

impl PolynomialCharacter {
    pub fn eval(&self, m: usize) -> Q {
        (0..m).fold(Q::one(), |acc, _| acc * &self.lambda)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum GeneratorScaling {
    Factorial,
    InverseFactorial,
}

/// A character of C, fixed by its values on the generators (0,s),
/// which are read off a coefficient series on demand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeCharacter {
    series: TruncatedSeries,
    scaling: GeneratorScaling,
}

fn check_no_constant(a: &TruncatedSeries) -> Result<()> {
    if a.has_constant_term() {
        return Err(AlgebraError::Contract("series must not have a constant term".into()));
    }
    Ok(())
}

/// ω_C(a): (0,s) ↦ s!·a_s.
pub fn omega_c(a: &TruncatedSeries) -> Result<FreeCharacter> {
    check_no_constant(a)?;
    Ok(FreeCharacter {
        series: a.clone(),
        scaling: GeneratorScaling::Factorial,
    })
}

/// ω̄_C(a): (0,s) ↦ a_s/s!.
pub fn omega_bar_c(a: &TruncatedSeries) -> Result<FreeCharacter> {
    check_no_constant(a)?;
    Ok(FreeCharacter {
        series: a.clone(),
        scaling: GeneratorScaling::InverseFactorial,
    })
}

impl FreeCharacter {
    pub fn on_generator(&self, s: usize) -> Result<Q> {
        if s > self.series.order() {
            return Err(AlgebraError::Contract(format!(
                "generator (0,{s}) lies beyond truncation order {}",
                self.series.order()
            )));
        }
        let a = self.series.coeff(s);
        Ok(match self.scaling {
            GeneratorScaling::Factorial => a * factorial(s),
            GeneratorScaling::InverseFactorial => a / factorial(s),
        })
    }

    pub fn eval(&self, c: &Composition) -> Result<Q> {
        c.parts().iter().try_fold(Q::one(), |acc, &s| Ok(acc * self.on_generator(s)?))
    }
}

/// (χ_C ⊗ χ_H) ∘ ρ evaluated on c.
pub fn coacted_character(chi_c: &FreeCharacter, chi_h: &PolynomialCharacter, c: &Composition) -> Result<Q> {
    let mut total = Q::zero();
    for ((k, m), coeff) in rho_coaction(c).iter() {
        total += coeff * chi_c.eval(k)? * chi_h.eval(*m);
    }
    Ok(total)
}

/// Ω(λ,a)_s = ω̄_C(b)((0,s)) where b_n = [(ω_C(a)⊗ω_H(λ))∘ρ]((0,n)).
pub fn omega_action(lambda: &Q, a: &TruncatedSeries) -> Result<TruncatedSeries> {
    let order = a.order();
    let chi_c = omega_c(a)?;
    let chi_h = omega_h(lambda);
    let mut b = vec![Q::zero()];
    for n in 1..=order {
        b.push(coacted_character(&chi_c, &chi_h, &Composition::new(vec![n])?)?);
    }
    let outer = omega_bar_c(&TruncatedSeries::from_coeffs(b, order))?;
    let mut out = vec![Q::zero()];
    for s in 1..=order {
        out.push(outer.on_generator(s)?);
    }
    Ok(TruncatedSeries::from_coeffs(out, order))
}

/// a·e^{λX}, truncated at the order of a.
pub fn omega_action_direct(lambda: &Q, a: &TruncatedSeries) -> Result<TruncatedSeries> {
    check_no_constant(a)?;
    a.mul(&TruncatedSeries::exp_linear(lambda, a.order()))
}

/// (0; parts) for each term.
pub fn lift_block_word(x: &LinComb<BlockWord>) -> LinComb<ExtComposition> {
    x.map_labels(|c| ExtComposition::new(0, c.clone()))
}

/// Reads (0; parts) as a block word; fails on a term with α₀ > 0.
pub fn to_block_word(x: &LinComb<ExtComposition>) -> Result<LinComb<BlockWord>> {
    let mut out = LinComb::zero();
    for (e, c) in x.iter() {
        if e.alpha0 != 0 {
            return Err(AlgebraError::Contract(format!("{e} has a nonzero x₀ count")));
        }
        out.add_term(e.parts.clone(), c.clone());
    }
    Ok(out)
}

pub fn gamma_element(shape: &GammaShape) -> LinComb<ExtComposition> {
    lift_block_word(&p_gamma(shape))
}

pub fn gamma_lambda_element(shape: &GammaShape) -> LinComb<ExtComposition> {
    lift_block_word(&p_lambda_gamma(shape))
}

/// Σ_{k=0}^{n} (−1)^k C(n,k) (0; 1^k,2,1^{n−k}).
pub fn gamma_2_ones(n: usize) -> Result<LinComb<ExtComposition>> {
    if n == 0 {
        return Err(AlgebraError::Contract("needs at least one part equal to 1".into()));
    }
    let mut out = LinComb::zero();
    for k in 0..=n {
        let mut parts = vec![1; n + 1];
        parts[k] = 2;
        let sign = if k % 2 == 0 { q(1) } else { q(-1) };
        out.add_term(ExtComposition::from_parts(0, parts)?, sign * binomial(n, k));
    }
    Ok(out)
}

/// Primitives of Ce supported on the rearrangements (0; σ(β)) of a multiset β.
pub fn primitives_on_rearrangements(beta: &[usize]) -> Result<Vec<LinComb<ExtComposition>>> {
    let ce = Ce::new();
    let mut sorted = beta.to_vec();
    sorted.sort_unstable();
    let domain: Vec<ExtComposition> = Composition::all(beta.iter().sum())
        .into_iter()
        .filter(|c| {
            let mut p = c.parts().to_vec();
            p.sort_unstable();
            p == sorted
        })
        .map(|c| ExtComposition::new(0, c))
        .collect();
    let images = domain
        .iter()
        .map(|b| reduced_coproduct(&ce, &LinComb::basis(b.clone())))
        .collect::<Result<Vec<_>>>()?;
    Ok(kernel_of_map(&domain, &images))
}

/// True when the distinct values β₁<…<β_k of the multiset, with β₀ = 0,
/// have a gap βᵢ ≥ βᵢ₋₁ + 2.
pub fn has_value_gap(beta: &[usize]) -> bool {
    let mut values = beta.to_vec();
    values.sort_unstable();
    values.dedup();
    std::iter::once(0).chain(values.iter().copied()).zip(values.iter()).any(|(prev, &v)| v >= prev + 2)
}
