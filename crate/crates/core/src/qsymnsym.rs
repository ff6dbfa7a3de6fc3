//! Quasi-symmetric functions on the monomial basis, their dual NSym, and the
//! universal morphism of a Hopf algebra with a character into QSym.

use std::fmt;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::composition::Composition;
use crate::error::Result;
use crate::hopf::{iterated_coproduct, GradedHopf};
use crate::ispw::{BlockWord, DualBlockWord};
use crate::scalars::{factorial, rank_of, LinComb, Q};

pub const DEFAULT_MAX_DEGREE: usize = 10;

/// The monomial quasi-symmetric function M_α.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(pub Composition);

/// The NSym basis element M*_α, dual to M_α.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct DualMonomial(pub Composition);

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M{}", self.0)
    }
}

impl fmt::Display for DualMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M*{}", self.0)
    }
}

fn quasi_shuffle_parts(a: &[usize], b: &[usize]) -> LinComb<Vec<usize>> {
    if a.is_empty() || b.is_empty() {
        return LinComb::basis([a, b].concat());
    }
    let prepend = |head: usize, rest: LinComb<Vec<usize>>| {
        rest.map_labels(|tail| {
            let mut v = Vec::with_capacity(tail.len() + 1);
            v.push(head);
            v.extend_from_slice(tail);
            v
        })
    };
    let mut out = prepend(a[0], quasi_shuffle_parts(&a[1..], b));
    out += &prepend(b[0], quasi_shuffle_parts(a, &b[1..]));
    out += &prepend(a[0] + b[0], quasi_shuffle_parts(&a[1..], &b[1..]));
    out
}

/// The quasi-shuffle: parts interleave, and two facing parts may merge by addition.
pub fn qsym_product(a: &Monomial, b: &Monomial) -> LinComb<Monomial> {
    quasi_shuffle_parts(a.0.parts(), b.0.parts())
        .map_labels(|v| Monomial(Composition::new(v.clone()).expect("sums of positive parts")))
}

/// Deconcatenation.
pub fn qsym_coproduct(m: &Monomial) -> LinComb<(Monomial, Monomial)> {
    m.0.deconcatenate().map_labels(|(l, r)| (Monomial(l.clone()), Monomial(r.clone())))
}

pub fn nsym_product(a: &DualMonomial, b: &DualMonomial) -> DualMonomial {
    DualMonomial(a.0.concat(&b.0))
}

/// Multiplicative extension of Δ(M*_(n)) = Σ_s M*_(s) ⊗ M*_(n−s).
pub fn nsym_coproduct(m: &DualMonomial) -> LinComb<(DualMonomial, DualMonomial)> {
    let mut out: LinComb<(Vec<usize>, Vec<usize>)> = LinComb::basis((Vec::new(), Vec::new()));
    for &n in m.0.parts() {
        out = out.apply(|(l, r)| {
            (0..=n)
                .map(|s| {
                    let (mut l, mut r) = (l.clone(), r.clone());
                    if s > 0 {
                        l.push(s);
                    }
                    if s < n {
                        r.push(n - s);
                    }
                    ((l, r), Q::one())
                })
                .collect()
        });
    }
    out.map_labels(|(l, r)| {
        (
            DualMonomial(Composition::new(l.clone()).expect("positive")),
            DualMonomial(Composition::new(r.clone()).expect("positive")),
        )
    })
}

#[derive(Clone, Debug)]
pub struct QSym {
    max_degree: usize,
}

impl Default for QSym {
    fn default() -> Self {
        QSym {
            max_degree: DEFAULT_MAX_DEGREE,
        }
    }
}

impl GradedHopf for QSym {
    type Basis = Monomial;

    fn name(&self) -> &str {
        "QSym"
    }

    fn max_degree(&self) -> usize {
        self.max_degree
    }

    fn basis(&self, n: usize) -> Result<Vec<Monomial>> {
        self.check_degree(n)?;
        Ok(Composition::all(n).into_iter().map(Monomial).collect())
    }

    fn degree(&self, b: &Monomial) -> usize {
        b.0.weight()
    }

    fn unit(&self) -> Monomial {
        Monomial::default()
    }

    fn product(&self, a: &Monomial, b: &Monomial) -> LinComb<Monomial> {
        qsym_product(a, b)
    }

    fn coproduct(&self, b: &Monomial) -> LinComb<(Monomial, Monomial)> {
        qsym_coproduct(b)
    }
}

#[derive(Clone, Debug)]
pub struct NSym {
    max_degree: usize,
}

impl Default for NSym {
    fn default() -> Self {
        NSym {
            max_degree: DEFAULT_MAX_DEGREE,
        }
    }
}

impl GradedHopf for NSym {
    type Basis = DualMonomial;

    fn name(&self) -> &str {
        "NSym"
    }

    fn max_degree(&self) -> usize {
        self.max_degree
    }

    fn basis(&self, n: usize) -> Result<Vec<DualMonomial>> {
        self.check_degree(n)?;
        Ok(Composition::all(n).into_iter().map(DualMonomial).collect())
    }

    fn degree(&self, b: &DualMonomial) -> usize {
        b.0.weight()
    }

    fn unit(&self) -> DualMonomial {
        DualMonomial::default()
    }

    fn product(&self, a: &DualMonomial, b: &DualMonomial) -> LinComb<DualMonomial> {
        LinComb::basis(nsym_product(a, b))
    }

    fn coproduct(&self, b: &DualMonomial) -> LinComb<(DualMonomial, DualMonomial)> {
        nsym_coproduct(b)
    }
}

/// A character given by its values on basis labels.
pub struct Character<'a, B> {
    eval: Box<dyn Fn(&B) -> Q + Send + Sync + 'a>,
}

impl<'a, B> Character<'a, B> {
    pub fn new(eval: impl Fn(&B) -> Q + Send + Sync + 'a) -> Self {
        Character { eval: Box::new(eval) }
    }

    pub fn eval(&self, b: &B) -> Q {
        (self.eval)(b)
    }

    pub fn eval_lc(&self, x: &LinComb<B>) -> Q
    where
        B: Ord + Clone,
    {
        x.iter().map(|(b, c)| c * self.eval(b)).sum()
    }
}

/// ζ_Q(M_α) = 1 when α has at most one part, 0 otherwise.
pub fn zeta_q() -> Character<'static, Monomial> {
    Character::new(|m: &Monomial| if m.0.len() <= 1 { Q::one() } else { Q::zero() })
}

/// ζ(Z_(k₁,…,kₙ)) = 1/n!.
pub fn zeta_ispw_dual() -> Character<'static, DualBlockWord> {
    Character::new(|z: &DualBlockWord| factorial(z.0.len()).recip())
}

/// Σ_{α⊨n} ζ_α(b) M_α, with ζ_α = ζ^{⊗k} ∘ (projection to degrees α) ∘ Δ^{(k−1)}.
pub fn abs_morphism<H: GradedHopf>(h: &H, zeta: &Character<'_, H::Basis>, b: &H::Basis) -> LinComb<Monomial> {
    let n = h.degree(b);
    if n == 0 {
        return LinComb::term(Monomial::default(), zeta.eval(b));
    }
    let x = LinComb::basis(b.clone());
    let mut out = LinComb::zero();
    for k in 1..=n {
        for (t, c) in iterated_coproduct(h, &x, k - 1).iter() {
            let degrees: Vec<usize> = t.0.iter().map(|f| h.degree(f)).collect();
            if degrees.contains(&0) {
                continue;
            }
            let value: Q = t.0.iter().map(|f| zeta.eval(f)).product();
            if !value.is_zero() {
                out.add_term(Monomial(Composition::new(degrees).expect("positive degrees")), c * value);
            }
        }
    }
    out
}

/// Ψ(Z_k) = Σ_{(s₁,…,s_m)⊨n} 1/(s₁!…s_m!) M_(block sums of k).
pub fn psi_closed(z: &DualBlockWord) -> LinComb<Monomial> {
    let k = z.0.parts();
    if k.is_empty() {
        return LinComb::basis(Monomial::default());
    }
    Composition::all(k.len())
        .into_iter()
        .map(|s| {
            let mut start = 0;
            let mut sums = Vec::with_capacity(s.len());
            let mut coeff = Q::one();
            for &len in s.parts() {
                sums.push(k[start..start + len].iter().sum());
                start += len;
                coeff /= factorial(len);
            }
            (Monomial(Composition::new(sums).expect("positive")), coeff)
        })
        .collect()
}

pub fn psi_closed_lc(x: &LinComb<DualBlockWord>) -> LinComb<Monomial> {
    x.apply(psi_closed)
}

/// Ψ*(M*_k) = Σ over compositions u⁽ʲ⁾ ⊨ kⱼ of Π 1/len(u⁽ʲ⁾)! · (u⁽¹⁾…u⁽ⁿ⁾).
pub fn psi_star_closed(m: &DualMonomial) -> LinComb<BlockWord> {
    let mut out: LinComb<Vec<usize>> = LinComb::basis(Vec::new());
    for &kj in m.0.parts() {
        out = out.apply(|prefix| {
            Composition::all(kj)
                .into_iter()
                .map(|u| ([prefix.as_slice(), u.parts()].concat(), factorial(u.len()).recip()))
                .collect()
        });
    }
    out.map_labels(|v| Composition::new(v.clone()).expect("positive"))
}

pub fn psi_star_closed_lc(x: &LinComb<DualMonomial>) -> LinComb<BlockWord> {
    x.apply(psi_star_closed)
}

/// Rank of the matrix of Ψ on degree n, in the bases Z_α and M_β.
pub fn psi_rank(n: usize) -> usize {
    let images: Vec<LinComb<Monomial>> = Composition::all(n)
        .into_par_iter()
        .map(|a| psi_closed(&crate::hopf::Dual(a)))
        .collect();
    rank_of(&images)
}

/// ⟨M*_β, x⟩ for x in QSym.
pub fn pair_nsym_qsym(m: &DualMonomial, x: &LinComb<Monomial>) -> Q {
    x.coeff(&Monomial(m.0.clone()))
}

pub fn zeta_q_of(x: &LinComb<Monomial>) -> Q {
    zeta_q().eval_lc(x)
}
