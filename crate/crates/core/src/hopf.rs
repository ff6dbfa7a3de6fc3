//! Generic machinery for graded connected Hopf algebras with enumerable bases.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::sync::OnceLock;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{AlgebraError, Result};
use crate::report::Report;
use crate::scalars::{kernel_of_map, LinComb, Tensor, Q};

/// Bound shared by every basis label type.
pub trait Label: Clone + Ord + Hash + fmt::Debug + fmt::Display + Send + Sync {}
impl<T: Clone + Ord + Hash + fmt::Debug + fmt::Display + Send + Sync> Label for T {}

pub type Lc<H> = LinComb<<H as GradedHopf>::Basis>;
pub type Lc2<H> = LinComb<(<H as GradedHopf>::Basis, <H as GradedHopf>::Basis)>;

/// A graded connected Hopf algebra given on a combinatorial basis.
///
/// Degree 0 must be spanned by [`GradedHopf::unit`], products must add degrees
/// and coproducts must split them.
pub trait GradedHopf: Sync {
    type Basis: Label;

    fn name(&self) -> &str;

    /// Highest degree that [`GradedHopf::basis`] will enumerate.
    fn max_degree(&self) -> usize;

    /// Basis of the degree-`n` component in canonical order.
    fn basis(&self, n: usize) -> Result<Vec<Self::Basis>>;

    fn degree(&self, b: &Self::Basis) -> usize;

    fn unit(&self) -> Self::Basis;

    fn product(&self, a: &Self::Basis, b: &Self::Basis) -> LinComb<Self::Basis>;

    fn coproduct(&self, b: &Self::Basis) -> LinComb<(Self::Basis, Self::Basis)>;

    fn counit(&self, b: &Self::Basis) -> Q {
        if *b == self.unit() {
            Q::one()
        } else {
            Q::zero()
        }
    }

    fn check_degree(&self, n: usize) -> Result<()> {
        if n > self.max_degree() {
            return Err(AlgebraError::Resource {
                algebra: self.name().to_string(),
                degree: n,
                cap: self.max_degree(),
            });
        }
        Ok(())
    }
}

pub fn unit_lc<H: GradedHopf>(h: &H) -> Lc<H> {
    LinComb::basis(h.unit())
}

pub fn product_lc<H: GradedHopf>(h: &H, a: &Lc<H>, b: &Lc<H>) -> Lc<H> {
    let mut out = LinComb::zero();
    for (x, cx) in a.iter() {
        for (y, cy) in b.iter() {
            out.add_scaled(&h.product(x, y), &(cx * cy));
        }
    }
    out
}

pub fn coproduct_lc<H: GradedHopf>(h: &H, x: &Lc<H>) -> Lc2<H> {
    x.apply(|b| h.coproduct(b))
}

pub fn counit_lc<H: GradedHopf>(h: &H, x: &Lc<H>) -> Q {
    x.iter().map(|(b, c)| h.counit(b) * c).sum()
}

/// Multiplication map H⊗H → H.
pub fn multiply<H: GradedHopf>(h: &H, t: &Lc2<H>) -> Lc<H> {
    let mut out = LinComb::zero();
    for ((a, b), c) in t.iter() {
        out.add_scaled(&h.product(a, b), c);
    }
    out
}

/// Product in H⊗H: (a⊗b)(c⊗d) = ac⊗bd.
pub fn tensor_product<H: GradedHopf>(h: &H, x: &Lc2<H>, y: &Lc2<H>) -> Lc2<H> {
    let mut out = LinComb::zero();
    for ((a, b), cx) in x.iter() {
        for ((c, d), cy) in y.iter() {
            let left = h.product(a, c);
            let right = h.product(b, d);
            out.add_scaled(&left.tensor(&right), &(cx * cy));
        }
    }
    out
}

/// `Δ(x) − x⊗1 − 1⊗x`, defined on the augmentation ideal.
pub fn reduced_coproduct<H: GradedHopf>(h: &H, x: &Lc<H>) -> Result<Lc2<H>> {
    if x.labels().any(|b| h.degree(b) == 0) {
        return Err(AlgebraError::Contract(
            "reduced coproduct of an element with a degree-0 component".into(),
        ));
    }
    let unit = h.unit();
    Ok(coproduct_lc(h, x).filter(|(a, b)| *a != unit && *b != unit))
}

fn reduced_coproduct_basis<H: GradedHopf>(h: &H, b: &H::Basis) -> Lc2<H> {
    let unit = h.unit();
    h.coproduct(b).filter(|(x, y)| *x != unit && *y != unit)
}

/// The k-fold iterated coproduct as (k+1)-tensors; k = 0 gives 1-tensors.
pub fn iterated_coproduct<H: GradedHopf>(h: &H, x: &Lc<H>, k: usize) -> LinComb<Tensor<H::Basis>> {
    let mut current: LinComb<Tensor<H::Basis>> = x.map_labels(|b| Tensor(vec![b.clone()]));
    for _ in 0..k {
        current = current.apply(|t| {
            let (last, init) = t.0.split_last().expect("tensors are nonempty");
            h.coproduct(last).map_labels(|(a, b)| {
                let mut factors = init.to_vec();
                factors.push(a.clone());
                factors.push(b.clone());
                Tensor(factors)
            })
        });
    }
    current
}

/// Memo table for the antipode on basis elements.
pub struct AntipodeCache<B: Label> {
    values: HashMap<B, LinComb<B>>,
}

impl<B: Label> Default for AntipodeCache<B> {
    fn default() -> Self {
        AntipodeCache {
            values: HashMap::new(),
        }
    }
}

/// S(b) = −b − Σ S(b′)b″ over the reduced coproduct.
pub fn antipode_basis<H: GradedHopf>(h: &H, b: &H::Basis, cache: &mut AntipodeCache<H::Basis>) -> Lc<H> {
    if let Some(v) = cache.values.get(b) {
        return v.clone();
    }
    let value = if h.degree(b) == 0 {
        LinComb::basis(b.clone())
    } else {
        let mut acc = -LinComb::basis(b.clone());
        for ((left, right), c) in reduced_coproduct_basis(h, b).iter() {
            let s_left = antipode_basis(h, left, cache);
            let term = product_lc(h, &s_left, &LinComb::basis(right.clone()));
            acc.add_scaled(&term, &-c.clone());
        }
        acc
    };
    cache.values.insert(b.clone(), value.clone());
    value
}

pub fn antipode_generic<H: GradedHopf>(h: &H, x: &Lc<H>) -> Lc<H> {
    let mut cache = AntipodeCache::default();
    x.apply(|b| antipode_basis(h, b, &mut cache))
}

/// `m∘(f⊗g)∘Δ` applied to `x`.
pub fn convolution<H, F, G>(h: &H, f: F, g: G, x: &Lc<H>) -> Lc<H>
where
    H: GradedHopf,
    F: Fn(&H::Basis) -> Lc<H>,
    G: Fn(&H::Basis) -> Lc<H>,
{
    let mut out = LinComb::zero();
    for ((a, b), c) in coproduct_lc(h, x).iter() {
        out.add_scaled(&product_lc(h, &f(a), &g(b)), c);
    }
    out
}

/// Canonical basis of the primitive elements of degree `n`, read off the exact
/// kernel of the reduced coproduct.
pub fn primitive_basis<H: GradedHopf>(h: &H, n: usize) -> Result<Vec<Lc<H>>> {
    if n == 0 {
        return Err(AlgebraError::Contract("primitives live in positive degree".into()));
    }
    h.check_degree(n)?;
    let basis = h.basis(n)?;
    let images: Vec<Lc2<H>> = basis
        .par_iter()
        .map(|b| reduced_coproduct_basis(h, b))
        .collect();
    Ok(kernel_of_map(&basis, &images))
}

/// Checks every Hopf axiom exhaustively on basis elements up to `max_degree`.
pub fn verify_hopf_axioms<H: GradedHopf>(h: &H, max_degree: usize) -> Result<Report> {
    h.check_degree(max_degree)?;
    let name = h.name().to_string();
    let mut report = Report::new();
    let by_degree: Vec<Vec<H::Basis>> = (0..=max_degree).map(|n| h.basis(n)).collect::<Result<_>>()?;
    let all: Vec<&H::Basis> = by_degree.iter().flatten().collect();
    let unit = unit_lc(h);

    let mut pairs = Vec::new();
    for a in &all {
        for b in &all {
            if h.degree(a) + h.degree(b) <= max_degree {
                pairs.push((*a, *b));
            }
        }
    }

    let ce = all.par_iter().find_map_any(|b| {
        let d = h.coproduct(b);
        let left = d.apply(|(x, y)| {
            h.coproduct(x)
                .map_labels(|(p, q)| Tensor(vec![p.clone(), q.clone(), y.clone()]))
        });
        let right = d.apply(|(x, y)| {
            h.coproduct(y)
                .map_labels(|(p, q)| Tensor(vec![x.clone(), p.clone(), q.clone()]))
        });
        (left != right).then(|| format!("{name}: Δ not coassociative on {b}"))
    });
    report.record(format!("{name} coassociativity"), max_degree, ce);

    let ce = all.par_iter().find_map_any(|b| {
        let d = h.coproduct(b);
        let mut left = LinComb::zero();
        let mut right = LinComb::zero();
        for ((x, y), c) in d.iter() {
            left.add_term(y.clone(), h.counit(x) * c);
            right.add_term(x.clone(), h.counit(y) * c);
        }
        let id = LinComb::basis((*b).clone());
        (left != id || right != id).then(|| format!("{name}: counit law fails on {b}"))
    });
    report.record(format!("{name} counit"), max_degree, ce);

    let ce = pairs.par_iter().find_map_any(|(a, b)| {
        let ab = h.product(a, b);
        let lhs = coproduct_lc(h, &ab);
        let rhs = tensor_product(h, &h.coproduct(a), &h.coproduct(b));
        (lhs != rhs).then(|| format!("{name}: Δ({a}·{b}) ≠ Δ({a})Δ({b})"))
    });
    report.record(format!("{name} Δ multiplicative"), max_degree, ce);

    let ce = pairs.par_iter().find_map_any(|(a, b)| {
        let lhs = counit_lc(h, &h.product(a, b));
        (lhs != h.counit(a) * h.counit(b)).then(|| format!("{name}: ε not multiplicative on ({a}, {b})"))
    });
    report.record(format!("{name} ε multiplicative"), max_degree, ce);

    let ce = all.par_iter().find_map_any(|a| {
        let x = LinComb::basis((*a).clone());
        (product_lc(h, &unit, &x) != x || product_lc(h, &x, &unit) != x)
            .then(|| format!("{name}: unit law fails on {a}"))
    });
    report.record(format!("{name} unit"), max_degree, ce);

    let ce = pairs.par_iter().find_map_any(|(a, b)| {
        let ab = h.product(a, b);
        for c in &all {
            if h.degree(a) + h.degree(b) + h.degree(c) > max_degree {
                continue;
            }
            let c_lc = LinComb::basis((*c).clone());
            let lhs = product_lc(h, &ab, &c_lc);
            let rhs = product_lc(h, &LinComb::basis((*a).clone()), &h.product(b, c));
            if lhs != rhs {
                return Some(format!("{name}: product not associative on ({a}, {b}, {c})"));
            }
        }
        None
    });
    report.record(format!("{name} associativity"), max_degree, ce);

    let mut cache = AntipodeCache::default();
    let mut ce = None;
    for b in &all {
        let eps = unit.scale(&h.counit(b));
        let d = h.coproduct(b);
        let mut left = LinComb::zero();
        let mut right = LinComb::zero();
        for ((x, y), c) in d.iter() {
            let sx = antipode_basis(h, x, &mut cache);
            let sy = antipode_basis(h, y, &mut cache);
            left.add_scaled(&product_lc(h, &sx, &LinComb::basis(y.clone())), c);
            right.add_scaled(&product_lc(h, &LinComb::basis(x.clone()), &sy), c);
        }
        if left != eps || right != eps {
            ce = Some(format!("{name}: antipode identity fails on {b}"));
            break;
        }
    }
    report.record(format!("{name} antipode"), max_degree, ce);
    Ok(report)
}

/// Label of the dual basis element Z_b.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Dual<B>(pub B);

impl<B: fmt::Display> fmt::Display for Dual<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z{}", self.0)
    }
}

/// ⟨z, x⟩ for the pairing that makes (Z_b) dual to (b).
pub fn pairing<B: Label>(z: &LinComb<Dual<B>>, x: &LinComb<B>) -> Q {
    z.iter().map(|(Dual(b), c)| c * x.coeff(b)).sum()
}

type ProductTable<B> = HashMap<(B, B), LinComb<B>>;
type CoproductTable<B> = HashMap<B, LinComb<(B, B)>>;

/// The graded dual of `H`, with operations obtained by transposing those of `H`.
///
/// Structure constants are computed once per degree, when first needed.
pub struct TransposeDual<'a, H: GradedHopf> {
    primal: &'a H,
    name: String,
    products: Vec<OnceLock<ProductTable<H::Basis>>>,
    coproducts: Vec<OnceLock<CoproductTable<H::Basis>>>,
}

impl<'a, H: GradedHopf> TransposeDual<'a, H> {
    pub fn new(primal: &'a H) -> Self {
        let slots = primal.max_degree() + 1;
        TransposeDual {
            primal,
            name: format!("{}*", primal.name()),
            products: (0..slots).map(|_| OnceLock::new()).collect(),
            coproducts: (0..slots).map(|_| OnceLock::new()).collect(),
        }
    }

    pub fn primal(&self) -> &H {
        self.primal
    }

    // Z_a Z_b = Σ_c ⟨Z_a⊗Z_b, Δ(c)⟩ Z_c: invert the coproducts of degree n.
    fn product_table(&self, n: usize) -> &ProductTable<H::Basis> {
        self.products[n].get_or_init(|| {
            let basis = self.primal.basis(n).expect("degree checked by caller");
            let columns: Vec<(H::Basis, Lc2<H>)> = basis
                .par_iter()
                .map(|c| (c.clone(), self.primal.coproduct(c)))
                .collect();
            let mut table: ProductTable<H::Basis> = HashMap::new();
            for (c, d) in columns {
                for ((a, b), coeff) in d.into_terms() {
                    table.entry((a, b)).or_default().add_term(c.clone(), coeff);
                }
            }
            table
        })
    }

    // Δ(Z_c) = Σ ⟨Z_c, ab⟩ Z_a⊗Z_b: invert the products landing in degree n.
    fn coproduct_table(&self, n: usize) -> &CoproductTable<H::Basis> {
        self.coproducts[n].get_or_init(|| {
            let by_degree: Vec<Vec<H::Basis>> = (0..=n)
                .map(|i| self.primal.basis(i).expect("degree checked by caller"))
                .collect();
            let mut pairs = Vec::new();
            for i in 0..=n {
                for a in &by_degree[i] {
                    for b in &by_degree[n - i] {
                        pairs.push((a.clone(), b.clone()));
                    }
                }
            }
            let images: Vec<((H::Basis, H::Basis), Lc<H>)> = pairs
                .into_par_iter()
                .map(|(a, b)| {
                    let p = self.primal.product(&a, &b);
                    ((a, b), p)
                })
                .collect();
            let mut table: CoproductTable<H::Basis> = HashMap::new();
            for (pair, p) in images {
                for (c, coeff) in p.into_terms() {
                    table.entry(c).or_default().add_term(pair.clone(), coeff);
                }
            }
            table
        })
    }

    /// Brute-force dual product, by transposition of the coproduct.
    pub fn dual_product_oracle(&self, a: &Dual<H::Basis>, b: &Dual<H::Basis>) -> Result<LinComb<Dual<H::Basis>>> {
        let n = self.primal.degree(&a.0) + self.primal.degree(&b.0);
        self.primal.check_degree(n)?;
        Ok(self
            .product_table(n)
            .get(&(a.0.clone(), b.0.clone()))
            .map(|lc| lc.map_labels(|c| Dual(c.clone())))
            .unwrap_or_default())
    }

    /// Brute-force dual coproduct, by transposition of the product.
    pub fn dual_coproduct_oracle(
        &self,
        c: &Dual<H::Basis>,
    ) -> Result<LinComb<(Dual<H::Basis>, Dual<H::Basis>)>> {
        let n = self.primal.degree(&c.0);
        self.primal.check_degree(n)?;
        Ok(self
            .coproduct_table(n)
            .get(&c.0)
            .map(|lc| lc.map_labels(|(a, b)| (Dual(a.clone()), Dual(b.clone()))))
            .unwrap_or_default())
    }
}

impl<H: GradedHopf> GradedHopf for TransposeDual<'_, H> {
    type Basis = Dual<H::Basis>;

    fn name(&self) -> &str {
        &self.name
    }

    fn max_degree(&self) -> usize {
        self.primal.max_degree()
    }

    fn basis(&self, n: usize) -> Result<Vec<Self::Basis>> {
        Ok(self.primal.basis(n)?.into_iter().map(Dual).collect())
    }

    fn degree(&self, b: &Self::Basis) -> usize {
        self.primal.degree(&b.0)
    }

    fn unit(&self) -> Self::Basis {
        Dual(self.primal.unit())
    }

    /// # Panics
    /// When the total degree exceeds the primal enumeration cap.
    fn product(&self, a: &Self::Basis, b: &Self::Basis) -> LinComb<Self::Basis> {
        self.dual_product_oracle(a, b).expect("degree within the enumeration cap")
    }

    /// # Panics
    /// When the degree exceeds the primal enumeration cap.
    fn coproduct(&self, b: &Self::Basis) -> LinComb<(Self::Basis, Self::Basis)> {
        self.dual_coproduct_oracle(b).expect("degree within the enumeration cap")
    }
}
