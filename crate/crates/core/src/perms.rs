//! The permutation Hopf algebra SH, its dual, and the quadri-algebra structure
//! of the dual.

use std::fmt;

use crate::error::{AlgebraError, Result};
use crate::hopf::{Dual, GradedHopf};
use crate::pword::{shuffles, star, PackedWord, Permutation, ShuffleKind};
use crate::report::Report;
use crate::scalars::LinComb;
use crate::wmat::{wmat_coproduct, WMat};
use crate::wmatdual::{dual_coproduct_closed, shuffle_sum, DualWord};

/// A packed word using each of x₁…xₙ exactly once.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PermWord(PackedWord);

impl PermWord {
    pub fn new(word: PackedWord) -> Result<Self> {
        if word.is_permutation() {
            Ok(PermWord(word))
        } else {
            Err(AlgebraError::Structural(format!("{word} is not a permutation word")))
        }
    }

    pub fn word(&self) -> &PackedWord {
        &self.0
    }

    pub fn into_word(self) -> PackedWord {
        self.0
    }

    /// The permutation i ↦ σ(i) read off the letters.
    pub fn permutation(&self) -> Permutation {
        Permutation::new(self.0.letters().iter().map(|&l| l as usize).collect()).expect("validated on construction")
    }
}

impl fmt::Display for PermWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

/// Permutation words of length `n`, in canonical order.
pub fn permutation_words(n: usize) -> Vec<PackedWord> {
    Permutation::all(n)
        .into_iter()
        .map(|p| PackedWord::new(p.images().iter().map(|&i| i as u32).collect()).expect("permutations are packed"))
        .collect()
}

/// Kills every word that is not a permutation word.
pub fn project_sh(x: &LinComb<PackedWord>) -> LinComb<PackedWord> {
    x.filter(|w| w.is_permutation())
}

/// SH as a sub-Hopf algebra of WMat.
#[derive(Clone, Debug, Default)]
pub struct Sh {
    ambient: WMat,
}

impl GradedHopf for Sh {
    type Basis = PackedWord;

    fn name(&self) -> &str {
        "SH"
    }

    fn max_degree(&self) -> usize {
        self.ambient.max_degree()
    }

    fn basis(&self, n: usize) -> Result<Vec<PackedWord>> {
        self.check_degree(n)?;
        Ok(permutation_words(n))
    }

    fn degree(&self, b: &PackedWord) -> usize {
        b.len()
    }

    fn unit(&self) -> PackedWord {
        PackedWord::unit()
    }

    fn product(&self, a: &PackedWord, b: &PackedWord) -> LinComb<PackedWord> {
        LinComb::basis(star(a, b))
    }

    fn coproduct(&self, b: &PackedWord) -> LinComb<(PackedWord, PackedWord)> {
        wmat_coproduct(b)
    }
}

/// The dual of SH, with the double-shuffle product.
#[derive(Clone, Debug, Default)]
pub struct ShDual {
    primal: Sh,
}

impl ShDual {
    pub fn new() -> Self {
        Self::default()
    }
}

impl GradedHopf for ShDual {
    type Basis = DualWord;

    fn name(&self) -> &str {
        "SH*"
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
        let (s1, s2) = (&a.0, &b.0);
        shuffle_sum(
            &[star(s1, s2).letters().to_vec()],
            &shuffles(s1.len(), s2.len(), ShuffleKind::All),
            &shuffles(s1.len(), s2.len(), ShuffleKind::All),
        )
    }

    fn coproduct(&self, b: &DualWord) -> LinComb<(DualWord, DualWord)> {
        dual_coproduct_closed(&b.0)
    }
}

/// The four products ↖, ↗, ↙, ↘.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Quadri {
    /// ↖: τ ∈ Bat₁, μ ∈ Bat₁.
    Nw,
    /// ↗: τ ∈ Bat₂, μ ∈ Bat₁.
    Ne,
    /// ↙: τ ∈ Bat₁, μ ∈ Bat₂.
    Sw,
    /// ↘: τ ∈ Bat₂, μ ∈ Bat₂.
    Se,
}

impl Quadri {
    pub const ALL: [Quadri; 4] = [Quadri::Nw, Quadri::Ne, Quadri::Sw, Quadri::Se];

    fn shuffle_kinds(self) -> (ShuffleKind, ShuffleKind) {
        match self {
            Quadri::Nw => (ShuffleKind::FirstFixed, ShuffleKind::FirstFixed),
            Quadri::Ne => (ShuffleKind::SecondFixed, ShuffleKind::FirstFixed),
            Quadri::Sw => (ShuffleKind::FirstFixed, ShuffleKind::SecondFixed),
            Quadri::Se => (ShuffleKind::SecondFixed, ShuffleKind::SecondFixed),
        }
    }
}

/// Products built from the quadri products by summing some of them.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SplitProduct {
    Quadri(Quadri),
    /// ≺ = ↖ + ↙.
    Left,
    /// ≻ = ↗ + ↘.
    Right,
    /// ∧ = ↖ + ↗.
    Wedge,
    /// ∨ = ↙ + ↘.
    Vee,
    /// The full product, sum of all four.
    Dot,
}

impl SplitProduct {
    pub const NW: SplitProduct = SplitProduct::Quadri(Quadri::Nw);
    pub const NE: SplitProduct = SplitProduct::Quadri(Quadri::Ne);
    pub const SW: SplitProduct = SplitProduct::Quadri(Quadri::Sw);
    pub const SE: SplitProduct = SplitProduct::Quadri(Quadri::Se);

    pub fn components(self) -> Vec<Quadri> {
        match self {
            SplitProduct::Quadri(q) => vec![q],
            SplitProduct::Left => vec![Quadri::Nw, Quadri::Sw],
            SplitProduct::Right => vec![Quadri::Ne, Quadri::Se],
            SplitProduct::Wedge => vec![Quadri::Nw, Quadri::Ne],
            SplitProduct::Vee => vec![Quadri::Sw, Quadri::Se],
            SplitProduct::Dot => Quadri::ALL.to_vec(),
        }
    }
}

impl fmt::Display for SplitProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SplitProduct::Quadri(Quadri::Nw) => "↖",
            SplitProduct::Quadri(Quadri::Ne) => "↗",
            SplitProduct::Quadri(Quadri::Sw) => "↙",
            SplitProduct::Quadri(Quadri::Se) => "↘",
            SplitProduct::Left => "≺",
            SplitProduct::Right => "≻",
            SplitProduct::Wedge => "∧",
            SplitProduct::Vee => "∨",
            SplitProduct::Dot => "·",
        };
        f.write_str(s)
    }
}

fn check_factor(w: &PackedWord) -> Result<()> {
    if w.is_empty() {
        return Err(AlgebraError::Contract(
            "quadri products are defined on nonempty permutations".into(),
        ));
    }
    if !w.is_permutation() {
        return Err(AlgebraError::Contract(format!("{w} is not a permutation word")));
    }
    Ok(())
}

/// Z_{σ₁} ⋄ Z_{σ₂} for one of the four quadri products.
pub fn quadri_product(kind: Quadri, s1: &PackedWord, s2: &PackedWord) -> Result<LinComb<DualWord>> {
    check_factor(s1)?;
    check_factor(s2)?;
    let (tau_kind, mu_kind) = kind.shuffle_kinds();
    let (n1, n2) = (s1.len(), s2.len());
    Ok(shuffle_sum(
        &[star(s1, s2).letters().to_vec()],
        &shuffles(n1, n2, tau_kind),
        &shuffles(n1, n2, mu_kind),
    ))
}

/// Z_{σ₁} ⋄ Z_{σ₂} for any sum of quadri products.
pub fn split_product(op: SplitProduct, s1: &PackedWord, s2: &PackedWord) -> Result<LinComb<DualWord>> {
    let mut out = LinComb::zero();
    for q in op.components() {
        out += &quadri_product(q, s1, s2)?;
    }
    Ok(out)
}

/// Bilinear extension of [`split_product`].
pub fn split_product_lc(op: SplitProduct, x: &LinComb<DualWord>, y: &LinComb<DualWord>) -> Result<LinComb<DualWord>> {
    let mut out = LinComb::zero();
    for (a, ca) in x.iter() {
        for (b, cb) in y.iter() {
            out.add_scaled(&split_product(op, &a.0, &b.0)?, &(ca * cb));
        }
    }
    Ok(out)
}

type Side = (SplitProduct, SplitProduct);

/// Each identity reads (x op₁ y) op₂ z = x op₃ (y op₄ z).
pub const QUADRI_AXIOMS: [(&str, Side, Side); 9] = [
    ("(x↖y)↖z = x↖(y·z)", (SplitProduct::NW, SplitProduct::NW), (SplitProduct::NW, SplitProduct::Dot)),
    ("(x↗y)↖z = x↗(y≺z)", (SplitProduct::NE, SplitProduct::NW), (SplitProduct::NE, SplitProduct::Left)),
    ("(x∧y)↗z = x↗(y≻z)", (SplitProduct::Wedge, SplitProduct::NE), (SplitProduct::NE, SplitProduct::Right)),
    ("(x↙y)↖z = x↙(y∧z)", (SplitProduct::SW, SplitProduct::NW), (SplitProduct::SW, SplitProduct::Wedge)),
    ("(x↘y)↖z = x↘(y↖z)", (SplitProduct::SE, SplitProduct::NW), (SplitProduct::SE, SplitProduct::NW)),
    ("(x∨y)↗z = x↘(y↗z)", (SplitProduct::Vee, SplitProduct::NE), (SplitProduct::SE, SplitProduct::NE)),
    ("(x≺y)↙z = x↙(y∨z)", (SplitProduct::Left, SplitProduct::SW), (SplitProduct::SW, SplitProduct::Vee)),
    ("(x≻y)↙z = x↘(y↙z)", (SplitProduct::Right, SplitProduct::SW), (SplitProduct::SE, SplitProduct::SW)),
    ("(x·y)↘z = x↘(y↘z)", (SplitProduct::Dot, SplitProduct::SE), (SplitProduct::SE, SplitProduct::SE)),
];

fn left_nested(ops: Side, x: &DualWord, y: &DualWord, z: &DualWord) -> LinComb<DualWord> {
    let xy = split_product(ops.0, &x.0, &y.0).expect("nonempty permutations");
    split_product_lc(ops.1, &xy, &LinComb::basis(z.clone())).expect("nonempty permutations")
}

fn right_nested(ops: Side, x: &DualWord, y: &DualWord, z: &DualWord) -> LinComb<DualWord> {
    let yz = split_product(ops.1, &y.0, &z.0).expect("nonempty permutations");
    split_product_lc(ops.0, &LinComb::basis(x.clone()), &yz).expect("nonempty permutations")
}

/// Nonempty SH-dual basis elements with degree ≤ `max_degree − 2`, usable as
/// members of triples.
fn triple_members(max_degree: usize) -> Vec<DualWord> {
    (1..=max_degree.saturating_sub(2))
        .flat_map(|n| permutation_words(n).into_iter().map(Dual))
        .collect()
}

fn for_triples<F>(max_degree: usize, mut f: F) -> Option<String>
where
    F: FnMut(&DualWord, &DualWord, &DualWord) -> Option<String>,
{
    let members = triple_members(max_degree);
    for x in &members {
        for y in &members {
            for z in &members {
                if x.0.len() + y.0.len() + z.0.len() > max_degree {
                    continue;
                }
                if let Some(ce) = f(x, y, z) {
                    return Some(ce);
                }
            }
        }
    }
    None
}

/// Quadri-algebra, dendriform, commutativity and Zinbiel checks on all triples
/// of SH-dual basis elements of total degree ≤ `max_degree`.
pub fn verify_quadri(max_degree: usize) -> Report {
    let mut report = Report::new();
    for (name, lhs, rhs) in QUADRI_AXIOMS {
        let ce = for_triples(max_degree, |x, y, z| {
            (left_nested(lhs, x, y, z) != right_nested(rhs, x, y, z)).then(|| format!("{name} fails on ({x}, {y}, {z})"))
        });
        report.record(format!("quadri axiom {name}"), max_degree, ce);
    }

    for (left, right, label) in [
        (SplitProduct::Left, SplitProduct::Right, "(≺,≻)"),
        (SplitProduct::Wedge, SplitProduct::Vee, "(∧,∨)"),
    ] {
        let ce = for_triples(max_degree, |x, y, z| {
            let a1 = left_nested((left, left), x, y, z);
            let b1 = right_nested((left, left), x, y, z) + right_nested((left, right), x, y, z);
            let a2 = left_nested((right, left), x, y, z);
            let b2 = right_nested((right, left), x, y, z);
            let a3 = left_nested((left, right), x, y, z) + left_nested((right, right), x, y, z);
            let b3 = right_nested((right, right), x, y, z);
            (a1 != b1 || a2 != b2 || a3 != b3).then(|| format!("dendriform {label} fails on ({x}, {y}, {z})"))
        });
        report.record(format!("dendriform axioms {label}"), max_degree, ce);
    }

    let members: Vec<DualWord> = (1..max_degree)
        .flat_map(|n| permutation_words(n).into_iter().map(Dual))
        .collect();
    let mut ce = None;
    'outer: for x in &members {
        for y in &members {
            if x.0.len() + y.0.len() > max_degree {
                continue;
            }
            let ok = split_product(SplitProduct::Right, &x.0, &y.0).ok() == split_product(SplitProduct::Left, &y.0, &x.0).ok()
                && split_product(SplitProduct::Vee, &x.0, &y.0).ok()
                    == split_product(SplitProduct::Wedge, &y.0, &x.0).ok();
            let sums = split_product(SplitProduct::Dot, &x.0, &y.0).ok()
                == Some(ShDual::new().product(x, y))
                && split_product(SplitProduct::Left, &x.0, &y.0)
                    .and_then(|l| split_product(SplitProduct::Right, &x.0, &y.0).map(|r| l + r))
                    .ok()
                    == split_product(SplitProduct::Wedge, &x.0, &y.0)
                        .and_then(|l| split_product(SplitProduct::Vee, &x.0, &y.0).map(|r| l + r))
                        .ok();
            if !ok || !sums {
                ce = Some(format!("commutativity or sum identity fails on ({x}, {y})"));
                break 'outer;
            }
        }
    }
    report.record("x≻y = y≺x, x∨y = y∧x, ≺+≻ = ∧+∨ = ·", max_degree, ce);

    for (op, label) in [(SplitProduct::Left, "≺"), (SplitProduct::Wedge, "∧")] {
        let ce = for_triples(max_degree, |x, y, z| {
            let lhs = left_nested((op, op), x, y, z);
            let xz_y = split_product(op, &z.0, &y.0).expect("nonempty permutations");
            let rhs = right_nested((op, op), x, y, z)
                + split_product_lc(op, &LinComb::basis(x.clone()), &xz_y).expect("nonempty permutations");
            (lhs != rhs).then(|| format!("Zinbiel law for {label} fails on ({x}, {y}, {z})"))
        });
        report.record(format!("Zinbiel law for {label}"), max_degree, ce);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::q;

    fn w(letters: &[u32]) -> PackedWord {
        PackedWord::new(letters.to_vec()).unwrap()
    }

    fn z(terms: &[(i64, &[u32])]) -> LinComb<DualWord> {
        terms.iter().map(|(c, l)| (Dual(w(l)), q(*c))).collect()
    }

    #[test]
    fn perm_word_view() {
        let p = PermWord::new(w(&[3, 1, 2])).unwrap();
        assert_eq!(p.permutation().apply(1), 3);
        assert!(PermWord::new(w(&[1, 1])).is_err());
        assert!(PermWord::new(w(&[1, 0])).is_err());
    }

    #[test]
    fn projection() {
        let x: LinComb<PackedWord> = [(w(&[1, 1, 2]), q(1)), (w(&[2, 1, 3]), q(7))].into_iter().collect();
        assert_eq!(project_sh(&x), LinComb::term(w(&[2, 1, 3]), q(7)));
        let y: LinComb<PackedWord> = [(w(&[3, 1, 2]), q(1)), (w(&[1, 2]), q(8))].into_iter().collect();
        assert_eq!(project_sh(&y), y);
        assert!(project_sh(&LinComb::basis(w(&[0]))).is_zero());
    }

    #[test]
    fn quadri_examples() {
        let (a, b) = (w(&[2, 1]), w(&[1]));
        assert_eq!(
            quadri_product(Quadri::Nw, &a, &b).unwrap(),
            z(&[(1, &[2, 1, 3]), (1, &[2, 3, 1]), (1, &[3, 1, 2]), (1, &[3, 2, 1])])
        );
        assert_eq!(quadri_product(Quadri::Sw, &a, &b).unwrap(), z(&[(1, &[3, 2, 1]), (1, &[2, 3, 1])]));
        assert_eq!(quadri_product(Quadri::Ne, &a, &b).unwrap(), z(&[(1, &[3, 2, 1]), (1, &[3, 1, 2])]));
        assert_eq!(quadri_product(Quadri::Se, &a, &b).unwrap(), z(&[(1, &[1, 3, 2])]));
    }

    #[test]
    fn dendriform_examples() {
        let (a, b) = (w(&[2, 1]), w(&[1]));
        assert_eq!(
            split_product(SplitProduct::Left, &a, &b).unwrap(),
            z(&[(1, &[2, 1, 3]), (2, &[2, 3, 1]), (2, &[3, 2, 1]), (1, &[3, 1, 2])])
        );
        assert_eq!(
            split_product(SplitProduct::Right, &a, &b).unwrap(),
            z(&[(1, &[3, 2, 1]), (1, &[3, 1, 2]), (1, &[1, 3, 2])])
        );
        assert_eq!(
            split_product(SplitProduct::Wedge, &a, &b).unwrap(),
            z(&[(1, &[2, 1, 3]), (1, &[2, 3, 1]), (2, &[3, 1, 2]), (2, &[3, 2, 1])])
        );
        assert_eq!(
            split_product(SplitProduct::Vee, &a, &b).unwrap(),
            z(&[(1, &[3, 2, 1]), (1, &[2, 3, 1]), (1, &[1, 3, 2])])
        );
    }

    #[test]
    fn left_product_small_fixture() {
        assert_eq!(
            split_product(SplitProduct::Left, &w(&[1]), &w(&[1, 2])).unwrap(),
            z(&[(1, &[1, 2, 3]), (1, &[2, 1, 3]), (1, &[2, 3, 1])])
        );
    }

    #[test]
    fn empty_or_invalid_factor() {
        assert!(quadri_product(Quadri::Nw, &PackedWord::unit(), &w(&[1])).is_err());
        assert!(quadri_product(Quadri::Nw, &w(&[1, 1]), &w(&[1])).is_err());
    }

    #[test]
    fn full_product_example() {
        let d = ShDual::new();
        assert_eq!(
            d.product(&Dual(w(&[1])), &Dual(w(&[2, 1]))),
            z(&[(3, &[3, 2, 1]), (1, &[1, 3, 2]), (2, &[3, 1, 2]), (2, &[2, 3, 1]), (1, &[2, 1, 3])])
        );
    }

    #[test]
    fn axioms_degree_four() {
        let r = verify_quadri(4);
        assert!(r.all_passed(), "{r}");
    }
}
