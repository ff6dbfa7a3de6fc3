//! Named verification suites, each a batch of checks collected into a [`Report`].

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::compext::{
    ce_coproduct, ce_product, gamma_2_ones, has_value_gap, omega_action, omega_action_direct, pi_project,
    primitives_on_rearrangements, rho_coaction, rho_star, semidirect_coproduct, semidirect_product, to_block_word,
    upsilon, Ce, CeDual, ExtComposition, FreeAlgebra, PolynomialAlgebra, SemiDirect,
};
use crate::composition::Composition;
use crate::error::{AlgebraError, Result};
use crate::hopf::{antipode_generic, primitive_basis, reduced_coproduct, verify_hopf_axioms, Dual, GradedHopf, TransposeDual};
use crate::ispw::{p_gamma, p_lambda_gamma, GammaShape, Ispw, IspwDual};
use crate::perms::{verify_quadri, Sh, ShDual};
use crate::pword::{enumerate_packed, star};
use crate::qsymnsym::{
    abs_morphism, pair_nsym_qsym, psi_closed, psi_rank, psi_star_closed, qsym_product, zeta_ispw_dual, zeta_q, DualMonomial,
    NSym, QSym,
};
use crate::report::Report;
use crate::scalars::{frac, LinComb, Q};
use crate::series::TruncatedSeries;
use crate::wmat::{antipode_closed_sum, wmat_coproduct, AntipodeFamily, WMat};
use crate::wmatdual::WMatDual;

/// Degree bound for anything enumerating WMat pairs or triples.
const WMAT_CAP: usize = 4;
const ISPW_PRIMITIVE_DIMS: [usize; 8] = [1, 1, 2, 3, 6, 9, 18, 30];
const CE_PRIMITIVE_DIMS_CLAIMED: [usize; 7] = [2, 0, 1, 1, 1, 1, 1];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Hopf,
    AntipodeForms,
    DualClosedForms,
    Quadri,
    IspwPrim,
    CeStructure,
    Semidirect,
    Morphisms,
    All,
}

impl Suite {
    pub const NAMED: [Suite; 8] = [
        Suite::Hopf,
        Suite::AntipodeForms,
        Suite::DualClosedForms,
        Suite::Quadri,
        Suite::IspwPrim,
        Suite::CeStructure,
        Suite::Semidirect,
        Suite::Morphisms,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Hopf => "hopf",
            Suite::AntipodeForms => "antipode-forms",
            Suite::DualClosedForms => "dual-closed-forms",
            Suite::Quadri => "quadri",
            Suite::IspwPrim => "ispw-prim",
            Suite::CeStructure => "ce-structure",
            Suite::Semidirect => "semidirect",
            Suite::Morphisms => "morphisms",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self> {
        Suite::NAMED
            .iter()
            .chain(&[Suite::All])
            .copied()
            .find(|x| x.name() == s)
            .ok_or_else(|| AlgebraError::Structural(format!("unknown suite {s:?}")))
    }
}

pub fn run_suite(suite: Suite, max_degree: usize, seed: u64) -> Result<Report> {
    match suite {
        Suite::Hopf => hopf(max_degree),
        Suite::AntipodeForms => antipode_forms(max_degree),
        Suite::DualClosedForms => dual_closed_forms(max_degree),
        Suite::Quadri => Ok(verify_quadri(max_degree.min(5))),
        Suite::IspwPrim => ispw_prim(max_degree),
        Suite::CeStructure => ce_structure(max_degree),
        Suite::Semidirect => semidirect(max_degree, seed),
        Suite::Morphisms => morphisms(max_degree),
        Suite::All => {
            let mut report = Report::new();
            for s in Suite::NAMED {
                report.extend(run_suite(s, max_degree, seed)?);
            }
            Ok(report)
        }
    }
}

/// Runs `check` on each item and renders the first item it rejects.
fn first_failure<T: fmt::Display>(items: impl IntoIterator<Item = T>, mut check: impl FnMut(&T) -> bool) -> Option<String> {
    items.into_iter().find(|x| !check(x)).map(|x| x.to_string())
}

fn pairs<B: Clone>(by_degree: &[Vec<B>], max: usize) -> Vec<(B, B)> {
    let mut out = Vec::new();
    for (i, xs) in by_degree.iter().enumerate() {
        for ys in by_degree.iter().take(max + 1 - i) {
            for x in xs {
                for y in ys {
                    out.push((x.clone(), y.clone()));
                }
            }
        }
    }
    out
}

struct Pair<B>(B, B);

impl<B: fmt::Display> fmt::Display for Pair<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}, {}", self.0, self.1)
    }
}

fn hopf(max_degree: usize) -> Result<Report> {
    let small = max_degree.min(WMAT_CAP);
    let medium = max_degree.min(5);
    let mut report = Report::new();
    report.extend(verify_hopf_axioms(&WMat::new(), small)?);
    report.extend(verify_hopf_axioms(&WMatDual::new(), small)?);
    report.extend(verify_hopf_axioms(&Sh::default(), small)?);
    report.extend(verify_hopf_axioms(&ShDual::new(), small)?);
    report.extend(verify_hopf_axioms(&Ispw::new(), medium)?);
    report.extend(verify_hopf_axioms(&IspwDual::new(), medium)?);
    report.extend(verify_hopf_axioms(&Ce::new(), medium)?);
    report.extend(verify_hopf_axioms(&CeDual::new(), medium)?);
    report.extend(verify_hopf_axioms(&QSym::default(), medium)?);
    report.extend(verify_hopf_axioms(&NSym::default(), medium)?);
    Ok(report)
}

fn antipode_forms(max_degree: usize) -> Result<Report> {
    let d = max_degree.min(WMAT_CAP);
    let wmat = WMat::new();
    let mut report = Report::new();
    let mut words = Vec::new();
    for n in 1..=d {
        words.extend(enumerate_packed(n)?.iter().cloned());
    }
    let ce = first_failure(&words, |w| {
        antipode_closed_sum(w).ok() == Some(antipode_generic(&wmat, &LinComb::basis((*w).clone())))
    });
    report.record("WMat antipode: closed sum equals recursion", d, ce);

    let len = (max_degree + 1).min(5);
    let mut families = Vec::new();
    for n in 1..=len {
        families.push(AntipodeFamily::Zeros { n });
        families.push(AntipodeFamily::Ones { n });
        families.push(AntipodeFamily::Increasing { n });
        families.push(AntipodeFamily::Decreasing { n });
        for i in 1..=n {
            families.push(AntipodeFamily::DecreasingPrefix { n, i });
            families.push(AntipodeFamily::DecreasingSuffix { n, i });
        }
        for alpha in Composition::all(n) {
            families.push(AntipodeFamily::Blocks {
                alpha: alpha.parts().to_vec(),
            });
        }
    }
    let mut ce = None;
    for f in &families {
        let word = f.word()?;
        if f.antipode()? != antipode_generic(&wmat, &LinComb::basis(word.clone())) {
            ce = Some(format!("{f:?}"));
            break;
        }
    }
    report.record("WMat antipode: closed families equal recursion", len, ce);
    Ok(report)
}

fn closed_vs_oracle<H: GradedHopf, D: GradedHopf<Basis = Dual<H::Basis>>>(
    report: &mut Report,
    primal: &H,
    closed: &D,
    max: usize,
) -> Result<()> {
    let oracle = TransposeDual::new(primal);
    let by_degree: Vec<Vec<D::Basis>> = (0..=max).map(|n| closed.basis(n)).collect::<Result<_>>()?;
    let all_pairs = pairs(&by_degree, max);
    let ce = first_failure(all_pairs.iter().map(|(a, b)| Pair(a.clone(), b.clone())), |p| {
        oracle.dual_product_oracle(&p.0, &p.1).ok() == Some(closed.product(&p.0, &p.1))
    });
    report.record(format!("{} product equals the transposed coproduct", closed.name()), max, ce);
    let ce = first_failure(by_degree.iter().flatten(), |z| {
        oracle.dual_coproduct_oracle(z).ok() == Some(closed.coproduct(z))
    });
    report.record(format!("{} coproduct equals the transposed product", closed.name()), max, ce);
    Ok(())
}

fn dual_closed_forms(max_degree: usize) -> Result<Report> {
    let mut report = Report::new();
    closed_vs_oracle(&mut report, &WMat::new(), &WMatDual::new(), max_degree.min(WMAT_CAP))?;
    let d = max_degree.min(5);
    closed_vs_oracle(&mut report, &Sh::default(), &ShDual::new(), d)?;
    closed_vs_oracle(&mut report, &Ispw::new(), &IspwDual::new(), d)?;
    closed_vs_oracle(&mut report, &Ce::new(), &CeDual::new(), d)?;
    Ok(report)
}

fn is_zero_reduced<H: GradedHopf>(h: &H, x: &LinComb<H::Basis>) -> bool {
    reduced_coproduct(h, x).map(|r| r.is_zero()).unwrap_or(false)
}

fn ispw_prim(max_degree: usize) -> Result<Report> {
    let ispw = Ispw::new();
    let mut report = Report::new();
    let d = max_degree.min(ISPW_PRIMITIVE_DIMS.len());
    let mut ce = None;
    for n in 1..=d {
        let dim = primitive_basis(&ispw, n)?.len();
        if dim != ISPW_PRIMITIVE_DIMS[n - 1] {
            ce = Some(format!("degree {n}: {dim}"));
            break;
        }
    }
    report.record("ISPW primitive dimensions 1,1,2,3,6,9,18,30", d, ce);

    let d = max_degree.min(6);
    let shapes: Vec<GammaShape> = (1..=d).flat_map(GammaShape::all_of_degree).collect();
    let ce = shapes
        .iter()
        .find(|s| !is_zero_reduced(&ispw, &p_gamma(s)) || !is_zero_reduced(&ispw, &p_lambda_gamma(s)))
        .map(|s| format!("{:?}", s.sequence()));
    report.record("ISPW families P_γ and P_Λγ are primitive", d, ce);
    Ok(report)
}

fn ce_structure(max_degree: usize) -> Result<Report> {
    let ce = Ce::new();
    let ispw = Ispw::new();
    let mut report = Report::new();
    let d = max_degree.min(5);
    let mut words = Vec::new();
    for n in 0..=d {
        words.extend(enumerate_packed(n)?.iter().cloned());
    }
    let bad = first_failure(&words, |w| {
        wmat_coproduct(w).map_labels(|(a, b)| (pi_project(a), pi_project(b))) == ce_coproduct(&pi_project(w))
    });
    report.record("Π commutes with coproducts", d, bad);
    let mut bad = None;
    'outer: for u in &words {
        for v in &words {
            if u.len() + v.len() <= d && pi_project(&star(u, v)) != ce_product(&pi_project(u), &pi_project(v)) {
                bad = Some(format!("{u}, {v}"));
                break 'outer;
            }
        }
    }
    report.record("Π commutes with products", d, bad);

    let d = max_degree.min(7);
    let mut dims = Vec::new();
    let mut kernels = Vec::new();
    for n in 1..=d {
        let k = primitive_basis(&ce, n)?;
        dims.push(k.len());
        kernels.push(k);
    }
    let claimed = &CE_PRIMITIVE_DIMS_CLAIMED[..d];
    report.check("Ce primitive dimensions 2,0,1,1,1,1,1", d, dims == claimed, || format!("computed {dims:?}"));

    let bad = kernels
        .iter()
        .skip(1)
        .flatten()
        .find(|v| v.labels().any(|x| x.alpha0() > 0))
        .map(|v| v.to_string());
    report.record("Ce primitives of degree ≥ 2 have no x₀", d, bad);

    let bad = kernels
        .iter()
        .take(6)
        .skip(1)
        .flatten()
        .find(|v| !to_block_word(v).map(|b| is_zero_reduced(&ispw, &b)).unwrap_or(false))
        .map(|v| v.to_string());
    report.record("Ce primitives read as ISPW primitives", d.min(6), bad);

    let mut bad = None;
    for n in 1..=d {
        for beta in partitions(n, n) {
            if has_value_gap(&beta) && !primitives_on_rearrangements(&beta)?.is_empty() {
                bad = Some(format!("{beta:?}"));
            }
        }
    }
    report.record("no primitive on a single rearrangement class with a gap", d, bad);

    let gd = max_degree.min(6);
    let bad = (1..=gd)
        .find(|&n| gamma_2_ones(n).map(|g| !is_zero_reduced(&ce, &g)).unwrap_or(true))
        .map(|n| n.to_string());
    report.record("Γ_(2,1,…,1) is primitive", gd, bad);

    let u: LinComb<ExtComposition> = [
        (vec![3, 2, 1, 1], 1),
        (vec![3, 1, 2, 1], -2),
        (vec![3, 1, 1, 2], 1),
        (vec![2, 1, 1, 3], -1),
        (vec![1, 2, 1, 3], 2),
        (vec![1, 1, 2, 3], -1),
    ]
    .into_iter()
    .map(|(p, c)| Ok((ExtComposition::from_parts(0, p)?, Q::from_integer(c.into()))))
    .collect::<Result<_>>()?;
    report.check("degree-7 element u is not primitive", 7, !is_zero_reduced(&ce, &u), || u.to_string());
    Ok(report)
}

/// Partitions of n with parts at most `max`, largest part first.
pub fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    (1..=max.min(n))
        .rev()
        .flat_map(|p| {
            partitions(n - p, p).into_iter().map(move |mut rest| {
                rest.insert(0, p);
                rest
            })
        })
        .collect()
}

fn random_series(rng: &mut StdRng, order: usize) -> TruncatedSeries {
    let mut coeffs = vec![Q::zero()];
    for _ in 1..=order {
        coeffs.push(frac(rng.gen_range(-9..=9), rng.gen_range(1..=5)));
    }
    TruncatedSeries::from_coeffs(coeffs, order)
}

fn random_rational(rng: &mut StdRng) -> Q {
    frac(rng.gen_range(-6..=6), rng.gen_range(1..=4))
}

fn semidirect(max_degree: usize, seed: u64) -> Result<Report> {
    let mut report = Report::new();
    let h = PolynomialAlgebra::default();
    let c = FreeAlgebra::default();
    let d = max_degree.min(6);
    let comps: Vec<Composition> = (0..=d).flat_map(Composition::all).collect();

    let bad = first_failure(&comps, |x| {
        let rho = rho_coaction(x);
        let mut left: LinComb<(Composition, usize, usize)> = LinComb::zero();
        let mut right = LinComb::zero();
        for ((y, m), coeff) in rho.iter() {
            for ((m1, m2), a) in h.coproduct(m).iter() {
                left.add_term((y.clone(), *m1, *m2), coeff * a);
            }
            for ((z, m1), a) in rho_coaction(y).iter() {
                right.add_term((z.clone(), *m1, *m), coeff * a);
            }
        }
        left == right && rho.filter(|(_, m)| *m == 0) == LinComb::basis(((*x).clone(), 0))
    });
    report.record("ρ is a coaction", d, bad);

    let bad = first_failure(&comps, |x| {
        let mut left: LinComb<(Composition, Composition, usize)> = LinComb::zero();
        for ((y, m), a) in rho_coaction(x).iter() {
            for ((y1, y2), b) in c.coproduct(y).iter() {
                left.add_term((y1.clone(), y2.clone(), *m), a * b);
            }
        }
        let mut right = LinComb::zero();
        for ((x1, x2), a) in c.coproduct(x).iter() {
            for ((y1, m1), b) in rho_coaction(x1).iter() {
                for ((y2, m2), e) in rho_coaction(x2).iter() {
                    right.add_term((y1.clone(), y2.clone(), m1 + m2), a * b * e);
                }
            }
        }
        let counit = rho_coaction(x).filter(|(y, _)| y.is_empty());
        let expected = if x.is_empty() { LinComb::basis((Composition::empty(), 0)) } else { LinComb::zero() };
        let mut multiplicative = true;
        for y in comps.iter().filter(|y| x.weight() + y.weight() <= d) {
            let mut product: LinComb<(Composition, usize)> = LinComb::zero();
            for ((a, m), s) in rho_coaction(x).iter() {
                for ((b, l), t) in rho_coaction(y).iter() {
                    product.add_term((a.concat(b), m + l), s * t);
                }
            }
            multiplicative &= rho_coaction(&x.concat(y)) == product;
        }
        left == right && counit == expected && multiplicative
    });
    report.record("C is an H-comodule bialgebra", d, bad);

    let d5 = max_degree.min(5);
    report.extend(verify_hopf_axioms(&SemiDirect::default(), d5)?);
    let exts: Vec<ExtComposition> = (0..=d5).flat_map(ExtComposition::all).collect();
    let bad = first_failure(&exts, |x| {
        ce_coproduct(x).map_labels(|(a, b)| (upsilon(a), upsilon(b))) == semidirect_coproduct(&upsilon(x))
            && exts
                .iter()
                .filter(|y| x.degree() + y.degree() <= d5)
                .all(|y| upsilon(&ce_product(x, y)) == semidirect_product(&upsilon(x), &upsilon(y)))
    });
    report.record("Υ intertwines Ce and H⋊C", d5, bad);

    let d4 = max_degree.min(4);
    let small: Vec<Composition> = (0..=d4).flat_map(Composition::all).collect();
    let bad = first_failure(&small, |z| {
        (0..=3).all(|k| {
            let action = rho_star(&Dual((*z).clone()), k);
            Composition::all(z.weight() + k)
                .iter()
                .all(|t| action.coeff(&Dual(t.clone())) == rho_coaction(t).coeff(&((*z).clone(), k)))
        })
    });
    report.record("ρ* is the transpose of ρ", d4, bad);
    let hdual = TransposeDual::new(&h);
    let bad = first_failure(&small, |z| {
        (0..=3).all(|k| {
            (0..=3).all(|l| {
                let mut stepwise = LinComb::zero();
                for (y, a) in rho_star(&Dual((*z).clone()), k).iter() {
                    stepwise.add_scaled(&rho_star(y, l), a);
                }
                let mut together = LinComb::zero();
                if let Ok(p) = hdual.dual_product_oracle(&Dual(k), &Dual(l)) {
                    for (Dual(m), a) in p.iter() {
                        together.add_scaled(&rho_star(&Dual((*z).clone()), *m), a);
                    }
                }
                stepwise == together
            })
        })
    });
    report.record("ρ* is a module action", d4, bad);

    let mut rng = StdRng::seed_from_u64(seed);
    let mut bad = None;
    for _ in 0..5 {
        let a = random_series(&mut rng, 8);
        let lambda = random_rational(&mut rng);
        if omega_action(&lambda, &a)? != omega_action_direct(&lambda, &a)? {
            bad = Some(format!("λ = {lambda}, a = {a}"));
        }
    }
    report.record("Ω through characters equals a·e^{λX}", 8, bad);
    let mut bad = None;
    for _ in 0..5 {
        let a = random_series(&mut rng, 6);
        let (lambda, mu) = (random_rational(&mut rng), random_rational(&mut rng));
        let ok = omega_action(&Q::zero(), &a)? == a
            && omega_action(&lambda, &omega_action(&mu, &a)?)? == omega_action(&(&lambda + &mu), &a)?;
        if !ok {
            bad = Some(format!("λ = {lambda}, μ = {mu}, a = {a}"));
        }
    }
    report.record("Ω is a group action", 6, bad);
    Ok(report)
}

fn morphisms(max_degree: usize) -> Result<Report> {
    let d = max_degree.min(6);
    let dual = IspwDual::new();
    let zeta = zeta_ispw_dual();
    let zq = zeta_q();
    let mut report = Report::new();
    let labels: Vec<Dual<Composition>> = (0..=d).flat_map(Composition::all).map(Dual).collect();
    let bad = first_failure(&labels, |z| zq.eval_lc(&psi_closed(z)) == zeta.eval(z));
    report.record("ζ_Q ∘ Ψ = ζ", d, bad);
    let bad = first_failure(&labels, |z| abs_morphism(&dual, &zeta, z) == psi_closed(z));
    report.record("Ψ closed form equals the universal morphism", d, bad);

    let d5 = max_degree.min(5);
    let qsym = QSym::default();
    let bad = first_failure(labels.iter().filter(|z| z.0.weight() <= d5), |z| {
        let mapped = dual.coproduct(z).apply(|(x, y)| psi_closed(x).tensor(&psi_closed(y)));
        let coalgebra = mapped == psi_closed(z).apply(|m| qsym.coproduct(m));
        coalgebra
            && labels.iter().filter(|y| z.0.weight() + y.0.weight() <= d5).all(|y| {
                let left = dual.product(z, y).apply(psi_closed);
                let mut right = LinComb::zero();
                for (a, s) in psi_closed(z).iter() {
                    for (b, t) in psi_closed(y).iter() {
                        right.add_scaled(&qsym_product(a, b), &(s * t));
                    }
                }
                left == right
            })
    });
    report.record("Ψ is a Hopf morphism", d5, bad);

    let bad = (1..=d).find(|&n| psi_rank(n) != 1 << (n - 1)).map(|n| n.to_string());
    report.record("Ψ has full rank in each degree", d, bad);

    let bad = first_failure(&labels, |z| {
        let beta = DualMonomial(z.0.clone());
        let image = psi_star_closed(&beta);
        Composition::all(z.0.weight())
            .into_iter()
            .all(|alpha| image.coeff(&alpha) == pair_nsym_qsym(&beta, &psi_closed(&Dual(alpha.clone()))))
    });
    report.record("Ψ* is the transpose of Ψ", d, bad);
    Ok(report)
}
