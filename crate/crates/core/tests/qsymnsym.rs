use packhopf::composition::Composition;
use packhopf::hopf::{verify_hopf_axioms, Dual, GradedHopf, TransposeDual};
use packhopf::ispw::{Ispw, IspwDual};
use packhopf::qsymnsym::{
    abs_morphism, nsym_coproduct, pair_nsym_qsym, psi_closed, psi_closed_lc, psi_rank, psi_star_closed, qsym_product,
    zeta_ispw_dual, zeta_q, zeta_q_of, DualMonomial, Monomial, NSym, QSym,
};
use packhopf::scalars::{q, LinComb, Q};

fn up_to(n: usize) -> Vec<Composition> {
    (0..=n).flat_map(Composition::all).collect()
}

#[test]
fn axioms() {
    for r in [
        verify_hopf_axioms(&QSym::default(), 6).unwrap(),
        verify_hopf_axioms(&NSym::default(), 6).unwrap(),
    ] {
        assert!(r.all_passed(), "{r}");
    }
}

#[test]
fn qsym_is_commutative() {
    for a in up_to(5) {
        for b in up_to(5 - a.weight()) {
            let (ma, mb) = (Monomial(a.clone()), Monomial(b.clone()));
            assert_eq!(qsym_product(&ma, &mb), qsym_product(&mb, &ma));
        }
    }
}

#[test]
fn nsym_is_the_transpose_of_qsym() {
    let qsym = QSym::default();
    let oracle = TransposeDual::new(&qsym);
    for c in up_to(5) {
        let transposed = oracle
            .dual_coproduct_oracle(&Dual(Monomial(c.clone())))
            .unwrap()
            .map_labels(|(a, b)| (DualMonomial(a.0 .0.clone()), DualMonomial(b.0 .0.clone())));
        assert_eq!(nsym_coproduct(&DualMonomial(c.clone())), transposed, "{c}");
    }
    // and the quasi-shuffle transposes concatenation
    let nsym = NSym::default();
    let oracle = TransposeDual::new(&nsym);
    for a in up_to(5) {
        for b in up_to(5 - a.weight()) {
            let transposed = oracle
                .dual_product_oracle(&Dual(DualMonomial(a.clone())), &Dual(DualMonomial(b.clone())))
                .unwrap()
                .map_labels(|z| Monomial(z.0 .0.clone()));
            assert_eq!(qsym_product(&Monomial(a.clone()), &Monomial(b.clone())), transposed);
        }
    }
}

#[test]
fn psi_respects_the_characters() {
    let zeta = zeta_ispw_dual();
    let zq = zeta_q();
    for c in up_to(6) {
        let z = Dual(c);
        assert_eq!(zeta_q_of(&psi_closed(&z)), zeta.eval(&z), "{z}");
        assert_eq!(zq.eval(&Monomial(z.0.clone())), if z.0.len() <= 1 { q(1) } else { q(0) });
    }
}

#[test]
fn closed_form_is_the_universal_morphism() {
    let d = IspwDual::new();
    let zeta = zeta_ispw_dual();
    for c in up_to(6) {
        let z = Dual(c);
        assert_eq!(abs_morphism(&d, &zeta, &z), psi_closed(&z), "{z}");
    }
}

#[test]
fn psi_is_a_hopf_morphism() {
    let d = IspwDual::new();
    let qsym = QSym::default();
    for a in up_to(5) {
        let za = Dual(a.clone());
        let mapped = d.coproduct(&za).apply(|(x, y)| psi_closed(x).tensor(&psi_closed(y)));
        let direct = psi_closed(&za).apply(|m| qsym.coproduct(m));
        assert_eq!(mapped, direct, "{za}");
        for b in up_to(5 - a.weight()) {
            let zb = Dual(b);
            let left = psi_closed_lc(&d.product(&za, &zb));
            let mut right = LinComb::zero();
            for (x, s) in psi_closed(&za).iter() {
                for (y, t) in psi_closed(&zb).iter() {
                    right.add_scaled(&qsym_product(x, y), &(s * t));
                }
            }
            assert_eq!(left, right, "{za} {zb}");
        }
    }
    let z1 = Dual(Composition::new(vec![1]).unwrap());
    let expected: LinComb<_> = [
        (Monomial(Composition::new(vec![1, 1]).unwrap()), q(2)),
        (Monomial(Composition::new(vec![2]).unwrap()), q(1)),
    ]
    .into_iter()
    .collect();
    assert_eq!(psi_closed_lc(&d.product(&z1, &z1)), expected);
}

#[test]
fn psi_is_invertible_in_each_degree() {
    for n in 1..=6 {
        assert_eq!(psi_rank(n), 1 << (n - 1));
    }
}

#[test]
fn psi_star_is_the_transpose() {
    for n in 0..=6 {
        for beta in Composition::all(n) {
            let image = psi_star_closed(&DualMonomial(beta.clone()));
            for alpha in Composition::all(n) {
                let lhs: Q = image.coeff(&alpha);
                let rhs = pair_nsym_qsym(&DualMonomial(beta.clone()), &psi_closed(&Dual(alpha.clone())));
                assert_eq!(lhs, rhs, "{beta} {alpha}");
            }
        }
    }
}

#[test]
fn psi_star_is_multiplicative() {
    let ispw = Ispw::new();
    for a in up_to(4) {
        for b in up_to(4) {
            let product = psi_star_closed(&DualMonomial(a.concat(&b)));
            let mut expected = LinComb::zero();
            for (x, s) in psi_star_closed(&DualMonomial(a.clone())).iter() {
                for (y, t) in psi_star_closed(&DualMonomial(b.clone())).iter() {
                    expected.add_scaled(&ispw.product(x, y), &(s * t));
                }
            }
            assert_eq!(product, expected);
        }
    }
}
