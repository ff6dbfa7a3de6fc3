use packhopf::composition::Composition;
use packhopf::hopf::{primitive_basis, reduced_coproduct, verify_hopf_axioms, Dual, GradedHopf, TransposeDual};
use packhopf::ispw::{
    embed, ispw_coproduct, lambda_beta, p_gamma, p_lambda_gamma, primitive_basis_by_partition, project_spw, restrict,
    BlockWord, GammaShape, Ispw, IspwDual,
};
use packhopf::scalars::{binomial, q, rank_of, LinComb, Q};
use packhopf::wmat::wmat_coproduct;

fn c(p: &[usize]) -> Composition {
    Composition::new(p.to_vec()).unwrap()
}

fn lc(terms: &[(i64, &[usize])]) -> LinComb<BlockWord> {
    terms.iter().map(|(k, p)| (c(p), q(*k))).collect()
}

fn shape(gamma: &[usize]) -> GammaShape {
    GammaShape::from_sequence(gamma).unwrap()
}

fn is_primitive(x: &LinComb<BlockWord>) -> bool {
    reduced_coproduct(&Ispw::new(), x).unwrap().is_zero()
}

#[test]
fn coproduct_agrees_with_wmat_through_the_quotient() {
    for n in 1..=6 {
        for b in Ispw::new().basis(n).unwrap() {
            let through_wmat = wmat_coproduct(&b.to_word());
            let projected: LinComb<(BlockWord, BlockWord)> = through_wmat
                .iter()
                .filter(|((l, r), _)| !l.letters().contains(&0) && !r.letters().contains(&0))
                .map(|((l, r), k)| ((Composition::from_word(l).unwrap(), Composition::from_word(r).unwrap()), k.clone()))
                .collect();
            assert_eq!(projected, ispw_coproduct(&b), "{b}");
        }
    }
    let x = lc(&[(1, &[1, 2]), (3, &[2, 1])]);
    let product = packhopf::wmat::wmat_product(&embed(&x), &embed(&lc(&[(1, &[3])])));
    assert_eq!(restrict(&project_spw(&product)).unwrap(), lc(&[(1, &[1, 2, 3]), (3, &[2, 1, 3])]));
}

#[test]
fn projection_examples() {
    let w = |l: &[u32]| packhopf::pword::PackedWord::new(l.to_vec()).unwrap();
    let x: LinComb<_> = [(w(&[2, 2, 1]), q(1)), (w(&[0, 1]), q(-1))].into_iter().collect();
    assert_eq!(project_spw(&x), LinComb::basis(w(&[2, 2, 1])));
    assert!(restrict(&project_spw(&x)).is_err());
    assert_eq!(restrict(&LinComb::basis(w(&[1, 2, 2]))).unwrap(), lc(&[(1, &[1, 2])]));
}

#[test]
fn dimensions() {
    for n in 1..=8 {
        assert_eq!(Ispw::new().basis(n).unwrap().len(), 1 << (n - 1));
    }
}

#[test]
fn primitive_dimensions_up_to_eight() {
    let dims: Vec<usize> = (1..=8).map(|n| primitive_basis(&Ispw::new(), n).unwrap().len()).collect();
    assert_eq!(dims, vec![1, 1, 2, 3, 6, 9, 18, 30]);
}

#[test]
fn degree_three_primitives() {
    let basis = primitive_basis(&Ispw::new(), 3).unwrap();
    let listed = vec![lc(&[(1, &[3])]), lc(&[(1, &[2, 1]), (-1, &[1, 2])])];
    let mut union = basis.clone();
    union.extend(listed.iter().cloned());
    assert_eq!(rank_of(&listed), 2);
    assert_eq!(rank_of(&union), 2);
}

#[test]
fn partition_support() {
    for n in 1..=7 {
        let classes = primitive_basis_by_partition(n).unwrap();
        let total: usize = classes.iter().map(|(_, v)| v.len()).sum();
        assert_eq!(total, primitive_basis(&Ispw::new(), n).unwrap().len(), "degree {n}");
        for (partition, vectors) in &classes {
            if partition.len() >= 2 && partition.iter().all(|&p| p == 1) {
                assert!(vectors.is_empty());
            }
            for v in vectors {
                assert!(v.labels().all(|b| &b.sorted_parts() == partition));
            }
        }
    }
}

/// The printed expansion carries +1 on (3,1,2,2); that element is not
/// primitive, while the formula gives −1 and is.
#[test]
fn p_gamma_second_example() {
    let printed = |last: i64| {
        lc(&[
            (1, &[2, 2, 1, 3]),
            (-2, &[2, 1, 2, 3]),
            (2, &[1, 2, 3, 2]),
            (-1, &[1, 3, 2, 2]),
            (1, &[2, 2, 3, 1]),
            (-2, &[2, 3, 2, 1]),
            (2, &[3, 2, 1, 2]),
            (last, &[3, 1, 2, 2]),
        ])
    };
    let computed = p_gamma(&shape(&[2, 2, 1, 3]));
    assert_eq!(computed, printed(-1));
    assert!(is_primitive(&computed));
    assert!(!is_primitive(&printed(1)));
}

#[test]
fn p_lambda_gamma_example() {
    assert_eq!(
        p_lambda_gamma(&shape(&[1, 1, 3, 3, 3])),
        lc(&[
            (-3, &[1, 1, 3, 3, 3]),
            (7, &[1, 3, 1, 3, 3]),
            (2, &[3, 1, 1, 3, 3]),
            (-3, &[1, 3, 3, 1, 3]),
            (-8, &[3, 1, 3, 1, 3]),
            (2, &[3, 3, 1, 1, 3]),
            (2, &[1, 3, 3, 3, 1]),
            (-3, &[3, 1, 3, 3, 1]),
            (7, &[3, 3, 1, 3, 1]),
            (-3, &[3, 3, 3, 1, 1]),
        ])
    );
}

/// γ sequences of length ≤ `max_theta` with entries ≤ `max_value`.
fn shapes_up_to(max_theta: usize, max_value: usize) -> Vec<GammaShape> {
    fn go(prefix: &mut Vec<usize>, max_theta: usize, max_value: usize, out: &mut Vec<GammaShape>) {
        if let Ok(s) = GammaShape::from_sequence(prefix) {
            out.push(s);
        }
        if prefix.len() == max_theta {
            return;
        }
        for v in 1..=max_value {
            prefix.push(v);
            go(prefix, max_theta, max_value, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), max_theta, max_value, &mut out);
    out
}

#[test]
fn families_are_primitive() {
    for s in shapes_up_to(5, 3) {
        assert!(is_primitive(&p_gamma(&s)), "P_γ for {:?}", s.sequence());
        assert!(is_primitive(&p_lambda_gamma(&s)), "P_Λγ for {:?}", s.sequence());
    }
    for gamma in [[1, 1, 2, 2, 3, 3], [2, 1, 1, 1, 3, 3], [1, 2, 3, 4, 5, 6], [3, 3, 3, 1, 2, 2]] {
        let s = shape(&gamma);
        assert!(is_primitive(&p_gamma(&s)), "{gamma:?}");
        assert!(is_primitive(&p_lambda_gamma(&s)), "{gamma:?}");
    }
    let s = shape(&[1, 1, 1, 2, 2, 3, 4]);
    assert!(is_primitive(&p_gamma(&s)));
}

#[test]
fn degree_seven_rank_facts() {
    let shapes = GammaShape::all_of_degree(7);
    let gammas: Vec<_> = shapes.iter().map(p_gamma).collect();
    assert_eq!(rank_of(&gammas), 17);
    let mut union = gammas.clone();
    union.extend(shapes.iter().map(p_lambda_gamma));
    let r = rank_of(&union);
    assert!(r < 18, "union rank {r}");
    for n in 1..=6 {
        let shapes = GammaShape::all_of_degree(n);
        let dim = primitive_basis(&Ispw::new(), n).unwrap().len();
        assert_eq!(rank_of(&shapes.iter().map(p_gamma).collect::<Vec<_>>()), dim, "degree {n}");
        assert_eq!(rank_of(&shapes.iter().map(p_lambda_gamma).collect::<Vec<_>>()), dim, "degree {n}");
    }
}

#[test]
fn lambda_relations_a_to_c() {
    for s in shapes_up_to(5, 4) {
        let (alpha, n) = (s.alpha().to_vec(), s.alpha().len());
        let (pg, pl) = (p_gamma(&s), p_lambda_gamma(&s));
        if alpha[0] == 1 {
            assert_eq!(pl, pg, "(a) {:?}", s.sequence());
        }
        if alpha == [2, 2] || alpha == [2, 1, 1] {
            assert_eq!(pl, pg.scale(&q(-2)), "(b) {:?}", s.sequence());
        }
        if n == 2 && alpha[1] == 1 {
            let sign = if alpha[0] % 2 == 0 { q(-1) } else { q(1) };
            assert_eq!(pl, pg.scale(&sign), "(c) {:?}", s.sequence());
        }
    }
}

fn repeat(v: usize, times: usize) -> Vec<usize> {
    vec![v; times]
}

#[test]
fn lambda_relations_d_and_e() {
    for s in shapes_up_to(6, 3) {
        let (alpha, beta, n) = (s.alpha().to_vec(), s.beta().to_vec(), s.alpha().len());
        let theta = s.theta() as i64;
        let case_d = (n == 2 && alpha[0] >= 2 && alpha[1] >= 3)
            || (n == 3 && alpha[0] >= 2 && alpha[1] + alpha[2] != 2)
            || (n >= 4 && alpha[0] >= 2);
        let case_e = (n == 2 && alpha[0] >= 3 && alpha[1] == 2) || (n == 3 && alpha[0] >= 3 && alpha[1] == 1 && alpha[2] == 1);
        let (pg, pl) = (p_gamma(&s), p_lambda_gamma(&s));
        if case_d {
            let mut parts = vec![beta[1]];
            parts.extend(repeat(beta[0], alpha[0]));
            parts.extend(repeat(beta[1], alpha[1] - 1));
            for i in 2..n {
                parts.extend(repeat(beta[i], alpha[i]));
            }
            let witness = c(&parts);
            let sign = if alpha[0] % 2 == 0 { q(1) } else { q(-1) };
            let expected = sign * binomial(s.theta() - 2, alpha[0]) - q(1);
            assert_eq!(pg.coeff(&witness), Q::from_integer(0.into()), "(d) {:?}", s.sequence());
            assert_eq!(pl.coeff(&witness), expected, "(d) {:?}", s.sequence());
            assert_ne!(expected, q(0));
        }
        if case_e {
            let mut parts = vec![beta[0], beta[1]];
            parts.extend(repeat(beta[0], alpha[0] - 1));
            parts.extend(repeat(beta[1], alpha[1] - 1));
            for i in 2..n {
                parts.extend(repeat(beta[i], alpha[i]));
            }
            let witness = c(&parts);
            let expected = q(theta - 1 + if theta % 2 == 0 { 1 } else { -1 });
            assert_eq!(pg.coeff(&witness), Q::from_integer(0.into()), "(e) {:?}", s.sequence());
            assert_eq!(pl.coeff(&witness), expected, "(e) {:?}", s.sequence());
        }
        if case_d || case_e {
            let proportional = pg.labels().next().map(|b| {
                let k = pl.coeff(b) / pg.coeff(b);
                pl == pg.scale(&k)
            });
            assert_ne!(proportional, Some(true), "{:?}", s.sequence());
        }
    }
}

#[test]
fn lambda_beta_is_a_coalgebra_map_on_generators() {
    let h = Ispw::new();
    for beta in [vec![2, 3, 1, 4], vec![3, 1, 4, 2], vec![1, 2, 3, 4]] {
        for k in 1..=4 {
            let x = LinComb::basis(c(&[k]));
            let image = lambda_beta(&beta, &x).unwrap();
            let lhs = packhopf::hopf::coproduct_lc(&h, &image);
            let rhs = packhopf::hopf::coproduct_lc(&h, &x).apply(|(l, r)| {
                lambda_beta(&beta, &LinComb::basis(l.clone()))
                    .unwrap()
                    .tensor(&lambda_beta(&beta, &LinComb::basis(r.clone())).unwrap())
            });
            assert_eq!(lhs, rhs);
        }
    }
    let gamma_one = p_gamma(&shape(&[1, 2, 3]));
    assert_eq!(
        lambda_beta(&[2, 1, 3], &gamma_one).unwrap(),
        p_gamma(&shape(&[2, 1, 3])).scale(&q(1))
    );
}

#[test]
fn cocommutative_up_to_degree_six() {
    let h = Ispw::new();
    for n in 0..=6 {
        for b in h.basis(n).unwrap() {
            let d = h.coproduct(&b);
            assert_eq!(d.swap(), d);
        }
    }
}

#[test]
fn hopf_axioms() {
    let r = verify_hopf_axioms(&Ispw::new(), 5).unwrap();
    assert!(r.all_passed(), "{r}");
    let r = verify_hopf_axioms(&IspwDual::new(), 5).unwrap();
    assert!(r.all_passed(), "{r}");
}

#[test]
fn dual_operations_equal_the_transpose() {
    let h = Ispw::with_max_degree(6);
    let oracle = TransposeDual::new(&h);
    let d = IspwDual::new();
    for n1 in 0..=3 {
        for n2 in 0..=3 {
            for a in h.basis(n1).unwrap() {
                for b in h.basis(n2).unwrap() {
                    let (za, zb) = (Dual(a.clone()), Dual(b.clone()));
                    assert_eq!(d.product(&za, &zb), oracle.dual_product_oracle(&za, &zb).unwrap());
                }
            }
        }
    }
    for n in 0..=6 {
        for a in h.basis(n).unwrap() {
            let za = Dual(a);
            assert_eq!(d.coproduct(&za), oracle.dual_coproduct_oracle(&za).unwrap());
        }
    }
    let expected: LinComb<(Dual<Composition>, Dual<Composition>)> = [
        ((Dual(c(&[2, 1, 3])), Dual(Composition::empty())), q(1)),
        ((Dual(c(&[2])), Dual(c(&[1, 3]))), q(1)),
        ((Dual(c(&[2, 1])), Dual(c(&[3]))), q(1)),
        ((Dual(Composition::empty()), Dual(c(&[2, 1, 3]))), q(1)),
    ]
    .into_iter()
    .collect();
    assert_eq!(d.coproduct(&Dual(c(&[2, 1, 3]))), expected);
}
