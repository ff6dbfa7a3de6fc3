use packhopf::hopf::{verify_hopf_axioms, Dual, GradedHopf, TransposeDual};
use packhopf::pword::{enumerate_packed, PackedWord};
use packhopf::scalars::{q, LinComb};
use packhopf::wmat::WMat;
use packhopf::wmatdual::{dual_coproduct_closed, dual_product_closed, DualWord, WMatDual};

fn w(letters: &[u32]) -> PackedWord {
    PackedWord::new(letters.to_vec()).unwrap()
}

/// Word shuffle with multiplicities, by the usual first-letter recursion.
fn shuffle(a: &[u32], b: &[u32]) -> Vec<Vec<u32>> {
    if a.is_empty() {
        return vec![b.to_vec()];
    }
    if b.is_empty() {
        return vec![a.to_vec()];
    }
    let mut out = Vec::new();
    for mut s in shuffle(&a[1..], b) {
        s.insert(0, a[0]);
        out.push(s);
    }
    for mut s in shuffle(a, &b[1..]) {
        s.insert(0, b[0]);
        out.push(s);
    }
    out
}

fn z_shuffle(pairs: &[(&[u32], &[u32])]) -> LinComb<DualWord> {
    let mut out = LinComb::zero();
    for (a, b) in pairs {
        for s in shuffle(a, b) {
            out.add_term(Dual(w(&s)), q(1));
        }
    }
    out
}

#[test]
fn mixed_case_example() {
    let expected = z_shuffle(&[
        (&[1, 0], &[0, 2]),
        (&[1, 0], &[1, 2]),
        (&[2, 0], &[0, 1]),
        (&[2, 0], &[2, 1]),
    ]);
    assert_eq!(dual_product_closed(&w(&[1, 0]), &w(&[0, 1])), expected);
}

#[test]
fn oracle_examples() {
    let h = WMat::new();
    let d = TransposeDual::new(&h);
    let x0 = Dual(w(&[0]));
    let x1 = Dual(w(&[1]));
    let expected: LinComb<DualWord> = [(Dual(w(&[1, 0])), q(1)), (Dual(w(&[0, 1])), q(1))].into_iter().collect();
    assert_eq!(d.dual_product_oracle(&x0, &x1).unwrap(), expected);
    let expected = expected + LinComb::term(Dual(w(&[1, 1])), q(2));
    assert_eq!(d.dual_product_oracle(&x1, &x0).unwrap(), expected);
    let unit = Dual(PackedWord::unit());
    assert_eq!(d.dual_product_oracle(&unit, &x1).unwrap(), LinComb::basis(x1.clone()));
    assert_eq!(d.dual_coproduct_oracle(&unit).unwrap(), LinComb::basis((unit.clone(), unit.clone())));
    let big = Dual(w(&[1, 2, 3, 4, 5, 6, 7, 8]));
    assert!(d.dual_coproduct_oracle(&big).is_err());
}

#[test]
fn closed_product_equals_oracle_up_to_degree_four() {
    let h = WMat::new();
    let d = TransposeDual::new(&h);
    for n1 in 0..=4 {
        for n2 in 0..=4 - n1 {
            for a in enumerate_packed(n1).unwrap() {
                for b in enumerate_packed(n2).unwrap() {
                    let closed = dual_product_closed(a, b);
                    let oracle = d.dual_product_oracle(&Dual(a.clone()), &Dual(b.clone())).unwrap();
                    assert_eq!(closed, oracle, "Z{a} Z{b}");
                }
            }
        }
    }
}

#[test]
fn closed_product_equals_oracle_on_degree_five_sample() {
    use rand::{rngs::StdRng, Rng, SeedableRng};
    let h = WMat::new();
    let d = TransposeDual::new(&h);
    let mut rng = StdRng::seed_from_u64(5);
    for _ in 0..60 {
        let n1 = rng.gen_range(1..5);
        let words1 = enumerate_packed(n1).unwrap();
        let words2 = enumerate_packed(5 - n1).unwrap();
        let a = &words1[rng.gen_range(0..words1.len())];
        let b = &words2[rng.gen_range(0..words2.len())];
        let oracle = d.dual_product_oracle(&Dual(a.clone()), &Dual(b.clone())).unwrap();
        assert_eq!(dual_product_closed(a, b), oracle, "Z{a} Z{b}");
    }
}

#[test]
fn closed_coproduct_equals_oracle_up_to_degree_five() {
    let h = WMat::new();
    let d = TransposeDual::new(&h);
    for n in 0..=5 {
        for c in enumerate_packed(n).unwrap() {
            assert_eq!(
                dual_coproduct_closed(c),
                d.dual_coproduct_oracle(&Dual(c.clone())).unwrap(),
                "{c}"
            );
        }
    }
}

#[test]
fn dual_is_not_commutative() {
    let (x0, x1) = (w(&[0]), w(&[1]));
    assert_ne!(dual_product_closed(&x0, &x1), dual_product_closed(&x1, &x0));
}

#[test]
fn dual_axioms_degree_four() {
    let r = verify_hopf_axioms(&WMatDual::new(), 4).unwrap();
    assert!(r.all_passed(), "{r}");
    let h = WMat::new();
    let oracle = TransposeDual::new(&h);
    let r = verify_hopf_axioms(&oracle, 3).unwrap();
    assert!(r.all_passed(), "{r}");
}

#[test]
fn dual_product_associative_degree_four() {
    let d = WMatDual::new();
    let all: Vec<DualWord> = (1..=2)
        .flat_map(|n| enumerate_packed(n).unwrap().iter().cloned().map(Dual))
        .collect();
    for a in &all {
        for b in &all {
            for c in &all {
                if d.degree(a) + d.degree(b) + d.degree(c) > 4 {
                    continue;
                }
                let ab = d.product(a, b);
                let lhs = packhopf::hopf::product_lc(&d, &ab, &LinComb::basis(c.clone()));
                let rhs = packhopf::hopf::product_lc(&d, &LinComb::basis(a.clone()), &d.product(b, c));
                assert_eq!(lhs, rhs);
            }
        }
    }
}
