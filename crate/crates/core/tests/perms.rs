use packhopf::hopf::{coproduct_lc, verify_hopf_axioms, Dual, GradedHopf, TransposeDual};
use packhopf::perms::{
    permutation_words, quadri_product, split_product, verify_quadri, Quadri, Sh, ShDual, SplitProduct,
};
use packhopf::pword::{star, PackedWord};
use packhopf::scalars::{q, LinComb};
use packhopf::wmat::{wmat_coproduct, WMat};
use packhopf::wmatdual::{dual_product_closed, DualWord};

fn w(letters: &[u32]) -> PackedWord {
    PackedWord::new(letters.to_vec()).unwrap()
}

#[test]
fn sh_is_closed_under_product_and_coproduct() {
    for n in 0..=5 {
        for a in permutation_words(n) {
            for (pair, _) in wmat_coproduct(&a).iter() {
                assert!(pair.0.is_permutation() || pair.0.is_empty(), "{a}");
                assert!(pair.1.is_permutation() || pair.1.is_empty(), "{a}");
            }
            for m in 0..=5 - n {
                for b in permutation_words(m) {
                    let p = star(&a, &b);
                    assert!(p.is_permutation() || p.is_empty());
                }
            }
        }
    }
}

#[test]
fn sh_axioms() {
    let r = verify_hopf_axioms(&Sh::default(), 4).unwrap();
    assert!(r.all_passed(), "{r}");
    let r = verify_hopf_axioms(&ShDual::new(), 4).unwrap();
    assert!(r.all_passed(), "{r}");
}

#[test]
fn sh_dual_product_is_the_restricted_wmat_dual_product() {
    let wmat = WMat::new();
    let oracle = TransposeDual::new(&wmat);
    let sh = Sh::default();
    let sh_oracle = TransposeDual::new(&sh);
    let d = ShDual::new();
    for n1 in 0..=4 {
        for n2 in 0..=4 - n1 {
            for a in permutation_words(n1) {
                for b in permutation_words(n2) {
                    let (za, zb) = (Dual(a.clone()), Dual(b.clone()));
                    let full = oracle.dual_product_oracle(&za, &zb).unwrap();
                    let restricted = full.filter(|z| z.0.is_permutation() || z.0.is_empty());
                    assert_eq!(full, restricted, "C1 products stay on permutations");
                    assert_eq!(d.product(&za, &zb), restricted, "{a} {b}");
                    assert_eq!(dual_product_closed(&a, &b), restricted);
                    assert_eq!(sh_oracle.dual_product_oracle(&za, &zb).unwrap(), restricted);
                }
            }
        }
    }
}

#[test]
fn quadri_sum_is_the_full_product() {
    let d = ShDual::new();
    for n1 in 1..=3 {
        for n2 in 1..=4 - n1 {
            for a in permutation_words(n1) {
                for b in permutation_words(n2) {
                    let mut sum = LinComb::zero();
                    for k in Quadri::ALL {
                        sum += &quadri_product(k, &a, &b).unwrap();
                    }
                    assert_eq!(sum, d.product(&Dual(a.clone()), &Dual(b.clone())));
                }
            }
        }
    }
}

#[test]
fn quadri_structure_up_to_degree_five() {
    let r = verify_quadri(5);
    print!("{r}");
    assert!(r.all_passed(), "{r}");
}

fn render_witness() -> String {
    let d = ShDual::new();
    let cases = [
        (SplitProduct::Left, w(&[1]), w(&[1, 2])),
        (SplitProduct::Left, w(&[2, 1]), w(&[2, 1, 3])),
        (SplitProduct::Wedge, w(&[2, 1, 3]), w(&[1])),
    ];
    let mut out = String::new();
    for (op, a, b) in cases {
        let x = split_product(op, &a, &b).unwrap();
        out.push_str(&format!("Z{a} {op} Z{b} = {x}\n"));
        out.push_str(&format!("coproduct: {}\n", coproduct_lc(&d, &x).into_tensor()));
    }
    out
}

#[test]
fn bidendriform_witness_fixture() {
    let d = ShDual::new();
    let x = split_product(SplitProduct::Left, &w(&[1]), &w(&[1, 2])).unwrap();
    let z = |l: &[u32]| Dual(w(l));
    let expected: LinComb<(DualWord, DualWord)> = [
        ((z(&[]), z(&[1, 2, 3])), q(1)),
        ((z(&[]), z(&[2, 1, 3])), q(1)),
        ((z(&[]), z(&[2, 3, 1])), q(1)),
        ((z(&[1]), z(&[1, 2])), q(1)),
        ((z(&[1, 2]), z(&[1])), q(1)),
        ((z(&[2, 1]), z(&[1])), q(1)),
        ((z(&[1, 2, 3]), z(&[])), q(1)),
        ((z(&[2, 1, 3]), z(&[])), q(1)),
        ((z(&[2, 3, 1]), z(&[])), q(1)),
    ]
    .into_iter()
    .collect();
    assert_eq!(coproduct_lc(&d, &x), expected);

    let golden = include_str!("fixtures/bidendriform_witness.txt");
    assert_eq!(render_witness(), golden);
}
