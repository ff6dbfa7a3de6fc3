use packhopf::pword::pack;
use packhopf::scalars::{Tensor, Q};
use packhopf_cli::expr::{parse_expr, Expr, Label};
use packhopf_cli::json::{from_json, to_json};
use proptest::prelude::*;

fn word_expr() -> impl Strategy<Value = Expr> {
    let word = prop::collection::vec(0u32..5, 0..6).prop_map(|l| Label::Word(pack(&l)));
    let term = (prop::collection::vec(word, 2), -40i64..40, 1i64..9)
        .prop_map(|(legs, n, d)| (Tensor(legs), Q::new(n.into(), d.into())));
    prop::collection::vec(term, 0..6).prop_map(|terms| {
        let mut x = Expr::zero();
        for (t, c) in terms {
            x.add_term(t, c);
        }
        x
    })
}

proptest! {
    #[test]
    fn text_round_trip(x in word_expr()) {
        prop_assert_eq!(parse_expr(&x.to_string()).unwrap(), x);
    }

    #[test]
    fn json_round_trip(x in word_expr()) {
        prop_assert_eq!(from_json(&to_json("t", &x)).unwrap(), x);
    }

    #[test]
    fn parser_never_panics(s in "[\\[\\]()0-9,;+\\-/*MZ ⊗]{0,24}") {
        let _ = parse_expr(&s);
    }
}
