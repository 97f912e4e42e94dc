use proptest::prelude::*;

use parahopf::bosonization::BosonisedG;
use parahopf::braided_hopf::{braided_multiply, HopfStructure, SuperParaboson};
use parahopf::rewriting::{extended_alphabet, phi_replacement};
use parahopf::scalar::rational;
use parahopf::{parse_element, AlgebraContext, AlgebraKind, ExactElement, ExactTensor, Generator, Scalar, Word};

fn scalar() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=4, -3i64..=3, 1i64..=3).prop_map(|(a, b, c, d)| {
        let mut z = rational(a, b);
        z.im = rational(c, d).re;
        z
    })
}

fn word(alphabet: Vec<Generator>, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(prop::sample::select(alphabet), 0..=max_len).prop_map(Word::from)
}

fn element(kind: AlgebraKind, max_len: usize, max_terms: usize) -> impl Strategy<Value = ExactElement> {
    prop::collection::vec((scalar(), word(extended_alphabet(kind, 2), max_len)), 1..=max_terms)
        .prop_map(|terms| terms.into_iter().map(|(c, w)| (w, c)).collect())
}

fn ladder_element(max_len: usize) -> impl Strategy<Value = ExactElement> {
    element(AlgebraKind::Boson, max_len, 3)
}

fn nf(ctx: &AlgebraContext, a: &ExactElement) -> ExactElement {
    ctx.normal_form(a).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn quotient_multiplication_is_associative(
        a in element(AlgebraKind::ParabosonG, 3, 2),
        b in element(AlgebraKind::ParabosonG, 3, 2),
        c in element(AlgebraKind::ParabosonG, 3, 2),
    ) {
        let ctx = AlgebraContext::paraboson_g();
        let left = nf(&ctx, &(&nf(&ctx, &(&a * &b)) * &c));
        let right = nf(&ctx, &(&a * &nf(&ctx, &(&b * &c))));
        prop_assert_eq!(left, right);
    }

    #[test]
    fn quotient_multiplication_distributes(
        a in element(AlgebraKind::Paraboson, 3, 2),
        b in element(AlgebraKind::Paraboson, 3, 2),
        c in element(AlgebraKind::Paraboson, 3, 2),
    ) {
        let ctx = AlgebraContext::paraboson();
        let lhs = nf(&ctx, &(&a * &(&b + &c)));
        let rhs = &nf(&ctx, &(&a * &b)) + &nf(&ctx, &(&a * &c));
        prop_assert_eq!(lhs, rhs);
        let lhs = nf(&ctx, &(&(&a + &b) * &c));
        let rhs = &nf(&ctx, &(&a * &c)) + &nf(&ctx, &(&b * &c));
        prop_assert_eq!(lhs, rhs);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn parity_decomposition(a in element(AlgebraKind::Paraboson, 4, 4)) {
        let (even, odd) = a.parity_decompose();
        prop_assert_eq!(&even + &odd, a.clone());
        prop_assert!(even.is_zero() || even.homogeneous_parity() == Some(0));
        prop_assert!(odd.is_zero() || odd.homogeneous_parity() == Some(1));
        prop_assert_eq!(a.g_action(), &even - &odd);
    }

    #[test]
    fn g_action_is_an_algebra_map(a in element(AlgebraKind::Paraboson, 3, 3), b in element(AlgebraKind::Paraboson, 3, 3)) {
        prop_assert_eq!((&a * &b).g_action(), &a.g_action() * &b.g_action());
        prop_assert_eq!(a.g_action().g_action(), a);
    }

    #[test]
    fn display_parses_back(a in element(AlgebraKind::Free, 3, 4)) {
        prop_assert_eq!(parse_element(&a.to_string()).unwrap(), a);
    }

    #[test]
    fn scalar_display_parses_back(c in scalar()) {
        let a = ExactElement::scalar(c.clone());
        let back = parse_element(&a.to_string()).unwrap();
        prop_assert_eq!(back.constant_term(), c);
    }

    #[test]
    fn normal_form_is_idempotent(a in element(AlgebraKind::ParabosonK, 5, 3)) {
        let ctx = AlgebraContext::paraboson_k();
        let once = nf(&ctx, &a);
        for w in once.words() {
            prop_assert!(ctx.is_normal(w).unwrap(), "{} is not normal", w);
        }
        prop_assert_eq!(nf(&ctx, &once), once);
    }

    #[test]
    fn normal_form_respects_products(a in element(AlgebraKind::Paraboson, 3, 3), b in element(AlgebraKind::Paraboson, 3, 3)) {
        let ctx = AlgebraContext::paraboson();
        prop_assert_eq!(nf(&ctx, &(&a * &b)), nf(&ctx, &(&nf(&ctx, &a) * &nf(&ctx, &b))));
    }

    #[test]
    fn boson_map_factors_through_the_quotient(a in element(AlgebraKind::Paraboson, 4, 3)) {
        let reduced = nf(&AlgebraContext::paraboson(), &a);
        prop_assert_eq!(phi_replacement(&reduced).unwrap(), phi_replacement(&a).unwrap());
    }

    #[test]
    fn boson_map_is_multiplicative(a in ladder_element(3), b in ladder_element(3)) {
        let lhs = phi_replacement(&(&a * &b)).unwrap();
        let rhs = nf(&AlgebraContext::boson(), &(&phi_replacement(&a).unwrap() * &phi_replacement(&b).unwrap()));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn coproduct_is_multiplicative(a in element(AlgebraKind::Paraboson, 2, 2), b in element(AlgebraKind::Paraboson, 2, 2)) {
        let ctx = SuperParaboson.context();
        let lhs = SuperParaboson.coproduct(&(&a * &b)).unwrap();
        let rhs = braided_multiply(
            &SuperParaboson.coproduct(&a).unwrap(),
            &SuperParaboson.coproduct(&b).unwrap(),
            &ctx,
        )
        .unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn ordinary_antipode_reverses_products(a in element(AlgebraKind::ParabosonG, 3, 2), b in element(AlgebraKind::ParabosonG, 3, 2)) {
        let ctx = BosonisedG.context();
        let lhs = BosonisedG.antipode(&(&a * &b)).unwrap();
        let rhs = nf(&ctx, &(&BosonisedG.antipode(&b).unwrap() * &BosonisedG.antipode(&a).unwrap()));
        prop_assert_eq!(lhs, rhs);
    }
}

fn tensor() -> impl Strategy<Value = ExactTensor> {
    let alphabet = extended_alphabet(AlgebraKind::Paraboson, 2);
    prop::collection::vec((scalar(), word(alphabet.clone(), 3), word(alphabet, 3)), 1..=4).prop_map(|terms| {
        let mut t = ExactTensor::zero();
        for (c, x, y) in terms {
            t.add_term([x, y], c);
        }
        t
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn braiding_is_involutive(t in tensor()) {
        prop_assert_eq!(t.braid().braid(), t);
    }
}
