use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::scalar::{integer, rational, Scalar};
use crate::terms::parse_element;

type El = Element<Scalar>;

fn nf(kind: AlgebraKind, src: &str) -> El {
    AlgebraContext::new(kind).normal_form(&parse_element(src).unwrap()).unwrap()
}

fn el(src: &str) -> El {
    parse_element(src).unwrap()
}

#[test]
fn boson_ccr() {
    assert_eq!(nf(AlgebraKind::Boson, "B-1 B+1"), el("B+1 B-1 + I"));
    assert_eq!(nf(AlgebraKind::Boson, "B-2 B+1"), el("B+1 B-2"));
    assert_eq!(nf(AlgebraKind::Boson, "B+2 B+1"), el("B+1 B+2"));
}

#[test]
fn paraboson_examples() {
    assert_eq!(nf(AlgebraKind::Paraboson, "B-1 E(1+,1-)"), el("E(1+,1-) B-1 + 2 B-1"));
    assert_eq!(nf(AlgebraKind::Paraboson, "B+1 B+1"), el("1/2 E(1+,1+)"));
    assert_eq!(nf(AlgebraKind::Paraboson, "B-1 B+1"), el("E(1+,1-) - B+1 B-1"));
    assert_eq!(nf(AlgebraKind::Paraboson, "I"), el("I"));
}

#[test]
fn group_like_tails() {
    assert_eq!(nf(AlgebraKind::ParabosonG, "g B+1 g"), el("-1 B+1"));
    assert_eq!(nf(AlgebraKind::ParabosonG, "g E(1+,2-) B-1"), el("-1 E(1+,2-) B-1 g"));
    assert_eq!(nf(AlgebraKind::ParabosonK, "K+ K-"), el("I"));
    assert_eq!(nf(AlgebraKind::ParabosonK, "K- K+"), el("I"));
    assert_eq!(nf(AlgebraKind::ParabosonK, "K- B+1 K+"), el("-1 B+1"));
    assert_eq!(nf(AlgebraKind::ParabosonK, "K+ K+"), el("K+ K+"));
}

#[test]
fn free_applies_nothing() {
    let src = "B-1 B+1 g K- E(2-,1+)";
    assert_eq!(nf(AlgebraKind::Free, src), el(src));
}

#[test]
fn foreign_letters_are_rejected() {
    let ctx = AlgebraContext::boson();
    for src in ["g", "E(1+,1-)", "K+"] {
        let err = ctx.normal_form(&el(src)).unwrap_err();
        assert!(matches!(err, RewriteError::ForeignLetter { .. }), "{src}");
    }
    assert!(AlgebraContext::paraboson().normal_form(&el("B+1 g")).is_err());
    assert!(AlgebraContext::paraboson_g().normal_form(&el("K+")).is_err());
    assert!(AlgebraContext::paraboson_k().normal_form(&el("g")).is_err());
}

#[test]
fn ee_bracket_from_expansion() {
    // [E(1+,1+), E(1-,1-)] computed two ways.
    let lhs = nf(AlgebraKind::Paraboson, "E(1+,1+) E(1-,1-) - E(1-,1-) E(1+,1+)");
    assert_eq!(lhs, el("-8 E(1+,1-)"));
    let expanded = expand_e(&el("E(1+,1+) E(1-,1-) - E(1-,1-) E(1+,1+)"));
    assert_eq!(AlgebraContext::paraboson().normal_form(&expanded).unwrap(), lhs);
    assert!(nf(AlgebraKind::Paraboson, "E(1+,2+) E(3-,3-) - E(3-,3-) E(1+,2+)").is_zero());
}

#[test]
fn expand_e_examples() {
    assert_eq!(expand_e(&el("E(1+,1-)")), el("B+1 B-1 + B-1 B+1"));
    assert_eq!(expand_e(&el("E(1+,1+)")), el("2 B+1 B+1"));
    assert_eq!(expand_e(&el("I")), el("I"));
}

#[test]
fn ideal_generators_vanish() {
    let pb = AlgebraContext::paraboson();
    let rels = paraboson_relations::<Scalar>(3);
    assert_eq!(rels.len(), 216);
    for (label, r) in &rels {
        assert!(pb.normal_form(r).unwrap().is_zero(), "{label:?}");
    }
    let boson = AlgebraContext::boson();
    for r in boson_relations::<Scalar>(3) {
        assert!(boson.normal_form(&r).unwrap().is_zero(), "{r}");
    }
}

#[test]
fn phi_examples() {
    assert_eq!(phi_replacement(&el("B+1 B-1")).unwrap(), el("B+1 B-1"));
    assert_eq!(phi_replacement(&el("B-1 B+1")).unwrap(), el("B+1 B-1 + I"));
    assert!(phi_replacement(&el("B+1 g")).is_err());
    for (_, r) in paraboson_relations::<Scalar>(3) {
        assert!(phi_replacement(&r).unwrap().is_zero());
    }
}

#[test]
fn every_rule_decreases_the_term_order() {
    for kind in [AlgebraKind::Boson, AlgebraKind::ParabosonG, AlgebraKind::ParabosonK] {
        for rule in rule_table(kind, 3).unwrap() {
            let lhs = Word::from(&rule.lhs[..]);
            for (w, _) in &rule.rhs {
                assert!(term_order_key(w) < term_order_key(&lhs), "{lhs} -> {w}");
            }
        }
    }
}

#[test]
fn normal_words_are_sorted() {
    let ctx = AlgebraContext::paraboson_k();
    let a = nf(AlgebraKind::ParabosonK, "K- B-2 E(2-,2-) B+1 K+ B+2 E(1+,1-) B-1");
    for w in a.words() {
        assert!(ctx.is_normal(w).unwrap(), "{w}");
    }
}

#[test]
fn critical_pairs_are_joinable() {
    // Every overlap x y z of two rules, reduced from both ends.
    for kind in [AlgebraKind::Boson, AlgebraKind::ParabosonG, AlgebraKind::ParabosonK] {
        let ctx = AlgebraContext::new(kind);
        let letters = extended_alphabet(kind, 2);
        for &x in &letters {
            for &y in &letters {
                for &z in &letters {
                    let w = Word::from(vec![x, y, z]);
                    let (Some(left), Some(right)) =
                        (ctx.rewrite_at::<Scalar>(&w, 0).unwrap(), ctx.rewrite_at::<Scalar>(&w, 1).unwrap())
                    else {
                        continue;
                    };
                    assert_eq!(ctx.normal_form(&left).unwrap(), ctx.normal_form(&right).unwrap(), "{kind}: {w}");
                }
            }
        }
    }
}

#[test]
fn randomized_orders_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let ctx = AlgebraContext::paraboson_g();
    let letters = extended_alphabet(AlgebraKind::ParabosonG, 2);
    for _ in 0..100 {
        let len = rng.random_range(1..=6);
        let w: Word = (0..len).map(|_| letters[rng.random_range(0..letters.len())]).collect();
        let a = El::from_word(w);
        let x = ctx.normal_form_randomized(&a, &mut rng).unwrap();
        let y = ctx.normal_form_randomized(&a, &mut rng).unwrap();
        assert_eq!(x, y);
        assert_eq!(x, ctx.normal_form(&a).unwrap());
    }
}

#[test]
fn coefficients_stay_exact() {
    let a = nf(AlgebraKind::Paraboson, "(1/3 + 2 i) B+1 B+1");
    assert_eq!(
        a.coefficient(&Word::letter(Generator::e(Ladder::plus(1), Ladder::plus(1)))),
        (rational(1, 3) + Scalar::imaginary_unit() * integer(2)) * rational(1, 2)
    );
}

#[test]
fn kind_names_round_trip() {
    for k in AlgebraKind::ALL {
        assert_eq!(AlgebraKind::from_short_name(k.short_name()), Some(k));
    }
}
