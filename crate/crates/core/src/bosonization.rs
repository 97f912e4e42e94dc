//! The ordinary Hopf algebras `P_B(g)` and `P_B(K±)`.
//!
//! `P_B(g)` is worked with directly on words carrying a `g` tail. The pair
//! form `a ⋆ h` (with `h ∈ {1, g}`) appears only in the cross-validation
//! against the general smash-product formulas.

use rayon::prelude::*;
use thiserror::Error;

use crate::braided_hopf::{HopfStructure, RMatrixCZ2, SuperParaboson};
use crate::report::{CheckEntry, Report};
use crate::rewriting::{ladder_alphabet, paraboson_relations, AlgebraContext, AlgebraKind, RewriteError};
use crate::sampling::words_up_to;
use crate::scalar::{Coefficient, Scalar};
use crate::tensor::{Braiding, Tensor, TensorElement, TripleTensor};
use crate::terms::{Element, Generator, Sign, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BosonizationError {
    #[error("element {0} is not homogeneous")]
    InhomogeneousInput(String),
    #[error("{0} is not of the form a ⋆ h with h in {{1, g}}")]
    NotSmashForm(String),
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
}

fn group_like_relations(max_index: u32, group_likes: &[Generator]) -> Vec<(String, Element<Scalar>)> {
    let mut out: Vec<(String, Element<Scalar>)> =
        paraboson_relations(max_index).into_iter().map(|((x, y, z), r)| (format!("[{{{x}, {y}}}, {z}]"), r)).collect();
    for &k in group_likes {
        for b in ladder_alphabet(max_index) {
            let (kk, bb) = (Element::generator(k), Element::generator(b));
            out.push((format!("{{{k}, {b}}}"), &(&kk * &bb) + &(&bb * &kk)));
        }
    }
    out
}

/// `P_B(g)`: `Δ(B) = B⊗1 + g⊗B`, `Δ(g) = g⊗g`, `S(B) = Bg`, `S(g) = g`.
#[derive(Clone, Copy, Debug, Default)]
pub struct BosonisedG;

impl HopfStructure for BosonisedG {
    fn context(&self) -> AlgebraContext {
        AlgebraContext::paraboson_g()
    }

    fn braiding(&self) -> Braiding {
        Braiding::Trivial
    }

    fn label(&self) -> &'static str {
        "pbg"
    }

    fn letter_coproduct<C: Coefficient>(&self, x: Generator) -> TensorElement<C> {
        let (one, g, w) = (Word::unit(), Word::letter(Generator::G), Word::letter(x));
        match x {
            Generator::G => TensorElement::pure([g.clone(), g], C::one()),
            _ => [([w.clone(), one], C::one()), ([g, w], C::one())].into_iter().collect(),
        }
    }

    fn letter_antipode<C: Coefficient>(&self, x: Generator) -> Element<C> {
        match x {
            Generator::G => Element::generator(Generator::G),
            _ => Element::from_word(Word::from(vec![x, Generator::G])),
        }
    }

    fn alphabet(&self, max_index: u32) -> Vec<Generator> {
        let mut a = ladder_alphabet(max_index);
        a.push(Generator::G);
        a
    }

    fn relations(&self, max_index: u32) -> Vec<(String, Element<Scalar>)> {
        let mut out = group_like_relations(max_index, &[Generator::G]);
        let g = Element::generator(Generator::G);
        out.push(("g g - I".into(), &(&g * &g) - &Element::one()));
        out
    }

    fn extra_checks(&self, w: &Word) -> Vec<CheckEntry> {
        let ctx = self.context();
        let a = Element::<Scalar>::from_word(w.clone());
        let g = Element::generator(Generator::G);
        let s = self.antipode(&a);
        vec![
            CheckEntry::from_result(
                "counit_antipode",
                w,
                s.clone().and_then(|s| Ok((Element::scalar(self.counit(&s)?), Element::scalar(self.counit(&a)?)))),
            ),
            // reported rather than assumed: S² acts as conjugation by g
            CheckEntry::from_result(
                "antipode_square_conjugation",
                w,
                s.and_then(|s| Ok((self.antipode(&s)?, ctx.normal_form(&(&(&g * &a) * &g))?))),
            ),
        ]
    }
}

/// `P_B(K±)`: `Δ(B^±) = B^±⊗1 + K^±⊗B^±`, `Δ(K^±) = K^±⊗K^±`,
/// `S(B^±) = B^± K^∓`, `S(K^±) = K^∓`.
#[derive(Clone, Copy, Debug, Default)]
pub struct KExtension;

fn k_of(sign: Sign) -> Generator {
    Generator::k(sign)
}

impl HopfStructure for KExtension {
    fn context(&self) -> AlgebraContext {
        AlgebraContext::paraboson_k()
    }

    fn braiding(&self) -> Braiding {
        Braiding::Trivial
    }

    fn label(&self) -> &'static str {
        "pbk"
    }

    fn letter_coproduct<C: Coefficient>(&self, x: Generator) -> TensorElement<C> {
        let w = Word::letter(x);
        match x {
            Generator::B(l) => [([w.clone(), Word::unit()], C::one()), ([Word::letter(k_of(l.sign)), w], C::one())]
                .into_iter()
                .collect(),
            _ => TensorElement::pure([w.clone(), w], C::one()),
        }
    }

    fn letter_antipode<C: Coefficient>(&self, x: Generator) -> Element<C> {
        match x {
            Generator::B(l) => Element::from_word(Word::from(vec![x, k_of(l.sign.flip())])),
            Generator::KPlus => Element::generator(Generator::KMinus),
            Generator::KMinus => Element::generator(Generator::KPlus),
            other => Element::generator(other),
        }
    }

    fn alphabet(&self, max_index: u32) -> Vec<Generator> {
        let mut a = ladder_alphabet(max_index);
        a.extend([Generator::KPlus, Generator::KMinus]);
        a
    }

    fn relations(&self, max_index: u32) -> Vec<(String, Element<Scalar>)> {
        let mut out = group_like_relations(max_index, &[Generator::KPlus, Generator::KMinus]);
        let (kp, km) = (Element::generator(Generator::KPlus), Element::generator(Generator::KMinus));
        out.push(("K+ K- - I".into(), &(&kp * &km) - &Element::one()));
        out.push(("K- K+ - I".into(), &(&km * &kp) - &Element::one()));
        out
    }

    fn extra_checks(&self, w: &Word) -> Vec<CheckEntry> {
        let ctx = self.context();
        let a = Element::<Scalar>::from_word(w.clone());
        let (kp, km) = (Element::generator(Generator::KPlus), Element::generator(Generator::KMinus));
        let s = self.antipode(&a);
        vec![
            CheckEntry::from_result(
                "counit_antipode",
                w,
                s.clone().and_then(|s| Ok((Element::scalar(self.counit(&s)?), Element::scalar(self.counit(&a)?)))),
            ),
            CheckEntry::from_result(
                "antipode_square_conjugation",
                w,
                s.and_then(|s| Ok((self.antipode(&s)?, ctx.normal_form(&(&(&kp * &a) * &km))?))),
            ),
        ]
    }
}

pub fn k_coproduct<C: Coefficient>(a: &Element<C>) -> Result<TensorElement<C>, RewriteError> {
    KExtension.coproduct(a)
}

pub fn k_counit<C: Coefficient>(a: &Element<C>) -> Result<C, RewriteError> {
    KExtension.counit(a)
}

pub fn k_antipode<C: Coefficient>(a: &Element<C>) -> Result<Element<C>, RewriteError> {
    KExtension.antipode(a)
}

/// `ρ(a) = 1⊗a` for even `a`, `g⊗a` for odd `a`.
pub fn cz2_coaction<C: Coefficient>(a: &Element<C>) -> Result<TensorElement<C>, BosonizationError> {
    let parity = a.homogeneous_parity().ok_or_else(|| BosonizationError::InhomogeneousInput(a.to_string()))?;
    let h = if parity == 0 { Element::one() } else { Element::generator(Generator::G) };
    Ok(TensorElement::product_of([&h, a]))
}

/// `h ▷ a` for `h ∈ {1, g}`.
fn act<C: Coefficient>(h: &Word, a: &Element<C>) -> Element<C> {
    if h.is_unit() {
        a.clone()
    } else {
        a.g_action()
    }
}

fn check_h_slot(h: &Word) -> Result<(), BosonizationError> {
    if h.letters().iter().all(|g| *g == Generator::G) {
        Ok(())
    } else {
        Err(BosonizationError::NotSmashForm(h.to_string()))
    }
}

/// Pair-form product `(b⋆h)(c⋆h') = b(h ▷ c) ⋆ hh'` (`Δ(g) = g⊗g`).
pub fn smash_multiply<C: Coefficient>(
    x: &TensorElement<C>,
    y: &TensorElement<C>,
) -> Result<TensorElement<C>, BosonizationError> {
    let pb = AlgebraContext::paraboson();
    let pbg = AlgebraContext::paraboson_g();
    let mut out = TensorElement::zero();
    for ([b, h], c1) in x.terms() {
        check_h_slot(h)?;
        for ([c, h2], c2) in y.terms() {
            check_h_slot(h2)?;
            let left = Element::from_word(b.clone()).concat_multiply(&act(h, &Element::from_word(c.clone())));
            let left = pb.normal_form(&left)?;
            let right = pbg.normal_form_word::<C>(&h.concat(h2))?;
            out.add_scaled(&TensorElement::product_of([&left, &right]), &(c1.clone() * c2.clone()));
        }
    }
    Ok(out)
}

/// `a ⋆ h ↦ a·h` in `P_B(g)`.
pub fn collapse<C: Coefficient>(x: &TensorElement<C>) -> Result<Element<C>, RewriteError> {
    AlgebraContext::paraboson_g().normal_form(&x.contract())
}

/// Inverse of [`collapse`]: split each normal word into its paraboson part
/// and its `g` tail.
pub fn to_smash_form<C: Coefficient>(a: &Element<C>) -> Result<TensorElement<C>, RewriteError> {
    let nf = AlgebraContext::paraboson_g().normal_form(a)?;
    Ok(nf
        .terms()
        .map(|(w, c)| {
            let ls = w.letters();
            let split = ls.iter().position(|g| *g == Generator::G).unwrap_or(ls.len());
            ([Word::from(&ls[..split]), Word::from(&ls[split..])], c.clone())
        })
        .collect())
}

/// Cross coproduct with coaction from `R_g`:
/// `Δ(a⋆h) = Σ a₁ ⋆ R⁽²⁾h ⊗ (R⁽¹⁾ ▷ a₂) ⋆ h`, returned collapsed into
/// `P_B(g) ⊗ P_B(g)`.
pub fn smash_coproduct<C: Coefficient>(x: &TensorElement<C>) -> Result<TensorElement<C>, BosonizationError> {
    let pbg = AlgebraContext::paraboson_g();
    let legs = RMatrixCZ2.legs::<C>();
    let mut four: Tensor<C, 4> = Tensor::zero();
    for ([a, h], c) in x.terms() {
        check_h_slot(h)?;
        let delta = SuperParaboson.coproduct_word::<C>(a)?;
        for ([a1, a2], d) in delta.terms() {
            for (r1, r2, rc) in &legs {
                let acted = act(r1, &Element::<C>::from_word(a2.clone()));
                for (v, e) in acted.terms() {
                    let coeff = c.clone() * d.clone() * rc.clone() * e.clone();
                    four.add_term([a1.clone(), r2.concat(h), v.clone(), h.clone()], coeff);
                }
            }
        }
    }
    let mut out = TensorElement::zero();
    for ([a1, h1, a2, h2], c) in four.terms() {
        let left = pbg.normal_form_word::<C>(&a1.concat(h1))?;
        let right = pbg.normal_form_word::<C>(&a2.concat(h2))?;
        out.add_scaled(&TensorElement::product_of([&left, &right]), c);
    }
    Ok(out)
}

/// `u = Σ S_H(R⁽²⁾) R⁽¹⁾`, reduced in the group algebra.
pub fn drinfeld_element<C: Coefficient>() -> Result<Element<C>, RewriteError> {
    let mut u = Element::zero();
    for (r1, r2, c) in RMatrixCZ2.legs::<C>() {
        // S_H fixes 1 and g
        u.add_term(r2.concat(&r1), c);
    }
    AlgebraContext::paraboson_g().normal_form(&u)
}

/// Smash antipode with `H = CZ₂`:
/// `S(a⋆h) = Σ ((S_H(h) u R⁽¹⁾) ▷ S_A(a)) ⋆ S_H(R⁽²⁾ h)`, collapsed.
pub fn smash_antipode<C: Coefficient>(x: &TensorElement<C>) -> Result<Element<C>, BosonizationError> {
    let pbg = AlgebraContext::paraboson_g();
    let u = drinfeld_element::<C>()?;
    let legs = RMatrixCZ2.legs::<C>();
    let mut out = Element::zero();
    for ([a, h], c) in x.terms() {
        check_h_slot(h)?;
        let sa = SuperParaboson.antipode(&Element::from_word(a.clone()))?;
        for (r1, r2, rc) in &legs {
            for (uw, uc) in u.terms() {
                // S_H(h) = h for h in {1, g}
                let actor = pbg.normal_form_word::<C>(&h.concat(uw).concat(r1))?;
                for (hw, hc) in actor.terms() {
                    let acted = act(hw, &sa);
                    let tail = pbg.normal_form_word::<C>(&r2.concat(h))?;
                    let coeff = c.clone() * rc.clone() * uc.clone() * hc.clone();
                    out.add_scaled(&acted.concat_multiply(&tail), &coeff);
                }
            }
        }
    }
    Ok(pbg.normal_form(&out)?)
}

/// Build a word's pair form by smash-multiplying its letters
/// (`B ↦ B⋆1`, `g ↦ 1⋆g`).
pub fn smash_word<C: Coefficient>(w: &Word) -> Result<TensorElement<C>, BosonizationError> {
    let mut acc = TensorElement::one();
    for &x in w.letters() {
        let factor = match x {
            Generator::G => TensorElement::pure([Word::unit(), Word::letter(x)], C::one()),
            _ => TensorElement::pure([Word::letter(x), Word::unit()], C::one()),
        };
        acc = smash_multiply(&acc, &factor)?;
    }
    Ok(acc)
}

/// General smash-product route against the explicit `P_B(g)` formulas, on
/// every word of length `<= max_len` over `{B^±_i, g}`.
pub fn bosonise_from_general(max_len: usize, max_index: u32) -> Report {
    let h = BosonisedG;
    let pbg = h.context();
    words_up_to(&h.alphabet(max_index), max_len)
        .par_iter()
        .flat_map_iter(|w| {
            let a = Element::<Scalar>::from_word(w.clone());
            let pair = smash_word::<Scalar>(w);
            [
                CheckEntry::from_result(
                    "smash_product",
                    w,
                    pair.clone().and_then(|p| Ok((collapse(&p)?, pbg.normal_form(&a)?))),
                ),
                CheckEntry::from_result(
                    "smash_coproduct",
                    w,
                    pair.clone().and_then(|p| Ok((smash_coproduct(&p)?, h.coproduct(&a)?))),
                ),
                CheckEntry::from_result(
                    "smash_antipode",
                    w,
                    pair.and_then(|p| Ok((smash_antipode(&p)?, h.antipode(&a)?))),
                ),
            ]
            .map(|e| e.with_context("pbg"))
        })
        .collect()
}

/// `S(B) = Bg`, `−gB` and `g·S̲(B)` all reduce to the same element.
pub fn antipode_forms_agree(max_index: u32) -> Report {
    let pbg = AlgebraContext::paraboson_g();
    let g = Element::<Scalar>::generator(Generator::G);
    ladder_alphabet(max_index)
        .into_iter()
        .flat_map(|b| {
            let bb = Element::generator(b);
            let direct = BosonisedG.antipode(&bb);
            let forms = [
                ("antipode_form_minus_gb", -(&g * &bb)),
                ("antipode_form_g_super", &g * &SuperParaboson.antipode(&bb).unwrap_or_default()),
            ];
            forms.map(|(name, form)| {
                CheckEntry::from_result(
                    name,
                    Word::letter(b),
                    direct.clone().and_then(|d| Ok((d, pbg.normal_form(&form)?))),
                )
                .with_context("pbg")
            })
        })
        .collect()
}

/// Slot-wise conjugation `R t R⁻¹` (`R_g⁻¹ = R_g`).
fn conjugate_by_r<C: Coefficient>(t: &TensorElement<C>) -> Result<TensorElement<C>, RewriteError> {
    let ctx = AlgebraContext::paraboson_g();
    let r = RMatrixCZ2.element::<C>();
    r.multiply(t, Braiding::Trivial, &ctx)?.multiply(&r, Braiding::Trivial, &ctx)
}

/// Embed `R_g` into legs `(i, j)` of a triple tensor.
fn r_legs<C: Coefficient>(i: usize, j: usize) -> TripleTensor<C> {
    RMatrixCZ2
        .legs::<C>()
        .into_iter()
        .map(|(a, b, c)| {
            let mut slots = [Word::unit(), Word::unit(), Word::unit()];
            slots[i] = a;
            slots[j] = b;
            (slots, c)
        })
        .collect()
}

/// `R_g Δ(w) R_g⁻¹ = Δᵒᵖ(w)` on words of length `<= max_len`, and the two
/// hexagon identities `(Δ⊗id)R = R₁₃R₂₃`, `(id⊗Δ)R = R₁₃R₁₂`.
pub fn check_quasitriangularity_g(max_len: usize, max_index: u32) -> Report {
    let h = BosonisedG;
    let ctx = h.context();
    let mut report: Report = words_up_to(&h.alphabet(max_index), max_len)
        .par_iter()
        .map(|w| {
            let delta = h.coproduct(&Element::<Scalar>::from_word(w.clone()));
            CheckEntry::from_result("r_conjugation", w, delta.and_then(|d| Ok((conjugate_by_r(&d)?, d.flip()))))
                .with_context("pbg")
        })
        .collect();
    let r = RMatrixCZ2.element::<Scalar>();
    let hexagons = [
        ("hexagon_left", h.coproduct_left(&r), r_legs(0, 2).multiply(&r_legs(1, 2), Braiding::Trivial, &ctx)),
        ("hexagon_right", h.coproduct_right(&r), r_legs(0, 2).multiply(&r_legs(0, 1), Braiding::Trivial, &ctx)),
    ];
    for (name, lhs, rhs) in hexagons {
        report.push(CheckEntry::from_result(name, "R_g", lhs.and_then(|l| Ok((l, rhs?)))).with_context("pbg"));
    }
    report.push(
        CheckEntry::from_result(
            "r_matrix_square",
            "R_g",
            RMatrixCZ2.square::<Scalar>().map(|s| (s, TensorElement::one())),
        )
        .with_context("pbg"),
    );
    report
}

/// `g w g⁻¹ = (−1)^{|w|} w` in `P_B(g)` and `K⁺ w K⁻ = (−1)^{|w|} w` in
/// `P_B(K±)`, for every ladder word of length `<= max_len`.
pub fn check_inner_grading(kind: AlgebraKind, max_len: usize, max_index: u32) -> Report {
    let (ctx, left, right) = match kind {
        AlgebraKind::ParabosonG => (AlgebraContext::paraboson_g(), Generator::G, Generator::G),
        AlgebraKind::ParabosonK => (AlgebraContext::paraboson_k(), Generator::KPlus, Generator::KMinus),
        other => panic!("no grading element in {other}"),
    };
    let (l, r) = (Element::<Scalar>::generator(left), Element::generator(right));
    words_up_to(&ladder_alphabet(max_index), max_len)
        .par_iter()
        .map(|w| {
            let a = Element::from_word(w.clone());
            CheckEntry::from_result(
                "inner_grading",
                w,
                ctx.normal_form(&(&(&l * &a) * &r)).and_then(|lhs| Ok((lhs, ctx.normal_form(&a.g_action())?))),
            )
            .with_context(kind.short_name())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braided_hopf::check_hopf_axioms;
    use crate::scalar::integer;
    use crate::terms::parse_element;

    fn el(s: &str) -> Element<Scalar> {
        parse_element(s).unwrap()
    }

    fn t(parts: &[(&str, &str, i64)]) -> TensorElement<Scalar> {
        let mut out = TensorElement::zero();
        for &(a, b, c) in parts {
            out.add_scaled(&TensorElement::product_of([&el(a), &el(b)]), &integer(c));
        }
        out
    }

    #[test]
    fn coaction_examples() {
        assert_eq!(cz2_coaction(&el("B+1")).unwrap(), t(&[("g", "B+1", 1)]));
        assert_eq!(cz2_coaction(&el("I")).unwrap(), t(&[("I", "I", 1)]));
        assert_eq!(cz2_coaction(&el("B+1 B-2")).unwrap(), t(&[("I", "B+1 B-2", 1)]));
        assert!(matches!(cz2_coaction(&el("I + B+1")), Err(BosonizationError::InhomogeneousInput(_))));
    }

    #[test]
    fn smash_multiply_examples() {
        let g = t(&[("I", "g", 1)]);
        let b1 = t(&[("B+1", "I", 1)]);
        let b2 = t(&[("B+2", "I", 1)]);
        assert_eq!(smash_multiply(&g, &b1).unwrap(), t(&[("B+1", "g", -1)]));
        assert_eq!(smash_multiply(&b1, &b2).unwrap(), t(&[("B+1 B+2", "I", 1)]));
        assert_eq!(smash_multiply(&g, &g).unwrap(), t(&[("I", "I", 1)]));
        assert!(smash_multiply(&t(&[("I", "B+1", 1)]), &g).is_err());
    }

    #[test]
    fn explicit_structure_examples() {
        let h = BosonisedG;
        assert_eq!(h.coproduct(&el("B+1")).unwrap(), t(&[("B+1", "I", 1), ("g", "B+1", 1)]));
        assert_eq!(h.coproduct(&el("g")).unwrap(), t(&[("g", "g", 1)]));
        let pbg = AlgebraContext::paraboson_g();
        assert_eq!(
            h.coproduct(&el("g B+1")).unwrap(),
            t(&[("g B+1", "g", 1), ("I", "g B+1", 1)]).reduce(&pbg).unwrap()
        );
        assert_eq!(h.antipode(&el("B+1")).unwrap(), el("B+1 g"));
        assert_eq!(h.antipode(&el("g")).unwrap(), el("g"));
        assert_eq!(h.antipode(&el("g B+1")).unwrap(), el("B+1"));
    }

    #[test]
    fn k_structure_examples() {
        assert_eq!(k_coproduct(&el("B-2")).unwrap(), t(&[("B-2", "I", 1), ("K-", "B-2", 1)]));
        assert_eq!(k_antipode(&el("K+")).unwrap(), el("K-"));
        assert_eq!(k_counit(&el("K+ K+ + B+1")).unwrap(), integer(1));
        assert!(k_coproduct(&el("K+ K- - I")).unwrap().is_zero());
        // Δ of each anticommutator, computed through its ladder factors
        assert_eq!(k_coproduct(&el("E(1+,1+)")).unwrap(), t(&[("E(1+,1+)", "I", 1), ("K+ K+", "E(1+,1+)", 1)]));
        assert_eq!(k_coproduct(&el("E(1+,1-)")).unwrap(), t(&[("E(1+,1-)", "I", 1), ("I", "E(1+,1-)", 1)]));
    }

    #[test]
    fn drinfeld_element_is_g() {
        assert_eq!(drinfeld_element::<Scalar>().unwrap(), el("g"));
    }

    #[test]
    fn general_route_on_generators() {
        for src in ["B+1", "g", "B+1 g", "I", "B+1 B-1"] {
            let a = el(src);
            let pair = to_smash_form(&a).unwrap();
            assert_eq!(smash_coproduct(&pair).unwrap(), BosonisedG.coproduct(&a).unwrap(), "{src}");
            assert_eq!(smash_antipode(&pair).unwrap(), BosonisedG.antipode(&a).unwrap(), "{src}");
            assert_eq!(collapse(&pair).unwrap(), AlgebraContext::paraboson_g().normal_form(&a).unwrap());
        }
        assert!(bosonise_from_general(2, 1).all_passed());
    }

    #[test]
    fn antipode_forms() {
        assert!(antipode_forms_agree(2).all_passed());
    }

    #[test]
    fn quasitriangular_on_generators() {
        let r = check_quasitriangularity_g(1, 1);
        assert!(r.all_passed(), "{:?}", r.failures().next());
        let d = BosonisedG.coproduct(&el("B+1")).unwrap();
        assert_eq!(conjugate_by_r(&d).unwrap(), t(&[("I", "B+1", 1), ("B+1", "g", 1)]));
    }

    #[test]
    fn short_words_pass_both_suites() {
        for r in [check_hopf_axioms(&BosonisedG, 2, 1), check_hopf_axioms(&KExtension, 2, 1)] {
            assert!(r.all_passed(), "{:?}", r.failures().next());
        }
    }

    #[test]
    fn grading_is_inner() {
        assert!(check_inner_grading(AlgebraKind::ParabosonG, 3, 1).all_passed());
        assert!(check_inner_grading(AlgebraKind::ParabosonK, 3, 1).all_passed());
    }
}
