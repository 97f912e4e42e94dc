//! Hopf structures given by their values on generators, and the super-Hopf
//! structure of the paraboson algebra.
//!
//! A [`HopfStructure`] fixes Δ, ε and S on single letters; the maps on
//! words follow by multiplicativity. `E` letters are expanded into ladder
//! letters first, so only true generators need letter data.

use rayon::prelude::*;

use crate::report::{CheckEntry, Report};
use crate::rewriting::{expand_e_word, ladder_alphabet, paraboson_relations, AlgebraContext, RewriteError};
use crate::sampling::words_up_to;
use crate::scalar::{Coefficient, Scalar};
use crate::tensor::{Braiding, TensorElement, TripleTensor};
use crate::terms::{Element, Generator, Word};

/// Structure maps determined by their values on generators.
pub trait HopfStructure: Sync {
    /// Algebra the maps land in.
    fn context(&self) -> AlgebraContext;

    /// Koszul for super-Hopf algebras, Trivial for ordinary ones.
    fn braiding(&self) -> Braiding;

    /// Short label used in reports.
    fn label(&self) -> &'static str;

    /// Δ on a generator (never called with an `E` letter).
    fn letter_coproduct<C: Coefficient>(&self, g: Generator) -> TensorElement<C>;

    /// S on a generator (never called with an `E` letter).
    fn letter_antipode<C: Coefficient>(&self, g: Generator) -> Element<C>;

    /// Generators over modes `1..=max_index`.
    fn alphabet(&self, max_index: u32) -> Vec<Generator>;

    /// Defining relations over modes `1..=max_index`, with labels.
    fn relations(&self, max_index: u32) -> Vec<(String, Element<Scalar>)>;

    /// ε on a generator: group-likes map to 1, ladder letters to 0.
    fn letter_counit<C: Coefficient>(&self, g: Generator) -> C {
        if g.is_group_like() {
            C::one()
        } else {
            C::zero()
        }
    }

    fn coproduct<C: Coefficient>(&self, a: &Element<C>) -> Result<TensorElement<C>, RewriteError> {
        let ctx = self.context();
        ctx.check_alphabet(a)?;
        let mut out = TensorElement::zero();
        for (w, c) in a.terms() {
            out.add_scaled(&self.coproduct_word(w)?, c);
        }
        Ok(out)
    }

    fn coproduct_word<C: Coefficient>(&self, w: &Word) -> Result<TensorElement<C>, RewriteError> {
        let ctx = self.context();
        let mut out = TensorElement::zero();
        for (v, c) in expand_e_word::<C>(w).terms() {
            let mut acc = TensorElement::one();
            for &g in v.letters() {
                acc = acc.multiply(&self.letter_coproduct(g), self.braiding(), &ctx)?;
            }
            out.add_scaled(&acc, c);
        }
        Ok(out)
    }

    fn counit<C: Coefficient>(&self, a: &Element<C>) -> Result<C, RewriteError> {
        self.context().check_alphabet(a)?;
        let mut total = C::zero();
        for (w, c) in a.terms() {
            let mut value = C::one();
            for &g in w.letters() {
                if matches!(g, Generator::E(_)) {
                    value = C::zero();
                    break;
                }
                value = value * self.letter_counit::<C>(g);
            }
            total = total + value * c.clone();
        }
        Ok(total)
    }

    /// Anti-homomorphic extension; for Koszul braiding every transposition
    /// of two odd letters contributes a sign.
    fn antipode<C: Coefficient>(&self, a: &Element<C>) -> Result<Element<C>, RewriteError> {
        let ctx = self.context();
        ctx.check_alphabet(a)?;
        let mut raw = Element::zero();
        for (w, c) in a.terms() {
            for (v, d) in expand_e_word::<C>(w).terms() {
                let mut acc = Element::one();
                for &g in v.letters().iter().rev() {
                    acc = acc.concat_multiply(&self.letter_antipode(g));
                }
                let odd = v.odd_count();
                let mut coeff = c.clone() * d.clone();
                if self.braiding() == Braiding::Koszul && (odd * odd.saturating_sub(1) / 2) % 2 == 1 {
                    coeff = -coeff;
                }
                raw.add_scaled(&acc, &coeff);
            }
        }
        ctx.normal_form(&raw)
    }

    /// `(Δ⊗id)t`
    fn coproduct_left<C: Coefficient>(&self, t: &TensorElement<C>) -> Result<TripleTensor<C>, RewriteError> {
        let mut out = TripleTensor::zero();
        for ([a, b], c) in t.terms() {
            for ([a1, a2], d) in self.coproduct_word::<C>(a)?.terms() {
                out.add_term([a1.clone(), a2.clone(), b.clone()], c.clone() * d.clone());
            }
        }
        Ok(out)
    }

    /// `(id⊗Δ)t`
    fn coproduct_right<C: Coefficient>(&self, t: &TensorElement<C>) -> Result<TripleTensor<C>, RewriteError> {
        let mut out = TripleTensor::zero();
        for ([a, b], c) in t.terms() {
            for ([b1, b2], d) in self.coproduct_word::<C>(b)?.terms() {
                out.add_term([a.clone(), b1.clone(), b2.clone()], c.clone() * d.clone());
            }
        }
        Ok(out)
    }

    /// `m(S⊗id)t` (`left = true`) or `m(id⊗S)t`.
    fn antipode_convolution<C: Coefficient>(
        &self,
        t: &TensorElement<C>,
        left: bool,
    ) -> Result<Element<C>, RewriteError> {
        let mut out = Element::zero();
        for ([a, b], c) in t.terms() {
            let (x, y) = if left {
                (self.antipode(&Element::from_word(a.clone()))?, Element::from_word(b.clone()))
            } else {
                (Element::from_word(a.clone()), self.antipode(&Element::from_word(b.clone()))?)
            };
            out.add_scaled(&x.concat_multiply(&y), c);
        }
        self.context().normal_form(&out)
    }

    /// `(ε⊗id)t` (`left = true`) or `(id⊗ε)t`.
    fn counit_contraction<C: Coefficient>(&self, t: &TensorElement<C>, left: bool) -> Result<Element<C>, RewriteError> {
        let mut out = Element::zero();
        for ([a, b], c) in t.terms() {
            let (scalar_slot, kept) = if left { (a, b) } else { (b, a) };
            let e = self.counit(&Element::<C>::from_word(scalar_slot.clone()))?;
            out.add_term(kept.clone(), e * c.clone());
        }
        Ok(out)
    }

    /// Structure-specific properties checked on each word.
    fn extra_checks(&self, _w: &Word) -> Vec<CheckEntry> {
        Vec::new()
    }
}

/// Core Hopf axioms on one word: coassociativity, both counit laws, both
/// antipode laws, and independence of Δ from the chosen representative.
pub fn word_axioms<H: HopfStructure>(h: &H, w: &Word) -> Vec<CheckEntry> {
    let ctx = h.context();
    let a = Element::<Scalar>::from_word(w.clone());
    let delta = match h.coproduct(&a) {
        Ok(d) => d,
        Err(e) => return vec![CheckEntry::error("coproduct", w, e)],
    };
    let nf = ctx.normal_form(&a);
    let mut out = vec![
        CheckEntry::from_result(
            "coassociativity",
            w,
            h.coproduct_left(&delta).and_then(|l| Ok((l, h.coproduct_right(&delta)?))),
        ),
        CheckEntry::from_result(
            "counit_left",
            w,
            h.counit_contraction(&delta, true).and_then(|l| Ok((l, nf.clone()?))),
        ),
        CheckEntry::from_result(
            "counit_right",
            w,
            h.counit_contraction(&delta, false).and_then(|l| Ok((l, nf.clone()?))),
        ),
    ];
    let unit_part = h.counit(&a).map(Element::scalar);
    for (name, left) in [("antipode_left", true), ("antipode_right", false)] {
        out.push(CheckEntry::from_result(
            name,
            w,
            h.antipode_convolution(&delta, left).and_then(|l| Ok((l, unit_part.clone()?))),
        ));
    }
    out.push(CheckEntry::from_result(
        "coproduct_well_defined",
        w,
        nf.and_then(|n| Ok((h.coproduct(&n)?, delta.clone()))),
    ));
    out.extend(h.extra_checks(w));
    out
}

/// Δ, S and ε applied to each defining relation must give zero.
pub fn relation_axioms<H: HopfStructure>(h: &H, max_index: u32) -> Report {
    let rels = h.relations(max_index);
    let zero_t = TensorElement::<Scalar>::zero();
    let zero_e = Element::<Scalar>::zero();
    rels.par_iter()
        .flat_map_iter(|(label, r)| {
            [
                CheckEntry::from_result("ideal_coproduct", label, h.coproduct(r).map(|d| (d, zero_t.clone()))),
                CheckEntry::from_result("ideal_antipode", label, h.antipode(r).map(|s| (s, zero_e.clone()))),
                CheckEntry::from_result(
                    "ideal_counit",
                    label,
                    h.counit(r).map(|e| (Element::scalar(e), zero_e.clone())),
                ),
                CheckEntry::from_result(
                    "ideal_reduction",
                    label,
                    h.context().normal_form(r).map(|n| (n, zero_e.clone())),
                ),
            ]
        })
        .collect()
}

/// Every word of length `<= max_len` over the structure's alphabet, plus
/// the relation checks.
pub fn check_hopf_axioms<H: HopfStructure>(h: &H, max_len: usize, max_index: u32) -> Report {
    let words = words_up_to(&h.alphabet(max_index), max_len);
    let mut report: Report = words.par_iter().flat_map_iter(|w| word_axioms(h, w)).collect();
    report.extend(relation_axioms(h, max_index));
    report
}

/// The paraboson algebra as a super-Hopf algebra: ladder letters primitive,
/// `ε(B) = 0`, `S(B) = −B`, Koszul signs throughout.
#[derive(Clone, Copy, Debug, Default)]
pub struct SuperParaboson;

impl HopfStructure for SuperParaboson {
    fn context(&self) -> AlgebraContext {
        AlgebraContext::paraboson()
    }

    fn braiding(&self) -> Braiding {
        Braiding::Koszul
    }

    fn label(&self) -> &'static str {
        "pb"
    }

    fn letter_coproduct<C: Coefficient>(&self, g: Generator) -> TensorElement<C> {
        let x = Word::letter(g);
        [([Word::unit(), x.clone()], C::one()), ([x, Word::unit()], C::one())].into_iter().collect()
    }

    fn letter_antipode<C: Coefficient>(&self, g: Generator) -> Element<C> {
        -Element::generator(g)
    }

    fn alphabet(&self, max_index: u32) -> Vec<Generator> {
        ladder_alphabet(max_index)
    }

    fn relations(&self, max_index: u32) -> Vec<(String, Element<Scalar>)> {
        paraboson_relations(max_index).into_iter().map(|((x, y, z), r)| (format!("[{{{x}, {y}}}, {z}]"), r)).collect()
    }

    fn extra_checks(&self, w: &Word) -> Vec<CheckEntry> {
        let a = Element::<Scalar>::from_word(w.clone());
        let ctx = self.context();
        let delta = match self.coproduct(&a) {
            Ok(d) => d,
            Err(e) => return vec![CheckEntry::error("coproduct", w, e)],
        };
        let s = self.antipode(&a);
        vec![
            CheckEntry::compare("super_cocommutativity", w, &delta.braid(), &delta),
            CheckEntry::from_result(
                "antipode_involution",
                w,
                s.clone().and_then(|s| Ok((self.antipode(&s)?, ctx.normal_form(&a)?))),
            ),
            CheckEntry::from_result(
                "counit_antipode",
                w,
                s.clone().and_then(|s| Ok((Element::scalar(self.counit(&s)?), Element::scalar(self.counit(&a)?)))),
            ),
            CheckEntry::from_result(
                "coproduct_antipode",
                w,
                s.and_then(|s| {
                    let lhs = self.coproduct(&s)?;
                    let rhs = delta.braid().map_both(
                        |x| self.antipode(&Element::from_word(x.clone())),
                        |y| self.antipode(&Element::from_word(y.clone())),
                    )?;
                    Ok((lhs, rhs))
                }),
            ),
        ]
    }
}

/// `Ψ(v⊗w) = (−1)^{|v||w|} w⊗v`, extended bilinearly over homogeneous parts.
pub fn braiding<C: Coefficient>(v: &Element<C>, w: &Element<C>) -> TensorElement<C> {
    TensorElement::product_of([v, w]).braid()
}

/// `(a⊗b)(c⊗d) = (−1)^{|b||c|} ac⊗bd`, slots reduced in `ctx`.
pub fn braided_multiply<C: Coefficient>(
    x: &TensorElement<C>,
    y: &TensorElement<C>,
    ctx: &AlgebraContext,
) -> Result<TensorElement<C>, RewriteError> {
    x.multiply(y, Braiding::Koszul, ctx)
}

/// The non-trivial R-matrix of the group algebra of Z₂:
/// `R_g = ½(1⊗1 + 1⊗g + g⊗1 − g⊗g)`.
#[derive(Clone, Copy, Debug, Default)]
pub struct RMatrixCZ2;

impl RMatrixCZ2 {
    pub fn element<C: Coefficient>(&self) -> TensorElement<C> {
        let (one, g) = (Word::unit(), Word::letter(Generator::G));
        let half = C::from_ratio(1, 2);
        [
            ([one.clone(), one.clone()], half.clone()),
            ([one.clone(), g.clone()], half.clone()),
            ([g.clone(), one], half.clone()),
            ([g.clone(), g], -half),
        ]
        .into_iter()
        .collect()
    }

    /// Pairs `(R^(1), R^(2))` with coefficients.
    pub fn legs<C: Coefficient>(&self) -> Vec<(Word, Word, C)> {
        self.element::<C>().terms().map(|([a, b], c)| (a.clone(), b.clone(), c.clone())).collect()
    }

    /// `R_g · R_g`, reduced; equals `1⊗1`.
    pub fn square<C: Coefficient>(&self) -> Result<TensorElement<C>, RewriteError> {
        let r = self.element::<C>();
        r.multiply(&r, Braiding::Trivial, &AlgebraContext::paraboson_g())
    }
}
