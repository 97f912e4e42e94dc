//! Normal forms in the quotient algebras.
//!
//! Each [`AlgebraKind`] selects a terminating rewrite system over adjacent
//! letter pairs. Termination: every rule strictly decreases the key
//! `(odd letter count, word length, inversions w.r.t. the letter order)`,
//! compared lexicographically (see [`term_order_key`]).
//!
//! The paraboson quotient is handled on the extended alphabet of ladder
//! letters (odd) and anticommutator symbols `E` (even). Normal words are
//! `E…E B…B T` with the `E` letters non-decreasing, the ladder letters
//! strictly increasing and `T` a tail of group-like letters.

mod rules;

use std::collections::HashMap;
use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::scalar::Coefficient;
use crate::terms::{Element, Generator, Ladder, Sign, Word};

pub use rules::{anticommutators, derive_ee_brackets, e_b_bracket, e_e_bracket, rule_table, RewriteRule};

/// Which quotient of the free algebra is in force.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AlgebraKind {
    /// No relations.
    Free,
    /// Canonical commutation relations.
    Boson,
    /// The trilinear paraboson relations.
    #[serde(rename = "pb")]
    Paraboson,
    /// Paraboson extended by the grading involution `g`.
    #[serde(rename = "pbg")]
    ParabosonG,
    /// Paraboson extended by the group-likes `K⁺`, `K⁻`.
    #[serde(rename = "pbk")]
    ParabosonK,
}

impl AlgebraKind {
    pub const ALL: [AlgebraKind; 5] = [
        AlgebraKind::Free,
        AlgebraKind::Boson,
        AlgebraKind::Paraboson,
        AlgebraKind::ParabosonG,
        AlgebraKind::ParabosonK,
    ];

    /// Short name used on the command line and in reports.
    pub fn short_name(self) -> &'static str {
        match self {
            AlgebraKind::Free => "free",
            AlgebraKind::Boson => "boson",
            AlgebraKind::Paraboson => "pb",
            AlgebraKind::ParabosonG => "pbg",
            AlgebraKind::ParabosonK => "pbk",
        }
    }

    pub fn from_short_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.short_name() == s)
    }

    /// Whether `g` may appear in words of this algebra.
    pub fn admits(self, g: &Generator) -> bool {
        match self {
            AlgebraKind::Free => true,
            AlgebraKind::Boson => matches!(g, Generator::B(_)),
            AlgebraKind::Paraboson => matches!(g, Generator::B(_) | Generator::E(_)),
            AlgebraKind::ParabosonG => {
                matches!(g, Generator::B(_) | Generator::E(_) | Generator::G)
            }
            AlgebraKind::ParabosonK => {
                matches!(g, Generator::B(_) | Generator::E(_) | Generator::KPlus | Generator::KMinus)
            }
        }
    }
}

impl fmt::Display for AlgebraKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.short_name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RewriteError {
    #[error("letter {letter} is not in the {context} alphabet")]
    ForeignLetter { letter: Generator, context: AlgebraKind },
    #[error("bracket [{left}, {right}] does not close on the E symbols: {detail}")]
    ClosureFailure { left: Generator, right: Generator, detail: String },
}

/// Per-call memo of word normal forms.
pub type WordCache<C> = HashMap<Word, Element<C>>;

/// A rewriting system for one algebra. Immutable and freely shareable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AlgebraContext {
    kind: AlgebraKind,
}

impl AlgebraContext {
    pub fn new(kind: AlgebraKind) -> Self {
        AlgebraContext { kind }
    }

    pub fn free() -> Self {
        Self::new(AlgebraKind::Free)
    }

    pub fn boson() -> Self {
        Self::new(AlgebraKind::Boson)
    }

    pub fn paraboson() -> Self {
        Self::new(AlgebraKind::Paraboson)
    }

    pub fn paraboson_g() -> Self {
        Self::new(AlgebraKind::ParabosonG)
    }

    pub fn paraboson_k() -> Self {
        Self::new(AlgebraKind::ParabosonK)
    }

    pub fn kind(&self) -> AlgebraKind {
        self.kind
    }

    pub fn check_alphabet<C: Coefficient>(&self, a: &Element<C>) -> Result<(), RewriteError> {
        match a.letters().find(|g| !self.kind.admits(g)) {
            Some(&letter) => Err(RewriteError::ForeignLetter { letter, context: self.kind }),
            None => Ok(()),
        }
    }

    pub fn word_cache<C: Coefficient>(&self) -> WordCache<C> {
        HashMap::new()
    }

    /// The canonical representative of `a` in this algebra.
    pub fn normal_form<C: Coefficient>(&self, a: &Element<C>) -> Result<Element<C>, RewriteError> {
        let mut cache = self.word_cache();
        self.normal_form_cached(a, &mut cache)
    }

    pub fn normal_form_cached<C: Coefficient>(
        &self,
        a: &Element<C>,
        cache: &mut WordCache<C>,
    ) -> Result<Element<C>, RewriteError> {
        let mut out = Element::zero();
        for (w, c) in a.terms() {
            out.add_scaled(&self.normal_form_word_cached(w, cache)?, c);
        }
        Ok(out)
    }

    pub fn normal_form_word<C: Coefficient>(&self, w: &Word) -> Result<Element<C>, RewriteError> {
        self.normal_form_word_cached(w, &mut self.word_cache())
    }

    /// Leftmost-first reduction of a single word, memoised in `cache`.
    pub fn normal_form_word_cached<C: Coefficient>(
        &self,
        w: &Word,
        cache: &mut WordCache<C>,
    ) -> Result<Element<C>, RewriteError> {
        if let Some(hit) = cache.get(w) {
            return Ok(hit.clone());
        }
        if let Some(&letter) = w.letters().iter().find(|g| !self.kind.admits(g)) {
            return Err(RewriteError::ForeignLetter { letter, context: self.kind });
        }
        let result = match self.first_redex(w)? {
            None => Element::from_word(w.clone()),
            Some((at, rep)) => {
                let mut acc = Element::zero();
                for (middle, c) in rep {
                    let next = w.splice(at, 2, &middle);
                    let sub = self.normal_form_word_cached(&next, cache)?;
                    acc.add_scaled(&sub, &rational::<C>(c));
                }
                acc
            }
        };
        cache.insert(w.clone(), result.clone());
        Ok(result)
    }

    fn first_redex(&self, w: &Word) -> Result<Option<(usize, rules::Replacement)>, RewriteError> {
        let ls = w.letters();
        for at in 0..ls.len().saturating_sub(1) {
            if let Some(rep) = rules::replacement(self.kind, ls[at], ls[at + 1])? {
                return Ok(Some((at, rep)));
            }
        }
        Ok(None)
    }

    /// Positions `p` at which the pair `w[p] w[p+1]` is reducible.
    pub fn redex_positions(&self, w: &Word) -> Result<Vec<usize>, RewriteError> {
        let ls = w.letters();
        let mut out = Vec::new();
        for at in 0..ls.len().saturating_sub(1) {
            if rules::replacement(self.kind, ls[at], ls[at + 1])?.is_some() {
                out.push(at);
            }
        }
        Ok(out)
    }

    /// One rewriting step at position `at`; `None` if that pair is normal.
    pub fn rewrite_at<C: Coefficient>(&self, w: &Word, at: usize) -> Result<Option<Element<C>>, RewriteError> {
        let ls = w.letters();
        if at + 1 >= ls.len() {
            return Ok(None);
        }
        Ok(rules::replacement(self.kind, ls[at], ls[at + 1])?
            .map(|rep| rep.into_iter().map(|(middle, c)| (w.splice(at, 2, &middle), rational::<C>(c))).collect()))
    }

    /// Normal form reached by choosing the redex uniformly at random at
    /// every step (no memoisation). Used as a confluence witness.
    pub fn normal_form_randomized<C: Coefficient, R: Rng + ?Sized>(
        &self,
        a: &Element<C>,
        rng: &mut R,
    ) -> Result<Element<C>, RewriteError> {
        self.check_alphabet(a)?;
        let mut pending: Vec<(Word, C)> = a.terms().map(|(w, c)| (w.clone(), c.clone())).collect();
        let mut out = Element::zero();
        while let Some((w, c)) = pending.pop() {
            let positions = self.redex_positions(&w)?;
            if positions.is_empty() {
                out.add_term(w, c);
                continue;
            }
            let at = positions[rng.random_range(0..positions.len())];
            let step: Element<C> = self.rewrite_at(&w, at)?.expect("redex position");
            for (v, d) in step.terms() {
                pending.push((v.clone(), d.clone() * c.clone()));
            }
        }
        Ok(out)
    }

    pub fn is_normal(&self, w: &Word) -> Result<bool, RewriteError> {
        Ok(self.first_redex(w)?.is_none())
    }
}

fn rational<C: Coefficient>(c: num_rational::Rational64) -> C {
    C::from_ratio(*c.numer(), *c.denom())
}

/// Termination key: `(odd letters, length, inversions)`.
pub fn term_order_key(w: &Word) -> (usize, usize, usize) {
    let ls = w.letters();
    let mut inversions = 0;
    for i in 0..ls.len() {
        for j in i + 1..ls.len() {
            if ls[i] > ls[j] {
                inversions += 1;
            }
        }
    }
    (w.odd_count(), w.len(), inversions)
}

/// Replace every `E(x, y)` by `x y + y x`.
pub fn expand_e<C: Coefficient>(a: &Element<C>) -> Element<C> {
    let mut out = Element::zero();
    for (w, c) in a.terms() {
        out.add_scaled(&expand_e_word(w), c);
    }
    out
}

pub fn expand_e_word<C: Coefficient>(w: &Word) -> Element<C> {
    let mut acc = Element::one();
    for g in w.letters() {
        let factor = match g {
            Generator::E(e) => {
                let (x, y) = (Generator::B(e.first()), Generator::B(e.second()));
                let xy = Element::from_word(Word::from(vec![x, y]));
                let yx = Element::from_word(Word::from(vec![y, x]));
                &xy + &yx
            }
            other => Element::generator(*other),
        };
        acc = acc.concat_multiply(&factor);
    }
    acc
}

/// The replacement map `B_i^± ↦ b_i^±` into the boson algebra, returned in
/// boson normal order.
pub fn phi_replacement<C: Coefficient>(a: &Element<C>) -> Result<Element<C>, RewriteError> {
    let expanded = expand_e(a);
    let boson = AlgebraContext::boson();
    boson.check_alphabet(&expanded)?;
    boson.normal_form(&expanded)
}

/// Ladder letters `B^±_i`, `i = 1..=max_mode`.
pub fn ladder_alphabet(max_mode: u32) -> Vec<Generator> {
    Sign::BOTH.iter().flat_map(|&s| (1..=max_mode).map(move |m| Generator::B(Ladder::new(s, m)))).collect()
}

/// Generators of the algebra (no `E` symbols) over modes `1..=max_mode`.
pub fn generator_alphabet(kind: AlgebraKind, max_mode: u32) -> Vec<Generator> {
    let mut out = ladder_alphabet(max_mode);
    match kind {
        AlgebraKind::ParabosonG => out.push(Generator::G),
        AlgebraKind::ParabosonK => out.extend([Generator::KPlus, Generator::KMinus]),
        AlgebraKind::Free => out.extend([Generator::G, Generator::KPlus, Generator::KMinus]),
        _ => {}
    }
    out
}

/// Generators plus every `E` symbol admitted by the algebra.
pub fn extended_alphabet(kind: AlgebraKind, max_mode: u32) -> Vec<Generator> {
    let mut out: Vec<Generator> = Vec::new();
    if kind.admits(&Generator::e(Ladder::plus(1), Ladder::plus(1))) {
        out.extend(anticommutators(max_mode).into_iter().map(Generator::E));
    }
    out.extend(generator_alphabet(kind, max_mode));
    out
}

/// Generator of the paraboson ideal, written in ladder letters only:
/// `[{B_i^ξ, B_j^η}, B_k^ε] − (ε−η)δ_jk B_i^ξ − (ε−ξ)δ_ik B_j^η`.
pub fn paraboson_relation<C: Coefficient>(x: Ladder, y: Ladder, z: Ladder) -> Element<C> {
    let (bx, by, bz) =
        (Element::generator(Generator::B(x)), Element::generator(Generator::B(y)), Element::generator(Generator::B(z)));
    let anti = &(&bx * &by) + &(&by * &bx);
    let mut out = &(&anti * &bz) - &(&bz * &anti);
    let eps = z.sign.value();
    let c1 = (eps - y.sign.value()) * (y.mode == z.mode) as i64;
    let c2 = (eps - x.sign.value()) * (x.mode == z.mode) as i64;
    out.add_scaled(&bx, &C::from_integer(-c1));
    out.add_scaled(&by, &C::from_integer(-c2));
    out
}

/// Every paraboson ideal generator with modes `1..=max_mode` and all sign
/// choices, labelled `(x, y, z)`.
pub fn paraboson_relations<C: Coefficient>(max_mode: u32) -> Vec<((Ladder, Ladder, Ladder), Element<C>)> {
    let ladders: Vec<Ladder> = ladder_alphabet(max_mode)
        .into_iter()
        .filter_map(|g| match g {
            Generator::B(l) => Some(l),
            _ => None,
        })
        .collect();
    let mut out = Vec::new();
    for &x in &ladders {
        for &y in &ladders {
            for &z in &ladders {
                out.push(((x, y, z), paraboson_relation(x, y, z)));
            }
        }
    }
    out
}

/// Generators of the boson ideal over modes `1..=max_mode`:
/// `[b_i^-, b_j^+] − δ_ij I`, `[b_i^+, b_j^+]`, `[b_i^-, b_j^-]`.
pub fn boson_relations<C: Coefficient>(max_mode: u32) -> Vec<Element<C>> {
    let commutator = |a: Ladder, b: Ladder| {
        let (x, y) = (Element::<C>::generator(Generator::B(a)), Element::generator(Generator::B(b)));
        &(&x * &y) - &(&y * &x)
    };
    let mut out = Vec::new();
    for i in 1..=max_mode {
        for j in 1..=max_mode {
            let mut ccr = commutator(Ladder::minus(i), Ladder::plus(j));
            if i == j {
                ccr.add_term(Word::unit(), -C::one());
            }
            out.push(ccr);
            out.push(commutator(Ladder::plus(i), Ladder::plus(j)));
            out.push(commutator(Ladder::minus(i), Ladder::minus(j)));
        }
    }
    out
}

#[cfg(test)]
mod tests;
