use std::collections::btree_map::{self, BTreeMap, Entry};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use super::generator::Generator;
use super::word::Word;
use crate::scalar::Coefficient;

/// A finite formal linear combination of words.
///
/// Zero coefficients are never stored, so two elements are equal exactly
/// when their term maps are equal.
#[derive(Clone, Debug, PartialEq)]
pub struct Element<C> {
    terms: BTreeMap<Word, C>,
}

impl<C: Coefficient> Default for Element<C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient> Element<C> {
    pub fn zero() -> Self {
        Element { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::from_word(Word::unit())
    }

    pub fn from_word(w: Word) -> Self {
        Self::monomial(C::one(), w)
    }

    pub fn generator(g: Generator) -> Self {
        Self::from_word(Word::letter(g))
    }

    /// `c · I`
    pub fn scalar(c: C) -> Self {
        Self::monomial(c, Word::unit())
    }

    pub fn monomial(c: C, w: Word) -> Self {
        let mut e = Self::zero();
        e.add_term(w, c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> btree_map::Iter<'_, Word, C> {
        self.terms.iter()
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }

    pub fn coefficient(&self, w: &Word) -> C {
        self.terms.get(w).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, w: Word, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().clone() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Element<C>, c: &C) {
        if c.is_zero() {
            return;
        }
        for (w, v) in &other.terms {
            self.add_term(w.clone(), v.clone() * c.clone());
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    /// Free-algebra product: bilinear extension of word concatenation.
    pub fn concat_multiply(&self, other: &Element<C>) -> Self {
        let mut out = Self::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(v), a.clone() * b.clone());
            }
        }
        out
    }

    /// Split into `(even, odd)` homogeneous parts.
    pub fn parity_decompose(&self) -> (Self, Self) {
        let mut even = Self::zero();
        let mut odd = Self::zero();
        for (w, c) in &self.terms {
            let part = if w.parity() == 0 { &mut even } else { &mut odd };
            part.add_term(w.clone(), c.clone());
        }
        (even, odd)
    }

    /// `g ▷ a = (-1)^{|a|} a`: fixes the even part and negates the odd part.
    pub fn g_action(&self) -> Self {
        self.map_coefficients(|w, c| if w.parity() == 0 { c.clone() } else { -c.clone() })
    }

    /// `Some(parity)` when every word has the same parity (zero counts as even).
    pub fn homogeneous_parity(&self) -> Option<u8> {
        let mut parities = self.terms.keys().map(Word::parity);
        match parities.next() {
            None => Some(0),
            Some(p) => parities.all(|q| q == p).then_some(p),
        }
    }

    pub fn map_coefficients(&self, mut f: impl FnMut(&Word, &C) -> C) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(w, c));
        }
        out
    }

    /// Linear extension of a word-to-element map.
    pub fn map_words<E>(&self, mut f: impl FnMut(&Word) -> Result<Element<C>, E>) -> Result<Self, E> {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            out.add_scaled(&f(w)?, c);
        }
        Ok(out)
    }

    pub fn letters(&self) -> impl Iterator<Item = &Generator> {
        self.terms.keys().flat_map(|w| w.letters().iter())
    }

    /// Coefficient of the unit word.
    pub fn constant_term(&self) -> C {
        self.coefficient(&Word::unit())
    }
}

impl<C: Coefficient> FromIterator<(Word, C)> for Element<C> {
    fn from_iter<I: IntoIterator<Item = (Word, C)>>(iter: I) -> Self {
        let mut e = Self::zero();
        for (w, c) in iter {
            e.add_term(w, c);
        }
        e
    }
}

impl<C: Coefficient> From<Generator> for Element<C> {
    fn from(g: Generator) -> Self {
        Element::generator(g)
    }
}

impl<C: Coefficient> From<Word> for Element<C> {
    fn from(w: Word) -> Self {
        Element::from_word(w)
    }
}

impl<C: Coefficient> AddAssign<&Element<C>> for Element<C> {
    fn add_assign(&mut self, rhs: &Element<C>) {
        for (w, c) in &rhs.terms {
            self.add_term(w.clone(), c.clone());
        }
    }
}

impl<C: Coefficient> AddAssign for Element<C> {
    fn add_assign(&mut self, rhs: Element<C>) {
        for (w, c) in rhs.terms {
            self.add_term(w, c);
        }
    }
}

impl<C: Coefficient> SubAssign<&Element<C>> for Element<C> {
    fn sub_assign(&mut self, rhs: &Element<C>) {
        for (w, c) in &rhs.terms {
            self.add_term(w.clone(), -c.clone());
        }
    }
}

impl<C: Coefficient> Add for Element<C> {
    type Output = Element<C>;
    fn add(mut self, rhs: Element<C>) -> Element<C> {
        self += rhs;
        self
    }
}

impl<C: Coefficient> Add for &Element<C> {
    type Output = Element<C>;
    fn add(self, rhs: &Element<C>) -> Element<C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<C: Coefficient> Sub for Element<C> {
    type Output = Element<C>;
    fn sub(mut self, rhs: Element<C>) -> Element<C> {
        self -= &rhs;
        self
    }
}

impl<C: Coefficient> Sub for &Element<C> {
    type Output = Element<C>;
    fn sub(self, rhs: &Element<C>) -> Element<C> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<C: Coefficient> Neg for Element<C> {
    type Output = Element<C>;
    fn neg(self) -> Element<C> {
        self.map_coefficients(|_, c| -c.clone())
    }
}

impl<C: Coefficient> Neg for &Element<C> {
    type Output = Element<C>;
    fn neg(self) -> Element<C> {
        self.map_coefficients(|_, c| -c.clone())
    }
}

impl<C: Coefficient> Mul for Element<C> {
    type Output = Element<C>;
    fn mul(self, rhs: Element<C>) -> Element<C> {
        self.concat_multiply(&rhs)
    }
}

impl<C: Coefficient> Mul for &Element<C> {
    type Output = Element<C>;
    fn mul(self, rhs: &Element<C>) -> Element<C> {
        self.concat_multiply(rhs)
    }
}

/// Renders a sum of `(coefficient, body)` pairs in the expression grammar.
pub(crate) fn render_sum<'a, C: Coefficient>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a C, String)>,
) -> fmt::Result {
    let mut first = true;
    for (c, body) in terms {
        let (sep, shown) = if first {
            ("", c.clone())
        } else if c.is_negative_real() {
            (" - ", -c.clone())
        } else {
            (" + ", c.clone())
        };
        f.write_str(sep)?;
        if first && c.is_negative_real() {
            // leading sign stays attached: "-1 B+1"
            write!(f, "{} {body}", c.render())?;
        } else if shown.is_one() {
            f.write_str(&body)?;
        } else {
            write!(f, "{} {body}", shown.render())?;
        }
        first = false;
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl<C: Coefficient> fmt::Display for Element<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // highest degree first, so the unit term comes last
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(u, _), (v, _)| v.len().cmp(&u.len()).then_with(|| u.cmp(v)));
        render_sum(f, terms.into_iter().map(|(w, c)| (c, w.to_string())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{integer, Scalar};

    type El = Element<Scalar>;

    fn bp(i: u32) -> El {
        El::generator(Generator::b_plus(i))
    }

    fn bm(i: u32) -> El {
        El::generator(Generator::b_minus(i))
    }

    #[test]
    fn additive_identity_inverse_and_collection() {
        assert_eq!(&bp(1) + &El::zero(), bp(1));
        assert!((&bp(1) + &bp(1).scale(&integer(-1))).is_zero());
        assert_eq!(bp(1).scale(&integer(2)) + bp(1).scale(&integer(3)), bp(1).scale(&integer(5)));
    }

    #[test]
    fn concatenation_examples() {
        let w = &bp(1) * &bm(2);
        assert_eq!(w.to_string(), "B+1 B-2");
        assert_eq!(&El::one() * &w, w);
        let lhs = &(&bp(1) + &bm(1)) * &bp(2);
        assert_eq!(lhs, &(&bp(1) * &bp(2)) + &(&bm(1) * &bp(2)));
    }

    #[test]
    fn parity_decomposition_examples() {
        assert_eq!(bp(1).parity_decompose(), (El::zero(), bp(1)));
        let even = &bp(1) * &bm(1);
        assert_eq!(even.parity_decompose(), (even.clone(), El::zero()));
        let mixed = &El::one() + &bp(1);
        assert_eq!(mixed.parity_decompose(), (El::one(), bp(1)));
    }

    #[test]
    fn g_action_examples() {
        assert_eq!(bp(1).g_action(), -bp(1));
        let even = &bp(1) * &bm(2);
        assert_eq!(even.g_action(), even);
    }

    #[test]
    fn printing() {
        let e = &(&bp(1) * &bm(1)) + &El::one();
        assert_eq!(e.to_string(), "B+1 B-1 + I");
        assert_eq!((-bp(1)).to_string(), "-1 B+1");
        assert_eq!((&bp(1) - &bm(1).scale(&integer(2))).to_string(), "B+1 - 2 B-1");
        assert_eq!(El::zero().to_string(), "0");
    }
}
