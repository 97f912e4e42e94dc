//! Formal linear combinations of word tuples.
//!
//! `Tensor<C, 2>` is the space underlying both the braided tensor product
//! algebra and the ordinary tensor product; which multiplication applies is
//! chosen per call through [`Braiding`]. Rank 3 is used for
//! coassociativity and the hexagon identities, rank 4 only inside the
//! cross-coproduct route of the bosonisation check.

use std::collections::btree_map::{self, BTreeMap, Entry};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::rewriting::{AlgebraContext, RewriteError};
use crate::scalar::Coefficient;
use crate::terms::{render_sum, Element, Word};

/// Sign rule used when multiplying tensors slot-wise.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Braiding {
    /// `(a⊗b)(c⊗d) = (-1)^{|b||c|} ac⊗bd`, the super (Koszul) rule.
    Koszul,
    /// `(a⊗b)(c⊗d) = ac⊗bd`.
    Trivial,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Tensor<C, const N: usize> {
    terms: BTreeMap<[Word; N], C>,
}

pub type TensorElement<C> = Tensor<C, 2>;
pub type TripleTensor<C> = Tensor<C, 3>;

impl<C: Coefficient, const N: usize> Default for Tensor<C, N> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<C: Coefficient, const N: usize> Tensor<C, N> {
    pub fn zero() -> Self {
        Tensor { terms: BTreeMap::new() }
    }

    /// `I ⊗ … ⊗ I`
    pub fn one() -> Self {
        Self::pure(std::array::from_fn(|_| Word::unit()), C::one())
    }

    pub fn pure(slots: [Word; N], c: C) -> Self {
        let mut t = Self::zero();
        t.add_term(slots, c);
        t
    }

    /// Tensor product of `N` elements.
    pub fn product_of(parts: [&Element<C>; N]) -> Self {
        let mut acc: Vec<(Vec<Word>, C)> = vec![(Vec::with_capacity(N), C::one())];
        for part in parts {
            let mut next = Vec::with_capacity(acc.len() * part.len());
            for (words, c) in &acc {
                for (w, d) in part.terms() {
                    let mut ws = words.clone();
                    ws.push(w.clone());
                    next.push((ws, c.clone() * d.clone()));
                }
            }
            acc = next;
        }
        acc.into_iter().map(|(ws, c)| (to_array(ws), c)).collect()
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

    pub fn terms(&self) -> btree_map::Iter<'_, [Word; N], C> {
        self.terms.iter()
    }

    pub fn coefficient(&self, slots: &[Word; N]) -> C {
        self.terms.get(slots).cloned().unwrap_or_else(C::zero)
    }

    pub fn add_term(&mut self, slots: [Word; N], c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(slots) {
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

    pub fn add_scaled(&mut self, other: &Self, c: &C) {
        for (s, v) in &other.terms {
            self.add_term(s.clone(), v.clone() * c.clone());
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero();
        out.add_scaled(self, c);
        out
    }

    /// Slot-wise product with the given sign rule; slots are not reduced.
    pub fn multiply_unreduced(&self, other: &Self, braiding: Braiding) -> Self {
        let mut out = Self::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                let mut c = x.clone() * y.clone();
                if braiding == Braiding::Koszul && koszul_exponent(a, b) % 2 == 1 {
                    c = -c;
                }
                let slots = std::array::from_fn(|k| a[k].concat(&b[k]));
                out.add_term(slots, c);
            }
        }
        out
    }

    /// Slot-wise product followed by normal-form reduction of every slot.
    pub fn multiply(&self, other: &Self, braiding: Braiding, ctx: &AlgebraContext) -> Result<Self, RewriteError> {
        self.multiply_unreduced(other, braiding).reduce(ctx)
    }

    /// Reduce every slot to normal form in `ctx`.
    pub fn reduce(&self, ctx: &AlgebraContext) -> Result<Self, RewriteError> {
        let mut cache = ctx.word_cache::<C>();
        let mut out = Self::zero();
        for (slots, c) in &self.terms {
            let mut reduced = Vec::with_capacity(N);
            for w in slots {
                reduced.push(ctx.normal_form_word_cached(w, &mut cache)?);
            }
            let parts: [&Element<C>; N] = std::array::from_fn(|k| &reduced[k]);
            out.add_scaled(&Self::product_of(parts), c);
        }
        Ok(out)
    }

    /// Linear map applied to slot `k` (other slots untouched, no signs).
    pub fn map_slot<E>(&self, k: usize, mut f: impl FnMut(&Word) -> Result<Element<C>, E>) -> Result<Self, E> {
        let mut out = Self::zero();
        for (slots, c) in &self.terms {
            for (w, d) in f(&slots[k])?.terms() {
                let mut s = slots.clone();
                s[k] = w.clone();
                out.add_term(s, c.clone() * d.clone());
            }
        }
        Ok(out)
    }

    /// Multiply the slots together in order: `a⊗b⊗… ↦ ab…`.
    pub fn contract(&self) -> Element<C> {
        let mut out = Element::zero();
        for (slots, c) in &self.terms {
            let w = slots.iter().fold(Word::unit(), |acc, s| acc.concat(s));
            out.add_term(w, c.clone());
        }
        out
    }
}

impl<C: Coefficient> Tensor<C, 2> {
    /// Slot swap without signs (`Δᵒᵖ` in the ordinary setting).
    pub fn flip(&self) -> Self {
        self.terms.iter().map(|([a, b], c)| ([b.clone(), a.clone()], c.clone())).collect()
    }

    /// `Ψ(v⊗w) = (-1)^{|v||w|} w⊗v`.
    pub fn braid(&self) -> Self {
        self.terms
            .iter()
            .map(|([a, b], c)| {
                let c = if a.parity() & b.parity() == 1 { -c.clone() } else { c.clone() };
                ([b.clone(), a.clone()], c)
            })
            .collect()
    }

    /// Apply `f ⊗ h` slot-wise (both maps even, so no signs).
    pub fn map_both<E>(
        &self,
        mut f: impl FnMut(&Word) -> Result<Element<C>, E>,
        mut h: impl FnMut(&Word) -> Result<Element<C>, E>,
    ) -> Result<Self, E> {
        let mut out = Self::zero();
        for ([a, b], c) in &self.terms {
            let fa = f(a)?;
            let hb = h(b)?;
            out.add_scaled(&Self::product_of([&fa, &hb]), c);
        }
        Ok(out)
    }
}

/// Exponent of `-1` picked up when every `b_j` moves left past `a_i`, `i > j`.
fn koszul_exponent<const N: usize>(a: &[Word; N], b: &[Word; N]) -> usize {
    let mut odd_after = 0usize;
    let mut exp = 0usize;
    for j in (0..N).rev() {
        exp += b[j].parity() as usize * odd_after;
        odd_after += a[j].parity() as usize;
    }
    exp
}

fn to_array<const N: usize>(v: Vec<Word>) -> [Word; N] {
    v.try_into().unwrap_or_else(|_| unreachable!("slot count fixed by construction"))
}

impl<C: Coefficient, const N: usize> FromIterator<([Word; N], C)> for Tensor<C, N> {
    fn from_iter<I: IntoIterator<Item = ([Word; N], C)>>(iter: I) -> Self {
        let mut t = Self::zero();
        for (s, c) in iter {
            t.add_term(s, c);
        }
        t
    }
}

impl<C: Coefficient, const N: usize> Add for &Tensor<C, N> {
    type Output = Tensor<C, N>;
    fn add(self, rhs: &Tensor<C, N>) -> Tensor<C, N> {
        let mut out = self.clone();
        out.add_scaled(rhs, &C::one());
        out
    }
}

impl<C: Coefficient, const N: usize> Sub for &Tensor<C, N> {
    type Output = Tensor<C, N>;
    fn sub(self, rhs: &Tensor<C, N>) -> Tensor<C, N> {
        let mut out = self.clone();
        out.add_scaled(rhs, &-C::one());
        out
    }
}

impl<C: Coefficient, const N: usize> Neg for &Tensor<C, N> {
    type Output = Tensor<C, N>;
    fn neg(self) -> Tensor<C, N> {
        self.scale(&-C::one())
    }
}

impl<C: Coefficient, const N: usize> fmt::Display for Tensor<C, N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render_sum(
            f,
            self.terms.iter().map(|(slots, c)| {
                let body = slots.iter().map(Word::to_string).collect::<Vec<_>>().join(" ⊗ ");
                (c, body)
            }),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{integer, Scalar};
    use crate::terms::Generator;

    fn w(gs: &[Generator]) -> Word {
        Word::from(gs)
    }

    #[test]
    fn koszul_sign_on_pairs() {
        let b1 = Generator::b_plus(1);
        let b2 = Generator::b_plus(2);
        let x = TensorElement::<Scalar>::pure([Word::unit(), w(&[b1])], integer(1));
        let y = TensorElement::<Scalar>::pure([w(&[b2]), Word::unit()], integer(1));
        let p = x.multiply_unreduced(&y, Braiding::Koszul);
        assert_eq!(p, TensorElement::pure([w(&[b2]), w(&[b1])], integer(-1)));
        let q = y.multiply_unreduced(&x, Braiding::Koszul);
        assert_eq!(q, TensorElement::pure([w(&[b2]), w(&[b1])], integer(1)));
        let r = x.multiply_unreduced(&y, Braiding::Trivial);
        assert_eq!(r, TensorElement::pure([w(&[b2]), w(&[b1])], integer(1)));
    }

    #[test]
    fn koszul_exponent_triple() {
        let o = w(&[Generator::b_plus(1)]);
        let e = Word::unit();
        // b_1 passes a_2 and a_3; b_2 passes a_3.
        let a = [e.clone(), o.clone(), o.clone()];
        let b = [o.clone(), o.clone(), e.clone()];
        assert_eq!(koszul_exponent(&a, &b), 2 + 1);
    }

    #[test]
    fn braid_twice_is_identity() {
        let b1 = Generator::b_plus(1);
        let t: TensorElement<Scalar> =
            [([w(&[b1]), w(&[b1, b1])], integer(2)), ([w(&[b1]), w(&[Generator::b_minus(2)])], integer(3))]
                .into_iter()
                .collect();
        assert_eq!(t.braid().braid(), t);
        assert_eq!(t.braid().coefficient(&[w(&[Generator::b_minus(2)]), w(&[b1])]), integer(-3));
    }

    #[test]
    fn display_uses_tensor_symbol() {
        let t = TensorElement::<Scalar>::pure([Word::unit(), w(&[Generator::b_plus(1)])], integer(1));
        assert_eq!(t.to_string(), "I ⊗ B+1");
    }
}
