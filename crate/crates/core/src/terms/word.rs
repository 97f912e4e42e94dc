use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use super::generator::Generator;

pub(crate) type Letters = SmallVec<[Generator; 8]>;

/// A monomial in the free algebra. The empty word is the unit `I`.
///
/// Words are ordered by length, then lexicographically in the letter order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(Letters);

impl Word {
    pub fn unit() -> Self {
        Word(Letters::new())
    }

    pub fn letter(g: Generator) -> Self {
        let mut v = Letters::new();
        v.push(g);
        Word(v)
    }

    pub fn letters(&self) -> &[Generator] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of odd letters mod 2.
    pub fn parity(&self) -> u8 {
        (self.0.iter().filter(|g| g.is_odd()).count() % 2) as u8
    }

    pub fn odd_count(&self) -> usize {
        self.0.iter().filter(|g| g.is_odd()).count()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Letters::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// Total ladder-operator count (`E` counts twice).
    pub fn ladder_weight(&self) -> usize {
        self.0.iter().map(Generator::ladder_weight).sum()
    }

    pub fn has_group_like(&self) -> bool {
        self.0.iter().any(Generator::is_group_like)
    }

    /// `prefix ++ middle ++ suffix` where the original `[at, at+width)` is dropped.
    pub(crate) fn splice(&self, at: usize, width: usize, middle: &[Generator]) -> Word {
        let mut v = Letters::with_capacity(self.len() - width + middle.len());
        v.extend_from_slice(&self.0[..at]);
        v.extend_from_slice(middle);
        v.extend_from_slice(&self.0[at + width..]);
        Word(v)
    }
}

impl From<Vec<Generator>> for Word {
    fn from(v: Vec<Generator>) -> Self {
        Word(v.into_iter().collect())
    }
}

impl From<&[Generator]> for Word {
    fn from(v: &[Generator]) -> Self {
        Word(v.iter().copied().collect())
    }
}

impl FromIterator<Generator> for Word {
    fn from_iter<I: IntoIterator<Item = Generator>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("I");
        }
        for (k, g) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_is_two_sided_identity() {
        let w = Word::from(vec![Generator::b_plus(1), Generator::G]);
        assert_eq!(Word::unit().concat(&w), w);
        assert_eq!(w.concat(&Word::unit()), w);
        assert_eq!(Word::unit().to_string(), "I");
    }

    #[test]
    fn length_then_lex() {
        let short = Word::letter(Generator::KMinus);
        let long = Word::from(vec![Generator::b_plus(1), Generator::b_plus(1)]);
        assert!(short < long);
        assert!(Word::letter(Generator::b_plus(3)) < Word::letter(Generator::b_minus(1)));
    }

    #[test]
    fn parity_counts_odd_letters() {
        let w = Word::from(vec![Generator::b_plus(1), Generator::G, Generator::b_minus(2)]);
        assert_eq!(w.parity(), 0);
        assert_eq!(w.odd_count(), 2);
        assert_eq!(w.to_string(), "B+1 g B-2");
    }
}
