//! Adjacent-letter rewrite rules.
//!
//! Every rule has a two-letter left-hand side. Structure constants come
//! from two places only: the trilinear paraboson relation (for `[E, B]`)
//! and the canonical commutation relations (boson context). The `[E, E']`
//! brackets are computed from `[E, B]` by the Leibniz rule.

use std::collections::BTreeMap;

use num_rational::Rational64;
use num_traits::{One, Zero};
use smallvec::{smallvec, SmallVec};

use super::{AlgebraKind, RewriteError};
use crate::terms::{Anticommutator, Generator, Ladder, Word};

pub(crate) type Letters = SmallVec<[Generator; 4]>;
pub(crate) type Replacement = SmallVec<[(Letters, Rational64); 4]>;

/// A rule `lhs ↦ rhs` with small rational structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteRule {
    pub lhs: [Generator; 2],
    pub rhs: Vec<(Word, Rational64)>,
}

fn r(n: i64) -> Rational64 {
    Rational64::from_integer(n)
}

fn delta(a: u32, b: u32) -> i64 {
    (a == b) as i64
}

/// `[E(iξ, jη), B_k^ε] = (ε−η) δ_jk B_i^ξ + (ε−ξ) δ_ik B_j^η`
pub fn e_b_bracket(e: Anticommutator, b: Ladder) -> Vec<(Ladder, i64)> {
    let (x, y) = (e.first(), e.second());
    let eps = b.sign.value();
    let mut out: BTreeMap<Ladder, i64> = BTreeMap::new();
    let c1 = (eps - y.sign.value()) * delta(y.mode, b.mode);
    if c1 != 0 {
        *out.entry(x).or_default() += c1;
    }
    let c2 = (eps - x.sign.value()) * delta(x.mode, b.mode);
    if c2 != 0 {
        *out.entry(y).or_default() += c2;
    }
    out.into_iter().filter(|(_, c)| *c != 0).collect()
}

/// `[E, E']` as a combination of `E` symbols.
///
/// Writes `E' = B_k B_l + B_l B_k`, expands `[E, ·]` as a derivation using
/// [`e_b_bracket`], and re-reads the resulting quadratic form in the ladder
/// letters as a sum of anticommutators. A quadratic form that is not
/// symmetric cannot be re-read, which is reported as `ClosureFailure`.
pub fn e_e_bracket(e: Anticommutator, f: Anticommutator) -> Result<Vec<(Anticommutator, Rational64)>, RewriteError> {
    let (k, l) = (f.first(), f.second());
    let mut quad: BTreeMap<(Ladder, Ladder), i64> = BTreeMap::new();
    let mut push = |a: Ladder, b: Ladder, c: i64| {
        *quad.entry((a, b)).or_default() += c;
    };
    // [E, B_k B_l] = [E,B_k] B_l + B_k [E,B_l], and the same with k, l swapped.
    for (p, q) in [(k, l), (l, k)] {
        for (z, c) in e_b_bracket(e, p) {
            push(z, q, c);
        }
        for (z, c) in e_b_bracket(e, q) {
            push(p, z, c);
        }
    }
    for (&(a, b), &c) in &quad {
        let mirror = quad.get(&(b, a)).copied().unwrap_or(0);
        if a != b && mirror != c {
            return Err(RewriteError::ClosureFailure {
                left: Generator::E(e),
                right: Generator::E(f),
                detail: format!(
                    "coefficient of {} {} is {c} but of {} {} is {mirror}",
                    Generator::B(a),
                    Generator::B(b),
                    Generator::B(b),
                    Generator::B(a)
                ),
            });
        }
    }
    let mut out: BTreeMap<Anticommutator, Rational64> = BTreeMap::new();
    for (&(a, b), &c) in &quad {
        if c == 0 || a > b {
            continue;
        }
        let coeff = if a == b {
            // c·x² = (c/2)·{x, x}
            Rational64::new(c, 2)
        } else {
            Rational64::from_integer(c)
        };
        *out.entry(Anticommutator::new(a, b)).or_default() += coeff;
    }
    Ok(out.into_iter().filter(|(_, c)| !c.is_zero()).collect())
}

/// Replacement for the adjacent pair `x y` in the given algebra, or `None`
/// when the pair is already in normal order.
pub(crate) fn replacement(kind: AlgebraKind, x: Generator, y: Generator) -> Result<Option<Replacement>, RewriteError> {
    use Generator::*;
    let swapped = |sign: i64| -> (Letters, Rational64) { (smallvec![y, x], r(sign)) };
    Ok(match kind {
        AlgebraKind::Free => None,
        AlgebraKind::Boson => match (x, y) {
            (B(a), B(b)) if a > b => {
                let mut rep: Replacement = smallvec![swapped(1)];
                if a.sign != b.sign && a.mode == b.mode {
                    // b⁻ b⁺ = b⁺ b⁻ + I
                    rep.push((Letters::new(), Rational64::one()));
                }
                Some(rep)
            }
            _ => None,
        },
        AlgebraKind::Paraboson | AlgebraKind::ParabosonG | AlgebraKind::ParabosonK => {
            match (x, y) {
                (B(a), B(b)) if a > b => {
                    Some(smallvec![swapped(-1), (smallvec![Generator::e(a, b)], Rational64::one())])
                }
                (B(a), B(b)) if a == b => Some(smallvec![(smallvec![Generator::e(a, a)], Rational64::new(1, 2))]),
                (B(b), E(e)) => {
                    // B E = E B - [E, B]
                    let mut rep: Replacement = smallvec![swapped(1)];
                    for (z, c) in e_b_bracket(e, b) {
                        rep.push((smallvec![B(z)], r(-c)));
                    }
                    Some(rep)
                }
                (E(e), E(f)) if e > f => {
                    // E F = F E + [E, F]
                    let mut rep: Replacement = smallvec![swapped(1)];
                    for (h, c) in e_e_bracket(e, f)? {
                        rep.push((smallvec![E(h)], c));
                    }
                    Some(rep)
                }
                (G, G) | (KPlus, KMinus) | (KMinus, KPlus) => Some(smallvec![(Letters::new(), Rational64::one())]),
                (G | KPlus | KMinus, B(_)) => Some(smallvec![swapped(-1)]),
                (G | KPlus | KMinus, E(_)) => Some(smallvec![swapped(1)]),
                _ => None,
            }
        }
    })
}

/// All `[E, E']` brackets with `E < E'` over modes `1..=max_mode`.
pub fn derive_ee_brackets(max_mode: u32) -> Result<Vec<RewriteRule>, RewriteError> {
    let symbols = anticommutators(max_mode);
    let mut rules = Vec::new();
    for &e in &symbols {
        for &f in &symbols {
            if e >= f {
                continue;
            }
            let rhs = e_e_bracket(e, f)?.into_iter().map(|(h, c)| (Word::letter(Generator::E(h)), c)).collect();
            rules.push(RewriteRule { lhs: [Generator::E(e), Generator::E(f)], rhs });
        }
    }
    Ok(rules)
}

/// Every canonical `E` symbol over modes `1..=max_mode`, in letter order.
pub fn anticommutators(max_mode: u32) -> Vec<Anticommutator> {
    let ladders: Vec<Ladder> =
        crate::terms::Sign::BOTH.iter().flat_map(|&s| (1..=max_mode).map(move |m| Ladder::new(s, m))).collect();
    let mut out: Vec<Anticommutator> = ladders
        .iter()
        .flat_map(|&a| ladders.iter().filter(move |&&b| a <= b).map(move |&b| Anticommutator::new(a, b)))
        .collect();
    out.sort();
    out
}

/// Rule table for a context restricted to modes `1..=max_mode`: one entry
/// per reducible ordered pair of letters.
pub fn rule_table(kind: AlgebraKind, max_mode: u32) -> Result<Vec<RewriteRule>, RewriteError> {
    let letters = super::extended_alphabet(kind, max_mode);
    let mut out = Vec::new();
    for &x in &letters {
        for &y in &letters {
            if let Some(rep) = replacement(kind, x, y)? {
                let rhs =
                    rep.into_iter().filter(|(_, c)| !c.is_zero()).map(|(ls, c)| (Word::from(&ls[..]), c)).collect();
                out.push(RewriteRule { lhs: [x, y], rhs });
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::terms::Sign;

    fn ac(i: u32, xi: Sign, j: u32, eta: Sign) -> Anticommutator {
        Anticommutator::new(Ladder::new(xi, i), Ladder::new(eta, j))
    }

    #[test]
    fn e_b_bracket_examples() {
        // [E(1+,1-), B-1] = -2 B-1
        assert_eq!(e_b_bracket(ac(1, Sign::Plus, 1, Sign::Minus), Ladder::minus(1)), vec![(Ladder::minus(1), -2)]);
        // [E(1+,1+), B-1] = -4 B+1
        assert_eq!(e_b_bracket(ac(1, Sign::Plus, 1, Sign::Plus), Ladder::minus(1)), vec![(Ladder::plus(1), -4)]);
        assert!(e_b_bracket(ac(1, Sign::Plus, 2, Sign::Plus), Ladder::plus(1)).is_empty());
    }

    #[test]
    fn e_e_bracket_is_antisymmetric() {
        let syms = anticommutators(2);
        for &e in &syms {
            for &f in &syms {
                let ef = e_e_bracket(e, f).unwrap();
                let mut fe = e_e_bracket(f, e).unwrap();
                for (_, c) in fe.iter_mut() {
                    *c = -*c;
                }
                assert_eq!(ef, fe, "[{e},{f}]");
            }
        }
    }

    #[test]
    fn self_bracket_vanishes() {
        for e in anticommutators(2) {
            assert!(e_e_bracket(e, e).unwrap().is_empty());
        }
    }

    #[test]
    fn rule_counts_for_two_modes() {
        // 10 E symbols and 4 ladder letters.
        assert_eq!(anticommutators(2).len(), 10);
        let rules = derive_ee_brackets(2).unwrap();
        assert_eq!(rules.len(), 45);
        let boson = rule_table(AlgebraKind::Boson, 2).unwrap();
        // ordered pairs a > b among 4 letters
        assert_eq!(boson.len(), 6);
    }
}
