//! Parser for the textual expression grammar.
//!
//! ```text
//! expr    := ['+'|'-'] term (('+'|'-') term)*
//! term    := factor+                       (juxtaposition = product)
//! factor  := int ['/' int] | 'i' | 'I' | 'g' | 'K+' | 'K-'
//!          | 'B+' int | 'B-' int | 'E(' int sign ',' int sign ')'
//!          | '(' expr ')'
//! ```
//!
//! The printer in [`super::element`] emits a subset of this grammar, so
//! printed elements always parse back to themselves.

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::Zero;
use thiserror::Error;

use super::element::Element;
use super::generator::{Generator, Ladder, Mode, Sign};
use crate::scalar::{Coefficient, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at column {column}: {message}")]
pub struct ParseError {
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Int(BigInt),
    Letter(Generator),
    Imag,
    Unit,
    Plus,
    Minus,
    Slash,
    Open,
    Close,
}

struct Lexer {
    chars: Vec<char>,
    pos: usize,
}

impl Lexer {
    fn new(src: &str) -> Self {
        Lexer { chars: src.chars().collect(), pos: 0 }
    }

    fn err<T>(&self, at: usize, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { column: at + 1, message: message.into() })
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while self.peek().is_some_and(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn digits(&mut self) -> Result<String, ParseError> {
        let start = self.pos;
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err(start, "expected digits");
        }
        Ok(self.chars[start..self.pos].iter().collect())
    }

    fn mode(&mut self) -> Result<Mode, ParseError> {
        let at = self.pos;
        let s = self.digits()?;
        s.parse::<Mode>().or_else(|_| self.err(at, format!("mode index {s} out of range")))
    }

    fn sign(&mut self) -> Result<Sign, ParseError> {
        match self.peek() {
            Some('+') => {
                self.pos += 1;
                Ok(Sign::Plus)
            }
            Some('-') => {
                self.pos += 1;
                Ok(Sign::Minus)
            }
            _ => self.err(self.pos, "expected '+' or '-'"),
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(self.pos, format!("expected '{c}'"))
        }
    }

    fn tokens(mut self) -> Result<Vec<(usize, Token)>, ParseError> {
        let mut out = Vec::new();
        loop {
            self.skip_ws();
            let at = self.pos;
            let Some(c) = self.peek() else { break };
            let tok = match c {
                '0'..='9' => Token::Int(self.digits()?.parse().expect("digits")),
                '+' => {
                    self.pos += 1;
                    Token::Plus
                }
                '-' => {
                    self.pos += 1;
                    Token::Minus
                }
                '/' => {
                    self.pos += 1;
                    Token::Slash
                }
                '(' => {
                    self.pos += 1;
                    Token::Open
                }
                ')' => {
                    self.pos += 1;
                    Token::Close
                }
                'i' => {
                    self.pos += 1;
                    Token::Imag
                }
                'I' => {
                    self.pos += 1;
                    Token::Unit
                }
                'g' => {
                    self.pos += 1;
                    Token::Letter(Generator::G)
                }
                'K' => {
                    self.pos += 1;
                    Token::Letter(Generator::k(self.sign()?))
                }
                'B' => {
                    self.pos += 1;
                    let sign = self.sign()?;
                    Token::Letter(Generator::b(sign, self.mode()?))
                }
                'E' => {
                    self.pos += 1;
                    self.expect('(')?;
                    self.skip_ws();
                    let i = self.mode()?;
                    let xi = self.sign()?;
                    self.expect(',')?;
                    self.skip_ws();
                    let j = self.mode()?;
                    let eta = self.sign()?;
                    self.expect(')')?;
                    Token::Letter(Generator::e(Ladder::new(xi, i), Ladder::new(eta, j)))
                }
                other => return self.err(at, format!("unexpected character '{other}'")),
            };
            out.push((at, tok));
        }
        Ok(out)
    }
}

struct Parser {
    tokens: Vec<(usize, Token)>,
    pos: usize,
    end: usize,
}

type Exact = Element<Scalar>;

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|(_, t)| t)
    }

    fn column(&self) -> usize {
        self.tokens.get(self.pos).map_or(self.end, |(c, _)| *c) + 1
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError { column: self.column(), message: message.into() })
    }

    fn expr(&mut self) -> Result<Exact, ParseError> {
        let mut negate = false;
        match self.peek() {
            Some(Token::Plus) => self.pos += 1,
            Some(Token::Minus) => {
                negate = true;
                self.pos += 1;
            }
            _ => {}
        }
        let mut acc = self.term()?;
        if negate {
            acc = -acc;
        }
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    acc += self.term()?;
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    acc -= &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Some(Token::Int(_) | Token::Letter(_) | Token::Imag | Token::Unit | Token::Open))
    }

    fn term(&mut self) -> Result<Exact, ParseError> {
        if !self.starts_factor() {
            return self.err("expected a factor");
        }
        let mut acc = self.factor()?;
        while self.starts_factor() {
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Exact, ParseError> {
        let tok = self.peek().cloned();
        self.pos += 1;
        match tok {
            Some(Token::Int(n)) => {
                let mut value = BigRational::from_integer(n);
                if self.peek() == Some(&Token::Slash) {
                    self.pos += 1;
                    match self.peek().cloned() {
                        Some(Token::Int(d)) if !d.is_zero() => {
                            self.pos += 1;
                            value /= BigRational::from_integer(d);
                        }
                        Some(Token::Int(_)) => return self.err("zero denominator"),
                        _ => return self.err("expected denominator"),
                    }
                }
                Ok(Exact::scalar(Complex::new(value, BigRational::zero())))
            }
            Some(Token::Imag) => Ok(Exact::scalar(Scalar::imaginary_unit())),
            Some(Token::Unit) => Ok(Exact::one()),
            Some(Token::Letter(g)) => Ok(Exact::generator(g)),
            Some(Token::Open) => {
                let inner = self.expr()?;
                if self.peek() != Some(&Token::Close) {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(inner)
            }
            _ => {
                self.pos -= 1;
                self.err("expected a factor")
            }
        }
    }
}

/// Parse an expression into an (unreduced) exact element.
pub fn parse_element(src: &str) -> Result<Element<Scalar>, ParseError> {
    let end = src.chars().count();
    let tokens = Lexer::new(src).tokens()?;
    if tokens.is_empty() {
        return Err(ParseError { column: 1, message: "empty expression".into() });
    }
    let mut p = Parser { tokens, pos: 0, end };
    let e = p.expr()?;
    if p.pos != p.tokens.len() {
        return p.err("unexpected trailing input");
    }
    Ok(e)
}

impl std::str::FromStr for Element<Scalar> {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_element(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{integer, rational};
    use crate::terms::Word;

    #[test]
    fn letters_and_products() {
        let e = parse_element("B-1 B+1").unwrap();
        assert_eq!(e, Exact::from_word(Word::from(vec![Generator::b_minus(1), Generator::b_plus(1)])));
        let e = parse_element("E(2-,1+) g K+ K-").unwrap();
        assert_eq!(e.to_string(), "E(1+,2-) g K+ K-");
    }

    #[test]
    fn coefficients() {
        let e = parse_element("1/2 B+1 - 3 I + 2 i g").unwrap();
        let i = Scalar::imaginary_unit();
        assert_eq!(e.coefficient(&Word::letter(Generator::b_plus(1))), rational(1, 2));
        assert_eq!(e.coefficient(&Word::unit()), integer(-3));
        assert_eq!(e.coefficient(&Word::letter(Generator::G)), i * integer(2));
    }

    #[test]
    fn parentheses_distribute() {
        let e = parse_element("(B+1 + B-1) B+2").unwrap();
        assert_eq!(e.to_string(), "B+1 B+2 + B-1 B+2");
        let e = parse_element("-(B+1 - I)").unwrap();
        assert_eq!(e.to_string(), "-1 B+1 + I");
    }

    #[test]
    fn errors_carry_columns() {
        let err = parse_element("B+1 + ").unwrap_err();
        assert_eq!(err.column, 7);
        assert!(parse_element("B*1").is_err());
        assert!(parse_element("1/0").is_err());
        assert!(parse_element("E(1+,1)").is_err());
        assert!(parse_element("(B+1").is_err());
        assert!(parse_element("").is_err());
    }

    #[test]
    fn printed_forms_reparse() {
        for src in ["-1 B+1", "B+1 B-1 + I", "(1/2 - i) E(1+,1-) B-2 g", "(i) K+ - 2 I"] {
            let e = parse_element(src).unwrap();
            assert_eq!(parse_element(&e.to_string()).unwrap(), e, "{src}");
        }
    }
}
