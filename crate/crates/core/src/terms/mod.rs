//! Value types: generators, words, and formal linear combinations.

mod element;
mod generator;
mod parse;
mod word;

pub(crate) use element::render_sum;
pub use element::Element;
pub use generator::{Anticommutator, Generator, Ladder, Mode, Sign};
pub use parse::{parse_element, ParseError};
pub use word::Word;
