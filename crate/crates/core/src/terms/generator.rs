use std::cmp::Ordering;
use std::fmt;

/// Mode index of a ladder letter. Unbounded: no global mode count exists at
/// the symbolic level.
pub type Mode = u32;

/// Creation (`+`) or annihilation (`-`) label. `Plus` sorts first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];

    /// `+1` or `-1`.
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            Sign::Plus => '+',
            Sign::Minus => '-',
        }
    }
}

/// An odd ladder letter `B_mode^sign`, ordered by sign then mode.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Ladder {
    pub sign: Sign,
    pub mode: Mode,
}

impl Ladder {
    pub fn new(sign: Sign, mode: Mode) -> Self {
        Ladder { sign, mode }
    }

    pub fn plus(mode: Mode) -> Self {
        Ladder::new(Sign::Plus, mode)
    }

    pub fn minus(mode: Mode) -> Self {
        Ladder::new(Sign::Minus, mode)
    }
}

impl fmt::Display for Ladder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "B{}{}", self.sign.symbol(), self.mode)
    }
}

/// The even symbol `E(iξ, jη) = {B_i^ξ, B_j^η}`.
///
/// Always stored with `first <= second`; the anticommutator is symmetric so
/// this makes equality syntactic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Anticommutator {
    first: Ladder,
    second: Ladder,
}

impl Anticommutator {
    pub fn new(a: Ladder, b: Ladder) -> Self {
        if a <= b {
            Anticommutator { first: a, second: b }
        } else {
            Anticommutator { first: b, second: a }
        }
    }

    pub fn first(&self) -> Ladder {
        self.first
    }

    pub fn second(&self) -> Ladder {
        self.second
    }

    pub fn is_diagonal(&self) -> bool {
        self.first == self.second
    }

    fn sort_key(&self) -> (Sign, Sign, Mode, Mode) {
        (self.first.sign, self.second.sign, self.first.mode, self.second.mode)
    }
}

// Sign class (++ < +- < --) first, then the mode pair.
impl Ord for Anticommutator {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for Anticommutator {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Anticommutator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "E({}{},{}{})",
            self.first.mode,
            self.first.sign.symbol(),
            self.second.mode,
            self.second.sign.symbol()
        )
    }
}

/// One letter of the alphabet.
///
/// The derived order is the letter order used by every normal form: all
/// `E` symbols, then ladder letters (`+` before `-`, then mode), then the
/// group-like letters `g < K+ < K-`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Generator {
    E(Anticommutator),
    B(Ladder),
    G,
    KPlus,
    KMinus,
}

impl Generator {
    pub fn b(sign: Sign, mode: Mode) -> Self {
        Generator::B(Ladder::new(sign, mode))
    }

    pub fn b_plus(mode: Mode) -> Self {
        Generator::b(Sign::Plus, mode)
    }

    pub fn b_minus(mode: Mode) -> Self {
        Generator::b(Sign::Minus, mode)
    }

    pub fn e(a: Ladder, b: Ladder) -> Self {
        Generator::E(Anticommutator::new(a, b))
    }

    pub fn k(sign: Sign) -> Self {
        match sign {
            Sign::Plus => Generator::KPlus,
            Sign::Minus => Generator::KMinus,
        }
    }

    /// `true` for ladder letters, the only odd generators.
    pub fn is_odd(&self) -> bool {
        matches!(self, Generator::B(_))
    }

    pub fn parity(&self) -> u8 {
        self.is_odd() as u8
    }

    /// Group-like letters (`g`, `K±`) act diagonally in Fock space.
    pub fn is_group_like(&self) -> bool {
        matches!(self, Generator::G | Generator::KPlus | Generator::KMinus)
    }

    /// Number of ladder operators the letter stands for (`E` is quadratic).
    pub fn ladder_weight(&self) -> usize {
        match self {
            Generator::B(_) => 1,
            Generator::E(_) => 2,
            _ => 0,
        }
    }

    /// Largest mode index mentioned by the letter.
    pub fn max_mode(&self) -> Option<Mode> {
        match self {
            Generator::B(l) => Some(l.mode),
            Generator::E(e) => Some(e.first.mode.max(e.second.mode)),
            _ => None,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::E(e) => e.fmt(f),
            Generator::B(l) => l.fmt(f),
            Generator::G => f.write_str("g"),
            Generator::KPlus => f.write_str("K+"),
            Generator::KMinus => f.write_str("K-"),
        }
    }
}
