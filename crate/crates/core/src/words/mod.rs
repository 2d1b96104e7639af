//! Words in the free groups `A = F(a, b)` and `B = F(x, y)` and in the
//! amalgam `A *_C B`, where `C` is generated by `c = [a, b] = [x, y]`.

mod amalgam;
mod parse;

pub use amalgam::{absorb_c_syllables, commutator_power, to_syllables, Syllable, SyllableForm};
pub use parse::{parse_word, ParseError};

use alloc::vec::Vec;
use core::fmt;

/// One of the four generator names.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gen {
    A,
    B,
    X,
    Y,
}

/// Which vertex group of the amalgam a generator belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    A,
    B,
}

impl Gen {
    pub const ALL: [Gen; 4] = [Gen::A, Gen::B, Gen::X, Gen::Y];

    pub fn side(self) -> Side {
        match self {
            Gen::A | Gen::B => Side::A,
            Gen::X | Gen::Y => Side::B,
        }
    }

    pub fn name(self) -> char {
        match self {
            Gen::A => 'a',
            Gen::B => 'b',
            Gen::X => 'x',
            Gen::Y => 'y',
        }
    }

    fn from_char(c: char) -> Option<(Gen, bool)> {
        let gen = match c.to_ascii_lowercase() {
            'a' => Gen::A,
            'b' => Gen::B,
            'x' => Gen::X,
            'y' => Gen::Y,
            _ => return None,
        };
        Some((gen, c.is_ascii_uppercase()))
    }
}

impl Side {
    /// The two generators of this side, in the order `(first, second)` used
    /// for the boundary commutator `[first, second]`.
    pub fn generators(self) -> [Gen; 2] {
        match self {
            Side::A => [Gen::A, Gen::B],
            Side::B => [Gen::X, Gen::Y],
        }
    }

    pub fn other(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

/// A generator or its inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Letter {
    pub gen: Gen,
    pub inverse: bool,
}

impl Letter {
    pub const fn new(gen: Gen, inverse: bool) -> Self {
        Letter { gen, inverse }
    }

    pub const fn pos(gen: Gen) -> Self {
        Letter::new(gen, false)
    }

    pub const fn neg(gen: Gen) -> Self {
        Letter::new(gen, true)
    }

    pub fn inv(self) -> Self {
        Letter::new(self.gen, !self.inverse)
    }

    pub fn side(self) -> Side {
        self.gen.side()
    }

    pub fn exponent(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }

    /// Rank in the letter order `a < b < x < y < A < B < X < Y`, which on the
    /// `B` side reads `x < y < X < Y`.
    pub fn rank(self) -> u8 {
        let base = match self.gen {
            Gen::A => 0,
            Gen::B => 1,
            Gen::X => 2,
            Gen::Y => 3,
        };
        base + if self.inverse { 4 } else { 0 }
    }

    pub fn char(self) -> char {
        let c = self.gen.name();
        if self.inverse {
            c.to_ascii_uppercase()
        } else {
            c
        }
    }
}

impl PartialOrd for Letter {
    fn partial_cmp(&self, other: &Self) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Letter {
    fn cmp(&self, other: &Self) -> core::cmp::Ordering {
        self.rank().cmp(&other.rank())
    }
}

/// A word in the letters `a, b, x, y` and their inverses.
///
/// Words built through [`Word::new`], [`parse_word`], or the group operations
/// are freely reduced. [`Word::from_letters_unreduced`] exists for tests and
/// for callers that reduce explicitly.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty() -> Self {
        Word::default()
    }

    /// Freely reduces `letters`.
    pub fn new(letters: Vec<Letter>) -> Self {
        free_reduce(&Word { letters })
    }

    pub fn from_letters_unreduced(letters: Vec<Letter>) -> Self {
        Word { letters }
    }

    pub fn letter(l: Letter) -> Self {
        Word { letters: alloc::vec![l] }
    }

    pub fn gen(g: Gen) -> Self {
        Word::letter(Letter::pos(g))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| l.inv()).collect(),
        }
    }

    /// Reduced product `self · rhs`.
    pub fn mul(&self, rhs: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&rhs.letters);
        Word::new(letters)
    }

    /// `self^k` for any integer `k`.
    pub fn pow(&self, k: i64) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        Word::new(letters)
    }

    /// `[u, v] = u v u⁻¹ v⁻¹`.
    pub fn commutator(u: &Word, v: &Word) -> Word {
        u.mul(v).mul(&u.inverse()).mul(&v.inverse())
    }

    /// Cyclic rotation moving the first `k` letters to the end.
    pub fn rotate(&self, k: usize) -> Word {
        if self.letters.is_empty() {
            return self.clone();
        }
        let mut letters = self.letters.clone();
        letters.rotate_left(k % self.letters.len());
        Word { letters }
    }

    /// Applies a letter substitution and freely reduces.
    pub fn substitute(&self, f: impl Fn(Letter) -> Word) -> Word {
        let mut letters = Vec::new();
        for &l in &self.letters {
            letters.extend(f(l).letters);
        }
        Word::new(letters)
    }

    pub fn is_cyclically_reduced(&self) -> bool {
        match (self.letters.first(), self.letters.last()) {
            (Some(&f), Some(&l)) => self.letters.len() == 1 || f != l.inv(),
            _ => true,
        }
    }

    /// Sides touched by the word.
    pub fn sides(&self) -> (bool, bool) {
        let a = self.letters.iter().any(|l| l.side() == Side::A);
        let b = self.letters.iter().any(|l| l.side() == Side::B);
        (a, b)
    }

    pub fn exponent_sum(&self, g: Gen) -> i64 {
        self.letters
            .iter()
            .filter(|l| l.gen == g)
            .map(|l| l.exponent())
            .sum()
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word::new(iter.into_iter().collect())
    }
}

/// Compact form accepted by [`parse_word`]: runs become `x^3`, inverse runs
/// use the uppercase letter (`X^2`), and terms are separated by spaces.
/// The empty word prints as `1`.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        let mut i = 0;
        let mut first = true;
        while i < self.letters.len() {
            let l = self.letters[i];
            let mut run = 1;
            while i + run < self.letters.len() && self.letters[i + run] == l {
                run += 1;
            }
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{}", l.char())?;
            if run > 1 {
                write!(f, "^{run}")?;
            }
            i += run;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

/// Removes adjacent `g g⁻¹` pairs until none remain.
pub fn free_reduce(w: &Word) -> Word {
    let mut out: Vec<Letter> = Vec::with_capacity(w.letters.len());
    for &l in &w.letters {
        if out.last() == Some(&l.inv()) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    Word { letters: out }
}

/// Splits a freely reduced word as `conjugator · core · conjugator⁻¹` with
/// `core` cyclically reduced.
pub fn cyclic_reduce(w: &Word) -> (Word, Word) {
    let letters = &w.letters;
    let mut lo = 0;
    let mut hi = letters.len();
    while hi - lo >= 2 && letters[lo] == letters[hi - 1].inv() {
        lo += 1;
        hi -= 1;
    }
    (
        Word {
            letters: letters[lo..hi].to_vec(),
        },
        Word {
            letters: letters[..lo].to_vec(),
        },
    )
}

/// Exponent sums of `w` over `gens`, in order.
pub fn abelianize(w: &Word, gens: &[Gen]) -> Vec<i64> {
    gens.iter().map(|&g| w.exponent_sum(g)).collect()
}

/// gcd of the entries; 0 for the zero vector.
pub fn homology_gcd(v: &[i64]) -> u64 {
    v.iter().fold(0u64, |acc, &e| num_integer::gcd(acc, e.unsigned_abs()))
}
