//! Syllable decomposition in `A *_C B` and absorption of `C`-syllables.

use alloc::vec::Vec;
use core::fmt;

use super::{cyclic_reduce, Side, Word};

/// A maximal run of letters from one side.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Syllable {
    pub side: Side,
    pub word: Word,
}

/// Alternating sequence of nonempty syllables.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SyllableForm {
    pub syllables: Vec<Syllable>,
}

/// `c^k` written on `side`: `[a,b]^k` or `[x,y]^k`.
pub fn commutator_power(side: Side, k: i64) -> Word {
    let [g, h] = side.generators();
    Word::commutator(&Word::gen(g), &Word::gen(h)).pow(k)
}

impl Syllable {
    /// `Some(k)` when the syllable is literally `c^k` on its own side.
    ///
    /// In a free group, membership in `⟨c⟩` is equality of reduced words with
    /// some `c^k`, and `|k| ≤ len / 4`.
    pub fn c_power(&self) -> Option<i64> {
        let len = self.word.len();
        if len == 0 || len % 4 != 0 {
            return None;
        }
        let k = (len / 4) as i64;
        [k, -k]
            .into_iter()
            .find(|&k| commutator_power(self.side, k) == self.word)
    }
}

impl SyllableForm {
    pub fn len(&self) -> usize {
        self.syllables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Concatenation of all syllables, freely reduced.
    pub fn flatten(&self) -> Word {
        Word::new(
            self.syllables
                .iter()
                .flat_map(|s| s.word.letters().iter().copied())
                .collect(),
        )
    }

    /// Number of `(A, B)` pairs when the form alternates starting with `A`
    /// and has even length.
    pub fn pair_count(&self) -> Option<usize> {
        let alternating = self
            .syllables
            .iter()
            .enumerate()
            .all(|(i, s)| s.side == if i % 2 == 0 { Side::A } else { Side::B });
        (alternating && self.len() % 2 == 0 && !self.is_empty()).then(|| self.len() / 2)
    }

    /// Cyclic normal form of a word: cyclically reduce, group into syllables,
    /// merge a wrap-around pair of same-side end syllables, and rotate so the
    /// first syllable lies in `A` when both sides occur.
    ///
    /// The result is a conjugate of `w`.
    pub fn cyclic(w: &Word) -> SyllableForm {
        let (core, _) = cyclic_reduce(w);
        let mut form = to_syllables(&core);
        if form.len() > 1 {
            let first = form.syllables[0].side;
            let last = form.syllables[form.len() - 1].side;
            if first == last {
                let tail = form.syllables.pop().unwrap_or_else(|| unreachable!());
                let head = &mut form.syllables[0];
                head.word = tail.word.mul(&head.word);
            }
            if form.syllables[0].side == Side::B {
                form.syllables.rotate_left(1);
            }
        }
        form
    }
}

/// Groups maximal same-side runs of `w`. A single-side word gives one syllable
/// and the empty word gives none.
pub fn to_syllables(w: &Word) -> SyllableForm {
    let mut syllables: Vec<Syllable> = Vec::new();
    for &l in w.letters() {
        match syllables.last_mut() {
            Some(s) if s.side == l.side() => {
                let mut letters = core::mem::take(&mut s.word).into_letters();
                letters.push(l);
                s.word = Word::from_letters_unreduced(letters);
            }
            _ => syllables.push(Syllable {
                side: l.side(),
                word: Word::letter(l),
            }),
        }
    }
    SyllableForm { syllables }
}

/// Replaces syllables lying in `C` by the equal word on the other side and
/// merges them into their neighbours, until no syllable is a power of `c` or
/// only one syllable is left.
///
/// Each step lowers the syllable count, so the loop terminates. The group
/// element is unchanged because `[a,b] = [x,y]` in the amalgam.
pub fn absorb_c_syllables(s: &SyllableForm) -> SyllableForm {
    let mut form = s.clone();
    loop {
        if form.len() <= 1 {
            return form;
        }
        let Some((idx, k)) = form
            .syllables
            .iter()
            .enumerate()
            .find_map(|(i, syl)| syl.c_power().map(|k| (i, k)))
        else {
            return form;
        };
        let side = form.syllables[idx].side.other();
        form.syllables[idx] = Syllable {
            side,
            word: commutator_power(side, k),
        };
        let next = to_syllables(&form.flatten());
        debug_assert!(next.len() < form.len());
        form = next;
    }
}

impl fmt::Display for SyllableForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.syllables {
            let tag = match s.side {
                Side::A => 'A',
                Side::B => 'B',
            };
            write!(f, "({tag}: {})", s.word)?;
        }
        Ok(())
    }
}

impl fmt::Debug for SyllableForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_word;
    use alloc::string::ToString;

    fn w(s: &str) -> Word {
        parse_word(s).unwrap()
    }

    fn form(parts: &[(Side, &str)]) -> SyllableForm {
        SyllableForm {
            syllables: parts
                .iter()
                .map(|&(side, text)| Syllable {
                    side,
                    word: w(text),
                })
                .collect(),
        }
    }

    #[test]
    fn grouping() {
        assert_eq!(
            to_syllables(&w("a x a b y")),
            form(&[(Side::A, "a"), (Side::B, "x"), (Side::A, "a b"), (Side::B, "y")])
        );
        assert_eq!(to_syllables(&w("x y")), form(&[(Side::B, "x y")]));
        let s = to_syllables(&w("a [x,y] A"));
        assert_eq!(
            s,
            form(&[(Side::A, "a"), (Side::B, "x y X Y"), (Side::A, "A")])
        );
        assert_eq!(s.pair_count(), None);
        // Cyclic normalization conjugates to a single B-syllable here.
        assert_eq!(SyllableForm::cyclic(&w("a [x,y] A")), form(&[(Side::B, "x y X Y")]));
    }

    #[test]
    fn cyclic_form_starts_with_a() {
        let f = SyllableForm::cyclic(&w("x a y b x"));
        assert_eq!(
            f,
            form(&[(Side::A, "a"), (Side::B, "y"), (Side::A, "b"), (Side::B, "x^2")])
        );
        assert_eq!(f.pair_count(), Some(2));
    }

    #[test]
    fn c_power_detection() {
        let syl = |side, text| Syllable {
            side,
            word: w(text),
        };
        assert_eq!(syl(Side::B, "[x,y]").c_power(), Some(1));
        assert_eq!(syl(Side::B, "[y,x]").c_power(), Some(-1));
        assert_eq!(syl(Side::A, "[a,b]^3").c_power(), Some(3));
        assert_eq!(syl(Side::B, "x [x,y] X").c_power(), None);
        assert_eq!(syl(Side::B, "[x,Y]").c_power(), None);
    }

    #[test]
    fn absorb_examples() {
        let out = absorb_c_syllables(&form(&[(Side::A, "[a,b]"), (Side::B, "y")]));
        assert_eq!(out, form(&[(Side::B, "[x,y] y")]));
        assert_eq!(out.to_string(), "(B: x y X)");

        let untouched = form(&[(Side::A, "a"), (Side::B, "x")]);
        assert_eq!(absorb_c_syllables(&untouched), untouched);

        let out = absorb_c_syllables(&form(&[(Side::A, "a"), (Side::B, "[x,y]"), (Side::A, "b")]));
        assert_eq!(out, form(&[(Side::A, "a [a,b] b")]));
    }

    #[test]
    fn absorb_cascades() {
        // c_A · c_B⁻¹ collapses entirely.
        let out = absorb_c_syllables(&form(&[(Side::A, "[a,b]"), (Side::B, "[y,x]")]));
        assert!(out.is_empty());
        // The merged B-syllable is itself a power of c and is absorbed again.
        let out = absorb_c_syllables(&form(&[
            (Side::B, "[x,y]"),
            (Side::A, "[a,b]"),
            (Side::B, "x"),
        ]));
        assert_eq!(out, form(&[(Side::B, "[x,y]^2 x")]));
    }
}
