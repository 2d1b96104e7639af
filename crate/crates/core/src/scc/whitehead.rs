//! Whitehead's algorithm for primitivity in `F(x, y)`.
//!
//! An element is primitive iff its Aut-orbit contains a word of cyclic
//! length 1. By peak reduction, a cyclic word that is not of minimal length in
//! its orbit admits a length-reducing Whitehead automorphism, so greedy
//! reduction reaches the minimum.

use alloc::vec::Vec;

use crate::words::{cyclic_reduce, Gen, Letter, Word};

/// The eight non-inner Whitehead automorphisms of `F(x, y)`: for a multiplier
/// letter `m ∈ {x, X, y, Y}` and `z` the other generator, either `z ↦ z m` or
/// `z ↦ m⁻¹ z`. The multiplier's own generator is fixed.
pub fn whitehead_moves() -> Vec<(Letter, bool)> {
    let mut moves = Vec::with_capacity(8);
    for gen in [Gen::X, Gen::Y] {
        for inverse in [false, true] {
            for right in [true, false] {
                moves.push((Letter::new(gen, inverse), right));
            }
        }
    }
    moves
}

/// Applies the Whitehead move `(m, right)` and returns the reduced image.
pub fn apply_move(w: &Word, m: Letter, right: bool) -> Word {
    let z = match m.gen {
        Gen::X => Gen::Y,
        Gen::Y => Gen::X,
        other => other,
    };
    let z_image = if right {
        Word::new(alloc::vec![Letter::pos(z), m])
    } else {
        Word::new(alloc::vec![m.inv(), Letter::pos(z)])
    };
    w.substitute(|l| {
        if l.gen != z {
            Word::letter(l)
        } else if l.inverse {
            z_image.inverse()
        } else {
            z_image.clone()
        }
    })
}

fn cyclic_core(w: &Word) -> Word {
    cyclic_reduce(w).0
}

/// Greedy Whitehead reduction to a cyclic word of minimal length in its
/// automorphic orbit.
pub fn whitehead_minimize(w: &Word) -> Word {
    let moves = whitehead_moves();
    let mut current = cyclic_core(w);
    loop {
        let best = moves
            .iter()
            .map(|&(m, right)| cyclic_core(&apply_move(&current, m, right)))
            .min_by_key(Word::len);
        match best {
            Some(next) if next.len() < current.len() => current = next,
            _ => return current,
        }
    }
}

/// True iff `w` belongs to some free basis of `F(x, y)`.
pub fn whitehead_is_primitive(w: &Word) -> bool {
    debug_assert!(w.letters().iter().all(|l| matches!(l.gen, Gen::X | Gen::Y)));
    whitehead_minimize(w).len() == 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_word;
    use alloc::collections::BTreeSet;
    use alloc::vec;

    fn w(s: &str) -> Word {
        parse_word(s).unwrap()
    }

    /// Exhaustive search over arbitrary Whitehead move sequences (not
    /// only length-reducing ones) among cyclic words no longer than `bound`.
    fn reaches_length_one(start: &Word, bound: usize) -> bool {
        let mut seen = BTreeSet::new();
        let mut frontier = vec![cyclic_core(start)];
        while let Some(cur) = frontier.pop() {
            if cur.len() == 1 {
                return true;
            }
            if !seen.insert(cur.clone()) {
                continue;
            }
            for (m, right) in whitehead_moves() {
                let next = cyclic_core(&apply_move(&cur, m, right));
                if next.len() <= bound && !seen.contains(&next) {
                    frontier.push(next);
                }
            }
        }
        false
    }

    #[test]
    fn generators_are_primitive() {
        assert!(whitehead_is_primitive(&w("x")));
        assert!(whitehead_is_primitive(&w("Y")));
    }

    #[test]
    fn brute_force_agrees_on_examples() {
        let prim = w("x^2 y x y");
        assert!(reaches_length_one(&prim, prim.len()));
        assert!(whitehead_is_primitive(&prim));

        let comm = w("[x,y]");
        assert!(!reaches_length_one(&comm, comm.len()));
        assert!(!whitehead_is_primitive(&comm));
    }

    #[test]
    fn proper_powers_and_squares_are_not_primitive() {
        for text in ["x^2", "x y x y", "x^2 y^2", "x y X y", "[x,y]^2"] {
            assert!(!whitehead_is_primitive(&w(text)), "{text}");
        }
        assert!(!whitehead_is_primitive(&Word::empty()));
    }

    #[test]
    fn moves_are_automorphisms() {
        // The inverse of each move is the same move with the multiplier inverted.
        for (m, right) in whitehead_moves() {
            let img = apply_move(&w("x y x Y X X y"), m, right);
            let back = apply_move(&img, m.inv(), right);
            assert_eq!(back, w("x y x Y X X y"), "{m:?} {right}");
        }
    }
}
