//! Simple closed curves on the once-punctured torus `Σ_B` with `π₁ = F(x, y)`.
//!
//! Up to the symmetries `x ↦ x⁻¹`, `y ↦ y⁻¹`, `x ↔ y`, a cyclically reduced
//! word represents a simple closed curve iff it is
//!
//! 1. a generator `x^{±1}`, `y^{±1}`;
//! 2. a conjugate of the boundary `[x^{±1}, y^{±1}]`; or
//! 3. `x^{n₁} y x^{n₂} y ⋯ x^{n_s} y` with every `n_i ∈ {n, n+1}`, where the
//!    block pattern `(n₁, …, n_s)`, read as a cyclic word in the two letters
//!    `x^n y` and `x^{n+1} y`, is itself of type 1 or 3.
//!
//! Types 1 and 3 are exactly the primitive elements of `F(x, y)`;
//! [`whitehead_is_primitive`] decides primitivity independently.

mod whitehead;

pub use whitehead::{apply_move, whitehead_is_primitive, whitehead_minimize, whitehead_moves};

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::exact::Rational;
use crate::rep::Params;
use crate::words::{cyclic_reduce, Gen, Letter, Side, Word};

/// Syntactic class of a cyclic word in `F(x, y)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BClass {
    Type1,
    Type2,
    Type3 { n: u64, pattern: Vec<u64> },
    NotScc,
}

impl BClass {
    pub fn is_nonseparating(&self) -> bool {
        matches!(self, BClass::Type1 | BClass::Type3 { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SccKind {
    Generator,
    Boundary,
    Type3 { n: u64, pattern: Vec<u64> },
}

impl SccKind {
    pub fn name(&self) -> &'static str {
        match self {
            SccKind::Generator => "generator",
            SccKind::Boundary => "boundary",
            SccKind::Type3 { .. } => "type3",
        }
    }
}

/// One simple closed curve class, up to rotation, inversion, and the sign
/// symmetries `x ↦ x⁻¹`, `y ↦ y⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SccClass {
    pub canonical: Word,
    pub kind: SccKind,
}

impl SccClass {
    /// The same curve class drawn on the `A` side (`x ↦ a`, `y ↦ b`).
    pub fn on_side(&self, side: Side) -> Word {
        match side {
            Side::B => self.canonical.clone(),
            Side::A => mirror_to_a(&self.canonical),
        }
    }
}

impl fmt::Display for SccClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]", self.canonical, self.kind.name())
    }
}

/// Rewrites a word in `x, y` as the corresponding word in `a, b`.
pub fn mirror_to_a(w: &Word) -> Word {
    w.letters()
        .iter()
        .map(|l| {
            let gen = match l.gen {
                Gen::X => Gen::A,
                Gen::Y => Gen::B,
                g => g,
            };
            Letter::new(gen, l.inverse)
        })
        .collect()
}

fn rotations(w: &Word) -> impl Iterator<Item = Word> + '_ {
    (0..w.len().max(1)).map(move |k| w.rotate(k))
}

/// Least cyclic rotation of `w` or `w⁻¹` under the order `x < y < X < Y`.
/// `w` must be cyclically reduced.
pub fn cyclic_canonical(w: &Word) -> Word {
    let inv = w.inverse();
    rotations(w)
        .chain(rotations(&inv))
        .min()
        .unwrap_or_default()
}

/// Flips the sign of every occurrence of the generators selected by `flip`.
fn sign_flip(w: &Word, flip: impl Fn(Gen) -> bool) -> Word {
    Word::from_letters_unreduced(
        w.letters()
            .iter()
            .map(|&l| if flip(l.gen) { l.inv() } else { l })
            .collect(),
    )
}

/// Canonical representative under rotation, inversion, and independent sign
/// flips of `x` and `y`.
pub fn class_canonical(w: &Word) -> Word {
    let (core, _) = cyclic_reduce(w);
    [(false, false), (true, false), (false, true), (true, true)]
        .into_iter()
        .map(|(fx, fy)| {
            cyclic_canonical(&sign_flip(&core, |g| (g == Gen::X && fx) || (g == Gen::Y && fy)))
        })
        .min()
        .unwrap_or_default()
}

/// Run lengths of a cyclic 0/1 sequence containing both symbols, rotated to
/// start at the first run boundary at or after position 0. Returns
/// `(symbol, length)` pairs.
fn cyclic_runs(seq: &[u8]) -> Vec<(u8, u64)> {
    let n = seq.len();
    let start = (0..n)
        .find(|&i| seq[i] != seq[(i + n - 1) % n])
        .unwrap_or(0);
    let mut runs: Vec<(u8, u64)> = Vec::new();
    for k in 0..n {
        let s = seq[(start + k) % n];
        match runs.last_mut() {
            Some((sym, len)) if *sym == s => *len += 1,
            _ => runs.push((s, 1)),
        }
    }
    runs
}

/// Block pattern of a positive cyclic two-letter word: `(n, pattern)` where
/// one letter only occurs isolated and the other occurs in blocks of sizes
/// `pattern`, all in `{n, n+1}`. The pattern starts at the first block of the
/// repeated letter at or after the first run boundary.
fn block_pattern(seq: &[u8]) -> Option<(u64, Vec<u64>)> {
    if !(seq.contains(&0) && seq.contains(&1)) {
        return None;
    }
    let runs = cyclic_runs(seq);
    let isolated = |sym: u8| runs.iter().filter(|r| r.0 == sym).all(|r| r.1 == 1);
    let major = if isolated(1) {
        0
    } else if isolated(0) {
        1
    } else {
        return None;
    };
    let first = runs.iter().position(|r| r.0 == major)?;
    let pattern: Vec<u64> = runs[first..]
        .iter()
        .chain(&runs[..first])
        .filter(|r| r.0 == major)
        .map(|r| r.1)
        .collect();
    let lo = *pattern.iter().min()?;
    let hi = *pattern.iter().max()?;
    (hi - lo <= 1).then_some((lo, pattern))
}

/// Primitivity of a positive cyclic two-letter word via the recursive block
/// structure.
fn positive_is_primitive(seq: &[u8]) -> bool {
    if seq.len() == 1 {
        return true;
    }
    let Some((n, pattern)) = block_pattern(seq) else {
        return false;
    };
    if pattern.iter().all(|&p| p == n) {
        return pattern.len() == 1;
    }
    let next: Vec<u8> = pattern.iter().map(|&p| u8::from(p != n)).collect();
    positive_is_primitive(&next)
}

fn is_boundary_shape(w: &[Letter]) -> bool {
    w.len() == 4 && w[2] == w[0].inv() && w[3] == w[1].inv() && w[0].gen != w[1].gen
}

/// Matches a word in `F(x, y)` against the three simple-closed-curve forms,
/// up to rotation and the symmetry moves.
pub fn classify_b_word(w: &Word) -> BClass {
    let (core, _) = cyclic_reduce(w);
    let letters = core.letters();
    if letters.is_empty() || letters.iter().any(|l| l.side() != Side::B) {
        return BClass::NotScc;
    }
    if letters.len() == 1 {
        return BClass::Type1;
    }
    if is_boundary_shape(letters) {
        return BClass::Type2;
    }
    let uniform = |g: Gen| {
        let mut signs = letters.iter().filter(|l| l.gen == g).map(|l| l.inverse);
        match signs.next() {
            Some(first) => signs.all(|s| s == first),
            None => true,
        }
    };
    if !(uniform(Gen::X) && uniform(Gen::Y)) {
        return BClass::NotScc;
    }
    let seq: Vec<u8> = letters.iter().map(|l| u8::from(l.gen == Gen::Y)).collect();
    match block_pattern(&seq) {
        Some((n, pattern)) if positive_is_primitive(&seq) => BClass::Type3 { n, pattern },
        _ => BClass::NotScc,
    }
}

/// Lower Christoffel word with `p` letters `x` and `q` letters `y`, `p + q ≥ 1`.
pub fn christoffel_word(p: u64, q: u64) -> Word {
    let len = p + q;
    (1..=len)
        .map(|i| {
            if (i * q) / len > ((i - 1) * q) / len {
                Letter::pos(Gen::Y)
            } else {
                Letter::pos(Gen::X)
            }
        })
        .collect()
}

/// Every simple closed curve class of cyclic length at most `max_len`, sorted
/// by length and then by the letter order.
///
/// Nonseparating classes correspond to coprime homology classes `(p, q)` with
/// `p, q ≥ 0` (after sign symmetries), realized by Christoffel words of length
/// `p + q`; the only separating class is the boundary `[x, y]`.
pub fn enumerate_scc_classes(max_len: usize) -> Vec<SccClass> {
    let mut classes = Vec::new();
    let max = max_len as u64;
    for len in 1..=max {
        for p in 0..=len {
            let q = len - p;
            if num_integer::gcd(p, q) != 1 {
                continue;
            }
            let canonical = class_canonical(&christoffel_word(p, q));
            let kind = match classify_b_word(&canonical) {
                BClass::Type1 => SccKind::Generator,
                BClass::Type3 { n, pattern } => SccKind::Type3 { n, pattern },
                other => unreachable!("Christoffel word classified as {other:?}"),
            };
            classes.push(SccClass { canonical, kind });
        }
        if len == 4 {
            classes.push(SccClass {
                canonical: class_canonical(&Word::commutator(&Word::gen(Gen::X), &Word::gen(Gen::Y))),
                kind: SccKind::Boundary,
            });
        }
    }
    classes.sort_by(|a, b| {
        (a.canonical.len(), &a.canonical).cmp(&(b.canonical.len(), &b.canonical))
    });
    classes.dedup();
    classes
}

/// `α^s β^k + α^{−s} β^{−k}`; `None` when either exponent is zero.
pub fn type3_trace(p: &Params, s: i64, k: i64) -> Option<Rational> {
    if s == 0 || k == 0 {
        return None;
    }
    let ab = &p.alpha().pow(s).ok()? * &p.beta().pow(k).ok()?;
    let inv = ab.recip().ok()?;
    Some(&ab + &inv)
}

/// All cyclically reduced words in `F(x, y)` of length exactly `len`.
pub fn cyclically_reduced_words(len: usize) -> Vec<Word> {
    let alphabet = [
        Letter::pos(Gen::X),
        Letter::pos(Gen::Y),
        Letter::neg(Gen::X),
        Letter::neg(Gen::Y),
    ];
    let mut out = Vec::new();
    let mut stack: Vec<Vec<Letter>> = vec![Vec::new()];
    while let Some(prefix) = stack.pop() {
        if prefix.len() == len {
            let word = Word::from_letters_unreduced(prefix);
            if word.is_cyclically_reduced() {
                out.push(word);
            }
            continue;
        }
        for &l in &alphabet {
            if prefix.last() != Some(&l.inv()) {
                let mut next = prefix.clone();
                next.push(l);
                stack.push(next);
            }
        }
    }
    out
}
