//! Degree discipline for alternating products.
//!
//! For `w = a₁ b₁ ⋯ a_l b_l` with every `φ_A(a_i)` having a nonzero (2,1)
//! entry and every `φ_B(b_i)` hyperbolic, the image `φ_t(w)` has entry
//! degrees at most `[[l−1, l], [l−1, l]]` with the (2,2) degree exactly `l`.

use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{is_hyperbolic, CertifyError};
use crate::rep::{Representation, Surface};
use crate::scc::christoffel_word;
use crate::words::{commutator_power, Gen, Letter, Side, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LemmaConfig {
    pub trials: usize,
    pub max_l: usize,
    pub seed: u64,
    /// Occasionally replace an `A`-part with `[a,b]^{±1}`, whose image has a
    /// zero (2,1) entry, to exercise the hypothesis check.
    pub allow_bad_hypotheses: bool,
}

impl Default for LemmaConfig {
    fn default() -> Self {
        LemmaConfig {
            trials: 1000,
            max_l: 5,
            seed: 0x5eed,
            allow_bad_hypotheses: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeReport {
    pub word: Word,
    pub l: usize,
    /// Degrees of `(e11, e12, e21, e22)`; `None` for a zero entry.
    pub degrees: [Option<usize>; 4],
    pub hypothesis_ok: bool,
    pub conforms: bool,
}

fn at_most(d: Option<usize>, bound: usize) -> bool {
    d.map_or(true, |d| d <= bound)
}

/// Degree pattern check for an alternating product of length `2l`.
pub fn conforms(degrees: &[Option<usize>; 4], l: usize) -> bool {
    let [d11, d12, d21, d22] = *degrees;
    d22 == Some(l) && at_most(d12, l) && at_most(d11, l - 1) && at_most(d21, l - 1)
}

/// Random reduced `{a, b}`-word of length 1 to 3 whose image has a nonzero
/// (2,1) entry.
pub fn random_a_part<R: Rng>(rep: &Representation, rng: &mut R) -> Result<Word, CertifyError> {
    let alphabet = [
        Letter::pos(Gen::A),
        Letter::neg(Gen::A),
        Letter::pos(Gen::B),
        Letter::neg(Gen::B),
    ];
    loop {
        let len = rng.gen_range(1..=3);
        let mut letters: Vec<Letter> = Vec::with_capacity(len);
        while letters.len() < len {
            let l = *alphabet.choose(rng).unwrap_or_else(|| unreachable!());
            if letters.last().is_some_and(|&p| p == l.inv()) {
                continue;
            }
            letters.push(l);
        }
        let w = Word::new(letters);
        if !rep.evaluate(&w)?.e21.is_zero() {
            return Ok(w);
        }
    }
}

/// Random nonseparating non-generator curve word in `F(x, y)`: a Christoffel
/// word with coprime `p, q ∈ 1..=4`, under a random `x ↔ y` swap, sign flips
/// and rotation.
pub fn random_b_part<R: Rng>(rng: &mut R) -> Word {
    let (p, q) = loop {
        let p = rng.gen_range(1..=4u64);
        let q = rng.gen_range(1..=4u64);
        if num_integer::gcd(p, q) == 1 {
            break (p, q);
        }
    };
    let swap = rng.gen_bool(0.5);
    let flip_x = rng.gen_bool(0.5);
    let flip_y = rng.gen_bool(0.5);
    let w = christoffel_word(p, q).substitute(|l| {
        let gen = match (l.gen, swap) {
            (Gen::X, true) => Gen::Y,
            (Gen::Y, true) => Gen::X,
            (g, _) => g,
        };
        let flip = if gen == Gen::X { flip_x } else { flip_y };
        Word::letter(Letter::new(gen, l.inverse ^ flip))
    });
    let k = rng.gen_range(0..w.len());
    w.rotate(k)
}

/// Samples alternating products and records the entry degrees of their
/// images. Requires the closed genus-2 surface.
pub fn verify_lemma_degrees(
    rep: &Representation,
    cfg: &LemmaConfig,
) -> Result<Vec<DegreeReport>, CertifyError> {
    if rep.surface() != Surface::ClosedGenus2 {
        return Err(CertifyError::NeedsGenus2(rep.surface()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let max_l = cfg.max_l.max(1);
    let mut reports = Vec::with_capacity(cfg.trials);
    for _ in 0..cfg.trials {
        let l = rng.gen_range(1..=max_l);
        let mut parts: Vec<(Side, Word)> = Vec::with_capacity(2 * l);
        for _ in 0..l {
            parts.push((Side::A, random_a_part(rep, &mut rng)?));
            parts.push((Side::B, random_b_part(&mut rng)));
        }
        if cfg.allow_bad_hypotheses && rng.gen_bool(0.25) {
            let i = rng.gen_range(0..l);
            let k = if rng.gen_bool(0.5) { 1 } else { -1 };
            parts[2 * i].1 = commutator_power(Side::A, k);
        }

        let mut hypothesis_ok = true;
        let mut product = crate::exact::Mat2::identity();
        for (side, part) in &parts {
            let m = rep.evaluate(part)?;
            hypothesis_ok &= match side {
                Side::A => !m.e21.is_zero(),
                Side::B => is_hyperbolic(&m),
            };
            product = &product * &m;
        }
        let word = Word::new(
            parts
                .iter()
                .flat_map(|(_, p)| p.letters().iter().copied())
                .collect(),
        );
        let degrees = product.degrees();
        reports.push(DegreeReport {
            word,
            l,
            conforms: conforms(&degrees, l),
            degrees,
            hypothesis_ok,
        });
    }
    Ok(reports)
}
