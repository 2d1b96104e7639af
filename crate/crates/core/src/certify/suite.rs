//! The full check: every simple closed curve word up to a length bound maps
//! to an infinite-order element, a kernel element exists, and the image is
//! not a conjugate of the original Fuchsian representation.

use alloc::vec;
use alloc::vec::Vec;

use super::{certify_word, Certificate, CertifyError, Verdict};
use crate::exact::{Poly, Rational};
use crate::rep::{validate_params, Params, Representation, Surface};
use crate::scc::{enumerate_scc_classes, mirror_to_a, SccKind};
use crate::words::{abelianize, parse_word, Gen, Letter, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SuiteKind {
    Generator,
    Boundary,
    Type3,
    /// Band sum `u v` of a generator curve on each side.
    Mixed,
}

impl SuiteKind {
    pub fn name(self) -> &'static str {
        match self {
            SuiteKind::Generator => "generator",
            SuiteKind::Boundary => "boundary",
            SuiteKind::Type3 => "type3",
            SuiteKind::Mixed => "mixed",
        }
    }
}

impl From<&SccKind> for SuiteKind {
    fn from(k: &SccKind) -> Self {
        match k {
            SccKind::Generator => SuiteKind::Generator,
            SccKind::Boundary => SuiteKind::Boundary,
            SccKind::Type3 { .. } => SuiteKind::Type3,
        }
    }
}

/// A curve class representative `base` raised to `power`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteWord {
    pub base: Word,
    pub kind: SuiteKind,
    pub power: i64,
    pub word: Word,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SccResult {
    pub item: SuiteWord,
    pub certificate: Certificate,
}

impl SccResult {
    pub fn passed(&self) -> bool {
        self.certificate.verdict.is_infinite()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelWitness {
    pub word: Word,
    pub certificate: Certificate,
    pub free_length: usize,
    pub abelianization: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonconjugacyWitness {
    pub word: Word,
    pub trace: Poly,
    /// The quantity the trace depends on: `"t"` or `"beta"`.
    pub varies_with: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Report {
    pub params: Params,
    pub surface: Surface,
    pub max_len: usize,
    pub kernel: KernelWitness,
    pub nonconjugacy: NonconjugacyWitness,
    pub results: Vec<SccResult>,
}

impl Report {
    pub fn failures(&self) -> impl Iterator<Item = &SccResult> {
        self.results.iter().filter(|r| !r.passed())
    }

    pub fn passed(&self) -> bool {
        self.kernel.certificate.verdict == Verdict::Identity && self.failures().next().is_none()
    }
}

/// `[[x, y], [x², y]]`: nontrivial in `F(x, y)` and killed by `φ_B`, since
/// both commutators are upper unipotent.
pub fn kernel_witness_word() -> Word {
    parse_word("[[x,y],[x^2,y]]").unwrap_or_else(|_| unreachable!())
}

pub fn kernel_witness(rep: &Representation) -> Result<KernelWitness, CertifyError> {
    let word = kernel_witness_word();
    let certificate = certify_word(rep, &word)?;
    Ok(KernelWitness {
        free_length: word.len(),
        abelianization: abelianize(&word, &[Gen::X, Gen::Y]),
        word,
        certificate,
    })
}

/// Whether the trace of `w` varies with the deformation parameter: `t` on the
/// closed surface, `β` on the punctured torus.
pub fn accepts_as_witness(rep: &Representation, w: &Word) -> Result<bool, CertifyError> {
    let trace = rep.evaluate(w)?.trace();
    match rep.surface() {
        Surface::ClosedGenus2 => Ok(!trace.is_constant()),
        Surface::OncePuncturedTorus => {
            let p = rep.params();
            let other = [2, 3, 5, 7]
                .into_iter()
                .find_map(|m| validate_params(p.alpha(), &(p.beta() * &Rational::from(m))).ok())
                .unwrap_or_else(|| unreachable!("some multiple of beta is admissible"));
            let shifted = Representation::new(other, rep.surface())
                .map_err(|e| CertifyError::Rep(e.into()))?;
            Ok(shifted.evaluate(w)?.trace() != trace)
        }
    }
}

/// A word whose trace varies with the deformation parameter. On the closed
/// surface the search starts from `a x` and then scans reduced words in length
/// order up to `max_search_len`.
pub fn nonconjugacy_witness(
    rep: &Representation,
    max_search_len: usize,
) -> Result<NonconjugacyWitness, CertifyError> {
    match rep.surface() {
        Surface::OncePuncturedTorus => {
            let word = Word::gen(Gen::Y);
            let trace = rep.evaluate(&word)?.trace();
            Ok(NonconjugacyWitness {
                word,
                trace,
                varies_with: "beta",
            })
        }
        Surface::ClosedGenus2 => {
            let seed = parse_word("a x").unwrap_or_else(|_| unreachable!());
            let found = core::iter::once(seed)
                .chain((1..=max_search_len).flat_map(reduced_words))
                .find_map(|w| {
                    let trace = rep.evaluate(&w).ok()?.trace();
                    (!trace.is_constant()).then_some((w, trace))
                });
            let (word, trace) = found.ok_or(CertifyError::SearchExhausted(max_search_len))?;
            Ok(NonconjugacyWitness {
                word,
                trace,
                varies_with: "t",
            })
        }
    }
}

fn reduced_words(len: usize) -> Vec<Word> {
    let alphabet: Vec<Letter> = Gen::ALL
        .iter()
        .flat_map(|&g| [Letter::pos(g), Letter::neg(g)])
        .collect();
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<Letter>| {
                alphabet
                    .iter()
                    .filter(|&&l| prefix.last().map_or(true, |&p| p != l.inv()))
                    .map(|&l| {
                        let mut next = prefix.clone();
                        next.push(l);
                        next
                    })
                    .collect::<Vec<_>>()
            })
            .collect();
    }
    out.into_iter().map(Word::from_letters_unreduced).collect()
}

/// Curve class representatives of length at most `max_len` and their
/// nonzero powers within the same bound, sorted by base word then power.
pub fn suite_words(surface: Surface, max_len: usize) -> Vec<SuiteWord> {
    let mut bases: Vec<(Word, SuiteKind)> = Vec::new();
    for class in enumerate_scc_classes(max_len) {
        let kind = SuiteKind::from(&class.kind);
        if surface == Surface::ClosedGenus2 {
            bases.push((mirror_to_a(&class.canonical), kind));
        }
        bases.push((class.canonical, kind));
    }
    if surface == Surface::ClosedGenus2 && max_len >= 2 {
        // u v with u ∈ {a, b}, v ∈ {x^±1, y^±1}; (u v)⁻¹ is conjugate to u⁻¹ v⁻¹.
        for u in [Gen::A, Gen::B] {
            for v in [Gen::X, Gen::Y] {
                for inv in [false, true] {
                    let w = Word::new(vec![Letter::pos(u), Letter::new(v, inv)]);
                    bases.push((w, SuiteKind::Mixed));
                }
            }
        }
    }
    let mut out: Vec<SuiteWord> = bases
        .into_iter()
        .flat_map(|(base, kind)| {
            let max_k = (max_len / base.len()) as i64;
            (1..=max_k)
                .flat_map(|k| [k, -k])
                .map(move |power| SuiteWord {
                    word: base.pow(power),
                    base: base.clone(),
                    kind,
                    power,
                })
                .collect::<Vec<_>>()
        })
        .collect();
    out.sort_by(|p, q| {
        (p.base.len(), &p.base, p.power.abs(), p.power < 0)
            .cmp(&(q.base.len(), &q.base, q.power.abs(), q.power < 0))
    });
    out
}

/// Certifies every word from [`suite_words`] and attaches the kernel and
/// non-conjugacy witnesses.
pub fn run_theorem_suite(rep: &Representation, max_len: usize) -> Result<Report, CertifyError> {
    let results = suite_words(rep.surface(), max_len)
        .into_iter()
        .map(|item| {
            let certificate = certify_word(rep, &item.word)?;
            Ok(SccResult { item, certificate })
        })
        .collect::<Result<Vec<_>, CertifyError>>()?;
    Ok(Report {
        params: rep.params().clone(),
        surface: rep.surface(),
        max_len,
        kernel: kernel_witness(rep)?,
        nonconjugacy: nonconjugacy_witness(rep, 4)?,
        results,
    })
}
