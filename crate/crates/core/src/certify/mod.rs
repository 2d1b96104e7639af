//! Finite-order decisions for representation images.
//!
//! A finite-order element of PSL(2, ℝ) is elliptic with a rational rotation
//! angle, so its trace `2cos(πr)` is algebraic. The only rational values of
//! `2cos(πr)` are `0, ±1, ±2`. A trace that depends on the formal `t` is
//! transcendental at transcendental `t` and so certifies infinite order.

mod lemma;
mod suite;

pub use lemma::{
    random_a_part, random_b_part, verify_lemma_degrees, DegreeReport, LemmaConfig,
};
pub use suite::{
    accepts_as_witness, kernel_witness, kernel_witness_word, nonconjugacy_witness,
    run_theorem_suite, suite_words, KernelWitness, NonconjugacyWitness, Report, SccResult,
    SuiteKind, SuiteWord,
};

use alloc::format;
use alloc::string::String;
use core::fmt;

use crate::exact::{Mat2, Poly, Rational};
use crate::rep::{RepError, Representation, Surface};
use crate::words::{absorb_c_syllables, Side, SyllableForm, Word};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CertifyError {
    #[error("matrix determinant is not 1")]
    NotUnimodular,
    #[error("word is empty after free reduction")]
    EmptyWord,
    #[error("this check needs the closed genus-2 surface, got {0}")]
    NeedsGenus2(Surface),
    #[error("no word of length at most {0} has a trace depending on t")]
    SearchExhausted(usize),
    #[error(transparent)]
    Rep(#[from] RepError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum InfiniteReason {
    NonConstantTrace,
    Parabolic,
    Hyperbolic,
    /// Constant rational trace in `(−2, 2)` other than `0, ±1`.
    IrrationalRotation,
}

impl InfiniteReason {
    pub fn name(self) -> &'static str {
        match self {
            InfiniteReason::NonConstantTrace => "NonConstantTrace",
            InfiniteReason::Parabolic => "Parabolic",
            InfiniteReason::Hyperbolic => "Hyperbolic",
            InfiniteReason::IrrationalRotation => "IrrationalRotation",
        }
    }
}

/// Order of an element of PSL(2); `±I` both count as `Identity`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    Identity,
    FiniteOrder(u32),
    InfiniteOrder(InfiniteReason),
    Inconclusive(String),
}

impl Verdict {
    pub fn tag(&self) -> &'static str {
        match self {
            Verdict::Identity => "Identity",
            Verdict::FiniteOrder(_) => "FiniteOrder",
            Verdict::InfiniteOrder(_) => "InfiniteOrder",
            Verdict::Inconclusive(_) => "Inconclusive",
        }
    }

    /// Detail accompanying the tag, if any.
    pub fn reason(&self) -> Option<String> {
        match self {
            Verdict::Identity => None,
            Verdict::FiniteOrder(n) => Some(format!("order {n}")),
            Verdict::InfiniteOrder(r) => Some(r.name().into()),
            Verdict::Inconclusive(detail) => Some(detail.clone()),
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Verdict::InfiniteOrder(_))
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Identity => f.write_str("Identity"),
            Verdict::FiniteOrder(n) => write!(f, "FiniteOrder({n})"),
            Verdict::InfiniteOrder(r) => write!(f, "InfiniteOrder({})", r.name()),
            Verdict::Inconclusive(d) => write!(f, "Inconclusive({d})"),
        }
    }
}

/// Verdict for one word together with the data it was derived from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub word: Word,
    /// Cyclic syllable form after absorbing `C`-syllables.
    pub normal_form: SyllableForm,
    pub matrix: Mat2,
    pub trace: Poly,
    pub constant_trace: bool,
    pub verdict: Verdict,
}

/// Decides the order of `m` in PSL(2) from its trace.
pub fn order_certificate(m: &Mat2) -> Result<Verdict, CertifyError> {
    if m.det() != Poly::one() {
        return Err(CertifyError::NotUnimodular);
    }
    let tr = m.trace();
    let Some(c) = tr.as_constant() else {
        return Ok(Verdict::InfiniteOrder(InfiniteReason::NonConstantTrace));
    };
    let two = Rational::from(2);
    let mag = c.abs();
    Ok(if mag > two {
        Verdict::InfiniteOrder(InfiniteReason::Hyperbolic)
    } else if mag == two {
        if m.is_projective_identity() {
            Verdict::Identity
        } else {
            Verdict::InfiniteOrder(InfiniteReason::Parabolic)
        }
    } else if c.is_zero() {
        // m² − 0·m + I = 0, so m² = −I.
        Verdict::FiniteOrder(2)
    } else if mag.is_one() {
        // m² = c·m − I with c = ±1 gives m³ = −c·I.
        Verdict::FiniteOrder(3)
    } else {
        Verdict::InfiniteOrder(InfiniteReason::IrrationalRotation)
    })
}

/// Repeatedly absorbs `C`-syllables, re-normalizing cyclically after each
/// pass, until the cyclic syllable form is stable.
pub fn amalgam_normal_form(w: &Word) -> SyllableForm {
    let mut form = SyllableForm::cyclic(w);
    loop {
        let absorbed = absorb_c_syllables(&form);
        if absorbed == form {
            return form;
        }
        form = SyllableForm::cyclic(&absorbed.flatten());
    }
}

/// Checks the mixed-word hypotheses on a cyclic normal form: every
/// `A`-syllable image has a nonzero (2,1) entry and every `B`-syllable image
/// is hyperbolic. Returns a description of the first failure.
pub fn check_mixed_hypotheses(rep: &Representation, form: &SyllableForm) -> Result<Option<String>, CertifyError> {
    for (i, syl) in form.syllables.iter().enumerate() {
        let m = rep.evaluate(&syl.word)?;
        let ok = match syl.side {
            Side::A => !m.e21.is_zero(),
            Side::B => is_hyperbolic(&m),
        };
        if !ok {
            let what = match syl.side {
                Side::A => "has a zero (2,1) entry",
                Side::B => "is not hyperbolic",
            };
            return Ok(Some(format!("syllable {i} ({}) {what}", syl.word)));
        }
    }
    Ok(None)
}

/// `|tr| > 2` with a constant trace.
pub fn is_hyperbolic(m: &Mat2) -> bool {
    m.trace()
        .as_constant()
        .is_some_and(|c| c.abs() > Rational::from(2))
}

/// Certifies the order of `φ_t(w)`.
///
/// Single-side words are decided from their image directly. Mixed words are
/// first rewritten without `C`-syllables; if some syllable then violates the
/// hypotheses under which a mixed word's trace has full degree in `t`, the
/// verdict is `Inconclusive` rather than a claim.
pub fn certify_word(rep: &Representation, w: &Word) -> Result<Certificate, CertifyError> {
    if w.is_empty() {
        return Err(CertifyError::EmptyWord);
    }
    rep.check_scope(w)?;
    let normal_form = amalgam_normal_form(w);
    let matrix = rep.evaluate(w)?;
    let trace = matrix.trace();
    let mixed = normal_form.len() > 1;
    let verdict = match mixed.then(|| check_mixed_hypotheses(rep, &normal_form)) {
        Some(Err(e)) => return Err(e),
        Some(Ok(Some(detail))) => Verdict::Inconclusive(detail),
        _ => order_certificate(&matrix)?,
    };
    Ok(Certificate {
        word: w.clone(),
        normal_form,
        constant_trace: trace.is_constant(),
        trace,
        matrix,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::Params;
    use crate::words::parse_word;

    fn w(s: &str) -> Word {
        parse_word(s).unwrap()
    }

    fn genus2() -> Representation {
        Representation::new(Params::default(), Surface::ClosedGenus2).unwrap()
    }

    #[test]
    fn order_examples() {
        assert_eq!(
            order_certificate(&Mat2::from_i64s(1, -9, 0, 1)),
            Ok(Verdict::InfiniteOrder(InfiniteReason::Parabolic))
        );
        assert_eq!(
            order_certificate(&Mat2::from_i64s(0, -1, 1, 0)),
            Ok(Verdict::FiniteOrder(2))
        );
        assert_eq!(order_certificate(&Mat2::identity()), Ok(Verdict::Identity));
        assert_eq!(order_certificate(&-Mat2::identity()), Ok(Verdict::Identity));
        assert_eq!(
            order_certificate(&Mat2::from_i64s(1, -1, 1, 0)),
            Ok(Verdict::FiniteOrder(3))
        );
        assert_eq!(
            order_certificate(&Mat2::from_i64s(2, 0, 0, 2)),
            Err(CertifyError::NotUnimodular)
        );
        let m = genus2().evaluate(&w("a x")).unwrap();
        assert_eq!(
            order_certificate(&m),
            Ok(Verdict::InfiniteOrder(InfiniteReason::NonConstantTrace))
        );
    }

    #[test]
    fn irrational_rotation() {
        // Trace 1/2: elliptic, but 1/2 is not 2cos of a rational multiple of π.
        let m = Mat2::from_rationals(
            "1/2".parse().unwrap(),
            Rational::from(-1),
            Rational::one(),
            Rational::zero(),
        );
        assert_eq!(
            order_certificate(&m),
            Ok(Verdict::InfiniteOrder(InfiniteReason::IrrationalRotation))
        );
    }

    #[test]
    fn certify_examples() {
        let rep = genus2();
        let kernel = certify_word(&rep, &w("[[x,y],[x^2,y]]")).unwrap();
        assert_eq!(kernel.verdict, Verdict::Identity);

        let torus = Representation::new(Params::default(), Surface::OncePuncturedTorus).unwrap();
        let c = certify_word(&torus, &w("x^2 y")).unwrap();
        assert_eq!(c.verdict, Verdict::InfiniteOrder(InfiniteReason::Hyperbolic));
        assert_eq!(c.trace, Poly::constant("-145/12".parse().unwrap()));

        let c = certify_word(&rep, &w("a x")).unwrap();
        assert_eq!(c.verdict, Verdict::InfiniteOrder(InfiniteReason::NonConstantTrace));
        assert_eq!(c.normal_form.pair_count(), Some(1));
    }

    #[test]
    fn certify_errors() {
        let rep = genus2();
        assert_eq!(certify_word(&rep, &Word::empty()), Err(CertifyError::EmptyWord));
        let torus = Representation::new(Params::default(), Surface::OncePuncturedTorus).unwrap();
        assert!(matches!(
            certify_word(&torus, &w("a")),
            Err(CertifyError::Rep(RepError::OutOfScope { gen: 'a', .. }))
        ));
    }

    #[test]
    fn hypothesis_failures_are_inconclusive() {
        let rep = genus2();
        let c = certify_word(&rep, &w("a x y X")).unwrap();
        assert!(c.verdict.is_infinite());
        // [x, Y] is not a power of c but its image is parabolic.
        let c = certify_word(&rep, &w("a [x,Y]")).unwrap();
        assert!(matches!(c.verdict, Verdict::Inconclusive(ref d) if d.contains("not hyperbolic")));
    }

    #[test]
    fn absorption_reaches_single_side() {
        let rep = genus2();
        let c = certify_word(&rep, &w("[a,b] y")).unwrap();
        assert_eq!(c.normal_form.len(), 1);
        assert_eq!(c.verdict, Verdict::InfiniteOrder(InfiniteReason::Hyperbolic));
        let c = certify_word(&rep, &w("[a,b] [y,x]")).unwrap();
        assert!(c.normal_form.is_empty());
        assert_eq!(c.verdict, Verdict::Identity);
    }

    #[test]
    fn c_powers_are_parabolic() {
        let rep = genus2();
        for text in ["[x,y]", "[x,y]^2", "[a,b]^-3"] {
            let c = certify_word(&rep, &w(text)).unwrap();
            assert_eq!(
                c.verdict,
                Verdict::InfiniteOrder(InfiniteReason::Parabolic),
                "{text}"
            );
        }
    }
}
