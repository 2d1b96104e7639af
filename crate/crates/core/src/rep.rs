//! The representations: `φ_B` on `B = F(x, y)`, a Fuchsian `φ_A` on
//! `A = F(a, b)` whose boundary commutator matches `φ_B([x, y])`, the twist
//! by `λ_t = (1, t; 0, 1)`, and the combined `φ_t` on `A *_C B`.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::exact::{Mat2, Poly, Rational};
use crate::words::{Gen, Letter, Word};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ParamError {
    #[error("{name} = {value} is excluded (must avoid 0, 1, -1)")]
    Excluded { name: &'static str, value: Rational },
    #[error("beta * (alpha^2 - 1) vanishes; the boundary image would not be parabolic")]
    KappaZero,
    #[error(
        "alpha and beta are multiplicatively dependent: alpha^{s} * beta^{k} = 1"
    )]
    Dependent { s: i64, k: i64 },
    #[error("beta * (alpha^2 - 1) = {kappa} is positive; the explicit Fuchsian factor needs it negative")]
    KappaPositive { kappa: Rational },
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum RepError {
    #[error("generator {gen} is not part of the {surface} surface group")]
    OutOfScope { gen: char, surface: Surface },
    #[error(transparent)]
    Params(#[from] ParamError),
}

/// Validated parameters `(α, β)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Params {
    alpha: Rational,
    beta: Rational,
    kappa: Rational,
}

impl Params {
    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    pub fn beta(&self) -> &Rational {
        &self.beta
    }

    /// `β(α² − 1)`, the upper-right entry of `φ_B([x, y])`.
    pub fn kappa(&self) -> &Rational {
        &self.kappa
    }
}

impl Default for Params {
    /// `(α, β) = (2, −3)`.
    fn default() -> Self {
        validate_params(&Rational::from(2), &Rational::from(-3))
            .unwrap_or_else(|_| unreachable!("default parameters are valid"))
    }
}

/// Checks every constraint on `(α, β)` and computes `κ = β(α² − 1)`.
///
/// Checks run in this order: excluded values, `κ ≠ 0`, multiplicative
/// independence (with a witness `(s, k)`, `k > 0`, when dependent), `κ < 0`.
pub fn validate_params(alpha: &Rational, beta: &Rational) -> Result<Params, ParamError> {
    for (name, value) in [("alpha", alpha), ("beta", beta)] {
        if value.is_zero() || value.abs().is_one() {
            return Err(ParamError::Excluded {
                name,
                value: value.clone(),
            });
        }
    }
    let kappa = beta * &(&(alpha * alpha) - &Rational::one());
    if kappa.is_zero() {
        return Err(ParamError::KappaZero);
    }
    if let Some((s, k)) = dependence_witness(alpha, beta) {
        return Err(ParamError::Dependent { s, k });
    }
    if !kappa.is_negative() {
        return Err(ParamError::KappaPositive { kappa });
    }
    Ok(Params {
        alpha: alpha.clone(),
        beta: beta.clone(),
        kappa,
    })
}

/// Smallest `(s, k)` with `k > 0` and `α^s β^k = 1`, if one exists.
///
/// `|α|` and `|β|` are factored over a gcd-refined coprime base of their
/// numerators and denominators; the absolute values are dependent iff the two
/// exponent vectors are proportional. Signs can at worst force doubling.
pub fn dependence_witness(alpha: &Rational, beta: &Rational) -> Option<(i64, i64)> {
    let parts = [
        alpha.numer().magnitude().clone(),
        alpha.denom().magnitude().clone(),
        beta.numer().magnitude().clone(),
        beta.denom().magnitude().clone(),
    ];
    let base = coprime_base(&parts);
    let valuations: Vec<Vec<i64>> = parts.iter().map(|n| factor_over(n, &base)).collect();
    let va: Vec<i64> = (0..base.len())
        .map(|i| valuations[0][i] - valuations[1][i])
        .collect();
    let vb: Vec<i64> = (0..base.len())
        .map(|i| valuations[2][i] - valuations[3][i])
        .collect();

    let pivot = va.iter().position(|&e| e != 0)?;
    let g = va[pivot].gcd(&vb[pivot]);
    let (mut s, mut k) = (-vb[pivot] / g, va[pivot] / g);
    if k < 0 {
        s = -s;
        k = -k;
    }
    if k == 0 || va.iter().zip(&vb).any(|(&a, &b)| s * a + k * b != 0) {
        return None;
    }
    let odd_negatives = (alpha.is_negative() && s % 2 != 0) as u8 + (beta.is_negative() && k % 2 != 0) as u8;
    if odd_negatives % 2 == 1 {
        s *= 2;
        k *= 2;
    }
    Some((s, k))
}

/// Pairwise coprime integers `> 1` such that each input is a product of
/// powers of them.
fn coprime_base(inputs: &[BigUint]) -> Vec<BigUint> {
    let mut base: Vec<BigUint> = inputs.iter().filter(|n| !n.is_one()).cloned().collect();
    loop {
        base.sort();
        base.dedup();
        let mut split = None;
        'search: for i in 0..base.len() {
            for j in i + 1..base.len() {
                let g = base[i].gcd(&base[j]);
                if !g.is_one() {
                    split = Some((i, j, g));
                    break 'search;
                }
            }
        }
        let Some((i, j, g)) = split else {
            return base;
        };
        let u = &base[i] / &g;
        let v = &base[j] / &g;
        base.swap_remove(j);
        base.swap_remove(i);
        base.extend([u, v, g].into_iter().filter(|n| !n.is_one()));
    }
}

fn factor_over(n: &BigUint, base: &[BigUint]) -> Vec<i64> {
    let mut rest = n.clone();
    let exps = base
        .iter()
        .map(|p| {
            let mut e = 0;
            while !rest.is_zero() && (&rest % p).is_zero() {
                rest /= p;
                e += 1;
            }
            e
        })
        .collect();
    debug_assert!(rest.is_one());
    exps
}

/// Surfaces with explicit representations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Surface {
    /// `π₁ = B = F(x, y)`, boundary `[x, y]`.
    OncePuncturedTorus,
    /// `π₁ = A *_C B`, two punctured tori glued along `c`.
    ClosedGenus2,
}

impl Surface {
    pub fn generators(self) -> &'static [Gen] {
        match self {
            Surface::OncePuncturedTorus => &[Gen::X, Gen::Y],
            Surface::ClosedGenus2 => &[Gen::A, Gen::B, Gen::X, Gen::Y],
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Surface::OncePuncturedTorus => "punctured-torus",
            Surface::ClosedGenus2 => "genus2",
        }
    }
}

impl fmt::Display for Surface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("unknown surface {0:?} (expected genus2 or punctured-torus)")]
pub struct UnknownSurface(pub alloc::string::String);

impl FromStr for Surface {
    type Err = UnknownSurface;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "genus2" | "closed-genus2" => Ok(Surface::ClosedGenus2),
            "punctured-torus" | "torus" => Ok(Surface::OncePuncturedTorus),
            other => Err(UnknownSurface(other.into())),
        }
    }
}

/// `φ_B(x) = diag(α, α⁻¹)`, `φ_B(y) = (β, 1; 0, β⁻¹)`.
pub fn build_phi_b(p: &Params) -> BTreeMap<Gen, Mat2> {
    let recip = |r: &Rational| {
        r.recip()
            .unwrap_or_else(|_| unreachable!("validated parameters are nonzero"))
    };
    let x = Mat2::from_rationals(p.alpha.clone(), Rational::zero(), Rational::zero(), recip(&p.alpha));
    let y = Mat2::from_rationals(p.beta.clone(), Rational::one(), Rational::zero(), recip(&p.beta));
    BTreeMap::from([(Gen::X, x), (Gen::Y, y)])
}

/// `λ_t = (1, t; 0, 1)`, or its inverse `(1, −t; 0, 1)`.
pub fn lambda(inverse: bool) -> Mat2 {
    let t = if inverse { -Poly::t() } else { Poly::t() };
    Mat2::new(Poly::one(), t, Poly::zero(), Poly::one())
}

/// Punctured-torus generators of the Fuchsian seed group.
pub fn fuchsian_seed() -> (Mat2, Mat2) {
    (Mat2::from_i64s(1, 1, 1, 2), Mat2::from_i64s(1, -1, -1, 2))
}

/// `φ_A`: the seed pair conjugated by `P = D·S`, `S = (0, −1; 1, 0)`,
/// `D = diag(s, 1/s)` with `s² = −κ/6`, so that `φ_A([a, b]) = −(1, κ; 0, 1)`.
///
/// Conjugating by `P` maps `(m11, m12; m21, m22)` to
/// `(m22, −s² m21; −m12 / s², m11)`, so only `s²` enters and every entry stays
/// rational.
pub fn build_phi_a(p: &Params) -> Result<BTreeMap<Gen, Mat2>, ParamError> {
    if !p.kappa.is_negative() {
        return Err(ParamError::KappaPositive {
            kappa: p.kappa.clone(),
        });
    }
    let s2 = (-&p.kappa)
        .checked_div(&Rational::from(6))
        .unwrap_or_else(|_| unreachable!());
    let s2_inv = s2.recip().unwrap_or_else(|_| unreachable!("kappa is nonzero"));
    let conj = |m: &Mat2| {
        Mat2::new(
            m.e22.clone(),
            -&m.e21.scale(&s2),
            -&m.e12.scale(&s2_inv),
            m.e11.clone(),
        )
    };
    let (sa, sb) = fuchsian_seed();
    Ok(BTreeMap::from([(Gen::A, conj(&sa)), (Gen::B, conj(&sb))]))
}

/// The combined representation with entries in `ℚ[t]`.
///
/// On the closed genus-2 surface, `A`-generators map under `φ_A` and
/// `B`-generators under `λ_t φ_B λ_t⁻¹`. On the once-punctured torus the
/// images are `φ_B` itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Representation {
    params: Params,
    surface: Surface,
    images: BTreeMap<Gen, Mat2>,
    inverses: BTreeMap<Gen, Mat2>,
}

impl Representation {
    pub fn new(params: Params, surface: Surface) -> Result<Self, ParamError> {
        let mut images = BTreeMap::new();
        match surface {
            Surface::OncePuncturedTorus => images.extend(build_phi_b(&params)),
            Surface::ClosedGenus2 => {
                let (l, li) = (lambda(false), lambda(true));
                images.extend(
                    build_phi_b(&params)
                        .into_iter()
                        .map(|(g, m)| (g, &(&l * &m) * &li)),
                );
                images.extend(build_phi_a(&params)?);
            }
        }
        let inverses = images
            .iter()
            .map(|(&g, m)| {
                let inv = m
                    .inverse()
                    .unwrap_or_else(|_| unreachable!("generator images have determinant 1"));
                (g, inv)
            })
            .collect();
        Ok(Representation {
            params,
            surface,
            images,
            inverses,
        })
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn surface(&self) -> Surface {
        self.surface
    }

    pub fn images(&self) -> &BTreeMap<Gen, Mat2> {
        &self.images
    }

    pub fn image(&self, l: Letter) -> Result<&Mat2, RepError> {
        let table = if l.inverse { &self.inverses } else { &self.images };
        table.get(&l.gen).ok_or(RepError::OutOfScope {
            gen: l.gen.name(),
            surface: self.surface,
        })
    }

    pub fn check_scope(&self, w: &Word) -> Result<(), RepError> {
        w.letters().iter().try_for_each(|&l| self.image(l).map(|_| ()))
    }

    /// Exact image of `w`: the ordered product of letter images.
    pub fn evaluate(&self, w: &Word) -> Result<Mat2, RepError> {
        let mut letters = w.letters().iter();
        let Some(&first) = letters.next() else {
            return Ok(Mat2::identity());
        };
        let mut acc = self.image(first)?.clone();
        for &l in letters {
            acc = &acc * self.image(l)?;
        }
        Ok(acc)
    }
}

pub fn evaluate(rep: &Representation, w: &Word) -> Result<Mat2, RepError> {
    rep.evaluate(w)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::parse_word;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn w(s: &str) -> Word {
        parse_word(s).unwrap()
    }

    #[test]
    fn validate_examples() {
        let p = validate_params(&q("2"), &q("-3")).unwrap();
        assert_eq!(p.kappa(), &q("-9"));
        assert_eq!(
            validate_params(&q("2"), &q("4")),
            Err(ParamError::Dependent { s: -2, k: 1 })
        );
        assert!(matches!(
            validate_params(&q("2"), &q("1")),
            Err(ParamError::Excluded { name: "beta", .. })
        ));
        assert!(matches!(
            validate_params(&q("0"), &q("3")),
            Err(ParamError::Excluded { name: "alpha", .. })
        ));
        assert!(matches!(
            validate_params(&q("-1"), &q("3")),
            Err(ParamError::Excluded { name: "alpha", .. })
        ));
        // κ = 3·3 > 0.
        assert!(matches!(
            validate_params(&q("2"), &q("3")),
            Err(ParamError::KappaPositive { .. })
        ));
    }

    #[test]
    fn dependence_with_signs_and_fractions() {
        // (−2)^2 · (1/4)^1 = 1.
        assert_eq!(dependence_witness(&q("-2"), &q("1/4")), Some((2, 1)));
        // (−2)^1 · 2^k is never 1 for k = −1, so the witness doubles.
        assert_eq!(dependence_witness(&q("-2"), &q("2")), Some((-2, 2)));
        // 6 and 4/9: coprime base {2, 3}; vectors (1,1) and (2,−2) independent.
        assert_eq!(dependence_witness(&q("6"), &q("4/9")), None);
        // 6 = 2·3 and 36/1: 6^2 · 36^-1 = 1.
        assert_eq!(dependence_witness(&q("6"), &q("36")), Some((-2, 1)));
        assert_eq!(dependence_witness(&q("12/5"), &q("-3")), None);
        // (8/27)^2 · (−9/4)^3 = −1, so the witness doubles.
        assert_eq!(dependence_witness(&q("8/27"), &q("-9/4")), Some((4, 6)));
    }

    #[test]
    fn coprime_base_refines() {
        let base = coprime_base(&[12u32.into(), 18u32.into(), 1u32.into()]);
        for (i, a) in base.iter().enumerate() {
            for b in &base[i + 1..] {
                assert!(a.gcd(b).is_one());
            }
        }
        for n in [12u32, 18] {
            assert_eq!(
                base.iter()
                    .zip(factor_over(&n.into(), &base))
                    .fold(BigUint::one(), |acc, (p, e)| acc * p.pow(e as u32)),
                n.into()
            );
        }
    }

    #[test]
    fn phi_b_images() {
        let p = Params::default();
        let b = build_phi_b(&p);
        assert_eq!(b[&Gen::X], Mat2::from_rationals(q("2"), q("0"), q("0"), q("1/2")));
        assert_eq!(b[&Gen::Y], Mat2::from_rationals(q("-3"), q("1"), q("0"), q("-1/3")));
        for m in b.values() {
            assert_eq!(m.det(), Poly::one());
        }
        let rep = Representation::new(p, Surface::OncePuncturedTorus).unwrap();
        assert_eq!(rep.evaluate(&w("[x,y]")).unwrap(), Mat2::from_i64s(1, -9, 0, 1));
    }

    #[test]
    fn lambda_examples() {
        assert_eq!(
            lambda(false),
            Mat2::new(Poly::one(), Poly::t(), Poly::zero(), Poly::one())
        );
        assert_eq!(lambda(true).e12, -Poly::t());
        assert_eq!(&lambda(false) * &lambda(true), Mat2::identity());
    }

    #[test]
    fn phi_a_images() {
        let p = Params::default();
        let a = build_phi_a(&p).unwrap();
        let ma = &a[&Gen::A];
        assert_eq!(ma, &Mat2::from_rationals(q("2"), q("-3/2"), q("-2/3"), q("1")));
        assert_eq!(ma.det(), Poly::one());
        assert_eq!(ma.trace(), Poly::from_i64s(&[3]));

        let (sa, sb) = fuchsian_seed();
        let seed_comm = &(&(&sa * &sb) * &sa.inverse().unwrap()) * &sb.inverse().unwrap();
        assert_eq!(seed_comm, Mat2::from_i64s(-1, 0, -6, -1));

        let rep = Representation::new(p, Surface::ClosedGenus2).unwrap();
        let c_a = rep.evaluate(&w("[a,b]")).unwrap();
        assert_eq!(c_a, Mat2::from_i64s(-1, 9, 0, -1));
        assert!(c_a.projective_eq(&Mat2::from_i64s(1, -9, 0, 1)));
    }

    #[test]
    fn evaluate_examples() {
        let rep = Representation::new(Params::default(), Surface::ClosedGenus2).unwrap();
        let x = rep.evaluate(&w("x")).unwrap();
        assert_eq!(
            x,
            Mat2::new(
                Poly::constant(q("2")),
                Poly::from_coeffs(alloc::vec![q("0"), q("-3/2")]),
                Poly::zero(),
                Poly::constant(q("1/2")),
            )
        );
        assert_eq!(rep.evaluate(&w("[x,y]")).unwrap(), Mat2::from_i64s(1, -9, 0, 1));
        assert_eq!(
            rep.evaluate(&w("a x")).unwrap().trace(),
            Poly::from_coeffs(alloc::vec![q("9/2"), q("1")])
        );
        assert_eq!(rep.evaluate(&Word::empty()).unwrap(), Mat2::identity());
    }

    #[test]
    fn scope_is_enforced() {
        let rep = Representation::new(Params::default(), Surface::OncePuncturedTorus).unwrap();
        assert_eq!(
            rep.evaluate(&w("x a")),
            Err(RepError::OutOfScope {
                gen: 'a',
                surface: Surface::OncePuncturedTorus
            })
        );
    }

    #[test]
    fn surface_names_round_trip() {
        for s in [Surface::ClosedGenus2, Surface::OncePuncturedTorus] {
            assert_eq!(s.name().parse::<Surface>().unwrap(), s);
        }
        assert!("genus3".parse::<Surface>().is_err());
    }
}
