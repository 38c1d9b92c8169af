//! Proptest strategies and brute-force oracles shared by the unit tests.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

use crate::omega::{OmegaMonomial, OmegaUElement};
use crate::plane::PlaneElement;
use crate::scalar::{GaussianRational, QScalar};

pub fn arb_gaussian() -> impl Strategy<Value = GaussianRational> {
    (-4i64..=4, 1i64..=3, -4i64..=4, 1i64..=3)
        .prop_map(|(a, b, c, d)| GaussianRational::complex((a, b), (c, d)))
}

/// Small Gaussian coefficient times `q^e`, `e` in `[-2, 2]`.
pub fn arb_coeff() -> impl Strategy<Value = QScalar> {
    (arb_gaussian(), -2i64..=2).prop_map(|(c, e)| QScalar::monomial(c, e))
}

/// Sparse plane elements with `k + l <= max_deg` and at most `max_terms` terms.
pub fn arb_plane(max_deg: u32, max_terms: usize) -> impl Strategy<Value = PlaneElement> {
    prop::collection::vec((0..=max_deg, 0..=max_deg, arb_coeff()), 0..=max_terms).prop_map(
        move |ts| {
            PlaneElement::from_terms(
                ts.into_iter()
                    .filter(|(k, l, _)| k + l <= max_deg)
                    .map(|(k, l, c)| ((k, l), c)),
            )
        },
    )
}

pub fn arb_omega(max_deg: u32, max_terms: usize) -> impl Strategy<Value = OmegaUElement> {
    let mono = (0u8..3, 1..=max_deg.max(1), 0..=max_deg).prop_map(|(kind, i, j)| match kind {
        0 => OmegaMonomial::U(j),
        1 => OmegaMonomial::X(i, j),
        _ => OmegaMonomial::Y(i, j),
    });
    prop::collection::vec((mono, arb_coeff()), 0..=max_terms)
        .prop_map(OmegaUElement::from_terms)
}

/// Normal form of a word in the letters `x`, `y`, obtained by bubbling every
/// `x` to the right past `y` with `xy -> q yx`. Independent of `monomial_mul`.
pub fn normalize_word(word: &str) -> PlaneElement {
    let mut letters: Vec<char> = word.chars().filter(|c| !c.is_whitespace()).collect();
    let mut swaps = 0i64;
    loop {
        let mut changed = false;
        for i in 0..letters.len().saturating_sub(1) {
            if letters[i] == 'x' && letters[i + 1] == 'y' {
                letters.swap(i, i + 1);
                swaps += 1;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    let k = letters.iter().filter(|&&c| c == 'y').count() as u32;
    let l = letters.iter().filter(|&&c| c == 'x').count() as u32;
    assert_eq!((k + l) as usize, letters.len(), "word over x, y only");
    PlaneElement::monomial(QScalar::q_pow(BigInt::from(swaps)), k, l)
}

#[test]
fn normalize_word_basics() {
    assert_eq!(normalize_word("xy"), PlaneElement::monomial(QScalar::q(), 1, 1));
    assert_eq!(normalize_word(""), PlaneElement::monomial(QScalar::one(), 0, 0));
    assert!(!normalize_word("yyx").is_zero());
}
