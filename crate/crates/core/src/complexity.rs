//! Information amounts of token strings relative to an environment, and
//! moment-style complexity measures of spectra, including the Shannon-entropy
//! reduction.
//!
//! All information quantities are in bits (base-2 logs). Counting never
//! materializes `valid_count^tokens`; everything is computed in log space.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::spectra::{CardinalScale, Spectrum};
use crate::sum::compensated_sum;

#[derive(Debug, Error, PartialEq)]
pub enum ComplexityError {
    #[error("token width must be at least 1")]
    ZeroWidth,
    #[error("valid token count must be at least 1")]
    ZeroCount,
    #[error("token {token:?} has length {got}, expected {want}")]
    TokenWidthMismatch { token: String, got: usize, want: usize },
    #[error("class size {class_size} outside 1..=|Phi(A)| (log2|Phi(A)| = {max_bits})")]
    ClassSizeOutOfRange { class_size: u128, max_bits: f64 },
    #[error("input string is ill-formed for environment {0:?}")]
    IllFormedInput(String),
    #[error("spectrum is not normalized (total mass {0})")]
    NotNormalized(f64),
    #[error("negative mass {mass} at index {index}")]
    NegativeMass { index: usize, mass: f64 },
}

/// A token alphabet: fixed token width plus either an explicit token set or a
/// bare valid-token count (counting-only use, where membership cannot be
/// checked).
#[derive(Debug, Clone)]
pub struct Environment {
    name: String,
    token_width: usize,
    valid_count: u64,
    tokens: Option<BTreeSet<String>>,
}

impl Environment {
    /// Environment with an explicit token set; the valid count is the set size.
    pub fn with_tokens(
        name: impl Into<String>,
        token_width: usize,
        tokens: impl IntoIterator<Item = String>,
    ) -> Result<Self, ComplexityError> {
        if token_width == 0 {
            return Err(ComplexityError::ZeroWidth);
        }
        let tokens: BTreeSet<String> = tokens.into_iter().collect();
        if tokens.is_empty() {
            return Err(ComplexityError::ZeroCount);
        }
        for t in &tokens {
            if t.chars().count() != token_width {
                return Err(ComplexityError::TokenWidthMismatch {
                    token: t.clone(),
                    got: t.chars().count(),
                    want: token_width,
                });
            }
        }
        let valid_count = tokens.len() as u64;
        Ok(Self { name: name.into(), token_width, valid_count, tokens: Some(tokens) })
    }

    /// Counting-only environment: tokens of the right width are taken as
    /// valid without a membership test.
    pub fn counting_only(
        name: impl Into<String>,
        token_width: usize,
        valid_count: u64,
    ) -> Result<Self, ComplexityError> {
        if token_width == 0 {
            return Err(ComplexityError::ZeroWidth);
        }
        if valid_count == 0 {
            return Err(ComplexityError::ZeroCount);
        }
        Ok(Self { name: name.into(), token_width, valid_count, tokens: None })
    }

    /// Single nucleotides: A, C, G, T (4 tokens of width 1).
    pub fn dna_base() -> Self {
        Self::with_tokens("dna-base", 1, "ACGT".chars().map(String::from)).unwrap()
    }

    /// Codons: all 64 nucleotide triples minus the three stop codons
    /// TAA, TAG, TGA, leaving the 61 coding codons.
    pub fn dna_codon() -> Self {
        let bases = ['A', 'C', 'G', 'T'];
        let stops = ["TAA", "TAG", "TGA"];
        let mut tokens = Vec::new();
        for a in bases {
            for b in bases {
                for c in bases {
                    let codon: String = [a, b, c].iter().collect();
                    if !stops.contains(&codon.as_str()) {
                        tokens.push(codon);
                    }
                }
            }
        }
        Self::with_tokens("dna-codon", 3, tokens).unwrap()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn token_width(&self) -> usize {
        self.token_width
    }

    pub fn valid_count(&self) -> u64 {
        self.valid_count
    }

    pub fn is_valid_token(&self, token: &str) -> bool {
        if token.chars().count() != self.token_width {
            return false;
        }
        match &self.tokens {
            Some(set) => set.contains(token),
            None => true,
        }
    }

    /// Bits per well-formed token.
    pub fn bits_per_token(&self) -> f64 {
        (self.valid_count as f64).log2()
    }
}

/// A string split into environment tokens, or the ill-formed marker. An
/// ill-formed string carries no information (the empty-string convention).
#[derive(Debug, Clone, PartialEq)]
pub struct WellFormedObject {
    source: String,
    tokens: Option<Vec<String>>,
}

impl WellFormedObject {
    pub fn tokenize(text: &str, env: &Environment) -> Self {
        let chars: Vec<char> = text.chars().collect();
        if !chars.len().is_multiple_of(env.token_width()) {
            return Self { source: text.to_string(), tokens: None };
        }
        let mut tokens = Vec::with_capacity(chars.len() / env.token_width());
        for chunk in chars.chunks(env.token_width()) {
            let token: String = chunk.iter().collect();
            if !env.is_valid_token(&token) {
                return Self { source: text.to_string(), tokens: None };
            }
            tokens.push(token);
        }
        Self { source: text.to_string(), tokens: Some(tokens) }
    }

    pub fn source(&self) -> &str {
        &self.source
    }

    pub fn is_ill_formed(&self) -> bool {
        self.tokens.is_none()
    }

    pub fn token_count(&self) -> usize {
        self.tokens.as_ref().map_or(0, Vec::len)
    }
}

/// `log2 |Phi(A)|` for a string: token count times bits per token. Ill-formed
/// strings yield `(0.0, true)` rather than an error.
pub fn string_information(text: &str, env: &Environment) -> (f64, bool) {
    let obj = WellFormedObject::tokenize(text, env);
    if obj.is_ill_formed() {
        (0.0, true)
    } else {
        (obj.token_count() as f64 * env.bits_per_token(), false)
    }
}

/// `log2(|Phi(A)| / class_size)`: the information left after interpreting the
/// string as a member of a class of `class_size` equally possible strings.
pub fn interpreted_information(
    text: &str,
    env: &Environment,
    class_size: u128,
) -> Result<f64, ComplexityError> {
    let (bits, ill_formed) = string_information(text, env);
    if ill_formed {
        return Err(ComplexityError::IllFormedInput(env.name().to_string()));
    }
    if class_size < 1 {
        return Err(ComplexityError::ClassSizeOutOfRange { class_size, max_bits: bits });
    }
    let class_bits = (class_size as f64).log2();
    // |Phi(A)| is never materialized; compare in log space with a one-ulp pad.
    if class_bits > bits * (1.0 + 1e-12) + 1e-12 {
        return Err(ComplexityError::ClassSizeOutOfRange { class_size, max_bits: bits });
    }
    Ok(bits - class_bits)
}

/// N-th raw moment `sum_i s_i^order * mass_i`. Order 1 is the basic
/// complexity (an expectation when the spectrum is a distribution).
pub fn origin_complexity(sp: &Spectrum, order: u32) -> f64 {
    compensated_sum(
        sp.scale().values().iter().zip(sp.mass()).map(|(s, m)| s.powi(order as i32) * m),
    )
}

/// N-th moment about `c = origin_complexity(sp, 1)`:
/// `sum_i (s_i - c)^order * mass_i`.
///
/// The centering constant is the raw first moment even when the spectrum is
/// unnormalized, so for total mass != 1 this is not the textbook central
/// moment.
pub fn central_complexity(sp: &Spectrum, order: u32) -> f64 {
    let c = origin_complexity(sp, 1);
    compensated_sum(
        sp.scale().values().iter().zip(sp.mass()).map(|(s, m)| (s - c).powi(order as i32) * m),
    )
}

/// Shannon entropy `-sum p log2 p` of a normalized nonnegative spectrum,
/// with `0 log 0 = 0`.
pub fn shannon_entropy(sp: &Spectrum) -> Result<f64, ComplexityError> {
    check_distribution(sp)?;
    Ok(compensated_sum(
        sp.mass().iter().filter(|p| **p > 0.0).map(|p| -p * p.log2()),
    ))
}

/// The same entropy computed as a first-order complexity: move each
/// probability's `-log2 p` onto the scale axis and take the raw first moment.
/// Equal probabilities merge into one scale point with their masses summed.
pub fn shannon_entropy_as_complexity(sp: &Spectrum) -> Result<f64, ComplexityError> {
    check_distribution(sp)?;
    let mut points: Vec<(f64, f64)> =
        sp.mass().iter().filter(|p| **p > 0.0).map(|p| (-p.log2(), *p)).collect();
    points.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    let mut values = Vec::new();
    let mut masses: Vec<f64> = Vec::new();
    for (v, p) in points {
        if values.last() == Some(&v) {
            *masses.last_mut().unwrap() += p;
        } else {
            values.push(v);
            masses.push(p);
        }
    }
    let transformed = Spectrum::new(
        CardinalScale::new(values).expect("sorted deduplicated values are strictly increasing"),
        masses,
    )
    .expect("lengths match by construction");
    Ok(origin_complexity(&transformed, 1))
}

fn check_distribution(sp: &Spectrum) -> Result<(), ComplexityError> {
    for (i, p) in sp.mass().iter().enumerate() {
        if *p < 0.0 {
            return Err(ComplexityError::NegativeMass { index: i, mass: *p });
        }
    }
    let total = sp.total_mass();
    if (total - 1.0).abs() > 1e-9 {
        return Err(ComplexityError::NotNormalized(total));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(scale: &[f64], mass: &[f64]) -> Spectrum {
        Spectrum::new(CardinalScale::new(scale.to_vec()).unwrap(), mass.to_vec()).unwrap()
    }

    #[test]
    fn dna_environments() {
        let base = Environment::dna_base();
        assert_eq!(base.valid_count(), 4);
        let codon = Environment::dna_codon();
        assert_eq!(codon.valid_count(), 61);
        assert!(codon.is_valid_token("GCA"));
        assert!(!codon.is_valid_token("TAA"));
    }

    #[test]
    fn string_information_examples() {
        let (bits, ill) = string_information("GCAGCG", &Environment::dna_base());
        assert_eq!(bits, 12.0);
        assert!(!ill);

        let (bits, ill) = string_information("GCAGCG", &Environment::dna_codon());
        assert!((bits - 2.0 * 61_f64.log2()).abs() < 1e-12);
        assert!((bits - 11.861476).abs() < 1e-5);
        assert!(!ill);

        let (bits, ill) = string_information("GCX", &Environment::dna_base());
        assert_eq!(bits, 0.0);
        assert!(ill);

        // length not a multiple of the token width
        let (bits, ill) = string_information("GCAG", &Environment::dna_codon());
        assert_eq!(bits, 0.0);
        assert!(ill);

        // empty string is well-formed with zero information
        let (bits, ill) = string_information("", &Environment::dna_base());
        assert_eq!(bits, 0.0);
        assert!(!ill);
    }

    #[test]
    fn interpreted_information_examples() {
        let env = Environment::dna_base();
        let (bits, _) = string_information("GCAGCG", &env);
        assert_eq!(interpreted_information("GCAGCG", &env, 1).unwrap(), bits);
        assert_eq!(interpreted_information("GCAGCG", &env, 1 << 12).unwrap(), 0.0);

        let two = Environment::with_tokens("ab", 1, ["A".into(), "B".into()]).unwrap();
        assert_eq!(interpreted_information("AB", &two, 2).unwrap(), 1.0);

        assert!(matches!(
            interpreted_information("AB", &two, 5),
            Err(ComplexityError::ClassSizeOutOfRange { .. })
        ));
        assert!(matches!(
            interpreted_information("AB", &two, 0),
            Err(ComplexityError::ClassSizeOutOfRange { .. })
        ));
        assert!(matches!(
            interpreted_information("AX", &two, 1),
            Err(ComplexityError::IllFormedInput(_))
        ));
    }

    #[test]
    fn origin_complexity_examples() {
        let s = sp(&[1.0, 2.0, 3.0], &[0.2, 0.3, 0.5]);
        assert_eq!(origin_complexity(&s, 0), s.total_mass());
        assert!((origin_complexity(&s, 2) - 5.9).abs() < 1e-12);

        let half = sp(&[0.0, 1.0], &[0.5, 0.5]);
        assert_eq!(origin_complexity(&half, 1), 0.5);
    }

    #[test]
    fn central_complexity_examples() {
        let half = sp(&[0.0, 1.0], &[0.5, 0.5]);
        assert_eq!(central_complexity(&half, 0), 1.0);
        assert!(central_complexity(&half, 1).abs() < 1e-12);
        assert!((central_complexity(&half, 2) - 0.25).abs() < 1e-12);
    }

    #[test]
    fn shannon_entropy_examples() {
        let uniform = sp(&[0.0, 1.0, 2.0, 3.0], &[0.25; 4]);
        assert_eq!(shannon_entropy(&uniform).unwrap(), 2.0);
        assert_eq!(shannon_entropy_as_complexity(&uniform).unwrap(), 2.0);

        let det = sp(&[0.0, 1.0], &[1.0, 0.0]);
        assert_eq!(shannon_entropy(&det).unwrap(), 0.0);

        let skew = sp(&[0.0, 1.0], &[0.25, 0.75]);
        let h = shannon_entropy(&skew).unwrap();
        assert!((h - 0.811278).abs() < 1e-6);
        assert!((h - shannon_entropy_as_complexity(&skew).unwrap()).abs() < 1e-12);

        assert!(matches!(
            shannon_entropy(&sp(&[0.0, 1.0], &[0.5, 0.4])),
            Err(ComplexityError::NotNormalized(_))
        ));
        assert!(matches!(
            shannon_entropy(&sp(&[0.0, 1.0], &[1.5, -0.5])),
            Err(ComplexityError::NegativeMass { .. })
        ));
    }

    #[test]
    fn string_information_additive_over_concatenation() {
        let env = Environment::dna_codon();
        let (x, _) = string_information("GCAGCG", &env);
        let (y, _) = string_information("ATGCCC", &env);
        let (xy, _) = string_information("GCAGCGATGCCC", &env);
        assert!((xy - (x + y)).abs() < 1e-12);
    }

    #[test]
    fn interpreted_information_antitone_in_class_size() {
        let env = Environment::dna_base();
        let mut prev = f64::INFINITY;
        for class_size in [1u128, 2, 4, 16, 256, 4096] {
            let v = interpreted_information("GCAGCG", &env, class_size).unwrap();
            assert!(v < prev);
            prev = v;
        }
    }
}
