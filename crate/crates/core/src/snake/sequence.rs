//! Chains of composable homs with a per-position exactness certificate.

use crate::abgroup::{FpAbGroup, Hom};

/// A chain `terms[0] -> terms[1] -> ...` with `maps[i]: terms[i] ->
/// terms[i+1]`. The certificate records, for every interior position `i`,
/// whether `image(maps[i-1]) == kernel(maps[i])` as subgroups of `terms[i]`.
/// Boundary zeros are ordinary terms, so injectivity of the first real map
/// and surjectivity of the last are part of the certificate.
#[derive(Clone, Debug)]
pub struct ExactSequence {
    terms: Vec<FpAbGroup>,
    maps: Vec<Hom>,
    certificate: Vec<bool>,
}

impl ExactSequence {
    pub fn new(terms: Vec<FpAbGroup>, maps: Vec<Hom>) -> Self {
        assert_eq!(
            maps.len() + 1,
            terms.len(),
            "sequence: need exactly one map between consecutive terms"
        );
        for (i, m) in maps.iter().enumerate() {
            assert_eq!(m.source(), &terms[i], "sequence: map {i} source mismatch");
            assert_eq!(m.target(), &terms[i + 1], "sequence: map {i} target mismatch");
        }
        let certificate = (1..terms.len().saturating_sub(1))
            .map(|i| maps[i - 1].image() == maps[i].kernel_subgroup())
            .collect();
        ExactSequence {
            terms,
            maps,
            certificate,
        }
    }

    pub fn terms(&self) -> &[FpAbGroup] {
        &self.terms
    }

    pub fn maps(&self) -> &[Hom] {
        &self.maps
    }

    /// One verdict per interior position (index 0 is position 1 of the chain).
    pub fn certificate(&self) -> &[bool] {
        &self.certificate
    }

    pub fn is_exact(&self) -> bool {
        self.certificate.iter().all(|&b| b)
    }
}
